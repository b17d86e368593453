//! Structure constants of the boundary ideal-sheaf basis: X-decorated
//! fillings, and the independent basis-change route that must agree.

use kjdt::ring::{e_via_basis_change, e_witnesses, CoeffTable};
use kjdt::StrictPartition;

fn main() -> Result<(), kjdt::Error> {
    let n = 3;
    let lambda = StrictPartition::new(vec![2])?;
    let mu = StrictPartition::new(vec![1])?;
    let nu = StrictPartition::new(vec![3, 1])?;

    let witnesses = e_witnesses(n, &lambda, &mu, &nu)?;
    println!("decorated fillings of (3,1)/(2) rectifying to the single box:");
    for w in &witnesses {
        println!();
        print!("{}", w.render_text());
    }
    let value = -(witnesses.len() as i64);
    println!("\ndirect count gives E = {}", value);

    let mut table = CoeffTable::new(n);
    let oracle = e_via_basis_change(&mut table, &lambda, &mu, &nu)?;
    println!("basis change gives  E = {}", oracle);
    assert_eq!(value, oracle);
    Ok(())
}
