//! Structure constants of the structure-sheaf basis: the signed count of
//! skew fillings rectifying to a superstandard tableau, and the ring
//! product they define.

use kjdt::ring::{c_witnesses, CoeffTable, RingElement};
use kjdt::StrictPartition;

fn main() -> Result<(), kjdt::Error> {
    let n = 5;
    let lambda = StrictPartition::new(vec![3, 1])?;
    let nu = StrictPartition::new(vec![5, 3, 1])?;

    let witnesses = c_witnesses(n, &lambda, &lambda, &nu)?;
    println!(
        "fillings of (5,3,1)/(3,1) rectifying to the superstandard (3,1): {}",
        witnesses.len()
    );
    for w in &witnesses {
        println!();
        print!("{}", w.render_text());
    }
    let sign = if (nu.size() - 2 * lambda.size()) % 2 == 0 { 1 } else { -1 };
    println!(
        "\ncoefficient on (5,3,1) in [3,1]*[3,1]: {}",
        sign * witnesses.len() as i64
    );

    // The same number through the ring product.
    let mut table = CoeffTable::new(n);
    let class = RingElement::basis(&lambda);
    let square = table.product(&class, &class)?;
    println!("\n[3,1] * [3,1] expands as:");
    for (shape, coeff) in square.iter() {
        println!("  {:>2} on {}", coeff, shape);
    }
    Ok(())
}
