//! Infusion slides one tableau through another, recording the vacated
//! cells; applying it to its own output restores the original pair.

use kjdt::jdt::infusion;
use kjdt::shapes::{SkewShape, StrictPartition};
use kjdt::tableaux::{enumerate_increasing, superstandard};

fn main() -> Result<(), kjdt::Error> {
    let n = 3;
    let lambda = StrictPartition::new(vec![2, 1])?;
    let nu = StrictPartition::new(vec![3, 2, 1])?;
    let inner = superstandard(&lambda, n)?;
    let shape = SkewShape::shifted(n, &lambda, &nu)?;
    let outer = enumerate_increasing(&shape, 3, false)
        .next()
        .expect("a packed filling exists");

    println!("inner tableau (the order being consumed):");
    print!("{}", inner.render_text());
    println!("\nouter tableau sliding through it:");
    print!("{}", outer.render_text());

    let (rectified, record) = infusion(&inner, &outer)?;
    println!("\nfirst component (the rectified outer tableau):");
    print!("{}", rectified.render_text());
    println!("\nsecond component (vacated cells, labeled by step):");
    print!("{}", record.render_text());

    let (back_inner, back_outer) = infusion(&rectified, &record)?;
    assert_eq!(back_inner, inner);
    assert_eq!(back_outer, outer);
    println!("\napplying infusion again returns the original pair.");
    Ok(())
}
