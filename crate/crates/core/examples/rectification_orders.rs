//! Encoded rectification orders: the greedy all-corners order, the full
//! enumeration of executable encodings, and order independence for fillings
//! that reach a superstandard tableau.

use kjdt::jdt::{all_orders, canonical_order, rectify};
use kjdt::shapes::{SkewShape, StrictPartition};
use kjdt::tableaux::{enumerate_increasing, is_superstandard};

fn main() -> Result<(), kjdt::Error> {
    let n = 4;
    let lambda = StrictPartition::new(vec![3, 1])?;

    println!("greedy order for inner shape (3,1):");
    print!("{}", canonical_order(&lambda, n)?.tableau().render_text());

    let orders = all_orders(&lambda, n, false)?;
    println!("\nall {} executable orders:", orders.len());
    for o in &orders {
        println!();
        print!("{}", o.tableau().render_text());
    }

    // Every filling of (4,3,2)/(3,1) that rectifies to a superstandard
    // tableau reaches the same one under every order.
    let nu = StrictPartition::new(vec![4, 3, 2])?;
    let shape = SkewShape::shifted(n, &lambda, &nu)?;
    let mut shown = 0;
    for m in 1..=shape.num_cells() as u8 {
        for t in enumerate_increasing(&shape, m, false) {
            let results: Vec<_> = orders
                .iter()
                .map(|o| rectify(&t, o))
                .collect::<Result<_, _>>()?;
            if is_superstandard(&results[0]) {
                assert!(results.iter().all(|r| r == &results[0]));
                if shown < 2 {
                    println!("\nfilling of (4,3,2)/(3,1):");
                    print!("{}", t.render_text());
                    println!("rectifies under all {} orders to:", orders.len());
                    print!("{}", results[0].render_text());
                    shown += 1;
                }
            }
        }
    }
    Ok(())
}
