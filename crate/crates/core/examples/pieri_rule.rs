//! The Pieri case: row shapes multiply by signed counts of KOG tableaux on
//! ribbons, and those tableaux are exactly the t-Pieri fillings.

use kjdt::pieri::{is_t_pieri, kog_fillings, pieri_coeff};
use kjdt::ring::CoeffTable;
use kjdt::StrictPartition;

fn main() -> Result<(), kjdt::Error> {
    let n = 4;
    let mut table = CoeffTable::new(n);
    let shapes = StrictPartition::all_fitting(n);

    println!("nonzero row products at rank {} (slide rule == KOG rule):", n);
    for lambda in &shapes {
        for t in 1..=n {
            let row = StrictPartition::new(vec![t])?;
            for nu in &shapes {
                let via_slides = table.c(lambda, &row, nu)?;
                let via_kog = pieri_coeff(n, lambda, t, nu)?;
                assert_eq!(via_slides, via_kog);
                if via_slides != 0 && lambda.size() >= 3 {
                    println!("  C({}, row {}) -> {} = {}", lambda, t, nu, via_slides);
                }
            }
        }
    }

    let lambda = StrictPartition::new(vec![3, 1])?;
    let nu = StrictPartition::new(vec![4, 3])?;
    let witnesses = kog_fillings(n, &lambda, 2, &nu)?;
    println!("\nKOG tableaux of the ribbon (4,3)/(3,1) with labels 1..2:");
    for w in &witnesses {
        println!();
        print!("{}", w.render_text());
        assert!(is_t_pieri(w, 2).is_some());
    }
    println!("\neach is a 2-Pieri filling; coefficient {}", pieri_coeff(n, &lambda, 2, &nu)?);
    Ok(())
}
