//! Run the verification battery programmatically at a small rank.

use kjdt::ring::{verify_all, VerifyOpts};

fn main() -> Result<(), kjdt::Error> {
    let n = 3;
    let opts = VerifyOpts::default();
    for report in verify_all(n, &opts)? {
        println!(
            "{} {} cases={}",
            if report.pass { "PASS" } else { "FAIL" },
            report.target,
            report.cases
        );
        for c in &report.counterexamples {
            println!("  counterexample: {}", c);
        }
    }
    Ok(())
}
