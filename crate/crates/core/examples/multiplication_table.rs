//! Build the full coefficient table of a rank, print the nonzero products,
//! and persist/reload it through the sorted cache format.

use kjdt::ring::CoeffTable;

fn main() -> Result<(), kjdt::Error> {
    let n = 3;
    let mut table = CoeffTable::new(n);
    table.fill_all()?;

    println!("nonzero structure constants at rank {}:", n);
    let shapes = table.shapes().to_vec();
    for lambda in &shapes {
        for mu in &shapes {
            for nu in &shapes {
                let c = table.c(lambda, mu, nu)?;
                if c != 0 && !lambda.is_empty() && !mu.is_empty() {
                    println!("  C({}, {}) -> {} = {}", lambda, mu, nu, c);
                }
            }
        }
    }

    let dir = std::env::temp_dir().join("kjdt-example-cache");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join(format!("coeff-n{}.txt", n));
    table.save(&path)?;
    let reloaded = CoeffTable::load(n, &path)?;
    println!(
        "\nsaved and reloaded {} shapes' table from {}",
        reloaded.shapes().len(),
        path.display()
    );
    Ok(())
}
