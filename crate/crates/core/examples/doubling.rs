//! Doubling into the rectangle: the staircase copy holds 2k-1, the
//! transposed copy 2k, and rectification commutes with the construction.
//! The first row of any rectification is the longest-increasing-subsequence
//! statistic of the rectangle tableau.

use kjdt::jdt::{canonical_order, double_order, lis, rectify};
use kjdt::shapes::{Cell, SkewShape, StrictPartition};
use kjdt::tableaux::{double_tableau, IncreasingTableau, Label};

fn main() -> Result<(), kjdt::Error> {
    let n = 5;
    let inner = StrictPartition::new(vec![3, 1])?;
    let outer = StrictPartition::new(vec![4, 3, 1])?;
    let shape = SkewShape::shifted(n, &inner, &outer)?;
    let t = IncreasingTableau::from_cells(
        shape,
        &[
            (Cell::new(1, 4), Label::Num(1)),
            (Cell::new(2, 3), Label::Num(1)),
            (Cell::new(2, 4), Label::Num(3)),
            (Cell::new(3, 3), Label::Num(2)),
        ],
    )?;
    println!("shifted tableau:");
    print!("{}", t.render_text());

    let doubled = double_tableau(&t)?;
    println!("\ndoubled into the {}x{} rectangle:", n + 1, n);
    print!("{}", doubled.render_text());

    let order = canonical_order(&inner, n)?;
    let direct = double_tableau(&rectify(&t, &order)?)?;
    let via = rectify(&doubled, &double_order(&order)?)?;
    assert_eq!(direct, via);
    println!("\nrectify-then-double equals double-then-rectify:");
    print!("{}", via.render_text());

    println!(
        "\nreading statistic of the doubled tableau: {} (= first-row length {})",
        lis(&doubled)?,
        via.shape().outer_part(1)
    );
    Ok(())
}
