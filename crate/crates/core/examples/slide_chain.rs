//! A single K-jdt slide, frame by frame: bullets are placed on inner
//! corners and switched past the entries value by value.

use kjdt::jdt::kjdt_traced;
use kjdt::shapes::{Cell, SkewShape, StrictPartition};
use kjdt::tableaux::{IncreasingTableau, Label};

fn main() -> Result<(), kjdt::Error> {
    let inner = StrictPartition::new(vec![3, 1])?;
    let outer = StrictPartition::new(vec![4, 3, 1])?;
    let shape = SkewShape::shifted(4, &inner, &outer)?;
    let tableau = IncreasingTableau::from_cells(
        shape,
        &[
            (Cell::new(1, 4), Label::Num(1)),
            (Cell::new(2, 3), Label::Num(1)),
            (Cell::new(2, 4), Label::Num(3)),
            (Cell::new(3, 3), Label::Num(2)),
        ],
    )?;
    println!("skew tableau of shape (4,3,1)/(3,1):");
    print!("{}", tableau.render_text());

    let corners = [Cell::new(1, 3), Cell::new(2, 2)];
    println!("\nsliding through corners (1,3) and (2,2):");
    let (result, trace) = kjdt_traced(&tableau, &corners)?;
    for (i, frame) in trace.frames().iter().enumerate() {
        println!("\nframe {} ({}):", i, if i == 0 { "bullets placed".into() } else { format!("after switching value {}", trace.steps[i - 1].value) });
        print!("{}", frame.render_text());
    }
    println!("\nresult on shape (4,2)/(2):");
    print!("{}", result.render_text());
    Ok(())
}
