//! t-Pieri fillings and the KOG Pieri rule.
//!
//! A t-Pieri filling uses all of 1..t and splits into a vertical strip
//! (entries weakly increasing from northeast to southwest) below-or-equal a
//! horizontal strip (weakly increasing from southwest to northeast). On
//! ribbon shapes these are exactly the KOG tableaux, whose signed count is
//! the coefficient of the Pieri rule.

use crate::shapes::{Cell, SkewShape, StrictPartition};
use crate::tableaux::{enumerate_increasing, IncreasingTableau};
use crate::{Error, Result};

/// Witness for a t-Pieri filling: the split value `k` and the two strips.
/// Labels 1..k form the vertical strip, k+1..t the horizontal strip.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PieriDecomposition {
    pub split: u8,
    pub vertical: Vec<Cell>,
    pub horizontal: Vec<Cell>,
}

/// Check that `cells` (with labels) form a vertical strip with entries
/// weakly increasing from northeast to southwest: no two boxes share a row,
/// every box is weakly west of the boxes above it, labels weakly increase
/// going down, and equal labels sit in different columns.
fn is_vertical_strip(cells: &[(Cell, u8)]) -> bool {
    let mut sorted = cells.to_vec();
    sorted.sort_by_key(|&(c, _)| (c.row, c.col));
    for w in sorted.windows(2) {
        let (a, va) = w[0];
        let (b, vb) = w[1];
        if a.row == b.row {
            return false;
        }
        if b.col > a.col {
            return false;
        }
        if vb < va {
            return false;
        }
        if vb == va && b.col == a.col {
            return false;
        }
    }
    true
}

/// Horizontal strip with entries weakly increasing from southwest to
/// northeast: no two boxes share a column, every box is weakly north of the
/// boxes west of it, labels weakly increase going east, equal labels in
/// different rows.
fn is_horizontal_strip(cells: &[(Cell, u8)]) -> bool {
    let mut sorted = cells.to_vec();
    sorted.sort_by_key(|&(c, _)| (c.col, c.row));
    for w in sorted.windows(2) {
        let (a, va) = w[0];
        let (b, vb) = w[1];
        if a.col == b.col {
            return false;
        }
        if b.row > a.row {
            return false;
        }
        if vb < va {
            return false;
        }
        if vb == va && b.row == a.row {
            return false;
        }
    }
    true
}

/// Bullets must run southwest to northeast with no two in a row or column.
fn bullets_positioned(bullets: &[Cell]) -> bool {
    let mut sorted = bullets.to_vec();
    sorted.sort_by_key(|&c| c.col);
    for w in sorted.windows(2) {
        if w[0].col == w[1].col || w[1].row >= w[0].row {
            return false;
        }
    }
    true
}

/// Core split search over entries that may include bullets (`None`).
fn pieri_split(entries: &[(Cell, Option<u8>)], t_val: u8) -> Option<PieriDecomposition> {
    let bullets: Vec<Cell> = entries.iter().filter(|(_, v)| v.is_none()).map(|&(c, _)| c).collect();
    if !bullets_positioned(&bullets) {
        return None;
    }
    let numbered: Vec<(Cell, u8)> = entries
        .iter()
        .filter_map(|&(c, v)| v.map(|k| (c, k)))
        .collect();
    // All of 1..t must be used.
    let mut present = vec![false; t_val as usize + 1];
    for &(_, v) in &numbered {
        if v == 0 || v > t_val {
            return None;
        }
        present[v as usize] = true;
    }
    if !present[1..].iter().all(|&p| p) {
        return None;
    }
    for k in 0..=t_val {
        let vertical: Vec<(Cell, u8)> =
            numbered.iter().copied().filter(|&(_, v)| v <= k).collect();
        let horizontal: Vec<(Cell, u8)> =
            numbered.iter().copied().filter(|&(_, v)| v > k).collect();
        if is_vertical_strip(&vertical) && is_horizontal_strip(&horizontal) {
            return Some(PieriDecomposition {
                split: k,
                vertical: vertical.into_iter().map(|(c, _)| c).collect(),
                horizontal: horizontal.into_iter().map(|(c, _)| c).collect(),
            });
        }
    }
    None
}

/// Whether `t` is a t-Pieri filling, returning a witness split.
pub fn is_t_pieri(t: &IncreasingTableau, t_val: u8) -> Option<PieriDecomposition> {
    if t.has_x() {
        return None;
    }
    let entries: Vec<(Cell, Option<u8>)> =
        t.cells_with_labels().map(|(c, l)| (c, l.num())).collect();
    pieri_split(&entries, t_val)
}

/// The bullet-extended check used mid-slide: `None` entries are bullets.
pub fn is_t_pieri_with_bullets(
    entries: &[(Cell, Option<u8>)],
    t_val: u8,
) -> Option<PieriDecomposition> {
    pieri_split(entries, t_val)
}

/// Boxes weakly southwest of `b` within the cell list (r' >= r, c' <= c,
/// excluding `b` itself).
fn southwest_of<'a>(
    cells: &'a [(Cell, u8)],
    b: Cell,
) -> impl Iterator<Item = (Cell, u8)> + 'a {
    cells
        .iter()
        .copied()
        .filter(move |&(c, _)| c != b && c.row >= b.row && c.col <= b.col)
}

/// KOG condition on a ribbon filling: every box is smaller-or-equal to all
/// boxes southwest of it, or greater-or-equal to all of them.
pub fn is_kog(t: &IncreasingTableau) -> Result<bool> {
    if !t.shape().is_ribbon() {
        return Err(Error::InvalidShape(format!(
            "{} is not a ribbon",
            t.shape()
        )));
    }
    if t.has_x() {
        return Ok(false);
    }
    let cells: Vec<(Cell, u8)> = t
        .cells_with_labels()
        .map(|(c, l)| (c, l.num().unwrap()))
        .collect();
    for &(b, v) in &cells {
        let le_all = southwest_of(&cells, b).all(|(_, w)| v <= w);
        let ge_all = southwest_of(&cells, b).all(|(_, w)| v >= w);
        if !le_all && !ge_all {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All t-Pieri fillings of `nu/lambda` (they use exactly the labels 1..t).
pub fn t_pieri_fillings(
    n: u8,
    lambda: &StrictPartition,
    t_val: u8,
    nu: &StrictPartition,
) -> Result<Vec<IncreasingTableau>> {
    let shape = SkewShape::shifted(n, lambda, nu)?;
    Ok(enumerate_increasing(&shape, t_val, false)
        .filter(|t| is_t_pieri(t, t_val).is_some())
        .collect())
}

/// All KOG tableaux of `nu/lambda` with labels 1..t; empty when the shape
/// is not a ribbon.
pub fn kog_fillings(
    n: u8,
    lambda: &StrictPartition,
    t_val: u8,
    nu: &StrictPartition,
) -> Result<Vec<IncreasingTableau>> {
    let shape = SkewShape::shifted(n, lambda, nu)?;
    if !shape.is_ribbon() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in enumerate_increasing(&shape, t_val, false) {
        if is_kog(&t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// The Pieri coefficient: `(-1)^(|nu/lambda| - t)` times the number of KOG
/// tableaux of shape `nu/lambda` with labels 1..t; zero when the skew shape
/// is not a ribbon or cannot hold t distinct labels.
pub fn pieri_coeff(
    n: u8,
    lambda: &StrictPartition,
    t_val: u8,
    nu: &StrictPartition,
) -> Result<i64> {
    if !nu.contains(lambda) || !nu.fits_in(n) {
        return Ok(0);
    }
    let shape = SkewShape::shifted(n, lambda, nu)?;
    if !shape.is_ribbon() || (shape.num_cells() as u8) < t_val {
        return Ok(0);
    }
    let count = kog_fillings(n, lambda, t_val, nu)?.len() as i64;
    let sign = if (shape.num_cells() as u32 + t_val as u32) % 2 == 0 {
        1
    } else {
        -1
    };
    Ok(sign * count)
}
