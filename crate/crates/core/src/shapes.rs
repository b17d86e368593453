//! Shapes and ambient grids.
//!
//! Two grids appear: the shifted staircase of rank `n` (cells `(r, c)` with
//! `1 <= r <= c <= n`, row `r` indented `r - 1` columns) and the
//! `(n+1) x n` rectangle used by the doubling construction. Shapes are
//! strict partitions in the staircase and ordinary partitions in the
//! rectangle; both are stored as part vectors and realized as cell sets on
//! demand. All coordinates are 1-based `(row, column)`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A 1-based (row, column) grid position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: u8,
    pub col: u8,
}

impl Cell {
    pub fn new(row: u8, col: u8) -> Self {
        Cell { row, col }
    }

    /// The cell directly to the right.
    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    /// The cell directly below.
    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Ambient grid: shifted staircase or the (n+1) x n rectangle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Grid {
    Shifted { n: u8 },
    Rect { n: u8 },
}

impl Grid {
    pub fn shifted(n: u8) -> Grid {
        Grid::Shifted { n }
    }

    pub fn rect(n: u8) -> Grid {
        Grid::Rect { n }
    }

    pub fn rank(self) -> u8 {
        match self {
            Grid::Shifted { n } | Grid::Rect { n } => n,
        }
    }

    pub fn is_shifted(self) -> bool {
        matches!(self, Grid::Shifted { .. })
    }

    /// Number of rows: `n` for the staircase, `n + 1` for the rectangle.
    pub fn max_row(self) -> u8 {
        match self {
            Grid::Shifted { n } => n,
            Grid::Rect { n } => n + 1,
        }
    }

    pub fn max_col(self) -> u8 {
        self.rank()
    }

    /// First column of row `row`.
    pub fn row_start(self, row: u8) -> u8 {
        match self {
            Grid::Shifted { .. } => row,
            Grid::Rect { .. } => 1,
        }
    }

    /// Maximum number of cells row `row` can hold.
    pub fn row_capacity(self, row: u8) -> u8 {
        match self {
            Grid::Shifted { n } => {
                if row > n {
                    0
                } else {
                    n - row + 1
                }
            }
            Grid::Rect { n } => {
                if row > n + 1 {
                    0
                } else {
                    n
                }
            }
        }
    }

    pub fn contains(self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.max_row()
            && cell.col >= self.row_start(cell.row)
            && cell.col <= self.max_col()
    }

    /// Validate a part vector as a shape in this grid: no trailing zeros,
    /// strictly decreasing in the staircase, weakly decreasing in the
    /// rectangle, every row within grid bounds.
    pub(crate) fn validate_parts(self, parts: &[u8]) -> Result<()> {
        if parts.len() > self.max_row() as usize {
            return Err(Error::InvalidShape(format!(
                "{} parts do not fit in {:?}",
                parts.len(),
                self
            )));
        }
        for (i, &p) in parts.iter().enumerate() {
            let row = (i + 1) as u8;
            if p == 0 {
                return Err(Error::InvalidShape("zero part".into()));
            }
            if p > self.row_capacity(row) {
                return Err(Error::InvalidShape(format!(
                    "part {} in row {} exceeds {:?}",
                    p, row, self
                )));
            }
            if i + 1 < parts.len() {
                let next = parts[i + 1];
                let ok = match self {
                    Grid::Shifted { .. } => next < p,
                    Grid::Rect { .. } => next <= p,
                };
                if !ok {
                    return Err(Error::InvalidShape(format!(
                        "parts {},{} out of order for {:?}",
                        p, next, self
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn part_at(parts: &[u8], row: u8) -> u8 {
    parts.get(row as usize - 1).copied().unwrap_or(0)
}

pub(crate) fn parts_size(parts: &[u8]) -> u32 {
    parts.iter().map(|&p| p as u32).sum()
}

pub(crate) fn parts_contains_cell(grid: Grid, parts: &[u8], cell: Cell) -> bool {
    if !grid.contains(cell) {
        return false;
    }
    let len = part_at(parts, cell.row);
    let start = grid.row_start(cell.row);
    len > 0 && cell.col >= start && cell.col < start + len
}

/// Row-major cell list of a straight shape.
pub(crate) fn parts_cells(grid: Grid, parts: &[u8]) -> Vec<Cell> {
    let mut out = Vec::with_capacity(parts_size(parts) as usize);
    for (i, &p) in parts.iter().enumerate() {
        let row = (i + 1) as u8;
        let start = grid.row_start(row);
        for col in start..start + p {
            out.push(Cell::new(row, col));
        }
    }
    out
}

/// Inner corners of a straight shape: maximally southeast boxes, i.e. cells
/// with no shape cell to the right or below.
pub(crate) fn parts_inner_corners(grid: Grid, parts: &[u8]) -> Vec<Cell> {
    let mut out = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        let row = (i + 1) as u8;
        if p == 0 {
            continue;
        }
        let last = Cell::new(row, grid.row_start(row) + p - 1);
        if !parts_contains_cell(grid, parts, last.south()) {
            out.push(last);
        }
    }
    out
}

/// Remove a set of cells simultaneously from a straight shape. Every cell
/// must be a maximally-southeast box of the original shape (no shape cell to
/// its right or below) and no two may share a row; otherwise an
/// `InvalidOrder` error is returned.
pub(crate) fn parts_remove_cells(grid: Grid, parts: &mut Vec<u8>, cells: &[Cell]) -> Result<()> {
    for (i, &cell) in cells.iter().enumerate() {
        let p = part_at(parts, cell.row);
        if p == 0 || cell.col != grid.row_start(cell.row) + p - 1 {
            return Err(Error::InvalidOrder(format!(
                "cell {} is not an inner corner of {:?}",
                cell, parts
            )));
        }
        if parts_contains_cell(grid, parts, cell.south()) {
            return Err(Error::InvalidOrder(format!(
                "cell {} has a cell below it in {:?}",
                cell, parts
            )));
        }
        if cells[..i].iter().any(|c| c.row == cell.row) {
            return Err(Error::InvalidOrder(format!("two corners in row {}", cell.row)));
        }
    }
    for &cell in cells {
        parts[cell.row as usize - 1] -= 1;
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    if parts.contains(&0) {
        return Err(Error::InvalidOrder(format!(
            "removing cells left a hole in {:?}",
            parts
        )));
    }
    grid.validate_parts(parts)
        .map_err(|e| Error::InvalidOrder(format!("corner removal broke the shape: {}", e)))
}

/// A partition with strictly decreasing parts; indexes Schubert classes of
/// the odd orthogonal Grassmannian and names shapes in the shifted staircase.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StrictPartition {
    parts: Vec<u8>,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<u8>>) -> Result<Self> {
        let parts = parts.into();
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::InvalidShape("parts must be positive".into()));
            }
            if i + 1 < parts.len() && parts[i + 1] >= p {
                return Err(Error::InvalidShape(format!(
                    "parts must strictly decrease: {} then {}",
                    p,
                    parts[i + 1]
                )));
            }
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    /// The full staircase (n, n-1, ..., 1).
    pub fn staircase(n: u8) -> Self {
        StrictPartition {
            parts: (1..=n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> u32 {
        parts_size(&self.parts)
    }

    /// Length of row `row` (0 beyond the last part).
    pub fn part(&self, row: u8) -> u8 {
        part_at(&self.parts, row)
    }

    pub fn has_part(&self, k: u8) -> bool {
        self.parts.contains(&k)
    }

    pub fn fits_in(&self, n: u8) -> bool {
        self.parts.first().map_or(true, |&p| p <= n)
    }

    /// Diagram containment: `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &StrictPartition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= part_at(&self.parts, (i + 1) as u8))
    }

    /// Row-major cells of the shifted diagram; errors if the shape does not
    /// fit in the grid (or the grid is not shifted).
    pub fn cells(&self, grid: Grid) -> Result<Vec<Cell>> {
        if !grid.is_shifted() {
            return Err(Error::InvalidShape(
                "strict partitions live in the shifted staircase".into(),
            ));
        }
        grid.validate_parts(&self.parts)?;
        Ok(parts_cells(grid, &self.parts))
    }

    /// The dual shape: parts are the elements of `{1, ..., n}` missing from
    /// this partition; equivalently the antidiagonal reflection of the
    /// staircase complement.
    pub fn dual(&self, n: u8) -> Result<StrictPartition> {
        if !self.fits_in(n) {
            return Err(Error::InvalidShape(format!(
                "{} does not fit in rank {}",
                self, n
            )));
        }
        let parts = (1..=n).rev().filter(|&k| !self.has_part(k)).collect();
        Ok(StrictPartition { parts })
    }

    /// The doubled shape in the (n+1) x n rectangle: the staircase copy of
    /// the diagram together with its transpose placed below the diagonal
    /// (shifted cell `(r, c)` also lands at rectangle cell `(c+1, r)`).
    pub fn double(&self, n: u8) -> Result<Partition> {
        let grid = Grid::shifted(n);
        let cells = self.cells(grid)?;
        let mut row_len = vec![0u8; (n + 1) as usize];
        for c in &cells {
            row_len[c.row as usize - 1] += 1;
            row_len[c.col as usize] += 1; // transposed copy row c+1
        }
        while row_len.last() == Some(&0) {
            row_len.pop();
        }
        let doubled = Partition::new(row_len)?;
        debug_assert_eq!(doubled.size(), 2 * self.size());
        Ok(doubled)
    }

    /// Every strict partition fitting in rank `n`, sorted by size then by
    /// parts. The order is fixed; enumeration output depends on it.
    pub fn all_fitting(n: u8) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = (0u32..(1 << n))
            .map(|mask| {
                let parts: Vec<u8> = (1..=n).rev().filter(|&k| mask & (1 << (k - 1)) != 0).collect();
                StrictPartition { parts }
            })
            .collect();
        out.sort_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(StrictPartition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u8 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {:?} in shape {:?}", tok, s)))?;
            parts.push(p);
        }
        StrictPartition::new(parts).map_err(|e| Error::Parse(format!("shape {:?}: {}", s, e)))
    }
}

/// An ordinary partition (weakly decreasing parts); shapes in the rectangle.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u8>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u8>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::InvalidShape("interior zero part".into()));
            }
            if i + 1 < parts.len() && parts[i + 1] > p {
                return Err(Error::InvalidShape(format!(
                    "parts must weakly decrease: {} then {}",
                    p,
                    parts[i + 1]
                )));
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The full (n+1) x n rectangle.
    pub fn full_rect(n: u8) -> Self {
        Partition {
            parts: vec![n; (n + 1) as usize],
        }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        parts_size(&self.parts)
    }

    pub fn part(&self, row: u8) -> u8 {
        part_at(&self.parts, row)
    }

    pub fn fits_in_rect(&self, n: u8) -> bool {
        self.parts.len() <= (n + 1) as usize && self.parts.first().map_or(true, |&p| p <= n)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= part_at(&self.parts, (i + 1) as u8))
    }

    pub fn cells(&self, grid: Grid) -> Result<Vec<Cell>> {
        grid.validate_parts(&self.parts)?;
        Ok(parts_cells(grid, &self.parts))
    }

    /// Every partition fitting in the (n+1) x n rectangle, sorted by size
    /// then by parts.
    pub fn all_fitting_rect(n: u8) -> Vec<Partition> {
        fn rec(max_part: u8, rows_left: u8, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if rows_left == 0 {
                return;
            }
            for p in 1..=max_part {
                cur.push(p);
                rec(p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n + 1, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// A skew shape: an ordered pair of nested shapes in a common grid. Stored
/// as the two part vectors; the cell set is `outer \ inner`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewShape {
    grid: Grid,
    inner: Vec<u8>,
    outer: Vec<u8>,
}

impl SkewShape {
    pub(crate) fn from_parts(grid: Grid, inner: Vec<u8>, outer: Vec<u8>) -> Result<Self> {
        grid.validate_parts(&inner)?;
        grid.validate_parts(&outer)?;
        for (i, &p) in inner.iter().enumerate() {
            if p > part_at(&outer, (i + 1) as u8) {
                return Err(Error::InvalidShape(format!(
                    "inner row {} ({}) exceeds outer ({})",
                    i + 1,
                    p,
                    part_at(&outer, (i + 1) as u8)
                )));
            }
        }
        Ok(SkewShape { grid, inner, outer })
    }

    pub fn shifted(n: u8, inner: &StrictPartition, outer: &StrictPartition) -> Result<Self> {
        SkewShape::from_parts(
            Grid::shifted(n),
            inner.parts().to_vec(),
            outer.parts().to_vec(),
        )
    }

    pub fn straight_shifted(n: u8, shape: &StrictPartition) -> Result<Self> {
        SkewShape::shifted(n, &StrictPartition::empty(), shape)
    }

    pub fn rect(n: u8, inner: &Partition, outer: &Partition) -> Result<Self> {
        SkewShape::from_parts(Grid::rect(n), inner.parts().to_vec(), outer.parts().to_vec())
    }

    pub fn straight_rect(n: u8, shape: &Partition) -> Result<Self> {
        SkewShape::rect(n, &Partition::empty(), shape)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn inner_parts(&self) -> &[u8] {
        &self.inner
    }

    pub fn outer_parts(&self) -> &[u8] {
        &self.outer
    }

    pub fn inner_part(&self, row: u8) -> u8 {
        part_at(&self.inner, row)
    }

    pub fn outer_part(&self, row: u8) -> u8 {
        part_at(&self.outer, row)
    }

    /// The inner shape as a strict partition (shifted grids only).
    pub fn inner_shifted(&self) -> Result<StrictPartition> {
        if !self.grid.is_shifted() {
            return Err(Error::InvalidShape("not a shifted skew shape".into()));
        }
        StrictPartition::new(self.inner.clone())
    }

    pub fn outer_shifted(&self) -> Result<StrictPartition> {
        if !self.grid.is_shifted() {
            return Err(Error::InvalidShape("not a shifted skew shape".into()));
        }
        StrictPartition::new(self.outer.clone())
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of skew cells.
    pub fn num_cells(&self) -> usize {
        (parts_size(&self.outer) - parts_size(&self.inner)) as usize
    }

    pub fn size_inner(&self) -> u32 {
        parts_size(&self.inner)
    }

    pub fn size_outer(&self) -> u32 {
        parts_size(&self.outer)
    }

    /// Columns of row `row` occupied by skew cells, as an inclusive range;
    /// `None` when the row has none.
    pub fn row_cols(&self, row: u8) -> Option<(u8, u8)> {
        let outer = part_at(&self.outer, row);
        let inner = part_at(&self.inner, row);
        if outer <= inner {
            return None;
        }
        let start = self.grid.row_start(row);
        Some((start + inner, start + outer - 1))
    }

    /// Row-major (top to bottom, left to right) skew cells.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.num_cells());
        for row in 1..=self.outer.len() as u8 {
            if let Some((a, b)) = self.row_cols(row) {
                for col in a..=b {
                    out.push(Cell::new(row, col));
                }
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        parts_contains_cell(self.grid, &self.outer, cell)
            && !parts_contains_cell(self.grid, &self.inner, cell)
    }

    /// Row-major index of a skew cell.
    pub fn cell_index(&self, cell: Cell) -> Option<usize> {
        if !self.contains_cell(cell) {
            return None;
        }
        let mut idx = 0usize;
        for row in 1..cell.row {
            if let Some((a, b)) = self.row_cols(row) {
                idx += (b - a + 1) as usize;
            }
        }
        let (a, _) = self.row_cols(cell.row).unwrap();
        Some(idx + (cell.col - a) as usize)
    }

    /// Outer corners: skew cells with no skew cell to the right or below.
    pub fn outer_corners(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|c| !self.contains_cell(c.east()) && !self.contains_cell(c.south()))
            .collect()
    }

    /// A ribbon is a skew shape containing no 2x2 block.
    pub fn is_ribbon(&self) -> bool {
        self.cells().iter().all(|&c| {
            !(self.contains_cell(c.east())
                && self.contains_cell(c.south())
                && self.contains_cell(c.east().south()))
        })
    }

    /// Reflection across the main antidiagonal of the staircase; the shape
    /// `outer/inner` maps to `inner^dual / outer^dual`.
    pub fn reflect(&self) -> Result<SkewShape> {
        if !self.grid.is_shifted() {
            return Err(Error::InvalidShape("reflection needs a shifted grid".into()));
        }
        let n = self.grid.rank();
        let inner = StrictPartition::new(self.inner.clone())?;
        let outer = StrictPartition::new(self.outer.clone())?;
        SkewShape::shifted(n, &outer.dual(n)?, &inner.dual(n)?)
    }

    /// Antidiagonal reflection of a single cell.
    pub fn reflect_cell(&self, cell: Cell) -> Cell {
        let n = self.grid.rank();
        Cell::new(n + 1 - cell.col, n + 1 - cell.row)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |parts: &[u8]| -> String {
            if parts.is_empty() {
                "0".into()
            } else {
                parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        write!(f, "{}/{}", show(&self.outer), show(&self.inner))
    }
}

/// All containment pairs `(inner, outer)` of strict partitions of rank `n`.
pub fn all_skew_pairs(n: u8) -> Vec<(StrictPartition, StrictPartition)> {
    let shapes = StrictPartition::all_fitting(n);
    let mut out = Vec::new();
    for outer in &shapes {
        for inner in &shapes {
            if outer.contains(inner) {
                out.push((inner.clone(), outer.clone()));
            }
        }
    }
    out
}
