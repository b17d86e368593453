//! Increasing tableaux on skew shapes.
//!
//! A filling is increasing when every row and column strictly increases.
//! Besides numeric labels a cell may hold the terminal marker `X`, which
//! compares as plus infinity; strictness then forces `X` onto outer corners.
//! The transient slide marker (the bullet) never appears in a tableau at
//! rest, only inside the slide engine.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde_json::json;

use crate::shapes::{Cell, Grid, SkewShape, StrictPartition};
use crate::{Error, Result};

/// A cell entry: a positive integer or the terminal marker `X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    Num(u8),
    X,
}

impl Label {
    pub fn is_x(self) -> bool {
        matches!(self, Label::X)
    }

    pub fn num(self) -> Option<u8> {
        match self {
            Label::Num(k) => Some(k),
            Label::X => None,
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Num(a), Label::Num(b)) => a.cmp(b),
            (Label::Num(_), Label::X) => Ordering::Less,
            (Label::X, Label::Num(_)) => Ordering::Greater,
            (Label::X, Label::X) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Num(k) => write!(f, "{}", k),
            Label::X => write!(f, "X"),
        }
    }
}

/// An increasing filling of a skew shape. Entries are stored in row-major
/// cell order and validated at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IncreasingTableau {
    shape: SkewShape,
    entries: Vec<Label>,
}

impl IncreasingTableau {
    pub fn new(shape: SkewShape, entries: Vec<Label>) -> Result<Self> {
        let t = IncreasingTableau { shape, entries };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, entries: Vec<Label>) -> Self {
        let t = IncreasingTableau { shape, entries };
        debug_assert!(t.validate().is_ok(), "unchecked tableau is invalid");
        t
    }

    /// Build from explicit (cell, label) pairs; every skew cell must appear
    /// exactly once.
    pub fn from_cells(shape: SkewShape, cells: &[(Cell, Label)]) -> Result<Self> {
        let order = shape.cells();
        if cells.len() != order.len() {
            return Err(Error::NotIncreasing(format!(
                "expected {} entries, got {}",
                order.len(),
                cells.len()
            )));
        }
        let mut entries = vec![None; order.len()];
        for &(cell, label) in cells {
            let idx = shape
                .cell_index(cell)
                .ok_or_else(|| Error::NotIncreasing(format!("cell {} not in {}", cell, shape)))?;
            if entries[idx].replace(label).is_some() {
                return Err(Error::NotIncreasing(format!("duplicate cell {}", cell)));
            }
        }
        IncreasingTableau::new(shape, entries.into_iter().map(Option::unwrap).collect())
    }

    pub fn empty(grid: Grid) -> Self {
        IncreasingTableau {
            shape: SkewShape::from_parts(grid, Vec::new(), Vec::new()).unwrap(),
            entries: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.entries.len() != self.shape.num_cells() {
            return Err(Error::NotIncreasing(format!(
                "shape {} has {} cells but {} entries given",
                self.shape,
                self.shape.num_cells(),
                self.entries.len()
            )));
        }
        for (cell, label) in self.cells_with_labels() {
            if label == Label::Num(0) {
                return Err(Error::NotIncreasing(format!("label 0 at {}", cell)));
            }
            // Strict increase to the east and to the south; X acts as +inf,
            // so a cell holding X must have no skew neighbor in either
            // direction, which pins X to outer corners.
            for next in [cell.east(), cell.south()] {
                if let Some(next_label) = self.get(next) {
                    if label >= next_label {
                        return Err(Error::NotIncreasing(format!(
                            "{} at {} is not below {} at {}",
                            label, cell, next_label, next
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn grid(&self) -> Grid {
        self.shape.grid()
    }

    pub fn entries(&self) -> &[Label] {
        &self.entries
    }

    pub fn num_cells(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<Label> {
        self.shape.cell_index(cell).map(|i| self.entries[i])
    }

    pub fn cells_with_labels(&self) -> impl Iterator<Item = (Cell, Label)> + '_ {
        self.shape.cells().into_iter().zip(self.entries.iter().copied())
    }

    pub fn has_x(&self) -> bool {
        self.entries.iter().any(|l| l.is_x())
    }

    /// Largest numeric label (0 when there is none).
    pub fn max_label(&self) -> u8 {
        self.entries.iter().filter_map(|l| l.num()).max().unwrap_or(0)
    }

    /// The set of distinct numeric labels.
    pub fn label_set(&self) -> BTreeSet<u8> {
        self.entries.iter().filter_map(|l| l.num()).collect()
    }

    /// Packed means the numeric labels are exactly `{1, ..., m}` for some m.
    pub fn is_packed(&self) -> bool {
        let set = self.label_set();
        set.len() as u8 == self.max_label()
    }

    /// Remove all `X` cells, shrinking the outer shape.
    pub fn strip_x(&self) -> Result<IncreasingTableau> {
        if !self.has_x() {
            return Ok(self.clone());
        }
        let mut outer = self.shape.outer_parts().to_vec();
        let mut kept = Vec::new();
        for (cell, label) in self.cells_with_labels() {
            match label {
                Label::X => {
                    outer[cell.row as usize - 1] -= 1;
                }
                Label::Num(_) => kept.push((cell, label)),
            }
        }
        while outer.last() == Some(&0) {
            outer.pop();
        }
        let shape =
            SkewShape::from_parts(self.grid(), self.shape.inner_parts().to_vec(), outer)?;
        IncreasingTableau::from_cells(shape, &kept)
    }

    /// Text form: one line per row, a `.` per inner cell, entries separated
    /// by single spaces.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in 1..=self.shape.outer_parts().len() as u8 {
            let mut tokens: Vec<String> = Vec::new();
            for _ in 0..self.shape.inner_part(row) {
                tokens.push(".".into());
            }
            if let Some((a, b)) = self.shape.row_cols(row) {
                for col in a..=b {
                    tokens.push(self.get(Cell::new(row, col)).unwrap().to_string());
                }
            }
            out.push_str(&tokens.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .cells_with_labels()
            .map(|(c, l)| json!([c.row, c.col, l.to_string()]))
            .collect();
        json!({
            "inner": self.shape.inner_parts(),
            "outer": self.shape.outer_parts(),
            "entries": entries,
        })
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

/// The superstandard tableau of a straight shifted shape: row `i` is filled
/// with consecutive integers continuing from row `i - 1`.
pub fn superstandard(shape: &StrictPartition, n: u8) -> Result<IncreasingTableau> {
    let skew = SkewShape::straight_shifted(n, shape)?;
    let mut entries = Vec::with_capacity(shape.size() as usize);
    let mut next = 1u8;
    for &p in shape.parts() {
        for _ in 0..p {
            entries.push(Label::Num(next));
            next += 1;
        }
    }
    IncreasingTableau::new(skew, entries)
}

/// Whether a tableau is the superstandard filling of its (straight) shape.
pub fn is_superstandard(t: &IncreasingTableau) -> bool {
    if !t.shape().is_straight() || t.has_x() {
        return false;
    }
    let mut next = 1u8;
    for &l in t.entries() {
        if l != Label::Num(next) {
            return false;
        }
        next += 1;
    }
    true
}

/// Replace the labels order-preservingly by 1, 2, 3, ...
pub fn flatten(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    if t.has_x() {
        return Err(Error::NotIncreasing("cannot flatten a tableau with X".into()));
    }
    let distinct: Vec<u8> = t.label_set().into_iter().collect();
    let entries = t
        .entries()
        .iter()
        .map(|l| {
            let v = l.num().unwrap();
            let rank = distinct.binary_search(&v).unwrap() as u8 + 1;
            Label::Num(rank)
        })
        .collect();
    Ok(IncreasingTableau::from_parts_unchecked(t.shape().clone(), entries))
}

/// Reflect across the staircase antidiagonal, replacing each label `i` by
/// `max + 1 - i`. Takes increasing fillings to increasing fillings and
/// shape `outer/inner` to `inner^dual / outer^dual`.
pub fn vee(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    if !t.grid().is_shifted() {
        return Err(Error::InvalidShape("reflection needs a shifted grid".into()));
    }
    if t.has_x() {
        return Err(Error::NotIncreasing("cannot reflect a tableau with X".into()));
    }
    let shape = t.shape().reflect()?;
    let max = t.max_label();
    let cells: Vec<(Cell, Label)> = t
        .cells_with_labels()
        .map(|(c, l)| {
            (
                t.shape().reflect_cell(c),
                Label::Num(max + 1 - l.num().unwrap()),
            )
        })
        .collect();
    IncreasingTableau::from_cells(shape, &cells)
}

/// Double a shifted tableau into the rectangle: the staircase copy of cell
/// `(r, c)` holds `2 label - 1` and the transposed copy at `(c+1, r)` holds
/// `2 label`.
pub fn double_tableau(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    if !t.grid().is_shifted() {
        return Err(Error::InvalidShape("doubling needs a shifted tableau".into()));
    }
    if t.has_x() {
        return Err(Error::NotIncreasing("cannot double a tableau with X".into()));
    }
    let n = t.grid().rank();
    let inner = t.shape().inner_shifted()?.double(n)?;
    let outer = t.shape().outer_shifted()?.double(n)?;
    let shape = SkewShape::rect(n, &inner, &outer)?;
    let mut cells = Vec::with_capacity(2 * t.num_cells());
    for (c, l) in t.cells_with_labels() {
        let v = l.num().unwrap();
        cells.push((c, Label::Num(2 * v - 1)));
        cells.push((Cell::new(c.col + 1, c.row), Label::Num(2 * v)));
    }
    IncreasingTableau::from_cells(shape, &cells)
}

/// An encoded K-rectification order: an increasing packed tableau of
/// straight shape whose label groups, read from the largest label down,
/// give the corner sets of the successive slides. Whether every group is
/// actually a set of inner corners is only known when the order is run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RectOrder {
    tableau: IncreasingTableau,
    groups: Vec<(u8, Vec<Cell>)>,
}

impl RectOrder {
    pub fn new(tableau: IncreasingTableau) -> Result<Self> {
        if !tableau.shape().is_straight() {
            return Err(Error::InvalidOrder("order tableau must be straight".into()));
        }
        if tableau.has_x() {
            return Err(Error::InvalidOrder("order tableau cannot contain X".into()));
        }
        if !tableau.is_packed() {
            return Err(Error::InvalidOrder("order tableau must be packed".into()));
        }
        let max = tableau.max_label();
        let mut groups = Vec::with_capacity(max as usize);
        for v in (1..=max).rev() {
            let cells: Vec<Cell> = tableau
                .cells_with_labels()
                .filter(|&(_, l)| l == Label::Num(v))
                .map(|(c, _)| c)
                .collect();
            groups.push((v, cells));
        }
        Ok(RectOrder { tableau, groups })
    }

    pub fn empty(grid: Grid) -> Self {
        RectOrder {
            tableau: IncreasingTableau::empty(grid),
            groups: Vec::new(),
        }
    }

    pub fn tableau(&self) -> &IncreasingTableau {
        &self.tableau
    }

    /// Corner groups in execution order (largest label first).
    pub fn groups(&self) -> &[(u8, Vec<Cell>)] {
        &self.groups
    }

    pub fn shape_parts(&self) -> &[u8] {
        self.tableau.shape().outer_parts()
    }

    pub fn grid(&self) -> Grid {
        self.tableau.grid()
    }

    pub fn num_steps(&self) -> usize {
        self.groups.len()
    }

    pub fn num_cells(&self) -> usize {
        self.tableau.num_cells()
    }
}

/// Stream of the increasing fillings of `shape` whose numeric labels are
/// exactly `{1, ..., m}`. With `allow_x`, additionally every subset of the
/// outer corners may carry `X` (the numbered cells still use exactly
/// `{1, ..., m}`). Deterministic order: X subsets by ascending bitmask over
/// the row-major corner list, fillings lexicographic in row-major reading.
pub fn enumerate_increasing(shape: &SkewShape, m: u8, allow_x: bool) -> Fillings {
    let cells = shape.cells();
    let corners = if allow_x { shape.outer_corners() } else { Vec::new() };
    Fillings {
        shape: shape.clone(),
        cells,
        corners,
        m,
        next_subset: 0,
        state: None,
    }
}

pub struct Fillings {
    shape: SkewShape,
    cells: Vec<Cell>,
    corners: Vec<Cell>,
    m: u8,
    next_subset: u64,
    state: Option<SubsetState>,
}

struct SubsetState {
    x_mask: Vec<bool>,            // per cell index
    left: Vec<Option<usize>>,     // per numbered slot: earlier slot to the west
    up: Vec<Option<usize>>,       // per numbered slot: earlier slot to the north
    labels: Vec<u8>,              // current labels (0 = unset)
    counts: Vec<u8>,              // counts[v] for labels 1..=m
    distinct: u8,
    pos: usize,
    yielded_complete: bool,
    done: bool,
}

impl Fillings {
    fn init_subset(&mut self, subset: u64) {
        let x_mask: Vec<bool> = self
            .cells
            .iter()
            .map(|c| {
                self.corners
                    .iter()
                    .position(|k| k == c)
                    .map_or(false, |i| subset & (1 << i) != 0)
            })
            .collect();
        let numbered: Vec<usize> = (0..self.cells.len()).filter(|&i| !x_mask[i]).collect();
        let slot_of_cell = |cell: Cell| -> Option<usize> {
            let idx = self.shape.cell_index(cell)?;
            numbered.iter().position(|&j| j == idx)
        };
        let left = numbered
            .iter()
            .map(|&i| {
                let c = self.cells[i];
                if c.col > 1 {
                    slot_of_cell(Cell::new(c.row, c.col - 1))
                } else {
                    None
                }
            })
            .collect();
        let up = numbered
            .iter()
            .map(|&i| {
                let c = self.cells[i];
                if c.row > 1 {
                    slot_of_cell(Cell::new(c.row - 1, c.col))
                } else {
                    None
                }
            })
            .collect();
        let n_slots = numbered.len();
        self.state = Some(SubsetState {
            x_mask,
            left,
            up,
            labels: vec![0; n_slots],
            counts: vec![0; self.m as usize + 1],
            distinct: 0,
            pos: 0,
            yielded_complete: false,
            done: false,
        });
    }

    fn build(&self, st: &SubsetState) -> IncreasingTableau {
        let mut entries = Vec::with_capacity(self.cells.len());
        let mut slot = 0usize;
        for i in 0..self.cells.len() {
            if st.x_mask[i] {
                entries.push(Label::X);
            } else {
                entries.push(Label::Num(st.labels[slot]));
                slot += 1;
            }
        }
        IncreasingTableau::from_parts_unchecked(self.shape.clone(), entries)
    }
}

impl Iterator for Fillings {
    type Item = IncreasingTableau;

    fn next(&mut self) -> Option<IncreasingTableau> {
        let num_subsets: u64 = 1u64
            .checked_shl(self.corners.len() as u32)
            .expect("too many outer corners to decorate");
        loop {
            if self.state.is_none() {
                if self.next_subset >= num_subsets {
                    return None;
                }
                self.init_subset(self.next_subset);
                self.next_subset += 1;
            }
            let st = self.state.as_mut().unwrap();
            if advance(st, self.m) {
                let st = self.state.as_ref().unwrap();
                return Some(self.build(st));
            }
            self.state = None;
        }
    }
}

/// Move the backtracking state to its next complete filling. Returns false
/// when the subset is exhausted.
fn advance(st: &mut SubsetState, m: u8) -> bool {
    if st.done {
        return false;
    }
    let n_slots = st.labels.len();
    if n_slots == 0 {
        st.done = true;
        return m == 0;
    }
    if m == 0 {
        st.done = true;
        return false;
    }
    if st.yielded_complete {
        // Backtrack off the completed filling before searching on.
        st.pos = n_slots - 1;
        let v = st.labels[st.pos];
        st.counts[v as usize] -= 1;
        if st.counts[v as usize] == 0 {
            st.distinct -= 1;
        }
        st.yielded_complete = false;
    }
    loop {
        // Find the next feasible label for slot `pos`, starting after the
        // label currently recorded there.
        let mut bound = st.labels[st.pos];
        let min_needed = {
            let l = st.left[st.pos].map_or(0, |s| st.labels[s]);
            let u = st.up[st.pos].map_or(0, |s| st.labels[s]);
            l.max(u) + 1
        };
        if bound + 1 < min_needed {
            bound = min_needed - 1;
        }
        let remaining_after = (n_slots - st.pos - 1) as u8;
        let mut found = 0u8;
        for v in bound + 1..=m {
            let new_distinct = st.distinct + u8::from(st.counts[v as usize] == 0);
            if m - new_distinct <= remaining_after {
                found = v;
                break;
            }
        }
        if found > 0 {
            st.labels[st.pos] = found;
            st.counts[found as usize] += 1;
            if st.counts[found as usize] == 1 {
                st.distinct += 1;
            }
            if st.pos + 1 == n_slots {
                st.yielded_complete = true;
                return true;
            }
            st.pos += 1;
            st.labels[st.pos] = 0;
        } else {
            // Exhausted this slot; step back.
            st.labels[st.pos] = 0;
            if st.pos == 0 {
                st.done = true;
                return false;
            }
            st.pos -= 1;
            let v = st.labels[st.pos];
            st.counts[v as usize] -= 1;
            if st.counts[v as usize] == 0 {
                st.distinct -= 1;
            }
        }
    }
}

/// A pseudo-random packed filling of `shape` with labels exactly
/// `{1, ..., m}`, or `None` if no such filling exists. Randomized
/// backtracking: complete, so failure means nonexistence.
pub(crate) fn random_filling(
    shape: &SkewShape,
    m: u8,
    rng: &mut impl rand::Rng,
) -> Option<IncreasingTableau> {
    let cells = shape.cells();
    let k = cells.len();
    if k == 0 {
        return (m == 0).then(|| IncreasingTableau::from_parts_unchecked(shape.clone(), Vec::new()));
    }
    if m == 0 || (m as usize) > k {
        return None;
    }
    let neighbor = |cell: Cell| shape.cell_index(cell);
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|c| if c.col > 1 { neighbor(Cell::new(c.row, c.col - 1)) } else { None })
        .collect();
    let up: Vec<Option<usize>> = cells
        .iter()
        .map(|c| if c.row > 1 { neighbor(Cell::new(c.row - 1, c.col)) } else { None })
        .collect();

    struct Search<'a, R: rand::Rng> {
        left: &'a [Option<usize>],
        up: &'a [Option<usize>],
        m: u8,
        labels: Vec<u8>,
        counts: Vec<u16>,
        distinct: u8,
        rng: &'a mut R,
    }

    impl<R: rand::Rng> Search<'_, R> {
        fn go(&mut self, slot: usize) -> bool {
            let k = self.labels.len();
            if slot == k {
                return self.distinct == self.m;
            }
            let lo = {
                let l = self.left[slot].map_or(0, |s| self.labels[s]);
                let u = self.up[slot].map_or(0, |s| self.labels[s]);
                l.max(u) + 1
            };
            let mut candidates: Vec<u8> = (lo..=self.m)
                .filter(|&v| {
                    let new_distinct = self.distinct + u8::from(self.counts[v as usize] == 0);
                    self.m - new_distinct <= (k - slot - 1) as u8
                })
                .collect();
            for i in (1..candidates.len()).rev() {
                let j = self.rng.gen_range(0..=i);
                candidates.swap(i, j);
            }
            for v in candidates {
                self.labels[slot] = v;
                self.counts[v as usize] += 1;
                if self.counts[v as usize] == 1 {
                    self.distinct += 1;
                }
                if self.go(slot + 1) {
                    return true;
                }
                self.counts[v as usize] -= 1;
                if self.counts[v as usize] == 0 {
                    self.distinct -= 1;
                }
                self.labels[slot] = 0;
            }
            false
        }
    }

    let mut search = Search {
        left: &left,
        up: &up,
        m,
        labels: vec![0; k],
        counts: vec![0; m as usize + 1],
        distinct: 0,
        rng,
    };
    if !search.go(0) {
        return None;
    }
    let entries = search.labels.iter().map(|&v| Label::Num(v)).collect();
    Some(IncreasingTableau::from_parts_unchecked(shape.clone(), entries))
}
