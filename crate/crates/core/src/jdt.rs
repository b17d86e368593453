//! The slide engine.
//!
//! A K-jdt slide places bullets on a set of inner corners and, for
//! i = 1, 2, ..., applies `switch` to the union of alternating ribbons on
//! the cells holding a bullet or the value i. Once the bullets have been
//! switched past every entry they are stripped from the outer shape.
//! Rectification executes slides according to an encoded order, largest
//! labels first; infusion additionally records the vacated cells, producing
//! an involution. Everything is generic over the shifted staircase and the
//! rectangle grid, which is what the doubling argument needs.

use rand::Rng;
use smallvec::SmallVec;

use crate::shapes::{
    parts_inner_corners, parts_remove_cells, Cell, Grid, Partition,
    SkewShape, StrictPartition,
};
use crate::tableaux::{double_tableau, enumerate_increasing, IncreasingTableau, Label, RectOrder};
use crate::{Error, Result};

const EMPTY: u8 = 0;
const BULLET: u8 = u8::MAX;
const MAX_LABEL: u8 = 120;

/// One of the two symbols an alternating ribbon is filled with.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RibbonSymbol {
    First,
    Second,
}

impl RibbonSymbol {
    fn other(self) -> RibbonSymbol {
        match self {
            RibbonSymbol::First => RibbonSymbol::Second,
            RibbonSymbol::Second => RibbonSymbol::First,
        }
    }
}

/// A short alternating ribbon: an edge-connected cell set with at most two
/// boxes in any row or column, no 2x2 block, and adjacent boxes holding
/// different symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ribbon {
    cells: Vec<(Cell, RibbonSymbol)>,
}

impl Ribbon {
    pub fn new(mut cells: Vec<(Cell, RibbonSymbol)>) -> Result<Ribbon> {
        if cells.is_empty() {
            return Err(Error::Structural("empty ribbon".into()));
        }
        cells.sort_by_key(|&(c, _)| c);
        let has = |cell: Cell| cells.iter().find(|&&(c, _)| c == cell).map(|&(_, s)| s);
        for w in cells.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Structural(format!("duplicate cell {}", w[0].0)));
            }
        }
        for &(cell, sym) in &cells {
            let row_count = cells.iter().filter(|&&(c, _)| c.row == cell.row).count();
            let col_count = cells.iter().filter(|&&(c, _)| c.col == cell.col).count();
            if row_count > 2 || col_count > 2 {
                return Err(Error::Structural(format!(
                    "more than two boxes share a line at {}",
                    cell
                )));
            }
            for next in [cell.east(), cell.south()] {
                if let Some(other) = has(next) {
                    if other == sym {
                        return Err(Error::Structural(format!(
                            "adjacent boxes {} and {} hold the same symbol",
                            cell, next
                        )));
                    }
                }
            }
            if has(cell.east()).is_some()
                && has(cell.south()).is_some()
                && has(cell.east().south()).is_some()
            {
                return Err(Error::Structural(format!("2x2 block at {}", cell)));
            }
        }
        // Edge-connectivity.
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            let c = cells[i].0;
            for (j, &(d, _)) in cells.iter().enumerate() {
                if !seen[j] && adjacent(c, d) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Structural("ribbon is not edge-connected".into()));
        }
        Ok(Ribbon { cells })
    }

    pub fn cells(&self) -> &[(Cell, RibbonSymbol)] {
        &self.cells
    }

    /// Interchange the two symbols; a single box is left unchanged.
    pub fn switch(&self) -> Ribbon {
        if self.cells.len() == 1 {
            return self.clone();
        }
        Ribbon {
            cells: self.cells.iter().map(|&(c, s)| (c, s.other())).collect(),
        }
    }
}

fn adjacent(a: Cell, b: Cell) -> bool {
    (a.row == b.row && a.col.abs_diff(b.col) == 1)
        || (a.col == b.col && a.row.abs_diff(b.row) == 1)
}

/// Dense byte board over the grid rectangle; 0 is empty, 255 the bullet.
#[derive(Clone)]
struct Board {
    rows: u8,
    cols: u8,
    cells: SmallVec<[u8; 128]>,
}

impl Board {
    fn new(grid: Grid) -> Board {
        let rows = grid.max_row();
        let cols = grid.max_col();
        Board {
            rows,
            cols,
            cells: smallvec::smallvec![EMPTY; rows as usize * cols as usize],
        }
    }

    fn from_tableau(t: &IncreasingTableau) -> Result<Board> {
        let mut b = Board::new(t.grid());
        for (cell, label) in t.cells_with_labels() {
            match label {
                Label::X => {
                    return Err(Error::Structural(
                        "slides require X-free tableaux; strip X first".into(),
                    ))
                }
                Label::Num(v) => {
                    if v > MAX_LABEL {
                        return Err(Error::Structural(format!("label {} too large", v)));
                    }
                    b.set(cell, v);
                }
            }
        }
        Ok(b)
    }

    fn idx(&self, c: Cell) -> usize {
        (c.row as usize - 1) * self.cols as usize + (c.col as usize - 1)
    }

    fn get(&self, c: Cell) -> u8 {
        if c.row == 0 || c.col == 0 || c.row > self.rows || c.col > self.cols {
            return EMPTY;
        }
        self.cells[self.idx(c)]
    }

    fn set(&mut self, c: Cell, v: u8) {
        let i = self.idx(c);
        self.cells[i] = v;
    }

    /// Distinct numeric labels on the board, ascending.
    fn values(&self) -> SmallVec<[u8; 64]> {
        let mut mask = 0u128;
        for &v in &self.cells {
            if v != EMPTY && v != BULLET {
                mask |= 1 << v;
            }
        }
        let mut out = SmallVec::new();
        for v in 1..=MAX_LABEL {
            if mask & (1 << v) != 0 {
                out.push(v);
            }
        }
        out
    }

    fn occupied(&self) -> Vec<(Cell, u8)> {
        let mut out = Vec::new();
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                let cell = Cell::new(r, c);
                let v = self.get(cell);
                if v != EMPTY {
                    out.push((cell, v));
                }
            }
        }
        out
    }
}

/// Apply the switch pass for value `v`: decompose the cells holding a bullet
/// or `v` into edge-connected components, check each is a short alternating
/// ribbon, and interchange the symbols on every multi-box component.
fn switch_pass(board: &mut Board, v: u8) -> Result<()> {
    let mut active: SmallVec<[(Cell, bool); 32]> = SmallVec::new();
    for r in 1..=board.rows {
        for c in 1..=board.cols {
            let cell = Cell::new(r, c);
            let b = board.get(cell);
            if b == BULLET || b == v {
                active.push((cell, b == BULLET));
            }
        }
    }
    let find = |cell: Cell| active.iter().position(|&(c, _)| c == cell);
    let mut visited = vec![false; active.len()];
    for start in 0..active.len() {
        if visited[start] {
            continue;
        }
        let mut comp: SmallVec<[usize; 16]> = SmallVec::new();
        let mut stack: SmallVec<[usize; 16]> = SmallVec::new();
        visited[start] = true;
        stack.push(start);
        while let Some(i) = stack.pop() {
            comp.push(i);
            let c = active[i].0;
            for nb in [
                Cell::new(c.row, c.col + 1),
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col.wrapping_sub(1)),
                Cell::new(c.row.wrapping_sub(1), c.col),
            ] {
                if nb.row == 0 || nb.col == 0 {
                    continue;
                }
                if let Some(j) = find(nb) {
                    if !visited[j] {
                        visited[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        validate_component(&active, &comp, v)?;
        if comp.len() > 1 {
            for &i in &comp {
                let (cell, is_bullet) = active[i];
                board.set(cell, if is_bullet { v } else { BULLET });
            }
        }
    }
    Ok(())
}

fn validate_component(
    active: &[(Cell, bool)],
    comp: &[usize],
    v: u8,
) -> Result<()> {
    let in_comp = |cell: Cell| comp.iter().copied().find(|&i| active[i].0 == cell);
    for &i in comp {
        let (cell, is_bullet) = active[i];
        let row_count = comp.iter().filter(|&&j| active[j].0.row == cell.row).count();
        let col_count = comp.iter().filter(|&&j| active[j].0.col == cell.col).count();
        if row_count > 2 || col_count > 2 {
            return Err(Error::Structural(format!(
                "ribbon for value {} has more than two boxes in a line at {}",
                v, cell
            )));
        }
        for nb in [cell.east(), cell.south()] {
            if let Some(j) = in_comp(nb) {
                if active[j].1 == is_bullet {
                    return Err(Error::Structural(format!(
                        "ribbon for value {} is not alternating at {}",
                        v, cell
                    )));
                }
            }
        }
        if in_comp(cell.east()).is_some()
            && in_comp(cell.south()).is_some()
            && in_comp(cell.east().south()).is_some()
        {
            return Err(Error::Structural(format!(
                "ribbon for value {} contains a 2x2 block at {}",
                v, cell
            )));
        }
    }
    Ok(())
}

/// One slide on the board: place bullets on `corners`, run the switch passes
/// for every value present, then remove the resting bullets and return them
/// (row-major).
fn slide(
    board: &mut Board,
    corners: &[Cell],
    mut observer: Option<&mut dyn FnMut(u8, &Board)>,
) -> Result<SmallVec<[Cell; 8]>> {
    for &c in corners {
        if board.get(c) != EMPTY {
            return Err(Error::Structural(format!("corner {} is occupied", c)));
        }
        board.set(c, BULLET);
    }
    let values = board.values();
    for &v in &values {
        switch_pass(board, v)?;
        if let Some(obs) = observer.as_mut() {
            obs(v, board);
        }
    }
    let mut bullets: SmallVec<[Cell; 8]> = SmallVec::new();
    for r in 1..=board.rows {
        for c in 1..=board.cols {
            let cell = Cell::new(r, c);
            if board.get(cell) == BULLET {
                bullets.push(cell);
                board.set(cell, EMPTY);
            }
        }
    }
    Ok(bullets)
}

fn rebuild(
    grid: Grid,
    inner: Vec<u8>,
    outer: Vec<u8>,
    board: &Board,
) -> Result<IncreasingTableau> {
    let shape = SkewShape::from_parts(grid, inner, outer)
        .map_err(|e| Error::Structural(format!("slide produced a bad shape: {}", e)))?;
    let mut entries = Vec::with_capacity(shape.num_cells());
    for cell in shape.cells() {
        let v = board.get(cell);
        if v == EMPTY || v == BULLET {
            return Err(Error::Structural(format!("hole at {} after slide", cell)));
        }
        entries.push(Label::Num(v));
    }
    IncreasingTableau::new(shape, entries)
        .map_err(|e| Error::Structural(format!("slide produced a non-increasing filling: {}", e)))
}

/// A snapshot of the board mid-slide: the remaining inner cells plus every
/// occupied cell (bullet or number).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frame {
    inner: Vec<u8>,
    cells: Vec<(Cell, Option<u8>)>, // None = bullet, row-major
}

impl Frame {
    fn capture(inner: &[u8], board: &Board) -> Frame {
        Frame {
            inner: inner.to_vec(),
            cells: board
                .occupied()
                .into_iter()
                .map(|(c, v)| (c, if v == BULLET { None } else { Some(v) }))
                .collect(),
        }
    }

    pub fn cells(&self) -> &[(Cell, Option<u8>)] {
        &self.cells
    }

    pub fn inner_parts(&self) -> &[u8] {
        &self.inner
    }

    /// Text rows: `.` per remaining inner cell, `*` for a bullet.
    pub fn render_text(&self) -> String {
        let max_row = self
            .cells
            .iter()
            .map(|&(c, _)| c.row)
            .max()
            .unwrap_or(0)
            .max(self.inner.len() as u8);
        let mut out = String::new();
        for row in 1..=max_row {
            let mut tokens: Vec<String> = Vec::new();
            let dots = self.inner.get(row as usize - 1).copied().unwrap_or(0);
            for _ in 0..dots {
                tokens.push(".".into());
            }
            let mut row_cells: Vec<&(Cell, Option<u8>)> =
                self.cells.iter().filter(|&&(c, _)| c.row == row).collect();
            row_cells.sort_by_key(|&&(c, _)| c.col);
            for &&(_, v) in &row_cells {
                tokens.push(match v {
                    None => "*".into(),
                    Some(k) => k.to_string(),
                });
            }
            out.push_str(&tokens.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The frame-by-frame record of a single K-jdt slide.
#[derive(Clone, Debug)]
pub struct SlideTrace {
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    pub value: u8,
    pub before: Frame,
    pub after: Frame,
}

impl SlideTrace {
    /// The initial frame followed by the frame after each switch pass.
    pub fn frames(&self) -> Vec<&Frame> {
        let mut out = Vec::new();
        if let Some(first) = self.steps.first() {
            out.push(&first.before);
        }
        for s in &self.steps {
            out.push(&s.after);
        }
        out
    }
}

fn validate_slide_input(t: &IncreasingTableau, corners: &[Cell]) -> Result<()> {
    if t.has_x() {
        return Err(Error::InvalidOrder("strip X before sliding".into()));
    }
    if corners.is_empty() {
        return Err(Error::InvalidOrder("empty corner set".into()));
    }
    Ok(())
}

/// A single K-jdt slide of `t` through the given inner corners.
pub fn kjdt(t: &IncreasingTableau, corners: &[Cell]) -> Result<IncreasingTableau> {
    validate_slide_input(t, corners)?;
    let grid = t.grid();
    let mut inner = t.shape().inner_parts().to_vec();
    parts_remove_cells(grid, &mut inner, corners)?;
    let mut outer = t.shape().outer_parts().to_vec();
    let mut board = Board::from_tableau(t)?;
    let bullets = slide(&mut board, corners, None)?;
    parts_remove_cells(grid, &mut outer, &bullets)
        .map_err(|e| Error::Structural(format!("resting bullets not removable: {}", e)))?;
    rebuild(grid, inner, outer, &board)
}

/// As [`kjdt`], also returning the frame-by-frame trace.
pub fn kjdt_traced(
    t: &IncreasingTableau,
    corners: &[Cell],
) -> Result<(IncreasingTableau, SlideTrace)> {
    validate_slide_input(t, corners)?;
    let grid = t.grid();
    let mut inner = t.shape().inner_parts().to_vec();
    parts_remove_cells(grid, &mut inner, corners)?;
    let mut outer = t.shape().outer_parts().to_vec();
    let mut board = Board::from_tableau(t)?;

    for &c in corners {
        if board.get(c) != EMPTY {
            return Err(Error::Structural(format!("corner {} is occupied", c)));
        }
        board.set(c, BULLET);
    }
    let mut steps = Vec::new();
    let mut last = Frame::capture(&inner, &board);
    let values = board.values();
    for &v in &values {
        switch_pass(&mut board, v)?;
        let after = Frame::capture(&inner, &board);
        let before = std::mem::replace(&mut last, after.clone());
        steps.push(TraceStep { value: v, before, after });
    }
    let mut bullets: SmallVec<[Cell; 8]> = SmallVec::new();
    for r in 1..=board.rows {
        for c in 1..=board.cols {
            let cell = Cell::new(r, c);
            if board.get(cell) == BULLET {
                bullets.push(cell);
                board.set(cell, EMPTY);
            }
        }
    }
    parts_remove_cells(grid, &mut outer, &bullets)
        .map_err(|e| Error::Structural(format!("resting bullets not removable: {}", e)))?;
    let result = rebuild(grid, inner, outer, &board)?;
    Ok((result, SlideTrace { steps }))
}

/// Run a K-jdt slide calling `observer` with the bullet-decorated board
/// state right after the bullets are placed and after each switch pass.
/// Pairs with `pieri::is_t_pieri_with_bullets` for slide-closure checks.
pub fn kjdt_observed(
    t: &IncreasingTableau,
    corners: &[Cell],
    mut observer: impl FnMut(&[(Cell, Option<u8>)]),
) -> Result<IncreasingTableau> {
    validate_slide_input(t, corners)?;
    let grid = t.grid();
    let mut inner = t.shape().inner_parts().to_vec();
    parts_remove_cells(grid, &mut inner, corners)?;
    let mut outer = t.shape().outer_parts().to_vec();
    let mut board = Board::from_tableau(t)?;
    for &c in corners {
        if board.get(c) != EMPTY {
            return Err(Error::Structural(format!("corner {} is occupied", c)));
        }
        board.set(c, BULLET);
    }
    let snapshot = |b: &Board| -> Vec<(Cell, Option<u8>)> {
        b.occupied()
            .into_iter()
            .map(|(c, v)| (c, if v == BULLET { None } else { Some(v) }))
            .collect()
    };
    observer(&snapshot(&board));
    let values = board.values();
    for &v in &values {
        switch_pass(&mut board, v)?;
        observer(&snapshot(&board));
    }
    let mut bullets: SmallVec<[Cell; 8]> = SmallVec::new();
    for r in 1..=board.rows {
        for c in 1..=board.cols {
            let cell = Cell::new(r, c);
            if board.get(cell) == BULLET {
                bullets.push(cell);
                board.set(cell, EMPTY);
            }
        }
    }
    parts_remove_cells(grid, &mut outer, &bullets)
        .map_err(|e| Error::Structural(format!("resting bullets not removable: {}", e)))?;
    rebuild(grid, inner, outer, &board)
}

/// K-rectification of `t` under an encoded order. The order's shape must be
/// the inner shape of `t`; each label group must be a set of inner corners
/// of the shape remaining when it is reached, otherwise `InvalidOrder`.
pub fn rectify(t: &IncreasingTableau, order: &RectOrder) -> Result<IncreasingTableau> {
    rectify_with(t, order, None).map(|(res, _)| res)
}

/// As [`rectify`], also returning one trace per slide.
pub fn rectify_traced(
    t: &IncreasingTableau,
    order: &RectOrder,
) -> Result<(IncreasingTableau, Vec<SlideTrace>)> {
    let mut traces = Vec::new();
    let res = rectify_with(t, order, Some(&mut traces))?;
    Ok((res.0, traces))
}

fn rectify_with(
    t: &IncreasingTableau,
    order: &RectOrder,
    mut traces: Option<&mut Vec<SlideTrace>>,
) -> Result<(IncreasingTableau, Vec<(u8, SmallVec<[Cell; 8]>)>)> {
    if t.has_x() {
        return Err(Error::InvalidOrder("strip X before rectifying".into()));
    }
    if order.grid() != t.grid() {
        return Err(Error::InvalidOrder("order grid differs from tableau grid".into()));
    }
    if order.shape_parts() != t.shape().inner_parts() {
        return Err(Error::InvalidOrder(format!(
            "order shape {:?} does not match inner shape {:?}",
            order.shape_parts(),
            t.shape().inner_parts()
        )));
    }
    let grid = t.grid();
    let mut inner = t.shape().inner_parts().to_vec();
    let mut outer = t.shape().outer_parts().to_vec();
    let mut board = Board::from_tableau(t)?;
    let mut vacated = Vec::with_capacity(order.num_steps());
    for (value, corners) in order.groups() {
        parts_remove_cells(grid, &mut inner, corners)?;
        let bullets = if let Some(tr) = traces.as_deref_mut() {
            let mut steps = Vec::new();
            for &c in corners {
                if board.get(c) != EMPTY {
                    return Err(Error::Structural(format!("corner {} is occupied", c)));
                }
                board.set(c, BULLET);
            }
            let mut last = Frame::capture(&inner, &board);
            let values = board.values();
            for &v in &values {
                switch_pass(&mut board, v)?;
                let after = Frame::capture(&inner, &board);
                let before = std::mem::replace(&mut last, after.clone());
                steps.push(TraceStep { value: v, before, after });
            }
            let mut bullets: SmallVec<[Cell; 8]> = SmallVec::new();
            for r in 1..=board.rows {
                for c in 1..=board.cols {
                    let cell = Cell::new(r, c);
                    if board.get(cell) == BULLET {
                        bullets.push(cell);
                        board.set(cell, EMPTY);
                    }
                }
            }
            tr.push(SlideTrace { steps });
            bullets
        } else {
            slide(&mut board, corners, None)?
        };
        parts_remove_cells(grid, &mut outer, &bullets)
            .map_err(|e| Error::Structural(format!("resting bullets not removable: {}", e)))?;
        vacated.push((*value, bullets));
    }
    let result = rebuild(grid, inner, outer, &board)?;
    Ok((result, vacated))
}

/// K-infusion. `inner_t` fills `lambda/alpha`, `outer_t` fills `nu/lambda`;
/// the result is the pair (rectified outer tableau on `gamma/alpha`, record
/// of the vacated cells on `nu/gamma`), and the operation is an involution.
pub fn infusion(
    inner_t: &IncreasingTableau,
    outer_t: &IncreasingTableau,
) -> Result<(IncreasingTableau, IncreasingTableau)> {
    if inner_t.has_x() || outer_t.has_x() {
        return Err(Error::InvalidOrder("strip X before infusion".into()));
    }
    if inner_t.grid() != outer_t.grid() {
        return Err(Error::InvalidOrder("grids differ".into()));
    }
    if inner_t.shape().outer_parts() != outer_t.shape().inner_parts() {
        return Err(Error::InvalidOrder(format!(
            "inner tableau outer shape {:?} must match outer tableau inner shape {:?}",
            inner_t.shape().outer_parts(),
            outer_t.shape().inner_parts()
        )));
    }
    let grid = inner_t.grid();
    let mut cur_inner = outer_t.shape().inner_parts().to_vec();
    let mut cur_outer = outer_t.shape().outer_parts().to_vec();
    let original_outer = cur_outer.clone();
    let mut board = Board::from_tableau(outer_t)?;
    let mut record: Vec<(Cell, Label)> = Vec::new();

    let mut values: Vec<u8> = inner_t.label_set().into_iter().collect();
    values.reverse();
    for v in values {
        let corners: Vec<Cell> = inner_t
            .cells_with_labels()
            .filter(|&(_, l)| l == Label::Num(v))
            .map(|(c, _)| c)
            .collect();
        parts_remove_cells(grid, &mut cur_inner, &corners)?;
        let bullets = slide(&mut board, &corners, None)?;
        parts_remove_cells(grid, &mut cur_outer, &bullets)
            .map_err(|e| Error::Structural(format!("resting bullets not removable: {}", e)))?;
        for &b in &bullets {
            record.push((b, Label::Num(v)));
        }
    }
    if cur_inner != inner_t.shape().inner_parts() {
        return Err(Error::Structural(format!(
            "infusion did not consume the inner tableau: {:?} vs {:?}",
            cur_inner,
            inner_t.shape().inner_parts()
        )));
    }
    let first = rebuild(grid, cur_inner, cur_outer.clone(), &board)?;
    let record_shape = SkewShape::from_parts(grid, cur_outer, original_outer)
        .map_err(|e| Error::Structural(format!("record shape invalid: {}", e)))?;
    let second = IncreasingTableau::from_cells(record_shape, &record)
        .map_err(|e| Error::Structural(format!("record not increasing: {}", e)))?;
    Ok((first, second))
}

fn order_from_steps(grid: Grid, parts: &[u8], steps: &[Vec<Cell>]) -> RectOrder {
    let total = steps.len() as u8;
    let mut cells: Vec<(Cell, Label)> = Vec::new();
    for (k, group) in steps.iter().enumerate() {
        let label = total - k as u8;
        for &c in group {
            cells.push((c, Label::Num(label)));
        }
    }
    let shape = SkewShape::from_parts(grid, Vec::new(), parts.to_vec())
        .expect("straight shape is valid");
    let tableau = IncreasingTableau::from_cells(shape, &cells)
        .expect("peeling order encodes an increasing tableau");
    RectOrder::new(tableau).expect("peeling order is packed")
}

fn canonical_order_parts(grid: Grid, parts: &[u8]) -> RectOrder {
    let mut remaining = parts.to_vec();
    let mut steps: Vec<Vec<Cell>> = Vec::new();
    while !remaining.is_empty() {
        let corners = parts_inner_corners(grid, &remaining);
        parts_remove_cells(grid, &mut remaining, &corners).expect("corner peel is valid");
        steps.push(corners);
    }
    order_from_steps(grid, parts, &steps)
}

/// The greedy all-corners order: each step uses every inner corner of the
/// shape remaining at that point.
pub fn canonical_order(shape: &StrictPartition, n: u8) -> Result<RectOrder> {
    let grid = Grid::shifted(n);
    grid.validate_parts(shape.parts())?;
    Ok(canonical_order_parts(grid, shape.parts()))
}

/// Greedy all-corners order for a rectangle-grid shape.
pub fn canonical_order_rect(shape: &Partition, n: u8) -> Result<RectOrder> {
    let grid = Grid::rect(n);
    grid.validate_parts(shape.parts())?;
    Ok(canonical_order_parts(grid, shape.parts()))
}

/// Whether the order's label groups peel the shape corner set by corner set.
pub fn order_is_executable(order: &RectOrder) -> bool {
    let grid = order.grid();
    let mut remaining = order.shape_parts().to_vec();
    for (_, cells) in order.groups() {
        if parts_remove_cells(grid, &mut remaining, cells).is_err() {
            return false;
        }
    }
    true
}

/// Every executable rectification-order encoding of a straight shifted
/// shape: every increasing packed filling whose label groups pass the
/// dry-run corner check. Guarded at 8 cells; pass `force` to override.
pub fn all_orders(shape: &StrictPartition, n: u8, force: bool) -> Result<Vec<RectOrder>> {
    if shape.size() > 8 && !force {
        return Err(Error::SizeGuard(format!(
            "all_orders on {} cells explodes",
            shape.size()
        )));
    }
    let grid = Grid::shifted(n);
    grid.validate_parts(shape.parts())?;
    if shape.is_empty() {
        return Ok(vec![RectOrder::empty(grid)]);
    }
    let skew = SkewShape::straight_shifted(n, shape)?;
    let k = shape.size() as u8;
    let mut out = Vec::new();
    for m in 1..=k {
        for t in enumerate_increasing(&skew, m, false) {
            let order = RectOrder::new(t)?;
            if order_is_executable(&order) {
                out.push(order);
            }
        }
    }
    Ok(out)
}

fn random_order_parts(grid: Grid, parts: &[u8], rng: &mut impl Rng) -> RectOrder {
    let mut remaining = parts.to_vec();
    let mut steps: Vec<Vec<Cell>> = Vec::new();
    while !remaining.is_empty() {
        let corners = parts_inner_corners(grid, &remaining);
        let chosen: Vec<Cell> = loop {
            let picked: Vec<Cell> = corners
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            if !picked.is_empty() {
                break picked;
            }
        };
        parts_remove_cells(grid, &mut remaining, &chosen).expect("corner subsets are removable");
        steps.push(chosen);
    }
    order_from_steps(grid, parts, &steps)
}

/// A random executable order, built by peeling random corner subsets.
pub fn random_order(shape: &StrictPartition, n: u8, rng: &mut impl Rng) -> Result<RectOrder> {
    let grid = Grid::shifted(n);
    grid.validate_parts(shape.parts())?;
    Ok(random_order_parts(grid, shape.parts(), rng))
}

/// A random executable order on the rectangle grid.
pub fn random_order_rect(shape: &Partition, n: u8, rng: &mut impl Rng) -> Result<RectOrder> {
    let grid = Grid::rect(n);
    grid.validate_parts(shape.parts())?;
    Ok(random_order_parts(grid, shape.parts(), rng))
}

/// Double an order: the doubled tableau encodes, for each shifted step, the
/// transposed-copy corners followed by the staircase-copy corners.
pub fn double_order(order: &RectOrder) -> Result<RectOrder> {
    RectOrder::new(double_tableau(order.tableau())?)
}

/// Longest strictly increasing subsequence of a rectangle-grid tableau read
/// along rows, left to right and bottom to top.
pub fn lis(t: &IncreasingTableau) -> Result<u32> {
    if t.grid().is_shifted() {
        return Err(Error::InvalidShape(
            "longest-increasing-subsequence reading is defined for rectangle-grid tableaux".into(),
        ));
    }
    if t.has_x() {
        return Err(Error::NotIncreasing("tableau contains X".into()));
    }
    let mut word: Vec<u8> = Vec::with_capacity(t.num_cells());
    for row in (1..=t.shape().outer_parts().len() as u8).rev() {
        if let Some((a, b)) = t.shape().row_cols(row) {
            for col in a..=b {
                word.push(t.get(Cell::new(row, col)).unwrap().num().unwrap());
            }
        }
    }
    let mut best = 0u32;
    let mut dp = vec![0u32; word.len()];
    for i in 0..word.len() {
        dp[i] = 1;
        for j in 0..i {
            if word[j] < word[i] && dp[j] + 1 > dp[i] {
                dp[i] = dp[j] + 1;
            }
        }
        best = best.max(dp[i]);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::all_skew_pairs;
    use crate::tableaux::{is_superstandard, superstandard};
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn sp(parts: &[u8]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn skew(n: u8, inner: &[u8], outer: &[u8]) -> SkewShape {
        SkewShape::shifted(n, &sp(inner), &sp(outer)).unwrap()
    }

    fn tab(n: u8, inner: &[u8], outer: &[u8], cells: &[(u8, u8, u8)]) -> IncreasingTableau {
        let pairs: Vec<(Cell, Label)> = cells
            .iter()
            .map(|&(r, c, v)| (Cell::new(r, c), Label::Num(v)))
            .collect();
        IncreasingTableau::from_cells(skew(n, inner, outer), &pairs).unwrap()
    }

    /// The running example: a skew tableau of shape (4,3,1)/(3,1).
    fn example_tableau(n: u8) -> IncreasingTableau {
        tab(
            n,
            &[3, 1],
            &[4, 3, 1],
            &[(1, 4, 1), (2, 3, 1), (2, 4, 3), (3, 3, 2)],
        )
    }

    #[test]
    fn switch_on_six_box_ribbon() {
        use RibbonSymbol::{First, Second};
        // Free-standing ribbon: bullet = First, circle = Second.
        let r = Ribbon::new(vec![
            (Cell::new(1, 4), First),
            (Cell::new(2, 2), Second),
            (Cell::new(2, 3), First),
            (Cell::new(3, 1), Second),
            (Cell::new(3, 2), First),
            (Cell::new(4, 1), First),
        ]);
        // (1,4) is disconnected from the rest, so as a single ribbon this is
        // invalid; the display is a union of two ribbons.
        assert!(r.is_err());
        let main = Ribbon::new(vec![
            (Cell::new(2, 2), Second),
            (Cell::new(2, 3), First),
            (Cell::new(3, 1), Second),
            (Cell::new(3, 2), First),
            (Cell::new(4, 1), First),
        ])
        .unwrap();
        let switched = main.switch();
        let expect: Vec<(Cell, RibbonSymbol)> = vec![
            (Cell::new(2, 2), First),
            (Cell::new(2, 3), Second),
            (Cell::new(3, 1), First),
            (Cell::new(3, 2), Second),
            (Cell::new(4, 1), Second),
        ];
        assert_eq!(switched.cells(), &expect[..]);
        let single = Ribbon::new(vec![(Cell::new(1, 4), First)]).unwrap();
        assert_eq!(single.switch(), single);
        let pair = Ribbon::new(vec![(Cell::new(1, 1), First), (Cell::new(1, 2), Second)]).unwrap();
        assert_eq!(
            pair.switch().cells(),
            &[(Cell::new(1, 1), Second), (Cell::new(1, 2), First)][..]
        );
    }

    #[test]
    fn ribbon_rejects_bad_input() {
        use RibbonSymbol::{First, Second};
        // Same symbol adjacent.
        assert!(Ribbon::new(vec![(Cell::new(1, 1), First), (Cell::new(1, 2), First)]).is_err());
        // 2x2 block.
        assert!(Ribbon::new(vec![
            (Cell::new(1, 1), First),
            (Cell::new(1, 2), Second),
            (Cell::new(2, 1), Second),
            (Cell::new(2, 2), First),
        ])
        .is_err());
        // Three in a row.
        assert!(Ribbon::new(vec![
            (Cell::new(1, 1), First),
            (Cell::new(1, 2), Second),
            (Cell::new(1, 3), First),
        ])
        .is_err());
    }

    #[test]
    fn kjdt_example_frames() {
        let t = example_tableau(4);
        let corners = [Cell::new(1, 3), Cell::new(2, 2)];
        let (result, trace) = kjdt_traced(&t, &corners).unwrap();
        let frames: Vec<String> = trace.frames().iter().map(|f| f.render_text()).collect();
        assert_eq!(
            frames,
            vec![
                ". . * 1\n* 1 3\n2\n",
                ". . 1 *\n1 * 3\n2\n",
                ". . 1 *\n1 2 3\n*\n",
                ". . 1 3\n1 2 *\n*\n",
            ]
        );
        assert_eq!(result.shape().inner_parts(), &[2]);
        assert_eq!(result.shape().outer_parts(), &[4, 2]);
        assert_eq!(result.render_text(), ". . 1 3\n1 2\n");
    }

    #[test]
    fn kjdt_single_box() {
        let t = tab(3, &[1], &[2], &[(1, 2, 1)]);
        let moved = kjdt(&t, &[Cell::new(1, 1)]).unwrap();
        assert_eq!(moved.render_text(), "1\n");
        assert_eq!(moved.shape().outer_parts(), &[1]);
    }

    #[test]
    fn kjdt_rejects_bad_corners() {
        let t = example_tableau(4);
        assert!(kjdt(&t, &[]).is_err());
        // (1,1) is not maximally southeast in (3,1).
        assert!(kjdt(&t, &[Cell::new(1, 1)]).is_err());
        // (1,2) has (2,2) below it in (3,1)? No: (2,2) is in lambda, so
        // (1,2) is not an inner corner either.
        assert!(kjdt(&t, &[Cell::new(1, 2)]).is_err());
    }

    #[test]
    fn label_set_preserved_exhaustively() {
        // Every skew shape with at most 6 cells in rank 4, every packed
        // filling, every nonempty subset of inner corners.
        let n = 4u8;
        let mut cases = 0u64;
        for (inner, outer) in all_skew_pairs(n) {
            let shape = SkewShape::shifted(n, &inner, &outer).unwrap();
            let k = shape.num_cells();
            if k == 0 || k > 6 {
                continue;
            }
            let corners = parts_inner_corners(Grid::shifted(n), shape.inner_parts());
            if corners.is_empty() {
                continue;
            }
            for m in 1..=k as u8 {
                for t in enumerate_increasing(&shape, m, false) {
                    for mask in 1u32..(1 << corners.len()) {
                        let subset: Vec<Cell> = corners
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| mask & (1 << i) != 0)
                            .map(|(_, &c)| c)
                            .collect();
                        let moved = kjdt(&t, &subset).unwrap();
                        assert_eq!(moved.label_set(), t.label_set());
                        cases += 1;
                    }
                }
            }
        }
        assert!(cases > 400, "only {} cases exercised", cases);
    }

    #[test]
    fn rectify_example_to_superstandard_row_shape() {
        // Finishing the slide sequence of the running example under the
        // greedy order ends at the superstandard single row of length 3.
        let t = example_tableau(4);
        let order = canonical_order(&sp(&[3, 1]), 4).unwrap();
        assert_eq!(
            order.tableau().render_text(),
            "1 2 3\n3\n",
        );
        let result = rectify(&t, &order).unwrap();
        assert_eq!(result, superstandard(&sp(&[3]), 4).unwrap());
        // Order independence for this tableau.
        for o in all_orders(&sp(&[3, 1]), 4, false).unwrap() {
            assert_eq!(rectify(&t, &o).unwrap(), result);
        }
    }

    #[test]
    fn rectify_known_witnesses() {
        // The six fillings of (5,3,1)/(3,1) that rectify to the
        // superstandard tableau of shape (3,1), under every order.
        let witnesses = [
            [(1u8, 4u8, 1u8), (1, 5, 3), (2, 3, 1), (2, 4, 4), (3, 3, 2)],
            [(1, 4, 2), (1, 5, 3), (2, 3, 1), (2, 4, 4), (3, 3, 2)],
            [(1, 4, 1), (1, 5, 3), (2, 3, 2), (2, 4, 4), (3, 3, 4)],
            [(1, 4, 1), (1, 5, 3), (2, 3, 2), (2, 4, 3), (3, 3, 4)],
            [(1, 4, 2), (1, 5, 3), (2, 3, 1), (2, 4, 4), (3, 3, 4)],
            [(1, 4, 1), (1, 5, 3), (2, 3, 1), (2, 4, 2), (3, 3, 4)],
        ];
        let target = superstandard(&sp(&[3, 1]), 5).unwrap();
        let orders = all_orders(&sp(&[3, 1]), 5, false).unwrap();
        assert!(!orders.is_empty());
        for w in &witnesses {
            let t = tab(5, &[3, 1], &[5, 3, 1], w);
            for o in &orders {
                assert_eq!(rectify(&t, o).unwrap(), target);
            }
        }
    }

    #[test]
    fn rectify_straight_tableau() {
        let t = superstandard(&sp(&[2, 1]), 3).unwrap();
        let empty = RectOrder::empty(Grid::shifted(3));
        assert_eq!(rectify(&t, &empty).unwrap(), t);
        // Nonempty order on a straight tableau is a contract violation.
        let bad = canonical_order(&sp(&[1]), 3).unwrap();
        assert!(rectify(&t, &bad).is_err());
    }

    #[test]
    fn every_packed_increasing_filling_encodes_an_order() {
        // In an increasing tableau any box right of or below a cell of the
        // current maximal label would have to hold a larger label, so label
        // groups are always corner sets: the dry run accepts every packed
        // increasing filling. Check that on every shape up to 6 cells.
        let n = 4u8;
        for lam in StrictPartition::all_fitting(n) {
            if lam.size() > 6 {
                continue;
            }
            let skew = SkewShape::straight_shifted(n, &lam).unwrap();
            let mut count = 0usize;
            for m in 1..=lam.size() as u8 {
                for t in enumerate_increasing(&skew, m, false) {
                    assert!(order_is_executable(&RectOrder::new(t).unwrap()));
                    count += 1;
                }
            }
            let orders = all_orders(&lam, n, false).unwrap();
            let expected = if lam.is_empty() { 1 } else { count };
            assert_eq!(orders.len(), expected, "shape {}", lam);
        }
    }

    #[test]
    fn rectify_rejects_mismatched_order() {
        // Order shape must equal the inner shape.
        let t = tab(3, &[2, 1], &[3, 2, 1], &[(1, 3, 1), (2, 3, 2), (3, 3, 3)]);
        let wrong = canonical_order(&sp(&[2]), 3).unwrap();
        assert!(matches!(rectify(&t, &wrong), Err(Error::InvalidOrder(_))));
        // Grid rank must match too.
        let wrong_rank = canonical_order(&sp(&[2, 1]), 4).unwrap();
        assert!(matches!(rectify(&t, &wrong_rank), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn canonical_order_examples() {
        let o = canonical_order(&sp(&[1]), 3).unwrap();
        assert_eq!(o.tableau().render_text(), "1\n");
        let o = canonical_order(&sp(&[4]), 4).unwrap();
        assert_eq!(o.tableau().render_text(), "1 2 3 4\n");
        let o = canonical_order(&sp(&[2, 1]), 3).unwrap();
        assert_eq!(o.tableau().render_text(), "1 2\n3\n");
        assert!(order_is_executable(&o));
        let o = canonical_order(&sp(&[3, 1]), 4).unwrap();
        assert!(order_is_executable(&o));
        assert!(order_is_executable(&canonical_order(&StrictPartition::staircase(4), 4).unwrap()));
    }

    /// Independent oracle for order enumeration: try all label functions,
    /// filter increasing + packed, and dry-run on plain cell sets.
    fn naive_orders(shape: &StrictPartition, n: u8) -> BTreeSet<String> {
        let grid = Grid::shifted(n);
        let cells = shape.cells(grid).unwrap();
        let k = cells.len();
        let mut found = BTreeSet::new();
        if k == 0 {
            found.insert(String::new());
            return found;
        }
        for m in 1..=k as u8 {
            let mut assign = vec![1u8; k];
            loop {
                if is_valid_encoding(&cells, &assign, m) {
                    let t = IncreasingTableau::from_cells(
                        SkewShape::straight_shifted(n, shape).unwrap(),
                        &cells
                            .iter()
                            .zip(&assign)
                            .map(|(&c, &v)| (c, Label::Num(v)))
                            .collect::<Vec<_>>(),
                    )
                    .unwrap();
                    found.insert(t.render_text());
                }
                // Next assignment in base m.
                let mut i = 0;
                loop {
                    if i == k {
                        break;
                    }
                    if assign[i] < m {
                        assign[i] += 1;
                        break;
                    }
                    assign[i] = 1;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        found
    }

    fn is_valid_encoding(cells: &[Cell], assign: &[u8], m: u8) -> bool {
        use std::collections::HashSet;
        // Increasing rows/columns.
        for (i, &a) in cells.iter().enumerate() {
            for (j, &b) in cells.iter().enumerate() {
                let row_adj = a.row == b.row && b.col == a.col + 1;
                let col_adj = a.col == b.col && b.row == a.row + 1;
                if (row_adj || col_adj) && assign[j] <= assign[i] {
                    return false;
                }
            }
        }
        // Packed.
        let used: HashSet<u8> = assign.iter().copied().collect();
        if used.len() as u8 != m || *used.iter().max().unwrap() != m {
            return false;
        }
        // Dry run on cell sets.
        let mut remaining: HashSet<Cell> = cells.iter().copied().collect();
        for v in (1..=m).rev() {
            let group: Vec<Cell> = cells
                .iter()
                .zip(assign)
                .filter(|&(_, &a)| a == v)
                .map(|(&c, _)| c)
                .collect();
            for &c in &group {
                if remaining.contains(&c.east()) || remaining.contains(&c.south()) {
                    return false;
                }
            }
            for &c in &group {
                remaining.remove(&c);
            }
        }
        remaining.is_empty()
    }

    #[test]
    fn all_orders_matches_naive_oracle() {
        let n = 4u8;
        for lam in StrictPartition::all_fitting(n) {
            if lam.size() > 6 {
                continue;
            }
            let fast: BTreeSet<String> = all_orders(&lam, n, false)
                .unwrap()
                .iter()
                .map(|o| o.tableau().render_text())
                .collect();
            let slow = naive_orders(&lam, n);
            assert_eq!(fast, slow, "shape {}", lam);
        }
    }

    #[test]
    fn all_orders_counts() {
        assert_eq!(all_orders(&sp(&[]), 3, false).unwrap().len(), 1);
        assert_eq!(all_orders(&sp(&[1]), 3, false).unwrap().len(), 1);
        assert_eq!(all_orders(&sp(&[2]), 3, false).unwrap().len(), 1);
        assert_eq!(all_orders(&sp(&[2, 1]), 3, false).unwrap().len(), 1);
        assert_eq!(all_orders(&sp(&[3, 1]), 4, false).unwrap().len(), 3);
        assert!(matches!(
            all_orders(&StrictPartition::staircase(4), 4, false),
            Err(Error::SizeGuard(_))
        ));
        assert!(all_orders(&StrictPartition::staircase(4), 4, true).is_ok());
    }

    #[test]
    fn order_independence_rank_2() {
        let n = 2u8;
        for (inner, outer) in all_skew_pairs(n) {
            let shape = SkewShape::shifted(n, &inner, &outer).unwrap();
            let orders = all_orders(&inner, n, false).unwrap();
            for m in 0..=shape.num_cells() as u8 {
                for t in enumerate_increasing(&shape, m, false) {
                    let results: BTreeSet<String> = orders
                        .iter()
                        .map(|o| rectify(&t, o).unwrap().render_text())
                        .collect();
                    let any_superstandard = orders
                        .iter()
                        .any(|o| is_superstandard(&rectify(&t, o).unwrap()));
                    if any_superstandard {
                        assert_eq!(results.len(), 1, "tableau {:?}", t.render_text());
                    }
                }
            }
        }
    }

    #[test]
    fn infusion_degenerate_cases() {
        // Empty outer tableau: the record reproduces the order tableau.
        let r = superstandard(&sp(&[2, 1]), 3).unwrap();
        let empty_t = IncreasingTableau::new(skew(3, &[2, 1], &[2, 1]), vec![]).unwrap();
        let (first, second) = infusion(&r, &empty_t).unwrap();
        assert!(first.is_empty());
        assert_eq!(second.shape().outer_parts(), &[2, 1]);
        assert_eq!(second.entries(), r.entries());

        // Empty inner tableau: the outer tableau is unchanged.
        let t = tab(3, &[1], &[2], &[(1, 2, 1)]);
        let empty_r = IncreasingTableau::new(skew(3, &[1], &[1]), vec![]).unwrap();
        let (first, second) = infusion(&empty_r, &t).unwrap();
        assert_eq!(first, t);
        assert!(second.is_empty());
    }

    #[test]
    fn infusion_involution_small() {
        // Exhaustive at rank 2; rank 3 runs in the acceptance suite.
        let n = 2u8;
        let shapes = StrictPartition::all_fitting(n);
        let mut cases = 0u64;
        for alpha in &shapes {
            for lambda in shapes.iter().filter(|l| l.contains(alpha)) {
                for nu in shapes.iter().filter(|v| v.contains(lambda)) {
                    let rshape = SkewShape::shifted(n, alpha, lambda).unwrap();
                    let tshape = SkewShape::shifted(n, lambda, nu).unwrap();
                    for rm in 0..=rshape.num_cells() as u8 {
                        for r in enumerate_increasing(&rshape, rm, false) {
                            for tm in 0..=tshape.num_cells() as u8 {
                                for t in enumerate_increasing(&tshape, tm, false) {
                                    match infusion(&r, &t) {
                                        Ok((a, b)) => {
                                            let (rr, tt) = infusion(&a, &b).unwrap();
                                            assert_eq!((rr, tt), (r.clone(), t.clone()));
                                            cases += 1;
                                        }
                                        Err(Error::InvalidOrder(_)) => {}
                                        Err(e) => panic!("unexpected error: {}", e),
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(cases > 10);
    }

    #[test]
    fn lis_examples() {
        let n = 3u8;
        let row = Partition::new(vec![3]).unwrap();
        let t = IncreasingTableau::new(
            SkewShape::straight_rect(n, &row).unwrap(),
            vec![Label::Num(1), Label::Num(2), Label::Num(3)],
        )
        .unwrap();
        assert_eq!(lis(&t).unwrap(), 3);

        let col = Partition::new(vec![1, 1, 1]).unwrap();
        let t = IncreasingTableau::new(
            SkewShape::straight_rect(n, &col).unwrap(),
            vec![Label::Num(1), Label::Num(2), Label::Num(3)],
        )
        .unwrap();
        assert_eq!(lis(&t).unwrap(), 1);

        let shifted = superstandard(&sp(&[2]), 3).unwrap();
        assert!(lis(&shifted).is_err());
    }

    #[test]
    fn lis_of_doubled_example() {
        let t = example_tableau(5);
        let d = double_tableau(&t).unwrap();
        assert_eq!(lis(&d).unwrap(), 3);
        // First-row length of any rectification equals the reading
        // statistic, so the doubled example rectifies to a first row of 3.
        let order = canonical_order(&sp(&[3, 1]), 5).unwrap();
        let doubled_order = double_order(&order).unwrap();
        let rect = rectify(&d, &doubled_order).unwrap();
        assert_eq!(rect.shape().outer_part(1) as u32, 3);
    }

    #[test]
    fn doubling_commutes_with_rectification_rank_2() {
        let n = 2u8;
        for (inner, outer) in all_skew_pairs(n) {
            let shape = SkewShape::shifted(n, &inner, &outer).unwrap();
            let orders = all_orders(&inner, n, false).unwrap();
            for m in 0..=shape.num_cells() as u8 {
                for t in enumerate_increasing(&shape, m, false) {
                    for o in &orders {
                        let direct = double_tableau(&rectify(&t, o).unwrap()).unwrap();
                        let via_rect =
                            rectify(&double_tableau(&t).unwrap(), &double_order(o).unwrap())
                                .unwrap();
                        assert_eq!(direct, via_rect);
                    }
                }
            }
        }
    }

    #[test]
    fn lis_rank4_sampled() {
        // First-row lengths at rank 4, on sampled fillings and orders (rank
        // 3 is exhausted in the acceptance suite).
        use crate::tableaux::random_filling;
        let n = 4u8;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let shapes = Partition::all_fitting_rect(n);
        let mut pairs = Vec::new();
        for outer in &shapes {
            for inner in &shapes {
                if outer.contains(inner) {
                    pairs.push((inner.clone(), outer.clone()));
                }
            }
        }
        let mut cases = 0u32;
        while cases < 500 {
            let (inner, outer) = &pairs[rng.gen_range(0..pairs.len())];
            let shape = SkewShape::rect(n, inner, outer).unwrap();
            let m = rng.gen_range(0..=shape.num_cells()) as u8;
            let Some(t) = random_filling(&shape, m, &mut rng) else {
                continue;
            };
            let expected = lis(&t).unwrap();
            for _ in 0..3 {
                let o = random_order_rect(inner, n, &mut rng).unwrap();
                let r = rectify(&t, &o).unwrap();
                assert_eq!(r.shape().outer_part(1) as u32, expected);
            }
            cases += 1;
        }
    }

    #[test]
    fn random_orders_are_executable() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let o = random_order(&sp(&[4, 2, 1]), 4, &mut rng).unwrap();
            assert!(order_is_executable(&o));
        }
        for _ in 0..50 {
            let o = random_order_rect(&Partition::new(vec![3, 2, 2]).unwrap(), 3, &mut rng)
                .unwrap();
            assert!(order_is_executable(&o));
        }
    }

    #[test]
    fn trace_replay_is_consistent() {
        let t = example_tableau(4);
        let corners = [Cell::new(1, 3), Cell::new(2, 2)];
        let (result, trace) = kjdt_traced(&t, &corners).unwrap();
        for w in trace.steps.windows(2) {
            assert_eq!(w[0].after, w[1].before);
        }
        let last = &trace.steps.last().unwrap().after;
        let final_numeric: Vec<(Cell, u8)> = last
            .cells()
            .iter()
            .filter_map(|&(c, v)| v.map(|k| (c, k)))
            .collect();
        let from_result: Vec<(Cell, u8)> = result
            .cells_with_labels()
            .map(|(c, l)| (c, l.num().unwrap()))
            .collect();
        assert_eq!(final_numeric, from_result);
    }
}
