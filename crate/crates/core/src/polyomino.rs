//! Polyominoes, their grid graphs and triangulations.
//!
//! Cells are lattice points `(x, y)` naming the unit square with that lower
//! left corner; `x` grows to the right and `y` upwards. Grid-graph vertices
//! are square corners, numbered top row first and left to right within a
//! row, so the 3x3 grid of a 2x2 square reads
//!
//! ```text
//! 0 1 2
//! 3 4 5
//! 6 7 8
//! ```

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semitrans::Orientation;
use crate::words::Word;

pub type Cell = (i32, i32);
pub type Corner = (i32, i32);

const NEIGHBOURS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
}

impl Polyomino {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Polyomino> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let Some(&start) = cells.iter().next() else {
            return Err(Error::BadPolyomino);
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in NEIGHBOURS {
                let next = (x + dx, y + dy);
                if cells.contains(&next) && seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Error::BadPolyomino);
        }
        Ok(Polyomino { cells })
    }

    /// `width x height` block of cells with lower left cell `(0, 0)`.
    pub fn rectangle(width: i32, height: i32) -> Polyomino {
        assert!(width > 0 && height > 0);
        let cells = (0..width).flat_map(|x| (0..height).map(move |y| (x, y)));
        Polyomino::new(cells).expect("rectangles are connected")
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// `(min_x, min_y, max_x, max_y)` over cells.
    pub fn bounds(&self) -> (i32, i32, i32, i32) {
        let xs = self.cells.iter().map(|c| c.0);
        let ys = self.cells.iter().map(|c| c.1);
        (
            xs.clone().min().expect("non-empty"),
            ys.clone().min().expect("non-empty"),
            xs.max().expect("non-empty"),
            ys.max().expect("non-empty"),
        )
    }

    pub fn is_rectangle(&self) -> bool {
        let (x0, y0, x1, y1) = self.bounds();
        self.len() == ((x1 - x0 + 1) * (y1 - y0 + 1)) as usize
    }

    /// Every row of cells is one contiguous run.
    pub fn is_row_convex(&self) -> bool {
        let mut rows: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        for &(x, y) in &self.cells {
            rows.entry(y).or_default().push(x);
        }
        rows.values().all(|xs| contiguous(xs))
    }

    /// Every column of cells is one contiguous run.
    pub fn is_column_convex(&self) -> bool {
        let mut cols: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        for &(x, y) in &self.cells {
            cols.entry(x).or_default().push(y);
        }
        cols.values().all(|ys| contiguous(ys))
    }

    pub fn is_convex(&self) -> bool {
        self.is_row_convex() && self.is_column_convex()
    }

    /// Translated so the smallest x and y are both 0.
    pub fn normalized(&self) -> Polyomino {
        let (x0, y0, _, _) = self.bounds();
        Polyomino {
            cells: self.cells.iter().map(|&(x, y)| (x - x0, y - y0)).collect(),
        }
    }

    /// Quarter turn clockwise: `(x, y) -> (y, max_x - x)`.
    pub fn rotated(&self) -> Polyomino {
        let (_, _, x1, _) = self.bounds();
        Polyomino {
            cells: self.cells.iter().map(|&(x, y)| (y, x1 - x)).collect(),
        }
    }

    /// `#` for a cell, `.` for a gap, top line is the highest row.
    pub fn to_ascii(&self) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            for x in x0..=x1 {
                out.push(if self.contains((x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_ascii(text: &str) -> Result<Polyomino> {
        let rows = ascii_rows(text);
        let height = rows.len() as i32;
        let mut cells = Vec::new();
        for (k, line) in rows.iter().enumerate() {
            for (x, ch) in line.chars().enumerate() {
                match ch {
                    '#' => cells.push((x as i32, height - 1 - k as i32)),
                    '.' | ' ' => {}
                    other => {
                        return Err(Error::parse(
                            format!("line {}, column {}", k + 1, x + 1),
                            format!("expected `#` or `.`, found `{other}`"),
                        ))
                    }
                }
            }
        }
        Polyomino::new(cells)
    }

    /// Every corner of every cell, ordered top row first, then left to right.
    pub fn corners(&self) -> Vec<Corner> {
        let mut set = BTreeSet::new();
        for &(x, y) in &self.cells {
            for (dx, dy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                set.insert((x + dx, y + dy));
            }
        }
        let mut corners: Vec<Corner> = set.into_iter().collect();
        corners.sort_by_key(|&(x, y)| (std::cmp::Reverse(y), x));
        corners
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

fn contiguous(values: &[i32]) -> bool {
    let lo = values.iter().min().expect("non-empty");
    let hi = values.iter().max().expect("non-empty");
    (hi - lo + 1) as usize == values.len()
}

fn ascii_rows(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.trim_end())
        .filter(|l| !l.is_empty())
        .collect()
}

/// The diagonal chosen inside one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diagonal {
    /// `/`: lower left to upper right.
    Slash,
    /// `\`: upper left to lower right.
    Backslash,
}

impl Diagonal {
    pub fn flipped(self) -> Diagonal {
        match self {
            Diagonal::Slash => Diagonal::Backslash,
            Diagonal::Backslash => Diagonal::Slash,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Diagonal::Slash => '/',
            Diagonal::Backslash => '\\',
        }
    }

    /// The two corners the diagonal joins in cell `(x, y)`.
    pub fn endpoints(self, (x, y): Cell) -> (Corner, Corner) {
        match self {
            Diagonal::Slash => ((x, y), (x + 1, y + 1)),
            Diagonal::Backslash => ((x, y + 1), (x + 1, y)),
        }
    }
}

/// A grid graph with its corner coordinates. Vertex `i` sits at `corners[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridGraph {
    pub graph: Graph,
    pub corners: Vec<Corner>,
    index: BTreeMap<Corner, usize>,
}

impl GridGraph {
    fn build(p: &Polyomino, extra: impl Fn(Cell) -> Vec<(Corner, Corner)>) -> GridGraph {
        let corners = p.corners();
        let index: BTreeMap<Corner, usize> =
            corners.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut edges = Vec::new();
        for &(x, y) in p.cells() {
            let sides = [
                ((x, y), (x + 1, y)),
                ((x, y + 1), (x + 1, y + 1)),
                ((x, y), (x, y + 1)),
                ((x + 1, y), (x + 1, y + 1)),
            ];
            for (a, b) in sides.into_iter().chain(extra((x, y))) {
                edges.push((index[&a], index[&b]));
            }
        }
        let graph = Graph::from_edges(corners.len(), &edges).expect("corner ids are dense");
        GridGraph {
            graph,
            corners,
            index,
        }
    }

    pub fn vertex_at(&self, corner: Corner) -> Option<usize> {
        self.index.get(&corner).copied()
    }
}

/// Corners as vertices, unit sides of cells as edges.
pub fn grid_graph(p: &Polyomino) -> GridGraph {
    GridGraph::build(p, |_| Vec::new())
}

/// One diagonal per cell of a polyomino.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    base: Polyomino,
    diag: BTreeMap<Cell, Diagonal>,
}

impl Triangulation {
    pub fn new(base: Polyomino, diag: BTreeMap<Cell, Diagonal>) -> Result<Triangulation> {
        let keys: BTreeSet<Cell> = diag.keys().copied().collect();
        if &keys != base.cells() {
            return Err(Error::Precondition(
                "diagonals must be given for exactly the polyomino's cells".into(),
            ));
        }
        Ok(Triangulation { base, diag })
    }

    /// Same diagonal in every cell.
    pub fn uniform(base: Polyomino, d: Diagonal) -> Triangulation {
        let diag = base.cells().iter().map(|&c| (c, d)).collect();
        Triangulation { base, diag }
    }

    pub fn base(&self) -> &Polyomino {
        &self.base
    }

    pub fn diagonals(&self) -> &BTreeMap<Cell, Diagonal> {
        &self.diag
    }

    pub fn diagonal(&self, cell: Cell) -> Option<Diagonal> {
        self.diag.get(&cell).copied()
    }

    /// Diagonals `[top left, top right, bottom left, bottom right]` of the
    /// 2x2 block whose lower left cell is `(x, y)`, if all four cells exist.
    pub fn window(&self, (x, y): Cell) -> Option<[Diagonal; 4]> {
        Some([
            self.diagonal((x, y + 1))?,
            self.diagonal((x + 1, y + 1))?,
            self.diagonal((x, y))?,
            self.diagonal((x + 1, y))?,
        ])
    }

    /// Quarter turn clockwise; each diagonal flips.
    pub fn rotated(&self) -> Triangulation {
        let (_, _, x1, _) = self.base.bounds();
        let diag: BTreeMap<Cell, Diagonal> = self
            .diag
            .iter()
            .map(|(&(x, y), d)| ((y, x1 - x), d.flipped()))
            .collect();
        Triangulation {
            base: self.base.rotated(),
            diag,
        }
    }

    pub fn normalized(&self) -> Triangulation {
        let (x0, y0, _, _) = self.base.bounds();
        Triangulation {
            base: self.base.normalized(),
            diag: self
                .diag
                .iter()
                .map(|(&(x, y), &d)| ((x - x0, y - y0), d))
                .collect(),
        }
    }

    pub fn to_ascii(&self) -> String {
        let (x0, y0, x1, y1) = self.base.bounds();
        let mut out = String::new();
        for y in (y0..=y1).rev() {
            for x in x0..=x1 {
                out.push(self.diagonal((x, y)).map_or('.', Diagonal::as_char));
            }
            out.push('\n');
        }
        out
    }

    /// Same layout as a polyomino, with `/` or `\` in every cell.
    pub fn from_ascii(text: &str) -> Result<Triangulation> {
        let rows = ascii_rows(text);
        let height = rows.len() as i32;
        let mut diag = BTreeMap::new();
        for (k, line) in rows.iter().enumerate() {
            for (x, ch) in line.chars().enumerate() {
                let cell = (x as i32, height - 1 - k as i32);
                match ch {
                    '/' => {
                        diag.insert(cell, Diagonal::Slash);
                    }
                    '\\' => {
                        diag.insert(cell, Diagonal::Backslash);
                    }
                    '.' | ' ' => {}
                    other => {
                        return Err(Error::parse(
                            format!("line {}, column {}", k + 1, x + 1),
                            format!("expected `/`, `\\` or `.`, found `{other}`"),
                        ))
                    }
                }
            }
        }
        let base = Polyomino::new(diag.keys().copied())?;
        Triangulation::new(base, diag)
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// Default cap on the cell count for [`enumerate_triangulations`].
pub const MAX_TRIANGULATION_CELLS: usize = 24;

/// All `2^cells` triangulations. Cells are taken in sorted order and the
/// enumeration counts in binary with `/` as 0, the first cell varying slowest,
/// so the first item is all `/` and the last all `\`.
pub fn enumerate_triangulations(
    p: &Polyomino,
    max_cells: usize,
) -> Result<impl Iterator<Item = Triangulation> + '_> {
    if p.len() > max_cells {
        return Err(Error::Budget(format!(
            "{} cells exceed the triangulation bound {max_cells}",
            p.len()
        )));
    }
    let cells: Vec<Cell> = p.cells().iter().copied().collect();
    let k = cells.len();
    Ok((0u64..1 << k).map(move |mask| {
        let diag = cells
            .iter()
            .enumerate()
            .map(|(pos, &c)| {
                let bit = (mask >> (k - 1 - pos)) & 1;
                (
                    c,
                    if bit == 0 {
                        Diagonal::Slash
                    } else {
                        Diagonal::Backslash
                    },
                )
            })
            .collect();
        Triangulation {
            base: p.clone(),
            diag,
        }
    }))
}

/// Grid graph plus each cell's chosen diagonal.
pub fn triangulation_grid(t: &Triangulation) -> GridGraph {
    GridGraph::build(&t.base, |cell| vec![t.diag[&cell].endpoints(cell)])
}

pub fn triangulation_graph(t: &Triangulation) -> Graph {
    triangulation_grid(t).graph
}

/// `T1` on the 2x2 square: `/` everywhere except the top right cell.
pub fn t1() -> Triangulation {
    square_pattern([
        Diagonal::Slash,
        Diagonal::Backslash,
        Diagonal::Slash,
        Diagonal::Slash,
    ])
}

/// `T2` on the 2x2 square: `\` everywhere except the top right cell.
pub fn t2() -> Triangulation {
    square_pattern([
        Diagonal::Backslash,
        Diagonal::Slash,
        Diagonal::Backslash,
        Diagonal::Backslash,
    ])
}

/// 2x2 square from `[top left, top right, bottom left, bottom right]`.
pub fn square_pattern(p: [Diagonal; 4]) -> Triangulation {
    let diag = BTreeMap::from([
        ((0, 1), p[0]),
        ((1, 1), p[1]),
        ((0, 0), p[2]),
        ((1, 0), p[3]),
    ]);
    Triangulation {
        base: Polyomino::rectangle(2, 2),
        diag,
    }
}

/// `T1`, `T2` and their rotations by multiples of 90 degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    pub patterns: Vec<Triangulation>,
}

impl ForbiddenSet {
    pub fn windows(&self) -> Vec<[Diagonal; 4]> {
        self.patterns
            .iter()
            .map(|t| t.window((0, 0)).expect("2x2 pattern"))
            .collect()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.patterns.iter().map(triangulation_graph).collect()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

/// Members in the order `T1, T1 90, T1 180, T1 270, T2, T2 90, ...`.
pub fn forbidden_set() -> ForbiddenSet {
    let mut patterns = Vec::with_capacity(8);
    for base in [t1(), t2()] {
        let mut t = base;
        for _ in 0..4 {
            let next = t.rotated();
            patterns.push(t);
            t = next;
        }
    }
    ForbiddenSet { patterns }
}

/// Lower left cell of the first 2x2 block (in cell order) whose diagonals
/// match a member of the forbidden set.
pub fn find_forbidden(t: &Triangulation) -> Option<Cell> {
    let windows = forbidden_set().windows();
    t.base
        .cells()
        .iter()
        .copied()
        .find(|&c| t.window(c).is_some_and(|w| windows.contains(&w)))
}

pub fn contains_forbidden(t: &Triangulation) -> bool {
    find_forbidden(t).is_some()
}

/// Grid graph with both diagonals in every cell (each 4-cycle becomes a K4).
pub fn k4_grid(p: &Polyomino) -> GridGraph {
    GridGraph::build(p, |cell| {
        vec![
            Diagonal::Slash.endpoints(cell),
            Diagonal::Backslash.endpoints(cell),
        ]
    })
}

pub fn k4_substitution(p: &Polyomino) -> Graph {
    k4_grid(p).graph
}

/// Which vertices act as horizontal sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourcePattern {
    /// Source iff row + column is even: sources and sinks alternate along
    /// every row and never stack vertically.
    Staggered,
    /// Source iff the column is even, the same in every row.
    ColumnAligned,
}

/// Orientation of the K4-substituted polyomino: horizontal edges run from
/// source to sink according to `pattern`, every other edge points down.
/// Rows and columns are counted from the top left of the bounding box.
pub fn k4_canonical_orientation(p: &Polyomino, pattern: SourcePattern) -> Orientation {
    let grid = k4_grid(p);
    let (x0, _, _, y1) = p.bounds();
    let top = y1 + 1;
    let is_source = |(x, y): Corner| {
        let (r, c) = (top - y, x - x0);
        match pattern {
            SourcePattern::Staggered => (r + c) % 2 == 0,
            SourcePattern::ColumnAligned => c % 2 == 0,
        }
    };
    let arcs: Vec<(usize, usize)> = grid
        .graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = (grid.corners[u], grid.corners[v]);
            if a.1 == b.1 {
                if is_source(a) {
                    (u, v)
                } else {
                    (v, u)
                }
            } else if a.1 > b.1 {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    Orientation::from_arcs(grid.graph, &arcs).expect("arcs follow graph edges")
}

/// The K4-substituted `n x 2` vertex strip. Row `i` from the top (1-based)
/// holds ids `2i` (left) and `2i + 1` (right), matching primed words.
pub fn k4_strip(n: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::with_vertices(vec![2, 3], &[(2, 3)]).expect("K2");
    }
    let strip = Polyomino::new((0..(n as i32 - 1)).map(|y| (0, y))).expect("vertical strip");
    k4_substitution(&strip)
        .relabel(|id| id + 2)
        .expect("shift is injective")
}

/// `1 1' 2 2' 1 1' 3 3' 2 2' ... n n' (n-1) (n-1)'` with `i -> 2i` and
/// `i' -> 2i + 1`; represents [`k4_strip`]`(n)`.
pub fn strip_word(n: usize) -> Word {
    assert!(n >= 1);
    let mut blocks = vec![1];
    for k in 2..=n {
        blocks.push(k);
        blocks.push(k - 1);
    }
    Word::new(
        blocks
            .into_iter()
            .flat_map(|b| [2 * b, 2 * b + 1])
            .collect(),
    )
}

/// All fixed polyominoes (translation classes) with at most `max_cells`
/// cells, normalized, in increasing size then lexicographic cell order.
pub fn enumerate_polyominoes(max_cells: usize) -> Vec<Polyomino> {
    let mut all = Vec::new();
    if max_cells == 0 {
        return all;
    }
    let mut level: BTreeSet<Polyomino> = BTreeSet::from([Polyomino::rectangle(1, 1)]);
    for size in 1..=max_cells {
        all.extend(level.iter().cloned());
        if size == max_cells {
            break;
        }
        let mut next: HashSet<Polyomino> = HashSet::new();
        for p in &level {
            for &(x, y) in p.cells() {
                for (dx, dy) in NEIGHBOURS {
                    let c = (x + dx, y + dy);
                    if p.contains(c) {
                        continue;
                    }
                    let mut cells = p.cells.clone();
                    cells.insert(c);
                    next.insert(Polyomino { cells }.normalized());
                }
            }
        }
        level = next.into_iter().collect();
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_empty_and_disconnected() {
        assert_eq!(Polyomino::new([]), Err(Error::BadPolyomino));
        assert_eq!(Polyomino::new([(0, 0), (1, 1)]), Err(Error::BadPolyomino));
    }

    #[test]
    fn convexity() {
        assert!(Polyomino::rectangle(3, 2).is_convex());
        let l = Polyomino::new([(0, 0), (1, 0), (0, 1)]).unwrap();
        assert!(l.is_convex());
        let u = Polyomino::new([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]).unwrap();
        assert!(!u.is_row_convex());
        assert!(u.is_column_convex());
    }

    #[test]
    fn grid_graph_counts() {
        let single = grid_graph(&Polyomino::rectangle(1, 1)).graph;
        assert_eq!((single.order(), single.size()), (4, 4));
        let sq = grid_graph(&Polyomino::rectangle(2, 2)).graph;
        assert_eq!((sq.order(), sq.size()), (9, 12));
        for (m, n) in [(1, 3), (2, 5), (4, 3)] {
            let g = grid_graph(&Polyomino::rectangle(m, n)).graph;
            let (m, n) = (m as usize, n as usize);
            assert_eq!(g.order(), (m + 1) * (n + 1));
            assert_eq!(g.size(), m * (n + 1) + n * (m + 1));
        }
    }

    #[test]
    fn corner_numbering_reads_top_down() {
        let grid = grid_graph(&Polyomino::rectangle(2, 2));
        assert_eq!(grid.corners[0], (0, 2));
        assert_eq!(grid.corners[2], (2, 2));
        assert_eq!(grid.corners[8], (2, 0));
        assert_eq!(grid.vertex_at((1, 1)), Some(4));
    }

    #[test]
    fn single_cell_triangulations() {
        let cell = Polyomino::rectangle(1, 1);
        let all: Vec<_> = enumerate_triangulations(&cell, 24).unwrap().collect();
        assert_eq!(all.len(), 2);
        let g = triangulation_graph(&all[0]);
        assert_eq!(g.size(), 5);
        // "/" joins lower left (vertex 2) and upper right (vertex 1)
        assert!(g.has_edge(1, 2));
        assert!(!contains_forbidden(&all[0]));
    }

    #[test]
    fn enumeration_order_and_bound() {
        let sq = Polyomino::rectangle(2, 2);
        let all: Vec<_> = enumerate_triangulations(&sq, 24).unwrap().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], Triangulation::uniform(sq.clone(), Diagonal::Slash));
        assert_eq!(
            all[15],
            Triangulation::uniform(sq.clone(), Diagonal::Backslash)
        );
        assert!(matches!(
            enumerate_triangulations(&sq, 3),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn rotation_has_order_four() {
        for t in forbidden_set().patterns {
            let back = t.rotated().rotated().rotated().rotated();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn forbidden_members_are_distinct() {
        let windows = forbidden_set().windows();
        let distinct: BTreeSet<_> = windows.iter().collect();
        assert_eq!(windows.len(), 8);
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn ascii_round_trip() {
        let t = t1();
        assert_eq!(t.to_ascii(), "/\\\n//\n");
        assert_eq!(Triangulation::from_ascii(&t.to_ascii()).unwrap(), t);
        let p = Polyomino::from_ascii("##.\n.##\n").unwrap();
        assert_eq!(p.to_ascii(), "##.\n.##\n");
        assert!(matches!(
            Polyomino::from_ascii("#x"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn fixed_polyomino_counts() {
        let all = enumerate_polyominoes(6);
        let count = |k| all.iter().filter(|p| p.len() == k).count();
        assert_eq!(
            (1..=6).map(count).collect::<Vec<_>>(),
            vec![1, 2, 6, 19, 63, 216]
        );
    }

    #[test]
    fn k4_of_single_cell_is_k4() {
        assert_eq!(
            k4_substitution(&Polyomino::rectangle(1, 1)),
            Graph::complete(4)
        );
    }

    #[test]
    fn strip_words_are_the_stated_prefixes() {
        assert_eq!(strip_word(1), Word::parse("11'").unwrap());
        assert_eq!(strip_word(3), Word::parse("11'22'11'33'22'").unwrap());
        assert_eq!(strip_word(6).len(), 22);
    }
}
