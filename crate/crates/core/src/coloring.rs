//! Vertex colorings: exact k-colorability and the row-by-row greedy
//! procedure for triangulated rectangles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polyomino::{triangulation_grid, Diagonal, Triangulation};

/// Vertex id to color, colors starting at 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    #[serde(rename = "colors")]
    assign: BTreeMap<usize, u32>,
}

impl Coloring {
    /// A coloring of `g`, checked to be complete and proper.
    pub fn for_graph(g: &Graph, assign: BTreeMap<usize, u32>) -> Result<Coloring> {
        let c = Coloring { assign };
        c.check(g, None)?;
        Ok(c)
    }

    /// Unchecked; see [`Coloring::check`].
    pub fn from_map(assign: BTreeMap<usize, u32>) -> Coloring {
        Coloring { assign }
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.assign.get(&v).copied()
    }

    pub fn as_map(&self) -> &BTreeMap<usize, u32> {
        &self.assign
    }

    pub fn num_colors(&self) -> u32 {
        self.assign.values().copied().max().unwrap_or(0)
    }

    /// Every vertex of `g` colored in `1..=max` (if given), adjacent
    /// vertices differently.
    pub fn check(&self, g: &Graph, max: Option<u32>) -> Result<()> {
        for &v in g.vertices() {
            let c = self.get(v).ok_or(Error::Uncolored(v))?;
            let limit = max.unwrap_or(u32::MAX);
            if c == 0 || c > limit {
                return Err(Error::ColorOutOfRange {
                    vertex: v,
                    color: c,
                    max: limit,
                });
            }
        }
        for (u, v) in g.edges() {
            let c = self.assign[&u];
            if c == self.assign[&v] {
                return Err(Error::ImproperColoring(u, v, c));
            }
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("maps of integers serialize")
    }

    pub fn from_json_str(text: &str) -> Result<Coloring> {
        serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })
    }
}

impl FromIterator<(usize, u32)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (usize, u32)>>(iter: I) -> Self {
        Coloring {
            assign: iter.into_iter().collect(),
        }
    }
}

/// A proper coloring with at most `k` colors, if one exists.
///
/// Exhaustive backtracking that always extends the uncolored vertex with
/// the most distinct neighbour colors (ties: higher degree, then lower
/// index). A new color is only ever introduced as the next unused one.
pub fn is_k_colorable(g: &Graph, k: u32) -> Option<Coloring> {
    assert!(k >= 1, "k must be positive");
    let n = g.order();
    let mut color = vec![0u32; n];
    if !dsatur(g, k, &mut color, 0, 0) {
        return None;
    }
    Some((0..n).map(|i| (g.id(i), color[i])).collect())
}

fn dsatur(g: &Graph, k: u32, color: &mut [u32], done: usize, used: u32) -> bool {
    let n = g.order();
    if done == n {
        return true;
    }
    let mut best: Option<(usize, u32, usize)> = None;
    for v in (0..n).filter(|&v| color[v] == 0) {
        let mut seen = 0u64;
        for w in g.neighbors(v) {
            if color[w] != 0 {
                seen |= 1 << color[w];
            }
        }
        let sat = seen.count_ones();
        let deg = g.degree(v);
        if best.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
            best = Some((v, sat, deg));
        }
    }
    let (v, _, _) = best.expect("an uncolored vertex remains");
    let limit = k.min(used + 1);
    for c in 1..=limit {
        if g.neighbors(v).any(|w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if dsatur(g, k, color, done + 1, used.max(c)) {
            return true;
        }
    }
    color[v] = 0;
    false
}

/// The three ways a vertex can first be forced to take color 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConflictTag {
    /// Left, upper-left and upper neighbours carry three distinct colors.
    C1,
    /// Left and upper neighbours agree; upper-left and upper-right carry
    /// the other two colors.
    C2,
    /// Left, upper and upper-right neighbours carry three distinct colors,
    /// with the left and upper neighbours joined by a diagonal.
    C3,
}

impl fmt::Display for ConflictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Where the greedy procedure first ran out of colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictCase {
    pub vertex: usize,
    /// Vertex row from the top and column from the left, both 0-based.
    pub row: usize,
    pub col: usize,
    pub tag: ConflictTag,
    /// Colors of the left, upper-left, upper and upper-right neighbours,
    /// renamed to the canonical form of `tag`; `None` off the grid.
    pub window: [Option<u32>; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Complete(Coloring),
    Conflict(ConflictCase),
}

impl GreedyOutcome {
    pub fn is_complete(&self) -> bool {
        matches!(self, GreedyOutcome::Complete(_))
    }
}

/// Colors a triangulated rectangle row by row.
///
/// The two leftmost vertices of the top two rows get colors 1 and 2; each
/// cell of the top cell row then determines its right-hand corners, the one
/// on the cell's diagonal first. Every later vertex, left to right and top to
/// bottom, takes the smallest of 1, 2, 3 unused by its colored neighbours.
/// The first vertex with no such color is reported as a [`ConflictCase`].
pub fn greedy_row_coloring(t: &Triangulation) -> Result<GreedyOutcome> {
    if !t.base().is_rectangle() {
        return Err(Error::Precondition(
            "greedy row coloring needs a full rectangle of cells".into(),
        ));
    }
    let t = t.normalized();
    let (_, _, max_x, max_y) = t.base().bounds();
    let width = (max_x + 2) as usize;
    let top = max_y + 1;
    let grid = triangulation_grid(&t);
    let g = &grid.graph;
    // corner ids are row-major from the top left
    let at = |row: usize, col: usize| row * width + col;
    let mut color = vec![0u32; g.order()];
    let third = |a: u32, b: u32| 6 - a - b;

    color[at(0, 0)] = 1;
    color[at(1, 0)] = 2;
    for c in 0..width - 1 {
        let (tl, bl, tr, br) = (at(0, c), at(1, c), at(0, c + 1), at(1, c + 1));
        match t.diagonal((c as i32, top - 1)).expect("rectangle cell") {
            Diagonal::Slash => {
                color[tr] = third(color[tl], color[bl]);
                color[br] = third(color[bl], color[tr]);
            }
            Diagonal::Backslash => {
                color[br] = third(color[tl], color[bl]);
                color[tr] = third(color[tl], color[br]);
            }
        }
    }

    for v in 2 * width..g.order() {
        let used: Vec<u32> = g
            .neighbors(v)
            .map(|w| color[w])
            .filter(|&c| c != 0)
            .collect();
        match (1..=3).find(|c| !used.contains(c)) {
            Some(c) => color[v] = c,
            None => {
                let (row, col) = (v / width, v % width);
                return classify(&t, &color, width, top, row, col).map(GreedyOutcome::Conflict);
            }
        }
    }
    let coloring: Coloring = (0..g.order()).map(|i| (g.id(i), color[i])).collect();
    debug_assert!(coloring.check(g, Some(3)).is_ok());
    Ok(GreedyOutcome::Complete(coloring))
}

fn classify(
    t: &Triangulation,
    color: &[u32],
    width: usize,
    top: i32,
    row: usize,
    col: usize,
) -> Result<ConflictCase> {
    let vertex = row * width + col;
    let unclassified = Err(Error::UnclassifiedConflict(vertex));
    if col == 0 {
        return unclassified;
    }
    let cell_y = top - row as i32;
    let left_up = t.diagonal((col as i32 - 1, cell_y));
    let right_up = t.diagonal((col as i32, cell_y));
    let up = (row - 1) * width;
    let (l, ul, u) = (color[vertex - 1], color[up + col - 1], color[up + col]);
    let ur = right_up.map(|_| color[up + col + 1]);

    let (tag, rename): (ConflictTag, [(u32, u32); 3]) = match (left_up, right_up) {
        (Some(Diagonal::Backslash), _) if l != u => (ConflictTag::C1, [(l, 1), (ul, 2), (u, 3)]),
        (Some(Diagonal::Backslash), Some(Diagonal::Slash)) => (
            ConflictTag::C2,
            [(l, 1), (ul, 2), (ur.expect("cell exists"), 3)],
        ),
        (Some(Diagonal::Slash), Some(Diagonal::Slash)) => (
            ConflictTag::C3,
            [(l, 1), (u, 2), (ur.expect("cell exists"), 3)],
        ),
        _ => return unclassified,
    };
    let map = |c: u32| {
        rename
            .iter()
            .find(|&&(from, _)| from == c)
            .map(|&(_, to)| to)
    };
    let window = [Some(l), Some(ul), Some(u), ur].map(|c| c.and_then(map));
    if window.iter().take(3).any(Option::is_none) {
        return unclassified;
    }
    Ok(ConflictCase {
        vertex,
        row,
        col,
        tag,
        window,
    })
}
