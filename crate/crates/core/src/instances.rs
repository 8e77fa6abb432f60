//! Named graphs and polyominoes used by the checks and the CLI.
//!
//! Drawn vertex labels `1..=9` on a 3x3 grid read top row first, left
//! to right, and map to ids `0..=8`, which is the corner numbering of
//! [`crate::polyomino::grid_graph`].

use std::collections::BTreeMap;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::polyomino::{Diagonal, Polyomino, Triangulation};

fn grid3_with_diagonals(diagonals: &[(usize, usize)]) -> Graph {
    let grid = [
        (1, 2),
        (2, 3),
        (4, 5),
        (5, 6),
        (7, 8),
        (8, 9),
        (1, 4),
        (4, 7),
        (2, 5),
        (5, 8),
        (3, 6),
        (6, 9),
    ];
    let edges: Vec<(usize, usize)> = grid
        .iter()
        .chain(diagonals)
        .map(|&(a, b)| (a - 1, b - 1))
        .collect();
    Graph::from_edges(9, &edges).expect("labels 1..=9")
}

/// `T1` from its labelled drawing: diagonals 2-4, 2-6, 5-7, 6-8.
pub fn t1_graph() -> Graph {
    grid3_with_diagonals(&[(2, 4), (2, 6), (5, 7), (6, 8)])
}

/// `T2` from its labelled drawing: diagonals 1-5, 3-5, 4-8, 5-9.
pub fn t2_graph() -> Graph {
    grid3_with_diagonals(&[(1, 5), (3, 5), (4, 8), (5, 9)])
}

/// The wheel on six vertices: a 5-cycle `0..5` and hub `5`.
pub fn w5() -> Graph {
    Graph::wheel(5)
}

/// The 3x3 block of cells without its centre and its bottom right cell.
pub fn ring_polyomino() -> Polyomino {
    Polyomino::new([(0, 0), (1, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)])
        .expect("connected ring")
}

/// A non-3-colorable triangulation of [`ring_polyomino`]: `\` everywhere
/// except the right cell of the middle row.
pub fn ring_triangulation() -> Triangulation {
    let diag: BTreeMap<_, _> = ring_polyomino()
        .cells()
        .iter()
        .map(|&c| {
            let d = if c == (2, 1) {
                Diagonal::Slash
            } else {
                Diagonal::Backslash
            };
            (c, d)
        })
        .collect();
    Triangulation::new(ring_polyomino(), diag).expect("all cells covered")
}

/// The 4-coloring drawn with [`ring_triangulation`], keyed by grid-graph id.
pub fn ring_coloring() -> Coloring {
    let by_corner: [((i32, i32), u32); 15] = [
        ((0, 3), 1),
        ((1, 3), 2),
        ((2, 3), 3),
        ((3, 3), 1),
        ((0, 2), 2),
        ((1, 2), 3),
        ((2, 2), 1),
        ((3, 2), 2),
        ((0, 1), 3),
        ((1, 1), 1),
        ((2, 1), 4),
        ((3, 1), 1),
        ((0, 0), 1),
        ((1, 0), 2),
        ((2, 0), 3),
    ];
    let grid = crate::polyomino::triangulation_grid(&ring_triangulation());
    by_corner
        .iter()
        .map(|&(corner, c)| (grid.vertex_at(corner).expect("ring corner"), c))
        .collect()
}

/// The five-cell polyomino shown with its K4 substitution: a 2x2 square with
/// one more cell to the right of its top row.
pub fn k4_example_polyomino() -> Polyomino {
    Polyomino::new([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]).expect("connected")
}
