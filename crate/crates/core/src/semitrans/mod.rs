//! Orientations of graphs and semi-transitivity.
//!
//! An acyclic orientation is semi-transitive when every directed path
//! `v1 -> v2 -> ... -> vk` (`k >= 4`) whose ends are joined by the arc
//! `v1 -> vk` induces a transitive tournament. A path that violates this is a
//! shortcut. A graph is word-representable exactly when it has a
//! semi-transitive orientation, which is what [`solve`] decides.

mod construct;
mod propagate;
mod solver;
mod verify;

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};

pub use construct::{orientation_from_3coloring, orientation_from_4coloring_rules};
pub use propagate::{propagate, LocalConflict, Propagation};
pub use solver::{solve, solve_traced, SearchTrace, SolveResult, SolverConfig, TraceEvent};
pub use verify::{find_shortcut, is_acyclic, is_semi_transitive, Shortcut, Verdict};

/// Direction of one edge `{i, j}`, `i < j` by vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `i -> j`
    Forward,
    /// `j -> i`
    Backward,
    Unset,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
            Direction::Unset => Direction::Unset,
        }
    }
}

/// A total or partial orientation of a graph's edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    dir: Vec<Direction>,
}

impl Orientation {
    /// Every edge unset.
    pub fn unset(base: Graph) -> Orientation {
        let m = base.size();
        Orientation {
            base,
            dir: vec![Direction::Unset; m],
        }
    }

    /// Orients the listed arcs `u -> v` (ids); other edges stay unset.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Orientation> {
        let mut o = Orientation::unset(base);
        for &(u, v) in arcs {
            o.set_arc(u, v)?;
        }
        Ok(o)
    }

    /// Total orientation of the graph formed by `arcs` on vertices `0..n`.
    pub fn from_arc_list(n: usize, arcs: &[(usize, usize)]) -> Result<Orientation> {
        let base = Graph::from_edges(n, arcs)?;
        Orientation::from_arcs(base, arcs)
    }

    pub(crate) fn from_parts(base: Graph, dir: Vec<Direction>) -> Orientation {
        debug_assert_eq!(base.size(), dir.len());
        Orientation { base, dir }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn directions(&self) -> &[Direction] {
        &self.dir
    }

    /// Orients the edge `{u, v}` as `u -> v`, overwriting any previous direction.
    pub fn set_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let i = self.base.index_of(u).ok_or(Error::UnknownVertex(u))?;
        let j = self.base.index_of(v).ok_or(Error::UnknownVertex(v))?;
        let e = self.base.edge_index(i, j).ok_or(Error::NotAnEdge(u, v))?;
        self.dir[e] = if i < j {
            Direction::Forward
        } else {
            Direction::Backward
        };
        Ok(())
    }

    /// True if the edge `{i, j}` (indices) is oriented `i -> j`.
    pub fn has_arc_idx(&self, i: usize, j: usize) -> bool {
        match self.base.edge_index(i, j) {
            Some(e) => match self.dir[e] {
                Direction::Forward => i < j,
                Direction::Backward => i > j,
                Direction::Unset => false,
            },
            None => false,
        }
    }

    /// True if the edge `{u, v}` (ids) is oriented `u -> v`.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        match (self.base.index_of(u), self.base.index_of(v)) {
            (Some(i), Some(j)) => self.has_arc_idx(i, j),
            _ => false,
        }
    }

    pub fn is_total(&self) -> bool {
        self.dir.iter().all(|&d| d != Direction::Unset)
    }

    pub(crate) fn require_total(&self) -> Result<()> {
        match self.dir.iter().position(|&d| d == Direction::Unset) {
            None => Ok(()),
            Some(e) => {
                let (i, j) = self.base.edge_indices()[e];
                Err(Error::PartialOrientation(self.base.id(i), self.base.id(j)))
            }
        }
    }

    pub fn unset_count(&self) -> usize {
        self.dir.iter().filter(|&&d| d == Direction::Unset).count()
    }

    /// Oriented arcs as id pairs, in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edge_indices()
            .iter()
            .zip(&self.dir)
            .filter_map(|(&(i, j), d)| match d {
                Direction::Forward => Some((self.base.id(i), self.base.id(j))),
                Direction::Backward => Some((self.base.id(j), self.base.id(i))),
                Direction::Unset => None,
            })
            .collect()
    }

    /// Out-neighbourhoods over oriented arcs, by vertex index.
    pub(crate) fn out_sets(&self) -> Vec<FixedBitSet> {
        out_sets(&self.base, &self.dir)
    }

    /// Every oriented edge flipped; unset edges stay unset.
    pub fn reverse(&self) -> Orientation {
        Orientation {
            base: self.base.clone(),
            dir: self.dir.iter().map(|d| d.flipped()).collect(),
        }
    }

    pub fn to_json(&self) -> OrientationJson {
        OrientationJson {
            n: self.base.order(),
            vertices: if self.base.is_dense() {
                None
            } else {
                Some(self.base.vertices().to_vec())
            },
            arcs: self.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Orientation> {
        let parsed: OrientationJson = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        parsed.into_orientation()
    }

    /// DOT digraph; `fill` optionally maps vertex ids to colour numbers.
    pub fn to_dot(&self, fill: Option<&dyn Fn(usize) -> Option<u32>>) -> String {
        let mut out = String::from("digraph G {\n");
        for &id in self.base.vertices() {
            match fill.and_then(|f| f(id)) {
                Some(c) => {
                    let _ = writeln!(
                        out,
                        "  {id} [style=filled, fillcolor=\"{}\"];",
                        dot_palette(c)
                    );
                }
                None => {
                    let _ = writeln!(out, "  {id};");
                }
            }
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "  {u} -> {v};");
        }
        for (e, &(i, j)) in self.base.edge_indices().iter().enumerate() {
            if self.dir[e] == Direction::Unset {
                let _ = writeln!(
                    out,
                    "  {} -> {} [dir=none, style=dashed];",
                    self.base.id(i),
                    self.base.id(j)
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn out_sets(base: &Graph, dir: &[Direction]) -> Vec<FixedBitSet> {
    let n = base.order();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (&(i, j), d) in base.edge_indices().iter().zip(dir) {
        match d {
            Direction::Forward => out[i].insert(j),
            Direction::Backward => out[j].insert(i),
            Direction::Unset => {}
        }
    }
    out
}

pub(crate) fn dot_palette(c: u32) -> &'static str {
    const PALETTE: [&str; 6] = [
        "#e41a1c", "#377eb8", "#4daf4a", "#ff7f00", "#984ea3", "#a65628",
    ];
    PALETTE[(c.max(1) as usize - 1) % PALETTE.len()]
}

/// Serialized form: `{"n": 3, "arcs": [[0, 1], ...]}` where `[u, v]` is `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    pub arcs: Vec<[usize; 2]>,
}

impl OrientationJson {
    pub fn into_orientation(self) -> Result<Orientation> {
        let arcs: Vec<_> = self.arcs.iter().map(|a| (a[0], a[1])).collect();
        for (k, &(u, v)) in arcs.iter().enumerate() {
            if arcs[..k]
                .iter()
                .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            {
                return Err(Error::parse(
                    format!("arcs[{k}]"),
                    format!("edge {{{u}, {v}}} listed twice"),
                ));
            }
        }
        let ids = graph::vertex_list(self.n, self.vertices)?;
        graph::check_pairs(&ids, &arcs, "arcs")?;
        let base = Graph::with_vertices(ids, &arcs)?;
        Orientation::from_arcs(base, &arcs)
    }
}
