//! Forced completions on triangles and chordless 4-cycles.
//!
//! Every triangle and every chordless 4-cycle is an induced subgraph, so any
//! semi-transitive orientation restricts to a semi-transitive orientation of
//! it. On a triangle that means "not a directed 3-cycle". On a chordless
//! 4-cycle, writing each edge as forward or backward along a fixed traversal,
//! it means exactly two forward edges: zero or four is a directed cycle, one
//! or three is a directed 3-path closed by a shortcut. Propagation enumerates
//! the completions of each such cycle that respect these rules and fixes every
//! unset edge on which all surviving completions agree.

use std::collections::VecDeque;

use super::solver::TraceEvent;
use super::{Direction, Orientation};
use crate::graph::Graph;

/// Result of [`propagate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Propagation {
    Extended(Orientation),
    Conflict(LocalConflict),
}

/// A triangle or chordless 4-cycle (vertex ids, in cyclic order) whose
/// current partial orientation has no valid completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalConflict {
    pub cycle: Vec<usize>,
}

/// Applies the triangle and chordless 4-cycle rules to a fixpoint.
pub fn propagate(o: &Orientation) -> Propagation {
    let rules = LocalRules::new(o.base());
    let mut dir = o.directions().to_vec();
    match rules.run(o.base(), &mut dir, None, None) {
        Ok(()) => Propagation::Extended(Orientation::from_parts(o.base().clone(), dir)),
        Err(local) => Propagation::Conflict(LocalConflict {
            cycle: rules.cycle_ids(o.base(), local),
        }),
    }
}

#[derive(Clone, Debug)]
struct LocalCycle {
    verts: Vec<usize>,
    edges: Vec<usize>,
    /// `forward[k]`: edge `k` stored as `Direction::Forward` means
    /// `verts[k] -> verts[k + 1]`.
    forward: Vec<bool>,
}

impl LocalCycle {
    fn new(g: &Graph, verts: Vec<usize>) -> LocalCycle {
        let len = verts.len();
        let mut edges = Vec::with_capacity(len);
        let mut forward = Vec::with_capacity(len);
        for k in 0..len {
            let (a, b) = (verts[k], verts[(k + 1) % len]);
            edges.push(g.edge_index(a, b).expect("cycle edge"));
            forward.push(a < b);
        }
        LocalCycle {
            verts,
            edges,
            forward,
        }
    }

    fn valid(&self, bits: u32) -> bool {
        match self.verts.len() {
            3 => bits != 0 && bits != 0b111,
            _ => bits.count_ones() == 2,
        }
    }
}

/// Precomputed triangles and chordless 4-cycles of a graph.
#[derive(Clone, Debug)]
pub(crate) struct LocalRules {
    cycles: Vec<LocalCycle>,
    by_edge: Vec<Vec<usize>>,
}

impl LocalRules {
    pub(crate) fn new(g: &Graph) -> LocalRules {
        let n = g.order();
        let mut cycles = Vec::new();
        for a in 0..n {
            for b in g.neighbors(a).filter(|&b| b > a) {
                for c in g.neighbors(b).filter(|&c| c > b) {
                    if g.adjacent(a, c) {
                        cycles.push(LocalCycle::new(g, vec![a, b, c]));
                    }
                }
            }
        }
        // chordless 4-cycles a-b-c-d with a the smallest vertex and b < d
        for a in 0..n {
            for b in g.neighbors(a).filter(|&b| b > a) {
                for c in g.neighbors(b).filter(|&c| c > a && !g.adjacent(a, c)) {
                    for d in g.neighbors(c) {
                        if d > b && g.adjacent(d, a) && !g.adjacent(b, d) {
                            cycles.push(LocalCycle::new(g, vec![a, b, c, d]));
                        }
                    }
                }
            }
        }
        let mut by_edge = vec![Vec::new(); g.size()];
        for (k, cyc) in cycles.iter().enumerate() {
            for &e in &cyc.edges {
                by_edge[e].push(k);
            }
        }
        LocalRules { cycles, by_edge }
    }

    pub(crate) fn cycle_ids(&self, g: &Graph, local: usize) -> Vec<usize> {
        self.cycles[local].verts.iter().map(|&v| g.id(v)).collect()
    }

    /// Runs to a fixpoint. With `seeds = None` every local cycle is examined,
    /// otherwise only those touching the seed edges (and whatever they force).
    /// On conflict returns the index of the offending local cycle.
    pub(crate) fn run(
        &self,
        g: &Graph,
        dir: &mut [Direction],
        seeds: Option<&[usize]>,
        mut log: Option<&mut Vec<TraceEvent>>,
    ) -> Result<(), usize> {
        let mut queued = vec![false; self.cycles.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        let push = |k: usize, queue: &mut VecDeque<usize>, queued: &mut Vec<bool>| {
            if !queued[k] {
                queued[k] = true;
                queue.push_back(k);
            }
        };
        match seeds {
            None => (0..self.cycles.len()).for_each(|k| push(k, &mut queue, &mut queued)),
            Some(edges) => {
                for &e in edges {
                    for &k in &self.by_edge[e] {
                        push(k, &mut queue, &mut queued);
                    }
                }
            }
        }
        while let Some(k) = queue.pop_front() {
            queued[k] = false;
            let cyc = &self.cycles[k];
            let mut known = 0u32;
            let mut bits = 0u32;
            for (pos, (&e, &fwd)) in cyc.edges.iter().zip(&cyc.forward).enumerate() {
                match dir[e] {
                    Direction::Unset => {}
                    d => {
                        known |= 1 << pos;
                        if (d == Direction::Forward) == fwd {
                            bits |= 1 << pos;
                        }
                    }
                }
            }
            let len = cyc.verts.len();
            let full = (1u32 << len) - 1;
            let free = full & !known;
            let mut all_and = full;
            let mut any_or = 0u32;
            let mut viable = 0;
            // enumerate subsets of the free positions
            let mut sub = free;
            loop {
                let candidate = bits | sub;
                if cyc.valid(candidate) {
                    viable += 1;
                    all_and &= candidate;
                    any_or |= candidate;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
            if viable == 0 {
                return Err(k);
            }
            let forced = free & (all_and | !any_or);
            if forced == 0 {
                continue;
            }
            let mut forced_arcs = Vec::new();
            for pos in 0..len {
                if forced & (1 << pos) == 0 {
                    continue;
                }
                let along = all_and & (1 << pos) != 0;
                let e = cyc.edges[pos];
                dir[e] = if along == cyc.forward[pos] {
                    Direction::Forward
                } else {
                    Direction::Backward
                };
                let (a, b) = (cyc.verts[pos], cyc.verts[(pos + 1) % len]);
                forced_arcs.push(if along {
                    (g.id(a), g.id(b))
                } else {
                    (g.id(b), g.id(a))
                });
                for &other in &self.by_edge[e] {
                    if other != k {
                        push(other, &mut queue, &mut queued);
                    }
                }
            }
            if let Some(log) = log.as_deref_mut() {
                log.push(TraceEvent::Complete {
                    cycle: cyc.verts.iter().map(|&v| g.id(v)).collect(),
                    forced: forced_arcs,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn extended(p: Propagation) -> Orientation {
        match p {
            Propagation::Extended(o) => o,
            Propagation::Conflict(c) => panic!("unexpected conflict {c:?}"),
        }
    }

    #[test]
    fn triangle_two_path_forces_closing_arc() {
        let o = Orientation::from_arcs(Graph::complete(3), &[(0, 1), (1, 2)]).unwrap();
        let done = extended(propagate(&o));
        assert!(done.has_arc(0, 2));
        assert!(done.is_total());
    }

    #[test]
    fn square_with_two_path_completes_to_two_paths() {
        // a=0, b=1, c=2, d=3 around the square; a->b, b->c
        let o = Orientation::from_arcs(Graph::cycle(4), &[(0, 1), (1, 2)]).unwrap();
        let done = extended(propagate(&o));
        assert!(done.has_arc(3, 2));
        assert!(done.has_arc(0, 3));
    }

    #[test]
    fn square_with_opposite_arcs_alternates() {
        // a->b and c->d force c->b and a->d
        let o = Orientation::from_arcs(Graph::cycle(4), &[(0, 1), (2, 3)]).unwrap();
        let done = extended(propagate(&o));
        assert!(done.has_arc(2, 1));
        assert!(done.has_arc(0, 3));
    }

    #[test]
    fn empty_orientation_is_a_fixpoint() {
        let o = Orientation::unset(Graph::wheel(5));
        assert_eq!(extended(propagate(&o)), o);
    }

    #[test]
    fn single_arc_on_square_forces_nothing() {
        let o = Orientation::from_arcs(Graph::cycle(4), &[(0, 1)]).unwrap();
        assert_eq!(extended(propagate(&o)).unset_count(), 3);
    }

    #[test]
    fn directed_triangle_conflicts() {
        let o = Orientation::from_arcs(Graph::complete(3), &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(propagate(&o), Propagation::Conflict(c) if c.cycle.len() == 3));
    }

    #[test]
    fn square_shortcut_conflicts() {
        let o = Orientation::from_arcs(Graph::cycle(4), &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(matches!(propagate(&o), Propagation::Conflict(c) if c.cycle.len() == 4));
    }

    #[test]
    fn squares_inside_k4_are_ignored() {
        // every 4-cycle of K4 has chords, so only triangle rules apply
        let rules = LocalRules::new(&Graph::complete(4));
        assert_eq!(rules.cycles.len(), 4);
        assert!(rules.cycles.iter().all(|c| c.verts.len() == 3));
    }
}
