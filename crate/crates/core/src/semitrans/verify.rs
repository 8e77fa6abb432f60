use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::Orientation;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A shortcut witness: a directed path `v1 -> ... -> vk` (`k >= 4`), the arc
/// `v1 -> vk`, and a pair `(vi, vj)`, `i < j`, with no arc `vi -> vj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortcut {
    pub path: Vec<usize>,
    pub missing: (usize, usize),
}

impl Shortcut {
    /// Re-checks the witness against `o` from the definition alone.
    pub fn is_valid_for(&self, o: &Orientation) -> bool {
        let p = &self.path;
        if p.len() < 4 {
            return false;
        }
        let along = p.windows(2).all(|w| o.has_arc(w[0], w[1]));
        let closed = o.has_arc(p[0], p[p.len() - 1]);
        let (a, b) = self.missing;
        let ordered = match (
            p.iter().position(|&v| v == a),
            p.iter().position(|&v| v == b),
        ) {
            (Some(i), Some(j)) => i < j,
            _ => false,
        };
        along && closed && ordered && !o.has_arc(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// Vertices of a directed cycle, in order.
    Cyclic(Vec<usize>),
    Shortcut(Shortcut),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

pub fn is_acyclic(o: &Orientation) -> Result<bool> {
    o.require_total()?;
    Ok(find_cycle(&o.out_sets()).is_none())
}

/// Finds a shortcut in a total acyclic orientation.
pub fn find_shortcut(o: &Orientation) -> Result<Option<Shortcut>> {
    o.require_total()?;
    let out = o.out_sets();
    if let Some(cycle) = find_cycle(&out) {
        return Err(Error::Cyclic(ids(o.base(), &cycle)));
    }
    Ok(
        find_shortcut_idx(o.base(), &out).map(|(path, (x, y))| Shortcut {
            path: ids(o.base(), &path),
            missing: (o.base().id(x), o.base().id(y)),
        }),
    )
}

pub fn is_semi_transitive(o: &Orientation) -> Result<Verdict> {
    o.require_total()?;
    let out = o.out_sets();
    if let Some(cycle) = find_cycle(&out) {
        return Ok(Verdict::Cyclic(ids(o.base(), &cycle)));
    }
    Ok(match find_shortcut_idx(o.base(), &out) {
        None => Verdict::Ok,
        Some((path, (x, y))) => Verdict::Shortcut(Shortcut {
            path: ids(o.base(), &path),
            missing: (o.base().id(x), o.base().id(y)),
        }),
    })
}

fn ids(g: &Graph, idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|&i| g.id(i)).collect()
}

/// A directed cycle over the arcs in `out`, as vertex indices in order.
pub(crate) fn find_cycle(out: &[FixedBitSet]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = out.len();
    let mut mark = vec![Mark::New; n];
    let mut stack: Vec<usize> = Vec::new();
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // iterative DFS; `cursor[v]` is the next out-neighbour of v to try
        let mut cursor: Vec<usize> = Vec::new();
        stack.push(root);
        cursor.push(0);
        mark[root] = Mark::Open;
        while let Some(&v) = stack.last() {
            let from = *cursor.last().expect("cursor tracks stack");
            match out[v].ones().find(|&w| w >= from) {
                Some(w) => {
                    *cursor.last_mut().expect("non-empty") = w + 1;
                    match mark[w] {
                        Mark::Open => {
                            let start = stack.iter().position(|&s| s == w).expect("on stack");
                            return Some(stack[start..].to_vec());
                        }
                        Mark::New => {
                            mark[w] = Mark::Open;
                            stack.push(w);
                            cursor.push(0);
                        }
                        Mark::Done => {}
                    }
                }
                None => {
                    mark[v] = Mark::Done;
                    stack.pop();
                    cursor.pop();
                }
            }
        }
    }
    None
}

/// Strict descendant sets of an acyclic arc set.
pub(crate) fn descendants(out: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = out.len();
    let mut indeg = vec![0usize; n];
    for row in out {
        for w in row.ones() {
            indeg[w] += 1;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for w in out[v].ones() {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    assert_eq!(order.len(), n, "descendants() requires an acyclic arc set");
    let mut desc = vec![FixedBitSet::with_capacity(n); n];
    for &v in order.iter().rev() {
        let mut acc = out[v].clone();
        for w in out[v].ones() {
            acc.union_with(&desc[w]);
        }
        desc[v] = acc;
    }
    desc
}

/// Shortcut search over the arcs in `out`, which must be acyclic. A pair is
/// "missing" when it is not adjacent in `g`; on a total orientation that is
/// the same as the arc being absent.
///
/// For an arc `u -> v` let `R` hold the vertices lying on some directed
/// `u`-`v` path. A shortcut closed by `u -> v` exists iff some `x` in `R` can
/// reach a non-adjacent `y` in `R`: chaining `u ~> x ~> y ~> v` gives a path
/// with at least three arcs because `{x, y} != {u, v}`.
pub(crate) fn find_shortcut_idx(
    g: &Graph,
    out: &[FixedBitSet],
) -> Option<(Vec<usize>, (usize, usize))> {
    let n = out.len();
    let desc = descendants(out);
    for u in 0..n {
        for v in out[u].ones() {
            let mut on_path = FixedBitSet::with_capacity(n);
            on_path.insert(u);
            on_path.insert(v);
            for x in desc[u].ones() {
                if desc[x].contains(v) {
                    on_path.insert(x);
                }
            }
            for x in on_path.ones() {
                let mut reach = desc[x].clone();
                reach.intersect_with(&on_path);
                reach.difference_with(g.adjacency(x));
                if let Some(y) = reach.ones().next() {
                    let mut path = directed_path(out, u, x);
                    path.extend(directed_path(out, x, y).into_iter().skip(1));
                    path.extend(directed_path(out, y, v).into_iter().skip(1));
                    return Some((path, (x, y)));
                }
            }
        }
    }
    None
}

/// Some directed path `from ~> to` (BFS), inclusive of both ends.
fn directed_path(out: &[FixedBitSet], from: usize, to: usize) -> Vec<usize> {
    if from == to {
        return vec![from];
    }
    let n = out.len();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in out[v].ones() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                if w == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
                queue.push_back(w);
            }
        }
    }
    panic!("no directed path {from} ~> {to}");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tournament(n: usize) -> Orientation {
        let arcs: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Orientation::from_arc_list(n, &arcs).unwrap()
    }

    #[test]
    fn transitive_triangle_is_acyclic() {
        assert_eq!(is_acyclic(&tournament(3)), Ok(true));
    }

    #[test]
    fn directed_triangle_is_cyclic() {
        let o = Orientation::from_arc_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(is_acyclic(&o), Ok(false));
        assert!(matches!(is_semi_transitive(&o), Ok(Verdict::Cyclic(c)) if c.len() == 3));
    }

    #[test]
    fn directed_four_cycle_verdict() {
        let o = Orientation::from_arc_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        match is_semi_transitive(&o).unwrap() {
            Verdict::Cyclic(c) => {
                assert_eq!(c.len(), 4);
                for k in 0..4 {
                    assert!(o.has_arc(c[k], c[(k + 1) % 4]));
                }
            }
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn minimal_shortcut() {
        let o = Orientation::from_arc_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let s = find_shortcut(&o).unwrap().expect("shortcut");
        assert_eq!(s.path, vec![0, 1, 2, 3]);
        assert!(s.missing == (0, 2) || s.missing == (1, 3));
        assert!(s.is_valid_for(&o));
    }

    #[test]
    fn transitive_tournament_has_no_shortcut() {
        assert_eq!(find_shortcut(&tournament(5)), Ok(None));
        assert_eq!(is_semi_transitive(&tournament(5)), Ok(Verdict::Ok));
    }

    #[test]
    fn partial_and_cyclic_inputs_are_errors() {
        let o = Orientation::unset(Graph::cycle(3));
        assert!(matches!(is_acyclic(&o), Err(Error::PartialOrientation(..))));
        assert!(matches!(
            is_semi_transitive(&o),
            Err(Error::PartialOrientation(..))
        ));
        let cyc = Orientation::from_arc_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(find_shortcut(&cyc), Err(Error::Cyclic(_))));
    }

    #[test]
    fn two_coloured_c4_is_fine() {
        // colour-1 vertices 0 and 2 are sources
        let o = Orientation::from_arc_list(4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        assert_eq!(is_semi_transitive(&o), Ok(Verdict::Ok));
    }

    #[test]
    fn witness_with_longer_path() {
        // 0 -> 1 -> 2 -> 3 -> 4, chords 0->2, 1->3, 0->4; 0,3 not adjacent
        let o = Orientation::from_arc_list(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3), (0, 4)],
        )
        .unwrap();
        let s = find_shortcut(&o).unwrap().expect("shortcut");
        assert!(s.is_valid_for(&o), "{s:?}");
    }
}
