//! Strategies and property bodies shared by the property suite and the
//! acceptance harness.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::subsequence;
use wordrep::graph::VertexSet;
use wordrep::oracle;
use wordrep::polyomino::{
    contains_forbidden, enumerate_polyominoes, enumerate_triangulations, forbidden_set,
    triangulation_graph, Triangulation,
};
use wordrep::semitrans::{
    is_semi_transitive, propagate, solve, Direction, Orientation, Propagation,
};
use wordrep::{Graph, Word};

/// Graphs on up to `max_n` vertices with at most `max_m` edges.
pub fn small_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    ((max_n / 2).max(1)..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let cap = pairs.len().min(max_m);
        subsequence(pairs, 0..=cap).prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

pub fn total_orientation(max_n: usize, max_m: usize) -> impl Strategy<Value = Orientation> {
    small_graph(max_n, max_m).prop_flat_map(|g| {
        let m = g.size();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |flips| {
            let arcs: Vec<_> = g
                .edges()
                .zip(&flips)
                .map(|((u, v), &f)| if f { (v, u) } else { (u, v) })
                .collect();
            Orientation::from_arcs(g.clone(), &arcs).unwrap()
        })
    })
}

pub fn partial_orientation(max_n: usize, max_m: usize) -> impl Strategy<Value = Orientation> {
    small_graph(max_n, max_m).prop_flat_map(|g| {
        let m = g.size();
        proptest::collection::vec(0u8..3, m).prop_map(move |choice| {
            let arcs: Vec<_> = g
                .edges()
                .zip(&choice)
                .filter_map(|((u, v), &c)| match c {
                    0 => Some((u, v)),
                    1 => Some((v, u)),
                    _ => None,
                })
                .collect();
            Orientation::from_arcs(g.clone(), &arcs).unwrap()
        })
    })
}

pub fn word(max_letter: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(1..=max_letter, 1..=max_len).prop_map(Word::new)
}

/// A triangulation of a polyomino with at most five cells.
pub fn small_triangulation() -> impl Strategy<Value = Triangulation> {
    let polys = enumerate_polyominoes(5);
    (0..polys.len(), any::<u32>()).prop_map(move |(k, mask)| {
        let p = &polys[k];
        let count = 1usize << p.len();
        enumerate_triangulations(p, 24)
            .unwrap()
            .nth(mask as usize % count)
            .unwrap()
    })
}

fn ok(o: &Orientation) -> bool {
    is_semi_transitive(o).unwrap().is_ok()
}

pub fn reversal_invariance(o: &Orientation) -> Result<(), TestCaseError> {
    let forward = ok(o);
    prop_assert_eq!(forward, ok(&o.reverse()));
    prop_assert_eq!(forward, oracle::is_semi_transitive(o));
    Ok(())
}

pub fn hereditary_deletion(w: &Word, pick: usize) -> Result<(), TestCaseError> {
    let letters = w.alphabet();
    let x = letters[pick % letters.len()];
    let whole = w.alternation_graph();
    prop_assert_eq!(&whole, &oracle::alternation_graph(w));
    let shorter = w.without_letter(x);
    if shorter.is_empty() {
        return Ok(());
    }
    let rest = VertexSet::new(letters.iter().copied().filter(|&l| l != x));
    prop_assert_eq!(
        shorter.alternation_graph(),
        whole.induced_subgraph(&rest).unwrap()
    );
    Ok(())
}

pub fn solver_matches_brute_force(g: &Graph) -> Result<(), TestCaseError> {
    let found = solve(g).unwrap();
    if let Some(o) = found.orientation() {
        prop_assert!(ok(o));
        prop_assert!(oracle::is_semi_transitive(o));
    }
    prop_assert_eq!(found.is_oriented(), oracle::has_semi_transitive(g));
    Ok(())
}

/// Every semi-transitive total extension of `p` also extends the
/// propagated orientation; a conflict means there is none.
pub fn propagation_is_sound(p: &Orientation) -> Result<(), TestCaseError> {
    let g = p.base();
    let after = propagate(p);
    for total in oracle::all_orientations(g) {
        let extends = |partial: &Orientation| {
            partial
                .directions()
                .iter()
                .zip(total.directions())
                .all(|(&a, &b)| a == Direction::Unset || a == b)
        };
        if !extends(p) || !ok(&total) {
            continue;
        }
        match &after {
            Propagation::Extended(q) => prop_assert!(extends(q)),
            Propagation::Conflict(c) => {
                return Err(TestCaseError::fail(format!(
                    "conflict on {:?} but {:?} is semi-transitive",
                    c.cycle,
                    total.arcs()
                )))
            }
        }
    }
    Ok(())
}

pub fn window_scan_matches_induced(t: &Triangulation) -> Result<(), TestCaseError> {
    let g = triangulation_graph(t);
    let induced = forbidden_set()
        .graphs()
        .iter()
        .any(|s| g.contains_induced(s).is_some());
    prop_assert_eq!(contains_forbidden(t), induced, "{}", t);
    Ok(())
}
