//! Exhaustive desk-scale sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrep::coloring::{greedy_row_coloring, ConflictTag, GreedyOutcome};
use wordrep::oracle;
use wordrep::polyomino::{
    contains_forbidden, enumerate_polyominoes, enumerate_triangulations, k4_canonical_orientation,
    triangulation_graph, Polyomino, SourcePattern,
};
use wordrep::semitrans::{is_semi_transitive, solve};
use wordrep::words::{find_representant, RepresentantSearch};
use wordrep::{is_k_colorable, Graph, Word};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

#[test]
fn every_graph_on_five_vertices_is_orientable() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let r = solve(&g).unwrap();
            let o = r.orientation().expect("orientable");
            assert!(oracle::is_semi_transitive(o));
        }
    }
}

#[test]
fn representants_exist_for_a_sample_of_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let graphs: Vec<Graph> = all_graphs(5).collect();
    for _ in 0..40 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let w = find_representant(g, RepresentantSearch::with_k_max(3))
            .unwrap()
            .expect("graphs on five vertices have 3-uniform representants");
        assert!(w.represents(g).unwrap());
    }
}

#[test]
fn alternation_graphs_of_random_words_are_orientable() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let len = rng.gen_range(1..=30);
        let w = Word::new((0..len).map(|_| rng.gen_range(1..=8)).collect());
        let g = w.alternation_graph();
        let r = solve(&g).unwrap();
        assert!(r.is_oriented(), "{w} gives an unorientable graph");
    }
}

fn rectangle_triangulations() -> impl Iterator<Item = wordrep::polyomino::Triangulation> {
    (1..=3).flat_map(|w| {
        (1..=3).flat_map(move |h| {
            let p = Polyomino::rectangle(w, h);
            enumerate_triangulations(&p, 24)
                .unwrap()
                .collect::<Vec<_>>()
        })
    })
}

/// The row-by-row procedure never colors a non-3-colorable rectangle and
/// always reports a classified conflict there. The converse fails: taking the
/// smallest available color can paint itself into a corner on a 3-colorable
/// triangulation, always surfacing as a `C1` conflict.
#[test]
fn greedy_coloring_on_small_rectangles() {
    let mut missed = 0;
    for t in rectangle_triangulations() {
        let g = triangulation_graph(&t);
        let exact = is_k_colorable(&g, 3).is_some();
        match greedy_row_coloring(&t).unwrap() {
            GreedyOutcome::Complete(c) => {
                assert!(c.check(&g, Some(3)).is_ok());
                assert!(exact, "greedy colored a non-3-colorable graph\n{t}");
            }
            GreedyOutcome::Conflict(case) => {
                assert!(case.row >= 2);
                if exact {
                    assert_eq!(case.tag, ConflictTag::C1, "\n{t}");
                    missed += 1;
                }
            }
        }
    }
    // 1 + 4 (1x2, 1x3), 2 + 8 (2x2, 2x3), 4 + 16 (3x2, 3x3)
    assert_eq!(missed, 35);
}

#[test]
fn conflicts_are_always_classified() {
    for (w, h) in [(4, 3), (3, 4), (2, 5)] {
        for t in enumerate_triangulations(&Polyomino::rectangle(w, h), 24).unwrap() {
            greedy_row_coloring(&t).unwrap();
        }
    }
}

#[test]
fn rectangles_are_three_colorable_iff_forbidden_free() {
    for t in rectangle_triangulations() {
        let g = triangulation_graph(&t);
        assert_eq!(
            is_k_colorable(&g, 3).is_some(),
            !contains_forbidden(&t),
            "\n{t}"
        );
        if g.order() <= 12 {
            assert_eq!(
                is_k_colorable(&g, 3).is_some(),
                oracle::is_k_colorable(&g, 3)
            );
        }
    }
}

#[test]
fn no_triangulation_is_two_colorable() {
    for p in enumerate_polyominoes(4) {
        for t in enumerate_triangulations(&p, 24).unwrap() {
            assert!(is_k_colorable(&triangulation_graph(&t), 2).is_none());
        }
    }
}

#[test]
fn canonical_k4_orientation_on_small_shapes() {
    for p in enumerate_polyominoes(6) {
        let o = k4_canonical_orientation(&p, SourcePattern::Staggered);
        assert!(is_semi_transitive(&o).unwrap().is_ok(), "\n{p}");
    }
    for w in 1..=5 {
        for h in 1..=5 {
            let o = k4_canonical_orientation(&Polyomino::rectangle(w, h), SourcePattern::Staggered);
            assert!(is_semi_transitive(&o).unwrap().is_ok(), "{w}x{h}");
        }
    }
}
