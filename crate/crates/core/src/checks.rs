//! Reproducible checks of the published results, each returning a report
//! instead of panicking so that callers can print a pass/fail table.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{is_k_colorable, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instances;
use crate::oracle;
use crate::polyomino::{
    contains_forbidden, enumerate_polyominoes, enumerate_triangulations, forbidden_set,
    k4_canonical_orientation, k4_strip, strip_word, t1, t2, triangulation_graph, Polyomino,
    SourcePattern, Triangulation, MAX_TRIANGULATION_CELLS,
};
use crate::semitrans::{
    find_shortcut, is_semi_transitive, orientation_from_3coloring,
    orientation_from_4coloring_rules, solve, solve_traced, SolverConfig,
};
use crate::words::{path_word, Word};

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl CheckReport {
    /// `PASS [3] title (12.3 ms): detail`
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({:.1} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64() * 1000.0,
            self.detail
        )
    }
}

/// Runs `body`, turning errors into failures and enforcing `limit`.
fn timed(
    id: u8,
    title: &'static str,
    limit: Duration,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > limit {
        passed = false;
        detail = format!("{detail}; over time limit {limit:?}");
    }
    CheckReport {
        id,
        title,
        passed,
        detail,
        elapsed,
    }
}

fn is_impossible(g: &Graph) -> Result<bool> {
    Ok(!solve_traced(g, SolverConfig::quiet())?.0.is_oriented())
}

/// The word `14213243` has the 4-cycle `1-2-3-4-1` as alternation graph.
pub fn c4_word() -> CheckReport {
    timed(
        1,
        "alternation graph of 14213243 is C4",
        Duration::from_millis(1),
        || {
            let w = Word::parse("14213243")?;
            let expected =
                Graph::with_vertices(vec![1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4), (4, 1)])?;
            let got = w.alternation_graph();
            Ok((
                got == expected,
                format!("edges {:?}", got.edges().collect::<Vec<_>>()),
            ))
        },
    )
}

/// Neither `T1` nor `T2` has a semi-transitive orientation, by search and by
/// filtering every orientation.
pub fn t1_t2_not_representable() -> CheckReport {
    timed(
        2,
        "T1 and T2 are not word-representable",
        Duration::from_secs(1200),
        || {
            let mut ok = true;
            let mut notes = Vec::new();
            for (name, drawn, t) in [
                ("T1", instances::t1_graph(), t1()),
                ("T2", instances::t2_graph(), t2()),
            ] {
                ok &= drawn == triangulation_graph(&t);
                let start = Instant::now();
                let impossible = is_impossible(&drawn)?;
                let solve_time = start.elapsed();
                ok &= impossible && solve_time < Duration::from_secs(1);
                let start = Instant::now();
                let brute = oracle::count_semi_transitive(&drawn);
                ok &= brute == 0;
                notes.push(format!(
                "{name}: solver {} in {:.1} ms, {} of 2^{} orientations semi-transitive ({:.1} s)",
                if impossible { "impossible" } else { "ORIENTED" },
                solve_time.as_secs_f64() * 1000.0,
                brute,
                drawn.size(),
                start.elapsed().as_secs_f64()
            ));
            }
            Ok((ok, notes.join("; ")))
        },
    )
}

/// `W5` is not word-representable and has chromatic number 4.
pub fn wheel_w5() -> CheckReport {
    timed(
        3,
        "W5 is not word-representable, chromatic number 4",
        Duration::from_secs(1),
        || {
            let g = instances::w5();
            let impossible = is_impossible(&g)?;
            let three = is_k_colorable(&g, 3).is_some();
            let four = is_k_colorable(&g, 4).is_some();
            Ok((
                impossible && !three && four,
                format!("impossible={impossible}, 3-colorable={three}, 4-colorable={four}"),
            ))
        },
    )
}

/// A random graph on at most `max_n` vertices with a planted proper
/// 3-coloring: each pair of differently colored vertices is an edge with
/// probability one half.
pub fn random_three_colored(rng: &mut impl Rng, max_n: usize) -> (Graph, Coloring) {
    let n = rng.gen_range(1..=max_n);
    let colors: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] != colors[v] && rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("valid endpoints");
    let c = colors.into_iter().enumerate().collect();
    (g, c)
}

/// The color-order orientation of 3-colored graphs is semi-transitive.
pub fn three_colorable_graphs(samples: usize, seed: u64) -> CheckReport {
    timed(
        4,
        "3-colorable graphs orient semi-transitively",
        Duration::from_secs(60),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut failures = 0;
            for _ in 0..samples {
                let (g, c) = random_three_colored(&mut rng, 10);
                let o = orientation_from_3coloring(&g, &c)?;
                if !is_semi_transitive(&o)?.is_ok() {
                    failures += 1;
                }
            }
            Ok((
                failures == 0,
                format!("{samples} graphs, {failures} failures"),
            ))
        },
    )
}

/// The rotations of `T1` and `T2` give 8 distinct patterns, none
/// 3-colorable or orientable.
pub fn forbidden_patterns() -> CheckReport {
    timed(
        5,
        "forbidden set has 8 non-representable members",
        Duration::from_secs(10),
        || {
            let s = forbidden_set();
            let mut windows = s.windows();
            windows.sort();
            windows.dedup();
            let mut ok = s.len() == 8 && windows.len() == 8;
            for g in s.graphs() {
                ok &= is_k_colorable(&g, 3).is_none();
                ok &= is_impossible(&g)?;
            }
            Ok((
                ok,
                format!("{} members, {} distinct", s.len(), windows.len()),
            ))
        },
    )
}

/// On the 2x2 square, 3-colorable exactly when no forbidden pattern occurs.
pub fn square_obstruction() -> CheckReport {
    timed(
        6,
        "2x2 square: 3-colorable iff forbidden-free",
        Duration::from_secs(10),
        || {
            let sq = Polyomino::rectangle(2, 2);
            let mut agree = true;
            let mut non_colorable = 0;
            for t in enumerate_triangulations(&sq, MAX_TRIANGULATION_CELLS)? {
                let colorable = is_k_colorable(&triangulation_graph(&t), 3).is_some();
                non_colorable += usize::from(!colorable);
                agree &= colorable != contains_forbidden(&t);
            }
            Ok((
                agree && non_colorable == 8,
                format!("16 triangulations, {non_colorable} not 3-colorable, agreement={agree}"),
            ))
        },
    )
}

/// Verdicts for one triangulation in the main-theorem sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangulationVerdict {
    pub ascii: String,
    pub orientable: bool,
    pub three_colorable: bool,
    pub forbidden: bool,
}

impl TriangulationVerdict {
    pub fn of(t: &Triangulation, config: SolverConfig) -> Result<TriangulationVerdict> {
        let g = triangulation_graph(t);
        Ok(TriangulationVerdict {
            ascii: t.to_ascii(),
            orientable: solve_traced(&g, config)?.0.is_oriented(),
            three_colorable: is_k_colorable(&g, 3).is_some(),
            forbidden: contains_forbidden(t),
        })
    }

    pub fn consistent(&self) -> bool {
        self.orientable == self.three_colorable && self.three_colorable != self.forbidden
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremReport {
    pub max_cells: usize,
    pub polyominoes: usize,
    pub triangulations: usize,
    pub exceptions: Vec<TriangulationVerdict>,
}

impl MainTheoremReport {
    pub fn holds(&self) -> bool {
        self.exceptions.is_empty()
    }
}

/// Every triangulation of every convex polyomino with at most `max_cells`
/// cells: orientable iff 3-colorable iff free of forbidden patterns.
/// `jobs = None` uses rayon's default pool.
pub fn verify_main_theorem(max_cells: usize, jobs: Option<usize>) -> Result<MainTheoremReport> {
    if max_cells > MAX_TRIANGULATION_CELLS {
        return Err(Error::Budget(format!(
            "max cells {max_cells} exceeds {MAX_TRIANGULATION_CELLS}"
        )));
    }
    let polys: Vec<Polyomino> = enumerate_polyominoes(max_cells)
        .into_iter()
        .filter(Polyomino::is_convex)
        .collect();
    let mut all = Vec::new();
    for p in &polys {
        all.extend(enumerate_triangulations(p, MAX_TRIANGULATION_CELLS)?);
    }
    let config = SolverConfig::quiet();
    let run = || -> Result<Vec<TriangulationVerdict>> {
        all.par_iter()
            .map(|t| TriangulationVerdict::of(t, config))
            .collect()
    };
    let verdicts = match jobs {
        None => run()?,
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(run)?,
    };
    Ok(MainTheoremReport {
        max_cells,
        polyominoes: polys.len(),
        triangulations: verdicts.len(),
        exceptions: verdicts.into_iter().filter(|v| !v.consistent()).collect(),
    })
}

pub fn main_theorem(max_cells: usize) -> CheckReport {
    timed(
        7,
        "convex polyominoes: orientable iff 3-colorable iff forbidden-free",
        Duration::from_secs(600),
        || {
            let r = verify_main_theorem(max_cells, None)?;
            Ok((
                r.holds(),
                format!(
                "{} convex polyominoes with <= {max_cells} cells, {} triangulations, {} exceptions",
                r.polyominoes,
                r.triangulations,
                r.exceptions.len()
            ),
            ))
        },
    )
}

/// The non-convex 7-cell ring has a non-3-colorable but orientable
/// triangulation.
pub fn ring_counterexample() -> CheckReport {
    timed(
        8,
        "non-convex ring: not 3-colorable yet representable",
        Duration::from_secs(10),
        || {
            let t = instances::ring_triangulation();
            let g = triangulation_graph(&t);
            let not_three = is_k_colorable(&g, 3).is_none();
            let non_convex = !t.base().is_convex();
            let rules = orientation_from_4coloring_rules(&g, &instances::ring_coloring())?;
            let rules_ok = is_semi_transitive(&rules)?.is_ok();
            let solved = solve(&g)?.is_oriented();
            Ok((
                not_three && non_convex && rules_ok && solved,
                format!(
                    "not 3-colorable={not_three}, non-convex={non_convex}, \
                 coloring-rule orientation ok={rules_ok}, solver orients={solved}"
                ),
            ))
        },
    )
}

/// The canonical orientation of K4-substituted polyominoes is
/// semi-transitive; stacking the sources in columns breaks it.
pub fn k4_polyominoes() -> CheckReport {
    timed(
        9,
        "K4-substituted polyominoes orient canonically",
        Duration::from_secs(300),
        || {
            let mut shapes = enumerate_polyominoes(6);
            let small = shapes.len();
            for w in 1..=5 {
                for h in 1..=5 {
                    shapes.push(Polyomino::rectangle(w, h));
                }
            }
            let mut failures = 0;
            for p in &shapes {
                let o = k4_canonical_orientation(p, SourcePattern::Staggered);
                if !is_semi_transitive(&o)?.is_ok() {
                    failures += 1;
                }
            }
            let strip = Polyomino::rectangle(5, 1);
            let aligned = k4_canonical_orientation(&strip, SourcePattern::ColumnAligned);
            let witness = find_shortcut(&aligned)?;
            let witness_ok = witness.as_ref().is_some_and(|s| s.is_valid_for(&aligned));
            Ok((
                failures == 0 && witness_ok,
                format!(
                    "{small} polyominoes <= 6 cells and 25 rectangles, {failures} failures; \
                 column-aligned strip shortcut: {}",
                    witness.map_or("none".to_string(), |s| format!(
                        "{:?} missing {:?}",
                        s.path, s.missing
                    ))
                ),
            ))
        },
    )
}

/// The explicit words for the K4 strip and for paths.
pub fn explicit_words() -> CheckReport {
    timed(
        10,
        "strip and path words represent their graphs",
        Duration::from_secs(10),
        || {
            let mut ok = true;
            for n in 1..=6 {
                ok &= strip_word(n).represents(&k4_strip(n))?;
            }
            for n in 2..=8 {
                let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
                let path = Graph::with_vertices((1..=n).collect(), &edges)?;
                ok &= path_word(n).represents(&path)?;
            }
            Ok((ok, "strip n = 1..6, path n = 2..8".to_string()))
        },
    )
}

/// Criteria 1 to 10 with their default parameters.
pub fn run_paper_checks() -> Vec<CheckReport> {
    vec![
        c4_word(),
        t1_t2_not_representable(),
        wheel_w5(),
        three_colorable_graphs(500, 2024),
        forbidden_patterns(),
        square_obstruction(),
        main_theorem(5),
        ring_counterexample(),
        k4_polyominoes(),
        explicit_words(),
    ]
}
