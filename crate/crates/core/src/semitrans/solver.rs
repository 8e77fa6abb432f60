//! Exhaustive branch-and-propagate search for a semi-transitive orientation.
//!
//! Each search node holds a partially oriented copy of the graph. The node
//! is first closed under the local rules of [`super::propagate`], then the
//! oriented arcs are checked for a directed cycle or for a shortcut that no
//! later choice can repair (a directed path closed by an arc and containing
//! a non-adjacent pair). Surviving nodes branch on the lexicographically
//! smallest unset edge, low endpoint first; the alternative direction is kept
//! as a new copy and visited after the first branch is exhausted.
//!
//! Reversing every arc maps semi-transitive orientations to semi-transitive
//! orientations, so the very first branch is taken in one direction only.

use std::fmt;
use std::time::{Duration, Instant};

use super::propagate::LocalRules;
use super::verify::{find_cycle, find_shortcut_idx, is_semi_transitive};
use super::{out_sets, Direction, Orientation};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One step of the search, tagged like a hand-written case analysis:
/// `B` branch, `NPOC` new partially oriented copy, `C` complete a cycle,
/// `MC` move to a copy, `S` shortcut (or cycle) found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// Orient the edge `from -> to` in the current copy.
    Branch { from: usize, to: usize },
    /// The opposite direction of the last branch was saved as copy `id`.
    NewCopy(usize),
    /// Local completion of a triangle or chordless 4-cycle.
    Complete {
        cycle: Vec<usize>,
        forced: Vec<(usize, usize)>,
    },
    /// The current copy is dead. `path` is a shortcut path (first and last
    /// vertex joined by an arc), a directed cycle closed back to its first
    /// vertex, or a local cycle with no valid completion.
    Shortcut { path: Vec<usize> },
    /// Resume from saved copy `id`.
    MoveToCopy(usize),
}

impl TraceEvent {
    pub fn tag(&self) -> &'static str {
        match self {
            TraceEvent::Branch { .. } => "B",
            TraceEvent::NewCopy(_) => "NPOC",
            TraceEvent::Complete { .. } => "C",
            TraceEvent::Shortcut { .. } => "S",
            TraceEvent::MoveToCopy(_) => "MC",
        }
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[usize]| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            TraceEvent::Branch { from, to } => write!(f, "B {from} {to}"),
            TraceEvent::NewCopy(id) => write!(f, "NPOC {id}"),
            TraceEvent::Complete { cycle, forced } => {
                let arcs: Vec<String> = forced.iter().map(|(a, b)| format!("{a}>{b}")).collect();
                write!(f, "C {} -> {}", join(cycle), arcs.join(" "))
            }
            TraceEvent::Shortcut { path } => write!(f, "S {}", join(path)),
            TraceEvent::MoveToCopy(id) => write!(f, "MC {id}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchTrace {
    pub events: Vec<TraceEvent>,
    /// Search nodes visited.
    pub nodes: u64,
    /// Nodes that branched both ways.
    pub branch_points: u64,
}

impl SearchTrace {
    /// One event per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Oriented(Orientation),
    Impossible(SearchTrace),
}

impl SolveResult {
    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            SolveResult::Oriented(o) => Some(o),
            SolveResult::Impossible(_) => None,
        }
    }

    pub fn is_oriented(&self) -> bool {
        matches!(self, SolveResult::Oriented(_))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Record [`TraceEvent`]s. Node counts are always kept.
    pub record_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: 10_000_000,
            time_budget: None,
            record_trace: true,
        }
    }
}

impl SolverConfig {
    pub fn quiet() -> Self {
        SolverConfig {
            record_trace: false,
            ..Default::default()
        }
    }
}

/// Decides whether `g` has a semi-transitive orientation, with default limits.
pub fn solve(g: &Graph) -> Result<SolveResult> {
    solve_traced(g, SolverConfig::default()).map(|(r, _)| r)
}

/// Like [`solve`], also returning the trace of the search (which is the
/// payload of an impossible result).
pub fn solve_traced(g: &Graph, config: SolverConfig) -> Result<(SolveResult, SearchTrace)> {
    let mut search = Search {
        g,
        rules: LocalRules::new(g),
        config,
        started: Instant::now(),
        trace: SearchTrace::default(),
        next_copy: 1,
    };
    let dir = vec![Direction::Unset; g.size()];
    let found = search.explore(dir, None, true)?;
    let trace = search.trace;
    Ok(match found {
        Some(dir) => {
            let o = Orientation::from_parts(g.clone(), dir);
            let verdict = is_semi_transitive(&o)?;
            assert!(
                verdict.is_ok(),
                "solver produced a bad orientation: {verdict:?}"
            );
            (SolveResult::Oriented(o), trace)
        }
        None => (SolveResult::Impossible(trace.clone()), trace),
    })
}

struct Search<'a> {
    g: &'a Graph,
    rules: LocalRules,
    config: SolverConfig,
    started: Instant,
    trace: SearchTrace,
    next_copy: usize,
}

impl Search<'_> {
    fn log(&mut self, e: TraceEvent) {
        if self.config.record_trace {
            self.trace.events.push(e);
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.trace.nodes += 1;
        if self.trace.nodes > self.config.node_budget {
            return Err(Error::Budget(format!(
                "search exceeded {} nodes",
                self.config.node_budget
            )));
        }
        if let Some(limit) = self.config.time_budget {
            if self.started.elapsed() > limit {
                return Err(Error::Budget(format!("search exceeded {limit:?}")));
            }
        }
        Ok(())
    }

    /// `changed`: the edge just oriented by a branch (`None` at the root,
    /// where every local cycle is examined).
    fn explore(
        &mut self,
        mut dir: Vec<Direction>,
        changed: Option<usize>,
        root: bool,
    ) -> Result<Option<Vec<Direction>>> {
        self.tick()?;
        let seeds = changed.map(|e| vec![e]);
        let mut events = Vec::new();
        let outcome = self.rules.run(
            self.g,
            &mut dir,
            seeds.as_deref(),
            self.config.record_trace.then_some(&mut events),
        );
        for e in events {
            self.log(e);
        }
        if let Err(local) = outcome {
            let path = self.rules.cycle_ids(self.g, local);
            self.log(TraceEvent::Shortcut { path });
            return Ok(None);
        }
        if let Some(path) = self.dead_end(&dir) {
            self.log(TraceEvent::Shortcut { path });
            return Ok(None);
        }
        let Some(e) = dir.iter().position(|&d| d == Direction::Unset) else {
            return Ok(Some(dir));
        };
        let (i, j) = self.g.edge_indices()[e];
        let (a, b) = (self.g.id(i), self.g.id(j));
        self.log(TraceEvent::Branch { from: a, to: b });
        let mut first = dir.clone();
        first[e] = Direction::Forward;
        if root {
            return self.explore(first, Some(e), false);
        }
        self.trace.branch_points += 1;
        let copy = self.next_copy;
        self.next_copy += 1;
        self.log(TraceEvent::NewCopy(copy));
        if let Some(found) = self.explore(first, Some(e), false)? {
            return Ok(Some(found));
        }
        self.log(TraceEvent::MoveToCopy(copy));
        dir[e] = Direction::Backward;
        self.explore(dir, Some(e), false)
    }

    /// A directed cycle or an irreparable shortcut among the oriented arcs.
    fn dead_end(&self, dir: &[Direction]) -> Option<Vec<usize>> {
        let out = out_sets(self.g, dir);
        if let Some(mut cycle) = find_cycle(&out) {
            cycle.push(cycle[0]);
            return Some(cycle.into_iter().map(|v| self.g.id(v)).collect());
        }
        find_shortcut_idx(self.g, &out)
            .map(|(path, _)| path.into_iter().map(|v| self.g.id(v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_oriented() {
        let r = solve(&Graph::complete(4)).unwrap();
        let o = r.orientation().expect("oriented");
        assert!(is_semi_transitive(o).unwrap().is_ok());
    }

    #[test]
    fn wheel_w5_is_impossible() {
        match solve(&Graph::wheel(5)).unwrap() {
            SolveResult::Impossible(trace) => {
                assert!(trace.branch_points > 0);
                assert!(!trace.events.is_empty());
            }
            SolveResult::Oriented(o) => panic!("W5 oriented: {:?}", o.arcs()),
        }
    }

    #[test]
    fn edgeless_graph_is_trivially_oriented() {
        let r = solve(&Graph::from_edges(3, &[]).unwrap()).unwrap();
        assert!(r.is_oriented());
    }

    #[test]
    fn budget_is_a_distinct_error() {
        let cfg = SolverConfig {
            node_budget: 2,
            ..Default::default()
        };
        assert!(matches!(
            solve_traced(&Graph::wheel(5), cfg),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn trace_text_uses_operation_tags() {
        let (_, trace) = solve_traced(&Graph::wheel(5), SolverConfig::default()).unwrap();
        let text = trace.to_text();
        for line in text.lines() {
            let tag = line.split_whitespace().next().unwrap();
            assert!(["B", "NPOC", "C", "S", "MC"].contains(&tag), "{line}");
        }
    }
}
