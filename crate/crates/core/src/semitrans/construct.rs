use super::Orientation;
use crate::coloring::Coloring;
use crate::error::Result;
use crate::graph::Graph;

/// Orients every edge from the smaller color to the larger. With a proper
/// 3-coloring the result is semi-transitive: a directed path has at most
/// three vertices.
pub fn orientation_from_3coloring(g: &Graph, c: &Coloring) -> Result<Orientation> {
    orient_by_rank(g, c, 3, |color| color)
}

/// Orients edges by the color rules `1->2, 1->3, 1->4, 2->3, 2->4, 4->3`,
/// i.e. along the order `1 < 2 < 4 < 3`. The result is acyclic but need not
/// be semi-transitive; callers must check.
pub fn orientation_from_4coloring_rules(g: &Graph, c: &Coloring) -> Result<Orientation> {
    orient_by_rank(g, c, 4, |color| match color {
        4 => 3,
        3 => 4,
        other => other,
    })
}

fn orient_by_rank(
    g: &Graph,
    c: &Coloring,
    max: u32,
    rank: impl Fn(u32) -> u32,
) -> Result<Orientation> {
    c.check(g, Some(max))?;
    let rank_of = |v: usize| rank(c.get(v).expect("checked"));
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            if rank_of(u) < rank_of(v) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    Orientation::from_arcs(g.clone(), &arcs)
}
