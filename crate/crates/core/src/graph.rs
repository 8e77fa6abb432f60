//! Undirected simple graphs over small integer vertex ids.
//!
//! A [`Graph`] keeps its vertex ids sorted and works internally with dense
//! indices `0..order()`, so adjacency rows are bitsets. Most graphs built by
//! this crate use ids `0..n` and then id and index coincide; graphs read off
//! words keep the letters as ids (the 4-cycle of `14213243` lives on
//! `{1, 2, 3, 4}`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<usize>,
    adj: Vec<FixedBitSet>,
    /// Index pairs `(i, j)` with `i < j`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
}

/// A subset of vertex ids, used to select induced subgraphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexSet(pub BTreeSet<usize>);

impl VertexSet {
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        VertexSet(ids.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl Graph {
    /// Graph on vertices `0..n`. Repeated pairs collapse; `(u, v)` and `(v, u)`
    /// are the same edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::with_vertices((0..n).collect(), edges)
    }

    /// Graph on an arbitrary set of vertex ids; edges are given by id.
    pub fn with_vertices(ids: Vec<usize>, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut sorted = ids;
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        let n = sorted.len();
        let dense = sorted.iter().enumerate().all(|(i, &id)| i == id);
        let index_of = |id: usize| -> Result<usize> {
            if dense {
                if id < n {
                    Ok(id)
                } else {
                    Err(Error::EndpointOutOfRange { endpoint: id, n })
                }
            } else {
                sorted
                    .binary_search(&id)
                    .map_err(|_| Error::UnknownVertex(id))
            }
        };
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (i, j) = (index_of(u)?, index_of(v)?);
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(Graph::from_adjacency(sorted, adj))
    }

    fn from_adjacency(ids: Vec<usize>, adj: Vec<FixedBitSet>) -> Graph {
        let mut edges = Vec::new();
        for (i, row) in adj.iter().enumerate() {
            edges.extend(row.ones().filter(|&j| j > i).map(|j| (i, j)));
        }
        Graph { ids, adj, edges }
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// Wheel `W_k`: a hub (vertex `k`) joined to every vertex of the cycle `0..k`.
    pub fn wheel(k: usize) -> Graph {
        let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend((0..k).map(|i| (i, k)));
        Graph::from_edges(k + 1, &edges).expect("valid wheel")
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.ids
    }

    /// True when the vertex ids are exactly `0..order()`.
    pub fn is_dense(&self) -> bool {
        self.ids.iter().enumerate().all(|(i, &id)| i == id)
    }

    pub fn id(&self, index: usize) -> usize {
        self.ids[index]
    }

    pub fn index_of(&self, id: usize) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of the edge `{i, j}` (indices) in [`Graph::edge_indices`].
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).ok()
    }

    /// Edges as id pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(i, j)| (self.ids[i], self.ids[j]))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].ones()
    }

    pub fn adjacency(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones(..)
    }

    /// Subgraph on `s` keeping every edge with both ends in `s`. Vertex ids are
    /// preserved.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        let idx: Vec<usize> =
            s.0.iter()
                .map(|&id| self.index_of(id).ok_or(Error::UnknownVertex(id)))
                .collect::<Result<_>>()?;
        let m = idx.len();
        let mut adj = vec![FixedBitSet::with_capacity(m); m];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                if self.adjacent(i, j) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        Ok(Graph::from_adjacency(s.0.iter().copied().collect(), adj))
    }

    /// Searches for an induced copy of `pattern`: an injective map from pattern
    /// ids to host ids preserving both adjacency and non-adjacency.
    pub fn contains_induced(&self, pattern: &Graph) -> Option<BTreeMap<usize, usize>> {
        let k = pattern.order();
        if k > self.order() {
            return None;
        }
        if k == 0 {
            return Some(BTreeMap::new());
        }
        let order = matching_order(pattern);
        let mut image = vec![usize::MAX; k];
        let mut used = FixedBitSet::with_capacity(self.order());
        if self.extend_match(pattern, &order, 0, &mut image, &mut used) {
            Some((0..k).map(|p| (pattern.id(p), self.id(image[p]))).collect())
        } else {
            None
        }
    }

    fn extend_match(
        &self,
        pattern: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut FixedBitSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        let need = pattern.degree(p);
        for h in 0..self.order() {
            if used.contains(h) || self.degree(h) < need {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&q| pattern.adjacent(p, q) == self.adjacent(h, image[q]));
            if !consistent {
                continue;
            }
            image[p] = h;
            used.insert(h);
            if self.extend_match(pattern, order, depth + 1, image, used) {
                return true;
            }
            used.set(h, false);
        }
        image[p] = usize::MAX;
        false
    }

    /// Renames vertex ids through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Graph> {
        let ids: Vec<usize> = self.ids.iter().map(|&id| f(id)).collect();
        let edges: Vec<_> = self.edges().map(|(u, v)| (f(u), f(v))).collect();
        Graph::with_vertices(ids, &edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.order(),
            vertices: if self.is_dense() {
                None
            } else {
                Some(self.ids.clone())
            },
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Graph> {
        let parsed: GraphJson = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        parsed.into_graph()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for &id in &self.ids {
            let _ = writeln!(out, "  {id};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Pattern vertices ordered so that each one (after the first) has as many
/// already-placed neighbours as possible; ties go to higher degree.
fn matching_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = FixedBitSet::with_capacity(k);
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| {
                let links = pattern.adjacency(p).intersection(&placed).count();
                (links, pattern.degree(p), std::cmp::Reverse(p))
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

/// Serialized form: `{"n": 4, "edges": [[0, 1], ...]}`. Graphs whose ids are
/// not `0..n` also carry a `"vertices"` list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let ids = vertex_list(self.n, self.vertices)?;
        check_pairs(&ids, &edges, "edges")?;
        Graph::with_vertices(ids, &edges)
    }
}

/// The `vertices` field if present (it must hold `n` ids), else `0..n`.
pub(crate) fn vertex_list(n: usize, listed: Option<Vec<usize>>) -> Result<Vec<usize>> {
    match listed {
        None => Ok((0..n).collect()),
        Some(ids) if ids.len() == n => Ok(ids),
        Some(ids) => Err(Error::parse(
            "field `vertices`",
            format!("{} ids listed but n = {n}", ids.len()),
        )),
    }
}

/// Reports the first bad pair of a JSON edge or arc list by its position.
pub(crate) fn check_pairs(ids: &[usize], pairs: &[(usize, usize)], field: &str) -> Result<()> {
    for (k, &(u, v)) in pairs.iter().enumerate() {
        let problem = if u == v {
            Some(Error::SelfLoop(u))
        } else {
            [u, v]
                .into_iter()
                .find(|w| !ids.contains(w))
                .map(Error::UnknownVertex)
        };
        if let Some(e) = problem {
            return Err(Error::parse(format!("{field}[{k}]"), e.to_string()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange { endpoint: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::with_vertices(vec![1, 1], &[]),
            Err(Error::DuplicateVertex(1))
        );
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn induced_path_in_c4() {
        let p = c4().induced_subgraph(&VertexSet::new([0, 1, 2])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_full_set_is_identity() {
        let g = c4();
        let all = VertexSet::new(g.vertices().iter().copied());
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn induced_triangle_of_k4() {
        let k3 = Graph::complete(4)
            .induced_subgraph(&VertexSet::new([0, 2, 3]))
            .unwrap();
        assert_eq!(k3.size(), 3);
    }

    #[test]
    fn induced_subgraph_rejects_unknown_vertex() {
        assert_eq!(
            c4().induced_subgraph(&VertexSet::new([0, 7])),
            Err(Error::UnknownVertex(7))
        );
    }

    #[test]
    fn c4_has_no_triangle() {
        assert!(c4().contains_induced(&Graph::complete(3)).is_none());
    }

    #[test]
    fn self_containment() {
        let g = Graph::wheel(5);
        let m = g.contains_induced(&g).expect("self match");
        for (u, v) in g.edges() {
            assert!(g.has_edge(m[&u], m[&v]));
        }
    }

    #[test]
    fn extra_edge_destroys_induced_copy() {
        let host = Graph::path(4);
        let p3 = Graph::path(3);
        assert!(host.contains_induced(&p3).is_some());
        // closing 0-2 and 1-3 leaves no induced P3 in the 4-vertex host
        let denser =
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)]).unwrap();
        assert!(denser.contains_induced(&p3).is_none());
    }

    #[test]
    fn json_round_trip_with_sparse_ids() {
        let g = Graph::with_vertices(vec![1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        assert!(text.contains("vertices"));
        assert_eq!(Graph::from_json_str(&text).unwrap(), g);
        let dense = serde_json::to_string(&c4().to_json()).unwrap();
        assert_eq!(dense, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
    }

    #[test]
    fn json_errors_carry_location() {
        let err = Graph::from_json_str("{\"n\": 2,\n \"edges\": [[0, 1,]]}").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location.starts_with("line 2")));
        let err = Graph::from_json_str(r#"{"n": 2, "edges": [[0, 1], [1, 5]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location == "edges[1]"));
    }

    #[test]
    fn dot_uses_undirected_edges() {
        let dot = c4().to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
    }
}
