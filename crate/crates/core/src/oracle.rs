//! Slow reference implementations written straight from the definitions.
//! They share no code with the fast paths and exist to cross-check them.

use crate::graph::Graph;
use crate::semitrans::{self, Orientation};
use crate::words::Word;

/// `x` and `y` alternate iff the word restricted to them never repeats a
/// letter twice in a row.
pub fn alternates(w: &Word, x: usize, y: usize) -> bool {
    let sub: Vec<usize> = w
        .letters()
        .iter()
        .copied()
        .filter(|&l| l == x || l == y)
        .collect();
    sub.windows(2).all(|p| p[0] != p[1])
}

/// Alternation graph on the word's letters, pair by pair.
pub fn alternation_graph(w: &Word) -> Graph {
    let letters = w.alphabet();
    let mut edges = Vec::new();
    for (k, &x) in letters.iter().enumerate() {
        for &y in &letters[k + 1..] {
            if alternates(w, x, y) {
                edges.push((x, y));
            }
        }
    }
    Graph::with_vertices(letters, &edges).expect("distinct letters")
}

/// Semi-transitivity by listing every directed path: no vertex revisits
/// itself (acyclic), and for every arc `v1 -> vk` and every directed path
/// `v1 ... vk` all forward pairs are arcs.
pub fn is_semi_transitive(o: &Orientation) -> bool {
    assert!(o.is_total());
    let g = o.base();
    let n = g.order();
    let out: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| o.has_arc_idx(i, j)).collect())
        .collect();
    let mut ok = true;
    for start in 0..n {
        let mut path = vec![start];
        walk(&out, o, &mut path, &mut ok);
        if !ok {
            return false;
        }
    }
    true
}

fn walk(out: &[Vec<usize>], o: &Orientation, path: &mut Vec<usize>, ok: &mut bool) {
    let last = *path.last().expect("non-empty");
    for &next in &out[last] {
        if path.contains(&next) {
            *ok = false;
            return;
        }
        path.push(next);
        let first = path[0];
        if path.len() >= 4 && o.has_arc_idx(first, next) {
            for i in 0..path.len() {
                for j in i + 1..path.len() {
                    if !o.has_arc_idx(path[i], path[j]) {
                        *ok = false;
                    }
                }
            }
        }
        if *ok {
            walk(out, o, path, ok);
        }
        path.pop();
        if !*ok {
            return;
        }
    }
}

/// Every total orientation of `g`, edge `k` taken low-to-high when bit `k`
/// of the counter is clear.
pub fn all_orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    let m = g.size();
    assert!(m < 64, "too many edges to enumerate");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u64..1 << m).map(move |mask| {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if mask >> k & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        Orientation::from_arcs(g.clone(), &arcs).expect("graph edges")
    })
}

/// Number of semi-transitive orientations among all `2^|E|`, using the
/// library verifier as the filter.
pub fn count_semi_transitive(g: &Graph) -> u64 {
    all_orientations(g)
        .filter(|o| semitrans::is_semi_transitive(o).expect("total").is_ok())
        .count() as u64
}

/// Whether any of the `2^|E|` orientations passes the path-listing check.
pub fn has_semi_transitive(g: &Graph) -> bool {
    all_orientations(g).any(|o| is_semi_transitive(&o))
}

/// Tries all `k^n` color assignments.
pub fn is_k_colorable(g: &Graph, k: u32) -> bool {
    let n = g.order();
    let mut color = vec![0u32; n];
    loop {
        if g.edge_indices().iter().all(|&(i, j)| color[i] != color[j]) {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            color[pos] += 1;
            if color[pos] < k {
                break;
            }
            color[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_alternation() {
        let w = Word::parse("14213243").unwrap();
        assert!(alternates(&w, 1, 2));
        assert!(!alternates(&w, 1, 3));
        assert_eq!(alternation_graph(&w), w.alternation_graph());
    }

    #[test]
    fn naive_semi_transitivity() {
        let bad = Orientation::from_arc_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!is_semi_transitive(&bad));
        let cyc = Orientation::from_arc_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_semi_transitive(&cyc));
        let tt = Orientation::from_arc_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(is_semi_transitive(&tt));
    }

    #[test]
    fn naive_coloring() {
        assert!(!is_k_colorable(&Graph::complete(4), 3));
        assert!(is_k_colorable(&Graph::cycle(5), 3));
        assert!(!is_k_colorable(&Graph::cycle(5), 2));
    }

    #[test]
    fn wheel_has_no_orientation_by_enumeration() {
        assert!(!has_semi_transitive(&Graph::wheel(5)));
        assert!(has_semi_transitive(&Graph::wheel(4)));
    }

    #[test]
    fn orientation_count_of_a_triangle() {
        // six transitive triangles, two directed cycles
        assert_eq!(count_semi_transitive(&Graph::complete(3)), 6);
        assert_eq!(all_orientations(&Graph::complete(3)).count(), 8);
    }
}
