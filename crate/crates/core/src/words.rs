//! Alternation words.
//!
//! Two letters alternate in a word when, after deleting every other letter,
//! what remains is `xyxy...` or `yxyx...`. A word represents a graph when its
//! letters are exactly the graph's vertices and alternation coincides with
//! adjacency.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Distinct letters, sorted.
    pub fn alphabet(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.letters.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn alternate(&self, x: usize, y: usize) -> Result<bool> {
        if x == y {
            return Err(Error::SameLetter(x));
        }
        for z in [x, y] {
            if !self.letters.contains(&z) {
                return Err(Error::LetterAbsent(z));
            }
        }
        Ok(alternates(&self.letters, x, y))
    }

    /// Graph on the distinct letters with an edge for every alternating pair.
    pub fn alternation_graph(&self) -> Graph {
        let alphabet = self.alphabet();
        let mut edges = Vec::new();
        for (a, &x) in alphabet.iter().enumerate() {
            for &y in &alphabet[a + 1..] {
                if alternates(&self.letters, x, y) {
                    edges.push((x, y));
                }
            }
        }
        Graph::with_vertices(alphabet, &edges).expect("alphabet is duplicate-free")
    }

    pub fn represents(&self, g: &Graph) -> Result<bool> {
        let alphabet = self.alphabet();
        if alphabet != g.vertices() {
            return Err(Error::AlphabetMismatch {
                word: alphabet,
                graph: g.vertices().to_vec(),
            });
        }
        Ok(self.alternation_graph() == *g)
    }

    /// Deletes every occurrence of `x`.
    pub fn without_letter(&self, x: usize) -> Word {
        Word::new(self.letters.iter().copied().filter(|&l| l != x).collect())
    }

    /// Parses either whitespace-separated tokens (`"10 2 10 2"`) or a compact
    /// digit string (`"14213243"`). A trailing `'` marks a primed letter; if
    /// any letter is primed, `i` becomes id `2i` and `i'` becomes `2i + 1`.
    pub fn parse(text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let tokens: Vec<(usize, bool)> = if text.contains(char::is_whitespace) {
            text.split_whitespace()
                .enumerate()
                .map(|(i, tok)| {
                    let (digits, primed) = match tok.strip_suffix('\'') {
                        Some(d) => (d, true),
                        None => (tok, false),
                    };
                    digits.parse::<usize>().map(|v| (v, primed)).map_err(|_| {
                        Error::parse(format!("token {}", i + 1), format!("bad letter `{tok}`"))
                    })
                })
                .collect::<Result<_>>()?
        } else {
            let mut out: Vec<(usize, bool)> = Vec::new();
            for (pos, ch) in text.char_indices() {
                match ch {
                    '0'..='9' => out.push((ch as usize - '0' as usize, false)),
                    '\'' => match out.last_mut() {
                        Some(last) if !last.1 => last.1 = true,
                        _ => {
                            return Err(Error::parse(
                                format!("column {}", pos + 1),
                                "prime must follow a digit",
                            ))
                        }
                    },
                    other => {
                        return Err(Error::parse(
                            format!("column {}", pos + 1),
                            format!("unexpected character `{other}`"),
                        ))
                    }
                }
            }
            out
        };
        let any_primed = tokens.iter().any(|&(_, p)| p);
        let letters = tokens
            .into_iter()
            .map(|(v, primed)| {
                if any_primed {
                    2 * v + usize::from(primed)
                } else {
                    v
                }
            })
            .collect();
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    /// Compact digits when every letter is below 10, space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l < 10) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

fn alternates(letters: &[usize], x: usize, y: usize) -> bool {
    let mut last = None;
    for &l in letters {
        if l == x || l == y {
            if last == Some(l) {
                return false;
            }
            last = Some(l);
        }
    }
    true
}

/// Limits for [`find_representant`].
#[derive(Clone, Copy, Debug)]
pub struct RepresentantSearch {
    pub k_max: usize,
    /// Upper bound on `order * k_max`, the longest word considered.
    pub max_word_len: usize,
    pub node_budget: u64,
}

impl Default for RepresentantSearch {
    fn default() -> Self {
        RepresentantSearch {
            k_max: 3,
            max_word_len: 48,
            node_budget: 50_000_000,
        }
    }
}

impl RepresentantSearch {
    pub fn with_k_max(k_max: usize) -> Self {
        RepresentantSearch {
            k_max,
            ..Default::default()
        }
    }
}

/// Looks for a `k`-uniform word (every letter exactly `k` times, `k <= k_max`)
/// representing `g`. `Ok(None)` only means nothing was found up to `k_max`; it
/// is not a non-representability verdict.
///
/// The first letter is pinned to the smallest vertex: rotating a uniform
/// representant cyclically yields another representant, so this loses nothing.
pub fn find_representant(g: &Graph, limits: RepresentantSearch) -> Result<Option<Word>> {
    let n = g.order();
    if n == 0 {
        return Ok(None);
    }
    if n * limits.k_max > limits.max_word_len {
        return Err(Error::Budget(format!(
            "{} vertices x k_max {} exceeds word length limit {}",
            n, limits.k_max, limits.max_word_len
        )));
    }
    let mut nodes = 0u64;
    for k in 1..=limits.k_max {
        let mut search = UniformSearch {
            g,
            k,
            count: vec![0; n],
            last_pos: vec![None; n],
            word: Vec::with_capacity(n * k),
            nodes: &mut nodes,
            budget: limits.node_budget,
        };
        search.count[0] = 1;
        search.last_pos[0] = Some(0);
        search.word.push(0);
        if search.extend()? {
            let letters = search.word.iter().map(|&i| g.id(i)).collect();
            let w = Word::new(letters);
            debug_assert_eq!(w.represents(g), Ok(true));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

struct UniformSearch<'a> {
    g: &'a Graph,
    k: usize,
    count: Vec<usize>,
    last_pos: Vec<Option<usize>>,
    word: Vec<usize>,
    nodes: &'a mut u64,
    budget: u64,
}

impl UniformSearch<'_> {
    /// Placing `x` keeps every neighbour alternating iff each neighbour has
    /// appeared since the previous `x`.
    fn can_place(&self, x: usize) -> bool {
        if self.count[x] == self.k {
            return false;
        }
        let Some(prev) = self.last_pos[x] else {
            return true;
        };
        self.g
            .neighbors(x)
            .all(|y| matches!(self.last_pos[y], Some(p) if p > prev))
    }

    fn extend(&mut self) -> Result<bool> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "representant search exceeded {} nodes",
                self.budget
            )));
        }
        let n = self.g.order();
        if self.word.len() == n * self.k {
            return Ok(self.non_edges_broken());
        }
        let pos = self.word.len();
        for x in 0..n {
            if !self.can_place(x) {
                continue;
            }
            let saved = self.last_pos[x];
            self.count[x] += 1;
            self.last_pos[x] = Some(pos);
            self.word.push(x);
            if self.extend()? {
                return Ok(true);
            }
            self.word.pop();
            self.last_pos[x] = saved;
            self.count[x] -= 1;
        }
        Ok(false)
    }

    fn non_edges_broken(&self) -> bool {
        let n = self.g.order();
        (0..n).all(|x| {
            (x + 1..n)
                .filter(|&y| !self.g.adjacent(x, y))
                .all(|y| !alternates(&self.word, x, y))
        })
    }
}

/// `1 2 1 3 2 4 3 ... n (n-1)`, which represents the path `1 - 2 - ... - n`.
pub fn path_word(n: usize) -> Word {
    assert!(n >= 1);
    let mut letters = vec![1];
    for i in 2..=n {
        letters.push(i);
        letters.push(i - 1);
    }
    Word::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn alternation_in_c4_word() {
        let word = w("14213243");
        assert_eq!(word.alternate(1, 2), Ok(true));
        assert_eq!(word.alternate(1, 3), Ok(false));
        assert_eq!(w("12").alternate(1, 2), Ok(true));
    }

    #[test]
    fn alternate_errors() {
        let word = w("14213243");
        assert_eq!(word.alternate(2, 2), Err(Error::SameLetter(2)));
        assert_eq!(word.alternate(1, 9), Err(Error::LetterAbsent(9)));
    }

    #[test]
    fn c4_from_word() {
        let g = w("14213243").alternation_graph();
        assert_eq!(g.vertices(), &[1, 2, 3, 4]);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 4), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn permutation_gives_clique() {
        let g = w("3102").alternation_graph();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn path_words() {
        for n in 2..=8 {
            let g = Graph::path(n).relabel(|v| v + 1).unwrap();
            assert_eq!(path_word(n).represents(&g), Ok(true), "n = {n}");
        }
    }

    #[test]
    fn represents_alphabet_mismatch() {
        let g = Graph::with_vertices(vec![1, 2, 3], &[(1, 2)]).unwrap();
        assert!(matches!(
            w("1212").represents(&g),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn primed_parsing() {
        assert_eq!(w("11'22'").letters(), &[2, 3, 4, 5]);
        assert_eq!(w("1 1' 10 10'").letters(), &[2, 3, 20, 21]);
        assert_eq!(w("12 3 12").letters(), &[12, 3, 12]);
        assert!(Word::parse("1x2").is_err());
        assert!(Word::parse("''").is_err());
        assert_eq!(Word::parse("  "), Err(Error::EmptyWord));
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(w("14213243").to_string(), "14213243");
        assert_eq!(Word::new(vec![10, 2, 10]).to_string(), "10 2 10");
        assert_eq!(
            w(&Word::new(vec![10, 2, 10]).to_string()).letters(),
            &[10, 2, 10]
        );
    }

    #[test]
    fn representant_for_triangle() {
        let found = find_representant(&Graph::complete(3), RepresentantSearch::with_k_max(1))
            .unwrap()
            .expect("permutation");
        assert_eq!(found.len(), 3);
        assert_eq!(found.represents(&Graph::complete(3)), Ok(true));
    }

    #[test]
    fn representant_for_c4_is_2_uniform() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            find_representant(&c4, RepresentantSearch::with_k_max(1)).unwrap(),
            None
        );
        let found = find_representant(&c4, RepresentantSearch::with_k_max(2))
            .unwrap()
            .expect("2-uniform word");
        assert_eq!(found.len(), 8);
        assert_eq!(found.represents(&c4), Ok(true));
    }

    #[test]
    fn representant_budget_is_an_error() {
        let g = Graph::complete(20);
        assert!(matches!(
            find_representant(&g, RepresentantSearch::with_k_max(3)),
            Err(Error::Budget(_))
        ));
    }
}
