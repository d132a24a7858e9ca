//! Transition digraphs over `s`-overlaps and their Euler tours.
//!
//! Every word `x` of a set becomes an edge from its `s`-prefix to its
//! `s`-suffix. A closed walk using each edge once lists the words so that
//! each one's suffix is the next one's prefix.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, EulerFailure, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionDigraph {
    s: usize,
    n: usize,
    vertices: BTreeSet<Word>,
    /// Edge labels grouped by `(from, to)`, each group sorted.
    edges: BTreeMap<(Word, Word), Vec<Word>>,
}

/// Build the transition digraph of `words` with overlap length `s`.
///
/// All words must share one length `n`, be pairwise distinct, and satisfy
/// `1 <= s <= n-1`.
pub fn build_transition_digraph(words: &[Word], s: usize) -> Result<TransitionDigraph> {
    let n = words.first().map_or(0, |w| w.len());
    if words.is_empty() {
        // nothing to slice; any s with s >= 1 yields the empty digraph
        if s == 0 {
            return Err(Error::OverlapOutOfRange { s, n });
        }
        return Ok(TransitionDigraph {
            s,
            n,
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
        });
    }
    if s == 0 || s >= n {
        return Err(Error::OverlapOutOfRange { s, n });
    }
    let mut seen = BTreeSet::new();
    let mut vertices = BTreeSet::new();
    let mut edges: BTreeMap<(Word, Word), Vec<Word>> = BTreeMap::new();
    for w in words {
        if w.len() != n {
            return Err(Error::MixedLengths {
                word: w.to_string(),
                found: w.len(),
                expected: n,
            });
        }
        if !seen.insert(w) {
            return Err(Error::DuplicateWord(w.to_string()));
        }
        let from = w.s_prefix(s)?;
        let to = w.s_suffix(s)?;
        vertices.insert(from.clone());
        vertices.insert(to.clone());
        edges.entry((from, to)).or_default().push(w.clone());
    }
    for labels in edges.values_mut() {
        labels.sort();
    }
    Ok(TransitionDigraph {
        s,
        n,
        vertices,
        edges,
    })
}

impl TransitionDigraph {
    pub fn overlap(&self) -> usize {
        self.s
    }

    pub fn word_len(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Word> {
        self.vertices.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    /// `(from, to, label)` triples in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (&Word, &Word, &Word)> {
        self.edges
            .iter()
            .flat_map(|((from, to), labels)| labels.iter().map(move |l| (from, to, l)))
    }

    fn index_of(&self) -> BTreeMap<&Word, usize> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect()
    }

    /// In-degree equals out-degree at every vertex.
    pub fn is_balanced(&self) -> bool {
        let index = self.index_of();
        let mut excess = vec![0i64; self.vertices.len()];
        for ((from, to), labels) in &self.edges {
            excess[index[from]] += labels.len() as i64;
            excess[index[to]] -= labels.len() as i64;
        }
        excess.iter().all(|&e| e == 0)
    }

    /// All vertices lie in one component of the underlying undirected graph.
    /// Every vertex carries an edge, so isolated vertices never arise.
    pub fn is_weakly_connected(&self) -> bool {
        let index = self.index_of();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.vertices.len();
        for (from, to) in self.edges.keys() {
            let (a, b) = (root(&mut parent, index[from]), root(&mut parent, index[to]));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components <= 1
    }

    /// Weak component id of `vertex`; ids are numbered in sorted vertex order.
    pub fn component_of(&self, vertex: &Word) -> Option<usize> {
        let target = self.vertices.iter().position(|v| v == vertex)?;
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        let index = self.index_of();
        for (from, to) in self.edges.keys() {
            adjacency[index[from]].push(index[to]);
            adjacency[index[to]].push(index[from]);
        }
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut next_id = 0;
        for start in 0..self.vertices.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next_id;
            while let Some(v) = stack.pop() {
                for &u in &adjacency[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = next_id;
                        stack.push(u);
                    }
                }
            }
            next_id += 1;
        }
        Some(comp[target])
    }

    /// Closed walk through every edge exactly once, as the sequence of edge
    /// labels in walk order.
    ///
    /// Hierholzer's algorithm started from the smallest vertex, always leaving
    /// a vertex by its lexicographically smallest unused label, so the output
    /// is a deterministic function of the edge set.
    pub fn euler_tour(&self) -> Result<Vec<Word>> {
        if self.edges.is_empty() {
            return Err(Error::NotEulerian(EulerFailure::Empty));
        }
        if !self.is_balanced() {
            return Err(Error::NotEulerian(EulerFailure::Unbalanced));
        }
        if !self.is_weakly_connected() {
            return Err(Error::NotEulerian(EulerFailure::Disconnected));
        }

        let index = self.index_of();
        // out[v]: (label, head) pairs sorted descending so pop() yields the smallest
        let mut out: Vec<Vec<(&Word, usize)>> = vec![Vec::new(); self.vertices.len()];
        for ((from, to), labels) in &self.edges {
            for label in labels {
                out[index[from]].push((label, index[to]));
            }
        }
        for list in &mut out {
            list.sort_unstable_by(|a, b| b.0.cmp(a.0));
        }

        let start = (0..out.len()).find(|&v| !out[v].is_empty()).unwrap_or(0);
        let mut stack: Vec<(usize, Option<&Word>)> = vec![(start, None)];
        let mut tour = Vec::with_capacity(self.edge_count());
        while let Some(&(v, _)) = stack.last() {
            if let Some((label, head)) = out[v].pop() {
                stack.push((head, Some(label)));
            } else {
                let (_, label) = stack.pop().expect("stack is nonempty");
                if let Some(label) = label {
                    tour.push(label.clone());
                }
            }
        }
        tour.reverse();
        debug_assert_eq!(tour.len(), self.edge_count());
        Ok(tour)
    }

    /// Graphviz DOT rendering with vertices and edges in sorted order.
    /// Digits are printed with the text form for alphabet size `m`.
    pub fn to_dot(&self, m: u32) -> String {
        let mut dot = String::from("digraph transition {\n");
        for v in &self.vertices {
            let _ = writeln!(dot, "  \"{}\";", v.to_text(m));
        }
        for (from, to, label) in self.edges() {
            let _ = writeln!(
                dot,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                from.to_text(m),
                to.to_text(m),
                label.to_text(m)
            );
        }
        dot.push_str("}\n");
        dot
    }
}

/// Free-function form of [`TransitionDigraph::to_dot`].
pub fn export_dot(graph: &TransitionDigraph, m: u32) -> String {
    graph.to_dot(m)
}
