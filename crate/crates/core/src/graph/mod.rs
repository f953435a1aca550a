//! Dense graphs and 2-edge-colorings of complete graphs.
//!
//! Vertices are dense indices `0..n`. Adjacency is stored as one bit row per
//! vertex so that pair lookup is O(1) and neighborhoods can be intersected
//! word by word.

mod io;

pub use io::{read_coloring, read_graph, write_coloring, write_graph, write_graph_with_comments};

use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Simple undirected graph on `0..n` with a dense bit-matrix adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        SimpleGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Panics on out-of-range endpoints or loops.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = SimpleGraph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn set_bit(&mut self, u: Vertex, v: Vertex, on: bool) {
        let idx = u * self.words + v / WORD;
        let mask = 1u64 << (v % WORD);
        if on {
            self.rows[idx] |= mask;
        } else {
            self.rows[idx] &= !mask;
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for {} vertices", self.n);
        assert_ne!(u, v, "self-loop at {u}");
        self.set_bit(u, v, true);
        self.set_bit(v, u, true);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.n && v < self.n);
        self.set_bit(u, v, false);
        self.set_bit(v, u, false);
    }

    /// Drops every edge at `v`, leaving it isolated.
    pub fn isolate(&mut self, v: Vertex) {
        let nbrs: Vec<_> = self.neighbors(v).collect();
        for u in nbrs {
            self.remove_edge(u, v);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && (self.rows[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    pub fn neighbors(&self, v: Vertex) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Common neighbors of `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let words: Vec<u64> = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| a & b)
            .collect();
        BitIter::new(&words).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `G[S]`. Vertex `i` of the result is `labels[i]` of `self`.
    pub fn induced(&self, s: &VertexSet) -> Result<Induced> {
        if let Some(&bad) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!(
                "vertex {bad} out of range for graph on {} vertices",
                self.n
            )));
        }
        Ok(self.induced_unchecked(s.as_slice()))
    }

    /// `G[S]` for a duplicate-free in-range slice; order of `s` becomes the new labelling.
    pub(crate) fn induced_unchecked(&self, s: &[Vertex]) -> Induced {
        let mut g = SimpleGraph::new(s.len());
        for (i, &a) in s.iter().enumerate() {
            for (j, &b) in s.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        Induced {
            graph: g,
            labels: s.to_vec(),
        }
    }

    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_independent(&self, s: &[Vertex]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| a != b && !self.has_edge(a, b)))
    }

    /// Connected components of `G - removed`, each sorted, ordered by smallest member.
    pub fn components_without(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Iterator over set bits of a word slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// An induced subgraph plus the map from its indices back to the host's.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: SimpleGraph,
    pub labels: Vec<Vertex>,
}

impl Induced {
    #[inline]
    pub fn original(&self, i: Vertex) -> Vertex {
        self.labels[i]
    }
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|&v| !other.contains(v))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().copied().filter(|&v| !other.contains(v)).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<_> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(s: &str) -> Option<Color> {
        match s {
            "R" => Some(Color::Red),
            "B" => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Red => f.write_str("red"),
            Color::Blue => f.write_str("blue"),
        }
    }
}

/// A total Red/Blue coloring of the edges of `K_n`.
///
/// Both color classes are materialized, so either view is available by reference.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredCompleteGraph {
    red: SimpleGraph,
    blue: SimpleGraph,
}

impl ColoredCompleteGraph {
    /// Coloring whose Red class is `red` and Blue class its complement.
    pub fn from_red(red: SimpleGraph) -> Self {
        let blue = red.complement();
        ColoredCompleteGraph { red, blue }
    }

    pub fn from_fn(n: usize, mut color: impl FnMut(Vertex, Vertex) -> Color) -> Self {
        let mut red = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if color(u, v) == Color::Red {
                    red.add_edge(u, v);
                }
            }
        }
        Self::from_red(red)
    }

    pub fn monochromatic(n: usize, col: Color) -> Self {
        Self::from_fn(n, |_, _| col)
    }

    pub fn n_vertices(&self) -> usize {
        self.red.n_vertices()
    }

    /// Color of the pair `{u, v}`; panics on `u == v`.
    pub fn color(&self, u: Vertex, v: Vertex) -> Color {
        assert_ne!(u, v, "no color on a loop");
        if self.red.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn view(&self, col: Color) -> &SimpleGraph {
        match col {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn color_subgraph(&self, col: Color) -> SimpleGraph {
        self.view(col).clone()
    }

    pub fn degree(&self, v: Vertex, col: Color) -> usize {
        self.view(col).degree(v)
    }

    pub fn neighbors(&self, v: Vertex, col: Color) -> Vec<Vertex> {
        self.view(col).neighbors(v).collect()
    }

    pub fn swapped(&self) -> Self {
        ColoredCompleteGraph {
            red: self.blue.clone(),
            blue: self.red.clone(),
        }
    }
}

impl fmt::Debug for ColoredCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredCompleteGraph")
            .field("n", &self.n_vertices())
            .field("red", &self.red.edges())
            .finish()
    }
}

/// The `choose(2)` pairs of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v)))
}
