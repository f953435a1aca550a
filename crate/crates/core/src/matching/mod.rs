//! Maximum matchings with defect witnesses.
//!
//! General graphs use Edmonds' blossom algorithm; the Tutte–Berge witness is read
//! off the Gallai–Edmonds decomposition of a maximum matching. X–Y matchings use
//! augmenting paths and return a König/Hall deficiency set.

mod bipartite;
mod blossom;
mod tutte;

pub use bipartite::{greedy_near_complete_matching, hall_witness, HallWitness};
pub use tutte::{gallai_edmonds, tutte_witness, GallaiEdmonds, TutteWitness};

use blossom::{Blossom, NONE};

use crate::graph::{SimpleGraph, Vertex, VertexSet};

/// Set of pairwise vertex-disjoint pairs, each stored as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new() -> Self {
        Matching::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut m = Matching::new();
        for (u, v) in pairs {
            m.push(u, v);
        }
        m
    }

    pub(crate) fn from_mate(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &u)| u != NONE && v < u)
            .map(|(v, &u)| (v, u))
            .collect();
        Matching { edges }
    }

    pub fn push(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u.min(v), u.max(v)));
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn truncate(&mut self, k: usize) {
        self.edges.truncate(k);
    }

    pub fn vertices(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// `mate[v]` for every vertex of a graph on `n` vertices.
    pub fn mate_array(&self, n: usize) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Relabels every endpoint through `map`.
    pub fn map(&self, map: impl Fn(Vertex) -> Vertex) -> Matching {
        Matching::from_pairs(self.edges.iter().map(|&(u, v)| (map(u), map(v))))
    }

    /// Pairwise disjoint and every pair an edge of `g`.
    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let mut used = vec![false; g.n_vertices()];
        for &(u, v) in &self.edges {
            if u == v || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }
}

/// A maximum matching of `g`.
pub fn max_matching(g: &SimpleGraph) -> Matching {
    let mut b = Blossom::new(g, None);
    b.greedy_init();
    b.solve();
    Matching::from_mate(&b.mate)
}

/// `ν(g)`.
pub fn matching_number(g: &SimpleGraph) -> usize {
    max_matching(g).len()
}

/// Whether `m` admits an augmenting path in `g`, by a fresh blossom search from
/// every exposed vertex.
pub fn has_augmenting_path(g: &SimpleGraph, m: &Matching) -> bool {
    let mut b = Blossom::new(g, None);
    for &(u, v) in m.edges() {
        b.mate[u] = v;
        b.mate[v] = u;
    }
    (0..g.n_vertices()).any(|v| b.mate[v] == NONE && b.find_path(v).is_some())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive ν by branching on the lowest uncovered vertex.
    pub(crate) fn brute_nu(g: &SimpleGraph) -> usize {
        fn go(g: &SimpleGraph, alive: &mut Vec<bool>) -> usize {
            let Some(a) = (0..alive.len()).find(|&v| alive[v]) else {
                return 0;
            };
            alive[a] = false;
            let mut best = go(g, alive);
            for b in 0..alive.len() {
                if alive[b] && g.has_edge(a, b) {
                    alive[b] = false;
                    best = best.max(1 + go(g, alive));
                    alive[b] = true;
                }
            }
            alive[a] = true;
            best
        }
        go(g, &mut vec![true; g.n_vertices()])
    }

    pub(crate) fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_matching(&SimpleGraph::new(5)).len(), 0);
        assert_eq!(max_matching(&SimpleGraph::complete(4)).len(), 2);
        assert_eq!(brute_nu(&SimpleGraph::petersen()), 5);
        assert_eq!(max_matching(&SimpleGraph::petersen()).len(), 5);
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        for n in 3..12 {
            let m = max_matching(&SimpleGraph::cycle(n));
            assert_eq!(m.len(), n / 2);
        }
        // two triangles joined by a path through a blossom stem
        let g = SimpleGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4), (6, 7)],
        );
        assert_eq!(max_matching(&g).len(), 4);
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(0..=12);
            let p = rng.gen_range(0.05..0.9);
            let g = random_graph(&mut rng, n, p);
            let m = max_matching(&g);
            assert!(m.is_valid_in(&g));
            assert_eq!(m.len(), brute_nu(&g), "{g:?}");
            assert!(!has_augmenting_path(&g, &m));
        }
    }

    #[test]
    fn augmenting_path_detected_on_non_maximum_matching() {
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(has_augmenting_path(&p4, &Matching::from_pairs([(1, 2)])));
        assert!(!has_augmenting_path(&p4, &Matching::from_pairs([(0, 1), (2, 3)])));
    }
}
