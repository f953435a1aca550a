use super::blossom::{Blossom, NONE};
use super::Matching;
use crate::graph::{SimpleGraph, VertexSet};

/// Gallai–Edmonds partition: `d` are the vertices missed by some maximum
/// matching, `a = N(d) \ d`, and `c` is everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
}

/// Maximum matching plus a set `s` attaining `max_S (o(G-S) - |S|)`.
#[derive(Clone, Debug)]
pub struct TutteWitness {
    pub matching: Matching,
    pub s: VertexSet,
    pub odd_components: Vec<VertexSet>,
}

impl TutteWitness {
    /// `o(G-S) - |S|`.
    pub fn deficiency(&self) -> isize {
        self.odd_components.len() as isize - self.s.len() as isize
    }

    /// Tutte–Berge equality `2|M| = n - (o(G-S) - |S|)`.
    pub fn equality_holds(&self, n: usize) -> bool {
        2 * self.matching.len() as isize == n as isize - self.deficiency()
    }

    /// Whether the witness shows `o(G-S) >= |S| + d + 1`, i.e. that no matching
    /// of size `(n-d)/2` exists.
    pub fn certifies_below(&self, d: usize) -> bool {
        self.odd_components.len() > self.s.len() + d
    }

    /// Re-derives the odd components of `g - s` and compares with the listed ones.
    pub fn components_are_exact(&self, g: &SimpleGraph) -> bool {
        let odd: Vec<VertexSet> = g
            .components_without(self.s.as_slice())
            .into_iter()
            .filter(|c| c.len() % 2 == 1)
            .map(VertexSet::from)
            .collect();
        odd == self.odd_components
    }
}

/// Gallai–Edmonds decomposition computed from one maximum matching `M`.
///
/// An exposed vertex is in `D`. A matched vertex `v` with mate `u` is in `D` iff
/// `G - v` has an `M - uv` augmenting path; any such path must start at `u`, so a
/// single search from `u` decides it.
pub fn gallai_edmonds(g: &SimpleGraph) -> (Matching, GallaiEdmonds) {
    let n = g.n_vertices();
    let mut b = Blossom::new(g, None);
    b.greedy_init();
    b.solve();
    let mate = b.mate.clone();

    let mut in_d = vec![false; n];
    for v in 0..n {
        let u = mate[v];
        if u == NONE {
            in_d[v] = true;
            continue;
        }
        let mut probe = Blossom::new(g, Some(v));
        probe.mate.clone_from(&mate);
        probe.mate[v] = NONE;
        probe.mate[u] = NONE;
        in_d[v] = probe.find_path(u).is_some();
    }

    let d: VertexSet = (0..n).filter(|&v| in_d[v]).collect();
    let a: VertexSet = (0..n)
        .filter(|&v| !in_d[v] && g.neighbors(v).any(|u| in_d[u]))
        .collect();
    let c: VertexSet = (0..n).filter(|&v| !in_d[v] && !a.contains(v)).collect();
    (Matching::from_mate(&mate), GallaiEdmonds { d, a, c })
}

pub fn tutte_witness(g: &SimpleGraph) -> TutteWitness {
    let (matching, ge) = gallai_edmonds(g);
    let odd_components: Vec<VertexSet> = g
        .components_without(ge.a.as_slice())
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(VertexSet::from)
        .collect();
    let w = TutteWitness {
        matching,
        s: ge.a,
        odd_components,
    };
    debug_assert!(w.equality_holds(g.n_vertices()));
    w
}
