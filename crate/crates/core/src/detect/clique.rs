//! Exact `K_m` decision by branch-and-bound with a greedy-coloring bound.

use super::{require_positive, CliqueCertificate};
use crate::error::Result;
use crate::graph::{SimpleGraph, Vertex, VertexSet};

type Bits = Vec<u64>;

fn first(b: &[u64]) -> Option<Vertex> {
    b.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + b[i].trailing_zeros() as usize)
}

fn clear(b: &mut [u64], v: Vertex) {
    b[v / 64] &= !(1u64 << (v % 64));
}

fn is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

/// Candidates ordered by greedy color class, with the class index (1-based) of each.
fn color_order(g: &SimpleGraph, cand: &[u64]) -> (Vec<Vertex>, Vec<usize>) {
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut uncolored = cand.to_vec();
    let mut k = 0;
    while !is_empty(&uncolored) {
        k += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = first(&avail) {
            clear(&mut avail, v);
            clear(&mut uncolored, v);
            for (a, r) in avail.iter_mut().zip(g.row(v)) {
                *a &= !r;
            }
            order.push(v);
            colors.push(k);
        }
    }
    (order, colors)
}

fn expand(g: &SimpleGraph, current: &mut Vec<Vertex>, mut cand: Bits, m: usize) -> bool {
    if current.len() >= m {
        return true;
    }
    let (order, colors) = color_order(g, &cand);
    for i in (0..order.len()).rev() {
        if current.len() + colors[i] < m {
            return false;
        }
        let v = order[i];
        current.push(v);
        let next: Bits = cand.iter().zip(g.row(v)).map(|(a, r)| a & r).collect();
        if expand(g, current, next, m) {
            return true;
        }
        current.pop();
        clear(&mut cand, v);
    }
    false
}

/// A clique of exactly `m` vertices, if one exists.
pub fn find_clique(g: &SimpleGraph, m: usize) -> Result<Option<CliqueCertificate>> {
    require_positive(m, "clique size")?;
    let n = g.n_vertices();
    if m > n {
        return Ok(None);
    }
    let mut cand = vec![0u64; n.div_ceil(64)];
    for v in 0..n {
        cand[v / 64] |= 1 << (v % 64);
    }
    let mut current = Vec::new();
    if expand(g, &mut current, cand, m) {
        current.truncate(m);
        Ok(Some(CliqueCertificate {
            members: VertexSet::from(current),
            color: None,
        }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::tests::random_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_omega(g: &SimpleGraph) -> usize {
        let n = g.n_vertices();
        (0u32..1 << n)
            .filter(|&mask| {
                let s: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                g.is_clique(&s)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        let k = find_clique(&SimpleGraph::complete(6), 6).unwrap().unwrap();
        assert_eq!(k.members, VertexSet::range(6));
        assert!(find_clique(&SimpleGraph::cycle(5), 3).unwrap().is_none());
        assert!(find_clique(&SimpleGraph::new(3), 1).unwrap().is_some());
        assert!(find_clique(&SimpleGraph::new(3), 0).unwrap_err().is_input());
    }

    #[test]
    fn paley_17_has_clique_number_3() {
        let residues: Vec<usize> = (1..17).map(|x| x * x % 17).collect();
        let mut g = SimpleGraph::new(17);
        for u in 0..17 {
            for v in (u + 1)..17 {
                if residues.contains(&(v - u)) {
                    g.add_edge(u, v);
                }
            }
        }
        assert_eq!(brute_omega(&g), 3);
        assert!(find_clique(&g, 3).unwrap().is_some());
        assert!(find_clique(&g, 4).unwrap().is_none());
    }

    #[test]
    fn agrees_with_exhaustive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.95);
            let g = random_graph(&mut rng, n, p);
            let omega = brute_omega(&g);
            for m in 1..=n {
                let k = find_clique(&g, m).unwrap();
                assert_eq!(k.is_some(), m <= omega);
                if let Some(k) = k {
                    assert_eq!(k.members.len(), m);
                    assert!(g.is_clique(k.members.as_slice()));
                }
            }
        }
    }
}
