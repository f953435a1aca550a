use super::Matching;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex, VertexSet};

/// Maximum X–Y matching plus a maximum-deficiency set `s ⊆ X`.
#[derive(Clone, Debug)]
pub struct HallWitness {
    pub matching: Matching,
    pub s: VertexSet,
    /// `N(s) ∩ Y`.
    pub neighbors: VertexSet,
    pub x_len: usize,
}

impl HallWitness {
    /// `|s| - |N(s) ∩ Y|`.
    pub fn defect(&self) -> usize {
        self.s.len() - self.neighbors.len()
    }

    /// König–Hall equality `|M| = |X| - (|s| - |N(s) ∩ Y|)`.
    pub fn equality_holds(&self) -> bool {
        self.s.len() >= self.neighbors.len() && self.matching.len() == self.x_len - self.defect()
    }
}

fn check_disjoint(x: &VertexSet, y: &VertexSet) -> Result<()> {
    if let Some(v) = x.iter().find(|&&v| y.contains(v)) {
        return Err(Error::input(format!("X and Y overlap at vertex {v}")));
    }
    Ok(())
}

fn check_range(g: &SimpleGraph, s: &VertexSet) -> Result<()> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.n_vertices()) {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    Ok(())
}

/// Kuhn-style augmenting search from X-vertex `xi`; `mate_y[j]` is the X index on Y index `j`.
fn try_kuhn(
    xi: usize,
    adj: &[Vec<usize>],
    seen: &mut [bool],
    mate_x: &mut [Option<usize>],
    mate_y: &mut [Option<usize>],
) -> bool {
    for &yj in &adj[xi] {
        if seen[yj] {
            continue;
        }
        seen[yj] = true;
        if mate_y[yj].is_none_or(|other| try_kuhn(other, adj, seen, mate_x, mate_y)) {
            mate_x[xi] = Some(yj);
            mate_y[yj] = Some(xi);
            return true;
        }
    }
    false
}

/// Maximum matching between `x` and `y` using only X–Y edges of `g`, with the
/// Hall deficiency set: the X-vertices reachable by alternating paths from
/// unmatched X-vertices.
pub fn hall_witness(g: &SimpleGraph, x: &VertexSet, y: &VertexSet) -> Result<HallWitness> {
    check_range(g, x)?;
    check_range(g, y)?;
    check_disjoint(x, y)?;
    let xs = x.as_slice();
    let ys = y.as_slice();
    let adj: Vec<Vec<usize>> = xs
        .iter()
        .map(|&a| (0..ys.len()).filter(|&j| g.has_edge(a, ys[j])).collect())
        .collect();

    let mut mate_x = vec![None; xs.len()];
    let mut mate_y = vec![None; ys.len()];
    for i in 0..xs.len() {
        let mut seen = vec![false; ys.len()];
        try_kuhn(i, &adj, &mut seen, &mut mate_x, &mut mate_y);
    }

    // alternating reachability from exposed X vertices
    let mut reach_x = vec![false; xs.len()];
    let mut reach_y = vec![false; ys.len()];
    let mut stack: Vec<usize> = (0..xs.len()).filter(|&i| mate_x[i].is_none()).collect();
    for &i in &stack {
        reach_x[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if reach_y[j] {
                continue;
            }
            reach_y[j] = true;
            if let Some(k) = mate_y[j] {
                if !reach_x[k] {
                    reach_x[k] = true;
                    stack.push(k);
                }
            }
        }
    }

    let matching = Matching::from_pairs(
        mate_x
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|j| (xs[i], ys[j]))),
    );
    let s: VertexSet = (0..xs.len()).filter(|&i| reach_x[i]).map(|i| xs[i]).collect();
    let neighbors: VertexSet = (0..ys.len()).filter(|&j| reach_y[j]).map(|j| ys[j]).collect();
    let w = HallWitness {
        matching,
        s,
        neighbors,
        x_len: xs.len(),
    };
    debug_assert!(w.equality_holds());
    Ok(w)
}

/// One greedy pass over `y`: each `y` takes the first still-free `x` neighbor.
///
/// When every `y` sees all but at most one vertex of `x`, the result has size at
/// least `min(|Y|, |X| - 1)`: a `y` left unmatched has all its neighbors taken.
pub fn greedy_near_complete_matching(
    g: &SimpleGraph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<Matching> {
    check_range(g, x)?;
    check_range(g, y)?;
    check_disjoint(x, y)?;
    let need = x.len().saturating_sub(1);
    for &b in y {
        let seen = x.iter().filter(|&&a| g.has_edge(a, b)).count();
        if seen < need {
            return Err(Error::input(format!(
                "vertex {b} of Y is adjacent to {seen} < |X|-1 = {need} vertices of X"
            )));
        }
    }
    let mut used: Vec<Vertex> = Vec::new();
    let mut m = Matching::new();
    for &b in y {
        if let Some(&a) = x.iter().find(|&&a| g.has_edge(a, b) && !used.contains(&a)) {
            used.push(a);
            m.push(a, b);
        }
    }
    debug_assert!(m.len() >= y.len().min(need));
    Ok(m)
}
