//! Exhaustive reference answers for tiny graphs. Only `has_edge` is used, so
//! nothing here shares code with the matching or detection paths.

use crate::detect::{CliqueCertificate, FanCertificate};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};

pub const ORACLE_MAX_VERTICES: usize = 12;

fn check_size(g: &SimpleGraph) -> Result<()> {
    if g.n_vertices() > ORACLE_MAX_VERTICES {
        return Err(Error::input(format!(
            "oracle limited to {ORACLE_MAX_VERTICES} vertices, got {}",
            g.n_vertices()
        )));
    }
    Ok(())
}

fn without(vs: &[Vertex], skip: usize) -> Vec<Vertex> {
    vs.iter()
        .enumerate()
        .filter(|&(j, _)| j != skip)
        .map(|(_, &z)| z)
        .collect()
}

fn nu_within(g: &SimpleGraph, verts: &[Vertex]) -> usize {
    let Some((&x, rest)) = verts.split_first() else {
        return 0;
    };
    let mut best = nu_within(g, rest);
    for (i, &y) in rest.iter().enumerate() {
        if g.has_edge(x, y) {
            best = best.max(1 + nu_within(g, &without(rest, i)));
        }
    }
    best
}

/// `k` disjoint edges inside `verts`, if any.
fn pairs_within(g: &SimpleGraph, verts: &[Vertex], k: usize) -> Option<Vec<(Vertex, Vertex)>> {
    if k == 0 {
        return Some(Vec::new());
    }
    let (&x, rest) = verts.split_first()?;
    for (i, &y) in rest.iter().enumerate() {
        if g.has_edge(x, y) {
            if let Some(mut found) = pairs_within(g, &without(rest, i), k - 1) {
                found.insert(0, (x, y));
                return Some(found);
            }
        }
    }
    pairs_within(g, rest, k)
}

/// Matching number by trying every pairing.
pub fn oracle_max_matching(g: &SimpleGraph) -> Result<usize> {
    check_size(g)?;
    let all: Vec<Vertex> = (0..g.n_vertices()).collect();
    Ok(nu_within(g, &all))
}

/// First `F_n` embedding found, scanning centers in index order.
pub fn oracle_fan(g: &SimpleGraph, n: usize) -> Result<Option<FanCertificate>> {
    check_size(g)?;
    let size = g.n_vertices();
    for v in 0..size {
        let nb: Vec<Vertex> = (0..size).filter(|&u| u != v && g.has_edge(v, u)).collect();
        if let Some(blades) = pairs_within(g, &nb, n) {
            return Ok(Some(FanCertificate {
                center: v,
                blades,
                color: None,
            }));
        }
    }
    Ok(None)
}

/// Some `K_m` by subset enumeration.
pub fn oracle_clique(g: &SimpleGraph, m: usize) -> Result<Option<CliqueCertificate>> {
    check_size(g)?;
    let n = g.n_vertices();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let vs: Vec<Vertex> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let complete = vs
            .iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if complete {
            return Ok(Some(CliqueCertificate {
                members: vs.into(),
                color: None,
            }));
        }
    }
    Ok(None)
}
