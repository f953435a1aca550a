//! Fans, books, and cliques: exact detectors that return checkable certificates.
//!
//! A fan `F_n` centered at `v` exists iff `ν(G[N(v)]) >= n`, so fan detection is
//! a neighborhood matching problem. Cliques use branch-and-bound.

mod check;
mod clique;
mod format;

pub use check::{check_certificate, CertificateFailure, Host};
pub use clique::find_clique;
pub use format::{read_certificate, write_certificate};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredCompleteGraph, SimpleGraph, Vertex, VertexSet};
use crate::matching::max_matching;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanCertificate {
    pub center: Vertex,
    pub blades: Vec<(Vertex, Vertex)>,
    pub color: Option<Color>,
}

impl FanCertificate {
    pub fn size(&self) -> usize {
        self.blades.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCertificate {
    pub members: VertexSet,
    pub color: Option<Color>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookCertificate {
    pub spine: (Vertex, Vertex),
    pub pages: Vec<Vertex>,
    pub color: Option<Color>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Fan(FanCertificate),
    Clique(CliqueCertificate),
    Book(BookCertificate),
}

impl Certificate {
    pub fn color(&self) -> Option<Color> {
        match self {
            Certificate::Fan(f) => f.color,
            Certificate::Clique(c) => c.color,
            Certificate::Book(b) => b.color,
        }
    }
}

impl From<FanCertificate> for Certificate {
    fn from(f: FanCertificate) -> Self {
        Certificate::Fan(f)
    }
}

impl From<CliqueCertificate> for Certificate {
    fn from(c: CliqueCertificate) -> Self {
        Certificate::Clique(c)
    }
}

impl From<BookCertificate> for Certificate {
    fn from(b: BookCertificate) -> Self {
        Certificate::Book(b)
    }
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::input(format!("{what} must be at least 1")));
    }
    Ok(())
}

/// Maximum matching of `G[N(v)]` in host labels.
pub fn neighborhood_matching(g: &SimpleGraph, v: Vertex) -> crate::matching::Matching {
    let nbrs: Vec<Vertex> = g.neighbors(v).collect();
    let sub = g.induced_unchecked(&nbrs);
    max_matching(&sub.graph).map(|i| sub.original(i))
}

/// A fan with `n` blades centered at `v`, if one exists.
pub fn find_fan_at(g: &SimpleGraph, v: Vertex, n: usize) -> Result<Option<FanCertificate>> {
    require_positive(n, "fan size")?;
    if v >= g.n_vertices() {
        return Err(Error::input(format!(
            "center {v} out of range for graph on {} vertices",
            g.n_vertices()
        )));
    }
    if g.degree(v) < 2 * n {
        return Ok(None);
    }
    let m = neighborhood_matching(g, v);
    if m.len() < n {
        return Ok(None);
    }
    Ok(Some(FanCertificate {
        center: v,
        blades: m.edges()[..n].to_vec(),
        color: None,
    }))
}

/// First center (by index) carrying an `F_n`.
pub fn find_fan(g: &SimpleGraph, n: usize) -> Result<Option<FanCertificate>> {
    require_positive(n, "fan size")?;
    for v in 0..g.n_vertices() {
        if let Some(f) = find_fan_at(g, v, n)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// A vertex maximizing `ν(G[N(v)])` (lowest index on ties) and that value.
pub fn max_fan(g: &SimpleGraph) -> Option<(Vertex, usize)> {
    (0..g.n_vertices())
        .map(|v| (v, neighborhood_matching(g, v).len()))
        .fold(None, |best, (v, k)| match best {
            Some((_, bk)) if bk >= k => best,
            _ => Some((v, k)),
        })
}

/// A book with spine `uv` and `n` pages, if `uv` is an edge with enough common neighbors.
pub fn find_book_at(
    g: &SimpleGraph,
    u: Vertex,
    v: Vertex,
    n: usize,
) -> Result<Option<BookCertificate>> {
    require_positive(n, "book size")?;
    if u >= g.n_vertices() || v >= g.n_vertices() {
        return Err(Error::input(format!("spine ({u},{v}) out of range")));
    }
    if !g.has_edge(u, v) {
        return Ok(None);
    }
    let common = g.common_neighbors(u, v);
    if common.len() < n {
        return Ok(None);
    }
    Ok(Some(BookCertificate {
        spine: (u.min(v), u.max(v)),
        pages: common[..n].to_vec(),
        color: None,
    }))
}

pub fn find_book(g: &SimpleGraph, n: usize) -> Result<Option<BookCertificate>> {
    require_positive(n, "book size")?;
    for (u, v) in g.edges() {
        if let Some(b) = find_book_at(g, u, v, n)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// Monochromatic `F_n`, trying Red before Blue.
pub fn find_mono_fan(c: &ColoredCompleteGraph, n: usize) -> Result<Option<FanCertificate>> {
    for col in Color::BOTH {
        if let Some(mut f) = find_fan(c.view(col), n)? {
            f.color = Some(col);
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Monochromatic `K_m`, trying Red before Blue.
pub fn find_mono_clique(c: &ColoredCompleteGraph, m: usize) -> Result<Option<CliqueCertificate>> {
    for col in Color::BOTH {
        if let Some(mut k) = find_clique(c.view(col), m)? {
            k.color = Some(col);
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn find_mono_book(c: &ColoredCompleteGraph, n: usize) -> Result<Option<BookCertificate>> {
    for col in Color::BOTH {
        if let Some(mut b) = find_book(c.view(col), n)? {
            b.color = Some(col);
            return Ok(Some(b));
        }
    }
    Ok(None)
}
