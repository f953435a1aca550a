//! Independent re-validation of certificates against their host.
//!
//! Uses nothing but pair lookups on the host, so it can be trusted when the
//! producer is not.

use std::fmt;

use super::{BookCertificate, Certificate, CliqueCertificate, FanCertificate};
use crate::graph::{Color, ColoredCompleteGraph, SimpleGraph, Vertex};

#[derive(Clone, Copy, Debug)]
pub enum Host<'a> {
    Graph(&'a SimpleGraph),
    Coloring(&'a ColoredCompleteGraph),
}

impl Host<'_> {
    fn n_vertices(&self) -> usize {
        match self {
            Host::Graph(g) => g.n_vertices(),
            Host::Coloring(c) => c.n_vertices(),
        }
    }
}

/// First violated condition of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateFailure {
    VertexOutOfRange(Vertex),
    /// A colored certificate checked against an uncolored graph, or vice versa.
    ColorContext,
    BladesNotDisjoint,
    BladeTouchesCenter,
    DuplicateMember(Vertex),
    SpineInPages,
    MissingEdge(Vertex, Vertex),
    EdgeColorMismatch { u: Vertex, v: Vertex, expected: Color },
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFailure::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            CertificateFailure::ColorContext => {
                f.write_str("certificate color does not match host kind")
            }
            CertificateFailure::BladesNotDisjoint => f.write_str("blades not disjoint"),
            CertificateFailure::BladeTouchesCenter => f.write_str("blade contains the center"),
            CertificateFailure::DuplicateMember(v) => write!(f, "vertex {v} listed twice"),
            CertificateFailure::SpineInPages => f.write_str("spine vertex listed as a page"),
            CertificateFailure::MissingEdge(u, v) => write!(f, "missing edge ({u},{v})"),
            CertificateFailure::EdgeColorMismatch { u, v, expected } => {
                write!(f, "edge color mismatch at ({u},{v}): expected {expected}")
            }
        }
    }
}

impl std::error::Error for CertificateFailure {}

struct Checker<'a> {
    host: Host<'a>,
    color: Option<Color>,
}

impl Checker<'_> {
    fn new<'a>(host: Host<'a>, color: Option<Color>) -> Result<Checker<'a>, CertificateFailure> {
        match (&host, color) {
            (Host::Graph(_), None) | (Host::Coloring(_), Some(_)) => Ok(Checker { host, color }),
            _ => Err(CertificateFailure::ColorContext),
        }
    }

    fn vertex(&self, v: Vertex) -> Result<(), CertificateFailure> {
        if v >= self.host.n_vertices() {
            return Err(CertificateFailure::VertexOutOfRange(v));
        }
        Ok(())
    }

    fn edge(&self, u: Vertex, v: Vertex) -> Result<(), CertificateFailure> {
        if u == v {
            return Err(CertificateFailure::DuplicateMember(u));
        }
        match (self.host, self.color) {
            (Host::Graph(g), _) => {
                if !g.has_edge(u, v) {
                    return Err(CertificateFailure::MissingEdge(u, v));
                }
            }
            (Host::Coloring(c), Some(expected)) => {
                if c.color(u, v) != expected {
                    return Err(CertificateFailure::EdgeColorMismatch { u, v, expected });
                }
            }
            (Host::Coloring(_), None) => unreachable!(),
        }
        Ok(())
    }
}

fn check_fan(f: &FanCertificate, host: Host<'_>) -> Result<(), CertificateFailure> {
    let ck = Checker::new(host, f.color)?;
    ck.vertex(f.center)?;
    let mut seen: Vec<Vertex> = Vec::new();
    for &(a, b) in &f.blades {
        ck.vertex(a)?;
        ck.vertex(b)?;
        if a == f.center || b == f.center {
            return Err(CertificateFailure::BladeTouchesCenter);
        }
        if a == b || seen.contains(&a) || seen.contains(&b) {
            return Err(CertificateFailure::BladesNotDisjoint);
        }
        seen.push(a);
        seen.push(b);
    }
    for &(a, b) in &f.blades {
        ck.edge(f.center, a)?;
        ck.edge(f.center, b)?;
        ck.edge(a, b)?;
    }
    Ok(())
}

fn check_clique(k: &CliqueCertificate, host: Host<'_>) -> Result<(), CertificateFailure> {
    let ck = Checker::new(host, k.color)?;
    let members = k.members.as_slice();
    for (i, &a) in members.iter().enumerate() {
        ck.vertex(a)?;
        if members[..i].contains(&a) {
            return Err(CertificateFailure::DuplicateMember(a));
        }
    }
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            ck.edge(a, b)?;
        }
    }
    Ok(())
}

fn check_book(b: &BookCertificate, host: Host<'_>) -> Result<(), CertificateFailure> {
    let ck = Checker::new(host, b.color)?;
    let (u, v) = b.spine;
    ck.vertex(u)?;
    ck.vertex(v)?;
    ck.edge(u, v)?;
    for (i, &p) in b.pages.iter().enumerate() {
        ck.vertex(p)?;
        if p == u || p == v {
            return Err(CertificateFailure::SpineInPages);
        }
        if b.pages[..i].contains(&p) {
            return Err(CertificateFailure::DuplicateMember(p));
        }
        ck.edge(u, p)?;
        ck.edge(v, p)?;
    }
    Ok(())
}

pub fn check_certificate(cert: &Certificate, host: Host<'_>) -> Result<(), CertificateFailure> {
    match cert {
        Certificate::Fan(f) => check_fan(f, host),
        Certificate::Clique(k) => check_clique(k, host),
        Certificate::Book(b) => check_book(b, host),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn valid_fan_in_k9_passes() {
        let g = SimpleGraph::complete(9);
        let f = FanCertificate {
            center: 0,
            blades: vec![(1, 2), (3, 4), (5, 6), (7, 8)],
            color: None,
        };
        assert_eq!(check_certificate(&f.into(), Host::Graph(&g)), Ok(()));
    }

    #[test]
    fn overlapping_blades_fail() {
        let g = SimpleGraph::complete(9);
        let f = FanCertificate {
            center: 0,
            blades: vec![(1, 2), (2, 3)],
            color: None,
        };
        let e = check_certificate(&f.into(), Host::Graph(&g)).unwrap_err();
        assert_eq!(e, CertificateFailure::BladesNotDisjoint);
        assert_eq!(e.to_string(), "blades not disjoint");
    }

    #[test]
    fn wrong_color_blade_fails() {
        let mut red = SimpleGraph::complete(5);
        red.remove_edge(3, 4);
        let c = ColoredCompleteGraph::from_red(red);
        let f = FanCertificate {
            center: 0,
            blades: vec![(1, 2), (3, 4)],
            color: Some(Color::Red),
        };
        let e = check_certificate(&f.into(), Host::Coloring(&c)).unwrap_err();
        assert!(matches!(e, CertificateFailure::EdgeColorMismatch { u: 3, v: 4, .. }));
        assert!(e.to_string().starts_with("edge color mismatch"));
    }

    #[test]
    fn color_context_is_enforced() {
        let g = SimpleGraph::complete(3);
        let c = ColoredCompleteGraph::monochromatic(3, Color::Red);
        let colored = CliqueCertificate {
            members: VertexSet::range(3),
            color: Some(Color::Red),
        };
        let plain = CliqueCertificate {
            members: VertexSet::range(3),
            color: None,
        };
        assert_eq!(
            check_certificate(&colored.clone().into(), Host::Graph(&g)),
            Err(CertificateFailure::ColorContext)
        );
        assert_eq!(
            check_certificate(&plain.into(), Host::Coloring(&c)),
            Err(CertificateFailure::ColorContext)
        );
        assert_eq!(check_certificate(&colored.into(), Host::Coloring(&c)), Ok(()));
    }

    #[test]
    fn book_failures() {
        let g = SimpleGraph::cycle(5);
        let b = BookCertificate {
            spine: (0, 1),
            pages: vec![2],
            color: None,
        };
        assert_eq!(
            check_certificate(&b.into(), Host::Graph(&g)),
            Err(CertificateFailure::MissingEdge(0, 2))
        );
        let b = BookCertificate {
            spine: (0, 1),
            pages: vec![1],
            color: None,
        };
        assert_eq!(
            check_certificate(&b.into(), Host::Graph(&SimpleGraph::complete(3))),
            Err(CertificateFailure::SpineInPages)
        );
    }

    #[test]
    fn out_of_range_vertex() {
        let f = FanCertificate {
            center: 7,
            blades: vec![],
            color: None,
        };
        assert_eq!(
            check_certificate(&f.into(), Host::Graph(&SimpleGraph::complete(3))),
            Err(CertificateFailure::VertexOutOfRange(7))
        );
    }
}
