use super::{sealed, ExtractionOutcome, MonoCertificate, Trace, TraceStep};
use crate::detect::{find_fan_at, FanCertificate};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredCompleteGraph, Vertex};
use crate::matching::max_matching;

/// Monochromatic `F_n` from a vertex `v` with at least `3n` neighbors in `col`.
///
/// Either `N_col(v)` spans a `col` matching of size `n` (a `col` fan at `v`), or
/// the opposite color has an `F_n` inside `N_col(v)`; `r(nK_2, F_n) = 3n`
/// guarantees one of the two.
pub fn extract_corollary1(
    c: &ColoredCompleteGraph,
    v: Vertex,
    col: Color,
    n: usize,
) -> Result<ExtractionOutcome> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if v >= c.n_vertices() {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    let nbrs = c.neighbors(v, col);
    if nbrs.len() < 3 * n {
        return Err(Error::input(format!(
            "vertex {v} has {} {col} neighbors, need at least 3n = {}",
            nbrs.len(),
            3 * n
        )));
    }

    let mut trace = Trace::default();
    let same = c.view(col).induced_unchecked(&nbrs);
    let m = max_matching(&same.graph);
    trace.push(
        TraceStep::new("corollary1.neighborhood")
            .value("center", v)
            .value("degree", nbrs.len())
            .value("nu", m.len())
            .set("N", nbrs.iter().copied()),
    );

    if m.len() >= n {
        let blades = m.edges()[..n]
            .iter()
            .map(|&(a, b)| (same.original(a), same.original(b)))
            .collect();
        trace.push(TraceStep::new("corollary1.matching_fan").value("center", v));
        let fan = FanCertificate {
            center: v,
            blades,
            color: Some(col),
        };
        return sealed(c, MonoCertificate::Fan(fan), n, trace);
    }

    let other = c.view(col.other()).induced_unchecked(&nbrs);
    for u in 0..nbrs.len() {
        if let Some(f) = find_fan_at(&other.graph, u, n)? {
            let fan = FanCertificate {
                center: other.original(u),
                blades: f
                    .blades
                    .iter()
                    .map(|&(a, b)| (other.original(a), other.original(b)))
                    .collect(),
                color: Some(col.other()),
            };
            trace.push(TraceStep::new("corollary1.opposite_fan").value("center", fan.center));
            return sealed(c, MonoCertificate::Fan(fan), n, trace);
        }
    }
    Err(Error::logic(
        format!(
            "{} vertices carry neither a {col} matching of size {n} nor a {} F_{n}",
            nbrs.len(),
            col.other()
        ),
        &trace,
    ))
}
