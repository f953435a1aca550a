use super::{ensure, Trace, TraceStep};
use crate::detect::{check_certificate, find_fan_at, Certificate, FanCertificate, Host};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex, VertexSet};
use crate::matching::{hall_witness, max_matching, Matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Graph,
    Complement,
}

#[derive(Clone, Debug)]
pub struct Lemma3Outcome {
    /// Uncolored fan in `G` or in its complement, per `side`.
    pub fan: FanCertificate,
    pub side: Side,
    pub trace: Trace,
}

impl Lemma3Outcome {
    pub fn verify(&self, g: &SimpleGraph) -> std::result::Result<(), crate::detect::CertificateFailure> {
        let cert = Certificate::Fan(self.fan.clone());
        match self.side {
            Side::Graph => check_certificate(&cert, Host::Graph(g)),
            Side::Complement => check_certificate(&cert, Host::Graph(&g.complement())),
        }
    }
}

struct ClaimSet {
    v: Vertex,
    s: VertexSet,
    /// `N(S_v) ∩ V_0`, including `v`.
    nbrs: VertexSet,
}

/// `F_n` in `G` or its complement from a clique `V_0` with
/// `|V_0| >= ceil(3n/2) + 1` whose vertices each have at least `n` neighbors
/// outside `V_0`.
pub fn extract_lemma3(g: &SimpleGraph, v0: &VertexSet, n: usize) -> Result<Lemma3Outcome> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if let Some(&v) = v0.iter().find(|&&v| v >= g.n_vertices()) {
        return Err(Error::input(format!("vertex {v} of V_0 out of range")));
    }
    let need = (3 * n).div_ceil(2) + 1;
    if v0.len() < need {
        return Err(Error::input(format!(
            "|V_0| = {} is below ceil(3n/2) + 1 = {need}",
            v0.len()
        )));
    }
    if !g.is_clique(v0.as_slice()) {
        return Err(Error::input("V_0 is not a clique"));
    }
    for &v in v0 {
        let outside = g.neighbors(v).filter(|&u| !v0.contains(u)).count();
        if outside < n {
            return Err(Error::input(format!(
                "vertex {v} of V_0 has {outside} < n = {n} neighbors outside V_0"
            )));
        }
    }

    let mut trace = Trace::default();
    trace.push(
        TraceStep::new("lemma3.start")
            .value("n", n)
            .set("V0", v0.iter().copied()),
    );
    let graph_fan = |center: Vertex, m: Matching, trace: Trace| -> Result<Lemma3Outcome> {
        let out = Lemma3Outcome {
            fan: FanCertificate {
                center,
                blades: m.edges()[..n].to_vec(),
                color: None,
            },
            side: Side::Graph,
            trace,
        };
        finish(g, out, n)
    };

    for &v in v0 {
        if let Some(f) = find_fan_at(g, v, n)? {
            trace.push(TraceStep::new("lemma3.direct_fan").value("center", v));
            let out = Lemma3Outcome {
                fan: f,
                side: Side::Graph,
                trace,
            };
            return finish(g, out, n);
        }
    }

    let half_floor = n / 2;
    let mut claims: Vec<ClaimSet> = Vec::with_capacity(v0.len());
    for &v in v0 {
        let outside: Vec<Vertex> = g.neighbors(v).filter(|&u| !v0.contains(u)).collect();
        let sub = g.induced_unchecked(&outside);
        let m_v = max_matching(&sub.graph).map(|x| sub.original(x));
        let rest: Vec<Vertex> = v0.iter().copied().filter(|&u| u != v).collect();
        if 2 * m_v.len() >= half_floor {
            trace.push(TraceStep::new("lemma3.outside_matching").value("center", v).value("M_v", m_v.len()));
            let m = pair_up(m_v, &rest);
            ensure(m.len() >= n, || format!("extended matching at {v} has size {} < n", m.len()), &trace)?;
            return graph_fan(v, m, trace);
        }

        let covered = m_v.vertices();
        let free: Vec<Vertex> = outside.iter().copied().filter(|&u| !covered.contains(u)).collect();
        let z_len = n - 2 * m_v.len();
        ensure(
            free.len() >= z_len,
            || format!("only {} free outside neighbors at {v}, need {z_len}", free.len()),
            &trace,
        )?;
        let z: VertexSet = free[..z_len].iter().copied().collect();
        let y: VertexSet = rest.iter().copied().collect();
        let hw = hall_witness(g, &z, &y)?;
        let target = half_floor - 2 * m_v.len();
        if hw.matching.len() >= target {
            trace.push(
                TraceStep::new("lemma3.hall_matching")
                    .value("center", v)
                    .value("M_v", m_v.len())
                    .value("M_prime", hw.matching.len()),
            );
            let mut m = m_v;
            for &e in hw.matching.edges() {
                m.push(e.0, e.1);
            }
            let used = hw.matching.vertices();
            let rest: Vec<Vertex> = rest.into_iter().filter(|&u| !used.contains(u)).collect();
            let m = pair_up(m, &rest);
            ensure(m.len() >= n, || format!("extended matching at {v} has size {} < n", m.len()), &trace)?;
            return graph_fan(v, m, trace);
        }

        let mut nbrs: Vec<Vertex> = hw.neighbors.iter().copied().collect();
        nbrs.push(v);
        let nbrs: VertexSet = nbrs.into();
        trace.push(
            TraceStep::new("lemma3.claim")
                .value("v", v)
                .value("M_v", m_v.len())
                .set("S_v", hw.s.iter().copied())
                .set("N_S_v", nbrs.iter().copied()),
        );
        ensure(
            2 * hw.s.len() >= 2 * nbrs.len() + n,
            || format!("|S_{v}| = {} < |N(S_{v}) ∩ V_0| + n/2 = {} + {n}/2", hw.s.len(), nbrs.len()),
            &trace,
        )?;
        ensure(
            2 * nbrs.len() <= n,
            || format!("|N(S_{v}) ∩ V_0| = {} > n/2", nbrs.len()),
            &trace,
        )?;
        ensure(
            g.is_independent(hw.s.as_slice()),
            || format!("S_{v} is not independent"),
            &trace,
        )?;
        claims.push(ClaimSet {
            v,
            s: hw.s,
            nbrs,
        });
    }

    // greedy peeling of V_0
    let by_v = |v: Vertex| claims.iter().find(|c| c.v == v).expect("claim for every vertex");
    let overlap = |c: &ClaimSet, within: &[Vertex]| within.iter().filter(|&&u| c.nbrs.contains(u)).count();
    let pick = |within: &[Vertex]| {
        within
            .iter()
            .copied()
            .max_by_key(|&u| (overlap(by_v(u), within), std::cmp::Reverse(u)))
            .expect("nonempty")
    };
    let mut current: Vec<Vertex> = v0.iter().copied().collect();
    let mut chain: Vec<(Vertex, Vec<Vertex>)> = Vec::new();
    let last_set = loop {
        let vi = pick(&current);
        let cs = by_v(vi);
        let n_prime: Vec<Vertex> = current.iter().copied().filter(|&u| cs.nbrs.contains(u)).collect();
        let next: Vec<Vertex> = current.iter().copied().filter(|&u| !cs.nbrs.contains(u)).collect();
        trace.push(
            TraceStep::new("lemma3.peel")
                .value("v", vi)
                .set("N_prime", n_prime.iter().copied())
                .set("V_prev", current.iter().copied()),
        );
        chain.push((vi, n_prime));
        if next.is_empty() {
            break current;
        }
        current = next;
    };
    let t = chain.len();

    ensure(t > 3, || format!("peeling stopped after t = {t} <= 3 rounds"), &trace)?;
    for i in 0..t {
        let (vi, np) = &chain[i];
        ensure(!np.is_empty(), || format!("N'(S_{vi}) is empty"), &trace)?;
        ensure(2 * np.len() <= n, || format!("|N'(S_{vi})| = {} > n/2", np.len()), &trace)?;
        if i > 0 {
            ensure(
                np.len() <= chain[i - 1].1.len(),
                || format!("|N'| increased at step {}", i + 1),
                &trace,
            )?;
        }
        let s = &by_v(*vi).s;
        ensure(
            2 * s.len() >= 2 * np.len() + n,
            || format!("|S_{vi}| = {} < |N'| + n/2", s.len()),
            &trace,
        )?;
        for (vj, _) in &chain[..i] {
            ensure(
                s.is_disjoint(&by_v(*vj).s),
                || format!("S_{vi} meets S_{vj}"),
                &trace,
            )?;
        }
    }
    let union: Vec<Vertex> = {
        let mut u: Vec<Vertex> = chain[..t - 1]
            .iter()
            .flat_map(|(vi, _)| by_v(*vi).s.iter().copied())
            .collect();
        u.sort_unstable();
        u
    };
    ensure(
        union.len() >= 2 * n,
        || format!("sum of |S_v_i| over i < t is {} < 2n", union.len()),
        &trace,
    )?;
    let w = last_set[0];
    ensure(
        union.iter().all(|&s| !g.has_edge(w, s)),
        || format!("w = {w} is adjacent to a peeled S set"),
        &trace,
    )?;

    let comp = g.complement();
    let sub = comp.induced_unchecked(&union);
    let m = max_matching(&sub.graph).map(|x| sub.original(x));
    trace.push(
        TraceStep::new("lemma3.complement_matching")
            .value("t", t)
            .value("w", w)
            .value("size", m.len())
            .set("U", union.iter().copied()),
    );
    ensure(
        m.len() >= n,
        || format!("complement matching on the peeled S sets has size {} < n = {n}", m.len()),
        &trace,
    )?;
    let out = Lemma3Outcome {
        fan: FanCertificate {
            center: w,
            blades: m.edges()[..n].to_vec(),
            color: None,
        },
        side: Side::Complement,
        trace,
    };
    finish(g, out, n)
}

/// Adds consecutive pairs of `clique` to `m`.
fn pair_up(mut m: Matching, clique: &[Vertex]) -> Matching {
    for p in clique.chunks_exact(2) {
        m.push(p[0], p[1]);
    }
    m
}

fn finish(g: &SimpleGraph, out: Lemma3Outcome, n: usize) -> Result<Lemma3Outcome> {
    if let Err(e) = out.verify(g) {
        return Err(Error::logic(format!("produced fan fails check: {e}"), &out.trace));
    }
    ensure(
        out.fan.blades.len() == n,
        || format!("fan has {} blades, expected {n}", out.fan.blades.len()),
        &out.trace,
    )?;
    Ok(out)
}
