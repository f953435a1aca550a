use super::{ensure, extract_corollary1, sealed, ExtractionOutcome, MonoCertificate, Trace, TraceStep};
use crate::detect::{CliqueCertificate, FanCertificate};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredCompleteGraph, Vertex, VertexSet};
use crate::matching::{greedy_near_complete_matching, max_matching, tutte_witness, Matching};

/// `4n + m + floor(6n/m) + 1`.
pub fn lemma2_threshold(n: usize, m: usize) -> usize {
    4 * n + m + 6 * n / m + 1
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Lemma2Options {
    /// The pivot vertex `w`.
    pub pivot: Vertex,
}

/// Monochromatic `F_n` or `K_m` in a coloring of `K_N` with
/// `N >= 4n + m + floor(6n/m) + 1`.
pub fn extract_lemma2(c: &ColoredCompleteGraph, n: usize, m: usize) -> Result<ExtractionOutcome> {
    extract_lemma2_with(c, n, m, Lemma2Options::default())
}

pub fn extract_lemma2_with(
    c: &ColoredCompleteGraph,
    n: usize,
    m: usize,
    opts: Lemma2Options,
) -> Result<ExtractionOutcome> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if m < 2 {
        return Err(Error::input("m must be at least 2"));
    }
    let big_n = c.n_vertices();
    let need = lemma2_threshold(n, m);
    if big_n < need {
        return Err(Error::input(format!(
            "N = {big_n} is below 4n + m + floor(6n/m) + 1 = {need}"
        )));
    }
    let w = opts.pivot;
    if w >= big_n {
        return Err(Error::input(format!("pivot {w} out of range")));
    }

    let mut trace = Trace::default();
    let col = if c.degree(w, Color::Blue) >= c.degree(w, Color::Red) {
        Color::Blue
    } else {
        Color::Red
    };
    let other = col.other();
    let b = c.view(col);
    let r = c.view(other);
    let nb = c.neighbors(w, col);
    let d_b = nb.len();
    trace.push(
        TraceStep::new("lemma2.pivot")
            .value("w", w)
            .value("d_B", d_b)
            .value("majority_is_red", (col == Color::Red) as i64),
    );

    if d_b >= 3 * n {
        trace.push(TraceStep::new("lemma2.corollary1"));
        let mut out = extract_corollary1(c, w, col, n)?;
        trace.extend(out.trace);
        out.trace = trace;
        return Ok(out);
    }

    let g = b.induced_unchecked(&nb);
    let tw = tutte_witness(&g.graph);
    let nu = tw.matching.len();
    if nu >= n {
        let blades = tw.matching.edges()[..n]
            .iter()
            .map(|&(x, y)| (g.original(x), g.original(y)))
            .collect();
        trace.push(TraceStep::new("lemma2.neighborhood_fan").value("nu", nu));
        let fan = FanCertificate {
            center: w,
            blades,
            color: Some(col),
        };
        return sealed(c, MonoCertificate::Fan(fan), n, trace);
    }

    let s: Vec<Vertex> = tw.s.iter().map(|&x| g.original(x)).collect();
    let mut comps: Vec<Vec<Vertex>> = g
        .graph
        .components_without(tw.s.as_slice())
        .into_iter()
        .map(|comp| {
            let mut v: Vec<Vertex> = comp.into_iter().map(|x| g.original(x)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let odd = tw.odd_components.len();
    let ell = comps.len();
    let cc = 6 * n / m + 1;
    let d = d_b as i64 - 2 * n as i64;
    trace.push(
        TraceStep::new("lemma2.tutte")
            .value("nu", nu)
            .value("d", d)
            .value("odd", odd)
            .value("ell", ell)
            .set("S", s.iter().copied()),
    );
    ensure(
        odd as i64 > s.len() as i64 + d,
        || format!("o(G-S) = {odd} < |S| + d + 1 = {}", s.len() as i64 + d + 1),
        &trace,
    )?;
    ensure(
        2 * ell > 2 * s.len() + m + cc,
        || format!("2l = {} < 2|S| + m + c + 1 = {}", 2 * ell, 2 * s.len() + m + cc + 1),
        &trace,
    )?;

    // C_1 first: smallest component, lowest minimum vertex on ties
    let first = (0..ell)
        .min_by_key(|&i| (comps[i].len(), comps[i][0]))
        .expect("at least one component");
    let c1 = comps.remove(first);
    comps.insert(0, c1);
    let reps: Vec<Vertex> = comps.iter().map(|comp| comp[0]).collect();
    trace.push(
        TraceStep::new("lemma2.components")
            .value("C1_size", comps[0].len())
            .set("reps", reps.iter().copied()),
    );

    if ell >= m {
        let members: VertexSet = reps[..m].iter().copied().collect();
        ensure(
            r.is_clique(members.as_slice()),
            || "representatives do not span a clique in the opposite color".into(),
            &trace,
        )?;
        trace.push(TraceStep::new("lemma2.rep_clique").set("K", members.iter().copied()));
        let k = CliqueCertificate {
            members,
            color: Some(other),
        };
        return sealed(c, MonoCertificate::Clique(k), m, trace);
    }

    let d_set: Vec<Vertex> = {
        let mut v: Vec<Vertex> = comps[1..].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    };
    ensure(
        comps[0].len() <= 6 * n / m,
        || format!("|C_1| = {} > floor(6n/m) = {}", comps[0].len(), 6 * n / m),
        &trace,
    )?;
    ensure(
        d_set.len() + ell > m + 2 * n,
        || format!("|D| = {} < m + 2n - l + 1", d_set.len()),
        &trace,
    )?;
    ensure(
        d_set.len() >= 2 * n + 2,
        || format!("|D| = {} < 2n + 2", d_set.len()),
        &trace,
    )?;

    let x: VertexSet = reps[1..].iter().copied().collect();
    let d_star: Vec<Vertex> = d_set.iter().copied().filter(|&v| !x.contains(v)).collect();
    let rd = r.induced_unchecked(&d_star);
    let m_r = max_matching(&rd.graph).map(|v| rd.original(v));
    let want = n as i64 - ell as i64 + 2;
    trace.push(
        TraceStep::new("lemma2.red_matching")
            .value("size", m_r.len())
            .value("want", want)
            .set("X", x.iter().copied())
            .set("D_star", d_star.iter().copied()),
    );

    let covered = m_r.vertices();
    let y: VertexSet = d_star.iter().copied().filter(|&v| !covered.contains(v)).collect();
    if (m_r.len() as i64) < want {
        ensure(
            y.len() >= m,
            || format!("unmatched part of D* has {} < m = {m} vertices", y.len()),
            &trace,
        )?;
        ensure(
            b.is_clique(y.as_slice()),
            || "unmatched part of D* is not a clique".into(),
            &trace,
        )?;
        let members: VertexSet = y.iter().take(m).copied().collect();
        trace.push(TraceStep::new("lemma2.unmatched_clique").set("Z", members.iter().copied()));
        let k = CliqueCertificate {
            members,
            color: Some(col),
        };
        return sealed(c, MonoCertificate::Clique(k), m, trace);
    }

    let m_greedy =
        greedy_near_complete_matching(r, &x, &y).map_err(|e| Error::logic(e.to_string(), &trace))?;
    ensure(
        m_greedy.len() == y.len() || m_greedy.len() + 1 >= x.len(),
        || format!("greedy matching of size {} below min(|Y|, |X| - 1)", m_greedy.len()),
        &trace,
    )?;
    let mut blades = Matching::from_pairs(m_r.edges().iter().copied());
    for &(a, bb) in m_greedy.edges() {
        blades.push(a, bb);
    }
    let used = m_greedy.vertices();
    let free_x: Vec<Vertex> = x.iter().copied().filter(|&v| !used.contains(v)).collect();
    for pair in free_x.chunks_exact(2) {
        if blades.len() >= n {
            break;
        }
        blades.push(pair[0], pair[1]);
    }
    trace.push(
        TraceStep::new("lemma2.combined")
            .value("M", m_r.len())
            .value("M_prime", m_greedy.len())
            .value("total", blades.len())
            .value("v1", reps[0])
            .set("Y", y.iter().copied()),
    );
    ensure(
        blades.len() >= n,
        || format!("matching in D has size {} < n = {n}", blades.len()),
        &trace,
    )?;
    blades.truncate(n);
    let fan = FanCertificate {
        center: reps[0],
        blades: blades.edges().to_vec(),
        color: Some(other),
    };
    sealed(c, MonoCertificate::Fan(fan), n, trace)
}
