use super::{
    ensure, extract_corollary1, extract_lemma2, extract_lemma3, sealed, ExtractionOutcome, MonoCertificate, Side,
    Trace, TraceStep,
};
use crate::detect::FanCertificate;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredCompleteGraph};

/// `ceil(11n/2) + 5`.
pub fn theorem1_threshold(n: usize) -> usize {
    (11 * n).div_ceil(2) + 5
}

/// Monochromatic `F_n` in any coloring of `K_N` with `N >= ceil(11n/2) + 5`.
pub fn extract_theorem1_upper(c: &ColoredCompleteGraph, n: usize) -> Result<ExtractionOutcome> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    let big_n = c.n_vertices();
    let need = theorem1_threshold(n);
    if big_n < need {
        return Err(Error::input(format!(
            "N = {big_n} is below ceil(11n/2) + 5 = {need}"
        )));
    }
    let mut trace = Trace::default();

    for v in 0..big_n {
        for col in Color::BOTH {
            if c.degree(v, col) >= 3 * n {
                trace.push(
                    TraceStep::new("theorem1.high_degree")
                        .value("v", v)
                        .value("degree", c.degree(v, col))
                        .value("is_red", (col == Color::Red) as i64),
                );
                let mut out = extract_corollary1(c, v, col, n)?;
                trace.extend(out.trace);
                out.trace = trace;
                return Ok(out);
            }
        }
    }

    let m = big_n - 4 * n - 4;
    trace.push(TraceStep::new("theorem1.lemma2").value("m", m));
    let l2 = extract_lemma2(c, n, m)?;
    trace.extend(l2.trace);
    let k = match l2.result {
        MonoCertificate::Fan(f) => return sealed(c, MonoCertificate::Fan(f), n, trace),
        MonoCertificate::Clique(k) => k,
    };
    let col = k.color.expect("extracted cliques are colored");
    let g = c.view(col);
    for &v in &k.members {
        let outside = g.neighbors(v).filter(|&u| !k.members.contains(u)).count();
        ensure(
            outside >= n,
            || format!("vertex {v} has {outside} < n {col} neighbors outside the clique"),
            &trace,
        )?;
    }
    trace.push(
        TraceStep::new("theorem1.lemma3")
            .value("is_red", (col == Color::Red) as i64)
            .set("V0", k.members.iter().copied()),
    );
    let l3 = extract_lemma3(g, &k.members, n).map_err(|e| match e {
        Error::Input(msg) => Error::logic(format!("clique does not meet the clique lemma: {msg}"), &trace),
        e => e,
    })?;
    trace.extend(l3.trace);
    let fan_color = match l3.side {
        Side::Graph => col,
        Side::Complement => col.other(),
    };
    let fan = FanCertificate {
        color: Some(fan_color),
        ..l3.fan
    };
    sealed(c, MonoCertificate::Fan(fan), n, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn thresholds() {
        assert_eq!(theorem1_threshold(1), 11);
        assert_eq!(theorem1_threshold(2), 16);
        assert_eq!(theorem1_threshold(3), 22);
        assert_eq!(theorem1_threshold(14), 82);
    }

    #[test]
    fn below_threshold_is_input_error() {
        let c = ColoredCompleteGraph::monochromatic(15, Color::Red);
        assert!(extract_theorem1_upper(&c, 2).unwrap_err().is_input());
    }

    #[test]
    fn random_colorings() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6 {
            for _ in 0..10 {
                let big_n = theorem1_threshold(n);
                let c = ColoredCompleteGraph::from_fn(big_n, |_, _| {
                    if rng.gen_bool(0.5) {
                        Color::Red
                    } else {
                        Color::Blue
                    }
                });
                let out = extract_theorem1_upper(&c, n).unwrap();
                assert_eq!(out.verify(&c), Ok(()));
                assert!(out.result.as_fan().is_some());
            }
        }
    }

    #[test]
    fn all_blue_gives_blue_fan() {
        let c = ColoredCompleteGraph::monochromatic(17, Color::Blue);
        let out = extract_theorem1_upper(&c, 2).unwrap();
        assert_eq!(out.result.color(), Some(Color::Blue));
    }

    #[test]
    fn padded_symmetric_construction() {
        let rep = crate::construct::build_symmetric_lower_bound(4).unwrap();
        assert_eq!(rep.graph.n_vertices(), 12);
        let c = ColoredCompleteGraph::from_fn(27, |u, v| {
            if v >= 12 || rep.graph.has_edge(u, v) {
                Color::Red
            } else {
                Color::Blue
            }
        });
        let out = extract_theorem1_upper(&c, 4).unwrap();
        assert_eq!(out.verify(&c), Ok(()));
    }

    #[test]
    fn balanced_circulant_skips_high_degree_exit() {
        // n = 14, N = 82: red is C(82; 1..=20), so every red and blue degree
        // is 40 or 41, below 3n = 42
        let n = 14;
        let big_n = theorem1_threshold(n);
        let mut red = SimpleGraph::new(big_n);
        for u in 0..big_n {
            for k in 1..=20 {
                red.add_edge(u, (u + k) % big_n);
            }
        }
        let c = ColoredCompleteGraph::from_red(red);
        let out = extract_theorem1_upper(&c, n).unwrap();
        assert!(!out.trace.has("theorem1.high_degree"));
        assert!(out.trace.has("theorem1.lemma2"));
        assert_eq!(out.verify(&c), Ok(()));
    }

    #[test]
    fn planted_coloring_reaches_clique_lemma() {
        // n = 14, N = 82, m = 22. Vertex 0 is blue to A = 1..=20 and
        // I = 21..=41 and red to C = 42..=81. Blue on A is complete, I is red
        // inside and red to A, blue to C. A-C blue iff (c - 2a) mod 40 < 20; C
        // is red at circular distance <= 15. Every vertex has red and blue
        // degree 40 or 41, and blue on N(0) is K_20 plus 21 isolated vertices,
        // giving 22 components and a red K_22.
        let n = 14;
        let big_n = theorem1_threshold(n);
        let in_a = |v: usize| (1..=20).contains(&v);
        let in_i = |v: usize| (21..=41).contains(&v);
        let c = ColoredCompleteGraph::from_fn(big_n, |u, v| {
            let blue = match (u, v) {
                (0, v) => v <= 41,
                (u, v) if in_a(u) && in_a(v) => true,
                (u, v) if in_a(u) && in_i(v) => false,
                (u, _) if in_a(u) => ((v - 42) + 40 - 2 * (u - 1) % 40) % 40 < 20,
                (u, _) if in_i(u) => v >= 42,
                (u, v) => {
                    let d = (v - u).min(40 - (v - u));
                    d > 15
                }
            };
            if blue {
                Color::Blue
            } else {
                Color::Red
            }
        });
        for v in 0..big_n {
            for col in Color::BOTH {
                assert!(c.degree(v, col) < 3 * n, "vertex {v} {col}");
            }
        }
        let out = extract_theorem1_upper(&c, n).unwrap();
        assert!(out.trace.has("lemma2.rep_clique"), "{}", out.trace);
        let step = out.trace.find("theorem1.lemma3").unwrap();
        assert_eq!(step.get_set("V0").unwrap().len(), 22);
        assert_eq!(step.get_value("is_red"), Some(1));
        assert_eq!(out.verify(&c), Ok(()));
    }
}
