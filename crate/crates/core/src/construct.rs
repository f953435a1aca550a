//! Generators for the extremal fan-free graphs, each self-checked on build.
//!
//! * symmetric: three cliques of size `t` (largest even integer below `3n/2`),
//!   each split in halves `X_i, Y_i`, with an `⌈n/2⌉`-regular circulant between
//!   `X_i` and `Y_{i+1}`. Neither the graph nor its complement contains `F_n`.
//! * asymmetric: the same layout with `t` the largest even integer below
//!   `m/2 + n` and regularity `⌈n - m/2⌉`; no `F_n` in the graph and no `F_m` in
//!   the complement.
//! * tightness: a clique `V_0` of size `3n/2` whose vertices each have exactly
//!   `n` outside neighbors, yet no `F_n` is centered in `V_0` on either side.

use crate::detect::{find_fan, find_fan_at, neighborhood_matching};
use crate::error::{Error, Result};
use crate::extract::Trace;
use crate::graph::{SimpleGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub members: Vec<Vertex>,
}

/// Named vertex blocks. `blocks` partition the vertex set; `unions` name
/// coarser blocks built from them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockLabels {
    pub blocks: Vec<Block>,
    pub unions: Vec<(String, Vec<String>)>,
}

impl BlockLabels {
    fn push(&mut self, name: impl Into<String>, members: Vec<Vertex>) {
        self.blocks.push(Block {
            name: name.into(),
            members,
        });
    }

    fn union(&mut self, name: impl Into<String>, parts: &[&str]) {
        self.unions
            .push((name.into(), parts.iter().map(|s| s.to_string()).collect()));
    }

    pub fn get(&self, name: &str) -> Option<Vec<Vertex>> {
        if let Some(b) = self.blocks.iter().find(|b| b.name == name) {
            return Some(b.members.clone());
        }
        let (_, parts) = self.unions.iter().find(|(n, _)| n == name)?;
        let mut out = Vec::new();
        for p in parts {
            out.extend(self.get(p)?);
        }
        out.sort_unstable();
        Some(out)
    }

    /// Whether the leaf blocks partition `0..n`.
    pub fn is_partition(&self, n: usize) -> bool {
        let mut hit = vec![false; n];
        for b in &self.blocks {
            for &v in &b.members {
                if v >= n || hit[v] {
                    return false;
                }
                hit[v] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// `block <name>: <indices>` lines, leaf blocks first.
    pub fn comment_lines(&self) -> Vec<String> {
        let fmt = |name: &str, vs: &[Vertex]| {
            let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            format!("block {name}: {}", list.join(" "))
        };
        let mut out: Vec<String> = self.blocks.iter().map(|b| fmt(&b.name, &b.members)).collect();
        for (name, _) in &self.unions {
            out.push(fmt(name, &self.get(name).unwrap_or_default()));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: usize,
    pub m: Option<usize>,
    /// Clique size (three-block layouts) or `|V_0|` (tightness).
    pub t: usize,
    /// Cross regularity; 0 for the tightness graph.
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attestation {
    pub claim: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub graph: SimpleGraph,
    pub labels: BlockLabels,
    pub params: Params,
    pub attestations: Vec<Attestation>,
}

impl ConstructionReport {
    pub fn all_pass(&self) -> bool {
        self.attestations.iter().all(|a| a.passed)
    }

    /// Block comments followed by one `attest` line per claim.
    pub fn comment_lines(&self) -> Vec<String> {
        let mut out = self.labels.comment_lines();
        for a in &self.attestations {
            let verdict = if a.passed { "pass" } else { "FAIL" };
            out.push(format!("attest {verdict}: {}", a.claim));
        }
        out
    }

    fn finish(self) -> Result<Self> {
        if let Some(a) = self.attestations.iter().find(|a| !a.passed) {
            return Err(Error::logic(
                format!("attestation failed on valid parameters: {}", a.claim),
                &Trace::default(),
            ));
        }
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionKind {
    Symmetric,
    Asymmetric,
    Tightness,
}

/// Greatest even integer strictly below `num / 2`.
fn largest_even_below_half(num: usize) -> usize {
    if num == 0 {
        return 0;
    }
    2 * ((num - 1) / 4)
}

/// Circulant `r`-regular bipartite graph: left `i` ~ right `(i + k) mod half`,
/// `k < r`. Left side is `0..half`, right side `half..2*half`.
pub fn regular_bipartite(half: usize, r: usize) -> Result<SimpleGraph> {
    if r > half {
        return Err(Error::input(format!(
            "regularity {r} exceeds side size {half}"
        )));
    }
    let mut g = SimpleGraph::new(2 * half);
    add_circulant(&mut g, &(0..half).collect::<Vec<_>>(), &(half..2 * half).collect::<Vec<_>>(), r);
    Ok(g)
}

fn add_circulant(g: &mut SimpleGraph, left: &[Vertex], right: &[Vertex], r: usize) {
    let h = left.len();
    for (i, &a) in left.iter().enumerate() {
        for k in 0..r {
            g.add_edge(a, right[(i + k) % h]);
        }
    }
}

/// Three cliques of size `t`; `X_i` joined `r`-regularly to `Y_{i+1}`.
fn three_block(t: usize, r: usize) -> (SimpleGraph, BlockLabels) {
    let h = t / 2;
    let mut g = SimpleGraph::new(3 * t);
    let mut labels = BlockLabels::default();
    let x = |i: usize| (i * t..i * t + h).collect::<Vec<_>>();
    let y = |i: usize| (i * t + h..(i + 1) * t).collect::<Vec<_>>();
    for i in 0..3 {
        for a in i * t..(i + 1) * t {
            for b in (a + 1)..(i + 1) * t {
                g.add_edge(a, b);
            }
        }
        add_circulant(&mut g, &x(i), &y((i + 1) % 3), r);
        labels.push(format!("X{}", i + 1), x(i));
        labels.push(format!("Y{}", i + 1), y(i));
    }
    for i in 1..=3 {
        labels.union(format!("V{i}"), &[&format!("X{i}"), &format!("Y{i}")]);
    }
    (g, labels)
}

fn fan_free(g: &SimpleGraph, n: usize) -> bool {
    matches!(find_fan(g, n), Ok(None))
}

fn attest(claim: impl Into<String>, passed: bool) -> Attestation {
    Attestation {
        claim: claim.into(),
        passed,
    }
}

/// Fan-free coloring of `K_{3t}` with `t` the largest even integer below `3n/2`.
pub fn build_symmetric_lower_bound(n: usize) -> Result<ConstructionReport> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    let t = largest_even_below_half(3 * n);
    if t == 0 {
        return Err(Error::input(format!("construction is empty for n = {n} (t = 0)")));
    }
    let r = n.div_ceil(2);
    assert!(r <= t / 2, "t/2 >= ceil(n/2) for n >= 2");
    let (graph, labels) = three_block(t, r);

    let degree = r + t - 1;
    let attestations = vec![
        attest(
            format!("every vertex has degree ceil(n/2)+t-1 = {degree}"),
            (0..graph.n_vertices()).all(|v| graph.degree(v) == degree),
        ),
        attest(format!("no F_{n} in G"), fan_free(&graph, n)),
        attest(format!("no F_{n} in complement(G)"), fan_free(&graph.complement(), n)),
        // 3t + 1 >= 9n/2 - 5, doubled
        attest(
            format!("3t+1 = {} >= 9n/2-5", 3 * t + 1),
            2 * (3 * t + 1) + 10 >= 9 * n,
        ),
    ];
    ConstructionReport {
        graph,
        labels,
        params: Params { n, m: None, t, r },
        attestations,
    }
    .finish()
}

/// Graph with no `F_n` whose complement has no `F_m`, on `3t` vertices with `t`
/// the largest even integer below `m/2 + n`. Requires `m <= n <= 3m/2 - 3`.
pub fn build_asymmetric_lower_bound(n: usize, m: usize) -> Result<ConstructionReport> {
    if m == 0 || n == 0 {
        return Err(Error::input("n and m must be at least 1"));
    }
    if m > n {
        return Err(Error::input(format!("requires m <= n, got m = {m} > n = {n}")));
    }
    if 2 * n + 6 > 3 * m {
        return Err(Error::input(format!(
            "requires n <= 3m/2 - 3, got n = {n} > {}",
            (3 * m) as f64 / 2.0 - 3.0
        )));
    }
    let t = largest_even_below_half(m + 2 * n);
    // ceil(n - m/2) = ceil((2n - m) / 2)
    let r = (2 * n - m).div_ceil(2);
    let feasible = r <= t / 2;
    if !feasible {
        return Err(Error::logic(
            format!("ceil(n-m/2) = {r} exceeds t/2 = {}", t / 2),
            &Trace::default(),
        ));
    }
    let (graph, labels) = three_block(t, r);
    let attestations = vec![
        attest(format!("no F_{n} in G"), fan_free(&graph, n)),
        attest(format!("no F_{m} in complement(G)"), fan_free(&graph.complement(), m)),
        attest(
            format!("3t+1 = {} >= 3m/2+3n-5", 3 * t + 1),
            2 * (3 * t + 1) + 10 >= 3 * m + 6 * n,
        ),
        attest(format!("ceil(n-m/2) = {r} <= t/2 = {}", t / 2), feasible),
    ];
    ConstructionReport {
        graph,
        labels,
        params: Params { n, m: Some(m), t, r },
        attestations,
    }
    .finish()
}

/// Clique `V_0 = V_1 ∪ V_2 ∪ V_3` (`n/2` each) plus an independent outside set
/// `U_1 ∪ U_2 ∪ U_3 ∪ {x_0}` (`|U_i| = n - 1`), with `V_i`–`U_i` complete and
/// `x_0` joined to all of `V_0`.
pub fn build_lemma3_tightness(n: usize) -> Result<ConstructionReport> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::input(format!("n must be even and at least 2, got {n}")));
    }
    let half = n / 2;
    let v0_len = 3 * half;
    let total = v0_len + 3 * (n - 1) + 1;
    let mut graph = SimpleGraph::new(total);
    let mut labels = BlockLabels::default();
    let x0 = total - 1;
    for i in 0..3 {
        let vi: Vec<Vertex> = (i * half..(i + 1) * half).collect();
        let ui: Vec<Vertex> = (v0_len + i * (n - 1)..v0_len + (i + 1) * (n - 1)).collect();
        for &a in &vi {
            for &b in &ui {
                graph.add_edge(a, b);
            }
        }
        labels.push(format!("V{}", i + 1), vi);
        labels.push(format!("U{}", i + 1), ui);
    }
    for a in 0..v0_len {
        for b in (a + 1)..v0_len {
            graph.add_edge(a, b);
        }
        graph.add_edge(a, x0);
    }
    labels.push("x0", vec![x0]);
    labels.union("V0", &["V1", "V2", "V3"]);

    let complement = graph.complement();
    let no_center_fan = |g: &SimpleGraph| {
        (0..v0_len).all(|v| matches!(find_fan_at(g, v, n), Ok(None)))
    };
    let best = (0..v0_len)
        .map(|v| neighborhood_matching(&graph, v).len())
        .max()
        .unwrap_or(0);
    let attestations = vec![
        attest(
            format!("every V_0 vertex has exactly {n} neighbors outside V_0"),
            (0..v0_len).all(|v| graph.neighbors(v).filter(|&u| u >= v0_len).count() == n),
        ),
        attest(format!("no F_{n} centered in V_0 in G"), no_center_fan(&graph)),
        attest(
            format!("no F_{n} centered in V_0 in complement(G)"),
            no_center_fan(&complement),
        ),
        attest(
            format!("max neighborhood matching over V_0 is n-1 = {}", n - 1),
            best == n - 1,
        ),
    ];
    ConstructionReport {
        graph,
        labels,
        params: Params {
            n,
            m: None,
            t: v0_len,
            r: 0,
        },
        attestations,
    }
    .finish()
}
