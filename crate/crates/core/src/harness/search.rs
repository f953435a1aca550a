//! Exhaustive backtracking over 2-colorings of `K_N` for small `N`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::detect::{find_clique, find_fan};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredCompleteGraph, SimpleGraph};
use crate::matching::matching_number;

pub const DEFAULT_MAX_VERTICES: usize = 10;
const HARD_MAX_VERTICES: usize = 32;
const FLUSH_EVERY: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Fan(usize),
    Clique(usize),
    /// `nK_2`.
    Matching(usize),
}

impl Target {
    /// Present in every coloring with at least one vertex.
    fn is_trivial(self) -> bool {
        matches!(self, Target::Fan(0) | Target::Clique(0 | 1) | Target::Matching(0))
    }

    /// Whether `g` contains the target, by the fast detectors.
    pub fn found_in(self, g: &SimpleGraph) -> Result<bool> {
        Ok(match self {
            Target::Fan(n) => find_fan(g, n)?.is_some(),
            Target::Clique(m) => find_clique(g, m)?.is_some(),
            Target::Matching(n) => matching_number(g) >= n,
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Fan(n) => write!(f, "fan:{n}"),
            Target::Clique(m) => write!(f, "clique:{m}"),
            Target::Matching(n) => write!(f, "matching:{n}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("bad target {s:?}, expected fan:<n>, clique:<m> or matching:<n>"));
        let (kind, num) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = num.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "fan" => Ok(Target::Fan(k)),
            "clique" => Ok(Target::Clique(k)),
            "matching" => Ok(Target::Matching(k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Node budget; `None` searches to completion.
    pub budget: Option<u64>,
    /// Sequential subtree order, so the witness is reproducible.
    pub deterministic: bool,
    pub symmetry_breaking: bool,
    /// Worker count; falls back to `RAMSEY_THREADS`, then to all cores.
    pub threads: Option<usize>,
    pub max_vertices: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            deterministic: false,
            symmetry_breaking: true,
            threads: None,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every coloring contains a target.
    Arrow,
    /// Some coloring avoids both targets.
    Witness,
    /// Budget ran out first.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub red: Target,
    pub blue: Target,
    pub n_vertices: usize,
    pub verdict: Verdict,
    pub witness: Option<ColoredCompleteGraph>,
    pub stats: SearchStats,
}

/// `RAMSEY_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("RAMSEY_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
}

type Masks = [u32; HARD_MAX_VERTICES];

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

fn has_matching(adj: &Masks, mask: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (mask.count_ones() as usize) < 2 * k {
        return false;
    }
    let x = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << x);
    for y in bits(adj[x] & rest) {
        if has_matching(adj, rest & !(1 << y), k - 1) {
            return true;
        }
    }
    has_matching(adj, rest, k)
}

fn has_clique(adj: &Masks, mut mask: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    while mask.count_ones() as usize >= k {
        let x = mask.trailing_zeros() as usize;
        mask &= !(1 << x);
        if has_clique(adj, mask & adj[x], k - 1) {
            return true;
        }
    }
    false
}

/// Whether the freshly added edge `uv` completes a copy of `t` in `adj`.
/// Any new copy uses `uv`, so only copies through it are examined.
fn creates(t: Target, adj: &Masks, full: u32, u: usize, v: usize) -> bool {
    match t {
        Target::Fan(n) => {
            let centers = (1u32 << u) | (1 << v) | (adj[u] & adj[v]);
            bits(centers).any(|c| has_matching(adj, adj[c], n))
        }
        Target::Clique(m) => m <= 2 || has_clique(adj, adj[u] & adj[v], m - 2),
        Target::Matching(n) => has_matching(adj, full & !(1 << u) & !(1 << v), n.saturating_sub(1)),
    }
}

#[derive(Clone)]
struct State {
    red: Masks,
    blue: Masks,
}

impl State {
    fn new() -> Self {
        State {
            red: [0; HARD_MAX_VERTICES],
            blue: [0; HARD_MAX_VERTICES],
        }
    }

    fn set(&mut self, u: usize, v: usize, col: Color) {
        let m = match col {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }

    fn unset(&mut self, u: usize, v: usize, col: Color) {
        let m = match col {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        m[u] &= !(1 << v);
        m[v] &= !(1 << u);
    }
}

struct Ctx<'a> {
    red: Target,
    blue: Target,
    full: u32,
    edges: &'a [(usize, usize)],
    nodes: &'a AtomicU64,
    budget: u64,
    stop: &'a AtomicBool,
    exhausted: &'a AtomicBool,
}

impl Ctx<'_> {
    /// Colors edge `idx`; false if that completes a target.
    fn place(&self, st: &mut State, idx: usize, col: Color) -> bool {
        let (u, v) = self.edges[idx];
        st.set(u, v, col);
        let bad = match col {
            Color::Red => creates(self.red, &st.red, self.full, u, v),
            Color::Blue => creates(self.blue, &st.blue, self.full, u, v),
        };
        if bad {
            st.unset(u, v, col);
        }
        !bad
    }

    fn flush(&self, local: &mut u64) {
        let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total > self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&self, st: &mut State, idx: usize, local: &mut u64) -> Option<State> {
        if idx == self.edges.len() {
            return Some(st.clone());
        }
        *local += 1;
        if *local >= FLUSH_EVERY {
            self.flush(local);
        }
        if self.stop.load(Ordering::Relaxed) {
            return None;
        }
        let (u, v) = self.edges[idx];
        for col in Color::BOTH {
            if self.place(st, idx, col) {
                if let Some(w) = self.dfs(st, idx + 1, local) {
                    return Some(w);
                }
                st.unset(u, v, col);
            }
        }
        None
    }

    fn run_task(&self, prefix: &[Color]) -> Option<State> {
        let mut st = State::new();
        for (idx, &col) in prefix.iter().enumerate() {
            if !self.place(&mut st, idx, col) {
                return None;
            }
        }
        let mut local = 0;
        let out = self.dfs(&mut st, prefix.len(), &mut local);
        self.flush(&mut local);
        out
    }
}

/// Patterns `Red^a Blue^(len-a)`.
fn sorted_patterns(len: usize) -> Vec<Vec<Color>> {
    (0..=len)
        .rev()
        .map(|a| {
            let mut p = vec![Color::Red; a];
            p.resize(len, Color::Blue);
            p
        })
        .collect()
}

fn all_patterns(len: usize) -> Vec<Vec<Color>> {
    (0..1u64 << len)
        .map(|mask| {
            (0..len)
                .map(|i| if mask >> (len - 1 - i) & 1 == 0 { Color::Red } else { Color::Blue })
                .collect()
        })
        .collect()
}

/// Colors of the edges at vertices 0 and 1, one per subtree.
fn prefixes(n: usize, symmetric_targets: bool, symmetry: bool) -> Vec<Vec<Color>> {
    let row0 = n - 1;
    let row1 = n.saturating_sub(2);
    let mut out = Vec::new();
    let firsts = if symmetry {
        // relabel so vertex 0's red neighbors come first; with equal targets
        // swap colors so red is the majority at vertex 0
        sorted_patterns(row0)
            .into_iter()
            .filter(|p| {
                let k = p.iter().filter(|&&c| c == Color::Red).count();
                !symmetric_targets || 2 * k >= row0
            })
            .collect()
    } else {
        all_patterns(row0)
    };
    for p0 in firsts {
        let seconds = if symmetry && n >= 2 {
            // vertices 2..=k and k+1..n-1 (those with a fixed row-0 color other
            // than vertex 1) are interchangeable, so sort row 1 within each
            let k = p0.iter().filter(|&&c| c == Color::Red).count();
            let red_block = k.saturating_sub(1).min(row1);
            let a = sorted_patterns(red_block);
            let b = sorted_patterns(row1 - red_block);
            let mut v = Vec::new();
            for x in &a {
                for y in &b {
                    let mut p = x.clone();
                    p.extend_from_slice(y);
                    v.push(p);
                }
            }
            v
        } else {
            all_patterns(row1)
        };
        for p1 in seconds {
            let mut p = p0.clone();
            p.extend(p1);
            out.push(p);
        }
    }
    out
}

/// Decides `K_N -> (red, blue)` by exhaustive search.
pub fn ramsey_check(red: Target, blue: Target, n_vertices: usize, opts: &SearchOptions) -> Result<SearchResult> {
    let cap = opts.max_vertices.min(HARD_MAX_VERTICES);
    if n_vertices > cap {
        return Err(Error::input(format!("N = {n_vertices} exceeds the search cap {cap}")));
    }
    if n_vertices == 0 {
        return Err(Error::input("N must be at least 1"));
    }
    let start = Instant::now();
    let done = |verdict, witness, nodes| SearchResult {
        red,
        blue,
        n_vertices,
        verdict,
        witness,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    };
    if red.is_trivial() || blue.is_trivial() {
        return Ok(done(Verdict::Arrow, None, 0));
    }

    let edges: Vec<(usize, usize)> = crate::graph::pairs(n_vertices).collect();
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let exhausted = AtomicBool::new(false);
    let ctx = Ctx {
        red,
        blue,
        full: if n_vertices == 32 { u32::MAX } else { (1u32 << n_vertices) - 1 },
        edges: &edges,
        nodes: &nodes,
        budget: opts.budget.unwrap_or(u64::MAX),
        stop: &stop,
        exhausted: &exhausted,
    };
    let tasks = if n_vertices >= 2 {
        prefixes(n_vertices, red == blue, opts.symmetry_breaking)
    } else {
        vec![Vec::new()]
    };

    let found = if opts.deterministic {
        tasks.iter().find_map(|p| ctx.run_task(p))
    } else {
        let search = || {
            tasks.par_iter().find_map_any(|p| {
                let w = ctx.run_task(p);
                if w.is_some() {
                    stop.store(true, Ordering::Relaxed);
                }
                w
            })
        };
        match opts.threads.or_else(threads_from_env) {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::input(format!("thread pool: {e}")))?
                .install(search),
            None => search(),
        }
    };

    let total = nodes.load(Ordering::Relaxed);
    match found {
        Some(st) => {
            let coloring = ColoredCompleteGraph::from_fn(n_vertices, |u, v| {
                if st.red[u] >> v & 1 == 1 {
                    Color::Red
                } else {
                    Color::Blue
                }
            });
            if red.found_in(coloring.view(Color::Red))? || blue.found_in(coloring.view(Color::Blue))? {
                return Err(Error::logic(
                    "search witness contains a target",
                    &crate::extract::Trace::default(),
                ));
            }
            Ok(done(Verdict::Witness, Some(coloring), total))
        }
        None if exhausted.load(Ordering::Relaxed) => Ok(done(Verdict::Inconclusive, None, total)),
        None => Ok(done(Verdict::Arrow, None, total)),
    }
}
