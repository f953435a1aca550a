//! Seeded random-coloring campaigns over the extractors.
//!
//! Trial `i` of a campaign with seed `s` draws its coloring from ChaCha8 seeded
//! with `s` on stream `i`: one fair bit per pair in lexicographic order, set
//! bit meaning red. Trials are independent, so they run in parallel and the
//! report is identical for any thread count.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extract::{
    extract_corollary1, extract_lemma2, extract_theorem1_upper, lemma2_threshold, theorem1_threshold,
    ExtractionOutcome, Trace,
};
use crate::graph::{Color, ColoredCompleteGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CampaignMode {
    Corollary1,
    Lemma2,
    Theorem1,
}

impl FromStr for CampaignMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corollary1" => Ok(CampaignMode::Corollary1),
            "lemma2" => Ok(CampaignMode::Lemma2),
            "theorem1" => Ok(CampaignMode::Theorem1),
            _ => Err(Error::input(format!(
                "unknown campaign mode {s:?}, expected corollary1, lemma2 or theorem1"
            ))),
        }
    }
}

impl fmt::Display for CampaignMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CampaignMode::Corollary1 => "corollary1",
            CampaignMode::Lemma2 => "lemma2",
            CampaignMode::Theorem1 => "theorem1",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub mode: CampaignMode,
    pub n: usize,
    /// Clique size, lemma2 only.
    pub m: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    /// Overrides the mode's default coloring size.
    pub vertices: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct TrialFailure {
    pub trial: u64,
    pub message: String,
    pub trace: Trace,
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub mode: CampaignMode,
    pub n_vertices: usize,
    pub trials: u64,
    pub passed: u64,
    pub failures: Vec<TrialFailure>,
}

impl CampaignReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Default coloring size: the smallest size the extractor accepts, except
/// theorem1, which runs one above its threshold.
pub fn default_vertices(mode: CampaignMode, n: usize, m: Option<usize>) -> Result<usize> {
    match mode {
        CampaignMode::Corollary1 => Ok(6 * n),
        CampaignMode::Lemma2 => {
            let m = m.ok_or_else(|| Error::input("lemma2 campaigns need m"))?;
            if m == 0 {
                return Err(Error::input("m must be at least 1"));
            }
            Ok(lemma2_threshold(n, m))
        }
        CampaignMode::Theorem1 => Ok(theorem1_threshold(n) + 1),
    }
}

/// The coloring used by trial `trial`.
pub fn trial_coloring(seed: u64, trial: u64, n_vertices: usize) -> ColoredCompleteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    ColoredCompleteGraph::from_fn(n_vertices, |_, _| {
        if rng.gen::<bool>() {
            Color::Red
        } else {
            Color::Blue
        }
    })
}

fn run_trial(cfg: &CampaignConfig, c: &ColoredCompleteGraph) -> Result<ExtractionOutcome> {
    match cfg.mode {
        CampaignMode::Corollary1 => {
            let col = if c.degree(0, Color::Red) >= c.degree(0, Color::Blue) {
                Color::Red
            } else {
                Color::Blue
            };
            extract_corollary1(c, 0, col, cfg.n)
        }
        CampaignMode::Lemma2 => extract_lemma2(c, cfg.n, cfg.m.unwrap_or(0)),
        CampaignMode::Theorem1 => extract_theorem1_upper(c, cfg.n),
    }
}

pub fn random_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    if cfg.n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    let n_vertices = match cfg.vertices {
        Some(v) => v,
        None => default_vertices(cfg.mode, cfg.n, cfg.m)?,
    };
    let failures: Vec<TrialFailure> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|trial| {
            let c = trial_coloring(cfg.seed, trial, n_vertices);
            let fail = |message: String, trace: Trace| Some(TrialFailure { trial, message, trace });
            match run_trial(cfg, &c) {
                Ok(out) => match out.verify(&c) {
                    Ok(()) => None,
                    Err(e) => fail(format!("certificate rejected: {e}"), out.trace),
                },
                Err(Error::Logic { message, trace }) => fail(message, *trace),
                Err(e) => fail(e.to_string(), Trace::default()),
            }
        })
        .collect();
    Ok(CampaignReport {
        mode: cfg.mode,
        n_vertices,
        trials: cfg.trials,
        passed: cfg.trials - failures.len() as u64,
        failures,
    })
}
