//! Certificate-producing versions of the existence arguments behind the fan
//! Ramsey upper bound.
//!
//! Every existential step is computed, and every branch that the argument
//! dismisses by contradiction ("assume there is no monochromatic `K_m`") is
//! turned into an exit that returns the object found. Inequalities the argument
//! derives are checked at runtime; a failure is reported as [`Error::Logic`]
//! together with the trace, never as an input error.

mod corollary;
mod lemma2;
mod lemma3;
mod trace;
mod upper;

pub use corollary::extract_corollary1;
pub use lemma2::{extract_lemma2, extract_lemma2_with, lemma2_threshold, Lemma2Options};
pub use lemma3::{extract_lemma3, Lemma3Outcome, Side};
pub use trace::{Trace, TraceStep};
pub use upper::{extract_theorem1_upper, theorem1_threshold};

use crate::detect::{check_certificate, Certificate, CertificateFailure, CliqueCertificate, FanCertificate, Host};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredCompleteGraph};

/// A monochromatic fan or clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoCertificate {
    Fan(FanCertificate),
    Clique(CliqueCertificate),
}

impl MonoCertificate {
    pub fn color(&self) -> Option<Color> {
        match self {
            MonoCertificate::Fan(f) => f.color,
            MonoCertificate::Clique(k) => k.color,
        }
    }

    pub fn to_certificate(&self) -> Certificate {
        match self {
            MonoCertificate::Fan(f) => Certificate::Fan(f.clone()),
            MonoCertificate::Clique(k) => Certificate::Clique(k.clone()),
        }
    }

    pub fn as_fan(&self) -> Option<&FanCertificate> {
        match self {
            MonoCertificate::Fan(f) => Some(f),
            MonoCertificate::Clique(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtractionOutcome {
    pub result: MonoCertificate,
    pub trace: Trace,
}

impl ExtractionOutcome {
    /// Independent re-check of the certificate against the input coloring.
    pub fn verify(&self, c: &ColoredCompleteGraph) -> Result<(), CertificateFailure> {
        check_certificate(&self.result.to_certificate(), Host::Coloring(c))
    }
}

/// Logic error unless `cond` holds.
pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String, trace: &Trace) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::logic(what(), trace))
    }
}

/// Final soundness gate: the certificate must check and have the promised size.
pub(crate) fn sealed(
    c: &ColoredCompleteGraph,
    result: MonoCertificate,
    size: usize,
    trace: Trace,
) -> Result<ExtractionOutcome> {
    let out = ExtractionOutcome { result, trace };
    if let Err(e) = out.verify(c) {
        return Err(Error::logic(format!("produced certificate fails check: {e}"), &out.trace));
    }
    let actual = match &out.result {
        MonoCertificate::Fan(f) => f.blades.len(),
        MonoCertificate::Clique(k) => k.members.len(),
    };
    ensure(
        actual == size,
        || format!("certificate has size {actual}, expected {size}"),
        &out.trace,
    )?;
    Ok(out)
}
