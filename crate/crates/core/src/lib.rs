//! Ramsey theory of fans `F_n`: extremal lower-bound colorings, matching-based
//! fan and clique detectors with certificates, Hall and Tutte–Berge defect
//! witnesses, and extractors that turn any large enough 2-edge-coloring into a
//! checkable monochromatic fan or clique.

pub mod construct;
pub mod detect;
pub mod error;
pub mod extract;
pub mod graph;
pub mod harness;
pub mod matching;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{Color, ColoredCompleteGraph, SimpleGraph, Vertex, VertexSet};
