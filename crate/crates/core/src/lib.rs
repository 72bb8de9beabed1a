//! Mining, certification and cataloguing of tight three-party two-outcome
//! full-correlation Bell inequalities whose critical visibility for the
//! noisy GHZ state falls below one half.
//!
//! The two-step search mirrors the method the bundled catalog was produced
//! with: a simplex-downhill pass over equatorial measurement angles
//! minimizes the classical-per-quantum ratio of an angle-seeded coefficient
//! tensor, then a linear program snaps the seeded direction to a facet of
//! the local correlation polytope, which is integerized and re-certified
//! with exact arithmetic (exact local bound, full-rank saturation, see-saw
//! quantum value).
//!
//! Entry points:
//! - [`catalog`] — the bundled inequalities and their certification,
//! - [`search`] — the end-to-end mining pipeline,
//! - [`facet`] — LP facet snapping with exact verification,
//! - [`quantum`] — GHZ correlation points and see-saw bounds,
//! - [`equiv`] — canonical forms under relabeling equivalence.

pub mod catalog;
mod catalog_data;
pub mod equiv;
pub mod error;
pub mod facet;
mod jacobi;
pub mod lp;
pub mod miner;
pub mod polytope;
pub mod quantum;
pub mod record;
pub mod scenario;
pub mod search;
pub mod tensor;

pub use error::{Error, Result};
pub use scenario::Scenario;
pub use tensor::{AngleProfile, BellTensor, CorrelationPoint, RealTensor};
