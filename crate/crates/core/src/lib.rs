//! Frames with rational eigensteps, Gelfand-Tsetlin patterns and
//! semistandard Young tableaux.
//!
//! * [`tableau`] and [`enumerate`]: straight and skew SSYT, their weights,
//!   the boxcomp and gamma complements, and enumeration by shape and weight.
//! * [`gt`]: triangular and parallelogram GT patterns, the Naimark map
//!   `N_{n,d}` and the generalized complement `Ñ`.
//! * [`bridge`]: the bijection between integer GT patterns and tableaux.
//! * [`spectral`]: eigensteps of frame matrices, clearing constants and
//!   Naimark complements of frames.
//! * [`io`]: JSON and CSV interchange formats.

pub mod bridge;
pub mod enumerate;
pub mod error;
pub mod gt;
pub mod io;
pub mod partition;
pub mod spectral;
pub mod tableau;
pub mod validation;

pub use bridge::{gt_to_skew, gt_to_ssyt, skew_to_gt, ssyt_to_gt, verify_boxcomp_diagram, verify_naimark_diagram};
pub use enumerate::{count_tableaux, enumerate_tableaux, TableauStream};
pub use error::{Error, Result};
pub use gt::{Entry, GtPattern, GtShape, GtWeight, IntPattern, RationalPattern};
pub use partition::Partition;
pub use spectral::{
    clear, frame_report, inner_eigensteps, naimark_frame, outer_eigensteps, symmetric_spectrum,
    Clearing, EigenstepForm, EigenstepTable, FrameMatrix, FrameReport, NaimarkMode,
};
pub use tableau::{Label, Tableau, WeightVector};
pub use validation::{Rule, ValidationReport, Violation};

/// Default numeric tolerance for the spectral layer.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default largest denominator accepted when clearing eigensteps.
pub const DEFAULT_MAX_DEN: u64 = 10_000;
