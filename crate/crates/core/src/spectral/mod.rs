//! Numerical frame layer: Gram and frame operators, eigensteps, clearing
//! constants and Naimark complements. Real scalars only.

mod clear;
mod eigensteps;
mod frame;
mod jacobi;
mod matrix;

pub use clear::{best_approximation, clear, simplest_rational_within, Clearing};
pub use eigensteps::{inner_eigensteps, outer_eigensteps, EigenstepForm, EigenstepTable};
pub use frame::{frame_report, naimark_frame, FrameReport, NaimarkMode};
pub use jacobi::{symmetric_eigen, symmetric_spectrum, Eigen, JacobiOptions};
pub use matrix::{FrameMatrix, SquareMatrix};
