use crate::error::{Error, Result};
use crate::spectral::jacobi::{symmetric_eigen, symmetric_spectrum, JacobiOptions};
use crate::spectral::matrix::{FrameMatrix, SquareMatrix};

/// Frame bounds and related properties of a synthesis matrix.
///
/// The bounds describe `Φ` as a frame for its span: `lower` is the smallest
/// nonzero eigenvalue of `ΦΦ*`, `upper` the largest. Both are `None` for the
/// zero matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameReport {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub rank: usize,
    pub tight: bool,
    pub equal_norm: bool,
    pub norm_squares: Vec<f64>,
    /// Eigenvalues of the frame operator, descending.
    pub spectrum: Vec<f64>,
}

pub fn frame_report(frame: &FrameMatrix, tol: f64) -> Result<FrameReport> {
    let spectrum = symmetric_spectrum(&frame.frame_operator(), tol)?;
    let norm_squares = frame.norm_squares();
    let largest_norm = norm_squares.iter().copied().fold(0.0, f64::max);
    let smallest_norm = norm_squares.iter().copied().fold(f64::INFINITY, f64::min);
    let equal_norm = largest_norm - smallest_norm <= tol * largest_norm.max(1.0);

    let top = spectrum.first().copied().unwrap_or(0.0);
    let nonzero: Vec<f64> = spectrum.iter().copied().filter(|&x| x > tol * top.max(1.0)).collect();
    let (lower, upper) = match (nonzero.last(), nonzero.first()) {
        (Some(&a), Some(&b)) => (Some(a), Some(b)),
        _ => (None, None),
    };
    let tight = matches!((lower, upper), (Some(a), Some(b)) if b - a <= tol * b);
    Ok(FrameReport {
        lower,
        upper,
        rank: nonzero.len(),
        tight,
        equal_norm,
        norm_squares,
        spectrum,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaimarkMode {
    /// `Φ*Φ + Ψ*Ψ = A·I` for a tight frame with bound `A`.
    Tight,
    /// `Φ*Φ + Ψ*Ψ = B·I` with `B` the largest eigenvalue of `ΦΦ*`.
    Generalized,
}

/// A Naimark complement `Ψ` of `Φ`: a factorization `Ψ*Ψ = c·I - Φ*Φ`
/// with `c = A` (tight) or `c = B` (generalized).
///
/// `Ψ` has one row per eigenvalue of `c·I - Φ*Φ` above `tol · c`, so it may
/// have no rows at all. Only its Gram matrix is determined; the basis is
/// whatever the eigensolver returns.
pub fn naimark_frame(frame: &FrameMatrix, mode: NaimarkMode, tol: f64) -> Result<FrameMatrix> {
    let report = frame_report(frame, tol)?;
    let bound = match mode {
        NaimarkMode::Tight => {
            if !report.tight {
                return Err(Error::NotTight {
                    lower: report.lower.unwrap_or(0.0),
                    upper: report.upper.unwrap_or(0.0),
                });
            }
            // Mean of the nonzero eigenvalues, i.e. trace / rank.
            report.spectrum.iter().take(report.rank).sum::<f64>() / report.rank as f64
        }
        NaimarkMode::Generalized => match report.upper {
            Some(b) if b > 0.0 => b,
            _ => {
                return Err(Error::Precondition(
                    "generalized complement needs a nonzero frame".into(),
                ))
            }
        },
    };

    let n = frame.len();
    let residual = &scaled_identity(n, bound) - &frame.gram();
    let eig = symmetric_eigen(&residual, JacobiOptions::with_tol(tol * 1e-3))?;
    if let Some(&min) = eig.values.last() {
        if min < -tol * bound {
            return Err(Error::NotPositiveSemidefinite(min));
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&k| eig.values[k] > tol * bound).collect();
    let mut data = Vec::with_capacity(kept.len() * n);
    for &k in &kept {
        let root = eig.values[k].sqrt();
        data.extend(eig.vectors[k].iter().map(|v| root * v));
    }
    Ok(FrameMatrix::from_raw(kept.len(), n, data))
}

fn scaled_identity(n: usize, c: f64) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(n);
    for i in 0..n {
        m[(i, i)] = c;
    }
    m
}
