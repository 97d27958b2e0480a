//! Cyclic Jacobi eigensolver for real symmetric matrices.

use crate::error::{Error, Result};
use crate::spectral::matrix::SquareMatrix;
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions {
    /// Convergence and symmetry tolerance, relative to `max(1, ‖M‖_F)`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL, max_sweeps: 100 }
    }
}

impl JacobiOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}

/// Eigenvalues in descending order with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Descending eigenvalues of a symmetric matrix. Values in `[-tol, 0)` are
/// reported as 0.
pub fn symmetric_spectrum(m: &SquareMatrix, tol: f64) -> Result<Vec<f64>> {
    Ok(jacobi(m, JacobiOptions::with_tol(tol), false)?.values)
}

pub fn symmetric_eigen(m: &SquareMatrix, opts: JacobiOptions) -> Result<Eigen> {
    jacobi(m, opts, true)
}

fn off_diagonal_mass(a: &SquareMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

fn jacobi(m: &SquareMatrix, opts: JacobiOptions, want_vectors: bool) -> Result<Eigen> {
    let n = m.dim();
    let scale = m.frobenius_norm().max(1.0);
    let threshold = opts.tol * scale;

    let mut a = m.clone();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (a[(i, j)] - a[(j, i)]).abs();
            if gap > threshold {
                return Err(Error::NotSymmetric { row: i + 1, col: j + 1, gap });
            }
            let mean = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = mean;
            a[(j, i)] = mean;
        }
    }
    let mut v = want_vectors.then(|| SquareMatrix::identity(n));

    // Once below the threshold, one more sweep: convergence is quadratic, so
    // the reported values end up far more accurate than `tol`.
    let mut polished = false;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(&a);
        if off <= threshold {
            if polished || off == 0.0 {
                break;
            }
            polished = true;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].total_cmp(&a[(x, x)]));
    let clamp = opts.tol * scale;
    let values = order
        .iter()
        .map(|&k| {
            let x = a[(k, k)];
            if (-clamp..0.0).contains(&x) {
                0.0
            } else {
                x
            }
        })
        .collect();
    let vectors = match v {
        Some(v) => order.iter().map(|&k| (0..n).map(|i| v[(i, k)]).collect()).collect(),
        None => Vec::new(),
    };
    Ok(Eigen { values, vectors })
}

/// Applies the rotation in the `(p, q)` plane that zeroes `a[p][q]`.
fn rotate(a: &mut SquareMatrix, v: Option<&mut SquareMatrix>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.dim();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    if let Some(v) = v {
        for k in 0..n {
            let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
            v[(k, p)] = c * vkp - s * vkq;
            v[(k, q)] = s * vkp + c * vkq;
        }
    }
}
