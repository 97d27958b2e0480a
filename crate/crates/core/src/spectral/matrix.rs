use std::fmt;

use crate::error::{Error, Result};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Self { n, data: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[f64]>::to_vec).collect()
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl std::ops::Sub for &SquareMatrix {
    type Output = SquareMatrix;

    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SquareMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Add for &SquareMatrix {
    type Output = SquareMatrix;

    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        SquareMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A `d x n` synthesis matrix whose columns are the frame vectors.
///
/// Parsed matrices have `d, n >= 1`; a Naimark complement may have zero rows.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameMatrix {
    d: usize,
    n: usize,
    data: Vec<f64>,
}

impl FrameMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let data = rows.concat();
        if let Some(k) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidMatrix(format!(
                "entry at row {}, column {} is not finite",
                k / n + 1,
                k % n + 1
            )));
        }
        Ok(Self { d, n, data })
    }

    /// An `0 x n` matrix: `n` zero vectors in a zero-dimensional space.
    pub fn empty(n: usize) -> Self {
        Self { d: 0, n, data: Vec::new() }
    }

    pub(crate) fn from_raw(d: usize, n: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), d * n);
        Self { d, n, data }
    }

    /// Ambient dimension `d` (number of rows).
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Number of frame vectors `n` (number of columns).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.d == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.d).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.d).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn norm_squares(&self) -> Vec<f64> {
        (0..self.n)
            .map(|j| (0..self.d).map(|i| self.get(i, j).powi(2)).sum())
            .collect()
    }

    fn inner(&self, a: usize, b: usize) -> f64 {
        (0..self.d).map(|i| self.get(i, a) * self.get(i, b)).sum()
    }

    /// Gram matrix of the first `k` vectors, `Φ_k* Φ_k` (`k x k`).
    pub fn gram_prefix(&self, k: usize) -> SquareMatrix {
        let mut g = SquareMatrix::zeros(k);
        for a in 0..k {
            for b in a..k {
                let v = self.inner(a, b);
                g[(a, b)] = v;
                g[(b, a)] = v;
            }
        }
        g
    }

    pub fn gram(&self) -> SquareMatrix {
        self.gram_prefix(self.n)
    }

    /// Partial frame operator `Φ_k Φ_k*` of the first `k` vectors (`d x d`).
    pub fn frame_operator_prefix(&self, k: usize) -> SquareMatrix {
        let mut s = SquareMatrix::zeros(self.d);
        for a in 0..self.d {
            for b in a..self.d {
                let v: f64 = (0..k).map(|j| self.get(a, j) * self.get(b, j)).sum();
                s[(a, b)] = v;
                s[(b, a)] = v;
            }
        }
        s
    }

    pub fn frame_operator(&self) -> SquareMatrix {
        self.frame_operator_prefix(self.n)
    }
}

impl fmt::Display for FrameMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}
