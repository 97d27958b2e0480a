use crate::error::Result;
use crate::spectral::jacobi::symmetric_spectrum;
use crate::spectral::matrix::FrameMatrix;

/// Inner eigensteps come from partial Gram matrices (row `i` has `i`
/// entries); outer eigensteps from partial frame operators (`d` entries).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenstepForm {
    Inner,
    Outer,
}

/// Spectra of the partial sequences `Φ_1, ..., Φ_n`, row `i` in descending
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenstepTable {
    form: EigenstepForm,
    rows: Vec<Vec<f64>>,
    tol: f64,
}

impl EigenstepTable {
    pub fn new(form: EigenstepForm, rows: Vec<Vec<f64>>, tol: f64) -> Self {
        Self { form, rows, tol }
    }

    pub fn form(&self) -> EigenstepForm {
        self.form
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Largest amount by which a row fails to be weakly decreasing.
    pub fn monotonicity_defect(&self) -> f64 {
        self.rows
            .iter()
            .flat_map(|row| row.windows(2).map(|w| w[1] - w[0]))
            .fold(0.0, f64::max)
    }

    /// Largest amount by which `upper[j] >= lower[j] >= upper[j + 1]` fails
    /// between consecutive rows.
    pub fn interlacing_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for pair in self.rows.windows(2) {
            let (lower, upper) = (&pair[0], &pair[1]);
            for (j, &x) in lower.iter().enumerate() {
                if let Some(&u) = upper.get(j) {
                    worst = worst.max(x - u);
                }
                if let Some(&u) = upper.get(j + 1) {
                    worst = worst.max(u - x);
                }
            }
        }
        worst
    }

    /// Largest `|row_i sum - (‖φ_1‖² + ... + ‖φ_i‖²)| / max(1, partial sum)`.
    pub fn trace_defect(&self, norm_squares: &[f64]) -> f64 {
        let mut partial = 0.0;
        let mut worst: f64 = 0.0;
        for (sum, w) in self.row_sums().iter().zip(norm_squares) {
            partial += w;
            worst = worst.max((sum - partial).abs() / partial.max(1.0));
        }
        worst
    }

    /// The table with entry `(i, j)` replaced by `bound - λ_{i, i+1-j}`: the
    /// eigensteps of a complement `Ψ` with `Φ*Φ + Ψ*Ψ = bound·I`.
    pub fn complement(&self, bound: f64) -> EigenstepTable {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().rev().map(|x| bound - x).collect())
            .collect();
        EigenstepTable::new(self.form, rows, self.tol)
    }

    /// Largest entrywise difference; infinite when the shapes differ.
    pub fn max_abs_diff(&self, other: &EigenstepTable) -> f64 {
        if self.rows.len() != other.rows.len()
            || self.rows.iter().zip(&other.rows).any(|(a, b)| a.len() != b.len())
        {
            return f64::INFINITY;
        }
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Converts between inner and outer form by padding or truncating each
    /// row to `width` entries.
    pub fn resized(&self, form: EigenstepForm, width: impl Fn(usize) -> usize) -> EigenstepTable {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r: Vec<f64> = row.iter().take(width(i)).copied().collect();
                r.resize(width(i), 0.0);
                r
            })
            .collect();
        EigenstepTable::new(form, rows, self.tol)
    }
}

/// Row `i` holds the spectrum of the Gram matrix of the first `i` vectors.
pub fn inner_eigensteps(frame: &FrameMatrix, tol: f64) -> Result<EigenstepTable> {
    let rows = (1..=frame.len())
        .map(|i| symmetric_spectrum(&frame.gram_prefix(i), tol))
        .collect::<Result<_>>()?;
    Ok(EigenstepTable::new(EigenstepForm::Inner, rows, tol))
}

/// Row `i` holds the spectrum of the frame operator of the first `i` vectors.
pub fn outer_eigensteps(frame: &FrameMatrix, tol: f64) -> Result<EigenstepTable> {
    let rows = (1..=frame.len())
        .map(|i| symmetric_spectrum(&frame.frame_operator_prefix(i), tol))
        .collect::<Result<_>>()?;
    Ok(EigenstepTable::new(EigenstepForm::Outer, rows, tol))
}
