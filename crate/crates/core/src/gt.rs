//! Gelfand-Tsetlin patterns.
//!
//! Rows are stored apex first: row `i` (1-based) of a triangular pattern has
//! `i` entries, and all rows of a parallelogram pattern share one length.
//! Renderers flip the order for display.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::validation::{Rule, ValidationReport};

/// Exact scalar stored in a GT pattern.
pub trait Entry:
    Clone + Ord + fmt::Debug + fmt::Display + Zero + Add<Output = Self> + Sub<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

impl Entry for i64 {
    fn from_int(n: i64) -> Self {
        n
    }
}

impl Entry for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GtShape {
    Triangular,
    Parallelogram,
}

impl GtShape {
    pub fn name(self) -> &'static str {
        match self {
            GtShape::Triangular => "triangular",
            GtShape::Parallelogram => "parallelogram",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtPattern<E = i64> {
    shape: GtShape,
    rows: Vec<Vec<E>>,
}

/// Integer GT pattern.
pub type IntPattern = GtPattern<i64>;
/// GT pattern with exact rational entries.
pub type RationalPattern = GtPattern<BigRational>;

/// Row-sum differences of a GT pattern, with an all-zero row 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtWeight<E = i64>(pub Vec<E>);

impl<E> GtWeight<E> {
    pub fn values(&self) -> &[E] {
        &self.0
    }
}

impl<E: Entry> GtPattern<E> {
    /// Builds a pattern without validating it; see [`GtPattern::validate`].
    pub fn new(shape: GtShape, rows: Vec<Vec<E>>) -> Self {
        Self { shape, rows }
    }

    pub fn triangular(rows: Vec<Vec<E>>) -> Self {
        Self::new(GtShape::Triangular, rows)
    }

    pub fn parallelogram(rows: Vec<Vec<E>>) -> Self {
        Self::new(GtShape::Parallelogram, rows)
    }

    pub fn shape(&self) -> GtShape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn top_row(&self) -> Option<&[E]> {
        self.rows.last().map(Vec::as_slice)
    }

    pub fn map<F: Entry>(&self, f: impl Fn(&E) -> F) -> GtPattern<F> {
        GtPattern {
            shape: self.shape,
            rows: self.rows.iter().map(|row| row.iter().map(&f).collect()).collect(),
        }
    }

    /// Checks row lengths, nonnegativity, weakly decreasing rows and
    /// interlacing `upper[j] >= lower[j] >= upper[j + 1]` of consecutive rows.
    /// Positions are 1-based with row 1 at the apex.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let width = self.rows.first().map_or(0, Vec::len);
        for (i, row) in self.rows.iter().enumerate() {
            let expected = match self.shape {
                GtShape::Triangular => i + 1,
                GtShape::Parallelogram => width,
            };
            if row.len() != expected {
                report.record(Rule::RowLength, i + 1, row.len().min(expected) + 1);
            }
            for (j, e) in row.iter().enumerate() {
                if *e < E::zero() {
                    report.record(Rule::NegativeEntry, i + 1, j + 1);
                }
            }
            for j in 1..row.len() {
                if row[j - 1] < row[j] {
                    report.record(Rule::RowNotWeaklyDecreasing, i + 1, j + 1);
                }
            }
        }
        for (i, pair) in self.rows.windows(2).enumerate() {
            let (lower, upper) = (&pair[0], &pair[1]);
            for (j, e) in lower.iter().enumerate() {
                let above_left = upper.get(j).is_some_and(|u| u < e);
                let above_right = upper.get(j + 1).is_some_and(|u| u > e);
                if above_left || above_right {
                    report.record(Rule::Interlacing, i + 1, j + 1);
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidPattern(report))
        }
    }

    fn ensure_shape(&self, shape: GtShape, op: &str) -> Result<()> {
        if self.shape == shape {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{op} requires a {} pattern",
                shape.name()
            )))
        }
    }

    pub fn row_sums(&self) -> Vec<E> {
        self.rows
            .iter()
            .map(|row| row.iter().cloned().fold(E::zero(), |a, b| a + b))
            .collect()
    }

    /// Differences of consecutive row sums, starting from an all-zero row 0.
    pub fn weight(&self) -> GtWeight<E> {
        let sums = self.row_sums();
        let mut prev = E::zero();
        GtWeight(
            sums.into_iter()
                .map(|s| {
                    let w = s.clone() - prev.clone();
                    prev = s;
                    w
                })
                .collect(),
        )
    }

    /// Pads (or truncates) every row of a triangular pattern to `width`
    /// entries, turning inner eigensteps into outer ones. Truncation may only
    /// drop zeros.
    pub fn to_parallelogram(&self, width: usize) -> Result<GtPattern<E>> {
        self.ensure_shape(GtShape::Triangular, "triangular_to_parallelogram")?;
        resize_rows(&self.rows, |_| width).map(|rows| GtPattern::parallelogram(rows))
    }

    /// Resizes row `i` of a parallelogram pattern to `i` entries. Entries
    /// dropped from a row must be zero.
    pub fn to_triangular(&self) -> Result<GtPattern<E>> {
        self.ensure_shape(GtShape::Parallelogram, "parallelogram_to_triangular")?;
        resize_rows(&self.rows, |i| i + 1).map(|rows| GtPattern::triangular(rows))
    }

    /// Adds a row on top repeating the current top row, plus a trailing zero
    /// for triangular patterns. This mirrors appending a zero vector to a frame.
    pub fn zero_pad_top(&self) -> GtPattern<E> {
        let mut rows = self.rows.clone();
        let mut top = rows.last().cloned().unwrap_or_default();
        if self.shape == GtShape::Triangular {
            top.push(E::zero());
        }
        rows.push(top);
        GtPattern::new(self.shape, rows)
    }

    /// Removes top rows that only repeat the row below (undoing
    /// [`GtPattern::zero_pad_top`]).
    pub fn canonical(&self) -> GtPattern<E> {
        let mut rows = self.rows.clone();
        while rows.len() >= 2 {
            let top = &rows[rows.len() - 1];
            let below = &rows[rows.len() - 2];
            let padded = match self.shape {
                GtShape::Triangular => {
                    top.len() == below.len() + 1
                        && top[..below.len()] == below[..]
                        && top[below.len()].is_zero()
                }
                GtShape::Parallelogram => top == below,
            };
            if !padded {
                break;
            }
            rows.pop();
        }
        GtPattern::new(self.shape, rows)
    }

    /// Equality up to zero padding of the top row.
    pub fn equivalent(&self, other: &GtPattern<E>) -> bool {
        self.shape == other.shape && self.canonical() == other.canonical()
    }

    /// The involution `N_{n,d}` between eigenstep patterns of an equal-norm
    /// tight frame and of its Naimark complement.
    ///
    /// The input must lie in `Λ_{n,d}`: triangular with `n` rows, top row
    /// `(n, .., n, 0, .., 0)` with `d` copies of `n`, and weight `(d, .., d)`.
    /// Output row `i` (1-based) has entries
    ///
    /// * `λ_{n-i, d+j-i}` for `j <= i <= d+j-1` and `j <= n-d`,
    /// * `n` for `i > d+j-1` and `j <= n-d`,
    /// * `0` for `j > n-d`.
    pub fn naimark_map(&self, n: usize, d: usize) -> Result<GtPattern<E>> {
        self.ensure_in_lambda(n, d)?;
        let big = E::from_int(n as i64);
        let rows = (1..=n)
            .map(|i| {
                (1..=i)
                    .map(|j| {
                        if j > n - d {
                            E::zero()
                        } else if i > d + j - 1 {
                            big.clone()
                        } else {
                            self.rows[n - i - 1][d + j - i - 1].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(GtPattern::triangular(rows))
    }

    /// Checks membership in `Λ_{n,d}`.
    pub fn ensure_in_lambda(&self, n: usize, d: usize) -> Result<()> {
        self.ensure_shape(GtShape::Triangular, "naimark_map")?;
        if d == 0 || d >= n {
            return Err(Error::Precondition(format!(
                "Naimark map needs 0 < d < n, got d = {d}, n = {n}"
            )));
        }
        if self.rows.len() != n {
            return Err(Error::Precondition(format!(
                "Naimark map needs {n} rows, got {}",
                self.rows.len()
            )));
        }
        self.ensure_valid()?;
        let big = E::from_int(n as i64);
        let top_ok = self.rows[n - 1]
            .iter()
            .enumerate()
            .all(|(j, e)| if j < d { *e == big } else { e.is_zero() });
        if !top_ok {
            return Err(Error::Precondition(format!(
                "top row must be {d} copies of {n} followed by zeros"
            )));
        }
        let dd = E::from_int(d as i64);
        if self.weight().0.iter().any(|w| *w != dd) {
            return Err(Error::Precondition(format!("weight must be constant {d}")));
        }
        Ok(())
    }

    /// The involution `Ñ`: entry `(i, j)` becomes `B - λ_{i, i+1-j}` where
    /// `B` is the largest top-row entry. Needs a valid triangular pattern whose
    /// top row ends in 0 and starts with a positive entry.
    pub fn generalized_complement(&self) -> Result<GtPattern<E>> {
        self.ensure_shape(GtShape::Triangular, "generalized complement")?;
        self.ensure_valid()?;
        let top = self
            .top_row()
            .ok_or_else(|| Error::Precondition("generalized complement of an empty pattern".into()))?;
        let bound = top[0].clone();
        if !top[top.len() - 1].is_zero() {
            return Err(Error::Precondition(format!(
                "top row must end in 0, got {}",
                top[top.len() - 1]
            )));
        }
        if bound.is_zero() {
            return Err(Error::Precondition("largest top-row entry must be positive".into()));
        }
        Ok(self.reflect(&bound))
    }

    /// Entry `(i, j)` becomes `bound - λ_{i, i+1-j}`, with no domain checks.
    pub(crate) fn reflect(&self, bound: &E) -> GtPattern<E> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().rev().map(|e| bound.clone() - e.clone()).collect())
            .collect();
        GtPattern::new(self.shape, rows)
    }
}

impl RationalPattern {
    /// Converts to an integer pattern, failing on the first non-integer entry.
    pub fn to_integer(&self) -> Result<IntPattern> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, e) in row.iter().enumerate() {
                let value = if e.is_integer() {
                    i64::try_from(e.to_integer()).ok()
                } else {
                    None
                };
                match value {
                    Some(v) => out.push(v),
                    None => {
                        return Err(Error::NonInteger {
                            row: i + 1,
                            col: j + 1,
                            value: e.to_string(),
                        })
                    }
                }
            }
            rows.push(out);
        }
        Ok(GtPattern::new(self.shape, rows))
    }
}

impl IntPattern {
    pub fn to_rational(&self) -> RationalPattern {
        self.map(|&e| BigRational::from_integer(BigInt::from(e)))
    }
}

fn resize_rows<E: Entry>(rows: &[Vec<E>], len_of: impl Fn(usize) -> usize) -> Result<Vec<Vec<E>>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let len = len_of(i);
            if let Some(j) = row.iter().skip(len).position(|e| !e.is_zero()) {
                return Err(Error::Precondition(format!(
                    "row {} has nonzero entry {} at column {} beyond width {len}",
                    i + 1,
                    row[len + j],
                    len + j + 1
                )));
            }
            let mut out: Vec<E> = row.iter().take(len).cloned().collect();
            out.resize(len, E::zero());
            Ok(out)
        })
        .collect()
}

/// Builds a rational from `p / q`; `q` must be nonzero.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
