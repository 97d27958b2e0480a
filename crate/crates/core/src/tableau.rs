//! Straight and skew semistandard Young tableaux in French notation.
//!
//! Rows are stored bottom to top, so `rows[0]` is the longest row. Row `r`
//! of a skew tableau holds the entries of columns `inner[r] + 1 ..= outer[r]`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::validation::{Rule, ValidationReport};

/// Tableau entries are 1-based labels drawn from `[n] = {1, ..., n}`.
pub type Label = u32;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    inner: Partition,
    rows: Vec<Vec<Label>>,
}

/// Label multiplicities: `counts[i]` is the number of cells holding `i + 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    pub fn new(counts: Vec<usize>) -> Self {
        Self(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Index<usize> for WeightVector {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl From<Vec<usize>> for WeightVector {
    fn from(counts: Vec<usize>) -> Self {
        Self(counts)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Tableau {
    /// Builds a tableau without checking semistandardness; see [`Tableau::validate`].
    ///
    /// Rows missing from `rows` but covered by `inner` are treated as empty,
    /// and trailing rows with no cells and no inner part are dropped.
    pub fn new(inner: Partition, mut rows: Vec<Vec<Label>>) -> Self {
        if rows.len() < inner.len() {
            rows.resize(inner.len(), Vec::new());
        }
        while rows.len() > inner.len() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Self { inner, rows }
    }

    pub fn straight(rows: Vec<Vec<Label>>) -> Self {
        Self::new(Partition::empty(), rows)
    }

    pub fn skew(inner: Partition, rows: Vec<Vec<Label>>) -> Self {
        Self::new(inner, rows)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a straight tableau from its columns, each listed bottom to top.
    /// Column lengths must be weakly decreasing.
    pub fn from_columns(columns: &[Vec<Label>]) -> Self {
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| {
                columns
                    .iter()
                    .take_while(|col| col.len() > r)
                    .map(|col| col[r])
                    .collect()
            })
            .collect();
        Self::straight(rows)
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Outer row lengths `inner[r] + rows[r].len()`. Not necessarily a
    /// partition for an invalid tableau.
    pub fn outer_lengths(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| self.inner.get(r) + row.len())
            .collect()
    }

    pub fn outer(&self) -> Result<Partition> {
        Partition::new(self.outer_lengths())
    }

    /// The shape of a straight tableau, or the outer shape of a skew one.
    pub fn shape(&self) -> Result<Partition> {
        self.outer()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cell_count() == 0
    }

    pub fn max_entry(&self) -> Label {
        self.entries().max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = Label> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Entry at 0-based `row` and absolute 0-based `col`, if that cell is in
    /// the (skew) shape.
    pub fn get(&self, row: usize, col: usize) -> Option<Label> {
        let start = self.inner.get(row);
        let row_entries = self.rows.get(row)?;
        col.checked_sub(start)
            .and_then(|k| row_entries.get(k))
            .copied()
    }

    /// Columns of a straight tableau, left to right, each bottom to top.
    pub fn columns(&self) -> Vec<Vec<Label>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect()
    }

    /// Checks the shape, positivity, row and column rules, reporting the
    /// first failing cell for each rule.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let outer = self.outer_lengths();

        for r in 1..outer.len() {
            if outer[r] > outer[r - 1] {
                report.record(Rule::Shape, r + 1, outer[r]);
            }
        }

        for (r, row) in self.rows.iter().enumerate() {
            let start = self.inner.get(r);
            for (k, &e) in row.iter().enumerate() {
                if e == 0 {
                    report.record(Rule::NonPositiveEntry, r + 1, start + k + 1);
                }
            }
            for k in 1..row.len() {
                if row[k] < row[k - 1] {
                    report.record(Rule::RowNotWeaklyIncreasing, r + 1, start + k + 1);
                }
            }
            if r > 0 {
                for (k, &e) in row.iter().enumerate() {
                    let col = start + k;
                    if let Some(below) = self.get(r - 1, col) {
                        if e <= below {
                            report.record(Rule::ColumnNotStrictlyIncreasing, r + 1, col + 1);
                        }
                    }
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
            Err(Error::InvalidTableau(report))
        }
    }

    fn ensure_straight(&self, op: &str) -> Result<()> {
        if self.is_straight() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{op} requires a straight-shape tableau")))
        }
    }

    /// Label multiplicities. The vector has length `n` when given (which must
    /// be at least the largest entry), otherwise the largest entry.
    pub fn weight(&self, n: Option<usize>) -> Result<WeightVector> {
        self.ensure_valid()?;
        let max = self.max_entry() as usize;
        let len = match n {
            Some(n) if n < max => {
                return Err(Error::Precondition(format!(
                    "label bound {n} is smaller than the largest entry {max}"
                )))
            }
            Some(n) => n,
            None => max,
        };
        let mut counts = vec![0; len];
        for e in self.entries() {
            counts[e as usize - 1] += 1;
        }
        Ok(WeightVector(counts))
    }

    /// Columnwise complement: column `j` of the result is `[n]` minus column
    /// `c + 1 - j` of `self`. The column bound `c` defaults to the number of
    /// columns; columns past the end of `self` count as empty.
    pub fn boxcomp(&self, n: usize, c: Option<usize>) -> Result<Tableau> {
        self.ensure_straight("boxcomp")?;
        self.ensure_valid()?;
        let max = self.max_entry() as usize;
        if max > n {
            return Err(Error::Precondition(format!(
                "entry {max} exceeds the label bound {n}"
            )));
        }
        let columns = self.columns();
        let c = c.unwrap_or(columns.len());
        if c < columns.len() {
            return Err(Error::Precondition(format!(
                "column bound {c} is smaller than the {} columns of the tableau",
                columns.len()
            )));
        }
        let complemented: Vec<Vec<Label>> = (0..c)
            .map(|j| {
                let source = columns.get(c - 1 - j).map_or(&[][..], Vec::as_slice);
                complement_in(source, n)
            })
            .collect();
        Ok(Tableau::from_columns(&complemented))
    }

    /// Complement of a `d x n` rectangular tableau with every label used `d`
    /// times: relabel `j -> n + 1 - j`, then replace every column by its
    /// complement in `[n]`.
    pub fn gamma_complement(&self, n: usize, d: usize) -> Result<Tableau> {
        self.ensure_straight("gamma complement")?;
        self.ensure_valid()?;
        if d == 0 || d >= n {
            return Err(Error::Precondition(format!(
                "gamma complement needs 0 < d < n, got d = {d}, n = {n}"
            )));
        }
        if self.rows.len() != d || self.rows.iter().any(|row| row.len() != n) {
            return Err(Error::Precondition(format!(
                "gamma complement needs a {d} x {n} rectangle, got shape {}",
                Partition::from_sorted(self.outer_lengths())
            )));
        }
        let weight = self.weight(Some(n))?;
        if weight.counts().iter().any(|&w| w != d) {
            return Err(Error::Precondition(format!(
                "gamma complement needs constant weight {d}, got {weight}"
            )));
        }
        let label_bound = n as Label + 1;
        let columns: Vec<Vec<Label>> = self
            .columns()
            .iter()
            .map(|col| {
                let reflected: Vec<Label> = col.iter().map(|&j| label_bound - j).collect();
                complement_in(&reflected, n)
            })
            .collect();
        Ok(Tableau::from_columns(&columns))
    }

    /// Removes the cells holding 1 and lowers every other entry by one,
    /// giving a skew tableau of shape `outer / (w_1)`.
    pub fn strip_to_skew(&self) -> Result<Tableau> {
        self.ensure_straight("strip_to_skew")?;
        self.ensure_valid()?;
        let ones = self
            .rows
            .first()
            .map_or(0, |row| row.iter().take_while(|&&e| e == 1).count());
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let skip = if r == 0 { ones } else { 0 };
                row[skip..].iter().map(|&e| e - 1).collect()
            })
            .collect();
        Ok(Tableau::skew(Partition::from_sorted(vec![ones]), rows))
    }

    /// Inverse of [`Tableau::strip_to_skew`]: raises every entry by one and
    /// fills the single-row inner shape with 1's.
    pub fn skew_to_straight(&self) -> Result<Tableau> {
        self.ensure_valid()?;
        if self.inner.len() > 1 {
            return Err(Error::Precondition(format!(
                "inner shape {} has more than one row and cannot be filled with 1's",
                self.inner
            )));
        }
        let ones = self.inner.get(0);
        let mut rows: Vec<Vec<Label>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&e| e + 1).collect())
            .collect();
        if ones > 0 {
            let mut bottom = vec![1; ones];
            bottom.append(&mut rows[0]);
            rows[0] = bottom;
        }
        Ok(Tableau::straight(rows))
    }
}

/// `[n] \ column`, increasing.
fn complement_in(column: &[Label], n: usize) -> Vec<Label> {
    let present: BTreeSet<Label> = column.iter().copied().collect();
    (1..=n as Label).filter(|l| !present.contains(l)).collect()
}
