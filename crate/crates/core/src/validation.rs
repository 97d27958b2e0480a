use std::fmt;

/// The rule a tableau or GT pattern breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// The inner or outer shape is not a partition, or inner exceeds outer.
    Shape,
    /// A tableau entry is zero; labels start at 1.
    NonPositiveEntry,
    RowNotWeaklyIncreasing,
    ColumnNotStrictlyIncreasing,
    /// A GT row has the wrong number of entries for its kind.
    RowLength,
    NegativeEntry,
    RowNotWeaklyDecreasing,
    /// `upper[j] >= lower[j] >= upper[j + 1]` fails.
    Interlacing,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::Shape => "shape is not a valid (skew) Young diagram",
            Rule::NonPositiveEntry => "entries must be positive labels",
            Rule::RowNotWeaklyIncreasing => "row not weakly increasing",
            Rule::ColumnNotStrictlyIncreasing => "column not strictly increasing",
            Rule::RowLength => "row has the wrong length",
            Rule::NegativeEntry => "entries must be nonnegative",
            Rule::RowNotWeaklyDecreasing => "row not weakly decreasing",
            Rule::Interlacing => "consecutive rows do not interlace",
        }
    }
}

/// A rule violation at a 1-based (row, column) position. Rows count from the
/// bottom of a tableau and from the apex of a GT pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at row {}, column {}", self.rule.describe(), self.row, self.col)
    }
}

/// Outcome of validating a tableau or GT pattern. Holds the first failing
/// position for each violated rule.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    /// Records a violation unless one for the same rule is already present.
    pub(crate) fn record(&mut self, rule: Rule, row: usize, col: usize) {
        if !self.has(rule) {
            self.violations.push(Violation { rule, row, col });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
