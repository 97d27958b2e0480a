//! The bijection between integer GT patterns and semistandard tableaux, and
//! checks that the tableau complements match the pattern complements.

use crate::enumerate::{enumerate_tableaux, TableauStream};
use crate::error::{Error, Result};
use crate::gt::{GtShape, IntPattern};
use crate::partition::Partition;
use crate::tableau::{Label, Tableau, WeightVector};

fn ensure_shape(pattern: &IntPattern, shape: GtShape, op: &str) -> Result<()> {
    if pattern.shape() == shape {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{op} requires a {} pattern", shape.name())))
    }
}

/// Row `r` of `tableau_rows` gains `upper[r] - lower[r]` copies of `label`.
fn append_strip(tableau_rows: &mut Vec<Vec<Label>>, lower: &[i64], upper: &[i64], label: Label) {
    for (r, &u) in upper.iter().enumerate() {
        let l = lower.get(r).copied().unwrap_or(0);
        if u > l {
            if tableau_rows.len() <= r {
                tableau_rows.resize(r + 1, Vec::new());
            }
            tableau_rows[r].extend(std::iter::repeat_n(label, (u - l) as usize));
        }
    }
}

/// Builds the straight SSYT whose cells labelled `i` form the skew shape
/// `row_i / row_{i-1}` of a triangular pattern.
pub fn gt_to_ssyt(pattern: &IntPattern) -> Result<Tableau> {
    ensure_shape(pattern, GtShape::Triangular, "gt_to_ssyt")?;
    pattern.ensure_valid()?;
    let mut rows = Vec::new();
    let mut lower: &[i64] = &[];
    for (i, upper) in pattern.rows().iter().enumerate() {
        append_strip(&mut rows, lower, upper, i as Label + 1);
        lower = upper;
    }
    Ok(Tableau::straight(rows))
}

/// Row `i` of the result is the shape formed by the entries `<= i`, padded
/// to length `i`. `n` (the number of rows) defaults to the largest entry.
pub fn ssyt_to_gt(tableau: &Tableau, n: Option<usize>) -> Result<IntPattern> {
    if !tableau.is_straight() {
        return Err(Error::Precondition("ssyt_to_gt requires a straight-shape tableau".into()));
    }
    tableau.ensure_valid()?;
    let max = tableau.max_entry() as usize;
    let n = n.unwrap_or(max);
    if n < max {
        return Err(Error::Precondition(format!(
            "row count {n} is smaller than the largest entry {max}"
        )));
    }
    let rows = (1..=n)
        .map(|i| {
            (0..i)
                .map(|r| {
                    tableau.rows().get(r).map_or(0, |row| {
                        row.iter().take_while(|&&e| e as usize <= i).count() as i64
                    })
                })
                .collect()
        })
        .collect();
    Ok(IntPattern::triangular(rows))
}

/// Builds the skew SSYT of shape `top / bottom` for a parallelogram pattern,
/// filling `row_{i+1} / row_i` with `i`.
pub fn gt_to_skew(pattern: &IntPattern) -> Result<Tableau> {
    ensure_shape(pattern, GtShape::Parallelogram, "gt_to_skew")?;
    pattern.ensure_valid()?;
    let Some(bottom) = pattern.rows().first() else {
        return Ok(Tableau::empty());
    };
    let inner = Partition::new(bottom.iter().map(|&e| e as usize).collect())?;
    let mut rows = Vec::new();
    for (i, pair) in pattern.rows().windows(2).enumerate() {
        append_strip(&mut rows, &pair[0], &pair[1], i as Label + 1);
    }
    Ok(Tableau::skew(inner, rows))
}

/// Inverse of [`gt_to_skew`]: a parallelogram pattern with `rows` rows whose
/// bottom row is the inner shape. `width` defaults to the number of rows of
/// the outer shape.
pub fn skew_to_gt(tableau: &Tableau, rows: usize, width: Option<usize>) -> Result<IntPattern> {
    tableau.ensure_valid()?;
    if rows == 0 {
        return Err(Error::Precondition("a parallelogram pattern needs at least one row".into()));
    }
    let max = tableau.max_entry() as usize;
    if max > rows - 1 {
        return Err(Error::Precondition(format!(
            "label {max} needs at least {} pattern rows, got {rows}",
            max + 1
        )));
    }
    let outer_rows = tableau.outer_lengths().len();
    let width = width.unwrap_or(outer_rows);
    if width < outer_rows {
        return Err(Error::Precondition(format!(
            "width {width} is smaller than the {outer_rows} rows of the tableau"
        )));
    }
    let inner = tableau.inner();
    let pattern_rows = (0..rows)
        .map(|k| {
            (0..width)
                .map(|r| {
                    let filled = tableau.rows().get(r).map_or(0, |row| {
                        row.iter().take_while(|&&e| e as usize <= k).count()
                    });
                    (inner.get(r) + filled) as i64
                })
                .collect()
        })
        .collect();
    Ok(IntPattern::parallelogram(pattern_rows))
}

/// All SSYT of the `d x n` rectangle with every label in `[n]` used `d`
/// times: the tableau side of `Λ_{n,d}`.
pub fn rectangular_domain(n: usize, d: usize) -> TableauStream {
    let shape = Partition::new(vec![n; d]).expect("constant parts");
    enumerate_tableaux(&shape, &WeightVector::new(vec![d; n]), None)
}

/// Whether `N(ι(T)) = ι(γ(T))` holds for a rectangular constant-weight `T`.
pub fn verify_naimark_diagram(tableau: &Tableau, n: usize, d: usize) -> Result<bool> {
    let complement = tableau.gamma_complement(n, d)?;
    let via_patterns = ssyt_to_gt(tableau, Some(n))?.naimark_map(n, d)?;
    Ok(via_patterns == ssyt_to_gt(&complement, Some(n))?)
}

/// Whether `Ñ(ι(T)) = ι(Boxcomp(T))` holds, with `ι` taken over `n` rows and
/// the boxcomp column bound equal to the width of `T`. `T` needs fewer than
/// `n` rows so the top row of its pattern ends in 0.
pub fn verify_boxcomp_diagram(tableau: &Tableau, n: usize) -> Result<bool> {
    if tableau.rows().len() >= n {
        return Err(Error::Precondition(format!(
            "tableau has {} rows; fewer than n = {n} are needed",
            tableau.rows().len()
        )));
    }
    let complement = tableau.boxcomp(n, None)?;
    let via_patterns = ssyt_to_gt(tableau, Some(n))?.generalized_complement()?;
    Ok(via_patterns == ssyt_to_gt(&complement, Some(n))?)
}
