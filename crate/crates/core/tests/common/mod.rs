//! Oracles and fixtures shared by the integration tests. Nothing here calls
//! into the algorithms it is used to check.
#![allow(dead_code)]

use framesteps::{FrameMatrix, Label, Partition};
use rand::Rng;

/// The 3 x 5 unit-norm tight frame with frame bound 5/3.
pub fn funtf() -> FrameMatrix {
    let r5 = 5f64.sqrt();
    let r6 = 6f64.sqrt();
    FrameMatrix::from_rows(&[
        vec![1.0, 2.0 / 3.0, -1.0 / r6, -1.0 / 6.0, 1.0 / 6.0],
        vec![0.0, r5 / 3.0, r5 / r6, r5 / 6.0, -r5 / 6.0],
        vec![0.0, 0.0, 0.0, r5 / r6, r5 / r6],
    ])
    .unwrap()
}

/// Its inner eigensteps, rows of the Gram prefixes.
pub fn funtf_inner_eigensteps() -> Vec<Vec<f64>> {
    let t = 1.0 / 3.0;
    vec![
        vec![1.0],
        vec![5.0 * t, t],
        vec![5.0 * t, 4.0 * t, 0.0],
        vec![5.0 * t, 5.0 * t, 2.0 * t, 0.0],
        vec![5.0 * t, 5.0 * t, 5.0 * t, 0.0, 0.0],
    ]
}

/// Steps to the next distinct permutation in lexicographic order; false once
/// the last one has been passed.
pub fn next_permutation(v: &mut [Label]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Rows weakly increase left to right, columns strictly increase upward.
pub fn is_semistandard(rows: &[Vec<Label>]) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = rows
        .windows(2)
        .all(|p| p[1].iter().zip(&p[0]).all(|(above, below)| above > below));
    rows_ok && cols_ok
}

/// Number of fillings of `shape` with content `weight` that are semistandard,
/// found by trying every arrangement of the multiset.
pub fn brute_force_count(shape: &[usize], weight: &[usize]) -> usize {
    let mut word: Vec<Label> = weight
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as Label + 1, m))
        .collect();
    if word.len() != shape.iter().sum::<usize>() {
        return 0;
    }
    let mut count = 0;
    loop {
        let mut cells = word.iter().copied();
        let rows: Vec<Vec<Label>> = shape.iter().map(|&len| cells.by_ref().take(len).collect()).collect();
        if is_semistandard(&rows) {
            count += 1;
        }
        if !next_permutation(&mut word) {
            return count;
        }
    }
}

/// All partitions of `n` by direct recursion on the largest part.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` into positive parts.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions_of(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Pattern-row interlacing read straight off the inequalities
/// `upper[j] >= lower[j] >= upper[j + 1]`, plus nonnegativity.
pub fn interlacing_scan(rows: &[Vec<i64>]) -> bool {
    rows.iter().flatten().all(|&x| x >= 0)
        && rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]))
        && rows.windows(2).all(|p| {
            let (lower, upper) = (&p[0], &p[1]);
            (0..lower.len()).all(|j| {
                upper.get(j).is_none_or(|&u| u >= lower[j])
                    && upper.get(j + 1).is_none_or(|&u| lower[j] >= u)
            })
        })
}

/// A `d x n` matrix with independent entries uniform in `[-1, 1]`.
pub fn random_frame(rng: &mut impl Rng, d: usize, n: usize) -> FrameMatrix {
    let rows: Vec<Vec<f64>> = (0..d)
        .map(|_| (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect())
        .collect();
    FrameMatrix::from_rows(&rows).unwrap()
}

/// Largest absolute row sum of `Φ*Φ + Ψ*Ψ - c·I`, computed entrywise.
pub fn completion_residual(phi: &FrameMatrix, psi: &FrameMatrix, c: f64) -> f64 {
    let n = phi.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s: f64 = (0..phi.dim()).map(|k| phi.get(k, i) * phi.get(k, j)).sum();
                    s += (0..psi.dim()).map(|k| psi.get(k, i) * psi.get(k, j)).sum::<f64>();
                    if i == j {
                        s -= c;
                    }
                    s.abs()
                })
                .sum::<f64>()
        })
        .max_by(f64::total_cmp)
        .unwrap_or(0.0)
}
