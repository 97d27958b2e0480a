mod common;

use framesteps::bridge::rectangular_domain;
use framesteps::enumerate::tableaux_with_labels;
use framesteps::{
    gt_to_skew, gt_to_ssyt, inner_eigensteps, outer_eigensteps, skew_to_gt, ssyt_to_gt, GtPattern, IntPattern,
    Tableau,
};
use proptest::prelude::*;

use common::*;

/// Every triangular pattern with `top` as its last row, by walking the
/// interlacing ranges downward.
fn patterns_under(top: &[i64]) -> Vec<IntPattern> {
    fn go(rows: &mut Vec<Vec<i64>>, out: &mut Vec<IntPattern>) {
        let upper = rows[0].clone();
        if upper.len() == 1 {
            out.push(GtPattern::triangular(rows.clone()));
            return;
        }
        let mut lower = vec![0; upper.len() - 1];
        fill(&upper, &mut lower, 0, rows, out);
    }
    fn fill(upper: &[i64], lower: &mut Vec<i64>, j: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<IntPattern>) {
        if j == lower.len() {
            rows.insert(0, lower.clone());
            go(rows, out);
            rows.remove(0);
            return;
        }
        for x in upper[j + 1]..=upper[j] {
            lower[j] = x;
            fill(upper, lower, j + 1, rows, out);
        }
    }
    let mut out = Vec::new();
    go(&mut vec![top.to_vec()], &mut out);
    out
}

/// All triangular integer patterns with at most `max_rows` rows whose top
/// row sums to at most `max_sum`.
fn small_patterns(max_rows: usize, max_sum: usize) -> Vec<IntPattern> {
    let mut out = Vec::new();
    for rows in 1..=max_rows {
        for size in 0..=max_sum {
            for parts in partitions_of(size).into_iter().filter(|p| p.len() <= rows) {
                let mut top: Vec<i64> = parts.iter().map(|&x| x as i64).collect();
                top.resize(rows, 0);
                out.extend(patterns_under(&top));
            }
        }
    }
    out
}

#[test]
fn iota_round_trips_on_small_patterns() {
    let patterns = small_patterns(4, 8);
    assert!(patterns.len() > 1000);
    for p in &patterns {
        let n = p.num_rows();
        let t = gt_to_ssyt(p).unwrap();
        assert!(t.is_valid(), "{p:?}");
        assert_eq!(&ssyt_to_gt(&t, Some(n)).unwrap(), p);
        let counts: Vec<i64> = t.weight(Some(n)).unwrap().counts().iter().map(|&c| c as i64).collect();
        assert_eq!(counts, p.weight().0);
    }
}

#[test]
fn skew_iota_round_trips_on_small_patterns() {
    for p in small_patterns(4, 6) {
        let width = p.num_rows();
        let para = p.to_parallelogram(width).unwrap();
        let skew = gt_to_skew(&para).unwrap();
        assert!(skew.is_valid());
        assert_eq!(skew_to_gt(&skew, para.num_rows(), Some(width)).unwrap(), para);
    }
}

#[test]
fn shape_conversions_are_inverse_and_keep_weights() {
    for p in small_patterns(4, 6) {
        let para = p.to_parallelogram(p.num_rows()).unwrap();
        assert!(para.is_valid());
        assert_eq!(para.weight(), p.weight());
        assert_eq!(para.to_triangular().unwrap(), p);
    }
}

#[test]
fn generalized_complement_is_a_valid_involution() {
    for p in small_patterns(4, 8) {
        let top = p.top_row().unwrap();
        if top.last() != Some(&0) || top[0] == 0 {
            assert!(p.generalized_complement().is_err());
            continue;
        }
        let q = p.generalized_complement().unwrap();
        assert!(q.is_valid());
        let b = top[0];
        let expected: Vec<i64> = p.weight().0.iter().map(|w| b - w).collect();
        assert_eq!(q.weight().0, expected);
        assert_eq!(q.generalized_complement().unwrap(), p);
    }
}

#[test]
fn naimark_map_is_a_valid_involution_on_every_lambda() {
    for (n, d) in [(4, 2), (5, 2), (5, 3)] {
        for t in rectangular_domain(n, d) {
            let p = ssyt_to_gt(&t, Some(n)).unwrap();
            let q = p.naimark_map(n, d).unwrap();
            assert!(q.is_valid());
            assert_eq!(q.naimark_map(n, n - d).unwrap(), p);
        }
    }
}

fn small_tableau() -> impl Strategy<Value = (Tableau, usize)> {
    (1usize..=8, 1usize..=5, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_filter_map(
        "no tableau of that shape fits the labels",
        |(size, n, shape_pick, tableau_pick)| {
            let shapes: Vec<_> = partitions_of(size).into_iter().filter(|p| p.len() <= n).collect();
            let shape = partition(shape_pick.get(&shapes));
            let all: Vec<Tableau> = tableaux_with_labels(&shape, n).collect();
            (!all.is_empty()).then(|| (tableau_pick.get(&all).clone(), n))
        },
    )
}

fn gt_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4).prop_flat_map(|rows| {
        (1..=rows).map(|i| prop::collection::vec(-1i64..=4, i)).collect::<Vec<_>>()
    })
}

proptest! {
    #[test]
    fn boxcomp_is_an_involution((t, n) in small_tableau(), extra in 0usize..3) {
        let c = t.shape().unwrap().width() + extra;
        let image = t.boxcomp(n, Some(c)).unwrap();
        prop_assert!(image.is_valid());
        prop_assert_eq!(image.boxcomp(n, Some(c)).unwrap(), t);
    }

    #[test]
    fn strip_and_restore_are_inverse((t, _n) in small_tableau()) {
        let skew = t.strip_to_skew().unwrap();
        prop_assert!(skew.is_valid());
        prop_assert_eq!(skew.skew_to_straight().unwrap(), t);
    }

    #[test]
    fn gamma_is_an_involution(n in 2usize..=6, d_pick in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let d = 1 + d_pick.index(n - 1);
        let all: Vec<Tableau> = rectangular_domain(n, d).collect();
        let t = pick.get(&all);
        let image = t.gamma_complement(n, d).unwrap();
        prop_assert!(image.is_valid());
        prop_assert_eq!(image.gamma_complement(n, n - d).unwrap(), t.clone());
    }

    #[test]
    fn validation_matches_inequality_scan(rows in gt_rows()) {
        let p = GtPattern::triangular(rows.clone());
        prop_assert_eq!(p.is_valid(), interlacing_scan(&rows));
        if p.is_valid() {
            prop_assert!(p.weight().0.iter().all(|&w| w >= 0));
        }
    }

    #[test]
    fn eigensteps_interlace_and_track_norms(
        d in 1usize..=4,
        extra in 0usize..=4,
        entries in prop::collection::vec(-2.0f64..2.0, 32),
    ) {
        let n = d + extra;
        let rows: Vec<Vec<f64>> = (0..d).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        let phi = framesteps::FrameMatrix::from_rows(&rows).unwrap();
        for table in [inner_eigensteps(&phi, 1e-9).unwrap(), outer_eigensteps(&phi, 1e-9).unwrap()] {
            prop_assert!(table.monotonicity_defect() <= 1e-9);
            prop_assert!(table.interlacing_defect() <= 1e-9);
            prop_assert!(table.trace_defect(&phi.norm_squares()) <= 1e-9);
        }
    }
}
