mod common;

use framesteps::io::{parse_matrix, matrix_to_json};
use framesteps::spectral::{best_approximation, simplest_rational_within};
use framesteps::{
    clear, frame_report, inner_eigensteps, naimark_frame, outer_eigensteps, Error, NaimarkMode, DEFAULT_MAX_DEN,
    DEFAULT_TOL,
};

use common::*;

#[test]
fn funtf_is_unit_norm_tight() {
    let r = frame_report(&funtf(), DEFAULT_TOL).unwrap();
    assert!(r.tight && r.equal_norm);
    assert_eq!(r.rank, 3);
    assert!((r.lower.unwrap() - 5.0 / 3.0).abs() < 1e-12);
    assert!(r.norm_squares.iter().all(|w| (w - 1.0).abs() < 1e-12));
}

#[test]
fn funtf_outer_eigensteps_clear_to_parallelogram() {
    let table = outer_eigensteps(&funtf(), DEFAULT_TOL).unwrap();
    let cleared = clear(&table, DEFAULT_MAX_DEN, DEFAULT_TOL).unwrap();
    assert_eq!(
        cleared.pattern.rows(),
        &[vec![3, 0, 0], vec![5, 1, 0], vec![5, 4, 0], vec![5, 5, 2], vec![5, 5, 5]]
    );
}

#[test]
fn funtf_inner_table_matches_exact_values() {
    let table = inner_eigensteps(&funtf(), DEFAULT_TOL).unwrap();
    for (got, want) in table.rows().iter().zip(funtf_inner_eigensteps()) {
        for (a, b) in got.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}

#[test]
fn generalized_complement_of_shear() {
    let phi = framesteps::FrameMatrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    let b = (3.0 + 5f64.sqrt()) / 2.0;
    let psi = naimark_frame(&phi, NaimarkMode::Generalized, DEFAULT_TOL).unwrap();
    assert!(completion_residual(&phi, &psi, b) < 1e-12);
    let table = inner_eigensteps(&phi, DEFAULT_TOL).unwrap();
    assert!(matches!(clear(&table, DEFAULT_MAX_DEN, DEFAULT_TOL), Err(Error::NotClearable { .. })));
}

#[test]
fn rational_reconstruction_oracle() {
    // p/q with small q, recovered from its float, checked against exact division.
    for q in 1..=40i64 {
        for p in 0..=3 * q {
            let x = p as f64 / q as f64;
            let r = simplest_rational_within(x, 1e-12).unwrap();
            assert_eq!(r, framesteps::gt::ratio(p, q));
            assert_eq!(best_approximation(x, 40), framesteps::gt::ratio(p, q));
        }
    }
}

#[test]
fn matrix_json_round_trip() {
    let phi = funtf();
    let back = parse_matrix(&matrix_to_json(&phi).to_string()).unwrap();
    assert_eq!(back, phi);
    assert_eq!(parse_matrix(&phi.to_string()).unwrap(), phi);
}
