//! Deterministic inputs for the benchmarks.

use framesteps::{FrameMatrix, Partition, Tableau, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A `d x n` frame with entries uniform in `[-1, 1]`, fixed by `seed`.
pub fn random_frame(d: usize, n: usize, seed: u64) -> FrameMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<f64>> = (0..d).map(|_| (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect()).collect();
    FrameMatrix::from_rows(&rows).expect("finite entries")
}

/// The `d x n` rectangle with every label in `[n]` used `d` times.
pub fn rectangle(n: usize, d: usize) -> (Partition, WeightVector) {
    (Partition::new(vec![n; d]).expect("constant parts"), WeightVector::new(vec![d; n]))
}

/// Staircase shape `(k, k-1, ..., 1)` with all labels distinct.
pub fn staircase(k: usize) -> (Partition, WeightVector) {
    let shape = Partition::new((1..=k).rev().collect()).expect("decreasing parts");
    let cells = shape.size();
    (shape, WeightVector::new(vec![1; cells]))
}

/// The tableau whose column `j` holds `1..=height_j`: a staircase with row
/// `i` filled with `i`.
pub fn superstandard(k: usize) -> Tableau {
    Tableau::straight((1..=k).map(|i| vec![i as u32; k + 1 - i]).collect())
}
