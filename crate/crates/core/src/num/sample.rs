use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of the fixed point set used to compare rational functions.
pub const SAMPLE_SEED: u64 = 0x5eed_1a75;
/// Number of evaluation points used to compare rational functions.
pub const SAMPLE_COUNT: usize = 8;

/// `count` seeded points, uniform in the square `[-r, r] × [-r, r]`.
pub fn sample_points(seed: u64, count: usize, r: f64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Complex64::new(rng.random_range(-r..r), rng.random_range(-r..r)))
        .collect()
}

/// `|a − b| / max(|a|, |b|, 1)`: relative away from zero, absolute near it.
pub fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}
