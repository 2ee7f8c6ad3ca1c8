//! Random inputs shared by the benchmarks and the scaling checks.

use mininterval::{Antichain, Interval};
use rand::Rng;

/// A random antichain with exactly `size` members, spread over roughly
/// `4 * size` positions. Left and right extremes are drawn as two strictly
/// increasing sequences with `left <= right` pairwise.
pub fn random_antichain<R: Rng>(rng: &mut R, size: usize) -> Antichain {
    let mut members = Vec::with_capacity(size);
    let (mut left, mut right) = (-1i64, -1i64);
    for _ in 0..size {
        left += rng.gen_range(1..=4);
        right = (right + 1).max(left) + rng.gen_range(0..=3);
        members.push(Interval::new(left, right).expect("left <= right"));
    }
    Antichain::from_normalized(members).expect("strictly increasing extremes")
}
