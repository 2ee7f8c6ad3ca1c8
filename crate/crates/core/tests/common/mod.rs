#![allow(dead_code)]

use mininterval::{enumerate_all, Antichain, Interval};
use proptest::prelude::*;

pub fn ac(s: &str) -> Antichain {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn all(n: usize) -> Vec<Antichain> {
    enumerate_all(n).collect()
}

/// Builds an antichain from (left step, extra right) pairs so that left and
/// right extremes both strictly increase, without going through `normalize`.
pub fn from_steps(start: i64, steps: &[(i64, i64)]) -> Antichain {
    let (mut l, mut r) = (start - 1, start - 1);
    let mut v = Vec::with_capacity(steps.len());
    for &(dl, dr) in steps {
        l += dl;
        r = (r + 1).max(l) + dr;
        v.push(Interval::new(l, r).unwrap());
    }
    Antichain::from_normalized(v).unwrap()
}

/// Finite antichains over the integers, clustered around 0 so that random
/// pairs interact.
pub fn finite_antichain() -> impl Strategy<Value = Antichain> {
    (-8i64..8, prop::collection::vec((1i64..4, 0i64..4), 0..10)).prop_map(|(s, steps)| from_steps(s, &steps))
}

/// Any element of `𝓔ₙ`, including top and bottom.
pub fn element_of(n: usize) -> impl Strategy<Value = Antichain> {
    let elems = all(n);
    (0..elems.len()).prop_map(move |i| elems[i].clone())
}

/// Brute-force ⊆-minimal elements, independent of the library's normalizer.
pub fn minimal(mut v: Vec<Interval>) -> Antichain {
    v.sort_by_key(|i| (i.left(), i.right()));
    v.dedup();
    let keep: Vec<Interval> =
        v.iter().copied().filter(|i| !v.iter().any(|j| j != i && j.is_subset_of(i))).collect();
    Antichain::from_normalized(keep).unwrap()
}
