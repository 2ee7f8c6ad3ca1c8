//! Relative pseudo-complement (Heyting implication) in closed form.

use crate::antichain::Antichain;
use crate::error::Result;
use crate::general::GeneralAntichain;
use crate::interval::{Interval, Universe};
use crate::normal_form::push_ep;
use crate::ops::SubsetProbe;

/// `A → B`: the greatest `C` with `A ∧ C ≤ B`.
///
/// Over the unbounded universe the result may contain infinite runs of
/// singletons, returned as rays. Over `Bounded(n)` the result is finite.
/// Runs in `O(|A| + |B| + |A → B|)`; the pieces are produced in natural order.
pub fn relative_pseudo_complement(a: &Antichain, b: &Antichain, universe: Universe) -> Result<GeneralAntichain> {
    let universe = universe.validate()?;
    a.check_fits(universe)?;
    b.check_fits(universe)?;
    let g = implication_unbounded(a, b)?;
    match universe {
        Universe::Unbounded => Ok(g),
        Universe::Bounded(n) => g.materialize(n).map(GeneralAntichain::from),
    }
}

fn implication_unbounded(a: &Antichain, b: &Antichain) -> Result<GeneralAntichain> {
    let xs = match a.as_proper() {
        None => return Ok(b.clone().into()),
        Some([]) => return Ok(GeneralAntichain::top()),
        Some(xs) => xs,
    };
    let bs = match b.as_proper() {
        None => return Ok(GeneralAntichain::top()),
        Some([]) => return Ok(Antichain::bottom().into()),
        Some(bs) => bs,
    };
    let n = bs.len();
    let l = |i: usize| bs[i].left();
    let r = |i: usize| bs[i].right();

    // {(←..r₀-1]} ≤ A and {[ℓ_{n-1}+1..→)} ≤ A; the first member of A ends
    // earliest and the last starts latest.
    let left_ok = xs[0].right() < r(0);
    let right_ok = xs[xs.len() - 1].left() > l(n - 1);

    // T: gaps [ℓ_{i-1}+1..r_i-1] that contain some member of A. Empty gaps never
    // qualify since A ≠ 1. Gap left extremes increase, so one probe suffices.
    let mut probe = SubsetProbe::new(xs);
    let t: Vec<usize> = (1..n)
        .filter(|&i| {
            let (lo, hi) = (l(i - 1) + 1, r(i) - 1);
            lo <= hi && probe.has_subset_of(&Interval::new_unchecked(lo, hi))
        })
        .collect();

    let mut core = Vec::new();
    let (low, high);
    match (t.first(), t.last()) {
        (Some(&t_min), Some(&t_max)) => {
            if left_ok {
                push_ep(&mut core, l(t_min - 1), r(0));
                low = None;
            } else {
                low = Some(l(t_min - 1));
            }
            for w in t.windows(2) {
                let (prev, i) = (w[0], w[1]);
                push_ep(&mut core, l(i - 1), r(prev));
            }
            if right_ok {
                push_ep(&mut core, l(n - 1), r(t_max));
                high = None;
            } else {
                high = Some(r(t_max));
            }
        }
        _ => match (right_ok, left_ok) {
            (true, true) => {
                push_ep(&mut core, l(n - 1), r(0));
                (low, high) = (None, None);
            }
            (true, false) => (low, high) = (Some(l(n - 1)), None),
            (false, true) => (low, high) = (None, Some(r(0))),
            (false, false) => return Ok(GeneralAntichain::top()),
        },
    }
    GeneralAntichain::new(low, Antichain::from_normalized_unchecked(core), high)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{leq, meet};

    fn ac(s: &str) -> Antichain {
        s.parse().unwrap()
    }

    const Z: Universe = Universe::Unbounded;

    #[test]
    fn footnote_special_cases() {
        let b = ac("{[1..2],[4]}");
        let a = ac("{[0..3]}");
        assert_eq!(relative_pseudo_complement(&Antichain::top(), &b, Z).unwrap(), b.clone().into());
        assert!(relative_pseudo_complement(&a, &Antichain::top(), Z).unwrap().is_top());
        assert!(relative_pseudo_complement(&Antichain::bottom(), &Antichain::bottom(), Z).unwrap().is_top());
        assert_eq!(
            relative_pseudo_complement(&a, &Antichain::bottom(), Z).unwrap(),
            Antichain::bottom().into()
        );
    }

    #[test]
    fn single_point_into_wider_interval() {
        let g = relative_pseudo_complement(&ac("{[5]}"), &ac("{[5..6]}"), Z).unwrap();
        assert_eq!((g.low_ray(), g.core(), g.high_ray()), (None, &[][..], Some(6)));
        assert_eq!(
            relative_pseudo_complement(&ac("{[5]}"), &ac("{[5..6]}"), Universe::Bounded(10)).unwrap(),
            ac("{[6],[7],[8],[9]}").into()
        );
    }

    #[test]
    fn last_point_into_previous_point() {
        // {[n-1]} → {[n-2]} is every singleton below n-1.
        let n = 9;
        let g = relative_pseudo_complement(&ac("{[8]}"), &ac("{[7]}"), Universe::Bounded(n)).unwrap();
        assert_eq!(g, Antichain::points(0..8).into());
    }

    #[test]
    fn residual_is_greatest_solution_on_small_cases() {
        let n = 4;
        let a = ac("{[0],[2..3]}");
        let b = ac("{[0..1],[3]}");
        let c = relative_pseudo_complement(&a, &b, Universe::Bounded(n)).unwrap().to_finite().unwrap();
        assert!(leq(&meet(&a, &c), &b));
    }
}
