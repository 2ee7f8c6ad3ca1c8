//! Meet-representations: the tilde elements `~I`, critical intervals, and the
//! isomorphism between antichains and their critical sets.
//!
//! `~I` is the antichain of all singletons outside `I`; these are exactly the
//! meet-irreducible elements. The critical intervals of `A` index the unique
//! irredundant representation `A = ⋀ { ~I | I ∈ crit A }`.

use std::fmt;

use crate::antichain::{normalize, Antichain};
use crate::error::{LatticeError, Result};
use crate::general::GeneralAntichain;
use crate::interval::{ExtendedInterval, Interval, Universe};

/// An antichain of extended intervals under inclusion, in natural order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CritSet(Vec<ExtendedInterval>);

/// Lower and upper bounds of a nonempty extended interval, `None` meaning infinite.
fn bounds(x: &ExtendedInterval) -> (Option<i64>, Option<i64>) {
    (x.left(), x.right())
}

impl CritSet {
    /// Sorts `elements` into natural order and checks they are pairwise incomparable.
    pub fn new(mut elements: Vec<ExtendedInterval>) -> Result<Self> {
        let special = elements
            .iter()
            .any(|e| matches!(e, ExtendedInterval::Empty | ExtendedInterval::Full));
        if special && elements.len() > 1 {
            return Err(LatticeError::NotNormalized(
                "∅ or the full line must be the only element of a critical set".into(),
            ));
        }
        elements.sort_by_key(ExtendedInterval::natural_key);
        for w in elements.windows(2) {
            let ((l0, r0), (l1, r1)) = (bounds(&w[0]), bounds(&w[1]));
            // Strictly increasing extremes, with -∞ only first and +∞ only last.
            let lefts_ok = match (l0, l1) {
                (None, Some(_)) => true,
                (Some(a), Some(b)) => a < b,
                _ => false,
            };
            let rights_ok = match (r0, r1) {
                (Some(_), None) => true,
                (Some(a), Some(b)) => a < b,
                _ => false,
            };
            if !(lefts_ok && rights_ok) {
                return Err(LatticeError::NotNormalized(format!("{} and {} are comparable", w[0], w[1])));
            }
        }
        Ok(CritSet(elements))
    }

    pub fn empty() -> Self {
        CritSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[ExtendedInterval] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Each element intersected with `{0..n-1}`, rays and the full line
    /// becoming finite intervals. Empty intersections stay `Empty`.
    pub fn clamp(&self, n: i64) -> Vec<ExtendedInterval> {
        self.0
            .iter()
            .map(|e| e.clamp(n).map_or(ExtendedInterval::Empty, ExtendedInterval::Finite))
            .collect()
    }
}

impl fmt::Display for CritSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `ep(l, r)`: `{[l..r]}` when `l < r`, otherwise the singletons `[r]..[l]`.
pub fn ep(l: i64, r: i64) -> Antichain {
    if l < r {
        Antichain::singleton(Interval::new_unchecked(l, r))
    } else {
        Antichain::from_normalized_unchecked((r..=l).map(Interval::point).collect())
    }
}

/// Appends the members of `ep(l, r)` in natural order.
pub(crate) fn push_ep(out: &mut Vec<Interval>, l: i64, r: i64) {
    if l < r {
        out.push(Interval::new_unchecked(l, r));
    } else {
        out.extend((r..=l).map(Interval::point));
    }
}

/// The meet-irreducible element `~I`: all singletons not contained in `I`.
///
/// `~∅` is every singleton, which only has a finite form over a bounded universe.
pub fn tilde(interval: ExtendedInterval, universe: Universe) -> Result<GeneralAntichain> {
    let universe = universe.validate()?;
    let symbolic = match interval {
        ExtendedInterval::Empty => match universe {
            Universe::Bounded(n) => return Ok(Antichain::coatom(n).into()),
            Universe::Unbounded => return Err(LatticeError::Unrepresentable("~∅")),
        },
        ExtendedInterval::Full => GeneralAntichain::from(Antichain::bottom()),
        ExtendedInterval::Finite(iv) => {
            GeneralAntichain::new(Some(iv.left() - 1), Antichain::bottom(), Some(iv.right() + 1))?
        }
        ExtendedInterval::LeftRay(r) => GeneralAntichain::new(None, Antichain::bottom(), Some(r + 1))?,
        ExtendedInterval::RightRay(l) => GeneralAntichain::new(Some(l - 1), Antichain::bottom(), None)?,
    };
    restrict(symbolic, universe)
}

fn restrict(g: GeneralAntichain, universe: Universe) -> Result<GeneralAntichain> {
    match universe {
        Universe::Unbounded => Ok(g),
        Universe::Bounded(n) => g.materialize(n).map(GeneralAntichain::from),
    }
}

/// The critical intervals of `A`: the inclusion-maximal intervals (finite or
/// not) that contain no member of `A`.
///
/// Rays are kept symbolic over a bounded universe too; use
/// [`CritSet::clamp`] to compare with intervals of `{0..n-1}`.
pub fn critical_intervals(a: &Antichain, universe: Universe) -> Result<CritSet> {
    let universe = universe.validate()?;
    a.check_fits(universe)?;
    let Some(members) = a.as_proper() else {
        // Every interval contains ∅.
        return Ok(CritSet::empty());
    };
    if members.is_empty() {
        return Ok(CritSet(vec![ExtendedInterval::Full]));
    }
    if let Universe::Bounded(n) = universe {
        if members.len() as i64 == n && members.iter().all(Interval::is_singleton) {
            return Ok(CritSet(vec![ExtendedInterval::Empty]));
        }
    }
    let (min, max) = match universe {
        Universe::Bounded(n) => (0, n - 1),
        Universe::Unbounded => (i64::MIN, i64::MAX),
    };
    let mut out = Vec::with_capacity(members.len() + 1);
    let first = members[0];
    if first.right() > min {
        out.push(ExtendedInterval::LeftRay(first.right() - 1));
    }
    for w in members.windows(2) {
        let (lo, hi) = (w[0].left() + 1, w[1].right() - 1);
        if lo <= hi {
            out.push(ExtendedInterval::Finite(Interval::new_unchecked(lo, hi)));
        }
    }
    let last = members[members.len() - 1];
    if last.left() < max {
        out.push(ExtendedInterval::RightRay(last.left() + 1));
    }
    Ok(CritSet(out))
}

/// `⋀ { ~I | I ∈ S }`, computed piecewise from consecutive members of `S`.
pub fn meet_of_irreducibles(set: &CritSet, universe: Universe) -> Result<GeneralAntichain> {
    let universe = universe.validate()?;
    let elems = set.as_slice();
    match elems {
        [] => return Ok(GeneralAntichain::top()),
        [ExtendedInterval::Empty] => return tilde(ExtendedInterval::Empty, universe),
        [ExtendedInterval::Full] => return Ok(Antichain::bottom().into()),
        _ => {}
    }
    // ~[l..→) when the first member is bounded below.
    let low = elems[0].left().map(|l| l - 1);
    // ~(←..r] when the last member is bounded above.
    let high = elems[elems.len() - 1].right().map(|r| r + 1);
    let mut core = Vec::with_capacity(elems.len());
    for w in elems.windows(2) {
        let (Some(r), Some(l)) = (w[0].right(), w[1].left()) else {
            return Err(LatticeError::NotNormalized(format!("{} cannot precede {}", w[0], w[1])));
        };
        push_ep(&mut core, l - 1, r + 1);
    }
    let g = GeneralAntichain::new(low, normalize(core), high)?;
    restrict(g, universe)
}
