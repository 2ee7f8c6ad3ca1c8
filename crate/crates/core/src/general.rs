//! Antichains that may carry infinite runs of singletons at either end.
//!
//! Over the unbounded universe the meet-irreducible elements and relative
//! pseudo-complements are generally infinite. They are always of the form
//! "all singletons up to `a`", a finite core, and "all singletons from `b`",
//! which is what [`GeneralAntichain`] stores.

use std::fmt;

use crate::antichain::{normalize, Antichain};
use crate::error::{LatticeError, Result};
use crate::interval::Interval;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralAntichain(Repr);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Top,
    Rays {
        low: Option<i64>,
        core: Vec<Interval>,
        high: Option<i64>,
    },
}

impl GeneralAntichain {
    pub fn top() -> Self {
        GeneralAntichain(Repr::Top)
    }

    /// Builds `{[x] | x ≤ low} ∪ core ∪ {[x] | x ≥ high}` in canonical form.
    ///
    /// Singletons of the core adjacent to a ray are folded into it. Fails if
    /// the pieces overlap, or if the rays meet (the value would be every
    /// singleton of the line, which has no finite form here).
    pub fn new(low: Option<i64>, core: Antichain, high: Option<i64>) -> Result<Self> {
        let Some(core) = core.into_intervals() else {
            if low.is_some() || high.is_some() {
                return Err(LatticeError::NotNormalized("{∅} cannot be combined with rays".into()));
            }
            return Ok(GeneralAntichain::top());
        };
        let (mut low, mut high) = (low, high);
        let mut start = 0;
        let mut end = core.len();
        if let Some(a) = low.as_mut() {
            while start < end && core[start] == Interval::point(*a + 1) {
                *a += 1;
                start += 1;
            }
        }
        if let Some(b) = high.as_mut() {
            while end > start && core[end - 1] == Interval::point(*b - 1) {
                *b -= 1;
                end -= 1;
            }
        }
        let core = core[start..end].to_vec();
        if let (Some(a), Some(b)) = (low, high) {
            if a + 1 >= b {
                return Err(LatticeError::Unrepresentable("the antichain of all singletons"));
            }
        }
        if let (Some(a), Some(first)) = (low, core.first()) {
            if first.left() <= a {
                return Err(LatticeError::NotNormalized(format!("{first} overlaps the low ray ending at {a}")));
            }
        }
        if let (Some(b), Some(last)) = (high, core.last()) {
            if last.right() >= b {
                return Err(LatticeError::NotNormalized(format!("{last} overlaps the high ray starting at {b}")));
            }
        }
        Ok(GeneralAntichain(Repr::Rays { low, core, high }))
    }

    pub fn is_top(&self) -> bool {
        matches!(self.0, Repr::Top)
    }

    /// `a` such that every singleton `[x]` with `x ≤ a` is a member.
    pub fn low_ray(&self) -> Option<i64> {
        match self.0 {
            Repr::Rays { low, .. } => low,
            Repr::Top => None,
        }
    }

    /// `b` such that every singleton `[x]` with `x ≥ b` is a member.
    pub fn high_ray(&self) -> Option<i64> {
        match self.0 {
            Repr::Rays { high, .. } => high,
            Repr::Top => None,
        }
    }

    pub fn core(&self) -> &[Interval] {
        match &self.0 {
            Repr::Rays { core, .. } => core,
            Repr::Top => &[],
        }
    }

    /// The value as a plain finite antichain, if it has no rays.
    pub fn to_finite(&self) -> Option<Antichain> {
        match &self.0 {
            Repr::Top => Some(Antichain::top()),
            Repr::Rays { low: None, core, high: None } => Some(Antichain::from_normalized_unchecked(core.clone())),
            _ => None,
        }
    }

    /// Restriction to the intervals of `{0..n-1}`.
    pub fn materialize(&self, n: i64) -> Result<Antichain> {
        if n < 1 {
            return Err(LatticeError::InvalidUniverse(n));
        }
        match &self.0 {
            Repr::Top => Ok(Antichain::top()),
            Repr::Rays { low, core, high } => {
                let below = low.map_or(0..0, |a| 0..(a + 1).min(n));
                let above = high.map_or(0..0, |b| b.max(0)..n);
                let inside = core.iter().copied().filter(|iv| iv.left() >= 0 && iv.right() < n);
                Ok(normalize(
                    below.map(Interval::point).chain(inside).chain(above.map(Interval::point)),
                ))
            }
        }
    }
}

impl From<Antichain> for GeneralAntichain {
    fn from(a: Antichain) -> Self {
        match a.into_intervals() {
            None => GeneralAntichain::top(),
            Some(core) => GeneralAntichain(Repr::Rays { low: None, core, high: None }),
        }
    }
}

/// Free-function form of [`GeneralAntichain::materialize`].
pub fn materialize(g: &GeneralAntichain, n: i64) -> Result<Antichain> {
    g.materialize(n)
}

impl fmt::Display for GeneralAntichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (low, core, high) = match &self.0 {
            Repr::Top => return f.write_str("{∅}"),
            Repr::Rays { low, core, high } => (low, core, high),
        };
        let mut parts: Vec<String> = Vec::with_capacity(core.len() + 2);
        if let Some(a) = low {
            parts.push(format!("…[x] for x ≤ {a}"));
        }
        parts.extend(core.iter().map(Interval::to_string));
        if let Some(b) = high {
            parts.push(format!("[x] for x ≥ {b}…"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "{{{}}}", parts.join(", "))
        }
    }
}
