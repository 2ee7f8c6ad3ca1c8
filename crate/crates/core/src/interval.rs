//! Positions, intervals and the universes they live in.

use std::fmt;

use crate::error::{LatticeError, Result};

/// The totally ordered base set positions are drawn from.
///
/// `Bounded(n)` is `{0, .., n-1}`; `Unbounded` is the whole integer line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Universe {
    Bounded(i64),
    Unbounded,
}

impl Universe {
    pub fn bounded(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(LatticeError::InvalidUniverse(n));
        }
        Ok(Universe::Bounded(n))
    }

    pub(crate) fn validate(self) -> Result<Self> {
        match self {
            Universe::Bounded(n) if n < 1 => Err(LatticeError::InvalidUniverse(n)),
            u => Ok(u),
        }
    }

    /// Returns an error if `iv` does not fit in the universe.
    pub fn check(self, iv: Interval) -> Result<()> {
        match self {
            Universe::Bounded(n) if iv.left < 0 || iv.right >= n => Err(LatticeError::OutOfUniverse {
                left: iv.left,
                right: iv.right,
                size: n,
            }),
            _ => Ok(()),
        }
    }
}

/// A nonempty closed interval `[left..right]` of integer positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    left: i64,
    right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Result<Self> {
        if left > right {
            return Err(LatticeError::InvalidInterval { left, right });
        }
        Ok(Interval { left, right })
    }

    /// The singleton interval `[x..x]`.
    pub const fn point(x: i64) -> Self {
        Interval { left: x, right: x }
    }

    pub(crate) const fn new_unchecked(left: i64, right: i64) -> Self {
        debug_assert!(left <= right);
        Interval { left, right }
    }

    #[inline]
    pub const fn left(&self) -> i64 {
        self.left
    }

    #[inline]
    pub const fn right(&self) -> i64 {
        self.right
    }

    /// Number of positions covered.
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub const fn len(&self) -> u64 {
        (self.right - self.left) as u64 + 1
    }

    pub const fn is_singleton(&self) -> bool {
        self.left == self.right
    }

    /// `self ⊆ other`.
    #[inline]
    pub const fn is_subset_of(&self, other: &Interval) -> bool {
        other.left <= self.left && self.right <= other.right
    }

    #[inline]
    pub const fn overlaps(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }

    /// Smallest interval containing both.
    #[inline]
    pub fn span(&self, other: &Interval) -> Interval {
        Interval {
            left: self.left.min(other.left),
            right: self.right.max(other.right),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.left, self.right)
    }
}

/// A finite or infinite interval of the base set, possibly empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedInterval {
    Finite(Interval),
    /// `(←..right]`
    LeftRay(i64),
    /// `[left..→)`
    RightRay(i64),
    Full,
    Empty,
}

impl ExtendedInterval {
    pub fn finite(left: i64, right: i64) -> Result<Self> {
        Interval::new(left, right).map(ExtendedInterval::Finite)
    }

    /// Least element, if the interval is bounded below and nonempty.
    pub fn left(&self) -> Option<i64> {
        match *self {
            ExtendedInterval::Finite(iv) => Some(iv.left()),
            ExtendedInterval::RightRay(l) => Some(l),
            _ => None,
        }
    }

    /// Greatest element, if the interval is bounded above and nonempty.
    pub fn right(&self) -> Option<i64> {
        match *self {
            ExtendedInterval::Finite(iv) => Some(iv.right()),
            ExtendedInterval::LeftRay(r) => Some(r),
            _ => None,
        }
    }

    pub fn contains_point(&self, x: i64) -> bool {
        match *self {
            ExtendedInterval::Finite(iv) => iv.left() <= x && x <= iv.right(),
            ExtendedInterval::LeftRay(r) => x <= r,
            ExtendedInterval::RightRay(l) => l <= x,
            ExtendedInterval::Full => true,
            ExtendedInterval::Empty => false,
        }
    }

    /// `iv ⊆ self` for a finite interval `iv`.
    pub fn contains_interval(&self, iv: &Interval) -> bool {
        self.contains_point(iv.left()) && self.contains_point(iv.right())
    }

    /// Intersection with `{0..n-1}`; `None` when that is empty.
    pub fn clamp(&self, n: i64) -> Option<Interval> {
        let (lo, hi) = match *self {
            ExtendedInterval::Finite(iv) => (iv.left(), iv.right()),
            ExtendedInterval::LeftRay(r) => (0, r),
            ExtendedInterval::RightRay(l) => (l, n - 1),
            ExtendedInterval::Full => (0, n - 1),
            ExtendedInterval::Empty => return None,
        };
        let (lo, hi) = (lo.max(0), hi.min(n - 1));
        (lo <= hi).then(|| Interval::new_unchecked(lo, hi))
    }

    /// Sort key for the natural order of an antichain of extended intervals.
    pub(crate) fn natural_key(&self) -> (u8, i64) {
        match *self {
            ExtendedInterval::Empty | ExtendedInterval::Full => (0, 0),
            ExtendedInterval::LeftRay(r) => (1, r),
            ExtendedInterval::Finite(iv) => (2, iv.left()),
            ExtendedInterval::RightRay(l) => (3, l),
        }
    }
}

impl From<Interval> for ExtendedInterval {
    fn from(iv: Interval) -> Self {
        ExtendedInterval::Finite(iv)
    }
}

impl fmt::Display for ExtendedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInterval::Finite(iv) => iv.fmt(f),
            ExtendedInterval::LeftRay(r) => write!(f, "(←..{r}]"),
            ExtendedInterval::RightRay(l) => write!(f, "[{l}..→)"),
            ExtendedInterval::Full => f.write_str("(←..→)"),
            ExtendedInterval::Empty => f.write_str("∅"),
        }
    }
}
