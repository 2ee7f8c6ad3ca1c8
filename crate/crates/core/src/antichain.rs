//! Normalized antichains of intervals: the elements of the lattice.

use std::fmt;
use std::str::FromStr;

use crate::error::{LatticeError, Result};
use crate::interval::{Interval, Universe};

/// A finite antichain of intervals under inclusion, or the top element `{∅}`.
///
/// Proper antichains are kept in normal form: left extremes and right
/// extremes are both strictly increasing. The empty proper antichain is the
/// bottom element `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antichain(Repr);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Top,
    Proper(Vec<Interval>),
}

impl Antichain {
    /// The greatest element `{∅}`.
    pub const fn top() -> Self {
        Antichain(Repr::Top)
    }

    /// The least element, the empty antichain.
    pub const fn bottom() -> Self {
        Antichain(Repr::Proper(Vec::new()))
    }

    pub fn singleton(iv: Interval) -> Self {
        Antichain(Repr::Proper(vec![iv]))
    }

    /// `{[x] | x in positions}`; the positions need not be sorted.
    pub fn points<I: IntoIterator<Item = i64>>(positions: I) -> Self {
        normalize(positions.into_iter().map(Interval::point))
    }

    /// The unique coatom `1⁻` of `𝓔ₙ`: every singleton of `{0..n-1}`.
    pub fn coatom(n: i64) -> Self {
        Antichain(Repr::Proper((0..n).map(Interval::point).collect()))
    }

    /// The unique atom `{[0..n-1]}` of `𝓔ₙ`.
    pub fn atom(n: i64) -> Result<Self> {
        Universe::bounded(n)?;
        Ok(Antichain::singleton(Interval::new_unchecked(0, n - 1)))
    }

    /// Accepts intervals already in normal form, rejecting anything else.
    pub fn from_normalized(intervals: Vec<Interval>) -> Result<Self> {
        if let Some(w) = intervals
            .windows(2)
            .find(|w| w[0].left() >= w[1].left() || w[0].right() >= w[1].right())
        {
            return Err(LatticeError::NotNormalized(format!("{} followed by {}", w[0], w[1])));
        }
        Ok(Antichain(Repr::Proper(intervals)))
    }

    pub(crate) fn from_normalized_unchecked(intervals: Vec<Interval>) -> Self {
        debug_assert!(is_normal_form(&intervals), "not in normal form: {intervals:?}");
        Antichain(Repr::Proper(intervals))
    }

    pub fn is_top(&self) -> bool {
        matches!(self.0, Repr::Top)
    }

    pub fn is_bottom(&self) -> bool {
        matches!(&self.0, Repr::Proper(v) if v.is_empty())
    }

    /// The member intervals in natural order, or `None` for the top element.
    pub fn as_proper(&self) -> Option<&[Interval]> {
        match &self.0 {
            Repr::Top => None,
            Repr::Proper(v) => Some(v),
        }
    }

    /// Member intervals in natural order; empty for both `0` and `{∅}`.
    pub fn intervals(&self) -> &[Interval] {
        self.as_proper().unwrap_or(&[])
    }

    pub fn into_intervals(self) -> Option<Vec<Interval>> {
        match self.0 {
            Repr::Top => None,
            Repr::Proper(v) => Some(v),
        }
    }

    /// Number of members; the top element has one (the empty interval).
    pub fn len(&self) -> usize {
        match &self.0 {
            Repr::Top => 1,
            Repr::Proper(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_bottom()
    }

    pub fn contains(&self, iv: &Interval) -> bool {
        self.intervals()
            .binary_search_by_key(&iv.left(), Interval::left)
            .is_ok_and(|i| self.intervals()[i] == *iv)
    }

    /// Checks that every member lies inside `universe`.
    pub fn check_fits(&self, universe: Universe) -> Result<()> {
        universe.validate()?;
        // Normal form means the extremes of the first and last members bound the rest.
        match (self.intervals().first(), self.intervals().last()) {
            (Some(first), Some(last)) => {
                universe.check(*first)?;
                universe.check(*last)
            }
            _ => Ok(()),
        }
    }
}

impl Default for Antichain {
    fn default() -> Self {
        Antichain::bottom()
    }
}

pub(crate) fn is_normal_form(intervals: &[Interval]) -> bool {
    intervals
        .windows(2)
        .all(|w| w[0].left() < w[1].left() && w[0].right() < w[1].right())
}

/// Builds the antichain of inclusion-minimal intervals of the input.
///
/// Duplicates and nested intervals are allowed; the result is in normal form.
pub fn normalize<I: IntoIterator<Item = Interval>>(intervals: I) -> Antichain {
    let mut v: Vec<Interval> = intervals.into_iter().collect();
    v.sort_unstable_by(|a, b| a.left().cmp(&b.left()).then(b.right().cmp(&a.right())));
    Antichain::from_normalized_unchecked(minimal_of_sorted(&v))
}

/// Keeps the inclusion-minimal members of a sequence sorted by left extreme
/// ascending and, on ties, right extreme descending. Linear time.
pub(crate) fn minimal_of_sorted(sorted: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::with_capacity(sorted.len());
    let mut min_right = i64::MAX;
    // Scanning right to left, an interval is minimal iff it ends strictly
    // before every interval starting at or after it.
    for iv in sorted.iter().rev() {
        if iv.right() < min_right {
            out.push(*iv);
            min_right = iv.right();
        }
    }
    out.reverse();
    out
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Top => f.write_str("{∅}"),
            Repr::Proper(v) if v.is_empty() => f.write_str("0"),
            Repr::Proper(v) => {
                f.write_str("{")?;
                for (i, iv) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{iv}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Parses the display notation: `0`, `{∅}` (or `1`), or `{[l..r], [x], ...}`.
///
/// The listed intervals are normalized, so any finite set of intervals is accepted.
impl FromStr for Antichain {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "0" | "{}" => return Ok(Antichain::bottom()),
            "1" | "{∅}" => return Ok(Antichain::top()),
            _ => {}
        }
        let body = s
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| LatticeError::Parse(format!("expected braces around {s:?}")))?;
        let mut out = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let inner_end = rest
                .find(']')
                .ok_or_else(|| LatticeError::Parse(format!("unterminated interval in {s:?}")))?;
            let inner = rest[..inner_end]
                .trim()
                .strip_prefix('[')
                .ok_or_else(|| LatticeError::Parse(format!("expected '[' in {s:?}")))?;
            out.push(parse_interval(inner)?);
            rest = rest[inner_end + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        Ok(normalize(out))
    }
}

fn parse_interval(inner: &str) -> Result<Interval> {
    let num = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| LatticeError::Parse(format!("bad position {t:?}: {e}")))
    };
    match inner.split_once("..") {
        Some((l, r)) => Interval::new(num(l)?, num(r)?),
        None => Ok(Interval::point(num(inner)?)),
    }
}
