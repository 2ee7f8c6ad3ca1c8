//! Lattice and derived operators on antichains, as linear-time merges over
//! normal forms.
//!
//! The top element `{∅}` is treated as the set holding only the empty
//! interval, which is contained in every interval.

use std::cmp::Ordering;

use crate::antichain::Antichain;
use crate::interval::Interval;

/// Which members of the left operand a containment filter keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContainmentMode {
    /// `A ⊵ B`: members containing some member of `B`.
    Containing,
    /// `A ⋭ B`: members containing no member of `B`.
    NotContaining,
    /// `A ⊴ B`: members contained in some member of `B`.
    ContainedIn,
    /// `A ⋬ B`: members contained in no member of `B`.
    NotContainedIn,
}

impl ContainmentMode {
    pub const ALL: [ContainmentMode; 4] = [
        ContainmentMode::Containing,
        ContainmentMode::NotContaining,
        ContainmentMode::ContainedIn,
        ContainmentMode::NotContainedIn,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrictMode {
    /// `A ▷ B`: members strictly containing some member of `B`.
    StrictlyContaining,
    /// `A ⋫ B`: members strictly containing no member of `B`.
    NotStrictlyContaining,
}

/// Cursor answering "does some member of `b` fit inside `iv`?" for a
/// sequence of queries with nondecreasing left extremes.
pub(crate) struct SubsetProbe<'a> {
    b: &'a [Interval],
    pos: usize,
}

impl<'a> SubsetProbe<'a> {
    pub(crate) fn new(b: &'a [Interval]) -> Self {
        SubsetProbe { b, pos: 0 }
    }

    #[inline]
    pub(crate) fn has_subset_of(&mut self, iv: &Interval) -> bool {
        // The first member starting at or after iv.left has the smallest right extreme
        // among all candidates.
        while self.pos < self.b.len() && self.b[self.pos].left() < iv.left() {
            self.pos += 1;
        }
        self.b.get(self.pos).is_some_and(|j| j.right() <= iv.right())
    }
}

/// Cursor answering "does some member of `b` contain `iv`?" for queries with
/// nondecreasing left extremes.
struct SupersetProbe<'a> {
    b: &'a [Interval],
    pos: usize,
}

impl<'a> SupersetProbe<'a> {
    fn new(b: &'a [Interval]) -> Self {
        SupersetProbe { b, pos: 0 }
    }

    #[inline]
    fn has_superset_of(&mut self, iv: &Interval) -> bool {
        // The last member starting at or before iv.left reaches furthest right.
        while self.pos + 1 < self.b.len() && self.b[self.pos + 1].left() <= iv.left() {
            self.pos += 1;
        }
        self.b
            .get(self.pos)
            .is_some_and(|j| j.left() <= iv.left() && iv.right() <= j.right())
    }
}

/// `A ≤ B`: every member of `A` contains some member of `B`.
pub fn leq(a: &Antichain, b: &Antichain) -> bool {
    match (a.as_proper(), b.as_proper()) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(a), Some(b)) => {
            let mut probe = SubsetProbe::new(b);
            a.iter().all(|iv| probe.has_subset_of(iv))
        }
    }
}

/// Order used before minimization: left ascending, right descending.
#[inline]
fn merge_order(x: &Interval, y: &Interval) -> Ordering {
    x.left().cmp(&y.left()).then(y.right().cmp(&x.right()))
}

/// Appends `iv`, arriving in merge order, and keeps `out` an antichain: any
/// earlier member ending at or after `iv` contains it and is dropped.
#[inline]
fn push_minimal(out: &mut Vec<Interval>, iv: Interval) {
    while out.last().is_some_and(|top| top.right() >= iv.right()) {
        out.pop();
    }
    out.push(iv);
}

/// Minimal members of the union of two streams, each already in merge order.
fn merge_minimal(
    a: impl Iterator<Item = Interval>,
    b: impl Iterator<Item = Interval>,
    capacity: usize,
) -> Vec<Interval> {
    let mut out = Vec::with_capacity(capacity);
    let (mut a, mut b) = (a.peekable(), b.peekable());
    loop {
        let next = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) if merge_order(x, y) != Ordering::Greater => a.next(),
            (Some(_), Some(_)) => b.next(),
            (Some(_), None) => a.next(),
            (None, Some(_)) => b.next(),
            (None, None) => break,
        };
        push_minimal(&mut out, next.unwrap());
    }
    out
}

/// Least upper bound: the minimal members of `A ∪ B`.
pub fn join(a: &Antichain, b: &Antichain) -> Antichain {
    match (a.as_proper(), b.as_proper()) {
        (None, _) | (_, None) => Antichain::top(),
        (Some(x), Some(y)) => Antichain::from_normalized_unchecked(merge_minimal(
            x.iter().copied(),
            y.iter().copied(),
            x.len() + y.len(),
        )),
    }
}

/// For every `x` in `lead`, the span of `x` with the member of `other` that
/// starts at or after `x` and ends earliest.
fn left_anchored_spans<'a>(lead: &'a [Interval], other: &'a [Interval]) -> impl Iterator<Item = Interval> + 'a {
    let mut pos = 0;
    lead.iter().map_while(move |x| {
        while pos < other.len() && other[pos].left() < x.left() {
            pos += 1;
        }
        other.get(pos).map(|y| Interval::new_unchecked(x.left(), x.right().max(y.right())))
    })
}

/// Greatest lower bound: the minimal spans of one member from each side.
pub fn meet(a: &Antichain, b: &Antichain) -> Antichain {
    match (a.as_proper(), b.as_proper()) {
        (None, _) => b.clone(),
        (_, None) => a.clone(),
        (Some(x), Some(y)) => {
            // Every minimal span is anchored at the left extreme of one of its two
            // intervals, paired with the earliest-ending partner from the other side.
            let spans = merge_minimal(left_anchored_spans(x, y), left_anchored_spans(y, x), x.len() + y.len());
            Antichain::from_normalized_unchecked(spans)
        }
    }
}

/// Brouwerian pseudo-difference `A − B`: members of `A` containing no member of `B`.
pub fn pseudo_difference(a: &Antichain, b: &Antichain) -> Antichain {
    match (a.as_proper(), b.as_proper()) {
        (_, None) => Antichain::bottom(),
        (None, Some(_)) => Antichain::top(),
        (Some(x), Some(y)) => {
            let mut probe = SubsetProbe::new(y);
            let mut out = Vec::with_capacity(x.len());
            out.extend(x.iter().copied().filter(|iv| !probe.has_subset_of(iv)));
            Antichain::from_normalized_unchecked(out)
        }
    }
}

/// Symmetric pseudo-difference `(A − B) ∨ (B − A)`.
pub fn sym_difference(a: &Antichain, b: &Antichain) -> Antichain {
    join(&pseudo_difference(a, b), &pseudo_difference(b, a))
}

/// Plain set intersection of the two antichains.
pub fn intersect(a: &Antichain, b: &Antichain) -> Antichain {
    match (a.as_proper(), b.as_proper()) {
        (None, None) => Antichain::top(),
        (None, _) | (_, None) => Antichain::bottom(),
        (Some(x), Some(y)) => {
            let mut out = Vec::new();
            let (mut i, mut j) = (0, 0);
            while i < x.len() && j < y.len() {
                match x[i].left().cmp(&y[j].left()) {
                    Ordering::Less => i += 1,
                    Ordering::Greater => j += 1,
                    Ordering::Equal => {
                        if x[i] == y[j] {
                            out.push(x[i]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            Antichain::from_normalized_unchecked(out)
        }
    }
}

/// Keeps the members of `A` selected by `mode` relative to `B`.
pub fn filter_containment(a: &Antichain, b: &Antichain, mode: ContainmentMode) -> Antichain {
    use ContainmentMode::*;
    let keep_hits = matches!(mode, Containing | ContainedIn);
    let by_subset = matches!(mode, Containing | NotContaining);
    let select = |hit: bool, whole: &Antichain| {
        if hit == keep_hits {
            whole.clone()
        } else {
            Antichain::bottom()
        }
    };
    match (a.as_proper(), b.as_proper()) {
        // A = {∅}: nothing but ∅ lies inside ∅, and ∅ lies inside anything.
        (None, _) => select(if by_subset { b.is_top() } else { !b.is_bottom() }, a),
        // B = {∅}: ∅ lies inside every member of A, and contains none of them.
        (Some(_), None) => select(by_subset, a),
        (Some(x), Some(y)) => {
            let kept: Vec<Interval> = if by_subset {
                let mut probe = SubsetProbe::new(y);
                x.iter().copied().filter(|iv| probe.has_subset_of(iv) == keep_hits).collect()
            } else {
                let mut probe = SupersetProbe::new(y);
                x.iter().copied().filter(|iv| probe.has_superset_of(iv) == keep_hits).collect()
            };
            Antichain::from_normalized_unchecked(kept)
        }
    }
}

/// Strict containment filters, expressed through pseudo-difference:
/// `A ⋫ B = A − (B − A)` and `A ▷ B = A − (A − (B − A))`.
pub fn strict_containment(a: &Antichain, b: &Antichain, mode: StrictMode) -> Antichain {
    let not_strict = pseudo_difference(a, &pseudo_difference(b, a));
    match mode {
        StrictMode::NotStrictlyContaining => not_strict,
        StrictMode::StrictlyContaining => pseudo_difference(a, &not_strict),
    }
}

/// Ordered non-overlapping meet `A < B`: minimal spans of a member of `A`
/// followed, without overlap, by a member of `B`. `{∅}` is a two-sided identity.
pub fn ordered_meet(a: &Antichain, b: &Antichain) -> Antichain {
    let (x, y) = match (a.as_proper(), b.as_proper()) {
        (None, _) => return b.clone(),
        (_, None) => return a.clone(),
        (Some(x), Some(y)) => (x, y),
    };
    let mut out: Vec<Interval> = Vec::new();
    // For each J, the best predecessor is the last I ending before J starts.
    let mut pos = 0;
    for j in y {
        while pos < x.len() && x[pos].right() < j.left() {
            pos += 1;
        }
        if pos == 0 {
            continue;
        }
        let span = Interval::new_unchecked(x[pos - 1].left(), j.right());
        // Left extremes are nondecreasing and right extremes increasing, so only
        // an equal left extreme can break minimality; the earlier span wins.
        if out.last().is_none_or(|last| last.left() < span.left()) {
            out.push(span);
        }
    }
    Antichain::from_normalized_unchecked(out)
}

/// Block operator `A □ B`: spans of a member of `A` immediately followed by a
/// member of `B`. `{∅}` is a two-sided identity.
pub fn block(a: &Antichain, b: &Antichain) -> Antichain {
    let (x, y) = match (a.as_proper(), b.as_proper()) {
        (None, _) => return b.clone(),
        (_, None) => return a.clone(),
        (Some(x), Some(y)) => (x, y),
    };
    let mut out = Vec::new();
    let mut pos = 0;
    for j in y {
        while pos < x.len() && x[pos].right() + 1 < j.left() {
            pos += 1;
        }
        if let Some(i) = x.get(pos).filter(|i| i.right() + 1 == j.left()) {
            out.push(Interval::new_unchecked(i.left(), j.right()));
        }
    }
    Antichain::from_normalized_unchecked(out)
}
