//! Brute-force reference implementations over `𝓔ₙ`, built from lower sets.
//!
//! Nothing here calls the closed-form operators. An antichain is identified
//! with its lower set: every interval of `{0..n-1}` (plus the empty interval)
//! containing one of its members. Order, meet and join become inclusion,
//! intersection and union of lower sets, and residuals are found by
//! exhaustive search over the whole lattice.

use crate::antichain::Antichain;
use crate::enumeration::enumerate_all;
use crate::error::{LatticeError, Result};
use crate::interval::{ExtendedInterval, Interval, Universe};
use crate::normal_form::CritSet;

/// Largest `n` for which [`oracle_residual`] will enumerate `𝓔ₙ`.
pub const RESIDUAL_MAX_N: usize = 10;

/// A set of intervals of `{0..n-1}`, possibly including `∅`, closed under
/// taking supersets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DownSet {
    n: usize,
    bits: Vec<u64>,
}

// Slot 0 is the empty interval; [l..r] lives at 1 + (intervals with smaller left) + (r - l).
fn slot(n: usize, l: usize, r: usize) -> usize {
    1 + l * n - l * l.saturating_sub(1) / 2 + (r - l)
}

fn slot_count(n: usize) -> usize {
    1 + n * (n + 1) / 2
}

impl DownSet {
    fn empty(n: usize) -> Self {
        DownSet { n, bits: vec![0; slot_count(n).div_ceil(64)] }
    }

    fn set(&mut self, s: usize) {
        self.bits[s / 64] |= 1 << (s % 64);
    }

    fn get(&self, s: usize) -> bool {
        self.bits[s / 64] >> (s % 64) & 1 == 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains_empty(&self) -> bool {
        self.get(0)
    }

    pub fn contains(&self, iv: &Interval) -> bool {
        let (l, r) = (iv.left(), iv.right());
        l >= 0 && (r as usize) < self.n && self.get(slot(self.n, l as usize, r as usize))
    }

    /// Nonempty members in (left, right) order.
    pub fn intervals(&self) -> Vec<Interval> {
        let n = self.n;
        (0..n)
            .flat_map(|l| (l..n).map(move |r| (l, r)))
            .filter(|&(l, r)| self.get(slot(n, l, r)))
            .map(|(l, r)| Interval::new(l as i64, r as i64).expect("l <= r"))
            .collect()
    }

    /// Number of members, counting `∅`.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &DownSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &DownSet) -> DownSet {
        DownSet { n: self.n, bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect() }
    }

    pub fn intersection(&self, other: &DownSet) -> DownSet {
        DownSet { n: self.n, bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect() }
    }

    /// The antichain generating this lower set: its inclusion-minimal members.
    pub fn generators(&self) -> Antichain {
        if self.contains_empty() {
            return Antichain::top();
        }
        let all = self.intervals();
        let minimal: Vec<Interval> = all
            .iter()
            .filter(|i| !all.iter().any(|j| j != *i && j.is_subset_of(i)))
            .copied()
            .collect();
        // (left, right) order on an antichain is the natural order.
        Antichain::from_normalized(minimal).expect("minimal intervals form an antichain")
    }
}

fn check_n(a: &Antichain, n: usize) -> Result<()> {
    a.check_fits(Universe::bounded(n as i64)?)
}

/// `↓A`: every interval of `{0..n-1}` containing some member of `A`.
pub fn downset(a: &Antichain, n: usize) -> Result<DownSet> {
    check_n(a, n)?;
    let mut d = DownSet::empty(n);
    match a.as_proper() {
        None => (0..slot_count(n)).for_each(|s| d.set(s)),
        Some(members) => {
            for iv in members {
                let (l, r) = (iv.left() as usize, iv.right() as usize);
                for l2 in 0..=l {
                    for r2 in r..n {
                        d.set(slot(n, l2, r2));
                    }
                }
            }
        }
    }
    Ok(d)
}

pub fn oracle_leq(a: &Antichain, b: &Antichain, n: usize) -> Result<bool> {
    Ok(downset(a, n)?.is_subset(&downset(b, n)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

pub fn oracle_bound(a: &Antichain, b: &Antichain, n: usize, kind: BoundKind) -> Result<Antichain> {
    let (da, db) = (downset(a, n)?, downset(b, n)?);
    Ok(match kind {
        BoundKind::Meet => da.intersection(&db),
        BoundKind::Join => da.union(&db),
    }
    .generators())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualKind {
    /// Relative pseudo-complement `A → B`.
    Implies,
    /// Pseudo-difference `A − B`.
    Minus,
}

/// Lower sets of every element of `𝓔ₙ`, for repeated residual searches.
#[derive(Debug, Clone)]
pub struct ResidualOracle {
    n: usize,
    candidates: Vec<DownSet>,
}

impl ResidualOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n > RESIDUAL_MAX_N {
            return Err(LatticeError::TooLarge { what: "oracle_residual", n, limit: RESIDUAL_MAX_N });
        }
        Universe::bounded(n as i64)?;
        let candidates = enumerate_all(n).map(|c| downset(&c, n)).collect::<Result<_>>()?;
        Ok(ResidualOracle { n, candidates })
    }

    /// `A → B` as the join of every `C` with `A ∧ C ≤ B`; `A − B` as the meet
    /// of every `C` with `A ≤ B ∨ C`.
    pub fn residual(&self, a: &Antichain, b: &Antichain, kind: ResidualKind) -> Result<Antichain> {
        let (da, db) = (downset(a, self.n)?, downset(b, self.n)?);
        let acc = match kind {
            ResidualKind::Implies => self
                .candidates
                .iter()
                .filter(|dc| da.intersection(dc).is_subset(&db))
                .fold(DownSet::empty(self.n), |acc, dc| acc.union(dc)),
            ResidualKind::Minus => {
                let mut full = DownSet::empty(self.n);
                (0..slot_count(self.n)).for_each(|s| full.set(s));
                self.candidates
                    .iter()
                    .filter(|dc| da.is_subset(&db.union(dc)))
                    .fold(full, |acc, dc| acc.intersection(dc))
            }
        };
        Ok(acc.generators())
    }
}

pub fn oracle_residual(a: &Antichain, b: &Antichain, n: usize, kind: ResidualKind) -> Result<Antichain> {
    ResidualOracle::new(n)?.residual(a, b, kind)
}

/// Critical intervals of `A` within `{0..n-1}` by direct scan: the
/// inclusion-maximal intervals (or `∅`) containing no member of `A`.
pub fn oracle_crit(a: &Antichain, n: usize) -> Result<CritSet> {
    check_n(a, n)?;
    let contains_member = |outer: Option<(usize, usize)>| match (outer, a.as_proper()) {
        // Every interval, ∅ included, contains the empty member of {∅}.
        (_, None) => true,
        (None, Some(_)) => false,
        (Some((l, r)), Some(ms)) => ms
            .iter()
            .any(|m| l as i64 <= m.left() && m.right() <= r as i64),
    };
    let mut free: Vec<Option<(usize, usize)>> = vec![None];
    free.extend((0..n).flat_map(|l| (l..n).map(move |r| Some((l, r)))));
    free.retain(|&x| !contains_member(x));
    let inside = |x: Option<(usize, usize)>, y: Option<(usize, usize)>| match (x, y) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((l, r)), Some((l2, r2))) => l2 <= l && r <= r2,
    };
    let maximal: Vec<ExtendedInterval> = free
        .iter()
        .filter(|&&x| !free.iter().any(|&y| y != x && inside(x, y)))
        .map(|&x| match x {
            None => ExtendedInterval::Empty,
            Some((l, r)) => ExtendedInterval::finite(l as i64, r as i64).expect("l <= r"),
        })
        .collect();
    CritSet::new(maximal)
}

/// Number of join-irreducibles below `A`, i.e. `|↓A|` with `∅` counted.
pub fn oracle_rank(a: &Antichain, n: usize) -> Result<u64> {
    Ok(downset(a, n)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ac(s: &str) -> Antichain {
        s.parse().unwrap()
    }

    #[test]
    fn slots_are_a_bijection() {
        for n in 1..12 {
            let mut seen: Vec<usize> = (0..n).flat_map(|l| (l..n).map(move |r| slot(n, l, r))).collect();
            seen.sort_unstable();
            assert_eq!(seen, (1..slot_count(n)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn downset_examples() {
        assert!(downset(&Antichain::bottom(), 4).unwrap().is_empty());
        assert_eq!(downset(&ac("{[0]}"), 2).unwrap().intervals(), ac("{[0..0]}").intervals().iter().copied().chain([Interval::new(0, 1).unwrap()]).collect::<Vec<_>>());
        for n in 1..8 {
            assert_eq!(downset(&Antichain::coatom(n as i64), n).unwrap().len(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn leq_examples() {
        assert!(oracle_leq(&Antichain::bottom(), &ac("{[2]}"), 3).unwrap());
        assert!(oracle_leq(&ac("{[1..3]}"), &ac("{[2..2]}"), 5).unwrap());
        assert!(!oracle_leq(&Antichain::top(), &Antichain::coatom(4), 4).unwrap());
    }

    #[test]
    fn bound_examples() {
        let a = ac("{[0],[2..3]}");
        assert_eq!(oracle_bound(&ac("{[0]}"), &ac("{[2]}"), 3, BoundKind::Meet).unwrap(), ac("{[0..2]}"));
        assert_eq!(oracle_bound(&a, &Antichain::bottom(), 4, BoundKind::Join).unwrap(), a);
        assert_eq!(oracle_bound(&a, &Antichain::top(), 4, BoundKind::Meet).unwrap(), a);
    }

    #[test]
    fn residual_examples() {
        let b = ac("{[1..2]}");
        assert_eq!(oracle_residual(&Antichain::top(), &b, 4, ResidualKind::Implies).unwrap(), b);
        assert_eq!(
            oracle_residual(&ac("{[5]}"), &ac("{[5..6]}"), 10, ResidualKind::Implies).unwrap(),
            ac("{[6],[7],[8],[9]}")
        );
        assert!(oracle_residual(&b, &b, 4, ResidualKind::Minus).unwrap().is_bottom());
        assert!(oracle_residual(&b, &b, 11, ResidualKind::Minus).is_err());
    }

    #[test]
    fn crit_examples() {
        assert_eq!(oracle_crit(&Antichain::bottom(), 5).unwrap().as_slice(), &[ExtendedInterval::finite(0, 4).unwrap()]);
        assert_eq!(oracle_crit(&Antichain::coatom(5), 5).unwrap().as_slice(), &[ExtendedInterval::Empty]);
        let fin = |l, r| ExtendedInterval::finite(l, r).unwrap();
        assert_eq!(oracle_crit(&ac("{[2],[5]}"), 8).unwrap().as_slice(), &[fin(0, 1), fin(3, 4), fin(6, 7)]);
        assert!(oracle_crit(&Antichain::top(), 3).unwrap().is_empty());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(oracle_rank(&ac("{[1..2]}"), 4).unwrap(), 4);
        assert_eq!(oracle_rank(&Antichain::bottom(), 6).unwrap(), 0);
        assert_eq!(oracle_rank(&Antichain::coatom(4), 4).unwrap(), 10);
        assert_eq!(oracle_rank(&Antichain::top(), 4).unwrap(), 11);
    }
}
