//! Rank function of the finite lattices `𝓔ₙ`.

use crate::antichain::Antichain;
use crate::error::{LatticeError, Result};
use crate::interval::Universe;

/// Rank of `A` in `𝓔ₙ`, i.e. the number of join-irreducibles below it.
///
/// `{[l..r]}` has rank `(1+l)(n-r)`; a longer antichain telescopes over
/// consecutive left extremes. The top element has rank `1 + n(n+1)/2`.
pub fn rank(a: &Antichain, n: i64) -> Result<u64> {
    let universe = Universe::bounded(n)?;
    a.check_fits(universe)?;
    let n = i128::from(n);
    let total = match a.as_proper() {
        None => 1 + n * (n + 1) / 2,
        Some(members) => {
            let mut prev_left = -1i128;
            members
                .iter()
                .map(|iv| {
                    let (l, r) = (i128::from(iv.left()), i128::from(iv.right()));
                    let term = (l - prev_left) * (n - r);
                    prev_left = l;
                    term
                })
                .sum()
        }
    };
    u64::try_from(total).map_err(|_| LatticeError::Overflow("rank"))
}

/// Height of `𝓔ₙ`, counted in elements of a maximal chain: `2 + n(n+1)/2`.
pub fn height(n: i64) -> Result<u64> {
    rank(&Antichain::top(), n).map(|r| r + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_interval() {
        assert_eq!(rank(&"{[1..2]}".parse().unwrap(), 4).unwrap(), 4);
    }

    #[test]
    fn bottom_coatom_top() {
        assert_eq!(rank(&Antichain::bottom(), 7).unwrap(), 0);
        assert_eq!(rank(&Antichain::coatom(4), 4).unwrap(), 10);
        assert_eq!(rank(&Antichain::top(), 4).unwrap(), 11);
        assert_eq!(height(4).unwrap(), 12);
    }

    #[test]
    fn atom_has_rank_one() {
        for n in 1..10 {
            assert_eq!(rank(&Antichain::atom(n).unwrap(), n).unwrap(), 1);
        }
    }

    #[test]
    fn rejects_out_of_universe() {
        assert!(rank(&"{[1..4]}".parse().unwrap(), 4).is_err());
        assert!(rank(&Antichain::bottom(), 0).is_err());
    }
}
