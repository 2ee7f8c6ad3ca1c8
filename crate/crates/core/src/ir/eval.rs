use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::index::{Document, PositionalIndex};
use super::query::{parse_query, QueryAst};
use super::IrError;
use crate::antichain::Antichain;
use crate::interval::Interval;
use crate::ops;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub doc: String,
    pub score: BigRational,
    pub snippets: Vec<Interval>,
}

/// Semantics of `ast` in document `doc`.
pub fn evaluate(ast: &QueryAst, index: &PositionalIndex, doc: &str) -> Result<Antichain, IrError> {
    let d = index.get(doc).ok_or_else(|| IrError::UnknownDoc(doc.to_string()))?;
    Ok(eval_doc(ast, d))
}

fn eval_doc(ast: &QueryAst, d: &Document) -> Antichain {
    let fold = |xs: &[QueryAst], op: fn(&Antichain, &Antichain) -> Antichain| {
        let mut it = xs.iter().map(|x| eval_doc(x, d));
        let first = it.next().unwrap_or_default();
        it.fold(first, |acc, x| op(&acc, &x))
    };
    match ast {
        QueryAst::Term(t) => Antichain::points(d.positions(t).iter().map(|&p| p as i64)),
        QueryAst::Or(xs) => fold(xs, ops::join),
        QueryAst::And(xs) => fold(xs, ops::meet),
        QueryAst::OrderedMeet(a, b) => ops::ordered_meet(&eval_doc(a, d), &eval_doc(b, d)),
        QueryAst::Block(a, b) => ops::block(&eval_doc(a, d), &eval_doc(b, d)),
        QueryAst::Containment(a, b, m) => ops::filter_containment(&eval_doc(a, d), &eval_doc(b, d), *m),
        QueryAst::StrictContainment(a, b, m) => ops::strict_containment(&eval_doc(a, d), &eval_doc(b, d), *m),
        QueryAst::Minus(a, b) => ops::pseudo_difference(&eval_doc(a, d), &eval_doc(b, d)),
        QueryAst::Within(a, k) => {
            let inner = eval_doc(a, d);
            match inner.into_intervals() {
                None => Antichain::top(),
                Some(v) => Antichain::from_normalized(v.into_iter().filter(|iv| iv.len() <= *k).collect())
                    .expect("a subset of an antichain is an antichain"),
            }
        }
    }
}

/// Up to `k` pairwise disjoint members of `a`, chosen greedily by increasing
/// length (ties by left extreme) and returned in left-extreme order.
pub fn snippets(a: &Antichain, k: usize) -> Vec<Interval> {
    let mut by_len: Vec<Interval> = a.intervals().to_vec();
    by_len.sort_by_key(|iv| (iv.len(), iv.left()));
    let mut chosen: Vec<Interval> = Vec::with_capacity(k.min(by_len.len()));
    for iv in by_len {
        if chosen.len() == k {
            break;
        }
        if chosen.iter().all(|c| !c.overlaps(&iv)) {
            chosen.push(iv);
        }
    }
    chosen.sort_by_key(Interval::left);
    chosen
}

/// `Σ 1/|I|` over the members of `a`, exactly.
pub fn score(a: &Antichain) -> Result<BigRational, IrError> {
    let members = a.as_proper().ok_or(IrError::Unscoreable)?;
    Ok(members
        .iter()
        .map(|iv| BigRational::new(BigInt::from(1), BigInt::from(iv.len())))
        .fold(BigRational::zero(), |acc, x| acc + x))
}

/// Decimal rendering with `places` digits, rounding half away from zero.
pub fn format_score(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = x.abs() * BigRational::from_integer(scale);
    let rounded = (scaled + BigRational::new(BigInt::from(1), BigInt::from(2))).floor().to_integer();
    let digits = rounded.to_string();
    let places = places as usize;
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    let sign = if x.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Runs `q` on every document, drops documents where it evaluates to `0`,
/// and ranks the rest by score (descending, ties by document id).
pub fn search(index: &PositionalIndex, q: &str, k: usize) -> Result<Vec<SearchResult>, IrError> {
    let ast = parse_query(q)?;
    let mut results = Vec::new();
    for (id, d) in index.docs() {
        let a = eval_doc(&ast, d);
        if a.is_bottom() {
            continue;
        }
        results.push(SearchResult { doc: id.to_string(), score: score(&a)?, snippets: snippets(&a, k) });
    }
    results.sort_by(|x, y| y.score.cmp(&x.score).then_with(|| x.doc.cmp(&y.doc)));
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::build_index;

    fn ac(s: &str) -> Antichain {
        s.parse().unwrap()
    }

    #[test]
    fn snippet_greedy() {
        assert_eq!(snippets(&ac("{[1..1],[3..9]}"), 2), ac("{[1..1],[3..9]}").intervals());
        assert!(snippets(&ac("{[1..1],[3..9]}"), 0).is_empty());
        assert_eq!(snippets(&ac("{[0..2],[1..3],[3..4]}"), 5), ac("{[0..2],[3..4]}").intervals());
        assert!(snippets(&Antichain::top(), 3).is_empty());
    }

    #[test]
    fn scores() {
        assert_eq!(score(&ac("{[2],[17],[33]}")).unwrap(), BigRational::from_integer(3.into()));
        assert!(score(&Antichain::bottom()).unwrap().is_zero());
        assert!(matches!(score(&Antichain::top()), Err(IrError::Unscoreable)));
    }

    #[test]
    fn score_formatting() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(format_score(&r(177, 50), 4), "3.5400");
        assert_eq!(format_score(&r(1, 3), 4), "0.3333");
        assert_eq!(format_score(&r(2, 3), 4), "0.6667");
        assert_eq!(format_score(&r(1, 20000), 4), "0.0001");
        assert_eq!(format_score(&r(0, 1), 4), "0.0000");
        assert_eq!(format_score(&r(7, 2), 0), "4");
    }

    #[test]
    fn unknown_document() {
        let idx = build_index([("a", "x")]).unwrap();
        assert!(matches!(evaluate(&QueryAst::Term("x".into()), &idx, "b"), Err(IrError::UnknownDoc(_))));
    }

    #[test]
    fn within_filters_by_length() {
        let idx = build_index([("d", "a x x b a b")]).unwrap();
        let q = parse_query("(a AND b) WITHIN 2").unwrap();
        assert_eq!(evaluate(&q, &idx, "d").unwrap(), ac("{[3..4],[4..5]}"));
        let q = parse_query("a < b").unwrap();
        assert_eq!(evaluate(&q, &idx, "d").unwrap(), ac("{[0..3],[4..5]}"));
    }
}
