mod common;

use common::{ac, all, finite_antichain, minimal};
use mininterval::ContainmentMode::{self, *};
use mininterval::StrictMode::*;
use mininterval::{
    block, filter_containment as filt, join, meet, ordered_meet, pseudo_difference as minus, strict_containment,
    Antichain, Interval,
};
use proptest::prelude::*;

fn direct(a: &Antichain, b: &Antichain, keep: impl Fn(&Interval, &Interval) -> bool, hit: bool) -> Vec<Interval> {
    a.intervals().iter().copied().filter(|i| b.intervals().iter().any(|j| keep(i, j)) == hit).collect()
}

fn naive_ordered(a: &Antichain, b: &Antichain) -> Antichain {
    match (a.as_proper(), b.as_proper()) {
        (None, _) => b.clone(),
        (_, None) => a.clone(),
        (Some(x), Some(y)) => minimal(
            x.iter()
                .flat_map(|i| y.iter().filter(|j| i.right() < j.left()).map(move |j| Interval::new(i.left(), j.right()).unwrap()))
                .collect(),
        ),
    }
}

fn naive_block(a: &Antichain, b: &Antichain) -> Antichain {
    match (a.as_proper(), b.as_proper()) {
        (None, _) => b.clone(),
        (_, None) => a.clone(),
        (Some(x), Some(y)) => minimal(
            x.iter()
                .flat_map(|i| y.iter().filter(|j| i.right() + 1 == j.left()).map(move |j| Interval::new(i.left(), j.right()).unwrap()))
                .collect(),
        ),
    }
}

#[test]
fn examples() {
    assert_eq!(filt(&ac("{[0..1],[3]}"), &ac("{[3..4]}"), ContainedIn), ac("{[3]}"));
    assert_eq!(filt(&ac("{[0..5]}"), &ac("{[1..2]}"), Containing), ac("{[0..5]}"));
    assert_eq!(filt(&ac("{[0..1],[5]}"), &ac("{[1]}"), NotContaining), ac("{[5]}"));
    assert_eq!(strict_containment(&ac("{[0..2]}"), &ac("{[1]}"), NotStrictlyContaining), Antichain::bottom());
    assert_eq!(strict_containment(&ac("{[0..2]}"), &ac("{[1]}"), StrictlyContaining), ac("{[0..2]}"));
    let a = ac("{[0..2],[4..6]}");
    assert_eq!(strict_containment(&a, &a, NotStrictlyContaining), a);

    let pease = Antichain::points([0, 3, 6, 31, 34]);
    let porridge = Antichain::points([1, 4, 7, 32, 35]);
    let cold = Antichain::points([5, 21, 36]);
    assert_eq!(ordered_meet(&ac("{[0],[4]}"), &ac("{[2]}")), ac("{[0..2]}"));
    assert_eq!(ordered_meet(&pease, &cold), ac("{[3..5],[6..21],[34..36]}"));
    assert_eq!(ordered_meet(&pease, &Antichain::top()), pease);
    assert_eq!(block(&ac("{[0..1]}"), &ac("{[2..3]}")), ac("{[0..3]}"));
    assert_eq!(block(&ac("{[0]}"), &ac("{[2]}")), Antichain::bottom());
    assert_eq!(block(&pease, &porridge), ac("{[0..1],[3..4],[6..7],[31..32],[34..35]}"));
}

#[test]
fn filters_match_definitions_e5() {
    for a in all(5).iter().filter(|a| !a.is_top()) {
        for b in all(5).iter().filter(|b| !b.is_top()) {
            let sub = |i: &Interval, j: &Interval| j.is_subset_of(i);
            let sup = |i: &Interval, j: &Interval| i.is_subset_of(j);
            let strict = |i: &Interval, j: &Interval| j.is_subset_of(i) && i != j;
            assert_eq!(filt(a, b, Containing).intervals(), direct(a, b, sub, true));
            assert_eq!(filt(a, b, NotContaining).intervals(), direct(a, b, sub, false));
            assert_eq!(filt(a, b, ContainedIn).intervals(), direct(a, b, sup, true));
            assert_eq!(filt(a, b, NotContainedIn).intervals(), direct(a, b, sup, false));
            assert_eq!(strict_containment(a, b, StrictlyContaining).intervals(), direct(a, b, strict, true));
            assert_eq!(strict_containment(a, b, NotStrictlyContaining).intervals(), direct(a, b, strict, false));
        }
    }
}

#[test]
fn filters_through_pseudo_difference_e4() {
    let e = all(4);
    for a in &e {
        for b in &e {
            assert_eq!(filt(a, b, NotContaining), minus(a, b), "{a} {b}");
            assert_eq!(filt(a, b, Containing), minus(a, &minus(a, b)), "{a} {b}");
        }
    }
}

#[test]
fn permutation_law_e4() {
    let e = all(4);
    for a in &e {
        for b in &e {
            for c in &e {
                for m1 in ContainmentMode::ALL {
                    for m2 in ContainmentMode::ALL {
                        assert_eq!(filt(&filt(a, b, m1), c, m2), filt(&filt(a, c, m2), b, m1));
                    }
                }
            }
        }
    }
}

#[test]
fn quasi_distributivity_and_distributivity_e4() {
    let e = all(4);
    for a in &e {
        for b in &e {
            for c in &e {
                let (bm, bj) = (meet(b, c), join(b, c));
                assert_eq!(filt(a, &bm, NotContaining), join(&filt(a, b, NotContaining), &filt(a, c, NotContaining)));
                assert_eq!(
                    filt(a, &bj, NotContaining),
                    mininterval::intersect(&filt(a, b, NotContaining), &filt(a, c, NotContaining))
                );
                assert_eq!(
                    filt(a, &bm, Containing),
                    mininterval::intersect(&filt(a, b, Containing), &filt(a, c, Containing))
                );
                for m in [ContainedIn, NotContaining] {
                    assert_eq!(filt(&join(a, b), c, m), join(&filt(a, c, m), &filt(b, c, m)), "{m:?} {a} {b} {c}");
                }
                assert_eq!(filt(a, &bj, Containing), join(&filt(a, b, Containing), &filt(a, c, Containing)));
            }
        }
    }
}

#[test]
fn strict_split_of_join_e4() {
    let e = all(4);
    for a in &e {
        for b in &e {
            let x = strict_containment(a, b, NotStrictlyContaining);
            let y = strict_containment(b, a, NotStrictlyContaining);
            if a.is_top() || b.is_top() {
                assert!(join(a, b).is_top());
                continue;
            }
            let mut union: Vec<Interval> = x.intervals().iter().chain(y.intervals()).copied().collect();
            union.sort_by_key(|i| (i.left(), i.right()));
            union.dedup();
            assert_eq!(join(a, b).intervals(), union.as_slice(), "{a} {b}");
            assert_eq!(join(a, b), join(&x, &y));
        }
    }
}

#[test]
fn ordered_meet_distributes_over_join_e4() {
    let e = all(4);
    for a in &e {
        for b in &e {
            for c in &e {
                assert_eq!(ordered_meet(&join(a, b), c), join(&ordered_meet(a, c), &ordered_meet(b, c)));
                assert_eq!(ordered_meet(a, &join(b, c)), join(&ordered_meet(a, b), &ordered_meet(a, c)));
            }
        }
    }
}

#[test]
fn ordered_and_block_match_definitions_e5() {
    let e = all(5);
    for a in &e {
        for b in &e {
            assert_eq!(ordered_meet(a, b), naive_ordered(a, b), "{a} < {b}");
            assert_eq!(block(a, b), naive_block(a, b), "{a} □ {b}");
        }
    }
}

// Each entry: (operation, left side, right side); the two must differ.
type Law = fn(&Antichain, &Antichain, &Antichain, ContainmentMode) -> (Antichain, Antichain);

fn right_join(a: &Antichain, b: &Antichain, c: &Antichain, m: ContainmentMode) -> (Antichain, Antichain) {
    (filt(a, &join(b, c), m), join(&filt(a, b, m), &filt(a, c, m)))
}

fn left_join(a: &Antichain, b: &Antichain, c: &Antichain, m: ContainmentMode) -> (Antichain, Antichain) {
    (filt(&join(a, b), c, m), join(&filt(a, c, m), &filt(b, c, m)))
}

fn right_meet(a: &Antichain, b: &Antichain, c: &Antichain, m: ContainmentMode) -> (Antichain, Antichain) {
    (filt(a, &meet(b, c), m), meet(&filt(a, b, m), &filt(a, c, m)))
}

fn left_meet(a: &Antichain, b: &Antichain, c: &Antichain, m: ContainmentMode) -> (Antichain, Antichain) {
    (filt(&meet(a, b), c, m), meet(&filt(a, c, m), &filt(b, c, m)))
}

#[test]
fn distributivity_counterexample_tables() {
    // a = 0, b = 2, c = 1 inside {0, 1, 2}.
    let (a, ab, b, c, a_b) = (ac("{[0]}"), ac("{[0..2]}"), ac("{[2]}"), ac("{[1]}"), ac("{[0],[2]}"));
    let rows: Vec<(&str, Law, ContainmentMode, [&Antichain; 3])> = vec![
        ("not containing, right over join", right_join, NotContaining, [&a, &ab, &a]),
        ("containing, left over join", left_join, Containing, [&ab, &a, &ab]),
        ("not contained in, right over join", right_join, NotContainedIn, [&a, &a, &b]),
        ("not contained in, left over join", left_join, NotContainedIn, [&ab, &a, &a]),
        ("contained in, right over join", right_join, ContainedIn, [&ab, &ab, &a]),
        ("not containing, right over meet", right_meet, NotContaining, [&a_b, &a, &b]),
        ("not containing, left over meet", left_meet, NotContaining, [&a, &b, &c]),
        ("containing, right over meet", right_meet, Containing, [&a_b, &a, &b]),
        ("containing, left over meet", left_meet, Containing, [&a, &b, &c]),
        ("not contained in, right over meet", right_meet, NotContainedIn, [&ab, &a, &b]),
        ("not contained in, left over meet", left_meet, NotContainedIn, [&a, &b, &a_b]),
        ("contained in, right over meet", right_meet, ContainedIn, [&ab, &a, &b]),
        ("contained in, left over meet", left_meet, ContainedIn, [&a, &b, &a_b]),
    ];
    for (name, law, mode, [x, y, z]) in rows {
        let (lhs, rhs) = law(x, y, z, mode);
        assert_ne!(lhs, rhs, "{name}: A={x} B={y} C={z}");
    }
}

#[test]
fn block_is_not_distributive() {
    let (a, b, c) = (ac("{[0..1]}"), ac("{[0]}"), ac("{[2]}"));
    assert_ne!(block(&join(&a, &b), &c), join(&block(&a, &c), &block(&b, &c)));
    let (a, b, c) = (ac("{[0]}"), ac("{[1..2]}"), ac("{[2]}"));
    assert_ne!(block(&a, &join(&b, &c)), join(&block(&a, &b), &block(&a, &c)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn ordered_operators_are_associative(a in finite_antichain(), b in finite_antichain(), c in finite_antichain()) {
        prop_assert_eq!(ordered_meet(&ordered_meet(&a, &b), &c), ordered_meet(&a, &ordered_meet(&b, &c)));
        prop_assert_eq!(block(&block(&a, &b), &c), block(&a, &block(&b, &c)));
    }

    #[test]
    fn ordered_operators_match_definitions(a in finite_antichain(), b in finite_antichain()) {
        prop_assert_eq!(ordered_meet(&a, &b), naive_ordered(&a, &b));
        prop_assert_eq!(block(&a, &b), naive_block(&a, &b));
    }

    #[test]
    fn containment_laws_unbounded(a in finite_antichain(), b in finite_antichain(), c in finite_antichain()) {
        prop_assert_eq!(filt(&a, &b, NotContaining), minus(&a, &b));
        prop_assert_eq!(filt(&a, &b, Containing), minus(&a, &minus(&a, &b)));
        for m1 in ContainmentMode::ALL {
            for m2 in ContainmentMode::ALL {
                prop_assert_eq!(filt(&filt(&a, &b, m1), &c, m2), filt(&filt(&a, &c, m2), &b, m1));
            }
        }
    }
}
