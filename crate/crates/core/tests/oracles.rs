//! Engine and analysis results checked against slow, independent oracles.

use std::collections::{BTreeSet, HashMap};

use comply_core::arith::{self, hypothesis_grid, BlockPrediction, Progression};
use comply_core::{
    build_table, closed_form_base, closed_form_complement, detect_period, legal_moves, options,
    predict_block_value, ConstraintSide, EngineConfig, Position, RuleSet,
};
use proptest::prelude::*;

/// Grundy value by top-down recursion over `options`, with a BTreeSet mex.
fn naive_grundy(rules: &RuleSet, pos: Position, memo: &mut HashMap<Position, u32>) -> u32 {
    if let Some(&v) = memo.get(&pos) {
        return v;
    }
    let children: BTreeSet<u32> = options(rules, pos)
        .into_iter()
        .map(|o| naive_grundy(rules, o, memo))
        .collect();
    let v = (0..).find(|x| !children.contains(x)).unwrap();
    memo.insert(pos, v);
    v
}

#[test]
fn closed_forms_match_naive_recursion() {
    for k in 1..=6 {
        let rules = RuleSet::consecutive(k).unwrap();
        let mut memo = HashMap::new();
        for n in 0..=60 {
            assert_eq!(
                naive_grundy(&rules, Position::base(n), &mut memo) as u64,
                closed_form_base(k, n),
                "k={k} n={n} base"
            );
            assert_eq!(
                naive_grundy(&rules, Position::complement(n), &mut memo) as u64,
                closed_form_complement(k, n),
                "k={k} n={n} complement"
            );
        }
    }
}

#[test]
fn progression_set_matches_naive_recursion() {
    let rules = RuleSet::explicit([8, 21, 34, 47]).unwrap();
    let as_progression = RuleSet::finite_arithmetic(8, 13, 3).unwrap();
    let table = build_table(&rules, 165, &EngineConfig::default()).unwrap();
    let same = build_table(&as_progression, 165, &EngineConfig::default()).unwrap();
    let mut memo = HashMap::new();
    for n in 0..=165 {
        for side in ConstraintSide::ALL {
            let pos = Position::new(n, side);
            assert_eq!(table.get(pos).get(), naive_grundy(&rules, pos, &mut memo));
            assert_eq!(table.get(pos), same.get(pos));
        }
    }
}

/// Every claim for every offset, by looping over each run's shift and width.
fn brute_claims(b: u64, c: u64, i_max: u64) -> Vec<BTreeSet<u8>> {
    let p = 2 * b + i_max * c;
    let mut claims = vec![BTreeSet::new(); p as usize];
    for j in 0..b {
        claims[j as usize].insert(0);
    }
    for j in b..2 * b {
        claims[j as usize].insert(1);
    }
    for i in 0..=i_max {
        for j in 0..=c - b {
            claims[((2 * b + i * c + j) % p) as usize].insert(0);
            claims[((3 * b + i * c + j) % p) as usize].insert(1);
        }
        for j in 0..=2 * b - c {
            claims[((3 * b + i * c + j) % p) as usize].insert(2);
        }
    }
    claims
}

#[test]
fn block_predictions_match_enumeration() {
    for g in hypothesis_grid(2, 30, 6) {
        let claims = brute_claims(g.b, g.c, g.i_max);
        for (offset, set) in claims.iter().enumerate() {
            let expected = match set.iter().copied().collect::<Vec<_>>()[..] {
                [] => BlockPrediction::Unspecified,
                [0] => BlockPrediction::Zero,
                [1] => BlockPrediction::One,
                [2] => BlockPrediction::GreaterThanOne,
                _ => BlockPrediction::Conflict,
            };
            let got = predict_block_value(g.b, g.c, g.i_max, offset as u64).unwrap();
            assert_eq!(got, expected, "{g} offset {offset}");
        }
    }
}

#[test]
fn finite_and_unbounded_have_the_same_moves_below_period() {
    for g in hypothesis_grid(2, 25, 4) {
        let finite = g.rules();
        let unbounded = g.unbounded_rules();
        for n in 0..g.period() {
            for side in ConstraintSide::ALL {
                let pos = Position::new(n, side);
                assert_eq!(
                    legal_moves(&finite, pos),
                    legal_moves(&unbounded, pos),
                    "{g} {pos}"
                );
            }
        }
        let cfg = EngineConfig::default();
        assert!(arith::check_finite_infinite_agreement(g.b, g.c, g.i_max, &cfg).unwrap());
    }
}

/// Definition-level search: every `(rho, q)` pair, checked cell by cell.
fn brute_period(values: &[u32], m: usize) -> Option<(usize, usize)> {
    let len = values.len();
    if len < 4 {
        return None;
    }
    let mut candidates = Vec::new();
    for q in 1..len {
        let rho = (0..len)
            .find(|&rho| (rho..len.saturating_sub(q)).all(|n| values[n + q] == values[n]))
            .unwrap();
        if len - 1 - rho >= m * q {
            candidates.push((rho, q));
        }
    }
    candidates.into_iter().min()
}

proptest! {
    #[test]
    fn engine_matches_naive_on_random_sets(
        elements in proptest::collection::btree_set(1u64..25, 1..5),
        n_max in 0u64..70,
    ) {
        let rules = RuleSet::explicit(elements).unwrap();
        let table = build_table(&rules, n_max, &EngineConfig::default()).unwrap();
        let mut memo = HashMap::new();
        for n in 0..=n_max {
            for side in ConstraintSide::ALL {
                let pos = Position::new(n, side);
                prop_assert_eq!(table.get(pos).get(), naive_grundy(&rules, pos, &mut memo));
            }
        }
    }

    #[test]
    fn detect_period_matches_definition(
        values in proptest::collection::vec(0u32..3, 0..40),
        m in 1usize..5,
    ) {
        let fast = detect_period(&values, m).ok().map(|p| (p.preperiod, p.period));
        prop_assert_eq!(fast, brute_period(&values, m));
    }
}

#[test]
fn detect_period_matches_definition_on_engine_rows() {
    let cfg = EngineConfig::default();
    for g in [
        Progression::new(5, 8, 0).unwrap(),
        Progression::new(5, 8, 2).unwrap(),
        Progression::new(6, 7, 1).unwrap(),
    ] {
        let t = build_table(&g.rules(), 5 * g.period(), &cfg).unwrap();
        let row: Vec<u32> = t
            .row(ConstraintSide::Base)
            .iter()
            .map(|v| v.get())
            .collect();
        let fast = detect_period(&row, 3).unwrap();
        assert_eq!(
            Some((fast.preperiod, fast.period)),
            brute_period(&row, 3),
            "{g}"
        );
        assert_eq!(g.period() as usize % fast.period, 0, "{g}");
    }
}
