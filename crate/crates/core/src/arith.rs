//! Finite arithmetic progressions `S = {b + i*c : 0 <= i <= i_max}` with
//! `(c + 2) / 2 <= b < c`.
//!
//! The base row is expected to repeat with period `p = 2b + i_max*c`, and
//! inside each block of length `p` a handful of offset ranges carry a fixed
//! value class:
//!
//! | offsets                          | class |
//! |----------------------------------|-------|
//! | `[0, b)`                         | 0     |
//! | `[b, 2b)`                        | 1     |
//! | `2b + i'c + j`, `j <= c - b`     | 0     |
//! | `3b + i'c + j`, `j <= c - b`     | 1     |
//! | `3b + i'c + j`, `j <= 2b - c`    | > 1   |
//!
//! with `0 <= i' <= i_max` and offsets reduced mod `p`. The last two ranges
//! overlap, and the third touches the fourth at its right end, so an offset
//! may carry contradictory claims. Those are classified [`BlockPrediction::Conflict`]
//! and the engine table decides.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{build_table, EngineConfig, GrundyValue};
use crate::error::{Error, Result};
use crate::game::{progression_hypothesis, ConstraintSide, RuleSet};

/// Validated progression parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Progression {
    pub b: u64,
    pub c: u64,
    pub i_max: u64,
}

impl Progression {
    pub fn new(b: u64, c: u64, i_max: u64) -> Result<Self> {
        if b == 0 || c == 0 {
            return Err(Error::InvalidRuleset("b and c must be at least 1".into()));
        }
        if !progression_hypothesis(b, c) {
            return Err(Error::HypothesisViolated { b, c });
        }
        i_max
            .checked_mul(c)
            .and_then(|x| x.checked_add(2 * b))
            .ok_or_else(|| Error::InvalidRuleset("period overflows".into()))?;
        Ok(Progression { b, c, i_max })
    }

    pub fn from_rules(rules: &RuleSet) -> Result<Self> {
        match *rules {
            RuleSet::FiniteArithmetic { b, c, i_max } => Progression::new(b, c, i_max),
            ref other => Err(other.wrong_family("arith")),
        }
    }

    /// `2b + i_max*c`.
    pub fn period(&self) -> u64 {
        2 * self.b + self.i_max * self.c
    }

    pub fn rules(&self) -> RuleSet {
        RuleSet::FiniteArithmetic {
            b: self.b,
            c: self.c,
            i_max: self.i_max,
        }
    }

    /// The same progression without the cutoff.
    pub fn unbounded_rules(&self) -> RuleSet {
        RuleSet::InfiniteArithmetic {
            b: self.b,
            c: self.c,
        }
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={} c={} i_max={}", self.b, self.c, self.i_max)
    }
}

pub fn predicted_period(b: u64, c: u64, i_max: u64) -> Result<u64> {
    Ok(Progression::new(b, c, i_max)?.period())
}

/// Observed class of a Grundy value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ValueClass {
    Zero,
    One,
    GreaterThanOne,
}

impl ValueClass {
    pub fn of(v: GrundyValue) -> Self {
        match v.get() {
            0 => ValueClass::Zero,
            1 => ValueClass::One,
            _ => ValueClass::GreaterThanOne,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BlockPrediction {
    Zero,
    One,
    GreaterThanOne,
    Unspecified,
    Conflict,
}

impl From<ValueClass> for BlockPrediction {
    fn from(c: ValueClass) -> Self {
        match c {
            ValueClass::Zero => BlockPrediction::Zero,
            ValueClass::One => BlockPrediction::One,
            ValueClass::GreaterThanOne => BlockPrediction::GreaterThanOne,
        }
    }
}

/// The offset ranges from the module table, in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockRule {
    /// `[0, b)` is 0.
    LeadingZeros,
    /// `[b, 2b)` is 1.
    LeadingOnes,
    /// `2b + i'c + j` for `j <= c - b` is 0.
    ZeroRun,
    /// `3b + i'c + j` for `j <= c - b` is 1.
    OneRun,
    /// `3b + i'c + j` for `j <= 2b - c` is above 1.
    HighRun,
}

impl BlockRule {
    pub fn class(self) -> ValueClass {
        match self {
            BlockRule::LeadingZeros | BlockRule::ZeroRun => ValueClass::Zero,
            BlockRule::LeadingOnes | BlockRule::OneRun => ValueClass::One,
            BlockRule::HighRun => ValueClass::GreaterThanOne,
        }
    }
}

/// One rule covering one offset, with the `(i', j)` that place it there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockClaim {
    pub rule: BlockRule,
    pub shift: u64,
    pub j: u64,
}

/// Every rule that covers `offset` (which must lie in `[0, p)`).
pub fn block_claims(prog: &Progression, offset: u64) -> Vec<BlockClaim> {
    let Progression { b, c, i_max } = *prog;
    let p = prog.period();
    let mut claims = Vec::new();
    if offset < b {
        claims.push(BlockClaim {
            rule: BlockRule::LeadingZeros,
            shift: 0,
            j: offset,
        });
    } else if offset < 2 * b {
        claims.push(BlockClaim {
            rule: BlockRule::LeadingOnes,
            shift: 0,
            j: offset - b,
        });
    }
    let runs = [
        (BlockRule::ZeroRun, 2 * b, c - b),
        (BlockRule::OneRun, 3 * b, c - b),
        (BlockRule::HighRun, 3 * b, 2 * b - c),
    ];
    for (rule, start, j_max) in runs {
        // j_max < c, so each unreduced offset has at most one (i', j).
        for unreduced in [offset, offset + p] {
            let Some(t) = unreduced.checked_sub(start) else {
                continue;
            };
            let (shift, j) = (t / c, t % c);
            if shift <= i_max && j <= j_max {
                claims.push(BlockClaim { rule, shift, j });
            }
        }
    }
    claims
}

fn combine(claims: &[BlockClaim]) -> BlockPrediction {
    let mut classes = claims.iter().map(|c| c.rule.class());
    match classes.next() {
        None => BlockPrediction::Unspecified,
        Some(first) if classes.all(|c| c == first) => first.into(),
        Some(_) => BlockPrediction::Conflict,
    }
}

pub fn predict_block_value(b: u64, c: u64, i_max: u64, offset: u64) -> Result<BlockPrediction> {
    let prog = Progression::new(b, c, i_max)?;
    let period = prog.period();
    if offset >= period {
        return Err(Error::OffsetOutOfRange { offset, period });
    }
    Ok(combine(&block_claims(&prog, offset)))
}

/// Preperiod and period found by [`detect_period`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Periodicity {
    pub preperiod: usize,
    pub period: usize,
}

pub const DEFAULT_MIN_TAIL_MULTIPLE: usize = 3;

/// Finds where a sequence settles into a repeating pattern.
///
/// For each `q` the preperiod `rho(q)` is the smallest `rho` with
/// `values[n + q] == values[n]` for all `rho <= n < len - q`. A candidate is
/// accepted only if its periodic tail spans at least `min_tail_multiple * q`
/// steps (`len - 1 - rho >= min_tail_multiple * q`). Among accepted candidates
/// the one with the smallest `rho` wins, ties going to the smaller `q`.
///
/// Ranking by `rho` first keeps short patterns that only hold near the end of
/// the data (a block made of repeated sub-runs, say) from shadowing the true
/// eventual period.
pub fn detect_period<T: PartialEq>(values: &[T], min_tail_multiple: usize) -> Result<Periodicity> {
    if min_tail_multiple == 0 {
        return Err(Error::InvalidArgument(
            "min_tail_multiple must be positive".into(),
        ));
    }
    let len = values.len();
    if len < 4 {
        return Err(Error::InsufficientData {
            len,
            min_tail_multiple,
        });
    }
    let longest = (len - 1) / min_tail_multiple;
    let mut best: Option<Periodicity> = None;
    for period in 1..=longest {
        let preperiod = (0..len - period)
            .rev()
            .find(|&n| values[n + period] != values[n])
            .map_or(0, |n| n + 1);
        if best.is_some_and(|b| preperiod >= b.preperiod) {
            continue;
        }
        if len - 1 - preperiod >= min_tail_multiple * period {
            best = Some(Periodicity { preperiod, period });
            if preperiod == 0 {
                break;
            }
        }
    }
    best.ok_or(Error::InsufficientData {
        len,
        min_tail_multiple,
    })
}

/// Whether the finite and unbounded progressions give identical values on
/// both sides for every `n < p`.
pub fn check_finite_infinite_agreement(
    b: u64,
    c: u64,
    i_max: u64,
    config: &EngineConfig,
) -> Result<bool> {
    let prog = Progression::new(b, c, i_max)?;
    finite_infinite_agree(&prog, config)
}

fn finite_infinite_agree(prog: &Progression, config: &EngineConfig) -> Result<bool> {
    let top = prog.period() - 1;
    let finite = build_table(&prog.rules(), top, config)?;
    let unbounded = build_table(&prog.unbounded_rules(), top, config)?;
    Ok(ConstraintSide::ALL
        .iter()
        .all(|&side| finite.row(side) == unbounded.row(side)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArithOptions {
    pub engine: EngineConfig,
    pub min_tail_multiple: usize,
    /// Analyse `b < 5`; the complement bounds are then informational only.
    pub allow_small_b: bool,
}

impl Default for ArithOptions {
    fn default() -> Self {
        ArithOptions {
            engine: EngineConfig::default(),
            min_tail_multiple: DEFAULT_MIN_TAIL_MULTIPLE,
            allow_small_b: false,
        }
    }
}

/// Prediction vs. observation at one block offset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffsetCheck {
    pub offset: u64,
    pub prediction: BlockPrediction,
    pub claims: Vec<BlockClaim>,
    /// Class seen in block `l = 1`.
    pub observed: ValueClass,
    /// Whether every complete block shows the same class.
    pub observed_stable: bool,
    /// `None` for unscored (conflicted or unspecified) offsets.
    pub agrees: Option<bool>,
    /// For conflicts: the rules whose class the data matches in every block.
    pub supported_by: Vec<BlockRule>,
}

/// Inclusive run of heap sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub start: u64,
    pub end: u64,
}

fn runs_where(row: &[GrundyValue], from: usize, pred: impl Fn(GrundyValue) -> bool) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for (n, &v) in row.iter().enumerate().skip(from) {
        if !pred(v) {
            continue;
        }
        let n = n as u64;
        match runs.last_mut() {
            Some(r) if r.end + 1 == n => r.end = n,
            _ => runs.push(Run { start: n, end: n }),
        }
    }
    runs
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub family: &'static str,
    pub b: u64,
    pub c: u64,
    pub i_max: u64,
    pub predicted_period: u64,
    pub detected_preperiod: Option<u64>,
    pub detected_period: Option<u64>,
    pub n_max: u64,
    /// Number of complete blocks `[lp, (l+1)p)` with `l >= 1` in the table.
    pub complete_blocks: u64,
    pub block_check: Vec<OffsetCheck>,
    pub block_conflicts: Vec<u64>,
    /// Offsets whose Zero/One/>1 prediction the table contradicts.
    pub block_contradictions: Vec<u64>,
    #[serde(rename = "lemma_3_1_ok")]
    pub finite_infinite_agree: bool,
    /// Complement row is at least 2 for `n >= 2`.
    #[serde(rename = "lemma_3_2_ok")]
    pub complement_at_least_two: bool,
    /// Where the base row is below 2 for `n >= 2`; the same bound read on
    /// the base side fails here.
    pub base_side_below_two: Vec<Run>,
    /// Complement row exceeds `2 i_max` for `n >= p`.
    #[serde(rename = "lemma_3_8_ok")]
    pub complement_exceeds_twice_i_max: bool,
    /// `G(n + p) == G(n)` on the base row for `2p <= n <= n_max - p`.
    #[serde(rename = "theorem_3_9_ok")]
    pub periodic_from_2p: bool,
    /// The same check from `n = p`; informational.
    pub periodic_from_p: bool,
    pub detected_divides_predicted: bool,
    /// Largest base value for `n >= 2p`.
    pub max_tail_base_value: u64,
    /// `2 (i_max + 1)`, the most options a base position can have.
    pub base_option_bound: u64,
    pub small_b_override: bool,
    pub passed: bool,
}

impl PeriodReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Builds the engine table for the progression up to `n_max` and checks the
/// period, the block layout and the complement bounds against it.
pub fn verify_arith(
    b: u64,
    c: u64,
    i_max: u64,
    n_max: u64,
    opts: &ArithOptions,
) -> Result<PeriodReport> {
    let prog = Progression::new(b, c, i_max)?;
    if b < 5 && !opts.allow_small_b {
        return Err(Error::SmallStart { b });
    }
    let p = prog.period();
    if n_max < 3 * p {
        return Err(Error::InsufficientRange {
            n_max,
            required: 3 * p,
        });
    }
    let table = build_table(&prog.rules(), n_max, &opts.engine)?;
    let base = table.row(ConstraintSide::Base);
    let comp = table.row(ConstraintSide::Complement);
    let (pu, top) = (p as usize, n_max as usize);

    let detected = detect_period(base, opts.min_tail_multiple).ok();
    let periodic_from = |start: usize| (start..=top - pu).all(|n| base[n + pu] == base[n]);
    let periodic_from_2p = periodic_from(2 * pu);
    let periodic_from_p = periodic_from(pu);
    let detected_divides_predicted = detected.is_some_and(|d| pu % d.period == 0);

    let complete_blocks = (n_max + 1) / p - 1;
    let blocks = 1..=complete_blocks as usize;
    let mut block_check = Vec::with_capacity(pu);
    for offset in 0..p {
        let claims = block_claims(&prog, offset);
        let prediction = combine(&claims);
        let seen: Vec<ValueClass> = blocks
            .clone()
            .map(|l| ValueClass::of(base[l * pu + offset as usize]))
            .collect();
        let observed = seen[0];
        let observed_stable = seen.iter().all(|&c| c == observed);
        let agrees = match prediction {
            BlockPrediction::Zero => Some(seen.iter().all(|&c| c == ValueClass::Zero)),
            BlockPrediction::One => Some(seen.iter().all(|&c| c == ValueClass::One)),
            BlockPrediction::GreaterThanOne => {
                Some(seen.iter().all(|&c| c == ValueClass::GreaterThanOne))
            }
            BlockPrediction::Unspecified | BlockPrediction::Conflict => None,
        };
        let mut supported_by = Vec::new();
        if prediction == BlockPrediction::Conflict {
            for claim in &claims {
                let rule = claim.rule;
                if !supported_by.contains(&rule) && seen.iter().all(|&c| c == rule.class()) {
                    supported_by.push(rule);
                }
            }
        }
        block_check.push(OffsetCheck {
            offset,
            prediction,
            claims,
            observed,
            observed_stable,
            agrees,
            supported_by,
        });
    }
    let block_conflicts: Vec<u64> = block_check
        .iter()
        .filter(|o| o.prediction == BlockPrediction::Conflict)
        .map(|o| o.offset)
        .collect();
    let block_contradictions: Vec<u64> = block_check
        .iter()
        .filter(|o| o.agrees == Some(false))
        .map(|o| o.offset)
        .collect();

    let finite_infinite_agree = finite_infinite_agree(&prog, &opts.engine)?;
    let complement_at_least_two = comp.iter().skip(2).all(|v| v.get() >= 2);
    let base_side_below_two = runs_where(base, 2, |v| v.get() < 2);
    let complement_exceeds_twice_i_max = comp.iter().skip(pu).all(|v| u64::from(*v) > 2 * i_max);
    let max_tail_base_value = base[2 * pu..]
        .iter()
        .map(|&v| u64::from(v))
        .max()
        .unwrap_or(0);

    let bounds_ok =
        opts.allow_small_b && b < 5 || complement_at_least_two && complement_exceeds_twice_i_max;
    let passed = periodic_from_2p
        && detected_divides_predicted
        && block_contradictions.is_empty()
        && finite_infinite_agree
        && bounds_ok;

    Ok(PeriodReport {
        family: "arith",
        b,
        c,
        i_max,
        predicted_period: p,
        detected_preperiod: detected.map(|d| d.preperiod as u64),
        detected_period: detected.map(|d| d.period as u64),
        n_max,
        complete_blocks,
        block_check,
        block_conflicts,
        block_contradictions,
        finite_infinite_agree,
        complement_at_least_two,
        base_side_below_two,
        complement_exceeds_twice_i_max,
        periodic_from_2p,
        periodic_from_p,
        detected_divides_predicted,
        max_tail_base_value,
        base_option_bound: 2 * (i_max + 1),
        small_b_override: opts.allow_small_b && b < 5,
        passed,
    })
}

/// Every hypothesis-satisfying `(b, c, i_max)` with `b_min <= b < c <= c_max`
/// and `i_max <= i_max_max`, ordered by `(b, c, i_max)`.
pub fn hypothesis_grid(b_min: u64, c_max: u64, i_max_max: u64) -> Vec<Progression> {
    let mut grid = Vec::new();
    for b in b_min.max(1)..c_max {
        for c in b + 1..=c_max {
            if !progression_hypothesis(b, c) {
                continue;
            }
            for i_max in 0..=i_max_max {
                grid.push(Progression { b, c, i_max });
            }
        }
    }
    grid
}

/// Runs [`verify_arith`] over `grid` in parallel with `n_max = multiple * p`.
/// Results come back in grid order.
pub fn verify_arith_grid(
    grid: &[Progression],
    multiple: u64,
    opts: &ArithOptions,
) -> Vec<Result<PeriodReport>> {
    grid.par_iter()
        .map(|g| verify_arith(g.b, g.c, g.i_max, multiple * g.period(), opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gv(v: &[u32]) -> Vec<GrundyValue> {
        v.iter().copied().map(GrundyValue).collect()
    }

    #[test]
    fn period_examples() {
        assert_eq!(predicted_period(8, 13, 3).unwrap(), 55);
        assert_eq!(predicted_period(5, 8, 2).unwrap(), 26);
        assert_eq!(predicted_period(5, 8, 0).unwrap(), 10);
        assert_eq!(
            predicted_period(3, 10, 1),
            Err(Error::HypothesisViolated { b: 3, c: 10 })
        );
    }

    #[test]
    fn block_examples() {
        use BlockPrediction::*;
        // [0, b) says 0, but 3b + 2c + (c - b) = p lands here too and says 1
        assert_eq!(predict_block_value(8, 13, 3, 0).unwrap(), Conflict);
        assert_eq!(predict_block_value(8, 13, 3, 1).unwrap(), Zero);
        // 3b + 3c + j wraps to b + j: [b, 2b) says 1, the high run says > 1
        assert_eq!(predict_block_value(8, 13, 3, 8).unwrap(), Conflict);
        assert_eq!(predict_block_value(8, 13, 3, 12).unwrap(), One);
        assert_eq!(predict_block_value(8, 13, 3, 16).unwrap(), Zero);
        assert_eq!(predict_block_value(8, 13, 3, 24).unwrap(), Conflict);
        assert_eq!(predict_block_value(8, 13, 3, 22).unwrap(), Unspecified);
        assert_eq!(
            predict_block_value(8, 13, 3, 55),
            Err(Error::OffsetOutOfRange {
                offset: 55,
                period: 55
            })
        );
        assert!(predict_block_value(3, 10, 1, 0).is_err());
    }

    #[test]
    fn wrapped_claims_agree_with_the_leading_ranges() {
        let prog = Progression::new(8, 13, 3).unwrap();
        // 2b + 3c + j wraps to j for j <= c - b
        let claims = block_claims(&prog, 2);
        assert!(claims
            .iter()
            .any(|c| c.rule == BlockRule::ZeroRun && c.shift == 3 && c.j == 2));
        assert_eq!(combine(&claims), BlockPrediction::Zero);
    }

    #[test]
    fn detect_examples() {
        let p = detect_period(&gv(&[5, 5, 5, 5, 5, 5, 5, 5]), 3).unwrap();
        assert_eq!((p.preperiod, p.period), (0, 1));
        let p = detect_period(&gv(&[9, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2]), 3).unwrap();
        assert_eq!((p.preperiod, p.period), (1, 3));
        assert!(matches!(
            detect_period(&gv(&[1, 1, 1]), 3),
            Err(Error::InsufficientData { .. })
        ));
        assert!(detect_period(&gv(&[1, 2, 3, 4, 5, 6, 7]), 3).is_err());
        assert!(detect_period(&gv(&[1, 1, 1, 1]), 0).is_err());
    }

    #[test]
    fn detection_threshold_is_inclusive() {
        // one-element prefix, then 6 = 3 * 2 steps of period-2 tail
        let v = gv(&[7, 1, 2, 1, 2, 1, 2, 1]);
        let p = detect_period(&v, 3).unwrap();
        assert_eq!((p.preperiod, p.period), (1, 2));
        assert!(detect_period(&v, 4).is_err());
    }

    #[test]
    fn finite_and_unbounded_agree_below_period() {
        let cfg = EngineConfig::default();
        assert!(check_finite_infinite_agreement(8, 13, 3, &cfg).unwrap());
        assert!(check_finite_infinite_agreement(5, 8, 2, &cfg).unwrap());
        assert!(check_finite_infinite_agreement(5, 8, 0, &cfg).unwrap());
        assert!(check_finite_infinite_agreement(3, 10, 1, &cfg).is_err());
    }

    #[test]
    fn verify_rejects_bad_input() {
        let opts = ArithOptions::default();
        assert_eq!(
            verify_arith(3, 10, 1, 100, &opts),
            Err(Error::HypothesisViolated { b: 3, c: 10 })
        );
        assert_eq!(
            verify_arith(4, 6, 1, 500, &opts),
            Err(Error::SmallStart { b: 4 })
        );
        assert_eq!(
            verify_arith(8, 13, 3, 164, &opts),
            Err(Error::InsufficientRange {
                n_max: 164,
                required: 165
            })
        );
        let tight = ArithOptions {
            engine: EngineConfig::with_ceiling(100),
            ..opts
        };
        assert!(matches!(
            verify_arith(8, 13, 3, 550, &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn small_b_override_runs() {
        let opts = ArithOptions {
            allow_small_b: true,
            ..ArithOptions::default()
        };
        let r = verify_arith(4, 6, 1, 140, &opts).unwrap();
        assert!(r.small_b_override);
        assert_eq!(r.predicted_period, 14);
    }

    #[test]
    fn singleton_progression() {
        let r = verify_arith(5, 8, 0, 200, &ArithOptions::default()).unwrap();
        assert_eq!(r.predicted_period, 10);
        assert!(r.periodic_from_2p);
        assert_eq!(10 % r.detected_period.unwrap(), 0);
        assert!(r.block_contradictions.is_empty());
        assert!(r.passed);
    }

    #[test]
    fn runs_are_merged() {
        let row = gv(&[0, 0, 1, 1, 3, 0, 2, 2, 1]);
        assert_eq!(
            runs_where(&row, 2, |v| v.get() < 2),
            vec![
                Run { start: 2, end: 3 },
                Run { start: 5, end: 5 },
                Run { start: 8, end: 8 }
            ]
        );
    }

    #[test]
    fn grid_enumeration() {
        let grid = hypothesis_grid(5, 25, 4);
        assert!(grid.contains(&Progression {
            b: 8,
            c: 13,
            i_max: 3
        }));
        assert!(grid
            .iter()
            .all(|g| progression_hypothesis(g.b, g.c) && g.b >= 5 && g.c <= 25));
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }
}
