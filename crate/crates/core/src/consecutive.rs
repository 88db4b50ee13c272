//! Closed forms for `S = {1, ..., k}` and its complement.
//!
//! ```text
//! G(n, S)  = n                      0 <= n <= 2k
//!          = (n + 1) mod (k + 1)    n > 2k
//!
//! G(n, S') = 0                      0 <= n < k
//!          = n - k                  k <= n <= 3k
//!          = 2k + ceil((n - 3k) / (k + 1))   n > 3k
//! ```
//!
//! `mod` is the least nonnegative residue. All arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::engine::{build_table, EngineConfig, GrundyValue};
use crate::error::{Error, Result};
use crate::game::{ConstraintSide, Position, RuleSet};

/// Which piece of the closed form covers a given `(k, n, side)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConsecutiveCase {
    #[serde(rename = "A_low")]
    BaseLow,
    #[serde(rename = "A_periodic")]
    BasePeriodic,
    #[serde(rename = "B_zero")]
    ComplementZero,
    #[serde(rename = "B_linear")]
    ComplementLinear,
    #[serde(rename = "B_log")]
    ComplementGrowing,
}

impl ConsecutiveCase {
    pub fn classify(k: u64, n: u64, side: ConstraintSide) -> Self {
        match side {
            ConstraintSide::Base if n <= 2 * k => ConsecutiveCase::BaseLow,
            ConstraintSide::Base => ConsecutiveCase::BasePeriodic,
            ConstraintSide::Complement if n < k => ConsecutiveCase::ComplementZero,
            ConstraintSide::Complement if n <= 3 * k => ConsecutiveCase::ComplementLinear,
            ConstraintSide::Complement => ConsecutiveCase::ComplementGrowing,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ConsecutiveCase::BaseLow => "A_low",
            ConsecutiveCase::BasePeriodic => "A_periodic",
            ConsecutiveCase::ComplementZero => "B_zero",
            ConsecutiveCase::ComplementLinear => "B_linear",
            ConsecutiveCase::ComplementGrowing => "B_log",
        }
    }
}

impl fmt::Display for ConsecutiveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Closed-form `G(n, {1..k})`.
///
/// # Panics
/// If `k == 0`.
pub fn closed_form_base(k: u64, n: u64) -> u64 {
    assert!(k >= 1, "k must be positive");
    if n <= 2 * k {
        n
    } else {
        (n + 1) % (k + 1)
    }
}

/// Closed-form `G(n, Z+ \ {1..k})`.
///
/// # Panics
/// If `k == 0`.
pub fn closed_form_complement(k: u64, n: u64) -> u64 {
    assert!(k >= 1, "k must be positive");
    if n < k {
        0
    } else if n <= 3 * k {
        n - k
    } else {
        2 * k + ceil_div(n - 3 * k, k + 1)
    }
}

pub fn closed_form(k: u64, pos: Position) -> u64 {
    match pos.side {
        ConstraintSide::Base => closed_form_base(k, pos.n),
        ConstraintSide::Complement => closed_form_complement(k, pos.n),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub side: ConstraintSide,
    pub case: ConsecutiveCase,
    pub expected: u64,
    pub actual: u64,
}

/// Closed form vs. engine for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: &'static str,
    pub k: u64,
    pub n_max: u64,
    pub comparisons: u64,
    pub passed: bool,
    pub mismatches: Vec<Mismatch>,
    /// Mismatch counts grouped by closed-form piece.
    pub mismatches_by_case: BTreeMap<ConsecutiveCase, u64>,
    pub monotonicity_ok: bool,
    /// Heap sizes `n > k` where `G(n+1, S') < G(n, S')`.
    pub monotonicity_violations: Vec<u64>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Heap sizes `n` with `k < n < row.len() - 1` where the row decreases.
pub fn monotonicity_violations(k: u64, row: &[GrundyValue]) -> Vec<u64> {
    row.windows(2)
        .enumerate()
        .filter(|&(n, w)| n as u64 > k && w[1] < w[0])
        .map(|(n, _)| n as u64)
        .collect()
}

/// Builds the engine table for `{1..k}` and compares every cell against the
/// closed form.
pub fn verify_consecutive(k: u64, n_max: u64, config: &EngineConfig) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidRuleset("k must be at least 1".into()));
    }
    let rules = RuleSet::consecutive(k)?;
    let table = build_table(&rules, n_max, config)?;

    let mut mismatches = Vec::new();
    let mut comparisons = 0u64;
    for n in 0..=n_max {
        for side in ConstraintSide::ALL {
            let pos = Position::new(n, side);
            let expected = closed_form(k, pos);
            let actual = u64::from(table.get(pos));
            comparisons += 1;
            if expected != actual {
                mismatches.push(Mismatch {
                    n,
                    side,
                    case: ConsecutiveCase::classify(k, n, side),
                    expected,
                    actual,
                });
            }
        }
    }
    let mut mismatches_by_case = BTreeMap::new();
    for m in &mismatches {
        *mismatches_by_case.entry(m.case).or_insert(0) += 1;
    }
    let monotonicity_violations = monotonicity_violations(k, table.row(ConstraintSide::Complement));

    Ok(VerificationReport {
        family: "consecutive",
        k,
        n_max,
        comparisons,
        passed: mismatches.is_empty(),
        mismatches,
        mismatches_by_case,
        monotonicity_ok: monotonicity_violations.is_empty(),
        monotonicity_violations,
    })
}
