//! Bottom-up mex dynamic programming over both constraint sides.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::game::{legal_moves, ConstraintSide, Position, RuleSet};

/// A nim-value `*x`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct GrundyValue(pub u32);

impl GrundyValue {
    pub const ZERO: GrundyValue = GrundyValue(0);

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GrundyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<GrundyValue> for u64 {
    fn from(v: GrundyValue) -> u64 {
        v.0 as u64
    }
}

/// Smallest nonnegative integer missing from `values`.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> GrundyValue {
    let mut seen: Vec<bool> = Vec::new();
    for v in values {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    let first_gap = seen.iter().position(|&p| !p).unwrap_or(seen.len());
    GrundyValue(first_gap as u32)
}

/// Presence array reused across states. A state with `m` options can only
/// have a value in `0..=m`, so larger entries are dropped.
#[derive(Default)]
struct MexScratch {
    marks: Vec<u32>,
    stamp: u32,
    limit: usize,
}

impl MexScratch {
    fn begin(&mut self, option_count: usize) {
        self.limit = option_count + 1;
        if self.marks.len() < self.limit {
            self.marks.resize(self.limit, 0);
        }
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.marks.fill(0);
            self.stamp = 1;
        }
    }

    #[inline]
    fn insert(&mut self, v: GrundyValue) {
        let v = v.0 as usize;
        if v < self.limit {
            self.marks[v] = self.stamp;
        }
    }

    fn finish(&self) -> GrundyValue {
        let gap = self.marks[..self.limit]
            .iter()
            .position(|&m| m != self.stamp)
            .unwrap_or(self.limit);
        GrundyValue(gap as u32)
    }
}

pub const DEFAULT_STATE_CEILING: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest heap size a single build may reach.
    pub state_ceiling: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            state_ceiling: DEFAULT_STATE_CEILING,
        }
    }
}

impl EngineConfig {
    pub fn with_ceiling(state_ceiling: u64) -> Self {
        EngineConfig { state_ceiling }
    }

    fn check(&self, n: u64) -> Result<usize> {
        if n > self.state_ceiling {
            return Err(Error::ResourceLimit {
                requested: n,
                ceiling: self.state_ceiling,
            });
        }
        usize::try_from(n).map_err(|_| Error::ResourceLimit {
            requested: n,
            ceiling: usize::MAX as u64,
        })
    }
}

/// A move: take `take` stones and hold the opponent to `constrain`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub take: u64,
    pub constrain: ConstraintSide,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "take {}, opponent on {}", self.take, self.constrain)
    }
}

/// Grundy values of `(n, S)` and `(n, complement of S)` for `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    rules: RuleSet,
    n_max: u64,
    base: Vec<GrundyValue>,
    complement: Vec<GrundyValue>,
}

/// Fills both rows for `0..=n_max`, ascending in `n`.
pub fn build_table(rules: &RuleSet, n_max: u64, config: &EngineConfig) -> Result<GrundyTable> {
    rules.validate()?;
    let len = config.check(n_max)? + 1;

    let mut in_base = vec![false; len];
    for s in rules.base_moves_up_to(n_max) {
        in_base[s as usize] = true;
    }
    let base_moves: Vec<usize> = (1..len).filter(|&s| in_base[s]).collect();
    let comp_moves: Vec<usize> = (1..len).filter(|&s| !in_base[s]).collect();

    let mut base = vec![GrundyValue::ZERO; len];
    let mut complement = vec![GrundyValue::ZERO; len];
    let mut scratch = MexScratch::default();
    let (mut base_avail, mut comp_avail) = (0usize, 0usize);

    for n in 1..len {
        if in_base[n] {
            base_avail += 1;
        } else {
            comp_avail += 1;
        }
        for (moves, avail, side) in [
            (&base_moves, base_avail, ConstraintSide::Base),
            (&comp_moves, comp_avail, ConstraintSide::Complement),
        ] {
            scratch.begin(2 * avail);
            for &s in &moves[..avail] {
                scratch.insert(base[n - s]);
                scratch.insert(complement[n - s]);
            }
            let value = scratch.finish();
            match side {
                ConstraintSide::Base => base[n] = value,
                ConstraintSide::Complement => complement[n] = value,
            }
        }
    }

    Ok(GrundyTable {
        rules: rules.clone(),
        n_max,
        base,
        complement,
    })
}

/// Grundy value of a single position.
pub fn grundy(rules: &RuleSet, pos: Position, config: &EngineConfig) -> Result<GrundyValue> {
    Ok(build_table(rules, pos.n, config)?.get(pos))
}

/// Moves from `pos` that leave the opponent on a zero position.
pub fn winning_moves(rules: &RuleSet, pos: Position, config: &EngineConfig) -> Result<Vec<Move>> {
    Ok(build_table(rules, pos.n, config)?.winning_moves(pos))
}

impl GrundyTable {
    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn row(&self, side: ConstraintSide) -> &[GrundyValue] {
        match side {
            ConstraintSide::Base => &self.base,
            ConstraintSide::Complement => &self.complement,
        }
    }

    /// # Panics
    /// If `pos.n > n_max`.
    pub fn get(&self, pos: Position) -> GrundyValue {
        self.row(pos.side)[pos.n as usize]
    }

    pub fn try_get(&self, pos: Position) -> Option<GrundyValue> {
        self.row(pos.side)
            .get(usize::try_from(pos.n).ok()?)
            .copied()
    }

    /// Winning moves ordered by stone count, base constraint first.
    ///
    /// # Panics
    /// If `pos.n > n_max`.
    pub fn winning_moves(&self, pos: Position) -> Vec<Move> {
        assert!(pos.n <= self.n_max, "position {pos} is beyond the table");
        legal_moves(&self.rules, pos)
            .into_iter()
            .flat_map(|take| ConstraintSide::ALL.map(|constrain| Move { take, constrain }))
            .filter(|m| {
                self.get(Position::new(pos.n - m.take, m.constrain))
                    .is_zero()
            })
            .collect()
    }

    /// The engine's choice from `pos`: the first winning move if any, else
    /// the smallest legal move constraining to the base set. `None` when
    /// `pos` has no moves.
    pub fn reply(&self, pos: Position) -> Option<Move> {
        if let Some(m) = self.winning_moves(pos).first() {
            return Some(*m);
        }
        legal_moves(&self.rules, pos).first().map(|&take| Move {
            take,
            constrain: ConstraintSide::Base,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(16 * self.base.len() + 24);
        out.push_str("n,G_base,G_complement\n");
        for (n, (b, c)) in self.base.iter().zip(&self.complement).enumerate() {
            out.push_str(&format!("{n},{b},{c}\n"));
        }
        out
    }

    /// Parses [`GrundyTable::to_csv`] output. Rows must run `0, 1, 2, ...`.
    pub fn from_csv(rules: RuleSet, text: &str) -> Result<GrundyTable> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, "n,G_base,G_complement")) => {}
            _ => {
                return Err(Error::Table {
                    line: 1,
                    reason: "expected header `n,G_base,G_complement`".into(),
                })
            }
        }
        let (mut base, mut complement) = (Vec::new(), Vec::new());
        for (idx, line) in lines {
            let line_no = idx + 1;
            let bad = |reason: String| Error::Table {
                line: line_no,
                reason,
            };
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(bad(format!("expected 3 fields, got {}", fields.len())));
            }
            let n: u64 = fields[0].parse().map_err(|e| bad(format!("n: {e}")))?;
            if n != base.len() as u64 {
                return Err(bad(format!("expected n={}, got {n}", base.len())));
            }
            let b: u32 = fields[1].parse().map_err(|e| bad(format!("G_base: {e}")))?;
            let c: u32 = fields[2]
                .parse()
                .map_err(|e| bad(format!("G_complement: {e}")))?;
            base.push(GrundyValue(b));
            complement.push(GrundyValue(c));
        }
        if base.is_empty() {
            return Err(Error::Table {
                line: 2,
                reason: "table has no rows".into(),
            });
        }
        Ok(GrundyTable {
            rules,
            n_max: base.len() as u64 - 1,
            base,
            complement,
        })
    }

    pub fn to_export(&self) -> TableExport {
        let predicted_period = match self.rules {
            RuleSet::FiniteArithmetic { b, c, i_max } => arith::predicted_period(b, c, i_max).ok(),
            _ => None,
        };
        TableExport {
            ruleset: self.rules.to_string(),
            n_max: self.n_max,
            predicted_period,
            base: self.base.clone(),
            complement: self.complement.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_export()).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<GrundyTable> {
        let export: TableExport = serde_json::from_str(text).map_err(|e| Error::Table {
            line: e.line(),
            reason: e.to_string(),
        })?;
        export.try_into()
    }
}

/// JSON shape of a [`GrundyTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExport {
    pub ruleset: String,
    pub n_max: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_period: Option<u64>,
    pub base: Vec<GrundyValue>,
    pub complement: Vec<GrundyValue>,
}

impl TryFrom<TableExport> for GrundyTable {
    type Error = Error;

    fn try_from(export: TableExport) -> Result<GrundyTable> {
        let expected = export.n_max as usize + 1;
        if export.base.len() != expected || export.complement.len() != expected {
            return Err(Error::Table {
                line: 0,
                reason: format!("rows must have n_max+1 = {expected} entries"),
            });
        }
        Ok(GrundyTable {
            rules: export.ruleset.parse()?,
            n_max: export.n_max,
            base: export.base,
            complement: export.complement,
        })
    }
}
