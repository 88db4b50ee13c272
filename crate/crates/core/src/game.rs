//! Rulesets, positions and move generation.
//!
//! A position `(n, S)` is a heap of `n` stones together with the set the
//! player to move must draw from: either the base subtraction set `S` or its
//! complement `Z+ \ S`. Every move removes `s` stones and names the side the
//! opponent is held to next, so each legal `s` yields two options.
//!
//! The complement is infinite and is only ever represented by a membership
//! predicate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of `S` or its complement the player to move draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstraintSide {
    Base,
    Complement,
}

impl ConstraintSide {
    pub const ALL: [ConstraintSide; 2] = [ConstraintSide::Base, ConstraintSide::Complement];

    pub fn flip(self) -> Self {
        match self {
            ConstraintSide::Base => ConstraintSide::Complement,
            ConstraintSide::Complement => ConstraintSide::Base,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintSide::Base => "base",
            ConstraintSide::Complement => "comp",
        }
    }
}

impl fmt::Display for ConstraintSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstraintSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "base" | "b" | "s" => Ok(ConstraintSide::Base),
            "comp" | "complement" | "c" => Ok(ConstraintSide::Complement),
            other => Err(Error::Parse {
                token: other.to_string(),
                reason: "expected `base` or `comp`".into(),
            }),
        }
    }
}

/// A heap of `n` stones plus the side the mover is constrained to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub n: u64,
    pub side: ConstraintSide,
}

impl Position {
    pub fn new(n: u64, side: ConstraintSide) -> Self {
        Position { n, side }
    }

    pub fn base(n: u64) -> Self {
        Position::new(n, ConstraintSide::Base)
    }

    pub fn complement(n: u64) -> Self {
        Position::new(n, ConstraintSide::Complement)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.side)
    }
}

/// The base subtraction set `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RuleSet {
    /// `{1, ..., k}`.
    Consecutive { k: u64 },
    /// `{b + i*c : 0 <= i <= i_max}`.
    FiniteArithmetic { b: u64, c: u64, i_max: u64 },
    /// `{b + i*c : i >= 0}`.
    InfiniteArithmetic { b: u64, c: u64 },
    /// Any finite set, strictly increasing, every element at least 1.
    Explicit { elements: Vec<u64> },
}

impl RuleSet {
    pub fn consecutive(k: u64) -> Result<Self> {
        let rules = RuleSet::Consecutive { k };
        rules.validate()?;
        Ok(rules)
    }

    /// Builds a finite progression. Parameters outside `(c+2)/2 <= b < c` are
    /// accepted; see [`RuleSet::hypothesis_holds`].
    pub fn finite_arithmetic(b: u64, c: u64, i_max: u64) -> Result<Self> {
        let rules = RuleSet::FiniteArithmetic { b, c, i_max };
        rules.validate()?;
        Ok(rules)
    }

    pub fn infinite_arithmetic(b: u64, c: u64) -> Result<Self> {
        let rules = RuleSet::InfiniteArithmetic { b, c };
        rules.validate()?;
        Ok(rules)
    }

    /// Builds an explicit set. Input order does not matter; duplicates and
    /// zero are rejected.
    pub fn explicit<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRuleset(
                "explicit set contains a duplicate".into(),
            ));
        }
        let rules = RuleSet::Explicit { elements };
        rules.validate()?;
        Ok(rules)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RuleSet::Consecutive { k } if *k == 0 => {
                Err(Error::InvalidRuleset("k must be at least 1".into()))
            }
            RuleSet::FiniteArithmetic { b, c, .. } | RuleSet::InfiniteArithmetic { b, c }
                if *b == 0 || *c == 0 =>
            {
                Err(Error::InvalidRuleset("b and c must be at least 1".into()))
            }
            RuleSet::FiniteArithmetic { b, c, i_max } => {
                i_max
                    .checked_mul(*c)
                    .and_then(|x| x.checked_add(*b))
                    .ok_or_else(|| Error::InvalidRuleset("largest element overflows".into()))?;
                Ok(())
            }
            RuleSet::Explicit { elements } => {
                if elements.is_empty() {
                    return Err(Error::InvalidRuleset("explicit set is empty".into()));
                }
                if elements[0] == 0 {
                    return Err(Error::InvalidRuleset("elements must be at least 1".into()));
                }
                if elements.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidRuleset(
                        "explicit set must be strictly increasing".into(),
                    ));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// For the progression families, whether `(c+2)/2 <= b < c` holds.
    /// `None` for the other families.
    pub fn hypothesis_holds(&self) -> Option<bool> {
        match *self {
            RuleSet::FiniteArithmetic { b, c, .. } | RuleSet::InfiniteArithmetic { b, c } => {
                Some(progression_hypothesis(b, c))
            }
            _ => None,
        }
    }

    /// Smallest element of `S`.
    pub fn min_element(&self) -> u64 {
        match self {
            RuleSet::Consecutive { .. } => 1,
            RuleSet::FiniteArithmetic { b, .. } | RuleSet::InfiniteArithmetic { b, .. } => *b,
            RuleSet::Explicit { elements } => elements[0],
        }
    }

    /// Membership of `s` in `S` (`Base`) or in `Z+ \ S` (`Complement`).
    /// Zero belongs to neither.
    pub fn contains(&self, side: ConstraintSide, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let in_base = match self {
            RuleSet::Consecutive { k } => s <= *k,
            RuleSet::FiniteArithmetic { b, c, i_max } => {
                s >= *b && (s - b).is_multiple_of(*c) && (s - b) / c <= *i_max
            }
            RuleSet::InfiniteArithmetic { b, c } => s >= *b && (s - b).is_multiple_of(*c),
            RuleSet::Explicit { elements } => elements.binary_search(&s).is_ok(),
        };
        match side {
            ConstraintSide::Base => in_base,
            ConstraintSide::Complement => !in_base,
        }
    }

    /// Elements of `S` not exceeding `n`, ascending.
    pub(crate) fn base_moves_up_to(&self, n: u64) -> Vec<u64> {
        match self {
            RuleSet::Consecutive { k } => (1..=n.min(*k)).collect(),
            RuleSet::FiniteArithmetic { b, c, i_max } => (0..=*i_max)
                .map(|i| b + i * c)
                .take_while(|&s| s <= n)
                .collect(),
            RuleSet::InfiniteArithmetic { b, c } => {
                std::iter::successors(Some(*b), |s| s.checked_add(*c))
                    .take_while(|&s| s <= n)
                    .collect()
            }
            RuleSet::Explicit { elements } => {
                elements.iter().copied().take_while(|&s| s <= n).collect()
            }
        }
    }

    fn family(&self) -> &'static str {
        match self {
            RuleSet::Consecutive { .. } => "consecutive",
            RuleSet::FiniteArithmetic { .. } => "arith",
            RuleSet::InfiniteArithmetic { .. } => "inf-arith",
            RuleSet::Explicit { .. } => "set",
        }
    }

    pub(crate) fn wrong_family(&self, expected: &'static str) -> Error {
        Error::WrongFamily {
            expected,
            got: self.family().to_string(),
        }
    }
}

/// `(c + 2) / 2 <= b < c`, compared exactly as `2b >= c + 2`.
pub fn progression_hypothesis(b: u64, c: u64) -> bool {
    b < c && 2 * b >= c + 2
}

/// Free-function form of [`RuleSet::contains`].
pub fn contains(rules: &RuleSet, side: ConstraintSide, s: u64) -> bool {
    rules.contains(side, s)
}

/// Legal move sizes from `pos`, ascending.
pub fn legal_moves(rules: &RuleSet, pos: Position) -> Vec<u64> {
    match pos.side {
        ConstraintSide::Base => rules.base_moves_up_to(pos.n),
        ConstraintSide::Complement => (1..=pos.n)
            .filter(|&s| rules.contains(ConstraintSide::Complement, s))
            .collect(),
    }
}

/// Every option of `pos`: each legal move paired with both constraints.
pub fn options(rules: &RuleSet, pos: Position) -> Vec<Position> {
    legal_moves(rules, pos)
        .into_iter()
        .flat_map(|s| ConstraintSide::ALL.map(|side| Position::new(pos.n - s, side)))
        .collect()
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSet::Consecutive { k } => write!(f, "k={k}"),
            RuleSet::FiniteArithmetic { b, c, i_max } => write!(f, "arith:{b},{c},{i_max}"),
            RuleSet::InfiniteArithmetic { b, c } => write!(f, "inf-arith:{b},{c}"),
            RuleSet::Explicit { elements } => {
                f.write_str("set:")?;
                for (i, e) in elements.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_number(token: &str) -> Result<u64> {
    let token = token.trim();
    token.parse::<u64>().map_err(|e| Error::Parse {
        token: token.to_string(),
        reason: e.to_string(),
    })
}

fn parse_list(body: &str, expected: Option<usize>, whole: &str) -> Result<Vec<u64>> {
    let values = body
        .split(',')
        .map(parse_number)
        .collect::<Result<Vec<_>>>()?;
    if let Some(expected) = expected {
        if values.len() != expected {
            return Err(Error::Parse {
                token: whole.to_string(),
                reason: format!(
                    "expected {expected} comma-separated values, got {}",
                    values.len()
                ),
            });
        }
    }
    Ok(values)
}

impl FromStr for RuleSet {
    type Err = Error;

    /// Parses `k=K`, `arith:B,C,IMAX`, `inf-arith:B,C` or `set:a,b,...`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("k=") {
            return RuleSet::consecutive(parse_number(rest)?);
        }
        let Some((family, body)) = text.split_once(':') else {
            return Err(Error::Parse {
                token: text.to_string(),
                reason: "expected `k=K`, `arith:B,C,IMAX`, `inf-arith:B,C` or `set:a,b,...`".into(),
            });
        };
        match family.trim() {
            "arith" => {
                let v = parse_list(body, Some(3), text)?;
                RuleSet::finite_arithmetic(v[0], v[1], v[2])
            }
            "inf-arith" => {
                let v = parse_list(body, Some(2), text)?;
                RuleSet::infinite_arithmetic(v[0], v[1])
            }
            "set" => RuleSet::explicit(parse_list(body, None, text)?),
            other => Err(Error::Parse {
                token: other.to_string(),
                reason: "unknown ruleset family".into(),
            }),
        }
    }
}
