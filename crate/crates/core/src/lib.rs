//! Sprague–Grundy analysis of comply/constrain subtraction games.
//!
//! In `(n, S)` the player to move removes `s` stones for some `s` in the
//! current set and then chooses whether the opponent must next draw from `S`
//! or from its complement. The crate provides
//!
//! * move generation for consecutive, arithmetic-progression and explicit
//!   subtraction sets ([`game`]),
//! * a bottom-up mex engine that tabulates both sides ([`engine`]),
//! * closed forms for `S = {1..k}` checked against the engine ([`consecutive`]),
//! * period and block-structure predictions for finite progressions, with
//!   empirical period detection ([`arith`]).

pub mod arith;
pub mod consecutive;
pub mod engine;
pub mod error;
pub mod game;

pub use arith::{
    check_finite_infinite_agreement, detect_period, predict_block_value, predicted_period,
    verify_arith, ArithOptions, BlockPrediction, PeriodReport, Periodicity, Progression,
    ValueClass,
};
pub use consecutive::{
    closed_form_base, closed_form_complement, verify_consecutive, ConsecutiveCase,
    VerificationReport,
};
pub use engine::{
    build_table, grundy, mex, winning_moves, EngineConfig, GrundyTable, GrundyValue, Move,
};
pub use error::{Error, Result};
pub use game::{contains, legal_moves, options, ConstraintSide, Position, RuleSet};
