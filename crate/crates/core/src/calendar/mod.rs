//! Brick partitions, context-bound tokens, and the day-counting calendar.

mod bricks;
mod days;
mod tokens;

pub use bricks::{equal_partitions_of, round_robin, split_collection, BrickCollection, PartitionFilter};
pub use days::{
    simulate, tithi_name, Ayana, CalendarConfig, CalendarState, DayEvents, Paksha, SimulationReport,
    TimeUnits, YUGA_YEARS,
};
pub use tokens::{fold_diacritics, TokenRegistry};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CalendarError {
    #[error("no equal split exists: {total} into {bodies} leaves {remainder}")]
    NoEqualSplit { total: u64, bodies: u64, remainder: u64 },
    #[error("{0}")]
    InvalidCount(&'static str),
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("{0:?} is ambiguous without context")]
    AmbiguousWithoutContext(String),
    #[error("{token:?} has no referent in context {context:?}")]
    NoReferent { token: String, context: String },
    #[error("tithi {0} out of range 1..15")]
    TithiOutOfRange(u32),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("invalid config: {0}")]
    InvalidConfig(&'static str),
}
