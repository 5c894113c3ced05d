//! Splitting a heap of bricks into equal bodies by handing them out one at a time.

use serde::{Deserialize, Serialize};

use super::CalendarError;

/// Largest heap the splitting routines will hand out brick by brick.
pub const MAX_BRICKS: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrickCollection {
    total: u64,
    bodies: Vec<u64>,
}

impl BrickCollection {
    pub fn new(bodies: Vec<u64>) -> Result<Self, CalendarError> {
        if bodies.is_empty() || bodies.contains(&0) {
            return Err(CalendarError::InvalidCount("bodies must be non-empty and positive"));
        }
        let total = bodies
            .iter()
            .try_fold(0u64, |acc, b| acc.checked_add(*b))
            .ok_or(CalendarError::InvalidCount("too many bricks"))?;
        Ok(BrickCollection { total, bodies })
    }

    /// One body holding everything.
    pub fn heap(total: u64) -> Result<Self, CalendarError> {
        BrickCollection::new(vec![total])
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn bodies(&self) -> &[u64] {
        &self.bodies
    }

    pub fn is_equal_partition(&self) -> bool {
        self.bodies.windows(2).all(|w| w[0] == w[1])
    }
}

/// Which body counts `equal_partitions_of` reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PartitionFilter {
    #[default]
    All,
    /// Only bodies of at least thirty bricks; for 720 these are the fifteen
    /// splits laid out in the altar texts.
    Attested,
}

/// Hand `total` bricks to `bodies` piles in turn, a full round at a time,
/// until a round can no longer be completed. Returns `(per_body, left_over)`.
pub fn round_robin(total: u64, bodies: u64) -> Result<(u64, u64), CalendarError> {
    if bodies == 0 {
        return Err(CalendarError::InvalidCount("at least one body is required"));
    }
    if total > MAX_BRICKS {
        return Err(CalendarError::InvalidCount("too many bricks to distribute"));
    }
    let (mut heap, mut per_body) = (total, 0);
    while heap >= bodies {
        heap -= bodies;
        per_body += 1;
    }
    Ok((per_body, heap))
}

/// All `(bodies, size)` pairs that split `total` evenly.
pub fn equal_partitions_of(total: u64, filter: PartitionFilter) -> Result<Vec<(u64, u64)>, CalendarError> {
    if total == 0 {
        return Err(CalendarError::InvalidCount("total must be at least 1"));
    }
    let mut out = Vec::new();
    for k in 1..=total {
        let (size, left) = round_robin(total, k)?;
        if left == 0 && (filter == PartitionFilter::All || size >= 30) {
            out.push((k, size));
        }
    }
    Ok(out)
}

/// Gather all bodies into one heap and deal it out into `k` equal bodies.
pub fn split_collection(c: &BrickCollection, k: u64) -> Result<BrickCollection, CalendarError> {
    let (size, remainder) = round_robin(c.total, k)?;
    if remainder != 0 {
        return Err(CalendarError::NoEqualSplit { total: c.total, bodies: k, remainder });
    }
    let k = usize::try_from(k).map_err(|_| CalendarError::InvalidCount("too many bodies"))?;
    BrickCollection::new(vec![size; k])
}
