//! Per-job engine controls shared by every ring derived from one job.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_PAIR_BUDGET: u64 = 10_000_000;

/// S-pair budget and verification switch. Counters are atomic so parallel
/// table cells draw on one shared budget.
#[derive(Debug)]
pub struct EngineSettings {
    pair_limit: AtomicU64,
    pairs_used: AtomicU64,
    verify: AtomicBool,
}

impl Default for EngineSettings {
    fn default() -> Self {
        EngineSettings {
            pair_limit: AtomicU64::new(DEFAULT_PAIR_BUDGET),
            pairs_used: AtomicU64::new(0),
            verify: AtomicBool::new(false),
        }
    }
}

impl EngineSettings {
    pub fn set_pair_limit(&self, limit: u64) {
        self.pair_limit.store(limit, Ordering::Relaxed);
    }

    pub fn pair_limit(&self) -> u64 {
        self.pair_limit.load(Ordering::Relaxed)
    }

    pub fn pairs_used(&self) -> u64 {
        self.pairs_used.load(Ordering::Relaxed)
    }

    pub fn reset_usage(&self) {
        self.pairs_used.store(0, Ordering::Relaxed);
    }

    /// Records `n` processed pairs; fails once the running total passes the limit.
    pub fn charge(&self, n: u64) -> Result<()> {
        let used = self.pairs_used.fetch_add(n, Ordering::Relaxed) + n;
        let limit = self.pair_limit();
        if used > limit {
            return Err(Error::BudgetExceeded(limit));
        }
        Ok(())
    }

    pub fn set_verify(&self, on: bool) {
        self.verify.store(on, Ordering::Relaxed);
    }

    pub fn verify(&self) -> bool {
        self.verify.load(Ordering::Relaxed)
    }
}
