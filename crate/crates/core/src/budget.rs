use crate::error::Error;

/// Work units granted per millisecond of a wall-clock budget. Fixed so that
/// the same budget gives the same answer (or the same timeout) everywhere.
pub const SUBSETS_PER_MILLI: u64 = 20_000;

/// Cap on the number of candidate subsets a search may examine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    max_subsets: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_subsets: None };

    pub fn subsets(max: u64) -> Self {
        Self { max_subsets: Some(max) }
    }

    pub fn from_millis(ms: u64) -> Self {
        Self::subsets(ms.saturating_mul(SUBSETS_PER_MILLI))
    }

    pub fn max_subsets(&self) -> Option<u64> {
        self.max_subsets
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter { used: 0, limit: self.max_subsets.unwrap_or(u64::MAX) }
    }
}

#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    /// Charges one subset; `Err(Exhausted)` once the cap is exceeded.
    #[inline]
    pub(crate) fn tick(&mut self) -> core::result::Result<(), Exhausted> {
        self.used += 1;
        if self.used > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn timeout(&self, upper_bound: usize) -> Error {
        Error::Timeout { examined: self.limit, upper_bound }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Exhausted;
