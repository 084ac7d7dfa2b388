use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Cooperative cancellation token shared by long-running searches.
///
/// Cloning shares the cancellation flag. A budget with no deadline that is
/// never cancelled lets every search run to completion.
#[derive(Debug, Clone, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    cancelled: Arc<AtomicBool>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(limit: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + limit),
            cancelled: Arc::default(),
        }
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn is_exhausted(&self) -> bool {
        self.cancelled.load(Ordering::Relaxed)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn check(&self) -> Result<()> {
        if self.is_exhausted() {
            Err(Error::Budget)
        } else {
            Ok(())
        }
    }
}

/// Amortizes budget checks over many search nodes.
pub(crate) struct Ticker<'a> {
    budget: Option<&'a Budget>,
    count: u32,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(budget: Option<&'a Budget>) -> Self {
        Ticker { budget, count: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.count = self.count.wrapping_add(1);
        match self.budget {
            Some(b) if self.count & 0xfff == 0 => b.check(),
            _ => Ok(()),
        }
    }
}
