use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Hard cap on exhaustive enumerations. Exceeding it is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_count: u64,
    pub time_ceiling: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_count: 10_000_000,
            time_ceiling: None,
        }
    }
}

impl Budget {
    pub fn new(max_count: u64) -> Self {
        Budget {
            max_count,
            time_ceiling: None,
        }
    }

    pub fn with_time_ceiling(mut self, ceiling: Duration) -> Self {
        self.time_ceiling = Some(ceiling);
        self
    }

    /// Fails with the exact projected count when `needed` is over budget.
    pub fn admit(&self, needed: u128) -> Result<()> {
        if needed > self.max_count as u128 {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.max_count,
            })
        } else {
            Ok(())
        }
    }

    pub fn start(&self) -> Clock {
        Clock {
            started: Instant::now(),
            ceiling: self.time_ceiling,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Clock {
    started: Instant,
    ceiling: Option<Duration>,
}

impl Clock {
    pub fn check(&self) -> Result<()> {
        match self.ceiling {
            Some(c) if self.started.elapsed() > c => Err(Error::TimeExceeded(c.as_secs())),
            _ => Ok(()),
        }
    }
}

/// `base^exp` as an exact count, saturating at `u128::MAX`.
pub fn power(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == 0 {
            return 0;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admit_reports_projected_count() {
        let b = Budget::new(100);
        assert!(b.admit(100).is_ok());
        assert_eq!(
            b.admit(power(3, 9)),
            Err(Error::BudgetExceeded {
                needed: 19683,
                budget: 100
            })
        );
    }

    #[test]
    fn power_edge_cases() {
        assert_eq!(power(0, 0), 1);
        assert_eq!(power(0, 3), 0);
        assert_eq!(power(2, 10), 1024);
        assert_eq!(power(10, 100), u128::MAX);
    }
}
