//! Work limits for exhaustive enumeration.
//!
//! Every enumeration estimates its cost in elementary steps (one distance
//! evaluation, one neighbour visit, one codeword) before it starts and
//! refuses to run when the estimate passes the limit.

use crate::error::{Error, Result};

/// Environment variable that overrides the default limit.
pub const BUDGET_ENV: &str = "COVBOUND_BUDGET";

/// Default limit: 2^26 elementary steps.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { limit: DEFAULT_BUDGET }
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    /// Reads `COVBOUND_BUDGET`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn check(&self, needed: u128) -> Result<()> {
        if needed > self.limit as u128 {
            Err(Error::BudgetExceeded {
                needed,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub fn pow_sat(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Volume of a Hamming ball of radius `r` in `F_q^n`, saturating.
pub fn ball_volume(q: usize, n: usize, r: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for j in 0..=r.min(n) {
        if j > 0 {
            binom = binom.saturating_mul((n - j + 1) as u128) / j as u128;
        }
        total = total.saturating_add(binom.saturating_mul(pow_sat(q - 1, j)));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_respects_limit() {
        let b = Budget::new(100);
        assert!(b.check(100).is_ok());
        assert_eq!(
            b.check(101),
            Err(Error::BudgetExceeded {
                needed: 101,
                limit: 100
            })
        );
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(ball_volume(2, 7, 1), 8);
        assert_eq!(ball_volume(2, 23, 3), 2048);
        assert_eq!(ball_volume(3, 11, 2), 243);
        assert_eq!(ball_volume(2, 16, 3), 697);
    }
}
