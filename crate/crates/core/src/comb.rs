//! Checked binomial coefficients for multiplicity bookkeeping.

use crate::error::{Result, SpectraError};

/// `C(n, k)` with overflow detection; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| SpectraError::MultiplicityOverflow(format!("C({n}, {k})")))?;
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| SpectraError::MultiplicityOverflow(format!("C({n}, {k})")))
}
