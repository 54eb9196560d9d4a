use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::gf::is_prime;
use crate::{Error, Result};

/// Trial division by every prime up to `bound`.
///
/// Returns the exponents found and the unfactored cofactor, which carries the
/// sign of `n` (so a fully factored `n` leaves `±1`).
pub fn factor_small(n: &BigInt, bound: u64) -> Result<(BTreeMap<u64, u32>, BigInt)> {
    if n.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    if bound < 2 {
        return Err(Error::Precondition("trial division bound must be >= 2".into()));
    }
    let mut rest = n.clone();
    let mut found = BTreeMap::new();
    for d in (2..=bound).filter(|&d| is_prime(d)) {
        if rest.abs().is_one() {
            break;
        }
        let big_d = BigInt::from(d);
        let mut k = 0;
        loop {
            let (q, r) = rest.div_rem(&big_d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            k += 1;
        }
        if k > 0 {
            found.insert(d, k);
        }
    }
    Ok((found, rest))
}
