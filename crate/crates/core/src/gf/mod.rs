//! Prime-power fields GF(p^d).
//!
//! A [`FieldCtx`] fixes a monic irreducible modulus (the lexicographically
//! smallest one, so every run builds the same field) and precomputes
//! exponential, logarithm and Zech tables over a canonical multiplicative
//! generator. Elements are [`FieldElem`] handles carrying the canonical index
//! of their coefficient vector.

mod field;
mod fppoly;

use alloc::vec::Vec;

pub use field::{FieldCtx, FieldElem, DEFAULT_FIELD_CAP};
pub use fppoly::{find_irreducible, FpPoly};

use crate::{Error, Result};

/// `q = p^n` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    p: u32,
    n: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return Err(Error::NotPrime(u64::from(p)));
        }
        if n == 0 {
            return Err(Error::Precondition("prime power exponent must be >= 1".into()));
        }
        let q = u64::from(p)
            .checked_pow(n)
            .ok_or_else(|| Error::Precondition("prime power overflows u64".into()))?;
        Ok(Self { p, n, q })
    }

    /// Decomposes `q` as `p^n`.
    pub fn from_q(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = smallest_prime_factor(q);
        let mut rest = q;
        let mut n = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        let p = u32::try_from(p).map_err(|_| Error::NotPrimePower(q))?;
        Ok(Self { p, n, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// Accepts `49` or `7^2`.
impl core::str::FromStr for PrimePower {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(alloc::format!("`{s}` is not a prime power (expected q or p^n)"));
        match s.trim().split_once('^') {
            Some((p, n)) => {
                let p: u32 = p.trim().parse().map_err(|_| bad())?;
                let n: u32 = n.trim().parse().map_err(|_| bad())?;
                Self::new(p, n)
            }
            None => Self::from_q(s.trim().parse().map_err(|_| bad())?),
        }
    }
}

impl core::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.n == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.n)
        }
    }
}

pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let d = smallest_prime_factor(n);
        out.push(d);
        while n.is_multiple_of(d) {
            n /= d;
        }
    }
    out
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
