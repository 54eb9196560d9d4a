use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::is_prime;
use crate::{Error, Result};

/// Dense polynomial over the prime field F_p, ascending coefficients,
/// no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(base: u32, mut e: u32, p: u32) -> u32 {
    let p64 = u64::from(p);
    let mut b = u64::from(base) % p64;
    let mut acc = 1 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        e >>= 1;
    }
    acc as u32
}

impl FpPoly {
    /// Builds a polynomial from ascending coefficients, reducing them mod `p`.
    pub fn new(p: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return Err(Error::NotPrime(u64::from(p)));
        }
        Ok(Self::from_raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    /// Like [`FpPoly::new`] but accepts signed coefficients.
    pub fn from_i64(p: u32, coeffs: &[i64]) -> Result<Self> {
        let pi = i64::from(p);
        Self::new(p, coeffs.iter().map(|c| c.rem_euclid(pi) as u32).collect())
    }

    pub(crate) fn from_raw(p: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::from_raw(p, vec![1 % p])
    }

    /// The monomial `x`.
    pub fn x(p: u32) -> Self {
        Self::from_raw(p, vec![0, 1])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ((u64::from(a) + u64::from(b)) % u64::from(self.p)) as u32
            })
            .collect();
        Self::from_raw(self.p, c)
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self::from_raw(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: u32) -> Self {
        let p = u64::from(self.p);
        let s = u64::from(s) % p;
        Self::from_raw(
            self.p,
            self.coeffs.iter().map(|&c| (u64::from(c) * s % p) as u32).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = u64::from(self.p);
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + u64::from(a) * u64::from(b)) % p;
            }
        }
        Self::from_raw(self.p, out.into_iter().map(|c| c as u32).collect())
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let p = u64::from(self.p);
        let lead_inv = u64::from(inv_mod(divisor.leading(), self.p));
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| u64::from(c)).collect();
        if rem.len() <= dd {
            return Some((Self::zero(self.p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * lead_inv % p;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = c * u64::from(dc) % p;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
        rem.truncate(dd);
        Some((
            Self::from_raw(self.p, quot.into_iter().map(|c| c as u32).collect()),
            Self::from_raw(self.p, rem.into_iter().map(|c| c as u32).collect()),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus).expect("modulus is nonzero")
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus).expect("modulus is nonzero");
        let mut acc = Self::one(self.p).rem(modulus).expect("modulus is nonzero");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            e >>= 1;
        }
        acc
    }

    /// Horner evaluation at a residue.
    pub fn eval(&self, x: u32) -> u32 {
        let p = u64::from(self.p);
        let x = u64::from(x) % p;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x + u64::from(c)) % p) as u32
    }

    /// Irreducibility over F_p: no factor of degree in `1..=deg/2`, decided by
    /// `gcd(x^(p^k) - x mod f, f) = 1` for each such `k`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            Some(d) if d >= 1 && self.is_monic() => d,
            _ => return Err(Error::NotMonic),
        };
        let x = Self::x(self.p);
        let mut frob = x.rem(self).expect("nonzero");
        for _ in 1..=d / 2 {
            frob = frob.pow_mod(u64::from(self.p), self);
            if frob.sub(&x).gcd(self).degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lexicographically smallest monic irreducible of degree `d` over F_p, where
/// the order reads the tail coefficients `x^0..x^(d-1)` as a base-`p` integer
/// with the constant term least significant.
pub fn find_irreducible(p: u32, d: u32) -> Result<FpPoly> {
    if !is_prime(u64::from(p)) {
        return Err(Error::NotPrime(u64::from(p)));
    }
    if d == 0 {
        return Err(Error::Precondition("extension degree must be >= 1".into()));
    }
    let d = d as usize;
    let mut tail = vec![0u32; d];
    loop {
        let mut coeffs = tail.clone();
        coeffs.push(1);
        let f = FpPoly::from_raw(p, coeffs);
        if f.is_irreducible()? {
            return Ok(f);
        }
        // base-p increment, constant term first
        let mut i = 0;
        loop {
            if i == d {
                unreachable!("an irreducible polynomial exists in every degree");
            }
            tail[i] += 1;
            if tail[i] == p {
                tail[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[p={}]({})", self.p, self)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
