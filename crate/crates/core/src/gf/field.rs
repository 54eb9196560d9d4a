use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{find_irreducible, gcd_u64, is_prime, prime_divisors, FpPoly, PrimePower};
use crate::{Error, Result};

/// Default upper bound on the number of field elements.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// An element of a [`FieldCtx`].
///
/// The wrapped value is the canonical index of the coefficient vector with
/// respect to the power basis of the modulus, read as a base-`p` integer with
/// the constant coordinate least significant. Prime-field constants `c` are
/// therefore the indices `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(p^d) with a fixed modulus and a canonical generator.
///
/// Immutable after construction; share it freely between threads.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    d: u32,
    size: u32,
    modulus: FpPoly,
    generator: FieldElem,
    /// `exp[k] = g^k` for `k` in `0..2(size-1)` so products skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, or `NO_LOG` when `1 + g^k = 0`.
    zech: Vec<u32>,
}

impl core::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish_non_exhaustive()
    }
}

impl FieldCtx {
    pub fn new(p: u32, d: u32) -> Result<Self> {
        Self::with_cap(p, d, DEFAULT_FIELD_CAP)
    }

    /// GF(q²), the field every binomial lives in.
    pub fn for_q_squared(q: PrimePower, cap: u64) -> Result<Self> {
        Self::with_cap(q.p(), 2 * q.n(), cap)
    }

    pub fn with_cap(p: u32, d: u32, cap: u64) -> Result<Self> {
        if !is_prime(u64::from(p)) {
            return Err(Error::NotPrime(u64::from(p)));
        }
        if d == 0 {
            return Err(Error::Precondition("extension degree must be >= 1".into()));
        }
        let size = u64::from(p)
            .checked_pow(d)
            .filter(|&s| s <= cap && s <= u64::from(u32::MAX / 2))
            .ok_or(Error::FieldTooLarge { p: u64::from(p), d, cap })?;
        let size = size as u32;
        let modulus = find_irreducible(p, d)?;
        let mut ctx = FieldCtx {
            p,
            d,
            size,
            modulus,
            generator: FieldElem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
        };
        ctx.generator = ctx.search_generator();
        ctx.build_tables();
        Ok(ctx)
    }

    /// First element, in canonical index order, whose order is `size - 1`.
    fn search_generator(&self) -> FieldElem {
        let n = u64::from(self.size - 1);
        let primes = prime_divisors(n);
        (1..self.size)
            .map(FieldElem)
            .find(|&g| {
                primes
                    .iter()
                    .all(|&l| self.pow_reference(g, n / l) != FieldElem::ONE)
            })
            .expect("the multiplicative group is cyclic")
    }

    fn build_tables(&mut self) {
        let n = (self.size - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![NO_LOG; self.size as usize];
        let mut cur = FieldElem::ONE;
        for k in 0..n {
            exp[k] = cur.0;
            exp[k + n] = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.mul_reference(cur, self.generator);
        }
        debug_assert_eq!(cur, FieldElem::ONE);
        let p = self.p;
        let zech = (0..n)
            .map(|k| {
                // adding one only touches the constant coordinate
                let idx = exp[k];
                let c0 = idx % p;
                let plus_one = idx - c0 + (c0 + 1) % p;
                if plus_one == 0 {
                    NO_LOG
                } else {
                    log[plus_one as usize]
                }
            })
            .collect();
        self.exp = exp;
        self.log = log;
        self.zech = zech;
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Number of elements, `p^d`.
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    fn group_order(&self) -> u32 {
        self.size - 1
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.size).map(FieldElem)
    }

    pub fn elem(&self, index: u32) -> Result<FieldElem> {
        if index < self.size {
            Ok(FieldElem(index))
        } else {
            Err(Error::InvalidElement(alloc::format!(
                "index {index} outside field of size {}",
                self.size
            )))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.d as usize {
            return Err(Error::InvalidElement(alloc::format!(
                "{} coordinates for a degree-{} field",
                coeffs.len(),
                self.d
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement(alloc::format!(
                "coordinate {c} not reduced mod {}",
                self.p
            )));
        }
        Ok(FieldElem(
            coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c),
        ))
    }

    /// Coordinates of `x` in the power basis, length `d`.
    pub fn coeffs(&self, x: FieldElem) -> Vec<u32> {
        let mut idx = x.0;
        (0..self.d)
            .map(|_| {
                let c = idx % self.p;
                idx /= self.p;
                c
            })
            .collect()
    }

    /// `c0,c1,...,c(d-1)`
    pub fn format_coeffs(&self, x: FieldElem) -> String {
        let mut s = String::new();
        for (i, c) in self.coeffs(x).into_iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s
    }

    /// The prime-field constant `c mod p`.
    pub fn from_int(&self, c: i64) -> FieldElem {
        FieldElem(c.rem_euclid(i64::from(self.p)) as u32)
    }

    /// Discrete logarithm to the canonical generator; `None` for zero.
    pub fn log(&self, x: FieldElem) -> Option<u32> {
        match self.log[x.0 as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    /// `g^k` for the canonical generator `g`.
    pub fn gen_pow(&self, k: u64) -> FieldElem {
        FieldElem(self.exp[(k % u64::from(self.group_order())) as usize])
    }

    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let (lx, ly) = match (self.log(x), self.log(y)) {
            (None, _) => return y,
            (_, None) => return x,
            (Some(lx), Some(ly)) => (lx, ly),
        };
        let n = self.group_order();
        let diff = if ly >= lx { ly - lx } else { ly + n - lx };
        match self.zech[diff as usize] {
            NO_LOG => FieldElem::ZERO,
            z => FieldElem(self.exp[(lx + z) as usize]),
        }
    }

    pub fn neg(&self, x: FieldElem) -> FieldElem {
        match self.log(x) {
            None => x,
            Some(_) if self.p == 2 => x,
            Some(l) => FieldElem(self.exp[(l + self.group_order() / 2) as usize]),
        }
    }

    pub fn sub(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        match (self.log(x), self.log(y)) {
            (Some(lx), Some(ly)) => FieldElem(self.exp[(lx + ly) as usize]),
            _ => FieldElem::ZERO,
        }
    }

    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        let l = self.log(x).ok_or(Error::ZeroInverse)?;
        Ok(FieldElem(self.exp[((self.group_order() - l) % self.group_order()) as usize]))
    }

    pub fn div(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` for `e >= 0`, with `0^0 = 1`.
    pub fn pow_u64(&self, x: FieldElem, e: u64) -> FieldElem {
        match self.log(x) {
            None if e == 0 => FieldElem::ONE,
            None => FieldElem::ZERO,
            Some(l) => {
                let n = u64::from(self.group_order());
                FieldElem(self.exp[(u64::from(l) * (e % n) % n) as usize])
            }
        }
    }

    /// `x^e`; a negative exponent inverts first, so it requires `x != 0`.
    pub fn pow_i64(&self, x: FieldElem, e: i64) -> Result<FieldElem> {
        if e >= 0 {
            Ok(self.pow_u64(x, e as u64))
        } else {
            Ok(self.pow_u64(self.inv(x)?, e.unsigned_abs()))
        }
    }

    /// Arbitrary-precision exponent.
    pub fn pow(&self, x: FieldElem, e: &BigInt) -> Result<FieldElem> {
        let base = if e.is_negative() { self.inv(x)? } else { x };
        if base.is_zero() {
            return Ok(if e.sign() == num_bigint::Sign::NoSign { FieldElem::ONE } else { FieldElem::ZERO });
        }
        let n = BigInt::from(self.group_order());
        let reduced = e.abs().mod_floor(&n).to_u64().expect("reduced below group order");
        Ok(self.pow_u64(base, reduced))
    }

    /// Frobenius `x -> x^p`.
    pub fn frobenius(&self, x: FieldElem) -> FieldElem {
        self.pow_u64(x, u64::from(self.p))
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: FieldElem) -> Result<u64> {
        let l = self.log(x).ok_or_else(|| {
            Error::Precondition("the order of zero is undefined".into())
        })?;
        let n = u64::from(self.group_order());
        Ok(n / gcd_u64(u64::from(l), n))
    }

    /// Horner evaluation of a prime-field polynomial at `x`.
    pub fn eval_fp_poly(&self, f: &FpPoly, x: FieldElem) -> Result<FieldElem> {
        if f.p() != self.p {
            return Err(Error::CharacteristicMismatch { expected: self.p, found: f.p() });
        }
        Ok(f.coeffs().iter().rev().fold(FieldElem::ZERO, |acc, &c| {
            self.add(self.mul(acc, x), FieldElem(c))
        }))
    }

    /// Product computed from coordinates with schoolbook multiplication and
    /// reduction by the modulus. Independent of the lookup tables.
    pub fn mul_reference(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let fx = FpPoly::from_raw(self.p, self.coeffs(x));
        let fy = FpPoly::from_raw(self.p, self.coeffs(y));
        let prod = fx.mul_mod(&fy, &self.modulus);
        self.from_coeffs(prod.coeffs()).expect("reduced product")
    }

    /// Coordinate-wise sum, independent of the Zech table.
    pub fn add_reference(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let c: Vec<u32> = self
            .coeffs(x)
            .iter()
            .zip(self.coeffs(y))
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        self.from_coeffs(&c).expect("reduced sum")
    }

    /// Square-and-multiply over [`FieldCtx::mul_reference`].
    pub fn pow_reference(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut base = x;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_reference(acc, base);
            }
            base = self.mul_reference(base, base);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_relation() {
        let ctx = FieldCtx::new(2, 2).unwrap();
        assert_eq!(ctx.modulus().coeffs(), &[1, 1, 1]);
        let t = ctx.from_coeffs(&[0, 1]).unwrap();
        let t_plus_1 = ctx.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(ctx.mul(t, t), t_plus_1);
        assert_eq!(ctx.mul_reference(t, t), t_plus_1);
    }

    #[test]
    fn exhaustive_inverse_gf25() {
        let ctx = FieldCtx::new(5, 2).unwrap();
        for x in ctx.elements().skip(1) {
            assert_eq!(ctx.mul(ctx.inv(x).unwrap(), x), FieldElem::ONE);
        }
        assert_eq!(ctx.inv(FieldElem::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn tables_match_reference_arithmetic() {
        for (p, d) in [(2, 1), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6)] {
            let ctx = FieldCtx::new(p, d).unwrap();
            for x in ctx.elements() {
                for y in ctx.elements() {
                    assert_eq!(ctx.mul(x, y), ctx.mul_reference(x, y));
                    assert_eq!(ctx.add(x, y), ctx.add_reference(x, y));
                }
                assert_eq!(ctx.add(x, ctx.neg(x)), FieldElem::ZERO);
            }
        }
    }

    #[test]
    fn group_order_and_frobenius_closure() {
        for (p, d) in [(2, 4), (3, 4), (7, 2), (2, 8), (13, 2)] {
            let ctx = FieldCtx::new(p, d).unwrap();
            let size = u64::from(ctx.size());
            for x in ctx.elements() {
                assert_eq!(ctx.pow_u64(x, size), x);
                if !x.is_zero() {
                    assert_eq!(ctx.pow_u64(x, size - 1), FieldElem::ONE);
                    let ord = ctx.element_order(x).unwrap();
                    assert_eq!((size - 1) % ord, 0);
                    assert_eq!(ctx.pow_reference(x, ord), FieldElem::ONE);
                }
            }
        }
    }

    #[test]
    fn element_order_matches_naive_search() {
        let ctx = FieldCtx::new(3, 4).unwrap();
        for x in ctx.elements().skip(1) {
            let mut k = 1;
            let mut acc = x;
            while acc != FieldElem::ONE {
                acc = ctx.mul_reference(acc, x);
                k += 1;
            }
            assert_eq!(ctx.element_order(x).unwrap(), k);
        }
        assert_eq!(ctx.element_order(FieldElem::ONE).unwrap(), 1);
        assert!(ctx.element_order(FieldElem::ZERO).is_err());
        let gf16 = FieldCtx::new(2, 4).unwrap();
        assert!(gf16.elements().skip(1).any(|x| gf16.element_order(x).unwrap() == 5));
    }

    #[test]
    fn pow_with_negative_and_big_exponents() {
        let ctx = FieldCtx::new(3, 4).unwrap();
        let x = ctx.gen_pow(17);
        let big = BigInt::from(80u32).pow(5) * 7 + 3;
        assert_eq!(ctx.pow(x, &big).unwrap(), ctx.pow_u64(x, 3));
        assert_eq!(ctx.pow(x, &BigInt::from(-3)).unwrap(), ctx.inv(ctx.pow_u64(x, 3)).unwrap());
        assert_eq!(ctx.pow_i64(x, -1).unwrap(), ctx.inv(x).unwrap());
        assert_eq!(ctx.pow(FieldElem::ZERO, &BigInt::from(0)).unwrap(), FieldElem::ONE);
        assert_eq!(ctx.pow(FieldElem::ZERO, &BigInt::from(5)).unwrap(), FieldElem::ZERO);
        assert_eq!(ctx.pow(FieldElem::ZERO, &BigInt::from(-1)), Err(Error::ZeroInverse));
    }

    #[test]
    fn eval_prime_field_polynomials() {
        let ctx = FieldCtx::new(7, 4).unwrap();
        let f = FpPoly::new(7, alloc::vec![1, 1]).unwrap();
        assert_eq!(ctx.eval_fp_poly(&f, ctx.from_int(-1)).unwrap(), FieldElem::ZERO);
        let c = FpPoly::new(7, alloc::vec![5]).unwrap();
        assert_eq!(ctx.eval_fp_poly(&c, ctx.gen_pow(11)).unwrap(), ctx.from_int(5));
        let wrong = FpPoly::new(5, alloc::vec![1, 1]).unwrap();
        assert_eq!(
            ctx.eval_fp_poly(&wrong, FieldElem::ONE),
            Err(Error::CharacteristicMismatch { expected: 7, found: 5 })
        );
    }

    #[test]
    fn caps_and_element_validation() {
        assert!(matches!(FieldCtx::with_cap(2, 11, 1024), Err(Error::FieldTooLarge { .. })));
        assert!(FieldCtx::with_cap(2, 10, 1024).is_ok());
        assert_eq!(FieldCtx::new(4, 2).unwrap_err(), Error::NotPrime(4));
        let ctx = FieldCtx::new(5, 2).unwrap();
        assert!(ctx.from_coeffs(&[5, 0]).is_err());
        assert!(ctx.from_coeffs(&[1, 1, 1]).is_err());
        let x = ctx.from_coeffs(&[3, 4]).unwrap();
        assert_eq!(x.index(), 3 + 4 * 5);
        assert_eq!(ctx.coeffs(x), [3, 4]);
        assert_eq!(ctx.format_coeffs(x), "3,4");
        assert!(ctx.elem(25).is_err());
    }
}
