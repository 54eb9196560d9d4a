use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gf::FpPoly;
use crate::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients, ascending,
/// no trailing zeros. Content and sign are kept exactly as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

/// Dense polynomial with exact rational coefficients, ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(c: &mut Vec<T>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Coefficientwise reduction into F_p.
    pub fn mod_p(&self, p: u32) -> Result<FpPoly> {
        let pb = BigInt::from(p);
        let reduced = self
            .coeffs
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                u32::try_from(&r).expect("residue below p")
            })
            .collect();
        FpPoly::new(p, reduced)
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::from_i64(coeffs).to_qpoly()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    match other.coeffs.get(i) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division over Q; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::default(), self.clone()));
        }
        let lead = &divisor.coeffs[dd];
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_zpoly(&self) -> Option<ZPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(ZPoly::new)
    }
}

/// Quotient of an exact division; a nonzero remainder is an error that carries it.
pub fn poly_div_exact(num: &QPoly, den: &QPoly) -> Result<QPoly> {
    let (q, r) = num
        .div_rem(den)
        .ok_or_else(|| Error::Precondition("division by the zero polynomial".into()))?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            remainder_degree: r.degree().unwrap_or(0),
            remainder: r.to_string(),
        })
    }
}

fn write_terms<T, F>(f: &mut fmt::Formatter<'_>, coeffs: &[T], is_neg: F) -> fmt::Result
where
    T: fmt::Display + Zero + One + PartialEq + Clone + core::ops::Neg<Output = T>,
    F: Fn(&T) -> bool,
{
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = if is_neg(c) { (true, -c.clone()) } else { (false, c.clone()) };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let unit = mag.is_one();
        match i {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "x")?,
            1 => write!(f, "{mag}*x")?,
            _ if unit => write!(f, "x^{i}")?,
            _ => write!(f, "{mag}*x^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, |c: &BigInt| c.is_negative())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, |c: &BigRational| c.is_negative())
    }
}

impl From<ZPoly> for QPoly {
    fn from(z: ZPoly) -> Self {
        z.to_qpoly()
    }
}

pub(crate) fn big_to_string(x: &BigInt) -> String {
    x.to_string()
}
