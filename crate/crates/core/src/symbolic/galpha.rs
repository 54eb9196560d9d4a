use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::poly::{big_to_string, poly_div_exact, QPoly, ZPoly};
use crate::{Error, Result};

/// Generalized binomial coefficient `x(x-1)...(x-n+1) / n!` for rational `x`.
pub fn gen_binomial(x: &BigRational, n: u32) -> BigRational {
    let mut num = BigRational::one();
    let mut den = BigInt::one();
    for t in 0..n {
        num *= x - BigRational::from_integer(BigInt::from(t));
        den *= BigInt::from(t + 1);
    }
    num / BigRational::from_integer(den)
}

fn check_alpha(alpha: u32) -> Result<()> {
    if alpha > 0 && (alpha + 1).is_multiple_of(5) {
        Ok(())
    } else {
        Err(Error::Precondition(alloc::format!(
            "alpha must be positive with alpha + 1 divisible by 5, got {alpha}"
        )))
    }
}

/// The polynomial
/// `P_α(v) = Σ_{i=0}^{α} (-1)^i C(α,i) Σ_{l=0}^{4} C(i + (4α-1+l)/5, α) v^(5i+l)`
/// of degree `5α + 4`.
pub fn expand_p(alpha: u32) -> Result<QPoly> {
    check_alpha(alpha)?;
    let a = alpha as usize;
    let mut coeffs = vec![BigRational::zero(); 5 * a + 5];
    let five = BigInt::from(5);
    let mut choose = BigInt::one(); // C(α, i)
    for i in 0..=a {
        let signed = if i % 2 == 0 { choose.clone() } else { -choose.clone() };
        for l in 0..5 {
            let upper = BigRational::from_integer(BigInt::from(i))
                + BigRational::new(BigInt::from(4 * a + l) - 1, five.clone());
            coeffs[5 * i + l] = gen_binomial(&upper, alpha) * BigRational::from_integer(signed.clone());
        }
        choose = choose * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    Ok(QPoly::new(coeffs))
}

/// `v(1 + v + v² + v³ + v⁴)`, the common factor of every `P_α`.
pub fn cyclotomic_factor() -> QPoly {
    QPoly::from_i64(&[0, 1, 1, 1, 1, 1])
}

/// `g_α` together with the exponent `e` such that
/// `P_α(v) = v(1+v+v²+v³+v⁴) · 5^(-e) · g_α(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAlpha {
    pub alpha: u32,
    pub e: u32,
    pub g: ZPoly,
}

/// Largest `k` with `5^k | n`, or `None` when `n` has another prime factor.
fn five_adic_power(n: &BigInt) -> Option<u32> {
    let five = BigInt::from(5);
    let mut k = 0;
    let mut rest = n.clone();
    while !rest.is_one() {
        let (q, r) = rest.div_rem(&five);
        if !r.is_zero() {
            return None;
        }
        rest = q;
        k += 1;
    }
    Some(k)
}

/// Divides `P_α` by `v(1+v+v²+v³+v⁴)` and clears the denominators, which must
/// all be powers of 5.
pub fn extract_g(alpha: u32) -> Result<GAlpha> {
    let quotient = poly_div_exact(&expand_p(alpha)?, &cyclotomic_factor())?;
    let mut e = 0;
    for (index, c) in quotient.coeffs().iter().enumerate() {
        let k = five_adic_power(c.denom()).ok_or_else(|| Error::NonFivePowerDenominator {
            index,
            denominator: big_to_string(c.denom()),
        })?;
        e = e.max(k);
    }
    let scale = BigRational::from_integer(BigInt::from(5).pow(e));
    let scaled: Vec<BigRational> = quotient.coeffs().iter().map(|c| c * &scale).collect();
    let g = QPoly::new(scaled).to_zpoly().expect("denominators cleared by 5^e");
    Ok(GAlpha { alpha, e, g })
}
