//! Hermite-criterion machinery for `f = a·x + x^(r(q-1)+1)`.
//!
//! Expanding `Σ_x f(x)^(α + (q-1-α)q)` over GF(q²) leaves
//! `-a^((α+1)(1-q)) · Λ(q, α, a)` with
//!
//! ```text
//! Λ(q, α, a) = Σ C(α, i) C(q-1-α, j) a^(-i-jq)
//! ```
//!
//! summed over `0 <= i <= α`, `0 <= j <= q-1-α` with
//! `-α-1 + r(i-j) ∈ Γ(q, α)`, the multiples of `q+1` in the window
//! `[(r-1)(α+1) - rq, (r-1)α - 1]`. `f` permutes GF(q²) iff 0 is its only
//! root and `Λ(q, α, a) = 0` for every `0 <= α <= q-1`.

use alloc::vec::Vec;

use crate::binomial::{self, check_ctx, check_r, BinomialSpec};
use crate::gf::{FieldCtx, FieldElem, PrimePower};
use crate::symbolic::GAlpha;
use crate::{Error, Result};

/// `Γ(q, α)` for a given `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub q: u64,
    pub alpha: u64,
    pub r: u32,
    /// Multiples of `q+1` in the window, strictly increasing.
    pub members: Vec<i64>,
}

impl GammaSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The members divided by `q+1`.
    pub fn multipliers(&self) -> Vec<i64> {
        let q1 = (self.q + 1) as i64;
        self.members.iter().map(|m| m / q1).collect()
    }
}

/// Value of `Λ` together with the number of `(i, j)` pairs that satisfied the
/// window condition and the index bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaValue {
    pub value: FieldElem,
    pub term_count: usize,
}

fn check_alpha(q: u64, alpha: u64) -> Result<()> {
    if alpha < q {
        Ok(())
    } else {
        Err(Error::Precondition(alloc::format!("alpha = {alpha} must be at most q - 1 = {}", q - 1)))
    }
}

/// The window `[(r-1)(α+1) - rq, (r-1)α - 1]` and its multiples of `q+1`.
pub fn gamma(q: u64, alpha: u64, r: u32) -> Result<GammaSet> {
    check_alpha(q, alpha)?;
    let (qi, ai, ri) = (q as i64, alpha as i64, i64::from(r));
    let low = (ri - 1) * (ai + 1) - ri * qi;
    let high = (ri - 1) * ai - 1;
    let q1 = qi + 1;
    let first = -((-low).div_euclid(q1));
    let last = high.div_euclid(q1);
    Ok(GammaSet { q, alpha, r, members: (first..=last).map(|k| k * q1).collect() })
}

/// `C(n, m) mod p` by Lucas' theorem; zero when `m < 0` or `m > n`.
pub fn lucas_binomial(n: u64, m: i64, p: u32) -> u32 {
    if m < 0 || m as u64 > n {
        return 0;
    }
    let p64 = u64::from(p);
    let (mut n, mut m) = (n, m as u64);
    let mut acc = 1u64;
    while m > 0 || n > 0 {
        let (nd, md) = (n % p64, m % p64);
        if md > nd {
            return 0;
        }
        acc = acc * small_binomial_mod(nd, md, p64) % p64;
        n /= p64;
        m /= p64;
    }
    acc as u32
}

/// `C(n, m) mod p` for `m <= n < p` via the multiplicative formula.
fn small_binomial_mod(n: u64, m: u64, p: u64) -> u64 {
    let m = m.min(n - m);
    let mut num = 1u64;
    let mut den = 1u64;
    for t in 0..m {
        num = num * ((n - t) % p) % p;
        den = den * ((t + 1) % p) % p;
    }
    num * mod_pow(den, p - 2, p) % p
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `Λ(q, α, a)` summed term by term. Indices are visited with `k` (the
/// `Γ` multiplier) outer and `i` inner.
pub fn lambda_direct(
    ctx: &FieldCtx,
    q: PrimePower,
    alpha: u64,
    a: FieldElem,
    r: u32,
) -> Result<LambdaValue> {
    check_ctx(ctx, q)?;
    let a_inv = ctx.inv(a)?;
    let qv = q.q();
    let window = gamma(qv, alpha, r)?;
    let beta = qv - 1 - alpha;
    let (ai, bi, ri) = (alpha as i64, beta as i64, i64::from(r));
    let mut value = FieldElem::ZERO;
    let mut term_count = 0;
    for &n in &window.members {
        // r(i - j) = α + 1 + n
        let t = ai + 1 + n;
        if t.rem_euclid(ri) != 0 {
            continue;
        }
        let diff = t / ri;
        for i in 0..=ai {
            let j = i - diff;
            if !(0..=bi).contains(&j) {
                continue;
            }
            term_count += 1;
            let coef = u64::from(lucas_binomial(alpha, i, q.p()))
                * u64::from(lucas_binomial(beta, j, q.p()))
                % u64::from(q.p());
            if coef == 0 {
                continue;
            }
            let power = ctx.pow_u64(a_inv, i as u64 + j as u64 * qv);
            value = ctx.add(value, ctx.mul(ctx.from_int(coef as i64), power));
        }
    }
    Ok(LambdaValue { value, term_count })
}

/// `Σ_{x ∈ GF(q²)} f(x)^s` by brute force.
pub fn power_sum(ctx: &FieldCtx, spec: &BinomialSpec, s: u64) -> FieldElem {
    ctx.elements().fold(FieldElem::ZERO, |acc, x| {
        ctx.add(acc, ctx.pow_u64(binomial::eval_f(ctx, spec, x), s))
    })
}

/// The exponent `s = α + (q-1-α)q` whose power sum is tied to `Λ(q, α, a)`.
pub fn bridge_exponent(q: u64, alpha: u64) -> u64 {
    alpha + (q - 1 - alpha) * q
}

/// `-a^((α+1)(1-q)) · Λ(q, α, a)`, which equals
/// `power_sum(spec, bridge_exponent(q, α))`.
pub fn power_sum_from_lambda(
    ctx: &FieldCtx,
    q: PrimePower,
    alpha: u64,
    a: FieldElem,
    r: u32,
) -> Result<FieldElem> {
    let lambda = lambda_direct(ctx, q, alpha, a, r)?.value;
    let e = (alpha as i64 + 1) * (1 - q.q() as i64);
    Ok(ctx.neg(ctx.mul(ctx.pow_i64(a, e)?, lambda)))
}

fn check_closed_form(q: PrimePower, alpha: u64, galpha: &GAlpha) -> Result<()> {
    let qv = q.q();
    if !(qv + 1).is_multiple_of(5) || alpha == 0 || !(alpha + 1).is_multiple_of(5) || qv < 4 * alpha + 8 {
        return Err(Error::Precondition(alloc::format!(
            "closed form needs 5 | q+1, alpha > 0, 5 | alpha+1 and q >= 4·alpha + 8 (q = {qv}, alpha = {alpha})"
        )));
    }
    if u64::from(galpha.alpha) != alpha {
        return Err(Error::Precondition(alloc::format!(
            "g polynomial is for alpha = {}, not {alpha}",
            galpha.alpha
        )));
    }
    Ok(())
}

/// `v(1+v+v²+v³+v⁴) · 5^(-e) · g_α(v)` evaluated in the field.
fn factored_p(ctx: &FieldCtx, galpha: &GAlpha, v: FieldElem) -> Result<FieldElem> {
    let g = galpha.g.mod_p(ctx.p())?;
    let geometric = (0..5).fold(FieldElem::ZERO, |acc, k| ctx.add(acc, ctx.pow_u64(v, k)));
    let five_inv = ctx.inv(ctx.from_int(5))?;
    Ok(ctx.mul(
        ctx.mul(v, geometric),
        ctx.mul(ctx.pow_u64(five_inv, u64::from(galpha.e)), ctx.eval_fp_poly(&g, v)?),
    ))
}

/// Closed form of `Λ(q, α, a)` for `r = 5`, routed through `g_α`:
///
/// `Λ = (-a)^(((α+1)/5)q) · w(1+w+w²+w³+w⁴) · 5^(-e) · g_α(w)` with
/// `w = a^(-q(q+1)/5) = v^q`, `v = a^(-(q+1)/5)`.
///
/// Equivalently `Λ = ((-a)^((α+1)/5) · P_α(v))^q`. Using `v` in place of `w`
/// gives [`lambda_closed_with_v`], which agrees with `Λ` only when `v` lies
/// in GF(q); both vanish together.
pub fn lambda_closed(ctx: &FieldCtx, q: PrimePower, alpha: u64, a: FieldElem, galpha: &GAlpha) -> Result<FieldElem> {
    check_ctx(ctx, q)?;
    check_closed_form(q, alpha, galpha)?;
    let qv = q.q();
    let v = ctx.inv(ctx.pow_u64(a, (qv + 1) / 5))?;
    let w = ctx.pow_u64(v, qv);
    let prefactor = ctx.pow_u64(ctx.neg(a), (alpha + 1) / 5 * qv);
    Ok(ctx.mul(prefactor, factored_p(ctx, galpha, w)?))
}

/// `(-a)^(((α+1)/5)q) · v(1+v+v²+v³+v⁴) · 5^(-e) · g_α(v)` with
/// `v = a^(-(q+1)/5)`, evaluated literally.
pub fn lambda_closed_with_v(
    ctx: &FieldCtx,
    q: PrimePower,
    alpha: u64,
    a: FieldElem,
    galpha: &GAlpha,
) -> Result<FieldElem> {
    check_ctx(ctx, q)?;
    check_closed_form(q, alpha, galpha)?;
    let qv = q.q();
    let v = ctx.inv(ctx.pow_u64(a, (qv + 1) / 5))?;
    let prefactor = ctx.pow_u64(ctx.neg(a), (alpha + 1) / 5 * qv);
    Ok(ctx.mul(prefactor, factored_p(ctx, galpha, v)?))
}

/// Which of the two exceptional exponents `α` is, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialAlpha {
    /// `α = (q-1)/2`
    Half,
    /// `α = (q-3)/4`
    Quarter,
    /// `α = (3q-1)/4`, the remaining exponent whose window holds only four
    /// multiples of `q+1`.
    ThreeQuarter,
}

pub fn special_alpha(q: u64, alpha: u64) -> Option<SpecialAlpha> {
    if q % 2 == 1 && alpha == (q - 1) / 2 {
        Some(SpecialAlpha::Half)
    } else if q % 4 == 3 && alpha == (q - 3) / 4 {
        Some(SpecialAlpha::Quarter)
    } else if q % 4 == 3 && alpha == (3 * q - 1) / 4 {
        Some(SpecialAlpha::ThreeQuarter)
    } else {
        None
    }
}

/// `Λ(q, α, a)` at the exceptional `α` when `y = a^((q+1)/5)` is a fifth root
/// of unity other than 1:
///
/// - `α = (q-1)/2`: `-a^(-(α+1)/5) (y⁻¹ + 1 + y + y²)`
/// - `α = (q-3)/4`: `-a^(-(α+1)/5) (1 + y + y² + y³)`
/// - `α = (3q-1)/4`: `-a^(-(α+1)/5) (y⁻² + y⁻¹ + 1 + y)`
///
/// For every other `α`, `Λ(q, α, a) = 0`.
pub fn special_value(ctx: &FieldCtx, q: PrimePower, alpha: u64, a: FieldElem) -> Result<FieldElem> {
    check_ctx(ctx, q)?;
    let qv = q.q();
    if !(qv + 1).is_multiple_of(5) {
        return Err(Error::RDoesNotDivide { q: qv, r: 5 });
    }
    let y = ctx.pow_u64(a, (qv + 1) / 5);
    if y == FieldElem::ONE || ctx.pow_u64(y, 5) != FieldElem::ONE {
        return Err(Error::Precondition("a^((q+1)/5) must be a fifth root of unity other than 1".into()));
    }
    let kind = special_alpha(qv, alpha).ok_or_else(|| {
        Error::Precondition(alloc::format!("alpha = {alpha} is not (q-1)/2, (q-3)/4 or (3q-1)/4"))
    })?;
    let powers: [i64; 4] = match kind {
        SpecialAlpha::Half => [-1, 0, 1, 2],
        SpecialAlpha::Quarter => [0, 1, 2, 3],
        SpecialAlpha::ThreeQuarter => [-2, -1, 0, 1],
    };
    let mut sum = FieldElem::ZERO;
    for k in powers {
        sum = ctx.add(sum, ctx.pow_i64(y, k)?);
    }
    let scale = ctx.pow_i64(a, -((alpha as i64 + 1) / 5))?;
    Ok(ctx.neg(ctx.mul(scale, sum)))
}

/// Hermite's criterion: 0 is the only root and `Λ(q, α, a) = 0` for all
/// `0 <= α <= q-1`. Valid for every `q`, whether or not `r | q+1`.
pub fn hermite_check(ctx: &FieldCtx, spec: &BinomialSpec) -> bool {
    if !binomial::zero_only_root(ctx, spec) {
        return false;
    }
    (0..spec.q().q()).all(|alpha| {
        lambda_direct(ctx, spec.q(), alpha, spec.a(), spec.r())
            .expect("spec was validated against ctx")
            .value
            .is_zero()
    })
}

/// Validates `r` as well; convenience for callers holding raw parameters.
pub fn hermite_check_params(ctx: &FieldCtx, q: PrimePower, r: u32, a: FieldElem) -> Result<bool> {
    check_r(r)?;
    Ok(hermite_check(ctx, &BinomialSpec::new(ctx, q, r, a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::DEFAULT_FIELD_CAP;

    fn field(q: u64) -> (PrimePower, FieldCtx) {
        let q = PrimePower::from_q(q).unwrap();
        (q, FieldCtx::for_q_squared(q, DEFAULT_FIELD_CAP).unwrap())
    }

    /// Pascal's triangle reduced mod p.
    fn pascal_mod(n: u64, m: i64, p: u32) -> u32 {
        if m < 0 || m as u64 > n {
            return 0;
        }
        let mut row = alloc::vec![1u32];
        for _ in 0..n {
            let mut next = alloc::vec![1u32; row.len() + 1];
            for k in 1..row.len() {
                next[k] = (row[k - 1] + row[k]) % p;
            }
            row = next;
        }
        row[m as usize]
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binomial(4, 1, 5), 4);
        assert_eq!(lucas_binomial(123, 0, 7), 1);
        assert_eq!(lucas_binomial(6, 3, 2), 0);
        assert_eq!(lucas_binomial(6, -1, 2), 0);
        assert_eq!(lucas_binomial(6, 7, 2), 0);
        for p in [2, 3, 5, 7, 13] {
            for n in 0..70 {
                for m in -1..72 {
                    assert_eq!(lucas_binomial(n, m, p), pascal_mod(n, m, p), "C({n},{m}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        for q in [8u64, 9, 19, 64, 121] {
            let g = gamma(q, 0, 5).unwrap();
            assert_eq!(g.multipliers(), [-4, -3, -2, -1]);
        }
        assert_eq!(gamma(5, 0, 5).unwrap().members, [-18, -12, -6]);
        assert_eq!(gamma(7, 0, 5).unwrap().multipliers(), [-3, -2, -1]);
        for q in [19u64, 29, 49, 59, 79, 89, 109] {
            let g = gamma(q, (q - 1) / 2, 5).unwrap();
            assert_eq!(g.multipliers(), [-2, -1, 0, 1], "q = {q}");
        }
        assert!(gamma(9, 9, 5).is_err());
    }

    #[test]
    fn gamma_members_lie_in_window() {
        for r in [3u32, 5, 7, 11] {
            for q in [4u64, 9, 13, 27, 32, 41] {
                for alpha in 0..q {
                    let g = gamma(q, alpha, r).unwrap();
                    let (ri, ai, qi) = (i64::from(r), alpha as i64, q as i64);
                    let (low, high) = ((ri - 1) * (ai + 1) - ri * qi, (ri - 1) * ai - 1);
                    let brute: Vec<i64> = (low..=high).filter(|n| n.rem_euclid(qi + 1) == 0).collect();
                    assert_eq!(g.members, brute);
                }
            }
        }
    }

    #[test]
    fn alpha_zero_values_small_q() {
        let (q5, ctx5) = field(5);
        for a in ctx5.elements().skip(1) {
            let l = lambda_direct(&ctx5, q5, 0, a, 5).unwrap();
            assert_eq!(l.value, ctx5.neg(ctx5.pow_i64(a, -5).unwrap()));
            assert_eq!(l.value, ctx5.mul(ctx5.from_int(4), ctx5.pow_i64(a, -5).unwrap()));
        }
        let (q7, ctx7) = field(7);
        for a in ctx7.elements().skip(1) {
            let l = lambda_direct(&ctx7, q7, 0, a, 5).unwrap();
            assert_eq!(l.value, ctx7.neg(ctx7.pow_i64(a, -21).unwrap()));
        }
    }

    #[test]
    fn empty_sums_when_alpha_plus_one_not_divisible() {
        let (q, ctx) = field(9);
        let a = ctx.gen_pow(13);
        for alpha in 1..9u64 {
            let l = lambda_direct(&ctx, q, alpha, a, 5).unwrap();
            if (alpha + 1) % 5 != 0 {
                assert_eq!(l.term_count, 0);
                assert!(l.value.is_zero());
            }
        }
    }

    #[test]
    fn power_sum_vanishes_off_multiples_of_q_minus_one() {
        let (q, ctx) = field(9);
        let spec = BinomialSpec::new(&ctx, q, 5, ctx.gen_pow(3)).unwrap();
        for s in 1..80u64 {
            if s % 8 != 0 {
                assert!(power_sum(&ctx, &spec, s).is_zero(), "s = {s}");
            }
        }
    }

    #[test]
    fn power_sum_of_permutation() {
        let (q, ctx) = field(4);
        let spec = BinomialSpec::new(&ctx, q, 5, ctx.gen_pow(3)).unwrap();
        assert!(binomial::is_permutation(&ctx, &spec));
        assert_eq!(power_sum(&ctx, &spec, 15), ctx.neg(FieldElem::ONE));
    }

    #[test]
    fn special_values_match_direct_sum() {
        let (q, ctx) = field(19);
        let mut seen = 0;
        for a in ctx.elements().skip(1) {
            let y = ctx.pow_u64(a, 4);
            if y == FieldElem::ONE || ctx.pow_u64(y, 5) != FieldElem::ONE {
                assert!(special_value(&ctx, q, 9, a).is_err());
                continue;
            }
            for alpha in [9, 4, 14] {
                let direct = lambda_direct(&ctx, q, alpha, a, 5).unwrap().value;
                assert_eq!(special_value(&ctx, q, alpha, a).unwrap(), direct);
            }
            assert!(special_value(&ctx, q, 13, a).is_err());
            assert!(special_value(&ctx, q, 18, a).is_err());
            seen += 1;
        }
        assert_eq!(seen, 16);
    }

    #[test]
    fn hermite_matches_brute_force_small() {
        for (qv, r) in [(4u64, 5u32), (3, 5), (5, 7), (8, 3), (11, 3), (7, 5)] {
            let (q, ctx) = field(qv);
            for a in ctx.elements().skip(1) {
                let spec = BinomialSpec::new(&ctx, q, r, a).unwrap();
                assert_eq!(hermite_check(&ctx, &spec), binomial::is_permutation(&ctx, &spec), "q={qv} r={r} a={a:?}");
            }
        }
    }
    #[test]
    fn closed_form_matches_direct_sum() {
        use crate::symbolic::extract_g;
        let g4 = extract_g(4).unwrap();
        for qv in [29u64, 49, 64] {
            let (q, ctx) = field(qv);
            let mut literal_mismatch = 0;
            for a in ctx.elements().skip(1) {
                let direct = lambda_direct(&ctx, q, 4, a, 5).unwrap().value;
                assert_eq!(lambda_closed(&ctx, q, 4, a, &g4).unwrap(), direct, "q={qv} a={a:?}");
                let literal = lambda_closed_with_v(&ctx, q, 4, a, &g4).unwrap();
                assert_eq!(literal.is_zero(), direct.is_zero());
                if literal != direct {
                    literal_mismatch += 1;
                }
            }
            assert!(literal_mismatch > 0, "q = {qv}");
        }
        let (q, ctx) = field(19);
        assert!(lambda_closed(&ctx, q, 4, ctx.gen_pow(1), &g4).is_err());
    }
    #[test]
    fn window_cardinality_four_or_five() {
        for qv in (2u64..=128).filter(|&q| (q + 1) % 5 == 0 && PrimePower::from_q(q).is_ok()) {
            for alpha in (1..qv).filter(|a| (a + 1) % 5 == 0) {
                let n = gamma(qv, alpha, 5).unwrap().len();
                let expected = if special_alpha(qv, alpha).is_some() { 4 } else { 5 };
                assert_eq!(n, expected, "q={qv} alpha={alpha}");
            }
        }
    }

    #[test]
    fn zero_pattern_at_fifth_roots_of_unity() {
        for qv in [19u64, 29, 49] {
            let (q, ctx) = field(qv);
            for a in ctx.elements().skip(1) {
                let y = ctx.pow_u64(a, (qv + 1) / 5);
                if y == FieldElem::ONE || ctx.pow_u64(y, 5) != FieldElem::ONE {
                    continue;
                }
                for alpha in 0..qv {
                    let direct = lambda_direct(&ctx, q, alpha, a, 5).unwrap().value;
                    match special_alpha(qv, alpha) {
                        Some(_) => assert_eq!(direct, special_value(&ctx, q, alpha, a).unwrap()),
                        None => assert!(direct.is_zero(), "q={qv} alpha={alpha}"),
                    }
                }
            }
        }
    }

    #[test]
    fn power_sum_bridge() {
        for qv in [9u64, 19] {
            let (q, ctx) = field(qv);
            for k in [1u64, 7, 40, 101] {
                let a = ctx.gen_pow(k);
                let spec = BinomialSpec::new(&ctx, q, 5, a).unwrap();
                for alpha in 0..qv {
                    assert_eq!(
                        power_sum(&ctx, &spec, bridge_exponent(qv, alpha)),
                        power_sum_from_lambda(&ctx, q, alpha, a, 5).unwrap(),
                        "q={qv} alpha={alpha} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn q19_root_of_one_plus_x() {
        let (q, ctx) = field(19);
        let target = ctx.from_int(18);
        let hits: Vec<_> = ctx.elements().filter(|&a| ctx.pow_u64(a, 4) == target).collect();
        assert_eq!(hits.len(), 4);
        for a in hits {
            assert!(hermite_check(&ctx, &BinomialSpec::new(&ctx, q, 5, a).unwrap()));
        }
    }
}
