//! The binomials `f(x) = a·x + x^(r(q-1)+1)` over GF(q²).
//!
//! `f = x·h(x^(q-1))` with `h(x) = a + x^r`, so substituting `x -> c·x` shows
//! that whether `f` permutes the field depends on `a` only through
//! `b = a^((q+1)/r)` when `r | q+1`. [`classify_classes`] exploits this and
//! runs one brute-force permutation test per achievable `b`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{is_prime, FieldCtx, FieldElem, PrimePower};
use crate::{Error, Result};

/// The tuple `(q, r, a)` defining `f = a·x + x^(r(q-1)+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialSpec {
    q: PrimePower,
    r: u32,
    a: FieldElem,
}

/// The class value `b = a^((q+1)/r)` together with the `a` it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BClass {
    pub b: FieldElem,
    pub representative: FieldElem,
}

/// Verdict for one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassVerdict {
    pub class: BClass,
    pub is_pp: bool,
}

pub fn check_r(r: u32) -> Result<()> {
    if r % 2 == 1 && is_prime(u64::from(r)) {
        Ok(())
    } else {
        Err(Error::InvalidR(r))
    }
}

/// Checks that `ctx` is GF(q²).
pub fn check_ctx(ctx: &FieldCtx, q: PrimePower) -> Result<()> {
    if ctx.p() != q.p() {
        return Err(Error::CharacteristicMismatch { expected: q.p(), found: ctx.p() });
    }
    if ctx.degree() != 2 * q.n() {
        return Err(Error::Precondition(alloc::format!(
            "field has degree {} but GF(q^2) for q = {q} needs degree {}",
            ctx.degree(),
            2 * q.n()
        )));
    }
    Ok(())
}

fn check_divides(q: PrimePower, r: u32) -> Result<u64> {
    let q1 = q.q() + 1;
    if q1.is_multiple_of(u64::from(r)) {
        Ok(q1 / u64::from(r))
    } else {
        Err(Error::RDoesNotDivide { q: q.q(), r })
    }
}

impl BinomialSpec {
    pub fn new(ctx: &FieldCtx, q: PrimePower, r: u32, a: FieldElem) -> Result<Self> {
        check_r(r)?;
        check_ctx(ctx, q)?;
        ctx.elem(a.index())?;
        if a.is_zero() {
            return Err(Error::Precondition("a must be nonzero".into()));
        }
        Ok(Self { q, r, a })
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn a(&self) -> FieldElem {
        self.a
    }

    /// `e = r(q-1)+1`.
    pub fn exponent(&self) -> u64 {
        u64::from(self.r) * (self.q.q() - 1) + 1
    }
}

/// `f(x) = a·x + x^e`.
pub fn eval_f(ctx: &FieldCtx, spec: &BinomialSpec, x: FieldElem) -> FieldElem {
    ctx.add(ctx.mul(spec.a, x), ctx.pow_u64(x, spec.exponent()))
}

/// Brute-force bijectivity test over all field elements, stopping at the
/// first collision.
pub fn is_permutation(ctx: &FieldCtx, spec: &BinomialSpec) -> bool {
    let size = ctx.size() as usize;
    let mut seen = vec![0u64; size.div_ceil(64)];
    let mut mark = |y: FieldElem| {
        let i = y.index() as usize;
        let (word, bit) = (i / 64, 1u64 << (i % 64));
        let fresh = seen[word] & bit == 0;
        seen[word] |= bit;
        fresh
    };
    mark(FieldElem::ZERO);
    let n = u64::from(ctx.size() - 1);
    let la = u64::from(ctx.log(spec.a).expect("a is nonzero"));
    let step = spec.exponent() % n;
    let mut le = 0u64;
    for k in 0..n {
        // x = g^k, a·x = g^(la+k), x^e = g^(k·e)
        let y = ctx.add(ctx.gen_pow(la + k), ctx.gen_pow(le));
        if !mark(y) {
            return false;
        }
        le += step;
        if le >= n {
            le -= n;
        }
    }
    true
}

/// Whether some nonzero `x` satisfies `f(x) = 0`, by exhaustive search.
pub fn has_nonzero_root(ctx: &FieldCtx, spec: &BinomialSpec) -> bool {
    ctx.elements()
        .skip(1)
        .any(|x| eval_f(ctx, spec, x).is_zero())
}

/// Whether 0 is the only root of `f`.
///
/// A nonzero root means `x^(r(q-1)) = -a`. The values `x^(q-1)` run over the
/// `(q+1)`-th roots of unity, so when `r | q+1` the condition is
/// `(-a)^((q+1)/r) = 1`. For odd `q` the exponent `(q+1)/r` is even and for
/// even `q` the sign is trivial, so this reduces to `a^((q+1)/r) = 1`.
/// Otherwise the roots are searched exhaustively.
pub fn zero_only_root(ctx: &FieldCtx, spec: &BinomialSpec) -> bool {
    match check_divides(spec.q, spec.r) {
        Ok(power) => ctx.pow_u64(spec.a, power) != FieldElem::ONE,
        Err(_) => !has_nonzero_root(ctx, spec),
    }
}

pub fn b_class(ctx: &FieldCtx, spec: &BinomialSpec) -> Result<BClass> {
    let power = check_divides(spec.q, spec.r)?;
    Ok(BClass { b: ctx.pow_u64(spec.a, power), representative: spec.a })
}

/// One representative per achievable `b`, taking `a = g^k` for
/// `k = 0, 1, ...` and keeping the first `a` for each `b`. There are exactly
/// `r(q-1)` classes and they are returned in that generator order.
pub fn class_representatives(ctx: &FieldCtx, q: PrimePower, r: u32) -> Result<Vec<BClass>> {
    check_r(r)?;
    check_ctx(ctx, q)?;
    let power = check_divides(q, r)?;
    let count = u64::from(r) * (q.q() - 1);
    Ok((0..count)
        .map(|k| {
            let a = ctx.gen_pow(k);
            BClass { b: ctx.pow_u64(a, power), representative: a }
        })
        .collect())
}

/// Like [`classify_classes`] with a caller-supplied evaluator that maps the
/// representatives (in generator order) to permutation verdicts.
pub fn classify_classes_with<F>(
    ctx: &FieldCtx,
    q: PrimePower,
    r: u32,
    evaluate: F,
) -> Result<Vec<ClassVerdict>>
where
    F: FnOnce(&[BClass]) -> Vec<bool>,
{
    let classes = class_representatives(ctx, q, r)?;
    let verdicts = evaluate(&classes);
    assert_eq!(verdicts.len(), classes.len(), "evaluator must return one verdict per class");
    let mut out: Vec<ClassVerdict> = classes
        .into_iter()
        .zip(verdicts)
        .map(|(class, is_pp)| ClassVerdict { class, is_pp })
        .collect();
    out.sort_by_key(|v| v.class.b);
    Ok(out)
}

/// The permutation verdict for every achievable `b`, sorted by canonical
/// index of `b`.
pub fn classify_classes(ctx: &FieldCtx, q: PrimePower, r: u32) -> Result<Vec<ClassVerdict>> {
    classify_classes_with(ctx, q, r, |classes| {
        classes
            .iter()
            .map(|c| is_permutation(ctx, &BinomialSpec { q, r, a: c.representative }))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> (PrimePower, FieldCtx) {
        let q = PrimePower::from_q(q).unwrap();
        (q, FieldCtx::for_q_squared(q, crate::gf::DEFAULT_FIELD_CAP).unwrap())
    }

    /// Bijectivity by sorting the full value table; no early exit, no bitset.
    fn is_permutation_by_sorting(ctx: &FieldCtx, spec: &BinomialSpec) -> bool {
        let mut values: Vec<u32> = ctx.elements().map(|x| eval_f(ctx, spec, x).index()).collect();
        values.sort_unstable();
        values.dedup();
        values.len() == ctx.size() as usize
    }

    #[test]
    fn eval_examples() {
        let (q, ctx) = field(9);
        let a = ctx.gen_pow(3);
        let spec = BinomialSpec::new(&ctx, q, 5, a).unwrap();
        assert_eq!(spec.exponent(), 41);
        assert_eq!(eval_f(&ctx, &spec, FieldElem::ZERO), FieldElem::ZERO);
        assert_eq!(eval_f(&ctx, &spec, FieldElem::ONE), ctx.add(a, FieldElem::ONE));

        let (q, ctx) = field(4);
        let spec = BinomialSpec::new(&ctx, q, 5, FieldElem::ONE).unwrap();
        assert_eq!(spec.exponent(), 16);
        assert!(ctx.elements().all(|x| eval_f(&ctx, &spec, x).is_zero()));
    }

    #[test]
    fn spec_validation() {
        let (q, ctx) = field(9);
        assert_eq!(BinomialSpec::new(&ctx, q, 4, FieldElem::ONE).unwrap_err(), Error::InvalidR(4));
        assert_eq!(BinomialSpec::new(&ctx, q, 2, FieldElem::ONE).unwrap_err(), Error::InvalidR(2));
        assert!(BinomialSpec::new(&ctx, q, 5, FieldElem::ZERO).is_err());
        let other = PrimePower::from_q(27).unwrap();
        assert!(BinomialSpec::new(&ctx, other, 7, FieldElem::ONE).is_err());
    }

    #[test]
    fn q4_is_linear() {
        // x^16 = x on GF(16), so f = (a + 1)x
        let (q, ctx) = field(4);
        for a in ctx.elements().skip(1) {
            let spec = BinomialSpec::new(&ctx, q, 5, a).unwrap();
            assert_eq!(is_permutation(&ctx, &spec), a != FieldElem::ONE, "a = {a:?}");
            if ctx.element_order(a).unwrap() == 5 {
                assert!(is_permutation(&ctx, &spec));
            }
        }
    }

    #[test]
    fn q7_r5_never_permutes() {
        let (q, ctx) = field(7);
        for a in ctx.elements().skip(1) {
            assert!(!is_permutation(&ctx, &BinomialSpec::new(&ctx, q, 5, a).unwrap()));
        }
        assert_eq!(
            classify_classes(&ctx, q, 5).unwrap_err(),
            Error::RDoesNotDivide { q: 7, r: 5 }
        );
    }

    #[test]
    fn bitset_oracle_matches_sorting_oracle() {
        for (qv, r) in [(4, 5), (9, 5), (8, 3), (5, 3), (13, 7), (3, 5)] {
            let (q, ctx) = field(qv);
            for a in ctx.elements().skip(1) {
                let spec = BinomialSpec::new(&ctx, q, r, a).unwrap();
                assert_eq!(is_permutation(&ctx, &spec), is_permutation_by_sorting(&ctx, &spec));
            }
        }
    }

    #[test]
    fn zero_root_criterion_matches_brute_force() {
        // covers both the sign question for odd q and the trivial sign for even q
        for (qv, r) in [(4, 5), (9, 5), (19, 5), (29, 5), (16, 17), (13, 7), (27, 7), (8, 3), (11, 3)] {
            let (q, ctx) = field(qv);
            for a in ctx.elements().skip(1) {
                let spec = BinomialSpec::new(&ctx, q, r, a).unwrap();
                assert_eq!(zero_only_root(&ctx, &spec), !has_nonzero_root(&ctx, &spec), "q={qv} a={a:?}");
            }
        }
    }

    #[test]
    fn zero_root_examples() {
        let (q, ctx) = field(9);
        for a in ctx.elements().skip(1) {
            let spec = BinomialSpec::new(&ctx, q, 5, a).unwrap();
            if ctx.pow_u64(a, 2) == FieldElem::ONE {
                assert!(!zero_only_root(&ctx, &spec));
            }
        }
        let (q, ctx) = field(19);
        let mut checked = 0;
        for a in ctx.elements().skip(1) {
            if ctx.element_order(ctx.pow_u64(a, 4)).unwrap() == 3 {
                let spec = BinomialSpec::new(&ctx, q, 5, a).unwrap();
                assert!(zero_only_root(&ctx, &spec));
                assert!(!has_nonzero_root(&ctx, &spec));
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn b_class_values() {
        let (q, ctx) = field(9);
        let a = ctx.gen_pow(7);
        let spec = BinomialSpec::new(&ctx, q, 5, a).unwrap();
        assert_eq!(b_class(&ctx, &spec).unwrap().b, ctx.pow_u64(a, 2));
        let spec = BinomialSpec::new(&ctx, q, 5, FieldElem::ONE).unwrap();
        assert_eq!(b_class(&ctx, &spec).unwrap().b, FieldElem::ONE);
        let (q64, ctx64) = field(64);
        let a = ctx64.gen_pow(101);
        let spec = BinomialSpec::new(&ctx64, q64, 5, a).unwrap();
        assert_eq!(b_class(&ctx64, &spec).unwrap().b, ctx64.pow_u64(a, 13));
        let spec = BinomialSpec::new(&ctx, q, 7, FieldElem::ONE).unwrap();
        assert!(b_class(&ctx, &spec).is_err());
    }

    #[test]
    fn class_count_is_r_times_q_minus_one() {
        let (q, ctx) = field(9);
        let classes = classify_classes(&ctx, q, 5).unwrap();
        assert_eq!(classes.len(), 40);
        let mut bs: Vec<_> = classes.iter().map(|c| c.class.b).collect();
        bs.dedup();
        assert_eq!(bs.len(), 40);
        assert!(classes.windows(2).all(|w| w[0].class.b < w[1].class.b));
        // every b has order dividing r(q-1) = 40
        assert!(bs.iter().all(|&b| 40 % ctx.element_order(b).unwrap() == 0));
    }

    #[test]
    fn homogeneity_under_q_minus_one_roots() {
        for (qv, r) in [(4, 5), (9, 5), (16, 17), (13, 7)] {
            let (q, ctx) = field(qv);
            let roots: Vec<_> = ctx
                .elements()
                .skip(1)
                .filter(|&z| ctx.pow_u64(z, qv - 1) == FieldElem::ONE)
                .collect();
            assert_eq!(roots.len() as u64, qv - 1);
            let a = ctx.gen_pow(5);
            let spec = BinomialSpec::new(&ctx, q, r, a).unwrap();
            for &z in &roots {
                for x in ctx.elements() {
                    assert_eq!(
                        eval_f(&ctx, &spec, ctx.mul(z, x)),
                        ctx.mul(z, eval_f(&ctx, &spec, x))
                    );
                }
            }
        }
    }
}
