//! The two classification theorems as data.
//!
//! Each case names a `q` and a condition on `b = a^((q+1)/r)`. Polynomial
//! conditions are stored as lists of factors with ascending coefficients
//! over the prime field.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::gf::{FieldCtx, FieldElem, FpPoly, PrimePower};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `a·x + x^(5q-4)`
    R5,
    /// `a·x + x^(7q-6)`
    R7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 2] = [TheoremId::R5, TheoremId::R7];

    pub fn r(self) -> u32 {
        match self {
            TheoremId::R5 => 5,
            TheoremId::R7 => 7,
        }
    }

    /// Default upper bound on `q` for verification.
    pub fn default_q_max(self) -> u64 {
        match self {
            TheoremId::R5 => 128,
            TheoremId::R7 => 100,
        }
    }

    pub fn for_r(r: u32) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.r() == r)
    }

    fn table(self) -> &'static [CaseSpec] {
        match self {
            TheoremId::R5 => QUINTIC_CASES,
            TheoremId::R7 => SEPTIC_CASES,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::R5 => "thm1.1",
            TheoremId::R7 => "thm1.2",
        })
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim_start_matches("thm") {
            "1.1" => Ok(TheoremId::R5),
            "1.2" => Ok(TheoremId::R7),
            _ => Err(Error::Precondition(alloc::format!("unknown theorem `{s}`"))),
        }
    }
}

/// A condition on `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    /// `b != 1` and `b^r = 1`.
    NontrivialRthRootOfUnity,
    /// `b` is a root of one of the factors.
    RootOfProduct(Vec<FpPoly>),
    /// `b` is one of the prime-field constants.
    MemberOfSet(Vec<u32>),
}

/// One theorem case instantiated at a particular `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremPredicate {
    pub theorem: TheoremId,
    /// 1-based case number within the theorem.
    pub case: u8,
    pub q: PrimePower,
    /// `(q+1)/r`, the exponent taking `a` to `b`.
    pub power: u64,
    pub condition: Condition,
}

impl TheoremPredicate {
    /// Evaluates the condition on `b`; `ctx` must be GF(q²).
    pub fn holds(&self, ctx: &FieldCtx, b: FieldElem) -> Result<bool> {
        Ok(match &self.condition {
            Condition::NontrivialRthRootOfUnity => {
                b != FieldElem::ONE && ctx.pow_u64(b, u64::from(self.theorem.r())) == FieldElem::ONE
            }
            Condition::RootOfProduct(factors) => {
                for f in factors {
                    if ctx.eval_fp_poly(f, b)?.is_zero() {
                        return Ok(true);
                    }
                }
                false
            }
            Condition::MemberOfSet(values) => values.iter().any(|&c| ctx.from_int(i64::from(c)) == b),
        })
    }
}

#[derive(Debug)]
enum CaseData {
    /// Powers of two with `5 | q+1`, i.e. `q = 2^(4k+2)`.
    RootsOfUnityAtPowersOfTwo,
    Roots(u64, &'static [&'static [i64]]),
    Set(u64, &'static [u32]),
}

#[derive(Debug)]
struct CaseSpec {
    case: u8,
    data: CaseData,
}

const QUINTIC_CASES: &[CaseSpec] = &[
    CaseSpec { case: 1, data: CaseData::RootsOfUnityAtPowersOfTwo },
    CaseSpec {
        case: 2,
        data: CaseData::Roots(
            9,
            &[&[1, 1], &[1, 0, 1], &[2, 1, 1], &[2, 2, 1], &[1, 1, 1, 0, 1], &[1, 0, 1, 1, 1], &[1, 2, 1, 2, 1]],
        ),
    },
    CaseSpec {
        case: 3,
        data: CaseData::Roots(
            19,
            &[
                &[1, 1],
                &[2, 1],
                &[3, 1],
                &[4, 1],
                &[5, 1],
                &[9, 1],
                &[10, 1],
                &[13, 1],
                &[17, 1],
                &[16, 3, 1],
                &[1, 4, 1],
                &[6, 18, 1],
            ],
        ),
    },
    CaseSpec { case: 4, data: CaseData::Set(29, &[15, 18, 22, 23]) },
    CaseSpec { case: 5, data: CaseData::Roots(49, &[&[1, 4, 1]]) },
    CaseSpec { case: 6, data: CaseData::Roots(59, &[&[4, 1], &[55, 1], &[36, 0, 1]]) },
    CaseSpec { case: 7, data: CaseData::Roots(64, &[&[1, 1, 1], &[1, 1, 0, 1]]) },
];

const SEPTIC_CASES: &[CaseSpec] = &[
    CaseSpec {
        case: 1,
        data: CaseData::Roots(
            13,
            &[
                &[1, 1],
                &[2, 1],
                &[3, 1],
                &[4, 1],
                &[5, 1],
                &[6, 1],
                &[7, 1],
                &[8, 1],
                &[9, 1],
                &[10, 1],
                &[11, 1],
                &[12, 1, 1],
                &[9, 2, 1],
                &[10, 3, 1],
                &[9, 4, 1],
                &[12, 4, 1],
                &[10, 5, 1],
                &[3, 6, 1],
                &[1, 7, 1],
                &[4, 7, 1],
                &[1, 8, 1],
                &[12, 9, 1],
                &[1, 10, 1],
                &[3, 12, 1],
                &[4, 12, 1],
                &[12, 12, 1],
            ],
        ),
    },
    CaseSpec {
        case: 2,
        data: CaseData::Roots(
            27,
            &[&[2, 1, 1, 1], &[1, 2, 1, 1], &[1, 1, 2, 1], &[2, 2, 2, 1], &[1, 2, 1, 2, 1, 2, 1]],
        ),
    },
    CaseSpec {
        case: 3,
        data: CaseData::Roots(
            41,
            &[
                &[9, 1],
                &[10, 1],
                &[26, 1],
                &[30, 1],
                &[32, 1],
                &[34, 1],
                &[35, 1],
                &[37, 1],
                &[39, 2, 1],
                &[1, 14, 1],
                &[20, 40, 1],
            ],
        ),
    },
];

/// Whether `q` is a power of two with `5 | q+1`.
pub fn is_case_one_q(q: PrimePower) -> bool {
    q.p() == 2 && (q.q() + 1).is_multiple_of(5)
}

/// The cases of `theorem` that apply at `q`, in case order.
pub fn theorem_predicates(theorem: TheoremId, q: PrimePower) -> Result<Vec<TheoremPredicate>> {
    let r = u64::from(theorem.r());
    let power = (q.q() + 1) / r;
    let mut out = Vec::new();
    for spec in theorem.table() {
        let condition = match spec.data {
            CaseData::RootsOfUnityAtPowersOfTwo if is_case_one_q(q) => Condition::NontrivialRthRootOfUnity,
            CaseData::Roots(at, factors) if at == q.q() => Condition::RootOfProduct(
                factors.iter().map(|c| FpPoly::from_i64(q.p(), c)).collect::<Result<_>>()?,
            ),
            CaseData::Set(at, values) if at == q.q() => Condition::MemberOfSet(values.to_vec()),
            _ => continue,
        };
        out.push(TheoremPredicate { theorem, case: spec.case, q, power, condition });
    }
    Ok(out)
}

/// Case numbers whose condition holds at `b`.
pub fn matching_cases(predicates: &[TheoremPredicate], ctx: &FieldCtx, b: FieldElem) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for p in predicates {
        if p.holds(ctx, b)? {
            out.push(p.case);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::DEFAULT_FIELD_CAP;

    #[test]
    fn case_one_is_two_to_four_k_plus_two() {
        for n in 1..=19u32 {
            let q = PrimePower::new(2, n).unwrap();
            assert_eq!(is_case_one_q(q), n % 4 == 2, "n = {n}");
        }
        assert!(!is_case_one_q(PrimePower::from_q(9).unwrap()));
    }

    #[test]
    fn predicates_only_where_r_divides_q_plus_one() {
        for theorem in TheoremId::ALL {
            for qv in 2..=1024u64 {
                let Ok(q) = PrimePower::from_q(qv) else { continue };
                let preds = theorem_predicates(theorem, q).unwrap();
                if !preds.is_empty() {
                    assert_eq!((qv + 1) % u64::from(theorem.r()), 0);
                }
            }
        }
        let q64 = PrimePower::from_q(64).unwrap();
        let cases: Vec<u8> = theorem_predicates(TheoremId::R5, q64).unwrap().iter().map(|p| p.case).collect();
        assert_eq!(cases, [1, 7]);
        assert_eq!(theorem_predicates(TheoremId::R5, PrimePower::from_q(109).unwrap()).unwrap(), []);
    }

    #[test]
    fn powers_match_statement() {
        let expect = [(TheoremId::R5, 19, 4), (TheoremId::R5, 29, 6), (TheoremId::R5, 49, 10), (TheoremId::R5, 59, 12), (TheoremId::R5, 64, 13), (TheoremId::R7, 13, 2), (TheoremId::R7, 27, 4), (TheoremId::R7, 41, 6)];
        for (t, q, power) in expect {
            let preds = theorem_predicates(t, PrimePower::from_q(q).unwrap()).unwrap();
            assert!(preds.iter().all(|p| p.power == power));
        }
    }

    #[test]
    fn parse_ids() {
        assert_eq!("thm1.1".parse::<TheoremId>().unwrap(), TheoremId::R5);
        assert_eq!("1.2".parse::<TheoremId>().unwrap(), TheoremId::R7);
        assert!("1.3".parse::<TheoremId>().is_err());
        assert_eq!(TheoremId::for_r(7), Some(TheoremId::R7));
        assert_eq!(TheoremId::for_r(11), None);
    }

    #[test]
    fn conditions_evaluate() {
        let q = PrimePower::from_q(29).unwrap();
        let ctx = FieldCtx::for_q_squared(q, DEFAULT_FIELD_CAP).unwrap();
        let preds = theorem_predicates(TheoremId::R5, q).unwrap();
        assert_eq!(matching_cases(&preds, &ctx, ctx.from_int(18)).unwrap(), [4]);
        assert_eq!(matching_cases(&preds, &ctx, ctx.from_int(17)).unwrap(), []);
        let q = PrimePower::from_q(19).unwrap();
        let ctx = FieldCtx::for_q_squared(q, DEFAULT_FIELD_CAP).unwrap();
        let preds = theorem_predicates(TheoremId::R5, q).unwrap();
        assert_eq!(matching_cases(&preds, &ctx, ctx.from_int(18)).unwrap(), [3]);
        let q = PrimePower::from_q(64).unwrap();
        let ctx = FieldCtx::for_q_squared(q, DEFAULT_FIELD_CAP).unwrap();
        let preds = theorem_predicates(TheoremId::R5, q).unwrap();
        let fifth = ctx.gen_pow((64 * 64 - 1) / 5);
        assert_eq!(matching_cases(&preds, &ctx, fifth).unwrap(), [1]);
        assert_eq!(matching_cases(&preds, &ctx, FieldElem::ONE).unwrap(), []);
    }
}
