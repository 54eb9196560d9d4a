//! Classification over prime powers, theorem verification and the
//! conjecture scan.
//!
//! Permutation tests are delegated to a [`PermutationEvaluator`] so that
//! callers can swap the sequential default for a parallel one; everything
//! else is deterministic and ordered by `q` and then by canonical index of
//! `b`.

mod theorems;

pub use theorems::{
    is_case_one_q, matching_cases, theorem_predicates, Condition, TheoremId, TheoremPredicate,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::time::Duration;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::binomial::{self, check_r, BClass, BinomialSpec};
use crate::gf::{is_prime, FieldCtx, FieldElem, PrimePower, DEFAULT_FIELD_CAP};
use crate::hermite;
use crate::{Error, Result};

/// Exhaustive negative checks up to this `q`; sampling beyond it.
pub const EXHAUSTIVE_NEGATIVE_MAX_Q: u64 = 30;
pub const NEGATIVE_SAMPLES: usize = 256;
pub const SAMPLE_SEED: u64 = 0x5eed_0fb1_0031;

/// Runs the brute-force permutation test on a batch of `a` values.
pub trait PermutationEvaluator {
    fn permutes(&self, ctx: &FieldCtx, q: PrimePower, r: u32, a: &[FieldElem]) -> Vec<bool>;
}

/// One `a` after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl PermutationEvaluator for Sequential {
    fn permutes(&self, ctx: &FieldCtx, q: PrimePower, r: u32, a: &[FieldElem]) -> Vec<bool> {
        a.iter().map(|&a| permutes_one(ctx, q, r, a)).collect()
    }
}

/// The brute-force test for a single `a`; `ctx` must be GF(q²).
pub fn permutes_one(ctx: &FieldCtx, q: PrimePower, r: u32, a: FieldElem) -> bool {
    let spec = BinomialSpec::new(ctx, q, r, a).expect("caller passes a validated field and nonzero a");
    binomial::is_permutation(ctx, &spec)
}

/// Prime powers `<= max_q` in increasing order, optionally only those with
/// `q ≡ -1 (mod r)`.
pub fn enumerate_prime_powers(max_q: u64, residue_filter: Option<u32>) -> Result<Vec<PrimePower>> {
    if max_q < 2 {
        return Err(Error::Precondition(alloc::format!("max_q = {max_q} must be at least 2")));
    }
    let mut out = Vec::new();
    for q in 2..=max_q {
        if let Some(r) = residue_filter {
            if (q + 1) % u64::from(r) != 0 {
                continue;
            }
        }
        if let Ok(pp) = PrimePower::from_q(q) {
            out.push(pp);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Cross-check every `n`-th class (in `b` order) with the Hermite
    /// criterion; 0 disables the check.
    pub hermite_every: usize,
    /// Largest allowed `q²`.
    pub field_cap: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { hermite_every: 0, field_cap: DEFAULT_FIELD_CAP }
    }
}

/// One `b`-class of a classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub b: FieldElem,
    /// First `g^k` (canonical generator `g`) reaching this `b`.
    pub representative: FieldElem,
    /// `k` with `representative = g^k`.
    pub representative_power: u64,
    pub is_pp: bool,
    /// Theorem cases whose condition holds at `b`.
    pub matched_cases: Vec<u8>,
}

/// A class where brute force and the theorem disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDiff {
    pub b: FieldElem,
    pub representative: FieldElem,
    pub brute_force_pp: bool,
    pub predicted_pp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub q: PrimePower,
    pub r: u32,
    /// Sorted by canonical index of `b`.
    pub rows: Vec<ClassRow>,
    /// Filled in by callers that can read a clock.
    pub timing: Option<Duration>,
    /// Theorem compared against, when one exists for `r`.
    pub theorem: Option<TheoremId>,
    /// Empty iff the PP set matches the theorem exactly.
    pub diff: Vec<ClassDiff>,
    pub hermite_checked: usize,
    /// `b` values where the Hermite criterion disagreed with brute force.
    pub hermite_disagreements: Vec<FieldElem>,
}

impl ClassificationReport {
    pub fn pp_count(&self) -> usize {
        self.rows.iter().filter(|r| r.is_pp).count()
    }

    pub fn pp_rows(&self) -> impl Iterator<Item = &ClassRow> {
        self.rows.iter().filter(|r| r.is_pp)
    }
}

fn field_for(q: PrimePower, cap: u64) -> Result<FieldCtx> {
    FieldCtx::for_q_squared(q, cap)
}

/// Classifies every `b`-class at `q`, comparing against the theorem for `r`
/// when there is one.
pub fn classify(q: PrimePower, r: u32, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    classify_with(q, r, opts, &Sequential)
}

pub fn classify_with(
    q: PrimePower,
    r: u32,
    opts: &ClassifyOptions,
    evaluator: &(impl PermutationEvaluator + ?Sized),
) -> Result<ClassificationReport> {
    let theorem = TheoremId::for_r(r);
    let predicates = match theorem {
        Some(t) => theorem_predicates(t, q)?,
        None => Vec::new(),
    };
    classify_against(q, r, opts, evaluator, theorem, &predicates)
}

/// Classification compared against an explicit predicate list.
pub fn classify_against(
    q: PrimePower,
    r: u32,
    opts: &ClassifyOptions,
    evaluator: &(impl PermutationEvaluator + ?Sized),
    theorem: Option<TheoremId>,
    predicates: &[TheoremPredicate],
) -> Result<ClassificationReport> {
    check_r(r)?;
    let ctx = field_for(q, opts.field_cap)?;
    let verdicts = binomial::classify_classes_with(&ctx, q, r, |classes: &[BClass]| {
        let reps: Vec<FieldElem> = classes.iter().map(|c| c.representative).collect();
        evaluator.permutes(&ctx, q, r, &reps)
    })?;

    let mut rows = Vec::with_capacity(verdicts.len());
    let mut diff = Vec::new();
    for v in &verdicts {
        let matched_cases = matching_cases(predicates, &ctx, v.class.b)?;
        let predicted_pp = !matched_cases.is_empty();
        if theorem.is_some() && predicted_pp != v.is_pp {
            diff.push(ClassDiff {
                b: v.class.b,
                representative: v.class.representative,
                brute_force_pp: v.is_pp,
                predicted_pp,
            });
        }
        rows.push(ClassRow {
            b: v.class.b,
            representative: v.class.representative,
            representative_power: u64::from(ctx.log(v.class.representative).expect("representative is nonzero")),
            is_pp: v.is_pp,
            matched_cases,
        });
    }

    let mut hermite_checked = 0;
    let mut hermite_disagreements = Vec::new();
    if opts.hermite_every > 0 {
        for row in rows.iter().step_by(opts.hermite_every) {
            let spec = BinomialSpec::new(&ctx, q, r, row.representative)?;
            hermite_checked += 1;
            if hermite::hermite_check(&ctx, &spec) != row.is_pp {
                hermite_disagreements.push(row.b);
            }
        }
    }

    Ok(ClassificationReport {
        q,
        r,
        rows,
        timing: None,
        theorem,
        diff,
        hermite_checked,
        hermite_disagreements,
    })
}

/// Outcome of checking a theorem at a `q` with `r ∤ q+1`, where it predicts
/// no permutations at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCheck {
    pub q: PrimePower,
    pub r: u32,
    /// Every nonzero `a` was tested (otherwise a seeded sample).
    pub exhaustive: bool,
    pub checked: usize,
    /// `a` values that nevertheless give a permutation, sorted.
    pub permutations_found: Vec<FieldElem>,
}

/// The `a` values tested for a negative check: all nonzero elements for
/// small `q`, otherwise [`NEGATIVE_SAMPLES`] draws from a ChaCha stream
/// seeded by [`SAMPLE_SEED`] and `q`.
pub fn negative_sample(ctx: &FieldCtx, q: PrimePower) -> (bool, Vec<FieldElem>) {
    if q.q() <= EXHAUSTIVE_NEGATIVE_MAX_Q {
        return (true, ctx.elements().skip(1).collect());
    }
    (false, sample_nonzero(ctx, NEGATIVE_SAMPLES, SAMPLE_SEED ^ q.q()))
}

/// `count` nonzero elements `g^k` with `k` drawn from a ChaCha8 stream seeded
/// by `seed` (with replacement).
pub fn sample_nonzero(ctx: &FieldCtx, count: usize, seed: u64) -> Vec<FieldElem> {
    let order = u64::from(ctx.size()) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| ctx.gen_pow(rng.next_u64() % order)).collect()
}

pub fn negative_check_with(
    q: PrimePower,
    r: u32,
    opts: &ClassifyOptions,
    evaluator: &(impl PermutationEvaluator + ?Sized),
) -> Result<NegativeCheck> {
    check_r(r)?;
    let ctx = field_for(q, opts.field_cap)?;
    let (exhaustive, sample) = negative_sample(&ctx, q);
    let verdicts = evaluator.permutes(&ctx, q, r, &sample);
    let mut permutations_found: Vec<FieldElem> =
        sample.iter().zip(&verdicts).filter(|(_, &pp)| pp).map(|(&a, _)| a).collect();
    permutations_found.sort();
    permutations_found.dedup();
    Ok(NegativeCheck { q, r, exhaustive, checked: sample.len(), permutations_found })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QOutcome {
    Classified(ClassificationReport),
    Negative(NegativeCheck),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QVerification {
    pub q: PrimePower,
    pub outcome: QOutcome,
}

impl QVerification {
    pub fn passed(&self) -> bool {
        match &self.outcome {
            QOutcome::Classified(rep) => rep.diff.is_empty(),
            QOutcome::Negative(neg) => neg.permutations_found.is_empty(),
        }
    }

    /// Human-readable description of the first mismatch, if any.
    pub fn first_diff(&self, ctx: &FieldCtx) -> Option<String> {
        match &self.outcome {
            QOutcome::Classified(rep) => rep.diff.first().map(|d| {
                alloc::format!(
                    "q = {}: b = [{}] (a = g^{}) is {} by brute force but the theorem predicts {}",
                    self.q,
                    ctx.format_coeffs(d.b),
                    ctx.log(d.representative).unwrap_or(0),
                    pp_word(d.brute_force_pp),
                    pp_word(d.predicted_pp),
                )
            }),
            QOutcome::Negative(neg) => neg.permutations_found.first().map(|&a| {
                alloc::format!(
                    "q = {}: r does not divide q+1 so no permutation is predicted, yet a = g^{} = [{}] gives one ({} found{})",
                    self.q,
                    ctx.log(a).unwrap_or(0),
                    ctx.format_coeffs(a),
                    neg.permutations_found.len(),
                    if neg.exhaustive { " exhaustively" } else { " in the sample" },
                )
            }),
        }
    }

    /// Brute-force PP count: classes for a classification, `a` values for a
    /// negative check.
    pub fn pp_count(&self) -> usize {
        match &self.outcome {
            QOutcome::Classified(rep) => rep.pp_count(),
            QOutcome::Negative(neg) => neg.permutations_found.len(),
        }
    }
}

fn pp_word(pp: bool) -> &'static str {
    if pp {
        "a PP"
    } else {
        "not a PP"
    }
}

/// Verifies `theorem` at one `q`.
pub fn verify_theorem_at(
    theorem: TheoremId,
    q: PrimePower,
    opts: &ClassifyOptions,
    evaluator: &(impl PermutationEvaluator + ?Sized),
) -> Result<QVerification> {
    let r = theorem.r();
    let outcome = if (q.q() + 1).is_multiple_of(u64::from(r)) {
        QOutcome::Classified(classify_with(q, r, opts, evaluator)?)
    } else {
        QOutcome::Negative(negative_check_with(q, r, opts, evaluator)?)
    };
    Ok(QVerification { q, outcome })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerification {
    pub theorem: TheoremId,
    pub q_min: u64,
    pub q_max: u64,
    pub per_q: Vec<QVerification>,
}

impl TheoremVerification {
    pub fn passed(&self) -> bool {
        self.per_q.iter().all(QVerification::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &QVerification> {
        self.per_q.iter().filter(|v| !v.passed())
    }
}

/// Verifies `theorem` at every prime power `q_min <= q <= q_max`.
pub fn verify_theorem_range(
    theorem: TheoremId,
    q_min: u64,
    q_max: u64,
    opts: &ClassifyOptions,
    evaluator: &(impl PermutationEvaluator + ?Sized),
) -> Result<TheoremVerification> {
    let mut per_q = Vec::new();
    for q in enumerate_prime_powers(q_max, None)? {
        if q.q() >= q_min {
            per_q.push(verify_theorem_at(theorem, q, opts, evaluator)?);
        }
    }
    Ok(TheoremVerification { theorem, q_min, q_max, per_q })
}

/// Verifies `theorem` at every prime power `q <= q_max`.
pub fn verify_theorem(theorem: TheoremId, q_max: u64) -> Result<TheoremVerification> {
    verify_theorem_range(theorem, 2, q_max, &ClassifyOptions::default(), &Sequential)
}

/// PP classes at one `q`, split by whether `b` is an `r`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub q: PrimePower,
    /// PP classes with `b^r != 1`, sorted by `b`.
    pub sporadic: Vec<ClassRow>,
    /// PP classes with `b^r = 1`, sorted by `b`.
    pub roots_of_unity: Vec<ClassRow>,
    pub class_count: usize,
}

pub fn conjecture_scan(r: u32, q_max: u64, opts: &ClassifyOptions) -> Result<Vec<ScanEntry>> {
    conjecture_scan_with(r, q_max, opts, &Sequential)
}

/// For every `q ≡ -1 (mod r)` up to `q_max`, the PP classes with `b` off and
/// on the `r`-th roots of unity.
pub fn conjecture_scan_with(
    r: u32,
    q_max: u64,
    opts: &ClassifyOptions,
    evaluator: &(impl PermutationEvaluator + ?Sized),
) -> Result<Vec<ScanEntry>> {
    if r.is_multiple_of(2) || !is_prime(u64::from(r)) {
        return Err(Error::InvalidR(r));
    }
    let mut out = Vec::new();
    for q in enumerate_prime_powers(q_max, Some(r))? {
        let report = classify_with(q, r, opts, evaluator)?;
        out.push(scan_entry(&report)?);
    }
    Ok(out)
}

/// Splits the PP classes of a report by whether `b^r = 1`.
pub fn scan_entry(report: &ClassificationReport) -> Result<ScanEntry> {
    let ctx = field_for(report.q, u64::MAX)?;
    let (roots_of_unity, sporadic) = report
        .pp_rows()
        .cloned()
        .partition(|row| ctx.pow_u64(row.b, u64::from(report.r)) == FieldElem::ONE);
    Ok(ScanEntry { q: report.q, sporadic, roots_of_unity, class_count: report.rows.len() })
}
