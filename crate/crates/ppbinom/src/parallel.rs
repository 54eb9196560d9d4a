//! Rayon drivers. Work is split across `q` values and, within one `q`,
//! across the `a` values being tested; results are collected in input order
//! so output never depends on the worker count.

use std::time::Instant;

use rayon::prelude::*;

use ppbinom_core::search::{
    self, permutes_one, ClassificationReport, ClassifyOptions, PermutationEvaluator, ScanEntry, TheoremId,
    TheoremVerification,
};
use ppbinom_core::{FieldCtx, FieldElem, PrimePower};

use crate::Result;

/// Evaluates a batch of `a` values on the current rayon pool.
#[derive(Debug, Clone, Copy, Default)]
pub struct Parallel;

impl PermutationEvaluator for Parallel {
    fn permutes(&self, ctx: &FieldCtx, q: PrimePower, r: u32, a: &[FieldElem]) -> Vec<bool> {
        a.par_iter().map(|&a| permutes_one(ctx, q, r, a)).collect()
    }
}

/// Runs `f` on a pool with `jobs` workers (rayon's default when `None`).
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    Ok(builder.build()?.install(f))
}

/// Classifies each `q`, recording wall-clock time per `q`.
pub fn classify_many(qs: &[PrimePower], r: u32, opts: &ClassifyOptions) -> Result<Vec<ClassificationReport>> {
    qs.par_iter()
        .map(|&q| {
            let start = Instant::now();
            let mut rep = search::classify_with(q, r, opts, &Parallel)?;
            rep.timing = Some(start.elapsed());
            Ok(rep)
        })
        .collect()
}

pub fn verify_theorem(
    theorem: TheoremId,
    q_min: u64,
    q_max: u64,
    opts: &ClassifyOptions,
) -> Result<TheoremVerification> {
    let qs: Vec<PrimePower> = search::enumerate_prime_powers(q_max, None)?
        .into_iter()
        .filter(|q| q.q() >= q_min)
        .collect();
    let per_q = qs
        .par_iter()
        .map(|&q| search::verify_theorem_at(theorem, q, opts, &Parallel))
        .collect::<ppbinom_core::Result<Vec<_>>>()?;
    Ok(TheoremVerification { theorem, q_min, q_max, per_q })
}

pub fn conjecture_scan(r: u32, q_max: u64, opts: &ClassifyOptions) -> Result<Vec<ScanEntry>> {
    let qs = search::enumerate_prime_powers(q_max, Some(r))?;
    classify_many(&qs, r, opts)?
        .iter()
        .map(|rep| Ok(search::scan_entry(rep)?))
        .collect()
}
