//! Acceptance suite: one line per criterion.
//!
//! Every criterion is run as stated, single-threaded, and compared at exact
//! tolerance against its time budget. A few reference results do not hold as
//! stated; those criteria report FAIL, and the suite accepts them only when
//! the failure has exactly the documented shape (any other failure, or an
//! unexpected pass, fails the run).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use ppbinom::checks::{self, CheckOutcome, Settings, Target};
use ppbinom::parallel::with_jobs;

struct Criterion {
    id: u8,
    title: &'static str,
    target: Target,
    budget: Duration,
    known_failure: Option<KnownFailure>,
}

struct KnownFailure {
    reason: &'static str,
    matches: fn(&CheckOutcome) -> bool,
}

fn column(outcome: &CheckOutcome, name: &str) -> Vec<Value> {
    let idx = outcome.records.columns.iter().position(|c| *c == name).expect("column exists");
    outcome.records.rows.iter().map(|r| r[idx].clone()).collect()
}

fn failing_q(outcome: &CheckOutcome) -> Value {
    outcome.summary.get("failing_q").cloned().unwrap_or(Value::Null)
}

fn r5_shape(o: &CheckOutcome) -> bool {
    failing_q(o) == json!([3, 4, 59])
}

fn r7_shape(o: &CheckOutcome) -> bool {
    failing_q(o) == json!([5])
}

fn appendix_shape(o: &CheckOutcome) -> bool {
    let alpha = column(o, "alpha");
    let status = column(o, "status");
    let negated = column(o, "negated");
    let e_ok = column(o, "e") == column(o, "expected_e");
    e_ok && alpha.iter().zip(status.iter().zip(&negated)).all(|(a, (s, n))| {
        if *a == json!(9) {
            *s == json!("MISMATCH") && *n == json!(true)
        } else {
            *s == json!("ok")
        }
    })
}

fn special_values_shape(o: &CheckOutcome) -> bool {
    column(o, "q") == [json!(19), json!(29), json!(49)]
        && column(o, "mismatch_alphas") == [json!([14]), json!([]), json!([])]
        && o.notes.iter().any(|n| n.contains("(3q-1)/4 = 14"))
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "classification of a·x + x^(5q-4) for every prime power q <= 128 matches the seven listed cases",
            target: Target::ClassifyR5,
            budget: s(120),
            known_failure: Some(KnownFailure {
                reason: "q = 3 and q = 4 (small q where f degenerates) and q = 59 (the listed factors select b in {4, 55}; brute force gives b in {16, 23})",
                matches: r5_shape,
            }),
        },
        Criterion {
            id: 2,
            title: "classification of a·x + x^(7q-6) for every prime power q <= 100 matches the three listed cases",
            target: Target::ClassifyR7,
            budget: s(120),
            known_failure: Some(KnownFailure {
                reason: "q = 5 (f = ax + x^5 on GF(25) permutes for 18 values of a; a small-q exception)",
                matches: r7_shape,
            }),
        },
        Criterion {
            id: 3,
            title: "regenerated g_α equal the fixtures for α in {4, 9, 14, 24} with e = (4, 10, 16, 28)",
            target: Target::Appendix,
            budget: s(60),
            known_failure: Some(KnownFailure {
                reason: "computed g_9 is the negative of the transcribed g_9 on every coefficient (e = 10 agrees); α = 4, 14, 24 match exactly",
                matches: appendix_shape,
            }),
        },
        Criterion {
            id: 4,
            title: "gcd(R(g_4, g_9), R(g_4, g_14)) = 2^15 * 3^3 * 5^197 with cofactor 1",
            target: Target::Resultants,
            budget: s(60),
            known_failure: None,
        },
        Criterion {
            id: 5,
            title: "gcd(g_4, g_24) = x over F_2 and gcd(g_4, g_9) = 1 over F_3",
            target: Target::Gcds,
            budget: s(30),
            known_failure: None,
        },
        Criterion {
            id: 6,
            title: "power sums equal -a^((α+1)(1-q)) Λ for q in {9, 19, 29}, all α, 10 sampled a",
            target: Target::Bridge,
            budget: s(120),
            known_failure: None,
        },
        Criterion {
            id: 7,
            title: "closed form through g_α equals the direct Λ for q in {29, 49, 59, 64, 89}, 20 sampled a",
            target: Target::ClosedForm,
            budget: s(60),
            known_failure: None,
        },
        Criterion {
            id: 8,
            title: "at nontrivial fifth roots of unity Λ vanishes except at α = (q-1)/2, (q-3)/4 where it takes the stated values",
            target: Target::RootOfUnityValues,
            budget: s(60),
            known_failure: Some(KnownFailure {
                reason: "α = (3q-1)/4 is a third exceptional exponent (q = 19, α = 14): Λ = -a^(-(α+1)/5)(y^-2 + y^-1 + 1 + y) != 0",
                matches: special_values_shape,
            }),
        },
        Criterion {
            id: 9,
            title: "Hermite's criterion agrees with brute force for every a in GF(81)* (r = 5) and GF(169)* (r = 7)",
            target: Target::Oracle,
            budget: s(300),
            known_failure: None,
        },
        Criterion {
            id: 10,
            title: "permutation verdict is constant on every b-class over all a (q = 4, 9, 19 with r = 5; q = 13 with r = 7)",
            target: Target::Classes,
            budget: s(120),
            known_failure: None,
        },
        Criterion {
            id: 11,
            title: "Λ(5, 0, a) = -a^-5 and Λ(7, 0, a) = -a^-21 for every nonzero a",
            target: Target::AlphaZero,
            budget: s(10),
            known_failure: None,
        },
    ]
}

fn main() -> ExitCode {
    // `cargo test -- <filter>` passes arguments meant for libtest harnesses.
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let settings = Settings::default();
    let mut unexpected = 0;
    println!("acceptance: tolerance exact, single-threaded, budgets per criterion");
    for c in criteria() {
        if !filter.is_empty() && !filter.iter().any(|f| c.id.to_string() == *f || c.target.name() == f) {
            continue;
        }
        let start = Instant::now();
        let result = with_jobs(Some(1), || checks::run(c.target, &settings));
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(Ok(o)) => o,
            Ok(Err(e)) | Err(e) => {
                println!("criterion {:>2} ERROR  {}: {e}", c.id, c.title);
                unexpected += 1;
                continue;
            }
        };
        let in_budget = elapsed <= c.budget;
        let passed = outcome.passed && in_budget;
        let verdict = if passed { "PASS" } else { "FAIL" };
        let timing = format!("{:.2}s/{}s", elapsed.as_secs_f64(), c.budget.as_secs());
        let mut line = format!("criterion {:>2} {verdict}  exact  {timing:>12}  {}", c.id, c.title);
        if !in_budget {
            line.push_str(" | over time budget");
        }
        if let Some(d) = &outcome.first_diff {
            line.push_str(&format!(" | first diff: {d}"));
        }
        match (&c.known_failure, passed) {
            (None, true) => {}
            (None, false) => unexpected += 1,
            (Some(k), false) if in_budget && (k.matches)(&outcome) => {
                line.push_str(&format!(" | documented: {}", k.reason));
            }
            (Some(_), false) => {
                line.push_str(" | failure differs from the documented one");
                unexpected += 1;
            }
            (Some(_), true) => {
                line.push_str(" | expected a documented failure but passed");
                unexpected += 1;
            }
        }
        println!("{line}");
        for note in &outcome.notes {
            println!("             note: {note}");
        }
    }
    if unexpected == 0 {
        println!("acceptance: every outcome as recorded");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
