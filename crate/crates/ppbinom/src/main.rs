use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use ppbinom::checks::{self, Settings, Target};
use ppbinom::fixtures;
use ppbinom::parallel;
use ppbinom::report::{elem_values, Document, Format, Table};
use ppbinom::{Error, Result};
use ppbinom_core::binomial::{self, BinomialSpec};
use ppbinom_core::gf::DEFAULT_FIELD_CAP;
use ppbinom_core::hermite;
use ppbinom_core::search::{self, theorem_predicates, ClassifyOptions, TheoremId};
use ppbinom_core::symbolic::extract_g;
use ppbinom_core::{FieldCtx, FieldElem, PrimePower};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// Permutation binomials a·x + x^(r(q-1)+1) over GF(q²).
#[derive(Debug, Parser)]
#[command(name = "ppbinom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test one binomial for the permutation property.
    Check(CheckArgs),
    /// Classify every b-class for each q ≡ -1 (mod r) up to a bound.
    Search(SearchArgs),
    /// List PP classes per q, split by whether b is an r-th root of unity.
    Scan(SearchArgs),
    /// Recompute a reference result and compare.
    Verify(VerifyArgs),
    /// Emit the integer polynomial g_α and its power-of-5 exponent.
    Galpha(GalphaArgs),
    /// Evaluate Λ(q, α, a) directly and, where they apply, in closed form.
    Lambda(LambdaArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ElementArg {
    /// a = g^k for the canonical generator g.
    #[arg(long = "a-power", value_name = "K")]
    power: Option<u64>,
    /// a by coefficients c0,c1,... over the prime field.
    #[arg(long = "a-coeffs", value_name = "C0,C1,...")]
    coeffs: Option<String>,
}

impl ElementArg {
    fn resolve(&self, ctx: &FieldCtx) -> Result<FieldElem> {
        let a = match (&self.power, &self.coeffs) {
            (Some(k), _) => ctx.gen_pow(*k),
            (None, Some(list)) => {
                let coeffs = list
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Usage(format!("bad coefficient list `{list}`")))?;
                ctx.from_coeffs(&coeffs)?
            }
            (None, None) => unreachable!("clap requires one of the group"),
        };
        if a.is_zero() {
            return Err(Error::Usage("a must be nonzero".into()));
        }
        Ok(a)
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// q as an integer (49) or p^n (7^2).
    #[arg(long)]
    q: PrimePower,
    #[arg(long, default_value_t = 5)]
    r: u32,
    #[command(flatten)]
    a: ElementArg,
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 5)]
    r: u32,
    /// Largest q; defaults to 128 for r = 5, 100 for r = 7, 200 otherwise.
    #[arg(long)]
    q_max: Option<u64>,
    #[arg(long, default_value = "text")]
    format: Format,
    /// Worker threads (output does not depend on this).
    #[arg(long)]
    jobs: Option<usize>,
    /// Only emit PP classes.
    #[arg(long)]
    pp_only: bool,
    /// Cross-check every n-th class with Hermite's criterion.
    #[arg(long, default_value_t = 0)]
    hermite_every: usize,
    /// Largest field size q² allowed.
    #[arg(long, default_value_t = DEFAULT_FIELD_CAP)]
    cap: u64,
    /// Print per-q wall-clock time to stderr.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// thm1.1, thm1.2, appendix, resultants, gcds, bridge, lemma-2.4,
    /// lemma-2.6, oracle, classes, alpha-zero or all.
    target: String,
    /// Override the theorem's q bound.
    #[arg(long)]
    q_max: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "text")]
    format: Format,
    /// Fixture file or directory (else $PPBINOM_FIXTURES, else built in).
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GalphaArgs {
    alpha: u32,
    #[arg(long, default_value = "text")]
    format: Format,
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LambdaArgs {
    #[arg(long)]
    q: PrimePower,
    #[arg(long)]
    alpha: u64,
    #[arg(long, default_value_t = 5)]
    r: u32,
    #[command(flatten)]
    a: ElementArg,
    #[arg(long, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Search(args) => cmd_search(args, false),
        Command::Scan(args) => cmd_search(args, true),
        Command::Verify(args) => cmd_verify(args),
        Command::Galpha(args) => cmd_galpha(args),
        Command::Lambda(args) => cmd_lambda(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn emit(doc: &Document, format: Format) -> Result<()> {
    let text = doc.render(format)?;
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|source| Error::Io { path: PathBuf::from("<stdout>"), source })
}

fn field_for(q: PrimePower, cap: u64) -> Result<FieldCtx> {
    Ok(FieldCtx::for_q_squared(q, cap)?)
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn elem_json(ctx: &FieldCtx, x: FieldElem) -> Value {
    let [index, power, coeffs] = elem_values(ctx, x);
    json!({ "index": index, "power": power, "coeffs": coeffs })
}

fn cmd_check(args: CheckArgs) -> Result<u8> {
    let ctx = field_for(args.q, DEFAULT_FIELD_CAP)?;
    let a = args.a.resolve(&ctx)?;
    let spec = BinomialSpec::new(&ctx, args.q, args.r, a)?;
    let is_pp = binomial::is_permutation(&ctx, &spec);
    let zero_only = binomial::zero_only_root(&ctx, &spec);
    let hermite = hermite::hermite_check(&ctx, &spec);
    let b = binomial::b_class(&ctx, &spec).ok().map(|c| c.b);

    let mut doc = Document::new(
        "check",
        params(&[("q", json!(args.q.q())), ("r", json!(args.r)), ("a", elem_json(&ctx, a))]),
        Table::default(),
    );
    let s = &mut doc.summary;
    s.insert("field".into(), json!(format!("GF({}^{}) = F_{}[t]/({})", args.q.p(), ctx.degree(), args.q.p(), ctx.modulus())));
    s.insert("generator".into(), json!(ctx.format_coeffs(ctx.generator())));
    s.insert("exponent".into(), json!(spec.exponent()));
    s.insert("a".into(), json!(format!("g^{} = [{}]", ctx.log(a).unwrap_or(0), ctx.format_coeffs(a))));
    s.insert(
        "b".into(),
        match b {
            Some(b) => json!(format!("a^{} = g^{} = [{}]", (args.q.q() + 1) / u64::from(args.r), ctx.log(b).unwrap_or(0), ctx.format_coeffs(b))),
            None => json!("n/a (r does not divide q+1)"),
        },
    );
    s.insert("is_permutation".into(), json!(is_pp));
    s.insert("zero_only_root".into(), json!(zero_only));
    s.insert("hermite_check".into(), json!(hermite));
    s.insert("hermite_agrees".into(), json!(hermite == is_pp));
    if let (Some(theorem), Some(b)) = (TheoremId::for_r(args.r), b) {
        let preds = theorem_predicates(theorem, args.q)?;
        let cases = search::matching_cases(&preds, &ctx, b)?;
        s.insert("theorem".into(), json!(theorem.to_string()));
        s.insert("matched_cases".into(), json!(cases));
    }
    emit(&doc, args.format)?;
    Ok(if is_pp { 0 } else { EXIT_NEGATIVE })
}

fn default_q_max(r: u32) -> u64 {
    TheoremId::for_r(r).map_or(200, TheoremId::default_q_max)
}

fn cmd_search(args: SearchArgs, scan: bool) -> Result<u8> {
    binomial::check_r(args.r)?;
    let q_max = args.q_max.unwrap_or_else(|| default_q_max(args.r));
    if q_max.checked_mul(q_max).is_none_or(|s| s > args.cap) {
        return Err(Error::Usage(format!("q_max = {q_max} exceeds the field cap q² <= {}", args.cap)));
    }
    let opts = ClassifyOptions { hermite_every: args.hermite_every, field_cap: args.cap };
    let qs = search::enumerate_prime_powers(q_max, Some(args.r))?;
    let reports = parallel::with_jobs(args.jobs, || parallel::classify_many(&qs, args.r, &opts))??;

    let mut records = Table::new(&[
        "q", "p", "n", "r", "b_index", "b_power", "b_coeffs", "a_rep_index", "a_rep_power", "a_rep_coeffs", "is_pp",
        "b_root_of_unity", "matched_theorem_case",
    ]);
    let mut per_q = Vec::new();
    let mut total_pp = 0;
    let mut total_diffs = 0;
    for rep in &reports {
        let ctx = field_for(rep.q, args.cap)?;
        let entry = search::scan_entry(rep)?;
        if args.timing {
            if let Some(t) = rep.timing {
                eprintln!("q = {}: {:.3} s", rep.q, t.as_secs_f64());
            }
        }
        for row in &rep.rows {
            if (args.pp_only || scan) && !row.is_pp {
                continue;
            }
            let [bi, bp, bc] = elem_values(&ctx, row.b);
            let [ai, ap, ac] = elem_values(&ctx, row.representative);
            let root = ctx.pow_u64(row.b, u64::from(args.r)) == FieldElem::ONE;
            let case = if row.matched_cases.is_empty() {
                Value::Null
            } else {
                json!(row.matched_cases.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
            };
            records.push(vec![
                json!(rep.q.q()),
                json!(rep.q.p()),
                json!(rep.q.n()),
                json!(rep.r),
                bi,
                bp,
                bc,
                ai,
                ap,
                ac,
                json!(row.is_pp),
                json!(root),
                case,
            ]);
        }
        total_pp += rep.pp_count();
        total_diffs += rep.diff.len();
        let mut summary = json!({
            "q": rep.q.q(),
            "classes": rep.rows.len(),
            "pp_classes": rep.pp_count(),
            "sporadic": entry.sporadic.len(),
            "roots_of_unity": entry.roots_of_unity.len(),
        });
        if rep.theorem.is_some() {
            summary["theorem_diffs"] = json!(rep.diff.len());
        }
        if args.hermite_every > 0 {
            summary["hermite_checked"] = json!(rep.hermite_checked);
            summary["hermite_disagreements"] = json!(rep.hermite_disagreements.len());
        }
        per_q.push(summary);
    }
    let mut doc = Document::new(
        if scan { "scan" } else { "search" },
        params(&[("r", json!(args.r)), ("q_max", json!(q_max)), ("pp_only", json!(args.pp_only || scan))]),
        records,
    );
    doc.summary.insert("per_q".into(), Value::Array(per_q));
    doc.summary.insert("total_pp_classes".into(), json!(total_pp));
    doc.summary.insert("positive_q".into(), json!(reports.iter().filter(|r| r.pp_count() > 0).map(|r| r.q.q()).collect::<Vec<_>>()));
    if let Some(t) = TheoremId::for_r(args.r) {
        doc.summary.insert("theorem".into(), json!(t.to_string()));
        doc.summary.insert("theorem_diffs".into(), json!(total_diffs));
    }
    emit(&doc, args.format)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let targets: Vec<Target> = if args.target == "all" {
        Target::ALL.to_vec()
    } else {
        vec![args.target.parse()?]
    };
    let settings = Settings {
        q_max: args.q_max,
        fixtures: fixtures::resolve(args.fixtures.as_deref()),
        ..Settings::default()
    };
    let fixtures_param = json!(settings.fixtures.to_string());
    // Several targets in a machine format become one document: a row per
    // target, with each target's own records and summary under `targets`.
    let combined = targets.len() > 1 && args.format != Format::Text;
    let mut overview = Table::new(&["target", "passed", "first_diff"]);
    let mut details = Map::new();
    let mut all_passed = true;
    for target in targets {
        let outcome = parallel::with_jobs(args.jobs, || checks::run(target, &settings))??;
        let mut p = params(&[("target", json!(target.name())), ("fixtures", fixtures_param.clone())]);
        if let Some(q) = args.q_max {
            p.insert("q_max".into(), json!(q));
        }
        let doc = outcome.to_document(p);
        if combined {
            overview.push(vec![
                json!(target.name()),
                json!(outcome.passed),
                outcome.first_diff.clone().map_or(Value::Null, Value::from),
            ]);
            details.insert(
                target.name().into(),
                json!({ "records": doc.records.to_json(), "summary": doc.summary }),
            );
        } else {
            emit(&doc, args.format)?;
        }
        if args.format == Format::Text {
            match &outcome.first_diff {
                None => println!("{target}: PASS\n"),
                Some(d) => println!("{target}: FAIL\nfirst diff: {d}\n"),
            }
        }
        all_passed &= outcome.passed;
    }
    if combined {
        let mut p = params(&[("target", json!(args.target)), ("fixtures", fixtures_param)]);
        if let Some(q) = args.q_max {
            p.insert("q_max".into(), json!(q));
        }
        let mut doc = Document::new("verify", p, overview);
        doc.summary.insert("passed".into(), json!(all_passed));
        doc.summary.insert("targets".into(), Value::Object(details));
        emit(&doc, args.format)?;
    }
    Ok(if all_passed { 0 } else { EXIT_MISMATCH })
}

fn cmd_galpha(args: GalphaArgs) -> Result<u8> {
    let g = extract_g(args.alpha)?;
    let source = fixtures::resolve(args.fixtures.as_deref());
    let fixtures = fixtures::load(&source)?;
    let fixture = fixtures.get(&args.alpha);

    let mut records = Table::new(&["k", "coefficient", "fixture"]);
    let len = g.g.coeffs().len().max(fixture.map_or(0, |f| f.coeffs().len()));
    for k in 0..len {
        let c = g.g.coeffs().get(k).map_or(Value::Null, |c| json!(c.to_string()));
        let f = fixture.and_then(|f| f.coeffs().get(k)).map_or(Value::Null, |c| json!(c.to_string()));
        records.push(vec![json!(k), c, f]);
    }
    let mut doc = Document::new("galpha", params(&[("alpha", json!(args.alpha))]), records);
    doc.summary.insert("alpha".into(), json!(args.alpha));
    doc.summary.insert("e".into(), json!(g.e));
    doc.summary.insert("degree".into(), json!(g.g.degree()));
    let status = match fixture {
        None => "no fixture (experimental)".to_string(),
        Some(f) if *f == g.g => "matches fixture".to_string(),
        Some(f) if f.neg() == g.g => "differs from fixture: computed = -fixture".to_string(),
        Some(f) => {
            let differing = (0..len)
                .filter(|&k| g.g.coeffs().get(k) != f.coeffs().get(k))
                .count();
            format!("differs from fixture in {differing} coefficients")
        }
    };
    doc.summary.insert("fixture".into(), json!(status));
    emit(&doc, args.format)?;
    Ok(0)
}

fn cmd_lambda(args: LambdaArgs) -> Result<u8> {
    let ctx = field_for(args.q, DEFAULT_FIELD_CAP)?;
    let a = args.a.resolve(&ctx)?;
    binomial::check_r(args.r)?;
    let q = args.q.q();
    let window = hermite::gamma(q, args.alpha, args.r)?;
    let direct = hermite::lambda_direct(&ctx, args.q, args.alpha, a, args.r)?;

    let mut doc = Document::new(
        "lambda",
        params(&[("q", json!(q)), ("alpha", json!(args.alpha)), ("r", json!(args.r)), ("a", elem_json(&ctx, a))]),
        Table::default(),
    );
    let s = &mut doc.summary;
    s.insert("gamma".into(), json!(window.members));
    s.insert("lambda".into(), elem_json(&ctx, direct.value));
    s.insert("term_count".into(), json!(direct.term_count));
    s.insert(
        "power_sum_relation".into(),
        json!(format!(
            "sum f(x)^{} = [{}]",
            hermite::bridge_exponent(q, args.alpha),
            ctx.format_coeffs(hermite::power_sum_from_lambda(&ctx, args.q, args.alpha, a, args.r)?)
        )),
    );
    if args.r == 5 && (q + 1).is_multiple_of(5) {
        if checks::closed_form_alphas(q).contains(&args.alpha) {
            let g = extract_g(args.alpha as u32)?;
            let closed = hermite::lambda_closed(&ctx, args.q, args.alpha, a, &g)?;
            s.insert("closed_form".into(), elem_json(&ctx, closed));
            s.insert("closed_form_agrees".into(), json!(closed == direct.value));
        }
        if let Ok(special) = hermite::special_value(&ctx, args.q, args.alpha, a) {
            s.insert("special_value".into(), elem_json(&ctx, special));
            s.insert("special_value_agrees".into(), json!(special == direct.value));
        }
    }
    emit(&doc, args.format)?;
    Ok(0)
}
