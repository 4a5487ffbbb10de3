//! Command-line surface: check, decompose, span, oracle, sample, selftest.
//!
//! Exit codes: 0 for any verdict (including inconclusive; the tool ran), 2
//! for parse or configuration errors, 3 for scope or degenerate-input
//! errors. Output is text by default and JSON with `--mode json`; batch
//! checking is always JSON-lines. Identical invocation and seed produce
//! byte-identical output.

use crate::audit;
use crate::criteria::analyze;
use crate::gf::FieldSpec;
use crate::mpoly::Polynomial;
use crate::oracle;
use crate::parser::{parse_field_spec, parse_polynomial};
use crate::semigroup::{gaps_below, span_membership, GeneratorSet};
use crate::Error;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde_json::json;
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Default sampling seed; fixed so plain invocations reproduce.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "absirr",
    version,
    about = "Decides absolute irreducibility of polynomials over finite fields by degree-gap criteria, with verifiable certificates and a brute-force oracle."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide absolute irreducibility and print a certificate.
    Check {
        /// Field, e.g. "GF(2)", "GF(3^2)", "GF(2^3; 1,1,0,1)".
        #[arg(long)]
        field: Option<String>,
        /// Polynomial text, e.g. "x^2+xy+y^2+x".
        #[arg(long)]
        poly: Option<String>,
        /// Batch file with one field<TAB>polynomial pair per line.
        #[arg(long = "in", value_name = "FILE", conflicts_with_all = ["field", "poly"])]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        mode: Mode,
    },
    /// Print the graded forms, gap profile, and hypothesis report.
    Decompose {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "text")]
        mode: Mode,
    },
    /// Test numerical-semigroup membership and list the gaps below a target.
    Span {
        /// Target value.
        target: u64,
        /// Comma-separated generators, e.g. --gens 3,5.
        #[arg(long, value_delimiter = ',')]
        gens: Vec<u64>,
        #[arg(long, value_enum, default_value = "text")]
        mode: Mode,
    },
    /// Factor by brute force over extensions and report the sweep.
    Oracle {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
        /// Candidate-scan budget; falls back to ABSIRR_ORACLE_BUDGET, then the built-in default.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        mode: Mode,
    },
    /// Draw random polynomials of exact degree and report verdict rates
    /// against the oracle.
    Sample {
        #[arg(long)]
        field: String,
        /// Exact total degree of every draw.
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Number of draws, or "all" for exhaustive monic enumeration.
        #[arg(long, default_value = "100")]
        count: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        mode: Mode,
    },
    /// Exhaustively audit every small bivariate polynomial over GF(2)
    /// against the oracle; nonzero exit on any violation.
    Selftest {
        /// Sweep all total degrees up to this cap.
        #[arg(long, default_value_t = 4)]
        degree_cap: u32,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        mode: Mode,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::NotPrime(_)
        | Error::InvalidModulus(_)
        | Error::ReducibleModulus { .. }
        | Error::ArityMismatch(..)
        | Error::VariableIndex { .. }
        | Error::EmptyList => 2,
        _ => 3,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    exit_code(e)
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, i32> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("ABSIRR_ORACLE_BUDGET") {
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            eprintln!("error: ABSIRR_ORACLE_BUDGET is not a valid integer: {text}");
            2
        }),
        Err(_) => Ok(oracle::DEFAULT_BUDGET),
    }
}

fn parse_input(field_text: &str, poly_text: &str) -> crate::Result<(FieldSpec, Polynomial)> {
    let field = parse_field_spec(field_text)?;
    let f = parse_polynomial(poly_text, &field, None)?;
    Ok((field, f))
}

/// "-, outside, inside": the first gap has nothing before it; later gaps
/// report membership in the span of the earlier ones.
fn span_flags(span_status: &[bool]) -> String {
    span_status
        .iter()
        .enumerate()
        .map(|(i, &inside)| {
            if i == 0 {
                "-"
            } else if inside {
                "inside"
            } else {
                "outside"
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_u64(values: &[u64]) -> String {
    if values.is_empty() {
        return "none".to_string();
    }
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fraction(n: u64, total: u64) -> String {
    if total == 0 {
        return "0.0000".to_string();
    }
    format!("{:.4}", n as f64 / total as f64)
}

fn print_certificate_text(cert: &crate::criteria::Certificate) {
    println!("verdict: {}", cert.verdict);
    println!("rule: {}", cert.rule);
    println!("degree: {}", cert.degree);
    println!("gaps: {}", join_u64(&cert.gaps));
    if !cert.span_status.is_empty() {
        println!("span: {}", span_flags(&cert.span_status));
    }
    println!("leading-form-squarefree: {}", yes_no(cert.leading_squarefree));
    println!("forms-gcd: {}", cert.forms_gcd);
    if let Some(m) = cert.max_factors {
        println!("max-factors: {m}");
    }
    if let Some(d) = cert.min_factor_degree {
        println!("min-factor-degree: {d}");
    }
    if let Some(w) = &cert.witness {
        println!("witness: {w}");
    }
    if let Some(failed) = &cert.failed_hypotheses {
        println!("failed-hypotheses: {}", failed.join(", "));
    }
}

fn cmd_check_single(field_text: &str, poly_text: &str, mode: Mode) -> i32 {
    let f = match parse_input(field_text, poly_text) {
        Ok((_, f)) => f,
        Err(e) => return fail(&e),
    };
    let verdict = match analyze(&f) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let cert = verdict.certificate();
    match mode {
        Mode::Json => println!(
            "{}",
            serde_json::to_string(&cert).expect("certificate serializes")
        ),
        Mode::Text => print_certificate_text(&cert),
    }
    0
}

fn cmd_check_batch(path: &PathBuf) -> i32 {
    let contents = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let mut any_failed = false;
    for (idx, raw) in contents.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let mut emit_err = |msg: String| {
            println!("{}", json!({ "line": line_no, "error": msg }));
            any_failed = true;
        };
        let Some((field_text, poly_text)) = line.split_once('\t') else {
            emit_err("missing tab between field and polynomial".to_string());
            continue;
        };
        match parse_input(field_text.trim(), poly_text.trim()).and_then(|(_, f)| analyze(&f)) {
            Ok(verdict) => println!(
                "{}",
                serde_json::to_string(&verdict.certificate()).expect("certificate serializes")
            ),
            Err(e) => emit_err(e.to_string()),
        }
    }
    if any_failed {
        2
    } else {
        0
    }
}

fn cmd_decompose(field_text: &str, poly_text: &str, mode: Mode) -> i32 {
    let (field, f) = match parse_input(field_text, poly_text) {
        Ok(pair) => pair,
        Err(e) => return fail(&e),
    };
    let decomp = match f.graded_decomposition() {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let profile = match f.gap_profile() {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    let leading_sf = match crate::gcd::is_squarefree(decomp.leading()) {
        Ok(r) => r.squarefree,
        Err(e) => return fail(&e),
    };
    let all_forms: Vec<Polynomial> = decomp.forms().iter().map(|(_, g)| g.clone()).collect();
    let forms_gcd = match crate::gcd::gcd_many(&all_forms) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let homogeneous = profile.gaps().is_empty();
    let mut span_status = Vec::new();
    for (i, &g) in profile.gaps().iter().enumerate() {
        let gens = match GeneratorSet::new(profile.gaps()[..i].iter().copied()) {
            Ok(gens) => gens,
            Err(e) => return fail(&e),
        };
        match span_membership(g, &gens) {
            Ok(inside) => span_status.push(inside),
            Err(e) => return fail(&e),
        }
    }
    match mode {
        Mode::Text => {
            println!("field: {field}");
            println!("degree: {}", decomp.degree());
            println!("forms:");
            for (d, form) in decomp.forms() {
                println!("  degree {d}: {form}");
            }
            if homogeneous {
                println!("degree-gap: infinity");
            } else {
                println!("degree-gap: {}", profile.gaps()[0]);
                println!("gaps: {}", join_u64(profile.gaps()));
                println!("span: {}", span_flags(&span_status));
            }
            println!("leading-form-squarefree: {}", yes_no(leading_sf));
            println!("forms-gcd: {forms_gcd}");
        }
        Mode::Json => {
            let degree_gap = if homogeneous {
                serde_json::Value::Null
            } else {
                json!(profile.gaps()[0])
            };
            let forms: Vec<_> = decomp
                .forms()
                .iter()
                .map(|(d, form)| json!({ "degree": d, "form": form.to_string() }))
                .collect();
            println!(
                "{}",
                json!({
                    "field": field.to_string(),
                    "degree": decomp.degree(),
                    "forms": forms,
                    "degree_gap": degree_gap,
                    "gaps": profile.gaps(),
                    "span_status": span_status,
                    "leading_squarefree": leading_sf,
                    "forms_gcd": forms_gcd.to_string(),
                })
            );
        }
    }
    0
}

fn cmd_span(target: u64, gens: &[u64], mode: Mode) -> i32 {
    let set = match GeneratorSet::new(gens.iter().copied()) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let representable = match span_membership(target, &set) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let gaps = match gaps_below(target, &set) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    match mode {
        Mode::Text => {
            let word = if representable {
                "representable"
            } else {
                "not representable"
            };
            println!("{word}; gaps below {target}: {}", join_u64(&gaps));
        }
        Mode::Json => println!(
            "{}",
            json!({
                "target": target,
                "generators": set.generators(),
                "representable": representable,
                "gaps_below": gaps,
            })
        ),
    }
    0
}

fn cmd_oracle(field_text: &str, poly_text: &str, budget: u64, mode: Mode) -> i32 {
    let (field, f) = match parse_input(field_text, poly_text) {
        Ok(pair) => pair,
        Err(e) => return fail(&e),
    };
    let report = match oracle::count_absolute_factors(&f, budget) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    match mode {
        Mode::Text => {
            println!("field: {field}");
            println!("tested extensions: {}", join_u64(
                &report.tested_extensions.iter().map(|&k| k as u64).collect::<Vec<_>>(),
            ));
            for (k, irr) in &report.irreducible_over {
                println!("irreducible over k={k}: {}", yes_no(*irr));
            }
            println!("max-factors: {}", report.max_factor_count);
            if let Some(sample) = &report.sample_factorization {
                println!("sample factorization over {}:", sample[0].field());
                for g in sample {
                    println!("  {g}");
                }
            }
        }
        Mode::Json => {
            let irreducible: BTreeMap<String, bool> = report
                .irreducible_over
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect();
            let sample = report.sample_factorization.as_ref().map(|sample| {
                json!({
                    "field": sample[0].field().to_string(),
                    "factors": sample.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                })
            });
            println!(
                "{}",
                json!({
                    "base_field": field.to_string(),
                    "tested_extensions": report.tested_extensions,
                    "irreducible_over": irreducible,
                    "max_factors": report.max_factor_count,
                    "sample_factorization": sample,
                })
            );
        }
    }
    0
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    field_text: &str,
    degree: u32,
    arity: usize,
    count: &str,
    seed: u64,
    budget: u64,
    mode: Mode,
) -> i32 {
    let field = match parse_field_spec(field_text) {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    if arity == 0 || degree == 0 {
        eprintln!("error: sample needs arity >= 1 and degree >= 1");
        return 2;
    }
    let exhaustive = count == "all";
    let stats = if exhaustive {
        audit::sample_stats(audit::enumerate_monic_exact(&field, arity, degree), budget)
    } else {
        let n: u64 = match count.parse() {
            Ok(n) => n,
            Err(_) => {
                eprintln!("error: --count takes an integer or \"all\", got {count:?}");
                return 2;
            }
        };
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let draws: Vec<Polynomial> = (0..n)
            .map(|_| audit::random_polynomial_exact(&mut rng, &field, arity, degree))
            .collect();
        audit::sample_stats(draws, budget)
    };
    let stats = match stats {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    match mode {
        Mode::Text => {
            println!("field: {field}");
            if exhaustive {
                println!("samples: {} (exhaustive monic, degree {degree}, arity {arity})", stats.count);
            } else {
                println!("samples: {} (random, degree {degree}, arity {arity}, seed {seed})", stats.count);
            }
            println!(
                "square-free: {} ({})",
                stats.squarefree,
                fraction(stats.squarefree, stats.count)
            );
            println!(
                "square-free leading form: {} ({})",
                stats.leading_squarefree,
                fraction(stats.leading_squarefree, stats.count)
            );
            for (rule, n) in &stats.rule_counts {
                println!("rule {rule}: {n} ({})", fraction(*n, stats.count));
            }
            println!("oracle out-of-scope: {}", stats.out_of_scope);
            println!("oracle disagreements: {}", stats.disagreements.len());
            for d in &stats.disagreements {
                println!("  {d}");
            }
        }
        Mode::Json => {
            println!(
                "{}",
                json!({
                    "field": field.to_string(),
                    "mode": if exhaustive { "exhaustive-monic" } else { "random" },
                    "degree": degree,
                    "arity": arity,
                    "seed": if exhaustive { serde_json::Value::Null } else { json!(seed) },
                    "samples": stats.count,
                    "squarefree": stats.squarefree,
                    "squarefree_fraction": stats.squarefree as f64 / stats.count.max(1) as f64,
                    "leading_squarefree": stats.leading_squarefree,
                    "leading_squarefree_fraction":
                        stats.leading_squarefree as f64 / stats.count.max(1) as f64,
                    "rule_counts": stats.rule_counts,
                    "out_of_scope": stats.out_of_scope,
                    "disagreements": stats.disagreements,
                })
            );
        }
    }
    if stats.disagreements.is_empty() {
        0
    } else {
        1
    }
}

fn cmd_selftest(degree_cap: u32, budget: u64, mode: Mode) -> i32 {
    let field = FieldSpec::extension(2, 1).expect("GF(2) exists");
    let stats = match audit::soundness_sweep(audit::enumerate_all(&field, 2, degree_cap), budget) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    match mode {
        Mode::Text => {
            println!("field: {field}");
            println!("inputs: {} (arity 2, degree <= {degree_cap})", stats.total);
            for (verdict, n) in &stats.verdict_counts {
                println!("verdict {verdict}: {n}");
            }
            for (rule, n) in &stats.rule_counts {
                println!("rule {rule}: {n}");
            }
            println!("oracle-confirmed: {}", stats.confirmed);
            println!("oracle out-of-scope: {}", stats.out_of_scope);
            println!("violations: {}", stats.violations.len());
            for v in &stats.violations {
                println!("  {v}");
            }
        }
        Mode::Json => println!(
            "{}",
            json!({
                "field": field.to_string(),
                "degree_cap": degree_cap,
                "inputs": stats.total,
                "verdicts": stats.verdict_counts,
                "rules": stats.rule_counts,
                "confirmed": stats.confirmed,
                "out_of_scope": stats.out_of_scope,
                "violations": stats.violations,
            })
        ),
    }
    if stats.violations.is_empty() {
        0
    } else {
        1
    }
}

/// Parses argv and runs one command, returning the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check {
            field,
            poly,
            input,
            mode,
        } => match (field, poly, input) {
            (_, _, Some(path)) => cmd_check_batch(&path),
            (Some(field), Some(poly), None) => cmd_check_single(&field, &poly, mode),
            _ => {
                eprintln!("error: check needs --field and --poly, or --in FILE");
                2
            }
        },
        Cmd::Decompose { field, poly, mode } => cmd_decompose(&field, &poly, mode),
        Cmd::Span { target, gens, mode } => cmd_span(target, &gens, mode),
        Cmd::Oracle {
            field,
            poly,
            budget,
            mode,
        } => match resolve_budget(budget) {
            Ok(b) => cmd_oracle(&field, &poly, b, mode),
            Err(code) => code,
        },
        Cmd::Sample {
            field,
            degree,
            arity,
            count,
            seed,
            budget,
            mode,
        } => match resolve_budget(budget) {
            Ok(b) => cmd_sample(&field, degree, arity, &count, seed, b, mode),
            Err(code) => code,
        },
        Cmd::Selftest {
            degree_cap,
            budget,
            mode,
        } => match resolve_budget(budget) {
            Ok(b) => cmd_selftest(degree_cap, b, mode),
            Err(code) => code,
        },
    }
}
