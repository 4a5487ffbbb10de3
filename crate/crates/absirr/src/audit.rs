//! Cross-checks verdicts against the brute-force oracle and aggregates the
//! statistics behind `selftest` and `sample`.
//!
//! A verdict is audited by what it claims: proved irreducibility must be
//! confirmed by the extension sweep, factor bounds must dominate the
//! oracle's count and factor degrees, and a reducibility witness must
//! actually divide the input. Inconclusive verdicts claim nothing and the
//! oracle is never consulted for them. Oracle scope errors are counted, not
//! hidden.

use crate::criteria::{analyze, Verdict};
use crate::gf::FieldSpec;
use crate::mpoly::Polynomial;
use crate::oracle;
use crate::Result;
use rand::Rng;
use std::collections::BTreeMap;

/// What auditing one verdict established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// The claim was verified (or the verdict made no claim).
    Consistent,
    /// The oracle declined within budget; nothing was verified.
    OutOfScope,
    /// The claim is wrong; the description names input and discrepancy.
    Violation(String),
}

/// Audits an already-computed verdict for `f` against the oracle.
pub fn check_verdict(f: &Polynomial, verdict: &Verdict, budget: u64) -> Result<CheckOutcome> {
    let describe = |reason: String| {
        CheckOutcome::Violation(format!("{} over {}: {}", f, f.field(), reason))
    };
    match verdict {
        Verdict::AbsolutelyIrreducible { rule, .. } => {
            match oracle::is_absolutely_irreducible(f, budget) {
                Ok(report) if report.is_absolutely_irreducible() => Ok(CheckOutcome::Consistent),
                Ok(report) => Ok(describe(format!(
                    "rule {} claimed irreducible, oracle found {} factors",
                    rule, report.max_factor_count
                ))),
                Err(e) if e.is_scope() => Ok(CheckOutcome::OutOfScope),
                Err(e) => Err(e),
            }
        }
        Verdict::FactorBounds {
            max_factors,
            min_factor_degree,
            rule,
            ..
        } => match oracle::count_absolute_factors(f, budget) {
            Ok(report) => {
                if u64::from(report.max_factor_count) > *max_factors {
                    return Ok(describe(format!(
                        "rule {} allowed {} factors, oracle found {}",
                        rule, max_factors, report.max_factor_count
                    )));
                }
                if let (Some(min), Some(sample)) = (min_factor_degree, &report.sample_factorization)
                {
                    for g in sample {
                        let d = g.total_degree().unwrap_or(0);
                        if d < *min {
                            return Ok(describe(format!(
                                "rule {} promised factor degree >= {}, oracle factor has degree {}",
                                rule, min, d
                            )));
                        }
                    }
                }
                Ok(CheckOutcome::Consistent)
            }
            Err(e) if e.is_scope() => Ok(CheckOutcome::OutOfScope),
            Err(e) => Err(e),
        },
        Verdict::NotAbsolutelyIrreducible { witness, .. } => {
            let degree = f.total_degree().unwrap_or(0);
            let wdeg = witness.total_degree().unwrap_or(0);
            if wdeg == 0 || wdeg >= degree {
                return Ok(describe(format!("witness degree {} is trivial", wdeg)));
            }
            let lifted = if witness.field() == f.field() {
                f.clone()
            } else {
                f.lift_to_extension(witness.field())?
            };
            if lifted.is_divisible_by(witness)? {
                Ok(CheckOutcome::Consistent)
            } else {
                Ok(describe("witness does not divide the input".to_string()))
            }
        }
        Verdict::Inconclusive { .. } => Ok(CheckOutcome::Consistent),
    }
}

/// Runs `analyze` and audits the result.
pub fn check_one(f: &Polynomial, budget: u64) -> Result<(Verdict, CheckOutcome)> {
    let verdict = analyze(f)?;
    let outcome = check_verdict(f, &verdict, budget)?;
    Ok((verdict, outcome))
}

/// Aggregate of auditing a stream of inputs.
#[derive(Clone, Debug, Default)]
pub struct SweepStats {
    pub total: u64,
    pub verdict_counts: BTreeMap<String, u64>,
    pub rule_counts: BTreeMap<String, u64>,
    /// Verdicts whose claims the oracle confirmed.
    pub confirmed: u64,
    /// Oracle scope errors while auditing claims.
    pub out_of_scope: u64,
    pub violations: Vec<String>,
}

impl SweepStats {
    fn record(&mut self, verdict: &Verdict, outcome: CheckOutcome) {
        self.total += 1;
        let kind = match verdict {
            Verdict::AbsolutelyIrreducible { .. } => "absolutely_irreducible",
            Verdict::FactorBounds { .. } => "factor_bounds",
            Verdict::NotAbsolutelyIrreducible { .. } => "not_absolutely_irreducible",
            Verdict::Inconclusive { .. } => "inconclusive",
        };
        *self.verdict_counts.entry(kind.to_string()).or_default() += 1;
        *self.rule_counts.entry(verdict.rule().to_string()).or_default() += 1;
        match outcome {
            CheckOutcome::Consistent => self.confirmed += 1,
            CheckOutcome::OutOfScope => self.out_of_scope += 1,
            CheckOutcome::Violation(v) => self.violations.push(v),
        }
    }
}

/// Audits every input in the stream; zero polynomials are rejected upstream.
pub fn soundness_sweep<I>(inputs: I, budget: u64) -> Result<SweepStats>
where
    I: IntoIterator<Item = Polynomial>,
{
    let mut stats = SweepStats::default();
    for f in inputs {
        let (verdict, outcome) = check_one(&f, budget)?;
        stats.record(&verdict, outcome);
    }
    Ok(stats)
}

/// Everything `sample` reports about one batch of draws.
#[derive(Clone, Debug, Default)]
pub struct SampleStats {
    pub count: u64,
    /// Inputs squarefree as whole polynomials.
    pub squarefree: u64,
    /// Inputs whose leading form is squarefree.
    pub leading_squarefree: u64,
    pub rule_counts: BTreeMap<String, u64>,
    pub out_of_scope: u64,
    pub disagreements: Vec<String>,
}

/// Audits a batch and additionally tracks the squarefree rates.
pub fn sample_stats<I>(inputs: I, budget: u64) -> Result<SampleStats>
where
    I: IntoIterator<Item = Polynomial>,
{
    let mut stats = SampleStats::default();
    for f in inputs {
        let whole = crate::gcd::is_squarefree(&f)?;
        let (verdict, outcome) = check_one(&f, budget)?;
        stats.count += 1;
        if whole.squarefree {
            stats.squarefree += 1;
        }
        if verdict.hypotheses().leading_squarefree {
            stats.leading_squarefree += 1;
        }
        *stats.rule_counts.entry(verdict.rule().to_string()).or_default() += 1;
        match outcome {
            CheckOutcome::Consistent => {}
            CheckOutcome::OutOfScope => stats.out_of_scope += 1,
            CheckOutcome::Violation(v) => stats.disagreements.push(v),
        }
    }
    Ok(stats)
}

fn monomials_up_to(arity: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; arity];
    fn rec(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, pos: usize, left: u32) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[pos] = e;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    rec(&mut out, &mut current, 0, cap);
    out
}

/// All nonzero polynomials of total degree <= cap, in odometer order over
/// the canonical element indices.
pub fn enumerate_all(
    field: &FieldSpec,
    arity: usize,
    cap: u32,
) -> impl Iterator<Item = Polynomial> + use<> {
    let field = field.clone();
    let mons = monomials_up_to(arity, cap);
    let q = field.order();
    let mut digits = vec![0u128; mons.len()];
    let mut done = false;
    std::iter::from_fn(move || {
        loop {
            // Advance the odometer; the all-zero vector is skipped.
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    done = true;
                    return None;
                }
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if done {
                return None;
            }
            let terms = mons
                .iter()
                .zip(&digits)
                .filter(|(_, &d)| d != 0)
                .map(|(m, &d)| (m.clone(), field.element_at(d)));
            return Some(
                Polynomial::from_terms(&field, arity, terms).expect("enumerated terms are valid"),
            );
        }
    })
}

/// All polynomials of total degree exactly `degree` normalized so the first
/// nonzero coefficient in grevlex-descending order is 1 (monic for arity 1).
pub fn enumerate_monic_exact(
    field: &FieldSpec,
    arity: usize,
    degree: u32,
) -> impl Iterator<Item = Polynomial> + use<> {
    let field = field.clone();
    let mons = monomials_up_to(arity, degree);
    // Grevlex-ascending order so the exact-degree block sits at the top.
    let mut ordered: Vec<Vec<u32>> = mons;
    ordered.sort_by(|a, b| {
        crate::mpoly::Monomial::new(a.clone()).cmp(&crate::mpoly::Monomial::new(b.clone()))
    });
    let top_block = ordered
        .iter()
        .filter(|m| m.iter().sum::<u32>() == degree)
        .count();
    let n = ordered.len();
    let q = field.order();
    let mut lead = n; // one past the current leading slot, descending
    let mut digits: Vec<u128> = Vec::new();
    std::iter::from_fn(move || {
        if lead == n {
            // First candidate: leading slot at the very top, all free zero.
            lead = n - 1;
            digits = vec![0; lead];
        } else {
            let mut pos = 0;
            loop {
                if pos == lead {
                    if lead == n - top_block {
                        return None;
                    }
                    lead -= 1;
                    digits.truncate(lead);
                    for d in &mut digits {
                        *d = 0;
                    }
                    break;
                }
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
        let mut terms: Vec<(Vec<u32>, _)> = vec![(ordered[lead].clone(), field.one())];
        for (s, &d) in digits.iter().enumerate() {
            if d != 0 {
                terms.push((ordered[s].clone(), field.element_at(d)));
            }
        }
        Some(Polynomial::from_terms(&field, arity, terms).expect("normalized terms are valid"))
    })
}

/// Uniform coefficients on every monomial of degree <= cap, resampled until
/// the polynomial is nonzero.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    field: &FieldSpec,
    arity: usize,
    cap: u32,
) -> Polynomial {
    let mons = monomials_up_to(arity, cap);
    let q = field.order();
    loop {
        let terms = mons
            .iter()
            .map(|m| (m.clone(), field.element_at(rng.gen_range(0..q))))
            .collect::<Vec<_>>();
        let f = Polynomial::from_terms(field, arity, terms).expect("random terms are valid");
        if !f.is_zero() {
            return f;
        }
    }
}

/// Uniform coefficients, resampled until the degree-`degree` form is
/// nonzero, so the total degree is exact.
pub fn random_polynomial_exact<R: Rng>(
    rng: &mut R,
    field: &FieldSpec,
    arity: usize,
    degree: u32,
) -> Polynomial {
    loop {
        let f = random_polynomial(rng, field, arity, degree);
        if f.total_degree() == Some(degree as u64) {
            return f;
        }
    }
}
