//! The verdict engine: decides absolute irreducibility or bounds the factor
//! count from the gap profile of the graded decomposition, emitting a
//! certificate that names the rule applied and every hypothesis checked.
//!
//! All rules are one-sided sufficient conditions, so failed hypotheses yield
//! Inconclusive, never a reducibility claim. The one genuine negative is the
//! homogeneous bivariate case, which always splits into linear factors over
//! a finite extension and gets an explicit witness.
//!
//! Rule precedence is fixed: the span criterion on the top gap, then the
//! largest qualifying intermediate gap (irreducibility when the top gap is
//! small enough, a factor bound otherwise), then the plain degree-gap bound
//! from coprimality of the leading form with the whole tail.

use crate::gcd::{gcd, gcd_many, is_squarefree, SquarefreeReport};
use crate::gf::{FieldSpec, DEFAULT_ENUM_BUDGET};
use crate::mpoly::Polynomial;
use crate::semigroup::{span_membership, GeneratorSet};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Everything the rules inspect, recorded whether or not they fire.
#[derive(Clone, Debug)]
pub struct Hypotheses {
    pub degree: u64,
    /// Gap profile gamma_1 < ... < gamma_m.
    pub gaps: Vec<u64>,
    pub leading_squarefree: bool,
    pub squarefree_report: SquarefreeReport,
    /// GCD of all homogeneous forms, grevlex-monic.
    pub forms_gcd: Polynomial,
    pub forms_gcd_trivial: bool,
    /// For each i, whether gamma_i lies in the span of gamma_1..gamma_{i-1};
    /// entry 0 refers to the empty generator set.
    pub span_status: Vec<bool>,
    /// For candidate k, whether gcd(F_d, F_{d-gamma_k}) = 1; None when the
    /// rule never needed it.
    pub pairwise_gcd_k: Vec<Option<bool>>,
}

/// Outcome of `analyze`.
#[derive(Clone, Debug)]
pub enum Verdict {
    AbsolutelyIrreducible {
        rule: &'static str,
        hypotheses: Hypotheses,
    },
    FactorBounds {
        max_factors: u64,
        min_factor_degree: Option<u64>,
        rule: &'static str,
        hypotheses: Hypotheses,
    },
    NotAbsolutelyIrreducible {
        witness: Polynomial,
        hypotheses: Hypotheses,
    },
    Inconclusive {
        failed: Vec<&'static str>,
        hypotheses: Hypotheses,
    },
}

impl Verdict {
    pub fn hypotheses(&self) -> &Hypotheses {
        match self {
            Verdict::AbsolutelyIrreducible { hypotheses, .. }
            | Verdict::FactorBounds { hypotheses, .. }
            | Verdict::NotAbsolutelyIrreducible { hypotheses, .. }
            | Verdict::Inconclusive { hypotheses, .. } => hypotheses,
        }
    }

    pub fn rule(&self) -> &'static str {
        match self {
            Verdict::AbsolutelyIrreducible { rule, .. } | Verdict::FactorBounds { rule, .. } => rule,
            Verdict::NotAbsolutelyIrreducible { .. } => "homogeneous-split",
            Verdict::Inconclusive { .. } => "none",
        }
    }
}

fn constant_hypotheses(f: &Polynomial) -> Hypotheses {
    Hypotheses {
        degree: 0,
        gaps: Vec::new(),
        leading_squarefree: true,
        squarefree_report: SquarefreeReport {
            squarefree: true,
            obstruction: None,
        },
        forms_gcd: Polynomial::one(f.field(), f.arity()),
        forms_gcd_trivial: true,
        span_status: Vec::new(),
        pairwise_gcd_k: Vec::new(),
    }
}

fn build_hypotheses(f: &Polynomial) -> Result<Hypotheses> {
    let profile = f.gap_profile()?;
    let decomposition = f.graded_decomposition()?;
    let report = is_squarefree(decomposition.leading())?;
    let forms: Vec<Polynomial> = decomposition.forms().iter().map(|(_, g)| g.clone()).collect();
    let forms_gcd = gcd_many(&forms)?;
    let gaps = profile.gaps().to_vec();
    let mut span_status = Vec::with_capacity(gaps.len());
    for i in 0..gaps.len() {
        let gens = GeneratorSet::new(gaps[..i].iter().copied())?;
        span_status.push(span_membership(gaps[i], &gens)?);
    }
    Ok(Hypotheses {
        degree: profile.degree(),
        leading_squarefree: report.squarefree,
        squarefree_report: report,
        forms_gcd_trivial: forms_gcd == Polynomial::one(f.field(), f.arity()),
        forms_gcd,
        pairwise_gcd_k: vec![None; gaps.len()],
        gaps,
        span_status,
    })
}

/// Smallest-extension linear witness for a homogeneous polynomial in at most
/// two active variables: either a bare variable that divides it, or
/// x_a - theta x_b for the first root theta of the dehomogenization, found
/// by ascending search through GF(q), GF(q^2), ...
fn homogeneous_witness(f: &Polynomial, active: &[usize]) -> Result<Polynomial> {
    let field = f.field();
    let arity = f.arity();
    let d = f.total_degree().expect("nonconstant") as u32;
    let unit = |var: usize| {
        let mut e = vec![0u32; arity];
        e[var] = 1;
        e
    };
    let (a, b) = match *active {
        [a] => return Polynomial::variable(field, arity, a),
        [a, b] => (a, b),
        _ => unreachable!("witness search needs at most two active variables"),
    };
    // Coefficients of u(t) = f(t, 1) in the two active variables.
    let coeff = |i: u32| {
        let mut e = vec![0u32; arity];
        e[a] = i;
        e[b] = d - i;
        f.coefficient(&crate::mpoly::Monomial::new(e))
    };
    if coeff(0).is_zero() {
        return Polynomial::variable(field, arity, a);
    }
    if coeff(d).is_zero() {
        return Polynomial::variable(field, arity, b);
    }
    let u = Polynomial::from_terms(field, 1, (0..=d).map(|i| (vec![i], coeff(i))))?;
    let u_degree = u.degree_in(0).expect("both variables active");
    for e in 1..=u_degree as usize {
        let ext = FieldSpec::extension(field.p(), field.degree() * e)?;
        if ext.order() > DEFAULT_ENUM_BUDGET as u128 {
            return Err(Error::ScopeExceeded {
                what: "homogeneous witness root search",
                needed: ext.order(),
                budget: DEFAULT_ENUM_BUDGET as u128,
            });
        }
        let u_ext = u.lift_to_extension(&ext)?;
        for theta in ext.enumerate()? {
            if u_ext.evaluate(&[theta.clone()])?.is_zero() {
                return Polynomial::from_terms(
                    &ext,
                    arity,
                    [(unit(a), ext.one()), (unit(b), theta.neg())],
                );
            }
        }
    }
    // u is nonconstant, so a root exists by extension degree deg(u).
    Err(Error::DegenerateInput("homogeneous witness search exhausted"))
}

/// Applies the rules in fixed precedence and reports the first that fires.
pub fn analyze(f: &Polynomial) -> Result<Verdict> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("cannot analyze the zero polynomial"));
    }
    let degree = f.total_degree().expect("nonzero");
    if degree == 0 {
        return Ok(Verdict::Inconclusive {
            failed: vec!["nonconstant-input"],
            hypotheses: constant_hypotheses(f),
        });
    }
    let mut hypotheses = build_hypotheses(f)?;
    if degree == 1 {
        return Ok(Verdict::AbsolutelyIrreducible {
            rule: "degree-one",
            hypotheses,
        });
    }
    if f.is_homogeneous() {
        let active = f.variables_present();
        if active.len() <= 2 {
            return Ok(Verdict::NotAbsolutelyIrreducible {
                witness: homogeneous_witness(f, &active)?,
                hypotheses,
            });
        }
        return Ok(Verdict::Inconclusive {
            failed: vec!["nonhomogeneous-input"],
            hypotheses,
        });
    }
    if !hypotheses.leading_squarefree {
        return Ok(Verdict::Inconclusive {
            failed: vec!["leading-form-squarefree"],
            hypotheses,
        });
    }
    if !hypotheses.forms_gcd_trivial {
        return Ok(Verdict::Inconclusive {
            failed: vec!["forms-gcd-trivial"],
            hypotheses,
        });
    }
    let m = hypotheses.gaps.len();
    if !hypotheses.span_status[m - 1] {
        return Ok(Verdict::AbsolutelyIrreducible {
            rule: "span-criterion",
            hypotheses,
        });
    }
    // Largest k whose gap escapes the span of its predecessors and whose
    // form is coprime to the leading form.
    let decomposition = f.graded_decomposition()?;
    let leading = decomposition.leading().clone();
    let gamma_m = hypotheses.gaps[m - 1];
    for k in (1..m).rev() {
        if hypotheses.span_status[k - 1] {
            continue;
        }
        let form_k = &decomposition.forms()[k].1;
        let coprime = gcd(&leading, form_k)?.is_constant();
        hypotheses.pairwise_gcd_k[k - 1] = Some(coprime);
        if !coprime {
            continue;
        }
        let gamma_k = hypotheses.gaps[k - 1];
        if gamma_m < 2 * gamma_k {
            return Ok(Verdict::AbsolutelyIrreducible {
                rule: "kth-gap-irreducible",
                hypotheses,
            });
        }
        return Ok(Verdict::FactorBounds {
            max_factors: degree / gamma_k,
            min_factor_degree: Some(gamma_k),
            rule: "kth-gap-factor-bound",
            hypotheses,
        });
    }
    let tail = f.sub(&leading).expect("same field and arity");
    if gcd(&leading, &tail)?.is_constant() {
        let bound = degree / hypotheses.gaps[0];
        if bound == 1 {
            return Ok(Verdict::AbsolutelyIrreducible {
                rule: "degree-gap-irreducible",
                hypotheses,
            });
        }
        return Ok(Verdict::FactorBounds {
            max_factors: bound,
            min_factor_degree: None,
            rule: "degree-gap-factor-bound",
            hypotheses,
        });
    }
    Ok(Verdict::Inconclusive {
        failed: vec![
            "top-gap-outside-span",
            "kth-gap-qualification",
            "leading-tail-coprime",
        ],
        hypotheses,
    })
}

/// Shape-gated shortcut for two-form inputs: squarefree leading form coprime
/// to the single lower form.
pub fn check_binomial(f: &Polynomial) -> Result<Option<Verdict>> {
    specialized(f, 2, "two-form-coprime")
}

/// Three-form shortcut: additionally the bottom gap avoids every positive
/// multiple of the top gap.
pub fn check_trinomial(f: &Polynomial) -> Result<Option<Verdict>> {
    specialized(f, 3, "three-form-span")
}

/// Four-form shortcut: the bottom gap escapes the span of the upper two.
pub fn check_quadrinomial(f: &Polynomial) -> Result<Option<Verdict>> {
    specialized(f, 4, "four-form-span")
}

fn specialized(f: &Polynomial, form_count: usize, rule: &'static str) -> Result<Option<Verdict>> {
    if f.is_zero() || f.is_constant() || f.is_homogeneous() {
        return Ok(None);
    }
    let decomposition = f.graded_decomposition()?;
    if decomposition.forms().len() != form_count {
        return Ok(None);
    }
    let hypotheses = build_hypotheses(f)?;
    if !hypotheses.leading_squarefree || !hypotheses.forms_gcd_trivial {
        return Ok(None);
    }
    let m = hypotheses.gaps.len();
    if hypotheses.span_status[m - 1] {
        return Ok(None);
    }
    Ok(Some(Verdict::AbsolutelyIrreducible { rule, hypotheses }))
}

/// The factor-count bound implied by `analyze`, when any: 1 for a proved
/// irreducible, the stated bound otherwise.
pub fn factor_bound(f: &Polynomial) -> Result<Option<(u64, Option<u64>)>> {
    match analyze(f)? {
        Verdict::AbsolutelyIrreducible { .. } => Ok(Some((1, None))),
        Verdict::FactorBounds {
            max_factors,
            min_factor_degree,
            ..
        } => Ok(Some((max_factors, min_factor_degree))),
        _ => Ok(None),
    }
}

/// Serializable certificate; field order is the wire format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: String,
    pub rule: String,
    pub degree: u64,
    pub gaps: Vec<u64>,
    pub span_status: Vec<bool>,
    pub leading_squarefree: bool,
    pub forms_gcd: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_factors: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_factor_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_hypotheses: Option<Vec<String>>,
}

impl Verdict {
    pub fn certificate(&self) -> Certificate {
        let h = self.hypotheses();
        let mut cert = Certificate {
            verdict: match self {
                Verdict::AbsolutelyIrreducible { .. } => "absolutely_irreducible",
                Verdict::FactorBounds { .. } => "factor_bounds",
                Verdict::NotAbsolutelyIrreducible { .. } => "not_absolutely_irreducible",
                Verdict::Inconclusive { .. } => "inconclusive",
            }
            .to_string(),
            rule: self.rule().to_string(),
            degree: h.degree,
            gaps: h.gaps.clone(),
            span_status: h.span_status.clone(),
            leading_squarefree: h.leading_squarefree,
            forms_gcd: h.forms_gcd.to_string(),
            max_factors: None,
            min_factor_degree: None,
            witness: None,
            failed_hypotheses: None,
        };
        match self {
            Verdict::AbsolutelyIrreducible { .. } => cert.max_factors = Some(1),
            Verdict::FactorBounds {
                max_factors,
                min_factor_degree,
                ..
            } => {
                cert.max_factors = Some(*max_factors);
                cert.min_factor_degree = *min_factor_degree;
            }
            Verdict::NotAbsolutelyIrreducible { witness, .. } => {
                cert.witness = Some(witness.to_string());
            }
            Verdict::Inconclusive { failed, .. } => {
                cert.failed_hypotheses = Some(failed.iter().map(|s| s.to_string()).collect());
            }
        }
        cert
    }
}
