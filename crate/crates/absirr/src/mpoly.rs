//! Sparse multivariate polynomials over a `FieldSpec`, ordered by graded
//! reverse lexicographic (grevlex) order, with the graded decomposition and
//! degree-gap machinery built on top.

use crate::gf::{Embedding, FieldElement, FieldSpec};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

// ---- Monomial ----

/// Exponent vector; ordered by grevlex (total degree, then reverse lex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.exponents.len().max(other.exponents.len());
        Monomial {
            exponents: (0..n).map(|i| self.exponent(i) + other.exponent(i)).collect(),
        }
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        let n = self.exponents.len().max(other.exponents.len());
        (0..n).all(|i| self.exponent(i) <= other.exponent(i))
    }

    /// other / self, when divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let n = self.exponents.len().max(other.exponents.len());
        Some(Monomial {
            exponents: (0..n).map(|i| other.exponent(i) - self.exponent(i)).collect(),
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.total_degree(), other.total_degree());
        if da != db {
            return da.cmp(&db);
        }
        // Equal degree: at the rightmost differing position, the smaller
        // exponent belongs to the grevlex-larger monomial.
        let n = self.exponents.len().max(other.exponents.len());
        for i in (0..n).rev() {
            let (ea, eb) = (self.exponent(i), other.exponent(i));
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---- Degree gap marker ----

/// Gap between the top two form degrees; Infinity for homogeneous input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DegreeGap {
    Finite(u64),
    Infinity,
}

impl fmt::Display for DegreeGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeGap::Finite(g) => write!(f, "{g}"),
            DegreeGap::Infinity => write!(f, "infinity"),
        }
    }
}

// ---- Polynomial ----

/// Sparse polynomial with a fixed field and arity; no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    arity: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: &FieldSpec, arity: usize) -> Polynomial {
        Polynomial {
            field: field.clone(),
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &FieldSpec, arity: usize) -> Polynomial {
        Self::constant(field.one(), arity)
    }

    pub fn constant(c: FieldElement, arity: usize) -> Polynomial {
        let field = c.spec().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(vec![0; arity]), c);
        }
        Polynomial { field, arity, terms }
    }

    /// The variable x_i (0-based index).
    pub fn variable(field: &FieldSpec, arity: usize, i: usize) -> Result<Polynomial> {
        if i >= arity {
            return Err(Error::VariableIndex { index: i, arity });
        }
        let mut exps = vec![0; arity];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(exps), field.one());
        Ok(Polynomial {
            field: field.clone(),
            arity,
            terms,
        })
    }

    /// Builds from (exponents, coefficient) pairs; repeated monomials accumulate.
    pub fn from_terms<I>(field: &FieldSpec, arity: usize, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElement)>,
    {
        let mut p = Polynomial::zero(field, arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch(exps.len(), arity));
            }
            if c.spec() != field {
                return Err(Error::FieldMismatch);
            }
            p.accumulate(Monomial::new(exps), c)?;
        }
        Ok(p)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in grevlex-descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Grevlex-leading (monomial, coefficient).
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree().map_or(true, |d| d == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Variable indices that actually occur.
    pub fn variables_present(&self) -> Vec<usize> {
        let mut present = vec![false; self.arity];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    present[i] = true;
                }
            }
        }
        (0..self.arity).filter(|&i| present[i]).collect()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    fn accumulate(&mut self, m: Monomial, c: FieldElement) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.add(&c)?;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.mul(mb), ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.spec() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, v) in &self.terms {
            out.accumulate(m.clone(), v.mul(c)?)?;
        }
        Ok(out)
    }

    /// Multiplies by c * x^exps in one pass.
    pub fn mul_term(&self, exps: &[u32], c: &FieldElement) -> Result<Polynomial> {
        if c.spec() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if exps.len() != self.arity {
            return Err(Error::ArityMismatch(exps.len(), self.arity));
        }
        let shift = Monomial::new(exps.to_vec());
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, v) in &self.terms {
            out.accumulate(m.mul(&shift), v.mul(c)?)?;
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.field, self.arity);
        for _ in 0..e {
            acc = acc.mul(self).expect("same field and arity");
        }
        acc
    }

    /// Scales so the grevlex-leading coefficient is 1; zero stays zero.
    pub fn monic_leading(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.scale(&inv).expect("same field")
            }
        }
    }

    // ---- Graded structure ----

    /// The homogeneous component of degree d (zero if absent).
    pub fn graded_component(&self, d: u64) -> Polynomial {
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, c) in &self.terms {
            if m.total_degree() == d {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Splits into homogeneous forms by strictly decreasing degree.
    pub fn graded_decomposition(&self) -> Result<GradedDecomposition> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial has no decomposition"));
        }
        let mut by_degree: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.total_degree();
            by_degree
                .entry(d)
                .or_insert_with(|| Polynomial::zero(&self.field, self.arity))
                .terms
                .insert(m.clone(), c.clone());
        }
        let forms: Vec<(u64, Polynomial)> = by_degree.into_iter().rev().collect();
        Ok(GradedDecomposition { forms })
    }

    /// Highest-degree homogeneous component.
    pub fn leading_form(&self) -> Result<Polynomial> {
        let d = self
            .total_degree()
            .ok_or(Error::DegenerateInput("zero polynomial has no leading form"))?;
        Ok(self.graded_component(d))
    }

    /// Lowest-degree homogeneous component.
    pub fn tangent_cone(&self) -> Result<Polynomial> {
        let d = self
            .terms
            .keys()
            .map(|m| m.total_degree())
            .min()
            .ok_or(Error::DegenerateInput("zero polynomial has no tangent cone"))?;
        Ok(self.graded_component(d))
    }

    /// d - d_1, or Infinity when homogeneous.
    pub fn degree_gap(&self) -> Result<DegreeGap> {
        Ok(self.gap_profile()?.gap(1))
    }

    /// Degree, the full gap sequence, and the tangent-cone degree.
    pub fn gap_profile(&self) -> Result<GapProfile> {
        let d = self
            .total_degree()
            .ok_or(Error::DegenerateInput("zero polynomial has no gap profile"))?;
        if d == 0 {
            return Err(Error::DegenerateInput("constant polynomial has no gap profile"));
        }
        let mut degrees: Vec<u64> = Vec::new();
        for m in self.terms.keys() {
            let t = m.total_degree();
            if !degrees.contains(&t) {
                degrees.push(t);
            }
        }
        degrees.sort_unstable();
        degrees.reverse();
        let gaps: Vec<u64> = degrees[1..].iter().map(|&di| d - di).collect();
        let tangent_cone_degree = *degrees.last().unwrap();
        Ok(GapProfile {
            degree: d,
            gaps,
            tangent_cone_degree,
        })
    }

    // ---- Calculus and evaluation ----

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.arity {
            return Err(Error::VariableIndex { index: i, arity: self.arity });
        }
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let scalar = self.field.element_from_u64(e as u64 % self.field.p());
            let nc = c.mul(&scalar)?;
            if nc.is_zero() {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.accumulate(Monomial::new(exps), nc)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch(point.len(), self.arity));
        }
        for v in point {
            if v.spec() != &self.field {
                return Err(Error::FieldMismatch);
            }
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e as u64))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Replaces x_i by a polynomial of the same field and arity.
    pub fn substitute(&self, i: usize, value: &Polynomial) -> Result<Polynomial> {
        if i >= self.arity {
            return Err(Error::VariableIndex { index: i, arity: self.arity });
        }
        self.check_compatible(value)?;
        let mut powers: BTreeMap<u32, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            let mut exps = m.exponents().to_vec();
            exps[i] = 0;
            let rest = Polynomial::from_terms(&self.field, self.arity, [(exps, c.clone())])?;
            let piece = if e == 0 {
                rest
            } else {
                let pw = powers.entry(e).or_insert_with(|| value.pow(e));
                rest.mul(pw)?
            };
            out = out.add(&piece)?;
        }
        Ok(out)
    }

    /// Maps every coefficient through the canonical embedding into `target`.
    pub fn lift_to_extension(&self, target: &FieldSpec) -> Result<Polynomial> {
        let emb = Embedding::new(&self.field, target)?;
        self.lift_via(&emb)
    }

    pub fn lift_via(&self, emb: &Embedding) -> Result<Polynomial> {
        if emb.source() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = Polynomial::zero(emb.target(), self.arity);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), emb.apply(c)?);
        }
        Ok(out)
    }

    // ---- Division ----

    /// Division with remainder by a single divisor along grevlex order.
    /// Exactness (zero remainder) is equivalent to divisibility.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_compatible(divisor)?;
        let (gm, gc) = match divisor.leading_term() {
            None => return Err(Error::DivisionByZero),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let gc_inv = gc.inv().expect("leading coefficient is nonzero");
        let mut quo = Polynomial::zero(&self.field, self.arity);
        let mut rem = Polynomial::zero(&self.field, self.arity);
        let mut work = self.clone();
        while let Some((wm, wc)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            match gm.div_into(&wm) {
                Some(q) => {
                    let qc = wc.mul(&gc_inv)?;
                    quo.accumulate(q.clone(), qc.clone())?;
                    let sub = divisor.mul_term(q.exponents(), &qc)?;
                    work = work.sub(&sub)?;
                }
                None => {
                    work.terms.remove(&wm);
                    rem.terms.insert(wm, wc);
                }
            }
        }
        Ok((quo, rem))
    }

    /// The exact quotient self / divisor, when the division is exact.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    pub fn is_divisible_by(&self, divisor: &Polynomial) -> Result<bool> {
        Ok(self.exact_div(divisor)?.is_some())
    }

    // ---- Per-variable views (main-variable recursion) ----

    /// Max exponent of x_i, None for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(i)).max()
    }

    /// Coefficient of x_i^k, as a polynomial with x_i cleared.
    pub fn coefficient_of_power(&self, i: usize, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(&self.field, self.arity);
        for (m, c) in &self.terms {
            if m.exponent(i) == k {
                let mut exps = m.exponents().to_vec();
                exps[i] = 0;
                out.accumulate(Monomial::new(exps), c.clone())
                    .expect("same field");
            }
        }
        out
    }

    /// Leading coefficient with respect to x_i.
    pub fn leading_coefficient_in(&self, i: usize) -> Polynomial {
        match self.degree_in(i) {
            None => Polynomial::zero(&self.field, self.arity),
            Some(d) => self.coefficient_of_power(i, d),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parser::format_polynomial(self))
    }
}

// ---- GradedDecomposition ----

/// Homogeneous forms by strictly decreasing degree; reconstructs the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    forms: Vec<(u64, Polynomial)>,
}

impl GradedDecomposition {
    /// (degree, form) pairs, highest degree first; every form is nonzero.
    pub fn forms(&self) -> &[(u64, Polynomial)] {
        &self.forms
    }

    pub fn leading(&self) -> &Polynomial {
        &self.forms[0].1
    }

    pub fn degree(&self) -> u64 {
        self.forms[0].0
    }

    /// Number of forms below the leading one.
    pub fn gap_count(&self) -> usize {
        self.forms.len() - 1
    }

    pub fn reconstruct(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.forms[0].1.field(), self.forms[0].1.arity());
        for (_, f) in &self.forms {
            acc = acc.add(f).expect("same field and arity");
        }
        acc
    }
}

// ---- GapProfile ----

/// Degree d plus the gap sequence gamma_i = d - d_i of a nonconstant polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile {
    degree: u64,
    gaps: Vec<u64>,
    tangent_cone_degree: u64,
}

impl GapProfile {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Strictly increasing positive gaps; empty iff homogeneous. gamma_m <= d.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn tangent_cone_degree(&self) -> u64 {
        self.tangent_cone_degree
    }

    /// The i-th gap (1-based); Infinity past the last one.
    pub fn gap(&self, i: usize) -> DegreeGap {
        if i >= 1 && i <= self.gaps.len() {
            DegreeGap::Finite(self.gaps[i - 1])
        } else {
            DegreeGap::Infinity
        }
    }
}
