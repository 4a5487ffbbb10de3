//! Arithmetic in GF(p^n): dense residue vectors modulo a monic irreducible,
//! with deterministic modulus selection and canonical element enumeration.

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Largest field order `enumerate` and embedding root searches accept by default.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 20;

// ---- Mod-p scalar helpers ----

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    // p <= 2^31, so the product fits in u64.
    (a * b) % p
}

fn invm(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---- GF(p)[t] helpers on low-degree-first coefficient vectors ----

fn ptrim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pdeg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    ptrim(&mut out);
    out
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        out[i] = subm(ai, bi, p);
    }
    ptrim(&mut out);
    out
}

fn prem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    ptrim(&mut r);
    let dm = pdeg(m).expect("nonzero divisor");
    let lc_inv = invm(m[dm], p);
    while let Some(dr) = pdeg(&r) {
        if dr < dm {
            break;
        }
        let c = mulm(r[dr], lc_inv, p);
        let shift = dr - dm;
        for j in 0..=dm {
            r[shift + j] = subm(r[shift + j], mulm(c, m[j], p), p);
        }
        ptrim(&mut r);
    }
    r
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut f, mut g) = (a.to_vec(), b.to_vec());
    ptrim(&mut f);
    ptrim(&mut g);
    while !g.is_empty() {
        let r = prem(&f, &g, p);
        f = g;
        g = r;
    }
    if let Some(d) = pdeg(&f) {
        let inv = invm(f[d], p);
        for c in f.iter_mut() {
            *c = mulm(*c, inv, p);
        }
    }
    f
}

/// Bezout coefficient s with s*a + t*m = gcd; used for inversion mod m.
fn pxgcd_left(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), m.to_vec());
    ptrim(&mut r0);
    ptrim(&mut r1);
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    while !r1.is_empty() {
        // Long division of r0 by r1, tracking the quotient.
        let d1 = pdeg(&r1).unwrap();
        let lc_inv = invm(r1[d1], p);
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut r = r0.clone();
        while let Some(dr) = pdeg(&r) {
            if dr < d1 {
                break;
            }
            let c = mulm(r[dr], lc_inv, p);
            q[dr - d1] = c;
            let shift = dr - d1;
            for j in 0..=d1 {
                r[shift + j] = subm(r[shift + j], mulm(c, r1[j], p), p);
            }
            ptrim(&mut r);
        }
        ptrim(&mut q);
        let s_next = psub(&s0, &pmul(&q, &s1, p), p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s_next);
    }
    (s0, r0)
}

fn peval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = addm(mulm(acc, x, p), c, p);
    }
    acc
}

/// t^(p) mod m, computed by square-and-multiply on the exponent bits.
fn ppow_t_p(x: &[u64], p: u64, m: &[u64]) -> Vec<u64> {
    let mut base = x.to_vec();
    let mut acc = vec![1u64];
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(&pmul(&acc, &base, p), m, p);
        }
        base = prem(&pmul(&base, &base, p), m, p);
        e >>= 1;
    }
    acc
}

/// Irreducibility over GF(p); root search for cheap cases, otherwise a
/// gcd ladder against t^(p^i) - t for i up to deg/2.
fn irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let d = pdeg(f).expect("nonzero candidate");
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    if d <= 3 && p <= (1 << 16) {
        return (0..p).all(|x| peval(f, x, p) != 0);
    }
    let mut x = vec![0u64, 1]; // t
    for _ in 0..(d / 2) {
        x = ppow_t_p(&x, p, f);
        let diff = psub(&x, &[0, 1], p);
        let g = pgcd(f, &diff, p);
        if pdeg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree n over GF(p),
/// comparing coefficient vectors low-degree-first.
fn find_modulus(p: u64, n: usize) -> Vec<u64> {
    let total = (p as u128).pow(n as u32);
    let mut k: u128 = 0;
    while k < total {
        let mut coeffs = vec![0u64; n + 1];
        let mut rem = k;
        // c0 is the most significant digit so increasing k walks lex order.
        for i in (0..n).rev() {
            coeffs[n - 1 - i] = (rem / (p as u128).pow(i as u32)) as u64 % p;
            rem %= (p as u128).pow(i as u32);
        }
        coeffs[n] = 1;
        if irreducible_mod_p(&coeffs, p) {
            return coeffs;
        }
        k += 1;
    }
    unreachable!("an irreducible of every degree exists over GF(p)")
}

// ---- FieldSpec ----

#[derive(Debug)]
struct SpecData {
    p: u64,
    n: usize,
    /// Monic, length n+1, low-degree-first; placeholder t for n = 1.
    modulus: Vec<u64>,
}

/// A finite field GF(p^n); cheap to clone, compared by content.
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<SpecData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.n.hash(state);
        self.0.modulus.hash(state);
    }
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FieldSpec> {
        Self::extension(p, 1)
    }

    /// GF(p^n) with the canonical (lex-smallest) monic irreducible modulus.
    pub fn extension(p: u64, n: usize) -> Result<FieldSpec> {
        if p < 2 || p > (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidModulus("extension degree must be >= 1".into()));
        }
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            find_modulus(p, n)
        };
        Ok(FieldSpec(Arc::new(SpecData { p, n, modulus })))
    }

    /// GF(p^n) with an explicit monic modulus, validated irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<FieldSpec> {
        if p < 2 || p > (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("modulus must have degree >= 1".into()));
        }
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        let n = m.len() - 1;
        if m[n] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if n == 1 {
            // Unused placeholder for prime fields.
            m = vec![0, 1];
        } else if !irreducible_mod_p(&m, p) {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(FieldSpec(Arc::new(SpecData { p, n, modulus: m })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree n over the prime field.
    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// Field order p^n.
    pub fn order(&self) -> u128 {
        (self.0.p as u128).pow(self.0.n as u32)
    }

    /// Modulus coefficients, low-degree-first, length n+1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.0.n],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element_from_u64(1)
    }

    /// The residue class of t, i.e. the extension generator `a`; None for n = 1.
    pub fn generator(&self) -> Option<FieldElement> {
        if self.0.n < 2 {
            return None;
        }
        let mut coeffs = vec![0; self.0.n];
        coeffs[1] = 1;
        Some(FieldElement {
            spec: self.clone(),
            coeffs,
        })
    }

    /// The prime-subfield constant c mod p.
    pub fn element_from_u64(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.n];
        coeffs[0] = c % self.0.p;
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    /// Element with the given residue coefficients (low-degree-first, reduced mod p).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.n {
            return Err(Error::InvalidModulus(format!(
                "residue has {} coefficients but the field has degree {}",
                coeffs.len(),
                self.0.n
            )));
        }
        let mut c = vec![0; self.0.n];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.0.p;
        }
        Ok(FieldElement {
            spec: self.clone(),
            coeffs: c,
        })
    }

    /// Canonical position of x in enumeration order: sum of coeffs[i] * p^i.
    pub fn element_index(&self, x: &FieldElement) -> u128 {
        let mut idx = 0u128;
        for &c in x.coeffs.iter().rev() {
            idx = idx * self.0.p as u128 + c as u128;
        }
        idx
    }

    /// Inverse of `element_index`; idx must be below the field order.
    pub fn element_at(&self, idx: u128) -> FieldElement {
        debug_assert!(idx < self.order());
        let mut coeffs = vec![0u64; self.0.n];
        let mut rem = idx;
        for c in coeffs.iter_mut() {
            *c = (rem % self.0.p as u128) as u64;
            rem /= self.0.p as u128;
        }
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    /// All field elements in canonical order (base-p counter, low digit fastest).
    pub fn enumerate(&self) -> Result<Vec<FieldElement>> {
        self.enumerate_with_budget(DEFAULT_ENUM_BUDGET)
    }

    pub fn enumerate_with_budget(&self, budget: u64) -> Result<Vec<FieldElement>> {
        let order = self.order();
        if order > budget as u128 {
            return Err(Error::ScopeExceeded {
                what: "field enumeration",
                needed: order,
                budget: budget as u128,
            });
        }
        Ok((0..order).map(|i| self.element_at(i)).collect())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.0.n;
        if d == 1 {
            return write!(f, "GF({})", self.0.p);
        }
        if self.0.modulus == find_modulus(self.0.p, d) {
            write!(f, "GF({}^{})", self.0.p, d)
        } else {
            let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "GF({}^{}; {})", self.0.p, d, coeffs.join(","))
        }
    }
}

// ---- FieldElement ----

/// An element of a `FieldSpec`, stored as a reduced residue vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
        self.coeffs.hash(state);
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Residue coefficients, low-degree-first, length n.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| addm(a, b, p))
            .collect();
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| subm(a, b, p))
            .collect();
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.p();
        FieldElement {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|&a| subm(0, a, p)).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.spec.p();
        let n = self.spec.degree();
        if n == 1 {
            return Ok(FieldElement {
                spec: self.spec.clone(),
                coeffs: vec![mulm(self.coeffs[0], other.coeffs[0], p)],
            });
        }
        // Schoolbook product, then reduce by the monic modulus.
        let mut prod = vec![0u64; 2 * n - 1];
        for i in 0..n {
            if self.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + self.coeffs[i] * other.coeffs[j]) % p;
            }
        }
        let m = self.spec.modulus();
        for i in (n..2 * n - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..n {
                prod[i - n + j] = (prod[i - n + j] + (p - m[j]) * c) % p;
            }
        }
        prod.truncate(n);
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs: prod,
        })
    }

    /// Multiplicative inverse via extended Euclid against the modulus.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.spec.p();
        if self.spec.degree() == 1 {
            return Ok(FieldElement {
                spec: self.spec.clone(),
                coeffs: vec![invm(self.coeffs[0], p)],
            });
        }
        let mut res = self.coeffs.clone();
        ptrim(&mut res);
        let (s, g) = pxgcd_left(&res, self.spec.modulus(), p);
        debug_assert_eq!(pdeg(&g), Some(0));
        let scale = invm(g[0], p);
        let mut coeffs = vec![0u64; self.spec.degree()];
        for (i, &c) in s.iter().enumerate() {
            coeffs[i] = mulm(c, scale, p);
        }
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    /// x^e by square-and-multiply; 0^0 = 1.
    pub fn pow(&self, e: u64) -> FieldElement {
        let mut acc = self.spec.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// The p-power Frobenius x -> x^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.spec.p())
    }

    /// Embed into a target extension; builds the embedding map each call.
    pub fn embed(&self, target: &FieldSpec) -> Result<FieldElement> {
        Embedding::new(&self.spec, target)?.apply(self)
    }
}

impl fmt::Display for FieldElement {
    /// Renders the residue in the parser's coefficient grammar (no parens).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parser::format_element(self))
    }
}

// ---- Embedding ----

/// The canonical embedding GF(p^n) -> GF(p^(nk)), precomputed as powers of
/// the smallest root of the source modulus in the target.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: FieldSpec,
    target: FieldSpec,
    root_powers: Vec<FieldElement>,
}

impl Embedding {
    pub fn new(source: &FieldSpec, target: &FieldSpec) -> Result<Embedding> {
        if source.p() != target.p() || target.degree() % source.degree() != 0 {
            return Err(Error::EmbeddingIncompatible {
                p: source.p(),
                from_degree: source.degree(),
                to_degree: target.degree(),
            });
        }
        let n = source.degree();
        if n == 1 {
            return Ok(Embedding {
                source: source.clone(),
                target: target.clone(),
                root_powers: vec![target.one()],
            });
        }
        let order = target.order();
        if order > DEFAULT_ENUM_BUDGET as u128 {
            return Err(Error::ScopeExceeded {
                what: "embedding root search",
                needed: order,
                budget: DEFAULT_ENUM_BUDGET as u128,
            });
        }
        // Smallest root of the source modulus, in canonical element order.
        let modulus: Vec<FieldElement> = source
            .modulus()
            .iter()
            .map(|&c| target.element_from_u64(c))
            .collect();
        let mut root = None;
        'search: for i in 0..order {
            let z = target.element_at(i);
            let mut acc = target.zero();
            for m in modulus.iter().rev() {
                acc = acc.mul(&z).expect("same field").add(m).expect("same field");
            }
            if acc.is_zero() {
                root = Some(z);
                break 'search;
            }
        }
        let root = root.expect("the source modulus splits in any compatible extension");
        let mut root_powers = Vec::with_capacity(n);
        let mut acc = target.one();
        for _ in 0..n {
            root_powers.push(acc.clone());
            acc = acc.mul(&root).expect("same field");
        }
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            root_powers,
        })
    }

    pub fn source(&self) -> &FieldSpec {
        &self.source
    }

    pub fn target(&self) -> &FieldSpec {
        &self.target
    }

    /// Maps sum of c_i a^i to sum of c_i rho^i.
    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if *x.spec() != self.source {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.target.zero();
        for (i, &c) in x.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = self.root_powers[i]
                .mul(&self.target.element_from_u64(c))
                .expect("same field");
            acc = acc.add(&term).expect("same field");
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn gf(p: u64, n: usize) -> FieldSpec {
        FieldSpec::extension(p, n).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(gf(2, 1).modulus(), &[0, 1]);
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]); // t^2 + t + 1
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]); // t^2 + 1
        // Low-degree-first lexicographic order prefers t^4 + t^3 + 1
        // (coeffs 1,0,0,1) over t^4 + t + 1 (coeffs 1,1,0,0).
        assert_eq!(gf(2, 4).modulus(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn modulus_is_deterministic() {
        for _ in 0..3 {
            assert_eq!(gf(5, 3).modulus(), FieldSpec::extension(5, 3).unwrap().modulus());
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(FieldSpec::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldSpec::extension(1, 2).unwrap_err(), Error::NotPrime(1));
        // t^2 + 1 = (t+1)^2 over GF(2).
        assert_eq!(
            FieldSpec::with_modulus(2, vec![1, 0, 1]).unwrap_err(),
            Error::ReducibleModulus { p: 2 }
        );
        assert!(FieldSpec::with_modulus(2, vec![1, 1, 2]).is_err()); // 2 = 0 mod 2: not monic
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = gf(5, 1);
        let two = f5.element_from_u64(2);
        let three = f5.element_from_u64(3);
        assert_eq!(two.inv().unwrap(), three); // 2 * 3 = 6 = 1
        assert_eq!(two.mul(&three).unwrap(), f5.one());
        assert_eq!(f5.element_from_u64(7), two);
        assert!(f5.zero().inv().unwrap_err() == Error::DivisionByZero);
    }

    #[test]
    fn gf4_generator_squares_to_a_plus_one() {
        let f4 = gf(2, 2);
        let a = f4.generator().unwrap();
        let a1 = f4.element_from_coeffs(&[1, 1]).unwrap();
        assert_eq!(a.mul(&a).unwrap(), a1);
        assert_eq!(a.frobenius(), a1);
        assert_eq!(a.pow(3), f4.one());
    }

    #[test]
    fn pow_large_exponent() {
        let f7 = gf(7, 1);
        let one = f7.one();
        assert_eq!(one.pow(1_000_000_000), one);
        assert_eq!(f7.element_from_u64(3).pow(6), one); // Fermat
        assert_eq!(f7.zero().pow(0), one);
    }

    #[test]
    fn enumerate_canonical_order() {
        let f4 = gf(2, 2);
        let all = f4.enumerate().unwrap();
        assert_eq!(all.len(), 4);
        assert!(all[0].is_zero());
        assert!(all[1].is_one());
        assert_eq!(all[2], f4.generator().unwrap());
        assert_eq!(all[3], f4.element_from_coeffs(&[1, 1]).unwrap());
        for (i, x) in all.iter().enumerate() {
            assert_eq!(f4.element_index(x), i as u128);
            assert_eq!(&f4.element_at(i as u128), x);
        }
    }

    #[test]
    fn enumerate_budget_gate() {
        let f = gf(2, 21);
        assert!(matches!(
            f.enumerate().unwrap_err(),
            Error::ScopeExceeded { .. }
        ));
        assert!(f.enumerate_with_budget(1 << 21).is_ok());
    }

    #[test]
    fn mismatched_owners_rejected() {
        let a = gf(2, 2).generator().unwrap();
        let b = gf(3, 1).one();
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
        // Same (p, n) but different modulus is still a different field.
        let alt = FieldSpec::with_modulus(2, vec![1, 1, 1, 1, 1]).unwrap(); // t^4+t^3+t^2+t+1
        let canon = gf(2, 4);
        assert_ne!(alt, canon);
        assert!(canon.one().add(&alt.one()).is_err());
    }

    #[test]
    fn field_axioms_random_triples() {
        for (p, n) in [(2, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let f = gf(p, n);
            let elems = f.enumerate().unwrap();
            let mut rng = ChaCha12Rng::seed_from_u64(0xF1E1D);
            for _ in 0..10_000 {
                let x = &elems[rng.gen_range(0..elems.len())];
                let y = &elems[rng.gen_range(0..elems.len())];
                let z = &elems[rng.gen_range(0..elems.len())];
                let xy = x.mul(y).unwrap();
                assert_eq!(xy, y.mul(x).unwrap());
                assert_eq!(
                    xy.mul(z).unwrap(),
                    x.mul(&y.mul(z).unwrap()).unwrap()
                );
                assert_eq!(
                    x.mul(&y.add(z).unwrap()).unwrap(),
                    xy.add(&x.mul(z).unwrap()).unwrap()
                );
                assert_eq!(x.add(&x.neg()).unwrap(), f.zero());
                if !x.is_zero() {
                    assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), f.one());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_field_automorphism() {
        for (p, n) in [(2, 2), (3, 2), (2, 3)] {
            let f = gf(p, n);
            let elems = f.enumerate().unwrap();
            for x in &elems {
                // n-fold Frobenius is the identity.
                let mut y = x.clone();
                for _ in 0..n {
                    y = y.frobenius();
                }
                assert_eq!(&y, x);
                for z in &elems {
                    assert_eq!(
                        x.add(z).unwrap().frobenius(),
                        x.frobenius().add(&z.frobenius()).unwrap()
                    );
                    assert_eq!(
                        x.mul(z).unwrap().frobenius(),
                        x.frobenius().mul(&z.frobenius()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn embeddings_are_injective_homomorphisms() {
        let cases = [(2, 1, 2), (2, 1, 4), (2, 2, 4), (3, 1, 2)];
        for (p, n, m) in cases {
            let src = gf(p, n);
            let dst = gf(p, m);
            let emb = Embedding::new(&src, &dst).unwrap();
            let elems = src.enumerate().unwrap();
            let images: Vec<_> = elems.iter().map(|x| emb.apply(x).unwrap()).collect();
            for i in 0..elems.len() {
                for j in 0..elems.len() {
                    if i != j {
                        assert_ne!(images[i], images[j]);
                    }
                    let s = elems[i].add(&elems[j]).unwrap();
                    let t = elems[i].mul(&elems[j]).unwrap();
                    assert_eq!(emb.apply(&s).unwrap(), images[i].add(&images[j]).unwrap());
                    assert_eq!(emb.apply(&t).unwrap(), images[i].mul(&images[j]).unwrap());
                }
            }
        }
    }

    #[test]
    fn embedding_examples() {
        // GF(4) -> GF(16): the image of a satisfies t^2 + t + 1 = 0.
        let f4 = gf(2, 2);
        let f16 = gf(2, 4);
        let emb = Embedding::new(&f4, &f16).unwrap();
        let ia = emb.apply(&f4.generator().unwrap()).unwrap();
        let check = ia.mul(&ia).unwrap().add(&ia).unwrap().add(&f16.one()).unwrap();
        assert!(check.is_zero());
        // GF(3) -> GF(9): 2 maps to the constant 2, and its square is 1.
        let f3 = gf(3, 1);
        let f9 = gf(3, 2);
        let two9 = Embedding::new(&f3, &f9)
            .unwrap()
            .apply(&f3.element_from_u64(2))
            .unwrap();
        assert_eq!(two9, f9.element_from_u64(2));
        assert_eq!(two9.mul(&two9).unwrap(), f9.one());
        // Incompatible degrees are rejected.
        assert!(Embedding::new(&gf(2, 2), &gf(2, 3)).is_err());
        assert!(Embedding::new(&f3, &f16).is_err());
    }
}
