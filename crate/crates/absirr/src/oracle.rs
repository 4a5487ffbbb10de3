//! Brute-force ground truth at desk scale: univariate factorization,
//! bivariate irreducibility, absolute-irreducibility decision by extension
//! sweep, and absolute factor counting.
//!
//! Everything here reduces to one auditable primitive: exhaustive trial
//! division by every normalized candidate divisor (first nonzero coefficient
//! in grevlex-descending order equal to 1), enumerated in a fixed canonical
//! order. Budgets turn infeasible calls into loud scope errors, never wrong
//! answers.
//!
//! Soundness of the extension-sweep cutoff k <= deg(f): a polynomial that is
//! irreducible over GF(Q) but not over the algebraic closure splits into
//! r > 1 conjugate absolute factors of equal degree, permuted transitively
//! by the Frobenius map, so r divides deg(f) and all r factors are defined
//! over GF(Q^r). Reducibility is therefore witnessed at some k <= deg(f).
//! More precisely, over GF(Q^t) such a polynomial has exactly gcd(t, r)
//! factors (the Frobenius orbits of the absolute factors regroup), which
//! also justifies the shortcuts used below. The tower is climbed one prime
//! index at a time: an irreducible piece of degree e either survives a prime
//! step l or splits into exactly l conjugates of degree e/l, so only
//! degree-e/l candidates need scanning. Sharper, a degree-e piece at tower
//! level s groups r conjugates of one absolute factor whose field of
//! definition has degree m = r*g over the ground field, where g = gcd(s, m)
//! and gcd(s/g, r) = 1; the ground-field orbit of that factor has total
//! degree g*e, which cannot exceed deg(f). The step at l splits the piece
//! only when l divides r, so when no pair (g, r) satisfies all of these
//! divisibility constraints the piece provably cannot split and the scan is
//! skipped. A step where no piece can split reuses the previous state
//! verbatim, smaller stored field included: r is unchanged through such
//! steps (gcd(s*l, m) = gcd(s, m) when l does not divide r), so a later
//! real scan in the stored field splits exactly the same pieces.
//!
//! Small fields get precomputed index-arithmetic tables so the inner
//! division loop is a few array lookups; large fields fall back to direct
//! field arithmetic on the same code path, preserving the candidate order.

use crate::gf::{Embedding, FieldSpec};
use crate::mpoly::Polynomial;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Default cap on the number of candidate divisors per scan.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Largest field order that gets full add/mul lookup tables.
const TABLE_MAX_ORDER: u128 = 1 << 11;

/// Hard cap on input total degree; slot tables are quadratic in it.
const DEGREE_CAP: u64 = 512;

/// Outcome of an extension sweep.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub base_field: FieldSpec,
    /// Extension indices k actually examined, ascending from 1.
    pub tested_extensions: Vec<usize>,
    /// Whether the input stays irreducible over GF(Q^k), per tested k.
    pub irreducible_over: BTreeMap<usize, bool>,
    /// Largest factor count (with multiplicity) seen over any tested k.
    pub max_factor_count: u32,
    /// Factorization attaining the count, over the field where it was found;
    /// factors are grevlex-monic and multiply to the lifted input up to a unit.
    pub sample_factorization: Option<Vec<Polynomial>>,
}

impl OracleReport {
    /// True when no tested extension split the input.
    pub fn is_absolutely_irreducible(&self) -> bool {
        self.max_factor_count == 1
    }
}

// ---- Index arithmetic ----
//
// Field elements are handled as canonical indices 0..Q (the base-p digit
// encoding of their coefficient vectors). Small fields precompute tables.

struct ArithTables {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

fn table_cache() -> &'static Mutex<Vec<(FieldSpec, Arc<ArithTables>)>> {
    static CACHE: OnceLock<Mutex<Vec<(FieldSpec, Arc<ArithTables>)>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn build_tables(spec: &FieldSpec) -> Arc<ArithTables> {
    let mut cache = table_cache().lock().expect("table cache poisoned");
    if let Some((_, t)) = cache.iter().find(|(s, _)| s == spec) {
        return t.clone();
    }
    let q = spec.order() as usize;
    let elems: Vec<_> = (0..q).map(|i| spec.element_at(i as u128)).collect();
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    let mut neg = vec![0u16; q];
    let mut inv = vec![0u16; q];
    for (i, a) in elems.iter().enumerate() {
        neg[i] = spec.element_index(&a.neg()) as u16;
        if i > 0 {
            inv[i] = spec.element_index(&a.inv().expect("nonzero")) as u16;
        }
        for (j, b) in elems.iter().enumerate() {
            add[i * q + j] = spec.element_index(&a.add(b).expect("same field")) as u16;
            mul[i * q + j] = spec.element_index(&a.mul(b).expect("same field")) as u16;
        }
    }
    let t = Arc::new(ArithTables { q, add, mul, neg, inv });
    cache.push((spec.clone(), t.clone()));
    t
}

struct Arith {
    spec: FieldSpec,
    tables: Option<Arc<ArithTables>>,
}

impl Arith {
    fn new(spec: FieldSpec, allow_tables: bool) -> Arith {
        let tables = if allow_tables && spec.order() <= TABLE_MAX_ORDER {
            Some(build_tables(&spec))
        } else {
            None
        };
        Arith { spec, tables }
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some(t) => t.add[a as usize * t.q + b as usize] as u64,
            None => {
                let x = self.spec.element_at(a as u128);
                let y = self.spec.element_at(b as u128);
                self.spec.element_index(&x.add(&y).expect("same field")) as u64
            }
        }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some(t) => t.mul[a as usize * t.q + b as usize] as u64,
            None => {
                let x = self.spec.element_at(a as u128);
                let y = self.spec.element_at(b as u128);
                self.spec.element_index(&x.mul(&y).expect("same field")) as u64
            }
        }
    }

    #[inline]
    fn neg(&self, a: u64) -> u64 {
        match &self.tables {
            Some(t) => t.neg[a as usize] as u64,
            None => {
                let x = self.spec.element_at(a as u128);
                self.spec.element_index(&x.neg()) as u64
            }
        }
    }

    #[inline]
    fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    fn inv(&self, a: u64) -> u64 {
        match &self.tables {
            Some(t) => t.inv[a as usize] as u64,
            None => {
                let x = self.spec.element_at(a as u128);
                self.spec.element_index(&x.inv().expect("nonzero")) as u64
            }
        }
    }
}

// ---- Dense slot layout ----
//
// Monomials with total degree <= cap, in grevlex-ascending slot order, so
// the leading term of a polynomial is its highest nonzero slot.

struct SlotMap {
    arity: usize,
    cap: u32,
    /// (x-exponent, y-exponent) per slot; y is 0 for arity 1.
    mons: Vec<(u32, u32)>,
    /// slot index by x-exponent * (cap+1) + y-exponent.
    id: Vec<usize>,
}

impl SlotMap {
    fn new(arity: usize, cap: u32) -> SlotMap {
        let mut mons = Vec::new();
        for d in 0..=cap {
            if arity == 1 {
                mons.push((d, 0));
            } else {
                // Grevlex-ascending within a degree block: y^d first, x^d last.
                for i in 0..=d {
                    mons.push((i, d - i));
                }
            }
        }
        let w = cap as usize + 1;
        let mut id = vec![usize::MAX; w * w];
        for (s, &(i, j)) in mons.iter().enumerate() {
            id[i as usize * w + j as usize] = s;
        }
        SlotMap { arity, cap, mons, id }
    }

    #[inline]
    fn slot(&self, i: u32, j: u32) -> usize {
        self.id[i as usize * (self.cap as usize + 1) + j as usize]
    }

    /// Slot range of the degree-exactly-e block.
    fn block(&self, e: u32) -> std::ops::Range<usize> {
        if self.arity == 1 {
            e as usize..e as usize + 1
        } else {
            let start = (e as usize * (e as usize + 1)) / 2;
            start..start + e as usize + 1
        }
    }

    fn to_dense(&self, f: &Polynomial) -> Vec<u64> {
        let mut out = vec![0u64; self.mons.len()];
        for (m, c) in f.terms() {
            let i = m.exponent(0);
            let j = if self.arity == 2 { m.exponent(1) } else { 0 };
            out[self.slot(i, j)] = f.field().element_index(c) as u64;
        }
        out
    }

    fn from_dense(&self, coeffs: &[u64], field: &FieldSpec) -> Polynomial {
        let terms = coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(s, &c)| {
            let (i, j) = self.mons[s];
            let exps = if self.arity == 1 { vec![i] } else { vec![i, j] };
            (exps, field.element_at(c as u128))
        });
        Polynomial::from_terms(field, self.arity, terms).expect("dense terms are valid")
    }
}

#[inline]
fn top_slot(coeffs: &[u64]) -> Option<usize> {
    coeffs.iter().rposition(|&c| c != 0)
}

fn dense_degree(sm: &SlotMap, coeffs: &[u64]) -> Option<u32> {
    top_slot(coeffs).map(|s| sm.mons[s].0 + sm.mons[s].1)
}

// ---- Candidate enumeration ----

/// Number of candidates of total degree exactly e: the leading slot runs
/// over the degree-e block and every grevlex-smaller slot is a free digit.
fn scan_cost(q: u128, arity: usize, e: u32) -> Option<u128> {
    let block = if arity == 1 { 1u32 } else { e + 1 };
    let top = if arity == 1 {
        e as usize
    } else {
        ((e as usize + 1) * (e as usize + 2)) / 2 - 1
    };
    let mut total: u128 = 0;
    for l in 0..block as usize {
        let free = top - l;
        let mut pw: u128 = 1;
        for _ in 0..free {
            pw = pw.checked_mul(q)?;
        }
        total = total.checked_add(pw)?;
    }
    Some(total)
}

fn check_scan(q: u128, arity: usize, e: u32, budget: u64, what: &'static str) -> Result<()> {
    let needed = scan_cost(q, arity, e).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::ScopeExceeded {
            what,
            needed,
            budget: budget as u128,
        });
    }
    Ok(())
}

fn scan_what(arity: usize) -> &'static str {
    if arity == 1 {
        "univariate divisor scan"
    } else {
        "bivariate divisor scan"
    }
}

/// Candidates of total degree exactly e in canonical order: leading slot
/// descending through the degree-e block, then free digits (one per
/// grevlex-smaller slot, the larger slot more significant) counting up
/// through the field's canonical element order.
struct CandidateIter {
    q: u64,
    lead: usize,
    lead_end: usize,
    digits: Vec<u64>,
    started: bool,
    done: bool,
}

impl CandidateIter {
    fn new(sm: &SlotMap, q: u64, e: u32) -> CandidateIter {
        let block = sm.block(e);
        CandidateIter {
            q,
            lead: block.end - 1,
            lead_end: block.start,
            digits: vec![0; block.end - 1],
            started: false,
            done: false,
        }
    }

    /// Advances to the next candidate; fills (slot, coeff-index) terms in
    /// grevlex-descending order, leading term first.
    fn next(&mut self, terms: &mut Vec<(usize, u64)>) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
        } else {
            // Odometer over the free slots below the leading one.
            let mut pos = 0;
            loop {
                if pos == self.lead {
                    // All digits wrapped: move the leading slot down.
                    if self.lead == self.lead_end {
                        self.done = true;
                        return false;
                    }
                    self.lead -= 1;
                    for d in &mut self.digits[..self.lead] {
                        *d = 0;
                    }
                    break;
                }
                self.digits[pos] += 1;
                if self.digits[pos] < self.q {
                    break;
                }
                self.digits[pos] = 0;
                pos += 1;
            }
        }
        terms.clear();
        terms.push((self.lead, 1));
        for s in (0..self.lead).rev() {
            if self.digits[s] != 0 {
                terms.push((s, self.digits[s]));
            }
        }
        true
    }
}

// ---- Trial division ----

/// Attempts src / divisor. On success fills `quot` (same slot layout) and
/// returns true; aborts at the first leading term the divisor cannot cancel,
/// which certifies indivisibility.
fn try_divide(
    ar: &Arith,
    sm: &SlotMap,
    src: &[u64],
    div_terms: &[(usize, u64)],
    work: &mut Vec<u64>,
    quot: &mut Vec<u64>,
) -> bool {
    let (lead_slot, lead_c) = div_terms[0];
    let (di, dj) = sm.mons[lead_slot];
    let lc_inv = ar.inv(lead_c);
    work.clear();
    work.extend_from_slice(src);
    quot.clear();
    quot.resize(src.len(), 0);
    let mut top = src.len();
    loop {
        let t = match work[..top].iter().rposition(|&c| c != 0) {
            None => return true,
            Some(t) => t,
        };
        top = t + 1;
        let (wi, wj) = sm.mons[t];
        if wi < di || wj < dj {
            return false;
        }
        let (qi, qj) = (wi - di, wj - dj);
        let qc = ar.mul(work[t], lc_inv);
        quot[sm.slot(qi, qj)] = qc;
        work[t] = 0;
        for &(s, c) in &div_terms[1..] {
            let (gi, gj) = sm.mons[s];
            let slot = sm.slot(qi + gi, qj + gj);
            work[slot] = ar.sub(work[slot], ar.mul(qc, c));
        }
    }
}

// ---- Factorization over the input's own field ----

/// Complete factorization of a nonconstant arity-1 or arity-2 polynomial
/// over its own coefficient field by ascending-degree trial division.
/// Factors come out grevlex-monic in discovery order with multiplicities;
/// their product is the grevlex-monic normalization of the input.
fn factor_flat(f: &Polynomial, budget: u64) -> Result<Vec<(Polynomial, u32)>> {
    let field = f.field().clone();
    let arity = f.arity();
    let q = field.order();
    let d0 = f.total_degree().expect("nonconstant") as u32;
    let sm = SlotMap::new(arity, d0);
    let mut current = sm.to_dense(f);
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    let mut ar: Option<Arith> = None;
    let mut terms = Vec::new();
    let (mut work, mut quot) = (Vec::new(), Vec::new());
    let mut e = 1u32;
    while dense_degree(&sm, &current).is_some_and(|d| 2 * e <= d) {
        check_scan(q, arity, e, budget, scan_what(arity))?;
        let ar = ar.get_or_insert_with(|| Arith::new(field.clone(), true));
        let mut iter = CandidateIter::new(&sm, q as u64, e);
        while iter.next(&mut terms) {
            if !try_divide(ar, &sm, &current, &terms, &mut work, &mut quot) {
                continue;
            }
            let g = sm.from_dense(
                &terms
                    .iter()
                    .fold(vec![0u64; sm.mons.len()], |mut v, &(s, c)| {
                        v[s] = c;
                        v
                    }),
                &field,
            );
            let mut mult = 0u32;
            loop {
                mult += 1;
                std::mem::swap(&mut current, &mut quot);
                if !try_divide(ar, &sm, &current, &terms, &mut work, &mut quot) {
                    break;
                }
            }
            factors.push((g, mult));
            if dense_degree(&sm, &current).is_none_or(|d| 2 * e > d) {
                break;
            }
        }
        e += 1;
    }
    if dense_degree(&sm, &current).is_some_and(|d| d >= 1) {
        factors.push((sm.from_dense(&current, &field).monic_leading(), 1));
    }
    Ok(factors)
}

// ---- Extension tower ----

/// Factorization state over one field of the tower. The stored field can be
/// smaller than GF(Q^k) when skipped prime steps could not split anything;
/// counts and degrees over the two fields agree.
#[derive(Clone)]
struct TowerState {
    field: FieldSpec,
    /// Image of the (monic) input along the composed tower embeddings.
    lifted: Polynomial,
    factors: Vec<(Polynomial, u32)>,
}

impl TowerState {
    fn count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

/// Splits one irreducible piece at a prime extension step into its `ell`
/// conjugates of degree delta, or reports it irreducible there.
fn split_piece(
    ar: &Arith,
    sm: &SlotMap,
    piece: &[u64],
    delta: u32,
) -> Result<Option<Vec<Vec<u64>>>> {
    let q = ar.spec.order() as u64;
    let mut parts: Vec<Vec<u64>> = Vec::new();
    let mut rem = piece.to_vec();
    let mut terms = Vec::new();
    let (mut work, mut quot) = (Vec::new(), Vec::new());
    loop {
        let deg = dense_degree(sm, &rem).expect("piece is nonconstant");
        if deg == delta && !parts.is_empty() {
            parts.push(rem);
            return Ok(Some(parts));
        }
        let mut iter = CandidateIter::new(sm, q, delta);
        let mut found = false;
        while iter.next(&mut terms) {
            if try_divide(ar, sm, &rem, &terms, &mut work, &mut quot) {
                let mut g = vec![0u64; sm.mons.len()];
                for &(s, c) in &terms {
                    g[s] = c;
                }
                parts.push(g);
                std::mem::swap(&mut rem, &mut quot);
                found = true;
                break;
            }
        }
        if !found {
            if parts.is_empty() {
                return Ok(None);
            }
            // An irreducible piece splits into equal-degree conjugates, so
            // once one divisor is out the rest must follow.
            return Err(Error::DegenerateInput("conjugate split lost a factor"));
        }
    }
}

fn gcd_usize(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether any absolute-factor arrangement lets a degree-`e` piece at tower
/// level `s` split at prime step `ell`: some g | s and r | e must satisfy
/// ell | r, gcd(s/g, r) = 1, and the orbit-degree bound g*e <= total.
fn split_possible(s: usize, ell: usize, e: usize, total: usize) -> bool {
    for g in 1..=s {
        if s % g != 0 || g * e > total {
            continue;
        }
        let mut r = ell;
        while r <= e {
            if e % r == 0 && gcd_usize(s / g, r) == 1 {
                return true;
            }
            r += ell;
        }
    }
    false
}

/// One prime step up the tower, from semantic level `level` to
/// `level * ell`. When no piece can split the previous state is reused
/// verbatim.
fn refine(prev: &TowerState, level: usize, ell: usize, budget: u64) -> Result<TowerState> {
    let arity = prev.lifted.arity();
    let total = prev.lifted.total_degree().expect("nonconstant input") as usize;
    let splittable: Vec<u32> = prev
        .factors
        .iter()
        .map(|(p, _)| p.total_degree().expect("nonconstant piece") as u32)
        .filter(|&d| split_possible(level, ell, d as usize, total))
        .collect();
    if splittable.is_empty() {
        return Ok(prev.clone());
    }
    let q_new = prev
        .field
        .order()
        .checked_pow(ell as u32)
        .ok_or(Error::ScopeExceeded {
            what: scan_what(arity),
            needed: u128::MAX,
            budget: budget as u128,
        })?;
    for &d in &splittable {
        check_scan(q_new, arity, d / ell as u32, budget, scan_what(arity))?;
    }
    let target = FieldSpec::extension(prev.field.p(), prev.field.degree() * ell)?;
    let emb = Embedding::new(&prev.field, &target)?;
    let lifted = prev.lifted.lift_via(&emb)?;
    let max_deg = splittable.iter().copied().max().unwrap();
    let sm = SlotMap::new(arity, max_deg);
    let ar = Arith::new(target.clone(), true);
    let mut factors = Vec::new();
    for (piece, mult) in &prev.factors {
        let lifted_piece = piece.lift_via(&emb)?;
        let d = lifted_piece.total_degree().expect("nonconstant") as usize;
        if !split_possible(level, ell, d, total) {
            factors.push((lifted_piece, *mult));
            continue;
        }
        let dense = sm.to_dense(&lifted_piece);
        match split_piece(&ar, &sm, &dense, (d / ell) as u32)? {
            None => factors.push((lifted_piece, *mult)),
            Some(parts) => {
                for part in parts {
                    factors.push((sm.from_dense(&part, &target), *mult));
                }
            }
        }
    }
    Ok(TowerState {
        field: target,
        lifted,
        factors,
    })
}

fn largest_prime_factor(mut k: usize) -> usize {
    let mut best = 1;
    let mut p = 2;
    while p * p <= k {
        while k % p == 0 {
            best = p;
            k /= p;
        }
        p += 1;
    }
    if k > 1 {
        best = k;
    }
    best
}

fn frobenius_poly(f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        f.field(),
        f.arity(),
        f.terms().map(|(m, c)| (m.exponents().to_vec(), c.frobenius())),
    )
    .expect("same field")
}

/// Flattens a state's factors and conjugates them so their product equals
/// the canonical lift of `f` (tower embeddings compose to some embedding of
/// the base field; a Frobenius power moves it onto the canonical one).
fn align_sample(f: &Polynomial, st: &TowerState) -> Result<Vec<Polynomial>> {
    let mut flat: Vec<Polynomial> = Vec::new();
    for (g, m) in &st.factors {
        for _ in 0..*m {
            flat.push(g.clone());
        }
    }
    if &st.field == f.field() {
        return Ok(flat);
    }
    let canonical = f.lift_to_extension(&st.field)?.monic_leading();
    let mut img = st.lifted.clone();
    let mut t = 0usize;
    while img != canonical {
        img = frobenius_poly(&img);
        t += 1;
        if t >= st.field.degree() {
            return Err(Error::DegenerateInput("embedding alignment failed"));
        }
    }
    for _ in 0..t {
        for g in &mut flat {
            *g = frobenius_poly(g);
        }
    }
    Ok(flat)
}

fn check_oracle_arity(f: &Polynomial) -> Result<()> {
    if f.arity() > 2 {
        return Err(Error::ScopeExceeded {
            what: "oracle arity",
            needed: f.arity() as u128,
            budget: 2,
        });
    }
    Ok(())
}

fn check_degree_cap(f: &Polynomial) -> Result<u64> {
    let d = f
        .total_degree()
        .ok_or(Error::DegenerateInput("the oracle needs a nonzero polynomial"))?;
    if d > DEGREE_CAP {
        return Err(Error::ScopeExceeded {
            what: "oracle degree",
            needed: d as u128,
            budget: DEGREE_CAP as u128,
        });
    }
    Ok(d)
}

/// Extension sweep shared by the decision and counting entry points.
fn sweep(f: &Polynomial, budget: u64, early_exit: bool) -> Result<OracleReport> {
    check_oracle_arity(f)?;
    let d = check_degree_cap(f)?;
    if d == 0 {
        return Err(Error::DegenerateInput("the oracle needs a nonconstant polynomial"));
    }
    let d = d as usize;
    let mut states: Vec<Option<TowerState>> = vec![None; d + 1];
    let mut tested = Vec::new();
    let mut irreducible_over = BTreeMap::new();
    let (mut best_count, mut best_k) = (0u32, 1usize);
    for k in 1..=d {
        let state = if k == 1 {
            TowerState {
                field: f.field().clone(),
                lifted: f.monic_leading(),
                factors: factor_flat(f, budget)?,
            }
        } else {
            let lp = largest_prime_factor(k);
            let prev = states[k / lp].as_ref().expect("chain predecessor computed");
            refine(prev, k / lp, lp, budget)?
        };
        let count = state.count();
        tested.push(k);
        irreducible_over.insert(k, count == 1);
        if count > best_count {
            best_count = count;
            best_k = k;
        }
        let reducible = count > 1;
        states[k] = Some(state);
        if early_exit && reducible {
            break;
        }
    }
    let sample = align_sample(f, states[best_k].as_ref().expect("best state kept"))?;
    Ok(OracleReport {
        base_field: f.field().clone(),
        tested_extensions: tested,
        irreducible_over,
        max_factor_count: best_count,
        sample_factorization: Some(sample),
    })
}

// ---- Public operations ----

/// Complete factorization of an arity-1 polynomial over its base field by
/// ascending-degree trial division over all monic candidates.
pub fn factor_univariate(f: &Polynomial, budget: u64) -> Result<Vec<(Polynomial, u32)>> {
    if f.arity() != 1 {
        return Err(Error::ArityMismatch(f.arity(), 1));
    }
    if f.is_zero() {
        return Err(Error::DegenerateInput("cannot factor the zero polynomial"));
    }
    if check_degree_cap(f)? == 0 {
        return Ok(Vec::new());
    }
    factor_flat(f, budget)
}

/// Whether no nonconstant polynomial of total degree up to deg(f)/2 divides
/// the bivariate input, by the literal exhaustive candidate scan.
pub fn is_irreducible_bivariate(f: &Polynomial, budget: u64) -> Result<bool> {
    if f.arity() != 2 {
        return Err(Error::ArityMismatch(f.arity(), 2));
    }
    let d = check_degree_cap(f)? as u32;
    if d == 0 {
        return Err(Error::DegenerateInput("irreducibility needs a nonconstant polynomial"));
    }
    let field = f.field().clone();
    let q = field.order();
    let sm = SlotMap::new(2, d);
    let dense = sm.to_dense(f);
    let mut ar: Option<Arith> = None;
    let mut terms = Vec::new();
    let (mut work, mut quot) = (Vec::new(), Vec::new());
    for e in 1..=d / 2 {
        check_scan(q, 2, e, budget, scan_what(2))?;
        let ar = ar.get_or_insert_with(|| Arith::new(field.clone(), true));
        let mut iter = CandidateIter::new(&sm, q as u64, e);
        while iter.next(&mut terms) {
            if try_divide(ar, &sm, &dense, &terms, &mut work, &mut quot) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Decides absolute irreducibility by sweeping GF(Q^k), k = 1..deg(f),
/// stopping at the first extension that splits the input.
pub fn is_absolutely_irreducible(f: &Polynomial, budget: u64) -> Result<OracleReport> {
    sweep(f, budget, true)
}

/// Maximum factor count (with multiplicity) over GF(Q^k), k = 1..deg(f),
/// with a witness factorization from the extension attaining it.
pub fn count_absolute_factors(f: &Polynomial, budget: u64) -> Result<OracleReport> {
    sweep(f, budget, false)
}

/// Squarefree test by complete factorization: true iff no base-field factor
/// repeats. Over a perfect field distinct base factors stay coprime in the
/// closure and irreducible ones stay squarefree, so this matches the
/// closure-level notion.
pub fn is_squarefree_bruteforce(f: &Polynomial, budget: u64) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial has no squarefree status"));
    }
    if f.is_constant() {
        return Ok(true);
    }
    check_oracle_arity(f)?;
    check_degree_cap(f)?;
    // A polynomial whose exponents are all divisible by p is a p-th power.
    let p = f.field().p();
    if f.terms().all(|(m, _)| m.exponents().iter().all(|&e| e as u64 % p == 0)) {
        return Ok(false);
    }
    Ok(factor_flat(f, budget)?.iter().all(|(_, m)| *m == 1))
}
