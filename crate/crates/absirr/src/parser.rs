//! Text grammar for field specs and polynomials, plus the canonical
//! formatter. Both directions share the grevlex-descending term order, so
//! format . parse is a fixpoint.
//!
//! Polynomial grammar: terms joined by `+`/`-`; a term multiplies factors by
//! `*` or juxtaposition; factors are decimal integers, generator powers `a`,
//! `a^k`, parenthesized generator sums like `(a+1)` or `(2*a^2+a+1)`, and
//! variable powers over `x,y,z,w` (aliases for `x1..x4`) or `x1..x9`.
//! Parentheses never group polynomial subexpressions.

use crate::gf::{FieldElement, FieldSpec};
use crate::mpoly::Polynomial;
use crate::Result;
use std::fmt;

/// Highest variable index the grammar can express (x1..x9).
const MAX_VARS: usize = 9;

/// Syntax failure with the byte offset of the first invalid token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Option<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)?;
        if let Some(e) = self.expected {
            write!(f, " (expected {e})")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: impl Into<String>, expected: Option<&'static str>) -> ParseError {
        self.err_at(self.pos, message, expected)
    }

    fn err_at(
        &self,
        offset: usize,
        message: impl Into<String>,
        expected: Option<&'static str>,
    ) -> ParseError {
        ParseError {
            offset: offset.min(self.bytes.len()),
            message: message.into(),
            expected,
        }
    }

    fn expect(&mut self, b: u8) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(
                format!("expected '{}'", b as char),
                None,
            ))
        }
    }

    fn parse_uint(&mut self) -> std::result::Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        let mut any = false;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            any = true;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| self.err_at(start, "number too large", None))?;
            self.pos += 1;
        }
        if !any {
            return Err(self.err(
                "expected a number",
                Some("decimal digits"),
            ));
        }
        Ok(value)
    }
}

// ---- Field specs ----

/// Parses `GF(p)`, `GF(p^n)`, or `GF(p^n; c0,c1,...,cn)` (modulus low-first).
pub fn parse_field_spec(text: &str) -> Result<FieldSpec> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    for expected in [b'G', b'F'] {
        if c.peek() != Some(expected) {
            return Err(c.err("expected field spec", Some("GF(")).into());
        }
        c.bump();
    }
    c.skip_ws();
    c.expect(b'(')?;
    c.skip_ws();
    let p = c.parse_uint()?;
    c.skip_ws();
    let mut degree: usize = 1;
    let mut modulus: Option<Vec<u64>> = None;
    if c.peek() == Some(b'^') {
        c.bump();
        c.skip_ws();
        let pos = c.pos;
        let n = c.parse_uint()?;
        if n == 0 || n > u32::MAX as u64 {
            return Err(c.err_at(pos, "extension degree out of range", None).into());
        }
        degree = n as usize;
        c.skip_ws();
        if c.peek() == Some(b';') {
            c.bump();
            let mut coeffs = Vec::with_capacity(degree + 1);
            loop {
                c.skip_ws();
                coeffs.push(c.parse_uint()?);
                c.skip_ws();
                match c.peek() {
                    Some(b',') => {
                        c.bump();
                    }
                    _ => break,
                }
            }
            if coeffs.len() != degree + 1 {
                return Err(c
                    .err(
                        format!(
                            "modulus needs {} coefficients, found {}",
                            degree + 1,
                            coeffs.len()
                        ),
                        None,
                    )
                    .into());
            }
            modulus = Some(coeffs);
        }
    }
    c.expect(b')')?;
    c.skip_ws();
    if c.peek().is_some() {
        return Err(c.err("trailing input after field spec", None).into());
    }
    match modulus {
        None if degree == 1 => FieldSpec::prime(p),
        None => FieldSpec::extension(p, degree),
        Some(m) => FieldSpec::with_modulus(p, m),
    }
}

// ---- Polynomials ----

enum Factor {
    Scalar(FieldElement),
    VarPower(usize, u32),
}

struct PolyParser<'a> {
    c: Cursor<'a>,
    field: &'a FieldSpec,
}

impl<'a> PolyParser<'a> {
    /// Generator power `a^k`; errors over a prime field.
    fn gen_power(&mut self) -> std::result::Result<FieldElement, ParseError> {
        let start = self.c.pos;
        self.c.bump(); // 'a'
        let g = match self.field.generator() {
            Some(g) => g,
            None => {
                return Err(self.c.err_at(
                    start,
                    "generator 'a' requires an extension field",
                    None,
                ))
            }
        };
        let mut e = 1u64;
        if self.c.peek() == Some(b'^') {
            self.c.bump();
            e = self.c.parse_uint()?;
        }
        Ok(g.pow(e))
    }

    /// One summand inside a coefficient group: integer, `a`-power, or both.
    fn group_term(&mut self) -> std::result::Result<FieldElement, ParseError> {
        let mut value = self.field.one();
        let mut seen = false;
        if matches!(self.c.peek(), Some(b) if b.is_ascii_digit()) {
            let n = self.c.parse_uint()?;
            value = self.field.element_from_u64(n);
            if self.c.peek() == Some(b'^') {
                self.c.bump();
                let e = self.c.parse_uint()?;
                value = value.pow(e);
            }
            seen = true;
            self.c.skip_ws();
            if self.c.peek() == Some(b'*') {
                self.c.bump();
                self.c.skip_ws();
            }
        }
        if self.c.peek() == Some(b'a') {
            let g = self.gen_power()?;
            value = value.mul(&g).expect("same field");
            seen = true;
        }
        if !seen {
            return Err(self.c.err(
                "expected a coefficient term",
                Some("integer or generator power"),
            ));
        }
        Ok(value)
    }

    /// Parenthesized generator sum, already past the '('.
    fn group(&mut self) -> std::result::Result<FieldElement, ParseError> {
        let mut acc = self.field.zero();
        let mut negate = false;
        self.c.skip_ws();
        match self.c.peek() {
            Some(b'+') => {
                self.c.bump();
                self.c.skip_ws();
            }
            Some(b'-') => {
                negate = true;
                self.c.bump();
                self.c.skip_ws();
            }
            _ => {}
        }
        loop {
            let t = self.group_term()?;
            let t = if negate { t.neg() } else { t };
            acc = acc.add(&t).expect("same field");
            self.c.skip_ws();
            match self.c.peek() {
                Some(b')') => {
                    self.c.bump();
                    return Ok(acc);
                }
                Some(b'+') => {
                    negate = false;
                }
                Some(b'-') => {
                    negate = true;
                }
                _ => {
                    return Err(self.c.err(
                        "unterminated coefficient group",
                        Some("'+', '-', or ')'"),
                    ))
                }
            }
            self.c.bump();
            self.c.skip_ws();
        }
    }

    /// Variable power starting at the current letter.
    fn var_power(&mut self) -> std::result::Result<Factor, ParseError> {
        let letter = self.c.bump().expect("caller checked");
        let index = match letter {
            b'y' => 1,
            b'z' => 2,
            b'w' => 3,
            b'x' => match self.c.peek() {
                Some(d @ b'1'..=b'9') => {
                    self.c.bump();
                    (d - b'1') as usize
                }
                _ => 0,
            },
            _ => unreachable!(),
        };
        let mut exp: u32 = 1;
        if self.c.peek() == Some(b'^') {
            self.c.bump();
            let pos = self.c.pos;
            let e = self.c.parse_uint()?;
            exp = u32::try_from(e)
                .map_err(|_| self.c.err_at(pos, "exponent too large", None))?;
        }
        Ok(Factor::VarPower(index, exp))
    }

    fn factor(&mut self) -> std::result::Result<Option<Factor>, ParseError> {
        match self.c.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = self.c.parse_uint()?;
                let mut value = self.field.element_from_u64(n);
                if self.c.peek() == Some(b'^') {
                    self.c.bump();
                    let e = self.c.parse_uint()?;
                    value = value.pow(e);
                }
                Ok(Some(Factor::Scalar(value)))
            }
            Some(b'a') => Ok(Some(Factor::Scalar(self.gen_power()?))),
            Some(b'(') => {
                self.c.bump();
                let mut value = self.group()?;
                if self.c.peek() == Some(b'^') {
                    self.c.bump();
                    let e = self.c.parse_uint()?;
                    value = value.pow(e);
                }
                Ok(Some(Factor::Scalar(value)))
            }
            Some(b'x') | Some(b'y') | Some(b'z') | Some(b'w') => Ok(Some(self.var_power()?)),
            _ => Ok(None),
        }
    }

    /// One term: factors joined by '*' or juxtaposition.
    fn term(&mut self) -> std::result::Result<(FieldElement, Vec<u32>), ParseError> {
        let mut coeff = self.field.one();
        let mut exps = vec![0u32; MAX_VARS];
        let mut any = false;
        loop {
            self.c.skip_ws();
            if any && self.c.peek() == Some(b'*') {
                self.c.bump();
                self.c.skip_ws();
                match self.factor()? {
                    Some(f) => self.apply(&mut coeff, &mut exps, f)?,
                    None => {
                        return Err(self.c.err(
                            "expected a factor after '*'",
                            Some("number, coefficient, or variable"),
                        ))
                    }
                }
                continue;
            }
            match self.factor()? {
                Some(f) => {
                    self.apply(&mut coeff, &mut exps, f)?;
                    any = true;
                }
                None if any => return Ok((coeff, exps)),
                None => {
                    return Err(self.c.err(
                        "expected a term",
                        Some("number, coefficient, or variable"),
                    ))
                }
            }
        }
    }

    fn apply(
        &mut self,
        coeff: &mut FieldElement,
        exps: &mut [u32],
        f: Factor,
    ) -> std::result::Result<(), ParseError> {
        match f {
            Factor::Scalar(s) => {
                *coeff = coeff.mul(&s).expect("same field");
            }
            Factor::VarPower(i, e) => {
                exps[i] = exps[i]
                    .checked_add(e)
                    .ok_or_else(|| self.c.err("exponent too large", None))?;
            }
        }
        Ok(())
    }
}

/// Parses a polynomial over `field`. With an arity hint, variables beyond it
/// are rejected; without one, arity is the highest variable index used
/// (minimum 1).
pub fn parse_polynomial(
    text: &str,
    field: &FieldSpec,
    arity_hint: Option<usize>,
) -> Result<Polynomial> {
    let mut p = PolyParser {
        c: Cursor::new(text),
        field,
    };
    let mut raw: Vec<(FieldElement, Vec<u32>)> = Vec::new();
    let mut max_index: usize = 0;
    p.c.skip_ws();
    let mut negate = false;
    match p.c.peek() {
        Some(b'+') => {
            p.c.bump();
        }
        Some(b'-') => {
            negate = true;
            p.c.bump();
        }
        _ => {}
    }
    loop {
        let term_start = p.c.pos;
        let (coeff, exps) = p.term()?;
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            max_index = max_index.max(i + 1);
            if let Some(arity) = arity_hint {
                if i >= arity {
                    return Err(p
                        .c
                        .err_at(
                            term_start,
                            format!("variable index {} exceeds arity {arity}", i + 1),
                            None,
                        )
                        .into());
                }
            }
        }
        raw.push((if negate { coeff.neg() } else { coeff }, exps));
        p.c.skip_ws();
        match p.c.peek() {
            None => break,
            Some(b'+') => {
                negate = false;
            }
            Some(b'-') => {
                negate = true;
            }
            _ => {
                return Err(p
                    .c
                    .err("expected '+' or '-' between terms", Some("'+' or '-'"))
                    .into())
            }
        }
        p.c.bump();
        p.c.skip_ws();
    }
    let arity = arity_hint.unwrap_or(max_index.max(1));
    Polynomial::from_terms(
        field,
        arity,
        raw.into_iter().map(|(c, mut exps)| {
            if exps.len() < arity {
                exps.resize(arity, 0);
            } else {
                exps.truncate(arity);
            }
            (exps, c)
        }),
    )
}

// ---- Formatting ----

/// Canonical element text: powers of `a` descending, zero coordinates
/// skipped, joined by '+'; never parenthesized here.
pub fn format_element(e: &FieldElement) -> String {
    let coeffs = e.coeffs();
    let mut pieces: Vec<String> = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let piece = match (k, c) {
            (0, _) => c.to_string(),
            (1, 1) => "a".to_string(),
            (1, _) => format!("{c}*a"),
            (_, 1) => format!("a^{k}"),
            (_, _) => format!("{c}*a^{k}"),
        };
        pieces.push(piece);
    }
    if pieces.is_empty() {
        "0".to_string()
    } else {
        pieces.join("+")
    }
}

fn variable_name(i: usize, arity: usize) -> String {
    if arity <= 4 {
        ["x", "y", "z", "w"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// Whether the element is a sum of two or more `a`-powers.
fn is_compound(e: &FieldElement) -> bool {
    e.coeffs().iter().filter(|&&c| c != 0).count() >= 2
}

/// Canonical polynomial text: grevlex-descending terms joined by " + ",
/// coefficient 1 suppressed before variables, exponent 1 suppressed,
/// compound extension coefficients parenthesized, zero rendered "0".
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let arity = f.arity();
    let mut terms: Vec<String> = Vec::new();
    for (m, c) in f.terms() {
        let vars: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = variable_name(i, arity);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        let elem = format_element(c);
        let elem = if is_compound(c) {
            format!("({elem})")
        } else {
            elem
        };
        let term = if vars.is_empty() {
            elem
        } else if c.is_one() {
            vars.join("*")
        } else {
            format!("{elem}*{}", vars.join("*"))
        };
        terms.push(term);
    }
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::Error;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn gf(p: u64, n: usize) -> FieldSpec {
        FieldSpec::extension(p, n).unwrap()
    }

    #[test]
    fn field_spec_round_trips() {
        let f2 = parse_field_spec("GF(2)").unwrap();
        assert_eq!((f2.p(), f2.degree()), (2, 1));
        let f4 = parse_field_spec("GF(2^2)").unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]); // t^2 + t + 1
        let explicit = parse_field_spec("GF(2^2; 1,1,1)").unwrap();
        assert_eq!(explicit, f4);
        let f9 = parse_field_spec(" GF( 3 ^ 2 ) ").unwrap();
        assert_eq!(f9.order(), 9);
    }

    #[test]
    fn field_spec_distinct_errors() {
        assert!(matches!(parse_field_spec("GF(4)"), Err(Error::NotPrime(4))));
        assert!(matches!(
            parse_field_spec("GF(2^2; 1,0,1)"),
            Err(Error::ReducibleModulus { p: 2 })
        ));
        assert!(matches!(parse_field_spec("GF(2^2; 1,1)"), Err(Error::Parse(_))));
        assert!(matches!(parse_field_spec("GF(2"), Err(Error::Parse(_))));
        assert!(matches!(parse_field_spec("gf(2)"), Err(Error::Parse(_))));
        assert!(matches!(parse_field_spec("GF(2) extra"), Err(Error::Parse(_))));
        assert!(matches!(parse_field_spec("GF(2^0)"), Err(Error::Parse(_))));
    }

    #[test]
    fn main_example_parses() {
        let f2 = gf(2, 1);
        let f = parse_polynomial("x^2 + x*y + y^2 + x", &f2, None).unwrap();
        assert_eq!(f.num_terms(), 4);
        assert_eq!(f.total_degree(), Some(2));
        assert_eq!(f.arity(), 2);
    }

    #[test]
    fn extension_coefficients_parse() {
        let f4 = gf(2, 2);
        let f = parse_polynomial("(a+1)x^2 + a", &f4, None).unwrap();
        assert_eq!(f.num_terms(), 2);
        let a = f4.generator().unwrap();
        let a1 = f4.element_from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.coefficient(&crate::mpoly::Monomial::new(vec![2])), a1);
        assert_eq!(f.coefficient(&crate::mpoly::Monomial::new(vec![0])), a);
    }

    #[test]
    fn accumulation_in_char_2() {
        let f2 = gf(2, 1);
        assert!(parse_polynomial("x + x", &f2, None).unwrap().is_zero());
    }

    #[test]
    fn juxtaposition_and_star_agree() {
        let f5 = gf(5, 1);
        let a = parse_polynomial("2xy^3", &f5, None).unwrap();
        let b = parse_polynomial("2 * x * y^3", &f5, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn minus_maps_to_negated_residue() {
        let f3 = gf(3, 1);
        let f = parse_polynomial("x - y", &f3, None).unwrap();
        assert_eq!(f, parse_polynomial("x + 2y", &f3, None).unwrap());
        let g = parse_polynomial("-x", &f3, None).unwrap();
        assert_eq!(g, parse_polynomial("2x", &f3, None).unwrap());
    }

    #[test]
    fn arity_rules() {
        let f2 = gf(2, 1);
        assert_eq!(parse_polynomial("x3 + x1", &f2, None).unwrap().arity(), 3);
        assert_eq!(parse_polynomial("7", &f2, None).unwrap().arity(), 1);
        assert_eq!(parse_polynomial("x", &f2, Some(3)).unwrap().arity(), 3);
        assert!(matches!(
            parse_polynomial("z", &f2, Some(2)),
            Err(Error::Parse(_))
        ));
        // x and x1 are the same variable; w is x4.
        let f = parse_polynomial("x*x1 + w", &f2, None).unwrap();
        assert_eq!(f.arity(), 4);
        assert_eq!(f.degree_in(0), Some(2));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let f2 = gf(2, 1);
        let cases = ["", "x^", "x +", "x y +* y", "(a+1)x", "x ) y", "(bad"];
        for s in cases {
            match parse_polynomial(s, &f2, None) {
                Err(Error::Parse(e)) => assert!(e.offset <= s.len(), "offset in {s:?}"),
                other => panic!("expected parse error for {s:?}, got {other:?}"),
            }
        }
        // Generator over a prime field is its own distinct failure.
        match parse_polynomial("a*x", &f2, None) {
            Err(Error::Parse(e)) => assert!(e.message.contains("extension field")),
            other => panic!("expected generator error, got {other:?}"),
        }
    }

    #[test]
    fn formatting_is_canonical() {
        let f2 = gf(2, 1);
        let f = parse_polynomial("x + y^2 + x*y + x^2", &f2, None).unwrap();
        assert_eq!(format_polynomial(&f), "x^2 + x*y + y^2 + x");
        assert_eq!(format_polynomial(&Polynomial::zero(&f2, 2)), "0");
        let f4 = gf(2, 2);
        let g = parse_polynomial("(a+1)x^2 + a*x + a^2 + a", &f4, None).unwrap();
        assert_eq!(format_polynomial(&g), "(a+1)*x^2 + a*x + 1");
        let f5 = gf(5, 1);
        let h = parse_polynomial("3x1*x5^2 + x2", &f5, None).unwrap();
        assert_eq!(format_polynomial(&h), "3*x1*x5^2 + x2");
    }

    #[test]
    fn element_formatting() {
        let f9 = gf(3, 2);
        assert_eq!(format_element(&f9.zero()), "0");
        assert_eq!(format_element(&f9.element_from_u64(2)), "2");
        assert_eq!(format_element(&f9.generator().unwrap()), "a");
        let e = f9.element_from_coeffs(&[1, 2]).unwrap();
        assert_eq!(format_element(&e), "2*a+1");
        let f8 = gf(2, 3);
        let e = f8.element_from_coeffs(&[0, 0, 1]).unwrap();
        assert_eq!(format_element(&e), "a^2");
    }

    fn random_poly(
        rng: &mut ChaCha12Rng,
        field: &FieldSpec,
        arity: usize,
        max_deg: u32,
        max_terms: usize,
    ) -> Polynomial {
        let elems = field.enumerate().unwrap();
        let terms: Vec<(Vec<u32>, FieldElement)> = (0..rng.gen_range(0..=max_terms))
            .map(|_| {
                (
                    (0..arity).map(|_| rng.gen_range(0..=max_deg)).collect(),
                    elems[rng.gen_range(0..elems.len())].clone(),
                )
            })
            .collect();
        Polynomial::from_terms(field, arity, terms).unwrap()
    }

    #[test]
    fn round_trip_random_polynomials() {
        let fields = [gf(2, 1), gf(3, 1), gf(5, 1), gf(2, 2), gf(3, 2), gf(2, 3)];
        let mut rng = ChaCha12Rng::seed_from_u64(0x9A25E);
        for trial in 0..2000 {
            let field = &fields[trial % fields.len()];
            let arity = rng.gen_range(1..=4);
            let f = random_poly(&mut rng, field, arity, 6, 6);
            let text = format_polynomial(&f);
            let back = parse_polynomial(&text, field, Some(arity)).unwrap();
            assert_eq!(back, f, "round trip failed for {text:?}");
            // Canonical form is a fixpoint.
            assert_eq!(format_polynomial(&back), text);
        }
    }

    #[test]
    fn fuzzed_inputs_never_panic() {
        let fields = [gf(2, 1), gf(5, 1), gf(2, 2)];
        let seeds = [
            "x^2 + x*y + y^2 + x",
            "(a+1)x^2 + a",
            "3x1*x2^4 + 2",
            "x - y + z*w",
        ];
        let mut rng = ChaCha12Rng::seed_from_u64(0xF022);
        for trial in 0..20_000 {
            let mut s: Vec<u8> = seeds[trial % seeds.len()].as_bytes().to_vec();
            for _ in 0..rng.gen_range(1..4) {
                let junk = b"+-*^()ax0129 qQ;#";
                match rng.gen_range(0..3) {
                    0 if !s.is_empty() => {
                        let i = rng.gen_range(0..s.len());
                        s.remove(i);
                    }
                    1 => {
                        let i = rng.gen_range(0..=s.len());
                        s.insert(i, junk[rng.gen_range(0..junk.len())]);
                    }
                    _ if !s.is_empty() => {
                        let i = rng.gen_range(0..s.len());
                        s[i] = junk[rng.gen_range(0..junk.len())];
                    }
                    _ => {}
                }
            }
            let Ok(text) = String::from_utf8(s) else { continue };
            let field = &fields[trial % fields.len()];
            match parse_polynomial(&text, field, None) {
                Ok(_) => {}
                Err(Error::Parse(e)) => assert!(e.offset <= text.len()),
                Err(_) => {}
            }
        }
    }
}
