//! Multivariate polynomial gcd by primitive pseudo-remainder sequences, and
//! the squarefree test via partial derivatives.
//!
//! Over a perfect coefficient field the derivative criterion detects repeated
//! factors over the algebraic closure: a nonconstant f with some nonvanishing
//! partial is squarefree iff gcd(f, all partials) is constant, and f with all
//! partials zero is an exact p-th power.

use crate::mpoly::Polynomial;
use crate::{Error, Result};

/// Gcd normalized to grevlex-leading coefficient 1; gcd(0, 0) = 0.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    if f.arity() != g.arity() {
        return Err(Error::ArityMismatch(f.arity(), g.arity()));
    }
    if f.is_zero() {
        return Ok(g.monic_leading());
    }
    if g.is_zero() {
        return Ok(f.monic_leading());
    }
    if f.is_constant() || g.is_constant() {
        // A nonzero constant divides everything.
        return Ok(Polynomial::one(f.field(), f.arity()));
    }

    // Main variable: least max degree across both inputs, ties to lowest index.
    let mut vars = f.variables_present();
    for v in g.variables_present() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort_unstable();
    let main = *vars
        .iter()
        .min_by_key(|&&i| {
            f.degree_in(i)
                .unwrap_or(0)
                .max(g.degree_in(i).unwrap_or(0))
        })
        .expect("nonconstant inputs have variables");

    // Split off contents; recurse on strictly fewer variables.
    let cf = content_in(f, main)?;
    let cg = content_in(g, main)?;
    let c = gcd(&cf, &cg)?;
    let fp = f.exact_div(&cf)?.expect("content divides");
    let gp = g.exact_div(&cg)?.expect("content divides");

    let (mut a, mut b) = if fp.degree_in(main).unwrap_or(0) >= gp.degree_in(main).unwrap_or(0) {
        (fp, gp)
    } else {
        (gp, fp)
    };
    loop {
        if b.is_zero() {
            return Ok(c.mul(&a)?.monic_leading());
        }
        if b.degree_in(main).unwrap_or(0) == 0 {
            // A primitive polynomial free of the main variable is constant.
            return Ok(c.monic_leading());
        }
        let r = pseudo_rem(&a, &b, main)?;
        a = b;
        b = primitive_part(&r, main)?;
    }
}

/// Folds `gcd` over the list; errors on an empty list.
pub fn gcd_many(polys: &[Polynomial]) -> Result<Polynomial> {
    let first = polys.first().ok_or(Error::EmptyList)?;
    let mut acc = first.monic_leading();
    for p in &polys[1..] {
        acc = gcd(&acc, p)?;
        if !acc.is_zero() && acc.is_constant() {
            break; // gcd only shrinks
        }
    }
    Ok(acc)
}

/// Gcd of the x_i-coefficients of a nonzero polynomial, monic-normalized.
pub fn content_in(f: &Polynomial, i: usize) -> Result<Polynomial> {
    let d = f
        .degree_in(i)
        .ok_or(Error::DegenerateInput("zero polynomial has no content"))?;
    let mut acc: Option<Polynomial> = None;
    for k in 0..=d {
        let coeff = f.coefficient_of_power(i, k);
        if coeff.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => coeff.monic_leading(),
            Some(prev) => gcd(&prev, &coeff)?,
        });
        if acc.as_ref().unwrap().is_constant() {
            break;
        }
    }
    Ok(acc.expect("nonzero polynomial has a nonzero coefficient"))
}

/// f divided by its content with respect to x_i.
pub fn primitive_part(f: &Polynomial, i: usize) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let c = content_in(f, i)?;
    Ok(f.exact_div(&c)?.expect("content divides"))
}

/// Pseudo-remainder in x_i: repeatedly cancels the leading x_i-term of `f`
/// against `g` after scaling by the leading x_i-coefficient of `g`. The
/// result is an element-of-the-ideal substitute for the remainder whose
/// x_i-degree is below that of `g`; contents are stripped afterwards.
fn pseudo_rem(f: &Polynomial, g: &Polynomial, i: usize) -> Result<Polynomial> {
    let dg = g
        .degree_in(i)
        .ok_or(Error::DivisionByZero)?;
    let lc_g = g.coefficient_of_power(i, dg);
    let mut r = f.clone();
    while let Some(dr) = r.degree_in(i) {
        if r.is_zero() || dr < dg {
            break;
        }
        let lc_r = r.coefficient_of_power(i, dr);
        let mut shift = vec![0u32; f.arity()];
        shift[i] = dr - dg;
        let scaled = r.mul(&lc_g)?;
        let cancel = g
            .mul(&lc_r)?
            .mul_term(&shift, &f.field().one())?;
        r = scaled.sub(&cancel)?;
    }
    Ok(r)
}

/// Outcome of the derivative-based squarefree test.
#[derive(Clone, Debug)]
pub struct SquarefreeReport {
    /// No repeated factor over the algebraic closure.
    pub squarefree: bool,
    /// A witness divisor with multiplicity: the gcd with the partials, or
    /// the p-th root when every partial vanishes.
    pub obstruction: Option<Polynomial>,
}

/// Squarefree test over the algebraic closure of the coefficient field.
pub fn is_squarefree(f: &Polynomial) -> Result<SquarefreeReport> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial has no squarefree status"));
    }
    if f.is_constant() {
        return Ok(SquarefreeReport {
            squarefree: true,
            obstruction: None,
        });
    }
    let mut partials = Vec::with_capacity(f.arity());
    for i in 0..f.arity() {
        partials.push(f.partial_derivative(i)?);
    }
    if partials.iter().all(|p| p.is_zero()) {
        // Every exponent is divisible by p, so f = root^p.
        let root = pth_power_root(f)?;
        return Ok(SquarefreeReport {
            squarefree: false,
            obstruction: Some(root),
        });
    }
    let mut list = vec![f.clone()];
    list.extend(partials);
    let g = gcd_many(&list)?;
    if g.is_constant() {
        Ok(SquarefreeReport {
            squarefree: true,
            obstruction: None,
        })
    } else {
        Ok(SquarefreeReport {
            squarefree: false,
            obstruction: Some(g),
        })
    }
}

/// The unique h with h^p = f, where p is the field characteristic.
/// Requires every exponent divisible by p; coefficients map through the
/// inverse of Frobenius.
pub fn pth_power_root(f: &Polynomial) -> Result<Polynomial> {
    let p = f.field().p();
    let n = f.field().degree();
    let mut terms = Vec::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        let mut exps = Vec::with_capacity(f.arity());
        for &e in m.exponents() {
            if e as u64 % p != 0 {
                return Err(Error::NotAPthPower);
            }
            exps.push(e / p as u32);
        }
        let mut root = c.clone();
        for _ in 0..n - 1 {
            root = root.frobenius();
        }
        terms.push((exps, root));
    }
    Polynomial::from_terms(f.field(), f.arity(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn gf(p: u64, n: usize) -> FieldSpec {
        FieldSpec::extension(p, n).unwrap()
    }

    fn poly(f: &FieldSpec, arity: usize, terms: &[(&[u32], u64)]) -> Polynomial {
        Polynomial::from_terms(
            f,
            arity,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), f.element_from_u64(*c))),
        )
        .unwrap()
    }

    #[test]
    fn univariate_gcd_over_gf5() {
        let f5 = gf(5, 1);
        let a = poly(&f5, 1, &[(&[2], 1), (&[0], 4)]); // x^2 - 1
        let b = poly(&f5, 1, &[(&[1], 1), (&[0], 4)]); // x - 1
        assert_eq!(gcd(&a, &b).unwrap(), poly(&f5, 1, &[(&[1], 1), (&[0], 4)]));
    }

    #[test]
    fn gcd_edge_cases() {
        let f5 = gf(5, 1);
        let z = Polynomial::zero(&f5, 2);
        let x = Polynomial::variable(&f5, 2, 0).unwrap();
        let two_x = x.scale(&f5.element_from_u64(2)).unwrap();
        assert_eq!(gcd(&z, &two_x).unwrap(), x);
        assert_eq!(gcd(&two_x, &z).unwrap(), x);
        assert!(gcd(&z, &z).unwrap().is_zero());
        let c = Polynomial::constant(f5.element_from_u64(3), 2);
        assert_eq!(gcd(&c, &x).unwrap(), Polynomial::one(&f5, 2));
        assert_eq!(gcd(&x, &x).unwrap(), x);
    }

    #[test]
    fn multivariate_gcd_pulls_out_common_factor() {
        let f2 = gf(2, 1);
        // gcd(y(x+1), y) = y.
        let a = poly(&f2, 2, &[(&[1, 1], 1), (&[0, 1], 1)]);
        let b = poly(&f2, 2, &[(&[0, 1], 1)]);
        assert_eq!(gcd(&a, &b).unwrap(), b);
        // gcd(x^2 y, x y^2) = x y.
        let c = poly(&f2, 2, &[(&[2, 1], 1)]);
        let d = poly(&f2, 2, &[(&[1, 2], 1)]);
        assert_eq!(gcd(&c, &d).unwrap(), poly(&f2, 2, &[(&[1, 1], 1)]));
        // Coprime pair.
        let x = Polynomial::variable(&f2, 2, 0).unwrap();
        let y = Polynomial::variable(&f2, 2, 1).unwrap();
        assert_eq!(gcd(&x, &y).unwrap(), Polynomial::one(&f2, 2));
    }

    #[test]
    fn gcd_many_folds_and_rejects_empty() {
        let f2 = gf(2, 1);
        let xy = poly(&f2, 2, &[(&[1, 1], 1)]);
        let x2y = poly(&f2, 2, &[(&[2, 1], 1)]);
        let xy2 = poly(&f2, 2, &[(&[1, 2], 1)]);
        assert_eq!(gcd_many(&[x2y, xy2]).unwrap(), xy);
        assert!(matches!(gcd_many(&[]), Err(Error::EmptyList)));
    }

    #[test]
    fn random_products_share_their_common_factor() {
        let fields = [gf(2, 1), gf(3, 1), gf(5, 1), gf(2, 2)];
        let mut rng = ChaCha12Rng::seed_from_u64(0x6CD);
        for trial in 0..400 {
            let f = &fields[trial % fields.len()];
            let elems = f.enumerate().unwrap();
            let mut rand_poly = |terms: usize, deg: u32| loop {
                let t: Vec<(Vec<u32>, _)> = (0..terms)
                    .map(|_| {
                        (
                            vec![rng.gen_range(0..=deg), rng.gen_range(0..=deg)],
                            elems[rng.gen_range(0..elems.len())].clone(),
                        )
                    })
                    .collect();
                let p = Polynomial::from_terms(f, 2, t).unwrap();
                if !p.is_zero() {
                    return p;
                }
            };
            let h = rand_poly(2, 2);
            let a = rand_poly(3, 2).mul(&h).unwrap();
            let b = rand_poly(3, 2).mul(&h).unwrap();
            let g = gcd(&a, &b).unwrap();
            // The gcd contains h and divides both products.
            assert!(g.is_divisible_by(&h).unwrap());
            assert!(a.is_divisible_by(&g).unwrap());
            assert!(b.is_divisible_by(&g).unwrap());
        }
    }

    #[test]
    fn squarefree_detects_repeated_factors() {
        let f2 = gf(2, 1);
        // (x + y)^2 = x^2 + y^2: all partials vanish, root is x + y.
        let sq = poly(&f2, 2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        let rep = is_squarefree(&sq).unwrap();
        assert!(!rep.squarefree);
        let root = rep.obstruction.unwrap();
        assert_eq!(root, poly(&f2, 2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(root.mul(&root).unwrap(), sq);
        // x^2 + xy + y^2 is squarefree.
        let sf = poly(&f2, 2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert!(is_squarefree(&sf).unwrap().squarefree);
        // x^2 y + x y^2 = xy(x + y) is squarefree despite the char-2 square trap.
        let sf2 = poly(&f2, 2, &[(&[2, 1], 1), (&[1, 2], 1)]);
        assert!(is_squarefree(&sf2).unwrap().squarefree);
    }

    #[test]
    fn squarefree_gcd_obstruction_divides() {
        let f3 = gf(3, 1);
        // (x + 1)^2 (x + 2) over GF(3): obstruction must be divisible by x + 1.
        let a = poly(&f3, 1, &[(&[1], 1), (&[0], 1)]);
        let b = poly(&f3, 1, &[(&[1], 1), (&[0], 2)]);
        let f = a.mul(&a).unwrap().mul(&b).unwrap();
        let rep = is_squarefree(&f).unwrap();
        assert!(!rep.squarefree);
        let obs = rep.obstruction.unwrap();
        assert_eq!(obs, a);
    }

    #[test]
    fn monic_cubics_over_gf2_are_half_squarefree() {
        let f2 = gf(2, 1);
        let mut count = 0usize;
        for mask in 0u32..8 {
            let f = poly(
                &f2,
                1,
                &[
                    (&[3], 1),
                    (&[2], (mask & 1) as u64),
                    (&[1], (mask >> 1 & 1) as u64),
                    (&[0], (mask >> 2 & 1) as u64),
                ],
            );
            if is_squarefree(&f).unwrap().squarefree {
                count += 1;
            }
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn constants_and_zero() {
        let f2 = gf(2, 1);
        assert!(is_squarefree(&Polynomial::one(&f2, 2)).unwrap().squarefree);
        assert!(is_squarefree(&Polynomial::zero(&f2, 2)).is_err());
    }

    #[test]
    fn pth_root_inverts_frobenius_on_coefficients() {
        let f4 = gf(2, 2);
        let a = f4.generator().unwrap();
        let a1 = f4.element_from_coeffs(&[1, 1]).unwrap();
        // ((a)x)^2 = (a+1)x^2, so the square root of (a+1)x^2 is a x.
        let sq = Polynomial::from_terms(&f4, 1, [(vec![2], a1)]).unwrap();
        let root = pth_power_root(&sq).unwrap();
        assert_eq!(root, Polynomial::from_terms(&f4, 1, [(vec![1], a)]).unwrap());
        assert_eq!(root.mul(&root).unwrap(), sq);
        // Exponent not divisible by p.
        let x = Polynomial::variable(&f4, 1, 0).unwrap();
        assert!(matches!(pth_power_root(&x), Err(Error::NotAPthPower)));
    }

    #[test]
    fn random_squares_are_never_squarefree() {
        let fields = [gf(2, 1), gf(3, 1), gf(2, 2)];
        let mut rng = ChaCha12Rng::seed_from_u64(0x50F7);
        for trial in 0..300 {
            let f = &fields[trial % fields.len()];
            let elems = f.enumerate().unwrap();
            let h = loop {
                let t: Vec<(Vec<u32>, _)> = (0..3)
                    .map(|_| {
                        (
                            vec![rng.gen_range(0..=2u32), rng.gen_range(0..=2u32)],
                            elems[rng.gen_range(0..elems.len())].clone(),
                        )
                    })
                    .collect();
                let p = Polynomial::from_terms(f, 2, t).unwrap();
                if p.total_degree().map_or(false, |d| d >= 1) {
                    break p;
                }
            };
            let sq = h.mul(&h).unwrap();
            let rep = is_squarefree(&sq).unwrap();
            assert!(!rep.squarefree);
            assert!(sq.is_divisible_by(&rep.obstruction.unwrap()).unwrap());
        }
    }
}
