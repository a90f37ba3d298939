//! Multivariate polynomial gcd over the integers.
//!
//! Recursive: strip monomial and integer content, view both inputs as
//! univariate in the highest-index variable present, split off the content
//! in the remaining variables (computed recursively) and run a subresultant
//! remainder sequence on the primitive parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::monomial::ExponentVector;
use super::poly::{IntPoly, LaurentPolynomial};
use crate::error::{Error, Result};

/// Greatest common divisor in the Laurent ring `Q[g1^±1, ..., gn^±1]`.
///
/// The result has minimal exponent 0 in every variable, integer content 1
/// and a positive lex-leading coefficient.
pub fn poly_gcd(a: &LaurentPolynomial, b: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension(format!(
            "gcd of polynomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::ZeroGcd),
        (true, false) => return Ok(normalize_associate(b)),
        (false, true) => return Ok(normalize_associate(a)),
        _ => {}
    }
    let (ai, _) = a.strip_monomial().0.to_primitive_int();
    let (bi, _) = b.strip_monomial().0.to_primitive_int();
    let g = gcd_int(&ai, &bi);
    Ok(normalize_associate(&g.to_rational()))
}

/// The canonical associate of `p` under the units `q * g^e` (q rational):
/// minimal exponent 0, coprime integer coefficients, positive lex-leading
/// coefficient.
pub fn normalize_associate(p: &LaurentPolynomial) -> LaurentPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let (ip, _) = p.strip_monomial().0.to_primitive_int();
    positive_leading(ip).to_rational()
}

fn positive_leading(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

fn div_int_content(p: &IntPoly, c: &BigInt) -> IntPoly {
    if c.is_one() {
        p.clone()
    } else {
        p.map_coeffs(|a| a / c)
    }
}

/// gcd of two integer polynomials with nonnegative exponents, normalized to a
/// positive lex-leading coefficient.
pub(crate) fn gcd_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return positive_leading(b.clone());
    }
    if b.is_zero() {
        return positive_leading(a.clone());
    }
    let (a1, ma) = a.strip_monomial();
    let (b1, mb) = b.strip_monomial();
    let common = ma.meet(&mb);
    let ca = a1.int_content();
    let cb = b1.int_content();
    let g = ca.gcd(&cb);
    let a1 = div_int_content(&a1, &ca);
    let b1 = div_int_content(&b1, &cb);
    let core = gcd_primitive(&a1, &b1);
    positive_leading(core.mul_term(&common, &g))
}

fn main_variable(p: &IntPoly) -> Option<usize> {
    p.terms().filter_map(|(e, _)| e.main_variable()).max()
}

/// Both inputs nonzero, integer-primitive, with minimal exponent 0.
fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return IntPoly::one(n);
    }
    if a == b || *a == -b {
        return positive_leading(a.clone());
    }
    let v = main_variable(a)
        .max(main_variable(b))
        .expect("non-constant input");
    let da = a.degree_in(v).unwrap_or(0);
    let db = b.degree_in(v).unwrap_or(0);
    if da == 0 {
        return gcd_int(a, &content_in(b, v));
    }
    if db == 0 {
        return gcd_int(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact_nonneg(&ca).expect("content divides");
    let pb = b.div_exact_nonneg(&cb).expect("content divides");
    let cg = gcd_int(&ca, &cb);

    let (small, large) = if db <= da { (&pb, &pa) } else { (&pa, &pb) };
    let pp = if large.div_exact_nonneg(small).is_some() {
        small.clone()
    } else {
        subresultant_gcd(to_univariate(&pa, v), to_univariate(&pb, v), v, n)
    };
    positive_leading(&cg * &pp)
}

/// gcd of the coefficients of `p` viewed as a polynomial in variable `v`,
/// up to an integer factor: a constant gcd is reported as 1.
fn content_in(p: &IntPoly, v: usize) -> IntPoly {
    let coeffs = to_univariate(p, v);
    let mut it = coeffs.into_iter().filter(|c| !c.is_zero());
    let mut g = it.next().expect("nonzero polynomial");
    for c in it {
        if g.is_constant() {
            break;
        }
        g = gcd_int(&g, &c);
    }
    if g.is_constant() {
        return IntPoly::one(p.nvars());
    }
    let ic = g.int_content();
    positive_leading(div_int_content(&g, &ic))
}

/// Coefficients in variable `v`, indexed by degree; the coefficients have
/// exponent 0 in `v`.
fn to_univariate(p: &IntPoly, v: usize) -> Vec<IntPoly> {
    let n = p.nvars();
    let deg = p.degree_in(v).unwrap_or(0).max(0) as usize;
    let mut out = vec![IntPoly::zero(n); deg + 1];
    for (e, c) in p.terms() {
        let k = e.get(v) as usize;
        let mut e0 = e.clone();
        e0.set(v, 0);
        out[k].add_term(e0, c);
    }
    trim(&mut out);
    out
}

fn from_univariate(cs: &[IntPoly], v: usize, n: usize) -> IntPoly {
    let mut out = IntPoly::zero(n);
    for (k, c) in cs.iter().enumerate() {
        let mut shift = ExponentVector::zero(n);
        shift.set(v, k as i32);
        out = &out + &c.shift(&shift);
    }
    out
}

fn trim(p: &mut Vec<IntPoly>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn udeg(p: &[IntPoly]) -> usize {
    p.len() - 1
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    let db = udeg(b);
    let lb = b.last().unwrap();
    let mut r: Vec<IntPoly> = a.to_vec();
    let mut e = udeg(a) as i64 - db as i64 + 1;
    while !r.is_empty() && udeg(&r) >= db {
        let lr = r.last().unwrap().clone();
        let shift = udeg(&r) - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[k + shift] = &r[k + shift] - &t;
        }
        debug_assert!(r.last().unwrap().is_zero());
        trim(&mut r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Primitive gcd of two primitive univariate polynomials over
/// `Z[other variables]` via the subresultant PRS.
fn subresultant_gcd(a: Vec<IntPoly>, b: Vec<IntPoly>, v: usize, n: usize) -> IntPoly {
    let (mut a, mut b) = if udeg(&a) >= udeg(&b) { (a, b) } else { (b, a) };
    let mut g = IntPoly::one(n);
    let mut h = IntPoly::one(n);
    loop {
        let delta = (udeg(&a) - udeg(&b)) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            break;
        }
        if udeg(&r) == 0 {
            return IntPoly::one(n);
        }
        let divisor = &g * &h.pow(delta);
        a = std::mem::replace(
            &mut b,
            r.iter()
                .map(|c| {
                    c.div_exact_nonneg(&divisor)
                        .expect("subresultant division is exact")
                })
                .collect(),
        );
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact_nonneg(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
    let full = from_univariate(&b, v, n);
    let cont = content_in(&full, v);
    let pp = full.div_exact_nonneg(&cont).expect("content divides");
    let ic = pp.int_content();
    positive_leading(div_int_content(&pp, &ic))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, terms: &[(i64, &[i32])]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(n, terms)
    }

    #[test]
    fn monomials_are_units() {
        let a = p(1, &[(1, &[2])]);
        let b = p(1, &[(1, &[3])]);
        assert!(poly_gcd(&a, &b).unwrap().is_one());
    }

    #[test]
    fn common_linear_factor() {
        let a = p(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let b = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        // normalized: positive lex-leading coefficient (g2 dominates)
        let want = p(2, &[(-1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), want);
    }

    #[test]
    fn both_zero_is_an_error() {
        let z = LaurentPolynomial::zero(2);
        assert_eq!(poly_gcd(&z, &z), Err(Error::ZeroGcd));
    }

    #[test]
    fn gcd_with_zero_is_associate() {
        let a = p(2, &[(-4, &[1, 3]), (6, &[0, 1])]);
        let z = LaurentPolynomial::zero(2);
        let want = p(2, &[(-3, &[0, 0]), (2, &[1, 2])]);
        assert_eq!(poly_gcd(&a, &z).unwrap(), want);
    }

    #[test]
    fn coprime_inputs() {
        let a = p(2, &[(1, &[1, 0]), (1, &[0, 0])]);
        let b = p(2, &[(1, &[0, 1]), (1, &[0, 0])]);
        assert!(poly_gcd(&a, &b).unwrap().is_one());
    }

    #[test]
    fn gcd_in_three_variables() {
        // h = 1 + g1*g3 - g2^2, f = g1 + g2, g = g3 - 2
        let h = p(3, &[(1, &[0, 0, 0]), (1, &[1, 0, 1]), (-1, &[0, 2, 0])]);
        let f = p(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])]);
        let g = p(3, &[(1, &[0, 0, 1]), (-2, &[0, 0, 0])]);
        let got = poly_gcd(&(&f * &h), &(&g * &h)).unwrap();
        assert_eq!(got, normalize_associate(&h));
    }

    #[test]
    fn non_monic_univariate() {
        // (2x + 3)(x^2 + 1) and (2x + 3)(3x - 1)
        let h = p(1, &[(2, &[1]), (3, &[0])]);
        let f = p(1, &[(1, &[2]), (1, &[0])]);
        let g = p(1, &[(3, &[1]), (-1, &[0])]);
        assert_eq!(poly_gcd(&(&f * &h), &(&g * &h)).unwrap(), h);
    }
}
