use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::gcd::poly_gcd;
use super::monomial::ExponentVector;
use super::poly::{default_names, LaurentPolynomial};
use crate::error::{Error, Result};

/// Reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator coprime; the denominator has
/// minimal exponent 0 in every variable, coprime integer coefficients and a
/// positive lex-leading coefficient. Since the form is unique, structural
/// equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

/// Build the reduced, canonically scaled fraction `n / d`.
pub fn rf_make(n: LaurentPolynomial, d: LaurentPolynomial) -> Result<RationalFunction> {
    if n.nvars() != d.nvars() {
        return Err(Error::Dimension(format!(
            "fraction of polynomials in {} and {} variables",
            n.nvars(),
            d.nvars()
        )));
    }
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(RationalFunction::reduce(n, d))
}

impl RationalFunction {
    pub fn zero(nvars: usize) -> Self {
        RationalFunction {
            num: LaurentPolynomial::zero(nvars),
            den: LaurentPolynomial::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPolynomial::one(nvars))
    }

    pub fn from_int(nvars: usize, n: i64) -> Self {
        Self::from_poly(LaurentPolynomial::from_int(nvars, n))
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        let nvars = p.nvars();
        RationalFunction {
            num: p,
            den: LaurentPolynomial::one(nvars),
        }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Denominator is 1, i.e. the value lies in the Laurent ring.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&LaurentPolynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Term count of numerator plus denominator; the pivot weight.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// Reduce an arbitrary fraction; `d` must be nonzero.
    fn reduce(n: LaurentPolynomial, d: LaurentPolynomial) -> Self {
        debug_assert!(!d.is_zero());
        if n.is_zero() {
            return Self::zero(n.nvars());
        }
        if d.is_monomial() {
            return Self::from_poly(n.div_exact(&d).expect("monomials are units"));
        }
        let g = poly_gcd(&n, &d).expect("nonzero denominator");
        if g.is_one() {
            Self::canonical(n, d)
        } else {
            let n = n.div_exact(&g).expect("gcd divides numerator");
            let d = d.div_exact(&g).expect("gcd divides denominator");
            Self::canonical(n, d)
        }
    }

    /// Scale a coprime pair into canonical form.
    fn canonical(n: LaurentPolynomial, d: LaurentPolynomial) -> Self {
        let (d0, m) = d.strip_monomial();
        let n = n.shift(&-&m);
        let (_, mut s) = d0.to_primitive_int();
        if d0.leading().unwrap().1.is_negative() {
            s = -s;
        }
        if s.is_one() {
            return RationalFunction { num: n, den: d0 };
        }
        let inv = s.recip();
        RationalFunction {
            num: n.scale(&inv),
            den: d0.scale(&inv),
        }
    }

    /// Assemble from parts already known to be coprime.
    fn from_coprime(n: LaurentPolynomial, d: LaurentPolynomial) -> Self {
        if n.is_zero() {
            return Self::zero(n.nvars());
        }
        if d.is_monomial() {
            return Self::from_poly(n.div_exact(&d).expect("monomials are units"));
        }
        Self::canonical(n, d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self::from_coprime(base.num.pow(e), base.den.pow(e)))
    }

    /// Ring-homomorphic substitution `g_j -> images[j]`, where every image
    /// is a nonzero monomial, possibly in a different set of variables.
    pub fn specialize(&self, images: &[LaurentPolynomial]) -> Result<Self> {
        let num = substitute_monomials(&self.num, images)?;
        let den = substitute_monomials(&self.den, images)?;
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(Self::reduce(num, den))
    }

    /// Human-readable form with the given variable names.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.to_text(names)
        } else {
            format!(
                "({}) / ({})",
                self.num.to_text(names),
                self.den.to_text(names)
            )
        }
    }
}

/// See [`RationalFunction::specialize`].
pub fn specialize(f: &RationalFunction, images: &[LaurentPolynomial]) -> Result<RationalFunction> {
    f.specialize(images)
}

fn substitute_monomials(
    p: &LaurentPolynomial,
    images: &[LaurentPolynomial],
) -> Result<LaurentPolynomial> {
    if images.len() != p.nvars() {
        return Err(Error::Substitution(format!(
            "{} images for {} variables",
            images.len(),
            p.nvars()
        )));
    }
    let target = match images.first() {
        Some(img) => img.nvars(),
        None => 0,
    };
    let mut parts: Vec<(ExponentVector, BigRational)> = Vec::with_capacity(images.len());
    for (j, img) in images.iter().enumerate() {
        if img.nvars() != target {
            return Err(Error::Substitution("images live in different rings".into()));
        }
        let (e, c) = img.leading().filter(|_| img.is_monomial()).ok_or_else(|| {
            Error::Substitution(format!(
                "image of variable {} is not a nonzero monomial",
                j + 1
            ))
        })?;
        parts.push((e.clone(), c.clone()));
    }
    let mut out = LaurentPolynomial::zero(target);
    for (e, c) in p.terms() {
        let mut exp = ExponentVector::zero(target);
        let mut coeff = c.clone();
        for (j, k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            exp += &parts[j].0.scaled(k);
            coeff *= rational_pow(&parts[j].1, k);
        }
        out.add_term(exp, &coeff);
    }
    Ok(out)
}

fn rational_pow(c: &BigRational, k: i32) -> BigRational {
    num_traits::pow::Pow::pow(c, k)
}

impl<'a> Add<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if self.den.is_one() {
                return RationalFunction::from_poly(n);
            }
            return RationalFunction::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            let n = &(&self.num * &rhs.den) + &rhs.num;
            return RationalFunction::from_coprime(n, rhs.den.clone());
        }
        if rhs.den.is_one() {
            let n = &self.num + &(&rhs.num * &self.den);
            return RationalFunction::from_coprime(n, self.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den).expect("nonzero denominators");
        let (b, d) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let n = &(&self.num * &d) + &(&rhs.num * &b);
        let den = &self.den * &d;
        if g.is_one() {
            // b, d coprime: gcd(n, b*d) = 1 already
            RationalFunction::from_coprime(n, den)
        } else {
            RationalFunction::reduce(n, den)
        }
    }
}

impl<'a> Sub<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel: (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b)
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RationalFunction::from_coprime(&a * &c, &b * &d)
    }
}

fn cancel(n: &LaurentPolynomial, d: &LaurentPolynomial) -> (LaurentPolynomial, LaurentPolynomial) {
    if d.is_one() || n.is_monomial() || d.is_monomial() {
        return (n.clone(), d.clone());
    }
    let g = poly_gcd(n, d).expect("nonzero");
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_names(self.nvars())))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// The rational number `n / d` as a constant.
pub fn rational_constant(nvars: usize, n: i64, d: i64) -> RationalFunction {
    RationalFunction::from_poly(LaurentPolynomial::constant(
        nvars,
        BigRational::new(BigInt::from(n), BigInt::from(d)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, terms: &[(i64, &[i32])]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(n, terms)
    }

    #[test]
    fn cancellation() {
        let n = p(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let d = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let f = rf_make(n, d).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &p(2, &[(1, &[1, 0]), (1, &[0, 1])]));
    }

    #[test]
    fn zero_over_anything() {
        let d = p(2, &[(1, &[1, 0]), (3, &[0, 1])]);
        let f = rf_make(LaurentPolynomial::zero(2), d).unwrap();
        assert!(f.is_zero());
        assert!(f.denominator().is_one());
    }

    #[test]
    fn zero_denominator() {
        let n = LaurentPolynomial::one(1);
        assert_eq!(
            rf_make(n, LaurentPolynomial::zero(1)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn already_reduced_is_unchanged() {
        // g4 / (1 + g2 - g2 g4)
        let n = p(4, &[(1, &[0, 0, 0, 1])]);
        let d = p(
            4,
            &[(1, &[0, 0, 0, 0]), (1, &[0, 1, 0, 0]), (-1, &[0, 1, 0, 1])],
        );
        let f = rf_make(n.clone(), d.clone()).unwrap();
        // canonical denominator has a positive lex-leading coefficient
        assert_eq!(f.numerator(), &-&n);
        assert_eq!(f.denominator(), &-&d);
        assert_eq!(f.to_string(), "(-1*g4^1) / (-1 - 1*g2^1 + 1*g2^1*g4^1)");
    }

    #[test]
    fn denominator_scaling() {
        // (1) / (2 g1 + 4 g1^2) -> (1/2 g1^-1) / (1 + 2 g1)
        let f = rf_make(p(1, &[(1, &[0])]), p(1, &[(2, &[1]), (4, &[2])])).unwrap();
        assert_eq!(f.denominator(), &p(1, &[(1, &[0]), (2, &[1])]));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            f.numerator(),
            &LaurentPolynomial::term(ExponentVector::from_slice(&[-1]), half)
        );
    }

    #[test]
    fn specialize_to_one() {
        let n = p(4, &[(1, &[0, 0, 0, 1])]);
        let d = p(
            4,
            &[(1, &[0, 0, 0, 0]), (1, &[0, 1, 0, 0]), (-1, &[0, 1, 0, 1])],
        );
        let f = rf_make(n, d).unwrap();
        let ones = vec![LaurentPolynomial::one(0); 4];
        assert!(f.specialize(&ones).unwrap().is_one());
    }

    #[test]
    fn specialize_monomial_map() {
        let f = RationalFunction::from_poly(p(2, &[(1, &[1, -1])]));
        let images = [p(1, &[(1, &[2])]), p(1, &[(1, &[1])])];
        assert_eq!(
            f.specialize(&images).unwrap(),
            RationalFunction::from_poly(p(1, &[(1, &[1])]))
        );
    }

    #[test]
    fn specialize_pole() {
        let f = rf_make(p(1, &[(1, &[0])]), p(1, &[(1, &[0]), (-1, &[1])])).unwrap();
        let images = [LaurentPolynomial::one(0)];
        assert_eq!(f.specialize(&images), Err(Error::Pole));
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = rf_make(p(2, &[(1, &[1, 0])]), p(2, &[(1, &[0, 0]), (1, &[0, 1])])).unwrap();
        let b = rf_make(p(2, &[(2, &[0, 0])]), p(2, &[(1, &[1, 0]), (-1, &[0, 0])])).unwrap();
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        let q = s.checked_div(&a).unwrap();
        assert_eq!(&q * &a, s);
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(a.pow(-2).unwrap(), a.inv().unwrap().pow(2).unwrap());
    }
}
