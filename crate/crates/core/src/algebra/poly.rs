use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::ExponentVector;
use crate::error::{Error, Result};

/// Coefficient ring of a [`Poly`].
///
/// Arithmetic goes through references so that big-integer coefficients are
/// not cloned on every operation.
pub trait Coeff: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `Some(self / rhs)` when the quotient exists in the ring.
    fn try_div(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! coeff_impl {
    ($t:ty) => {
        fn zero() -> Self {
            <$t as Zero>::zero()
        }
        fn one() -> Self {
            <$t as One>::one()
        }
        fn is_zero(&self) -> bool {
            Zero::is_zero(self)
        }
        fn is_one(&self) -> bool {
            One::is_one(self)
        }
        fn is_negative(&self) -> bool {
            Signed::is_negative(self)
        }
        fn add_ref(&self, rhs: &Self) -> Self {
            self + rhs
        }
        fn sub_ref(&self, rhs: &Self) -> Self {
            self - rhs
        }
        fn mul_ref(&self, rhs: &Self) -> Self {
            self * rhs
        }
        fn neg_ref(&self) -> Self {
            -self
        }
    };
}

impl Coeff for BigInt {
    coeff_impl!(BigInt);

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Coeff for BigRational {
    coeff_impl!(BigRational);

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

/// Sparse multivariate Laurent polynomial.
///
/// Terms are kept in a map keyed by [`ExponentVector`]; zero coefficients are
/// never stored, so the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, C>,
}

/// Laurent polynomial over the rationals.
pub type LaurentPolynomial = Poly<BigRational>;

/// Integer polynomials; used internally by the gcd.
pub(crate) type IntPoly = Poly<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation on two polynomials over the same variables.
pub fn poly_op<C: Coeff>(a: &Poly<C>, b: &Poly<C>, kind: PolyOp) -> Result<Poly<C>> {
    if a.nvars != b.nvars {
        return Err(Error::Dimension(format!(
            "polynomials in {} and {} variables",
            a.nvars, b.nvars
        )));
    }
    Ok(match kind {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    })
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::term(ExponentVector::zero(nvars), c)
    }

    pub fn term(exp: ExponentVector, c: C) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    /// The monomial `g^exp` with coefficient 1.
    pub fn monomial(exp: ExponentVector) -> Self {
        Self::term(exp, C::one())
    }

    /// The `j`-th variable, 0-based.
    pub fn variable(nvars: usize, j: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, j))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExponentVector, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().is_zero(),
            _ => false,
        }
    }

    /// A single term `c * g^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `±g^e`: the units of the Laurent ring with integer coefficients.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && {
            let c = self.terms.values().next().unwrap();
            c.is_one() || c.neg_ref().is_one()
        }
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> Option<&C> {
        self.terms.get(exp)
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(&ExponentVector, &C)> {
        self.terms.iter().next_back()
    }

    /// Lex-smallest term.
    pub fn trailing(&self) -> Option<(&ExponentVector, &C)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, exp: ExponentVector, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add_ref(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    /// Multiply by `g^shift`; free in the Laurent ring.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        if shift.is_zero() {
            return self.clone();
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, exp: &ExponentVector, c: &C) -> Self {
        self.shift(exp).scale(c)
    }

    /// Componentwise minimal exponent over all terms.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |m, e| m.meet(e)))
    }

    /// Shift so that every variable has minimal exponent 0. Returns the
    /// shifted polynomial and the exponent that was divided out.
    pub fn strip_monomial(&self) -> (Self, ExponentVector) {
        match self.min_exponents() {
            Some(m) => (self.shift(&-&m), m),
            None => (self.clone(), ExponentVector::zero(self.nvars)),
        }
    }

    pub fn degree_in(&self, v: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.get(v)).max()
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> Poly<D> {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), &f(c));
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division of polynomials with nonnegative exponents, by repeated
    /// cancellation of lex-leading terms.
    pub(crate) fn div_exact_nonneg(&self, divisor: &Self) -> Option<Self> {
        let (lexp, lc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            let e = re - lexp;
            if !e.is_nonnegative() {
                return None;
            }
            let c = rc.try_div(lc)?;
            rem = &rem - &divisor.mul_term(&e, &c);
            quot.add_term(e, &c);
        }
        Some(quot)
    }

    /// Exact division in the Laurent ring; `None` if `divisor` does not
    /// divide `self` (or is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if divisor.is_monomial() {
            let (e, c) = divisor.leading().unwrap();
            let mut out = Self::zero(self.nvars);
            for (te, tc) in &self.terms {
                out.add_term(te - e, &tc.try_div(c)?);
            }
            return Some(out);
        }
        let (a, ma) = self.strip_monomial();
        let (b, mb) = divisor.strip_monomial();
        let q = a.div_exact_nonneg(&b)?;
        Some(q.shift(&(&ma - &mb)))
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &c.neg_ref());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &ca.mul_ref(cb));
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl LaurentPolynomial {
    pub fn from_int(nvars: usize, n: i64) -> Self {
        Self::constant(nvars, BigRational::from_i64(n))
    }

    /// Build from `(coefficient, exponents)` pairs with small integer
    /// coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[i32])]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (ExponentVector::from_slice(e), BigRational::from_i64(*c))),
        )
    }

    /// Canonical text: terms in ascending lex order, each written as
    /// `c*g1^e1*g3^e3` with zero exponents omitted; a constant term is just
    /// `c`; the zero polynomial is `0`.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = Signed::is_negative(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&c.abs().to_string());
            for (j, k) in e.iter().enumerate() {
                if k != 0 {
                    out.push_str(&format!("*{}^{}", names[j], k));
                }
            }
        }
        out
    }

    /// Integer-coefficient multiple with coprime coefficients, and the
    /// positive rational factor `s` with `self = s * result`.
    pub(crate) fn to_primitive_int(&self) -> (IntPoly, BigRational) {
        let den_lcm = self
            .terms
            .values()
            .fold(<BigInt as One>::one(), |acc, c| acc.lcm(c.denom()));
        let ints =
            self.map_coeffs(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer());
        let content = ints.int_content();
        if Zero::is_zero(&content) {
            return (ints, <BigRational as One>::one());
        }
        let prim = ints.map_coeffs(|c| c / &content);
        (prim, BigRational::new(content, den_lcm))
    }
}

impl IntPoly {
    pub(crate) fn to_rational(&self) -> LaurentPolynomial {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// gcd of the integer coefficients (nonnegative).
    pub(crate) fn int_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(<BigInt as Zero>::zero(), |acc, c| acc.gcd(c))
    }
}

pub(crate) fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|j| format!("g{j}")).collect()
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_names(self.nvars)))
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, terms: &[(i64, &[i32])]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(n, terms)
    }

    #[test]
    fn additive_cancellation() {
        let a = p(2, &[(1, &[1, 0]), (1, &[0, 0])]);
        let b = p(2, &[(-1, &[0, 0])]);
        assert_eq!(poly_op(&a, &b, PolyOp::Add).unwrap(), p(2, &[(1, &[1, 0])]));
    }

    #[test]
    fn difference_of_squares() {
        let a = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = p(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let want = p(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(poly_op(&a, &b, PolyOp::Mul).unwrap(), want);
    }

    #[test]
    fn multiply_by_inverse_monomial() {
        // (1 + g2 - g2*g4) * g2^-1 expanded by hand: g2^-1 + 1 - g4
        let a = p(
            4,
            &[(1, &[0, 0, 0, 0]), (1, &[0, 1, 0, 0]), (-1, &[0, 1, 0, 1])],
        );
        let b = p(4, &[(1, &[0, -1, 0, 0])]);
        let want = p(
            4,
            &[(1, &[0, -1, 0, 0]), (1, &[0, 0, 0, 0]), (-1, &[0, 0, 0, 1])],
        );
        assert_eq!(poly_op(&a, &b, PolyOp::Mul).unwrap(), want);
    }

    #[test]
    fn variable_count_mismatch() {
        let a = LaurentPolynomial::one(2);
        let b = LaurentPolynomial::one(3);
        assert!(matches!(
            poly_op(&a, &b, PolyOp::Sub),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn canonical_text() {
        let a = p(
            4,
            &[(1, &[0, 0, 0, 0]), (1, &[0, 1, 0, 0]), (-1, &[0, 1, 0, 1])],
        );
        assert_eq!(a.to_string(), "1 + 1*g2^1 - 1*g2^1*g4^1");
        let b = p(2, &[(-3, &[-1, 2])]);
        assert_eq!(b.to_string(), "-3*g1^-1*g2^2");
        assert_eq!(LaurentPolynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        let b = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(
            a.div_exact(&b).unwrap(),
            p(2, &[(1, &[1, 0]), (1, &[0, 1])])
        );
        let c = p(2, &[(1, &[1, 0]), (1, &[0, 0])]);
        assert!(a.div_exact(&c).is_none());
        // Laurent shifts on both sides.
        let a2 = a.shift(&ExponentVector::from_slice(&[-3, 1]));
        let b2 = b.shift(&ExponentVector::from_slice(&[2, -2]));
        let q = a2.div_exact(&b2).unwrap();
        assert_eq!(&q * &b2, a2);
    }

    #[test]
    fn primitive_int_part() {
        let a = LaurentPolynomial::from_terms(
            1,
            [
                (
                    ExponentVector::from_slice(&[0]),
                    BigRational::new(2.into(), 3.into()),
                ),
                (
                    ExponentVector::from_slice(&[1]),
                    BigRational::new(4.into(), 5.into()),
                ),
            ],
        );
        let (ip, s) = a.to_primitive_int();
        assert_eq!(ip.int_content(), BigInt::from(1));
        assert_eq!(ip.to_rational().scale(&s), a);
    }
}
