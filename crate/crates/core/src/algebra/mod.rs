//! Exact arithmetic: sparse Laurent polynomials over the rationals, their
//! gcd, the reduced fraction field, and linear algebra over it.

mod gcd;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod ratfunc;

pub use gcd::{normalize_associate, poly_gcd};
pub use matrix::{mat_det, mat_inverse, FieldMatrix};
pub use monomial::ExponentVector;
pub use parse::{parse_expr, parse_expr_with};
pub use poly::{poly_op, Coeff, LaurentPolynomial, Poly, PolyOp};
pub use ratfunc::{rational_constant, rf_make, specialize, RationalFunction};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Variable names `g1 .. gn` used in all textual output.
pub fn variable_names(nvars: usize) -> Vec<String> {
    poly::default_names(nvars)
}
