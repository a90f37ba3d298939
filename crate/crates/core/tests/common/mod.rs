//! Strategies and property checks shared by the property tests and the
//! acceptance runner.
#![allow(dead_code)]

use hfknot::algebra::{rf_make, ExponentVector, FieldMatrix, LaurentPolynomial, RationalFunction};
use hfknot::cylinders::{compose, identity_cylinder, mapping_cylinder};
use hfknot::fox::{abelianize, fox_derivative, GeneratorRef, Letter, Word};
use hfknot::homology::{homological_monodromy, homology_classes};
use hfknot::invariants::{magnus_matrix, torsion_determinant};
use hfknot::{AdmissiblePresentation, FreeEndomorphism, HomologyAssignment, MonodromyMatrix};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

pub type CaseResult = Result<(), TestCaseError>;

/// Run `test` on `cases` inputs drawn from `strategy`.
pub fn run_property<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> CaseResult,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn laurent(
    nvars: usize,
    max_terms: usize,
    exp: i32,
    coeff: i64,
) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec(
        (-coeff..=coeff, prop::collection::vec(-exp..=exp, nvars)),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let mut p = LaurentPolynomial::zero(nvars);
        for (c, e) in terms {
            p.add_term(
                ExponentVector::from(e),
                &BigRational::from_integer(c.into()),
            );
        }
        p
    })
}

pub fn nonzero_laurent(nvars: usize, max_terms: usize) -> impl Strategy<Value = LaurentPolynomial> {
    laurent(nvars, max_terms, 2, 4).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc(nvars: usize) -> impl Strategy<Value = RationalFunction> {
    (laurent(nvars, 3, 2, 4), nonzero_laurent(nvars, 3))
        .prop_map(|(n, d)| rf_make(n, d).expect("nonzero denominator"))
}

fn rf_poly(p: &LaurentPolynomial) -> RationalFunction {
    RationalFunction::from_poly(p.clone())
}

/// `a == b` checked by cross multiplication, independent of canonical form.
fn same_fraction(a: &RationalFunction, b: &RationalFunction) -> bool {
    a.numerator() * b.denominator() == b.numerator() * a.denominator()
}

pub fn check_field_axioms(
    (a, b, c): (RationalFunction, RationalFunction, RationalFunction),
) -> CaseResult {
    let n = a.nvars();
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a + &(-&a)).is_zero());
    prop_assert_eq!(&a * &RationalFunction::one(n), a.clone());
    prop_assert_eq!(&(&a - &b) + &b, a.clone());
    if !a.is_zero() {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }
    // sums and products against the textbook formulas
    let sum = rf_make(
        &(a.numerator() * b.denominator()) + &(b.numerator() * a.denominator()),
        a.denominator() * b.denominator(),
    )
    .unwrap();
    prop_assert!(same_fraction(&(&a + &b), &sum));
    let prod = RationalFunction::from_poly(a.numerator() * b.numerator());
    let prod_den = RationalFunction::from_poly(a.denominator() * b.denominator());
    prop_assert!(same_fraction(&(&(&a * &b) * &prod_den), &prod));
    Ok(())
}

pub fn check_reduction(
    (n, d, h): (LaurentPolynomial, LaurentPolynomial, LaurentPolynomial),
) -> CaseResult {
    let f = rf_make(n.clone(), d.clone()).unwrap();
    let scaled = rf_make(&n * &h, &d * &h).unwrap();
    prop_assert_eq!(&scaled, &f);
    let again = rf_make(f.numerator().clone(), f.denominator().clone()).unwrap();
    prop_assert_eq!(&again, &f);
    prop_assert!(same_fraction(&f, &rf_make(n, d).unwrap()));
    Ok(())
}

pub fn reduction_inputs(
) -> impl Strategy<Value = (LaurentPolynomial, LaurentPolynomial, LaurentPolynomial)> {
    (
        laurent(3, 3, 2, 4),
        nonzero_laurent(3, 3),
        nonzero_laurent(3, 3),
    )
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(m: &FieldMatrix) -> RationalFunction {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = RationalFunction::zero(m.nvars());
    permute(&mut perm, 0, &mut |p| {
        let mut term = RationalFunction::one(m.nvars());
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[(i, j)];
        }
        if inversions(p) % 2 == 1 {
            term = -term;
        }
        total = &total + &term;
    });
    total
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn small_matrix() -> impl Strategy<Value = FieldMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(laurent(2, 3, 1, 3), n * n).prop_map(move |entries| {
            let rows = entries
                .chunks(n)
                .map(|r| r.iter().map(rf_poly).collect())
                .collect();
            FieldMatrix::from_rows(2, rows).unwrap()
        })
    })
}

pub fn check_det_oracle(m: FieldMatrix) -> CaseResult {
    prop_assert_eq!(m.det().unwrap(), leibniz_det(&m));
    Ok(())
}

/// Genus 1, two internal generators: six generators with arbitrary classes.
pub fn fox_setting() -> impl Strategy<Value = HomologyAssignment> {
    prop::collection::vec(prop::collection::vec(-2i32..=2, 2), 6).prop_map(|cs| {
        HomologyAssignment::from_classes(1, 2, cs.into_iter().map(ExponentVector::from).collect())
            .unwrap()
    })
}

pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..6, any::<bool>()), 0..=max_len).prop_map(|ls| {
        Word::new(
            ls.into_iter()
                .map(|(p, inv)| Letter::new(GeneratorRef::at_position(p, 1, 2), inv))
                .collect(),
        )
    })
}

fn mono(e: &ExponentVector) -> LaurentPolynomial {
    LaurentPolynomial::monomial(e.clone())
}

pub fn fox_inputs() -> impl Strategy<Value = (HomologyAssignment, Word, Word, usize, usize, bool)> {
    (
        fox_setting(),
        word(8),
        word(8),
        0usize..6,
        0usize..=8,
        any::<bool>(),
    )
}

/// Product rule, fundamental identity, inverse rule and insensitivity to an
/// inserted cancelling pair.
pub fn check_fox(
    (h, u, v, x, cut, inv): (HomologyAssignment, Word, Word, usize, usize, bool),
) -> CaseResult {
    let n = h.rank();
    let one = LaurentPolynomial::one(n);
    let gens: Vec<GeneratorRef> = (0..6).map(|p| GeneratorRef::at_position(p, 1, 2)).collect();
    let uv = u.concat(&v);
    for &g in &gens {
        let lhs = fox_derivative(&uv, g, &h);
        let rhs = &fox_derivative(&u, g, &h)
            + &(&mono(&-&abelianize(&u, &h)) * &fox_derivative(&v, g, &h));
        prop_assert_eq!(lhs, rhs);
        let inv_rule = -(&mono(&abelianize(&u, &h)) * &fox_derivative(&u, g, &h));
        prop_assert_eq!(fox_derivative(&u.inverse(), g, &h), inv_rule);
    }
    let mut total = LaurentPolynomial::zero(n);
    for &g in &gens {
        let factor = &mono(&-h.class(g)) - &one;
        total = &total + &(&fox_derivative(&uv, g, &h) * &factor);
    }
    prop_assert_eq!(total, &mono(&-&abelianize(&uv, &h)) - &one);

    let cut = cut.min(uv.len());
    let pair = Letter::new(gens[x], inv);
    let mut letters = uv.letters().to_vec();
    letters.splice(cut..cut, [pair, pair.inverted()]);
    let padded = Word::new(letters);
    for &g in &gens {
        prop_assert_eq!(fox_derivative(&padded, g, &h), fox_derivative(&uv, g, &h));
    }
    Ok(())
}

/// Random endomorphisms with unimodular abelianization, built from Nielsen
/// moves and commutator insertions.
pub fn endomorphism(genus: usize, max_moves: usize) -> impl Strategy<Value = FreeEndomorphism> {
    let n = 2 * genus;
    prop::collection::vec((0u8..5, 0..n, 0..n, any::<bool>()), 0..=max_moves).prop_map(
        move |moves| {
            let mut phi = FreeEndomorphism::identity(genus);
            for (kind, i, j, inv) in moves {
                let j = if i == j { (j + 1) % n } else { j };
                let (a, b) = (i as i32 + 1, j as i32 + 1);
                let s = if inv { -1 } else { 1 };
                let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|k| vec![k]).collect();
                match kind {
                    0 => images[i] = vec![a, s * b],
                    1 => images[i] = vec![s * b, a],
                    2 => images[i] = vec![-a],
                    3 => images.swap(i, j),
                    _ => images[i] = vec![a, b, a, -b, -a],
                }
                let e =
                    FreeEndomorphism::new(genus, images).expect("elementary move is unimodular");
                phi = phi.compose(&e).unwrap();
            }
            phi
        },
    )
}

pub struct CylinderInvariants {
    pub monodromy: MonodromyMatrix,
    pub magnus: FieldMatrix,
    pub torsion_normal: LaurentPolynomial,
}

pub fn cylinder_invariants(p: &AdmissiblePresentation) -> CylinderInvariants {
    CylinderInvariants {
        monodromy: homological_monodromy(&homology_classes(p).unwrap()).unwrap(),
        magnus: magnus_matrix(p).unwrap(),
        torsion_normal: torsion_determinant(p).unwrap().normal().clone(),
    }
}

pub fn assert_same_invariants(a: &CylinderInvariants, b: &CylinderInvariants) -> CaseResult {
    prop_assert_eq!(&a.monodromy, &b.monodromy);
    prop_assert_eq!(&a.magnus, &b.magnus);
    prop_assert_eq!(&a.torsion_normal, &b.torsion_normal);
    Ok(())
}

pub fn cylinder_pair() -> impl Strategy<Value = (FreeEndomorphism, FreeEndomorphism)> {
    (1usize..=2).prop_flat_map(|g| (endomorphism(g, 3), endomorphism(g, 3)))
}

/// Unit laws and multiplicativity of the monodromy under stacking.
pub fn check_monoid((phi, psi): (FreeEndomorphism, FreeEndomorphism)) -> CaseResult {
    let g = phi.genus();
    let id = identity_cylinder(g).unwrap();
    let mp = mapping_cylinder(&phi).unwrap();
    let mq = mapping_cylinder(&psi).unwrap();
    let base = cylinder_invariants(&mp);
    prop_assert_eq!(&base.monodromy, &phi.abelianization());
    prop_assert_eq!(&base.magnus, &phi.fox_jacobian());
    assert_same_invariants(&cylinder_invariants(&compose(&id, &mp).unwrap()), &base)?;
    assert_same_invariants(&cylinder_invariants(&compose(&mp, &id).unwrap()), &base)?;
    let pq = compose(&mp, &mq).unwrap();
    let sigma = homological_monodromy(&homology_classes(&pq).unwrap()).unwrap();
    prop_assert_eq!(sigma, phi.abelianization().mul(&psi.abelianization()));
    Ok(())
}
