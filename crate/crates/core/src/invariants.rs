//! Torsion matrix and determinant, Magnus matrix, Alexander polynomial and
//! the fibering obstructions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{ExponentVector, FieldMatrix, LaurentPolynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::fox::{fox_derivative, AdmissiblePresentation, GeneratorRef};
use crate::homology::{
    homological_monodromy, homology_classes, HomologyAssignment, MonodromyMatrix,
};

/// Involuted Fox Jacobian split by generator class. Rows are generators,
/// columns are relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianBlocks {
    /// `2g × (2g+l)`, Minus generators.
    pub a: FieldMatrix,
    /// `l × (2g+l)`, Internal generators.
    pub b: FieldMatrix,
    /// `2g × (2g+l)`, Plus generators.
    pub c: FieldMatrix,
}

impl JacobianBlocks {
    /// The square matrix `(A; B)`.
    pub fn torsion_matrix(&self) -> FieldMatrix {
        self.a.vstack(&self.b).expect("blocks share column count")
    }
}

pub fn assemble_blocks(p: &AdmissiblePresentation, h: &HomologyAssignment) -> JacobianBlocks {
    let n = p.rank();
    let block = |gens: Vec<GeneratorRef>| {
        let rows = gens
            .iter()
            .map(|&x| {
                p.relations()
                    .iter()
                    .map(|r| RationalFunction::from_poly(fox_derivative(r, x, h)))
                    .collect()
            })
            .collect();
        FieldMatrix::from_rows(n, rows).expect("rectangular by construction")
    };
    let cols = p.relations().len();
    let sized = |m: FieldMatrix, rows: usize| {
        if rows == 0 {
            FieldMatrix::zeros(0, cols, n)
        } else {
            m
        }
    };
    let g2 = p.rank();
    let l = p.internal_count();
    JacobianBlocks {
        a: block((1..=g2).map(GeneratorRef::minus).collect()),
        b: sized(block((1..=l).map(GeneratorRef::internal).collect()), l),
        c: block((1..=g2).map(GeneratorRef::plus).collect()),
    }
}

/// `(A; B)` for `p`, rows Minus then Internal, columns by relation.
pub fn torsion_matrix(p: &AdmissiblePresentation) -> Result<FieldMatrix> {
    let h = homology_classes(p)?;
    Ok(assemble_blocks(p, &h).torsion_matrix())
}

/// A nonzero Laurent polynomial written as `±γ^e · normal`, where `normal`
/// has minimal exponent 0 in every variable and a positive coefficient on its
/// lex-smallest monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedLaurent {
    negative: bool,
    shift: ExponentVector,
    normal: LaurentPolynomial,
}

impl NormalizedLaurent {
    /// `None` for the zero polynomial.
    pub fn new(p: &LaurentPolynomial) -> Option<Self> {
        if p.is_zero() {
            return None;
        }
        let (normal, shift) = p.strip_monomial();
        let negative = normal.trailing().expect("nonzero").1.is_negative();
        let normal = if negative { -normal } else { normal };
        Some(NormalizedLaurent {
            negative,
            shift,
            normal,
        })
    }

    pub fn normal(&self) -> &LaurentPolynomial {
        &self.normal
    }

    /// The unit `±γ^e`.
    pub fn unit(&self) -> LaurentPolynomial {
        let c = if self.negative {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        LaurentPolynomial::term(self.shift.clone(), c)
    }

    pub fn unit_sign(&self) -> i32 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn unit_exponent(&self) -> &ExponentVector {
        &self.shift
    }

    /// `unit · normal`, the original polynomial.
    pub fn raw(&self) -> LaurentPolynomial {
        let c = if self.negative {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        self.normal.mul_term(&self.shift, &c)
    }

    /// The normal part is 1, i.e. the polynomial is a unit.
    pub fn is_trivial(&self) -> bool {
        self.normal.is_one()
    }
}

/// `det(A; B)`, split into unit and normal part.
pub fn torsion_determinant(p: &AdmissiblePresentation) -> Result<NormalizedLaurent> {
    determinant_of(&torsion_matrix(p)?)
}

fn determinant_of(t: &FieldMatrix) -> Result<NormalizedLaurent> {
    let d = t.det()?;
    let poly = d.as_polynomial().ok_or_else(|| {
        Error::NotHomologyCylinder(format!(
            "torsion determinant {d} is not a Laurent polynomial"
        ))
    })?;
    NormalizedLaurent::new(poly)
        .ok_or_else(|| Error::NotHomologyCylinder("torsion matrix is singular".into()))
}

/// `r = -C · (A; B)⁻¹ · (I_2g; 0)`.
pub fn magnus_matrix(p: &AdmissiblePresentation) -> Result<FieldMatrix> {
    let h = homology_classes(p)?;
    magnus_of(&assemble_blocks(p, &h), p.rank())
}

fn magnus_of(blocks: &JacobianBlocks, g2: usize) -> Result<FieldMatrix> {
    let t = blocks.torsion_matrix();
    let n = t.rows();
    let nvars = t.nvars();
    let mut rhs = FieldMatrix::zeros(n, g2, nvars);
    for i in 0..g2 {
        rhs[(i, i)] = RationalFunction::one(nvars);
    }
    let x = t.solve(&rhs).map_err(|e| match e {
        Error::Singular { .. } => Error::NotHomologyCylinder("torsion matrix is singular".into()),
        e => e,
    })?;
    Ok(blocks.c.mul(&x)?.neg())
}

/// Substitute `γ_j → 1` in every entry.
pub fn specialize_to_one(m: &FieldMatrix) -> Result<FieldMatrix> {
    let ones = vec![LaurentPolynomial::one(m.nvars()); m.nvars()];
    m.try_map(|e| e.specialize(&ones))
}

/// An integer polynomial in `t`, coefficients from `t⁰` upward.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlexanderPolynomial {
    coefficients: Vec<BigInt>,
}

impl AlexanderPolynomial {
    /// Normalize by `±t^k` so the constant term is positive.
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        let mut c: Vec<BigInt> = coefficients.into_iter().skip_while(Zero::is_zero).collect();
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        if c.first().is_some_and(Signed::is_negative) {
            for v in c.iter_mut() {
                *v = -&*v;
            }
        }
        AlexanderPolynomial { coefficients: c }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Coefficients read the same reversed, up to a global sign.
    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
        *c == rev || c.iter().zip(&rev).all(|(a, b)| *a == -b)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (k, mag.is_one()) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push('t'),
                (1, false) => out.push_str(&format!("{mag}*t")),
                (_, true) => out.push_str(&format!("t^{k}")),
                (_, false) => out.push_str(&format!("{mag}*t^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `det(I - tσ)` as a polynomial in one variable, unnormalized.
fn char_det(sigma: &MonodromyMatrix) -> LaurentPolynomial {
    let n = sigma.size();
    if n == 0 {
        return LaurentPolynomial::one(1);
    }
    let t = LaurentPolynomial::variable(1, 0);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s = BigRational::from_integer(sigma.get(i, j).into());
                    let mut e = -&t.scale(&s);
                    if i == j {
                        e = &e + &LaurentPolynomial::one(1);
                    }
                    RationalFunction::from_poly(e)
                })
                .collect()
        })
        .collect();
    let m = FieldMatrix::from_rows(1, rows).expect("square");
    let d = m.det().expect("square");
    d.as_polynomial().expect("polynomial entries").clone()
}

/// `det(I - tσ)`, normalized by `±t^k` to a positive constant term.
pub fn alexander_polynomial(sigma: &MonodromyMatrix) -> AlexanderPolynomial {
    let p = char_det(sigma);
    let (p, _) = p.strip_monomial();
    let deg = p.degree_in(0).unwrap_or(0).max(0) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        coeffs[e.get(0) as usize] = c.to_integer();
    }
    AlexanderPolynomial::from_coefficients(coeffs)
}

/// `det(I - tσ) / (1 - t)` in the single variable `t`.
pub fn abelian_exterior_torsion(sigma: &MonodromyMatrix) -> RationalFunction {
    let one_minus_t = &LaurentPolynomial::one(1) - &LaurentPolynomial::variable(1, 0);
    crate::algebra::rf_make(char_det(sigma), one_minus_t).expect("nonzero denominator")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    NotFibered,
    /// Both obstructions vanish; this never certifies fiberedness.
    ConsistentWithFibered,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NotFibered => "NOT_FIBERED",
            Verdict::ConsistentWithFibered => "CONSISTENT_WITH_FIBERED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiberednessReport {
    pub torsion_trivial: bool,
    pub magnus_integral: bool,
    pub verdict: Verdict,
}

impl FiberednessReport {
    pub fn new(torsion_trivial: bool, magnus_integral: bool) -> Self {
        let verdict = if torsion_trivial && magnus_integral {
            Verdict::ConsistentWithFibered
        } else {
            Verdict::NotFibered
        };
        FiberednessReport {
            torsion_trivial,
            magnus_integral,
            verdict,
        }
    }

    pub fn from_invariants(torsion: &NormalizedLaurent, magnus: &FieldMatrix) -> Self {
        Self::new(
            torsion.is_trivial(),
            magnus.entries().iter().all(RationalFunction::is_polynomial),
        )
    }
}

pub fn fiberedness_report(p: &AdmissiblePresentation) -> Result<FiberednessReport> {
    let h = homology_classes(p)?;
    let blocks = assemble_blocks(p, &h);
    let torsion = determinant_of(&blocks.torsion_matrix())?;
    let magnus = magnus_of(&blocks, p.rank())?;
    Ok(FiberednessReport::from_invariants(&torsion, &magnus))
}

/// `f = ±γ^e · g` for some exponent vector `e`.
pub fn equal_up_to_unit(f: &RationalFunction, g: &RationalFunction) -> bool {
    if f.nvars() != g.nvars() {
        return false;
    }
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    // Canonical fractions fix the denominator up to a unit, so the normal
    // parts of numerator and denominator determine the class.
    let normal = |p: &LaurentPolynomial| NormalizedLaurent::new(p).expect("nonzero").normal;
    normal(f.numerator()) == normal(g.numerator())
        && normal(f.denominator()) == normal(g.denominator())
}

/// Everything computed for one presentation.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub name: Option<String>,
    pub genus: usize,
    pub internal_count: usize,
    pub homology: HomologyAssignment,
    pub monodromy: MonodromyMatrix,
    pub torsion: NormalizedLaurent,
    pub magnus: FieldMatrix,
    pub alexander: AlexanderPolynomial,
    pub fiberedness: FiberednessReport,
}

pub fn compute_report(p: &AdmissiblePresentation) -> Result<InvariantReport> {
    let homology = homology_classes(p)?;
    let monodromy = homological_monodromy(&homology)?;
    let blocks = assemble_blocks(p, &homology);
    let torsion = determinant_of(&blocks.torsion_matrix())?;
    let magnus = magnus_of(&blocks, p.rank())?;
    let alexander = alexander_polynomial(&monodromy);
    let fiberedness = FiberednessReport::from_invariants(&torsion, &magnus);
    Ok(InvariantReport {
        name: p.name().map(str::to_string),
        genus: p.genus(),
        internal_count: p.internal_count(),
        homology,
        monodromy,
        torsion,
        magnus,
        alexander,
        fiberedness,
    })
}
