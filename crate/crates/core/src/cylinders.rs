//! Identity cylinders, mapping cylinders of free-group endomorphisms and
//! the stacking product, all at the level of presentations.

use std::fmt;

use crate::algebra::{ExponentVector, FieldMatrix, RationalFunction};
use crate::error::{Error, Result};
use crate::fox::{
    fox_derivative, AdmissiblePresentation, GeneratorClass, GeneratorRef, Letter, Word,
};
use crate::homology::{HomologyAssignment, MonodromyMatrix};

/// An endomorphism of the free group on `γ_1..γ_2g`. Letters of an image
/// are signed 1-based indices: `j` is `γ_j`, `-j` is `γ_j⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeEndomorphism {
    genus: usize,
    images: Vec<Vec<i32>>,
}

impl FreeEndomorphism {
    /// Fails with `NotHomologyCylinder` unless the abelianization is
    /// unimodular.
    pub fn new(genus: usize, images: Vec<Vec<i32>>) -> Result<Self> {
        let n = 2 * genus;
        if genus == 0 || images.len() != n {
            return Err(Error::Dimension(format!(
                "{} images for genus {genus}",
                images.len()
            )));
        }
        if let Some(&bad) = images
            .iter()
            .flatten()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > n)
        {
            return Err(Error::GeneratorIndex(format!(
                "letter {bad} for genus {genus}"
            )));
        }
        let phi = FreeEndomorphism { genus, images };
        let d = phi.abelianization().det();
        if d != 1.into() && d != (-1).into() {
            return Err(Error::NotHomologyCylinder(format!(
                "endomorphism abelianizes to a matrix of determinant {d}"
            )));
        }
        Ok(phi)
    }

    pub fn identity(genus: usize) -> Self {
        FreeEndomorphism {
            genus,
            images: (1..=2 * genus as i32).map(|j| vec![j]).collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[Vec<i32>] {
        &self.images
    }

    /// `σ_ij` = exponent sum of `γ_i` in `φ(γ_j)`.
    pub fn abelianization(&self) -> MonodromyMatrix {
        let n = 2 * self.genus;
        let mut rows = vec![vec![0i64; n]; n];
        for (j, w) in self.images.iter().enumerate() {
            for &l in w {
                rows[l.unsigned_abs() as usize - 1][j] += i64::from(l.signum());
            }
        }
        MonodromyMatrix::from_rows(rows).expect("square")
    }

    /// `self ∘ other`: `γ_j ↦ self(other(γ_j))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.genus != other.genus {
            return Err(Error::Dimension("endomorphisms of different genus".into()));
        }
        let images = other
            .images
            .iter()
            .map(|w| {
                w.iter()
                    .flat_map(|&l| {
                        let img = &self.images[l.unsigned_abs() as usize - 1];
                        if l > 0 {
                            img.clone()
                        } else {
                            img.iter().rev().map(|&x| -x).collect()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(FreeEndomorphism {
            genus: self.genus,
            images,
        })
    }

    /// `φ(γ_j)` written in the Plus generators.
    pub fn image_word(&self, j: usize) -> Word {
        Word::new(
            self.images[j]
                .iter()
                .map(|&l| Letter::new(GeneratorRef::plus(l.unsigned_abs() as usize), l < 0))
                .collect(),
        )
    }

    /// Involuted, abelianized Fox Jacobian: entry `(i, j)` is
    /// `∂φ(γ_j)/∂γ_i` with `γ ↦ γ⁻¹` applied.
    pub fn fox_jacobian(&self) -> FieldMatrix {
        let n = 2 * self.genus;
        let mut classes = Vec::with_capacity(2 * n);
        for _ in 0..2 {
            classes.extend((0..n).map(|j| ExponentVector::unit(n, j)));
        }
        let h = HomologyAssignment::from_classes(self.genus, 0, classes).expect("sizes match");
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        RationalFunction::from_poly(fox_derivative(
                            &self.image_word(j),
                            GeneratorRef::plus(i + 1),
                            &h,
                        ))
                    })
                    .collect()
            })
            .collect();
        FieldMatrix::from_rows(n, rows).expect("square")
    }
}

impl fmt::Display for FreeEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, w) in self.images.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            let letters: Vec<String> = w
                .iter()
                .map(|&l| {
                    if l > 0 {
                        format!("g{l}")
                    } else {
                        format!("g{}^-1", -l)
                    }
                })
                .collect();
            let body = if letters.is_empty() {
                "1".to_string()
            } else {
                letters.join("*")
            };
            write!(f, "g{} -> {body}", j + 1)?;
        }
        Ok(())
    }
}

/// Relations `i₋(γ_j) · i₊(γ_j)⁻¹`, no internal generators.
pub fn identity_cylinder(genus: usize) -> Result<AdmissiblePresentation> {
    mapping_cylinder(&FreeEndomorphism::identity(genus))
}

/// Relations `i₋(γ_j) · φ(γ_j)⁻¹` with `φ(γ_j)` in Plus letters.
pub fn mapping_cylinder(phi: &FreeEndomorphism) -> Result<AdmissiblePresentation> {
    let relations = (0..2 * phi.genus)
        .map(|j| {
            let m = Word::new(vec![Letter::new(GeneratorRef::minus(j + 1), false)]);
            m.concat(&phi.image_word(j).inverse())
        })
        .collect();
    AdmissiblePresentation::new(phi.genus, 0, relations, None)
}

/// Stack `p` on top of `q`: the Minus face of `p` is glued to the Plus face
/// of `q`.
///
/// Internal generators of the result, in order: `p`'s Minus, `p`'s Internal,
/// `q`'s Internal, `q`'s Plus. Relations: `p`'s, then `q`'s, then
/// `q.Plus_k · (p.Minus_k)⁻¹` for each `k`. The monodromy of the result is
/// `σ(p) · σ(q)`.
pub fn compose(
    p: &AdmissiblePresentation,
    q: &AdmissiblePresentation,
) -> Result<AdmissiblePresentation> {
    if p.genus() != q.genus() {
        return Err(Error::Dimension(format!(
            "cannot compose genus {} with genus {}",
            p.genus(),
            q.genus()
        )));
    }
    let g2 = p.rank();
    let lp = p.internal_count();
    let lq = q.internal_count();
    let p_minus = 0;
    let p_internal = g2;
    let q_internal = g2 + lp;
    let q_plus = g2 + lp + lq;

    let from_p = |x: GeneratorRef| match x.class {
        GeneratorClass::Minus => GeneratorRef::internal(p_minus + x.index),
        GeneratorClass::Internal => GeneratorRef::internal(p_internal + x.index),
        GeneratorClass::Plus => x,
    };
    let from_q = |x: GeneratorRef| match x.class {
        GeneratorClass::Minus => x,
        GeneratorClass::Internal => GeneratorRef::internal(q_internal + x.index),
        GeneratorClass::Plus => GeneratorRef::internal(q_plus + x.index),
    };
    let mut relations: Vec<Word> = p
        .relations()
        .iter()
        .map(|r| r.map_generators(from_p))
        .collect();
    relations.extend(q.relations().iter().map(|r| r.map_generators(from_q)));
    relations.extend((1..=g2).map(|k| {
        Word::new(vec![
            Letter::new(GeneratorRef::internal(q_plus + k), false),
            Letter::new(GeneratorRef::internal(p_minus + k), true),
        ])
    }));
    let name = match (p.name(), q.name()) {
        (Some(a), Some(b)) => Some(format!("{a}*{b}")),
        _ => None,
    };
    AdmissiblePresentation::new(p.genus(), 2 * g2 + lp + lq, relations, name)
}
