//! First homology of an admissible presentation in the basis given by the
//! Plus generators, and the homological monodromy.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::ExponentVector;
use crate::error::{Error, Result};
use crate::fox::{AdmissiblePresentation, GeneratorRef};

/// Homology class of every generator, written in the basis
/// `[i₊(γ_1)], ..., [i₊(γ_2g)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyAssignment {
    genus: usize,
    internal_count: usize,
    classes: Vec<ExponentVector>,
}

impl HomologyAssignment {
    /// `classes` in presentation order (Minus, Internal, Plus).
    pub fn from_classes(
        genus: usize,
        internal_count: usize,
        classes: Vec<ExponentVector>,
    ) -> Result<Self> {
        let want = 4 * genus + internal_count;
        if classes.len() != want || classes.iter().any(|c| c.len() != 2 * genus) {
            return Err(Error::Dimension(format!(
                "homology assignment needs {want} classes of length {}",
                2 * genus
            )));
        }
        Ok(HomologyAssignment {
            genus,
            internal_count,
            classes,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn internal_count(&self) -> usize {
        self.internal_count
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn class(&self, x: GeneratorRef) -> &ExponentVector {
        &self.classes[x.position(self.genus, self.internal_count)]
    }

    pub fn classes(&self) -> &[ExponentVector] {
        &self.classes
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorRef, &ExponentVector)> + '_ {
        self.classes.iter().enumerate().map(|(p, c)| {
            (
                GeneratorRef::at_position(p, self.genus, self.internal_count),
                c,
            )
        })
    }
}

/// Solve the abelianized relations for every generator in terms of the Plus
/// generators.
///
/// The exponent-sum matrix (relations × generators) is row reduced over Q;
/// its first `2g + l` columns must reduce to the identity, and the remaining
/// block then expresses each Minus and Internal class. Fails with
/// `NotHomologyCylinder` when the Plus generators do not span or the
/// left block is singular, and with `NonIntegralHomology` if a class has a
/// non-integer coordinate.
pub fn homology_classes(p: &AdmissiblePresentation) -> Result<HomologyAssignment> {
    let g = p.genus();
    let l = p.internal_count();
    let n = 2 * g + l;
    let cols = 4 * g + l;
    let mut m = vec![vec![BigRational::zero(); cols]; n];
    for (i, r) in p.relations().iter().enumerate() {
        let mut row = vec![0i64; cols];
        for letter in r.letters() {
            row[letter.generator.position(g, l)] += i64::from(letter.sign());
        }
        m[i] = row
            .into_iter()
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
    }
    rref_left_block(&mut m, n).map_err(|col| {
        Error::NotHomologyCylinder(format!(
            "relations do not determine {} from the Plus generators",
            GeneratorRef::at_position(col, g, l)
        ))
    })?;

    let mut classes = Vec::with_capacity(cols);
    for (i, row) in m.iter().enumerate() {
        let mut e = Vec::with_capacity(2 * g);
        for v in &row[n..] {
            let c = -v;
            if !c.is_integer() {
                return Err(Error::NonIntegralHomology(format!(
                    "{} has coordinate {c}",
                    GeneratorRef::at_position(i, g, l)
                )));
            }
            e.push(to_i32(c.to_integer())?);
        }
        classes.push(ExponentVector::from(e));
    }
    for j in 0..2 * g {
        classes.push(ExponentVector::unit(2 * g, j));
    }
    HomologyAssignment::from_classes(g, l, classes)
}

fn to_i32(v: BigInt) -> Result<i32> {
    v.to_i32()
        .ok_or_else(|| Error::NonIntegralHomology(format!("coordinate {v} out of range")))
}

/// Reduce the square `k × k` left block to the identity by row operations.
/// On failure returns the column with no available pivot.
fn rref_left_block(m: &mut [Vec<BigRational>], k: usize) -> std::result::Result<(), usize> {
    for c in 0..k {
        let pivot = (c..m.len()).find(|&r| !m[r][c].is_zero()).ok_or(c)?;
        m.swap(c, pivot);
        let inv = m[c][c].recip();
        for v in m[c].iter_mut() {
            *v *= &inv;
        }
        let prow = m[c].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
    }
    Ok(())
}

/// The integer matrix `σ` with column `j` equal to `[i₋(γ_j)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonodromyMatrix {
    entries: Vec<Vec<i64>>,
}

impl MonodromyMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("monodromy matrix must be square".into()));
        }
        Ok(MonodromyMatrix { entries })
    }

    pub fn identity(n: usize) -> Self {
        MonodromyMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| self.entries[i][k] * other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        MonodromyMatrix { entries }
    }

    /// Exact determinant by Gaussian elimination over Q.
    pub fn det(&self) -> BigInt {
        let n = self.size();
        let mut m: Vec<Vec<BigRational>> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return BigInt::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let prow = m[c].clone();
            for row in m.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] / &prow[c];
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        det.to_integer()
    }
}

impl fmt::Display for MonodromyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `σ` with `σ_ij` the `i`-th coordinate of `[i₋(γ_j)]`; `|det σ| = 1` is
/// checked.
pub fn homological_monodromy(h: &HomologyAssignment) -> Result<MonodromyMatrix> {
    let n = h.rank();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::from(h.class(GeneratorRef::minus(j + 1)).get(i)))
                .collect()
        })
        .collect();
    let sigma = MonodromyMatrix { entries };
    let d = sigma.det();
    if d.abs() != BigInt::one() {
        return Err(Error::NotHomologyCylinder(format!(
            "monodromy has determinant {d}"
        )));
    }
    Ok(sigma)
}
