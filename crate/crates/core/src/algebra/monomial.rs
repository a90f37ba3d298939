use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use smallvec::SmallVec;

/// Exponents of a Laurent monomial `g1^e1 ... gn^en`.
///
/// Ordering is pure lex with `g1 < g2 < ... < gn`: the last variable is the
/// most significant one.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector(SmallVec<[i32; 6]>);

impl ExponentVector {
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, nvars))
    }

    /// The exponent vector of the `j`-th variable (0-based).
    pub fn unit(nvars: usize, j: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.0[j] = 1;
        e
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(exps))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, j: usize) -> i32 {
        self.0[j]
    }

    pub fn set(&mut self, j: usize, value: i32) {
        self.0[j] = value;
    }

    pub fn scaled(&self, k: i32) -> Self {
        ExponentVector(self.0.iter().map(|&e| e * k).collect())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Highest-index variable with a nonzero exponent.
    pub fn main_variable(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        self.0.iter().copied()
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a ExponentVector> for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &'a ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a ExponentVector> for &ExponentVector {
    type Output = ExponentVector;

    fn sub(self, rhs: &'a ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&ExponentVector> for ExponentVector {
    fn add_assign(&mut self, rhs: &ExponentVector) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;

    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| -e).collect())
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector(SmallVec::from_vec(v))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}
