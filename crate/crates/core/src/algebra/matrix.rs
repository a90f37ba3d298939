use std::fmt;
use std::ops::{Index, IndexMut};

use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Dense matrix over the rational-function field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<RationalFunction>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            nvars,
            entries: vec![RationalFunction::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m[(i, i)] = RationalFunction::one(nvars);
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension("ragged rows".into()));
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(Error::Dimension(
                        "entry has the wrong variable count".into(),
                    ));
                }
                entries.push(e);
            }
        }
        Ok(FieldMatrix {
            rows: r,
            cols: c,
            nvars,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl FnMut(&RationalFunction) -> RationalFunction) -> Self {
        let entries: Vec<_> = self.entries.iter().map(f).collect();
        let nvars = entries.first().map_or(self.nvars, |e| e.nvars());
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            entries,
        }
    }

    pub fn try_map(
        &self,
        f: impl FnMut(&RationalFunction) -> Result<RationalFunction>,
    ) -> Result<Self> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        let nvars = entries.first().map_or(self.nvars, |e| e.nvars());
        Ok(FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        FieldMatrix {
            rows: end - start,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Columns `start..end` as a new matrix.
    pub fn col_block(&self, start: usize, end: usize) -> Self {
        let mut m = Self::zeros(self.rows, end - start, self.nvars);
        for i in 0..self.rows {
            for j in start..end {
                m[(i, j - start)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(FieldMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Determinant by fraction-field elimination.
    pub fn det(&self) -> Result<RationalFunction> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut row_live = vec![true; n];
        let mut col_live = vec![true; n];
        // perm[r] = c for each chosen pivot
        let mut perm = vec![0usize; n];
        let mut det = RationalFunction::one(self.nvars);
        for _ in 0..n {
            let Some((r, c)) = m.lightest_pivot(&row_live, &col_live) else {
                return Ok(RationalFunction::zero(self.nvars));
            };
            let pivot = m[(r, c)].clone();
            let pivot_inv = pivot.inv()?;
            row_live[r] = false;
            col_live[c] = false;
            perm[r] = c;
            for i in 0..n {
                if !row_live[i] || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &pivot_inv;
                m.eliminate(i, r, &factor, &col_live);
                m[(i, c)] = RationalFunction::zero(self.nvars);
            }
            det = &det * &pivot;
        }
        if permutation_is_odd(&perm) {
            det = -det;
        }
        Ok(det)
    }

    /// Solve `self * X = rhs` by Gauss-Jordan elimination.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(Error::Dimension(format!(
                "cannot solve {}x{} system with {}x{} right-hand side",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut b = rhs.clone();
        let mut row_live = vec![true; n];
        let mut col_live = vec![true; n];
        let mut pivot_row_of_col = vec![0usize; n];
        let all_cols = vec![true; b.cols];
        for _ in 0..n {
            let Some((r, c)) = m.lightest_pivot(&row_live, &col_live) else {
                let row = row_live.iter().position(|&x| x).unwrap();
                let col = col_live.iter().position(|&x| x).unwrap();
                return Err(Error::Singular { row, col });
            };
            let pivot_inv = m[(r, c)].inv()?;
            row_live[r] = false;
            col_live[c] = false;
            pivot_row_of_col[c] = r;
            for j in 0..n {
                if col_live[j] && !m[(r, j)].is_zero() {
                    m[(r, j)] = &m[(r, j)] * &pivot_inv;
                }
            }
            for j in 0..b.cols {
                if !b[(r, j)].is_zero() {
                    b[(r, j)] = &b[(r, j)] * &pivot_inv;
                }
            }
            m[(r, c)] = RationalFunction::one(self.nvars);
            for i in 0..n {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                m.eliminate(i, r, &factor, &col_live);
                b.eliminate_from(i, r, &factor, &all_cols);
                m[(i, c)] = RationalFunction::zero(self.nvars);
            }
        }
        let mut x = Self::zeros(n, b.cols, self.nvars);
        for c in 0..n {
            let r = pivot_row_of_col[c];
            for j in 0..b.cols {
                x[(c, j)] = b[(r, j)].clone();
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.solve(&Self::identity(self.rows, self.nvars))
    }

    /// Nonzero entry with fewest terms among live rows and columns; ties go
    /// to the first position in row-major order.
    fn lightest_pivot(&self, row_live: &[bool], col_live: &[bool]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in (0..self.rows).filter(|&i| row_live[i]) {
            for j in (0..self.cols).filter(|&j| col_live[j]) {
                let e = &self[(i, j)];
                if e.is_zero() {
                    continue;
                }
                let w = e.weight();
                if best.is_none_or(|(bw, _, _)| w < bw) {
                    best = Some((w, i, j));
                    if w == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// `row[target] -= factor * row[source]` on the live columns.
    fn eliminate(
        &mut self,
        target: usize,
        source: usize,
        factor: &RationalFunction,
        live: &[bool],
    ) {
        self.eliminate_from(target, source, factor, live)
    }

    fn eliminate_from(
        &mut self,
        target: usize,
        source: usize,
        factor: &RationalFunction,
        live: &[bool],
    ) {
        for j in 0..self.cols {
            if !live[j] {
                continue;
            }
            let s = &self[(source, j)];
            if s.is_zero() {
                continue;
            }
            let t = &self[(target, j)] - &(factor * s);
            self[(target, j)] = t;
        }
    }
}

/// Parity of `i -> perm[i]` via cycle decomposition.
fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}

/// Determinant of a square matrix; see [`FieldMatrix::det`].
pub fn mat_det(m: &FieldMatrix) -> Result<RationalFunction> {
    m.det()
}

/// Inverse of a square matrix; see [`FieldMatrix::inverse`].
pub fn mat_inverse(m: &FieldMatrix) -> Result<FieldMatrix> {
    m.inverse()
}

impl Index<(usize, usize)> for FieldMatrix {
    type Output = RationalFunction;

    fn index(&self, (i, j): (usize, usize)) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for FieldMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RationalFunction {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rf_make, LaurentPolynomial};

    fn mono(n: usize, c: i64, e: &[i32]) -> RationalFunction {
        RationalFunction::from_poly(LaurentPolynomial::from_int_terms(n, &[(c, e)]))
    }

    #[test]
    fn diagonal_det() {
        let m = FieldMatrix::from_rows(
            2,
            vec![
                vec![mono(2, 1, &[1, 0]), RationalFunction::zero(2)],
                vec![RationalFunction::zero(2), mono(2, 1, &[0, 1])],
            ],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), mono(2, 1, &[1, 1]));
    }

    #[test]
    fn rank_one_det() {
        let m = FieldMatrix::from_rows(
            1,
            vec![
                vec![RationalFunction::one(1), mono(1, 1, &[-1])],
                vec![mono(1, 1, &[1]), RationalFunction::one(1)],
            ],
        )
        .unwrap();
        assert!(m.det().unwrap().is_zero());
        assert!(matches!(m.inverse(), Err(Error::Singular { .. })));
    }

    #[test]
    fn non_square() {
        let m = FieldMatrix::zeros(2, 3, 1);
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
        assert!(matches!(m.inverse(), Err(Error::Dimension(_))));
    }

    #[test]
    fn identity_inverse() {
        let i4 = FieldMatrix::identity(4, 3);
        assert_eq!(i4.inverse().unwrap(), i4);
    }

    #[test]
    fn two_by_two_inverse() {
        // [[g1, 1], [0, 1]]^-1 = [[g1^-1, -g1^-1], [0, 1]] (adjugate / det)
        let m = FieldMatrix::from_rows(
            1,
            vec![
                vec![mono(1, 1, &[1]), RationalFunction::one(1)],
                vec![RationalFunction::zero(1), RationalFunction::one(1)],
            ],
        )
        .unwrap();
        let want = FieldMatrix::from_rows(
            1,
            vec![
                vec![mono(1, 1, &[-1]), mono(1, -1, &[-1])],
                vec![RationalFunction::zero(1), RationalFunction::one(1)],
            ],
        )
        .unwrap();
        assert_eq!(m.inverse().unwrap(), want);
    }

    #[test]
    fn permutation_sign() {
        let one = RationalFunction::one(1);
        let zero = RationalFunction::zero(1);
        let m = FieldMatrix::from_rows(
            1,
            vec![
                vec![zero.clone(), one.clone(), zero.clone()],
                vec![zero.clone(), zero.clone(), one.clone()],
                vec![one.clone(), zero.clone(), zero.clone()],
            ],
        )
        .unwrap();
        assert!(m.det().unwrap().is_one());
        let swap =
            FieldMatrix::from_rows(1, vec![vec![zero.clone(), one.clone()], vec![one, zero]])
                .unwrap();
        assert_eq!(swap.det().unwrap(), RationalFunction::from_int(1, -1));
    }

    #[test]
    fn inverse_with_fractions() {
        let x = mono(1, 1, &[1]);
        let one = RationalFunction::one(1);
        let two = RationalFunction::from_int(1, 2);
        let m = FieldMatrix::from_rows(1, vec![vec![&one + &x, two], vec![x.clone(), &x * &x]])
            .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let d = m.det().unwrap();
        let want = rf_make(
            LaurentPolynomial::from_int_terms(1, &[(1, &[2]), (1, &[3]), (-2, &[1])]),
            LaurentPolynomial::one(1),
        )
        .unwrap();
        assert_eq!(d, want);
    }
}
