//! Dense matrices over the Gaussian rationals: exact rank and the rank-2
//! row-space decomposition used to separate variables.

use std::ops::{Index, IndexMut};

use num_traits::Zero;

use super::{AlgebraError, GaussianRational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = 1.into();
        }
        m
    }

    /// Row-major entries; `None` when the count does not match the shape.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Option<Self> {
        (entries.len() == rows * cols).then_some(Self { rows, cols, entries })
    }

    /// From nested rows; `None` when rows are ragged.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(Self { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map(|a| a * c)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `c` with `self = c · other`, if one exists. Zero matrices only match
    /// zero matrices, with `c = 1`.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<GaussianRational> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        let pivot = other.entries.iter().position(|e| !e.is_zero());
        let Some(k) = pivot else {
            return self.is_zero().then(|| 1.into());
        };
        let c = &self.entries[k] / &other.entries[k];
        self.entries.iter().zip(&other.entries).all(|(a, b)| *a == &c * b).then_some(c)
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        &mut self.entries[r * self.cols + c]
    }
}

/// Rank over the Gaussian rationals by pivoted elimination.
pub fn rank_exact(m: &ExactMatrix) -> usize {
    let mut a = m.clone();
    let mut rank = 0;
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(pivot) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(rank, pivot);
        let inv = a[(rank, col)].inv().expect("pivot is nonzero");
        for r in rank + 1..a.rows {
            if a[(r, col)].is_zero() {
                continue;
            }
            let factor = &a[(r, col)] * &inv;
            for c in col..a.cols {
                let delta = &factor * &a[(rank, c)];
                a[(r, c)] -= &delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Rows of a rank-2 matrix written in the basis of its first two
/// independent rows: `row j = sigma[j]·row a + tau[j]·row b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowBasis {
    pub a: usize,
    pub b: usize,
    pub sigma: Vec<GaussianRational>,
    pub tau: Vec<GaussianRational>,
}

pub fn row_basis_decompose(m: &ExactMatrix) -> Result<RowBasis, AlgebraError> {
    let rank = rank_exact(m);
    if rank != 2 {
        return Err(AlgebraError::RankNotTwo { rank });
    }
    let minor =
        |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[(r1, c1)] * &m[(r2, c2)]) - &(&m[(r1, c2)] * &m[(r2, c1)]);
    let a = (0..m.rows).find(|&r| m.row(r).iter().any(|e| !e.is_zero())).expect("rank 2 has a nonzero row");
    let pairs: Vec<(usize, usize)> = (0..m.cols).flat_map(|c1| (c1 + 1..m.cols).map(move |c2| (c1, c2))).collect();
    let (b, (p, q)) = (a + 1..m.rows)
        .find_map(|r| pairs.iter().find(|&&(c1, c2)| !minor(a, r, c1, c2).is_zero()).map(|&pq| (r, pq)))
        .expect("rank 2 has a second independent row");

    // Cramer's rule on columns p, q; the 2x2 minor of rows a, b there is nonzero.
    let det = minor(a, b, p, q);
    let mut sigma = Vec::with_capacity(m.rows);
    let mut tau = Vec::with_capacity(m.rows);
    for j in 0..m.rows {
        let s = &(&(&m[(j, p)] * &m[(b, q)]) - &(&m[(j, q)] * &m[(b, p)])) / &det;
        let t = &(&(&m[(a, p)] * &m[(j, q)]) - &(&m[(a, q)] * &m[(j, p)])) / &det;
        sigma.push(s);
        tau.push(t);
    }
    Ok(RowBasis { a, b, sigma, tau })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| v.into()).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_trivial_cases() {
        assert_eq!(rank_exact(&ExactMatrix::identity(3)), 3);
        assert_eq!(rank_exact(&ExactMatrix::zeros(4, 4)), 0);
        assert_eq!(rank_exact(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn duplicated_row_basis() {
        let m = mat(&[&[1, 2, 3], &[1, 2, 3], &[0, 1, 5]]);
        let basis = row_basis_decompose(&m).unwrap();
        assert_eq!((basis.a, basis.b), (0, 2));
        let ints = |v: &[i64]| v.iter().map(|&x| GaussianRational::from(x)).collect::<Vec<_>>();
        assert_eq!(basis.sigma, ints(&[1, 1, 0]));
        assert_eq!(basis.tau, ints(&[0, 0, 1]));
    }

    #[test]
    fn rank_one_is_rejected() {
        let m = mat(&[&[1, 2], &[3, 6]]);
        assert_eq!(row_basis_decompose(&m), Err(AlgebraError::RankNotTwo { rank: 1 }));
    }

    #[test]
    fn leading_zero_rows_are_skipped() {
        let m = mat(&[&[0, 0, 0], &[1, 0, 1], &[2, 0, 2], &[0, 3, 0]]);
        let basis = row_basis_decompose(&m).unwrap();
        assert_eq!((basis.a, basis.b), (1, 3));
        assert_eq!(basis.sigma[2], 2.into());
        assert!(basis.sigma[0].is_zero() && basis.tau[0].is_zero());
    }

    #[test]
    fn scalar_multiple_detection() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = a.scale(&GaussianRational::from_integers(0, 2));
        assert_eq!(b.scalar_multiple_of(&a), Some(GaussianRational::from_integers(0, 2)));
        assert_eq!(mat(&[&[1, 2], &[3, 5]]).scalar_multiple_of(&a), None);
    }
}
