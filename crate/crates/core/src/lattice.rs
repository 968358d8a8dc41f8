//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The matrices that
//! show up in practice are at most 8x8, so the algorithms favour clarity over
//! asymptotic speed.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Rational column vector.
pub type QVec = Vec<BigRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Dense rectangular matrix of big integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small-integer rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged rows");
            data.extend(row.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_big_rows(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
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

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Rows as `i64`; panics if an entry does not fit.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).expect("matrix entry out of i64 range"))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn apply_rational(&self, v: &[BigRational]) -> QVec {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (a, b) in self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v) {
                    if !a.is_zero() {
                        acc += BigRational::from_integer(a.clone()) * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact determinant (fraction-free Bareiss elimination).
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if !self.is_square() {
            return Err(LatticeError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows: Vec<QVec> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect()
            })
            .collect();
        rational_rank(&rows)
    }

    /// Inverse of a unimodular matrix, `None` if the matrix is not invertible over the integers.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let snf = smith_normal_form(self);
        if snf.invariant_factors.iter().any(|d| !d.is_one()) || snf.invariant_factors.len() != n {
            return None;
        }
        // U M V = I  =>  M^{-1} = V U
        Some(&snf.v * &snf.u)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[source * self.cols + j] * factor;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + source] * factor;
            self.data[i * self.cols + target] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of a Smith normal form computation: `u * m * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    /// Nonzero diagonal entries of `d` in order, followed by zeros up to
    /// `min(rows, cols)`.
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form by row/column reduction, pivoting on the entry of least
/// absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let steps = r.min(c);

    let mut k = 0;
    while k < steps {
        // least nonzero |entry| in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..r {
            for j in k..c {
                let x = &a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if a[(pi, pj)].abs() <= x.abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(k, pi);
        u.swap_rows(k, pi);
        a.swap_cols(k, pj);
        v.swap_cols(k, pj);

        let mut dirty = false;
        for i in k + 1..r {
            if a[(i, k)].is_zero() {
                continue;
            }
            let q = &a[(i, k)] / &a[(k, k)];
            let nq = -q;
            a.add_row_multiple(i, k, &nq);
            u.add_row_multiple(i, k, &nq);
            if !a[(i, k)].is_zero() {
                dirty = true;
            }
        }
        for j in k + 1..c {
            if a[(k, j)].is_zero() {
                continue;
            }
            let q = &a[(k, j)] / &a[(k, k)];
            let nq = -q;
            a.add_col_multiple(j, k, &nq);
            v.add_col_multiple(j, k, &nq);
            if !a[(k, j)].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // divisibility of the trailing block by the pivot
        let p = a[(k, k)].clone();
        let offender = (k + 1..r).find(|&i| (k + 1..c).any(|j| !a[(i, j)].is_multiple_of(&p)));
        if let Some(i) = offender {
            let one = BigInt::one();
            a.add_row_multiple(k, i, &one);
            u.add_row_multiple(k, i, &one);
            continue;
        }
        if p.is_negative() {
            a.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    let invariant_factors = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SnfResult {
        u,
        v,
        d: a,
        invariant_factors,
    }
}

/// Structure of the cokernel `Z^n / M Z^n` of a square integer matrix, together
/// with the dual data needed to describe the subgroup of the torus
/// `X_* ⊗ C^x` killed by the image of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantDecomposition {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// One rational vector per torsion factor: row `i` of `U` divided by
    /// `d_i`. Each is a torsion point of order `d_i` annihilating `M Z^n`,
    /// and together they generate the component group of the annihilator.
    pub torsion_lifts: Vec<QVec>,
    /// Integer basis (rows of `U` with zero invariant factor) of the
    /// saturated lattice spanning the identity component of the annihilator.
    pub free_directions: Vec<Vec<BigInt>>,
    /// The SNF the data was read off from.
    pub snf: SnfResult,
}

impl CoinvariantDecomposition {
    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Coordinates of a rational vector `theta` in the basis dual to the SNF:
    /// `theta = U^T phi`. Coordinates attached to torsion factors are reduced
    /// to integers in `[0, d_i)` after scaling by `d_i`; the return value is
    /// `None` when `theta` does not annihilate `M Z^n`.
    pub fn component_coordinates(&self, theta: &[BigRational]) -> Option<Vec<BigInt>> {
        // phi = U^{-T} theta, U unimodular
        let u_inv_t = self
            .snf
            .u
            .inverse_unimodular()
            .expect("SNF transform is unimodular")
            .transpose();
        let phi = u_inv_t.apply_rational(theta);
        let mut coords = Vec::new();
        for (i, d) in self.snf.invariant_factors.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let scaled = &phi[i] * BigRational::from_integer(d.clone());
            if !scaled.is_integer() {
                return None;
            }
            if d.is_one() {
                continue;
            }
            coords.push(scaled.to_integer().mod_floor(d));
        }
        Some(coords)
    }
}

/// Cokernel structure of a square matrix.
pub fn coinvariant_decomposition(m: &IntMatrix) -> Result<CoinvariantDecomposition, LatticeError> {
    if !m.is_square() {
        return Err(LatticeError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let snf = smith_normal_form(m);
    let mut torsion = Vec::new();
    let mut torsion_lifts = Vec::new();
    let mut free_directions = Vec::new();
    for i in 0..n {
        let d = &snf.invariant_factors[i];
        if d.is_zero() {
            free_directions.push(snf.u.row(i));
        } else if !d.is_one() {
            torsion.push(d.clone());
            torsion_lifts.push(
                snf.u
                    .row(i)
                    .into_iter()
                    .map(|x| BigRational::new(x, d.clone()))
                    .collect(),
            );
        }
    }
    Ok(CoinvariantDecomposition {
        free_rank: free_directions.len(),
        torsion,
        torsion_lifts,
        free_directions,
        snf,
    })
}

/// Integer basis of `{x in Z^n : <x, v> = 0 for all v in vectors}`.
pub fn orthogonal_lattice(vectors: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
    }
    let m = IntMatrix::from_big_rows(vectors, n);
    let snf = smith_normal_form(&m);
    let rank = snf.rank();
    (rank..n).map(|j| snf.v.col(j)).collect()
}

/// Saturation of the lattice spanned by `vectors` inside `Z^n`, as an integer basis.
pub fn saturate(vectors: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let nonzero: Vec<Vec<BigInt>> = vectors
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    orthogonal_lattice(&orthogonal_lattice(&nonzero, n), n)
}

/// Rank of a list of rational row vectors.
pub fn rational_rank(rows: &[QVec]) -> usize {
    let mut m: Vec<QVec> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] / &pivot;
                for j in col..ncols {
                    let v = &f * &m[rank][j];
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves the square rational system `a x = b`; `None` if singular.
pub fn solve_rational(a: &[QVec], b: &[BigRational]) -> Option<QVec> {
    let n = a.len();
    let mut m: Vec<QVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col].clone();
        for j in col..=n {
            let v = &m[col][j] / &pivot;
            m[col][j] = v;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let v = &f * &m[col][j];
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Reduce every entry into `[0, 1)`.
pub fn reduce_mod_one(v: &[BigRational]) -> QVec {
    v.iter().map(frac_part).collect()
}

pub fn frac_part(x: &BigRational) -> BigRational {
    x - BigRational::from_integer(x.floor().to_integer())
}

pub fn to_rational(v: &[BigInt]) -> QVec {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

pub fn dot_int_rational(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, y)| BigRational::from_integer(x.clone()) * y)
        .fold(BigRational::zero(), |acc, t| acc + t)
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(m: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        let nz: Vec<_> = s.invariant_factors.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            assert!(w[1].is_multiple_of(w[0]));
        }
        s
    }

    #[test]
    fn snf_small_examples() {
        let s = check_snf(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.invariant_factors, big(&[1, 6]));
        let s = check_snf(&IntMatrix::identity(3));
        assert!(s.d.is_identity());
        let s = check_snf(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(s.invariant_factors, big(&[2, 4]));
    }

    #[test]
    fn snf_rank_deficient_and_rectangular() {
        let s = check_snf(&IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]));
        assert_eq!(s.invariant_factors, big(&[1, 0]));
        let s = check_snf(&IntMatrix::zeros(2, 2));
        assert_eq!(s.invariant_factors, big(&[0, 0]));
    }

    #[test]
    fn coinvariants_of_sl2_reflection() {
        let c = coinvariant_decomposition(&IntMatrix::from_rows(&[[-2]])).unwrap();
        assert_eq!(c.free_rank, 0);
        assert_eq!(c.torsion, big(&[2]));
        assert_eq!(c.torsion_lifts[0][0].abs(), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn coinvariants_of_gl2_swap() {
        let c = coinvariant_decomposition(&IntMatrix::from_rows(&[[-1, 1], [1, -1]])).unwrap();
        assert_eq!(c.free_rank, 1);
        assert!(c.torsion.is_empty());
        assert_eq!(c.free_directions.len(), 1);
    }

    #[test]
    fn coinvariants_of_sl3_coxeter() {
        // Coxeter element s1 s2 on the weight lattice of SL3, minus the identity.
        // s1 = [[-1,0],[1,1]], s2 = [[1,1],[0,-1]] in fundamental-weight coordinates.
        let s1 = IntMatrix::from_rows(&[[-1, 0], [1, 1]]);
        let s2 = IntMatrix::from_rows(&[[1, 1], [0, -1]]);
        let c = &s1 * &s2;
        let m = &c - &IntMatrix::identity(2);
        // oracle: SNF of the explicit 2x2 matrix
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors, big(&[1, 3]));
        let dec = coinvariant_decomposition(&m).unwrap();
        assert_eq!(dec.free_rank, 0);
        assert_eq!(dec.torsion, big(&[3]));
    }

    #[test]
    fn non_square_rejected() {
        let err = coinvariant_decomposition(&IntMatrix::zeros(2, 3)).unwrap_err();
        assert_eq!(err, LatticeError::NonSquare { rows: 2, cols: 3 });
    }

    #[test]
    fn torsion_lifts_annihilate_image() {
        let m = IntMatrix::from_rows(&[[2, 1, 0], [0, 4, 2], [2, 5, 2]]);
        let dec = coinvariant_decomposition(&m).unwrap();
        for (lift, d) in dec.torsion_lifts.iter().zip(&dec.torsion) {
            // lift^T M is integral and d * lift is integral
            let mt = m.transpose();
            for x in mt.apply_rational(lift) {
                assert!(x.is_integer());
            }
            for x in lift {
                assert!((x * BigRational::from_integer(d.clone())).is_integer());
            }
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let m = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        assert_eq!(m.determinant().unwrap(), BigInt::one());
        let inv = m.inverse_unimodular().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(IntMatrix::from_rows(&[[2, 0], [0, 1]]).inverse_unimodular().is_none());
    }

    #[test]
    fn orthogonal_and_saturation() {
        let o = orthogonal_lattice(&[big(&[1, -1, 0])], 3);
        assert_eq!(o.len(), 2);
        for v in &o {
            assert!(dot_int(v, &big(&[1, -1, 0])).is_zero());
        }
        let s = saturate(&[big(&[2, 2])], 2);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].iter().map(|x| x.abs()).collect::<Vec<_>>(), big(&[1, 1]));
    }
}
