//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are plain `Vec<F>`; matrices are row-major. Integer determinants
//! use fraction-free Bareiss elimination so that no rationals appear.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let t = a.mul(b);
                        out[(i, j)].add_assign(&t);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![F::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = &self[(i, j)];
                if !b.is_zero() {
                    o.add_assign(&a.mul(b));
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t.add_assign(&self[(i, i)]);
        }
        t
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].mul(&inv);
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        if !self[(r, j)].is_zero() {
                            let t = f.mul(&self[(r, j)]);
                            self[(i, j)] = self[(i, j)].sub(&t);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per returned row.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m[(r, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of `{y : y * self = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<F>> {
        self.transpose().nullspace()
    }

    /// Some `x` with `self * x = b`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        self.rows == 0 || self.pow(self.rows).is_zero()
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s.add_assign(&x.mul(y));
        }
    }
    s
}

pub fn axpy<F: Field>(y: &mut [F], a: &F, x: &[F]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            yi.add_assign(&a.mul(xi));
        }
    }
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}

pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Row space kept in reduced row echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    width: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a>(width: usize, vs: impl IntoIterator<Item = &'a Vec<F>>) -> Self {
        let mut e = Self::new(width);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (j, r) in row.iter().enumerate().skip(p) {
                    v[j].sub_mul_assign(&c, r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.width);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut().skip(p) {
            *x = x.mul(&inv);
        }
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (j, x) in v.iter().enumerate().skip(p) {
                    row[j].sub_mul_assign(&c, x);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    /// Basis of a complement: unit vectors on the non-pivot columns.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut free = Vec::new();
        let mut k = 0;
        for c in 0..self.width {
            if k < self.pivots.len() && self.pivots[k] == c {
                k += 1;
            } else {
                free.push(c);
            }
        }
        free
    }
}

/// Coordinates on a quotient `Z / H` of two nested spans.
///
/// `H` is supplied first; every vector of `Z` that is new modulo what came
/// before becomes a representative of the quotient basis.
#[derive(Clone, Debug)]
pub struct QuotientReducer<F> {
    width: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    tags: Vec<Vec<F>>,
    reps: Vec<Vec<F>>,
}

impl<F: Field> QuotientReducer<F> {
    pub fn new(width: usize) -> Self {
        QuotientReducer { width, rows: Vec::new(), pivots: Vec::new(), tags: Vec::new(), reps: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Representatives of the quotient basis.
    pub fn reps(&self) -> &[Vec<F>] {
        &self.reps
    }

    fn reduce_tracked(&self, mut v: Vec<F>) -> (Vec<F>, Vec<F>) {
        let mut tag = vec![F::zero(); self.reps.len()];
        for ((row, &p), t) in self.rows.iter().zip(&self.pivots).zip(&self.tags) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (j, r) in row.iter().enumerate().skip(p) {
                    v[j].sub_mul_assign(&c, r);
                }
                for (k, x) in t.iter().enumerate() {
                    tag[k].add_assign(&c.mul(x));
                }
            }
        }
        (v, tag)
    }

    fn push_row(&mut self, mut v: Vec<F>, mut tag: Vec<F>) {
        let p = v.iter().position(|x| !x.is_zero()).expect("nonzero row");
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut().skip(p) {
            *x = x.mul(&inv);
        }
        for x in tag.iter_mut() {
            *x = x.mul(&inv);
        }
        let k = self.reps.len();
        for (row, t) in self.rows.iter_mut().zip(self.tags.iter_mut()) {
            t.resize(k, F::zero());
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (j, x) in v.iter().enumerate().skip(p) {
                    row[j].sub_mul_assign(&c, x);
                }
                for (j, x) in tag.iter().enumerate() {
                    t[j].sub_mul_assign(&c, x);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        self.tags.insert(pos, tag);
    }

    /// Adds a vector that is zero in the quotient.
    pub fn kill(&mut self, v: Vec<F>) {
        assert_eq!(v.len(), self.width);
        let (r, tag) = self.reduce_tracked(v);
        if !is_zero_vec(&r) {
            let neg: Vec<F> = tag.iter().map(F::neg).collect();
            self.push_row(r, neg);
        }
    }

    /// Adds a vector of `Z`; returns true if it extended the quotient basis.
    pub fn extend(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.width);
        let (r, tag) = self.reduce_tracked(v.clone());
        if is_zero_vec(&r) {
            return false;
        }
        let k = self.reps.len();
        self.reps.push(v);
        let mut t: Vec<F> = tag.iter().map(F::neg).collect();
        t.push(F::one());
        debug_assert_eq!(t.len(), k + 1);
        self.push_row(r, t);
        true
    }

    /// Coordinates of `v` in the quotient basis, or `None` if `v` is outside `Z`.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let (r, mut tag) = self.reduce_tracked(v.to_vec());
        if !is_zero_vec(&r) {
            return None;
        }
        tag.resize(self.reps.len(), F::zero());
        Some(tag)
    }
}

/// Fraction-free determinant of an integer matrix.
pub fn int_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut sign = 1;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Leading principal minors, computed independently.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            int_det(&sub)
        })
        .collect()
}

/// Sylvester's criterion for a symmetric integer matrix.
pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    for i in 0..n {
        for j in 0..n {
            if m[i][j] != m[j][i] {
                return false;
            }
        }
    }
    leading_minors(m).iter().all(|d| d.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};
    use proptest::prelude::*;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        let c = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), c)
    }

    #[test]
    fn nullspace_and_rank() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(is_zero_vec(&m.mul_vec(&v)));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn bareiss_matches_known() {
        assert_eq!(int_det(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]), BigInt::from(4));
        assert_eq!(int_det(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert!(is_positive_definite(&[vec![2, 1], vec![1, 2]]));
        assert!(!is_positive_definite(&[vec![1, 1], vec![1, 1]]));
    }

    #[test]
    fn quotient_coordinates() {
        let mut qr = QuotientReducer::<Q>::new(3);
        qr.kill(vec![q(1), q(1), q(0)]);
        assert!(qr.extend(vec![q(1), q(0), q(0)]));
        assert!(!qr.extend(vec![q(0), q(1), q(0)]));
        assert!(qr.extend(vec![q(0), q(0), q(1)]));
        assert_eq!(qr.coords(&[q(0), q(2), q(5)]).unwrap(), vec![q(-2), q(5)]);
        assert_eq!(qr.coords(&[q(3), q(3), q(0)]).unwrap(), vec![q(0), q(0)]);
    }

    #[test]
    fn prime_field_rank() {
        let m: Matrix<Fp<2>> = Matrix::from_rows(
            vec![vec![Fp::new(1), Fp::new(1)], vec![Fp::new(1), Fp::new(1)]],
            2,
        );
        assert_eq!(m.rank(), 1);
    }

    /// Cofactor expansion, an independent determinant.
    fn cofactor_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut s = 0i128;
        for j in 0..n {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let t = m[0][j] as i128 * cofactor_det(&minor);
            s += if j % 2 == 0 { t } else { -t };
        }
        s
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_cofactors(n in 1usize..5, seed in proptest::collection::vec(-9i64..10, 16)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 4 + j]).collect()).collect();
            prop_assert_eq!(int_det(&m), BigInt::from(cofactor_det(&m)));
        }

        #[test]
        fn echelon_rank_matches_rref(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 4), 0..6)) {
            let vs: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let e = Echelon::from_vectors(4, &vs);
            let m = Matrix::from_rows(vs.clone(), 4);
            prop_assert_eq!(e.rank(), m.rank());
            for v in &vs {
                prop_assert!(e.contains(v));
            }
        }
    }
}
