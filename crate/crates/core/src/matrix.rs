//! Dense matrices over a generic ring, with the exact kernels the escape
//! pipeline needs: multiplication, right null spaces, characteristic and
//! minimal polynomials. Everything here is immutable after construction and
//! deterministic.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::num::{Field, Rational, Ring};
use crate::poly::Poly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|v| v.clone() * c.clone())
    }

    /// Exact product; errors when inner dimensions disagree.
    pub fn mul_checked(&self, other: &Matrix<T>) -> Result<Matrix<T>, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, t);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        self.mul_checked(other).expect("matrix dimension mismatch")
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(v: &[T], m: &Matrix<T>) -> Vec<T> {
        assert_eq!(v.len(), m.rows);
        (0..m.cols)
            .map(|j| {
                let mut acc = T::zero();
                for i in 0..m.rows {
                    acc = acc + v[i].clone() * m.get(i, j).clone();
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    /// Evaluate a polynomial at this (square) matrix.
    pub fn poly_eval(&self, p: &Poly<T>) -> Matrix<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let t = acc.get(i, i).clone() + c.clone();
                acc.set(i, i, t);
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Matrix<T> {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let a = self.get(r, j).clone();
                let b = self.get(pr, j).clone();
                self.set(r, j, b);
                self.set(pr, j, a);
            }
            let inv = self.get(r, c).inv();
            for j in 0..self.cols {
                let t = self.get(r, j).clone() * inv.clone();
                self.set(r, j, t);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let t = self.get(i, j).clone() - f.clone() * self.get(r, j).clone();
                        self.set(i, j, t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Exact basis of the right null space. Empty iff the matrix is
    /// injective; `dim kernel + rank = cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![T::zero(); self.cols];
            v[fc] = T::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial `det(xI - A)` by the Faddeev-LeVerrier
    /// recurrence; monic of degree `dim`, exact.
    pub fn char_poly(&self) -> Result<Poly<T>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Matrix::<T>::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -(m.trace() / T::from_i64(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                let t = m.get(i, i).clone() + c.clone();
                m.set(i, i, t);
            }
        }
        Ok(Poly::new(coeffs))
    }
}

/// Minimal polynomial of an exact rational matrix: monic least-degree
/// annihilator. Computed by factoring the characteristic polynomial into
/// irreducibles and finding the least exponent of each factor whose kernel
/// chain stabilizes, then verified by an annihilation test.
pub fn min_poly(a: &Matrix<Rational>) -> Result<Poly<Rational>, MatrixError> {
    let cp = a.char_poly()?;
    let factors = crate::factor::factor_poly(&cp).expect("char poly is nonzero");
    let mut m = Poly::one();
    for (f, mult) in &factors {
        let fa = a.poly_eval(f);
        // least e with dim ker f(A)^e stable (equivalently = multiplicity's)
        let mut e = 1;
        let mut power = fa.clone();
        let mut prev_dim = power.kernel_basis().len();
        while e < *mult {
            let next = power.mul(&fa);
            let dim = next.kernel_basis().len();
            if dim == prev_dim {
                break;
            }
            power = next;
            prev_dim = dim;
            e += 1;
        }
        m = &m * &f.pow(e);
    }
    debug_assert!(a.poly_eval(&m).is_zero_matrix(), "min poly must annihilate");
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_i64, rat_int};

    fn qmat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    fn qpoly(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn identity_product() {
        let i2 = Matrix::<Rational>::identity(2);
        assert_eq!(i2.mul(&i2), i2);
    }

    #[test]
    fn rotation_squared() {
        let r = qmat(&[&[0, 1], &[-1, 0]]);
        assert_eq!(r.mul(&r), qmat(&[&[-1, 0], &[0, -1]]));
    }

    #[test]
    fn one_by_one_product() {
        let a = Matrix::new(1, 1, vec![rat_i64(2, 3)]);
        let b = Matrix::new(1, 1, vec![rat_i64(3, 4)]);
        assert_eq!(a.mul(&b), Matrix::new(1, 1, vec![rat_i64(1, 2)]));
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = Matrix::<Rational>::zero(2, 3);
        let b = Matrix::<Rational>::zero(2, 3);
        assert!(matches!(
            a.mul_checked(&b),
            Err(MatrixError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let z = Matrix::<Rational>::zero(2, 2);
        assert_eq!(z.kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let i2 = Matrix::<Rational>::identity(2);
        assert!(i2.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = qmat(&[&[1, 1], &[1, 1]]);
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 1);
        // proportional to (1, -1)
        let v = &basis[0];
        assert_eq!(v[0], -v[1].clone());
        assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            qmat(&[&[0, 1], &[-1, 0]]).char_poly().unwrap(),
            qpoly(&[1, 0, 1])
        );
        assert_eq!(
            Matrix::<Rational>::identity(2).char_poly().unwrap(),
            qpoly(&[1, -2, 1])
        );
        assert_eq!(
            qmat(&[&[1, 0], &[0, 2]]).char_poly().unwrap(),
            qpoly(&[2, -3, 1])
        );
    }

    #[test]
    fn char_poly_rejects_non_square() {
        assert!(Matrix::<Rational>::zero(2, 3).char_poly().is_err());
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(
            min_poly(&Matrix::<Rational>::identity(2)).unwrap(),
            qpoly(&[-1, 1])
        );
        assert_eq!(
            min_poly(&qmat(&[&[1, 1], &[0, 1]])).unwrap(),
            qpoly(&[1, -2, 1])
        );
        assert_eq!(
            min_poly(&qmat(&[&[1, 0], &[0, 2]])).unwrap(),
            qpoly(&[2, -3, 1])
        );
    }

    #[test]
    fn cayley_hamilton_and_min_poly_annihilate_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let d = rng.gen_range(1..=6);
            let a = Matrix::from_rows(
                (0..d)
                    .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
                    .collect(),
            );
            let cp = a.char_poly().unwrap();
            assert!(a.poly_eval(&cp).is_zero_matrix(), "Cayley-Hamilton");
            let mp = min_poly(&a).unwrap();
            assert!(a.poly_eval(&mp).is_zero_matrix());
            // min poly divides char poly
            let (_, r) = cp.divrem(&mp);
            assert!(r.is_zero_poly());
        }
    }

    #[test]
    fn kernel_rank_nullity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let r = rng.gen_range(1..=5);
            let c = rng.gen_range(1..=5);
            let a = Matrix::from_rows(
                (0..r)
                    .map(|_| (0..c).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                    .collect(),
            );
            let basis = a.kernel_basis();
            assert_eq!(basis.len() + a.rank(), c);
            for v in &basis {
                assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
