use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;

/// Dense row-major matrix.
///
/// A linear map `V -> W` is stored as a `dim W x dim V` matrix acting on
/// column vectors. Tensor products of spaces use the lexicographic basis
/// order, `(v, w) -> v * dim W + w`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    /// The reduced row-echelon form, zero rows removed.
    pub rref: Matrix<F>,
    /// Pivot column of each row of `rref`.
    pub pivots: Vec<usize>,
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

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        Self::from_rows_with_cols(rows, None)
    }

    /// Like [`Matrix::from_rows`], but keeps the column count when there are
    /// no rows.
    pub fn from_rows_with_cols(rows: Vec<Vec<F>>, cols: Option<usize>) -> Self {
        let ncols = cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
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

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect())
    }

    /// `n x 1` matrix.
    pub fn column_vector(v: &[F]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// `1 x n` matrix.
    pub fn row_vector(v: &[F]) -> Self {
        Matrix { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product, skipping zero entries of both factors.
    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_product(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.dims(), rhs.dims());
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.dims(), rhs.dims());
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `rhs`.
    pub fn vstack(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Places `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, rhs.rows);
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix<F> {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a[(r, c)].inv().expect("nonzero pivot");
            for j in c..a.cols {
                let v = a[(r, j)].clone();
                a[(r, j)] = v * inv.clone();
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    let t = f.clone() * a[(r, j)].clone();
                    a[(i, j)] -= t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.data.truncate(r * a.cols);
        a.rows = r;
        Echelon { rref: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the null space, one vector per free column, in the
    /// standard parametrisation (free variable = 1, other free variables 0).
    pub fn kernel_vectors(&self) -> Vec<Vec<F>> {
        let Echelon { rref, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rref[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| rref[(i, n + j)].clone()))
    }

    /// Some `X` with `self * X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = rref[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// First column where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix<F>) -> Option<usize> {
        assert_eq!(self.dims(), other.dims());
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self[(i, j)] != other[(i, j)]))
    }

    /// `n x n` matrix of the permutation of tensor factors. The output
    /// factor `i` is the input factor `perm[i]`.
    pub fn tensor_permutation(dims: &[usize], perm: &[usize]) -> Matrix<F> {
        let total: usize = dims.iter().product();
        let mut m = Matrix::zeros(total, total);
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut idx = vec![0usize; dims.len()];
        for col in 0..total {
            crate::linalg::decode(col, dims, &mut idx);
            let mut row = 0;
            for (k, &p) in perm.iter().enumerate() {
                row = row * out_dims[k] + idx[p];
            }
            m[(row, col)] = F::one();
        }
        m
    }
}

impl<F> core::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> core::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type M = Matrix<Rational>;

    #[test]
    fn rank_and_kernel_of_identity_and_zero() {
        let id = M::identity(3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_vectors().is_empty());
        let z = M::zeros(2, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_vectors().len(), 4);
    }

    #[test]
    fn rank_one_kernel() {
        let m = M::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_vectors();
        assert_eq!(k.len(), 1);
        // Proportional to (2, -1).
        assert_eq!(k[0], vec![Rational::from(-2), Rational::from(1)]);
    }

    #[test]
    fn inverse_and_solve() {
        let m = M::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(M::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let rhs = M::from_i64(&[&[3], &[2]]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul(&x), rhs);
        let sing = M::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&M::from_i64(&[&[1], &[0]])).is_none());
    }

    #[test]
    fn kron_mixed_product() {
        let a = M::from_i64(&[&[1, 2], &[0, 1]]);
        let b = M::from_i64(&[&[0, 1], &[1, 3]]);
        let c = M::from_i64(&[&[2, 0], &[1, 1]]);
        let d = M::from_i64(&[&[1, -1], &[0, 2]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn permutation_swaps_factors() {
        let swap = M::tensor_permutation(&[2, 3], &[1, 0]);
        let a = M::from_i64(&[&[1, 2], &[3, 4]]);
        let b = M::from_i64(&[&[1, 0, 2], &[0, 1, 0], &[5, 0, 1]]);
        // tau (a ⊗ b) = (b ⊗ a) tau
        let back = M::tensor_permutation(&[3, 2], &[1, 0]);
        assert_eq!(swap.mul(&a.kron(&b)), b.kron(&a).mul(&swap));
        assert!(back.mul(&swap).is_identity());
    }
}
