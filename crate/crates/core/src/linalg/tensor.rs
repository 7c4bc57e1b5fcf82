use alloc::vec;
use alloc::vec::Vec;

use super::{decode, Matrix};
use crate::error::{Error, Result};
use crate::field::Field;

/// Dense tensor with an arbitrary number of indices, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor<F> {
    shape: Vec<usize>,
    data: Vec<F>,
}

/// Three-index tensor, the storage of structure constants.
///
/// For a multiplication, `t[(i, j, k)]` is the coefficient of `e_k` in
/// `e_i e_j`; for a comultiplication it is the coefficient of `e_j ⊗ e_k` in
/// `Δ(e_i)`.
pub type Tensor3<F> = Tensor<F>;

impl<F: Field> Tensor<F> {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Tensor { shape: shape.to_vec(), data: vec![F::zero(); n] }
    }

    pub fn from_vec(shape: &[usize], data: Vec<F>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::DimensionMismatch { context: "tensor entries", expected: n, found: data.len() });
        }
        Ok(Tensor { shape: shape.to_vec(), data })
    }

    pub fn scalar(v: F) -> Self {
        Tensor { shape: Vec::new(), data: vec![v] }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &F {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: F) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    /// Nonzero entries with their multi-indices, in storage order.
    pub fn nonzeros(&self) -> Vec<(Vec<usize>, F)> {
        let mut idx = vec![0; self.shape.len()];
        let mut out = Vec::new();
        for (o, v) in self.data.iter().enumerate() {
            if !v.is_zero() {
                decode(o, &self.shape, &mut idx);
                out.push((idx.clone(), v.clone()));
            }
        }
        out
    }

    /// Reads the tensor as a matrix whose rows are indexed by the
    /// `row_axes` and columns by the remaining axes, each group in the
    /// given order.
    pub fn to_matrix(&self, row_axes: &[usize], col_axes: &[usize]) -> Matrix<F> {
        assert_eq!(row_axes.len() + col_axes.len(), self.rank());
        let rows: usize = row_axes.iter().map(|&a| self.shape[a]).product();
        let cols: usize = col_axes.iter().map(|&a| self.shape[a]).product();
        let mut m = Matrix::zeros(rows, cols);
        for (idx, v) in self.nonzeros() {
            let r = row_axes.iter().fold(0, |acc, &a| acc * self.shape[a] + idx[a]);
            let c = col_axes.iter().fold(0, |acc, &a| acc * self.shape[a] + idx[a]);
            m[(r, c)] = v;
        }
        m
    }

    /// Inverse of [`Tensor::to_matrix`].
    pub fn from_matrix(m: &Matrix<F>, shape: &[usize], row_axes: &[usize], col_axes: &[usize]) -> Self {
        let mut t = Self::zeros(shape);
        let row_dims: Vec<usize> = row_axes.iter().map(|&a| shape[a]).collect();
        let col_dims: Vec<usize> = col_axes.iter().map(|&a| shape[a]).collect();
        let mut ri = vec![0; row_axes.len()];
        let mut ci = vec![0; col_axes.len()];
        let mut idx = vec![0; shape.len()];
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let v = &m[(r, c)];
                if v.is_zero() {
                    continue;
                }
                decode(r, &row_dims, &mut ri);
                decode(c, &col_dims, &mut ci);
                for (k, &a) in row_axes.iter().enumerate() {
                    idx[a] = ri[k];
                }
                for (k, &a) in col_axes.iter().enumerate() {
                    idx[a] = ci[k];
                }
                t.set(&idx, v.clone());
            }
        }
        t
    }

    pub fn from_matrix_plain(m: &Matrix<F>) -> Self {
        Tensor { shape: vec![m.rows(), m.cols()], data: (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect() }
    }

    /// Contracts pairs of indices `(a, b)` of `self` and `other`. The result
    /// carries the free indices of `self` followed by those of `other`, in
    /// their original order.
    pub fn contract(&self, other: &Tensor<F>, pairs: &[(usize, usize)]) -> Result<Tensor<F>> {
        for &(a, b) in pairs {
            if a >= self.rank() || b >= other.rank() {
                return Err(Error::Invalid("contraction axis out of range".into()));
            }
            if self.shape[a] != other.shape[b] {
                return Err(Error::DimensionMismatch {
                    context: "contracted extent",
                    expected: self.shape[a],
                    found: other.shape[b],
                });
            }
        }
        let free_a: Vec<usize> = (0..self.rank()).filter(|i| !pairs.iter().any(|p| p.0 == *i)).collect();
        let free_b: Vec<usize> = (0..other.rank()).filter(|i| !pairs.iter().any(|p| p.1 == *i)).collect();
        let con_a: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let con_b: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let left = self.to_matrix(&free_a, &con_a);
        let right = other.to_matrix(&con_b, &free_b);
        let prod = left.mul(&right);
        let shape: Vec<usize> = free_a
            .iter()
            .map(|&a| self.shape[a])
            .chain(free_b.iter().map(|&b| other.shape[b]))
            .collect();
        let rows = free_a.len();
        let row_axes: Vec<usize> = (0..rows).collect();
        let col_axes: Vec<usize> = (rows..shape.len()).collect();
        Ok(Self::from_matrix(&prod, &shape, &row_axes, &col_axes))
    }

    /// Applies `m` (a `d' x d` matrix) to one index of extent `d`.
    pub fn apply_to_axis(&self, axis: usize, m: &Matrix<F>) -> Result<Tensor<F>> {
        let mt = Tensor::from_matrix_plain(m);
        let t = mt.contract(self, &[(1, axis)])?;
        // The new index comes first; move it back into place.
        let mut perm: Vec<usize> = (1..t.rank()).collect();
        perm.insert(axis, 0);
        Ok(t.permute(&perm))
    }

    /// New tensor whose axis `i` is axis `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor<F> {
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut out = Tensor::zeros(&shape);
        let mut idx = vec![0; perm.len()];
        for (src, v) in self.nonzeros() {
            for (k, &p) in perm.iter().enumerate() {
                idx[k] = src[p];
            }
            out.set(&idx, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    /// Multiplication of k[x]/(x^2): basis 1, x.
    fn dual_numbers() -> Tensor<Rational> {
        let mut m = Tensor::zeros(&[2, 2, 2]);
        m.set(&[0, 0, 0], r(1));
        m.set(&[0, 1, 1], r(1));
        m.set(&[1, 0, 1], r(1));
        m
    }

    #[test]
    fn contracting_with_unit_gives_identity() {
        let m = dual_numbers();
        let unit = Tensor::from_vec(&[2], vec![r(1), r(0)]).unwrap();
        let left = unit.contract(&m, &[(0, 0)]).unwrap();
        assert_eq!(left.to_matrix(&[1], &[0]), Matrix::identity(2));
        let right = m.contract(&unit, &[(1, 0)]).unwrap();
        assert_eq!(right.to_matrix(&[1], &[0]), Matrix::identity(2));
    }

    #[test]
    fn extent_mismatch_is_rejected() {
        let a = Tensor::<Rational>::zeros(&[2, 3]);
        let b = Tensor::<Rational>::zeros(&[2, 2]);
        assert!(matches!(a.contract(&b, &[(1, 0)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn contraction_order_independence() {
        // (A B) C == A (B C) for small integer tensors.
        let a = Tensor::from_vec(&[2, 3], (0..6).map(|v| r(v - 2)).collect()).unwrap();
        let b = Tensor::from_vec(&[3, 2, 2], (0..12).map(|v| r((v * 7) % 5 - 2)).collect()).unwrap();
        let c = Tensor::from_vec(&[2, 2], vec![r(1), r(-1), r(3), r(2)]).unwrap();
        let ab_c = a.contract(&b, &[(1, 0)]).unwrap().contract(&c, &[(2, 0)]).unwrap();
        let bc = b.contract(&c, &[(2, 0)]).unwrap();
        let a_bc = a.contract(&bc, &[(1, 0)]).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn matrix_round_trip() {
        let m = dual_numbers();
        let mat = m.to_matrix(&[2], &[0, 1]);
        assert_eq!(Tensor::from_matrix(&mat, &[2, 2, 2], &[2], &[0, 1]), m);
        let t = m.apply_to_axis(2, &Matrix::identity(2)).unwrap();
        assert_eq!(t, m);
    }
}
