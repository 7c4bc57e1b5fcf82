use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{decode, Matrix};
use crate::field::Field;

/// A linear map into a tensor product of spaces, built by applying maps to
/// individual tensor factors and permuting factors.
///
/// This is how composite structure maps such as `(m ⊗ π) ∘ (id ⊗ Δ)` are
/// evaluated. Columns are kept sparse, so chains through large tensor
/// powers stay cheap.
///
/// ```
/// use hopfhom_core::field::Rational;
/// use hopfhom_core::linalg::{Composite, Matrix};
///
/// let swap = Composite::<Rational>::identity(&[2, 3]).permute(&[1, 0]);
/// assert_eq!(swap.dims(), &[3, 2]);
/// assert_eq!(swap.matrix(), Matrix::tensor_permutation(&[2, 3], &[1, 0]));
/// ```
#[derive(Clone, Debug)]
pub struct Composite<F> {
    dims: Vec<usize>,
    cols: Vec<Vec<(usize, F)>>,
}

fn sparse_columns<F: Field>(m: &Matrix<F>) -> Vec<Vec<(usize, F)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for i in 0..m.rows() {
        for (j, col) in cols.iter_mut().enumerate() {
            let v = &m[(i, j)];
            if !v.is_zero() {
                col.push((i, v.clone()));
            }
        }
    }
    cols
}

impl<F: Field> Composite<F> {
    /// The identity map of `dims[0] ⊗ dims[1] ⊗ ...`.
    pub fn identity(dims: &[usize]) -> Self {
        let n: usize = dims.iter().product();
        let cols = (0..n).map(|i| vec![(i, F::one())]).collect();
        Composite { dims: dims.to_vec(), cols }
    }

    /// Starts from a given map whose target is `out_dims[0] ⊗ ...`.
    pub fn from_map(m: &Matrix<F>, out_dims: &[usize]) -> Self {
        assert_eq!(m.rows(), out_dims.iter().product::<usize>(), "output dims do not match map");
        Composite { dims: out_dims.to_vec(), cols: sparse_columns(m) }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn input_dim(&self) -> usize {
        self.cols.len()
    }

    pub fn output_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Replaces factors `at .. at + span` by the image of `map`, which
    /// becomes the factors `out_dims`. A `span` of zero inserts new factors
    /// (the map is then a set of column vectors of width one).
    pub fn apply(self, at: usize, span: usize, map: &Matrix<F>, out_dims: &[usize]) -> Self {
        assert!(at + span <= self.dims.len(), "factor range out of bounds");
        let mid: usize = self.dims[at..at + span].iter().product();
        let suffix: usize = self.dims[at + span..].iter().product();
        let new_mid: usize = out_dims.iter().product();
        assert_eq!(map.cols(), mid, "map input does not match factors {at}..{}", at + span);
        assert_eq!(map.rows(), new_mid, "map output does not match out_dims");
        let map_cols = sparse_columns(map);
        let cols = self
            .cols
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (r, v) in col {
                    let s = r % suffix;
                    let m = (r / suffix) % mid;
                    let prefix = r / (suffix * mid);
                    for (nr, mv) in &map_cols[m] {
                        let idx = (prefix * new_mid + nr) * suffix + s;
                        acc.entry(idx).or_insert_with(F::zero).add_product(&v, mv);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        let mut dims = self.dims[..at].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[at + span..]);
        Composite { dims, cols }
    }

    /// Applies a map to a single factor, keeping its position.
    pub fn on(self, at: usize, map: &Matrix<F>) -> Self {
        let out = [map.rows()];
        self.apply(at, 1, map, &out)
    }

    /// Inserts a fixed vector as a new factor at position `at`.
    pub fn insert(self, at: usize, v: &[F]) -> Self {
        let m = Matrix::column_vector(v);
        self.apply(at, 0, &m, &[v.len()])
    }

    /// Reorders factors: new factor `i` is old factor `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dims.len());
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut idx = vec![0; self.dims.len()];
        let dims = self.dims;
        let cols = self
            .cols
            .into_iter()
            .map(|col| {
                let mut out: Vec<(usize, F)> = col
                    .into_iter()
                    .map(|(r, v)| {
                        decode(r, &dims, &mut idx);
                        let nr = perm.iter().zip(&new_dims).fold(0, |acc, (&p, &d)| acc * d + idx[p]);
                        (nr, v)
                    })
                    .collect();
                out.sort_by_key(|e| e.0);
                out
            })
            .collect();
        Composite { dims: new_dims, cols }
    }

    /// Swaps factors `i` and `i + 1`.
    pub fn swap(self, i: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.dims.len()).collect();
        perm.swap(i, i + 1);
        self.permute(&perm)
    }

    /// Moves factor `from` to position `to`, shifting the others.
    pub fn move_factor(self, from: usize, to: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.dims.len()).collect();
        let f = perm.remove(from);
        perm.insert(to, f);
        self.permute(&perm)
    }

    /// Precomposes with a map into the current input space.
    pub fn after(self, m: &Matrix<F>) -> Self {
        assert_eq!(m.rows(), self.input_dim());
        let mcols = sparse_columns(m);
        let cols = mcols
            .into_iter()
            .map(|mc| {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (k, a) in mc {
                    for (r, v) in &self.cols[k] {
                        acc.entry(*r).or_insert_with(F::zero).add_product(&a, v);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Composite { dims: self.dims, cols }
    }

    /// First input column on which two maps with the same shape differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        assert_eq!(self.input_dim(), other.input_dim(), "input dimensions differ");
        assert_eq!(self.output_dim(), other.output_dim(), "output dimensions differ");
        (0..self.cols.len()).find(|&j| self.cols[j] != other.cols[j])
    }

    pub fn matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.output_dim(), self.input_dim());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type M = Matrix<Rational>;

    #[test]
    fn apply_on_factor_matches_kron() {
        let a = M::from_i64(&[&[1, 2], &[3, 4], &[0, 1]]);
        let c = Composite::identity(&[2, 2, 3]).on(1, &a);
        let expect = M::identity(2).kron(&a).kron(&M::identity(3));
        assert_eq!(c.matrix(), expect);
        assert_eq!(c.dims(), &[2, 3, 3]);
    }

    #[test]
    fn apply_across_two_factors() {
        // Multiplication of k[x]/x^2 as a 2 x 4 map.
        let m = M::from_i64(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        let c = Composite::identity(&[2, 2, 2]).apply(1, 2, &m, &[2]);
        assert_eq!(c.matrix(), M::identity(2).kron(&m));
    }

    #[test]
    fn insertion_and_after() {
        let v = [Rational::from(1), Rational::from(-1)];
        let c = Composite::<Rational>::identity(&[3]).insert(1, &v);
        assert_eq!(c.matrix(), M::identity(3).kron(&M::column_vector(&v)));
        let p = M::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        let d = Composite::<Rational>::identity(&[3]).after(&p);
        assert_eq!(d.matrix(), p);
    }

    #[test]
    fn move_factor_cycles() {
        let c = Composite::<Rational>::identity(&[2, 3, 4]).move_factor(0, 2);
        assert_eq!(c.dims(), &[3, 4, 2]);
        assert_eq!(c.matrix(), M::tensor_permutation(&[2, 3, 4], &[1, 2, 0]));
    }
}
