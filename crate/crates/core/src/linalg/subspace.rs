use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Matrix;
use crate::error::{Error, Result};
use crate::field::Field;

/// Subspace of `F^n`, stored as a basis in reduced row-echelon form.
///
/// The echelon form is unique, so two subspaces are equal exactly when
/// their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    /// `dim x ambient`, rows in RREF.
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

/// A complement of a subspace together with the quotient projection.
#[derive(Clone, Debug)]
pub struct QuotientBasis<F> {
    /// Ambient coordinates of the complement basis vectors (unit vectors at
    /// the non-pivot positions), as columns: `ambient x q`.
    pub lift: Matrix<F>,
    /// Projection onto quotient coordinates: `q x ambient`.
    pub projection: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let m = Matrix::from_rows_with_cols(vectors.to_vec(), Some(ambient));
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix<F>) -> Self {
        let e = m.echelon();
        Subspace { ambient: m.cols(), basis: e.rref, pivots: e.pivots }
    }

    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn kernel(m: &Matrix<F>) -> Self {
        Self::span(m.cols(), &m.kernel_vectors())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as columns: `ambient x dim`, the inclusion map.
    pub fn embedding(&self) -> Matrix<F> {
        self.basis.transpose()
    }

    /// Coordinates with respect to the canonical basis, `dim x ambient`.
    /// Only meaningful on vectors of the subspace, where it inverts
    /// [`Subspace::embedding`].
    pub fn coordinates(&self) -> Matrix<F> {
        let mut c = Matrix::zeros(self.dim(), self.ambient);
        for (r, &p) in self.pivots.iter().enumerate() {
            c[(r, p)] = F::one();
        }
        c
    }

    /// The subspace re-expressed through the canonical procedure.
    pub fn canonicalize(&self) -> Self {
        Self::row_space(&self.basis)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // Solve sum a_i u_i = sum b_j w_j.
        let stacked = self.basis.vstack(&other.basis.scale(&-F::one())).transpose();
        let coeffs = stacked.kernel_vectors();
        let vectors: Vec<Vec<F>> = coeffs
            .iter()
            .map(|c| self.embedding().apply(&c[..self.dim()]))
            .collect();
        Ok(Self::span(self.ambient, &vectors))
    }

    /// Reduces `v` modulo the subspace; zero exactly when `v` lies in it.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (j, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    w[j] -= f.clone() * b.clone();
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.row_vecs().iter().all(|v| self.contains_vector(v)))
    }

    /// Whether every column of `m` lies in the subspace.
    pub fn contains_columns(&self, m: &Matrix<F>) -> bool {
        assert_eq!(m.rows(), self.ambient);
        (0..m.cols()).all(|j| self.contains_vector(&m.column(j)))
    }

    /// Complement spanned by the unit vectors at non-pivot positions, and
    /// the projection `F^n -> F^n / self` in those coordinates.
    pub fn quotient_basis(&self) -> QuotientBasis<F> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&j| !is_pivot[j]).collect();
        let mut lift = Matrix::zeros(self.ambient, free.len());
        for (k, &j) in free.iter().enumerate() {
            lift[(j, k)] = F::one();
        }
        // Column j of the projection is e_j reduced modulo the subspace,
        // read off at the free positions.
        let mut projection = Matrix::zeros(free.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![F::zero(); self.ambient];
            e[j] = F::one();
            let r = self.reduce(&e);
            for (k, &f) in free.iter().enumerate() {
                projection[(k, j)] = r[f].clone();
            }
        }
        QuotientBasis { lift, projection }
    }

    /// Image under a linear map with `ambient` columns.
    pub fn image(&self, map: &Matrix<F>) -> Self {
        assert_eq!(map.cols(), self.ambient);
        Self::column_space(&map.mul(&self.embedding()))
    }

    /// Preimage under a linear map with `ambient` rows.
    pub fn preimage(&self, map: &Matrix<F>) -> Self {
        assert_eq!(map.rows(), self.ambient);
        let q = self.quotient_basis();
        Self::kernel(&q.projection.mul(map))
    }

    /// Total order used for deterministic output: by dimension, then by
    /// the canonical basis entries.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| {
                for i in 0..self.dim() {
                    for (a, b) in self.basis.row(i).iter().zip(other.basis.row(i)) {
                        match a.cmp(b) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                    }
                }
                Ordering::Equal
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use proptest::prelude::*;

    type S = Subspace<Rational>;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn coordinate_lines() {
        let a = S::span(2, &[v(&[1, 0])]);
        let b = S::span(2, &[v(&[0, 1])]);
        assert!(a.sum(&b).unwrap().is_full());
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.contains(&a).unwrap());
        assert!(!a.contains(&b).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = S::zero(2);
        let b = S::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let w = S::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let q = w.quotient_basis();
        assert_eq!(q.projection.dims(), (1, 3));
        assert!(q.projection.mul(&w.embedding()).is_zero());
        assert!(q.projection.mul(&q.lift).is_identity());
    }

    #[test]
    fn coordinates_invert_embedding() {
        let w = S::span(4, &[v(&[2, 1, 0, 3]), v(&[0, 0, 5, 1])]);
        assert!(w.coordinates().mul(&w.embedding()).is_identity());
    }

    #[test]
    fn image_and_preimage() {
        let m = Matrix::<Rational>::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let line = S::span(3, &[v(&[1, -1, 0])]);
        assert!(line.image(&m).is_zero());
        let target = S::span(2, &[v(&[0, 1])]);
        let pre = target.preimage(&m);
        assert_eq!(pre, S::span(3, &[v(&[1, -1, 0]), v(&[0, 0, 1])]));
    }

    fn arb_vectors(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..4, n), 0..5)
    }

    proptest! {
        #[test]
        fn modular_law(a in arb_vectors(4), b in arb_vectors(4)) {
            let a: Vec<_> = a.iter().map(|x| v(x)).collect();
            let b: Vec<_> = b.iter().map(|x| v(x)).collect();
            let sa = S::span(4, &a);
            let sb = S::span(4, &b);
            let sum = sa.sum(&sb).unwrap();
            let int = sa.intersect(&sb).unwrap();
            prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + int.dim());
            prop_assert!(sa.contains(&int).unwrap() && sb.contains(&int).unwrap());
            // Independent count of the sum by the rank of the stacked vectors.
            let all: Vec<_> = a.iter().chain(b.iter()).cloned().collect();
            prop_assert_eq!(Matrix::from_rows_with_cols(all, Some(4)).rank(), sum.dim());
        }

        #[test]
        fn canonical_form_is_idempotent(a in arb_vectors(5)) {
            let a: Vec<_> = a.iter().map(|x| v(x)).collect();
            let s = S::span(5, &a);
            prop_assert_eq!(s.canonicalize(), s.clone());
            // Order of spanning vectors is irrelevant.
            let mut rev = a.clone();
            rev.reverse();
            prop_assert_eq!(S::span(5, &rev), s);
        }

        #[test]
        fn rank_nullity(rows in proptest::collection::vec(proptest::collection::vec(0i64..7, 5), 1..5)) {
            let m = Matrix::<Fp<7>>::from_rows(rows.iter().map(|r| r.iter().map(|&x| Fp::new(x)).collect()).collect());
            let k = Subspace::kernel(&m);
            prop_assert_eq!(m.rank() + k.dim(), m.cols());
            prop_assert!(m.mul(&k.embedding()).is_zero());
            prop_assert_eq!(Subspace::column_space(&m).dim(), m.rank());
        }
    }
}
