//! Dense exact linear and multilinear algebra.

mod composite;
mod matrix;
mod subspace;
mod tensor;

pub use composite::Composite;
pub use matrix::{Echelon, Matrix};
pub use subspace::{QuotientBasis, Subspace};
pub use tensor::{Tensor, Tensor3};

/// Splits a flat tensor index into its per-factor components.
pub(crate) fn decode(mut flat: usize, dims: &[usize], out: &mut [usize]) {
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
}
