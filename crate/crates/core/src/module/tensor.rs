//! Structures on tensor products of covariant modules.

use alloc::format;

use super::{CovariantModule, Law};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Composite, Matrix};

/// Named constructions for [`tensor_structures`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `P ⊗ X` for `P` with its regular structures and a crossed module
    /// `X`: `▷` and `δ_L` on the `P` factor, the diagonal right coaction,
    /// and `(q ⊗ x) ◁ b = q b(1) ⊗ x ◁ b(2)`.
    HopfTensor,
    /// The same construction with `H` in every role (`π = id`), for a
    /// Yetter-Drinfeld module `X`.
    BicovariantTensor,
    /// `P ⊗ E` for a left-covariant bimodule `E` over the base, before the
    /// balancing quotient: `▷` and `δ_R` from `P`, `δ_L` the tensor
    /// product coaction, `◁` on the `E` factor.
    CovariantTensorPreQuotient,
    /// Only the right coaction `y ⊗ x ↦ y(0) ⊗ x(0) ⊗ y(1) x(1)`.
    DiagonalRightCoaction,
}

fn missing(recipe: Recipe, what: &str) -> Error {
    Error::Invalid(format!("{recipe:?} needs {what}"))
}

/// `y ⊗ x ↦ y(0) ⊗ x(0) ⊗ y(1) x(1)`.
fn diagonal<F: Field>(dy: &Matrix<F>, dx: &Matrix<F>, ny: usize, nx: usize, mh: &Matrix<F>, h: usize) -> Matrix<F> {
    Composite::identity(&[ny, nx])
        .apply(0, 1, dy, &[ny, h])
        .apply(2, 1, dx, &[nx, h])
        .move_factor(1, 2)
        .apply(2, 2, mh, &[h])
        .matrix()
}

/// Assembles the structures of `left ⊗ right` according to `recipe`. The
/// result is not verified; callers certify it for its category.
pub fn tensor_structures<F: Field>(
    left: &CovariantModule<F>,
    right: &CovariantModule<F>,
    recipe: Recipe,
) -> Result<CovariantModule<F>> {
    let frame = left.frame().clone();
    let (p, h) = (frame.p().dim(), frame.h().dim());
    let (ny, nx) = (left.dim(), right.dim());
    let n = ny * nx;
    let mh = frame.h().mult();
    let mp = frame.p().mult();
    match recipe {
        Recipe::HopfTensor | Recipe::BicovariantTensor => {
            if recipe == Recipe::BicovariantTensor && !frame.pi().is_identity() {
                return Err(Error::Invalid("bicovariant tensor needs the identity surjection".into()));
            }
            if ny != p {
                return Err(Error::DimensionMismatch { context: "regular tensor factor", expected: p, found: ny });
            }
            let al = left.left_action.as_ref().ok_or_else(|| missing(recipe, "a left action on the left factor"))?;
            let dl = left.left_coaction.as_ref().ok_or_else(|| missing(recipe, "a left coaction on the left factor"))?;
            let dy = left.right_coaction.as_ref().ok_or_else(|| missing(recipe, "a right coaction on the left factor"))?;
            let ax = right.right_action.as_ref().ok_or_else(|| missing(recipe, "a right action on the right factor"))?;
            let dx = right.right_coaction.as_ref().ok_or_else(|| missing(recipe, "a right coaction on the right factor"))?;
            let l = al.acting.dim();
            let r = ax.acting.dim();
            let lam = ax.acting.lambda()?;
            let left_action = Composite::identity(&[l, ny, nx]).apply(0, 2, &al.map, &[ny]).matrix();
            let left_coaction = Composite::identity(&[ny, nx]).apply(0, 1, &dl.map, &[p, ny]).matrix();
            let right_coaction = diagonal(&dy.map, &dx.map, ny, nx, mh, h);
            let right_action = Composite::identity(&[ny, nx, r])
                .apply(2, 1, lam, &[p, r])
                .move_factor(2, 1)
                .apply(0, 2, mp, &[p])
                .apply(1, 2, &ax.map, &[nx])
                .matrix();
            CovariantModule::bare(n, frame)
                .with_left_action(al.acting.clone(), left_action)?
                .with_left_coaction(left_coaction)?
                .with_right_coaction(right_coaction)?
                .with_right_action(ax.acting.clone(), right_action)
                .map(|y| y.with_laws(Law::HOPF_BIMODULE))
        }
        Recipe::CovariantTensorPreQuotient => {
            if ny != p {
                return Err(Error::DimensionMismatch { context: "regular tensor factor", expected: p, found: ny });
            }
            let al = left.left_action.as_ref().ok_or_else(|| missing(recipe, "a left action on the left factor"))?;
            let dy = left.right_coaction.as_ref().ok_or_else(|| missing(recipe, "a right coaction on the left factor"))?;
            let de = right.left_coaction.as_ref().ok_or_else(|| missing(recipe, "a left coaction on the right factor"))?;
            let ae = right.right_action.as_ref().ok_or_else(|| missing(recipe, "a right action on the right factor"))?;
            let l = al.acting.dim();
            let r = ae.acting.dim();
            let left_action = Composite::identity(&[l, ny, nx]).apply(0, 2, &al.map, &[ny]).matrix();
            let left_coaction = Composite::identity(&[ny, nx])
                .apply(0, 1, frame.p().comult(), &[p, p])
                .apply(2, 1, &de.map, &[p, nx])
                .move_factor(2, 1)
                .apply(0, 2, mp, &[p])
                .matrix();
            let right_coaction = Composite::identity(&[ny, nx]).apply(0, 1, &dy.map, &[ny, h]).move_factor(1, 2).matrix();
            let right_action = Composite::identity(&[ny, nx, r]).apply(1, 2, &ae.map, &[nx]).matrix();
            CovariantModule::bare(n, frame)
                .with_left_action(al.acting.clone(), left_action)?
                .with_left_coaction(left_coaction)?
                .with_right_coaction(right_coaction)?
                .with_right_action(ae.acting.clone(), right_action)
                .map(|y| y.with_laws(Law::HOPF_BIMODULE))
        }
        Recipe::DiagonalRightCoaction => {
            let dy = left.right_coaction.as_ref().ok_or_else(|| missing(recipe, "a right coaction on the left factor"))?;
            let dx = right.right_coaction.as_ref().ok_or_else(|| missing(recipe, "a right coaction on the right factor"))?;
            let m = diagonal(&dy.map, &dx.map, ny, nx, mh, h);
            Ok(CovariantModule::bare(n, frame).with_right_coaction(m)?.with_laws(&[Law::RightComodule]))
        }
    }
}
