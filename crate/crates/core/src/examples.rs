//! Built-in surjections used by tests and the command line.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::hopf::{
    build_function_algebra, build_group_algebra, build_sweedler, check_hopf_surjection, FinHopfAlgebra,
    HopfSurjection,
};
use crate::linalg::Matrix;

/// Names accepted by [`example`].
pub const EXAMPLES: [&str; 5] = ["sweedler", "kz2", "fz2", "fs3", "fs3_k12"];

/// A named surjection `π: P -> H`:
///
/// - `sweedler`: `H4 -> kZ2`, `g ↦ u`, `x ↦ 0`
/// - `kz2`: `ε: kZ2 -> k`
/// - `fz2`: `ε: k(Z2) -> k`
/// - `fs3`: `ε: k(S3) -> k`
/// - `fs3_k12`: restriction `k(S3) -> k(K)` with `K = {e, (12)}`
pub fn example<F: Field>(name: &str) -> Result<HopfSurjection<F>> {
    match name {
        "sweedler" => Ok(sweedler_to_kz2()),
        "kz2" => Ok(counit_surjection(build_group_algebra(&FiniteGroup::cyclic(2)).with_name("kZ2"))),
        "fz2" => Ok(counit_surjection(build_function_algebra(&FiniteGroup::cyclic(2)).with_name("k(Z2)"))),
        "fs3" => Ok(counit_surjection(build_function_algebra(&FiniteGroup::symmetric3()).with_name("k(S3)"))),
        "fs3_k12" => Ok(function_restriction(&FiniteGroup::symmetric3(), &[0, 1], "k(S3)", "k(K)")),
        _ => Err(Error::Invalid(alloc::format!("unknown example {name:?}; known: {}", EXAMPLES.join(", ")))),
    }
}

fn counit_surjection<F: Field>(p: FinHopfAlgebra<F>) -> HopfSurjection<F> {
    HopfSurjection::counit(Arc::new(p))
}

/// `H4 -> kZ2` with `1, g ↦ 1, u` and `x, gx ↦ 0`.
pub fn sweedler_to_kz2<F: Field>() -> HopfSurjection<F> {
    let p = Arc::new(build_sweedler::<F>());
    let h = Arc::new(build_group_algebra::<F>(&FiniteGroup::cyclic(2)).with_name("kZ2"));
    let m = Matrix::from_fn(2, 4, |i, j| if i == j { F::one() } else { F::zero() });
    check_hopf_surjection(p, h, m).expect("H4 -> kZ2")
}

/// Restriction of functions `k(G) -> k(K)` to the subgroup formed by
/// `elements`.
pub fn function_restriction<F: Field>(g: &FiniteGroup, elements: &[usize], p_name: &str, h_name: &str) -> HopfSurjection<F> {
    let (k, emb) = g.subgroup(elements).expect("subgroup");
    let p = Arc::new(build_function_algebra::<F>(g).with_name(p_name));
    let h = Arc::new(build_function_algebra::<F>(&k).with_name(h_name));
    let mut m = Matrix::zeros(k.order(), g.order());
    for (i, &e) in emb.iter().enumerate() {
        m[(i, e)] = F::one();
    }
    check_hopf_surjection(p, h, m).expect("restriction of functions")
}

/// All built-in examples with their names.
pub fn all_examples<F: Field>() -> Vec<(String, HopfSurjection<F>)> {
    EXAMPLES.iter().map(|n| (String::from(*n), example(n).expect("built-in example"))).collect()
}
