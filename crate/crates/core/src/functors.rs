//! The equivalences between crossed modules and Hopf bimodules, and
//! between Hopf bimodules and left-covariant bimodules over `B`, with their
//! unit and counit isomorphisms.
//!
//! Every functor returns certified objects: the laws of the target
//! category are re-verified on construction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::check::{Check, Report};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homogeneous::{chi_on_tensor_square, hopf_galois_check, tensor_over_b, QuantumHomogeneousSpace};
use crate::linalg::{Composite, Matrix, Subspace};
use crate::module::{
    check_isomorphism, check_morphism, quotient_module, regular_module, tensor_structures, CovariantModule, Law,
    Recipe,
};

/// A pair of maps claimed to be mutually inverse isomorphisms, with the
/// checks run on them.
#[derive(Clone, Debug)]
pub struct IsoPair<F> {
    pub forward: Matrix<F>,
    pub backward: Matrix<F>,
    pub report: Report,
}

impl<F: Field> IsoPair<F> {
    pub fn is_exact(&self) -> bool {
        self.report.all_passed()
    }
}

/// A module built on a subspace of another, with that subspace.
#[derive(Clone, Debug)]
pub struct Restricted<F> {
    pub module: CovariantModule<F>,
    pub subspace: Subspace<F>,
}

/// A module built on a quotient of another, with the quotient maps.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub module: CovariantModule<F>,
    /// Ambient space to quotient coordinates.
    pub projection: Matrix<F>,
    /// Quotient coordinates to ambient representatives.
    pub lift: Matrix<F>,
}

/// Checks that factor `at` of `map` lies in `w` and rewrites it in the
/// coordinates of `w`.
pub(crate) fn restrict_factor<F: Field>(name: &str, map: Composite<F>, at: usize, w: &Subspace<F>) -> Result<Composite<F>> {
    let outside = map.clone().on(at, &w.quotient_basis().projection).matrix();
    if let Some(col) = outside.first_difference(&Matrix::zeros(outside.rows(), outside.cols())) {
        return Err(Error::law(format!("{name} lands in the subspace"), format!("input {col}")));
    }
    Ok(map.on(at, &w.coordinates()))
}

fn require<'a, T>(what: &str, s: &'a Option<T>) -> Result<&'a T> {
    s.as_ref().ok_or_else(|| Error::Invalid(format!("module has no {what}")))
}

// ---------------------------------------------------------------------------
// Crossed modules and Hopf bimodules
// ---------------------------------------------------------------------------

/// `P ⊗ X` with `▷` and `δ_L` on `P`, the diagonal right coaction and
/// `(q ⊗ x) ◁ b = q b(1) ⊗ x ◁ b(2)`.
pub fn t1_forward<F: Field>(x: &CovariantModule<F>) -> Result<CovariantModule<F>> {
    let regular = regular_module(x.frame());
    let recipe = if x.frame().pi().is_identity() && x.frame().p().dim() > 1 {
        Recipe::BicovariantTensor
    } else {
        Recipe::HopfTensor
    };
    tensor_structures(&regular, x, recipe)?.certified("tensor with P")
}

/// `^P Y` with the inherited right coaction and the new right action
/// `y ◁̃ b = S b(1) ▷ y ◁ b(2)`.
pub fn t1_backward<F: Field>(y: &CovariantModule<F>) -> Result<Restricted<F>> {
    let frame = y.frame().clone();
    let p = frame.p();
    let n = y.dim();
    let al = require("left action", &y.left_action)?;
    let ar = require("right action", &y.right_action)?;
    let dr = require("right coaction", &y.right_coaction)?;
    let w = y.left_coinvariants()?;
    let (e, k) = (w.embedding(), w.dim());
    let r = ar.acting.dim();
    let lambda = ar.acting.lambda.as_ref().ok_or_else(|| Error::Invalid("acting algebra has no λ".into()))?;
    let twisted = Composite::identity(&[k, r])
        .on(0, &e)
        .apply(1, 1, lambda, &[p.dim(), r])
        .move_factor(1, 0)
        .apply(1, 2, &ar.map, &[n])
        .on(0, p.antipode())
        .apply(0, 2, &al.map, &[n]);
    let action = restrict_factor("twisted action", twisted, 0, &w)?.matrix();
    let coaction = restrict_factor("right coaction", Composite::from_map(&dr.map.mul(&e), &dr.out_dims()), 0, &w)?;
    let module = CovariantModule::bare(k, frame.clone())
        .with_right_action(ar.acting.clone(), action)?
        .with_right_coaction(coaction.matrix())?
        .with_laws(Law::CROSSED)
        .certified("left coinvariants")?;
    Ok(Restricted { module, subspace: w })
}

/// `X -> ^P(P ⊗ X)`, `x ↦ 1 ⊗ x`, and its inverse `ε ⊗ id`.
pub fn t1_unit_iso<F: Field>(x: &CovariantModule<F>) -> Result<IsoPair<F>> {
    let p = x.frame().p();
    let n = x.dim();
    let y = t1_forward(x)?;
    let back = t1_backward(&y)?;
    let w = &back.subspace;
    let into_tensor = Composite::identity(&[n]).insert(0, p.unit());
    let forward = restrict_factor("x ↦ 1 ⊗ x", Composite::from_map(&into_tensor.matrix(), &[y.dim()]), 0, w)?.matrix();
    let backward = Composite::from_map(&w.embedding(), &[p.dim(), n]).apply(0, 1, &p.counit_matrix(), &[]).matrix();
    let report = check_isomorphism(&forward, &backward, x, &back.module);
    Ok(IsoPair { forward, backward, report })
}

/// `Y -> P ⊗ ^P Y`, `y ↦ y(-1)(1) ⊗ S(y(-1)(2)) ▷ y(0)`, and its inverse
/// `p ⊗ w ↦ p ▷ w`.
pub fn t1_counit_iso<F: Field>(y: &CovariantModule<F>) -> Result<IsoPair<F>> {
    let p = y.frame().p();
    let (n, np) = (y.dim(), p.dim());
    let al = require("left action", &y.left_action)?;
    let dl = require("left coaction", &y.left_coaction)?;
    let back = t1_backward(y)?;
    let w = &back.subspace;
    let z = t1_forward(&back.module)?;
    let split = Composite::from_map(&dl.map, &[np, n])
        .apply(0, 1, p.comult(), &[np, np])
        .on(1, p.antipode())
        .apply(1, 2, &al.map, &[n]);
    let forward = restrict_factor("counit map", split, 1, w)?.matrix();
    let backward = Composite::identity(&[np, w.dim()]).on(1, &w.embedding()).apply(0, 2, &al.map, &[n]).matrix();
    let report = check_isomorphism(&forward, &backward, y, &z);
    Ok(IsoPair { forward, backward, report })
}

/// The Yetter-Drinfeld version of [`t1_forward`]: `H ⊗ X` in the
/// bicovariant frame.
pub fn bicov_forward<F: Field>(x: &CovariantModule<F>) -> Result<CovariantModule<F>> {
    if !x.frame().pi().is_identity() {
        return Err(Error::Invalid("bicovariant functors need the identity surjection".into()));
    }
    t1_forward(x)
}

/// The Yetter-Drinfeld version of [`t1_backward`], with
/// `e ◁̃ h = S h(1) ▷ e ◁ h(2)`.
pub fn bicov_backward<F: Field>(e: &CovariantModule<F>) -> Result<Restricted<F>> {
    if !e.frame().pi().is_identity() {
        return Err(Error::Invalid("bicovariant functors need the identity surjection".into()));
    }
    t1_backward(e)
}

// ---------------------------------------------------------------------------
// Hopf bimodules and left-covariant bimodules over B
// ---------------------------------------------------------------------------

/// `B` with left and right multiplication and `δ_L = Δ|_B`.
pub fn regular_base_module<F: Field>(q: &QuantumHomogeneousSpace<F>) -> CovariantModule<F> {
    let b = q.b_dim();
    let m = q.b_algebra().mult().clone();
    CovariantModule::bare(b, q.frame().clone())
        .with_left_action(q.base().clone(), m.clone())
        .and_then(|y| y.with_left_coaction(q.b_coproduct().clone()))
        .and_then(|y| y.with_right_action(q.base().clone(), m))
        .expect("regular structures on B")
        .with_laws(Law::COVARIANT_BIMODULE)
}

/// `B ⊗ B` with outer multiplications and the tensor product coaction
/// `b ⊗ c ↦ b(1) c(1) ⊗ b(2) ⊗ c(2)`.
pub fn tensor_base_bimodule<F: Field>(q: &QuantumHomogeneousSpace<F>) -> CovariantModule<F> {
    let (b, np) = (q.b_dim(), q.p().dim());
    let m = q.b_algebra().mult();
    let lam = q.b_coproduct();
    let left = Composite::identity(&[b, b, b]).apply(0, 2, m, &[b]).matrix();
    let right = Composite::identity(&[b, b, b]).apply(1, 2, m, &[b]).matrix();
    let coaction = Composite::identity(&[b, b])
        .apply(0, 1, lam, &[np, b])
        .apply(2, 1, lam, &[np, b])
        .move_factor(2, 1)
        .apply(0, 2, q.p().mult(), &[np])
        .matrix();
    CovariantModule::bare(b * b, q.frame().clone())
        .with_left_action(q.base().clone(), left)
        .and_then(|y| y.with_left_coaction(coaction))
        .and_then(|y| y.with_right_action(q.base().clone(), right))
        .expect("structures on B ⊗ B")
        .with_laws(Law::COVARIANT_BIMODULE)
}

/// `P ⊗_B E`: the quotient of `P ⊗ E` by `pb ⊗ e - p ⊗ b ▷ e`.
pub fn f_functor<F: Field>(e: &CovariantModule<F>, q: &QuantumHomogeneousSpace<F>) -> Result<Quotient<F>> {
    let (np, ne, nb) = (q.p().dim(), e.dim(), q.b_dim());
    let al = require("left action", &e.left_action)?;
    if al.acting.dim() != nb {
        return Err(Error::DimensionMismatch { context: "left action by B", expected: nb, found: al.acting.dim() });
    }
    let regular = regular_module(q.frame());
    let pre = tensor_structures(&regular, e, Recipe::CovariantTensorPreQuotient)?;
    let moved = Composite::identity(&[np, nb, ne]).on(1, q.b_embedding()).apply(0, 2, q.p().mult(), &[np]).matrix();
    let acted = Composite::identity(&[np, nb, ne]).apply(1, 2, &al.map, &[ne]).matrix();
    let relations = Subspace::column_space(&moved.sub(&acted));
    let module = quotient_module(&pre, &relations)?;
    let qb = relations.quotient_basis();
    Ok(Quotient { module, projection: qb.projection, lift: qb.lift })
}

/// `Y^H` with `δ_L`, the right `B`-action and the left action restricted
/// to `B`.
pub fn g_functor<F: Field>(y: &CovariantModule<F>, q: &QuantumHomogeneousSpace<F>) -> Result<Restricted<F>> {
    let n = y.dim();
    let nb = q.b_dim();
    let al = require("left action", &y.left_action)?;
    let ar = require("right action", &y.right_action)?;
    let dl = require("left coaction", &y.left_coaction)?;
    let w = y.right_coinvariants()?;
    let (e, k) = (w.embedding(), w.dim());
    let left = Composite::identity(&[nb, k])
        .on(0, q.b_embedding())
        .on(1, &e)
        .apply(0, 2, &al.map, &[n]);
    let left = restrict_factor("left action of B", left, 0, &w)?.matrix();
    let right = Composite::identity(&[k, ar.acting.dim()]).on(0, &e).apply(0, 2, &ar.map, &[n]);
    let right = restrict_factor("right action", right, 0, &w)?.matrix();
    let coaction = restrict_factor("left coaction", Composite::from_map(&dl.map.mul(&e), &dl.out_dims()), 1, &w)?;
    let module = CovariantModule::bare(k, q.frame().clone())
        .with_left_action(q.base().clone(), left)?
        .with_left_coaction(coaction.matrix())?
        .with_right_action(ar.acting.clone(), right)?
        .with_laws(Law::COVARIANT_BIMODULE)
        .certified("right coinvariants")?;
    Ok(Restricted { module, subspace: w })
}

/// `E -> (P ⊗_B E)^H`, `e ↦ [1 ⊗ e]`, and its inverse through
/// `j: B ⊗ E -> (P ⊗_B E)^H` and the action `m_E: B ⊗ E -> E`.
pub fn gf_identity<F: Field>(e: &CovariantModule<F>, q: &QuantumHomogeneousSpace<F>) -> Result<IsoPair<F>> {
    let (ne, nb) = (e.dim(), q.b_dim());
    let fe = f_functor(e, q)?;
    let g = g_functor(&fe.module, q)?;
    let w = &g.subspace;
    let nm = fe.module.dim();
    let one_tensor = fe.projection.mul(&Composite::identity(&[ne]).insert(0, q.p().unit()).matrix());
    let one_tensor = Composite::from_map(&one_tensor, &[nm]);
    let forward = restrict_factor("e ↦ [1 ⊗ e]", one_tensor, 0, w)?.matrix();
    let j = fe.projection.mul(&Composite::identity(&[nb, ne]).on(0, q.b_embedding()).matrix());
    let j = Composite::from_map(&j, &[nm]);
    let j = restrict_factor("B ⊗ E -> P ⊗_B E", j, 0, w)?.matrix();
    let m_e = &require("left action", &e.left_action)?.map;
    let mut report = Report::new();
    let kernel = Subspace::kernel(&j);
    report.push(Check::compare(
        "action factors through j",
        &m_e.mul(&kernel.embedding()),
        &Matrix::zeros(ne, kernel.dim()),
        &[kernel.dim()],
    ));
    let j_right_inverse = j
        .solve(&Matrix::identity(w.dim()))
        .ok_or_else(|| Error::Invalid("j is not onto the coinvariants".into()))?;
    let backward = m_e.mul(&j_right_inverse);
    report.extend(check_isomorphism(&forward, &backward, e, &g.module));
    Ok(IsoPair { forward, backward, report })
}

/// Switches for testing the hypothesis gate of [`fg_iso`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FgOptions {
    /// Treat the instance as not Hopf-Galois.
    pub disable_galois: bool,
    /// Treat the antipode of `H` as not invertible.
    pub disable_antipode_inverse: bool,
}

/// Outcome of [`fg_iso`].
#[derive(Clone, Debug)]
pub enum FgOutcome<F> {
    Iso(IsoPair<F>),
    /// The hypotheses fail. `forward_bijective` reports whether the
    /// assembled forward map happens to be bijective anyway.
    NotApplicable { reasons: Vec<String>, forward_bijective: bool },
}

/// The forward map `P ⊗_B Y^H -> Y` assembled along
/// `P ⊗_B Y^H -> P ⊗_B (P ⊗ X) -> P ⊗ (H ⊗ X)^H -> P ⊗ X -> Y`
/// with `X = ^P Y`, together with the pieces the inverse needs.
struct FgForward<F> {
    m: Quotient<F>,
    x: Restricted<F>,
    /// `Y -> P ⊗ X`
    kappa: Matrix<F>,
    /// `Y^H -> P ⊗ X`
    iota: Matrix<F>,
    forward: Matrix<F>,
    report: Report,
}

fn fg_forward<F: Field>(y: &CovariantModule<F>, q: &QuantumHomogeneousSpace<F>) -> Result<FgForward<F>> {
    let p = q.p();
    let (np, nh) = (p.dim(), q.h().dim());
    let g = g_functor(y, q)?;
    let m = f_functor(&g.module, q)?;
    let counit = t1_counit_iso(y)?;
    let x = t1_backward(y)?;
    let nx = x.module.dim();
    let kappa = counit.forward.clone();
    let iota = kappa.mul(&g.subspace.embedding());
    let k = g.subspace.dim();
    // χ ⊗ id on P ⊗ P ⊗ X.
    let chi_tilde = |c: Composite<F>| {
        c.apply(1, 1, p.comult(), &[np, np]).apply(0, 2, p.mult(), &[np]).on(1, q.pi())
    };
    let on_tensor = chi_tilde(Composite::identity(&[np, k]).apply(1, 1, &iota, &[np, nx]));
    let mut report = Report::new();
    report.extend(counit.report);
    // Well defined on the balanced tensor product.
    let on_quotient = on_tensor.clone().after(&m.lift);
    report.push(Check::compare(
        "χ ⊗ id is balanced",
        &on_quotient.matrix().mul(&m.projection),
        &on_tensor.matrix(),
        &[np, k],
    ));
    // Lands in P ⊗ (H ⊗ X)^H for the diagonal coaction.
    let dx = &require("right coaction", &x.module.right_coaction)?.map;
    let diag = Composite::identity(&[np, nh, nx])
        .apply(1, 1, q.h().comult(), &[nh, nh])
        .apply(3, 1, dx, &[nx, nh])
        .move_factor(2, 4)
        .apply(3, 2, q.h().mult(), &[nh]);
    let unit_inserted = Composite::identity(&[np, nh, nx]).insert(3, q.h().unit());
    let q_mat = on_quotient.matrix();
    report.push(Check::compare(
        "image is coinvariant in H ⊗ X",
        &diag.after(&q_mat).matrix(),
        &unit_inserted.after(&q_mat).matrix(),
        &[m.module.dim()],
    ));
    let forward_px = on_quotient.apply(1, 1, &q.h().counit_matrix(), &[]).matrix();
    let forward = counit.backward.mul(&forward_px);
    Ok(FgForward { m, x, kappa, iota, forward, report })
}

/// `P ⊗_B Y^H ≅ Y` for a Hopf-Galois instance with invertible antipode of
/// `H`, assembled through `χ` as in the structure theorem; otherwise
/// [`FgOutcome::NotApplicable`].
pub fn fg_iso<F: Field>(y: &CovariantModule<F>, q: &QuantumHomogeneousSpace<F>, opts: FgOptions) -> Result<FgOutcome<F>> {
    let galois = hopf_galois_check(q)?;
    let s_inv = q.h().antipode_inverse()?;
    let mut reasons = Vec::new();
    if opts.disable_galois || !galois.galois {
        reasons.push(String::from("instance is not Hopf-Galois"));
    }
    if opts.disable_antipode_inverse || s_inv.is_none() {
        reasons.push(String::from("antipode of H is not invertible"));
    }
    let fw = fg_forward(y, q)?;
    if !reasons.is_empty() {
        let f = &fw.forward;
        let forward_bijective = f.rows() == f.cols() && f.rank() == f.rows();
        return Ok(FgOutcome::NotApplicable { reasons, forward_bijective });
    }
    let s_inv = s_inv.expect("checked above");
    let p = q.p();
    let (np, nh) = (p.dim(), q.h().dim());
    let nx = fw.x.module.dim();
    let t = tensor_over_b(q);
    let chi_q = chi_on_tensor_square(q).mul(&t.lift);
    let chi_inv = chi_q.inverse().ok_or_else(|| Error::Invalid("χ is not invertible".into()))?;
    // p ⊗ x ↦ p ⊗ S⁻¹(x(1)) ⊗ x(0) ↦ (χ⁻¹ ⊗ id)(...) in (P ⊗_B P) ⊗ X.
    let dx = &require("right coaction", &fw.x.module.right_coaction)?.map;
    let target = Composite::identity(&[np, nx])
        .apply(1, 1, dx, &[nx, nh])
        .on(2, &s_inv)
        .move_factor(2, 1)
        .apply(0, 2, &chi_inv, &[t.dim()])
        .matrix();
    // J: P ⊗_B Y^H -> (P ⊗_B P) ⊗ X, [p ⊗ w] ↦ [p ⊗ ι(w)].
    let k = fw.iota.cols();
    let j_pre = Composite::identity(&[np, k]).apply(1, 1, &fw.iota, &[np, nx]).apply(0, 2, &t.projection, &[t.dim()]);
    let j = j_pre.clone().after(&fw.m.lift).matrix();
    let mut report = fw.report;
    report.push(Check::compare(
        "P ⊗_B ι is balanced",
        &j.mul(&fw.m.projection),
        &j_pre.matrix(),
        &[np, k],
    ));
    let z = j.solve(&target).ok_or_else(|| Error::Invalid("inverse does not factor through P ⊗_B Y^H".into()))?;
    let backward = z.mul(&fw.kappa);
    report.extend(check_isomorphism(&backward, &fw.forward, y, &fw.m.module));
    Ok(FgOutcome::Iso(IsoPair { forward: fw.forward, backward, report }))
}

/// For a morphism `f: X -> X'` of crossed modules, `id ⊗ f` is a morphism
/// `P ⊗ X -> P ⊗ X'`, and the unit isomorphisms commute with it.
pub fn check_t1_functoriality<F: Field>(
    f: &Matrix<F>,
    x: &CovariantModule<F>,
    x2: &CovariantModule<F>,
) -> Result<Report> {
    let np = x.frame().p().dim();
    let mut report = check_morphism(f, x, x2);
    let y = t1_forward(x)?;
    let y2 = t1_forward(x2)?;
    let lifted = Matrix::identity(np).kron(f);
    report.extend(check_morphism(&lifted, &y, &y2));
    let u = t1_unit_iso(x)?;
    let u2 = t1_unit_iso(x2)?;
    let b1 = t1_backward(&y)?;
    let b2 = t1_backward(&y2)?;
    // f on coinvariants: coordinates of (id ⊗ f) restricted.
    let restricted = b2.subspace.coordinates().mul(&lifted).mul(&b1.subspace.embedding());
    report.push(Check::compare(
        "unit isomorphism is natural",
        &u2.forward.mul(f),
        &restricted.mul(&u.forward),
        &[x.dim()],
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example;
    use crate::field::{Fp, Rational};
    use crate::homogeneous::{adjoint_crossed_structure, canonical_crossed_bplus, make_qhs, trivial_crossed_module};
    use alloc::sync::Arc;

    type Q = Rational;

    fn qhs<F: Field>(name: &str) -> QuantumHomogeneousSpace<F> {
        make_qhs(Arc::new(example(name).unwrap())).unwrap()
    }

    const NAMES: [&str; 5] = ["sweedler", "kz2", "fz2", "fs3", "fs3_k12"];

    #[test]
    fn unit_and_counit_on_crossed_modules() {
        for name in NAMES {
            let q = qhs::<Q>(name);
            for x in [trivial_crossed_module(&q), canonical_crossed_bplus(&q).unwrap()] {
                let u = t1_unit_iso(&x).unwrap();
                assert!(u.is_exact(), "{name}: {:?}", u.report.failed_names());
                let y = t1_forward(&x).unwrap();
                assert_eq!(y.dim(), q.p().dim() * x.dim());
                let c = t1_counit_iso(&y).unwrap();
                assert!(c.is_exact(), "{name}: {:?}", c.report.failed_names());
            }
        }
    }

    #[test]
    fn counit_on_regular_module() {
        for name in NAMES {
            let q = qhs::<Q>(name);
            let y = regular_module(q.frame());
            let x = t1_backward(&y).unwrap();
            assert_eq!(x.module.dim(), 1, "{name}");
            assert!(t1_counit_iso(&y).unwrap().is_exact(), "{name}");
        }
    }

    #[test]
    fn g_after_f_is_identity() {
        for name in NAMES {
            let q = qhs::<Q>(name);
            for e in [regular_base_module(&q), tensor_base_bimodule(&q)] {
                e.verify().into_result().unwrap();
                let iso = gf_identity(&e, &q).unwrap();
                assert!(iso.is_exact(), "{name}: {:?}", iso.report.failed_names());
            }
        }
    }

    #[test]
    fn f_of_base_is_p() {
        let q = qhs::<Q>("fs3_k12");
        let m = f_functor(&regular_base_module(&q), &q).unwrap();
        assert_eq!(m.module.dim(), q.p().dim());
        let t = f_functor(&tensor_base_bimodule(&q), &q).unwrap();
        assert_eq!(t.module.dim(), q.p().dim() * q.b_dim());
    }

    #[test]
    fn f_after_g_is_identity() {
        for name in NAMES {
            let q = qhs::<Q>(name);
            for x in [trivial_crossed_module(&q), canonical_crossed_bplus(&q).unwrap()] {
                let y = t1_forward(&x).unwrap();
                match fg_iso(&y, &q, FgOptions::default()).unwrap() {
                    FgOutcome::Iso(iso) => assert!(iso.is_exact(), "{name}: {:?}", iso.report.failed_names()),
                    FgOutcome::NotApplicable { reasons, .. } => panic!("{name}: {reasons:?}"),
                }
            }
        }
    }

    #[test]
    fn fg_gate_reports_reasons() {
        let q = qhs::<Q>("sweedler");
        let y = regular_module(q.frame());
        let out = fg_iso(&y, &q, FgOptions { disable_galois: true, disable_antipode_inverse: false }).unwrap();
        match out {
            FgOutcome::NotApplicable { reasons, forward_bijective } => {
                assert_eq!(reasons.len(), 1);
                assert!(forward_bijective);
            }
            FgOutcome::Iso(_) => panic!("gate ignored"),
        }
    }

    #[test]
    fn works_over_prime_fields() {
        let q = qhs::<Fp<5>>("fs3_k12");
        let x = canonical_crossed_bplus(&q).unwrap();
        assert!(t1_unit_iso(&x).unwrap().is_exact());
        let y = t1_forward(&x).unwrap();
        assert!(matches!(fg_iso(&y, &q, FgOptions::default()).unwrap(), FgOutcome::Iso(i) if i.is_exact()));
    }

    #[test]
    fn bicovariant_round_trip() {
        for name in ["sweedler", "fs3", "kz2"] {
            let p = example::<Q>(name).unwrap().source().clone();
            let x = adjoint_crossed_structure(p).unwrap();
            let y = bicov_forward(&x).unwrap();
            let back = bicov_backward(&y).unwrap();
            assert_eq!(back.module.dim(), x.dim());
            assert!(t1_unit_iso(&x).unwrap().is_exact(), "{name}");
            assert!(t1_counit_iso(&y).unwrap().is_exact(), "{name}");
        }
        let q = qhs::<Q>("sweedler");
        assert!(bicov_forward(&trivial_crossed_module(&q)).is_err());
    }

    #[test]
    fn inclusion_is_natural() {
        let q = qhs::<Q>("fs3_k12");
        let x = canonical_crossed_bplus(&q).unwrap();
        let f = Matrix::identity(x.dim());
        assert!(check_t1_functoriality(&f, &x, &x).unwrap().all_passed());
    }
}
