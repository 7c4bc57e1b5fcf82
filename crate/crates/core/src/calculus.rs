//! First order differential calculi: the universal calculus, the
//! correspondence between left-covariant calculi on `B` and crossed
//! submodules of `B⁺`, bicovariant calculi on `P` from ideals of `P⁺`, and
//! the calculus induced on `B` by a bicovariant calculus on `P`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{Check, Report};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::functors::{g_functor, restrict_factor, t1_forward, tensor_base_bimodule, IsoPair};
use crate::homogeneous::{
    adjoint_crossed_structure, canonical_crossed_bplus, coaction_closure_identity, coproduct_invariance_identity,
    hopf_galois_check, QuantumHomogeneousSpace,
};
use crate::hopf::{Algebra, FinHopfAlgebra};
use crate::linalg::{Composite, Matrix, Subspace};
use crate::module::{
    quotient_module, stable_subspace_closure, submodule_lattice, Acting, Action, CovariantModule, Law, Side,
};

/// A bimodule `Ω` over an algebra `A` with `d: A -> Ω`.
///
/// Actions are matrices on `A ⊗ Ω` and `Ω ⊗ A`. A covariant calculus also
/// carries its structures as a [`CovariantModule`] whose actions agree
/// with the two matrices.
#[derive(Clone, Debug)]
pub struct DifferentialCalculus<F> {
    pub base: Arc<Algebra<F>>,
    pub dim: usize,
    pub left_action: Matrix<F>,
    pub right_action: Matrix<F>,
    /// `dim x dim A`
    pub d: Matrix<F>,
    pub covariant: Option<CovariantModule<F>>,
    /// `Ω` inside the space it was constructed in, if any.
    pub embedding: Option<Matrix<F>>,
}

impl<F: Field> DifferentialCalculus<F> {
    /// A covariant calculus from a module with left and right actions by
    /// `base`.
    pub fn from_module(
        module: CovariantModule<F>,
        base: Arc<Algebra<F>>,
        d: Matrix<F>,
        embedding: Option<Matrix<F>>,
    ) -> Result<Self> {
        let left = module.left_action.as_ref().ok_or_else(|| Error::Invalid("calculus needs a left action".into()))?;
        let right = module.right_action.as_ref().ok_or_else(|| Error::Invalid("calculus needs a right action".into()))?;
        if left.acting.dim() != base.dim() || right.acting.dim() != base.dim() {
            return Err(Error::DimensionMismatch { context: "calculus actions", expected: base.dim(), found: left.acting.dim() });
        }
        if d.dims() != (module.dim(), base.dim()) {
            return Err(Error::DimensionMismatch { context: "differential", expected: module.dim(), found: d.rows() });
        }
        Ok(DifferentialCalculus {
            dim: module.dim(),
            left_action: left.map.clone(),
            right_action: right.map.clone(),
            base,
            d,
            covariant: Some(module),
            embedding,
        })
    }

    /// `a ⊗ b ↦ a · db`, `dim x (dim A)^2`.
    pub fn generating_map(&self) -> Matrix<F> {
        let n = self.base.dim();
        Composite::identity(&[n, n]).on(1, &self.d).apply(0, 2, &self.left_action, &[self.dim]).matrix()
    }

    /// Rank of [`Self::generating_map`]; equals `dim` when `Ω` is spanned by
    /// `{a · db}`.
    pub fn surjectivity_rank(&self) -> usize {
        self.generating_map().rank()
    }

    pub fn left_coaction(&self) -> Option<&Matrix<F>> {
        self.covariant.as_ref().and_then(|m| m.left_coaction.as_ref()).map(|c| &c.map)
    }

    pub fn right_coaction(&self) -> Option<&Matrix<F>> {
        self.covariant.as_ref().and_then(|m| m.right_coaction.as_ref()).map(|c| &c.map)
    }
}

fn shape_failure(name: &str, e: Error) -> Check {
    Check::fail(name, Vec::new()).with_detail(e.to_string())
}

/// Leibniz rule, `d(1) = 0`, surjectivity, the bimodule laws, and for a
/// covariant calculus the module laws and covariance of `d`.
pub fn check_calculus<F: Field>(c: &DifferentialCalculus<F>) -> Report {
    let (nb, n) = (c.base.dim(), c.dim);
    let mut r = Report::new();
    let acting = Arc::new(Acting::plain("A", c.base.clone()));
    match Action::new(Side::Left, acting.clone(), c.left_action.clone()) {
        Ok(a) => r.extend(a.check_structure()),
        Err(e) => r.push(shape_failure("left action shape", e)),
    }
    match Action::new(Side::Right, acting, c.right_action.clone()) {
        Ok(a) => r.extend(a.check_structure()),
        Err(e) => r.push(shape_failure("right action shape", e)),
    }
    if !r.all_passed() {
        return r;
    }
    let (l, rt) = (&c.left_action, &c.right_action);
    let lr = Composite::identity(&[nb, n, nb]).apply(0, 2, l, &[n]).apply(0, 2, rt, &[n]).matrix();
    let rl = Composite::identity(&[nb, n, nb]).apply(1, 2, rt, &[n]).apply(0, 2, l, &[n]).matrix();
    r.push(Check::compare("bimodule", &lr, &rl, &[nb, n, nb]));

    let d_of_product = c.d.mul(c.base.mult());
    let a_db = Composite::identity(&[nb, nb]).on(1, &c.d).apply(0, 2, l, &[n]).matrix();
    let da_b = Composite::identity(&[nb, nb]).on(0, &c.d).apply(0, 2, rt, &[n]).matrix();
    r.push(Check::compare("Leibniz rule", &d_of_product, &a_db.add(&da_b), &[nb, nb]));
    r.push(Check::compare("d(1) = 0", &c.d.mul(&c.base.unit_matrix()), &Matrix::zeros(n, 1), &[1]));
    let rank = a_db.rank();
    r.push(Check::from_bool("surjectivity", rank == n).with_detail(format!("rank {rank} of {n}")));

    if let Some(m) = &c.covariant {
        r.extend(m.verify());
        let same = m.left_action.as_ref().map(|a| &a.map) == Some(l) && m.right_action.as_ref().map(|a| &a.map) == Some(rt);
        r.push(Check::from_bool("actions agree with the covariant structure", same));
        let base = m.frame().base();
        if let (Some(delta), Some(lambda)) = (c.left_coaction(), base.lambda.as_ref()) {
            let np = m.frame().p().dim();
            let lhs = delta.mul(&c.d);
            let rhs = Composite::from_map(lambda, &[np, nb]).on(1, &c.d).matrix();
            r.push(Check::compare("d is left covariant", &lhs, &rhs, &[nb]));
        }
        if let (Some(delta), Some(rho)) = (c.right_coaction(), base.rho.as_ref()) {
            let nh = m.frame().h().dim();
            let lhs = delta.mul(&c.d);
            let rhs = Composite::from_map(rho, &[nb, nh]).on(0, &c.d).matrix();
            r.push(Check::compare("d is right covariant", &lhs, &rhs, &[nb]));
        }
    }
    r
}

/// `ker(m) ⊆ A ⊗ A` with outer multiplications and `d a = 1 ⊗ a - a ⊗ 1`.
pub fn universal_calculus<F: Field>(a: Arc<Algebra<F>>) -> DifferentialCalculus<F> {
    let n = a.dim();
    let m = a.mult();
    let w = Subspace::kernel(m);
    let (e, c, k) = (w.embedding(), w.coordinates(), w.dim());
    let left = Composite::identity(&[n, k])
        .apply(1, 1, &e, &[n, n])
        .apply(0, 2, m, &[n])
        .apply(0, 2, &c, &[k])
        .matrix();
    let right = Composite::identity(&[k, n])
        .apply(0, 1, &e, &[n, n])
        .apply(1, 2, m, &[n])
        .apply(0, 2, &c, &[k])
        .matrix();
    let d = c.mul(&universal_d(&a));
    DifferentialCalculus { base: a, dim: k, left_action: left, right_action: right, d, covariant: None, embedding: Some(e) }
}

/// `a ↦ 1 ⊗ a - a ⊗ 1` into `A ⊗ A`.
fn universal_d<F: Field>(a: &Algebra<F>) -> Matrix<F> {
    let one_a = Composite::identity(&[a.dim()]).insert(0, a.unit()).matrix();
    let a_one = Composite::identity(&[a.dim()]).insert(1, a.unit()).matrix();
    one_a.sub(&a_one)
}

/// The universal calculus on `B` with the left `P`-coaction of `B ⊗ B`.
pub fn universal_covariant_calculus<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Result<DifferentialCalculus<F>> {
    let b = q.b_algebra().clone();
    let w = Subspace::kernel(b.mult());
    let module = tensor_base_bimodule(q).restrict(&w)?.certified("universal calculus")?;
    let d = w.coordinates().mul(&universal_d(&b));
    DifferentialCalculus::from_module(module, b, d, Some(w.embedding()))
}

/// `b ↦ b - ε(b)1` in the coordinates of `B⁺`, `dim B⁺ x dim B`.
fn bplus_part<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Matrix<F> {
    let nb = q.b_dim();
    let one = q.b_algebra().unit_matrix();
    q.b_plus().coordinates().mul(&Matrix::identity(nb).sub(&one.mul(&q.b_counit())))
}

fn check_ambient<F: Field>(what: &'static str, s: &Subspace<F>, n: usize) -> Result<()> {
    if s.ambient() != n {
        return Err(Error::DimensionMismatch { context: what, expected: n, found: s.ambient() });
    }
    Ok(())
}

/// The left-covariant calculus `Ω = (P ⊗ B⁺/I)^H` with
/// `d b = b(1) ⊗ [b(2) - ε(b(2))1]`. `i` is given in the coordinates of
/// [`QuantumHomogeneousSpace::b_plus`] and must be a crossed submodule.
pub fn calculus_from_crossed_submodule<F: Field>(
    i: &Subspace<F>,
    q: &QuantumHomogeneousSpace<F>,
) -> Result<DifferentialCalculus<F>> {
    let x = canonical_crossed_bplus(q)?;
    check_ambient("crossed submodule", i, x.dim())?;
    if let Some(s) = x.unstable_structure(i) {
        return Err(Error::NotStable(format!("B⁺ under {s}")));
    }
    let xq = quotient_module(&x, i)?;
    let y = t1_forward(&xq)?;
    let g = g_functor(&y, q)?;
    let (np, nb) = (q.p().dim(), q.b_dim());
    let to_quotient = i.quotient_basis().projection.mul(&bplus_part(q));
    let d_ambient = Composite::from_map(q.b_coproduct(), &[np, nb]).on(1, &to_quotient).matrix();
    let d = restrict_factor("d", Composite::from_map(&d_ambient, &[d_ambient.rows()]), 0, &g.subspace)?.matrix();
    DifferentialCalculus::from_module(g.module, q.b_algebra().clone(), d, Some(g.subspace.embedding()))
}

/// `I = {Σ ε(b)(c - ε(c)1) : Σ b ⊗ c ∈ N}` for a covariant subbimodule
/// `N` of the universal calculus, given in the coordinates of
/// [`universal_covariant_calculus`].
pub fn crossed_submodule_from_subbimodule<F: Field>(
    n: &Subspace<F>,
    q: &QuantumHomogeneousSpace<F>,
) -> Result<Subspace<F>> {
    let u = universal_covariant_calculus(q)?;
    check_ambient("subbimodule", n, u.dim)?;
    let module = u.covariant.as_ref().expect("covariant");
    if let Some(s) = module.unstable_structure(n) {
        return Err(Error::NotStable(format!("universal calculus under {s}")));
    }
    let nb = q.b_dim();
    let eps_first = Composite::identity(&[nb, nb]).apply(0, 1, &q.b_counit(), &[]).matrix();
    let map = bplus_part(q).mul(&eps_first).mul(u.embedding.as_ref().expect("embedded"));
    let i = n.image(&map);
    let x = canonical_crossed_bplus(q)?;
    if let Some(s) = x.unstable_structure(&i) {
        return Err(Error::law("crossed stability of the image", s));
    }
    Ok(i)
}

/// The crossed submodule of a left-covariant calculus on `B`, through the
/// kernel `N` of `Σ a ⊗ b ↦ Σ a · db` on the universal calculus.
pub fn crossed_submodule_from_calculus<F: Field>(
    c: &DifferentialCalculus<F>,
    q: &QuantumHomogeneousSpace<F>,
) -> Result<Subspace<F>> {
    if c.base.dim() != q.b_dim() || c.base.mult() != q.b_algebra().mult() {
        return Err(Error::Invalid("calculus is not over B".into()));
    }
    let u = universal_covariant_calculus(q)?;
    let n = Subspace::kernel(&c.generating_map().mul(u.embedding.as_ref().expect("embedded")));
    crossed_submodule_from_subbimodule(&n, q)
}

/// One entry of a classification.
#[derive(Clone, Debug)]
pub struct ClassifiedCalculus<F> {
    /// In the coordinates of `B⁺`.
    pub ideal: Subspace<F>,
    pub omega_dim: usize,
    pub calculus: DifferentialCalculus<F>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub struct Classification<F> {
    pub calculi: Vec<ClassifiedCalculus<F>>,
    /// The lattice of crossed submodules was enumerated exhaustively.
    pub lattice_complete: bool,
    /// Galois with invertible antipode of `H`, so distinct submodules give
    /// distinct calculi and every calculus arises.
    pub bijective_correspondence: bool,
    pub warnings: Vec<String>,
}

impl<F> Classification<F> {
    pub fn complete(&self) -> bool {
        self.lattice_complete && self.bijective_correspondence
    }
}

/// All left-covariant calculi on `B` from crossed submodules of `B⁺`,
/// each built and verified.
pub fn classify_covariant_calculi<F: Field>(q: &QuantumHomogeneousSpace<F>, cap: usize) -> Result<Classification<F>> {
    let x = canonical_crossed_bplus(q)?;
    let lattice = submodule_lattice(&x, cap)?;
    let galois = hopf_galois_check(q)?;
    let bijective_correspondence = galois.galois && galois.antipode_invertible;
    let mut warnings = lattice.warnings.clone();
    if !bijective_correspondence {
        warnings.push(String::from("instance is not Galois with invertible antipode; list may be incomplete"));
    }
    let mut calculi = Vec::new();
    for ideal in lattice.subspaces {
        let calculus = calculus_from_crossed_submodule(&ideal, q)?;
        let report = check_calculus(&calculus);
        calculi.push(ClassifiedCalculus { omega_dim: calculus.dim, ideal, calculus, report });
    }
    Ok(Classification { calculi, lattice_complete: lattice.complete, bijective_correspondence, warnings })
}

/// A bicovariant calculus on `P` with the crossed module it comes from.
#[derive(Clone, Debug)]
pub struct BicovariantCalculus<F> {
    pub p: Arc<FinHopfAlgebra<F>>,
    /// In the coordinates of `P⁺ = ker ε`.
    pub ideal: Subspace<F>,
    /// `P⁺/I` with the right regular action and the adjoint coaction.
    pub tangent: CovariantModule<F>,
    pub calculus: DifferentialCalculus<F>,
}

/// `Γ = P ⊗ P⁺/I` with `d f = f(1) ⊗ [f(2) - ε(f(2))1]`, for `I` stable
/// under the right regular action and the adjoint coaction.
pub fn bicovariant_calculus_from_ideal<F: Field>(
    i: &Subspace<F>,
    p: Arc<FinHopfAlgebra<F>>,
) -> Result<BicovariantCalculus<F>> {
    let x = adjoint_crossed_structure(p.clone())?;
    check_ambient("ideal of P⁺", i, x.dim())?;
    if let Some(s) = x.unstable_structure(i) {
        return Err(Error::NotStable(format!("P⁺ under {s}")));
    }
    let tangent = quotient_module(&x, i)?;
    let y = t1_forward(&tangent)?;
    let n = p.dim();
    let plus = Subspace::kernel(&p.counit_matrix());
    let part = plus.coordinates().mul(&Matrix::identity(n).sub(&p.unit_matrix().mul(&p.counit_matrix())));
    let to_quotient = i.quotient_basis().projection.mul(&part);
    let d = Composite::from_map(p.comult(), &[n, n]).on(1, &to_quotient).matrix();
    let calculus = DifferentialCalculus::from_module(y, p.algebra().clone(), d, None)?;
    Ok(BicovariantCalculus { p, ideal: i.clone(), tangent, calculus })
}

/// The calculus on `B` induced by a bicovariant calculus on `P`.
#[derive(Clone, Debug)]
pub struct InducedCalculus<F> {
    /// `B⁺ ∩ I` in the coordinates of `B⁺`.
    pub bplus_ideal: Subspace<F>,
    /// `T = B⁺/(B⁺ ∩ I)` with the restricted action and induced coaction.
    pub tangent: CovariantModule<F>,
    /// `dim (P ⊗ T)^H`
    pub sections_dim: usize,
    /// The calculus on the span of `{a · db}` inside `(P ⊗ T)^H`.
    pub calculus: DifferentialCalculus<F>,
    /// The span of `{a · db}` is smaller than `(P ⊗ T)^H`.
    pub strict_inclusion: bool,
    pub report: Report,
}

/// Restricts the tangent space `P⁺/I` to `T = B⁺/(B⁺ ∩ I)`, forms the
/// sections `(P ⊗ T)^H` inside `Γ`, and restricts `d` to `B`.
pub fn induced_calculus<F: Field>(
    gamma: &BicovariantCalculus<F>,
    q: &QuantumHomogeneousSpace<F>,
) -> Result<InducedCalculus<F>> {
    if !gamma.p.same_structure(q.p()) {
        return Err(Error::Invalid("bicovariant calculus is over a different algebra".into()));
    }
    let p = q.p();
    let (np, nb) = (p.dim(), q.b_dim());
    let mut report = Report::new();
    report.push(coaction_closure_identity(q));
    report.push(coproduct_invariance_identity(q));

    // Step 1: T = B⁺/(B⁺ ∩ I) inside P⁺/I.
    let plus = Subspace::kernel(&p.counit_matrix());
    let to_tangent = gamma.ideal.quotient_basis().projection.mul(&plus.coordinates());
    let bplus_in_p = q.b_embedding().mul(&q.b_plus().embedding());
    let iota_full = to_tangent.mul(&bplus_in_p);
    let bplus_ideal = Subspace::kernel(&iota_full);
    let tangent = quotient_module(&canonical_crossed_bplus(q)?, &bplus_ideal)?;
    let iota = iota_full.mul(&bplus_ideal.quotient_basis().lift);
    let t = tangent.dim();
    report.push(Check::from_bool("T embeds in P⁺/I", iota.rank() == t));
    let big = &gamma.tangent;
    let big_action = &big.right_action.as_ref().expect("crossed").map;
    let small_action = &tangent.right_action.as_ref().expect("crossed").map;
    report.push(Check::compare(
        "action on T is restricted",
        &iota.mul(small_action),
        &big_action.mul(&iota.kron(q.b_embedding())),
        &[t, nb],
    ));
    let big_coaction = &big.right_coaction.as_ref().expect("crossed").map;
    let small_coaction = &tangent.right_coaction.as_ref().expect("crossed").map;
    let nt = big.dim();
    report.push(Check::compare(
        "coaction on T is induced",
        &iota.kron(&Matrix::identity(q.h().dim())).mul(small_coaction),
        &Composite::from_map(&big_coaction.mul(&iota), &[nt, np]).on(1, q.pi()).matrix(),
        &[t],
    ));

    // Step 2: (P ⊗ T)^H inside Γ = P ⊗ P⁺/I.
    let c = &gamma.calculus;
    let g_module = c.covariant.as_ref().expect("bicovariant");
    let p_tensor_t = Subspace::column_space(&Matrix::identity(np).kron(&iota));
    let delta_r = &g_module.right_coaction.as_ref().expect("bicovariant").map;
    let pushed = Composite::from_map(delta_r, &[c.dim, np]).on(1, q.pi()).matrix();
    let unit = Composite::identity(&[c.dim]).insert(1, q.h().unit()).matrix();
    let invariant = Subspace::kernel(&pushed.sub(&unit));
    let sections = p_tensor_t.intersect(&invariant)?;

    let d_b = c.d.mul(q.b_embedding());
    report.push(Check::from_bool("d(B) lies in P ⊗ T", p_tensor_t.contains_columns(&d_b)));
    report.push(Check::from_bool("d(B) is H-invariant", invariant.contains_columns(&d_b)));
    if !report.all_passed() {
        return Err(Error::checks("induced calculus", &report));
    }

    // The calculus on the span of {a · db}.
    let generated = Composite::identity(&[nb, nb])
        .on(0, q.b_embedding())
        .on(1, &d_b)
        .apply(0, 2, &c.left_action, &[c.dim])
        .matrix();
    let omega = Subspace::column_space(&generated);
    let strict_inclusion = omega.dim() < sections.dim();
    let (e, k) = (omega.embedding(), omega.dim());
    let left = Composite::identity(&[nb, k]).on(0, q.b_embedding()).on(1, &e).apply(0, 2, &c.left_action, &[c.dim]);
    let left = restrict_factor("left action of B", left, 0, &omega)?.matrix();
    let right = Composite::identity(&[k, nb]).on(0, &e).on(1, q.b_embedding()).apply(0, 2, &c.right_action, &[c.dim]);
    let right = restrict_factor("right action of B", right, 0, &omega)?.matrix();
    let delta_l = &g_module.left_coaction.as_ref().expect("bicovariant").map;
    let coaction = restrict_factor("left coaction", Composite::from_map(&delta_l.mul(&e), &[np, c.dim]), 1, &omega)?;
    let module = CovariantModule::bare(k, q.frame().clone())
        .with_left_action(q.base().clone(), left)?
        .with_left_coaction(coaction.matrix())?
        .with_right_action(q.base().clone(), right)?
        .with_laws(Law::COVARIANT_BIMODULE)
        .certified("induced calculus")?;
    let d = omega.coordinates().mul(&d_b);
    let calculus = DifferentialCalculus::from_module(module, q.b_algebra().clone(), d, Some(e))?;
    Ok(InducedCalculus {
        bplus_ideal,
        tangent,
        sections_dim: sections.dim(),
        calculus,
        strict_inclusion,
        report,
    })
}

/// The unique candidate `φ: Ω1 -> Ω2` with `φ(a · d1 b) = a · d2 b`, its
/// inverse candidate, and the checks that they are mutually inverse and
/// intertwine the actions, the coactions and `d`.
pub fn calculus_isomorphism<F: Field>(c1: &DifferentialCalculus<F>, c2: &DifferentialCalculus<F>) -> IsoPair<F> {
    let mut report = Report::new();
    let (n1, n2) = (c1.dim, c2.dim);
    if c1.base.mult() != c2.base.mult() {
        report.push(Check::fail("same algebra", Vec::new()));
        return IsoPair { forward: Matrix::zeros(n2, n1), backward: Matrix::zeros(n1, n2), report };
    }
    let nb = c1.base.dim();
    let (s1, s2) = (c1.generating_map(), c2.generating_map());
    let induced = |from: &Matrix<F>, to: &Matrix<F>| from.transpose().solve(&to.transpose()).map(|x| x.transpose());
    let forward = induced(&s1, &s2);
    let backward = induced(&s2, &s1);
    report.push(Check::from_bool("a · d1 b ↦ a · d2 b is well defined", forward.is_some()));
    report.push(Check::from_bool("a · d2 b ↦ a · d1 b is well defined", backward.is_some()));
    let forward = forward.unwrap_or_else(|| Matrix::zeros(n2, n1));
    let backward = backward.unwrap_or_else(|| Matrix::zeros(n1, n2));
    if !report.all_passed() {
        return IsoPair { forward, backward, report };
    }
    report.push(Check::compare("backward after forward", &backward.mul(&forward), &Matrix::identity(n1), &[n1]));
    report.push(Check::compare("forward after backward", &forward.mul(&backward), &Matrix::identity(n2), &[n2]));
    report.push(Check::compare("commutes with d", &forward.mul(&c1.d), &c2.d, &[nb]));
    report.push(Check::compare(
        "intertwines left action",
        &forward.mul(&c1.left_action),
        &c2.left_action.mul(&Matrix::identity(nb).kron(&forward)),
        &[nb, n1],
    ));
    report.push(Check::compare(
        "intertwines right action",
        &forward.mul(&c1.right_action),
        &c2.right_action.mul(&forward.kron(&Matrix::identity(nb))),
        &[n1, nb],
    ));
    match (c1.left_coaction(), c2.left_coaction()) {
        (Some(d1), Some(d2)) => {
            let np = c1.covariant.as_ref().expect("covariant").frame().p().dim();
            report.push(Check::compare(
                "intertwines left coaction",
                &Matrix::identity(np).kron(&forward).mul(d1),
                &d2.mul(&forward),
                &[n1],
            ));
        }
        (None, None) => {}
        _ => report.push(Check::fail("both calculi covariant", vec![])),
    }
    IsoPair { forward, backward, report }
}

/// `I` is stable: its closure under the crossed structure is itself.
pub fn is_crossed_submodule<F: Field>(i: &Subspace<F>, q: &QuantumHomogeneousSpace<F>) -> Result<bool> {
    let x = canonical_crossed_bplus(q)?;
    check_ambient("crossed submodule", i, x.dim())?;
    Ok(&stable_subspace_closure(&x, i) == i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example;
    use crate::field::{Fp, Rational};
    use crate::homogeneous::make_qhs;
    use crate::hopf::build_function_algebra;
    use crate::group::FiniteGroup;

    type Q = Rational;

    fn qhs<F: Field>(name: &str) -> QuantumHomogeneousSpace<F> {
        make_qhs(Arc::new(example(name).unwrap())).unwrap()
    }

    fn assert_ok(r: &Report, what: &str) {
        assert!(r.all_passed(), "{what}: {:?}", r.failed_names());
    }

    #[test]
    fn universal_dimensions() {
        let q = qhs::<Q>("sweedler");
        let u = universal_calculus(q.b_algebra().clone());
        assert_eq!(u.dim, 2);
        assert_ok(&check_calculus(&u), "k[x]/x²");
        let u3 = universal_calculus(qhs::<Q>("fs3_k12").b_algebra().clone());
        assert_eq!(u3.dim, 6);
        let trivial = universal_calculus(Arc::new(Algebra::new(Matrix::identity(1), vec![Q::one()]).unwrap()));
        assert_eq!(trivial.dim, 0);
        assert_ok(&check_calculus(&trivial), "k");
    }

    #[test]
    fn surjectivity_mutation_is_caught() {
        // On k[x]/x², d(x) generates Ω.
        let b = qhs::<Q>("sweedler").b_algebra().clone();
        let x = (0..2).find(|&j| b.unit()[j].is_zero()).unwrap();
        let mut u = universal_calculus(b);
        for i in 0..u.dim {
            u.d[(i, x)] = Q::zero();
        }
        let r = check_calculus(&u);
        assert!(!r.get("surjectivity").unwrap().passed);
    }

    #[test]
    fn universal_covariant_is_covariant() {
        for name in EXAMPLE_NAMES {
            let u = universal_covariant_calculus(&qhs::<Q>(name)).unwrap();
            assert_ok(&check_calculus(&u), name);
        }
    }

    const EXAMPLE_NAMES: [&str; 5] = ["sweedler", "kz2", "fz2", "fs3", "fs3_k12"];

    #[test]
    fn extreme_crossed_submodules() {
        for name in EXAMPLE_NAMES {
            let q = qhs::<Q>(name);
            let k = q.b_plus().dim();
            let zero = calculus_from_crossed_submodule(&Subspace::zero(k), &q).unwrap();
            assert_ok(&check_calculus(&zero), name);
            let u = universal_covariant_calculus(&q).unwrap();
            assert_eq!(zero.dim, u.dim, "{name}");
            let iso = calculus_isomorphism(&u, &zero);
            assert!(iso.is_exact(), "{name}: {:?}", iso.report.failed_names());
            let full = calculus_from_crossed_submodule(&Subspace::full(k), &q).unwrap();
            assert_eq!(full.dim, 0);
            assert_ok(&check_calculus(&full), name);
        }
    }

    #[test]
    fn sweedler_iso_matches_proof_map() {
        // b ⊗ c ↦ b c(1) ⊗ c(2), then c(2) to its B⁺ part.
        let q = qhs::<Q>("sweedler");
        let u = universal_covariant_calculus(&q).unwrap();
        let c = calculus_from_crossed_submodule(&Subspace::zero(1), &q).unwrap();
        let (np, nb) = (q.p().dim(), q.b_dim());
        let proof_map = Composite::identity(&[nb, nb])
            .on(0, q.b_embedding())
            .apply(1, 1, q.b_coproduct(), &[np, nb])
            .apply(0, 2, q.p().mult(), &[np])
            .on(1, &bplus_part(&q))
            .matrix()
            .mul(u.embedding.as_ref().unwrap());
        let in_omega = c.embedding.as_ref().unwrap().mul(&calculus_isomorphism(&u, &c).forward);
        assert_eq!(proof_map, in_omega);
    }

    #[test]
    fn round_trip_on_subspaces() {
        for name in EXAMPLE_NAMES {
            let q = qhs::<Q>(name);
            let cl = classify_covariant_calculi(&q, 64).unwrap();
            assert!(cl.complete(), "{name}");
            for entry in &cl.calculi {
                assert_ok(&entry.report, name);
                assert_eq!(&crossed_submodule_from_calculus(&entry.calculus, &q).unwrap(), &entry.ideal, "{name}");
                assert!(is_crossed_submodule(&entry.ideal, &q).unwrap());
            }
        }
    }

    #[test]
    fn sweedler_has_two_calculi() {
        let cl = classify_covariant_calculi(&qhs::<Q>("sweedler"), 16).unwrap();
        let dims: Vec<usize> = cl.calculi.iter().map(|c| c.omega_dim).collect();
        assert_eq!(dims, vec![2, 0]);
        let cl = classify_covariant_calculi(&qhs::<Q>("fz2"), 16).unwrap();
        let dims: Vec<usize> = cl.calculi.iter().map(|c| c.omega_dim).collect();
        assert_eq!(dims, vec![2, 0]);
    }

    #[test]
    fn subbimodule_extremes() {
        let q = qhs::<Q>("fs3_k12");
        let u = universal_covariant_calculus(&q).unwrap();
        assert!(crossed_submodule_from_subbimodule(&Subspace::zero(u.dim), &q).unwrap().is_zero());
        assert!(crossed_submodule_from_subbimodule(&Subspace::full(u.dim), &q).unwrap().is_full());
    }

    #[test]
    fn unstable_ideal_is_rejected() {
        let q = qhs::<Q>("fs3_k12");
        let x = canonical_crossed_bplus(&q).unwrap();
        let lattice = submodule_lattice(&x, 64).unwrap();
        let line = (0..4)
            .map(|t| Subspace::span(2, &[vec![Q::one(), Q::from_i64(t)]]))
            .find(|l| !lattice.subspaces.contains(l))
            .unwrap();
        assert!(matches!(calculus_from_crossed_submodule(&line, &q), Err(Error::NotStable(_))));
    }

    #[test]
    fn bicovariant_from_ideals() {
        for name in ["kz2", "fs3", "sweedler"] {
            let p = example::<Q>(name).unwrap().source().clone();
            let k = p.dim() - 1;
            let zero = bicovariant_calculus_from_ideal(&Subspace::zero(k), p.clone()).unwrap();
            assert_eq!(zero.calculus.dim, p.dim() * k);
            assert_ok(&check_calculus(&zero.calculus), name);
            let full = bicovariant_calculus_from_ideal(&Subspace::full(k), p.clone()).unwrap();
            assert_eq!(full.calculus.dim, 0);
            assert_ok(&check_calculus(&full.calculus), name);
        }
    }

    #[test]
    fn induced_agrees_with_crossed_route() {
        for name in ["sweedler", "fs3_k12", "kz2", "fz2", "fs3"] {
            let q = qhs::<Q>(name);
            let p = q.surjection().source().clone();
            let k = p.dim() - 1;
            for ideal in [Subspace::zero(k), Subspace::full(k)] {
                let gamma = bicovariant_calculus_from_ideal(&ideal, p.clone()).unwrap();
                let ind = induced_calculus(&gamma, &q).unwrap();
                assert_ok(&ind.report, name);
                assert_ok(&check_calculus(&ind.calculus), name);
                let other = calculus_from_crossed_submodule(&ind.bplus_ideal, &q).unwrap();
                let iso = calculus_isomorphism(&ind.calculus, &other);
                assert!(iso.is_exact(), "{name}: {:?}", iso.report.failed_names());
            }
        }
        let q = qhs::<Q>("fs3_k12");
        let gamma = bicovariant_calculus_from_ideal(&Subspace::zero(5), q.surjection().source().clone()).unwrap();
        let ind = induced_calculus(&gamma, &q).unwrap();
        assert_eq!(ind.sections_dim, 6);
        assert!(!ind.strict_inclusion);
    }

    #[test]
    fn function_algebra_augmentation_is_idempotent() {
        let p = Arc::new(build_function_algebra::<Q>(&FiniteGroup::symmetric3()));
        let plus = Subspace::kernel(&p.counit_matrix());
        let e = plus.embedding();
        let products = Composite::identity(&[5, 5]).on(0, &e).on(1, &e).apply(0, 2, p.mult(), &[6]).matrix();
        let square = Subspace::column_space(&plus.coordinates().mul(&products));
        assert!(square.is_full());
        let c = bicovariant_calculus_from_ideal(&square, p).unwrap();
        assert_eq!(c.calculus.dim, 0);
    }

    #[test]
    fn prime_field_classification() {
        let q = qhs::<Fp<7>>("fs3_k12");
        let cl = classify_covariant_calculi(&q, 64).unwrap();
        for entry in &cl.calculi {
            assert!(entry.report.all_passed());
        }
        assert!(cl.calculi.len() >= 2);
    }
}
