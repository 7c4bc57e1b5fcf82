//! Quantum homogeneous spaces `B = P^H`, the Hopf-Galois map, and crossed
//! modules.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::check::{Check, Report};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Algebra, FinHopfAlgebra, HopfSurjection};
use crate::linalg::{Composite, Matrix, Subspace};
use crate::module::{coinvariants, Acting, Coaction, CovariantModule, Frame, Law, Side};

/// The right `H`-coinvariants `B` of `P` under `(id ⊗ π)Δ`, with its
/// intrinsic algebra structure and the frame used by all module
/// constructions over it.
#[derive(Clone, Debug)]
pub struct QuantumHomogeneousSpace<F> {
    frame: Arc<Frame<F>>,
    b: Subspace<F>,
    embedding: Matrix<F>,
    coordinates: Matrix<F>,
    b_plus: Subspace<F>,
    report: Report,
}

/// Computes `B = P^H` and certifies its invariants.
pub fn make_qhs<F: Field>(surj: Arc<HopfSurjection<F>>) -> Result<QuantumHomogeneousSpace<F>> {
    let p = surj.source().clone();
    let h = surj.target().clone();
    let n = p.dim();
    let pi = surj.matrix();
    let rho = Composite::from_map(p.comult(), &[n, n]).on(1, pi).matrix();
    let delta_r = Coaction::new(Side::Right, h.coalgebra().clone(), rho)?;
    let b = coinvariants(&delta_r, h.unit());
    let e = b.embedding();
    let c = b.coordinates();
    let bd = b.dim();
    let quotient = b.quotient_basis();

    let mut report = Report::new();
    report.push(Check::from_bool("B contains 1", b.contains_vector(p.unit())));
    let products = Composite::identity(&[bd, bd]).on(0, &e).on(1, &e).apply(0, 2, p.mult(), &[n]).matrix();
    report.push(Check::compare(
        "B closed under multiplication",
        &quotient.projection.mul(&products),
        &Matrix::zeros(quotient.projection.rows(), bd * bd),
        &[bd, bd],
    ));
    let de = p.comult().mul(&e);
    let outside = Composite::from_map(&de, &[n, n]).on(1, &quotient.projection).matrix();
    report.push(Check::compare(
        "coproduct of B lies in P ⊗ B",
        &outside,
        &Matrix::zeros(outside.rows(), bd),
        &[bd],
    ));
    report.push(Check::compare(
        "π on B is ε times 1",
        &pi.mul(&e),
        &h.unit_matrix().mul(&p.counit_matrix()).mul(&e),
        &[bd],
    ));
    if !report.all_passed() {
        return Err(Error::checks("quantum homogeneous space", &report));
    }

    let b_mult = c.mul(&products);
    let b_unit = c.apply(p.unit());
    let algebra = Arc::new(Algebra::new(b_mult, b_unit)?);
    let lambda = Composite::from_map(&de, &[n, n]).on(1, &c).matrix();
    let rho_b = Composite::identity(&[bd]).insert(1, h.unit()).matrix();
    let base = Acting { name: "B".into(), algebra, lambda: Some(lambda), rho: Some(rho_b) };
    let frame = Arc::new(Frame::new(surj, base, e.clone())?);
    let b_plus = Subspace::kernel(&p.counit_matrix().mul(&e));
    Ok(QuantumHomogeneousSpace { frame, b, embedding: e, coordinates: c, b_plus, report })
}

impl<F: Field> QuantumHomogeneousSpace<F> {
    pub fn frame(&self) -> &Arc<Frame<F>> {
        &self.frame
    }

    pub fn surjection(&self) -> &Arc<HopfSurjection<F>> {
        self.frame.surjection()
    }

    pub fn p(&self) -> &FinHopfAlgebra<F> {
        self.frame.p()
    }

    pub fn h(&self) -> &FinHopfAlgebra<F> {
        self.frame.h()
    }

    pub fn pi(&self) -> &Matrix<F> {
        self.frame.pi()
    }

    /// `B` as a subspace of `P`.
    pub fn b(&self) -> &Subspace<F> {
        &self.b
    }

    pub fn b_dim(&self) -> usize {
        self.b.dim()
    }

    /// `B -> P`, `dim P x dim B`.
    pub fn b_embedding(&self) -> &Matrix<F> {
        &self.embedding
    }

    /// Coordinates on `B`, `dim B x dim P`; a left inverse of the embedding.
    pub fn b_coordinates(&self) -> &Matrix<F> {
        &self.coordinates
    }

    /// The algebra `B` in its intrinsic basis.
    pub fn b_algebra(&self) -> &Arc<Algebra<F>> {
        &self.frame.base().algebra
    }

    /// `B` as an acting algebra, with `λ = Δ|_B: B -> P ⊗ B`.
    pub fn base(&self) -> &Arc<Acting<F>> {
        self.frame.base()
    }

    /// `Δ|_B: B -> P ⊗ B` in intrinsic coordinates.
    pub fn b_coproduct(&self) -> &Matrix<F> {
        self.frame.base().lambda.as_ref().expect("base carries λ")
    }

    /// `ε|_B` as a row vector in intrinsic coordinates.
    pub fn b_counit(&self) -> Matrix<F> {
        self.p().counit_matrix().mul(&self.embedding)
    }

    /// `B⁺ = ker ε ∩ B`, in intrinsic coordinates of `B`.
    pub fn b_plus(&self) -> &Subspace<F> {
        &self.b_plus
    }

    /// The certificates computed by [`make_qhs`].
    pub fn report(&self) -> &Report {
        &self.report
    }
}

/// `P ⊗_B P` as a quotient of `P ⊗ P`.
#[derive(Clone, Debug)]
pub struct TensorOverB<F> {
    /// Span of `pb ⊗ q - p ⊗ bq` in `P ⊗ P`.
    pub relations: Subspace<F>,
    /// `P ⊗ P -> P ⊗_B P`.
    pub projection: Matrix<F>,
    /// `P ⊗_B P -> P ⊗ P`, a right inverse of the projection.
    pub lift: Matrix<F>,
}

impl<F: Field> TensorOverB<F> {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

/// The balancing relations `p ⊗ b ⊗ q ↦ pb ⊗ q - p ⊗ bq`.
fn balancing_map<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Matrix<F> {
    let p = q.p();
    let (n, bd) = (p.dim(), q.b_dim());
    let e = q.b_embedding();
    let left = Composite::identity(&[n, bd, n]).on(1, e).apply(0, 2, p.mult(), &[n]).matrix();
    let right = Composite::identity(&[n, bd, n]).on(1, e).apply(1, 2, p.mult(), &[n]).matrix();
    left.sub(&right)
}

pub fn tensor_over_b<F: Field>(q: &QuantumHomogeneousSpace<F>) -> TensorOverB<F> {
    let relations = Subspace::column_space(&balancing_map(q));
    let qb = relations.quotient_basis();
    TensorOverB { relations, projection: qb.projection, lift: qb.lift }
}

/// `χ = (· ⊗ π)(id ⊗ Δ)` on `P ⊗ P`, `dim P dim H x (dim P)^2`.
pub fn chi_on_tensor_square<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Matrix<F> {
    let p = q.p();
    let n = p.dim();
    Composite::identity(&[n, n])
        .apply(1, 1, p.comult(), &[n, n])
        .apply(0, 2, p.mult(), &[n])
        .on(1, q.pi())
        .matrix()
}

/// `χ` on `P ⊗_B P`, after checking that it kills the balancing relations.
pub fn chi_map<F: Field>(q: &QuantumHomogeneousSpace<F>, t: &TensorOverB<F>) -> Result<Matrix<F>> {
    let chi = chi_on_tensor_square(q);
    let rel = balancing_map(q);
    let n = q.p().dim();
    let c = Check::compare("χ is balanced", &chi.mul(&rel), &Matrix::zeros(chi.rows(), rel.cols()), &[n, q.b_dim(), n]);
    c.into_result()?;
    Ok(chi.mul(&t.lift))
}

/// Outcome of the Hopf-Galois decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisReport {
    pub galois: bool,
    pub surjective: bool,
    pub injective: bool,
    pub rank: usize,
    /// `dim P ⊗_B P`
    pub tensor_dim: usize,
    /// `dim P ⊗ H`
    pub target_dim: usize,
    pub antipode_invertible: bool,
}

/// Decides bijectivity of `χ: P ⊗_B P -> P ⊗ H` by exact rank.
pub fn hopf_galois_check<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Result<GaloisReport> {
    let t = tensor_over_b(q);
    let chi = chi_map(q, &t)?;
    let rank = chi.rank();
    let tensor_dim = t.dim();
    let target_dim = q.p().dim() * q.h().dim();
    let surjective = rank == target_dim;
    let injective = rank == tensor_dim;
    let antipode_invertible = q.h().antipode_inverse()?.is_some();
    Ok(GaloisReport { galois: surjective && injective, surjective, injective, rank, tensor_dim, target_dim, antipode_invertible })
}

/// Crossed `(H, B)`-modules are covariant modules carrying a right
/// `B`-action and a right `H`-coaction, with laws [`Law::CROSSED`].
pub type CrossedHBModule<F> = CovariantModule<F>;

/// Builds a crossed module from its right action `dim x (dim * dim B)` and
/// right coaction `(dim * dim H) x dim`, and verifies it.
pub fn crossed_module<F: Field>(
    q: &QuantumHomogeneousSpace<F>,
    dim: usize,
    action: Matrix<F>,
    coaction: Matrix<F>,
) -> Result<CrossedHBModule<F>> {
    CovariantModule::bare(dim, q.frame().clone())
        .with_right_action(q.base().clone(), action)?
        .with_right_coaction(coaction)?
        .with_laws(Law::CROSSED)
        .certified("crossed module")
}

/// The structure laws and the crossed condition.
pub fn check_crossed_hb<F: Field>(x: &CrossedHBModule<F>) -> Report {
    Law::CROSSED.iter().map(|&l| x.check_law(l)).collect()
}

/// `k` with `1 ◁ b = ε(b)` and `1 ↦ 1 ⊗ 1`.
pub fn trivial_crossed_module<F: Field>(q: &QuantumHomogeneousSpace<F>) -> CrossedHBModule<F> {
    let action = q.b_counit();
    let coaction = Matrix::column_vector(q.h().unit());
    crossed_module(q, 1, action, coaction).expect("trivial crossed module")
}

/// `B⁺` with the right regular action and `b ↦ b(2) ⊗ π(S b(1))`.
pub fn canonical_crossed_bplus<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Result<CrossedHBModule<F>> {
    let p = q.p();
    let (n, bd) = (p.dim(), q.b_dim());
    let e = q.b_plus().embedding();
    let c = q.b_plus().coordinates();
    let k = e.cols();
    let bq = q.b_plus().quotient_basis();
    let action = Composite::identity(&[k, bd]).on(0, &e).apply(0, 2, q.b_algebra().mult(), &[bd]).on(0, &c).matrix();
    let pi_s = q.pi().mul(p.antipode());
    let coaction = Composite::from_map(&q.b_coproduct().mul(&e), &[n, bd]).on(0, &pi_s).swap(0);
    let outside = coaction.clone().on(0, &bq.projection).matrix();
    Check::compare("coaction of B⁺ lands in B⁺ ⊗ H", &outside, &Matrix::zeros(outside.rows(), k), &[k])
        .into_result()?;
    let coaction = coaction.on(0, &c).matrix();
    crossed_module(q, k, action, coaction)
}

/// `P⁺` with the right regular action and the right adjoint coaction
/// `p ↦ p(2) ⊗ S(p(1)) p(3)`, in the bicovariant frame of `P`.
pub fn adjoint_crossed_structure<F: Field>(p: Arc<FinHopfAlgebra<F>>) -> Result<CovariantModule<F>> {
    let n = p.dim();
    let frame = Arc::new(Frame::bicovariant(p.clone()));
    let plus = Subspace::kernel(&p.counit_matrix());
    let (e, c) = (plus.embedding(), plus.coordinates());
    let k = e.cols();
    let action = Composite::identity(&[k, n]).on(0, &e).apply(0, 2, p.mult(), &[n]).on(0, &c).matrix();
    let adjoint = adjoint_coaction_on(&p).mul(&e);
    let outside = Composite::from_map(&adjoint, &[n, n]).on(0, &plus.quotient_basis().projection).matrix();
    Check::compare("adjoint coaction lands in P⁺ ⊗ P", &outside, &Matrix::zeros(outside.rows(), k), &[k])
        .into_result()?;
    let coaction = Composite::from_map(&adjoint, &[n, n]).on(0, &c).matrix();
    CovariantModule::bare(k, frame.clone())
        .with_right_action(frame.base().clone(), action)?
        .with_right_coaction(coaction)?
        .with_laws(Law::CROSSED)
        .certified("adjoint crossed module")
}

/// `p ↦ p(2) ⊗ S(p(1)) p(3)` on all of `P`.
pub fn adjoint_coaction_on<F: Field>(p: &FinHopfAlgebra<F>) -> Matrix<F> {
    let n = p.dim();
    Composite::from_map(p.comult(), &[n, n])
        .apply(1, 1, p.comult(), &[n, n])
        .on(0, p.antipode())
        .permute(&[1, 0, 2])
        .apply(1, 2, p.mult(), &[n])
        .matrix()
}

/// The Yetter-Drinfeld condition for a module in a bicovariant frame.
pub fn check_yetter_drinfeld<F: Field>(x: &CovariantModule<F>) -> Report {
    let mut r = check_crossed_hb(x);
    if !x.frame().pi().is_identity() {
        r.push(Check::fail("bicovariant frame", Vec::new()).with_detail("π is not the identity"));
    }
    r
}

/// For `a ∈ B`: `a(2) ⊗ π(S a(1) a(3)) = a(2) ⊗ π(S a(1))`, which makes the
/// coaction of `B⁺` close on `B`.
pub fn coaction_closure_identity<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Check {
    let p = q.p();
    let n = p.dim();
    let de = p.comult().mul(q.b_embedding());
    let lhs = Composite::from_map(&de, &[n, n])
        .apply(1, 1, p.comult(), &[n, n])
        .on(0, p.antipode())
        .permute(&[1, 0, 2])
        .apply(1, 2, p.mult(), &[n])
        .on(1, q.pi());
    let rhs = Composite::from_map(&de, &[n, n]).on(0, &q.pi().mul(p.antipode())).swap(0);
    Check::compare_maps("coaction closure on B", &lhs, &rhs, &[q.b_dim()])
}

/// For `a ∈ B`: `a(1) ⊗ a(4) ⊗ π(a(2)) π(S a(3) a(5)) = a(1) ⊗ a(2) ⊗ 1`,
/// the right `H`-invariance of `ΔB`.
pub fn coproduct_invariance_identity<F: Field>(q: &QuantumHomogeneousSpace<F>) -> Check {
    let p = q.p();
    let h = q.h();
    let (n, nh) = (p.dim(), h.dim());
    let de = p.comult().mul(q.b_embedding());
    let lhs = Composite::from_map(&de, &[n, n])
        .apply(1, 1, p.comult(), &[n, n])
        .apply(2, 1, p.comult(), &[n, n])
        .apply(3, 1, p.comult(), &[n, n])
        .on(2, p.antipode())
        .permute(&[0, 3, 1, 2, 4])
        .apply(3, 2, p.mult(), &[n])
        .on(2, q.pi())
        .on(3, q.pi())
        .apply(2, 2, h.mult(), &[nh]);
    let rhs = Composite::from_map(&de, &[n, n]).insert(2, h.unit());
    Check::compare_maps("right H-invariance of the coproduct of B", &lhs, &rhs, &[q.b_dim()])
}

/// Formats a Galois report in one line.
pub fn describe_galois(g: &GaloisReport) -> alloc::string::String {
    format!(
        "χ rank {} on P ⊗_B P of dim {} into P ⊗ H of dim {}: {}",
        g.rank,
        g.tensor_dim,
        g.target_dim,
        if g.galois { "bijective" } else { "not bijective" }
    )
}
