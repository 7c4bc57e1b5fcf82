//! Actions, coactions and covariant modules.
//!
//! A [`CovariantModule`] is a vector space with up to four structures: a
//! left action (by `P` or by `B`), a left `P`-coaction, a right
//! `H`-coaction and a right action (by `B`, or by `H` in the bicovariant
//! setting). The algebras involved are described by a [`Frame`].

mod lattice;
mod laws;
mod tensor;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

pub use lattice::{
    brute_force_stable_subspaces, enumerate_stable_subspaces, operator_closure, stable_subspace_closure,
    submodule_lattice, Enumeration,
};
pub use laws::Law;
pub use tensor::{tensor_structures, Recipe};

use crate::check::{Check, Report};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Algebra, Coalgebra, FinHopfAlgebra, HopfSurjection};
use crate::linalg::{Composite, Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// An algebra that acts on modules, together with the two coaction-like
/// maps the compatibility laws need: `λ: A -> P ⊗ A` and `ρ: A -> A ⊗ H`.
///
/// For `A = P` these are `Δ` and `(id ⊗ π)Δ`; for `A = B` they are the
/// restricted coproduct and `b ↦ b ⊗ 1`.
#[derive(Clone, Debug)]
pub struct Acting<F> {
    pub name: String,
    pub algebra: Arc<Algebra<F>>,
    pub lambda: Option<Matrix<F>>,
    pub rho: Option<Matrix<F>>,
}

impl<F: Field> Acting<F> {
    /// An algebra without coaction data.
    pub fn plain(name: impl Into<String>, algebra: Arc<Algebra<F>>) -> Self {
        Acting { name: name.into(), algebra, lambda: None, rho: None }
    }

    /// `P` acting, with `λ = Δ` and `ρ = (id ⊗ π)Δ`.
    pub fn total(surj: &HopfSurjection<F>) -> Self {
        let p = surj.source();
        let n = p.dim();
        let rho = Composite::from_map(p.comult(), &[n, n]).on(1, surj.matrix()).matrix();
        Acting { name: "P".into(), algebra: p.algebra().clone(), lambda: Some(p.comult().clone()), rho: Some(rho) }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn lambda(&self) -> Result<&Matrix<F>> {
        self.lambda.as_ref().ok_or_else(|| Error::Invalid(format!("{} carries no left coaction", self.name)))
    }

    fn rho(&self) -> Result<&Matrix<F>> {
        self.rho.as_ref().ok_or_else(|| Error::Invalid(format!("{} carries no right coaction", self.name)))
    }
}

/// The ambient data shared by a family of modules: a surjection
/// `π: P -> H`, `P` as acting algebra, and a second acting algebra (the
/// base) with its embedding into `P`.
#[derive(Clone, Debug)]
pub struct Frame<F> {
    surj: Arc<HopfSurjection<F>>,
    total: Arc<Acting<F>>,
    base: Arc<Acting<F>>,
    base_embedding: Matrix<F>,
}

impl<F: Field> Frame<F> {
    pub fn new(surj: Arc<HopfSurjection<F>>, base: Acting<F>, base_embedding: Matrix<F>) -> Result<Self> {
        let p = surj.source().dim();
        if base_embedding.dims() != (p, base.dim()) {
            return Err(Error::DimensionMismatch { context: "base embedding", expected: p, found: base_embedding.rows() });
        }
        let total = Arc::new(Acting::total(&surj));
        Ok(Frame { surj, total, base: Arc::new(base), base_embedding })
    }

    /// The bicovariant setting over `H`: `π = id` and `H` acts on both
    /// sides with `λ = ρ = Δ`.
    pub fn bicovariant(h: Arc<FinHopfAlgebra<F>>) -> Self {
        let n = h.dim();
        let surj = Arc::new(HopfSurjection::identity(h));
        let total = Arc::new(Acting::total(&surj));
        Frame { surj, base: total.clone(), total, base_embedding: Matrix::identity(n) }
    }

    pub fn surjection(&self) -> &Arc<HopfSurjection<F>> {
        &self.surj
    }

    pub fn p(&self) -> &FinHopfAlgebra<F> {
        self.surj.source()
    }

    pub fn h(&self) -> &FinHopfAlgebra<F> {
        self.surj.target()
    }

    pub fn pi(&self) -> &Matrix<F> {
        self.surj.matrix()
    }

    pub fn total(&self) -> &Arc<Acting<F>> {
        &self.total
    }

    pub fn base(&self) -> &Arc<Acting<F>> {
        &self.base
    }

    /// `B -> P`, `dim P x dim B`.
    pub fn base_embedding(&self) -> &Matrix<F> {
        &self.base_embedding
    }
}

/// A left or right action of an algebra on a space.
///
/// A left action is a `dim x (a * dim)` matrix on `A ⊗ V`, a right action a
/// `dim x (dim * a)` matrix on `V ⊗ A`.
#[derive(Clone, Debug)]
pub struct Action<F> {
    pub side: Side,
    pub acting: Arc<Acting<F>>,
    pub map: Matrix<F>,
}

impl<F: Field> Action<F> {
    pub fn new(side: Side, acting: Arc<Acting<F>>, map: Matrix<F>) -> Result<Self> {
        let n = map.rows();
        if map.cols() != n * acting.dim() {
            return Err(Error::DimensionMismatch { context: "action", expected: n * acting.dim(), found: map.cols() });
        }
        Ok(Action { side, acting, map })
    }

    /// `v ◁ a = ε(a) v` style trivial action through a character `chi`.
    pub fn trivial(side: Side, acting: Arc<Acting<F>>, dim: usize, chi: &[F]) -> Self {
        let a = acting.dim();
        let chi_row = Matrix::row_vector(chi);
        let map = match side {
            Side::Left => Composite::identity(&[a, dim]).apply(0, 1, &chi_row, &[]).matrix(),
            Side::Right => Composite::identity(&[dim, a]).apply(1, 1, &chi_row, &[]).matrix(),
        };
        Action { side, acting, map }
    }

    pub fn dim(&self) -> usize {
        self.map.rows()
    }

    /// Associativity and unit law.
    pub fn check_structure(&self) -> Report {
        let n = self.dim();
        let alg = &self.acting.algebra;
        let (a, m, u) = (alg.dim(), alg.mult(), alg.unit());
        let id = Composite::identity(&[n]);
        let (assoc_l, assoc_r, unit) = match self.side {
            Side::Left => (
                Composite::identity(&[a, a, n]).apply(1, 2, &self.map, &[n]).apply(0, 2, &self.map, &[n]),
                Composite::identity(&[a, a, n]).apply(0, 2, m, &[a]).apply(0, 2, &self.map, &[n]),
                Composite::identity(&[n]).insert(0, u).apply(0, 2, &self.map, &[n]),
            ),
            Side::Right => (
                Composite::identity(&[n, a, a]).apply(0, 2, &self.map, &[n]).apply(0, 2, &self.map, &[n]),
                Composite::identity(&[n, a, a]).apply(1, 2, m, &[a]).apply(0, 2, &self.map, &[n]),
                Composite::identity(&[n]).insert(1, u).apply(0, 2, &self.map, &[n]),
            ),
        };
        let dims = match self.side {
            Side::Left => [a, a, n],
            Side::Right => [n, a, a],
        };
        let mut r = Report::new();
        r.push(Check::compare_maps(format!("{} action associativity", self.side), &assoc_l, &assoc_r, &dims));
        r.push(Check::compare_maps(format!("{} action unit", self.side), &unit, &id, &[n]));
        r
    }

    /// The operators `v ↦ a_i ▷ v` (or `v ◁ a_i`) for the basis `a_i`.
    pub fn operators(&self) -> Vec<Matrix<F>> {
        let n = self.dim();
        let a = self.acting.dim();
        (0..a)
            .map(|k| match self.side {
                Side::Left => Matrix::from_fn(n, n, |i, j| self.map[(i, k * n + j)].clone()),
                Side::Right => Matrix::from_fn(n, n, |i, j| self.map[(i, j * a + k)].clone()),
            })
            .collect()
    }
}

/// A left or right coaction of a coalgebra on a space.
///
/// A left coaction is a `(c * dim) x dim` matrix into `C ⊗ V`, a right
/// coaction a `(dim * c) x dim` matrix into `V ⊗ C`.
#[derive(Clone, Debug)]
pub struct Coaction<F> {
    pub side: Side,
    pub coalgebra: Arc<Coalgebra<F>>,
    pub map: Matrix<F>,
}

impl<F: Field> Coaction<F> {
    pub fn new(side: Side, coalgebra: Arc<Coalgebra<F>>, map: Matrix<F>) -> Result<Self> {
        let n = map.cols();
        if map.rows() != n * coalgebra.dim() {
            return Err(Error::DimensionMismatch { context: "coaction", expected: n * coalgebra.dim(), found: map.rows() });
        }
        Ok(Coaction { side, coalgebra, map })
    }

    /// `v ↦ v ⊗ 1` (or `1 ⊗ v`) for a coalgebra with grouplike `one`.
    pub fn trivial(side: Side, coalgebra: Arc<Coalgebra<F>>, dim: usize, one: &[F]) -> Self {
        let at = match side {
            Side::Left => 0,
            Side::Right => 1,
        };
        let map = Composite::identity(&[dim]).insert(at, one).matrix();
        Coaction { side, coalgebra, map }
    }

    pub fn dim(&self) -> usize {
        self.map.cols()
    }

    pub fn out_dims(&self) -> [usize; 2] {
        let (n, c) = (self.dim(), self.coalgebra.dim());
        match self.side {
            Side::Left => [c, n],
            Side::Right => [n, c],
        }
    }

    /// Coassociativity and counit law.
    pub fn check_structure(&self) -> Report {
        let n = self.dim();
        let c = self.coalgebra.dim();
        let (d, e) = (self.coalgebra.comult(), self.coalgebra.counit_matrix());
        let dims = self.out_dims();
        let start = Composite::from_map(&self.map, &dims);
        let (lhs, rhs, counit) = match self.side {
            Side::Left => (
                start.clone().apply(1, 1, &self.map, &[c, n]),
                start.clone().apply(0, 1, d, &[c, c]),
                start.apply(0, 1, &e, &[]),
            ),
            Side::Right => (
                start.clone().apply(0, 1, &self.map, &[n, c]),
                start.clone().apply(1, 1, d, &[c, c]),
                start.apply(1, 1, &e, &[]),
            ),
        };
        let mut r = Report::new();
        r.push(Check::compare_maps(format!("{} coaction coassociativity", self.side), &lhs, &rhs, &[n]));
        r.push(Check::compare_maps(
            format!("{} coaction counit", self.side),
            &counit,
            &Composite::identity(&[n]),
            &[n],
        ));
        r
    }

    /// The operators `(φ_k ⊗ id)δ` (or `(id ⊗ φ_k)δ`) for the dual basis `φ_k`.
    pub fn operators(&self) -> Vec<Matrix<F>> {
        let n = self.dim();
        let c = self.coalgebra.dim();
        (0..c)
            .map(|k| match self.side {
                Side::Left => Matrix::from_fn(n, n, |i, j| self.map[(k * n + i, j)].clone()),
                Side::Right => Matrix::from_fn(n, n, |i, j| self.map[(i * c + k, j)].clone()),
            })
            .collect()
    }
}

/// Free-function form of the structure checks.
pub fn check_structure<F: Field>(s: &Structure<'_, F>) -> Report {
    match s {
        Structure::Action(a) => a.check_structure(),
        Structure::Coaction(c) => c.check_structure(),
    }
}

/// Either kind of structure, for [`check_structure`].
pub enum Structure<'a, F> {
    Action(&'a Action<F>),
    Coaction(&'a Coaction<F>),
}

/// The coinvariants of a coaction: `{v : δv = v ⊗ 1}` for a right
/// coaction, `{v : δv = 1 ⊗ v}` for a left one, where `1` is the given
/// grouplike element.
pub fn coinvariants<F: Field>(c: &Coaction<F>, one: &[F]) -> Subspace<F> {
    let triv = Coaction::trivial(c.side, c.coalgebra.clone(), c.dim(), one);
    Subspace::kernel(&c.map.sub(&triv.map))
}

/// Turns a right `H`-coaction into the left coaction
/// `x ↦ S⁻¹(x(1)) ⊗ x(0)`.
pub fn convert_right_to_left_coaction<F: Field>(c: &Coaction<F>, s_inv: &Matrix<F>) -> Result<Coaction<F>> {
    if c.side != Side::Right {
        return Err(Error::Invalid("expected a right coaction".into()));
    }
    let map = Composite::from_map(&c.map, &c.out_dims()).on(1, s_inv).swap(0).matrix();
    Coaction::new(Side::Left, c.coalgebra.clone(), map)
}

/// Inverse of [`convert_right_to_left_coaction`]: `x ↦ x(0) ⊗ S(x(-1))`.
pub fn convert_left_to_right_coaction<F: Field>(c: &Coaction<F>, s: &Matrix<F>) -> Result<Coaction<F>> {
    if c.side != Side::Left {
        return Err(Error::Invalid("expected a left coaction".into()));
    }
    let map = Composite::from_map(&c.map, &c.out_dims()).on(0, s).swap(0).matrix();
    Coaction::new(Side::Right, c.coalgebra.clone(), map)
}

/// A space with some of: left action, left `P`-coaction, right
/// `H`-coaction, right action; and the list of laws it must satisfy.
#[derive(Clone, Debug)]
pub struct CovariantModule<F> {
    dim: usize,
    frame: Arc<Frame<F>>,
    pub left_action: Option<Action<F>>,
    pub left_coaction: Option<Coaction<F>>,
    pub right_coaction: Option<Coaction<F>>,
    pub right_action: Option<Action<F>>,
    pub laws: Vec<Law>,
}

impl<F: Field> CovariantModule<F> {
    /// A module without structures.
    pub fn bare(dim: usize, frame: Arc<Frame<F>>) -> Self {
        CovariantModule {
            dim,
            frame,
            left_action: None,
            left_coaction: None,
            right_coaction: None,
            right_action: None,
            laws: Vec::new(),
        }
    }

    fn expect_dim(&self, found: usize, context: &'static str) -> Result<()> {
        if found != self.dim {
            return Err(Error::DimensionMismatch { context, expected: self.dim, found });
        }
        Ok(())
    }

    pub fn with_left_action(mut self, acting: Arc<Acting<F>>, map: Matrix<F>) -> Result<Self> {
        let a = Action::new(Side::Left, acting, map)?;
        self.expect_dim(a.dim(), "left action")?;
        self.left_action = Some(a);
        Ok(self)
    }

    pub fn with_right_action(mut self, acting: Arc<Acting<F>>, map: Matrix<F>) -> Result<Self> {
        let a = Action::new(Side::Right, acting, map)?;
        self.expect_dim(a.dim(), "right action")?;
        self.right_action = Some(a);
        Ok(self)
    }

    /// Left coaction of `P`.
    pub fn with_left_coaction(mut self, map: Matrix<F>) -> Result<Self> {
        let c = Coaction::new(Side::Left, self.frame.p().coalgebra().clone(), map)?;
        self.expect_dim(c.dim(), "left coaction")?;
        self.left_coaction = Some(c);
        Ok(self)
    }

    /// Right coaction of `H`.
    pub fn with_right_coaction(mut self, map: Matrix<F>) -> Result<Self> {
        let c = Coaction::new(Side::Right, self.frame.h().coalgebra().clone(), map)?;
        self.expect_dim(c.dim(), "right coaction")?;
        self.right_coaction = Some(c);
        Ok(self)
    }

    pub fn with_laws(mut self, laws: &[Law]) -> Self {
        self.laws = laws.to_vec();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn frame(&self) -> &Arc<Frame<F>> {
        &self.frame
    }

    /// Every generator of the operator algebra: action operators for a
    /// basis of each acting algebra and coaction components for a dual
    /// basis of each coalgebra.
    pub fn operators(&self) -> Vec<Matrix<F>> {
        let mut ops = Vec::new();
        if let Some(a) = &self.left_action {
            ops.extend(a.operators());
        }
        if let Some(c) = &self.left_coaction {
            ops.extend(c.operators());
        }
        if let Some(c) = &self.right_coaction {
            ops.extend(c.operators());
        }
        if let Some(a) = &self.right_action {
            ops.extend(a.operators());
        }
        ops
    }

    /// Structure checks of every present structure, then every listed law.
    pub fn verify(&self) -> Report {
        let mut r = Report::new();
        for law in &self.laws {
            r.push(self.check_law(*law));
        }
        r
    }

    /// Verifies and returns the module, or the failures.
    pub fn certified(self, context: &str) -> Result<Self> {
        let r = self.verify();
        if r.all_passed() {
            Ok(self)
        } else {
            Err(Error::checks(context, &r))
        }
    }

    /// Left `P`-coinvariants `{y : δ_L y = 1 ⊗ y}`.
    pub fn left_coinvariants(&self) -> Result<Subspace<F>> {
        let c = self.left_coaction.as_ref().ok_or_else(|| Error::Invalid("no left coaction".into()))?;
        Ok(coinvariants(c, self.frame.p().unit()))
    }

    /// Right `H`-coinvariants `{y : δ_R y = y ⊗ 1}`.
    pub fn right_coinvariants(&self) -> Result<Subspace<F>> {
        let c = self.right_coaction.as_ref().ok_or_else(|| Error::Invalid("no right coaction".into()))?;
        Ok(coinvariants(c, self.frame.h().unit()))
    }

    /// Name of the first structure that does not preserve `w`.
    pub fn unstable_structure(&self, w: &Subspace<F>) -> Option<String> {
        let q = w.quotient_basis();
        let e = w.embedding();
        let named: [(&str, Vec<Matrix<F>>); 4] = [
            ("left action", self.left_action.as_ref().map(Action::operators).unwrap_or_default()),
            ("left coaction", self.left_coaction.as_ref().map(Coaction::operators).unwrap_or_default()),
            ("right coaction", self.right_coaction.as_ref().map(Coaction::operators).unwrap_or_default()),
            ("right action", self.right_action.as_ref().map(Action::operators).unwrap_or_default()),
        ];
        for (name, ops) in named {
            if let Some(k) = ops.iter().position(|op| !q.projection.mul(&op.mul(&e)).is_zero()) {
                return Some(format!("{name} (generator {k})"));
            }
        }
        None
    }

    fn transport(&self, into: &Matrix<F>, out_of: &Matrix<F>, laws: &[Law]) -> Result<Self> {
        // `into: V -> W` and `out_of: W -> V` with W the new space.
        let m = into.rows();
        let mut y = CovariantModule::bare(m, self.frame.clone()).with_laws(laws);
        if let Some(a) = &self.left_action {
            let k = a.acting.dim();
            let map = Composite::identity(&[k, m]).on(1, out_of).apply(0, 2, &a.map, &[self.dim]).on(0, into);
            y = y.with_left_action(a.acting.clone(), map.matrix())?;
        }
        if let Some(c) = &self.left_coaction {
            let map = Composite::from_map(&c.map.mul(out_of), &c.out_dims()).on(1, into);
            y = y.with_left_coaction(map.matrix())?;
        }
        if let Some(c) = &self.right_coaction {
            let map = Composite::from_map(&c.map.mul(out_of), &c.out_dims()).on(0, into);
            y = y.with_right_coaction(map.matrix())?;
        }
        if let Some(a) = &self.right_action {
            let k = a.acting.dim();
            let map = Composite::identity(&[m, k]).on(0, out_of).apply(0, 2, &a.map, &[self.dim]).on(0, into);
            y = y.with_right_action(a.acting.clone(), map.matrix())?;
        }
        Ok(y)
    }

    /// The submodule `w` with the restricted structures, in the canonical
    /// basis of `w`.
    pub fn restrict(&self, w: &Subspace<F>) -> Result<Self> {
        if let Some(s) = self.unstable_structure(w) {
            return Err(Error::NotStable(s));
        }
        self.transport(&w.coordinates(), &w.embedding(), &self.laws.clone())
    }

    /// The same module expressed in a new basis: `change` maps old
    /// coordinates to new ones and must be invertible.
    pub fn rebase(&self, change: &Matrix<F>) -> Result<Self> {
        let inv = change.inverse().ok_or_else(|| Error::Invalid("basis change is singular".into()))?;
        self.transport(change, &inv, &self.laws.clone())
    }
}

/// The quotient `y / w` with the induced structures, in the coordinates of
/// the complement chosen by [`Subspace::quotient_basis`]. All laws are
/// re-verified.
pub fn quotient_module<F: Field>(y: &CovariantModule<F>, w: &Subspace<F>) -> Result<CovariantModule<F>> {
    if w.ambient() != y.dim() {
        return Err(Error::DimensionMismatch { context: "quotient subspace", expected: y.dim(), found: w.ambient() });
    }
    if let Some(s) = y.unstable_structure(w) {
        return Err(Error::NotStable(s));
    }
    let q = w.quotient_basis();
    y.transport(&q.projection, &q.lift, &y.laws.clone())?.certified("quotient module")
}

/// Checks that `f: from -> to` intertwines every structure present on
/// both sides.
pub fn check_morphism<F: Field>(f: &Matrix<F>, from: &CovariantModule<F>, to: &CovariantModule<F>) -> Report {
    let mut r = Report::new();
    if f.dims() != (to.dim(), from.dim()) {
        r.push(Check::fail("morphism shape", Vec::new()).with_detail(format!(
            "expected {}x{}, found {}x{}",
            to.dim(),
            from.dim(),
            f.rows(),
            f.cols()
        )));
        return r;
    }
    let (n, m) = (from.dim(), to.dim());
    if let (Some(a), Some(b)) = (&from.left_action, &to.left_action) {
        let k = a.acting.dim();
        let lhs = Composite::identity(&[k, n]).apply(0, 2, &a.map, &[n]).on(0, f);
        let rhs = Composite::identity(&[k, n]).on(1, f).apply(0, 2, &b.map, &[m]);
        r.push(Check::compare_maps("intertwines left action", &lhs, &rhs, &[k, n]));
    }
    if let (Some(a), Some(b)) = (&from.left_coaction, &to.left_coaction) {
        let lhs = Composite::from_map(&a.map, &a.out_dims()).on(1, f);
        let rhs = Composite::from_map(&b.map.mul(f), &b.out_dims());
        r.push(Check::compare_maps("intertwines left coaction", &lhs, &rhs, &[n]));
    }
    if let (Some(a), Some(b)) = (&from.right_coaction, &to.right_coaction) {
        let lhs = Composite::from_map(&a.map, &a.out_dims()).on(0, f);
        let rhs = Composite::from_map(&b.map.mul(f), &b.out_dims());
        r.push(Check::compare_maps("intertwines right coaction", &lhs, &rhs, &[n]));
    }
    if let (Some(a), Some(b)) = (&from.right_action, &to.right_action) {
        let k = a.acting.dim();
        let lhs = Composite::identity(&[n, k]).apply(0, 2, &a.map, &[n]).on(0, f);
        let rhs = Composite::identity(&[n, k]).on(0, f).apply(0, 2, &b.map, &[m]);
        r.push(Check::compare_maps("intertwines right action", &lhs, &rhs, &[n, k]));
    }
    r
}

/// Checks that `f` and `g` are mutually inverse morphisms.
pub fn check_isomorphism<F: Field>(
    f: &Matrix<F>,
    g: &Matrix<F>,
    from: &CovariantModule<F>,
    to: &CovariantModule<F>,
) -> Report {
    let mut r = Report::new();
    let shapes_ok = f.dims() == (to.dim(), from.dim()) && g.dims() == (from.dim(), to.dim());
    r.push(Check::from_bool("inverse shapes", shapes_ok));
    if !shapes_ok {
        return r;
    }
    r.push(Check::compare("inverse on source", &g.mul(f), &Matrix::identity(from.dim()), &[from.dim()]));
    r.push(Check::compare("inverse on target", &f.mul(g), &Matrix::identity(to.dim()), &[to.dim()]));
    r.extend(check_morphism(f, from, to));
    r.extend(check_morphism(g, to, from));
    r
}

/// `P` with its regular structures: left and right multiplication (the
/// latter restricted to the base), `δ_L = Δ` and `δ_R = (id ⊗ π)Δ`.
pub fn regular_module<F: Field>(frame: &Arc<Frame<F>>) -> CovariantModule<F> {
    let p = frame.p();
    let n = p.dim();
    let right = Composite::identity(&[n, frame.base().dim()])
        .on(1, frame.base_embedding())
        .apply(0, 2, p.mult(), &[n])
        .matrix();
    let rho = frame.total().rho.clone().expect("total acting algebra has ρ");
    CovariantModule::bare(n, frame.clone())
        .with_left_action(frame.total().clone(), p.mult().clone())
        .and_then(|y| y.with_left_coaction(p.comult().clone()))
        .and_then(|y| y.with_right_coaction(rho))
        .and_then(|y| y.with_right_action(frame.base().clone(), right))
        .expect("regular structures have consistent shapes")
        .with_laws(Law::HOPF_BIMODULE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::group::FiniteGroup;
    use crate::hopf::{build_function_algebra, build_group_algebra, build_sweedler};

    type Q = Rational;

    fn frames() -> Vec<Arc<Frame<Q>>> {
        vec![
            Arc::new(Frame::bicovariant(Arc::new(build_sweedler()))),
            Arc::new(Frame::bicovariant(Arc::new(build_group_algebra(&FiniteGroup::symmetric3())))),
            Arc::new(Frame::bicovariant(Arc::new(build_function_algebra(&FiniteGroup::symmetric3())))),
        ]
    }

    #[test]
    fn regular_module_satisfies_all_hopf_bimodule_laws() {
        for f in frames() {
            let y = regular_module(&f);
            let r = y.verify();
            assert!(r.all_passed(), "{:?}", r.failed_names());
        }
    }

    #[test]
    fn zero_module_passes_everything() {
        for f in frames() {
            let y = regular_module(&f);
            let z = y.restrict(&Subspace::zero(y.dim())).unwrap();
            assert_eq!(z.dim(), 0);
            assert!(z.verify().all_passed());
        }
    }

    #[test]
    fn perturbed_action_fails_associativity() {
        let f = frames().remove(0);
        let y = regular_module(&f);
        let a = y.left_action.clone().unwrap();
        let mut m = a.map.clone();
        m[(0, 5)] += Q::one();
        let bad = Action::new(Side::Left, a.acting.clone(), m).unwrap();
        let c = bad.check_structure();
        assert!(!c.get("left action associativity").unwrap().passed);
    }

    #[test]
    fn coinvariants_of_regular_coaction_are_scalars() {
        for f in frames() {
            let y = regular_module(&f);
            let w = y.right_coinvariants().unwrap();
            assert_eq!(w.dim(), 1);
            assert!(w.contains_vector(f.p().unit()));
        }
    }

    #[test]
    fn coaction_conversion_round_trips() {
        for f in frames() {
            let h = f.h();
            let s_inv = h.antipode_inverse().unwrap().unwrap();
            let d = Coaction::new(Side::Right, h.coalgebra().clone(), h.comult().clone()).unwrap();
            let l = convert_right_to_left_coaction(&d, &s_inv).unwrap();
            assert!(l.check_structure().all_passed());
            let back = convert_left_to_right_coaction(&l, h.antipode()).unwrap();
            assert_eq!(back.map, d.map);
            assert_eq!(coinvariants(&l, h.unit()), coinvariants(&d, h.unit()));
        }
    }

    #[test]
    fn trivial_coaction_has_full_coinvariants() {
        let f = frames().remove(0);
        let h = f.h();
        let c = Coaction::trivial(Side::Right, h.coalgebra().clone(), 3, h.unit());
        assert!(c.check_structure().all_passed());
        assert!(coinvariants(&c, h.unit()).is_full());
    }

    #[test]
    fn lattice_of_regular_kz2_module() {
        let g = FiniteGroup::cyclic(2);
        let h = Arc::new(build_group_algebra::<Q>(&g));
        let a = Action::new(Side::Left, Arc::new(Acting::plain("kZ2", h.algebra().clone())), h.mult().clone()).unwrap();
        let e = enumerate_stable_subspaces(&a.operators(), 2, 100).unwrap();
        assert!(e.complete);
        assert_eq!(e.subspaces.len(), 4);
    }

    #[test]
    fn lattice_with_repeated_factor() {
        // Scalars only: every subspace of Q^2 is stable.
        let ops = vec![Matrix::<Q>::identity(2)];
        let e = enumerate_stable_subspaces(&ops, 2, 100).unwrap();
        assert!(!e.complete);
        assert!(!e.warnings.is_empty());
        // Over GF(3) there are 4 lines.
        let ops = vec![Matrix::<Fp<3>>::identity(2)];
        let e = enumerate_stable_subspaces(&ops, 2, 100).unwrap();
        assert!(e.complete);
        assert_eq!(e.subspaces.len(), 6);
        assert_eq!(brute_force_stable_subspaces(&ops, 2).unwrap(), e.subspaces);
        assert!(matches!(enumerate_stable_subspaces(&ops, 2, 3), Err(Error::CapExceeded(3))));
    }

    #[test]
    fn regular_ks3_lattice_over_gf5_matches_brute_force() {
        let h = build_group_algebra::<Fp<5>>(&FiniteGroup::symmetric3());
        let ops = h.algebra().clone();
        let ops: Vec<Matrix<Fp<5>>> = (0..6)
            .map(|k| Matrix::from_fn(6, 6, |i, j| ops.mult()[(i, k * 6 + j)].clone()))
            .collect();
        let e = enumerate_stable_subspaces(&ops, 6, 100_000).unwrap();
        assert!(e.complete);
        assert_eq!(brute_force_stable_subspaces(&ops, 6).unwrap(), e.subspaces);
        for a in &e.subspaces {
            for b in &e.subspaces {
                assert!(e.subspaces.contains(&a.sum(b).unwrap()));
                assert!(e.subspaces.contains(&a.intersect(b).unwrap()));
            }
        }
    }

    #[test]
    fn quotient_by_zero_and_full() {
        let f = frames().remove(0);
        let y = regular_module(&f);
        let q0 = quotient_module(&y, &Subspace::zero(4)).unwrap();
        assert_eq!(q0.dim(), 4);
        assert!(check_isomorphism(&Matrix::identity(4), &Matrix::identity(4), &y, &q0).all_passed());
        let qf = quotient_module(&y, &Subspace::full(4)).unwrap();
        assert_eq!(qf.dim(), 0);
        let unstable = Subspace::span(4, &[vec![Q::zero(), Q::one(), Q::zero(), Q::zero()]]);
        assert!(matches!(quotient_module(&y, &unstable), Err(Error::NotStable(_))));
    }

    #[test]
    fn closure_is_idempotent() {
        let f = frames().remove(2);
        let y = regular_module(&f);
        let seed = Subspace::span(6, &[vec![Q::one(), Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::zero()]]);
        let c = stable_subspace_closure(&y, &seed);
        assert_eq!(stable_subspace_closure(&y, &c), c);
        assert!(y.unstable_structure(&c).is_none());
    }
}
