//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Everything is stored as matrices in the column convention: a map
//! `V -> W` is a `dim W x dim V` matrix, and tensor products are indexed
//! lexicographically, `e_i ⊗ e_j ↦ i * dim + j`. So the multiplication is
//! an `n x n²` matrix `M` with `M[k, (i, j)]` the coefficient of `e_k` in
//! `e_i e_j`, and the comultiplication is an `n² x n` matrix `D` with
//! `D[(j, k), i]` the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;

use crate::check::{Check, Report};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::linalg::{Composite, Matrix, Tensor3};

/// Names of the checks in [`FinHopfAlgebra::verify_axioms`], in order.
pub const AXIOMS: [&str; 8] = [
    "associativity",
    "unitality",
    "coassociativity",
    "counitality",
    "comultiplication multiplicative",
    "counit multiplicative",
    "left antipode",
    "right antipode",
];

/// A unital algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    dim: usize,
    mult: Matrix<F>,
    unit: Vec<F>,
}

impl<F: Field> Algebra<F> {
    pub fn new(mult: Matrix<F>, unit: Vec<F>) -> Result<Self> {
        let dim = unit.len();
        if mult.dims() != (dim, dim * dim) {
            return Err(Error::DimensionMismatch { context: "multiplication", expected: dim * dim, found: mult.cols() });
        }
        Ok(Algebra { dim, mult, unit })
    }

    /// From `t[(i, j, k)]` = coefficient of `e_k` in `e_i e_j`.
    pub fn from_tensor(t: &Tensor3<F>, unit: Vec<F>) -> Result<Self> {
        let n = unit.len();
        if t.shape() != [n, n, n] {
            return Err(Error::DimensionMismatch { context: "multiplication tensor", expected: n, found: t.shape()[0] });
        }
        Self::new(t.to_matrix(&[2], &[0, 1]), unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Matrix<F> {
        &self.mult
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn unit_matrix(&self) -> Matrix<F> {
        Matrix::column_vector(&self.unit)
    }

    pub fn mult_tensor(&self) -> Tensor3<F> {
        let n = self.dim;
        Tensor3::from_matrix(&self.mult, &[n, n, n], &[2], &[0, 1])
    }

    pub fn product(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut ab = Vec::with_capacity(self.dim * self.dim);
        for x in a {
            for y in b {
                ab.push(x.clone() * y.clone());
            }
        }
        self.mult.apply(&ab)
    }

    /// The operator `x ↦ a x`.
    pub fn left_mult_op(&self, a: &[F]) -> Matrix<F> {
        Composite::identity(&[self.dim]).insert(0, a).apply(0, 2, &self.mult, &[self.dim]).matrix()
    }

    /// The operator `x ↦ x a`.
    pub fn right_mult_op(&self, a: &[F]) -> Matrix<F> {
        Composite::identity(&[self.dim]).insert(1, a).apply(0, 2, &self.mult, &[self.dim]).matrix()
    }

    pub fn associativity(&self) -> Check {
        let n = self.dim;
        let m = &self.mult;
        let lhs = Composite::identity(&[n, n, n]).apply(0, 2, m, &[n]).apply(0, 2, m, &[n]);
        let rhs = Composite::identity(&[n, n, n]).apply(1, 2, m, &[n]).apply(0, 2, m, &[n]);
        Check::compare_maps(AXIOMS[0], &lhs, &rhs, &[n, n, n])
    }

    pub fn unitality(&self) -> Check {
        let n = self.dim;
        let id = Composite::identity(&[n]);
        let left = Composite::identity(&[n]).insert(0, &self.unit).apply(0, 2, &self.mult, &[n]);
        let right = Composite::identity(&[n]).insert(1, &self.unit).apply(0, 2, &self.mult, &[n]);
        Check::compare_maps(AXIOMS[1], &left, &id, &[n]).and(Check::compare_maps(AXIOMS[1], &right, &id, &[n]))
    }

    pub fn check_laws(&self) -> Report {
        [self.associativity(), self.unitality()].into_iter().collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        self.mult == self.mult.mul(&Matrix::tensor_permutation(&[n, n], &[1, 0]))
    }
}

/// A counital coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<F> {
    dim: usize,
    comult: Matrix<F>,
    counit: Vec<F>,
}

impl<F: Field> Coalgebra<F> {
    pub fn new(comult: Matrix<F>, counit: Vec<F>) -> Result<Self> {
        let dim = counit.len();
        if comult.dims() != (dim * dim, dim) {
            return Err(Error::DimensionMismatch { context: "comultiplication", expected: dim * dim, found: comult.rows() });
        }
        Ok(Coalgebra { dim, comult, counit })
    }

    /// From `t[(i, j, k)]` = coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub fn from_tensor(t: &Tensor3<F>, counit: Vec<F>) -> Result<Self> {
        let n = counit.len();
        if t.shape() != [n, n, n] {
            return Err(Error::DimensionMismatch { context: "comultiplication tensor", expected: n, found: t.shape()[0] });
        }
        Self::new(t.to_matrix(&[1, 2], &[0]), counit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &Matrix<F> {
        &self.comult
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn counit_matrix(&self) -> Matrix<F> {
        Matrix::row_vector(&self.counit)
    }

    pub fn comult_tensor(&self) -> Tensor3<F> {
        let n = self.dim;
        Tensor3::from_matrix(&self.comult, &[n, n, n], &[1, 2], &[0])
    }

    pub fn coassociativity(&self) -> Check {
        let n = self.dim;
        let d = &self.comult;
        let lhs = Composite::from_map(d, &[n, n]).apply(0, 1, d, &[n, n]);
        let rhs = Composite::from_map(d, &[n, n]).apply(1, 1, d, &[n, n]);
        Check::compare_maps(AXIOMS[2], &lhs, &rhs, &[n])
    }

    pub fn counitality(&self) -> Check {
        let n = self.dim;
        let e = self.counit_matrix();
        let id = Composite::identity(&[n]);
        let left = Composite::from_map(&self.comult, &[n, n]).apply(0, 1, &e, &[]);
        let right = Composite::from_map(&self.comult, &[n, n]).apply(1, 1, &e, &[]);
        Check::compare_maps(AXIOMS[3], &left, &id, &[n]).and(Check::compare_maps(AXIOMS[3], &right, &id, &[n]))
    }

    pub fn check_laws(&self) -> Report {
        [self.coassociativity(), self.counitality()].into_iter().collect()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        self.comult == Matrix::tensor_permutation(&[n, n], &[1, 0]).mul(&self.comult)
    }
}

/// Which structure tensor of a Hopf algebra an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    /// Index `[i, j, k]`: coefficient of `e_k` in `e_i e_j`.
    Mult,
    /// Index `[i]`.
    Unit,
    /// Index `[i, j, k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    Comult,
    /// Index `[i]`.
    Counit,
    /// Index `[i, j]`: coefficient of `e_i` in `S(e_j)`.
    Antipode,
}

/// A finite-dimensional Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopfAlgebra<F> {
    name: String,
    labels: Vec<String>,
    algebra: Arc<Algebra<F>>,
    coalgebra: Arc<Coalgebra<F>>,
    antipode: Matrix<F>,
}

impl<F: Field> FinHopfAlgebra<F> {
    /// Assembles the data; only the shapes are checked. Use
    /// [`FinHopfAlgebra::verify_axioms`] to certify it.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        algebra: Algebra<F>,
        coalgebra: Coalgebra<F>,
        antipode: Matrix<F>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if coalgebra.dim() != n {
            return Err(Error::DimensionMismatch { context: "coalgebra", expected: n, found: coalgebra.dim() });
        }
        if antipode.dims() != (n, n) {
            return Err(Error::DimensionMismatch { context: "antipode", expected: n, found: antipode.rows() });
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch { context: "basis labels", expected: n, found: labels.len() });
        }
        Ok(FinHopfAlgebra {
            name: name.into(),
            labels,
            algebra: Arc::new(algebra),
            coalgebra: Arc::new(coalgebra),
            antipode,
        })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn from_structure_constants(
        name: impl Into<String>,
        labels: Vec<String>,
        mult: &Tensor3<F>,
        unit: Vec<F>,
        comult: &Tensor3<F>,
        counit: Vec<F>,
        antipode: Matrix<F>,
    ) -> Result<Self> {
        Self::new(name, labels, Algebra::from_tensor(mult, unit)?, Coalgebra::from_tensor(comult, counit)?, antipode)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra<F>> {
        &self.coalgebra
    }

    pub fn mult(&self) -> &Matrix<F> {
        self.algebra.mult()
    }

    pub fn comult(&self) -> &Matrix<F> {
        self.coalgebra.comult()
    }

    pub fn unit(&self) -> &[F] {
        self.algebra.unit()
    }

    pub fn counit(&self) -> &[F] {
        self.coalgebra.counit()
    }

    pub fn unit_matrix(&self) -> Matrix<F> {
        self.algebra.unit_matrix()
    }

    pub fn counit_matrix(&self) -> Matrix<F> {
        self.coalgebra.counit_matrix()
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn mult_tensor(&self) -> Tensor3<F> {
        self.algebra.mult_tensor()
    }

    pub fn comult_tensor(&self) -> Tensor3<F> {
        self.coalgebra.comult_tensor()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Copy with one structure constant replaced.
    pub fn with_entry(&self, component: Component, index: &[usize], value: F) -> Result<Self> {
        let n = self.dim();
        let bad = || Error::Invalid(format!("index {index:?} out of range for {component:?}"));
        let mut alg = (*self.algebra).clone();
        let mut coalg = (*self.coalgebra).clone();
        let mut s = self.antipode.clone();
        match (component, index) {
            (Component::Mult, &[i, j, k]) if i < n && j < n && k < n => alg.mult[(k, i * n + j)] = value,
            (Component::Unit, &[i]) if i < n => alg.unit[i] = value,
            (Component::Comult, &[i, j, k]) if i < n && j < n && k < n => coalg.comult[(j * n + k, i)] = value,
            (Component::Counit, &[i]) if i < n => coalg.counit[i] = value,
            (Component::Antipode, &[i, j]) if i < n && j < n => s[(i, j)] = value,
            _ => return Err(bad()),
        }
        Self::new(self.name.clone(), self.labels.clone(), alg, coalg, s)
    }

    /// Current value of one structure constant.
    pub fn entry(&self, component: Component, index: &[usize]) -> F {
        let n = self.dim();
        match (component, index) {
            (Component::Mult, &[i, j, k]) => self.mult()[(k, i * n + j)].clone(),
            (Component::Unit, &[i]) => self.unit()[i].clone(),
            (Component::Comult, &[i, j, k]) => self.comult()[(j * n + k, i)].clone(),
            (Component::Counit, &[i]) => self.counit()[i].clone(),
            (Component::Antipode, &[i, j]) => self.antipode[(i, j)].clone(),
            _ => panic!("bad index {index:?} for {component:?}"),
        }
    }

    /// The eight Hopf algebra axioms, named as in [`AXIOMS`].
    pub fn verify_axioms(&self) -> Report {
        let n = self.dim();
        let m = self.mult();
        let d = self.comult();
        let u = self.unit();
        let e = self.counit_matrix();
        let mut report = Report::new();
        report.push(self.algebra.associativity());
        report.push(self.algebra.unitality());
        report.push(self.coalgebra.coassociativity());
        report.push(self.coalgebra.counitality());

        let lhs = Composite::identity(&[n, n]).apply(0, 2, m, &[n]).apply(0, 1, d, &[n, n]);
        let rhs = Composite::identity(&[n, n])
            .apply(0, 1, d, &[n, n])
            .apply(2, 1, d, &[n, n])
            .swap(1)
            .apply(0, 2, m, &[n])
            .apply(1, 2, m, &[n]);
        let delta_unit = Composite::<F>::from_map(&self.unit_matrix(), &[n]).apply(0, 1, d, &[n, n]);
        let unit_unit = Composite::<F>::identity(&[]).insert(0, u).insert(1, u);
        report.push(
            Check::compare_maps(AXIOMS[4], &lhs, &rhs, &[n, n])
                .and(Check::compare_maps(AXIOMS[4], &delta_unit, &unit_unit, &[])),
        );

        let lhs = Composite::identity(&[n, n]).apply(0, 2, m, &[n]).apply(0, 1, &e, &[]);
        let rhs = Composite::identity(&[n, n]).apply(0, 1, &e, &[]).apply(0, 1, &e, &[]);
        let eps_unit = e.apply(u);
        report.push(
            Check::compare_maps(AXIOMS[5], &lhs, &rhs, &[n, n])
                .and(Check::from_bool(AXIOMS[5], eps_unit[0].is_one())),
        );

        let unit_counit = Composite::identity(&[n]).apply(0, 1, &e, &[]).insert(0, u);
        let left = Composite::from_map(d, &[n, n]).on(0, &self.antipode).apply(0, 2, m, &[n]);
        let right = Composite::from_map(d, &[n, n]).on(1, &self.antipode).apply(0, 2, m, &[n]);
        report.push(Check::compare_maps(AXIOMS[6], &left, &unit_counit, &[n]));
        report.push(Check::compare_maps(AXIOMS[7], &right, &unit_counit, &[n]));
        report
    }

    /// Verifies the axioms and returns the algebra, or the failures.
    pub fn certified(self) -> Result<Self> {
        let report = self.verify_axioms();
        if report.all_passed() {
            Ok(self)
        } else {
            Err(Error::checks(format!("Hopf algebra {}", self.name), &report))
        }
    }

    /// The inverse of the antipode, if `S` is invertible. The skew antipode
    /// identities `S⁻¹(h(2)) h(1) = ε(h) 1 = h(2) S⁻¹(h(1))` are verified.
    pub fn antipode_inverse(&self) -> Result<Option<Matrix<F>>> {
        let Some(inv) = self.antipode.inverse() else {
            return Ok(None);
        };
        let n = self.dim();
        let (m, d) = (self.mult(), self.comult());
        let unit_counit = Composite::identity(&[n]).apply(0, 1, &self.counit_matrix(), &[]).insert(0, self.unit());
        let flipped = Composite::from_map(d, &[n, n]).swap(0);
        let left = flipped.clone().on(0, &inv).apply(0, 2, m, &[n]);
        let right = flipped.on(1, &inv).apply(0, 2, m, &[n]);
        let mut report = Report::new();
        report.push(Check::compare_maps("left skew antipode", &left, &unit_counit, &[n]));
        report.push(Check::compare_maps("right skew antipode", &right, &unit_counit, &[n]));
        report.into_result()?;
        Ok(Some(inv))
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// The linear dual: multiplication and comultiplication are transposed
    /// into each other, unit and counit swap, and `S` becomes `Sᵀ`. The
    /// basis is the dual basis, so the double dual is the original exactly.
    pub fn dual(&self) -> Self {
        let algebra = Algebra { dim: self.dim(), mult: self.comult().transpose(), unit: self.counit().to_vec() };
        let coalgebra = Coalgebra { dim: self.dim(), comult: self.mult().transpose(), counit: self.unit().to_vec() };
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        FinHopfAlgebra {
            name: format!("{}*", self.name),
            labels,
            algebra: Arc::new(algebra),
            coalgebra: Arc::new(coalgebra),
            antipode: self.antipode.transpose(),
        }
    }

    /// Structure-constant equality, ignoring names and labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra && self.antipode == other.antipode
    }
}

/// Free-function form of [`FinHopfAlgebra::verify_axioms`].
pub fn verify_hopf_axioms<F: Field>(h: &FinHopfAlgebra<F>) -> Report {
    h.verify_axioms()
}

/// Free-function form of [`FinHopfAlgebra::dual`].
pub fn dual_hopf<F: Field>(h: &FinHopfAlgebra<F>) -> FinHopfAlgebra<F> {
    h.dual()
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial<F: Field>() -> FinHopfAlgebra<F> {
    let one = Matrix::identity(1);
    let algebra = Algebra { dim: 1, mult: one.clone(), unit: vec![F::one()] };
    let coalgebra = Coalgebra { dim: 1, comult: one.clone(), counit: vec![F::one()] };
    FinHopfAlgebra::new("k", vec!["1".into()], algebra, coalgebra, one).expect("trivial Hopf algebra")
}

/// The group algebra `kG`: grouplike basis, `Δg = g ⊗ g`, `S g = g⁻¹`.
pub fn build_group_algebra<F: Field>(g: &FiniteGroup) -> FinHopfAlgebra<F> {
    let n = g.order();
    let mut mult = Matrix::zeros(n, n * n);
    let mut comult = Matrix::zeros(n * n, n);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            mult[(g.mul(a, b), a * n + b)] = F::one();
        }
        comult[(a * n + a, a)] = F::one();
        antipode[(g.inverse(a), a)] = F::one();
    }
    let mut unit = vec![F::zero(); n];
    unit[g.identity()] = F::one();
    let algebra = Algebra { dim: n, mult, unit };
    let coalgebra = Coalgebra { dim: n, comult, counit: vec![F::one(); n] };
    FinHopfAlgebra::new("kG", g.labels().to_vec(), algebra, coalgebra, antipode).expect("group algebra")
}

/// The function algebra `k(G)` in the basis of delta functions:
/// `δ_a δ_b = [a = b] δ_a`, `Δ δ_g = Σ_{ab = g} δ_a ⊗ δ_b`, `ε(δ_g) = [g = e]`,
/// `S δ_g = δ_{g⁻¹}`.
pub fn build_function_algebra<F: Field>(g: &FiniteGroup) -> FinHopfAlgebra<F> {
    let n = g.order();
    let mut mult = Matrix::zeros(n, n * n);
    let mut comult = Matrix::zeros(n * n, n);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        mult[(a, a * n + a)] = F::one();
        for b in 0..n {
            comult[(a * n + b, g.mul(a, b))] = F::one();
        }
        antipode[(g.inverse(a), a)] = F::one();
    }
    let mut counit = vec![F::zero(); n];
    counit[g.identity()] = F::one();
    let algebra = Algebra { dim: n, mult, unit: vec![F::one(); n] };
    let coalgebra = Coalgebra { dim: n, comult, counit };
    let labels = g.labels().iter().map(|l| format!("d[{l}]")).collect();
    FinHopfAlgebra::new("k(G)", labels, algebra, coalgebra, antipode).expect("function algebra")
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`.
pub fn build_sweedler<F: Field>() -> FinHopfAlgebra<F> {
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let n = 4;
    // (left, right, product index, sign)
    let products: [(usize, usize, usize, i64); 16] = [
        (ONE, ONE, ONE, 1),
        (ONE, G, G, 1),
        (ONE, X, X, 1),
        (ONE, GX, GX, 1),
        (G, ONE, G, 1),
        (G, G, ONE, 1),
        (G, X, GX, 1),
        (G, GX, X, 1),
        (X, ONE, X, 1),
        (X, G, GX, -1),
        (X, X, X, 0),
        (X, GX, X, 0),
        (GX, ONE, GX, 1),
        (GX, G, X, -1),
        (GX, X, X, 0),
        (GX, GX, X, 0),
    ];
    let mut mult = Matrix::zeros(n, n * n);
    for (a, b, c, s) in products {
        if s != 0 {
            mult[(c, a * n + b)] = F::from_i64(s);
        }
    }
    let mut comult = Matrix::zeros(n * n, n);
    for (i, terms) in [
        (ONE, &[(ONE, ONE)][..]),
        (G, &[(G, G)][..]),
        (X, &[(X, ONE), (G, X)][..]),
        (GX, &[(GX, G), (ONE, GX)][..]),
    ] {
        for &(j, k) in terms {
            comult[(j * n + k, i)] = F::one();
        }
    }
    let mut antipode = Matrix::zeros(n, n);
    antipode[(ONE, ONE)] = F::one();
    antipode[(G, G)] = F::one();
    antipode[(GX, X)] = -F::one();
    antipode[(X, GX)] = F::one();
    let mut unit = vec![F::zero(); n];
    unit[ONE] = F::one();
    let algebra = Algebra { dim: n, mult, unit };
    let counit = vec![F::one(), F::one(), F::zero(), F::zero()];
    let coalgebra = Coalgebra { dim: n, comult, counit };
    let labels = ["1", "g", "x", "gx"].iter().map(|s| String::from(*s)).collect();
    FinHopfAlgebra::new("H4", labels, algebra, coalgebra, antipode).expect("Sweedler algebra")
}

/// A certified surjection of Hopf algebras `π: P -> H`.
#[derive(Clone, Debug)]
pub struct HopfSurjection<F> {
    source: Arc<FinHopfAlgebra<F>>,
    target: Arc<FinHopfAlgebra<F>>,
    matrix: Matrix<F>,
}

impl<F: Field> HopfSurjection<F> {
    pub fn source(&self) -> &Arc<FinHopfAlgebra<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinHopfAlgebra<F>> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// `id: H -> H`.
    pub fn identity(h: Arc<FinHopfAlgebra<F>>) -> Self {
        let matrix = Matrix::identity(h.dim());
        HopfSurjection { source: h.clone(), target: h, matrix }
    }

    /// `ε: P -> k`.
    pub fn counit(p: Arc<FinHopfAlgebra<F>>) -> Self {
        let matrix = p.counit_matrix();
        HopfSurjection { source: p, target: Arc::new(trivial()), matrix }
    }
}

/// All morphism identities of a candidate surjection, plus surjectivity.
pub fn surjection_report<F: Field>(p: &FinHopfAlgebra<F>, h: &FinHopfAlgebra<F>, m: &Matrix<F>) -> Report {
    let (np, nh) = (p.dim(), h.dim());
    let mut report = Report::new();
    if m.dims() != (nh, np) {
        report.push(Check::fail("dimensions", Vec::new()).with_detail(format!(
            "expected {nh}x{np}, found {}x{}",
            m.rows(),
            m.cols()
        )));
        return report;
    }
    let lhs = Composite::identity(&[np, np]).apply(0, 2, p.mult(), &[np]).on(0, m);
    let rhs = Composite::identity(&[np, np]).on(0, m).on(1, m).apply(0, 2, h.mult(), &[nh]);
    report.push(Check::compare_maps("multiplicative", &lhs, &rhs, &[np, np]));
    report.push(Check::compare("unital", &m.mul(&p.unit_matrix()), &h.unit_matrix(), &[]));
    let lhs = Composite::from_map(p.comult(), &[np, np]).on(0, m).on(1, m);
    let rhs = Composite::from_map(m, &[nh]).apply(0, 1, h.comult(), &[nh, nh]);
    report.push(Check::compare_maps("comultiplicative", &lhs, &rhs, &[np]));
    report.push(Check::compare("counital", &h.counit_matrix().mul(m), &p.counit_matrix(), &[np]));
    report.push(Check::compare("antipode", &m.mul(p.antipode()), &h.antipode().mul(m), &[np]));
    let rank = m.rank();
    report.push(
        Check::from_bool("surjective", rank == nh).with_detail(format!("rank {rank} of {nh}")),
    );
    report
}

/// Certifies `m` as a surjection of Hopf algebras `p -> h`.
pub fn check_hopf_surjection<F: Field>(
    p: Arc<FinHopfAlgebra<F>>,
    h: Arc<FinHopfAlgebra<F>>,
    m: Matrix<F>,
) -> Result<HopfSurjection<F>> {
    let report = surjection_report(&p, &h, &m);
    let identities: Vec<&Check> = report.failures().into_iter().filter(|c| c.name != "surjective").collect();
    if !identities.is_empty() {
        let r: Report = identities.into_iter().cloned().collect();
        return Err(Error::checks("Hopf algebra map", &r));
    }
    if !report.all_passed() {
        return Err(Error::NotSurjective { rank: m.rank(), target: h.dim() });
    }
    Ok(HopfSurjection { source: p, target: h, matrix: m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn builders_pass_axioms() {
        let z2 = FiniteGroup::cyclic(2);
        let s3 = FiniteGroup::symmetric3();
        let all: [FinHopfAlgebra<Q>; 5] = [
            build_group_algebra(&z2),
            build_group_algebra(&s3),
            build_function_algebra(&s3),
            build_sweedler(),
            trivial(),
        ];
        for h in &all {
            let r = h.verify_axioms();
            assert_eq!(r.checks.len(), 8);
            assert!(r.all_passed(), "{}: {:?}", h.name(), r.failed_names());
        }
        let h: FinHopfAlgebra<Fp<2>> = build_group_algebra(&FiniteGroup::cyclic(3));
        assert!(h.verify_axioms().all_passed());
    }

    #[test]
    fn commutativity_flags() {
        let s3 = FiniteGroup::symmetric3();
        let ks3: FinHopfAlgebra<Q> = build_group_algebra(&s3);
        assert!(!ks3.is_commutative() && ks3.is_cocommutative());
        let fs3: FinHopfAlgebra<Q> = build_function_algebra(&s3);
        assert!(fs3.is_commutative() && !fs3.is_cocommutative());
    }

    #[test]
    fn sweedler_antipode_has_order_four() {
        let h: FinHopfAlgebra<Q> = build_sweedler();
        let s = h.antipode();
        let s2 = s.mul(s);
        assert!(!s2.is_identity());
        assert!(s2.mul(&s2).is_identity());
        assert_eq!(h.antipode_inverse().unwrap().unwrap(), s2.mul(s));
        assert_eq!(h.counit()[1], Q::one());
        assert!(h.counit()[2].is_zero());
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let s3 = FiniteGroup::symmetric3();
        let ks3: FinHopfAlgebra<Q> = build_group_algebra(&s3);
        assert!(ks3.dual().same_structure(&build_function_algebra(&s3)));
        let h: FinHopfAlgebra<Q> = build_sweedler();
        assert!(h.dual().verify_axioms().all_passed());
        assert!(h.dual().dual().same_structure(&h));
    }

    #[test]
    fn mutation_is_detected() {
        let h: FinHopfAlgebra<Q> = build_sweedler();
        let bad = h.with_entry(Component::Mult, &[2, 2, 1], Q::one()).unwrap();
        let r = bad.verify_axioms();
        let c = r.get("associativity").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().len(), 3);
        assert!(bad.certified().is_err());
    }

    #[test]
    fn example_surjections() {
        let h4: Arc<FinHopfAlgebra<Q>> = Arc::new(build_sweedler());
        let kz2 = Arc::new(build_group_algebra(&FiniteGroup::cyclic(2)));
        let m = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(check_hopf_surjection(h4.clone(), kz2.clone(), m).is_ok());
        let eps = h4.counit_matrix();
        assert!(check_hopf_surjection(h4.clone(), Arc::new(trivial()), eps).is_ok());
        // g ↦ 1 is not an algebra map compatible with x ↦ u.
        let bad = Matrix::from_i64(&[&[1, 1, 0, 0], &[0, 0, 1, 0]]);
        let err = check_hopf_surjection(h4.clone(), kz2.clone(), bad).unwrap_err();
        assert!(matches!(err, Error::ChecksFailed { .. }));
        let zero_rank = Matrix::from_i64(&[&[1, 1, 0, 0], &[0, 0, 0, 0]]);
        assert!(check_hopf_surjection(h4, kz2, zero_rank).is_err());
    }
}
