//! Stable subspaces of a family of operators.
//!
//! The submodules of a module over the algebra generated by a set of
//! operators are enumerated by a composition-series recursion: find a
//! simple submodule `S`, enumerate the submodules of `V / S`, and for each
//! of them collect its preimage (the submodules containing `S`) and the
//! stable complements of `S` inside that preimage (the submodules meeting
//! `S` trivially). Complements are the solutions of a linear system, so
//! over a finite field they are listed exhaustively; over `Q` a nonzero
//! solution space means infinitely many submodules and only a sample is
//! returned, with a warning.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::CovariantModule;
use crate::error::{Error, Result};
use crate::field::{char_poly, Field};
use crate::linalg::{Matrix, Subspace};

/// Result of an enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration<F> {
    /// Distinct stable subspaces in canonical order.
    pub subspaces: Vec<Subspace<F>>,
    /// False when the lattice is infinite and only a sample was listed.
    pub complete: bool,
    /// Simple factors whose irreducibility could not be certified.
    pub uncertified: usize,
    pub warnings: Vec<String>,
}

/// Smallest subspace of `F^n` containing `seed` and stable under every
/// operator (the identity is implicit).
pub fn operator_closure<F: Field>(ops: &[Matrix<F>], n: usize, seed: &[Vec<F>]) -> Subspace<F> {
    let mut basis: Vec<Vec<F>> = Vec::new();
    let mut span = Subspace::zero(n);
    let mut queue: Vec<Vec<F>> = seed.to_vec();
    while let Some(v) = queue.pop() {
        let r = span.reduce(&v);
        if r.iter().all(F::is_zero) {
            continue;
        }
        basis.push(r.clone());
        span = Subspace::span(n, &basis);
        for op in ops {
            queue.push(op.apply(&r));
        }
    }
    span
}

/// Closure of a subspace under the operators of a module.
pub fn stable_subspace_closure<F: Field>(y: &CovariantModule<F>, seed: &Subspace<F>) -> Subspace<F> {
    operator_closure(&y.operators(), y.dim(), &seed.basis_vectors())
}

/// All subspaces of `y` stable under every action and coaction operator.
pub fn submodule_lattice<F: Field>(y: &CovariantModule<F>, cap: usize) -> Result<Enumeration<F>> {
    enumerate_stable_subspaces(&y.operators(), y.dim(), cap)
}

/// All subspaces of `F^n` stable under `ops`, at most `cap` of them.
pub fn enumerate_stable_subspaces<F: Field>(ops: &[Matrix<F>], n: usize, cap: usize) -> Result<Enumeration<F>> {
    let mut state = State { cap, complete: true, uncertified: 0, warnings: Vec::new() };
    let mut subspaces = state.enumerate(ops, n)?;
    subspaces.sort_by(|a, b| a.canonical_cmp(b));
    subspaces.dedup();
    Ok(Enumeration { subspaces, complete: state.complete, uncertified: state.uncertified, warnings: state.warnings })
}

struct State {
    cap: usize,
    complete: bool,
    uncertified: usize,
    warnings: Vec<String>,
}

fn restrict<F: Field>(ops: &[Matrix<F>], w: &Subspace<F>) -> Vec<Matrix<F>> {
    let (e, c) = (w.embedding(), w.coordinates());
    ops.iter().map(|op| c.mul(&op.mul(&e))).collect()
}

impl State {
    fn check_cap(&self, count: usize) -> Result<()> {
        if count > self.cap {
            Err(Error::CapExceeded(self.cap))
        } else {
            Ok(())
        }
    }

    fn enumerate<F: Field>(&mut self, ops: &[Matrix<F>], n: usize) -> Result<Vec<Subspace<F>>> {
        if n == 0 {
            return Ok(vec![Subspace::zero(0)]);
        }
        let s = self.simple_submodule(ops, n);
        let q = s.quotient_basis();
        let quotient_ops: Vec<Matrix<F>> = ops.iter().map(|op| q.projection.mul(&op.mul(&q.lift))).collect();
        let upper = self.enumerate(&quotient_ops, n - s.dim())?;
        let (s_emb, s_coord) = (s.embedding(), s.coordinates());
        let s_ops: Vec<Matrix<F>> = ops.iter().map(|op| s_coord.mul(&op.mul(&s_emb))).collect();
        let mut out = Vec::new();
        for wbar in &upper {
            out.push(wbar.preimage(&q.projection));
            if wbar.is_zero() {
                out.push(Subspace::zero(n));
            } else {
                let c = q.lift.mul(&wbar.embedding());
                let wbar_coord = wbar.coordinates();
                self.complements(ops, &s_ops, &s_emb, &s_coord, &c, &q.projection, &wbar_coord, &mut out)?;
            }
            self.check_cap(out.len())?;
        }
        Ok(out)
    }

    /// Stable complements of `S` in `S ⊕ span(c)`: graphs `{x + f x}` of
    /// maps `f: span(c) -> S` with `f δ_a - A_a f = β_a` for every
    /// operator `a`, where `a c = S-part β_a + c-part δ_a`.
    #[allow(clippy::too_many_arguments)]
    fn complements<F: Field>(
        &mut self,
        ops: &[Matrix<F>],
        s_ops: &[Matrix<F>],
        s_emb: &Matrix<F>,
        s_coord: &Matrix<F>,
        c: &Matrix<F>,
        projection: &Matrix<F>,
        wbar_coord: &Matrix<F>,
        out: &mut Vec<Subspace<F>>,
    ) -> Result<()> {
        let sd = s_emb.cols();
        let cd = c.cols();
        let unknowns = sd * cd;
        let mut rows: Vec<Vec<F>> = Vec::new();
        let mut rhs: Vec<F> = Vec::new();
        for (op, a_s) in ops.iter().zip(s_ops) {
            let ac = op.mul(c);
            let delta = wbar_coord.mul(&projection.mul(&ac));
            let beta = s_coord.mul(&ac.sub(&c.mul(&delta)));
            for i in 0..sd {
                for j in 0..cd {
                    let mut row = vec![F::zero(); unknowns];
                    for k in 0..cd {
                        row[i * cd + k] += delta[(k, j)].clone();
                    }
                    for k in 0..sd {
                        row[k * cd + j] -= a_s[(i, k)].clone();
                    }
                    rows.push(row);
                    rhs.push(beta[(i, j)].clone());
                }
            }
        }
        let system = Matrix::from_rows_with_cols(rows, Some(unknowns));
        let Some(particular) = system.solve(&Matrix::column_vector(&rhs)) else {
            return Ok(());
        };
        let particular = particular.column(0);
        let kernel = system.kernel_vectors();
        let graph = |f: &[F]| {
            let fm = Matrix::from_fn(sd, cd, |i, j| f[i * cd + j].clone());
            Subspace::column_space(&c.add(&s_emb.mul(&fm)))
        };
        if kernel.is_empty() {
            out.push(graph(&particular));
            return Ok(());
        }
        let p = F::characteristic();
        if p == 0 {
            self.complete = false;
            self.warnings.push(format!(
                "possibly infinite lattice: a {}-dimensional family of complements to a simple submodule of dimension {}",
                kernel.len(),
                sd
            ));
            out.push(graph(&particular));
            for k in &kernel {
                let f: Vec<F> = particular.iter().zip(k).map(|(a, b)| a.clone() + b.clone()).collect();
                out.push(graph(&f));
            }
            return Ok(());
        }
        let count = (p as u128).checked_pow(kernel.len() as u32).unwrap_or(u128::MAX);
        if count.saturating_add(out.len() as u128) > self.cap as u128 {
            return Err(Error::CapExceeded(self.cap));
        }
        let mut digits = vec![0u64; kernel.len()];
        loop {
            let mut f = particular.clone();
            for (d, k) in digits.iter().zip(&kernel) {
                if *d != 0 {
                    let s = F::from_i64(*d as i64);
                    for (x, y) in f.iter_mut().zip(k) {
                        x.add_product(&s, y);
                    }
                }
            }
            out.push(graph(&f));
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(());
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// A simple submodule of `F^n`, found by descending through proper
    /// submodules.
    fn simple_submodule<F: Field>(&mut self, ops: &[Matrix<F>], n: usize) -> Subspace<F> {
        let mut emb = Matrix::<F>::identity(n);
        let mut cur: Vec<Matrix<F>> = ops.to_vec();
        let mut m = n;
        loop {
            match split(&cur, m) {
                Split::Proper(w) => {
                    emb = emb.mul(&w.embedding());
                    cur = restrict(&cur, &w);
                    m = w.dim();
                }
                Split::Simple { certified } => {
                    if !certified {
                        self.uncertified += 1;
                        self.warnings.push(format!("irreducibility of a {m}-dimensional factor not certified"));
                    }
                    return Subspace::column_space(&emb);
                }
            }
        }
    }
}

enum Split<F> {
    Proper(Subspace<F>),
    Simple { certified: bool },
}

fn unit<F: Field>(m: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); m];
    v[i] = F::one();
    v
}

fn proper<F: Field>(w: &Subspace<F>, m: usize) -> bool {
    !w.is_zero() && w.dim() < m
}

fn shifted<F: Field>(a: &Matrix<F>, lambda: &F) -> Matrix<F> {
    a.sub(&Matrix::identity(a.rows()).scale(lambda))
}

/// Bound on the module dimension for the algebra-level certificates.
const ALGEBRA_CERT_LIMIT: usize = 12;
/// Bound on the number of vectors spun by the exhaustive finite-field test.
const BRUTE_SPIN_LIMIT: u128 = 1 << 14;

/// Finds a proper nonzero submodule, or decides (or guesses) simplicity.
fn split<F: Field>(ops: &[Matrix<F>], m: usize) -> Split<F> {
    if m <= 1 {
        return Split::Simple { certified: true };
    }
    for i in 0..m {
        let w = operator_closure(ops, m, &[unit(m, i)]);
        if proper(&w, m) {
            return Split::Proper(w);
        }
    }
    let transposed: Vec<Matrix<F>> = ops.iter().map(Matrix::transpose).collect();
    for a in candidate_elements(ops, m) {
        let rows = a.row_vecs();
        for lambda in F::roots(&char_poly(&rows)) {
            let shifted_a = shifted(&a, &lambda);
            let kernel = shifted_a.kernel_vectors();
            for v in &kernel {
                let w = operator_closure(ops, m, &[v.clone()]);
                if proper(&w, m) {
                    return Split::Proper(w);
                }
            }
            if kernel.len() == 1 {
                // Norton's test: with a one-dimensional null space, either
                // the dual spin is proper (and its annihilator is a proper
                // submodule) or the module is simple.
                let dual = shifted_a.transpose().kernel_vectors();
                let wt = operator_closure(&transposed, m, &dual);
                if proper(&wt, m) {
                    return Split::Proper(Subspace::kernel(wt.basis()));
                }
                return Split::Simple { certified: true };
            }
        }
    }
    if m <= ALGEBRA_CERT_LIMIT {
        if let Some(s) = algebra_split(ops, m) {
            return s;
        }
    }
    let p = F::characteristic();
    if p != 0 && (p as u128).checked_pow(m as u32).is_some_and(|c| c <= BRUTE_SPIN_LIMIT) {
        let mut v = vec![0u64; m];
        loop {
            let mut i = 0;
            loop {
                if i == m {
                    return Split::Simple { certified: true };
                }
                v[i] += 1;
                if v[i] < p {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
            let vec: Vec<F> = v.iter().map(|&x| F::from_i64(x as i64)).collect();
            let w = operator_closure(ops, m, &[vec]);
            if proper(&w, m) {
                return Split::Proper(w);
            }
        }
    }
    Split::Simple { certified: false }
}

/// Operators, their pairwise products and sums, and a weighted sum.
fn candidate_elements<F: Field>(ops: &[Matrix<F>], m: usize) -> Vec<Matrix<F>> {
    let mut out: Vec<Matrix<F>> = ops.to_vec();
    for (i, a) in ops.iter().enumerate() {
        for b in &ops[i + 1..] {
            out.push(a.mul(b));
            out.push(b.mul(a));
            out.push(a.add(b));
        }
    }
    let mut w = Matrix::zeros(m, m);
    for (k, a) in ops.iter().enumerate() {
        w = w.add(&a.scale(&F::from_i64(k as i64 + 1)));
    }
    out.push(w.mul(&w));
    out.push(w);
    out
}

/// Certificates through the algebra `A` spanned by the operator words and
/// through the commutant `End_A(V)`: a nonzero radical gives the proper
/// submodule `rad(A) V` (characteristic zero only), a singular nonzero
/// commutant element gives its kernel, and a semisimple module with scalar
/// commutant is simple.
fn algebra_split<F: Field>(ops: &[Matrix<F>], m: usize) -> Option<Split<F>> {
    let flat = |a: &Matrix<F>| -> Vec<F> { (0..m * m).map(|k| a[(k / m, k % m)].clone()).collect() };
    let unflat = |v: &[F]| Matrix::from_fn(m, m, |i, j| v[i * m + j].clone());
    // A as the closure of the identity under left multiplication by ops.
    let left_ops: Vec<Matrix<F>> = ops
        .iter()
        .map(|a| Matrix::from_fn(m * m, m * m, |r, c| if r % m == c % m { a[(r / m, c / m)].clone() } else { F::zero() }))
        .collect();
    let alg = operator_closure(&left_ops, m * m, &[flat(&Matrix::identity(m))]);
    let alg_basis: Vec<Matrix<F>> = alg.basis_vectors().iter().map(|v| unflat(v)).collect();
    let mut semisimple = false;
    if F::characteristic() == 0 {
        let k = alg_basis.len();
        let gram = Matrix::from_fn(k, k, |i, j| {
            let prod = alg_basis[i].mul(&alg_basis[j]);
            let mut t = F::zero();
            for d in 0..m {
                t += prod[(d, d)].clone();
            }
            t
        });
        let radical = gram.kernel_vectors();
        if radical.is_empty() {
            semisimple = true;
        } else {
            let mut images = Vec::new();
            for r in &radical {
                let x: Matrix<F> = r
                    .iter()
                    .zip(&alg_basis)
                    .fold(Matrix::zeros(m, m), |acc, (c, b)| acc.add(&b.scale(c)));
                images.extend((0..m).map(|j| x.column(j)));
            }
            let w = Subspace::span(m, &images);
            if proper(&w, m) {
                return Some(Split::Proper(w));
            }
        }
    }
    // Commutant: X a - a X = 0 for every operator.
    let mut rows: Vec<Vec<F>> = Vec::new();
    for a in ops {
        for i in 0..m {
            for j in 0..m {
                let mut row = vec![F::zero(); m * m];
                for k in 0..m {
                    row[i * m + k] += a[(k, j)].clone();
                    row[k * m + j] -= a[(i, k)].clone();
                }
                rows.push(row);
            }
        }
    }
    let commutant: Vec<Matrix<F>> =
        Matrix::from_rows_with_cols(rows, Some(m * m)).kernel_vectors().iter().map(|v| unflat(v)).collect();
    let mut elements = commutant.clone();
    for (i, a) in commutant.iter().enumerate() {
        for b in &commutant[i + 1..] {
            elements.push(a.add(b));
        }
    }
    for x in &elements {
        for lambda in F::roots(&char_poly(&x.row_vecs())) {
            let y = shifted(x, &lambda);
            if y.is_zero() {
                continue;
            }
            let w = Subspace::span(m, &y.kernel_vectors());
            if proper(&w, m) {
                return Some(Split::Proper(w));
            }
        }
    }
    if semisimple && commutant.len() == 1 {
        return Some(Split::Simple { certified: true });
    }
    None
}

/// Independent exhaustive enumeration for small cases, used to cross-check
/// [`enumerate_stable_subspaces`]. Over a finite field every submodule is
/// a sum of cyclic ones, so all cyclic submodules are spun and closed under
/// sums. Over `Q` only dimension at most 2 is supported, via common
/// eigenvector lines. Returns `None` when the case is out of reach or the
/// lattice is infinite.
pub fn brute_force_stable_subspaces<F: Field>(ops: &[Matrix<F>], n: usize) -> Option<Vec<Subspace<F>>> {
    let p = F::characteristic();
    let mut found: Vec<Subspace<F>> = vec![Subspace::zero(n), Subspace::full(n)];
    if p != 0 {
        let total = (p as u128).checked_pow(n as u32)?;
        if total > 1 << 16 {
            return None;
        }
        let mut cyclic: Vec<Subspace<F>> = Vec::new();
        for code in 1..total {
            let mut c = code;
            let v: Vec<F> = (0..n)
                .map(|_| {
                    let d = (c % p as u128) as i64;
                    c /= p as u128;
                    F::from_i64(d)
                })
                .collect();
            let w = operator_closure(ops, n, &[v]);
            if !cyclic.contains(&w) {
                cyclic.push(w);
            }
        }
        found.extend(cyclic.iter().cloned());
        let mut i = 0;
        while i < found.len() {
            for c in &cyclic {
                let s = found[i].sum(c).ok()?;
                if !found.contains(&s) {
                    found.push(s);
                }
            }
            i += 1;
        }
    } else {
        match n {
            0 => found.truncate(1),
            1 => {}
            2 => {
                let Some(a) = ops.iter().find(|a| !a.sub(&Matrix::identity(2).scale(&a[(0, 0)])).is_zero()) else {
                    return None;
                };
                for lambda in F::roots(&char_poly(&a.row_vecs())) {
                    for v in shifted(a, &lambda).kernel_vectors() {
                        let w = Subspace::span(2, &[v]);
                        if operator_closure(ops, 2, &w.basis_vectors()) == w && !found.contains(&w) {
                            found.push(w);
                        }
                    }
                }
            }
            _ => return None,
        }
    }
    found.sort_by(|a, b| a.canonical_cmp(b));
    found.dedup();
    Some(found)
}
