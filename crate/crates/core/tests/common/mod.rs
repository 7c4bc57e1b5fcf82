//! Oracles for the integration tests. They read raw structure constants
//! entry by entry and use their own elimination, so they share no code
//! path with the linear algebra of the library.

#![allow(dead_code)]

use hopfhom_core::field::Field;
use hopfhom_core::hopf::{Component, FinHopfAlgebra};

/// Dense row-major matrix as plain vectors.
pub type Rows<F> = Vec<Vec<F>>;

/// Row reduction in place; returns the pivot columns.
pub fn reduce<F: Field>(rows: &mut Rows<F>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let v = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<F: Field>(rows: &Rows<F>) -> usize {
    reduce(&mut rows.clone()).len()
}

/// A basis of the kernel of `rows` (as a map on column vectors).
pub fn kernel<F: Field>(rows: &Rows<F>, ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.clone();
    let pivots = reduce(&mut m);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = F::zero() - m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Is `v` in the span of `basis`?
pub fn in_span<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    let mut with: Rows<F> = basis.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(&basis.to_vec())
}

pub fn zeros<F: Field>(r: usize, c: usize) -> Rows<F> {
    vec![vec![F::zero(); c]; r]
}

pub fn mult<F: Field>(h: &FinHopfAlgebra<F>, a: &[F], b: &[F]) -> Vec<F> {
    let n = h.dim();
    let mut out = vec![F::zero(); n];
    for i in 0..n {
        for j in 0..n {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            for k in 0..n {
                let c = h.entry(Component::Mult, &[i, j, k]);
                out[k] = out[k].clone() + a[i].clone() * b[j].clone() * c;
            }
        }
    }
    out
}

pub fn basis_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// `(id ⊗ π)Δ - id ⊗ 1` as rows indexed by `(j, l)`, `l` a basis index of `H`.
pub fn coinvariant_equations<F: Field>(p: &FinHopfAlgebra<F>, h: &FinHopfAlgebra<F>, pi: &Rows<F>) -> Rows<F> {
    let (n, m) = (p.dim(), h.dim());
    let mut rows = zeros::<F>(n * m, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = p.entry(Component::Comult, &[i, j, k]);
                if c.is_zero() {
                    continue;
                }
                for l in 0..m {
                    rows[j * m + l][i] = rows[j * m + l][i].clone() + c.clone() * pi[l][k].clone();
                }
            }
        }
        for l in 0..m {
            rows[i * m + l][i] = rows[i * m + l][i].clone() - h.entry(Component::Unit, &[l]);
        }
    }
    rows
}

/// A basis of `B = P^H` from the raw tensors.
pub fn coinvariants<F: Field>(p: &FinHopfAlgebra<F>, h: &FinHopfAlgebra<F>, pi: &Rows<F>) -> Vec<Vec<F>> {
    kernel(&coinvariant_equations(p, h, pi), p.dim())
}

/// Galois data: `(dim P ⊗_B P, rank of χ on P ⊗ P, χ kills the relations)`.
pub fn galois<F: Field>(p: &FinHopfAlgebra<F>, h: &FinHopfAlgebra<F>, pi: &Rows<F>) -> (usize, usize, bool) {
    let (n, m) = (p.dim(), h.dim());
    let b = coinvariants(p, h, pi);
    let e = |i| basis_vector::<F>(n, i);
    // χ(e_a ⊗ e_c) = Σ e_a e_j ⊗ π(e_k) over Δ(e_c) = Σ e_j ⊗ e_k, as a column.
    let chi = |a: usize, c: usize| -> Vec<F> {
        let mut col = vec![F::zero(); n * m];
        for j in 0..n {
            for k in 0..n {
                let coef = p.entry(Component::Comult, &[c, j, k]);
                if coef.is_zero() {
                    continue;
                }
                let prod = mult(p, &e(a), &e(j));
                for s in 0..n {
                    for l in 0..m {
                        col[s * m + l] = col[s * m + l].clone() + coef.clone() * prod[s].clone() * pi[l][k].clone();
                    }
                }
            }
        }
        col
    };
    let columns: Vec<Vec<F>> = (0..n).flat_map(|a| (0..n).map(move |c| (a, c))).map(|(a, c)| chi(a, c)).collect();
    let mut chi_rows = zeros::<F>(n * m, n * n);
    for (col, v) in columns.iter().enumerate() {
        for r in 0..n * m {
            chi_rows[r][col] = v[r].clone();
        }
    }
    // Relations a b ⊗ c - a ⊗ b c, as vectors of P ⊗ P.
    let mut relations: Rows<F> = Vec::new();
    for a in 0..n {
        for c in 0..n {
            for bv in &b {
                let left = mult(p, &e(a), bv);
                let right = mult(p, bv, &e(c));
                let mut v = vec![F::zero(); n * n];
                for s in 0..n {
                    v[s * n + c] = v[s * n + c].clone() + left[s].clone();
                    v[a * n + s] = v[a * n + s].clone() - right[s].clone();
                }
                relations.push(v);
            }
        }
    }
    let kills = relations.iter().all(|v| {
        (0..n * m).all(|r| {
            let mut acc = F::zero();
            for (k, x) in v.iter().enumerate() {
                acc = acc + chi_rows[r][k].clone() * x.clone();
            }
            acc.is_zero()
        })
    });
    (n * n - rank(&relations), rank(&chi_rows), kills)
}

/// Every subspace of `F_p^n` stable under `ops` (row-major square matrices),
/// by listing all reduced echelon forms.
pub fn stable_subspaces_mod_p<F: Field>(ops: &[Rows<F>], n: usize) -> Vec<Vec<Vec<F>>> {
    let p = F::characteristic() as usize;
    assert!(p > 0);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let count = p.pow(free.len() as u32);
        for code in 0..count {
            let mut basis: Rows<F> = pivots.iter().map(|&pc| basis_vector(n, pc)).collect();
            let mut rest = code;
            for &(r, c) in &free {
                basis[r][c] = F::from_i64((rest % p) as i64);
                rest /= p;
            }
            let stable = ops.iter().all(|op| {
                basis.iter().all(|v| {
                    let image: Vec<F> = (0..n)
                        .map(|i| (0..n).fold(F::zero(), |acc, j| acc + op[i][j].clone() * v[j].clone()))
                        .collect();
                    in_span(&basis, &image)
                })
            });
            if stable {
                out.push(basis);
            }
        }
    }
    out
}
