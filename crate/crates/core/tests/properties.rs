mod common;

use std::sync::Arc;

use hopfhom_core::calculus::{
    bicovariant_calculus_from_ideal, calculus_from_crossed_submodule, calculus_isomorphism, check_calculus,
    classify_covariant_calculi, induced_calculus,
};
use hopfhom_core::examples::{all_examples, example};
use hopfhom_core::field::{Field, Fp, Rational};
use hopfhom_core::group::FiniteGroup;
use hopfhom_core::homogeneous::{adjoint_crossed_structure, canonical_crossed_bplus, make_qhs, QuantumHomogeneousSpace};
use hopfhom_core::hopf::{build_function_algebra, build_group_algebra, build_sweedler, FinHopfAlgebra};
use hopfhom_core::linalg::{Composite, Matrix, Subspace};
use hopfhom_core::module::{coinvariants, operator_closure, regular_module, submodule_lattice};
use proptest::prelude::*;

type Q = Rational;
type GF5 = Fp<5>;
type GF7 = Fp<7>;

fn qhs<F: Field>(name: &str) -> QuantumHomogeneousSpace<F> {
    make_qhs(Arc::new(example(name).unwrap())).unwrap()
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix<Q>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| Matrix::from_fn(r, c, |i, j| Q::from_i64(v[i * c + j])))
    })
}

fn matrix_mod_7(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<GF7>> {
    prop::collection::vec(0i64..7, rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| GF7::new(v[i * cols + j])))
}

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Q::new(n, d))
}

fn gf7() -> impl Strategy<Value = GF7> {
    (0i64..7).prop_map(GF7::new)
}

fn field_axioms<F: Field>(a: F, b: F, c: F) {
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    assert_eq!(a.clone() - a.clone(), F::zero());
    assert_eq!(a.clone() * F::one(), a);
    match a.inv() {
        Some(i) => assert!((a * i).is_one()),
        None => assert!(a.is_zero()),
    }
    assert_eq!(F::parse(&b.to_string()), Some(b));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn prime_field_axioms(a in gf7(), b in gf7(), c in gf7()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn rank_nullity(m in small_matrix(6)) {
        let ker = Subspace::kernel(&m);
        prop_assert_eq!(m.cols(), ker.dim() + m.rank());
        prop_assert!(m.mul(&ker.embedding()).is_zero());
        prop_assert_eq!(m.rank(), common::rank(&m.row_vecs()));
    }

    #[test]
    fn canonical_form_is_idempotent(m in small_matrix(5)) {
        let s = Subspace::column_space(&m);
        prop_assert_eq!(s.canonicalize(), s.clone());
        prop_assert_eq!(s.canonicalize().canonicalize(), s.canonicalize());
        prop_assert!(s.coordinates().mul(&s.embedding()).is_identity());
        let qb = s.quotient_basis();
        prop_assert!(qb.projection.mul(&qb.lift).is_identity());
        prop_assert!(qb.projection.mul(&s.embedding()).is_zero());
    }

    #[test]
    fn sum_and_intersection_dimensions(a in matrix_mod_7(5, 3), b in matrix_mod_7(5, 3)) {
        let (u, w) = (Subspace::column_space(&a), Subspace::column_space(&b));
        let (s, i) = (u.sum(&w).unwrap(), u.intersect(&w).unwrap());
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(u.contains(&i).unwrap() && w.contains(&i).unwrap());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&w).unwrap());
    }

    #[test]
    fn closure_is_stable_and_idempotent(seed in prop::collection::vec(0i64..5, 5)) {
        let q = qhs::<GF5>("fs3");
        let x = canonical_crossed_bplus(&q).unwrap();
        let ops = x.operators();
        let v: Vec<GF5> = seed.into_iter().map(GF5::new).collect();
        let c = operator_closure(&ops, x.dim(), &[v.clone()]);
        prop_assert!(c.contains_vector(&v));
        for op in &ops {
            prop_assert!(c.contains_columns(&op.mul(&c.embedding())));
        }
        prop_assert_eq!(operator_closure(&ops, x.dim(), &c.basis_vectors()), c.clone());
        prop_assert!(x.unstable_structure(&c).is_none());
    }

    #[test]
    fn coinvariants_are_fixed(coeffs in prop::collection::vec(-4i64..=4, 6), which in 0usize..5) {
        let (name, s) = all_examples::<Q>().swap_remove(which);
        let q = make_qhs(Arc::new(s)).unwrap();
        let np = q.p().dim();
        let b: Vec<Q> = coeffs[..q.b_dim()].iter().map(|&c| Q::from_i64(c)).collect();
        let b = q.b_embedding().apply(&b);
        // (id ⊗ π)Δb = b ⊗ 1 and π(b) = ε(b)1.
        let delta = Composite::from_map(q.p().comult(), &[np, np]).on(1, q.pi()).matrix().apply(&b);
        let expected = Composite::<Q>::identity(&[np]).insert(1, q.h().unit()).matrix().apply(&b);
        prop_assert_eq!(delta, expected, "{}", name);
        let eps: Q = q.p().counit_matrix().apply(&b)[0].clone();
        let unit: Vec<Q> = q.h().unit().iter().map(|u| u.clone() * eps.clone()).collect();
        prop_assert_eq!(q.pi().apply(&b), unit);
    }

    #[test]
    fn calculi_shrink_as_ideals_grow(i in 0usize..64, j in 0usize..64) {
        let q = qhs::<Q>("fs3");
        let x = canonical_crossed_bplus(&q).unwrap();
        let lattice = submodule_lattice(&x, 64).unwrap();
        let subs = &lattice.subspaces;
        let (a, b) = (&subs[i % subs.len()], &subs[j % subs.len()]);
        let big = a.sum(b).unwrap();
        let (small_omega, big_omega) = (
            calculus_from_crossed_submodule(a, &q).unwrap(),
            calculus_from_crossed_submodule(&big, &q).unwrap(),
        );
        prop_assert!(small_omega.dim >= big_omega.dim);
        prop_assert!(check_calculus(&big_omega).all_passed());
    }

    #[test]
    fn induced_matches_crossed_route(k in 0usize..64) {
        let q = qhs::<Q>("fs3_k12");
        let p = Arc::new(q.p().clone());
        let ideals = submodule_lattice(&adjoint_crossed_structure(p.clone()).unwrap(), 64).unwrap().subspaces;
        let gamma = bicovariant_calculus_from_ideal(&ideals[k % ideals.len()], p).unwrap();
        let induced = induced_calculus(&gamma, &q).unwrap();
        prop_assert!(induced.report.all_passed());
        let crossed = calculus_from_crossed_submodule(&induced.bplus_ideal, &q).unwrap();
        prop_assert!(calculus_isomorphism(&induced.calculus, &crossed).is_exact());
    }
}

fn builders<F: Field>() -> Vec<FinHopfAlgebra<F>> {
    let s3 = FiniteGroup::symmetric3();
    vec![
        build_group_algebra(&FiniteGroup::cyclic(2)),
        build_group_algebra(&s3),
        build_function_algebra(&s3),
        build_sweedler(),
    ]
}

fn builders_and_duals<F: Field>() {
    for h in builders::<F>() {
        assert!(h.verify_axioms().all_passed(), "{} over {}", h.name(), F::name());
        assert!(h.dual().dual().same_structure(&h));
    }
}

#[test]
fn builders_pass_over_both_fields() {
    builders_and_duals::<Q>();
    builders_and_duals::<GF7>();
}

#[test]
fn surjections_respect_counit_and_antipode() {
    for (name, s) in all_examples::<Q>() {
        let (p, h, pi) = (s.source(), s.target(), s.matrix());
        assert_eq!(h.counit_matrix().mul(pi), p.counit_matrix(), "{name}");
        assert_eq!(pi.mul(p.antipode()), h.antipode().mul(pi), "{name}");
    }
}

#[test]
fn coactions_are_counital_and_coinvariants_maximal() {
    for (name, s) in all_examples::<Q>() {
        let q = make_qhs(Arc::new(s)).unwrap();
        let y = regular_module(q.frame());
        for c in [y.left_coaction.as_ref().unwrap(), y.right_coaction.as_ref().unwrap()] {
            let [a, b] = c.out_dims();
            let counit = match c.side {
                hopfhom_core::module::Side::Left => Composite::identity(&[a, b]).apply(0, 1, &c.coalgebra.counit_matrix(), &[]),
                hopfhom_core::module::Side::Right => Composite::identity(&[a, b]).apply(1, 1, &c.coalgebra.counit_matrix(), &[]),
            };
            assert!(counit.matrix().mul(&c.map).is_identity(), "{name}");
        }
        let right = y.right_coaction.as_ref().unwrap();
        let fixed = coinvariants(right, q.h().unit());
        assert_eq!(fixed, *q.b(), "{name}");
        let oracle = common::coinvariants(q.p(), q.h(), &q.pi().row_vecs());
        assert_eq!(oracle.len(), fixed.dim(), "{name}");
    }
}

#[test]
fn lattices_are_closed_under_sum_and_intersection() {
    for name in ["fs3", "fs3_k12", "sweedler"] {
        let x = canonical_crossed_bplus(&qhs::<Q>(name)).unwrap();
        let e = submodule_lattice(&x, 64).unwrap();
        assert!(e.complete && e.warnings.is_empty(), "{name}");
        for a in &e.subspaces {
            for b in &e.subspaces {
                assert!(e.subspaces.contains(&a.sum(b).unwrap()), "{name}");
                assert!(e.subspaces.contains(&a.intersect(b).unwrap()), "{name}");
            }
        }
    }
}

#[test]
fn classified_calculi_are_covariant() {
    for name in ["sweedler", "fs3_k12", "kz2", "fz2"] {
        let c = classify_covariant_calculi(&qhs::<Q>(name), 64).unwrap();
        for k in &c.calculi {
            for law in ["d is left covariant", "Leibniz rule", "d(1) = 0"] {
                assert!(k.report.get(law).is_some_and(|c| c.passed), "{name}: {law}");
            }
        }
    }
}
