//! Property-based checks of the algebraic identities every module
//! promises. All assertions are exact equalities.

mod common;

use common::{random_block_operator, random_kernel_vector, random_sparse_vector, rng, std_gram};
use mpinv::{
    adjoint, is_consistent, min_least_norm_solution, mp_inverse, mp_inverse_geometric,
    orthogonal_complement, residual_norm_squared, verify_penrose, verify_reflexive, GramForm,
    Matrix, Scalar, SparseVector, Subspace,
};
use proptest::prelude::*;

fn rational_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn gaussian_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2, -3i64..=3, 1i64..=2)
        .prop_map(|(rn, rd, in_, id)| Scalar::complex_ratio(rn, rd, in_, id))
}

fn matrix_strategy(max_dim: usize, complex: bool) -> impl Strategy<Value = Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        let cell = if complex {
            gaussian_scalar().boxed()
        } else {
            rational_scalar().boxed()
        };
        proptest::collection::vec(proptest::collection::vec(cell, c), r)
            .prop_map(|rows| Matrix::from_rows(rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_identities(a in gaussian_scalar(), b in gaussian_scalar(), c in gaussian_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        let norm = Scalar::new(a.norm_sq(), mpinv::Rational::from_integer(0.into()));
        prop_assert_eq!(&a * &a.conj(), norm);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn pseudoinverse_identities(a in matrix_strategy(3, true)) {
        let x = mp_inverse(&a);
        let gv = std_gram(a.cols());
        let gw = std_gram(a.rows());
        prop_assert!(verify_penrose(&a, &x, &gv, &gw).unwrap().all());
        prop_assert!(verify_reflexive(&a, &x).unwrap());
        prop_assert_eq!(mp_inverse(&x), a.clone());
        prop_assert_eq!(mp_inverse_geometric(&a, &gv, &gw).unwrap(), x);
    }

    #[test]
    fn echelon_form_properties(a in matrix_strategy(4, true)) {
        let (r, pivots) = a.rref();
        for w in pivots.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        prop_assert!(pivots.iter().all(|&p| p >= 1 && p <= a.cols()));
        prop_assert_eq!(pivots.len(), a.rank());
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots2, pivots);
        // Row operations preserve the kernel.
        prop_assert!(a.kernel_basis().equals(&r.kernel_basis()));
    }

    #[test]
    fn adjoint_satisfies_its_defining_identity(
        a in matrix_strategy(3, true),
        seed in 0u64..1000,
    ) {
        let mut r = rng(seed);
        let g_v = common_gram(&mut r, a.cols());
        let g_w = common_gram(&mut r, a.rows());
        let star = adjoint(&a, &g_v, &g_w).unwrap();
        // Check g_w(A v, w) = g_v(v, A* w) on full bases.
        for j in 1..=a.cols() {
            let v = SparseVector::unit(j);
            for i in 1..=a.rows() {
                let w = SparseVector::unit(i);
                let lhs = g_w.inner_product(&a.apply(&v).unwrap(), &w).unwrap();
                let rhs = g_v.inner_product(&v, &star.apply(&w).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
        let back = adjoint(&star, &g_w, &g_v).unwrap();
        prop_assert_eq!(back, a.clone());
    }

    #[test]
    fn weighted_pseudoinverse_certifies(a in matrix_strategy(3, false), seed in 0u64..1000) {
        let mut r = rng(seed);
        let g_v = common_gram(&mut r, a.cols());
        let g_w = common_gram(&mut r, a.rows());
        let x = mp_inverse_geometric(&a, &g_v, &g_w).unwrap();
        prop_assert!(verify_penrose(&a, &x, &g_v, &g_w).unwrap().all());
        prop_assert!(verify_reflexive(&a, &x).unwrap());
    }

    #[test]
    fn complement_splits_dimensions(a in matrix_strategy(4, true)) {
        let n = a.cols();
        let g = std_gram(n);
        let u = a.kernel_basis();
        let full = Subspace::full(n);
        let co = orthogonal_complement(&u, &full, &g).unwrap();
        prop_assert_eq!(u.dim() + co.dim(), n);
        for x in co.basis() {
            for y in u.basis() {
                prop_assert!(g.inner_product(x, y).unwrap().is_zero());
            }
        }
        // The two pieces meet only at zero, so together they span.
        prop_assert_eq!(u.sum(&co).unwrap().dim(), n);
    }
}

fn common_gram(r: &mut rand_chacha::ChaCha8Rng, dim: usize) -> GramForm {
    use rand::Rng;
    loop {
        let m = common::random_matrix(r, dim, dim, true);
        let g = &m.conj_transpose().checked_mul(&m).unwrap() + &Matrix::identity(dim);
        let rows: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| (0..dim).map(|j| g.get(i, j).clone()).collect())
            .collect();
        if let Ok(form) = GramForm::new(rows) {
            if r.gen_bool(0.25) {
                return GramForm::identity(dim);
            }
            return form;
        }
    }
}

#[test]
fn solver_properties_on_random_operators() {
    let mut r = rng(0x50_1A_7E);
    for _ in 0..60 {
        let op = random_block_operator(&mut r, 0, true, true);
        let reach = op.head_len() + 3 * op.tail_period();
        let x = random_sparse_vector(&mut r, reach, 4, true);
        // Everything in the image is consistent.
        let w = op.apply(&x);
        assert!(is_consistent(&op, &w));
        let best = min_least_norm_solution(&op, &w);
        assert_eq!(op.apply(&best), w);
        // The minimal solution is orthogonal to the kernel and shorter
        // than any kernel translate.
        if let Some(h) = random_kernel_vector(&mut r, &op) {
            assert!(best.inner_product_std(&h).is_zero());
            assert!(best.norm_sq_std() < best.add(&h).norm_sq_std());
        }
        // Pythagorean split of the residual for an arbitrary right-hand
        // side and arbitrary trial vector.
        let w2 = random_sparse_vector(&mut r, reach, 4, true);
        let trial = random_sparse_vector(&mut r, reach, 4, true);
        let projected = op.apply(&min_least_norm_solution(&op, &w2));
        let lhs = residual_norm_squared(&op, &trial, &w2);
        let rhs = op.apply(&trial).sub(&projected).norm_sq_std() + projected.sub(&w2).norm_sq_std();
        assert_eq!(lhs, rhs);
        // A residual-minimal trial maps to the same point as the
        // minimal solution.
        assert_eq!(
            residual_norm_squared(&op, &min_least_norm_solution(&op, &w2), &w2)
                == residual_norm_squared(&op, &trial, &w2),
            op.apply(&trial) == projected
        );
    }
}

#[test]
fn operator_algebra_on_random_operators() {
    let mut r = rng(0xB10C);
    for _ in 0..40 {
        let op = random_block_operator(&mut r, 0, false, true);
        let inv = op.mp_inverse();
        assert_eq!(inv.mp_inverse(), op);
        // Both compositions are idempotent projections.
        let left = op.compose(&inv).unwrap();
        let right = inv.compose(&op).unwrap();
        assert_eq!(left.compose(&left).unwrap(), left);
        assert_eq!(right.compose(&right).unwrap(), right);
        // Composition agrees with sequential application.
        let reach = op.head_len() + 3 * op.tail_period();
        let x = random_sparse_vector(&mut r, reach, 5, true);
        assert_eq!(left.apply(&x), op.apply(&inv.apply(&x)));
        // The image projection fixes the image pointwise.
        let w = op.apply(&x);
        assert_eq!(left.apply(&w), w);
    }
}
