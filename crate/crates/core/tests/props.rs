//! Property tests for the exact linear algebra and polynomial kernels.

use dzeta::poly::{l_operator, mobius_subst, QPoly};
use dzeta::rat::{rat, Rat};
use dzeta::QMatrix;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn small_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| {
            proptest::collection::vec(small_rat(), r * c).prop_map(move |data| {
                QMatrix::new(r, c, data)
            })
        })
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    proptest::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(QPoly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(once.matrix, twice.matrix);
        prop_assert_eq!(once.rank, twice.rank);
    }

    #[test]
    fn rank_equals_transpose_rank(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_counts(m in small_matrix()) {
        let rank = m.rank();
        prop_assert_eq!(rank + m.right_kernel_basis().len(), m.cols());
        prop_assert_eq!(rank + m.left_kernel_basis().len(), m.rows());
    }

    #[test]
    fn kernel_vectors_are_exact(m in small_matrix()) {
        for v in m.right_kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        let t = m.transpose();
        for u in m.left_kernel_basis() {
            prop_assert!(t.mul_vec(&u).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn reversal_applied_twice_is_identity(p in small_poly(6)) {
        let d = 6usize;
        let rev = mobius_subst(&p, d, 0, 1, 1, 0).unwrap();
        let back = mobius_subst(&rev, d, 0, 1, 1, 0).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn substitution_agrees_pointwise(p in small_poly(5), a in -3i64..=3, b in -3i64..=3,
                                     c in -3i64..=3, e in -3i64..=3) {
        prop_assume!(a * e - b * c != 0);
        let d = 5usize;
        let out = mobius_subst(&p, d, a, b, c, e).unwrap();
        for num in [1i64, 2, -1, 3, 5, -4, 7, 9, -8, 11] {
            let x = Rat::new(num.into(), 7.into());
            let den = rat(c) * &x + rat(e);
            if den.is_zero() {
                continue;
            }
            let arg = (rat(a) * &x + rat(b)) / &den;
            let mut den_pow = Rat::from_integer(1.into());
            for _ in 0..d {
                den_pow *= &den;
            }
            prop_assert_eq!(out.eval(&x), den_pow * p.eval(&arg));
        }
    }

    #[test]
    fn l_operator_is_linear(c1 in small_poly(5), c2 in small_poly(5),
                            a in small_rat(), b in small_rat()) {
        let n = 9i64;
        let combo = c1.scale(&a).add(&c2.scale(&b));
        let lhs = l_operator(&combo, n).unwrap();
        let rhs = l_operator(&c1, n).unwrap().scale(&a)
            .add(&l_operator(&c2, n).unwrap().scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parity_parts_recombine(p in small_poly(8)) {
        let (ev, od) = p.parity_split();
        prop_assert_eq!(ev.add(&od), p);
    }
}
