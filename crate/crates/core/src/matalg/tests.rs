use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::polyring::{ring_make, Polynomial, Ring};

fn v(r: &Ring, name: &str) -> Polynomial {
    Polynomial::var_named(r, name).unwrap()
}

fn int(r: &Ring, c: i64) -> Polynomial {
    Polynomial::constant(r, BigRational::from_integer(BigInt::from(c)))
}

#[test]
fn two_by_two_anchor() {
    let m = skew_custom(2, &[(1, 2)]).unwrap();
    assert_eq!(pfaffian(&m), v(m.ring(), "x1_2"));
}

#[test]
fn family_shapes() {
    let g3 = skew_generic(3).unwrap();
    assert_eq!(g3.ring().names(), ["x1_2", "x1_3", "x2_3"]);
    assert_eq!(skew_generic(5).unwrap().ring().nvars(), 10);
    assert_eq!(skew_generic(1).unwrap().ring().nvars(), 0);
    assert!(skew_generic(4).is_err());
    assert_eq!(skew_tridiagonal(5).unwrap().ring().names(), ["x1_2", "x2_3", "x3_4", "x4_5"]);
    assert_eq!(skew_tridiagonal(7).unwrap().ring().nvars(), 6);
    let t3 = skew_tridiagonal(3).unwrap();
    assert!(t3.entry(0, 2).is_zero());
    assert!(skew_tridiagonal(6).is_err());
    for r in 0..5 {
        let b = skew_blockx4(r).unwrap();
        assert_eq!(b.order(), 2 * r + 1);
        assert_eq!(b.ring().nvars(), (r + 1) * r + r * r.saturating_sub(1) / 2);
        for i in 0..=r {
            for j in 0..=r {
                assert!(b.entry(i, j).is_zero());
            }
        }
    }
    let b1 = skew_blockx4(1).unwrap();
    assert_eq!(b1.ring().names(), ["x1_3", "x2_3"]);
    assert_eq!(skew_sparse7().ring().nvars(), 10);
    assert!(skew_custom(5, &[]).unwrap().as_matrix().is_zero());
    assert_eq!(skew_custom(5, &full_pattern(5)).unwrap(), skew_generic(5).unwrap());
    assert!(matches!(skew_custom(3, &[(2, 4)]), Err(crate::Error::IndexOutOfRange(2, 4))));
}

#[test]
fn odd_pfaffian_vanishes() {
    assert!(pfaffian(&skew_generic(5).unwrap()).is_zero());
    assert!(pfaffian(&skew_tridiagonal(7).unwrap()).is_zero());
}

#[test]
fn generic_four_pfaffian_squared_is_determinant() {
    let m = skew_generic_any(4);
    let r = m.ring().clone();
    let pf = pfaffian(&m);
    let expect = &(&(&v(&r, "x1_2") * &v(&r, "x3_4")) - &(&v(&r, "x1_3") * &v(&r, "x2_4"))) + &(&v(&r, "x1_4") * &v(&r, "x2_3"));
    assert_eq!(pf, expect);
    assert_eq!(determinant(m.as_matrix()).unwrap(), &pf * &pf);
    assert_eq!(determinant_cofactor(m.as_matrix()).unwrap(), &pf * &pf);
}

#[test]
fn tridiagonal_even_determinants() {
    for n in [2usize, 4, 6, 8, 10] {
        let m = skew_tridiagonal_any(n);
        let r = m.ring().clone();
        let mut expect = Polynomial::one(&r);
        for k in (1..n).step_by(2) {
            let x = Polynomial::var(&r, k - 1);
            expect = &expect * &(&x * &x);
        }
        assert_eq!(determinant(m.as_matrix()).unwrap(), expect, "n = {n}");
        let pf = pfaffian(&m);
        assert!(pf.is_monomial());
        assert_eq!(&pf * &pf, expect);
    }
}

#[test]
fn diagonal_determinant_and_errors() {
    let r = ring_make(&["a", "b", "c"], 3, 0, 0).unwrap();
    let mut m = PolyMatrix::zero(&r, 3, 3);
    for i in 0..3 {
        m.set(i, i, Polynomial::var(&r, i));
    }
    assert_eq!(determinant(&m).unwrap(), &(&v(&r, "a") * &v(&r, "b")) * &v(&r, "c"));
    assert!(determinant(&PolyMatrix::zero(&r, 2, 3)).is_err());
}

#[test]
fn minors_of_rees_matrix() {
    let r = ring_make(&["x1_2", "x1_3", "x2_3", "y1", "y2", "y3"], 3, 3, 0).unwrap();
    let m = PolyMatrix::from_fn(&r, 2, 3, |i, j| Polynomial::var(&r, 3 * i + j));
    let ms = minors(&m, 2, None, None).unwrap();
    assert_eq!(ms.len(), 3);
    assert_eq!(ms[0], &(&v(&r, "x1_2") * &v(&r, "y2")) - &(&v(&r, "x1_3") * &v(&r, "y1")));
    assert_eq!(minors(&m, 1, None, None).unwrap(), m.entries().to_vec());
    assert!(minors(&m, 3, None, None).is_err());
}

#[test]
fn blockx4_minor_count() {
    for r in 1..4usize {
        let b = skew_blockx4(r).unwrap();
        let rows: Vec<usize> = (0..=r).collect();
        let cols: Vec<usize> = (r + 1..2 * r + 1).collect();
        assert_eq!(minors(b.as_matrix(), r, Some(&rows), Some(&cols)).unwrap().len(), r + 1);
    }
}

#[test]
fn zero_pivot_falls_back() {
    let r = ring_make(&["a", "b"], 2, 0, 0).unwrap();
    let (a, b) = (v(&r, "a"), v(&r, "b"));
    let z = Polynomial::zero(&r);
    let m = PolyMatrix::from_rows(
        &r,
        alloc::vec![
            alloc::vec![a.clone(), b.clone(), int(&r, 1)],
            alloc::vec![b.clone(), &a * &b, z.clone()],
            alloc::vec![int(&r, 2), a.clone(), b.clone()],
        ],
    )
    .unwrap();
    assert_eq!(determinant(&m).unwrap(), determinant_cofactor(&m).unwrap());
}

fn integer_skew(n: usize, vals: &[i64]) -> SkewMatrix {
    let r = ring_make::<&str>(&[], 0, 0, 0).unwrap();
    let mut k = 0;
    SkewMatrix::from_upper(&r, n, |_, _| {
        k += 1;
        int(&r, vals[k - 1])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn pf_squared_is_det(half in 1usize..4, vals in proptest::collection::vec(-9i64..10, 28)) {
        let m = integer_skew(2 * half, &vals);
        let pf = pfaffian(&m);
        prop_assert_eq!(determinant(m.as_matrix()).unwrap(), &pf * &pf);
    }

    #[test]
    fn deletion_keeps_antisymmetry(l in 0usize..5) {
        let m = skew_generic(5).unwrap();
        prop_assert!(SkewMatrix::new(m.delete(l).into_matrix()).is_ok());
    }
}

#[test]
fn sub_pfaffians_are_homogeneous() {
    for n in [3usize, 5, 7] {
        let m = skew_generic(n).unwrap();
        for l in 0..n {
            let p = pfaffian(&m.delete(l));
            assert_eq!(p.bidegree_of(), crate::polyring::Bidegree::Of(((n - 1) / 2) as u32, 0));
        }
    }
}
