use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::budget::{StepBudget, Unlimited};
use crate::polyring::{ring_make, Monomial, OrderKind, Ring};

fn ring(names: &[&str]) -> Ring {
    ring_make(names, names.len(), 0, 0).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

/// Textbook division with rational coefficients, independent of the engine.
fn naive_remainder(f: &Polynomial, g: &[Polynomial], o: &MonomialOrder) -> Polynomial {
    let ring = f.ring().clone();
    let mut f = f.clone();
    let mut rem = Polynomial::zero(&ring);
    while let Some((c, m)) = f.leading_under(o).cloned() {
        match g.iter().find(|h| h.leading_monomial_under(o).unwrap().divides(&m)) {
            Some(h) => {
                let (hc, hm) = h.leading_under(o).unwrap();
                let q = m.div(hm).unwrap();
                f = &f - &h.mul_term(&(&c / hc), &q);
            }
            None => {
                let t = Polynomial::monomial(&ring, c.clone(), m.clone());
                rem = &rem + &t;
                f = &f - &t;
            }
        }
    }
    rem
}

fn s_poly(a: &Polynomial, b: &Polynomial, o: &MonomialOrder) -> Polynomial {
    let ring = a.ring();
    let (ca, ma) = a.leading_under(o).unwrap();
    let (cb, mb) = b.leading_under(o).unwrap();
    let l = ma.lcm(mb, ring);
    let one = BigRational::from_integer(1.into());
    &a.mul_term(&(&one / ca), &l.div(ma).unwrap()) - &b.mul_term(&(&one / cb), &l.div(mb).unwrap())
}

fn assert_reduced_gb(gb: &GroebnerBasis) {
    let o = gb.order();
    let polys = gb.polys();
    for a in polys {
        assert!(a.leading_under(o).unwrap().0 == BigRational::from_integer(1.into()));
    }
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            assert!(naive_remainder(&s_poly(&polys[i], &polys[j], o), polys, o).is_zero());
        }
        let lead = polys[i].leading_monomial_under(o).unwrap();
        for (k, q) in polys.iter().enumerate() {
            if k != i {
                assert!(q.terms().iter().all(|(_, m)| !lead.divides(m)));
            }
        }
    }
}

#[test]
fn monomial_generators_are_their_own_basis() {
    let r = ring(&["x1_2", "x1_3", "x2_3"]);
    let gens = vec![p(&r, "x1_2"), p(&r, "x1_3"), p(&r, "x2_3")];
    for kind in [OrderKind::Lex, OrderKind::GrLex, OrderKind::GRevLex] {
        let gb = GroebnerBasis::compute(&r, &gens, &MonomialOrder::new(kind, 3), &Unlimited).unwrap();
        assert_eq!(gb.len(), 3);
        assert_reduced_gb(&gb);
    }
}

#[test]
fn coprime_leads_already_a_basis() {
    let r = ring(&["x1_2", "x2_3", "x3_4", "x4_5", "y1", "y2", "y3"]);
    let gens = vec![p(&r, "x1_2*y1 - x2_3*y2"), p(&r, "x3_4*y2 - x4_5*y3")];
    let gb = GroebnerBasis::compute(&r, &gens, &MonomialOrder::grevlex(7), &Unlimited).unwrap();
    assert_eq!(gb.len(), 2);
    assert_eq!(gb.stats().zero_reductions, 0);
    assert_reduced_gb(&gb);
}

#[test]
fn twisted_cubic_lex() {
    let r = ring(&["x", "y", "z"]);
    let gens = vec![p(&r, "x^2 - y"), p(&r, "x^3 - z")];
    let o = MonomialOrder::lex(3);
    let gb = GroebnerBasis::compute(&r, &gens, &o, &Unlimited).unwrap();
    assert_reduced_gb(&gb);
    let expect = [p(&r, "y^3 - z^2"), p(&r, "x*z - y^2"), p(&r, "x*y - z"), p(&r, "x^2 - y")];
    assert_eq!(gb.polys(), &expect[..]);
    assert!(gb.contains(&p(&r, "y^3 - z^2")).unwrap());
    assert!(!gb.contains(&p(&r, "y - z")).unwrap());
}

#[test]
fn unit_ideal_and_rational_input() {
    let r = ring(&["x", "y"]);
    let gens = vec![p(&r, "1/2*x*y - 1"), p(&r, "x")];
    let gb = GroebnerBasis::compute(&r, &gens, &MonomialOrder::grevlex(2), &Unlimited).unwrap();
    assert!(gb.is_unit());
    let nf = GroebnerBasis::compute(&r, &[p(&r, "2*x - 3*y")], &MonomialOrder::lex(2), &Unlimited)
        .unwrap()
        .normal_form(&p(&r, "1/3*x^2"))
        .unwrap();
    assert_eq!(nf, p(&r, "3/4*y^2"));
}

#[test]
fn budget_overrun_reports_partial_state() {
    let r = ring(&["a", "b", "c", "d"]);
    let gens = vec![p(&r, "a+b+c+d"), p(&r, "a*b+b*c+c*d+d*a"), p(&r, "a*b*c+b*c*d+c*d*a+d*a*b"), p(&r, "a*b*c*d-1")];
    let err = GroebnerBasis::compute(&r, &gens, &MonomialOrder::grevlex(4), &StepBudget::new(3)).unwrap_err();
    match err {
        Error::BudgetExceeded(b) => assert!(b.pending_pairs > 0),
        e => panic!("unexpected {e:?}"),
    }
    let gb = GroebnerBasis::compute(&r, &gens, &MonomialOrder::grevlex(4), &Unlimited).unwrap();
    assert_reduced_gb(&gb);
}

#[test]
fn elimination_of_the_rees_parameter() {
    let r = ring_make(&["x1_2", "x1_3", "x2_3", "y1", "y2", "y3", "t"], 3, 3, 1).unwrap();
    let gens = vec![p(&r, "y1 - x1_2*t"), p(&r, "y2 - x1_3*t"), p(&r, "y3 - x2_3*t")];
    let i = IdealHandle::new(&r, gens).unwrap();
    let j = eliminate(&i, &[6], &Unlimited).unwrap();
    assert_eq!(j.ring().nvars(), 6);
    let s = j.ring().clone();
    let minors = IdealHandle::new(
        &s,
        vec![p(&s, "x1_2*y2 - x1_3*y1"), p(&s, "x1_2*y3 - x2_3*y1"), p(&s, "x1_3*y3 - x2_3*y2")],
    )
    .unwrap();
    assert!(ideal_equal(&j, &minors, &MonomialOrder::grevlex(6), &Unlimited).unwrap());
    let same = eliminate(&minors, &[], &Unlimited).unwrap();
    assert_eq!(same.gens(), minors.gens());
}

#[test]
fn equality_ignores_units() {
    let r = ring(&["x1_2"]);
    let a = IdealHandle::new(&r, vec![p(&r, "x1_2")]).unwrap();
    let b = IdealHandle::new(&r, vec![p(&r, "-x1_2")]).unwrap();
    assert!(ideal_equal(&a, &b, &MonomialOrder::grevlex(1), &Unlimited).unwrap());
}

#[test]
fn intersection_and_colon() {
    let r = ring(&["x", "y", "z"]);
    let a = IdealHandle::new(&r, vec![p(&r, "x"), p(&r, "y")]).unwrap();
    let b = IdealHandle::new(&r, vec![p(&r, "y"), p(&r, "z")]).unwrap();
    let m = intersect(&a, &b, &Unlimited).unwrap();
    let expect = IdealHandle::new(&r, vec![p(&r, "y"), p(&r, "x*z")]).unwrap();
    assert!(ideal_equal(&m, &expect, &MonomialOrder::grevlex(3), &Unlimited).unwrap());

    let i = IdealHandle::new(&r, vec![p(&r, "x^2*y"), p(&r, "x*z^2")]).unwrap();
    let c = colon(&i, &p(&r, "x"), &Unlimited).unwrap();
    let expect = IdealHandle::new(&r, vec![p(&r, "x*y"), p(&r, "z^2")]).unwrap();
    assert!(ideal_equal(&c, &expect, &MonomialOrder::grevlex(3), &Unlimited).unwrap());
    let same = colon(&i, &Polynomial::one(&r), &Unlimited).unwrap();
    assert_eq!(same.gens(), i.gens());
}

#[test]
fn dimension_examples() {
    let r = ring(&["a", "b", "c"]);
    let zero = IdealHandle::new(&r, vec![]).unwrap();
    assert_eq!(zero.dimension(&Unlimited).unwrap(), (3, 0));
    let unit = IdealHandle::new(&r, vec![p(&r, "a - 1"), p(&r, "a")]).unwrap();
    assert!(matches!(unit.dimension(&Unlimited), Err(Error::UnitIdeal)));
    let twisted = IdealHandle::new(&r, vec![p(&r, "a*c - b^2")]).unwrap();
    assert_eq!(twisted.dimension(&Unlimited).unwrap(), (2, 1));
}

#[test]
fn regular_sequence_verdicts() {
    let r = ring(&["x1_2", "x1_3", "y1"]);
    let o = [MonomialOrder::grevlex(3)];
    assert_eq!(
        is_regular_sequence(&[p(&r, "x1_2"), p(&r, "y1")], &o, &Unlimited).unwrap(),
        RegularVerdict::YesByLt(0)
    );
    assert_eq!(
        is_regular_sequence(&[p(&r, "x1_2"), p(&r, "x1_2*x1_3")], &o, &Unlimited).unwrap(),
        RegularVerdict::No
    );
    assert_eq!(
        is_regular_sequence(&[p(&r, "x1_2*x1_3"), p(&r, "x1_2^2 + x1_3^2")], &o, &Unlimited).unwrap(),
        RegularVerdict::YesByCodim
    );
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let r = ring(&["x1_2", "x1_3"]);
    let fs = [p(&r, "x1_2"), p(&r, "x1_3")];
    let s = syzygies(&fs, &MonomialOrder::grevlex(2), &Unlimited).unwrap();
    assert_eq!(s.ncols(), 1);
    assert_eq!(s.shifts, vec![2]);
    let col = s.column(0);
    assert!(col[0].is_associate(&fs[1]) && col[1].is_associate(&fs[0]));
    assert!((&(&col[0] * &fs[0]) + &(&col[1] * &fs[1])).is_zero());
}

#[test]
fn syzygies_of_cubic_minors_annihilate() {
    let r = ring(&["a", "b", "c", "d"]);
    let fs = [p(&r, "a*c - b^2"), p(&r, "a*d - b*c"), p(&r, "b*d - c^2")];
    let s = syzygies(&fs, &MonomialOrder::grevlex(4), &Unlimited).unwrap();
    assert!(s.ncols() >= 2);
    for j in 0..s.ncols() {
        let col = s.column(j);
        let mut acc = Polynomial::zero(&r);
        for (c, f) in col.iter().zip(&fs) {
            acc = &acc + &(c * f);
        }
        assert!(acc.is_zero());
        for c in col.iter().filter(|c| !c.is_zero()) {
            assert!(c.is_homogeneous());
        }
    }
}

fn brute_dimension(n: usize, supports: &[Vec<usize>]) -> usize {
    (0u32..1 << n)
        .filter(|s| supports.iter().all(|sup| !sup.iter().all(|&v| s >> v & 1 == 1)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn poly_strategy(r: Ring, nterms: usize, maxdeg: u32) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..=maxdeg, n)), 1..=nterms).prop_map(move |ts| {
        let terms = ts
            .into_iter()
            .filter(|(c, _)| *c != 0)
            .map(|(c, e)| (BigRational::from_integer(c.into()), Monomial::new(&r, e)))
            .collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn ideal_strategy() -> impl Strategy<Value = (Ring, Vec<Polynomial>)> {
    let r = ring(&["a", "b", "c"]);
    let rr = r.clone();
    prop::collection::vec(poly_strategy(r, 3, 2), 1..=3)
        .prop_map(move |gs| (rr.clone(), gs.into_iter().filter(|g| !g.is_zero()).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn s_polynomials_reduce_to_zero((r, gens) in ideal_strategy(), kind in 0usize..3) {
        let kind = [OrderKind::Lex, OrderKind::GrLex, OrderKind::GRevLex][kind];
        let gb = GroebnerBasis::compute(&r, &gens, &MonomialOrder::new(kind, 3), &Unlimited).unwrap();
        prop_assume!(gb.len() <= 25);
        assert_reduced_gb(&gb);
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn normal_form_idempotent_and_linear((r, gens) in ideal_strategy(), f in poly_strategy(ring(&["a", "b", "c"]), 4, 3), g in poly_strategy(ring(&["a", "b", "c"]), 4, 3)) {
        let gb = GroebnerBasis::compute(&r, &gens, &MonomialOrder::grevlex(3), &Unlimited).unwrap();
        let f = f.map_by_name(&r).unwrap();
        let g = g.map_by_name(&r).unwrap();
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        let ng = gb.normal_form(&g).unwrap();
        prop_assert_eq!(gb.normal_form(&(&f + &g)).unwrap(), gb.normal_form(&(&nf + &ng)).unwrap());
        prop_assert_eq!(nf, naive_remainder(&f, gb.polys(), gb.order()));
    }

    #[test]
    fn reduced_basis_independent_of_generator_order((r, gens) in ideal_strategy(), seed in 0usize..6) {
        let o = MonomialOrder::grevlex(3);
        let a = GroebnerBasis::compute(&r, &gens, &o, &Unlimited).unwrap();
        let mut perm = gens.clone();
        let k = seed % perm.len().max(1);
        perm.rotate_left(k);
        if seed % 2 == 1 { perm.reverse(); }
        let b = GroebnerBasis::compute(&r, &perm, &o, &Unlimited).unwrap();
        prop_assert_eq!(a.polys(), b.polys());
    }

    #[test]
    fn dimension_matches_subset_search(n in 1usize..=12, sups in prop::collection::vec(prop::collection::btree_set(0usize..12, 1..4), 0..8)) {
        let sups: Vec<Vec<usize>> = sups.into_iter().map(|s| s.into_iter().filter(|&v| v < n).collect::<Vec<_>>()).filter(|s| !s.is_empty()).collect();
        prop_assert_eq!(monomial_dimension(n, &sups).unwrap(), brute_dimension(n, &sups));
    }
}
