use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::budget::Unlimited;
use crate::matalg::{minors, skew_tridiagonal, PolyMatrix};
use crate::pfideal::{blockx4_generators, tridiagonal_generators_closed_form};
use crate::polyring::ring_make;

fn p(ring: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

fn minors_ideal_n3(r: &ReesPresentation) -> IdealHandle {
    let s = r.ring();
    let m = PolyMatrix::from_rows(
        s,
        vec![
            vec![p(s, "x1_2"), p(s, "x1_3"), p(s, "x2_3")],
            vec![p(s, "y1"), p(s, "y2"), p(s, "y3")],
        ],
    )
    .unwrap();
    IdealHandle::new(s, minors(&m, 2, None, None).unwrap()).unwrap()
}

#[test]
fn generic_three_by_both_methods() {
    let explicit = explicit_generic_relations(3).unwrap();
    let base: Vec<_> = explicit.base_gens().iter().map(|g| g.to_string()).collect();
    assert_eq!(base, ["x1_2", "x1_3", "x2_3"]);
    assert!(explicit.substitution_check().unwrap());
    let ideal = IdealHandle::new(explicit.base_ring(), explicit.base_gens().to_vec()).unwrap();
    let elim = rees_by_elimination(&ideal, &Unlimited).unwrap();
    assert!(elim.substitution_check().unwrap());
    assert_eq!(elim.census(), BTreeMap::from([((1, 1), 3)]));
    let o = MonomialOrder::grevlex(elim.ring().nvars());
    let mins = minors_ideal_n3(&elim);
    assert!(ideal_equal(&elim.ideal().unwrap(), &mins, &o, &Unlimited).unwrap());
    assert!(ideal_equal(&explicit.ideal().unwrap(), &mins, &o, &Unlimited).unwrap());
    let nf = elim.ideal().unwrap().normal_form(&p(elim.ring(), "x1_2*y2 - x1_3*y1"), &o, &Unlimited).unwrap();
    assert!(nf.is_zero());
}

#[test]
fn generic_three_quadrics_are_a_basis() {
    let r = explicit_generic_relations(3).unwrap();
    let o = MonomialOrder::grevlex(r.ring().nvars());
    assert!(is_groebner_basis(r.defining_gens(), &o, &Unlimited).unwrap());
}

#[test]
fn generic_five_relations_vanish() {
    let r = explicit_generic_relations(5).unwrap();
    assert_eq!(r.defining_gens().len(), 5);
    for g in r.defining_gens() {
        assert_eq!(g.bidegree_of(), Bidegree::Of(1, 1));
    }
    assert!(r.substitution_check().unwrap());
}

#[test]
fn d2_entries_follow_the_sign_rule() {
    let r = explicit_generic_relations(3).unwrap();
    let s = r.ring();
    let e = |i, j| generic_d2_entry(s, 3, i, j).to_string();
    assert_eq!(e(2, 1), "-x2_3");
    assert_eq!(e(3, 1), "x1_3");
    assert_eq!(e(1, 2), "x2_3");
    assert_eq!(e(1, 3), "-x1_3");
    assert_eq!(e(2, 2), "0");
}

#[test]
fn tridiagonal_taylor_matches_elimination() {
    for r in 2..=3 {
        let gens = tridiagonal_generators_closed_form(r).unwrap();
        let ideal = IdealHandle::new(gens[0].ring(), gens.clone()).unwrap();
        let elim = rees_by_elimination(&ideal, &Unlimited).unwrap();
        let taylor = taylor_rees(&gens, 1, &Unlimited).unwrap();
        assert_eq!(taylor.defining_gens().len(), r);
        assert_eq!(elim.census(), BTreeMap::from([((1, 1), r)]));
        let o = MonomialOrder::grevlex(elim.ring().nvars());
        assert!(ideal_equal(&elim.ideal().unwrap(), &taylor.ideal().unwrap(), &o, &Unlimited).unwrap());
        let v = linear_type_verdict(&elim, &default_order_pool(elim.ring()), &Unlimited).unwrap();
        assert_eq!(v.verdict, LinearType::GroebnerLinearType);
        assert_eq!(v.order_index, Some(0));
    }
}

#[test]
fn tridiagonal_relations_pair_neighbours() {
    let gens = tridiagonal_generators_closed_form(2).unwrap();
    let t = taylor_rees(&gens, 2, &Unlimited).unwrap();
    let mut got: Vec<_> = t.defining_gens().iter().map(|g| g.normalized().to_string()).collect();
    got.sort();
    assert_eq!(got, ["x1_2*y1 - x2_3*y2", "x3_4*y2 - x4_5*y3"]);
    let x = skew_tridiagonal(5).unwrap();
    assert_eq!(x.ring().names(), t.base_ring().names());
}

#[test]
fn taylor_small_cases() {
    let ring = ring_make(&["x", "y"], 2, 0, 0).unwrap();
    let t = taylor_rees(&[p(&ring, "x^2"), p(&ring, "x*y")], 2, &Unlimited).unwrap();
    assert_eq!(t.defining_gens().len(), 1);
    assert!(t.defining_gens()[0].is_associate(&p(t.ring(), "x*y2 - y*y1")));
    let single = taylor_rees(&[p(&ring, "x*y")], 2, &Unlimited).unwrap();
    assert!(single.defining_gens().is_empty());
    assert!(matches!(taylor_rees(&[p(&ring, "x + y")], 2, &Unlimited), Err(Error::NotMonomial)));
    assert!(matches!(taylor_rees(&[p(&ring, "x"), p(&ring, "y^2")], 2, &Unlimited), Err(Error::NotEquigenerated)));
}

#[test]
fn nakayama_drops_redundant_generators() {
    let ring = ring_make(&["x1_2", "x1_3"], 2, 0, 0).unwrap();
    let j = IdealHandle::new(&ring, vec![p(&ring, "x1_2^2"), p(&ring, "x1_2"), p(&ring, "x1_2*x1_3")]).unwrap();
    let m = minimal_bigraded_generators(&j, &Unlimited).unwrap();
    assert_eq!(m.census, BTreeMap::from([((1, 0), 1)]));
    let j = IdealHandle::new(&ring, vec![p(&ring, "x1_2 + x1_3"), p(&ring, "x1_2"), p(&ring, "x1_3")]).unwrap();
    assert_eq!(minimal_bigraded_generators(&j, &Unlimited).unwrap().gens.len(), 2);
}

#[test]
fn non_equigenerated_rejected() {
    let ring = ring_make(&["a", "b"], 2, 0, 0).unwrap();
    let i = IdealHandle::new(&ring, vec![p(&ring, "a"), p(&ring, "b^2")]).unwrap();
    assert!(matches!(rees_by_elimination(&i, &Unlimited), Err(Error::NotEquigenerated)));
}

#[test]
fn non_linear_type_detected() {
    // (a^2, ab, b^2): the Rees ideal needs the quadric y1*y3 - y2^2.
    let ring = ring_make(&["a", "b"], 2, 0, 0).unwrap();
    let i = IdealHandle::new(&ring, vec![p(&ring, "a^2"), p(&ring, "a*b"), p(&ring, "b^2")]).unwrap();
    let r = rees_by_elimination(&i, &Unlimited).unwrap();
    assert_eq!(r.census(), BTreeMap::from([((0, 2), 1), ((1, 1), 2)]));
    let v = linear_type_verdict(&r, &[], &Unlimited).unwrap();
    assert_eq!(v.verdict, LinearType::NotLinearType);
}

#[test]
fn linear_type_is_invariant_under_relabeling() {
    let r = explicit_generic_relations(3).unwrap();
    let mut gens = r.base_gens().to_vec();
    gens.rotate_left(1);
    let i = IdealHandle::new(r.base_ring(), gens).unwrap();
    let e = rees_by_elimination(&i, &Unlimited).unwrap();
    let v = linear_type_verdict(&e, &[], &Unlimited).unwrap();
    assert_eq!(v.verdict, LinearType::LinearType);
}

#[test]
fn colon_identities_for_three() {
    let report = colon_identities_check(3, &Unlimited).unwrap();
    assert_eq!(report.len(), 5);
    for c in &report {
        assert!(c.holds, "{}", c.label);
    }
}

#[test]
fn cyclic_relabelings_for_three() {
    let report = regular_subsequences_report(3, &Unlimited).unwrap();
    assert_eq!(report.len(), 3);
    assert!(report.iter().all(|r| r.regular));
    assert!(report[2].coprime_shifts.contains(&0));
}

#[test]
fn d_sequences() {
    let ring = ring_make(&["x1_2", "y1"], 1, 1, 0).unwrap();
    let v = d_sequence_check(&[p(&ring, "x1_2"), p(&ring, "y1")], false, &Unlimited).unwrap();
    assert_eq!((v.kind, v.status), (SequenceKind::DSequence, SequenceStatus::Proved));

    let r = explicit_generic_relations(3).unwrap();
    let v = d_sequence_check(r.defining_gens(), false, &Unlimited).unwrap();
    assert_eq!(v.status, SequenceStatus::Proved, "{:?}", v.witness.failure);

    let b = blockx4_generators(2).unwrap();
    let v = d_sequence_check(&b, true, &Unlimited).unwrap();
    assert_eq!((v.kind, v.status), (SequenceKind::UnconditionedDSequence, SequenceStatus::Proved));
    assert_eq!(v.witness.permutations.len(), 6);

    // x^2, xy: xy lies outside ⟨x^2⟩ but (x^2 : xy·xy) ≠ (x^2 : xy).
    let ring = ring_make(&["x", "y"], 2, 0, 0).unwrap();
    let v = d_sequence_check(&[p(&ring, "x^2"), p(&ring, "x*y")], false, &Unlimited).unwrap();
    assert_eq!(v.status, SequenceStatus::Failed);
    let v = d_sequence_check(&[p(&ring, "x"), p(&ring, "x*y")], false, &Unlimited).unwrap();
    assert_eq!(v.status, SequenceStatus::Failed);
}

#[test]
fn m_sequences() {
    for r in 2..=5 {
        let g = tridiagonal_generators_closed_form(r).unwrap();
        let v = m_sequence_check(&g).unwrap();
        assert_eq!((v.kind, v.status), (SequenceKind::IntervalType, SequenceStatus::Proved));
    }
    let ring = ring_make(&["x", "y"], 2, 0, 0).unwrap();
    let v = m_sequence_check(&[p(&ring, "x^2"), p(&ring, "y^2")]).unwrap();
    assert_eq!(v.kind, SequenceKind::IntervalType);
    let a = m_sequence_check(&[p(&ring, "x*y"), p(&ring, "x^2")]).unwrap();
    assert_eq!((a.kind, a.status), (SequenceKind::IntervalType, SequenceStatus::Proved));
    let b = m_sequence_check(&[p(&ring, "x^2"), p(&ring, "x*y")]).unwrap();
    assert_eq!(b.status, SequenceStatus::Failed);
    assert!(replay_m_sequence(&[p(&ring, "x^2"), p(&ring, "x*y")], &b).unwrap());
    assert!(matches!(m_sequence_check(&[p(&ring, "x + y")]), Err(Error::NotMonomial)));
}

#[test]
fn m_sequence_that_is_not_interval_type() {
    // x vanishes in m_2, between two monomials it divides.
    let ring = ring_make(&["x", "y"], 2, 0, 0).unwrap();
    let ms = [p(&ring, "x^2"), p(&ring, "y"), p(&ring, "x^3")];
    let v = m_sequence_check(&ms).unwrap();
    assert_eq!((v.kind, v.status), (SequenceKind::MSequence, SequenceStatus::Proved));
    assert!(replay_m_sequence(&ms, &v).unwrap());
}
