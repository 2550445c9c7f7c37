use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::budget::Unlimited;
use crate::matalg::{skew_generic, skew_generic_any, skew_tridiagonal};
use crate::pfideal::{pf_ideal_general, pf_ideal_maximal};
use crate::polyring::ring_make;

fn p(ring: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

fn ideal(ring: &Ring, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(ring, gens.iter().map(|g| p(ring, g)).collect()).unwrap()
}

fn table(entries: &[((usize, u32), usize)]) -> BettiTable {
    BettiTable { entries: entries.iter().copied().collect() }
}

#[test]
fn principal_and_two_variables() {
    let ring = ring_make(&["x1_2", "x1_3"], 2, 0, 0).unwrap();
    let c = schreyer_resolve(&ideal(&ring, &["x1_2"]), 5, &Unlimited).unwrap();
    assert_eq!(c.ranks(), [1, 1]);
    let b = betti_table(&ideal(&ring, &["x1_2", "x1_3"]), 5, &Unlimited).unwrap();
    assert_eq!(b, table(&[((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]));
}

#[test]
fn maximal_ideal_of_three() {
    let pf = pf_ideal_maximal(&skew_generic(3).unwrap()).unwrap();
    let i = pf.ideal().unwrap();
    let c = schreyer_resolve(&i, 10, &Unlimited).unwrap();
    assert!(c.is_complex().unwrap());
    let b = minimalize(&c).betti();
    assert_eq!(b.totals(), [1, 3, 3, 1]);
    assert!(has_linear_resolution(&i, &Unlimited).unwrap());
    let sq: Vec<Polynomial> =
        (0..3).flat_map(|a| (a..3).map(move |b| (a, b))).map(|(a, b)| &pf.gens()[a] * &pf.gens()[b]).collect();
    let i2 = IdealHandle::new(pf.ring(), sq).unwrap();
    assert!(has_linear_resolution(&i2, &Unlimited).unwrap());
}

#[test]
fn pfaffians_of_five() {
    let i = pf_ideal_maximal(&skew_generic(5).unwrap()).unwrap().ideal().unwrap();
    let b = betti_table(&i, 11, &Unlimited).unwrap();
    assert_eq!(b, table(&[((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)]));
    assert!(!has_linear_resolution(&i, &Unlimited).unwrap());
    let text = alloc::format!("{b}");
    assert!(text.contains("total: 1 5 5 1"), "{text}");
}

#[test]
fn betti_numbers_ignore_generator_order() {
    let pf = pf_ideal_maximal(&skew_generic(5).unwrap()).unwrap();
    let mut gens = pf.gens().to_vec();
    gens.reverse();
    gens.swap(0, 2);
    let a = betti_table(&pf.ideal().unwrap(), 11, &Unlimited).unwrap();
    let b = betti_table(&IdealHandle::new(pf.ring(), gens).unwrap(), 11, &Unlimited).unwrap();
    assert_eq!(a, b);
}

#[test]
fn redundant_generators_cancel() {
    let ring = ring_make(&["a", "b"], 2, 0, 0).unwrap();
    let i = ideal(&ring, &["a", "a*b", "b"]);
    let c = schreyer_resolve(&i, 5, &Unlimited).unwrap();
    assert!(!c.is_minimal());
    let m = minimalize(&c);
    assert!(m.is_complex().unwrap());
    assert_eq!(m.ranks(), [1, 2, 1]);
    assert_eq!(m.euler_characteristic(), c.euler_characteristic());
}

#[test]
fn taylor_complex_minimalizes() {
    let ring = ring_make(&["x1_2", "x2_3", "x3_4"], 3, 0, 0).unwrap();
    let gens = vec![p(&ring, "x1_2*x2_3"), p(&ring, "x1_2*x3_4")];
    let t = taylor_complex(&gens).unwrap();
    assert!(t.is_complex().unwrap());
    assert!(t.is_minimal());
    assert_eq!(t.ranks(), [1, 2, 1]);
    assert_eq!(minimalize(&t).ranks(), [1, 2, 1]);
    // Three generators with one lcm coinciding: one cancellation.
    let ring = ring_make(&["a", "b", "c"], 3, 0, 0).unwrap();
    let gens = vec![p(&ring, "a*b"), p(&ring, "b*c"), p(&ring, "a*c")];
    let t = taylor_complex(&gens).unwrap();
    assert!(!t.is_minimal());
    let m = minimalize(&t);
    assert!(m.is_complex().unwrap());
    assert_eq!(m.euler_characteristic(), t.euler_characteristic());
    let direct = betti_table(&IdealHandle::new(&ring, gens).unwrap(), 5, &Unlimited).unwrap();
    assert_eq!(m.betti(), direct);
}

#[test]
fn tridiagonal_five_matches_taylor() {
    let pf = pf_ideal_maximal(&skew_tridiagonal(5).unwrap()).unwrap();
    let direct = betti_table(&pf.ideal().unwrap(), 10, &Unlimited).unwrap();
    let t = minimalize(&taylor_complex(pf.gens()).unwrap()).betti();
    assert_eq!(direct, t);
    assert_eq!(direct.totals(), [1, 3, 2]);
}

#[test]
fn first_row_matches_generators() {
    let pf = pf_ideal_general(&skew_generic_any(4), 2).unwrap();
    let b = betti_table(&pf.ideal().unwrap(), 1, &Unlimited).unwrap();
    assert_eq!(b, table(&[((0, 0), 1), ((1, 1), 6)]));
}

#[test]
fn be_complex_conventions() {
    for n in [3, 5] {
        let passing: Vec<_> = be_conventions()
            .into_iter()
            .filter(|&c| be_complex(n, c).unwrap().is_complex().unwrap())
            .collect();
        assert_eq!(passing, [BeConvention { order: PfOrder::Reversed, signs: SignConvention::Unsigned }]);
    }
    let c = be_complex(5, BeConvention { order: PfOrder::Reversed, signs: SignConvention::Unsigned }).unwrap();
    assert_eq!(c.degrees()[1], [2; 5]);
    assert_eq!(c.degrees()[2], [3; 5]);
    assert_eq!(c.degrees()[3], [5]);
}

#[test]
fn be_verify_three_and_five() {
    let good = BeConvention { order: PfOrder::Reversed, signs: SignConvention::Unsigned };
    let r3 = be_verify(&be_complex(3, good).unwrap(), &Unlimited).unwrap();
    assert!(r3.is_complex && r3.is_minimal);
    assert_eq!(r3.codims[2], Some(3));
    assert_eq!(r3.acyclic, Verdict::Pass);
    let r5 = be_verify(&be_complex(5, good).unwrap(), &Unlimited).unwrap();
    assert_eq!(r5.acyclic, Verdict::Pass);
    assert_eq!(r5.codims, [Some(3), Some(3), Some(3)]);
    let bad = BeConvention { order: PfOrder::Forward, signs: SignConvention::AlternatingPlus };
    let rb = be_verify(&be_complex(5, bad).unwrap(), &Unlimited).unwrap();
    assert!(!rb.is_complex);
    assert_eq!(rb.acyclic, Verdict::Fail);
}
