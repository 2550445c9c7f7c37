//! Certificates for and against Koszulness of presented algebras.
//!
//! A verdict is only ever positive with a recognized sufficient condition
//! (a quadratic Gröbner basis, or a regular sequence of quadrics) and only
//! ever negative with a power of the ideal whose resolution is not linear.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::combinat::multisets;
use crate::error::{Error, Result};
use crate::groebner::{is_regular_sequence, Echelon, GroebnerBasis, IdealHandle, RegularVerdict};
use crate::polyring::{x_name, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
use crate::rees::ReesPresentation;
use crate::resolution::betti_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoszulStatus {
    CertifiedKoszul,
    CertifiedNotKoszul,
    Unknown,
}

impl KoszulStatus {
    pub fn name(self) -> &'static str {
        match self {
            KoszulStatus::CertifiedKoszul => "CERTIFIED_KOSZUL",
            KoszulStatus::CertifiedNotKoszul => "CERTIFIED_NOT_KOSZUL",
            KoszulStatus::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KoszulCertificate {
    /// The reduced Gröbner basis under `order` consists of quadrics.
    GQuadratic { order: MonomialOrder, basis: Vec<Polynomial> },
    /// The generators are quadrics with pairwise coprime leading monomials
    /// under `order`, or (with no order) of codimension equal to their number.
    QuadricCompleteIntersection { order: Option<MonomialOrder>, leading: Vec<Monomial> },
    /// `β_{i,degree}(S/I^power) = rank ≠ 0` off the linear strand.
    NonLinearPower { power: u32, i: usize, degree: u32, rank: usize },
}

impl KoszulCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            KoszulCertificate::GQuadratic { .. } => "G_QUADRATIC",
            KoszulCertificate::QuadricCompleteIntersection { .. } => "CI_OF_QUADRICS",
            KoszulCertificate::NonLinearPower { .. } => "NON_LINEAR_POWER",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub status: KoszulStatus,
    pub certificate: Option<KoszulCertificate>,
    /// One line per attempt.
    pub log: Vec<String>,
}

impl KoszulVerdict {
    fn unknown(log: Vec<String>) -> Self {
        KoszulVerdict { status: KoszulStatus::Unknown, certificate: None, log }
    }
}

fn is_quadric(f: &Polynomial) -> bool {
    f.is_homogeneous() && f.total_degree() == Some(2)
}

/// Searches `pool` for a certificate that `S/⟨gens⟩` is Koszul: first a
/// regular sequence of quadrics with coprime leading terms, then a quadratic
/// Gröbner basis, then a regular sequence of quadrics by codimension.
pub fn koszul_certify(gens: &[Polynomial], pool: &[MonomialOrder], budget: &dyn Budget) -> Result<KoszulVerdict> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut log = Vec::new();
    let Some(first) = gens.first() else {
        log.push(String::from("no relations: polynomial ring"));
        let cert = KoszulCertificate::QuadricCompleteIntersection { order: None, leading: Vec::new() };
        return Ok(KoszulVerdict { status: KoszulStatus::CertifiedKoszul, certificate: Some(cert), log });
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let quadrics = gens.iter().all(is_quadric);
    if quadrics {
        for o in pool {
            let leads: Vec<Monomial> = gens.iter().map(|g| g.leading_monomial_under(o).unwrap().clone()).collect();
            if (0..leads.len()).all(|i| (i + 1..leads.len()).all(|j| leads[i].is_coprime(&leads[j]))) {
                log.push(format!("coprime leading terms under {}", o.describe(&ring)));
                let cert = KoszulCertificate::QuadricCompleteIntersection { order: Some(o.clone()), leading: leads };
                return Ok(KoszulVerdict { status: KoszulStatus::CertifiedKoszul, certificate: Some(cert), log });
            }
        }
        log.push(format!("leading terms not coprime under any of {} orders", pool.len()));
    } else {
        log.push(String::from("not generated by quadrics"));
    }
    for o in pool {
        match GroebnerBasis::compute(&ring, &gens, o, budget) {
            Ok(gb) => {
                if gb.polys().iter().all(is_quadric) {
                    log.push(format!("quadratic Gröbner basis under {}", o.describe(&ring)));
                    let cert = KoszulCertificate::GQuadratic { order: o.clone(), basis: gb.polys().to_vec() };
                    return Ok(KoszulVerdict { status: KoszulStatus::CertifiedKoszul, certificate: Some(cert), log });
                }
                log.push(format!("basis not quadratic under {}", o.describe(&ring)));
            }
            Err(Error::BudgetExceeded(_)) => {
                log.push(format!("budget exhausted under {}", o.describe(&ring)));
                return Ok(KoszulVerdict::unknown(log));
            }
            Err(e) => return Err(e),
        }
    }
    if quadrics {
        match is_regular_sequence(&gens, &[], budget) {
            Ok(RegularVerdict::YesByCodim) => {
                log.push(String::from("quadrics of full codimension"));
                let cert = KoszulCertificate::QuadricCompleteIntersection { order: None, leading: Vec::new() };
                return Ok(KoszulVerdict { status: KoszulStatus::CertifiedKoszul, certificate: Some(cert), log });
            }
            Ok(_) => log.push(String::from("quadrics do not form a regular sequence")),
            Err(Error::BudgetExceeded(_)) => log.push(String::from("budget exhausted in codimension")),
            Err(e) => return Err(e),
        }
    }
    Ok(KoszulVerdict::unknown(log))
}

/// A minimal generating set of `I^j` for equigenerated `I`: all `j`-fold
/// products, keeping those independent of the earlier ones.
pub fn power_generators(gens: &[Polynomial], j: u32) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for ms in multisets(gens.len(), j as usize) {
        let p = ms.iter().fold(Polynomial::one(&ring), |acc, &k| &acc * &gens[k]);
        if ech.insert(&p) {
            out.push(p);
        }
    }
    out
}

fn equigenerated_degree(gens: &[Polynomial]) -> Result<Option<u32>> {
    let mut d = None;
    for g in gens {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let e = g.total_degree().unwrap();
        if *d.get_or_insert(e) != e {
            return Err(Error::NotEquigenerated);
        }
    }
    Ok(d)
}

/// First off-strand Betti number of `S/I^j`, if any.
fn nonlinear_entry(gens: &[Polynomial], d: u32, j: u32, budget: &dyn Budget) -> Result<Option<(usize, u32, usize)>> {
    let ring = gens[0].ring().clone();
    let power = IdealHandle::new(&ring, power_generators(gens, j))?;
    let table = betti_table(&power, ring.nvars() + 1, budget)?;
    Ok(table
        .entries
        .iter()
        .find(|(&(i, deg), _)| i >= 1 && deg as usize + 1 != i + (j * d) as usize)
        .map(|(&(i, deg), &rank)| (i, deg, rank)))
}

/// Refutes Koszulness of the Rees algebra of `gens` when some power `I^j`,
/// `1 ≤ j ≤ j_max`, fails to have a linear resolution.
pub fn koszul_refute_via_powers(gens: &[Polynomial], j_max: u32, budget: &dyn Budget) -> Result<KoszulVerdict> {
    let mut log = Vec::new();
    let Some(d) = equigenerated_degree(gens)? else {
        log.push(String::from("zero ideal"));
        return Ok(KoszulVerdict::unknown(log));
    };
    for j in 1..=j_max {
        match nonlinear_entry(gens, d, j, budget) {
            Ok(Some((i, degree, rank))) => {
                log.push(format!("power {j}: beta_{i},{degree} = {rank} off the linear strand"));
                let cert = KoszulCertificate::NonLinearPower { power: j, i, degree, rank };
                return Ok(KoszulVerdict { status: KoszulStatus::CertifiedNotKoszul, certificate: Some(cert), log });
            }
            Ok(None) => log.push(format!("power {j}: linear resolution")),
            Err(Error::BudgetExceeded(_)) => {
                log.push(format!("power {j}: budget exhausted"));
                return Ok(KoszulVerdict::unknown(log));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(KoszulVerdict::unknown(log))
}

/// Recomputes a certificate. For refutations `gens` generates `I`; otherwise
/// it is the list of defining relations.
pub fn replay_certificate(gens: &[Polynomial], cert: &KoszulCertificate, budget: &dyn Budget) -> Result<bool> {
    let gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    match cert {
        KoszulCertificate::GQuadratic { order, basis } => {
            let Some(first) = gens.first() else {
                return Ok(false);
            };
            let gb = GroebnerBasis::compute(first.ring(), &gens, order, budget)?;
            Ok(gb.polys().iter().all(is_quadric) && gb.polys() == basis.as_slice())
        }
        KoszulCertificate::QuadricCompleteIntersection { order, leading } => {
            if gens.is_empty() {
                return Ok(leading.is_empty());
            }
            if !gens.iter().all(is_quadric) {
                return Ok(false);
            }
            match order {
                Some(o) => {
                    let leads: Vec<Monomial> =
                        gens.iter().map(|g| g.leading_monomial_under(o).unwrap().clone()).collect();
                    Ok(&leads == leading
                        && (0..leads.len()).all(|i| (i + 1..leads.len()).all(|j| leads[i].is_coprime(&leads[j]))))
                }
                None => Ok(is_regular_sequence(&gens, &[], budget)? == RegularVerdict::YesByCodim),
            }
        }
        KoszulCertificate::NonLinearPower { power, i, degree, rank } => {
            let Some(d) = equigenerated_degree(&gens)? else {
                return Ok(false);
            };
            let ring = gens[0].ring().clone();
            let p = IdealHandle::new(&ring, power_generators(&gens, *power))?;
            let table = betti_table(&p, ring.nvars() + 1, budget)?;
            Ok(*rank > 0 && table.get(*i, *degree) == *rank && *degree as usize + 1 != i + (power * d) as usize)
        }
    }
}

/// True iff every minimal defining relation has total degree two.
pub fn quadratic_generation_check(r: &ReesPresentation) -> bool {
    r.census().keys().all(|&(a, b)| a + b == 2)
}

/// Graded lex with `x_{1,n} > x_{2,n−1} > … > x_{r,r+2}` ahead of the
/// remaining variables in declared order.
pub fn antidiagonal_order(ring: &Ring, r: usize) -> Result<MonomialOrder> {
    let n = 2 * r + 1;
    let mut priority = Vec::with_capacity(ring.nvars());
    for i in 1..=r {
        let name = x_name(i, n + 1 - i);
        priority.push(ring.index_of(&name).ok_or(Error::UnknownVariable(name))?);
    }
    for v in 0..ring.nvars() {
        if !priority.contains(&v) {
            priority.push(v);
        }
    }
    MonomialOrder::with_priority(OrderKind::GrLex, priority)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{StepBudget, Unlimited};
    use crate::matalg::skew_generic;
    use crate::pfideal::{blockx4_generators, pf_ideal_general, pf_ideal_maximal, tridiagonal_generators_closed_form};
    use crate::polyring::ring_make;
    use crate::rees::{default_order_pool, explicit_generic_relations, rees_by_elimination, taylor_rees};
    use alloc::vec;

    #[test]
    fn generic_three_is_g_quadratic() {
        let r = explicit_generic_relations(3).unwrap();
        let pool = [MonomialOrder::grevlex(r.ring().nvars())];
        let v = koszul_certify(r.defining_gens(), &pool, &Unlimited).unwrap();
        assert_eq!(v.status, KoszulStatus::CertifiedKoszul);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.kind(), "G_QUADRATIC");
        assert!(replay_certificate(r.defining_gens(), &cert, &Unlimited).unwrap());
    }

    #[test]
    fn tridiagonal_is_a_quadric_complete_intersection() {
        for r in 2..=4 {
            let gens = tridiagonal_generators_closed_form(r).unwrap();
            let rp = taylor_rees(&gens, 1, &Unlimited).unwrap();
            let pool = [MonomialOrder::grevlex(rp.ring().nvars())];
            let v = koszul_certify(rp.defining_gens(), &pool, &Unlimited).unwrap();
            let cert = v.certificate.unwrap();
            assert_eq!(cert.kind(), "CI_OF_QUADRICS");
            assert!(replay_certificate(rp.defining_gens(), &cert, &Unlimited).unwrap());
        }
    }

    #[test]
    fn blockx4_is_a_quadric_complete_intersection() {
        for r in 2..=3 {
            let gens = blockx4_generators(r).unwrap();
            let ideal = IdealHandle::new(&gens[0].ring().clone(), gens).unwrap();
            let rp = rees_by_elimination(&ideal, &Unlimited).unwrap();
            assert_eq!(rp.defining_gens().len(), r);
            let pool = [antidiagonal_order(rp.ring(), r).unwrap()];
            let v = koszul_certify(rp.defining_gens(), &pool, &Unlimited).unwrap();
            let cert = v.certificate.unwrap();
            assert!(matches!(cert, KoszulCertificate::QuadricCompleteIntersection { order: Some(_), .. }), "{:?}", v.log);
            assert!(replay_certificate(rp.defining_gens(), &cert, &Unlimited).unwrap());
        }
    }

    #[test]
    fn generic_five_is_refuted_at_the_first_power() {
        let pf = pf_ideal_maximal(&skew_generic(5).unwrap()).unwrap();
        let v = koszul_refute_via_powers(pf.gens(), 1, &Unlimited).unwrap();
        assert_eq!(v.status, KoszulStatus::CertifiedNotKoszul);
        let cert = v.certificate.unwrap();
        assert_eq!(cert, KoszulCertificate::NonLinearPower { power: 1, i: 3, degree: 5, rank: 1 });
        assert!(replay_certificate(pf.gens(), &cert, &Unlimited).unwrap());
    }

    #[test]
    fn generic_three_powers_stay_linear() {
        let pf = pf_ideal_maximal(&skew_generic(3).unwrap()).unwrap();
        let v = koszul_refute_via_powers(pf.gens(), 3, &Unlimited).unwrap();
        assert_eq!(v.status, KoszulStatus::Unknown);
        assert_eq!(v.log.len(), 3);
        assert_eq!(power_generators(pf.gens(), 3).len(), 10);
    }

    #[test]
    fn principal_ideals_are_never_refuted() {
        let ring = ring_make(&["a", "b"], 2, 0, 0).unwrap();
        let g = [Polynomial::parse(&ring, "a*b + b^2").unwrap()];
        assert_eq!(koszul_refute_via_powers(&g, 4, &Unlimited).unwrap().status, KoszulStatus::Unknown);
    }

    #[test]
    fn non_quadratic_relations_are_not_certified() {
        let ring = ring_make(&["a", "b"], 2, 0, 0).unwrap();
        let g = [Polynomial::parse(&ring, "a^3 - b^3").unwrap()];
        let v = koszul_certify(&g, &[MonomialOrder::grevlex(2)], &Unlimited).unwrap();
        assert_eq!(v.status, KoszulStatus::Unknown);
        assert!(matches!(koszul_certify(&[Polynomial::parse(&ring, "a^2 - b").unwrap()], &[], &Unlimited), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn quadratic_generation() {
        assert!(quadratic_generation_check(&explicit_generic_relations(5).unwrap()));
        let x = crate::matalg::skew_generic_any(4);
        let pf = pf_ideal_general(&x, 2).unwrap();
        let r = rees_by_elimination(&pf.ideal().unwrap(), &Unlimited).unwrap();
        assert!(quadratic_generation_check(&r));
        let ring = ring_make(&["a", "b"], 2, 0, 0).unwrap();
        let one = IdealHandle::new(&ring, vec![Polynomial::parse(&ring, "a").unwrap()]).unwrap();
        assert!(quadratic_generation_check(&rees_by_elimination(&one, &Unlimited).unwrap()));
    }

    #[test]
    fn statuses_are_monotone_in_the_budget() {
        let r = explicit_generic_relations(3).unwrap();
        let pool = default_order_pool(r.ring());
        let mut steps = 1u64;
        let (v, used) = loop {
            let v = koszul_certify(r.defining_gens(), &pool, &StepBudget::new(steps)).unwrap();
            if v.status != KoszulStatus::Unknown {
                break (v, steps);
            }
            steps *= 2;
        };
        let again = koszul_certify(r.defining_gens(), &pool, &StepBudget::new(2 * used)).unwrap();
        assert_eq!(again.status, v.status);
        assert!(replay_certificate(r.defining_gens(), &again.certificate.unwrap(), &StepBudget::new(2 * used)).unwrap());
    }
}
