//! Colon identities among the generic Rees relations.

use alloc::string::String;
use alloc::vec::Vec;

use super::{explicit_generic_relations, ReesPresentation};
use crate::budget::Budget;
use crate::error::Result;
use crate::groebner::{colon, ideal_equal, is_regular_sequence, IdealHandle};
use crate::polyring::{x_name, MonomialOrder, OrderKind, Polynomial};

/// One identity and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub holds: bool,
}

/// Grlex on the generic ring with `x_{c1 c2} > x_{c2 c3} > …` for the
/// cyclic chain starting at `shift`, then all other variables in declared
/// order.
fn chain_order(r: &ReesPresentation, n: usize, shift: usize) -> MonomialOrder {
    let ring = r.ring();
    let label = |i: usize| (i - 1 + shift) % n + 1;
    let mut priority: Vec<usize> = Vec::new();
    for i in 1..n {
        let (a, b) = (label(i), label(i + 1));
        let name = x_name(a.min(b), a.max(b));
        priority.push(ring.index_of(&name).expect("generic variable"));
    }
    for v in 0..ring.nvars() {
        if !priority.contains(&v) {
            priority.push(v);
        }
    }
    MonomialOrder::with_priority(OrderKind::GrLex, priority).unwrap()
}

/// Checks, for the generic relations `g_1..g_n` with `J' = ⟨g_1..g_{n−1}⟩`:
/// regularity of `g_1..g_{n−1}`; `(J' : g_n) = J' + ⟨y_n, Pf_1̄⟩`;
/// `(J' : y_n) = J`; `(J' + ⟨y_n⟩ : Pf_1̄) = ⟨y_1..y_n⟩`; and
/// `(J' : g_n) = (J' : g_n²)`.
pub fn colon_identities_check(n: usize, budget: &dyn Budget) -> Result<Vec<IdentityCheck>> {
    let r = explicit_generic_relations(n)?;
    let ring = r.ring().clone();
    let g = r.defining_gens();
    let order = MonomialOrder::grevlex(ring.nvars());
    let jp = IdealHandle::new(&ring, g[..n - 1].to_vec())?;
    let j = IdealHandle::new(&ring, g.to_vec())?;
    let yn = r.y(n - 1);
    let pf1 = r.lift(&r.base_gens()[n - 1])?;
    let mut out = Vec::new();

    let reg = is_regular_sequence(&g[..n - 1], &[chain_order(&r, n, 0)], budget)?;
    out.push(IdentityCheck { label: String::from("g_1..g_{n-1} regular"), holds: reg.is_regular() });

    let colon_gn = colon(&jp, &g[n - 1], budget)?;
    let rhs2 = jp.plus(&[yn.clone(), pf1.clone()])?;
    out.push(IdentityCheck {
        label: String::from("(J':g_n) = J' + <y_n, Pf_1>"),
        holds: ideal_equal(&colon_gn, &rhs2, &order, budget)?,
    });

    let colon_yn = colon(&jp, &yn, budget)?;
    out.push(IdentityCheck { label: String::from("(J':y_n) = J"), holds: ideal_equal(&colon_yn, &j, &order, budget)? });

    let lhs4 = colon(&jp.plus(&[yn.clone()])?, &pf1, budget)?;
    let ys: Vec<Polynomial> = (0..n).map(|k| r.y(k)).collect();
    let rhs4 = IdealHandle::new(&ring, ys)?;
    out.push(IdentityCheck {
        label: String::from("(J' + <y_n>:Pf_1) = <y_1..y_n>"),
        holds: ideal_equal(&lhs4, &rhs4, &order, budget)?,
    });

    let colon_sq = colon(&jp, &(&g[n - 1] * &g[n - 1]), budget)?;
    out.push(IdentityCheck {
        label: String::from("(J':g_n) = (J':g_n^2)"),
        holds: ideal_equal(&colon_gn, &colon_sq, &order, budget)?,
    });
    Ok(out)
}

/// For one omitted relation: the cyclic relabelings of the chain order under
/// which the other `n−1` relations have pairwise coprime leading terms, and
/// whether they form a regular sequence by codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsequenceReport {
    /// 1-based index of the omitted relation.
    pub omitted: usize,
    pub coprime_shifts: Vec<usize>,
    pub regular: bool,
}

/// Runs the leading-term criterion on every `n−1` of the `n` generic
/// relations under every cyclic relabeling of the chain order.
pub fn regular_subsequences_report(n: usize, budget: &dyn Budget) -> Result<Vec<SubsequenceReport>> {
    let r = explicit_generic_relations(n)?;
    let orders: Vec<MonomialOrder> = (0..n).map(|s| chain_order(&r, n, s)).collect();
    let mut out = Vec::new();
    for omit in 0..n {
        let fs: Vec<Polynomial> =
            r.defining_gens().iter().enumerate().filter(|(k, _)| *k != omit).map(|(_, g)| g.clone()).collect();
        let coprime_shifts = orders
            .iter()
            .enumerate()
            .filter(|(_, o)| {
                let leads: Vec<_> = fs.iter().map(|f| f.leading_monomial_under(o).unwrap().clone()).collect();
                (0..leads.len()).all(|i| (i + 1..leads.len()).all(|j| leads[i].is_coprime(&leads[j])))
            })
            .map(|(s, _)| s)
            .collect();
        let regular = is_regular_sequence(&fs, &[], budget)?.is_regular();
        out.push(SubsequenceReport { omitted: omit + 1, coprime_shifts, regular });
    }
    Ok(out)
}
