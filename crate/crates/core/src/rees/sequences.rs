//! d-sequences, M-sequences and sequences of interval type.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::combinat::next_permutation;
use crate::error::{Error, Result};
use crate::groebner::{colon, ideal_equal, IdealHandle};
use crate::polyring::{MonomialOrder, Polynomial};

/// Seed for sampled permutations in the unconditioned check.
pub const D_SEQUENCE_SEED: u64 = 0x5EED;

/// Permutations sampled when the sequence is longer than six.
pub const D_SEQUENCE_SAMPLE: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Regular,
    DSequence,
    UnconditionedDSequence,
    MSequence,
    IntervalType,
}

impl SequenceKind {
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Regular => "REGULAR",
            SequenceKind::DSequence => "D_SEQUENCE",
            SequenceKind::UnconditionedDSequence => "UNCONDITIONED_D_SEQUENCE",
            SequenceKind::MSequence => "M_SEQUENCE",
            SequenceKind::IntervalType => "INTERVAL_TYPE",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceStatus {
    Proved,
    /// Every sampled permutation passed; the rest were not examined.
    Sampled,
    Failed,
    Budget,
}

impl SequenceStatus {
    pub fn name(self) -> &'static str {
        match self {
            SequenceStatus::Proved => "PROVED",
            SequenceStatus::Sampled => "SAMPLED",
            SequenceStatus::Failed => "FAILED",
            SequenceStatus::Budget => "BUDGET",
        }
    }
}

/// What was checked, so a verdict can be replayed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SequenceWitness {
    /// Orderings of the input examined (0-based positions).
    pub permutations: Vec<Vec<usize>>,
    pub seed: Option<u64>,
    /// For M-sequences: per index, the variable order `x_1 < … < x_n` used.
    pub variable_orders: Vec<Vec<usize>>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceVerdict {
    pub kind: SequenceKind,
    pub status: SequenceStatus,
    pub witness: SequenceWitness,
}

impl SequenceVerdict {
    pub fn holds(&self) -> bool {
        matches!(self.status, SequenceStatus::Proved | SequenceStatus::Sampled)
    }
}

/// Checks both conditions of a d-sequence for `fs` in the given order.
/// Returns `None` when they hold, otherwise a description of the first
/// violation found.
pub fn d_sequence_failure(fs: &[Polynomial], budget: &dyn Budget) -> Result<Option<String>> {
    let Some(first) = fs.first() else {
        return Ok(None);
    };
    let ring = first.ring().clone();
    let order = MonomialOrder::grevlex(ring.nvars());
    let n = fs.len();
    for i in 0..n {
        let others: Vec<Polynomial> = fs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, f)| f.clone()).collect();
        if IdealHandle::new(&ring, others)?.contains(&fs[i], budget)? {
            return Ok(Some(format!("a_{} lies in the ideal of the others", i + 1)));
        }
    }
    for i in 1..n {
        let base = IdealHandle::new(&ring, fs[..i].to_vec())?;
        for k in i..n {
            let by_k = colon(&base, &fs[k], budget)?;
            let by_prod = colon(&base, &(&fs[i] * &fs[k]), budget)?;
            if !ideal_equal(&by_k, &by_prod, &order, budget)? {
                return Ok(Some(format!("(a_1..a_{i} : a_{}a_{}) differs from (a_1..a_{i} : a_{})", i + 1, k + 1, k + 1)));
            }
        }
    }
    Ok(None)
}

fn budget_verdict(kind: SequenceKind, witness: SequenceWitness) -> SequenceVerdict {
    SequenceVerdict { kind, status: SequenceStatus::Budget, witness }
}

/// Verifies that `fs` is a d-sequence, or with `unconditioned` that every
/// ordering of it is. Orderings are exhaustive up to length six and a
/// seeded sample beyond.
pub fn d_sequence_check(fs: &[Polynomial], unconditioned: bool, budget: &dyn Budget) -> Result<SequenceVerdict> {
    if fs.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroGenerator);
    }
    let n = fs.len();
    let kind = if unconditioned { SequenceKind::UnconditionedDSequence } else { SequenceKind::DSequence };
    let identity: Vec<usize> = (0..n).collect();
    let (perms, seed) = if !unconditioned {
        (alloc::vec![identity], None)
    } else if n <= 6 {
        let mut all = Vec::new();
        let mut p = identity;
        loop {
            all.push(p.clone());
            if !next_permutation(&mut p) {
                break;
            }
        }
        (all, None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(D_SEQUENCE_SEED);
        let sample = (0..D_SEQUENCE_SAMPLE)
            .map(|_| {
                let mut p = identity.clone();
                p.shuffle(&mut rng);
                p
            })
            .collect();
        (sample, Some(D_SEQUENCE_SEED))
    };
    let mut witness = SequenceWitness { seed, ..SequenceWitness::default() };
    for p in perms {
        let seq: Vec<Polynomial> = p.iter().map(|&i| fs[i].clone()).collect();
        witness.permutations.push(p);
        match d_sequence_failure(&seq, budget) {
            Ok(None) => {}
            Ok(Some(why)) => {
                witness.failure = Some(why);
                return Ok(SequenceVerdict { kind, status: SequenceStatus::Failed, witness });
            }
            Err(Error::BudgetExceeded(_)) => return Ok(budget_verdict(kind, witness)),
            Err(e) => return Err(e),
        }
    }
    let status = if seed.is_some() { SequenceStatus::Sampled } else { SequenceStatus::Proved };
    Ok(SequenceVerdict { kind, status, witness })
}

fn exponents(ms: &[Polynomial]) -> Result<Vec<Vec<u32>>> {
    ms.iter()
        .map(|m| match m.terms() {
            [(_, mono)] => Ok(mono.exps().to_vec()),
            _ => Err(Error::NotMonomial),
        })
        .collect()
}

fn is_interval_type(e: &[Vec<u32>]) -> Option<String> {
    let nv = e.first().map_or(0, |r| r.len());
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            for x in 0..nv {
                if e[i][x] == 0 || e[j][x] == 0 {
                    continue;
                }
                if let Some(k) = (i..=j).find(|&k| e[i][x] > e[k][x]) {
                    return Some(format!("variable {x} between m_{} and m_{} drops at m_{}", i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

/// Whether the order `vars` (smallest first) on the support of `m_i`
/// satisfies the tail-divisibility condition against every later `m_j`.
fn order_works(e: &[Vec<u32>], i: usize, vars: &[usize]) -> bool {
    e[i + 1..].iter().all(|mj| match vars.iter().position(|&v| mj[v] > 0) {
        None => true,
        Some(k) => vars[k..].iter().all(|&v| mj[v] >= e[i][v]),
    })
}

/// Support variables of `m_i` sorted by how many later monomials they
/// divide, fewest first, with ties broken by exponent.
fn candidate_orders(e: &[Vec<u32>], i: usize, support: &[usize]) -> Vec<Vec<usize>> {
    let count = |v: usize| e[i + 1..].iter().filter(|m| m[v] > 0).count();
    let mut a = support.to_vec();
    a.sort_by_key(|&v| (count(v), e[i][v], v));
    let mut b = support.to_vec();
    b.sort_by_key(|&v| (count(v), core::cmp::Reverse(e[i][v]), v));
    let mut c = support.to_vec();
    c.sort_by_key(|&v| (e[i + 1..].iter().filter(|m| m[v] >= e[i][v]).count(), v));
    alloc::vec![a, b, c]
}

/// Exhaustive variable-order search is limited to supports of this size.
pub const M_SEQUENCE_EXHAUSTIVE_LIMIT: usize = 8;

/// Interval type if the exponent condition holds; otherwise M-sequence if a
/// per-index variable order is found; otherwise failed.
pub fn m_sequence_check(ms: &[Polynomial]) -> Result<SequenceVerdict> {
    let e = exponents(ms)?;
    let mut witness = SequenceWitness { permutations: alloc::vec![(0..ms.len()).collect()], ..SequenceWitness::default() };
    let interval_failure = match is_interval_type(&e) {
        None => {
            return Ok(SequenceVerdict { kind: SequenceKind::IntervalType, status: SequenceStatus::Proved, witness });
        }
        Some(why) => why,
    };
    for i in 0..e.len() {
        let support: Vec<usize> = (0..e[i].len()).filter(|&v| e[i][v] > 0).collect();
        let mut found = candidate_orders(&e, i, &support).into_iter().find(|o| order_works(&e, i, o));
        if found.is_none() {
            if support.len() > M_SEQUENCE_EXHAUSTIVE_LIMIT {
                return Err(Error::SearchSpaceExceeded(format!(
                    "support of m_{} has {} variables",
                    i + 1,
                    support.len()
                )));
            }
            let mut p = support.clone();
            loop {
                if order_works(&e, i, &p) {
                    found = Some(p);
                    break;
                }
                if !next_permutation(&mut p) {
                    break;
                }
            }
        }
        match found {
            Some(o) => witness.variable_orders.push(o),
            None => {
                witness.failure = Some(format!("{interval_failure}; no variable order works for m_{}", i + 1));
                return Ok(SequenceVerdict { kind: SequenceKind::MSequence, status: SequenceStatus::Failed, witness });
            }
        }
    }
    Ok(SequenceVerdict { kind: SequenceKind::MSequence, status: SequenceStatus::Proved, witness })
}

/// Re-checks the M-sequence witness orders.
pub fn replay_m_sequence(ms: &[Polynomial], verdict: &SequenceVerdict) -> Result<bool> {
    let e = exponents(ms)?;
    Ok(match verdict.kind {
        SequenceKind::IntervalType => is_interval_type(&e).is_none() == (verdict.status == SequenceStatus::Proved),
        _ if verdict.status == SequenceStatus::Proved => {
            verdict.witness.variable_orders.len() == e.len()
                && verdict.witness.variable_orders.iter().enumerate().all(|(i, o)| order_works(&e, i, o))
        }
        _ => m_sequence_check(ms)?.status == verdict.status,
    })
}
