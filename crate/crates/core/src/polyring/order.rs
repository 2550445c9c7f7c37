use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::monomial::Monomial;
use super::ring::RingDescriptor;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderKind {
    Lex,
    GrLex,
    GRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrLex => "grlex",
            OrderKind::GRevLex => "grevlex",
        }
    }
}

/// A monomial order given by a kind, a variable priority list and an
/// optional block decomposition.
///
/// Internally every order is a matrix order: a monomial's key is the list of
/// dot products of its exponent row with the weight rows, and keys compare
/// lexicographically. Keys are linear in the exponents, which the Gröbner
/// engine relies on to multiply monomials without recomputing keys.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    blocks: Option<Vec<Vec<usize>>>,
    rows: Vec<Vec<(usize, i32)>>,
}

impl MonomialOrder {
    /// `kind` on all variables with priority `x_0 > x_1 > ...`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self::with_priority(kind, (0..nvars).collect()).unwrap()
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GRevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrLex, nvars)
    }

    /// `kind` with an explicit priority list (first entry is the largest
    /// variable).
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        check_permutation(&priority)?;
        let rows = block_rows(kind, &priority);
        Ok(MonomialOrder { kind, priority, blocks: None, rows })
    }

    /// Block order: blocks compare in sequence, the first block dominating;
    /// inside a block variables follow `priority` and compare by `kind`.
    pub fn with_blocks(kind: OrderKind, priority: Vec<usize>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        check_permutation(&priority)?;
        let mut seen = alloc::vec![false; priority.len()];
        for b in &blocks {
            for &v in b {
                if v >= seen.len() || seen[v] {
                    return Err(Error::InvalidArgument(String::from("blocks must partition the variables")));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidArgument(String::from("blocks must partition the variables")));
        }
        let pos = inverse(&priority);
        let mut rows = Vec::new();
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let mut vars = b.clone();
            vars.sort_by_key(|&v| pos[v]);
            rows.extend(block_rows(kind, &vars));
            sorted_blocks.push(vars);
        }
        Ok(MonomialOrder { kind, priority, blocks: Some(sorted_blocks), rows })
    }

    /// Elimination order for `drop`: the dropped variables form a first
    /// block, the rest a second block, both ordered by `kind`.
    pub fn elimination(kind: OrderKind, nvars: usize, drop: &[usize]) -> Result<Self> {
        let first: Vec<usize> = (0..nvars).filter(|v| drop.contains(v)).collect();
        let rest: Vec<usize> = (0..nvars).filter(|v| !drop.contains(v)).collect();
        let blocks = if first.is_empty() { alloc::vec![rest] } else { alloc::vec![first, rest] };
        Self::with_blocks(kind, (0..nvars).collect(), blocks)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn blocks(&self) -> Option<&[Vec<usize>]> {
        self.blocks.as_deref()
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub(crate) fn rows(&self) -> &[Vec<(usize, i32)>] {
        &self.rows
    }

    /// Weight-row key of an exponent row.
    pub fn key(&self, exps: &[u32]) -> Vec<i32> {
        self.rows.iter().map(|r| r.iter().map(|&(v, w)| w * exps[v] as i32).sum()).collect()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for r in &self.rows {
            let ka: i64 = r.iter().map(|&(v, w)| w as i64 * a.exp(v) as i64).sum();
            let kb: i64 = r.iter().map(|&(v, w)| w as i64 * b.exp(v) as i64).sum();
            match ka.cmp(&kb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// True when every variable of `vars` outranks every other variable in
    /// the sense of an elimination order.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        match &self.blocks {
            Some(bs) => {
                let mut covered = Vec::new();
                for b in bs {
                    if covered.len() == vars.len() {
                        break;
                    }
                    if !b.iter().all(|v| vars.contains(v)) {
                        return false;
                    }
                    covered.extend_from_slice(b);
                }
                covered.len() == vars.len()
            }
            None => {
                self.kind == OrderKind::Lex && {
                    let k = vars.len();
                    self.priority[..k].iter().all(|v| vars.contains(v))
                }
            }
        }
    }

    /// Human-readable description using the ring's variable names.
    pub fn describe(&self, ring: &RingDescriptor) -> String {
        let names = |vs: &[usize]| -> String {
            let parts: Vec<&str> = vs.iter().map(|&v| ring.name(v)).collect();
            parts.join(">")
        };
        match &self.blocks {
            None => alloc::format!("{}({})", self.kind.name(), names(&self.priority)),
            Some(bs) => {
                let parts: Vec<String> = bs.iter().map(|b| names(b)).collect();
                alloc::format!("{}[{}]", self.kind.name(), parts.join(" | "))
            }
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonomialOrder")
            .field("kind", &self.kind)
            .field("priority", &self.priority)
            .field("blocks", &self.blocks)
            .finish()
    }
}

fn check_permutation(p: &[usize]) -> Result<()> {
    let mut seen = alloc::vec![false; p.len()];
    for &v in p {
        if v >= p.len() || seen[v] {
            return Err(Error::InvalidArgument(String::from("priority list is not a permutation")));
        }
        seen[v] = true;
    }
    Ok(())
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn block_rows(kind: OrderKind, vars: &[usize]) -> Vec<Vec<(usize, i32)>> {
    let mut rows = Vec::new();
    let sum: Vec<(usize, i32)> = vars.iter().map(|&v| (v, 1)).collect();
    match kind {
        OrderKind::Lex => rows.extend(vars.iter().map(|&v| alloc::vec![(v, 1)])),
        OrderKind::GrLex => {
            rows.push(sum);
            rows.extend(vars.iter().take(vars.len().saturating_sub(1)).map(|&v| alloc::vec![(v, 1)]));
        }
        OrderKind::GRevLex => {
            rows.push(sum);
            rows.extend(vars.iter().skip(1).rev().map(|&v| alloc::vec![(v, -1)]));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ring::ring_make;

    fn mono(r: &RingDescriptor, e: &[u32]) -> Monomial {
        Monomial::new(r, e.to_vec())
    }

    #[test]
    fn grevlex_prefers_smaller_last_exponent() {
        let r = ring_make(&["x1_2", "x2_3"], 2, 0, 0).unwrap();
        let o = MonomialOrder::grevlex(2);
        assert_eq!(o.cmp(&mono(&r, &[2, 1]), &mono(&r, &[1, 2])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates_degree() {
        let r = ring_make(&["x1_2", "t"], 1, 0, 1).unwrap();
        let o = MonomialOrder::elimination(OrderKind::GRevLex, 2, &[1]).unwrap();
        assert_eq!(o.cmp(&mono(&r, &[0, 1]), &mono(&r, &[10, 0])), Ordering::Greater);
        assert!(o.eliminates(&[1]));
        let lex = MonomialOrder::with_priority(OrderKind::Lex, alloc::vec![1, 0]).unwrap();
        assert_eq!(lex.cmp(&mono(&r, &[0, 1]), &mono(&r, &[10, 0])), Ordering::Greater);
        assert!(lex.eliminates(&[1]));
    }

    #[test]
    fn leading_term_of_rees_minor() {
        // x12 > x13 > x23 > y1 > y2 > y3. Under grevlex the rightmost nonzero
        // entry of (x12*y2) - (x13*y1) sits at y2 and is positive, so x13*y1
        // leads; grlex breaks the degree tie lexicographically instead.
        let r = ring_make(&["x1_2", "x1_3", "x2_3", "y1", "y2", "y3"], 3, 3, 0).unwrap();
        let a = mono(&r, &[1, 0, 0, 0, 1, 0]); // x12 y2
        let b = mono(&r, &[0, 1, 0, 1, 0, 0]); // x13 y1
        let grevlex = MonomialOrder::grevlex(6);
        let grlex = MonomialOrder::grlex(6);
        assert_eq!(grevlex.cmp(&a, &b), Ordering::Less);
        assert_eq!(grlex.cmp(&a, &b), Ordering::Greater);

        // Cross-check against the definition on all degree-2 monomials in
        // x12, x13, y1, y2: sort by (degree, reversed negated exponents).
        let mut all = Vec::new();
        for i in [0usize, 1, 3, 4] {
            for j in [0usize, 1, 3, 4] {
                if i <= j {
                    let mut e = alloc::vec![0; 6];
                    e[i] += 1;
                    e[j] += 1;
                    all.push(mono(&r, &e));
                }
            }
        }
        let by_definition = |p: &Monomial, q: &Monomial| {
            let diff: Vec<i64> = (0..6).map(|v| p.exp(v) as i64 - q.exp(v) as i64).collect();
            match diff.iter().rev().find(|d| **d != 0) {
                None => Ordering::Equal,
                Some(d) if *d < 0 => Ordering::Greater,
                Some(_) => Ordering::Less,
            }
        };
        for p in &all {
            for q in &all {
                assert_eq!(grevlex.cmp(p, q), by_definition(p, q));
                assert_eq!(p.cmp_canonical(q), by_definition(p, q));
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(MonomialOrder::with_priority(OrderKind::Lex, alloc::vec![0, 0]).is_err());
        assert!(MonomialOrder::with_blocks(OrderKind::Lex, alloc::vec![0, 1], alloc::vec![alloc::vec![0]]).is_err());
    }
}
