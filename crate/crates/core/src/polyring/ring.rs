use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Which part of a bigraded ring a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarBlock {
    /// Base variables, bidegree `(1, 0)`.
    X,
    /// Rees variables, bidegree `(0, d)` with `d >= 1`.
    Y,
    /// Auxiliary variables that get eliminated; ignored by bigrading checks.
    E,
}

/// Ordered variable list with a block partition and per-variable bidegrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    names: Vec<String>,
    blocks: Vec<VarBlock>,
    bidegree: Vec<(u32, u32)>,
    index: BTreeMap<String, usize>,
}

/// Shared handle to a ring descriptor.
pub type Ring = Arc<RingDescriptor>;

/// Builds a ring whose first `x_count` names form the X-block, the next
/// `y_count` the Y-block and the last `e_count` the E-block.
pub fn ring_make<S: AsRef<str>>(names: &[S], x_count: usize, y_count: usize, e_count: usize) -> Result<Ring> {
    if x_count + y_count + e_count != names.len() {
        return Err(Error::BlockCountMismatch { x: x_count, y: y_count, e: e_count, names: names.len() });
    }
    let mut blocks = Vec::with_capacity(names.len());
    blocks.extend(core::iter::repeat(VarBlock::X).take(x_count));
    blocks.extend(core::iter::repeat(VarBlock::Y).take(y_count));
    blocks.extend(core::iter::repeat(VarBlock::E).take(e_count));
    RingDescriptor::new(names.iter().map(|s| s.as_ref().to_string()).collect(), blocks)
}

impl RingDescriptor {
    /// Ring with explicit per-variable blocks and default bidegrees.
    pub fn new(names: Vec<String>, blocks: Vec<VarBlock>) -> Result<Ring> {
        if names.len() != blocks.len() {
            return Err(Error::BlockCountMismatch { x: 0, y: 0, e: blocks.len(), names: names.len() });
        }
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !is_identifier(n) {
                return Err(Error::InvalidArgument(alloc::format!("bad variable name `{n}`")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        let bidegree = blocks
            .iter()
            .map(|b| match b {
                VarBlock::X => (1, 0),
                VarBlock::Y => (0, 1),
                VarBlock::E => (0, 0),
            })
            .collect();
        Ok(Arc::new(RingDescriptor { names, blocks, bidegree, index }))
    }

    /// Copy of this ring with every Y-variable in bidegree `(0, d)`.
    pub fn with_y_degree(&self, d: u32) -> Result<Ring> {
        if d == 0 {
            return Err(Error::InvalidBidegree(String::from("Y-block")));
        }
        let mut r = self.clone();
        for (b, bd) in r.blocks.iter().zip(r.bidegree.iter_mut()) {
            if *b == VarBlock::Y {
                *bd = (0, d);
            }
        }
        Ok(Arc::new(r))
    }

    /// Copy of this ring with an explicit bidegree for the E-variable `var`.
    pub fn with_e_bidegree(&self, var: usize, bd: (u32, u32)) -> Result<Ring> {
        if self.blocks.get(var) != Some(&VarBlock::E) {
            return Err(Error::InvalidBidegree(self.names.get(var).cloned().unwrap_or_default()));
        }
        let mut r = self.clone();
        r.bidegree[var] = bd;
        Ok(Arc::new(r))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn block(&self, i: usize) -> VarBlock {
        self.blocks[i]
    }

    pub fn blocks(&self) -> &[VarBlock] {
        &self.blocks
    }

    pub fn bidegree(&self, i: usize) -> (u32, u32) {
        self.bidegree[i]
    }

    pub fn vars_in(&self, block: VarBlock) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.blocks[i] == block).collect()
    }

    pub fn x_vars(&self) -> Vec<usize> {
        self.vars_in(VarBlock::X)
    }

    pub fn y_vars(&self) -> Vec<usize> {
        self.vars_in(VarBlock::Y)
    }

    pub fn e_vars(&self) -> Vec<usize> {
        self.vars_in(VarBlock::E)
    }

    /// Appends variables to a copy of this ring.
    pub fn extended(&self, extra: &[(String, VarBlock)]) -> Result<Ring> {
        let mut names = self.names.clone();
        let mut blocks = self.blocks.clone();
        for (n, b) in extra {
            names.push(n.clone());
            blocks.push(*b);
        }
        let mut r = RingDescriptor::new(names, blocks)?;
        let inner = Arc::make_mut(&mut r);
        inner.bidegree[..self.nvars()].copy_from_slice(&self.bidegree);
        Ok(r)
    }

    /// The ring on the variables `keep` (in that order), bidegrees retained.
    pub fn restricted(&self, keep: &[usize]) -> Result<Ring> {
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let blocks = keep.iter().map(|&v| self.blocks[v]).collect();
        let mut r = RingDescriptor::new(names, blocks)?;
        let inner = Arc::make_mut(&mut r);
        for (k, &v) in keep.iter().enumerate() {
            inner.bidegree[k] = self.bidegree[v];
        }
        Ok(r)
    }

    /// A variable name not yet used in this ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|k| alloc::format!("{stem}_{k}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Conventional name of the matrix entry in row `i`, column `j` (1-based).
pub fn x_name(i: usize, j: usize) -> String {
    alloc::format!("x{i}_{j}")
}

pub fn y_name(k: usize) -> String {
    alloc::format!("y{k}")
}

pub fn t_name(i: usize, j: usize) -> String {
    alloc::format!("t{i}_{j}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rees_ring_for_three_by_three() {
        let r = ring_make(&["x1_2", "x1_3", "x2_3", "y1", "y2", "y3"], 3, 3, 0).unwrap();
        assert_eq!(r.nvars(), 6);
        assert_eq!(r.bidegree(0), (1, 0));
        assert_eq!(r.bidegree(4), (0, 1));
        assert_eq!(r.y_vars(), [3, 4, 5]);
    }

    #[test]
    fn univariate_and_elimination_rings() {
        let r = ring_make(&["x1_2"], 1, 0, 0).unwrap();
        assert_eq!(r.x_vars(), [0]);
        let e = ring_make(&["x1_2", "y1", "t"], 1, 1, 1).unwrap();
        assert_eq!(e.e_vars(), [2]);
        assert_eq!(e.bidegree(2), (0, 0));
    }

    #[test]
    fn rejects_duplicates_and_bad_counts() {
        assert!(matches!(ring_make(&["a", "a"], 2, 0, 0), Err(Error::DuplicateVariable(_))));
        assert!(matches!(ring_make(&["a", "b"], 1, 0, 0), Err(Error::BlockCountMismatch { .. })));
    }

    #[test]
    fn y_degree_must_be_positive() {
        let r = ring_make(&["x", "y"], 1, 1, 0).unwrap();
        assert!(r.with_y_degree(0).is_err());
        assert_eq!(r.with_y_degree(2).unwrap().bidegree(1), (0, 2));
    }
}
