//! Graded free resolutions and Betti tables.

mod be;

#[cfg(test)]
mod tests;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

pub use be::{be_complex, be_conventions, be_verify, BeConvention, BeReport, PfOrder, SignConvention, Verdict};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::{minimal_columns, module_syzygies, IdealHandle};
use crate::matalg::PolyMatrix;
use crate::polyring::{MonomialOrder, Polynomial, Ring};

/// A complex `F_0 ← F_1 ← … ← F_len` of graded free modules.
///
/// `differentials[k]` is the matrix of `F_{k+1} → F_k` (rows index the basis
/// of `F_k`), and `degrees[k]` lists the degrees of the basis of `F_k`, so
/// that `F_k = ⊕ S(−degrees[k][i])`.
#[derive(Debug, Clone)]
pub struct GradedFreeComplex {
    ring: Ring,
    differentials: Vec<PolyMatrix>,
    degrees: Vec<Vec<u32>>,
    minimal: bool,
}

impl GradedFreeComplex {
    pub fn new(ring: &Ring, differentials: Vec<PolyMatrix>, degrees: Vec<Vec<u32>>) -> Result<Self> {
        if degrees.len() != differentials.len() + 1 {
            return Err(Error::ShapeMismatch);
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.rows() != degrees[k].len() || d.cols() != degrees[k + 1].len() {
                return Err(Error::ShapeMismatch);
            }
        }
        let mut c = GradedFreeComplex { ring: ring.clone(), differentials, degrees, minimal: false };
        c.minimal = c.has_no_units();
        Ok(c)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    pub fn degrees(&self) -> &[Vec<u32>] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.differentials.is_empty()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    fn has_no_units(&self) -> bool {
        self.differentials.iter().all(|d| d.has_no_units())
    }

    /// True iff consecutive differentials compose to zero.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].try_mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Σ_k (−1)^k · #{basis elements of F_k in degree j}` for every `j`.
    pub fn euler_characteristic(&self) -> BTreeMap<u32, i64> {
        let mut e = BTreeMap::new();
        for (k, ds) in self.degrees.iter().enumerate() {
            let s = if k % 2 == 0 { 1 } else { -1 };
            for &d in ds {
                *e.entry(d).or_insert(0) += s;
            }
        }
        e.retain(|_, v| *v != 0);
        e
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, ds) in self.degrees.iter().enumerate() {
            for &d in ds {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }
}

/// Resolution of `S/I` by iterated syzygies, keeping a minimal generating
/// set of each syzygy module, up to `max_len` steps.
pub fn schreyer_resolve(ideal: &IdealHandle, max_len: usize, budget: &dyn Budget) -> Result<GradedFreeComplex> {
    let ring = ideal.ring().clone();
    let gens = ideal.gens();
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        degs.push(g.total_degree().unwrap_or(0));
    }
    let order = MonomialOrder::grevlex(ring.nvars());
    let mut differentials = Vec::new();
    let mut degrees = alloc::vec![alloc::vec![0u32]];
    if gens.is_empty() || max_len == 0 {
        return GradedFreeComplex::new(&ring, differentials, degrees);
    }
    differentials.push(PolyMatrix::from_rows(&ring, alloc::vec![gens.to_vec()])?);
    degrees.push(degs);
    while differentials.len() < max_len {
        let k = differentials.len();
        let d = &differentials[k - 1];
        let (syz, shifts) = module_syzygies(d, &degrees[k - 1], &degrees[k], &order, budget)?;
        if syz.cols() == 0 {
            break;
        }
        let keep = minimal_columns(&syz, &degrees[k], &shifts, &order, budget)?;
        let rows: Vec<usize> = (0..syz.rows()).collect();
        differentials.push(syz.submatrix(&rows, &keep));
        degrees.push(keep.iter().map(|&j| shifts[j]).collect());
    }
    GradedFreeComplex::new(&ring, differentials, degrees)
}

/// Cancels unit entries one at a time, always at the first differential
/// containing one and its smallest `(row, column)` position.
pub fn minimalize(c: &GradedFreeComplex) -> GradedFreeComplex {
    let mut ds = c.differentials.clone();
    let mut degs = c.degrees.clone();
    loop {
        let pivot = ds.iter().enumerate().find_map(|(k, d)| {
            (0..d.rows())
                .flat_map(|i| (0..d.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).constant_term().is_zero())
                .map(|(i, j)| (k, i, j))
        });
        let Some((k, i, j)) = pivot else {
            break;
        };
        let d = &mut ds[k];
        let c0 = d.get(i, j).constant_term();
        for jj in 0..d.cols() {
            if jj == j || d.get(i, jj).is_zero() {
                continue;
            }
            let f = d.get(i, jj).scale(&c0.recip());
            for l in 0..d.rows() {
                let v = d.get(l, jj) - &(&f * d.get(l, j));
                d.set(l, jj, v);
            }
        }
        d.remove_row(i);
        d.remove_col(j);
        if k > 0 {
            ds[k - 1].remove_col(i);
        }
        if k + 1 < ds.len() {
            ds[k + 1].remove_row(j);
        }
        degs[k].remove(i);
        degs[k + 1].remove(j);
    }
    while ds.last().is_some_and(|d| d.cols() == 0) {
        ds.pop();
        degs.pop();
    }
    GradedFreeComplex { ring: c.ring.clone(), differentials: ds, degrees: degs, minimal: true }
}

/// Graded Betti numbers `β_{i,j}`: rank of `F_i` in internal degree `j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Length of the resolution (largest `i` with a nonzero entry).
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<usize> {
        let mut t = alloc::vec![0; self.length() + 1];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// Rows of the `β_{i,i+j}` layout: `(j, [β_{0,j}, β_{1,1+j}, …])`.
    pub fn rows(&self) -> Vec<(u32, Vec<usize>)> {
        let len = self.length();
        let jmax = self.entries.keys().map(|&(i, d)| d.saturating_sub(i as u32)).max().unwrap_or(0);
        (0..=jmax).map(|j| (j, (0..=len).map(|i| self.get(i, i as u32 + j)).collect())).collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.length();
        let totals = self.totals();
        let width = totals.iter().map(|t| alloc::format!("{t}").len()).max().unwrap_or(1).max(1);
        let cell = |v: usize| if v == 0 { String::from(".") } else { alloc::format!("{v}") };
        write!(f, "{:>7}", "")?;
        for i in 0..=len {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>7}", "total:")?;
        for t in &totals {
            write!(f, " {:>width$}", t)?;
        }
        writeln!(f)?;
        for (j, row) in self.rows() {
            write!(f, "{:>7}", alloc::format!("{j}:"))?;
            for v in row {
                write!(f, " {:>width$}", cell(v))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Betti table of `S/I` from the minimalized resolution.
pub fn betti_table(ideal: &IdealHandle, max_len: usize, budget: &dyn Budget) -> Result<BettiTable> {
    Ok(minimalize(&schreyer_resolve(ideal, max_len, budget)?).betti())
}

/// True iff the ideal, generated in the single degree `d`, has a linear
/// resolution: every `β_{i,j}` of `S/I` with `i ≥ 1` has `j = i + d − 1`.
pub fn has_linear_resolution(ideal: &IdealHandle, budget: &dyn Budget) -> Result<bool> {
    let mut d = None;
    for g in ideal.gens() {
        let e = g.total_degree().unwrap_or(0);
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if *d.get_or_insert(e) != e {
            return Err(Error::NotEquigenerated);
        }
    }
    let Some(d) = d else {
        return Ok(true);
    };
    let b = betti_table(ideal, ideal.ring().nvars() + 1, budget)?;
    Ok(b.entries.keys().all(|&(i, j)| i == 0 || j as usize + 1 == i + d as usize))
}

/// Taylor complex of a list of monomials: basis indexed by subsets, with
/// `e_σ ↦ Σ ±(m_σ / m_{σ∖t}) e_{σ∖t}`, `m_σ` the lcm over `σ`.
pub fn taylor_complex(gens: &[Polynomial]) -> Result<GradedFreeComplex> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroGenerator);
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| !g.is_monomial()) {
        return Err(Error::NotMonomial);
    }
    let mons: Vec<_> = gens.iter().map(|g| g.leading().unwrap().1.clone()).collect();
    let s = mons.len();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=s).map(|k| crate::combinat::combinations(s, k)).collect();
    let lcm = |set: &[usize]| {
        set.iter().fold(crate::polyring::Monomial::one(&ring), |acc, &i| acc.lcm(&mons[i], &ring))
    };
    let degrees: Vec<Vec<u32>> = subsets.iter().map(|level| level.iter().map(|t| lcm(t).totdeg()).collect()).collect();
    let mut ds = Vec::new();
    for k in 1..=s {
        let (rows, cols) = (&subsets[k - 1], &subsets[k]);
        let mut m = PolyMatrix::zero(&ring, rows.len(), cols.len());
        for (j, sigma) in cols.iter().enumerate() {
            let top = lcm(sigma);
            for (pos, _) in sigma.iter().enumerate() {
                let face: Vec<usize> = sigma.iter().enumerate().filter(|(q, _)| *q != pos).map(|(_, &v)| v).collect();
                let i = rows.iter().position(|r| *r == face).unwrap();
                let q = top.div(&lcm(&face)).unwrap();
                let c = if pos % 2 == 0 { 1 } else { -1 };
                m.set(i, j, Polynomial::monomial(&ring, num_rational::BigRational::from_integer(c.into()), q));
            }
        }
        ds.push(m);
    }
    GradedFreeComplex::new(&ring, ds, degrees)
}
