//! Syzygies of module generators.
//!
//! A column `v_j` of a matrix over `S` with `r` rows is encoded as the
//! polynomial `Σ_i v_ij·E_i + U_j` in `S[E, U]`, linear in the new
//! variables. A Gröbner basis of these under a position-over-term order with
//! the `E` block first has, as its elements without any `E`, generators of
//! the syzygy module written in the `U` basis.

use alloc::string::String;
use alloc::vec::Vec;

use super::engine::Ctx;
use super::GroebnerBasis;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::matalg::PolyMatrix;
use crate::polyring::{same_ring, MonomialOrder, Polynomial, VarBlock};

/// Generators of the syzygy module of an ordered generator list, one per
/// column, with the internal degree of each column.
#[derive(Clone, Debug)]
pub struct SyzygyMatrix {
    pub matrix: PolyMatrix,
    pub shifts: Vec<u32>,
}

impl SyzygyMatrix {
    pub fn ncols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.matrix.column(j)
    }
}

/// Syzygies of the homogeneous list `fs`.
pub fn syzygies(fs: &[Polynomial], order: &MonomialOrder, budget: &dyn Budget) -> Result<SyzygyMatrix> {
    let Some(first) = fs.first() else {
        return Err(Error::ZeroGenerator);
    };
    let ring = first.ring().clone();
    let mut degs = Vec::with_capacity(fs.len());
    for f in fs {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        degs.push(f.total_degree().unwrap_or(0));
    }
    let m = PolyMatrix::from_rows(&ring, alloc::vec![fs.to_vec()])?;
    let (matrix, shifts) = module_syzygies(&m, &[0], &degs, order, budget)?;
    Ok(SyzygyMatrix { matrix, shifts })
}

/// Syzygies among the columns of `m`, whose rows sit in degrees
/// `row_degrees` and columns in degrees `col_degrees`. Entries must be
/// homogeneous of the matching degree under the standard grading. Returns a
/// matrix with one row per column of `m` and the degrees of its columns.
pub fn module_syzygies(
    m: &PolyMatrix,
    row_degrees: &[u32],
    col_degrees: &[u32],
    order: &MonomialOrder,
    budget: &dyn Budget,
) -> Result<(PolyMatrix, Vec<u32>)> {
    let ring = m.ring();
    let (r, k) = (m.rows(), m.cols());
    if row_degrees.len() != r || col_degrees.len() != k {
        return Err(Error::ShapeMismatch);
    }
    if order.nvars() != ring.nvars() {
        return Err(Error::InvalidArgument(String::from("order does not match the ring")));
    }
    let n = ring.nvars();
    if k == 0 {
        return Ok((PolyMatrix::zero(ring, 0, 0), Vec::new()));
    }
    let mut extra = Vec::with_capacity(r + k);
    let mut probe = (**ring).clone();
    for stem in ["e", "u"] {
        let count = if stem == "e" { r } else { k };
        for _ in 0..count {
            let name = probe.fresh_name(stem);
            extra.push((name.clone(), VarBlock::E));
            probe = (*probe.extended(&[(name, VarBlock::E)])?).clone();
        }
    }
    let ext = ring.extended(&extra)?;
    let up: Vec<usize> = (0..n).collect();
    let mut gens = Vec::with_capacity(k);
    for j in 0..k {
        let mut g = Polynomial::var(&ext, n + r + j);
        for i in 0..r {
            let e = m.get(i, j);
            if !e.is_zero() {
                if !same_ring(e.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                g = &g + &(&e.map_vars(&ext, &up) * &Polynomial::var(&ext, n + i));
            }
        }
        gens.push(g);
    }
    let e_block: Vec<usize> = (n..n + r).collect();
    let u_block: Vec<usize> = (n + r..n + r + k).collect();
    let mut priority: Vec<usize> = e_block.clone();
    priority.extend(&u_block);
    priority.extend(order.priority());
    let mut blocks = alloc::vec![e_block.clone(), u_block.clone()];
    match order.blocks() {
        Some(bs) => blocks.extend(bs.iter().cloned()),
        None => blocks.push(order.priority().to_vec()),
    }
    let big = MonomialOrder::with_blocks(order.kind(), priority, blocks)?;
    let mut grading = alloc::vec![1u32; n];
    grading.extend_from_slice(row_degrees);
    grading.extend_from_slice(col_degrees);
    let mut module_vars = e_block.clone();
    module_vars.extend(&u_block);
    let ctx = Ctx::new(&big, Some(&grading)).with_module(module_vars);
    let gb = GroebnerBasis::run(&ext, &gens, &big, ctx, budget)?;

    let mut cols: Vec<Vec<Polynomial>> = Vec::new();
    let mut shifts = Vec::new();
    let mut down: Vec<usize> = (0..n).collect();
    down.extend(core::iter::repeat(0).take(r + k));
    for p in gb.polys() {
        if e_block.iter().any(|&v| p.degree_in(&[v]) > 0) {
            continue;
        }
        let mut col = alloc::vec![Polynomial::zero(ring); k];
        let mut shift = None;
        for (c, mono) in p.terms() {
            let j = u_block.iter().position(|&v| mono.exp(v) > 0).expect("module element");
            let mut e = mono.exps().to_vec();
            e[n + r + j] -= 1;
            let t = Polynomial::monomial(&ext, c.clone(), crate::polyring::Monomial::new(&ext, e));
            let t = t.map_vars(ring, &down);
            shift.get_or_insert(t.total_degree().unwrap_or(0) + col_degrees[j]);
            col[j] = &col[j] + &t;
        }
        cols.push(col);
        shifts.push(shift.unwrap_or(0));
    }
    let c = cols.len();
    let mat = PolyMatrix::from_fn(ring, k, c, |i, j| cols[j][i].clone());
    Ok((mat, shifts))
}

/// Positions of a minimal generating set among the columns of `m`, chosen
/// greedily by increasing column degree (graded Nakayama). Rows sit in
/// degrees `row_degrees`, columns in `col_degrees`.
pub fn minimal_columns(
    m: &PolyMatrix,
    row_degrees: &[u32],
    col_degrees: &[u32],
    order: &MonomialOrder,
    budget: &dyn Budget,
) -> Result<Vec<usize>> {
    let ring = m.ring();
    let (r, k) = (m.rows(), m.cols());
    if row_degrees.len() != r || col_degrees.len() != k {
        return Err(Error::ShapeMismatch);
    }
    let n = ring.nvars();
    let mut extra = Vec::with_capacity(r);
    let mut probe = (**ring).clone();
    for _ in 0..r {
        let name = probe.fresh_name("u");
        extra.push((name.clone(), VarBlock::E));
        probe = (*probe.extended(&[(name, VarBlock::E)])?).clone();
    }
    let ext = ring.extended(&extra)?;
    let up: Vec<usize> = (0..n).collect();
    let encode = |j: usize| {
        let mut g = Polynomial::zero(&ext);
        for i in 0..r {
            let e = m.get(i, j);
            if !e.is_zero() {
                g = &g + &(&e.map_vars(&ext, &up) * &Polynomial::var(&ext, n + i));
            }
        }
        g
    };
    let u_block: Vec<usize> = (n..n + r).collect();
    let mut priority = u_block.clone();
    priority.extend(order.priority());
    let mut blocks = alloc::vec![u_block.clone()];
    match order.blocks() {
        Some(bs) => blocks.extend(bs.iter().cloned()),
        None => blocks.push(order.priority().to_vec()),
    }
    let big = MonomialOrder::with_blocks(order.kind(), priority, blocks)?;
    let mut grading = alloc::vec![1u32; n];
    grading.extend_from_slice(row_degrees);

    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by_key(|&j| col_degrees[j]);
    let mut kept: Vec<usize> = Vec::new();
    let mut kept_polys: Vec<Polynomial> = Vec::new();
    let mut s = 0;
    while s < idx.len() {
        let deg = col_degrees[idx[s]];
        let end = s + idx[s..].iter().take_while(|&&j| col_degrees[j] == deg).count();
        let gb = if kept_polys.is_empty() {
            None
        } else {
            let ctx = Ctx::new(&big, Some(&grading)).with_module(u_block.clone());
            Some(GroebnerBasis::run(&ext, &kept_polys, &big, ctx, budget)?)
        };
        let mut span = super::Echelon::new();
        for &j in &idx[s..end] {
            let v = encode(j);
            if v.is_zero() {
                continue;
            }
            let nf = match &gb {
                Some(gb) => gb.normal_form(&v)?,
                None => v.clone(),
            };
            if span.insert(&nf) {
                kept.push(j);
                kept_polys.push(v);
            }
        }
        s = end;
    }
    kept.sort_unstable();
    Ok(kept)
}
