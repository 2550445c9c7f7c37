use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::matrix::{PolyMatrix, SkewMatrix};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Ring};

/// Determinant by fraction-free (Bareiss) elimination.
///
/// When a pivot vanishes the trailing block is finished by cofactor
/// expansion and the result is rescaled through Sylvester's identity
/// `det(trailing) = p^(m-1) det(M)`, where `p` is the last pivot used and `m`
/// the trailing size.
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let ring = m.ring();
    if n == 0 {
        return Ok(Polynomial::one(ring));
    }
    let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut prev = Polynomial::one(ring);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let block: Vec<Vec<Polynomial>> = a[k..].iter().map(|r| r[k..].to_vec()).collect();
            let d = cofactor_rows(ring, &block);
            let scale = prev.pow((n - k - 1) as u32);
            return d.div_exact(&scale);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].clone())
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available.
pub fn determinant_cofactor(m: &PolyMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let rows: Vec<Vec<Polynomial>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    Ok(cofactor_rows(m.ring(), &rows))
}

fn cofactor_rows(ring: &Ring, a: &[Vec<Polynomial>]) -> Polynomial {
    let n = a.len();
    assert!(n <= 63, "cofactor expansion is limited to 63 columns");
    let mut memo = BTreeMap::new();
    cofactor(ring, a, (1u64 << n) - 1, &mut memo)
}

fn cofactor(ring: &Ring, a: &[Vec<Polynomial>], cols: u64, memo: &mut BTreeMap<u64, Polynomial>) -> Polynomial {
    if cols == 0 {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let row = a.len() - cols.count_ones() as usize;
    let mut acc = Polynomial::zero(ring);
    let mut pos = 0;
    for j in 0..a.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let e = &a[row][j];
        if !e.is_zero() {
            let sub = cofactor(ring, a, cols & !(1 << j), memo);
            if !sub.is_zero() {
                let t = e * &sub;
                acc = if pos % 2 == 0 { &acc + &t } else { &acc - &t };
            }
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Pfaffian by expansion along the first row:
/// `Pf(M) = sum_{j>=2} (-1)^j M[1][j] Pf(M without rows/cols 1, j)`,
/// `Pf(empty) = 1`, and zero for odd order.
pub fn pfaffian(m: &SkewMatrix) -> Polynomial {
    let n = m.order();
    let ring = m.ring();
    if n % 2 == 1 {
        return Polynomial::zero(ring);
    }
    assert!(n <= 63, "Pfaffian expansion is limited to order 63");
    let mut memo = BTreeMap::new();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    pf_rec(m, full, &mut memo)
}

fn pf_rec(m: &SkewMatrix, set: u64, memo: &mut BTreeMap<u64, Polynomial>) -> Polynomial {
    let ring = m.ring();
    if set == 0 {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1 << i);
    let mut acc = Polynomial::zero(ring);
    let mut q = 1;
    for j in 0..m.order() {
        if rest & (1 << j) == 0 {
            continue;
        }
        q += 1;
        let e = m.entry(i, j);
        if e.is_zero() {
            continue;
        }
        let sub = pf_rec(m, rest & !(1 << j), memo);
        if sub.is_zero() {
            continue;
        }
        let t = e * &sub;
        acc = if q % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    memo.insert(set, acc.clone());
    acc
}

/// All `t`-minors of the submatrix on `rows` x `cols` (all rows/columns when
/// `None`), ordered lexicographically by (row subset, column subset).
pub fn minors(m: &PolyMatrix, t: usize, rows: Option<&[usize]>, cols: Option<&[usize]>) -> Result<Vec<Polynomial>> {
    let all_r: Vec<usize> = (0..m.rows()).collect();
    let all_c: Vec<usize> = (0..m.cols()).collect();
    let rs = rows.unwrap_or(&all_r);
    let cs = cols.unwrap_or(&all_c);
    if rs.iter().any(|&r| r >= m.rows()) || cs.iter().any(|&c| c >= m.cols()) {
        return Err(Error::ShapeMismatch);
    }
    if t == 0 || t > rs.len().min(cs.len()) {
        return Err(Error::MinorSizeOutOfRange { t, rows: rs.len(), cols: cs.len() });
    }
    let mut out = Vec::new();
    for ri in crate::combinat::combinations(rs.len(), t) {
        let rsel: Vec<usize> = ri.iter().map(|&i| rs[i]).collect();
        for ci in crate::combinat::combinations(cs.len(), t) {
            let csel: Vec<usize> = ci.iter().map(|&i| cs[i]).collect();
            out.push(determinant(&m.submatrix(&rsel, &csel))?);
        }
    }
    Ok(out)
}
