use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{same_ring, Polynomial, Ring};

/// Dense matrix of polynomials over one ring, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch);
        }
        if entries.iter().any(|p| !same_ring(p.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: alloc::vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    /// Builds a matrix from a function of the (0-based) position.
    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::ShapeMismatch);
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch);
        }
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Same matrix with every entry moved into `target` by variable name.
    pub fn map_by_name(&self, target: &Ring) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(|p| p.map_by_name(target)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { ring: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// True when no entry has a nonzero constant term.
    pub fn has_no_units(&self) -> bool {
        self.entries.iter().all(|p| p.constant_term().is_zero())
    }

    pub(crate) fn remove_row(&mut self, r: usize) {
        let c = self.cols;
        self.entries.drain(r * c..(r + 1) * c);
        self.rows -= 1;
    }

    pub(crate) fn remove_col(&mut self, col: usize) {
        let c = self.cols;
        let mut k = 0;
        self.entries.retain(|_| {
            let keep = k % c != col;
            k += 1;
            keep
        });
        self.cols -= 1;
    }
}

/// Square polynomial matrix with `M[j][i] = -M[i][j]` and zero diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewMatrix {
    m: PolyMatrix,
}

impl SkewMatrix {
    pub fn new(m: PolyMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
        }
        let n = m.rows;
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(Error::NotSkew(i, i));
            }
            for j in i + 1..n {
                if *m.get(j, i) != -m.get(i, j) {
                    return Err(Error::NotSkew(i, j));
                }
            }
        }
        Ok(SkewMatrix { m })
    }

    /// Fills the strict upper triangle from `f(i, j)` (0-based, `i < j`).
    pub fn from_upper(ring: &Ring, n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            for j in i + 1..n {
                let p = f(i, j);
                m.set(j, i, -&p);
                m.set(i, j, p);
            }
        }
        SkewMatrix { m }
    }

    pub fn order(&self) -> usize {
        self.m.rows
    }

    pub fn ring(&self) -> &Ring {
        self.m.ring()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        self.m.get(i, j)
    }

    pub fn as_matrix(&self) -> &PolyMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.m
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn principal(&self, idx: &[usize]) -> SkewMatrix {
        SkewMatrix { m: self.m.submatrix(idx, idx) }
    }

    /// Principal submatrix with row and column `l` removed.
    pub fn delete(&self, l: usize) -> SkewMatrix {
        let idx: Vec<usize> = (0..self.order()).filter(|&i| i != l).collect();
        self.principal(&idx)
    }

    pub fn map_by_name(&self, target: &Ring) -> Result<SkewMatrix> {
        Ok(SkewMatrix { m: self.m.map_by_name(target)? })
    }
}
