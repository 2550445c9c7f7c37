//! Ideals of sub-Pfaffians.

use alloc::string::String;
use alloc::vec::Vec;

use crate::combinat::combinations;
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::matalg::{determinant, minors, pfaffian, skew_blockx4, skew_tridiagonal, SkewMatrix};
use crate::polyring::{x_name, Polynomial, Ring};

/// What happened to one principal sub-Pfaffian during construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PfStatus {
    /// Kept as generator number `k`.
    Kept(usize),
    Zero,
    /// Equal up to a scalar to generator number `k`.
    DuplicateOf(usize),
}

/// One principal submatrix considered: its (1-based, ascending) index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfProvenance {
    pub indices: Vec<usize>,
    pub status: PfStatus,
}

#[derive(Debug, Clone)]
pub struct PfaffianIdeal {
    source: SkewMatrix,
    t: usize,
    gens: Vec<Polynomial>,
    gen_indices: Vec<Vec<usize>>,
    provenance: Vec<PfProvenance>,
}

impl PfaffianIdeal {
    fn build(source: &SkewMatrix, t: usize, subsets: Vec<Vec<usize>>) -> Self {
        let mut gens: Vec<Polynomial> = Vec::new();
        let mut gen_indices = Vec::new();
        let mut provenance = Vec::new();
        for idx in subsets {
            let pf = pfaffian(&source.principal(&idx));
            let status = if pf.is_zero() {
                PfStatus::Zero
            } else if let Some(k) = gens.iter().position(|g| g.is_associate(&pf)) {
                PfStatus::DuplicateOf(k)
            } else {
                gens.push(pf);
                gen_indices.push(idx.iter().map(|i| i + 1).collect());
                PfStatus::Kept(gens.len() - 1)
            };
            provenance.push(PfProvenance { indices: idx.iter().map(|i| i + 1).collect(), status });
        }
        PfaffianIdeal { source: source.clone(), t, gens, gen_indices, provenance }
    }

    pub fn source(&self) -> &SkewMatrix {
        &self.source
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    /// Order of the sub-Pfaffians.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Index set (1-based) of the principal submatrix behind each generator.
    pub fn gen_indices(&self) -> &[Vec<usize>] {
        &self.gen_indices
    }

    /// Indices deleted to obtain each generator's submatrix.
    pub fn deleted_indices(&self) -> Vec<Vec<usize>> {
        let n = self.source.order();
        self.gen_indices.iter().map(|idx| (1..=n).filter(|i| !idx.contains(i)).collect()).collect()
    }

    pub fn provenance(&self) -> &[PfProvenance] {
        &self.provenance
    }

    pub fn ideal(&self) -> Result<IdealHandle> {
        IdealHandle::new(self.ring(), self.gens.clone())
    }

    /// Checks `g^2 = det` of the recorded submatrix for every generator.
    pub fn squares_match_determinants(&self) -> Result<bool> {
        for (g, idx) in self.gens.iter().zip(&self.gen_indices) {
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            let d = determinant(self.source.principal(&zero_based).as_matrix())?;
            if &(g * g) != &d {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The ideal of maximal sub-Pfaffians `Pf_l̄`, `l = 1..n`, of an odd-order
/// skew matrix, in order of the deleted index.
pub fn pf_ideal_maximal(x: &SkewMatrix) -> Result<PfaffianIdeal> {
    let n = x.order();
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    let subsets = (0..n).map(|l| (0..n).filter(|&i| i != l).collect()).collect();
    Ok(PfaffianIdeal::build(x, n - 1, subsets))
}

/// Pfaffians of all principal `t x t` submatrices, index sets in
/// lexicographic order.
pub fn pf_ideal_general(x: &SkewMatrix, t: usize) -> Result<PfaffianIdeal> {
    if t == 0 || t % 2 == 1 || t > x.order() {
        return Err(Error::BadPfaffianOrder(t));
    }
    Ok(PfaffianIdeal::build(x, t, combinations(x.order(), t)))
}

/// The monomials `p_1, p_3, ..., p_{2r+1}` generating the maximal Pfaffian
/// ideal of the tridiagonal matrix of order `2r+1`: `p_i` is the product of
/// `x_{j,j+1}` over odd `j < i` and even `j > i`.
pub fn tridiagonal_generators_closed_form(r: usize) -> Result<Vec<Polynomial>> {
    if r == 0 {
        return Err(Error::InvalidArgument(String::from("r must be at least 1")));
    }
    let n = 2 * r + 1;
    let x = skew_tridiagonal(n)?;
    let ring = x.ring().clone();
    let var = |j: usize| Polynomial::var_named(&ring, &x_name(j, j + 1)).expect("tridiagonal variable");
    let mut out = Vec::with_capacity(r + 1);
    for i in (1..=n).step_by(2) {
        let mut p = Polynomial::one(&ring);
        for j in 1..n {
            if (j < i && j % 2 == 1) || (j > i && j % 2 == 0) {
                p = &p * &var(j);
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Maximal minors of the `A` block of the block matrix of order `2r+1`,
/// ordered by the deleted row.
pub fn blockx4_generators(r: usize) -> Result<Vec<Polynomial>> {
    if r == 0 {
        return Err(Error::InvalidArgument(String::from("r must be at least 1")));
    }
    let x = skew_blockx4(r)?;
    let n = 2 * r + 1;
    let rows: Vec<usize> = (0..=r).collect();
    let cols: Vec<usize> = (r + 1..n).collect();
    let mut out = minors(x.as_matrix(), r, Some(&rows), Some(&cols))?;
    out.reverse();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Unlimited;
    use crate::groebner::ideal_equal;
    use crate::matalg::{skew_custom, skew_generic, skew_generic_any, skew_sparse7, SPARSE7_PATTERN};
    use crate::polyring::MonomialOrder;
    use alloc::string::ToString;

    fn texts(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn generic_three() {
        let pf = pf_ideal_maximal(&skew_generic(3).unwrap()).unwrap();
        assert_eq!(texts(pf.gens()), ["x2_3", "x1_3", "x1_2"]);
        assert_eq!(pf.deleted_indices(), [[1], [2], [3]]);
    }

    #[test]
    fn generic_five_quadrics() {
        let pf = pf_ideal_maximal(&skew_generic(5).unwrap()).unwrap();
        assert_eq!(pf.gens().len(), 5);
        assert_eq!(pf.gens()[4].to_string(), "x1_4*x2_3 - x1_3*x2_4 + x1_2*x3_4");
        for g in pf.gens() {
            assert!(g.is_homogeneous());
            assert_eq!(g.total_degree(), Some(2));
        }
        assert!(pf.squares_match_determinants().unwrap());
    }

    #[test]
    fn tridiagonal_five() {
        let pf = pf_ideal_maximal(&skew_tridiagonal(5).unwrap()).unwrap();
        assert_eq!(texts(pf.gens()), ["x2_3*x4_5", "x1_2*x4_5", "x1_2*x3_4"]);
        assert_eq!(pf.provenance().iter().filter(|p| p.status == PfStatus::Zero).count(), 2);
        let closed = tridiagonal_generators_closed_form(2).unwrap();
        assert_eq!(texts(&closed), ["x2_3*x4_5", "x1_2*x4_5", "x1_2*x3_4"]);
        assert_eq!(texts(&tridiagonal_generators_closed_form(1).unwrap()), ["x2_3", "x1_2"]);
    }

    #[test]
    fn closed_form_matches_recursion() {
        for r in 3..=5 {
            let pf = pf_ideal_maximal(&skew_tridiagonal(2 * r + 1).unwrap()).unwrap();
            let closed = tridiagonal_generators_closed_form(r).unwrap();
            assert_eq!(pf.gens().len(), r + 1);
            for (a, b) in pf.gens().iter().zip(&closed) {
                assert!(a.is_associate(b));
            }
        }
    }

    #[test]
    fn general_order_guards() {
        let x = skew_generic(5).unwrap();
        assert!(matches!(pf_ideal_general(&x, 3), Err(Error::BadPfaffianOrder(3))));
        assert!(pf_ideal_general(&x, 6).is_err());
        let g4 = pf_ideal_general(&skew_generic_any(4), 4).unwrap();
        assert_eq!(g4.gens().len(), 1);
        let empty = pf_ideal_general(&skew_custom(4, &[]).unwrap(), 2).unwrap();
        assert!(empty.gens().is_empty());
    }

    #[test]
    fn sparse_seven_matches_brute_force() {
        let x = skew_sparse7();
        let pf = pf_ideal_general(&x, 4).unwrap();
        assert_eq!(pf.provenance().len(), 35);
        // Independent count: expand each 4x4 Pfaffian as the three-term sum.
        let entry = |i: usize, j: usize| SPARSE7_PATTERN.contains(&(i, j));
        let mut nonzero: Vec<Vec<(usize, usize, usize, usize)>> = Vec::new();
        for s in combinations(7, 4) {
            let [a, b, c, d] = [s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1];
            let terms: Vec<_> = [(a, b, c, d), (a, c, b, d), (a, d, b, c)]
                .into_iter()
                .filter(|&(p, q, u, v)| entry(p, q) && entry(u, v))
                .collect();
            if !terms.is_empty() {
                nonzero.push(terms);
            }
        }
        nonzero.sort();
        nonzero.dedup();
        assert_eq!(pf.gens().len(), nonzero.len());
        assert!(pf.squares_match_determinants().unwrap());
    }

    #[test]
    fn blockx4_minors_are_the_pfaffians() {
        assert_eq!(texts(&blockx4_generators(1).unwrap()), ["x2_3", "x1_3"]);
        for r in 1..=3 {
            let mins = blockx4_generators(r).unwrap();
            assert_eq!(mins.len(), r + 1);
            let pf = pf_ideal_maximal(&skew_blockx4(r).unwrap()).unwrap();
            assert_eq!(pf.gens().len(), r + 1);
            for (a, b) in pf.gens().iter().zip(&mins) {
                assert!(a.is_associate(b));
            }
            let o = MonomialOrder::grevlex(pf.ring().nvars());
            let a = pf.ideal().unwrap();
            let b = IdealHandle::new(pf.ring(), mins).unwrap();
            assert!(ideal_equal(&a, &b, &o, &Unlimited).unwrap());
        }
    }
}
