//! The `(1,1)`-diagonal subalgebra of a bigraded presentation `S/J`,
//! presented over `K[T]`, `T = (t_ij)` with `t_ij ↦ x_i·y_j`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::combinat::{combinations, multisets};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, IdealHandle};
use crate::polyring::{t_name, Bidegree, Monomial, Polynomial, Ring, RingDescriptor, VarBlock};
use crate::rees::ReesPresentation;

/// Where one extra generator came from: source generator `source` times
/// the padding monomial `multiplier` (in `S`). Repeats of the same image are
/// recorded on the first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraProvenance {
    pub sources: Vec<(usize, String)>,
}

#[derive(Debug, Clone)]
pub struct DiagonalPresentation {
    source_ring: Ring,
    t_ring: Ring,
    x_vars: Vec<usize>,
    y_vars: Vec<usize>,
    segre_gens: Vec<Polynomial>,
    extra_gens: Vec<Polynomial>,
    provenance: Vec<ExtraProvenance>,
}

impl DiagonalPresentation {
    pub fn t_ring(&self) -> &Ring {
        &self.t_ring
    }

    pub fn source_ring(&self) -> &Ring {
        &self.source_ring
    }

    /// Grid shape `(#X, #Y)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.x_vars.len(), self.y_vars.len())
    }

    pub fn segre_gens(&self) -> &[Polynomial] {
        &self.segre_gens
    }

    pub fn extra_gens(&self) -> &[Polynomial] {
        &self.extra_gens
    }

    pub fn provenance(&self) -> &[ExtraProvenance] {
        &self.provenance
    }

    /// `I_2(T)` plus the extra generators.
    pub fn ideal(&self) -> Result<IdealHandle> {
        let mut g = self.segre_gens.clone();
        g.extend_from_slice(&self.extra_gens);
        IdealHandle::new(&self.t_ring, g)
    }

    /// Image in `S` under `t_ij ↦ x_i·y_j`.
    pub fn back_substitute(&self, p: &Polynomial) -> Result<Polynomial> {
        let (nx, ny) = self.shape();
        let images: Vec<Polynomial> = (0..nx * ny)
            .map(|k| {
                let x = Polynomial::var(&self.source_ring, self.x_vars[k / ny]);
                let y = Polynomial::var(&self.source_ring, self.y_vars[k % ny]);
                &x * &y
            })
            .collect();
        p.substitute(&self.source_ring, &images)
    }

    /// Every generator maps into `j` under `t_ij ↦ x_i·y_j`.
    pub fn back_substitution_check(&self, j: &IdealHandle, budget: &dyn Budget) -> Result<bool> {
        let mut all = self.segre_gens.clone();
        all.extend_from_slice(&self.extra_gens);
        let images = all.iter().map(|g| self.back_substitute(g)).collect::<Result<Vec<_>>>()?;
        j.contains_all(&images, budget)
    }
}

/// `K[T]` with `t{i}_{j}` in row-major order.
pub fn t_ring(nx: usize, ny: usize) -> Result<Ring> {
    let names: Vec<String> = (1..=nx).flat_map(|i| (1..=ny).map(move |j| t_name(i, j))).collect();
    let blocks = alloc::vec![VarBlock::X; names.len()];
    RingDescriptor::new(names, blocks)
}

/// The 2-minors `t_ij·t_kl − t_il·t_kj`, `i < k`, `j < l`.
pub fn segre_minors(t: &Ring, nx: usize, ny: usize) -> Vec<Polynomial> {
    let v = |i: usize, j: usize| Polynomial::var(t, i * ny + j);
    let mut out = Vec::new();
    for rows in combinations(nx, 2) {
        for cols in combinations(ny, 2) {
            let (i, k, j, l) = (rows[0], rows[1], cols[0], cols[1]);
            out.push(&(&v(i, j) * &v(k, l)) - &(&v(i, l) * &v(k, j)));
        }
    }
    out
}

/// Rewrites a form of bidegree `(c, c)` in `K[T]`, pairing the sorted
/// X-indices of each monomial with its sorted Y-indices.
fn linearize(p: &Polynomial, t: &Ring, x_vars: &[usize], y_vars: &[usize]) -> Polynomial {
    let ny = y_vars.len();
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| {
            let xs: Vec<usize> =
                x_vars.iter().enumerate().flat_map(|(i, &v)| core::iter::repeat(i).take(m.exp(v) as usize)).collect();
            let ys: Vec<usize> =
                y_vars.iter().enumerate().flat_map(|(j, &v)| core::iter::repeat(j).take(m.exp(v) as usize)).collect();
            let mut e = alloc::vec![0u32; t.nvars()];
            for (i, j) in xs.iter().zip(&ys) {
                e[i * ny + j] += 1;
            }
            (c.clone(), Monomial::new(t, e))
        })
        .collect();
    Polynomial::from_terms(t, terms)
}

fn monomials_of_degree(ring: &Ring, vars: &[usize], deg: usize) -> Vec<Monomial> {
    multisets(vars.len(), deg)
        .into_iter()
        .map(|ms| {
            let mut e = alloc::vec![0u32; ring.nvars()];
            for k in ms {
                e[vars[k]] += 1;
            }
            Monomial::new(ring, e)
        })
        .collect()
}

/// Segre presentation plus the linearized padded generators `g_i·m`, with
/// `m` running over monomials of bidegree `(c_i − a_i, c_i − b_i)` and
/// `c_i = max(a_i, b_i)`.
pub fn diagonal_presentation_11(r: &ReesPresentation) -> Result<DiagonalPresentation> {
    let s = r.ring().clone();
    let x_vars = s.x_vars();
    let y_vars = s.y_vars();
    if y_vars.iter().any(|&v| s.bidegree(v) != (0, 1)) {
        return Err(Error::InvalidBidegree(String::from("Y-block must sit in bidegree (0,1)")));
    }
    let (nx, ny) = (x_vars.len(), y_vars.len());
    let t = t_ring(nx, ny)?;
    let segre_gens = segre_minors(&t, nx, ny);
    let mut extra_gens: Vec<Polynomial> = Vec::new();
    let mut provenance: Vec<ExtraProvenance> = Vec::new();
    for (k, g) in r.defining_gens().iter().enumerate() {
        let (a, b) = match g.bidegree_of() {
            Bidegree::Of(a, b) => (a as usize, b as usize),
            Bidegree::Bottom => continue,
            Bidegree::NonHomogeneous => return Err(Error::NotBihomogeneous),
        };
        let c = a.max(b);
        for mx in monomials_of_degree(&s, &x_vars, c - a) {
            for my in monomials_of_degree(&s, &y_vars, c - b) {
                let m = mx.mul(&my);
                let padded = g.mul_term(&num_rational::BigRational::from_integer(1.into()), &m);
                let lin = linearize(&padded, &t, &x_vars, &y_vars);
                let tag = (k, crate::polyring::monomial_string(&s, &m));
                match extra_gens.iter().position(|e| e.is_associate(&lin)) {
                    Some(pos) => provenance[pos].sources.push(tag),
                    None => {
                        extra_gens.push(lin);
                        provenance.push(ExtraProvenance { sources: alloc::vec![tag] });
                    }
                }
            }
        }
    }
    Ok(DiagonalPresentation { source_ring: s, t_ring: t, x_vars, y_vars, segre_gens, extra_gens, provenance })
}

/// Result of [`diagonal_reduce`].
#[derive(Debug, Clone)]
pub struct ReducedDiagonal {
    pub ideal: IdealHandle,
    /// `(eliminated, replacement)` variable names.
    pub substitutions: Vec<(String, String)>,
    /// Differences whose two variables were already identified.
    pub cycles: Vec<String>,
}

/// Substitutes away variables identified by extra generators of the form
/// `t_a − t_b`, keeping the lexicographically first name of each class, and
/// returns the remaining generators (deduplicated) in the surviving ring.
pub fn diagonal_reduce(d: &DiagonalPresentation) -> Result<ReducedDiagonal> {
    let t = d.t_ring().clone();
    let n = t.nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut cycles = Vec::new();
    let mut rest: Vec<Polynomial> = d.segre_gens.clone();
    for g in &d.extra_gens {
        let pair = match g.terms() {
            [(c1, m1), (c2, m2)] if c1 == &-c2 && m1.totdeg() == 1 && m2.totdeg() == 1 => {
                Some((m1.support()[0], m2.support()[0]))
            }
            _ => None,
        };
        let Some((a, b)) = pair else {
            rest.push(g.clone());
            continue;
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            cycles.push(g.to_string());
            continue;
        }
        let (keep, drop) = if t.name(ra) <= t.name(rb) { (ra, rb) } else { (rb, ra) };
        parent[drop] = keep;
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let surviving: Vec<usize> = (0..n).filter(|&v| roots[v] == v).collect();
    let sub = t.restricted(&surviving)?;
    let map: Vec<usize> = roots.iter().map(|r| surviving.iter().position(|s| s == r).unwrap()).collect();
    let substitutions =
        (0..n).filter(|&v| roots[v] != v).map(|v| (t.name(v).to_string(), t.name(roots[v]).to_string())).collect();
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in rest {
        let h = g.map_vars(&sub, &map).normalized();
        if !h.is_zero() && !gens.iter().any(|q| q.is_associate(&h)) {
            gens.push(h);
        }
    }
    Ok(ReducedDiagonal { ideal: IdealHandle::new(&sub, gens)?, substitutions, cycles })
}

/// Relations among the `x_i·f_j` with `f_j` the base generators: the kernel
/// of `K[T] → K[X, s]`, `t_ij ↦ x_i·f_j·s`, by elimination.
pub fn diagonal_kernel_oracle(r: &ReesPresentation, budget: &dyn Budget) -> Result<IdealHandle> {
    let base = r.base_ring().clone();
    let nb = base.nvars();
    let (nx, ny) = (nb, r.base_gens().len());
    let t = t_ring(nx, ny)?;
    let mut extra: Vec<(String, VarBlock)> = (0..nb).map(|i| (base.name(i).to_string(), VarBlock::E)).collect();
    extra.push((t.fresh_name("s"), VarBlock::E));
    let big = t.extended(&extra)?;
    let nt = t.nvars();
    let sv = Polynomial::var(&big, nt + nb);
    let up: Vec<usize> = (nt..nt + nb).collect();
    let mut gens = Vec::with_capacity(nt);
    for i in 0..nx {
        for (j, f) in r.base_gens().iter().enumerate() {
            let img = &(&Polynomial::var(&big, nt + i) * &f.map_vars(&big, &up)) * &sv;
            gens.push(&Polynomial::var(&big, i * ny + j) - &img);
        }
    }
    let all = IdealHandle::new(&big, gens)?;
    let drop: Vec<usize> = (nt..nt + nb + 1).collect();
    let contracted = eliminate(&all, &drop, budget)?;
    let same: Vec<Polynomial> = contracted.gens().iter().map(|g| g.map_by_name(&t)).collect::<Result<_>>()?;
    IdealHandle::new(&t, same)
}

/// Outcome of [`diagonal_dimension_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionCheck {
    pub dimension: usize,
    pub expected: usize,
}

impl DimensionCheck {
    pub fn holds(&self) -> bool {
        self.dimension == self.expected
    }
}

/// Krull dimension of the diagonal `⊕_s (I^s)_{s(d+1)}`, which in the
/// standard bigrading of `S/J` is the `(1,1)`-diagonal.
pub fn diagonal_dimension_check(
    r: &ReesPresentation,
    expected: usize,
    budget: &dyn Budget,
) -> Result<DimensionCheck> {
    let d = diagonal_presentation_11(r)?;
    let (dimension, _) = d.ideal()?.dimension(budget)?;
    Ok(DimensionCheck { dimension, expected })
}

/// Census of extra generators by how many padded products produced them.
pub fn multiplicities(d: &DiagonalPresentation) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for p in &d.provenance {
        *m.entry(p.sources.len()).or_insert(0) += 1;
    }
    m
}
