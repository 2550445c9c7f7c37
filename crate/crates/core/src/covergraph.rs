//! The bipartite graph on the superdiagonal positions of a tridiagonal
//! matrix, its minimal vertex covers and its cover ideal.
//!
//! Vertex `i` stands for the label `(i, i+1)`; odd `i` sit on the left,
//! even `i` on the right.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::polyring::{ring_make, x_name, Polynomial, Ring};

/// Enumeration refuses graphs with more vertices than this.
pub const MAX_COVER_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    /// Labels `(i, i+1)` are `1 ≤ i ≤ n−1`.
    n: usize,
    /// Each edge as `(left, right)`.
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    /// Validates labels, sides and duplicates.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v >= n {
                    return Err(Error::IndexOutOfRange(v, n));
                }
            }
            let e = match (a % 2, b % 2) {
                (1, 0) => (a, b),
                (0, 1) => (b, a),
                _ => return Err(Error::InvalidArgument(format!("edge {} -- {} joins one side", label(a), label(b)))),
            };
            if !set.insert(e) {
                return Err(Error::InvalidArgument(format!("duplicate edge {} -- {}", label(a), label(b))));
            }
        }
        Ok(LabeledGraph { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Vec<usize> {
        (1..self.n).collect()
    }

    pub fn left(&self) -> Vec<usize> {
        (1..self.n).step_by(2).collect()
    }

    pub fn right(&self) -> Vec<usize> {
        (2..self.n).step_by(2).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn is_cover(&self, c: &[usize]) -> bool {
        self.edges.iter().all(|(a, b)| c.contains(a) || c.contains(b))
    }

    pub fn is_minimal_cover(&self, c: &[usize]) -> bool {
        self.is_cover(c)
            && c.iter().all(|&v| {
                let rest: Vec<usize> = c.iter().copied().filter(|&w| w != v).collect();
                !self.is_cover(&rest)
            })
    }
}

/// `"(i i+1)"`.
pub fn label(i: usize) -> String {
    format!("({} {})", i, i + 1)
}

/// The graph for odd `n = 2r+1`: left vertex `(2k−1, 2k)` is joined to right
/// vertex `(2l, 2l+1)` exactly when `l ≥ k`.
pub fn build_g(n: usize) -> Result<LabeledGraph> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    if n < 3 {
        return Err(Error::InvalidArgument(String::from("order must be at least 3")));
    }
    let r = (n - 1) / 2;
    let mut edges = Vec::new();
    for k in 1..=r {
        for l in k..=r {
            edges.push((2 * k - 1, 2 * l));
        }
    }
    LabeledGraph::new(n, &edges)
}

/// All inclusion-minimal vertex covers, each sorted, listed in increasing
/// lexicographic order.
pub fn minimal_vertex_covers(g: &LabeledGraph) -> Result<Vec<Vec<usize>>> {
    let nv = g.n.saturating_sub(1);
    if nv > MAX_COVER_VERTICES {
        return Err(Error::GraphTooLarge(nv));
    }
    let edges: Vec<(u32, u32)> = g.edges.iter().map(|&(a, b)| (1u32 << (a - 1), 1u32 << (b - 1))).collect();
    let mut found = BTreeSet::new();
    branch(&edges, 0, &mut found);
    let mut out: Vec<Vec<usize>> =
        found.into_iter().map(|mask: u32| (0..nv).filter(|&v| mask & (1 << v) != 0).map(|v| v + 1).collect()).collect();
    out.sort();
    Ok(out)
}

fn branch(edges: &[(u32, u32)], chosen: u32, found: &mut BTreeSet<u32>) {
    match edges.iter().find(|&&(a, b)| chosen & (a | b) == 0) {
        Some(&(a, b)) => {
            branch(edges, chosen | a, found);
            branch(edges, chosen | b, found);
        }
        None => {
            let minimal = (0..32).map(|v| 1u32 << v).filter(|v| chosen & v != 0).all(|v| {
                edges.iter().any(|&(a, b)| (a == v && chosen & b == 0) || (b == v && chosen & a == 0))
            });
            if minimal {
                found.insert(chosen);
            }
        }
    }
}

/// Sorted cardinalities of the covers.
pub fn cover_sizes(covers: &[Vec<usize>]) -> Vec<usize> {
    let mut s: Vec<usize> = covers.iter().map(|c| c.len()).collect();
    s.sort_unstable();
    s
}

pub fn is_unmixed(covers: &[Vec<usize>]) -> bool {
    covers.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Ring `K[x_{1,2}, …, x_{n−1,n}]`.
pub fn label_ring(n: usize) -> Result<Ring> {
    let names: Vec<String> = (1..n).map(|i| x_name(i, i + 1)).collect();
    ring_make(&names, names.len(), 0, 0)
}

/// `⟨∏_{v∈C} x_v : C a minimal cover⟩`.
pub fn cover_ideal(g: &LabeledGraph) -> Result<IdealHandle> {
    let ring = label_ring(g.n)?;
    let gens = minimal_vertex_covers(g)?
        .iter()
        .map(|c| c.iter().fold(Polynomial::one(&ring), |p, &v| &p * &Polynomial::var(&ring, v - 1)))
        .collect();
    IdealHandle::new(&ring, gens)
}
