//! Buchberger's algorithm on primitive integer polynomials.
//!
//! Monomials are stored as one boxed slice: the weight-row key of the order
//! followed by the exponent row. Keys are linear in exponents, so products
//! and quotients are plain slice additions, and comparing two monomials is a
//! slice comparison of their key parts.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::One;

use crate::budget::Budget;
use crate::coeff::{clear_denominators, Int};
use crate::error::{BudgetExceeded, Error};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mon {
    d: Box<[i32]>,
    mask: u64,
}

pub(crate) type Term = (Int, Mon);

/// Order and grading data shared by every monomial of one computation.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    nkeys: usize,
    rows: Vec<Vec<(usize, i32)>>,
    grading: Vec<u32>,
    module: Vec<usize>,
}

impl Ctx {
    pub fn new(order: &MonomialOrder, grading: Option<&[u32]>) -> Self {
        let rows = order.rows().to_vec();
        let nvars = order.nvars();
        let grading = match grading {
            Some(g) => g.to_vec(),
            None => alloc::vec![1; nvars],
        };
        Ctx { nkeys: rows.len(), rows, grading, module: Vec::new() }
    }

    /// Treats polynomials as module elements: each is linear in the
    /// variables `vars`, and S-pairs are formed only between elements whose
    /// leading terms carry the same one of them.
    pub fn with_module(mut self, vars: Vec<usize>) -> Self {
        self.module = vars;
        self
    }

    fn component(&self, m: &Mon) -> Option<usize> {
        let e = self.exps(m);
        self.module.iter().copied().find(|&v| e[v] > 0)
    }

    pub fn mon(&self, exps: &[u32]) -> Mon {
        let mut d = Vec::with_capacity(self.nkeys + exps.len());
        for r in &self.rows {
            d.push(r.iter().map(|&(v, w)| w * exps[v] as i32).sum());
        }
        let mut mask = 0u64;
        for (v, &e) in exps.iter().enumerate() {
            d.push(e as i32);
            if e > 0 {
                mask |= 1 << (v % 64);
            }
        }
        Mon { d: d.into_boxed_slice(), mask }
    }

    pub fn exps<'a>(&self, m: &'a Mon) -> &'a [i32] {
        &m.d[self.nkeys..]
    }

    pub fn cmp(&self, a: &Mon, b: &Mon) -> Ordering {
        a.d[..self.nkeys].cmp(&b.d[..self.nkeys])
    }

    pub fn divides(&self, a: &Mon, b: &Mon) -> bool {
        if a.mask & !b.mask != 0 {
            return false;
        }
        self.exps(a).iter().zip(self.exps(b)).all(|(x, y)| x <= y)
    }

    pub fn mul(&self, a: &Mon, b: &Mon) -> Mon {
        let d: Box<[i32]> = a.d.iter().zip(b.d.iter()).map(|(x, y)| x + y).collect();
        Mon { d, mask: a.mask | b.mask }
    }

    /// `a / b`; the caller guarantees divisibility.
    pub fn div(&self, a: &Mon, b: &Mon) -> Mon {
        let d: Box<[i32]> = a.d.iter().zip(b.d.iter()).map(|(x, y)| x - y).collect();
        let mut mask = 0u64;
        for (v, &e) in d[self.nkeys..].iter().enumerate() {
            if e > 0 {
                mask |= 1 << (v % 64);
            }
        }
        Mon { d, mask }
    }

    pub fn lcm(&self, a: &Mon, b: &Mon) -> Mon {
        let e: Vec<u32> = self.exps(a).iter().zip(self.exps(b)).map(|(x, y)| *x.max(y) as u32).collect();
        self.mon(&e)
    }

    pub fn coprime(&self, a: &Mon, b: &Mon) -> bool {
        if a.mask & b.mask == 0 {
            return true;
        }
        self.exps(a).iter().zip(self.exps(b)).all(|(x, y)| *x == 0 || *y == 0)
    }

    pub fn degree(&self, m: &Mon) -> u32 {
        self.exps(m).iter().zip(&self.grading).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn poly_degree(&self, p: &[Term]) -> u32 {
        p.iter().map(|t| self.degree(&t.1)).max().unwrap_or(0)
    }

    pub fn to_monomial(&self, ring: &Ring, m: &Mon) -> Monomial {
        Monomial::new(ring, self.exps(m).iter().map(|&e| e as u32).collect())
    }

    /// Primitive integer form of a rational polynomial, sorted under the
    /// order, with a positive leading coefficient.
    pub fn import(&self, p: &Polynomial) -> Vec<Term> {
        if p.is_zero() {
            return Vec::new();
        }
        let rats: Vec<BigRational> = p.terms().iter().map(|t| t.0.clone()).collect();
        let (ints, _) = clear_denominators(&rats);
        let mut out: Vec<Term> =
            ints.into_iter().zip(p.terms()).map(|(c, (_, m))| (c, self.mon(m.exps()))).collect();
        out.sort_by(|a, b| self.cmp(&b.1, &a.1));
        if out[0].0.is_negative() {
            for t in out.iter_mut() {
                t.0 = t.0.neg();
            }
        }
        out
    }

    /// Rational polynomial `p / scale`, made monic when `monic` is set.
    pub fn export(&self, ring: &Ring, p: &[Term], scale: &Int, monic: bool) -> Polynomial {
        let denom = if monic && !p.is_empty() { p[0].0.clone() } else { scale.clone() };
        let d = denom.to_bigint();
        let terms = p
            .iter()
            .map(|(c, m)| (BigRational::new(c.to_bigint(), d.clone()), self.to_monomial(ring, m)))
            .collect();
        Polynomial::from_terms(ring, terms)
    }
}

/// `a*f - b*m*g`, both inputs sorted descending.
fn axpy(ctx: &Ctx, a: &Int, f: &[Term], b: &Int, m: &Mon, g: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let scale = |c: &Int| if a.is_one() { c.clone() } else { c.mul(a) };
    let mut gm: Option<Mon> = g.first().map(|t| ctx.mul(&t.1, m));
    while i < f.len() {
        let Some(cur) = gm.as_ref() else { break };
        match ctx.cmp(&f[i].1, cur) {
            Ordering::Greater => {
                out.push((scale(&f[i].0), f[i].1.clone()));
                i += 1;
            }
            Ordering::Less => {
                out.push((g[j].0.mul(b).neg(), gm.take().unwrap()));
                j += 1;
                gm = g.get(j).map(|t| ctx.mul(&t.1, m));
            }
            Ordering::Equal => {
                let c = f[i].0.mul_sub(a, &g[j].0, b);
                if !c.is_zero() {
                    out.push((c, gm.take().unwrap()));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|t| ctx.mul(&t.1, m));
            }
        }
    }
    for t in &f[i..] {
        out.push((scale(&t.0), t.1.clone()));
    }
    if let Some(cur) = gm {
        out.push((g[j].0.mul(b).neg(), cur));
        for t in &g[j + 1..] {
            out.push((t.0.mul(b).neg(), ctx.mul(&t.1, m)));
        }
    }
    out
}

pub(crate) fn make_primitive(p: &mut [Term]) {
    let mut g = Int::zero();
    for t in p.iter() {
        g = g.gcd(&t.0);
        if g.is_one() {
            break;
        }
    }
    let neg = p.first().map(|t| t.0.is_negative()).unwrap_or(false);
    if g.is_zero() || (g.is_one() && !neg) {
        return;
    }
    let g = if neg { g.neg() } else { g };
    for t in p.iter_mut() {
        t.0 = t.0.div_exact(&g);
    }
}


/// Stop signal from an exhausted budget, with the state reached so far.
#[derive(Debug)]
pub(crate) struct Interrupted {
    pub partial: Vec<Vec<Term>>,
    pub pending: usize,
}

/// A set of reducers with a divisor lookup.
pub(crate) trait Reducers {
    fn find(&self, ctx: &Ctx, m: &Mon) -> Option<&[Term]>;
}

impl Reducers for [Vec<Term>] {
    fn find(&self, ctx: &Ctx, m: &Mon) -> Option<&[Term]> {
        self.iter().find(|g| ctx.divides(&g[0].1, m)).map(|g| g.as_slice())
    }
}

/// Reduces `f` by `basis`. With `full` unset only the leading term is
/// reduced. Returns the remainder `r` and an integer `s` such that
/// `s*f - r` lies in the ideal of `basis`.
pub(crate) fn reduce<R: Reducers + ?Sized>(
    ctx: &Ctx,
    mut todo: Vec<Term>,
    basis: &R,
    full: bool,
    budget: &dyn Budget,
) -> core::result::Result<(Vec<Term>, Int), Interrupted> {
    let mut rem: Vec<Term> = Vec::new();
    let mut scale = Int::one();
    let mut p = 0;
    let mut steps = 0u32;
    while p < todo.len() {
        let Some(g) = basis.find(ctx, &todo[p].1) else {
            if !full {
                break;
            }
            p += 1;
            continue;
        };
        steps += 1;
        if steps % 64 == 0 && budget.exhausted() {
            return Err(Interrupted { partial: Vec::new(), pending: 0 });
        }
        let (c, m) = (&todo[p].0, &todo[p].1);
        let q = ctx.div(m, &g[0].1);
        let lc = &g[0].0;
        let gg = c.gcd(lc);
        let mut a = lc.div_exact(&gg);
        let mut b = c.div_exact(&gg);
        if a.is_negative() {
            a = a.neg();
            b = b.neg();
        }
        if !a.is_one() {
            for t in rem.iter_mut() {
                t.0 = t.0.mul(&a);
            }
            for t in todo[..p].iter_mut() {
                t.0 = t.0.mul(&a);
            }
            scale = scale.mul(&a);
        }
        rem.extend(todo.drain(..p));
        todo = axpy(ctx, &a, &todo[1..], &b, &q, &g[1..]);
        p = 0;
    }
    rem.extend(todo);
    Ok((rem, scale))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub basis_size: usize,
}

struct Elem {
    poly: Vec<Term>,
    sugar: u32,
}

enum Item {
    Input(Vec<Term>),
    Pair(usize, usize, Mon),
}

struct Live<'a> {
    elems: &'a [Elem],
    live: &'a [usize],
}

impl Reducers for Live<'_> {
    fn find(&self, ctx: &Ctx, m: &Mon) -> Option<&[Term]> {
        self.live
            .iter()
            .map(|&i| &self.elems[i])
            .find(|e| ctx.divides(&e.poly[0].1, m))
            .map(|e| e.poly.as_slice())
    }
}

/// Reduced Gröbner basis of primitive integer polynomials, sorted by
/// increasing leading monomial.
pub(crate) fn buchberger(
    ctx: &Ctx,
    gens: Vec<Vec<Term>>,
    budget: &dyn Budget,
) -> core::result::Result<(Vec<Vec<Term>>, GbStats), Interrupted> {
    let mut stats = GbStats::default();
    let mut elems: Vec<Elem> = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    let mut queue: BTreeMap<(u32, u64), Item> = BTreeMap::new();
    let mut next_id = 0u64;
    for g in gens.into_iter().filter(|g| !g.is_empty()) {
        let s = ctx.poly_degree(&g);
        queue.insert((s, next_id), Item::Input(g));
        next_id += 1;
    }
    let stop = |elems: &[Elem], live: &[usize], pending: usize| Interrupted {
        partial: live.iter().map(|&i| elems[i].poly.clone()).collect(),
        pending,
    };
    while let Some((&(sugar, id), _)) = queue.iter().next() {
        if budget.exhausted() {
            return Err(stop(&elems, &live, queue.len()));
        }
        let item = queue.remove(&(sugar, id)).unwrap();
        let spoly = match item {
            Item::Input(g) => g,
            Item::Pair(i, j, l) => {
                stats.pairs_considered += 1;
                let (a, b) = (&elems[i].poly, &elems[j].poly);
                let qa = ctx.div(&l, &a[0].1);
                let qb = ctx.div(&l, &b[0].1);
                let g = a[0].0.gcd(&b[0].0);
                let fa = b[0].0.div_exact(&g);
                let fb = a[0].0.div_exact(&g);
                let first: Vec<Term> = a[1..].iter().map(|(c, m)| (c.mul(&fa), ctx.mul(m, &qa))).collect();
                axpy(ctx, &Int::one(), &first, &fb, &qb, &b[1..])
            }
        };
        stats.pairs_reduced += 1;
        let reducers = Live { elems: &elems, live: &live };
        let (mut h, _) = match reduce(ctx, spoly, &reducers, true, budget) {
            Ok(r) => r,
            Err(_) => return Err(stop(&elems, &live, queue.len() + 1)),
        };
        if h.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        make_primitive(&mut h);
        let unit = ctx.exps(&h[0].1).iter().all(|&e| e == 0);
        let hi = elems.len();
        elems.push(Elem { poly: h, sugar });
        if unit {
            live.clear();
            live.push(hi);
            queue.clear();
            break;
        }
        update(ctx, &elems, &mut live, &mut queue, &mut next_id, hi);
    }
    let mut basis: Vec<Vec<Term>> = live.iter().map(|&i| elems[i].poly.clone()).collect();
    basis.sort_by(|a, b| ctx.cmp(&a[0].1, &b[0].1));
    let basis = interreduce(ctx, basis, budget).map_err(|_| Interrupted { partial: Vec::new(), pending: 0 })?;
    stats.basis_size = basis.len();
    Ok((basis, stats))
}

/// Gebauer–Möller update after inserting element `hi`.
fn update(
    ctx: &Ctx,
    elems: &[Elem],
    live: &mut Vec<usize>,
    queue: &mut BTreeMap<(u32, u64), Item>,
    next_id: &mut u64,
    hi: usize,
) {
    let th = &elems[hi].poly[0].1;
    let comp = ctx.component(th);
    let mut cands: Vec<(usize, Mon, bool)> = live
        .iter()
        .filter(|&&g| ctx.component(&elems[g].poly[0].1) == comp)
        .map(|&g| {
            let tg = &elems[g].poly[0].1;
            (g, ctx.lcm(tg, th), ctx.coprime(tg, th))
        })
        .collect();
    let mut kept: Vec<(usize, Mon, bool)> = Vec::new();
    while let Some((g, l, cop)) = cands.pop() {
        let dominated = !cop
            && (cands.iter().any(|(_, l2, _)| ctx.divides(l2, &l)) || kept.iter().any(|(_, l2, _)| ctx.divides(l2, &l)));
        if !dominated {
            kept.push((g, l, cop));
        }
    }
    let old: Vec<(u32, u64)> = queue
        .iter()
        .filter_map(|(k, item)| match item {
            Item::Pair(i, j, l) if ctx.divides(th, l) => {
                let li = ctx.lcm(&elems[*i].poly[0].1, th);
                let lj = ctx.lcm(&elems[*j].poly[0].1, th);
                (li != *l && lj != *l).then_some(*k)
            }
            _ => None,
        })
        .collect();
    for k in old {
        queue.remove(&k);
    }
    kept.sort_by_key(|k| k.0);
    for (g, l, cop) in kept {
        if cop {
            continue;
        }
        let qa = ctx.div(&l, &elems[g].poly[0].1);
        let qh = ctx.div(&l, th);
        let sugar = (elems[g].sugar + ctx.degree(&qa)).max(elems[hi].sugar + ctx.degree(&qh));
        queue.insert((sugar, *next_id), Item::Pair(g, hi, l));
        *next_id += 1;
    }
    live.retain(|&g| !ctx.divides(th, &elems[g].poly[0].1));
    live.push(hi);
}

/// Tail-reduces a minimal basis against itself.
pub(crate) fn interreduce(
    ctx: &Ctx,
    basis: Vec<Vec<Term>>,
    budget: &dyn Budget,
) -> core::result::Result<Vec<Vec<Term>>, Interrupted> {
    let mut out = basis;
    for i in 0..out.len() {
        let head = out[i][0].clone();
        let tail = out[i][1..].to_vec();
        let others: Vec<Vec<Term>> = out.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let (mut r, s) = reduce(ctx, tail, others.as_slice(), true, budget)?;
        let mut p = alloc::vec![(head.0.mul(&s), head.1)];
        p.append(&mut r);
        make_primitive(&mut p);
        out[i] = p;
    }
    Ok(out)
}

/// Integer form of `f` under `ctx`, with the factor `s` such that the
/// returned polynomial is `s*f`.
pub(crate) fn import_scaled(ctx: &Ctx, f: &Polynomial) -> (Vec<Term>, BigRational) {
    if f.is_zero() {
        return (Vec::new(), BigRational::one());
    }
    let rats: Vec<BigRational> = f.terms().iter().map(|t| t.0.clone()).collect();
    let (ints, scale) = clear_denominators(&rats);
    let mut p: Vec<Term> = ints.into_iter().zip(f.terms()).map(|(c, (_, m))| (c, ctx.mon(m.exps()))).collect();
    p.sort_by(|a, b| ctx.cmp(&b.1, &a.1));
    (p, scale)
}

/// Exact remainder of `f` on division by `basis`, as a rational polynomial.
pub(crate) fn normal_form(ctx: &Ctx, ring: &Ring, basis: &[Vec<Term>], f: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    let (p, scale) = import_scaled(ctx, f);
    let (r, s) = reduce(ctx, p, basis, true, &crate::budget::Unlimited).expect("unlimited budget");
    let total = BigRational::from_integer(s.to_bigint()) * scale;
    let terms = r
        .iter()
        .map(|(c, m)| (BigRational::from_integer(c.to_bigint()) / &total, ctx.to_monomial(ring, m)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

impl Interrupted {
    pub fn into_error(self, ctx: &Ctx, ring: &Ring) -> Error {
        Error::BudgetExceeded(BudgetExceeded {
            partial: self.partial.iter().map(|p| ctx.export(ring, p, &Int::one(), true)).collect(),
            pending_pairs: self.pending,
        })
    }
}
