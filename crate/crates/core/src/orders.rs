//! Pools of monomial orders searched by certificate-producing checks.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::polyring::{MonomialOrder, OrderKind};

/// Seed for randomly sampled variable orders.
pub const ORDER_SEED: u64 = 0xC0FFEE;

/// Default number of randomly sampled orders.
pub const ORDER_SAMPLE: usize = 50;

/// `named`, then grevlex and grlex under every cyclic shift of the declared
/// variable order, then `sample` random priorities (alternating grevlex and
/// grlex) drawn from a ChaCha stream seeded with `seed`. Duplicates are
/// removed, keeping the first occurrence.
pub fn order_pool(nvars: usize, named: &[MonomialOrder], sample: usize, seed: u64) -> Vec<MonomialOrder> {
    let mut out: Vec<MonomialOrder> = Vec::new();
    let push = |o: MonomialOrder, out: &mut Vec<MonomialOrder>| {
        if !out.contains(&o) {
            out.push(o);
        }
    };
    for o in named {
        push(o.clone(), &mut out);
    }
    for kind in [OrderKind::GRevLex, OrderKind::GrLex] {
        for s in 0..nvars.max(1) {
            let mut p: Vec<usize> = (0..nvars).collect();
            p.rotate_left(s);
            push(MonomialOrder::with_priority(kind, p).unwrap(), &mut out);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..sample {
        let mut p: Vec<usize> = (0..nvars).collect();
        p.shuffle(&mut rng);
        let kind = if k % 2 == 0 { OrderKind::GRevLex } else { OrderKind::GrLex };
        push(MonomialOrder::with_priority(kind, p).unwrap(), &mut out);
    }
    out
}
