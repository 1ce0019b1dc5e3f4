#![allow(dead_code)]

use hfseq::natseq::nat_to_hfseq;
use hfseq::system_t::{arrow, TType};
use hfseq::HFSeq;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 2011;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn rng_with(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// A random tree with at most `max_nodes` nodes, shape chosen uniformly per step.
pub fn random_tree(rng: &mut impl Rng, max_nodes: usize) -> HFSeq {
    let mut budget = rng.gen_range(0..max_nodes.max(1));
    grow(rng, &mut budget)
}

fn grow(rng: &mut impl Rng, budget: &mut usize) -> HFSeq {
    let mut kids = Vec::new();
    while *budget > 0 && rng.gen_bool(0.6) {
        *budget -= 1;
        kids.push(grow(rng, budget));
    }
    HFSeq::from_children(kids)
}

/// A value below `2^bits` with its bit width also drawn at random.
pub fn random_value(rng: &mut impl Rng, bits: u32) -> u64 {
    let width = rng.gen_range(0..=bits);
    if width == 0 {
        0
    } else if width == 64 {
        rng.gen()
    } else {
        rng.gen_range(0..1u64 << width)
    }
}

/// A random tree of at most `max_nodes` nodes whose value is below `2^64`.
pub fn random_small_tree(rng: &mut impl Rng, max_nodes: u64) -> HFSeq {
    loop {
        let t = if rng.gen_bool(0.5) {
            random_tree(rng, max_nodes as usize)
        } else {
            nat_to_hfseq(random_value(rng, 64))
        };
        if t.value_u64().is_some() && t.node_count().is_some_and(|n| n <= max_nodes) {
            return t;
        }
    }
}

/// A random binary type with exactly `leaves` leaves.
pub fn random_type(rng: &mut impl Rng, leaves: usize) -> TType {
    if leaves <= 1 {
        return TType::E;
    }
    let left = rng.gen_range(1..leaves);
    arrow(random_type(rng, left), random_type(rng, leaves - left))
}

/// Value of a tree computed straight from `[x | xs] = 2^x * (2 xs + 1)`.
pub fn big_value(t: &HFSeq) -> BigUint {
    let kids: Vec<HFSeq> = t.children().collect();
    kids.iter().rev().fold(BigUint::from(0u8), |acc, x| {
        let shift = u64::try_from(big_value(x)).expect("exponent fits in u64");
        ((acc << 1u8) + 1u8) << shift
    })
}

/// Inverse of [`big_value`], built from the binary expansion.
pub fn from_big(n: &BigUint) -> HFSeq {
    let mut kids = Vec::new();
    let mut zeros = 0u64;
    for i in 0..n.bits() {
        if n.bit(i) {
            kids.push(nat_to_hfseq(zeros));
            zeros = 0;
        } else {
            zeros += 1;
        }
    }
    HFSeq::from_children(kids)
}

/// A uniformly random value with exactly `bits` bits.
pub fn random_big(rng: &mut impl Rng, bits: u64) -> BigUint {
    let mut n = BigUint::from(1u8);
    for _ in 1..bits {
        n <<= 1u8;
        if rng.gen::<bool>() {
            n += 1u8;
        }
    }
    n
}

/// A random tree whose successor, written out node by node as a binary type,
/// stays below `max_nodes` nodes.
pub fn random_convertible_tree(rng: &mut impl Rng, max_nodes: u64) -> HFSeq {
    loop {
        let t = random_tree(rng, 128);
        let next = hfseq::arith::succ(&t);
        if next.node_count().is_some_and(|n| n <= max_nodes) {
            return t;
        }
    }
}
