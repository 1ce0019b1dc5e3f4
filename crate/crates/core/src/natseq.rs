//! Bounded naturals as sequences and trees.
//!
//! A positive natural `z` splits uniquely as `z = 2^x * (2y + 1)`; `x` is the
//! head and `y` the tail, which gives a bijection between naturals and finite
//! sequences of naturals. Applying it recursively to every element ranks and
//! unranks hereditarily finite sequences.

use crate::error::{Error, Result};
use crate::tree::HFSeq;

/// Machine natural used by the codec and oracle paths.
pub type Nat = u64;

/// `2^x * (2y + 1)`.
pub fn cons_nat(x: Nat, y: Nat) -> Result<Nat> {
    let odd = y
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::overflow("cons_nat"))?;
    if x >= 64 || u64::from(odd.leading_zeros()) < x {
        return Err(Error::overflow("cons_nat"));
    }
    Ok(odd << x)
}

/// Exponent of two in `z`.
pub fn hd_nat(z: Nat) -> Result<Nat> {
    if z == 0 {
        return Err(Error::Domain("hd of 0".into()));
    }
    Ok(Nat::from(z.trailing_zeros()))
}

pub fn tl_nat(z: Nat) -> Result<Nat> {
    let x = hd_nat(z)?;
    Ok(z.checked_shr(x as u32 + 1).unwrap_or(0))
}

pub fn is_null(z: Nat) -> bool {
    z == 0
}

pub fn nat_to_list(mut n: Nat) -> Vec<Nat> {
    let mut items = Vec::new();
    while n > 0 {
        let x = Nat::from(n.trailing_zeros());
        items.push(x);
        n = n.checked_shr(x as u32 + 1).unwrap_or(0);
    }
    items
}

pub fn list_to_nat(items: &[Nat]) -> Result<Nat> {
    items.iter().rev().try_fold(0, |acc, &x| cons_nat(x, acc))
}

/// Unranks `n` into its tree: the children are the unranked elements of
/// `nat_to_list(n)`.
pub fn nat_to_hfseq(n: Nat) -> HFSeq {
    HFSeq::from_children(
        nat_to_list(n)
            .into_iter()
            .map(nat_to_hfseq)
            .collect::<Vec<_>>(),
    )
}

/// Ranks a tree: the ranks of its children, folded with `list_to_nat`.
pub fn hfseq_to_nat(t: &HFSeq) -> Result<Nat> {
    // A natural below 2^64 has at most 64 one bits, hence at most 64 children.
    let children: Vec<HFSeq> = t.children().take(65).collect();
    if children.len() > 64 {
        return Err(Error::overflow("tree value"));
    }
    let ranks = children
        .iter()
        .map(hfseq_to_nat)
        .collect::<Result<Vec<_>>>()?;
    list_to_nat(&ranks).map_err(|_| Error::overflow("tree value"))
}
