//! Arithmetic performed directly on trees.
//!
//! Successor and predecessor follow the three disjoint clause shapes of a
//! tree: empty, first child empty, first child non-empty. On top of them sit
//! the parity recognizers, the bijective base-2 constructors `2x + 1` and
//! `2x + 2`, their common deconstructor, and the digit-recursive addition,
//! multiplication, comparison, subtraction and power in [`ops`].

mod decimal;
mod digits;
mod ops;

pub use decimal::{from_decimal, to_decimal};
pub use digits::{digits, from_digits, Digit, DigitSeq};
pub use ops::{add, cmp, mul, mul0, pow, sub};

use crate::error::{Error, Result};
use crate::natseq::Nat;
use crate::tree::{prepend_empties, Count, HFSeq, Seg};

/// Which of the three shapes a tree has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Zero,
    Odd,
    EvenPos,
}

pub fn parity(t: &HFSeq) -> Parity {
    match t.first_child_is_empty() {
        None => Parity::Zero,
        Some(true) => Parity::Odd,
        Some(false) => Parity::EvenPos,
    }
}

/// Successor.
pub fn succ(t: &HFSeq) -> HFSeq {
    match t.seg() {
        None => HFSeq::singleton(HFSeq::empty()),
        // [[K|Ks]|Xs] -> [[], p([K|Ks]) | Xs]
        Some(Seg::Child { head, tail }) => HFSeq::cons(
            HFSeq::empty(),
            HFSeq::cons(pred_nonzero(head), tail.clone()),
        ),
        // j leading empties in front of R: the carry runs through all of
        // them, so the result is [j | tail of s(R)], where s(R) always
        // starts with an empty child.
        Some(Seg::Empties { count, tail }) => {
            let rest = match tail.seg() {
                None => HFSeq::empty(),
                Some(Seg::Child { head, tail }) => HFSeq::cons(pred_nonzero(head), tail.clone()),
                Some(Seg::Empties { .. }) => unreachable!("adjacent empty runs"),
            };
            HFSeq::cons(count.to_tree(), rest)
        }
    }
}

/// Predecessor; zero has none.
pub fn pred(t: &HFSeq) -> Result<HFSeq> {
    if t.is_empty() {
        return Err(Error::Domain("predecessor of zero".into()));
    }
    Ok(pred_nonzero(t))
}

pub(crate) fn pred_nonzero(t: &HFSeq) -> HFSeq {
    match t.seg() {
        None => panic!("predecessor of zero"),
        // [[K|Ks]|Xs] with first child x: x empties, then p([[]|Xs]).
        Some(Seg::Child { head, tail }) => {
            let rest = pred_after_empty(tail);
            prepend_empties(Count::from_tree(head), rest)
        }
        Some(Seg::Empties { .. }) => {
            let (_, xs) = t.uncons().expect("non-empty");
            pred_after_empty(&xs)
        }
    }
}

/// `p([[] | xs])`: `[[]] -> []` and `[[], K | Xs] -> [s(K) | Xs]`.
fn pred_after_empty(xs: &HFSeq) -> HFSeq {
    match xs.uncons() {
        None => HFSeq::empty(),
        Some((k, rest)) => HFSeq::cons(succ(&k), rest),
    }
}

/// `2x + 1`: prepend an empty child.
pub fn mk_odd(t: &HFSeq) -> HFSeq {
    HFSeq::cons(HFSeq::empty(), t.clone())
}

/// `2x + 2`: the successor of `mk_odd`.
pub fn mk_even(t: &HFSeq) -> HFSeq {
    succ(&mk_odd(t))
}

/// Decrement and right shift: maps both `2x + 1` and `2x + 2` back to `x`.
pub fn r_dtor(t: &HFSeq) -> Result<HFSeq> {
    match parity(t) {
        Parity::Zero => Err(Error::Domain("deconstructor applied to zero".into())),
        Parity::Odd => Ok(t.uncons().expect("non-empty").1),
        Parity::EvenPos => Ok(r_even(t)),
    }
}

pub(crate) fn r_nonzero(t: &HFSeq) -> HFSeq {
    match parity(t) {
        Parity::Odd => t.uncons().expect("non-empty").1,
        _ => r_even(t),
    }
}

// p(t) is odd for even t; trim its leading empty child.
fn r_even(t: &HFSeq) -> HFSeq {
    pred_nonzero(t).uncons().expect("odd predecessor").1
}

/// Converts through the bijective base-2 digits of the tree.
pub fn to_nat(t: &HFSeq) -> Result<Nat> {
    let mut ds = Vec::new();
    let mut cur = t.clone();
    while !cur.is_empty() {
        // Anything below 2^64 has at most 64 bijective digits.
        if ds.len() == 64 {
            return Err(Error::overflow("tree value"));
        }
        ds.push(parity(&cur));
        cur = r_nonzero(&cur);
    }
    ds.iter().rev().try_fold(0u64, |acc, p| {
        let d = if *p == Parity::Odd { 1 } else { 2 };
        acc.checked_mul(2)
            .and_then(|v| v.checked_add(d))
            .ok_or_else(|| Error::overflow("tree value"))
    })
}

pub fn from_nat(mut n: Nat) -> HFSeq {
    let mut evens = Vec::new();
    while n > 0 {
        evens.push(n.is_multiple_of(2));
        n = (n - 1) / 2;
    }
    evens.iter().rev().fold(HFSeq::empty(), |acc, &even| {
        if even {
            mk_even(&acc)
        } else {
            mk_odd(&acc)
        }
    })
}

/// Addition by moving one unit at a time from `x` to `y`.
pub fn slow_add(x: &HFSeq, y: &HFSeq) -> HFSeq {
    let (mut x, mut y) = (x.clone(), y.clone());
    while !x.is_empty() {
        x = pred_nonzero(&x);
        y = succ(&y);
    }
    y
}

/// Counts predecessor steps down to zero.
pub fn tree_to_nat_slow(t: &HFSeq) -> Result<Nat> {
    if t.value_u64().is_none() {
        return Err(Error::overflow("tree value"));
    }
    let mut n = 0;
    let mut cur = t.clone();
    while !cur.is_empty() {
        cur = pred_nonzero(&cur);
        n += 1;
    }
    Ok(n)
}

/// Applies the successor `n` times to `[]`.
pub fn nat_to_tree_slow(n: Nat) -> HFSeq {
    (0..n).fold(HFSeq::empty(), |t, _| succ(&t))
}

/// The stream `[], s([]), s(s([])), ...`.
pub fn naturals() -> impl Iterator<Item = HFSeq> {
    std::iter::successors(Some(HFSeq::empty()), |t| Some(succ(t)))
}

/// The first `k` elements of [`naturals`].
pub fn enumerate(k: Nat) -> impl Iterator<Item = HFSeq> {
    naturals().take(usize::try_from(k).unwrap_or(usize::MAX))
}
