//! Digit-recursive operations.
//!
//! Each operation descends through both operands with the deconstructor,
//! recording the parity case of every level on a heap-allocated stack, and
//! then rebuilds the result from the innermost level outward. The call stack
//! never grows with the number of digits.

use std::cmp::Ordering;

use super::{digits, mk_even, mk_odd, parity, pred_nonzero, r_nonzero, succ, Parity};
use crate::error::{Error, Result};
use crate::natseq::Nat;
use crate::tree::HFSeq;

#[derive(Clone, Copy)]
enum PairCase {
    BothOdd,
    Mixed,
    BothEven,
}

fn pair_case(x: &HFSeq, y: &HFSeq) -> PairCase {
    match (parity(x), parity(y)) {
        (Parity::Odd, Parity::Odd) => PairCase::BothOdd,
        (Parity::EvenPos, Parity::EvenPos) => PairCase::BothEven,
        _ => PairCase::Mixed,
    }
}

/// Addition in time proportional to the shorter operand plus carries.
///
/// With `x = 2a + dx` and `y = 2b + dy`:
/// odd + odd is `mk_even(a + b)`, mixed parities give `mk_odd(succ(a + b))`
/// and even + even is `mk_even(succ(a + b))`.
pub fn add(x: &HFSeq, y: &HFSeq) -> HFSeq {
    let mut levels = Vec::new();
    let (mut a, mut b) = (x.clone(), y.clone());
    let base = loop {
        if a.is_empty() {
            break b;
        }
        if b.is_empty() {
            break a;
        }
        levels.push(pair_case(&a, &b));
        a = r_nonzero(&a);
        b = r_nonzero(&b);
    };
    levels.into_iter().rev().fold(base, |r, case| match case {
        PairCase::BothOdd => mk_even(&r),
        PairCase::Mixed => mk_odd(&succ(&r)),
        PairCase::BothEven => mk_even(&succ(&r)),
    })
}

/// `mul0(x, y) = (x + 1) * (y + 1) - 1`.
///
/// An odd `x = 2a + 1` gives `mk_odd(mul0(a, y))`; an even `x = 2a + 2`
/// gives `succ(y + mk_odd(mul0(a, y)))`.
pub fn mul0(x: &HFSeq, y: &HFSeq) -> HFSeq {
    let mut evens = Vec::new();
    let mut a = x.clone();
    while !a.is_empty() {
        evens.push(parity(&a) == Parity::EvenPos);
        a = r_nonzero(&a);
    }
    evens.into_iter().rev().fold(y.clone(), |z, even| {
        if even {
            succ(&add(y, &mk_odd(&z)))
        } else {
            mk_odd(&z)
        }
    })
}

pub fn mul(x: &HFSeq, y: &HFSeq) -> HFSeq {
    if x.is_empty() || y.is_empty() {
        return HFSeq::empty();
    }
    succ(&mul0(&pred_nonzero(x), &pred_nonzero(y)))
}

/// Numeric comparison: fewer bijective digits means smaller, and equal
/// lengths compare most significant digit first.
pub fn cmp(x: &HFSeq, y: &HFSeq) -> Ordering {
    let (dx, dy) = (digits(x), digits(y));
    dx.len()
        .cmp(&dy.len())
        .then_with(|| dx.iter().rev().cmp(dy.iter().rev()))
}

#[derive(Clone, Copy)]
enum SubCase {
    Same,
    TwoMinusOne,
    OneMinusTwo,
}

/// `x - y`; fails when `y > x`.
pub fn sub(x: &HFSeq, y: &HFSeq) -> Result<HFSeq> {
    if cmp(x, y) == Ordering::Less {
        return Err(Error::Underflow);
    }
    // x = 2a + dx >= y = 2b + dy implies a >= b at every level, and a > b
    // whenever dx = 1 and dy = 2.
    let mut levels = Vec::new();
    let (mut a, mut b) = (x.clone(), y.clone());
    while !b.is_empty() {
        levels.push(match (parity(&a), parity(&b)) {
            (Parity::EvenPos, Parity::Odd) => SubCase::TwoMinusOne,
            (Parity::Odd, Parity::EvenPos) => SubCase::OneMinusTwo,
            _ => SubCase::Same,
        });
        a = r_nonzero(&a);
        b = r_nonzero(&b);
    }
    Ok(levels.into_iter().rev().fold(a, |r, case| match case {
        // 2(a - b)
        SubCase::Same if r.is_empty() => r,
        SubCase::Same => mk_even(&pred_nonzero(&r)),
        // 2(a - b) + 1
        SubCase::TwoMinusOne => mk_odd(&r),
        // 2(a - b) - 1
        SubCase::OneMinusTwo => mk_odd(&pred_nonzero(&r)),
    }))
}

/// `x^k` by square and multiply; `0^0` is rejected.
pub fn pow(x: &HFSeq, k: Nat) -> Result<HFSeq> {
    if k == 0 {
        if x.is_empty() {
            return Err(Error::Domain("0^0 is undefined".into()));
        }
        return Ok(HFSeq::singleton(HFSeq::empty()));
    }
    let mut result: Option<HFSeq> = None;
    let mut base = x.clone();
    let mut k = k;
    loop {
        if k & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => mul(&r, &base),
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = mul(&base, &base);
    }
    Ok(result.expect("k > 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::from_nat;
    use crate::natseq::nat_to_hfseq;

    fn n(v: u64) -> HFSeq {
        nat_to_hfseq(v)
    }

    #[test]
    fn add_identities() {
        let y = n(12345);
        assert_eq!(add(&HFSeq::empty(), &y), y);
        assert_eq!(add(&y, &HFSeq::empty()), y);
        assert_eq!(add(&n(42), &n(42)), n(84));
    }

    #[test]
    fn mul_examples() {
        assert!(mul(&HFSeq::empty(), &n(9)).is_empty());
        assert!(mul(&n(9), &HFSeq::empty()).is_empty());
        assert_eq!(mul0(&n(4), &n(5)), n(29));
        assert_eq!(mul(&n(6), &n(7)), n(42));
    }

    #[test]
    fn exhaustive_small_arithmetic() {
        for a in 0..48u64 {
            for b in 0..48u64 {
                let (x, y) = (n(a), n(b));
                assert_eq!(add(&x, &y), n(a + b), "{a}+{b}");
                assert_eq!(mul(&x, &y), n(a * b), "{a}*{b}");
                assert_eq!(mul0(&x, &y), n((a + 1) * (b + 1) - 1));
                assert_eq!(cmp(&x, &y), a.cmp(&b));
                match a.checked_sub(b) {
                    Some(d) => assert_eq!(sub(&x, &y), Ok(n(d)), "{a}-{b}"),
                    None => assert_eq!(sub(&x, &y), Err(Error::Underflow)),
                }
            }
        }
    }

    #[test]
    fn cmp_and_sub_examples() {
        assert_eq!(cmp(&HFSeq::empty(), &HFSeq::empty()), Ordering::Equal);
        assert_eq!(cmp(&n(7), &n(8)), Ordering::Less);
        assert_eq!(sub(&n(1000), &n(1000)), Ok(HFSeq::empty()));
        assert_eq!(sub(&n(84), &n(42)), Ok(n(42)));
        assert_eq!(sub(&HFSeq::empty(), &n(1)), Err(Error::Underflow));
    }

    #[test]
    fn pow_examples() {
        let t = n(77);
        assert_eq!(pow(&t, 1), Ok(t.clone()));
        assert_eq!(pow(&t, 0), Ok(n(1)));
        assert_eq!(pow(&from_nat(3), 5), Ok(from_nat(243)));
        assert!(pow(&HFSeq::empty(), 3).unwrap().is_empty());
        assert!(matches!(pow(&HFSeq::empty(), 0), Err(Error::Domain(_))));
        for base in 0..6u64 {
            for k in 1..20u32 {
                assert_eq!(pow(&n(base), k as u64), Ok(n(base.pow(k))));
            }
        }
    }
}
