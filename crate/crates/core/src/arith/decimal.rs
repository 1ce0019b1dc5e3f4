//! Decimal strings for values beyond `u64`. Quadratic in the digit count.

use super::{add, digits, from_nat, mul, Digit};
use crate::error::{Error, Result};
use crate::tree::HFSeq;

const LIMB: u32 = 1_000_000_000;

/// Parses a decimal natural: non-empty ASCII digits, no leading zeros.
pub fn from_decimal(s: &str) -> Result<HFSeq> {
    if s.is_empty() {
        return Err(Error::parse(0, "empty decimal string"));
    }
    if let Some((pos, c)) = s.chars().enumerate().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(Error::parse(pos, format!("unexpected {c:?} in decimal")));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(Error::parse(0, "leading zero in decimal"));
    }
    let ten = from_nat(10);
    let small: Vec<HFSeq> = (0..10).map(from_nat).collect();
    Ok(s.bytes().fold(HFSeq::empty(), |acc, b| {
        add(&mul(&acc, &ten), &small[usize::from(b - b'0')])
    }))
}

/// Renders the value in decimal, feeding bijective base-2 digits (most
/// significant first) into `acc = 2 * acc + d` over base-10^9 limbs.
pub fn to_decimal(t: &HFSeq) -> String {
    let ds = digits(t);
    // little-endian limbs
    let mut limbs: Vec<u32> = Vec::with_capacity(ds.len() / 29 + 1);
    for d in ds.iter().rev() {
        let mut carry = match d {
            Digit::One => 1u64,
            Digit::Two => 2u64,
        };
        for limb in limbs.iter_mut() {
            let v = 2 * u64::from(*limb) + carry;
            *limb = (v % u64::from(LIMB)) as u32;
            carry = v / u64::from(LIMB);
        }
        if carry > 0 {
            limbs.push(carry as u32);
        }
    }
    match limbs.split_last() {
        None => "0".to_string(),
        Some((top, rest)) => {
            let mut out = top.to_string();
            for limb in rest.iter().rev() {
                out.push_str(&format!("{limb:09}"));
            }
            out
        }
    }
}
