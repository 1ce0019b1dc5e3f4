use std::fmt;

use super::{mk_even, mk_odd, parity, r_nonzero, Parity};
use crate::tree::HFSeq;

/// A bijective base-2 digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    One = 1,
    Two = 2,
}

/// Bijective base-2 digits, least significant first: `n = sum d_i * 2^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DigitSeq(pub Vec<Digit>);

impl DigitSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Digit> + '_ {
        self.0.iter().copied()
    }
}

/// Most significant digit first, e.g. `n = 5` prints as `21`.
impl fmt::Display for DigitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.0.iter().rev() {
            f.write_str(if *d == Digit::One { "1" } else { "2" })?;
        }
        Ok(())
    }
}

/// Peels digits off with the deconstructor until nothing is left.
pub fn digits(t: &HFSeq) -> DigitSeq {
    let mut out = Vec::new();
    let mut cur = t.clone();
    loop {
        match parity(&cur) {
            Parity::Zero => break,
            Parity::Odd => out.push(Digit::One),
            Parity::EvenPos => out.push(Digit::Two),
        }
        cur = r_nonzero(&cur);
    }
    DigitSeq(out)
}

/// Rebuilds a tree from its digits with the two constructors.
pub fn from_digits(ds: &DigitSeq) -> HFSeq {
    ds.iter().rev().fold(HFSeq::empty(), |acc, d| match d {
        Digit::One => mk_odd(&acc),
        Digit::Two => mk_even(&acc),
    })
}
