//! Balanced-parenthesis codes for trees and their Kraft sums.
//!
//! A tree is written as `0`, the codes of its children in order, then `1`.
//! The result is a Dyck prime, so the set of all codes is prefix-free and
//! suffix-free.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::natseq::{nat_to_hfseq, Nat};
use crate::tree::HFSeq;

pub const OPEN: u8 = 0;
pub const CLOSE: u8 = 1;

/// A sequence of code symbols; valid codes hold only `0` and `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DyckCode(Vec<u8>);

impl DyckCode {
    pub fn from_bits(bits: Vec<u8>) -> DyckCode {
        DyckCode(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks the Dyck prime shape by counting depth: every proper non-empty
    /// prefix has more opens than closes, and the whole word is balanced.
    pub fn is_dyck_prime(&self) -> bool {
        let n = self.0.len();
        if n < 2 {
            return false;
        }
        let mut depth: i64 = 0;
        for (i, &b) in self.0.iter().enumerate() {
            match b {
                OPEN => depth += 1,
                CLOSE => depth -= 1,
                _ => return false,
            }
            if depth <= 0 && i + 1 < n {
                return false;
            }
        }
        depth == 0
    }
}

/// Canonical `01` text.
impl fmt::Display for DyckCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(match b {
                OPEN => "0",
                CLOSE => "1",
                _ => "?",
            })?;
        }
        Ok(())
    }
}

/// Accepts `0`/`1` and the aliases `(`/`)`; whitespace is skipped.
impl FromStr for DyckCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<DyckCode> {
        let mut bits = Vec::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            match c {
                '0' | '(' => bits.push(OPEN),
                '1' | ')' => bits.push(CLOSE),
                c if c.is_whitespace() => {}
                c => return Err(Error::parse(pos, format!("unexpected {c:?} in code"))),
            }
        }
        Ok(DyckCode(bits))
    }
}

pub fn encode(t: &HFSeq) -> DyckCode {
    let mut bits = vec![OPEN];
    let mut stack = vec![t.children()];
    while let Some(children) = stack.last_mut() {
        match children.next() {
            Some(c) if c.is_empty() => bits.extend([OPEN, CLOSE]),
            Some(c) => {
                bits.push(OPEN);
                stack.push(c.children());
            }
            None => {
                bits.push(CLOSE);
                stack.pop();
            }
        }
    }
    DyckCode(bits)
}

/// Parses exactly one term of `term := 0 args ; args := 1 | term args`.
pub fn decode(code: &DyckCode) -> Result<HFSeq> {
    let bits = code.bits();
    if bits.is_empty() {
        return Err(Error::parse(0, "empty code"));
    }
    let mut open: Vec<Vec<HFSeq>> = Vec::new();
    let mut done = None;
    for (pos, &b) in bits.iter().enumerate() {
        if done.is_some() {
            return Err(Error::parse(pos, "trailing bits after a complete code"));
        }
        match b {
            OPEN => open.push(Vec::new()),
            CLOSE => {
                let children = open
                    .pop()
                    .ok_or_else(|| Error::parse(pos, "close without matching open"))?;
                let t = HFSeq::from_children(children);
                match open.last_mut() {
                    Some(parent) => parent.push(t),
                    None => done = Some(t),
                }
            }
            other => return Err(Error::parse(pos, format!("symbol {other} is not a bit"))),
        }
    }
    done.ok_or_else(|| Error::parse(bits.len(), "unbalanced code: missing close"))
}

/// Code length of the tree for `n`, i.e. twice its node count.
pub fn parsize(n: Nat) -> Nat {
    encode(&nat_to_hfseq(n)).len() as Nat
}

/// `2^-parsize(n)`
pub fn kraft_term(n: Nat) -> f64 {
    let len = i32::try_from(parsize(n)).unwrap_or(i32::MAX);
    0.5f64.powi(len)
}

/// Sum of `kraft_term(n)` for `n` in `0..m`, accumulated in ascending order.
pub fn kraft_sum(m: Nat) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("kraft_sum needs m >= 1".into()));
    }
    Ok((0..m).map(kraft_term).fold(0.0, |acc, x| acc + x))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KraftReport {
    pub m: Nat,
    pub sum: f64,
    pub holds: bool,
}

pub fn kraft_check(m: Nat) -> Result<KraftReport> {
    let sum = kraft_sum(m)?;
    Ok(KraftReport {
        m,
        sum,
        holds: sum <= 1.0,
    })
}

/// Whether the codes of `0..m` are pairwise neither prefixes nor suffixes of
/// one another.
pub fn prefix_free_check(m: Nat) -> bool {
    let codes: Vec<DyckCode> = (0..m).map(|n| encode(&nat_to_hfseq(n))).collect();
    for (i, a) in codes.iter().enumerate() {
        for (j, b) in codes.iter().enumerate() {
            if i != j && (b.bits().starts_with(a.bits()) || b.bits().ends_with(a.bits())) {
                return false;
            }
        }
    }
    true
}
