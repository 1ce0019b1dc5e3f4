//! Naturals as System T types over a single base type `e`.
//!
//! A type is `e` or an arrow `t -> s`. Reading `t -> s` as "first child `t`,
//! remaining siblings `s`" (first-child / next-sibling) is a bijection with
//! [`HFSeq`], and successor and predecessor are transported along it.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::natseq::Nat;
use crate::tree::HFSeq;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TType {
    E,
    Arrow(Arc<TType>, Arc<TType>),
}

use TType::{Arrow, E};

pub fn arrow(left: TType, right: TType) -> TType {
    Arrow(Arc::new(left), Arc::new(right))
}

fn split(t: &TType) -> Option<(&TType, &TType)> {
    match t {
        E => None,
        Arrow(l, r) => Some((l, r)),
    }
}

/// Successor, mirroring the three clauses of the tree successor.
pub fn succ_t(t: &TType) -> TType {
    match t {
        E => arrow(E, E),
        Arrow(l, xs) => match &**l {
            // ((K->Ks)->Xs) -> (e->(p(K->Ks)->Xs))
            Arrow(..) => arrow(E, Arrow(Arc::new(pred_nonzero(l)), xs.clone())),
            // (e->Xs) -> ((K1->Ks)->Ys) where s(Xs) = (K->Ys), s(K) = (K1->Ks)
            E => {
                let s = succ_t(xs);
                let (k, ys) = split(&s).expect("successor is an arrow");
                Arrow(Arc::new(succ_t(k)), Arc::new(ys.clone()))
            }
        },
    }
}

pub fn pred_t(t: &TType) -> Result<TType> {
    match t {
        E => Err(Error::Domain("predecessor of e".into())),
        _ => Ok(pred_nonzero(t)),
    }
}

fn pred_nonzero(t: &TType) -> TType {
    let (l, xs) = split(t).expect("predecessor of e");
    match (l, xs) {
        (E, E) => E,
        // (e->(K->Xs)) -> (s(K)->Xs)
        (E, Arrow(k, rest)) => Arrow(Arc::new(succ_t(k)), rest.clone()),
        // ((K->Ks)->Xs) -> (e->p(p(K->Ks)->Xs))
        (Arrow(..), _) => {
            let k1 = pred_nonzero(l);
            arrow(E, pred_nonzero(&arrow(k1, xs.clone())))
        }
    }
}

/// Direction of the merged successor/predecessor relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Given the left side, compute its successor.
    Up,
    /// Given the right side, compute its predecessor.
    Down,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

/// One step of the relation `sp(X, Y)` meaning `Y = succ(X)`, solved for the
/// unknown side: `Up` maps `X` to `Y`, `Down` maps `Y` to `X`.
///
/// Both directions share the clauses
///
/// ```text
/// sp(e, (e->e)).
/// sp(((K->Ks)->Xs), (e->(K1->Xs))) :- K1 = pred(K->Ks)    (direction flips)
/// sp((e->Xs), ((K1->Ks)->Ys))      :- sp(Xs, (K->Ys)), sp(K, (K1->Ks))
/// ```
///
/// and the last clause runs its two subgoals in reverse order when going down.
pub fn sp_step(dir: Direction, given: &TType) -> Result<TType> {
    match dir {
        Direction::Up => match given {
            E => Ok(arrow(E, E)),
            Arrow(l, xs) => match &**l {
                Arrow(..) => {
                    let k1 = flip_sp(dir, l)?;
                    Ok(arrow(E, Arrow(Arc::new(k1), xs.clone())))
                }
                E => {
                    let (k1ks, ys) = order_sp(dir, xs, None)?;
                    Ok(Arrow(Arc::new(k1ks), Arc::new(ys)))
                }
            },
        },
        Direction::Down => match given {
            E => Err(Error::Domain("e is not a successor".into())),
            Arrow(l, r) => match (&**l, &**r) {
                (E, E) => Ok(E),
                (E, Arrow(k1, xs)) => {
                    let kks = flip_sp(dir, k1)?;
                    Ok(Arrow(Arc::new(kks), xs.clone()))
                }
                (Arrow(..), _) => {
                    let (xs, _) = order_sp(dir, l, Some(r))?;
                    Ok(arrow(E, xs))
                }
            },
        },
    }
}

/// The nested argument of the second clause is solved in the other direction.
fn flip_sp(dir: Direction, given: &TType) -> Result<TType> {
    sp_step(dir.flip(), given)
}

/// Subgoals of the third clause `sp(Xs, (K->Ys)), sp(K, (K1->Ks))`.
///
/// Up: `given = Xs`; solve `(K->Ys)` first, then `(K1->Ks)`; returns
/// `((K1->Ks), Ys)`. Down: `given = (K1->Ks)` and `ys = Ys`; solve `K` first,
/// then `Xs`; returns `(Xs, Ys)`.
fn order_sp(dir: Direction, given: &TType, ys: Option<&TType>) -> Result<(TType, TType)> {
    match dir {
        Direction::Up => {
            let kys = sp_step(Direction::Up, given)?;
            let (k, ys) = split(&kys).expect("successor is an arrow");
            let k1ks = sp_step(Direction::Up, k)?;
            Ok((k1ks, ys.clone()))
        }
        Direction::Down => {
            let ys = ys.expect("down needs the sibling list").clone();
            let k = sp_step(Direction::Down, given)?;
            let xs = sp_step(Direction::Down, &arrow(k, ys.clone()))?;
            Ok((xs, ys))
        }
    }
}

/// Outcome of [`sp_infer`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpAnswer {
    Successor(TType),
    Predecessor(TType),
    Holds(bool),
}

/// Solves `sp(x, y)` for whichever side is missing, or checks it when both
/// are given.
pub fn sp_infer(x: Option<&TType>, y: Option<&TType>) -> Result<SpAnswer> {
    match (x, y) {
        (None, None) => Err(Error::Usage("sp needs at least one argument".into())),
        (Some(x), None) => sp_step(Direction::Up, x).map(SpAnswer::Successor),
        (None, Some(y)) => sp_step(Direction::Down, y).map(SpAnswer::Predecessor),
        (Some(x), Some(y)) => Ok(SpAnswer::Holds(sp_step(Direction::Up, x)? == *y)),
    }
}

/// Counts predecessor steps down to `e`.
pub fn t2n(t: &TType) -> Result<Nat> {
    if type_to_hfseq(t).value_u64().is_none() {
        return Err(Error::overflow("type value"));
    }
    let mut n = 0;
    let mut cur = t.clone();
    while cur != E {
        cur = pred_nonzero(&cur);
        n += 1;
    }
    Ok(n)
}

/// `e, s(e), s(s(e)), ...`
pub fn types() -> impl Iterator<Item = TType> {
    std::iter::successors(Some(E), |t| Some(succ_t(t)))
}

pub fn enumerate_t(k: Nat) -> impl Iterator<Item = TType> {
    types().take(usize::try_from(k).unwrap_or(usize::MAX))
}

/// First-child / next-sibling conversion.
pub fn hfseq_to_type(t: &HFSeq) -> TType {
    let children: Vec<HFSeq> = t.children().collect();
    children
        .iter()
        .rev()
        .fold(E, |acc, c| arrow(hfseq_to_type(c), acc))
}

pub fn type_to_hfseq(t: &TType) -> HFSeq {
    let mut lefts = Vec::new();
    let mut cur = t;
    while let Arrow(l, r) = cur {
        lefts.push(type_to_hfseq(l));
        cur = r;
    }
    HFSeq::from_children(lefts)
}

/// Addition on types, computed on the corresponding trees.
pub fn add_t(x: &TType, y: &TType) -> TType {
    hfseq_to_type(&arith::add(&type_to_hfseq(x), &type_to_hfseq(y)))
}

pub fn mul_t(x: &TType, y: &TType) -> TType {
    hfseq_to_type(&arith::mul(&type_to_hfseq(x), &type_to_hfseq(y)))
}

/// Renders in the style `(e->e->e)`: a non-leaf type is wrapped in one pair
/// of parentheses, arrows on the left of `->` are parenthesized, and right
/// nesting is left bare.
pub fn print_type(t: &TType) -> String {
    enum Item<'a> {
        Body(&'a TType),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut todo = match t {
        E => return "e".to_string(),
        _ => vec![Item::Text(")"), Item::Body(t), Item::Text("(")],
    };
    while let Some(item) = todo.pop() {
        match item {
            Item::Text(s) => out.push_str(s),
            Item::Body(E) => out.push('e'),
            Item::Body(Arrow(l, r)) => {
                todo.push(Item::Body(r));
                todo.push(Item::Text("->"));
                if let Arrow(..) = **l {
                    todo.push(Item::Text(")"));
                    todo.push(Item::Body(l));
                    todo.push(Item::Text("("));
                } else {
                    todo.push(Item::Body(l));
                }
            }
        }
    }
    out
}

/// Parses `type := "e" | "(" type ")" | type "->" type`, with `->`
/// associating to the right. Whitespace is ignored.
pub fn parse_type(s: &str) -> Result<TType> {
    // Each open group collects the operands of its `->` chain.
    let mut groups: Vec<(usize, Vec<TType>)> = vec![(0, Vec::new())];
    let mut want_operand = true;
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            'e' if want_operand => {
                groups.last_mut().unwrap().1.push(E);
                want_operand = false;
            }
            '(' if want_operand => groups.push((i, Vec::new())),
            ')' if !want_operand && groups.len() > 1 => {
                let (_, operands) = groups.pop().unwrap();
                groups.last_mut().unwrap().1.push(fold_arrows(operands));
            }
            '-' if !want_operand => {
                if chars.get(i + 1) != Some(&'>') {
                    return Err(Error::parse(i, "expected '->'"));
                }
                want_operand = true;
                i += 1;
            }
            _ => {
                let wanted = if want_operand {
                    "'e' or '('"
                } else if groups.len() > 1 {
                    "'->' or ')'"
                } else {
                    "'->' or end of input"
                };
                return Err(Error::parse(
                    i,
                    format!("unexpected {c:?}, expected {wanted}"),
                ));
            }
        }
        i += 1;
    }
    if want_operand {
        return Err(Error::parse(
            chars.len(),
            "unexpected end of input, expected a type",
        ));
    }
    if groups.len() > 1 {
        let (open, _) = groups.last().unwrap();
        return Err(Error::parse(*open, "unclosed '('"));
    }
    Ok(fold_arrows(groups.pop().unwrap().1))
}

fn fold_arrows(operands: Vec<TType>) -> TType {
    let mut it = operands.into_iter().rev();
    let last = it.next().expect("at least one operand");
    it.fold(last, |acc, l| arrow(l, acc))
}

impl fmt::Display for TType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_type(self))
    }
}

impl fmt::Debug for TType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_type(self))
    }
}

impl FromStr for TType {
    type Err = Error;

    fn from_str(s: &str) -> Result<TType> {
        parse_type(s)
    }
}
