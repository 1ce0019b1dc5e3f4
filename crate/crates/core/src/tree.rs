//! Rooted ordered trees (hereditarily finite sequences).
//!
//! A node *is* the ordered sequence of its children. Abstractly a tree is
//! either empty (`[]`) or a cons `[head | tail]` of a first child and the
//! remaining siblings, and every algorithm in this crate is written against
//! that view through [`HFSeq::cons`] and [`HFSeq::uncons`].
//!
//! Internally each node's child list is a persistent, shared list of
//! segments. A maximal run of empty children is stored as a single segment
//! carrying its length, and that length is itself a tree once it no longer
//! fits in a `u64`. The stored form is canonical (runs are maximal, counts
//! are positive, counts below `2^64` are always machine words), so two trees
//! are equal exactly when their stored forms are equal. The compression is
//! what lets predecessor and successor act on towers such as
//! `[[[[[[[[[]]]]]]]]]`, whose intermediate values have astronomically many
//! children.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::error::{Error, Result};
use crate::natseq;

/// A hereditarily finite sequence: a rooted ordered tree encoding a natural.
#[derive(Clone, Default)]
pub struct HFSeq(Option<Arc<Seg>>);

pub(crate) enum Seg {
    /// A non-empty first child followed by the remaining siblings.
    Child { head: HFSeq, tail: HFSeq },
    /// `count` empty children followed by `tail`, which never starts with
    /// another run of empties.
    Empties { count: Count, tail: HFSeq },
}

/// Length of a run of empty children; always at least one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Count {
    Small(u64),
    /// Only used for lengths of at least `2^64`.
    Big(HFSeq),
}

impl Count {
    pub(crate) const ONE: Count = Count::Small(1);

    fn is_one(&self) -> bool {
        matches!(self, Count::Small(1))
    }

    fn succ(&self) -> Count {
        match self {
            Count::Small(u64::MAX) => Count::Big(two_pow_64()),
            Count::Small(k) => Count::Small(k + 1),
            Count::Big(t) => Count::Big(arith::succ(t)),
        }
    }

    /// Requires `self > 1`.
    fn pred(&self) -> Count {
        match self {
            Count::Small(k) => {
                debug_assert!(*k > 1);
                Count::Small(k - 1)
            }
            Count::Big(t) => Count::from_tree(&arith::pred_nonzero(t)),
        }
    }

    /// The count of a run whose length is the value of a non-empty tree.
    pub(crate) fn from_tree(t: &HFSeq) -> Count {
        debug_assert!(!t.is_empty());
        match t.value_u64() {
            Some(k) => Count::Small(k),
            None => Count::Big(t.clone()),
        }
    }

    pub(crate) fn to_tree(&self) -> HFSeq {
        match self {
            Count::Small(k) => small_tree(*k),
            Count::Big(t) => t.clone(),
        }
    }
}

const SMALL_CACHE: u64 = 128;

/// Trees for small naturals, built once through the ranking bijection.
fn small_tree(k: u64) -> HFSeq {
    static CACHE: OnceLock<Vec<HFSeq>> = OnceLock::new();
    if k < SMALL_CACHE {
        let cache = CACHE.get_or_init(|| (0..SMALL_CACHE).map(natseq::nat_to_hfseq).collect());
        cache[k as usize].clone()
    } else {
        natseq::nat_to_hfseq(k)
    }
}

fn two_pow_64() -> HFSeq {
    HFSeq::singleton(small_tree(64))
}

impl HFSeq {
    /// The empty tree `[]`, encoding zero.
    pub const fn empty() -> HFSeq {
        HFSeq(None)
    }

    fn node(seg: Seg) -> HFSeq {
        HFSeq(Some(Arc::new(seg)))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub(crate) fn seg(&self) -> Option<&Seg> {
        self.0.as_deref()
    }

    /// `[head | tail]`: prepend `head` to the children of `tail`.
    pub fn cons(head: HFSeq, tail: HFSeq) -> HFSeq {
        if !head.is_empty() {
            return HFSeq::node(Seg::Child { head, tail });
        }
        match tail.seg() {
            Some(Seg::Empties { count, tail: rest }) => HFSeq::node(Seg::Empties {
                count: count.succ(),
                tail: rest.clone(),
            }),
            _ => HFSeq::node(Seg::Empties {
                count: Count::ONE,
                tail,
            }),
        }
    }

    /// Splits off the first child; `None` for the empty tree.
    pub fn uncons(&self) -> Option<(HFSeq, HFSeq)> {
        match self.seg()? {
            Seg::Child { head, tail } => Some((head.clone(), tail.clone())),
            Seg::Empties { count, tail } => Some((HFSeq::empty(), drop_one_empty(count, tail))),
        }
    }

    /// `[t]`
    pub fn singleton(t: HFSeq) -> HFSeq {
        HFSeq::cons(t, HFSeq::empty())
    }

    /// Builds a node from its children, first child first.
    pub fn from_children<I>(children: I) -> HFSeq
    where
        I: IntoIterator<Item = HFSeq>,
        I::IntoIter: DoubleEndedIterator,
    {
        children
            .into_iter()
            .rev()
            .fold(HFSeq::empty(), |acc, c| HFSeq::cons(c, acc))
    }

    /// The nested singleton `T_d`: `T_0 = []`, `T_{d+1} = [T_d]`.
    pub fn tower(depth: usize) -> HFSeq {
        (0..depth).fold(HFSeq::empty(), |t, _| HFSeq::singleton(t))
    }

    pub fn children(&self) -> Children {
        Children {
            pending: None,
            rest: self.clone(),
        }
    }

    /// Whether the first child is empty; `None` for the empty tree.
    pub fn first_child_is_empty(&self) -> Option<bool> {
        self.seg().map(|s| matches!(s, Seg::Empties { .. }))
    }

    /// Number of children, or `None` if it exceeds `u64`.
    pub fn child_count(&self) -> Option<u64> {
        let mut n: u64 = 0;
        let mut cur = self;
        while let Some(seg) = cur.seg() {
            let (k, tail) = match seg {
                Seg::Child { tail, .. } => (1, tail),
                Seg::Empties {
                    count: Count::Small(k),
                    tail,
                } => (*k, tail),
                Seg::Empties {
                    count: Count::Big(_),
                    ..
                } => return None,
            };
            n = n.checked_add(k)?;
            cur = tail;
        }
        Some(n)
    }

    /// Number of nodes including the root, or `None` past `u64`.
    pub fn node_count(&self) -> Option<u64> {
        let mut total: u64 = 0;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            total = total.checked_add(1)?;
            let mut cur = t;
            while let Some(seg) = cur.seg() {
                match seg {
                    Seg::Child { head, tail } => {
                        stack.push(head);
                        cur = tail;
                    }
                    Seg::Empties { count, tail } => {
                        let Count::Small(k) = count else {
                            return None;
                        };
                        total = total.checked_add(*k)?;
                        cur = tail;
                    }
                }
            }
        }
        Some(total)
    }

    /// Length of the value in binary, or `None` past `u64`.
    pub fn bit_length(&self) -> Option<u64> {
        let mut bits: u64 = 0;
        let mut cur = self;
        while let Some(seg) = cur.seg() {
            let (k, tail) = match seg {
                Seg::Child { head, tail } => (head.value_u64()?.checked_add(1)?, tail),
                Seg::Empties {
                    count: Count::Small(k),
                    tail,
                } => (*k, tail),
                Seg::Empties {
                    count: Count::Big(_),
                    ..
                } => return None,
            };
            bits = bits.checked_add(k)?;
            cur = tail;
        }
        Some(bits)
    }

    /// The encoded value if it fits in a `u64`.
    ///
    /// Reads the tree as run lengths of binary zeros between one bits, so it
    /// touches at most 64 children per level and a bounded number of levels.
    pub fn value_u64(&self) -> Option<u64> {
        // A value below 2^64 nests at most four non-empty children deep.
        value_bounded(self, 6)
    }
}

fn value_bounded(t: &HFSeq, depth: u32) -> Option<u64> {
    let mut acc: u64 = 0;
    let mut pos: u64 = 0;
    let mut cur = t;
    while let Some(seg) = cur.seg() {
        match seg {
            Seg::Child { head, tail } => {
                if depth == 0 {
                    return None;
                }
                pos = pos.checked_add(value_bounded(head, depth - 1)?)?;
                if pos >= 64 {
                    return None;
                }
                acc |= 1 << pos;
                pos += 1;
                cur = tail;
            }
            Seg::Empties { count, tail } => {
                let Count::Small(k) = *count else {
                    return None;
                };
                if k > 64 - pos {
                    return None;
                }
                let run = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
                acc |= run << pos;
                pos += k;
                cur = tail;
            }
        }
    }
    Some(acc)
}

fn drop_one_empty(count: &Count, tail: &HFSeq) -> HFSeq {
    if count.is_one() {
        tail.clone()
    } else {
        HFSeq::node(Seg::Empties {
            count: count.pred(),
            tail: tail.clone(),
        })
    }
}

/// `count` empty children in front of `tail`; `tail` must not begin with an
/// empty child.
pub(crate) fn prepend_empties(count: Count, tail: HFSeq) -> HFSeq {
    debug_assert!(tail.first_child_is_empty() != Some(true));
    HFSeq::node(Seg::Empties { count, tail })
}

/// Iterator over the children of a node, first child first.
#[derive(Clone)]
pub struct Children {
    pending: Option<Count>,
    rest: HFSeq,
}

impl Iterator for Children {
    type Item = HFSeq;

    fn next(&mut self) -> Option<HFSeq> {
        if let Some(count) = self.pending.take() {
            if !count.is_one() {
                self.pending = Some(count.pred());
            }
            return Some(HFSeq::empty());
        }
        let (item, rest) = match self.rest.seg()? {
            Seg::Child { head, tail } => (head.clone(), tail.clone()),
            Seg::Empties { count, tail } => {
                if !count.is_one() {
                    self.pending = Some(count.pred());
                }
                (HFSeq::empty(), tail.clone())
            }
        };
        self.rest = rest;
        Some(item)
    }
}

impl PartialEq for HFSeq {
    fn eq(&self, other: &HFSeq) -> bool {
        let mut stack = vec![(self, other)];
        while let Some((mut a, mut b)) = stack.pop() {
            loop {
                let (x, y) = match (&a.0, &b.0) {
                    (None, None) => break,
                    (Some(x), Some(y)) => (x, y),
                    _ => return false,
                };
                if Arc::ptr_eq(x, y) {
                    break;
                }
                match (&**x, &**y) {
                    (Seg::Child { head: h1, tail: t1 }, Seg::Child { head: h2, tail: t2 }) => {
                        stack.push((h1, h2));
                        a = t1;
                        b = t2;
                    }
                    (
                        Seg::Empties {
                            count: c1,
                            tail: t1,
                        },
                        Seg::Empties {
                            count: c2,
                            tail: t2,
                        },
                    ) => {
                        match (c1, c2) {
                            (Count::Small(p), Count::Small(q)) if p == q => {}
                            (Count::Big(p), Count::Big(q)) => stack.push((p, q)),
                            _ => return false,
                        }
                        a = t1;
                        b = t2;
                    }
                    _ => return false,
                }
            }
        }
        true
    }
}

impl Eq for HFSeq {}

impl PartialOrd for HFSeq {
    fn partial_cmp(&self, other: &HFSeq) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order of the encoded naturals.
impl Ord for HFSeq {
    fn cmp(&self, other: &HFSeq) -> std::cmp::Ordering {
        arith::cmp(self, other)
    }
}

impl Drop for HFSeq {
    fn drop(&mut self) {
        let Some(root) = self.0.take() else {
            return;
        };
        let mut pending: Vec<Arc<Seg>> = Vec::new();
        let mut cur = Some(root);
        loop {
            let arc = match cur.take().or_else(|| pending.pop()) {
                Some(a) => a,
                None => break,
            };
            if let Ok(mut seg) = Arc::try_unwrap(arc) {
                let (tail, other) = match &mut seg {
                    Seg::Child { head, tail } => (tail.0.take(), head.0.take()),
                    Seg::Empties { count, tail } => (
                        tail.0.take(),
                        match count {
                            Count::Big(t) => t.0.take(),
                            Count::Small(_) => None,
                        },
                    ),
                };
                if let Some(o) = other {
                    if Arc::strong_count(&o) == 1 {
                        pending.push(o);
                    }
                }
                cur = tail;
            }
        }
    }
}

/// Canonical literal, e.g. `[[],[]]`.
impl fmt::Display for HFSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut stack: Vec<(Children, bool)> = vec![(self.children(), true)];
        while let Some((iter, first)) = stack.last_mut() {
            match iter.next() {
                Some(c) => {
                    if !*first {
                        f.write_str(",")?;
                    }
                    *first = false;
                    if c.is_empty() {
                        f.write_str("[]")?;
                    } else {
                        f.write_str("[")?;
                        stack.push((c.children(), true));
                    }
                }
                None => {
                    f.write_str("]")?;
                    stack.pop();
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HFSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `tree := "[" ( tree ("," tree)* )? "]"`, whitespace insignificant.
pub fn parse_tree(s: &str) -> Result<HFSeq> {
    #[derive(PartialEq)]
    enum Expect {
        Open,
        OpenOrClose,
        CommaOrClose,
        End,
    }
    let mut stack: Vec<Vec<HFSeq>> = Vec::new();
    let mut state = Expect::Open;
    let mut result = None;
    for (pos, ch) in s.chars().enumerate() {
        if ch.is_whitespace() {
            continue;
        }
        match (ch, &state) {
            ('[', Expect::Open | Expect::OpenOrClose) => {
                stack.push(Vec::new());
                state = Expect::OpenOrClose;
            }
            (']', Expect::OpenOrClose | Expect::CommaOrClose) => {
                let children = stack.pop().expect("open bracket on stack");
                let t = HFSeq::from_children(children);
                match stack.last_mut() {
                    Some(parent) => {
                        parent.push(t);
                        state = Expect::CommaOrClose;
                    }
                    None => {
                        result = Some(t);
                        state = Expect::End;
                    }
                }
            }
            (',', Expect::CommaOrClose) => state = Expect::Open,
            (_, Expect::End) => return Err(Error::parse(pos, "trailing input after tree")),
            (c, _) => {
                let wanted = match state {
                    Expect::Open => "'['",
                    Expect::OpenOrClose => "'[' or ']'",
                    _ => "',' or ']'",
                };
                return Err(Error::parse(
                    pos,
                    format!("unexpected {c:?}, expected {wanted}"),
                ));
            }
        }
    }
    result.ok_or_else(|| Error::parse(s.chars().count(), "unexpected end of input"))
}

impl FromStr for HFSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<HFSeq> {
        parse_tree(s)
    }
}
