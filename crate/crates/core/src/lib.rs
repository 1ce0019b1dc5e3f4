//! Arbitrary-precision natural-number arithmetic on rooted ordered trees.
//!
//! Every natural number corresponds to exactly one hereditarily finite
//! sequence ([`HFSeq`]): the empty tree is zero and a tree `[x | xs]` is
//! `2^x * (2 * xs + 1)`. The [`arith`] module computes with those trees
//! directly, [`system_t`] mirrors the successor on binary type trees, and
//! [`dyck`] maps trees to balanced-parenthesis codes.

pub mod arith;
pub mod bench;
pub mod cli;
pub mod dyck;
mod error;
pub mod natseq;
pub mod system_t;
mod tree;

pub use error::{Error, Result};
pub use natseq::Nat;
pub use system_t::TType;
pub use tree::{parse_tree, Children, HFSeq};
