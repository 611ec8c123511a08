//! Rational shuffles `ℚ(I₁, …, Iₖ)` and their canonical member lists.
//!
//! `ℚ(M) ≅ ℚ(S)` whenever every member of `M` is either a member of `S` or an
//! extended shuffle `L + ℚ(S) + R` with `L`, `R` empty or members of `S`. The
//! canonical list of `M` is the list `S` of some inner shuffle block of a
//! member for which this holds, or `M` itself (sorted, deduplicated) when no
//! such `S` exists.

use std::collections::BTreeSet;
use std::fmt;

use crate::orderterm::{Block, OrderTerm};
use crate::{Error, Result};

/// Canonical minimal member list: normalized, deduplicated, sorted by the
/// structural order on terms, and not collapsible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ShuffleList {
    members: Vec<OrderTerm>,
}

impl ShuffleList {
    /// Canonical list of the non-empty raw members; `None` when there are none.
    pub fn new(raw: Vec<OrderTerm>) -> Option<ShuffleList> {
        let mut m: Vec<OrderTerm> = raw.into_iter().filter(|t| !t.is_empty()).collect();
        m.sort();
        m.dedup();
        if m.is_empty() {
            return None;
        }
        let inner: BTreeSet<&ShuffleList> = m
            .iter()
            .flat_map(|t| t.blocks())
            .filter_map(|b| match b {
                Block::Shuffle(s) => Some(s),
                _ => None,
            })
            .collect();
        for s in inner {
            let covered = m
                .iter()
                .all(|t| s.contains(t) || matches!(extended_shuffle_decompose(t, s), Ok(Some(_))));
            if covered {
                return Some(s.clone());
            }
        }
        Some(ShuffleList { members: m })
    }

    pub fn members(&self) -> &[OrderTerm] {
        &self.members
    }

    pub fn contains(&self, t: &OrderTerm) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn is_rationals(&self) -> bool {
        self.members == [OrderTerm::nat(1)]
    }

    pub fn reversed(&self) -> ShuffleList {
        ShuffleList::new(self.members.iter().map(OrderTerm::reverse).collect())
            .expect("reversal keeps members non-empty")
    }
}

impl fmt::Display for ShuffleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            return write!(f, "Q");
        }
        write!(f, "Q(")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_minimal_list(raw: &[OrderTerm]) -> Option<ShuffleList> {
    ShuffleList::new(raw.to_vec())
}

/// Equivalence of two raw member lists: both describe the same shuffle.
pub fn lists_equivalent(l1: &[OrderTerm], l2: &[OrderTerm]) -> bool {
    canonical_minimal_list(l1) == canonical_minimal_list(l2)
}

/// Detects `j = L + ℚ(base) + R` with `L`, `R` empty or members of `base`.
///
/// Returns `Ok(None)` when `j` is itself a member and an error when `j` is
/// neither a member nor an extended shuffle of `base`.
pub fn extended_shuffle_decompose(
    j: &OrderTerm,
    base: &ShuffleList,
) -> Result<Option<(OrderTerm, OrderTerm)>> {
    if base.contains(j) {
        return Ok(None);
    }
    let blocks = j.blocks();
    let fits = |t: &OrderTerm| t.is_empty() || base.contains(t);
    for (i, b) in blocks.iter().enumerate() {
        if !matches!(b, Block::Shuffle(s) if s == base) {
            continue;
        }
        let left = j.slice(0..i);
        let right = j.slice(i + 1..blocks.len());
        if fits(&left) && fits(&right) {
            return Ok(Some((left, right)));
        }
    }
    Err(Error::Domain(format!(
        "{j} is neither a member nor an extended shuffle of {base}"
    )))
}

/// The good sum on single shuffle blocks: the shuffle of the union of the
/// member lists.
pub fn shuffle_sum_s(a: &OrderTerm, b: &OrderTerm) -> Result<OrderTerm> {
    let members = |t: &OrderTerm| match t.blocks() {
        [Block::Shuffle(s)] => Ok(s.members().to_vec()),
        _ => Err(Error::Domain(format!("{t} is not a single shuffle block"))),
    };
    let mut m = members(a)?;
    m.extend(members(b)?);
    Ok(OrderTerm::shuffle(m))
}
