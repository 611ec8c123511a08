//! Countable linear orders as finite block sequences.
//!
//! A block is an ordinal, a reversed ordinal or a rational shuffle. Terms are
//! kept in a normal form in which structural equality is the isomorphism
//! test. Normalization pushes blocks one at a time onto a stack and applies
//! these rules at the top:
//!
//! * empty blocks vanish;
//! * adjacent ordinals add, `Ord(a) + Ord(b) = Ord(a + b)`;
//! * adjacent reversed ordinals add, `a* + b* = (b + a)*`;
//! * a reversed ordinal keeps only its limit part, `(a′ + n)* = n + a′*`, so
//!   finite reversals become ordinals;
//! * a finite ordinal after a reversed limit is absorbed, `a* + n = a*`;
//! * `Q(S) + T + Q(S) = Q(S)` when `T` is empty or a member of `S`.
//!
//! Shuffle blocks always carry a canonical minimal member list, see
//! [`crate::shuffle`].

use std::fmt;

use crate::ordinal::{hessenberg, Ordinal};
use crate::shuffle::ShuffleList;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Block {
    Ord(Ordinal),
    /// Reversed ordinal; in normal form always an infinite limit ordinal.
    RevOrd(Ordinal),
    Shuffle(ShuffleList),
}

/// A normalized block sequence. The empty sequence is the empty order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrderTerm {
    blocks: Vec<Block>,
}

fn push(out: &mut Vec<Block>, block: Block) {
    match block {
        Block::Ord(a) => {
            if a.is_zero() {
                return;
            }
            match out.last_mut() {
                Some(Block::Ord(x)) => *x = x.add(&a),
                Some(Block::RevOrd(_)) if a.is_finite() => {}
                _ => out.push(Block::Ord(a)),
            }
        }
        Block::RevOrd(a) => {
            push(out, Block::Ord(Ordinal::nat(a.finite_part())));
            let lim = a.limit_part();
            if lim.is_zero() {
                return;
            }
            match out.last_mut() {
                Some(Block::RevOrd(x)) => *x = lim.add(x),
                _ => out.push(Block::RevOrd(lim)),
            }
        }
        Block::Shuffle(s) => {
            for i in (0..out.len()).rev() {
                if !matches!(&out[i], Block::Shuffle(x) if *x == s) {
                    continue;
                }
                let between = OrderTerm {
                    blocks: out[i + 1..].to_vec(),
                };
                if between.is_empty() || s.contains(&between) {
                    out.truncate(i + 1);
                    return;
                }
            }
            out.push(Block::Shuffle(s));
        }
    }
}

/// Normal form of a raw block sequence.
pub fn normalize(raw: &[Block]) -> OrderTerm {
    let mut out = Vec::with_capacity(raw.len());
    for b in raw {
        push(&mut out, b.clone());
    }
    OrderTerm { blocks: out }
}

impl OrderTerm {
    pub fn empty() -> OrderTerm {
        OrderTerm::default()
    }

    pub fn from_blocks(raw: Vec<Block>) -> OrderTerm {
        normalize(&raw)
    }

    pub fn ordinal(a: Ordinal) -> OrderTerm {
        normalize(&[Block::Ord(a)])
    }

    pub fn nat(n: u64) -> OrderTerm {
        OrderTerm::ordinal(Ordinal::nat(n))
    }

    pub fn omega() -> OrderTerm {
        OrderTerm::ordinal(Ordinal::omega())
    }

    /// The reverse `a*` of an ordinal.
    pub fn rev_ordinal(a: Ordinal) -> OrderTerm {
        normalize(&[Block::RevOrd(a)])
    }

    /// `ℚ(m₁, …, mₖ)`; empty members are ignored and an all-empty list gives
    /// the empty order.
    pub fn shuffle(members: Vec<OrderTerm>) -> OrderTerm {
        match ShuffleList::new(members) {
            Some(s) => OrderTerm {
                blocks: vec![Block::Shuffle(s)],
            },
            None => OrderTerm::empty(),
        }
    }

    /// The rationals, `ℚ = ℚ(1)`.
    pub fn rationals() -> OrderTerm {
        OrderTerm::shuffle(vec![OrderTerm::nat(1)])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn as_ordinal(&self) -> Option<Ordinal> {
        match self.blocks.as_slice() {
            [] => Some(Ordinal::zero()),
            [Block::Ord(a)] => Some(a.clone()),
            _ => None,
        }
    }

    pub fn is_ordinal(&self) -> bool {
        self.as_ordinal().is_some()
    }

    pub fn is_scattered(&self) -> bool {
        !self.blocks.iter().any(|b| matches!(b, Block::Shuffle(_)))
    }

    pub fn has_least(&self) -> bool {
        matches!(self.blocks.first(), Some(Block::Ord(_)))
    }

    pub fn has_greatest(&self) -> bool {
        match self.blocks.last() {
            Some(Block::Ord(a)) => a.finite_part() > 0,
            Some(Block::RevOrd(_)) => true,
            _ => false,
        }
    }

    /// Splits off the leading ordinal block: `τ + rest` where `rest` is empty
    /// or has no least element.
    pub fn ordinal_prefix(&self) -> (Ordinal, OrderTerm) {
        match self.blocks.first() {
            Some(Block::Ord(a)) => (a.clone(), self.slice(1..self.blocks.len())),
            _ => (Ordinal::zero(), self.clone()),
        }
    }

    pub(crate) fn slice(&self, r: std::ops::Range<usize>) -> OrderTerm {
        OrderTerm {
            blocks: self.blocks[r].to_vec(),
        }
    }

    pub fn add(&self, other: &OrderTerm) -> OrderTerm {
        let mut out = self.blocks.clone();
        for b in &other.blocks {
            push(&mut out, b.clone());
        }
        OrderTerm { blocks: out }
    }

    pub fn reverse(&self) -> OrderTerm {
        let raw: Vec<Block> = self
            .blocks
            .iter()
            .rev()
            .map(|b| match b {
                Block::Ord(a) => Block::RevOrd(a.clone()),
                Block::RevOrd(a) => Block::Ord(a.clone()),
                Block::Shuffle(s) => Block::Shuffle(s.reversed()),
            })
            .collect();
        normalize(&raw)
    }
}

impl From<Ordinal> for OrderTerm {
    fn from(a: Ordinal) -> OrderTerm {
        OrderTerm::ordinal(a)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Ord(a) => write!(f, "{a}"),
            Block::RevOrd(a) => write!(f, "rev({a})"),
            Block::Shuffle(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "0");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

pub fn term_add(a: &OrderTerm, b: &OrderTerm) -> OrderTerm {
    a.add(b)
}

pub fn term_reverse(a: &OrderTerm) -> OrderTerm {
    a.reverse()
}

pub fn term_eq(a: &OrderTerm, b: &OrderTerm) -> bool {
    a == b
}

/// The sums `⊕₀`, `⊕₁` and `⊕₂ = +_w`. Each moves an initial piece of `b` in
/// front of `a`: one point when `b` has a least element (level 0), the
/// leading ordinal block when it is finite or ω (level 1), the leading
/// ordinal block always (level 2).
pub fn wlike_sum(level: u8, a: &OrderTerm, b: &OrderTerm) -> Result<OrderTerm> {
    let (tau, rest) = b.ordinal_prefix();
    let moved = match level {
        0 => {
            if tau.is_zero() {
                return Ok(a.add(b));
            }
            let one = Ordinal::one();
            let rest = OrderTerm::ordinal(tau.left_sub(&one).expect("tau >= 1")).add(&rest);
            return Ok(OrderTerm::nat(1).add(a).add(&rest));
        }
        1 => tau.is_finite() || tau == Ordinal::omega(),
        2 => true,
        _ => return Err(Error::Domain(format!("no w-like sum of level {level}"))),
    };
    if moved {
        Ok(OrderTerm::ordinal(tau).add(a).add(&rest))
    } else {
        Ok(a.add(b))
    }
}

/// `B_s + a + B′` where `B_s` is the part of `b` before its first shuffle.
pub fn sum_s(a: &OrderTerm, b: &OrderTerm) -> OrderTerm {
    let cut = b
        .blocks
        .iter()
        .position(|x| matches!(x, Block::Shuffle(_)))
        .unwrap_or(b.blocks.len());
    b.slice(0..cut).add(a).add(&b.slice(cut..b.blocks.len()))
}

/// `(τ # γ) + A′ + B′` for `a = γ + A′`, `b = τ + B′` split at their leading
/// ordinal blocks.
pub fn sum_h(a: &OrderTerm, b: &OrderTerm) -> OrderTerm {
    let (g, a_rest) = a.ordinal_prefix();
    let (t, b_rest) = b.ordinal_prefix();
    OrderTerm::ordinal(hessenberg(&t, &g))
        .add(&a_rest)
        .add(&b_rest)
}

/// Splits `α + β*` into `(α′, n, β′)` with `α = α′ + n`.
fn wo_shape(t: &OrderTerm) -> Result<(Ordinal, u64, Ordinal)> {
    let bad = || Error::Domain(format!("{t} is not of the form a + rev(b)"));
    let (alpha, rest) = t.ordinal_prefix();
    let beta = match rest.blocks.as_slice() {
        [] => Ordinal::zero(),
        [Block::RevOrd(b)] => b.clone(),
        _ => return Err(bad()),
    };
    Ok((alpha.limit_part(), alpha.finite_part(), beta))
}

/// Extends a good ordinal sum `inner` to orders `α + β*`:
/// `(α₁′ ⊕ α₂′) + (n₁ + n₂) + (β₂′ ⊕ β₁′)*`.
pub fn wo_wostar_sum<F>(inner: F, a: &OrderTerm, b: &OrderTerm) -> Result<OrderTerm>
where
    F: Fn(&Ordinal, &Ordinal) -> Ordinal,
{
    let (a1, n1, b1) = wo_shape(a)?;
    let (a2, n2, b2) = wo_shape(b)?;
    Ok(OrderTerm::ordinal(inner(&a1, &a2))
        .add(&OrderTerm::nat(n1 + n2))
        .add(&OrderTerm::rev_ordinal(inner(&b2, &b1))))
}

/// The sum `(a, b) ↦ (s(b*, a*))*`.
pub fn reverse_combinator<F>(s: F) -> impl Fn(&OrderTerm, &OrderTerm) -> OrderTerm
where
    F: Fn(&OrderTerm, &OrderTerm) -> OrderTerm,
{
    move |a, b| s(&b.reverse(), &a.reverse()).reverse()
}
