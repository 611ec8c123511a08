//! Sum-generating classes: symbolic descriptors, membership on order terms,
//! rigidity decompositions and the sums built from them.
//!
//! Membership for the base classes is decided by shape rules on the normal
//! form. The involutions and the lattice combinators are decided from their
//! definitions by scanning a finite family of cuts of the term: every block
//! boundary, the boundaries between the additively indecomposable pieces of
//! ordinal and reversed ordinal blocks (plus one point past each infinite
//! piece), and inside shuffle blocks an irrational cut and every cut of every
//! member.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::orderterm::{Block, OrderTerm};
use crate::ordinal::Ordinal;
use crate::{Capacity, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Sgc {
    /// Only the empty order.
    Zero,
    /// Every order.
    All,
    /// Well-orders, `⟨1⟩`.
    W,
    /// Orders without a greatest element, `⟨1⟩*`.
    WStar,
    Scattered,
    /// `⟨ω^g⟩`: ordinals all of whose exponents are at least `g`.
    PrincipalOmega(Ordinal),
    /// `⟨ℚ⟩`.
    GenQ,
    /// `⟨ω, ℚ⟩`.
    GenOmegaQ,
    /// `⟨ℚ + 1⟩ = ⟨1, ℚ⟩`.
    GenQPlus1,
    Perp(Box<Sgc>),
    Dual(Box<Sgc>),
    Inverse(Box<Sgc>),
    Plus(Box<Sgc>, Box<Sgc>),
    Times(Box<Sgc>, Box<Sgc>),
}

/// Whether a class is closed under ordinal-indexed sums (left) or
/// reverse-ordinal-indexed sums (right). `Both` marks the classes that are
/// closed under either and are treated as left classes when complemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Left,
    Right,
    Both,
}

impl Chirality {
    fn flip(self) -> Chirality {
        match self {
            Chirality::Left => Chirality::Right,
            Chirality::Right => Chirality::Left,
            Chirality::Both => Chirality::Both,
        }
    }

    fn meet(self, other: Chirality) -> Option<Chirality> {
        match (self, other) {
            (Chirality::Both, x) | (x, Chirality::Both) => Some(x),
            (x, y) if x == y => Some(x),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    Dual,
    Perp,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Plus,
    Times,
    Shuffle,
}

/// The split of a term into its longest initial segment in a class and the
/// remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub left: OrderTerm,
    pub right: OrderTerm,
}

impl Sgc {
    pub fn principal(g: Ordinal) -> Sgc {
        Sgc::PrincipalOmega(g)
    }

    pub fn chirality(&self) -> Chirality {
        match self {
            Sgc::Zero | Sgc::All | Sgc::Scattered => Chirality::Both,
            Sgc::W
            | Sgc::WStar
            | Sgc::PrincipalOmega(_)
            | Sgc::GenQ
            | Sgc::GenOmegaQ
            | Sgc::GenQPlus1 => Chirality::Left,
            Sgc::Dual(c) => c.chirality(),
            Sgc::Perp(c) => match c.chirality() {
                Chirality::Both => Chirality::Right,
                x => x.flip(),
            },
            Sgc::Inverse(c) => c.chirality().flip(),
            Sgc::Plus(l, r) | Sgc::Times(l, r) => {
                l.chirality().meet(r.chirality()).unwrap_or(Chirality::Left)
            }
        }
    }

    /// Nesting depth of the descriptor.
    pub fn depth(&self) -> usize {
        match self {
            Sgc::Perp(c) | Sgc::Dual(c) | Sgc::Inverse(c) => 1 + c.depth(),
            Sgc::Plus(l, r) | Sgc::Times(l, r) => 1 + l.depth().max(r.depth()),
            _ => 0,
        }
    }

    fn as_involution(&self) -> Option<(Involution, &Sgc)> {
        match self {
            Sgc::Dual(c) => Some((Involution::Dual, c)),
            Sgc::Perp(c) => Some((Involution::Perp, c)),
            Sgc::Inverse(c) => Some((Involution::Inverse, c)),
            Sgc::WStar => Some((Involution::Dual, &Sgc::W)),
            _ => None,
        }
    }
}

impl fmt::Display for Sgc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sgc::Zero => write!(f, "zero"),
            Sgc::All => write!(f, "all"),
            Sgc::W => write!(f, "W"),
            Sgc::WStar => write!(f, "W*"),
            Sgc::Scattered => write!(f, "S"),
            Sgc::PrincipalOmega(g) => write!(f, "P({})", Ordinal::omega_pow(g.clone())),
            Sgc::GenQ => write!(f, "genQ"),
            Sgc::GenOmegaQ => write!(f, "genWQ"),
            Sgc::GenQPlus1 => write!(f, "genQ1"),
            Sgc::Perp(c) => write!(f, "perp({c})"),
            Sgc::Dual(c) => write!(f, "dual({c})"),
            Sgc::Inverse(c) => write!(f, "inv({c})"),
            Sgc::Plus(l, r) => write!(f, "plus({l},{r})"),
            Sgc::Times(l, r) => write!(f, "times({l},{r})"),
        }
    }
}

/// Composition in the Klein group generated by the three involutions;
/// `None` is the identity.
fn compose(a: Involution, b: Involution) -> Option<Involution> {
    use Involution::*;
    match (a, b) {
        (x, y) if x == y => None,
        (Dual, Perp) | (Perp, Dual) => Some(Inverse),
        (Dual, Inverse) | (Inverse, Dual) => Some(Perp),
        (Perp, Inverse) | (Inverse, Perp) => Some(Dual),
        _ => unreachable!(),
    }
}

/// Applies an involution symbolically, composing with any involution already
/// at the top of `c` and simplifying the known closed forms.
pub fn involution(kind: Involution, c: &Sgc) -> Sgc {
    if let Some((inner_kind, inner)) = c.as_involution() {
        return match compose(kind, inner_kind) {
            None => inner.clone(),
            Some(k) => involution(k, inner),
        };
    }
    match (kind, c) {
        (Involution::Dual, Sgc::W) => Sgc::WStar,
        (Involution::Inverse, Sgc::Scattered) => Sgc::Scattered,
        (Involution::Dual | Involution::Perp, Sgc::Zero) => Sgc::All,
        (Involution::Dual | Involution::Perp, Sgc::All) => Sgc::Zero,
        (Involution::Inverse, Sgc::Zero | Sgc::All) => c.clone(),
        (Involution::Dual, _) => Sgc::Dual(Box::new(c.clone())),
        (Involution::Perp, _) => Sgc::Perp(Box::new(c.clone())),
        (Involution::Inverse, _) => Sgc::Inverse(Box::new(c.clone())),
    }
}

pub fn lattice_op(kind: LatticeOp, l: &Sgc, r: &Sgc) -> Result<Sgc> {
    if let (Sgc::PrincipalOmega(a), Sgc::PrincipalOmega(b)) = (l, r) {
        let g = match kind {
            LatticeOp::Plus => a.min(b),
            LatticeOp::Times | LatticeOp::Shuffle => a.max(b),
        };
        return Ok(Sgc::PrincipalOmega(g.clone()));
    }
    if l.chirality().meet(r.chirality()).is_none() {
        return Err(Error::Domain(format!(
            "{l} and {r} have different chirality"
        )));
    }
    match kind {
        LatticeOp::Plus => Ok(Sgc::Plus(Box::new(l.clone()), Box::new(r.clone()))),
        LatticeOp::Times => Ok(Sgc::Times(Box::new(l.clone()), Box::new(r.clone()))),
        LatticeOp::Shuffle => Err(Error::Domain(
            "the shuffle sum of classes is only computed for principal classes".into(),
        )),
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Cut {
    pub prefix: OrderTerm,
    pub suffix: OrderTerm,
}

/// Internal split points of an ordinal: boundaries between its expanded
/// pieces, and one past the start of every infinite piece.
fn split_points(a: &Ordinal) -> Vec<Ordinal> {
    let pieces = a.expanded();
    let mut out = Vec::new();
    let mut acc = Ordinal::zero();
    for p in &pieces {
        if !p.is_finite() {
            out.push(acc.add(&Ordinal::one()));
        }
        acc = acc.add(p);
        out.push(acc.clone());
    }
    out.retain(|h| !h.is_zero() && h < a);
    out.sort();
    out.dedup();
    out
}

/// Cuts in left-to-right order, from `(∅, t)` to `(t, ∅)`.
pub(crate) fn ordered_cuts(t: &OrderTerm) -> Vec<Cut> {
    let blocks = t.blocks();
    let n = blocks.len();
    let mut out = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let before = t.slice(0..i);
        let after = t.slice(i + 1..n);
        out.push(Cut {
            prefix: before.clone(),
            suffix: t.slice(i..n),
        });
        match b {
            Block::Ord(a) => {
                for h in split_points(a) {
                    out.push(Cut {
                        prefix: before.add(&OrderTerm::ordinal(h.clone())),
                        suffix: OrderTerm::ordinal(a.left_sub(&h).expect("h < a")).add(&after),
                    });
                }
            }
            Block::RevOrd(a) => {
                for h in split_points(a).into_iter().rev() {
                    out.push(Cut {
                        prefix: before.add(&OrderTerm::rev_ordinal(a.left_sub(&h).expect("h < a"))),
                        suffix: OrderTerm::rev_ordinal(h).add(&after),
                    });
                }
            }
            Block::Shuffle(_) => {}
        }
    }
    out.push(Cut {
        prefix: t.clone(),
        suffix: OrderTerm::empty(),
    });
    out
}

/// Ordered cuts plus representative cuts inside shuffle blocks.
pub(crate) fn all_cuts(t: &OrderTerm) -> Vec<Cut> {
    let mut out = ordered_cuts(t);
    let blocks = t.blocks();
    for (i, b) in blocks.iter().enumerate() {
        let Block::Shuffle(s) = b else { continue };
        let shuffle = t.slice(i..i + 1);
        let left = t.slice(0..i).add(&shuffle);
        let right = shuffle.add(&t.slice(i + 1..blocks.len()));
        out.push(Cut {
            prefix: left.clone(),
            suffix: right.clone(),
        });
        for m in s.members() {
            for c in ordered_cuts(m) {
                out.push(Cut {
                    prefix: left.add(&c.prefix),
                    suffix: c.suffix.add(&right),
                });
            }
        }
    }
    out
}

fn is_gen_q(t: &OrderTerm) -> bool {
    let q = OrderTerm::rationals();
    t.is_empty() || *t == q || *t == OrderTerm::nat(1).add(&q)
}

fn is_gen_omega_q(t: &OrderTerm) -> bool {
    let b = t.blocks();
    b.iter().enumerate().all(|(i, blk)| match blk {
        Block::Ord(a) => {
            let next_q = matches!(b.get(i + 1), Some(Block::Shuffle(s)) if s.is_rationals());
            a.finite_part() == 0 || (a.finite_part() == 1 && next_q)
        }
        Block::Shuffle(s) => s.is_rationals(),
        Block::RevOrd(_) => false,
    })
}

fn is_gen_q_plus_1(t: &OrderTerm) -> bool {
    t.blocks().iter().all(|b| match b {
        Block::Ord(_) => true,
        Block::Shuffle(s) => s.is_rationals(),
        Block::RevOrd(_) => false,
    })
}

struct Decider {
    plus_memo: HashMap<(Sgc, OrderTerm), bool>,
    /// `Plus` queries on the current search path. A cut can leave a suffix
    /// of the same type as the whole, so the search would otherwise loop.
    pending: HashSet<(Sgc, OrderTerm)>,
    /// Set when a query answered `false` because it was pending.
    hit_pending: bool,
}

impl Decider {
    fn new() -> Decider {
        Decider {
            plus_memo: HashMap::new(),
            pending: HashSet::new(),
            hit_pending: false,
        }
    }

    fn member(&mut self, c: &Sgc, t: &OrderTerm) -> bool {
        match c {
            Sgc::Zero => t.is_empty(),
            Sgc::All => true,
            Sgc::W => t.is_ordinal(),
            Sgc::WStar => !t.has_greatest(),
            Sgc::Scattered => t.is_scattered(),
            Sgc::PrincipalOmega(g) => t.as_ordinal().is_some_and(|a| a.exponents_at_least(g)),
            Sgc::GenQ => is_gen_q(t),
            Sgc::GenOmegaQ => is_gen_omega_q(t),
            Sgc::GenQPlus1 => is_gen_q_plus_1(t),
            Sgc::Perp(inner) => !self.has_segment_in(inner, t),
            Sgc::Dual(inner) => !self.has_segment_in(inner, &t.reverse()),
            Sgc::Inverse(inner) => self.member(inner, &t.reverse()),
            Sgc::Times(l, r) => self.member(l, t) && self.member(r, t),
            Sgc::Plus(_, _) => self.plus_member(c, t),
        }
    }

    /// Whether `t` has a non-empty initial segment in `c` (a final segment
    /// when `c` is a right class).
    fn has_segment_in(&mut self, c: &Sgc, t: &OrderTerm) -> bool {
        let right = c.chirality() == Chirality::Right;
        all_cuts(t).into_iter().any(|cut| {
            let seg = if right { cut.suffix } else { cut.prefix };
            !seg.is_empty() && self.member(c, &seg)
        })
    }

    /// Finite sums of pieces from either side of a `Plus` descriptor.
    fn plus_member(&mut self, c: &Sgc, t: &OrderTerm) -> bool {
        let Sgc::Plus(l, r) = c else { unreachable!() };
        if t.is_empty() {
            return true;
        }
        let key = (c.clone(), t.clone());
        if let Some(&hit) = self.plus_memo.get(&key) {
            return hit;
        }
        if self.pending.contains(&key) {
            self.hit_pending = true;
            return false;
        }
        self.pending.insert(key.clone());
        let outer_hit = std::mem::replace(&mut self.hit_pending, false);
        let mut found = self.member(l, t) || self.member(r, t);
        if !found {
            for cut in ordered_cuts(t) {
                if cut.prefix.is_empty() || cut.suffix.is_empty() {
                    continue;
                }
                let piece = self.member(l, &cut.prefix) || self.member(r, &cut.prefix);
                if piece && self.plus_member(c, &cut.suffix) {
                    found = true;
                    break;
                }
            }
        }
        self.pending.remove(&key);
        // A negative answer that leaned on a pending query may change once
        // that query resolves, so only settled answers are kept.
        if found || !self.hit_pending {
            self.plus_memo.insert(key, found);
        }
        self.hit_pending |= outer_hit;
        found
    }
}

fn check_depth(c: &Sgc, cap: &Capacity) -> Result<()> {
    if c.depth() > cap.search_depth {
        return Err(Error::Capacity(format!(
            "descriptor {c} nests deeper than {}",
            cap.search_depth
        )));
    }
    Ok(())
}

pub fn membership(c: &Sgc, t: &OrderTerm, cap: &Capacity) -> Result<bool> {
    check_depth(c, cap)?;
    Ok(Decider::new().member(c, t))
}

/// Longest initial segment of `t` in the left class `c`, and the remainder.
pub fn decompose(c: &Sgc, t: &OrderTerm, cap: &Capacity) -> Result<Decomposition> {
    check_depth(c, cap)?;
    if c.chirality() == Chirality::Right {
        return Err(Error::Domain(format!("{c} is a right class")));
    }
    let mut d = Decider::new();
    let cut = ordered_cuts(t)
        .into_iter()
        .rev()
        .find(|cut| d.member(c, &cut.prefix))
        .expect("every class contains the empty order");
    Ok(Decomposition {
        left: cut.prefix,
        right: cut.suffix,
    })
}

/// `B_L + a + B_R` over the `c`-decomposition of `b`.
pub fn simple_sum(c: &Sgc, a: &OrderTerm, b: &OrderTerm, cap: &Capacity) -> Result<OrderTerm> {
    let d = decompose(c, b, cap)?;
    Ok(d.left.add(a).add(&d.right))
}

/// The sum `(a, b) ↦ inner(A_L, B_L) + A_R + B_R` over `c`-decompositions.
pub fn sgc_extend<'a, F>(
    c: &'a Sgc,
    inner: F,
    cap: &'a Capacity,
) -> impl Fn(&OrderTerm, &OrderTerm) -> Result<OrderTerm> + 'a
where
    F: Fn(&OrderTerm, &OrderTerm) -> OrderTerm + 'a,
{
    move |a, b| {
        let da = decompose(c, a, cap)?;
        let db = decompose(c, b, cap)?;
        Ok(inner(&da.left, &db.left).add(&da.right).add(&db.right))
    }
}

/// A pair `(x, y)` with `simple_sum(c, x, y) ≠ simple_sum(c, y, x)`.
pub fn commutativity_witness(c: &Sgc, cap: &Capacity) -> Result<(OrderTerm, OrderTerm)> {
    let one = OrderTerm::nat(1);
    let w = OrderTerm::omega();
    let ws = OrderTerm::rev_ordinal(Ordinal::omega());
    let mut candidates = Vec::new();
    if membership(c, &ws, cap)? {
        candidates.push((ws.clone(), one.clone()));
    }
    candidates.push((one.clone(), w.clone()));
    candidates.push((ws.clone(), one.clone()));
    candidates.push((w, one.clone()));
    candidates.push((one, ws));
    for (x, y) in candidates {
        if simple_sum(c, &x, &y, cap)? != simple_sum(c, &y, &x, cap)? {
            return Ok((x, y));
        }
    }
    Err(Error::Domain(format!(
        "no commutativity witness found for {c}"
    )))
}
