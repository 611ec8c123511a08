//! Independent reference implementations for ordinals below ω^4, as
//! coefficient vectors indexed by exponent.
#![allow(dead_code)]

use ordsum::Ordinal;
use proptest::prelude::*;

pub const WIDTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vo(pub [u64; WIDTH]);

impl Vo {
    pub fn nat(n: u64) -> Vo {
        let mut c = [0; WIDTH];
        c[0] = n;
        Vo(c)
    }

    pub fn lead(&self) -> Option<usize> {
        (0..WIDTH).rev().find(|&i| self.0[i] > 0)
    }

    pub fn to_ordinal(self) -> Ordinal {
        Ordinal::from_terms(
            (0..WIDTH)
                .rev()
                .filter(|&i| self.0[i] > 0)
                .map(|i| (Ordinal::nat(i as u64), self.0[i])),
        )
    }

    pub fn cmp_key(&self) -> [u64; WIDTH] {
        let mut k = self.0;
        k.reverse();
        k
    }

    pub fn max(self, other: Vo) -> Vo {
        if self.cmp_key() >= other.cmp_key() {
            self
        } else {
            other
        }
    }

    /// Drops the terms at and above `e`.
    fn below(self, e: usize) -> Vo {
        let mut c = self.0;
        for x in c.iter_mut().skip(e) {
            *x = 0;
        }
        Vo(c)
    }
}

pub fn add(a: Vo, b: Vo) -> Vo {
    let Some(e) = b.lead() else { return a };
    let mut c = [0; WIDTH];
    c[e + 1..].copy_from_slice(&a.0[e + 1..]);
    c[e] = a.0[e] + b.0[e];
    c[..e].copy_from_slice(&b.0[..e]);
    Vo(c)
}

pub fn hess(a: Vo, b: Vo) -> Vo {
    Vo(std::array::from_fn(|i| a.0[i] + b.0[i]))
}

pub fn lcm(a: Vo, b: Vo) -> Vo {
    Vo(std::array::from_fn(|i| {
        if i == 0 {
            a.0[0] + b.0[0]
        } else {
            a.0[i].max(b.0[i])
        }
    }))
}

fn leading_rec(a: Vo, b: Vo, merge: fn(u64, u64) -> u64) -> Vo {
    match (a.lead(), b.lead()) {
        (None, _) => b,
        (_, None) => a,
        (Some(x), Some(y)) if x > y => a,
        (Some(x), Some(y)) if x < y => b,
        (Some(0), _) => Vo::nat(a.0[0] + b.0[0]),
        (Some(e), _) => {
            let mut rest = leading_rec(a.below(e), b.below(e), merge);
            rest.0[e] = merge(a.0[e], b.0[e]);
            rest
        }
    }
}

pub fn dynamic(a: Vo, b: Vo) -> Vo {
    leading_rec(a, b, u64::max)
}

pub fn fsplit(a: Vo, b: Vo) -> Vo {
    leading_rec(a, b, |x, y| x + y)
}

pub fn min(a: Vo, b: Vo) -> Vo {
    if a.0[1..] != b.0[1..] {
        a.max(b)
    } else {
        let mut c = a.0;
        c[0] += b.0[0];
        Vo(c)
    }
}

pub fn vo(max_coef: u64) -> impl Strategy<Value = Vo> {
    prop::array::uniform4(0..=max_coef).prop_map(Vo)
}

/// Ordinals below ω^4 with coefficients up to `max_coef`.
pub fn ordinal(max_coef: u64) -> impl Strategy<Value = Ordinal> {
    vo(max_coef).prop_map(Vo::to_ordinal)
}

/// `-x + r` for `x ≤ r`.
pub fn left_sub(r: Vo, x: Vo) -> Option<Vo> {
    if x.cmp_key() > r.cmp_key() {
        return None;
    }
    let mut out = [0; WIDTH];
    for i in (0..WIDTH).rev() {
        if x.0[i] != r.0[i] {
            out[i] = r.0[i] - x.0[i];
            out[..i].copy_from_slice(&r.0[..i]);
            break;
        }
    }
    Some(Vo(out))
}

pub fn all_vos(max_coef: u64) -> Vec<Vo> {
    let base = max_coef + 1;
    (0..base.pow(WIDTH as u32))
        .map(|x| Vo(std::array::from_fn(|i| x / base.pow(i as u32) % base)))
        .collect()
}

/// Whether `g` splits into suborders of types `a` and `b`. Each indecomposable
/// piece `ω^c` of `g` gives the whole piece to one side and an ordinal
/// `≤ ω^c` to the other; only the remainders of `a` and `b` matter.
pub fn is_instance(g: Vo, a: Vo, b: Vo) -> bool {
    let mut pieces = Vec::new();
    for c in (0..WIDTH).rev() {
        for _ in 0..g.0[c] {
            pieces.push(c);
        }
    }
    let cap = a.0.iter().chain(&b.0).copied().max().unwrap_or(0);
    let small = all_vos(cap);
    let mut memo = std::collections::HashMap::new();
    split(&pieces, 0, a, b, &small, &mut memo)
}

fn split(
    pieces: &[usize],
    i: usize,
    ra: Vo,
    rb: Vo,
    small: &[Vo],
    memo: &mut std::collections::HashMap<(usize, Vo, Vo), bool>,
) -> bool {
    if i == pieces.len() {
        return ra.lead().is_none() && rb.lead().is_none();
    }
    if let Some(&hit) = memo.get(&(i, ra, rb)) {
        return hit;
    }
    let c = pieces[i];
    let mut p = [0; WIDTH];
    p[c] = 1;
    let p = Vo(p);
    let mut found = false;
    if c == 0 {
        found = left_sub(ra, p).is_some_and(|ra2| split(pieces, i + 1, ra2, rb, small, memo))
            || left_sub(rb, p).is_some_and(|rb2| split(pieces, i + 1, ra, rb2, small, memo));
    } else {
        let others: Vec<Vo> = small
            .iter()
            .copied()
            .filter(|y| y.cmp_key() <= p.cmp_key())
            .collect();
        'outer: for red_whole in [true, false] {
            let (whole, part) = if red_whole { (ra, rb) } else { (rb, ra) };
            let Some(whole2) = left_sub(whole, p) else {
                continue;
            };
            for y in &others {
                let Some(part2) = left_sub(part, *y) else {
                    continue;
                };
                let (x, z) = if red_whole {
                    (whole2, part2)
                } else {
                    (part2, whole2)
                };
                if split(pieces, i + 1, x, z, small, memo) {
                    found = true;
                    break 'outer;
                }
            }
        }
    }
    memo.insert((i, ra, rb), found);
    found
}

pub fn shuffle_library() -> Vec<ordsum::ShuffleList> {
    use ordsum::OrderTerm as T;
    let n = T::nat;
    let ws = T::rev_ordinal(Ordinal::omega());
    [
        vec![n(1)],
        vec![n(2)],
        vec![n(1), n(2)],
        vec![n(3)],
        vec![T::omega()],
        vec![n(1), ws.clone()],
        vec![ws.clone().add(&T::omega())],
    ]
    .into_iter()
    .map(|m| ordsum::ShuffleList::new(m).unwrap())
    .collect()
}

pub fn block() -> impl Strategy<Value = ordsum::Block> {
    use ordsum::Block;
    prop_oneof![
        3 => ordinal(2).prop_map(Block::Ord),
        2 => ordinal(2).prop_map(Block::RevOrd),
        2 => prop::sample::select(shuffle_library()).prop_map(Block::Shuffle),
    ]
}

pub fn raw_blocks() -> impl Strategy<Value = Vec<ordsum::Block>> {
    prop::collection::vec(block(), 0..6)
}

pub fn term() -> impl Strategy<Value = ordsum::OrderTerm> {
    raw_blocks().prop_map(ordsum::OrderTerm::from_blocks)
}
