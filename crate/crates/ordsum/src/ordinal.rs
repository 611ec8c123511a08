//! Ordinals below ε₀ in hereditary Cantor normal form and the generalized
//! ordinal sums.

use std::fmt;
use std::ops::Add;

use crate::{Error, Result};

/// An ordinal `ω^e₁·k₁ + … + ω^eₙ·kₙ` with `e₁ > … > eₙ` and every `kᵢ ≥ 1`.
///
/// The derived ordering compares the term lists lexicographically, which is
/// exactly the ordinal order on normal forms.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Ordinal {
    terms: Vec<(Ordinal, u64)>,
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Ordinal {
        Ordinal::term(Ordinal::zero(), n)
    }

    pub fn omega() -> Ordinal {
        Ordinal::term(Ordinal::one(), 1)
    }

    /// `ω^e`.
    pub fn omega_pow(e: Ordinal) -> Ordinal {
        Ordinal::term(e, 1)
    }

    /// `ω^e·k`; zero when `k = 0`.
    pub fn term(e: Ordinal, k: u64) -> Ordinal {
        if k == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![(e, k)],
            }
        }
    }

    /// `ω^n·k` for a natural exponent.
    pub fn wk(n: u64, k: u64) -> Ordinal {
        Ordinal::term(Ordinal::nat(n), k)
    }

    /// Sums `ω^e·k` terms left to right with ordinal addition, so any
    /// sequence of terms is accepted.
    pub fn from_terms<I: IntoIterator<Item = (Ordinal, u64)>>(terms: I) -> Ordinal {
        terms
            .into_iter()
            .fold(Ordinal::zero(), |acc, (e, k)| acc.add(&Ordinal::term(e, k)))
    }

    pub fn terms(&self) -> &[(Ordinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, k)] if e.is_zero() => Some(*k),
            _ => None,
        }
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|(e, _)| e)
    }

    pub fn leading_coefficient(&self) -> u64 {
        self.terms.first().map_or(0, |(_, k)| *k)
    }

    /// Everything after the leading term.
    pub fn tail(&self) -> Ordinal {
        Ordinal {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// The finite part `n` in `α = α′ + n` with `α′` a limit or zero.
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some((e, k)) if e.is_zero() => *k,
            _ => 0,
        }
    }

    /// The limit-or-zero part `α′` in `α = α′ + n`.
    pub fn limit_part(&self) -> Ordinal {
        let mut terms = self.terms.clone();
        if matches!(terms.last(), Some((e, _)) if e.is_zero()) {
            terms.pop();
        }
        Ordinal { terms }
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && self.finite_part() == 0
    }

    /// Largest exponent when it is a natural number.
    pub fn degree(&self) -> Option<u64> {
        match self.leading_exponent() {
            None => Some(0),
            Some(e) => e.as_nat(),
        }
    }

    /// True when every exponent in the normal form is at least `g`.
    pub fn exponents_at_least(&self, g: &Ordinal) -> bool {
        self.terms.iter().all(|(e, _)| e >= g)
    }

    /// The additively indecomposable pieces `ω^e`, in order, each repeated by
    /// its coefficient.
    pub fn expanded(&self) -> Vec<Ordinal> {
        let mut out = Vec::new();
        for (e, k) in &self.terms {
            for _ in 0..*k {
                out.push(Ordinal::omega_pow(e.clone()));
            }
        }
        out
    }

    /// Sum of expanded pieces: the prefix sums `P₀ = 0, P₁, …, Pₘ = α`.
    pub fn expanded_prefixes(&self) -> Vec<Ordinal> {
        let mut out = vec![Ordinal::zero()];
        let mut acc = Ordinal::zero();
        for p in self.expanded() {
            acc = acc.add(&p);
            out.push(acc.clone());
        }
        out
    }

    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some((e, _)) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(Ordinal, u64)> = self
            .terms
            .iter()
            .take_while(|(x, _)| x > e)
            .cloned()
            .collect();
        let carry = self
            .terms
            .get(terms.len())
            .filter(|(x, _)| x == e)
            .map_or(0, |(_, k)| *k);
        let mut rest = other.terms.iter();
        if let Some((e, k)) = rest.next() {
            terms.push((e.clone(), k + carry));
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// The unique `x` with `a + x = self`, when `a ≤ self`.
    pub fn left_sub(&self, a: &Ordinal) -> Option<Ordinal> {
        if a > self {
            return None;
        }
        for (i, (ea, ka)) in a.terms.iter().enumerate() {
            let (es, ks) = &self.terms[i];
            if ea == es && ka == ks {
                continue;
            }
            let mut terms = Vec::new();
            if ea == es {
                terms.push((es.clone(), ks - ka));
            } else {
                terms.push((es.clone(), *ks));
            }
            terms.extend(self.terms[i + 1..].iter().cloned());
            return Some(Ordinal { terms });
        }
        Some(Ordinal {
            terms: self.terms[a.terms.len()..].to_vec(),
        })
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Ordinal {
        Ordinal::nat(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{k}")?;
                continue;
            }
            write!(f, "w")?;
            if *e != Ordinal::one() {
                if e.is_finite() || *e == Ordinal::omega() {
                    write!(f, "^{e}")?;
                } else {
                    write!(f, "^({e})")?;
                }
            }
            if *k > 1 {
                write!(f, "*{k}")?;
            }
        }
        Ok(())
    }
}

/// Standard ordinal addition.
pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a.add(b)
}

pub fn ord_cmp(a: &Ordinal, b: &Ordinal) -> std::cmp::Ordering {
    a.cmp(b)
}

fn merge_terms(a: &Ordinal, b: &Ordinal, f: impl Fn(&Ordinal, u64, u64) -> u64) -> Ordinal {
    let mut exps: Vec<&Ordinal> = a.terms.iter().chain(&b.terms).map(|(e, _)| e).collect();
    exps.sort_by(|x, y| y.cmp(x));
    exps.dedup();
    let coef =
        |o: &Ordinal, e: &Ordinal| o.terms.iter().find(|(x, _)| x == e).map_or(0, |(_, k)| *k);
    let terms = exps
        .into_iter()
        .map(|e| (e.clone(), f(e, coef(a, e), coef(b, e))))
        .filter(|(_, k)| *k > 0)
        .collect();
    Ordinal { terms }
}

/// Hessenberg natural sum: coefficients add exponent-wise.
pub fn hessenberg(a: &Ordinal, b: &Ordinal) -> Ordinal {
    merge_terms(a, b, |_, x, y| x + y)
}

/// Per-exponent maximum on the infinite part, sum of the finite parts.
pub fn lcm_sum(a: &Ordinal, b: &Ordinal) -> Ordinal {
    merge_terms(a, b, |e, x, y| if e.is_zero() { x + y } else { x.max(y) })
}

/// Dynamic sum: the larger leading exponent wins outright, equal leading
/// exponents keep the larger coefficient and recurse on the tails.
pub fn dynamic_sum(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let (Some((ea, ka)), Some((eb, kb))) = (a.terms.first(), b.terms.first()) else {
        return if a.is_zero() { b.clone() } else { a.clone() };
    };
    if ea != eb {
        return if ea > eb { a.clone() } else { b.clone() };
    }
    if ea.is_zero() {
        return Ordinal::nat(ka + kb);
    }
    Ordinal::term(ea.clone(), *ka.max(kb)).add(&dynamic_sum(&a.tail(), &b.tail()))
}

/// With `a = ω·a′ + n_a`, `b = ω·b′ + n_b`: `max(a, b)` when `a′ ≠ b′`,
/// otherwise `a + n_b`.
pub fn min_sum(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.limit_part() != b.limit_part() {
        a.max(b).clone()
    } else {
        a.add(&Ordinal::nat(b.finite_part()))
    }
}

/// The larger leading exponent wins outright, equal leading exponents add
/// coefficients and recurse on the tails.
pub fn fsplit_sum(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let (Some((ea, ka)), Some((eb, kb))) = (a.terms.first(), b.terms.first()) else {
        return if a.is_zero() { b.clone() } else { a.clone() };
    };
    if ea != eb {
        return if ea > eb { a.clone() } else { b.clone() };
    }
    Ordinal::term(ea.clone(), ka + kb).add(&fsplit_sum(&a.tail(), &b.tail()))
}

pub fn is_additively_indecomposable(a: &Ordinal) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::Domain(
            "additive indecomposability is defined for non-zero ordinals".into(),
        ));
    }
    Ok(matches!(a.terms.as_slice(), [(_, 1)]))
}

/// A named binary operation on ordinals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdinalSum {
    Usual,
    Hessenberg,
    Lcm,
    Dynamic,
    Min,
    FSplit,
}

impl OrdinalSum {
    pub const GOOD: [OrdinalSum; 5] = [
        OrdinalSum::Hessenberg,
        OrdinalSum::Lcm,
        OrdinalSum::Dynamic,
        OrdinalSum::Min,
        OrdinalSum::FSplit,
    ];

    pub fn apply(self, a: &Ordinal, b: &Ordinal) -> Ordinal {
        match self {
            OrdinalSum::Usual => ord_add(a, b),
            OrdinalSum::Hessenberg => hessenberg(a, b),
            OrdinalSum::Lcm => lcm_sum(a, b),
            OrdinalSum::Dynamic => dynamic_sum(a, b),
            OrdinalSum::Min => min_sum(a, b),
            OrdinalSum::FSplit => fsplit_sum(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrdinalSum::Usual => "usual",
            OrdinalSum::Hessenberg => "hess",
            OrdinalSum::Lcm => "lcm",
            OrdinalSum::Dynamic => "dyn",
            OrdinalSum::Min => "min",
            OrdinalSum::FSplit => "fsplit",
        }
    }

    pub fn from_name(s: &str) -> Option<OrdinalSum> {
        [OrdinalSum::Usual]
            .into_iter()
            .chain(OrdinalSum::GOOD)
            .find(|op| op.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CarruthReport {
    Pass,
    /// `witness` lists the ordinals in the order they appear in the axiom:
    /// `(a, b)` for axioms 1 and 3 (`b` is 0 for axiom 3), `(a, b, c)` for
    /// axiom 2 and `(γ, α, β)` for axiom 4.
    Violation {
        axiom: u8,
        witness: Vec<Ordinal>,
    },
}

/// Checks commutativity, associativity, right identity and strict
/// monotonicity (`γ ⊕ α > γ ⊕ β` iff `α > β`) on the sample. Axiom 4 is
/// scanned with γ descending, then α and β ascending.
pub fn carruth_check<F>(op: F, sample: &[Ordinal]) -> CarruthReport
where
    F: Fn(&Ordinal, &Ordinal) -> Ordinal,
{
    let mut s = sample.to_vec();
    s.sort();
    s.dedup();
    let violation = |axiom, witness: &[&Ordinal]| CarruthReport::Violation {
        axiom,
        witness: witness.iter().map(|o| (*o).clone()).collect(),
    };
    for a in &s {
        for b in &s {
            if op(a, b) != op(b, a) {
                return violation(1, &[a, b]);
            }
        }
    }
    for a in &s {
        for b in &s {
            let ab = op(a, b);
            for c in &s {
                if op(&ab, c) != op(a, &op(b, c)) {
                    return violation(2, &[a, b, c]);
                }
            }
        }
    }
    let zero = Ordinal::zero();
    for a in &s {
        if op(a, &zero) != *a {
            return violation(3, &[a, &zero]);
        }
    }
    for g in s.iter().rev() {
        for a in &s {
            for b in &s {
                if (op(g, a) > op(g, b)) != (a > b) {
                    return violation(4, &[g, a, b]);
                }
            }
        }
    }
    CarruthReport::Pass
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A,
    B,
    C,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::A => "A",
            Label::B => "B",
            Label::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Association {
    Left,
    Right,
}

/// Summand labels of the first `k` points of `(ω ⊕ ω) ⊕ ω` (left) or
/// `ω ⊕ (ω ⊕ ω)` (right) under the lcm sum, where a sum of two copies of ω
/// alternates positionally with the left operand first.
pub fn lcm_merge_labels(assoc: Association, k: usize) -> Vec<Label> {
    let interleave = |i: usize, left: &dyn Fn(usize) -> Label, right: &dyn Fn(usize) -> Label| {
        if i.is_multiple_of(2) {
            left(i / 2)
        } else {
            right(i / 2)
        }
    };
    let a = |_| Label::A;
    let b = |_| Label::B;
    let c = |_| Label::C;
    (0..k)
        .map(|i| match assoc {
            Association::Left => interleave(i, &|j| interleave(j, &a, &b), &c),
            Association::Right => interleave(i, &a, &|j| interleave(j, &b, &c)),
        })
        .collect()
}
