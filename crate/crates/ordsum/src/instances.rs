//! Instances of sums of two ordinals.
//!
//! An ordinal γ is an instance of a sum of α and β when γ splits into two
//! disjoint suborders of types α and β. Cutting γ into its additively
//! indecomposable pieces `ω^c`, every piece splits into two parts one of which
//! is the whole piece; for `c ≥ 1` the other part can be any smaller ordinal,
//! for `c = 0` it is empty. The enumeration peels the first piece of γ and
//! recurses on what is left of α and β.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::ordinal::{hessenberg, min_sum, Ordinal};
use crate::{Capacity, Error, Report, Result};

/// The sorted, deduplicated instance types of a sum of `pair.0` and `pair.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSet {
    pub pair: (Ordinal, Ordinal),
    pub types: Vec<Ordinal>,
}

impl InstanceSet {
    pub fn contains(&self, g: &Ordinal) -> bool {
        self.types.binary_search(g).is_ok()
    }

    pub fn min(&self) -> &Ordinal {
        &self.types[0]
    }

    pub fn max(&self) -> &Ordinal {
        &self.types[self.types.len() - 1]
    }
}

fn check_capacity(a: &Ordinal, cap: &Capacity) -> Result<()> {
    for (e, k) in a.terms() {
        let fits = e.as_nat().is_some_and(|n| n <= cap.max_exponent) && *k <= cap.max_coefficient;
        if !fits {
            return Err(Error::Capacity(format!(
                "{a} is outside the enumeration bound (exponents <= {}, coefficients <= {})",
                cap.max_exponent, cap.max_coefficient
            )));
        }
    }
    Ok(())
}

type Memo = HashMap<(Ordinal, Ordinal, u64), BTreeSet<Ordinal>>;

/// Tails `-Pⱼ + x` of `x` over the prefix sums `Pⱼ` of its expanded normal
/// form with `Pⱼ ≤ p` (or `Pⱼ < p` when `strict`).
fn tails(x: &Ordinal, p: &Ordinal, strict: bool) -> Vec<Ordinal> {
    x.expanded_prefixes()
        .into_iter()
        .filter(|pj| if strict { pj < p } else { pj <= p })
        .map(|pj| x.left_sub(&pj).expect("prefix sum"))
        .collect()
}

fn instances_rec(a: &Ordinal, b: &Ordinal, cap: u64, memo: &mut Memo) -> BTreeSet<Ordinal> {
    if a.is_zero() && b.is_zero() {
        return BTreeSet::from([Ordinal::zero()]);
    }
    let bound = Ordinal::wk(cap + 1, 1);
    if *a >= bound || *b >= bound {
        return BTreeSet::new();
    }
    let key = (a.clone(), b.clone(), cap);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut out = BTreeSet::new();
    let one = Ordinal::one();
    if let Some(a2) = a.left_sub(&one) {
        out.extend(instances_rec(&a2, b, 0, memo).iter().map(|g| one.add(g)));
    }
    if let Some(b2) = b.left_sub(&one) {
        out.extend(instances_rec(a, &b2, 0, memo).iter().map(|g| one.add(g)));
    }
    for c in 1..=cap {
        let p = Ordinal::wk(c, 1);
        if let Some(a2) = a.left_sub(&p) {
            for b2 in tails(b, &p, false) {
                out.extend(instances_rec(&a2, &b2, c, memo).iter().map(|g| p.add(g)));
            }
        }
        if let Some(b2) = b.left_sub(&p) {
            for a2 in tails(a, &p, true) {
                out.extend(instances_rec(&a2, &b2, c, memo).iter().map(|g| p.add(g)));
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

/// All isomorphism types of instances of a sum of `a` and `b`.
pub fn enumerate_instances(a: &Ordinal, b: &Ordinal, cap: &Capacity) -> Result<InstanceSet> {
    check_capacity(a, cap)?;
    check_capacity(b, cap)?;
    let top = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    let types = instances_rec(a, b, top, &mut Memo::new())
        .into_iter()
        .collect();
    Ok(InstanceSet {
        pair: (a.clone(), b.clone()),
        types,
    })
}

/// Which summand owns the ω-copy of a result slot; the other summand places
/// `n` points inside the slot, ahead of its cofinal part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlotFill {
    LeftOmega(u64),
    RightOmega(u64),
    BothOmega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A realization of `ω·k + r` as a merge of two ordinals of degree at most
/// one: one fill per ω-slot, then the owner of each trailing point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergePlan {
    pub slots: Vec<SlotFill>,
    pub units: Vec<Side>,
}

impl MergePlan {
    pub fn result(&self) -> Ordinal {
        Ordinal::wk(1, self.slots.len() as u64).add(&Ordinal::nat(self.units.len() as u64))
    }
}

impl fmt::Display for MergePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.slots {
            match s {
                SlotFill::LeftOmega(n) => write!(f, "[w|{n}]")?,
                SlotFill::RightOmega(n) => write!(f, "[{n}|w]")?,
                SlotFill::BothOmega => write!(f, "[w|w]")?,
            }
        }
        for u in &self.units {
            f.write_str(match u {
                Side::Left => "a",
                Side::Right => "b",
            })?;
        }
        Ok(())
    }
}

/// `ω·q + r` written as `(q, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Qr {
    q: u64,
    r: u64,
}

impl Qr {
    fn of(a: &Ordinal) -> Option<Qr> {
        match a.degree() {
            Some(d) if d <= 1 => {
                let q = a
                    .terms()
                    .iter()
                    .find(|(e, _)| *e == Ordinal::one())
                    .map_or(0, |t| t.1);
                Some(Qr {
                    q,
                    r: a.finite_part(),
                })
            }
            _ => None,
        }
    }

    /// Appends `n` points then optionally a copy of ω; points before a later ω
    /// are forgotten once the target quotient is not yet reached.
    fn push(self, n: u64, omega: bool, target: Qr) -> Option<Qr> {
        let mut s = Qr {
            q: self.q,
            r: self.r + n,
        };
        if omega {
            s = Qr { q: s.q + 1, r: 0 };
        }
        if s.q > target.q || (s.q == target.q && s.r > target.r) {
            return None;
        }
        if s.q < target.q {
            s.r = 0;
        }
        Some(s)
    }
}

struct PlanSearch {
    ta: Qr,
    tb: Qr,
    k: usize,
    r: u64,
    dead: std::collections::HashSet<(usize, Qr, Qr)>,
}

impl PlanSearch {
    fn fills(&self) -> Vec<SlotFill> {
        let mut v = vec![SlotFill::BothOmega];
        v.extend((0..=self.tb.r).map(SlotFill::LeftOmega));
        v.extend((0..=self.ta.r).map(SlotFill::RightOmega));
        v
    }

    fn search(&mut self, slot: usize, a: Qr, b: Qr, acc: &mut Vec<SlotFill>) -> Option<Vec<Side>> {
        if slot == self.k {
            if a.q != self.ta.q || b.q != self.tb.q {
                return None;
            }
            let need_a = self.ta.r.checked_sub(a.r)?;
            let need_b = self.tb.r.checked_sub(b.r)?;
            if need_a + need_b != self.r {
                return None;
            }
            let mut units = vec![Side::Left; need_a as usize];
            units.extend(vec![Side::Right; need_b as usize]);
            return Some(units);
        }
        if self.dead.contains(&(slot, a, b)) {
            return None;
        }
        for fill in self.fills() {
            let next = match fill {
                SlotFill::BothOmega => a.push(0, true, self.ta).zip(b.push(0, true, self.tb)),
                SlotFill::LeftOmega(n) => a.push(0, true, self.ta).zip(b.push(n, false, self.tb)),
                SlotFill::RightOmega(n) => a.push(n, false, self.ta).zip(b.push(0, true, self.tb)),
            };
            let Some((a2, b2)) = next else { continue };
            acc.push(fill);
            if let Some(units) = self.search(slot + 1, a2, b2, acc) {
                return Some(units);
            }
            acc.pop();
        }
        self.dead.insert((slot, a, b));
        None
    }
}

/// Exhaustive search for merge plans of `a` and `b` (both of degree at most
/// one). Returns one plan for every reachable result, sorted by result.
pub fn merge_plans(a: &Ordinal, b: &Ordinal) -> Result<Vec<MergePlan>> {
    let (Some(ta), Some(tb)) = (Qr::of(a), Qr::of(b)) else {
        return Err(Error::Domain("merge plans need ordinals below w^2".into()));
    };
    let mut plans = Vec::new();
    for k in 0..=(ta.q + tb.q) {
        for r in 0..=(ta.r + tb.r) {
            let mut s = PlanSearch {
                ta,
                tb,
                k: k as usize,
                r,
                dead: Default::default(),
            };
            let mut slots = Vec::new();
            let zero = Qr { q: 0, r: 0 };
            if let Some(units) = s.search(0, zero, zero, &mut slots) {
                plans.push(MergePlan { slots, units });
            }
        }
    }
    Ok(plans)
}

/// Instance set by [`merge_plans`]; agrees with [`enumerate_instances`] below ω².
pub fn brute_force_instances(a: &Ordinal, b: &Ordinal) -> Result<BTreeSet<Ordinal>> {
    Ok(merge_plans(a, b)?.iter().map(MergePlan::result).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub set: InstanceSet,
    pub lower: Ordinal,
    pub upper: Ordinal,
    pub lower_attained: bool,
    pub upper_attained: bool,
    pub within: bool,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.lower_attained && self.upper_attained && self.within
    }
}

/// Checks `min_sum(a, b) ≤ γ ≤ hessenberg(a, b)` on every instance γ and that
/// both bounds occur.
pub fn check_bounds(a: &Ordinal, b: &Ordinal, cap: &Capacity) -> Result<BoundsReport> {
    let set = enumerate_instances(a, b, cap)?;
    let lower = min_sum(a, b);
    let upper = hessenberg(a, b);
    let within = set.types.iter().all(|g| lower <= *g && *g <= upper);
    Ok(BoundsReport {
        lower_attained: set.contains(&lower),
        upper_attained: set.contains(&upper),
        within,
        set,
        lower,
        upper,
    })
}

/// For every pair whose instance set contains `g`, one of the pair is `g`.
pub fn strong_indecomposable_check(
    g: &Ordinal,
    pairs: &[(Ordinal, Ordinal)],
    cap: &Capacity,
) -> Result<Report> {
    if !crate::ordinal::is_additively_indecomposable(g)? {
        return Err(Error::Domain(format!(
            "{g} is not additively indecomposable"
        )));
    }
    let mut report = Report::default();
    for (a, b) in pairs {
        let set = enumerate_instances(a, b, cap)?;
        let ok = !set.contains(g) || a == g || b == g;
        report.check(ok, || format!("{g} is an instance of ({a}, {b})"));
    }
    Ok(report)
}
