//! Sifted sums over finite decreasing filtrations of left classes.

use std::fmt;

use crate::orderterm::OrderTerm;
use crate::ordinal::{hessenberg, lcm_sum, Ordinal};
use crate::sgc::{decompose, membership, Chirality, Sgc};
use crate::{Capacity, Error, Report, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelSum {
    Usual,
    Reversed,
    /// Natural sum on ordinal parts, usual sum otherwise.
    Hessenberg,
    /// lcm sum on ordinal parts, usual sum otherwise.
    InterleaveMax,
}

impl LevelSum {
    pub const ALL: [LevelSum; 4] = [
        LevelSum::Usual,
        LevelSum::Reversed,
        LevelSum::Hessenberg,
        LevelSum::InterleaveMax,
    ];

    pub fn apply(self, a: &OrderTerm, b: &OrderTerm) -> OrderTerm {
        let on_ordinals =
            |f: fn(&Ordinal, &Ordinal) -> Ordinal| match (a.as_ordinal(), b.as_ordinal()) {
                (Some(x), Some(y)) => OrderTerm::ordinal(f(&x, &y)),
                _ => a.add(b),
            };
        match self {
            LevelSum::Usual => a.add(b),
            LevelSum::Reversed => b.add(a),
            LevelSum::Hessenberg => on_ordinals(hessenberg),
            LevelSum::InterleaveMax => on_ordinals(lcm_sum),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LevelSum::Usual => "usual",
            LevelSum::Reversed => "reversed",
            LevelSum::Hessenberg => "hess",
            LevelSum::InterleaveMax => "lcm",
        }
    }

    pub fn from_name(s: &str) -> Option<LevelSum> {
        match s {
            "usual" | "+" => Some(LevelSum::Usual),
            "reversed" | "rev" => Some(LevelSum::Reversed),
            "hess" | "hessenberg" => Some(LevelSum::Hessenberg),
            "lcm" | "interleave-max" => Some(LevelSum::InterleaveMax),
            _ => None,
        }
    }
}

impl fmt::Display for LevelSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Levels `𝒞₀ ⊇ 𝒞₁ ⊇ … ⊇ 𝒞ₙ`, each with its own sum. Level 0 comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationScheme {
    levels: Vec<(Sgc, LevelSum)>,
}

/// Parts of a term per level (index = level) and the part outside `𝒞₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelParts {
    pub parts: Vec<OrderTerm>,
    pub residue: OrderTerm,
}

impl LevelParts {
    /// The parts in descending level order, without the residue.
    pub fn inner(&self) -> OrderTerm {
        self.parts
            .iter()
            .rev()
            .fold(OrderTerm::empty(), |acc, p| acc.add(p))
    }
}

impl FiltrationScheme {
    pub fn new(levels: Vec<(Sgc, LevelSum)>) -> Result<FiltrationScheme> {
        if levels.is_empty() {
            return Err(Error::Domain("a scheme needs at least one level".into()));
        }
        if let Some((c, _)) = levels
            .iter()
            .find(|(c, _)| c.chirality() == Chirality::Right)
        {
            return Err(Error::Domain(format!("level class {c} is a right class")));
        }
        Ok(FiltrationScheme { levels })
    }

    /// Levels `⟨ω^k⟩` for `k = 0..=n`; the top level adds by the natural sum
    /// so ordinals of degree above `n` are still summed naturally.
    pub fn hessenberg(n: u64) -> FiltrationScheme {
        let levels = (0..=n)
            .map(|k| {
                let sum = if k == n {
                    LevelSum::Hessenberg
                } else {
                    LevelSum::Usual
                };
                (Sgc::PrincipalOmega(Ordinal::nat(k)), sum)
            })
            .collect();
        FiltrationScheme { levels }
    }

    pub fn single(c: Sgc, sum: LevelSum) -> Result<FiltrationScheme> {
        FiltrationScheme::new(vec![(c, sum)])
    }

    pub fn levels(&self) -> &[(Sgc, LevelSum)] {
        &self.levels
    }

    /// Sampled check that each level class is contained in the previous one.
    pub fn check_nested(&self, sample: &[OrderTerm], cap: &Capacity) -> Result<Report> {
        let mut report = Report::default();
        for w in self.levels.windows(2) {
            let (outer, inner) = (&w[0].0, &w[1].0);
            for t in sample {
                let ok = !membership(inner, t, cap)? || membership(outer, t, cap)?;
                report.check(ok, || format!("{t} is in {inner} but not in {outer}"));
            }
        }
        Ok(report)
    }
}

impl fmt::Display for FiltrationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, s)) in self.levels.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} | {s}")?;
        }
        Ok(())
    }
}

pub fn level_parts(s: &FiltrationScheme, t: &OrderTerm, cap: &Capacity) -> Result<LevelParts> {
    let d0 = decompose(&s.levels[0].0, t, cap)?;
    let mut parts = Vec::with_capacity(s.levels.len());
    let mut prefix = d0.left;
    for (c, _) in &s.levels[1..] {
        let d = decompose(c, &prefix, cap)?;
        parts.push(d.right);
        prefix = d.left;
    }
    parts.push(prefix);
    Ok(LevelParts {
        parts,
        residue: d0.right,
    })
}

pub fn sifted_sum(
    s: &FiltrationScheme,
    a: &OrderTerm,
    b: &OrderTerm,
    cap: &Capacity,
) -> Result<OrderTerm> {
    let pa = level_parts(s, a, cap)?;
    let pb = level_parts(s, b, cap)?;
    let mut out = OrderTerm::empty();
    for (k, (_, sum)) in s.levels.iter().enumerate().rev() {
        out = out.add(&sum.apply(&pa.parts[k], &pb.parts[k]));
    }
    Ok(out.add(&pa.residue).add(&pb.residue))
}

/// Checks per pair that each level part of the sifted sum is the level sum of
/// the level parts, and that the concatenated levels stay in `𝒞₀`.
pub fn effectiveness_check(
    s: &FiltrationScheme,
    sample: &[(OrderTerm, OrderTerm)],
    cap: &Capacity,
) -> Result<Report> {
    let mut report = Report::default();
    for (a, b) in sample {
        let pa = level_parts(s, a, cap)?;
        let pb = level_parts(s, b, cap)?;
        let pr = level_parts(s, &sifted_sum(s, a, b, cap)?, cap)?;
        for (k, (_, sum)) in s.levels.iter().enumerate() {
            let expect = sum.apply(&pa.parts[k], &pb.parts[k]);
            report.check(pr.parts[k] == expect, || {
                format!(
                    "level {k} of ({a}, {b}): got {}, expected {expect}",
                    pr.parts[k]
                )
            });
        }
        let inner = s
            .levels
            .iter()
            .enumerate()
            .rev()
            .fold(OrderTerm::empty(), |acc, (k, (_, sum))| {
                acc.add(&sum.apply(&pa.parts[k], &pb.parts[k]))
            });
        let ok = membership(&s.levels[0].0, &inner, cap)?;
        report.check(ok, || {
            format!("inner part {inner} of ({a}, {b}) leaves level 0")
        });
    }
    Ok(report)
}
