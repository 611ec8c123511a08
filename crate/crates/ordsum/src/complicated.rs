//! Binary-word encodings as instances of `ℚ ⊕ ℚ`, piece witnesses, good-sum
//! tables, group representations and a free-multiset sum over shuffle
//! generators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::instances::enumerate_instances;
use crate::orderterm::{Block, OrderTerm};
use crate::ordinal::Ordinal;
use crate::{Capacity, Error, Report, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord {
    pub bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> BinaryWord {
        BinaryWord { bits }
    }

    /// All words of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BinaryWord> {
        (0..1u64 << n).map(move |x| BinaryWord {
            bits: (0..n).rev().map(|i| x >> i & 1 == 1).collect(),
        })
    }
}

impl FromStr for BinaryWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<BinaryWord> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Domain(format!("'{c}' is not a binary digit"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord::new)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `ℚ(2)`, the code of 0.
pub fn q2() -> OrderTerm {
    OrderTerm::shuffle(vec![OrderTerm::nat(2)])
}

/// `ℚ(1,2)`, the code of 1.
pub fn q12() -> OrderTerm {
    OrderTerm::shuffle(vec![OrderTerm::nat(1), OrderTerm::nat(2)])
}

fn code(bit: bool) -> OrderTerm {
    if bit {
        q12()
    } else {
        q2()
    }
}

/// `ℚ + Σ (code(wᵢ) + ℚ)`.
pub fn encode_word(w: &BinaryWord) -> OrderTerm {
    let q = OrderTerm::rationals();
    w.bits
        .iter()
        .fold(q.clone(), |acc, &b| acc.add(&code(b)).add(&q))
}

pub fn decode_word(t: &OrderTerm) -> Result<BinaryWord> {
    let bad = || Error::Domain(format!("{t} is not a word encoding"));
    let q = OrderTerm::rationals();
    let (q2, q12) = (q2(), q12());
    let blocks = t.blocks();
    if blocks.len().is_multiple_of(2) {
        return Err(bad());
    }
    let mut bits = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let single = OrderTerm::from_blocks(vec![b.clone()]);
        if i % 2 == 0 {
            if single != q {
                return Err(bad());
            }
        } else if single == q2 {
            bits.push(false);
        } else if single == q12 {
            bits.push(true);
        } else {
            return Err(bad());
        }
    }
    Ok(BinaryWord { bits })
}

/// Which part of a target block a piece selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiecePart {
    Whole,
    /// Points below a fixed irrational cut of a shuffle block.
    LeftOfCut,
    RightOfCut,
    /// Second points of the 2-blocks of `ℚ(2)` or `ℚ(1,2)`.
    Successors,
    /// First points of the 2-blocks of `ℚ(2)`.
    Predecessors,
    /// First points of the 2-blocks of `ℚ(1,2)` and its 1-blocks.
    PredecessorsAndIsolated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub block: usize,
    pub part: PiecePart,
}

impl Piece {
    pub fn new(block: usize, part: PiecePart) -> Piece {
        Piece { block, part }
    }
}

/// Pieces of the target assigned to the first (red) and second (blue)
/// summand, each in increasing position.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PieceWitness {
    pub red: Vec<Piece>,
    pub blue: Vec<Piece>,
}

/// Order type of a selected piece, when the part applies to the block.
fn piece_type(block: &Block, part: PiecePart) -> Option<OrderTerm> {
    let whole = OrderTerm::from_blocks(vec![block.clone()]);
    let q = OrderTerm::rationals();
    match part {
        PiecePart::Whole => Some(whole),
        PiecePart::LeftOfCut | PiecePart::RightOfCut => {
            matches!(block, Block::Shuffle(_)).then_some(whole)
        }
        PiecePart::Successors => (whole == q2() || whole == q12()).then_some(q),
        PiecePart::Predecessors => (whole == q2()).then_some(q),
        PiecePart::PredecessorsAndIsolated => (whole == q12()).then_some(q),
    }
}

fn is_partition(parts: &[PiecePart]) -> bool {
    use PiecePart::*;
    matches!(
        parts,
        [Whole]
            | [LeftOfCut, RightOfCut]
            | [Successors, Predecessors]
            | [Successors, PredecessorsAndIsolated]
    )
}

/// Checks that the witness partitions `c` and that the red and blue pieces
/// reassemble to `a` and `b`. The error names the first failing check.
pub fn verify_piece_witness(
    a: &OrderTerm,
    b: &OrderTerm,
    c: &OrderTerm,
    wit: &PieceWitness,
) -> std::result::Result<(), String> {
    let blocks = c.blocks();
    let mut used: Vec<Vec<PiecePart>> = vec![Vec::new(); blocks.len()];
    for p in wit.red.iter().chain(&wit.blue) {
        let slot = used
            .get_mut(p.block)
            .ok_or_else(|| format!("piece at block {} lies outside the target", p.block))?;
        if slot.contains(&p.part) {
            return Err(format!("overlap at block {}", p.block));
        }
        slot.push(p.part);
    }
    for (i, parts) in used.iter_mut().enumerate() {
        if parts.is_empty() {
            return Err(format!("gap at block {i}"));
        }
        parts.sort();
        if !is_partition(parts) {
            return Err(format!("parts {parts:?} do not partition block {i}"));
        }
    }
    for (name, pieces, expect) in [("red", &wit.red, a), ("blue", &wit.blue, b)] {
        let mut got = OrderTerm::empty();
        for (k, p) in pieces.iter().enumerate() {
            if let Some(prev) = k.checked_sub(1).map(|j| pieces[j]) {
                let convex_pair = prev.block == p.block
                    && prev.part == PiecePart::LeftOfCut
                    && p.part == PiecePart::RightOfCut;
                if prev.block > p.block || (prev.block == p.block && !convex_pair) {
                    return Err(format!("{name} pieces out of order at block {}", p.block));
                }
            }
            let ty = piece_type(&blocks[p.block], p.part)
                .ok_or_else(|| format!("{:?} does not apply to block {}", p.part, p.block))?;
            got = got.add(&ty);
        }
        if got != *expect {
            return Err(format!("{name} pieces form {got}, expected {expect}"));
        }
    }
    Ok(())
}

/// Red takes the left halves of the spacers, the successors of each `ℚ(2)`
/// and the predecessors and isolated points of each `ℚ(1,2)`; blue takes the
/// rest. Both reassemble to `ℚ`.
pub fn make_word_witness(w: &BinaryWord) -> PieceWitness {
    let mut wit = PieceWitness::default();
    wit.red.push(Piece::new(0, PiecePart::LeftOfCut));
    wit.blue.push(Piece::new(0, PiecePart::RightOfCut));
    for (i, &bit) in w.bits.iter().enumerate() {
        let (code, spacer) = (2 * i + 1, 2 * i + 2);
        let (r, b) = if bit {
            (PiecePart::PredecessorsAndIsolated, PiecePart::Successors)
        } else {
            (PiecePart::Successors, PiecePart::Predecessors)
        };
        wit.red.push(Piece::new(code, r));
        wit.blue.push(Piece::new(code, b));
        wit.red.push(Piece::new(spacer, PiecePart::LeftOfCut));
        wit.blue.push(Piece::new(spacer, PiecePart::RightOfCut));
    }
    wit
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub lhs: OrderTerm,
    pub rhs: OrderTerm,
    pub result: OrderTerm,
    pub witness: Option<PieceWitness>,
}

/// A commutative sum given by rows on unordered pairs. The carrier is the set
/// of operands.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SumTable {
    pub rows: Vec<TableRow>,
}

fn key(a: &OrderTerm, b: &OrderTerm) -> (OrderTerm, OrderTerm) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl SumTable {
    pub fn new() -> SumTable {
        SumTable::default()
    }

    pub fn insert(&mut self, lhs: OrderTerm, rhs: OrderTerm, result: OrderTerm) {
        self.rows.push(TableRow {
            lhs,
            rhs,
            result,
            witness: None,
        });
    }

    pub fn carrier(&self) -> BTreeSet<OrderTerm> {
        self.rows
            .iter()
            .flat_map(|r| [r.lhs.clone(), r.rhs.clone()])
            .collect()
    }

    /// The first row for the unordered pair.
    pub fn get(&self, a: &OrderTerm, b: &OrderTerm) -> Option<&OrderTerm> {
        let k = key(a, b);
        self.rows
            .iter()
            .find(|r| key(&r.lhs, &r.rhs) == k)
            .map(|r| &r.result)
    }

    /// The sum as a function; missing pairs give the empty order.
    pub fn apply(&self, a: &OrderTerm, b: &OrderTerm) -> OrderTerm {
        self.get(a, b).cloned().unwrap_or_default()
    }
}

/// Totality and consistency of the rows, associativity on carrier triples
/// whose intermediate sums stay in the carrier, and every attached witness.
pub fn check_good_table(t: &SumTable) -> Report {
    let mut report = Report::default();
    let mut map: BTreeMap<(OrderTerm, OrderTerm), &OrderTerm> = BTreeMap::new();
    for r in &t.rows {
        let k = key(&r.lhs, &r.rhs);
        let prev = map.insert(k, &r.result);
        report.check(prev.is_none_or(|p| p == &r.result), || {
            format!("conflicting rows for ({}, {})", r.lhs, r.rhs)
        });
        if let Some(w) = &r.witness {
            let res = verify_piece_witness(&r.lhs, &r.rhs, &r.result, w);
            report.check(res.is_ok(), || {
                format!("witness for ({}, {}): {}", r.lhs, r.rhs, res.unwrap_err())
            });
        }
    }
    let carrier: Vec<OrderTerm> = t.carrier().into_iter().collect();
    for (x, y) in carrier.iter().tuple_combinations() {
        report.check(map.contains_key(&key(x, y)), || {
            format!("missing entry ({x}, {y})")
        });
    }
    for x in &carrier {
        report.check(map.contains_key(&key(x, x)), || {
            format!("missing entry ({x}, {x})")
        });
    }
    let inside = |v: &OrderTerm| carrier.binary_search(v).is_ok();
    for x in &carrier {
        for y in &carrier {
            for z in &carrier {
                let (Some(xy), Some(yz)) = (map.get(&key(x, y)), map.get(&key(y, z))) else {
                    continue;
                };
                if !inside(xy) || !inside(yz) {
                    continue;
                }
                let (Some(l), Some(r)) = (map.get(&key(xy, z)), map.get(&key(x, yz))) else {
                    continue;
                };
                report.check(l == r, || {
                    format!("({x} + {y}) + {z} = {l} but {x} + ({y} + {z}) = {r}")
                });
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiStandard {
    Usual,
    Reversed,
    Both,
    Neither,
}

impl fmt::Display for SemiStandard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SemiStandard::Usual => "usual",
            SemiStandard::Reversed => "reversed",
            SemiStandard::Both => "both",
            SemiStandard::Neither => "neither",
        })
    }
}

/// Whether `c` is `a + b`, `b + a`, both or neither.
pub fn semi_standard_classify(a: &OrderTerm, b: &OrderTerm, c: &OrderTerm) -> SemiStandard {
    match (a.add(b) == *c, b.add(a) == *c) {
        (true, true) => SemiStandard::Both,
        (true, false) => SemiStandard::Usual,
        (false, true) => SemiStandard::Reversed,
        (false, false) => SemiStandard::Neither,
    }
}

/// A finite group by multiplication table on `0..n` and an injective map into
/// order terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRep {
    table: Vec<Vec<usize>>,
    phi: Vec<OrderTerm>,
}

impl GroupRep {
    pub fn new(table: Vec<Vec<usize>>, phi: Vec<OrderTerm>) -> Result<GroupRep> {
        let n = table.len();
        let err = |m: &str| Err(Error::Domain(m.to_string()));
        if n == 0
            || phi.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return err("table and map sizes disagree");
        }
        let assoc = (0..n)
            .cartesian_product(0..n)
            .cartesian_product(0..n)
            .all(|((a, b), c)| table[table[a][b]][c] == table[a][table[b][c]]);
        let identity = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a));
        let inverses = identity.is_some_and(|e| (0..n).all(|a| (0..n).any(|b| table[a][b] == e)));
        if !assoc || !inverses {
            return err("table is not a group");
        }
        if phi.iter().duplicates().next().is_some() {
            return err("map is not injective");
        }
        Ok(GroupRep { table, phi })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize, phi: Vec<OrderTerm>) -> Result<GroupRep> {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        GroupRep::new(table, phi)
    }

    pub fn phi(&self) -> &[OrderTerm] {
        &self.phi
    }
}

/// `φ(g·h) = φ(g) ⋆ φ(h)` for all pairs.
pub fn verify_group_rep<F>(rep: &GroupRep, op: F) -> bool
where
    F: Fn(&OrderTerm, &OrderTerm) -> OrderTerm,
{
    let n = rep.table.len();
    (0..n)
        .cartesian_product(0..n)
        .all(|(g, h)| op(&rep.phi[g], &rep.phi[h]) == rep.phi[rep.table[g][h]])
}

/// Every instance of a sum of two ordinals is at least the larger one, and no
/// two distinct ordinals `e`, `a` of the sample admit instances realizing the
/// table of `ℤ/2ℤ` with identity `e`.
pub fn no_group_ordinals_check(sample: &[Ordinal], cap: &Capacity) -> Result<Report> {
    let mut report = Report::default();
    let mut sets = BTreeMap::new();
    for x in sample {
        for y in sample {
            let set = enumerate_instances(x, y, cap)?;
            let top = x.max(y);
            for g in &set.types {
                report.check(g >= top, || {
                    format!("instance {g} of ({x}, {y}) is below {top}")
                });
            }
            sets.insert((x.clone(), y.clone()), set);
        }
    }
    for e in sample {
        for a in sample {
            if e == a {
                continue;
            }
            let has =
                |x: &Ordinal, y: &Ordinal, g: &Ordinal| sets[&(x.clone(), y.clone())].contains(g);
            let group = has(e, e, e) && has(e, a, a) && has(a, e, a) && has(a, a, e);
            report.check(!group, || format!("{e} and {a} realize Z/2Z"));
        }
    }
    Ok(report)
}

/// Multisets over a fixed list of shuffle generators, encoded as
/// `ℚ + Σ (g + ℚ)` in generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMultisetSum {
    generators: Vec<OrderTerm>,
}

impl FreeMultisetSum {
    /// Rejects generators that are not single non-`ℚ` shuffle blocks, repeats,
    /// and generators whose encodings would merge under normalization.
    pub fn new(generators: Vec<OrderTerm>) -> Result<FreeMultisetSum> {
        let q = OrderTerm::rationals();
        for g in &generators {
            let ok = matches!(g.blocks(), [Block::Shuffle(_)]) && *g != q;
            if !ok {
                return Err(Error::Domain(format!("{g} is not a non-Q shuffle block")));
            }
        }
        if generators.iter().duplicates().next().is_some() {
            return Err(Error::Domain("repeated generator".into()));
        }
        for (g, h) in generators.iter().cartesian_product(&generators) {
            let t = q.add(g).add(&q).add(h).add(&q);
            if t.blocks().len() != 5 {
                return Err(Error::Domain(format!("encodings of {g} and {h} merge")));
            }
        }
        Ok(FreeMultisetSum { generators })
    }

    /// Generators `ℚ(2)`, `ℚ(1,2)`, `ℚ(3)`.
    pub fn standard() -> FreeMultisetSum {
        FreeMultisetSum::new(vec![
            q2(),
            q12(),
            OrderTerm::shuffle(vec![OrderTerm::nat(3)]),
        ])
        .expect("standard generators are independent")
    }

    pub fn generators(&self) -> &[OrderTerm] {
        &self.generators
    }

    fn check(&self, m: &[usize]) -> Result<()> {
        if m.len() != self.generators.len() {
            return Err(Error::Domain(format!(
                "multiset has {} counts for {} generators",
                m.len(),
                self.generators.len()
            )));
        }
        Ok(())
    }

    /// Encoding of a multiset given as counts per generator.
    pub fn encode(&self, m: &[usize]) -> Result<OrderTerm> {
        self.check(m)?;
        let q = OrderTerm::rationals();
        let mut out = q.clone();
        for (g, &k) in self.generators.iter().zip(m) {
            for _ in 0..k {
                out = out.add(g).add(&q);
            }
        }
        Ok(out)
    }

    /// Encoding of the union, with a witness giving the leading spacer's
    /// halves to each side and every `g + ℚ` group to its source, copies of
    /// `m1` first.
    pub fn sum(&self, m1: &[usize], m2: &[usize]) -> Result<(OrderTerm, PieceWitness)> {
        self.check(m1)?;
        self.check(m2)?;
        let union: Vec<usize> = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
        let term = self.encode(&union)?;
        let mut wit = PieceWitness::default();
        wit.red.push(Piece::new(0, PiecePart::LeftOfCut));
        wit.blue.push(Piece::new(0, PiecePart::RightOfCut));
        let mut block = 1;
        for (&k1, &k2) in m1.iter().zip(m2) {
            for copy in 0..k1 + k2 {
                let side = if copy < k1 {
                    &mut wit.red
                } else {
                    &mut wit.blue
                };
                side.push(Piece::new(block, PiecePart::Whole));
                side.push(Piece::new(block + 1, PiecePart::Whole));
                block += 2;
            }
        }
        Ok((term, wit))
    }
}
