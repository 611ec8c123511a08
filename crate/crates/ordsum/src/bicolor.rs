//! Product bi-colorings of finite orders `m × n`.
//!
//! `p(a, b) = 1` says that `a` precedes `b` in the sum. A valid coloring is
//! nondecreasing along each row and nonincreasing down each column, so row `a`
//! is determined by a threshold `t_a` (the first `b` colored 1) and the
//! thresholds are nondecreasing.

use std::fmt;

use crate::instances::Side;
use crate::orderterm::OrderTerm;
use crate::{Error, Result};

/// Largest `m·n` accepted by [`enumerate_bicolorings`].
pub const MAX_CELLS: usize = 36;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiColoring {
    m: usize,
    n: usize,
    p: Vec<Vec<bool>>,
}

/// Both monotonicity conditions on an `m × n` map given as rows.
pub fn validate_bicoloring(p: &[Vec<bool>]) -> bool {
    let n = p.first().map_or(0, Vec::len);
    p.iter().all(|row| row.len() == n)
        && p.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
        && p.windows(2).all(|w| (0..n).all(|b| w[1][b] <= w[0][b]))
}

impl BiColoring {
    pub fn new(p: Vec<Vec<bool>>) -> Result<BiColoring> {
        if !validate_bicoloring(&p) {
            return Err(Error::Domain("map is not a product bi-coloring".into()));
        }
        let m = p.len();
        let n = p.first().map_or(0, Vec::len);
        Ok(BiColoring { m, n, p })
    }

    /// The constant coloring on `m × n`.
    pub fn constant(m: usize, n: usize, value: bool) -> BiColoring {
        BiColoring {
            m,
            n,
            p: vec![vec![value; n]; m],
        }
    }

    fn from_thresholds(n: usize, t: &[usize]) -> BiColoring {
        BiColoring {
            m: t.len(),
            n,
            p: t.iter()
                .map(|&ta| (0..n).map(|b| b >= ta).collect())
                .collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.p[a][b]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.p
    }

    /// The induced order on `m ⊔ n`, listed from least to greatest.
    pub fn realization(&self) -> Vec<Side> {
        let (mut a, mut b) = (0, 0);
        let mut out = Vec::with_capacity(self.m + self.n);
        while a < self.m || b < self.n {
            let take_a = b == self.n || (a < self.m && self.p[a][b]);
            if take_a {
                out.push(Side::Left);
                a += 1;
            } else {
                out.push(Side::Right);
                b += 1;
            }
        }
        out
    }
}

impl fmt::Display for BiColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.p.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for &x in row {
                f.write_str(if x { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

/// Order type of the sum induced by the coloring.
pub fn sum_from_bicoloring(c: &BiColoring) -> OrderTerm {
    OrderTerm::nat(c.realization().len() as u64)
}

/// The coloring of a sum of `m` and `n` given as the sequence of sides from
/// least to greatest.
pub fn coloring_of_sum(m: usize, n: usize, s: &[Side]) -> Result<BiColoring> {
    let lefts: Vec<usize> = (0..s.len()).filter(|&i| s[i] == Side::Left).collect();
    let rights: Vec<usize> = (0..s.len()).filter(|&i| s[i] == Side::Right).collect();
    if lefts.len() != m || rights.len() != n {
        return Err(Error::Domain(format!(
            "realization has {} + {} points, expected {m} + {n}",
            lefts.len(),
            rights.len()
        )));
    }
    let p = lefts
        .iter()
        .map(|&x| rights.iter().map(|&y| x < y).collect())
        .collect();
    Ok(BiColoring { m, n, p })
}

/// All valid colorings of `m × n` in row-major lexicographic order of the map.
pub fn enumerate_bicolorings(m: usize, n: usize) -> Result<Vec<BiColoring>> {
    if m * n > MAX_CELLS {
        return Err(Error::Capacity(format!(
            "{m} x {n} has more than {MAX_CELLS} cells"
        )));
    }
    fn rec(n: usize, m: usize, t: &mut Vec<usize>, out: &mut Vec<BiColoring>) {
        if t.len() == m {
            out.push(BiColoring::from_thresholds(n, t));
            return;
        }
        let low = t.last().copied().unwrap_or(0);
        for ta in (low..=n).rev() {
            t.push(ta);
            rec(n, m, t, out);
            t.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::with_capacity(m), &mut out);
    Ok(out)
}
