//! Inputs shared by the benchmarks.

use ordsum::{OrderTerm, Ordinal};

/// `ω³·k + ω²·k + ω·k + k`.
pub fn dense_ordinal(k: u64) -> Ordinal {
    (0..=3)
        .rev()
        .fold(Ordinal::zero(), |acc, e| acc.add(&Ordinal::wk(e, k)))
}

/// A term mixing every block kind, `len` copies long.
pub fn mixed_term(len: usize) -> OrderTerm {
    let piece = OrderTerm::ordinal(Ordinal::wk(2, 1))
        .add(&OrderTerm::rev_ordinal(Ordinal::omega()))
        .add(&OrderTerm::shuffle(vec![
            OrderTerm::nat(1),
            OrderTerm::omega(),
        ]))
        .add(&OrderTerm::nat(3));
    (0..len).fold(OrderTerm::empty(), |acc, _| acc.add(&piece))
}
