//! Exhaustive property checks over small fixed samples, one suite per module.

use itertools::Itertools;

use crate::bicolor::{coloring_of_sum, enumerate_bicolorings, sum_from_bicoloring};
use crate::complicated::{
    check_good_table, decode_word, encode_word, make_word_witness, q12, q2, verify_piece_witness,
    BinaryWord, FreeMultisetSum, SumTable,
};
use crate::instances::{brute_force_instances, check_bounds, enumerate_instances};
use crate::orderterm::{sum_h, OrderTerm};
use crate::ordinal::{carruth_check, hessenberg, CarruthReport, Ordinal, OrdinalSum};
use crate::sgc::{decompose, simple_sum, Sgc};
use crate::shuffle::{canonical_minimal_list, shuffle_sum_s};
use crate::sift::{effectiveness_check, sifted_sum, FiltrationScheme};
use crate::{Capacity, Report, Result};

pub const SUITES: [&str; 8] = [
    "ordinal",
    "instances",
    "orderterm",
    "shuffle",
    "sgc",
    "sift",
    "complicated",
    "bicolor",
];

/// Ordinals with exponents below `exps` and coefficients up to `coef`.
pub fn small_ordinals(exps: u64, coef: u64) -> Vec<Ordinal> {
    (0..exps)
        .rev()
        .map(|_| 0..=coef)
        .multi_cartesian_product()
        .map(|ks| {
            Ordinal::from_terms(
                ks.into_iter()
                    .enumerate()
                    .map(|(i, k)| (Ordinal::nat(exps - 1 - i as u64), k)),
            )
        })
        .collect()
}

/// A fixed library of small order terms of every block kind.
pub fn small_terms() -> Vec<OrderTerm> {
    let n = OrderTerm::nat;
    let w = OrderTerm::omega();
    let ws = OrderTerm::rev_ordinal(Ordinal::omega());
    let q = OrderTerm::rationals();
    let w2 = OrderTerm::ordinal(Ordinal::wk(2, 1));
    vec![
        OrderTerm::empty(),
        n(1),
        n(2),
        w.clone(),
        w.add(&n(1)),
        w2.clone(),
        ws.clone(),
        ws.add(&w),
        q.clone(),
        n(1).add(&q),
        q.add(&n(1)),
        n(2).add(&q),
        q2(),
        w.add(&q),
        q.add(&w),
        w2.add(&ws),
        q12().add(&n(1)),
    ]
}

fn ordinal_suite() -> Report {
    let mut r = Report::default();
    let sample = small_ordinals(3, 2);
    for op in OrdinalSum::GOOD {
        for (a, b) in sample.iter().cartesian_product(&sample) {
            r.check(op.apply(a, b) == op.apply(b, a), || {
                format!("{} not commutative at ({a}, {b})", op.name())
            });
        }
        for ((a, b), c) in sample
            .iter()
            .cartesian_product(&sample)
            .cartesian_product(&sample)
        {
            let l = op.apply(&op.apply(a, b), c);
            let rr = op.apply(a, &op.apply(b, c));
            r.check(l == rr, || {
                format!("{} not associative at ({a}, {b}, {c})", op.name())
            });
        }
    }
    let w = |k| Ordinal::wk(1, k);
    let lcm = carruth_check(|a, b| OrdinalSum::Lcm.apply(a, b), &[w(1), w(2), w(3)]);
    r.check(
        matches!(lcm, CarruthReport::Violation { axiom: 4, .. }),
        || "lcm passes axiom 4".into(),
    );
    let fs = carruth_check(
        |a, b| OrdinalSum::FSplit.apply(a, b),
        &[Ordinal::nat(1), Ordinal::nat(2), Ordinal::omega()],
    );
    r.check(
        matches!(fs, CarruthReport::Violation { axiom: 4, .. }),
        || "fsplit passes axiom 4".into(),
    );
    r
}

fn instances_suite(cap: &Capacity) -> Result<Report> {
    let mut r = Report::default();
    let sample = small_ordinals(3, 2);
    for (a, b) in sample.iter().cartesian_product(&sample) {
        let rep = check_bounds(a, b, cap)?;
        r.check(rep.passed(), || format!("bounds fail at ({a}, {b})"));
    }
    let deg1 = small_ordinals(2, 3);
    for (a, b) in deg1.iter().cartesian_product(&deg1) {
        let set = enumerate_instances(a, b, cap)?;
        let brute = brute_force_instances(a, b)?;
        r.check(
            set.types
                .iter()
                .cloned()
                .collect::<std::collections::BTreeSet<_>>()
                == brute,
            || format!("recursion and merge plans disagree at ({a}, {b})"),
        );
    }
    Ok(r)
}

fn orderterm_suite() -> Report {
    let mut r = Report::default();
    let terms = small_terms();
    for ((a, b), c) in terms
        .iter()
        .cartesian_product(&terms)
        .cartesian_product(&terms)
    {
        r.check(a.add(b).add(c) == a.add(&b.add(c)), || {
            format!("+ not associative at ({a}, {b}, {c})")
        });
    }
    for t in &terms {
        r.check(t.reverse().reverse() == *t, || {
            format!("reversal is not an involution at {t}")
        });
        let renorm = OrderTerm::from_blocks(t.blocks().to_vec());
        r.check(renorm == *t, || format!("normal form of {t} is not stable"));
    }
    r
}

fn shuffle_suite() -> Result<Report> {
    let mut r = Report::default();
    let members = [
        OrderTerm::nat(1),
        OrderTerm::nat(2),
        OrderTerm::nat(3),
        OrderTerm::omega(),
        OrderTerm::rev_ordinal(Ordinal::omega()),
        OrderTerm::nat(1).add(&q2()).add(&OrderTerm::nat(1)),
    ];
    let lists: Vec<Vec<OrderTerm>> = (1..=2)
        .flat_map(|k| members.iter().cloned().combinations(k))
        .collect();
    let shuffles: Vec<OrderTerm> = lists
        .iter()
        .map(|l| OrderTerm::shuffle(l.clone()))
        .collect();
    for l in &lists {
        let c = canonical_minimal_list(l).expect("non-empty members");
        let again = canonical_minimal_list(c.members()).expect("non-empty members");
        r.check(c == again, || {
            format!("canonical list of {c} is not stable")
        });
        let mut rev = l.clone();
        rev.reverse();
        r.check(canonical_minimal_list(&rev) == Some(c.clone()), || {
            format!("{c} depends on member order")
        });
    }
    for ((a, b), c) in shuffles
        .iter()
        .cartesian_product(&shuffles)
        .cartesian_product(&shuffles)
    {
        let ab = shuffle_sum_s(a, b)?;
        r.check(ab == shuffle_sum_s(b, a)?, || {
            format!("shuffle sum not commutative at ({a}, {b})")
        });
        let l = shuffle_sum_s(&ab, c)?;
        let rr = shuffle_sum_s(a, &shuffle_sum_s(b, c)?)?;
        r.check(l == rr, || {
            format!("shuffle sum not associative at ({a}, {b}, {c})")
        });
    }
    Ok(r)
}

fn sgc_library() -> Vec<Sgc> {
    vec![
        Sgc::Zero,
        Sgc::All,
        Sgc::W,
        Sgc::WStar,
        Sgc::Scattered,
        Sgc::PrincipalOmega(Ordinal::nat(1)),
        Sgc::PrincipalOmega(Ordinal::nat(2)),
        Sgc::GenQ,
    ]
}

fn sgc_suite(cap: &Capacity) -> Result<Report> {
    let mut r = Report::default();
    let terms = small_terms();
    for c in sgc_library() {
        for t in &terms {
            let d = decompose(&c, t, cap)?;
            r.check(d.left.add(&d.right) == *t, || {
                format!("{c}: parts of {t} do not reassemble")
            });
            let again = decompose(&c, &d.left, cap)?;
            r.check(again.right.is_empty(), || {
                format!("{c}: decomposition of {t} is not a fixpoint")
            });
        }
        for ((a, b), x) in terms
            .iter()
            .cartesian_product(&terms)
            .cartesian_product(&terms)
        {
            let l = simple_sum(&c, &simple_sum(&c, a, b, cap)?, x, cap)?;
            let rr = simple_sum(&c, a, &simple_sum(&c, b, x, cap)?, cap)?;
            r.check(l == rr, || {
                format!("{c}: simple sum not associative at ({a}, {b}, {x})")
            });
        }
    }
    Ok(r)
}

fn sift_suite(cap: &Capacity) -> Result<Report> {
    let mut r = Report::default();
    let scheme = FiltrationScheme::hessenberg(2);
    let sample = small_ordinals(3, 2);
    for (a, b) in sample.iter().cartesian_product(&sample) {
        let got = sifted_sum(
            &scheme,
            &OrderTerm::ordinal(a.clone()),
            &OrderTerm::ordinal(b.clone()),
            cap,
        )?;
        r.check(got == OrderTerm::ordinal(hessenberg(a, b)), || {
            format!("sifted sum differs from # at ({a}, {b})")
        });
    }
    let terms = small_terms();
    for (a, b) in terms.iter().cartesian_product(&terms) {
        let got = sifted_sum(&scheme, a, b, cap)?;
        r.check(got == sum_h(a, b), || {
            format!("sifted sum differs from sum_h at ({a}, {b})")
        });
    }
    let pairs: Vec<_> = sample
        .iter()
        .cartesian_product(&sample)
        .map(|(a, b)| (OrderTerm::ordinal(a.clone()), OrderTerm::ordinal(b.clone())))
        .collect();
    let eff = effectiveness_check(&scheme, &pairs, cap)?;
    r.checked += eff.checked;
    r.violations.extend(eff.violations);
    Ok(r)
}

fn complicated_suite() -> Result<Report> {
    let mut r = Report::default();
    let q = OrderTerm::rationals();
    for len in 0..=6 {
        for w in BinaryWord::all_of_length(len) {
            let t = encode_word(&w);
            r.check(decode_word(&t).ok() == Some(w.clone()), || {
                format!("{w} does not round-trip")
            });
            let ok = verify_piece_witness(&q, &q, &t, &make_word_witness(&w)).is_ok();
            r.check(ok, || format!("witness for {w} fails"));
        }
    }
    let (a, b) = (q2().add(&q), q12().add(&q));
    let mut table = SumTable::new();
    table.insert(a.clone(), a.clone(), a.clone());
    table.insert(a.clone(), b.clone(), b.clone());
    table.insert(b.clone(), b.clone(), a.clone());
    let rep = check_good_table(&table);
    r.checked += rep.checked;
    r.violations.extend(rep.violations);
    let free = FreeMultisetSum::standard();
    let multisets: Vec<Vec<usize>> = (0..3)
        .map(|_| 0..=2usize)
        .multi_cartesian_product()
        .collect();
    for (m1, m2) in multisets.iter().cartesian_product(&multisets) {
        let (t, wit) = free.sum(m1, m2)?;
        let ok = verify_piece_witness(&free.encode(m1)?, &free.encode(m2)?, &t, &wit).is_ok();
        r.check(ok, || {
            format!("free multiset witness fails at ({m1:?}, {m2:?})")
        });
    }
    Ok(r)
}

fn bicolor_suite() -> Result<Report> {
    let mut r = Report::default();
    for m in 0..=4 {
        for n in 0..=4 {
            let all = enumerate_bicolorings(m, n)?;
            let binom = (1..=n).fold(1usize, |acc, i| acc * (m + i) / i);
            r.check(all.len() == binom, || {
                format!("{m} x {n}: {} colorings", all.len())
            });
            for c in &all {
                r.check(
                    sum_from_bicoloring(c) == OrderTerm::nat((m + n) as u64),
                    || format!("{m} x {n}: wrong sum type"),
                );
                let back = coloring_of_sum(m, n, &c.realization())?;
                r.check(back == *c, || {
                    format!("{m} x {n}: coloring does not round-trip")
                });
            }
        }
    }
    Ok(r)
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run(suite: &str, cap: &Capacity) -> Result<Vec<(&'static str, Report)>> {
    let names: Vec<&'static str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        match SUITES.iter().find(|s| **s == suite) {
            Some(s) => vec![*s],
            None => return Err(crate::Error::Domain(format!("unknown suite {suite}"))),
        }
    };
    names
        .into_iter()
        .map(|name| {
            let report = match name {
                "ordinal" => ordinal_suite(),
                "instances" => instances_suite(cap)?,
                "orderterm" => orderterm_suite(),
                "shuffle" => shuffle_suite()?,
                "sgc" => sgc_suite(cap)?,
                "sift" => sift_suite(cap)?,
                "complicated" => complicated_suite()?,
                _ => bicolor_suite()?,
            };
            Ok((name, report))
        })
        .collect()
}
