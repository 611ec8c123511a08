//! One line per acceptance criterion. Exits non-zero when a criterion fails,
//! unless it is listed in `UNATTAINABLE` together with the reason.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ordsum::bicolor::{coloring_of_sum, enumerate_bicolorings, sum_from_bicoloring};
use ordsum::complicated::{
    check_good_table, decode_word, encode_word, make_word_witness, no_group_ordinals_check, q12,
    q2, semi_standard_classify, verify_group_rep, verify_piece_witness, FreeMultisetSum, GroupRep,
    SemiStandard,
};
use ordsum::instances::{brute_force_instances, check_bounds, enumerate_instances, Side};
use ordsum::orderterm::{sum_h, wlike_sum};
use ordsum::ordinal::{
    carruth_check, dynamic_sum, fsplit_sum, hessenberg, lcm_merge_labels, lcm_sum, Association,
    CarruthReport, Label, OrdinalSum,
};
use ordsum::sgc::{
    decompose, involution, lattice_op, membership, simple_sum, Involution, LatticeOp,
};
use ordsum::shuffle::{canonical_minimal_list, shuffle_sum_s};
use ordsum::sift::{effectiveness_check, sifted_sum, LevelSum};
use ordsum::{
    BinaryWord, Block, Capacity, FiltrationScheme, OrderTerm, Ordinal, Sgc, ShuffleList, SumTable,
};
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{RngExt, SeedableRng};

/// Criteria that cannot pass, with the reason printed next to the failure.
const UNATTAINABLE: &[(u32, &str)] = &[(
    6,
    "w* + w is scattered without a greatest element, so it lies in S·W* and therefore in <w> + S·W*; \
     the claimed non-membership does not hold",
)];

fn all_pairs<T: Clone>(xs: &[T]) -> Vec<(T, T)> {
    xs.iter()
        .flat_map(|a| xs.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    count: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, expected {want:?}"));
    }
}

fn w(e: u64, k: u64) -> Ordinal {
    Ordinal::wk(e, k)
}

fn nat(k: u64) -> Ordinal {
    Ordinal::nat(k)
}

fn t(a: Ordinal) -> OrderTerm {
    OrderTerm::ordinal(a)
}

fn n(k: u64) -> OrderTerm {
    OrderTerm::nat(k)
}

fn q() -> OrderTerm {
    OrderTerm::rationals()
}

fn ws() -> OrderTerm {
    OrderTerm::rev_ordinal(Ordinal::omega())
}

fn b(c: Sgc) -> Box<Sgc> {
    Box::new(c)
}

/// Coefficients of `ω³, ω², ω, 1` drawn uniformly from `0..=max_coef`.
fn rand_ordinal(rng: &mut StdRng, max_coef: u64) -> Ordinal {
    (0..=3u64).rev().fold(Ordinal::zero(), |acc, e| {
        acc.add(&w(e, rng.random_range(0..=max_coef)))
    })
}

fn rand_member(rng: &mut StdRng) -> OrderTerm {
    let pool = [
        n(1),
        n(2),
        n(3),
        OrderTerm::omega(),
        ws(),
        n(1).add(&q()),
        q2(),
    ];
    pool.choose(rng).unwrap().clone()
}

fn rand_term(rng: &mut StdRng) -> OrderTerm {
    let len = rng.random_range(0..=4);
    (0..len).fold(OrderTerm::empty(), |acc, _| {
        let block = match rng.random_range(0..4) {
            0 => t(rand_ordinal(rng, 2)),
            1 => OrderTerm::rev_ordinal(rand_ordinal(rng, 2)),
            2 => q(),
            _ => {
                let k = rng.random_range(1..=2);
                OrderTerm::shuffle((0..k).map(|_| rand_member(rng)).collect())
            }
        };
        acc.add(&block)
    })
}

fn library() -> Vec<Sgc> {
    vec![
        Sgc::Zero,
        Sgc::All,
        Sgc::W,
        Sgc::WStar,
        Sgc::Scattered,
        Sgc::PrincipalOmega(nat(1)),
        Sgc::PrincipalOmega(nat(2)),
        Sgc::GenQ,
    ]
}

fn criterion_1() -> Checks {
    let mut c = Checks::default();
    c.eq(hessenberg(&w(1, 3), &w(1, 2)), w(1, 5), "w*3 # w*2");
    c.eq(lcm_sum(&w(1, 3), &w(1, 2)), w(1, 3), "w*3 lcm w*2");
    c.eq(lcm_sum(&w(1, 3), &w(1, 1)), w(1, 3), "w*3 lcm w");
    let x = w(2, 3).add(&w(1, 2));
    let y = w(2, 2).add(&w(1, 4));
    c.eq(dynamic_sum(&x, &y), w(2, 3).add(&w(1, 4)), "dynamic sum");
    c.eq(fsplit_sum(&w(1, 1), &nat(1)), w(1, 1), "w fsplit 1");
    c.eq(fsplit_sum(&w(1, 1), &nat(2)), w(1, 1), "w fsplit 2");

    let s0 = |a: &OrderTerm, b: &OrderTerm| wlike_sum(0, a, b).unwrap();
    let omega = OrderTerm::omega();
    let left = s0(&s0(&q(), &omega), &n(1));
    let right = s0(&q(), &s0(&omega, &n(1)));
    c.eq(left.clone(), n(2).add(&q()).add(&omega), "(Q +0 w) +0 1");
    c.eq(right.clone(), n(1).add(&q()).add(&omega), "Q +0 (w +0 1)");
    c.check(left != right, || "+0 is associative on the triple".into());

    let s1 = |a: &OrderTerm, b: &OrderTerm| wlike_sum(1, a, b).unwrap();
    let w2 = t(w(2, 1));
    let left = s1(&s1(&q(), &w2), &omega);
    let right = s1(&q(), &s1(&w2, &omega));
    c.eq(left.clone(), omega.add(&q()).add(&w2), "(Q +1 w^2) +1 w");
    c.eq(right.clone(), q().add(&w2), "Q +1 (w^2 +1 w)");
    c.check(left != right, || "+1 is associative on the triple".into());

    let cap = Capacity::default();
    let one_w = simple_sum(&Sgc::W, &n(1), &omega, &cap).unwrap();
    let w_one = simple_sum(&Sgc::W, &omega, &n(1), &cap).unwrap();
    c.eq(one_w.clone(), omega.add(&n(1)), "1 +W w");
    c.eq(w_one.clone(), omega.clone(), "w +W 1");
    c.check(one_w != w_one, || "+W commutes on (1, w)".into());
    c.eq(OrderTerm::shuffle(vec![q()]), q(), "Q(Q)");
    c
}

fn criterion_2() -> Checks {
    let mut c = Checks::default();
    let mut rng = StdRng::seed_from_u64(2);
    let cap = Capacity::default();
    let start = Instant::now();
    for _ in 0..1000 {
        let (x, y) = (rand_ordinal(&mut rng, 4), rand_ordinal(&mut rng, 4));
        let rep = check_bounds(&x, &y, &cap).unwrap();
        c.check(rep.passed(), || format!("bounds fail at ({x}, {y})"));
    }
    let took = start.elapsed();
    c.check(took < Duration::from_secs(10), || format!("took {took:?}"));
    c
}

fn criterion_3() -> Checks {
    let mut c = Checks::default();
    let cap = Capacity::default();
    let set = |x: &Ordinal, y: &Ordinal| enumerate_instances(x, y, &cap).unwrap().types;
    for k in 1..=3 {
        c.eq(
            set(&w(k, 1), &w(k, 1)),
            vec![w(k, 1), w(k, 2)],
            &format!("(w^{k}, w^{k})"),
        );
    }
    for a in 1..=3 {
        for bb in 0..a {
            let want = vec![w(a, 1), w(a, 1).add(&w(bb, 1))];
            c.eq(set(&w(a, 1), &w(bb, 1)), want, &format!("(w^{a}, w^{bb})"));
        }
    }
    let deg1: Vec<Ordinal> = (0..=4)
        .flat_map(|q| (0..=4).map(move |r| w(1, q).add(&nat(r))))
        .collect();
    for (x, y) in all_pairs(&deg1) {
        let brute: Vec<Ordinal> = brute_force_instances(&x, &y).unwrap().into_iter().collect();
        c.eq(set(&x, &y), brute, &format!("merge plans at ({x}, {y})"));
    }
    c
}

fn criterion_4() -> Checks {
    let mut c = Checks::default();
    let mut rng = StdRng::seed_from_u64(4);
    for op in OrdinalSum::GOOD {
        for _ in 0..1000 {
            let (x, y) = (rand_ordinal(&mut rng, 4), rand_ordinal(&mut rng, 4));
            c.check(op.apply(&x, &y) == op.apply(&y, &x), || {
                format!("{} not commutative at ({x}, {y})", op.name())
            });
        }
        for _ in 0..1000 {
            let (x, y, z) = (
                rand_ordinal(&mut rng, 4),
                rand_ordinal(&mut rng, 4),
                rand_ordinal(&mut rng, 4),
            );
            let l = op.apply(&op.apply(&x, &y), &z);
            let r = op.apply(&x, &op.apply(&y, &z));
            c.check(l == r, || {
                format!("{} not associative at ({x}, {y}, {z})", op.name())
            });
        }
    }
    let sample = [w(1, 1), w(1, 2), w(1, 3)];
    c.eq(
        carruth_check(lcm_sum, &sample),
        CarruthReport::Violation {
            axiom: 4,
            witness: vec![w(1, 3), w(1, 2), w(1, 1)],
        },
        "lcm axiom 4",
    );
    let sample = [nat(1), nat(2), w(1, 1)];
    c.eq(
        carruth_check(fsplit_sum, &sample),
        CarruthReport::Violation {
            axiom: 4,
            witness: vec![w(1, 1), nat(2), nat(1)],
        },
        "fsplit axiom 4",
    );
    c
}

fn criterion_5() -> Checks {
    use Label::*;
    let mut c = Checks::default();
    let left = lcm_merge_labels(Association::Left, 12);
    let right = lcm_merge_labels(Association::Right, 12);
    c.eq(left.clone(), [A, C, B, C].repeat(3), "left association");
    c.eq(right.clone(), [A, B, A, C].repeat(3), "right association");
    c.check(left != right, || "patterns coincide".into());
    c
}

fn sample_terms() -> Vec<OrderTerm> {
    let mut out = ordsum::selftest::small_terms();
    out.extend([
        n(1).add(&q()).add(&n(1)),
        q().add(&ws()),
        ws().add(&q()),
        n(1).add(&q2()),
        OrderTerm::omega().add(&n(1)).add(&q()),
        q().add(&OrderTerm::omega()).add(&ws()),
    ]);
    out
}

fn criterion_6() -> Checks {
    let mut c = Checks::default();
    let cap = Capacity::default();
    let mut rng = StdRng::seed_from_u64(6);
    let member = |cls: &Sgc, x: &OrderTerm| membership(cls, x, &cap).unwrap();

    for cls in library() {
        let s = |x: &OrderTerm, y: &OrderTerm| simple_sum(&cls, x, y, &cap).unwrap();
        for _ in 0..500 {
            let (x, y, z) = (
                rand_term(&mut rng),
                rand_term(&mut rng),
                rand_term(&mut rng),
            );
            let ok = s(&s(&x, &y), &z) == s(&x, &s(&y, &z));
            c.check(ok, || {
                format!("simple sum over {cls} not associative at ({x}, {y}, {z})")
            });
        }
    }

    let lib = library();
    for i in 0..500 {
        let cls = &lib[i % lib.len()];
        let (x, y) = (rand_term(&mut rng), rand_term(&mut rng));
        let dx = decompose(cls, &x, &cap).unwrap();
        let dy = decompose(cls, &y, &cap).unwrap();
        let again = decompose(cls, &dx.left, &cap).unwrap();
        c.check(again.left == dx.left && again.right.is_empty(), || {
            format!("{cls}: {x} not a fixpoint")
        });
        c.check(member(cls, &dx.left), || {
            format!("{cls}: left part of {x} outside")
        });
        let perp = Sgc::Perp(b(cls.clone()));
        c.check(member(&perp, &dx.right), || {
            format!("{cls}: right part of {x} not in perp")
        });
        let dxy = decompose(cls, &x.add(&y), &cap).unwrap();
        let first = (dx.left.add(&dx.right).add(&dy.left), dy.right.clone());
        let second = (dx.left.clone(), dx.right.add(&dy.left).add(&dy.right));
        let got = (dxy.left, dxy.right);
        c.check(got == first || got == second, || {
            format!("{cls}: corollary fails at ({x}, {y})")
        });
    }

    for a in 0..=10 {
        for bb in 0..=10 {
            let p = |g: u64| Sgc::PrincipalOmega(nat(g));
            c.eq(
                lattice_op(LatticeOp::Plus, &p(a), &p(bb)).unwrap(),
                p(a.min(bb)),
                "plus formula",
            );
            c.eq(
                lattice_op(LatticeOp::Times, &p(a), &p(bb)).unwrap(),
                p(a.max(bb)),
                "times formula",
            );
            c.eq(
                lattice_op(LatticeOp::Shuffle, &p(a), &p(bb)).unwrap(),
                p(a.max(bb)),
                "shuffle formula",
            );
        }
    }

    let terms = sample_terms();
    let mut classes = library();
    classes.extend([Sgc::GenOmegaQ, Sgc::GenQPlus1]);
    for cls in &classes {
        let pp = involution(Involution::Perp, &involution(Involution::Perp, cls));
        c.eq(&pp, cls, "perp perp simplifies");
        let dp = involution(Involution::Perp, &involution(Involution::Dual, cls));
        c.eq(
            dp,
            involution(Involution::Inverse, cls),
            "perp dual simplifies",
        );
        let raw_pp = Sgc::Perp(b(Sgc::Perp(b(cls.clone()))));
        let raw_dp = Sgc::Perp(b(Sgc::Dual(b(cls.clone()))));
        let raw_inv = Sgc::Inverse(b(cls.clone()));
        for x in &terms {
            c.check(member(&raw_pp, x) == member(cls, x), || {
                format!("perp perp {cls} at {x}")
            });
            c.check(member(&raw_dp, x) == member(&raw_inv, x), || {
                format!("perp dual {cls} at {x}")
            });
        }
    }

    let two_q = n(2).add(&q());
    let wide = Sgc::Times(b(Sgc::WStar), b(Sgc::Plus(b(Sgc::W), b(Sgc::GenQ))));
    c.check(member(&wide, &two_q), || {
        "2 + Q outside W* · (W + genQ)".into()
    });
    c.check(!member(&Sgc::GenOmegaQ, &two_q), || {
        "2 + Q inside <w, Q>".into()
    });

    let z = ws().add(&OrderTerm::omega());
    let p1 = Sgc::PrincipalOmega(nat(1));
    let left = Sgc::Times(
        b(Sgc::Plus(b(p1.clone()), b(Sgc::Scattered))),
        b(Sgc::WStar),
    );
    let right = Sgc::Plus(b(p1), b(Sgc::Times(b(Sgc::Scattered), b(Sgc::WStar))));
    c.check(member(&left, &z), || "w* + w outside (<w> + S) · W*".into());
    c.check(!member(&right, &z), || "w* + w lies in <w> + S · W*".into());
    c
}

fn shipped_schemes() -> Vec<FiltrationScheme> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut out = vec![
        FiltrationScheme::hessenberg(3),
        FiltrationScheme::single(Sgc::W, LevelSum::Usual).unwrap(),
        FiltrationScheme::new(vec![
            (Sgc::W, LevelSum::Usual),
            (Sgc::PrincipalOmega(nat(1)), LevelSum::Usual),
        ])
        .unwrap(),
    ];
    for name in ["two-level.scheme", "reversed.scheme"] {
        let src = std::fs::read_to_string(dir.join(name)).unwrap();
        out.push(ordsum_cli::parse_scheme(&src).unwrap());
    }
    out
}

fn criterion_7() -> Checks {
    let mut c = Checks::default();
    let cap = Capacity::default();
    let mut rng = StdRng::seed_from_u64(7);
    let hess = FiltrationScheme::hessenberg(3);
    for _ in 0..1000 {
        let (x, y) = (rand_ordinal(&mut rng, 4), rand_ordinal(&mut rng, 4));
        let got = sifted_sum(&hess, &t(x.clone()), &t(y.clone()), &cap).unwrap();
        c.check(got == t(hessenberg(&x, &y)), || {
            format!("hess scheme at ({x}, {y})")
        });
    }
    let mut pairs = Vec::new();
    for _ in 0..300 {
        let (x, y) = (rand_term(&mut rng), rand_term(&mut rng));
        let got = sifted_sum(&hess, &x, &y, &cap).unwrap();
        c.check(got == sum_h(&x, &y), || {
            format!("hess scheme against sum_h at ({x}, {y})")
        });
        pairs.push((x, y));
    }
    for _ in 0..200 {
        pairs.push((t(rand_ordinal(&mut rng, 3)), t(rand_ordinal(&mut rng, 3))));
    }
    for s in shipped_schemes() {
        let r = effectiveness_check(&s, &pairs, &cap).unwrap();
        c.check(r.passed(), || {
            format!(
                "scheme [{}] is not effective: {:?}",
                s.to_string().replace('\n', "; "),
                r.violations.first()
            )
        });
    }
    c
}

fn criterion_8() -> Checks {
    let mut c = Checks::default();
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..1000 {
        let k = rng.random_range(1..=4);
        let raw: Vec<OrderTerm> = (0..k).map(|_| rand_member(&mut rng)).collect();
        let once = canonical_minimal_list(&raw).unwrap();
        let twice = canonical_minimal_list(once.members()).unwrap();
        c.check(once == twice, || {
            format!("canonical form of {raw:?} is not stable")
        });
    }
    let single = |rng: &mut StdRng| {
        let k = rng.random_range(1..=3);
        OrderTerm::shuffle((0..k).map(|_| rand_member(rng)).collect())
    };
    for _ in 0..500 {
        let (x, y, z) = (single(&mut rng), single(&mut rng), single(&mut rng));
        let s = |a: &OrderTerm, b: &OrderTerm| shuffle_sum_s(a, b).unwrap();
        c.check(s(&x, &y) == s(&y, &x), || {
            format!("shuffle sum not commutative at ({x}, {y})")
        });
        c.check(s(&s(&x, &y), &z) == s(&x, &s(&y, &z)), || {
            format!("shuffle sum not associative at ({x}, {y}, {z})")
        });
    }
    // Families of equivalent lists: reordering, repetition, members that are
    // already shuffles of the list, and extended shuffles of it.
    let bases: Vec<Vec<OrderTerm>> = vec![
        vec![n(1)],
        vec![n(2)],
        vec![n(1), n(2)],
        vec![n(2), OrderTerm::omega()],
        vec![n(1), ws(), OrderTerm::omega()],
        vec![n(3), n(2)],
    ];
    for base in bases {
        let s = ShuffleList::new(base.clone()).unwrap();
        let shuffle = OrderTerm::from_blocks(vec![Block::Shuffle(s.clone())]);
        let mut family = vec![base.clone()];
        let mut rev = base.clone();
        rev.reverse();
        family.push(rev);
        family.push(base.iter().chain(&base).cloned().collect());
        let mut with_shuffle = base.clone();
        with_shuffle.push(shuffle.clone());
        family.push(with_shuffle);
        for l in s.members() {
            for r in s.members() {
                let mut ext = base.clone();
                ext.push(l.add(&shuffle).add(r));
                family.push(ext);
            }
        }
        for f in &family {
            let got = canonical_minimal_list(f).unwrap();
            c.check(got == s, || format!("{f:?} does not canonicalize to {s}"));
        }
    }
    c
}

fn criterion_9() -> Checks {
    let mut c = Checks::default();
    let cap = Capacity::default();
    let mut seen = BTreeSet::new();
    for len in 0..=10 {
        for w in BinaryWord::all_of_length(len) {
            let e = encode_word(&w);
            c.check(decode_word(&e).ok() == Some(w.clone()), || {
                format!("{w} does not round-trip")
            });
            c.check(seen.insert(e), || format!("{w} collides"));
            if len <= 8 {
                let ok = verify_piece_witness(&q(), &q(), &encode_word(&w), &make_word_witness(&w))
                    .is_ok();
                c.check(ok, || format!("witness for {w} fails"));
            }
        }
    }
    let (a, bb) = (q2().add(&q()), q12().add(&q()));
    let mut z2 = SumTable::new();
    z2.insert(a.clone(), a.clone(), a.clone());
    z2.insert(a.clone(), bb.clone(), bb.clone());
    z2.insert(bb.clone(), bb.clone(), a.clone());
    c.check(check_good_table(&z2).passed(), || "Z/2Z table".into());
    let e1 = n(2).add(&q2()).add(&q());
    let e3 = n(1).add(&q()).add(&q2()).add(&q());
    let mut reg = SumTable::new();
    for (x, y, r) in [
        (&e1, &q(), &e3),
        (&e1, &e1, &e1),
        (&e1, &e3, &e3),
        (&e3, &q(), &e3),
        (&e3, &e3, &e3),
        (&q(), &q(), &q()),
    ] {
        reg.insert(x.clone(), y.clone(), r.clone());
    }
    c.check(check_good_table(&reg).passed(), || {
        "canonical-regularity table".into()
    });
    let rep = GroupRep::cyclic(2, vec![a.clone(), bb.clone()]).unwrap();
    c.check(verify_group_rep(&rep, |x, y| z2.apply(x, y)), || {
        "Z/2Z representation".into()
    });
    c.eq(
        semi_standard_classify(&e1, &q(), &e3),
        SemiStandard::Neither,
        "neither classification",
    );
    let grid: Vec<Ordinal> = (0..=2)
        .flat_map(|k| (1..=3).map(move |cc| w(k, cc)))
        .collect();
    let r = no_group_ordinals_check(&grid, &cap).unwrap();
    c.check(r.passed(), || format!("{:?}", r.violations));
    let free = FreeMultisetSum::standard();
    let multisets: Vec<Vec<usize>> = (0..=5usize)
        .flat_map(|x| (0..=5usize).flat_map(move |y| (0..=5usize).map(move |z| vec![x, y, z])))
        .filter(|m| m.iter().sum::<usize>() <= 5)
        .collect();
    let mut encoded = BTreeSet::new();
    for m in &multisets {
        c.check(encoded.insert(free.encode(m).unwrap()), || {
            format!("{m:?} collides")
        });
    }
    for (m1, m2) in all_pairs(&multisets) {
        if m1.iter().chain(&m2).sum::<usize>() > 5 {
            continue;
        }
        let (sum, wit) = free.sum(&m1, &m2).unwrap();
        let ok = verify_piece_witness(
            &free.encode(&m1).unwrap(),
            &free.encode(&m2).unwrap(),
            &sum,
            &wit,
        )
        .is_ok();
        c.check(ok, || format!("free witness at ({m1:?}, {m2:?})"));
    }
    c
}

fn criterion_10() -> Checks {
    let mut c = Checks::default();
    let count = |m, n| enumerate_bicolorings(m, n).unwrap().len();
    c.eq(
        (count(1, 1), count(1, 2), count(2, 2)),
        (2, 3, 6),
        "small counts",
    );
    for m in 0..=6usize {
        for k in 0..=6usize {
            let all = enumerate_bicolorings(m, k).unwrap();
            let binom = (1..=k).fold(1usize, |acc, i| acc * (m + i) / i);
            c.eq(all.len(), binom, &format!("{m} x {k} count"));
            // Brute force: one coloring per arrangement of the m + k points.
            let brute: BTreeSet<Vec<Vec<bool>>> = (0u32..1 << (m + k))
                .filter(|x| x.count_ones() as usize == m)
                .map(|x| {
                    let sides: Vec<Side> = (0..m + k)
                        .map(|i| {
                            if x >> i & 1 == 1 {
                                Side::Left
                            } else {
                                Side::Right
                            }
                        })
                        .collect();
                    coloring_of_sum(m, k, &sides).unwrap().rows().to_vec()
                })
                .collect();
            let listed: BTreeSet<Vec<Vec<bool>>> = all.iter().map(|b| b.rows().to_vec()).collect();
            c.check(listed == brute, || {
                format!("{m} x {k} differs from brute force")
            });
            for col in &all {
                c.check(
                    sum_from_bicoloring(col) == OrderTerm::nat((m + k) as u64),
                    || format!("{m} x {k} sum type"),
                );
            }
        }
    }
    c
}

fn criterion_11() -> Checks {
    let mut c = Checks::default();
    let sessions = common::sessions();
    c.eq(sessions.len(), 10, "session count");
    for script in &sessions {
        let want = std::fs::read_to_string(common::expected_path(script)).unwrap_or_default();
        let got = common::run_session(script);
        c.check(got == want, || {
            format!("{} differs from its golden file", script.display())
        });
    }
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..1000 {
        let v = rand_term(&mut rng);
        let back = ordsum_cli::parse_term(&v.to_string());
        c.check(back.as_ref() == Ok(&v), || {
            format!("{v} does not round-trip: {back:?}")
        });
    }
    c
}

type Criterion = (u32, &'static str, fn() -> Checks);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "reference identities", criterion_1),
        (2, "bounds on instance sets", criterion_2),
        (3, "instance-set facts", criterion_3),
        (4, "algebraic laws of the ordinal sums", criterion_4),
        (5, "point-tracking patterns", criterion_5),
        (6, "sum-generating classes", criterion_6),
        (7, "sifting", criterion_7),
        (8, "shuffles", criterion_8),
        (9, "complicated classes", criterion_9),
        (10, "bi-colorings", criterion_10),
        (11, "command line", criterion_11),
    ];
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let checks = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if checks.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {id:>2}: {status} {title} ({} checks, {secs:.1}s)",
            checks.count
        );
        for f in &checks.failures {
            println!("    failed: {f}");
        }
        if !checks.failures.is_empty() {
            match UNATTAINABLE.iter().find(|(k, _)| *k == id) {
                Some((_, why)) => println!("    unattainable: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
