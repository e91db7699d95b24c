//! Property suites shared by the `properties` and `acceptance` targets. Each
//! runs a deterministic proptest runner and returns the first failure.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use z4gbent::construct::{build_code, extend_type_ii, reference_pair};
use z4gbent::{BinVec, BinaryCode, WeightKind, Z4Code, Z4Vector};

pub type Suite = (&'static str, u32, fn(u32) -> Result<(), String>);

/// Every suite with the case count used by the acceptance run.
pub const SUITES: &[Suite] = &[
    (
        "Gray map is an isometry (Lee -> Hamming)",
        100_000,
        gray_isometry,
    ),
    (
        "Euclidean weight congruences",
        10_000,
        euclidean_congruences,
    ),
    (
        "Type II/IV codewords of the m = 5 extension",
        10_000,
        extension_codewords,
    ),
    (
        "MacWilliams involution on binary codes",
        100,
        macwilliams_involution,
    ),
    (
        "|C| |C^perp| = 4^n and C^perp^perp = C",
        100,
        dual_cardinality,
    ),
    ("standard form round trip", 100, standard_form_round_trip),
];

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn vector(len: usize) -> impl Strategy<Value = Z4Vector> {
    prop::collection::vec(0u8..4, len).prop_map(|e| Z4Vector::from_entries(&e))
}

pub fn vector_pair(max_len: usize) -> impl Strategy<Value = (Z4Vector, Z4Vector)> {
    (1..=max_len).prop_flat_map(|n| (vector(n), vector(n)))
}

/// A code of length `1..=max_len` spanned by up to `max_rows` random rows.
pub fn code(max_len: usize, max_rows: usize) -> impl Strategy<Value = Z4Code> {
    (1..=max_len)
        .prop_flat_map(move |n| {
            prop::collection::vec(vector(n), 0..=max_rows).prop_map(move |rows| (n, rows))
        })
        .prop_map(|(n, rows)| Z4Code::new(n, rows).expect("rows have length n"))
}

pub fn binary_code(max_len: usize, max_rows: usize) -> impl Strategy<Value = BinaryCode> {
    (1..=max_len)
        .prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(0u8..2, n), 0..=max_rows)
                .prop_map(move |rows| (n, rows))
        })
        .prop_map(|(n, rows)| {
            BinaryCode::new(n, rows.iter().map(|r| BinVec::from_bits(r)).collect()).unwrap()
        })
}

pub fn gray_isometry(cases: u32) -> Result<(), String> {
    run(cases, vector_pair(40), |(x, y)| {
        let d = x.sub(&y).unwrap().weight(WeightKind::Lee);
        let image = &x.gray_map() ^ &y.gray_map();
        prop_assert_eq!(d, image.weight());
        prop_assert_eq!(x.weight(WeightKind::Lee), x.gray_map().weight());
        Ok(())
    })
}

pub fn euclidean_congruences(cases: u32) -> Result<(), String> {
    run(cases, vector_pair(40), |(x, y)| {
        let e = |v: &Z4Vector| v.weight(WeightKind::Euclidean);
        let squares: usize = x
            .entries()
            .iter()
            .map(|&a| (a as usize) * (a as usize))
            .sum();
        prop_assert_eq!(e(&x) % 8, squares % 8);
        prop_assert_eq!(e(&x) % 4, x.inner_product(&x).unwrap() as usize);
        let ip = y.inner_product(&x).unwrap() as usize;
        prop_assert_eq!(e(&x.add(&y).unwrap()) % 8, (e(&x) + e(&y) + 2 * ip) % 8);
        Ok(())
    })
}

pub fn extension_codewords(cases: u32) -> Result<(), String> {
    let (a, b) = reference_pair(5).map_err(|e| e.to_string())?;
    let ext = extend_type_ii(&build_code(&a, &b).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let code = ext.code;
    let size = 1u128 << code.log2_cardinality();
    run(cases, 0..size, |rank| {
        let w = code.codeword_at(rank).unwrap();
        prop_assert_eq!(w.weight(WeightKind::Euclidean) % 8, 0);
        prop_assert_eq!(w.weight(WeightKind::Lee) % 4, 0);
        prop_assert_eq!(w.weight(WeightKind::Hamming) % 2, 0);
        prop_assert_eq!(w.inner_product(&w).unwrap(), 0);
        Ok(())
    })
}

pub fn macwilliams_involution(cases: u32) -> Result<(), String> {
    run(cases, binary_code(14, 8), |c| {
        let (n, k) = (c.length(), c.dimension());
        let a = c.weight_distribution().unwrap();
        let b = a.macwilliams(k).unwrap();
        prop_assert_eq!(&b, &c.dual().weight_distribution().unwrap());
        prop_assert_eq!(b.macwilliams(n - k).unwrap(), a);
        Ok(())
    })
}

pub fn dual_cardinality(cases: u32) -> Result<(), String> {
    run(cases, code(12, 6), |c| {
        let d = c.dual().unwrap();
        prop_assert_eq!(c.log2_cardinality() + d.log2_cardinality(), 2 * c.length());
        prop_assert!(d.dual().unwrap().same_code(&c));
        for g in c.generators() {
            for h in d.generators() {
                prop_assert_eq!(g.inner_product(h).unwrap(), 0);
            }
        }
        Ok(())
    })
}

pub fn standard_form_round_trip(cases: u32) -> Result<(), String> {
    let strategy = code(16, 8).prop_flat_map(|c| {
        let n = c.length();
        let size = 1u128 << c.log2_cardinality();
        (Just(c), 0..size, vector(n))
    });
    run(cases, strategy, |(c, rank, v)| {
        let f = c.standard_form();
        let n = c.length();
        let rebuilt = Z4Code::new(n, f.generators()).unwrap();
        prop_assert!(rebuilt.same_code(&c));
        prop_assert_eq!(f.k1() + f.k2(), rebuilt.type_of().0 + rebuilt.type_of().1);
        prop_assert_eq!(
            f.from_form_coordinates(&f.to_form_coordinates(&v)),
            v.clone()
        );
        for (i, row) in f.matrix().iter().enumerate() {
            for j in 0..f.k1() + f.k2() {
                let want = match (i < f.k1(), j < f.k1()) {
                    (true, true) => (i == j) as u8,
                    (false, true) => 0,
                    (false, false) => 2 * (i == j) as u8,
                    (true, false) => row.get(j),
                };
                prop_assert_eq!(row.get(j), want);
            }
        }
        let w = c.codeword_at(rank).unwrap();
        let (a, b) = f
            .coordinates(&w)
            .unwrap()
            .expect("codeword has coordinates");
        let mut sum = Z4Vector::zeros(n);
        for (u, &x) in f.unit_rows().iter().zip(&a) {
            sum = sum.add(&u.scale(x)).unwrap();
        }
        for (t, j) in f.torsion_rows().iter().zip(0..) {
            if b.get(j) {
                sum = sum.add(&Z4Vector::twice(t)).unwrap();
            }
        }
        prop_assert_eq!(sum, w);
        prop_assert_eq!(
            f.coordinates(&v).unwrap().is_some(),
            c.contains(&v).unwrap()
        );
        Ok(())
    })
}
