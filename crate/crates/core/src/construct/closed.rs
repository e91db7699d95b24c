//! Closed-form weight distributions of the extended codes of length `2^m`.
//!
//! Every codeword has `n1 + n3` in `{0, 2^(m-1), 2^m}`. The all-even words
//! are twice the torsion code, the all-odd class has `2^(2^m - 2)` words, and
//! the middle class has `2^(2^(m-1))` sign patterns times a choice of `n2`
//! twos among the `2^(m-1)` even positions.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::bincode::{binomial_table, BinaryWeightDistribution};
use crate::error::{Error, Result};
use crate::z4code::{SweTable, Z4WeightDistribution};
use crate::z4vec::WeightKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormDistributions {
    pub m: usize,
    /// `A'_0 .. A'_(2^m)` of the torsion code.
    pub torsion: BinaryWeightDistribution,
    /// `s_i`, nonzero only at `i = 2^m`.
    pub s: BTreeMap<usize, BigUint>,
    /// `t_i` for `2^(m-1) <= i <= 5 * 2^(m-1)`, `8 | i`.
    pub t: BTreeMap<usize, BigUint>,
    /// `u_i` for `2^(m-1) <= i <= 3 * 2^(m-1)`, `4 | i`.
    pub u: BTreeMap<usize, BigUint>,
    pub euclidean: Z4WeightDistribution,
    /// Only for `m >= 5`; at `m = 3` the middle class has odd `n2` and the
    /// formula does not apply.
    pub lee: Option<Z4WeightDistribution>,
    /// Symmetrized weight enumerator with the middle class restricted to the
    /// `n2` parity forced by `8 | wt_E`.
    pub swe: SweTable,
    /// The same sum taken over every `n2`, which counts the middle class twice.
    pub swe_literal: SweTable,
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn to_uint(x: &BigInt) -> BigUint {
    x.to_biguint().expect("nonnegative")
}

pub fn closed_form(m: usize) -> Result<ClosedFormDistributions> {
    if m < 3 || m % 2 == 0 || m > 11 {
        return Err(Error::UnsupportedArity {
            arity: m,
            reason: "closed forms are defined for odd m >= 3 (evaluated up to m = 11)",
        });
    }
    let n = 1usize << m;
    let h = n / 2;
    let binom = binomial_table(n);
    let c = |a: usize, b: usize| -> BigInt {
        if b > a {
            BigInt::zero()
        } else {
            binom[a][b].clone()
        }
    };

    let torsion: Vec<BigUint> = (0..=n)
        .map(|j| {
            // A'_j = 0 for odd j
            if j % 2 == 1 {
                return BigUint::zero();
            }
            let mut sum = c(n, j);
            for l in 0..=j {
                let term = c(h, l) * c(h, j - l);
                if l % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            to_uint(&(sum / 2))
        })
        .collect();
    let a = |j: usize| torsion.get(j).cloned().unwrap_or_default();

    let s = BTreeMap::from([(n, pow2(n - 2))]);
    let middle = pow2(h);
    let t: BTreeMap<usize, BigUint> = (h..=5 * h)
        .filter(|i| i % 8 == 0)
        .map(|i| (i, &middle * to_uint(&c(h, (i - h) / 4))))
        .collect();
    let u: BTreeMap<usize, BigUint> = (h..=3 * h)
        .filter(|i| i % 4 == 0)
        .map(|i| (i, &middle * to_uint(&c(h, (i - h) / 2))))
        .collect();
    let get = |map: &BTreeMap<usize, BigUint>, i: usize| map.get(&i).cloned().unwrap_or_default();

    let mut euclidean = Z4WeightDistribution::new(WeightKind::Euclidean);
    for i in (0..=4 * n).step_by(8) {
        let w = a(i / 4) + get(&s, i) + get(&t, i);
        if !w.is_zero() {
            euclidean.counts.insert(i, w);
        }
    }
    let lee = (m >= 5).then(|| {
        let mut lee = Z4WeightDistribution::new(WeightKind::Lee);
        for i in (0..=2 * n).step_by(4) {
            let w = a(i / 2) + get(&s, i) + get(&u, i);
            if !w.is_zero() {
                lee.counts.insert(i, w);
            }
        }
        lee
    });

    let parity = if m == 3 { 1 } else { 0 };
    let mut swe = SweTable::new(n);
    let mut swe_literal = SweTable::new(n);
    for (k, ak) in torsion.iter().enumerate() {
        swe.add(0, k, ak.clone());
        swe_literal.add(0, k, ak.clone());
    }
    swe.add(n, 0, pow2(n - 2));
    swe_literal.add(n, 0, pow2(n - 2));
    for k in 0..=h {
        let count = &middle * to_uint(&c(h, k));
        if k % 2 == parity {
            swe.add(h, k, count.clone());
        }
        swe_literal.add(h, k, count);
    }

    Ok(ClosedFormDistributions {
        m,
        torsion: BinaryWeightDistribution::new(torsion),
        s,
        t,
        u,
        euclidean,
        lee,
        swe,
        swe_literal,
    })
}

impl ClosedFormDistributions {
    pub fn length(&self) -> usize {
        1 << self.m
    }

    /// `2^(2^m)`, the size of a self-dual code of length `2^m`.
    pub fn code_size(&self) -> BigUint {
        pow2(self.length())
    }

    /// The literal and restricted enumerators differ by the doubled middle
    /// class; true when that is the only difference.
    pub fn literal_swe_overcounts(&self) -> bool {
        self.swe_literal.total() - self.swe.total() == pow2(self.length() - 1)
    }

    pub fn to_json(&self) -> Value {
        let seq = |map: &BTreeMap<usize, BigUint>| -> Value {
            Value::Object(
                map.iter()
                    .map(|(i, c)| (i.to_string(), Value::String(c.to_string())))
                    .collect(),
            )
        };
        json!({
            "m": self.m,
            "length": self.length(),
            "torsion": self.torsion.to_json(),
            "s": seq(&self.s),
            "t": seq(&self.t),
            "u": seq(&self.u),
            "euclidean": self.euclidean.to_json(),
            "lee": self.lee.as_ref().map(Z4WeightDistribution::to_json),
            "swe": self.swe.to_json(),
            "swe_literal": self.swe_literal.to_json(),
            "swe_literal_total": self.swe_literal.total().to_string(),
            "swe_literal_overcounts_middle_class": self.literal_swe_overcounts(),
        })
    }

    /// Weight distribution of the Gray image (a binary code of length
    /// `2^(m+1)`), equal to the Lee distribution; `None` for `m = 3`.
    pub fn gray_image_distribution(&self) -> Option<BinaryWeightDistribution> {
        let lee = self.lee.as_ref()?;
        let mut counts = vec![BigUint::zero(); 2 * self.length() + 1];
        for (&w, c) in &lee.counts {
            counts[w] = c.clone();
        }
        Some(BinaryWeightDistribution::new(counts))
    }
}
