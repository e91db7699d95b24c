//! Symmetrized weight enumerators, weight distributions and verdicts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::z4vec::WeightKind;

/// Symmetrized weight enumerator: the number of codewords with
/// `n1 + n3 = j` and `n2 = k`, for every `(j, k)` that occurs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SweTable {
    pub n: usize,
    pub terms: BTreeMap<(usize, usize), BigUint>,
}

impl SweTable {
    pub fn new(n: usize) -> Self {
        SweTable {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn from_histogram(n: usize, hist: &[u64]) -> Self {
        let mut t = SweTable::new(n);
        for (idx, &c) in hist.iter().enumerate() {
            if c != 0 {
                t.terms
                    .insert((idx / (n + 1), idx % (n + 1)), BigUint::from(c));
            }
        }
        t
    }

    pub fn add(&mut self, j: usize, k: usize, count: BigUint) {
        if !count.is_zero() {
            *self.terms.entry((j, k)).or_default() += count;
        }
    }

    pub fn get(&self, j: usize, k: usize) -> BigUint {
        self.terms.get(&(j, k)).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// The marginal distribution of one weight.
    pub fn distribution(&self, kind: WeightKind) -> Z4WeightDistribution {
        let mut d = Z4WeightDistribution::new(kind);
        for (&(j, k), c) in &self.terms {
            *d.counts.entry(kind.of(j, k)).or_default() += c;
        }
        d
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(j, k), c)| json!({"j": j, "k": k, "count": c.to_string()}))
                .collect(),
        )
    }
}

impl fmt::Display for SweTable {
    /// Polynomial in `a, b, c`, terms ordered by `(j, k)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(j, k), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*a^{}*b^{j}*c^{k}", self.n - j - k)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Number of codewords of each weight of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4WeightDistribution {
    pub kind: WeightKind,
    pub counts: BTreeMap<usize, BigUint>,
}

impl Z4WeightDistribution {
    pub fn new(kind: WeightKind) -> Self {
        Z4WeightDistribution {
            kind,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_pairs(kind: WeightKind, pairs: &[(usize, u64)]) -> Self {
        let mut d = Z4WeightDistribution::new(kind);
        for &(w, c) in pairs {
            if c != 0 {
                d.counts.insert(w, BigUint::from(c));
            }
        }
        d
    }

    pub fn get(&self, w: usize) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_nonzero(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// `(weight, count)` pairs with counts as `u64`; panics on overflow.
    pub fn to_pairs(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .map(|(&w, c)| (w, u64::try_from(c.clone()).expect("count fits in u64")))
            .collect()
    }

    /// Map from weight (as a string) to count (as a decimal string).
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.counts
                .iter()
                .map(|(w, c)| (w.to_string(), Value::String(c.to_string())))
                .collect(),
        )
    }
}

/// How a property was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// A criterion on the generators that is exact for every codeword.
    Generators,
    /// Every codeword was checked.
    Enumeration,
    /// A structural certificate on generators plus seeded random sampling.
    Certificate { samples: u64, seed: u64 },
    /// A seeded random sample found a counterexample.
    Sampling { samples: u64, seed: u64 },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Generators => "generators",
            Method::Enumeration => "enumeration",
            Method::Certificate { .. } => "certificate+sampling",
            Method::Sampling { .. } => "sampling",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    /// No counterexample was found but no certificate applies either.
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub method: Method,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub(crate) fn new(holds: bool, method: Method) -> Self {
        Verdict {
            outcome: if holds {
                Outcome::Holds
            } else {
                Outcome::Fails
            },
            method,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "holds": self.holds(),
            "outcome": match self.outcome {
                Outcome::Holds => "holds",
                Outcome::Fails => "fails",
                Outcome::Undecided => "undecided",
            },
            "method": self.method.name(),
        });
        if let Method::Certificate { samples, seed } | Method::Sampling { samples, seed } =
            self.method
        {
            v["samples"] = json!(samples);
            v["seed"] = json!(seed);
        }
        v
    }
}
