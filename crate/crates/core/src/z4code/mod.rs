//! Linear codes over Z4.

mod dist;
mod enumerate;
mod equiv;
mod form;
mod search;

use std::sync::OnceLock;

use num_bigint::BigUint;

pub use dist::{Method, Outcome, SweTable, Verdict, Z4WeightDistribution};
pub(crate) use enumerate::{Checker, Planes};
pub use equiv::{Monomial, MAX_EQUIVALENCE_LENGTH};
pub use form::StandardForm;

use crate::bincode::BinaryCode;
use crate::error::{Error, Result};
use crate::z4vec::{WeightKind, Z4Vector};

/// Codes with more than `2^MAX_ENUMERATION_LOG2` codewords are not enumerated
/// unless a caller raises the limit explicitly.
pub const MAX_ENUMERATION_LOG2: usize = 26;

/// Hard ceiling for explicitly requested exhaustive runs.
pub const EXHAUSTIVE_LIMIT_LOG2: usize = 34;

pub const DEFAULT_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// A Z4-submodule of `Z4^n`, given by generators. The standard form and the
/// dual parity checks are computed on first use.
#[derive(Clone, Debug)]
pub struct Z4Code {
    length: usize,
    generators: Vec<Z4Vector>,
    form: OnceLock<StandardForm>,
    checker: OnceLock<Checker>,
    planes: OnceLock<Planes>,
}

/// Counts of codewords sampled at random that violate each divisibility
/// property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub samples: u64,
    pub seed: u64,
    pub euclidean_not_0_mod_8: u64,
    pub lee_not_0_mod_4: u64,
    pub hamming_odd: u64,
}

impl SampleReport {
    pub fn all_pass(&self) -> bool {
        self.euclidean_not_0_mod_8 == 0 && self.lee_not_0_mod_4 == 0 && self.hamming_odd == 0
    }
}

impl Z4Code {
    pub fn new(length: usize, generators: Vec<Z4Vector>) -> Result<Self> {
        for g in &generators {
            Error::check_len(length, g.len())?;
        }
        Ok(Z4Code {
            length,
            generators,
            form: OnceLock::new(),
            checker: OnceLock::new(),
            planes: OnceLock::new(),
        })
    }

    pub fn zero(length: usize) -> Self {
        Z4Code::new(length, Vec::new()).unwrap()
    }

    pub fn full(length: usize) -> Self {
        let rows = (0..length)
            .map(|i| {
                let mut v = Z4Vector::zeros(length);
                v.set(i, 1);
                v
            })
            .collect();
        Z4Code::new(length, rows).unwrap()
    }

    /// Parses one generator per line, digits 0-3; blank lines are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse::<Z4Vector>)
            .collect::<Result<Vec<_>>>()?;
        let length = rows
            .first()
            .map(Z4Vector::len)
            .ok_or(Error::Empty("generator matrix"))?;
        Z4Code::new(length, rows)
    }

    /// Standard-form generators, one per line.
    pub fn to_text(&self) -> String {
        self.standard_form()
            .generators()
            .iter()
            .map(|g| format!("{g}\n"))
            .collect()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generators(&self) -> &[Z4Vector] {
        &self.generators
    }

    pub fn standard_form(&self) -> &StandardForm {
        self.form
            .get_or_init(|| StandardForm::compute(self.length, &self.generators))
    }

    /// `(k1, k2)` with the code of type `4^k1 2^k2`.
    pub fn type_of(&self) -> (usize, usize) {
        let f = self.standard_form();
        (f.k1(), f.k2())
    }

    /// `log2 |C| = 2 k1 + k2`.
    pub fn log2_cardinality(&self) -> usize {
        let (k1, k2) = self.type_of();
        2 * k1 + k2
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(1u8) << self.log2_cardinality()
    }

    pub fn contains(&self, v: &Z4Vector) -> Result<bool> {
        Ok(self.standard_form().coordinates(v)?.is_some())
    }

    fn checker(&self) -> &Checker {
        self.checker
            .get_or_init(|| Checker::new(self.length, &self.standard_form().dual_generators()))
    }

    pub(crate) fn planes(&self) -> &Planes {
        self.planes
            .get_or_init(|| Planes::new(self.standard_form()))
    }

    /// The annihilator `{x : <x, c> = 0 for all c in C}`, checked against the
    /// defining identities before it is returned.
    pub fn dual(&self) -> Result<Z4Code> {
        let rows = self.standard_form().dual_generators();
        let dual = Z4Code::new(self.length, rows)?;
        for x in dual.generators() {
            for c in &self.generators {
                if x.inner_product(c)? != 0 {
                    return Err(Error::ConstructionBug(format!(
                        "dual generator {x} is not orthogonal to {c}"
                    )));
                }
            }
        }
        if self.log2_cardinality() + dual.log2_cardinality() != 2 * self.length {
            return Err(Error::ConstructionBug(format!(
                "|C| |C^perp| = 2^{} instead of 4^{}",
                self.log2_cardinality() + dual.log2_cardinality(),
                self.length
            )));
        }
        Ok(dual)
    }

    /// `{c mod 2 : c in C}`.
    pub fn residue(&self) -> BinaryCode {
        let rows = self
            .generators
            .iter()
            .map(|g| g.residue().clone())
            .collect();
        BinaryCode::new(self.length, rows).expect("generator lengths checked")
    }

    /// `{v : 2 v in C}`.
    pub fn torsion(&self) -> BinaryCode {
        let f = self.standard_form();
        let rows = f
            .unit_rows()
            .iter()
            .map(|u| u.residue().clone())
            .chain(f.torsion_rows().iter().cloned())
            .collect();
        BinaryCode::new(self.length, rows).expect("generator lengths checked")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, x)| g[i..].iter().all(|y| x.inner_product(y) == Ok(0)))
    }

    pub fn is_self_dual(&self) -> bool {
        self.log2_cardinality() == self.length && self.is_self_orthogonal()
    }

    /// Same set of codewords.
    pub fn same_code(&self, other: &Z4Code) -> bool {
        self.length == other.length
            && self.type_of() == other.type_of()
            && other
                .generators
                .iter()
                .all(|g| self.contains(g) == Ok(true))
    }

    /// Closed under the cyclic shift.
    pub fn is_cyclic(&self) -> bool {
        self.generators
            .iter()
            .all(|g| self.contains(&g.cyclic_shift(1)) == Ok(true))
    }

    fn enumeration_guard(&self, limit_log2: usize) -> Result<()> {
        let size = self.log2_cardinality();
        if size > limit_log2.min(EXHAUSTIVE_LIMIT_LOG2) {
            Err(Error::Capacity {
                what: format!("enumerating 2^{size} codewords"),
                limit: format!("2^{}", limit_log2.min(EXHAUSTIVE_LIMIT_LOG2)),
                alternative: Some("the closed-form distributions or low-weight search"),
            })
        } else {
            Ok(())
        }
    }

    pub fn is_enumerable(&self) -> bool {
        self.log2_cardinality() <= MAX_ENUMERATION_LOG2
    }

    /// Codeword of mixed-radix rank `rank < |C|`: low `k2` bits select the
    /// order-2 generators, the remaining base-4 digits the order-4 ones.
    pub fn codeword_at(&self, rank: u128) -> Result<Z4Vector> {
        let size = self.log2_cardinality();
        if size < 128 && rank >> size != 0 {
            return Err(Error::precondition(format!(
                "rank {rank} is not below 2^{size}"
            )));
        }
        if size >= 128 {
            return Err(Error::capacity("ranking codewords", "2^127 codewords"));
        }
        Ok(self.planes().codeword_at(rank))
    }

    /// All codewords, in rank order.
    pub fn codewords(&self) -> Result<Vec<Z4Vector>> {
        self.enumeration_guard(MAX_ENUMERATION_LOG2)?;
        let p = self.planes();
        Ok((0..1u128 << self.log2_cardinality())
            .map(|r| p.codeword_at(r))
            .collect())
    }

    /// Symmetrized weight enumerator by enumeration.
    pub fn swe(&self) -> Result<SweTable> {
        self.swe_with_limit(MAX_ENUMERATION_LOG2)
    }

    /// As [`Z4Code::swe`] but with an explicit enumeration limit, for long
    /// exhaustive runs.
    pub fn swe_with_limit(&self, limit_log2: usize) -> Result<SweTable> {
        self.enumeration_guard(limit_log2)?;
        Ok(SweTable::from_histogram(
            self.length,
            &self.planes().swe_histogram(),
        ))
    }

    pub fn weight_distribution(&self, kind: WeightKind) -> Result<Z4WeightDistribution> {
        Ok(self.swe()?.distribution(kind))
    }

    /// Decides whether every codeword satisfies `pred(lo, hi)` by visiting
    /// all of them.
    fn all_codewords(&self, pred: impl Fn(&[u64], &[u64]) -> bool + Sync + Send) -> bool {
        self.planes().fold(
            || true,
            |ok, lo, hi| {
                if *ok && !pred(lo, hi) {
                    *ok = false;
                }
            },
            |a, b| a && b,
        )
    }

    /// Self-dual with every Euclidean weight divisible by 8.
    pub fn type_ii(&self) -> Verdict {
        if !self.is_self_dual() {
            return Verdict::new(false, Method::Generators);
        }
        // On a self-orthogonal code wt_E(x + y) = wt_E(x) + wt_E(y) mod 8,
        // so the generators decide it.
        let generators_ok = self
            .generators
            .iter()
            .all(|g| g.weight(WeightKind::Euclidean) % 8 == 0);
        if self.is_enumerable() {
            let all = self.all_codewords(|lo, hi| euclidean(lo, hi) % 8 == 0);
            return Verdict::new(all, Method::Enumeration);
        }
        Verdict::new(generators_ok, Method::Generators)
    }

    pub fn is_type_ii(&self) -> bool {
        self.type_ii().holds()
    }

    /// Self-dual with every Hamming weight even.
    ///
    /// Large codes use a certificate: if the code is Type II and every residue
    /// word has weight divisible by 8, then `wt_E = (n1 + n3) + 4 n2 = 0 mod 8`
    /// forces `n2` even and hence an even Hamming weight. Seeded samples are
    /// checked in addition.
    pub fn type_iv(&self, samples: u64, seed: u64) -> Verdict {
        if !self.is_self_dual() {
            return Verdict::new(false, Method::Generators);
        }
        if self.is_enumerable() {
            let all = self.all_codewords(|lo, hi| hamming(lo, hi) % 2 == 0);
            return Verdict::new(all, Method::Enumeration);
        }
        let certificate = self.type_ii().holds()
            && self
                .residue()
                .weight_distribution()
                .map(|d| {
                    d.counts
                        .iter()
                        .enumerate()
                        .all(|(w, c)| w % 8 == 0 || c.bits() == 0)
                })
                .unwrap_or(false);
        let counterexample = self
            .planes()
            .sample_find(samples, seed, |lo, hi| hamming(lo, hi) % 2 == 0);
        let method = Method::Certificate { samples, seed };
        match (certificate, counterexample) {
            (_, Some(_)) => Verdict::new(false, Method::Sampling { samples, seed }),
            (true, None) => Verdict::new(true, method),
            (false, None) => Verdict {
                outcome: Outcome::Undecided,
                method: Method::Sampling { samples, seed },
            },
        }
    }

    pub fn is_type_iv(&self) -> bool {
        self.type_iv(DEFAULT_SAMPLES, DEFAULT_SEED).holds()
    }

    /// Checks divisibility properties on `samples` seeded random codewords.
    pub fn sample_check(&self, samples: u64, seed: u64) -> SampleReport {
        use std::cell::Cell;
        let e = Cell::new(0u64);
        let l = Cell::new(0u64);
        let h = Cell::new(0u64);
        self.planes().sample_find(samples, seed, |lo, hi| {
            let odd = ones(lo);
            let twos = twos(lo, hi);
            if (odd + 4 * twos) % 8 != 0 {
                e.set(e.get() + 1);
            }
            if (odd + 2 * twos) % 4 != 0 {
                l.set(l.get() + 1);
            }
            if (odd + twos) % 2 != 0 {
                h.set(h.get() + 1);
            }
            true
        });
        SampleReport {
            samples,
            seed,
            euclidean_not_0_mod_8: e.get(),
            lee_not_0_mod_4: l.get(),
            hamming_odd: h.get(),
        }
    }

    /// `(d_H, d_L, d_E)`, or `None` for the zero code.
    pub fn min_weights(&self) -> Result<Option<(usize, usize, usize)>> {
        if self.log2_cardinality() == 0 {
            return Ok(None);
        }
        if self.is_enumerable() {
            let swe = self.swe()?;
            let min = |kind| swe.distribution(kind).min_nonzero().expect("nonzero code");
            return Ok(Some((
                min(WeightKind::Hamming),
                min(WeightKind::Lee),
                min(WeightKind::Euclidean),
            )));
        }
        let mut out = [0usize; 3];
        for (slot, kind) in out.iter_mut().zip(WeightKind::ALL) {
            *slot = self.min_weight_by_search(kind)?;
        }
        Ok(Some((out[0], out[1], out[2])))
    }

    fn min_weight_by_search(&self, kind: WeightKind) -> Result<usize> {
        for bound in 1..=search::MAX_SUPPORT {
            let words = self.low_weight_codewords(kind, bound)?;
            if let Some(w) = words.iter().map(|c| c.weight(kind)).min() {
                return Ok(w);
            }
        }
        Err(Error::capacity(
            format!("{} minimum weight search", kind.name()),
            format!("weight {}", search::MAX_SUPPORT),
        ))
    }
}

#[inline]
fn ones(lo: &[u64]) -> usize {
    lo.iter().map(|x| x.count_ones() as usize).sum()
}

#[inline]
fn twos(lo: &[u64], hi: &[u64]) -> usize {
    lo.iter()
        .zip(hi)
        .map(|(l, h)| (h & !l).count_ones() as usize)
        .sum()
}

#[inline]
fn euclidean(lo: &[u64], hi: &[u64]) -> usize {
    ones(lo) + 4 * twos(lo, hi)
}

#[inline]
fn hamming(lo: &[u64], hi: &[u64]) -> usize {
    ones(lo) + twos(lo, hi)
}
