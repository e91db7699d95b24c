//! Binary linear codes: reduced bases, duals, exact weight distributions and
//! the MacWilliams transform.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bits::BinVec;
use crate::error::{Error, Result};

/// Largest dimension for which codewords are enumerated one by one.
pub const MAX_ENUMERATION_DIMENSION: usize = 26;

/// Largest weight accepted by [`BinaryCode::min_weight_codewords`].
pub const MAX_SEARCH_WEIGHT: usize = 4;

#[derive(Clone, Debug)]
pub struct BinaryCode {
    length: usize,
    generators: Vec<BinVec>,
    /// Reduced row echelon basis; `pivots[i]` is the leading column of `basis[i]`.
    basis: Vec<BinVec>,
    pivots: Vec<usize>,
}

impl PartialEq for BinaryCode {
    /// Codes compare as sets of codewords.
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length && self.basis == other.basis
    }
}

impl Eq for BinaryCode {}

pub(crate) fn row_reduce(length: usize, rows: &[BinVec]) -> (Vec<BinVec>, Vec<usize>) {
    let mut rows: Vec<BinVec> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..length {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                *row ^= &pivot;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

impl BinaryCode {
    pub fn new(length: usize, generators: Vec<BinVec>) -> Result<Self> {
        for g in &generators {
            Error::check_len(length, g.len())?;
        }
        let (basis, pivots) = row_reduce(length, &generators);
        Ok(BinaryCode {
            length,
            generators,
            basis,
            pivots,
        })
    }

    pub fn zero(length: usize) -> Self {
        BinaryCode::new(length, Vec::new()).unwrap()
    }

    pub fn full(length: usize) -> Self {
        let rows = (0..length)
            .map(|i| BinVec::from_support(length, &[i]))
            .collect();
        BinaryCode::new(length, rows).unwrap()
    }

    /// Parses one generator per line, characters '0'/'1'; blank lines are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse::<BinVec>)
            .collect::<Result<Vec<_>>>()?;
        let length = rows
            .first()
            .map(BinVec::len)
            .ok_or(Error::Empty("generator matrix"))?;
        BinaryCode::new(length, rows)
    }

    pub fn to_text(&self) -> String {
        self.basis.iter().map(|r| format!("{r}\n")).collect()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[BinVec] {
        &self.generators
    }

    pub fn basis(&self) -> &[BinVec] {
        &self.basis
    }

    pub fn contains(&self, v: &BinVec) -> bool {
        if v.len() != self.length {
            return false;
        }
        let mut r = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r ^= row;
            }
        }
        r.is_zero()
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// `{x : <x, y> = 0 for all y in C}`.
    pub fn dual(&self) -> BinaryCode {
        let n = self.length;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BinVec::zeros(n);
                v.set(f, true);
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BinaryCode::new(n, rows).expect("dual rows have the code length")
    }

    /// True if every codeword has even weight. Even generators suffice, since
    /// `wt(x + y) = wt(x) + wt(y) - 2 |x & y|`.
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 2 == 0)
    }

    /// True if every weight is divisible by four. Exact generator certificate:
    /// doubly even basis vectors with pairwise even overlaps.
    pub fn is_doubly_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 4 == 0)
            && self
                .basis
                .iter()
                .enumerate()
                .all(|(i, x)| self.basis[i + 1..].iter().all(|y| x.overlap(y) % 2 == 0))
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains(&BinVec::ones(self.length))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, x)| self.basis[i..].iter().all(|y| !x.dot(y)))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length && self.is_self_orthogonal()
    }

    /// Closed under the cyclic shift `(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ...)`.
    pub fn is_cyclic(&self) -> bool {
        self.basis.iter().all(|b| self.contains(&b.cyclic_shift(1)))
    }

    fn enumeration_guard(&self) -> Result<()> {
        if self.dimension() > MAX_ENUMERATION_DIMENSION {
            Err(Error::Capacity {
                what: format!(
                    "enumerating a binary code of dimension {}",
                    self.dimension()
                ),
                limit: format!("dimension {MAX_ENUMERATION_DIMENSION}"),
                alternative: Some("the closed form or the MacWilliams transform"),
            })
        } else {
            Ok(())
        }
    }

    /// Exact weight distribution by Gray-code enumeration of all `2^k` codewords.
    pub fn weight_distribution(&self) -> Result<BinaryWeightDistribution> {
        self.enumeration_guard()?;
        let counts = self.weight_histogram();
        Ok(BinaryWeightDistribution {
            n: self.length,
            counts: counts.into_iter().map(BigUint::from).collect(),
        })
    }

    fn weight_histogram(&self) -> Vec<u64> {
        let n = self.length;
        let k = self.dimension();
        let w = crate::bits::words_for(n).max(1);
        let flat: Vec<u64> = self
            .basis
            .iter()
            .flat_map(|b| {
                let mut words = b.words().to_vec();
                words.resize(w, 0);
                words
            })
            .collect();
        // The top `split` coefficients select a chunk; each chunk walks the
        // remaining coefficients in Gray-code order.
        let split = k.min(6);
        let inner = k - split;
        (0u64..1 << split)
            .into_par_iter()
            .map(|chunk| {
                let mut hist = vec![0u64; n + 1];
                let mut cur = vec![0u64; w];
                for bit in 0..split {
                    if (chunk >> bit) & 1 == 1 {
                        let row = &flat[(inner + bit) * w..(inner + bit + 1) * w];
                        cur.iter_mut().zip(row).for_each(|(c, r)| *c ^= r);
                    }
                }
                let weight = |c: &[u64]| c.iter().map(|x| x.count_ones() as usize).sum::<usize>();
                hist[weight(&cur)] += 1;
                for step in 1u64..(1u64 << inner) {
                    let j = step.trailing_zeros() as usize;
                    let row = &flat[j * w..(j + 1) * w];
                    cur.iter_mut().zip(row).for_each(|(c, r)| *c ^= r);
                    hist[weight(&cur)] += 1;
                }
                hist
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    }

    /// Calls `f` on every codeword, in Gray-code order of the basis coefficients.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&BinVec)) -> Result<()> {
        self.enumeration_guard()?;
        let mut cur = BinVec::zeros(self.length);
        f(&cur);
        for step in 1u64..(1u64 << self.dimension()) {
            cur ^= &self.basis[step.trailing_zeros() as usize];
            f(&cur);
        }
        Ok(())
    }

    /// Minimum nonzero weight, by enumeration.
    pub fn minimum_distance(&self) -> Result<Option<usize>> {
        let dist = self.weight_distribution()?;
        Ok(dist
            .counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(w, _)| w))
    }

    /// All nonzero codewords of weight at most `bound`, found by testing every
    /// support of that size against the parity checks.
    pub fn min_weight_codewords(&self, bound: usize) -> Result<Vec<BinVec>> {
        if bound > MAX_SEARCH_WEIGHT {
            return Err(Error::capacity(
                format!("bounded-weight search with bound {bound}"),
                MAX_SEARCH_WEIGHT,
            ));
        }
        let n = self.length;
        let checks = self.dual();
        let r = checks.dimension();
        let w = crate::bits::words_for(r).max(1);
        // column syndromes of the parity-check matrix
        let mut syndromes = vec![0u64; n * w];
        for (ri, row) in checks.basis().iter().enumerate() {
            for c in row.iter_ones() {
                syndromes[c * w + ri / 64] |= 1u64 << (ri % 64);
            }
        }
        let mut found = Vec::new();
        let mut chosen = Vec::with_capacity(bound);
        let mut acc = vec![vec![0u64; w]; bound + 1];
        search_supports(
            n,
            bound,
            0,
            &syndromes,
            w,
            &mut chosen,
            &mut acc,
            &mut found,
        );
        found.sort();
        Ok(found
            .into_iter()
            .map(|support| BinVec::from_support(n, &support))
            .collect())
    }
}

#[allow(clippy::too_many_arguments)]
fn search_supports(
    n: usize,
    bound: usize,
    start: usize,
    syndromes: &[u64],
    w: usize,
    chosen: &mut Vec<usize>,
    acc: &mut [Vec<u64>],
    found: &mut Vec<Vec<usize>>,
) {
    let depth = chosen.len();
    if depth == bound {
        return;
    }
    for c in start..n {
        let (head, tail) = acc.split_at_mut(depth + 1);
        let next = &mut tail[0];
        for (i, x) in next.iter_mut().enumerate() {
            *x = head[depth][i] ^ syndromes[c * w + i];
        }
        chosen.push(c);
        if next.iter().all(|&x| x == 0) {
            found.push(chosen.clone());
        }
        search_supports(n, bound, c + 1, syndromes, w, chosen, acc, found);
        chosen.pop();
    }
}

/// Weight distribution `(A_0, ..., A_n)` of a binary code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryWeightDistribution {
    pub n: usize,
    pub counts: Vec<BigUint>,
}

impl BinaryWeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> Self {
        BinaryWeightDistribution {
            n: counts.len().saturating_sub(1),
            counts,
        }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        BinaryWeightDistribution::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn get(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// Dual distribution `A'_j = 2^-k sum_i A_i sum_l (-1)^l C(i,l) C(n-i, j-l)`,
    /// exact. Fails when the result is not a nonnegative integer, which means
    /// `k` does not belong to this distribution.
    pub fn macwilliams(&self, k: usize) -> Result<BinaryWeightDistribution> {
        let n = self.n;
        if self.total() != BigUint::one() << k {
            return Err(Error::Inconsistent(format!(
                "distribution total {} is not 2^{k}",
                self.total()
            )));
        }
        let binom = binomial_table(n);
        let divisor = BigInt::one() << k;
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut sum = BigInt::zero();
            for (i, a) in self.counts.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                sum += BigInt::from(a.clone()) * krawtchouk(&binom, n, j, i);
            }
            if sum.is_negative() || !(&sum % &divisor).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "MacWilliams coefficient A'_{j} = {sum}/2^{k} is not a nonnegative integer"
                )));
            }
            out.push((sum / &divisor).to_biguint().expect("nonnegative"));
        }
        Ok(BinaryWeightDistribution::new(out))
    }

    /// Counts as `u64`, if they all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(ToPrimitive::to_u64).collect()
    }

    /// Map from weight to count (decimal string), nonzero counts only.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.counts
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w.to_string(), serde_json::Value::String(c.to_string())))
                .collect(),
        )
    }
}

pub(crate) fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for j in 1..=i {
            t[i][j] = &t[i - 1][j - 1] + &t[i - 1][j];
        }
    }
    t
}

/// `K_j(i) = sum_l (-1)^l C(i, l) C(n - i, j - l)`.
fn krawtchouk(binom: &[Vec<BigInt>], n: usize, j: usize, i: usize) -> BigInt {
    let mut sum = BigInt::zero();
    for l in 0..=j.min(i) {
        if j - l > n - i {
            continue;
        }
        let term = &binom[i][l] * &binom[n - i][j - l];
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}
