//! Vectors over Z4 stored as two bit planes.
//!
//! An entry `x = lo + 2*hi` is split into its low bit and high bit, so mod-4
//! addition, weights, inner products and the Gray map all reduce to word-wide
//! bit operations.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::BinVec;
use crate::error::{Error, Result};

/// Symbol counts `n_0, n_1, n_2, n_3` of a vector over Z4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SymbolCounts {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl SymbolCounts {
    pub fn hamming(&self) -> usize {
        self.n1 + self.n2 + self.n3
    }

    pub fn lee(&self) -> usize {
        self.n1 + 2 * self.n2 + self.n3
    }

    pub fn euclidean(&self) -> usize {
        self.n1 + 4 * self.n2 + self.n3
    }

    pub fn weight(&self, kind: WeightKind) -> usize {
        kind.of(self.n1 + self.n3, self.n2)
    }
}

/// The three weights used on Z4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Hamming,
    Lee,
    Euclidean,
}

impl WeightKind {
    pub const ALL: [WeightKind; 3] = [WeightKind::Hamming, WeightKind::Lee, WeightKind::Euclidean];

    /// Weight of a word with `odd = n1 + n3` odd entries and `twos = n2` twos.
    pub fn of(self, odd: usize, twos: usize) -> usize {
        match self {
            WeightKind::Hamming => odd + twos,
            WeightKind::Lee => odd + 2 * twos,
            WeightKind::Euclidean => odd + 4 * twos,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Lee => "lee",
            WeightKind::Euclidean => "euclidean",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weights {
    pub hamming: usize,
    pub lee: usize,
    pub euclidean: usize,
}

/// A fixed-length vector over Z4.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Vector {
    lo: BinVec,
    hi: BinVec,
}

impl Z4Vector {
    pub fn zeros(len: usize) -> Self {
        Z4Vector {
            lo: BinVec::zeros(len),
            hi: BinVec::zeros(len),
        }
    }

    /// Entries are reduced mod 4.
    pub fn from_entries(entries: &[u8]) -> Self {
        let mut v = Z4Vector::zeros(entries.len());
        for (i, &x) in entries.iter().enumerate() {
            v.set(i, x);
        }
        v
    }

    pub fn from_planes(lo: BinVec, hi: BinVec) -> Self {
        assert_eq!(lo.len(), hi.len());
        Z4Vector { lo, hi }
    }

    /// The vector `2 * v` for a binary `v`.
    pub fn twice(v: &BinVec) -> Self {
        Z4Vector {
            lo: BinVec::zeros(v.len()),
            hi: v.clone(),
        }
    }

    /// Lifts a binary vector to the Z4 vector with entries in {0, 1}.
    pub fn lift(v: &BinVec) -> Self {
        Z4Vector {
            lo: v.clone(),
            hi: BinVec::zeros(v.len()),
        }
    }

    pub fn len(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.lo.get(i) as u8 | (self.hi.get(i) as u8) << 1
    }

    pub fn set(&mut self, i: usize, x: u8) {
        self.lo.set(i, x & 1 == 1);
        self.hi.set(i, x & 2 == 2);
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Low-bit plane; this is the reduction mod 2.
    pub fn residue(&self) -> &BinVec {
        &self.lo
    }

    pub fn high_plane(&self) -> &BinVec {
        &self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    /// True if every entry is 0 or 2.
    pub fn is_even(&self) -> bool {
        self.lo.is_zero()
    }

    /// For an even vector `2u`, returns `u`.
    pub fn halve(&self) -> Option<BinVec> {
        self.is_even().then(|| self.hi.clone())
    }

    pub fn counts(&self) -> SymbolCounts {
        let mut c = SymbolCounts::default();
        for (l, h) in self.lo.words().iter().zip(self.hi.words()) {
            c.n1 += (l & !h).count_ones() as usize;
            c.n2 += (!l & h).count_ones() as usize;
            c.n3 += (l & h).count_ones() as usize;
        }
        c.n0 = self.len() - c.n1 - c.n2 - c.n3;
        c
    }

    pub fn weights(&self) -> Weights {
        let c = self.counts();
        Weights {
            hamming: c.hamming(),
            lee: c.lee(),
            euclidean: c.euclidean(),
        }
    }

    pub fn weight(&self, kind: WeightKind) -> usize {
        self.counts().weight(kind)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lo.get(i) || self.hi.get(i))
            .collect()
    }

    /// `<x, y> = sum x_i y_i mod 4`.
    pub fn inner_product(&self, other: &Z4Vector) -> Result<u8> {
        Error::check_len(self.len(), other.len())?;
        let mut unit = 0u32;
        let mut cross = 0u32;
        let planes = self
            .lo
            .words()
            .iter()
            .zip(self.hi.words())
            .zip(other.lo.words().iter().zip(other.hi.words()));
        for ((xl, xh), (yl, yh)) in planes {
            unit += (xl & yl).count_ones();
            cross += ((xl & yh) ^ (xh & yl)).count_ones();
        }
        Ok(((unit + 2 * cross) % 4) as u8)
    }

    /// Componentwise sum mod 4.
    pub fn add(&self, other: &Z4Vector) -> Result<Z4Vector> {
        Error::check_len(self.len(), other.len())?;
        let carry = &self.lo & &other.lo;
        let lo = &self.lo ^ &other.lo;
        let mut hi = &self.hi ^ &other.hi;
        hi ^= &carry;
        Ok(Z4Vector { lo, hi })
    }

    pub fn sub(&self, other: &Z4Vector) -> Result<Z4Vector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Z4Vector {
        Z4Vector {
            lo: self.lo.clone(),
            hi: &self.hi ^ &self.lo,
        }
    }

    pub fn scale(&self, c: u8) -> Z4Vector {
        match c % 4 {
            0 => Z4Vector::zeros(self.len()),
            1 => self.clone(),
            2 => Z4Vector::twice(&self.lo),
            _ => self.neg(),
        }
    }

    /// Componentwise product `(x_1 y_1, ..., x_n y_n)`.
    pub fn hadamard(&self, other: &Z4Vector) -> Result<Z4Vector> {
        Error::check_len(self.len(), other.len())?;
        let lo = &self.lo & &other.lo;
        let hi = &(&self.lo & &other.hi) ^ &(&self.hi & &other.lo);
        Ok(Z4Vector { lo, hi })
    }

    /// Moves the entry at index `i` to index `(i + k) mod n`.
    pub fn cyclic_shift(&self, k: i64) -> Z4Vector {
        Z4Vector {
            lo: self.lo.cyclic_shift(k),
            hi: self.hi.cyclic_shift(k),
        }
    }

    /// Entry `i` moves to position `map[i]`.
    pub fn permute(&self, map: &[usize]) -> Z4Vector {
        Z4Vector {
            lo: self.lo.permute(map),
            hi: self.hi.permute(map),
        }
    }

    /// Gray map, 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, concatenated in
    /// coordinate order. The first bit of each pair is the high bit and the
    /// second is `hi xor lo`.
    pub fn gray_map(&self) -> BinVec {
        let n = self.len();
        let mut out = BinVec::zeros(2 * n);
        for i in 0..n {
            let l = self.lo.get(i);
            let h = self.hi.get(i);
            if h {
                out.set(2 * i, true);
            }
            if h ^ l {
                out.set(2 * i + 1, true);
            }
        }
        out
    }

    pub(crate) fn from_words(len: usize, lo: &[u64], hi: &[u64]) -> Self {
        let n = crate::bits::words_for(len);
        Z4Vector {
            lo: BinVec::from_words(len, lo[..n].iter().copied().collect()),
            hi: BinVec::from_words(len, hi[..n].iter().copied().collect()),
        }
    }
}

impl Add for &Z4Vector {
    type Output = Z4Vector;

    /// Panics on a length mismatch; use [`Z4Vector::add`] for a checked sum.
    fn add(self, rhs: &Z4Vector) -> Z4Vector {
        Z4Vector::add(self, rhs).expect("length mismatch in Z4Vector addition")
    }
}

impl Neg for &Z4Vector {
    type Output = Z4Vector;

    fn neg(self) -> Z4Vector {
        Z4Vector::neg(self)
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Vector({self})")
    }
}

impl FromStr for Z4Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c.to_digit(10) {
                Some(d) if d < 4 => Ok(d as u8),
                _ => Err(Error::Parse {
                    position: i,
                    message: format!("expected a digit 0-3, found {c:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Z4Vector::from_entries(&entries))
    }
}
