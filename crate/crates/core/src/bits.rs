//! Packed binary vectors over F_2.

use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Words = SmallVec<[u64; 2]>;

pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// A fixed-length vector over F_2, packed 64 coordinates per word.
///
/// Coordinate `i` lives in bit `i % 64` of word `i / 64`. Bits past `len`
/// are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinVec {
    len: usize,
    words: Words,
}

impl BinVec {
    pub fn zeros(len: usize) -> Self {
        BinVec {
            len,
            words: smallvec::smallvec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BinVec::zeros(len);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.mask_tail();
        v
    }

    /// Builds a vector from 0/1 entries; any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BinVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = BinVec::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub(crate) fn from_words(len: usize, words: Words) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        let mut v = BinVec { len, words };
        v.mask_tail();
        v
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn mask_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Standard inner product over F_2.
    pub fn dot(&self, other: &BinVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    /// Size of the intersection of the two supports.
    pub fn overlap(&self, other: &BinVec) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    /// Moves the entry at index `i` to index `(i + k) mod len`.
    pub fn cyclic_shift(&self, k: i64) -> BinVec {
        let n = self.len;
        if n == 0 {
            return self.clone();
        }
        let k = k.rem_euclid(n as i64) as usize;
        let mut out = BinVec::zeros(n);
        for i in self.iter_ones() {
            out.set((i + k) % n, true);
        }
        out
    }

    /// Applies a coordinate map: entry `i` moves to `map[i]`.
    pub fn permute(&self, map: &[usize]) -> BinVec {
        assert_eq!(map.len(), self.len);
        let mut out = BinVec::zeros(self.len);
        for i in self.iter_ones() {
            out.set(map[i], true);
        }
        out
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl BitXorAssign<&BinVec> for BinVec {
    fn bitxor_assign(&mut self, rhs: &BinVec) {
        assert_eq!(self.len, rhs.len);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &BinVec {
    type Output = BinVec;

    fn bitxor(self, rhs: &BinVec) -> BinVec {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl BitAnd for &BinVec {
    type Output = BinVec;

    fn bitand(self, rhs: &BinVec) -> BinVec {
        assert_eq!(self.len, rhs.len);
        let words = self
            .words
            .iter()
            .zip(&rhs.words)
            .map(|(a, b)| a & b)
            .collect();
        BinVec {
            len: self.len,
            words,
        }
    }
}

impl fmt::Display for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinVec({self})")
    }
}

impl FromStr for BinVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse {
                    position: i,
                    message: format!("expected '0' or '1', found {other:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(BinVec::from_bits(&bits))
    }
}
