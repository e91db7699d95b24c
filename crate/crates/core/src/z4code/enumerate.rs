//! Codeword enumeration on packed bit planes.
//!
//! A codeword `sum a_i u_i + 2 sum b_j t_j` is visited for every coefficient
//! vector `a in Z4^k1`, `b in F_2^k2`. Adding `2 t` only flips the high plane,
//! so the order-2 part is walked in Gray-code order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::form::StandardForm;
use crate::bits::words_for;
use crate::z4vec::Z4Vector;

/// Generator rows flattened into `w`-word bit planes.
#[derive(Clone, Debug)]
pub(crate) struct Planes {
    pub n: usize,
    pub w: usize,
    pub k1: usize,
    pub k2: usize,
    unit_lo: Vec<u64>,
    unit_hi: Vec<u64>,
    neg_hi: Vec<u64>,
    tors: Vec<u64>,
}

fn flat(rows: impl Iterator<Item = Vec<u64>>, w: usize) -> Vec<u64> {
    rows.flat_map(|mut r| {
        r.resize(w, 0);
        r
    })
    .collect()
}

#[inline]
pub(crate) fn add_planes(lo: &mut [u64], hi: &mut [u64], al: &[u64], ah: &[u64]) {
    for i in 0..lo.len() {
        let carry = lo[i] & al[i];
        lo[i] ^= al[i];
        hi[i] ^= ah[i] ^ carry;
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d ^= s);
}

impl Planes {
    pub fn new(form: &StandardForm) -> Planes {
        let n = form.length();
        let w = words_for(n).max(1);
        let units = form.unit_rows();
        Planes {
            n,
            w,
            k1: units.len(),
            k2: form.torsion_rows().len(),
            unit_lo: flat(units.iter().map(|u| u.residue().words().to_vec()), w),
            unit_hi: flat(units.iter().map(|u| u.high_plane().words().to_vec()), w),
            neg_hi: flat(
                units.iter().map(|u| u.neg().high_plane().words().to_vec()),
                w,
            ),
            tors: flat(form.torsion_rows().iter().map(|t| t.words().to_vec()), w),
        }
    }

    fn row(v: &[u64], i: usize, w: usize) -> &[u64] {
        &v[i * w..(i + 1) * w]
    }

    /// Adds `a * u_i` to `(lo, hi)`.
    #[inline]
    pub fn add_unit(&self, lo: &mut [u64], hi: &mut [u64], i: usize, a: u8) {
        let w = self.w;
        let ul = Self::row(&self.unit_lo, i, w);
        match a % 4 {
            1 => add_planes(lo, hi, ul, Self::row(&self.unit_hi, i, w)),
            2 => xor_into(hi, ul),
            3 => add_planes(lo, hi, ul, Self::row(&self.neg_hi, i, w)),
            _ => {}
        }
    }

    #[inline]
    pub fn add_torsion(&self, hi: &mut [u64], j: usize) {
        xor_into(hi, Self::row(&self.tors, j, self.w));
    }

    /// Codeword of mixed-radix rank `rank`: the low `k2` bits are the order-2
    /// coefficients, the remaining base-4 digits the order-4 coefficients.
    pub fn codeword_at(&self, rank: u128) -> Z4Vector {
        let mut lo = vec![0u64; self.w];
        let mut hi = vec![0u64; self.w];
        for j in 0..self.k2 {
            if (rank >> j) & 1 == 1 {
                self.add_torsion(&mut hi, j);
            }
        }
        let mut rest = rank >> self.k2;
        for i in 0..self.k1 {
            self.add_unit(&mut lo, &mut hi, i, (rest & 3) as u8);
            rest >>= 2;
        }
        Z4Vector::from_words(self.n, &lo, &hi)
    }

    /// Folds `visit` over every codeword in parallel. Each task owns an
    /// accumulator from `init`; accumulators are combined with `merge`.
    pub fn fold<T, I, V, M>(&self, init: I, visit: V, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        V: Fn(&mut T, &[u64], &[u64]) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        let units: u64 = 1u64 << (2 * self.k1);
        let split = if units >= 64 { 0 } else { self.k2.min(6) };
        let inner = self.k2 - split;
        let tasks = units << split;
        (0..tasks)
            .into_par_iter()
            .fold(&init, |mut acc, task| {
                let w = self.w;
                let mut lo = vec![0u64; w];
                let mut hi = vec![0u64; w];
                let mut digits = task >> split;
                for i in 0..self.k1 {
                    self.add_unit(&mut lo, &mut hi, i, (digits & 3) as u8);
                    digits >>= 2;
                }
                let top = task & ((1u64 << split) - 1);
                for b in 0..split {
                    if (top >> b) & 1 == 1 {
                        self.add_torsion(&mut hi, inner + b);
                    }
                }
                visit(&mut acc, &lo, &hi);
                for step in 1u64..(1u64 << inner) {
                    self.add_torsion(&mut hi, step.trailing_zeros() as usize);
                    visit(&mut acc, &lo, &hi);
                }
                acc
            })
            .reduce(&init, merge)
    }

    /// Histogram over `(n1 + n3, n2)`, flattened as `j * (n + 1) + k`.
    pub fn swe_histogram(&self) -> Vec<u64> {
        let n1 = self.n + 1;
        self.fold(
            || vec![0u64; n1 * n1],
            |h, lo, hi| {
                let mut j = 0;
                let mut k = 0;
                for i in 0..lo.len() {
                    j += lo[i].count_ones() as usize;
                    k += (hi[i] & !lo[i]).count_ones() as usize;
                }
                h[j * n1 + k] += 1;
            },
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
    }

    /// Draws `count` uniform codewords with a seeded ChaCha stream and calls
    /// `check` on their planes; returns the first failing sample, if any.
    pub fn sample_find(
        &self,
        count: u64,
        seed: u64,
        check: impl Fn(&[u64], &[u64]) -> bool,
    ) -> Option<Z4Vector> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut lo = vec![0u64; self.w];
        let mut hi = vec![0u64; self.w];
        for _ in 0..count {
            lo.fill(0);
            hi.fill(0);
            for i in 0..self.k1 {
                let a: u8 = rng.random_range(0..4);
                self.add_unit(&mut lo, &mut hi, i, a);
            }
            for j in 0..self.k2 {
                if rng.random::<bool>() {
                    self.add_torsion(&mut hi, j);
                }
            }
            if !check(&lo, &hi) {
                return Some(Z4Vector::from_words(self.n, &lo, &hi));
            }
        }
        None
    }
}

/// Annihilator rows on bit planes: `v` is a codeword iff `<v, h> = 0` for all
/// rows `h` of a generator matrix of the dual code.
#[derive(Clone, Debug)]
pub(crate) struct Checker {
    w: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Checker {
    pub fn new(n: usize, dual_generators: &[Z4Vector]) -> Checker {
        let w = words_for(n).max(1);
        Checker {
            w,
            lo: flat(
                dual_generators.iter().map(|g| g.residue().words().to_vec()),
                w,
            ),
            hi: flat(
                dual_generators
                    .iter()
                    .map(|g| g.high_plane().words().to_vec()),
                w,
            ),
        }
    }

    pub fn accepts(&self, lo: &[u64], hi: &[u64]) -> bool {
        let w = self.w;
        self.lo
            .chunks_exact(w)
            .zip(self.hi.chunks_exact(w))
            .all(|(yl, yh)| {
                let mut ones = 0u32;
                let mut twos = 0u32;
                for i in 0..w {
                    ones += (lo[i] & yl[i]).count_ones();
                    twos += ((lo[i] & yh[i]) ^ (hi[i] & yl[i])).count_ones();
                }
                (ones + 2 * twos) % 4 == 0
            })
    }

    pub fn accepts_vector(&self, v: &Z4Vector) -> bool {
        let mut lo = v.residue().words().to_vec();
        let mut hi = v.high_plane().words().to_vec();
        lo.resize(self.w, 0);
        hi.resize(self.w, 0);
        self.accepts(&lo, &hi)
    }
}
