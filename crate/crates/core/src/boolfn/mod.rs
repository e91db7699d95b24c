//! Boolean and generalized Boolean functions, Walsh-Hadamard spectra, and
//! the bent-pair construction of Z4-valued gbent functions.
//!
//! Truth tables are indexed so that `x_1` is the most significant bit of the
//! index: entry `i` is `f(x_1, ..., x_n)` where `i = x_1 x_2 ... x_n` in binary.

mod anf;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use anf::Anf;

use crate::error::{Error, Result};
use crate::z4vec::Z4Vector;

/// Largest arity accepted for truth-table functions.
pub const MAX_ARITY: usize = 20;

fn arity_of_len(len: usize) -> Option<usize> {
    (len.is_power_of_two() && len >= 2).then(|| len.trailing_zeros() as usize)
}

fn parse_digits(s: &str, radix_limit: u32) -> Result<Vec<u8>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .enumerate()
        .map(|(i, c)| match c.to_digit(10) {
            Some(d) if d < radix_limit => Ok(d as u8),
            _ => Err(Error::Parse {
                position: i,
                message: format!("expected a digit below {radix_limit}, found {c:?}"),
            }),
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    arity: usize,
    table: Vec<u8>,
}

impl BooleanFunction {
    pub fn from_table(table: Vec<u8>) -> Result<Self> {
        let arity = arity_of_len(table.len()).ok_or_else(|| {
            Error::precondition(format!(
                "truth table length {} is not a power of two >= 2",
                table.len()
            ))
        })?;
        if arity > MAX_ARITY {
            return Err(Error::UnsupportedArity {
                arity,
                reason: "truth tables are limited to 20 variables",
            });
        }
        if let Some(i) = table.iter().position(|&b| b > 1) {
            return Err(Error::Parse {
                position: i,
                message: "Boolean table entries must be 0 or 1".into(),
            });
        }
        Ok(BooleanFunction { arity, table })
    }

    pub fn from_anf(text: &str, arity: usize) -> Result<Self> {
        let table = Anf::parse(text, arity)?.truth_table();
        Ok(BooleanFunction { arity, table })
    }

    pub fn constant(arity: usize, value: bool) -> Self {
        BooleanFunction {
            arity,
            table: vec![value as u8; 1 << arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn eval(&self, index: usize) -> u8 {
        self.table[index]
    }

    pub fn weight(&self) -> usize {
        self.table.iter().filter(|&&b| b == 1).count()
    }

    pub fn zero_count(&self) -> usize {
        self.table.len() - self.weight()
    }

    /// `W_f(v) = sum_x (-1)^(f(x) + <v, x>)` for every `v` in index order,
    /// computed with the in-place butterfly.
    pub fn walsh_hadamard(&self) -> Vec<i64> {
        let mut spectrum: Vec<i64> = self
            .table
            .iter()
            .map(|&b| if b == 0 { 1 } else { -1 })
            .collect();
        fwht(&mut spectrum);
        spectrum
    }

    pub fn is_bent(&self) -> bool {
        if self.arity % 2 == 1 {
            return false;
        }
        let target = 1i64 << (self.arity / 2);
        self.walsh_hadamard().iter().all(|w| w.abs() == target)
    }

    /// Algebraic normal form, monomials by degree then variable index, e.g.
    /// `x1*x2+x3`; `0` for the zero function.
    pub fn to_anf(&self) -> String {
        let n = self.arity;
        let mut coef = self.table.clone();
        for bit in 0..n {
            for i in 0..coef.len() {
                if i >> bit & 1 == 1 {
                    coef[i] ^= coef[i ^ (1 << bit)];
                }
            }
        }
        let mut monomials: Vec<Vec<usize>> = (0..coef.len())
            .filter(|&u| coef[u] == 1)
            .map(|u| (1..=n).filter(|j| u >> (n - j) & 1 == 1).collect())
            .collect();
        monomials.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        if monomials.is_empty() {
            return "0".into();
        }
        monomials
            .iter()
            .map(|m| {
                if m.is_empty() {
                    "1".to_string()
                } else {
                    m.iter()
                        .map(|j| format!("x{j}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.table {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction({self})")
    }
}

impl FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BooleanFunction::from_table(parse_digits(s, 2)?)
    }
}

/// In-place Walsh-Hadamard butterfly. `data.len()` must be a power of two.
pub fn fwht<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in data.chunks_mut(2 * h) {
            let (left, right) = block.split_at_mut(h);
            for (a, b) in left.iter_mut().zip(right.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// All bent functions of arity 2 or 4, in lexicographic truth-table order.
pub fn enumerate_bent(arity: usize) -> Result<Vec<BooleanFunction>> {
    if arity != 2 && arity != 4 {
        return Err(Error::UnsupportedArity {
            arity,
            reason: "exhaustive bent enumeration supports only 2 or 4 variables",
        });
    }
    let size = 1usize << arity;
    let target = 1i64 << (arity / 2);
    let mut out = Vec::new();
    let mut spectrum = vec![0i64; size];
    // The first table entry is the most significant bit of `t`, so counting
    // upward walks the tables in lexicographic order.
    for t in 0u64..(1u64 << size) {
        for (i, s) in spectrum.iter_mut().enumerate() {
            *s = if (t >> (size - 1 - i)) & 1 == 0 {
                1
            } else {
                -1
            };
        }
        fwht(&mut spectrum);
        if spectrum.iter().all(|w| w.abs() == target) {
            let table = (0..size)
                .map(|i| ((t >> (size - 1 - i)) & 1) as u8)
                .collect();
            out.push(BooleanFunction { arity, table });
        }
    }
    Ok(out)
}

/// The two admissible zero counts `2^(n-1) (1 +- 2^(-n/2))` of a bent
/// function on `n` variables, smaller first.
pub fn zero_count_values(arity: usize) -> Result<[usize; 2]> {
    if arity < 2 || arity % 2 == 1 {
        return Err(Error::UnsupportedArity {
            arity,
            reason: "bent functions need an even number of variables >= 2",
        });
    }
    let base = 1usize << (arity - 1);
    let delta = 1usize << (arity / 2 - 1);
    Ok([base - delta, base + delta])
}

/// Exact Gaussian integer `re + im*i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GaussianInteger {
    pub re: i64,
    pub im: i64,
}

impl GaussianInteger {
    pub const ZERO: Self = GaussianInteger { re: 0, im: 0 };
    pub const ONE: Self = GaussianInteger { re: 1, im: 0 };
    pub const I: Self = GaussianInteger { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussianInteger { re, im }
    }

    /// `i^k`.
    pub fn i_pow(k: u8) -> Self {
        match k % 4 {
            0 => GaussianInteger::new(1, 0),
            1 => GaussianInteger::new(0, 1),
            2 => GaussianInteger::new(-1, 0),
            _ => GaussianInteger::new(0, -1),
        }
    }

    pub fn norm(&self) -> i64 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for GaussianInteger {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianInteger::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianInteger {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianInteger::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianInteger {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianInteger::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for GaussianInteger {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianInteger::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// A map from F_2^n to Z4, stored as its truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedBooleanFunction {
    arity: usize,
    table: Vec<u8>,
}

impl GeneralizedBooleanFunction {
    pub fn from_table(table: Vec<u8>) -> Result<Self> {
        let arity = arity_of_len(table.len()).ok_or_else(|| {
            Error::precondition(format!(
                "truth table length {} is not a power of two >= 2",
                table.len()
            ))
        })?;
        if arity > MAX_ARITY {
            return Err(Error::UnsupportedArity {
                arity,
                reason: "truth tables are limited to 20 variables",
            });
        }
        if let Some(i) = table.iter().position(|&b| b > 3) {
            return Err(Error::Parse {
                position: i,
                message: "Z4 table entries must be 0..=3".into(),
            });
        }
        Ok(GeneralizedBooleanFunction { arity, table })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// `sum_x i^f(x) (-1)^<v, x>` for every `v` in index order.
    pub fn generalized_walsh_hadamard(&self) -> Vec<GaussianInteger> {
        let mut spectrum: Vec<GaussianInteger> = self
            .table
            .iter()
            .map(|&k| GaussianInteger::i_pow(k))
            .collect();
        fwht(&mut spectrum);
        spectrum
    }

    /// Every spectral value has squared modulus exactly `2^n`.
    pub fn is_gbent(&self) -> bool {
        let target = 1i64 << self.arity;
        self.generalized_walsh_hadamard()
            .iter()
            .all(|w| w.norm() == target)
    }

    /// The table read as a codeword of length `2^n`.
    pub fn truth_vector(&self) -> Z4Vector {
        Z4Vector::from_entries(&self.table)
    }
}

impl fmt::Display for GeneralizedBooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.table {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneralizedBooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneralizedBooleanFunction({self})")
    }
}

impl FromStr for GeneralizedBooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneralizedBooleanFunction::from_table(parse_digits(s, 4)?)
    }
}

/// `f(x, y) = 2a(x)(1 + y) + 2b(x)y + y` on `m = n + 1` variables, with `y` the
/// least significant index bit. Both inputs are re-checked for bentness.
pub fn gbent_from_bent_pair(
    a: &BooleanFunction,
    b: &BooleanFunction,
) -> Result<GeneralizedBooleanFunction> {
    if a.arity() != b.arity() {
        return Err(Error::precondition(format!(
            "bent functions must share an arity, got {} and {}",
            a.arity(),
            b.arity()
        )));
    }
    if a.arity() % 2 == 1 {
        return Err(Error::precondition(format!(
            "bent functions need an even arity, got {}",
            a.arity()
        )));
    }
    for (name, g) in [("a", a), ("b", b)] {
        if !g.is_bent() {
            return Err(Error::precondition(format!("{name} = {g} is not bent")));
        }
    }
    let mut table = Vec::with_capacity(2 * a.table.len());
    for (&ax, &bx) in a.table.iter().zip(&b.table) {
        table.push(2 * ax);
        table.push((2 * bx + 1) % 4);
    }
    Ok(GeneralizedBooleanFunction {
        arity: a.arity() + 1,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anf(s: &str, n: usize) -> BooleanFunction {
        BooleanFunction::from_anf(s, n).unwrap()
    }

    #[test]
    fn walsh_values() {
        let f = anf("x1*x2", 2);
        let w = f.walsh_hadamard();
        assert_eq!(w[0], 2);
        assert!(w.iter().all(|x| x.abs() == 2));
        assert_eq!(
            BooleanFunction::constant(2, false).walsh_hadamard(),
            vec![4, 0, 0, 0]
        );
    }

    #[test]
    fn bentness() {
        assert!(anf("x1*x2", 2).is_bent());
        assert!(!anf("x1", 2).is_bent());
        assert!(!anf("x1*x2*x3", 3).is_bent());
        assert!(!anf("x1*x2 + x3", 3).is_bent());
    }

    #[test]
    fn anf_round_trip() {
        for s in ["x1*x2+x1*x3+x2*x4", "1+x3+x1*x2*x4", "x2"] {
            let f = anf(s, 4);
            assert_eq!(f.to_anf(), s);
            assert_eq!(anf(&f.to_anf(), 4), f);
        }
        assert_eq!(BooleanFunction::constant(3, false).to_anf(), "0");
    }

    #[test]
    fn small_census() {
        let bent2 = enumerate_bent(2).unwrap();
        assert_eq!(bent2.len(), 8);
        assert!(bent2.contains(&anf("x1*x2", 2)));
        assert!(!bent2.contains(&anf("x1", 2)));
        assert!(bent2.windows(2).all(|w| w[0].table() < w[1].table()));
        assert!(matches!(
            enumerate_bent(3),
            Err(Error::UnsupportedArity { arity: 3, .. })
        ));
    }

    #[test]
    fn zero_counts() {
        assert_eq!(zero_count_values(2).unwrap(), [1, 3]);
        assert_eq!(zero_count_values(4).unwrap(), [6, 10]);
        assert!(zero_count_values(3).is_err());
        for f in enumerate_bent(2).unwrap() {
            assert!(zero_count_values(2).unwrap().contains(&f.zero_count()));
        }
    }

    #[test]
    fn generalized_spectrum() {
        let zero = GeneralizedBooleanFunction::from_table(vec![0, 0]).unwrap();
        assert_eq!(
            zero.generalized_walsh_hadamard(),
            vec![GaussianInteger::new(2, 0), GaussianInteger::ZERO]
        );
        let f = GeneralizedBooleanFunction::from_table(vec![0, 1]).unwrap();
        assert_eq!(
            f.generalized_walsh_hadamard()[0],
            GaussianInteger::new(1, 1)
        );
        assert!(f.is_gbent());
        let zero3 = GeneralizedBooleanFunction::from_table(vec![0; 8]).unwrap();
        assert!(!zero3.is_gbent());
    }

    #[test]
    fn pair_construction_reproduces_fixtures() {
        let f = gbent_from_bent_pair(&anf("x1*x2", 2), &anf("x1 + x1*x2", 2)).unwrap();
        assert_eq!(f.table(), &[0, 1, 0, 1, 0, 3, 2, 1]);
        assert!(f.is_gbent());
        assert!(f.generalized_walsh_hadamard().iter().all(|w| w.norm() == 8));
        let g = gbent_from_bent_pair(&anf("x1*x2", 2), &anf("x1*x2", 2)).unwrap();
        assert_eq!(g.table(), &[0, 1, 0, 1, 0, 1, 2, 3]);
        assert_eq!(g.truth_vector().to_string(), "01010123");
    }

    #[test]
    fn pair_construction_preconditions() {
        let bent = anf("x1*x2", 2);
        assert!(gbent_from_bent_pair(&bent, &anf("x1*x2 + x3*x4", 4)).is_err());
        assert!(gbent_from_bent_pair(&bent, &anf("x1", 2)).is_err());
    }

    #[test]
    fn walsh_is_an_involution_up_to_scale() {
        let f = anf("x1*x2 + x3", 3);
        let mut w = f.walsh_hadamard();
        fwht(&mut w);
        let signs: Vec<i64> = f.table().iter().map(|&b| 8 * (1 - 2 * b as i64)).collect();
        assert_eq!(w, signs);
    }
}
