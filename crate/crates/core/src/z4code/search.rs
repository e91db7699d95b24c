//! Exact search for low-weight codewords without enumerating the code.

use std::collections::BTreeSet;

use super::Z4Code;
use crate::error::{Error, Result};
use crate::z4vec::{WeightKind, Z4Vector};

/// Largest Hamming support the search will consider.
pub const MAX_SUPPORT: usize = 8;

/// Supports up to this size are tried exhaustively with every entry pattern.
const DIRECT_SUPPORT: usize = 4;

/// Residue or torsion codes up to this dimension are enumerated.
const MAX_GUIDE_DIMENSION: usize = 26;

impl Z4Code {
    /// All nonzero codewords whose `kind` weight is at most `bound`.
    ///
    /// Two exact strategies are combined: every vector with Hamming support at
    /// most 4 is tested directly, and every residue word of weight `j` is
    /// lifted with all sign patterns on its support and all placements of
    /// `k` twos outside it. Words with no odd entry come from the torsion
    /// code. Results are sorted and deduplicated.
    pub fn low_weight_codewords(&self, kind: WeightKind, bound: usize) -> Result<Vec<Z4Vector>> {
        let n = self.length();
        // (odd entries, twos) shapes with weight <= bound
        let shapes: Vec<(usize, usize)> = (0..=bound.min(n))
            .flat_map(|j| (0..=bound.min(n) - j).map(move |k| (j, k)))
            .filter(|&(j, k)| j + k > 0 && kind.of(j, k) <= bound)
            .collect();
        if let Some(&(j, k)) = shapes.iter().find(|&&(j, k)| j + k > MAX_SUPPORT) {
            return Err(Error::capacity(
                format!(
                    "{} weight {bound} search needs support {}",
                    kind.name(),
                    j + k
                ),
                format!("support {MAX_SUPPORT}"),
            ));
        }
        let checker = self.checker();
        let mut found = BTreeSet::new();

        // (a) direct: all vectors of support <= DIRECT_SUPPORT
        let max_direct = shapes
            .iter()
            .map(|&(j, k)| j + k)
            .filter(|&s| s <= DIRECT_SUPPORT)
            .max()
            .unwrap_or(0);
        let mut support = Vec::new();
        subsets(n, max_direct, 0, &mut support, &mut |supp| {
            let s = supp.len();
            if s == 0 {
                return;
            }
            for pattern in 0..3usize.pow(s as u32) {
                let mut v = Z4Vector::zeros(n);
                let mut p = pattern;
                let mut j = 0;
                for &c in supp {
                    let x = (p % 3) as u8 + 1;
                    p /= 3;
                    j += (x % 2) as usize;
                    v.set(c, x);
                }
                if kind.of(j, s - j) <= bound && checker.accepts_vector(&v) {
                    found.insert(v);
                }
            }
        });

        // (b) residue-guided lifting for words with odd entries
        let odd_shapes: Vec<(usize, usize)> =
            shapes.iter().copied().filter(|&(j, _)| j > 0).collect();
        if !odd_shapes.is_empty() {
            let residue = self.residue();
            guard(&residue, "residue")?;
            let max_j = odd_shapes.iter().map(|&(j, _)| j).max().unwrap_or(0);
            let mut words = Vec::new();
            residue.for_each_codeword(|r| {
                let w = r.weight();
                if w > 0 && w <= max_j {
                    words.push(r.clone());
                }
            })?;
            for r in &words {
                let odd = r.support();
                let outside: Vec<usize> = (0..n).filter(|&c| !r.get(c)).collect();
                for &(j, k) in &odd_shapes {
                    if j != odd.len() {
                        continue;
                    }
                    let mut twos = Vec::new();
                    subsets(outside.len(), k, 0, &mut twos, &mut |pick| {
                        if pick.len() != k {
                            return;
                        }
                        for signs in 0..1u64 << j {
                            let mut v = Z4Vector::zeros(n);
                            for (b, &c) in odd.iter().enumerate() {
                                v.set(c, if (signs >> b) & 1 == 1 { 3 } else { 1 });
                            }
                            for &p in pick {
                                v.set(outside[p], 2);
                            }
                            if checker.accepts_vector(&v) {
                                found.insert(v);
                            }
                        }
                    });
                }
            }
        }

        // words 2t with t in the torsion code and wt(t) beyond the direct range
        let max_twos = shapes
            .iter()
            .filter(|&&(j, _)| j == 0)
            .map(|&(_, k)| k)
            .max()
            .unwrap_or(0);
        if max_twos > DIRECT_SUPPORT {
            let torsion = self.torsion();
            guard(&torsion, "torsion")?;
            torsion.for_each_codeword(|t| {
                let w = t.weight();
                if w > DIRECT_SUPPORT && w <= max_twos {
                    found.insert(Z4Vector::twice(t));
                }
            })?;
        }
        Ok(found.into_iter().collect())
    }
}

fn guard(code: &crate::bincode::BinaryCode, what: &str) -> Result<()> {
    if code.dimension() > MAX_GUIDE_DIMENSION {
        Err(Error::capacity(
            format!(
                "low-weight search through a {what} code of dimension {}",
                code.dimension()
            ),
            format!("dimension {MAX_GUIDE_DIMENSION}"),
        ))
    } else {
        Ok(())
    }
}

/// Calls `f` on the empty list and on every strictly increasing list of
/// indices below `n` with length at most `max`.
fn subsets(
    n: usize,
    max: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if chosen.is_empty() {
        f(chosen);
    }
    if chosen.len() == max {
        return;
    }
    for c in start..n {
        chosen.push(c);
        f(chosen);
        subsets(n, max, c + 1, chosen, f);
        chosen.pop();
    }
}
