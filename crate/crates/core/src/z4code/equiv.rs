//! Permutation and monomial equivalence for short codes by backtracking.

use super::Z4Code;
use crate::error::{Error, Result};
use crate::z4vec::Z4Vector;

/// Longest codes handled by the equivalence searches.
pub const MAX_EQUIVALENCE_LENGTH: usize = 8;

/// Coordinate map `i -> targets[i]` with the entry multiplied by `signs[i]`
/// (`1` or `3`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub targets: Vec<usize>,
    pub signs: Vec<u8>,
}

impl Monomial {
    pub fn apply(&self, v: &Z4Vector) -> Z4Vector {
        let mut out = Z4Vector::zeros(v.len());
        for (i, (&t, &s)) in self.targets.iter().zip(&self.signs).enumerate() {
            out.set(t, v.get(i) * s % 4);
        }
        out
    }

    pub fn is_permutation(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }
}

/// Symbol counts over the whole code, per coordinate and per coordinate pair.
struct Profiles {
    n: usize,
    single: Vec<[u32; 4]>,
    pair: Vec<[u32; 16]>,
}

impl Profiles {
    fn new(code: &Z4Code) -> Result<Profiles> {
        let n = code.length();
        let words = code.codewords()?;
        let mut single = vec![[0u32; 4]; n];
        let mut pair = vec![[0u32; 16]; n * n];
        for w in &words {
            let e = w.entries();
            for i in 0..n {
                single[i][e[i] as usize] += 1;
                for j in 0..n {
                    pair[i * n + j][4 * e[i] as usize + e[j] as usize] += 1;
                }
            }
        }
        Ok(Profiles { n, single, pair })
    }
}

#[inline]
fn signed(x: usize, s: u8) -> usize {
    x * s as usize % 4
}

struct Search<'a> {
    from: &'a Z4Code,
    to: &'a Z4Code,
    p: Profiles,
    q: Profiles,
    allow_signs: bool,
    targets: Vec<usize>,
    signs: Vec<u8>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn compatible(&self, i: usize, t: usize, s: u8) -> bool {
        let (p, q) = (&self.p, &self.q);
        if (0..4).any(|x| p.single[i][x] != q.single[t][signed(x, s)]) {
            return false;
        }
        for j in 0..i {
            let (tj, sj) = (self.targets[j], self.signs[j]);
            let a = &p.pair[i * p.n + j];
            let b = &q.pair[t * q.n + tj];
            for x in 0..4 {
                for y in 0..4 {
                    if a[4 * x + y] != b[4 * signed(x, s) + signed(y, sj)] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn leaf_ok(&self) -> bool {
        let m = Monomial {
            targets: self.targets.clone(),
            signs: self.signs.clone(),
        };
        self.from
            .generators()
            .iter()
            .all(|g| self.to.contains(&m.apply(g)) == Ok(true))
    }

    /// Visits complete maps; `visit` returns `false` to stop.
    fn run(&mut self, i: usize, visit: &mut impl FnMut(&Monomial) -> bool) -> bool {
        let n = self.p.n;
        if i == n {
            if self.leaf_ok() {
                return visit(&Monomial {
                    targets: self.targets.clone(),
                    signs: self.signs.clone(),
                });
            }
            return true;
        }
        let sign_choices: &[u8] = if self.allow_signs { &[1, 3] } else { &[1] };
        for t in 0..n {
            if self.used[t] {
                continue;
            }
            for &s in sign_choices {
                if !self.compatible(i, t, s) {
                    continue;
                }
                self.targets[i] = t;
                self.signs[i] = s;
                self.used[t] = true;
                let go_on = self.run(i + 1, visit);
                self.used[t] = false;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
}

impl Z4Code {
    fn equivalence_search<'a>(
        &'a self,
        other: &'a Z4Code,
        allow_signs: bool,
    ) -> Result<Option<Search<'a>>> {
        let n = self.length();
        if n > MAX_EQUIVALENCE_LENGTH {
            return Err(Error::Capacity {
                what: format!("equivalence search at length {n}"),
                limit: format!("length {MAX_EQUIVALENCE_LENGTH}"),
                alternative: None,
            });
        }
        if other.length() != n || self.type_of() != other.type_of() {
            return Ok(None);
        }
        Ok(Some(Search {
            from: self,
            to: other,
            p: Profiles::new(self)?,
            q: Profiles::new(other)?,
            allow_signs,
            targets: vec![0; n],
            signs: vec![1; n],
            used: vec![false; n],
        }))
    }

    /// A coordinate permutation mapping this code onto `other`, if one exists.
    pub fn permutation_equivalent(&self, other: &Z4Code) -> Result<Option<Vec<usize>>> {
        Ok(self.monomial_search(other, false)?.map(|m| m.targets))
    }

    /// A permutation combined with sign changes mapping this code onto `other`.
    pub fn monomial_equivalent(&self, other: &Z4Code) -> Result<Option<Monomial>> {
        self.monomial_search(other, true)
    }

    fn monomial_search(&self, other: &Z4Code, allow_signs: bool) -> Result<Option<Monomial>> {
        let Some(mut search) = self.equivalence_search(other, allow_signs)? else {
            return Ok(None);
        };
        let mut found = None;
        search.run(0, &mut |m| {
            found = Some(m.clone());
            false
        });
        Ok(found)
    }

    /// Order of the group of coordinate permutations fixing the code.
    pub fn paut_order(&self) -> Result<u64> {
        let Some(mut search) = self.equivalence_search(self, false)? else {
            unreachable!("a code matches its own type");
        };
        let mut count = 0u64;
        search.run(0, &mut |_| {
            count += 1;
            true
        });
        Ok(count)
    }
}
