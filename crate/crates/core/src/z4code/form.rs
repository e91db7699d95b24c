//! Standard-form reduction over Z4.

use crate::bincode::row_reduce;
use crate::bits::BinVec;
use crate::error::{Error, Result};
use crate::z4vec::Z4Vector;

/// Generator matrix of the form
///
/// ```text
/// [ I_k1  A      B1 + 2 B2 ]
/// [ 0     2 I_k2 2 D       ]
/// ```
///
/// after the column permutation `permutation`. Rows are kept in original
/// coordinates together with their pivot columns.
#[derive(Clone, Debug)]
pub struct StandardForm {
    length: usize,
    unit_rows: Vec<Z4Vector>,
    unit_pivots: Vec<usize>,
    /// Halved order-2 rows: the codewords are `2 * t`.
    torsion_rows: Vec<BinVec>,
    torsion_pivots: Vec<usize>,
    permutation: Vec<usize>,
}

impl StandardForm {
    pub(crate) fn compute(length: usize, generators: &[Z4Vector]) -> StandardForm {
        let mut rows: Vec<Z4Vector> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        let mut used = vec![false; rows.len()];
        let mut unit_idx = Vec::new();
        let mut unit_pivots = Vec::new();
        for col in 0..length {
            let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r].get(col) % 2 == 1) else {
                continue;
            };
            if rows[r].get(col) == 3 {
                rows[r] = rows[r].neg();
            }
            let pivot = rows[r].clone();
            for (o, row) in rows.iter_mut().enumerate() {
                let e = row.get(col);
                if o != r && e != 0 {
                    *row = row.sub(&pivot.scale(e)).expect("equal lengths");
                }
            }
            used[r] = true;
            unit_idx.push(r);
            unit_pivots.push(col);
        }
        let halves: Vec<BinVec> = rows
            .iter()
            .zip(&used)
            .filter(|(_, &u)| !u)
            .map(|(row, _)| row.halve().expect("rows left after unit pivoting are even"))
            .collect();
        let (torsion_rows, torsion_pivots) = row_reduce(length, &halves);
        let mut unit_rows: Vec<Z4Vector> = unit_idx.iter().map(|&r| rows[r].clone()).collect();
        for u in &mut unit_rows {
            for (t, &q) in torsion_rows.iter().zip(&torsion_pivots) {
                if u.get(q) >= 2 {
                    *u = u.sub(&Z4Vector::twice(t)).expect("equal lengths");
                }
            }
        }
        let mut permutation = unit_pivots.clone();
        permutation.extend(&torsion_pivots);
        let mut taken = vec![false; length];
        for &p in &permutation {
            taken[p] = true;
        }
        permutation.extend((0..length).filter(|&c| !taken[c]));
        StandardForm {
            length,
            unit_rows,
            unit_pivots,
            torsion_rows,
            torsion_pivots,
            permutation,
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn k1(&self) -> usize {
        self.unit_rows.len()
    }

    pub fn k2(&self) -> usize {
        self.torsion_rows.len()
    }

    /// `permutation()[j]` is the original coordinate placed at column `j`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Order-4 generators in original coordinates.
    pub fn unit_rows(&self) -> &[Z4Vector] {
        &self.unit_rows
    }

    pub fn unit_pivots(&self) -> &[usize] {
        &self.unit_pivots
    }

    /// Halves of the order-2 generators, in original coordinates.
    pub fn torsion_rows(&self) -> &[BinVec] {
        &self.torsion_rows
    }

    pub fn torsion_pivots(&self) -> &[usize] {
        &self.torsion_pivots
    }

    /// All `k1 + k2` generators (order-2 rows doubled), original coordinates.
    pub fn generators(&self) -> Vec<Z4Vector> {
        self.unit_rows
            .iter()
            .cloned()
            .chain(self.torsion_rows.iter().map(Z4Vector::twice))
            .collect()
    }

    /// Moves a vector from original coordinates into standard-form columns.
    pub fn to_form_coordinates(&self, v: &Z4Vector) -> Z4Vector {
        Z4Vector::from_entries(
            &self
                .permutation
                .iter()
                .map(|&c| v.get(c))
                .collect::<Vec<_>>(),
        )
    }

    /// Inverse of [`StandardForm::to_form_coordinates`].
    pub fn from_form_coordinates(&self, v: &Z4Vector) -> Z4Vector {
        let mut out = Z4Vector::zeros(self.length);
        for (j, &c) in self.permutation.iter().enumerate() {
            out.set(c, v.get(j));
        }
        out
    }

    /// The generator matrix in standard-form columns.
    pub fn matrix(&self) -> Vec<Z4Vector> {
        self.generators()
            .iter()
            .map(|g| self.to_form_coordinates(g))
            .collect()
    }

    fn block(
        &self,
        rows: &[Vec<u8>],
        cols: std::ops::Range<usize>,
        f: impl Fn(u8) -> bool,
    ) -> Vec<BinVec> {
        rows.iter()
            .map(|r| {
                let bits: Vec<u8> = r[cols.clone()].iter().map(|&x| f(x) as u8).collect();
                BinVec::from_bits(&bits)
            })
            .collect()
    }

    fn form_rows(&self) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let m = self.matrix();
        let (u, t) = m.split_at(self.k1());
        (
            u.iter().map(Z4Vector::entries).collect(),
            t.iter().map(Z4Vector::entries).collect(),
        )
    }

    /// `A`, `k1 x k2`.
    pub fn a(&self) -> Vec<BinVec> {
        let (u, _) = self.form_rows();
        let k1 = self.k1();
        self.block(&u, k1..k1 + self.k2(), |x| x == 1)
    }

    /// `B1`, `k1 x (n - k1 - k2)`: the residue of the last block.
    pub fn b1(&self) -> Vec<BinVec> {
        let (u, _) = self.form_rows();
        self.block(&u, self.k1() + self.k2()..self.length, |x| x % 2 == 1)
    }

    /// `B2`, with `B1 + 2 B2` the last block of the unit rows.
    pub fn b2(&self) -> Vec<BinVec> {
        let (u, _) = self.form_rows();
        self.block(&u, self.k1() + self.k2()..self.length, |x| x >= 2)
    }

    /// `D`, `k2 x (n - k1 - k2)`.
    pub fn d(&self) -> Vec<BinVec> {
        let (_, t) = self.form_rows();
        self.block(&t, self.k1() + self.k2()..self.length, |x| x == 2)
    }

    /// Coefficients `(a, b)` with `v = sum a_i u_i + 2 sum b_j t_j`, or `None`
    /// if `v` is not in the code.
    pub fn coordinates(&self, v: &Z4Vector) -> Result<Option<(Vec<u8>, BinVec)>> {
        Error::check_len(self.length, v.len())?;
        let mut r = v.clone();
        let mut a = Vec::with_capacity(self.k1());
        for (u, &p) in self.unit_rows.iter().zip(&self.unit_pivots) {
            let c = r.get(p);
            if c != 0 {
                r = r.sub(&u.scale(c))?;
            }
            a.push(c);
        }
        let mut b = BinVec::zeros(self.k2());
        for (j, (t, &q)) in self
            .torsion_rows
            .iter()
            .zip(&self.torsion_pivots)
            .enumerate()
        {
            match r.get(q) {
                0 => {}
                2 => {
                    r = r.sub(&Z4Vector::twice(t))?;
                    b.set(j, true);
                }
                _ => return Ok(None),
            }
        }
        Ok(r.is_zero().then_some((a, b)))
    }

    /// Generators of the annihilator `{x : <x, c> = 0 for all c}`, in original
    /// coordinates. With `r = n - k1 - k2` the rows are
    /// `(A D e_l - B e_l, -D e_l, e_l)` for `l < r` and `(2 A e_j, 2 e_j, 0)`
    /// for `j < k2`.
    pub fn dual_generators(&self) -> Vec<Z4Vector> {
        let n = self.length;
        let (k1, k2) = (self.k1(), self.k2());
        let r = n - k1 - k2;
        let (u, t) = self.form_rows();
        let mut rows = Vec::with_capacity(r + k2);
        for l in 0..r {
            let col = k1 + k2 + l;
            let mut x = vec![0u8; n];
            x[col] = 1;
            for j in 0..k2 {
                x[k1 + j] = (4 - t[j][col] / 2) % 4;
            }
            for i in 0..k1 {
                let mut s = u[i][col];
                for j in 0..k2 {
                    s += u[i][k1 + j] * x[k1 + j];
                }
                x[i] = (4 - s % 4) % 4;
            }
            rows.push(self.from_form_coordinates(&Z4Vector::from_entries(&x)));
        }
        for j in 0..k2 {
            let mut x = vec![0u8; n];
            x[k1 + j] = 2;
            for i in 0..k1 {
                x[i] = 2 * u[i][k1 + j] % 4;
            }
            rows.push(self.from_form_coordinates(&Z4Vector::from_entries(&x)));
        }
        rows
    }
}
