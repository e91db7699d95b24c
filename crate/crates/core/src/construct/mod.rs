//! The gbent code pipeline: circulant codes from bent pairs, their Type II
//! extensions, Gray images, closed-form weight distributions, and reports.

mod closed;
mod report;

pub use closed::{closed_form, ClosedFormDistributions};
pub use report::{
    pipeline, pipeline_with, Check, PipelineOptions, Report, MAX_DETAILED_M, MAX_PIPELINE_M,
};

use crate::bincode::BinaryCode;
use crate::bits::BinVec;
use crate::boolfn::{gbent_from_bent_pair, BooleanFunction};
use crate::error::{Error, Result};
use crate::z4code::Z4Code;
use crate::z4vec::Z4Vector;

/// Order of the permutation automorphism group of the length-32 circulant
/// code from [`reference_pair`]`(5)`. Recorded, not recomputed: the
/// equivalence search stops at length 8.
pub const PAUT_ORDER_M5_REFERENCE: u64 = 9_663_676_416;

/// The bent pair used for each supported `m`, as ANF strings.
pub fn reference_pair_anf(m: usize) -> Result<(&'static str, &'static str)> {
    match m {
        3 => Ok(("x1*x2", "x1+x1*x2")),
        5 => Ok(("x1*x2+x1*x3+x2*x4", "x1*x2+x3*x4")),
        7 => Ok(("x1*x4+x2*x5+x3*x6", "x1*x2+x3*x4+x5*x6")),
        _ => Err(Error::UnsupportedArity {
            arity: m,
            reason: "reference pairs exist for m = 3, 5, 7",
        }),
    }
}

pub fn reference_pair(m: usize) -> Result<(BooleanFunction, BooleanFunction)> {
    let (a, b) = reference_pair_anf(m)?;
    Ok((
        BooleanFunction::from_anf(a, m - 1)?,
        BooleanFunction::from_anf(b, m - 1)?,
    ))
}

/// `m` with `2^m = n`, for odd `m >= 3`.
pub fn odd_log2(n: usize) -> Option<usize> {
    let m = n.trailing_zeros() as usize;
    (n.is_power_of_two() && m >= 3 && m % 2 == 1).then_some(m)
}

/// Truth vector of the gbent function built from `a` and `b`.
pub fn build_cf(a: &BooleanFunction, b: &BooleanFunction) -> Result<Z4Vector> {
    if a.arity() < 2 {
        return Err(Error::precondition(format!(
            "bent functions need arity at least 2, got {}",
            a.arity()
        )));
    }
    Ok(gbent_from_bent_pair(a, b)?.truth_vector())
}

/// The code generated by all cyclic shifts of `c`.
pub fn circulant_code(c: &Z4Vector) -> Z4Code {
    let rows = (0..c.len() as i64).map(|k| c.cyclic_shift(k)).collect();
    Z4Code::new(c.len(), rows).expect("shifts keep the length")
}

/// The circulant code of the gbent function built from `a` and `b`.
pub fn build_code(a: &BooleanFunction, b: &BooleanFunction) -> Result<Z4Code> {
    Ok(circulant_code(&build_cf(a, b)?))
}

/// The self-dual extension of a circulant code together with how it was laid
/// out.
#[derive(Clone, Debug)]
pub struct Extension {
    /// The extended code, in the original coordinates.
    pub code: Z4Code,
    /// `permutation[j]` is the original coordinate at standard-form column `j`.
    pub permutation: Vec<usize>,
    /// The added rows `[O 2I H]`, in standard-form columns.
    pub added_rows: Vec<Z4Vector>,
    pub k2: usize,
    pub k3: usize,
    /// True if the trailing columns had to be reordered so that each added
    /// row meets the order-4 generators in an even number of odd entries.
    pub reordered: bool,
}

fn check_extension_input(c: &Z4Code) -> Result<usize> {
    let n = c.length();
    let m = odd_log2(n).ok_or_else(|| {
        Error::precondition(format!("length {n} is not 2^m with m odd and m >= 3"))
    })?;
    if !c.is_cyclic() {
        return Err(Error::precondition("the code is not cyclic"));
    }
    if !c.is_self_orthogonal() {
        return Err(Error::precondition("the code is not self-orthogonal"));
    }
    let (k1, k2) = c.type_of();
    if k1 != 2 {
        return Err(Error::precondition(format!(
            "the code has type 4^{k1} 2^{k2}, expected 4^2 2^k2"
        )));
    }
    if k2 + 4 > n {
        return Err(Error::precondition(format!(
            "k2 = {k2} leaves no room for the extension"
        )));
    }
    Ok(m)
}

/// Adds `k3 = n - 4 - k2` rows `[O 2I_k3 H]` below the standard form, where
/// row `i` (1-based) of `H` is `(0,2)` for odd `i` and `(2,0)` for even `i`
/// when `k2` is odd, and the other way round when `k2` is even.
pub fn extend_type_ii(c: &Z4Code) -> Result<Extension> {
    check_extension_input(c)?;
    let n = c.length();
    let form = c.standard_form();
    let k2 = form.k2();
    let k3 = n - 4 - k2;
    let units = form.unit_rows();
    let class = |col: usize| (units[0].get(col) % 2, units[1].get(col) % 2);
    // H row i puts its 2 in the last column (`true`) or the one before
    let last = |i: usize| (i % 2 == 1) == (k2 % 2 == 1);

    let head = &form.permutation()[..2 + k2];
    let rest = &form.permutation()[2 + k2..];
    let fits = |rest: &[usize]| {
        let (p, q) = (rest[k3], rest[k3 + 1]);
        (1..=k3).all(|i| class(rest[i - 1]) == class(if last(i) { q } else { p }))
    };
    let mut order = rest.to_vec();
    let reordered = !fits(&order);
    if reordered {
        let q = *rest.last().expect("k3 + 2 trailing columns");
        let p = *rest
            .iter()
            .rev()
            .find(|&&c| class(c) != class(q))
            .ok_or_else(|| {
                Error::ConstructionBug("trailing columns share one residue class".into())
            })?;
        let mut pool: Vec<usize> = rest.iter().copied().filter(|&c| c != p && c != q).collect();
        order.clear();
        for i in 1..=k3 {
            let want = class(if last(i) { q } else { p });
            let at = pool.iter().position(|&c| class(c) == want).ok_or_else(|| {
                Error::ConstructionBug("no trailing column of the required residue class".into())
            })?;
            order.push(pool.remove(at));
        }
        order.push(p);
        order.push(q);
    }
    let mut permutation = head.to_vec();
    permutation.extend(&order);

    let mut added_rows = Vec::with_capacity(k3);
    let mut generators = form.generators();
    for i in 1..=k3 {
        let mut row = Z4Vector::zeros(n);
        row.set(k2 + 2 + i - 1, 2);
        row.set(if last(i) { n - 1 } else { n - 2 }, 2);
        let mut original = Z4Vector::zeros(n);
        for (j, &col) in permutation.iter().enumerate() {
            original.set(col, row.get(j));
        }
        generators.push(original);
        added_rows.push(row);
    }
    let code = Z4Code::new(n, generators)?;
    if code.type_of() != (2, n - 4) || !code.is_self_dual() {
        return Err(Error::ConstructionBug(format!(
            "extension has type {:?} and is not self-dual",
            code.type_of()
        )));
    }
    Ok(Extension {
        code,
        permutation,
        added_rows,
        k2,
        k3,
        reordered,
    })
}

/// One of the Type II codes sharing the residue code of the extension,
/// labelled by the matrix `B` added (times 2) to the last two columns of the
/// two order-4 generators.
#[derive(Clone, Debug)]
pub struct Variant {
    pub b: [[u8; 2]; 2],
    pub code: Z4Code,
}

/// Finds `x` in the span of `basis` with `x[p] = want.0`, `x[q] = want.1`.
fn solve_pair(basis: &[BinVec], p: usize, q: usize, want: (bool, bool)) -> Option<BinVec> {
    let n = basis.first()?.len();
    // one basis vector per nonzero pattern on {p, q}; sums of at most two of
    // them reach every pattern in the span
    let mut pivots: Vec<(BinVec, (bool, bool))> = Vec::new();
    for b in basis {
        let key = (b.get(p), b.get(q));
        if key != (false, false) && !pivots.iter().any(|(_, k)| *k == key) {
            pivots.push((b.clone(), key));
        }
    }
    let mut cands: Vec<(BinVec, (bool, bool))> = vec![(BinVec::zeros(n), (false, false))];
    for (i, (x, kx)) in pivots.iter().enumerate() {
        cands.push((x.clone(), *kx));
        for (y, ky) in &pivots[i + 1..] {
            cands.push((x ^ y, (kx.0 ^ ky.0, kx.1 ^ ky.1)));
        }
    }
    cands.into_iter().find(|(_, k)| *k == want).map(|(v, _)| v)
}

/// The Type II codes of type `4^2 2^(n-4)` obtained from the extension by
/// changing the order-4 generators by `2B` on the last two coordinates, over
/// all sixteen binary `B`. Exactly four are expected.
pub fn four_variant_codes(c: &Z4Code) -> Result<Vec<Variant>> {
    let ext = extend_type_ii(c)?;
    let code = &ext.code;
    let n = code.length();
    let (p, q) = (n - 2, n - 1);
    let form = code.standard_form();
    let g = form.unit_rows();
    let torsion_basis: Vec<BinVec> = code.torsion().basis().to_vec();
    let t10 = solve_pair(&torsion_basis, p, q, (true, false)).ok_or_else(|| {
        Error::ConstructionBug("torsion code misses (1,0) on the last two coordinates".into())
    })?;
    let t01 = solve_pair(&torsion_basis, p, q, (false, true)).ok_or_else(|| {
        Error::ConstructionBug("torsion code misses (0,1) on the last two coordinates".into())
    })?;
    let lift = |want: (u8, u8)| -> Result<Z4Vector> {
        let mut found = None;
        for (a, b) in [(1u8, 0u8), (0, 1), (1, 1)] {
            let u = g[0].scale(a).add(&g[1].scale(b))?;
            if (u.get(p) % 2, u.get(q) % 2) == (want.0 % 2, want.1 % 2) {
                found = Some(u);
                break;
            }
        }
        let mut u = found.ok_or_else(|| {
            Error::ConstructionBug(
                "residue code is not full rank on the last two coordinates".into(),
            )
        })?;
        if u.get(p) != want.0 {
            u = u.add(&Z4Vector::twice(&t10))?;
        }
        if u.get(q) != want.1 {
            u = u.add(&Z4Vector::twice(&t01))?;
        }
        Ok(u)
    };
    let u1 = lift((1, 1))?;
    let u2 = lift((0, 1))?;
    let vanishing: Vec<Z4Vector> = torsion_basis
        .iter()
        .map(|t| {
            let mut t = t.clone();
            if t.get(p) {
                t ^= &t10;
            }
            if t.get(q) {
                t ^= &t01;
            }
            Z4Vector::twice(&t)
        })
        .filter(|v| !v.is_zero())
        .collect();
    let mut out = Vec::new();
    for bits in 0u8..16 {
        let b = [
            [bits & 1, (bits >> 1) & 1],
            [(bits >> 2) & 1, (bits >> 3) & 1],
        ];
        let mut r1 = u1.clone();
        let mut r2 = u2.clone();
        r1.set(p, (r1.get(p) + 2 * b[0][0]) % 4);
        r1.set(q, (r1.get(q) + 2 * b[0][1]) % 4);
        r2.set(p, (r2.get(p) + 2 * b[1][0]) % 4);
        r2.set(q, (r2.get(q) + 2 * b[1][1]) % 4);
        let mut rows = vec![r1, r2];
        rows.extend(vanishing.iter().cloned());
        let variant = Z4Code::new(n, rows)?;
        if variant.type_of() == (2, n - 4) && variant.type_ii().holds() {
            out.push(Variant { b, code: variant });
        }
    }
    if out.len() != 4 {
        return Err(Error::ConstructionBug(format!(
            "expected four Type II variants, found {}",
            out.len()
        )));
    }
    Ok(out)
}

/// Binary image of the code under the Gray map, when that image is linear.
///
/// The image of a code with standard-form order-4 rows `g_i` is linear iff
/// `2 (g_i * g_j)` lies in the code for all `i, j` (componentwise product).
/// The image is then spanned by the images of `g_i`, `2 g_i`, the order-2
/// rows and the `2 (g_i * g_j)`; its dimension must be `2 k1 + k2`.
pub fn gray_image_code(c: &Z4Code) -> Result<BinaryCode> {
    let form = c.standard_form();
    let g = form.unit_rows();
    let mut rows = Vec::new();
    for (i, gi) in g.iter().enumerate() {
        rows.push(gi.gray_map());
        rows.push(gi.scale(2).gray_map());
        for gj in &g[i + 1..] {
            let prod = gi.hadamard(gj)?.scale(2);
            if !c.contains(&prod)? {
                return Err(Error::NonlinearImage(format!(
                    "2 (g_i * g_j) = {prod} is not a codeword"
                )));
            }
            rows.push(prod.gray_map());
        }
    }
    rows.extend(
        form.torsion_rows()
            .iter()
            .map(|t| Z4Vector::twice(t).gray_map()),
    );
    let image = BinaryCode::new(2 * c.length(), rows)?;
    if image.dimension() != c.log2_cardinality() {
        return Err(Error::ConstructionBug(format!(
            "Gray image spans dimension {} but the code has 2^{} words",
            image.dimension(),
            c.log2_cardinality()
        )));
    }
    Ok(image)
}

#[cfg(test)]
mod tests;
