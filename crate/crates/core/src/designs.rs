//! Block designs from codeword supports, with the checks used on them:
//! 1-design parameters, intersection numbers, block intersection graphs,
//! strong regularity and resolvability.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::bincode::{BinaryCode, MAX_SEARCH_WEIGHT};
use crate::bits::BinVec;
use crate::construct;
use crate::error::{Error, Result};
use crate::z4code::Z4Code;
use crate::z4vec::{WeightKind, Z4Vector};

/// Largest design handed to the resolvability search.
pub const MAX_RESOLVABLE_BLOCKS: usize = 256;

/// Search nodes allowed before resolvability is reported as undetermined.
const RESOLUTION_BUDGET: u64 = 2_000_000;

/// Distinct blocks on the points `0..v`, with how many inputs produced each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<usize>>,
    multiplicities: Vec<usize>,
}

/// Parameters of a 1-design: `b` blocks of size `k`, each point on `r = λ` blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneDesign {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub b: usize,
    pub r: usize,
}

impl std::fmt::Display for OneDesign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "1-({},{},{})", self.v, self.k, self.lambda)
    }
}

impl Design {
    /// Collapses repeated blocks; points must lie below `v`.
    pub fn from_blocks(v: usize, blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<Design> {
        let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for mut b in blocks {
            b.sort_unstable();
            b.dedup();
            if let Some(&p) = b.iter().find(|&&p| p >= v) {
                return Err(Error::precondition(format!("point {p} is outside 0..{v}")));
            }
            *counts.entry(b).or_default() += 1;
        }
        if counts.is_empty() {
            return Err(Error::Empty("block list"));
        }
        let (blocks, multiplicities) = counts.into_iter().unzip();
        Ok(Design {
            v,
            blocks,
            multiplicities,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of input supports equal to each block.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    fn block_sets(&self) -> Vec<BinVec> {
        self.blocks
            .iter()
            .map(|b| BinVec::from_support(self.v, b))
            .collect()
    }

    /// Relabels point `p` as `map[p]`.
    pub fn relabel(&self, map: &[usize]) -> Result<Design> {
        Error::check_len(self.v, map.len())?;
        let mut d = Design::from_blocks(
            self.v,
            self.blocks
                .iter()
                .zip(&self.multiplicities)
                .flat_map(|(b, &m)| std::iter::repeat_n(b.iter().map(|&p| map[p]).collect(), m)),
        )?;
        d.v = self.v;
        Ok(d)
    }
}

/// Blocks are the distinct supports of the given codewords.
pub fn supports_to_design(codewords: &[Z4Vector], v: usize) -> Result<Design> {
    if codewords.is_empty() {
        return Err(Error::Empty("codeword list"));
    }
    Design::from_blocks(v, codewords.iter().map(Z4Vector::support))
}

pub fn binary_supports_to_design(codewords: &[BinVec], v: usize) -> Result<Design> {
    if codewords.is_empty() {
        return Err(Error::Empty("codeword list"));
    }
    Design::from_blocks(v, codewords.iter().map(BinVec::support))
}

/// 1-design parameters, if the block size is uniform and every point lies on
/// the same number of blocks.
pub fn verify_one_design(d: &Design) -> Option<OneDesign> {
    let k = d.blocks[0].len();
    if d.blocks.iter().any(|b| b.len() != k) {
        return None;
    }
    let mut on = vec![0usize; d.v];
    for b in &d.blocks {
        for &p in b {
            on[p] += 1;
        }
    }
    let r = on[0];
    if on.iter().any(|&x| x != r) {
        return None;
    }
    debug_assert_eq!(d.b() * k, d.v * r);
    Some(OneDesign {
        v: d.v,
        k,
        lambda: r,
        b: d.b(),
        r,
    })
}

/// `{|B_i ∩ B_j| : i < j}`.
pub fn intersection_numbers(d: &Design) -> Result<BTreeSet<usize>> {
    if d.b() < 2 {
        return Err(Error::precondition(
            "intersection numbers need at least two blocks",
        ));
    }
    let sets = d.block_sets();
    let mut out = BTreeSet::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            out.insert(sets[i].overlap(&sets[j]));
        }
    }
    Ok(out)
}

/// Undirected graph without loops, adjacency stored as bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BinVec>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BinVec::zeros(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Ignores loops.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].set(b, true);
            self.adj[b].set(a, true);
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].weight()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BinVec::weight).sum::<usize>() / 2
    }

    fn common(&self, a: usize, b: usize) -> usize {
        self.adj[a].overlap(&self.adj[b])
    }
}

/// Blocks as vertices, adjacent iff they meet in exactly `s` points.
pub fn block_intersection_graph(d: &Design, s: usize) -> SimpleGraph {
    let sets = d.block_sets();
    let mut g = SimpleGraph::new(sets.len());
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].overlap(&sets[j]) == s {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Strongly regular parameters `(v, k, λ, μ)`. When there are no adjacent
/// (non-adjacent) pairs, `λ` (`μ`) is vacuous, reported as 0 and flagged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParameters {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
    pub lambda_vacuous: bool,
    pub mu_vacuous: bool,
}

impl SrgParameters {
    /// `k (k - λ - 1) = (v - k - 1) μ`.
    pub fn feasible(&self) -> bool {
        if self.lambda_vacuous {
            return self.k == 0;
        }
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

pub fn srg_parameters(g: &SimpleGraph) -> Option<SrgParameters> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    if (1..n).any(|a| g.degree(a) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for a in 0..n {
        for b in a + 1..n {
            let c = g.common(a, b);
            let slot = if g.has_edge(a, b) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    let p = SrgParameters {
        v: n,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
        lambda_vacuous: lambda.is_none(),
        mu_vacuous: mu.is_none(),
    };
    debug_assert!(p.feasible());
    Some(p)
}

/// Result of the search for a partition of the blocks into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// Classes of block indices, each class partitioning the points.
    Resolvable(Vec<Vec<usize>>),
    NotResolvable,
    /// Too large, or the search budget ran out.
    Undetermined,
}

impl Resolution {
    pub fn classes(&self) -> Option<&[Vec<usize>]> {
        match self {
            Resolution::Resolvable(c) => Some(c),
            _ => None,
        }
    }
}

struct Resolver<'a> {
    v: usize,
    sets: &'a [BinVec],
    /// blocks through each point
    through: Vec<Vec<usize>>,
    used: Vec<bool>,
    classes: Vec<Vec<usize>>,
    steps: u64,
}

impl Resolver<'_> {
    /// Fills the current class, then starts the next one. `Some(true)` on
    /// success, `Some(false)` if this branch is dead, `None` if out of budget.
    fn extend(&mut self, covered: &BinVec) -> Option<bool> {
        self.steps += 1;
        if self.steps > RESOLUTION_BUDGET {
            return None;
        }
        if covered.weight() == self.v {
            if self.used.iter().all(|&u| u) {
                return Some(true);
            }
            self.classes.push(Vec::new());
            // the lowest unused block anchors the new class
            let first = self
                .used
                .iter()
                .position(|&u| !u)
                .expect("a block is unused");
            let r = self.place(first, &BinVec::zeros(self.v));
            if r != Some(true) {
                self.classes.pop();
            }
            return r;
        }
        // uncovered point with the fewest candidate blocks
        let mut best: Option<(usize, Vec<usize>)> = None;
        for p in 0..self.v {
            if covered.get(p) {
                continue;
            }
            let cands: Vec<usize> = self.through[p]
                .iter()
                .copied()
                .filter(|&b| !self.used[b] && self.sets[b].overlap(covered) == 0)
                .collect();
            if cands.is_empty() {
                return Some(false);
            }
            if best.as_ref().is_none_or(|(_, c)| cands.len() < c.len()) {
                best = Some((p, cands));
            }
        }
        let (_, cands) = best.expect("some point is uncovered");
        for b in cands {
            match self.place(b, covered) {
                Some(false) => continue,
                other => return other,
            }
        }
        Some(false)
    }

    fn place(&mut self, b: usize, covered: &BinVec) -> Option<bool> {
        self.used[b] = true;
        self.classes.last_mut().expect("open class").push(b);
        let next = covered ^ &self.sets[b];
        let r = self.extend(&next);
        if r != Some(true) {
            self.used[b] = false;
            self.classes.last_mut().expect("open class").pop();
        }
        r
    }
}

/// Backtracking search for a resolution.
pub fn resolvability(d: &Design) -> Resolution {
    let Some(p) = verify_one_design(d) else {
        return Resolution::NotResolvable;
    };
    if p.k == 0 || d.v % p.k != 0 {
        return Resolution::NotResolvable;
    }
    if d.b() > MAX_RESOLVABLE_BLOCKS {
        return Resolution::Undetermined;
    }
    let sets = d.block_sets();
    let mut through = vec![Vec::new(); d.v];
    for (i, b) in d.blocks.iter().enumerate() {
        for &pt in b {
            through[pt].push(i);
        }
    }
    let mut r = Resolver {
        v: d.v,
        sets: &sets,
        through,
        used: vec![false; d.b()],
        classes: vec![Vec::new()],
        steps: 0,
    };
    match r.place(0, &BinVec::zeros(d.v)) {
        Some(true) => {
            let mut classes = r.classes;
            for c in &mut classes {
                c.sort_unstable();
            }
            Resolution::Resolvable(classes)
        }
        Some(false) => Resolution::NotResolvable,
        None => Resolution::Undetermined,
    }
}

/// A resolvable design whose blocks from different classes always meet in
/// `mu` points: an `(s, r; mu)`-net with `s` blocks per class and `r` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Net {
    pub s: usize,
    pub r: usize,
    pub mu: usize,
    pub classes: Vec<Vec<usize>>,
}

impl std::fmt::Display for Net {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{};{})", self.s, self.r, self.mu)
    }
}

/// The net structure, if the design is affine resolvable. A single parallel
/// class does not count.
pub fn affine_resolution(d: &Design) -> Option<Net> {
    let classes = match resolvability(d) {
        Resolution::Resolvable(c) => c,
        _ => return None,
    };
    if classes.len() < 2 {
        return None;
    }
    let sets = d.block_sets();
    let mut mu = None;
    for (ci, a) in classes.iter().enumerate() {
        for b in &classes[ci + 1..] {
            for &x in a {
                for &y in b {
                    let m = sets[x].overlap(&sets[y]);
                    match mu {
                        None => mu = Some(m),
                        Some(v) if v != m => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some(Net {
        s: classes[0].len(),
        r: classes.len(),
        mu: mu.expect("two classes"),
        classes,
    })
}

pub fn is_affine_resolvable(d: &Design) -> bool {
    affine_resolution(d).is_some()
}

/// Everything reported about one design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignSummary {
    pub label: String,
    pub params: Option<OneDesign>,
    pub b: usize,
    pub intersection_numbers: BTreeSet<usize>,
    pub resolution: Resolution,
    pub net: Option<Net>,
    /// `(s, parameters)` for every intersection number `s` whose graph is
    /// strongly regular.
    pub srg: Vec<(usize, SrgParameters)>,
}

impl DesignSummary {
    pub fn new(label: impl Into<String>, d: &Design) -> Self {
        let intersection_numbers = intersection_numbers(d).unwrap_or_default();
        let srg = if d.b() <= MAX_RESOLVABLE_BLOCKS {
            intersection_numbers
                .iter()
                .filter_map(|&s| srg_parameters(&block_intersection_graph(d, s)).map(|p| (s, p)))
                .filter(|(_, p)| !p.lambda_vacuous && !p.mu_vacuous)
                .collect()
        } else {
            Vec::new()
        };
        let resolution = resolvability(d);
        let net = affine_resolution(d);
        DesignSummary {
            label: label.into(),
            params: verify_one_design(d),
            b: d.b(),
            intersection_numbers,
            resolution,
            net,
            srg,
        }
    }

    pub fn is_resolvable(&self) -> Option<bool> {
        match self.resolution {
            Resolution::Resolvable(_) => Some(true),
            Resolution::NotResolvable => Some(false),
            Resolution::Undetermined => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let p = self.params;
        json!({
            "label": self.label,
            "design": p.map(|p| p.to_string()),
            "v": p.map(|p| p.v),
            "k": p.map(|p| p.k),
            "lambda": p.map(|p| p.lambda),
            "b": self.b,
            "r": p.map(|p| p.r),
            "intersection_numbers": self.intersection_numbers.iter().collect::<Vec<_>>(),
            "resolvable": self.is_resolvable(),
            "affine": self.net.is_some(),
            "net": self.net.as_ref().map(|n| json!({"s": n.s, "r": n.r, "mu": n.mu})),
            "srg": self.srg.iter().map(|(s, g)| json!({
                "graph": format!("G_{s}"),
                "parameters": [g.v, g.k, g.lambda, g.mu],
            })).collect::<Vec<_>>(),
        })
    }
}

/// One row of a design table: the blocks from a chosen set of codewords.
#[derive(Clone, Debug)]
pub struct DesignRow {
    pub code: String,
    pub words: String,
    pub design: Design,
    pub summary: DesignSummary,
}

impl DesignRow {
    pub fn new(code: impl Into<String>, words: impl Into<String>, design: Design) -> Self {
        let code = code.into();
        let words = words.into();
        let summary = DesignSummary::new(format!("{code}: {words}"), &design);
        DesignRow {
            code,
            words,
            design,
            summary,
        }
    }

    pub fn params(&self) -> Option<OneDesign> {
        self.summary.params
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.summary.to_json();
        v["code"] = json!(self.code);
        v["words"] = json!(self.words);
        v
    }
}

/// Rows for a Z4 code: the supports of minimum Hamming weight words, then the
/// minimum Euclidean weight words split by Lee weight, skipping any group
/// whose blocks repeat the first row.
pub fn code_design_rows(label: &str, c: &Z4Code) -> Result<Vec<DesignRow>> {
    let n = c.length();
    let (dh, _, de) = c.min_weights()?.ok_or(Error::Empty("nonzero codewords"))?;
    let base = supports_to_design(&c.low_weight_codewords(WeightKind::Hamming, dh)?, n)?;
    let mut by_lee: BTreeMap<usize, Vec<Z4Vector>> = BTreeMap::new();
    for w in c.low_weight_codewords(WeightKind::Euclidean, de)? {
        if w.weight(WeightKind::Euclidean) == de {
            by_lee.entry(w.weight(WeightKind::Lee)).or_default().push(w);
        }
    }
    let mut rows = vec![DesignRow::new(
        label,
        format!("minimum Hamming weight {dh}"),
        base,
    )];
    for (lee, words) in by_lee {
        let d = supports_to_design(&words, n)?;
        if d.blocks() != rows[0].design.blocks() {
            rows.push(DesignRow::new(
                label,
                format!("Euclidean weight {de}, Lee weight {lee}"),
                d,
            ));
        }
    }
    Ok(rows)
}

/// The row for the minimum weight words of a binary code, if its minimum
/// weight is within the search bound.
pub fn binary_design_row(label: &str, c: &BinaryCode) -> Result<Option<DesignRow>> {
    for bound in 1..=MAX_SEARCH_WEIGHT {
        let words = c.min_weight_codewords(bound)?;
        if !words.is_empty() {
            let d = binary_supports_to_design(&words, c.length())?;
            return Ok(Some(DesignRow::new(
                label,
                format!("minimum weight {bound}"),
                d,
            )));
        }
    }
    Ok(None)
}

/// Weight-2 words of the torsion code of an extended code, with their
/// supports `{i, j}` grouped by cyclic distance `k = min(j - i, n - j + i)`.
#[derive(Clone, Debug)]
pub struct TorsionDesign {
    pub design: Design,
    /// Block indices for each `k`.
    pub classes: BTreeMap<usize, Vec<usize>>,
}

impl TorsionDesign {
    /// Every distance is even, each class with `k < n/2` has `n` blocks and
    /// covers every point twice, and the class `k = n/2` has `n/2` blocks and
    /// covers every point once.
    pub fn coverage_holds(&self) -> bool {
        let n = self.design.v();
        let half = n / 2;
        let expected_classes: Vec<usize> = (2..=half).step_by(2).collect();
        if self.classes.keys().copied().collect::<Vec<_>>() != expected_classes {
            return false;
        }
        self.classes.iter().all(|(&k, idx)| {
            let (size, times) = if k == half { (half, 1) } else { (n, 2) };
            let mut on = vec![0usize; n];
            for &i in idx {
                for &p in &self.design.blocks()[i] {
                    on[p] += 1;
                }
            }
            idx.len() == size && on.iter().all(|&x| x == times)
        })
    }

    /// `1-(2^m, 2, 2^(m-1) - 1)` with `2^(m-1) (2^(m-1) - 1)` blocks.
    pub fn expected(m: usize) -> OneDesign {
        let h = 1usize << (m - 1);
        OneDesign {
            v: 2 * h,
            k: 2,
            lambda: h - 1,
            b: h * (h - 1),
            r: h - 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let p = verify_one_design(&self.design);
        json!({
            "design": p.map(|p| p.to_string()),
            "b": self.design.b(),
            "coverage": self.coverage_holds(),
            "classes": self.classes.iter().map(|(k, idx)| json!({
                "k": k,
                "blocks": idx.len(),
                "supports": idx.iter().map(|&i| self.design.blocks()[i].iter().map(|p| p + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn torsion_design_of(extended: &Z4Code) -> Result<TorsionDesign> {
    let n = extended.length();
    let words = extended.torsion().min_weight_codewords(2)?;
    let design = binary_supports_to_design(&words, n)?;
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, b) in design.blocks().iter().enumerate() {
        if b.len() != 2 {
            return Err(Error::precondition(format!(
                "torsion code has a word of weight {}",
                b.len()
            )));
        }
        let d = b[1] - b[0];
        classes.entry(d.min(n - d)).or_default().push(i);
    }
    Ok(TorsionDesign { design, classes })
}

/// The torsion design of the extended code built from the reference pair for
/// `m` in {3, 5, 7}.
pub fn torsion_min_weight_design(m: usize) -> Result<TorsionDesign> {
    let (a, b) = construct::reference_pair(m)?;
    let ext = construct::extend_type_ii(&construct::build_code(&a, &b)?)?;
    torsion_design_of(&ext.code)
}

/// All design rows for the code built from `(a, b)`: the code, its Gray image,
/// its dual, and the torsion code of its extension.
pub fn pair_design_rows(c: &Z4Code, extended: &Z4Code) -> Result<Vec<DesignRow>> {
    let mut rows = code_design_rows("C_f", c)?;
    if let Ok(image) = construct::gray_image_code(c) {
        rows.extend(binary_design_row("phi(C_f)", &image)?);
    }
    rows.extend(code_design_rows("dual(C_f)", &c.dual()?)?);
    let t = torsion_design_of(extended)?;
    rows.push(DesignRow::new(
        "torsion(ext C_f)",
        "minimum weight 2",
        t.design,
    ));
    Ok(rows)
}

/// The design table for the reference pair at `m` in {3, 5}.
pub fn table_rows(m: usize) -> Result<Vec<DesignRow>> {
    if m != 3 && m != 5 {
        return Err(Error::UnsupportedArity {
            arity: m,
            reason: "design tables are built for m = 3 and m = 5",
        });
    }
    let (a, b) = construct::reference_pair(m)?;
    let c = construct::build_code(&a, &b)?;
    let ext = construct::extend_type_ii(&c)?;
    pair_design_rows(&c, &ext.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn design(v: usize, blocks: &[&[usize]]) -> Design {
        Design::from_blocks(v, blocks.iter().map(|b| b.to_vec())).unwrap()
    }

    #[test]
    fn supports_collapse() {
        let words: Vec<Z4Vector> = ["1100", "3100", "0022"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let d = supports_to_design(&words, 4).unwrap();
        assert_eq!(d.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(d.multiplicities(), &[2, 1]);
        assert!(supports_to_design(&[], 4).is_err());
        let single = supports_to_design(&["1100".parse().unwrap()], 4).unwrap();
        assert_eq!(single.blocks(), &[vec![0, 1]]);
    }

    #[test]
    fn one_design_check() {
        let d = design(4, &[&[0, 1], &[2, 3]]);
        let p = verify_one_design(&d).unwrap();
        assert_eq!((p.k, p.lambda, p.b, p.r), (2, 1, 2, 1));
        assert_eq!(verify_one_design(&design(3, &[&[0, 1], &[0, 2]])), None);
        assert_eq!(intersection_numbers(&d).unwrap(), BTreeSet::from([0]));
        assert!(intersection_numbers(&design(2, &[&[0, 1]])).is_err());
    }

    #[test]
    fn srg_cases() {
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 4..8 {
                edges.push((a, b));
            }
        }
        let k44 = SimpleGraph::from_edges(8, &edges);
        let p = srg_parameters(&k44).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (8, 4, 0, 4));
        assert!(p.feasible());
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(srg_parameters(&path), None);
        let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let p = srg_parameters(&k4).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu, p.mu_vacuous), (4, 3, 2, 0, true));
        assert!(p.feasible());
    }

    #[test]
    fn resolutions() {
        let one_class = design(8, &[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]);
        assert_eq!(resolvability(&one_class).classes().unwrap().len(), 1);
        assert!(!is_affine_resolvable(&one_class));
        // affine plane of order 2
        let ag = design(4, &[&[0, 1], &[2, 3], &[0, 2], &[1, 3], &[0, 3], &[1, 2]]);
        let net = affine_resolution(&ag).unwrap();
        assert_eq!((net.s, net.r, net.mu), (2, 3, 1));
        // 1-(6,3,2) whose blocks pairwise meet
        let bad = design(6, &[&[0, 1, 2], &[2, 3, 4], &[0, 4, 5], &[1, 3, 5]]);
        assert_eq!(resolvability(&bad), Resolution::NotResolvable);
    }

    #[test]
    fn relabel_is_covariant() {
        let d = design(4, &[&[0, 1], &[1, 2]]);
        let r = d.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r.blocks(), &[vec![1, 2], vec![2, 3]]);
    }
}
