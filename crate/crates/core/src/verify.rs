//! Brute-force verifiers and certificates.
//!
//! Every checker recomputes its object's differences or correlations from
//! scratch and shares nothing with the constructions beyond [`crate::diff`].
//! A [`Certificate`] passes iff it carries no witness.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diff::{self, Block, Family, GridBlock, Kind, Payload};
use crate::error::{Error, Result};

/// Witnesses kept per certificate; further violations are only counted.
pub const WITNESS_CAP: usize = 32;

/// The expected value at a witness position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Exactly(i64),
    AtMost(i64),
}

/// One violation: where, what was required and what was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub at: Vec<i64>,
    pub expected: Expect,
    pub actual: i64,
    pub detail: String,
}

/// A verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: String,
    pub params: BTreeMap<String, i64>,
    pub pass: bool,
    /// Difference (or residue, or correlation shift) to observed count.
    pub coverage: BTreeMap<i64, i64>,
    pub witnesses: Vec<Witness>,
    /// Violations beyond [`WITNESS_CAP`].
    pub truncated: u64,
    pub facts: BTreeMap<String, Value>,
}

impl Certificate {
    pub fn new(kind: &str, params: &[(&str, i64)]) -> Self {
        Certificate {
            kind: kind.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            pass: false,
            coverage: BTreeMap::new(),
            witnesses: Vec::new(),
            truncated: 0,
            facts: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, w: Witness) {
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(w);
        } else {
            self.truncated += 1;
        }
    }

    fn violation(&mut self, at: Vec<i64>, expected: Expect, actual: i64, detail: impl Into<String>) {
        self.push(Witness { at, expected, actual, detail: detail.into() });
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.insert(key.to_string(), value.into());
    }

    /// Seals the verdict from the witness list.
    pub fn finish(mut self) -> Self {
        self.pass = self.witnesses.is_empty() && self.truncated == 0;
        self
    }

    pub fn violations(&self) -> u64 {
        self.witnesses.len() as u64 + self.truncated
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidFamily(msg()))
    }
}

fn check_sizes(blocks: &[Block], k: usize) -> Result<()> {
    if let Some(b) = blocks.iter().find(|b| b.len() != k) {
        return Err(Error::InvalidFamily(format!("block {b} has size {}, expected {k}", b.len())));
    }
    Ok(())
}

fn residue_counts(blocks: &[Block], v: i64) -> Result<diff::DiffMultiset> {
    let mut m = diff::DiffMultiset::with_bound(v as usize);
    for b in blocks {
        let d = diff::diffs_mod(b, v).map_err(|e| Error::InvalidFamily(e.to_string()))?;
        m.merge(&d);
    }
    Ok(m)
}

fn cyclic(kind: &str, blocks: &[Block], v: i64, k: usize, lambda: i64, exact: bool) -> Result<Certificate> {
    if v < 2 {
        return Err(Error::UnsupportedModulus { v, reason: "modulus must be at least 2".into() });
    }
    check_sizes(blocks, k)?;
    let counts = residue_counts(blocks, v)?;
    let mut cert = Certificate::new(kind, &[("v", v), ("k", k as i64), ("lambda", lambda)]);
    for r in 1..v {
        let c = counts.count(r) as i64;
        cert.coverage.insert(r, c);
        if exact && c != lambda {
            cert.violation(vec![r], Expect::Exactly(lambda), c, format!("residue {r}"));
        } else if !exact && c > lambda {
            cert.violation(vec![r], Expect::AtMost(lambda), c, format!("residue {r}"));
        }
    }
    cert.fact("blocks", blocks.len() as i64);
    Ok(cert.finish())
}

/// Cyclic difference packing: each nonzero residue at most `lambda` times.
pub fn verify_cdp(blocks: &[Block], v: i64, k: usize, lambda: i64) -> Result<Certificate> {
    cyclic("CDP", blocks, v, k, lambda, false)
}

/// Cyclic difference family: each nonzero residue exactly `lambda` times.
pub fn verify_cdf(blocks: &[Block], v: i64, k: usize, lambda: i64) -> Result<Certificate> {
    cyclic("CDF", blocks, v, k, lambda, true)
}

/// Perfect difference family: positive differences of the residues cover
/// `[1, (v-1)/2]` exactly `lambda` times and nothing above.
pub fn verify_pdf(blocks: &[Block], v: i64, k: usize, lambda: i64) -> Result<Certificate> {
    if v < 3 || v % 2 == 0 {
        return Err(Error::UnsupportedModulus { v, reason: "perfect difference families need odd v >= 3".into() });
    }
    check_sizes(blocks, k)?;
    let half = (v - 1) / 2;
    let mut pos = diff::DiffMultiset::with_bound(v as usize);
    for b in blocks {
        let d = diff::diffs_positive_mod(b, v).map_err(|e| Error::InvalidFamily(e.to_string()))?;
        pos.merge(&d);
    }
    let mut cert = Certificate::new("PDF", &[("v", v), ("k", k as i64), ("lambda", lambda)]);
    for d in 1..v {
        let c = pos.count(d) as i64;
        if c > 0 || d <= half {
            cert.coverage.insert(d, c);
        }
        let want = if d <= half { lambda } else { 0 };
        if c != want {
            cert.violation(vec![d], Expect::Exactly(want), c, format!("positive difference {d}"));
        }
    }
    cert.fact("blocks", blocks.len() as i64);
    Ok(cert.finish())
}

/// Perfect system of difference sets with threshold `c`: the positive
/// differences are exactly `[c, c - 1 + Σ C(k_i, 2)]`, each once.
pub fn verify_psds(blocks: &[Block], c: i64) -> Result<Certificate> {
    require(c >= 1, || format!("threshold {c} must be positive"))?;
    let pos = diff::family_diffs_positive(blocks);
    let total: i64 = blocks.iter().map(|b| (b.len() * (b.len() - 1) / 2) as i64).sum();
    let hi = c - 1 + total;
    let mut cert = Certificate::new("PSDS", &[("m", blocks.len() as i64), ("c", c)]);
    if let Some(k) = blocks.first().map(|b| b.len()) {
        if blocks.iter().all(|b| b.len() == k) {
            cert.params.insert("k".into(), k as i64);
        }
    }
    let top = pos.max_value().unwrap_or(0).max(hi);
    for d in 1..=top {
        let n = pos.count(d) as i64;
        if n > 0 || (c..=hi).contains(&d) {
            cert.coverage.insert(d, n);
        }
        let want = i64::from((c..=hi).contains(&d));
        if n != want {
            cert.violation(vec![d], Expect::Exactly(want), n, format!("positive difference {d}"));
        }
    }
    cert.fact("range", vec![c, hi]);
    Ok(cert.finish())
}

/// Difference triangle set: all positive differences of all rows distinct.
/// Reports the scope and whether it meets `m·C(k+1, 2)`.
pub fn verify_dts(rows: &[Block], m: usize, k: usize) -> Result<Certificate> {
    let mut cert = Certificate::new("DTS", &[("m", m as i64), ("k", k as i64)]);
    if rows.len() != m {
        cert.violation(vec![], Expect::Exactly(m as i64), rows.len() as i64, "row count");
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != k + 1 {
            cert.violation(vec![i as i64], Expect::Exactly(k as i64 + 1), r.len() as i64, "row length");
        }
        if r.min() != 0 {
            cert.violation(vec![i as i64], Expect::Exactly(0), r.min(), "row must start at 0");
        }
    }
    let pos = diff::family_diffs_positive(rows);
    for (d, n) in pos.iter() {
        cert.coverage.insert(d, n as i64);
        if n > 1 {
            cert.violation(vec![d], Expect::AtMost(1), n as i64, format!("difference {d} repeats"));
        }
    }
    let scope = rows.iter().map(Block::max).max().unwrap_or(0);
    let minimum = (m * k * (k + 1) / 2) as i64;
    cert.fact("scope", scope);
    cert.fact("minimum_scope", minimum);
    cert.fact("scope_is_minimum", scope == minimum);
    Ok(cert.finish())
}

/// Optical orthogonal code given by codeword supports in `[0, n)`.
/// Auto-correlation at every nonzero cyclic shift and cross-correlation at
/// every shift are at most `lambda`.
pub fn verify_ooc(supports: &[Block], n: i64, k: usize, lambda: i64) -> Result<Certificate> {
    require(n >= 2 && k >= 2, || format!("OOC needs n >= 2 and k >= 2, got n={n}, k={k}"))?;
    let mut cert = Certificate::new("OOC", &[("n", n), ("k", k as i64), ("lambda", lambda)]);
    let words: Vec<Vec<bool>> = supports
        .iter()
        .map(|b| {
            let mut w = vec![false; n as usize];
            for &x in b.elements().iter().filter(|&&x| x < n) {
                w[x as usize] = true;
            }
            w
        })
        .collect();
    for (i, b) in supports.iter().enumerate() {
        if b.len() != k {
            cert.violation(vec![i as i64], Expect::Exactly(k as i64), b.len() as i64, "codeword weight");
        }
        if b.max() >= n {
            cert.violation(vec![i as i64], Expect::AtMost(n - 1), b.max(), "support outside [0, n)");
        }
    }
    let corr = |a: &[bool], b: &[bool], r: usize| -> i64 {
        (0..n as usize).filter(|&i| a[i] && b[(i + r) % n as usize]).count() as i64
    };
    let mut worst: BTreeMap<i64, i64> = BTreeMap::new();
    for (i, a) in words.iter().enumerate() {
        for r in 1..n as usize {
            let c = corr(a, a, r);
            let e = worst.entry(r as i64).or_insert(0);
            *e = (*e).max(c);
            if c > lambda {
                cert.violation(vec![i as i64, i as i64, r as i64], Expect::AtMost(lambda), c, "auto-correlation");
            }
        }
        for (j, b) in words.iter().enumerate().skip(i + 1) {
            for r in 0..n as usize {
                let c = corr(a, b, r);
                let e = worst.entry(r as i64).or_insert(0);
                *e = (*e).max(c);
                if c > lambda {
                    cert.violation(vec![i as i64, j as i64, r as i64], Expect::AtMost(lambda), c, "cross-correlation");
                }
            }
        }
    }
    cert.coverage = worst;
    let bound = (n - 1) / (k * (k - 1)) as i64;
    cert.fact("size", supports.len() as i64);
    cert.fact("johnson_bound", bound);
    cert.fact("j_optimal", supports.len() as i64 == bound);
    Ok(cert.finish())
}

/// Centered basis `[-(n-1)/2, (n-1)/2]`.
pub fn centered_basis(n: i64) -> Vec<i64> {
    let h = (n - 1) / 2;
    (-h..=h).collect()
}

/// Additive sequence of permutations over the centered basis: every
/// consecutive run-sum of rows is again a permutation of the basis.
pub fn verify_asp(rows: &[Vec<i64>], m: usize, n: i64) -> Result<Certificate> {
    require(rows.iter().all(|r| r.len() as i64 == n), || format!("every ASP row must have length {n}"))?;
    require(n >= 1 && n % 2 == 1, || format!("ASP basis needs odd n, got {n}"))?;
    let mut cert = Certificate::new("ASP", &[("m", m as i64), ("n", n)]);
    if rows.len() != m {
        cert.violation(vec![], Expect::Exactly(m as i64), rows.len() as i64, "row count");
    }
    let basis: BTreeSet<i64> = centered_basis(n).into_iter().collect();
    for j1 in 0..rows.len() {
        let mut sum = vec![0i64; n as usize];
        for (j2, row) in rows.iter().enumerate().skip(j1) {
            for (s, x) in sum.iter_mut().zip(row) {
                *s += x;
            }
            let mut seen = BTreeSet::new();
            let ok = sum.iter().all(|x| basis.contains(x) && seen.insert(*x));
            if !ok {
                let bad = sum.iter().find(|x| !basis.contains(x)).copied();
                cert.violation(
                    vec![j1 as i64, j2 as i64],
                    Expect::Exactly(n),
                    seen.len() as i64,
                    match bad {
                        Some(x) => format!("run sum X{}..X{} leaves the basis at {x}", j1 + 1, j2 + 1),
                        None => format!("run sum X{}..X{} repeats a value", j1 + 1, j2 + 1),
                    },
                );
            }
        }
    }
    Ok(cert.finish())
}

/// Perfect difference matrix: for every row pair the columnwise integer
/// differences are exactly `[-(n-1)/2, (n-1)/2]`. Homogeneity (each row a
/// permutation of `0..n`) is always reported and enforced when requested.
pub fn verify_pdm(matrix: &[Vec<i64>], m: usize, n: i64, homogeneous: bool) -> Result<Certificate> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::UnsupportedModulus { v: n, reason: "perfect difference matrices need odd n".into() });
    }
    require(matrix.iter().all(|r| r.len() as i64 == n), || format!("every PDM row must have length {n}"))?;
    let mut cert = Certificate::new("PDM", &[("m", m as i64), ("n", n)]);
    if matrix.len() != m {
        cert.violation(vec![], Expect::Exactly(m as i64), matrix.len() as i64, "row count");
    }
    for (i, row) in matrix.iter().enumerate() {
        if let Some(&x) = row.iter().find(|&&x| !(0..n).contains(&x)) {
            cert.violation(vec![i as i64], Expect::AtMost(n - 1), x, "entry outside [0, n)");
        }
    }
    let target: Vec<i64> = centered_basis(n);
    for i in 0..matrix.len() {
        for j in i + 1..matrix.len() {
            let mut d: Vec<i64> = matrix[j].iter().zip(&matrix[i]).map(|(a, b)| a - b).collect();
            d.sort_unstable();
            if d != target {
                let dup = d.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]);
                cert.violation(
                    vec![i as i64, j as i64],
                    Expect::Exactly(1),
                    2,
                    match dup {
                        Some(x) => format!("rows {i},{j}: difference {x} repeats"),
                        None => format!("rows {i},{j}: differences leave the centered interval"),
                    },
                );
            }
        }
    }
    let full: Vec<i64> = (0..n).collect();
    let homog: Vec<bool> = matrix
        .iter()
        .map(|r| {
            let mut s = r.clone();
            s.sort_unstable();
            s == full
        })
        .collect();
    if homogeneous {
        for (i, &h) in homog.iter().enumerate() {
            if !h {
                cert.violation(vec![i as i64], Expect::Exactly(n), 0, format!("row {i} is not a permutation of 0..{n}"));
            }
        }
    }
    cert.fact("homogeneous", homog.iter().all(|&h| h));
    Ok(cert.finish())
}

fn encode(x: i64, y: i64) -> i64 {
    x * 1_000_003 + y
}

/// Geometric difference packing on the centered grid `U1 × U2`: every
/// difference vector of every block lies in the grid, is nonzero, and occurs
/// at most once over the whole family.
pub fn verify_gdp(blocks: &[GridBlock], u1: i64, u2: i64, w: usize) -> Result<Certificate> {
    require(u1 >= 1 && u2 >= 1 && u1 % 2 == 1 && u2 % 2 == 1, || format!("GDP grid sides must be odd, got {u1}x{u2}"))?;
    let (h1, h2) = ((u1 - 1) / 2, (u2 - 1) / 2);
    let mut cert = Certificate::new("GDP", &[("u1", u1), ("u2", u2), ("w", w as i64)]);
    let mut seen: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        if b.len() != w {
            cert.violation(vec![i as i64], Expect::Exactly(w as i64), b.len() as i64, "block size");
        }
        for (p, &(x1, y1)) in b.points().iter().enumerate() {
            for (q, &(x2, y2)) in b.points().iter().enumerate() {
                if p == q {
                    continue;
                }
                let (dx, dy) = (x1 - x2, y1 - y2);
                if dx.abs() > h1 || dy.abs() > h2 {
                    cert.violation(vec![i as i64, dx, dy], Expect::Exactly(0), 1, "difference outside the grid");
                }
                *seen.entry((dx, dy)).or_insert(0) += 1;
            }
        }
    }
    for (&(dx, dy), &c) in &seen {
        if c > 1 {
            cert.violation(vec![dx, dy], Expect::AtMost(1), c as i64, format!("difference ({dx},{dy}) repeats"));
        }
    }
    cert.coverage = seen.iter().map(|(&(dx, dy), &c)| (encode(dx, dy), c as i64)).collect();
    cert.fact("blocks", blocks.len() as i64);
    cert.fact("covered", seen.len() as i64);
    cert.fact("coverage_key", "dx * 1000003 + dy");
    Ok(cert.finish())
}

/// Geometric orthogonal code in `[0, n1) × [0, n2)`: aperiodic
/// auto-correlation at every nonzero shift and cross-correlation at every
/// shift are at most 1.
pub fn verify_goc(codewords: &[GridBlock], n1: i64, n2: i64, w: usize) -> Result<Certificate> {
    require(n1 >= 1 && n2 >= 1, || format!("GOC needs positive sides, got {n1}x{n2}"))?;
    let mut cert = Certificate::new("GOC", &[("n1", n1), ("n2", n2), ("w", w as i64)]);
    for (i, c) in codewords.iter().enumerate() {
        if c.len() != w {
            cert.violation(vec![i as i64], Expect::Exactly(w as i64), c.len() as i64, "codeword weight");
        }
        for &(x, y) in c.points() {
            if !(0..n1).contains(&x) || !(0..n2).contains(&y) {
                cert.violation(vec![i as i64, x, y], Expect::Exactly(0), 1, "point outside the grid");
            }
        }
    }
    let sets: Vec<BTreeSet<(i64, i64)>> = codewords.iter().map(|c| c.points().iter().copied().collect()).collect();
    let mut worst = 0i64;
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i) {
            for s in -(n1 - 1)..n1 {
                for t in -(n2 - 1)..n2 {
                    if i == j && s == 0 && t == 0 {
                        continue;
                    }
                    let c = b.iter().filter(|&&(x, y)| a.contains(&(x + s, y + t))).count() as i64;
                    worst = worst.max(c);
                    if c > 1 {
                        let what = if i == j { "auto-correlation" } else { "cross-correlation" };
                        cert.violation(vec![i as i64, j as i64, s, t], Expect::AtMost(1), c, what);
                    }
                }
            }
        }
    }
    cert.coverage.insert(0, worst);
    cert.fact("size", codewords.len() as i64);
    cert.fact("max_correlation", worst);
    if w == 4 {
        cert.fact("upper_bound", (2 * n1 * n2 - n1 - n2) / 6);
    }
    Ok(cert.finish())
}

/// Graceful labeling of the windmill `K_4^(m)`: `labels[0]` is the shared
/// vertex, `labels[3i+1..3i+4]` the rest of copy `i`. Labels must be distinct
/// in `[0, 6m]` and the `6m` edge labels a bijection onto `[1, 6m]`.
pub fn verify_graceful_windmill(labels: &[i64], m: usize) -> Result<Certificate> {
    require(labels.len() == 3 * m + 1, || {
        format!("K_4^({m}) has {} vertices, got {} labels", 3 * m + 1, labels.len())
    })?;
    let q = 6 * m as i64;
    let mut cert = Certificate::new("graceful", &[("m", m as i64)]);
    let mut used = BTreeSet::new();
    for (i, &l) in labels.iter().enumerate() {
        if !(0..=q).contains(&l) {
            cert.violation(vec![i as i64], Expect::AtMost(q), l, "label outside [0, 6m]");
        }
        if !used.insert(l) {
            cert.violation(vec![i as i64, l], Expect::AtMost(1), 2, format!("vertex label {l} repeats"));
        }
    }
    let mut edges = diff::DiffMultiset::with_bound(q as usize + 1);
    for c in 0..m {
        let vs = [labels[0], labels[3 * c + 1], labels[3 * c + 2], labels[3 * c + 3]];
        for a in 0..4 {
            for b in a + 1..4 {
                edges.add((vs[a] - vs[b]).abs(), 1);
            }
        }
    }
    for d in 0..=edges.max_value().unwrap_or(0).max(q) {
        let n = edges.count(d) as i64;
        if d >= 1 {
            cert.coverage.insert(d, n);
        }
        let want = i64::from(d >= 1 && d <= q);
        if n != want {
            cert.violation(vec![d], Expect::Exactly(want), n, format!("edge label {d}"));
        }
    }
    Ok(cert.finish())
}

/// Verifies a family according to its kind and parameters.
pub fn verify_family(f: &Family) -> Result<Certificate> {
    let p = |name: &str| f.param(name);
    let usize_param = |name: &str| -> Result<usize> {
        let x = f.param(name)?;
        usize::try_from(x).map_err(|_| Error::InvalidFamily(format!("parameter {name}={x} must be nonnegative")))
    };
    let mut cert = match (&f.payload, f.kind) {
        (Payload::Blocks(b), Kind::Cdp) => verify_cdp(b, p("v")?, usize_param("k")?, p("lambda")?)?,
        (Payload::Blocks(b), Kind::Cdf) => verify_cdf(b, p("v")?, usize_param("k")?, p("lambda")?)?,
        (Payload::Blocks(b), Kind::Pdf) => verify_pdf(b, p("v")?, usize_param("k")?, p("lambda")?)?,
        (Payload::Blocks(b), Kind::Psds) => {
            check_sizes(b, usize_param("k")?)?;
            let mut c = verify_psds(b, p("c")?)?;
            if b.len() as i64 != p("m")? {
                c.violation(vec![], Expect::Exactly(p("m")?), b.len() as i64, "block count");
                c = c.finish();
            }
            c
        }
        (Payload::Blocks(b), Kind::Dts) => verify_dts(b, usize_param("m")?, usize_param("k")?)?,
        (Payload::Blocks(b), Kind::Ooc) => verify_ooc(b, p("n")?, usize_param("k")?, p("lambda")?)?,
        (Payload::Rows(r), Kind::Asp) => verify_asp(r, usize_param("m")?, p("n")?)?,
        (Payload::Rows(r), Kind::Pdm) => verify_pdm(r, usize_param("m")?, p("n")?, false)?,
        (Payload::Points(b), Kind::Gdp) => verify_gdp(b, p("u1")?, p("u2")?, usize_param("w")?)?,
        (Payload::Points(c), Kind::Goc) => verify_goc(c, p("n1")?, p("n2")?, usize_param("w")?)?,
        _ => return Err(Error::InvalidFamily(format!("payload does not match kind {}", f.kind))),
    };
    cert.params = f.params.clone();
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bl(rows: &[&[i64]]) -> Vec<Block> {
        rows.iter().map(|r| Block::new(r.to_vec()).unwrap()).collect()
    }

    #[test]
    fn cyclic_checks() {
        assert!(verify_cdf(&bl(&[&[0, 1, 3, 9]]), 13, 4, 1).unwrap().pass);
        let c = verify_cdp(&bl(&[&[0, 1, 2, 3]]), 13, 4, 1).unwrap();
        assert!(!c.pass);
        assert_eq!(c.witnesses[0].at, vec![1]);
        assert_eq!(c.witnesses[0].actual, 3);
        assert!(verify_cdf(&bl(&[&[0, 1, 2, 4]]), 7, 4, 2).unwrap().pass);
        assert!(verify_cdf(&bl(&[&[0, 1, 2]]), 7, 4, 2).is_err());
    }

    #[test]
    fn pdf_checks() {
        assert!(verify_pdf(&bl(&[&[0, 2, 5, 6]]), 13, 4, 1).unwrap().pass);
        let c = verify_pdf(&bl(&[&[0, 1, 3, 9]]), 13, 4, 1).unwrap();
        assert!(!c.pass);
        assert!(c.witnesses.iter().any(|w| w.at == vec![9] && w.actual == 1));
        assert!(matches!(verify_pdf(&bl(&[&[0, 1]]), 12, 2, 1), Err(Error::UnsupportedModulus { .. })));
    }

    #[test]
    fn psds_checks() {
        let m5 = bl(&[&[0, 3, 20, 28], &[0, 4, 19, 31], &[0, 5, 18, 29], &[0, 6, 22, 32], &[0, 7, 21, 30]]);
        assert!(verify_psds(&m5, 3).unwrap().pass);
        let c = verify_psds(&m5, 2).unwrap();
        assert!(c.witnesses.iter().any(|w| w.at == vec![2] && w.actual == 0));
        let c = verify_psds(&bl(&[&[0, 1, 2]]), 1).unwrap();
        assert!(c.witnesses.iter().any(|w| w.at == vec![1] && w.actual == 2));
    }

    #[test]
    fn dts_checks() {
        let c = verify_dts(&bl(&[&[0, 2, 5, 6]]), 1, 3).unwrap();
        assert!(c.pass);
        assert_eq!(c.facts["scope"], 6);
        assert_eq!(c.facts["scope_is_minimum"], true);
        assert!(!verify_dts(&bl(&[&[0, 1, 2, 3]]), 1, 3).unwrap().pass);
    }

    #[test]
    fn ooc_checks() {
        let c = verify_ooc(&bl(&[&[0, 1, 2, 4]]), 7, 4, 1).unwrap();
        assert!(!c.pass, "{{0,1,2,4}} mod 7 has every shift twice");
        let c = verify_ooc(&bl(&[&[0, 2, 5, 6]]), 13, 4, 1).unwrap();
        assert!(c.pass);
        assert_eq!(c.facts["j_optimal"], true);
        let c = verify_ooc(&bl(&[&[0, 1], &[0, 1]]), 7, 2, 1).unwrap();
        assert!(!c.pass);
        assert!(c.witnesses.iter().all(|w| w.detail == "cross-correlation"));
    }

    #[test]
    fn asp_checks() {
        let x1 = vec![-2, -1, 0, 1, 2];
        let x2 = vec![0, 1, 2, -2, -1];
        assert!(verify_asp(&[x1.clone(), x2], 2, 5).unwrap().pass);
        assert!(verify_asp(std::slice::from_ref(&x1), 1, 5).unwrap().pass);
        let s = vec![-1, 0, 1];
        assert!(!verify_asp(&[s.clone(), s], 2, 3).unwrap().pass);
        assert!(verify_asp(&[x1, vec![0]], 2, 5).is_err());
    }

    #[test]
    fn pdm_checks() {
        let good = vec![vec![0, 1, 2, 3, 4], vec![0, 2, 4, 1, 3]];
        let c = verify_pdm(&good, 2, 5, true).unwrap();
        assert!(c.pass, "{:?}", c.witnesses);
        let bad = vec![vec![0, 1, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        let c = verify_pdm(&bad, 2, 5, false).unwrap();
        assert!(!c.pass);
        let c = verify_pdm(&[vec![0, 0, 0]], 1, 3, true).unwrap();
        assert!(!c.pass);
        assert_eq!(c.facts["homogeneous"], false);
        assert!(verify_pdm(&[vec![0, 0]], 1, 2, false).is_err());
    }

    #[test]
    fn geometric_checks() {
        let a = GridBlock::new(vec![(0, 0), (1, 0), (0, 2)]).unwrap();
        let b = a.shifted(1, 1);
        let c = verify_goc(&[a.clone(), b], 4, 4, 3).unwrap();
        assert!(!c.pass);
        assert!(c.witnesses.iter().any(|w| w.detail == "cross-correlation"));
        assert!(verify_goc(std::slice::from_ref(&a), 4, 4, 3).unwrap().pass);
        assert!(verify_gdp(&[a.shifted(-1, -1)], 3, 5, 3).unwrap().pass);
        assert!(!verify_gdp(&[a], 1, 5, 3).unwrap().pass);
    }

    #[test]
    fn graceful_checks() {
        assert!(verify_graceful_windmill(&[0, 2, 5, 6], 1).unwrap().pass);
        assert!(!verify_graceful_windmill(&[0, 1, 2, 3], 1).unwrap().pass);
        assert!(verify_graceful_windmill(&[0, 2, 5], 1).is_err());
    }

    #[test]
    fn witness_cap_truncates() {
        let blocks = bl(&[&[0, 1, 2, 3][..]; 20]);
        let c = verify_pdf(&blocks, 201, 4, 1).unwrap();
        assert!(!c.pass);
        assert_eq!(c.witnesses.len(), WITNESS_CAP);
        assert!(c.truncated > 0);
    }
}
