//! Blocks, difference multisets and stepped intervals.
//!
//! A [`Block`] is a strictly increasing tuple of nonnegative integers. Its
//! positive differences `x - y` (`x > y`) form a [`DiffMultiset`]; reduced
//! modulo `v` the ordered-pair differences form the cyclic multiset `ΔF`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A base block: sorted, distinct, nonnegative, at least two elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Block(Vec<i64>);

impl Block {
    /// Sorts `elements` and checks the block invariants.
    pub fn new(elements: impl Into<Vec<i64>>) -> Result<Self> {
        let mut elements = elements.into();
        if elements.len() < 2 {
            return Err(Error::InvalidBlock(format!(
                "{elements:?} has fewer than two elements"
            )));
        }
        elements.sort_unstable();
        if let Some(&x) = elements.iter().find(|&&x| x < 0) {
            return Err(Error::InvalidBlock(format!("{elements:?} contains negative element {x}")));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidBlock(format!("{elements:?} repeats element {}", w[0])));
        }
        Ok(Block(elements))
    }

    pub fn elements(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn max(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// Translates the block so that its least element is 0.
    pub fn normalized(&self) -> Block {
        let m = self.min();
        Block(self.0.iter().map(|&x| x - m).collect())
    }

    /// Reduces every element mod `v` and re-sorts; fails if two elements collide.
    pub fn reduced(&self, v: i64) -> Result<Block> {
        let mut r: Vec<i64> = self.0.iter().map(|&x| x.rem_euclid(v)).collect();
        r.sort_unstable();
        if let Some(w) = r.windows(2).find(|w| w[0] == w[1]) {
            let x = *self.0.iter().find(|&&x| x.rem_euclid(v) == w[0]).unwrap();
            let y = *self.0.iter().rev().find(|&&y| y.rem_euclid(v) == w[0]).unwrap();
            return Err(Error::DegenerateBlock { block: self.0.clone(), x, y, v });
        }
        Ok(Block(r))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl<'de> Deserialize<'de> for Block {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        Block::new(v).map_err(serde::de::Error::custom)
    }
}

/// Counts of nonnegative integers, stored densely by value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiffMultiset {
    counts: Vec<u32>,
}

impl DiffMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// An empty multiset with room for values `0..bound` preallocated.
    pub fn with_bound(bound: usize) -> Self {
        DiffMultiset { counts: vec![0; bound] }
    }

    pub fn add(&mut self, value: i64, times: u32) {
        assert!(value >= 0, "difference multisets hold nonnegative values");
        let i = value as usize;
        if i >= self.counts.len() {
            self.counts.resize(i + 1, 0);
        }
        self.counts[i] += times;
    }

    pub fn count(&self, value: i64) -> u32 {
        if value < 0 {
            return 0;
        }
        self.counts.get(value as usize).copied().unwrap_or(0)
    }

    /// Total number of elements with multiplicity.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Largest value with positive count.
    pub fn max_value(&self) -> Option<i64> {
        self.counts.iter().rposition(|&c| c > 0).map(|i| i as i64)
    }

    /// `(value, count)` pairs with positive count, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as i64, c))
    }

    pub fn merge(&mut self, other: &DiffMultiset) {
        if other.counts.len() > self.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (a, &b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn to_map(&self) -> BTreeMap<i64, u32> {
        self.iter().collect()
    }

    /// Every member of `iv`, `times` times each.
    pub fn from_interval(iv: &SteppedInterval, times: u32) -> Self {
        let mut m = DiffMultiset::with_bound(iv.b.max(0) as usize + 1);
        for x in iv.iter() {
            m.add(x, times);
        }
        m
    }
}

impl FromIterator<i64> for DiffMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut m = DiffMultiset::new();
        for x in iter {
            m.add(x, 1);
        }
        m
    }
}

/// `[a, b]_c = {a + cj : 0 <= j <= (b - a)/c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteppedInterval {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl SteppedInterval {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if c <= 0 || a > b || (b - a) % c != 0 {
            return Err(Error::InvalidInterval { a, b, c });
        }
        Ok(SteppedInterval { a, b, c })
    }

    /// The unit-step interval `[a, b]`.
    pub fn unit(a: i64, b: i64) -> Result<Self> {
        Self::new(a, b, 1)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.a && x <= self.b && (x - self.a) % self.c == 0
    }

    pub fn len(&self) -> usize {
        ((self.b - self.a) / self.c + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        (self.a..=self.b).step_by(self.c as usize)
    }
}

/// The explicit, sorted member list of a stepped interval.
pub fn expand_interval(iv: &SteppedInterval) -> Result<Vec<i64>> {
    let iv = SteppedInterval::new(iv.a, iv.b, iv.c)?;
    Ok(iv.iter().collect())
}

/// `Δ+B`: every `x - y` with `x, y ∈ B`, `x > y`.
pub fn diffs_positive(block: &Block) -> DiffMultiset {
    let e = block.elements();
    let mut m = DiffMultiset::with_bound((block.max() - block.min()) as usize + 1);
    for (j, &x) in e.iter().enumerate() {
        for &y in &e[..j] {
            m.add(x - y, 1);
        }
    }
    m
}

/// `ΔB` over `Z_v`: every ordered-pair difference `x - y mod v`, `x ≠ y`.
pub fn diffs_mod(block: &Block, v: i64) -> Result<DiffMultiset> {
    if v < 2 {
        return Err(Error::UnsupportedModulus { v, reason: "modulus must be at least 2".into() });
    }
    let r = block.reduced(v)?;
    let e = r.elements();
    let mut m = DiffMultiset::with_bound(v as usize);
    for (j, &x) in e.iter().enumerate() {
        for &y in &e[..j] {
            m.add((x - y).rem_euclid(v), 1);
            m.add((y - x).rem_euclid(v), 1);
        }
    }
    Ok(m)
}

/// Positive differences over `Z_v`: for residues `x > y` in `[0, v)` the value `x - y`.
pub fn diffs_positive_mod(block: &Block, v: i64) -> Result<DiffMultiset> {
    if v < 2 {
        return Err(Error::UnsupportedModulus { v, reason: "modulus must be at least 2".into() });
    }
    Ok(diffs_positive(&block.reduced(v)?))
}

/// Union of `Δ+` over a list of blocks.
pub fn family_diffs_positive<'a>(blocks: impl IntoIterator<Item = &'a Block>) -> DiffMultiset {
    let mut m = DiffMultiset::new();
    for b in blocks {
        m.merge(&diffs_positive(b));
    }
    m
}

/// Outcome of [`coverage_equals`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub holds: bool,
    /// First offending `(value, count)` in ascending value order.
    pub witness: Option<(i64, u32)>,
}

/// True iff every member of `target` has count exactly `lambda` and nothing
/// outside `target` occurs.
pub fn coverage_equals(diffs: &DiffMultiset, target: &SteppedInterval, lambda: u32) -> Coverage {
    let hi = diffs.max_value().unwrap_or(0).max(target.b);
    let lo = target.a.min(0);
    for x in lo..=hi {
        let c = diffs.count(x);
        let bad = if target.contains(x) { c != lambda } else { c > 0 };
        if bad {
            return Coverage { holds: false, witness: Some((x, c)) };
        }
    }
    Coverage { holds: true, witness: None }
}

/// A set of lattice points, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridBlock(Vec<(i64, i64)>);

impl GridBlock {
    pub fn new(points: impl Into<Vec<(i64, i64)>>) -> Result<Self> {
        let mut p = points.into();
        p.sort_unstable();
        if let Some(w) = p.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidBlock(format!("point {:?} repeated", w[0])));
        }
        Ok(GridBlock(p))
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise translation.
    pub fn shifted(&self, dx: i64, dy: i64) -> GridBlock {
        GridBlock(self.0.iter().map(|&(x, y)| (x + dx, y + dy)).collect())
    }
}

/// What a [`Family`] is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Kind {
    Cdp,
    Cdf,
    Pdf,
    Psds,
    Dts,
    Ooc,
    Asp,
    Pdm,
    Gdp,
    Goc,
}

impl Kind {
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            Kind::Cdp | Kind::Cdf | Kind::Pdf => &["k", "lambda", "v"],
            Kind::Psds => &["c", "k", "m"],
            Kind::Dts => &["k", "m"],
            Kind::Ooc => &["k", "lambda", "n"],
            Kind::Asp | Kind::Pdm => &["m", "n"],
            Kind::Gdp => &["u1", "u2", "w"],
            Kind::Goc => &["n1", "n2", "w"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Cdp => "CDP",
            Kind::Cdf => "CDF",
            Kind::Pdf => "PDF",
            Kind::Psds => "PSDS",
            Kind::Dts => "DTS",
            Kind::Ooc => "OOC",
            Kind::Asp => "ASP",
            Kind::Pdm => "PDM",
            Kind::Gdp => "GDP",
            Kind::Goc => "GOC",
        }
    }

    fn payload_shape(self) -> PayloadShape {
        match self {
            Kind::Asp | Kind::Pdm => PayloadShape::Rows,
            Kind::Gdp | Kind::Goc => PayloadShape::Points,
            _ => PayloadShape::Blocks,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a family's blocks come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Published formulas or tables.
    Paper,
    /// Recovered by this crate's exact-cover search and embedded.
    Searched,
    /// Obtained from other objects by a derivation.
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PayloadShape {
    Blocks,
    Rows,
    Points,
}

/// The body of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    /// Integer base blocks (PDF, CDF, PSDS, DTS rows, OOC supports).
    Blocks(Vec<Block>),
    /// Ordered rows (ASP permutations, PDM rows).
    Rows(Vec<Vec<i64>>),
    /// Point sets (GDP blocks, GOC codewords).
    Points(Vec<GridBlock>),
}

impl Payload {
    fn shape(&self) -> PayloadShape {
        match self {
            Payload::Blocks(_) => PayloadShape::Blocks,
            Payload::Rows(_) => PayloadShape::Rows,
            Payload::Points(_) => PayloadShape::Points,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Payload::Blocks(b) => b.len(),
            Payload::Rows(r) => r.len(),
            Payload::Points(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A tagged collection of blocks plus its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub kind: Kind,
    pub params: BTreeMap<String, i64>,
    pub payload: Payload,
    pub provenance: Provenance,
}

impl Family {
    pub fn new(
        kind: Kind,
        params: &[(&str, i64)],
        payload: Payload,
        provenance: Provenance,
    ) -> Result<Self> {
        let params: BTreeMap<String, i64> =
            params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        Self::from_parts(kind, params, payload, provenance)
    }

    pub fn from_parts(
        kind: Kind,
        params: BTreeMap<String, i64>,
        payload: Payload,
        provenance: Provenance,
    ) -> Result<Self> {
        for p in kind.required_params() {
            if !params.contains_key(*p) {
                return Err(Error::InvalidFamily(format!("{kind} requires parameter `{p}`")));
            }
        }
        if let Some(extra) = params.keys().find(|k| !kind.required_params().contains(&k.as_str())) {
            return Err(Error::InvalidFamily(format!("{kind} does not take parameter `{extra}`")));
        }
        if payload.shape() != kind.payload_shape() {
            return Err(Error::InvalidFamily(format!("payload shape does not match {kind}")));
        }
        Ok(Family { kind, params, payload, provenance })
    }

    /// Convenience constructor for block families.
    pub fn from_blocks(
        kind: Kind,
        params: &[(&str, i64)],
        blocks: Vec<Block>,
        provenance: Provenance,
    ) -> Result<Self> {
        Self::new(kind, params, Payload::Blocks(blocks), provenance)
    }

    pub fn param(&self, name: &str) -> Result<i64> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidFamily(format!("{} has no parameter `{name}`", self.kind)))
    }

    pub fn blocks(&self) -> Option<&[Block]> {
        match &self.payload {
            Payload::Blocks(b) => Some(b),
            _ => None,
        }
    }

    pub fn rows(&self) -> Option<&[Vec<i64>]> {
        match &self.payload {
            Payload::Rows(r) => Some(r),
            _ => None,
        }
    }

    pub fn points(&self) -> Option<&[GridBlock]> {
        match &self.payload {
            Payload::Points(p) => Some(p),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.payload.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payload.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(x: &[i64]) -> Block {
        Block::new(x.to_vec()).unwrap()
    }

    fn sorted(m: &DiffMultiset) -> Vec<i64> {
        m.iter().flat_map(|(v, c)| std::iter::repeat_n(v, c as usize)).collect()
    }

    #[test]
    fn positive_differences() {
        let mut want = vec![3, 20, 28, 17, 25, 8];
        want.sort();
        assert_eq!(sorted(&diffs_positive(&b(&[0, 3, 20, 28]))), want);
        assert_eq!(sorted(&diffs_positive(&b(&[0, 1]))), vec![1]);
        assert_eq!(sorted(&diffs_positive(&b(&[0, 2, 5, 6]))), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn short_or_repeated_blocks_are_rejected() {
        assert!(matches!(Block::new(vec![0]), Err(Error::InvalidBlock(_))));
        assert!(matches!(Block::new(vec![0, 3, 3]), Err(Error::InvalidBlock(_))));
        assert!(matches!(Block::new(vec![-1, 3]), Err(Error::InvalidBlock(_))));
        assert_eq!(Block::new(vec![6, 0, 5, 2]).unwrap().elements(), &[0, 2, 5, 6]);
    }

    #[test]
    fn modular_differences() {
        let m = diffs_mod(&b(&[0, 1, 3, 9]), 13).unwrap();
        assert_eq!(sorted(&m), (1..13).collect::<Vec<_>>());
        assert_eq!(sorted(&diffs_mod(&b(&[0, 1]), 3).unwrap()), vec![1, 2]);
        assert_eq!(sorted(&diffs_mod(&b(&[0, 5]), 10).unwrap()), vec![5, 5]);
        assert!(matches!(diffs_mod(&b(&[0, 13]), 13), Err(Error::DegenerateBlock { .. })));
    }

    #[test]
    fn coverage_checks() {
        let fam = [b(&[0, 3, 20, 28]), b(&[0, 4, 19, 31]), b(&[0, 5, 18, 29]), b(&[0, 6, 22, 32]), b(&[0, 7, 21, 30])];
        let d = family_diffs_positive(&fam);
        assert!(coverage_equals(&d, &SteppedInterval::unit(3, 32).unwrap(), 1).holds);

        let d: DiffMultiset = [1, 2].into_iter().collect();
        let c = coverage_equals(&d, &SteppedInterval::unit(1, 3).unwrap(), 1);
        assert_eq!(c, Coverage { holds: false, witness: Some((3, 0)) });

        let d = diffs_positive(&b(&[0, 2, 5, 6]));
        assert!(coverage_equals(&d, &SteppedInterval::unit(1, 6).unwrap(), 1).holds);
    }

    #[test]
    fn intervals() {
        let iv = SteppedInterval::new(2, 2 * 4 - 2, 2).unwrap();
        assert_eq!(expand_interval(&iv).unwrap(), vec![2, 4, 6]);
        assert_eq!(expand_interval(&SteppedInterval::unit(5, 5).unwrap()).unwrap(), vec![5]);
        assert_eq!(expand_interval(&SteppedInterval::new(1, 7, 3).unwrap()).unwrap(), vec![1, 4, 7]);
        assert!(SteppedInterval::new(1, 6, 3).is_err());
        assert!(SteppedInterval::new(4, 2, 1).is_err());
        let bogus = SteppedInterval { a: 4, b: 2, c: 1 };
        assert!(matches!(expand_interval(&bogus), Err(Error::InvalidInterval { .. })));
    }

    #[test]
    fn family_params_checked() {
        let blocks = vec![b(&[0, 2, 5, 6])];
        assert!(Family::from_blocks(Kind::Pdf, &[("v", 13), ("k", 4), ("lambda", 1)], blocks.clone(), Provenance::Paper).is_ok());
        assert!(Family::from_blocks(Kind::Pdf, &[("v", 13), ("k", 4)], blocks.clone(), Provenance::Paper).is_err());
        assert!(Family::new(Kind::Asp, &[("m", 1), ("n", 4)], Payload::Blocks(blocks), Provenance::Paper).is_err());
    }

    fn arb_block() -> impl Strategy<Value = Block> {
        proptest::collection::btree_set(0i64..200, 2..7).prop_map(|s| Block::new(s.into_iter().collect::<Vec<_>>()).unwrap())
    }

    proptest! {
        #[test]
        fn modular_count_splits_into_positive_parts(block in arb_block(), v in 2i64..400) {
            prop_assume!(block.reduced(v).is_ok());
            let k = block.len() as u64;
            let m = diffs_mod(&block, v).unwrap();
            let p = diffs_positive_mod(&block, v).unwrap();
            prop_assert_eq!(m.total(), k * (k - 1));
            prop_assert_eq!(p.total(), k * (k - 1) / 2);
            for d in 1..v {
                prop_assert_eq!(m.count(d), p.count(d) + p.count(v - d));
            }
        }

        #[test]
        fn coverage_ignores_block_order(mut blocks in proptest::collection::vec(arb_block(), 1..6), seed in any::<u64>()) {
            let d1 = family_diffs_positive(&blocks);
            let n = blocks.len();
            blocks.rotate_left((seed as usize) % n);
            blocks.reverse();
            let d2 = family_diffs_positive(&blocks);
            let hi = d1.max_value().unwrap();
            let iv = SteppedInterval::unit(1, hi).unwrap();
            prop_assert_eq!(coverage_equals(&d1, &iv, 1), coverage_equals(&d2, &iv, 1));
        }
    }
}
