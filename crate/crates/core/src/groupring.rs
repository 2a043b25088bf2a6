//! Fractional difference calculus over `Q[Z_v]`.
//!
//! For an ordered block `B = (b_0, .., b_{k-1})` every pair `s1 < s2` with gap
//! `g = s2 - s1` spreads mass `1/g` over a run of `g` consecutive residues:
//!
//! * `Δ*B` takes both the forward run `b_{s2} - b_{s1} + ℓ` and the reverse run
//!   `b_{s1} - b_{s2} - ℓ - 1`, `0 <= ℓ < g`;
//! * `Δ*+B` takes only the forward run when `b_{s1} <= b_{s2}` and only the
//!   reverse run otherwise.
//!
//! A list of ordered blocks is a layered difference family (LDF) when the
//! `Δ*` sums to `λ` on every residue, and a perfect one (PLDF, `v` even) when
//! the `Δ*+` sums to `λ` on `0..v/2` and vanishes elsewhere. The `t`
//! coefficients of the parametric generators in [`crate::constructions`] are
//! PLDFs; [`builtin_layered`] ships them together with the two small LDFs.
//!
//! Coefficients are integers scaled by `L = lcm(1, .., k-1)`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::verify::{Certificate, Expect, Witness};

/// An element of `Q[Z_v]`, coefficients stored as multiples of `1/scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    scale: i64,
    coeff: Vec<i64>,
}

impl GroupRingElem {
    pub fn zero(v: usize, scale: i64) -> Self {
        assert!(v >= 1 && scale >= 1);
        GroupRingElem { scale, coeff: vec![0; v] }
    }

    pub fn v(&self) -> usize {
        self.coeff.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Coefficient at `r` times [`scale`](Self::scale).
    pub fn scaled(&self, r: i64) -> i64 {
        self.coeff[r.rem_euclid(self.v() as i64) as usize]
    }

    /// Coefficient at `r` as a reduced fraction `(num, den)`.
    pub fn coefficient(&self, r: i64) -> (i64, i64) {
        let n = self.scaled(r);
        let g = gcd(n.abs(), self.scale).max(1);
        (n / g, self.scale / g)
    }

    pub fn scaled_coeffs(&self) -> &[i64] {
        &self.coeff
    }

    /// Total coefficient mass times the scale.
    pub fn scaled_mass(&self) -> i64 {
        self.coeff.iter().sum()
    }

    fn add_scaled(&mut self, r: i64, amount: i64) {
        let v = self.v() as i64;
        self.coeff[r.rem_euclid(v) as usize] += amount;
    }

    /// `self += other`; both must share `v` and scale.
    pub fn add_assign(&mut self, other: &GroupRingElem) {
        assert_eq!(self.v(), other.v(), "group ring elements over different moduli");
        assert_eq!(self.scale, other.scale, "group ring elements with different scales");
        for (a, b) in self.coeff.iter_mut().zip(&other.coeff) {
            *a += b;
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `lcm(1, .., k-1)`: every pair gap divides it.
pub fn scale_for(k: usize) -> i64 {
    (1..k.max(2) as i64).fold(1, |l, g| l / gcd(l, g) * g)
}

/// An ordered k-tuple of residues; repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedBlock(Vec<i64>);

impl OrderedBlock {
    /// Reduces every entry into `[0, v)`.
    pub fn new(entries: impl Into<Vec<i64>>, v: i64) -> Result<Self> {
        let e: Vec<i64> = entries.into();
        if v < 1 {
            return Err(Error::UnsupportedModulus { v, reason: "modulus must be positive".into() });
        }
        if e.len() < 2 {
            return Err(Error::InvalidBlock(format!("ordered block {e:?} has fewer than two entries")));
        }
        Ok(OrderedBlock(e.into_iter().map(|x| x.rem_euclid(v)).collect()))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_modulus(v: i64) -> Result<()> {
    if v < 2 {
        return Err(Error::UnsupportedModulus { v, reason: "modulus must be at least 2".into() });
    }
    Ok(())
}

fn accumulate(acc: &mut GroupRingElem, b: &OrderedBlock, v: i64, plus: bool) {
    let e: Vec<i64> = b.entries().iter().map(|x| x.rem_euclid(v)).collect();
    for s2 in 1..e.len() {
        for s1 in 0..s2 {
            let g = (s2 - s1) as i64;
            let w = acc.scale / g;
            let forward = !plus || e[s1] <= e[s2];
            let reverse = !plus || e[s1] > e[s2];
            for l in 0..g {
                if forward {
                    acc.add_scaled(e[s2] - e[s1] + l, w);
                }
                if reverse {
                    acc.add_scaled(e[s1] - e[s2] - l - 1, w);
                }
            }
        }
    }
}

/// `Δ*B` over `Z_v`, scaled by `lcm(1, .., k-1)`.
pub fn delta_star(b: &OrderedBlock, v: i64) -> Result<GroupRingElem> {
    check_modulus(v)?;
    let mut acc = GroupRingElem::zero(v as usize, scale_for(b.len()));
    accumulate(&mut acc, b, v, false);
    Ok(acc)
}

/// `Δ*+B` over `Z_v`; `v` must be even. Equal entries take the forward run.
pub fn delta_star_plus(b: &OrderedBlock, v: i64) -> Result<GroupRingElem> {
    check_even(v)?;
    let mut acc = GroupRingElem::zero(v as usize, scale_for(b.len()));
    accumulate(&mut acc, b, v, true);
    Ok(acc)
}

fn check_even(v: i64) -> Result<()> {
    check_modulus(v)?;
    if v % 2 != 0 {
        return Err(Error::UnsupportedModulus { v, reason: "perfect layered families need even v".into() });
    }
    Ok(())
}

fn check_shape(blocks: &[OrderedBlock], k: usize) -> Result<()> {
    if let Some(b) = blocks.iter().find(|b| b.len() != k) {
        return Err(Error::InvalidFamily(format!(
            "ordered block {:?} has length {}, expected {k}",
            b.entries(),
            b.len()
        )));
    }
    Ok(())
}

fn layered_certificate(
    name: &str,
    blocks: &[OrderedBlock],
    v: i64,
    k: usize,
    lambda: i64,
    plus: bool,
) -> Certificate {
    let scale = scale_for(k);
    let mut sum = GroupRingElem::zero(v as usize, scale);
    for b in blocks {
        accumulate(&mut sum, b, v, plus);
    }
    let mut cert = Certificate::new(name, &[("v", v), ("k", k as i64), ("lambda", lambda)]);
    for r in 0..v {
        let want = if !plus || r < v / 2 { lambda * scale } else { 0 };
        let got = sum.scaled(r);
        cert.coverage.insert(r, got);
        if got != want {
            cert.push(Witness {
                at: vec![r],
                expected: Expect::Exactly(want),
                actual: got,
                detail: format!("scaled mass at residue {r} (scale {scale})"),
            });
        }
    }
    let pairs = (k * (k - 1)) as i64;
    let law = lambda * v;
    cert.fact("scale", scale);
    cert.fact("blocks", blocks.len() as i64);
    cert.fact("block_count_law", law % pairs == 0 && blocks.len() as i64 == law / pairs);
    cert.finish()
}

/// Checks `Σ Δ*B = λ Σ_{g ∈ Z_v} g`.
pub fn verify_ldf(blocks: &[OrderedBlock], v: i64, k: usize, lambda: i64) -> Result<Certificate> {
    check_modulus(v)?;
    check_shape(blocks, k)?;
    Ok(layered_certificate("LDF", blocks, v, k, lambda, false))
}

/// Checks `Σ Δ*+B = λ Σ_{g=0}^{v/2-1} g`.
pub fn verify_pldf(blocks: &[OrderedBlock], v: i64, k: usize, lambda: i64) -> Result<Certificate> {
    check_even(v)?;
    check_shape(blocks, k)?;
    Ok(layered_certificate("PLDF", blocks, v, k, lambda, true))
}

/// A named layered family shipped with the crate.
#[derive(Debug, Clone)]
pub struct LayeredInstance {
    pub name: &'static str,
    pub v: i64,
    pub k: usize,
    pub lambda: i64,
    pub perfect: bool,
    pub blocks: Vec<OrderedBlock>,
}

impl LayeredInstance {
    pub fn verify(&self) -> Certificate {
        let r = if self.perfect {
            verify_pldf(&self.blocks, self.v, self.k, self.lambda)
        } else {
            verify_ldf(&self.blocks, self.v, self.k, self.lambda)
        };
        r.expect("builtin layered instances have valid shape")
    }
}

/// `t` coefficients of the (9t+x,4,3)-PSDS generator, positions 1..3.
pub(crate) const PLDF_108_4_1: [[i64; 3]; 9] = [
    [18, 42, 0],
    [50, 30, 0],
    [53, 45, 0],
    [34, 25, 20],
    [38, 48, 20],
    [47, 32, 20],
    [3, 42, 35],
    [5, 45, 35],
    [23, 51, 35],
];

/// `t` coefficients of the (36t+6x+1,4,2)-PDF generator.
pub(crate) const PLDF_36_4_2: [[i64; 3]; 6] =
    [[0, 3, 15], [0, 6, 15], [11, 1, 15], [10, 1, 11], [14, 6, 11], [17, 3, 11]];

/// `t` coefficients of the (24t+4x+1,4,3)-PDF generator.
pub(crate) const PLDF_24_4_3: [[i64; 3]; 6] =
    [[0, 8, 0], [8, 10, 0], [10, 4, 0], [9, 10, 3], [11, 0, 3], [11, 6, 3]];

/// `t` coefficients of the (12t+2x+1,4,6)-PDF generator.
pub(crate) const PLDF_12_4_6: [[i64; 3]; 6] =
    [[2, 3, 0], [5, 2, 0], [5, 4, 0], [0, 4, 3], [5, 0, 3], [5, 2, 3]];

const LDF_12_3_1: [[i64; 3]; 2] = [[0, 3, 0], [0, 5, 0]];

const LDF_72_4_1: [[i64; 4]; 6] = [
    [0, 43, 31, 8],
    [0, 23, 5, 8],
    [0, 41, 25, 8],
    [0, 35, 5, 0],
    [0, 47, 19, 0],
    [0, 21, 13, 0],
];

fn ordered(rows: &[&[i64]], v: i64) -> Vec<OrderedBlock> {
    rows.iter().map(|r| OrderedBlock::new(r.to_vec(), v).unwrap()).collect()
}

/// Prepends the implicit leading 0 to coefficient triples.
pub(crate) fn with_leading_zero(rows: &[[i64; 3]], v: i64) -> Vec<OrderedBlock> {
    rows.iter().map(|r| OrderedBlock::new(vec![0, r[0], r[1], r[2]], v).unwrap()).collect()
}

fn build_catalog() -> Vec<LayeredInstance> {
    let rows3: Vec<&[i64]> = LDF_12_3_1.iter().map(|r| &r[..]).collect();
    let rows4: Vec<&[i64]> = LDF_72_4_1.iter().map(|r| &r[..]).collect();
    let catalog = vec![
        LayeredInstance { name: "(12,3,1)-LDF", v: 12, k: 3, lambda: 1, perfect: false, blocks: ordered(&rows3, 12) },
        LayeredInstance { name: "(72,4,1)-LDF", v: 72, k: 4, lambda: 1, perfect: false, blocks: ordered(&rows4, 72) },
        LayeredInstance { name: "(108,4,1)-PLDF", v: 108, k: 4, lambda: 1, perfect: true, blocks: with_leading_zero(&PLDF_108_4_1, 108) },
        LayeredInstance { name: "(36,4,2)-PLDF", v: 36, k: 4, lambda: 2, perfect: true, blocks: with_leading_zero(&PLDF_36_4_2, 36) },
        LayeredInstance { name: "(24,4,3)-PLDF", v: 24, k: 4, lambda: 3, perfect: true, blocks: with_leading_zero(&PLDF_24_4_3, 24) },
        LayeredInstance { name: "(12,4,6)-PLDF", v: 12, k: 4, lambda: 6, perfect: true, blocks: with_leading_zero(&PLDF_12_4_6, 12) },
    ];
    for inst in &catalog {
        let cert = inst.verify();
        assert!(
            cert.pass,
            "data corruption: builtin layered family {} fails its self-check: {:?}",
            inst.name,
            cert.witnesses.first()
        );
    }
    catalog
}

/// The six shipped layered families, verified on first access.
pub fn builtin_layered() -> &'static [LayeredInstance] {
    static CATALOG: OnceLock<Vec<LayeredInstance>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Looks up a builtin family by its name, e.g. `"(24,4,3)-PLDF"`.
pub fn lookup_layered(name: &str) -> Result<&'static LayeredInstance> {
    builtin_layered()
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::NotFound(format!("no builtin layered family named {name:?}")))
}

/// Sparse view `residue -> scaled coefficient`, zero entries dropped.
pub fn support(e: &GroupRingElem) -> BTreeMap<i64, i64> {
    e.scaled_coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(r, &c)| (r as i64, c))
        .collect()
}
