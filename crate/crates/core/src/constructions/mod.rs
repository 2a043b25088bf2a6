//! Closed-form generators for perfect difference families, perfect systems
//! of difference sets and cyclic difference families.
//!
//! The large families share one shape. For a template of `t` coefficients
//! `(g1, g2, g3)` and shifts `(e1, e2, e3)` each template row contributes,
//! for `i = 1..=t-2`, the block
//!
//! ```text
//! {0, g1·t + i + e1, g2·t + 2i + e2, g3·t + 3i + e3}
//! ```
//!
//! and a list of sporadic blocks, linear in `t`, completes the family. The
//! templates are perfect layered difference families (see
//! [`crate::groupring`]); the shifts and sporadic blocks depend on `v` (or
//! `m`) modulo the template period and are embedded in this module.

mod data;
mod searched;
pub mod symbolic;

use std::fmt;

use crate::diff::{Block, Family, Kind, Provenance};
use crate::error::{Error, Result};
use crate::groupring::{PLDF_108_4_1, PLDF_12_4_6, PLDF_24_4_3, PLDF_36_4_2};
use crate::verify;
use symbolic::{parse_all, SymbolicBlock};

/// A table of per-row shifts, keyed by residue selector `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftTable {
    /// (9t+x,4,3)-PSDS, `x` in `0..=7`.
    Psds,
    /// (36t+6x+1,4,2)-PDF, `x` in `{-1, 1, 3}`.
    Pdf2,
    /// (24t+4x+1,4,3)-PDF, `x` in `{-2, -1, 1, 2}`.
    Pdf3,
    /// (12t+2x+1,4,6)-PDF, `x` in `{-1, 1}`.
    Pdf6,
}

/// A table of explicit blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockTable {
    /// Complete (m,4,3)-PSDSs for `5 <= m <= 16`, keyed by `m`.
    SmallPsds,
    /// Sporadic blocks of the (9t+x,4,3)-PSDS, keyed by `x`.
    PsdsSporadic,
    /// Complete (v,4,2)-PDFs, keyed by `v`.
    SmallPdf2,
    /// Sporadic blocks of the (36t+6x+1,4,2)-PDF, keyed by `x`.
    Pdf2Sporadic,
    /// Complete (v,4,3)-PDFs, keyed by `v`.
    SmallPdf3,
    /// Sporadic blocks of the (24t+4x+1,4,3)-PDF, keyed by `x`.
    Pdf3Sporadic,
    /// Sporadic blocks of the (12t+2x+1,4,6)-PDF, keyed by `x`.
    Pdf6Sporadic,
}

/// One row of a [`ShiftTable`]: `(a_j, b_j, c_j)` for every template row `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamRow {
    pub table: ShiftTable,
    pub x: i64,
    pub shifts: Vec<[i64; 3]>,
}

/// The blocks stored under one key of a [`BlockTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicSet {
    pub table: BlockTable,
    pub key: i64,
    pub blocks: Vec<SymbolicBlock>,
}

fn lookup<'a, T>(rows: &'a [(i64, T)], key: i64, what: &dyn fmt::Debug) -> Result<&'a T> {
    rows.iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::NotFound(format!("{what:?} has no entry for key {key}")))
}

/// The shifts of `table` at selector `x`.
pub fn table_row(table: ShiftTable, x: i64) -> Result<ParamRow> {
    let shifts = match table {
        ShiftTable::Psds => lookup(data::PSDS_SHIFTS, x, &table)?.to_vec(),
        ShiftTable::Pdf2 => lookup(data::PDF2_SHIFTS, x, &table)?.to_vec(),
        ShiftTable::Pdf3 => lookup(data::PDF3_SHIFTS, x, &table)?.to_vec(),
        ShiftTable::Pdf6 => lookup(data::PDF6_SHIFTS, x, &table)?.to_vec(),
    };
    Ok(ParamRow { table, x, shifts })
}

/// The blocks of `table` under `key`, entries still symbolic in `t`.
pub fn table_blocks(table: BlockTable, key: i64) -> Result<SporadicSet> {
    let rows = match table {
        BlockTable::SmallPsds => data::PSDS_SMALL,
        BlockTable::PsdsSporadic => data::PSDS_SPORADIC,
        BlockTable::SmallPdf2 => data::PDF2_SMALL,
        BlockTable::Pdf2Sporadic => data::PDF2_SPORADIC,
        BlockTable::SmallPdf3 => data::PDF3_SMALL,
        BlockTable::Pdf3Sporadic => data::PDF3_SPORADIC,
        BlockTable::Pdf6Sporadic => data::PDF6_SPORADIC,
    };
    let blocks = parse_all(lookup(rows, key, &table)?);
    Ok(SporadicSet { table, key, blocks })
}

/// A template plus shifts plus sporadic blocks; see the module docs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricScheme {
    pub template: Vec<[i64; 3]>,
    pub shifts: Vec<[i64; 3]>,
    pub sporadic: Vec<SymbolicBlock>,
}

/// Which parametric scheme to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// (9t-1,4,3)-PSDS.
    PsdsMinusOne,
    /// (9t+x,4,3)-PSDS.
    Psds(i64),
    /// (36t+6x+1,4,2)-PDF.
    Pdf2(i64),
    /// (24t+4x+1,4,3)-PDF.
    Pdf3(i64),
    /// (12t+2x+1,4,6)-PDF.
    Pdf6(i64),
}

impl ParametricScheme {
    pub fn get(scheme: Scheme) -> Result<Self> {
        let (template, shifts, sporadic): (&[[i64; 3]], Vec<[i64; 3]>, Vec<SymbolicBlock>) = match scheme {
            Scheme::PsdsMinusOne => {
                (&PLDF_108_4_1, data::PSDS_M8_SHIFTS.to_vec(), parse_all(data::PSDS_M8_SPORADIC))
            }
            Scheme::Psds(x) => (
                &PLDF_108_4_1,
                table_row(ShiftTable::Psds, x)?.shifts,
                table_blocks(BlockTable::PsdsSporadic, x)?.blocks,
            ),
            Scheme::Pdf2(x) => (
                &PLDF_36_4_2,
                table_row(ShiftTable::Pdf2, x)?.shifts,
                table_blocks(BlockTable::Pdf2Sporadic, x)?.blocks,
            ),
            Scheme::Pdf3(x) => (
                &PLDF_24_4_3,
                table_row(ShiftTable::Pdf3, x)?.shifts,
                table_blocks(BlockTable::Pdf3Sporadic, x)?.blocks,
            ),
            Scheme::Pdf6(x) => (
                &PLDF_12_4_6,
                table_row(ShiftTable::Pdf6, x)?.shifts,
                table_blocks(BlockTable::Pdf6Sporadic, x)?.blocks,
            ),
        };
        Ok(ParametricScheme { template: template.to_vec(), shifts, sporadic })
    }

    /// Parametric entries in template position order, one row per `(j, i)`.
    /// Empty when `t < 3`.
    pub fn parametric_rows(&self, t: i64) -> Vec<[i64; 4]> {
        let mut out = Vec::with_capacity(self.template.len() * (t - 2).max(0) as usize);
        for (g, e) in self.template.iter().zip(&self.shifts) {
            for i in 1..=t - 2 {
                out.push([0, g[0] * t + i + e[0], g[1] * t + 2 * i + e[1], g[2] * t + 3 * i + e[2]]);
            }
        }
        out
    }

    pub fn blocks(&self, t: i64) -> Result<Vec<Block>> {
        let mut out = Vec::with_capacity(self.template.len() * (t - 2).max(0) as usize + self.sporadic.len());
        for row in self.parametric_rows(t) {
            out.push(Block::new(row.to_vec())?);
        }
        for b in &self.sporadic {
            out.push(b.at(t)?);
        }
        Ok(out)
    }
}

/// Recovers the `t` coefficients of a scheme's first parametric block per
/// template row by finite differences in `t`, the leading 0 included.
pub fn extract_t_coefficients(scheme: Scheme) -> Result<Vec<[i64; 4]>> {
    let s = ParametricScheme::get(scheme)?;
    let (t0, t1) = (10, 11);
    let per = |t: i64| t as usize - 2;
    let (r0, r1) = (s.parametric_rows(t0), s.parametric_rows(t1));
    Ok((0..s.template.len())
        .map(|j| {
            let (a, b) = (r0[j * per(t0)], r1[j * per(t1)]);
            [b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]]
        })
        .collect())
}

fn family(kind: Kind, params: &[(&str, i64)], blocks: Vec<Block>, provenance: Provenance) -> Result<Family> {
    Family::from_blocks(kind, params, blocks, provenance)
}

fn pdf(v: i64, lambda: i64, blocks: Vec<Block>, provenance: Provenance) -> Result<Family> {
    family(Kind::Pdf, &[("v", v), ("k", 4), ("lambda", lambda)], blocks, provenance)
}

fn blocks_of(rows: &[&[i64]]) -> Vec<Block> {
    rows.iter().map(|r| Block::new(r.to_vec()).expect("embedded block is valid")).collect()
}

fn constant_blocks(set: SporadicSet) -> Result<Vec<Block>> {
    set.blocks.iter().map(|b| b.at(0)).collect()
}

/// Concatenates families; searched provenance is contagious.
fn concat(v: i64, lambda: i64, parts: &[Family]) -> Result<Family> {
    let mut blocks = Vec::new();
    let mut prov = Provenance::Paper;
    for p in parts {
        blocks.extend_from_slice(p.blocks().expect("PDF families carry blocks"));
        if p.provenance == Provenance::Searched {
            prov = Provenance::Searched;
        }
    }
    pdf(v, lambda, blocks, prov)
}

fn copies(f: &Family, n: usize) -> Vec<Family> {
    vec![f.clone(); n]
}

/// (v,3,1)-PDF for `v ≡ 1, 7 (mod 24)`.
///
/// `v = 12t+1` and `v = 12t+7` with `t` even use the two closed forms
/// (`t >= 2`, resp. `t >= 4`); `v = 7` and `v = 31` are searched and embedded.
pub fn pdf_3_1(v: i64) -> Result<Family> {
    let params = [("v", v), ("k", 3), ("lambda", 1)];
    if v < 7 || !matches!(v % 24, 1 | 7) {
        return Err(Error::Inadmissible(format!("a (v,3,1)-PDF needs v ≡ 1 or 7 (mod 24), got v={v}")));
    }
    let b = |x: [i64; 3]| Block::new(x.to_vec());
    let mut blocks = Vec::new();
    if v % 24 == 1 {
        let t = (v - 1) / 12;
        for i in 1..t {
            if 2 * i != t {
                blocks.push(b([0, 3 * t + i, 2 * i])?);
            }
        }
        for i in 0..t {
            blocks.push(b([0, 5 * t + i, 2 * i + 1])?);
        }
        blocks.push(b([0, t, 3 * t])?);
        blocks.push(b([0, 5 * t / 2, 6 * t])?);
        return family(Kind::Pdf, &params, blocks, Provenance::Paper);
    }
    match v {
        7 => return family(Kind::Pdf, &params, blocks_of(searched::PDF_7_3_1), Provenance::Searched),
        31 => return family(Kind::Pdf, &params, blocks_of(searched::PDF_31_3_1), Provenance::Searched),
        _ => {}
    }
    let t = (v - 7) / 12;
    for i in 2..=t - 2 {
        if 2 * i != t {
            blocks.push(b([0, 3 * t + i + 1, 2 * i])?);
        }
    }
    for i in 1..=t - 2 {
        blocks.push(b([0, 5 * t + i + 3, 2 * i + 1])?);
    }
    for s in [
        [0, 1, 2 * t - 1],
        [0, 2, 4 * t + 2],
        [0, 2 * t, 4 * t + 1],
        [0, 2 * t + 2, 5 * t + 2],
        [0, 5 * t / 2 + 1, 6 * t + 2],
        [0, t, 5 * t + 3],
        [0, 3 * t + 1, 6 * t + 3],
    ] {
        blocks.push(b(s)?);
    }
    family(Kind::Pdf, &params, blocks, Provenance::Paper)
}

/// (m,4,3)-PSDS: `m` blocks whose positive differences are `[3, 6m+2]`.
pub fn psds_4_3(m: i64) -> Result<Family> {
    if m < 5 {
        return Err(Error::Inadmissible(format!("an (m,4,3)-PSDS needs m >= 5, got m={m}")));
    }
    let blocks = if m <= 16 {
        constant_blocks(table_blocks(BlockTable::SmallPsds, m)?)?
    } else if m % 9 == 8 {
        ParametricScheme::get(Scheme::PsdsMinusOne)?.blocks((m + 1) / 9)?
    } else {
        ParametricScheme::get(Scheme::Psds(m % 9))?.blocks(m / 9)?
    };
    family(Kind::Psds, &[("m", m), ("k", 4), ("c", 3)], blocks, Provenance::Paper)
}

/// Adds `{0, 1, 6m+4, 6m+6}` to a verified (m,4,3)-PSDS, giving an
/// (m+1,4,1)-PSDS.
pub fn psds_lift_c3_to_c1(psds: &Family) -> Result<Family> {
    let ok_shape = psds.kind == Kind::Psds && psds.param("c").ok() == Some(3) && psds.param("k").ok() == Some(4);
    if !ok_shape {
        return Err(Error::Precondition(format!(
            "lift needs an (m,4,3)-PSDS, got {} with params {:?}",
            psds.kind, psds.params
        )));
    }
    let cert = verify::verify_family(psds)?;
    if !cert.pass {
        return Err(Error::Precondition("input (m,4,3)-PSDS does not verify".into()));
    }
    let m = psds.param("m")?;
    let mut blocks = psds.blocks().expect("PSDS carries blocks").to_vec();
    blocks.push(Block::new(vec![0, 1, 6 * m + 4, 6 * m + 6])?);
    family(Kind::Psds, &[("m", m + 1), ("k", 4), ("c", 1)], blocks, psds.provenance)
}

fn need_pdf_order(v: i64, modulus: i64, lambda: i64) -> Result<()> {
    if v % modulus != 1 || v < 13 {
        return Err(Error::Inadmissible(format!(
            "a (v,4,{lambda})-PDF from this generator needs v ≡ 1 (mod {modulus}) and v >= 13, got v={v}"
        )));
    }
    Ok(())
}

/// (v,4,1)-PDF for `v ≡ 1 (mod 12)`, `v >= 13`, `v ∉ {25, 37}`.
pub fn pdf_4_1(v: i64) -> Result<Family> {
    need_pdf_order(v, 12, 1)?;
    match v {
        25 | 37 => Err(Error::KnownNonexistent(format!("no ({v},4,1)-PDF exists"))),
        13 => pdf(13, 1, blocks_of(&[&[0, 2, 5, 6]]), Provenance::Paper),
        49 => pdf(49, 1, blocks_of(searched::PDF_49_4_1), Provenance::Searched),
        61 => pdf(61, 1, blocks_of(searched::PDF_61_4_1), Provenance::Searched),
        _ => {
            let lifted = psds_lift_c3_to_c1(&psds_4_3((v - 13) / 12)?)?;
            pdf(v, 1, lifted.blocks().expect("PSDS carries blocks").to_vec(), Provenance::Paper)
        }
    }
}

fn selector(v: i64, period: i64, step: i64, xs: &[i64]) -> Option<(i64, i64)> {
    xs.iter()
        .find(|&&x| (v - 1 - step * x).rem_euclid(period) == 0)
        .map(|&x| ((v - 1 - step * x) / period, x))
}

/// (v,4,2)-PDF for `v ≡ 1 (mod 6)`, `v >= 13`.
pub fn pdf_4_2(v: i64) -> Result<Family> {
    need_pdf_order(v, 6, 2)?;
    if matches!(v, 19 | 25 | 31 | 37 | 43 | 55) {
        return pdf(v, 2, constant_blocks(table_blocks(BlockTable::SmallPdf2, v)?)?, Provenance::Paper);
    }
    if v % 12 == 1 {
        let base = pdf_4_1(v)?;
        return concat(v, 2, &copies(&base, 2));
    }
    let (t, x) = selector(v, 36, 6, &[-1, 1, 3]).expect("v ≡ 7 (mod 12) always has a selector");
    pdf(v, 2, ParametricScheme::get(Scheme::Pdf2(x))?.blocks(t)?, Provenance::Paper)
}

/// (v,4,3)-PDF for `v ≡ 1 (mod 4)`, `v >= 13`.
pub fn pdf_4_3(v: i64) -> Result<Family> {
    need_pdf_order(v, 4, 3)?;
    if matches!(v, 17 | 21 | 25 | 29 | 33 | 37) {
        return pdf(v, 3, constant_blocks(table_blocks(BlockTable::SmallPdf3, v)?)?, Provenance::Paper);
    }
    if v % 12 == 1 {
        let base = pdf_4_1(v)?;
        return concat(v, 3, &copies(&base, 3));
    }
    let (t, x) = selector(v, 24, 4, &[-2, -1, 1, 2]).expect("v ≡ 5, 9 (mod 12) always has a selector");
    pdf(v, 3, ParametricScheme::get(Scheme::Pdf3(x))?.blocks(t)?, Provenance::Paper)
}

/// (v,4,6)-PDF for odd `v >= 13`.
pub fn pdf_4_6(v: i64) -> Result<Family> {
    need_pdf_order(v, 2, 6)?;
    if v % 4 == 1 {
        return concat(v, 6, &copies(&pdf_4_3(v)?, 2));
    }
    if v % 12 == 7 {
        return concat(v, 6, &copies(&pdf_4_2(v)?, 3));
    }
    if v == 15 {
        let rows: &[&[i64]] =
            &[&[0, 1, 4, 6], &[0, 2, 5, 7], &[0, 2, 6, 7], &[0, 2, 6, 7], &[0, 2, 6, 7], &[0, 3, 6, 7], &[0, 3, 6, 7]];
        return pdf(15, 6, blocks_of(rows), Provenance::Paper);
    }
    let (t, x) = selector(v, 12, 2, &[-1, 1]).expect("v ≡ 3, 11 (mod 12) always has a selector");
    pdf(v, 6, ParametricScheme::get(Scheme::Pdf6(x))?.blocks(t)?, Provenance::Paper)
}

/// Checks the necessary conditions for a (v,4,λ)-PDF.
pub fn pdf_4_admissible(v: i64, lambda: i64) -> Result<()> {
    if lambda < 1 {
        return Err(Error::Inadmissible(format!("λ must be positive, got λ={lambda}")));
    }
    if v % 2 == 0 {
        return Err(Error::Inadmissible(format!("a perfect difference family needs odd v, got v={v}")));
    }
    if v < 13 {
        return Err(Error::Inadmissible(format!("a (v,4,λ)-PDF needs v >= 13, got v={v}")));
    }
    if lambda * (v - 1) % 12 != 0 {
        return Err(Error::Inadmissible(format!("a (v,4,λ)-PDF needs λ(v-1) ≡ 0 (mod 12), got v={v}, λ={lambda}")));
    }
    if lambda == 1 && matches!(v, 25 | 37) {
        return Err(Error::KnownNonexistent(format!("no ({v},4,1)-PDF exists")));
    }
    Ok(())
}

/// (v,4,λ)-PDF for every admissible `(v, λ)`, composed by `λ mod 6`.
pub fn pdf_4_lambda(v: i64, lambda: i64) -> Result<Family> {
    pdf_4_admissible(v, lambda)?;
    let n = |d: i64| (lambda / d) as usize;
    let parts = match lambda % 6 {
        1 | 5 if matches!(v, 25 | 37) => {
            let mut p = vec![pdf_4_3(v)?];
            p.extend(copies(&pdf_4_2(v)?, ((lambda - 3) / 2) as usize));
            p
        }
        1 | 5 => copies(&pdf_4_1(v)?, n(1)),
        2 | 4 => copies(&pdf_4_2(v)?, n(2)),
        3 => copies(&pdf_4_3(v)?, n(3)),
        _ => copies(&pdf_4_6(v)?, n(6)),
    };
    concat(v, lambda, &parts)
}

/// (v,4,λ)-CDF for every admissible `(v, λ)`.
///
/// Small `v` use repeated blocks. Otherwise odd `λ` and `λ ≡ 2, 10 (mod 12)`
/// reuse a (v,4,λ)-PDF; the remaining classes read a (2v-1,4,λ/2)-PDF in `Z_v`.
pub fn cdf_4_lambda(v: i64, lambda: i64) -> Result<Family> {
    if lambda < 1 || v < 4 || lambda * (v - 1) % 12 != 0 {
        return Err(Error::Inadmissible(format!(
            "a (v,4,λ)-CDF needs λ >= 1, v >= 4 and λ(v-1) ≡ 0 (mod 12), got v={v}, λ={lambda}"
        )));
    }
    if (v, lambda) == (25, 1) {
        return Err(Error::KnownNonexistent("no (25,4,1)-CDF exists".into()));
    }
    let params = [("v", v), ("k", 4), ("lambda", lambda)];
    let repeat = |base: &[&[i64]], per: i64, prov: Provenance| {
        let blocks: Vec<Block> = (0..lambda / per).flat_map(|_| blocks_of(base)).collect();
        family(Kind::Cdf, &params, blocks, prov)
    };
    match v {
        4 => return repeat(&[&[0, 1, 2, 3]], 4, Provenance::Paper),
        5 => return repeat(&[&[0, 1, 2, 4]], 3, Provenance::Paper),
        7 => return repeat(&[&[0, 1, 2, 4]], 2, Provenance::Paper),
        9 => return repeat(&[&[0, 1, 2, 5], &[0, 1, 3, 7]], 3, Provenance::Paper),
        6 => return repeat(searched::CDF_6_4_12, 12, Provenance::Searched),
        37 if lambda == 1 => return family(Kind::Cdf, &params, blocks_of(searched::CDF_37_4_1), Provenance::Searched),
        _ => {}
    }
    let source = if v >= 13 && (lambda % 2 == 1 || matches!(lambda % 12, 2 | 10)) {
        pdf_4_lambda(v, lambda)?
    } else if v >= 7 && lambda % 2 == 0 {
        pdf_4_lambda(2 * v - 1, lambda / 2)?
    } else {
        return Err(Error::ConstructionGap(format!("no (v,4,λ)-CDF route for v={v}, λ={lambda}")));
    };
    let blocks = source.blocks().expect("PDF carries blocks").to_vec();
    family(Kind::Cdf, &params, blocks, source.provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::{diffs_positive, family_diffs_positive, SteppedInterval};
    use crate::groupring::{verify_pldf, with_leading_zero, OrderedBlock};

    fn elements(f: &Family) -> Vec<Vec<i64>> {
        f.blocks().unwrap().iter().map(|b| b.elements().to_vec()).collect()
    }

    fn check(f: &Family) {
        let c = verify::verify_family(f).unwrap();
        assert!(c.pass, "{} {:?}: {:?}", f.kind, f.params, c.witnesses.first());
    }

    #[test]
    fn k3_examples() {
        let f = pdf_3_1(25).unwrap();
        assert_eq!(elements(&f), vec![vec![0, 1, 10], vec![0, 3, 11], vec![0, 2, 6], vec![0, 5, 12]]);
        check(&f);
        let f = pdf_3_1(49).unwrap();
        assert_eq!(f.len(), 8);
        check(&f);
        assert!(matches!(pdf_3_1(13), Err(Error::Inadmissible(_))));
        for v in [7, 31, 55, 79] {
            check(&pdf_3_1(v).unwrap());
        }
    }

    #[test]
    fn psds_examples() {
        let f = psds_4_3(5).unwrap();
        assert_eq!(elements(&f)[0], vec![0, 3, 20, 28]);
        let d = family_diffs_positive(f.blocks().unwrap());
        assert!(crate::diff::coverage_equals(&d, &SteppedInterval::unit(3, 32).unwrap(), 1).holds);

        let f = psds_4_3(17).unwrap();
        assert_eq!(f.len(), 17);
        assert!(elements(&f).contains(&vec![0, 7, 29, 69]));
        check(&f);

        let f = psds_4_3(18).unwrap();
        assert_eq!(f.len(), 18);
        let d = family_diffs_positive(f.blocks().unwrap());
        assert!(crate::diff::coverage_equals(&d, &SteppedInterval::unit(3, 110).unwrap(), 1).holds);
        assert!(matches!(psds_4_3(4), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn lift_examples() {
        let lifted = psds_lift_c3_to_c1(&psds_4_3(5).unwrap()).unwrap();
        assert_eq!(elements(&lifted).last().unwrap(), &vec![0, 1, 34, 36]);
        let added = diffs_positive(lifted.blocks().unwrap().last().unwrap());
        assert_eq!(added.iter().map(|(d, _)| d).collect::<Vec<_>>(), vec![1, 2, 33, 34, 35, 36]);
        check(&lifted);
        let lifted = psds_lift_c3_to_c1(&psds_4_3(8).unwrap()).unwrap();
        assert_eq!(elements(&lifted).last().unwrap(), &vec![0, 1, 52, 54]);
        assert!(matches!(psds_lift_c3_to_c1(&lifted), Err(Error::Precondition(_))));
    }

    #[test]
    fn pdf_examples() {
        assert_eq!(elements(&pdf_4_1(13).unwrap()), vec![vec![0, 2, 5, 6]]);
        assert!(matches!(pdf_4_1(25), Err(Error::KnownNonexistent(_))));
        assert!(matches!(pdf_4_1(37), Err(Error::KnownNonexistent(_))));
        assert!(matches!(pdf_4_1(27), Err(Error::Inadmissible(_))));
        let f = pdf_4_1(73).unwrap();
        assert_eq!(f.len(), 6);
        check(&f);
        let f = pdf_4_1(49).unwrap();
        assert_eq!((f.len(), f.provenance), (4, Provenance::Searched));
        check(&f);
        check(&pdf_4_1(61).unwrap());

        assert_eq!(elements(&pdf_4_2(19).unwrap()), vec![vec![0, 1, 4, 9], vec![0, 2, 6, 9], vec![0, 2, 7, 8]]);
        let f = pdf_4_3(29).unwrap();
        assert_eq!(f.len(), 7);
        check(&f);
        let f = pdf_4_6(15).unwrap();
        assert_eq!(f.len(), 7);
        check(&f);
        check(&pdf_4_2(55).unwrap());
    }

    #[test]
    fn lambda_examples() {
        let f = pdf_4_lambda(25, 5).unwrap();
        assert_eq!(f.len(), 10);
        check(&f);
        let f = pdf_4_lambda(13, 7).unwrap();
        assert_eq!(elements(&f), vec![vec![0, 2, 5, 6]; 7]);
        check(&f);
        assert!(matches!(pdf_4_lambda(25, 1), Err(Error::KnownNonexistent(_))));
        assert!(matches!(pdf_4_lambda(15, 1), Err(Error::Inadmissible(_))));
        assert!(matches!(pdf_4_lambda(11, 6), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn cdf_examples() {
        assert_eq!(elements(&cdf_4_lambda(7, 2).unwrap()), vec![vec![0, 1, 2, 4]]);
        assert_eq!(elements(&cdf_4_lambda(9, 3).unwrap()), vec![vec![0, 1, 2, 5], vec![0, 1, 3, 7]]);
        let f = cdf_4_lambda(13, 6).unwrap();
        assert_eq!(elements(&f), elements(&pdf_4_3(25).unwrap()));
        check(&f);
        assert!(matches!(cdf_4_lambda(25, 1), Err(Error::KnownNonexistent(_))));
        check(&cdf_4_lambda(37, 1).unwrap());
        check(&cdf_4_lambda(6, 12).unwrap());
        assert!(matches!(cdf_4_lambda(6, 6), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn table_lookups() {
        let r = table_row(ShiftTable::Pdf2, -1).unwrap();
        assert_eq!(r.shifts[0], [1, 0, 0]);
        assert!(matches!(table_row(ShiftTable::Pdf2, 0), Err(Error::NotFound(_))));
        let s = table_blocks(BlockTable::Pdf2Sporadic, 1).unwrap();
        assert_eq!(s.blocks.len(), 13);
        assert_eq!(s.blocks[0].to_string(), "{0, 18t+2, 4t+4, 7t}");
    }

    #[test]
    fn templates_are_pldfs() {
        for (scheme, v, lambda) in [
            (Scheme::PsdsMinusOne, 108, 1),
            (Scheme::Psds(3), 108, 1),
            (Scheme::Pdf2(1), 36, 2),
            (Scheme::Pdf3(-2), 24, 3),
            (Scheme::Pdf6(1), 12, 6),
        ] {
            let rows = extract_t_coefficients(scheme).unwrap();
            let blocks: Vec<OrderedBlock> = rows.iter().map(|r| OrderedBlock::new(r.to_vec(), v).unwrap()).collect();
            assert!(verify_pldf(&blocks, v, 4, lambda).unwrap().pass, "{scheme:?}");
            let shipped: Vec<[i64; 3]> = rows.iter().map(|r| [r[1], r[2], r[3]]).collect();
            assert_eq!(with_leading_zero(&shipped, v), blocks);
        }
    }

    #[test]
    fn deterministic_output() {
        assert_eq!(pdf_4_lambda(301, 6).unwrap(), pdf_4_lambda(301, 6).unwrap());
    }
}
