//! Objects derived from perfect difference families: difference triangle
//! sets, optical orthogonal codes, additive sequences of permutations,
//! perfect difference matrices, geometric difference packings, geometric
//! orthogonal codes and graceful windmill labelings.
//!
//! Every derivation checks its inputs with [`crate::verify`] first and the
//! outputs are meant to be re-verified by the caller.

use crate::diff::{Block, Family, GridBlock, Kind, Payload, Provenance};
use crate::error::{Error, Result};
use crate::verify;

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn require_pdf(f: &Family, lambda: i64) -> Result<(i64, usize)> {
    if f.kind != Kind::Pdf || f.param("lambda")? != lambda {
        return Err(precondition(format!("expected a (v,k,{lambda})-PDF, got {} {:?}", f.kind, f.params)));
    }
    if !verify::verify_family(f)?.pass {
        return Err(precondition("input PDF does not verify"));
    }
    Ok((f.param("v")?, f.param("k")? as usize))
}

fn normalized(f: &Family) -> Vec<Block> {
    f.blocks().expect("block family").iter().map(Block::normalized).collect()
}

/// The blocks of an `(mk(k+1)+1, k+1, 1)`-PDF as the rows of an `(m,k)`-DTS
/// of scope `m·C(k+1, 2)`.
pub fn dts_from_pdf(pdf: &Family) -> Result<Family> {
    let (v, kp1) = require_pdf(pdf, 1)?;
    let k = kp1 - 1;
    let per = (k * (k + 1)) as i64;
    if k < 1 || (v - 1) % per != 0 {
        return Err(precondition(format!("v={v} is not of the form m·{per}+1")));
    }
    let m = (v - 1) / per;
    Family::from_blocks(Kind::Dts, &[("m", m), ("k", k as i64)], normalized(pdf), Provenance::Derived)
}

/// A `(v,k,1)`-PDF's blocks as the codeword supports of an `(n,k,1)`-OOC,
/// for `v <= n < v + k(k-1)`.
pub fn ooc_from_pdf(pdf: &Family, n: i64) -> Result<Family> {
    let (v, k) = require_pdf(pdf, 1)?;
    let width = (k * (k - 1)) as i64;
    if n < v || n >= v + width {
        return Err(Error::OutOfRange(format!("code length n={n} must satisfy {v} <= n < {}", v + width)));
    }
    Family::from_blocks(Kind::Ooc, &[("n", n), ("k", k as i64), ("lambda", 1)], normalized(pdf), Provenance::Derived)
}

/// Codewords of an OOC family as 0/1 strings of length `n`.
pub fn ooc_bitstrings(ooc: &Family) -> Result<Vec<String>> {
    if ooc.kind != Kind::Ooc {
        return Err(precondition(format!("expected an OOC, got {}", ooc.kind)));
    }
    let n = ooc.param("n")?;
    Ok(ooc
        .blocks()
        .expect("OOC carries supports")
        .iter()
        .map(|b| (0..n).map(|i| if b.elements().binary_search(&i).is_ok() { '1' } else { '0' }).collect())
        .collect())
}

/// The ASP(2,n) over `[-r, r]`, `n = 2r+1`: the sorted basis followed by
/// `(0, 1, .., r, -r, .., -1)`.
pub fn asp2(n: i64) -> Result<Family> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::UnsupportedModulus { v: n, reason: "an ASP over an interval basis needs odd n".into() });
    }
    let r = (n - 1) / 2;
    let x1: Vec<i64> = (-r..=r).collect();
    let x2: Vec<i64> = (0..=r).chain(-r..0).collect();
    Family::new(Kind::Asp, &[("m", 2), ("n", n)], Payload::Rows(vec![x1, x2]), Provenance::Paper)
}

fn partial_sum_rows(rows: &[Vec<i64>], h: i64) -> Vec<Vec<i64>> {
    let mut acc = vec![0i64; rows[0].len()];
    rows.iter()
        .map(|r| {
            for (a, x) in acc.iter_mut().zip(r) {
                *a += x;
            }
            acc.iter().map(|a| a + h).collect()
        })
        .collect()
}

/// A homogeneous PDM(m,n) from a verified ASP(m,n) with the centered basis.
///
/// Candidates, tried in order: the partial sums `X1 + .. + Xj` shifted by
/// `h = (n-1)/2`; the same with a constant row `h` prepended. The first one
/// that passes the homogeneous PDM check is returned.
pub fn pdm_from_asp(asp: &Family) -> Result<Family> {
    let rows = match (asp.kind, asp.rows()) {
        (Kind::Asp, Some(r)) if !r.is_empty() => r,
        _ => return Err(precondition(format!("expected an ASP family, got {}", asp.kind))),
    };
    if !verify::verify_family(asp)?.pass {
        return Err(precondition("input ASP does not verify"));
    }
    let n = asp.param("n")?;
    let h = (n - 1) / 2;
    let sums = partial_sum_rows(rows, h);
    let mut with_base = vec![vec![h; n as usize]];
    with_base.extend(sums.iter().cloned());
    for cand in [sums, with_base] {
        let m = cand.len();
        if verify::verify_pdm(&cand, m, n, true)?.pass {
            return Family::new(Kind::Pdm, &[("m", m as i64), ("n", n)], Payload::Rows(cand), Provenance::Derived);
        }
    }
    Err(Error::ConstructionGap("no partial-sum candidate gives a homogeneous PDM".into()))
}

/// Appends the constant row `(n-1)/2` (zero in centered coordinates) to a
/// PDM(m,n), giving a non-homogeneous PDM(m+1,n).
pub fn pdm_with_baseline_row(pdm: &Family) -> Result<Family> {
    let rows = match (pdm.kind, pdm.rows()) {
        (Kind::Pdm, Some(r)) => r,
        _ => return Err(precondition(format!("expected a PDM family, got {}", pdm.kind))),
    };
    let (m, n) = (pdm.param("m")?, pdm.param("n")?);
    let mut out = rows.to_vec();
    out.push(vec![(n - 1) / 2; n as usize]);
    let f = Family::new(Kind::Pdm, &[("m", m + 1), ("n", n)], Payload::Rows(out), Provenance::Derived)?;
    if !verify::verify_family(&f)?.pass {
        return Err(precondition("input PDM does not verify"));
    }
    Ok(f)
}

/// A `(u1×u2,w,1)`-GDP from a `(u1,w,1)`-PDF, a `(u2,w,1)`-PDF and a
/// PDM(w,u2). Each pdf1 block `{a_i}` and PDM column `j` give
/// `{(a_i, d_ij - (u2-1)/2)}`; each pdf2 block `{b_i}` gives `{(0, b_i)}`.
pub fn gdp_from_pdfs_pdm(pdf1: &Family, pdf2: &Family, pdm: &Family) -> Result<Family> {
    let (u1, w1) = require_pdf(pdf1, 1)?;
    let (u2, w2) = require_pdf(pdf2, 1)?;
    let rows = match (pdm.kind, pdm.rows()) {
        (Kind::Pdm, Some(r)) => r,
        _ => return Err(precondition(format!("expected a PDM family, got {}", pdm.kind))),
    };
    if w1 != w2 || rows.len() != w1 || pdm.param("n")? != u2 {
        return Err(precondition(format!(
            "dimension mismatch: PDF block sizes {w1}, {w2}; PDM {}x{} but need {w1}x{u2}",
            rows.len(),
            pdm.param("n")?
        )));
    }
    if !verify::verify_family(pdm)?.pass {
        return Err(precondition("input PDM does not verify"));
    }
    let h2 = (u2 - 1) / 2;
    let mut blocks = Vec::new();
    for f in normalized(pdf1) {
        for j in 0..u2 as usize {
            let pts: Vec<(i64, i64)> = f.elements().iter().zip(rows).map(|(&a, row)| (a, row[j] - h2)).collect();
            blocks.push(GridBlock::new(pts)?);
        }
    }
    for f in normalized(pdf2) {
        blocks.push(GridBlock::new(f.elements().iter().map(|&b| (0, b)).collect::<Vec<_>>())?);
    }
    Family::new(Kind::Gdp, &[("u1", u1), ("u2", u2), ("w", w1 as i64)], Payload::Points(blocks), Provenance::Derived)
}

/// The `((u1+1)/2 × (u2+1)/2, w, 1)`-GOC of a verified GDP: each block is
/// translated so that its componentwise minimum is the origin.
pub fn goc_from_gdp(gdp: &Family) -> Result<Family> {
    let blocks = match (gdp.kind, gdp.points()) {
        (Kind::Gdp, Some(b)) => b,
        _ => return Err(precondition(format!("expected a GDP family, got {}", gdp.kind))),
    };
    let (u1, u2, w) = (gdp.param("u1")?, gdp.param("u2")?, gdp.param("w")?);
    if u1 % 2 == 0 || u2 % 2 == 0 {
        return Err(Error::UnsupportedModulus { v: if u1 % 2 == 0 { u1 } else { u2 }, reason: "GDP sides must be odd".into() });
    }
    if !verify::verify_family(gdp)?.pass {
        return Err(precondition("input GDP does not verify"));
    }
    let codewords: Vec<GridBlock> = blocks
        .iter()
        .map(|b| {
            let mx = b.points().iter().map(|p| p.0).min().unwrap_or(0);
            let my = b.points().iter().map(|p| p.1).min().unwrap_or(0);
            b.shifted(-mx, -my)
        })
        .collect();
    Family::new(
        Kind::Goc,
        &[("n1", (u1 + 1) / 2), ("n2", (u2 + 1) / 2), ("w", w)],
        Payload::Points(codewords),
        Provenance::Derived,
    )
}

/// Vertex labels of the windmill `K_4^(m)`: the shared vertex first, then
/// the other three vertices of each copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub m: usize,
    pub labels: Vec<i64>,
}

impl Labeling {
    pub fn center(&self) -> i64 {
        self.labels[0]
    }

    pub fn copy(&self, i: usize) -> [i64; 3] {
        [self.labels[3 * i + 1], self.labels[3 * i + 2], self.labels[3 * i + 3]]
    }
}

/// Labels the shared vertex 0 and copy `i` with the nonzero elements of
/// block `i` of a `(12m+1,4,1)`-PDF.
pub fn graceful_from_pdf(pdf: &Family) -> Result<Labeling> {
    let (v, k) = require_pdf(pdf, 1)?;
    if k != 4 || (v - 1) % 12 != 0 {
        return Err(precondition(format!("expected a (12m+1,4,1)-PDF, got v={v}, k={k}")));
    }
    let mut labels = vec![0];
    for b in normalized(pdf) {
        labels.extend_from_slice(&b.elements()[1..]);
    }
    Ok(Labeling { m: ((v - 1) / 12) as usize, labels })
}
