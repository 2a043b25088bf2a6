//! Difference triangle sets, optical orthogonal codes and graceful windmill
//! labelings from (v,4,1)-PDFs.

use diffkit::{constructions, derive, verify};

fn main() {
    let pdf = constructions::pdf_4_1(12 * 8 + 1).unwrap();
    let dts = derive::dts_from_pdf(&pdf).unwrap();
    let cert = verify::verify_family(&dts).unwrap();
    println!("(8,3)-DTS scope {} (minimum {}):", cert.facts["scope"], cert.facts["minimum_scope"]);
    for row in dts.blocks().unwrap() {
        println!("  {row}");
    }

    let p49 = constructions::pdf_4_1(49).unwrap();
    for n in [49, 55, 60] {
        let ooc = derive::ooc_from_pdf(&p49, n).unwrap();
        let c = verify::verify_family(&ooc).unwrap();
        println!("({n},4,1)-OOC: {} codewords, J-optimal {}", ooc.len(), c.facts["j_optimal"]);
    }
    for w in derive::ooc_bitstrings(&derive::ooc_from_pdf(&p49, 49).unwrap()).unwrap() {
        println!("  {w}");
    }

    let l = derive::graceful_from_pdf(&constructions::pdf_4_1(73).unwrap()).unwrap();
    let c = verify::verify_graceful_windmill(&l.labels, l.m).unwrap();
    println!("K4^({}) center {} copies {:?}, graceful={}", l.m, l.center(), (0..l.m).map(|i| l.copy(i)).collect::<Vec<_>>(), c.pass);
}
