//! ASP(3,13) -> PDM(4,13) -> (13×13,4,1)-GDP -> (7×7,4,1)-GOC.

use diffkit::search::{search_asp3, SearchBudget};
use diffkit::{constructions, derive, verify};

fn main() {
    let r = search_asp3(13, &SearchBudget::default()).unwrap();
    println!("ASP(3,13): {} after {} nodes", r.outcome.label(), r.nodes);
    let asp = r.outcome.found().expect("an ASP(3,13) exists");
    for row in asp.rows().unwrap() {
        println!("  {row:?}");
    }

    let pdm = derive::pdm_with_baseline_row(&derive::pdm_from_asp(asp).unwrap()).unwrap();
    let pdf = constructions::pdf_4_1(13).unwrap();
    let gdp = derive::gdp_from_pdfs_pdm(&pdf, &pdf, &pdm).unwrap();
    println!("GDP: {} blocks, pass={}", gdp.len(), verify::verify_family(&gdp).unwrap().pass);

    let goc = derive::goc_from_gdp(&gdp).unwrap();
    let cert = verify::verify_family(&goc).unwrap();
    println!(
        "GOC 7×7: {} codewords (bound {}), max correlation {}, pass={}",
        goc.len(),
        cert.facts["upper_bound"],
        cert.facts["max_correlation"],
        cert.pass
    );
    for w in goc.points().unwrap().iter().take(3) {
        println!("  {:?}", w.points());
    }
}
