//! Write a family file, tamper with it and re-verify from the text alone.

use diffkit::cli::FamilyFile;
use diffkit::{constructions, verify};

fn main() {
    let f = constructions::pdf_4_lambda(37, 2).unwrap();
    let cert = verify::verify_family(&f).unwrap();
    let text = FamilyFile::from_family(&f, Some(cert)).to_canonical_string();
    println!("{}", text.lines().take(5).collect::<Vec<_>>().join("\n"));
    println!("  ...");

    let mut file = FamilyFile::parse(&text).unwrap();
    file.blocks[0] = serde_json::json!([0, 1, 2, 3]);
    file.certificate = None;
    let tampered = file.to_family().unwrap();
    let c = verify::verify_family(&tampered).unwrap();
    println!("after editing block 0: pass={}, {} violations", c.pass, c.violations());
    for w in c.witnesses.iter().take(4) {
        println!("  {}", serde_json::to_string(w).unwrap());
    }
}
