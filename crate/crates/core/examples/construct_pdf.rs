//! Build a (v,4,λ)-PDF and check it.
//!
//! cargo run --example construct_pdf -- 181 6

use diffkit::{constructions, verify};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<i64>().expect("integer argument"));
    let v = args.next().unwrap_or(97);
    let lambda = args.next().unwrap_or(1);

    let pdf = match constructions::pdf_4_lambda(v, lambda) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("({v},4,{lambda})-PDF: {e}");
            std::process::exit(2);
        }
    };
    let cert = verify::verify_family(&pdf).expect("well-formed family");
    println!("({v},4,{lambda})-PDF, {} base blocks, provenance {:?}", pdf.len(), pdf.provenance);
    for b in pdf.blocks().unwrap().iter().take(8) {
        println!("  {b}");
    }
    if pdf.len() > 8 {
        println!("  ... {} more", pdf.len() - 8);
    }
    println!("verified: {} (differences 1..={} each {lambda} times)", cert.pass, (v - 1) / 2);
}
