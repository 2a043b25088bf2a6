//! Cyclic (v,4,λ)-difference families, including the classes read from a
//! (2v-1,4,λ/2)-PDF.

use diffkit::{constructions, verify, Error};

fn main() {
    for (v, lambda) in [(4, 4), (6, 12), (10, 4), (13, 4), (25, 1), (37, 1), (40, 4), (97, 12)] {
        match constructions::cdf_4_lambda(v, lambda) {
            Ok(f) => {
                let cert = verify::verify_family(&f).unwrap();
                println!("({v},4,{lambda})-CDF: {} blocks, {:?}, pass={}", f.len(), f.provenance, cert.pass);
            }
            Err(e @ Error::KnownNonexistent(_)) => println!("({v},4,{lambda})-CDF: {e}"),
            Err(e) => println!("({v},4,{lambda})-CDF: unexpected {e}"),
        }
    }
}
