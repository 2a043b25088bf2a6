//! The layered families behind the parametric generators, checked with the
//! fractional difference calculus over Q[Z_v].

use diffkit::constructions::{extract_t_coefficients, Scheme};
use diffkit::groupring::{self, OrderedBlock};

fn main() {
    for inst in groupring::builtin_layered() {
        let cert = inst.verify();
        println!("{:<16} blocks={:<3} scale={} pass={}", inst.name, inst.blocks.len(), cert.facts["scale"], cert.pass);
    }

    let ldf = groupring::lookup_layered("(72,4,1)-LDF").unwrap();
    let perfect = groupring::verify_pldf(&ldf.blocks, 72, 4, 1).unwrap();
    println!("(72,4,1)-LDF read as a PLDF: pass={} ({} violations)", perfect.pass, perfect.violations());

    // The t-coefficients of a generator are themselves a PLDF.
    let rows = extract_t_coefficients(Scheme::Pdf3(1)).unwrap();
    let blocks: Vec<OrderedBlock> = rows.iter().map(|r| OrderedBlock::new(r.to_vec(), 24).unwrap()).collect();
    println!("t-coefficients of the λ=3 generator: {rows:?}");
    println!("  (24,4,3)-PLDF: {}", groupring::verify_pldf(&blocks, 24, 4, 3).unwrap().pass);

    let e = groupring::delta_star_plus(&blocks[0], 24).unwrap();
    let support: Vec<String> = groupring::support(&e).iter().map(|(r, c)| format!("{r}:{c}/{}", e.scale())).collect();
    println!("  Δ*+ of the first block: {}", support.join(" "));
}
