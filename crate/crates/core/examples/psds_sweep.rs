//! Sweep (m,4,3)-PSDSs and lift a few of them to (12m+13,4,1)-PDFs.

use diffkit::cli::{sweep, ParamRange, SweepKind};
use diffkit::{constructions, verify};

fn main() {
    let report = sweep(SweepKind::Psds43, Some(ParamRange::new(5, 400)), None, None, 0, false).expect("valid ranges");
    println!("psds43 m=5..400: {} passed, {} failed", report.passed, report.failed);

    for m in [5, 17, 26, 35] {
        let psds = constructions::psds_4_3(m).unwrap();
        let lifted = constructions::psds_lift_c3_to_c1(&psds).unwrap();
        let v = 12 * (m + 1) + 1;
        let as_pdf = verify::verify_pdf(lifted.blocks().unwrap(), v, 4, 1).unwrap();
        println!("m={m:>2}: first block {}, lift is a ({v},4,1)-PDF: {}", psds.blocks().unwrap()[0], as_pdf.pass);
    }
}
