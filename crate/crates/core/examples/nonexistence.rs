//! Exhaustive searches: the (25,4,1)- and (37,4,1)-PDFs do not exist, the
//! (13,4,1)-PDF does. Prints machine-readable reports.

use diffkit::search::{nonexistence_sweep, SearchBudget};

fn main() {
    let budget = SearchBudget::from_env();
    let reports = nonexistence_sweep(&[(13, 4, 1), (25, 4, 1), (37, 4, 1), (49, 4, 1)], &budget).expect("admissible");
    for r in &reports {
        println!("{:<14} {:?} after {} nodes", r.instance, r.verdict, r.nodes);
    }
    println!("{}", serde_json::to_string_pretty(&reports[2]).unwrap());
}
