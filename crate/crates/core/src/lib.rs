//! Perfect difference families, perfect systems of difference sets and
//! layered difference families.
//!
//! The crate is organised bottom-up:
//!
//! * [`diff`] holds blocks, difference multisets, stepped intervals and the
//!   `Δ`, `Δ+` operators that everything else builds on.
//! * [`groupring`] evaluates the fractional difference calculus `Δ*` / `Δ*+`
//!   over `Q[Z_v]` and ships the layered families used as coefficient
//!   templates.
//! * [`constructions`] instantiates the closed-form generators: `(v,3,1)`-PDFs,
//!   `(m,4,3)`-PSDSs, `(v,4,λ)`-PDFs for every admissible `λ`, and
//!   `(v,4,λ)`-CDFs.
//! * [`verify`] re-checks every object by brute force and emits
//!   [`Certificate`](verify::Certificate)s.
//! * [`search`] is a Kramer–Mesner style completion search used for sporadic
//!   families, nonexistence certificates and additive sequences of
//!   permutations.
//! * [`derive`] turns perfect difference families into difference triangle
//!   sets, optical and geometric orthogonal codes and graceful labelings.
//! * [`cli`] is the JSON file format and the command-line front end.
//!
//! ```
//! use diffkit::{constructions, verify};
//!
//! let pdf = constructions::pdf_4_lambda(73, 2).unwrap();
//! let cert = verify::verify_family(&pdf).unwrap();
//! assert!(cert.pass);
//! assert_eq!(pdf.blocks().unwrap().len(), 12);
//! ```

pub mod cli;
pub mod constructions;
pub mod derive;
pub mod diff;
mod error;
pub mod groupring;
pub mod search;
pub mod verify;

pub use diff::{Block, DiffMultiset, Family, GridBlock, Kind, Payload, Provenance, SteppedInterval};
pub use error::{Error, Result};
