//! Knot diagram kernel and unknotting-certificate toolchain.
//!
//! The canonical diagram type is [`PDDiagram`]. DT codes and braid words
//! convert to it; every invariant is computed from it with exact integer
//! arithmetic.

pub mod braid;
pub mod certify;
pub mod codes;
pub mod error;
pub mod identify;
pub mod invariants;
pub mod moves;
pub mod pd;
pub mod poly;
pub mod search;
pub mod transcript;

pub use braid::BraidWord;
pub use codes::{DTCode, GaussCode};
pub use error::{KnotError, Result};
pub use invariants::Fingerprint;
pub use pd::{Crossing, PDDiagram};
pub use poly::LaurentPoly;
