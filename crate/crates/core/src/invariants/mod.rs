//! Exact invariants: bracket and Jones, Seifert matrix, Alexander,
//! signature, determinant, Wirtinger presentation and torus-knot formulas.

mod bracket;
mod fingerprint;
mod seifert;
mod wirtinger;

pub use bracket::{jones, jones_with, kauffman_bracket, kauffman_bracket_with, DEFAULT_BRACKET_CAP};
pub use fingerprint::{fingerprint, fingerprint_with, Fingerprint, FINGERPRINT_SEED};
pub use seifert::{
    alexander, alexander_from_seifert, braid_seifert_matrix, determinant, murasugi_bound, seifert_matrix,
    signature, symmetric_signature, SeifertMatrix, SIGNATURE_CONVENTION,
};
pub use wirtinger::{wirtinger, WirtingerPresentation};

use crate::braid::BraidWord;
use crate::error::{KnotError, Result};
use crate::pd::PDDiagram;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(p - 1)(q - 1) / 2`.
pub fn torus_unknotting(p: u64, q: u64) -> Result<u64> {
    if p < 2 || q < 2 {
        return Err(KnotError::InvalidArgument(format!("T({p},{q}) needs p, q >= 2")));
    }
    if gcd(p, q) != 1 {
        return Err(KnotError::InvalidArgument(format!("T({p},{q}) is not a knot")));
    }
    Ok((p - 1) * (q - 1) / 2)
}

/// Closed 2-braid with `n` positive crossings.
pub fn torus_diagram(n: usize) -> Result<PDDiagram> {
    if n < 3 || n % 2 == 0 {
        return Err(KnotError::InvalidArgument(format!("T(2,{n}) needs odd n >= 3")));
    }
    Ok(BraidWord::new(vec![1; n])?.closure())
}

#[cfg(test)]
mod tests;
