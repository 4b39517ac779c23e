use std::fmt;
use std::str::FromStr;

use super::{alexander, determinant, jones, signature};
use crate::error::{KnotError, Result};
use crate::moves::{simplify_global, DEFAULT_GLOBAL_BUDGET};
use crate::pd::PDDiagram;
use crate::poly::LaurentPoly;

/// Seed used by `fingerprint` for its simplification pass.
pub const FINGERPRINT_SEED: u64 = 0;

/// Invariant bundle used to compare knots. `min_crossings_seen` is
/// metadata and takes no part in equality.
#[derive(Clone, Debug)]
pub struct Fingerprint {
    pub alexander: LaurentPoly,
    /// In `q = t^(1/2)`.
    pub jones: LaurentPoly,
    pub signature: i64,
    pub determinant: u64,
    pub min_crossings_seen: usize,
}

impl PartialEq for Fingerprint {
    fn eq(&self, other: &Self) -> bool {
        self.alexander == other.alexander
            && self.jones == other.jones
            && self.signature == other.signature
            && self.determinant == other.determinant
    }
}

impl Eq for Fingerprint {}

impl std::hash::Hash for Fingerprint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.alexander.hash(state);
        self.jones.hash(state);
        self.signature.hash(state);
        self.determinant.hash(state);
    }
}

impl Fingerprint {
    pub fn unknot() -> Self {
        Fingerprint {
            alexander: LaurentPoly::one(),
            jones: LaurentPoly::one(),
            signature: 0,
            determinant: 1,
            min_crossings_seen: 0,
        }
    }

    /// Fingerprint of the mirror image.
    pub fn mirror(&self) -> Self {
        Fingerprint {
            alexander: self.alexander.clone(),
            jones: self.jones.invert_variable(),
            signature: -self.signature,
            determinant: self.determinant,
            min_crossings_seen: self.min_crossings_seen,
        }
    }

    /// Fingerprint of a connected sum.
    pub fn sum(&self, other: &Self) -> Self {
        Fingerprint {
            alexander: &self.alexander * &other.alexander,
            jones: &self.jones * &other.jones,
            signature: self.signature + other.signature,
            determinant: self.determinant * other.determinant,
            min_crossings_seen: self.min_crossings_seen + other.min_crossings_seen,
        }
    }

    pub fn matches_up_to_mirror(&self, other: &Self) -> bool {
        self == other || *self == other.mirror()
    }

    /// Invariants of `d` as drawn, without simplification.
    pub fn of_diagram(d: &PDDiagram) -> Result<Self> {
        Ok(Fingerprint {
            alexander: alexander(d)?,
            jones: jones(d)?,
            signature: signature(d)?,
            determinant: determinant(d)?,
            min_crossings_seen: d.crossing_count(),
        })
    }

    /// One line, `alexander=..; jones=..; signature=..; determinant=..; crossings=..`.
    pub fn render(&self) -> String {
        format!(
            "alexander={}; jones={}; signature={}; determinant={}; crossings={}",
            self.alexander.render("t"),
            self.jones.render_half("t"),
            self.signature,
            self.determinant,
            self.min_crossings_seen
        )
    }

    pub fn parse(line: &str) -> Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for part in line.split(';') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| KnotError::Parse(format!("bad fingerprint field {part:?}")))?;
            fields.insert(k.trim(), v.trim());
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| KnotError::Parse(format!("missing {k}")));
        let int = |k: &str| -> Result<i64> { get(k)?.parse().map_err(|_| KnotError::Parse(format!("bad {k}"))) };
        Ok(Fingerprint {
            alexander: LaurentPoly::parse(get("alexander")?, "t", false)?,
            jones: LaurentPoly::parse(get("jones")?, "t", true)?,
            signature: int("signature")?,
            determinant: int("determinant")?.try_into().map_err(|_| KnotError::Parse("bad determinant".into()))?,
            min_crossings_seen: int("crossings")?.try_into().map_err(|_| KnotError::Parse("bad crossings".into()))?,
        })
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Fingerprint {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self> {
        Fingerprint::parse(s)
    }
}

/// Invariants of the simplified diagram.
pub fn fingerprint(d: &PDDiagram) -> Result<Fingerprint> {
    fingerprint_with(d, DEFAULT_GLOBAL_BUDGET, FINGERPRINT_SEED)
}

pub fn fingerprint_with(d: &PDDiagram, budget: usize, seed: u64) -> Result<Fingerprint> {
    if !d.is_knot() {
        return Err(KnotError::Unsupported("fingerprint of a multi-component diagram".into()));
    }
    let s = simplify_global(d, budget, seed);
    Fingerprint::of_diagram(&s)
}
