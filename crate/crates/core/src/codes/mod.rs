//! Knot presentations: Dowker-Thistlethwaite codes, Gauss codes and their
//! conversion to planar diagrams.
//!
//! DT sign convention: a negative entry means the strand passing the
//! crossing at its even label goes over. Flipping every sign mirrors the
//! knot; since realization picks the reflection with non-negative writhe,
//! the convention only affects chirality, never the knot type up to mirror.

mod gauss;
mod realize;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{KnotError, Result};
use crate::pd::PDDiagram;

pub use gauss::{GaussCode, GaussVisit};
pub use realize::{pd_to_dt, pd_to_dt_from, realize_dt, realize_dt_with, DtSignConvention};

/// Parses a bracketed list of signed integers separated by commas and/or
/// whitespace.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| KnotError::Parse(format!("expected a bracketed list, got {t:?}")))?;
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| KnotError::Parse(format!("malformed integer {tok:?}")))
        })
        .collect()
}

/// A DT code: entry `i` is the (signed) even label paired with odd label
/// `2i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DTCode {
    entries: Vec<i64>,
}

impl DTCode {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        let n = entries.len() as i64;
        let mut seen = BTreeSet::new();
        for &e in &entries {
            let a = e.abs();
            if a % 2 != 0 {
                return Err(KnotError::Validity(format!("odd entry {e}")));
            }
            if a < 2 || a > 2 * n {
                return Err(KnotError::Validity(format!("entry {e} outside 2..={}", 2 * n)));
            }
            if !seen.insert(a) {
                return Err(KnotError::Validity(format!("repeated entry {a}")));
            }
        }
        Ok(DTCode { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Negates the entry at `index`: a crossing change at that crossing.
    pub fn flip_entry(&self, index: usize) -> Result<Self> {
        let len = self.entries.len();
        if index >= len {
            return Err(KnotError::IndexOutOfRange { index, len });
        }
        let mut entries = self.entries.clone();
        entries[index] = -entries[index];
        Ok(DTCode { entries })
    }

    pub fn flip_entries(&self, indices: &[usize]) -> Result<Self> {
        let mut c = self.clone();
        for &i in indices {
            c = c.flip_entry(i)?;
        }
        Ok(c)
    }

    /// `DT:[e1, e2, ...]`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        format!("DT:[{}]", parts.join(", "))
    }

    /// Accepts `DT:[...]` or a bare bracketed list.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let body = t.strip_prefix("DT:").unwrap_or(t);
        Self::new(parse_int_list(body)?)
    }

    pub fn realize(&self) -> Result<PDDiagram> {
        realize_dt(self)
    }
}

impl fmt::Display for DTCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Renamed entry point matching the operation name.
pub fn parse_dt(text: &str) -> Result<DTCode> {
    DTCode::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_long_code() {
        let c = parse_dt("[4, -16, 24, 26, 18, 20, 28, 22, -2, 10, 12, 30, 6, 8, 14]").unwrap();
        assert_eq!(c.len(), 15);
        assert_eq!(c.entries()[1], -16);
        assert_eq!(parse_dt(&c.render()).unwrap(), c);
        assert_eq!(parse_dt("DT:[4 6 2]").unwrap().entries(), &[4, 6, 2]);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dt("[]").unwrap().is_empty());
        assert!(matches!(parse_dt("[4, 6, 3]"), Err(KnotError::Validity(_))));
        assert!(matches!(parse_dt("[4, -4, 2]"), Err(KnotError::Validity(_))));
        assert!(matches!(parse_dt("[4, x, 2]"), Err(KnotError::Parse(_))));
        assert!(matches!(parse_dt("4, 6, 2"), Err(KnotError::Parse(_))));
        assert!(matches!(parse_dt("[4, 8, 2]"), Err(KnotError::Validity(_))));
    }

    #[test]
    fn entry_flips() {
        let kc = parse_dt("[4,12,-24,14,18,2,20,26,8,10,-28,-30,16,-6,-22]").unwrap();
        let kd = kc.flip_entry(6).unwrap();
        assert_eq!(kd.entries(), &[4, 12, -24, 14, 18, 2, -20, 26, 8, 10, -28, -30, 16, -6, -22]);
        let ke = kd.flip_entry(13).unwrap();
        assert_eq!(ke.entries()[13], 6);
        assert_eq!(kd.flip_entry(6).unwrap(), kc);
        assert!(kc.flip_entry(15).is_err());
    }
}
