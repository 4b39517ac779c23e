//! Fingerprint identification against a reference table built from DT codes.
//!
//! Matches are evidence, not proof: distinct knots can share a fingerprint.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::codes::DTCode;
use crate::error::{KnotError, Result};
use crate::invariants::{fingerprint, Fingerprint};
use crate::pd::PDDiagram;

pub const UNKNOT: &str = "unknot";

pub const KA: [i64; 15] = [4, -16, 24, 26, 18, 20, 28, 22, -2, 10, 12, 30, 6, 8, 14];
pub const KC: [i64; 15] = [4, 12, -24, 14, 18, 2, 20, 26, 8, 10, -28, -30, 16, -6, -22];
pub const CODE_10_139: [i64; 10] = [12, 14, -10, -20, -16, 18, 2, -8, 4, -6];

/// Name and DT code of every bundled entry. Some codes are derived by
/// entry flips from the ones above; names may repeat when two diagrams
/// present the same knot.
pub fn bundled_codes() -> Vec<(String, DTCode)> {
    let code = |v: &[i64]| DTCode::new(v.to_vec()).expect("bundled code is valid");
    let ten = code(&CODE_10_139);
    let ka = code(&KA);
    let kc = code(&KC);
    vec![
        (UNKNOT.into(), code(&[])),
        ("3_1".into(), code(&[4, 6, 2])),
        ("5_1".into(), code(&[6, 8, 10, 2, 4])),
        ("7_1".into(), ten.flip_entry(4).unwrap()),
        ("9_1".into(), code(&[10, 12, 14, 16, 18, 2, 4, 6, 8])),
        ("10_139".into(), ten),
        ("K14a18636".into(), ka.clone()),
        ("K15n81556".into(), ka.flip_entry(0).unwrap()),
        ("K15n81556".into(), kc.clone()),
        ("K12n412".into(), kc.flip_entry(6).unwrap()),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTableEntry {
    pub name: String,
    pub dt: DTCode,
    pub fingerprint: Fingerprint,
    pub fingerprint_mirror: Fingerprint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    AsListed,
    Mirror,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::AsListed => "as-listed",
            Chirality::Mirror => "mirror",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotTable {
    pub entries: Vec<KnotTableEntry>,
    /// Pairs of distinct names whose fingerprints agree up to mirror.
    pub duplicates: Vec<(String, String)>,
}

fn entry_for(name: &str, dt: &DTCode) -> Result<KnotTableEntry> {
    let d = dt.realize().map_err(|e| KnotError::Validity(format!("{name} {dt}: {e}")))?;
    let fp = fingerprint(&d)?;
    Ok(KnotTableEntry { name: name.to_string(), dt: dt.clone(), fingerprint_mirror: fp.mirror(), fingerprint: fp })
}

/// Computes fingerprints for every code. Repeated names must agree up to
/// mirror and collapse into the first entry.
pub fn build_table(codes: &[(String, DTCode)]) -> Result<KnotTable> {
    let mut table = KnotTable::default();
    for (name, dt) in codes {
        let e = entry_for(name, dt)?;
        if let Some(prev) = table.entries.iter().find(|p| p.name == *name) {
            if !prev.fingerprint.matches_up_to_mirror(&e.fingerprint) {
                return Err(KnotError::Validity(format!("two codes named {name} have different fingerprints")));
            }
            continue;
        }
        table.push(e);
    }
    Ok(table)
}

/// The bundled reference table. A fingerprint collision between distinct
/// names is a hard failure.
pub fn bundled_table() -> Result<KnotTable> {
    let t = build_table(&bundled_codes())?;
    if let Some((a, b)) = t.duplicates.first() {
        return Err(KnotError::Validity(format!("bundled table collision: {a} and {b}")));
    }
    Ok(t)
}

impl KnotTable {
    fn push(&mut self, e: KnotTableEntry) {
        for p in &self.entries {
            if p.fingerprint.matches_up_to_mirror(&e.fingerprint) {
                self.duplicates.push((p.name.clone(), e.name.clone()));
            }
        }
        self.entries.push(e);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&KnotTableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Adds the standard `T(2,n)` diagrams under the names `T(2,n)`.
    pub fn add_torus_knots(&mut self, ns: impl IntoIterator<Item = usize>) -> Result<()> {
        for n in ns {
            let d = crate::invariants::torus_diagram(n)?;
            let dt = crate::codes::pd_to_dt(&d)?;
            self.push(entry_for(&format!("T(2,{n})"), &dt)?);
        }
        Ok(())
    }

    /// Expected fingerprint of a claim: a name, `~name` for its mirror, or
    /// connected sums `a#b`.
    pub fn claim_fingerprint(&self, claim: &str) -> Result<Fingerprint> {
        let mut acc = Fingerprint::unknot();
        for part in claim.split('#').map(str::trim) {
            let (mirror, name) = match part.strip_prefix('~') {
                Some(n) => (true, n.trim()),
                None => (false, part),
            };
            let e = self.get(name).ok_or_else(|| KnotError::InvalidArgument(format!("unknown knot {name:?}")))?;
            acc = acc.sum(if mirror { &e.fingerprint_mirror } else { &e.fingerprint });
        }
        Ok(acc)
    }

    /// A diagram for a claim, built from the listed DT codes.
    pub fn claim_diagram(&self, claim: &str) -> Result<PDDiagram> {
        let mut acc: Option<PDDiagram> = None;
        for part in claim.split('#').map(str::trim) {
            let (mirror, name) = match part.strip_prefix('~') {
                Some(n) => (true, n.trim()),
                None => (false, part),
            };
            let e = self.get(name).ok_or_else(|| KnotError::InvalidArgument(format!("unknown knot {name:?}")))?;
            let mut d = e.dt.realize()?;
            if mirror {
                d = crate::moves::mirror(&d);
            }
            acc = Some(match acc {
                None => d,
                Some(a) => crate::moves::connected_sum(&a, &d)?,
            });
        }
        acc.ok_or_else(|| KnotError::InvalidArgument("empty knot name".into()))
    }

    /// Entries whose fingerprint matches `fp` in either chirality.
    pub fn lookup(&self, fp: &Fingerprint) -> Vec<(String, Chirality)> {
        self.entries
            .iter()
            .filter_map(|e| {
                if e.fingerprint == *fp {
                    Some((e.name.clone(), Chirality::AsListed))
                } else if e.fingerprint_mirror == *fp {
                    Some((e.name.clone(), Chirality::Mirror))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Tab-separated lines `name  DT:[..]  fingerprint  mirror-fingerprint`.
    pub fn render(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}\t{}\t{}\t{}\n", e.name, e.dt, e.fingerprint, e.fingerprint_mirror))
            .collect()
    }

    /// Parses a table file. With `verify`, every fingerprint is recomputed
    /// from its DT code and must match the stored one.
    pub fn parse(text: &str, verify: bool) -> Result<Self> {
        let mut table = KnotTable::default();
        let mut names = BTreeMap::new();
        for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#')) {
            let cols: Vec<&str> = line.split('\t').collect();
            let [name, dt, fp, mfp] = cols[..] else {
                return Err(KnotError::Parse(format!("table line {}: expected 4 columns", no + 1)));
            };
            if names.insert(name.to_string(), ()).is_some() {
                return Err(KnotError::Parse(format!("table line {}: duplicate name {name}", no + 1)));
            }
            let e = KnotTableEntry {
                name: name.to_string(),
                dt: DTCode::parse(dt)?,
                fingerprint: Fingerprint::parse(fp)?,
                fingerprint_mirror: Fingerprint::parse(mfp)?,
            };
            if e.fingerprint.mirror() != e.fingerprint_mirror {
                return Err(KnotError::Validity(format!("{name}: mirror fingerprint is inconsistent")));
            }
            if verify {
                let fresh = entry_for(name, &e.dt)?;
                if fresh.fingerprint != e.fingerprint {
                    return Err(KnotError::Validity(format!("{name}: stored fingerprint does not match its DT code")));
                }
            }
            table.push(e);
        }
        Ok(table)
    }

    pub fn load(path: &Path, verify: bool) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| KnotError::InvalidArgument(format!("{}: {e}", path.display())))?;
        Self::parse(&text, verify)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render()).map_err(|e| KnotError::InvalidArgument(format!("{}: {e}", path.display())))
    }
}

pub fn identify(d: &PDDiagram, table: &KnotTable) -> Result<Vec<(String, Chirality)>> {
    Ok(table.lookup(&fingerprint(d)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    PassUpToMirror,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::PassUpToMirror => "PASS-UP-TO-MIRROR",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct EvidenceReport {
    pub verdict: Verdict,
    /// One line per compared invariant.
    pub comparisons: Vec<String>,
}

impl fmt::Display for EvidenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::Fail => writeln!(f, "{}", self.verdict)?,
            v => writeln!(f, "{v} (fingerprint evidence)")?,
        }
        for c in &self.comparisons {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

fn compare(name: &str, a: String, b: String) -> String {
    if a == b {
        format!("{name}: equal ({a})")
    } else {
        format!("{name}: {a} != {b}")
    }
}

/// Compares two fingerprints invariant by invariant.
pub fn fingerprint_evidence(a: &Fingerprint, b: &Fingerprint) -> EvidenceReport {
    let verdict = if a == b {
        Verdict::Pass
    } else if *a == b.mirror() {
        Verdict::PassUpToMirror
    } else {
        Verdict::Fail
    };
    // report against the orientation that matched, if any
    let b = if verdict == Verdict::PassUpToMirror { b.mirror() } else { b.clone() };
    let comparisons = vec![
        compare("alexander", a.alexander.render("t"), b.alexander.render("t")),
        compare("jones", a.jones.render_half("t"), b.jones.render_half("t")),
        compare("signature", a.signature.to_string(), b.signature.to_string()),
        compare("determinant", a.determinant.to_string(), b.determinant.to_string()),
    ];
    EvidenceReport { verdict, comparisons }
}

pub fn same_knot_evidence(a: &PDDiagram, b: &PDDiagram) -> Result<EvidenceReport> {
    Ok(fingerprint_evidence(&fingerprint(a)?, &fingerprint(b)?))
}

#[cfg(test)]
pub(crate) mod tests;
