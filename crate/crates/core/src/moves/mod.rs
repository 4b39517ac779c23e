//! Diagram surgery: Reidemeister moves, crossing changes, simplification,
//! randomization and connected sums.

mod reidemeister;
mod simplify;
mod sum;

use std::fmt;

use crate::codes::DTCode;
use crate::error::{KnotError, Result};
use crate::pd::{Dart, PDDiagram};

pub use simplify::{backtrack_randomize, simplify_global, simplify_greedy, DEFAULT_GLOBAL_BUDGET};
pub use sum::{connected_sum, deconnect_sum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Minus,
    R1Plus,
    R2Minus,
    R2Plus,
    R3,
    CrossingChange,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::R1Minus => "R1-",
            MoveKind::R1Plus => "R1+",
            MoveKind::R2Minus => "R2-",
            MoveKind::R2Plus => "R2+",
            MoveKind::R3 => "R3",
            MoveKind::CrossingChange => "crossing-change",
        }
    }

    /// Change in crossing count.
    pub fn delta(self) -> i64 {
        match self {
            MoveKind::R1Minus => -1,
            MoveKind::R1Plus => 1,
            MoveKind::R2Minus => -2,
            MoveKind::R2Plus => 2,
            MoveKind::R3 | MoveKind::CrossingChange => 0,
        }
    }
}

/// A move descriptor. Faces are named by any one of their darts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    R1Minus { crossing: usize },
    /// On a crossingless diagram `edge` is ignored and a free loop is curled.
    R1Plus { edge: usize, left: bool, sign: i8 },
    R2Minus { face: Dart },
    /// `a` and `b` lie on a common face; the finger of `a`'s strand passes
    /// over `b`'s strand iff `a_over`.
    R2Plus { a: Dart, b: Dart, a_over: bool },
    R3 { face: Dart },
    CrossingChange { crossing: usize },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Minus { .. } => MoveKind::R1Minus,
            Move::R1Plus { .. } => MoveKind::R1Plus,
            Move::R2Minus { .. } => MoveKind::R2Minus,
            Move::R2Plus { .. } => MoveKind::R2Plus,
            Move::R3 { .. } => MoveKind::R3,
            Move::CrossingChange { .. } => MoveKind::CrossingChange,
        }
    }

    fn site(&self) -> String {
        let dart = |d: &Dart| format!("{}{}", d.edge, if d.forward { '+' } else { '-' });
        match self {
            Move::R1Minus { crossing } | Move::CrossingChange { crossing } => format!("c{crossing}"),
            Move::R1Plus { edge, left, sign } => {
                format!("e{edge}:{}:{}", if *left { 'L' } else { 'R' }, if *sign > 0 { '+' } else { '-' })
            }
            Move::R2Minus { face } | Move::R3 { face } => format!("d{}", dart(face)),
            Move::R2Plus { a, b, a_over } => {
                format!("d{},d{}:{}", dart(a), dart(b), if *a_over { 'o' } else { 'u' })
            }
        }
    }

    fn parse_site(kind: MoveKind, site: &str) -> Result<Move> {
        let bad = || KnotError::Parse(format!("bad move site {site:?}"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let dart = |s: &str| -> Result<Dart> {
            let s = s.strip_prefix('d').ok_or_else(bad)?;
            let (e, dir) = s.split_at(s.len().checked_sub(1).ok_or_else(bad)?);
            let forward = match dir {
                "+" => true,
                "-" => false,
                _ => return Err(bad()),
            };
            Ok(Dart { edge: num(e)?, forward })
        };
        Ok(match kind {
            MoveKind::R1Minus => Move::R1Minus { crossing: num(site.strip_prefix('c').ok_or_else(bad)?)? },
            MoveKind::CrossingChange => {
                Move::CrossingChange { crossing: num(site.strip_prefix('c').ok_or_else(bad)?)? }
            }
            MoveKind::R1Plus => {
                let parts: Vec<&str> = site.strip_prefix('e').ok_or_else(bad)?.split(':').collect();
                match parts[..] {
                    [e, side @ ("L" | "R"), sign @ ("+" | "-")] => Move::R1Plus {
                        edge: num(e)?,
                        left: side == "L",
                        sign: if sign == "+" { 1 } else { -1 },
                    },
                    _ => return Err(bad()),
                }
            }
            MoveKind::R2Minus => Move::R2Minus { face: dart(site)? },
            MoveKind::R3 => Move::R3 { face: dart(site)? },
            MoveKind::R2Plus => {
                let (pair, over) = site.split_once(':').ok_or_else(bad)?;
                let (a, b) = pair.split_once(',').ok_or_else(bad)?;
                let a_over = match over {
                    "o" => true,
                    "u" => false,
                    _ => return Err(bad()),
                };
                Move::R2Plus { a: dart(a)?, b: dart(b)?, a_over }
            }
        })
    }
}

/// A move together with the crossing counts around it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MoveRecord {
    pub mv: Move,
    pub before: usize,
    pub after: usize,
}

impl MoveRecord {
    pub fn new(mv: Move, before: usize) -> Self {
        let after = (before as i64 + mv.kind().delta()).max(0) as usize;
        MoveRecord { mv, before, after }
    }

    pub fn kind(&self) -> MoveKind {
        self.mv.kind()
    }

    /// Line record `kind site before after`.
    pub fn render(&self) -> String {
        format!("{} {} {} {}", self.kind().as_str(), self.mv.site(), self.before, self.after)
    }

    pub fn parse(line: &str) -> Result<Self> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [kind, site, before, after] = parts[..] else {
            return Err(KnotError::Parse(format!("bad move record {line:?}")));
        };
        let kind = [
            MoveKind::R1Minus,
            MoveKind::R1Plus,
            MoveKind::R2Minus,
            MoveKind::R2Plus,
            MoveKind::R3,
            MoveKind::CrossingChange,
        ]
        .into_iter()
        .find(|k| k.as_str() == kind)
        .ok_or_else(|| KnotError::Parse(format!("unknown move kind {kind:?}")))?;
        let count = |s: &str| s.parse::<usize>().map_err(|_| KnotError::Parse(line.to_string()));
        let rec = MoveRecord { mv: Move::parse_site(kind, site)?, before: count(before)?, after: count(after)? };
        if rec.after as i64 - rec.before as i64 != kind.delta() {
            return Err(KnotError::Parse(format!("counts in {line:?} do not match {}", kind.as_str())));
        }
        Ok(rec)
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn crossing_change(d: &PDDiagram, c: usize) -> Result<PDDiagram> {
    d.crossing_change(c)
}

pub fn mirror(d: &PDDiagram) -> PDDiagram {
    d.mirror()
}

pub fn dt_entry_flip(code: &DTCode, index: usize) -> Result<DTCode> {
    code.flip_entry(index)
}

/// Smallest dart of every face, in face order.
fn face_keys(faces: &[Vec<Dart>]) -> Vec<Dart> {
    faces.iter().map(|f| *f.iter().min().expect("faces are nonempty")).collect()
}

/// Face rotated to start at `key`, or `None` if no face contains it.
fn face_from(faces: &[Vec<Dart>], key: Dart) -> Option<Vec<Dart>> {
    faces.iter().find_map(|f| {
        f.iter().position(|&x| x == key).map(|i| {
            let mut g = f[i..].to_vec();
            g.extend_from_slice(&f[..i]);
            g
        })
    })
}

/// Reducing moves (R1-, R2-) followed by third moves, lowest site first.
pub fn find_moves(d: &PDDiagram) -> Vec<MoveRecord> {
    let n = d.crossing_count();
    let mut out: Vec<MoveRecord> = (0..n)
        .filter(|&c| reidemeister::is_kink(&d.crossings[c]))
        .map(|c| MoveRecord::new(Move::R1Minus { crossing: c }, n))
        .collect();
    if n == 0 {
        return out;
    }
    let topo = d.topology();
    let faces = d.faces();
    let keys = face_keys(&faces);
    let mut bigons = Vec::new();
    let mut triangles = Vec::new();
    for (f, &key) in faces.iter().zip(&keys) {
        let f = face_from(std::slice::from_ref(f), key).unwrap();
        if reidemeister::r2_minus_crossings(d, &topo, &f).is_some() {
            bigons.push(key);
        }
        if reidemeister::r3_applicable(d, &topo, &f) {
            triangles.push(key);
        }
    }
    bigons.sort();
    triangles.sort();
    out.extend(bigons.into_iter().map(|face| MoveRecord::new(Move::R2Minus { face }, n)));
    out.extend(triangles.into_iter().map(|face| MoveRecord::new(Move::R3 { face }, n)));
    out
}

/// Number of crossing-increasing moves available, for uniform sampling.
pub fn increasing_moves(d: &PDDiagram) -> Vec<Move> {
    if d.crossings.is_empty() {
        return if d.free_loops > 0 {
            vec![
                Move::R1Plus { edge: 0, left: true, sign: 1 },
                Move::R1Plus { edge: 0, left: true, sign: -1 },
            ]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for edge in 0..d.edge_count() {
        for left in [true, false] {
            for sign in [1, -1] {
                out.push(Move::R1Plus { edge, left, sign });
            }
        }
    }
    for f in d.faces() {
        for i in 0..f.len() {
            for j in 0..f.len() {
                if i != j && f[i].edge != f[j].edge {
                    for a_over in [true, false] {
                        out.push(Move::R2Plus { a: f[i], b: f[j], a_over });
                    }
                }
            }
        }
    }
    out
}

pub fn apply_move(d: &PDDiagram, m: &Move) -> Result<PDDiagram> {
    let stale = || KnotError::InvalidMove(format!("stale move {}", MoveRecord::new(*m, d.crossing_count())));
    match *m {
        Move::R1Minus { crossing } => reidemeister::r1_minus(d, crossing),
        Move::R1Plus { edge, left, sign } => reidemeister::r1_plus(d, edge, left, sign),
        Move::R2Minus { face } => reidemeister::r2_minus(d, &face_from(&d.faces(), face).ok_or_else(stale)?),
        Move::R2Plus { a, b, a_over } => reidemeister::r2_plus(d, a, b, a_over),
        Move::R3 { face } => reidemeister::r3(d, &face_from(&d.faces(), face).ok_or_else(stale)?),
        Move::CrossingChange { crossing } => d.crossing_change(crossing),
    }
}

pub fn apply_record(d: &PDDiagram, r: &MoveRecord) -> Result<PDDiagram> {
    if r.before != d.crossing_count() {
        return Err(KnotError::InvalidMove(format!("record {r} expects {} crossings", r.before)));
    }
    apply_move(d, &r.mv)
}

#[cfg(test)]
mod tests;
