//! Braid words, their closures, letter flips and Vogel's algorithm.

mod vogel;

use std::fmt;

use crate::error::{KnotError, Result};
use crate::pd::{Crossing, PDDiagram};

pub use vogel::{vogel_braid, vogel_braided};

/// How a braid letter maps to a crossing of the closure.
///
/// `Standard` makes letter `+i` a positive crossing between positions `i`
/// and `i+1`, so `[1, 1, 1]` closes to the positive trefoil. `Flipped`
/// negates every letter and exists only for diagnosing sign conventions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BraidConvention {
    #[default]
    Standard,
    Flipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
    strands: usize,
}

impl BraidWord {
    /// Word on the minimal number of strands, `max |letter| + 1`.
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        Self::with_strands(letters, strands)
    }

    pub fn with_strands(letters: Vec<i32>, strands: usize) -> Result<Self> {
        if letters.contains(&0) {
            return Err(KnotError::Validity("braid letter 0".into()));
        }
        let need = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        if strands < need {
            return Err(KnotError::Validity(format!(
                "{strands} strands cannot carry generator {}",
                need - 1
            )));
        }
        Ok(BraidWord { letters, strands })
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Positive letters minus negative letters.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Image of each starting position after the whole word (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        // pos[p] = which starting strand currently sits at position p
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            pos.swap(k, k + 1);
        }
        let mut image = vec![0; self.strands];
        for (p, &s) in pos.iter().enumerate() {
            image[s] = p;
        }
        image
    }

    /// Number of cycles of [`BraidWord::permutation`], i.e. closure components.
    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }

    /// Negates the letters at the given 0-based positions.
    pub fn flip_letters(&self, indices: &[usize]) -> Result<Self> {
        let mut letters = self.letters.clone();
        for &i in indices {
            let len = letters.len();
            let l = letters.get_mut(i).ok_or(KnotError::IndexOutOfRange { index: i, len })?;
            *l = -*l;
        }
        Ok(BraidWord { letters, strands: self.strands })
    }

    /// Cancels adjacent `i, -i` pairs until none remain. Never applied
    /// implicitly: certificate indices refer to the unreduced word.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out, strands: self.strands }
    }

    pub fn closure(&self) -> PDDiagram {
        self.closure_with(BraidConvention::Standard)
    }

    /// Closed-braid diagram. Crossing `k` of the result is letter `k`.
    pub fn closure_with(&self, convention: BraidConvention) -> PDDiagram {
        let n = self.strands;
        let mut cur: Vec<usize> = (0..n).collect();
        let mut next = n;
        let mut crossings = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            let positive = (l > 0) == (convention == BraidConvention::Standard);
            let (e_lo, e_hi) = (cur[k], cur[k + 1]);
            let (f_lo, f_hi) = (next, next + 1);
            next += 2;
            crossings.push(if positive {
                Crossing::new([e_lo, f_lo, f_hi, e_hi], 1)
            } else {
                Crossing::new([e_hi, e_lo, f_lo, f_hi], -1)
            });
            cur[k] = f_lo;
            cur[k + 1] = f_hi;
        }
        let mut free_loops = 0;
        let mut rename = vec![usize::MAX; next];
        for (p, &last) in cur.iter().enumerate() {
            if last == p {
                free_loops += 1;
            } else {
                rename[last] = p;
            }
        }
        for x in &mut crossings {
            for e in &mut x.edges {
                if rename[*e] != usize::MAX {
                    *e = rename[*e];
                }
            }
        }
        PDDiagram::from_crossings(crossings, free_loops)
            .expect("braid closures are planar by construction")
    }

    /// Bracketed list, `[1, -4, 2]`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Parses `[1, -4, 2]`, optionally prefixed with `BRAID:`.
    pub fn parse(text: &str) -> Result<Self> {
        let body = text.trim();
        let body = body.strip_prefix("BRAID:").unwrap_or(body).trim();
        let letters = crate::codes::parse_int_list(body)?;
        let letters: Vec<i32> = letters
            .into_iter()
            .map(|v| i32::try_from(v).map_err(|_| KnotError::Parse(format!("letter {v} too large"))))
            .collect::<Result<_>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
