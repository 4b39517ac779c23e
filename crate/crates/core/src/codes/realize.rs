//! Planar realization of DT codes and the reverse traversal.
//!
//! Realization walks the knot in label order and decides, at the second
//! visit of every crossing, from which side the strand crosses its earlier
//! pass. A partial drawing that already fails the Euler check can never
//! be completed, so the search prunes there.

use super::DTCode;
use crate::error::{KnotError, Result};
use crate::pd::{Crossing, PDDiagram};

/// Meaning of a negative DT entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DtSignConvention {
    /// Negative: the even-labeled pass goes over.
    #[default]
    EvenOverNegative,
    /// Negative: the even-labeled pass goes under.
    EvenUnderNegative,
}

const SEARCH_NODE_LIMIT: usize = 5_000_000;

struct Layout {
    n: usize,
    /// crossing at each 0-based position
    at: Vec<usize>,
    first: Vec<usize>,
    second: Vec<usize>,
}

impl Layout {
    fn new(code: &DTCode) -> Self {
        let n = code.len();
        let mut at = vec![0; 2 * n];
        let mut first = vec![0; n];
        let mut second = vec![0; n];
        for (i, &e) in code.entries().iter().enumerate() {
            let odd = 2 * i;
            let even = e.unsigned_abs() as usize - 1;
            at[odd] = i;
            at[even] = i;
            first[i] = odd.min(even);
            second[i] = odd.max(even);
        }
        Layout { n, at, first, second }
    }

    fn m(&self) -> usize {
        2 * self.n
    }

    /// Half-edge ids: `2k` is the tail of edge `k`, `2k + 1` its head.
    /// Edge `k` runs from position `k` to position `k + 1`.
    fn rotation(&self, c: usize, eps: bool) -> [usize; 4] {
        let m = self.m();
        let in1 = 2 * ((self.first[c] + m - 1) % m) + 1;
        let out1 = 2 * self.first[c];
        let in2 = 2 * ((self.second[c] + m - 1) % m) + 1;
        let out2 = 2 * self.second[c];
        if eps {
            [in1, in2, out1, out2]
        } else {
            [in1, out2, out1, in2]
        }
    }

    /// Euler check of the drawing made of positions `0..=p` (all positions
    /// and the closing edge when `p == 2n`).
    fn prefix_planar(&self, p: usize, eps: &[Option<bool>]) -> bool {
        let m = self.m();
        let full = p >= m;
        let present = |k: usize| full || k < p;
        let edges = if full { m } else { p };
        if edges == 0 {
            return true;
        }
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        let mut vertices = 0;
        for c in 0..self.n {
            if !full && self.first[c] > p {
                continue;
            }
            vertices += 1;
            let all: Vec<usize> = match eps[c] {
                Some(e) if full || self.second[c] <= p => self.rotation(c, e).to_vec(),
                _ => {
                    let r = self.rotation(c, true);
                    vec![r[0], r[2]]
                }
            };
            rot[c] = all.into_iter().filter(|&h| present(h / 2)).collect();
        }
        let mut seen = vec![false; 2 * m];
        let mut faces = 0;
        for k in 0..m {
            if !present(k) {
                continue;
            }
            for start in [2 * k, 2 * k + 1] {
                // dart index = the half-edge it arrives at
                if seen[start] {
                    continue;
                }
                faces += 1;
                let mut h = start;
                while !seen[h] {
                    seen[h] = true;
                    let edge = h / 2;
                    let pos = if h % 2 == 1 { (edge + 1) % m } else { edge };
                    let list = &rot[self.at[pos]];
                    let i = list.iter().position(|&x| x == h).expect("half-edge in rotation");
                    let leave = list[(i + list.len() - 1) % list.len()];
                    // leaving along `leave` arrives at the opposite half-edge
                    h = leave ^ 1;
                }
            }
        }
        vertices as i64 - edges as i64 + faces == 2
    }

    fn search(&self) -> Result<Option<Vec<bool>>> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&c| self.second[c]);
        let mut eps = vec![None; self.n];
        let mut nodes = 0usize;
        let found = self.dfs(&order, 0, &mut eps, &mut nodes)?;
        Ok(found.then(|| eps.into_iter().map(|e| e.unwrap()).collect()))
    }

    fn dfs(
        &self,
        order: &[usize],
        i: usize,
        eps: &mut Vec<Option<bool>>,
        nodes: &mut usize,
    ) -> Result<bool> {
        if i == order.len() {
            return Ok(self.prefix_planar(self.m(), eps));
        }
        *nodes += 1;
        if *nodes > SEARCH_NODE_LIMIT {
            return Err(KnotError::Resource("DT realization search limit".into()));
        }
        let c = order[i];
        let choices: &[bool] = if i == 0 { &[true] } else { &[true, false] };
        for &e in choices {
            eps[c] = Some(e);
            if self.prefix_planar(self.second[c], eps) && self.dfs(order, i + 1, eps, nodes)? {
                return Ok(true);
            }
        }
        eps[c] = None;
        Ok(false)
    }

    fn diagram(&self, code: &DTCode, eps: &[bool], conv: DtSignConvention) -> PDDiagram {
        let crossings = (0..self.n)
            .map(|c| {
                let rot = self.rotation(c, eps[c]);
                let labels = rot.map(|h| h / 2);
                let incoming = rot.map(|h| h % 2 == 1);
                let entry = code.entries()[c];
                let even_over = match conv {
                    DtSignConvention::EvenOverNegative => entry < 0,
                    DtSignConvention::EvenUnderNegative => entry > 0,
                };
                // the first visit is at an even label iff its 0-based position is odd
                let first_over = if self.first[c] % 2 == 1 { even_over } else { !even_over };
                // slots 0 and 2 carry the first pass
                Crossing::from_ccw(labels, !first_over, incoming)
            })
            .collect();
        PDDiagram::from_crossings(crossings, 0).expect("realized rotation system is planar")
    }
}

pub fn realize_dt(code: &DTCode) -> Result<PDDiagram> {
    realize_dt_with(code, DtSignConvention::default())
}

/// Realizes a DT code. Crossing `i` of the result is entry `i` of the code.
/// Of the two mirror-image embeddings, the one with writhe `>= 0` is
/// returned, ties going to the lexicographically smaller sign vector.
pub fn realize_dt_with(code: &DTCode, conv: DtSignConvention) -> Result<PDDiagram> {
    if code.is_empty() {
        return Ok(PDDiagram::unknot());
    }
    let layout = Layout::new(code);
    let eps = layout.search()?.ok_or(KnotError::NotRealizable)?;
    let a = layout.diagram(code, &eps, conv);
    let flipped: Vec<bool> = eps.iter().map(|e| !e).collect();
    let b = layout.diagram(code, &flipped, conv);
    let key = |d: &PDDiagram| {
        let signs: Vec<i8> = d.crossings.iter().map(|x| x.sign).collect();
        (-d.writhe(), signs)
    };
    Ok(if key(&b) < key(&a) { b } else { a })
}

/// DT code read off by traversing from `start_edge`.
pub fn pd_to_dt_from(d: &PDDiagram, start_edge: usize) -> Result<DTCode> {
    if d.crossings.is_empty() {
        return match d.free_loops {
            0 | 1 => DTCode::new(Vec::new()),
            _ => Err(KnotError::Unsupported("multi-component diagram".into())),
        };
    }
    if d.component_count() != 1 {
        return Err(KnotError::Unsupported("multi-component diagram".into()));
    }
    let topo = d.topology();
    let n = d.crossing_count();
    let mut labels: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    let mut e = start_edge;
    for k in 1..=2 * n {
        let (c, s) = topo.head[e];
        labels[c].push((k, Crossing::is_over(s)));
        e = d.next_edge(&topo, e);
    }
    let mut entries = vec![0i64; n];
    for visits in &labels {
        let (odd, even) = match (visits[0], visits[1]) {
            (a, b) if a.0 % 2 == 1 && b.0 % 2 == 0 => (a, b),
            (a, b) if b.0 % 2 == 1 && a.0 % 2 == 0 => (b, a),
            _ => return Err(KnotError::Validity("diagram violates DT label parity".into())),
        };
        let v = even.0 as i64;
        entries[(odd.0 - 1) / 2] = if even.1 { -v } else { v };
    }
    DTCode::new(entries)
}

/// DT code of a knot diagram, normalized over all starting edges: smallest
/// absolute values first, then fewest leading negative entries.
pub fn pd_to_dt(d: &PDDiagram) -> Result<DTCode> {
    if d.crossings.is_empty() {
        return pd_to_dt_from(d, 0);
    }
    let key = |c: &DTCode| c.entries().iter().map(|&e| (e.abs(), e < 0)).collect::<Vec<_>>();
    let mut best: Option<DTCode> = None;
    for start in 0..d.edge_count() {
        let c = pd_to_dt_from(d, start)?;
        if best.as_ref().is_none_or(|b| key(&c) < key(b)) {
            best = Some(c);
        }
    }
    Ok(best.unwrap())
}
