//! Planar diagrams: the canonical diagram representation.
//!
//! A crossing is written `X[a,b,c,d]`: the four edge labels in
//! counterclockwise order starting from the incoming under-strand, so the
//! under-strand runs `a -> c`. The over-strand runs `d -> b` at a positive
//! crossing and `b -> d` at a negative one.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{KnotError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn new(edges: [usize; 4], sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Crossing { edges, sign }
    }

    /// Builds a crossing from labels in counterclockwise order (any starting
    /// slot), which opposite pair is the over-strand, and which slots carry
    /// an edge entering the crossing.
    pub fn from_ccw(labels: [usize; 4], over_pair_odd: bool, incoming: [bool; 4]) -> Self {
        let under = if over_pair_odd { [0, 2] } else { [1, 3] };
        let u = if incoming[under[0]] { under[0] } else { under[1] };
        let o = (u + 1) % 4;
        let over_in = if incoming[o] { o } else { (u + 3) % 4 };
        let edges = [labels[u], labels[(u + 1) % 4], labels[(u + 2) % 4], labels[(u + 3) % 4]];
        let sign = if over_in == (u + 3) % 4 { 1 } else { -1 };
        Crossing { edges, sign }
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        match slot {
            0 => true,
            2 => false,
            1 => self.sign < 0,
            _ => self.sign > 0,
        }
    }

    pub fn is_over(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// Outgoing slot joined to incoming `slot` by the oriented smoothing.
    pub fn seifert_out(&self, slot: usize) -> usize {
        match (slot, self.sign > 0) {
            (0, true) => 1,
            (3, true) => 2,
            (0, false) => 3,
            (1, false) => 2,
            _ => panic!("slot {slot} is not incoming"),
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn changed(&self) -> Self {
        let [a, b, c, d] = self.edges;
        if self.sign > 0 {
            Crossing { edges: [d, a, b, c], sign: -1 }
        } else {
            Crossing { edges: [b, c, d, a], sign: 1 }
        }
    }

    pub fn slot_of(&self, edge: usize) -> Option<usize> {
        self.edges.iter().position(|&e| e == edge)
    }
}

/// A (crossing, slot) position.
pub type Endpoint = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PDDiagram {
    pub crossings: Vec<Crossing>,
    /// Components with no crossings.
    pub free_loops: usize,
}

/// Dart: an edge traversed forward (with its orientation) or backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

/// Endpoint tables for a diagram with dense edge labels.
#[derive(Clone, Debug)]
pub struct Topology {
    pub head: Vec<Endpoint>,
    pub tail: Vec<Endpoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DanglingEdge(usize),
    OverusedEdge(usize, usize),
    OrientationMismatch(usize),
    BadSign(usize),
    NonPlanar { euler: i64, expected: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingEdge(e) => write!(f, "dangling edge {e}"),
            Violation::OverusedEdge(e, n) => write!(f, "edge {e} used {n} times"),
            Violation::OrientationMismatch(e) => {
                write!(f, "edge {e} is not incoming at exactly one end")
            }
            Violation::BadSign(c) => write!(f, "crossing {c} has sign outside {{+1,-1}}"),
            Violation::NonPlanar { euler, expected } => {
                write!(f, "Euler check failed: V - E + F = {euler}, expected {expected}")
            }
        }
    }
}

impl PDDiagram {
    pub fn unknot() -> Self {
        PDDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    /// Builds a diagram and relabels its edges densely in traversal order.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = PDDiagram { crossings, free_loops };
        let report = d.validate();
        if !report.is_empty() {
            let msg: Vec<String> = report.iter().map(|v| v.to_string()).collect();
            return Err(KnotError::Validity(msg.join("; ")));
        }
        Ok(d.canonical_labels())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Endpoint tables; assumes labels are `0..2n` and orientation-consistent.
    pub fn topology(&self) -> Topology {
        let m = self.edge_count();
        let mut head = vec![(usize::MAX, 0); m];
        let mut tail = vec![(usize::MAX, 0); m];
        for (ci, x) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                let e = x.edges[s];
                if x.is_incoming(s) {
                    head[e] = (ci, s);
                } else {
                    tail[e] = (ci, s);
                }
            }
        }
        Topology { head, tail }
    }

    /// Edge following `e` along its strand.
    pub fn next_edge(&self, topo: &Topology, e: usize) -> usize {
        let (c, s) = topo.head[e];
        self.crossings[c].edges[(s + 2) % 4]
    }

    /// Edge cycles of the strands that meet crossings, in traversal order.
    pub fn strand_cycles(&self) -> Vec<Vec<usize>> {
        let topo = self.topology();
        let mut seen = vec![false; self.edge_count()];
        let mut out = Vec::new();
        for start in 0..self.edge_count() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                cyc.push(e);
                e = self.next_edge(&topo, e);
            }
            out.push(cyc);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Relabels edges densely in traversal order, starting each component
    /// at the lowest (crossing, slot) position not yet visited.
    pub fn canonical_labels(&self) -> Self {
        let mut ends: BTreeMap<usize, Vec<Endpoint>> = BTreeMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                ends.entry(x.edges[s]).or_default().push((ci, s));
            }
        }
        let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 0usize;
        for ci in 0..self.crossings.len() {
            for s0 in 0..4 {
                let x = &self.crossings[ci];
                if !x.is_incoming(s0) || relabel.contains_key(&x.edges[s0]) {
                    continue;
                }
                let mut e = x.edges[s0];
                let (mut c, mut s) = (ci, s0);
                while !relabel.contains_key(&e) {
                    relabel.insert(e, next);
                    next += 1;
                    let out_slot = (s + 2) % 4;
                    let ne = self.crossings[c].edges[out_slot];
                    let far = ends[&ne]
                        .iter()
                        .copied()
                        .find(|&p| p != (c, out_slot))
                        .unwrap_or((c, out_slot));
                    e = ne;
                    c = far.0;
                    s = far.1;
                }
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing { edges: x.edges.map(|e| relabel[&e]), sign: x.sign })
            .collect();
        PDDiagram { crossings, free_loops: self.free_loops }
    }

    /// All violated diagram invariants; empty iff the diagram is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut uses: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                out.push(Violation::BadSign(ci));
                continue;
            }
            for s in 0..4 {
                let u = uses.entry(x.edges[s]).or_default();
                u.0 += 1;
                if x.is_incoming(s) {
                    u.1 += 1;
                }
            }
        }
        for (&e, &(n, inc)) in &uses {
            match n {
                1 => out.push(Violation::DanglingEdge(e)),
                2 if inc != 1 => out.push(Violation::OrientationMismatch(e)),
                2 => {}
                _ => out.push(Violation::OverusedEdge(e, n)),
            }
        }
        if !out.is_empty() {
            return out;
        }
        let dense = self.canonical_labels();
        let (euler, expected) = dense.euler_check();
        if euler != expected {
            out.push(Violation::NonPlanar { euler, expected });
        }
        out
    }

    /// `(V - E + F, 2 * graph components)` for the crossing graph.
    pub fn euler_check(&self) -> (i64, i64) {
        let v = self.crossings.len() as i64;
        let e = self.edge_count() as i64;
        let f = self.faces().len() as i64;
        let topo = self.topology();
        let mut parent: Vec<usize> = (0..self.crossings.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for ei in 0..self.edge_count() {
            let a = find(&mut parent, topo.head[ei].0);
            let b = find(&mut parent, topo.tail[ei].0);
            parent[a] = b;
        }
        let comps = (0..self.crossings.len()).filter(|&i| find(&mut parent, i) == i).count();
        (v - e + f, 2 * comps as i64)
    }

    fn dart_target(&self, topo: &Topology, d: Dart) -> Endpoint {
        if d.forward {
            topo.head[d.edge]
        } else {
            topo.tail[d.edge]
        }
    }

    /// The dart leaving crossing `c` through `slot`.
    pub fn dart_from(&self, topo: &Topology, c: usize, slot: usize) -> Dart {
        let e = self.crossings[c].edges[slot];
        Dart { edge: e, forward: topo.tail[e] == (c, slot) }
    }

    /// Dart following `d` around the face on its left.
    pub fn face_successor(&self, topo: &Topology, d: Dart) -> Dart {
        let (c, s) = self.dart_target(topo, d);
        self.dart_from(topo, c, (s + 3) % 4)
    }

    /// Faces as dart cycles; each face lies to the left of its darts.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let topo = self.topology();
        let m = self.edge_count();
        let mut seen = vec![false; 2 * m];
        let idx = |d: Dart| 2 * d.edge + usize::from(!d.forward);
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            let mut d = Dart { edge: start / 2, forward: start % 2 == 0 };
            let mut face = Vec::new();
            while !seen[idx(d)] {
                seen[idx(d)] = true;
                face.push(d);
                d = self.face_successor(&topo, d);
            }
            faces.push(face);
        }
        faces
    }

    /// Seifert circles as edge cycles under the oriented smoothing.
    pub fn seifert_circles(&self) -> Vec<Vec<usize>> {
        let topo = self.topology();
        let m = self.edge_count();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                cyc.push(e);
                let (c, s) = topo.head[e];
                let x = &self.crossings[c];
                e = x.edges[x.seifert_out(s)];
            }
            out.push(cyc);
        }
        out
    }

    pub fn crossing_change(&self, c: usize) -> Result<Self> {
        if c >= self.crossings.len() {
            return Err(KnotError::UnknownCrossing(c));
        }
        let mut d = self.clone();
        d.crossings[c] = d.crossings[c].changed();
        Ok(d)
    }

    /// Changes every crossing listed in `cs`.
    pub fn crossing_changes(&self, cs: &[usize]) -> Result<Self> {
        let mut d = self.clone();
        for &c in cs {
            d = d.crossing_change(c)?;
        }
        Ok(d)
    }

    pub fn mirror(&self) -> Self {
        PDDiagram {
            crossings: self.crossings.iter().map(Crossing::changed).collect(),
            free_loops: self.free_loops,
        }
    }

    /// One crossing per line, `X[a,b,c,d] sign=±1`, with 1-based labels; a
    /// trailing `loops=k` line records crossingless components.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for x in &self.crossings {
            let [a, b, c, d] = x.edges.map(|e| e + 1);
            out.push_str(&format!("X[{a},{b},{c},{d}] sign={:+}\n", x.sign));
        }
        if self.free_loops > 0 {
            out.push_str(&format!("loops={}\n", self.free_loops));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut loops = 0;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(v) = line.strip_prefix("loops=") {
                loops = v.trim().parse().map_err(|_| KnotError::Parse(line.to_string()))?;
                continue;
            }
            let bad = || KnotError::Parse(format!("bad PD line {line:?}"));
            let body = line.strip_prefix("X[").ok_or_else(bad)?;
            let (labels, rest) = body.split_once(']').ok_or_else(bad)?;
            let nums: Vec<usize> = labels
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if nums.len() != 4 || nums.contains(&0) {
                return Err(bad());
            }
            let sign: i8 = rest
                .trim()
                .strip_prefix("sign=")
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?;
            crossings.push(Crossing { edges: [nums[0] - 1, nums[1] - 1, nums[2] - 1, nums[3] - 1], sign });
        }
        PDDiagram::from_crossings(crossings, loops)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Positive trefoil as the closure of the 2-braid with three positive
    /// letters, written out by hand.
    pub fn trefoil() -> PDDiagram {
        let x1 = Crossing::new([0, 2, 3, 1], 1);
        let x2 = Crossing::new([2, 4, 5, 3], 1);
        let x3 = Crossing::new([4, 0, 1, 5], 1);
        PDDiagram::from_crossings(vec![x1, x2, x3], 0).unwrap()
    }

    #[test]
    fn trefoil_is_valid_knot() {
        let t = trefoil();
        assert!(t.validate().is_empty());
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.writhe(), 3);
        assert_eq!(t.faces().len(), 5);
        assert_eq!(t.seifert_circles().len(), 2);
    }

    #[test]
    fn crossing_change_is_involution() {
        let t = trefoil();
        for c in 0..3 {
            let once = t.crossing_change(c).unwrap();
            assert_ne!(once, t);
            assert_eq!(once.crossings[c].sign, -1);
            assert_eq!(once.crossing_change(c).unwrap(), t);
        }
        assert_eq!(t.mirror().mirror(), t);
        assert!(t.crossing_change(3).is_err());
    }

    #[test]
    fn dangling_edge_reported() {
        let mut t = trefoil();
        t.crossings[0].edges[1] = 17;
        let report = t.validate();
        assert!(report.contains(&Violation::DanglingEdge(17)));
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // Reversing the rotation at one crossing keeps every edge used twice
        // and consistently oriented but leaves a torus embedding.
        let mut t = trefoil();
        let x = t.crossings[1];
        // reverse the cyclic order (mirror rotation) at a single crossing
        t.crossings[1] = Crossing::new([x.edges[0], x.edges[3], x.edges[2], x.edges[1]], -x.sign);
        let report = t.validate();
        assert!(
            report.iter().any(|v| matches!(v, Violation::NonPlanar { .. })),
            "{report:?}"
        );
    }

    #[test]
    fn text_round_trip() {
        let t = trefoil();
        let s = t.render();
        assert_eq!(PDDiagram::parse(&s).unwrap(), t);
        assert_eq!(PDDiagram::parse("loops=1").unwrap(), PDDiagram::unknot());
        assert!(PDDiagram::parse("X[1,2,3] sign=+1").is_err());
    }
}
