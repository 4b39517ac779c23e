//! Vogel's algorithm: braid a diagram by second moves between Seifert
//! circles, then read the word off the nested circles.

use super::BraidWord;
use crate::error::{KnotError, Result};
use crate::moves::{apply_move, Move};
use crate::pd::{Dart, PDDiagram};

const MAX_VOGEL_MOVES: usize = 1_000;

fn circle_index(d: &PDDiagram) -> (Vec<Vec<usize>>, Vec<usize>) {
    let circles = d.seifert_circles();
    let mut of = vec![0; d.edge_count()];
    for (i, c) in circles.iter().enumerate() {
        for &e in c {
            of[e] = i;
        }
    }
    (circles, of)
}

/// A face touching two Seifert circles that run the same way around it.
fn defect(d: &PDDiagram, circle_of: &[usize]) -> Option<(Dart, Dart)> {
    for f in d.faces() {
        for (i, &a) in f.iter().enumerate() {
            for &b in &f[i + 1..] {
                if a.forward == b.forward && circle_of[a.edge] != circle_of[b.edge] {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

/// Applies Vogel moves until the diagram is braided.
pub fn vogel_braided(d: &PDDiagram) -> Result<PDDiagram> {
    let mut cur = d.clone();
    for _ in 0..MAX_VOGEL_MOVES {
        let (_, of) = circle_index(&cur);
        match defect(&cur, &of) {
            None => return Ok(cur),
            Some((a, b)) => cur = apply_move(&cur, &Move::R2Plus { a, b, a_over: true })?,
        }
    }
    Err(KnotError::Resource("Vogel move limit".into()))
}

/// Braid word whose closure is isotopic to `d`.
pub fn vogel_braid(d: &PDDiagram) -> Result<BraidWord> {
    if d.crossings.is_empty() {
        return BraidWord::with_strands(Vec::new(), d.free_loops.max(1));
    }
    if d.free_loops > 0 {
        return Err(KnotError::Unsupported("free loops alongside crossings".into()));
    }
    let b = vogel_braided(d)?;
    read_braid(&b)
}

fn read_braid(d: &PDDiagram) -> Result<BraidWord> {
    let (circles, of) = circle_index(d);
    let k = circles.len();
    let topo = d.topology();
    let ends: Vec<(usize, usize)> = d
        .crossings
        .iter()
        .map(|x| {
            let other = if x.sign > 0 { x.edges[3] } else { x.edges[1] };
            (of[x.edges[0]], of[other])
        })
        .collect();
    let mut adj = vec![Vec::new(); k];
    for &(p, q) in &ends {
        if p == q {
            return Err(KnotError::Validity("crossing joins a Seifert circle to itself".into()));
        }
        if !adj[p].contains(&q) {
            adj[p].push(q);
            adj[q].push(p);
        }
    }
    let not_braided = || KnotError::Validity("Seifert graph is not a path".into());
    if adj.iter().any(|a| a.len() > 2) {
        return Err(not_braided());
    }
    let start = (0..k).find(|&c| adj[c].len() <= 1).ok_or_else(not_braided)?;
    let mut order = vec![start];
    while order.len() < k {
        let last = *order.last().unwrap();
        let next = adj[last].iter().copied().find(|c| !order.contains(c)).ok_or_else(not_braided)?;
        order.push(next);
    }
    let mut level = vec![0; k];
    for (l, &c) in order.iter().enumerate() {
        level[c] = l;
    }
    let lists: Vec<Vec<usize>> = order.iter().map(|&c| circles[c].iter().map(|&e| topo.head[e].0).collect()).collect();
    let low = |x: usize| level[ends[x].0].min(level[ends[x].1]);

    // rotate every list so a single ray from the inside out misses all crossings
    let mut cut = vec![0usize; k];
    for l in 0..k.saturating_sub(1) {
        let len = lists[l].len();
        let x = (1..=len)
            .map(|back| lists[l][(cut[l] + len - back) % len])
            .find(|&x| low(x) == l)
            .ok_or_else(not_braided)?;
        cut[l + 1] = (lists[l + 1].iter().position(|&y| y == x).unwrap() + 1) % lists[l + 1].len();
    }
    let seq: Vec<Vec<usize>> = (0..k)
        .map(|l| {
            let v = &lists[l];
            v[cut[l]..].iter().chain(&v[..cut[l]]).copied().collect()
        })
        .collect();
    let mut ptr = vec![0usize; k];
    let mut letters = Vec::with_capacity(d.crossing_count());
    while letters.len() < d.crossing_count() {
        let pick = (0..k.saturating_sub(1)).find(|&l| {
            seq[l].get(ptr[l]).is_some_and(|&x| low(x) == l && seq[l + 1].get(ptr[l + 1]) == Some(&x))
        });
        let l = pick.ok_or_else(|| KnotError::Validity("inconsistent braid readout".into()))?;
        let x = seq[l][ptr[l]];
        ptr[l] += 1;
        ptr[l + 1] += 1;
        letters.push((l as i32 + 1) * d.crossings[x].sign as i32);
    }
    BraidWord::with_strands(letters, k)
}
