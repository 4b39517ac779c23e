use std::fmt;

use crate::pd::PDDiagram;

/// Generators are arcs; letters are `±(g + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    uf[x] = r;
    r
}

pub fn wirtinger(d: &PDDiagram) -> WirtingerPresentation {
    let m = d.edge_count();
    let mut uf: Vec<usize> = (0..m).collect();
    for x in &d.crossings {
        let (a, b) = (find(&mut uf, x.edges[1]), find(&mut uf, x.edges[3]));
        uf[a] = b;
    }
    let mut arc = vec![usize::MAX; m];
    let mut count = 0;
    for e in 0..m {
        let r = find(&mut uf, e);
        if arc[r] == usize::MAX {
            arc[r] = count;
            count += 1;
        }
        arc[e] = arc[r];
    }
    let g = |e: usize| arc[e] as i32 + 1;
    let relators = d
        .crossings
        .iter()
        .map(|x| {
            let (k, i, j) = (g(x.edges[1]), g(x.edges[0]), g(x.edges[2]));
            if x.sign > 0 {
                vec![k, i, -k, -j]
            } else {
                vec![-k, i, k, -j]
            }
        })
        .collect();
    WirtingerPresentation { generators: count + d.free_loops, relators }
}

fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl WirtingerPresentation {
    /// Rank of the abelianization: every relator identifies two generators.
    pub fn abelianization_rank(&self) -> usize {
        let mut uf: Vec<usize> = (0..self.generators).collect();
        let mut rank = self.generators;
        for r in &self.relators {
            // x_i and x_j (the under-arcs) become equal
            let (i, j) = (r[1].unsigned_abs() as usize - 1, r[3].unsigned_abs() as usize - 1);
            let (a, b) = (find(&mut uf, i), find(&mut uf, j));
            if a != b {
                uf[a] = b;
                rank -= 1;
            }
        }
        rank
    }

    /// Relators that do not freely reduce to the empty word.
    pub fn nontrivial_relators(&self) -> Vec<Vec<i32>> {
        self.relators.iter().map(|r| free_reduce(r)).filter(|r| !r.is_empty()).collect()
    }

    /// True when visibly infinite cyclic: one generator, trivial relators.
    pub fn is_cyclic(&self) -> bool {
        self.generators == 1 && self.nontrivial_relators().is_empty()
    }
}

fn letter(x: i32) -> String {
    let g = x.unsigned_abs() as usize - 1;
    let base = if g < 26 { ((b'a' + g as u8) as char).to_string() } else { format!("x{g}") };
    if x > 0 {
        base
    } else if g < 26 {
        base.to_uppercase()
    } else {
        format!("{base}^-1")
    }
}

impl fmt::Display for WirtingerPresentation {
    /// `Generators: a,b,c Relators: aBCb, ...` with capitals for inverses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators as i32).map(letter).collect();
        let rels: Vec<String> =
            self.nontrivial_relators().iter().map(|r| r.iter().map(|&x| letter(x)).collect()).collect();
        write!(f, "Generators: {} Relators: {}", gens.join(","), rels.join(", "))
    }
}
