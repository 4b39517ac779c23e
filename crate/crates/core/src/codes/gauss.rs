use crate::error::{KnotError, Result};
use crate::pd::{Crossing, PDDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussVisit {
    pub crossing: usize,
    pub over: bool,
    pub sign: i8,
}

/// Signed Gauss code: one visit sequence per component with crossings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub components: Vec<Vec<GaussVisit>>,
}

impl GaussCode {
    pub fn from_pd(d: &PDDiagram) -> Self {
        let topo = d.topology();
        let components = d
            .strand_cycles()
            .into_iter()
            .map(|cycle| {
                cycle
                    .into_iter()
                    .map(|e| {
                        let (c, s) = topo.head[e];
                        GaussVisit { crossing: c, over: Crossing::is_over(s), sign: d.crossings[c].sign }
                    })
                    .collect()
            })
            .collect();
        GaussCode { components }
    }

    /// Every crossing appears exactly twice, once over and once under.
    pub fn validate(&self) -> Result<()> {
        let mut seen: std::collections::BTreeMap<usize, (u32, u32)> = Default::default();
        for v in self.components.iter().flatten() {
            let entry = seen.entry(v.crossing).or_default();
            if v.over {
                entry.0 += 1;
            } else {
                entry.1 += 1;
            }
        }
        for (c, (o, u)) in seen {
            if (o, u) != (1, 1) {
                return Err(KnotError::Validity(format!("crossing {c} visited {o} over, {u} under")));
            }
        }
        Ok(())
    }

    /// Conventional text form, e.g. `O1+ U2+ O3+ U1+ O2+ U3+` (1-based).
    pub fn render(&self) -> String {
        self.components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|v| {
                        format!(
                            "{}{}{}",
                            if v.over { 'O' } else { 'U' },
                            v.crossing + 1,
                            if v.sign > 0 { '+' } else { '-' }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::realize_dt;
    use crate::codes::DTCode;

    #[test]
    fn trefoil_gauss_code_alternates() {
        let d = realize_dt(&DTCode::new(vec![4, 6, 2]).unwrap()).unwrap();
        let g = GaussCode::from_pd(&d);
        g.validate().unwrap();
        assert_eq!(g.components.len(), 1);
        let overs: Vec<bool> = g.components[0].iter().map(|v| v.over).collect();
        assert!(overs.windows(2).all(|w| w[0] != w[1]));
    }
}
