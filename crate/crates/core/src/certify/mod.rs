//! Unknotting certificates: presentations with crossing changes, checked
//! step by step against fingerprint claims.

use std::fmt;

use crate::braid::BraidWord;
use crate::codes::DTCode;
use crate::error::{KnotError, Result};
use crate::identify::{fingerprint_evidence, KnotTable, Verdict, CODE_10_139, KA, KC, UNKNOT};
use crate::invariants::{fingerprint, Fingerprint};
use crate::moves::{simplify_global, DEFAULT_GLOBAL_BUDGET};
use crate::pd::PDDiagram;

pub const SUM_BRAID: [i32; 20] = [1, -4, 2, 3, 3, 3, 2, 3, 2, 2, 4, -3, -3, -3, -3, -1, -3, -2, -3, -3];
/// Seed of the final unknotting simplification.
const FINAL_SEED: u64 = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Dt(DTCode),
    Braid(BraidWord),
}

impl Presentation {
    /// The diagram; crossing `i` is DT entry `i` or braid letter `i`.
    pub fn diagram(&self) -> Result<PDDiagram> {
        match self {
            Presentation::Dt(c) => c.realize(),
            Presentation::Braid(w) => Ok(w.closure()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Presentation::Dt(c) => c.render(),
            Presentation::Braid(w) => format!("BRAID:{}", w.render()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with("BRAID:") {
            Ok(Presentation::Braid(BraidWord::parse(t)?))
        } else {
            Ok(Presentation::Dt(DTCode::parse(t)?))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateStep {
    pub presentation: Presentation,
    pub flips: Vec<usize>,
    pub before: Option<String>,
    pub after: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnknottingCertificate {
    pub steps: Vec<CertificateStep>,
}

impl UnknottingCertificate {
    pub fn change_count(&self) -> usize {
        self.steps.iter().map(|s| s.flips.len()).sum()
    }

    /// Appends the steps of `other`.
    pub fn then(mut self, other: UnknottingCertificate) -> Self {
        self.steps.extend(other.steps);
        self
    }

    /// Blocks of `step:`, `presentation:`, `flip:`, `before:`, `after:` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let flips: Vec<String> = s.flips.iter().map(|i| i.to_string()).collect();
            out.push_str("step:\n");
            out.push_str(&format!("presentation: {}\n", s.presentation.render()));
            out.push_str(&format!("flip: {}\n", flips.join(",")));
            out.push_str(&format!("before: {}\n", s.before.as_deref().unwrap_or("")));
            out.push_str(&format!("after: {}\n\n", s.after.as_deref().unwrap_or("")));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut cur: Option<(Option<Presentation>, Vec<usize>, Option<String>, Option<String>)> = None;
        let finish = |cur: Option<(Option<Presentation>, Vec<usize>, Option<String>, Option<String>)>,
                      steps: &mut Vec<CertificateStep>|
         -> Result<()> {
            if let Some((p, flips, before, after)) = cur {
                let presentation = p.ok_or_else(|| KnotError::Parse("step without presentation".into()))?;
                steps.push(CertificateStep { presentation, flips, before, after });
            }
            Ok(())
        };
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if line == "step:" {
                finish(cur.take(), &mut steps)?;
                cur = Some((None, Vec::new(), None, None));
                continue;
            }
            let (key, value) =
                line.split_once(':').ok_or_else(|| KnotError::Parse(format!("bad certificate line {line:?}")))?;
            let value = value.trim();
            let step = cur.as_mut().ok_or_else(|| KnotError::Parse("field before first step:".into()))?;
            let claim = || (!value.is_empty()).then(|| value.to_string());
            match key.trim() {
                "presentation" => step.0 = Some(Presentation::parse(value)?),
                "flip" => {
                    step.1 = value
                        .split(',')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse().map_err(|_| KnotError::Parse(format!("bad flip index {t:?}"))))
                        .collect::<Result<_>>()?
                }
                "before" => step.2 = claim(),
                "after" => step.3 = claim(),
                k => return Err(KnotError::Parse(format!("unknown certificate field {k:?}"))),
            }
        }
        finish(cur, &mut steps)?;
        Ok(UnknottingCertificate { steps })
    }
}

impl fmt::Display for UnknottingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub lines: Vec<String>,
    /// Step at which checking failed, with the reason.
    pub failure: Option<(usize, String)>,
    /// The verified bound on the unknotting number, on success.
    pub bound: Option<usize>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        match (&self.failure, self.bound) {
            (Some((i, why)), _) => writeln!(f, "FAIL at step {i}: {why}"),
            (None, Some(b)) => writeln!(f, "PASS: unknotting number <= {b} (fingerprint evidence)"),
            (None, None) => writeln!(f, "PASS: fragment verified (fingerprint evidence)"),
        }
    }
}

struct Checker<'a> {
    table: &'a KnotTable,
    lines: Vec<String>,
}

impl Checker<'_> {
    fn claim(&mut self, label: &str, claim: &str, fp: &Fingerprint) -> std::result::Result<(), String> {
        let expected = self.table.claim_fingerprint(claim).map_err(|e| e.to_string())?;
        let report = fingerprint_evidence(fp, &expected);
        self.lines.push(format!("  {label} {claim}: {}", report.verdict));
        if report.verdict == Verdict::Fail {
            let diffs: Vec<&String> = report.comparisons.iter().filter(|c| c.contains("!=")).collect();
            return Err(format!(
                "{label} claim {claim} not matched ({})",
                diffs.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; ")
            ));
        }
        Ok(())
    }

    fn run(&mut self, cert: &UnknottingCertificate, to_unknot: bool) -> std::result::Result<(), (usize, String)> {
        let mut prev: Option<Fingerprint> = None;
        let mut last: Option<PDDiagram> = None;
        for (i, s) in cert.steps.iter().enumerate() {
            let fail = |e: String| (i, e);
            let flips: Vec<String> = s.flips.iter().map(|x| x.to_string()).collect();
            self.lines.push(format!("step {i}: {} flip {{{}}}", s.presentation.render(), flips.join(",")));
            let d = s.presentation.diagram().map_err(|e| fail(e.to_string()))?;
            let fp = fingerprint(&d).map_err(|e| fail(e.to_string()))?;
            if let Some(p) = &prev {
                let v = fingerprint_evidence(&fp, p).verdict;
                self.lines.push(format!("  chain from step {}: {v}", i - 1));
                if v == Verdict::Fail {
                    return Err(fail(format!("presentation does not match the result of step {}", i - 1)));
                }
            }
            if let Some(c) = &s.before {
                self.claim("before", c, &fp).map_err(fail)?;
            }
            let changed = d.crossing_changes(&s.flips).map_err(|e| fail(e.to_string()))?;
            let after = fingerprint(&changed).map_err(|e| fail(e.to_string()))?;
            if let Some(c) = &s.after {
                self.claim("after", c, &after).map_err(fail)?;
            }
            prev = Some(after);
            last = Some(changed);
        }
        if to_unknot {
            let n = cert.steps.len();
            let end = last.unwrap_or_else(PDDiagram::unknot);
            let s = simplify_global(&end, DEFAULT_GLOBAL_BUDGET, FINAL_SEED);
            self.lines.push(format!("final diagram simplifies to {} crossings", s.crossing_count()));
            if !s.crossings.is_empty() {
                return Err((n.saturating_sub(1), format!("final diagram stuck at {} crossings", s.crossing_count())));
            }
        }
        Ok(())
    }
}

fn check(cert: &UnknottingCertificate, table: &KnotTable, to_unknot: bool) -> CertificateReport {
    let mut c = Checker { table, lines: Vec::new() };
    let result = c.run(cert, to_unknot);
    let bound = (to_unknot && result.is_ok()).then(|| cert.change_count());
    CertificateReport { lines: c.lines, failure: result.err(), bound }
}

/// Checks every step and that the last one ends at a diagram that
/// simplifies to the unknot; the bound is the total number of changes.
pub fn check_certificate(cert: &UnknottingCertificate, table: &KnotTable) -> CertificateReport {
    check(cert, table, true)
}

/// Checks the steps of a partial sequence without the final unknot test.
pub fn check_fragment(cert: &UnknottingCertificate, table: &KnotTable) -> CertificateReport {
    check(cert, table, false)
}

fn step(p: Presentation, flips: &[usize], before: Option<&str>, after: Option<&str>) -> CertificateStep {
    CertificateStep { presentation: p, flips: flips.to_vec(), before: before.map(String::from), after: after.map(String::from) }
}

fn dt(v: &[i64]) -> Presentation {
    Presentation::Dt(DTCode::new(v.to_vec()).expect("bundled code is valid"))
}

fn braid(v: Vec<i32>) -> Presentation {
    Presentation::Braid(BraidWord::new(v).expect("bundled braid is valid"))
}

/// Five crossing changes unknotting `7_1 # ~7_1`.
pub fn sum_certificate() -> UnknottingCertificate {
    let kd = DTCode::new(KC.to_vec()).unwrap().flip_entry(6).unwrap();
    UnknottingCertificate {
        steps: vec![
            step(braid(SUM_BRAID.to_vec()), &[0, 1], Some("7_1#~7_1"), Some("K14a18636")),
            step(dt(&KA), &[0], Some("K14a18636"), Some("K15n81556")),
            step(dt(&KC), &[6], Some("K15n81556"), Some("K12n412")),
            step(Presentation::Dt(kd), &[13], Some("K12n412"), Some(UNKNOT)),
        ],
    }
}

/// One change from `10_139` to `7_1`.
pub fn adjacency_certificate_10_139() -> UnknottingCertificate {
    UnknottingCertificate { steps: vec![step(dt(&CODE_10_139), &[4], Some("10_139"), Some("7_1"))] }
}

/// `k - 3` changes from `T(2, 2k+1)` down to `T(2,7)`, one letter of the
/// 2-braid at a time.
pub fn torus_cascade_certificate(k: usize) -> Result<UnknottingCertificate> {
    if k < 3 {
        return Err(KnotError::InvalidArgument(format!("cascade needs k >= 3, got {k}")));
    }
    let steps = (4..=k)
        .rev()
        .map(|j| step(braid(vec![1; 2 * j + 1]), &[0], None, (j == 4).then_some("7_1")))
        .collect();
    Ok(UnknottingCertificate { steps })
}

/// Unknotting certificate for `T(2,2k+1) # ~T(2,2l+1)` with
/// `(k - 3) + (l - 3) + 5` changes: shorten both torus summands of the
/// 3-braid `s1^(2k+1) s2^-(2l+1)` to `7_1 # ~7_1`, then follow the five-change
/// sequence.
pub fn torus_sum_certificate(k: usize, l: usize) -> Result<UnknottingCertificate> {
    if k < 3 || l < 3 {
        return Err(KnotError::InvalidArgument(format!("needs k, l >= 3, got {k}, {l}")));
    }
    let word = |a: usize, b: usize| {
        let mut w = vec![1; 2 * a + 1];
        w.extend(vec![-2; 2 * b + 1]);
        w
    };
    let mut steps = Vec::new();
    for a in (4..=k).rev() {
        steps.push(step(braid(word(a, l)), &[0], None, None));
    }
    for b in (4..=l).rev() {
        steps.push(step(braid(word(3, b)), &[7], None, None));
    }
    if let Some(s) = steps.last_mut() {
        s.after = Some("7_1#~7_1".into());
    }
    Ok(UnknottingCertificate { steps }.then(sum_certificate()))
}

#[cfg(test)]
mod tests;
