//! The end-to-end verification transcript for the `7_1 # ~7_1` bound.

use std::fmt;

use crate::braid::BraidWord;
use crate::certify::{check_certificate, sum_certificate, SUM_BRAID};
use crate::codes::DTCode;
use crate::error::Result;
use crate::identify::{fingerprint_evidence, KnotTable, Verdict, KA, KC};
use crate::invariants::{fingerprint, jones, wirtinger, Fingerprint};
use crate::moves::{deconnect_sum, simplify_global, DEFAULT_GLOBAL_BUDGET};
use crate::pd::PDDiagram;

pub const STEP_COUNT: usize = 5;
const SEED: u64 = 0;

#[derive(Clone, Debug, Default)]
pub struct Transcript {
    pub lines: Vec<String>,
    /// First failing step (1-based) and the reason.
    pub failure: Option<(usize, String)>,
}

impl Transcript {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        if let Some((s, why)) = &self.failure {
            writeln!(f, "FAILED at step {s}: {why}")?;
        }
        Ok(())
    }
}

fn shape(d: &PDDiagram) -> String {
    format!("<Link: {} comp; {} cross>", d.component_count(), d.crossing_count())
}

fn realize(v: &[i64]) -> Result<(DTCode, PDDiagram)> {
    let c = DTCode::new(v.to_vec())?;
    let d = c.realize()?;
    Ok((c, d))
}

struct Run<'a> {
    table: &'a KnotTable,
    lines: Vec<String>,
}

type StepResult = std::result::Result<(), String>;

fn check(ok: bool, why: impl Into<String>) -> StepResult {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

impl Run<'_> {
    fn say(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn fp(&self, d: &PDDiagram) -> std::result::Result<Fingerprint, String> {
        fingerprint(d).map_err(|e| e.to_string())
    }

    fn identify(&mut self, label: &str, fp: &Fingerprint) -> Vec<String> {
        let ids = self.table.lookup(fp);
        let names: Vec<String> = ids.iter().map(|(n, c)| format!("{n} ({c})")).collect();
        self.say(format!("{label} identifies as: [{}] (fingerprint evidence)", names.join(", ")));
        ids.into_iter().map(|(n, _)| n).collect()
    }

    fn same(&mut self, label: &str, a: &Fingerprint, b: &Fingerprint) -> StepResult {
        let r = fingerprint_evidence(a, b);
        self.say(format!("{label} are the same knot? {}", r.verdict));
        check(r.verdict != Verdict::Fail, format!("{label} fingerprints differ"))
    }

    fn step1(&mut self) -> StepResult {
        let w = BraidWord::new(SUM_BRAID.to_vec()).map_err(|e| e.to_string())?;
        let l = w.closure();
        self.say(format!("braid word: {}", w.render()));
        self.say(format!("L = closure: {}", shape(&l)));
        let s = simplify_global(&l, DEFAULT_GLOBAL_BUDGET, SEED);
        self.say(format!("L simplified: {}", shape(&s)));
        let parts = deconnect_sum(&s);
        let shapes: Vec<String> = parts.iter().map(shape).collect();
        self.say(format!("L.deconnect_sum(): [{}]", shapes.join(", ")));
        check(parts.len() == 2, format!("expected 2 summands, got {}", parts.len()))?;
        let seven = self.table.claim_fingerprint("7_1").map_err(|e| e.to_string())?;
        let mut sigs = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            check(p.crossing_count() <= 7, format!("summand {i} has {} crossings", p.crossing_count()))?;
            let fp = self.fp(p)?;
            self.say(format!(
                "summand {i}: alexander {}, signature {}, determinant {}",
                fp.alexander.render("t"),
                fp.signature,
                fp.determinant
            ));
            self.identify(&format!("summand {i}"), &fp);
            check(fp.matches_up_to_mirror(&seven), format!("summand {i} is not 7_1 up to mirror"))?;
            sigs.push(fp.signature);
        }
        sigs.sort_unstable();
        check(sigs == [-6, 6], format!("summand signatures {sigs:?}, expected -6 and 6"))?;
        self.say("summands: 7_1 and its mirror (signatures 6 and -6)");
        Ok(())
    }

    fn step2(&mut self) -> StepResult {
        let w = BraidWord::new(SUM_BRAID.to_vec()).map_err(|e| e.to_string())?;
        let la = w.flip_letters(&[0, 1]).map_err(|e| e.to_string())?;
        self.say(format!("LA = closure of L's braid flipped at indices 0 and 1: {}", la.render()));
        let la_fp = self.fp(&la.closure())?;
        let (ka, kad) = realize(&KA).map_err(|e| e.to_string())?;
        self.say(format!("DT code for KA is {ka}"));
        let ka_fp = self.fp(&kad)?;
        self.same("LA and KA", &la_fp, &ka_fp)?;
        let ids = self.identify("KA", &ka_fp);
        check(ids.iter().any(|n| n == "K14a18636"), "KA is not identified as K14a18636")
    }

    fn step3(&mut self) -> StepResult {
        let ka = DTCode::new(KA.to_vec()).map_err(|e| e.to_string())?;
        let kb = ka.flip_entry(0).map_err(|e| e.to_string())?;
        self.say(format!("DT code for KB (KA flipped at index 0) is {kb}"));
        let kb_fp = self.fp(&kb.realize().map_err(|e| e.to_string())?)?;
        let (kc, kcd) = realize(&KC).map_err(|e| e.to_string())?;
        self.say(format!("DT code for KC is {kc}"));
        let kc_fp = self.fp(&kcd)?;
        self.same("KB and KC", &kb_fp, &kc_fp)?;
        let ids = self.identify("KB", &kb_fp);
        check(ids.iter().any(|n| n == "K15n81556"), "KB is not identified as K15n81556")?;
        let kd = kc.flip_entry(6).map_err(|e| e.to_string())?;
        self.say(format!("DT code for KD (KC flipped at index 6) is {kd}"));
        let kd_fp = self.fp(&kd.realize().map_err(|e| e.to_string())?)?;
        let ids = self.identify("KD", &kd_fp);
        check(ids.iter().any(|n| n == "K12n412"), "KD is not identified as K12n412")
    }

    fn step4(&mut self) -> StepResult {
        let kd = DTCode::new(KC.to_vec()).and_then(|c| c.flip_entry(6)).map_err(|e| e.to_string())?;
        let ke = kd.flip_entry(13).map_err(|e| e.to_string())?;
        self.say(format!("DT code for KE (KD flipped at index 13) is {ke}"));
        let d = ke.realize().map_err(|e| e.to_string())?;
        let v = jones(&d).map_err(|e| e.to_string())?;
        self.say(format!("Jones polynomial of KE: {}", v.render_half("t")));
        let s = simplify_global(&d, DEFAULT_GLOBAL_BUDGET, SEED);
        self.say(format!("KE simplified: {}", shape(&s)));
        check(s.crossings.is_empty(), format!("KE is stuck at {} crossings", s.crossing_count()))?;
        check(v.is_one(), "Jones polynomial of KE is not 1")?;
        let g = wirtinger(&s);
        self.say(format!("Knot group for KE: {g}"));
        check(g.is_cyclic(), "knot group of KE is not visibly cyclic")?;
        self.say("KE is the unknot");
        Ok(())
    }

    fn step5(&mut self) -> StepResult {
        let cert = sum_certificate();
        let r = check_certificate(&cert, self.table);
        for l in &r.lines {
            self.say(l.clone());
        }
        match (&r.failure, r.bound) {
            (None, Some(b)) => {
                let parts: Vec<String> = cert.steps.iter().map(|s| s.flips.len().to_string()).collect();
                self.say(format!("changes: {} = {}", parts.join(" + "), cert.change_count()));
                self.say(format!("bound: u(7_1 # mirror 7_1) ≤ {b}"));
                check(b == 5, format!("certified bound {b}, expected 5"))
            }
            (Some((i, why)), _) => Err(format!("certificate step {i}: {why}")),
            (None, None) => Err("certificate produced no bound".into()),
        }
    }
}

/// Runs all steps, or only `step` (1-based).
pub fn verify_paper(table: &KnotTable, step: Option<usize>) -> Transcript {
    let mut run = Run { table, lines: Vec::new() };
    let titles = [
        "closure of the braid word and its summands",
        "crossing changes at braid indices 0 and 1",
        "the DT chain through K15n81556 and K12n412",
        "the last change gives the unknot",
        "the unknotting certificate",
    ];
    let mut failure = None;
    for (i, title) in titles.iter().enumerate() {
        let n = i + 1;
        if step.is_some_and(|s| s != n) {
            continue;
        }
        run.say(format!("== Step {n}: {title}"));
        let r = match n {
            1 => run.step1(),
            2 => run.step2(),
            3 => run.step3(),
            4 => run.step4(),
            _ => run.step5(),
        };
        match r {
            Ok(()) => run.say(format!("Step {n}: PASS")),
            Err(why) => {
                run.say(format!("Step {n}: FAIL"));
                failure = Some((n, why));
                break;
            }
        }
    }
    Transcript { lines: run.lines, failure }
}
