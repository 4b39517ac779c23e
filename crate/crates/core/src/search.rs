//! Randomized discovery pipeline: inflate, braid, flip random letters,
//! simplify and identify. Every trial is reproducible from its own seed.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::{vogel_braid, BraidWord};
use crate::error::{KnotError, Result};
use crate::identify::{Chirality, KnotTable};
use crate::invariants::{fingerprint, Fingerprint};
use crate::moves::{backtrack_randomize, simplify_global};
use crate::pd::PDDiagram;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub trials: usize,
    /// Letters flipped per trial.
    pub k_changes: usize,
    pub n_backtrack: usize,
    /// Largest simplified diagram whose table match counts as a hit.
    pub max_crossings_for_id: usize,
    /// Inflated diagrams larger than this are not braided.
    pub max_vogel_crossings: usize,
    /// Random-walk budget of the per-trial simplification.
    pub budget: usize,
    pub targets: Vec<String>,
    /// Label under which trials matching the base knot are reported.
    pub base_name: Option<String>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            trials: 1,
            k_changes: 2,
            n_backtrack: 30,
            max_crossings_for_id: 16,
            max_vogel_crossings: 120,
            budget: 2_000,
            targets: Vec::new(),
            base_name: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(KnotError::InvalidArgument("trials must be at least 1".into()));
        }
        Ok(())
    }

    /// Flat `key=value` lines; `#` starts a comment.
    pub fn parse_kv(text: &str) -> Result<Self> {
        let mut cfg = SearchConfig::default();
        for line in text.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty()) {
            let (k, v) = line.split_once('=').ok_or_else(|| KnotError::Parse(format!("bad config line {line:?}")))?;
            let (k, v) = (k.trim(), v.trim());
            let num = || v.parse::<usize>().map_err(|_| KnotError::Parse(format!("bad value for {k}: {v:?}")));
            match k {
                "seed" => cfg.seed = v.parse().map_err(|_| KnotError::Parse(format!("bad seed {v:?}")))?,
                "trials" => cfg.trials = num()?,
                "k" | "k_changes" => cfg.k_changes = num()?,
                "backtrack" | "n_backtrack" => cfg.n_backtrack = num()?,
                "max_crossings_for_id" => cfg.max_crossings_for_id = num()?,
                "max_vogel_crossings" => cfg.max_vogel_crossings = num()?,
                "budget" => cfg.budget = num()?,
                "base_name" => cfg.base_name = Some(v.to_string()),
                "targets" => {
                    cfg.targets = v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
                }
                _ => return Err(KnotError::Parse(format!("unknown config key {k:?}"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub trial: usize,
    pub trial_seed: u64,
    /// Braid before the flips.
    pub braid: BraidWord,
    pub flips: Vec<usize>,
    pub name: String,
    pub chirality: Chirality,
    pub fingerprint: Fingerprint,
}

/// What one trial produced.
#[derive(Clone, Debug)]
pub enum TrialOutcome {
    Identified { braid: BraidWord, flips: Vec<usize>, matches: Vec<(String, Chirality)>, fingerprint: Fingerprint, hit: bool },
    Unidentified { braid: BraidWord, flips: Vec<usize>, fingerprint: Fingerprint },
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub trial: usize,
    pub trial_seed: u64,
    pub outcome: TrialOutcome,
}

impl fmt::Display for TrialRecord {
    /// `trial seed braid flips result fingerprint`, tab separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flips = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match &self.outcome {
            TrialOutcome::Identified { braid, flips: fl, matches, fingerprint, hit } => {
                let names: Vec<String> = matches.iter().map(|(n, c)| format!("{n}:{c}")).collect();
                let tag = if *hit { "hit" } else { "known" };
                write!(
                    f,
                    "{}\t{}\t{}\t{}\t{tag}={}\t{}",
                    self.trial,
                    self.trial_seed,
                    braid.render(),
                    flips(fl),
                    names.join("|"),
                    fingerprint
                )
            }
            TrialOutcome::Unidentified { braid, flips: fl, fingerprint } => write!(
                f,
                "{}\t{}\t{}\t{}\tunidentified\t{}",
                self.trial,
                self.trial_seed,
                braid.render(),
                flips(fl),
                fingerprint
            ),
            TrialOutcome::Skipped(why) => write!(f, "{}\t{}\t-\t-\tskipped\t{why}", self.trial, self.trial_seed),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub hits: Vec<SearchHit>,
    /// One record per trial, in trial order.
    pub log: Vec<TrialRecord>,
}

impl PipelineOutput {
    pub fn log_text(&self) -> String {
        self.log.iter().map(|r| format!("{r}\n")).collect()
    }
}

/// Seed of trial `t`: word `t` of the config seed's ChaCha stream.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(2 * trial as u128);
    rng.next_u64()
}

/// Closure of `braid` with `flips` applied, simplified, then fingerprinted.
fn flipped_fingerprint(braid: &BraidWord, flips: &[usize], budget: usize, seed: u64) -> Result<(PDDiagram, Fingerprint)> {
    let d = braid.flip_letters(flips)?.closure();
    let s = simplify_global(&d, budget, seed);
    let fp = Fingerprint::of_diagram(&s)?;
    Ok((s, fp))
}

/// Table matches, or failing those the base knot under its label.
fn matches_for(fp: &Fingerprint, base: &(String, Fingerprint), table: &KnotTable) -> Vec<(String, Chirality)> {
    let mut m = table.lookup(fp);
    let (label, bfp) = base;
    let chirality = if fp == bfp {
        Some(Chirality::AsListed)
    } else if *fp == bfp.mirror() {
        Some(Chirality::Mirror)
    } else {
        None
    };
    if let (Some(c), true) = (chirality, m.is_empty()) {
        m.push((label.clone(), c));
    }
    m
}

fn run_trial(base: &PDDiagram, base_fp: &(String, Fingerprint), cfg: &SearchConfig, table: &KnotTable, trial: usize) -> TrialRecord {
    let seed = trial_seed(cfg.seed, trial);
    let outcome = (|| -> Result<TrialOutcome> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let big = backtrack_randomize(base, cfg.n_backtrack, rng.gen());
        if big.crossing_count() > cfg.max_vogel_crossings {
            return Err(KnotError::Resource(format!("{} crossings before braiding", big.crossing_count())));
        }
        let braid = vogel_braid(&big)?;
        if cfg.k_changes > braid.len() {
            return Err(KnotError::Resource(format!("braid of length {} is too short", braid.len())));
        }
        let mut flips = sample(&mut rng, braid.len(), cfg.k_changes).into_vec();
        flips.sort_unstable();
        let (s, fp) = flipped_fingerprint(&braid, &flips, cfg.budget, rng.gen())?;
        let matches = matches_for(&fp, base_fp, table);
        if matches.is_empty() {
            return Ok(TrialOutcome::Unidentified { braid, flips, fingerprint: fp });
        }
        let hit = matches.iter().any(|(n, _)| cfg.targets.contains(n)) || s.crossing_count() <= cfg.max_crossings_for_id;
        Ok(TrialOutcome::Identified { braid, flips, matches, fingerprint: fp, hit })
    })()
    .unwrap_or_else(|e| TrialOutcome::Skipped(e.to_string()));
    TrialRecord { trial, trial_seed: seed, outcome }
}

/// Runs every trial (in parallel) and merges the log in trial order.
pub fn run_pipeline(base: &PDDiagram, cfg: &SearchConfig, table: &KnotTable) -> Result<PipelineOutput> {
    cfg.validate()?;
    if !base.is_knot() {
        return Err(KnotError::Unsupported("search base must be a knot diagram".into()));
    }
    let label = match &cfg.base_name {
        Some(n) => n.clone(),
        None => format!("BRAID:{}", vogel_braid(base)?.render()),
    };
    let base_fp = (label, fingerprint(base)?);
    let log: Vec<TrialRecord> =
        (0..cfg.trials).into_par_iter().map(|t| run_trial(base, &base_fp, cfg, table, t)).collect();
    let mut hits = Vec::new();
    for r in &log {
        if let TrialOutcome::Identified { braid, flips, matches, fingerprint, hit: true } = &r.outcome {
            for (name, chirality) in matches {
                hits.push(SearchHit {
                    trial: r.trial,
                    trial_seed: r.trial_seed,
                    braid: braid.clone(),
                    flips: flips.clone(),
                    name: name.clone(),
                    chirality: *chirality,
                    fingerprint: fingerprint.clone(),
                });
            }
        }
    }
    Ok(PipelineOutput { hits, log })
}

#[derive(Clone, Debug)]
pub struct ReplayReport {
    pub passed: bool,
    pub lines: Vec<String>,
}

impl fmt::Display for ReplayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        writeln!(f, "{}", if self.passed { "PASS (fingerprint evidence)" } else { "FAIL: hit does not reproduce" })
    }
}

impl SearchHit {
    /// Reads a `hit=` line of the pipeline log; the first listed name is used.
    pub fn parse_log_line(line: &str) -> Result<Self> {
        let bad = |why: &str| KnotError::Parse(format!("{why} in log line {line:?}"));
        let cols: Vec<&str> = line.trim_end_matches(['\r', '\n']).split('\t').collect();
        if cols.len() != 6 {
            return Err(bad("expected 6 tab-separated columns"));
        }
        let trial = cols[0].trim().parse().map_err(|_| bad("bad trial"))?;
        let trial_seed = cols[1].trim().parse().map_err(|_| bad("bad seed"))?;
        let braid = BraidWord::parse(cols[2])?;
        let flips = cols[3]
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| bad("bad flip index")))
            .collect::<Result<Vec<usize>>>()?;
        let first = cols[4].strip_prefix("hit=").ok_or_else(|| bad("not a hit"))?.split('|').next().unwrap_or("");
        let (name, chir) = first.rsplit_once(':').ok_or_else(|| bad("bad match"))?;
        let chirality = match chir {
            "as-listed" => Chirality::AsListed,
            "mirror" => Chirality::Mirror,
            _ => return Err(bad("bad chirality")),
        };
        let fingerprint = cols[5].parse()?;
        Ok(SearchHit { trial, trial_seed, braid, flips, name: name.to_string(), chirality, fingerprint })
    }
}

/// A hit computed directly from a braid and its flips.
pub fn hit_from_flips(braid: &BraidWord, flips: &[usize], table: &KnotTable) -> Result<Option<SearchHit>> {
    let d = braid.flip_letters(flips)?.closure();
    let fp = fingerprint(&d)?;
    Ok(table.lookup(&fp).into_iter().next().map(|(name, chirality)| SearchHit {
        trial: 0,
        trial_seed: 0,
        braid: braid.clone(),
        flips: flips.to_vec(),
        name,
        chirality,
        fingerprint: fp,
    }))
}

/// Fingerprint behind a hit label: a table claim such as `7_1#~7_1`, or a
/// `DT:[..]` / `BRAID:[..]` presentation.
pub fn name_fingerprint(name: &str, table: &KnotTable) -> Result<Fingerprint> {
    if name.starts_with("DT:") || name.starts_with("BRAID:") {
        return fingerprint(&crate::certify::Presentation::parse(name)?.diagram()?);
    }
    table.claim_fingerprint(name)
}

/// Re-applies the stored flips and checks fingerprint and identification.
pub fn replay_hit(h: &SearchHit, table: &KnotTable) -> Result<ReplayReport> {
    let d = h.braid.flip_letters(&h.flips)?.closure();
    let fp = fingerprint(&d)?;
    let same_fp = fp == h.fingerprint;
    let same_id = match name_fingerprint(&h.name, table) {
        Ok(named) => match h.chirality {
            Chirality::AsListed => fp == named,
            Chirality::Mirror => fp == named.mirror(),
        },
        Err(_) => false,
    };
    let flips: Vec<String> = h.flips.iter().map(|i| i.to_string()).collect();
    let lines = vec![
        format!("braid {} flips {{{}}}", h.braid.render(), flips.join(",")),
        format!("fingerprint: {}", if same_fp { "reproduced" } else { "differs" }),
        format!("identification {} ({}): {}", h.name, h.chirality, if same_id { "reproduced" } else { "lost" }),
    ];
    Ok(ReplayReport { passed: same_fp && same_id, lines })
}
