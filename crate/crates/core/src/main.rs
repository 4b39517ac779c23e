use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use knotkit::braid::vogel_braid;
use knotkit::codes::pd_to_dt;
use knotkit::identify::{bundled_table, identify, KnotTable};
use knotkit::invariants::{fingerprint, murasugi_bound};
use knotkit::moves::simplify_global;
use knotkit::search::{replay_hit, run_pipeline, SearchConfig, SearchHit};
use knotkit::transcript::{verify_paper, STEP_COUNT};
use knotkit::{BraidWord, DTCode, GaussCode, KnotError, PDDiagram};

#[derive(Parser)]
#[command(name = "knotkit", version, about = "Knot diagram kernel: invariants, moves, certificates and search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a diagram as PD, DT, Gauss code and braid word.
    Convert(InputArgs),
    /// Print the fingerprint invariants and the signature bound.
    Invariants(InputArgs),
    /// Simplify a diagram with the seeded global strategy.
    Simplify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = knotkit::moves::DEFAULT_GLOBAL_BUDGET)]
        budget: usize,
    },
    /// Look a diagram up in the reference table.
    Identify {
        #[command(flatten)]
        input: InputArgs,
        /// Print the reference table and exit.
        #[arg(long)]
        dump_table: bool,
    },
    /// Re-check the 7_1 # mirror 7_1 unknotting bound end to end.
    VerifyPaper {
        /// Run only this step (1-5).
        #[arg(long)]
        step: Option<usize>,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Run the randomized crossing-change search.
    Search(SearchArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long, group = "input")]
    dt: Option<String>,
    #[arg(long, group = "input")]
    braid: Option<String>,
    /// Table name, `~name` for the mirror, `a#b` for a connected sum.
    #[arg(long, group = "input")]
    name: Option<String>,
    /// File with one `X[a,b,c,d]` line per crossing.
    #[arg(long, group = "input")]
    pd: Option<PathBuf>,
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// DT code, braid word, or table name expression.
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    backtrack: Option<usize>,
    /// Comma-separated names that count as hits.
    #[arg(long)]
    targets: Option<String>,
    /// `key=value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Re-check one `hit=` line of a previous log.
    #[arg(long)]
    replay: Option<String>,
    #[arg(long)]
    table: Option<PathBuf>,
}

enum Failure {
    Check(String),
    Error(KnotError),
}

impl From<KnotError> for Failure {
    fn from(e: KnotError) -> Self {
        Failure::Error(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn load_table(path: Option<&PathBuf>) -> Result<KnotTable, Failure> {
    let r = match path {
        Some(p) => KnotTable::load(p, true),
        None => bundled_table(),
    };
    r.map_err(|e| Failure::Check(format!("table integrity check failed: {e}")))
}

fn diagram_from_text(text: &str, table: &KnotTable) -> knotkit::Result<PDDiagram> {
    let t = text.trim();
    if t.starts_with("DT:") || t.starts_with('[') {
        return DTCode::parse(t)?.realize();
    }
    if let Some(rest) = t.strip_prefix("BRAID:") {
        return Ok(BraidWord::parse(rest)?.closure());
    }
    table.claim_diagram(t)
}

impl InputArgs {
    fn diagram(&self, table: &KnotTable) -> knotkit::Result<PDDiagram> {
        if let Some(s) = &self.dt {
            DTCode::parse(s)?.realize()
        } else if let Some(s) = &self.braid {
            Ok(BraidWord::parse(s)?.closure())
        } else if let Some(s) = &self.name {
            table.claim_diagram(s)
        } else if let Some(p) = &self.pd {
            let text = std::fs::read_to_string(p)
                .map_err(|e| KnotError::InvalidArgument(format!("{}: {e}", p.display())))?;
            PDDiagram::parse(&text)
        } else {
            Err(KnotError::InvalidArgument("give one of --dt, --braid, --name, --pd".into()))
        }
    }
}

fn convert(input: &InputArgs) -> Outcome {
    let table = load_table(input.table.as_ref())?;
    let d = input.diagram(&table)?;
    println!("crossings: {}", d.crossing_count());
    println!("components: {}", d.component_count());
    println!("writhe: {}", d.writhe());
    print!("{}", d.render());
    if d.is_knot() {
        println!("dt: {}", pd_to_dt(&d)?);
    }
    println!("gauss: {}", GaussCode::from_pd(&d).render());
    match vogel_braid(&d) {
        Ok(w) => println!("braid: {}", w.render()),
        Err(e) => println!("braid: unavailable ({e})"),
    }
    Ok(())
}

fn invariants(input: &InputArgs) -> Outcome {
    let table = load_table(input.table.as_ref())?;
    let d = input.diagram(&table)?;
    let fp = fingerprint(&d)?;
    println!("alexander: {}", fp.alexander.render("t"));
    println!("jones: {}", fp.jones.render_half("t"));
    println!("signature: {}", fp.signature);
    println!("determinant: {}", fp.determinant);
    println!("crossings: {} (after simplification)", fp.min_crossings_seen);
    println!("murasugi bound: u >= {}", murasugi_bound(&d)?);
    Ok(())
}

fn simplify(input: &InputArgs, seed: u64, budget: usize) -> Outcome {
    let table = load_table(input.table.as_ref())?;
    let d = input.diagram(&table)?;
    let s = simplify_global(&d, budget, seed);
    println!("crossings: {} -> {}", d.crossing_count(), s.crossing_count());
    print!("{}", s.render());
    Ok(())
}

fn identify_cmd(input: &InputArgs, dump: bool) -> Outcome {
    let table = load_table(input.table.as_ref())?;
    if dump {
        print!("{}", table.render());
        return Ok(());
    }
    let d = input.diagram(&table)?;
    let ids = identify(&d, &table)?;
    if ids.is_empty() {
        println!("no match (fingerprint evidence)");
    }
    for (name, chir) in ids {
        println!("{name} ({chir}) (fingerprint evidence)");
    }
    Ok(())
}

fn verify(step: Option<usize>, table: Option<&PathBuf>) -> Outcome {
    if let Some(s) = step {
        if !(1..=STEP_COUNT).contains(&s) {
            return Err(KnotError::InvalidArgument(format!("step must be 1..{STEP_COUNT}")).into());
        }
    }
    let table = load_table(table)?;
    let t = verify_paper(&table, step);
    print!("{t}");
    match t.failure {
        None => Ok(()),
        Some((s, why)) => Err(Failure::Check(format!("step {s} failed: {why}"))),
    }
}

fn search(a: &SearchArgs) -> Outcome {
    let table = load_table(a.table.as_ref())?;
    if let Some(line) = &a.replay {
        let hit = SearchHit::parse_log_line(line)?;
        let r = replay_hit(&hit, &table)?;
        print!("{r}");
        return if r.passed { Ok(()) } else { Err(Failure::Check("replay did not reproduce the hit".into())) };
    }
    let mut cfg = match &a.config {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| KnotError::InvalidArgument(format!("{}: {e}", p.display())))?;
            let cfg = SearchConfig::parse_kv(&text)?;
            if a.seed.is_none() && !text.lines().any(|l| l.trim_start().starts_with("seed")) {
                return Err(KnotError::InvalidArgument("a seed is required (--seed or seed= in the config)".into()).into());
            }
            cfg
        }
        None if a.seed.is_none() => {
            return Err(KnotError::InvalidArgument("--seed is required".into()).into());
        }
        None => SearchConfig::default(),
    };
    if let Some(v) = a.seed {
        cfg.seed = v;
    }
    if let Some(v) = a.trials {
        cfg.trials = v;
    }
    if let Some(v) = a.k {
        cfg.k_changes = v;
    }
    if let Some(v) = a.budget {
        cfg.budget = v;
    }
    if let Some(v) = a.backtrack {
        cfg.n_backtrack = v;
    }
    if let Some(v) = &a.targets {
        cfg.targets = v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
    }
    cfg.validate()?;
    let base = a.base.as_deref().ok_or_else(|| KnotError::InvalidArgument("--base is required".into()))?;
    let d = diagram_from_text(base, &table)?;
    let is_code = ["DT:", "BRAID:", "["].iter().any(|p| base.trim().starts_with(p));
    if cfg.base_name.is_none() && !is_code {
        cfg.base_name = Some(base.trim().to_string());
    }
    let out = run_pipeline(&d, &cfg, &table)?;
    print!("{}", out.log_text());
    let hit_trials = out.log.iter().filter(|r| out.hits.iter().any(|h| h.trial == r.trial)).count();
    println!("summary: trials={} hits={} hit_trials={}", out.log.len(), out.hits.len(), hit_trials);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.command {
        Command::Convert(i) => convert(i),
        Command::Invariants(i) => invariants(i),
        Command::Simplify { input, seed, budget } => simplify(input, *seed, *budget),
        Command::Identify { input, dump_table } => identify_cmd(input, *dump_table),
        Command::VerifyPaper { step, table } => verify(*step, table.as_ref()),
        Command::Search(a) => search(a),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(why)) => {
            eprintln!("FAIL: {why}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
