//! Command-line front end: parses the block format, runs a subcommand and
//! renders its report as text or JSON.
//!
//! Exit codes: 0 success, 1 property violation, 2 parse error, 3 infeasible
//! input.

pub mod input;
pub mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use boolspace::counterexamples::{
    bounded_family, contraction_obstruction_witness, isometry_obstruction_witness,
    recheck_contraction, two_dim_candidates, IdealDescriptor, Predicate,
};
use boolspace::extension::{extend_contraction, extend_isometry};
use boolspace::generate::instance_rng;
use boolspace::invariants::{
    alpha_profile, brute_force_isometry, build_base, construct_isometry, decide_isometric,
    DEFAULT_ORACLE_CAP,
};
use boolspace::metric::conv_hull;
use boolspace::suites::{line_instance, run_suite, Suite, SuiteConfig};
use boolspace::{Error as CoreError, FiniteSpace, MapKind, PartialMap};

use input::{map_pairs, parse_input, Document, ParseError};
use report::{CandidateLine, FailureLine, MapBlock, Profile, Report, SpaceBlock, SuiteLine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "boolspace", version, about = "Exact computation in Boolean metric spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input file in the block format; standard input when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Instance count for seeded suites (each suite has its own default).
    #[arg(long, global = true)]
    pub instances: Option<usize>,
    /// Largest atom count of generated instances.
    #[arg(long, global = true, default_value_t = 3)]
    pub atoms: usize,
    /// Largest dimension of generated instances.
    #[arg(long, global = true, default_value_t = 3)]
    pub dim: usize,
    /// Size cap for generated hulls.
    #[arg(long = "max-points", global = true, default_value_t = 256)]
    pub max_points: usize,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the alpha profile of each space (or of one).
    Alpha {
        #[arg(long)]
        space: Option<String>,
    },
    /// Build a base of a pointed convex space.
    Base {
        #[arg(long)]
        space: Option<String>,
    },
    /// Print the convex hull of a space.
    Conv {
        #[arg(long)]
        space: Option<String>,
    },
    /// Decide whether two spaces are isometric and exhibit an isometry.
    Isometric {
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
    },
    /// Extend an isometry between subsets of the ambient space.
    Extend {
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value = "W")]
        ambient: String,
    },
    /// Extend a contraction between subsets of the ambient space.
    ExtendContraction {
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value = "W")]
        ambient: String,
    },
    /// Run property suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Witnesses for the finite-cofinite non-extension examples.
    Counterexample {
        #[arg(long, value_enum, default_value_t = Which::TwoDim)]
        which: Which,
        /// evens, odds or mod:r,m
        #[arg(long, default_value = "evens")]
        predicate: String,
        #[arg(long = "max-support", default_value_t = 16)]
        max_support: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    TwoDim,
    Contraction,
    Line,
}

/// The shared knobs of a run; identical configurations give identical
/// reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub instances: Option<usize>,
    pub atoms: usize,
    pub dim: usize,
    pub max_points: usize,
    pub json: bool,
}

impl From<&Cli> for RunConfig {
    fn from(cli: &Cli) -> Self {
        RunConfig {
            seed: cli.seed,
            instances: cli.instances,
            atoms: cli.atoms,
            dim: cli.dim,
            max_points: cli.max_points,
            json: cli.json,
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Parse(ParseError),
    Usage(String),
    Core(CoreError),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) | Failure::Usage(_) => EXIT_PARSE,
            Failure::Core(CoreError::Internal(_)) => EXIT_VIOLATION,
            Failure::Core(_) => EXIT_INFEASIBLE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Usage(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

/// What a run printed and how it ended.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments and runs; `stdin` stands in for standard input.
pub fn execute<I, T>(args: I, stdin: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let cfg = RunConfig::from(&cli);
    let result = load_document(&cli, stdin).and_then(|doc| run_command(&cli.command, doc.as_ref(), &cfg));
    match result {
        Ok(report) => {
            let stdout = if cfg.json { report.to_json() } else { report.to_text() };
            let code = if report.violation() { EXIT_VIOLATION } else { EXIT_OK };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(f) => Outcome { stdout: String::new(), stderr: format!("error: {f}\n"), code: f.exit_code() },
    }
}

fn needs_input(cmd: &Command) -> bool {
    !matches!(cmd, Command::Verify { .. } | Command::Counterexample { .. })
}

fn load_document(cli: &Cli, stdin: Option<&str>) -> Result<Option<Document>, Failure> {
    if !needs_input(&cli.command) {
        return Ok(None);
    }
    let text = match (&cli.input, stdin) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(text)) => text.to_string(),
        (None, None) => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            text
        }
    };
    parse_input(&text).map(Some).map_err(Failure::Parse)
}

fn pick_space<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a str, &'a FiniteSpace), Failure> {
    match name {
        Some(n) => doc
            .spaces
            .iter()
            .find(|s| s.name == n)
            .map(|s| (s.name.as_str(), &s.space))
            .ok_or_else(|| Failure::Usage(format!("no space named {n}"))),
        None => doc
            .spaces
            .first()
            .map(|s| (s.name.as_str(), &s.space))
            .ok_or_else(|| Failure::Usage("the input declares no space".into())),
    }
}

fn profile(name: &str, space: &FiniteSpace) -> Profile {
    let p = alpha_profile(space);
    Profile { space: name.to_string(), rank: p.rank(), alpha: p.values().iter().map(ToString::to_string).collect() }
}

pub fn run_command(cmd: &Command, doc: Option<&Document>, cfg: &RunConfig) -> Result<Report, Failure> {
    let doc_ref = || doc.ok_or_else(|| Failure::Usage("this command needs an input".into()));
    match cmd {
        Command::Alpha { space } => {
            let doc = doc_ref()?;
            let profiles = match space {
                Some(_) => {
                    let (n, s) = pick_space(doc, space.as_deref())?;
                    vec![profile(n, s)]
                }
                None => doc.spaces.iter().map(|s| profile(&s.name, &s.space)).collect(),
            };
            Ok(Report::Alpha { profiles })
        }
        Command::Base { space } => {
            let (name, s) = pick_space(doc_ref()?, space.as_deref())?;
            let base = build_base(s)?;
            let norms = alpha_profile(s).values().iter().map(ToString::to_string).collect();
            let block = SpaceBlock {
                name: format!("{name}.base"),
                dim: s.dim(),
                points: base.points.iter().map(|p| p.coords().iter().map(ToString::to_string).collect()).collect(),
                basepoint: None,
            };
            Ok(Report::Base { space: name.into(), basepoint: base.zero.to_string(), norms, base: block })
        }
        Command::Conv { space } => {
            let (name, s) = pick_space(doc_ref()?, space.as_deref())?;
            let hull = conv_hull(s)?;
            Ok(Report::Conv { space: name.into(), hull: SpaceBlock::new(&format!("{name}.conv"), &hull) })
        }
        Command::Isometric { left, right } => {
            let doc = doc_ref()?;
            let (ln, l) = pick_space(doc, left.as_deref())?;
            let (rn, r) = match right {
                Some(_) => pick_space(doc, right.as_deref())?,
                None => doc
                    .spaces
                    .get(1)
                    .map(|s| (s.name.as_str(), &s.space))
                    .ok_or_else(|| Failure::Usage("isometric needs two spaces".into()))?,
            };
            let (isometric, method, map) = if l.is_convex() && r.is_convex() {
                let yes = decide_isometric(l, r);
                let map = if yes { Some(construct_isometry(l, r)?) } else { None };
                (yes, "alpha profiles", map)
            } else {
                let map = brute_force_isometry(l, r, DEFAULT_ORACLE_CAP)?;
                (map.is_some(), "exhaustive search", map)
            };
            let map = map.map(|m| MapBlock {
                name: format!("{ln}-to-{rn}"),
                from: ln.into(),
                to: rn.into(),
                pairs: map_pairs(&m, l, r).expect("isometry between the two spaces"),
            });
            Ok(Report::Isometric { left: profile(ln, l), right: profile(rn, r), isometric, method: method.into(), map })
        }
        Command::Extend { map, ambient } => extend(doc_ref()?, map.as_deref(), ambient, MapKind::Isometric),
        Command::ExtendContraction { map, ambient } => {
            extend(doc_ref()?, map.as_deref(), ambient, MapKind::Contractive)
        }
        Command::Verify { suite } => verify(suite, cfg),
        Command::Counterexample { which, predicate, max_support } => {
            counterexample(*which, predicate, *max_support, cfg)
        }
    }
}

fn extend(doc: &Document, name: Option<&str>, ambient: &str, kind: MapKind) -> Result<Report, Failure> {
    let named = match name {
        Some(n) => doc.map(n).ok_or_else(|| Failure::Usage(format!("no map named {n}")))?,
        None => doc.maps.first().ok_or_else(|| Failure::Usage("the input declares no map".into()))?,
    };
    let w = doc.space(ambient).ok_or_else(|| Failure::Usage(format!("no ambient space named {ambient}")))?;
    let f: PartialMap = named.map.clone().with_kind(kind);
    let (ext, verdict) = match kind {
        MapKind::Isometric => (extend_isometry(&f, w)?, "certified: isometry, extends input"),
        MapKind::Contractive => (extend_contraction(&f, w)?, "certified: contraction, extends input"),
    };
    let pairs = map_pairs(&ext, w, w).expect("extension is a self-map of the ambient space");
    Ok(Report::Extend {
        input: named.name.clone(),
        ambient: ambient.into(),
        map: MapBlock { name: format!("{}.ext", named.name), from: ambient.into(), to: ambient.into(), pairs },
        verdict: verdict.into(),
    })
}

fn verify(suite: &str, cfg: &RunConfig) -> Result<Report, Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| Failure::Usage(format!("unknown suite {suite:?}")))?]
    };
    let lines = suites
        .into_iter()
        .map(|s| {
            let mut sc = SuiteConfig::for_suite(s, cfg.seed);
            sc.instances = cfg.instances.unwrap_or(sc.instances);
            sc.atoms = cfg.atoms;
            sc.dim = cfg.dim;
            sc.max_points = cfg.max_points;
            let r = run_suite(s, &sc);
            SuiteLine {
                suite: s.name().into(),
                instances: r.instances,
                passed: r.passed,
                exact: r.is_exact(),
                failures: r.failures.into_iter().map(|f| FailureLine { instance: f.instance, detail: f.detail }).collect(),
            }
        })
        .collect();
    Ok(Report::Verify { seed: cfg.seed, suites: lines })
}

fn counterexample(which: Which, predicate: &str, max_support: u64, cfg: &RunConfig) -> Result<Report, Failure> {
    let pred: Predicate = predicate
        .parse()
        .map_err(|_| Failure::Usage(format!("bad predicate {predicate:?}; use evens, odds or mod:r,m")))?;
    let ideal = IdealDescriptor::new(pred)?;
    if max_support >= 24 {
        return Err(Failure::Usage("--max-support must be below 24".into()));
    }
    let mut candidates = Vec::new();
    match which {
        Which::TwoDim => {
            for (a, b) in two_dim_candidates(max_support) {
                let w = isometry_obstruction_witness(&a, &b, &ideal);
                let recheck = w.recheck(&a, &b, &ideal);
                candidates.push(CandidateLine { candidate: format!("({a},{b})"), witness: w.to_string(), recheck });
            }
        }
        Which::Contraction => {
            for v in bounded_family(max_support) {
                let x = contraction_obstruction_witness(&v, &ideal);
                let recheck = recheck_contraction(&v, &x, &ideal);
                candidates.push(CandidateLine { candidate: v.to_string(), witness: format!("x={x}"), recheck });
            }
        }
        Which::Line => {
            for i in 0..cfg.instances.unwrap_or(50) {
                let mut rng = instance_rng(cfg.seed, i as u64);
                let (witness, recheck) = match line_instance(&mut rng, i) {
                    Ok(desc) => (desc, true),
                    Err(why) => (why, false),
                };
                candidates.push(CandidateLine { candidate: format!("instance {i}"), witness, recheck });
            }
        }
    }
    let checked = candidates.len();
    let rechecked = candidates.iter().filter(|c| c.recheck).count();
    let which = match which {
        Which::TwoDim => "two-dim",
        Which::Contraction => "contraction",
        Which::Line => "line",
    };
    Ok(Report::Counterexample { which: which.into(), predicate: pred.to_string(), max_support, candidates, checked, rechecked })
}
