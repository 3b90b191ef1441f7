use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use ainerve::ainf::{
    check_ainf_relations, check_strict_units, mutation_sites, sufficient_dmax, AInfCategory, CategoryJson,
    MutationJson, RelationViolation, UnitViolation,
};
use ainerve::colimit::{build_colimit, Diagram, DiagramJson, GlobalComplexJson};
use ainerve::fibration::{check_global_fibration, Direction, FibrationReport};
use ainerve::homotopy::{is_kan, is_quasi_category, maximal_kan_subcomplex, tau, tau0, CheckReport};
use ainerve::nerve::{
    enumerate_simplices, fill_inner_horn, horn_missing, nerve_truncation, Constraints, NerveSimplex, NerveSimplexJson,
    NerveTruncationJson,
};
use ainerve::simplicial::{SimplicialSet, SimplicialSetJson};

#[derive(Parser)]
#[command(
    name = "ainerve",
    version,
    about = "Nerves of finite A∞-categories over F₂ and colimits of nerves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check strict units and the A∞ relations up to `--dmax`.
    CheckAinf {
        category: PathBuf,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        /// Also check this many random single-coefficient mutations.
        #[arg(long)]
        mutate: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The nerve truncated at `--cap`.
    Nerve {
        category: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Fill an inner horn given as a simplex with `[n]` and `[n] − {k}` omitted.
    FillHorn {
        category: PathBuf,
        horn: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// All nerve simplices of dimension `--n`.
    Enumerate {
        category: PathBuf,
        #[arg(long)]
        n: usize,
        /// Comma-separated vertex objects.
        #[arg(long, value_delimiter = ',')]
        vertices: Option<Vec<String>>,
    },
    /// Homotopy category of a simplicial set or of the nerve of a category.
    Tau {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Isomorphism classes of objects of the homotopy category.
    Tau0 {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// The simplices all of whose edges are equivalences.
    KanSubcomplex {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Inner horn filling up to `--cap`; all horns with `--kan`.
    CheckQcat {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
        #[arg(long)]
        kan: bool,
    },
    /// The colimit of the nerves of a diagram, with its projection.
    Colimit {
        diagram: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Inner and (co-)Cartesian fibration checks for the projection of a colimit.
    CheckFibration {
        colimit: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = DirectionArg::Co)]
        direction: DirectionArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Co,
    Contra,
}

enum Outcome {
    Pass(Value),
    Fail(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command).and_then(|o| emit(cli.out.as_deref(), o)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&Path>, outcome: Outcome) -> Result<ExitCode> {
    let (value, code) = match outcome {
        Outcome::Pass(v) => (v, 0),
        Outcome::Fail(v) => (v, 1),
    };
    let mut text = serde_json::to_string_pretty(&value)?;
    text.push('\n');
    match out {
        Some(path) => write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::from(code))
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn to_value(v: impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

/// A category that passes its unit and relation checks.
fn load_category(path: &Path) -> Result<AInfCategory> {
    let c = AInfCategory::from_json(&read_json::<CategoryJson>(path)?)?;
    if let Some(v) = check_strict_units(&c) {
        bail!("{}: the {} unit law fails", path.display(), v.law);
    }
    if let Some(v) = check_ainf_relations(&c, sufficient_dmax(&c)) {
        bail!("{}: the A∞ relation of arity {} fails", path.display(), v.d);
    }
    Ok(c)
}

/// A simplicial set, a nerve truncation, or a category (replaced by its
/// nerve truncated at `cap`).
fn load_complex(path: &Path, cap: usize) -> Result<SimplicialSet> {
    let value: Value = read_json(path)?;
    let set = if value.get("objects").is_some() {
        nerve_truncation(&load_category(path)?, cap)?.set
    } else if value.get("simplices").is_some() {
        let json: NerveTruncationJson = serde_json::from_value(value)?;
        SimplicialSet::from_json(&json.set)?
    } else {
        let json: SimplicialSetJson = serde_json::from_value(value)?;
        SimplicialSet::from_json(&json)?
    };
    if cap > set.cap() {
        bail!(
            "--cap {cap} exceeds the truncation cap {} of {}",
            set.cap(),
            path.display()
        );
    }
    Ok(set)
}

#[derive(Serialize)]
struct AinfReport {
    dmax: usize,
    units: Option<UnitViolation>,
    relations: Option<RelationViolation>,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    mutations: Option<MutationReport>,
}

#[derive(Serialize)]
struct MutationReport {
    seed: u64,
    sites: usize,
    checked: usize,
    detected: usize,
    /// Mutants that pass both checks.
    undetected: Vec<MutationJson>,
}

fn check_ainf(path: &Path, dmax: usize, mutate: Option<usize>, seed: u64) -> Result<Outcome> {
    let c = AInfCategory::from_json(&read_json::<CategoryJson>(path)?)?;
    let units = check_strict_units(&c);
    let relations = check_ainf_relations(&c, dmax);
    let pass = units.is_none() && relations.is_none();
    let mutations = mutate.map(|count| {
        let sites = mutation_sites(&c, c.max_arity().max(2) + 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let chosen: Vec<_> = sites.choose_multiple(&mut rng, count).collect();
        let mut undetected = Vec::new();
        for site in &chosen {
            let m = site.apply(&c).expect("sites are composable");
            if check_strict_units(&m).is_none() && check_ainf_relations(&m, dmax).is_none() {
                undetected.push(site.to_json(&c));
            }
        }
        MutationReport {
            seed,
            sites: sites.len(),
            checked: chosen.len(),
            detected: chosen.len() - undetected.len(),
            undetected,
        }
    });
    let v = to_value(AinfReport {
        dmax,
        units,
        relations,
        pass,
        mutations,
    })?;
    Ok(if pass { Outcome::Pass(v) } else { Outcome::Fail(v) })
}

fn fill_horn(category: &Path, horn: &Path, n: usize, k: usize) -> Result<Outcome> {
    let c = load_category(category)?;
    let json: NerveSimplexJson = read_json(horn)?;
    if json.vertices.len() != n + 1 {
        bail!(
            "a horn in dimension {n} needs {} vertices, found {}",
            n + 1,
            json.vertices.len()
        );
    }
    if k == 0 || k >= n {
        bail!("Λ{n}_{k} is not an inner horn");
    }
    let h = NerveSimplex::from_json(&c, &json, &horn_missing(n, k))?;
    Ok(Outcome::Pass(to_value(fill_inner_horn(&c, &h, k)?.to_json(&c))?))
}

#[derive(Serialize)]
struct EnumerateReport {
    n: usize,
    count: usize,
    simplices: Vec<NerveSimplexJson>,
}

fn enumerate(category: &Path, n: usize, vertices: Option<Vec<String>>) -> Result<Outcome> {
    let c = load_category(category)?;
    let vertices = match vertices {
        Some(v) => {
            if v.len() != n + 1 {
                bail!("--vertices needs {} objects", n + 1);
            }
            Some(v.iter().map(|x| c.object(x)).collect::<ainerve::Result<Vec<_>>>()?)
        }
        None => None,
    };
    let constraints = Constraints {
        vertices,
        fixed: BTreeMap::new(),
    };
    let simplices: Vec<_> = enumerate_simplices(&c, n, &constraints)
        .iter()
        .map(|s| s.to_json(&c))
        .collect();
    Ok(Outcome::Pass(to_value(EnumerateReport {
        n,
        count: simplices.len(),
        simplices,
    })?))
}

/// The quasi-category check, as a failure outcome if it fails.
fn require_quasi_category(x: &SimplicialSet, cap: usize) -> Result<Option<Outcome>> {
    let report = is_quasi_category(x, cap)?;
    Ok((!report.pass).then(|| Outcome::Fail(serde_json::to_value(report).expect("serializable"))))
}

#[derive(Serialize)]
struct FibrationOutput {
    summary: String,
    #[serde(flatten)]
    report: FibrationReport,
}

fn check_fibration(path: &Path, cap: usize, direction: DirectionArg) -> Result<Outcome> {
    let json: GlobalComplexJson = read_json(path)?;
    if cap > json.cap {
        bail!("--cap {cap} exceeds the cap {} of {}", json.cap, path.display());
    }
    let diagram = Diagram::from_json(&json.diagram)?;
    let g = build_colimit(&diagram, json.cap)?;
    if g.to_json().total != json.total {
        bail!("{}: the total space does not match its diagram", path.display());
    }
    let direction = match direction {
        DirectionArg::Co => Direction::Co,
        DirectionArg::Contra => Direction::Contra,
    };
    let report = check_global_fibration(&g, cap, direction)?;
    eprintln!("{}", report.summary());
    let pass = report.pass;
    let v = to_value(FibrationOutput {
        summary: report.summary(),
        report,
    })?;
    Ok(if pass { Outcome::Pass(v) } else { Outcome::Fail(v) })
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::CheckAinf {
            category,
            dmax,
            mutate,
            seed,
        } => check_ainf(&category, dmax, mutate, seed),
        Command::Nerve { category, cap } => {
            let c = load_category(&category)?;
            Ok(Outcome::Pass(to_value(nerve_truncation(&c, cap)?.to_json(&c))?))
        }
        Command::FillHorn { category, horn, n, k } => fill_horn(&category, &horn, n, k),
        Command::Enumerate { category, n, vertices } => enumerate(&category, n, vertices),
        Command::Tau { input, cap } => {
            let x = load_complex(&input, cap)?;
            if let Some(fail) = require_quasi_category(&x, cap)? {
                return Ok(fail);
            }
            let h = tau(&x, cap)?;
            h.check_category_laws()?;
            Ok(Outcome::Pass(to_value(h.to_json(&x))?))
        }
        Command::Tau0 { input, cap } => {
            let x = load_complex(&input, cap)?;
            if let Some(fail) = require_quasi_category(&x, cap)? {
                return Ok(fail);
            }
            let classes: Vec<Vec<String>> = tau0(&x, cap)?
                .into_iter()
                .map(|c| c.into_iter().map(|v| x.cell(0, v).id.clone()).collect())
                .collect();
            Ok(Outcome::Pass(to_value(classes)?))
        }
        Command::KanSubcomplex { input, cap } => {
            let x = load_complex(&input, cap)?;
            if let Some(fail) = require_quasi_category(&x, cap)? {
                return Ok(fail);
            }
            let (core, _) = maximal_kan_subcomplex(&x, cap)?;
            Ok(Outcome::Pass(to_value(core.to_json())?))
        }
        Command::CheckQcat { input, cap, kan } => {
            let x = load_complex(&input, cap)?;
            let report: CheckReport = if kan {
                is_kan(&x, cap)?
            } else {
                is_quasi_category(&x, cap)?
            };
            let pass = report.pass;
            let v = to_value(report)?;
            Ok(if pass { Outcome::Pass(v) } else { Outcome::Fail(v) })
        }
        Command::Colimit { diagram, cap } => {
            let mut json: DiagramJson = read_json(&diagram)?;
            json.base.cap = json.base.cap.max(cap);
            let g = build_colimit(&Diagram::from_json(&json)?, cap)?;
            Ok(Outcome::Pass(to_value(g.to_json())?))
        }
        Command::CheckFibration {
            colimit,
            cap,
            direction,
        } => check_fibration(&colimit, cap, direction),
    }
}
