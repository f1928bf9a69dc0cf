use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use lie_cideal::catalog::{self, Family, CATALOG, FAMILIES};
use lie_cideal::cideal::{is_cideal, line_cideal};
use lie_cideal::harness::{self, Engine, FuzzConfig, Status, TheoremReport};
use lie_cideal::lattice::{self, Budget};
use lie_cideal::structure::{analyze, classify_thm52};
use lie_cideal::{Error, Field, LieAlgebra, Subspace};

#[derive(Parser)]
#[command(name = "lie-cideal", version, about = "c-ideals and structure of small Lie algebras")]
struct Cli {
    /// Maximum number of subspaces an enumeration may visit.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity of a document.
    Validate { file: PathBuf },
    /// Structural profile.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Whether every line is a c-ideal, with the decomposition.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a subalgebra is a c-ideal.
    Cideal {
        file: PathBuf,
        /// Spanning vectors, e.g. "1 0 0; 0 1 0".
        #[arg(long)]
        sub: String,
        #[arg(long)]
        json: bool,
    },
    /// List subspaces of a given kind.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        json: bool,
    },
    /// The built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run verification suites on a document.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Run suites on seeded random solvable algebras.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, value_enum, default_value_t = FieldArg::Gf2)]
        field: FieldArg,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=5))]
        ambient: u8,
        /// Sample from strictly upper triangular matrices.
        #[arg(long)]
        nilpotent: bool,
        #[arg(long, default_value = "T1,T7,T8")]
        suite: String,
        /// Write failing documents here instead of printing them.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit {
        name: String,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        param: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Subspaces,
    Subalgebras,
    Ideals,
    Maximal,
    Maxnilp,
    Cartan,
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    Gf2,
    Gf3,
    Gf5,
}

impl FieldArg {
    fn field(self) -> Field {
        match self {
            FieldArg::Q => Field::Q,
            FieldArg::Gf2 => Field::prime(2).expect("prime"),
            FieldArg::Gf3 => Field::prime(3).expect("prime"),
            FieldArg::Gf5 => Field::prime(5).expect("prime"),
        }
    }
}

enum Failure {
    Violation,
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Lib(e @ Error::BudgetExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn budget(cli_value: Option<u64>) -> Result<Budget, Error> {
    match cli_value {
        Some(n) => Budget::new(n),
        None => Budget::from_env(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<LieAlgebra, Failure> {
    Ok(catalog::parse(&read(path)?)?)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn is_vector(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if !xs.is_empty() && xs.iter().all(Value::is_string))
}

/// Renders serialized vectors as `1,0,0` and subspaces as `1,0,0; 0,1,0`.
fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if is_vector(v) => xs.iter().map(text_value).collect::<Vec<_>>().join(","),
        Value::Array(xs) if xs.is_empty() => "0".into(),
        Value::Array(xs) if xs.iter().all(is_vector) => xs.iter().map(text_value).collect::<Vec<_>>().join("; "),
        Value::Array(xs) => format!("[{}]", xs.iter().map(text_value).collect::<Vec<_>>().join(" | ")),
        other => other.to_string(),
    }
}

/// Prints an object as `key: value` lines.
fn print_fields(v: &impl serde::Serialize) {
    let value = serde_json::to_value(v).expect("serializable");
    if let Value::Object(map) = value {
        for (k, v) in map {
            match v {
                Value::Object(inner) => {
                    println!("{k}:");
                    for (ik, iv) in inner {
                        println!("  {ik}: {}", text_value(&iv));
                    }
                }
                v => println!("{k}: {}", text_value(&v)),
            }
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let budget = budget(cli.budget)?;
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Analyze { file, json } => {
            let profile = analyze(&load(&file)?, budget)?;
            if json {
                print_json(&profile);
            } else {
                print_fields(&profile);
            }
            Ok(())
        }
        Command::Classify { file, json } => {
            let verdict = classify_thm52(&load(&file)?);
            if json {
                print_json(&verdict);
            } else {
                print_fields(&verdict);
                println!("all_lines_cideal: {}", verdict.all_lines_cideal());
            }
            Ok(())
        }
        Command::Cideal { file, sub, json } => {
            let l = load(&file)?;
            let b = Subspace::parse(l.field(), l.dim(), &sub)?;
            let verdict = is_cideal(&l, &b, budget)?;
            if json {
                print_json(&verdict);
            } else {
                print_fields(&verdict);
            }
            Ok(())
        }
        Command::Enumerate { file, what, json } => enumerate(&load(&file)?, what, budget, json),
        Command::Catalog { action } => catalog_cmd(action),
        Command::Verify { file, suite, json } => {
            let l = load(&file)?;
            let suites = harness::parse_suites(&suite)?;
            let id = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let reports = harness::run_suite(&l, &id, &suites, budget, &Engine);
            if json {
                print_json(&reports);
            } else {
                for r in &reports {
                    print_report(r);
                }
            }
            verdict_of(&reports)
        }
        Command::Fuzz {
            seed,
            count,
            field,
            ambient,
            nilpotent,
            suite,
            dump,
            json,
        } => {
            let cfg = FuzzConfig {
                seed,
                count,
                field: field.field(),
                family: if nilpotent {
                    Family::StrictlyUpper
                } else {
                    Family::UpperTriangular
                },
                ambient: ambient as usize,
                suites: harness::parse_suites(&suite)?,
                budget,
            };
            fuzz_cmd(&cfg, dump.as_deref(), json)
        }
    }
}

fn validate(file: &Path) -> Outcome {
    match catalog::parse(&read(file)?) {
        Ok(l) => {
            println!("ok: dimension {} over {}", l.dim(), l.field());
            Ok(())
        }
        Err(e @ Error::JacobiViolation(..)) => {
            println!("invalid: {e}");
            Err(Failure::Violation)
        }
        Err(e) => Err(e.into()),
    }
}

fn enumerate(l: &LieAlgebra, what: What, budget: Budget, json: bool) -> Outcome {
    if let What::Lines = what {
        let mut rows = Vec::new();
        for x in lattice::projective_points(l.field(), l.dim(), budget)? {
            let v = line_cideal(l, &x)?;
            rows.push((Subspace::line(l.field(), &x)?, v.answer));
        }
        if json {
            let out: Vec<Value> = rows
                .iter()
                .map(|(s, a)| serde_json::json!({"line": s, "cideal": a}))
                .collect();
            print_json(&out);
        } else {
            for (s, a) in &rows {
                println!("{s}\t{}", serde_json::to_value(a).expect("serializable").as_str().unwrap_or(""));
            }
        }
        return Ok(());
    }
    let spaces: Vec<Subspace> = match what {
        What::Subspaces => lattice::enum_subspaces(l, None, budget)?.collect(),
        What::Subalgebras => lattice::enum_subalgebras(l, budget)?,
        What::Ideals => lattice::enum_ideals(l, budget)?,
        What::Maximal => lattice::maximal_subalgebras(l, budget)?,
        What::Maxnilp => lattice::maximal_nilpotent_subalgebras(l, budget)?,
        What::Cartan => lattice::cartan_subalgebras(l, budget)?,
        What::Lines => unreachable!("handled above"),
    };
    if json {
        print_json(&spaces);
    } else {
        for s in &spaces {
            println!("{s}");
        }
    }
    Ok(())
}

fn catalog_cmd(action: CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => {
            println!("families:");
            for (name, desc) in FAMILIES {
                println!("  {name:<22}{desc}");
            }
            println!("catalog:");
            for name in CATALOG {
                println!("  {name}");
            }
            Ok(())
        }
        CatalogAction::Emit { name, field, param } => {
            let full = match param {
                Some(k) => format!("{name}({k})"),
                None => name,
            };
            print!("{}", catalog::serialize(&catalog::builtin(&full, field.field())?));
            Ok(())
        }
    }
}

fn print_report(r: &TheoremReport) {
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    };
    let mut line = format!("{} {:<8} {} checked={}", r.theorem_id, status, r.algebra_id, r.checked);
    if let Some(reason) = &r.reason {
        line.push_str(&format!(" ({reason})"));
    }
    println!("{line}");
    for w in &r.witnesses {
        println!("  witness: {}", serde_json::to_string(w).expect("serializable"));
    }
}

fn verdict_of(reports: &[TheoremReport]) -> Outcome {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn fuzz_cmd(cfg: &FuzzConfig, dump: Option<&Path>, json: bool) -> Outcome {
    let summary = harness::fuzz(cfg, &Engine)?;
    if json {
        print_json(&serde_json::json!({
            "algebras": summary.algebras,
            "pass": summary.count(Status::Pass),
            "fail": summary.count(Status::Fail),
            "skipped": summary.count(Status::Skipped),
            "failures": summary.failures.iter().map(|f| &f.report).collect::<Vec<_>>(),
        }));
    } else {
        println!(
            "algebras={} pass={} fail={} skipped={}",
            summary.algebras,
            summary.count(Status::Pass),
            summary.count(Status::Fail),
            summary.count(Status::Skipped)
        );
        for f in &summary.failures {
            print_report(&f.report);
        }
    }
    for f in &summary.failures {
        let text = catalog::serialize_document(&f.document);
        match dump {
            Some(dir) => {
                let path = dir.join(format!("{}-{}.json", f.report.algebra_id, f.report.theorem_id));
                std::fs::create_dir_all(dir)
                    .and_then(|_| std::fs::write(&path, text))
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            None if !json => print!("{text}"),
            None => {}
        }
    }
    if summary.failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}
