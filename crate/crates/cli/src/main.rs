use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shiftmatch_core::bounds::{gen_clique_construction, gen_cover_construction, gen_star_families};
use shiftmatch_core::shift::{apply_shift, compress_to_target};
use shiftmatch_core::solver::{has_t_matching, max_matching, rainbow_matching, SolverLimits};
use shiftmatch_core::witness::{
    rainbow_by_lemma3_with, rainbow_by_thm2, t_disjoint_by_cor1, t_disjoint_by_thm1,
};
use shiftmatch_core::{
    erdos_bound, parse_document, run_suite, to_shg, to_shgm, ColoredFamilies, Document, Error,
    ExtractionReport, Matching, SetFamily, ShiftOp, Suite,
};

#[derive(Parser)]
#[command(
    name = "shiftmatch",
    version,
    about = "Matchings in uniform set families"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Node budget for exact searches.
    #[arg(long, global = true, env = "SHIFTMATCH_MAX_NODES")]
    max_nodes: Option<u64>,
    /// Time budget for exact searches, in milliseconds.
    #[arg(long, global = true, env = "SHIFTMATCH_MAX_MILLIS")]
    max_millis: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form bounds for (n, k, t).
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
    /// Write an extremal construction.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Matching number of a single family.
    Nu { file: PathBuf },
    /// Rainbow matching search over a multi-family file.
    Rainbow { file: PathBuf },
    /// Apply one shift S_ij.
    Shift {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Compress toward the top vertex.
    Compress { file: PathBuf },
    /// Extract a matching constructively.
    Witness {
        file: PathBuf,
        /// Matching size; multi-family modes use the number of families.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Comma-separated centers for cor1.
        #[arg(long, value_delimiter = ',')]
        centers: Vec<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Case count; suite default when absent.
        #[arg(long)]
        cases: Option<usize>,
        /// Also write the JSON report here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Cover,
    Clique,
    Stars,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Lemma3,
    Cor1,
    Thm1,
    Thm2,
    Solver,
}

type CmdResult = Result<Outcome, Error>;

/// What a command prints, and whether it counts as success.
struct Outcome {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            ok: true,
        }
    }
}

fn read(path: &Path) -> Result<Document, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}

fn single(path: &Path) -> Result<SetFamily, Error> {
    match read(path)? {
        Document::Single(f) => Ok(f),
        Document::Multi(_) => Err(Error::Validation(format!(
            "{}: expected an SHG file",
            path.display()
        ))),
    }
}

fn colored(path: &Path) -> Result<ColoredFamilies, Error> {
    match read(path)? {
        Document::Multi(m) => Ok(m),
        Document::Single(f) => ColoredFamilies::new(vec![f]),
    }
}

fn limits(cli: &Cli) -> Result<SolverLimits, Error> {
    let d = SolverLimits::default();
    SolverLimits::new(
        cli.max_nodes.unwrap_or(d.max_nodes),
        cli.max_millis.unwrap_or(d.max_millis),
    )
}

fn matching_lines(m: &Matching) -> String {
    m.entries()
        .iter()
        .map(|(i, e)| format!("F{}: {e}\n", i + 1))
        .collect()
}

fn report_outcome(r: ExtractionReport) -> Outcome {
    let tags: Vec<String> = r.case_trace.iter().map(|t| format!("{t:?}")).collect();
    let text = format!(
        "{}depth={}\ncase_trace={}\n",
        matching_lines(&r.matching),
        r.recursion_depth,
        tags.join(",")
    );
    Outcome::ok(text, serde_json::to_value(&r).expect("serializable"))
}

fn run(cli: &Cli) -> CmdResult {
    let limits = limits(cli)?;
    match &cli.command {
        Command::Bound { n, k, t } => {
            let r = erdos_bound(*n, *k, *t)?;
            let text = format!(
                "n={} k={} t={}\ncover_bound={}\nclique_bound={}\nerdos_bound={}\nrainbow_threshold={}\n\
                 regime={:?}\nin_theorem_range={}\nin_cover_range={}\nin_conjecture_range={}\n",
                r.n,
                r.k,
                r.t,
                r.cover_bound,
                r.clique_bound,
                r.erdos_bound,
                r.rainbow_threshold,
                r.regime,
                r.in_theorem_range,
                r.in_cover_range,
                r.in_conjecture_range
            );
            Ok(Outcome::ok(
                text,
                serde_json::to_value(&r).expect("serializable"),
            ))
        }
        Command::Gen {
            kind,
            n,
            k,
            t,
            output,
        } => {
            let text = match kind {
                GenKind::Cover => to_shg(&gen_cover_construction(*n, *k, *t)?),
                GenKind::Clique => to_shg(&gen_clique_construction(*n, *k, *t)?),
                GenKind::Stars => to_shgm(&gen_star_families(*n, *k, *t)?),
            };
            match output {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| {
                        Error::Validation(format!("cannot write {}: {e}", path.display()))
                    })?;
                    let json = json!({ "schema": 1, "written": path.display().to_string() });
                    Ok(Outcome::ok(format!("wrote {}\n", path.display()), json))
                }
                None => Ok(Outcome::ok(
                    text.clone(),
                    json!({ "schema": 1, "document": text }),
                )),
            }
        }
        Command::Nu { file } => {
            let f = single(file)?;
            let r = max_matching(&f, limits)?;
            let text = format!("nu={}\n{}", r.nu, matching_lines(&r.witness));
            Ok(Outcome::ok(
                text,
                json!({ "schema": 1, "nu": r.nu, "witness": r.witness, "nodes": r.nodes }),
            ))
        }
        Command::Rainbow { file } => {
            let fams = colored(file)?;
            let r = rainbow_matching(&fams, limits)?;
            let text = match &r.matching {
                Some(m) => format!("rainbow=true\n{}", matching_lines(m)),
                None => "rainbow=false\n".to_string(),
            };
            let json = json!({ "schema": 1, "found": r.found(), "matching": r.matching, "nodes": r.nodes });
            Ok(Outcome::ok(text, json))
        }
        Command::Shift { file, i, j } => {
            let op = ShiftOp::new(*i, *j)?;
            let text = match read(file)? {
                Document::Single(f) => to_shg(&shiftmatch_core::shift::shift_family(&f, op)?),
                Document::Multi(m) => to_shgm(&apply_shift(&m, op)?),
            };
            Ok(Outcome::ok(
                text.clone(),
                json!({ "schema": 1, "document": text }),
            ))
        }
        Command::Compress { file } => {
            let doc = read(file)?;
            let fams = match &doc {
                Document::Single(f) => ColoredFamilies::new(vec![f.clone()])?,
                Document::Multi(m) => m.clone(),
            };
            let (out, trace) = compress_to_target(&fams, fams.n())?;
            let text = match doc {
                Document::Single(_) => to_shg(out.family(0)),
                Document::Multi(_) => to_shgm(&out),
            };
            let json = json!({ "schema": 1, "document": text, "trace": trace.report() });
            Ok(Outcome::ok(text, json))
        }
        Command::Witness {
            file,
            t,
            mode,
            centers,
        } => {
            let need_t =
                || t.ok_or_else(|| Error::Validation("--t is required for this mode".into()));
            match mode {
                Mode::Lemma3 => Ok(report_outcome(rainbow_by_lemma3_with(
                    &colored(file)?,
                    limits,
                )?)),
                Mode::Thm2 => Ok(report_outcome(rainbow_by_thm2(&colored(file)?)?)),
                Mode::Cor1 => Ok(report_outcome(t_disjoint_by_cor1(
                    &single(file)?,
                    need_t()?,
                    centers,
                )?)),
                Mode::Thm1 => Ok(report_outcome(t_disjoint_by_thm1(
                    &single(file)?,
                    need_t()?,
                )?)),
                Mode::Solver => {
                    let found = match read(file)? {
                        Document::Single(f) => has_t_matching(&f, need_t()?, limits)?,
                        Document::Multi(m) => rainbow_matching(&m, limits)?,
                    };
                    let text = match &found.matching {
                        Some(m) => matching_lines(m),
                        None => "no matching\n".to_string(),
                    };
                    let json =
                        json!({ "schema": 1, "found": found.found(), "matching": found.matching });
                    Ok(Outcome {
                        text,
                        json,
                        ok: found.found(),
                    })
                }
            }
        }
        Command::Verify {
            suite,
            seed,
            cases,
            output,
        } => {
            let report = run_suite(
                *suite,
                *seed,
                cases.unwrap_or_else(|| suite.default_cases()),
            );
            let body = report.to_json();
            if let Some(path) = output {
                fs::write(path, &body).map_err(|e| {
                    Error::Validation(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            eprintln!("wall_time={:.3}s", report.wall_time.as_secs_f64());
            let mut text = format!(
                "suite={} seed={} cases={} failures={}\n",
                report.suite,
                report.seed,
                report.cases,
                report.failures.len()
            );
            for (k, v) in &report.counters {
                text.push_str(&format!("{k}={v}\n"));
            }
            for f in &report.failures {
                text.push_str(&format!(
                    "FAIL case {}: {}\n{}\n",
                    f.case, f.message, f.instance
                ));
            }
            let json: serde_json::Value = serde_json::from_str(&body).expect("own output parses");
            Ok(Outcome {
                text,
                json,
                ok: report.passed(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "schema": 1, "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
