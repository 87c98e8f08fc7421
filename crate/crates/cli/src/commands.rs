use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_integer::Integer;
use qubo_core::io::{self as formats, ReductionSidecar, ReportExtras};
use qubo_core::workload::{self, BenchConfig};
use qubo_core::{
    attach_argmin, decide_dqubo, interpret_ilp_result, normalize_rational, reduce_clique_to_squbo, reduce_ilp_to_qubo,
    reduce_knapsack_to_ilp, repair_to_clique, solve_lqubo, solve_qubo, solve_uqubo, Error, IlpQuboMapping,
    OracleHandle, QuboInstance, SolveReport,
};

use crate::args::{BenchArgs, Command, DecideArgs, Format, Mode, ReduceArgs, RepairArgs, SolveArgs};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: PathBuf, source: io::Error },
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(Error::Parse(d)) => write!(f, "parse error at {d}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<qubo_core::ParseDiagnostic> for CliError {
    fn from(d: qubo_core::ParseDiagnostic) -> Self {
        CliError::Core(Error::Parse(d))
    }
}

type CliResult<T = ()> = Result<T, CliError>;

pub fn run(command: Command) -> CliResult {
    match command {
        Command::Solve(a) => cmd_solve(&a),
        Command::Reduce(a) => cmd_reduce(&a),
        Command::Decide(a) => cmd_decide(&a),
        Command::Repair(a) => cmd_repair(&a),
        Command::Bench(a) => cmd_bench(&a),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

/// What the QUBO stands for, so results can be read back in the source terms.
enum Origin {
    Qubo,
    Graph,
    Ilp(IlpQuboMapping),
    Rational(BigInt),
}

fn load_as_qubo(format: Format, text: &str) -> CliResult<(QuboInstance, Origin)> {
    Ok(match format {
        Format::Qubo => (formats::parse_qubo(text)?, Origin::Qubo),
        Format::Graph => {
            let g = formats::parse_graph(text)?;
            let q = reduce_clique_to_squbo(&g);
            eprintln!("reduce: graph ({} vertices) -> squbo ({} variables)", g.n_vertices(), q.n());
            (q, Origin::Graph)
        }
        Format::Ilp => {
            let ilp = formats::parse_ilp(text)?;
            let map = reduce_ilp_to_qubo(&ilp)?;
            eprintln!(
                "reduce: ilp ({}x{}) -> qubo ({} variables, h={}, k={})",
                ilp.m(),
                ilp.n(),
                map.qubo.n(),
                map.h,
                map.k
            );
            (map.qubo.clone(), Origin::Ilp(map))
        }
        Format::Knapsack => {
            let kp = formats::parse_knapsack(text)?;
            let ilp = reduce_knapsack_to_ilp(&kp);
            let map = reduce_ilp_to_qubo(&ilp)?;
            eprintln!("reduce: knapsack ({} items) -> ilp (1x{})", kp.items().len(), ilp.n());
            eprintln!("reduce: ilp (1x{}) -> qubo ({} variables, h={}, k={})", ilp.n(), map.qubo.n(), map.h, map.k);
            (map.qubo.clone(), Origin::Ilp(map))
        }
        Format::Rqubo => {
            let rq = formats::parse_rqubo(text)?;
            let (q, scale) = normalize_rational(&rq)?;
            eprintln!("reduce: rqubo -> qubo (scale {scale})");
            (q, Origin::Rational(scale))
        }
    })
}

fn cmd_solve(args: &SolveArgs) -> CliResult {
    let (qubo, origin) = load_as_qubo(args.io.format, &read(&args.io.input)?)?;
    let mode = match args.mode {
        Mode::Auto if args.upper_bound.is_some() => Mode::Uqubo,
        Mode::Auto if args.lower_bound.is_some() => Mode::Lqubo,
        Mode::Auto => Mode::General,
        m => m,
    };
    let missing = |flag: &str| Error::Parameter(format!("--mode {} needs {flag}", mode_name(mode)));

    let mut handle = OracleHandle::new(qubo.clone());
    let mut report = match mode {
        Mode::Lqubo => solve_lqubo(&qubo, args.lower_bound.as_ref().ok_or_else(|| missing("--lower-bound"))?, &mut handle)?,
        Mode::Uqubo => solve_uqubo(&qubo, args.upper_bound.as_ref().ok_or_else(|| missing("--upper-bound"))?, &mut handle)?,
        _ => solve_qubo(&qubo, &mut handle)?,
    };
    if args.extract_argmin {
        attach_argmin(&qubo, &mut report, &mut handle)?;
    }

    let extras = match &origin {
        Origin::Qubo | Origin::Graph => ReportExtras::default(),
        Origin::Ilp(map) => {
            let optimum = interpret_ilp_result(map, &report);
            fold_constant(&mut report, &map.constant);
            ReportExtras {
                ilp_optimum: Some(optimum),
                ..Default::default()
            }
        }
        Origin::Rational(scale) => {
            let g = report.min_value.gcd(scale);
            ReportExtras {
                rational_min: Some((&report.min_value / &g, scale / &g)),
                ..Default::default()
            }
        }
    };
    emit(args.io.output.as_deref(), &formats::write_report_with(&report, &extras))
}

/// Reports on reduced integer programs include the penalty constant the
/// QUBO itself cannot carry.
fn fold_constant(report: &mut SolveReport, constant: &BigInt) {
    report.min_value += constant;
    report.search_lo += constant;
    report.offset_applied += constant;
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Auto => "auto",
        Mode::General => "general",
        Mode::Lqubo => "lqubo",
        Mode::Uqubo => "uqubo",
    }
}

fn cmd_reduce(args: &ReduceArgs) -> CliResult {
    let text = read(&args.io.input)?;
    let (body, sidecar) = match args.io.format {
        Format::Qubo => {
            return Err(Error::Unsupported("`reduce` takes ilp, graph, knapsack or rqubo input".into()).into());
        }
        Format::Knapsack => {
            let kp = formats::parse_knapsack(&text)?;
            let ilp = reduce_knapsack_to_ilp(&kp);
            let bound = ilp.b()[0].to_string();
            (formats::write_ilp(&ilp), ReductionSidecar::Knapsack { bound })
        }
        Format::Graph => {
            let g = formats::parse_graph(&text)?;
            let sidecar = ReductionSidecar::Graph {
                n_vertices: g.n_vertices(),
            };
            (formats::write_qubo(&reduce_clique_to_squbo(&g)), sidecar)
        }
        format => {
            let (qubo, origin) = load_as_qubo(format, &text)?;
            let sidecar = match origin {
                Origin::Ilp(map) => ReductionSidecar::for_ilp(&map),
                Origin::Rational(scale) => ReductionSidecar::for_rational(&scale),
                Origin::Qubo | Origin::Graph => unreachable!("handled above"),
            };
            (formats::write_qubo(&qubo), sidecar)
        }
    };
    emit(args.io.output.as_deref(), &body)?;
    match &args.io.output {
        Some(path) => {
            let mut side = path.clone().into_os_string();
            side.push(".map.json");
            emit(Some(Path::new(&side)), &sidecar.to_json())
        }
        None => {
            eprint!("{}", sidecar.to_json());
            Ok(())
        }
    }
}

fn cmd_decide(args: &DecideArgs) -> CliResult {
    if args.io.format != Format::Qubo {
        return Err(Error::Unsupported("`decide` takes qubo input".into()).into());
    }
    let qubo = formats::parse_qubo(&read(&args.io.input)?)?;
    let mut handle = OracleHandle::new(qubo.clone());
    let answer = decide_dqubo(&qubo, &args.value, &mut handle)?;
    emit(args.io.output.as_deref(), &format!("{answer}\n"))
}

fn cmd_repair(args: &RepairArgs) -> CliResult {
    let graph = formats::parse_graph(&read(&args.input)?)?;
    let assignment = formats::parse_assignment(&read(&args.assignment)?)?;
    let qubo = reduce_clique_to_squbo(&graph);
    if assignment.len() != qubo.n() {
        return Err(Error::Dimension {
            expected: qubo.n(),
            actual: assignment.len(),
        }
        .into());
    }
    let value = qubo.evaluate(&assignment)?;
    let report = solve_qubo(&qubo, &mut OracleHandle::new(qubo.clone()))?;
    if value != report.min_value {
        return Err(Error::Inconsistency(format!(
            "assignment has value {value} but the minimum is {}",
            report.min_value
        ))
        .into());
    }
    let clique = repair_to_clique(&qubo, &assignment)?;
    let vertices: Vec<String> = clique.ones().map(|v| v.to_string()).collect();
    emit(args.output.as_deref(), &format!("{}\n", vertices.join(" ")))
}

fn cmd_bench(args: &BenchArgs) -> CliResult {
    let config = BenchConfig {
        family: args.family.parse()?,
        sizes: workload::parse_size_range(&args.sizes)?,
        trials: args.trials,
        seed: args.seed,
    };
    let rows = workload::run_bench(&config)?;
    emit(args.output.as_deref(), &workload::write_csv(&config, &rows))
}
