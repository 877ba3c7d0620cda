//! Command-line front end. Output is JSON lines on stdout, diagnostics on
//! stderr. Exit status: 0 success, 1 verification failure, 2 usage error,
//! 3 degenerate parameter or failed construction.

pub mod records;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use pentaprod_core::construct::{construct_default, pipeline};
use pentaprod_core::ecurve::{curve_at, ec_mul, generate_solutions, nagell_lutz_screen, p_prime};
use pentaprod_core::families::{family_eval, family_symbolic, verify_family_symbolic, FamilyId};
use pentaprod_core::reduction::{
    from_system, is_trivial, parse_octuple, to_system, verify_eq1xy, verify_eq1xy_system,
    verify_eq5, verify_system,
};
use pentaprod_core::search::{
    merge_results, search_unit, x_pairs, FifthPowerTable, SearchConfig, Sextuple,
};
use pentaprod_core::{Error, Int, Rat, SolutionE5, SystemSolution};

use records::{Octuple, SextupleRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "pentaprod",
    version,
    about = "Exact tools for products of sums of two fifth powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an octuple against the product equation.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        solution: String,
        /// Treat the octuple as a solution of the symmetric system instead.
        #[arg(long)]
        system: bool,
    },
    /// Print or evaluate the parametric families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Run the construction for one parameter value.
    Construct {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        m: Rat,
        /// Quartic abscissa; defaults to the tangent point.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        u: Option<Rat>,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1")]
        s1: Rat,
        /// Print every intermediate value.
        #[arg(long)]
        trace: bool,
    },
    /// Print the cubic model, the base point and its order screen.
    Curve {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        m: Rat,
        /// Also print this multiple of the base point.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Build new solutions from multiples of the base point.
    Generate {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        m: Rat,
        #[arg(long, default_value_t = 2)]
        count: usize,
        /// Highest multiple to try.
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Convert between the product equation and the symmetric system.
    Reduce {
        #[command(subcommand)]
        action: ReduceAction,
    },
    /// Search for integer solutions with y3 = 1, y4 = 0.
    Search(SearchArgs),
    /// Verify every family identity symbolically.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum FamiliesAction {
    /// Print the polynomial entries of a family, or of all families.
    Dump {
        #[arg(long, value_parser = parse_family)]
        id: Option<FamilyId>,
    },
    /// Evaluate a family at a rational parameter.
    Eval {
        #[arg(long, value_parser = parse_family)]
        id: FamilyId,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        m: Rat,
    },
}

#[derive(Subcommand, Debug)]
pub enum ReduceAction {
    ToSystem {
        #[arg(long, allow_hyphen_values = true)]
        solution: String,
    },
    FromSystem {
        #[arg(long, allow_hyphen_values = true)]
        solution: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 20)]
    pub b1: i64,
    #[arg(long, default_value_t = 90)]
    pub b2: i64,
    #[arg(long, default_value_t = 500)]
    pub cap: i64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write records here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_rat(text: &str) -> Result<Rat, String> {
    text.trim().parse().map_err(|e: Error| e.to_string())
}

fn parse_family(text: &str) -> Result<FamilyId, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

pub fn parse_solution(text: &str) -> Result<SolutionE5, Error> {
    text.parse()
}

/// Runs the search on `jobs` threads. The result does not depend on `jobs`.
pub fn parallel_search(cfg: &SearchConfig, jobs: Option<usize>) -> Result<Vec<Sextuple>, Error> {
    cfg.validate()?;
    let table = FifthPowerTable::new(cfg.cap);
    let firsts = x_pairs(cfg.b1);
    let seconds = x_pairs(cfg.b2);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let parts: Vec<Vec<Sextuple>> = pool.install(|| {
        firsts
            .par_iter()
            .map(|&p| search_unit(&table, p, &seconds))
            .collect()
    });
    Ok(merge_results(parts))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Parse { .. } => EXIT_USAGE,
        Error::TranscriptionAlarm(_) => EXIT_FAILED,
        e if e.is_parameter_failure() => EXIT_DEGENERATE,
        _ => EXIT_FAILED,
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

enum Failure {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Verify { solution, system } => {
            if system {
                let (x, y) = parse_octuple(&solution)?;
                let s = SystemSolution::new(x, y);
                let ok = verify_system(&s);
                emit(
                    out,
                    &json!({"system": ok, "eq1XY": ok && verify_eq1xy_system(&s)}),
                )?;
                return Ok(if ok { EXIT_OK } else { EXIT_FAILED });
            }
            let s = parse_solution(&solution)?;
            if !verify_eq5(&s) {
                emit(out, &json!({"eq5": false}))?;
                return Ok(EXIT_FAILED);
            }
            let record =
                json!({"eq5": true, "eq1xy": verify_eq1xy(&s), "trivial": is_trivial(&s)?});
            emit(out, &record)?;
        }
        Command::Families { action } => match action {
            FamiliesAction::Dump { id } => {
                let ids = id.map_or_else(|| FamilyId::ALL.to_vec(), |i| vec![i]);
                for id in ids {
                    emit(out, &records::symbolic(&family_symbolic(id)))?;
                }
            }
            FamiliesAction::Eval { id, m } => {
                let (x, y) = family_eval(id, &m)?.entries();
                let mut v = serde_json::to_value(Octuple::new(&x, &y)).expect("serializable");
                v["id"] = json!(id.name());
                v["m"] = json!(m.to_string());
                emit(out, &v)?;
            }
        },
        Command::Construct { m, u, s1, trace } => {
            let t = match u {
                Some(u) => pipeline(&m, &u, &s1, None)?,
                None => construct_default(&m, &s1)?,
            };
            emit(out, &records::trace(&t, trace))?;
        }
        Command::Curve { m, n } => {
            let c = curve_at(&m)?;
            let p = p_prime(&m)?;
            let mut v = json!({
                "m": m.to_string(),
                "curve": records::curve(&c),
                "P": records::point(&p),
                "on_curve": c.contains(&p),
                "order": records::screen(nagell_lutz_screen(&c, &p)),
            });
            if let Some(n) = n {
                v["n"] = json!(n);
                v["nP"] = records::point(&ec_mul(&c, &p, &Int::from(n))?);
            }
            emit(out, &v)?;
        }
        Command::Generate { m, count, max_n } => {
            let r = generate_solutions(&m, count, max_n)?;
            for (n, e) in &r.skipped {
                writeln!(err, "skipped {n}P: {e}")?;
            }
            for g in &r.solutions {
                let v = json!({
                    "n": g.n,
                    "point": records::point(&g.point),
                    "quartic": records::quartic_point(&g.quartic),
                    "solution": Octuple::from(&g.trace.solution),
                });
                emit(out, &v)?;
            }
            if r.solutions.len() < count {
                writeln!(err, "found {} of {count} solutions", r.solutions.len())?;
                return Ok(EXIT_DEGENERATE);
            }
        }
        Command::Reduce { action } => match action {
            ReduceAction::ToSystem { solution } => {
                let s = parse_solution(&solution)?;
                if !verify_eq5(&s) {
                    writeln!(err, "not a solution")?;
                    return Ok(EXIT_FAILED);
                }
                emit(out, &json!(Octuple::from(&to_system(&s))))?;
            }
            ReduceAction::FromSystem { solution } => {
                let (x, y) = parse_octuple(&solution)?;
                let s = from_system(&SystemSolution::new(x, y))?;
                emit(out, &json!(Octuple::from(&s)))?;
            }
        },
        Command::Search(a) => return search(&a, out, err),
        Command::Selftest => {
            let mut all = true;
            for id in FamilyId::ALL {
                let r = verify_family_symbolic(id);
                all &= r.all_hold();
                for v in records::report(&r) {
                    emit(out, &v)?;
                }
            }
            return Ok(if all { EXIT_OK } else { EXIT_FAILED });
        }
    }
    Ok(EXIT_OK)
}

fn search(a: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = SearchConfig {
        b1: a.b1,
        b2: a.b2,
        cap: a.cap,
    };
    let found = parallel_search(&cfg, a.jobs)?;
    let mut file;
    let sink: &mut dyn Write = match &a.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    for s in &found {
        writeln!(
            sink,
            "{}",
            serde_json::to_string(&SextupleRecord::new(s)).expect("serializable")
        )?;
    }
    sink.flush()?;
    writeln!(err, "{} sextuples", found.len())?;
    Ok(EXIT_OK)
}
