use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use quasichrom_core::io::{self, Instance};
use quasichrom_core::{oracle, transforms, tutte, ElementList, Error, GSpec, Limits};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "quasichrom", version, about = "Chromatic quasi-polynomials and G-Tutte polynomials of lists in abelian groups")]
struct Cli {
    /// Longest list whose sublists may be enumerated.
    #[arg(long, global = true, default_value_t = quasichrom_core::DEFAULT_SUBSET_CAP)]
    subset_cap: usize,
    /// Largest brute-force enumeration an oracle may perform.
    #[arg(long, global = true, default_value_t = quasichrom_core::DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic quasi-polynomial as JSON.
    Chromatic {
        input: Option<PathBuf>,
        /// Read a graph in edge-list format instead of an instance file.
        #[arg(long, conflicts_with = "input")]
        graph: Option<PathBuf>,
        /// Add a LaTeX cases display.
        #[arg(long)]
        latex: bool,
    },
    /// G-Tutte polynomial.
    Tutte {
        input: PathBuf,
        /// Coefficient group: k:<int>, Z or QZ.
        #[arg(long)]
        g: String,
    },
    /// G-characteristic polynomial.
    Charpoly {
        input: PathBuf,
        #[arg(long)]
        g: String,
    },
    /// Characteristic polynomial of the real arrangement.
    RealCharpoly { input: PathBuf },
    /// Compare the symbolic result with brute-force counts.
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 24)]
        qmax: u64,
        /// Quasi-polynomial JSON that the computed result must equal.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Convert between list-in-group and matrix-pair instances.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Compare both oracles on the source and converted instance.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 24)]
        qmax: u64,
    },
    /// LCM-period and minimal period of the chromatic quasi-polynomial.
    Period { input: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Cw,
    Bm,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> CliResult<Instance> {
    Ok(io::parse_instance(&read(path)?)?)
}

/// The list in a group described by an instance file; matrix-pair instances are
/// converted first.
fn read_list(path: &Path) -> CliResult<ElementList> {
    Ok(match read_instance(path)? {
        Instance::Bm(list) => list,
        Instance::Cw(cw) => transforms::cw_to_bm(&cw)?.1,
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn run(cli: Cli) -> CliResult<u8> {
    let limits = Limits { subset_cap: cli.subset_cap, enum_cap: cli.enum_cap };
    match cli.command {
        Command::Chromatic { input, graph, latex } => {
            let list = match (input, graph) {
                (_, Some(g)) => transforms::graph_to_list(&io::parse_graph(&read(&g)?)?)?,
                (Some(i), None) => read_list(&i)?,
                (None, None) => return Err(CliError::Input("give an instance file or --graph".into())),
            };
            let f = tutte::chromatic_quasi(&list, &limits)?;
            let mut v = io::quasi_to_json(&f);
            if latex {
                let display = format!("\\chi^{{\\mathrm{{quasi}}}}_{{A}}(q) = {}", f.to_latex_cases("q"));
                v["latex"] = Value::String(display);
            }
            print_json(&v);
        }
        Command::Tutte { input, g } => {
            let g: GSpec = g.parse()?;
            print_json(&io::tutte_to_json(&tutte::g_tutte(&read_list(&input)?, &g, &limits)?));
        }
        Command::Charpoly { input, g } => {
            let g: GSpec = g.parse()?;
            print_json(&io::poly_to_json(&tutte::g_char_poly(&read_list(&input)?, &g, &limits)?, "t"));
        }
        Command::RealCharpoly { input } => {
            print_json(&io::poly_to_json(&tutte::real_char_poly(&read_list(&input)?, &limits)?, "t"));
        }
        Command::Verify { input, qmax, expect } => return verify(&read_list(&input)?, qmax, expect.as_deref(), &limits),
        Command::Convert { input, to, check, qmax } => return convert(read_instance(&input)?, to, check, qmax, &limits),
        Command::Period { input } => {
            let list = read_list(&input)?;
            let f = tutte::chromatic_quasi(&list, &limits)?;
            let mut m = serde_json::Map::new();
            m.insert("lcm_period".into(), f.period().into());
            m.insert("minimal_period".into(), tutte::minimal_period(&f).into());
            print_json(&Value::Object(m));
        }
    }
    Ok(0)
}

fn status(ok: bool) -> &'static str {
    if ok { "PASS" } else { "FAIL" }
}

fn verify(list: &ElementList, qmax: u64, expect: Option<&Path>, limits: &Limits) -> CliResult<u8> {
    let report = oracle::verify(list, qmax, limits)?;
    print!("{report}");
    let f = tutte::chromatic_quasi(list, limits)?;
    let dc_ok = tutte::chromatic_quasi_dc(list, limits)?.same_function(&f);
    println!("deletion-contraction {}", status(dc_ok));
    let gcd_ok = f.has_gcd_property();
    println!("gcd-property {}", status(gcd_ok));
    let mut ok = report.passed() && dc_ok && gcd_ok;
    if let Some(path) = expect {
        let v: Value = serde_json::from_str(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let expected = io::quasi_from_json(&v)?;
        let expect_ok = expected.same_function(&f);
        println!("expect {}", status(expect_ok));
        ok &= expect_ok;
    }
    Ok(if ok { 0 } else { EXIT_VERIFY_FAILED })
}

fn convert(inst: Instance, to: Target, check: bool, qmax: u64, limits: &Limits) -> CliResult<u8> {
    let converted = match (&inst, to) {
        (Instance::Bm(list), Target::Cw) => Instance::Cw(transforms::bm_to_cw(list)?.0),
        (Instance::Cw(cw), Target::Bm) => Instance::Bm(transforms::cw_to_bm(cw)?.1),
        _ => inst.clone(),
    };
    print_json(&io::instance_to_json(&converted));
    if !check {
        return Ok(0);
    }
    let count = |i: &Instance, q| match i {
        Instance::Bm(list) => oracle::bm_count(list, q, limits),
        Instance::Cw(cw) => oracle::cw_count(cw, q, limits),
    };
    let mut ok = true;
    for q in 1..=qmax {
        let (a, b) = (count(&inst, q)?, count(&converted, q)?);
        eprintln!("q={q} source={a} converted={b} {}", status(a == b));
        ok &= a == b;
    }
    Ok(if ok { 0 } else { EXIT_VERIFY_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_cap_exceeded() { EXIT_CAP } else { EXIT_INPUT })
        }
    }
}
