use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use srm_core::bruhat::{
    bruhat_join, bruhat_leq, bruhat_meet, covers, meet_irreducible_decomposition, BruhatPoset,
};
use srm_core::decompose::{find_joint_realization_capped, signed_subperm_decomposition};
use srm_core::digraph::{orderability_refusal, srm_ordering};
use srm_core::enumerate::{count_srms_capped, enumerate_srms_capped, ClassFilter, DEFAULT_MAX_CELLS};
use srm_core::extremal::{extremal_srm, max_nonzeros};
use srm_core::interchange::{eliminate_minus_ones, srm_interchange_path, InterchangeTrace};
use srm_core::io::{parse_digraph, parse_rational_matrix, parse_sign_matrix, parse_vector};
use srm_core::margins::MarginPair;
use srm_core::polytope::{is_vertex, polytope_contains, verify_polytope, Membership, PolytopeSpec};
use srm_core::verify::{run_suite, SUITES};
use srm_core::{validate_srm, Error, SignMatrix, Srm};

#[derive(Parser)]
#[command(name = "srm", version, about = "Sign-restricted (0,±1)-matrices")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest m*n accepted by exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the SRM conditions for a matrix file.
    Validate { file: PathBuf },
    /// List or count the SRMs of a shape.
    Enumerate {
        m: usize,
        n: usize,
        #[arg(long)]
        count: bool,
        /// Only matrices without -1 entries.
        #[arg(long)]
        plus: bool,
        /// Bound on every row sum.
        #[arg(long)]
        c: Option<i64>,
        /// Row sums, as in `1,0`.
        #[arg(long, requires = "cols", allow_hyphen_values = true)]
        rows: Option<String>,
        /// Column sums.
        #[arg(long, requires = "rows", allow_hyphen_values = true)]
        cols: Option<String>,
    },
    /// Maximum number of nonzeros of an m x n SRM.
    Zeta {
        m: usize,
        n: usize,
        /// Also print a matrix attaining the maximum.
        #[arg(long)]
        matrix: bool,
    },
    /// Remove every -1 by interchanges, printing the steps.
    Eliminate {
        file: PathBuf,
        #[arg(long)]
        verbose: bool,
    },
    /// Interchange path between two SRMs with equal margins.
    Path {
        from: PathBuf,
        to: PathBuf,
        #[arg(long)]
        verbose: bool,
    },
    /// Bruhat order operations.
    #[command(subcommand)]
    Bruhat(BruhatCommand),
    /// Hasse diagram of the Bruhat order on an SRM class.
    Hasse(HasseArgs),
    /// Order a looped digraph's incidence matrix into an SRM.
    Incidence { file: PathBuf },
    /// Polytope membership or a full exact check of a c-SRM polytope.
    Polytope {
        /// Rational matrix file to test.
        #[arg(long, conflicts_with = "verify", requires = "c")]
        check: Option<PathBuf>,
        /// Row-sum bound for `--check`.
        #[arg(long)]
        c: Option<i64>,
        /// `m n c`: compare integral points, vertices and the enumerated class.
        #[arg(long, num_args = 3, value_names = ["M", "N", "C"])]
        verify: Option<Vec<i64>>,
    },
    /// Signed subpermutation decomposition of an SRM.
    Decompose { file: PathBuf },
    /// Disjoint (0,1)-matrices with prescribed margins.
    Joint {
        #[arg(long)]
        r1: String,
        #[arg(long)]
        s1: String,
        #[arg(long)]
        r2: String,
        #[arg(long)]
        s2: String,
    },
    /// Run every verification suite and print a pass/fail table.
    VerifyAll {
        /// Also print each suite's observations.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
enum BruhatCommand {
    /// Whether A <= B.
    Leq { a: PathBuf, b: PathBuf },
    Meet { a: PathBuf, b: PathBuf },
    Join { a: PathBuf, b: PathBuf },
    /// Whether B covers A.
    Covers { a: PathBuf, b: PathBuf },
    Hasse(HasseArgs),
    /// Single-row matrices whose meet is A.
    Decompose { a: PathBuf },
}

#[derive(Args)]
struct HasseArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Restrict to matrices without -1 entries.
    #[arg(long)]
    plus: bool,
    /// Write DOT to this file instead of printing the edge list.
    #[arg(long)]
    dot: Option<PathBuf>,
}

/// An error that maps to exit status 1 after its message is printed.
struct Domain(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Domain {
    fn from(e: E) -> Self {
        Domain(e.into())
    }
}

type Outcome = Result<bool, Domain>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Domain(e)) => {
            let _ = out.flush();
            if cli.json {
                println!("{}", json!({ "error": format!("{e:#}") }));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_matrix(path: &Path) -> anyhow::Result<SignMatrix> {
    parse_sign_matrix(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_srm(path: &Path) -> anyhow::Result<Srm> {
    let m = read_matrix(path)?;
    validate_srm(&m)
        .map_err(Error::NotSrm)
        .with_context(|| path.display().to_string())
}

fn rows_json(m: &SignMatrix) -> serde_json::Value {
    json!(m.to_rows())
}

fn print_trace(out: &mut impl Write, trace: &InterchangeTrace, verbose: bool, as_json: bool) -> anyhow::Result<()> {
    let states = trace.replay()?;
    if as_json {
        let steps: Vec<String> = trace.steps.iter().map(ToString::to_string).collect();
        let mut v = json!({ "steps": steps, "end": rows_json(states.last().expect("nonempty")) });
        if verbose {
            v["states"] = states.iter().map(rows_json).collect();
        }
        writeln!(out, "{v}")?;
        return Ok(());
    }
    if verbose {
        write!(out, "{}", states[0])?;
    }
    for (step, state) in trace.steps.iter().zip(&states[1..]) {
        writeln!(out, "{step}")?;
        if verbose {
            write!(out, "{state}")?;
        }
    }
    if !verbose {
        write!(out, "{}", states.last().expect("nonempty"))?;
    }
    Ok(())
}

fn hasse(out: &mut impl Write, args: &HasseArgs, max_cells: usize, as_json: bool) -> anyhow::Result<()> {
    let h = BruhatPoset::with_cap(args.m, args.n, args.plus, max_cells)?.hasse_diagram();
    if let Some(path) = &args.dot {
        fs::write(path, h.to_dot()).with_context(|| format!("writing {}", path.display()))?;
    }
    if as_json {
        let nodes: Vec<String> = h.nodes.iter().map(|a| a.flat_label()).collect();
        writeln!(out, "{}", json!({ "nodes": nodes, "edges": h.edges }))?;
    } else if args.dot.is_none() {
        for &(x, y) in &h.edges {
            writeln!(out, "{} < {}", h.nodes[x].flat_label(), h.nodes[y].flat_label())?;
        }
    } else {
        writeln!(out, "{} nodes, {} edges", h.nodes.len(), h.edges.len())?;
    }
    Ok(())
}

fn print_bool(out: &mut impl Write, key: &str, v: bool, as_json: bool) -> anyhow::Result<()> {
    if as_json {
        writeln!(out, "{}", json!({ key: v }))?;
    } else {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn print_matrix(out: &mut impl Write, m: &SignMatrix, as_json: bool) -> anyhow::Result<()> {
    if as_json {
        writeln!(out, "{}", json!({ "matrix": rows_json(m) }))?;
    } else {
        write!(out, "{m}")?;
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let as_json = cli.json;
    match &cli.command {
        Command::Validate { file } => {
            let m = read_matrix(file)?;
            let result = validate_srm(&m);
            if as_json {
                let v = match &result {
                    Ok(_) => json!({ "srm": true }),
                    Err(v) => json!({ "srm": false, "violation": v, "message": v.to_string() }),
                };
                writeln!(out, "{v}")?;
            } else {
                match &result {
                    Ok(_) => writeln!(out, "valid")?,
                    Err(v) => eprintln!("{v}"),
                }
            }
            return Ok(result.is_ok());
        }
        Command::Enumerate { m, n, count, plus, c, rows, cols } => {
            let filter = ClassFilter {
                plus_only: *plus,
                margins: match (rows, cols) {
                    (Some(r), Some(s)) => Some(MarginPair::new(parse_vector(r)?, parse_vector(s)?)),
                    _ => None,
                },
                c_bound: *c,
            };
            if *count {
                let k = count_srms_capped(*m, *n, &filter, cli.max_cells)?;
                if as_json {
                    writeln!(out, "{}", json!({ "count": k }))?;
                } else {
                    writeln!(out, "{k}")?;
                }
            } else if as_json {
                let all: Vec<_> = enumerate_srms_capped(*m, *n, &filter, cli.max_cells)?
                    .map(|a| rows_json(&a))
                    .collect();
                writeln!(out, "{}", json!({ "matrices": all }))?;
            } else {
                for (k, a) in enumerate_srms_capped(*m, *n, &filter, cli.max_cells)?.enumerate() {
                    if k > 0 {
                        writeln!(out)?;
                    }
                    write!(out, "{a}")?;
                }
            }
        }
        Command::Zeta { m, n, matrix } => {
            if *m == 0 || *n == 0 {
                return Err(anyhow!("shape must be at least 1x1").into());
            }
            let z = max_nonzeros(*m, *n);
            if as_json {
                let mut v = json!({ "zeta": z });
                if *matrix {
                    v["matrix"] = rows_json(&extremal_srm(*m, *n));
                }
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{z}")?;
                if *matrix {
                    write!(out, "{}", extremal_srm(*m, *n))?;
                }
            }
        }
        Command::Eliminate { file, verbose } => {
            let a = read_srm(file)?;
            let (_, trace) = eliminate_minus_ones(&a);
            print_trace(out, &trace, *verbose, as_json)?;
        }
        Command::Path { from, to, verbose } => {
            let a = read_srm(from)?;
            let b = read_srm(to)?;
            let trace = srm_interchange_path(&a, &b)?;
            print_trace(out, &trace, *verbose, as_json)?;
        }
        Command::Bruhat(cmd) => match cmd {
            BruhatCommand::Leq { a, b } => print_bool(out, "leq", bruhat_leq(&read_srm(a)?, &read_srm(b)?)?, as_json)?,
            BruhatCommand::Covers { a, b } => {
                print_bool(out, "covers", covers(&read_srm(a)?, &read_srm(b)?)?, as_json)?
            }
            BruhatCommand::Meet { a, b } => print_matrix(out, bruhat_meet(&read_srm(a)?, &read_srm(b)?)?.matrix(), as_json)?,
            BruhatCommand::Join { a, b } => print_matrix(out, bruhat_join(&read_srm(a)?, &read_srm(b)?)?.matrix(), as_json)?,
            BruhatCommand::Hasse(args) => hasse(out, args, cli.max_cells, as_json)?,
            BruhatCommand::Decompose { a } => {
                let parts = meet_irreducible_decomposition(&read_srm(a)?);
                if as_json {
                    let v: Vec<_> = parts.iter().map(|p| rows_json(p)).collect();
                    writeln!(out, "{}", json!({ "meet_of": v }))?;
                } else {
                    for (k, p) in parts.iter().enumerate() {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        write!(out, "{p}")?;
                    }
                }
            }
        },
        Command::Hasse(args) => hasse(out, args, cli.max_cells, as_json)?,
        Command::Incidence { file } => {
            let d = parse_digraph(&read_text(file)?)?;
            if let Some(refusal) = orderability_refusal(&d)? {
                if as_json {
                    writeln!(out, "{}", json!({ "orderable": false, "reason": refusal, "message": refusal.to_string() }))?;
                } else {
                    writeln!(out, "not orderable: {refusal}")?;
                }
                return Ok(false);
            }
            let o = srm_ordering(&d)?;
            let one_based = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
            if as_json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "orderable": true,
                        "vertex_order": one_based(&o.vertex_order),
                        "edge_order": one_based(&o.edge_order),
                        "matrix": rows_json(&o.matrix),
                    })
                )?;
            } else {
                writeln!(out, "vertices: {:?}", one_based(&o.vertex_order))?;
                writeln!(out, "edges: {:?}", one_based(&o.edge_order))?;
                write!(out, "{}", o.matrix)?;
            }
        }
        Command::Polytope { check, c, verify } => {
            if let Some(path) = check {
                let x = parse_rational_matrix(&read_text(path)?)?;
                let (m, n) = x.shape();
                let spec = PolytopeSpec::c_srm(m, n, c.expect("clap requires --c"))?;
                let membership = polytope_contains(&x, &spec)?;
                let vertex = membership.is_inside() && is_vertex(&x, &spec)?;
                if as_json {
                    let v = match &membership {
                        Membership::Inside => json!({ "inside": true, "vertex": vertex }),
                        Membership::Outside(v) => json!({ "inside": false, "violation": v.to_string() }),
                    };
                    writeln!(out, "{v}")?;
                } else {
                    match &membership {
                        Membership::Inside => writeln!(out, "inside{}", if vertex { ", vertex" } else { "" })?,
                        Membership::Outside(v) => writeln!(out, "outside: {v}")?,
                    }
                }
                return Ok(membership.is_inside());
            }
            let Some(args) = verify else {
                return Err(anyhow!("give --check FILE --c K or --verify M N C").into());
            };
            let (m, n) = (usize::try_from(args[0])?, usize::try_from(args[1])?);
            let report = verify_polytope(m, n, args[2])?;
            if as_json {
                writeln!(out, "{}", json!({ "passed": report.passed(), "report": report }))?;
            } else {
                writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" })?;
                writeln!(out, "{report:?}")?;
            }
            return Ok(report.passed());
        }
        Command::Decompose { file } => {
            let a = read_srm(file)?;
            let d = signed_subperm_decomposition(&a)?;
            if as_json {
                writeln!(out, "{}", serde_json::to_string(&d)?)?;
            } else {
                write!(out, "{d}")?;
            }
        }
        Command::Joint { r1, s1, r2, s2 } => {
            let v = [r1, s1, r2, s2].map(|s| parse_vector(s));
            let [r1, s1, r2, s2] = v;
            let found = find_joint_realization_capped(&r1?, &s1?, &r2?, &s2?, cli.max_cells)?;
            match (found, as_json) {
                (Some(j), true) => writeln!(out, "{}", json!({ "b1": rows_json(&j.b1), "b2": rows_json(&j.b2) }))?,
                (Some(j), false) => write!(out, "{j}")?,
                (None, true) => writeln!(out, "{}", json!({ "b1": null, "b2": null }))?,
                (None, false) => writeln!(out, "none")?,
            }
        }
        Command::VerifyAll { verbose } => {
            let mut all_passed = true;
            let mut reports = Vec::new();
            for &(id, _) in SUITES.iter() {
                let report = run_suite(id).expect("listed suite");
                all_passed &= report.passed;
                if !as_json {
                    writeln!(out, "{report}")?;
                    if *verbose || !report.passed {
                        for line in &report.details {
                            writeln!(out, "      {line}")?;
                        }
                    }
                    out.flush()?;
                }
                reports.push(report);
            }
            if as_json {
                writeln!(out, "{}", json!({ "passed": all_passed, "suites": reports }))?;
            }
            return Ok(all_passed);
        }
    }
    Ok(true)
}
