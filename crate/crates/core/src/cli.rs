//! Command-line front end.
//!
//! Exit codes: 0 success / factor exists / theorem holds; 1 no factor or not
//! applicable (still a valid answer); 2 usage or input error; 3 search budget
//! exhausted.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{build_g1, build_g2, near_complete_block, ConstructionOutput};
use crate::factor::{h_factor_decide_with, FactorSpec, SolverOptions, Verdict, DEFAULT_BUDGET};
use crate::formats::{decode_all, encode, encode_graph6, Format};
use crate::graph::{Graph, Vertex};
use crate::verify::{check_certificate, gallai_check, hub_parity_analysis, verify_theorem2_with_budget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "graph-factors", version, about = "Regular-graph factor toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate the block H, or the G1 / G2 families.
    Gen {
        family: GenFamily,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "graph6")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit a JSON report with the construction descriptor.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an H-factor exists.
    Factor {
        mode: FactorMode,
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Build the decomposition tables on all cores.
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check theorem hypotheses or produce parity certificates.
    Verify {
        what: VerifyWhat,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated hub vertices (default: the cut vertices).
        #[arg(long, value_delimiter = ',')]
        hubs: Option<Vec<Vertex>>,
        /// Degree set for no-factor, overriding `--k`.
        #[arg(long, value_delimiter = ',')]
        spec: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Convert between graph formats.
    Convert {
        #[arg(long)]
        from: FormatArg,
        #[arg(long)]
        to: FormatArg,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFamily {
    Block,
    G1,
    G2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FactorMode {
    Check,
    Find,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Thm2,
    Gallai,
    NoFactor,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Dimacs,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Dimacs => Format::Dimacs,
            FormatArg::Edges => Format::EdgeList,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SpecArgs {
    /// Comma-separated allowed degrees, e.g. `1,5`.
    #[arg(long, value_delimiter = ',')]
    spec: Option<Vec<usize>>,
    /// Shorthand for `{k, r-k}` with `r` the graph's regularity.
    #[arg(long)]
    kr: Option<usize>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file; standard input when absent or `-`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long = "input-format", default_value = "graph6")]
    input_format: FormatArg,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Failure> {
    match cmd {
        Command::Gen { family, r, format, out, json } => gen(family, r, format.into(), out, json, io),
        Command::Factor { mode, spec, input, budget, parallel, json } => {
            let opts = SolverOptions { budget, parallel, ..SolverOptions::default() };
            factor(mode, &spec, &input, &opts, json, io)
        }
        Command::Verify { what, input, k, hubs, spec, budget, json } => {
            verify(what, &input, k, hubs, spec, budget, json, io)
        }
        Command::Convert { from, to, input, out } => {
            let text = read_input(input.as_ref(), io)?;
            let graphs = decode_all(&text, from.into())?;
            let mut buf = String::new();
            for g in &graphs {
                buf.push_str(&encode(g, to.into())?);
            }
            write_output(out.as_ref(), buf.as_bytes(), io)?;
            Ok(EXIT_OK)
        }
    }
}

fn read_input(path: Option<&PathBuf>, io: &mut Io) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io.stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&PathBuf>, bytes: &[u8], io: &mut Io) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => Ok(io.stdout.write_all(bytes)?),
    }
}

fn read_graphs(input: &InputArgs, io: &mut Io) -> Result<Vec<Graph>, Failure> {
    let text = read_input(input.input.as_ref(), io)?;
    let graphs = decode_all(&text, input.input_format.into())?;
    if graphs.is_empty() {
        return Err(Failure("no graph in input".into()));
    }
    Ok(graphs)
}

/// One JSON report per result: command echo, input summary, payload, time.
#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    input: Value,
    result: Value,
    wall_time_ms: f64,
}

fn summary(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edge_count(), "regularity": g.regularity() })
}

fn emit_report(io: &mut Io, command: &str, g: &Graph, result: Value, started: Instant) -> Result<(), Failure> {
    let report = Report { command, input: summary(g), result, wall_time_ms: started.elapsed().as_secs_f64() * 1e3 };
    writeln!(io.stdout, "{}", serde_json::to_string(&report)?)?;
    Ok(())
}

fn gen(
    family: GenFamily,
    r: usize,
    format: Format,
    out: Option<PathBuf>,
    json: bool,
    io: &mut Io,
) -> Result<i32, Failure> {
    let started = Instant::now();
    let built: ConstructionOutput = match family {
        GenFamily::Block => near_complete_block(r)?.into(),
        GenFamily::G1 => build_g1(r)?,
        GenFamily::G2 => build_g2(r)?,
    };
    if json {
        let g6 = String::from_utf8(encode_graph6(&built.graph)?).expect("ascii");
        let result = json!({ "descriptor": built.descriptor(), "graph6": g6 });
        emit_report(io, "gen", &built.graph, result, started)?;
    }
    let text = encode(&built.graph, format)?;
    if out.is_some() || !json {
        write_output(out.as_ref(), text.as_bytes(), io)?;
    }
    Ok(EXIT_OK)
}

/// Folds per-graph codes for batch input: error > inconclusive > negative.
fn combine(a: i32, b: i32) -> i32 {
    let rank = |c| match c {
        EXIT_USAGE => 3,
        EXIT_INCONCLUSIVE => 2,
        EXIT_NEGATIVE => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn resolve_spec(args: &SpecArgs, g: &Graph) -> Result<FactorSpec, Failure> {
    match (&args.spec, args.kr) {
        (Some(s), _) => Ok(FactorSpec::new(s.iter().copied())?),
        (None, Some(k)) => {
            let r = g.regularity().ok_or_else(|| Failure("--kr needs a regular graph".into()))?;
            if k > r {
                return Err(Failure(format!("k = {k} exceeds the degree {r}")));
            }
            Ok(FactorSpec::k_and_complement(k, r))
        }
        (None, None) => Err(Failure("one of --spec or --kr is required".into())),
    }
}

fn factor(
    mode: FactorMode,
    spec_args: &SpecArgs,
    input: &InputArgs,
    opts: &SolverOptions,
    json: bool,
    io: &mut Io,
) -> Result<i32, Failure> {
    let graphs = read_graphs(input, io)?;
    let mut code = EXIT_OK;
    for g in &graphs {
        let started = Instant::now();
        let spec = resolve_spec(spec_args, g)?;
        let decision = h_factor_decide_with(g, &spec, opts);
        let this = match &decision.verdict {
            Verdict::Exists(_) => EXIT_OK,
            Verdict::NotExists(_) => EXIT_NEGATIVE,
            Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        };
        code = combine(code, this);
        if json {
            let mut result = serde_json::to_value(&decision)?;
            result["spec"] = serde_json::to_value(&spec)?;
            if matches!(mode, FactorMode::Check) {
                result.as_object_mut().expect("object").remove("certificate");
            }
            emit_report(io, "factor", g, result, started)?;
            continue;
        }
        let line = match (&decision.verdict, mode) {
            (Verdict::Exists(c), FactorMode::Find) => format!("exists {spec} {}", serde_json::to_string(c)?),
            (Verdict::Exists(_), FactorMode::Check) => format!("exists {spec}"),
            (Verdict::NotExists(m), _) => {
                format!("not-exists {spec} ({})", serde_json::to_value(m)?.as_str().unwrap_or(""))
            }
            (Verdict::Inconclusive, _) => format!("inconclusive {spec} (budget {})", opts.budget),
        };
        writeln!(io.stdout, "{line}")?;
    }
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    what: VerifyWhat,
    input: &InputArgs,
    k: Option<usize>,
    hubs: Option<Vec<Vertex>>,
    spec: Option<Vec<usize>>,
    budget: u64,
    json: bool,
    io: &mut Io,
) -> Result<i32, Failure> {
    let graphs = read_graphs(input, io)?;
    let mut code = EXIT_OK;
    for g in &graphs {
        let started = Instant::now();
        let (this, result, line) = match what {
            VerifyWhat::Thm2 => {
                let check = verify_theorem2_with_budget(g, budget)?;
                let this = if check.decision.is_inconclusive() {
                    EXIT_INCONCLUSIVE
                } else if check.holds {
                    EXIT_OK
                } else {
                    EXIT_NEGATIVE
                };
                let half = check.r / 2;
                let found = if check.decision.exists() { "found" } else { "absent" };
                let line = format!(
                    "{} n={} r={} {half}-factor {found}",
                    if check.holds { "confirmed" } else { "not confirmed" },
                    check.n,
                    check.r
                );
                (this, serde_json::to_value(&check)?, line)
            }
            VerifyWhat::Gallai => {
                let k = k.ok_or_else(|| Failure("verify gallai needs --k".into()))?;
                let rep = gallai_check(g, k);
                let line = match &rep.reason {
                    None => format!("applicable m={} r={} k={k}", rep.m.unwrap_or(0), rep.r.unwrap_or(0)),
                    Some(why) => format!("not applicable: {why}"),
                };
                (if rep.applicable { EXIT_OK } else { EXIT_NEGATIVE }, serde_json::to_value(&rep)?, line)
            }
            VerifyWhat::NoFactor => {
                let spec = match (&spec, k) {
                    (Some(s), _) => FactorSpec::new(s.iter().copied())?,
                    (None, Some(k)) => {
                        let r = g.regularity().ok_or_else(|| Failure("--k needs a regular graph".into()))?;
                        if k > r {
                            return Err(Failure(format!("k = {k} exceeds the degree {r}")));
                        }
                        FactorSpec::k_and_complement(k, r)
                    }
                    (None, None) => return Err(Failure("verify no-factor needs --k or --spec".into())),
                };
                let hubs = hubs.clone().unwrap_or_else(|| g.articulation_points());
                match hub_parity_analysis(g, &hubs, &spec) {
                    Ok(cert) => {
                        let checked = check_certificate(g, &cert);
                        let reach: Vec<String> = cert.achievable.iter().map(|(h, d)| format!("{h}:{d:?}")).collect();
                        let line = if checked {
                            format!("no {spec}-factor; hub degrees {}", reach.join(" "))
                        } else {
                            format!("inconclusive certificate for {spec}; hub degrees {}", reach.join(" "))
                        };
                        let mut v = serde_json::to_value(&cert)?;
                        v["checked"] = json!(checked);
                        (if checked { EXIT_OK } else { EXIT_NEGATIVE }, v, line)
                    }
                    Err(why) => (
                        EXIT_NEGATIVE,
                        json!({ "applicable": false, "reason": why.to_string() }),
                        format!("not applicable: {why}"),
                    ),
                }
            }
        };
        code = combine(code, this);
        if json {
            let name = match what {
                VerifyWhat::Thm2 => "verify thm2",
                VerifyWhat::Gallai => "verify gallai",
                VerifyWhat::NoFactor => "verify no-factor",
            };
            emit_report(io, name, g, result, started)?;
        } else {
            writeln!(io.stdout, "{line}")?;
        }
    }
    Ok(code)
}
