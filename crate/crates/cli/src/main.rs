//! `ncnet`: run the network, bracket and r-matrix checks from the command line.
//!
//! Exit status: 0 when every check passes, 1 on a verification failure, 2 on bad input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ncnet::bracket::{matrix_db, BracketParams, GeneratorTable};
use ncnet::error::Error;
use ncnet::integrable::{verify_involutivity, verify_lax};
use ncnet::io::{read_network, serialize_matrix_compact, serialize_tensor};
use ncnet::network::{
    boundary_matrix, decompose, glue_to_torus, named_fixtures, random_cylindrical, random_planar, reglue, Network,
    Surface,
};
use ncnet::refactor::{flow_rhs, verify_flow, FreeMatrixContext};
use ncnet::report::Defect;
use ncnet::rmatrix::{
    check_r_conditions, check_rho, disk_r, disk_rho, quasi_jacobi_check, trig_r, trig_rho, verify_rmatrix_theorem,
    FormalLaxContext,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "ncnet", version, about = "Checks for double brackets on perfect networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Network file, or the name of a shipped fixture.
    #[arg(long, global = true)]
    network: Option<String>,
    /// Bracket parameter file, or "standard".
    #[arg(long, global = true, default_value = "standard")]
    params: String,
    #[arg(long, global = true)]
    k: Option<usize>,
    #[arg(long, global = true)]
    l: Option<usize>,
    /// Matrix size.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Truncation degree for the refactorization checks.
    #[arg(long, global = true, default_value_t = 6)]
    degree: usize,
    /// Seed for random networks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Which r-matrix to check.
    #[arg(long = "type", global = true, value_enum, default_value_t = RType::Trig)]
    rtype: RType,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Check the structural rules of a network file.
    Validate,
    /// Print the boundary measurement matrix.
    Measure,
    /// Print the double brackets of boundary measurements.
    Bracket,
    /// r-matrix formula on a disk network, or on seeded random ones.
    VerifyPlanar,
    /// r-matrix formula on a cylindrical network, or on seeded random ones.
    VerifyCylinder,
    /// Skew-symmetry, the two quasi Yang-Baxter equations and the ρ identity.
    Ybe,
    /// Formal quasi-Jacobi identity for the Lax matrix.
    Jacobi,
    /// `{tr B(λ)^k, B(μ)} = MB − BM` on a network glued into a torus.
    Lax,
    /// Vanishing of `⟨tr B(λ)^k, tr B(μ)^l⟩`.
    Involution,
    /// Hamiltonian flow, Gauss factorization and trace invariance.
    Refactor,
    /// Split a network into elementary pieces and glue them back.
    Decompose,
    /// Everything above on the fixture corpus.
    Suite,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum RType {
    Trig,
    Disk,
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Serialize)]
struct Report {
    command: String,
    fixture: Option<String>,
    status: Status,
    defects: Vec<Defect>,
    wall_time_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// A check's result before timing: defects plus optional printable output.
struct Found {
    defects: Vec<Defect>,
    output: Option<String>,
}

impl Found {
    fn defects(defects: Vec<Defect>) -> Found {
        Found { defects, output: None }
    }
}

/// Input problems exit with 2; everything else that goes wrong is an internal error.
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::InvalidNetwork(_)
            | Error::Cyclic(_)
            | Error::UnknownEdge(_)
            | Error::Surface(_)
            | Error::Argument(_)
            | Error::SizeMismatch(_) => Failure::Input(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn fixture_dir() -> PathBuf {
    std::env::var_os("NCNET_FIXTURES").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("fixtures"))
}

/// A path if it exists, otherwise `<fixtures>/<name>.json`.
fn resolve(name: &str) -> PathBuf {
    let p = Path::new(name);
    if p.exists() {
        return p.to_path_buf();
    }
    let dir = fixture_dir();
    let direct = dir.join(name);
    if direct.exists() || name.ends_with(".json") {
        direct
    } else {
        dir.join(format!("{name}.json"))
    }
}

fn load(name: &str) -> Res<Network> {
    Ok(read_network(&resolve(name))?)
}

fn need_network(cli: &Cli) -> Res<Network> {
    match &cli.network {
        Some(n) => load(n),
        None => Err(Failure::Input("--network is required".into())),
    }
}

fn params(cli: &Cli) -> Res<BracketParams> {
    if cli.params == "standard" {
        return Ok(BracketParams::standard());
    }
    let text = std::fs::read_to_string(&cli.params).map_err(|e| Failure::Input(format!("{}: {e}", cli.params)))?;
    Ok(BracketParams::from_json(&text)?)
}

fn validate(net: &Network) -> Found {
    Found::defects(net.validate().into_iter().map(|v| Defect::new(v.location, "valid", v.message)).collect())
}

fn measure(net: &Network) -> Res<Found> {
    let b = boundary_matrix(net)?;
    Ok(Found { defects: vec![], output: Some(serialize_matrix_compact(&b, net)) })
}

fn bracket(net: &Network, p: &BracketParams) -> Res<Found> {
    let b = boundary_matrix(net)?;
    let t = matrix_db(&GeneratorTable::from_network(net, p)?, &b, &b)?;
    let lines: Vec<String> = t
        .cells()
        .filter(|(_, c)| !c.is_zero())
        .map(|((i, j, k, l), c)| format!("{{b{}{}, b{}{}}} = {}", i + 1, j + 1, k + 1, l + 1, serialize_tensor(c, net)))
        .collect();
    Ok(Found { defects: vec![], output: Some(lines.join("\n")) })
}

fn verify_on(net: &Network, surface: Surface) -> Res<Vec<Defect>> {
    if net.surface != surface {
        return Err(Failure::Input(format!("expected a {surface:?} network")));
    }
    Ok(verify_rmatrix_theorem(net)?)
}

/// The given network, or 20 seeded random ones.
fn verify_family(cli: &Cli, surface: Surface) -> Res<Found> {
    if cli.network.is_some() {
        return Ok(Found::defects(verify_on(&need_network(cli)?, surface)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed.unwrap_or(0));
    let mut out = Vec::new();
    for i in 0..20 {
        let net = match surface {
            Surface::Disk => random_planar(&mut rng, 6, &format!("r{i}")),
            Surface::Cylinder => random_cylindrical(&mut rng, 5, &format!("r{i}")),
        };
        out.extend(verify_on(&net, surface)?.into_iter().map(|mut d| {
            d.location = format!("network {i}: {}", d.location);
            d
        }));
    }
    Ok(Found::defects(out))
}

fn ybe(t: RType, n: usize) -> Res<Found> {
    let (r, rho) = match t {
        RType::Trig => (trig_r(n)?, trig_rho(n)?),
        RType::Disk => (disk_r(n)?, disk_rho(n)?),
    };
    let mut d = check_r_conditions(&r, &r);
    d.extend(check_rho(&rho));
    Ok(Found::defects(d))
}

fn jacobi(t: RType, n: usize) -> Res<Found> {
    let r = match t {
        RType::Trig => trig_r(n)?,
        RType::Disk => disk_r(n)?,
    };
    let ctx = FormalLaxContext::new(n, 0, 1)?;
    Ok(Found::defects(quasi_jacobi_check(&ctx, &r, &r)?))
}

fn torus_network(cli: &Cli) -> Res<Network> {
    load(cli.network.as_deref().unwrap_or("torus"))
}

fn lax(cli: &Cli) -> Res<Found> {
    let ctx = glue_to_torus(&torus_network(cli)?)?;
    let ks: Vec<usize> = cli.k.map(|k| vec![k]).unwrap_or_else(|| vec![1, 2, 3]);
    let mut d = Vec::new();
    for k in ks {
        d.extend(verify_lax(&ctx, k)?);
    }
    Ok(Found::defects(d))
}

fn involution(cli: &Cli) -> Res<Found> {
    let ctx = glue_to_torus(&torus_network(cli)?)?;
    let ks: Vec<usize> = cli.k.map(|k| vec![k]).unwrap_or_else(|| vec![1, 2, 3]);
    let ls: Vec<usize> = cli.l.map(|l| vec![l]).unwrap_or_else(|| vec![1, 2, 3]);
    let mut d = Vec::new();
    let mut nonvacuous = false;
    for &k in &ks {
        for &l in &ls {
            let r = verify_involutivity(&ctx, k, l)?;
            d.extend(r.defects);
            nonvacuous |= r.nonvacuous;
        }
    }
    let note = if nonvacuous { "some bracket before reduction is nonzero" } else { "all brackets vanish before reduction" };
    Ok(Found { defects: d, output: Some(note.into()) })
}

fn refactor(n: usize, degree: usize) -> Res<Found> {
    let ctx = FreeMatrixContext::new(n, degree)?;
    let mut d = flow_rhs(&ctx)?.2;
    d.extend(verify_flow(&ctx)?.all());
    Ok(Found::defects(d))
}

fn decomposition(net: &Network) -> Res<Found> {
    let dec = decompose(net)?;
    let back = reglue(&dec)?;
    let (a, b) = (boundary_matrix(net)?, boundary_matrix(&back)?);
    let (sa, sb) = (serialize_matrix_compact(&a, net), serialize_matrix_compact(&b, &back));
    let mut d = validate(&back).defects;
    if sa != sb {
        d.push(Defect::new("reglued matrix", sa, sb.clone()));
    }
    let pieces: Vec<String> =
        dec.pieces.iter().map(|p| format!("{:?} at {} (vertex {})", p.color, p.position, p.vertex)).collect();
    Ok(Found { defects: d, output: Some(format!("{}\nreglued: {sb}", pieces.join("\n"))) })
}

fn run_one(cli: &Cli, cmd: Command) -> Res<Found> {
    let n = cli.n.unwrap_or(2);
    match cmd {
        Command::Validate => Ok(validate(&need_network(cli)?)),
        Command::Measure => measure(&need_network(cli)?),
        Command::Bracket => bracket(&need_network(cli)?, &params(cli)?),
        Command::VerifyPlanar => verify_family(cli, Surface::Disk),
        Command::VerifyCylinder => verify_family(cli, Surface::Cylinder),
        Command::Ybe => ybe(cli.rtype, cli.n.unwrap_or(3)),
        Command::Jacobi => jacobi(cli.rtype, n),
        Command::Lax => lax(cli),
        Command::Involution => involution(cli),
        Command::Refactor => refactor(n, cli.degree),
        Command::Decompose => decomposition(&need_network(cli)?),
        Command::Suite => unreachable!("the suite is expanded by the caller"),
    }
}

fn name(cmd: Command) -> String {
    let s = match cmd {
        Command::Validate => "validate",
        Command::Measure => "measure",
        Command::Bracket => "bracket",
        Command::VerifyPlanar => "verify-planar",
        Command::VerifyCylinder => "verify-cylinder",
        Command::Ybe => "ybe",
        Command::Jacobi => "jacobi",
        Command::Lax => "lax",
        Command::Involution => "involution",
        Command::Refactor => "refactor",
        Command::Decompose => "decompose",
        Command::Suite => "suite",
    };
    s.to_string()
}

fn timed(command: String, fixture: Option<String>, f: impl FnOnce() -> Res<Found>) -> (Report, u8) {
    let start = Instant::now();
    let r = f();
    let wall_time_ms = start.elapsed().as_millis();
    let (status, defects, output, error, code) = match r {
        Ok(found) if found.defects.is_empty() => (Status::Pass, vec![], found.output, None, 0),
        Ok(found) => (Status::Fail, found.defects, found.output, None, 1),
        Err(Failure::Input(e)) => (Status::Error, vec![], None, Some(e), 2),
        Err(Failure::Internal(e)) => (Status::Error, vec![], None, Some(e), 1),
    };
    (Report { command, fixture, status, defects, wall_time_ms, output, error }, code)
}

/// Every check on the shipped fixtures, in a fixed order.
fn suite(cli: &Cli) -> Vec<(Report, u8)> {
    let mut out = Vec::new();
    let fixtures: Vec<&str> = named_fixtures().iter().map(|(n, _)| *n).collect();
    for f in &fixtures {
        out.push(timed("validate".into(), Some(f.to_string()), || Ok(validate(&load(f)?))));
    }
    out.push(timed("measure".into(), Some("fig1".into()), || {
        let got = measure(&load("fig1")?)?.output.unwrap_or_default();
        let want = "(d, dc; ad, b+adc)";
        Ok(Found::defects(if got == want { vec![] } else { vec![Defect::new("B", want, got)] }))
    }));
    for f in &fixtures {
        out.push(timed("verify".into(), Some(f.to_string()), || Ok(Found::defects(verify_rmatrix_theorem(&load(f)?)?))));
    }
    out.push(timed("verify-planar".into(), None, || verify_family(cli, Surface::Disk)));
    out.push(timed("verify-cylinder".into(), None, || verify_family(cli, Surface::Cylinder)));
    for n in 1..=4 {
        out.push(timed(format!("ybe trig n={n}"), None, || ybe(RType::Trig, n)));
    }
    out.push(timed("jacobi trig n=2".into(), None, || jacobi(RType::Trig, 2)));
    out.push(timed("lax".into(), Some("torus".into()), || lax(cli)));
    out.push(timed("involution".into(), Some("torus".into()), || involution(cli)));
    out.push(timed(format!("refactor n=2 degree={}", cli.degree), None, || refactor(2, cli.degree)));
    for f in &fixtures {
        out.push(timed("decompose".into(), Some(f.to_string()), || decomposition(&load(f)?)));
    }
    out
}

fn text(r: &Report) -> String {
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    };
    let on = r.fixture.as_deref().map(|f| format!(" [{f}]")).unwrap_or_default();
    let mut out = format!("{}{on}: {status} ({} ms)\n", r.command, r.wall_time_ms);
    let mut line = |s: &str| {
        out.push_str("  ");
        out.push_str(s);
        out.push('\n');
    };
    if let Some(e) = &r.error {
        line(e);
    }
    for l in r.output.iter().flat_map(|o| o.lines()) {
        line(l);
    }
    for d in r.defects.iter().take(10) {
        line(&d.to_string());
    }
    if r.defects.len() > 10 {
        line(&format!("... {} more", r.defects.len() - 10));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let results = if cli.command == Command::Suite {
        suite(&cli)
    } else {
        vec![timed(name(cli.command), cli.network.clone(), || run_one(&cli, cli.command))]
    };
    let code = results.iter().map(|(_, c)| *c).max().unwrap_or(0);
    let reports: Vec<&Report> = results.iter().map(|(r, _)| r).collect();
    let body = if cli.json {
        let json = if cli.command == Command::Suite {
            serde_json::to_string_pretty(&reports)
        } else {
            serde_json::to_string_pretty(reports[0])
        };
        json.expect("reports serialize") + "\n"
    } else {
        reports.iter().map(|r| text(r)).collect()
    };
    // A closed pipe is not an error of the check.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    ExitCode::from(code)
}
