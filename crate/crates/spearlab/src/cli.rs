//! Command-line front end. Parsing and dispatch live here so the binary
//! target stays a one-liner; every subcommand prints a versioned JSON
//! report to stdout and diagnostics to stderr.
//!
//! Exit codes: 0 for a successful computation (whatever the decision),
//! 2 for input errors, 3 for resource-cap errors.

use crate::analysis;
use crate::error::{Error, Result};
use crate::operators::{fixture_operator_names, LinOp};
use crate::oracle;
use crate::rational::{format_scalar, parse_scalar, RatMatrix, RatVector};
use crate::spaces::{direct_sum, fixture_names, SpaceRef, SumKind};
use crate::speartest::{self, Certificate};
use crate::wire;
use crate::workspace::Workspace;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::{json, Value};
use std::path::PathBuf;

/// Default fuzz seed when neither `--seed` nor `SPEARLAB_SEED` is given.
pub const DEFAULT_SEED: u64 = 20170;

#[derive(Parser)]
#[command(name = "spearlab", version, about = "Exact spear-vector and lush-operator decisions on polyhedral normed spaces")]
struct Cli {
    /// Cap the number of worker threads used by parallel scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Override the default enumeration vertex cap (50000).
    #[arg(long, global = true)]
    vertex_cap: Option<usize>,
    /// Override the default simplex pivot cap (1000000).
    #[arg(long, global = true)]
    pivot_cap: Option<u64>,
    /// Re-check every emitted witness by direct evaluation.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect, dualize or sum spaces.
    Space {
        #[command(subcommand)]
        cmd: SpaceCmd,
    },
    /// Decide properties of unit vectors.
    Vector {
        #[command(subcommand)]
        cmd: VectorCmd,
    },
    /// Decide properties of finite vector sets.
    Set {
        #[command(subcommand)]
        cmd: SetCmd,
    },
    /// Decide and evaluate operators.
    Op {
        #[command(subcommand)]
        cmd: OpCmd,
    },
    /// Exact numerical index of a space at a unit element.
    Index {
        /// Space: a fixture name or a path to a JSON space document.
        #[arg(long)]
        space: String,
        /// Unit element, comma-separated scalars, e.g. "1,0".
        #[arg(long)]
        unit: String,
    },
    /// Floating-point sampling oracles.
    Fuzz {
        #[command(subcommand)]
        cmd: FuzzCmd,
    },
    /// List built-in fixtures.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
}

#[derive(Args)]
struct SpaceSel {
    /// Built-in space fixture, e.g. l1:3 or example52_X1.
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
    /// Path to a JSON space document.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SpaceSel {
    fn resolve(&self, ws: &mut Workspace) -> Result<SpaceRef> {
        match (&self.fixture, &self.file) {
            (Some(name), None) => ws.space(name),
            (None, Some(path)) => ws.load_space_file(path),
            _ => Err(Error::InvalidInput(
                "give exactly one of --fixture or --file".into(),
            )),
        }
    }
}

#[derive(Args)]
struct OpSel {
    /// Built-in operator fixture, e.g. example52_G or id:l1:2.
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
    /// Path to a JSON operator document.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl OpSel {
    fn resolve(&self, ws: &mut Workspace) -> Result<LinOp> {
        match (&self.fixture, &self.file) {
            (Some(name), None) => ws.operator(name),
            (None, Some(path)) => ws.load_operator_file(path),
            _ => Err(Error::InvalidInput(
                "give exactly one of --fixture or --file".into(),
            )),
        }
    }
}

/// Second operand for binary operator commands.
#[derive(Args)]
struct TSel {
    /// Operator fixture used as T.
    #[arg(long)]
    t_fixture: Option<String>,
    /// JSON operator document used as T.
    #[arg(long)]
    t_file: Option<PathBuf>,
    /// Inline matrix for T between the same spaces as G:
    /// rows separated by ';', scalars by ',', e.g. "0,0;1,0".
    #[arg(long)]
    t_matrix: Option<String>,
}

impl TSel {
    fn resolve(&self, ws: &mut Workspace, g: &LinOp) -> Result<LinOp> {
        match (&self.t_fixture, &self.t_file, &self.t_matrix) {
            (Some(name), None, None) => ws.operator(name),
            (None, Some(path), None) => ws.load_operator_file(path),
            (None, None, Some(literal)) => {
                let rows = literal
                    .split(';')
                    .map(RatVector::parse_list)
                    .collect::<Result<Vec<_>>>()?;
                LinOp::new_shared(
                    "t",
                    g.domain().clone(),
                    g.codomain().clone(),
                    RatMatrix::from_rows(rows)?,
                )
            }
            _ => Err(Error::InvalidInput(
                "give exactly one of --t-fixture, --t-file or --t-matrix".into(),
            )),
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum KindArg {
    Inf,
    One,
}

impl From<KindArg> for SumKind {
    fn from(k: KindArg) -> SumKind {
        match k {
            KindArg::Inf => SumKind::SumInf,
            KindArg::One => SumKind::SumOne,
        }
    }
}

#[derive(Subcommand)]
enum SpaceCmd {
    /// Dimensions, vertex and dual-vertex lists of a space.
    Info(SpaceSel),
    /// Emit the dual space as a JSON space document.
    Dual(SpaceSel),
    /// Emit the direct sum of two or more spaces.
    Sum {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Summand fixtures, in order.
        #[arg(long)]
        fixture: Vec<String>,
        /// Summand space files, appended after the fixtures.
        #[arg(long)]
        file: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VectorCmd {
    /// Decide whether a unit vector is a spear vector.
    IsSpear {
        #[command(flatten)]
        space: SpaceSel,
        /// Comma-separated scalars, e.g. "1,1,-1,-1".
        #[arg(long)]
        vector: String,
    },
    /// Exact norm of a vector.
    Norm {
        #[command(flatten)]
        space: SpaceSel,
        #[arg(long)]
        vector: String,
    },
}

#[derive(Subcommand)]
enum SetCmd {
    /// Decide whether a finite set inside the unit ball is a spear set.
    IsSpear {
        #[command(flatten)]
        space: SpaceSel,
        /// One vector per flag occurrence.
        #[arg(long, required = true)]
        vector: Vec<String>,
    },
}

#[derive(Subcommand)]
enum OpCmd {
    /// Decide lush / spear / aDP for a norm-one operator.
    Decide(OpSel),
    /// Exact operator norm.
    Norm(OpSel),
    /// Emit the adjoint as a JSON operator document.
    Adjoint(OpSel),
    /// Evaluate the spear equation against a concrete T.
    SpearEq {
        #[command(flatten)]
        g: OpSel,
        #[command(flatten)]
        t: TSel,
    },
    /// Numerical radius of T with respect to G.
    Vg {
        #[command(flatten)]
        g: OpSel,
        #[command(flatten)]
        t: TSel,
    },
    /// Sampled upper bound for the numerical index of G.
    NgBound {
        #[command(flatten)]
        g: OpSel,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum FuzzCmd {
    /// Fuzz the spear-vector norm identity.
    SpearVector {
        #[command(flatten)]
        space: SpaceSel,
        #[arg(long)]
        vector: String,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Fuzz the spear operator equation.
    SpearEq {
        #[command(flatten)]
        g: OpSel,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Fuzz the slice-based lushness criterion at a fixed eps.
    Lush {
        #[command(flatten)]
        g: OpSel,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Brute-force numerical index against the exact value.
    Index {
        #[command(flatten)]
        space: SpaceSel,
        #[arg(long)]
        unit: String,
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Names of every built-in space and operator fixture.
    List,
}

fn seed_or_env(seed: Option<u64>) -> u64 {
    seed.or_else(|| {
        std::env::var("SPEARLAB_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit code 0.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    if let Some(cap) = cli.vertex_cap {
        crate::exactgeom::set_default_vertex_cap(cap);
    }
    if let Some(cap) = cli.pivot_cap {
        crate::exactgeom::set_default_pivot_cap(cap);
    }
    match dispatch(&cli) {
        Ok(report) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource_cap() {
                3
            } else {
                2
            }
        }
    }
}

fn verified(report: &mut Value, cli: &Cli, check: impl FnOnce() -> std::result::Result<(), String>) -> Result<()> {
    if !cli.verify {
        return Ok(());
    }
    match check() {
        Ok(()) => {
            report["verified"] = json!(true);
            Ok(())
        }
        Err(msg) => Err(Error::InvalidInput(format!(
            "witness verification failed: {msg}"
        ))),
    }
}

fn certificate_payload(cert: &Certificate) -> Value {
    json!({ "certificate": wire::certificate_to_value(cert) })
}

fn dispatch(cli: &Cli) -> Result<Value> {
    let mut ws = Workspace::new();
    match &cli.command {
        Command::Space { cmd } => match cmd {
            SpaceCmd::Info(sel) => {
                let s = sel.resolve(&mut ws)?;
                Ok(wire::report(
                    "space info",
                    json!({
                        "label": s.label(),
                        "dim": s.dim(),
                        "vertex_count": s.vertices().len(),
                        "dual_vertex_count": s.dual_vertices().len(),
                        "vertices": s.vertices().iter().map(wire::vector_to_value).collect::<Vec<_>>(),
                        "dual_vertices": s.dual_vertices().iter().map(wire::vector_to_value).collect::<Vec<_>>(),
                    }),
                ))
            }
            SpaceCmd::Dual(sel) => {
                let s = sel.resolve(&mut ws)?;
                Ok(wire::report(
                    "space dual",
                    json!({ "space": wire::space_to_value(&s.dual_space()) }),
                ))
            }
            SpaceCmd::Sum { kind, fixture, file } => {
                let mut summands: Vec<SpaceRef> = Vec::new();
                for name in fixture {
                    summands.push(ws.space(name)?);
                }
                for path in file {
                    summands.push(ws.load_space_file(path)?);
                }
                let refs: Vec<&crate::spaces::PolyhedralSpace> =
                    summands.iter().map(|s| s.as_ref()).collect();
                let sum = direct_sum(&refs, (*kind).into())?;
                Ok(wire::report(
                    "space sum",
                    json!({ "space": wire::space_to_value(&sum) }),
                ))
            }
        },
        Command::Vector { cmd } => match cmd {
            VectorCmd::IsSpear { space, vector } => {
                let s = space.resolve(&mut ws)?;
                let z = RatVector::parse_list(vector)?;
                let cert = speartest::is_spear_vector(&s, &z)?;
                let mut report = wire::report("vector is-spear", certificate_payload(&cert));
                verified(&mut report, cli, || {
                    speartest::verify_certificate(&s, std::slice::from_ref(&z), &cert)
                })?;
                Ok(report)
            }
            VectorCmd::Norm { space, vector } => {
                let s = space.resolve(&mut ws)?;
                let z = RatVector::parse_list(vector)?;
                let norm = s.norm(&z)?;
                Ok(wire::report(
                    "vector norm",
                    json!({ "norm": format_scalar(&norm) }),
                ))
            }
        },
        Command::Set { cmd } => match cmd {
            SetCmd::IsSpear { space, vector } => {
                let s = space.resolve(&mut ws)?;
                let set = vector
                    .iter()
                    .map(|v| RatVector::parse_list(v))
                    .collect::<Result<Vec<_>>>()?;
                let cert = speartest::is_spear_set(&s, &set)?;
                let mut report = wire::report("set is-spear", certificate_payload(&cert));
                verified(&mut report, cli, || {
                    speartest::verify_certificate(&s, &set, &cert)
                })?;
                Ok(report)
            }
        },
        Command::Op { cmd } => match cmd {
            OpCmd::Decide(sel) => {
                let g = sel.resolve(&mut ws)?;
                let verdict = analysis::decide_operator(&g)?;
                let mut report = wire::report(
                    "op decide",
                    json!({
                        "operator": g.label(),
                        "lush": verdict.lush,
                        "spear": verdict.spear,
                        "adp": verdict.adp,
                        "criterion": analysis::CRITERION_FD_DOMAIN_IV,
                        "cross_check": analysis::CRITERION_FD_DOMAIN_V,
                        "witnesses": verdict.witnesses().iter().map(|w| json!({
                            "kind": serde_json::to_value(w.kind).expect("kind serializes"),
                            "vector": wire::vector_to_value(&w.vector),
                            "value": format_scalar(&w.value),
                        })).collect::<Vec<_>>(),
                    }),
                );
                verified(&mut report, cli, || match &verdict.witness {
                    None => Ok(()),
                    Some(w) => {
                        let image = g.apply(&w.x).map_err(|e| e.to_string())?;
                        let value = w.y_star.dot(&image).abs();
                        if value != w.value {
                            return Err("witness value does not re-evaluate".into());
                        }
                        if value == crate::rational::rat_int(1) {
                            return Err("witness pair has modulus one".into());
                        }
                        Ok(())
                    }
                })?;
                Ok(report)
            }
            OpCmd::Norm(sel) => {
                let g = sel.resolve(&mut ws)?;
                Ok(wire::report(
                    "op norm",
                    json!({ "operator": g.label(), "norm": format_scalar(&g.operator_norm()) }),
                ))
            }
            OpCmd::Adjoint(sel) => {
                let g = sel.resolve(&mut ws)?;
                Ok(wire::report(
                    "op adjoint",
                    json!({ "operator": wire::operator_to_value(&g.adjoint()) }),
                ))
            }
            OpCmd::SpearEq { g, t } => {
                let g = g.resolve(&mut ws)?;
                let t = t.resolve(&mut ws, &g)?;
                let eq = analysis::spear_equation(&g, &t)?;
                Ok(wire::report(
                    "op spear-eq",
                    json!({
                        "holds": eq.holds,
                        "lhs": format_scalar(&eq.lhs),
                        "rhs": format_scalar(&eq.rhs),
                    }),
                ))
            }
            OpCmd::Vg { g, t } => {
                let g = g.resolve(&mut ws)?;
                let t = t.resolve(&mut ws, &g)?;
                let v = analysis::vg_radius(&g, &t)?;
                Ok(wire::report(
                    "op vg",
                    json!({ "vg_radius": format_scalar(&v), "criterion": analysis::CRITERION_VG_FACE }),
                ))
            }
            OpCmd::NgBound { g, samples, seed } => {
                let g = g.resolve(&mut ws)?;
                let seed = seed_or_env(*seed);
                let (bound, argmin) = analysis::ng_upper_bound(&g, *samples, seed)?;
                Ok(wire::report(
                    "op ng-bound",
                    json!({
                        "bound": format_scalar(&bound),
                        "samples": samples,
                        "seed": seed,
                        "argmin_matrix": wire::matrix_to_value(argmin.matrix()),
                    }),
                ))
            }
        },
        Command::Index { space, unit } => {
            let s = if std::path::Path::new(space).is_file() {
                ws.load_space_file(std::path::Path::new(space))?
            } else {
                ws.space(space)?
            };
            let u = RatVector::parse_list(unit)?;
            let (value, witness) = analysis::numerical_index(&s, &u)?;
            let mut report = wire::report(
                "index",
                json!({
                    "space": s.label(),
                    "unit": wire::vector_to_value(&u),
                    "value": format_scalar(&value),
                    "witness": wire::vector_to_value(&witness),
                }),
            );
            verified(&mut report, cli, || {
                let radius = analysis::numerical_radius(&s, &u, &witness).map_err(|e| e.to_string())?;
                if radius != value {
                    return Err("witness does not attain the reported index".into());
                }
                let norm = s.norm(&witness).map_err(|e| e.to_string())?;
                if norm != crate::rational::rat_int(1) {
                    return Err("witness is not a unit vector".into());
                }
                Ok(())
            })?;
            Ok(report)
        }
        Command::Fuzz { cmd } => match cmd {
            FuzzCmd::SpearVector { space, vector, trials, tol, seed } => {
                let s = space.resolve(&mut ws)?;
                let z = RatVector::parse_list(vector)?;
                s.norm(&z)?;
                let report = oracle::fuzz_spear_vector(&s, &z, *trials, *tol, seed_or_env(*seed));
                Ok(wire::report(
                    "fuzz spear-vector",
                    json!({ "report": serde_json::to_value(&report).expect("report serializes") }),
                ))
            }
            FuzzCmd::SpearEq { g, trials, tol, seed } => {
                let g = g.resolve(&mut ws)?;
                let report = oracle::fuzz_spear_equation(&g, *trials, *tol, seed_or_env(*seed));
                Ok(wire::report(
                    "fuzz spear-eq",
                    json!({ "report": serde_json::to_value(&report).expect("report serializes") }),
                ))
            }
            FuzzCmd::Lush { g, trials, eps, seed } => {
                let g = g.resolve(&mut ws)?;
                if *eps <= 0.0 {
                    return Err(Error::NonpositiveEpsilon);
                }
                let report = oracle::fuzz_lush_slices(&g, *trials, *eps, seed_or_env(*seed));
                Ok(wire::report(
                    "fuzz lush",
                    json!({ "report": serde_json::to_value(&report).expect("report serializes") }),
                ))
            }
            FuzzCmd::Index { space, unit, grid } => {
                let s = space.resolve(&mut ws)?;
                let u = RatVector::parse_list(unit)?;
                let oracle_value = oracle::brute_numerical_index(&s, &u, *grid);
                let (exact, _) = analysis::numerical_index(&s, &u)?;
                let exact_f = parse_scalar(&format_scalar(&exact))
                    .map(|r| crate::rational::RatVector::new(vec![r]).to_f64s()[0])
                    .unwrap_or(f64::NAN);
                Ok(wire::report(
                    "fuzz index",
                    json!({
                        "oracle": oracle_value,
                        "exact": format_scalar(&exact),
                        "agrees": (oracle_value - exact_f).abs() <= 1e-6,
                    }),
                ))
            }
        },
        Command::Fixtures { cmd } => match cmd {
            FixturesCmd::List => Ok(wire::report(
                "fixtures list",
                json!({
                    "spaces": fixture_names(),
                    "operators": fixture_operator_names(),
                    "max_dim": crate::spaces::MAX_FIXTURE_DIM,
                }),
            )),
        },
    }
}
