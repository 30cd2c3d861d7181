//! `rlak`: batch front end. Reports go to stdout as JSON (CSV for `dims`),
//! diagnostics to stderr. Exit status 0 on success, 1 on usage or input
//! errors, 2 when a checked statement comes out false.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use rlak::algebra::RestrictedLieAlgebra;
use rlak::error::{Error, Result};
use rlak::field::{FiniteField, Fq};
use rlak::freerla::dims::graded_dims;
use rlak::freerla::expr::format_expr;
use rlak::freerla::TruncatedFreeRLA;
use rlak::orepoly::{diagonalize, DivSide, ElementaryOp, OpKind, OpSide, OreMatrix, OrePoly};
use rlak::presentation::{
    abelianize, bp_certificate, bp_certificate_computed, kukin_check, normalize, Presentation, PresentationSpec,
};
use rlak::quotient::{
    closure, complement_vectors, derived_p_series, filtration_ideal, find_d_for_subspace, is_ideal, l991_closures,
    nil_index, zp_generators, ClosureMode, FdSubspace,
};
use rlak::verify::{self, SuiteReport};

#[derive(Parser)]
#[command(name = "rlak", version, about = "Computations in truncated free restricted Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions of the free restricted Lie algebra.
    Dims {
        #[arg(long, default_value = "gf(2)")]
        field: String,
        /// Number of generators.
        #[arg(long)]
        r: u64,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Canonical basis of a truncation.
    Basis(AlgebraArgs),
    /// Normal form of an expression.
    Eval {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        expr: String,
    },
    /// Euclidean division in the twisted polynomial ring.
    OreDiv {
        #[arg(long, default_value = "gf(2)")]
        field: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
    },
    /// Diagonal form of a matrix read from a JSON file.
    OreDiag {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Abelianization matrix of a presentation.
    Abelianize {
        #[arg(long)]
        presentation: PathBuf,
    },
    /// Normal form of a presentation with fewer relators than generators.
    Normalize {
        #[arg(long)]
        presentation: PathBuf,
    },
    /// Counting certificate for largeness. Without `--q`, `q` is computed
    /// in the truncation at `--max-degree`.
    CertifyLarge {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Restricted ideal (or subalgebra) generated by expressions.
    IdealClosure {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long = "expr", required = true)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Ideal)]
        mode: Mode,
    },
    /// Checks that the ideal of `g` is the ideal of `N` generated by `Z_p`.
    ZpCheck {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Generators of the ideal `N`.
        #[arg(long = "ideal", required = true)]
        ideal: Vec<String>,
        #[arg(long)]
        g: String,
        /// Elements `t_1, ..., t_s`; defaults to basis vectors complementing `N`.
        #[arg(long = "t")]
        t: Vec<String>,
    },
    /// Checks `<g^[p^n]> ⊂ <g^[p^(n-d)]>_H` for an ideal `H` of codimension `d`.
    L991Check {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Generators of the ideal `H`.
        #[arg(long = "h", required = true)]
        h: Vec<String>,
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: u32,
    },
    /// The filtration ideal of elements of weight at least `f`.
    Filtration {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        f: usize,
    },
    /// Derived p-series.
    DerivedSeries {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 32)]
        depth: usize,
    },
    /// Least `n` with `g^[p^n] = 0`.
    NilIndex {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        expr: String,
    },
    /// Least `d` with `D^d` meeting the span of the given elements trivially.
    FindD {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long = "v", required = true)]
        v: Vec<String>,
    },
    /// Compares the ideal generated by `a_i` and `t^[p^k]` with the free model.
    KukinCheck {
        #[arg(long, default_value = "gf(2)")]
        field: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Runs the verification suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    #[arg(long, default_value = "gf(2)")]
    field: String,
    /// Comma-separated generator names.
    #[arg(long, default_value = "x,y", value_delimiter = ',')]
    generators: Vec<String>,
    #[arg(long)]
    max_degree: usize,
    /// Largest basis the run may allocate.
    #[arg(long, env = "RLAK_CAP", default_value_t = 20_000)]
    cap: usize,
}

impl AlgebraArgs {
    fn build(&self) -> Result<Arc<TruncatedFreeRLA>> {
        let field = FiniteField::parse(&self.field)?;
        TruncatedFreeRLA::new(&field, self.generators.clone(), self.max_degree, self.cap)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Ideal,
    Subalgebra,
}

#[derive(Deserialize)]
struct MatrixFile {
    field: String,
    rows: Vec<Vec<String>>,
}

/// Result of a command: text for stdout and whether a check failed.
struct Output {
    text: String,
    check_failed: bool,
}

impl Output {
    fn json(v: &impl Serialize) -> Self {
        Output { text: serde_json::to_string(v).expect("serializable"), check_failed: false }
    }

    fn check(name: &str, anchor: &str, instance: Value, result: bool, details: Value) -> Self {
        let v = json!({"check": name, "anchor": anchor, "instance": instance, "result": result, "details": details});
        Output { text: serde_json::to_string(&v).expect("serializable"), check_failed: !result }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    Presentation::from_spec(&read_json::<PresentationSpec>(path)?)
}

fn parse_all(alg: &TruncatedFreeRLA, exprs: &[String]) -> Result<Vec<Vec<Fq>>> {
    exprs.iter().map(|e| alg.parse_vector(e)).collect()
}

fn subspace_report(alg: &TruncatedFreeRLA, s: &FdSubspace) -> Value {
    json!({
        "dim": s.dim(),
        "codim": s.codim(),
        "profile": s.graded_profile(alg.weights(), alg.max_degree()),
        "basis": s.rows().iter().map(|r| alg.format_vector(r)).collect::<Vec<_>>(),
    })
}

fn op_json(op: &ElementaryOp, field: &FiniteField) -> Value {
    let side = match op.side {
        OpSide::Row => "row",
        OpSide::Col => "col",
    };
    match &op.kind {
        OpKind::AddMultiple { target, source, multiplier } => {
            json!({"side": side, "op": "add", "target": target, "source": source, "multiplier": multiplier.to_string()})
        }
        OpKind::Swap { a, b } => json!({"side": side, "op": "swap", "a": a, "b": b}),
        OpKind::Scale { target, factor } => {
            json!({"side": side, "op": "scale", "target": target, "factor": field.format(*factor)})
        }
    }
}

fn suites_output(reports: Vec<SuiteReport>, seed: u64) -> Output {
    let ok = reports.iter().all(SuiteReport::ok);
    let v = json!({"seed": seed, "result": ok, "suites": reports});
    Output { text: serde_json::to_string(&v).expect("serializable"), check_failed: !ok }
}

fn run(cmd: Command) -> Result<Output> {
    Ok(match cmd {
        Command::Dims { field, r, max_degree, format } => {
            let f = FiniteField::parse(&field)?;
            let dims = graded_dims(r, f.characteristic() as u64, max_degree);
            match format {
                Format::Json => Output::json(&json!({ "dims": dims })),
                Format::Csv => {
                    let mut text = String::from("degree,dim");
                    for (i, d) in dims.iter().enumerate() {
                        text.push_str(&format!("\n{},{d}", i + 1));
                    }
                    Output { text, check_failed: false }
                }
            }
        }
        Command::Basis(args) => {
            let alg = args.build()?;
            let basis: Vec<Value> = alg
                .basis()
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let e = format_expr(&b.to_expr(), alg.field(), alg.generators());
                    json!({"index": i, "weight": b.weight, "pexp": b.pexp, "expr": e})
                })
                .collect();
            Output::json(&json!({"dim": alg.dim(), "graded": alg.graded_counts(), "basis": basis}))
        }
        Command::Eval { alg, expr } => {
            let alg = alg.build()?;
            let v = alg.parse_vector(&expr)?;
            Output::json(&json!({"normal_form": alg.format_vector(&v)}))
        }
        Command::OreDiv { field, f, g, side } => {
            let field = FiniteField::parse(&field)?;
            let (f, g) = (OrePoly::parse(&field, &f)?, OrePoly::parse(&field, &g)?);
            let side = match side {
                Side::Right => DivSide::Right,
                Side::Left => DivSide::Left,
            };
            let (q, r) = f.divide(&g, side)?;
            Output::json(&json!({"quotient": q.to_string(), "remainder": r.to_string()}))
        }
        Command::OreDiag { matrix } => {
            let file: MatrixFile = read_json(&matrix)?;
            let field = FiniteField::parse(&file.field)?;
            let m = OreMatrix::parse_rows(&field, &file.rows)?;
            let d = diagonalize(&m)?;
            Output::json(&json!({
                "field": field.to_string(),
                "diagonal": d.diagonal.to_strings(),
                "rank": d.rank,
                "row_ops": d.row_ops.iter().map(|o| op_json(o, &field)).collect::<Vec<_>>(),
                "col_ops": d.col_ops.iter().map(|o| op_json(o, &field)).collect::<Vec<_>>(),
            }))
        }
        Command::Abelianize { presentation } => {
            let p = read_presentation(&presentation)?;
            Output::json(&json!({"field": p.field().to_string(), "rows": abelianize(&p).to_strings()}))
        }
        Command::Normalize { presentation } => {
            let p = read_presentation(&presentation)?;
            let out = normalize(&p)?;
            let defs: Vec<String> = out.definitions.iter().map(|d| format_expr(d, p.field(), p.generators())).collect();
            Output::json(&json!({
                "presentation": out.presentation.to_spec(),
                "omitted": out.omitted,
                "definitions": defs,
                "diagonal": out.diagonal.to_strings(),
                "rank": out.rank,
            }))
        }
        Command::CertifyLarge { presentation, q, max_degree } => {
            let p = read_presentation(&presentation)?;
            match q {
                Some(q) => Output::json(&bp_certificate(&p, q)?),
                None => {
                    let (cert, rewrites) = bp_certificate_computed(&p, max_degree)?;
                    let rw: Vec<String> = rewrites.iter().map(|r| r.format(p.field())).collect();
                    let mut v = serde_json::to_value(&cert).expect("serializable");
                    v["rewrites"] = json!(rw);
                    Output::json(&v)
                }
            }
        }
        Command::IdealClosure { alg, exprs, mode } => {
            let alg = alg.build()?;
            let gens = parse_all(&alg, &exprs)?;
            let mode = match mode {
                Mode::Ideal => ClosureMode::Ideal,
                Mode::Subalgebra => ClosureMode::Subalgebra,
            };
            let s = closure(&*alg, &gens, mode);
            let mut v = subspace_report(&alg, &s);
            v["is_ideal"] = json!(is_ideal(&*alg, &s));
            Output::json(&v)
        }
        Command::ZpCheck { alg: args, ideal, g, t } => {
            let alg = args.build()?;
            let n = closure(&*alg, &parse_all(&alg, &ideal)?, ClosureMode::Ideal);
            let gv = alg.parse_vector(&g)?;
            let tv = if t.is_empty() { complement_vectors(&n) } else { parse_all(&alg, &t)? };
            let z = zp_generators(&*alg, &n, &gv, &tv)?;
            let lhs = closure(&*alg, std::slice::from_ref(&gv), ClosureMode::Ideal);
            let rhs = closure(&*alg, &z, ClosureMode::IdealOf(&n));
            let instance = json!({
                "field": args.field, "generators": args.generators, "max_degree": args.max_degree,
                "ideal": ideal, "g": g, "t": tv.iter().map(|v| alg.format_vector(v)).collect::<Vec<_>>(),
            });
            let details = json!({
                "zp": z.iter().map(|v| alg.format_vector(v)).collect::<Vec<_>>(),
                "ideal_of_g_dim": lhs.dim(), "ideal_of_zp_dim": rhs.dim(),
            });
            Output::check("zp-check", verify::anchor("zp").expect("known"), instance, lhs == rhs, details)
        }
        Command::L991Check { alg: args, h, g, n } => {
            let alg = args.build()?;
            let hs = closure(&*alg, &parse_all(&alg, &h)?, ClosureMode::Ideal);
            let w = l991_closures(&*alg, &hs, &alg.parse_vector(&g)?, n)?;
            let instance = json!({
                "field": args.field, "generators": args.generators, "max_degree": args.max_degree,
                "h": h, "g": g, "n": n,
            });
            let details = json!({"codim": w.codim, "i_dim": w.i.dim(), "j_dim": w.j.dim()});
            Output::check("l991-check", verify::anchor("inclusion").expect("known"), instance, w.holds(), details)
        }
        Command::Filtration { alg, f } => {
            let alg = alg.build()?;
            Output::json(&subspace_report(&alg, &filtration_ideal(&alg, f)))
        }
        Command::DerivedSeries { alg, depth } => {
            let alg = alg.build()?;
            let terms: Vec<Value> = derived_p_series(&*alg, depth)?
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    json!({"index": i, "dim": s.dim(), "codim": s.codim(),
                           "profile": s.graded_profile(alg.weights(), alg.max_degree())})
                })
                .collect();
            Output::json(&json!({ "series": terms }))
        }
        Command::NilIndex { alg, expr } => {
            let alg = alg.build()?;
            let n = nil_index(&*alg, &alg.parse_vector(&expr)?)?;
            Output::json(&json!({"exponent": n.exponent, "nil_index": n.value}))
        }
        Command::FindD { alg, v } => {
            let alg = alg.build()?;
            let vecs = parse_all(&alg, &v)?;
            let space = FdSubspace::span(alg.field(), alg.dim(), &vecs);
            Output::json(&json!({"d": find_d_for_subspace(&*alg, &space)?, "dim_v": space.dim()}))
        }
        Command::KukinCheck { field, r, k, max_degree } => {
            let f = FiniteField::parse(&field)?;
            let rep = kukin_check(&f, r, k, max_degree)?;
            let instance = json!({"field": field, "r": r, "k": k, "max_degree": max_degree});
            let agree = rep.agree;
            let details = serde_json::to_value(&rep).expect("serializable");
            Output::check("kukin-check", verify::anchor("kukin").expect("known"), instance, agree, details)
        }
        Command::Verify { suite, seed } => {
            eprintln!("seed: {seed}");
            if suite == "all" {
                suites_output(verify::run_all(seed), seed)
            } else {
                suites_output(vec![verify::run_suite(&suite, seed)?], seed)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            println!("{}", out.text);
            if out.check_failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.code(), "message": e.to_string()}));
            ExitCode::from(1)
        }
    }
}
