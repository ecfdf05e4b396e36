//! Command-line front end. [`run`] takes the argument list and writers so
//! tests can drive it in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, Builtin};
use crate::checks;
use crate::error::{Error, Result};
use crate::geodesics::{geodesic, uniform_grid};
use crate::geometry::{j_family, ricci};
use crate::io::{self, LoadedAlgebra};
use crate::isometry::{self, SolutionSpace};
use crate::liealg::restrict_metric;
use crate::scalar::{self, format as fmt};
use crate::spectral;

#[derive(Debug, Parser)]
#[command(name = "nilgeom", version, about = "Geometry of left-invariant pseudo-Riemannian metrics on nilpotent and solvable Lie groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// name of a catalog algebra (see `catalog list`)
    #[arg(long)]
    pub builtin: Option<String>,
    /// algebra definition file (JSON)
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jacobi identity, nilpotency step, solvability, center and metric data
    Validate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// j-maps and Ricci data of a 2-step algebra with non-degenerate center
    Report {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Ricci spectrum, splitting criterion and structural conclusions
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Skew pairs (A, B) with [B, j(w)] = j(Aw)
    Isotropy {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Skew-symmetric derivations
    Derivations {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Isotropy algebra of a bi-invariant metric
    Ahc {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Geodesic through the identity as CSV
    Geodesic {
        #[command(flatten)]
        input: Input,
        /// initial velocity in v, e.g. "1,0,0"
        #[arg(long)]
        w: String,
        /// initial velocity in z, e.g. "0,0,1"
        #[arg(long)]
        u: String,
        #[arg(long, default_value_t = 5.0)]
        tmax: f64,
        #[arg(long, default_value_t = 501)]
        samples: usize,
    },
    /// List or dump the built-in constants
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the verification block of one worked example
    CheckExample {
        /// one of: h3_lorentz, htype, rxh3, free3_neutral, iso7, oscillator4, manifold, geodesics
        name: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List {
        #[command(flatten)]
        output: Output,
    },
    /// Algebra definition JSON of a builtin algebra
    Dump { name: String },
}

fn load(input: &Input) -> Result<LoadedAlgebra> {
    match (&input.builtin, &input.file) {
        (Some(name), _) => match catalog::builtin(name)? {
            Builtin::Algebra(algebra) => Ok(LoadedAlgebra { algebra, complement: None }),
            Builtin::Split(s) => Ok(LoadedAlgebra {
                algebra: s.algebra().clone(),
                complement: Some(s.complement().clone()),
            }),
            Builtin::Chart(_) | Builtin::Map(_) => Err(Error::InvalidAlgebra(format!("builtin `{name}` is not an algebra"))),
        },
        (None, Some(path)) => io::load_algebra(path),
        (None, None) => Err(Error::Parse("one of --builtin or --file is required".into())),
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Text => write!(out, "{}", text())?,
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct ValidateOutput {
    dim: usize,
    basis: Vec<String>,
    jacobi_ok: bool,
    nilpotency_step: Option<usize>,
    solvable: bool,
    center: Vec<Vec<String>>,
    center_nondegenerate: bool,
    center_signature: Option<(usize, usize)>,
    ad_invariant: bool,
}

fn validate_output(l: &LoadedAlgebra) -> ValidateOutput {
    let a = &l.algebra;
    let v = a.validate();
    let z = a.center();
    let r = restrict_metric(a, &z);
    ValidateOutput {
        dim: a.dim(),
        basis: a.basis_names().to_vec(),
        jacobi_ok: v.jacobi_ok,
        nilpotency_step: v.nilpotency_step,
        solvable: v.solvable,
        center: z.to_strings(),
        center_nondegenerate: r.nondegenerate,
        center_signature: r.signature,
        ad_invariant: a.is_ad_invariant(),
    }
}

#[derive(Debug, Serialize)]
struct GeometryReport {
    center: Vec<Vec<String>>,
    complement: Vec<Vec<String>>,
    j_maps: Vec<Vec<Vec<String>>>,
    ricci_operator: Vec<Vec<String>>,
    ricci_form: Vec<Vec<String>>,
    ricci_v_block: Vec<Vec<String>>,
    ricci_z_block: Vec<Vec<String>>,
    scalar_curvature: String,
}

fn geometry_report(l: &LoadedAlgebra) -> Result<GeometryReport> {
    let s = l.split()?;
    let jf = j_family(&s)?;
    let rc = ricci(&s)?;
    Ok(GeometryReport {
        center: s.center().to_strings(),
        complement: s.complement().to_strings(),
        j_maps: jf.maps().iter().map(|m| m.to_strings()).collect(),
        ricci_operator: rc.operator.to_strings(),
        ricci_form: rc.form.to_strings(),
        ricci_v_block: rc.v_block.to_strings(),
        ricci_z_block: rc.z_block.to_strings(),
        scalar_curvature: fmt(&rc.scalar),
    })
}

fn table(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| format!("  [{}]\n", r.join(", "))).collect()
}

fn solution_text(s: &SolutionSpace) -> String {
    let mut t = format!("dimension {} (verified: {})\n", s.dimension(), s.verified);
    for (k, e) in s.basis.iter().enumerate() {
        for ((name, _, _), m) in s.blocks.iter().zip(e) {
            t += &format!("basis {} {}:\n{}", k + 1, name, table(&m.to_strings()));
        }
    }
    t
}

fn json_text<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).map(|s| s + "\n").unwrap_or_default()
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Validate { input, output } => {
            let v = validate_output(&load(&input)?);
            emit(out, output.format, &v, || {
                format!(
                    "dim {}\njacobi {}\nnilpotency step {}\nsolvable {}\nad-invariant {}\ncenter (nondegenerate {}):\n{}",
                    v.dim,
                    v.jacobi_ok,
                    v.nilpotency_step.map_or("none".into(), |s| s.to_string()),
                    v.solvable,
                    v.ad_invariant,
                    v.center_nondegenerate,
                    table(&v.center)
                )
            })?;
            Ok(if v.jacobi_ok { 0 } else { 2 })
        }
        Command::Report { input, output } => {
            let r = geometry_report(&load(&input)?)?;
            emit(out, output.format, &r, || json_text(&r))?;
            Ok(0)
        }
        Command::Classify { input, output } => {
            let l = load(&input)?;
            if !l.algebra.jacobi_holds() {
                return Err(Error::InvalidAlgebra("Jacobi identity fails".into()));
            }
            let r = spectral::classify(&l.algebra);
            emit(out, output.format, &r, || r.to_text())?;
            Ok(0)
        }
        Command::Isotropy { input, output } => {
            let s = isometry::isotropy_algebra(&load(&input)?.split()?)?;
            emit(out, output.format, &s, || solution_text(&s))?;
            Ok(0)
        }
        Command::Derivations { input, output } => {
            let s = isometry::skew_derivations(&load(&input)?.algebra);
            emit(out, output.format, &s, || solution_text(&s))?;
            Ok(0)
        }
        Command::Ahc { input, output } => {
            let s = isometry::ahc_isotropy_algebra(&load(&input)?.algebra)?;
            emit(out, output.format, &s, || solution_text(&s))?;
            Ok(0)
        }
        Command::Geodesic { input, w, u, tmax, samples } => {
            if !tmax.is_finite() || tmax <= 0.0 {
                return Err(Error::InvalidGrid("--tmax must be positive"));
            }
            let l = load(&input)?;
            let (w, u) = (scalar::parse_vector(&w)?, scalar::parse_vector(&u)?);
            let c = geodesic(&l.split()?, &w, &u, &uniform_grid(tmax, samples))?;
            c.write_csv(out)?;
            Ok(0)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { output } => {
                #[derive(Serialize)]
                struct List<'a> {
                    algebras: &'a [&'a str],
                    other: &'a [&'a str],
                    examples: &'a [&'a str],
                }
                let l = List {
                    algebras: catalog::ALGEBRA_NAMES,
                    other: catalog::OTHER_NAMES,
                    examples: checks::EXAMPLE_NAMES,
                };
                emit(out, output.format, &l, || {
                    format!(
                        "algebras: {}\nother: {}\nexamples: {}\n",
                        l.algebras.join(" "),
                        l.other.join(" "),
                        l.examples.join(" ")
                    )
                })?;
                Ok(0)
            }
            CatalogAction::Dump { name } => {
                let text = match catalog::builtin(&name)? {
                    Builtin::Algebra(a) => io::dump_algebra(&a, None),
                    Builtin::Split(s) => io::dump_algebra(s.algebra(), Some(s.complement())),
                    Builtin::Chart(_) | Builtin::Map(_) => {
                        return Err(Error::InvalidAlgebra(format!("builtin `{name}` is not an algebra")))
                    }
                };
                writeln!(out, "{text}")?;
                Ok(0)
            }
        },
        Command::CheckExample { name, seed, output } => {
            let r = checks::check_example(&name, seed)?;
            emit(out, output.format, &r, || r.to_text())?;
            Ok(if r.passed { 0 } else { 2 })
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
