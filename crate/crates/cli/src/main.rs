//! `orbitkit`: inspect algebras, classify adjoint orbits and run the
//! verification suites.
//!
//! Exit codes: 0 on success, 1 when an invariant check fails, 2 on bad
//! input.

mod element;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitkit_core::forms::{classify_definiteness, is_semisimple, Definiteness, FormKind};
use orbitkit_core::lie::io::load_algebra;
use orbitkit_core::lie::{parse_preset_spec, preset, validate, AlgebraKind, LieAlgebra, ValidationReport};
use orbitkit_core::numerics::Tolerance;
use orbitkit_core::orbits::{classify, OrbitDescriptor};
use orbitkit_core::report::SuiteReport;
use orbitkit_core::sampling::{random_element, sample_rng, stream_id};
use orbitkit_core::symplectic::{pullback_compare, KksContext};
use orbitkit_core::verify::{build_form, run_suites, suite_registry, FormSelection, SuiteContext, VerificationRun};
use orbitkit_core::{Error, Result};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "orbitkit",
    version,
    about = "Killing forms, adjoint orbits and orbit symplectic forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, Cartan verdict and form definiteness
    Info(Common),
    /// Orbit descriptor of an element of u(n) or su(n)
    Classify {
        #[command(flatten)]
        common: Common,
        /// Element as JSON, a JSON file path, or diag(...) shorthand
        #[arg(long)]
        element: String,
    },
    /// Run every verification suite
    Verify(Common),
    /// Compare the KKS form with the orbit form at one base point
    Pullback {
        #[command(flatten)]
        common: Common,
        /// Base point; a seeded random element when omitted
        #[arg(long)]
        element: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Preset algebra as NAME:N with NAME one of u, su, so
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    preset: Option<String>,
    /// JSON algebra file
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, default_value = "auto", value_parser = ["killing", "trace", "auto"])]
    form: String,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 42, env = "ORBITKIT_SEED")]
    seed: u64,
    /// Relative tolerance for rank and definiteness decisions
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

struct Loaded {
    algebra: Arc<LieAlgebra>,
    declared_drift: Option<f64>,
}

impl Common {
    fn tolerance(&self) -> Result<Tolerance> {
        let mut tol = Tolerance::default();
        if let Some(rel) = self.tol {
            if !(rel.is_finite() && rel >= 0.0) {
                return Err(Error::Parse(format!("--tol must be a non-negative number, got {rel}")));
            }
            tol.rel = rel;
        }
        Ok(tol)
    }

    fn load(&self) -> Result<Loaded> {
        match (&self.preset, &self.file) {
            (Some(spec), _) => {
                let (name, n) = parse_preset_spec(spec)?;
                Ok(Loaded {
                    algebra: preset(&name, n)?,
                    declared_drift: None,
                })
            }
            (None, Some(path)) => {
                let loaded = load_algebra(path).map_err(|e| match e {
                    Error::Io(io) => Error::Parse(format!("cannot read {}: {io}", path.display())),
                    Error::Json(json) => Error::Parse(format!("{}: {json}", path.display())),
                    other => other,
                })?;
                Ok(Loaded {
                    declared_drift: loaded.declared_drift(),
                    algebra: loaded.algebra,
                })
            }
            (None, None) => Err(Error::Parse("one of --preset or --file is required".into())),
        }
    }

    fn form_kind(&self, algebra: &Arc<LieAlgebra>) -> Result<FormKind> {
        Ok(self.form.parse::<FormSelection>()?.resolve(algebra, self.tolerance()?))
    }
}

/// Rendered report and whether every check in it passed.
struct Outcome {
    text: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Info(common) => info(&common),
        Command::Classify { common, element } => classify_cmd(&common, &element),
        Command::Verify(common) => verify(&common),
        Command::Pullback { common, element } => pullback(&common, element.as_deref()),
    }
}

fn render<T: Serialize>(output: Output, value: &T, text: impl FnOnce() -> String) -> Result<String> {
    Ok(match output {
        Output::Json => serde_json::to_string_pretty(value)? + "\n",
        Output::Text => text(),
    })
}

#[derive(Serialize)]
struct InfoReport {
    algebra: String,
    kind: AlgebraKind,
    n: usize,
    dim: usize,
    group_dim: usize,
    semisimple: bool,
    killing_determinant: f64,
    killing_witness: Option<Vec<f64>>,
    definiteness: Definiteness,
    form: FormKind,
    form_definiteness: Definiteness,
    validation: ValidationReport,
}

fn info(common: &Common) -> Result<Outcome> {
    let loaded = common.load()?;
    let algebra = &loaded.algebra;
    let tol = common.tolerance()?;
    let cartan = is_semisimple(algebra, tol);
    let form_kind = common.form_kind(algebra)?;
    let report = InfoReport {
        algebra: algebra.name().to_string(),
        kind: algebra.kind(),
        n: algebra.matrix_size(),
        dim: algebra.dim(),
        group_dim: algebra.kind().group_dim(algebra.matrix_size(), algebra.dim()),
        semisimple: cartan.semisimple,
        killing_determinant: cartan.determinant,
        killing_witness: cartan.witness,
        definiteness: classify_definiteness(&build_form(algebra, FormKind::Killing), tol)?,
        form: form_kind,
        form_definiteness: classify_definiteness(&build_form(algebra, form_kind), tol)?,
        validation: validate(algebra),
    };
    let text = render(common.output, &report, || {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "algebra       {} ({:?}, {}x{} matrices)",
            report.algebra, report.kind, report.n, report.n
        );
        let _ = writeln!(s, "dimension     {} (group {})", report.dim, report.group_dim);
        let _ = writeln!(
            s,
            "semisimple    {} (det Killing = {:.6e})",
            report.semisimple, report.killing_determinant
        );
        if let Some(w) = &report.killing_witness {
            let _ = writeln!(s, "witness       {}", fmt_vec(w));
        }
        let _ = writeln!(s, "definiteness  {}", report.definiteness.as_str());
        let _ = writeln!(
            s,
            "form          {} ({})",
            report.form,
            report.form_definiteness.as_str()
        );
        let v = &report.validation;
        let _ = writeln!(
            s,
            "axioms        {} (antisymmetry {:.1e}, jacobi {:.1e}, closure {:.1e})",
            if v.pass { "ok" } else { "FAILED" },
            v.antisymmetry,
            v.jacobi,
            v.closure
        );
        s
    })?;
    Ok(Outcome {
        text,
        pass: report.validation.pass,
    })
}

fn classify_cmd(common: &Common, input: &str) -> Result<Outcome> {
    let loaded = common.load()?;
    let x = element::parse_element(&loaded.algebra, input)?;
    let desc = classify(&x, None)?;
    let text = render(common.output, &desc, || describe(&desc))?;
    Ok(Outcome { text, pass: true })
}

fn describe(d: &OrbitDescriptor) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "spectrum      {}", fmt_vec(&d.spectrum));
    let _ = writeln!(s, "multiplicity  {:?}", d.multiplicities);
    let _ = writeln!(s, "orbit_dim     {}", d.orbit_dim);
    let _ = writeln!(s, "isotropy_dim  {}", d.isotropy_dim);
    let _ = writeln!(s, "flag_type     {}", d.flag_type);
    s
}

fn verify(common: &Common) -> Result<Outcome> {
    let loaded = common.load()?;
    let kind = common.form_kind(&loaded.algebra)?;
    let cx = SuiteContext::new(&loaded.algebra, kind, common.samples as usize, common.seed)
        .with_declared_drift(loaded.declared_drift)
        .with_tolerance(common.tolerance()?);
    let run = run_suites(&cx, &suite_registry());
    let text = render(common.output, &run, || verify_text(&run))?;
    Ok(Outcome { text, pass: run.pass })
}

fn verify_text(run: &VerificationRun) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} with the {} form, {} samples, seed {}",
        run.algebra, run.form, run.samples, run.seed
    );
    for outcome in &run.suites {
        let r = &outcome.report;
        let _ = write!(
            s,
            "{:<4} {:<32} samples {:>5}  max_residual {:.3e}",
            if r.pass { "PASS" } else { "FAIL" },
            r.suite,
            r.samples,
            r.max_residual
        );
        if r.sign != 0 {
            let _ = write!(s, "  sign {:+}", r.sign);
        }
        if let Some(e) = &outcome.error {
            let _ = write!(s, "  ({e})");
        }
        s.push('\n');
    }
    let failing: Vec<&str> = run.failing().map(|o| o.report.suite.as_str()).collect();
    if failing.is_empty() {
        let _ = writeln!(s, "all suites passed");
    } else {
        let _ = writeln!(s, "failing suites: {}", failing.join(", "));
    }
    s
}

fn pullback(common: &Common, input: Option<&str>) -> Result<Outcome> {
    let loaded = common.load()?;
    let algebra = &loaded.algebra;
    let form = build_form(algebra, common.form_kind(algebra)?);
    let ctx = KksContext::new(form)?;
    let h = match input {
        Some(text) => element::parse_element(algebra, text)?,
        None => random_element(algebra, &mut sample_rng(common.seed, stream_id("cli-pullback"), 0)),
    };
    let report: SuiteReport = pullback_compare(&ctx, &h, common.samples as usize, common.seed)?;
    let text = render(common.output, &report, || {
        format!(
            "{} pullback over {} samples: sign {:+}, max_residual {:.3e}\n",
            if report.pass { "PASS" } else { "FAIL" },
            report.samples,
            report.sign,
            report.max_residual
        )
    })?;
    Ok(Outcome {
        text,
        pass: report.pass,
    })
}

fn fmt_vec(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x:.6}")).collect();
    format!("[{}]", parts.join(", "))
}
