//! Named verification suites over one algebra and one bilinear form.
//!
//! Each suite samples its own seeded stream, checks one property and returns
//! a [`SuiteReport`]. [`suite_registry`] holds the built-in suites in the
//! order they are run and reported.

mod suites;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{is_semisimple, killing_form, trace_form, BilinearForm, FormKind};
use crate::lie::{AlgebraKind, LieAlgebra};
use crate::numerics::Tolerance;
use crate::registry::{Named, Registry};
use crate::report::SuiteReport;
use crate::symplectic::KksContext;

pub use suites::builtin_suites;

/// Which form to verify against; `auto` picks the Killing form when the
/// algebra is semisimple and the trace form otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FormSelection {
    Killing,
    Trace,
    #[default]
    Auto,
}

impl FormSelection {
    pub fn resolve(self, algebra: &Arc<LieAlgebra>, tol: Tolerance) -> FormKind {
        match self {
            FormSelection::Killing => FormKind::Killing,
            FormSelection::Trace => FormKind::Trace,
            FormSelection::Auto => {
                if is_semisimple(algebra, tol).semisimple {
                    FormKind::Killing
                } else {
                    FormKind::Trace
                }
            }
        }
    }
}

impl FromStr for FormSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "killing" => Ok(Self::Killing),
            "trace" => Ok(Self::Trace),
            "auto" => Ok(Self::Auto),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }
}

impl fmt::Display for FormSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Killing => "killing",
            Self::Trace => "trace",
            Self::Auto => "auto",
        })
    }
}

pub fn build_form(algebra: &Arc<LieAlgebra>, kind: FormKind) -> BilinearForm {
    match kind {
        FormKind::Killing => killing_form(algebra),
        FormKind::Trace => trace_form(algebra),
    }
}

/// Everything a suite may read.
pub struct SuiteContext {
    pub algebra: Arc<LieAlgebra>,
    pub form: BilinearForm,
    /// `Err` holds the reason the form cannot carry the symplectic checks.
    pub kks: std::result::Result<KksContext, String>,
    pub samples: usize,
    pub seed: u64,
    pub tol: Tolerance,
    /// Drift between file-declared and recomputed structure constants.
    pub declared_drift: Option<f64>,
}

impl SuiteContext {
    pub fn new(algebra: &Arc<LieAlgebra>, form_kind: FormKind, samples: usize, seed: u64) -> Self {
        let form = build_form(algebra, form_kind);
        let kks = KksContext::new(form.clone()).map_err(|e| e.to_string());
        Self {
            algebra: Arc::clone(algebra),
            form,
            kks,
            samples: samples.max(1),
            seed,
            tol: Tolerance::default(),
            declared_drift: None,
        }
    }

    pub fn with_declared_drift(mut self, drift: Option<f64>) -> Self {
        self.declared_drift = drift;
        self
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    pub fn classifiable(&self) -> bool {
        matches!(self.algebra.kind(), AlgebraKind::Unitary | AlgebraKind::SpecialUnitary)
    }
}

/// What a suite needs before it makes sense to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    None,
    /// Declared structure constants are present.
    DeclaredConstants,
    /// The algebra is `u(n)` or `su(n)`.
    Classifiable,
    /// The form is nondegenerate and invariant; otherwise the suite fails.
    SymplecticForm,
    /// Both of the above.
    ClassifiableSymplectic,
}

pub trait VerificationSuite: Named + Send + Sync {
    fn requirement(&self) -> Requirement {
        Requirement::None
    }

    fn run(&self, cx: &SuiteContext) -> Result<SuiteReport>;
}

pub fn suite_registry() -> Registry<dyn VerificationSuite> {
    let mut reg: Registry<dyn VerificationSuite> = Registry::new();
    for suite in builtin_suites() {
        reg.register(suite);
    }
    reg
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub algebra: String,
    pub form: FormKind,
    pub samples: usize,
    pub seed: u64,
    pub suites: Vec<SuiteOutcome>,
    pub pass: bool,
}

impl VerificationRun {
    pub fn failing(&self) -> impl Iterator<Item = &SuiteOutcome> {
        self.suites.iter().filter(|s| !s.report.pass)
    }
}

/// A suite report plus the error that stopped the suite, if any.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    #[serde(flatten)]
    pub report: SuiteReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Runs every applicable suite of `registry` in registration order.
pub fn run_suites(cx: &SuiteContext, registry: &Registry<dyn VerificationSuite>) -> VerificationRun {
    let mut suites = Vec::new();
    for suite in registry.iter() {
        let applies = match suite.requirement() {
            Requirement::None | Requirement::SymplecticForm => true,
            Requirement::DeclaredConstants => cx.declared_drift.is_some(),
            Requirement::Classifiable | Requirement::ClassifiableSymplectic => cx.classifiable(),
        };
        if !applies {
            continue;
        }
        let needs_kks = matches!(
            suite.requirement(),
            Requirement::SymplecticForm | Requirement::ClassifiableSymplectic
        );
        let result = match (&cx.kks, needs_kks) {
            (Err(reason), true) => Err(reason.clone()),
            _ => suite.run(cx).map_err(|e| e.to_string()),
        };
        suites.push(match result {
            Ok(report) => SuiteOutcome { report, error: None },
            Err(error) => SuiteOutcome {
                report: SuiteReport {
                    suite: suite.name().to_string(),
                    samples: 0,
                    max_residual: f64::NAN,
                    sign: 0,
                    pass: false,
                },
                error: Some(error),
            },
        });
    }
    VerificationRun {
        algebra: cx.algebra.name().to_string(),
        form: cx.form.kind(),
        samples: cx.samples,
        seed: cx.seed,
        pass: suites.iter().all(|s| s.report.pass),
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::preset;

    fn run(name: &str, n: usize, form: FormSelection) -> VerificationRun {
        let algebra = preset(name, n).unwrap();
        let kind = form.resolve(&algebra, Tolerance::default());
        run_suites(&SuiteContext::new(&algebra, kind, 20, 7), &suite_registry())
    }

    #[test]
    fn presets_pass_every_suite() {
        for (name, n) in [("su", 2), ("su", 3), ("u", 1), ("u", 3), ("so", 3), ("so", 4)] {
            let report = run(name, n, FormSelection::Auto);
            let failing: Vec<_> = report.failing().map(|s| s.report.suite.clone()).collect();
            assert!(report.pass, "{name}({n}) failing {failing:?}");
        }
    }

    #[test]
    fn auto_picks_trace_on_u() {
        assert_eq!(run("u", 2, FormSelection::Auto).form, FormKind::Trace);
        assert_eq!(run("su", 2, FormSelection::Auto).form, FormKind::Killing);
    }

    #[test]
    fn degenerate_form_fails_symplectic_suites() {
        let report = run("u", 2, FormSelection::Killing);
        assert!(!report.pass);
        let omega = report.suites.iter().find(|s| s.report.suite == "omega_closed").unwrap();
        assert!(omega.error.as_deref().unwrap().contains("degenerate"));
        let bracket = report
            .suites
            .iter()
            .find(|s| s.report.suite == "bracket_matrix")
            .unwrap();
        assert!(bracket.report.pass);
    }

    #[test]
    fn classification_suites_skip_so() {
        let report = run("so", 3, FormSelection::Auto);
        assert!(report.suites.iter().all(|s| s.report.suite != "descriptor_invariance"));
        assert!(report.suites.iter().any(|s| s.report.suite == "pullback"));
    }

    #[test]
    fn pullback_reports_negative_sign() {
        let report = run("su", 3, FormSelection::Auto);
        let pullback = report.suites.iter().find(|s| s.report.suite == "pullback").unwrap();
        assert_eq!(pullback.report.sign, -1);
    }

    #[test]
    fn form_selection_parses() {
        assert_eq!("trace".parse::<FormSelection>().unwrap(), FormSelection::Trace);
        assert!(matches!("riemann".parse::<FormSelection>(), Err(Error::UnknownForm(_))));
    }
}
