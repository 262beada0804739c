use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraElement, LieAlgebra};
use crate::numerics::{svd, symmetric_eigenvalues, RealMatrix, Svd, Tolerance};
use crate::registry::{Named, Registry};
use crate::sampling::{random_element, random_group_element, sample_rng, stream_id};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Killing,
    Trace,
}

impl FormKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FormKind::Killing => "killing",
            FormKind::Trace => "trace",
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "killing" => Ok(FormKind::Killing),
            "trace" => Ok(FormKind::Trace),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }
}

/// A way of producing an invariant symmetric bilinear form on an algebra.
pub trait FormStrategy: Named + Send + Sync {
    fn kind(&self) -> FormKind;

    /// Gram matrix in the algebra's basis, not yet symmetrized.
    fn gram(&self, algebra: &LieAlgebra) -> RealMatrix;
}

/// `B(X, Y) = tr(ad X ∘ ad Y)`.
pub struct Killing;

/// `B(X, Y) = −Re tr(X Y)` on the matrix realization.
pub struct TraceForm;

impl Named for Killing {
    fn name(&self) -> &'static str {
        "killing"
    }
}

impl FormStrategy for Killing {
    fn kind(&self) -> FormKind {
        FormKind::Killing
    }

    fn gram(&self, algebra: &LieAlgebra) -> RealMatrix {
        // ad(eᵢ)_{k,l} = c_ilk, so tr(ad eᵢ ad eⱼ) = Σ_{k,l} c_ilk c_jkl
        let d = algebra.dim();
        RealMatrix::from_fn(d, d, |i, j| {
            let mut s = 0.0;
            for k in 0..d {
                for l in 0..d {
                    s += algebra.structure_constant(i, l, k) * algebra.structure_constant(j, k, l);
                }
            }
            s
        })
    }
}

impl Named for TraceForm {
    fn name(&self) -> &'static str {
        "trace"
    }
}

impl FormStrategy for TraceForm {
    fn kind(&self) -> FormKind {
        FormKind::Trace
    }

    fn gram(&self, algebra: &LieAlgebra) -> RealMatrix {
        let basis = algebra.basis();
        let d = basis.len();
        RealMatrix::from_fn(d, d, |i, j| -(&basis[i] * &basis[j]).trace().re)
    }
}

pub fn form_registry() -> Registry<dyn FormStrategy> {
    let mut reg: Registry<dyn FormStrategy> = Registry::new();
    reg.register(Box::new(Killing)).register(Box::new(TraceForm));
    reg
}

/// A symmetric bilinear form on an algebra, stored as its Gram matrix.
#[derive(Clone)]
pub struct BilinearForm {
    algebra: Arc<LieAlgebra>,
    gram: RealMatrix,
    kind: FormKind,
    decomposition: Svd,
}

impl BilinearForm {
    /// Wraps a Gram matrix, symmetrizing it.
    pub fn from_gram(algebra: &Arc<LieAlgebra>, gram: RealMatrix, kind: FormKind) -> Result<Self> {
        let d = algebra.dim();
        if gram.rows() != d || gram.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} Gram matrix for an algebra of dimension {d}",
                gram.rows(),
                gram.cols()
            )));
        }
        let gram = gram.symmetrized();
        let decomposition = svd(&gram);
        Ok(Self {
            algebra: Arc::clone(algebra),
            gram,
            kind,
            decomposition,
        })
    }

    pub fn from_strategy(algebra: &Arc<LieAlgebra>, strategy: &dyn FormStrategy) -> Self {
        Self::from_gram(algebra, strategy.gram(algebra), strategy.kind())
            .expect("strategy Gram matrices have the algebra's dimension")
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn gram(&self) -> &RealMatrix {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub(crate) fn decomposition(&self) -> &Svd {
        &self.decomposition
    }

    pub(crate) fn check_algebra(&self, x: &AlgebraElement) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, x.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `B(X, Y)`.
    pub fn eval(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
        self.check_algebra(x)?;
        self.check_algebra(y)?;
        Ok(self.gram.bilinear(x.coeffs(), y.coeffs()))
    }

    /// Nondegenerate when the smallest singular value of the Gram matrix
    /// exceeds `abs + rel·largest`.
    pub fn is_nondegenerate(&self, tol: Tolerance) -> bool {
        self.decomposition.rank(tol) == self.algebra.dim()
    }

    pub(crate) fn require_nondegenerate(&self, tol: Tolerance) -> Result<()> {
        if self.is_nondegenerate(tol) {
            Ok(())
        } else {
            Err(Error::DegenerateForm {
                smallest: self.decomposition.smallest(),
            })
        }
    }

    /// Largest relative Ad-invariance defect
    /// `|B(Ad g X, Ad g Y) − B(X, Y)| / (1 + |B(X, Y)|)` over seeded samples.
    pub fn invariance_residual(&self, samples: usize, seed: u64) -> Result<f64> {
        let stream = stream_id("form-invariance");
        let mut worst: f64 = 0.0;
        for idx in 0..samples {
            let mut rng = sample_rng(seed, stream, idx as u64);
            let g = random_group_element(&self.algebra, &mut rng)?;
            let x = random_element(&self.algebra, &mut rng);
            let y = random_element(&self.algebra, &mut rng);
            let before = self.eval(&x, &y)?;
            let after = self.eval(&g.act(&x)?, &g.act(&y)?)?;
            worst = worst.max((after - before).abs() / (1.0 + before.abs()));
        }
        Ok(worst)
    }
}

impl fmt::Debug for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilinearForm")
            .field("algebra", &self.algebra.name())
            .field("kind", &self.kind)
            .field("gram", &self.gram)
            .finish()
    }
}

pub fn killing_form(algebra: &Arc<LieAlgebra>) -> BilinearForm {
    BilinearForm::from_strategy(algebra, &Killing)
}

pub fn trace_form(algebra: &Arc<LieAlgebra>) -> BilinearForm {
    BilinearForm::from_strategy(algebra, &TraceForm)
}

/// Outcome of Cartan's criterion.
#[derive(Debug, Clone, Serialize)]
pub struct Semisimplicity {
    pub semisimple: bool,
    pub determinant: f64,
    pub smallest_singular_value: f64,
    pub largest_singular_value: f64,
    /// Unit null vector of the Killing Gram matrix when degenerate, with its
    /// largest component positive.
    pub witness: Option<Vec<f64>>,
}

/// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
pub fn is_semisimple(algebra: &Arc<LieAlgebra>, tol: Tolerance) -> Semisimplicity {
    let form = killing_form(algebra);
    let dec = form.decomposition();
    let semisimple = form.is_nondegenerate(tol);
    let witness = if semisimple {
        None
    } else {
        dec.null_space(tol).into_iter().last().map(normalize_sign)
    };
    Semisimplicity {
        semisimple,
        determinant: if algebra.dim() == 0 {
            1.0
        } else {
            form.gram().determinant()
        },
        smallest_singular_value: dec.smallest(),
        largest_singular_value: dec.largest(),
        witness,
    }
}

fn normalize_sign(mut v: Vec<f64>) -> Vec<f64> {
    let lead = v
        .iter()
        .copied()
        .fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
    if lead < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    NegativeDefinite,
    PositiveDefinite,
    Indefinite,
    Degenerate,
}

impl Definiteness {
    pub fn as_str(self) -> &'static str {
        match self {
            Definiteness::NegativeDefinite => "negative_definite",
            Definiteness::PositiveDefinite => "positive_definite",
            Definiteness::Indefinite => "indefinite",
            Definiteness::Degenerate => "degenerate",
        }
    }
}

/// Sign pattern of the Gram eigenvalues; an eigenvalue counts as zero when
/// `|λ| ≤ abs + rel·max|λ|`.
pub fn classify_definiteness(form: &BilinearForm, tol: Tolerance) -> Result<Definiteness> {
    let eigenvalues = symmetric_eigenvalues(form.gram(), tol)?;
    let scale = eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let cut = tol.threshold(scale);
    if eigenvalues.iter().any(|l| l.abs() <= cut) {
        return Ok(Definiteness::Degenerate);
    }
    let negative = eigenvalues.iter().all(|&l| l < 0.0);
    let positive = eigenvalues.iter().all(|&l| l > 0.0);
    Ok(match (negative, positive) {
        (true, _) => Definiteness::NegativeDefinite,
        (false, true) => Definiteness::PositiveDefinite,
        _ => Definiteness::Indefinite,
    })
}
