use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-finite matrix entry")]
    NonFinite,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("bad dimension for {name}: {reason}")]
    BadDimension { name: String, reason: String },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("matrix does not lie in the algebra (expansion residual {residual:.3e})")]
    NotInAlgebra { residual: f64 },

    #[error("bilinear form is degenerate (smallest singular value {smallest:.3e})")]
    DegenerateForm { smallest: f64 },
    #[error("bilinear form is not Ad-invariant (residual {residual:.3e})")]
    NotInvariant { residual: f64 },
    #[error("unknown bilinear form `{0}`")]
    UnknownForm(String),

    #[error("element is not skew-Hermitian (defect {defect:.3e})")]
    NotSkewHermitian { defect: f64 },
    #[error("orbit classification is only available for u(n) and su(n), not {0}")]
    UnsupportedAlgebra(String),

    #[error("vector is not tangent to the orbit (residual {residual:.3e})")]
    NotTangent { residual: f64 },
    #[error("tangent vectors are based at different points")]
    BaseMismatch,
    #[error("element is central; its orbit is a single point")]
    CentralElement,
    #[error("form cannot carry the orbit symplectic structure: {0}")]
    SymplecticUnavailable(String),

    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
