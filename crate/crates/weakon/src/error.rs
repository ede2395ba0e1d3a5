use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("evaluation of component {component} failed: {msg}")]
    Eval { component: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("metric condition number {cond:.3e} exceeds cap {cap:.3e}")]
    IllConditioned { cond: f64, cap: f64 },

    #[error("metric Gram matrix is not uniformly positive definite (min eigenvalue {min_eig:.3e} below floor {floor:.3e})")]
    MetricNotPositive { min_eig: f64, floor: f64 },

    #[error("storage function exceeds its declared bound: |{value:.6e}| > {bound:.6e}")]
    StorageBound { value: f64, bound: f64 },

    #[error("eigensolver failed to converge within {sweeps} sweeps")]
    EigenConvergence { sweeps: usize },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("empty sample set")]
    EmptySampleSet,

    #[error("non-autonomous evaluation requires an explicit time window on the sampler")]
    MissingTimeWindow,

    #[error("decoupled condition violated: sup over samples of λ1(a)+λ1(b) = {sup:.6e} ≥ 0")]
    HypothesisViolated { sup: f64 },

    #[error("epsilon search exhausted at {last_epsilon:.3e}; best margin {best_alpha:.6e} at epsilon {best_epsilon:.3e}")]
    EpsilonExhausted {
        last_epsilon: f64,
        best_epsilon: f64,
        best_alpha: f64,
    },

    #[error("step size underflow at t = {t}")]
    StepUnderflow { t: f64 },

    #[error("integration exceeded the configured step limit ({max_steps})")]
    MaxSteps { max_steps: usize },

    #[error("state left the domain box at t = {t}")]
    LeftDomain { t: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
