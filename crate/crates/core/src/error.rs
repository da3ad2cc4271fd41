use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("evaluation at a pole: |den(z)| = {magnitude:e} below threshold {threshold:e}")]
    Pole { magnitude: f64, threshold: f64 },

    #[error("degenerate Cayley transform: {0}")]
    Degenerate(&'static str),

    #[error("not a Herglotz function with simple real poles: {0}")]
    NotHerglotzAtomic(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("resolvent is singular at z = {re}{im:+}i")]
    SingularResolvent { re: f64, im: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("incompatible systems: {0}")]
    Incompatible(String),

    #[error("value {re}{im:+}i at z = i is not in the open upper half-plane")]
    NotHerglotz { re: f64, im: f64 },

    #[error("{name} = {value} outside [0, 1]")]
    Range { name: &'static str, value: f64 },

    #[error("invalid Foster data: {0}")]
    Spec(String),

    #[error("colligation condition violated: residual {residual:e} exceeds {threshold:e}")]
    Colligation { residual: f64, threshold: f64 },

    #[error("malformed input: {0}")]
    Input(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Dimension(_) => 1,
            Error::Colligation { .. } | Error::Spec(_) | Error::Incompatible(_) => 2,
            Error::Domain(_)
            | Error::NotHerglotz { .. }
            | Error::NotHerglotzAtomic(_)
            | Error::SingularResolvent { .. }
            | Error::Pole { .. }
            | Error::Degenerate(_)
            | Error::Range { .. } => 3,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Input(err.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Input(err.to_string())
    }
}
