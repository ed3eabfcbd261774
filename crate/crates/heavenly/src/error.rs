use thiserror::Error;

/// One failed side condition of a class.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Violation {
    pub name: String,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arity error: {0}")]
    Arity(String),
    #[error("unknown equation or system `{0}`")]
    UnknownEquation(String),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("constraint violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Constraint(Vec<Violation>),
    #[error("singular denominator: {0} vanishes")]
    SingularDenominator(String),
    #[error("not exactly representable: {0}")]
    NotExact(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
