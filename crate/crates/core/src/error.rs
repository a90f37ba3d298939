use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular (no nonzero pivot left at row {row}, column {col})")]
    Singular { row: usize, col: usize },

    #[error("denominator vanishes under the substitution")]
    Pole,

    #[error("invalid substitution: {0}")]
    Substitution(String),

    #[error("presentation is not admissible: {0}")]
    Admissibility(String),

    #[error("generator out of range: {0}")]
    GeneratorIndex(String),

    #[error("not a homology cylinder: {0}")]
    NotHomologyCylinder(String),

    #[error("homology is not integral: {0}")]
    NonIntegralHomology(String),

    #[error("invalid generator token `{0}`")]
    Token(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("bad expression: {0}")]
    Expression(String),
}
