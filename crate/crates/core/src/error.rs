use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conformal weight must be non-negative, got {0}")]
    NegativeWeight(i64),
    #[error("the FULL flavor needs a bound on the gamma_(-1) degree")]
    MissingDegreeBound,
    #[error("gamma^{0}_(-1) cannot be created on a PLUS state")]
    PlusViolation(u8),
    #[error("direction {dir} is outside 1..={dim}")]
    Direction { dir: usize, dim: usize },
    #[error("the state is not homogeneous in (weight, charge)")]
    NonHomogeneous,
    #[error("type C needs an even dimension, got N = {0}")]
    OddSymplectic(usize),
    #[error("the chosen element of g_1 is zero or not of degree 1")]
    InvalidG1,
    #[error("the Hermitian form is only defined on PLUS states")]
    FullFlavorInner,
    #[error("the arc action is only defined on PLUS (SW) states")]
    ArcOnFull,
    #[error("K_n is defined for n >= 0 and N = 2 only")]
    KOperator,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
