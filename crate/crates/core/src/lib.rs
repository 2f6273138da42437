//! Exact-arithmetic toolkit for rank-2 sublattice combinatorics, the
//! partition graph on Z^2, a brute-force verifier for the type-(1,d)
//! symplectic factorization criterion, and the nu/tau Weierstrass
//! reduction game with Newton polygon analysis.

pub mod dot;
pub mod game;
pub mod hnf;
pub mod lattice2;
pub mod parse;
pub mod partition;
pub mod series;
pub mod symplectic;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("RankDeficient: generators span a lattice of rank < full")]
    RankDeficient,
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("IndexOutOfRange: position {0} not valid for length {1}")]
    IndexOutOfRange(usize, usize),
    #[error("InvalidMove: {0}")]
    InvalidMove(String),
    #[error("NotSpanning: parts do not collectively span Z^2")]
    NotSpanning,
    #[error("PrecisionExhausted: {0}")]
    PrecisionExhausted(String),
    #[error("SyntaxError at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("NotMonic: expression is not monic in x")]
    NotMonic,
    #[error("NotInWm: coefficient alpha_{0} does not vanish at t=0")]
    NotInWm(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
