use thiserror::Error;

pub type Result<T, E = RingError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid ring expression: {0}")]
    InvalidExpr(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("ring order {order} exceeds the configured limit {limit}")]
    OrderLimitExceeded { order: u128, limit: usize },
    #[error("element index {index} out of range for a ring of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("ring is not local")]
    NotLocal,
    #[error("search budget of {budget} nodes exhausted")]
    SearchBudgetExceeded { budget: u64 },
    #[error("morphisms are not composable: target of the first is not the source of the second")]
    NotComposable,
    #[error("morphism is not bijective")]
    NotBijective,
    #[error("map is not an automorphism of the ring")]
    NotAutomorphism,
    #[error("group of order {order} is too large to list (limit {limit})")]
    GroupTooLarge { order: u64, limit: u64 },
    #[error("value exceeds 2^63")]
    Overflow,
}
