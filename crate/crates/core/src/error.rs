use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate triangle: |signed area| {area:e} below threshold {threshold:e}")]
    DegenerateTriangle { area: f64, threshold: f64 },

    #[error("not a triangle: side lengths ({0}, {1}, {2}) violate the strict triangle inequality")]
    NotATriangle(f64, f64, f64),

    #[error("zero-length direction")]
    ZeroDirection,

    #[error("lines are parallel")]
    ParallelLines,

    #[error("division by zero")]
    DivisionByZero,

    #[error("angles sum to {0} rad, expected pi")]
    AngleSumViolation(f64),

    #[error("phi = {0} rad is outside (0, pi/2]")]
    PhiOutOfRange(f64),

    #[error("argument outside the domain: {0}")]
    DomainError(String),

    #[error("non-finite coordinate")]
    NonFinite,
}
