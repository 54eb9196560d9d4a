use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {p}^{d} exceeds the configured cap of {cap} elements")]
    FieldTooLarge { p: u64, d: u32, cap: u64 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("characteristic mismatch: expected {expected}, found {found}")]
    CharacteristicMismatch { expected: u32, found: u32 },
    #[error("polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("r = {r} does not divide q + 1 = {}", q + 1)]
    RDoesNotDivide { q: u64, r: u32 },
    #[error("r must be an odd prime, got {0}")]
    InvalidR(u32),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("division is not exact; remainder has degree {remainder_degree}")]
    InexactDivision { remainder_degree: usize, remainder: String },
    #[error("quotient coefficient {index} has denominator {denominator}, not a power of 5")]
    NonFivePowerDenominator { index: usize, denominator: String },
    #[error("fixture format error at line {line}: {message}")]
    Fixture { line: usize, message: String },
    #[error("fixture checksum mismatch: recorded {recorded}, computed {computed}")]
    FixtureChecksum { recorded: String, computed: String },
    #[error("no fixture for alpha = {0} (available: 4, 9, 14, 24)")]
    NoFixture(u32),
}
