use thiserror::Error;

/// Refusals raised when an operation is asked to leave its supported domain.
///
/// Internal consistency violations (a recursion producing a non-integer, a
/// quotient that should be exact failing to divide) are bugs, not domain
/// errors; those panic via assertions instead of surfacing here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization input {n} exceeds the configured cap {cap}")]
    FactorCapExceeded { n: u64, cap: u64 },

    #[error("composition enumeration refused for n = {n}: 2^(n-1) ordered compositions explode past n = {max}")]
    CompositionTooLarge { n: u32, max: u32 },

    #[error("brute-force census refused for ell = {ell}, n = {n}: guard is ell <= {max_ell}, n <= {max_n}")]
    CensusTooLarge {
        ell: u32,
        n: u32,
        max_ell: u32,
        max_n: u32,
    },

    #[error("no closed form is implemented for n = {n} (supported: 2, 3, 4, 5, 7)")]
    UnsupportedClosedForm { n: u32 },

    #[error("{op} is undefined at n = {n}: requires {requirement}")]
    OutOfBranch {
        op: &'static str,
        n: u32,
        requirement: &'static str,
    },

    #[error("witness threshold requires a == b == 1 (mod 3) and b > 1; got a = {a}, b = {b}")]
    WitnessResidue { a: u32, b: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
