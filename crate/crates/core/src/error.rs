use thiserror::Error;

/// Errors raised by the library.
///
/// Variants that are documented as "must not fire" indicate a bug upstream
/// (a corrupted table or an inconsistent twist datum), not bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not rational")]
    NotRational,
    #[error("unsolvable")]
    Unsolvable,

    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not associative at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no identity")]
    NoIdentity,
    #[error("identity must be element 0, found {0}")]
    IdentityNotFirst(usize),
    #[error("no inverse for {0}")]
    NoInverse(usize),
    #[error("generator {0} is not a permutation of 0..{1}")]
    NotAPermutation(usize, usize),
    #[error("order exceeds limit {0}")]
    OrderExceedsLimit(usize),
    #[error("not closed: {0}")]
    NotClosed(String),
    #[error("not normal")]
    NotNormal,
    #[error("not abelian")]
    NotAbelian,

    #[error("splitting failed after {0} attempts")]
    SplittingFailed(usize),
    #[error("not a virtual character: coefficient {index} is {coefficient}")]
    NotVirtualCharacter { index: usize, coefficient: String },
    #[error("class functions belong to different groups")]
    MismatchedGroups,
    #[error("non-integral Adams coefficient at ({0},{1}) for k = {2}")]
    NonIntegralAdams(usize, usize, i64),
    #[error("non-integral lambda at n = {0}")]
    NonIntegralLambda(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("size bound exceeded: {0} > {1}")]
    SizeBoundExceeded(usize, usize),

    #[error("pairing is not alternating")]
    PairingNotAlternating,
    #[error("pairing is not bi-additive")]
    PairingNotBiadditive,
    #[error("not a 2-cocycle at ({0},{1},{2})")]
    NotACocycle(usize, usize, usize),
    #[error("coboundary system unsolvable for quotient element {0}")]
    CoboundaryUnsolvable(usize),
    #[error("not a character of the dual group: {0}")]
    NotACharacter(String),
    #[error("no matching element of A for b({0},{1})")]
    NoMatchingElement(usize, usize),
    #[error("no character matching: {0}")]
    NoCharacterMatching(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
