//! Error type shared by the character and combinatorics modules.

use core::fmt;

/// Errors reported by contract-checked operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Parts not weakly decreasing or a zero part was supplied.
    InvalidPartition,
    /// The valuation of zero is infinite; callers must branch on zero first.
    ZeroValuation,
    /// An irrep label and a class (or a class and a rank) disagree in size.
    SizeMismatch { expected: u32, actual: u32 },
    /// Tried to embed a class of rank `k` into a smaller group of rank `n`.
    EmbedBeyondRank { k: u32, n: u32 },
    /// Brute-force oracle requested beyond its hard cap.
    OracleCap { n: u32, cap: u32 },
    /// Split (±) type-D labels have no defined value on split classes.
    SplitClassValue,
    /// Operation defined only for even rank.
    EvenRankRequired { n: u32 },
    /// Type-D statistics need a strictly larger ambient rank so the embedded
    /// class is never split.
    StrictEmbedRequired { k: u32, n: u32 },
    /// Dihedral irrep index outside the valid range for the modulus.
    InvalidDihedralLabel { index: u64, modulus: u64 },
    /// Dihedral rotation exponent outside `0..modulus`.
    InvalidDihedralElement { exponent: u64, modulus: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition => {
                write!(f, "parts must be positive and weakly decreasing")
            }
            Error::ZeroValuation => {
                write!(f, "valuation of 0 is infinite; handle zero separately")
            }
            Error::SizeMismatch { expected, actual } => {
                write!(f, "size mismatch: expected {expected}, got {actual}")
            }
            Error::EmbedBeyondRank { k, n } => {
                write!(f, "cannot embed a rank-{k} class into rank {n} < {k}")
            }
            Error::OracleCap { n, cap } => {
                write!(f, "induced-character oracle capped at rank {cap}, got {n}")
            }
            Error::SplitClassValue => {
                write!(f, "± labels have no defined character value on split classes")
            }
            Error::EvenRankRequired { n } => {
                write!(f, "rank must be even, got {n}")
            }
            Error::StrictEmbedRequired { k, n } => {
                write!(f, "need base rank {k} strictly below ambient rank {n}")
            }
            Error::InvalidDihedralLabel { index, modulus } => {
                write!(f, "no 2-dimensional irrep with index {index} for modulus {modulus}")
            }
            Error::InvalidDihedralElement { exponent, modulus } => {
                write!(f, "rotation exponent {exponent} out of range for modulus {modulus}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
