//! Exact character values and divisibility statistics for the infinite
//! families of irreducible Coxeter groups.
//!
//! The crate covers the four infinite families:
//!
//! * type A — symmetric groups, characters via the Murnaghan–Nakayama rule
//!   ([`symchar`]);
//! * types B/C — hyperoctahedral groups of signed permutations, characters via
//!   the wreath-product Murnaghan–Nakayama rule with a brute-force induced
//!   character oracle for small ranks ([`hyperoct`]);
//! * type D — the index-2 demi-hyperoctahedral subgroup, values obtained by
//!   restriction ([`demihyper`]);
//! * type I2 — dihedral groups, with character values in the real cyclotomic
//!   ring represented exactly ([`dihedral`]).
//!
//! On top of the tables, the crate measures how often character values at a
//! fixed embedded element are divisible by an integer `d` (divisibility in the
//! ring of algebraic integers; the value `0` is divisible by everything), and
//! exposes the valuation bounds that control those proportions at large rank.
//!
//! Everything is computed in exact arithmetic: big integers for counts,
//! degrees and character values, exact rationals for proportions, and reduced
//! `2cos(2*pi*k/n)` representatives for dihedral values. Floating point only
//! appears in reported logarithmic bounds, never in a comparison that decides
//! a result.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable default
//! features and enable `no-std-math` for the float bounds. The `parallel`
//! feature (on by default) lets the heavy sweeps fan out via rayon; all
//! reductions are sums of exact integers, so results are identical for any
//! thread count.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "no-std-math")))]
compile_error!("building without `std` requires the `no-std-math` feature");

pub mod cyclotomic;
pub mod demihyper;
pub mod dihedral;
pub mod error;
pub mod hyperoct;
pub mod partitions;
pub mod symchar;
pub mod valuations;

mod num_util;

pub use error::Error;
pub use partitions::{BiPartition, Partition};

use num_bigint::BigInt;
use num_rational::Ratio;

/// Exact rational number used for every reported proportion.
pub type Rational = Ratio<BigInt>;

/// An exact `count / total` pair from a divisibility or valuation sweep.
///
/// Kept as machine integers (desk-scale sweeps stay far below `u64::MAX`)
/// with the exact [`Rational`] derived on demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Proportion {
    pub count: u64,
    pub total: u64,
}

impl Proportion {
    pub fn new(count: u64, total: u64) -> Self {
        debug_assert!(count <= total);
        Proportion { count, total }
    }

    /// The proportion as an exact rational in `[0, 1]`.
    pub fn ratio(&self) -> Rational {
        Rational::new(BigInt::from(self.count), BigInt::from(self.total))
    }
}
