//! Dihedral groups: exact character tables, algebraic-integer divisibility of
//! the rotation values `2cos(2*pi*k/m)`, closed-form divisible counts, the
//! limiting proportions along chains of divisible moduli, and the subgroup of
//! rotations whose proportion tends to 1.
//!
//! A chain is determined by a base modulus `m` and stage ratios; the group of
//! modulus `m` includes into the next stage by `r -> r^c`, so a base rotation
//! exponent `l` becomes `l * (m_n / m)` at stage `n`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::min_poly_2cos;
use crate::error::{Error, Result};
use crate::num_util::{gcd_u64, v2_u64};
use crate::{Proportion, Rational};

/// Exact representative of `2cos(2*pi*k/n)`: the reduced pair `(k', n')`
/// with `gcd(k', n') = 1` and `k' <= n'/2` (cosine is even and `2pi`-periodic,
/// so this normal form is unique). The value is rational exactly when
/// `n'` is 1, 2, 3, 4 or 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosineAlgebraic {
    numerator: u64,
    denominator: u64,
}

impl CosineAlgebraic {
    pub fn new(k: u64, n: u64) -> Self {
        assert!(n >= 1);
        let k = k % n;
        let g = gcd_u64(k, n);
        let (mut k, n) = if g == 0 { (0, 1) } else { (k / g, n / g) };
        if 2 * k > n {
            k = n - k;
        }
        CosineAlgebraic { numerator: k, denominator: n }
    }

    /// Reduced numerator `k'`.
    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    /// Reduced denominator `n'`; the Galois orbit (and hence every
    /// divisibility question) depends only on this.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// The exact integer value when rational.
    pub fn as_integer(&self) -> Option<i64> {
        match self.denominator {
            1 => Some(2),
            2 => Some(-2),
            3 => Some(-1),
            4 => Some(0),
            6 => Some(1),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_integer().is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.denominator == 4
    }
}

impl core::fmt::Display for CosineAlgebraic {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "2cos(2*pi*{}/{})", self.numerator, self.denominator),
        }
    }
}

/// Whether `alpha / d` is an algebraic integer, by the rationality case
/// analysis: rational values divide as ordinary integers (zero by
/// everything); irrational `2cos` values divide by nothing.
pub fn divisible_cos(alpha: &CosineAlgebraic, d: u64) -> bool {
    assert!(d >= 1);
    match alpha.as_integer() {
        Some(0) => true,
        Some(v) => v.unsigned_abs() % d == 0,
        None => d == 1,
    }
}

/// Independent divisibility oracle through the minimal polynomial: reduce to
/// `(k', n')`, take the monic minimal polynomial `P` of `2cos(2*pi/n')` of
/// degree `e`, and test whether `P(d y) / d^e` stays integral, i.e.
/// `d^(e-i) | c_i` for every `i < e`. Galois conjugation carries
/// `2cos(2*pi*k'/n')/d` to `2cos(2*pi/n')/d`, so the answer transfers.
pub fn algebraic_integer_oracle(k: u64, n: u64, d: u64) -> bool {
    assert!(d >= 1);
    if d == 1 {
        return true;
    }
    let reduced = CosineAlgebraic::new(k, n);
    // The normal form folds k' to n'-k'; both have the same minimal
    // polynomial, so the fold is harmless here.
    let p = min_poly_2cos(reduced.denominator);
    coefficients_absorb_denominator(&p, d)
}

/// `d^(e-i) | c_i` for every coefficient below the leading one, i.e.
/// `P(d y) / d^e` is integral.
fn coefficients_absorb_denominator(p: &crate::cyclotomic::IntPoly, d: u64) -> bool {
    let e = p.degree().expect("minimal polynomials are nonzero");
    let d = BigInt::from(d);
    let mut scale = d.clone();
    for i in (0..e).rev() {
        if !(p.coeff(i) % &scale).is_zero() {
            return false;
        }
        scale *= &d;
    }
    true
}

/// [`algebraic_integer_oracle`] with the minimal polynomials cached, for
/// sweeps over many `(k, n, d)` triples.
#[derive(Default)]
pub struct DivisibilityOracle {
    minpolys: alloc::collections::BTreeMap<u64, crate::cyclotomic::IntPoly>,
}

impl DivisibilityOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn divisible(&mut self, k: u64, n: u64, d: u64) -> bool {
        assert!(d >= 1);
        if d == 1 {
            return true;
        }
        let reduced = CosineAlgebraic::new(k, n);
        let p = self
            .minpolys
            .entry(reduced.denominator)
            .or_insert_with(|| min_poly_2cos(reduced.denominator));
        coefficients_absorb_denominator(p, d)
    }
}

/// A dihedral group element `r^l` or `s r^l` for modulus `m >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    modulus: u64,
    exponent: u64,
    reflection: bool,
}

impl DihedralElement {
    pub fn new(modulus: u64, exponent: u64, reflection: bool) -> Result<Self> {
        if modulus < 3 {
            return Err(Error::InvalidDihedralElement { exponent, modulus });
        }
        Ok(DihedralElement { modulus, exponent: exponent % modulus, reflection })
    }

    pub fn rotation(modulus: u64, exponent: u64) -> Result<Self> {
        Self::new(modulus, exponent, false)
    }

    pub fn reflection(modulus: u64, exponent: u64) -> Result<Self> {
        Self::new(modulus, exponent, true)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_reflection(&self) -> bool {
        self.reflection
    }

    /// Image in the group of modulus `target` (a multiple of this modulus):
    /// exponents scale by the ratio, the reflection flag persists.
    pub fn include_into(&self, target: u64) -> Result<Self> {
        if target % self.modulus != 0 {
            return Err(Error::InvalidDihedralElement { exponent: self.exponent, modulus: target });
        }
        let c = target / self.modulus;
        DihedralElement::new(target, self.exponent * c, self.reflection)
    }
}

impl core::fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.reflection {
            write!(f, "sr{}", self.exponent)
        } else {
            write!(f, "r{}", self.exponent)
        }
    }
}

/// Irrep label of a dihedral group.
///
/// `RotationSign` and `ProductSign` exist only for even modulus; the
/// two-dimensional labels run over `1..=m/2-1` (even `m`) or `1..=(m-1)/2`
/// (odd `m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralIrrepLabel {
    Trivial,
    /// `r -> -1, s -> 1` (even modulus only).
    RotationSign,
    /// `r -> 1, s -> -1`.
    ReflectionSign,
    /// `r -> -1, s -> -1` (even modulus only).
    ProductSign,
    /// The two-dimensional rotation-by-`2*pi*k/m` representation.
    TwoDim(u64),
}

impl core::fmt::Display for DihedralIrrepLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DihedralIrrepLabel::Trivial => write!(f, "triv"),
            DihedralIrrepLabel::RotationSign => write!(f, "sgn_r"),
            DihedralIrrepLabel::ReflectionSign => write!(f, "sgn_s"),
            DihedralIrrepLabel::ProductSign => write!(f, "sgn_rs"),
            DihedralIrrepLabel::TwoDim(k) => write!(f, "rho{k}"),
        }
    }
}

/// Number of two-dimensional labels for modulus `m`.
pub fn two_dim_count(m: u64) -> u64 {
    if m % 2 == 0 {
        m / 2 - 1
    } else {
        (m - 1) / 2
    }
}

/// Total number of irreducible representations: `m/2 + 3` for even `m`,
/// `(m-1)/2 + 2` for odd `m`.
pub fn label_count(m: u64) -> u64 {
    two_dim_count(m) + if m % 2 == 0 { 4 } else { 2 }
}

/// All irrep labels for modulus `m`, linear characters first.
pub fn enumerate_labels(m: u64) -> Vec<DihedralIrrepLabel> {
    let mut labels = alloc::vec![DihedralIrrepLabel::Trivial, DihedralIrrepLabel::ReflectionSign];
    if m % 2 == 0 {
        labels.push(DihedralIrrepLabel::RotationSign);
        labels.push(DihedralIrrepLabel::ProductSign);
    }
    labels.extend((1..=two_dim_count(m)).map(DihedralIrrepLabel::TwoDim));
    labels
}

/// Exact character value of a dihedral irrep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralCharValue {
    Integer(i64),
    Cosine(CosineAlgebraic),
}

impl DihedralCharValue {
    /// Divisibility in the ring of algebraic integers; zero divides by
    /// everything.
    pub fn divisible_by(&self, d: u64) -> bool {
        assert!(d >= 1);
        match self {
            DihedralCharValue::Integer(0) => true,
            DihedralCharValue::Integer(v) => v.unsigned_abs() % d == 0,
            DihedralCharValue::Cosine(c) => divisible_cos(c, d),
        }
    }
}

impl core::fmt::Display for DihedralCharValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DihedralCharValue::Integer(v) => write!(f, "{v}"),
            DihedralCharValue::Cosine(c) => write!(f, "{c}"),
        }
    }
}

/// Character value of `label` at `element` for the group of the element's
/// modulus. Two-dimensional labels vanish on reflections and give
/// `2cos(2*pi*k*l/m)` on rotations; linear labels follow the sign patterns.
pub fn dihedral_char_value(
    label: &DihedralIrrepLabel,
    element: &DihedralElement,
) -> Result<DihedralCharValue> {
    let m = element.modulus();
    let l = element.exponent();
    let sign_of = |flips: bool| if flips { -1 } else { 1 };
    let value = match label {
        DihedralIrrepLabel::Trivial => DihedralCharValue::Integer(1),
        DihedralIrrepLabel::ReflectionSign => {
            DihedralCharValue::Integer(sign_of(element.is_reflection()))
        }
        DihedralIrrepLabel::RotationSign | DihedralIrrepLabel::ProductSign => {
            if m % 2 != 0 {
                return Err(Error::InvalidDihedralLabel { index: 0, modulus: m });
            }
            let mut s = sign_of(l % 2 == 1);
            if matches!(label, DihedralIrrepLabel::ProductSign) && element.is_reflection() {
                s = -s;
            }
            DihedralCharValue::Integer(s)
        }
        DihedralIrrepLabel::TwoDim(k) => {
            if *k < 1 || *k > two_dim_count(m) {
                return Err(Error::InvalidDihedralLabel { index: *k, modulus: m });
            }
            if element.is_reflection() {
                DihedralCharValue::Integer(0)
            } else {
                DihedralCharValue::Cosine(CosineAlgebraic::new(k * l, m))
            }
        }
    };
    Ok(value)
}

/// Brute-force count of two-dimensional labels whose value at `r^l` is
/// divisible by `d`: sweeps the divisibility predicate over every `k`.
pub fn count_divisible_2dim_sweep(m: u64, l: u64, d: u64) -> u64 {
    (1..=two_dim_count(m))
        .map(|k| u64::from(divisible_cos(&CosineAlgebraic::new(k * l, m), d)))
        .sum()
}

/// Closed-form count of two-dimensional labels with value at `r^l` divisible
/// by `d`, matching [`count_divisible_2dim_sweep`]:
///
/// * `d = 2`: `floor((m-2) gcd(m,4l) / 2m)` for even `m` and
///   `floor((m-1) gcd(m,4l) / 2m)` for odd `m`;
/// * `d > 2`: zero unless `v2(m) >= 2` and `v2(l) <= v2(m) - 2` (so `r^l`
///   meets a quarter turn), in which case
///   `floor(((m-2) gcd(m,4l) + 2m) / 4m)` (only even `m` can qualify).
pub fn count_divisible_2dim(m: u64, l: u64, d: u64) -> u64 {
    assert!(m >= 3 && d >= 1);
    if d == 1 {
        return two_dim_count(m);
    }
    let l = l % m;
    let g = if l == 0 { m } else { gcd_u64(m, 4 * l) };
    if d == 2 {
        let scale = if m % 2 == 0 { m - 2 } else { m - 1 };
        return scale * g / (2 * m);
    }
    let quarter_turn = v2_u64(m) >= 2 && l != 0 && v2_u64(l) + 2 <= v2_u64(m);
    if quarter_turn {
        ((m - 2) * g + 2 * m) / (4 * m)
    } else {
        0
    }
}

/// The closed-form limiting proportion of irreps with value at `g` divisible
/// by `d` along any chain of divisible moduli starting at the element's
/// group, together with which case produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitCase {
    /// Reflections: every two-dimensional value is 0.
    Reflection,
    /// Rotations with `d = 2`; the limit is `gcd(m, 4l)/m`, which is 1
    /// exactly when the element lies in the distinguished subgroup.
    RotationEven { in_subgroup: bool },
    /// Rotations with `d > 2` meeting the quarter-turn condition
    /// (`v2(m) >= 2`, `v2(l) <= v2(m)-2`); the limit is `gcd(m, 4l)/(2m)`.
    RotationQuarterTurn,
    /// Rotations with `d > 2` otherwise; the limit is 0.
    RotationNull,
}

impl core::fmt::Display for LimitCase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LimitCase::Reflection => write!(f, "reflection"),
            LimitCase::RotationEven { in_subgroup: true } => {
                write!(f, "rotation in the full-proportion subgroup")
            }
            LimitCase::RotationEven { in_subgroup: false } => write!(f, "rotation, d = 2"),
            LimitCase::RotationQuarterTurn => {
                write!(f, "rotation meeting the quarter-turn 2-adic condition")
            }
            LimitCase::RotationNull => write!(f, "rotation, no divisible values (limit 0)"),
        }
    }
}

/// Limiting proportion for `element` and divisor `d >= 2`.
pub fn dihedral_limit(element: &DihedralElement, d: u64) -> (Rational, LimitCase) {
    assert!(d >= 2);
    let m = element.modulus();
    let l = element.exponent();
    if element.is_reflection() {
        return (Rational::one(), LimitCase::Reflection);
    }
    let g = if l == 0 { m } else { gcd_u64(m, 4 * l) };
    if d == 2 {
        let limit = Rational::new(BigInt::from(g), BigInt::from(m));
        let in_subgroup = g == m;
        (limit, LimitCase::RotationEven { in_subgroup })
    } else {
        let quarter_turn = v2_u64(m) >= 2 && l != 0 && v2_u64(l) + 2 <= v2_u64(m);
        if quarter_turn {
            (Rational::new(BigInt::from(g), BigInt::from(2 * m)), LimitCase::RotationQuarterTurn)
        } else {
            (Rational::zero(), LimitCase::RotationNull)
        }
    }
}

/// The subgroup of rotations whose divisible-by-2 proportion tends to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HSubgroupKind {
    /// Odd modulus: only the identity.
    Trivial,
    /// Modulus `2 mod 4`: the centre `{e, r^(m/2)}`.
    Center,
    /// Modulus `0 mod 4`: the quarter-turn subgroup generated by `r^(m/4)`.
    QuarterRotations,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSubgroup {
    pub kind: HSubgroupKind,
    /// Rotation exponents of the members (the identity is exponent 0).
    pub exponents: Vec<u64>,
}

pub fn h_subgroup(m: u64) -> HSubgroup {
    assert!(m >= 3);
    if m % 2 == 1 {
        HSubgroup { kind: HSubgroupKind::Trivial, exponents: alloc::vec![0] }
    } else if m % 4 == 2 {
        HSubgroup { kind: HSubgroupKind::Center, exponents: alloc::vec![0, m / 2] }
    } else {
        let step = m / 4;
        HSubgroup {
            kind: HSubgroupKind::QuarterRotations,
            exponents: (0..4).map(|i| i * step).collect(),
        }
    }
}

/// One stage of a dihedral chain sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralStageRecord {
    pub modulus: u64,
    pub proportion: Proportion,
}

/// Exact proportion of irreps (linear and two-dimensional) of each stage
/// group whose value at the included element is divisible by `d`, for the
/// chain `m, m*r_1, m*r_1*r_2, ...`. Counts come from the honest predicate
/// sweep over every label; the closed-form counts cross-check it in tests.
pub fn chain_proportion_dihedral(
    element: &DihedralElement,
    ratios: &[u64],
    d: u64,
) -> Result<Vec<DihedralStageRecord>> {
    assert!(d >= 1);
    assert!(ratios.iter().all(|&r| r >= 1));
    let mut records = Vec::with_capacity(ratios.len() + 1);
    let mut modulus = element.modulus();
    for step in core::iter::once(None).chain(ratios.iter().map(Some)) {
        if let Some(&ratio) = step {
            modulus *= ratio;
        }
        let staged = element.include_into(modulus)?;
        let total = label_count(modulus);
        let count = if d == 1 {
            total
        } else {
            let linear: u64 = enumerate_labels(modulus)
                .iter()
                .filter(|label| !matches!(label, DihedralIrrepLabel::TwoDim(_)))
                .filter(|label| {
                    dihedral_char_value(label, &staged)
                        .expect("linear labels valid")
                        .divisible_by(d)
                })
                .count() as u64;
            let two_dim = if staged.is_reflection() {
                two_dim_count(modulus) // the value 0 divides by everything
            } else {
                count_divisible_2dim_sweep(modulus, staged.exponent(), d)
            };
            linear + two_dim
        };
        records.push(DihedralStageRecord {
            modulus,
            proportion: Proportion::new(count, total),
        });
    }
    Ok(records)
}
