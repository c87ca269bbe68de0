//! Exact integer polynomials, cyclotomic polynomials, and the minimal
//! polynomial of `2cos(2*pi/n)`.
//!
//! Cyclotomics come from the recursive exact division
//! `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d`; the `2cos` minimal
//! polynomial folds the palindromic `Phi_n` through `y = x + 1/x`. No
//! numerical root finding anywhere.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer polynomial, coefficients in ascending degree order with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    /// Exact division: `Some(q)` with `self = q * divisor` when the division
    /// leaves no remainder and stays integral, otherwise `None`.
    pub fn try_exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let d = divisor.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.degree().unwrap();
        if n < d {
            return None;
        }
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for i in (0..=n - d).rev() {
            let top = rem[i + d].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    pub fn is_divisible_by(&self, divisor: &IntPoly) -> bool {
        self.try_exact_div(divisor).is_some()
    }
}

impl core::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*y")?,
                _ => write!(f, "{c}*y^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Memoizing table of cyclotomic polynomials.
#[derive(Default)]
pub struct CyclotomicTable {
    memo: BTreeMap<u64, IntPoly>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64) -> IntPoly {
        assert!(n >= 1);
        if let Some(p) = self.memo.get(&n) {
            return p.clone();
        }
        let mut acc = IntPoly::x_pow_minus_one(n as usize);
        for d in 1..=n / 2 {
            if n % d == 0 {
                let phi_d = self.get(d);
                acc = acc.try_exact_div(&phi_d).expect("cyclotomic division is exact");
            }
        }
        self.memo.insert(n, acc.clone());
        acc
    }
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    CyclotomicTable::new().get(n)
}

/// Minimal polynomial of `2cos(2*pi/n)`, monic with integer coefficients, of
/// degree `phi(n)/2` for `n >= 3` (degree 1 for `n = 1, 2`).
///
/// For `n >= 3` the cyclotomic `Phi_n` is palindromic of even degree `2e`,
/// so `Phi_n(x) = x^e * Psi(x + 1/x)` for a unique monic integer `Psi`; the
/// fold peels leading coefficients with binomial expansions of
/// `x^e (x + 1/x)^j`.
pub fn min_poly_2cos(n: u64) -> IntPoly {
    match n {
        0 => panic!("modulus must be positive"),
        1 => return IntPoly::from_i64(&[-2, 1]), // y - 2, root 2cos(0) = 2
        2 => return IntPoly::from_i64(&[2, 1]),  // y + 2, root 2cos(pi) = -2
        _ => {}
    }
    let phi = cyclotomic_polynomial(n);
    let deg = phi.degree().unwrap();
    debug_assert!(deg % 2 == 0);
    let e = deg / 2;
    let mut rem: Vec<BigInt> = phi.coeffs().to_vec();
    let mut out = vec![BigInt::zero(); e + 1];
    for j in (0..=e).rev() {
        let b = rem[e + j].clone();
        if !b.is_zero() {
            // subtract b * x^e * (x + 1/x)^j = b * sum_i C(j,i) x^(e+j-2i)
            let mut binom = BigInt::one();
            for i in 0..=j {
                rem[e + j - 2 * i] -= &b * &binom;
                binom = &binom * BigInt::from((j - i) as u64) / BigInt::from((i + 1) as u64);
            }
        }
        out[j] = b;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "palindromic fold must terminate");
    IntPoly::new(out)
}
