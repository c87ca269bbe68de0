//! Verification suites: each runs a batch of cross-checks and reports
//! per-check case counts and violations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use coxchar::cyclotomic::{cyclotomic_polynomial, IntPoly};
use coxchar::demihyper;
use coxchar::dihedral::{
    self, count_divisible_2dim, count_divisible_2dim_sweep, dihedral_char_value, DihedralCharValue,
    DihedralElement, DivisibilityOracle,
};
use coxchar::hyperoct::{
    class_size_bn, embed_class, induced_character_oracle, lemma_certificate_with,
    BnCharEvaluator, SignedCycleType, ORACLE_CAP,
};
use coxchar::partitions::{
    centralizer_size, enumerate_bipartitions, enumerate_partitions, Partition,
};
use coxchar::symchar::SymCharEvaluator;
use coxchar::Rational;

use crate::chain::ChainError;

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub violations: u64,
    pub first_failure: Option<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), cases: 0, violations: 0, first_failure: None }
    }

    fn tally(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }
}

pub const SUITES: &[&str] = &[
    "bn-oracle",
    "orthogonality",
    "lemma-certificates",
    "dihedral-oracle",
    "floor-counts",
    "census",
];

pub fn run_suite(suite: &str, cap: Option<u32>) -> Result<Vec<CheckReport>, ChainError> {
    match suite {
        "bn-oracle" => bn_oracle(cap.unwrap_or(4)),
        "orthogonality" => Ok(orthogonality(cap)),
        "lemma-certificates" => Ok(lemma_certificates(cap.unwrap_or(5))),
        "dihedral-oracle" => Ok(dihedral_oracle(cap.unwrap_or(200))),
        "floor-counts" => Ok(floor_counts(cap.unwrap_or(400))),
        "census" => Ok(census(cap.unwrap_or(8))),
        other => Err(ChainError::InvalidSpec(format!(
            "unknown suite `{other}`; available: {}",
            SUITES.join(", ")
        ))),
    }
}

fn signed_classes(n: u32) -> Vec<SignedCycleType> {
    enumerate_bipartitions(n).map(|p| SignedCycleType::new(p.alpha, p.beta)).collect()
}

fn bn_oracle(cap: u32) -> Result<Vec<CheckReport>, ChainError> {
    if cap > ORACLE_CAP {
        return Err(ChainError::Cap {
            what: "brute-force oracle rank",
            limit: u64::from(ORACLE_CAP),
            requested: u64::from(cap),
        });
    }
    let mut check = CheckReport::new("wreath recursion equals induced-character oracle");
    let mut ev = BnCharEvaluator::new();
    for n in 1..=cap {
        for pair in enumerate_bipartitions(n) {
            for class in signed_classes(n) {
                let w = class.representative();
                let oracle = induced_character_oracle(n, &pair, &w)?;
                let mn = ev.eval(&pair, &class)?;
                check.tally(oracle == Rational::from(mn.clone()), || {
                    format!("{pair} at {class}: recursion {mn} vs oracle {oracle}")
                });
            }
        }
    }
    Ok(vec![check])
}

fn orthogonality(cap: Option<u32>) -> Vec<CheckReport> {
    let sym_cap = cap.unwrap_or(6).min(8);
    let mut sym = CheckReport::new(format!("symmetric-group row orthogonality to rank {sym_cap}").as_str());
    for n in 1..=sym_cap {
        let shapes: Vec<Partition> = enumerate_partitions(n).collect();
        let fact: BigInt = (1..=i64::from(n)).product::<i64>().into();
        let weights: Vec<BigInt> =
            shapes.iter().map(|mu| &fact / BigInt::from(centralizer_size(mu))).collect();
        let mut ev = SymCharEvaluator::new();
        for a in &shapes {
            for b in &shapes {
                let mut acc = BigInt::zero();
                for (mu, w) in shapes.iter().zip(&weights) {
                    acc += w * ev.eval(a, mu).unwrap() * ev.eval(b, mu).unwrap();
                }
                let expect = if a == b { fact.clone() } else { BigInt::zero() };
                sym.tally(acc == expect, || format!("rank {n}, rows {a} and {b}"));
            }
        }
    }

    let bn_cap = cap.unwrap_or(4).min(4);
    let mut bn = CheckReport::new(format!("hyperoctahedral column orthogonality to rank {bn_cap}").as_str());
    for n in 1..=bn_cap {
        let order = BigInt::from(2).pow(n) * BigInt::from((1..=u64::from(n)).product::<u64>());
        let classes = signed_classes(n);
        let pairs: Vec<_> = enumerate_bipartitions(n).collect();
        let mut ev = BnCharEvaluator::new();
        for c1 in &classes {
            for c2 in &classes {
                let mut acc = BigInt::zero();
                for p in &pairs {
                    acc += ev.eval(p, c1).unwrap() * ev.eval(p, c2).unwrap();
                }
                let expect = if c1 == c2 {
                    &order / BigInt::from(class_size_bn(n, c1).unwrap())
                } else {
                    BigInt::zero()
                };
                bn.tally(acc == expect, || format!("rank {n}, columns {c1} and {c2}"));
            }
        }
    }

    let m_cap = u64::from(cap.unwrap_or(30)).min(60).max(3);
    let mut dih = CheckReport::new(format!("dihedral row orthogonality to modulus {m_cap}").as_str());
    for m in 3..=m_cap {
        let labels = dihedral::enumerate_labels(m);
        let elements: Vec<DihedralElement> = (0..m)
            .map(|l| DihedralElement::rotation(m, l).unwrap())
            .chain((0..m).map(|l| DihedralElement::reflection(m, l).unwrap()))
            .collect();
        let phi = cyclotomic_polynomial(m);
        for (i, li) in labels.iter().enumerate() {
            for lj in &labels[i..] {
                let mut coef = vec![BigInt::zero(); m as usize];
                for g in &elements {
                    let a = dihedral_char_value(li, g).unwrap();
                    let b = dihedral_char_value(lj, g).unwrap();
                    accumulate_product(&mut coef, m, &a, &b);
                }
                if li == lj {
                    coef[0] -= BigInt::from(2 * m);
                }
                let leftover = IntPoly::new(coef);
                dih.tally(leftover.is_zero() || leftover.is_divisible_by(&phi), || {
                    format!("modulus {m}, rows {li} and {lj}")
                });
            }
        }
    }
    vec![sym, bn, dih]
}

/// Adds the product of two character values to a coefficient vector over
/// powers of the primitive m-th root of unity.
fn accumulate_product(coef: &mut [BigInt], m: u64, a: &DihedralCharValue, b: &DihedralCharValue) {
    let exponent =
        |c: &coxchar::dihedral::CosineAlgebraic| c.numerator() * (m / c.denominator()) % m;
    match (a, b) {
        (DihedralCharValue::Integer(x), DihedralCharValue::Integer(y)) => {
            coef[0] += BigInt::from(*x) * BigInt::from(*y);
        }
        (DihedralCharValue::Integer(x), DihedralCharValue::Cosine(c))
        | (DihedralCharValue::Cosine(c), DihedralCharValue::Integer(x)) => {
            let j = exponent(c);
            coef[j as usize] += BigInt::from(*x);
            coef[((m - j) % m) as usize] += BigInt::from(*x);
        }
        (DihedralCharValue::Cosine(c1), DihedralCharValue::Cosine(c2)) => {
            let (j1, j2) = (exponent(c1), exponent(c2));
            for j in [(j1 + j2) % m, (j1 + m - j2) % m] {
                coef[j as usize] += BigInt::one();
                coef[((m - j) % m) as usize] += BigInt::one();
            }
        }
    }
}

fn lemma_certificates(cap: u32) -> Vec<CheckReport> {
    let mut check = CheckReport::new(&format!("embedding certificates integral to rank {cap}"));
    for n in 1..=cap {
        let mut ev = BnCharEvaluator::new();
        for pair in enumerate_bipartitions(n) {
            for k in 0..=n {
                for base in signed_classes(k) {
                    let m = lemma_certificate_with(&mut ev, n, &pair, &base).unwrap();
                    check.tally(m.is_integer(), || {
                        format!("rank {n}, irrep {pair}, base {base}: certificate {m}")
                    });
                }
            }
        }
    }
    vec![check]
}

fn dihedral_oracle(cap: u32) -> Vec<CheckReport> {
    let cap = u64::from(cap);
    let mut check =
        CheckReport::new(&format!("case analysis equals minimal-polynomial test to n = {cap}"));
    let mut oracle = DivisibilityOracle::new();
    for n in 1..=cap {
        for k in 1..=n {
            let alpha = coxchar::dihedral::CosineAlgebraic::new(k, n);
            for d in 2..=12 {
                let lhs = dihedral::divisible_cos(&alpha, d);
                let rhs = oracle.divisible(k, n, d);
                check.tally(lhs == rhs, || format!("k={k} n={n} d={d}: {lhs} vs {rhs}"));
            }
        }
    }
    vec![check]
}

fn floor_counts(cap: u32) -> Vec<CheckReport> {
    let cap = u64::from(cap).max(3);
    let mut check =
        CheckReport::new(&format!("closed-form divisible counts equal sweeps to m = {cap}"));
    for m in 3..=cap {
        for l in 1..=m {
            for d in [2, 3, 5] {
                let formula = count_divisible_2dim(m, l, d);
                let sweep = count_divisible_2dim_sweep(m, l, d);
                check.tally(formula == sweep, || format!("m={m} l={l} d={d}: {formula} vs {sweep}"));
            }
        }
    }
    vec![check]
}

fn census(cap: u32) -> Vec<CheckReport> {
    let cap = cap.max(2);
    let mut counts = CheckReport::new(&format!("demi label census matches the closed count to rank {cap}"));
    for n in 1..=cap {
        let labels = demihyper::enumerate_labels(n);
        counts.tally(
            BigInt::from(labels.len()) == BigInt::from(demihyper::irr_count_dn(n)),
            || format!("rank {n}: {} labels", labels.len()),
        );
    }

    let mut dims = CheckReport::new("demi dimension squares fill the subgroup order to rank 5");
    for n in 2..=5u32 {
        let mut acc = BigInt::zero();
        for label in demihyper::enumerate_labels(n) {
            let d = BigInt::from(demihyper::dim_dn(n, &label).unwrap());
            acc += &d * &d;
        }
        let expect = BigInt::from(2).pow(n - 1) * BigInt::from((1..=u64::from(n)).product::<u64>());
        dims.tally(acc == expect, || format!("rank {n}"));
    }

    let mut embed = CheckReport::new(&format!("embedded classes never split below rank {cap}"));
    for n in 1..=cap {
        for k in 0..n {
            for base in signed_classes(k) {
                let embedded = embed_class(&base, n).unwrap();
                embed.tally(!demihyper::class_splits(&embedded), || {
                    format!("{base} into rank {n}")
                });
            }
        }
    }

    let mut i2 = CheckReport::new("dihedral label census fills 2m to modulus 500");
    for m in 3..=500u64 {
        let sum: u64 = dihedral::enumerate_labels(m)
            .iter()
            .map(|l| if matches!(l, dihedral::DihedralIrrepLabel::TwoDim(_)) { 4 } else { 1 })
            .sum();
        i2.tally(sum == 2 * m, || format!("modulus {m}: dimension mass {sum}"));
    }
    vec![counts, dims, embed, i2]
}
