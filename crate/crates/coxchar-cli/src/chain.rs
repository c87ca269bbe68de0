//! The statistic engine: chain specifications, per-stage records, exact
//! persistence, convergence summaries, and the on-disk valuation cache.
//!
//! Records are written as plain CSV with the fixed header
//! `schema,family,param,element,d,n,count,total,proportion_num,proportion_den,mode`;
//! all numbers are exact decimal integers, so a round trip is lossless.

use std::fmt;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use coxchar::dihedral::{chain_proportion_dihedral, DihedralElement};
use coxchar::hyperoct::SignedCycleType;
use coxchar::partitions::Partition;
use coxchar::{Proportion, Rational};

pub const SCHEMA_VERSION: u32 = 1;
pub const RECORD_HEADER: &str =
    "schema,family,param,element,d,n,count,total,proportion_num,proportion_den,mode";

/// Default environment variable naming the valuation-cache directory.
pub const CACHE_ENV: &str = "COXCHAR_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    D,
    I2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::D => write!(f, "D"),
            Family::I2 => write!(f, "I2"),
        }
    }
}

impl FromStr for Family {
    type Err = ChainError;
    fn from_str(s: &str) -> Result<Self, ChainError> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            "I2" | "i2" => Ok(Family::I2),
            other => Err(ChainError::InvalidSpec(format!("unknown family `{other}`"))),
        }
    }
}

/// Element descriptor, printable and parseable.
///
/// Grammar: cycle types are dot-separated part lists (`2.1`, `-` for the
/// empty partition); signed cycle types join two of them with `|`
/// (`2.1|3`); dihedral elements are `rL` or `srL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementDesc {
    CycleType(Partition),
    Signed(SignedCycleType),
    Dihedral { exponent: u64, reflection: bool },
}

impl ElementDesc {
    /// Base rank consumed by the element (partition size); dihedral elements
    /// have no rank.
    pub fn rank(&self) -> Option<u32> {
        match self {
            ElementDesc::CycleType(p) => Some(p.size()),
            ElementDesc::Signed(t) => Some(t.size()),
            ElementDesc::Dihedral { .. } => None,
        }
    }
}

impl fmt::Display for ElementDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementDesc::CycleType(p) => write!(f, "{p}"),
            ElementDesc::Signed(t) => write!(f, "{t}"),
            ElementDesc::Dihedral { exponent, reflection: false } => write!(f, "r{exponent}"),
            ElementDesc::Dihedral { exponent, reflection: true } => write!(f, "sr{exponent}"),
        }
    }
}

pub fn parse_partition_dots(s: &str) -> Result<Partition, ChainError> {
    if s == "-" || s.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in s.split('.') {
        let part: u32 = piece
            .parse()
            .map_err(|_| ChainError::InvalidSpec(format!("bad partition part `{piece}`")))?;
        parts.push(part);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).map_err(|e| ChainError::InvalidSpec(e.to_string()))
}

impl FromStr for ElementDesc {
    type Err = ChainError;
    fn from_str(s: &str) -> Result<Self, ChainError> {
        if let Some((pos, neg)) = s.split_once('|') {
            let positive = parse_partition_dots(pos)?;
            let negative = parse_partition_dots(neg)?;
            return Ok(ElementDesc::Signed(SignedCycleType::new(positive, negative)));
        }
        if let Some(rest) = s.strip_prefix("sr") {
            let exponent = rest
                .parse()
                .map_err(|_| ChainError::InvalidSpec(format!("bad reflection `{s}`")))?;
            return Ok(ElementDesc::Dihedral { exponent, reflection: true });
        }
        if let Some(rest) = s.strip_prefix('r') {
            if let Ok(exponent) = rest.parse() {
                return Ok(ElementDesc::Dihedral { exponent, reflection: false });
            }
        }
        Ok(ElementDesc::CycleType(parse_partition_dots(s)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Full character sweep; exact divisibility proportion.
    Exact,
    /// Sufficient-condition fraction from degree valuations: a lower bound
    /// for the exact proportion, usable at much larger rank.
    Valuation,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Valuation => write!(f, "valuation"),
        }
    }
}

impl FromStr for Mode {
    type Err = ChainError;
    fn from_str(s: &str) -> Result<Self, ChainError> {
        match s {
            "exact" => Ok(Mode::Exact),
            "valuation" => Ok(Mode::Valuation),
            other => Err(ChainError::InvalidSpec(format!("unknown mode `{other}`"))),
        }
    }
}

/// A chain sweep request.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub family: Family,
    /// Base rank `k` for A/B/D, base modulus `m` for I2.
    pub param: u64,
    pub element: ElementDesc,
    pub divisor: u64,
    /// Inclusive rank range for A/B/D; ignored for I2.
    pub range: (u32, u32),
    /// Stage ratios for I2; ignored elsewhere.
    pub ratios: Vec<u64>,
    pub mode: Mode,
}

/// Resource caps; configuration, not constants.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub a_exact: u32,
    pub a_valuation: u32,
    pub b_exact: u32,
    pub b_valuation: u32,
    pub d_exact: u32,
    pub i2_modulus: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            a_exact: 14,
            a_valuation: 60,
            b_exact: 12,
            b_valuation: 50,
            d_exact: 12,
            i2_modulus: 1_000_000,
        }
    }
}

/// One stage of a sweep; equality ignores the wall time.
#[derive(Clone, Debug)]
pub struct StatRecord {
    pub family: Family,
    pub param: u64,
    pub element: String,
    pub divisor: u64,
    pub n: u64,
    pub count: BigUint,
    pub total: BigUint,
    pub proportion: Rational,
    pub mode: Mode,
    pub wall_time: Duration,
}

impl PartialEq for StatRecord {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.param == other.param
            && self.element == other.element
            && self.divisor == other.divisor
            && self.n == other.n
            && self.count == other.count
            && self.total == other.total
            && self.proportion == other.proportion
            && self.mode == other.mode
    }
}

impl Eq for StatRecord {}

#[derive(Debug)]
pub enum ChainError {
    Cap { what: &'static str, limit: u64, requested: u64 },
    InvalidSpec(String),
    Parse { path: String, line: usize, message: String },
    SchemaMismatch { found: String },
    TooFewRecords { got: usize },
    Io(std::io::Error),
    Core(coxchar::Error),
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::Cap { what, limit, requested } => {
                write!(f, "cap exceeded: {what} is limited to {limit}, requested {requested}")
            }
            ChainError::InvalidSpec(msg) => write!(f, "invalid specification: {msg}"),
            ChainError::Parse { path, line, message } => {
                write!(f, "parse error in {path} at line {line}: {message}")
            }
            ChainError::SchemaMismatch { found } => {
                write!(f, "schema-version mismatch: expected {SCHEMA_VERSION}, found {found}")
            }
            ChainError::TooFewRecords { got } => {
                write!(f, "convergence report needs at least 3 records, got {got}")
            }
            ChainError::Io(e) => write!(f, "io error: {e}"),
            ChainError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ChainError {}

impl From<std::io::Error> for ChainError {
    fn from(e: std::io::Error) -> Self {
        ChainError::Io(e)
    }
}

impl From<coxchar::Error> for ChainError {
    fn from(e: coxchar::Error) -> Self {
        ChainError::Core(e)
    }
}

/// On-disk cache of degree-valuation histograms keyed by `(n, q)`.
///
/// File format: header `coxchar-vqdeg,<schema>,<q>,<n>` then `v,count`
/// lines. Corrupt files surface as parse errors with line numbers.
pub struct ValuationCache {
    dir: Option<PathBuf>,
}

impl ValuationCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        ValuationCache { dir }
    }

    /// Reads the directory from `COXCHAR_CACHE_DIR` if set.
    pub fn from_env() -> Self {
        ValuationCache { dir: std::env::var_os(CACHE_ENV).map(PathBuf::from) }
    }

    pub fn histogram(&self, n: u32, q: u32) -> Result<Vec<u64>, ChainError> {
        let Some(dir) = &self.dir else {
            return Ok(coxchar::valuations::vq_degree_histogram(n, q));
        };
        let path = dir.join(format!("vqdeg-q{q}-n{n}.csv"));
        if path.exists() {
            return read_histogram(&path, n, q);
        }
        let hist = coxchar::valuations::vq_degree_histogram(n, q);
        fs::create_dir_all(dir)?;
        let mut out = String::new();
        out.push_str(&format!("coxchar-vqdeg,{SCHEMA_VERSION},{q},{n}\n"));
        for (v, count) in hist.iter().enumerate() {
            out.push_str(&format!("{v},{count}\n"));
        }
        fs::write(&path, out)?;
        Ok(hist)
    }
}

fn read_histogram(path: &Path, n: u32, q: u32) -> Result<Vec<u64>, ChainError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| ChainError::Parse {
        path: shown.clone(),
        line: 1,
        message: "empty cache file".into(),
    })?;
    let fields: Vec<&str> = header.split(',').collect();
    if fields.len() != 4 || fields[0] != "coxchar-vqdeg" {
        return Err(ChainError::Parse {
            path: shown,
            line: 1,
            message: "bad cache header".into(),
        });
    }
    if fields[1] != SCHEMA_VERSION.to_string() {
        return Err(ChainError::SchemaMismatch { found: fields[1].to_string() });
    }
    if fields[2] != q.to_string() || fields[3] != n.to_string() {
        return Err(ChainError::Parse {
            path: shown,
            line: 1,
            message: format!("cache file is for q={} n={}, wanted q={q} n={n}", fields[2], fields[3]),
        });
    }
    let mut hist = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let (v, count) = line.split_once(',').ok_or_else(|| ChainError::Parse {
            path: shown.clone(),
            line: idx + 1,
            message: "expected `v,count`".into(),
        })?;
        let v: usize = v.parse().map_err(|_| ChainError::Parse {
            path: shown.clone(),
            line: idx + 1,
            message: format!("bad valuation `{v}`"),
        })?;
        let count: u64 = count.parse().map_err(|_| ChainError::Parse {
            path: shown.clone(),
            line: idx + 1,
            message: format!("bad count `{count}`"),
        })?;
        if v != hist.len() {
            return Err(ChainError::Parse {
                path: shown.clone(),
                line: idx + 1,
                message: format!("expected valuation {}, found {v}", hist.len()),
            });
        }
        hist.push(count);
    }
    Ok(hist)
}

/// `d = q^r` with `q` prime and `r >= 1`, if `d` is a prime power.
pub fn prime_power(d: u64) -> Option<(u32, u64)> {
    if d < 2 {
        return None;
    }
    let mut q = 0u64;
    for p in 2u64.. {
        if p * p > d {
            q = d; // d itself is prime
            break;
        }
        if d % p == 0 {
            q = p;
            break;
        }
    }
    let mut rest = d;
    let mut r = 0u64;
    while rest % q == 0 {
        rest /= q;
        r += 1;
    }
    (rest == 1).then_some((q as u32, r))
}

fn record(
    spec: &ChainSpec,
    n: u64,
    proportion: Proportion,
    mode: Mode,
    wall_time: Duration,
) -> StatRecord {
    StatRecord {
        family: spec.family,
        param: spec.param,
        element: spec.element.to_string(),
        divisor: spec.divisor,
        n,
        count: BigUint::from(proportion.count),
        total: BigUint::from(proportion.total),
        proportion: proportion.ratio(),
        mode,
        wall_time,
    }
}

/// Runs a chain sweep: one exact record per stage, later stages reusing the
/// evaluator caches of earlier ones. Identical specs give identical records
/// whatever the thread count; the underlying reductions are sums of exact
/// integers.
pub fn run_chain(spec: &ChainSpec, caps: &Caps) -> Result<Vec<StatRecord>, ChainError> {
    run_chain_with_cache(spec, caps, &ValuationCache::new(None))
}

pub fn run_chain_with_cache(
    spec: &ChainSpec,
    caps: &Caps,
    cache: &ValuationCache,
) -> Result<Vec<StatRecord>, ChainError> {
    if spec.divisor < 1 {
        return Err(ChainError::InvalidSpec("divisor must be at least 1".into()));
    }
    match (&spec.family, &spec.element) {
        (Family::A, ElementDesc::CycleType(_)) => {}
        (Family::B | Family::D, ElementDesc::Signed(_)) => {}
        (Family::I2, ElementDesc::Dihedral { .. }) => {}
        (family, element) => {
            return Err(ChainError::InvalidSpec(format!(
                "element `{element}` does not describe a family-{family} base element"
            )));
        }
    }
    if let Some(k) = spec.element.rank() {
        if u64::from(k) != spec.param {
            return Err(ChainError::InvalidSpec(format!(
                "base parameter {} disagrees with element rank {k}",
                spec.param
            )));
        }
    }

    match spec.family {
        Family::I2 => run_i2(spec, caps),
        Family::A => run_a(spec, caps, cache),
        Family::B => run_b(spec, caps, cache),
        Family::D => run_d(spec, caps),
    }
}

fn run_i2(spec: &ChainSpec, caps: &Caps) -> Result<Vec<StatRecord>, ChainError> {
    let ElementDesc::Dihedral { exponent, reflection } = &spec.element else { unreachable!() };
    let (exponent, reflection) = (*exponent, *reflection);
    if spec.ratios.iter().any(|&r| r < 1) {
        return Err(ChainError::InvalidSpec("stage ratios must be at least 1".into()));
    }
    let mut modulus = spec.param;
    for &ratio in &spec.ratios {
        modulus = modulus.checked_mul(ratio).ok_or(ChainError::Cap {
            what: "dihedral modulus",
            limit: caps.i2_modulus,
            requested: u64::MAX,
        })?;
    }
    if modulus > caps.i2_modulus {
        return Err(ChainError::Cap {
            what: "dihedral modulus",
            limit: caps.i2_modulus,
            requested: modulus,
        });
    }
    let element = DihedralElement::new(spec.param, exponent, reflection)?;
    let started = Instant::now();
    let stages = chain_proportion_dihedral(&element, &spec.ratios, spec.divisor)?;
    let mut out = Vec::with_capacity(stages.len());
    let mut prev = Duration::ZERO;
    for stage in stages {
        let now = started.elapsed();
        out.push(record(spec, stage.modulus, stage.proportion, Mode::Exact, now - prev));
        prev = now;
    }
    Ok(out)
}

fn valuation_params(spec: &ChainSpec) -> Result<(u32, u64), ChainError> {
    prime_power(spec.divisor).ok_or_else(|| {
        ChainError::InvalidSpec(format!(
            "valuation mode needs a prime-power divisor, got {}",
            spec.divisor
        ))
    })
}

fn check_cap(what: &'static str, hi: u32, cap: u32) -> Result<(), ChainError> {
    if hi > cap {
        return Err(ChainError::Cap { what, limit: u64::from(cap), requested: u64::from(hi) });
    }
    Ok(())
}

fn run_a(spec: &ChainSpec, caps: &Caps, cache: &ValuationCache) -> Result<Vec<StatRecord>, ChainError> {
    let ElementDesc::CycleType(g) = &spec.element else { unreachable!() };
    let (lo, hi) = spec.range;
    let k = g.size();
    if lo < k.max(1) {
        return Err(ChainError::InvalidSpec(format!("range must start at or above k = {k}")));
    }
    let mut out = Vec::new();
    match spec.mode {
        Mode::Exact => {
            check_cap("type-A exact-character rank", hi, caps.a_exact)?;
            let mut ev = coxchar::symchar::SymCharEvaluator::new();
            for n in lo..=hi {
                let started = Instant::now();
                let p = coxchar::symchar::sym_statistic_with(&mut ev, n, k, g, spec.divisor)?;
                out.push(record(spec, u64::from(n), p, Mode::Exact, started.elapsed()));
            }
        }
        Mode::Valuation => {
            check_cap("type-A valuation rank", hi, caps.a_valuation)?;
            let (q, r) = valuation_params(spec)?;
            for n in lo..=hi {
                let started = Instant::now();
                let hist = cache.histogram(n, q)?;
                let p = coxchar::symchar::valuation_fraction_sym_from_histogram(n, k, q, r, &hist);
                out.push(record(spec, u64::from(n), p, Mode::Valuation, started.elapsed()));
            }
        }
    }
    Ok(out)
}

fn run_b(spec: &ChainSpec, caps: &Caps, cache: &ValuationCache) -> Result<Vec<StatRecord>, ChainError> {
    let ElementDesc::Signed(base) = &spec.element else { unreachable!() };
    let (lo, hi) = spec.range;
    let k = base.size();
    if lo < k.max(1) {
        return Err(ChainError::InvalidSpec(format!("range must start at or above k = {k}")));
    }
    let mut out = Vec::new();
    match spec.mode {
        Mode::Exact => {
            check_cap("type-B exact-character rank", hi, caps.b_exact)?;
            let mut ev = coxchar::hyperoct::BnCharEvaluator::new();
            for n in lo..=hi {
                let started = Instant::now();
                let p =
                    coxchar::hyperoct::bn_statistic_with(&mut ev, n, k, base, spec.divisor)?;
                out.push(record(spec, u64::from(n), p, Mode::Exact, started.elapsed()));
            }
        }
        Mode::Valuation => {
            check_cap("type-B valuation rank", hi, caps.b_valuation)?;
            let (q, r) = valuation_params(spec)?;
            // Histogram blocks accumulate across stages; with a cache
            // directory set they also persist across runs.
            let mut hists: Vec<Vec<u64>> = Vec::new();
            for n in lo..=hi {
                let started = Instant::now();
                while hists.len() <= n as usize {
                    hists.push(cache.histogram(hists.len() as u32, q)?);
                }
                let p = coxchar::hyperoct::valuation_fraction_bn_from_histograms(
                    n,
                    k,
                    q,
                    r,
                    &hists[..=n as usize],
                );
                out.push(record(spec, u64::from(n), p, Mode::Valuation, started.elapsed()));
            }
        }
    }
    Ok(out)
}

fn run_d(spec: &ChainSpec, caps: &Caps) -> Result<Vec<StatRecord>, ChainError> {
    let ElementDesc::Signed(base) = &spec.element else { unreachable!() };
    if spec.mode == Mode::Valuation {
        return Err(ChainError::InvalidSpec(
            "valuation mode is implemented for families A and B only".into(),
        ));
    }
    let (lo, hi) = spec.range;
    let k = base.size();
    if lo <= k {
        return Err(ChainError::InvalidSpec(format!(
            "family D needs ranks strictly above k = {k} (embedded classes must not split)"
        )));
    }
    check_cap("type-D exact-character rank", hi, caps.d_exact)?;
    let mut out = Vec::new();
    let mut ev = coxchar::hyperoct::BnCharEvaluator::new();
    for n in lo..=hi {
        let started = Instant::now();
        let p = coxchar::demihyper::dn_statistic_with(&mut ev, n, k, base, spec.divisor)?;
        out.push(record(spec, u64::from(n), p, Mode::Exact, started.elapsed()));
    }
    Ok(out)
}

/// Convergence summary of a record series against a claimed limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub final_gap: Rational,
    pub max_gap_after_half: Rational,
    /// Gaps over the last half of the series are weakly decreasing.
    pub trend_flag: bool,
}

pub fn convergence_report(
    records: &[StatRecord],
    claimed_limit: &Rational,
) -> Result<ConvergenceReport, ChainError> {
    if records.len() < 3 {
        return Err(ChainError::TooFewRecords { got: records.len() });
    }
    let gaps: Vec<Rational> =
        records.iter().map(|r| (r.proportion.clone() - claimed_limit).abs()).collect();
    let half = gaps.len() / 2;
    let tail = &gaps[half..];
    let trend_flag = tail.windows(2).all(|w| w[1] <= w[0]);
    Ok(ConvergenceReport {
        final_gap: gaps.last().expect("nonempty").clone(),
        max_gap_after_half: tail.iter().max().expect("nonempty tail").clone(),
        trend_flag,
    })
}

/// Writes records in the stable CSV schema (header always present).
pub fn write_records<W: Write>(mut w: W, records: &[StatRecord]) -> Result<(), ChainError> {
    writeln!(w, "{RECORD_HEADER}")?;
    for r in records {
        writeln!(w, "{}", record_to_csv(r))?;
    }
    Ok(())
}

pub fn record_to_csv(r: &StatRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        SCHEMA_VERSION,
        r.family,
        r.param,
        r.element,
        r.divisor,
        r.n,
        r.count,
        r.total,
        r.proportion.numer(),
        r.proportion.denom(),
        r.mode
    )
}

/// One record per line as JSON, mirroring the CSV fields exactly (big
/// integers as decimal strings).
pub fn record_to_json(r: &StatRecord) -> serde_json::Value {
    serde_json::json!({
        "schema": SCHEMA_VERSION,
        "family": r.family.to_string(),
        "param": r.param,
        "element": r.element,
        "d": r.divisor,
        "n": r.n,
        "count": r.count.to_string(),
        "total": r.total.to_string(),
        "proportion_num": r.proportion.numer().to_string(),
        "proportion_den": r.proportion.denom().to_string(),
        "mode": r.mode.to_string(),
    })
}

pub fn persist_records(path: &Path, records: &[StatRecord]) -> Result<(), ChainError> {
    let mut buf = Vec::new();
    write_records(&mut buf, records)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Reads records back; parse errors carry the 1-based line number.
pub fn read_records<R: BufRead>(reader: R, shown_path: &str) -> Result<Vec<StatRecord>, ChainError> {
    let fail = |line: usize, message: String| ChainError::Parse {
        path: shown_path.to_string(),
        line,
        message,
    };
    let mut records = Vec::new();
    let mut saw_header = false;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if lineno == 1 {
            if line != RECORD_HEADER {
                return Err(fail(1, format!("bad header `{line}`")));
            }
            saw_header = true;
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(fail(lineno, format!("expected 11 fields, found {}", fields.len())));
        }
        if fields[0] != SCHEMA_VERSION.to_string() {
            return Err(ChainError::SchemaMismatch { found: fields[0].to_string() });
        }
        let family: Family =
            fields[1].parse().map_err(|e: ChainError| fail(lineno, e.to_string()))?;
        let param: u64 =
            fields[2].parse().map_err(|_| fail(lineno, format!("bad param `{}`", fields[2])))?;
        // Validate the element grammar even though records keep the text.
        let element: ElementDesc =
            fields[3].parse().map_err(|e: ChainError| fail(lineno, e.to_string()))?;
        let divisor: u64 =
            fields[4].parse().map_err(|_| fail(lineno, format!("bad divisor `{}`", fields[4])))?;
        let n: u64 =
            fields[5].parse().map_err(|_| fail(lineno, format!("bad stage `{}`", fields[5])))?;
        let count = BigUint::from_str(fields[6])
            .map_err(|_| fail(lineno, format!("bad count `{}`", fields[6])))?;
        let total = BigUint::from_str(fields[7])
            .map_err(|_| fail(lineno, format!("bad total `{}`", fields[7])))?;
        let numer = BigInt::from_str(fields[8])
            .map_err(|_| fail(lineno, format!("bad numerator `{}`", fields[8])))?;
        let denom = BigInt::from_str(fields[9])
            .map_err(|_| fail(lineno, format!("bad denominator `{}`", fields[9])))?;
        if denom.is_zero() {
            return Err(fail(lineno, "zero denominator".into()));
        }
        let mode: Mode = fields[10].parse().map_err(|e: ChainError| fail(lineno, e.to_string()))?;
        records.push(StatRecord {
            family,
            param,
            element: element.to_string(),
            divisor,
            n,
            count,
            total,
            proportion: Rational::new(numer, denom),
            mode,
            wall_time: Duration::ZERO,
        });
    }
    if !saw_header {
        return Err(fail(1, "empty file (missing header)".into()));
    }
    Ok(records)
}

pub fn load_records(path: &Path) -> Result<Vec<StatRecord>, ChainError> {
    let file = fs::File::open(path)?;
    read_records(std::io::BufReader::new(file), &path.display().to_string())
}
