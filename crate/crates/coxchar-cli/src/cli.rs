//! Command definitions, dispatch and rendering.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use coxchar::demihyper;
use coxchar::dihedral::{dihedral_char_value, dihedral_limit, DihedralElement};
use coxchar::hyperoct::{class_size_bn, BnCharEvaluator, SignedCycleType};
use coxchar::partitions::{
    centralizer_size, enumerate_bipartitions, enumerate_partitions, partition_count, Partition,
};
use coxchar::symchar::SymCharEvaluator;

use crate::chain::{
    convergence_report, parse_partition_dots, persist_records, record_to_csv, record_to_json,
    run_chain_with_cache, Caps, ChainError, ChainSpec, ElementDesc, Family, Mode, StatRecord,
    ValuationCache, RECORD_HEADER,
};
use crate::verify;

#[derive(Parser)]
#[command(
    name = "coxchar",
    about = "Exact character tables and divisibility statistics for the infinite Coxeter families",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Csv,
    JsonLines,
}

#[derive(Args)]
pub struct ElementFlags {
    /// Cycle type for family A, as a dot list (e.g. `2.1`).
    #[arg(long)]
    pub cycles: Option<String>,
    /// Positive cycle lengths for families B/D (dot list, omit for none).
    #[arg(long)]
    pub pos: Option<String>,
    /// Negative cycle lengths for families B/D (dot list, omit for none).
    #[arg(long)]
    pub neg: Option<String>,
    /// Dihedral element, `rL` or `srL`.
    #[arg(long)]
    pub element: Option<String>,
}

impl ElementFlags {
    fn resolve(&self, family: Family) -> Result<ElementDesc, ChainError> {
        match family {
            Family::A => {
                let text = self.cycles.as_deref().ok_or_else(|| {
                    ChainError::InvalidSpec("family A needs --cycles".into())
                })?;
                Ok(ElementDesc::CycleType(parse_partition_dots(text)?))
            }
            Family::B | Family::D => {
                if self.cycles.is_some() || self.element.is_some() {
                    return Err(ChainError::InvalidSpec(
                        "families B/D take --pos/--neg, not --cycles/--element".into(),
                    ));
                }
                let positive = parse_comma_or_dots(self.pos.as_deref())?;
                let negative = parse_comma_or_dots(self.neg.as_deref())?;
                Ok(ElementDesc::Signed(SignedCycleType::new(positive, negative)))
            }
            Family::I2 => {
                let text = self.element.as_deref().ok_or_else(|| {
                    ChainError::InvalidSpec("family I2 needs --element rL or srL".into())
                })?;
                match text.parse()? {
                    e @ ElementDesc::Dihedral { .. } => Ok(e),
                    _ => Err(ChainError::InvalidSpec(format!(
                        "`{text}` is not a dihedral element (want rL or srL)"
                    ))),
                }
            }
        }
    }
}

/// Partitions arrive as `2,1` or `2.1` on the command line.
fn parse_comma_or_dots(text: Option<&str>) -> Result<Partition, ChainError> {
    match text {
        None => Ok(Partition::empty()),
        Some(t) => parse_partition_dots(&t.replace(',', ".")),
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Print a full character table.
    Table {
        #[arg(long)]
        family: String,
        /// Rank for families A/B/D.
        #[arg(long)]
        n: Option<u32>,
        /// Modulus for family I2.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
        /// Print even very large tables in full.
        #[arg(long)]
        full: bool,
    },
    /// List the partitions of n (reverse-lexicographic) and their count.
    Partitions {
        #[arg(long)]
        n: u32,
        /// Only print p(n).
        #[arg(long)]
        count_only: bool,
    },
    /// One divisibility proportion at a single rank (or modulus).
    Statistic {
        #[arg(long)]
        family: String,
        /// Rank for A/B/D.
        #[arg(long)]
        n: Option<u32>,
        /// Modulus for I2.
        #[arg(long)]
        m: Option<u64>,
        #[command(flatten)]
        element: ElementFlags,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
        /// Also persist the record in the results-file schema.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a chain of groups and report the proportion per stage.
    Chain {
        #[arg(long)]
        family: String,
        /// First rank (A/B/D).
        #[arg(long)]
        from: Option<u32>,
        /// Last rank (A/B/D).
        #[arg(long)]
        to: Option<u32>,
        /// Base modulus (I2).
        #[arg(long)]
        m: Option<u64>,
        /// Stage ratio (I2).
        #[arg(long, default_value_t = 2)]
        ratio: u64,
        /// Number of stages after the base (I2).
        #[arg(long, default_value_t = 0)]
        stages: u32,
        #[command(flatten)]
        element: ElementFlags,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
        /// Persist the records in the results-file schema.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare the series against a claimed limit `num/den`.
        #[arg(long)]
        limit: Option<String>,
    },
    /// Closed-form limiting proportion for a dihedral element.
    Limits {
        #[arg(long)]
        m: u64,
        /// Element, `rL` or `srL`.
        #[arg(long)]
        element: String,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Run a verification suite; exits 2 on any violation.
    Verify {
        #[arg(long)]
        suite: String,
        /// Override the suite's default size cap.
        #[arg(long)]
        cap: Option<u32>,
    },
}

pub fn run(cli: Cli) -> Result<u8, ChainError> {
    match cli.command {
        Command::Table { family, n, m, format, full } => {
            let family: Family = family.parse()?;
            let table = build_table(family, n, m)?;
            emit_table(&table, format, full);
            Ok(0)
        }
        Command::Partitions { n, count_only } => {
            if count_only {
                if n > 100_000 {
                    return Err(ChainError::Cap {
                        what: "partition counting",
                        limit: 100_000,
                        requested: u64::from(n),
                    });
                }
                println!("{}", partition_count(n));
                return Ok(0);
            }
            if n > 60 {
                return Err(ChainError::Cap {
                    what: "partition listing (use --count-only beyond)",
                    limit: 60,
                    requested: u64::from(n),
                });
            }
            let mut count = 0u64;
            for p in enumerate_partitions(n) {
                println!("{p}");
                count += 1;
            }
            println!("count: {count}");
            Ok(0)
        }
        Command::Statistic { family, n, m, element, d, mode, format, out } => {
            let family: Family = family.parse()?;
            let element = element.resolve(family)?;
            let mode: Mode = mode.parse()?;
            let spec = match family {
                Family::I2 => {
                    let m = m.ok_or_else(|| ChainError::InvalidSpec("family I2 needs --m".into()))?;
                    ChainSpec { family, param: m, element, divisor: d, range: (0, 0), ratios: vec![], mode }
                }
                _ => {
                    let n = n.ok_or_else(|| ChainError::InvalidSpec("families A/B/D need --n".into()))?;
                    let k = element.rank().expect("partition-backed element");
                    ChainSpec {
                        family,
                        param: u64::from(k),
                        element,
                        divisor: d,
                        range: (n, n),
                        ratios: vec![],
                        mode,
                    }
                }
            };
            let records = run_chain_with_cache(&spec, &Caps::default(), &ValuationCache::from_env())?;
            emit_records(&records, format);
            if let Some(path) = out {
                persist_records(&path, &records)?;
            }
            Ok(0)
        }
        Command::Chain { family, from, to, m, ratio, stages, element, d, mode, format, out, limit } => {
            let family: Family = family.parse()?;
            let element = element.resolve(family)?;
            let mode: Mode = mode.parse()?;
            let spec = match family {
                Family::I2 => {
                    let m = m.ok_or_else(|| ChainError::InvalidSpec("family I2 needs --m".into()))?;
                    ChainSpec {
                        family,
                        param: m,
                        element,
                        divisor: d,
                        range: (0, 0),
                        ratios: vec![ratio; stages as usize],
                        mode,
                    }
                }
                _ => {
                    let (from, to) = match (from, to) {
                        (Some(a), Some(b)) if a <= b => (a, b),
                        _ => {
                            return Err(ChainError::InvalidSpec(
                                "families A/B/D need --from <= --to".into(),
                            ))
                        }
                    };
                    let k = element.rank().expect("partition-backed element");
                    ChainSpec {
                        family,
                        param: u64::from(k),
                        element,
                        divisor: d,
                        range: (from, to),
                        ratios: vec![],
                        mode,
                    }
                }
            };
            let records = run_chain_with_cache(&spec, &Caps::default(), &ValuationCache::from_env())?;
            emit_records(&records, format);
            if family == Family::I2 {
                emit_i2_limit(&spec, format)?;
            }
            if let Some(text) = limit {
                let claimed = parse_rational(&text)?;
                let report = convergence_report(&records, &claimed)?;
                println!(
                    "convergence vs {claimed}: final_gap={} max_gap_after_half={} trend={}",
                    report.final_gap, report.max_gap_after_half, report.trend_flag
                );
            }
            if let Some(path) = out {
                persist_records(&path, &records)?;
            }
            Ok(0)
        }
        Command::Limits { m, element, d, format } => {
            let parsed: ElementDesc = element.parse()?;
            let ElementDesc::Dihedral { exponent, reflection } = parsed else {
                return Err(ChainError::InvalidSpec(format!(
                    "`{element}` is not a dihedral element"
                )));
            };
            let el = DihedralElement::new(m, exponent, reflection)?;
            if d < 2 {
                return Err(ChainError::InvalidSpec("limits need d >= 2".into()));
            }
            let (value, case) = dihedral_limit(&el, d);
            match format {
                OutputFormat::Human => {
                    println!("limit = {value} (case: {case})");
                }
                OutputFormat::Csv => {
                    println!("m,element,d,limit_num,limit_den,case");
                    println!("{m},{el},{d},{},{},{case}", value.numer(), value.denom());
                }
                OutputFormat::JsonLines => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "m": m,
                            "element": el.to_string(),
                            "d": d,
                            "limit_num": value.numer().to_string(),
                            "limit_den": value.denom().to_string(),
                            "case": case.to_string(),
                        })
                    );
                }
            }
            Ok(0)
        }
        Command::Verify { suite, cap } => {
            let reports = verify::run_suite(&suite, cap)?;
            let mut violations = 0u64;
            for check in &reports {
                violations += check.violations;
                println!(
                    "check: {} — cases {}, violations {}",
                    check.name, check.cases, check.violations
                );
                if let Some(example) = &check.first_failure {
                    println!("  first counterexample: {example}");
                }
            }
            if violations == 0 {
                println!("suite {suite}: OK");
                Ok(0)
            } else {
                println!("suite {suite}: FAILED ({violations} violations)");
                Ok(2)
            }
        }
    }
}

fn parse_rational(text: &str) -> Result<coxchar::Rational, ChainError> {
    let bad = || ChainError::InvalidSpec(format!("bad rational `{text}`, want num/den or an integer"));
    if let Some((n, d)) = text.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(coxchar::Rational::new(n.into(), d.into()))
    } else {
        let n: i64 = text.parse().map_err(|_| bad())?;
        Ok(coxchar::Rational::from_integer(n.into()))
    }
}

fn emit_records(records: &[StatRecord], format: OutputFormat) {
    match format {
        OutputFormat::Human => {
            for r in records {
                let approx = r.proportion.to_f64().unwrap_or(f64::NAN);
                println!(
                    "family={} param={} element={} d={} n={} count={} total={} proportion={}/{} (~{:.5}) mode={}",
                    r.family,
                    r.param,
                    r.element,
                    r.divisor,
                    r.n,
                    r.count,
                    r.total,
                    r.proportion.numer(),
                    r.proportion.denom(),
                    approx,
                    r.mode
                );
            }
        }
        OutputFormat::Csv => {
            println!("{RECORD_HEADER}");
            for r in records {
                println!("{}", record_to_csv(r));
            }
        }
        OutputFormat::JsonLines => {
            for r in records {
                println!("{}", record_to_json(r));
            }
        }
    }
}

fn emit_i2_limit(spec: &ChainSpec, format: OutputFormat) -> Result<(), ChainError> {
    let ElementDesc::Dihedral { exponent, reflection } = spec.element else {
        return Ok(());
    };
    if spec.divisor < 2 {
        return Ok(());
    }
    let el = DihedralElement::new(spec.param, exponent, reflection)?;
    let (value, case) = dihedral_limit(&el, spec.divisor);
    match format {
        OutputFormat::Human => println!("closed-form limit = {value} (case: {case})"),
        OutputFormat::Csv => println!("# closed-form limit,{},{}", value.numer(), value.denom()),
        OutputFormat::JsonLines => println!(
            "{}",
            serde_json::json!({
                "closed_form_limit_num": value.numer().to_string(),
                "closed_form_limit_den": value.denom().to_string(),
                "case": case.to_string(),
            })
        ),
    }
    Ok(())
}

struct TableData {
    classes: Vec<String>,
    sizes: Vec<String>,
    rows: Vec<(String, Vec<String>)>,
}

fn build_table(family: Family, n: Option<u32>, m: Option<u64>) -> Result<TableData, ChainError> {
    match family {
        Family::A => {
            let n = n.ok_or_else(|| ChainError::InvalidSpec("family A needs --n".into()))?;
            if n > 10 {
                return Err(ChainError::Cap { what: "type-A table rank", limit: 10, requested: n.into() });
            }
            if n == 0 {
                return Err(ChainError::InvalidSpec("rank must be at least 1".into()));
            }
            let shapes: Vec<Partition> = enumerate_partitions(n).collect();
            let fact: num_bigint::BigUint = (1..=u64::from(n)).product::<u64>().into();
            let mut ev = SymCharEvaluator::new();
            let mut rows = Vec::new();
            for lam in &shapes {
                let values = shapes
                    .iter()
                    .map(|mu| ev.eval(lam, mu).unwrap().to_string())
                    .collect();
                rows.push((lam.to_string(), values));
            }
            Ok(TableData {
                classes: shapes.iter().map(|s| s.to_string()).collect(),
                sizes: shapes.iter().map(|s| (&fact / centralizer_size(s)).to_string()).collect(),
                rows,
            })
        }
        Family::B => {
            let n = n.ok_or_else(|| ChainError::InvalidSpec("family B needs --n".into()))?;
            if n > 6 {
                return Err(ChainError::Cap { what: "type-B table rank", limit: 6, requested: n.into() });
            }
            if n == 0 {
                return Err(ChainError::InvalidSpec("rank must be at least 1".into()));
            }
            let classes: Vec<SignedCycleType> = enumerate_bipartitions(n)
                .map(|p| SignedCycleType::new(p.alpha, p.beta))
                .collect();
            let mut ev = BnCharEvaluator::new();
            let mut rows = Vec::new();
            for pair in enumerate_bipartitions(n) {
                let values = classes
                    .iter()
                    .map(|c| ev.eval(&pair, c).unwrap().to_string())
                    .collect();
                rows.push((pair.to_string(), values));
            }
            Ok(TableData {
                classes: classes.iter().map(|c| c.to_string()).collect(),
                sizes: classes.iter().map(|c| class_size_bn(n, c).unwrap().to_string()).collect(),
                rows,
            })
        }
        Family::D => {
            let n = n.ok_or_else(|| ChainError::InvalidSpec("family D needs --n".into()))?;
            if n > 6 {
                return Err(ChainError::Cap { what: "type-D table rank", limit: 6, requested: n.into() });
            }
            if n < 2 {
                return Err(ChainError::InvalidSpec("family D starts at rank 2".into()));
            }
            // Classes of the ambient group meeting the subgroup; split ones
            // (two subgroup classes of half size) are marked with `*`, where
            // the `±` labels have no defined value.
            let classes: Vec<SignedCycleType> = enumerate_bipartitions(n)
                .map(|p| SignedCycleType::new(p.alpha, p.beta))
                .filter(|t| t.base_sign() == 1)
                .collect();
            let labels = demihyper::enumerate_labels(n);
            let mut ev = BnCharEvaluator::new();
            let mut rows = Vec::new();
            for label in &labels {
                let mut values = Vec::with_capacity(classes.len());
                for class in &classes {
                    let text = match demihyper::dn_character_with(&mut ev, label, class) {
                        Ok(v) => v.to_string(),
                        Err(coxchar::Error::SplitClassValue) => "n/a".to_string(),
                        Err(e) => return Err(e.into()),
                    };
                    values.push(text);
                }
                rows.push((label.to_string(), values));
            }
            Ok(TableData {
                classes: classes
                    .iter()
                    .map(|c| {
                        if demihyper::class_splits(c) {
                            format!("{c}*")
                        } else {
                            c.to_string()
                        }
                    })
                    .collect(),
                sizes: classes.iter().map(|c| class_size_bn(n, c).unwrap().to_string()).collect(),
                rows,
            })
        }
        Family::I2 => {
            let m = m.ok_or_else(|| ChainError::InvalidSpec("family I2 needs --m".into()))?;
            if m > 200 {
                return Err(ChainError::Cap { what: "dihedral table modulus", limit: 200, requested: m });
            }
            if m < 3 {
                return Err(ChainError::InvalidSpec("modulus must be at least 3".into()));
            }
            // Conjugacy classes: e, rotation pairs, (even m) the half turn,
            // and one or two reflection classes.
            let mut classes: Vec<(String, u64, DihedralElement)> = Vec::new();
            classes.push(("e".into(), 1, DihedralElement::rotation(m, 0).unwrap()));
            let top = if m % 2 == 0 { m / 2 - 1 } else { (m - 1) / 2 };
            for l in 1..=top {
                classes.push((format!("r{l}"), 2, DihedralElement::rotation(m, l).unwrap()));
            }
            if m % 2 == 0 {
                classes.push((format!("r{}", m / 2), 1, DihedralElement::rotation(m, m / 2).unwrap()));
                classes.push(("s<r2>".into(), m / 2, DihedralElement::reflection(m, 0).unwrap()));
                classes.push(("sr<r2>".into(), m / 2, DihedralElement::reflection(m, 1).unwrap()));
            } else {
                classes.push(("s<r>".into(), m, DihedralElement::reflection(m, 0).unwrap()));
            }
            let labels = coxchar::dihedral::enumerate_labels(m);
            let mut rows = Vec::new();
            for label in &labels {
                let values = classes
                    .iter()
                    .map(|(_, _, el)| dihedral_char_value(label, el).unwrap().to_string())
                    .collect();
                rows.push((label.to_string(), values));
            }
            Ok(TableData {
                classes: classes.iter().map(|(name, _, _)| name.clone()).collect(),
                sizes: classes.iter().map(|(_, size, _)| size.to_string()).collect(),
                rows,
            })
        }
    }
}

fn emit_table(table: &TableData, format: OutputFormat, full: bool) {
    match format {
        OutputFormat::Csv => {
            println!("label,{}", table.classes.join(","));
            println!("class_size,{}", table.sizes.join(","));
            for (label, values) in &table.rows {
                println!("{label},{}", values.join(","));
            }
        }
        OutputFormat::JsonLines => {
            println!(
                "{}",
                serde_json::json!({ "classes": table.classes, "sizes": table.sizes })
            );
            for (label, values) in &table.rows {
                println!("{}", serde_json::json!({ "label": label, "values": values }));
            }
        }
        OutputFormat::Human => {
            let max_cols = 12usize;
            let max_rows = 24usize;
            let ncols = if full { table.classes.len() } else { table.classes.len().min(max_cols) };
            let nrows = if full { table.rows.len() } else { table.rows.len().min(max_rows) };
            let mut widths = vec![0usize; ncols + 1];
            widths[0] = table.rows.iter().take(nrows).map(|(l, _)| l.len()).max().unwrap_or(5).max(5);
            for j in 0..ncols {
                widths[j + 1] = table.classes[j]
                    .len()
                    .max(table.sizes[j].len())
                    .max(table.rows.iter().take(nrows).map(|(_, v)| v[j].len()).max().unwrap_or(1));
            }
            let line = |cells: Vec<String>| {
                let padded: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:>width$}", c, width = widths[i]))
                    .collect();
                println!("{}", padded.join("  "));
            };
            let mut head = vec!["class".to_string()];
            head.extend(table.classes.iter().take(ncols).cloned());
            line(head);
            let mut sizes = vec!["size".to_string()];
            sizes.extend(table.sizes.iter().take(ncols).cloned());
            line(sizes);
            for (label, values) in table.rows.iter().take(nrows) {
                let mut row = vec![label.clone()];
                row.extend(values.iter().take(ncols).cloned());
                line(row);
            }
            if !full && (table.rows.len() > nrows || table.classes.len() > ncols) {
                println!(
                    "... truncated to {nrows} of {} rows and {ncols} of {} columns (use --full)",
                    table.rows.len(),
                    table.classes.len()
                );
            }
        }
    }
}
