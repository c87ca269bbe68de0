//! Engine-level tests: persistence round trips, schema rejection, cache
//! behaviour, determinism, and the closed-form cross-check for dihedral
//! chains.

use std::io::Cursor;

use num_bigint::BigInt;

use coxchar::dihedral::count_divisible_2dim;
use coxchar::Rational;
use coxchar_cli::chain::{
    convergence_report, load_records, persist_records, read_records, run_chain,
    run_chain_with_cache, write_records, Caps, ChainError, ChainSpec, ElementDesc, Family, Mode,
    StatRecord, ValuationCache, RECORD_HEADER,
};

fn i2_spec(stages: usize) -> ChainSpec {
    ChainSpec {
        family: Family::I2,
        param: 6,
        element: "r1".parse().unwrap(),
        divisor: 2,
        range: (0, 0),
        ratios: vec![2; stages],
        mode: Mode::Exact,
    }
}

fn b_spec(lo: u32, hi: u32, mode: Mode) -> ChainSpec {
    ChainSpec {
        family: Family::B,
        param: 1,
        element: "-|1".parse().unwrap(),
        divisor: 2,
        range: (lo, hi),
        ratios: vec![],
        mode,
    }
}

#[test]
fn deterministic_across_runs() {
    let caps = Caps::default();
    let a = run_chain(&i2_spec(6), &caps).unwrap();
    let b = run_chain(&i2_spec(6), &caps).unwrap();
    assert_eq!(a, b);
    let a = run_chain(&b_spec(4, 8, Mode::Exact), &caps).unwrap();
    let b = run_chain(&b_spec(4, 8, Mode::Exact), &caps).unwrap();
    assert_eq!(a, b);
}

#[test]
fn i2_records_match_closed_form_counts() {
    let records = run_chain(&i2_spec(10), &Caps::default()).unwrap();
    assert_eq!(records.len(), 11);
    for rec in &records {
        let l_n = (rec.n / 6) % rec.n;
        let expected = count_divisible_2dim(rec.n, l_n, 2);
        assert_eq!(rec.count, expected.into(), "stage {}", rec.n);
    }
    let last = records.last().unwrap();
    assert_eq!(last.n, 6144);
    assert_eq!(last.count, 1023u32.into());
    assert_eq!(last.total, 3075u32.into());
}

#[test]
fn valuation_mode_matches_direct_fraction_and_tags_records() {
    let caps = Caps::default();
    let records = run_chain(&b_spec(6, 10, Mode::Valuation), &caps).unwrap();
    for rec in &records {
        assert_eq!(rec.mode, Mode::Valuation);
        let direct = coxchar::hyperoct::valuation_fraction_bn(rec.n as u32, 1, 2, 1);
        assert_eq!(rec.count, direct.count.into());
        assert_eq!(rec.total, direct.total.into());
    }
}

#[test]
fn valuation_mode_rejects_non_prime_powers() {
    let mut spec = b_spec(6, 8, Mode::Valuation);
    spec.divisor = 6;
    match run_chain(&spec, &Caps::default()) {
        Err(ChainError::InvalidSpec(msg)) => assert!(msg.contains("prime-power")),
        other => panic!("expected invalid-spec error, got {other:?}"),
    }
}

#[test]
fn caps_name_the_limit() {
    let err = run_chain(&b_spec(4, 13, Mode::Exact), &Caps::default()).unwrap_err();
    match err {
        ChainError::Cap { what, limit, requested } => {
            assert_eq!(limit, 12);
            assert_eq!(requested, 13);
            assert!(what.contains("type-B"));
        }
        other => panic!("expected cap error, got {other}"),
    }
    let mut spec = i2_spec(10);
    spec.param = 2000;
    match run_chain(&spec, &Caps::default()).unwrap_err() {
        ChainError::Cap { what, .. } => assert!(what.contains("modulus")),
        other => panic!("expected cap error, got {other}"),
    }
}

#[test]
fn trivial_divisor_gives_proportion_one_everywhere() {
    for spec in [
        {
            let mut s = i2_spec(3);
            s.divisor = 1;
            s
        },
        {
            let mut s = b_spec(4, 6, Mode::Exact);
            s.divisor = 1;
            s
        },
    ] {
        for rec in run_chain(&spec, &Caps::default()).unwrap() {
            assert_eq!(rec.proportion, Rational::from_integer(BigInt::from(1)));
        }
    }
}

#[test]
fn persistence_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.csv");
    let records = run_chain(&i2_spec(10), &Caps::default()).unwrap();
    persist_records(&path, &records).unwrap();
    let loaded = load_records(&path).unwrap();
    assert_eq!(records, loaded);
}

#[test]
fn empty_record_list_is_a_valid_file() {
    let mut buf = Vec::new();
    write_records(&mut buf, &[]).unwrap();
    assert_eq!(String::from_utf8(buf.clone()).unwrap(), format!("{RECORD_HEADER}\n"));
    let loaded: Vec<StatRecord> = read_records(Cursor::new(buf), "<memory>").unwrap();
    assert!(loaded.is_empty());
}

#[test]
fn schema_version_mismatch_rejected() {
    let text = format!("{RECORD_HEADER}\n9,B,1,-|1,2,4,12,20,3,5,exact\n");
    match read_records(Cursor::new(text.into_bytes()), "<memory>") {
        Err(ChainError::SchemaMismatch { found }) => assert_eq!(found, "9"),
        other => panic!("expected schema mismatch, got {other:?}"),
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let text = format!("{RECORD_HEADER}\n1,B,1,-|1,2,4,12,20,3,5,exact\n1,B,1,-|1,2,4,twelve,20,3,5,exact\n");
    match read_records(Cursor::new(text.into_bytes()), "<memory>") {
        Err(ChainError::Parse { line, message, .. }) => {
            assert_eq!(line, 3);
            assert!(message.contains("twelve"));
        }
        other => panic!("expected parse error, got {other:?}"),
    }
    // A bad header is line 1.
    match read_records(Cursor::new(b"nope\n".to_vec()), "<memory>") {
        Err(ChainError::Parse { line, .. }) => assert_eq!(line, 1),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn convergence_reports() {
    let records = run_chain(&i2_spec(10), &Caps::default()).unwrap();
    let third = Rational::new(BigInt::from(1), BigInt::from(3));
    let report = convergence_report(&records, &third).unwrap();
    assert!(report.final_gap < Rational::new(BigInt::from(1), BigInt::from(500)));
    assert!(report.trend_flag);

    // A constant series sitting at the limit.
    let mut constant = records.clone();
    for r in &mut constant {
        r.proportion = third.clone();
    }
    let report = convergence_report(&constant, &third).unwrap();
    assert_eq!(report.final_gap, Rational::from_integer(BigInt::from(0)));
    assert!(report.trend_flag);

    match convergence_report(&records[..2], &third) {
        Err(ChainError::TooFewRecords { got: 2 }) => {}
        other => panic!("expected too-few-records, got {other:?}"),
    }
}

#[test]
fn valuation_cache_writes_and_reuses_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ValuationCache::new(Some(dir.path().to_path_buf()));
    let spec = b_spec(6, 8, Mode::Valuation);
    let first = run_chain_with_cache(&spec, &Caps::default(), &cache).unwrap();
    assert!(dir.path().join("vqdeg-q2-n8.csv").exists());
    let second = run_chain_with_cache(&spec, &Caps::default(), &cache).unwrap();
    assert_eq!(first, second);
}

#[test]
fn corrupted_cache_blocks_with_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("vqdeg-q2-n6.csv"), "garbage\n1,2\n").unwrap();
    let cache = ValuationCache::new(Some(dir.path().to_path_buf()));
    let spec = b_spec(6, 6, Mode::Valuation);
    match run_chain_with_cache(&spec, &Caps::default(), &cache) {
        Err(ChainError::Parse { line: 1, .. }) => {}
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn d_family_requires_strict_range_and_exact_mode() {
    let spec = ChainSpec {
        family: Family::D,
        param: 1,
        element: "-|1".parse().unwrap(),
        divisor: 2,
        range: (1, 6),
        ratios: vec![],
        mode: Mode::Exact,
    };
    assert!(matches!(run_chain(&spec, &Caps::default()), Err(ChainError::InvalidSpec(_))));
    let ok = ChainSpec { range: (2, 6), ..spec.clone() };
    let records = run_chain(&ok, &Caps::default()).unwrap();
    assert_eq!(records.len(), 5);
    // Rank-3 stage agrees with the library statistic.
    assert_eq!(records[1].count, 1u32.into());
    assert_eq!(records[1].total, 5u32.into());
    let val = ChainSpec { mode: Mode::Valuation, ..ok };
    assert!(matches!(run_chain(&val, &Caps::default()), Err(ChainError::InvalidSpec(_))));
}

#[test]
fn element_family_mismatch_rejected() {
    let spec = ChainSpec {
        family: Family::B,
        param: 1,
        element: ElementDesc::CycleType(coxchar::Partition::of(&[1])),
        divisor: 2,
        range: (2, 4),
        ratios: vec![],
        mode: Mode::Exact,
    };
    assert!(matches!(run_chain(&spec, &Caps::default()), Err(ChainError::InvalidSpec(_))));
}
