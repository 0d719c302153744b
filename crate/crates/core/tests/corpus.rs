//! Suite determinism and the on-disk cache.

use std::io::Write;
use std::time::Instant;

use cdeg::corpus::{
    cache_load, cache_store, run_suite, run_suite_cached, CacheError, CorpusCache, SuiteConfig,
};

fn config(max_genus: usize, workers: usize) -> SuiteConfig {
    SuiteConfig {
        workers,
        ..SuiteConfig::new(max_genus)
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let one = run_suite(&config(9, 1)).unwrap();
    let four = run_suite(&config(9, 4)).unwrap();
    assert_eq!(one.to_canonical_json(), four.to_canonical_json());
    assert!(one.is_clean(), "{:?}", one.failures);
}

#[test]
fn genus_eight_has_156_rings() {
    let mut cfg = config(8, 2);
    cfg.properties = vec!["cor2.5".into()];
    let rep = run_suite(&cfg).unwrap();
    assert_eq!(rep.semigroups, 156);
    assert_eq!(rep.totals.pass, 156);
}

#[test]
fn cache_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.jsonl");
    let mut cache = CorpusCache::new();
    let cold = run_suite_cached(&config(5, 2), &mut cache).unwrap();
    assert_eq!(cache.len(), cold.semigroups);
    cache_store(&path, &cache).unwrap();

    let loaded = cache_load(&path).unwrap();
    assert_eq!(loaded, cache);
    let again = dir.path().join("again.jsonl");
    cache_store(&again, &loaded).unwrap();
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(&again).unwrap()
    );

    let mut loaded = loaded;
    let warm = run_suite_cached(&config(5, 1), &mut loaded).unwrap();
    assert_eq!(warm.to_canonical_json(), cold.to_canonical_json());
}

#[test]
fn warm_cache_skips_work() {
    let mut cache = CorpusCache::new();
    let t = Instant::now();
    let cold = run_suite_cached(&config(10, 1), &mut cache).unwrap();
    let cold_time = t.elapsed();
    let t = Instant::now();
    let warm = run_suite_cached(&config(10, 1), &mut cache).unwrap();
    let warm_time = t.elapsed();
    assert_eq!(cold.to_canonical_json(), warm.to_canonical_json());
    assert!(
        warm_time * 10 <= cold_time,
        "warm {warm_time:?} vs cold {cold_time:?}"
    );
}

#[test]
fn bumped_version_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("old.jsonl");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, r#"{{"format":"cdeg-cache","version":2}}"#).unwrap();
    drop(f);
    assert!(matches!(
        cache_load(&path),
        Err(CacheError::FormatVersionMismatch {
            found: 2,
            expected: 1
        })
    ));
    assert!(matches!(
        cache_load(&dir.path().join("missing.jsonl")),
        Err(CacheError::Io(_))
    ));
}

#[test]
fn corrupt_line_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    let mut cache = CorpusCache::new();
    run_suite_cached(&config(2, 1), &mut cache).unwrap();
    cache_store(&path, &cache).unwrap();
    let mut text = std::fs::read_to_string(&path).unwrap();
    text.push_str("{not json}\n");
    std::fs::write(&path, text).unwrap();
    match cache_load(&path) {
        Err(CacheError::CorruptRecord { line, .. }) => assert_eq!(line, cache.len() + 2),
        other => panic!("expected a corrupt record, got {other:?}"),
    }
}
