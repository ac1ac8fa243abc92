use std::fs;
use std::path::{Path, PathBuf};

use procesi::cache::{fiber_from_json, fiber_to_json, resolve_cache_dir, DiskCache, CACHE_ENV};
use procesi_core::macdonald::macdonald;
use procesi_core::partitions::partitions_of;
use procesi_core::verify::FiberSource;
use procesi_core::Partition;

#[test]
fn json_round_trip() {
    for n in 0..=5 {
        for lambda in partitions_of(n) {
            let f = macdonald(&lambda).unwrap();
            let back = fiber_from_json(&fiber_to_json(&f)).unwrap();
            assert_eq!(back, f, "{lambda}");
        }
    }
}

#[test]
fn disk_cache_reuses_and_repairs() {
    let dir = tempfile::tempdir().unwrap();
    let lambda: Partition = "[3,1]".parse().unwrap();
    let first = DiskCache::new(Some(dir.path().to_path_buf()), 10);
    let f = first.fiber(&lambda).unwrap();
    let path = DiskCache::path_for(dir.path(), &lambda);
    assert!(path.exists());

    let second = DiskCache::new(Some(dir.path().to_path_buf()), 10);
    assert_eq!(*second.fiber(&lambda).unwrap(), *f);

    fs::write(&path, "{ not json").unwrap();
    let third = DiskCache::new(Some(dir.path().to_path_buf()), 10);
    assert_eq!(*third.fiber(&lambda).unwrap(), *f);
    let repaired = fs::read_to_string(&path).unwrap();
    assert!(repaired.contains("\"partition\""));

    assert_eq!(
        DiskCache::path_for(dir.path(), &Partition::empty()),
        dir.path().join("fiber-empty.json")
    );
}

#[test]
fn fibers_are_bounded() {
    let cache = DiskCache::new(None, 3);
    assert!(cache.fiber(&"[2,2]".parse().unwrap()).is_err());
}

// Environment access is process-global, so every case lives in one test.
#[test]
fn cache_directory_precedence() {
    let flag = PathBuf::from("/flag");
    let out = Path::new("/reports/run.json");
    std::env::remove_var(CACHE_ENV);
    assert_eq!(resolve_cache_dir(Some(&flag), true, Some(out)), None);
    assert_eq!(
        resolve_cache_dir(None, false, Some(out)),
        Some(PathBuf::from("/reports/.procesi-cache"))
    );
    assert_eq!(
        resolve_cache_dir(None, false, None),
        Some(PathBuf::from("./.procesi-cache"))
    );
    std::env::set_var(CACHE_ENV, "/env");
    assert_eq!(
        resolve_cache_dir(None, false, Some(out)),
        Some(PathBuf::from("/env"))
    );
    assert_eq!(
        resolve_cache_dir(Some(&flag), false, Some(out)),
        Some(flag.clone())
    );
    std::env::remove_var(CACHE_ENV);
}
