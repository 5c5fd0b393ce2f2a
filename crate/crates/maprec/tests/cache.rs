use std::fs;
use std::process::Command;

use maprec::cache::{Cache, CACHE_ENV};
use maprec::core::exactnum::BigRational;
use maprec::render::RowJson;
use maprec::table::{compute_table, TableFamily};

fn json_files(dir: &std::path::Path) -> Vec<std::path::PathBuf> {
    let mut v: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn rows_are_stored_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let rows = vec![vec![2], vec![4]];
    let fresh = compute_table(TableFamily::Torus1, &rows, 4, Some(&cache)).unwrap();
    let files = json_files(dir.path());
    assert_eq!(files.len(), 2);
    assert!(files.iter().all(|p| p.extension().unwrap() == "json"));

    // tamper with one entry: a cache hit must return the stored value
    let path = cache.path(TableFamily::Torus1, 1, &[4]);
    let mut row: RowJson = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    row.coefficients[0].value = "77".into();
    fs::write(&path, serde_json::to_string(&row).unwrap()).unwrap();
    let cached = compute_table(TableFamily::Torus1, &rows, 3, Some(&cache)).unwrap();
    assert_eq!(cached.rows[0].coefficients[..], fresh.rows[0].coefficients[..4]);
    assert_eq!(cached.rows[1].coefficients[0], BigRational::from_integer(77.into()));

    // deeper requests recompute and overwrite
    let deeper = compute_table(TableFamily::Torus1, &rows, 6, Some(&cache)).unwrap();
    assert_eq!(deeper.rows[1].coefficients[..5], fresh.rows[1].coefficients[..]);
    assert_eq!(cache.load(TableFamily::Torus1, 1, &[4], 6).unwrap(), deeper.rows[1].coefficients);
}

#[test]
fn keys_separate_families_and_lengths() {
    let a = Cache::key(TableFamily::Cylinder, 0, &[2, 2]);
    assert_eq!(a, Cache::key(TableFamily::Cylinder, 0, &[2, 2]));
    assert_ne!(a, Cache::key(TableFamily::FsCylinder, 0, &[2, 2]));
    assert_ne!(a, Cache::key(TableFamily::Cylinder, 0, &[2, 4]));
    assert_eq!(a.len(), 64);
}

#[test]
fn shallow_entries_are_not_used_for_deeper_requests() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    compute_table(TableFamily::Disk, &[vec![2]], 2, Some(&cache)).unwrap();
    assert!(cache.load(TableFamily::Disk, 0, &[2], 2).is_some());
    assert!(cache.load(TableFamily::Disk, 0, &[2], 3).is_none());
    assert!(cache.load(TableFamily::FsDisk, 0, &[2], 2).is_none());
}

#[test]
fn environment_overrides_the_flag() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_maprec"))
        .args(["table", "--family", "disk", "--lengths", "2,4", "--qmax", "3", "--cache-dir"])
        .arg(flag_dir.path())
        .env(CACHE_ENV, env_dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_files(env_dir.path()).len(), 2);
    assert!(json_files(flag_dir.path()).is_empty());

    let out = Command::new(env!("CARGO_BIN_EXE_maprec"))
        .args(["table", "--family", "disk", "--lengths", "6", "--qmax", "3", "--cache-dir"])
        .arg(flag_dir.path())
        .env_remove(CACHE_ENV)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_files(flag_dir.path()).len(), 1);
}
