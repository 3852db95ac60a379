#![allow(dead_code)]

use std::path::PathBuf;

use bipolar_soft::document::read_file;
use bipolar_soft::BipolarSoftSet;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture(name: &str) -> BipolarSoftSet {
    read_file(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `us(&[1, 3])` is `["u1", "u3"]`.
pub fn us(indices: &[usize]) -> Vec<String> {
    indices.iter().map(|i| format!("u{i}")).collect()
}

pub fn pos(set: &BipolarSoftSet, param: &str) -> Vec<String> {
    set.positive_of(param).unwrap().into_iter().map(String::from).collect()
}

pub fn neg(set: &BipolarSoftSet, param: &str) -> Vec<String> {
    set.negative_of(param).unwrap().into_iter().map(String::from).collect()
}

/// Parses a printed table row such as `(1,0) (0,1) (0,0)`.
pub fn row(text: &str) -> Vec<bipolar_soft::CellValue> {
    text.split_whitespace()
        .map(|cell| bipolar_soft::CellValue::parse_bare(cell).unwrap())
        .collect()
}
