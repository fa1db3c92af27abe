#![allow(dead_code)]

use std::path::PathBuf;

use popgraph::{parse_ppg, EdgeId, PaGraph, PopGraph, PpgDocument};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn load(name: &str) -> PpgDocument {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture is readable");
    parse_ppg(&text).expect("fixture parses")
}

pub fn load_pop(name: &str) -> PopGraph {
    load(name).pop().expect("fixture has an order line").clone()
}

/// Γ with the polarization and anchor read off its drawing.
pub fn gamma_pa() -> PaGraph {
    load("gamma.ppg").pa().expect("Γ fixture has PA data").clone()
}

/// Γ with its planar order 1..19.
pub fn gamma() -> PopGraph {
    load_pop("gamma_ordered.ppg")
}

pub fn ids(s: &str) -> Vec<EdgeId> {
    s.split_whitespace().map(EdgeId::from).collect()
}

pub fn one_to(n: usize) -> String {
    (1..=n).map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
}
