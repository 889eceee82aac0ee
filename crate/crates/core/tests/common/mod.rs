#![allow(dead_code)]

use superweyl::laurent::HalfWeight;
use superweyl::rootdata::{standard_polarized, GroupSpec, PolarizedDatum};

pub const BUILDERS: &[&str] = &["gl:1,1", "gl:2,1", "gl:1,2", "gl:3,1", "gl:2,2", "q:2", "q:3", "p:2", "p:3", "p:4"];

pub fn pd(spec: &str) -> PolarizedDatum {
    standard_polarized(spec.parse().unwrap()).unwrap()
}

pub fn w(c: &[i64]) -> HalfWeight {
    HalfWeight::integral(c).unwrap()
}

/// Sorts each type A block into weakly decreasing order, which is the
/// dominance condition for the standard polarization.
pub fn make_dominant(spec: GroupSpec, mut raw: Vec<i64>) -> Vec<i64> {
    let blocks = match spec {
        GroupSpec::GeneralLinear { m, n } => vec![0..m, m..m + n],
        GroupSpec::Queer { n } | GroupSpec::Periplectic { n } => vec![0..n],
    };
    for b in blocks {
        raw[b].sort_unstable_by(|a, b| b.cmp(a));
    }
    raw
}

pub fn rank_of(spec: GroupSpec) -> usize {
    match spec {
        GroupSpec::GeneralLinear { m, n } => m + n,
        GroupSpec::Queer { n } | GroupSpec::Periplectic { n } => n,
    }
}
