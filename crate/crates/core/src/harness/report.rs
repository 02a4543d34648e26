use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Invalid(format!("unknown format {s:?} (expected text, json or csv)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Flat view of a report for the text and CSV formats.
pub trait Tabular {
    fn header() -> Vec<&'static str>;
    fn row(&self) -> Vec<String>;
}

/// Result of one randomized identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem: String,
    pub poset: String,
    pub backend: String,
    /// Base seed of the check.
    pub seed: u64,
    /// Seed actually used at each point, after resampling.
    pub seeds: Vec<u64>,
    pub points: usize,
    pub passes: usize,
    pub failures: usize,
    pub retries: usize,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    pub details: Vec<String>,
}

impl Tabular for CheckReport {
    fn header() -> Vec<&'static str> {
        vec!["theorem", "poset", "backend", "passes", "failures", "retries", "status"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.theorem.clone(),
            self.poset.clone(),
            self.backend.clone(),
            self.passes.to_string(),
            self.failures.to_string(),
            self.retries.to_string(),
            self.status.clone(),
        ]
    }
}

/// Order of a labeling map from one start point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub map: String,
    pub realm: String,
    pub poset: String,
    pub backend: String,
    /// Smallest `k` with `map^k(start) = start`; absent when not found.
    pub order: Option<usize>,
    pub exceeded: bool,
    /// Number of iterates computed.
    pub iterates: usize,
    /// Seeds tried for the start labeling, last one used.
    pub seeds: Vec<u64>,
    /// Degenerate start labelings that had to be resampled.
    pub failures: usize,
    pub retries: usize,
    /// `map^order(start) = start` was observed.
    pub returns_to_start: bool,
    /// No earlier iterate equals the start.
    pub minimal: bool,
    pub start: Vec<String>,
}

impl Tabular for OrbitReport {
    fn header() -> Vec<&'static str> {
        vec!["map", "realm", "poset", "backend", "order", "iterates", "seed", "retries"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.map.clone(),
            self.realm.clone(),
            self.poset.clone(),
            self.backend.clone(),
            self.order.map_or_else(|| "exceeded".to_string(), |k| k.to_string()),
            self.iterates.to_string(),
            self.seeds.last().map_or_else(String::new, |s| s.to_string()),
            self.retries.to_string(),
        ]
    }
}

/// Orbit structure of a combinatorial rowmotion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombOrbitReport {
    pub map: String,
    pub poset: String,
    pub states: usize,
    /// Least common multiple of the orbit sizes.
    pub order: usize,
    pub orbit_sizes: Vec<usize>,
    /// Average cardinality on each orbit, as `p/q`.
    pub averages: Vec<String>,
    /// Each orbit, as member lists of its states.
    pub orbits: Vec<Vec<Vec<String>>>,
}

impl Tabular for CombOrbitReport {
    fn header() -> Vec<&'static str> {
        vec!["map", "poset", "states", "orbits", "order", "orbit_sizes"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.map.clone(),
            self.poset.clone(),
            self.states.to_string(),
            self.orbit_sizes.len().to_string(),
            self.order.to_string(),
            self.orbit_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomesyRow {
    pub size: usize,
    pub average: String,
}

/// Orbit averages of a statistic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomesyReport {
    pub map: String,
    pub poset: String,
    pub statistic: String,
    pub orbits: Vec<HomomesyRow>,
    pub homomesic: bool,
    pub common_average: Option<String>,
}

impl Tabular for HomomesyReport {
    fn header() -> Vec<&'static str> {
        vec!["map", "poset", "statistic", "orbits", "homomesic", "average"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.map.clone(),
            self.poset.clone(),
            self.statistic.clone(),
            self.orbits.len().to_string(),
            self.homomesic.to_string(),
            self.common_average.clone().unwrap_or_else(|| "-".into()),
        ]
    }
}

/// Observed rowmotion orders on one rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub a: usize,
    pub b: usize,
    pub backend: String,
    pub seeds: Vec<u64>,
    /// Order rowmotion orders per seed, `;`-separated (`x` when exceeded).
    pub observed: String,
    /// Antichain rowmotion orders per seed.
    pub observed_antichain: String,
    pub expected: usize,
    /// `theorem` for commuting labels, `conjecture` otherwise.
    pub claim: String,
    /// `consistent`, `inconsistent`, `exceeded`, `genericity-failure` or `skipped`.
    pub status: String,
}

impl Tabular for ScanRow {
    fn header() -> Vec<&'static str> {
        vec!["a", "b", "backend", "observed", "expected", "status"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.a.to_string(),
            self.b.to_string(),
            self.backend.clone(),
            self.observed.clone(),
            self.expected.to_string(),
            self.status.clone(),
        ]
    }
}

/// Renders reports; output depends only on the reports themselves.
pub fn emit_report<T: Serialize + Tabular>(items: &[T], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(items).map_err(|e| Error::Invalid(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Invalid(e.to_string());
            w.write_record(T::header()).map_err(io)?;
            for item in items {
                w.write_record(item.row()).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
        }
        Format::Text => {
            let header: Vec<String> = T::header().into_iter().map(String::from).collect();
            let rows: Vec<Vec<String>> = items.iter().map(Tabular::row).collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            for row in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> ScanRow {
        ScanRow {
            a: 2,
            b: 3,
            backend: "matrix:2".into(),
            seeds: vec![1, 2, 3],
            observed: "5;5;5".into(),
            observed_antichain: "5;5;5".into(),
            expected: 5,
            claim: "conjecture".into(),
            status: "consistent".into(),
        }
    }

    #[test]
    fn empty_documents() {
        assert_eq!(emit_report::<ScanRow>(&[], Format::Json).unwrap().trim(), "[]");
        assert_eq!(emit_report::<ScanRow>(&[], Format::Csv).unwrap(), "a,b,backend,observed,expected,status\n");
        assert!(emit_report::<CheckReport>(&[], Format::Text).unwrap().starts_with("theorem"));
    }

    #[test]
    fn csv_scan_table() {
        let csv = emit_report(&[row()], Format::Csv).unwrap();
        assert_eq!(csv, "a,b,backend,observed,expected,status\n2,3,matrix:2,5;5;5,5,consistent\n");
    }

    #[test]
    fn json_round_trip() {
        let json = emit_report(&[row()], Format::Json).unwrap();
        let back: Vec<ScanRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![row()]);
    }
}
