//! Randomized verification of map identities, orbit measurements and
//! report output.
//!
//! Each registered identity is checked by evaluating both sides at random
//! generic labelings and comparing them exactly. A point where some
//! intermediate value fails to be invertible is resampled with a fresh
//! derived seed; a point that stays degenerate is a genericity failure.

mod checks;
mod report;
mod scan;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{AlgebraBackend, BackendSpec, MatrixRing, RationalField, TropicalSemiring};
use crate::error::{Error, Result};
use crate::poset::Poset;

pub use report::{emit_report, CheckReport, CombOrbitReport, Format, HomomesyReport, OrbitReport, ScanRow, Tabular};
pub use scan::{comb_orbit_report, homomesy_report, orbit_report, scan_conjecture, CombMap, OrbitRequest, SCAN_MAX_ELEMENTS};

/// Environment variable holding the default base seed.
pub const SEED_ENV: &str = "ROWMOTION_SEED";
pub const DEFAULT_SEED: u64 = 2024;
pub const DEFAULT_RETRIES: usize = 5;

/// Base seed from [`SEED_ENV`] when set and numeric.
pub fn default_seed() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// Mixes a base seed with a point index and a retry index.
pub fn derive_seed(base: u64, point: usize, retry: usize) -> u64 {
    let mut z = base;
    for word in [point as u64, retry as u64] {
        z = splitmix64(z ^ splitmix64(word.wrapping_add(0x9E37_79B9_7F4A_7C15)));
    }
    z
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The registered identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Antichain rowmotion equals `∇ ∘ Θ ∘ Δ⁻¹`.
    BarTransfer,
    /// Order rowmotion equals `Θ ∘ Δ⁻¹ ∘ ∇`.
    NorTransfer,
    /// Order rowmotion equals `∇⁻¹ ∘ (antichain rowmotion) ∘ ∇`.
    NarTransfer,
    /// `Θ∆⁻¹ ∘ T_v* = T_v ∘ Θ∆⁻¹` for every `v`.
    TStar,
    /// `Θ∆⁻¹ ∘ τ_v = τ_v* ∘ Θ∆⁻¹` for every `v`.
    TauStar,
    /// [`Theorem::TStar`] together with its elggot version.
    TStarNc,
    /// [`Theorem::TauStar`], its elggot version, and the conjugation
    /// formula for products over an antichain.
    TauStarNc,
    /// `Θ∆⁻¹ ∘ BAG = BOG ∘ Θ∆⁻¹`.
    Gyration,
    /// Rank antichain toggles against graded rescaling.
    RescaleRank,
    /// Antichain rowmotion against graded rescaling.
    RescaleBar,
    /// Closed forms of the antichain toggle and elggot at their own element.
    MeteorGorge,
    /// `(x1 ∥ ⋯ ∥ xk)(x1⁻¹ + ⋯ + xk⁻¹) = 1` in both orders.
    Reciprocity,
    /// Toggles are inverted by elggots (and are involutions when labels commute).
    Involution,
    /// Toggles at unrelated elements commute; related ones do not.
    Commutation,
    /// Rowmotion and `η_v` do not depend on the linear extension used.
    ExtensionIndependence,
}

impl Theorem {
    pub const ALL: [Theorem; 15] = [
        Theorem::BarTransfer,
        Theorem::NorTransfer,
        Theorem::NarTransfer,
        Theorem::TStar,
        Theorem::TauStar,
        Theorem::TStarNc,
        Theorem::TauStarNc,
        Theorem::Gyration,
        Theorem::RescaleRank,
        Theorem::RescaleBar,
        Theorem::MeteorGorge,
        Theorem::Reciprocity,
        Theorem::Involution,
        Theorem::Commutation,
        Theorem::ExtensionIndependence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::BarTransfer => "bar-transfer",
            Theorem::NorTransfer => "nor-transfer",
            Theorem::NarTransfer => "nar-transfer",
            Theorem::TStar => "t-star",
            Theorem::TauStar => "tau-star",
            Theorem::TStarNc => "t-star-nc",
            Theorem::TauStarNc => "tau-star-nc",
            Theorem::Gyration => "gyration",
            Theorem::RescaleRank => "rescale-rank",
            Theorem::RescaleBar => "rescale-bar",
            Theorem::MeteorGorge => "meteor-gorge",
            Theorem::Reciprocity => "reciprocity",
            Theorem::Involution => "involution",
            Theorem::Commutation => "commutation",
            Theorem::ExtensionIndependence => "extension-independence",
        }
    }

    pub fn needs_grading(self) -> bool {
        matches!(self, Theorem::Gyration | Theorem::RescaleRank | Theorem::RescaleBar)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// One randomized identity check.
#[derive(Debug, Clone)]
pub struct CheckSpec {
    pub theorem: Theorem,
    /// Display name of the poset (builder string, file name, ...).
    pub poset_label: String,
    pub poset: Poset,
    pub backend: BackendSpec,
    pub points: usize,
    pub seed: u64,
    pub max_retries: usize,
    /// Fixed central constant; sampled per point when absent.
    pub const_c: Option<BigRational>,
}

impl CheckSpec {
    pub fn new(theorem: Theorem, poset_label: impl Into<String>, poset: Poset, backend: BackendSpec) -> Self {
        CheckSpec {
            theorem,
            poset_label: poset_label.into(),
            poset,
            backend,
            points: 20,
            seed: DEFAULT_SEED,
            max_retries: DEFAULT_RETRIES,
            const_c: None,
        }
    }

    pub fn points(mut self, points: usize) -> Self {
        self.points = points;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn const_c(mut self, c: Option<BigRational>) -> Self {
        self.const_c = c;
        self
    }
}

/// Outcome at one point: `None` on agreement, a description otherwise.
type PointResult = Result<Option<String>>;

pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    if spec.points == 0 {
        return Err(Error::Invalid("a check needs at least one point".into()));
    }
    let mut report = CheckReport {
        theorem: spec.theorem.id().to_string(),
        poset: spec.poset_label.clone(),
        backend: spec.backend.to_string(),
        seed: spec.seed,
        seeds: Vec::new(),
        points: spec.points,
        passes: 0,
        failures: 0,
        retries: 0,
        status: String::new(),
        details: Vec::new(),
    };
    if spec.theorem.needs_grading() && !spec.poset.is_graded() {
        report.status = "skipped".into();
        report.details.push("poset is not graded".into());
        return Ok(report);
    }
    // Fail early and clearly when the chain budget is blown.
    spec.poset.chain_index()?;

    let outcomes: Vec<Result<(u64, usize, Option<String>)>> = (0..spec.points)
        .into_par_iter()
        .map(|point| match &spec.backend {
            BackendSpec::Rational => run_point(spec, RationalField::default(), point),
            BackendSpec::Matrix(d) => run_point(spec, MatrixRing::new(*d), point),
            BackendSpec::Tropical => run_point(spec, TropicalSemiring::default(), point),
        })
        .collect();

    for outcome in outcomes {
        let (seed, retries, failure) = outcome?;
        report.seeds.push(seed);
        report.retries += retries;
        match failure {
            None => report.passes += 1,
            Some(detail) => {
                report.failures += 1;
                report.details.push(format!("seed {seed}: {detail}"));
            }
        }
    }
    report.status = if report.failures == 0 { "pass" } else { "fail" }.into();
    Ok(report)
}

fn run_point<B: AlgebraBackend>(spec: &CheckSpec, base: B, point: usize) -> Result<(u64, usize, Option<String>)> {
    for retry in 0..=spec.max_retries {
        let seed = derive_seed(spec.seed, point, retry);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = match &spec.const_c {
            Some(c) => c.clone(),
            None => {
                let b = RationalField::default();
                b.sample(&mut rng)
            }
        };
        let backend = base.with_constant(c);
        match checks::check_point(spec.theorem, &spec.poset, &backend, &mut rng) {
            Ok(result) => return Ok((seed, retry, result)),
            Err(Error::NotInvertible(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure { theorem: spec.theorem.id().to_string(), point, retries: spec.max_retries })
}

/// Runs several checks concurrently; reports come back sorted by
/// theorem, poset, backend and seed.
///
/// A check that hits a genericity failure is reported with status
/// `genericity-failure` instead of aborting the batch.
pub fn run_checks(specs: &[CheckSpec]) -> Result<Vec<CheckReport>> {
    let mut reports = specs
        .par_iter()
        .map(|spec| match run_check(spec) {
            Err(e @ Error::GenericityFailure { .. }) => Ok(CheckReport {
                theorem: spec.theorem.id().to_string(),
                poset: spec.poset_label.clone(),
                backend: spec.backend.to_string(),
                seed: spec.seed,
                seeds: Vec::new(),
                points: spec.points,
                passes: 0,
                failures: 0,
                retries: spec.max_retries,
                status: "genericity-failure".into(),
                details: vec![e.to_string()],
            }),
            other => other,
        })
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| {
        (&a.theorem, &a.poset, &a.backend, a.seed).cmp(&(&b.theorem, &b.poset, &b.backend, b.seed))
    });
    Ok(reports)
}

/// Every registered theorem on one poset and backend.
pub fn all_checks(poset_label: &str, poset: &Poset, backend: &BackendSpec, points: usize, seed: u64) -> Vec<CheckSpec> {
    Theorem::ALL
        .into_iter()
        .map(|t| CheckSpec::new(t, poset_label, poset.clone(), backend.clone()).points(points).seed(seed))
        .collect()
}
