use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{CombOrbitReport, HomomesyReport, HomomesyRow, OrbitReport, ScanRow};
use super::{derive_seed, DEFAULT_RETRIES};
use crate::algebra::{AlgebraBackend, BackendSpec, MatrixRing, RationalField, TropicalSemiring};
use crate::comb::{self, Kind, RowKind, SubsetState};
use crate::dynamics::{orbit_order, Dynamics, LabelMap, Period};
use crate::error::{Error, Result};
use crate::pl;
use crate::poset::Poset;

/// Posets with more elements than this are skipped by conjecture scans.
pub const SCAN_MAX_ELEMENTS: usize = 12;

/// Order and antichain rowmotion orders on `[a] x [b]` for every
/// `a <= a_max`, `b <= b_max`, at `seeds` random labelings each.
pub fn scan_conjecture(
    a_max: usize,
    b_max: usize,
    backend: &BackendSpec,
    seeds: usize,
    base_seed: u64,
    max_iter: usize,
) -> Result<Vec<ScanRow>> {
    let shapes: Vec<(usize, usize)> = (1..=a_max).flat_map(|a| (1..=b_max).map(move |b| (a, b))).collect();
    let rows = shapes
        .into_par_iter()
        .map(|(a, b)| scan_shape(a, b, backend, seeds, base_seed, max_iter))
        .collect::<Result<Vec<_>>>()?;
    Ok(rows)
}

fn scan_shape(a: usize, b: usize, backend: &BackendSpec, seeds: usize, base_seed: u64, max_iter: usize) -> Result<ScanRow> {
    let commutative = match backend {
        BackendSpec::Rational | BackendSpec::Tropical => true,
        BackendSpec::Matrix(d) => *d == 1,
    };
    let mut row = ScanRow {
        a,
        b,
        backend: backend.to_string(),
        seeds: Vec::new(),
        observed: String::new(),
        observed_antichain: String::new(),
        expected: a + b,
        claim: if commutative { "theorem" } else { "conjecture" }.into(),
        status: String::new(),
    };
    if a * b > SCAN_MAX_ELEMENTS {
        row.status = "skipped".into();
        return Ok(row);
    }
    let p = Poset::chain_product(a, b);
    let shape_seed = derive_seed(base_seed, a * 1000 + b, 0);
    let mut order_obs = Vec::new();
    let mut anti_obs = Vec::new();
    let mut degenerate = false;
    for s in 0..seeds {
        let found = match backend {
            BackendSpec::Rational => both_orders(&p, RationalField::default(), shape_seed, s, max_iter),
            BackendSpec::Matrix(d) => both_orders(&p, MatrixRing::new(*d), shape_seed, s, max_iter),
            BackendSpec::Tropical => both_orders(&p, TropicalSemiring::default(), shape_seed, s, max_iter),
        };
        match found {
            Ok((seed, nor, nar)) => {
                row.seeds.push(seed);
                order_obs.push(nor);
                anti_obs.push(nar);
            }
            Err(Error::GenericityFailure { .. }) => degenerate = true,
            Err(e) => return Err(e),
        }
    }
    let show = |v: &[Period]| {
        v.iter()
            .map(|p| match p {
                Period::Order(k) => k.to_string(),
                Period::Exceeded => "x".into(),
            })
            .collect::<Vec<_>>()
            .join(";")
    };
    row.observed = show(&order_obs);
    row.observed_antichain = show(&anti_obs);
    let all: Vec<&Period> = order_obs.iter().chain(&anti_obs).collect();
    row.status = if degenerate {
        "genericity-failure"
    } else if all.iter().any(|p| **p == Period::Exceeded) {
        "exceeded"
    } else if all.iter().all(|p| **p == Period::Order(a + b)) {
        "consistent"
    } else {
        "inconsistent"
    }
    .into();
    Ok(row)
}

fn both_orders<B: AlgebraBackend>(p: &Poset, base: B, shape_seed: u64, s: usize, max_iter: usize) -> Result<(u64, Period, Period)> {
    for retry in 0..=DEFAULT_RETRIES {
        let seed = derive_seed(shape_seed, s, retry);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = RationalField::default().sample(&mut rng);
        let b = base.with_constant(c);
        let g: Vec<B::Elem> = p.elements().map(|_| b.sample(&mut rng)).collect();
        let d = Dynamics::new(p, b);
        let orders = orbit_order(&g, |x| d.order_rowmotion(x), max_iter)
            .and_then(|nor| Ok((nor, orbit_order(&g, |x| d.antichain_rowmotion(x), max_iter)?)));
        match orders {
            Ok((nor, nar)) => return Ok((seed, nor, nar)),
            Err(Error::NotInvertible(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure { theorem: "scan".into(), point: s, retries: DEFAULT_RETRIES })
}

/// A labeling orbit to measure.
#[derive(Debug, Clone)]
pub struct OrbitRequest {
    pub poset_label: String,
    pub poset: Poset,
    /// `pl`, or the backend realm name.
    pub realm: String,
    /// Ignored for the `pl` realm.
    pub backend: BackendSpec,
    pub map: LabelMap,
    pub seed: u64,
    pub const_c: Option<BigRational>,
    pub max_iter: usize,
    /// Explicit start labeling; sampled from `seed` when absent.
    pub labeling: Option<Vec<BigRational>>,
}

pub fn orbit_report(req: &OrbitRequest) -> Result<OrbitReport> {
    if req.realm == "pl" {
        return pl_orbit(req);
    }
    match &req.backend {
        BackendSpec::Rational => backend_orbit(req, RationalField::default()),
        BackendSpec::Matrix(d) => backend_orbit(req, MatrixRing::new(*d)),
        BackendSpec::Tropical => backend_orbit(req, TropicalSemiring::default()),
    }
}

fn finish<E: Clone + PartialEq>(
    req: &OrbitRequest,
    backend: String,
    start: &[E],
    render: impl Fn(&E) -> String,
    map: impl Fn(&[E]) -> Result<Vec<E>>,
) -> Result<OrbitReport> {
    let period = orbit_order(start, &map, req.max_iter)?;
    // Re-verify the order independently of the detection loop.
    let (returns, minimal) = match period {
        Period::Order(k) => {
            let mut cur = start.to_vec();
            let mut earlier = false;
            for j in 1..=k {
                cur = map(&cur)?;
                if j < k && cur == start {
                    earlier = true;
                }
            }
            (cur == start, !earlier)
        }
        Period::Exceeded => (false, false),
    };
    Ok(OrbitReport {
        map: req.map.to_string(),
        realm: req.realm.clone(),
        poset: req.poset_label.clone(),
        backend,
        order: match period {
            Period::Order(k) => Some(k),
            Period::Exceeded => None,
        },
        exceeded: period == Period::Exceeded,
        iterates: match period {
            Period::Order(k) => k,
            Period::Exceeded => req.max_iter,
        },
        seeds: Vec::new(),
        failures: 0,
        retries: 0,
        returns_to_start: returns,
        minimal,
        start: start.iter().map(render).collect(),
    })
}

fn pl_orbit(req: &OrbitRequest) -> Result<OrbitReport> {
    let p = &req.poset;
    let start = match (&req.labeling, req.map) {
        (Some(f), _) => f.clone(),
        (None, LabelMap::Bar) => pl::random_chain_point(p, req.seed, 50),
        (None, LabelMap::Bor) => pl::random_order_point(p, req.seed, 50),
        (None, m) => return Err(Error::Invalid(format!("map {m} is not available in the pl realm"))),
    };
    let map = |f: &[BigRational]| match req.map {
        LabelMap::Bar => pl::pl_antichain_rowmotion(p, f),
        _ => pl::pl_order_rowmotion(p, f),
    };
    let mut report = finish(req, "pl".into(), &start, |x| x.to_string(), map)?;
    if req.labeling.is_none() {
        report.seeds.push(req.seed);
    }
    Ok(report)
}

fn backend_orbit<B: AlgebraBackend>(req: &OrbitRequest, base: B) -> Result<OrbitReport> {
    let p = &req.poset;
    if let Some(f) = &req.labeling {
        if f.len() != p.len() {
            return Err(Error::LengthMismatch { expected: p.len(), found: f.len() });
        }
        let b = base.with_constant(req.const_c.clone().unwrap_or_else(BigRational::one));
        let start: Vec<B::Elem> = f.iter().map(|q| b.embed(q)).collect();
        let d = Dynamics::new(p, b.clone());
        return match finish(req, b.name(), &start, |x| b.render(x), |x| req.map.apply(&d, x)) {
            Err(Error::NotInvertible(_)) => {
                Err(Error::GenericityFailure { theorem: format!("orbit {}", req.map), point: 0, retries: 0 })
            }
            other => other,
        };
    }
    let mut seeds = Vec::new();
    for retry in 0..=DEFAULT_RETRIES {
        let seed = if retry == 0 { req.seed } else { derive_seed(req.seed, 0, retry) };
        seeds.push(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = match &req.const_c {
            Some(c) => c.clone(),
            None if base.is_tropical() => BigRational::one(),
            None => RationalField::default().sample(&mut rng),
        };
        let b = base.with_constant(c);
        let start: Vec<B::Elem> = p.elements().map(|_| b.sample(&mut rng)).collect();
        let d = Dynamics::new(p, b.clone());
        match finish(req, b.name(), &start, |x| b.render(x), |x| req.map.apply(&d, x)) {
            Ok(mut report) => {
                report.failures = retry;
                report.retries = retry;
                report.seeds = seeds;
                return Ok(report);
            }
            Err(Error::NotInvertible(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure { theorem: format!("orbit {}", req.map), point: 0, retries: DEFAULT_RETRIES })
}

/// Combinatorial rowmotion on ideals, antichains or filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombMap {
    RowJ,
    RowA,
    RowF,
}

impl CombMap {
    fn kind(self) -> RowKind {
        match self {
            CombMap::RowJ => RowKind::J,
            CombMap::RowA => RowKind::A,
            CombMap::RowF => RowKind::F,
        }
    }

    fn states(self, p: &Poset) -> Vec<SubsetState> {
        match self.kind().domain() {
            Kind::Ideal => comb::all_ideals(p),
            Kind::Filter => comb::all_filters(p),
            _ => comb::all_antichains(p),
        }
    }
}

impl fmt::Display for CombMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CombMap::RowJ => "rowJ",
            CombMap::RowA => "rowA",
            CombMap::RowF => "rowF",
        })
    }
}

impl FromStr for CombMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rowJ" | "rowj" => Ok(CombMap::RowJ),
            "rowA" | "rowa" => Ok(CombMap::RowA),
            "rowF" | "rowf" => Ok(CombMap::RowF),
            _ => Err(Error::Invalid(format!("unknown combinatorial map {s:?} (expected rowA, rowJ or rowF)"))),
        }
    }
}

fn comb_orbits(p: &Poset, map: CombMap) -> Result<Vec<Vec<SubsetState>>> {
    let states = map.states(p);
    comb::orbit_partition(&states, |s| comb::rowmotion(p, map.kind(), s), comb::DEFAULT_ORBIT_LIMIT)
}

fn average(orbit: &[SubsetState]) -> BigRational {
    let total: usize = orbit.iter().map(SubsetState::len).sum();
    BigRational::new(total.into(), orbit.len().into())
}

pub fn comb_orbit_report(label: &str, p: &Poset, map: CombMap) -> Result<CombOrbitReport> {
    let orbits = comb_orbits(p, map)?;
    let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    Ok(CombOrbitReport {
        map: map.to_string(),
        poset: label.to_string(),
        states: sizes.iter().sum(),
        order: sizes.iter().fold(1usize, |acc, &s| acc.lcm(&s)),
        orbit_sizes: sizes,
        averages: orbits.iter().map(|o| average(o).to_string()).collect(),
        orbits: orbits
            .iter()
            .map(|o| o.iter().map(|s| s.elements().into_iter().map(|v| p.name(v).to_string()).collect()).collect())
            .collect(),
    })
}

/// Cardinality averages over every orbit of `map`.
pub fn homomesy_report(label: &str, p: &Poset, map: CombMap) -> Result<HomomesyReport> {
    let orbits = comb_orbits(p, map)?;
    let avgs: Vec<BigRational> = orbits.iter().map(|o| average(o)).collect();
    let homomesic = avgs.windows(2).all(|w| w[0] == w[1]);
    Ok(HomomesyReport {
        map: map.to_string(),
        poset: label.to_string(),
        statistic: "cardinality".into(),
        orbits: orbits
            .iter()
            .zip(&avgs)
            .map(|(o, a)| HomomesyRow { size: o.len(), average: a.to_string() })
            .collect(),
        homomesic,
        common_average: if homomesic { avgs.first().map(|a| a.to_string()) } else { None },
    })
}
