use std::fmt;
use std::str::FromStr;

use super::{Dynamics, Labeling};
use crate::algebra::AlgebraBackend;
use crate::error::{Error, Result};

/// The labeling maps whose orbits can be measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelMap {
    /// Antichain rowmotion (BAR, or NAR for noncommutative labels).
    Bar,
    /// Order rowmotion (BOR / NOR).
    Bor,
    /// Antichain gyration.
    Bag,
    /// Order gyration.
    Bog,
}

impl LabelMap {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelMap::Bar => "bar",
            LabelMap::Bor => "bor",
            LabelMap::Bag => "bag",
            LabelMap::Bog => "bog",
        }
    }

    pub fn apply<B: AlgebraBackend>(self, d: &Dynamics<'_, B>, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        match self {
            LabelMap::Bar => d.antichain_rowmotion(f),
            LabelMap::Bor => d.order_rowmotion(f),
            LabelMap::Bag => d.antichain_gyration(f),
            LabelMap::Bog => d.order_gyration(f),
        }
    }
}

impl fmt::Display for LabelMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LabelMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bar" | "nar" => Ok(LabelMap::Bar),
            "bor" | "nor" => Ok(LabelMap::Bor),
            "bag" => Ok(LabelMap::Bag),
            "bog" => Ok(LabelMap::Bog),
            _ => Err(Error::Invalid(format!("unknown map {s:?}"))),
        }
    }
}

/// Outcome of iterating a map from a start point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Period {
    /// Smallest `k >= 1` with `map^k(start) = start`.
    Order(usize),
    /// No return within the iteration budget.
    Exceeded,
}

/// Iterates `map` at most `max_iter` times, comparing each iterate with
/// `start` by exact equality.
pub fn orbit_order<E, F>(start: &[E], map: F, max_iter: usize) -> Result<Period>
where
    E: Clone + PartialEq,
    F: Fn(&[E]) -> Result<Vec<E>>,
{
    let mut cur = start.to_vec();
    for k in 1..=max_iter {
        cur = map(&cur)?;
        if cur == start {
            return Ok(Period::Order(k));
        }
    }
    Ok(Period::Exceeded)
}
