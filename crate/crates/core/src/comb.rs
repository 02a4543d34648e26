//! Rowmotion on order ideals, filters and antichains as plain sets.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Default cap on the number of states visited by orbit enumeration.
pub const DEFAULT_ORBIT_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Ideal,
    Filter,
    Antichain,
    Raw,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Ideal => "ideal",
            Kind::Filter => "filter",
            Kind::Antichain => "antichain",
            Kind::Raw => "raw",
        }
    }
}

/// A subset of poset elements tagged with the structure it is meant to have.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetState {
    members: FixedBitSet,
    kind: Kind,
}

impl SubsetState {
    /// Builds a state and checks that `members` really has the claimed kind.
    pub fn new(p: &Poset, members: impl IntoIterator<Item = usize>, kind: Kind) -> Result<Self> {
        let mut bits = FixedBitSet::with_capacity(p.len());
        for v in members {
            if v >= p.len() {
                return Err(Error::Invalid(format!("element {v} out of range")));
            }
            bits.insert(v);
        }
        let s = SubsetState { members: bits, kind };
        if !s.is_valid(p) {
            return Err(Error::Invalid(format!("set is not an {}", kind.as_str())));
        }
        Ok(s)
    }

    pub fn from_bits(members: FixedBitSet, kind: Kind) -> Self {
        SubsetState { members, kind }
    }

    pub fn empty(n: usize, kind: Kind) -> Self {
        SubsetState { members: FixedBitSet::with_capacity(n), kind }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_valid(&self, p: &Poset) -> bool {
        match self.kind {
            Kind::Ideal => is_ideal(p, &self.members),
            Kind::Filter => is_filter(p, &self.members),
            Kind::Antichain => is_antichain(p, &self.members),
            Kind::Raw => true,
        }
    }

    fn expect(&self, kind: Kind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected: kind.as_str(), found: self.kind.as_str() })
        }
    }
}

impl fmt::Display for SubsetState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.kind.as_str())?;
        for (i, v) in self.members.ones().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub fn is_ideal(p: &Poset, set: &FixedBitSet) -> bool {
    set.ones().all(|v| p.lower_covers(v).iter().all(|&u| set.contains(u)))
}

pub fn is_filter(p: &Poset, set: &FixedBitSet) -> bool {
    set.ones().all(|v| p.upper_covers(v).iter().all(|&w| set.contains(w)))
}

pub fn is_antichain(p: &Poset, set: &FixedBitSet) -> bool {
    let elems: Vec<usize> = set.ones().collect();
    elems.iter().enumerate().all(|(i, &u)| elems[i + 1..].iter().all(|&v| !p.comparable(u, v)))
}

/// Set complement; ideals and filters swap, anything else becomes raw.
pub fn complement(s: &SubsetState) -> SubsetState {
    let mut members = s.members.clone();
    members.toggle_range(..);
    let kind = match s.kind {
        Kind::Ideal => Kind::Filter,
        Kind::Filter => Kind::Ideal,
        Kind::Antichain | Kind::Raw => Kind::Raw,
    };
    SubsetState { members, kind }
}

/// Maximal elements of an ideal.
pub fn up_transfer(p: &Poset, s: &SubsetState) -> Result<SubsetState> {
    s.expect(Kind::Ideal)?;
    let mut out = FixedBitSet::with_capacity(p.len());
    for v in s.members.ones() {
        if !p.upper_covers(v).iter().any(|&w| s.contains(w)) {
            out.insert(v);
        }
    }
    Ok(SubsetState { members: out, kind: Kind::Antichain })
}

/// Downward saturation of an antichain.
pub fn inverse_up_transfer(p: &Poset, a: &SubsetState) -> Result<SubsetState> {
    a.expect(Kind::Antichain)?;
    let mut out = a.members.clone();
    for y in a.members.ones() {
        for x in p.strictly_below(y) {
            out.insert(x);
        }
    }
    Ok(SubsetState { members: out, kind: Kind::Ideal })
}

/// Minimal elements of a filter.
pub fn down_transfer(p: &Poset, s: &SubsetState) -> Result<SubsetState> {
    s.expect(Kind::Filter)?;
    let mut out = FixedBitSet::with_capacity(p.len());
    for v in s.members.ones() {
        if !p.lower_covers(v).iter().any(|&u| s.contains(u)) {
            out.insert(v);
        }
    }
    Ok(SubsetState { members: out, kind: Kind::Antichain })
}

/// Upward saturation of an antichain.
pub fn inverse_down_transfer(p: &Poset, a: &SubsetState) -> Result<SubsetState> {
    a.expect(Kind::Antichain)?;
    let mut out = a.members.clone();
    for x in p.elements() {
        if a.members.ones().any(|y| p.lt(y, x)) {
            out.insert(x);
        }
    }
    Ok(SubsetState { members: out, kind: Kind::Filter })
}

pub fn toggle_ideal(p: &Poset, v: usize, s: &SubsetState) -> Result<SubsetState> {
    s.expect(Kind::Ideal)?;
    let mut out = s.clone();
    if s.contains(v) {
        if !p.upper_covers(v).iter().any(|&w| s.contains(w)) {
            out.members.set(v, false);
        }
    } else if p.lower_covers(v).iter().all(|&u| s.contains(u)) {
        out.members.insert(v);
    }
    Ok(out)
}

pub fn toggle_filter(p: &Poset, v: usize, s: &SubsetState) -> Result<SubsetState> {
    s.expect(Kind::Filter)?;
    let mut out = s.clone();
    if s.contains(v) {
        if !p.lower_covers(v).iter().any(|&u| s.contains(u)) {
            out.members.set(v, false);
        }
    } else if p.upper_covers(v).iter().all(|&w| s.contains(w)) {
        out.members.insert(v);
    }
    Ok(out)
}

pub fn toggle_antichain(p: &Poset, v: usize, s: &SubsetState) -> Result<SubsetState> {
    s.expect(Kind::Antichain)?;
    let mut out = s.clone();
    if s.contains(v) {
        out.members.set(v, false);
    } else if !s.members.ones().any(|u| p.comparable(u, v)) {
        out.members.insert(v);
    }
    Ok(out)
}

/// Which rowmotion: on ideals, antichains or filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowKind {
    J,
    A,
    F,
}

impl RowKind {
    pub fn domain(self) -> Kind {
        match self {
            RowKind::J => Kind::Ideal,
            RowKind::A => Kind::Antichain,
            RowKind::F => Kind::Filter,
        }
    }
}

/// Rowmotion as a composition of complement and transfer maps.
pub fn rowmotion_by_transfer(p: &Poset, kind: RowKind, s: &SubsetState) -> Result<SubsetState> {
    s.expect(kind.domain())?;
    match kind {
        RowKind::J => inverse_up_transfer(p, &down_transfer(p, &complement(s))?),
        RowKind::A => {
            let mut c = complement(&inverse_up_transfer(p, s)?);
            c.kind = Kind::Filter;
            down_transfer(p, &c)
        }
        RowKind::F => Ok(complement(&inverse_up_transfer(p, &down_transfer(p, s)?)?)),
    }
}

/// Rowmotion as a product of toggles along the linear extension `ext`.
///
/// Ideal and filter rowmotion toggle from the top of `ext` down; antichain
/// rowmotion toggles from the bottom up.
pub fn rowmotion_by_toggles(p: &Poset, kind: RowKind, s: &SubsetState, ext: &[usize]) -> Result<SubsetState> {
    s.expect(kind.domain())?;
    let mut cur = s.clone();
    match kind {
        RowKind::J => {
            for &v in ext.iter().rev() {
                cur = toggle_ideal(p, v, &cur)?;
            }
        }
        RowKind::F => {
            for &v in ext.iter().rev() {
                cur = toggle_filter(p, v, &cur)?;
            }
        }
        RowKind::A => {
            for &v in ext {
                cur = toggle_antichain(p, v, &cur)?;
            }
        }
    }
    Ok(cur)
}

/// Rowmotion computed both ways; the two must agree.
pub fn rowmotion(p: &Poset, kind: RowKind, s: &SubsetState) -> Result<SubsetState> {
    let by_transfer = rowmotion_by_transfer(p, kind, s)?;
    let by_toggles = rowmotion_by_toggles(p, kind, s, p.linear_extension())?;
    if by_transfer != by_toggles {
        return Err(Error::CompositionMismatch(format!(
            "{s}: transfer gives {by_transfer}, toggles give {by_toggles}"
        )));
    }
    Ok(by_transfer)
}

/// Every antichain, in lexicographic order of their sorted member lists.
pub fn all_antichains(p: &Poset) -> Vec<SubsetState> {
    let mut out = Vec::new();
    let mut current = FixedBitSet::with_capacity(p.len());
    grow_antichains(p, 0, &mut current, &mut out);
    out
}

fn grow_antichains(p: &Poset, from: usize, current: &mut FixedBitSet, out: &mut Vec<SubsetState>) {
    out.push(SubsetState { members: current.clone(), kind: Kind::Antichain });
    for v in from..p.len() {
        if current.ones().any(|u| p.comparable(u, v)) {
            continue;
        }
        current.insert(v);
        grow_antichains(p, v + 1, current, out);
        current.set(v, false);
    }
}

pub fn all_ideals(p: &Poset) -> Vec<SubsetState> {
    all_antichains(p)
        .iter()
        .map(|a| inverse_up_transfer(p, a).expect("antichain input"))
        .collect()
}

pub fn all_filters(p: &Poset) -> Vec<SubsetState> {
    all_antichains(p)
        .iter()
        .map(|a| inverse_down_transfer(p, a).expect("antichain input"))
        .collect()
}

/// The orbit of `start` under `map`, starting with `start` itself.
pub fn orbit<F>(start: &SubsetState, map: F, limit: usize) -> Result<Vec<SubsetState>>
where
    F: Fn(&SubsetState) -> Result<SubsetState>,
{
    let mut out = vec![start.clone()];
    let mut cur = map(start)?;
    while &cur != start {
        if out.len() >= limit {
            return Err(Error::OrbitBudgetExceeded { limit });
        }
        let next = map(&cur)?;
        out.push(cur);
        cur = next;
    }
    Ok(out)
}

/// Splits `states` into orbits of the bijection `map`.
pub fn orbit_partition<F>(states: &[SubsetState], map: F, limit: usize) -> Result<Vec<Vec<SubsetState>>>
where
    F: Fn(&SubsetState) -> Result<SubsetState>,
{
    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    for s in states {
        if seen.contains(s) {
            continue;
        }
        let orb = orbit(s, &map, limit)?;
        if seen.len() + orb.len() > limit {
            return Err(Error::OrbitBudgetExceeded { limit });
        }
        seen.extend(orb.iter().cloned());
        orbits.push(orb);
    }
    Ok(orbits)
}

pub fn cardinality(s: &SubsetState) -> BigRational {
    BigRational::from_integer(s.len().into())
}

/// Average of `statistic` over the orbit of `start`.
pub fn homomesy_average<F, S>(start: &SubsetState, map: F, statistic: S) -> Result<BigRational>
where
    F: Fn(&SubsetState) -> Result<SubsetState>,
    S: Fn(&SubsetState) -> BigRational,
{
    let orb = orbit(start, map, DEFAULT_ORBIT_LIMIT)?;
    let total = orb.iter().map(&statistic).fold(BigRational::zero(), |a, b| a + b);
    Ok(total / BigRational::from_integer(orb.len().into()))
}
