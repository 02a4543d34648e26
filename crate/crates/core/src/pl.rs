//! Piecewise-linear toggles and transfer maps on exact rational labelings.
//!
//! Labelings live in the unit cube `[0,1]^P`. The order polytope holds the
//! order-preserving labelings, the chain polytope those whose sum along
//! every chain is at most 1, and the order-reversing ones are the image of
//! the order polytope under complement.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::Transfer;

pub type RationalLabeling = Vec<BigRational>;

fn in_unit_cube(f: &[BigRational]) -> bool {
    let one = BigRational::one();
    f.iter().all(|x| !x.is_negative() && *x <= one)
}

fn check_len(p: &Poset, f: &[BigRational]) -> Result<()> {
    if f.len() != p.len() {
        return Err(Error::LengthMismatch { expected: p.len(), found: f.len() });
    }
    Ok(())
}

pub fn in_order_polytope(p: &Poset, f: &[BigRational]) -> bool {
    f.len() == p.len() && in_unit_cube(f) && p.covers().iter().all(|&(u, v)| f[u] <= f[v])
}

pub fn in_order_reversing(p: &Poset, f: &[BigRational]) -> bool {
    f.len() == p.len() && in_unit_cube(f) && p.covers().iter().all(|&(u, v)| f[u] >= f[v])
}

pub fn in_chain_polytope(p: &Poset, f: &[BigRational]) -> bool {
    f.len() == p.len()
        && f.iter().all(|x| !x.is_negative())
        && max_chain_sum(p, f) <= BigRational::one()
}

/// Largest label sum along any chain, from a minimal element up to each `v`.
fn sums_from_below(p: &Poset, f: &[BigRational]) -> Vec<BigRational> {
    let mut best = vec![BigRational::zero(); p.len()];
    for &v in p.linear_extension() {
        let below = p.lower_covers(v).iter().map(|&u| &best[u]).max().cloned().unwrap_or_else(BigRational::zero);
        best[v] = below + &f[v];
    }
    best
}

/// Largest label sum along any chain from each `v` up to a maximal element.
fn sums_from_above(p: &Poset, f: &[BigRational]) -> Vec<BigRational> {
    let mut best = vec![BigRational::zero(); p.len()];
    for &v in p.linear_extension().iter().rev() {
        let above = p.upper_covers(v).iter().map(|&w| &best[w]).max().cloned().unwrap_or_else(BigRational::zero);
        best[v] = above + &f[v];
    }
    best
}

fn max_chain_sum(p: &Poset, f: &[BigRational]) -> BigRational {
    sums_from_below(p, f).into_iter().max().unwrap_or_else(BigRational::zero)
}

/// Reflects `f(v)` inside the interval allowed by its neighbours.
pub fn pl_order_toggle(p: &Poset, v: usize, f: &[BigRational]) -> Result<RationalLabeling> {
    check_len(p, f)?;
    if !in_order_polytope(p, f) {
        return Err(Error::DomainViolation("order polytope"));
    }
    let lo = p.lower_covers(v).iter().map(|&u| &f[u]).max().cloned().unwrap_or_else(BigRational::zero);
    let hi = p.upper_covers(v).iter().map(|&w| &f[w]).min().cloned().unwrap_or_else(BigRational::one);
    let mut out = f.to_vec();
    out[v] = lo + hi - &f[v];
    Ok(out)
}

/// Sets `g(v)` to 1 minus the largest chain sum through `v`.
pub fn pl_antichain_toggle(p: &Poset, v: usize, g: &[BigRational]) -> Result<RationalLabeling> {
    check_len(p, g)?;
    if !in_chain_polytope(p, g) {
        return Err(Error::DomainViolation("chain polytope"));
    }
    let below = sums_from_below(p, g);
    let above = sums_from_above(p, g);
    let through = &below[v] + &above[v] - &g[v];
    let mut out = g.to_vec();
    out[v] = BigRational::one() - through;
    Ok(out)
}

pub fn pl_transfer(p: &Poset, op: Transfer, f: &[BigRational]) -> Result<RationalLabeling> {
    check_len(p, f)?;
    let zero = BigRational::zero;
    match op {
        Transfer::Theta => {
            if !in_unit_cube(f) {
                return Err(Error::DomainViolation("unit cube"));
            }
            Ok(f.iter().map(|x| BigRational::one() - x).collect())
        }
        Transfer::Down => {
            if !in_order_polytope(p, f) {
                return Err(Error::DomainViolation("order polytope"));
            }
            Ok(p.elements()
                .map(|x| &f[x] - p.lower_covers(x).iter().map(|&y| &f[y]).max().cloned().unwrap_or_else(zero))
                .collect())
        }
        Transfer::Up => {
            if !in_order_reversing(p, f) {
                return Err(Error::DomainViolation("order-reversing labelings"));
            }
            Ok(p.elements()
                .map(|x| &f[x] - p.upper_covers(x).iter().map(|&y| &f[y]).max().cloned().unwrap_or_else(zero))
                .collect())
        }
        Transfer::InvDown => {
            if !in_chain_polytope(p, f) {
                return Err(Error::DomainViolation("chain polytope"));
            }
            Ok(sums_from_below(p, f))
        }
        Transfer::InvUp => {
            if !in_chain_polytope(p, f) {
                return Err(Error::DomainViolation("chain polytope"));
            }
            Ok(sums_from_above(p, f))
        }
    }
}

/// PL order rowmotion on the order polytope, checked against its toggle form.
pub fn pl_order_rowmotion(p: &Poset, f: &[BigRational]) -> Result<RationalLabeling> {
    let by_transfer = pl_transfer(p, Transfer::Theta, &pl_transfer(p, Transfer::InvUp, &pl_transfer(p, Transfer::Down, f)?)?)?;
    let mut by_toggles = f.to_vec();
    for &v in p.linear_extension().iter().rev() {
        by_toggles = pl_order_toggle(p, v, &by_toggles)?;
    }
    if by_transfer != by_toggles {
        return Err(Error::CompositionMismatch("PL order rowmotion".into()));
    }
    Ok(by_transfer)
}

/// PL antichain rowmotion on the chain polytope, checked against its toggle form.
pub fn pl_antichain_rowmotion(p: &Poset, g: &[BigRational]) -> Result<RationalLabeling> {
    let by_transfer = pl_transfer(p, Transfer::Down, &pl_transfer(p, Transfer::Theta, &pl_transfer(p, Transfer::InvUp, g)?)?)?;
    let mut by_toggles = g.to_vec();
    for &v in p.linear_extension() {
        by_toggles = pl_antichain_toggle(p, v, &by_toggles)?;
    }
    if by_transfer != by_toggles {
        return Err(Error::CompositionMismatch("PL antichain rowmotion".into()));
    }
    Ok(by_transfer)
}

/// A random point of the order polytope with denominators at most `den`.
///
/// Independent uniform values are pushed up to make them order-preserving.
pub fn random_order_point(p: &Poset, seed: u64, den: u32) -> RationalLabeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f: Vec<BigRational> = p
        .elements()
        .map(|_| {
            let d = rng.gen_range(1..=den);
            let n = rng.gen_range(0..=d);
            BigRational::new(n.into(), d.into())
        })
        .collect();
    for &v in p.linear_extension() {
        for &u in p.lower_covers(v) {
            if f[u] > f[v] {
                f[v] = f[u].clone();
            }
        }
    }
    f
}

/// A random point of the chain polytope: the down transfer of an order point.
pub fn random_chain_point(p: &Poset, seed: u64, den: u32) -> RationalLabeling {
    pl_transfer(p, Transfer::Down, &random_order_point(p, seed, den)).expect("order point")
}

pub fn indicator(p: &Poset, members: impl IntoIterator<Item = usize>) -> RationalLabeling {
    let mut f = vec![BigRational::zero(); p.len()];
    for v in members {
        f[v] = BigRational::one();
    }
    f
}
