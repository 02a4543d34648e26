//! Subset rowmotion and toggles against a bitmask brute force built from the
//! cover relation alone.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num_rational::BigRational;
use proptest::prelude::*;
use rowmotion_core::comb::{self, Kind, RowKind, SubsetState};
use rowmotion_core::Poset;

/// `below[v]` has bit `u` set iff `u <= v`.
struct Brute {
    n: usize,
    below: Vec<u32>,
}

impl Brute {
    fn new(p: &Poset) -> Self {
        let n = p.len();
        let mut below: Vec<u32> = (0..n).map(|v| 1 << v).collect();
        loop {
            let mut changed = false;
            for &(u, v) in p.covers() {
                let merged = below[v] | below[u];
                if merged != below[v] {
                    below[v] = merged;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Brute { n, below }
    }

    fn le(&self, u: usize, v: usize) -> bool {
        self.below[v] >> u & 1 == 1
    }

    fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    fn is_ideal(&self, s: u32) -> bool {
        (0..self.n).filter(|&v| s >> v & 1 == 1).all(|v| self.below[v] & !s == 0)
    }

    fn is_filter(&self, s: u32) -> bool {
        self.is_ideal(self.full() & !s)
    }

    fn is_antichain(&self, s: u32) -> bool {
        let m: Vec<usize> = (0..self.n).filter(|&v| s >> v & 1 == 1).collect();
        m.iter().all(|&u| m.iter().all(|&v| u == v || !self.le(u, v)))
    }

    fn down(&self, s: u32) -> u32 {
        (0..self.n).filter(|&v| s >> v & 1 == 1).fold(0, |acc, v| acc | self.below[v])
    }

    fn up(&self, s: u32) -> u32 {
        (0..self.n).filter(|&u| (0..self.n).any(|v| s >> v & 1 == 1 && self.le(v, u))).fold(0, |acc, u| acc | 1 << u)
    }

    fn minimal(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|&v| s >> v & 1 == 1 && (0..self.n).all(|u| u == v || s >> u & 1 == 0 || !self.le(u, v)))
            .fold(0, |acc, v| acc | 1 << v)
    }

    fn maximal(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|&v| s >> v & 1 == 1 && (0..self.n).all(|u| u == v || s >> u & 1 == 0 || !self.le(v, u)))
            .fold(0, |acc, v| acc | 1 << v)
    }

    /// Ideal generated by the minimal elements of the complement.
    fn row_j(&self, s: u32) -> u32 {
        self.down(self.minimal(self.full() & !s))
    }

    /// Minimal elements outside the ideal generated by the antichain.
    fn row_a(&self, s: u32) -> u32 {
        self.minimal(self.full() & !self.down(s))
    }

    /// Complement of the ideal generated by the minimal elements.
    fn row_f(&self, s: u32) -> u32 {
        self.full() & !self.down(self.minimal(s))
    }

    fn row(&self, kind: RowKind, s: u32) -> u32 {
        match kind {
            RowKind::J => self.row_j(s),
            RowKind::A => self.row_a(s),
            RowKind::F => self.row_f(s),
        }
    }

    fn states(&self, kind: RowKind) -> Vec<u32> {
        (0..=self.full())
            .filter(|&s| match kind {
                RowKind::J => self.is_ideal(s),
                RowKind::A => self.is_antichain(s),
                RowKind::F => self.is_filter(s),
            })
            .collect()
    }
}

fn mask(s: &SubsetState) -> u32 {
    s.elements().into_iter().fold(0, |acc, v| acc | 1 << v)
}

fn state(n: usize, m: u32, kind: Kind) -> SubsetState {
    let mut bits = FixedBitSet::with_capacity(n);
    for v in 0..n {
        if m >> v & 1 == 1 {
            bits.insert(v);
        }
    }
    SubsetState::from_bits(bits, kind)
}

fn kind_of(k: RowKind) -> Kind {
    k.domain()
}

const KINDS: [RowKind; 3] = [RowKind::J, RowKind::A, RowKind::F];

fn test_posets() -> Vec<Poset> {
    let mut ps = vec![
        Poset::chain_product(1, 1),
        Poset::chain_product(2, 2),
        Poset::chain_product(2, 3),
        Poset::chain_product(3, 3),
        Poset::chain_product(2, 4),
        Poset::root_poset_a(3),
        Poset::root_poset_a(4),
        Poset::antichain(4),
        Poset::chain(5),
    ];
    ps.extend((0..6).map(|seed| Poset::random(8, 0.35, seed)));
    ps
}

fn order_of(states: &[u32], f: impl Fn(u32) -> u32) -> usize {
    let mut order = 1usize;
    for &s in states {
        let mut k = 1;
        let mut cur = f(s);
        while cur != s {
            cur = f(cur);
            k += 1;
        }
        order = num_integer::lcm(order, k);
    }
    order
}

#[test]
fn enumeration_matches_brute_force() {
    for p in test_posets() {
        let b = Brute::new(&p);
        for (kind, listed) in [
            (RowKind::J, comb::all_ideals(&p)),
            (RowKind::A, comb::all_antichains(&p)),
            (RowKind::F, comb::all_filters(&p)),
        ] {
            let got: BTreeSet<u32> = listed.iter().map(mask).collect();
            assert_eq!(got.len(), listed.len(), "duplicates");
            let want: BTreeSet<u32> = b.states(kind).into_iter().collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn rowmotion_matches_brute_force_on_every_state() {
    for p in test_posets() {
        let b = Brute::new(&p);
        for kind in KINDS {
            for s in b.states(kind) {
                let st = state(p.len(), s, kind_of(kind));
                let got = comb::rowmotion(&p, kind, &st).unwrap();
                assert_eq!(mask(&got), b.row(kind, s));
                assert_eq!(got.kind(), kind_of(kind));
            }
        }
    }
}

#[test]
fn transfer_maps_match_brute_force() {
    for p in test_posets() {
        let b = Brute::new(&p);
        for a in b.states(RowKind::A) {
            let st = state(p.len(), a, Kind::Antichain);
            assert_eq!(mask(&comb::inverse_up_transfer(&p, &st).unwrap()), b.down(a));
            assert_eq!(mask(&comb::inverse_down_transfer(&p, &st).unwrap()), b.up(a));
        }
        for i in b.states(RowKind::J) {
            let st = state(p.len(), i, Kind::Ideal);
            assert_eq!(mask(&comb::up_transfer(&p, &st).unwrap()), b.maximal(i));
        }
        for f in b.states(RowKind::F) {
            let st = state(p.len(), f, Kind::Filter);
            assert_eq!(mask(&comb::down_transfer(&p, &st).unwrap()), b.minimal(f));
        }
    }
}

#[test]
fn toggles_match_brute_force() {
    for p in test_posets() {
        let b = Brute::new(&p);
        for v in p.elements() {
            let bit = 1u32 << v;
            for s in b.states(RowKind::J) {
                let want = if b.is_ideal(s ^ bit) { s ^ bit } else { s };
                let got = comb::toggle_ideal(&p, v, &state(p.len(), s, Kind::Ideal)).unwrap();
                assert_eq!(mask(&got), want);
            }
            for s in b.states(RowKind::F) {
                let want = if b.is_filter(s ^ bit) { s ^ bit } else { s };
                let got = comb::toggle_filter(&p, v, &state(p.len(), s, Kind::Filter)).unwrap();
                assert_eq!(mask(&got), want);
            }
            for s in b.states(RowKind::A) {
                let want = if b.is_antichain(s ^ bit) { s ^ bit } else { s };
                let got = comb::toggle_antichain(&p, v, &state(p.len(), s, Kind::Antichain)).unwrap();
                assert_eq!(mask(&got), want);
            }
        }
    }
}

#[test]
fn toggle_products_along_every_linear_extension() {
    for p in [Poset::chain_product(2, 3), Poset::root_poset_a(3), Poset::random(6, 0.4, 3)] {
        let b = Brute::new(&p);
        let exts = p.linear_extensions(100_000);
        assert!(exts.len() > 1);
        for ext in &exts {
            for kind in KINDS {
                for s in b.states(kind) {
                    let st = state(p.len(), s, kind_of(kind));
                    let got = comb::rowmotion_by_toggles(&p, kind, &st, ext).unwrap();
                    assert_eq!(mask(&got), b.row(kind, s));
                }
            }
        }
    }
}

#[test]
fn rectangle_orders_are_a_plus_b() {
    for (a, c) in [(1, 1), (2, 2), (2, 3), (3, 3), (1, 4), (3, 2)] {
        let p = Poset::chain_product(a, c);
        let b = Brute::new(&p);
        for kind in KINDS {
            assert_eq!(order_of(&b.states(kind), |s| b.row(kind, s)), a + c, "{kind:?} on {a}x{c}");
            let lib = |s: u32| mask(&comb::rowmotion(&p, kind, &state(p.len(), s, kind_of(kind))).unwrap());
            assert_eq!(order_of(&b.states(kind), lib), a + c);
        }
    }
}

#[test]
fn antichain_cardinality_is_homomesic_on_rectangles() {
    for (a, c) in [(2, 3), (3, 3), (2, 4)] {
        let p = Poset::chain_product(a, c);
        let b = Brute::new(&p);
        let want = BigRational::new(((a * c) as i64).into(), ((a + c) as i64).into());
        let states = b.states(RowKind::A);
        let mut seen = BTreeSet::new();
        for &s in &states {
            if seen.contains(&s) {
                continue;
            }
            let (mut cur, mut total, mut len) = (s, 0i64, 0i64);
            loop {
                seen.insert(cur);
                total += i64::from(cur.count_ones());
                len += 1;
                cur = b.row_a(cur);
                if cur == s {
                    break;
                }
            }
            assert_eq!(BigRational::new(total.into(), len.into()), want);
            let st = state(p.len(), s, Kind::Antichain);
            let lib = comb::homomesy_average(&st, |t| comb::rowmotion(&p, RowKind::A, t), comb::cardinality).unwrap();
            assert_eq!(lib, want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rowmotion_permutes_states(n in 1usize..9, density in 0.0f64..0.8, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        for kind in KINDS {
            let states: Vec<SubsetState> = match kind {
                RowKind::J => comb::all_ideals(&p),
                RowKind::A => comb::all_antichains(&p),
                RowKind::F => comb::all_filters(&p),
            };
            let images: BTreeSet<u32> = states.iter().map(|s| mask(&comb::rowmotion(&p, kind, s).unwrap())).collect();
            prop_assert_eq!(images.len(), states.len());
        }
    }

    #[test]
    fn transfers_invert_each_other(n in 1usize..9, density in 0.0f64..0.8, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        for a in comb::all_antichains(&p) {
            let ideal = comb::inverse_up_transfer(&p, &a).unwrap();
            prop_assert_eq!(&comb::up_transfer(&p, &ideal).unwrap(), &a);
            let filter = comb::inverse_down_transfer(&p, &a).unwrap();
            prop_assert_eq!(&comb::down_transfer(&p, &filter).unwrap(), &a);
        }
    }

    #[test]
    fn toggles_are_involutions(n in 1usize..8, density in 0.0f64..0.8, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        for v in p.elements() {
            for s in comb::all_ideals(&p) {
                let once = comb::toggle_ideal(&p, v, &s).unwrap();
                prop_assert_eq!(&comb::toggle_ideal(&p, v, &once).unwrap(), &s);
            }
            for s in comb::all_antichains(&p) {
                let once = comb::toggle_antichain(&p, v, &s).unwrap();
                prop_assert_eq!(&comb::toggle_antichain(&p, v, &once).unwrap(), &s);
            }
        }
    }
}
