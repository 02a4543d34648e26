use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{PointResult, Theorem};
use crate::algebra::{parallel_sum, sum, AlgebraBackend};
use crate::dynamics::{eta_set, star_antichain_word, star_antichain_word_along, Atom, Dynamics, ToggleWord};
use crate::error::Result;
use crate::poset::Poset;

/// Collects the first disagreement of a sequence of comparisons.
struct Verdict<'d, 'p, B: AlgebraBackend> {
    d: &'d Dynamics<'p, B>,
    failure: Option<String>,
}

impl<'d, 'p, B: AlgebraBackend> Verdict<'d, 'p, B> {
    fn new(d: &'d Dynamics<'p, B>) -> Self {
        Verdict { d, failure: None }
    }

    fn same(&mut self, lhs: &[B::Elem], rhs: &[B::Elem], what: impl FnOnce() -> String) {
        if self.failure.is_none() && !self.d.labelings_equal(lhs, rhs) {
            self.failure = Some(what());
        }
    }

    fn same_value(&mut self, lhs: &B::Elem, rhs: &B::Elem, what: impl FnOnce() -> String) {
        if self.failure.is_none() && !self.d.backend().equals(lhs, rhs) {
            self.failure = Some(what());
        }
    }

    fn differ(&mut self, lhs: &[B::Elem], rhs: &[B::Elem], what: impl FnOnce() -> String) {
        if self.failure.is_none() && self.d.labelings_equal(lhs, rhs) {
            self.failure = Some(what());
        }
    }

    fn done(self) -> PointResult {
        Ok(self.failure)
    }
}

pub(super) fn check_point<B: AlgebraBackend>(theorem: Theorem, p: &Poset, b: &B, rng: &mut ChaCha8Rng) -> PointResult {
    let d = Dynamics::new(p, b.clone());
    let g: Vec<B::Elem> = p.elements().map(|_| b.sample(rng)).collect();
    let name = |v: usize| p.name(v).to_string();
    let mut out = Verdict::new(&d);
    match theorem {
        Theorem::BarTransfer => {
            out.same(&d.antichain_rowmotion(&g)?, &d.antichain_rowmotion_by_transfer(&g)?, || {
                "toggle product differs from transfer composition".into()
            });
        }
        Theorem::NorTransfer => {
            out.same(&d.order_rowmotion(&g)?, &d.order_rowmotion_by_transfer(&g)?, || {
                "toggle product differs from transfer composition".into()
            });
        }
        Theorem::NarTransfer => {
            let lhs = d.inv_down_transfer(&d.antichain_rowmotion(&g)?)?;
            let rhs = d.order_rowmotion(&d.inv_down_transfer(&g)?)?;
            out.same(&lhs, &rhs, || "inverse down transfer does not conjugate the rowmotions".into());
        }
        Theorem::TStar | Theorem::TStarNc => {
            let image = d.theta_inv_up(&g)?;
            for v in p.elements() {
                let lhs = d.theta_inv_up(&d.star_order_toggle(v, &g)?)?;
                out.same(&lhs, &d.order_toggle(v, &image)?, || format!("starred order toggle at {}", name(v)));
                if theorem == Theorem::TStarNc {
                    let lhs = d.theta_inv_up(&d.star_order_elggot(v, &g)?)?;
                    out.same(&lhs, &d.order_elggot(v, &image)?, || format!("starred order elggot at {}", name(v)));
                }
            }
        }
        Theorem::TauStar | Theorem::TauStarNc => {
            let image = d.theta_inv_up(&g)?;
            for v in p.elements() {
                let lhs = d.theta_inv_up(&d.antichain_toggle(v, &g)?)?;
                out.same(&lhs, &d.star_antichain_toggle(v, &image)?, || {
                    format!("starred antichain toggle at {}", name(v))
                });
                if theorem == Theorem::TauStarNc {
                    let lhs = d.theta_inv_up(&d.antichain_elggot(v, &g)?)?;
                    out.same(&lhs, &d.star_antichain_elggot(v, &image)?, || {
                        format!("starred antichain elggot at {}", name(v))
                    });
                }
            }
            if theorem == Theorem::TauStarNc {
                let set = random_antichain(p, rng);
                let mut lhs_word = ToggleWord::default();
                for &v in &set {
                    lhs_word = lhs_word.then_after(&star_antichain_word(p, v));
                }
                let eta = eta_set(p, &set);
                let middle = ToggleWord::new(set.iter().map(|&v| Atom::T(v)).collect());
                let rhs_word = eta.then_after(&middle).then_after(&eta.inverse());
                out.same(&d.apply_word(&lhs_word, &g)?, &d.apply_word(&rhs_word, &g)?, || {
                    format!("conjugation formula over {}", set.iter().map(|&v| name(v)).collect::<Vec<_>>().join(","))
                });
            }
        }
        Theorem::Gyration => {
            let lhs = d.theta_inv_up(&d.antichain_gyration(&g)?)?;
            let rhs = d.order_gyration(&d.theta_inv_up(&g)?)?;
            out.same(&lhs, &rhs, || "gyrations are not conjugate".into());
            if b.is_commutative() {
                out.same(&d.antichain_gyration_literal(&g)?, &d.antichain_gyration(&g)?, || {
                    "plain rank word differs from the elggot form".into()
                });
            }
        }
        Theorem::RescaleRank | Theorem::RescaleBar => {
            let r = p.poset_rank().expect("graded");
            let a: Vec<B::Elem> = (0..=r).map(|_| b.sample_central(rng)).collect();
            let total = a.iter().fold(b.one(), |acc, x| b.mul(&acc, x));
            let total_inv = b.inv(&total).ok_or_else(|| crate::Error::NotInvertible("rescaling product".into()))?;
            let scaled = d.graded_rescale(&a, &g)?;
            if theorem == Theorem::RescaleRank {
                for i in 0..=r {
                    let lhs = d.rank_antichain_toggle(i, &scaled)?;
                    let mut a2 = a.clone();
                    a2[i] = total_inv.clone();
                    let rhs = d.graded_rescale(&a2, &d.rank_antichain_toggle(i, &g)?)?;
                    out.same(&lhs, &rhs, || format!("rank {i}"));
                }
            } else {
                let lhs = d.antichain_rowmotion(&scaled)?;
                let mut a2 = vec![total_inv];
                a2.extend(a[..r].iter().cloned());
                let rhs = d.graded_rescale(&a2, &d.antichain_rowmotion(&g)?)?;
                out.same(&lhs, &rhs, || "rowmotion of rescaled labeling".into());
            }
        }
        Theorem::MeteorGorge => {
            let down = d.inv_down_transfer(&g)?;
            let up = d.inv_up_transfer(&g)?;
            let c = b.constant_c();
            let inv = |x: &B::Elem| b.inv(x).ok_or_else(|| crate::Error::NotInvertible("meteor-gorge".into()));
            for v in p.elements() {
                let joint = inv(&b.mul(&down[v], &up[v]))?;
                let split = b.mul(&inv(&up[v])?, &inv(&down[v])?);
                let tau = d.antichain_toggle(v, &g)?;
                let eps = d.antichain_elggot(v, &g)?;
                let t1 = b.mul(&b.mul(&c, &joint), &g[v]);
                let t2 = b.mul(&b.mul(&c, &split), &g[v]);
                let e1 = b.mul(&b.mul(&c, &g[v]), &joint);
                let e2 = b.mul(&b.mul(&c, &g[v]), &split);
                out.same_value(&tau[v], &t1, || format!("toggle closed form at {}", name(v)));
                out.same_value(&tau[v], &t2, || format!("toggle split form at {}", name(v)));
                out.same_value(&eps[v], &e1, || format!("elggot closed form at {}", name(v)));
                out.same_value(&eps[v], &e2, || format!("elggot split form at {}", name(v)));
            }
        }
        Theorem::Reciprocity => {
            let k = rng.gen_range(1..=4);
            let xs: Vec<B::Elem> = (0..k).map(|_| b.sample(rng)).collect();
            let ps = parallel_sum(b, &xs)?;
            let invs = xs
                .iter()
                .map(|x| b.inv(x).ok_or_else(|| crate::Error::NotInvertible("reciprocity".into())))
                .collect::<Result<Vec<_>>>()?;
            let s = sum(b, invs).expect("k >= 1");
            out.same_value(&b.mul(&ps, &s), &b.one(), || format!("parallel sum times sum of inverses, k={k}"));
            out.same_value(&b.mul(&s, &ps), &b.one(), || format!("sum of inverses times parallel sum, k={k}"));
        }
        Theorem::Involution => {
            for v in p.elements() {
                let t = d.order_toggle(v, &g)?;
                let e = d.order_elggot(v, &g)?;
                out.same(&d.order_elggot(v, &t)?, &g, || format!("E T at {}", name(v)));
                out.same(&d.order_toggle(v, &e)?, &g, || format!("T E at {}", name(v)));
                let tau = d.antichain_toggle(v, &g)?;
                let eps = d.antichain_elggot(v, &g)?;
                out.same(&d.antichain_elggot(v, &tau)?, &g, || format!("eps tau at {}", name(v)));
                out.same(&d.antichain_toggle(v, &eps)?, &g, || format!("tau eps at {}", name(v)));
                if b.is_commutative() {
                    out.same(&d.order_toggle(v, &t)?, &g, || format!("T T at {}", name(v)));
                    out.same(&d.antichain_toggle(v, &tau)?, &g, || format!("tau tau at {}", name(v)));
                }
            }
        }
        Theorem::Commutation => {
            for u in p.elements() {
                for v in u + 1..p.len() {
                    let tuv = d.order_toggle(u, &d.order_toggle(v, &g)?)?;
                    let tvu = d.order_toggle(v, &d.order_toggle(u, &g)?)?;
                    let linked = p.is_cover(u, v) || p.is_cover(v, u);
                    if !linked {
                        out.same(&tuv, &tvu, || format!("order toggles at {} and {}", name(u), name(v)));
                    } else if !b.is_tropical() {
                        out.differ(&tuv, &tvu, || format!("order toggles at cover {} {} commute", name(u), name(v)));
                    }
                    let auv = d.antichain_toggle(u, &d.antichain_toggle(v, &g)?)?;
                    let avu = d.antichain_toggle(v, &d.antichain_toggle(u, &g)?)?;
                    if !p.comparable(u, v) {
                        out.same(&auv, &avu, || format!("antichain toggles at {} and {}", name(u), name(v)));
                    } else if !b.is_tropical() {
                        out.differ(&auv, &avu, || format!("antichain toggles at {} < {} commute", name(u), name(v)));
                    }
                }
            }
        }
        Theorem::ExtensionIndependence => {
            let exts = p.linear_extensions(1000);
            let alt = exts.last().expect("at least one linear extension");
            out.same(&d.antichain_rowmotion(&g)?, &d.antichain_rowmotion_along(&g, alt)?, || {
                "antichain rowmotion depends on the extension".into()
            });
            out.same(&d.order_rowmotion(&g)?, &d.order_rowmotion_along(&g, alt)?, || {
                "order rowmotion depends on the extension".into()
            });
            for v in p.elements() {
                let lhs = d.apply_word(&star_antichain_word(p, v), &g)?;
                let rhs = d.apply_word(&star_antichain_word_along(p, v, alt), &g)?;
                out.same(&lhs, &rhs, || format!("conjugating word at {} depends on the extension", name(v)));
            }
        }
    }
    out.done()
}

/// A random nonempty antichain, listed in index order.
fn random_antichain(p: &Poset, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut order: Vec<usize> = p.elements().collect();
    order.shuffle(rng);
    let mut set: Vec<usize> = Vec::new();
    for v in order {
        if set.iter().all(|&u| !p.comparable(u, v)) && (set.is_empty() || rng.gen_bool(0.7)) {
            set.push(v);
        }
    }
    set.sort_unstable();
    set
}
