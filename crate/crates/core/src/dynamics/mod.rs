//! Toggle calculus over an arbitrary [`AlgebraBackend`].
//!
//! Every map is written with products in the order required for
//! noncommutative labels; commutative backends are a special case. The
//! bounded poset's extra bottom and top are never stored: the bottom carries
//! `one()` and the top carries `constant_c()` for toggles (and `one()` for the
//! up transfer maps).

mod orbit;
mod word;

pub use orbit::{orbit_order, LabelMap, Period};
pub use word::{
    antichain_gyration_word, antichain_gyration_word_nc, antichain_rowmotion_rank_word, eta, eta_set,
    eta_set_along, order_gyration_word, order_rowmotion_rank_word, star_antichain_elggot_word,
    star_antichain_word, star_antichain_word_along, star_order_elggot_word, star_order_word, Atom, ToggleWord,
};

use crate::algebra::{parallel_sum, sum, AlgebraBackend};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::Transfer;

pub type Labeling<E> = Vec<E>;

/// A poset together with a backend; all dynamics hang off this.
#[derive(Debug, Clone)]
pub struct Dynamics<'a, B: AlgebraBackend> {
    poset: &'a Poset,
    backend: B,
}

impl<'a, B: AlgebraBackend> Dynamics<'a, B> {
    pub fn new(poset: &'a Poset, backend: B) -> Self {
        Dynamics { poset, backend }
    }

    pub fn poset(&self) -> &'a Poset {
        self.poset
    }

    pub fn backend(&self) -> &B {
        &self.backend
    }

    fn inv(&self, x: &B::Elem, what: impl FnOnce() -> String) -> Result<B::Elem> {
        self.backend.inv(x).ok_or_else(|| Error::NotInvertible(what()))
    }

    fn check(&self, f: &[B::Elem]) -> Result<()> {
        if f.len() != self.poset.len() {
            return Err(Error::LengthMismatch { expected: self.poset.len(), found: f.len() });
        }
        Ok(())
    }

    pub fn labelings_equal(&self, f: &[B::Elem], g: &[B::Elem]) -> bool {
        f.len() == g.len() && f.iter().zip(g).all(|(x, y)| self.backend.equals(x, y))
    }

    fn sum_at(&self, f: &[B::Elem], elems: &[usize]) -> Option<B::Elem> {
        sum(&self.backend, elems.iter().map(|&u| f[u].clone()))
    }

    /// `C · f(x)⁻¹` at every element.
    pub fn theta(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let c = self.backend.constant_c();
        self.poset
            .elements()
            .map(|x| Ok(self.backend.mul(&c, &self.inv(&f[x], || format!("complement at {}", self.poset.name(x)))?)))
            .collect()
    }

    /// `f(x) · (Σ_{y⋖x} f(y))⁻¹`.
    pub fn down_transfer(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let p = self.poset;
        p.elements()
            .map(|x| match self.sum_at(f, p.lower_covers(x)) {
                None => Ok(f[x].clone()),
                Some(s) => Ok(self.backend.mul(&f[x], &self.inv(&s, || format!("down transfer at {}", p.name(x)))?)),
            })
            .collect()
    }

    /// `(Σ_{y⋗x} f(y))⁻¹ · f(x)`.
    pub fn up_transfer(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let p = self.poset;
        p.elements()
            .map(|x| match self.sum_at(f, p.upper_covers(x)) {
                None => Ok(f[x].clone()),
                Some(s) => Ok(self.backend.mul(&self.inv(&s, || format!("up transfer at {}", p.name(x)))?, &f[x])),
            })
            .collect()
    }

    /// `h(x) = f(x) · Σ_{y⋖x} h(y)`, bottom up.
    pub fn inv_down_transfer(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let p = self.poset;
        let mut h = f.to_vec();
        for &x in p.linear_extension() {
            if let Some(s) = self.sum_at(&h, p.lower_covers(x)) {
                h[x] = self.backend.mul(&f[x], &s);
            }
        }
        Ok(h)
    }

    /// `h(x) = (Σ_{y⋗x} h(y)) · f(x)`, top down.
    pub fn inv_up_transfer(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let p = self.poset;
        let mut h = f.to_vec();
        for &x in p.linear_extension().iter().rev() {
            if let Some(s) = self.sum_at(&h, p.upper_covers(x)) {
                h[x] = self.backend.mul(&s, &f[x]);
            }
        }
        Ok(h)
    }

    pub fn transfer(&self, op: Transfer, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        match op {
            Transfer::Theta => self.theta(f),
            Transfer::Down => self.down_transfer(f),
            Transfer::Up => self.up_transfer(f),
            Transfer::InvDown => self.inv_down_transfer(f),
            Transfer::InvUp => self.inv_up_transfer(f),
        }
    }

    /// `Θ ∘ Δ⁻¹`, carrying antichain-side labelings to order-side ones.
    pub fn theta_inv_up(&self, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.theta(&self.inv_up_transfer(g)?)
    }

    /// The two factors around `f(v)⁻¹` in the order toggle: the sum over
    /// lower covers (or 1) and the parallel sum over upper covers (or C).
    fn toggle_factors(&self, v: usize, f: &[B::Elem]) -> Result<(B::Elem, B::Elem)> {
        let p = self.poset;
        let lower = self.sum_at(f, p.lower_covers(v)).unwrap_or_else(|| self.backend.one());
        let upper = if p.is_maximal(v) {
            self.backend.constant_c()
        } else {
            let ups: Vec<B::Elem> = p.upper_covers(v).iter().map(|&w| f[w].clone()).collect();
            parallel_sum(&self.backend, &ups)
                .map_err(|e| Error::NotInvertible(format!("order toggle at {}: {e}", p.name(v))))?
        };
        Ok((lower, upper))
    }

    /// `(Σ_{u⋖v} f(u)) · f(v)⁻¹ · (∥_{w⋗v} f(w))`.
    pub fn order_toggle(&self, v: usize, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let (lower, upper) = self.toggle_factors(v, f)?;
        let fv = self.inv(&f[v], || format!("order toggle at {}", self.poset.name(v)))?;
        let mut out = f.to_vec();
        out[v] = self.backend.mul(&self.backend.mul(&lower, &fv), &upper);
        Ok(out)
    }

    /// Inverse of [`Self::order_toggle`]: `(∥_{w⋗v} f(w)) · f(v)⁻¹ · (Σ_{u⋖v} f(u))`.
    pub fn order_elggot(&self, v: usize, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(f)?;
        let (lower, upper) = self.toggle_factors(v, f)?;
        let fv = self.inv(&f[v], || format!("order elggot at {}", self.poset.name(v)))?;
        let mut out = f.to_vec();
        out[v] = self.backend.mul(&self.backend.mul(&upper, &fv), &lower);
        Ok(out)
    }

    /// Sum over maximal chains `y1 ⋖ ⋯ ⋖ yk` through `v = yc` of the chain
    /// product read cyclically downward.
    fn rotated_chain_sum(&self, v: usize, g: &[B::Elem], elggot: bool) -> Result<B::Elem> {
        let index = self.poset.chain_index()?;
        let mut total: Option<B::Elem> = None;
        for chain in index.through(v) {
            let c = chain.iter().position(|&y| y == v).expect("chain passes through v");
            let k = chain.len();
            // Toggle: y_{c-1} ⋯ y_1 y_k ⋯ y_c. Elggot: y_c ⋯ y_1 y_k ⋯ y_{c+1}.
            let first = if elggot { c + 1 } else { c };
            let mut prod = self.backend.one();
            for step in 1..=k {
                let i = (first + k - step) % k;
                prod = self.backend.mul(&prod, &g[chain[i]]);
            }
            total = Some(match total {
                None => prod,
                Some(t) => self.backend.add(&t, &prod),
            });
        }
        Ok(total.expect("every element lies on a maximal chain"))
    }

    fn antichain_like(&self, v: usize, g: &[B::Elem], elggot: bool) -> Result<Labeling<B::Elem>> {
        self.check(g)?;
        let s = self.rotated_chain_sum(v, g, elggot)?;
        let what = if elggot { "antichain elggot" } else { "antichain toggle" };
        let si = self.inv(&s, || format!("{what} at {}", self.poset.name(v)))?;
        let mut out = g.to_vec();
        out[v] = self.backend.mul(&self.backend.constant_c(), &si);
        Ok(out)
    }

    /// `C · (Σ_chains g(y_{c-1})⋯g(y_1) g(y_k)⋯g(y_c))⁻¹` at `v = y_c`.
    pub fn antichain_toggle(&self, v: usize, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.antichain_like(v, g, false)
    }

    /// `C · (Σ_chains g(y_c)⋯g(y_1) g(y_k)⋯g(y_{c+1}))⁻¹` at `v = y_c`.
    pub fn antichain_elggot(&self, v: usize, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.antichain_like(v, g, true)
    }

    /// Order rowmotion `T_{x1} ⋯ T_{xn}` along `ext` (the last element acts first).
    pub fn order_rowmotion_along(&self, f: &[B::Elem], ext: &[usize]) -> Result<Labeling<B::Elem>> {
        let mut cur = f.to_vec();
        for &v in ext.iter().rev() {
            cur = self.order_toggle(v, &cur)?;
        }
        Ok(cur)
    }

    /// Antichain rowmotion `τ_{xn} ⋯ τ_{x1}` along `ext` (the first element acts first).
    pub fn antichain_rowmotion_along(&self, g: &[B::Elem], ext: &[usize]) -> Result<Labeling<B::Elem>> {
        let mut cur = g.to_vec();
        for &v in ext {
            cur = self.antichain_toggle(v, &cur)?;
        }
        Ok(cur)
    }

    pub fn order_rowmotion(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.order_rowmotion_along(f, self.poset.linear_extension())
    }

    pub fn antichain_rowmotion(&self, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.antichain_rowmotion_along(g, self.poset.linear_extension())
    }

    /// `Θ ∘ Δ⁻¹ ∘ ∇`.
    pub fn order_rowmotion_by_transfer(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.theta(&self.inv_up_transfer(&self.down_transfer(f)?)?)
    }

    /// `∇ ∘ Θ ∘ Δ⁻¹`.
    pub fn antichain_rowmotion_by_transfer(&self, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.down_transfer(&self.theta(&self.inv_up_transfer(g)?)?)
    }

    fn rank_elements(&self, i: usize) -> Result<Vec<usize>> {
        let r = self.poset.poset_rank().ok_or(Error::NotGraded)?;
        if i > r {
            return Err(Error::Invalid(format!("rank {i} exceeds poset rank {r}")));
        }
        Ok(self.poset.elements_of_rank(i))
    }

    pub fn apply_atom(&self, atom: Atom, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        let each = |elems: Vec<usize>, op: &dyn Fn(usize, &[B::Elem]) -> Result<Labeling<B::Elem>>| {
            let mut cur = f.to_vec();
            for v in elems {
                cur = op(v, &cur)?;
            }
            Ok(cur)
        };
        match atom {
            Atom::T(v) => self.order_toggle(v, f),
            Atom::E(v) => self.order_elggot(v, f),
            Atom::Tau(v) => self.antichain_toggle(v, f),
            Atom::Eps(v) => self.antichain_elggot(v, f),
            Atom::RankT(i) => each(self.rank_elements(i)?, &|v, g| self.order_toggle(v, g)),
            Atom::RankE(i) => each(self.rank_elements(i)?, &|v, g| self.order_elggot(v, g)),
            Atom::RankTau(i) => each(self.rank_elements(i)?, &|v, g| self.antichain_toggle(v, g)),
            Atom::RankEps(i) => each(self.rank_elements(i)?, &|v, g| self.antichain_elggot(v, g)),
        }
    }

    /// Acts by `word`, rightmost atom first.
    pub fn apply_word(&self, word: &ToggleWord, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        let mut cur = f.to_vec();
        for atom in word.application_order() {
            cur = self.apply_atom(atom, &cur)?;
        }
        Ok(cur)
    }

    pub fn star_order_toggle(&self, v: usize, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.apply_word(&star_order_word(self.poset, v), g)
    }

    pub fn star_order_elggot(&self, v: usize, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.apply_word(&star_order_elggot_word(self.poset, v), g)
    }

    pub fn star_antichain_toggle(&self, v: usize, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.apply_word(&star_antichain_word(self.poset, v), f)
    }

    pub fn star_antichain_elggot(&self, v: usize, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.apply_word(&star_antichain_elggot_word(self.poset, v), f)
    }

    pub fn rank_order_toggle(&self, i: usize, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.apply_atom(Atom::RankT(i), f)
    }

    pub fn rank_antichain_toggle(&self, i: usize, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.apply_atom(Atom::RankTau(i), g)
    }

    /// Order gyration (rank toggles, even ranks first).
    pub fn order_gyration(&self, f: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        let r = self.poset.poset_rank().ok_or(Error::NotGraded)?;
        self.apply_word(&order_gyration_word(r), f)
    }

    /// Antichain gyration, conjugate to order gyration through `Θ ∘ Δ⁻¹`.
    ///
    /// Uses [`antichain_gyration_word_nc`]; with commuting labels this is the
    /// same map as [`Self::antichain_gyration_literal`].
    pub fn antichain_gyration(&self, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        let r = self.poset.poset_rank().ok_or(Error::NotGraded)?;
        self.apply_word(&antichain_gyration_word_nc(r), g)
    }

    /// Antichain gyration by the plain rank word [`antichain_gyration_word`].
    /// Only conjugate to order gyration when labels commute.
    pub fn antichain_gyration_literal(&self, g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        let r = self.poset.poset_rank().ok_or(Error::NotGraded)?;
        self.apply_word(&antichain_gyration_word(r), g)
    }

    /// Multiplies every label of rank `i` by `a[i]`; each `a[i]` must be central.
    pub fn graded_rescale(&self, a: &[B::Elem], g: &[B::Elem]) -> Result<Labeling<B::Elem>> {
        self.check(g)?;
        let ranks = self.poset.ranks().ok_or(Error::NotGraded)?;
        let r = self.poset.poset_rank().unwrap_or(0);
        if a.len() != r + 1 {
            return Err(Error::LengthMismatch { expected: r + 1, found: a.len() });
        }
        if let Some(i) = a.iter().position(|x| !self.backend.is_central(x)) {
            return Err(Error::NotCentral(i));
        }
        Ok(g.iter().zip(ranks).map(|(x, &i)| self.backend.mul(&a[i], x)).collect())
    }
}
