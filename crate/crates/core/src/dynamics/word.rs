use std::fmt;

use crate::poset::Poset;

/// One generator of a toggle group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    /// Order toggle at an element.
    T(usize),
    /// Order elggot (inverse of `T`).
    E(usize),
    /// Antichain toggle at an element.
    Tau(usize),
    /// Antichain elggot (inverse of `Tau`).
    Eps(usize),
    /// Order toggles at every element of a rank.
    RankT(usize),
    RankE(usize),
    /// Antichain toggles at every element of a rank.
    RankTau(usize),
    RankEps(usize),
}

impl Atom {
    pub fn inverse(self) -> Atom {
        match self {
            Atom::T(v) => Atom::E(v),
            Atom::E(v) => Atom::T(v),
            Atom::Tau(v) => Atom::Eps(v),
            Atom::Eps(v) => Atom::Tau(v),
            Atom::RankT(i) => Atom::RankE(i),
            Atom::RankE(i) => Atom::RankT(i),
            Atom::RankTau(i) => Atom::RankEps(i),
            Atom::RankEps(i) => Atom::RankTau(i),
        }
    }

    fn label(self, p: Option<&Poset>) -> String {
        let el = |v: usize| p.map_or_else(|| v.to_string(), |p| p.name(v).to_string());
        match self {
            Atom::T(v) => format!("T{}", el(v)),
            Atom::E(v) => format!("E{}", el(v)),
            Atom::Tau(v) => format!("tau{}", el(v)),
            Atom::Eps(v) => format!("eps{}", el(v)),
            Atom::RankT(i) => format!("T[{i}]"),
            Atom::RankE(i) => format!("E[{i}]"),
            Atom::RankTau(i) => format!("tau[{i}]"),
            Atom::RankEps(i) => format!("eps[{i}]"),
        }
    }
}

/// A product of toggles, stored as written.
///
/// The word `[a, b, c]` denotes the composition `a ∘ b ∘ c`, so acting on a
/// labeling applies `c` first and `a` last.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ToggleWord(Vec<Atom>);

impl ToggleWord {
    pub fn new(atoms: Vec<Atom>) -> Self {
        ToggleWord(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Atoms in the order they act.
    pub fn application_order(&self) -> impl Iterator<Item = Atom> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn inverse(&self) -> ToggleWord {
        ToggleWord(self.0.iter().rev().map(|a| a.inverse()).collect())
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &ToggleWord) -> ToggleWord {
        let mut atoms = self.0.clone();
        atoms.extend_from_slice(&other.0);
        ToggleWord(atoms)
    }

    pub fn display<'a>(&'a self, p: &'a Poset) -> impl fmt::Display + 'a {
        WordDisplay { word: self, poset: Some(p) }
    }
}

impl fmt::Display for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WordDisplay { word: self, poset: None }.fmt(f)
    }
}

struct WordDisplay<'a> {
    word: &'a ToggleWord,
    poset: Option<&'a Poset>,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.word.0.iter().map(|a| a.label(self.poset)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `T_{x1} ⋯ T_{xk}` over the elements strictly below some member of `set`,
/// listed along the default linear extension.
pub fn eta_set(p: &Poset, set: &[usize]) -> ToggleWord {
    eta_set_along(p, set, p.linear_extension())
}

pub fn eta(p: &Poset, v: usize) -> ToggleWord {
    eta_set(p, &[v])
}

/// [`eta_set`] with the down-set listed along `ext` instead of the default
/// linear extension.
pub fn eta_set_along(p: &Poset, set: &[usize], ext: &[usize]) -> ToggleWord {
    let atoms = ext.iter().copied().filter(|&x| set.iter().any(|&y| p.lt(x, y))).map(Atom::T).collect();
    ToggleWord(atoms)
}

/// Antichain-side conjugate of the order toggle at `v`: elggots at the lower
/// covers, the antichain toggle at `v`, then toggles at the lower covers.
pub fn star_order_word(p: &Poset, v: usize) -> ToggleWord {
    star_order_like(p, v, Atom::Tau(v))
}

/// Same as [`star_order_word`] with the elggot at `v` in the middle.
pub fn star_order_elggot_word(p: &Poset, v: usize) -> ToggleWord {
    star_order_like(p, v, Atom::Eps(v))
}

fn star_order_like(p: &Poset, v: usize, middle: Atom) -> ToggleWord {
    let lower = p.lower_covers(v);
    let mut atoms: Vec<Atom> = lower.iter().map(|&u| Atom::Eps(u)).collect();
    atoms.push(middle);
    atoms.extend(lower.iter().rev().map(|&u| Atom::Tau(u)));
    ToggleWord(atoms)
}

/// Order-side conjugate of the antichain toggle at `v`: `η_v T_v η_v⁻¹`.
pub fn star_antichain_word(p: &Poset, v: usize) -> ToggleWord {
    star_antichain_word_along(p, v, p.linear_extension())
}

/// [`star_antichain_word`] with `η_v` built along `ext`.
pub fn star_antichain_word_along(p: &Poset, v: usize, ext: &[usize]) -> ToggleWord {
    let e = eta_set_along(p, &[v], ext);
    e.then_after(&ToggleWord(vec![Atom::T(v)])).then_after(&e.inverse())
}

/// `η_v E_v η_v⁻¹`.
pub fn star_antichain_elggot_word(p: &Poset, v: usize) -> ToggleWord {
    let e = eta(p, v);
    e.then_after(&ToggleWord(vec![Atom::E(v)])).then_after(&e.inverse())
}

/// Order rowmotion as rank toggles: `T[0] T[1] ⋯ T[r]`.
pub fn order_rowmotion_rank_word(r: usize) -> ToggleWord {
    ToggleWord((0..=r).map(Atom::RankT).collect())
}

/// Antichain rowmotion as rank toggles: `tau[r] ⋯ tau[1] tau[0]`.
pub fn antichain_rowmotion_rank_word(r: usize) -> ToggleWord {
    ToggleWord((0..=r).rev().map(Atom::RankTau).collect())
}

/// Order gyration: toggles at even ranks act first, then odd ranks.
/// For rank 7 this is `T[7] T[5] T[3] T[1] T[6] T[4] T[2] T[0]`.
pub fn order_gyration_word(r: usize) -> ToggleWord {
    let odd = (0..=r).rev().filter(|i| i % 2 == 1);
    let even = (0..=r).rev().filter(|i| i % 2 == 0);
    ToggleWord(odd.chain(even).map(Atom::RankT).collect())
}

/// Antichain gyration: odd ranks bottom to top, then even ranks top to
/// bottom. For rank 7 this is `tau[0] tau[2] tau[4] tau[6] tau[7] tau[5] tau[3] tau[1]`.
pub fn antichain_gyration_word(r: usize) -> ToggleWord {
    let even = (0..=r).filter(|i| i % 2 == 0);
    let odd = (0..=r).rev().filter(|i| i % 2 == 1);
    ToggleWord(even.chain(odd).map(Atom::RankTau).collect())
}

/// Antichain gyration for noncommutative labels: the order gyration word with
/// each `T[i]` replaced by its antichain-side conjugate
/// `eps[i-1] tau[i] tau[i-1]` (and `T[0]` by `tau[0]`).
///
/// With commuting labels every toggle is an involution and this collapses to
/// [`antichain_gyration_word`].
pub fn antichain_gyration_word_nc(r: usize) -> ToggleWord {
    let mut atoms = Vec::new();
    for a in order_gyration_word(r).atoms() {
        let Atom::RankT(i) = *a else { unreachable!() };
        if i == 0 {
            atoms.push(Atom::RankTau(0));
        } else {
            atoms.extend([Atom::RankEps(i - 1), Atom::RankTau(i), Atom::RankTau(i - 1)]);
        }
    }
    ToggleWord(atoms)
}
