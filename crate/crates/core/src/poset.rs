//! Finite posets given by their cover relations.
//!
//! Elements are dense indices `0..n`. A [`Poset`] is immutable once built and
//! caches its strict down-sets, a default linear extension, its rank function
//! (when graded) and, lazily, the index of maximal chains.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default cap on the number of maximal chains a poset may have.
pub const DEFAULT_CHAIN_LIMIT: usize = 1_000_000;

#[derive(Clone)]
pub struct Poset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: Vec<FixedBitSet>,
    linear_extension: Vec<usize>,
    rank: Option<Vec<usize>>,
    chains: OnceLock<Result<ChainIndex>>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("names", &self.names)
            .field("covers", &self.covers)
            .finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from arbitrary strict relations `u < v`.
    ///
    /// The relations are closed transitively and then reduced, so redundant
    /// pairs are accepted and dropped.
    pub fn from_relations(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(u, v) in relations {
            if u >= n || v >= n {
                return Err(Error::DanglingElement { line: 0, element: u.max(v), n });
            }
            if u == v {
                return Err(Error::CycleDetected(u));
            }
            succ[u].push(v);
            indegree[v] += 1;
        }

        // Kahn with a min-heap gives the lexicographically first topological order.
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(u)) = heap.pop() {
            order.push(u);
            for &v in &succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::CycleDetected(stuck));
        }

        let mut pred = vec![Vec::new(); n];
        for &(u, v) in relations {
            pred[v].push(u);
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &v in &order {
            let mut set = FixedBitSet::with_capacity(n);
            for &u in &pred[v] {
                set.insert(u);
                set.union_with(&below[u]);
            }
            below[v] = set;
        }

        let mut covers = Vec::new();
        for v in 0..n {
            for u in below[v].ones() {
                let implied = below[v].ones().any(|w| w != u && below[w].contains(u));
                if !implied {
                    covers.push((u, v));
                }
            }
        }
        covers.sort_unstable();

        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(u, v) in &covers {
            up[u].push(v);
            down[v].push(u);
        }

        let rank = graded_rank(&order, &up, &down);
        Ok(Poset {
            names,
            covers,
            up,
            down,
            below,
            linear_extension: order,
            rank,
            chains: OnceLock::new(),
        })
    }

    /// `[a] x [b]`, elements `(i,j)` listed with `i` varying fastest, so the
    /// element order is itself a linear extension.
    pub fn chain_product(a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1, "chain lengths must be positive");
        let index = |i: usize, j: usize| (j - 1) * a + (i - 1);
        let mut names = Vec::with_capacity(a * b);
        let mut rel = Vec::new();
        for j in 1..=b {
            for i in 1..=a {
                names.push(format!("({i},{j})"));
                if i < a {
                    rel.push((index(i, j), index(i + 1, j)));
                }
                if j < b {
                    rel.push((index(i, j), index(i, j + 1)));
                }
            }
        }
        Self::from_relations(names, &rel).expect("chain product is acyclic")
    }

    /// Positive root poset of type `A_m`: intervals `[i,j]` with
    /// `[i,j] < [i,j+1]` and `[i,j] < [i-1,j]`, rank `j - i`.
    pub fn root_poset_a(m: usize) -> Self {
        assert!(m >= 1, "root poset rank must be positive");
        let mut intervals = Vec::new();
        for len in 0..m {
            for i in 1..=m - len {
                intervals.push((i, i + len));
            }
        }
        let pos = |i: usize, j: usize| intervals.iter().position(|&p| p == (i, j));
        let mut rel = Vec::new();
        for &(i, j) in &intervals {
            let me = pos(i, j).unwrap();
            if let Some(t) = pos(i, j + 1) {
                rel.push((me, t));
            }
            if i > 1 {
                if let Some(t) = pos(i - 1, j) {
                    rel.push((me, t));
                }
            }
        }
        let names = intervals.iter().map(|(i, j)| format!("[{i},{j}]")).collect();
        Self::from_relations(names, &rel).expect("root poset is acyclic")
    }

    pub fn chain(n: usize) -> Self {
        Self::chain_product(n, 1)
    }

    pub fn antichain(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_relations(names, &[]).expect("no relations")
    }

    /// Resolves a builder string such as `chain 2x3`, `chain 4`, `rootA 3`
    /// or `antichain 2`.
    pub fn from_builder(spec: &str) -> Result<Self> {
        let bad = || Error::UnknownBuilder(spec.to_string());
        let mut words = spec.split_whitespace();
        let kind = words.next().ok_or_else(bad)?;
        let arg = words.next().ok_or_else(bad)?;
        if words.next().is_some() {
            return Err(bad());
        }
        let positive = |s: &str| s.trim().parse::<usize>().ok().filter(|&x| x >= 1);
        match kind {
            "chain" => match arg.split_once(['x', 'X']) {
                Some((a, b)) => {
                    let (a, b) = (positive(a).ok_or_else(bad)?, positive(b).ok_or_else(bad)?);
                    Ok(Self::chain_product(a, b))
                }
                None => Ok(Self::chain(positive(arg).ok_or_else(bad)?)),
            },
            "rootA" => Ok(Self::root_poset_a(positive(arg).ok_or_else(bad)?)),
            "antichain" => Ok(Self::antichain(positive(arg).ok_or_else(bad)?)),
            _ => Err(bad()),
        }
    }

    /// Parses the text format: the first non-comment line is the element
    /// count, then one `i<j` relation per line. `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut rel = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(count) = n else {
                let count = line.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected element count, found {line:?}"),
                })?;
                if count == 0 {
                    return Err(Error::Parse { line: line_no, message: "poset must have at least one element".into() });
                }
                n = Some(count);
                continue;
            };
            let (a, b) = line.split_once('<').ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected a relation \"i<j\", found {line:?}"),
            })?;
            let parse_elem = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad element index {:?}", s.trim()),
                })
            };
            let (u, v) = (parse_elem(a)?, parse_elem(b)?);
            for e in [u, v] {
                if e >= count {
                    return Err(Error::DanglingElement { line: line_no, element: e, n: count });
                }
            }
            rel.push((u, v));
        }
        let n = n.ok_or(Error::Parse { line: 0, message: "missing element count".into() })?;
        Self::from_relations((0..n).map(|i| i.to_string()).collect(), &rel)
    }

    /// Writes the cover relations in the format read by [`Poset::parse`].
    /// Element names are kept as comments.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, name) in self.names.iter().enumerate() {
            if name != &i.to_string() {
                out.push_str(&format!("# {i} = {name}\n"));
            }
        }
        out.push_str(&format!("{}\n", self.len()));
        for &(u, v) in &self.covers {
            out.push_str(&format!("{u}<{v}\n"));
        }
        out
    }

    /// Random poset on `n` elements: each pair `i < j` of indices is related
    /// with probability `density`, then reduced.
    pub fn random(n: usize, density: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rel = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if rng.gen_bool(density) {
                    rel.push((i, j));
                }
            }
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_relations(names, &rel).expect("index order is acyclic")
    }

    /// Random graded poset on `n >= 2` elements with at least two ranks.
    pub fn random_graded(n: usize, seed: u64) -> Self {
        assert!(n >= 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let levels = rng.gen_range(2..=n.min(4));
        let mut sizes = vec![1usize; levels];
        for _ in levels..n {
            let l = rng.gen_range(0..levels);
            sizes[l] += 1;
        }
        let mut level_of = Vec::new();
        for (l, &s) in sizes.iter().enumerate() {
            level_of.extend(std::iter::repeat(l).take(s));
        }
        let members = |l: usize| -> Vec<usize> { (0..n).filter(|&e| level_of[e] == l).collect() };
        let mut rel = Vec::new();
        for l in 1..levels {
            let lower = members(l - 1);
            let upper = members(l);
            for &v in &upper {
                let mut picks: Vec<usize> = lower.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                if picks.is_empty() {
                    picks.push(*lower.choose(&mut rng).unwrap());
                }
                rel.extend(picks.into_iter().map(|u| (u, v)));
            }
            for &u in &lower {
                if !rel.iter().any(|&(a, b)| a == u && level_of[b] == l) {
                    rel.push((u, *upper.choose(&mut rng).unwrap()));
                }
            }
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_relations(names, &rel).expect("levels are acyclic")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements covering `v`.
    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    /// Elements covered by `v`.
    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    pub fn is_cover(&self, u: usize, v: usize) -> bool {
        self.up[u].contains(&v)
    }

    /// Strict order `u < v`.
    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }

    pub fn le(&self, u: usize, v: usize) -> bool {
        u == v || self.lt(u, v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.le(u, v) || self.le(v, u)
    }

    /// Elements strictly below `v`.
    pub fn strictly_below(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[v].ones()
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        self.down[v].is_empty()
    }

    pub fn is_maximal(&self, v: usize) -> bool {
        self.up[v].is_empty()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.elements().filter(|&v| self.is_minimal(v)).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        self.elements().filter(|&v| self.is_maximal(v)).collect()
    }

    /// The lexicographically first linear extension.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_extension
    }

    pub fn is_linear_extension(&self, seq: &[usize]) -> bool {
        let n = self.len();
        if seq.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        self.covers.iter().all(|&(u, v)| pos[u] < pos[v])
    }

    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    pub fn rank(&self, v: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[v])
    }

    pub fn ranks(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    /// Rank `r` of a graded poset (the common rank of its maximal elements).
    pub fn poset_rank(&self) -> Option<usize> {
        self.rank.as_ref().map(|r| r.iter().copied().max().unwrap_or(0))
    }

    pub fn elements_of_rank(&self, i: usize) -> Vec<usize> {
        match &self.rank {
            Some(r) => self.elements().filter(|&v| r[v] == i).collect(),
            None => Vec::new(),
        }
    }

    /// Maximal chains, computed once with [`DEFAULT_CHAIN_LIMIT`].
    pub fn chain_index(&self) -> Result<&ChainIndex> {
        self.chains
            .get_or_init(|| ChainIndex::build(self, DEFAULT_CHAIN_LIMIT))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// All maximal chains through `v`, bottom to top.
    pub fn maximal_chains_through(&self, v: usize) -> Result<Vec<Vec<usize>>> {
        Ok(self.chain_index()?.through(v).map(<[usize]>::to_vec).collect())
    }

    /// The first `limit` linear extensions in lexicographic order.
    pub fn linear_extensions(&self, limit: usize) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut indegree: Vec<usize> = (0..n).map(|v| self.down[v].len()).collect();
        let mut used = vec![false; n];
        let mut current = Vec::with_capacity(n);
        let mut out = Vec::new();
        self.extend_linear(&mut indegree, &mut used, &mut current, limit, &mut out);
        out
    }

    fn extend_linear(
        &self,
        indegree: &mut [usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if current.len() == self.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..self.len() {
            if used[v] || indegree[v] != 0 {
                continue;
            }
            used[v] = true;
            current.push(v);
            for &w in &self.up[v] {
                indegree[w] -= 1;
            }
            self.extend_linear(indegree, used, current, limit, out);
            for &w in &self.up[v] {
                indegree[w] += 1;
            }
            current.pop();
            used[v] = false;
            if out.len() >= limit {
                return;
            }
        }
    }

    /// Linear extension of the subposet `sub`, in the induced order of the
    /// default extension.
    pub fn induced_extension(&self, sub: &FixedBitSet) -> Vec<usize> {
        self.linear_extension.iter().copied().filter(|&v| sub.contains(v)).collect()
    }
}

fn graded_rank(order: &[usize], up: &[Vec<usize>], down: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = order.len();
    let mut rk = vec![0usize; n];
    for &v in order {
        rk[v] = down[v].iter().map(|&u| rk[u] + 1).max().unwrap_or(0);
    }
    for v in 0..n {
        if down[v].iter().any(|&u| rk[u] + 1 != rk[v]) {
            return None;
        }
    }
    let top: Vec<usize> = (0..n).filter(|&v| up[v].is_empty()).map(|v| rk[v]).collect();
    if top.windows(2).any(|w| w[0] != w[1]) {
        return None;
    }
    Some(rk)
}

/// Every maximal chain of a poset, with a per-element list of the chains
/// passing through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainIndex {
    chains: Vec<Vec<usize>>,
    through: Vec<Vec<usize>>,
}

impl ChainIndex {
    pub fn build(p: &Poset, limit: usize) -> Result<Self> {
        let mut chains = Vec::new();
        let mut stack = Vec::new();
        for m in p.minimal_elements() {
            stack.push(m);
            walk_up(p, &mut stack, &mut chains, limit)?;
            stack.pop();
        }
        let mut through = vec![Vec::new(); p.len()];
        for (i, chain) in chains.iter().enumerate() {
            for &v in chain {
                through[v].push(i);
            }
        }
        Ok(ChainIndex { chains, through })
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Maximal chains containing `v`.
    pub fn through(&self, v: usize) -> impl Iterator<Item = &[usize]> + '_ {
        self.through[v].iter().map(move |&i| self.chains[i].as_slice())
    }
}

fn walk_up(p: &Poset, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) -> Result<()> {
    let top = *stack.last().expect("non-empty chain");
    if p.is_maximal(top) {
        if out.len() >= limit {
            return Err(Error::ChainBudgetExceeded { limit });
        }
        out.push(stack.clone());
        return Ok(());
    }
    for &w in p.upper_covers(top) {
        stack.push(w);
        walk_up(p, stack, out, limit)?;
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_product_shape() {
        let p = Poset::chain_product(2, 3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.covers().len(), 7);
        assert_eq!(p.poset_rank(), Some(3));
        let top = p.index_of("(2,3)").unwrap();
        assert_eq!(p.rank(top), Some(3));

        let s = Poset::chain_product(1, 1);
        assert_eq!((s.len(), s.covers().len()), (1, 0));
    }

    #[test]
    fn chain_product_covers_match_brute_force_reduction() {
        // Order on [a]x[b] is componentwise; covers are pairs with nothing strictly between.
        for (a, b) in [(3, 3), (2, 4), (1, 5)] {
            let p = Poset::chain_product(a, b);
            let coords: Vec<(usize, usize)> =
                p.names().iter().map(|s| {
                    let t = s.trim_matches(|c| c == '(' || c == ')');
                    let (i, j) = t.split_once(',').unwrap();
                    (i.parse().unwrap(), j.parse().unwrap())
                }).collect();
            let lt = |x: (usize, usize), y: (usize, usize)| x != y && x.0 <= y.0 && x.1 <= y.1;
            let mut expected = 0;
            for &x in &coords {
                for &y in &coords {
                    if lt(x, y) && !coords.iter().any(|&z| lt(x, z) && lt(z, y)) {
                        expected += 1;
                    }
                }
            }
            assert_eq!(p.covers().len(), expected);
            assert_eq!(expected, a * (b - 1) + b * (a - 1));
        }
    }

    #[test]
    fn root_poset_shapes() {
        let p = Poset::root_poset_a(3);
        assert_eq!(p.len(), 6);
        let by_rank: Vec<usize> = (0..3).map(|i| p.elements_of_rank(i).len()).collect();
        assert_eq!(by_rank, vec![3, 2, 1]);
        assert_eq!(Poset::root_poset_a(1).len(), 1);

        // Brute force: intervals of [1..4], [i,j] <= [k,l] iff k <= i and j <= l.
        let p4 = Poset::root_poset_a(4);
        let mut count = 0;
        for i in 1..=4 {
            for j in i..=4 {
                count += 1;
                let _ = (i, j);
            }
        }
        assert_eq!(p4.len(), count);
        assert_eq!(p4.poset_rank(), Some(3));
        for u in p4.elements() {
            for v in p4.elements() {
                let parse = |s: &str| {
                    let (a, b) = s.trim_matches(|c| c == '[' || c == ']').split_once(',').unwrap();
                    (a.parse::<usize>().unwrap(), b.parse::<usize>().unwrap())
                };
                let (i, j) = parse(p4.name(u));
                let (k, l) = parse(p4.name(v));
                assert_eq!(p4.le(u, v), k <= i && j <= l, "{} vs {}", p4.name(u), p4.name(v));
            }
        }
    }

    #[test]
    fn parse_basic_and_errors() {
        let p = Poset::parse("3\n0<1\n1<2").unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.lt(0, 2));

        assert_eq!(Poset::parse("2\n0<1\n1<0").unwrap_err(), Error::CycleDetected(0));
        assert!(matches!(Poset::parse("2\n0<2"), Err(Error::DanglingElement { element: 2, .. })));
        assert!(matches!(Poset::parse("# only comments\n"), Err(Error::Parse { .. })));
        assert!(matches!(Poset::parse("2\n0-1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Poset::parse("1\n0<0"), Err(Error::CycleDetected(0))));
    }

    #[test]
    fn parse_repairs_redundant_relations() {
        let p = Poset::parse("# chain with a shortcut\n3\n0<1\n1<2\n0<2\n").unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn grading() {
        assert!(Poset::chain_product(2, 3).is_graded());
        // 0<1<2 and 0<3 with 3 maximal: maximal ranks differ.
        let p = Poset::parse("4\n0<1\n1<2\n0<3").unwrap();
        assert!(!p.is_graded());
        // 0<2, 1<3, 3<2: 2 covers 0 and 3, ranks inconsistent.
        let q = Poset::parse("4\n0<2\n1<3\n3<2").unwrap();
        assert!(!q.is_graded());
        assert!(Poset::antichain(3).is_graded());
    }

    #[test]
    fn linear_extensions_small() {
        assert_eq!(Poset::antichain(2).linear_extensions(10), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(Poset::chain_product(2, 2).linear_extensions(100).len(), 2);
        let p = Poset::chain_product(2, 3);
        let first = &p.linear_extensions(1)[0];
        let names: Vec<&str> = first.iter().map(|&v| p.name(v)).collect();
        assert_eq!(names, ["(1,1)", "(2,1)", "(1,2)", "(2,2)", "(1,3)", "(2,3)"]);
        assert_eq!(first.as_slice(), p.linear_extension());
    }

    #[test]
    fn linear_extension_count_matches_permutation_filter() {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for p in [Poset::chain_product(2, 2), Poset::chain_product(2, 3), Poset::root_poset_a(3)] {
            let brute = permutations(p.len()).into_iter().filter(|s| p.is_linear_extension(s)).count();
            assert_eq!(p.linear_extensions(usize::MAX).len(), brute);
        }
    }

    #[test]
    fn chains_through() {
        let p = Poset::chain_product(2, 3);
        let bottom = p.index_of("(1,1)").unwrap();
        assert_eq!(p.maximal_chains_through(bottom).unwrap().len(), 3);

        let s = Poset::chain(1);
        assert_eq!(s.maximal_chains_through(0).unwrap(), vec![vec![0]]);

        // Middle rank-0 element of the A3 root poset lies on paths v-x-z and v-y-z.
        let a3 = Poset::root_poset_a(3);
        let v = a3.index_of("[2,2]").unwrap();
        fn dfs_count(p: &Poset, from: usize, up: bool) -> usize {
            let next = if up { p.upper_covers(from) } else { p.lower_covers(from) };
            if next.is_empty() {
                1
            } else {
                next.iter().map(|&w| dfs_count(p, w, up)).sum()
            }
        }
        let expected = dfs_count(&a3, v, true) * dfs_count(&a3, v, false);
        assert_eq!(a3.maximal_chains_through(v).unwrap().len(), expected);
        assert_eq!(expected, 2);
    }

    #[test]
    fn chain_budget() {
        let p = Poset::chain_product(3, 3);
        assert!(ChainIndex::build(&p, 5).is_err());
        assert_eq!(ChainIndex::build(&p, 6).unwrap().len(), 6);
    }

    #[test]
    fn builders_from_strings() {
        assert_eq!(Poset::from_builder("chain 2x3").unwrap(), Poset::chain_product(2, 3));
        assert_eq!(Poset::from_builder("rootA 3").unwrap(), Poset::root_poset_a(3));
        assert_eq!(Poset::from_builder("chain 4").unwrap().len(), 4);
        assert!(Poset::from_builder("chain 0x3").is_err());
        assert!(Poset::from_builder("cube 3").is_err());
    }

    #[test]
    fn random_graded_is_graded() {
        for seed in 0..30 {
            let p = Poset::random_graded(7, seed);
            assert!(p.is_graded(), "seed {seed}");
            assert!(p.poset_rank().unwrap() >= 1);
        }
    }
}
