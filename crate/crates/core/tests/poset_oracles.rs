use std::collections::{BTreeSet, VecDeque};

use proptest::prelude::*;
use rowmotion_core::{Error, Poset};

/// Relations `perm[i] < perm[j]` for `i < j` picked by `mask`; always acyclic.
fn relations(n: usize, perm: &[usize], mask: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> (bit % 64) & 1 == 1 {
                out.push((perm[i], perm[j]));
            }
            bit += 1;
        }
    }
    out
}

fn file_text(n: usize, rel: &[(usize, usize)]) -> String {
    let mut s = format!("# generated\n{n}\n");
    for (u, v) in rel {
        s.push_str(&format!("{u}<{v}\n"));
    }
    s
}

/// Strict order as a boolean matrix, by Warshall closure of `rel`.
fn closure(n: usize, rel: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut lt = vec![vec![false; n]; n];
    for &(u, v) in rel {
        lt[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][k] && lt[k][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    lt
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur: Vec<usize> = (0..n).collect();
    fn go(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            go(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    go(0, &mut cur, &mut out);
    out
}

/// Brute-force isomorphism of two strict orders.
fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.len();
    n == b.len()
        && permutations(n).into_iter().any(|s| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[s[i]][s[j]])))
}

fn order_matrix(p: &Poset) -> Vec<Vec<bool>> {
    p.elements().map(|u| p.elements().map(|v| p.lt(u, v)).collect()).collect()
}

/// Maximal chains by depth-first search over the covers.
fn brute_maximal_chains(p: &Poset) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = p.minimal_elements().into_iter().map(|v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        let ups = p.upper_covers(last);
        if ups.is_empty() {
            out.insert(chain);
        } else {
            for &u in ups {
                let mut next = chain.clone();
                next.push(u);
                stack.push(next);
            }
        }
    }
    out
}

#[test]
fn parse_agrees_with_brute_force_isomorphism() {
    // A bowtie with a redundant relation, listed under shuffled labels.
    let a = Poset::parse("4\n0<2\n0<3\n1<2\n1<3").unwrap();
    let b = Poset::parse("# relabelled\n4\n3<0\n3<1\n2<0\n2<1\n").unwrap();
    assert!(isomorphic(&order_matrix(&a), &order_matrix(&b)));
    let chain = Poset::parse("4\n0<1\n1<2\n2<3\n0<3").unwrap();
    assert!(!isomorphic(&order_matrix(&a), &order_matrix(&chain)));
    assert_eq!(chain.covers().len(), 3);

    // [2]x[2] built two ways.
    let square = Poset::parse("4\n0<1\n0<2\n1<3\n2<3\n0<3").unwrap();
    assert!(isomorphic(&order_matrix(&square), &order_matrix(&Poset::chain_product(2, 2))));
}

#[test]
fn parse_errors() {
    assert!(matches!(Poset::parse("3\n0<1\n1<2\n2<0"), Err(Error::CycleDetected(_))));
    assert!(matches!(Poset::parse("2\n0<2"), Err(Error::DanglingElement { line: 2, element: 2, n: 2 })));
    assert!(matches!(Poset::parse("x"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(Poset::parse("# nothing\n"), Err(Error::Parse { .. })));
    assert!(matches!(Poset::parse("2\n0-1"), Err(Error::Parse { line: 2, .. })));
}

#[test]
fn builders_match_brute_force_relations() {
    // [a]x[b] ordered componentwise.
    for (a, b) in [(1, 1), (2, 3), (3, 2), (3, 3)] {
        let p = Poset::chain_product(a, b);
        for u in p.elements() {
            for v in p.elements() {
                let coords = |x: usize| {
                    let name = p.name(x).trim_matches(['(', ')']);
                    let (i, j) = name.split_once(',').unwrap();
                    (i.parse::<usize>().unwrap(), j.parse::<usize>().unwrap())
                };
                let ((i1, j1), (i2, j2)) = (coords(u), coords(v));
                assert_eq!(p.le(u, v), i1 <= i2 && j1 <= j2);
                if p.is_graded() {
                    assert_eq!(p.rank(u), Some(i1 + j1 - 2));
                }
            }
        }
    }
    // Positive roots [i,j] <= [k,l] iff the interval [i,j] lies inside [k,l].
    for m in 1..5 {
        let p = Poset::root_poset_a(m);
        assert_eq!(p.len(), m * (m + 1) / 2);
        for u in p.elements() {
            for v in p.elements() {
                let iv = |x: usize| {
                    let name = p.name(x).trim_matches(['[', ']']);
                    let (i, j) = name.split_once(',').unwrap();
                    (i.parse::<usize>().unwrap(), j.parse::<usize>().unwrap())
                };
                let ((i1, j1), (i2, j2)) = (iv(u), iv(v));
                assert_eq!(p.le(u, v), i2 <= i1 && j1 <= j2);
            }
        }
        assert_eq!(p.poset_rank(), Some(m - 1));
    }
}

#[test]
fn chain_product_maximal_chain_counts() {
    // Lattice paths: binomial(a+b-2, a-1).
    for (a, b, count) in [(2, 3, 3), (3, 3, 6), (2, 4, 4), (4, 4, 20)] {
        let p = Poset::chain_product(a, b);
        assert_eq!(p.chain_index().unwrap().len(), count);
    }
}

fn connected_by_adjacent_swaps(p: &Poset, exts: &[Vec<usize>]) -> bool {
    let set: BTreeSet<Vec<usize>> = exts.iter().cloned().collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([exts[0].clone()]);
    seen.insert(exts[0].clone());
    while let Some(e) = queue.pop_front() {
        for i in 0..e.len().saturating_sub(1) {
            if p.comparable(e[i], e[i + 1]) {
                continue;
            }
            let mut f = e.clone();
            f.swap(i, i + 1);
            if set.contains(&f) && seen.insert(f.clone()) {
                queue.push_back(f);
            }
        }
    }
    seen.len() == set.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parsed_posets_satisfy_the_axioms(
        n in 1usize..8,
        perm_seed in any::<u64>(),
        mask in any::<u64>(),
    ) {
        let mut perm: Vec<usize> = (0..n).collect();
        // Deterministic shuffle from the seed.
        let mut z = perm_seed;
        for i in (1..n).rev() {
            z = z.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (z >> 33) as usize % (i + 1));
        }
        let rel = relations(n, &perm, mask);
        let p = Poset::parse(&file_text(n, &rel)).unwrap();
        let lt = closure(n, &rel);

        // Same strict order as the closure of the input.
        prop_assert_eq!(order_matrix(&p), lt.clone());
        // Covers are exactly the non-composite relations.
        let covers: BTreeSet<(usize, usize)> = p.covers().iter().copied().collect();
        for u in 0..n {
            for v in 0..n {
                let composite = (0..n).any(|w| lt[u][w] && lt[w][v]);
                prop_assert_eq!(covers.contains(&(u, v)), lt[u][v] && !composite);
            }
        }
        // The default linear extension is order preserving.
        let ext = p.linear_extension();
        let pos: Vec<usize> = (0..n).map(|v| ext.iter().position(|&x| x == v).unwrap()).collect();
        for &(u, v) in p.covers() {
            prop_assert!(pos[u] < pos[v]);
        }
        // Rank function, when present.
        if let Some(ranks) = p.ranks() {
            for v in p.minimal_elements() {
                prop_assert_eq!(ranks[v], 0);
            }
            for &(u, v) in p.covers() {
                prop_assert_eq!(ranks[v], ranks[u] + 1);
            }
            let tops: BTreeSet<usize> = p.maximal_elements().into_iter().map(|v| ranks[v]).collect();
            prop_assert_eq!(tops.len(), 1);
        }
        // Serialization round trip.
        let back = Poset::parse(&p.serialize()).unwrap();
        prop_assert_eq!(back.covers(), p.covers());
        prop_assert!(isomorphic(&order_matrix(&back), &lt));
    }

    #[test]
    fn chain_index_lists_each_maximal_chain_once(n in 1usize..9, density in 0.0f64..0.9, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        let want = brute_maximal_chains(&p);
        let index = p.chain_index().unwrap();
        let got: BTreeSet<Vec<usize>> = index.chains().iter().cloned().collect();
        prop_assert_eq!(got.len(), index.len());
        prop_assert_eq!(&got, &want);
        for v in p.elements() {
            let through: Vec<Vec<usize>> = index.through(v).map(<[usize]>::to_vec).collect();
            let expected: Vec<Vec<usize>> = want.iter().filter(|c| c.contains(&v)).cloned().collect();
            let through_set: BTreeSet<Vec<usize>> = through.iter().cloned().collect();
            prop_assert_eq!(through.len(), expected.len());
            prop_assert_eq!(through_set, expected.into_iter().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn linear_extensions_are_connected_by_adjacent_swaps(n in 1usize..8, density in 0.0f64..0.9, seed in any::<u64>()) {
        let p = Poset::random(n, density, seed);
        let exts = p.linear_extensions(10_000);
        let brute: Vec<Vec<usize>> = permutations(n).into_iter().filter(|s| p.is_linear_extension(s)).collect();
        prop_assert_eq!(exts.len(), brute.len());
        let a: BTreeSet<_> = exts.iter().cloned().collect();
        let b: BTreeSet<_> = brute.into_iter().collect();
        prop_assert_eq!(a, b);
        prop_assert!(connected_by_adjacent_swaps(&p, &exts));
    }

    #[test]
    fn random_graded_posets_are_graded(n in 2usize..12, seed in any::<u64>()) {
        let p = Poset::random_graded(n, seed);
        prop_assert_eq!(p.len(), n);
        prop_assert!(p.is_graded());
    }
}
