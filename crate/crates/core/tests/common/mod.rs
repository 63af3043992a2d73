//! Brute-force helpers shared by the integration tests. Nothing here goes
//! through the enumeration or search code under test.

#![allow(dead_code)]

use std::collections::HashSet;

use dagbound::generators::{self, SplitMix64};
use dagbound::{Digraph, Ranking};

/// All permutations of `0..n` as vertex sequences, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                extend(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Acyclic orderings found by filtering all `n!` permutations.
pub fn brute_orderings(d: &Digraph) -> Vec<Ranking> {
    permutations(d.vertex_count())
        .into_iter()
        .map(|seq| Ranking::from_sequence(&seq).unwrap())
        .filter(|g| d.arcs().all(|(u, v)| g.rank(u) < g.rank(v)))
        .collect()
}

pub fn dot(e: &[i64], g: &Ranking) -> i64 {
    e.iter().zip(g.ranks()).map(|(a, &r)| a * r as i64).sum()
}

/// Brute-force minimum of `⟨e,g⟩` with the lexicographically first
/// minimizer.
pub fn brute_min(d: &Digraph) -> (i64, Ranking) {
    let e = d.e_vector();
    brute_orderings(d)
        .into_iter()
        .map(|g| (dot(e.values(), &g), g))
        .min_by(|a, b| (a.0, a.1.sequence()).cmp(&(b.0, b.1.sequence())))
        .unwrap()
}

/// A reproducible stream of random DAGs with `n` in `min_n..=max_n` and
/// arc density spread over `[0.05, 0.95]`.
pub fn random_dags(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Digraph> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let n = min_n + (rng.next_u64() % (max_n - min_n + 1) as u64) as usize;
            let p = 0.05 + 0.9 * rng.next_f64();
            generators::random_dag(n, p, rng.next_u64()).unwrap()
        })
        .collect()
}

/// The named families at size `n` (`k = n / 2` for the standard example).
pub fn named_families(n: usize) -> Vec<(String, Digraph)> {
    let mut out = vec![
        (format!("path({n})"), generators::path(n)),
        (format!("total_order({n})"), generators::total_order(n)),
        (format!("antichain({n})"), generators::antichain(n)),
        (
            format!("standard_example({})", n / 2),
            generators::standard_example(n / 2),
        ),
    ];
    if n == 4 {
        out.push(("figure1".into(), generators::figure1()));
    }
    out
}

/// Closures of every subset of the pairs `i < j`: each poset on `n`
/// elements appears at least once, under one or more labelings.
pub fn naturally_labeled_posets(n: usize) -> HashSet<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let arcs = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &a)| a);
            Digraph::new(n, arcs).unwrap().transitive_closure().unwrap()
        })
        .collect()
}
