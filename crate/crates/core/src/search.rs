//! Minimizing `⟨e,g⟩` over the acyclic orderings of a digraph.
//!
//! Two independent routes compute the same answer: [`minimize_eg_exhaustive`]
//! walks every ordering, [`minimize_eg_bnb`] prunes the same prefix tree. Ties
//! always go to the lexicographically smallest vertex sequence, so the two
//! agree on the minimizer as well as the value.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::orderings::{enumerate_orderings, functional, some_topological_ordering, Ranking};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub min_eg: i64,
    pub argmin: Ranking,
    /// Vertex placements made, one per visited node of the prefix tree.
    pub explored: u64,
    /// False only when a node budget stopped the search early.
    pub proven_optimal: bool,
}

/// Brute-force minimum over every acyclic ordering. Refuses digraphs with
/// more than `cap` vertices.
pub fn minimize_eg_exhaustive(d: &Digraph, cap: usize) -> Result<SearchResult> {
    let n = d.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let e = d.e_vector();
    let mut orderings = enumerate_orderings(d)?;
    let mut best: Option<(i64, Ranking)> = None;
    for g in orderings.by_ref() {
        let value = functional(e.values(), &g);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, g));
        }
    }
    let (min_eg, argmin) = best.expect("an acyclic digraph has an ordering");
    Ok(SearchResult {
        min_eg,
        argmin,
        explored: orderings.nodes_visited(),
        proven_optimal: true,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BnbOptions {
    /// Stop after this many node visits and report the best ordering seen.
    pub budget: Option<u64>,
    /// Split the first branching level across worker threads. The result
    /// is identical to the sequential one; `explored` may differ.
    pub parallel: bool,
}

pub fn minimize_eg_bnb(d: &Digraph) -> Result<SearchResult> {
    minimize_eg_bnb_with(d, BnbOptions::default())
}

/// Depth-first branch and bound that hands out ranks `1, 2, …` to
/// currently minimal vertices, smallest index first.
///
/// A partial assignment is discarded once its cost plus a relaxation of the
/// remaining cost can no longer beat the incumbent. The relaxation drops the
/// arc constraints and pairs the remaining e-values, largest first, with the
/// remaining ranks, smallest first; by the rearrangement inequality no
/// completion does better. The search stops as soon as the incumbent reaches
/// `½⟨e,e⟩`, which no ordering can undercut.
pub fn minimize_eg_bnb_with(d: &Digraph, options: BnbOptions) -> Result<SearchResult> {
    let seed = some_topological_ordering(d)?;
    let e = d.e_vector();
    let ee = e.norm_squared();
    let seed_value = functional(e.values(), &seed);
    let seed_seq = seed.sequence();

    let mut by_e_desc: Vec<usize> = (0..d.vertex_count()).collect();
    by_e_desc.sort_by_key(|&x| std::cmp::Reverse(e[x]));

    let shared = Shared {
        d,
        e: e.values(),
        ee,
        by_e_desc: &by_e_desc,
        budget: options.budget,
        spent: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };

    let incumbent = Incumbent {
        value: seed_value,
        seq: seed_seq,
    };
    if 2 * seed_value == ee {
        return Ok(SearchResult {
            min_eg: seed_value,
            argmin: seed,
            explored: 0,
            proven_optimal: true,
        });
    }

    let (best, explored) = if options.parallel {
        let roots: Vec<usize> = (0..d.vertex_count())
            .filter(|&x| d.in_degree(x) == 0)
            .collect();
        let parts: Vec<(Incumbent, u64)> = roots
            .par_iter()
            .map(|&root| {
                let mut worker = Worker::new(&shared, incumbent.clone());
                worker.branch(root);
                (worker.best, worker.explored)
            })
            .collect();
        let explored = parts.iter().map(|(_, n)| n).sum();
        let best = parts
            .into_iter()
            .map(|(b, _)| b)
            .min_by(|a, b| (a.value, &a.seq).cmp(&(b.value, &b.seq)))
            .unwrap_or(incumbent);
        (best, explored)
    } else {
        let mut worker = Worker::new(&shared, incumbent);
        worker.search();
        (worker.best, worker.explored)
    };

    debug_assert!(2 * best.value >= ee);
    Ok(SearchResult {
        min_eg: best.value,
        argmin: Ranking::from_sequence(&best.seq)?,
        explored,
        proven_optimal: !shared.exhausted.load(AtomicOrdering::Relaxed),
    })
}

struct Shared<'a> {
    d: &'a Digraph,
    e: &'a [i64],
    ee: i64,
    by_e_desc: &'a [usize],
    budget: Option<u64>,
    spent: AtomicU64,
    exhausted: AtomicBool,
}

#[derive(Clone)]
struct Incumbent {
    value: i64,
    seq: Vec<usize>,
}

struct Worker<'a, 's> {
    shared: &'s Shared<'a>,
    pending: Vec<usize>,
    placed: Vec<bool>,
    seq: Vec<usize>,
    cost: i64,
    best: Incumbent,
    explored: u64,
    stop: bool,
}

impl<'a, 's> Worker<'a, 's> {
    fn new(shared: &'s Shared<'a>, best: Incumbent) -> Self {
        let d = shared.d;
        let n = d.vertex_count();
        Worker {
            shared,
            pending: (0..n).map(|x| d.in_degree(x)).collect(),
            placed: vec![false; n],
            seq: Vec::with_capacity(n),
            cost: 0,
            best,
            explored: 0,
            stop: false,
        }
    }

    /// Cheapest conceivable cost of ranking the unplaced vertices with the
    /// ranks after `self.seq.len()`, ignoring arcs.
    fn relaxation(&self) -> i64 {
        let mut rank = self.seq.len() as i64;
        let mut total = 0;
        for &x in self.shared.by_e_desc {
            if !self.placed[x] {
                rank += 1;
                total += self.shared.e[x] * rank;
            }
        }
        total
    }

    fn search(&mut self) {
        let n = self.shared.d.vertex_count();
        if self.seq.len() == n {
            if self.cost < self.best.value {
                self.best = Incumbent {
                    value: self.cost,
                    seq: self.seq.clone(),
                };
                if 2 * self.cost == self.shared.ee {
                    self.stop = true;
                }
            }
            return;
        }
        for x in 0..n {
            if self.stop {
                return;
            }
            if !self.placed[x] && self.pending[x] == 0 {
                self.branch(x);
            }
        }
    }

    fn branch(&mut self, x: usize) {
        if let Some(budget) = self.shared.budget {
            if self.shared.spent.fetch_add(1, AtomicOrdering::Relaxed) >= budget {
                self.shared.exhausted.store(true, AtomicOrdering::Relaxed);
                self.stop = true;
                return;
            }
        }
        let d = self.shared.d;
        let rank = self.seq.len() as i64 + 1;
        self.placed[x] = true;
        for &y in d.successors(x) {
            self.pending[y] -= 1;
        }
        self.seq.push(x);
        self.cost += self.shared.e[x] * rank;
        self.explored += 1;

        if self.cost + self.relaxation() < self.best.value {
            self.search();
        }

        self.cost -= self.shared.e[x] * rank;
        self.seq.pop();
        for &y in d.successors(x) {
            self.pending[y] += 1;
        }
        self.placed[x] = false;
    }
}
