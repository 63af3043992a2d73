//! Acyclic orderings, written as rank functions `g: V → 1..=n`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, IndexMap};

/// A bijection from the vertices `0..n` onto the ranks `1..=n`.
///
/// `ranks()[x]` is the position of vertex `x`. A ranking is an acyclic
/// ordering of a digraph when every arc goes from a lower to a higher rank;
/// that is a property of the pair and is checked by [`validate_ordering`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Ranking(Vec<usize>);

impl Ranking {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        if is_bijection(&ranks) {
            Ok(Ranking(ranks))
        } else {
            Err(Error::NotABijection(ranks))
        }
    }

    /// The ranking that lists the vertices in the order given.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        let n = sequence.len();
        let mut ranks = vec![0; n];
        for (i, &x) in sequence.iter().enumerate() {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if ranks[x] != 0 {
                return Err(Error::InvalidParam(format!(
                    "vertex {x} repeated in sequence"
                )));
            }
            ranks[x] = i + 1;
        }
        Ok(Ranking(ranks))
    }

    pub fn identity(n: usize) -> Self {
        Ranking((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self, x: usize) -> usize {
        self.0[x]
    }

    /// Vertices listed by increasing rank.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.len()];
        for (x, &r) in self.0.iter().enumerate() {
            seq[r - 1] = x;
        }
        seq
    }

    /// The vertex holding rank `n`.
    pub fn top(&self) -> Option<usize> {
        let n = self.len();
        self.0.iter().position(|&r| r == n)
    }

    pub fn to_vector(&self) -> Vec<i64> {
        self.0.iter().map(|&r| r as i64).collect()
    }

    /// The order induced on the vertices kept by `map`, re-ranked to
    /// `1..=m`. Deleting the top vertex leaves every other rank unchanged.
    pub fn restrict(&self, map: &IndexMap) -> Ranking {
        let mut kept: Vec<(usize, usize)> = map
            .kept()
            .iter()
            .enumerate()
            .map(|(new, &old)| (self.0[old], new))
            .collect();
        kept.sort_unstable();
        let mut ranks = vec![0; kept.len()];
        for (i, &(_, new)) in kept.iter().enumerate() {
            ranks[new] = i + 1;
        }
        Ranking(ranks)
    }
}

impl TryFrom<Vec<usize>> for Ranking {
    type Error = Error;

    fn try_from(ranks: Vec<usize>) -> Result<Self> {
        Ranking::new(ranks)
    }
}

impl From<Ranking> for Vec<usize> {
    fn from(r: Ranking) -> Self {
        r.0
    }
}

impl AsRef<[usize]> for Ranking {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Debug for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ranking{:?}", self.0)
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

fn is_bijection(ranks: &[usize]) -> bool {
    let n = ranks.len();
    let mut seen = vec![false; n];
    for &r in ranks {
        if r == 0 || r > n || seen[r - 1] {
            return false;
        }
        seen[r - 1] = true;
    }
    true
}

/// Whether `ranks` is a bijection onto `1..=n` that ranks every arc
/// upward. Only a length mismatch is an error.
pub fn validate_ordering(d: &Digraph, ranks: &[usize]) -> Result<bool> {
    check_len(d.vertex_count(), ranks.len())?;
    Ok(is_bijection(ranks) && d.arcs().all(|(u, v)| ranks[u] < ranks[v]))
}

/// Like [`validate_ordering`] but for an already-bijective ranking, naming
/// the first backward arc on failure.
pub fn require_ordering(d: &Digraph, g: &Ranking) -> Result<()> {
    check_len(d.vertex_count(), g.len())?;
    match d.arcs().find(|&(u, v)| g.rank(u) > g.rank(v)) {
        Some((u, v)) => Err(Error::InvalidOrdering(u, v)),
        None => Ok(()),
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// The acyclic ordering built by always placing the smallest-indexed
/// vertex whose predecessors are all placed. This is the first ordering
/// produced by [`enumerate_orderings`].
pub fn some_topological_ordering(d: &Digraph) -> Result<Ranking> {
    let seq = d
        .smallest_first_topological_sequence()
        .ok_or(Error::Cyclic)?;
    Ranking::from_sequence(&seq)
}

/// Streams every acyclic ordering of `d` exactly once, in lexicographic
/// order of the vertex sequence.
pub fn enumerate_orderings(d: &Digraph) -> Result<Orderings<'_>> {
    d.require_acyclic()?;
    Ok(Orderings::new(d))
}

/// Depth-first backtracking over placements. Memory is `O(n)` regardless of
/// how many orderings are produced.
pub struct Orderings<'a> {
    d: &'a Digraph,
    pending: Vec<usize>,
    placed: Vec<bool>,
    seq: Vec<usize>,
    // cursor[k] is the next vertex to try at depth k
    cursor: Vec<usize>,
    limit: Option<usize>,
    emitted: usize,
    nodes: u64,
    finished: bool,
    truncated: bool,
}

impl<'a> Orderings<'a> {
    fn new(d: &'a Digraph) -> Self {
        let n = d.vertex_count();
        Orderings {
            d,
            pending: (0..n).map(|x| d.in_degree(x)).collect(),
            placed: vec![false; n],
            seq: Vec::with_capacity(n),
            cursor: vec![0],
            limit: None,
            emitted: 0,
            nodes: 0,
            finished: false,
            truncated: false,
        }
    }

    /// Stop after `max` orderings. [`Orderings::truncated`] then tells
    /// whether any were left out.
    pub fn with_limit(mut self, max: usize) -> Self {
        self.limit = Some(max);
        self
    }

    /// True once the stream has ended early because of the limit.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Vertex placements made so far, i.e. the number of non-root nodes
    /// of the prefix tree that have been visited.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes
    }

    fn place(&mut self, x: usize) {
        self.placed[x] = true;
        for &y in self.d.successors(x) {
            self.pending[y] -= 1;
        }
        self.seq.push(x);
        self.nodes += 1;
    }

    fn unplace(&mut self) -> Option<usize> {
        let x = self.seq.pop()?;
        self.placed[x] = false;
        for &y in self.d.successors(x) {
            self.pending[y] += 1;
        }
        Some(x)
    }

    fn advance(&mut self) -> bool {
        let n = self.d.vertex_count();
        if self.seq.len() == n && self.emitted > 0 {
            self.cursor.pop();
            if self.unplace().is_none() {
                return false;
            }
        }
        loop {
            let depth = self.seq.len();
            if depth == n {
                return true;
            }
            let next = (self.cursor[depth]..n).find(|&x| !self.placed[x] && self.pending[x] == 0);
            match next {
                Some(x) => {
                    self.cursor[depth] = x + 1;
                    self.place(x);
                    self.cursor.push(0);
                }
                None => {
                    self.cursor.pop();
                    if self.unplace().is_none() {
                        return false;
                    }
                }
            }
        }
    }
}

impl Iterator for Orderings<'_> {
    type Item = Ranking;

    fn next(&mut self) -> Option<Ranking> {
        if self.finished {
            return None;
        }
        let more = self.advance();
        if !more {
            self.finished = true;
            return None;
        }
        if self.limit.is_some_and(|max| self.emitted >= max) {
            self.finished = true;
            self.truncated = true;
            return None;
        }
        self.emitted += 1;
        Some(Ranking::from_sequence(&self.seq).expect("a full placement is a permutation"))
    }
}

/// `Σ u(x)·v(x)`.
pub fn inner_product(u: &[i64], v: &[i64]) -> Result<i64> {
    check_len(u.len(), v.len())?;
    Ok(u.iter().zip(v).map(|(a, b)| a * b).sum())
}

/// `⟨e,g⟩` for a ranking of matching length.
pub(crate) fn functional(e: &[i64], g: &Ranking) -> i64 {
    debug_assert_eq!(e.len(), g.len());
    e.iter().zip(g.ranks()).map(|(&a, &r)| a * r as i64).sum()
}

/// Total rank distance `Σ g(y) − g(x)` over all arcs `(x,y)`. Equals
/// `⟨e,g⟩`.
pub fn arc_weight_sum(d: &Digraph, g: &Ranking) -> Result<i64> {
    require_ordering(d, g)?;
    Ok(d.arcs()
        .map(|(x, y)| g.rank(y) as i64 - g.rank(x) as i64)
        .sum())
}

/// Mean rank distance per arc, as an exact fraction.
pub fn average_relational_distance(d: &Digraph, g: &Ranking) -> Result<Ratio<i64>> {
    let total = arc_weight_sum(d, g)?;
    if d.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    Ok(Ratio::new(total, d.arc_count() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure1() -> Digraph {
        Digraph::new(4, [(0, 2), (1, 2), (1, 3)]).unwrap()
    }

    fn path(n: usize) -> Digraph {
        Digraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn total_order(n: usize) -> Digraph {
        path(n).transitive_closure().unwrap()
    }

    fn r(ranks: &[usize]) -> Ranking {
        Ranking::new(ranks.to_vec()).unwrap()
    }

    #[test]
    fn ranking_construction() {
        assert!(Ranking::new(vec![2, 1, 3]).is_ok());
        assert!(Ranking::new(vec![0, 1, 2]).is_err());
        assert!(Ranking::new(vec![1, 1, 2]).is_err());
        assert!(Ranking::new(vec![]).is_ok());
        let g = Ranking::from_sequence(&[2, 0, 1]).unwrap();
        assert_eq!(g.ranks(), &[2, 3, 1]);
        assert_eq!(g.sequence(), vec![2, 0, 1]);
        assert_eq!(g.top(), Some(1));
        assert!(Ranking::from_sequence(&[0, 0]).is_err());
        assert_eq!(g.to_string(), "(2,3,1)");
    }

    #[test]
    fn restriction_compresses_ranks() {
        let g = r(&[3, 1, 4, 2]);
        let sub = figure1().remove_vertex(0).unwrap();
        assert_eq!(g.restrict(&sub.map).ranks(), &[1, 3, 2]);
        let sub = figure1().remove_vertex(2).unwrap();
        assert_eq!(g.restrict(&sub.map).ranks(), &[3, 1, 2]);
    }

    #[test]
    fn validation() {
        assert!(validate_ordering(&figure1(), &[1, 2, 3, 4]).unwrap());
        assert!(!validate_ordering(&path(3), &[2, 1, 3]).unwrap());
        assert!(!validate_ordering(&path(3), &[1, 1, 3]).unwrap());
        for g in [[1, 2, 3], [3, 1, 2], [2, 3, 1], [3, 2, 1]] {
            assert!(validate_ordering(&Digraph::empty(3), &g).unwrap());
        }
        assert_eq!(
            validate_ordering(&path(3), &[1, 2]),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        );
        assert_eq!(
            require_ordering(&path(3), &r(&[2, 1, 3])),
            Err(Error::InvalidOrdering(0, 1))
        );
    }

    #[test]
    fn smallest_first() {
        assert_eq!(
            some_topological_ordering(&path(4)).unwrap(),
            r(&[1, 2, 3, 4])
        );
        assert_eq!(
            some_topological_ordering(&Digraph::empty(3)).unwrap(),
            r(&[1, 2, 3])
        );
        assert_eq!(
            some_topological_ordering(&figure1()).unwrap(),
            r(&[1, 2, 3, 4])
        );
        // 2 must wait for 1, but 0 is free
        let d = Digraph::new(3, [(2, 0)]).unwrap();
        assert_eq!(
            some_topological_ordering(&d).unwrap().sequence(),
            vec![1, 2, 0]
        );
        let cyc = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(some_topological_ordering(&cyc), Err(Error::Cyclic));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_orderings(&path(4)).unwrap().count(), 1);
        assert_eq!(enumerate_orderings(&Digraph::empty(3)).unwrap().count(), 6);
        assert_eq!(enumerate_orderings(&figure1()).unwrap().count(), 5);
        assert_eq!(enumerate_orderings(&Digraph::empty(0)).unwrap().count(), 1);
        let cyc = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(enumerate_orderings(&cyc).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let seqs: Vec<Vec<usize>> = enumerate_orderings(&Digraph::empty(3))
            .unwrap()
            .map(|g| g.sequence())
            .collect();
        let mut sorted = seqs.clone();
        sorted.sort();
        assert_eq!(seqs, sorted);
        assert_eq!(seqs[0], vec![0, 1, 2]);
    }

    #[test]
    fn enumeration_limit() {
        let d = Digraph::empty(3);
        let mut it = enumerate_orderings(&d).unwrap().with_limit(4);
        assert_eq!(it.by_ref().count(), 4);
        assert!(it.truncated());

        let d = figure1();
        let mut it = enumerate_orderings(&d).unwrap().with_limit(5);
        assert_eq!(it.by_ref().count(), 5);
        assert!(!it.truncated());
    }

    #[test]
    fn inner_products() {
        assert_eq!(inner_product(&[-1, -2, 2, 1], &[1, 2, 3, 4]), Ok(5));
        assert_eq!(inner_product(&[-1, -2, 2, 1], &[-1, -2, 2, 1]), Ok(10));
        assert_eq!(inner_product(&[0, 0, 0], &[5, -3, 9]), Ok(0));
        assert!(inner_product(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn arc_weights() {
        assert_eq!(arc_weight_sum(&path(4), &r(&[1, 2, 3, 4])), Ok(3));
        assert_eq!(arc_weight_sum(&figure1(), &r(&[1, 2, 3, 4])), Ok(5));
        assert_eq!(arc_weight_sum(&Digraph::empty(3), &r(&[3, 1, 2])), Ok(0));
        assert!(arc_weight_sum(&path(3), &r(&[2, 1, 3])).is_err());
    }

    #[test]
    fn relational_distance() {
        let p = path(10);
        let g = some_topological_ordering(&p).unwrap();
        assert_eq!(
            average_relational_distance(&p, &g),
            Ok(Ratio::from_integer(1))
        );
        assert_eq!(
            average_relational_distance(&figure1(), &r(&[1, 2, 3, 4])),
            Ok(Ratio::new(5, 3))
        );
        assert_eq!(
            average_relational_distance(&total_order(3), &r(&[1, 2, 3])),
            Ok(Ratio::new(4, 3))
        );
        assert_eq!(
            average_relational_distance(&Digraph::empty(2), &r(&[1, 2])),
            Err(Error::NoArcs)
        );
    }
}
