//! The lower bound `⟨e,g⟩ ≥ ½⟨e,e⟩` and the counting facts behind it.
//!
//! Everything here works with the doubled gap `2⟨e,g⟩ − ⟨e,e⟩` so that no
//! halves ever appear.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::orderings::{functional, require_ordering, Ranking};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// `⟨e,g⟩`
    pub eg: i64,
    /// `⟨e,e⟩`
    pub ee: i64,
    /// `2⟨e,g⟩ − ⟨e,e⟩`, never negative for an acyclic ordering.
    pub gap2: i64,
}

impl BoundReport {
    pub fn is_equality(&self) -> bool {
        self.gap2 == 0
    }

    /// `½⟨e,e⟩`, exact because `⟨e,e⟩` is even.
    pub fn floor(&self) -> i64 {
        self.ee / 2
    }
}

/// Evaluates the bound for an acyclic ordering `g` of `d`.
///
/// A negative gap cannot happen for a valid ordering and is reported as
/// [`Error::PropertyViolation`].
pub fn bound_report(d: &Digraph, g: &Ranking) -> Result<BoundReport> {
    require_ordering(d, g)?;
    let e = d.e_vector();
    let eg = functional(e.values(), g);
    let ee = e.norm_squared();
    let report = BoundReport {
        eg,
        ee,
        gap2: 2 * eg - ee,
    };
    if report.gap2 < 0 || ee % 2 != 0 {
        return Err(Error::PropertyViolation(format!(
            "bound fails for ordering {g}: 2<e,g> - <e,e> = {}",
            report.gap2
        )));
    }
    Ok(report)
}

fn check_subset(s: &BTreeSet<usize>, n: usize) -> Result<()> {
    match s.iter().find(|&&x| x == 0 || x > n) {
        Some(&x) => Err(Error::InvalidParam(format!("{x} is not in 1..={n}"))),
        None => Ok(()),
    }
}

/// Number of pairs `(s,t)` with `s ∈ S`, `t ∈ [1,n] \ S` and `s < t`.
pub fn insertion_pairs(s: &BTreeSet<usize>, n: usize) -> Result<u64> {
    check_subset(s, n)?;
    // each s sees n - s larger values, of which those in S don't count
    Ok(s.iter()
        .enumerate()
        .map(|(i, &si)| ((n - si) - (s.len() - 1 - i)) as u64)
        .sum())
}

/// Checks both counting bounds on a subset `S = {s₁ < … < s_m}` with `k`
/// insertion pairs:
///
/// * `k ≤ Σᵢ [(n − sᵢ) − (m − i)]`
/// * `Σᵢ sᵢ ≤ m(2n − m + 1)/2 − k`
pub fn insertion_pair_bounds_check(s: &BTreeSet<usize>, n: usize) -> Result<bool> {
    let k = insertion_pairs(s, n)? as i64;
    let n = n as i64;
    let m = s.len() as i64;
    let per_element: i64 = s
        .iter()
        .zip(1..)
        .map(|(&si, i)| (n - si as i64) - (m - i))
        .sum();
    let sum: i64 = s.iter().map(|&si| si as i64).sum();
    Ok(k <= per_element && sum <= m * (2 * n - m + 1) / 2 - k)
}

/// Both sides of the insertion inequality for deleting a maximal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionInequality {
    /// `Σ_{x∈N⁻(z)} [e(x) − g(x)] + n·m`
    pub lhs: i64,
    /// `m(m−1)/2`
    pub rhs: i64,
}

impl InsertionInequality {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// Evaluates the inequality used to add one maximal vertex `z` in the
/// inductive proof of the bound.
///
/// `z` must be maximal in `d1` and ranked last by `g1`. The quantities `e`,
/// `g` and `n` are taken on `d1` with `z` deleted, and `m = |N⁻(z)|`.
pub fn lemma1_terms(d1: &Digraph, g1: &Ranking, z: usize) -> Result<InsertionInequality> {
    d1.check_vertex(z)?;
    require_ordering(d1, g1)?;
    if !d1.is_maximal(z) {
        return Err(Error::Precondition(format!("vertex {z} is not maximal")));
    }
    if g1.rank(z) != g1.len() {
        return Err(Error::Precondition(format!(
            "vertex {z} is not ranked last"
        )));
    }
    let sub = d1.remove_vertex(z)?;
    let e = sub.graph.e_vector();
    let g = g1.restrict(&sub.map);
    let n = sub.graph.vertex_count() as i64;
    let preds = d1.predecessors(z);
    let m = preds.len() as i64;
    let diff: i64 = preds
        .iter()
        .map(|&x| {
            let x = sub.map.new_index(x).expect("predecessor of z is kept");
            e[x] - g.rank(x) as i64
        })
        .sum();
    Ok(InsertionInequality {
        lhs: diff + n * m,
        rhs: m * (m - 1) / 2,
    })
}

pub fn lemma1_check(d1: &Digraph, g1: &Ranking, z: usize) -> Result<bool> {
    lemma1_terms(d1, g1, z).map(|t| t.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn figure1() -> Digraph {
        Digraph::new(4, [(0, 2), (1, 2), (1, 3)]).unwrap()
    }

    fn path(n: usize) -> Digraph {
        Digraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn reports() {
        let r = bound_report(&figure1(), &Ranking::identity(4)).unwrap();
        assert_eq!(
            r,
            BoundReport {
                eg: 5,
                ee: 10,
                gap2: 0
            }
        );
        assert!(r.is_equality());
        assert_eq!(r.floor(), 5);

        let r = bound_report(&path(4), &Ranking::identity(4)).unwrap();
        assert_eq!(
            r,
            BoundReport {
                eg: 3,
                ee: 2,
                gap2: 4
            }
        );

        let r = bound_report(&Digraph::empty(1), &Ranking::identity(1)).unwrap();
        assert_eq!(
            r,
            BoundReport {
                eg: 0,
                ee: 0,
                gap2: 0
            }
        );
    }

    #[test]
    fn report_rejects_bad_ordering() {
        let g = Ranking::new(vec![2, 1, 3, 4]).unwrap();
        assert_eq!(
            bound_report(&path(4), &g),
            Err(Error::InvalidOrdering(0, 1))
        );
        assert!(matches!(
            bound_report(&path(4), &Ranking::identity(3)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn counting_pairs() {
        assert_eq!(insertion_pairs(&set(&[1, 3]), 5), Ok(5));
        assert_eq!(insertion_pairs(&set(&[]), 7), Ok(0));
        assert_eq!(insertion_pairs(&set(&[1, 2, 3, 4]), 4), Ok(0));
        assert!(insertion_pairs(&set(&[0]), 4).is_err());
        assert!(insertion_pairs(&set(&[5]), 4).is_err());
    }

    #[test]
    fn insertion_bounds() {
        // 9 - 5 = 4 = 1 + 3, tight
        assert_eq!(insertion_pair_bounds_check(&set(&[1, 3]), 5), Ok(true));
        for n in 1..8 {
            assert_eq!(insertion_pair_bounds_check(&set(&[n]), n), Ok(true));
        }
    }

    #[test]
    fn insertion_inequality_on_total_order() {
        let t = path(3).transitive_closure().unwrap();
        let terms = lemma1_terms(&t, &Ranking::identity(3), 2).unwrap();
        assert_eq!(terms, InsertionInequality { lhs: 1, rhs: 1 });
    }

    #[test]
    fn insertion_inequality_on_single_arc() {
        let d = path(2);
        let terms = lemma1_terms(&d, &Ranking::identity(2), 1).unwrap();
        assert_eq!(terms, InsertionInequality { lhs: 0, rhs: 0 });
        assert_eq!(lemma1_check(&d, &Ranking::identity(2), 1), Ok(true));
    }

    #[test]
    fn insertion_inequality_preconditions() {
        let d = figure1();
        let g = Ranking::identity(4);
        // vertex 1 has out-arcs
        assert!(matches!(
            lemma1_check(&d, &g, 1),
            Err(Error::Precondition(_))
        ));
        // vertex 2 is maximal but not last
        assert!(matches!(
            lemma1_check(&d, &g, 2),
            Err(Error::Precondition(_))
        ));
        assert_eq!(lemma1_check(&d, &g, 3), Ok(true));
    }
}
