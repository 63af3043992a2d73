//! Simple digraphs on dense vertex indices `0..n`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple digraph on the vertices `0..n`.
///
/// Adjacency is kept in both directions as sorted lists, so arc membership
/// is a binary search and neighbourhoods come out in increasing order. Self
/// loops and repeated arcs are rejected at construction. Acyclicity is not
/// required here; operations that need it check for it.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ArcList", into = "ArcList")]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            match g.out[u].binary_search(&v) {
                Ok(_) => return Err(Error::DuplicateArc(u, v)),
                Err(pos) => g.out[u].insert(pos, v),
            }
            let pos = g.inn[v].binary_search(&u).unwrap_err();
            g.inn[v].insert(pos, u);
            g.arc_count += 1;
        }
        Ok(g)
    }

    /// Builds from arcs already known to be valid and distinct.
    fn from_out_lists(out: Vec<Vec<usize>>) -> Self {
        let n = out.len();
        let mut inn = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (u, succ) in out.iter().enumerate() {
            for &v in succ {
                inn[v].push(u);
                arc_count += 1;
            }
        }
        Digraph {
            out,
            inn,
            arc_count,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.vertex_count(),
            })
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, succ)| succ.iter().map(move |&v| (u, v)))
    }

    /// `N⁻(x)`: the sources of arcs into `x`, in increasing order.
    pub fn in_neighbors(&self, x: usize) -> Result<&[usize]> {
        self.check_vertex(x)?;
        Ok(&self.inn[x])
    }

    /// `N⁺(x)`: the targets of arcs out of `x`, in increasing order.
    pub fn out_neighbors(&self, x: usize) -> Result<&[usize]> {
        self.check_vertex(x)?;
        Ok(&self.out[x])
    }

    #[inline]
    pub(crate) fn successors(&self, x: usize) -> &[usize] {
        &self.out[x]
    }

    #[inline]
    pub(crate) fn predecessors(&self, x: usize) -> &[usize] {
        &self.inn[x]
    }

    pub fn in_degree(&self, x: usize) -> usize {
        self.inn[x].len()
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.out[x].len()
    }

    /// A vertex with no outgoing arc.
    pub fn is_maximal(&self, x: usize) -> bool {
        self.out[x].is_empty()
    }

    pub fn e_vector(&self) -> EVector {
        EVector(
            (0..self.vertex_count())
                .map(|x| self.in_degree(x) as i64 - self.out_degree(x) as i64)
                .collect(),
        )
    }

    /// Kahn's algorithm, always taking the smallest available vertex.
    /// Returns the vertex sequence, or `None` if a directed cycle blocks it.
    pub(crate) fn smallest_first_topological_sequence(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|x| self.in_degree(x)).collect();
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
        let mut seq = Vec::with_capacity(n);
        while let Some(Reverse(x)) = ready.pop() {
            seq.push(x);
            for &y in &self.out[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.push(Reverse(y));
                }
            }
        }
        (seq.len() == n).then_some(seq)
    }

    pub fn is_acyclic(&self) -> bool {
        self.smallest_first_topological_sequence().is_some()
    }

    pub(crate) fn require_acyclic(&self) -> Result<()> {
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::Cyclic)
        }
    }

    /// `D[X]`, re-indexed so that the `i`-th smallest member of `X` becomes
    /// vertex `i`. Duplicates in `X` are ignored.
    pub fn induced_subgraph<I>(&self, vertices: I) -> Result<InducedSubgraph>
    where
        I: IntoIterator<Item = usize>,
    {
        let kept: BTreeSet<usize> = vertices.into_iter().collect();
        for &x in &kept {
            self.check_vertex(x)?;
        }
        let kept: Vec<usize> = kept.into_iter().collect();
        let mut new_index = vec![None; self.vertex_count()];
        for (i, &x) in kept.iter().enumerate() {
            new_index[x] = Some(i);
        }
        let out = kept
            .iter()
            .map(|&x| self.out[x].iter().filter_map(|&y| new_index[y]).collect())
            .collect();
        Ok(InducedSubgraph {
            graph: Digraph::from_out_lists(out),
            map: IndexMap {
                to_original: kept,
                to_new: new_index,
            },
        })
    }

    /// Deletes one vertex; shorthand for the induced subgraph on the rest.
    pub fn remove_vertex(&self, z: usize) -> Result<InducedSubgraph> {
        self.check_vertex(z)?;
        self.induced_subgraph((0..self.vertex_count()).filter(|&x| x != z))
    }

    /// The comparability digraph of the order generated by the arcs.
    pub fn transitive_closure(&self) -> Result<Digraph> {
        let seq = self
            .smallest_first_topological_sequence()
            .ok_or(Error::Cyclic)?;
        let n = self.vertex_count();
        let words = n.div_ceil(64);
        let mut reach = vec![vec![0u64; words]; n];
        for &x in seq.iter().rev() {
            let mut row = vec![0u64; words];
            for &y in &self.out[x] {
                row[y / 64] |= 1 << (y % 64);
                for (w, r) in row.iter_mut().zip(&reach[y]) {
                    *w |= r;
                }
            }
            reach[x] = row;
        }
        let out = reach
            .iter()
            .map(|row| {
                (0..n)
                    .filter(|&y| row[y / 64] >> (y % 64) & 1 == 1)
                    .collect()
            })
            .collect();
        Ok(Digraph::from_out_lists(out))
    }

    pub fn is_transitive(&self) -> bool {
        self.arcs().all(|(u, v)| {
            self.out[v]
                .iter()
                .all(|&w| self.out[u].binary_search(&w).is_ok())
        })
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.vertex_count())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct ArcList {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<ArcList> for Digraph {
    type Error = Error;

    fn try_from(list: ArcList) -> Result<Self> {
        Digraph::new(list.n, list.arcs)
    }
}

impl From<Digraph> for ArcList {
    fn from(d: Digraph) -> Self {
        ArcList {
            n: d.vertex_count(),
            arcs: d.arcs().collect(),
        }
    }
}

/// Correspondence between a digraph's vertices and those of an induced
/// subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    to_original: Vec<usize>,
    to_new: Vec<Option<usize>>,
}

impl IndexMap {
    pub fn original(&self, new: usize) -> usize {
        self.to_original[new]
    }

    pub fn new_index(&self, original: usize) -> Option<usize> {
        self.to_new.get(original).copied().flatten()
    }

    /// Original indices of the kept vertices, in increasing order.
    pub fn kept(&self) -> &[usize] {
        &self.to_original
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Digraph,
    pub map: IndexMap,
}

/// Indegree minus outdegree, per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EVector(Vec<i64>);

impl EVector {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero for every digraph, since each arc enters and leaves once.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `⟨e,e⟩`, always even.
    pub fn norm_squared(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl Index<usize> for EVector {
    type Output = i64;

    fn index(&self, x: usize) -> &i64 {
        &self.0[x]
    }
}

impl AsRef<[i64]> for EVector {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for EVector {
    fn from(values: Vec<i64>) -> Self {
        EVector(values)
    }
}
