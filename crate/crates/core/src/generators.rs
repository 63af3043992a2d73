//! Named instance families.
//!
//! `random_dag` is reproducible across platforms and easy to reimplement:
//!
//! 1. Seed a SplitMix64 generator with `seed`. Each step adds
//!    `0x9E3779B97F4A7C15` to the 64-bit state (wrapping) and outputs
//!    `z ^ (z >> 31)` where `z` is the new state passed through
//!    `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9` and then
//!    `z = (z ^ (z >> 27)) * 0x94D049BB133111EB` (wrapping products).
//! 2. For `i` in `0..n` and then `j` in `i+1..n`, draw one output `r` and
//!    keep the arc `(i, j)` when `(r >> 11) as f64 * 2⁻⁵³ < p`.
//! 3. Start from the identity permutation `π` on `0..n`. For `i` from `n−1`
//!    down to `1`, draw `r` and swap `π[i]` with `π[r mod (i+1)]`.
//! 4. Every kept arc `(i, j)` becomes `(π[i], π[j])`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    TotalOrder,
    Antichain,
    StandardExample,
    RandomDag,
    Figure1,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::TotalOrder,
        Family::Antichain,
        Family::StandardExample,
        Family::RandomDag,
        Family::Figure1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::TotalOrder => "total_order",
            Family::Antichain => "antichain",
            Family::StandardExample => "standard_example",
            Family::RandomDag => "random_dag",
            Family::Figure1 => "figure1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown family {s:?}")))
    }
}

/// Parameters for [`generate`]. `n` is the vertex count, except for the
/// standard example where it is `k` (giving `2k` vertices); `figure1`
/// ignores it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params { n, p: 0.5, seed: 0 }
    }
}

pub fn generate(family: Family, params: Params) -> Result<Digraph> {
    match family {
        Family::Path => Ok(path(params.n)),
        Family::TotalOrder => Ok(total_order(params.n)),
        Family::Antichain => Ok(antichain(params.n)),
        Family::StandardExample => Ok(standard_example(params.n)),
        Family::RandomDag => random_dag(params.n, params.p, params.seed),
        Family::Figure1 => Ok(figure1()),
    }
}

/// `0 → 1 → … → n−1`.
pub fn path(n: usize) -> Digraph {
    Digraph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid arcs")
}

pub fn total_order(n: usize) -> Digraph {
    Digraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid arcs")
}

pub fn antichain(n: usize) -> Digraph {
    Digraph::empty(n)
}

/// `Sₖ`: vertices `aᵢ = i` and `bⱼ = k + j` for `0 ≤ i, j < k`, with
/// `aᵢ < bⱼ` exactly when `i ≠ j`.
pub fn standard_example(k: usize) -> Digraph {
    let arcs = (0..k).flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, k + j)));
    Digraph::new(2 * k, arcs).expect("valid arcs")
}

/// The four-element poset `{(0,2), (1,2), (1,3)}`, realized by the
/// rankings `(3,1,4,2)` and `(1,2,3,4)`.
pub fn figure1() -> Digraph {
    Digraph::new(4, [(0, 2), (1, 2), (1, 3)]).expect("valid arcs")
}

pub fn random_dag(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParam(format!("p = {p} is not in [0, 1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                arcs.push((i, j));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    Digraph::new(n, arcs.into_iter().map(|(i, j)| (perm[i], perm[j])))
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
