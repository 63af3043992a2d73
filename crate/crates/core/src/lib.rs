//! E-vectors and orderings of finite acyclic digraphs.
//!
//! For an acyclic digraph `D` let `e(x)` be the indegree minus the outdegree
//! of `x`. Every acyclic ordering `g: V → 1..=n` satisfies
//!
//! ```text
//! ⟨e,g⟩ ≥ ½⟨e,e⟩
//! ```
//!
//! and equality is attained exactly by the posets of order dimension at most
//! two, in which case `f = n + 1 − g + e` completes `g` to a realizer.
//!
//! The crate is organized by layer:
//!
//! * [`graph`]: the [`Digraph`] type, e-vectors, closures and subgraphs;
//! * [`orderings`]: [`Ranking`]s, validation, enumeration and inner products;
//! * [`bound`]: the bound itself and the counting lemmas behind it;
//! * [`search`]: exact minimization of `⟨e,g⟩`, exhaustive and pruned;
//! * [`dim_two`]: certification of dimension at most two;
//! * [`io`] and [`generators`]: the arc-list format and named families.
//!
//! ```
//! use dagbound::{generators, orderings::Ranking, bound::bound_report};
//!
//! let d = generators::figure1();
//! let report = bound_report(&d, &Ranking::identity(4)).unwrap();
//! assert_eq!((report.eg, report.ee), (5, 10));
//! assert!(report.is_equality());
//! ```

pub mod bound;
pub mod dim_two;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod orderings;
pub mod search;

pub use error::{Error, ErrorKind, Result};
pub use graph::{Digraph, EVector};
pub use orderings::Ranking;

// The guide's code blocks are compiled and run by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/evector.md")]
    mod evector {}
    #[doc = include_str!("../../../book/src/orderings.md")]
    mod orderings {}
    #[doc = include_str!("../../../book/src/bound.md")]
    mod bound {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/dimension_two.md")]
    mod dimension_two {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}
