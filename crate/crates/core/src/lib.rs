//! Exact machinery for thin-tree verification and the reduction chain
//! MaxCut -> MaxAvgCutOpt -> MaxAvgCut -> ThinTreeValid^C.
//!
//! The crate is organised around four layers:
//!
//! - [`graph`]: multigraphs, canonical cuts, contraction, and exact cut
//!   statistics (all rational arithmetic, no floating point on any
//!   verdict-affecting path);
//! - [`oracle`]: exponential-time ground-truth solvers for MaxCut,
//!   MaxAvgCutOpt, MaxAvgCut, and the thin-tree verifier with
//!   violating-cut certificates;
//! - [`reduce`]: the two oracle (Turing) reductions, the clique-gadget
//!   Karp map (G, w, k) -> (G', T, alpha), and cut lifting/projection;
//! - [`harness`]: seeded instance generation, lemma checkers, and the
//!   end-to-end chain verification behind the `thintree` CLI.

pub mod cli;
mod dsu;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod reduce;

pub use error::{Error, Result};
pub use graph::{canonical_cuts, Cut, EdgeId, Multigraph, SignedWeights};
pub use oracle::{SpanningTree, ThinnessVerdict};
pub use rational::{format_rational, parse_rational, rational, Rational};
pub use reduce::GadgetInstance;
