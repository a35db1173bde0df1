//! Bicliques and co-bicliques in bipartite graphs with a forbidden induced
//! subgraph: exact solvers for the largest balanced (co-)biclique, the
//! strongly-acyclic pattern classification, constructive linear-size
//! certificate extractors per forbidden family, tight extremal
//! constructions, an embedding dichotomy, and randomized resampling
//! colorings — all with independently checkable outputs.

pub mod bitset;
pub mod classify;
pub mod construct;
pub mod error;
pub mod extract;
pub mod graph;
pub mod harness;
pub mod patterns;
pub mod solve;
pub mod tree;

pub use bitset::BitSet;
pub use classify::{classify, enumerate_strongly_acyclic, is_strongly_acyclic, PatternClass, PatternTag};
pub use extract::Dichotomy;
pub use graph::{find_induced_copy, shortest_cycle, BipartiteGraph, CycleWitness, Embedding};
pub use solve::{forb_min, tilde_alpha, tilde_h, tilde_omega, CertKind, Certificate};
pub use tree::{tree_split, RootedTree, TreeSplit};
