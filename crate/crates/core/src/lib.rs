//! Shortest token-jumping transformations between matchings.
//!
//! Two matchings of equal size are adjacent when one can be turned into the
//! other by removing one edge and adding another. The crate computes exact
//! distances in this configuration graph (polynomially when a matching has
//! slack, via directed Steiner trees for bipartite graphs in general), decides
//! reachability and connectivity, and generates hard instance families. An
//! exhaustive breadth-first oracle is included for cross-checking.

pub mod dst;
pub mod enumerate;
pub mod fpt;
pub mod gadgets;
pub mod graph;
pub mod matching;
pub mod reconfig;
pub mod slack;
pub mod steiner;

pub use fpt::{bipartite_distance, FptAnswer};
pub use graph::{parse_instance, Graph, Instance, Matching};
pub use reconfig::{oracle_distance, validate_sequence, Distance, Exchange, ReconfigSequence};

/// Steiner instances as produced by the matching reduction (small integer costs).
pub type SteinerInstance = steiner::SteinerInstance<u32>;
pub type SteinerTree = steiner::SteinerTree<u32>;
