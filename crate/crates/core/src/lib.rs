//! Verification engine for hereditary graph classes defined by forbidden
//! induced subgraphs: exact clique and chromatic numbers, induced-subgraph
//! detection, isomorph-free enumeration, linear chi-bound checks, the
//! critical-graph coloring lemma, and the necessity witnesses.

pub mod bits;
pub mod canon;
pub mod detect;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod lemma;
pub mod pattern;
pub mod report;
pub mod solve;
pub mod verify;
pub mod witnesses;

pub use canon::{canonical_form, canonical_label, is_isomorphic};
pub use detect::{find_induced, is_free, Embedding};
pub use graph::{Graph, GraphError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use pattern::Pattern;
pub use solve::{chromatic_number, clique_number, Coloring};
pub use verify::{GraphClass, VerificationRecord, REGISTRY};
