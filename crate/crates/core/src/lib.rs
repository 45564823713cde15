//! Signless Laplacian spectral extremal graphs on small vertex sets.
//!
//! Graphs are immutable bit-row values of order at most 64. On top of them
//! sit the named extremal families, a Jacobi eigensolver for `q(G)` (the top
//! eigenvalue of `D + A`), exact characteristic polynomials for tie-breaking,
//! a subgraph-containment engine, and exhaustive enumeration up to
//! isomorphism for orders up to 8.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod forbidden;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod table;
pub mod verify;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use spectral::{q_max, SpectralResult};
