//! Exact rewriting and normal forms for the stabilizer ZX-calculus.
//!
//! The crate covers diagram semantics over `Z[1/2, w]`, a sound rewrite
//! engine with a rule audit, normal forms for scalars, stabilizer states and
//! operators (GS-LC and reduced GS-LC), single-qubit Clifford+T circuits,
//! check matrices, and the red-green calculus for Spekkens' toy theory.

pub mod audit;
pub mod check_matrix;
pub mod clifford;
pub mod clifford_t;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod format;
pub mod graph;
pub mod gslc;
pub mod random;
pub mod rewrite;
pub mod ring;
pub mod scalar_nf;
pub mod semantics;
pub mod stabilizer_nf;
pub mod tensor;
pub mod toy;

pub use diagram::{Colour, Diagram, Phase8, ZxNode};
pub use error::ZxError;
pub use graph::{structurally_equal, NodeId, OpenGraph};
pub use ring::RingScalar;
pub use semantics::{interpret, interpret_j, ExactMatrix};
