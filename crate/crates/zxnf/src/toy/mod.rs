//! The red-green calculus for Spekkens' toy bit theory.

pub mod audit;
pub mod diagram;
pub mod gslo;
pub mod local;
pub mod rules;
pub mod semantics;

pub use diagram::{ToyDiagram, ToyNode, ToyPhase};
pub use gslo::{diagram_to_gslo, equal_toy, normalize_toy, GsLo, ToyForm, ToyVerdict};
pub use local::LocalOp;
pub use semantics::{interpret_affine, interpret_toy, AffineSet, ToyRelation};
pub use rules::{apply_toy, find_toy_redexes, find_toy_redexes_dir, ToyRedex, ToyRuleId};
pub use audit::{audit_toy_rules, ToyAuditReport};
