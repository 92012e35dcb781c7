use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZxError {
    #[error("arity mismatch: left side has {left} wires, right side has {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("scalar is not of the form sqrt2^r * w^s")]
    NotInvertible,
    #[error("scalar is not a stabilizer scalar")]
    NotStabilizerScalar,
    #[error("interpretation index must be odd, got {0}")]
    EvenIndex(i64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("redex no longer matches the diagram")]
    RedexInvalid,
    #[error("rule cannot be applied in this direction: {0}")]
    NotApplicable(String),
    #[error("invalid vertex {0}")]
    InvalidVertex(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    EdgeRequired(usize, usize),
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    #[error("node {node} has phase {phase}, outside the stabilizer fragment")]
    FragmentViolation { node: usize, phase: u8 },
    #[error("diagram denotes zero")]
    ZeroDiagram,
    #[error("check matrix does not describe a maximal stabilizer group")]
    NotMaximal,
    #[error("local Clifford orbit search exceeded its bound")]
    SearchBoundExceeded,
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("parse error: {0}")]
    Parse(String),
}
