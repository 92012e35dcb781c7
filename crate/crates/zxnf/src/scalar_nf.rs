//! Normal forms for stabilizer scalars.
//!
//! Every nonzero stabilizer scalar is `sqrt2^r * w^s`. As a diagram it is a
//! fixed representative for the phase `w^s` built from green-red pairs, then
//! a remainder made of phase-free pairs (each `sqrt2`) or stars (each `1/2`).
//! Zero is a single green scalar spider with phase pi.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::diagram::{empty, pair, scalar_spider, star, Colour, Diagram, Phase8, ZxNode};
use crate::error::ZxError;
use crate::graph::{structurally_equal, NodeId};
use crate::semantics::interpret;
use crate::ring::RingScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarNF {
    Zero,
    /// `sqrt2^r * w^s`, `s` in `0..8`.
    Unit { s: u8, r: i64 },
}

impl ScalarNF {
    pub fn one() -> Self {
        ScalarNF::Unit { s: 0, r: 0 }
    }

    pub fn new(s: i64, r: i64) -> Self {
        ScalarNF::Unit { s: s.rem_euclid(8) as u8, r }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ScalarNF::Zero)
    }

    pub fn mul(&self, o: &ScalarNF) -> ScalarNF {
        match (self, o) {
            (ScalarNF::Unit { s: a, r: x }, ScalarNF::Unit { s: b, r: y }) => {
                ScalarNF::new(*a as i64 + *b as i64, x + y)
            }
            _ => ScalarNF::Zero,
        }
    }

    pub fn inverse(&self) -> Result<ScalarNF, ZxError> {
        match self {
            ScalarNF::Zero => Err(ZxError::ZeroInverse),
            ScalarNF::Unit { s, r } => Ok(ScalarNF::new(-(*s as i64), -r)),
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> ScalarNF {
        match self {
            ScalarNF::Zero => ScalarNF::Zero,
            ScalarNF::Unit { s, r } => ScalarNF::new(-(*s as i64), *r),
        }
    }

    pub fn to_ring(&self) -> RingScalar {
        nf_to_ring(self)
    }
}

impl fmt::Display for ScalarNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarNF::Zero => write!(f, "zero"),
            ScalarNF::Unit { s, r } => write!(f, "sqrt2^{} * w^{}", r, s),
        }
    }
}

impl FromStr for ScalarNF {
    type Err = ZxError;
    fn from_str(t: &str) -> Result<Self, ZxError> {
        let t = t.trim();
        if t == "zero" {
            return Ok(ScalarNF::Zero);
        }
        let bad = || ZxError::Parse(format!("bad scalar `{t}`"));
        let (a, b) = t.split_once('*').ok_or_else(bad)?;
        let r = a.trim().strip_prefix("sqrt2^").ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?;
        let s = b.trim().strip_prefix("w^").ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?;
        Ok(ScalarNF::new(s, r))
    }
}

/// Reads `x` as `sqrt2^r * w^s`, or zero.
pub fn ring_to_nf(x: &RingScalar) -> Result<ScalarNF, ZxError> {
    if x.is_zero() {
        return Ok(ScalarNF::Zero);
    }
    let r = x.modulus_log2_sq().ok_or(ZxError::NotStabilizerScalar)?;
    let u = x * &RingScalar::sqrt2_pow(-r);
    for s in 0..8 {
        if u == RingScalar::omega(s) {
            return Ok(ScalarNF::new(s, r));
        }
    }
    Err(ZxError::NotStabilizerScalar)
}

pub fn nf_to_ring(n: &ScalarNF) -> RingScalar {
    match n {
        ScalarNF::Zero => RingScalar::zero(),
        ScalarNF::Unit { s, r } => &RingScalar::sqrt2_pow(*r) * &RingScalar::omega(*s as i64),
    }
}

/// The phase representative for `w^s` as `(green, red)` pair phases, and the
/// power of `sqrt2` it carries.
fn phase_representative(s: u8) -> (Vec<(i64, i64)>, i64) {
    match s {
        0 => (vec![], 0),
        2 => (vec![(2, 4)], 1),
        4 => (vec![(4, 4)], 1),
        6 => (vec![(6, 4)], 1),
        1 => (vec![(2, 2)], 2),
        7 => (vec![(6, 6)], 2),
        3 => (vec![(2, 2), (2, 4)], 3),
        5 => (vec![(6, 6), (6, 4)], 3),
        _ => unreachable!("phase index below 8"),
    }
}

/// Renders a scalar normal form as a diagram with no boundary.
pub fn nf_to_diagram(n: &ScalarNF) -> Diagram {
    match n {
        ScalarNF::Zero => scalar_spider(Colour::Green, Phase8::PI),
        ScalarNF::Unit { s, r } => {
            let (pairs, rp) = phase_representative(*s);
            let mut d = empty();
            for (a, b) in pairs {
                d = d.tensor(&pair(Phase8::new(a), Phase8::new(b)));
            }
            let rest = r - rp;
            let one_pair = pair(Phase8::ZERO, Phase8::ZERO);
            if rest > 0 {
                for _ in 0..rest {
                    d = d.tensor(&one_pair);
                }
            } else if rest < 0 {
                let (pairs, stars) = if rest % 2 == 0 { (0, -rest / 2) } else { (1, (1 - rest) / 2) };
                for _ in 0..pairs {
                    d = d.tensor(&one_pair);
                }
                for _ in 0..stars {
                    d = d.tensor(&star());
                }
            }
            d
        }
    }
}

/// The zero diagram of a given type: a green effect on every input, a green
/// state on every output, and a green pi scalar.
pub fn zero_nf_diagram(n_in: usize, n_out: usize) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<NodeId> = (0..n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..n_out).map(|_| d.add_output()).collect();
    for b in ins.into_iter().chain(outs) {
        let v = d.add_node(ZxNode::Z(Phase8::ZERO));
        d.add_edge(b, v);
    }
    d.add_node(ZxNode::Z(Phase8::PI));
    d
}

/// Closed components of `d`, as node sets.
fn scalar_components(d: &Diagram) -> Vec<BTreeSet<NodeId>> {
    d.components().into_iter().filter(|c| c.iter().all(|v| !d.is_boundary(*v))).collect()
}

fn is_small(d: &Diagram) -> bool {
    d.node_count() <= 2 && d.edges().len() <= 1
}

/// Replaces every scalar component with more than two nodes or one edge by
/// its normal form, a product of segments with at most two nodes each. The
/// rest of the diagram is untouched.
pub fn decompose_scalar_subdiagrams(d: &Diagram) -> Result<Diagram, ZxError> {
    let mut out = d.clone();
    for comp in scalar_components(d) {
        let seg = d.induced_closed(&comp);
        if is_small(&seg) {
            continue;
        }
        let nf = ring_to_nf(&interpret(&seg).data[0])?;
        for v in comp {
            out.remove_node(v);
        }
        out = out.tensor(&nf_to_diagram(&nf));
    }
    Ok(out)
}

/// Whether a scalar segment is one of the four explicit zero segments: a
/// pi scalar of either colour, or a green-red pair with opposite phases
/// `pi/2` and `-pi/2`.
pub fn is_zero_segment(seg: &Diagram) -> bool {
    let h = Phase8::HALF_PI;
    let m = Phase8::MINUS_HALF_PI;
    let zeros = [scalar_spider(Colour::Green, Phase8::PI), scalar_spider(Colour::Red, Phase8::PI), pair(h, m), pair(m, h)];
    let seg = seg.compacted();
    zeros.iter().any(|z| structurally_equal(&seg, &z.compacted()))
}

/// The normal form of a scalar diagram, with its canonical diagram.
pub fn normalize_scalar(d: &Diagram) -> Result<(ScalarNF, Diagram), ZxError> {
    if d.n_inputs() + d.n_outputs() > 0 {
        return Err(ZxError::InvalidOperand("scalar normal form needs a diagram without boundary".into()));
    }
    let nf = ring_to_nf(&interpret(d).data[0])?;
    let nd = nf_to_diagram(&nf);
    Ok((nf, nd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn every_nf_renders_to_its_value() {
        for s in 0..8 {
            for r in -7..=7 {
                let n = ScalarNF::new(s, r);
                let d = nf_to_diagram(&n);
                assert_eq!(interpret(&d).data[0], nf_to_ring(&n), "{n}");
                assert_eq!(ring_to_nf(&nf_to_ring(&n)).unwrap(), n);
            }
        }
        assert!(interpret(&nf_to_diagram(&ScalarNF::Zero)).data[0].is_zero());
    }

    #[test]
    fn one_is_empty() {
        assert_eq!(nf_to_diagram(&ScalarNF::one()).node_count(), 0);
    }

    #[test]
    fn non_stabilizer_scalar_rejected() {
        let x = &RingScalar::one() + &RingScalar::omega(1);
        assert_eq!(ring_to_nf(&x), Err(ZxError::NotStabilizerScalar));
    }

    #[test]
    fn inverse_of_zero() {
        assert_eq!(ScalarNF::Zero.inverse(), Err(ZxError::ZeroInverse));
    }

    #[test]
    fn zero_diagram_is_zero() {
        let m = interpret(&zero_nf_diagram(2, 1));
        assert!(m.is_zero());
        assert_eq!((m.rows, m.cols), (2, 4));
    }

    #[test]
    fn parse_round_trip() {
        for n in [ScalarNF::Zero, ScalarNF::new(3, -5), ScalarNF::new(0, 0)] {
            assert_eq!(n.to_string().parse::<ScalarNF>().unwrap(), n);
        }
    }


    #[test]
    fn triangle_scalar_decomposes() {
        let mut d = Diagram::new();
        let a = d.add_node(ZxNode::Z(Phase8::new(2)));
        let b = d.add_node(ZxNode::X(Phase8::ZERO));
        let c = d.add_node(ZxNode::Z(Phase8::PI));
        d.add_edge(a, b);
        d.add_edge(b, c);
        d.add_edge(c, a);
        let d = d.tensor(&crate::diagram::identity(1));
        let out = decompose_scalar_subdiagrams(&d).unwrap();
        assert_eq!(interpret(&out), interpret(&d));
        for comp in scalar_components(&out) {
            assert!(is_small(&out.induced_closed(&comp)));
        }
        let small = pair(Phase8::ZERO, Phase8::ZERO).tensor(&star());
        assert!(structurally_equal(&decompose_scalar_subdiagrams(&small).unwrap(), &small));
    }

    #[test]
    fn zero_segments() {
        assert!(is_zero_segment(&scalar_spider(Colour::Green, Phase8::PI)));
        assert!(is_zero_segment(&pair(Phase8::MINUS_HALF_PI, Phase8::HALF_PI)));
        assert!(!is_zero_segment(&pair(Phase8::ZERO, Phase8::ZERO)));
        assert!(!is_zero_segment(&star()));
        for z in [pair(Phase8::HALF_PI, Phase8::MINUS_HALF_PI), scalar_spider(Colour::Red, Phase8::PI)] {
            assert!(interpret(&z).is_zero());
        }
    }

    proptest! {
        #[test]
        fn group_law_matches_ring(s1 in 0i64..8, r1 in -10i64..=10, s2 in 0i64..8, r2 in -10i64..=10) {
            let a = ScalarNF::new(s1, r1);
            let b = ScalarNF::new(s2, r2);
            prop_assert_eq!(nf_to_ring(&a.mul(&b)), &nf_to_ring(&a) * &nf_to_ring(&b));
            prop_assert_eq!(a.mul(&a.inverse().unwrap()), ScalarNF::one());
        }
    }
}
