//! Red-green diagrams for the toy bit theory.
//!
//! Phases form the Klein four group: a label `ab` is two bits and phases
//! add bitwise. `HS` is the single-toy-bit operation swapping ontic states 2
//! and 3.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::Colour;
use crate::error::ZxError;
use crate::graph::{NodeId, NodeLabel, OpenGraph};

/// A phase label `ab`, stored as `2a + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ToyPhase(u8);

impl ToyPhase {
    pub const ZERO: ToyPhase = ToyPhase(0);
    pub const P01: ToyPhase = ToyPhase(1);
    pub const P10: ToyPhase = ToyPhase(2);
    pub const P11: ToyPhase = ToyPhase(3);

    pub fn new(a: bool, b: bool) -> Self {
        ToyPhase(2 * a as u8 + b as u8)
    }

    pub fn from_index(k: u8) -> Self {
        ToyPhase(k & 3)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn a(self) -> bool {
        self.0 & 2 != 0
    }

    pub fn b(self) -> bool {
        self.0 & 1 != 0
    }

    pub fn all() -> impl Iterator<Item = ToyPhase> {
        (0..4).map(ToyPhase)
    }

    /// The action of commuting past an `11` of the other colour: the two
    /// bits are exchanged.
    pub fn swapped(self) -> ToyPhase {
        ToyPhase::new(self.b(), self.a())
    }
}

impl Add for ToyPhase {
    type Output = ToyPhase;
    fn add(self, o: ToyPhase) -> ToyPhase {
        ToyPhase(self.0 ^ o.0)
    }
}

impl fmt::Display for ToyPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a() as u8, self.b() as u8)
    }
}

impl FromStr for ToyPhase {
    type Err = ZxError;
    fn from_str(s: &str) -> Result<Self, ZxError> {
        let bits: Vec<char> = s.trim().chars().collect();
        match bits[..] {
            [a @ ('0' | '1'), b @ ('0' | '1')] => Ok(ToyPhase::new(a == '1', b == '1')),
            _ => Err(ZxError::Parse(format!("toy phase must be two bits, got {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToyNode {
    Z(ToyPhase),
    X(ToyPhase),
    /// The 2-3 swap; always two legs.
    HS,
}

impl ToyNode {
    pub fn spider(c: Colour, p: ToyPhase) -> ToyNode {
        match c {
            Colour::Green => ToyNode::Z(p),
            Colour::Red => ToyNode::X(p),
        }
    }

    pub fn as_spider(&self) -> Option<(Colour, ToyPhase)> {
        match *self {
            ToyNode::Z(p) => Some((Colour::Green, p)),
            ToyNode::X(p) => Some((Colour::Red, p)),
            ToyNode::HS => None,
        }
    }

    pub fn swap_colour(&self) -> ToyNode {
        match *self {
            ToyNode::Z(p) => ToyNode::X(p),
            ToyNode::X(p) => ToyNode::Z(p),
            ToyNode::HS => ToyNode::HS,
        }
    }
}

impl NodeLabel for ToyNode {
    // every generator relation is symmetric in its legs
    fn adjoint(&self) -> Self {
        *self
    }

    fn wire() -> Self {
        ToyNode::Z(ToyPhase::ZERO)
    }
}

pub type ToyDiagram = OpenGraph<ToyNode>;

pub fn toy_spider(c: Colour, p: ToyPhase, n_in: usize, n_out: usize) -> ToyDiagram {
    let mut d = ToyDiagram::new();
    let ins: Vec<NodeId> = (0..n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..n_out).map(|_| d.add_output()).collect();
    let v = d.add_node(ToyNode::spider(c, p));
    for b in ins.into_iter().chain(outs) {
        d.add_edge(b, v);
    }
    d
}

pub fn green(p: ToyPhase, n_in: usize, n_out: usize) -> ToyDiagram {
    toy_spider(Colour::Green, p, n_in, n_out)
}

pub fn red(p: ToyPhase, n_in: usize, n_out: usize) -> ToyDiagram {
    toy_spider(Colour::Red, p, n_in, n_out)
}

pub fn hs() -> ToyDiagram {
    let mut d = ToyDiagram::new();
    let i = d.add_input();
    let o = d.add_output();
    let v = d.add_node(ToyNode::HS);
    d.add_edge(i, v);
    d.add_edge(v, o);
    d
}

pub fn toy_identity(n: usize) -> ToyDiagram {
    let mut d = ToyDiagram::new();
    let ins: Vec<NodeId> = (0..n).map(|_| d.add_input()).collect();
    for i in ins {
        let o = d.add_output();
        d.add_edge(i, o);
    }
    d
}

/// The zero scalar: a green `11` spider with no legs.
pub fn zero_scalar() -> ToyDiagram {
    green(ToyPhase::P11, 0, 0)
}

/// The zero normal form: every boundary wire ends on a green `00` spider,
/// next to one zero scalar.
pub fn toy_zero_nf(n_in: usize, n_out: usize) -> ToyDiagram {
    let mut d = ToyDiagram::new();
    let ins: Vec<NodeId> = (0..n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..n_out).map(|_| d.add_output()).collect();
    for b in ins.into_iter().chain(outs) {
        let v = d.add_node(ToyNode::Z(ToyPhase::ZERO));
        d.add_edge(b, v);
    }
    d.add_node(ToyNode::Z(ToyPhase::P11));
    d
}

/// Whether `d` has exactly the zero normal form shape for its arity.
pub fn is_toy_zero_nf(d: &ToyDiagram) -> bool {
    crate::graph::structurally_equal(&d.compacted(), &toy_zero_nf(d.n_inputs(), d.n_outputs()).compacted())
}

pub fn swap_toy_colours(d: &ToyDiagram) -> ToyDiagram {
    d.map_labels(|k| k.swap_colour())
}

/// A random toy diagram: spiders on a random tree plus extra edges, with
/// `HS` nodes on some edges and on some boundary wires.
pub fn random_toy_diagram(rng: &mut impl Rng, n_in: usize, n_out: usize, nodes: usize) -> ToyDiagram {
    let mut d = ToyDiagram::new();
    let ins: Vec<NodeId> = (0..n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..n_out).map(|_| d.add_output()).collect();
    let k = nodes.max(1);
    let sp: Vec<NodeId> = (0..k)
        .map(|_| {
            let p = ToyPhase::from_index(rng.gen_range(0..4));
            d.add_node(if rng.gen_bool(0.5) { ToyNode::Z(p) } else { ToyNode::X(p) })
        })
        .collect();
    let link = |d: &mut ToyDiagram, rng: &mut _, a: NodeId, b: NodeId| {
        if a != b && Rng::gen_bool(rng, 0.3) {
            let h = d.add_node(ToyNode::HS);
            d.add_edge(a, h);
            d.add_edge(h, b);
        } else {
            d.add_edge(a, b);
        }
    };
    for i in 1..k {
        let j = rng.gen_range(0..i);
        link(&mut d, rng, sp[i], sp[j]);
    }
    for _ in 0..k / 2 + 1 {
        let a = *sp.choose(rng).unwrap();
        let b = *sp.choose(rng).unwrap();
        link(&mut d, rng, a, b);
    }
    for b in ins.into_iter().chain(outs) {
        let v = *sp.choose(rng).unwrap();
        if rng.gen_bool(0.2) {
            let h = d.add_node(ToyNode::HS);
            d.add_edge(b, h);
            d.add_edge(h, v);
        } else {
            d.add_edge(b, v);
        }
    }
    d
}
