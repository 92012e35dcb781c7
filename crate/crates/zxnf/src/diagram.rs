//! ZX diagrams: open graphs of green (Z) and red (X) spiders with phases in
//! multiples of pi/4, Hadamard boxes and star scalars (value 1/2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::ZxError;
use crate::graph::{NodeId, NodeLabel, OpenGraph};

/// A phase `k * pi/4` with `k` in `Z/8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Phase8(u8);

impl Phase8 {
    pub const ZERO: Phase8 = Phase8(0);
    pub const PI: Phase8 = Phase8(4);
    pub const HALF_PI: Phase8 = Phase8(2);
    pub const MINUS_HALF_PI: Phase8 = Phase8(6);

    pub fn new(k: i64) -> Self {
        Phase8(k.rem_euclid(8) as u8)
    }

    pub fn k(self) -> u8 {
        self.0
    }

    pub fn is_stabilizer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn all() -> impl Iterator<Item = Phase8> {
        (0..8).map(Phase8)
    }

    pub fn stabilizer() -> impl Iterator<Item = Phase8> {
        (0..8).step_by(2).map(Phase8)
    }
}

impl Add for Phase8 {
    type Output = Phase8;
    fn add(self, o: Phase8) -> Phase8 {
        Phase8((self.0 + o.0) % 8)
    }
}

impl Sub for Phase8 {
    type Output = Phase8;
    fn sub(self, o: Phase8) -> Phase8 {
        Phase8((self.0 + 8 - o.0) % 8)
    }
}

impl Neg for Phase8 {
    type Output = Phase8;
    fn neg(self) -> Phase8 {
        Phase8((8 - self.0) % 8)
    }
}

impl Mul<i64> for Phase8 {
    type Output = Phase8;
    fn mul(self, j: i64) -> Phase8 {
        Phase8::new(self.0 as i64 * j)
    }
}

impl fmt::Display for Phase8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Green,
    Red,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Green => Colour::Red,
            Colour::Red => Colour::Green,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZxNode {
    Z(Phase8),
    X(Phase8),
    H,
    Star,
}

impl ZxNode {
    pub fn spider(c: Colour, p: Phase8) -> ZxNode {
        match c {
            Colour::Green => ZxNode::Z(p),
            Colour::Red => ZxNode::X(p),
        }
    }

    pub fn as_spider(&self) -> Option<(Colour, Phase8)> {
        match *self {
            ZxNode::Z(p) => Some((Colour::Green, p)),
            ZxNode::X(p) => Some((Colour::Red, p)),
            _ => None,
        }
    }

    pub fn phase(&self) -> Option<Phase8> {
        self.as_spider().map(|x| x.1)
    }

    pub fn swap_colour(&self) -> ZxNode {
        match *self {
            ZxNode::Z(p) => ZxNode::X(p),
            ZxNode::X(p) => ZxNode::Z(p),
            o => o,
        }
    }
}

impl NodeLabel for ZxNode {
    fn adjoint(&self) -> Self {
        match *self {
            ZxNode::Z(p) => ZxNode::Z(-p),
            ZxNode::X(p) => ZxNode::X(-p),
            o => o,
        }
    }

    fn wire() -> Self {
        ZxNode::Z(Phase8::ZERO)
    }
}

pub type Diagram = OpenGraph<ZxNode>;

/// Checks that every spider phase is a multiple of pi/2.
pub fn check_stabilizer(d: &Diagram) -> Result<(), ZxError> {
    for (id, k) in d.nodes() {
        if let Some(p) = k.phase() {
            if !p.is_stabilizer() {
                return Err(ZxError::FragmentViolation { node: *id, phase: p.k() });
            }
        }
    }
    Ok(())
}

/// Applies `f` to every spider phase.
pub fn map_phases(d: &Diagram, f: impl Fn(Phase8) -> Phase8) -> Diagram {
    d.map_labels(|k| match *k {
        ZxNode::Z(p) => ZxNode::Z(f(p)),
        ZxNode::X(p) => ZxNode::X(f(p)),
        o => o,
    })
}

/// Exchanges green and red everywhere.
pub fn swap_colours(d: &Diagram) -> Diagram {
    d.map_labels(|k| k.swap_colour())
}

/// A single spider with `n_in` inputs and `n_out` outputs.
pub fn spider(c: Colour, p: Phase8, n_in: usize, n_out: usize) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<NodeId> = (0..n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..n_out).map(|_| d.add_output()).collect();
    let v = d.add_node(ZxNode::spider(c, p));
    for b in ins.into_iter().chain(outs) {
        d.add_edge(b, v);
    }
    d
}

pub fn z_spider(p: Phase8, n_in: usize, n_out: usize) -> Diagram {
    spider(Colour::Green, p, n_in, n_out)
}

pub fn x_spider(p: Phase8, n_in: usize, n_out: usize) -> Diagram {
    spider(Colour::Red, p, n_in, n_out)
}

/// A one-in one-out node of the given kind.
pub fn unary(k: ZxNode) -> Diagram {
    let mut d = Diagram::new();
    let i = d.add_input();
    let o = d.add_output();
    let v = d.add_node(k);
    d.add_edge(i, v);
    d.add_edge(v, o);
    d
}

pub fn hadamard() -> Diagram {
    unary(ZxNode::H)
}

/// Bare wires.
pub fn identity(n: usize) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<NodeId> = (0..n).map(|_| d.add_input()).collect();
    for i in ins {
        let o = d.add_output();
        d.add_edge(i, o);
    }
    d
}

/// Empty diagram, the scalar 1.
pub fn empty() -> Diagram {
    Diagram::new()
}

pub fn star() -> Diagram {
    let mut d = Diagram::new();
    d.add_node(ZxNode::Star);
    d
}

/// A green `alpha` effect plugged into a red `beta` state, the two-node scalar
/// `(1/sqrt2)[(1 + e^{i beta}) + e^{i alpha}(1 - e^{i beta})]`.
pub fn pair(alpha: Phase8, beta: Phase8) -> Diagram {
    let mut d = Diagram::new();
    let g = d.add_node(ZxNode::Z(alpha));
    let r = d.add_node(ZxNode::X(beta));
    d.add_edge(g, r);
    d
}

/// A spider with no legs, the scalar `1 + e^{i alpha}`.
pub fn scalar_spider(c: Colour, p: Phase8) -> Diagram {
    spider(c, p, 0, 0)
}

/// Number of nodes that are not part of scalar components.
pub fn non_scalar_node_count(d: &Diagram) -> usize {
    let mut n = 0;
    for comp in d.components() {
        if comp.iter().any(|v| d.is_boundary(*v)) {
            n += comp.iter().filter(|v| !d.is_boundary(**v)).count();
        }
    }
    n
}

/// Rewrites into the basic generators: phase-free green spiders of degree one
/// or three, degree-two green phase shifts, Hadamards and stars. The
/// interpretation is unchanged.
pub fn decompose_to_generators(d: &Diagram) -> Diagram {
    let mut g = d.clone();
    // red spiders become green ones with a Hadamard on every leg
    let reds: Vec<NodeId> =
        g.nodes().iter().filter(|(_, k)| matches!(k, ZxNode::X(_))).map(|(id, _)| *id).collect();
    for v in reds {
        let p = g.kind(v).unwrap().phase().unwrap();
        g.set_kind(v, ZxNode::Z(p));
        let nbrs = g.neighbours(v);
        g.remove_node(v);
        let v2 = g.add_node(ZxNode::Z(p));
        let mut loops = 0;
        for u in nbrs {
            if u == v {
                loops += 1;
                continue;
            }
            let h = g.add_node(ZxNode::H);
            g.add_edge(v2, h);
            g.add_edge(h, u);
        }
        for _ in 0..loops / 2 {
            let h1 = g.add_node(ZxNode::H);
            let h2 = g.add_node(ZxNode::H);
            g.add_edge(v2, h1);
            g.add_edge(h1, h2);
            g.add_edge(h2, v2);
        }
    }
    let greens: Vec<(NodeId, Phase8)> = g
        .nodes()
        .iter()
        .filter_map(|(id, k)| match k {
            ZxNode::Z(p) => Some((*id, *p)),
            _ => None,
        })
        .collect();
    let z0 = ZxNode::Z(Phase8::ZERO);
    for (v, p) in greens {
        let deg = g.degree(v);
        if deg == 2 || (p == Phase8::ZERO && (deg == 1 || deg == 3)) {
            continue;
        }
        // legs as far endpoints; each self-loop gives a pair of `None`s
        let mut legs: Vec<Option<NodeId>> = Vec::new();
        let mut loop_ends = 0;
        for u in g.neighbours(v) {
            if u == v {
                loop_ends += 1;
            } else {
                legs.push(Some(u));
            }
        }
        legs.extend(std::iter::repeat_n(None, loop_ends));
        g.remove_node(v);
        if p == Phase8::ZERO && legs.is_empty() {
            // the scalar 2
            let a = g.add_node(z0);
            let b = g.add_node(z0);
            g.add_edge(a, b);
            continue;
        }
        let slots = legs.len() + usize::from(p != Phase8::ZERO);
        let ends = build_tree(&mut g, slots);
        attach_legs(&mut g, &legs, &ends);
        if p != Phase8::ZERO {
            // Z(p) with n legs is Z(0) with n+1 legs fed by a phase-shifted state
            let s = g.add_node(ZxNode::Z(p));
            let t = g.add_node(z0);
            g.add_edge(ends[slots - 1], s);
            g.add_edge(s, t);
        }
    }
    g
}

/// Builds phase-free green spiders of degree at most three offering `n >= 1`
/// free leg slots; returns the node providing each slot.
fn build_tree(g: &mut Diagram, n: usize) -> Vec<NodeId> {
    let z0 = ZxNode::Z(Phase8::ZERO);
    if n <= 2 {
        let a = g.add_node(z0);
        return vec![a; n];
    }
    let nodes: Vec<NodeId> = (0..n - 2).map(|_| g.add_node(z0)).collect();
    for w in nodes.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    let mut ends = vec![nodes[0]];
    ends.extend(nodes.iter().copied());
    ends.push(nodes[nodes.len() - 1]);
    ends
}

fn attach_legs(g: &mut Diagram, legs: &[Option<NodeId>], ends: &[NodeId]) {
    let mut i = 0;
    while i < legs.len() {
        match legs[i] {
            Some(u) => {
                g.add_edge(ends[i], u);
                i += 1;
            }
            None => {
                g.add_edge(ends[i], ends[i + 1]);
                i += 2;
            }
        }
    }
}
