//! Seeded random diagrams for tests, examples and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Diagram, Phase8, ZxNode};
use crate::graph::NodeId;

#[derive(Clone, Debug)]
pub struct RandomSpec {
    pub n_in: usize,
    pub n_out: usize,
    pub nodes: usize,
    /// Internal edges beyond the spanning ones.
    pub extra_edges: usize,
    /// Restrict phases to multiples of pi/2.
    pub stabilizer: bool,
    pub hadamards: bool,
    pub stars: bool,
}

impl RandomSpec {
    pub fn stabilizer(n_in: usize, n_out: usize, nodes: usize) -> Self {
        RandomSpec { n_in, n_out, nodes, extra_edges: nodes / 2 + 1, stabilizer: true, hadamards: true, stars: true }
    }
}

fn random_phase(rng: &mut impl Rng, stabilizer: bool) -> Phase8 {
    if stabilizer {
        Phase8::new(2 * rng.gen_range(0..4))
    } else {
        Phase8::new(rng.gen_range(0..8))
    }
}

/// A random diagram. Spiders form a random tree plus extra edges (self-loops
/// and parallel edges included); Hadamards are placed on some edges.
pub fn random_diagram(rng: &mut impl Rng, spec: &RandomSpec) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<NodeId> = (0..spec.n_in).map(|_| d.add_input()).collect();
    let outs: Vec<NodeId> = (0..spec.n_out).map(|_| d.add_output()).collect();
    let k = spec.nodes.max(1);
    let sp: Vec<NodeId> = (0..k)
        .map(|_| {
            let p = random_phase(rng, spec.stabilizer);
            d.add_node(if rng.gen_bool(0.5) { ZxNode::Z(p) } else { ZxNode::X(p) })
        })
        .collect();
    let link = |d: &mut Diagram, rng: &mut _, a: NodeId, b: NodeId| {
        if spec.hadamards && a != b && Rng::gen_bool(rng, 0.3) {
            let h = d.add_node(ZxNode::H);
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
    for _ in 0..spec.extra_edges {
        let a = *sp.choose(rng).unwrap();
        let b = *sp.choose(rng).unwrap();
        link(&mut d, rng, a, b);
    }
    for b in ins.into_iter().chain(outs) {
        let v = *sp.choose(rng).unwrap();
        if spec.hadamards && rng.gen_bool(0.2) {
            let h = d.add_node(ZxNode::H);
            d.add_edge(b, h);
            d.add_edge(h, v);
        } else {
            d.add_edge(b, v);
        }
    }
    if spec.stars && rng.gen_bool(0.3) {
        d.add_node(ZxNode::Star);
    }
    d
}

/// A random Clifford circuit on `n` qubits built from `Z(pi/2)`, `H` and CZ
/// gadgets, as a diagram with `n` inputs and outputs.
pub fn random_clifford_circuit(rng: &mut impl Rng, n: usize, depth: usize) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<NodeId> = (0..n).map(|_| d.add_input()).collect();
    let mut ends = ins.clone();
    for _ in 0..depth {
        let q = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 => {
                let v = d.add_node(ZxNode::Z(random_phase(rng, true)));
                d.add_edge(ends[q], v);
                ends[q] = v;
            }
            1 => {
                let v = d.add_node(ZxNode::H);
                d.add_edge(ends[q], v);
                ends[q] = v;
            }
            _ if n > 1 => {
                let mut r = rng.gen_range(0..n - 1);
                if r >= q {
                    r += 1;
                }
                let a = d.add_node(ZxNode::Z(Phase8::ZERO));
                let b = d.add_node(ZxNode::Z(Phase8::ZERO));
                let h = d.add_node(ZxNode::H);
                d.add_edge(ends[q], a);
                d.add_edge(ends[r], b);
                d.add_edge(a, h);
                d.add_edge(h, b);
                ends[q] = a;
                ends[r] = b;
            }
            _ => {}
        }
    }
    for e in ends {
        let o = d.add_output();
        d.add_edge(e, o);
    }
    d
}
