//! Rewrite rules as bidirectional, scalar-exact graph transformations.
//!
//! Every rule is stated for a base colour (green) and applies with colours
//! swapped. Scalar factors live in separate scalar components: applying a
//! rule left to right adds the rule's scalar diagram, right to left removes
//! a matching copy if the host has one and otherwise adds its inverse.
//! [`apply_with_inverse`] returns the redex that undoes an application
//! exactly, up to fresh node ids.

use std::collections::BTreeSet;

use crate::diagram::{pair, star, swap_colours, Colour, Diagram, Phase8, ZxNode};
use crate::error::ZxError;
use crate::graph::{structurally_equal, NodeId};
use crate::scalar_nf::{nf_to_diagram, ring_to_nf, ScalarNF};
use crate::semantics::interpret;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    Spider,
    Loop,
    Cup,
    Bialgebra,
    Copy,
    PiCopy,
    PiCommute,
    ColourChange,
    Euler,
    Star,
    Zero,
    ZeroScalar,
    Identity,
    HadamardSelfInverse,
    Hopf,
    VariantStar,
    Supplementarity,
}

impl RuleId {
    pub const ALL: [RuleId; 17] = [
        RuleId::Spider,
        RuleId::Loop,
        RuleId::Cup,
        RuleId::Bialgebra,
        RuleId::Copy,
        RuleId::PiCopy,
        RuleId::PiCommute,
        RuleId::ColourChange,
        RuleId::Euler,
        RuleId::Star,
        RuleId::Zero,
        RuleId::ZeroScalar,
        RuleId::Identity,
        RuleId::HadamardSelfInverse,
        RuleId::Hopf,
        RuleId::VariantStar,
        RuleId::Supplementarity,
    ];

    pub fn is_derived(self) -> bool {
        matches!(
            self,
            RuleId::Identity | RuleId::HadamardSelfInverse | RuleId::Hopf | RuleId::VariantStar
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::LeftToRight => Direction::RightToLeft,
            Direction::RightToLeft => Direction::LeftToRight,
        }
    }
}

/// How the rule's scalar factor is realised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    /// Add the factor, or remove a matching copy when going right to left.
    Default,
    /// Remove exactly these scalar nodes.
    Remove(Vec<NodeId>),
    /// Add exactly this scalar diagram.
    Add(Diagram),
}

/// A located rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub rule: RuleId,
    pub dir: Direction,
    /// The colour playing the role of green in the base rule.
    pub colour: Colour,
    /// Upside-down variant; only the Euler rule has a distinct one.
    pub flipped: bool,
    pub nodes: Vec<NodeId>,
    pub edges: Vec<(NodeId, NodeId)>,
    pub phases: Vec<Phase8>,
    pub count: usize,
    pub scalar: ScalarMode,
}

impl Redex {
    pub fn new(rule: RuleId, dir: Direction, colour: Colour) -> Self {
        Redex {
            rule,
            dir,
            colour,
            flipped: false,
            nodes: Vec::new(),
            edges: Vec::new(),
            phases: Vec::new(),
            count: 0,
            scalar: ScalarMode::Default,
        }
    }

    fn with_nodes(mut self, nodes: Vec<NodeId>) -> Self {
        self.nodes = nodes;
        self
    }

    fn with_edges(mut self, edges: Vec<(NodeId, NodeId)>) -> Self {
        self.edges = edges;
        self
    }

    fn with_phases(mut self, phases: Vec<Phase8>) -> Self {
        self.phases = phases;
        self
    }

    fn with_count(mut self, count: usize) -> Self {
        self.count = count;
        self
    }

    fn sort_key(&self) -> impl Ord {
        (self.dir, self.colour, self.flipped, self.nodes.clone(), self.edges.clone(), self.phases.clone(), self.count)
    }
}

/// `w^alpha` as a scalar diagram that scales correctly under every odd
/// reinterpretation of phases.
pub fn omega_scalar(alpha: Phase8) -> Diagram {
    pair(alpha, Phase8::PI).tensor(&pair(Phase8::ZERO, Phase8::ZERO)).tensor(&star())
}

fn green_scalar(p: Phase8) -> Diagram {
    crate::diagram::scalar_spider(Colour::Green, p)
}

fn in_colour(d: Diagram, colour: Colour) -> Diagram {
    match colour {
        Colour::Green => d,
        Colour::Red => swap_colours(&d),
    }
}

/// The scalar `c` with `LHS = c . RHS`, for base colour green.
pub fn rule_scalar(rule: RuleId, flipped: bool, params: &RuleParams) -> Diagram {
    let nf = |r: i64, s: i64| nf_to_diagram(&ScalarNF::new(s, r));
    match rule {
        RuleId::Bialgebra => nf((params.n as i64 - 1) * (params.m as i64 - 1), 0),
        RuleId::Copy => nf(1 - params.m as i64, 0),
        RuleId::Hopf => nf(-2, 0),
        RuleId::PiCopy | RuleId::PiCommute => omega_scalar(params.alpha),
        RuleId::Euler => {
            if flipped {
                nf(0, 1)
            } else {
                nf(0, 7)
            }
        }
        RuleId::Supplementarity => green_scalar(params.alpha * 2 + Phase8::PI).tensor(&star()),
        _ => Diagram::new(),
    }
}

/// Numeric parameters a rule instance is built from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RuleParams {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub alpha: Phase8,
    pub beta: Phase8,
}

/// A scalar diagram for `1/c`. Unit-modulus scalars use the adjoint so the
/// inverse keeps its phase structure.
pub fn scalar_inverse(c: &Diagram) -> Option<Diagram> {
    let v = interpret(c).data[0].clone();
    if v.is_zero() {
        return None;
    }
    if v.norm_sq().is_one() {
        return Some(c.adjoint());
    }
    let nf = ring_to_nf(&v).ok()?;
    Some(nf_to_diagram(&nf.inverse().ok()?))
}

// ---- small pattern helpers -------------------------------------------------

fn spider_of(d: &Diagram, v: NodeId) -> Option<(Colour, Phase8)> {
    d.kind(v).and_then(|k| k.as_spider())
}

fn is_spider(d: &Diagram, v: NodeId, c: Colour) -> Option<Phase8> {
    match spider_of(d, v) {
        Some((cc, p)) if cc == c => Some(p),
        _ => None,
    }
}

fn is_spider_phase(d: &Diagram, v: NodeId, c: Colour, p: Phase8) -> bool {
    is_spider(d, v, c) == Some(p)
}

fn is_h(d: &Diagram, v: NodeId) -> bool {
    matches!(d.kind(v), Some(ZxNode::H))
}

fn invalid<T>() -> Result<T, ZxError> {
    Err(ZxError::RedexInvalid)
}

fn ensure(b: bool) -> Result<(), ZxError> {
    if b {
        Ok(())
    } else {
        invalid()
    }
}

/// Neighbours of `v` with one occurrence of `skip` removed.
fn others(d: &Diagram, v: NodeId, skip: NodeId) -> Vec<NodeId> {
    let mut n = d.neighbours(v);
    if let Some(i) = n.iter().position(|&x| x == skip) {
        n.remove(i);
    }
    n
}

/// The far end of a two-legged node seen from `from`.
fn far_end(d: &Diagram, v: NodeId, from: NodeId) -> Option<NodeId> {
    if d.degree(v) != 2 || d.self_loops(v) != 0 {
        return None;
    }
    let o = others(d, v, from);
    (o.len() == 1).then(|| o[0])
}

fn distinct(v: &[NodeId]) -> bool {
    v.iter().collect::<BTreeSet<_>>().len() == v.len()
}

// ---- rule bodies -----------------------------------------------------------

struct Outcome {
    d: Diagram,
    inverse: Redex,
    params: RuleParams,
}

fn apply_core(d: &Diagram, r: &Redex) -> Result<Outcome, ZxError> {
    let c = r.colour;
    let o = c.other();
    let mut g = d.clone();
    let back = Redex { dir: r.dir.reverse(), flipped: r.flipped, ..Redex::new(r.rule, r.dir.reverse(), c) };
    let mut params = RuleParams::default();
    use Direction::*;
    use RuleId::*;
    let out = match (r.rule, r.dir) {
        (Spider, LeftToRight) => {
            let [u, v] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, u, c).ok_or(ZxError::RedexInvalid)?;
            let b = is_spider(d, v, c).ok_or(ZxError::RedexInvalid)?;
            let k = d.edge_count(u, v);
            ensure(u != v && k >= 1)?;
            let mut moved = Vec::new();
            for &(x, y) in d.edges() {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if x == v && y == v {
                    moved.push((u, u));
                } else if x == v {
                    moved.push((u, y));
                } else if y == v {
                    moved.push((u, x));
                }
            }
            g.remove_node(v);
            for &e in &moved {
                g.add_edge(e.0, e.1);
            }
            g.set_kind(u, ZxNode::spider(c, a + b));
            back.with_nodes(vec![u]).with_phases(vec![b]).with_edges(moved).with_count(k)
        }
        (Spider, RightToLeft) => {
            let [u] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, u, c).ok_or(ZxError::RedexInvalid)?;
            let [b] = r.phases[..] else { return invalid() };
            ensure(r.count >= 1)?;
            for &(x, y) in &r.edges {
                ensure(x == u && g.remove_edge(x, y))?;
            }
            let v = g.add_node(ZxNode::spider(c, b));
            for &(_, y) in &r.edges {
                if y == u {
                    g.add_edge(v, v);
                } else {
                    g.add_edge(v, y);
                }
            }
            for _ in 0..r.count {
                g.add_edge(u, v);
            }
            g.set_kind(u, ZxNode::spider(c, a - b));
            back.with_nodes(vec![u, v])
        }
        (Loop, LeftToRight) => {
            let [u] = r.nodes[..] else { return invalid() };
            ensure(is_spider(d, u, c).is_some() && g.remove_edge(u, u))?;
            back.with_nodes(vec![u])
        }
        (Loop, RightToLeft) => {
            let [u] = r.nodes[..] else { return invalid() };
            ensure(is_spider(d, u, c).is_some())?;
            g.add_edge(u, u);
            back.with_nodes(vec![u])
        }
        (Identity | Cup, LeftToRight) => {
            let [u] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, u, c, Phase8::ZERO) && d.degree(u) == 2 && d.self_loops(u) == 0)?;
            let n = d.neighbours(u);
            g.remove_node(u);
            g.add_edge(n[0], n[1]);
            back.with_edges(vec![(n[0], n[1])])
        }
        (Identity | Cup, RightToLeft) => {
            let [(a, b)] = r.edges[..] else { return invalid() };
            ensure(g.remove_edge(a, b))?;
            let u = g.add_node(ZxNode::spider(c, Phase8::ZERO));
            g.add_edge(a, u);
            g.add_edge(u, b);
            back.with_nodes(vec![u])
        }
        (Bialgebra, LeftToRight) => {
            let [gn, rn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, gn, c, Phase8::ZERO) && is_spider_phase(d, rn, o, Phase8::ZERO))?;
            ensure(d.edge_count(gn, rn) == 1 && d.self_loops(gn) == 0 && d.self_loops(rn) == 0)?;
            let gl = others(d, gn, rn);
            let rl = others(d, rn, gn);
            g.remove_node(gn);
            g.remove_node(rn);
            let xs: Vec<NodeId> = gl
                .iter()
                .map(|&x| {
                    let v = g.add_node(ZxNode::spider(o, Phase8::ZERO));
                    g.add_edge(v, x);
                    v
                })
                .collect();
            let zs: Vec<NodeId> = rl
                .iter()
                .map(|&x| {
                    let v = g.add_node(ZxNode::spider(c, Phase8::ZERO));
                    g.add_edge(v, x);
                    v
                })
                .collect();
            for &x in &xs {
                for &z in &zs {
                    g.add_edge(x, z);
                }
            }
            params.n = xs.len();
            params.m = zs.len();
            let mut nodes = xs.clone();
            nodes.extend(&zs);
            back.with_nodes(nodes).with_count(xs.len())
        }
        (Bialgebra, RightToLeft) => {
            ensure(r.count <= r.nodes.len() && distinct(&r.nodes))?;
            let (xs, zs) = r.nodes.split_at(r.count);
            let set: BTreeSet<NodeId> = r.nodes.iter().copied().collect();
            let outer = |v: NodeId, col: Colour, partners: &[NodeId]| -> Result<NodeId, ZxError> {
                ensure(is_spider_phase(d, v, col, Phase8::ZERO) && d.self_loops(v) == 0)?;
                ensure(d.degree(v) == partners.len() + 1)?;
                for &p in partners {
                    ensure(d.edge_count(v, p) == 1)?;
                }
                let rest: Vec<NodeId> = d.neighbours(v).into_iter().filter(|x| !set.contains(x)).collect();
                ensure(rest.len() == 1)?;
                Ok(rest[0])
            };
            let xo: Vec<NodeId> = xs.iter().map(|&x| outer(x, o, zs)).collect::<Result<_, _>>()?;
            let zo: Vec<NodeId> = zs.iter().map(|&z| outer(z, c, xs)).collect::<Result<_, _>>()?;
            for &v in &r.nodes {
                g.remove_node(v);
            }
            let gn = g.add_node(ZxNode::spider(c, Phase8::ZERO));
            let rn = g.add_node(ZxNode::spider(o, Phase8::ZERO));
            for x in xo {
                g.add_edge(gn, x);
            }
            for z in zo {
                g.add_edge(rn, z);
            }
            g.add_edge(gn, rn);
            params.n = xs.len();
            params.m = zs.len();
            back.with_nodes(vec![gn, rn])
        }
        (Copy, LeftToRight) => {
            let [s, gn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, s, o, Phase8::ZERO) && d.degree(s) == 1 && d.edge_count(s, gn) == 1)?;
            ensure(is_spider_phase(d, gn, c, Phase8::ZERO) && d.self_loops(gn) == 0)?;
            let legs = others(d, gn, s);
            g.remove_node(s);
            g.remove_node(gn);
            let ts: Vec<NodeId> = legs
                .iter()
                .map(|&x| {
                    let t = g.add_node(ZxNode::spider(o, Phase8::ZERO));
                    g.add_edge(t, x);
                    t
                })
                .collect();
            params.m = ts.len();
            back.with_nodes(ts)
        }
        (Copy, RightToLeft) => {
            ensure(distinct(&r.nodes))?;
            let set: BTreeSet<NodeId> = r.nodes.iter().copied().collect();
            let mut far = Vec::new();
            for &t in &r.nodes {
                ensure(is_spider_phase(d, t, o, Phase8::ZERO) && d.degree(t) == 1 && d.self_loops(t) == 0)?;
                let x = d.neighbours(t)[0];
                ensure(!set.contains(&x))?;
                far.push(x);
            }
            for &t in &r.nodes {
                g.remove_node(t);
            }
            let gn = g.add_node(ZxNode::spider(c, Phase8::ZERO));
            for x in far {
                g.add_edge(gn, x);
            }
            let s = g.add_node(ZxNode::spider(o, Phase8::ZERO));
            g.add_edge(s, gn);
            params.m = r.nodes.len();
            back.with_nodes(vec![s, gn])
        }
        (PiCopy | PiCommute, LeftToRight) => {
            let [x, gn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, x, o, Phase8::PI) && d.edge_count(x, gn) == 1)?;
            let y = far_end(d, x, gn).ok_or(ZxError::RedexInvalid)?;
            ensure(y != gn)?;
            let a = is_spider(d, gn, c).ok_or(ZxError::RedexInvalid)?;
            ensure(d.self_loops(gn) == 0)?;
            let legs = others(d, gn, x);
            ensure(r.rule == PiCopy || legs.len() == 1)?;
            g.remove_node(x);
            let mut xs = Vec::new();
            for &l in &legs {
                g.remove_edge(gn, l);
                let t = g.add_node(ZxNode::spider(o, Phase8::PI));
                g.add_edge(gn, t);
                g.add_edge(t, l);
                xs.push(t);
            }
            g.add_edge(y, gn);
            g.set_kind(gn, ZxNode::spider(c, -a));
            params.alpha = a;
            params.m = legs.len();
            let mut nodes = vec![gn];
            nodes.extend(xs);
            back.with_nodes(nodes).with_edges(vec![(gn, y)])
        }
        (PiCopy | PiCommute, RightToLeft) => {
            ensure(!r.nodes.is_empty() && distinct(&r.nodes))?;
            let gn = r.nodes[0];
            let xs = &r.nodes[1..];
            ensure(r.rule == PiCopy || xs.len() == 1)?;
            let b = is_spider(d, gn, c).ok_or(ZxError::RedexInvalid)?;
            let [(gg, y)] = r.edges[..] else { return invalid() };
            let set: BTreeSet<NodeId> = r.nodes.iter().copied().collect();
            ensure(gg == gn && !set.contains(&y) && d.edge_count(gn, y) >= 1)?;
            ensure(d.self_loops(gn) == 0 && d.degree(gn) == xs.len() + 1)?;
            let mut far = Vec::new();
            for &t in xs {
                ensure(is_spider_phase(d, t, o, Phase8::PI) && d.edge_count(gn, t) == 1)?;
                let f = far_end(d, t, gn).ok_or(ZxError::RedexInvalid)?;
                ensure(!set.contains(&f))?;
                far.push(f);
            }
            for &t in xs {
                g.remove_node(t);
            }
            for f in far {
                g.add_edge(gn, f);
            }
            g.remove_edge(gn, y);
            let x = g.add_node(ZxNode::spider(o, Phase8::PI));
            g.add_edge(y, x);
            g.add_edge(x, gn);
            g.set_kind(gn, ZxNode::spider(c, -b));
            params.alpha = -b;
            params.m = xs.len();
            back.with_nodes(vec![x, gn])
        }
        (ColourChange, LeftToRight) => {
            let [v] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, v, c).ok_or(ZxError::RedexInvalid)?;
            let inc: Vec<(NodeId, NodeId)> = d.edges().iter().copied().filter(|&(x, y)| x == v || y == v).collect();
            for &(x, y) in &inc {
                g.remove_edge(x, y);
            }
            for &(x, y) in &inc {
                if x == v && y == v {
                    let h1 = g.add_node(ZxNode::H);
                    let h2 = g.add_node(ZxNode::H);
                    g.add_edge(v, h1);
                    g.add_edge(h1, h2);
                    g.add_edge(h2, v);
                } else {
                    let f = if x == v { y } else { x };
                    let h = g.add_node(ZxNode::H);
                    g.add_edge(v, h);
                    g.add_edge(h, f);
                }
            }
            g.set_kind(v, ZxNode::spider(o, a));
            back.with_nodes(vec![v])
        }
        (ColourChange, RightToLeft) => {
            let [v] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, v, o).ok_or(ZxError::RedexInvalid)?;
            ensure(d.self_loops(v) == 0)?;
            let hs = d.neighbours(v);
            ensure(distinct(&hs))?;
            let set: BTreeSet<NodeId> = hs.iter().copied().collect();
            let mut far = Vec::new();
            for &h in &hs {
                ensure(is_h(d, h))?;
                let f = far_end(d, h, v).ok_or(ZxError::RedexInvalid)?;
                ensure(f != v)?;
                far.push(f);
            }
            for &h in &hs {
                g.remove_node(h);
            }
            let mut done = BTreeSet::new();
            for (i, &h) in hs.iter().enumerate() {
                let f = far[i];
                if set.contains(&f) {
                    // two Hadamards in a row back to v: a self-loop
                    if done.insert(h) && done.insert(f) {
                        g.add_edge(v, v);
                    }
                } else {
                    g.add_edge(v, f);
                }
            }
            g.set_kind(v, ZxNode::spider(c, a));
            back.with_nodes(vec![v])
        }
        (Euler, LeftToRight) => {
            let [h] = r.nodes[..] else { return invalid() };
            ensure(is_h(d, h) && d.self_loops(h) == 0)?;
            let n = d.neighbours(h);
            let p = if r.flipped { Phase8::MINUS_HALF_PI } else { Phase8::HALF_PI };
            g.remove_node(h);
            let n1 = g.add_node(ZxNode::spider(c, p));
            let n2 = g.add_node(ZxNode::spider(o, p));
            let n3 = g.add_node(ZxNode::spider(c, p));
            g.add_edge(n[0], n1);
            g.add_edge(n1, n2);
            g.add_edge(n2, n3);
            g.add_edge(n3, n[1]);
            back.with_nodes(vec![n1, n2, n3])
        }
        (Euler, RightToLeft) => {
            let [n1, n2, n3] = r.nodes[..] else { return invalid() };
            let p = if r.flipped { Phase8::MINUS_HALF_PI } else { Phase8::HALF_PI };
            ensure(distinct(&r.nodes))?;
            ensure(is_spider_phase(d, n1, c, p) && is_spider_phase(d, n2, o, p) && is_spider_phase(d, n3, c, p))?;
            ensure(d.edge_count(n1, n2) == 1 && d.edge_count(n2, n3) == 1 && d.degree(n2) == 2)?;
            let a = far_end(d, n1, n2).ok_or(ZxError::RedexInvalid)?;
            let b = far_end(d, n3, n2).ok_or(ZxError::RedexInvalid)?;
            ensure(a != n3 && b != n1)?;
            for v in [n1, n2, n3] {
                g.remove_node(v);
            }
            let h = g.add_node(ZxNode::H);
            g.add_edge(a, h);
            g.add_edge(h, b);
            back.with_nodes(vec![h])
        }
        (Star, LeftToRight) => {
            let [s, z] = r.nodes[..] else { return invalid() };
            ensure(matches!(d.kind(s), Some(ZxNode::Star)))?;
            ensure(is_spider_phase(d, z, c, Phase8::ZERO) && d.degree(z) == 0)?;
            g.remove_node(s);
            g.remove_node(z);
            back
        }
        (Star, RightToLeft) => {
            ensure(r.nodes.is_empty())?;
            let s = g.add_node(ZxNode::Star);
            let z = g.add_node(ZxNode::spider(c, Phase8::ZERO));
            back.with_nodes(vec![s, z])
        }
        (VariantStar, LeftToRight) => {
            let [s, g1, r1, g2, r2] = r.nodes[..] else { return invalid() };
            ensure(distinct(&r.nodes) && matches!(d.kind(s), Some(ZxNode::Star)))?;
            for (a, b) in [(g1, r1), (g2, r2)] {
                ensure(is_spider_phase(d, a, c, Phase8::ZERO) && is_spider_phase(d, b, o, Phase8::ZERO))?;
                ensure(d.degree(a) == 1 && d.degree(b) == 1 && d.edge_count(a, b) == 1)?;
            }
            for v in &r.nodes {
                g.remove_node(*v);
            }
            back
        }
        (VariantStar, RightToLeft) => {
            ensure(r.nodes.is_empty())?;
            let s = g.add_node(ZxNode::Star);
            let mut nodes = vec![s];
            for _ in 0..2 {
                let a = g.add_node(ZxNode::spider(c, Phase8::ZERO));
                let b = g.add_node(ZxNode::spider(o, Phase8::ZERO));
                g.add_edge(a, b);
                nodes.push(a);
                nodes.push(b);
            }
            back.with_nodes(nodes)
        }
        (Zero, LeftToRight) => {
            let [z] = r.nodes[..] else { return invalid() };
            let [(a, b)] = r.edges[..] else { return invalid() };
            ensure(is_spider_phase(d, z, c, Phase8::PI) && d.degree(z) == 0 && a != z && b != z)?;
            ensure(g.remove_edge(a, b))?;
            let u = g.add_node(ZxNode::spider(c, Phase8::ZERO));
            let w = g.add_node(ZxNode::spider(c, Phase8::ZERO));
            g.add_edge(a, u);
            g.add_edge(w, b);
            back.with_nodes(vec![z, u, w])
        }
        (Zero, RightToLeft) => {
            let [z, u, w] = r.nodes[..] else { return invalid() };
            ensure(distinct(&r.nodes))?;
            ensure(is_spider_phase(d, z, c, Phase8::PI) && d.degree(z) == 0)?;
            for v in [u, w] {
                ensure(is_spider_phase(d, v, c, Phase8::ZERO) && d.degree(v) == 1 && d.self_loops(v) == 0)?;
            }
            let a = d.neighbours(u)[0];
            let b = d.neighbours(w)[0];
            ensure(a != w && b != u)?;
            g.remove_node(u);
            g.remove_node(w);
            g.add_edge(a, b);
            back.with_nodes(vec![z]).with_edges(vec![(a, b)])
        }
        (ZeroScalar, LeftToRight) => {
            let [z, y] = r.nodes[..] else { return invalid() };
            ensure(z != y && is_spider_phase(d, z, c, Phase8::PI) && d.degree(z) == 0)?;
            let a = is_spider(d, y, c).ok_or(ZxError::RedexInvalid)?;
            ensure(d.degree(y) == 0)?;
            g.remove_node(y);
            back.with_nodes(vec![z]).with_phases(vec![a])
        }
        (ZeroScalar, RightToLeft) => {
            let [z] = r.nodes[..] else { return invalid() };
            let [a] = r.phases[..] else { return invalid() };
            ensure(is_spider_phase(d, z, c, Phase8::PI) && d.degree(z) == 0)?;
            let y = g.add_node(ZxNode::spider(c, a));
            back.with_nodes(vec![z, y])
        }
        (HadamardSelfInverse, LeftToRight) => {
            let [h1, h2] = r.nodes[..] else { return invalid() };
            ensure(h1 != h2 && is_h(d, h1) && is_h(d, h2) && d.edge_count(h1, h2) == 1)?;
            let a = far_end(d, h1, h2).ok_or(ZxError::RedexInvalid)?;
            let b = far_end(d, h2, h1).ok_or(ZxError::RedexInvalid)?;
            g.remove_node(h1);
            g.remove_node(h2);
            g.add_edge(a, b);
            back.with_edges(vec![(a, b)])
        }
        (HadamardSelfInverse, RightToLeft) => {
            let [(a, b)] = r.edges[..] else { return invalid() };
            ensure(g.remove_edge(a, b))?;
            let h1 = g.add_node(ZxNode::H);
            let h2 = g.add_node(ZxNode::H);
            g.add_edge(a, h1);
            g.add_edge(h1, h2);
            g.add_edge(h2, b);
            back.with_nodes(vec![h1, h2])
        }
        (Hopf, LeftToRight) => {
            let [gn, rn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, gn, c, Phase8::ZERO) && is_spider_phase(d, rn, o, Phase8::ZERO))?;
            ensure(d.edge_count(gn, rn) == 2)?;
            g.remove_edge(gn, rn);
            g.remove_edge(gn, rn);
            back.with_nodes(vec![gn, rn])
        }
        (Hopf, RightToLeft) => {
            let [gn, rn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, gn, c, Phase8::ZERO) && is_spider_phase(d, rn, o, Phase8::ZERO))?;
            ensure(d.edge_count(gn, rn) == 0)?;
            g.add_edge(gn, rn);
            g.add_edge(gn, rn);
            back.with_nodes(vec![gn, rn])
        }
        (Supplementarity, LeftToRight) => {
            let [rn, a, b] = r.nodes[..] else { return invalid() };
            ensure(distinct(&r.nodes) && is_spider_phase(d, rn, o, Phase8::ZERO))?;
            let pa = is_spider(d, a, c).ok_or(ZxError::RedexInvalid)?;
            ensure(is_spider_phase(d, b, c, pa + Phase8::PI))?;
            for v in [a, b] {
                ensure(d.degree(v) == 1 && d.edge_count(v, rn) == 1)?;
            }
            g.remove_node(a);
            g.remove_node(b);
            params.alpha = pa;
            back.with_nodes(vec![rn]).with_phases(vec![pa])
        }
        (Supplementarity, RightToLeft) => {
            let [rn] = r.nodes[..] else { return invalid() };
            let [pa] = r.phases[..] else { return invalid() };
            ensure(is_spider_phase(d, rn, o, Phase8::ZERO))?;
            let a = g.add_node(ZxNode::spider(c, pa));
            let b = g.add_node(ZxNode::spider(c, pa + Phase8::PI));
            g.add_edge(a, rn);
            g.add_edge(b, rn);
            params.alpha = pa;
            back.with_nodes(vec![rn, a, b])
        }
    };
    Ok(Outcome { d: g, inverse: out, params })
}

fn insert_scalar(g: &mut Diagram, s: &Diagram) -> Vec<NodeId> {
    let before: BTreeSet<NodeId> = g.nodes().keys().copied().collect();
    *g = g.tensor(s);
    g.nodes().keys().copied().filter(|k| !before.contains(k)).collect()
}

/// Closed components of `g` matching the components of `s`, avoiding `skip`.
fn find_scalar(g: &Diagram, s: &Diagram, skip: &BTreeSet<NodeId>) -> Option<Vec<NodeId>> {
    let host: Vec<BTreeSet<NodeId>> = g
        .components()
        .into_iter()
        .filter(|c| c.iter().all(|v| !g.is_boundary(*v) && !skip.contains(v)))
        .collect();
    let mut used = vec![false; host.len()];
    let mut out = Vec::new();
    for comp in s.components() {
        let want = s.induced_closed(&comp);
        let i = (0..host.len()).find(|&i| !used[i] && structurally_equal(&g.induced_closed(&host[i]), &want))?;
        used[i] = true;
        out.extend(host[i].iter().copied());
    }
    Some(out)
}

/// Applies a redex and returns the redex that undoes it.
pub fn apply_with_inverse(d: &Diagram, r: &Redex) -> Result<(Diagram, Redex), ZxError> {
    let Outcome { d: mut g, mut inverse, params } = apply_core(d, r)?;
    let c = in_colour(rule_scalar(r.rule, r.flipped, &params), r.colour);
    if c.node_count() == 0 && matches!(r.scalar, ScalarMode::Default) {
        return Ok((g, inverse));
    }
    let anchor: BTreeSet<NodeId> = r.nodes.iter().copied().chain(inverse.nodes.iter().copied()).collect();
    match (&r.scalar, r.dir) {
        (ScalarMode::Default, Direction::LeftToRight) => {
            inverse.scalar = ScalarMode::Remove(insert_scalar(&mut g, &c));
        }
        (ScalarMode::Default, Direction::RightToLeft) => match find_scalar(&g, &c, &anchor) {
            Some(nodes) => {
                let set: BTreeSet<NodeId> = nodes.iter().copied().collect();
                let removed = g.induced_closed(&set);
                for v in nodes {
                    g.remove_node(v);
                }
                inverse.scalar = ScalarMode::Add(removed.compacted());
            }
            None => {
                let inv = scalar_inverse(&c)
                    .ok_or_else(|| ZxError::NotApplicable("zero scalar factor cannot be inverted".into()))?;
                inverse.scalar = ScalarMode::Remove(insert_scalar(&mut g, &inv));
            }
        },
        (ScalarMode::Remove(nodes), dir) => {
            let set: BTreeSet<NodeId> = nodes.iter().copied().collect();
            ensure(set.iter().all(|v| g.nodes().contains_key(v)))?;
            ensure(g.edges().iter().all(|&(a, b)| set.contains(&a) == set.contains(&b)))?;
            let removed = g.induced_closed(&set);
            let want = match dir {
                Direction::RightToLeft => Some(c.clone()),
                Direction::LeftToRight => scalar_inverse(&c),
            };
            ensure(want.is_some_and(|w| structurally_equal(&removed, &w)))?;
            for v in nodes {
                g.remove_node(*v);
            }
            inverse.scalar = ScalarMode::Add(removed.compacted());
        }
        (ScalarMode::Add(s), _) => {
            inverse.scalar = ScalarMode::Remove(insert_scalar(&mut g, s));
        }
    }
    Ok((g, inverse))
}

pub fn apply(d: &Diagram, r: &Redex) -> Result<Diagram, ZxError> {
    apply_with_inverse(d, r).map(|x| x.0)
}

// ---- enumeration -----------------------------------------------------------

fn spiders(d: &Diagram) -> Vec<(NodeId, Colour, Phase8)> {
    d.nodes().iter().filter_map(|(&v, k)| k.as_spider().map(|(c, p)| (v, c, p))).collect()
}

fn distinct_edges(d: &Diagram) -> Vec<(NodeId, NodeId)> {
    let s: BTreeSet<(NodeId, NodeId)> = d.edges().iter().copied().collect();
    s.into_iter().collect()
}

fn candidates(d: &Diagram, rule: RuleId, dir: Direction, colour: Colour) -> Vec<Redex> {
    use Direction::*;
    use RuleId::*;
    let base = Redex::new(rule, dir, colour);
    let o = colour.other();
    let sp = spiders(d);
    let of = |c: Colour| sp.iter().filter(move |x| x.1 == c).map(|x| x.0);
    let mut out = Vec::new();
    match (rule, dir) {
        (Spider, LeftToRight) => {
            for (a, b) in distinct_edges(d) {
                if a != b {
                    out.push(base.clone().with_nodes(vec![a, b]));
                }
            }
        }
        (Spider, RightToLeft) => {
            for u in of(colour) {
                out.push(base.clone().with_nodes(vec![u]).with_phases(vec![Phase8::ZERO]).with_count(1));
            }
        }
        (Loop, _) => out.extend(of(colour).map(|u| base.clone().with_nodes(vec![u]))),
        (Identity | Cup, LeftToRight) => out.extend(of(colour).map(|u| base.clone().with_nodes(vec![u]))),
        (Identity | Cup | HadamardSelfInverse, RightToLeft) => {
            out.extend(distinct_edges(d).into_iter().map(|e| base.clone().with_edges(vec![e])))
        }
        (Bialgebra | Hopf, LeftToRight) => {
            for (a, b) in distinct_edges(d) {
                out.push(base.clone().with_nodes(vec![a, b]));
                out.push(base.clone().with_nodes(vec![b, a]));
            }
        }
        (Bialgebra, RightToLeft) => {
            let mut seen = BTreeSet::new();
            for x in of(o) {
                let zs: Vec<NodeId> =
                    d.neighbours(x).into_iter().filter(|z| is_spider(d, *z, colour).is_some()).collect();
                // the other red partners share every green neighbour of x
                let mut xs: Vec<NodeId> = zs
                    .first()
                    .map(|z| {
                        d.neighbours(*z).into_iter().filter(|y| is_spider(d, *y, o).is_some()).collect()
                    })
                    .unwrap_or_else(|| vec![x]);
                xs.sort();
                xs.dedup();
                let mut nodes = xs.clone();
                nodes.extend(&zs);
                if seen.insert(nodes.clone()) {
                    out.push(base.clone().with_nodes(nodes).with_count(xs.len()));
                }
            }
        }
        (Copy, LeftToRight) => {
            for (a, b) in distinct_edges(d) {
                out.push(base.clone().with_nodes(vec![a, b]));
                out.push(base.clone().with_nodes(vec![b, a]));
            }
        }
        (Copy, RightToLeft) => out.extend(of(o).map(|t| base.clone().with_nodes(vec![t]))),
        (PiCopy | PiCommute, LeftToRight) => {
            for (a, b) in distinct_edges(d) {
                out.push(base.clone().with_nodes(vec![a, b]));
                out.push(base.clone().with_nodes(vec![b, a]));
            }
        }
        (PiCopy | PiCommute, RightToLeft) => {
            for gn in of(colour) {
                let n = d.neighbours(gn);
                let xs: Vec<NodeId> =
                    n.iter().copied().filter(|&t| is_spider_phase(d, t, o, Phase8::PI)).collect();
                for &y in &n {
                    if xs.contains(&y) {
                        continue;
                    }
                    let mut nodes = vec![gn];
                    nodes.extend(&xs);
                    out.push(base.clone().with_nodes(nodes).with_edges(vec![(gn, y)]));
                }
                // a single pi node may itself be the reinsertion point's neighbour
                for &t in &xs {
                    for &y in &xs {
                        if y != t {
                            out.push(base.clone().with_nodes(vec![gn, t]).with_edges(vec![(gn, y)]));
                        }
                    }
                }
            }
        }
        (ColourChange, LeftToRight) => out.extend(of(colour).map(|v| base.clone().with_nodes(vec![v]))),
        (ColourChange, RightToLeft) => out.extend(of(o).map(|v| base.clone().with_nodes(vec![v]))),
        (Euler, LeftToRight) => {
            for (&v, k) in d.nodes() {
                if *k == ZxNode::H {
                    for flipped in [false, true] {
                        out.push(Redex { flipped, ..base.clone().with_nodes(vec![v]) });
                    }
                }
            }
        }
        (Euler, RightToLeft) => {
            for n2 in of(o) {
                let n = d.neighbours(n2);
                if n.len() == 2 && n[0] != n[1] {
                    for flipped in [false, true] {
                        out.push(Redex { flipped, ..base.clone().with_nodes(vec![n[0], n2, n[1]]) });
                    }
                }
            }
        }
        (Star, LeftToRight) => {
            for (&s, k) in d.nodes() {
                if *k == ZxNode::Star {
                    for z in of(colour) {
                        out.push(base.clone().with_nodes(vec![s, z]));
                    }
                }
            }
        }
        (Star | VariantStar, RightToLeft) => out.push(base.clone()),
        (VariantStar, LeftToRight) => {
            let pairs: Vec<(NodeId, NodeId)> = distinct_edges(d)
                .into_iter()
                .flat_map(|(a, b)| [(a, b), (b, a)])
                .filter(|&(a, b)| is_spider(d, a, colour).is_some() && is_spider(d, b, o).is_some())
                .collect();
            for (&s, k) in d.nodes() {
                if *k == ZxNode::Star {
                    for (i, p) in pairs.iter().enumerate() {
                        for q in &pairs[i + 1..] {
                            out.push(base.clone().with_nodes(vec![s, p.0, p.1, q.0, q.1]));
                        }
                    }
                }
            }
        }
        (Zero, LeftToRight) => {
            for z in of(colour) {
                for e in distinct_edges(d) {
                    out.push(base.clone().with_nodes(vec![z]).with_edges(vec![e]));
                }
            }
        }
        (Zero, RightToLeft) => {
            let ends: Vec<NodeId> = of(colour).filter(|&v| d.degree(v) == 1).collect();
            for z in of(colour) {
                for (i, &u) in ends.iter().enumerate() {
                    for &w in &ends[i + 1..] {
                        out.push(base.clone().with_nodes(vec![z, u, w]));
                    }
                }
            }
        }
        (ZeroScalar, LeftToRight) => {
            for z in of(colour) {
                for y in of(colour) {
                    out.push(base.clone().with_nodes(vec![z, y]));
                }
            }
        }
        (ZeroScalar, RightToLeft) => {
            out.extend(of(colour).map(|z| base.clone().with_nodes(vec![z]).with_phases(vec![Phase8::ZERO])))
        }
        (HadamardSelfInverse, LeftToRight) => {
            for (a, b) in distinct_edges(d) {
                out.push(base.clone().with_nodes(vec![a, b]));
            }
        }
        (Hopf, RightToLeft) => {
            for a in of(colour) {
                for b in of(o) {
                    out.push(base.clone().with_nodes(vec![a, b]));
                }
            }
        }
        (Supplementarity, LeftToRight) => {
            for rn in of(o) {
                let n = d.neighbours(rn);
                for &a in &n {
                    for &b in &n {
                        if a != b {
                            out.push(base.clone().with_nodes(vec![rn, a, b]));
                        }
                    }
                }
            }
        }
        (Supplementarity, RightToLeft) => {
            out.extend(of(o).map(|rn| base.clone().with_nodes(vec![rn]).with_phases(vec![Phase8::HALF_PI])))
        }
    }
    out
}

/// Every applicable redex of one rule in one direction, in a deterministic
/// order.
pub fn find_redexes_dir(d: &Diagram, rule: RuleId, dir: Direction) -> Vec<Redex> {
    let mut out: Vec<Redex> = [Colour::Green, Colour::Red]
        .into_iter()
        .flat_map(|c| candidates(d, rule, dir, c))
        .filter(|r| apply(d, r).is_ok())
        .collect();
    out.sort_by_key(|r| r.sort_key());
    out.dedup();
    out
}

/// Redexes of `rule` in both directions.
pub fn find_redexes(d: &Diagram, rule: RuleId) -> Vec<Redex> {
    let mut out = find_redexes_dir(d, rule, Direction::LeftToRight);
    out.extend(find_redexes_dir(d, rule, Direction::RightToLeft));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::*;
    use crate::random::{random_diagram, RandomSpec};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spider_fusion_adds_phases() {
        let d = z_spider(Phase8::new(2), 1, 1).compose(&z_spider(Phase8::new(6), 1, 1)).unwrap();
        let rs = find_redexes_dir(&d, RuleId::Spider, Direction::LeftToRight);
        assert_eq!(rs.len(), 1);
        let out = apply(&d, &rs[0]).unwrap();
        assert!(structurally_equal(&out, &z_spider(Phase8::ZERO, 1, 1)));
    }

    #[test]
    fn pi_copy_negates_the_phase() {
        let d = x_spider(Phase8::PI, 1, 1).compose(&z_spider(Phase8::new(2), 1, 2)).unwrap();
        let r = find_redexes_dir(&d, RuleId::PiCopy, Direction::LeftToRight);
        assert_eq!(r.len(), 1);
        let out = apply(&d, &r[0]).unwrap();
        assert_eq!(interpret(&out), interpret(&d));
        assert!(out.nodes().values().any(|k| *k == ZxNode::Z(Phase8::new(6))));
    }

    #[test]
    fn zero_scalar_absorbs() {
        let d = scalar_spider(Colour::Green, Phase8::PI).tensor(&scalar_spider(Colour::Green, Phase8::new(3)));
        let r = find_redexes_dir(&d, RuleId::ZeroScalar, Direction::LeftToRight);
        let out = apply(&d, &r[0]).unwrap();
        assert!(structurally_equal(&out, &scalar_spider(Colour::Green, Phase8::PI)));
    }

    #[test]
    fn euler_adds_its_scalar() {
        let d = hadamard();
        let r = find_redexes_dir(&d, RuleId::Euler, Direction::LeftToRight);
        assert_eq!(r.len(), 4);
        for x in r {
            let out = apply(&d, &x).unwrap();
            assert_eq!(interpret(&out), interpret(&d));
            assert_eq!(out.node_count(), 3 + 3);
        }
    }

    #[test]
    fn hopf_on_double_edge() {
        let mut d = Diagram::new();
        let i = d.add_input();
        let o = d.add_output();
        let g = d.add_node(ZxNode::Z(Phase8::ZERO));
        let r = d.add_node(ZxNode::X(Phase8::ZERO));
        d.add_edge(i, g);
        d.add_edge(g, r);
        d.add_edge(g, r);
        d.add_edge(r, o);
        let rs = find_redexes_dir(&d, RuleId::Hopf, Direction::LeftToRight);
        // one match per colour reading of the pair
        assert_eq!(rs.len(), 2);
        for r in rs {
            assert_eq!(interpret(&apply(&d, &r).unwrap()), interpret(&d));
        }
    }

    #[test]
    fn stale_redex_is_rejected() {
        let d = z_spider(Phase8::ZERO, 1, 1).compose(&z_spider(Phase8::ZERO, 1, 1)).unwrap();
        let r = find_redexes_dir(&d, RuleId::Spider, Direction::LeftToRight).remove(0);
        let d2 = apply(&d, &r).unwrap();
        assert_eq!(apply(&d2, &r), Err(ZxError::RedexInvalid));
    }

    #[test]
    fn every_redex_is_sound_and_invertible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut applied = 0;
        for t in 0..60 {
            let mut spec = RandomSpec::stabilizer(t % 2, 1 + t % 2, 2 + t % 5);
            spec.stabilizer = t % 3 != 0;
            let mut d = random_diagram(&mut rng, &spec);
            if t % 4 == 0 {
                d = d.tensor(&star()).tensor(&scalar_spider(Colour::Green, Phase8::PI));
            }
            let m = interpret(&d);
            for rule in RuleId::ALL {
                let mut rs = find_redexes(&d, rule);
                rs.shuffle(&mut rng);
                for r in rs.iter().take(6) {
                    let (out, inv) = apply_with_inverse(&d, r).unwrap();
                    assert_eq!(interpret(&out), m, "{rule:?} {r:?}");
                    let back = apply(&out, &inv).unwrap_or_else(|e| panic!("{rule:?} {r:?} {inv:?} {e}"));
                    assert!(structurally_equal(&back, &d), "{rule:?} {r:?} not inverted");
                    applied += 1;
                }
            }
        }
        assert!(applied > 1000, "{applied}");
    }
}
