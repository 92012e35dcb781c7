//! Rewrite rules of the red-green calculus as bidirectional graph
//! transformations.
//!
//! Every rule is stated for a base colour and applies with colours swapped.
//! The only scalars are the empty diagram and the zero scalar, so no rule
//! carries a scalar factor; the scalar rule and the zero rule handle them
//! explicitly.

use std::collections::BTreeSet;

use crate::diagram::Colour;
use crate::error::ZxError;
use crate::graph::NodeId;
use crate::rewrite::Direction;
use crate::toy::diagram::{ToyDiagram, ToyNode, ToyPhase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToyRuleId {
    Spider,
    Loop,
    Cup,
    Bialgebra,
    Copy,
    ElevenCopy,
    ElevenCommute,
    ColourChange,
    Euler,
    Scalar,
    Zero,
    Identity,
    HsSelfInverse,
}

impl ToyRuleId {
    pub const ALL: [ToyRuleId; 13] = [
        ToyRuleId::Spider,
        ToyRuleId::Loop,
        ToyRuleId::Cup,
        ToyRuleId::Bialgebra,
        ToyRuleId::Copy,
        ToyRuleId::ElevenCopy,
        ToyRuleId::ElevenCommute,
        ToyRuleId::ColourChange,
        ToyRuleId::Euler,
        ToyRuleId::Scalar,
        ToyRuleId::Zero,
        ToyRuleId::Identity,
        ToyRuleId::HsSelfInverse,
    ];

    pub fn is_derived(self) -> bool {
        matches!(self, ToyRuleId::Identity | ToyRuleId::HsSelfInverse)
    }
}

/// A located rule application.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ToyRedex {
    pub rule: ToyRuleId,
    pub dir: Direction,
    /// The colour playing the role of green in the base rule.
    pub colour: Colour,
    pub nodes: Vec<NodeId>,
    pub edges: Vec<(NodeId, NodeId)>,
    pub phases: Vec<ToyPhase>,
    pub count: usize,
}

impl ToyRedex {
    pub fn new(rule: ToyRuleId, dir: Direction, colour: Colour) -> Self {
        ToyRedex { rule, dir, colour, nodes: Vec::new(), edges: Vec::new(), phases: Vec::new(), count: 0 }
    }

    fn with_nodes(mut self, nodes: Vec<NodeId>) -> Self {
        self.nodes = nodes;
        self
    }

    fn with_edges(mut self, edges: Vec<(NodeId, NodeId)>) -> Self {
        self.edges = edges;
        self
    }

    fn with_phases(mut self, phases: Vec<ToyPhase>) -> Self {
        self.phases = phases;
        self
    }

    fn with_count(mut self, count: usize) -> Self {
        self.count = count;
        self
    }
}

/// Whether `<green ab | red cd>` is the zero scalar.
pub fn scalar_rule_is_zero(g: ToyPhase, r: ToyPhase) -> bool {
    g.a() == r.b() && g.b() == r.a() && g.a() != g.b()
}

fn is_spider(d: &ToyDiagram, v: NodeId, c: Colour) -> Option<ToyPhase> {
    d.kind(v).and_then(|k| k.as_spider()).and_then(|(c2, p)| (c2 == c).then_some(p))
}

fn is_spider_phase(d: &ToyDiagram, v: NodeId, c: Colour, p: ToyPhase) -> bool {
    is_spider(d, v, c) == Some(p)
}

fn is_hs(d: &ToyDiagram, v: NodeId) -> bool {
    matches!(d.kind(v), Some(ToyNode::HS))
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

fn others(d: &ToyDiagram, v: NodeId, skip: NodeId) -> Vec<NodeId> {
    let mut n = d.neighbours(v);
    if let Some(i) = n.iter().position(|&x| x == skip) {
        n.remove(i);
    }
    n
}

fn far_end(d: &ToyDiagram, v: NodeId, from: NodeId) -> Option<NodeId> {
    if d.degree(v) != 2 || d.self_loops(v) != 0 {
        return None;
    }
    let o = others(d, v, from);
    (o.len() == 1).then(|| o[0])
}

fn distinct(v: &[NodeId]) -> bool {
    v.iter().collect::<BTreeSet<_>>().len() == v.len()
}

/// Applies a redex; fails with `RedexInvalid` if it does not match.
pub fn apply_toy(d: &ToyDiagram, r: &ToyRedex) -> Result<ToyDiagram, ZxError> {
    let c = r.colour;
    let o = c.other();
    let sp = |col: Colour, p: ToyPhase| ToyNode::spider(col, p);
    let zero = ToyPhase::ZERO;
    let mut g = d.clone();
    use Direction::*;
    use ToyRuleId::*;
    match (r.rule, r.dir) {
        (Spider, LeftToRight) => {
            let [u, v] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, u, c).ok_or(ZxError::RedexInvalid)?;
            let b = is_spider(d, v, c).ok_or(ZxError::RedexInvalid)?;
            ensure(u != v && d.edge_count(u, v) >= 1)?;
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
            for (x, y) in moved {
                g.add_edge(x, y);
            }
            g.set_kind(u, sp(c, a + b));
        }
        (Spider, RightToLeft) => {
            let [u] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, u, c).ok_or(ZxError::RedexInvalid)?;
            let [b] = r.phases[..] else { return invalid() };
            ensure(r.count >= 1)?;
            for &(x, y) in &r.edges {
                ensure(x == u && g.remove_edge(x, y))?;
            }
            let v = g.add_node(sp(c, b));
            for &(_, y) in &r.edges {
                g.add_edge(v, if y == u { v } else { y });
            }
            for _ in 0..r.count {
                g.add_edge(u, v);
            }
            g.set_kind(u, sp(c, a + b));
        }
        (Loop, LeftToRight) => {
            let [u] = r.nodes[..] else { return invalid() };
            ensure(is_spider(d, u, c).is_some() && g.remove_edge(u, u))?;
        }
        (Loop, RightToLeft) => {
            let [u] = r.nodes[..] else { return invalid() };
            ensure(is_spider(d, u, c).is_some())?;
            g.add_edge(u, u);
        }
        (Identity | Cup, LeftToRight) => {
            let [u] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, u, c, zero) && d.degree(u) == 2 && d.self_loops(u) == 0)?;
            let n = d.neighbours(u);
            g.remove_node(u);
            g.add_edge(n[0], n[1]);
        }
        (Identity | Cup, RightToLeft) => {
            let [(a, b)] = r.edges[..] else { return invalid() };
            ensure(g.remove_edge(a, b))?;
            let u = g.add_node(sp(c, zero));
            g.add_edge(a, u);
            g.add_edge(u, b);
        }
        (Bialgebra, LeftToRight) => {
            let [gn, rn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, gn, c, zero) && is_spider_phase(d, rn, o, zero))?;
            ensure(d.edge_count(gn, rn) == 1 && d.self_loops(gn) == 0 && d.self_loops(rn) == 0)?;
            let gl = others(d, gn, rn);
            let rl = others(d, rn, gn);
            g.remove_node(gn);
            g.remove_node(rn);
            let xs: Vec<NodeId> = gl
                .iter()
                .map(|&x| {
                    let v = g.add_node(sp(o, zero));
                    g.add_edge(v, x);
                    v
                })
                .collect();
            for &y in &rl {
                let z = g.add_node(sp(c, zero));
                g.add_edge(z, y);
                for &x in &xs {
                    g.add_edge(x, z);
                }
            }
        }
        (Bialgebra, RightToLeft) => {
            ensure(r.count <= r.nodes.len() && distinct(&r.nodes))?;
            let (xs, zs) = r.nodes.split_at(r.count);
            let set: BTreeSet<NodeId> = r.nodes.iter().copied().collect();
            let outer = |v: NodeId, col: Colour, partners: &[NodeId]| -> Result<NodeId, ZxError> {
                ensure(is_spider_phase(d, v, col, zero) && d.self_loops(v) == 0)?;
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
            let gn = g.add_node(sp(c, zero));
            let rn = g.add_node(sp(o, zero));
            for x in xo {
                g.add_edge(gn, x);
            }
            for z in zo {
                g.add_edge(rn, z);
            }
            g.add_edge(gn, rn);
        }
        (Copy, LeftToRight) => {
            let [s, gn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, s, o, zero) && d.degree(s) == 1 && d.edge_count(s, gn) == 1)?;
            ensure(is_spider_phase(d, gn, c, zero) && d.self_loops(gn) == 0)?;
            let legs = others(d, gn, s);
            g.remove_node(s);
            g.remove_node(gn);
            for x in legs {
                let t = g.add_node(sp(o, zero));
                g.add_edge(t, x);
            }
        }
        (Copy, RightToLeft) => {
            ensure(distinct(&r.nodes))?;
            let set: BTreeSet<NodeId> = r.nodes.iter().copied().collect();
            let mut far = Vec::new();
            for &t in &r.nodes {
                ensure(is_spider_phase(d, t, o, zero) && d.degree(t) == 1 && d.self_loops(t) == 0)?;
                let x = d.neighbours(t)[0];
                ensure(!set.contains(&x))?;
                far.push(x);
            }
            for &t in &r.nodes {
                g.remove_node(t);
            }
            let gn = g.add_node(sp(c, zero));
            for x in far {
                g.add_edge(gn, x);
            }
            let s = g.add_node(sp(o, zero));
            g.add_edge(s, gn);
        }
        (ElevenCopy | ElevenCommute, LeftToRight) => {
            let [x, gn] = r.nodes[..] else { return invalid() };
            ensure(is_spider_phase(d, x, o, ToyPhase::P11) && d.edge_count(x, gn) == 1)?;
            let y = far_end(d, x, gn).ok_or(ZxError::RedexInvalid)?;
            ensure(y != gn)?;
            let a = is_spider(d, gn, c).ok_or(ZxError::RedexInvalid)?;
            ensure(d.self_loops(gn) == 0)?;
            let legs = others(d, gn, x);
            ensure(r.rule == ElevenCopy || legs.len() == 1)?;
            g.remove_node(x);
            for &l in &legs {
                g.remove_edge(gn, l);
                let t = g.add_node(sp(o, ToyPhase::P11));
                g.add_edge(gn, t);
                g.add_edge(t, l);
            }
            g.add_edge(y, gn);
            g.set_kind(gn, sp(c, a.swapped()));
        }
        (ElevenCopy | ElevenCommute, RightToLeft) => {
            ensure(!r.nodes.is_empty() && distinct(&r.nodes))?;
            let gn = r.nodes[0];
            let xs = &r.nodes[1..];
            ensure(r.rule == ElevenCopy || xs.len() == 1)?;
            let b = is_spider(d, gn, c).ok_or(ZxError::RedexInvalid)?;
            let [(gg, y)] = r.edges[..] else { return invalid() };
            let set: BTreeSet<NodeId> = r.nodes.iter().copied().collect();
            ensure(gg == gn && !set.contains(&y) && d.edge_count(gn, y) >= 1)?;
            ensure(d.self_loops(gn) == 0 && d.degree(gn) == xs.len() + 1)?;
            let mut far = Vec::new();
            for &t in xs {
                ensure(is_spider_phase(d, t, o, ToyPhase::P11) && d.edge_count(gn, t) == 1)?;
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
            let x = g.add_node(sp(o, ToyPhase::P11));
            g.add_edge(y, x);
            g.add_edge(x, gn);
            g.set_kind(gn, sp(c, b.swapped()));
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
                    let h1 = g.add_node(ToyNode::HS);
                    let h2 = g.add_node(ToyNode::HS);
                    g.add_edge(v, h1);
                    g.add_edge(h1, h2);
                    g.add_edge(h2, v);
                } else {
                    let h = g.add_node(ToyNode::HS);
                    g.add_edge(v, h);
                    g.add_edge(h, if x == v { y } else { x });
                }
            }
            g.set_kind(v, sp(o, a));
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
                ensure(is_hs(d, h))?;
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
                    // two HS nodes in a row back to v: a self-loop
                    if done.insert(h) && done.insert(f) {
                        g.add_edge(v, v);
                    }
                } else {
                    g.add_edge(v, f);
                }
            }
            g.set_kind(v, sp(c, a));
        }
        (Euler, LeftToRight) => {
            let [h] = r.nodes[..] else { return invalid() };
            ensure(is_hs(d, h) && d.self_loops(h) == 0)?;
            let n = d.neighbours(h);
            g.remove_node(h);
            let n1 = g.add_node(sp(c, ToyPhase::P01));
            let n2 = g.add_node(sp(o, ToyPhase::P01));
            let n3 = g.add_node(sp(c, ToyPhase::P01));
            g.add_edge(n[0], n1);
            g.add_edge(n1, n2);
            g.add_edge(n2, n3);
            g.add_edge(n3, n[1]);
        }
        (Euler, RightToLeft) => {
            let [n1, n2, n3] = r.nodes[..] else { return invalid() };
            let p = ToyPhase::P01;
            ensure(distinct(&r.nodes))?;
            ensure(is_spider_phase(d, n1, c, p) && is_spider_phase(d, n2, o, p) && is_spider_phase(d, n3, c, p))?;
            ensure(d.edge_count(n1, n2) == 1 && d.edge_count(n2, n3) == 1 && d.degree(n2) == 2)?;
            let a = far_end(d, n1, n2).ok_or(ZxError::RedexInvalid)?;
            let b = far_end(d, n3, n2).ok_or(ZxError::RedexInvalid)?;
            ensure(a != n3 && b != n1)?;
            for v in [n1, n2, n3] {
                g.remove_node(v);
            }
            let h = g.add_node(ToyNode::HS);
            g.add_edge(a, h);
            g.add_edge(h, b);
        }
        (Scalar, LeftToRight) => {
            let [gn, rn] = r.nodes[..] else { return invalid() };
            let a = is_spider(d, gn, c).ok_or(ZxError::RedexInvalid)?;
            let b = is_spider(d, rn, o).ok_or(ZxError::RedexInvalid)?;
            ensure(d.degree(gn) == 1 && d.degree(rn) == 1 && d.edge_count(gn, rn) == 1)?;
            g.remove_node(gn);
            g.remove_node(rn);
            if scalar_rule_is_zero(a, b) {
                g.add_node(sp(c, ToyPhase::P11));
            }
        }
        (Scalar, RightToLeft) => {
            let [a, b] = r.phases[..] else { return invalid() };
            match r.nodes[..] {
                [z] => {
                    ensure(scalar_rule_is_zero(a, b))?;
                    ensure(is_spider_phase(d, z, c, ToyPhase::P11) && d.degree(z) == 0)?;
                    g.remove_node(z);
                }
                [] => ensure(!scalar_rule_is_zero(a, b))?,
                _ => return invalid(),
            }
            let gn = g.add_node(sp(c, a));
            let rn = g.add_node(sp(o, b));
            g.add_edge(gn, rn);
        }
        (Zero, LeftToRight) => {
            let [z] = r.nodes[..] else { return invalid() };
            let [(a, b)] = r.edges[..] else { return invalid() };
            ensure(is_spider_phase(d, z, c, ToyPhase::P11) && d.degree(z) == 0 && a != z && b != z)?;
            ensure(g.remove_edge(a, b))?;
            let u = g.add_node(sp(c, zero));
            let w = g.add_node(sp(c, zero));
            g.add_edge(a, u);
            g.add_edge(w, b);
        }
        (Zero, RightToLeft) => {
            let [z, u, w] = r.nodes[..] else { return invalid() };
            ensure(distinct(&r.nodes))?;
            ensure(is_spider_phase(d, z, c, ToyPhase::P11) && d.degree(z) == 0)?;
            for v in [u, w] {
                ensure(is_spider_phase(d, v, c, zero) && d.degree(v) == 1 && d.self_loops(v) == 0)?;
            }
            let a = d.neighbours(u)[0];
            let b = d.neighbours(w)[0];
            ensure(a != w && b != u)?;
            g.remove_node(u);
            g.remove_node(w);
            g.add_edge(a, b);
        }
        (HsSelfInverse, LeftToRight) => {
            let [h1, h2] = r.nodes[..] else { return invalid() };
            ensure(h1 != h2 && is_hs(d, h1) && is_hs(d, h2) && d.edge_count(h1, h2) == 1)?;
            let a = far_end(d, h1, h2).ok_or(ZxError::RedexInvalid)?;
            let b = far_end(d, h2, h1).ok_or(ZxError::RedexInvalid)?;
            g.remove_node(h1);
            g.remove_node(h2);
            g.add_edge(a, b);
        }
        (HsSelfInverse, RightToLeft) => {
            let [(a, b)] = r.edges[..] else { return invalid() };
            ensure(g.remove_edge(a, b))?;
            let h1 = g.add_node(ToyNode::HS);
            let h2 = g.add_node(ToyNode::HS);
            g.add_edge(a, h1);
            g.add_edge(h1, h2);
            g.add_edge(h2, b);
        }
    }
    Ok(g)
}

fn spiders(d: &ToyDiagram) -> Vec<(NodeId, Colour, ToyPhase)> {
    d.nodes().iter().filter_map(|(&v, k)| k.as_spider().map(|(c, p)| (v, c, p))).collect()
}

fn distinct_edges(d: &ToyDiagram) -> Vec<(NodeId, NodeId)> {
    let s: BTreeSet<(NodeId, NodeId)> = d.edges().iter().copied().collect();
    s.into_iter().collect()
}

fn candidates(d: &ToyDiagram, rule: ToyRuleId, dir: Direction, colour: Colour) -> Vec<ToyRedex> {
    use Direction::*;
    use ToyRuleId::*;
    let base = ToyRedex::new(rule, dir, colour);
    let o = colour.other();
    let sp = spiders(d);
    let of = |c: Colour| sp.iter().filter(move |x| x.1 == c).map(|x| x.0);
    let both_ways = |out: &mut Vec<ToyRedex>| {
        for (a, b) in distinct_edges(d) {
            out.push(base.clone().with_nodes(vec![a, b]));
            out.push(base.clone().with_nodes(vec![b, a]));
        }
    };
    let mut out = Vec::new();
    match (rule, dir) {
        (Spider, LeftToRight) | (HsSelfInverse, LeftToRight) => {
            for (a, b) in distinct_edges(d) {
                if a != b {
                    out.push(base.clone().with_nodes(vec![a, b]));
                }
            }
        }
        (Spider, RightToLeft) => {
            for u in of(colour) {
                out.push(base.clone().with_nodes(vec![u]).with_phases(vec![ToyPhase::ZERO]).with_count(1));
            }
        }
        (Loop, _) | (Identity | Cup, LeftToRight) | (ColourChange, LeftToRight) => {
            out.extend(of(colour).map(|u| base.clone().with_nodes(vec![u])))
        }
        (Identity | Cup | HsSelfInverse, RightToLeft) => {
            out.extend(distinct_edges(d).into_iter().map(|e| base.clone().with_edges(vec![e])))
        }
        (Bialgebra | Copy | ElevenCopy | ElevenCommute | Scalar, LeftToRight) => both_ways(&mut out),
        (Bialgebra, RightToLeft) => {
            let mut seen = BTreeSet::new();
            for x in of(o) {
                let zs: Vec<NodeId> =
                    d.neighbours(x).into_iter().filter(|z| is_spider(d, *z, colour).is_some()).collect();
                let mut xs: Vec<NodeId> = zs
                    .first()
                    .map(|z| d.neighbours(*z).into_iter().filter(|y| is_spider(d, *y, o).is_some()).collect())
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
        (Copy, RightToLeft) => out.extend(of(o).map(|t| base.clone().with_nodes(vec![t]))),
        (ElevenCopy | ElevenCommute, RightToLeft) => {
            for gn in of(colour) {
                let n = d.neighbours(gn);
                let xs: Vec<NodeId> =
                    n.iter().copied().filter(|&t| is_spider_phase(d, t, o, ToyPhase::P11)).collect();
                for &y in &n {
                    if xs.contains(&y) {
                        continue;
                    }
                    let mut nodes = vec![gn];
                    nodes.extend(&xs);
                    out.push(base.clone().with_nodes(nodes).with_edges(vec![(gn, y)]));
                }
                for &t in &xs {
                    for &y in &xs {
                        if y != t {
                            out.push(base.clone().with_nodes(vec![gn, t]).with_edges(vec![(gn, y)]));
                        }
                    }
                }
            }
        }
        (ColourChange, RightToLeft) => out.extend(of(o).map(|v| base.clone().with_nodes(vec![v]))),
        (Euler, LeftToRight) => {
            out.extend(d.nodes().iter().filter(|(_, k)| **k == ToyNode::HS).map(|(&v, _)| base.clone().with_nodes(vec![v])))
        }
        (Euler, RightToLeft) => {
            for n2 in of(o) {
                let n = d.neighbours(n2);
                if n.len() == 2 && n[0] != n[1] {
                    out.push(base.clone().with_nodes(vec![n[0], n2, n[1]]));
                }
            }
        }
        (Scalar, RightToLeft) => {
            let zs: Vec<NodeId> = of(colour).filter(|&z| d.degree(z) == 0).collect();
            for a in ToyPhase::all() {
                for b in ToyPhase::all() {
                    let r = base.clone().with_phases(vec![a, b]);
                    if scalar_rule_is_zero(a, b) {
                        out.extend(zs.iter().map(|&z| r.clone().with_nodes(vec![z])));
                    } else {
                        out.push(r);
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
                for &u in &ends {
                    for &w in &ends {
                        if u != w {
                            out.push(base.clone().with_nodes(vec![z, u, w]));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every applicable redex of one rule in one direction, in a deterministic
/// order.
pub fn find_toy_redexes_dir(d: &ToyDiagram, rule: ToyRuleId, dir: Direction) -> Vec<ToyRedex> {
    let mut out: Vec<ToyRedex> = [Colour::Green, Colour::Red]
        .into_iter()
        .flat_map(|c| candidates(d, rule, dir, c))
        .filter(|r| apply_toy(d, r).is_ok())
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn find_toy_redexes(d: &ToyDiagram, rule: ToyRuleId) -> Vec<ToyRedex> {
    let mut out = find_toy_redexes_dir(d, rule, Direction::LeftToRight);
    out.extend(find_toy_redexes_dir(d, rule, Direction::RightToLeft));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::diagram::*;
    use crate::toy::semantics::interpret_toy;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn scalar_rule_cases() {
        let zeros: Vec<(ToyPhase, ToyPhase)> = ToyPhase::all()
            .flat_map(|a| ToyPhase::all().map(move |b| (a, b)))
            .filter(|&(a, b)| scalar_rule_is_zero(a, b))
            .collect();
        assert_eq!(zeros, vec![(ToyPhase::P01, ToyPhase::P10), (ToyPhase::P10, ToyPhase::P01)]);
    }

    #[test]
    fn eleven_commutation_swaps_the_phase_bits() {
        let d = red(ToyPhase::P11, 1, 1).compose(&green(ToyPhase::P01, 1, 1)).unwrap();
        let r = find_toy_redexes_dir(&d, ToyRuleId::ElevenCommute, Direction::LeftToRight);
        assert_eq!(r.len(), 1);
        let out = apply_toy(&d, &r[0]).unwrap();
        assert_eq!(interpret_toy(&out), interpret_toy(&d));
        assert!(out.nodes().values().any(|k| *k == ToyNode::Z(ToyPhase::P10)));
    }

    #[test]
    fn every_redex_is_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut applied = 0;
        for t in 0..80 {
            let mut d = random_toy_diagram(&mut rng, t % 2, 1 + t % 2, 2 + t % 5);
            if t % 5 == 0 {
                d = d.tensor(&zero_scalar());
            }
            let m = interpret_toy(&d);
            for rule in ToyRuleId::ALL {
                let mut rs = find_toy_redexes(&d, rule);
                rs.shuffle(&mut rng);
                for r in rs.iter().take(6) {
                    let out = apply_toy(&d, r).unwrap();
                    assert_eq!(interpret_toy(&out), m, "{rule:?} {r:?}");
                    applied += 1;
                }
            }
        }
        assert!(applied > 1000, "{applied}");
    }
}
