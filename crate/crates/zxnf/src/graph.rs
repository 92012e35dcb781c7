//! Open graphs: the shared combinatorial layer under ZX and toy diagrams.
//!
//! Internal nodes carry a label `K`. Boundary wires are ids that appear only
//! in `inputs` or `outputs`, never in `nodes`, and have exactly one incident
//! edge. Edges form an undirected multiset; self-loops are allowed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::ZxError;

pub type NodeId = usize;

/// Node labels that can live in an [`OpenGraph`].
pub trait NodeLabel: Clone + Eq + Ord + Hash + Debug {
    /// Label seen through the dagger (vertical reflection).
    fn adjoint(&self) -> Self;
    /// A two-legged node denoting the identity wire.
    fn wire() -> Self;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenGraph<K> {
    nodes: BTreeMap<NodeId, K>,
    edges: Vec<(NodeId, NodeId)>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    next_id: NodeId,
}

fn norm(a: NodeId, b: NodeId) -> (NodeId, NodeId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl<K: NodeLabel> Default for OpenGraph<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: NodeLabel> OpenGraph<K> {
    pub fn new() -> Self {
        OpenGraph { nodes: BTreeMap::new(), edges: Vec::new(), inputs: Vec::new(), outputs: Vec::new(), next_id: 0 }
    }

    /// Builds a graph from explicit parts. Ids must be distinct between
    /// nodes and boundaries.
    pub fn from_parts(
        nodes: impl IntoIterator<Item = (NodeId, K)>,
        edges: impl IntoIterator<Item = (NodeId, NodeId)>,
        inputs: Vec<NodeId>,
        outputs: Vec<NodeId>,
    ) -> Result<Self, ZxError> {
        let nodes: BTreeMap<NodeId, K> = nodes.into_iter().collect();
        let edges: Vec<(NodeId, NodeId)> = edges.into_iter().map(|(a, b)| norm(a, b)).collect();
        let next_id = nodes
            .keys()
            .chain(inputs.iter())
            .chain(outputs.iter())
            .max()
            .map_or(0, |m| m + 1);
        let g = OpenGraph { nodes, edges, inputs, outputs, next_id };
        g.validate()?;
        Ok(g)
    }

    /// Checks the boundary and edge invariants.
    pub fn validate(&self) -> Result<(), ZxError> {
        let mut seen = BTreeSet::new();
        for b in self.inputs.iter().chain(self.outputs.iter()) {
            if self.nodes.contains_key(b) || !seen.insert(*b) {
                return Err(ZxError::InvalidDiagram(format!("boundary id {b} is reused")));
            }
        }
        let mut bdeg: HashMap<NodeId, usize> = HashMap::new();
        for &(a, b) in &self.edges {
            for x in [a, b] {
                if seen.contains(&x) {
                    *bdeg.entry(x).or_default() += 1;
                } else if !self.nodes.contains_key(&x) {
                    return Err(ZxError::InvalidDiagram(format!("edge ({a},{b}) names unknown id {x}")));
                }
            }
            if a == b && seen.contains(&a) {
                return Err(ZxError::InvalidDiagram(format!("self-loop on boundary {a}")));
            }
        }
        for b in &seen {
            if bdeg.get(b).copied().unwrap_or(0) != 1 {
                return Err(ZxError::InvalidDiagram(format!("boundary {b} must have exactly one edge")));
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> &BTreeMap<NodeId, K> {
        &self.nodes
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    pub fn n_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn n_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn kind(&self, v: NodeId) -> Option<&K> {
        self.nodes.get(&v)
    }

    pub fn set_kind(&mut self, v: NodeId, k: K) {
        if let Some(slot) = self.nodes.get_mut(&v) {
            *slot = k;
        }
    }

    pub fn is_boundary(&self, v: NodeId) -> bool {
        self.inputs.contains(&v) || self.outputs.contains(&v)
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.nodes.contains_key(&v) || self.is_boundary(v)
    }

    fn fresh(&mut self) -> NodeId {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    pub fn add_node(&mut self, k: K) -> NodeId {
        let id = self.fresh();
        self.nodes.insert(id, k);
        id
    }

    /// Appends a new input boundary; the caller must give it one edge.
    pub fn add_input(&mut self) -> NodeId {
        let id = self.fresh();
        self.inputs.push(id);
        id
    }

    /// Appends a new output boundary; the caller must give it one edge.
    pub fn add_output(&mut self) -> NodeId {
        let id = self.fresh();
        self.outputs.push(id);
        id
    }

    pub fn add_edge(&mut self, a: NodeId, b: NodeId) {
        self.edges.push(norm(a, b));
    }

    /// Removes one copy of the edge; returns whether it existed.
    pub fn remove_edge(&mut self, a: NodeId, b: NodeId) -> bool {
        let e = norm(a, b);
        if let Some(pos) = self.edges.iter().position(|x| *x == e) {
            self.edges.swap_remove(pos);
            true
        } else {
            false
        }
    }

    /// Removes a node together with all incident edges.
    pub fn remove_node(&mut self, v: NodeId) {
        self.nodes.remove(&v);
        self.edges.retain(|&(a, b)| a != v && b != v);
    }

    pub fn edge_count(&self, a: NodeId, b: NodeId) -> usize {
        let e = norm(a, b);
        self.edges.iter().filter(|x| **x == e).count()
    }

    /// Other endpoints of the edges at `v`. A self-loop contributes `v` twice.
    pub fn neighbours(&self, v: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v && b == v {
                out.push(v);
                out.push(v);
            } else if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn self_loops(&self, v: NodeId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    /// The unique neighbour of a boundary.
    pub fn boundary_neighbour(&self, b: NodeId) -> NodeId {
        self.neighbours(b)[0]
    }

    /// Relabels every id by adding `off`.
    fn shifted(&self, off: NodeId) -> Self {
        OpenGraph {
            nodes: self.nodes.iter().map(|(k, v)| (k + off, v.clone())).collect(),
            edges: self.edges.iter().map(|&(a, b)| (a + off, b + off)).collect(),
            inputs: self.inputs.iter().map(|x| x + off).collect(),
            outputs: self.outputs.iter().map(|x| x + off).collect(),
            next_id: self.next_id + off,
        }
    }

    /// Disjoint union; inputs and outputs are concatenated.
    pub fn tensor(&self, other: &Self) -> Self {
        let o = other.shifted(self.next_id);
        let mut g = self.clone();
        g.nodes.extend(o.nodes);
        g.edges.extend(o.edges);
        g.inputs.extend(o.inputs);
        g.outputs.extend(o.outputs);
        g.next_id = o.next_id;
        g
    }

    /// Sequential composition: the outputs of `self` are plugged into the
    /// inputs of `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, ZxError> {
        if self.outputs.len() != other.inputs.len() {
            return Err(ZxError::ArityMismatch { left: self.outputs.len(), right: other.inputs.len() });
        }
        let o = other.shifted(self.next_id);
        let mut g = self.clone();
        g.nodes.extend(o.nodes);
        g.edges.extend(o.edges);
        g.next_id = o.next_id;
        let plugs: Vec<(NodeId, NodeId)> = self.outputs.iter().copied().zip(o.inputs.iter().copied()).collect();
        g.outputs = o.outputs;
        for (out_b, in_b) in plugs {
            let ea = g.incident_edge(out_b);
            let eb = g.incident_edge(in_b);
            if ea == eb {
                // the two plugs already join each other: a closed loop
                g.remove_edge(ea.0, ea.1);
                let w = g.add_node(K::wire());
                g.add_edge(w, w);
                continue;
            }
            let x = if ea.0 == out_b { ea.1 } else { ea.0 };
            let y = if eb.0 == in_b { eb.1 } else { eb.0 };
            g.remove_edge(ea.0, ea.1);
            g.remove_edge(eb.0, eb.1);
            g.add_edge(x, y);
        }
        Ok(g)
    }

    fn incident_edge(&self, b: NodeId) -> (NodeId, NodeId) {
        *self.edges.iter().find(|&&(x, y)| x == b || y == b).expect("boundary has an edge")
    }

    /// Dagger: swaps inputs and outputs and takes the adjoint of each label.
    pub fn adjoint(&self) -> Self {
        OpenGraph {
            nodes: self.nodes.iter().map(|(k, v)| (*k, v.adjoint())).collect(),
            edges: self.edges.clone(),
            inputs: self.outputs.clone(),
            outputs: self.inputs.clone(),
            next_id: self.next_id,
        }
    }

    /// Turns every input into an output placed before the existing outputs.
    pub fn bend_inputs(&self) -> Self {
        let mut g = self.clone();
        let mut outs = std::mem::take(&mut g.inputs);
        outs.extend(g.outputs.iter().copied());
        g.outputs = outs;
        g
    }

    /// Inverse of [`bend_inputs`](Self::bend_inputs): the first `n` outputs
    /// become inputs again.
    pub fn unbend(&self, n: usize) -> Self {
        let mut g = self.clone();
        let rest = g.outputs.split_off(n.min(g.outputs.len()));
        let mut ins = std::mem::replace(&mut g.outputs, rest);
        ins.extend(g.inputs.iter().copied());
        g.inputs = ins;
        g
    }

    /// Maps every label, keeping ids and wiring.
    pub fn map_labels<L: NodeLabel>(&self, f: impl Fn(&K) -> L) -> OpenGraph<L> {
        OpenGraph {
            nodes: self.nodes.iter().map(|(k, v)| (*k, f(v))).collect(),
            edges: self.edges.clone(),
            inputs: self.inputs.clone(),
            outputs: self.outputs.clone(),
            next_id: self.next_id,
        }
    }

    /// Sets of node ids forming connected components, boundaries included.
    pub fn components(&self) -> Vec<BTreeSet<NodeId>> {
        let mut adj: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let all: Vec<NodeId> =
            self.nodes.keys().chain(self.inputs.iter()).chain(self.outputs.iter()).copied().collect();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for s in all {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &u in adj.get(&v).map(|x| x.as_slice()).unwrap_or(&[]) {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// The subgraph on a set of internal nodes with no boundary contact.
    pub fn induced_closed(&self, set: &BTreeSet<NodeId>) -> Self {
        OpenGraph {
            nodes: self.nodes.iter().filter(|(k, _)| set.contains(k)).map(|(k, v)| (*k, v.clone())).collect(),
            edges: self.edges.iter().filter(|(a, b)| set.contains(a) && set.contains(b)).copied().collect(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            next_id: self.next_id,
        }
    }

    /// Renumbers ids densely: inputs, then outputs, then nodes in order.
    pub fn compacted(&self) -> Self {
        let mut map = HashMap::new();
        for (i, b) in self.inputs.iter().chain(self.outputs.iter()).chain(self.nodes.keys()).enumerate() {
            map.insert(*b, i);
        }
        let mut edges: Vec<(NodeId, NodeId)> = self.edges.iter().map(|&(a, b)| norm(map[&a], map[&b])).collect();
        edges.sort();
        OpenGraph {
            nodes: self.nodes.iter().map(|(k, v)| (map[k], v.clone())).collect(),
            edges,
            inputs: self.inputs.iter().map(|x| map[x]).collect(),
            outputs: self.outputs.iter().map(|x| map[x]).collect(),
            next_id: map.len(),
        }
    }
}

/// Isomorphism of open graphs fixing the boundary order.
pub fn structurally_equal<K: NodeLabel>(a: &OpenGraph<K>, b: &OpenGraph<K>) -> bool {
    if a.inputs.len() != b.inputs.len()
        || a.outputs.len() != b.outputs.len()
        || a.nodes.len() != b.nodes.len()
        || a.edges.len() != b.edges.len()
    {
        return false;
    }
    let mut ka: Vec<&K> = a.nodes.values().collect();
    let mut kb: Vec<&K> = b.nodes.values().collect();
    ka.sort();
    kb.sort();
    if ka != kb {
        return false;
    }
    let count = |g: &OpenGraph<K>| {
        let mut m: HashMap<(NodeId, NodeId), usize> = HashMap::new();
        for e in &g.edges {
            *m.entry(*e).or_default() += 1;
        }
        m
    };
    let (ca, cb) = (count(a), count(b));
    let mult = |m: &HashMap<(NodeId, NodeId), usize>, x: NodeId, y: NodeId| m.get(&norm(x, y)).copied().unwrap_or(0);

    let mut map: HashMap<NodeId, NodeId> = HashMap::new();
    for (x, y) in a.inputs.iter().zip(&b.inputs).chain(a.outputs.iter().zip(&b.outputs)) {
        map.insert(*x, *y);
    }
    // boundary-boundary wires and boundary attachments are checked as nodes get mapped
    let order: Vec<NodeId> = {
        // breadth-first from the boundaries so that candidates are constrained early
        let mut order = Vec::new();
        let mut seen: BTreeSet<NodeId> = BTreeSet::new();
        let mut queue: std::collections::VecDeque<NodeId> =
            a.inputs.iter().chain(a.outputs.iter()).copied().collect();
        let mut roots: Vec<NodeId> = a.nodes.keys().copied().collect();
        roots.reverse();
        loop {
            while let Some(v) = queue.pop_front() {
                for u in a.neighbours(v) {
                    if a.nodes.contains_key(&u) && seen.insert(u) {
                        order.push(u);
                        queue.push_back(u);
                    }
                }
            }
            match roots.iter().rposition(|r| !seen.contains(r)) {
                Some(i) => {
                    let r = roots[i];
                    seen.insert(r);
                    order.push(r);
                    queue.push_back(r);
                }
                None => break,
            }
        }
        order
    };
    for (x, y) in map.clone() {
        for (x2, y2) in map.clone() {
            if mult(&ca, x, x2) != mult(&cb, y, y2) {
                return false;
            }
        }
    }
    let b_nodes: Vec<NodeId> = b.nodes.keys().copied().collect();
    let mut used: BTreeSet<NodeId> = BTreeSet::new();

    fn go<K: NodeLabel>(
        i: usize,
        order: &[NodeId],
        a: &OpenGraph<K>,
        b: &OpenGraph<K>,
        b_nodes: &[NodeId],
        map: &mut HashMap<NodeId, NodeId>,
        used: &mut BTreeSet<NodeId>,
        ca: &HashMap<(NodeId, NodeId), usize>,
        cb: &HashMap<(NodeId, NodeId), usize>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let kx = &a.nodes[&x];
        let dx = a.degree(x);
        let mult = |m: &HashMap<(NodeId, NodeId), usize>, p: NodeId, q: NodeId| m.get(&norm(p, q)).copied().unwrap_or(0);
        for &y in b_nodes {
            if used.contains(&y) || &b.nodes[&y] != kx || b.degree(y) != dx {
                continue;
            }
            if mult(ca, x, x) != mult(cb, y, y) {
                continue;
            }
            let ok = map.iter().all(|(&p, &q)| mult(ca, x, p) == mult(cb, y, q));
            if !ok {
                continue;
            }
            map.insert(x, y);
            used.insert(y);
            if go(i + 1, order, a, b, b_nodes, map, used, ca, cb) {
                return true;
            }
            map.remove(&x);
            used.remove(&y);
        }
        false
    }
    go(0, &order, a, b, &b_nodes, &mut map, &mut used, &ca, &cb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
    enum L {
        A,
        B,
        W,
    }

    impl NodeLabel for L {
        fn adjoint(&self) -> Self {
            self.clone()
        }
        fn wire() -> Self {
            L::W
        }
    }

    fn wire() -> OpenGraph<L> {
        OpenGraph::from_parts([], [(0, 1)], vec![0], vec![1]).unwrap()
    }

    #[test]
    fn boundary_must_have_one_edge() {
        assert!(OpenGraph::<L>::from_parts([], [], vec![0], vec![]).is_err());
        assert!(OpenGraph::<L>::from_parts([(2, L::A)], [(0, 2), (0, 2)], vec![0], vec![]).is_err());
    }

    #[test]
    fn compose_with_wire_is_identity() {
        let g = OpenGraph::from_parts([(2, L::A)], [(0, 2), (2, 1)], vec![0], vec![1]).unwrap();
        let h = g.compose(&wire()).unwrap();
        assert!(structurally_equal(&g, &h));
        let h = wire().compose(&g).unwrap();
        assert!(structurally_equal(&g, &h));
    }

    #[test]
    fn compose_arity_mismatch() {
        let state = OpenGraph::from_parts([(1, L::A)], [(1, 0)], vec![], vec![0]).unwrap();
        let eff2 = OpenGraph::from_parts([(2, L::A)], [(0, 2), (1, 2)], vec![0, 1], vec![]).unwrap();
        assert_eq!(state.compose(&eff2), Err(ZxError::ArityMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn cup_then_cap_closes_a_loop() {
        let cup = OpenGraph::<L>::from_parts([], [(0, 1)], vec![], vec![0, 1]).unwrap();
        let cap = OpenGraph::<L>::from_parts([], [(0, 1)], vec![0, 1], vec![]).unwrap();
        let c = cup.compose(&cap).unwrap();
        assert_eq!(c.node_count(), 1);
        assert_eq!(c.edges().len(), 1);
        c.validate().unwrap();
    }

    #[test]
    fn bend_identity_gives_cup() {
        let cup = OpenGraph::<L>::from_parts([], [(0, 1)], vec![], vec![0, 1]).unwrap();
        assert!(structurally_equal(&wire().bend_inputs(), &cup));
        assert!(structurally_equal(&wire().bend_inputs().unbend(1), &wire()));
    }

    #[test]
    fn isomorphism_respects_labels_and_multiplicity() {
        let g1 = OpenGraph::from_parts([(2, L::A), (3, L::B)], [(0, 2), (2, 3), (2, 3), (3, 1)], vec![0], vec![1])
            .unwrap();
        let g2 = OpenGraph::from_parts([(7, L::B), (9, L::A)], [(0, 9), (9, 7), (7, 9), (7, 1)], vec![0], vec![1])
            .unwrap();
        let g3 = OpenGraph::from_parts([(7, L::B), (9, L::A)], [(0, 7), (9, 7), (7, 9), (9, 1)], vec![0], vec![1])
            .unwrap();
        assert!(structurally_equal(&g1, &g2));
        assert!(!structurally_equal(&g1, &g3));
    }
}
