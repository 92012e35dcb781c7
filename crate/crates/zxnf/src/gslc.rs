//! Graph states with local Cliffords (GS-LC).
//!
//! A [`GsLc`] denotes `scalar * (U_0 x ... x U_{n-1}) |G>` where `|G>` is the
//! normalised graph state of the adjacency matrix and each `U_v` is a
//! canonical Clifford. Diagrams are folded into this form one node at a
//! time using exact primitive operations (add a qubit, split a qubit into
//! two, join two qubits, post-select), each of which keeps the description
//! exact including the scalar.

use std::collections::{HashMap, VecDeque};

use crate::clifford::{mat2_apply, mat2_det, row_apply, C1, Mat2};
use crate::diagram::{check_stabilizer, decompose_to_generators, Diagram, Phase8, ZxNode};
use crate::error::ZxError;
use crate::graph::NodeId;
use crate::ring::RingScalar;
use crate::scalar_nf::{nf_to_diagram, ring_to_nf, zero_nf_diagram, ScalarNF};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsLc {
    pub adj: Vec<Vec<bool>>,
    pub vops: Vec<C1>,
    pub scalar: RingScalar,
}

fn r_z() -> C1 {
    C1::z(Phase8::HALF_PI)
}

fn r_x_inv() -> C1 {
    C1::x(Phase8::MINUS_HALF_PI)
}

fn plus() -> [RingScalar; 2] {
    [RingScalar::inv_sqrt2(), RingScalar::inv_sqrt2()]
}

fn is_basis_row(e: &[RingScalar; 2]) -> bool {
    e[0].is_zero() || e[1].is_zero()
}

impl GsLc {
    /// `n` isolated qubits in `|+>`, scalar one.
    pub fn plus_states(n: usize) -> Self {
        GsLc { adj: vec![vec![false; n]; n], vops: vec![C1::I; n], scalar: RingScalar::one() }
    }

    /// The zero map on `n` qubits in canonical shape.
    pub fn zero(n: usize) -> Self {
        GsLc { scalar: RingScalar::zero(), ..Self::plus_states(n) }
    }

    /// Graph state of an adjacency matrix, identity local operators.
    pub fn graph_state(adj: Vec<Vec<bool>>) -> Self {
        let n = adj.len();
        GsLc { adj, vops: vec![C1::I; n], scalar: RingScalar::one() }
    }

    pub fn n(&self) -> usize {
        self.vops.len()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    fn make_zero(&mut self) {
        *self = GsLc::zero(self.n());
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.adj[v][u]).collect()
    }

    pub fn edge_count(&self) -> usize {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.adj[i][j]).count()).sum()
    }

    fn toggle(&mut self, a: usize, b: usize) {
        self.adj[a][b] = !self.adj[a][b];
        self.adj[b][a] = !self.adj[b][a];
    }

    fn check(&self, v: usize) -> Result<(), ZxError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(ZxError::InvalidVertex(v))
        }
    }

    /// `U_v <- U_v . c` (`c` acts first).
    pub fn right_mul(&mut self, v: usize, c: C1) {
        let (u, l) = self.vops[v].mul(c);
        self.vops[v] = u;
        self.scalar = &self.scalar * l;
    }

    /// `U_v <- c . U_v` (`c` acts last).
    pub fn left_mul(&mut self, v: usize, c: C1) {
        let (u, l) = c.mul(self.vops[v]);
        self.vops[v] = u;
        self.scalar = &self.scalar * l;
    }

    /// Local complementation about `v`, compensated on the local operators
    /// so the denoted map is unchanged.
    pub fn local_complement(&mut self, v: usize) -> Result<(), ZxError> {
        self.check(v)?;
        let nb = self.neighbours(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                self.toggle(a, b);
            }
        }
        self.right_mul(v, r_x_inv());
        for &u in &nb {
            self.right_mul(u, r_z());
        }
        Ok(())
    }

    /// Local complementation along the edge `v-w`.
    pub fn pivot(&mut self, v: usize, w: usize) -> Result<(), ZxError> {
        self.check(v)?;
        self.check(w)?;
        if !self.adj[v][w] {
            return Err(ZxError::EdgeRequired(v, w));
        }
        self.local_complement(v)?;
        self.local_complement(w)?;
        self.local_complement(v)
    }

    /// Uses the stabilizer `X_v Z_{N(v)}` of the graph state.
    pub fn fixpoint(&mut self, v: usize) -> Result<(), ZxError> {
        self.check(v)?;
        self.right_mul(v, C1::x(Phase8::PI));
        for u in self.neighbours(v) {
            self.right_mul(u, C1::z(Phase8::PI));
        }
        Ok(())
    }

    /// Appends an isolated qubit in `|0> + |1>`.
    pub fn add_qubit(&mut self) -> usize {
        self.insert_isolated(self.n(), C1::I);
        self.scalar = &self.scalar * &RingScalar::sqrt2();
        self.n() - 1
    }

    /// Inserts an isolated qubit in state `c|+>` at position `pos`.
    pub fn insert_isolated(&mut self, pos: usize, c: C1) {
        for row in self.adj.iter_mut() {
            row.insert(pos, false);
        }
        let n = self.n() + 1;
        self.adj.insert(pos, vec![false; n]);
        self.vops.insert(pos, c);
    }

    fn remove_qubit(&mut self, v: usize) {
        self.adj.remove(v);
        for row in self.adj.iter_mut() {
            row.remove(v);
        }
        self.vops.remove(v);
    }

    fn swap_qubits(&mut self, a: usize, b: usize) {
        self.adj.swap(a, b);
        for row in self.adj.iter_mut() {
            row.swap(a, b);
        }
        self.vops.swap(a, b);
    }

    /// Reorders qubits: new qubit `i` is old qubit `order[i]`.
    pub fn permute(&self, order: &[usize]) -> GsLc {
        let n = order.len();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                adj[i][j] = self.adj[order[i]][order[j]];
            }
        }
        GsLc { adj, vops: order.iter().map(|&o| self.vops[o]).collect(), scalar: self.scalar.clone() }
    }

    /// Searches over `lc(v)` and `lc(w)` (with `w` adjacent to `v`) for the
    /// shortest sequence bringing `U_v` into `target`, then performs it.
    fn steer(&mut self, v: usize, w: usize, target: impl Fn(C1) -> bool) {
        if target(self.vops[v]) {
            return;
        }
        let mut prev: HashMap<C1, (C1, bool)> = HashMap::new();
        let mut queue = VecDeque::from([self.vops[v]]);
        let start = self.vops[v];
        let mut hit = None;
        while let Some(c) = queue.pop_front() {
            for on_v in [true, false] {
                let next = c.mul(if on_v { r_x_inv() } else { r_z() }).0;
                if next == start || prev.contains_key(&next) {
                    continue;
                }
                prev.insert(next, (c, on_v));
                if target(next) {
                    hit = Some(next);
                    break;
                }
                queue.push_back(next);
            }
            if hit.is_some() {
                break;
            }
        }
        let mut c = hit.expect("local complementations reach every coset");
        let mut steps = Vec::new();
        while c != start {
            let (p, on_v) = prev[&c];
            steps.push(on_v);
            c = p;
        }
        for on_v in steps.into_iter().rev() {
            self.local_complement(if on_v { v } else { w }).unwrap();
        }
    }

    /// The single-qubit state of an isolated vertex.
    fn isolated_state(&self, v: usize) -> [RingScalar; 2] {
        mat2_apply(self.vops[v].matrix(), &plus())
    }

    /// Applies the row vector `e` to qubit `v` and removes it.
    pub fn post_select(&mut self, v: usize, e: &[RingScalar; 2]) -> Result<(), ZxError> {
        self.check(v)?;
        if self.is_zero() {
            self.remove_qubit(v);
            self.make_zero();
            return Ok(());
        }
        let nb = self.neighbours(v);
        if nb.is_empty() {
            let s = self.isolated_state(v);
            let amp = &(&e[0] * &s[0]) + &(&e[1] * &s[1]);
            self.scalar = &self.scalar * &amp;
            self.remove_qubit(v);
            if self.scalar.is_zero() {
                self.make_zero();
            }
            return Ok(());
        }
        if !is_basis_row(&row_apply(e, self.vops[v].matrix())) {
            let w = nb[0];
            let ee = e.clone();
            self.steer(v, w, move |c| is_basis_row(&row_apply(&ee, c.matrix())));
        }
        let f = row_apply(e, self.vops[v].matrix());
        let (b, mu) = if f[1].is_zero() { (0, f[0].clone()) } else { (1, f[1].clone()) };
        if b == 1 {
            for u in self.neighbours(v) {
                self.right_mul(u, C1::z(Phase8::PI));
            }
        }
        self.scalar = &(&self.scalar * &mu) * &RingScalar::inv_sqrt2();
        self.remove_qubit(v);
        if self.scalar.is_zero() {
            self.make_zero();
        }
        Ok(())
    }

    /// Applies a 2x2 matrix to qubit `v`, after its local operator.
    pub fn apply_single(&mut self, v: usize, m: &Mat2) -> Result<(), ZxError> {
        self.check(v)?;
        if m.iter().all(|x| x.is_zero()) {
            self.make_zero();
            return Ok(());
        }
        if !mat2_det(m).is_zero() {
            let (c, l) = C1::find(m).ok_or_else(|| ZxError::InvalidOperand("non-Clifford operator".into()))?;
            self.left_mul(v, c);
            self.scalar = &self.scalar * &l;
            return Ok(());
        }
        // rank one: m = s e
        let p = m.iter().position(|x| !x.is_zero()).unwrap();
        let (i, j) = (p / 2, p % 2);
        let piv = m[p].clone();
        let s = [m[j].clone(), m[2 + j].clone()];
        let e = [
            m[2 * i].checked_div(&piv).ok_or_else(|| ZxError::InvalidOperand("inexact rank-one split".into()))?,
            m[2 * i + 1].checked_div(&piv).ok_or_else(|| ZxError::InvalidOperand("inexact rank-one split".into()))?,
        ];
        self.post_select(v, &e)?;
        if self.is_zero() {
            self.insert_isolated(v, C1::I);
            return Ok(());
        }
        let (c, l) = C1::for_state(&s).ok_or_else(|| ZxError::InvalidOperand("non-stabilizer state".into()))?;
        self.insert_isolated(v, c);
        self.scalar = &self.scalar * &l;
        Ok(())
    }

    /// Copies qubit `v` in the computational basis; the copy is inserted at
    /// `v + 1`.
    pub fn split(&mut self, v: usize) -> Result<usize, ZxError> {
        self.check(v)?;
        if self.is_zero() {
            self.insert_isolated(v + 1, C1::I);
            return Ok(v + 1);
        }
        let nb = self.neighbours(v);
        if !self.vops[v].is_diagonal() {
            if nb.is_empty() {
                let s = self.isolated_state(v);
                if s[0].is_zero() || s[1].is_zero() {
                    // a basis state copies to a product of two basis states
                    let basis = if s[0].is_zero() {
                        [RingScalar::zero(), RingScalar::one()]
                    } else {
                        [RingScalar::one(), RingScalar::zero()]
                    };
                    let (c, l) = C1::for_state(&basis).unwrap();
                    self.insert_isolated(v + 1, c);
                    self.scalar = &self.scalar * &l;
                    return Ok(v + 1);
                }
                // s = sqrt2 * s0 * Z_a|+>
                let ratio = s[1].checked_div(&s[0]).unwrap();
                let a = (0..4).map(|k| Phase8::new(2 * k)).find(|p| RingScalar::omega(p.k() as i64) == ratio);
                let a = a.ok_or_else(|| ZxError::InvalidOperand("non-stabilizer state".into()))?;
                self.vops[v] = C1::z(a);
                self.scalar = &(&self.scalar * &s[0]) * &RingScalar::sqrt2();
            } else {
                self.steer(v, nb[0], |c| c.is_diagonal());
            }
        }
        // delta . D = (D x I) . delta, and delta|G> = H_{v'} |G + v' ~ v>
        self.insert_isolated(v + 1, C1::I);
        self.toggle(v, v + 1);
        let (h, l) = C1::find(&crate::clifford::h_mat()).unwrap();
        self.vops[v + 1] = h;
        self.scalar = &self.scalar * &l;
        Ok(v + 1)
    }

    /// Merges qubits `a` and `b` with the map `|ij> -> [i = j]|i>`. Returns the
    /// index of the merged qubit.
    pub fn join(&mut self, a: usize, b: usize) -> Result<usize, ZxError> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(ZxError::InvalidOperand("join needs two distinct qubits".into()));
        }
        let keep = |a: usize, b: usize| if b < a { a - 1 } else { a };
        if self.is_zero() {
            self.remove_qubit(b);
            return Ok(keep(a, b));
        }
        // an isolated operand acts as a diagonal operator on the other
        if self.neighbours(a).is_empty() && !self.neighbours(b).is_empty() {
            self.swap_qubits(a, b);
        }
        if self.neighbours(b).is_empty() {
            let s = self.isolated_state(b);
            self.remove_qubit(b);
            let a2 = keep(a, b);
            let d: Mat2 = [s[0].clone(), RingScalar::zero(), RingScalar::zero(), s[1].clone()];
            self.apply_single(a2, &d)?;
            return Ok(a2);
        }
        // steering one side only multiplies the other by diagonal operators,
        // so this settles within a few rounds
        let others = |g: &GsLc, x: usize, y: usize| g.neighbours(x).into_iter().find(|&u| u != y);
        for _ in 0..8 {
            if !self.vops[a].is_diagonal() {
                if let Some(w) = others(self, a, b) {
                    self.steer(a, w, |c| c.is_diagonal());
                    continue;
                }
            }
            if !self.vops[b].is_diagonal() {
                if let Some(w) = others(self, b, a) {
                    self.steer(b, w, |c| c.is_diagonal());
                    continue;
                }
            }
            break;
        }
        let (da, db) = (self.vops[a].is_diagonal(), self.vops[b].is_diagonal());
        if da && db {
            let adjacent = self.adj[a][b];
            let n = self.n();
            for u in 0..n {
                if u != a && u != b && self.adj[b][u] {
                    self.toggle(a, u);
                }
            }
            let mut m = self.vops[a];
            let (c, l) = m.mul(self.vops[b]);
            m = c;
            self.scalar = &self.scalar * l;
            if adjacent {
                let (c, l) = m.mul(C1::z(Phase8::PI));
                m = c;
                self.scalar = &self.scalar * l;
                self.toggle(a, b);
            }
            self.vops[a] = m;
            self.scalar = &self.scalar * &RingScalar::inv_sqrt2();
            self.remove_qubit(b);
            return Ok(keep(a, b));
        }
        if !da && !db {
            // a and b only see each other: a two-qubit state
            let (ua, ub) = (self.vops[a].matrix().clone(), self.vops[b].matrix().clone());
            let half = RingScalar::half();
            // |K2> = (|00> + |01> + |10> - |11>)/2
            let k2 = [half.clone(), half.clone(), half.clone(), -&half];
            let mut psi: [RingScalar; 4] = Default::default();
            for i in 0..2 {
                for j in 0..2 {
                    let mut acc = RingScalar::zero();
                    for p in 0..2 {
                        for q in 0..2 {
                            acc = &acc + &(&(&ua[2 * i + p] * &ub[2 * j + q]) * &k2[2 * p + q]);
                        }
                    }
                    psi[2 * i + j] = acc;
                }
            }
            let r = [psi[0].clone(), psi[3].clone()];
            self.remove_qubit(b);
            let a2 = keep(a, b);
            if r[0].is_zero() && r[1].is_zero() {
                self.make_zero();
                return Ok(a2);
            }
            let (c, l) = C1::for_state(&r).ok_or_else(|| ZxError::InvalidOperand("non-stabilizer state".into()))?;
            self.vops[a2] = c;
            self.scalar = &self.scalar * &l;
            return Ok(a2);
        }
        // a leaf with a non-diagonal operator hanging off a diagonal hub
        if !da {
            self.swap_qubits(a, b);
        }
        let (leaf, hub) = (b, a);
        let u = self.vops[leaf].matrix().clone();
        let s = RingScalar::inv_sqrt2();
        let d0 = &(&u[0] + &u[1]) * &s;
        let d1 = &(&u[2] - &u[3]) * &s;
        self.remove_qubit(leaf);
        let hub2 = keep(hub, leaf);
        let d: Mat2 = [d0, RingScalar::zero(), RingScalar::zero(), d1];
        self.apply_single(hub2, &d)?;
        Ok(hub2)
    }

    /// The denoted state vector, computed directly from the definition.
    pub fn state_vector(&self) -> Vec<RingScalar> {
        let n = self.n();
        let norm = RingScalar::sqrt2_pow(-(n as i64));
        let mut v: Vec<RingScalar> = (0..1usize << n)
            .map(|x| {
                let mut parity = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if self.adj[i][j] && (x >> (n - 1 - i)) & 1 == 1 && (x >> (n - 1 - j)) & 1 == 1 {
                            parity ^= 1;
                        }
                    }
                }
                if parity == 0 {
                    norm.clone()
                } else {
                    -&norm
                }
            })
            .collect();
        for q in 0..n {
            let m = self.vops[q].matrix();
            let bit = 1usize << (n - 1 - q);
            for x in 0..1usize << n {
                if x & bit == 0 {
                    let y = x | bit;
                    let (a, b) = (v[x].clone(), v[y].clone());
                    v[x] = &(&m[0] * &a) + &(&m[1] * &b);
                    v[y] = &(&m[2] * &a) + &(&m[3] * &b);
                }
            }
        }
        v.iter().map(|x| x * &self.scalar).collect()
    }

    /// Scalar normal form of the whole description's scalar part, relative to
    /// the rendered graph (which carries `sqrt2^{n - |E|}`).
    fn render_scalar(&self) -> Result<ScalarNF, ZxError> {
        let k = self.n() as i64 - self.edge_count() as i64;
        ring_to_nf(&(&self.scalar * &RingScalar::sqrt2_pow(-k)))
    }

    /// Renders as a diagram: a green spider per qubit, a Hadamard per edge,
    /// the local operator words on the outputs, and the scalar normal form.
    pub fn to_diagram(&self) -> Result<Diagram, ZxError> {
        if self.is_zero() {
            return Ok(zero_nf_diagram(0, self.n()));
        }
        let mut d = Diagram::new();
        let outs: Vec<NodeId> = (0..self.n()).map(|_| d.add_output()).collect();
        let sp: Vec<NodeId> = (0..self.n()).map(|_| d.add_node(ZxNode::Z(Phase8::ZERO))).collect();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.adj[i][j] {
                    let h = d.add_node(ZxNode::H);
                    d.add_edge(sp[i], h);
                    d.add_edge(h, sp[j]);
                }
            }
        }
        for (q, &o) in outs.iter().enumerate() {
            let mut last = sp[q];
            for &(c, p) in self.vops[q].word() {
                let v = d.add_node(ZxNode::spider(c, p));
                d.add_edge(last, v);
                last = v;
            }
            d.add_edge(last, o);
        }
        Ok(d.tensor(&nf_to_diagram(&self.render_scalar()?)))
    }
}

/// Which edge end a fold qubit stands for.
type End = (usize, u8);

struct Fold {
    g: GsLc,
    labels: Vec<End>,
}

impl Fold {
    fn find(&self, e: End) -> usize {
        self.labels.iter().position(|x| *x == e).expect("edge end has a qubit")
    }

    fn add(&mut self, e: End) -> usize {
        let q = self.g.add_qubit();
        self.labels.push(e);
        q
    }

    fn split(&mut self, q: usize, e: End) -> usize {
        let q2 = self.g.split(q).unwrap();
        self.labels.insert(q2, e);
        q2
    }

    fn contract(&mut self, e1: End, e2: End) {
        let (a, b) = (self.find(e1), self.find(e2));
        let m = self.g.join(a, b).unwrap();
        self.labels.remove(b);
        let one = RingScalar::one();
        self.g.post_select(m, &[one.clone(), one]).unwrap();
        self.labels.remove(m);
    }
}

/// Folds a stabilizer diagram into GS-LC form. Inputs are bent to outputs
/// first, so the result is a state on `n_in + n_out` qubits, inputs first.
pub fn diagram_to_gslc(d: &Diagram) -> Result<GsLc, ZxError> {
    check_stabilizer(d)?;
    let g0 = decompose_to_generators(&d.bend_inputs());
    let n_out = g0.n_outputs();
    let edges = g0.edges().to_vec();
    let mut ends_of: HashMap<NodeId, Vec<End>> = HashMap::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        ends_of.entry(a).or_default().push((i, 0));
        ends_of.entry(b).or_default().push((i, 1));
    }
    let mut f = Fold { g: GsLc::plus_states(0), labels: Vec::new() };

    // bare wires between boundaries
    for (i, &(a, b)) in edges.iter().enumerate() {
        if g0.is_boundary(a) && g0.is_boundary(b) {
            let q = f.add((i, 0));
            f.split(q, (i, 1));
        }
    }
    // visit nodes breadth-first from the boundaries
    let mut order = Vec::new();
    {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue: VecDeque<NodeId> = g0.outputs().iter().copied().collect();
        let mut roots: Vec<NodeId> = g0.nodes().keys().copied().collect();
        loop {
            while let Some(v) = queue.pop_front() {
                for u in g0.neighbours(v) {
                    if g0.nodes().contains_key(&u) && seen.insert(u) {
                        order.push(u);
                        queue.push_back(u);
                    }
                }
            }
            match roots.iter().position(|r| !seen.contains(r)) {
                Some(i) => {
                    let r = roots.remove(i);
                    seen.insert(r);
                    order.push(r);
                    queue.push_back(r);
                }
                None => break,
            }
        }
    }
    let mut placed: std::collections::BTreeSet<NodeId> = std::collections::BTreeSet::new();
    for v in order {
        let ends = ends_of.get(&v).cloned().unwrap_or_default();
        match *g0.kind(v).unwrap() {
            ZxNode::Star => f.g.scalar = &f.g.scalar * &RingScalar::half(),
            ZxNode::Z(p) | ZxNode::X(p) => {
                if ends.is_empty() {
                    f.g.scalar = &f.g.scalar * &(&RingScalar::one() + &RingScalar::omega(p.k() as i64));
                } else {
                    let q = f.add(ends[0]);
                    f.g.left_mul(q, C1::z(p));
                    let mut last = q;
                    for &e in &ends[1..] {
                        last = f.split(last, e);
                    }
                    if matches!(g0.kind(v), Some(ZxNode::X(_))) {
                        for &e in &ends {
                            let q = f.find(e);
                            f.g.apply_single(q, &crate::clifford::h_mat()).unwrap();
                        }
                    }
                }
            }
            ZxNode::H => {
                let q = f.add(ends[0]);
                let q2 = f.split(q, ends[1]);
                f.g.apply_single(q2, &crate::clifford::h_mat()).unwrap();
            }
        }
        placed.insert(v);
        if f.g.is_zero() {
            return Ok(GsLc::zero(n_out));
        }
        // contract every edge whose two ends now exist
        let mut done = std::collections::BTreeSet::new();
        for &(i, _) in &ends {
            if !done.insert(i) {
                continue;
            }
            let (a, b) = edges[i];
            let other = if a == v { b } else { a };
            if g0.is_boundary(other) || !placed.contains(&other) {
                continue;
            }
            f.contract((i, 0), (i, 1));
            if f.g.is_zero() {
                return Ok(GsLc::zero(n_out));
            }
        }
    }
    if f.g.is_zero() {
        return Ok(GsLc::zero(n_out));
    }
    // the remaining qubits belong to boundaries
    let mut order = Vec::with_capacity(n_out);
    for &b in g0.outputs() {
        let (i, side) = ends_of[&b][0];
        let (x, y) = edges[i];
        let other = if side == 0 { y } else { x };
        let e = if g0.is_boundary(other) { (i, side) } else { (i, 1 - side) };
        order.push(f.find(e));
    }
    Ok(f.g.permute(&order))
}


#[cfg(test)]
mod random_tests {
    use super::*;
    use crate::random::{random_diagram, RandomSpec};
    use crate::semantics::interpret;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fold_agrees_with_interpretation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in 0..400 {
            let spec = RandomSpec::stabilizer(t % 3, (t / 3) % 3, 1 + t % 7);
            let d = random_diagram(&mut rng, &spec);
            let g = diagram_to_gslc(&d).unwrap();
            assert_eq!(g.state_vector(), interpret(&d.bend_inputs()).data, "case {t}: {d:?}");
            let n = g.n();
            assert!(n + g.edge_count() + g.vops.iter().map(|c| c.word().len()).sum::<usize>() <= (n * n + 7 * n) / 2);
        }
    }
}
