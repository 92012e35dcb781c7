//! Graph states with local operators (GS-LO) for the toy theory, the
//! reduced form, pair simplification and the equality decision.
//!
//! The toy graph state of `G` has `q` free and `p_v = sum of q_w` over the
//! neighbours `w` of `v`. A [`GsLo`] applies one local operator per toy bit
//! to it. Local complementation about `v` is compensated by red `01` on `v`
//! and green `01` on its neighbours; the fixpoint uses red `11` on `v` and
//! green `11` on the neighbours.

use std::fmt;

use crate::check_matrix::{to_graph_form, CheckMatrix, Gf2Matrix};
use crate::error::ZxError;
use crate::graph::NodeId;
use crate::toy::diagram::{toy_zero_nf, ToyDiagram, ToyNode, ToyPhase};
use crate::toy::local::{attach_word, in_toy_reduced_set, LocalOp};
use crate::toy::semantics::{interpret_affine, AffineSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GsLo {
    pub adj: Vec<Vec<bool>>,
    pub vops: Vec<LocalOp>,
    /// The empty relation; graph and operators are then in a fixed shape.
    pub zero: bool,
}

fn red01() -> LocalOp {
    LocalOp::red(ToyPhase::P01)
}

fn green01() -> LocalOp {
    LocalOp::green(ToyPhase::P01)
}

impl GsLo {
    pub fn graph_state(adj: Vec<Vec<bool>>) -> Self {
        let n = adj.len();
        GsLo { adj, vops: vec![LocalOp::I; n], zero: false }
    }

    pub fn zero(n: usize) -> Self {
        GsLo { zero: true, ..GsLo::graph_state(vec![vec![false; n]; n]) }
    }

    pub fn n(&self) -> usize {
        self.vops.len()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.adj[v][u]).collect()
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

    /// `sigma_v <- sigma_v . o` (`o` acts first).
    fn right_mul(&mut self, v: usize, o: LocalOp) {
        self.vops[v] = self.vops[v].after(o);
    }

    pub fn local_complement(&mut self, v: usize) -> Result<(), ZxError> {
        self.check(v)?;
        let nb = self.neighbours(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                self.toggle(a, b);
            }
        }
        self.right_mul(v, red01());
        for &u in &nb {
            self.right_mul(u, green01());
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

    pub fn fixpoint(&mut self, v: usize) -> Result<(), ZxError> {
        self.check(v)?;
        self.right_mul(v, LocalOp::red(ToyPhase::P11));
        for u in self.neighbours(v) {
            self.right_mul(u, LocalOp::green(ToyPhase::P11));
        }
        Ok(())
    }

    /// The denoted set of ontic states, computed from the definition.
    pub fn affine_set(&self) -> Option<AffineSet> {
        if self.zero {
            return None;
        }
        let n = self.n();
        let lin = |o: LocalOp, q: bool, p: bool| {
            let i = o.apply(2 * q as u8 + p as u8) ^ o.apply(0);
            (i & 2 != 0, i & 1 != 0)
        };
        let mut point = vec![false; 2 * n];
        for v in 0..n {
            let i = self.vops[v].apply(0);
            point[2 * v] = i & 2 != 0;
            point[2 * v + 1] = i & 1 != 0;
        }
        let basis = (0..n)
            .map(|v| {
                let mut z = vec![false; 2 * n];
                for w in 0..n {
                    let (q, p) = lin(self.vops[w], w == v, self.adj[v][w]);
                    z[2 * w] = q;
                    z[2 * w + 1] = p;
                }
                z
            })
            .collect();
        Some(AffineSet::new(n, point, basis))
    }

    /// A green `00` spider per toy bit, an `HS` per edge, and the canonical
    /// word of each local operator on the way to the output.
    pub fn to_diagram(&self) -> ToyDiagram {
        if self.zero {
            return toy_zero_nf(0, self.n());
        }
        let mut d = ToyDiagram::new();
        let outs: Vec<NodeId> = (0..self.n()).map(|_| d.add_output()).collect();
        let sp: Vec<NodeId> = (0..self.n()).map(|_| d.add_node(ToyNode::Z(ToyPhase::ZERO))).collect();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.adj[i][j] {
                    let h = d.add_node(ToyNode::HS);
                    d.add_edge(sp[i], h);
                    d.add_edge(h, sp[j]);
                }
            }
        }
        for (v, &o) in outs.iter().enumerate() {
            let last = attach_word(&mut d, sp[v], self.vops[v].word());
            d.add_edge(last, o);
        }
        d
    }
}

impl fmt::Display for GsLo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return writeln!(f, "zero on {} toy bits", self.n());
        }
        writeln!(f, "toy bits {}", self.n())?;
        for (v, row) in self.adj.iter().enumerate() {
            let bits: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{bits}  {}", self.vops[v])?;
        }
        Ok(())
    }
}

/// The GS-LO form of a maximal affine set: the check matrix of its
/// directions (`p` bits over `q` bits) is brought to graph form by a local
/// symplectic map, and the point supplies the translations.
pub fn gslo_from_affine(s: &AffineSet) -> Result<GsLo, ZxError> {
    let n = s.n;
    if s.dim() != n {
        return Err(ZxError::NotMaximal);
    }
    let mut bits = vec![vec![false; n]; 2 * n];
    for (j, z) in s.basis.iter().enumerate() {
        for v in 0..n {
            bits[v][j] = z[2 * v + 1];
            bits[n + v][j] = z[2 * v];
        }
    }
    let cm = CheckMatrix::new(Gf2Matrix::from_bits(bits)?)?;
    let (adj, q) = to_graph_form(&cm)?;
    let vops = (0..n)
        .map(|v| {
            let [a, b, c, d] = [q.get(v, v), q.get(v, n + v), q.get(n + v, v), q.get(n + v, n + v)];
            // inverse of a GF(2) matrix with determinant one
            LocalOp::affine([d, b, c, a], s.point[2 * v], s.point[2 * v + 1]).expect("local blocks are invertible")
        })
        .collect();
    let g = GsLo { adj: adj.0, vops, zero: false };
    debug_assert_eq!(g.affine_set().as_ref(), Some(s));
    Ok(g)
}

/// Bends inputs to outputs and brings the resulting state into GS-LO form;
/// the toy bits are the inputs followed by the outputs.
pub fn diagram_to_gslo(d: &ToyDiagram) -> Result<GsLo, ZxError> {
    let n = d.n_inputs() + d.n_outputs();
    match interpret_affine(&d.bend_inputs()) {
        None => Ok(GsLo::zero(n)),
        Some(s) => gslo_from_affine(&s),
    }
}

pub fn has_red(o: LocalOp) -> bool {
    !o.is_green()
}

pub fn is_reduced_toy(g: &GsLo) -> bool {
    let n = g.n();
    !g.zero
        && g.vops.iter().all(|&o| in_toy_reduced_set(o))
        && (0..n).all(|u| (u + 1..n).all(|v| !(g.adj[u][v] && has_red(g.vops[u]) && has_red(g.vops[v]))))
}

/// Moves `sigma_v` into the reduced set inside its coset of red phases, by
/// a local complementation about `v`, a fixpoint at `v`, or both.
fn settle(g: &mut GsLo, v: usize) {
    for (lc, fp) in [(false, true), (true, false), (true, true)] {
        let mut h = g.clone();
        if lc {
            h.local_complement(v).unwrap();
        }
        if fp {
            h.fixpoint(v).unwrap();
        }
        if in_toy_reduced_set(h.vops[v]) {
            *g = h;
            return;
        }
    }
    unreachable!("each coset of the red phases meets the reduced set");
}

fn reduce_vops(g: &mut GsLo) {
    let n = g.n();
    let mut guard = 0;
    while let Some(v) = (0..n).find(|&v| !in_toy_reduced_set(g.vops[v])) {
        settle(g, v);
        guard += 1;
        assert!(guard <= 16 * n + 16, "vertex operator reduction did not settle");
    }
}

/// Brings a nonzero GS-LO state into reduced form.
pub fn reduce_to_rgslo(g: &GsLo) -> Result<GsLo, ZxError> {
    if g.zero {
        return Err(ZxError::ZeroDiagram);
    }
    let mut g = g.clone();
    let n = g.n();
    reduce_vops(&mut g);
    let mut guard = 0;
    loop {
        let pair = (0..n).find_map(|u| {
            (u + 1..n).find(|&v| g.adj[u][v] && has_red(g.vops[u]) && has_red(g.vops[v])).map(|v| (u, v))
        });
        let Some((u, v)) = pair else { break };
        g.pivot(u, v)?;
        let fixed = (0..4).find_map(|mask| {
            let mut h = g.clone();
            if mask & 1 == 1 {
                h.fixpoint(u).unwrap();
            }
            if mask & 2 == 2 {
                h.fixpoint(v).unwrap();
            }
            (!has_red(h.vops[u]) && !has_red(h.vops[v])).then_some(h)
        });
        g = fixed.expect("pivoting clears both red nodes up to fixpoints");
        reduce_vops(&mut g);
        guard += 1;
        assert!(guard <= n + 1, "adjacent red removal did not settle");
    }
    debug_assert!(is_reduced_toy(&g));
    Ok(g)
}

/// Moves the red node of `p` onto its green neighbour `q`, keeping the form
/// reduced.
fn transfer_red(g: &mut GsLo, p: usize, q: usize) {
    let sequences: [&dyn Fn(&mut GsLo); 2] = [
        &|g: &mut GsLo| {
            g.local_complement(q).unwrap();
            g.local_complement(p).unwrap();
        },
        &|g: &mut GsLo| g.pivot(p, q).unwrap(),
    ];
    for seq in sequences {
        let mut h = g.clone();
        seq(&mut h);
        for mask in 0..4 {
            let mut k = h.clone();
            if mask & 1 == 1 {
                k.fixpoint(p).unwrap();
            }
            if mask & 2 == 2 {
                k.fixpoint(q).unwrap();
            }
            if is_reduced_toy(&k) && !has_red(k.vops[p]) && has_red(k.vops[q]) {
                *g = k;
                return;
            }
        }
    }
    unreachable!("one of the two transformations always applies");
}

/// Simplifies a pair of reduced forms so that red nodes are paired up
/// wherever an unpaired pair of toy bits is adjacent.
pub fn simplify_pair_toy(a: &GsLo, b: &GsLo) -> Result<(GsLo, GsLo), ZxError> {
    if a.n() != b.n() {
        return Err(ZxError::DimensionMismatch(format!("{} vs {} toy bits", a.n(), b.n())));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let n = a.n();
    for _ in 0..=n {
        let only = |x: usize, a: &GsLo, b: &GsLo| has_red(a.vops[x]) && !has_red(b.vops[x]);
        let mut found = None;
        'search: for p in 0..n {
            if !only(p, &a, &b) {
                continue;
            }
            for q in 0..n {
                if only(q, &b, &a) && (a.adj[p][q] || b.adj[p][q]) {
                    found = Some((p, q));
                    break 'search;
                }
            }
        }
        let Some((p, q)) = found else { return Ok((a, b)) };
        if a.adj[p][q] {
            transfer_red(&mut a, p, q);
        } else {
            transfer_red(&mut b, q, p);
        }
    }
    unreachable!("each transformation pairs up a red node")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToyVerdict {
    Equal,
    Unequal,
}

pub fn equal_gslo(g1: &GsLo, g2: &GsLo) -> ToyVerdict {
    if g1.n() != g2.n() {
        return ToyVerdict::Unequal;
    }
    match (g1.zero, g2.zero) {
        (true, true) => return ToyVerdict::Equal,
        (true, false) | (false, true) => return ToyVerdict::Unequal,
        _ => {}
    }
    let r1 = reduce_to_rgslo(g1).unwrap();
    let r2 = reduce_to_rgslo(g2).unwrap();
    let (s1, s2) = simplify_pair_toy(&r1, &r2).unwrap();
    if s1.adj == s2.adj && s1.vops == s2.vops {
        ToyVerdict::Equal
    } else {
        ToyVerdict::Unequal
    }
}

/// Decides equality of two toy diagrams.
pub fn equal_toy(d1: &ToyDiagram, d2: &ToyDiagram) -> Result<ToyVerdict, ZxError> {
    if d1.n_inputs() != d2.n_inputs() || d1.n_outputs() != d2.n_outputs() {
        return Ok(ToyVerdict::Unequal);
    }
    Ok(equal_gslo(&diagram_to_gslo(d1)?, &diagram_to_gslo(d2)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToyForm {
    GsLo,
    RGsLo,
}

/// Normalizes a toy diagram; operators are returned operator-shaped.
pub fn normalize_toy(d: &ToyDiagram, form: ToyForm) -> Result<ToyDiagram, ZxError> {
    let g = diagram_to_gslo(d)?;
    if g.zero {
        return Ok(toy_zero_nf(d.n_inputs(), d.n_outputs()));
    }
    let g = match form {
        ToyForm::GsLo => g,
        ToyForm::RGsLo => reduce_to_rgslo(&g)?,
    };
    Ok(g.to_diagram().unbend(d.n_inputs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::diagram::*;
    use crate::toy::semantics::interpret_toy;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path3() -> GsLo {
        let mut adj = vec![vec![false; 3]; 3];
        for (a, b) in [(0, 1), (1, 2)] {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        GsLo::graph_state(adj)
    }

    fn random_gslo(rng: &mut impl Rng, n: usize) -> GsLo {
        let mut g = GsLo::graph_state(vec![vec![false; n]; n]);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    g.toggle(i, j);
                }
            }
        }
        let all: Vec<LocalOp> = LocalOp::all().collect();
        for v in 0..n {
            g.vops[v] = all[rng.gen_range(0..24)];
        }
        g
    }

    #[test]
    fn rendering_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=3 {
            for _ in 0..20 {
                let g = random_gslo(&mut rng, n);
                let r = interpret_toy(&g.to_diagram());
                assert_eq!(g.affine_set().unwrap().to_relation(0), r);
            }
        }
    }

    #[test]
    fn local_moves_preserve_the_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let g = random_gslo(&mut rng, 4);
            let s = g.affine_set();
            for v in 0..4 {
                let mut h = g.clone();
                h.local_complement(v).unwrap();
                assert_eq!(h.affine_set(), s);
                let mut h = g.clone();
                h.fixpoint(v).unwrap();
                assert_eq!(h.affine_set(), s);
                for w in h.neighbours(v) {
                    let mut k = g.clone();
                    k.pivot(v, w).unwrap();
                    assert_eq!(k.affine_set(), s);
                }
            }
        }
        assert_eq!(path3().pivot(0, 2), Err(ZxError::EdgeRequired(0, 2)));
    }

    #[test]
    fn pivoting_composes_hs_on_both_ends() {
        // along an edge, both ends pick up the 2-3 swap after their operator
        let g = path3();
        let mut h = g.clone();
        h.pivot(0, 1).unwrap();
        assert_eq!(h.vops[0], LocalOp::hs());
        assert_eq!(h.vops[1], LocalOp::hs());
    }

    #[test]
    fn product_and_correlated_states() {
        // P1 = 0 and Q2 = 0: the product of a green 00 state and a red 00 state
        let prod = green(ToyPhase::ZERO, 0, 1).tensor(&red(ToyPhase::ZERO, 0, 1));
        let g = diagram_to_gslo(&prod).unwrap();
        assert!(g.adj.iter().flatten().all(|x| !x));
        let pts = interpret_toy(&prod).pairs();
        let want: Vec<Vec<u8>> = vec![vec![1, 1], vec![1, 2], vec![3, 1], vec![3, 2]];
        assert_eq!(pts.into_iter().map(|(o, _)| o).collect::<Vec<_>>(), want);
        // Q1 + Q2 = 0 and P1 + P2 = 0: the cup
        let corr = green(ToyPhase::ZERO, 0, 2);
        let g = diagram_to_gslo(&corr).unwrap();
        assert!(g.adj[0][1]);
    }

    #[test]
    fn normal_forms_preserve_semantics() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for t in 0..300 {
            let d = random_toy_diagram(&mut rng, t % 3, (t / 3) % 3, 1 + t % 9);
            let r = interpret_toy(&d);
            for form in [ToyForm::GsLo, ToyForm::RGsLo] {
                let nf = normalize_toy(&d, form).unwrap();
                assert_eq!(interpret_toy(&nf), r, "case {t} {form:?}");
            }
            let g = diagram_to_gslo(&d).unwrap();
            if !g.zero {
                assert!(is_reduced_toy(&reduce_to_rgslo(&g).unwrap()));
            } else {
                assert!(is_toy_zero_nf(&normalize_toy(&d, ToyForm::GsLo).unwrap()));
            }
        }
    }

    #[test]
    fn equality_matches_the_relation_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut equal = 0;
        for t in 0..400 {
            let n_in = t % 2;
            let n_out = 1 + (t / 2) % 2;
            let a = random_toy_diagram(&mut rng, n_in, n_out, 1 + t % 6);
            // a second diagram for the same state half of the time
            let b = if t % 2 == 0 {
                normalize_toy(&a, ToyForm::RGsLo).unwrap()
            } else {
                random_toy_diagram(&mut rng, n_in, n_out, 1 + t % 5)
            };
            let want = interpret_toy(&a) == interpret_toy(&b);
            equal += want as usize;
            let got = equal_toy(&a, &b).unwrap() == ToyVerdict::Equal;
            assert_eq!(got, want, "case {t}");
        }
        assert!(equal > 150);
    }

    #[test]
    fn exhaustive_two_bit_states() {
        // every GS-LO on two toy bits against every other
        let adjs = [vec![vec![false; 2]; 2], vec![vec![false, true], vec![true, false]]];
        let all: Vec<LocalOp> = LocalOp::all().collect();
        let mut forms = Vec::new();
        for adj in &adjs {
            for &a in &all {
                for &b in &all {
                    forms.push(GsLo { adj: adj.clone(), vops: vec![a, b], zero: false });
                }
            }
        }
        let sets: Vec<AffineSet> = forms.iter().map(|g| g.affine_set().unwrap()).collect();
        for (i, g) in forms.iter().enumerate().step_by(7) {
            for (j, h) in forms.iter().enumerate() {
                let want = sets[i] == sets[j];
                assert_eq!(equal_gslo(g, h) == ToyVerdict::Equal, want, "{i} {j}");
            }
        }
    }
}
