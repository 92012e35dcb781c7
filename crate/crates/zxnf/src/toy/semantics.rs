//! Relational semantics of toy diagrams.
//!
//! [`interpret_toy`] contracts boolean tensors and returns the relation as a
//! `4^outputs x 4^inputs` matrix. Every generator relation is an affine
//! subspace over GF(2) in the `(q, p)` bits of its legs, so
//! [`interpret_affine`] computes the same thing by linear algebra, which
//! stays cheap for diagrams far beyond the reach of the dense matrix.

use std::fmt;

use crate::tensor::contract_graph;
use crate::toy::diagram::{ToyDiagram, ToyNode, ToyPhase};

/// A relation between toy bits as a boolean matrix, rows indexed by the
/// outputs and columns by the inputs, first wire most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ToyRelation {
    pub n_out: usize,
    pub n_in: usize,
    pub data: Vec<bool>,
}

impl ToyRelation {
    pub fn empty(n_out: usize, n_in: usize) -> Self {
        ToyRelation { n_out, n_in, data: vec![false; 1 << (2 * (n_out + n_in))] }
    }

    pub fn rows(&self) -> usize {
        1 << (2 * self.n_out)
    }

    pub fn cols(&self) -> usize {
        1 << (2 * self.n_in)
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.cols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: bool) {
        let cols = self.cols();
        self.data[r * cols + c] = x;
    }

    pub fn is_empty(&self) -> bool {
        self.data.iter().all(|x| !x)
    }

    /// Related pairs as ontic labels `1..=4`, outputs then inputs.
    pub fn pairs(&self) -> Vec<(Vec<u8>, Vec<u8>)> {
        let digits = |mut x: usize, n: usize| {
            let mut v = vec![0u8; n];
            for k in (0..n).rev() {
                v[k] = (x % 4) as u8 + 1;
                x /= 4;
            }
            v
        };
        let mut out = Vec::new();
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if self.get(r, c) {
                    out.push((digits(r, self.n_out), digits(c, self.n_in)));
                }
            }
        }
        out
    }
}

impl fmt::Display for ToyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows() {
            let row: String = (0..self.cols()).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ToyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} relation {:?}", self.rows(), self.cols(), self.pairs())
    }
}

fn q_of(i: usize) -> bool {
    i & 2 != 0
}

fn p_of(i: usize) -> bool {
    i & 1 != 0
}

/// Whether a spider of phase `a` relates legs with the given `(own, other)`
/// bits: `own` is the bit shared by all legs (`q` for green), `other` the
/// one summed.
fn spider_holds(a: ToyPhase, own: &[bool], other: &[bool]) -> bool {
    let s = a.a() ^ a.b();
    let check = |c: bool| other.iter().fold(false, |x, y| x ^ y) == ((s & c) ^ a.a());
    match own.first() {
        None => check(false) || check(true),
        Some(&c) => own.iter().all(|&x| x == c) && check(c),
    }
}

/// Boolean tensor of one node with `d` legs.
pub fn toy_node_tensor(k: &ToyNode, d: usize) -> Vec<bool> {
    let size = 1usize << (2 * d);
    let legs = |n: usize| -> Vec<usize> { (0..d).map(|j| (n >> (2 * (d - 1 - j))) & 3).collect() };
    (0..size)
        .map(|n| {
            let l = legs(n);
            let qs: Vec<bool> = l.iter().map(|&i| q_of(i)).collect();
            let ps: Vec<bool> = l.iter().map(|&i| p_of(i)).collect();
            match *k {
                ToyNode::Z(a) => spider_holds(a, &qs, &ps),
                ToyNode::X(a) => spider_holds(a, &ps, &qs),
                ToyNode::HS => {
                    assert_eq!(d, 2, "HS nodes have two legs");
                    qs[0] == ps[1] && ps[0] == qs[1]
                }
            }
        })
        .collect()
}

/// The relation denoted by a toy diagram.
pub fn interpret_toy(d: &ToyDiagram) -> ToyRelation {
    let t = contract_graph(d, 4, &toy_node_tensor);
    ToyRelation { n_out: d.n_outputs(), n_in: d.n_inputs(), data: t.data }
}

// ---- GF(2) affine subspaces ------------------------------------------------

/// Row-reduces `rows` (each of length `width`) in place; returns pivot
/// columns, one per surviving row.
fn rref(rows: &mut Vec<Vec<bool>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A nonempty affine subspace of `(q_0, p_0, q_1, p_1, ...)` over GF(2) in
/// canonical form: the direction basis is row-reduced and the point is zero
/// on every pivot coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSet {
    pub n: usize,
    pub point: Vec<bool>,
    pub basis: Vec<Vec<bool>>,
}

impl AffineSet {
    pub fn new(n: usize, point: Vec<bool>, basis: Vec<Vec<bool>>) -> Self {
        let mut basis = basis;
        let pivots = rref(&mut basis, 2 * n);
        let mut point = point;
        for (row, &c) in basis.iter().zip(&pivots) {
            if point[c] {
                for (x, y) in point.iter_mut().zip(row) {
                    *x ^= y;
                }
            }
        }
        AffineSet { n, point, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Maximal knowledge: as many free directions as toy bits, and the
    /// directions pairwise symplectically orthogonal.
    pub fn is_maximal(&self) -> bool {
        let omega = |a: &[bool], b: &[bool]| (0..self.n).fold(false, |s, i| s ^ (a[2 * i] & b[2 * i + 1]) ^ (a[2 * i + 1] & b[2 * i]));
        self.dim() == self.n && self.basis.iter().all(|a| self.basis.iter().all(|b| !omega(a, b)))
    }

    /// Every point, as ontic indices `2q + p` per toy bit.
    pub fn points(&self) -> Vec<Vec<u8>> {
        let k = self.dim();
        (0..1usize << k)
            .map(|mask| {
                let mut z = self.point.clone();
                for (j, row) in self.basis.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        for (x, y) in z.iter_mut().zip(row) {
                            *x ^= y;
                        }
                    }
                }
                (0..self.n).map(|i| 2 * z[2 * i] as u8 + z[2 * i + 1] as u8).collect()
            })
            .collect()
    }

    /// The relation with the first `n_in` toy bits as inputs.
    pub fn to_relation(&self, n_in: usize) -> ToyRelation {
        let n_out = self.n - n_in;
        let mut r = ToyRelation::empty(n_out, n_in);
        for pt in self.points() {
            let ix = |s: &[u8]| s.iter().fold(0usize, |a, &x| a * 4 + x as usize);
            r.set(ix(&pt[n_in..]), ix(&pt[..n_in]), true);
        }
        r
    }
}

/// Linear equations over GF(2) with a right-hand side in the last column.
struct System {
    vars: usize,
    rows: Vec<Vec<bool>>,
}

impl System {
    fn eq(&mut self, vars: &[usize], rhs: bool) {
        let mut row = vec![false; self.vars + 1];
        for &v in vars {
            row[v] ^= true;
        }
        row[self.vars] = rhs;
        self.rows.push(row);
    }
}

/// The denotation of `d` read as a state on its outputs (inputs are
/// ignored, so bend them first). `None` for the empty relation.
pub fn interpret_affine(d: &ToyDiagram) -> Option<AffineSet> {
    let edges = d.edges();
    let ne = edges.len();
    let node_ids: Vec<_> = d.nodes().keys().copied().collect();
    // (q, p) per edge, then one shared bit per spider
    let q = |e: usize| 2 * e;
    let p = |e: usize| 2 * e + 1;
    let own = |i: usize| 2 * ne + i;
    let mut sys = System { vars: 2 * ne + node_ids.len(), rows: Vec::new() };
    for (i, v) in node_ids.iter().enumerate() {
        let legs: Vec<usize> = edges
            .iter()
            .enumerate()
            .flat_map(|(e, &(a, b))| {
                let mut l = Vec::new();
                if a == *v {
                    l.push(e);
                }
                if b == *v {
                    l.push(e);
                }
                l
            })
            .collect();
        match *d.kind(*v).unwrap() {
            ToyNode::Z(a) | ToyNode::X(a) => {
                let is_green = matches!(d.kind(*v), Some(ToyNode::Z(_)));
                let (shared, summed): (&dyn Fn(usize) -> usize, &dyn Fn(usize) -> usize) =
                    if is_green { (&q, &p) } else { (&p, &q) };
                for &e in &legs {
                    sys.eq(&[shared(e), own(i)], false);
                }
                let mut sum: Vec<usize> = legs.iter().map(|&e| summed(e)).collect();
                if a.a() ^ a.b() {
                    sum.push(own(i));
                }
                sys.eq(&sum, a.a());
            }
            ToyNode::HS => {
                let [e1, e2] = legs[..] else { panic!("HS nodes have two legs") };
                sys.eq(&[q(e1), p(e2)], false);
                sys.eq(&[p(e1), q(e2)], false);
            }
        }
    }
    let width = sys.vars;
    let mut rows = sys.rows;
    let pivots = rref(&mut rows, width + 1);
    if pivots.last() == Some(&width) {
        return None;
    }
    // particular solution: free variables zero
    let mut sol = vec![false; width];
    for (row, &c) in rows.iter().zip(&pivots) {
        sol[c] = row[width];
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    let out_edges: Vec<usize> = d
        .outputs()
        .iter()
        .map(|b| edges.iter().position(|&(x, y)| x == *b || y == *b).expect("boundary has an edge"))
        .collect();
    let project = |z: &[bool]| -> Vec<bool> { out_edges.iter().flat_map(|&e| [z[q(e)], z[p(e)]]).collect() };
    let point = project(&sol);
    let basis: Vec<Vec<bool>> = free
        .iter()
        .map(|&f| {
            let mut z = vec![false; width];
            z[f] = true;
            for (row, &c) in rows.iter().zip(&pivots) {
                z[c] = row[f];
            }
            project(&z)
        })
        .collect();
    Some(AffineSet::new(out_edges.len(), point, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::diagram::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn state(a: ToyPhase) -> Vec<Vec<u8>> {
        interpret_toy(&green(a, 0, 1)).pairs().into_iter().map(|(o, _)| o).collect()
    }

    #[test]
    fn phased_green_states() {
        assert_eq!(state(ToyPhase::ZERO), vec![vec![1], vec![3]]);
        assert_eq!(state(ToyPhase::P01), vec![vec![1], vec![4]]);
        assert_eq!(state(ToyPhase::P10), vec![vec![2], vec![3]]);
        assert_eq!(state(ToyPhase::P11), vec![vec![2], vec![4]]);
    }

    #[test]
    fn split_is_delta() {
        let r = interpret_toy(&green(ToyPhase::ZERO, 1, 2));
        let want = [
            (vec![1, 1], 1),
            (vec![2, 2], 1),
            (vec![1, 2], 2),
            (vec![2, 1], 2),
            (vec![3, 3], 3),
            (vec![4, 4], 3),
            (vec![3, 4], 4),
            (vec![4, 3], 4),
        ];
        let mut got: Vec<(Vec<u8>, u8)> = r.pairs().into_iter().map(|(o, i)| (o, i[0])).collect();
        let mut want: Vec<(Vec<u8>, u8)> = want.to_vec();
        got.sort();
        want.sort();
        assert_eq!(got, want);
        // the effect is {1, 3}
        let e: Vec<u8> = interpret_toy(&green(ToyPhase::ZERO, 1, 0)).pairs().into_iter().map(|(_, i)| i[0]).collect();
        assert_eq!(e, vec![1, 3]);
    }

    #[test]
    fn hs_and_cup() {
        let r = interpret_toy(&hs());
        let got: Vec<(u8, u8)> = r.pairs().into_iter().map(|(o, i)| (i[0], o[0])).collect();
        assert_eq!(got, vec![(1, 1), (3, 2), (2, 3), (4, 4)]);
        let cup = interpret_toy(&green(ToyPhase::ZERO, 0, 2));
        let got: Vec<Vec<u8>> = cup.pairs().into_iter().map(|(o, _)| o).collect();
        assert_eq!(got, vec![vec![1, 1], vec![2, 2], vec![3, 3], vec![4, 4]]);
    }

    #[test]
    fn zero_scalar_is_empty() {
        assert!(interpret_toy(&zero_scalar()).is_empty());
        let s = green(ToyPhase::P11, 0, 1).compose(&green(ToyPhase::ZERO, 1, 0)).unwrap();
        assert!(interpret_toy(&s).is_empty());
        assert!(!interpret_toy(&green(ToyPhase::P01, 0, 0)).is_empty());
        assert!(interpret_affine(&zero_scalar()).is_none());
    }

    #[test]
    fn affine_agrees_with_contraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for t in 0..300 {
            let d = random_toy_diagram(&mut rng, t % 3, (t / 3) % 3, 1 + t % 8);
            let r = interpret_toy(&d);
            match interpret_affine(&d.bend_inputs()) {
                None => assert!(r.is_empty(), "case {t}"),
                Some(a) => {
                    assert_eq!(a.to_relation(d.n_inputs()), r, "case {t}: {d:?}");
                    assert!(a.is_maximal(), "case {t}");
                }
            }
        }
    }
}
