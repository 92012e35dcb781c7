//! The binary check-matrix picture of stabilizer states, phases dropped.
//!
//! A check matrix is `2n x n` over GF(2): column `j` is generator `j`, rows
//! `0..n` hold its Z bits and rows `n..2n` its X bits.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::ZxError;

/// A dense GF(2) matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    pub rows: usize,
    pub cols: usize,
    pub bits: Vec<Vec<bool>>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows, cols, bits: vec![vec![false; cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.bits[i][i] = true;
        }
        m
    }

    pub fn from_bits(bits: Vec<Vec<bool>>) -> Result<Self, ZxError> {
        let rows = bits.len();
        let cols = bits.first().map_or(0, |r| r.len());
        if bits.iter().any(|r| r.len() != cols) {
            return Err(ZxError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Gf2Matrix { rows, cols, bits })
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i][j]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.bits[j][i] = self.bits[i][j];
            }
        }
        t
    }

    pub fn mul(&self, o: &Gf2Matrix) -> Result<Gf2Matrix, ZxError> {
        if self.cols != o.rows {
            return Err(ZxError::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.bits[i][k] {
                    for j in 0..o.cols {
                        out.bits[i][j] ^= o.bits[k][j];
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|r| r.iter().all(|b| !b))
    }

    pub fn rank(&self) -> usize {
        let mut m = self.bits.clone();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| m[i][c]) else { continue };
            m.swap(r, p);
            for i in 0..self.rows {
                if i != r && m[i][c] {
                    let pivot = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
            r += 1;
        }
        r
    }

    pub fn inverse(&self) -> Option<Gf2Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut m = self.bits.clone();
        let mut inv = Self::identity(n).bits;
        for c in 0..n {
            let p = (c..n).find(|&i| m[i][c])?;
            m.swap(c, p);
            inv.swap(c, p);
            for i in 0..n {
                if i != c && m[i][c] {
                    let (pm, pi) = (m[c].clone(), inv[c].clone());
                    for j in 0..n {
                        m[i][j] ^= pm[j];
                        inv[i][j] ^= pi[j];
                    }
                }
            }
        }
        Some(Gf2Matrix { rows: n, cols: n, bits: inv })
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Gf2Matrix {
        Gf2Matrix { rows: r1 - r0, cols: c1 - c0, bits: self.bits[r0..r1].iter().map(|r| r[c0..c1].to_vec()).collect() }
    }

    pub fn stack(top: &Gf2Matrix, bottom: &Gf2Matrix) -> Gf2Matrix {
        let mut bits = top.bits.clone();
        bits.extend(bottom.bits.iter().cloned());
        Gf2Matrix { rows: top.rows + bottom.rows, cols: top.cols, bits }
    }

    pub fn hcat(left: &Gf2Matrix, right: &Gf2Matrix) -> Gf2Matrix {
        let bits = left.bits.iter().zip(&right.bits).map(|(a, b)| a.iter().chain(b).copied().collect()).collect();
        Gf2Matrix { rows: left.rows, cols: left.cols + right.cols, bits }
    }
}

/// Rows of `0`/`1` characters, one row per line.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.bits {
            let s: String = r.iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Gf2Matrix {
    type Err = ZxError;

    fn from_str(s: &str) -> Result<Self, ZxError> {
        let bits = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.chars()
                    .filter(|c| !c.is_whitespace() && *c != '|')
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(ZxError::Parse(format!("unexpected {c:?} in bit matrix"))),
                    })
                    .collect::<Result<Vec<bool>, ZxError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Gf2Matrix::from_bits(bits)
    }
}

/// A `2n x n` check matrix, Z block over X block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckMatrix {
    pub n: usize,
    pub bits: Gf2Matrix,
}

impl CheckMatrix {
    pub fn new(bits: Gf2Matrix) -> Result<Self, ZxError> {
        if bits.rows != 2 * bits.cols {
            return Err(ZxError::DimensionMismatch(format!("check matrix must be 2n x n, got {}x{}", bits.rows, bits.cols)));
        }
        Ok(CheckMatrix { n: bits.cols, bits })
    }

    pub fn z_block(&self) -> Gf2Matrix {
        self.bits.block(0, self.n, 0, self.n)
    }

    pub fn x_block(&self) -> Gf2Matrix {
        self.bits.block(self.n, 2 * self.n, 0, self.n)
    }

    pub fn is_maximal(&self) -> bool {
        self.bits.rank() == self.n
    }
}

impl fmt::Display for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

/// A simple graph: symmetric, zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjMatrix(pub Vec<Vec<bool>>);

impl AdjMatrix {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn empty(n: usize) -> Self {
        AdjMatrix(vec![vec![false; n]; n])
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut a = Self::empty(n);
        for &(u, v) in edges {
            a.0[u][v] = true;
            a.0[v][u] = true;
        }
        a
    }

    pub fn is_simple(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| !self.0[i][i] && (0..n).all(|j| self.0[i][j] == self.0[j][i]))
    }

    /// Upper-triangle bits, a compact key for small graphs.
    pub fn key(&self) -> u64 {
        let n = self.n();
        let mut k = 0u64;
        let mut b = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i][j] {
                    k |= 1 << b;
                }
                b += 1;
            }
        }
        k
    }

    /// Every simple graph on `n` labelled vertices.
    pub fn all(n: usize) -> Vec<AdjMatrix> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (0..1u64 << pairs.len())
            .map(|mask| {
                let e: Vec<(usize, usize)> =
                    pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, p)| *p).collect();
                AdjMatrix::from_edges(n, &e)
            })
            .collect()
    }

    fn to_gf2(&self) -> Gf2Matrix {
        Gf2Matrix { rows: self.n(), cols: self.n(), bits: self.0.clone() }
    }
}

pub fn j_matrix(n: usize) -> Gf2Matrix {
    let mut j = Gf2Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j.bits[i][n + i] = true;
        j.bits[n + i][i] = true;
    }
    j
}

/// `S^T J S = 0`.
pub fn is_valid(s: &CheckMatrix) -> bool {
    let st = s.bits.transpose();
    st.mul(&j_matrix(s.n)).and_then(|m| m.mul(&s.bits)).map(|m| m.is_zero()).unwrap_or(false)
}

/// `(theta over I)`.
pub fn graph_check(adj: &AdjMatrix) -> CheckMatrix {
    CheckMatrix { n: adj.n(), bits: Gf2Matrix::stack(&adj.to_gf2(), &Gf2Matrix::identity(adj.n())) }
}

/// `Q^T J Q = J`.
pub fn is_symplectic(q: &Gf2Matrix) -> Result<bool, ZxError> {
    if q.rows != q.cols || !q.rows.is_multiple_of(2) {
        return Err(ZxError::DimensionMismatch(format!("{}x{} is not 2n x 2n", q.rows, q.cols)));
    }
    let j = j_matrix(q.rows / 2);
    Ok(q.transpose().mul(&j)?.mul(q)? == j)
}

/// All four `n x n` blocks diagonal.
pub fn is_local(q: &Gf2Matrix) -> Result<bool, ZxError> {
    if q.rows != q.cols || !q.rows.is_multiple_of(2) {
        return Err(ZxError::DimensionMismatch(format!("{}x{} is not 2n x 2n", q.rows, q.cols)));
    }
    let n = q.rows / 2;
    Ok((0..2 * n).all(|i| (0..2 * n).all(|j| !q.bits[i][j] || i % n == j % n)))
}

/// A local operation from one 2x2 block `[[a, b], [c, d]]` per qubit,
/// acting on that qubit's `(z, x)` bits.
pub fn local_op(blocks: &[[bool; 4]]) -> Gf2Matrix {
    let n = blocks.len();
    let mut q = Gf2Matrix::zeros(2 * n, 2 * n);
    for (i, b) in blocks.iter().enumerate() {
        q.bits[i][i] = b[0];
        q.bits[i][n + i] = b[1];
        q.bits[n + i][i] = b[2];
        q.bits[n + i][n + i] = b[3];
    }
    q
}

const ID2: [bool; 4] = [true, false, false, true];
/// Hadamard: swaps the Z and X bits.
const H2: [bool; 4] = [false, true, true, false];
/// Phase gate: `z += x`.
const S2: [bool; 4] = [true, true, false, true];

fn mul2(a: [bool; 4], b: [bool; 4]) -> [bool; 4] {
    [
        (a[0] & b[0]) ^ (a[1] & b[2]),
        (a[0] & b[1]) ^ (a[1] & b[3]),
        (a[2] & b[0]) ^ (a[3] & b[2]),
        (a[2] & b[1]) ^ (a[3] & b[3]),
    ]
}

/// Whether two check matrices span the same column space.
pub fn column_equivalent(a: &Gf2Matrix, b: &Gf2Matrix) -> bool {
    let r = a.rank();
    r == b.rank() && Gf2Matrix::hcat(a, b).rank() == r
}

/// A graph and a local operation `Q` with `Q S` column-equivalent to the
/// graph's check matrix.
pub fn to_graph_form(s: &CheckMatrix) -> Result<(AdjMatrix, Gf2Matrix), ZxError> {
    if !is_valid(s) {
        return Err(ZxError::InvalidOperand("check matrix is not self-orthogonal".into()));
    }
    if !s.is_maximal() {
        return Err(ZxError::NotMaximal);
    }
    let n = s.n;
    // column-reduce the X block: pivot rows are the qubits already carrying X
    let mut cols: Vec<Vec<bool>> = s.bits.transpose().bits;
    let mut pivots = Vec::new();
    let mut r = 0;
    for q in 0..n {
        let Some(p) = (r..n).find(|&c| cols[c][n + q]) else { continue };
        cols.swap(r, p);
        for c in 0..n {
            if c != r && cols[c][n + q] {
                let pc = cols[r].clone();
                for (x, y) in cols[c].iter_mut().zip(pc) {
                    *x ^= y;
                }
            }
        }
        pivots.push(q);
        r += 1;
    }
    // the remaining columns are pure Z; a Hadamard on every other qubit
    // turns them into X columns
    let mut blocks: Vec<[bool; 4]> = (0..n).map(|q| if pivots.contains(&q) { ID2 } else { H2 }).collect();
    let apply = |blocks: &[[bool; 4]]| local_op(blocks).mul(&s.bits).expect("square times 2n x n");
    let mut qs = apply(&blocks);
    let mut xinv = CheckMatrix { n, bits: qs.clone() }.x_block().inverse();
    if xinv.is_none() {
        // fall back to searching Hadamard patterns
        for mask in 0..1u32 << n {
            let b: Vec<[bool; 4]> = (0..n).map(|q| if mask >> q & 1 == 1 { H2 } else { ID2 }).collect();
            let m = apply(&b);
            if let Some(inv) = (CheckMatrix { n, bits: m.clone() }).x_block().inverse() {
                blocks = b;
                qs = m;
                xinv = Some(inv);
                break;
            }
        }
    }
    let xinv = xinv.ok_or(ZxError::NotMaximal)?;
    let theta = CheckMatrix { n, bits: qs }.z_block().mul(&xinv)?;
    // ones on the diagonal are removed with a phase gate
    for q in 0..n {
        if theta.bits[q][q] {
            blocks[q] = mul2(S2, blocks[q]);
        }
    }
    let mut adj = theta.bits.clone();
    for (q, row) in adj.iter_mut().enumerate() {
        row[q] = false;
    }
    let adj = AdjMatrix(adj);
    debug_assert!(adj.is_simple());
    Ok((adj, local_op(&blocks)))
}

/// Local complementation at `v`.
pub fn lc_adj(adj: &AdjMatrix, v: usize) -> Result<AdjMatrix, ZxError> {
    if v >= adj.n() {
        return Err(ZxError::InvalidVertex(v));
    }
    let mut a = adj.clone();
    let nb: Vec<usize> = (0..adj.n()).filter(|&u| adj.0[v][u]).collect();
    for &x in &nb {
        for &y in &nb {
            if x != y {
                a.0[x][y] = !a.0[x][y];
            }
        }
    }
    Ok(a)
}

/// Largest graph the orbit search accepts.
pub const MAX_ORBIT_VERTICES: usize = 7;
/// Largest orbit explored before giving up.
pub const MAX_ORBIT_SIZE: usize = 1 << 18;

/// The set of graphs reachable by local complementations.
pub fn lc_orbit(adj: &AdjMatrix) -> Result<HashSet<AdjMatrix>, ZxError> {
    if adj.n() > MAX_ORBIT_VERTICES {
        return Err(ZxError::SearchBoundExceeded);
    }
    let mut seen = HashSet::from([adj.clone()]);
    let mut queue = VecDeque::from([adj.clone()]);
    while let Some(g) = queue.pop_front() {
        for v in 0..g.n() {
            let h = lc_adj(&g, v)?;
            if seen.insert(h.clone()) {
                if seen.len() > MAX_ORBIT_SIZE {
                    return Err(ZxError::SearchBoundExceeded);
                }
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

pub fn lc_orbit_equal(a: &AdjMatrix, b: &AdjMatrix) -> Result<bool, ZxError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(lc_orbit(a)?.contains(b))
}

/// A shortest sequence of local complementations taking `a` to `b`.
pub fn lc_path(a: &AdjMatrix, b: &AdjMatrix) -> Result<Option<Vec<usize>>, ZxError> {
    if a.n() != b.n() {
        return Ok(None);
    }
    if a.n() > MAX_ORBIT_VERTICES {
        return Err(ZxError::SearchBoundExceeded);
    }
    let mut prev: std::collections::HashMap<AdjMatrix, (AdjMatrix, usize)> = Default::default();
    let mut queue = VecDeque::from([a.clone()]);
    let mut seen = HashSet::from([a.clone()]);
    while let Some(g) = queue.pop_front() {
        if &g == b {
            let mut path = Vec::new();
            let mut cur = g;
            while let Some((p, v)) = prev.get(&cur) {
                path.push(*v);
                cur = p.clone();
            }
            path.reverse();
            return Ok(Some(path));
        }
        for v in 0..g.n() {
            let h = lc_adj(&g, v)?;
            if seen.insert(h.clone()) {
                prev.insert(h.clone(), (g.clone(), v));
                queue.push_back(h);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bell() -> [CheckMatrix; 2] {
        [
            CheckMatrix::new("10\n10\n01\n01".parse().unwrap()).unwrap(),
            CheckMatrix::new("11\n11\n01\n01".parse().unwrap()).unwrap(),
        ]
    }

    #[test]
    fn bell_matrices_reduce_to_an_edge() {
        let k2 = AdjMatrix::from_edges(2, &[(0, 1)]);
        for s in bell() {
            assert!(is_valid(&s));
            let (adj, q) = to_graph_form(&s).unwrap();
            assert_eq!(adj, k2);
            assert!(is_symplectic(&q).unwrap() && is_local(&q).unwrap());
            assert!(column_equivalent(&q.mul(&s.bits).unwrap(), &graph_check(&adj).bits));
        }
    }

    #[test]
    fn small_checks() {
        let e1 = graph_check(&AdjMatrix::empty(1));
        assert_eq!(e1.bits, "0\n1".parse().unwrap());
        let zero = CheckMatrix::new(Gf2Matrix::zeros(4, 2)).unwrap();
        assert!(is_valid(&zero) && !zero.is_maximal());
        assert_eq!(to_graph_form(&zero), Err(ZxError::NotMaximal));
        // XZ and ZI anticommute on the first qubit
        let bad = CheckMatrix::new("01\n00\n10\n00".parse().unwrap()).unwrap();
        assert!(!is_valid(&bad));
        assert!(is_symplectic(&j_matrix(3)).unwrap());
        assert!(!is_symplectic(&Gf2Matrix::zeros(4, 4)).unwrap());
        let h = local_op(&[H2, S2, ID2]);
        assert!(is_symplectic(&h).unwrap() && is_local(&h).unwrap());
    }

    #[test]
    fn line_graph_local_complementation() {
        let line = AdjMatrix::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let a = lc_adj(&line, 2).unwrap();
        assert_eq!(a, AdjMatrix::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]));
        let b = lc_adj(&a, 1).unwrap();
        // the neighbourhood {0, 2, 3} is complemented, so 2-3 disappears
        assert_eq!(b, AdjMatrix::from_edges(4, &[(0, 1), (1, 2), (1, 3), (0, 2), (0, 3)]));
        assert_eq!(lc_adj(&a, 2).unwrap(), line);
    }

    #[test]
    fn triangle_and_star_share_an_orbit() {
        let k3 = AdjMatrix::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let star = AdjMatrix::from_edges(3, &[(0, 1), (0, 2)]);
        assert!(lc_orbit_equal(&k3, &star).unwrap());
        assert!(!lc_orbit_equal(&k3, &AdjMatrix::empty(3)).unwrap());
        let p = lc_path(&k3, &star).unwrap().unwrap();
        let mut g = k3.clone();
        for v in p {
            g = lc_adj(&g, v).unwrap();
        }
        assert_eq!(g, star);
        assert_eq!(lc_orbit(&AdjMatrix::empty(8)), Err(ZxError::SearchBoundExceeded));
    }

    fn arb_graph(n: usize) -> impl Strategy<Value = AdjMatrix> {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        e.push((i, j));
                    }
                    k += 1;
                }
            }
            AdjMatrix::from_edges(n, &e)
        })
    }

    fn arb_local(n: usize) -> impl Strategy<Value = Vec<[bool; 4]>> {
        // the six invertible 2x2 binary matrices
        let group = [ID2, H2, S2, mul2(H2, S2), mul2(S2, H2), mul2(H2, mul2(S2, H2))];
        proptest::collection::vec(0..6usize, n).prop_map(move |ix| ix.into_iter().map(|i| group[i]).collect())
    }

    proptest! {
        #[test]
        fn graph_form_recovers_locally_scrambled_graphs(
            (g, l, mix) in (2..=5usize).prop_flat_map(|n| (arb_graph(n), arb_local(n), proptest::collection::vec(any::<bool>(), n * n)))
        ) {
            let n = g.n();
            let gc = graph_check(&g);
            prop_assert!(is_valid(&gc));
            let q = local_op(&l);
            prop_assert!(is_symplectic(&q).unwrap());
            // scramble by a local operation and an invertible column mix
            let mut m = Gf2Matrix::identity(n);
            for i in 0..n {
                for j in i + 1..n {
                    m.bits[i][j] = mix[i * n + j];
                }
            }
            let s = CheckMatrix::new(q.mul(&gc.bits).unwrap().mul(&m).unwrap()).unwrap();
            prop_assert!(is_valid(&s));
            let (adj, q2) = to_graph_form(&s).unwrap();
            prop_assert!(adj.is_simple());
            prop_assert!(is_local(&q2).unwrap() && is_symplectic(&q2).unwrap());
            prop_assert!(column_equivalent(&q2.mul(&s.bits).unwrap(), &graph_check(&adj).bits));
            prop_assert!(lc_orbit_equal(&adj, &g).unwrap());
        }

        #[test]
        fn lc_is_an_involution(g in (2..=6usize).prop_flat_map(arb_graph), v in 0..6usize) {
            let v = v % g.n();
            prop_assert_eq!(lc_adj(&lc_adj(&g, v).unwrap(), v).unwrap(), g);
        }
    }
}
