//! Exact linear-map semantics of ZX diagrams.
//!
//! Green spiders: 1 on all-zeros, `w^k` on all-ones, 0 elsewhere. Red
//! spiders: `2^{-d/2}(1 + w^k (-1)^{|x|})`. Hadamard: `(1/sqrt2)[[1,1],[1,-1]]`.
//! Star: `1/2`. Matrices are indexed `[outputs][inputs]`, first wire most
//! significant.

use std::fmt;

use crate::diagram::{map_phases, Diagram, ZxNode};
use crate::error::ZxError;
use crate::ring::RingScalar;
use crate::tensor::contract_graph;

/// A dense matrix over the exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<RingScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![RingScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = RingScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RingScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &RingScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: RingScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &ExactMatrix) -> Result<ExactMatrix, ZxError> {
        if self.cols != o.rows {
            return Err(ZxError::DimensionMismatch(format!("{}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = ExactMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let s = out.get(i, j) + &(a * b);
                    out.set(i, j, s);
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, o: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.set(i * o.rows + k, j * o.cols + l, a * o.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &RingScalar) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Finds `c != 0` with `self = c * o`.
    pub fn proportional(&self, o: &ExactMatrix) -> Option<RingScalar> {
        if self.rows != o.rows || self.cols != o.cols {
            return None;
        }
        let p = o.data.iter().position(|x| !x.is_zero())?;
        let a = &self.data[p];
        if a.is_zero() {
            return None;
        }
        let b = &o.data[p];
        let ok = self.data.iter().zip(&o.data).all(|(x, y)| (x * b) == (a * y));
        if !ok {
            return None;
        }
        a.checked_div(b)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Tensor of one node with `d` legs, over index tuples in lexicographic order.
pub fn node_tensor(k: &ZxNode, d: usize) -> Vec<RingScalar> {
    let size = 1usize << d;
    let all_ones = size - 1;
    match *k {
        ZxNode::Z(p) => {
            let mut v = vec![RingScalar::zero(); size];
            if d == 0 {
                v[0] = &RingScalar::one() + &RingScalar::omega(p.k() as i64);
                return v;
            }
            v[0] = RingScalar::one();
            v[all_ones] = &v[all_ones] + &RingScalar::omega(p.k() as i64);
            v
        }
        ZxNode::X(p) => {
            let norm = RingScalar::sqrt2_pow(-(d as i64));
            let w = RingScalar::omega(p.k() as i64);
            let even = &(&RingScalar::one() + &w) * &norm;
            let odd = &(&RingScalar::one() - &w) * &norm;
            (0..size).map(|x: usize| if x.count_ones().is_multiple_of(2) { even.clone() } else { odd.clone() }).collect()
        }
        ZxNode::H => {
            assert_eq!(d, 2, "Hadamard nodes have two legs");
            let s = RingScalar::inv_sqrt2();
            vec![s.clone(), s.clone(), s.clone(), -&s]
        }
        ZxNode::Star => {
            assert_eq!(d, 0, "stars have no legs");
            vec![RingScalar::half()]
        }
    }
}

/// The exact matrix of a diagram.
pub fn interpret(d: &Diagram) -> ExactMatrix {
    let t = contract_graph(d, 2, &node_tensor);
    ExactMatrix { rows: 1 << d.n_outputs(), cols: 1 << d.n_inputs(), data: t.data }
}

/// The interpretation with every phase multiplied by an odd `j`.
pub fn interpret_j(d: &Diagram, j: i64) -> Result<ExactMatrix, ZxError> {
    if j.rem_euclid(2) == 0 {
        return Err(ZxError::EvenIndex(j));
    }
    Ok(interpret(&map_phases(d, |p| p * j)))
}

/// Compares two diagrams under all four odd interpretations.
pub fn equal_under_all_j(a: &Diagram, b: &Diagram) -> bool {
    [1, 3, 5, 7].iter().all(|&j| interpret_j(a, j).unwrap() == interpret_j(b, j).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::*;
    use crate::graph::OpenGraph;

    fn m(rows: Vec<Vec<RingScalar>>) -> ExactMatrix {
        ExactMatrix::from_rows(rows)
    }

    fn int(n: i64) -> RingScalar {
        RingScalar::from_int(n)
    }

    #[test]
    fn hadamard_matrix() {
        let s = RingScalar::inv_sqrt2();
        assert_eq!(interpret(&hadamard()), m(vec![vec![s.clone(), s.clone()], vec![s.clone(), -&s]]));
    }

    #[test]
    fn green_copy_spider() {
        let d = z_spider(Phase8::ZERO, 1, 2);
        let mut want = ExactMatrix::zeros(4, 2);
        want.set(0, 0, int(1));
        want.set(3, 1, int(1));
        assert_eq!(interpret(&d), want);
    }

    #[test]
    fn red_spider_is_conjugated_green() {
        for p in Phase8::all() {
            let red = x_spider(p, 1, 1);
            let conj = hadamard().compose(&z_spider(p, 1, 1)).unwrap().compose(&hadamard()).unwrap();
            assert_eq!(interpret(&red), interpret(&conj));
        }
    }

    #[test]
    fn wire_and_cup() {
        assert_eq!(interpret(&identity(1)), ExactMatrix::identity(2));
        let cup = OpenGraph::from_parts([], [(0, 1)], vec![], vec![0, 1]).unwrap();
        assert_eq!(interpret(&cup).data, vec![int(1), int(0), int(0), int(1)]);
    }

    #[test]
    fn pair_scalar_values() {
        // green 0 against red 0 is sqrt2
        assert_eq!(interpret(&pair(Phase8::ZERO, Phase8::ZERO)).data[0], RingScalar::sqrt2());
        // the phase representative table
        let cases = [(2, 4, 1, 2), (4, 4, 1, 4), (6, 4, 1, 6), (2, 2, 2, 1), (6, 6, 2, 7)];
        for (a, b, r, s) in cases {
            let v = interpret(&pair(Phase8::new(a), Phase8::new(b))).data[0].clone();
            assert_eq!(v, &RingScalar::sqrt2_pow(r) * &RingScalar::omega(s), "pair({a},{b})");
        }
        assert!(interpret(&pair(Phase8::new(2), Phase8::new(6))).data[0].is_zero());
    }

    #[test]
    fn self_loop_traces() {
        let mut d = Diagram::new();
        let v = d.add_node(ZxNode::Z(Phase8::new(2)));
        d.add_edge(v, v);
        // trace of diag(1, i)
        assert_eq!(interpret(&d).data[0], &RingScalar::one() + &RingScalar::omega(2));
    }

    #[test]
    fn star_and_empty() {
        assert_eq!(interpret(&star()).data, vec![RingScalar::half()]);
        assert_eq!(interpret(&empty()).data, vec![RingScalar::one()]);
    }

    #[test]
    fn even_index_rejected() {
        assert_eq!(interpret_j(&hadamard(), 2), Err(ZxError::EvenIndex(2)));
    }

    #[test]
    fn decomposition_preserves_meaning() {
        let mut cases = Vec::new();
        for p in Phase8::all() {
            for (i, o) in [(0, 0), (0, 1), (1, 1), (2, 3), (3, 2), (0, 5)] {
                cases.push(z_spider(p, i, o));
                cases.push(x_spider(p, i, o));
            }
        }
        let mut looped = z_spider(Phase8::new(3), 1, 2);
        let v = *looped.nodes().keys().next().unwrap();
        looped.add_edge(v, v);
        cases.push(looped.clone());
        cases.push(swap_colours(&looped));
        for d in cases {
            let g = decompose_to_generators(&d);
            for (id, k) in g.nodes() {
                let deg = g.degree(*id);
                match k {
                    ZxNode::Z(p) => assert!(deg == 2 || (*p == Phase8::ZERO && (deg == 1 || deg == 3))),
                    ZxNode::X(_) => panic!("red spider left over"),
                    _ => {}
                }
            }
            assert_eq!(interpret(&g), interpret(&d));
        }
    }
}
