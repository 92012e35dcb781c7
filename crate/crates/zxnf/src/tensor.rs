//! Dense tensors over a semiring and greedy network contraction.
//!
//! Shared by the ZX semantics (over the exact ring, dimension 2) and the toy
//! semantics (over booleans, dimension 4).

use std::collections::HashMap;

use crate::graph::{NodeId, NodeLabel, OpenGraph};
use crate::ring::RingScalar;

pub trait Semiring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Semiring for RingScalar {
    fn zero() -> Self {
        RingScalar::zero()
    }
    fn one() -> Self {
        RingScalar::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        RingScalar::is_zero(self)
    }
}

impl Semiring for bool {
    fn zero() -> Self {
        false
    }
    fn one() -> Self {
        true
    }
    fn add(&self, o: &Self) -> Self {
        *self || *o
    }
    fn mul(&self, o: &Self) -> Self {
        *self && *o
    }
    fn is_zero(&self) -> bool {
        !*self
    }
}

/// A tensor whose indices all range over `0..dim`; `labels[0]` is the most
/// significant index.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    pub dim: usize,
    pub labels: Vec<usize>,
    pub data: Vec<T>,
}

impl<T: Semiring> Tensor<T> {
    pub fn scalar(x: T, dim: usize) -> Self {
        Tensor { dim, labels: Vec::new(), data: vec![x] }
    }

    /// Builds a tensor from a function of the index tuple.
    pub fn from_fn(dim: usize, labels: Vec<usize>, f: impl Fn(&[usize]) -> T) -> Self {
        let r = labels.len();
        let size = dim.pow(r as u32);
        let mut idx = vec![0usize; r];
        let mut data = Vec::with_capacity(size);
        for n in 0..size {
            let mut m = n;
            for k in (0..r).rev() {
                idx[k] = m % dim;
                m /= dim;
            }
            data.push(f(&idx));
        }
        Tensor { dim, labels, data }
    }

    fn strides(&self) -> Vec<usize> {
        let r = self.labels.len();
        let mut s = vec![1usize; r];
        for k in (0..r.saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.dim;
        }
        s
    }

    /// Reorders the indices to `order`, a permutation of `labels`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        if order == self.labels.as_slice() {
            return self.clone();
        }
        let st = self.strides();
        let pos: Vec<usize> =
            order.iter().map(|l| self.labels.iter().position(|x| x == l).expect("label present")).collect();
        let src_strides: Vec<usize> = pos.iter().map(|&p| st[p]).collect();
        let r = order.len();
        let size = self.data.len();
        let mut data = Vec::with_capacity(size);
        let mut idx = vec![0usize; r];
        for _ in 0..size {
            let off: usize = idx.iter().zip(&src_strides).map(|(i, s)| i * s).sum();
            data.push(self.data[off].clone());
            for k in (0..r).rev() {
                idx[k] += 1;
                if idx[k] < self.dim {
                    break;
                }
                idx[k] = 0;
            }
        }
        Tensor { dim: self.dim, labels: order.to_vec(), data }
    }

    /// Sums over the diagonal of two equal labels at positions `i < j`.
    pub fn trace_pair(&self, i: usize, j: usize) -> Self {
        let mut positions: Vec<usize> = (0..self.labels.len()).filter(|&k| k != i && k != j).collect();
        positions.push(i);
        positions.push(j);
        let t = self.permute_positions(&positions);
        let d = self.dim;
        let block = d * d;
        let out_size = t.data.len() / block;
        let mut data = Vec::with_capacity(out_size);
        for n in 0..out_size {
            let mut acc = T::zero();
            for a in 0..d {
                acc = acc.add(&t.data[n * block + a * d + a]);
            }
            data.push(acc);
        }
        let labels: Vec<usize> = positions[..positions.len() - 2].iter().map(|&p| self.labels[p]).collect();
        Tensor { dim: d, labels, data }
    }

    fn permute_positions(&self, positions: &[usize]) -> Self {
        let st = self.strides();
        let src_strides: Vec<usize> = positions.iter().map(|&p| st[p]).collect();
        let r = positions.len();
        let size = self.data.len();
        let mut data = Vec::with_capacity(size);
        let mut idx = vec![0usize; r];
        for _ in 0..size {
            let off: usize = idx.iter().zip(&src_strides).map(|(i, s)| i * s).sum();
            data.push(self.data[off].clone());
            for k in (0..r).rev() {
                idx[k] += 1;
                if idx[k] < self.dim {
                    break;
                }
                idx[k] = 0;
            }
        }
        Tensor { dim: self.dim, labels: positions.iter().map(|&p| self.labels[p]).collect(), data }
    }

    /// Contracts every label shared between `self` and `o`.
    pub fn contract(&self, o: &Self) -> Self {
        let shared: Vec<usize> = self.labels.iter().filter(|l| o.labels.contains(l)).copied().collect();
        let fa: Vec<usize> = self.labels.iter().filter(|l| !shared.contains(l)).copied().collect();
        let fb: Vec<usize> = o.labels.iter().filter(|l| !shared.contains(l)).copied().collect();
        let mut oa = fa.clone();
        oa.extend(shared.iter().copied());
        let mut ob = shared.clone();
        ob.extend(fb.iter().copied());
        let a = self.permuted(&oa);
        let b = o.permuted(&ob);
        let d = self.dim;
        let m = d.pow(fa.len() as u32);
        let k = d.pow(shared.len() as u32);
        let n = d.pow(fb.len() as u32);
        let mut data = vec![T::zero(); m * n];
        for i in 0..m {
            for s in 0..k {
                let x = &a.data[i * k + s];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &b.data[s * n + j];
                    if y.is_zero() {
                        continue;
                    }
                    let cell = &mut data[i * n + j];
                    *cell = cell.add(&x.mul(y));
                }
            }
        }
        let mut labels = fa;
        labels.extend(fb);
        Tensor { dim: d, labels, data }
    }
}

/// Offset used to keep boundary labels apart from internal edge labels.
const BOUNDARY_LABEL: usize = 1 << 40;

/// Contracts the tensor network of an open graph. `node_tensor(kind, arity)`
/// gives the tensor of a node with the given number of legs, indexed in the
/// order supplied. The result is indexed by outputs then inputs, first wire
/// most significant.
pub fn contract_graph<K: NodeLabel, T: Semiring>(
    g: &OpenGraph<K>,
    dim: usize,
    node_tensor: &dyn Fn(&K, usize) -> Vec<T>,
) -> Tensor<T> {
    let mut tensors: Vec<Tensor<T>> = Vec::new();
    let mut legs: HashMap<NodeId, Vec<usize>> = HashMap::new();
    for (n, &(a, b)) in g.edges().iter().enumerate() {
        let ab = g.is_boundary(a);
        let bb = g.is_boundary(b);
        match (ab, bb) {
            (true, true) => {
                let (la, lb) = (BOUNDARY_LABEL + a, BOUNDARY_LABEL + b);
                tensors.push(Tensor::from_fn(dim, vec![la, lb], |i| if i[0] == i[1] { T::one() } else { T::zero() }));
            }
            (true, false) => legs.entry(b).or_default().push(BOUNDARY_LABEL + a),
            (false, true) => legs.entry(a).or_default().push(BOUNDARY_LABEL + b),
            (false, false) => {
                legs.entry(a).or_default().push(n);
                legs.entry(b).or_default().push(n);
            }
        }
    }
    for (id, k) in g.nodes() {
        let labels = legs.remove(id).unwrap_or_default();
        let data = node_tensor(k, labels.len());
        let mut t = Tensor { dim, labels, data };
        // self-loops appear as a repeated label
        loop {
            let mut found = None;
            'f: for i in 0..t.labels.len() {
                for j in i + 1..t.labels.len() {
                    if t.labels[i] == t.labels[j] {
                        found = Some((i, j));
                        break 'f;
                    }
                }
            }
            match found {
                Some((i, j)) => t = t.trace_pair(i, j),
                None => break,
            }
        }
        tensors.push(t);
    }
    let mut scalar = T::one();
    tensors.retain(|t| {
        if t.labels.is_empty() {
            scalar = scalar.mul(&t.data[0]);
            false
        } else {
            true
        }
    });
    while tensors.len() > 1 {
        let mut best: Option<(usize, usize, usize, bool)> = None;
        for i in 0..tensors.len() {
            for j in i + 1..tensors.len() {
                let shared = tensors[i].labels.iter().filter(|l| tensors[j].labels.contains(l)).count();
                let rank = tensors[i].labels.len() + tensors[j].labels.len() - 2 * shared;
                let key = (rank, shared > 0);
                let better = match best {
                    None => true,
                    Some((_, _, r, s)) => (!s && key.1) || (s == key.1 && rank < r),
                };
                if better {
                    best = Some((i, j, rank, shared > 0));
                }
            }
        }
        let (i, j, _, _) = best.unwrap();
        let b = tensors.swap_remove(j);
        let a = tensors.swap_remove(i);
        let c = a.contract(&b);
        if c.labels.is_empty() {
            scalar = scalar.mul(&c.data[0]);
        } else {
            tensors.push(c);
        }
    }
    let mut order: Vec<usize> = g.outputs().iter().map(|b| BOUNDARY_LABEL + b).collect();
    order.extend(g.inputs().iter().map(|b| BOUNDARY_LABEL + b));
    let mut t = match tensors.pop() {
        Some(t) => t.permuted(&order),
        None => Tensor::scalar(T::one(), dim),
    };
    if scalar != T::one() {
        for x in t.data.iter_mut() {
            *x = x.mul(&scalar);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permute_and_trace() {
        let t = Tensor::from_fn(2, vec![1, 2], |i| RingScalar::from_int((i[0] * 2 + i[1]) as i64));
        let p = t.permuted(&[2, 1]);
        assert_eq!(p.data, vec![0, 2, 1, 3].into_iter().map(RingScalar::from_int).collect::<Vec<_>>());
        let tr = Tensor { dim: 2, labels: vec![5, 5], data: t.data.clone() }.trace_pair(0, 1);
        assert_eq!(tr.data, vec![RingScalar::from_int(3)]);
    }

    #[test]
    fn contract_is_matrix_product() {
        let a = Tensor::from_fn(2, vec![1, 2], |i| RingScalar::from_int((i[0] * 2 + i[1] + 1) as i64));
        let b = Tensor::from_fn(2, vec![2, 3], |i| RingScalar::from_int((i[0] * 2 + i[1] + 5) as i64));
        let c = a.contract(&b);
        // [[1,2],[3,4]] * [[5,6],[7,8]]
        let want: Vec<RingScalar> = [19, 22, 43, 50].into_iter().map(RingScalar::from_int).collect();
        assert_eq!(c.labels, vec![1, 3]);
        assert_eq!(c.data, want);
    }
}
