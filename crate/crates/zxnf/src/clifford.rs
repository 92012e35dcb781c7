//! The single-qubit Clifford group modulo global phase, as 24 canonical words.
//!
//! Words list spiders in the order they are applied. The first 16 elements
//! are `X_b . Z_a` (green `a` first, then red `b`), `a, b` in multiples of
//! pi/2; the last 8 are `Z_g . X_{pi/2} . Z_a` with `g` in `{pi/2, -pi/2}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::diagram::{Colour, Phase8};
use crate::ring::RingScalar;
use crate::semantics::ExactMatrix;

/// One element of the Clifford group modulo phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct C1(u8);

/// A 2x2 exact matrix, row-major.
pub type Mat2 = [RingScalar; 4];

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
        &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
        &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
        &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
    ]
}

pub fn mat2_scale(a: &Mat2, c: &RingScalar) -> Mat2 {
    [&a[0] * c, &a[1] * c, &a[2] * c, &a[3] * c]
}

pub fn mat2_apply(a: &Mat2, v: &[RingScalar; 2]) -> [RingScalar; 2] {
    [&(&a[0] * &v[0]) + &(&a[1] * &v[1]), &(&a[2] * &v[0]) + &(&a[3] * &v[1])]
}

/// Row vector times matrix.
pub fn row_apply(e: &[RingScalar; 2], a: &Mat2) -> [RingScalar; 2] {
    [&(&e[0] * &a[0]) + &(&e[1] * &a[2]), &(&e[0] * &a[1]) + &(&e[1] * &a[3])]
}

pub fn mat2_det(a: &Mat2) -> RingScalar {
    &(&a[0] * &a[3]) - &(&a[1] * &a[2])
}

/// The inverse, when the determinant is a unit of the ring.
pub fn mat2_inverse(a: &Mat2) -> Option<Mat2> {
    let d = mat2_det(a);
    let adj = [a[3].clone(), -&a[1], -&a[2], a[0].clone()];
    let mut out: Mat2 = Default::default();
    for (o, x) in out.iter_mut().zip(adj.iter()) {
        *o = x.checked_div(&d)?;
    }
    Some(out)
}

pub fn mat2_identity() -> Mat2 {
    [RingScalar::one(), RingScalar::zero(), RingScalar::zero(), RingScalar::one()]
}

pub fn mat2_to_exact(a: &Mat2) -> ExactMatrix {
    ExactMatrix { rows: 2, cols: 2, data: a.to_vec() }
}

/// The matrix of a green phase shift.
pub fn z_mat(p: Phase8) -> Mat2 {
    [RingScalar::one(), RingScalar::zero(), RingScalar::zero(), RingScalar::omega(p.k() as i64)]
}

pub fn h_mat() -> Mat2 {
    let s = RingScalar::inv_sqrt2();
    [s.clone(), s.clone(), s.clone(), -&s]
}

/// The matrix of a red phase shift, `H Z H`.
pub fn x_mat(p: Phase8) -> Mat2 {
    mat2_mul(&mat2_mul(&h_mat(), &z_mat(p)), &h_mat())
}

pub fn gen_mat(c: Colour, p: Phase8) -> Mat2 {
    match c {
        Colour::Green => z_mat(p),
        Colour::Red => x_mat(p),
    }
}

/// The matrix of a word in application order.
pub fn word_mat(w: &[(Colour, Phase8)]) -> Mat2 {
    let mut m = mat2_identity();
    for &(c, p) in w {
        m = mat2_mul(&gen_mat(c, p), &m);
    }
    m
}

/// Divides by the first nonzero entry; equal keys mean proportional matrices.
fn projective_key(m: &Mat2) -> Option<Mat2> {
    let p = m.iter().position(|x| !x.is_zero())?;
    let d = m[p].clone();
    let mut out: Mat2 = Default::default();
    for (o, x) in out.iter_mut().zip(m.iter()) {
        *o = x.checked_div(&d)?;
    }
    Some(out)
}

struct Tables {
    words: Vec<Vec<(Colour, Phase8)>>,
    mats: Vec<Mat2>,
    by_key: HashMap<Mat2, u8>,
    mul: Vec<Vec<(u8, RingScalar)>>,
}

fn canonical_word(i: u8) -> Vec<(Colour, Phase8)> {
    let mut w = Vec::new();
    if i < 16 {
        let (a, b) = (i / 4, i % 4);
        if a != 0 {
            w.push((Colour::Green, Phase8::new(2 * a as i64)));
        }
        if b != 0 {
            w.push((Colour::Red, Phase8::new(2 * b as i64)));
        }
    } else {
        let j = i - 16;
        let g = if j / 4 == 0 { 2 } else { 6 };
        let a = j % 4;
        if a != 0 {
            w.push((Colour::Green, Phase8::new(2 * a as i64)));
        }
        w.push((Colour::Red, Phase8::HALF_PI));
        w.push((Colour::Green, Phase8::new(g)));
    }
    w
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let words: Vec<Vec<(Colour, Phase8)>> = (0..24).map(canonical_word).collect();
        let mats: Vec<Mat2> = words.iter().map(|w| word_mat(w)).collect();
        let mut by_key = HashMap::new();
        for (i, m) in mats.iter().enumerate() {
            let k = projective_key(m).expect("clifford matrices are invertible");
            let prev = by_key.insert(k, i as u8);
            assert!(prev.is_none(), "canonical words must be projectively distinct");
        }
        let mut mul = Vec::with_capacity(24);
        for a in 0..24 {
            let mut row = Vec::with_capacity(24);
            for b in 0..24 {
                let m = mat2_mul(&mats[a], &mats[b]);
                let k = projective_key(&m).unwrap();
                let c = by_key[&k];
                let lam = ratio(&m, &mats[c as usize]).unwrap();
                row.push((c, lam));
            }
            mul.push(row);
        }
        Tables { words, mats, by_key, mul }
    })
}

/// `c` with `a = c * b`, for proportional nonzero matrices.
fn ratio(a: &Mat2, b: &Mat2) -> Option<RingScalar> {
    let p = b.iter().position(|x| !x.is_zero())?;
    let c = a[p].checked_div(&b[p])?;
    if (0..4).all(|i| a[i] == &c * &b[i]) {
        Some(c)
    } else {
        None
    }
}

impl C1 {
    pub const I: C1 = C1(0);

    pub fn all() -> impl Iterator<Item = C1> {
        (0..24).map(C1)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn from_index(i: u8) -> Option<C1> {
        (i < 24).then_some(C1(i))
    }

    /// Green phase shift by a multiple of pi/2.
    pub fn z(p: Phase8) -> C1 {
        assert!(p.is_stabilizer());
        C1(4 * (p.k() / 2))
    }

    /// Red phase shift by a multiple of pi/2.
    pub fn x(p: Phase8) -> C1 {
        assert!(p.is_stabilizer());
        C1(p.k() / 2)
    }

    pub fn hadamard() -> C1 {
        C1::find(&h_mat()).unwrap().0
    }

    pub fn word(self) -> &'static [(Colour, Phase8)] {
        &tables().words[self.0 as usize]
    }

    pub fn matrix(self) -> &'static Mat2 {
        &tables().mats[self.0 as usize]
    }

    /// `(c, l)` with `mat(self) * mat(o) = l * mat(c)`: `o` applied first.
    pub fn mul(self, o: C1) -> (C1, &'static RingScalar) {
        let (c, l) = &tables().mul[self.0 as usize][o.0 as usize];
        (C1(*c), l)
    }

    /// `(c, l)` with `m = l * mat(c)`, if `m` is a multiple of a Clifford.
    pub fn find(m: &Mat2) -> Option<(C1, RingScalar)> {
        let k = projective_key(m)?;
        let c = *tables().by_key.get(&k)?;
        let l = ratio(m, &tables().mats[c as usize])?;
        Some((C1(c), l))
    }

    /// The inverse up to phase.
    pub fn inverse(self) -> C1 {
        C1::all().find(|c| self.mul(*c).0 == C1::I).unwrap()
    }

    /// Whether the matrix is diagonal, i.e. a green phase.
    pub fn is_diagonal(self) -> bool {
        self.0.is_multiple_of(4) && self.0 < 16
    }

    /// The green phase of a diagonal element.
    pub fn diagonal_phase(self) -> Option<Phase8> {
        self.is_diagonal().then(|| Phase8::new(2 * (self.0 / 4) as i64))
    }

    /// `(c, l)` with `c |+> = l^{-1} v`, i.e. `v = l * c|+>`; the lowest index
    /// wins.
    pub fn for_state(v: &[RingScalar; 2]) -> Option<(C1, RingScalar)> {
        let plus = [RingScalar::inv_sqrt2(), RingScalar::inv_sqrt2()];
        for c in C1::all() {
            let s = mat2_apply(c.matrix(), &plus);
            let p = if !s[0].is_zero() { 0 } else { 1 };
            if v[p].is_zero() {
                continue;
            }
            let l = match v[p].checked_div(&s[p]) {
                Some(l) => l,
                None => continue,
            };
            if v[1 - p] == &l * &s[1 - p] {
                return Some((c, l));
            }
        }
        None
    }
}

impl fmt::Display for C1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_to_string(self.word()))
    }
}

/// Space-separated tokens `Z<k>`, `X<k>`; `I` for the empty word.
pub fn word_to_string(w: &[(Colour, Phase8)]) -> String {
    if w.is_empty() {
        return "I".to_string();
    }
    w.iter()
        .map(|(c, p)| match c {
            Colour::Green => format!("Z{}", p.k()),
            Colour::Red => format!("X{}", p.k()),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_is_closed_and_associative() {
        for a in C1::all() {
            for b in C1::all() {
                let (ab, l1) = a.mul(b);
                let m = mat2_mul(a.matrix(), b.matrix());
                assert_eq!(m, mat2_scale(ab.matrix(), l1));
                for c in C1::all().step_by(5) {
                    assert_eq!(ab.mul(c).0, a.mul(b.mul(c).0).0);
                }
            }
        }
    }

    #[test]
    fn identity_and_inverse() {
        for a in C1::all() {
            assert_eq!(C1::I.mul(a).0, a);
            assert_eq!(a.mul(a.inverse()).0, C1::I);
        }
    }

    #[test]
    fn hadamard_is_in_the_group() {
        let h = C1::hadamard();
        assert_eq!(h.mul(h).0, C1::I);
        assert!(h.index() >= 16);
    }

    #[test]
    fn t_is_not_clifford() {
        assert!(C1::find(&z_mat(Phase8::new(1))).is_none());
    }

    #[test]
    fn diagonal_elements_are_green_phases() {
        let d: Vec<C1> = C1::all().filter(|c| c.is_diagonal()).collect();
        assert_eq!(d.len(), 4);
        for c in d {
            assert_eq!(*c.matrix(), z_mat(c.diagonal_phase().unwrap()));
        }
    }

    #[test]
    fn states_from_plus() {
        let zero = [RingScalar::one(), RingScalar::zero()];
        let (c, l) = C1::for_state(&zero).unwrap();
        let plus = [RingScalar::inv_sqrt2(), RingScalar::inv_sqrt2()];
        let s = mat2_apply(c.matrix(), &plus);
        assert_eq!([&l * &s[0], &l * &s[1]], zero);
    }
}
