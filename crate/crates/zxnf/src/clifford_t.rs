//! A unique normal form for single-qubit Clifford+T operators, up to a
//! nonzero scalar.
//!
//! Every operator that is not Clifford is `W . V_n ... V_1 . T . C` (matrix
//! order, `C` acts first) with `W` in `{I, R, SR}`, each `V_i` in
//! `{TR, TSR}` and `C` Clifford, where `R` is the red `pi/2` shift and `S` the
//! green one. Words are absorbed one generator at a time. Clifford prefixes
//! are split as `W . n` with `n` in the group generated by `S` and the red
//! `pi` shift; `n` is then pushed through the syllables, where it becomes a
//! product of `pi` shifts, and finally absorbed into `C`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::clifford::{mat2_mul, word_to_string, x_mat, z_mat, Mat2, C1};
use crate::diagram::{Colour, Diagram, Phase8, ZxNode};
use crate::error::ZxError;
use crate::ring::RingScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CtGen {
    Z(Phase8),
    X(Phase8),
    H,
}

/// Generators in the order they are applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CtWord(pub Vec<CtGen>);

impl CtWord {
    pub fn matrix(&self) -> Mat2 {
        let mut m = crate::clifford::mat2_identity();
        for g in &self.0 {
            m = mat2_mul(&gen_matrix(*g), &m);
        }
        m
    }

    /// The line diagram of the word.
    pub fn to_diagram(&self) -> Diagram {
        let mut d = Diagram::new();
        let mut prev = d.add_input();
        for g in &self.0 {
            let v = d.add_node(match *g {
                CtGen::Z(p) => ZxNode::Z(p),
                CtGen::X(p) => ZxNode::X(p),
                CtGen::H => ZxNode::H,
            });
            d.add_edge(prev, v);
            prev = v;
        }
        let o = d.add_output();
        d.add_edge(prev, o);
        d
    }

    /// Reads a single-qubit line diagram of Z, X and H nodes.
    pub fn from_diagram(d: &Diagram) -> Result<CtWord, ZxError> {
        let bad = |m: &str| ZxError::InvalidOperand(format!("not a single-qubit line diagram: {m}"));
        if d.n_inputs() != 1 || d.n_outputs() != 1 {
            return Err(bad("needs one input and one output"));
        }
        let out = d.outputs()[0];
        let mut prev = d.inputs()[0];
        let mut cur = d.boundary_neighbour(prev);
        let mut gens = Vec::new();
        let mut seen = 0;
        while cur != out {
            if d.degree(cur) != 2 || d.self_loops(cur) != 0 {
                return Err(bad("every node needs exactly two legs"));
            }
            gens.push(match d.kind(cur) {
                Some(ZxNode::Z(p)) => CtGen::Z(*p),
                Some(ZxNode::X(p)) => CtGen::X(*p),
                Some(ZxNode::H) => CtGen::H,
                _ => return Err(bad("only Z, X and H nodes are allowed")),
            });
            let n = d.neighbours(cur);
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
            seen += 1;
        }
        if seen != d.node_count() {
            return Err(bad("stray nodes off the line"));
        }
        Ok(CtWord(gens))
    }

    pub fn adjoint(&self) -> CtWord {
        CtWord(
            self.0
                .iter()
                .rev()
                .map(|g| match *g {
                    CtGen::Z(p) => CtGen::Z(-p),
                    CtGen::X(p) => CtGen::X(-p),
                    CtGen::H => CtGen::H,
                })
                .collect(),
        )
    }

    fn from_c1(c: C1) -> CtWord {
        CtWord(
            c.word()
                .iter()
                .map(|&(col, p)| match col {
                    Colour::Green => CtGen::Z(p),
                    Colour::Red => CtGen::X(p),
                })
                .collect(),
        )
    }
}

impl fmt::Display for CtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "I");
        }
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|g| match g {
                CtGen::Z(p) => format!("Z{}", p.k()),
                CtGen::X(p) => format!("X{}", p.k()),
                CtGen::H => "H".to_string(),
            })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

impl FromStr for CtWord {
    type Err = ZxError;

    /// Whitespace-separated `Z<k>`, `X<k>` and `H`; `k` counts `pi/4`.
    fn from_str(s: &str) -> Result<Self, ZxError> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let g = match tok {
                "H" => CtGen::H,
                "I" => continue,
                t if t.starts_with('Z') || t.starts_with('X') => {
                    let k: i64 = t[1..].parse().map_err(|_| ZxError::Parse(format!("bad token {t:?}")))?;
                    if t.starts_with('Z') {
                        CtGen::Z(Phase8::new(k))
                    } else {
                        CtGen::X(Phase8::new(k))
                    }
                }
                t => return Err(ZxError::Parse(format!("bad token {t:?}"))),
            };
            out.push(g);
        }
        Ok(CtWord(out))
    }
}

fn gen_matrix(g: CtGen) -> Mat2 {
    match g {
        CtGen::Z(p) => z_mat(p),
        CtGen::X(p) => x_mat(p),
        CtGen::H => crate::clifford::h_mat(),
    }
}

fn t_mat() -> Mat2 {
    z_mat(Phase8::new(1))
}

/// Whether `a = c . b` for some scalar `c` (both nonzero).
pub fn proportional2(a: &Mat2, b: &Mat2) -> bool {
    let Some(p) = b.iter().position(|x| !x.is_zero()) else { return false };
    let Some(c) = a[p].checked_div(&b[p]) else { return false };
    (0..4).all(|i| a[i] == &c * &b[i])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Syllable {
    /// `T R`
    TR,
    /// `T S R`
    TSR,
}

impl Syllable {
    const ALL: [Syllable; 2] = [Syllable::TR, Syllable::TSR];

    pub fn word(self) -> CtWord {
        let mut w = vec![CtGen::X(Phase8::HALF_PI)];
        if self == Syllable::TSR {
            w.push(CtGen::Z(Phase8::HALF_PI));
        }
        w.push(CtGen::Z(Phase8::new(1)));
        CtWord(w)
    }

    fn idx(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WElem {
    I,
    R,
    /// `S R`
    SR,
}

impl WElem {
    const ALL: [WElem; 3] = [WElem::I, WElem::R, WElem::SR];

    pub fn word(self) -> CtWord {
        match self {
            WElem::I => CtWord::default(),
            WElem::R => CtWord(vec![CtGen::X(Phase8::HALF_PI)]),
            WElem::SR => CtWord(vec![CtGen::X(Phase8::HALF_PI), CtGen::Z(Phase8::HALF_PI)]),
        }
    }

    fn c1(self) -> C1 {
        C1::find(&self.word().matrix()).unwrap().0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UElem {
    Clifford(C1),
    /// `T . C`
    THeaded(C1),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CtNormalForm {
    pub w: WElem,
    /// `V_1` first.
    pub syllables: Vec<Syllable>,
    pub u: UElem,
}

impl CtNormalForm {
    pub fn clifford(c: C1) -> Self {
        CtNormalForm { w: WElem::I, syllables: Vec::new(), u: UElem::Clifford(c) }
    }

    pub fn is_clifford(&self) -> bool {
        matches!(self.u, UElem::Clifford(_))
    }

    pub fn t_count(&self) -> usize {
        self.syllables.len() + usize::from(!self.is_clifford())
    }

    fn u_word(&self) -> CtWord {
        match self.u {
            UElem::Clifford(c) => CtWord::from_c1(c),
            UElem::THeaded(c) => {
                let mut w = CtWord::from_c1(c);
                w.0.push(CtGen::Z(Phase8::new(1)));
                w
            }
        }
    }

    fn syllable_string(&self) -> String {
        let s: Vec<String> = self.syllables.iter().rev().map(|v| format!("[{}]", v.word())).collect();
        if s.is_empty() {
            "-".into()
        } else {
            s.join(" ")
        }
    }

    /// The word `U`, then `V_1 ... V_n`, then `W`, in application order.
    pub fn to_word(&self) -> CtWord {
        let mut w = self.u_word().0;
        for v in &self.syllables {
            w.extend(v.word().0);
        }
        w.extend(self.w.word().0);
        CtWord(w)
    }
}

/// Components in matrix order; each component's word is in application order
/// and syllables are listed `V_n` first.
impl fmt::Display for CtNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W={} ; V={} ; U={}", self.w.word(), self.syllable_string(), self.u_word())
    }
}

struct Tables {
    /// `c = W . n`, indexed by `c`.
    split: Vec<(WElem, C1)>,
    /// `n . V = V' . p` with `p` a product of `pi` shifts.
    push: std::collections::HashMap<(C1, Syllable), (Syllable, C1)>,
    /// `n . T = T . m`.
    through_t: std::collections::HashMap<C1, C1>,
    /// `T . V`, which is Clifford.
    t_v: [C1; 2],
}

fn c1_of(m: &Mat2) -> C1 {
    C1::find(m).expect("Clifford by construction").0
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let s = |k: i64| z_mat(Phase8::new(2 * k));
        let xpi = x_mat(Phase8::PI);
        let mut n = Vec::new();
        let mut pi = Vec::new();
        for a in 0..2 {
            for k in 0..4 {
                let m = if a == 1 { mat2_mul(&s(k), &xpi) } else { s(k) };
                let c = c1_of(&m);
                n.push(c);
                if k % 2 == 0 {
                    pi.push(c);
                }
            }
        }
        let mut split = Vec::new();
        for c in C1::all() {
            let found: Vec<(WElem, C1)> = WElem::ALL
                .iter()
                .flat_map(|&w| n.iter().map(move |&x| (w, x)))
                .filter(|&(w, x)| w.c1().mul(x).0 == c)
                .collect();
            assert_eq!(found.len(), 1, "W . n must split every Clifford uniquely");
            split.push(found[0]);
        }
        let vm = |v: Syllable| v.word().matrix();
        let mut push = std::collections::HashMap::new();
        for &x in &n {
            for v in Syllable::ALL {
                let lhs = mat2_mul(x.matrix(), &vm(v));
                let found: Vec<(Syllable, C1)> = Syllable::ALL
                    .iter()
                    .flat_map(|&v2| pi.iter().map(move |&p| (v2, p)))
                    .filter(|&(v2, p)| proportional2(&lhs, &mat2_mul(&vm(v2), p.matrix())))
                    .collect();
                assert_eq!(found.len(), 1, "pushing past a syllable must be unique");
                push.insert((x, v), found[0]);
            }
        }
        let tinv = z_mat(Phase8::new(-1));
        let mut through_t = std::collections::HashMap::new();
        for &x in &n {
            let m = mat2_mul(&mat2_mul(&tinv, x.matrix()), &t_mat());
            through_t.insert(x, c1_of(&m));
        }
        let t_v = [Syllable::TR, Syllable::TSR].map(|v| c1_of(&mat2_mul(&t_mat(), &vm(v))));
        Tables { split, push, through_t, t_v }
    })
}

/// Absorbs the Clifford `c` applied after `nf`.
fn absorb_clifford(nf: &mut CtNormalForm, c: C1) {
    let t = tables();
    match nf.u {
        UElem::Clifford(u) => nf.u = UElem::Clifford(c.mul(u).0),
        UElem::THeaded(u) => {
            let (w2, mut x) = t.split[c.mul(nf.w.c1()).0.index() as usize];
            nf.w = w2;
            for v in nf.syllables.iter_mut().rev() {
                let (v2, p) = t.push[&(x, *v)];
                *v = v2;
                x = p;
            }
            nf.u = UElem::THeaded(t.through_t[&x].mul(u).0);
        }
    }
}

/// Absorbs a `T` applied after `nf`.
fn absorb_t(nf: &mut CtNormalForm) {
    let t = tables();
    match nf.u {
        UElem::Clifford(u) => nf.u = UElem::THeaded(u),
        UElem::THeaded(u) => {
            if nf.w != WElem::I {
                // T W is a syllable
                let v = if nf.w == WElem::R { Syllable::TR } else { Syllable::TSR };
                nf.syllables.push(v);
                nf.w = WElem::I;
            } else if let Some(v) = nf.syllables.pop() {
                let c = t.t_v[v.idx()];
                absorb_clifford(nf, c);
            } else {
                let s = C1::z(Phase8::HALF_PI);
                nf.u = UElem::Clifford(s.mul(u).0);
            }
        }
    }
}

fn absorb(nf: &mut CtNormalForm, g: CtGen) {
    match g {
        CtGen::H => absorb_clifford(nf, C1::hadamard()),
        CtGen::Z(p) => {
            absorb_clifford(nf, C1::z(Phase8::new((p.k() & !1) as i64)));
            if p.k() % 2 == 1 {
                absorb_t(nf);
            }
        }
        CtGen::X(p) => {
            if p.k() % 2 == 0 {
                absorb_clifford(nf, C1::x(p));
            } else {
                absorb(nf, CtGen::H);
                absorb(nf, CtGen::Z(p));
                absorb(nf, CtGen::H);
            }
        }
    }
}

pub fn normalize_ct(w: &CtWord) -> CtNormalForm {
    let mut nf = CtNormalForm::clifford(C1::I);
    for &g in &w.0 {
        absorb(&mut nf, g);
    }
    nf
}

pub fn ct_equal(a: &CtWord, b: &CtWord) -> bool {
    normalize_ct(a) == normalize_ct(b)
}

pub fn ct_adjoint_nf(nf: &CtNormalForm) -> CtNormalForm {
    normalize_ct(&nf.to_word().adjoint())
}

/// A Bloch-type vector `(x1 + x2 r, y1 + y2 r, z1 + z2 r) / r^m` with
/// `r = sqrt2`, tracking the stabilizer `xX + yY + zZ` of a state exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabVector {
    pub m: u32,
    pub x1: BigInt,
    pub x2: BigInt,
    pub y1: BigInt,
    pub y2: BigInt,
    pub z1: BigInt,
    pub z2: BigInt,
}

impl StabVector {
    /// The stabilizer of `|0>`.
    pub fn zero_state() -> Self {
        StabVector::axis(2)
    }

    /// The stabilizer of `|+>`.
    pub fn plus_state() -> Self {
        StabVector::axis(0)
    }

    fn axis(i: usize) -> Self {
        let mut c = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        c[i] = BigInt::one();
        let [x1, y1, z1] = c;
        StabVector { m: 0, x1, x2: BigInt::zero(), y1, y2: BigInt::zero(), z1, z2: BigInt::zero() }
    }

    fn parts(&self) -> [(BigInt, BigInt); 3] {
        [(self.x1.clone(), self.x2.clone()), (self.y1.clone(), self.y2.clone()), (self.z1.clone(), self.z2.clone())]
    }

    fn from_parts(m: u32, p: [(BigInt, BigInt); 3]) -> Self {
        let [(x1, x2), (y1, y2), (z1, z2)] = p;
        StabVector { m, x1, x2, y1, y2, z1, z2 }
    }

    /// Whether this is exactly `(0, 0, 1)`.
    pub fn is_z_axis(&self) -> bool {
        self.is_axis(2)
    }

    fn is_axis(&self, i: usize) -> bool {
        let p = self.parts();
        let two_pow = |k: u32| BigInt::from(2).pow(k);
        let unit = if self.m.is_multiple_of(2) {
            (two_pow(self.m / 2), BigInt::zero())
        } else {
            (BigInt::zero(), two_pow(self.m / 2))
        };
        (0..3).all(|j| if j == i { p[j] == unit } else { p[j].0.is_zero() && p[j].1.is_zero() })
    }

    /// Whether the parities are one of those reachable after one or more
    /// syllables: `x1, y1` odd and the rest even (only right after a start on
    /// the `z` axis), `x1, y1, z2` odd and the rest even, or everything odd
    /// but `z1`. In all of them `x1` is odd, so the vector is never on the
    /// `z` or `y` axis.
    pub fn parity_holds(&self) -> bool {
        let odd = |b: &BigInt| (b % 2u32) != BigInt::zero();
        let pattern = [&self.x1, &self.x2, &self.y1, &self.y2, &self.z1, &self.z2].map(odd);
        [
            [true, false, true, false, false, false],
            [true, false, true, false, false, true],
            [true, true, true, true, false, true],
        ]
        .contains(&pattern)
    }

    /// Divides out common factors of `sqrt2` so `m` is as small as possible.
    fn reduced(mut self) -> Self {
        let even = |b: &BigInt| (b % 2u32) == BigInt::zero();
        while self.m > 0 && even(&self.x1) && even(&self.y1) && even(&self.z1) {
            let half = |b: &BigInt| b / 2;
            self = StabVector {
                m: self.m - 1,
                x1: self.x2.clone(),
                x2: half(&self.x1),
                y1: self.y2.clone(),
                y2: half(&self.y1),
                z1: self.z2.clone(),
                z2: half(&self.z1),
            };
        }
        self
    }

    /// The stabilizer after applying `T`: `(x - y, x + y, sqrt2 z) / sqrt2`.
    pub fn apply_t(&self) -> Self {
        let [(x1, x2), (y1, y2), (z1, z2)] = self.parts();
        Self::from_parts(self.m + 1, [(&x1 - &y1, &x2 - &y2), (&x1 + &y1, &x2 + &y2), (2 * z2, z1)]).reduced()
    }

    /// The stabilizer after a Clifford, a signed permutation of the axes.
    pub fn apply_clifford(&self, c: C1) -> Self {
        let (perm, sign) = pauli_action(c);
        let p = self.parts();
        let mut out: [(BigInt, BigInt); 3] = Default::default();
        for i in 0..3 {
            let (a, b) = &p[i];
            out[perm[i]] = if sign[i] { (-a, -b) } else { (a.clone(), b.clone()) };
        }
        Self::from_parts(self.m, out)
    }
}

fn paulis() -> [Mat2; 3] {
    let o = RingScalar::one();
    let z = RingScalar::zero();
    let i = RingScalar::omega(2);
    [[z.clone(), o.clone(), o.clone(), z.clone()], [z.clone(), -&i, i, z.clone()], [o.clone(), z.clone(), z, -&o]]
}

/// `C P_i C^-1 = (-1)^sign[i] P_perm[i]`.
fn pauli_action(c: C1) -> ([usize; 3], [bool; 3]) {
    let inv = crate::clifford::mat2_inverse(c.matrix()).expect("Clifford matrices are invertible");
    let ps = paulis();
    let mut perm = [0; 3];
    let mut sign = [false; 3];
    for i in 0..3 {
        let m = mat2_mul(&mat2_mul(c.matrix(), &ps[i]), &inv);
        let j = (0..3)
            .find(|&j| proportional2(&m, &ps[j]))
            .expect("Cliffords permute the Paulis");
        perm[i] = j;
        sign[i] = m != ps[j];
    }
    (perm, sign)
}

/// Evolves a stabilizer through one generator of the normal-form alphabet.
pub fn stab_evolve_clifford(v: &StabVector, c: C1) -> StabVector {
    v.apply_clifford(c)
}

pub fn stab_evolve_syllable(v: &StabVector, s: Syllable) -> StabVector {
    let mut out = v.apply_clifford(C1::x(Phase8::HALF_PI));
    if s == Syllable::TSR {
        out = out.apply_clifford(C1::z(Phase8::HALF_PI));
    }
    out.apply_t()
}

fn evolve_nf(nf: &CtNormalForm, start: StabVector) -> (StabVector, bool) {
    let mut v = start;
    let mut parity = true;
    match nf.u {
        UElem::Clifford(c) => v = v.apply_clifford(c),
        UElem::THeaded(c) => v = v.apply_clifford(c).apply_t(),
    }
    for s in &nf.syllables {
        v = stab_evolve_syllable(&v, *s);
        parity &= v.parity_holds();
    }
    (v.apply_clifford(nf.w.c1()), parity)
}

/// Matrix-free test of whether `nf` could be a multiple of the identity: it
/// must fix the stabilizers of both `|0>` and `|+>`. For normal forms with
/// syllables the parity of the evolved `|0>` stabilizer rules this out.
pub fn is_identity_witness(nf: &CtNormalForm) -> bool {
    let (z, parity) = evolve_nf(nf, StabVector::zero_state());
    if !nf.syllables.is_empty() {
        assert!(parity, "syllables keep x1, y1 and z2 odd");
        return z.is_z_axis();
    }
    let (x, _) = evolve_nf(nf, StabVector::plus_state());
    z.is_z_axis() && x.is_axis(0)
}

/// The Clifford part of a pure Clifford form, as a word.
pub fn c1_word(c: C1) -> String {
    word_to_string(c.word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::interpret;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> CtWord {
        s.parse().unwrap()
    }

    fn oracle(a: &CtWord) -> Mat2 {
        let m = interpret(&a.to_diagram());
        [m.data[0].clone(), m.data[1].clone(), m.data[2].clone(), m.data[3].clone()]
    }

    #[test]
    fn small_examples() {
        assert_eq!(normalize_ct(&w("Z1")), CtNormalForm { w: WElem::I, syllables: vec![], u: UElem::THeaded(C1::I) });
        assert_eq!(normalize_ct(&w("Z1 Z1")), CtNormalForm::clifford(C1::z(Phase8::HALF_PI)));
        assert_eq!(normalize_ct(&w("H H")), CtNormalForm::clifford(C1::I));
        assert!(!ct_equal(&w("Z2"), &w("Z1")));
        let a = w("Z1 H Z1 H");
        let b = w("H Z1 H Z1");
        assert_eq!(ct_equal(&a, &b), proportional2(&oracle(&a), &oracle(&b)));
    }

    #[test]
    fn normal_forms_are_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let len = rng.gen_range(0..=14);
            let word = CtWord(
                (0..len)
                    .map(|_| match rng.gen_range(0..4) {
                        0 => CtGen::H,
                        1 => CtGen::Z(Phase8::new(rng.gen_range(0..8))),
                        2 => CtGen::X(Phase8::new(rng.gen_range(0..8))),
                        _ => CtGen::Z(Phase8::new(1)),
                    })
                    .collect(),
            );
            let nf = normalize_ct(&word);
            assert!(proportional2(&oracle(&nf.to_word()), &oracle(&word)), "{word} -> {nf}");
            assert_eq!(normalize_ct(&nf.to_word()), nf, "normal forms are fixed points");
            let adj = ct_adjoint_nf(&nf);
            assert_eq!(adj.t_count(), nf.t_count());
            assert_eq!(ct_adjoint_nf(&adj), nf);
        }
    }

    #[test]
    fn stabilizer_updates_match_the_stated_rules() {
        // T fixes |0>, and the reduced form says so
        assert_eq!(StabVector::zero_state().apply_t(), StabVector::zero_state());
        let v = StabVector::plus_state().apply_t();
        assert_eq!((v.m, v.x1.clone(), v.y1.clone()), (1, BigInt::one(), BigInt::one()));
        // from any T-headed start the parities cycle and x1 stays odd
        for c in C1::all() {
            let mut u = StabVector::zero_state().apply_clifford(c).apply_t();
            for k in 0..6 {
                u = stab_evolve_syllable(&u, Syllable::ALL[(c.index() as usize + k) % 2]);
                assert!(u.parity_holds(), "{u:?}");
            }
        }
    }

    #[test]
    fn only_the_identity_passes_the_witness() {
        for c in C1::all() {
            assert_eq!(is_identity_witness(&CtNormalForm::clifford(c)), c == C1::I);
            let t = CtNormalForm { w: WElem::I, syllables: vec![], u: UElem::THeaded(c) };
            assert!(!is_identity_witness(&t));
        }
    }

    #[test]
    fn display_format() {
        let nf = normalize_ct(&w("Z1 H Z1 H Z1"));
        let s = nf.to_string();
        assert!(s.starts_with("W=") && s.contains(" ; V=") && s.contains(" ; U="), "{s}");
    }
}
