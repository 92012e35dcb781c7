//! Single-toy-bit operators: the 24 permutations of the ontic states.
//!
//! Ontic state `s` in `1..=4` has index `s - 1 = 2q + p`, so `{1, 2}` is
//! `Q = 0` and `{1, 3}` is `P = 0`. Every permutation is an affine map of
//! `(q, p)` over GF(2). Green phase `ab` maps `p` to `p + (a + b) q + a`,
//! red phase `ab` maps `q` to `q + (a + b) p + a`, and `HS` swaps `q` and `p`.

use std::fmt;
use std::sync::OnceLock;

use crate::diagram::Colour;
use crate::graph::NodeId;
use crate::toy::diagram::{ToyDiagram, ToyNode, ToyPhase};

/// A permutation of the ontic indices `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalOp(pub [u8; 4]);

/// One letter of a single-toy-bit word.
pub type Letter = (Colour, ToyPhase);

fn qp(i: u8) -> (bool, bool) {
    (i & 2 != 0, i & 1 != 0)
}

fn idx(q: bool, p: bool) -> u8 {
    2 * q as u8 + p as u8
}

impl LocalOp {
    pub const I: LocalOp = LocalOp([0, 1, 2, 3]);

    fn from_fn(f: impl Fn(bool, bool) -> (bool, bool)) -> LocalOp {
        let mut m = [0u8; 4];
        for i in 0..4u8 {
            let (q, p) = qp(i);
            let (q2, p2) = f(q, p);
            m[i as usize] = idx(q2, p2);
        }
        LocalOp(m)
    }

    pub fn green(a: ToyPhase) -> LocalOp {
        let s = a.a() ^ a.b();
        LocalOp::from_fn(|q, p| (q, p ^ (s & q) ^ a.a()))
    }

    pub fn red(a: ToyPhase) -> LocalOp {
        let s = a.a() ^ a.b();
        LocalOp::from_fn(|q, p| (q ^ (s & p) ^ a.a(), p))
    }

    pub fn phase(c: Colour, a: ToyPhase) -> LocalOp {
        match c {
            Colour::Green => LocalOp::green(a),
            Colour::Red => LocalOp::red(a),
        }
    }

    pub fn hs() -> LocalOp {
        LocalOp::from_fn(|q, p| (p, q))
    }

    /// From a linear part acting on `(p, q)` as `[[a, b], [c, d]]` and a
    /// translation `(tq, tp)` added afterwards.
    pub fn affine(block: [bool; 4], tq: bool, tp: bool) -> Option<LocalOp> {
        let [a, b, c, d] = block;
        if !((a & d) ^ (b & c)) {
            return None;
        }
        Some(LocalOp::from_fn(|q, p| ((c & p) ^ (d & q) ^ tq, (a & p) ^ (b & q) ^ tp)))
    }

    pub fn apply(self, i: u8) -> u8 {
        self.0[i as usize]
    }

    /// `self` after `first`.
    pub fn after(self, first: LocalOp) -> LocalOp {
        let mut m = [0u8; 4];
        for i in 0..4 {
            m[i] = self.0[first.0[i] as usize];
        }
        LocalOp(m)
    }

    /// `then` after `self`.
    pub fn then(self, then: LocalOp) -> LocalOp {
        then.after(self)
    }

    pub fn inverse(self) -> LocalOp {
        let mut m = [0u8; 4];
        for i in 0..4 {
            m[self.0[i] as usize] = i as u8;
        }
        LocalOp(m)
    }

    /// Green phases are exactly the operators fixing `q`.
    pub fn is_green(self) -> bool {
        (0..4u8).all(|i| qp(self.apply(i)).0 == qp(i).0)
    }

    pub fn green_phase(self) -> Option<ToyPhase> {
        ToyPhase::all().find(|&a| LocalOp::green(a) == self)
    }

    pub fn all() -> impl Iterator<Item = LocalOp> {
        table().all.iter().copied()
    }

    /// Position in the fixed enumeration of the 24 operators.
    pub fn index(self) -> usize {
        table().all.iter().position(|&o| o == self).expect("every permutation is listed")
    }

    /// The canonical word, letters in application order.
    pub fn word(self) -> &'static [Letter] {
        &table().words[self.index()]
    }

    /// Evaluates a word, letters in application order.
    pub fn of_word(w: &[Letter]) -> LocalOp {
        w.iter().fold(LocalOp::I, |acc, &(c, a)| acc.then(LocalOp::phase(c, a)))
    }

    /// The single-toy-bit state this operator makes from `P = 0`, as the set
    /// of ontic indices.
    pub fn image_of_p0(self) -> [u8; 2] {
        let mut s = [self.apply(0), self.apply(2)];
        s.sort();
        s
    }
}

impl fmt::Display for LocalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return write!(f, "I");
        }
        let parts: Vec<String> = w
            .iter()
            .map(|(c, a)| format!("{}{a}", if *c == Colour::Green { "G" } else { "R" }))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

struct Table {
    all: Vec<LocalOp>,
    words: Vec<Vec<Letter>>,
}

/// Canonical words have the shape green, red, green with identity letters
/// dropped; among the words for one operator the shortest, then the
/// smallest phases, is chosen.
fn table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| {
        let mut best: std::collections::BTreeMap<LocalOp, (usize, [u8; 3])> = std::collections::BTreeMap::new();
        for a in ToyPhase::all() {
            for b in ToyPhase::all() {
                for c in ToyPhase::all() {
                    let op = LocalOp::green(a).then(LocalOp::red(b)).then(LocalOp::green(c));
                    let len = [a, b, c].iter().filter(|p| **p != ToyPhase::ZERO).count();
                    let key = (len, [a.index(), b.index(), c.index()]);
                    let e = best.entry(op).or_insert(key);
                    if key < *e {
                        *e = key;
                    }
                }
            }
        }
        assert_eq!(best.len(), 24, "green-red-green words reach every permutation");
        let mut all = Vec::new();
        let mut words = Vec::new();
        for (op, (_, [a, b, c])) in best {
            let mut w = Vec::new();
            for (col, k) in [(Colour::Green, a), (Colour::Red, b), (Colour::Green, c)] {
                if k != 0 {
                    w.push((col, ToyPhase::from_index(k)));
                }
            }
            assert_eq!(LocalOp::of_word(&w), op);
            all.push(op);
            words.push(w);
        }
        Table { all, words }
    })
}

/// Attaches the nodes of a word after `from`; returns the last node.
pub fn attach_word(d: &mut ToyDiagram, from: NodeId, w: &[Letter]) -> NodeId {
    let mut last = from;
    for &(c, a) in w {
        let v = d.add_node(ToyNode::spider(c, a));
        d.add_edge(last, v);
        last = v;
    }
    last
}

/// The reduced set: the four green phases, and green `01` or `10` followed
/// by red `01`. Each coset of the red phases meets it exactly once, that is
/// each of the six single-toy-bit states made from `P = 0` has one
/// representative.
pub fn toy_reduced_set() -> [LocalOp; 6] {
    let gr = |g| LocalOp::green(g).then(LocalOp::red(ToyPhase::P01));
    [
        LocalOp::green(ToyPhase::ZERO),
        LocalOp::green(ToyPhase::P01),
        LocalOp::green(ToyPhase::P10),
        LocalOp::green(ToyPhase::P11),
        gr(ToyPhase::P01),
        gr(ToyPhase::P10),
    ]
}

pub fn in_toy_reduced_set(o: LocalOp) -> bool {
    toy_reduced_set().contains(&o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::semantics::{interpret_toy, ToyRelation};

    fn word_diagram(w: &[Letter]) -> ToyDiagram {
        let mut d = ToyDiagram::new();
        let i = d.add_input();
        let o = d.add_output();
        let v = d.add_node(ToyNode::Z(ToyPhase::ZERO));
        d.add_edge(i, v);
        let last = attach_word(&mut d, v, w);
        d.add_edge(last, o);
        d
    }

    fn op_relation(o: LocalOp) -> ToyRelation {
        let mut r = ToyRelation::empty(1, 1);
        for i in 0..4 {
            r.set(o.apply(i as u8) as usize, i, true);
        }
        r
    }

    #[test]
    fn group_structure() {
        let all: Vec<LocalOp> = LocalOp::all().collect();
        assert_eq!(all.len(), 24);
        for &a in &all {
            assert_eq!(a.then(a.inverse()), LocalOp::I);
            for &b in &all {
                assert!(all.contains(&a.then(b)));
            }
        }
        assert_eq!(LocalOp::hs().0, [0, 2, 1, 3]);
        for a in ToyPhase::all() {
            for b in ToyPhase::all() {
                assert_eq!(LocalOp::green(a).then(LocalOp::green(b)), LocalOp::green(a + b));
            }
            assert!(LocalOp::green(a).is_green());
            assert_eq!(LocalOp::hs().then(LocalOp::green(a)).then(LocalOp::hs()), LocalOp::red(a));
        }
    }

    #[test]
    fn words_denote_their_operators() {
        for o in LocalOp::all() {
            assert_eq!(interpret_toy(&word_diagram(o.word())), op_relation(o), "{o}");
        }
        assert_eq!(interpret_toy(&crate::toy::diagram::hs()), op_relation(LocalOp::hs()));
    }

    #[test]
    fn reduced_set_meets_each_red_coset_once() {
        let reds: Vec<LocalOp> = ToyPhase::all().map(LocalOp::red).collect();
        let mut states = std::collections::BTreeSet::new();
        for r in toy_reduced_set() {
            states.insert(r.image_of_p0());
            for o in LocalOp::all() {
                let same_coset = reds.iter().any(|&h| h.then(r) == o);
                assert_eq!(same_coset, o.image_of_p0() == r.image_of_p0());
            }
        }
        assert_eq!(states.len(), 6);
    }
}
