//! Named diagrams used by the examples, the data files and the tests.

use crate::diagram::{hadamard, identity, pair, spider, star, Colour, Diagram, Phase8, ZxNode};
use crate::toy::diagram::{green, red, ToyDiagram, ToyPhase};

fn seq(a: &Diagram, b: &Diagram) -> Diagram {
    a.compose(b).expect("corpus arities line up")
}

fn on_qubit(g: &Diagram, q: usize) -> Diagram {
    if q == 0 {
        g.tensor(&identity(1))
    } else {
        identity(1).tensor(g)
    }
}

fn phase_gate(p: Phase8) -> Diagram {
    spider(Colour::Green, p, 1, 1)
}

/// CNOT with control on qubit 0, including its normalizing scalar.
pub fn cnot() -> Diagram {
    let mut d = Diagram::new();
    let ic = d.add_input();
    let it = d.add_input();
    let oc = d.add_output();
    let ot = d.add_output();
    let g = d.add_node(ZxNode::Z(Phase8::ZERO));
    let r = d.add_node(ZxNode::X(Phase8::ZERO));
    d.add_edge(ic, g);
    d.add_edge(g, oc);
    d.add_edge(g, r);
    d.add_edge(it, r);
    d.add_edge(r, ot);
    d.tensor(&pair(Phase8::ZERO, Phase8::ZERO))
}

/// Controlled-Z from two CNOTs and phase gates:
/// `(S x S) CNOT (1 x S^dagger) CNOT`.
pub fn cz_with_phase_gates() -> Diagram {
    let s = phase_gate(Phase8::HALF_PI);
    let first = seq(&cnot(), &on_qubit(&phase_gate(Phase8::MINUS_HALF_PI), 1));
    seq(&seq(&first, &cnot()), &s.tensor(&s))
}

/// Controlled-Z from one CNOT conjugated by Hadamards on the target.
pub fn cz_with_hadamards() -> Diagram {
    let h = on_qubit(&hadamard(), 1);
    seq(&seq(&h, &cnot()), &h)
}

/// `1/2 * sqrt2`, the normalizing factor of the Bell state and of the
/// single-qubit effects below.
fn half_sqrt2() -> Diagram {
    star().tensor(&pair(Phase8::ZERO, Phase8::ZERO))
}

/// `(|00> + |11>) / sqrt2`.
pub fn bell_state() -> Diagram {
    half_sqrt2().tensor(&identity(1).bend_inputs())
}

/// The normalized effect `<0|`, `<1|`, `<+|` or `<-|`: computational basis
/// effects are red, Hadamard basis effects green, with phase pi for the
/// outcome 1 or minus.
pub fn basis_effect(hadamard_basis: bool, outcome: bool) -> Diagram {
    let c = if hadamard_basis { Colour::Green } else { Colour::Red };
    let p = if outcome { Phase8::PI } else { Phase8::ZERO };
    half_sqrt2().tensor(&spider(c, p, 1, 0))
}

/// The amplitude of a pair of outcomes on the Bell state.
pub fn bell_overlap(a: (bool, bool), b: (bool, bool)) -> Diagram {
    let eff = basis_effect(a.0, a.1).tensor(&basis_effect(b.0, b.1));
    seq(&bell_state(), &eff)
}

/// The probability of a pair of outcomes: the amplitude times its adjoint.
pub fn bell_probability(a: (bool, bool), b: (bool, bool)) -> Diagram {
    let amp = bell_overlap(a, b);
    amp.tensor(&amp.adjoint())
}

/// The six single-toy-bit states with maximal knowledge: the four green
/// phase states and the red `00` and `11` states.
pub fn single_toy_bit_states() -> Vec<(String, ToyDiagram)> {
    let mut out: Vec<(String, ToyDiagram)> = ToyPhase::all().map(|p| (format!("green {p}"), green(p, 0, 1))).collect();
    for p in [ToyPhase::ZERO, ToyPhase::P11] {
        out.push((format!("red {p}"), red(p, 0, 1)));
    }
    out
}

/// `P1 = 0` and `Q2 = 0`.
pub fn toy_product_state() -> ToyDiagram {
    green(ToyPhase::ZERO, 0, 1).tensor(&red(ToyPhase::ZERO, 0, 1))
}

/// `Q1 + Q2 = 0` and `P1 + P2 = 0`.
pub fn toy_correlated_state() -> ToyDiagram {
    green(ToyPhase::ZERO, 0, 2)
}

/// A toy operator that is zero: the green `01` state meets the red `10`
/// effect on the way from input to output.
pub fn toy_zero_operator() -> ToyDiagram {
    let block = green(ToyPhase::P01, 0, 1).compose(&red(ToyPhase::P10, 1, 0)).expect("scalar");
    green(ToyPhase::ZERO, 1, 1).tensor(&block)
}

/// Every named ZX diagram.
pub fn zx_corpus() -> Vec<(String, Diagram)> {
    let mut out = vec![
        ("cnot".to_string(), cnot()),
        ("cz_phase_gates".to_string(), cz_with_phase_gates()),
        ("cz_hadamards".to_string(), cz_with_hadamards()),
        ("bell_state".to_string(), bell_state()),
    ];
    for (name, a, b) in [("00", (false, false), (false, false)), ("01", (false, false), (false, true)), ("11", (false, true), (false, true)), ("0plus", (false, false), (true, false))] {
        out.push((format!("bell_overlap_{name}"), bell_overlap(a, b)));
        out.push((format!("bell_probability_{name}"), bell_probability(a, b)));
    }
    out
}

/// Every named toy diagram.
pub fn toy_corpus() -> Vec<(String, ToyDiagram)> {
    let mut out: Vec<(String, ToyDiagram)> =
        single_toy_bit_states().into_iter().map(|(n, d)| (format!("toy_state_{}", n.replace(' ', "_")), d)).collect();
    out.push(("toy_product_state".into(), toy_product_state()));
    out.push(("toy_correlated_state".into(), toy_correlated_state()));
    out.push(("toy_zero_operator".into(), toy_zero_operator()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingScalar;
    use crate::semantics::{interpret, ExactMatrix};
    use crate::toy::semantics::interpret_toy;

    fn cz_matrix() -> ExactMatrix {
        let mut m = ExactMatrix::identity(4);
        m.set(3, 3, RingScalar::from_int(-1));
        m
    }

    #[test]
    fn cz_decompositions_denote_cz() {
        assert_eq!(interpret(&cz_with_phase_gates()), cz_matrix());
        assert_eq!(interpret(&cz_with_hadamards()), cz_matrix());
    }

    #[test]
    fn normalized_effects() {
        let s = RingScalar::inv_sqrt2();
        let want = [(false, false, [RingScalar::one(), RingScalar::zero()]), (true, true, [s.clone(), -&s])];
        for (h, o, row) in want {
            let m = interpret(&basis_effect(h, o));
            assert_eq!(m.data, row.to_vec());
        }
    }

    #[test]
    fn toy_corpus_relations() {
        let mut seen = std::collections::BTreeSet::new();
        for (_, d) in single_toy_bit_states() {
            let pairs = interpret_toy(&d).pairs();
            assert_eq!(pairs.len(), 2);
            seen.insert(pairs);
        }
        assert_eq!(seen.len(), 6);
        assert!(interpret_toy(&toy_zero_operator()).is_empty());
    }
}
