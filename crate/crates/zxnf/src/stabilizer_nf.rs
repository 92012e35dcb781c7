//! Reduced GS-LC form, pair simplification and the equality decision for
//! stabilizer diagrams.
//!
//! The reduced form restricts every local operator to the set `R`: the four
//! green phases, and a green `+-pi/2` followed by a red `pi/2`. These six
//! meet each right coset of the red `pi/2` rotation exactly once, which is
//! what local complementation about a vertex walks through. Neighbouring
//! qubits never both carry a red node.

use std::collections::BTreeSet;
use std::fmt;

use crate::clifford::C1;
use crate::diagram::{Diagram, Phase8, ZxNode};
use crate::error::ZxError;
use crate::gslc::{diagram_to_gslc, GsLc};
use crate::ring::RingScalar;
use crate::scalar_nf::zero_nf_diagram;

/// The six reduced local operators. The first four are diagonal.
pub fn reduced_set() -> [C1; 6] {
    let red = |g| C1::find(&crate::clifford::word_mat(&[
        (crate::Colour::Green, Phase8::new(g)),
        (crate::Colour::Red, Phase8::HALF_PI),
    ]))
    .unwrap()
    .0;
    [
        C1::z(Phase8::ZERO),
        C1::z(Phase8::HALF_PI),
        C1::z(Phase8::PI),
        C1::z(Phase8::MINUS_HALF_PI),
        red(2),
        red(6),
    ]
}

pub fn in_reduced_set(c: C1) -> bool {
    reduced_set().contains(&c)
}

/// Whether the canonical word of `c` contains a red node.
pub fn has_red(c: C1) -> bool {
    !c.is_diagonal()
}

pub fn is_reduced(g: &GsLc) -> bool {
    let n = g.n();
    g.vops.iter().all(|&c| in_reduced_set(c))
        && (0..n).all(|u| (u + 1..n).all(|v| !(g.adj[u][v] && has_red(g.vops[u]) && has_red(g.vops[v]))))
}

fn reduce_vops(g: &mut GsLc) {
    let n = g.n();
    let mut guard = 0;
    while let Some(v) = (0..n).find(|&v| !in_reduced_set(g.vops[v])) {
        // right cosets of the red pi/2 rotation each meet R once
        g.local_complement(v).unwrap();
        guard += 1;
        assert!(guard <= 16 * n + 16, "vertex operator reduction did not settle");
    }
}

/// Brings a nonzero GS-LC state into reduced form.
pub fn reduce_to_rgslc(g: &GsLc) -> Result<GsLc, ZxError> {
    if g.is_zero() {
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
        for x in [u, v] {
            if !g.vops[x].is_diagonal() {
                g.fixpoint(x)?;
            }
        }
        debug_assert!(g.vops[u].is_diagonal() && g.vops[v].is_diagonal());
        reduce_vops(&mut g);
        guard += 1;
        assert!(guard <= n + 1, "adjacent red removal did not settle");
    }
    debug_assert!(is_reduced(&g));
    Ok(g)
}

/// Moves the red node of `p` onto its green neighbour `q`, keeping the
/// diagram reduced.
fn transfer_red(g: &mut GsLc, p: usize, q: usize) {
    let alpha = g.vops[q].diagonal_phase().expect("q carries a green phase");
    let half = alpha == Phase8::HALF_PI || alpha == Phase8::MINUS_HALF_PI;
    let sequences: [&dyn Fn(&mut GsLc); 2] = [
        &|g: &mut GsLc| {
            g.local_complement(q).unwrap();
            g.local_complement(p).unwrap();
        },
        &|g: &mut GsLc| g.pivot(p, q).unwrap(),
    ];
    let order = if half { [1, 0] } else { [0, 1] };
    for i in order {
        let mut h = g.clone();
        sequences[i](&mut h);
        for mask in 0..4 {
            let mut k = h.clone();
            if mask & 1 == 1 {
                k.fixpoint(p).unwrap();
            }
            if mask & 2 == 2 {
                k.fixpoint(q).unwrap();
            }
            if is_reduced(&k) && !has_red(k.vops[p]) && has_red(k.vops[q]) {
                *g = k;
                return;
            }
        }
    }
    unreachable!("one of the two transformations always applies");
}

/// Simplifies a pair of reduced forms so that red nodes are paired up
/// wherever an unpaired pair of qubits is adjacent.
pub fn simplify_pair(a: &GsLc, b: &GsLc) -> Result<(GsLc, GsLc), ZxError> {
    if a.n() != b.n() {
        return Err(ZxError::DimensionMismatch(format!("{} vs {} qubits", a.n(), b.n())));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let n = a.n();
    for _ in 0..=n {
        let only_a = |x: usize, a: &GsLc, b: &GsLc| has_red(a.vops[x]) && !has_red(b.vops[x]);
        let mut found = None;
        'search: for p in 0..n {
            if !only_a(p, &a, &b) {
                continue;
            }
            for q in 0..n {
                if only_a(q, &b, &a) && (a.adj[p][q] || b.adj[p][q]) {
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

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// `d1 = ratio * d2` with `ratio != 1`.
    ProportionalOnly(RingScalar),
    Unequal,
}

/// Decides equality of two stabilizer diagrams, exactly and up to scalar.
pub fn equal_stabilizer(d1: &Diagram, d2: &Diagram) -> Result<Verdict, ZxError> {
    let g1 = diagram_to_gslc(d1)?;
    let g2 = diagram_to_gslc(d2)?;
    if d1.n_inputs() != d2.n_inputs() || d1.n_outputs() != d2.n_outputs() {
        return Ok(Verdict::Unequal);
    }
    Ok(equal_gslc(&g1, &g2))
}

pub fn equal_gslc(g1: &GsLc, g2: &GsLc) -> Verdict {
    match (g1.is_zero(), g2.is_zero()) {
        (true, true) => return Verdict::Equal,
        (true, false) | (false, true) => return Verdict::Unequal,
        _ => {}
    }
    let r1 = reduce_to_rgslc(g1).unwrap();
    let r2 = reduce_to_rgslc(g2).unwrap();
    let (s1, s2) = simplify_pair(&r1, &r2).unwrap();
    if s1.adj != s2.adj || s1.vops != s2.vops {
        return Verdict::Unequal;
    }
    if s1.scalar == s2.scalar {
        Verdict::Equal
    } else {
        Verdict::ProportionalOnly(s1.scalar.checked_div(&s2.scalar).expect("stabilizer scalars divide"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerForm {
    GsLc,
    RGsLc,
}

/// Normalizes a stabilizer diagram; operators are returned operator-shaped.
pub fn normalize_stabilizer(d: &Diagram, form: StabilizerForm) -> Result<Diagram, ZxError> {
    let g = diagram_to_gslc(d)?;
    if g.is_zero() {
        return Ok(zero_nf_diagram(d.n_inputs(), d.n_outputs()));
    }
    let g = match form {
        StabilizerForm::GsLc => g,
        StabilizerForm::RGsLc => reduce_to_rgslc(&g)?,
    };
    Ok(g.to_diagram()?.unbend(d.n_inputs()))
}

/// The normalized graph state of an adjacency matrix as a diagram.
pub fn graph_state_diagram(adj: &[Vec<bool>]) -> Diagram {
    GsLc::graph_state(adj.to_vec()).to_diagram().expect("graph states are nonzero")
}

/// One single-qubit Clifford per wire, as a diagram of phase shifts.
pub fn local_layer_diagram(layer: &[C1]) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<_> = layer.iter().map(|_| d.add_input()).collect();
    let mut ends = ins;
    for (q, c) in layer.iter().enumerate() {
        for &(col, p) in c.word() {
            let v = d.add_node(ZxNode::spider(col, p));
            d.add_edge(ends[q], v);
            ends[q] = v;
        }
    }
    for e in ends {
        let o = d.add_output();
        d.add_edge(e, o);
    }
    d
}

/// A graph state with a local Clifford layer applied, as a diagram.
pub fn layered_graph_state(adj: &[Vec<bool>], layer: &[C1]) -> Diagram {
    graph_state_diagram(adj).compose(&local_layer_diagram(layer)).expect("layer matches the qubit count")
}

/// The graphs whose graph states equal `layer |adj>` up to a nonzero scalar,
/// for some layer in `layers`, decided on diagrams. A reduced form equals a
/// graph state with `Z_pi` shifts on some qubits exactly when its own local
/// operators are all `I` or `Z_pi` on the same graph, because pair
/// simplification never touches a side without red nodes. Every hit is
/// confirmed with [`equal_stabilizer`].
pub fn graphs_reached(adj: &[Vec<bool>], layers: impl IntoIterator<Item = Vec<C1>>, allow_pi: bool) -> BTreeSet<Vec<Vec<bool>>> {
    let zpi = C1::z(Phase8::PI);
    let mut out = BTreeSet::new();
    let base = graph_state_diagram(adj);
    for layer in layers {
        let d = base.compose(&local_layer_diagram(&layer)).expect("layer matches the qubit count");
        let g = reduce_to_rgslc(&diagram_to_gslc(&d).expect("stabilizer diagram")).expect("nonzero");
        let ok = g.vops.iter().all(|&c| c == C1::I || (allow_pi && c == zpi));
        if !ok {
            continue;
        }
        let target = layered_graph_state(&g.adj, &g.vops);
        let v = equal_stabilizer(&d, &target).expect("stabilizer diagrams");
        assert_ne!(v, Verdict::Unequal, "reduced form disagrees with the equality decision");
        out.insert(g.adj.clone());
    }
    out
}

/// Representatives of the single-qubit Cliffords modulo Paulis applied
/// after them: six elements, one per coset.
pub fn clifford_mod_pauli() -> Vec<C1> {
    let paulis = [C1::I, C1::x(Phase8::PI), C1::z(Phase8::PI), C1::x(Phase8::PI).mul(C1::z(Phase8::PI)).0];
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for c in C1::all() {
        if seen.contains(&c) {
            continue;
        }
        reps.push(c);
        for p in paulis {
            seen.insert(p.mul(c).0);
        }
    }
    reps
}

/// Every layer built from `alphabet`, one element per qubit.
pub fn all_layers(alphabet: &[C1], n: usize) -> Vec<Vec<C1>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|l| alphabet.iter().map(move |&c| [l.clone(), vec![c]].concat())).collect();
    }
    out
}

impl fmt::Display for GsLc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "zero on {} qubits", self.n());
        }
        writeln!(f, "qubits {}", self.n())?;
        for (v, row) in self.adj.iter().enumerate() {
            let bits: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{bits}  {}", self.vops[v])?;
        }
        writeln!(f, "scalar {}", self.scalar)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::*;
    use crate::random::{random_diagram, RandomSpec};
    use crate::semantics::interpret;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reduced_set_meets_every_coset_once() {
        let rx = C1::x(Phase8::MINUS_HALF_PI);
        for c in C1::all() {
            let mut hits = 0;
            let mut u = c;
            for _ in 0..4 {
                if in_reduced_set(u) {
                    hits += 1;
                }
                u = u.mul(rx).0;
            }
            assert_eq!(hits, 1, "{c}");
        }
    }

    #[test]
    fn single_hadamard_state() {
        let mut g = GsLc::plus_states(1);
        g.vops[0] = C1::hadamard();
        let r = reduce_to_rgslc(&g).unwrap();
        assert!(is_reduced(&r));
        assert_eq!(r.state_vector(), g.state_vector());
    }

    #[test]
    fn reduction_preserves_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for t in 0..300 {
            let d = random_diagram(&mut rng, &RandomSpec::stabilizer(t % 2, 1 + t % 4, 2 + t % 8));
            let g = diagram_to_gslc(&d).unwrap();
            if g.is_zero() {
                continue;
            }
            let r = reduce_to_rgslc(&g).unwrap();
            assert!(is_reduced(&r));
            assert_eq!(r.state_vector(), g.state_vector());
            assert_eq!(interpret(&r.to_diagram().unwrap()).data, g.state_vector());
        }
    }

    #[test]
    fn verdicts_match_the_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = [0usize; 3];
        for t in 0..600 {
            let spec = RandomSpec::stabilizer(t % 2, 1 + (t / 2) % 3, 1 + t % 6);
            let d1 = random_diagram(&mut rng, &spec);
            // pair with an unrelated diagram or a re-rendered normal form
            let d2 = match t % 3 {
                0 => random_diagram(&mut rng, &spec),
                1 => normalize_stabilizer(&d1, StabilizerForm::RGsLc).unwrap(),
                _ => normalize_stabilizer(&d1, StabilizerForm::GsLc).unwrap().tensor(&star()),
            };
            let (m1, m2) = (interpret(&d1), interpret(&d2));
            let v = equal_stabilizer(&d1, &d2).unwrap();
            match &v {
                Verdict::Equal => {
                    seen[0] += 1;
                    assert_eq!(m1, m2)
                }
                Verdict::ProportionalOnly(r) => {
                    seen[1] += 1;
                    assert_eq!(m1, m2.scale(r));
                    assert!(!r.is_one());
                }
                Verdict::Unequal => {
                    seen[2] += 1;
                    assert!(m1.proportional(&m2).is_none() && m1 != m2, "case {t}")
                }
            }
        }
        assert!(seen.iter().all(|&k| k > 20), "{seen:?}");
    }

    #[test]
    fn plus_and_zero_states_differ() {
        let plus = z_spider(Phase8::ZERO, 0, 1);
        let zero = x_spider(Phase8::ZERO, 0, 1);
        assert_eq!(equal_stabilizer(&plus, &zero).unwrap(), Verdict::Unequal);
        assert_eq!(equal_stabilizer(&plus, &plus).unwrap(), Verdict::Equal);
    }

    #[test]
    fn graph_state_is_stabilized() {
        // star graph on four vertices: X on the centre, Z on the leaves
        let mut adj = vec![vec![false; 4]; 4];
        for l in 1..4 {
            adj[0][l] = true;
            adj[l][0] = true;
        }
        let d = graph_state_diagram(&adj);
        let v = interpret(&d);
        let x = interpret(&x_spider(Phase8::PI, 1, 1));
        let z = interpret(&z_spider(Phase8::PI, 1, 1));
        let op = x.kron(&z).kron(&z).kron(&z);
        assert_eq!(op.mul(&v).unwrap(), v);
        // and it is normalised
        let norm: RingScalar = v.data.iter().fold(RingScalar::zero(), |acc, a| &acc + &(a * &a.conj()));
        assert!(norm.is_one());
    }
}

#[cfg(test)]
mod lc_tests {
    use super::*;
    use crate::check_matrix::{lc_orbit, AdjMatrix};

    #[test]
    fn local_cliffords_reach_exactly_the_lc_orbit() {
        let all: Vec<C1> = C1::all().collect();
        for g in AdjMatrix::all(2) {
            let reached = graphs_reached(&g.0, all_layers(&all, 2), false);
            let orbit: BTreeSet<Vec<Vec<bool>>> = lc_orbit(&g).unwrap().into_iter().map(|a| a.0).collect();
            assert_eq!(reached, orbit);
        }
        // modulo trailing Paulis: a layer reaches |G2> iff its coset
        // representative reaches G2 with Z_pi shifts
        let reps = clifford_mod_pauli();
        assert_eq!(reps.len(), 6);
        for g in AdjMatrix::all(3) {
            let reached = graphs_reached(&g.0, all_layers(&reps, 3), true);
            let orbit: BTreeSet<Vec<Vec<bool>>> = lc_orbit(&g).unwrap().into_iter().map(|a| a.0).collect();
            assert_eq!(reached, orbit);
        }
    }
}
