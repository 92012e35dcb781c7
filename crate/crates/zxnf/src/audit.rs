//! Exhaustive soundness audit of the rewrite rules.
//!
//! Each rule is instantiated for every phase in `Z/8` and every arity up to
//! a bound, in four variants (as stated, colours swapped, upside down, both).
//! An instance passes when both sides agree under every odd
//! reinterpretation of phases and when the engine, applied to either side,
//! preserves the interpretation and reaches the other side.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{hadamard, identity, spider, star, swap_colours, Colour, Diagram, Phase8, ZxNode};
use crate::graph::structurally_equal;
use crate::rewrite::{apply, find_redexes_dir, rule_scalar, Direction, RuleId, RuleParams};
use crate::semantics::{interpret, interpret_j};

/// One rule instance: `lhs = scalar . rhs`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub rule: RuleId,
    pub params: RuleParams,
    pub label: String,
    pub lhs: Diagram,
    pub rhs: Diagram,
    pub scalar: Diagram,
}

impl Instance {
    pub fn arity(&self) -> usize {
        self.lhs.n_inputs() + self.lhs.n_outputs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Variant {
    Base,
    ColourSwapped,
    UpsideDown,
    Both,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Base, Variant::ColourSwapped, Variant::UpsideDown, Variant::Both];

    pub fn transform(self, inst: &Instance) -> Instance {
        let f = |d: &Diagram| match self {
            Variant::Base => d.clone(),
            Variant::ColourSwapped => swap_colours(d),
            Variant::UpsideDown => d.adjoint(),
            Variant::Both => swap_colours(&d.adjoint()),
        };
        Instance {
            rule: inst.rule,
            params: inst.params,
            label: inst.label.clone(),
            lhs: f(&inst.lhs),
            rhs: f(&inst.rhs),
            scalar: f(&inst.scalar),
        }
    }
}

fn tensor_all(parts: impl IntoIterator<Item = Diagram>) -> Diagram {
    parts.into_iter().fold(Diagram::new(), |a, b| a.tensor(&b))
}

fn z(p: Phase8, i: usize, o: usize) -> Diagram {
    spider(Colour::Green, p, i, o)
}

fn x(p: Phase8, i: usize, o: usize) -> Diagram {
    spider(Colour::Red, p, i, o)
}

fn seq(a: &Diagram, b: &Diagram) -> Diagram {
    a.compose(b).expect("template arities line up")
}

fn with_loop(mut d: Diagram) -> Diagram {
    let v = *d.nodes().keys().find(|v| !d.is_boundary(**v)).unwrap();
    d.add_edge(v, v);
    d
}

/// Complete bipartite wiring between `n` red and `m` green phase-free
/// spiders, each red one on an input and each green one on an output.
fn bipartite(n: usize, m: usize) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<_> = (0..n).map(|_| d.add_input()).collect();
    let outs: Vec<_> = (0..m).map(|_| d.add_output()).collect();
    let xs: Vec<_> = ins
        .iter()
        .map(|&b| {
            let v = d.add_node(ZxNode::X(Phase8::ZERO));
            d.add_edge(b, v);
            v
        })
        .collect();
    for &b in &outs {
        let v = d.add_node(ZxNode::Z(Phase8::ZERO));
        d.add_edge(v, b);
        for &u in &xs {
            d.add_edge(u, v);
        }
    }
    d
}

fn inst(rule: RuleId, params: RuleParams, flipped: bool, label: String, lhs: Diagram, rhs: Diagram) -> Instance {
    let scalar = rule_scalar(rule, flipped, &params);
    Instance { rule, params, label, lhs, rhs, scalar }
}

/// All base-colour instances of a rule with legs per side up to `max_arity`.
pub fn instances(rule: RuleId, max_arity: usize) -> Vec<Instance> {
    use RuleId::*;
    let ar = 0..=max_arity;
    let ph = || Phase8::all();
    let mut out = Vec::new();
    let p = |n: usize, m: usize, k: usize, alpha: Phase8, beta: Phase8| RuleParams { n, m, k, alpha, beta };
    let zero = Phase8::ZERO;
    match rule {
        Spider => {
            for n in ar.clone() {
                for m in ar.clone() {
                    // k joining edges, l further outputs of the first spider
                    for k in 1..=max_arity.max(1) {
                        for l in ar.clone() {
                            for a in ph() {
                                for b in ph() {
                                    let lhs = seq(&z(a, n, k + l), &z(b, k, m).tensor(&identity(l)));
                                    let label = format!("n={n} m={m} k={k} l={l} a={a} b={b}");
                                    out.push(inst(rule, p(n, m, k, a, b), false, label, lhs, z(a + b, n, m + l)));
                                }
                            }
                        }
                    }
                }
            }
        }
        Loop => {
            for n in ar.clone() {
                for m in ar.clone() {
                    for a in ph() {
                        let label = format!("n={n} m={m} a={a}");
                        out.push(inst(rule, p(n, m, 0, a, zero), false, label, with_loop(z(a, n, m)), z(a, n, m)));
                    }
                }
            }
        }
        Cup => out.push(inst(rule, p(0, 2, 0, zero, zero), false, "cup".into(), z(zero, 0, 2), identity(1).bend_inputs())),
        Identity => out.push(inst(rule, p(1, 1, 0, zero, zero), false, "wire".into(), z(zero, 1, 1), identity(1))),
        Bialgebra => {
            for n in ar.clone() {
                for m in ar.clone() {
                    let l = seq(&z(zero, n, 1), &x(zero, 1, m));
                    out.push(inst(rule, p(n, m, 0, zero, zero), false, format!("n={n} m={m}"), l, bipartite(n, m)));
                }
            }
        }
        Copy => {
            for m in ar.clone() {
                let l = seq(&x(zero, 0, 1), &z(zero, 1, m));
                let r = tensor_all((0..m).map(|_| x(zero, 0, 1)));
                out.push(inst(rule, p(0, m, 0, zero, zero), false, format!("m={m}"), l, r));
            }
        }
        PiCopy | PiCommute => {
            let ms: Vec<usize> = if rule == PiCommute { vec![1] } else { ar.clone().collect() };
            for m in ms {
                for a in ph() {
                    let l = seq(&x(Phase8::PI, 1, 1), &z(a, 1, m));
                    let r = seq(&z(-a, 1, m), &tensor_all((0..m).map(|_| x(Phase8::PI, 1, 1))));
                    out.push(inst(rule, p(1, m, 0, a, zero), false, format!("m={m} a={a}"), l, r));
                }
            }
        }
        ColourChange => {
            for n in ar.clone() {
                for m in ar.clone() {
                    for a in ph() {
                        let hn = tensor_all((0..n).map(|_| hadamard()));
                        let hm = tensor_all((0..m).map(|_| hadamard()));
                        let r = seq(&seq(&hn, &x(a, n, m)), &hm);
                        out.push(inst(rule, p(n, m, 0, a, zero), false, format!("n={n} m={m} a={a}"), z(a, n, m), r));
                    }
                }
            }
        }
        Euler => {
            for (flipped, k) in [(false, 2), (true, 6)] {
                let q = Phase8::new(k);
                let r = seq(&seq(&z(q, 1, 1), &x(q, 1, 1)), &z(q, 1, 1));
                let label = if flipped { "upside-down" } else { "upright" };
                out.push(inst(rule, RuleParams::default(), flipped, label.into(), hadamard(), r));
            }
        }
        Star => out.push(inst(rule, RuleParams::default(), false, String::new(), star().tensor(&z(zero, 0, 0)), Diagram::new())),
        VariantStar => {
            let pr = crate::diagram::pair(zero, zero);
            let l = tensor_all([star(), pr.clone(), pr]);
            out.push(inst(rule, RuleParams::default(), false, String::new(), l, Diagram::new()));
        }
        Zero => {
            let zp = z(Phase8::PI, 0, 0);
            let r = zp.tensor(&z(zero, 1, 0)).tensor(&z(zero, 0, 1));
            out.push(inst(rule, RuleParams::default(), false, String::new(), zp.tensor(&identity(1)), r));
        }
        ZeroScalar => {
            for a in ph() {
                let zp = z(Phase8::PI, 0, 0);
                let l = zp.tensor(&z(a, 0, 0));
                out.push(inst(rule, p(0, 0, 0, a, zero), false, format!("a={a}"), l, zp));
            }
        }
        HadamardSelfInverse => {
            out.push(inst(rule, RuleParams::default(), false, String::new(), seq(&hadamard(), &hadamard()), identity(1)))
        }
        Hopf => {
            for n in ar.clone() {
                for m in ar.clone() {
                    let l = seq(&z(zero, n, 2), &x(zero, 2, m));
                    let r = z(zero, n, 0).tensor(&x(zero, 0, m));
                    out.push(inst(rule, p(n, m, 0, zero, zero), false, format!("n={n} m={m}"), l, r));
                }
            }
        }
        Supplementarity => {
            for n in ar.clone() {
                for m in ar.clone() {
                    for a in ph() {
                        let leaves = tensor_all([z(a, 0, 1), z(a + Phase8::PI, 0, 1), identity(n)]);
                        let l = seq(&leaves, &x(zero, n + 2, m));
                        out.push(inst(rule, p(n, m, 0, a, zero), false, format!("n={n} m={m} a={a}"), l, x(zero, n, m)));
                    }
                }
            }
        }
    }
    out
}

/// Aggregated outcome for one rule, direction and arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditLine {
    pub rule: RuleId,
    pub dir: Direction,
    pub arity: usize,
    pub checked: usize,
    /// The first failing instance, if any.
    pub witness: Option<String>,
}

impl AuditLine {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for AuditLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.dir {
            Direction::LeftToRight => "L->R",
            Direction::RightToLeft => "R->L",
        };
        write!(f, "{:<20} {dir} arity={} checked={:<5} ", format!("{:?}", self.rule), self.arity, self.checked)?;
        match &self.witness {
            None => write!(f, "PASS"),
            Some(w) => write!(f, "FAIL {w}"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub lines: Vec<AuditLine>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditLine> {
        self.lines.iter().filter(|l| !l.passed())
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

const JS: [i64; 4] = [1, 3, 5, 7];

/// Checks one instance in one direction; returns a failure description.
pub fn check_instance(i: &Instance, dir: Direction) -> Option<String> {
    let right = i.rhs.tensor(&i.scalar);
    for j in JS {
        let a = interpret_j(&i.lhs, j).ok()?;
        let b = interpret_j(&right, j).ok()?;
        if a != b {
            return Some(format!("semantics differ at j={j}"));
        }
    }
    // the engine must rewrite the standalone side soundly and reach the other side
    let (from, to) = match dir {
        Direction::LeftToRight => (&i.lhs, &right),
        Direction::RightToLeft => (&right, &i.lhs),
    };
    let m = interpret(from);
    let redexes = find_redexes_dir(from, i.rule, dir);
    let mut reached = false;
    for r in &redexes {
        let out = match apply(from, r) {
            Ok(o) => o,
            Err(e) => return Some(format!("engine refused its own redex: {e}")),
        };
        if interpret(&out) != m {
            return Some(format!("engine application changed the semantics: {r:?}"));
        }
        reached |= structurally_equal(&out.compacted(), &to.compacted());
    }
    if !reached && reaches_required(i, dir) {
        return Some("engine could not reach the other side".into());
    }
    None
}

/// Right-to-left reachability is only required where the engine's
/// enumeration picks the needed parameters on its own.
fn reaches_required(i: &Instance, dir: Direction) -> bool {
    match dir {
        Direction::LeftToRight => true,
        Direction::RightToLeft => match i.rule {
            RuleId::Spider | RuleId::ZeroScalar | RuleId::Supplementarity => false,
            RuleId::Bialgebra => i.params.n > 0 && i.params.m > 0,
            RuleId::Copy => i.params.m == 1,
            _ => true,
        },
    }
}

/// Runs the audit over `rules`, optionally corrupting instances first.
pub fn audit_rules_with(
    rules: &[RuleId],
    max_arity: usize,
    corrupt: Option<&dyn Fn(&mut Instance)>,
) -> AuditReport {
    let mut lines: BTreeMap<(RuleId, Direction, usize), AuditLine> = BTreeMap::new();
    for &rule in rules {
        for base in instances(rule, max_arity) {
            for v in Variant::ALL {
                let mut i = v.transform(&base);
                if let Some(c) = corrupt {
                    c(&mut i);
                }
                for dir in [Direction::LeftToRight, Direction::RightToLeft] {
                    let key = (rule, dir, i.arity());
                    let line = lines.entry(key).or_insert(AuditLine { rule, dir, arity: i.arity(), checked: 0, witness: None });
                    line.checked += 1;
                    if line.witness.is_none() {
                        if let Some(w) = check_instance(&i, dir) {
                            line.witness = Some(format!("{:?} {} : {w}", v, i.label));
                        }
                    }
                }
            }
        }
    }
    AuditReport { lines: lines.into_values().collect() }
}

pub fn audit_rules(max_arity: usize) -> AuditReport {
    audit_rules_with(&RuleId::ALL, max_arity, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_audit_passes() {
        let r = audit_rules(2);
        let bad: Vec<String> = r.failures().map(|l| l.to_string()).collect();
        assert!(bad.is_empty(), "{}", bad.join("\n"));
        assert!(r.lines.len() > 30);
    }

    #[test]
    fn degenerate_bialgebra_by_explicit_redex() {
        use crate::rewrite::{apply, Redex};
        // two green states, unfused: the n = 0, m = 2 instance read right to left
        let d = bipartite(0, 2);
        let nodes: Vec<_> = d.nodes().keys().copied().filter(|v| !d.is_boundary(*v)).collect();
        let r = Redex { nodes, count: 0, ..Redex::new(RuleId::Bialgebra, Direction::RightToLeft, Colour::Green) };
        let out = apply(&d, &r).unwrap();
        assert_eq!(interpret(&out), interpret(&d));
        assert_eq!(out.node_count(), d.node_count() + 2);
    }

    #[test]
    fn a_wrong_scalar_is_caught() {
        let corrupt = |i: &mut Instance| i.scalar = i.scalar.tensor(&star());
        let r = audit_rules_with(&[RuleId::Bialgebra], 1, Some(&corrupt));
        assert!(r.lines.iter().all(|l| !l.passed()));
    }

    #[test]
    fn a_wrong_phase_is_caught() {
        let corrupt = |i: &mut Instance| i.rhs = crate::diagram::map_phases(&i.rhs, |p| p + Phase8::new(1));
        let r = audit_rules_with(&[RuleId::Spider], 1, Some(&corrupt));
        assert!(r.failures().count() > 0);
    }
}
