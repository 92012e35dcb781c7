//! JSON file format for ZX and toy diagrams.
//!
//! A document has `nodes` (records `{id, kind, phase}`), `edges` (id pairs,
//! duplicates for parallel edges), and ordered `inputs` and `outputs` lists
//! of boundary ids. ZX kinds are `Z`, `X`, `H` and `STAR` with an integer
//! phase `0..8` on spiders; toy kinds are `Z`, `X` and `HS` with a two-bit
//! string phase such as `"01"`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagram::{Diagram, Phase8, ZxNode};
use crate::error::ZxError;
use crate::graph::{NodeId, NodeLabel, OpenGraph};
use crate::toy::diagram::{ToyDiagram, ToyNode, ToyPhase};

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct NodeRecord {
    id: NodeId,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase: Option<Value>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    nodes: Vec<NodeRecord>,
    edges: Vec<(NodeId, NodeId)>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
}

fn read_file(s: &str) -> Result<DiagramFile, ZxError> {
    serde_json::from_str(s).map_err(|e| ZxError::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
}

fn field_error(r: &NodeRecord, msg: &str) -> ZxError {
    ZxError::Parse(format!("node {}: {msg}", r.id))
}

fn build<K: NodeLabel>(
    f: DiagramFile,
    label: impl Fn(&NodeRecord) -> Result<K, ZxError>,
    two_legged: impl Fn(&K) -> bool,
) -> Result<OpenGraph<K>, ZxError> {
    let nodes = f.nodes.iter().map(|r| Ok((r.id, label(r)?))).collect::<Result<Vec<_>, ZxError>>()?;
    let n = nodes.len();
    let g = OpenGraph::from_parts(nodes, f.edges, f.inputs, f.outputs)?;
    if g.nodes().len() != n {
        return Err(ZxError::Parse("node ids must be distinct".into()));
    }
    for (&v, k) in g.nodes() {
        if two_legged(k) && (g.degree(v) != 2 || g.self_loops(v) != 0) {
            return Err(ZxError::InvalidDiagram(format!("node {v} must have exactly two legs")));
        }
    }
    Ok(g)
}

fn write<K: NodeLabel>(g: &OpenGraph<K>, record: impl Fn(NodeId, &K) -> NodeRecord) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort();
    let f = DiagramFile {
        nodes: g.nodes().iter().map(|(&v, k)| record(v, k)).collect(),
        edges,
        inputs: g.inputs().to_vec(),
        outputs: g.outputs().to_vec(),
    };
    serde_json::to_string(&f).expect("diagram records serialize")
}

pub fn parse_diagram(s: &str) -> Result<Diagram, ZxError> {
    let label = |r: &NodeRecord| {
        let phase = || match &r.phase {
            Some(Value::Number(n)) => match n.as_u64() {
                Some(k) if k < 8 => Ok(Phase8::new(k as i64)),
                _ => Err(field_error(r, "phase must be an integer in 0..8")),
            },
            _ => Err(field_error(r, "spiders need an integer phase")),
        };
        let none = || if r.phase.is_some() { Err(field_error(r, "this kind takes no phase")) } else { Ok(()) };
        match r.kind.as_str() {
            "Z" => Ok(ZxNode::Z(phase()?)),
            "X" => Ok(ZxNode::X(phase()?)),
            "H" => none().map(|_| ZxNode::H),
            "STAR" => none().map(|_| ZxNode::Star),
            k => Err(field_error(r, &format!("unknown kind {k:?}"))),
        }
    };
    build(read_file(s)?, label, |k| *k == ZxNode::H)
}

pub fn print_diagram(d: &Diagram) -> String {
    write(d, |id, k| {
        let (kind, phase) = match *k {
            ZxNode::Z(p) => ("Z", Some(p)),
            ZxNode::X(p) => ("X", Some(p)),
            ZxNode::H => ("H", None),
            ZxNode::Star => ("STAR", None),
        };
        NodeRecord { id, kind: kind.into(), phase: phase.map(|p| Value::from(p.k())) }
    })
}

pub fn parse_toy_diagram(s: &str) -> Result<ToyDiagram, ZxError> {
    let label = |r: &NodeRecord| {
        let phase = || match &r.phase {
            Some(Value::String(p)) => p.parse::<ToyPhase>().map_err(|e| field_error(r, &e.to_string())),
            _ => Err(field_error(r, "toy spiders need a two-bit string phase")),
        };
        match r.kind.as_str() {
            "Z" => Ok(ToyNode::Z(phase()?)),
            "X" => Ok(ToyNode::X(phase()?)),
            "HS" if r.phase.is_none() => Ok(ToyNode::HS),
            "HS" => Err(field_error(r, "HS takes no phase")),
            k => Err(field_error(r, &format!("unknown toy kind {k:?}"))),
        }
    };
    build(read_file(s)?, label, |k| *k == ToyNode::HS)
}

pub fn print_toy_diagram(d: &ToyDiagram) -> String {
    write(d, |id, k| {
        let (kind, phase) = match *k {
            ToyNode::Z(p) => ("Z", Some(p)),
            ToyNode::X(p) => ("X", Some(p)),
            ToyNode::HS => ("HS", None),
        };
        NodeRecord { id, kind: kind.into(), phase: phase.map(|p| Value::from(p.to_string())) }
    })
}

/// Whether a document is a toy diagram: it has an `HS` node or a string
/// phase.
pub fn is_toy_document(s: &str) -> Result<bool, ZxError> {
    let f = read_file(s)?;
    Ok(f.nodes.iter().any(|r| r.kind == "HS" || matches!(r.phase, Some(Value::String(_)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::structurally_equal;
    use crate::random::{random_diagram, RandomSpec};
    use crate::toy::diagram::random_toy_diagram;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in 0..50 {
            let d = random_diagram(&mut rng, &RandomSpec::stabilizer(t % 3, t % 2, 1 + t % 7));
            let s = print_diagram(&d);
            assert!(structurally_equal(&parse_diagram(&s).unwrap(), &d));
            let td = random_toy_diagram(&mut rng, t % 2, t % 3, 1 + t % 5);
            let s = print_toy_diagram(&td);
            assert!(structurally_equal(&parse_toy_diagram(&s).unwrap(), &td));
        }
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let e = parse_diagram(r#"{"nodes":[{"id":0,"kind":"Z","phase":9}],"edges":[],"inputs":[],"outputs":[]}"#);
        assert!(matches!(e, Err(ZxError::Parse(m)) if m.contains("node 0")));
        let e = parse_diagram("{\n\"nodes\": [,]}");
        assert!(matches!(e, Err(ZxError::Parse(m)) if m.starts_with("line 2")));
        let e = parse_diagram(r#"{"nodes":[{"id":0,"kind":"H"}],"edges":[[0,0]],"inputs":[],"outputs":[]}"#);
        assert!(matches!(e, Err(ZxError::InvalidDiagram(_))));
        let e = parse_toy_diagram(r#"{"nodes":[{"id":0,"kind":"Z","phase":"2"}],"edges":[],"inputs":[],"outputs":[]}"#);
        assert!(matches!(e, Err(ZxError::Parse(_))));
    }

    #[test]
    fn detects_toy_documents() {
        let toy = r#"{"nodes":[{"id":0,"kind":"Z","phase":"01"}],"edges":[],"inputs":[],"outputs":[]}"#;
        assert!(is_toy_document(toy).unwrap());
        assert!(!is_toy_document(&print_diagram(&crate::diagram::hadamard())).unwrap());
    }
}
