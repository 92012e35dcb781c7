//! Finding and applying rule redexes, and undoing an application exactly.

use zxnf::corpus::cz_with_phase_gates;
use zxnf::interpret;
use zxnf::rewrite::{apply_with_inverse, find_redexes, RuleId};
use zxnf::structurally_equal;

fn main() {
    let d = cz_with_phase_gates();
    let m = interpret(&d);
    for rule in RuleId::ALL {
        let rs = find_redexes(&d, rule);
        let Some(r) = rs.first() else { continue };
        let (out, inv) = apply_with_inverse(&d, r).unwrap();
        let (back, _) = apply_with_inverse(&out, &inv).unwrap();
        println!(
            "{rule:?}: {} redexes, first gives {} nodes, sound={}, undone={}",
            rs.len(),
            out.node_count(),
            interpret(&out) == m,
            structurally_equal(&back, &d)
        );
    }
}
