//! The exhaustive rule soundness audit. Pass the arity bound as an argument.

use std::time::Instant;

use zxnf::audit::audit_rules;

fn main() {
    let max_arity = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let t = Instant::now();
    let r = audit_rules(max_arity);
    print!("{r}");
    println!("all passed: {} in {:.1?}", r.all_passed(), t.elapsed());
}
