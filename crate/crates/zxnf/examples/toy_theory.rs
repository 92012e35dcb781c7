//! Spekkens' toy bit theory: relations, GS-LO forms, equality and the rule audit.

use zxnf::corpus::{single_toy_bit_states, toy_correlated_state, toy_product_state, toy_zero_operator};
use zxnf::toy::audit::audit_toy_rules;
use zxnf::toy::diagram::is_toy_zero_nf;
use zxnf::toy::gslo::{diagram_to_gslo, equal_toy, normalize_toy, reduce_to_rgslo, ToyForm};
use zxnf::toy::semantics::interpret_toy;

fn main() {
    for (name, d) in [("product", toy_product_state()), ("correlated", toy_correlated_state())] {
        let g = diagram_to_gslo(&d).unwrap();
        println!("{name} state {:?}", interpret_toy(&d).pairs());
        print!("GS-LO\n{g}rGS-LO\n{}", reduce_to_rgslo(&g).unwrap());
    }
    let states = single_toy_bit_states();
    for (a, da) in &states {
        let row: Vec<String> = states.iter().map(|(_, db)| format!("{:?}", equal_toy(da, db).unwrap())).collect();
        println!("{a:>9}: {}", row.join(" "));
    }
    let z = normalize_toy(&toy_zero_operator(), ToyForm::GsLo).unwrap();
    println!("zero operator reaches the zero form: {}", is_toy_zero_nf(&z));
    println!("toy rule audit passes: {}", audit_toy_rules(2).all_passed());
}
