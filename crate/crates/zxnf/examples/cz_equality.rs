//! Two decompositions of controlled-Z, one with phase gates and one with
//! Hadamards, are decided equal.

use zxnf::corpus::{cz_with_hadamards, cz_with_phase_gates};
use zxnf::gslc::diagram_to_gslc;
use zxnf::interpret;
use zxnf::stabilizer_nf::{equal_stabilizer, reduce_to_rgslc};

fn main() {
    let a = cz_with_phase_gates();
    let b = cz_with_hadamards();
    for (name, d) in [("phase gates", &a), ("hadamards", &b)] {
        print!("{name}, rGS-LC of the bent state:\n{}", reduce_to_rgslc(&diagram_to_gslc(d).unwrap()).unwrap());
    }
    println!("verdict: {:?}", equal_stabilizer(&a, &b).unwrap());
    println!("oracle ratio: {:?}", interpret(&a).proportional(&interpret(&b)).map(|r| r.to_string()));
}
