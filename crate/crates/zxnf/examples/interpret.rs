//! Exact matrices of diagrams, including the odd reinterpretations of phases.

use zxnf::corpus::{bell_state, cz_with_hadamards};
use zxnf::diagram::{hadamard, z_spider, Phase8};
use zxnf::{interpret, interpret_j};

fn main() {
    println!("Bell state:\n{}", interpret(&bell_state()));
    println!("CZ:\n{}", interpret(&cz_with_hadamards()));
    println!("Hadamard:\n{}", interpret(&hadamard()));
    let t = z_spider(Phase8::new(1), 1, 1);
    for j in [1, 3, 5, 7] {
        println!("T under j={j}:\n{}", interpret_j(&t, j).unwrap());
    }
}
