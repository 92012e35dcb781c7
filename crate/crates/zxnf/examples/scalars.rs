//! The scalar normal form and its group structure.

use zxnf::diagram::{pair, star, Phase8};
use zxnf::interpret;
use zxnf::scalar_nf::{decompose_scalar_subdiagrams, nf_to_diagram, normalize_scalar, ring_to_nf, ScalarNF};

fn main() {
    let d = pair(Phase8::HALF_PI, Phase8::ZERO).tensor(&star()).tensor(&pair(Phase8::new(6), Phase8::PI));
    let (nf, nd) = normalize_scalar(&d).unwrap();
    println!("value {} has normal form {nf} drawn with {} nodes", interpret(&d).data[0], nd.node_count());
    let a = ScalarNF::new(3, -2);
    let b = ScalarNF::new(6, 5);
    println!("({a}) * ({b}) = {}", a.mul(&b));
    println!("inverse of {a} is {}", a.inverse().unwrap());
    let v = interpret(&nf_to_diagram(&a)).data[0].clone();
    println!("{a} renders to {v} and reads back as {}", ring_to_nf(&v).unwrap());
    let dec = decompose_scalar_subdiagrams(&d).unwrap();
    println!("decomposed into {} nodes", dec.node_count());
}
