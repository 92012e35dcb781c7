//! Single-qubit Clifford+T normal forms. Pass a word such as "H Z1 H Z3".

use zxnf::clifford_t::{ct_equal, is_identity_witness, normalize_ct, CtWord};

fn main() {
    let w: CtWord = std::env::args().nth(1).unwrap_or("H Z1 H Z1 H Z2 X1 H Z1".into()).parse().unwrap();
    let nf = normalize_ct(&w);
    println!("word {w}");
    println!("normal form {nf}");
    println!("t-count {}", nf.t_count());
    println!("equal to its normal form word: {}", ct_equal(&w, &nf.to_word()));
    println!("identity certificate fires: {}", is_identity_witness(&nf));
}
