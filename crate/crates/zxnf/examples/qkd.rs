//! Outcome amplitudes and probabilities for measurements on a Bell state.

use zxnf::corpus::{bell_overlap, bell_probability};
use zxnf::interpret;

fn main() {
    let z0 = (false, false);
    let z1 = (false, true);
    let plus = (true, false);
    for (name, a, b) in [("<00|", z0, z0), ("<11|", z1, z1), ("<01|", z0, z1), ("<0+|", z0, plus)] {
        let amp = interpret(&bell_overlap(a, b)).data[0].clone();
        let p = interpret(&bell_probability(a, b)).data[0].clone();
        println!("{name} amplitude {amp} ~ {:?}, probability {p} ~ {:?}", amp.to_complex(), p.to_complex());
    }
}
