//! GS-LC and reduced GS-LC normal forms of a random stabilizer diagram.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zxnf::gslc::diagram_to_gslc;
use zxnf::interpret;
use zxnf::random::{random_diagram, RandomSpec};
use zxnf::stabilizer_nf::{normalize_stabilizer, reduce_to_rgslc, StabilizerForm};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = random_diagram(&mut rng, &RandomSpec::stabilizer(1, 2, 12));
    println!("input: {} nodes", d.node_count());
    let g = diagram_to_gslc(&d).unwrap();
    print!("GS-LC:\n{g}");
    if !g.is_zero() {
        print!("rGS-LC:\n{}", reduce_to_rgslc(&g).unwrap());
    }
    for form in [StabilizerForm::GsLc, StabilizerForm::RGsLc] {
        let nf = normalize_stabilizer(&d, form).unwrap();
        println!("{form:?}: {} nodes, same matrix: {}", nf.node_count(), interpret(&nf) == interpret(&d));
    }
}
