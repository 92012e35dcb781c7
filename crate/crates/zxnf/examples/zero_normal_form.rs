//! Zero diagrams normalize to the zero normal form of their type.

use zxnf::corpus::bell_overlap;
use zxnf::diagram::{identity, pair, Phase8};
use zxnf::scalar_nf::{is_zero_segment, zero_nf_diagram};
use zxnf::stabilizer_nf::{normalize_stabilizer, StabilizerForm};
use zxnf::{interpret, structurally_equal};

fn main() {
    let seg = pair(Phase8::HALF_PI, Phase8::MINUS_HALF_PI);
    println!("explicit zero segment: {}", is_zero_segment(&seg));
    let d = seg.tensor(&identity(2));
    let nf = normalize_stabilizer(&d, StabilizerForm::GsLc).unwrap();
    println!("zero operator normalizes to the zero form: {}", structurally_equal(&nf, &zero_nf_diagram(2, 2)));
    let impossible = bell_overlap((false, false), (false, true));
    println!("<01| on the Bell state is zero: {}", interpret(&impossible).is_zero());
}
