//! Binary check matrices: the Bell state reduces to a single edge, and
//! local complementation orbits of small graphs.

use zxnf::check_matrix::{is_valid, lc_orbit, lc_orbit_equal, to_graph_form, AdjMatrix, CheckMatrix};

fn main() {
    for rows in ["10\n10\n01\n01", "11\n11\n01\n01"] {
        let s = CheckMatrix::new(rows.parse().unwrap()).unwrap();
        let (adj, q) = to_graph_form(&s).unwrap();
        println!("valid {} graph {:?}\nlocal operator\n{q}", is_valid(&s), adj.0);
    }
    let star = AdjMatrix::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
    let complete = AdjMatrix::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let path = AdjMatrix::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    println!("star orbit size {}", lc_orbit(&star).unwrap().len());
    println!("star ~ complete: {}", lc_orbit_equal(&star, &complete).unwrap());
    println!("star ~ path: {}", lc_orbit_equal(&star, &path).unwrap());
}
