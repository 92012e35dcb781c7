//! Writes every corpus diagram as a JSON file, by default into `data/`.

use std::fs;
use std::path::PathBuf;

use zxnf::corpus::{toy_corpus, zx_corpus};
use zxnf::format::{print_diagram, print_toy_diagram};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data").into()));
    fs::create_dir_all(&dir).unwrap();
    for (name, d) in zx_corpus() {
        fs::write(dir.join(format!("{name}.json")), print_diagram(&d) + "\n").unwrap();
    }
    for (name, d) in toy_corpus() {
        fs::write(dir.join(format!("{name}.json")), print_toy_diagram(&d) + "\n").unwrap();
    }
    println!("wrote {}", dir.display());
}
