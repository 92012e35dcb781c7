use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zxnf::audit::audit_rules;
use zxnf::check_matrix::{graph_check, is_valid, lc_orbit_equal, to_graph_form, AdjMatrix, CheckMatrix, Gf2Matrix};
use zxnf::clifford_t::{normalize_ct, CtWord};
use zxnf::diagram::Diagram;
use zxnf::format::{is_toy_document, parse_diagram, parse_toy_diagram, print_diagram, print_toy_diagram};
use zxnf::gslc::diagram_to_gslc;
use zxnf::scalar_nf::{normalize_scalar, zero_nf_diagram};
use zxnf::semantics::{interpret, interpret_j};
use zxnf::stabilizer_nf::{equal_stabilizer, reduce_to_rgslc, Verdict};
use zxnf::toy::audit::audit_toy_rules;
use zxnf::toy::diagram::{toy_zero_nf, ToyDiagram};
use zxnf::toy::gslo::{diagram_to_gslo, equal_toy, reduce_to_rgslo, ToyVerdict};
use zxnf::toy::semantics::interpret_toy;
use zxnf::ZxError;

#[derive(Parser)]
#[command(name = "zxnf", about = "Exact ZX-calculus and toy theory normal forms", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the exact matrix of a diagram, or the relation of a toy diagram.
    Interpret {
        file: String,
        /// Reinterpret phases with an odd multiplier.
        #[arg(long)]
        j: Option<i64>,
        /// Read the file as a toy diagram.
        #[arg(long)]
        toy: bool,
    },
    /// Print a normal form in the diagram format plus a summary line.
    Normalize {
        file: String,
        #[arg(long, value_enum)]
        form: Form,
    },
    /// Decide equality; exit 0 when equal, 1 otherwise.
    Equal {
        a: String,
        b: String,
        /// Also accept diagrams that differ by a nonzero scalar.
        #[arg(long)]
        up_to_scalar: bool,
        #[arg(long)]
        toy: bool,
    },
    /// Run the rule soundness audit and print one line per rule, direction and arity.
    CheckRules {
        #[arg(long, default_value_t = 2)]
        max_arity: usize,
        /// Audit the toy theory rules instead of the ZX rules.
        #[arg(long)]
        toy: bool,
    },
    /// Normalize a single-qubit Clifford+T word such as "H Z1 H Z2".
    CtNormalize { word: String },
    /// Binary check-matrix operations on files of bit rows.
    CheckMatrix {
        #[command(subcommand)]
        op: CmOp,
    },
}

#[derive(Subcommand)]
enum CmOp {
    /// Check that a 2n x n matrix (Z block over X block) is a valid stabilizer check matrix.
    Validate { file: String },
    /// Bring a check matrix to graph form and print the adjacency matrix.
    GraphForm { file: String },
    /// The check matrix of a graph state given by an adjacency matrix.
    Graph { file: String },
    /// Whether two graphs are related by local complementations; exit 0 if so.
    LcEqual { a: String, b: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Gslc,
    Rgslc,
    Scalar,
    Zero,
    Ct,
    Gslo,
    Rgslo,
}

fn read(path: &str) -> Result<String, ZxError> {
    fs::read_to_string(path).map_err(|e| ZxError::Parse(format!("{path}: {e}")))
}

fn zx(path: &str) -> Result<Diagram, ZxError> {
    parse_diagram(&read(path)?).map_err(|e| ZxError::Parse(format!("{path}: {e}")))
}

fn toy(path: &str) -> Result<ToyDiagram, ZxError> {
    parse_toy_diagram(&read(path)?).map_err(|e| ZxError::Parse(format!("{path}: {e}")))
}

fn wants_toy(path: &str, flag: bool) -> Result<bool, ZxError> {
    Ok(flag || is_toy_document(&read(path)?)?)
}

fn bits(path: &str) -> Result<Gf2Matrix, ZxError> {
    read(path)?.parse()
}

fn print_pair(state: String, op: String) {
    println!("state {state}");
    println!("operator {op}");
}

fn run(cmd: Cmd) -> Result<bool, ZxError> {
    match cmd {
        Cmd::Interpret { file, j, toy: t } => {
            if wants_toy(&file, t)? {
                let r = interpret_toy(&toy(&file)?);
                println!("relation {}x{}", r.rows(), r.cols());
                print!("{r}");
                println!("pairs {:?}", r.pairs());
                return Ok(true);
            }
            let d = zx(&file)?;
            let m = match j {
                Some(j) => interpret_j(&d, j)?,
                None => interpret(&d),
            };
            println!("matrix {}x{}", m.rows, m.cols);
            print!("{m}");
            if m.rows == 1 && m.cols == 1 {
                println!("modulus squared {}", m.get(0, 0).norm_sq());
            }
            Ok(true)
        }
        Cmd::Normalize { file, form } => normalize(&file, form),
        Cmd::Equal { a, b, up_to_scalar, toy: t } => {
            if wants_toy(&a, t)? || wants_toy(&b, t)? {
                let v = equal_toy(&toy(&a)?, &toy(&b)?)?;
                println!("verdict {v:?}");
                return Ok(v == ToyVerdict::Equal);
            }
            let v = equal_stabilizer(&zx(&a)?, &zx(&b)?)?;
            match &v {
                Verdict::Equal => println!("verdict Equal ratio 1"),
                Verdict::ProportionalOnly(r) => println!("verdict ProportionalOnly ratio {r}"),
                Verdict::Unequal => println!("verdict Unequal"),
            }
            Ok(matches!(v, Verdict::Equal) || (up_to_scalar && matches!(v, Verdict::ProportionalOnly(_))))
        }
        Cmd::CheckRules { max_arity, toy: t } => {
            if t {
                let r = audit_toy_rules(max_arity);
                print!("{r}");
                return Ok(r.all_passed());
            }
            let r = audit_rules(max_arity);
            print!("{r}");
            Ok(r.all_passed())
        }
        Cmd::CtNormalize { word } => {
            let w: CtWord = word.parse()?;
            let nf = normalize_ct(&w);
            println!("normal form {nf}");
            println!("word {}", nf.to_word());
            println!("t-count {}", nf.t_count());
            Ok(true)
        }
        Cmd::CheckMatrix { op } => check_matrix(op),
    }
}

fn normalize(file: &str, form: Form) -> Result<bool, ZxError> {
    match form {
        Form::Gslo | Form::Rgslo => {
            let d = toy(file)?;
            let g = diagram_to_gslo(&d)?;
            if g.zero {
                let z = toy_zero_nf(d.n_inputs(), d.n_outputs());
                print_pair(print_toy_diagram(&toy_zero_nf(0, g.n())), print_toy_diagram(&z));
                println!("summary zero toy_bits={}", g.n());
                return Ok(true);
            }
            let g = if matches!(form, Form::Rgslo) { reduce_to_rgslo(&g)? } else { g };
            let state = g.to_diagram();
            print_pair(print_toy_diagram(&state), print_toy_diagram(&state.unbend(d.n_inputs())));
            print!("{g}");
            let edges = g.adj.iter().flatten().filter(|x| **x).count() / 2;
            println!("summary toy_bits={} edges={edges}", g.n());
            Ok(true)
        }
        Form::Gslc | Form::Rgslc => {
            let d = zx(file)?;
            let g = diagram_to_gslc(&d)?;
            if g.is_zero() {
                let z = zero_nf_diagram(d.n_inputs(), d.n_outputs());
                print_pair(print_diagram(&zero_nf_diagram(0, g.n())), print_diagram(&z));
                println!("summary zero qubits={}", g.n());
                return Ok(true);
            }
            let g = if matches!(form, Form::Rgslc) { reduce_to_rgslc(&g)? } else { g };
            let state = g.to_diagram()?;
            print_pair(print_diagram(&state), print_diagram(&state.unbend(d.n_inputs())));
            print!("{g}");
            println!("summary qubits={} edges={}", g.n(), g.edge_count());
            Ok(true)
        }
        Form::Scalar => {
            let (nf, nd) = normalize_scalar(&zx(file)?)?;
            println!("diagram {}", print_diagram(&nd));
            println!("summary scalar {nf}");
            Ok(true)
        }
        Form::Zero => {
            let d = zx(file)?;
            if !interpret(&d).is_zero() {
                println!("summary not a zero diagram");
                return Ok(false);
            }
            println!("diagram {}", print_diagram(&zero_nf_diagram(d.n_inputs(), d.n_outputs())));
            println!("summary zero inputs={} outputs={}", d.n_inputs(), d.n_outputs());
            Ok(true)
        }
        Form::Ct => {
            let w = CtWord::from_diagram(&zx(file)?)?;
            let nf = normalize_ct(&w);
            println!("diagram {}", print_diagram(&nf.to_word().to_diagram()));
            println!("summary {nf} t-count={}", nf.t_count());
            Ok(true)
        }
    }
}

fn check_matrix(op: CmOp) -> Result<bool, ZxError> {
    match op {
        CmOp::Validate { file } => {
            let s = CheckMatrix::new(bits(&file)?)?;
            let ok = is_valid(&s);
            println!("valid {ok}");
            Ok(ok)
        }
        CmOp::GraphForm { file } => {
            let (adj, q) = to_graph_form(&CheckMatrix::new(bits(&file)?)?)?;
            println!("adjacency");
            print!("{}", Gf2Matrix::from_bits(adj.0)?);
            println!("local operator");
            print!("{q}");
            Ok(true)
        }
        CmOp::Graph { file } => {
            let s = graph_check(&AdjMatrix(bits(&file)?.bits));
            print!("{}", s.bits);
            Ok(true)
        }
        CmOp::LcEqual { a, b } => {
            let eq = lc_orbit_equal(&AdjMatrix(bits(&a)?.bits), &AdjMatrix(bits(&b)?.bits))?;
            println!("lc-equivalent {eq}");
            Ok(eq)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
