//! Exercise the brute-force engine: classical models, minimal models,
//! answer sets, and the reduct they are defined through.
//!
//! ```sh
//! cargo run -p sseq --example reference_engine
//! ```

use sseq::parse::parse_program;
use sseq::solver::{gl_reduct, RefSolver};

fn main() {
    let solver = RefSolver::default();

    // a coherent program: disjunction picks a branch, the constraint kills one
    let p = parse_program(include_str!("programs/choice.lp")).expect("fixture parses");
    println!("program:");
    println!("  a | b.  c :- a.  :- b.");

    let classical = solver.classical_models(&p).expect("within guard");
    println!("classical models ({}):", classical.len());
    for m in &classical {
        println!("  {}", m.pretty(&p.sig));
    }

    let minimal = solver.minimal_models(&p).expect("within guard");
    println!("minimal models ({}):", minimal.len());
    for m in &minimal {
        println!("  {}", m.pretty(&p.sig));
    }

    let answer_sets = solver.answer_sets(&p).expect("within guard");
    println!("answer sets ({}):", answer_sets.len());
    for m in &answer_sets {
        // an answer set is a minimal model of its own reduct
        let reduct = gl_reduct(&p, m);
        let check = solver.minimal_models(&reduct).expect("within guard");
        println!("  {}  (minimal model of its reduct: {})", m.pretty(&p.sig), check.contains(m));
    }

    // an incoherent program: classical models exist, answer sets do not
    let q = parse_program(include_str!("programs/chain.lp")).expect("fixture parses");
    println!();
    println!("the chain fixture has {} classical models but {} answer sets",
        solver.classical_models(&q).expect("within guard").len(),
        solver.answer_sets(&q).expect("within guard").len());
}
