//! Compute the semi-equilibrium models of a program that has no
//! answer sets: each model pairs what is true with what is merely
//! believed, and the gap between the two is as small as possible.
//!
//! ```sh
//! cargo run -p sseq --example seq_models
//! ```

use sseq::paracoherent::{gap, seq_models};
use sseq::parse::parse_program;
use sseq::solver::RefSolver;
use sseq::transform::epistemic_transform;

fn main() {
    let p = parse_program(include_str!("programs/intro.lp")).expect("fixture parses");
    println!("input:");
    println!("  b :- not a.  c :- not a, not c.");
    println!();

    let solver = RefSolver::default();
    println!("answer sets: {}", solver.answer_sets(&p).expect("within guard").len());
    println!();

    let models = seq_models(&p, &solver).expect("within guard");
    // pretty-printing wants the extended inventory with the belief atoms
    let sig = epistemic_transform(&p).sig;
    println!("semi-equilibrium models ({}):", models.len());
    for m in &models {
        println!("  {}", m.pretty(&sig));
        println!("    believed but not true: {}", gap(&sig, m).pretty(&sig));
    }
    println!();
    println!("reading: each model assumes exactly one atom it cannot prove,");
    println!("and neither sacrifice is contained in the other, so both stand.");
}
