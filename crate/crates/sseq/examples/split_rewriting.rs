//! Build the full weak-constraint rewriting: belief rewriting, gap
//! markers, and one penalty level per strongly connected component.
//! Optimal answer sets of the result are exactly the repairs that
//! give up as little as possible, preferring damage in later layers.
//!
//! ```sh
//! cargo run -p sseq --example split_rewriting
//! ```

use sseq::parse::parse_program;
use sseq::serialize::{serialize, Dialect};
use sseq::solver::{penalty_vector, RefSolver};
use sseq::transform::build_split;

fn main() {
    let p = parse_program(include_str!("programs/chain.lp")).expect("fixture parses");
    println!("input:");
    println!("  b :- not a.  d :- b, not c.  c :- d.");
    println!();

    let split = build_split(&p);
    println!(
        "rewriting has {} rules and {} weak constraints:",
        split.program.rules.len(),
        split.weak_constraints.len()
    );
    print!("{}", serialize(&split, Dialect::Native));
    println!();

    // rank the candidates the way the weak constraints do
    let solver = RefSolver::unguarded();
    let optima = solver.optimal_answer_sets(&split).expect("within width");
    println!("optimal answer sets ({}):", optima.len());
    for m in &optima {
        println!(
            "  {}  penalties per level (high to low): {:?}",
            m.pretty(&split.program.sig),
            penalty_vector(&split, m)
        );
    }
}
