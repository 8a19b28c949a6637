//! Parse a program from text and print it back in both output dialects.
//!
//! ```sh
//! cargo run -p sseq --example parse_print
//! ```

use sseq::parse::{parse_program, parse_weighted};
use sseq::serialize::{serialize, serialize_program, Dialect};

fn main() {
    let text = include_str!("programs/choice.lp");
    let program = parse_program(text).expect("fixture parses");

    println!("parsed {} rules over {} atoms", program.rules.len(), program.sig.len());
    println!();
    println!("native dialect:");
    print!("{}", serialize_program(&program, Dialect::Native));
    println!();
    println!("asp-core-2 dialect (';' separates head atoms):");
    print!("{}", serialize_program(&program, Dialect::AspCore2));

    // weighted programs carry ":~" weak constraints with weight@level annotations
    let weighted = parse_weighted("a | b. :~ a. [2@1] :~ b. [1@0]").expect("weak syntax parses");
    println!();
    println!("with weak constraints:");
    print!("{}", serialize(&weighted, Dialect::Native));

    // parse errors carry line:column positions
    let err = parse_program("a :- not not b.").unwrap_err();
    println!();
    println!("diagnostics look like: {err}");
}
