//! Show the belief rewriting that turns an arbitrary program into a
//! positive one. Negation-free rules survive; every rule with "not"
//! is replaced by head-witness choices plus belief bookkeeping.
//!
//! ```sh
//! cargo run -p sseq --example epistemic_transform
//! ```

use sseq::parse::parse_program;
use sseq::serialize::{serialize_program, Dialect};
use sseq::transform::epistemic_transform;

fn main() {
    let p = parse_program(include_str!("programs/intro.lp")).expect("fixture parses");
    println!("input ({} rules):", p.rules.len());
    for line in serialize_program(&p, Dialect::Native).lines() {
        println!("  {line}");
    }
    println!();

    let t = epistemic_transform(&p);
    println!(
        "rewritten ({} rules, positive: {}):",
        t.rules.len(),
        t.is_positive()
    );
    for line in serialize_program(&t, Dialect::Native).lines() {
        println!("  {line}");
    }
    println!();
    println!("atom inventory grew from {} to {}:", p.sig.len(), t.sig.len());
    for a in t.sig.ids() {
        println!("  {}", t.sig.name(a));
    }
}
