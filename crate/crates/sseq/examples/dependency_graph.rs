//! Build the atom dependency graph, order its strongly connected
//! components, slice the program into layers, and render the whole
//! thing as graphviz dot.
//!
//! ```sh
//! cargo run -p sseq --example dependency_graph
//! ```

use sseq::depgraph::{
    condensation_dot, dependency_graph, has_odd_negative_cycle, scc_topological, stratify,
};
use sseq::parse::parse_program;
use sseq::serialize::{serialize_program, Dialect};

fn main() {
    let p = parse_program(include_str!("programs/layered.lp")).expect("fixture parses");
    let g = dependency_graph(&p);
    println!("{} atoms, {} dependency edges", g.nodes.len(), g.edges.len());
    println!("odd negative cycle anywhere: {}", has_odd_negative_cycle(&g));
    println!();

    let order = scc_topological(&g);
    println!("{} components, topologically ordered:", order.n());
    for (i, comp) in order.components.iter().enumerate() {
        let names: Vec<&str> = comp.iter().map(|&a| p.sig.name(a)).collect();
        println!("  component {}: {{{}}}", i + 1, names.join(", "));
    }
    println!();

    // each layer holds the rules whose heads live in one component
    let strat = stratify(&p, &order);
    for (i, layer) in strat.layers.iter().enumerate() {
        println!("layer {} ({} rules):", i + 1, layer.len());
        let mut sub = p.clone();
        sub.rules = layer.clone();
        for line in serialize_program(&sub, Dialect::Native).lines() {
            println!("  {line}");
        }
    }
    println!();

    println!("condensation as dot (pipe into `dot -Tsvg`):");
    print!("{}", condensation_dot(&p, &g, &order));
}
