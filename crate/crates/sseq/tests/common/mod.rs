//! Shared generator for the randomized suites. Programs are produced as
//! source text so every consumer exercises the parser on the way in.

use rand::rngs::StdRng;
use rand::Rng;

const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// `k` distinct names drawn from the first `n` of the pool.
fn sample(rng: &mut StdRng, n: usize, k: usize) -> Vec<&'static str> {
    let mut pool: Vec<&'static str> = NAMES[..n].to_vec();
    let mut out = Vec::new();
    for _ in 0..k.min(n) {
        let i = rng.gen_range(0..pool.len());
        out.push(pool.swap_remove(i));
    }
    out
}

fn push_statement(line: &mut String, head: &[&str], pos: &[&str], neg: &[&str]) {
    if !head.is_empty() {
        line.push_str(&head.join(" | "));
    }
    if !pos.is_empty() || !neg.is_empty() {
        line.push_str(if head.is_empty() { ":- " } else { " :- " });
        let body: Vec<String> = pos
            .iter()
            .map(|a| a.to_string())
            .chain(neg.iter().map(|a| format!("not {a}")))
            .collect();
        line.push_str(&body.join(", "));
    }
    line.push('.');
}

/// One random ground program: 2..=6 atoms, 1..=10 statements, with
/// disjunctive heads, negation, and the occasional constraint mixed in.
pub fn random_source(rng: &mut StdRng) -> String {
    let n_atoms = rng.gen_range(2..=6);
    let n_rules = rng.gen_range(1..=10);
    let mut out = String::new();
    for _ in 0..n_rules {
        let head_len = if rng.gen_bool(0.15) {
            0
        } else if rng.gen_bool(0.2) {
            rng.gen_range(2..=3)
        } else {
            1
        };
        let head = sample(rng, n_atoms, head_len);
        let n_pos = rng.gen_range(0..=2);
        let pos = sample(rng, n_atoms, n_pos);
        let n_neg = rng.gen_range(0..=2);
        let neg = sample(rng, n_atoms, n_neg);
        // empty-head statements need a body to mean anything
        if head.is_empty() && pos.is_empty() && neg.is_empty() {
            continue;
        }
        let mut line = String::new();
        push_statement(&mut line, &head, &pos, &neg);
        out.push_str(&line);
        out.push('\n');
    }
    if out.is_empty() {
        out.push_str("a.\n");
    }
    out
}

/// A few ":~" statements to bolt onto a plain source when a weighted
/// program is wanted.
#[allow(dead_code)]
pub fn random_weak_lines(rng: &mut StdRng) -> String {
    let mut out = String::new();
    let n_weaks = rng.gen_range(1..=3);
    for _ in 0..n_weaks {
        let n_pos = rng.gen_range(0..=2);
        let pos = sample(rng, 6, n_pos);
        let n_neg = rng.gen_range(0..=2);
        let neg = sample(rng, 6, n_neg);
        if pos.is_empty() && neg.is_empty() {
            continue;
        }
        let body: Vec<String> = pos
            .iter()
            .map(|a| a.to_string())
            .chain(neg.iter().map(|a| format!("not {a}")))
            .collect();
        out.push_str(&format!(
            ":~ {}. [{}@{}]\n",
            body.join(", "),
            rng.gen_range(1..=5),
            rng.gen_range(0..=3)
        ));
    }
    out
}
