//! Text output of programs and weak constraints.
//!
//! Output is byte-deterministic: rules in program order, atoms within each
//! rule part ascending by interning order, one statement per line. Weak
//! constraints always print the canonical `[w@l]` annotation. The
//! [`Dialect`] picks the head separator: [`Dialect::Native`] writes `|`,
//! [`Dialect::AspCore2`] writes `;` for interchange with standard solvers.
//! The parser accepts both, so either dialect round-trips.

use crate::atoms::Signature;
use crate::program::{Program, Rule, WeakConstraint, WeightedProgram};
use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Dialect {
    #[default]
    Native,
    AspCore2,
}

impl Dialect {
    fn head_sep(self) -> &'static str {
        match self {
            Dialect::Native => " | ",
            Dialect::AspCore2 => " ; ",
        }
    }
}

fn push_body(out: &mut String, sig: &Signature, r: &Rule) {
    let mut first = true;
    for &a in &r.pos_body {
        if !first {
            out.push_str(", ");
        }
        out.push_str(sig.name(a));
        first = false;
    }
    for &a in &r.neg_body {
        if !first {
            out.push_str(", ");
        }
        out.push_str("not ");
        out.push_str(sig.name(a));
        first = false;
    }
}

fn push_rule(out: &mut String, sig: &Signature, r: &Rule, dialect: Dialect) {
    let mut first = true;
    for &a in &r.head {
        if !first {
            out.push_str(dialect.head_sep());
        }
        out.push_str(sig.name(a));
        first = false;
    }
    let has_body = !r.pos_body.is_empty() || !r.neg_body.is_empty();
    if r.head.is_empty() || has_body {
        if !r.head.is_empty() {
            out.push(' ');
        }
        out.push_str(":- ");
        push_body(out, sig, r);
        if !has_body {
            // degenerate ":- ." still needs the space consumed above
            let _ = out.pop();
        }
    }
    out.push_str(".\n");
}

fn push_weak(out: &mut String, sig: &Signature, w: &WeakConstraint) {
    out.push_str(":~ ");
    let as_rule = Rule::new([], w.pos_body.iter().copied(), w.neg_body.iter().copied());
    push_body(out, sig, &as_rule);
    let _ = write!(out, ". [{}@{}]\n", w.weight, w.level);
}

/// Serialize rules and weak constraints; empty input gives the empty string.
pub fn serialize(wp: &WeightedProgram, dialect: Dialect) -> String {
    let mut out = String::new();
    let sig = &wp.program.sig;
    for r in &wp.program.rules {
        push_rule(&mut out, sig, r, dialect);
    }
    for w in &wp.weak_constraints {
        push_weak(&mut out, sig, w);
    }
    out
}

/// Serialize a plain program (no weak constraints).
pub fn serialize_program(p: &Program, dialect: Dialect) -> String {
    let mut out = String::new();
    for r in &p.rules {
        push_rule(&mut out, &p.sig, r, dialect);
    }
    out
}
