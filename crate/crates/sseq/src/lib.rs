//! Relaxed (semi-equilibrium) models of ground disjunctive logic programs.
//!
//! An incoherent program — one without answer sets — still carries
//! information. This crate computes models that are allowed to *believe*
//! atoms they cannot derive, keeps the ones that assume least, and prefers
//! models whose leftover assumptions sit as far from the program's
//! foundations as possible. The flagship operation rewrites a program into
//! an ordinary weighted ASP program ([`transform::build_split`]) whose
//! optimal answer sets encode exactly those preferred relaxed models, so
//! any optimizing ASP solver can compute them; a built-in exhaustive
//! engine ([`solver::RefSolver`]) solves them directly at small scale.
//!
//! Modules, in pipeline order:
//!
//! - [`atoms`] / [`program`]: interned signatures, rules, interpretations,
//!   weak constraints, and constraint desugaring.
//! - [`parse`] / [`serialize`]: the textual format, in both directions.
//! - [`depgraph`]: dependency graph, strongly connected components with a
//!   deterministic topological order, stratification into layers, and the
//!   odd-negative-cycle coherence pre-check.
//! - [`solver`]: the exhaustive reference engine — classical, minimal,
//!   stable, and optimal models.
//! - [`transform`]: all rewritings, including the factored variant that
//!   leaves provably coherent layers untouched.
//! - [`paracoherent`]: gaps, the relaxed semantics, the layer-by-layer
//!   reference evaluation, and the single-solve fast path.
//! - [`cli`]: the `sseq` command-line tool over all of the above.
//!
//! The `examples/` directory demonstrates each capability end to end;
//! start with `examples/fast_path.rs`.

pub mod atoms;
pub mod cli;
pub mod depgraph;
pub mod paracoherent;
pub mod parse;
pub mod program;
pub mod serialize;
pub mod solver;
pub mod transform;
