//! The relaxed semantics built on top of [`crate::transform`].
//!
//! A relaxed model may *believe* atoms it cannot derive; the set of such
//! dangling beliefs is the model's [`gap`]. Models with subset-minimal
//! gaps win ([`maximal_canonical`]). [`seq_models`] computes all relaxed
//! models of a program in one shot; [`split_seq_oracle`] evaluates the
//! program layer by layer along its dependency order, which discards
//! models that repair early layers by assuming facts that later layers
//! would have to justify. [`split_seq_fast`] produces one such layered
//! model with a single optimizing solve instead of exploring every layer
//! combination, and is the engine behind the `solve` command.

use crate::atoms::{AtomKind, Signature};
use crate::depgraph::{dependency_graph, scc_topological, stratify, SccOrder};
use crate::program::{desugar_constraints, Interpretation, Program};
use crate::solver::{RefSolver, SolveError};
use crate::transform::{
    build_split, build_split_optimized, coherent_prefix, epistemic_transform, info_rules,
    simplify_wrt,
};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// Belief atoms of `m` whose objective counterpart is missing from `m`:
/// what the model leans on without being able to derive it.
pub fn gap(sig: &Signature, m: &Interpretation) -> Interpretation {
    m.retain_by(|a| match sig.kind(a) {
        AtomKind::Belief(obj) => !m.contains(obj),
        _ => false,
    })
}

/// `i` plus the belief atom of each of its members; the result has an
/// empty gap. Interns missing belief atoms on the way.
pub fn k_closure(sig: &mut Signature, i: &Interpretation) -> Interpretation {
    let mut out = i.clone();
    let atoms: Vec<_> = i.iter().collect();
    for a in atoms {
        out.insert(sig.ensure_belief(a));
    }
    out
}

/// Keep the members whose gap is not a strict superset of another
/// member's gap: models that assume more than necessary are dropped.
pub fn maximal_canonical(
    sig: &Signature,
    set: &BTreeSet<Interpretation>,
) -> BTreeSet<Interpretation> {
    set.iter()
        .filter(|m| {
            let g = gap(sig, m);
            !set.iter().any(|other| gap(sig, other).is_strict_subset(&g))
        })
        .cloned()
        .collect()
}

/// Drop generated head-witness atoms, keeping atoms and beliefs.
fn strip_witnesses(sig: &Signature, m: &Interpretation) -> Interpretation {
    m.retain_by(|a| !matches!(sig.kind(a), AtomKind::HeadWitness { .. }))
}

/// Drop every generated helper (head witnesses and gap markers), keeping
/// program atoms and their beliefs — the visible part of a solver model.
pub fn strip_auxiliary(sig: &Signature, m: &Interpretation) -> Interpretation {
    m.retain_by(|a| {
        !matches!(sig.kind(a), AtomKind::HeadWitness { .. } | AtomKind::GapMarker(_))
    })
}

/// All relaxed models of `p`: answer sets of the transformed program,
/// with witnesses projected away and only minimal-gap members kept. The
/// guard of `solver` is applied to `p` itself; the transformed program is
/// solved without the configurable guard.
pub fn seq_models(
    p: &Program,
    solver: &RefSolver,
) -> Result<BTreeSet<Interpretation>, SolveError> {
    solver.admit(p)?;
    let t = epistemic_transform(p);
    let engine = RefSolver::unguarded();
    let cleaned: BTreeSet<Interpretation> =
        engine.answer_sets(&t)?.iter().map(|m| strip_witnesses(&t.sig, m)).collect();
    Ok(maximal_canonical(&t.sig, &cleaned))
}

/// Layer-by-layer reference evaluation of `p` along `order`: every relaxed
/// model of layer j is carried into layer j+1 as facts, belief
/// constraints, and absence constraints, and every resulting chain is
/// expanded. The final candidates are filtered for minimal gaps. This
/// explores exponentially many chains and exists as the trusted
/// specification of the layered semantics, not as a fast solver.
pub fn split_seq_oracle_with(
    p: &Program,
    solver: &RefSolver,
    order: &SccOrder,
) -> Result<BTreeSet<Interpretation>, SolveError> {
    solver.admit(p)?;
    let strat = stratify(p, order);
    let mut sig = p.sig.clone();
    sig.ensure_all_beliefs();
    let engine = RefSolver::unguarded();

    let mut frontier = BTreeSet::from([Interpretation::empty()]);
    let mut memo: BTreeMap<(usize, Interpretation), BTreeSet<Interpretation>> = BTreeMap::new();
    for j in 1..=order.n() {
        let carried = order.prefix(j - 1);
        let mut next = BTreeSet::new();
        for m in &frontier {
            let key = (j, m.clone());
            if !memo.contains_key(&key) {
                let mut layer = Program::new(sig.clone());
                layer.rules = info_rules(&sig, m, &carried);
                layer.rules.extend(strat.layers[j - 1].iter().cloned());
                memo.insert(key.clone(), seq_models(&layer, &engine)?);
            }
            next.extend(memo[&key].iter().cloned());
        }
        frontier = next;
    }
    Ok(maximal_canonical(&sig, &frontier))
}

/// [`split_seq_oracle_with`] over the deterministic dependency order.
pub fn split_seq_oracle(
    p: &Program,
    solver: &RefSolver,
) -> Result<BTreeSet<Interpretation>, SolveError> {
    let order = scc_topological(&dependency_graph(p));
    split_seq_oracle_with(p, solver, &order)
}

/// The layered models computed the factored way: solve the coherent
/// prefix as ordinary ASP, fix each of its answer sets inside the
/// remainder, evaluate the remainder recursively, and keep minimal-gap
/// unions. Agrees with [`split_seq_oracle`] on every program.
pub fn split_seq_oracle_factored(
    p: &Program,
    solver: &RefSolver,
) -> Result<BTreeSet<Interpretation>, SolveError> {
    solver.admit(p)?;
    let order = scc_topological(&dependency_graph(p));
    let strat = stratify(p, &order);
    let cp = coherent_prefix(p, &strat);
    if cp.k == 0 {
        return split_seq_oracle_with(p, solver, &order);
    }
    let mut sig = p.sig.clone();
    sig.ensure_all_beliefs();
    let engine = RefSolver::unguarded();
    let mut out = BTreeSet::new();
    for i in engine.answer_sets(&cp.coherent)? {
        let rest = simplify_wrt(&cp.incoherent, &i);
        let base = k_closure(&mut sig, &i);
        for j in split_seq_oracle(&rest, &engine)? {
            out.insert(base.union(&j));
        }
    }
    Ok(maximal_canonical(&sig, &out))
}

/// Compute one layered relaxed model of `p` with a single optimizing
/// solve, or `None` when `p` has no classical model (reading empty-head
/// rules natively) and therefore no relaxed model either.
///
/// Hard constraints are desugared first, so a violated constraint shows
/// up as a believed `cstr_*` atom in the result. With `factor_prefix` the
/// rewriting keeps the coherent prefix untransformed; either way the
/// returned model is the engine's first optimal one — deterministic, but
/// not necessarily cardinality-minimal among all layered models.
pub fn split_seq_fast(
    p: &Program,
    factor_prefix: bool,
    solver: &RefSolver,
) -> Result<Option<Interpretation>, SolveError> {
    solver.admit(p)?;
    if !solver.has_classical_model(p)? {
        return Ok(None);
    }
    let d = desugar_constraints(p);
    let wp = if factor_prefix { build_split_optimized(&d) } else { build_split(&d) };
    let engine = RefSolver::unguarded();
    let optimal = engine.optimal_answer_sets(&wp)?;
    let first = optimal
        .first()
        .expect("a classically satisfiable program always has relaxed models");
    Ok(Some(strip_auxiliary(&wp.program.sig, first)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depgraph::scc_topological_seeded;
    use crate::parse::parse_program;

    const EX_INTRO: &str = "b :- not a. c :- not a, not c.";
    const EX_CHAIN: &str = "b :- not a. d :- b, not c. c :- d.";
    const EX_EVEN_ODD: &str = "a :- not b. b :- not a. c :- a, not c.";
    const EX_LAYERED: &str =
        "a :- not b. b :- not a. c :- b, not c. d :- a, not c, not d. e :- d.";

    fn sig_of(src: &str) -> Signature {
        let mut sig = parse_program(src).unwrap().sig;
        sig.ensure_all_beliefs();
        sig
    }

    fn interp(sig: &Signature, names: &[&str]) -> Interpretation {
        Interpretation::from_iter(names.iter().map(|n| {
            sig.lookup(n).unwrap_or_else(|| {
                let obj = sig.lookup(&n[2..]).unwrap();
                sig.belief_of(obj).unwrap()
            })
        }))
    }

    fn pretty_set(sig: &Signature, set: &BTreeSet<Interpretation>) -> BTreeSet<String> {
        set.iter().map(|m| m.pretty(sig)).collect()
    }

    fn strs(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn gap_collects_unsupported_beliefs() {
        let sig = sig_of("a. b. c.");
        let m = interp(&sig, &["a", "k_a", "k_c"]);
        assert_eq!(gap(&sig, &m), interp(&sig, &["k_c"]));
        let m = interp(&sig, &["b", "k_b"]);
        assert!(gap(&sig, &m).is_empty());
        assert!(gap(&sig, &Interpretation::empty()).is_empty());
    }

    #[test]
    fn closure_believes_every_true_atom() {
        let mut sig = sig_of("a. b.");
        let a = sig.lookup("a").unwrap();
        let b = sig.lookup("b").unwrap();
        let i = Interpretation::from_iter([a]);
        assert_eq!(k_closure(&mut sig, &i).pretty(&sig), "a K(a)");
        assert!(k_closure(&mut sig, &Interpretation::empty()).is_empty());
        let i = Interpretation::from_iter([a, b]);
        assert_eq!(k_closure(&mut sig, &i).pretty(&sig), "a K(a) b K(b)");
    }

    #[test]
    fn canonical_filter_drops_wider_gaps() {
        let sig = sig_of("a. b. c.");
        let wide = interp(&sig, &["a", "k_a", "k_c"]);
        let tight = interp(&sig, &["b", "k_b"]);
        let set = BTreeSet::from([wide.clone(), tight.clone()]);
        assert_eq!(maximal_canonical(&sig, &set), BTreeSet::from([tight.clone()]));

        // incomparable gaps both survive
        let left = interp(&sig, &["k_a"]);
        let right = interp(&sig, &["k_b"]);
        let set = BTreeSet::from([left.clone(), right.clone()]);
        assert_eq!(maximal_canonical(&sig, &set), set);

        let single = BTreeSet::from([wide]);
        assert_eq!(maximal_canonical(&sig, &single), single);
    }

    #[test]
    fn relaxed_models_of_the_opening_example() {
        let p = parse_program(EX_INTRO).unwrap();
        let models = seq_models(&p, &RefSolver::default()).unwrap();
        assert_eq!(pretty_set(&sig_of(EX_INTRO), &models), strs(&["b K(b) K(c)", "K(a)"]));
    }

    #[test]
    fn relaxed_models_of_coherent_programs_are_closures() {
        let p = parse_program("a.").unwrap();
        let models = seq_models(&p, &RefSolver::default()).unwrap();
        assert_eq!(pretty_set(&sig_of("a."), &models), strs(&["a K(a)"]));
    }

    #[test]
    fn relaxed_models_of_a_self_blocking_atom() {
        let p = parse_program("c :- not c.").unwrap();
        let models = seq_models(&p, &RefSolver::default()).unwrap();
        assert_eq!(pretty_set(&sig_of("c :- not c."), &models), strs(&["K(c)"]));
    }

    fn oracle_strs(src: &str) -> BTreeSet<String> {
        let p = parse_program(src).unwrap();
        let models = split_seq_oracle(&p, &RefSolver::default()).unwrap();
        pretty_set(&sig_of(src), &models)
    }

    #[test]
    fn layered_evaluation_discards_unfounded_repairs() {
        assert_eq!(oracle_strs(EX_INTRO), strs(&["b K(b) K(c)"]));
        assert_eq!(oracle_strs(EX_CHAIN), strs(&["b K(b) K(c)"]));
        assert_eq!(oracle_strs(EX_EVEN_ODD), strs(&["b K(b)"]));
        assert_eq!(
            oracle_strs(EX_LAYERED),
            strs(&["a K(a) K(d) K(e)", "b K(b) K(c)"])
        );
    }

    #[test]
    fn layered_models_are_relaxed_models() {
        for src in [EX_INTRO, EX_CHAIN, EX_EVEN_ODD, EX_LAYERED, "a :- not b.", "a."] {
            let p = parse_program(src).unwrap();
            let solver = RefSolver::default();
            let layered = split_seq_oracle(&p, &solver).unwrap();
            let relaxed = seq_models(&p, &solver).unwrap();
            assert!(
                layered.is_subset(&relaxed),
                "{src}: {layered:?} not within {relaxed:?}"
            );
        }
    }

    #[test]
    fn coherent_programs_keep_their_answer_sets() {
        let p = parse_program("a :- not b.").unwrap();
        assert_eq!(oracle_strs("a :- not b."), strs(&["a K(a)"]));
        let solver = RefSolver::default();
        let mut sig = sig_of("a :- not b.");
        let expected: BTreeSet<Interpretation> = solver
            .answer_sets(&p)
            .unwrap()
            .iter()
            .map(|i| k_closure(&mut sig, i))
            .collect();
        assert_eq!(split_seq_oracle(&p, &solver).unwrap(), expected);
    }

    #[test]
    fn layered_evaluation_ignores_tie_breaking_order() {
        let p = parse_program(EX_LAYERED).unwrap();
        let g = dependency_graph(&p);
        let solver = RefSolver::default();
        let baseline = split_seq_oracle(&p, &solver).unwrap();
        for seed in 0..6 {
            let order = scc_topological_seeded(&g, seed);
            let models = split_seq_oracle_with(&p, &solver, &order).unwrap();
            assert_eq!(models, baseline, "seed {seed}");
        }
    }

    #[test]
    fn factored_evaluation_agrees_with_the_oracle() {
        for src in [EX_INTRO, EX_CHAIN, EX_EVEN_ODD, EX_LAYERED, "c :- not c.", "a."] {
            let p = parse_program(src).unwrap();
            let solver = RefSolver::default();
            assert_eq!(
                split_seq_oracle_factored(&p, &solver).unwrap(),
                split_seq_oracle(&p, &solver).unwrap(),
                "factored evaluation diverged on {src}"
            );
        }
    }

    fn fast_str(src: &str, factor: bool) -> String {
        let p = parse_program(src).unwrap();
        let m = split_seq_fast(&p, factor, &RefSolver::default()).unwrap().unwrap();
        m.pretty(&sig_of(src))
    }

    #[test]
    fn fast_path_returns_the_preferred_layered_model() {
        for factor in [false, true] {
            assert_eq!(fast_str(EX_LAYERED, factor), "a K(a) K(d) K(e)");
            assert_eq!(fast_str(EX_INTRO, factor), "b K(b) K(c)");
            assert_eq!(fast_str("a :- not b.", factor), "a K(a)");
        }
    }

    #[test]
    fn fast_path_reports_classically_unsatisfiable_input() {
        let p = parse_program("a. :- a.").unwrap();
        let got = split_seq_fast(&p, true, &RefSolver::default()).unwrap();
        assert_eq!(got, None);
    }

    #[test]
    fn fast_path_tolerates_violated_constraints_with_a_believed_marker() {
        // no rule can make a true, so the constraint's sugar atom is believed
        let p = parse_program(":- not a.").unwrap();
        let m = split_seq_fast(&p, false, &RefSolver::default()).unwrap().unwrap();
        let mut sig = parse_program(":- not a.").unwrap().sig;
        sig.ensure_all_beliefs();
        // the desugared signature isn't visible here; render by id kinds
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn pipeline_honors_the_input_guard() {
        let p = parse_program("a :- b, c.").unwrap();
        let tight = RefSolver::new(2);
        assert!(matches!(
            seq_models(&p, &tight),
            Err(SolveError::AtomGuard { atoms: 3, max: 2 })
        ));
        assert!(matches!(
            split_seq_oracle(&p, &tight),
            Err(SolveError::AtomGuard { atoms: 3, max: 2 })
        ));
        assert!(matches!(
            split_seq_fast(&p, true, &tight),
            Err(SolveError::AtomGuard { atoms: 3, max: 2 })
        ));
    }
}
