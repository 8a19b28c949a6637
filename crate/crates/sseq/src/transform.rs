//! Program rewritings behind the relaxed solving pipeline.
//!
//! The central piece is [`epistemic_transform`]: it compiles default
//! negation away by turning each rule with negative body atoms into a
//! choice between *witnessing* one of its head atoms and *believing* one
//! of its blockers, over a program that is positive afterwards. Belief
//! atoms `k_x` track what a model is committed to even when the committed
//! atom itself cannot be derived; the difference between the two is the
//! model's gap.
//!
//! On top of that sit [`gamma_program`] (one marker rule per program atom
//! that fires exactly on gap members), [`level_weak_constraints`] (penalties
//! that weigh gap markers by dependency depth, earliest components
//! weighing most), and [`build_split`], which assembles all three into one
//! weighted program whose optimal answer sets are the preferred relaxed
//! models.
//!
//! [`coherent_prefix`], [`info_rules`] and [`simplify_wrt`] support the
//! layer-by-layer evaluation strategy: a leading group of layers that
//! provably has answer sets can be solved as ordinary ASP and only the
//! remainder needs the transformation ([`build_split_optimized`]).

use crate::atoms::{AtomId, Signature};
use crate::depgraph::{
    dependency_graph, has_odd_negative_cycle, rules_graph, scc_topological, stratify, SccOrder,
    Stratification,
};
use crate::program::{Interpretation, Program, Rule, WeakConstraint, WeightedProgram};
use std::collections::BTreeSet;

/// Rules replacing those with nonempty negative body: for each such rule,
/// one head-or-belief choice rule, the head-witness support rules, the
/// witness/blocker exclusion constraints, and the intra-head witness
/// propagation rules. Rules without negation are copied unchanged.
fn witness_rules(sig: &mut Signature, rules: &[Rule]) -> Vec<Rule> {
    let mut out = Vec::new();
    for (ri, r) in rules.iter().enumerate() {
        if r.neg_body.is_empty() {
            out.push(r.clone());
            continue;
        }
        let heads: Vec<AtomId> = r.head.iter().copied().collect();
        let witnesses: Vec<AtomId> =
            (0..heads.len()).map(|i| sig.fresh_head_witness(ri, i)).collect();
        // fire the rule through a witness, or believe a blocker instead
        let mut choice: BTreeSet<AtomId> = witnesses.iter().copied().collect();
        for &c in &r.neg_body {
            choice.insert(sig.ensure_belief(c));
        }
        out.push(Rule::new(choice, r.pos_body.iter().copied(), []));
        // a witnessed head atom is true
        for (&a, &w) in heads.iter().zip(&witnesses) {
            out.push(Rule::new([a], [w], []));
        }
        // witnessing is incompatible with a true blocker
        for &w in &witnesses {
            for &c in &r.neg_body {
                out.push(Rule::new([], [w, c], []));
            }
        }
        // a true head atom soaks up the witness once any witness is active
        for (&a, &w) in heads.iter().zip(&witnesses) {
            for &w2 in &witnesses {
                out.push(Rule::new([w], [a, w2], []));
            }
        }
    }
    out
}

/// `k_a :- a` for each given atom: whatever is true is also believed.
fn belief_closure_rules(sig: &mut Signature, atoms: &[AtomId]) -> Vec<Rule> {
    atoms.iter().map(|&a| Rule::new([sig.ensure_belief(a)], [a], [])).collect()
}

/// The belief image of each rule: heads and blockers become belief
/// disjuncts, the positive body is read under belief. Keeps belief sets
/// closed under the program's own inferences.
fn belief_image_rules(sig: &mut Signature, rules: &[Rule]) -> Vec<Rule> {
    rules
        .iter()
        .map(|r| {
            let head: Vec<AtomId> = r
                .head
                .iter()
                .chain(r.neg_body.iter())
                .map(|&a| sig.ensure_belief(a))
                .collect();
            let pos: Vec<AtomId> = r.pos_body.iter().map(|&a| sig.ensure_belief(a)).collect();
            Rule::new(head, pos, [])
        })
        .collect()
}

/// Rewrite `p` into a positive program over atoms, their belief
/// counterparts `k_*`, and fresh head witnesses `lambda_*`. Answer sets of
/// the result encode the relaxed models of `p`: a belief atom without its
/// objective counterpart marks an assumption the model leans on.
///
/// Empty-head rules participate like any other: with negation they turn
/// into a plain belief disjunction over their blockers (no witnesses),
/// without negation they are copied as-is.
pub fn epistemic_transform(p: &Program) -> Program {
    let mut sig = p.sig.clone();
    sig.ensure_all_beliefs();
    let atoms = sig.program_atoms();
    let mut rules = witness_rules(&mut sig, &p.rules);
    rules.extend(belief_closure_rules(&mut sig, &atoms));
    rules.extend(belief_image_rules(&mut sig, &p.rules));
    let mut out = Program::new(sig);
    out.rules = rules;
    out
}

/// One marker rule `gamma_a :- k_a, not a` per program atom of `p`'s
/// signature: the marker is derivable exactly when `a` is believed but not
/// true. Generated helper atoms never get markers.
pub fn gamma_program(p: &Program) -> Program {
    let mut sig = p.sig.clone();
    sig.ensure_all_beliefs();
    let atoms = sig.program_atoms();
    let mut out = Program::new(sig);
    for &a in &atoms {
        let k = out.sig.ensure_belief(a);
        let g = out.sig.ensure_gap_marker(a);
        out.rules.push(Rule::new([g], [k], [a]));
    }
    out
}

/// One weight-1 penalty per atom on its gap marker, at level `n - i` for
/// atoms of the i-th dependency component (1-based) out of n. Earlier
/// components land on higher levels, so gaps close to the program's
/// foundations cost the most.
pub fn level_weak_constraints(sig: &mut Signature, order: &SccOrder) -> Vec<WeakConstraint> {
    let n = order.n();
    let mut out = Vec::new();
    for (idx, comp) in order.components.iter().enumerate() {
        let level = (n - 1 - idx) as u64;
        for &a in comp {
            out.push(WeakConstraint {
                pos_body: BTreeSet::from([sig.ensure_gap_marker(a)]),
                neg_body: BTreeSet::new(),
                weight: 1,
                level,
            });
        }
    }
    out
}

/// Assemble the whole weighted rewriting of `p`: the positive
/// transformation, the gap markers, and the leveled penalties over `p`'s
/// dependency order. Optimal answer sets of the result, stripped of
/// helper atoms, are the preferred relaxed models of `p`.
pub fn build_split(p: &Program) -> WeightedProgram {
    let mut program = epistemic_transform(p);
    let atoms = program.sig.program_atoms();
    for &a in &atoms {
        let k = program.sig.ensure_belief(a);
        let g = program.sig.ensure_gap_marker(a);
        program.rules.push(Rule::new([g], [k], [a]));
    }
    let order = scc_topological(&dependency_graph(p));
    let weak_constraints = level_weak_constraints(&mut program.sig, &order);
    WeightedProgram { program, weak_constraints }
}

/// A program factored at the last dependency layer that still provably
/// has answer sets on its own.
#[derive(Clone, Debug)]
pub struct CoherentPrefix {
    /// number of leading layers that pass the even-cycle check
    pub k: usize,
    /// union of those layers, verbatim
    pub coherent: Program,
    /// the remaining rules
    pub incoherent: Program,
}

/// Split the stratification at the first layer whose own subgraph has a
/// cycle with an odd number of negated edges; everything before it is
/// guaranteed to have answer sets. `k` may be 0 (empty prefix) or the
/// layer count (whole program in the prefix).
pub fn coherent_prefix(p: &Program, strat: &Stratification) -> CoherentPrefix {
    let mut k = 0;
    for layer in &strat.layers {
        if has_odd_negative_cycle(&rules_graph(layer)) {
            break;
        }
        k += 1;
    }
    let mut coherent = Program::new(p.sig.clone());
    let mut incoherent = Program::new(p.sig.clone());
    for (j, layer) in strat.layers.iter().enumerate() {
        let dst = if j < k { &mut coherent } else { &mut incoherent };
        dst.rules.extend(layer.iter().cloned());
    }
    CoherentPrefix { k, coherent, incoherent }
}

/// Like [`build_split`], but rules of the coherent prefix are kept
/// verbatim instead of being transformed: only the remainder pays the
/// witness/belief expansion. Belief closure, gap markers and penalties
/// still range over the full signature, so preferences are judged exactly
/// as in the unfactored rewriting.
pub fn build_split_optimized(p: &Program) -> WeightedProgram {
    let g = dependency_graph(p);
    let order = scc_topological(&g);
    let strat = stratify(p, &order);
    let cp = coherent_prefix(p, &strat);
    if cp.k == 0 {
        return build_split(p);
    }
    let mut sig = p.sig.clone();
    sig.ensure_all_beliefs();
    let atoms = sig.program_atoms();
    let mut rules = cp.coherent.rules.clone();
    rules.extend(witness_rules(&mut sig, &cp.incoherent.rules));
    rules.extend(belief_closure_rules(&mut sig, &atoms));
    rules.extend(belief_image_rules(&mut sig, &cp.incoherent.rules));
    for &a in &atoms {
        let k = sig.ensure_belief(a);
        let gm = sig.ensure_gap_marker(a);
        rules.push(Rule::new([gm], [k], [a]));
    }
    let weak_constraints = level_weak_constraints(&mut sig, &order);
    let mut program = Program::new(sig);
    program.rules = rules;
    WeightedProgram { program, weak_constraints }
}

/// Rules carrying one layer's verdict on the atoms of `c` into the next
/// layer: facts for true atoms, `':- not a'` for believed atoms (the next
/// layer must keep believing them), and `':- a'` for atoms the model
/// neither holds nor believes. A believed-but-not-true atom gets only the
/// belief constraint, leaving the next layer free to derive it.
pub fn info_rules(sig: &Signature, m: &Interpretation, c: &BTreeSet<AtomId>) -> Vec<Rule> {
    let mut out = Vec::new();
    for &a in c {
        let true_now = m.contains(a);
        let believed = sig.belief_of(a).map_or(false, |k| m.contains(k));
        if true_now {
            out.push(Rule::fact(a));
        }
        if believed {
            out.push(Rule::new([], [], [a]));
        }
        if !true_now && !believed {
            out.push(Rule::new([], [a], []));
        }
    }
    out
}

/// Evaluate `p` against a fixed interpretation over earlier layers: rules
/// blocked by a true negative-body atom are dropped, true atoms are erased
/// from positive bodies and heads, and a rule whose head is fully absorbed
/// (it is already satisfied) is dropped. The result mentions no atom of
/// `i`.
pub fn simplify_wrt(p: &Program, i: &Interpretation) -> Program {
    let mut out = Program::new(p.sig.clone());
    for r in &p.rules {
        if r.neg_body.iter().any(|&a| i.contains(a)) {
            continue;
        }
        let head: BTreeSet<AtomId> = r.head.iter().copied().filter(|&a| !i.contains(a)).collect();
        if head.is_empty() && !r.head.is_empty() {
            continue;
        }
        let pos = r.pos_body.iter().copied().filter(|&a| !i.contains(a));
        out.rules.push(Rule::new(head, pos, r.neg_body.iter().copied()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::AtomKind;
    use crate::parse::parse_program;
    use crate::program::desugar_constraints;
    use crate::serialize::{serialize, serialize_program, Dialect};
    use crate::solver::RefSolver;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const EX_CHAIN: &str = "b :- not a. d :- b, not c. c :- d.";
    const EX_LAYERED: &str =
        "a :- not b. b :- not a. c :- b, not c. d :- a, not c, not d. e :- d.";
    const EX_INTRO: &str = "b :- not a. c :- not a, not c.";

    fn rule_lines(p: &Program) -> BTreeSet<String> {
        serialize_program(p, Dialect::Native).lines().map(str::to_string).collect()
    }

    fn projections(wp: &WeightedProgram) -> BTreeSet<BTreeSet<String>> {
        let optimal = RefSolver::unguarded().optimal_answer_sets(wp).unwrap();
        optimal
            .iter()
            .map(|m| {
                m.iter()
                    .filter(|&a| {
                        matches!(
                            wp.program.sig.kind(a),
                            AtomKind::Objective | AtomKind::ConstraintHead(_) | AtomKind::Belief(_)
                        )
                    })
                    .map(|a| wp.program.sig.pretty(a))
                    .collect()
            })
            .collect()
    }

    fn names(set: &[&str]) -> BTreeSet<String> {
        set.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_negative_rule_expands_to_witness_rules() {
        let p = parse_program("b :- not a.").unwrap();
        let t = epistemic_transform(&p);
        let expected = names(&[
            "k_a | lambda_r1_1.",
            "b :- lambda_r1_1.",
            ":- a, lambda_r1_1.",
            "lambda_r1_1 :- b, lambda_r1_1.",
            "k_b :- b.",
            "k_a :- a.",
            "k_b | k_a.",
        ]);
        assert_eq!(rule_lines(&t), expected);
        assert_eq!(t.rules.len(), 7);
    }

    #[test]
    fn positive_rules_only_gain_belief_closure() {
        let p = parse_program("a :- b.").unwrap();
        let t = epistemic_transform(&p);
        let expected = names(&["a :- b.", "k_a :- a.", "k_b :- b.", "k_a :- k_b."]);
        assert_eq!(rule_lines(&t), expected);
        assert_eq!(t.rules.len(), 4);
    }

    #[test]
    fn negative_body_atoms_lift_to_belief_choices() {
        let p = parse_program("c :- not a, not c.").unwrap();
        let t = epistemic_transform(&p);
        let choice = names(&["k_c", "k_a", "lambda_r1_1"]);
        let found = t.rules.iter().any(|r| {
            r.pos_body.is_empty()
                && r.neg_body.is_empty()
                && r.head.iter().map(|&a| t.sig.name(a).to_string()).collect::<BTreeSet<_>>()
                    == choice
        });
        assert!(found, "missing the three-way choice rule in:\n{}", rule_lines(&t).len());
    }

    #[test]
    fn empty_head_rules_transform_without_witnesses() {
        // with negation: the choice degenerates to a belief disjunction
        let p = parse_program(":- not a.").unwrap();
        let t = epistemic_transform(&p);
        assert_eq!(rule_lines(&t), names(&["k_a.", "k_a :- a."]));
        assert_eq!(t.rules.len(), 3, "the belief image duplicates the forced belief");

        // without negation: copied, plus its belief image
        let p = parse_program(":- a.").unwrap();
        let t = epistemic_transform(&p);
        assert_eq!(rule_lines(&t), names(&[":- a.", "k_a :- a.", ":- k_a."]));
    }

    #[test]
    fn transformed_programs_are_positive() {
        let fixtures = [EX_CHAIN, EX_LAYERED, EX_INTRO, "a | b :- c, not d. :- not e. e."];
        for src in fixtures {
            let t = epistemic_transform(&parse_program(src).unwrap());
            assert!(t.is_positive(), "negation survived for {src:?}");
        }
    }

    fn random_program(rng: &mut StdRng) -> Program {
        let atoms = ["a", "b", "c", "d", "e", "f"];
        let n = rng.gen_range(2..=atoms.len());
        let mut src = String::new();
        for _ in 0..rng.gen_range(1..=8) {
            let mut parts: Vec<String> = Vec::new();
            let heads = if rng.gen_bool(0.15) { 0 } else { rng.gen_range(1..=2) };
            let head: Vec<&str> =
                (0..heads).map(|_| atoms[rng.gen_range(0..n)]).collect();
            for _ in 0..rng.gen_range(0..=2) {
                parts.push(atoms[rng.gen_range(0..n)].to_string());
            }
            for _ in 0..rng.gen_range(0..=2) {
                parts.push(format!("not {}", atoms[rng.gen_range(0..n)]));
            }
            if head.is_empty() && parts.is_empty() {
                continue;
            }
            src.push_str(&head.join(" | "));
            if !parts.is_empty() {
                src.push_str(" :- ");
                src.push_str(&parts.join(", "));
            }
            src.push_str(". ");
        }
        parse_program(&src).unwrap()
    }

    #[test]
    fn transform_size_is_exactly_predictable() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..200 {
            let p = desugar_constraints(&random_program(&mut rng));
            let expected: usize = p
                .rules
                .iter()
                .map(|r| {
                    if r.neg_body.is_empty() {
                        1
                    } else {
                        let l = r.head.len();
                        let n = r.neg_body.len();
                        1 + l + l * n + l * l
                    }
                })
                .sum::<usize>()
                + p.sig.program_atoms().len()
                + p.rules.len();
            let t = epistemic_transform(&p);
            assert_eq!(t.rules.len(), expected, "size mismatch for {p:?}");
            assert!(t.is_positive());
        }
    }

    #[test]
    fn gamma_rules_one_per_program_atom() {
        let p = parse_program("a :- b. c.").unwrap();
        let g = gamma_program(&p);
        let expected = names(&[
            "gamma_a :- k_a, not a.",
            "gamma_b :- k_b, not b.",
            "gamma_c :- k_c, not c.",
        ]);
        assert_eq!(rule_lines(&g), expected);
    }

    #[test]
    fn gamma_of_empty_program_is_empty() {
        let p = parse_program("").unwrap();
        assert!(gamma_program(&p).rules.is_empty());
    }

    #[test]
    fn gamma_skips_generated_atoms() {
        let p = parse_program(EX_CHAIN).unwrap();
        let t = epistemic_transform(&p);
        let g = gamma_program(&t);
        // witnesses and belief atoms in t's signature get no marker rules
        assert_eq!(g.rules.len(), 4);
        for r in &g.rules {
            let marked = *r.neg_body.first().unwrap();
            assert!(matches!(g.sig.kind(marked), AtomKind::Objective));
        }
    }

    #[test]
    fn level_assignment_counts_down_from_top() {
        let p = parse_program(EX_LAYERED).unwrap();
        let order = scc_topological(&dependency_graph(&p));
        let mut sig = p.sig.clone();
        let weaks = level_weak_constraints(&mut sig, &order);
        let by_name: BTreeSet<(String, u64)> = weaks
            .iter()
            .map(|w| (sig.name(*w.pos_body.first().unwrap()).to_string(), w.level))
            .collect();
        let expected: BTreeSet<(String, u64)> = [
            ("gamma_a", 3),
            ("gamma_b", 3),
            ("gamma_c", 2),
            ("gamma_d", 1),
            ("gamma_e", 0),
        ]
        .iter()
        .map(|(s, l)| (s.to_string(), *l))
        .collect();
        assert_eq!(by_name, expected);
        assert!(weaks.iter().all(|w| w.weight == 1));
    }

    #[test]
    fn single_component_gets_level_zero() {
        let p = parse_program("a :- b. b :- a.").unwrap();
        let order = scc_topological(&dependency_graph(&p));
        let mut sig = p.sig.clone();
        let weaks = level_weak_constraints(&mut sig, &order);
        assert_eq!(weaks.len(), 2);
        assert!(weaks.iter().all(|w| w.level == 0));
    }

    #[test]
    fn empty_order_gives_no_weak_constraints() {
        let p = parse_program("").unwrap();
        let order = scc_topological(&dependency_graph(&p));
        let mut sig = p.sig.clone();
        assert!(level_weak_constraints(&mut sig, &order).is_empty());
    }

    #[test]
    fn split_combines_transform_markers_and_penalties() {
        let p = parse_program(EX_INTRO).unwrap();
        let wp = build_split(&p);
        let atoms = p.sig.program_atoms().len();
        assert_eq!(wp.weak_constraints.len(), atoms, "one penalty per atom");
        let levels: BTreeSet<(String, u64)> = wp
            .weak_constraints
            .iter()
            .map(|w| (wp.program.sig.name(*w.pos_body.first().unwrap()).to_string(), w.level))
            .collect();
        let expected: BTreeSet<(String, u64)> =
            [("gamma_a", 2), ("gamma_b", 1), ("gamma_c", 0)]
                .iter()
                .map(|(s, l)| (s.to_string(), *l))
                .collect();
        assert_eq!(levels, expected);
        let text = serialize(&wp, Dialect::Native);
        assert!(text.contains(":~ gamma_c. [1@0]"), "got:\n{text}");
    }

    #[test]
    fn split_of_empty_program_is_empty() {
        let p = parse_program("").unwrap();
        let wp = build_split(&p);
        assert!(wp.program.rules.is_empty());
        assert!(wp.weak_constraints.is_empty());
    }

    #[test]
    fn split_optimum_prefers_shallow_gaps() {
        let p = parse_program(EX_INTRO).unwrap();
        let best = projections(&build_split(&p));
        assert_eq!(best, BTreeSet::from([names(&["b", "K(b)", "K(c)"])]));

        let p = parse_program(EX_LAYERED).unwrap();
        let best = projections(&build_split(&p));
        assert_eq!(best, BTreeSet::from([names(&["a", "K(a)", "K(d)", "K(e)"])]));
    }

    #[test]
    fn info_states_truth_belief_and_absence() {
        let mut p = parse_program("a. b.").unwrap();
        p.sig.ensure_all_beliefs();
        let a = p.sig.lookup("a").unwrap();
        let b = p.sig.lookup("b").unwrap();
        let ka = p.sig.belief_of(a).unwrap();

        let mut q = Program::new(p.sig.clone());
        q.rules = info_rules(&p.sig, &Interpretation::empty(), &BTreeSet::from([a]));
        assert_eq!(serialize_program(&q, Dialect::Native), ":- a.\n");

        let m = Interpretation::from_iter([a, ka]);
        q.rules = info_rules(&p.sig, &m, &BTreeSet::from([a, b]));
        assert_eq!(serialize_program(&q, Dialect::Native), "a.\n:- not a.\n:- b.\n");

        let m = Interpretation::from_iter([ka]);
        q.rules = info_rules(&p.sig, &m, &BTreeSet::from([a]));
        assert_eq!(serialize_program(&q, Dialect::Native), ":- not a.\n");
    }

    fn prefix_of(src: &str) -> CoherentPrefix {
        let p = parse_program(src).unwrap();
        let order = scc_topological(&dependency_graph(&p));
        let strat = stratify(&p, &order);
        coherent_prefix(&p, &strat)
    }

    #[test]
    fn coherent_prefix_stops_at_first_odd_layer() {
        let cp = prefix_of(EX_LAYERED);
        assert_eq!(cp.k, 1);
        assert_eq!(rule_lines(&cp.coherent), names(&["a :- not b.", "b :- not a."]));
        assert_eq!(cp.incoherent.rules.len(), 3);

        // the odd cycle between c and d only shows up in the third layer
        let cp = prefix_of(EX_CHAIN);
        assert_eq!(cp.k, 2);
        assert_eq!(rule_lines(&cp.coherent), names(&["b :- not a."]));
        assert_eq!(rule_lines(&cp.incoherent), names(&["d :- b, not c.", "c :- d."]));
    }

    #[test]
    fn even_program_is_wholly_coherent() {
        let cp = prefix_of("a :- not b. b :- not a.");
        assert_eq!(cp.k, 1);
        assert!(cp.incoherent.rules.is_empty());
    }

    #[test]
    fn odd_first_layer_gives_empty_prefix() {
        let cp = prefix_of("c :- not c.");
        assert_eq!(cp.k, 0);
        assert!(cp.coherent.rules.is_empty());
        assert_eq!(cp.incoherent.rules.len(), 1);
    }

    #[test]
    fn simplification_fixes_earlier_layers() {
        let cp = prefix_of(EX_LAYERED);
        let a = cp.incoherent.sig.lookup("a").unwrap();
        let b = cp.incoherent.sig.lookup("b").unwrap();

        let s = simplify_wrt(&cp.incoherent, &Interpretation::from_iter([a]));
        assert_eq!(
            rule_lines(&s),
            names(&["c :- b, not c.", "d :- not c, not d.", "e :- d."])
        );

        let s = simplify_wrt(&cp.incoherent, &Interpretation::from_iter([b]));
        assert_eq!(
            rule_lines(&s),
            names(&["c :- not c.", "d :- a, not c, not d.", "e :- d."])
        );

        let s = simplify_wrt(&cp.incoherent, &Interpretation::empty());
        assert_eq!(s.rules, cp.incoherent.rules);
    }

    #[test]
    fn true_head_atoms_absorb_their_rules() {
        let p = parse_program("a | b :- c. :- d.").unwrap();
        let a = p.sig.lookup("a").unwrap();
        let b = p.sig.lookup("b").unwrap();
        let s = simplify_wrt(&p, &Interpretation::from_iter([a]));
        assert_eq!(rule_lines(&s), names(&["b :- c.", ":- d."]));
        let s = simplify_wrt(&p, &Interpretation::from_iter([a, b]));
        assert_eq!(rule_lines(&s), names(&[":- d."]));
    }

    #[test]
    fn factored_rewriting_emits_fewer_rules() {
        let p = parse_program(EX_LAYERED).unwrap();
        let full = build_split(&p);
        let fast = build_split_optimized(&p);
        assert!(
            fast.program.rules.len() < full.program.rules.len(),
            "{} !< {}",
            fast.program.rules.len(),
            full.program.rules.len()
        );
        assert_eq!(fast.weak_constraints.len(), full.weak_constraints.len());
        // both rewritings prefer the same relaxed model
        assert_eq!(projections(&fast), projections(&full));
    }

    #[test]
    fn factored_rewriting_matches_full_when_prefix_is_empty() {
        let p = parse_program("c :- not c.").unwrap();
        let full = build_split(&p);
        let fast = build_split_optimized(&p);
        assert_eq!(serialize(&fast, Dialect::Native), serialize(&full, Dialect::Native));
    }
}
