//! Exhaustive reference engine over bitmask interpretations.
//!
//! Everything downstream trusts this module, so it favors directness over
//! cleverness: rules compile to three 256-bit masks, models are found by a
//! depth-first search (lowest atom first, false before true) with constraint
//! propagation, and minimal models come from an exact find-minimize-block
//! loop. Classical model *enumeration* stays brute force and is gated by
//! `max_atoms`; the search-based operations share the same gate on the
//! program handed to them, while the hard engine limit is [`MAX_WIDTH`]
//! atoms in the signature.
//!
//! Output sets are `BTreeSet<Interpretation>`, so iteration order is always
//! cardinality-then-lexicographic and runs are reproducible.

use crate::atoms::AtomId;
use crate::program::{Interpretation, Program, Rule, WeightedProgram};
use std::collections::BTreeSet;

/// Hard engine limit: atoms per signature representable in one mask.
pub const MAX_WIDTH: usize = 256;
const WORDS: usize = 4;
type Mask = [u64; WORDS];

const ZERO: Mask = [0; WORDS];

#[inline]
fn bit(i: u32) -> (usize, u64) {
    ((i / 64) as usize, 1u64 << (i % 64))
}

#[inline]
fn get(m: &Mask, i: u32) -> bool {
    let (w, b) = bit(i);
    m[w] & b != 0
}

#[inline]
fn set(m: &mut Mask, i: u32) {
    let (w, b) = bit(i);
    m[w] |= b;
}

#[inline]
fn and(a: &Mask, b: &Mask) -> Mask {
    std::array::from_fn(|i| a[i] & b[i])
}

#[inline]
fn and_not(a: &Mask, b: &Mask) -> Mask {
    std::array::from_fn(|i| a[i] & !b[i])
}

#[inline]
fn or(a: &Mask, b: &Mask) -> Mask {
    std::array::from_fn(|i| a[i] | b[i])
}

#[inline]
fn is_zero(m: &Mask) -> bool {
    m.iter().all(|&w| w == 0)
}

#[inline]
fn subset(a: &Mask, b: &Mask) -> bool {
    is_zero(&and_not(a, b))
}

#[inline]
fn intersects(a: &Mask, b: &Mask) -> bool {
    !is_zero(&and(a, b))
}

#[inline]
fn popcount(m: &Mask) -> u32 {
    m.iter().map(|w| w.count_ones()).sum()
}

#[inline]
fn first_bit(m: &Mask) -> Option<u32> {
    for (w, &word) in m.iter().enumerate() {
        if word != 0 {
            return Some(w as u32 * 64 + word.trailing_zeros());
        }
    }
    None
}

fn iter_bits(m: &Mask) -> impl Iterator<Item = u32> + '_ {
    m.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let i = word.trailing_zeros();
                word &= word - 1;
                Some(w as u32 * 64 + i)
            }
        })
    })
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("program has {atoms} atoms; the enumeration guard is {max} (raise --max-atoms)")]
    AtomGuard { atoms: usize, max: usize },
    #[error("signature has {atoms} atoms; the engine is limited to {max}")]
    Width { atoms: usize, max: usize },
}

#[derive(Clone, Copy, Debug)]
struct CRule {
    head: Mask,
    pos: Mask,
    neg: Mask,
}

struct Compiled {
    rules: Vec<CRule>,
    /// Atom ids the search branches on, ascending.
    vars: Vec<u32>,
    universe: Mask,
}

fn mask_of(atoms: impl IntoIterator<Item = AtomId>) -> Mask {
    let mut m = ZERO;
    for a in atoms {
        set(&mut m, a.0);
    }
    m
}

fn compile(p: &Program) -> Result<Compiled, SolveError> {
    if p.sig.len() > MAX_WIDTH {
        return Err(SolveError::Width { atoms: p.sig.len(), max: MAX_WIDTH });
    }
    let vars: Vec<u32> = p.universe().into_iter().map(|a| a.0).collect();
    let mut universe = ZERO;
    for &v in &vars {
        set(&mut universe, v);
    }
    let rules = p
        .rules
        .iter()
        .map(|r| CRule {
            head: mask_of(r.head.iter().copied()),
            pos: mask_of(r.pos_body.iter().copied()),
            neg: mask_of(r.neg_body.iter().copied()),
        })
        .collect();
    Ok(Compiled { rules, vars, universe })
}

/// Propagate forced assignments until fixpoint. `nat` clauses demand that
/// not all of their atoms be true. Returns false on conflict.
fn propagate(c: &Compiled, nat: &[Mask], assigned: &mut Mask, value: &mut Mask) -> bool {
    loop {
        let mut changed = false;
        let tru = and(assigned, value);
        let fls = and_not(assigned, value);
        let unassigned = and_not(&c.universe, assigned);
        for r in &c.rules {
            if intersects(&r.head, &tru) || intersects(&r.pos, &fls) || intersects(&r.neg, &tru) {
                continue; // satisfied or body blocked
            }
            let pos_sat = subset(&r.pos, &tru);
            let neg_sat = subset(&r.neg, &fls);
            if pos_sat && neg_sat {
                // body fires, no head atom true yet
                let open = and(&r.head, &unassigned);
                match popcount(&open) {
                    0 => return false,
                    1 => {
                        let i = first_bit(&open).unwrap();
                        set(assigned, i);
                        set(value, i);
                        changed = true;
                    }
                    _ => {}
                }
            } else if is_zero(&and(&r.head, &unassigned)) {
                // head fully false: the body must end up blocked
                let pos_open = and(&r.pos, &unassigned);
                let neg_open = and(&r.neg, &unassigned);
                if popcount(&pos_open) + popcount(&neg_open) == 1 {
                    if let Some(i) = first_bit(&pos_open) {
                        set(assigned, i); // force false
                    } else {
                        let i = first_bit(&neg_open).unwrap();
                        set(assigned, i);
                        set(value, i); // force true to block the body
                    }
                    changed = true;
                }
            }
        }
        for b in nat {
            if subset(b, &tru) {
                return false;
            }
            if !intersects(b, &fls) {
                let open = and(b, &unassigned);
                if popcount(&open) == 1 {
                    let i = first_bit(&open).unwrap();
                    set(assigned, i); // force false
                    changed = true;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// First model under (lowest-atom, false-first) branching, or None.
fn dpll(c: &Compiled, nat: &[Mask], mut assigned: Mask, mut value: Mask) -> Option<Mask> {
    if !propagate(c, nat, &mut assigned, &mut value) {
        return None;
    }
    let branch = c.vars.iter().copied().find(|&v| !get(&assigned, v));
    let Some(v) = branch else {
        return Some(and(&value, &c.universe));
    };
    let mut a = assigned;
    set(&mut a, v); // false first
    if let Some(m) = dpll(c, nat, a, value) {
        return Some(m);
    }
    let mut a = assigned;
    let mut val = value;
    set(&mut a, v);
    set(&mut val, v);
    dpll(c, nat, a, val)
}

/// Exact minimal models: find a model avoiding the supersets of everything
/// found so far, shrink it to a minimal one, repeat until unsatisfiable.
/// Minimal models form an antichain, so each round discovers a new member.
fn minimal_models_inner(c: &Compiled) -> Vec<Mask> {
    // non-universe signature bits start out assigned-false
    let base_assigned = complement_within(&c.universe);
    let mut found: Vec<Mask> = Vec::new();
    loop {
        let Some(mut m) = dpll(c, &found, base_assigned, ZERO) else {
            return found;
        };
        loop {
            // strict submodel: atoms outside m false, some atom of m false
            let assigned = or(&base_assigned, &and_not(&c.universe, &m));
            match dpll(c, &[m], assigned, ZERO) {
                Some(smaller) => m = smaller,
                None => break,
            }
        }
        found.push(m);
    }
}

/// All bits except the given mask (so they read as assigned-false).
fn complement_within(universe: &Mask) -> Mask {
    std::array::from_fn(|i| !universe[i])
}

fn to_interp(m: &Mask) -> Interpretation {
    Interpretation::from_iter(iter_bits(m).map(AtomId))
}

/// Drop rules whose negative body meets `i`; strip negative bodies of the
/// rest.
pub fn gl_reduct(p: &Program, i: &Interpretation) -> Program {
    let mut out = Program::new(p.sig.clone());
    for r in &p.rules {
        if r.neg_body.iter().any(|&a| i.contains(a)) {
            continue;
        }
        out.rules.push(Rule::new(
            r.head.iter().copied(),
            r.pos_body.iter().copied(),
            [],
        ));
    }
    out
}

/// Sum of weights of level-`level` weak constraints whose body holds in `m`.
pub fn penalty(wp: &WeightedProgram, m: &Interpretation, level: u64) -> u64 {
    wp.at_level(level)
        .filter(|w| w.body_holds(m))
        .map(|w| w.weight)
        .sum()
}

/// Penalties per level, highest level first — the dominance comparison key.
pub fn penalty_vector(wp: &WeightedProgram, m: &Interpretation) -> Vec<u64> {
    let top = wp.max_level().unwrap_or(0);
    (0..=top).rev().map(|l| penalty(wp, m, l)).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct RefSolver {
    /// Enumeration guard: programs with more atoms are refused, loudly.
    pub max_atoms: usize,
}

impl Default for RefSolver {
    fn default() -> Self {
        RefSolver { max_atoms: 24 }
    }
}

impl RefSolver {
    pub fn new(max_atoms: usize) -> Self {
        RefSolver { max_atoms }
    }

    /// Guarded only by the engine width; used on programs the pipeline
    /// generates itself after the input program passed the user guard.
    pub fn unguarded() -> Self {
        RefSolver { max_atoms: MAX_WIDTH }
    }

    fn guard(&self, p: &Program) -> Result<(), SolveError> {
        let atoms = p.universe().len();
        if atoms > self.max_atoms {
            return Err(SolveError::AtomGuard { atoms, max: self.max_atoms });
        }
        Ok(())
    }

    /// Check the atom guard without solving anything. Pipelines call this
    /// on the input program, then solve the programs they generate from it
    /// with an [`RefSolver::unguarded`] engine.
    pub fn admit(&self, p: &Program) -> Result<(), SolveError> {
        self.guard(p)
    }

    /// Every interpretation satisfying all rules, by full enumeration.
    pub fn classical_models(&self, p: &Program) -> Result<BTreeSet<Interpretation>, SolveError> {
        self.guard(p)?;
        let c = compile(p)?;
        let mut out = BTreeSet::new();
        let mut current = ZERO;
        enumerate(&c, 0, &mut current, &mut out);
        Ok(out)
    }

    /// Search-based satisfiability: is there any classical model?
    pub fn has_classical_model(&self, p: &Program) -> Result<bool, SolveError> {
        self.guard(p)?;
        let c = compile(p)?;
        Ok(dpll(&c, &[], complement_within(&c.universe), ZERO).is_some())
    }

    /// Subset-minimal classical models.
    pub fn minimal_models(&self, p: &Program) -> Result<BTreeSet<Interpretation>, SolveError> {
        self.guard(p)?;
        let c = compile(p)?;
        Ok(minimal_models_inner(&c).iter().map(to_interp).collect())
    }

    /// Interpretations that are minimal models of their own reduct. Empty
    /// means the program is incoherent.
    pub fn answer_sets(&self, p: &Program) -> Result<BTreeSet<Interpretation>, SolveError> {
        self.guard(p)?;
        let c = compile(p)?;
        let mut out = BTreeSet::new();
        for m in minimal_models_inner(&c) {
            // reduct at mask level: drop fired-negation rules, strip the rest
            let reduct: Vec<CRule> = c
                .rules
                .iter()
                .filter(|r| !intersects(&r.neg, &m))
                .map(|r| CRule { head: r.head, pos: r.pos, neg: ZERO })
                .collect();
            let rc = Compiled { rules: reduct, vars: c.vars.clone(), universe: c.universe };
            // m is a model of the reduct; is anything strictly inside it?
            let assigned = or(&complement_within(&c.universe), &and_not(&c.universe, &m));
            if dpll(&rc, &[m], assigned, ZERO).is_none() {
                out.insert(to_interp(&m));
            }
        }
        Ok(out)
    }

    /// Answer sets with a lexicographically minimal penalty vector
    /// (compared from the highest level down).
    pub fn optimal_answer_sets(
        &self,
        wp: &WeightedProgram,
    ) -> Result<BTreeSet<Interpretation>, SolveError> {
        let asets = self.answer_sets(&wp.program)?;
        let best = asets
            .iter()
            .map(|m| penalty_vector(wp, m))
            .min()
            .unwrap_or_default();
        Ok(asets
            .into_iter()
            .filter(|m| penalty_vector(wp, m) == best)
            .collect())
    }
}

fn enumerate(c: &Compiled, depth: usize, current: &mut Mask, out: &mut BTreeSet<Interpretation>) {
    if depth == c.vars.len() {
        let ok = c.rules.iter().all(|r| {
            let fired = subset(&r.pos, current) && !intersects(&r.neg, current);
            !fired || intersects(&r.head, current)
        });
        if ok {
            out.insert(to_interp(current));
        }
        return;
    }
    let v = c.vars[depth];
    enumerate(c, depth + 1, current, out);
    set(current, v);
    enumerate(c, depth + 1, current, out);
    let (w, b) = bit(v);
    current[w] &= !b;
}
