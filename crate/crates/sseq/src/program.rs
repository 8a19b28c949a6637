//! Ground disjunctive programs: rules, weak constraints, interpretations.
//!
//! A [`Rule`] is `h1 | ... | hl :- b1, ..., bm, not c1, ..., not cn.` with
//! set semantics on all three parts. An empty head makes the rule a hard
//! constraint; an empty body makes it a fact. A [`Program`] owns its
//! [`Signature`] together with a rule sequence (duplicates are kept — they
//! are harmless semantically and keep transformation bookkeeping exact).
//!
//! [`WeakConstraint`]s (`:~ body. [w@l]`) never derive anything; they charge
//! `w` at priority level `l` when their body holds. A [`WeightedProgram`]
//! bundles a program with its weak constraints.

use crate::atoms::{AtomId, Signature};
use std::collections::BTreeSet;
use std::fmt;

/// One ground disjunctive rule. All parts are sets (duplicates merged).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Rule {
    pub head: BTreeSet<AtomId>,
    pub pos_body: BTreeSet<AtomId>,
    pub neg_body: BTreeSet<AtomId>,
}

impl Rule {
    pub fn new(
        head: impl IntoIterator<Item = AtomId>,
        pos: impl IntoIterator<Item = AtomId>,
        neg: impl IntoIterator<Item = AtomId>,
    ) -> Self {
        Rule {
            head: head.into_iter().collect(),
            pos_body: pos.into_iter().collect(),
            neg_body: neg.into_iter().collect(),
        }
    }

    pub fn fact(a: AtomId) -> Self {
        Rule::new([a], [], [])
    }

    /// Hard constraint `:- body` (empty head).
    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    pub fn is_fact(&self) -> bool {
        !self.head.is_empty() && self.pos_body.is_empty() && self.neg_body.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.neg_body.is_empty()
    }

    /// Every atom occurring in the rule.
    pub fn atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.head
            .iter()
            .chain(self.pos_body.iter())
            .chain(self.neg_body.iter())
            .copied()
    }

    /// Classical satisfaction: if the body holds, some head atom is true.
    /// A constraint with a satisfied body is violated.
    pub fn satisfied_by(&self, interp: &Interpretation) -> bool {
        let body_holds = self.pos_body.iter().all(|a| interp.contains(*a))
            && self.neg_body.iter().all(|a| !interp.contains(*a));
        !body_holds || self.head.iter().any(|a| interp.contains(*a))
    }
}

/// A program: signature plus rule sequence.
#[derive(Clone, Debug, Default)]
pub struct Program {
    pub sig: Signature,
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn new(sig: Signature) -> Self {
        Program { sig, rules: Vec::new() }
    }

    /// Atoms occurring in some rule, ascending by id.
    pub fn occurring_atoms(&self) -> BTreeSet<AtomId> {
        self.rules.iter().flat_map(|r| r.atoms()).collect()
    }

    /// The atom universe of the program: occurring atoms plus everything
    /// declared in the signature as a program atom.
    pub fn universe(&self) -> BTreeSet<AtomId> {
        let mut u = self.occurring_atoms();
        u.extend(self.sig.program_atoms());
        u
    }

    pub fn is_positive(&self) -> bool {
        self.rules.iter().all(Rule::is_positive)
    }

    pub fn has_constraints(&self) -> bool {
        self.rules.iter().any(Rule::is_constraint)
    }

    /// Clone with belief atoms interned for every program atom. The rules
    /// are unchanged; only the signature grows (deterministically).
    pub fn with_beliefs(&self) -> Program {
        let mut p = self.clone();
        p.sig.ensure_all_beliefs();
        p
    }
}

/// A set of atoms, ordered and hashable. Comparison is by cardinality first,
/// then lexicographically by atom id — the canonical model order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Interpretation(pub BTreeSet<AtomId>);

impl Interpretation {
    pub fn empty() -> Self {
        Interpretation(BTreeSet::new())
    }

    pub fn from_iter(atoms: impl IntoIterator<Item = AtomId>) -> Self {
        Interpretation(atoms.into_iter().collect())
    }

    pub fn contains(&self, a: AtomId) -> bool {
        self.0.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.0.iter().copied()
    }

    pub fn insert(&mut self, a: AtomId) {
        self.0.insert(a);
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_strict_subset(&self, other: &Interpretation) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        Interpretation(self.0.union(&other.0).copied().collect())
    }

    pub fn intersect(&self, atoms: &BTreeSet<AtomId>) -> Interpretation {
        Interpretation(self.0.intersection(atoms).copied().collect())
    }

    /// Keep only atoms accepted by the predicate.
    pub fn retain_by(&self, mut keep: impl FnMut(AtomId) -> bool) -> Interpretation {
        Interpretation(self.0.iter().copied().filter(|a| keep(*a)).collect())
    }

    /// Render as `x K(y) ...` with atoms ordered by underlying name,
    /// objective before belief. Empty interpretation renders as `{}`.
    pub fn pretty(&self, sig: &Signature) -> String {
        if self.0.is_empty() {
            return "{}".to_string();
        }
        let mut parts: Vec<(String, u8, String)> = self
            .iter()
            .map(|a| {
                let (name, beliefy) = sig.pretty_sort_key(a);
                (name, beliefy, sig.pretty(a))
            })
            .collect();
        parts.sort();
        parts
            .into_iter()
            .map(|(_, _, s)| s)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Canonical model order: by cardinality, then lexicographic by atom ids.
impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|a| a.0.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// `:~ b1, ..., not c1, ... . [weight@level]`
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakConstraint {
    pub pos_body: BTreeSet<AtomId>,
    pub neg_body: BTreeSet<AtomId>,
    pub weight: u64,
    pub level: u64,
}

impl WeakConstraint {
    pub fn body_holds(&self, interp: &Interpretation) -> bool {
        self.pos_body.iter().all(|a| interp.contains(*a))
            && self.neg_body.iter().all(|a| !interp.contains(*a))
    }
}

/// A program together with its weak constraints.
#[derive(Clone, Debug, Default)]
pub struct WeightedProgram {
    pub program: Program,
    pub weak_constraints: Vec<WeakConstraint>,
}

impl WeightedProgram {
    pub fn plain(program: Program) -> Self {
        WeightedProgram { program, weak_constraints: Vec::new() }
    }

    /// Weak constraints at one level.
    pub fn at_level(&self, level: u64) -> impl Iterator<Item = &WeakConstraint> {
        self.weak_constraints.iter().filter(move |w| w.level == level)
    }

    pub fn max_level(&self) -> Option<u64> {
        self.weak_constraints.iter().map(|w| w.level).max()
    }
}

/// Rewrite every hard constraint `:- B` into `cstr_i :- B, not cstr_i` with
/// a fresh head atom, leaving other rules untouched. Rule order is kept.
pub fn desugar_constraints(p: &Program) -> Program {
    let mut out = Program::new(p.sig.clone());
    for r in &p.rules {
        if r.is_constraint() {
            let h = out.sig.fresh_constraint_head();
            let mut neg = r.neg_body.clone();
            neg.insert(h);
            out.rules.push(Rule::new([h], r.pos_body.iter().copied(), neg));
        } else {
            out.rules.push(r.clone());
        }
    }
    out
}
