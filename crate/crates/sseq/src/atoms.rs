//! Atom identities and the signature (interning table).
//!
//! Every atom lives in a [`Signature`] and is referred to by a compact
//! [`AtomId`]. A signature only ever grows: transformations clone the input
//! signature and append, so an id minted for a base program stays valid (and
//! means the same atom) in every extension. Interpretations can therefore be
//! carried upward through a pipeline without remapping.
//!
//! Atoms come in five kinds. `Objective` atoms are the ones users write.
//! `ConstraintHead` atoms are minted when a hard constraint is rewritten into
//! an ordinary rule. The remaining kinds are generated by the program
//! transformations: `Belief` atoms (printed `k_x`, pretty-printed `K(x)`)
//! assert that an atom is believed, `HeadWitness` atoms (`lambda_*`) mark
//! which head disjunct a rule derives, and `GapMarker` atoms (`gamma_*`) flag
//! atoms that are believed but not true.

use std::collections::HashMap;
use std::fmt;

/// Prefixes of generated atom names. Input programs may not use them.
pub const RESERVED_PREFIXES: [&str; 4] = ["k_", "lambda_", "gamma_", "cstr_"];

/// Index of an atom in its [`Signature`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AtomId(pub u32);

impl AtomId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// What an atom is for. Everything except `Objective` is machine-made.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AtomKind {
    /// A plain atom from the input program.
    Objective,
    /// Head atom minted while rewriting a hard constraint into a rule.
    ConstraintHead(u32),
    /// Belief atom for a program atom: `k_x` says "x is believed".
    Belief(AtomId),
    /// Witness that a particular rule derived a particular head disjunct.
    HeadWitness { rule: u32, pos: u32 },
    /// Marker that a program atom is believed but not true.
    GapMarker(AtomId),
}

impl AtomKind {
    /// Program atoms are the ones semantics is judged over: objective atoms
    /// plus constraint heads. Belief/witness/gap-marker atoms are auxiliary.
    pub fn is_program_atom(self) -> bool {
        matches!(self, AtomKind::Objective | AtomKind::ConstraintHead(_))
    }
}

#[derive(Clone, Debug)]
struct AtomInfo {
    name: String,
    kind: AtomKind,
}

/// Interning table mapping atom names to ids. Append-only.
#[derive(Clone, Default, Debug)]
pub struct Signature {
    atoms: Vec<AtomInfo>,
    by_name: HashMap<String, AtomId>,
    constraint_heads: u32,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = AtomId> {
        (0..self.atoms.len() as u32).map(AtomId)
    }

    pub fn name(&self, a: AtomId) -> &str {
        &self.atoms[a.index()].name
    }

    pub fn kind(&self, a: AtomId) -> AtomKind {
        self.atoms[a.index()].kind
    }

    pub fn lookup(&self, name: &str) -> Option<AtomId> {
        self.by_name.get(name).copied()
    }

    /// Ids of all program atoms (objective + constraint heads), ascending.
    pub fn program_atoms(&self) -> Vec<AtomId> {
        self.ids()
            .filter(|a| self.kind(*a).is_program_atom())
            .collect()
    }

    fn push(&mut self, name: String, kind: AtomKind) -> AtomId {
        debug_assert!(!self.by_name.contains_key(&name), "duplicate atom {name}");
        let id = AtomId(self.atoms.len() as u32);
        self.by_name.insert(name.clone(), id);
        self.atoms.push(AtomInfo { name, kind });
        id
    }

    /// Intern an objective atom by name, reusing an existing id.
    pub fn intern_objective(&mut self, name: &str) -> AtomId {
        if let Some(id) = self.lookup(name) {
            return id;
        }
        self.push(name.to_string(), AtomKind::Objective)
    }

    /// Mint a fresh head atom for a rewritten hard constraint.
    pub fn fresh_constraint_head(&mut self) -> AtomId {
        loop {
            self.constraint_heads += 1;
            let name = format!("cstr_{}", self.constraint_heads);
            if self.lookup(&name).is_none() {
                let n = self.constraint_heads;
                return self.push(name, AtomKind::ConstraintHead(n));
            }
        }
    }

    /// Belief atom for a program atom, if already interned.
    pub fn belief_of(&self, a: AtomId) -> Option<AtomId> {
        self.lookup(&format!("k_{}", self.name(a)))
    }

    /// Intern the belief atom `k_a` for a program atom.
    pub fn ensure_belief(&mut self, a: AtomId) -> AtomId {
        debug_assert!(self.kind(a).is_program_atom(), "belief of auxiliary atom");
        let name = format!("k_{}", self.name(a));
        if let Some(id) = self.lookup(&name) {
            return id;
        }
        self.push(name, AtomKind::Belief(a))
    }

    /// Intern belief atoms for every program atom, in ascending id order.
    /// Idempotent, and deterministic given the program-atom block.
    pub fn ensure_all_beliefs(&mut self) {
        for a in self.program_atoms() {
            self.ensure_belief(a);
        }
    }

    /// Gap-marker atom for a program atom, if already interned.
    pub fn gap_marker_of(&self, a: AtomId) -> Option<AtomId> {
        self.lookup(&format!("gamma_{}", self.name(a)))
    }

    /// Intern the gap marker `gamma_a` for a program atom.
    pub fn ensure_gap_marker(&mut self, a: AtomId) -> AtomId {
        debug_assert!(self.kind(a).is_program_atom(), "marker of auxiliary atom");
        let name = format!("gamma_{}", self.name(a));
        if let Some(id) = self.lookup(&name) {
            return id;
        }
        self.push(name, AtomKind::GapMarker(a))
    }

    /// Mint the witness atom for head position `pos` of rule `rule`
    /// (both 0-based internally; names are 1-based for readability).
    pub fn fresh_head_witness(&mut self, rule: usize, pos: usize) -> AtomId {
        let name = format!("lambda_r{}_{}", rule + 1, pos + 1);
        debug_assert!(self.lookup(&name).is_none(), "witness {name} exists");
        self.push(
            name,
            AtomKind::HeadWitness {
                rule: rule as u32,
                pos: pos as u32,
            },
        )
    }

    /// For a belief atom, the program atom it believes in.
    pub fn believed_atom(&self, a: AtomId) -> Option<AtomId> {
        match self.kind(a) {
            AtomKind::Belief(b) => Some(b),
            _ => None,
        }
    }

    /// Display an atom for model output: belief atoms as `K(x)`.
    pub fn pretty(&self, a: AtomId) -> String {
        match self.kind(a) {
            AtomKind::Belief(b) => format!("K({})", self.name(b)),
            _ => self.name(a).to_string(),
        }
    }

    /// Sort key that puts `x` before `K(x)` and orders by underlying name.
    pub fn pretty_sort_key(&self, a: AtomId) -> (String, u8) {
        match self.kind(a) {
            AtomKind::Belief(b) => (self.name(b).to_string(), 1),
            _ => (self.name(a).to_string(), 0),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.ids().map(|a| self.name(a)).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Does a name start with one of the generated-atom prefixes?
pub fn has_reserved_prefix(name: &str) -> bool {
    RESERVED_PREFIXES.iter().any(|p| name.starts_with(p))
}
