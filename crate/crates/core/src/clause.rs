//! Clauses: disjunctions of distinct, pairwise non-contrary literals.

use std::cmp::Ordering;
use std::fmt;

use crate::cube::Cube;
use crate::error::FormulaError;
use crate::lit::Literal;

/// Outcome of normalizing a raw literal list.
pub(crate) enum LitsOutcome {
    /// Sorted by variable, duplicates collapsed, no contrary pair.
    Clean(Vec<Literal>),
    /// A contrary pair was present on this variable.
    Contrary(u32),
}

/// Sorts literals by variable, collapses exact duplicates, and detects
/// contrary pairs. Rejects variables outside `1..=n`.
pub(crate) fn normalize_literals(lits: &[Literal], n: u32) -> Result<LitsOutcome, FormulaError> {
    for lit in lits {
        if lit.var() > n {
            return Err(FormulaError::VarOutOfRange { var: lit.var(), n });
        }
    }
    let mut sorted: Vec<Literal> = lits.to_vec();
    sorted.sort_by_key(|l| (l.var(), l.is_negative()));
    sorted.dedup();
    for pair in sorted.windows(2) {
        if pair[0].is_contrary(pair[1]) {
            return Ok(LitsOutcome::Contrary(pair[0].var()));
        }
    }
    Ok(LitsOutcome::Clean(sorted))
}

/// Lexicographic comparison of literal sequences under the canonical
/// literal key (positive before negative, then variable index). This is
/// the clause and cube order used for normalization and DIMACS output.
pub(crate) fn canonical_cmp(a: &[Literal], b: &[Literal]) -> Ordering {
    let ka = a.iter().map(|l| l.canonical_key());
    let kb = b.iter().map(|l| l.canonical_key());
    ka.cmp(kb)
}

/// A disjunction of distinct, pairwise non-contrary literals.
///
/// Literals are kept sorted by variable index; no variable occurs twice.
/// The empty clause (false on every tuple) is representable, but only
/// arises from degenerate input such as a bare `0` line in DIMACS.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    lits: Vec<Literal>,
}

/// Result of building a clause from raw literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseBuild {
    /// A well-formed clause.
    Clause(Clause),
    /// The literals contained a contrary pair: the disjunction is true on
    /// every tuple and must be dropped by the caller.
    Tautology,
}

impl Clause {
    /// Builds a clause over variables `1..=n`, collapsing duplicate
    /// literals and sorting by variable. A contrary pair yields
    /// [`ClauseBuild::Tautology`].
    pub fn build(lits: &[Literal], n: u32) -> Result<ClauseBuild, FormulaError> {
        match normalize_literals(lits, n)? {
            LitsOutcome::Clean(lits) => Ok(ClauseBuild::Clause(Clause { lits })),
            LitsOutcome::Contrary(_) => Ok(ClauseBuild::Tautology),
        }
    }

    /// The empty clause, false on every tuple.
    pub fn empty() -> Self {
        Clause { lits: Vec::new() }
    }

    /// Literals in ascending variable order.
    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    /// Number of literals.
    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    /// Negates the clause into the cube that is true exactly where the
    /// clause is false: same variables, every polarity flipped.
    pub fn negate(&self) -> Cube {
        Cube::from_sorted(self.lits.iter().map(|l| l.negate()).collect())
    }

    pub(crate) fn from_sorted(lits: Vec<Literal>) -> Self {
        Clause { lits }
    }
}

impl PartialOrd for Clause {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Clause {
    /// Canonical clause order: see [`canonical_cmp`].
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.lits, &other.lits)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lits.is_empty() {
            return write!(f, "⊥");
        }
        for (i, lit) in self.lits.iter().enumerate() {
            if i > 0 {
                write!(f, " ∨ ")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}
