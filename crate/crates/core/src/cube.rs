//! Cubes: elementary conjunctions of distinct, pairwise non-contrary
//! literals. A cube of width r over n variables is true on exactly
//! 2^(n−r) tuples, one per assignment of its free variables.

use std::cmp::Ordering;
use std::fmt;

use crate::clause::{canonical_cmp, normalize_literals, Clause, LitsOutcome};
use crate::error::FormulaError;
use crate::lit::Literal;

/// A conjunction of distinct, pairwise non-contrary literals.
///
/// Literals are kept sorted by variable index. The empty cube (width 0)
/// is true on all 2^n tuples; it arises only from negating the empty
/// clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    lits: Vec<Literal>,
}

impl Cube {
    /// Builds a cube over variables `1..=n`, collapsing duplicate
    /// literals and sorting by variable. A contrary pair is an error:
    /// unlike a clause, the conjunction would be false everywhere and is
    /// not an elementary conjunction at all.
    pub fn new(lits: &[Literal], n: u32) -> Result<Self, FormulaError> {
        match normalize_literals(lits, n)? {
            LitsOutcome::Clean(lits) => Ok(Cube { lits }),
            LitsOutcome::Contrary(var) => Err(FormulaError::ContraryInCube { var }),
        }
    }

    /// The empty cube, true on every tuple.
    pub fn empty() -> Self {
        Cube { lits: Vec::new() }
    }

    /// Literals in ascending variable order.
    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    /// Width r: the number of literals.
    pub fn width(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    /// Number of free variables t = n − r.
    ///
    /// Panics if the cube is wider than `n`.
    pub fn free_count(&self, n: u32) -> u32 {
        let r = self.lits.len() as u32;
        assert!(r <= n, "cube width {r} exceeds variable count {n}");
        n - r
    }

    /// The polarity of `var` in this cube, or `None` if `var` is free.
    pub fn polarity_of(&self, var: u32) -> Option<bool> {
        self.lits
            .binary_search_by_key(&var, |l| l.var())
            .ok()
            .map(|i| self.lits[i].is_positive())
    }

    /// Negates the cube into the clause that is false exactly where the
    /// cube is true. Inverse of [`Clause::negate`].
    pub fn negate(&self) -> Clause {
        Clause::from_sorted(self.lits.iter().map(|l| l.negate()).collect())
    }

    pub(crate) fn from_sorted(lits: Vec<Literal>) -> Self {
        Cube { lits }
    }
}

impl PartialOrd for Cube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cube {
    /// Canonical cube order, same comparison as clauses: lexicographic
    /// with positive literals ordering before negative ones.
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.lits, &other.lits)
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lits.is_empty() {
            return write!(f, "⊤");
        }
        for (i, lit) in self.lits.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}
