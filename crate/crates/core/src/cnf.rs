//! CNF formulas: conjunctions of clauses over a declared variable count.

use std::fmt;

use crate::clause::{Clause, ClauseBuild};
use crate::dnf::DnfCubes;
use crate::error::FormulaError;
use crate::lit::Literal;

/// A CNF formula D1 · D2 · … · Dm over variables x1..xn.
///
/// `n` comes from the declaration (e.g. the DIMACS header), not from the
/// largest index actually used: unused variables still contribute free
/// factors of 2 to tuple counts.
///
/// Formulas are normalized on construction: clauses are sorted into
/// canonical order and exact duplicates are removed. Tautological
/// clauses cannot occur here, [`Clause::build`] already filters them.
/// Structural equality on normalized formulas is therefore well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Builds a normalized formula. Fails if any clause names a variable
    /// above `n`.
    pub fn new(n: u32, clauses: Vec<Clause>) -> Result<Self, FormulaError> {
        for clause in &clauses {
            for lit in clause.literals() {
                if lit.var() > n {
                    return Err(FormulaError::VarOutOfRange { var: lit.var(), n });
                }
            }
        }
        Ok(Self::normalized(n, clauses))
    }

    fn normalized(n: u32, mut clauses: Vec<Clause>) -> Self {
        clauses.sort();
        clauses.dedup();
        CnfFormula { n, clauses }
    }

    /// Convenience constructor from DIMACS-style signed literal lists.
    /// Tautological clauses (contrary pair) are dropped; duplicates
    /// collapse under normalization.
    pub fn from_dimacs_lits(n: u32, clauses: &[Vec<i32>]) -> Result<Self, FormulaError> {
        let mut built = Vec::with_capacity(clauses.len());
        for codes in clauses {
            let lits: Vec<Literal> = codes.iter().map(|&c| Literal::from_dimacs(c)).collect();
            match Clause::build(&lits, n)? {
                ClauseBuild::Clause(c) => built.push(c),
                ClauseBuild::Tautology => {}
            }
        }
        Self::new(n, built)
    }

    /// Declared variable count.
    pub fn num_vars(&self) -> u32 {
        self.n
    }

    /// Clause count m after normalization.
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Clauses in canonical order.
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// True if some clause is empty, which forces falsity on every tuple.
    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    /// Negates the formula clause by clause into a disjunction of cubes:
    /// cube i is true exactly on the tuples falsifying clause i. Clause
    /// order is preserved.
    pub fn negate(&self) -> DnfCubes {
        DnfCubes::from_cubes_unchecked(self.n, self.clauses.iter().map(Clause::negate).collect())
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "⊤");
        }
        for (i, clause) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " · ")?;
            }
            write!(f, "({clause})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The running three-variable example (x1 ∨ ¬x2)(x2 ∨ ¬x3)(¬x1 ∨ x3).
    fn example_formula() -> CnfFormula {
        CnfFormula::from_dimacs_lits(3, &[vec![1, -2], vec![2, -3], vec![-1, 3]]).unwrap()
    }

    #[test]
    fn normalization_sorts_canonically() {
        let shuffled =
            CnfFormula::from_dimacs_lits(3, &[vec![-1, 3], vec![2, -3], vec![1, -2]]).unwrap();
        assert_eq!(shuffled, example_formula());
        let dimacs: Vec<Vec<i32>> = shuffled
            .clauses()
            .iter()
            .map(|c| c.literals().iter().map(|l| l.to_dimacs()).collect())
            .collect();
        assert_eq!(dimacs, vec![vec![1, -2], vec![2, -3], vec![-1, 3]]);
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = example_formula();
        let again = CnfFormula::new(f.num_vars(), f.clauses().to_vec()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn duplicate_clauses_removed() {
        let f = CnfFormula::from_dimacs_lits(2, &[vec![1, 2], vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(f.num_clauses(), 1);
    }

    #[test]
    fn tautologies_dropped_by_convenience_constructor() {
        let f = CnfFormula::from_dimacs_lits(1, &[vec![1, -1]]).unwrap();
        assert_eq!(f.num_clauses(), 0);
        assert_eq!(f.num_vars(), 1);
    }

    #[test]
    fn negation_of_running_example_yields_cubes_in_order() {
        let cubes = example_formula().negate();
        let rendered: Vec<String> = cubes.cubes().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, vec!["¬x1·x2", "¬x2·x3", "x1·¬x3"]);
    }

    #[test]
    fn negation_of_unit_chain() {
        // (¬x1)(¬x2)(¬x3 ∨ ¬x4) negates to x1, x2, x3·x4
        let f = CnfFormula::from_dimacs_lits(4, &[vec![-1], vec![-2], vec![-3, -4]]).unwrap();
        let cubes = f.negate();
        let rendered: Vec<String> = cubes.cubes().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, vec!["x1", "x2", "x3·x4"]);
    }

    #[test]
    fn empty_formula_negates_to_no_cubes() {
        let f = CnfFormula::new(3, vec![]).unwrap();
        assert!(f.negate().cubes().is_empty());
    }

    #[test]
    fn empty_clause_negates_to_empty_cube() {
        let f = CnfFormula::new(2, vec![Clause::empty()]).unwrap();
        assert!(f.has_empty_clause());
        let cubes = f.negate();
        assert_eq!(cubes.cubes().len(), 1);
        assert!(cubes.cubes()[0].is_empty());
    }

    #[test]
    fn var_above_n_rejected() {
        let err = CnfFormula::from_dimacs_lits(2, &[vec![3]]).unwrap_err();
        assert_eq!(err, FormulaError::VarOutOfRange { var: 3, n: 2 });
    }
}
