//! Exact falsifying-tuple counting for CNF formulas.
//!
//! Negating each clause of a CNF formula yields a disjunction of cubes,
//! and the formula is satisfiable exactly when those cubes cover fewer
//! than 2^n of the 2^n assignment tuples. This crate decides
//! satisfiability and counts models by computing that cover size R
//! exactly — never by searching for a satisfying assignment.
//!
//! Two regimes drive the cost:
//!
//! * **Closed form.** When every pair of cubes is *alternative* (shares
//!   a variable with opposite polarity), covers are pairwise disjoint
//!   and R is the plain sum of per-cube counts 2^(n−r).
//! * **Inclusion–exclusion.** Otherwise the cubes split into connected
//!   components of the non-alternative graph; each component is summed
//!   by subset inclusion–exclusion with clashing subtrees pruned, and
//!   the per-component sums add up.
//!
//! The crate also carries brute-force oracles for cross-checking,
//! structure analysis that predicts the enumeration cost, a DIMACS
//! parser and writer, a seeded instance generator, and the `tallysat`
//! command-line binary.
//!
//! ```
//! use tallysat::{CnfFormula, count_falsifying};
//!
//! // (x1 ∨ ¬x2)(x2 ∨ ¬x3)(¬x1 ∨ x3) over n = 3
//! let f = CnfFormula::from_dimacs_lits(3, &[vec![1, -2], vec![2, -3], vec![-1, 3]]).unwrap();
//! let report = count_falsifying(&f).unwrap();
//! assert_eq!(report.falsifying.to_string(), "6");
//! assert_eq!(report.models.to_string(), "2");
//! assert!(report.satisfiable);
//! ```

pub mod analysis;
pub mod clause;
pub mod cnf;
pub mod counting;
pub mod cube;
pub mod dimacs;
pub mod dnf;
pub mod error;
pub mod generator;
pub mod lit;
mod mask;
pub mod oracle;

pub use analysis::{
    analyze_structure, are_alternative, nonalternative_components, StructureReport,
};
pub use clause::{Clause, ClauseBuild};
pub use cnf::CnfFormula;
pub use counting::{
    count_falsifying, count_falsifying_with, cube_tuple_count, decide, merge_cubes, CountError,
    CountOptions, CountPath, CountReport, MergeResult, DEFAULT_TERM_BUDGET,
};
pub use cube::Cube;
pub use dimacs::{parse_dimacs, write_dimacs, DimacsError, ParsedCnf};
pub use dnf::{DnfCubes, DEFAULT_EXPANSION_CAP};
pub use error::FormulaError;
pub use generator::{generate, GenError, GenMode, GenSpec};
pub use lit::Literal;
pub use oracle::{
    brute_force_falsifying, brute_force_models, cube_cover_tuples, truth_table, OracleError,
    TableRow, TruthTable, BRUTE_FORCE_VAR_CAP, TABLE_VAR_CAP,
};
