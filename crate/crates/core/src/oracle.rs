//! Brute-force ground truth: full 2^n enumeration of tuples.
//!
//! Everything here is deliberately naive. It exists to verify the
//! counting engine, so it shares no machinery with it beyond the formula
//! types: clauses are evaluated tuple by tuple.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cnf::CnfFormula;
use crate::cube::Cube;
use crate::mask;

/// Variable cap for brute-force counting (cost 2^n · m).
pub const BRUTE_FORCE_VAR_CAP: u32 = 24;

/// Variable cap for materialized truth tables and cover lists.
pub const TABLE_VAR_CAP: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("brute-force enumeration refused: n = {n} exceeds cap {cap}")]
    TooManyVariables { n: u32, cap: u32 },
}

fn check_cap(n: u32, cap: u32) -> Result<(), OracleError> {
    if n > cap {
        return Err(OracleError::TooManyVariables { n, cap });
    }
    Ok(())
}

/// Renders tuple `v` as its bit string, x1 first: `format_tuple(2, 3)`
/// is `"010"`.
pub fn format_tuple(v: u64, n: u32) -> String {
    let mut s = String::with_capacity(n as usize);
    for var in 1..=n {
        let bit = v & mask::bit_for_var(n, var) != 0;
        s.push(if bit { '1' } else { '0' });
    }
    s
}

/// Counts tuples satisfying every clause, by enumerating all 2^n tuples.
pub fn brute_force_models(f: &CnfFormula) -> Result<u64, OracleError> {
    check_cap(f.num_vars(), BRUTE_FORCE_VAR_CAP)?;
    let n = f.num_vars();
    let masks: Vec<(u64, u64)> = f
        .clauses()
        .iter()
        .map(|c| mask::clause_masks(c, n))
        .collect();
    let mut models = 0u64;
    for v in 0..(1u64 << n) {
        if masks
            .iter()
            .all(|&(pos, neg)| !mask::clause_false_at(pos, neg, v))
        {
            models += 1;
        }
    }
    Ok(models)
}

/// Counts tuples falsifying at least one clause, by direct enumeration.
pub fn brute_force_falsifying(f: &CnfFormula) -> Result<u64, OracleError> {
    check_cap(f.num_vars(), BRUTE_FORCE_VAR_CAP)?;
    let n = f.num_vars();
    let masks: Vec<(u64, u64)> = f
        .clauses()
        .iter()
        .map(|c| mask::clause_masks(c, n))
        .collect();
    let mut falsifying = 0u64;
    for v in 0..(1u64 << n) {
        if masks
            .iter()
            .any(|&(pos, neg)| mask::clause_false_at(pos, neg, v))
        {
            falsifying += 1;
        }
    }
    Ok(falsifying)
}

/// One row of a truth table: the assignment, the value of each clause,
/// and the value of the whole formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub assignment: u64,
    pub clause_values: Vec<bool>,
    pub formula_value: bool,
}

/// A full per-clause truth table, rows in ascending binary order with x1
/// as the most significant bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub n: u32,
    pub num_clauses: usize,
    pub rows: Vec<TableRow>,
}

impl TruthTable {
    /// CSV rendering with header `x1,...,xn,D1,...,Dm,f` and 0/1 cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut header: Vec<String> = (1..=self.n).map(|i| format!("x{i}")).collect();
        header.extend((1..=self.num_clauses).map(|i| format!("D{i}")));
        header.push("f".to_string());
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut cells: Vec<String> = (1..=self.n)
                .map(|var| {
                    let bit = row.assignment & mask::bit_for_var(self.n, var) != 0;
                    if bit { "1" } else { "0" }.to_string()
                })
                .collect();
            cells.extend(
                row.clause_values
                    .iter()
                    .map(|&b| if b { "1" } else { "0" }.to_string()),
            );
            cells.push(if row.formula_value { "1" } else { "0" }.to_string());
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

/// Materializes the per-clause truth table of the formula.
pub fn truth_table(f: &CnfFormula) -> Result<TruthTable, OracleError> {
    check_cap(f.num_vars(), TABLE_VAR_CAP)?;
    let n = f.num_vars();
    let masks: Vec<(u64, u64)> = f
        .clauses()
        .iter()
        .map(|c| mask::clause_masks(c, n))
        .collect();
    let mut rows = Vec::with_capacity(1usize << n);
    for v in 0..(1u64 << n) {
        let clause_values: Vec<bool> = masks
            .iter()
            .map(|&(pos, neg)| !mask::clause_false_at(pos, neg, v))
            .collect();
        let formula_value = clause_values.iter().all(|&b| b);
        rows.push(TableRow {
            assignment: v,
            clause_values,
            formula_value,
        });
    }
    Ok(TruthTable {
        n,
        num_clauses: f.num_clauses(),
        rows,
    })
}

/// All tuples on which the cube is true, ascending. The list has length
/// 2^(n−r): one tuple per assignment of the free variables.
pub fn cube_cover_tuples(cube: &Cube, n: u32) -> Result<Vec<u64>, OracleError> {
    check_cap(n, TABLE_VAR_CAP)?;
    assert!(
        cube.width() as u32 <= n,
        "cube wider than the variable count"
    );
    let (pos, neg) = mask::cube_masks(cube, n);
    let mut tuples = Vec::new();
    for v in 0..(1u64 << n) {
        if mask::cube_covers(pos, neg, v) {
            tuples.push(v);
        }
    }
    Ok(tuples)
}
