//! DIMACS CNF ingestion and canonical emission.
//!
//! Parsing accepts the common layout: optional comment lines starting
//! with `c`, one `p cnf <vars> <clauses>` header, then whitespace-
//! separated signed literals with `0` closing each clause (clauses may
//! span lines). The variable count always comes from the header, never
//! from the largest index seen. Writing is canonical: normalized clause
//! order, literals sorted by variable, single spaces, `0\n` per clause —
//! so `write ∘ parse ∘ write = write` byte-for-byte.

use thiserror::Error;

use crate::cnf::CnfFormula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("no \"p cnf\" header found before clause data")]
    MissingHeader,
    #[error("line {line}: second \"p cnf\" header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed header (expected \"p cnf <vars> <clauses>\")")]
    BadHeader { line: usize },
    #[error("line {line}: token \"{token}\" is not an integer")]
    NonIntegerToken { token: String, line: usize },
    #[error("line {line}: variable {var} exceeds the declared count {n}")]
    VarOutOfRange { var: u64, n: u32, line: usize },
}

/// A parsed file: the normalized formula plus what the header claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedCnf {
    pub formula: CnfFormula,
    /// Clause count declared in the header, which may differ from both
    /// the raw clause count and the normalized one.
    pub declared_clauses: usize,
    /// Non-fatal irregularities: clause-count mismatch, unterminated
    /// final clause.
    pub warnings: Vec<String>,
}

/// Parses DIMACS CNF text.
///
/// Tautological clauses are dropped, duplicate literals and clauses
/// collapsed; the declared clause count is preserved in the result so
/// callers can report it next to the effective one.
pub fn parse_dimacs(text: &str) -> Result<ParsedCnf, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader { line });
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            header = match fields.as_slice() {
                ["p", "cnf", vars, count] => {
                    let n: u32 = vars.parse().map_err(|_| DimacsError::BadHeader { line })?;
                    if n > i32::MAX as u32 {
                        return Err(DimacsError::BadHeader { line });
                    }
                    let m = count.parse().map_err(|_| DimacsError::BadHeader { line })?;
                    Some((n, m))
                }
                _ => return Err(DimacsError::BadHeader { line }),
            };
            continue;
        }
        let (n, _) = header.ok_or(DimacsError::MissingHeader)?;
        for token in trimmed.split_whitespace() {
            let code: i64 = token.parse().map_err(|_| DimacsError::NonIntegerToken {
                token: token.to_string(),
                line,
            })?;
            if code == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                let var = code.unsigned_abs();
                if var > n as u64 {
                    return Err(DimacsError::VarOutOfRange { var, n, line });
                }
                current.push(code as i32);
            }
        }
    }

    let (n, declared_clauses) = header.ok_or(DimacsError::MissingHeader)?;
    let mut warnings = Vec::new();
    if !current.is_empty() {
        warnings.push("final clause not terminated by 0".to_string());
        clauses.push(current);
    }
    if clauses.len() != declared_clauses {
        warnings.push(format!(
            "header declares {declared_clauses} clauses but {} appear",
            clauses.len()
        ));
    }
    let formula =
        CnfFormula::from_dimacs_lits(n, &clauses).expect("literal ranges checked during parse");
    Ok(ParsedCnf {
        formula,
        declared_clauses,
        warnings,
    })
}

/// Renders a formula as canonical DIMACS bytes.
pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for clause in f.clauses() {
        for lit in clause.literals() {
            out.push_str(&lit.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "p cnf 3 3\n1 -2 0\n2 -3 0\n-1 3 0\n";

    #[test]
    fn parses_the_running_example() {
        let parsed = parse_dimacs(EXAMPLE).unwrap();
        let expected =
            CnfFormula::from_dimacs_lits(3, &[vec![1, -2], vec![2, -3], vec![-1, 3]]).unwrap();
        assert_eq!(parsed.formula, expected);
        assert_eq!(parsed.declared_clauses, 3);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn writes_the_running_example_canonically() {
        let f = CnfFormula::from_dimacs_lits(3, &[vec![-1, 3], vec![2, -3], vec![1, -2]]).unwrap();
        assert_eq!(write_dimacs(&f), EXAMPLE);
    }

    #[test]
    fn tautology_normalizes_away() {
        let parsed = parse_dimacs("p cnf 1 1\n1 -1 0\n").unwrap();
        assert_eq!(parsed.formula.num_vars(), 1);
        assert_eq!(parsed.formula.num_clauses(), 0);
        assert_eq!(parsed.declared_clauses, 1);
        // The raw clause count matches the header; normalization losses
        // are not a mismatch.
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn parses_the_chain_instance() {
        let parsed = parse_dimacs("p cnf 4 3\n-1 0\n-2 0\n-3 -4 0\n").unwrap();
        let cubes: Vec<String> = parsed
            .formula
            .negate()
            .cubes()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(cubes, vec!["x1", "x2", "x3·x4"]);
    }

    #[test]
    fn clauses_span_lines_and_comments_interleave() {
        let text = "c a comment\np cnf 3 2\nc another\n1\n-2 0\n\n2 -3\n0\n";
        let parsed = parse_dimacs(text).unwrap();
        let expected = CnfFormula::from_dimacs_lits(3, &[vec![1, -2], vec![2, -3]]).unwrap();
        assert_eq!(parsed.formula, expected);
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn header_count_is_not_trusted() {
        let parsed = parse_dimacs("p cnf 2 3\n1 0\n").unwrap();
        assert_eq!(parsed.formula.num_clauses(), 1);
        assert_eq!(parsed.declared_clauses, 3);
        assert_eq!(parsed.warnings.len(), 1);
        assert!(parsed.warnings[0].contains("declares 3"));
    }

    #[test]
    fn unterminated_final_clause_is_kept_with_a_warning() {
        let parsed = parse_dimacs("p cnf 2 1\n1 2\n").unwrap();
        assert_eq!(parsed.formula.num_clauses(), 1);
        assert!(parsed.warnings[0].contains("not terminated"));
    }

    #[test]
    fn empty_formula_round_trips() {
        assert_eq!(
            write_dimacs(&CnfFormula::new(0, vec![]).unwrap()),
            "p cnf 0 0\n"
        );
        let parsed = parse_dimacs("p cnf 0 0\n").unwrap();
        assert_eq!(parsed.formula.num_vars(), 0);
        assert_eq!(parsed.formula.num_clauses(), 0);
    }

    #[test]
    fn parse_write_is_identity_on_normalized_formulas() {
        let f = CnfFormula::from_dimacs_lits(4, &[vec![3, -4, 1], vec![-2], vec![2, 1]]).unwrap();
        let text = write_dimacs(&f);
        let parsed = parse_dimacs(&text).unwrap();
        assert_eq!(parsed.formula, f);
        assert_eq!(write_dimacs(&parsed.formula), text);
    }

    #[test]
    fn missing_header_is_fatal() {
        assert_eq!(parse_dimacs(""), Err(DimacsError::MissingHeader));
        assert_eq!(parse_dimacs("1 -2 0\n"), Err(DimacsError::MissingHeader));
        assert_eq!(
            parse_dimacs("c only comments\n"),
            Err(DimacsError::MissingHeader)
        );
    }

    #[test]
    fn duplicate_header_is_fatal() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"),
            Err(DimacsError::DuplicateHeader { line: 2 })
        );
    }

    #[test]
    fn malformed_headers_are_fatal() {
        assert_eq!(
            parse_dimacs("p cnf two 3\n"),
            Err(DimacsError::BadHeader { line: 1 })
        );
        assert_eq!(
            parse_dimacs("p dnf 2 1\n"),
            Err(DimacsError::BadHeader { line: 1 })
        );
        assert_eq!(
            parse_dimacs("p cnf 2\n"),
            Err(DimacsError::BadHeader { line: 1 })
        );
    }

    #[test]
    fn non_integer_token_is_fatal_with_line() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 x 0\n"),
            Err(DimacsError::NonIntegerToken {
                token: "x".to_string(),
                line: 2
            })
        );
    }

    #[test]
    fn out_of_range_variable_is_fatal() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 -3 0\n"),
            Err(DimacsError::VarOutOfRange {
                var: 3,
                n: 2,
                line: 2
            })
        );
    }
}
