//! Disjunctions of cubes, and the expansion into pairwise-alternative
//! full-width cubes.

use crate::cube::Cube;
use crate::error::FormulaError;
use crate::lit::Literal;
use crate::mask;

/// Default variable cap for [`DnfCubes::expand_to_alternative`]. The
/// expansion may materialize up to 2^n cubes, so it is refused above
/// this many variables unless the caller raises the cap.
pub const DEFAULT_EXPANSION_CAP: u32 = 20;

/// A disjunction of cubes C1 ∨ C2 ∨ … ∨ Cm over variables x1..xn.
///
/// Negating a CNF formula yields one cube per clause, in clause order:
/// cube i covers exactly the tuples on which clause i is false. The
/// union of all covered tuples is the falsifying set whose size decides
/// satisfiability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnfCubes {
    n: u32,
    cubes: Vec<Cube>,
}

impl DnfCubes {
    /// Builds a cube disjunction, checking that every cube fits in
    /// `1..=n`. Order is kept as given.
    pub fn new(n: u32, cubes: Vec<Cube>) -> Result<Self, FormulaError> {
        for cube in &cubes {
            for lit in cube.literals() {
                if lit.var() > n {
                    return Err(FormulaError::VarOutOfRange { var: lit.var(), n });
                }
            }
        }
        Ok(DnfCubes { n, cubes })
    }

    pub(crate) fn from_cubes_unchecked(n: u32, cubes: Vec<Cube>) -> Self {
        DnfCubes { n, cubes }
    }

    pub fn num_vars(&self) -> u32 {
        self.n
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    /// Rewrites the disjunction into the set of distinct full-width
    /// cubes (minterms) covering exactly the same tuples. Full-width
    /// cubes are pairwise alternative: any two distinct ones disagree on
    /// some variable's polarity.
    ///
    /// The output can hold up to 2^n cubes, so the call is refused when
    /// `n` exceeds `cap` (conventionally [`DEFAULT_EXPANSION_CAP`]).
    /// Caps above 63 are clamped: tuples are enumerated as u64 values.
    pub fn expand_to_alternative(&self, cap: u32) -> Result<DnfCubes, FormulaError> {
        let cap = cap.min(63);
        if self.n > cap {
            return Err(FormulaError::ExpansionCapExceeded { n: self.n, cap });
        }
        let n = self.n;
        let total: u64 = 1u64 << n;
        let mut covered = vec![0u64; total.div_ceil(64) as usize];
        for cube in &self.cubes {
            let (pos, neg) = mask::cube_masks(cube, n);
            let free = !(pos | neg) & (total - 1);
            // Enumerate all assignments of the free variables on top of
            // the fixed positive bits.
            let mut sub = free;
            loop {
                let v = pos | sub;
                covered[(v / 64) as usize] |= 1u64 << (v % 64);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        // Canonical cube order puts the all-positive minterm first, which
        // for full-width cubes is descending tuple order.
        let mut minterms = Vec::new();
        for v in (0..total).rev() {
            if covered[(v / 64) as usize] >> (v % 64) & 1 == 1 {
                minterms.push(minterm(n, v));
            }
        }
        Ok(DnfCubes { n, cubes: minterms })
    }
}

/// The full-width cube that is true exactly on tuple `v`.
fn minterm(n: u32, v: u64) -> Cube {
    let lits: Vec<Literal> = (1..=n)
        .map(|var| Literal::new(var, v & mask::bit_for_var(n, var) != 0))
        .collect();
    Cube::from_sorted(lits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::CnfFormula;

    fn cube(codes: &[i32], n: u32) -> Cube {
        let lits: Vec<Literal> = codes.iter().map(|&c| Literal::from_dimacs(c)).collect();
        Cube::new(&lits, n).unwrap()
    }

    fn rendered(d: &DnfCubes) -> Vec<String> {
        d.cubes().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn expansion_of_overlapping_pair() {
        // x1·x2 ∨ x1·x3 = x1·x2·x3 ∨ x1·x2·¬x3 ∨ x1·¬x2·x3
        let d = DnfCubes::new(3, vec![cube(&[1, 2], 3), cube(&[1, 3], 3)]).unwrap();
        let expanded = d.expand_to_alternative(DEFAULT_EXPANSION_CAP).unwrap();
        assert_eq!(
            rendered(&expanded),
            vec!["x1·x2·x3", "x1·x2·¬x3", "x1·¬x2·x3"]
        );
    }

    #[test]
    fn full_width_cube_is_fixed_point() {
        let d = DnfCubes::new(3, vec![cube(&[1, 2, 3], 3)]).unwrap();
        let expanded = d.expand_to_alternative(DEFAULT_EXPANSION_CAP).unwrap();
        assert_eq!(expanded.cubes(), d.cubes());
    }

    #[test]
    fn expansion_of_negated_example_covers_six_tuples() {
        // Negation of (x1 ∨ ¬x2)(x2 ∨ ¬x3)(¬x1 ∨ x3): six falsifying
        // tuples, all but 000 and 111.
        let f = CnfFormula::from_dimacs_lits(3, &[vec![1, -2], vec![2, -3], vec![-1, 3]]).unwrap();
        let expanded = f
            .negate()
            .expand_to_alternative(DEFAULT_EXPANSION_CAP)
            .unwrap();
        let tuples: Vec<u64> = expanded
            .cubes()
            .iter()
            .map(|c| {
                c.literals()
                    .iter()
                    .filter(|l| l.is_positive())
                    .map(|l| mask::bit_for_var(3, l.var()))
                    .sum()
            })
            .collect();
        assert_eq!(tuples, vec![0b110, 0b101, 0b100, 0b011, 0b010, 0b001]);
    }

    #[test]
    fn expansion_deduplicates() {
        let d = DnfCubes::new(2, vec![cube(&[1], 2), cube(&[1, 2], 2)]).unwrap();
        let expanded = d.expand_to_alternative(DEFAULT_EXPANSION_CAP).unwrap();
        assert_eq!(rendered(&expanded), vec!["x1·x2", "x1·¬x2"]);
    }

    #[test]
    fn cap_refusal() {
        let d = DnfCubes::new(21, vec![cube(&[1], 21)]).unwrap();
        let err = d.expand_to_alternative(DEFAULT_EXPANSION_CAP).unwrap_err();
        assert_eq!(err, FormulaError::ExpansionCapExceeded { n: 21, cap: 20 });
        assert!(d.expand_to_alternative(21).is_ok());
    }

    #[test]
    fn empty_cube_expands_to_everything() {
        let d = DnfCubes::new(2, vec![Cube::empty()]).unwrap();
        let expanded = d.expand_to_alternative(DEFAULT_EXPANSION_CAP).unwrap();
        assert_eq!(expanded.cubes().len(), 4);
    }
}
