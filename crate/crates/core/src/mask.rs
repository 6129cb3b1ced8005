//! Single-word bitmask views of clauses and cubes, for tuple-level
//! evaluation at small n.
//!
//! Tuple convention: x1 is the most significant bit, so the tuple
//! written (010) for n = 3 is the integer 0b010 = 2.

use crate::clause::Clause;
use crate::cube::Cube;
use crate::lit::Literal;

/// The bit holding variable `var` in an n-variable tuple.
#[inline]
pub(crate) fn bit_for_var(n: u32, var: u32) -> u64 {
    debug_assert!(var >= 1 && var <= n && n <= 64);
    1u64 << (n - var)
}

fn masks<'a>(lits: impl Iterator<Item = &'a Literal>, n: u32) -> (u64, u64) {
    let mut pos = 0u64;
    let mut neg = 0u64;
    for lit in lits {
        let bit = bit_for_var(n, lit.var());
        if lit.is_positive() {
            pos |= bit;
        } else {
            neg |= bit;
        }
    }
    (pos, neg)
}

/// (positive, negative) variable masks of a cube. Requires n ≤ 64.
pub(crate) fn cube_masks(cube: &Cube, n: u32) -> (u64, u64) {
    masks(cube.literals().iter(), n)
}

/// (positive, negative) variable masks of a clause. Requires n ≤ 64.
pub(crate) fn clause_masks(clause: &Clause, n: u32) -> (u64, u64) {
    masks(clause.literals().iter(), n)
}

/// True if the cube with the given masks is true on tuple `v`.
#[inline]
pub(crate) fn cube_covers(pos: u64, neg: u64, v: u64) -> bool {
    v & pos == pos && v & neg == 0
}

/// True if the clause with the given masks is false on tuple `v`
/// (every literal false). The empty clause is false everywhere.
#[inline]
pub(crate) fn clause_false_at(pos: u64, neg: u64, v: u64) -> bool {
    v & pos == 0 && v & neg == neg
}
