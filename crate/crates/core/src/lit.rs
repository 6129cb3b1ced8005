//! Boolean literals: a variable index with a polarity.

use std::fmt;

/// A Boolean literal (variable or its negation).
///
/// Stored as a signed non-zero integer in the DIMACS convention:
/// `3` is x3, `-3` is ¬x3. Variables are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal(i32);

impl Literal {
    /// Creates a literal for `var` with the given polarity
    /// (`true` = un-negated).
    ///
    /// Panics if `var` is zero: variables are 1-based.
    pub fn new(var: u32, positive: bool) -> Self {
        assert!(var > 0, "variable indices are 1-based");
        assert!(var <= i32::MAX as u32, "variable index too large");
        Literal(if positive { var as i32 } else { -(var as i32) })
    }

    /// Creates a literal from its DIMACS encoding.
    ///
    /// Panics if `code` is zero (zero is the DIMACS clause terminator,
    /// never a literal).
    pub fn from_dimacs(code: i32) -> Self {
        assert!(code != 0, "literal cannot be zero");
        Literal(code)
    }

    /// The variable index (always ≥ 1).
    #[inline]
    pub fn var(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// True if the literal is un-negated.
    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// True if the literal is negated.
    #[inline]
    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// The literal on the same variable with opposite polarity.
    #[inline]
    pub fn negate(self) -> Self {
        Literal(-self.0)
    }

    /// Two literals are contrary iff they name the same variable with
    /// opposite polarities.
    #[inline]
    pub fn is_contrary(self, other: Self) -> bool {
        self.0 == -other.0
    }

    /// The signed DIMACS encoding.
    #[inline]
    pub fn to_dimacs(self) -> i32 {
        self.0
    }

    /// Canonical comparison key: positive literals order before negative
    /// ones, ties broken by variable index. This key drives the canonical
    /// clause and cube order used throughout the crate.
    #[inline]
    pub(crate) fn canonical_key(self) -> (bool, u32) {
        (self.is_negative(), self.var())
    }
}

impl std::ops::Neg for Literal {
    type Output = Self;

    fn neg(self) -> Self {
        self.negate()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "¬x{}", self.var())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contrary_is_same_var_opposite_polarity() {
        let x1 = Literal::new(1, true);
        let not_x1 = Literal::new(1, false);
        let x2 = Literal::new(2, true);
        assert!(x1.is_contrary(not_x1));
        assert!(not_x1.is_contrary(x1));
        assert!(!x1.is_contrary(x1));
        assert!(!x1.is_contrary(x2));
    }

    #[test]
    fn negate_flips_polarity_only() {
        let lit = Literal::new(4, true);
        assert_eq!(lit.negate(), Literal::new(4, false));
        assert_eq!(lit.negate().negate(), lit);
        assert_eq!(-lit, lit.negate());
    }

    #[test]
    fn dimacs_round_trip() {
        assert_eq!(Literal::from_dimacs(-7).to_dimacs(), -7);
        assert_eq!(Literal::from_dimacs(7).var(), 7);
        assert!(Literal::from_dimacs(-7).is_negative());
    }

    #[test]
    fn display() {
        assert_eq!(Literal::new(1, true).to_string(), "x1");
        assert_eq!(Literal::new(2, false).to_string(), "¬x2");
    }

    #[test]
    #[should_panic(expected = "1-based")]
    fn zero_var_rejected() {
        Literal::new(0, true);
    }
}
