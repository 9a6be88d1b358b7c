use std::fmt::Debug;

/// Commutative ring with identity, used as the coefficient domain of [`Poly`](super::Poly).
///
/// Method names avoid `add`/`mul` so they never collide with `std::ops` on
/// types that implement both.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_int(n: i64) -> Self;
}

/// A ring in which exact quotients can be taken when they exist.
pub trait ExactDivision: Ring {
    /// Returns `q` with `q * divisor == self`, or `None` if no such `q` exists
    /// (including division by zero).
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

/// A field: every nonzero element is invertible.
pub trait Field: ExactDivision {
    fn inverse(&self) -> Option<Self>;
}
