//! Minimal commutative-ring interface shared by the exact coefficient types.
//!
//! Every ring used here is a commutative Q-algebra, so exact division by a
//! nonzero integer is always available; that is what makes the
//! Faddeev-LeVerrier characteristic polynomial applicable throughout.

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn from_int(n: i64) -> Self;
    /// Exact division by a nonzero integer.
    fn div_int(&self, n: i64) -> Self;
}
