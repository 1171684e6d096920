//! Coefficient abstractions shared by the polynomial, solver and decoder code.
//!
//! Elements of GR(4,m) and GF(2^m) only make sense relative to a modulus, so
//! unlike the usual `Zero`/`One` style traits every coefficient can report its
//! [`Coefficient::Parent`] and constants are built from that parent.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A commutative ring element usable as a polynomial coefficient.
pub trait Coefficient:
    Copy
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The structure this element lives in (ring or field descriptor).
    type Parent: Copy + PartialEq + Debug;

    fn parent(&self) -> Self::Parent;
    fn zero_in(parent: &Self::Parent) -> Self;
    fn one_in(parent: &Self::Parent) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn inverse(&self) -> Option<Self>;

    /// The image of the integer `k` under the unique ring map from Z.
    fn from_int_in(parent: &Self::Parent, k: i64) -> Self;

    fn zero_like(&self) -> Self {
        Self::zero_in(&self.parent())
    }

    fn one_like(&self) -> Self {
        Self::one_in(&self.parent())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn mul_int(&self, k: i64) -> Self {
        *self * Self::from_int_in(&self.parent(), k)
    }
}

/// A coefficient ring of characteristic 4 whose ideals are `R ⊃ 2R ⊃ 0`,
/// i.e. Z4 itself or a Galois ring GR(4,m).
pub trait ChainRing: Coefficient {
    /// Returns `e` with `self = 2e` when `self` lies in `2R`.
    ///
    /// `e` is only determined modulo 2; implementations return the
    /// representative with all coordinates in `{0, 1}`.
    fn halve(&self) -> Option<Self>;

    /// Solves `self = x * by`, using `x = self / by` for a unit `by` and
    /// `x = e_self / e_by` when both are nonzero multiples of 2.
    fn quotient_by(&self, by: &Self) -> Option<Self> {
        if let Some(inv) = by.inverse() {
            return Some(*self * inv);
        }
        if by.is_zero() {
            return None;
        }
        let half_self = self.halve()?;
        let half_by = by.halve()?;
        Some(half_self * half_by.inverse()?)
    }
}

/// An element of the integers modulo 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    pub fn new(value: i64) -> Z4 {
        Z4(value.rem_euclid(4) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Lee weight of a single symbol.
    pub fn lee_weight(self) -> u32 {
        match self.0 {
            0 => 0,
            2 => 2,
            _ => 1,
        }
    }
}

impl Debug for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl AddAssign for Z4 {
    fn add_assign(&mut self, rhs: Z4) {
        *self = *self + rhs;
    }
}

impl SubAssign for Z4 {
    fn sub_assign(&mut self, rhs: Z4) {
        *self = *self - rhs;
    }
}

impl MulAssign for Z4 {
    fn mul_assign(&mut self, rhs: Z4) {
        *self = *self * rhs;
    }
}

impl Coefficient for Z4 {
    type Parent = ();

    fn parent(&self) {}

    fn zero_in(_: &()) -> Z4 {
        Z4::ZERO
    }

    fn one_in(_: &()) -> Z4 {
        Z4::ONE
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn is_unit(&self) -> bool {
        self.0 & 1 == 1
    }

    fn inverse(&self) -> Option<Z4> {
        // 1·1 = 1 and 3·3 = 9 = 1
        self.is_unit().then_some(*self)
    }

    fn from_int_in(_: &(), k: i64) -> Z4 {
        Z4::new(k)
    }
}

impl ChainRing for Z4 {
    fn halve(&self) -> Option<Z4> {
        (self.0 & 1 == 0).then_some(Z4(self.0 >> 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_inverses() {
        assert_eq!(Z4::ONE.inverse(), Some(Z4::ONE));
        assert_eq!(Z4::THREE.inverse(), Some(Z4::THREE));
        assert_eq!(Z4::TWO.inverse(), None);
        assert_eq!(Z4::ZERO.inverse(), None);
    }

    #[test]
    fn z4_quotients_follow_multiple_rule() {
        // 2 = 2·1, and 2 = 1·2 via halves
        assert_eq!(Z4::TWO.quotient_by(&Z4::ONE), Some(Z4::TWO));
        assert_eq!(Z4::TWO.quotient_by(&Z4::TWO), Some(Z4::ONE));
        // a unit is never a multiple of 2
        assert_eq!(Z4::ONE.quotient_by(&Z4::TWO), None);
        assert_eq!(Z4::ONE.quotient_by(&Z4::ZERO), None);
    }

    #[test]
    fn z4_lee_weights() {
        let w: Vec<u32> = (0..4).map(|v| Z4::new(v).lee_weight()).collect();
        assert_eq!(w, vec![0, 1, 2, 1]);
        assert_eq!(Z4::new(-1), Z4::THREE);
    }
}
