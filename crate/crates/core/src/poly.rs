//! Dense univariate polynomials over a [`Coefficient`] ring.
//!
//! Truncated power series are plain [`Poly`] values; callers pass the
//! truncation order explicitly.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Coefficients are stored constant term first with no trailing zeros, so
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Poly<C> {
        while coeffs.last().is_some_and(C::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<C> {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Poly<C> {
        Poly::new(vec![c])
    }

    pub fn one(parent: &C::Parent) -> Poly<C> {
        Poly::constant(C::one_in(parent))
    }

    /// `c * z^degree`.
    pub fn monomial(c: C, degree: usize) -> Poly<C> {
        let mut coeffs = vec![c.zero_like(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<C> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, i: usize) -> Option<C> {
        self.coeffs.get(i).copied()
    }

    /// Coefficient of `z^i`, with `zero` standing in past the degree.
    pub fn coeff_or(&self, i: usize, zero: C) -> C {
        self.coeffs.get(i).copied().unwrap_or(zero)
    }

    pub fn scale(&self, c: C) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Poly<C> {
        if self.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Reduction modulo `z^n`.
    pub fn truncate(&self, n: usize) -> Poly<C> {
        Poly::new(self.coeffs.iter().take(n).copied().collect())
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, point: C) -> C {
        let mut acc = point.zero_like();
        for &c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly<C> {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    /// Splits `f` into its even-degree and odd-degree parts.
    pub fn even_odd_split(&self) -> (Poly<C>, Poly<C>) {
        let mut even = self.coeffs.clone();
        let mut odd = self.coeffs.clone();
        for (i, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
            if i % 2 == 0 {
                *o = o.zero_like();
            } else {
                *e = e.zero_like();
            }
        }
        (Poly::new(even), Poly::new(odd))
    }

    /// `f(z^2)`.
    pub fn at_square(&self) -> Poly<C> {
        if self.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; 2 * self.coeffs.len() - 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c;
        }
        Poly { coeffs }
    }

    /// `f(-z)`.
    pub fn at_negated(&self) -> Poly<C> {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    /// Long division by a divisor whose leading coefficient is a unit.
    pub fn divmod(&self, divisor: &Poly<C>) -> Result<(Poly<C>, Poly<C>)> {
        let lead = divisor
            .leading_coeff()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_inv = lead.inverse().ok_or_else(|| {
            Error::Domain("divisor leading coefficient is not a unit".into())
        })?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let zero = lead.zero_like();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd] * lead_inv;
            if q.is_zero() {
                continue;
            }
            quot[i] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j] - q * d;
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Inverse as a power series modulo `z^n`.
    pub fn series_inverse(&self, n: usize) -> Result<Poly<C>> {
        let c0 = self
            .coeff(0)
            .ok_or_else(|| Error::Domain("series with zero constant term".into()))?;
        let c0_inv = c0
            .inverse()
            .ok_or_else(|| Error::Domain("series constant term is not a unit".into()))?;
        if n == 0 {
            return Ok(Poly::zero());
        }
        let zero = c0.zero_like();
        let mut h = vec![zero; n];
        h[0] = c0_inv;
        for k in 1..n {
            let mut acc = zero;
            for i in 1..=k.min(self.coeffs.len() - 1) {
                acc = acc + self.coeffs[i] * h[k - i];
            }
            h[k] = -(acc * c0_inv);
        }
        Ok(Poly::new(h))
    }

    /// Largest `k` with `(z - c)^k` dividing `self`, found by repeated
    /// synthetic division.
    pub fn root_multiplicity(&self, c: C) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Domain("root multiplicity of the zero polynomial".into()));
        }
        let mut count = 0;
        let mut current = self.coeffs.clone();
        while current.len() > 1 {
            // synthetic division by (z - c), highest degree first
            let mut quot = vec![c.zero_like(); current.len() - 1];
            let mut carry = c.zero_like();
            for i in (0..current.len()).rev() {
                let value = current[i] + carry * c;
                if i == 0 {
                    carry = value;
                } else {
                    quot[i - 1] = value;
                    carry = value;
                }
            }
            if !carry.is_zero() {
                break;
            }
            count += 1;
            current = quot;
        }
        Ok(count)
    }
}

/// Extended Euclid over a field: returns `(gcd, a, b)` with
/// `a*f + b*g = gcd` and `gcd` monic.
pub fn field_gcd<C: Coefficient>(f: &Poly<C>, g: &Poly<C>) -> Result<(Poly<C>, Poly<C>, Poly<C>)> {
    let parent = f
        .leading_coeff()
        .or(g.leading_coeff())
        .ok_or_else(|| Error::Domain("gcd of two zero polynomials".into()))?
        .parent();
    let one = Poly::one(&parent);
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut a0, mut a1) = (one.clone(), Poly::zero());
    let (mut b0, mut b1) = (Poly::zero(), one);
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        let a2 = &a0 - &(&q * &a1);
        let b2 = &b0 - &(&q * &b1);
        r0 = std::mem::replace(&mut r1, r);
        a0 = std::mem::replace(&mut a1, a2);
        b0 = std::mem::replace(&mut b1, b2);
    }
    let inv = r0
        .leading_coeff()
        .and_then(|c| c.inverse())
        .ok_or(Error::NotInvertible)?;
    Ok((r0.scale(inv), a0.scale(inv), b0.scale(inv)))
}

fn add_coeffs<C: Coefficient>(a: &[C], b: &[C], negate_b: bool) -> Vec<C> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(&x), Some(&y)) => {
                if negate_b {
                    x - y
                } else {
                    x + y
                }
            }
            (Some(&x), None) => x,
            (None, Some(&y)) => {
                if negate_b {
                    -y
                } else {
                    y
                }
            }
            (None, None) => unreachable!(),
        })
        .collect()
}

impl<C: Coefficient> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<C: Coefficient> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<C: Coefficient> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}
