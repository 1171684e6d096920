//! Binary polynomials and the residue field K = GF(2^m).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A polynomial over GF(2), bit `i` holding the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gf2Poly(pub u32);

impl Gf2Poly {
    pub fn degree(self) -> Option<u32> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros())
    }

    pub fn coeff(self, i: u32) -> bool {
        i < 32 && (self.0 >> i) & 1 == 1
    }

    pub fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        let mut out = 0u32;
        let mut a = self.0;
        let mut shift = 0;
        while a != 0 {
            if a & 1 == 1 {
                out ^= rhs.0 << shift;
            }
            a >>= 1;
            shift += 1;
        }
        Gf2Poly(out)
    }

    /// Remainder of `self` modulo a nonzero `divisor`.
    pub fn rem(self, divisor: Gf2Poly) -> Gf2Poly {
        let d = divisor.degree().expect("division by the zero polynomial");
        let mut r = self.0;
        while r != 0 {
            let dr = 31 - r.leading_zeros();
            if dr < d {
                break;
            }
            r ^= divisor.0 << (dr - d);
        }
        Gf2Poly(r)
    }

    /// Irreducibility by trial division with every polynomial of degree at
    /// most half the degree.
    pub fn is_irreducible(self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        for cand in 2u32..(1u32 << (d / 2 + 1)) {
            let cd = 31 - cand.leading_zeros();
            if cd >= 1 && cd <= d / 2 && self.rem(Gf2Poly(cand)).0 == 0 {
                return false;
            }
        }
        true
    }

    /// `x^e mod self`.
    pub fn x_pow_mod(self, mut e: u64) -> Gf2Poly {
        let mut result = Gf2Poly(1).rem(self);
        let mut base = Gf2Poly(2).rem(self);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(base).rem(self);
            }
            base = base.mul(base).rem(self);
            e >>= 1;
        }
        result
    }

    /// Whether `self` is irreducible and `x` generates the multiplicative
    /// group of the quotient field.
    pub fn is_primitive(self) -> bool {
        if !self.is_irreducible() {
            return false;
        }
        let d = self.degree().unwrap();
        let order = (1u64 << d) - 1;
        if self.x_pow_mod(order) != Gf2Poly(1) {
            return false;
        }
        prime_factors(order)
            .into_iter()
            .all(|p| self.x_pow_mod(order / p) != Gf2Poly(1))
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// GF(2^m) presented as GF(2)[x]/(modulus).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldDescriptor {
    m: u8,
    modulus: u16,
}

impl FieldDescriptor {
    pub fn new(modulus: Gf2Poly) -> Result<FieldDescriptor> {
        let m = modulus
            .degree()
            .ok_or_else(|| Error::Domain("zero field modulus".into()))?;
        if !(1..=15).contains(&m) {
            return Err(Error::Unsupported(format!("field degree {m}")));
        }
        if !modulus.is_irreducible() {
            return Err(Error::Domain(format!(
                "field modulus {:#b} is reducible over GF(2)",
                modulus.0
            )));
        }
        Ok(FieldDescriptor {
            m: m as u8,
            modulus: modulus.0 as u16,
        })
    }

    pub fn degree(&self) -> usize {
        self.m as usize
    }

    pub fn modulus(&self) -> Gf2Poly {
        Gf2Poly(self.modulus as u32)
    }

    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn element(&self, bits: u16) -> FieldElement {
        FieldElement {
            bits: bits & ((1u16 << self.m) - 1),
            field: *self,
        }
    }

    /// All `2^m` elements in bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |b| self.element(b as u16))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u16,
    field: FieldDescriptor,
}

impl FieldElement {
    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// Coefficient bits, constant term first.
    pub fn coeffs(&self) -> Vec<u8> {
        (0..self.field.m).map(|i| ((self.bits >> i) & 1) as u8).collect()
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut result = self.one_like();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        result
    }

    fn check(&self, rhs: &FieldElement) {
        assert_eq!(self.field, rhs.field, "field elements from different fields");
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.coeffs().iter().map(u8::to_string).collect();
        write!(f, "[{}]", digits.join(","))
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        FieldElement {
            bits: self.bits ^ rhs.bits,
            field: self.field,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        let prod = Gf2Poly(self.bits as u32)
            .mul(Gf2Poly(rhs.bits as u32))
            .rem(self.field.modulus());
        FieldElement {
            bits: prod.0 as u16,
            field: self.field,
        }
    }
}

impl Coefficient for FieldElement {
    type Parent = FieldDescriptor;

    fn parent(&self) -> FieldDescriptor {
        self.field
    }

    fn zero_in(parent: &FieldDescriptor) -> FieldElement {
        parent.element(0)
    }

    fn one_in(parent: &FieldDescriptor) -> FieldElement {
        parent.element(1)
    }

    fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn is_unit(&self) -> bool {
        self.bits != 0
    }

    fn inverse(&self) -> Option<FieldElement> {
        (!self.is_zero()).then(|| self.pow(self.field.order() as u64 - 2))
    }

    fn from_int_in(parent: &FieldDescriptor, k: i64) -> FieldElement {
        parent.element((k.rem_euclid(2)) as u16)
    }
}
