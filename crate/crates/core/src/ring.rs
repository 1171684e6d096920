//! The Galois ring R = GR(4,m) = Z4[x]/(h) for a basic irreducible `h`.
//!
//! Elements are dense coefficient vectors over Z4 in the basis
//! `1, x, ..., x^(m-1)`. Descriptors and elements are small `Copy` values;
//! the zero vector is the only representation of 0.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement, Gf2Poly};
use crate::poly::Poly;
use crate::scalar::{ChainRing, Coefficient, Z4};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 10;

/// Primitive binary polynomials used to seed the built-in moduli, indexed by
/// degree. Their Graeffe lifts give the moduli x^2+x+1 and x^4+2x^2+3x+1 for
/// m = 2 and m = 4.
const PRIMITIVE_SEEDS: [(usize, u32); 9] = [
    (2, 0b111),
    (3, 0b1011),
    (4, 0b10011),
    (5, 0b100101),
    (6, 0b1000011),
    (7, 0b10000011),
    (8, 0b100011101),
    (9, 0b1000010001),
    (10, 0b10000001001),
];

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    m: u8,
    modulus: [u8; MAX_DEGREE + 1],
}

impl fmt::Debug for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR(4,{}) mod {:?}", self.m, self.modulus_digits())
    }
}

impl RingDescriptor {
    /// Validates `modulus` as a basic irreducible polynomial whose class
    /// `[x]` has order `2^m - 1` or `2(2^m - 1)`.
    pub fn new(modulus: &Poly<Z4>) -> Result<RingDescriptor> {
        let m = modulus
            .degree()
            .ok_or_else(|| Error::Domain("zero modulus".into()))?;
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::Unsupported(format!(
                "extension degree {m} (supported: 1..={MAX_DEGREE})"
            )));
        }
        if !modulus.leading_coeff().unwrap().is_one() {
            return Err(Error::Domain("modulus is not monic".into()));
        }
        let mut digits = [0u8; MAX_DEGREE + 1];
        for (d, c) in digits.iter_mut().zip(modulus.coeffs()) {
            *d = c.value();
        }
        let desc = RingDescriptor {
            m: m as u8,
            modulus: digits,
        };
        if !desc.reduced_modulus().is_irreducible() {
            return Err(Error::Domain(format!(
                "modulus {:?} is not irreducible modulo 2",
                desc.modulus_digits()
            )));
        }
        let order = (1u64 << m) - 1;
        let x_pow = desc.x().pow(order);
        if x_pow != desc.one() && x_pow != -desc.one() {
            return Err(Error::Domain(format!(
                "[x] does not have order 2^m-1 or 2(2^m-1) modulo {:?}",
                desc.modulus_digits()
            )));
        }
        Ok(desc)
    }

    pub fn degree(&self) -> usize {
        self.m as usize
    }

    /// Modulus digits, constant term first, including the leading 1.
    pub fn modulus_digits(&self) -> Vec<u8> {
        self.modulus[..=self.degree()].to_vec()
    }

    pub fn modulus(&self) -> Poly<Z4> {
        Poly::new(self.modulus_digits().iter().map(|&d| Z4::new(d as i64)).collect())
    }

    fn reduced_modulus(&self) -> Gf2Poly {
        let bits = self.modulus[..=self.degree()]
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &d)| acc | (((d & 1) as u32) << i));
        Gf2Poly(bits)
    }

    pub fn residue_field(&self) -> FieldDescriptor {
        FieldDescriptor::new(self.reduced_modulus()).expect("modulus validated at construction")
    }

    /// Number of elements, `4^m`.
    pub fn order(&self) -> u64 {
        1u64 << (2 * self.degree())
    }

    /// Size of the Teichmüller unit group, `2^m - 1`.
    pub fn teichmuller_order(&self) -> u64 {
        (1u64 << self.degree()) - 1
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coeffs: [0; MAX_DEGREE],
            ring: *self,
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(Z4::ONE)
    }

    pub fn constant(&self, c: Z4) -> RingElement {
        let mut e = self.zero();
        e.coeffs[0] = c.value();
        e
    }

    /// The class of `x`.
    pub fn x(&self) -> RingElement {
        let mut e = self.zero();
        if self.m == 1 {
            e.coeffs[0] = (4 - self.modulus[0]) & 3;
        } else {
            e.coeffs[1] = 1;
        }
        e
    }

    /// Builds an element from coefficients of `1, x, ..., x^(m-1)`.
    pub fn element(&self, coeffs: &[i64]) -> Result<RingElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::LengthMismatch {
                expected: self.degree(),
                found: coeffs.len(),
            });
        }
        let mut e = self.zero();
        for (d, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *d = c.rem_euclid(4) as u8;
        }
        Ok(e)
    }

    /// Every element of the ring, enumerated with the constant coordinate
    /// varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let m = self.degree();
        (0..self.order()).map(move |mut idx| {
            let mut e = self.zero();
            for c in e.coeffs.iter_mut().take(m) {
                *c = (idx & 3) as u8;
                idx >>= 2;
            }
            e
        })
    }

    /// Embeds a residue field element with coordinates in `{0, 1}`.
    pub fn lift(&self, a: FieldElement) -> RingElement {
        let mut e = self.zero();
        for (i, c) in e.coeffs.iter_mut().take(self.degree()).enumerate() {
            *c = ((a.bits() >> i) & 1) as u8;
        }
        e
    }

    /// The unique Teichmüller element over `a`.
    pub fn teichmuller_lift(&self, a: FieldElement) -> RingElement {
        // (b + 2c)^2 = b^2, so m squarings fix the class representative
        let mut e = self.lift(a);
        for _ in 0..self.degree() {
            e = e * e;
        }
        e
    }

    /// The Teichmüller set, `{0}` together with the cyclic unit subgroup of
    /// order `2^m - 1`.
    pub fn teichmuller_set(&self) -> Vec<RingElement> {
        self.residue_field()
            .elements()
            .map(|a| self.teichmuller_lift(a))
            .collect()
    }

    /// A primitive `2n`-th root of unity `α = -β` with `α^n = -1`, where `β`
    /// is the Teichmüller element `γ^((2^m-1)/n)` and `γ = ±[x]` generates the
    /// Teichmüller units.
    pub fn negacyclic_root(&self, n: u64) -> Result<RingElement> {
        if n == 0 || n.is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "negacyclic roots exist only for odd lengths, got n = {n}"
            )));
        }
        let order = self.teichmuller_order();
        if !order.is_multiple_of(n) {
            return Err(Error::Domain(format!(
                "n = {n} does not divide 2^m - 1 = {order}"
            )));
        }
        let x = self.x();
        let x_pow = x.pow(order);
        let gamma = if x_pow == self.one() {
            x
        } else if x_pow == -self.one() {
            -x
        } else {
            return Err(Error::Consistency("[x] is not a root of unity of the expected order".into()));
        };
        Ok(-gamma.pow(order / n))
    }
}

/// Built-in registry of moduli, one per extension degree, with optional
/// overrides.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulusTable {
    entries: BTreeMap<usize, RingDescriptor>,
}

impl ModulusTable {
    pub fn builtin() -> ModulusTable {
        let entries = PRIMITIVE_SEEDS
            .iter()
            .map(|&(m, seed)| {
                let lifted = graeffe_lift(Gf2Poly(seed)).expect("seed polynomials are irreducible");
                let desc = RingDescriptor::new(&lifted).expect("lifted seeds are basic irreducible");
                (m, desc)
            })
            .collect();
        ModulusTable { entries }
    }

    /// Parses overrides of the form `{"4": [1, 3, 2, 0, 1]}` (digits constant
    /// term first) on top of the built-in table.
    pub fn builtin_with_json(json: &str) -> Result<ModulusTable> {
        let raw: BTreeMap<String, Vec<i64>> = serde_json::from_str(json)
            .map_err(|e| Error::Parse {
                position: e.column(),
                message: e.to_string(),
            })?;
        let mut table = ModulusTable::builtin();
        for (key, digits) in raw {
            let m: usize = key.parse().map_err(|_| Error::Parse {
                position: 0,
                message: format!("degree key {key:?} is not an integer"),
            })?;
            let modulus = Poly::new(digits.iter().map(|&d| Z4::new(d)).collect());
            table.set(m, &modulus)?;
        }
        Ok(table)
    }

    pub fn set(&mut self, m: usize, modulus: &Poly<Z4>) -> Result<()> {
        let desc = RingDescriptor::new(modulus)?;
        if desc.degree() != m {
            return Err(Error::Domain(format!(
                "modulus of degree {} registered for m = {m}",
                desc.degree()
            )));
        }
        self.entries.insert(m, desc);
        Ok(())
    }

    pub fn ring(&self, m: usize) -> Result<RingDescriptor> {
        if !(2..=MAX_DEGREE).contains(&m) {
            return Err(Error::Unsupported(format!(
                "extension degree {m} (supported: 2..={MAX_DEGREE})"
            )));
        }
        self.entries
            .get(&m)
            .copied()
            .ok_or_else(|| Error::Unsupported(format!("no modulus registered for m = {m}")))
    }
}

impl Default for ModulusTable {
    fn default() -> Self {
        ModulusTable::builtin()
    }
}

/// GR(4,m) from the built-in modulus table, `2 <= m <= 10`.
pub fn make_ring(m: usize) -> Result<RingDescriptor> {
    ModulusTable::builtin().ring(m)
}

/// Graeffe lift of a monic irreducible `p` over GF(2) with `p(0) = 1`: the
/// monic `f` over Z4 with `f(x^2) = ±(e(x)^2 - o(x)^2)`, where `e + o` is the
/// 0/1 lift of `p` split into even and odd parts. The result divides
/// `x^(2^deg p - 1) - 1`.
pub fn graeffe_lift(p: Gf2Poly) -> Result<Poly<Z4>> {
    if !p.is_irreducible() {
        return Err(Error::Domain(format!("{:#b} is reducible over GF(2)", p.0)));
    }
    if !p.coeff(0) {
        return Err(Error::Domain("polynomial has zero constant term".into()));
    }
    let d = p.degree().unwrap() as usize;
    let lift = Poly::new((0..=d).map(|i| Z4::new(p.coeff(i as u32) as i64)).collect());
    let (even, odd) = lift.even_odd_split();
    let mut squared_diff = &(&even * &even) - &(&odd * &odd);
    if d % 2 == 1 {
        squared_diff = -squared_diff;
    }
    let coeffs = squared_diff.coeffs();
    debug_assert!(coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero()));
    Ok(Poly::new(coeffs.iter().step_by(2).copied().collect()))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    coeffs: [u8; MAX_DEGREE],
    ring: RingDescriptor,
}

impl RingElement {
    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// Coefficients of `1, x, ..., x^(m-1)`, each in `{0, 1, 2, 3}`.
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs[..self.ring.degree()]
    }

    /// The residue map to K.
    pub fn mu(&self) -> FieldElement {
        let bits = self
            .coeffs()
            .iter()
            .enumerate()
            .fold(0u16, |acc, (i, &c)| acc | (((c & 1) as u16) << i));
        self.ring.residue_field().element(bits)
    }

    pub fn pow(&self, mut e: u64) -> RingElement {
        let mut result = self.ring.one();
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

    pub fn is_teichmuller(&self) -> bool {
        self.pow(1u64 << self.ring.degree()) == *self
    }

    /// The canonical form `a = a0 + 2 a1` with `a0, a1` Teichmüller.
    pub fn teichmuller_decompose(&self) -> (RingElement, RingElement) {
        let a0 = self.pow(1u64 << self.ring.degree());
        let diff = *self - a0;
        let half = diff.halve().expect("a and its Teichmüller part agree modulo 2");
        (a0, self.ring.teichmuller_lift(half.mu()))
    }

    /// The generator `a0 + 2 a1 ↦ a0^2 + 2 a1^2` of the automorphism group.
    pub fn frobenius(&self) -> RingElement {
        let (a0, a1) = self.teichmuller_decompose();
        a0 * a0 + (a1 * a1).mul_int(2)
    }

    fn same_ring(&self, rhs: &RingElement) -> Result<()> {
        if self.ring == rhs.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &RingElement) -> Result<RingElement> {
        self.same_ring(rhs)?;
        Ok(self.add_raw(rhs, false))
    }

    pub fn checked_sub(&self, rhs: &RingElement) -> Result<RingElement> {
        self.same_ring(rhs)?;
        Ok(self.add_raw(rhs, true))
    }

    pub fn checked_mul(&self, rhs: &RingElement) -> Result<RingElement> {
        self.same_ring(rhs)?;
        Ok(self.mul_raw(rhs))
    }

    pub fn checked_inverse(&self) -> Result<RingElement> {
        self.inverse().ok_or(Error::NotInvertible)
    }

    fn add_raw(&self, rhs: &RingElement, subtract: bool) -> RingElement {
        let mut out = *self;
        for (a, &b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            let b = if subtract { 4 - b } else { b };
            *a = (*a + b) & 3;
        }
        out
    }

    fn mul_raw(&self, rhs: &RingElement) -> RingElement {
        let m = self.ring.degree();
        let mut prod = [0u32; 2 * MAX_DEGREE];
        for (i, &a) in self.coeffs[..m].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs[..m].iter().enumerate() {
                prod[i + j] += (a * b) as u32;
            }
        }
        // x^m = -(h_0 + h_1 x + ... + h_(m-1) x^(m-1))
        for d in (m..2 * m - 1).rev() {
            let c = prod[d] & 3;
            if c == 0 {
                continue;
            }
            for i in 0..m {
                prod[d - m + i] += c * ((4 - self.ring.modulus[i] as u32) & 3);
            }
        }
        let mut out = self.ring.zero();
        for (o, &p) in out.coeffs.iter_mut().zip(prod[..m].iter()) {
            *o = (p & 3) as u8;
        }
        out
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.coeffs().iter().map(u8::to_string).collect();
        write!(f, "[{}]", digits.join(","))
    }
}

/// Polynomial notation in `x`, highest power first, e.g. `3x^3+x^2+3x+2`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.add_raw(&rhs, false)
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.add_raw(&rhs, true)
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.mul_raw(&rhs)
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.zero().add_raw(&self, true)
    }
}

impl Coefficient for RingElement {
    type Parent = RingDescriptor;

    fn parent(&self) -> RingDescriptor {
        self.ring
    }

    fn zero_in(parent: &RingDescriptor) -> RingElement {
        parent.zero()
    }

    fn one_in(parent: &RingDescriptor) -> RingElement {
        parent.one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn is_unit(&self) -> bool {
        !self.mu().is_zero()
    }

    fn inverse(&self) -> Option<RingElement> {
        // b0 inverts a modulo 2; then a·b0 = 1 + 2c and b0(2 - a·b0) is exact
        let residue_inv = self.mu().inverse()?;
        let b0 = self.ring.lift(residue_inv);
        let two = self.ring.constant(Z4::TWO);
        Some(b0 * (two - *self * b0))
    }

    fn from_int_in(parent: &RingDescriptor, k: i64) -> RingElement {
        parent.constant(Z4::new(k))
    }
}

impl ChainRing for RingElement {
    fn halve(&self) -> Option<RingElement> {
        if self.coeffs.iter().any(|&c| c & 1 == 1) {
            return None;
        }
        let mut out = *self;
        for c in out.coeffs.iter_mut() {
            *c >>= 1;
        }
        Some(out)
    }
}
