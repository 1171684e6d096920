//! Gröbner bases of solution modules `M = {[a, b] : a U ≡ b mod z^r}` in
//! `R[z]^2`, computed by the method of solution by approximations.
//!
//! The iteration tracks four elements whose leading monomials have the
//! shapes `[z^i, 0]`, `[2z^j, 0]`, `[0, z^r]` and `[0, 2z^s]`. Each update
//! either keeps an element, cancels its discrepancy against an element with a
//! strictly smaller leading term, or multiplies it by `z`; none of these moves
//! the leading monomial off its side or changes its coefficient, so the four
//! elements stay in fixed slots.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{SerializeTuple, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{ChainRing, Coefficient};
use crate::text::Token;

/// The term order used by the decoder.
pub const DECODER_ORDER: i64 = -1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A module term `[z^d, 0]` or `[0, z^d]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ModuleTerm {
    pub side: Side,
    pub degree: usize,
}

impl ModuleTerm {
    pub fn left(degree: usize) -> ModuleTerm {
        ModuleTerm {
            side: Side::Left,
            degree,
        }
    }

    pub fn right(degree: usize) -> ModuleTerm {
        ModuleTerm {
            side: Side::Right,
            degree,
        }
    }

    /// Comparison under `<_ℓ`: same-side terms by degree, and
    /// `[0, z^j] < [z^i, 0]` exactly when `j <= i + ℓ`.
    pub fn cmp_under(&self, other: &ModuleTerm, ell: i64) -> Ordering {
        match (self.side, other.side) {
            (Side::Left, Side::Left) | (Side::Right, Side::Right) => self.degree.cmp(&other.degree),
            (Side::Right, Side::Left) => {
                if self.degree as i64 <= other.degree as i64 + ell {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Side::Left, Side::Right) => other.cmp_under(self, ell).reverse(),
        }
    }
}

impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "[z^{},0]", self.degree),
            Side::Right => write!(f, "[0,z^{}]", self.degree),
        }
    }
}

pub fn term_less(x: &ModuleTerm, y: &ModuleTerm, ell: i64) -> bool {
    x.cmp_under(y, ell) == Ordering::Less
}

/// Leading term and coefficient of `v` under `<_ℓ`.
pub fn leading<C: Coefficient>(v: &PairVector<C>, ell: i64) -> Result<(ModuleTerm, C)> {
    v.leading(ell)
}

/// An element `[a, b]` of `R[z]^2`.
#[derive(Clone, PartialEq, Debug)]
pub struct PairVector<C> {
    pub a: Poly<C>,
    pub b: Poly<C>,
}

impl<C: Coefficient> PairVector<C> {
    pub fn new(a: Poly<C>, b: Poly<C>) -> PairVector<C> {
        PairVector { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Leading term and coefficient under `<_ℓ`.
    pub fn leading(&self, ell: i64) -> Result<(ModuleTerm, C)> {
        let left = self.a.degree().map(|d| (ModuleTerm::left(d), self.a.leading_coeff().unwrap()));
        let right = self.b.degree().map(|d| (ModuleTerm::right(d), self.b.leading_coeff().unwrap()));
        match (left, right) {
            (Some(l), Some(r)) => Ok(if l.0.cmp_under(&r.0, ell) == Ordering::Greater { l } else { r }),
            (Some(l), None) => Ok(l),
            (None, Some(r)) => Ok(r),
            (None, None) => Err(Error::Domain("the zero vector has no leading term".into())),
        }
    }

    pub fn leading_term(&self, ell: i64) -> Option<ModuleTerm> {
        self.leading(ell).ok().map(|(t, _)| t)
    }

    pub fn scale(&self, c: C) -> PairVector<C> {
        PairVector::new(self.a.scale(c), self.b.scale(c))
    }

    pub fn shift(&self, k: usize) -> PairVector<C> {
        PairVector::new(self.a.shift(k), self.b.shift(k))
    }

    pub fn sub(&self, other: &PairVector<C>) -> PairVector<C> {
        PairVector::new(&self.a - &other.a, &self.b - &other.b)
    }

    /// Coefficient of `z^k` in `a U - b`.
    pub fn discrepancy(&self, u: &Poly<C>, k: usize, zero: C) -> C {
        let mut acc = zero;
        for (i, &c) in self.a.coeffs().iter().enumerate().take(k + 1) {
            acc = acc + c * u.coeff_or(k - i, zero);
        }
        acc - self.b.coeff_or(k, zero)
    }

    /// Whether `a U ≡ b mod z^r`.
    pub fn solves(&self, u: &Poly<C>, r: usize) -> bool {
        (&(&self.a * u) - &self.b).truncate(r).is_zero()
    }
}

impl<C: Token> Serialize for PairVector<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.a)?;
        tup.serialize_element(&self.b)?;
        tup.end()
    }
}

/// Slot order of the tracked elements.
pub const LEFT_UNIT: usize = 0;
pub const LEFT_TWO: usize = 1;
pub const RIGHT_UNIT: usize = 2;
pub const RIGHT_TWO: usize = 3;

/// A Gröbner basis `{[a,b], [c,d], [g,h], [u,v]}` with leading monomials
/// `[z^i,0]`, `[2z^j,0]`, `[0,z^r]`, `[0,2z^s]`, stored in that order.
#[derive(Clone, PartialEq, Debug)]
pub struct GroebnerBasis<C> {
    elements: [PairVector<C>; 4],
    ell: i64,
}

impl<C: Coefficient> GroebnerBasis<C> {
    pub fn elements(&self) -> &[PairVector<C>; 4] {
        &self.elements
    }

    pub fn element(&self, slot: usize) -> &PairVector<C> {
        &self.elements[slot]
    }

    pub fn term_order(&self) -> i64 {
        self.ell
    }

    /// Degrees `(i, j, r, s)` of the four leading monomials.
    pub fn shape(&self) -> (usize, usize, usize, usize) {
        let deg = |slot: usize| self.elements[slot].leading_term(self.ell).map_or(0, |t| t.degree);
        (deg(LEFT_UNIT), deg(LEFT_TWO), deg(RIGHT_UNIT), deg(RIGHT_TWO))
    }

    /// Slot indices sorted ascending by leading term, unit slots first on ties.
    pub fn processing_order(&self) -> [usize; 4] {
        let mut order = [LEFT_UNIT, LEFT_TWO, RIGHT_UNIT, RIGHT_TWO];
        let ell = self.ell;
        order.sort_by(|&x, &y| {
            let tx = self.elements[x].leading_term(ell).expect("basis slots are nonzero");
            let ty = self.elements[y].leading_term(ell).expect("basis slots are nonzero");
            tx.cmp_under(&ty, ell).then(is_two_slot(x).cmp(&is_two_slot(y)))
        });
        order
    }
}

impl<C: Token> Serialize for GroebnerBasis<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

fn is_two_slot(slot: usize) -> bool {
    slot == LEFT_TWO || slot == RIGHT_TWO
}

/// How one tracked element was updated in a round.
#[derive(Clone, PartialEq, Debug)]
pub enum Update<C> {
    /// Zero discrepancy.
    Keep,
    /// Subtracted `factor` times the element in slot `with`.
    Cancel { with: usize, factor: C },
    /// Multiplied by `z`.
    Shift,
}

impl<C: Token> Serialize for Update<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Update::Keep => serializer.serialize_str("keep"),
            Update::Shift => serializer.serialize_str("shift"),
            Update::Cancel { with, factor } => {
                serializer.serialize_str(&format!("cancel:{with}:{}", factor.token()))
            }
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Round<C> {
    pub k: usize,
    pub discrepancies: [C; 4],
    pub updates: [Update<C>; 4],
    pub basis: GroebnerBasis<C>,
}

impl<C: Token> Serialize for Round<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Round", 4)?;
        st.serialize_field("k", &self.k)?;
        let tokens: Vec<String> = self.discrepancies.iter().map(Token::token).collect();
        st.serialize_field("discrepancies", &tokens)?;
        st.serialize_field("updates", &self.updates)?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

/// Basis of `M = {[a, b] : a U ≡ b mod z^r}` together with the per-round
/// record of the iteration.
#[derive(Clone, PartialEq, Debug)]
pub struct SbaRun<C> {
    pub basis: GroebnerBasis<C>,
    pub rounds: Vec<Round<C>>,
}

/// Solution by approximations under `<_ℓ`.
pub fn solve_by_approximations<C: ChainRing>(
    parent: &C::Parent,
    u: &Poly<C>,
    r: usize,
    ell: i64,
) -> SbaRun<C> {
    let zero = C::zero_in(parent);
    let one = Poly::constant(C::one_in(parent));
    let two = Poly::constant(C::from_int_in(parent, 2));
    let mut basis = GroebnerBasis {
        elements: [
            PairVector::new(one.clone(), Poly::zero()),
            PairVector::new(two.clone(), Poly::zero()),
            PairVector::new(Poly::zero(), one),
            PairVector::new(Poly::zero(), two),
        ],
        ell,
    };
    let mut rounds = Vec::with_capacity(r);
    for k in 0..r {
        let discrepancies: [C; 4] =
            std::array::from_fn(|i| basis.elements[i].discrepancy(u, k, zero));
        let order = basis.processing_order();
        let terms: [ModuleTerm; 4] = std::array::from_fn(|i| {
            basis.elements[i].leading_term(ell).expect("basis slots are nonzero")
        });
        let mut updates: [Update<C>; 4] = std::array::from_fn(|_| Update::Keep);
        let mut next = basis.elements.clone();
        for i in 0..4 {
            let zeta = discrepancies[i];
            if zeta.is_zero() {
                continue;
            }
            let pivot = order.iter().copied().find_map(|j| {
                if !term_less(&terms[j], &terms[i], ell) {
                    return None;
                }
                zeta.quotient_by(&discrepancies[j]).map(|x| (j, x))
            });
            let cancelled = pivot.and_then(|(j, x)| {
                let candidate = basis.elements[i].sub(&basis.elements[j].scale(x));
                (!candidate.is_zero()).then_some((j, x, candidate))
            });
            match cancelled {
                Some((j, x, candidate)) => {
                    next[i] = candidate;
                    updates[i] = Update::Cancel { with: j, factor: x };
                }
                None => {
                    next[i] = basis.elements[i].shift(1);
                    updates[i] = Update::Shift;
                }
            }
        }
        basis.elements = next;
        rounds.push(Round {
            k,
            discrepancies,
            updates,
            basis: basis.clone(),
        });
    }
    SbaRun { basis, rounds }
}

/// Solution by approximations under the decoder's order `<_(-1)`.
pub fn sba<C: ChainRing>(parent: &C::Parent, u: &Poly<C>, r: usize) -> GroebnerBasis<C> {
    solve_by_approximations(parent, u, r, DECODER_ORDER).basis
}

/// Why no usable key-equation solution could be selected.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SelectionFailure {
    /// The minimal regular element violates `δa <= (t+1)/2, δb <= t/2`.
    DegreeBound {
        deg_a: Option<usize>,
        deg_b: Option<usize>,
    },
    /// `a(0)` is not a unit, so the pair cannot be scaled to `a(0) = b(0) = 1`.
    NonUnitConstant,
}

impl fmt::Display for SelectionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectionFailure::DegreeBound { deg_a, deg_b } => {
                write!(f, "solution degrees {deg_a:?}/{deg_b:?} exceed the key-equation bounds")
            }
            SelectionFailure::NonUnitConstant => write!(f, "solution has a non-unit constant term"),
        }
    }
}

/// The minimal regular basis element, before and after scaling to
/// `a(0) = b(0) = 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct KeySolution<C> {
    pub selected: PairVector<C>,
    pub normalized: PairVector<C>,
}

/// Picks the `<_ℓ`-minimal basis element with a unit leading coefficient and
/// checks it against the degree bounds for capability `t`.
pub fn minimal_regular<C: ChainRing>(
    basis: &GroebnerBasis<C>,
    t: usize,
) -> std::result::Result<KeySolution<C>, SelectionFailure> {
    let ell = basis.ell;
    let selected = [LEFT_UNIT, RIGHT_UNIT]
        .iter()
        .map(|&slot| &basis.elements[slot])
        .min_by(|x, y| {
            let tx = x.leading_term(ell).expect("basis slots are nonzero");
            let ty = y.leading_term(ell).expect("basis slots are nonzero");
            tx.cmp_under(&ty, ell)
        })
        .expect("two candidate slots")
        .clone();
    let deg_a = selected.a.degree();
    let deg_b = selected.b.degree();
    if deg_a.is_some_and(|d| d > t.div_ceil(2)) || deg_b.is_some_and(|d| d > t / 2) {
        return Err(SelectionFailure::DegreeBound { deg_a, deg_b });
    }
    let inv = selected
        .a
        .coeff(0)
        .and_then(|c| c.inverse())
        .ok_or(SelectionFailure::NonUnitConstant)?;
    let normalized = selected.scale(inv);
    Ok(KeySolution {
        selected,
        normalized,
    })
}
