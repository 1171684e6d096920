//! From a received word to the key equation `(1 + T) φ ≡ ω mod z^(t+1)`.
//!
//! Only the odd syndromes `s_1, s_3, ..., s_(2t-1)` are known to a decoder.
//! They determine the odd series `u = σ_o / σ_e` through
//! `s_o (u^2 - 1) = z u'`, and `u` determines `T` through
//! `T(z^2) = (1 + z u(z))^(-1) - 1`. Every odd integer is a unit in Z4, so
//! the recursion for `u` never divides by zero.

use serde::Serialize;

use crate::code::{Code, Word};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingElement;
use crate::scalar::{Coefficient, Z4};

/// `s_1, s_3, ..., s_(2t-1)`.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct SyndromeVector {
    values: Vec<RingElement>,
}

impl SyndromeVector {
    pub fn new(values: Vec<RingElement>) -> SyndromeVector {
        SyndromeVector { values }
    }

    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `s_k` for odd `k`.
    pub fn get(&self, k: usize) -> RingElement {
        assert!(k % 2 == 1, "only odd syndromes are known");
        self.values[(k - 1) / 2]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Coefficient::is_zero)
    }
}

/// The odd coefficients `u_1, u_3, ..., u_(2t-1)`.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct OddSeries {
    values: Vec<RingElement>,
}

impl OddSeries {
    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    /// `u_k` for odd `k`.
    pub fn get(&self, k: usize) -> RingElement {
        assert!(k % 2 == 1, "u is an odd series");
        self.values[(k - 1) / 2]
    }

    /// `u` as a polynomial in `z` of degree at most `2t - 1`.
    pub fn to_poly(&self) -> Poly<RingElement> {
        let Some(first) = self.values.first() else {
            return Poly::zero();
        };
        let mut coeffs = vec![first.zero_like(); 2 * self.values.len()];
        for (i, &u) in self.values.iter().enumerate() {
            coeffs[2 * i + 1] = u;
        }
        Poly::new(coeffs)
    }
}

/// `T_1, ..., T_t`; `T_0 = 0`.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct SeriesT {
    values: Vec<RingElement>,
}

impl SeriesT {
    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    /// `1 + T_1 y + ... + T_t y^t`, the multiplier on the left of the key
    /// equation.
    pub fn one_plus_t(&self) -> Poly<RingElement> {
        let Some(first) = self.values.first() else {
            return Poly::zero();
        };
        let mut coeffs = vec![first.one_like()];
        coeffs.extend_from_slice(&self.values);
        Poly::new(coeffs)
    }
}

/// `s_k = v(α^k)` for `k = 1, 3, ..., 2t - 1`.
pub fn syndromes(v: &Word, code: &Code) -> Result<SyndromeVector> {
    if v.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            found: v.len(),
        });
    }
    let ring = code.ring();
    let values = (1..2 * code.t())
        .step_by(2)
        .map(|k| {
            v.symbols()
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .fold(ring.zero(), |acc, (j, &s)| {
                    acc + code.alpha_power((j * k) as i64).mul_int(s.value() as i64)
                })
        })
        .collect();
    Ok(SyndromeVector { values })
}

/// The inverse of an odd integer in Z4.
fn odd_inverse(k: usize) -> Z4 {
    debug_assert!(k % 2 == 1);
    // 1·1 = 1 and 3·3 = 1 modulo 4
    Z4::new(k as i64)
}

/// Solves `s_o (u^2 - 1) = z u'` coefficientwise for `u_1, ..., u_(2t-1)`:
/// `k u_k = -s_k + Σ_{j≥1} s_(k-2j) (u^2)_(2j)`.
pub fn u_coefficients(s: &SyndromeVector) -> OddSeries {
    let t = s.len();
    let Some(&first) = s.values.first() else {
        return OddSeries { values: Vec::new() };
    };
    let zero = first.zero_like();
    // u_full[i] is the coefficient of z^i
    let mut u_full = vec![zero; 2 * t];
    for k in (1..2 * t).step_by(2) {
        let mut acc = -s.get(k);
        for j in 1..=(k - 1) / 2 {
            let mut square = zero;
            for i in (1..2 * j).step_by(2) {
                square = square + u_full[i] * u_full[2 * j - i];
            }
            acc = acc + s.get(k - 2 * j) * square;
        }
        u_full[k] = acc.mul_int(odd_inverse(k).value() as i64);
    }
    OddSeries {
        values: (1..2 * t).step_by(2).map(|k| u_full[k]).collect(),
    }
}

/// `T(z^2) = (1 + z u(z))^(-1) - 1`, read off modulo `z^(2t+1)`.
pub fn t_series(u: &OddSeries) -> SeriesT {
    let t = u.values.len();
    let Some(&first) = u.values.first() else {
        return SeriesT { values: Vec::new() };
    };
    let one = Poly::constant(first.one_like());
    let even = &one + &u.to_poly().shift(1);
    let inverse = even
        .series_inverse(2 * t + 1)
        .expect("constant term of 1 + z u(z) is 1");
    let zero = first.zero_like();
    SeriesT {
        values: (1..=t).map(|j| inverse.coeff_or(2 * j, zero)).collect(),
    }
}

/// `(φ, ω)` from an error locator: `ω(z^2) = σ_e(z)` and
/// `φ(z^2) = σ_e(z) + z σ_o(z)`.
pub fn phi_omega_from_sigma(
    sigma: &Poly<RingElement>,
) -> Result<(Poly<RingElement>, Poly<RingElement>)> {
    let c0 = sigma
        .coeff(0)
        .ok_or_else(|| Error::Domain("error locator is zero".into()))?;
    if !c0.is_one() {
        return Err(Error::Domain("error locator must have constant term 1".into()));
    }
    let zero = c0.zero_like();
    let len = sigma.coeffs().len() / 2 + 1;
    let omega = (0..len).map(|i| sigma.coeff_or(2 * i, zero)).collect();
    let phi = (0..len)
        .map(|i| {
            let odd = if i == 0 { zero } else { sigma.coeff_or(2 * i - 1, zero) };
            sigma.coeff_or(2 * i, zero) + odd
        })
        .collect();
    Ok((Poly::new(phi), Poly::new(omega)))
}

/// The locator `X_j` of position `j` carrying symbol `e`: `α^j` for `e ∈ {1, 2}`
/// and `-α^j = α^(j+n)` for `e = 3`.
pub fn error_locator_value(code: &Code, j: usize, e: Z4) -> Option<RingElement> {
    match e.value() {
        0 => None,
        3 => Some(code.alpha_power((j + code.n()) as i64)),
        _ => Some(code.alpha_power(j as i64)),
    }
}

/// `σ = Π (1 - X_j z)^(w(e_j))`.
pub fn error_locator(e: &Word, code: &Code) -> Poly<RingElement> {
    let ring = code.ring();
    let mut sigma = Poly::one(&ring);
    for (j, &s) in e.symbols().iter().enumerate() {
        if let Some(x) = error_locator_value(code, j, s) {
            let factor = Poly::new(vec![ring.one(), -x]);
            for _ in 0..s.lee_weight() {
                sigma = &sigma * &factor;
            }
        }
    }
    sigma
}

/// Power sums `s_k = Σ w(e_j) X_j^k` for `k = 1..=count`, even `k` included.
pub fn power_sums(e: &Word, code: &Code, count: usize) -> Vec<RingElement> {
    let ring = code.ring();
    (1..=count)
        .map(|k| {
            e.symbols()
                .iter()
                .enumerate()
                .filter_map(|(j, &s)| {
                    error_locator_value(code, j, s)
                        .map(|x| x.pow(k as u64).mul_int(s.lee_weight() as i64))
                })
                .fold(ring.zero(), |a, b| a + b)
        })
        .collect()
}
