//! Free negacyclic codes `C = <g>` in `Z4[x]/(x^n + 1)` whose generator has
//! the roots `α, α^3, ..., α^(2t-1)`, together with the Lee metric and an
//! exhaustive minimum-distance search.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{ModulusTable, RingDescriptor, RingElement, MAX_DEGREE};
use crate::scalar::{Coefficient, Z4};
use crate::text::{digits_to_string, parse_digits};

/// Largest rank accepted by the exhaustive searches (`4^12` codewords).
pub const MAX_EXHAUSTIVE_RANK: usize = 12;

/// A word of `Z4^n`, position 0 first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<Z4>);

impl Word {
    pub fn new(symbols: Vec<Z4>) -> Word {
        Word(symbols)
    }

    pub fn zeros(n: usize) -> Word {
        Word(vec![Z4::ZERO; n])
    }

    pub fn from_poly(p: &Poly<Z4>, n: usize) -> Result<Word> {
        if p.degree().is_some_and(|d| d >= n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: p.degree().unwrap() + 1,
            });
        }
        let mut symbols = vec![Z4::ZERO; n];
        symbols[..p.coeffs().len()].copy_from_slice(p.coeffs());
        Ok(Word(symbols))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Z4] {
        &self.0
    }

    pub fn symbols_mut(&mut self) -> &mut [Z4] {
        &mut self.0
    }

    pub fn to_poly(&self) -> Poly<Z4> {
        Poly::new(self.0.clone())
    }

    pub fn lee_weight(&self) -> u32 {
        self.0.iter().map(|s| s.lee_weight()).sum()
    }

    /// Positions holding a nonzero symbol.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    fn zip_with(&self, other: &Word, f: impl Fn(Z4, Z4) -> Z4) -> Result<Word> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Word(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect()))
    }

    pub fn checked_add(&self, other: &Word) -> Result<Word> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Word) -> Result<Word> {
        self.zip_with(other, |a, b| a - b)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&digits_to_string(&self.0))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        parse_digits(s).map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

pub fn lee_distance(u: &Word, v: &Word) -> Result<u32> {
    Ok(u.checked_sub(v)?.lee_weight())
}

/// `f(x) ↦ f(-x)`, the Lee isometry between cyclic and negacyclic codes.
pub fn lambda_map(f: &Poly<Z4>, n: usize) -> Result<Poly<Z4>> {
    if f.degree().is_some_and(|d| d >= n) {
        return Err(Error::Domain(format!("degree {:?} is not below n = {n}", f.degree())));
    }
    Ok(f.at_negated())
}

/// Multiplicative order of 2 modulo an odd `n > 1`.
pub fn order_of_two(n: usize) -> Option<usize> {
    if n < 3 || n.is_multiple_of(2) {
        return None;
    }
    let mut x = 2 % n;
    let mut k = 1;
    while x != 1 {
        x = x * 2 % n;
        k += 1;
    }
    Some(k)
}

/// The cyclotomic coset `{i·2^j mod n}`, sorted.
pub fn cyclotomic_coset(i: usize, n: usize) -> Vec<usize> {
    let mut coset = vec![i % n];
    let mut x = i * 2 % n;
    while x != i % n {
        coset.push(x);
        x = x * 2 % n;
    }
    coset.sort_unstable();
    coset
}

#[derive(Clone, Debug)]
pub struct Code {
    n: usize,
    t: usize,
    ring: RingDescriptor,
    alpha: RingElement,
    cyclic_generator: Poly<Z4>,
    generator: Poly<Z4>,
    alpha_powers: Vec<RingElement>,
}

/// Summary record used by the command line.
#[derive(Clone, Debug, Serialize)]
pub struct CodeInfo {
    pub n: usize,
    pub t: usize,
    pub m: usize,
    pub modulus: Vec<u8>,
    pub alpha: RingElement,
    pub generator: String,
    pub k: usize,
    pub bound: usize,
}

impl Code {
    /// Builds the code of length `n` and design capability `t` over the
    /// built-in modulus table.
    pub fn new(n: usize, t: usize) -> Result<Code> {
        Code::with_table(n, t, &ModulusTable::builtin())
    }

    pub fn with_table(n: usize, t: usize, table: &ModulusTable) -> Result<Code> {
        if n.is_multiple_of(2) {
            return Err(Error::Domain(format!("length must be odd, got {n}")));
        }
        if t == 0 || 2 * t > n {
            return Err(Error::Domain(format!("need 1 <= t and 2t - 1 < n, got n = {n}, t = {t}")));
        }
        let m = order_of_two(n).ok_or_else(|| Error::Domain(format!("invalid length {n}")))?;
        if m > MAX_DEGREE {
            return Err(Error::Unsupported(format!(
                "n = {n} needs GR(4,{m}); at most m = {MAX_DEGREE} is supported"
            )));
        }
        let ring = table.ring(m)?;
        let alpha = ring.negacyclic_root(n as u64)?;
        let beta = -alpha;

        let mut alpha_powers = Vec::with_capacity(2 * n);
        let mut p = ring.one();
        for _ in 0..2 * n {
            alpha_powers.push(p);
            p = p * alpha;
        }
        let beta_powers: Vec<RingElement> = (0..n)
            .map(|j| if j % 2 == 0 { alpha_powers[j] } else { -alpha_powers[j] })
            .collect();
        debug_assert_eq!(beta_powers[1], beta);

        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for i in (1..2 * t).step_by(2) {
            let coset = cyclotomic_coset(i, n);
            if !cosets.contains(&coset) {
                cosets.push(coset);
            }
        }
        let mut cyclic_generator = Poly::constant(Z4::ONE);
        for coset in &cosets {
            let mut min_poly = Poly::one(&ring);
            for &j in coset {
                let linear = Poly::new(vec![-beta_powers[j], ring.one()]);
                min_poly = &min_poly * &linear;
            }
            let over_z4 = min_poly
                .coeffs()
                .iter()
                .map(|c| {
                    if c.coeffs()[1..].iter().all(|&d| d == 0) {
                        Ok(Z4::new(c.coeffs()[0] as i64))
                    } else {
                        Err(Error::Consistency(format!(
                            "minimal polynomial of beta^{} has a coefficient outside Z4",
                            coset[0]
                        )))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            cyclic_generator = &cyclic_generator * &Poly::new(over_z4);
        }

        let mut generator = cyclic_generator.at_negated();
        if generator.degree().unwrap() % 2 == 1 {
            generator = -generator;
        }

        let code = Code {
            n,
            t,
            ring,
            alpha,
            cyclic_generator,
            generator,
            alpha_powers,
        };
        code.check_generator()?;
        Ok(code)
    }

    fn check_generator(&self) -> Result<()> {
        let lifted = self.generator.map(|c| self.ring.constant(c));
        for i in (1..2 * self.t).step_by(2) {
            if !lifted.eval(self.alpha_power(i as i64)).is_zero() {
                return Err(Error::Consistency(format!("generator does not vanish at alpha^{i}")));
            }
        }
        let (_, r) = self.negacyclic_modulus().divmod(&self.generator)?;
        if !r.is_zero() {
            return Err(Error::Consistency("generator does not divide x^n + 1".into()));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Rank `k = n - deg g`; the code has `4^k` words.
    pub fn k(&self) -> usize {
        self.n - self.generator.degree().unwrap()
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn alpha(&self) -> RingElement {
        self.alpha
    }

    /// `α^e` for any integer exponent, using `α^(2n) = 1`.
    pub fn alpha_power(&self, e: i64) -> RingElement {
        self.alpha_powers[e.rem_euclid(2 * self.n as i64) as usize]
    }

    pub fn generator(&self) -> &Poly<Z4> {
        &self.generator
    }

    /// The generator `f` of the cyclic pre-image, with `λ(f) = ±g`.
    pub fn cyclic_generator(&self) -> &Poly<Z4> {
        &self.cyclic_generator
    }

    /// `x^n + 1`.
    pub fn negacyclic_modulus(&self) -> Poly<Z4> {
        let mut c = vec![Z4::ZERO; self.n + 1];
        c[0] = Z4::ONE;
        c[self.n] = Z4::ONE;
        Poly::new(c)
    }

    pub fn info(&self) -> CodeInfo {
        CodeInfo {
            n: self.n,
            t: self.t,
            m: self.ring.degree(),
            modulus: self.ring.modulus_digits(),
            alpha: self.alpha,
            generator: digits_to_string(self.generator.coeffs()),
            k: self.k(),
            bound: 2 * self.t + 1,
        }
    }

    /// Multiplies the message polynomial by `g` modulo `x^n + 1`.
    pub fn encode(&self, msg: &[Z4]) -> Result<Word> {
        if msg.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                found: msg.len(),
            });
        }
        let product = &Poly::new(msg.to_vec()) * &self.generator;
        let mut symbols = vec![Z4::ZERO; self.n];
        for (i, &c) in product.coeffs().iter().enumerate() {
            if i < self.n {
                symbols[i] += c;
            } else {
                symbols[i - self.n] -= c;
            }
        }
        Ok(Word::new(symbols))
    }

    /// Membership test by exact division by the generator.
    pub fn contains(&self, word: &Word) -> bool {
        word.len() == self.n
            && word
                .to_poly()
                .divmod(&self.generator)
                .is_ok_and(|(_, r)| r.is_zero())
    }

    pub fn random_message<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Z4> {
        (0..self.k()).map(|_| Z4::new(rng.gen_range(0..4))).collect()
    }

    /// Rows `x^i g` of the generator matrix as raw symbol vectors.
    fn generator_rows(&self) -> Vec<Vec<u8>> {
        (0..self.k())
            .map(|i| {
                let mut msg = vec![Z4::ZERO; self.k()];
                msg[i] = Z4::ONE;
                self.encode(&msg)
                    .expect("unit message has rank length")
                    .symbols()
                    .iter()
                    .map(|s| s.value())
                    .collect()
            })
            .collect()
    }

    /// Minimum Lee weight of `offset + c` over all codewords `c`, skipping
    /// `c = 0` when `skip_zero` is set. Messages are split into disjoint
    /// blocks by their top digits; the result does not depend on the split.
    fn min_weight_over_code(&self, offset: &[u8], skip_zero: bool) -> Result<u32> {
        let k = self.k();
        if k > MAX_EXHAUSTIVE_RANK {
            return Err(Error::TooLarge {
                rank: k,
                limit: MAX_EXHAUSTIVE_RANK,
            });
        }
        let rows = self.generator_rows();
        let prefix_digits = k.min(3);
        let low_digits = k - prefix_digits;
        let blocks = 1usize << (2 * prefix_digits);
        let best = (0..blocks)
            .into_par_iter()
            .map(|block| {
                let mut word = offset.to_vec();
                for d in 0..prefix_digits {
                    let digit = (block >> (2 * d)) & 3;
                    let row = &rows[low_digits + d];
                    for _ in 0..digit {
                        add_row(&mut word, row);
                    }
                }
                let mut best = u32::MAX;
                if !(skip_zero && block == 0) {
                    best = lee_weight_raw(&word);
                }
                let mut counter = vec![0u8; low_digits];
                loop {
                    // odometer step: each digit change adds its row once
                    let mut pos = 0;
                    while pos < low_digits {
                        add_row(&mut word, &rows[pos]);
                        counter[pos] = (counter[pos] + 1) & 3;
                        if counter[pos] != 0 {
                            break;
                        }
                        pos += 1;
                    }
                    if pos == low_digits {
                        break;
                    }
                    best = best.min(lee_weight_raw(&word));
                }
                best
            })
            .min()
            .unwrap_or(u32::MAX);
        Ok(best)
    }

    /// Minimum Lee distance by enumerating all `4^k - 1` nonzero codewords.
    pub fn min_distance_exhaustive(&self) -> Result<u32> {
        let zero = vec![0u8; self.n];
        self.min_weight_over_code(&zero, true)
    }

    /// Lee distance from `word` to the nearest codeword, by enumeration.
    pub fn distance_to_code_exhaustive(&self, word: &Word) -> Result<u32> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        let raw: Vec<u8> = word.symbols().iter().map(|s| s.value()).collect();
        self.min_weight_over_code(&raw, false)
    }

    /// Upper bound on the minimum distance from `samples` random nonzero
    /// codewords.
    pub fn min_distance_sampled<R: Rng + ?Sized>(&self, samples: usize, rng: &mut R) -> u32 {
        let mut best = u32::MAX;
        let mut drawn = 0;
        while drawn < samples {
            let msg = self.random_message(rng);
            if msg.iter().all(|s| s.is_zero()) {
                continue;
            }
            drawn += 1;
            let w = self.encode(&msg).expect("message has rank length").lee_weight();
            best = best.min(w);
        }
        best
    }
}

fn add_row(word: &mut [u8], row: &[u8]) {
    for (w, &r) in word.iter_mut().zip(row) {
        *w = (*w + r) & 3;
    }
}

fn lee_weight_raw(word: &[u8]) -> u32 {
    const LEE: [u32; 4] = [0, 1, 2, 1];
    word.iter().map(|&s| LEE[s as usize]).sum()
}
