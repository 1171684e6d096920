//! Two-pass decoding of Lee-weight errors.
//!
//! Pass one solves the key equation and reduces the error locator modulo 2.
//! Over the residue field a double error (symbol 2) shows up as a double root
//! and a ±1 error as a simple root. The double errors are subtracted, and pass
//! two repeats the computation over GR(4,m), where `1 - Xz` vanishes at
//! `α^(-j)` for `e_j = 1` and at `α^(-j+n)` for `e_j = 3`.

use std::fmt;

use serde::Serialize;

use crate::code::Code;
use crate::code::Word;
use crate::error::Result;
use crate::field::FieldElement;
use crate::keyeq::{self, OddSeries, SyndromeVector};
use crate::poly::Poly;
use crate::ring::RingElement;
use crate::scalar::{Coefficient, Z4};
use crate::solver::{self, PairVector, SelectionFailure};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// The received word does not have length n.
    Length { expected: usize, found: usize },
    /// No solution of the key equation satisfies the degree bounds.
    DegreeBound {
        pass: u8,
        deg_a: Option<usize>,
        deg_b: Option<usize>,
    },
    /// The selected solution cannot be normalized.
    NonUnitConstant { pass: u8 },
    /// The two halves of the solution disagree in their constant terms.
    InconsistentPair { pass: u8 },
    /// A root of the residue locator of multiplicity above 2.
    RootMultiplicity { position: usize, multiplicity: usize },
    /// The locator's roots among the code locators do not account for its degree.
    RootCount { pass: u8, found: usize, degree: usize },
    /// The locator vanishes at both `α^(-j)` and `α^(-j+n)`.
    AmbiguousSign { position: usize },
    /// The candidate codeword is not in the code or is too far from the input.
    Verification { distance: u32 },
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::Length { expected, found } => {
                write!(f, "word has length {found}, code length is {expected}")
            }
            FailureReason::DegreeBound { pass, deg_a, deg_b } => write!(
                f,
                "pass {pass}: key-equation solution has degrees {deg_a:?}/{deg_b:?}, beyond the bounds"
            ),
            FailureReason::NonUnitConstant { pass } => {
                write!(f, "pass {pass}: key-equation solution has a non-unit constant term")
            }
            FailureReason::InconsistentPair { pass } => {
                write!(f, "pass {pass}: solution pair has mismatched constant terms")
            }
            FailureReason::RootMultiplicity {
                position,
                multiplicity,
            } => write!(f, "locator root at position {position} has multiplicity {multiplicity}"),
            FailureReason::RootCount {
                pass,
                found,
                degree,
            } => write!(f, "pass {pass}: found {found} roots for a locator of degree {degree}"),
            FailureReason::AmbiguousSign { position } => {
                write!(f, "locator vanishes at both sign choices for position {position}")
            }
            FailureReason::Verification { distance } => {
                write!(f, "candidate codeword failed verification (distance {distance})")
            }
        }
    }
}

impl std::error::Error for FailureReason {}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DecodeStatus {
    Success { codeword: Word, error: Word },
    Failure { reason: FailureReason },
}

/// Intermediate values of one pass of the key-equation pipeline.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PassTrace {
    pub syndromes: SyndromeVector,
    pub u: OddSeries,
    #[serde(rename = "oneplusT")]
    pub one_plus_t: Poly<RingElement>,
    /// The minimal regular basis element as found, before normalization.
    pub solverpair: Option<PairVector<RingElement>>,
    pub rounds: Vec<solver::Round<RingElement>>,
}

/// Diagnostic record; the top-level pipeline fields belong to pass one.
#[derive(Clone, PartialEq, Debug, Default, Serialize)]
pub struct DecodeTrace {
    pub syndromes: Option<SyndromeVector>,
    pub u: Option<OddSeries>,
    #[serde(rename = "oneplusT")]
    pub one_plus_t: Option<Poly<RingElement>>,
    pub solverpair: Option<PairVector<RingElement>>,
    pub sigma_mod2: Option<Poly<FieldElement>>,
    pub doubles: Vec<usize>,
    pub singles: Vec<usize>,
    pub sigma_pass2: Option<Poly<RingElement>>,
    pub error: Option<Word>,
    pub codeword: Option<Word>,
    pub rounds: Vec<solver::Round<RingElement>>,
    pub pass2: Option<PassTrace>,
}

impl DecodeTrace {
    fn record_pass_one(&mut self, p: PassTrace) {
        self.syndromes = Some(p.syndromes);
        self.u = Some(p.u);
        self.one_plus_t = Some(p.one_plus_t);
        self.solverpair = p.solverpair;
        self.rounds = p.rounds;
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct DecodeOutcome {
    #[serde(flatten)]
    pub status: DecodeStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<DecodeTrace>,
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self.status, DecodeStatus::Success { .. })
    }

    pub fn codeword(&self) -> Option<&Word> {
        match &self.status {
            DecodeStatus::Success { codeword, .. } => Some(codeword),
            DecodeStatus::Failure { .. } => None,
        }
    }

    pub fn error(&self) -> Option<&Word> {
        match &self.status {
            DecodeStatus::Success { error, .. } => Some(error),
            DecodeStatus::Failure { .. } => None,
        }
    }

    pub fn failure(&self) -> Option<&FailureReason> {
        match &self.status {
            DecodeStatus::Success { .. } => None,
            DecodeStatus::Failure { reason } => Some(reason),
        }
    }
}

type Step<T> = std::result::Result<T, FailureReason>;

/// `σ` from a normalized key-equation solution `[g, h] = [φ, ω]`:
/// `σ_(2i) = h_i` and `σ_(2i-1) = g_i - h_i`.
pub fn sigma_from_pair<C: Coefficient>(g: &Poly<C>, h: &Poly<C>) -> Option<Poly<C>> {
    let g0 = g.coeff(0)?;
    let zero = g0.zero_like();
    if g0 != h.coeff_or(0, zero) {
        return None;
    }
    let len = g.coeffs().len().max(h.coeffs().len());
    let mut sigma = vec![zero; 2 * len.max(1) - 1];
    for i in 0..len {
        sigma[2 * i] = h.coeff_or(i, zero);
        if i > 0 {
            sigma[2 * i - 1] = g.coeff_or(i, zero) - h.coeff_or(i, zero);
        }
    }
    Some(Poly::new(sigma))
}

/// `μσ(z) = μh(z^2) + z^(-1)(μg(z^2) - μh(z^2))`.
pub fn sigma_mod2(
    g: &Poly<RingElement>,
    h: &Poly<RingElement>,
) -> Option<Poly<FieldElement>> {
    sigma_from_pair(&g.map(|c| c.mu()), &h.map(|c| c.mu()))
}

/// Positions of double and single errors from the residue locator.
pub fn locate_errors_mod2(
    mu_sigma: &Poly<FieldElement>,
    code: &Code,
) -> Step<(Vec<usize>, Vec<usize>)> {
    let degree = mu_sigma.degree().unwrap_or(0);
    let mut doubles = Vec::new();
    let mut singles = Vec::new();
    let mut found = 0;
    for j in 0..code.n() {
        let root = code.alpha_power(-(j as i64)).mu();
        let multiplicity = mu_sigma.root_multiplicity(root).map_err(|_| FailureReason::RootCount {
            pass: 1,
            found,
            degree,
        })?;
        match multiplicity {
            0 => {}
            1 => singles.push(j),
            2 => doubles.push(j),
            _ => return Err(FailureReason::RootMultiplicity { position: j, multiplicity }),
        }
        found += multiplicity;
    }
    if found != degree {
        return Err(FailureReason::RootCount { pass: 1, found, degree });
    }
    Ok((doubles, singles))
}

/// The ±1 error word from the pass-two locator over GR(4,m).
pub fn resolve_signs(sigma: &Poly<RingElement>, code: &Code) -> Step<Word> {
    let n = code.n();
    let degree = sigma.degree().unwrap_or(0);
    let mut e = Word::zeros(n);
    let mut found = 0;
    for j in 0..n {
        let plus = sigma.eval(code.alpha_power(-(j as i64))).is_zero();
        let minus = sigma.eval(code.alpha_power(n as i64 - j as i64)).is_zero();
        e.symbols_mut()[j] = match (plus, minus) {
            (true, true) => return Err(FailureReason::AmbiguousSign { position: j }),
            (true, false) => Z4::ONE,
            (false, true) => Z4::THREE,
            (false, false) => continue,
        };
        found += 1;
    }
    if found != degree {
        return Err(FailureReason::RootCount { pass: 2, found, degree });
    }
    Ok(e)
}

/// Syndromes through the key-equation solution: the normalized pair `[φ, ω]`, or `None` when all
/// syndromes vanish.
fn key_equation(
    v: &Word,
    code: &Code,
    pass: u8,
) -> Result<(PassTrace, Step<Option<PairVector<RingElement>>>)> {
    let syndromes = keyeq::syndromes(v, code)?;
    let u = keyeq::u_coefficients(&syndromes);
    let one_plus_t = keyeq::t_series(&u).one_plus_t();
    let mut trace = PassTrace {
        syndromes,
        u,
        one_plus_t,
        solverpair: None,
        rounds: Vec::new(),
    };
    if trace.syndromes.is_zero() {
        return Ok((trace, Ok(None)));
    }
    let ring = code.ring();
    let run = solver::solve_by_approximations(
        &ring,
        &trace.one_plus_t,
        code.t() + 1,
        solver::DECODER_ORDER,
    );
    let selection = solver::minimal_regular(&run.basis, code.t());
    trace.rounds = run.rounds;
    let step = match selection {
        Ok(sol) => {
            trace.solverpair = Some(sol.selected);
            Ok(Some(sol.normalized))
        }
        Err(SelectionFailure::DegreeBound { deg_a, deg_b }) => {
            Err(FailureReason::DegreeBound { pass, deg_a, deg_b })
        }
        Err(SelectionFailure::NonUnitConstant) => Err(FailureReason::NonUnitConstant { pass }),
    };
    Ok((trace, step))
}

fn run(v: &Word, code: &Code, trace: &mut DecodeTrace) -> Step<(Word, Word)> {
    let n = code.n();
    if v.len() != n {
        return Err(FailureReason::Length {
            expected: n,
            found: v.len(),
        });
    }
    let length_checked = |r: Result<_>| {
        r.map_err(|_| FailureReason::Length {
            expected: n,
            found: v.len(),
        })
    };

    // pass one: double errors from the residue locator
    let (pass_one, step) = length_checked(key_equation(v, code, 1))?;
    trace.record_pass_one(pass_one);
    let Some(pair) = step? else {
        trace.error = Some(Word::zeros(n));
        trace.codeword = Some(v.clone());
        return Ok((v.clone(), Word::zeros(n)));
    };
    let mu_sigma = sigma_mod2(&pair.a, &pair.b).ok_or(FailureReason::InconsistentPair { pass: 1 })?;
    trace.sigma_mod2 = Some(mu_sigma.clone());
    let (doubles, singles) = locate_errors_mod2(&mu_sigma, code)?;
    trace.doubles = doubles.clone();
    trace.singles = singles;

    let mut error = Word::zeros(n);
    for &j in &doubles {
        error.symbols_mut()[j] = Z4::TWO;
    }
    let v_prime = v.checked_sub(&error).expect("lengths agree");

    // pass two: signs of the remaining errors over the ring
    let (pass_two, step) = length_checked(key_equation(&v_prime, code, 2))?;
    trace.pass2 = Some(pass_two);
    if let Some(pair) = step? {
        let sigma = sigma_from_pair(&pair.a, &pair.b).ok_or(FailureReason::InconsistentPair { pass: 2 })?;
        trace.sigma_pass2 = Some(sigma.clone());
        let e_prime = resolve_signs(&sigma, code)?;
        error = error.checked_add(&e_prime).expect("lengths agree");
    }

    let codeword = v.checked_sub(&error).expect("lengths agree");
    let distance = error.lee_weight();
    let verified = distance as usize <= code.t()
        && keyeq::syndromes(&codeword, code).is_ok_and(|s| s.is_zero())
        && code.contains(&codeword);
    if !verified {
        return Err(FailureReason::Verification { distance });
    }
    trace.error = Some(error.clone());
    trace.codeword = Some(codeword.clone());
    Ok((codeword, error))
}

/// Decodes `v`, returning the codeword within Lee distance `t` or a failure.
pub fn decode(v: &Word, code: &Code) -> DecodeOutcome {
    let mut outcome = decode_with_trace(v, code);
    outcome.trace = None;
    outcome
}

/// Like [`decode`], with the intermediate values of both passes attached.
pub fn decode_with_trace(v: &Word, code: &Code) -> DecodeOutcome {
    let mut trace = DecodeTrace::default();
    let status = match run(v, code, &mut trace) {
        Ok((codeword, error)) => DecodeStatus::Success { codeword, error },
        Err(reason) => DecodeStatus::Failure { reason },
    };
    DecodeOutcome {
        status,
        trace: Some(trace),
    }
}
