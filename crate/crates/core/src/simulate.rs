//! Monte Carlo decoding runs with errors of a fixed Lee weight.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{Code, Word};
use crate::decoder::decode;
use crate::error::{Error, Result};
use crate::scalar::Z4;

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// A uniformly random error pattern of length `n` and Lee weight exactly `w`.
///
/// A pattern with `d` symbols equal to 2 and `s` symbols equal to ±1 has
/// `2d + s = w`; there are `C(n,d) C(n-d,s) 2^s` of them, and the split
/// `(d, s)` is drawn with that weight before the positions and signs.
pub fn random_error_of_weight<R: Rng + ?Sized>(n: usize, w: usize, rng: &mut R) -> Result<Word> {
    let splits: Vec<(usize, usize)> = (0..=w / 2)
        .map(|d| (d, w - 2 * d))
        .filter(|&(d, s)| d + s <= n)
        .collect();
    if splits.is_empty() {
        return Err(Error::Domain(format!("no word of length {n} has Lee weight {w}")));
    }
    let weights: Vec<f64> = splits
        .iter()
        .map(|&(d, s)| binomial(n, d) * binomial(n - d, s) * 2f64.powi(s as i32))
        .collect();
    let (d, s) = splits[WeightedIndex::new(&weights)
        .expect("weights are positive")
        .sample(rng)];
    let mut e = Word::zeros(n);
    for (i, pos) in index::sample(rng, n, d + s).into_iter().enumerate() {
        e.symbols_mut()[pos] = if i < d {
            Z4::TWO
        } else if rng.gen() {
            Z4::ONE
        } else {
            Z4::THREE
        };
    }
    Ok(e)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SimulationReport {
    pub n: usize,
    pub t: usize,
    pub weight: usize,
    pub trials: usize,
    pub seed: u64,
    /// Decoded back to the transmitted codeword.
    pub successes: usize,
    /// Decoded to some other codeword.
    pub miscorrections: usize,
    /// Decoder reported failure.
    pub failures: usize,
}

/// Decodes `trials` random codewords corrupted by errors of Lee weight
/// `weight`. Samples are drawn sequentially from one seeded stream and
/// decoded in parallel, so the report depends only on the arguments.
pub fn simulate(code: &Code, weight: usize, trials: usize, seed: u64) -> Result<SimulationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(trials);
    for _ in 0..trials {
        let c = code.encode(&code.random_message(&mut rng))?;
        let e = random_error_of_weight(code.n(), weight, &mut rng)?;
        samples.push((c, e));
    }
    let (successes, miscorrections, failures) = samples
        .par_iter()
        .map(|(c, e)| {
            let v = c.checked_add(e).expect("lengths agree");
            match decode(&v, code).codeword() {
                Some(d) if d == c => (1, 0, 0),
                Some(_) => (0, 1, 0),
                None => (0, 0, 1),
            }
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    Ok(SimulationReport {
        n: code.n(),
        t: code.t(),
        weight,
        trials,
        seed,
        successes,
        miscorrections,
        failures,
    })
}
