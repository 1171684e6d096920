//! Independent oracles and randomized property suites shared by the
//! integration tests and the acceptance run.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use z4neg::decoder::{decode, decode_with_trace};
use z4neg::keyeq::{self, error_locator, phi_omega_from_sigma, power_sums};
use z4neg::simulate::random_error_of_weight;
use z4neg::solver::{self, ModuleTerm, Side};
use z4neg::{make_ring, Code, Coefficient, Poly, RingDescriptor, RingElement, Word, Z4};

pub const SEED: u64 = 0x5eed_2024;
pub const CASES: usize = 500;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

pub fn random_element<R: Rng>(ring: &RingDescriptor, rng: &mut R) -> RingElement {
    let coeffs: Vec<i64> = (0..ring.degree()).map(|_| rng.gen_range(0..4)).collect();
    ring.element(&coeffs).unwrap()
}

/// A random error of Lee weight at most `t`.
pub fn random_error<R: Rng>(code: &Code, rng: &mut R) -> Word {
    let w = rng.gen_range(0..=code.t());
    random_error_of_weight(code.n(), w, rng).unwrap()
}

/// Runs `check` on `cases` inputs; returns the first failure message.
pub fn for_all<R: Rng>(
    cases: usize,
    rng: &mut R,
    mut check: impl FnMut(&mut R) -> Result<(), String>,
) -> Result<(), String> {
    for i in 0..cases {
        check(rng).map_err(|msg| format!("case {i}: {msg}"))?;
    }
    Ok(())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn decoding_codes() -> Vec<Code> {
    [(15, 1), (15, 2), (15, 3), (31, 2), (31, 3), (31, 5)]
        .iter()
        .map(|&(n, t)| Code::new(n, t).unwrap())
        .collect()
}

// ---------------------------------------------------------------------------
// Linear algebra over Z4

/// Solves `A x = b` over Z4 by reduction to Smith form, or returns `None`.
pub fn solve_z4(a: &[Vec<u8>], b: &[u8]) -> Option<Vec<u8>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u8>> = a.to_vec();
    let mut rhs = b.to_vec();
    // column operations are recorded in q so that x = q y
    let mut q: Vec<Vec<u8>> = (0..cols)
        .map(|i| (0..cols).map(|j| u8::from(i == j)).collect())
        .collect();
    let mut rank = 0;
    while rank < rows.min(cols) {
        // pivot of minimal 2-adic valuation: units first, then 2
        let mut pivot = None;
        'search: for want in [1u8, 2] {
            for i in rank..rows {
                for j in rank..cols {
                    let v = m[i][j];
                    if (want == 1 && v % 2 == 1) || (want == 2 && v == 2) {
                        pivot = Some((i, j));
                        break 'search;
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(rank, pi);
        rhs.swap(rank, pi);
        for row in m.iter_mut() {
            row.swap(rank, pj);
        }
        for row in q.iter_mut() {
            row.swap(rank, pj);
        }
        let p = m[rank][rank];
        if p % 2 == 1 {
            // p is its own inverse modulo 4
            for v in m[rank].iter_mut() {
                *v = (*v * p) % 4;
            }
            rhs[rank] = (rhs[rank] * p) % 4;
        }
        let p = m[rank][rank];
        for i in 0..rows {
            if i == rank || m[i][rank] == 0 {
                continue;
            }
            // every remaining entry is a multiple of the pivot
            let f = if p == 1 { m[i][rank] } else { m[i][rank] / 2 };
            for j in 0..cols {
                m[i][j] = (m[i][j] + 4 * 4 - f * m[rank][j]) % 4;
            }
            rhs[i] = (rhs[i] + 16 - f * rhs[rank]) % 4;
        }
        for j in 0..cols {
            if j == rank || m[rank][j] == 0 {
                continue;
            }
            let f = if p == 1 { m[rank][j] } else { m[rank][j] / 2 };
            for row in m.iter_mut() {
                row[j] = (row[j] + 16 - f * row[rank]) % 4;
            }
            for row in q.iter_mut() {
                row[j] = (row[j] + 16 - f * row[rank]) % 4;
            }
        }
        rank += 1;
    }
    let mut y = vec![0u8; cols];
    for i in 0..rows {
        let d = if i < rank { m[i][i] } else { 0 };
        match d {
            1 => y[i] = rhs[i],
            2 => {
                if rhs[i] % 2 == 1 {
                    return None;
                }
                y[i] = rhs[i] / 2;
            }
            _ => {
                if rhs[i] != 0 {
                    return None;
                }
            }
        }
    }
    Some(
        (0..cols)
            .map(|i| (0..cols).fold(0u32, |acc, j| acc + q[i][j] as u32 * y[j] as u32) as u8 % 4)
            .collect(),
    )
}

/// Whether `a φ + b ω = 2` has a solution with `deg a, deg b <= bound`, by
/// writing the coefficients of `a` and `b` in Z4 coordinates.
pub fn two_in_ideal(phi: &Poly<RingElement>, omega: &Poly<RingElement>, bound: usize) -> bool {
    let ring = phi.coeff(0).unwrap().ring();
    let m = ring.degree();
    let basis: Vec<RingElement> = (0..m)
        .map(|i| {
            let mut c = vec![0i64; m];
            c[i] = 1;
            ring.element(&c).unwrap()
        })
        .collect();
    let top = bound + phi.coeffs().len().max(omega.coeffs().len());
    let unknowns = 2 * (bound + 1) * m;
    let mut a = vec![vec![0u8; unknowns]; top * m];
    for (side, factor) in [phi, omega].into_iter().enumerate() {
        for deg in 0..=bound {
            for (coord, e) in basis.iter().enumerate() {
                let col = side * (bound + 1) * m + deg * m + coord;
                let product = &Poly::monomial(*e, deg) * factor;
                for (i, c) in product.coeffs().iter().enumerate() {
                    for (k, &v) in c.coeffs().iter().enumerate().take(m) {
                        a[i * m + k][col] = v;
                    }
                }
            }
        }
    }
    let mut rhs = vec![0u8; top * m];
    rhs[0] = 2;
    solve_z4(&a, &rhs).is_some()
}

// ---------------------------------------------------------------------------
// Suites

pub fn newton_identity_suite() -> Result<(), String> {
    let mut rng = rng(1);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let e = random_error(code, rng);
        let sigma = error_locator(&e, code);
        let ring = code.ring();
        let mut s = vec![ring.zero()];
        s.extend(power_sums(&e, code, 2 * code.t()));
        let s = Poly::new(s);
        let lhs = (&(&s * &sigma) + &sigma.derivative().shift(1)).truncate(2 * code.t() + 1);
        ensure(lhs.is_zero(), || format!("n={} e={e}: s σ + z σ' ≠ 0", code.n()))?;
        // the odd power sums are the decoder's syndromes
        let syn = keyeq::syndromes(&e, code).unwrap();
        for k in (1..2 * code.t()).step_by(2) {
            ensure(syn.get(k) == s.coeff_or(k, ring.zero()), || format!("s_{k} mismatch for {e}"))?;
        }
        Ok(())
    })
}

pub fn odd_series_suite() -> Result<(), String> {
    // s_o (u^2 - 1) = z u' with u = σ_o / σ_e
    let mut rng = rng(2);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let e = random_error(code, rng);
        let t = code.t();
        let sigma = error_locator(&e, code);
        let (se, so) = sigma.even_odd_split();
        let u = keyeq::u_coefficients(&keyeq::syndromes(&e, code).unwrap()).to_poly();
        // u σ_e ≡ σ_o
        let lhs = (&u * &se).truncate(2 * t);
        ensure(lhs == so.truncate(2 * t), || format!("u σ_e ≠ σ_o for {e}"))?;
        Ok(())
    })
}

pub fn key_equation_suite() -> Result<(), String> {
    let mut rng = rng(3);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let e = random_error(code, rng);
        let t = code.t();
        let (phi, omega) = phi_omega_from_sigma(&error_locator(&e, code)).unwrap();
        let s = keyeq::syndromes(&e, code).unwrap();
        let one_plus_t = keyeq::t_series(&keyeq::u_coefficients(&s)).one_plus_t();
        let residue = (&(&one_plus_t * &phi) - &omega).truncate(t + 1);
        ensure(residue.is_zero(), || format!("(1+T)φ ≢ ω for {e}"))?;
        let w = e.lee_weight() as usize;
        ensure(
            phi.degree().unwrap_or(0) <= w.div_ceil(2) && omega.degree().unwrap_or(0) <= w / 2,
            || format!("degree bounds fail for {e}"),
        )
    })
}

pub fn coprimality_suite() -> Result<(), String> {
    let mut rng = rng(4);
    let codes: Vec<Code> = [(15, 1), (15, 2), (15, 3)]
        .iter()
        .map(|&(n, t)| Code::new(n, t).unwrap())
        .collect();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let e = random_error(code, rng);
        let (phi, omega) = phi_omega_from_sigma(&error_locator(&e, code)).unwrap();
        let t = code.t();
        ensure(
            two_in_ideal(&phi, &omega, 2 * t) || two_in_ideal(&phi, &omega, 4 * t),
            || format!("2 ∉ (φ, ω) for {e}"),
        )
    })
}

/// 16×16 multiplication table of GR(4,2), elements indexed `c0 + 4 c1`.
struct SmallRing {
    elements: Vec<RingElement>,
    mul: [[u8; 16]; 16],
}

impl SmallRing {
    fn new(ring: &RingDescriptor) -> SmallRing {
        let elements: Vec<RingElement> = ring.elements().collect();
        let index = |e: RingElement| (e.coeffs()[0] + 4 * e.coeffs()[1]) as usize;
        assert!(elements.iter().enumerate().all(|(i, &e)| index(e) == i));
        let mut mul = [[0u8; 16]; 16];
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                mul[i][j] = index(x * y) as u8;
            }
        }
        SmallRing { elements, mul }
    }

    fn add(x: u8, y: u8) -> u8 {
        ((x & 3) + (y & 3)) & 3 | ((((x >> 2) + (y >> 2)) & 3) << 2)
    }
}

/// Divisibility of leading monomial `c·term` by a basis leading monomial.
fn divisible(term: ModuleTerm, unit: bool, basis: &[z4neg::RingPair]) -> bool {
    basis.iter().any(|g| {
        let (lt, lc) = g.leading(-1).unwrap();
        lt.side == term.side && lt.degree <= term.degree && (lc.is_unit() || !unit)
    })
}

/// All `[a, b] ∈ M` with `deg a, deg b <= 3` for `M = {a U ≡ b mod z^r}`
/// over GR(4,2); checks each leading monomial against the basis.
pub fn groebner_brute_force(u: &Poly<RingElement>, r: usize, basis: &[z4neg::RingPair]) -> Result<(), String> {
    let ring = u.coeff(0).map(|c| c.ring()).unwrap_or_else(|| make_ring(2).unwrap());
    let small = SmallRing::new(&ring);
    let ucoef: Vec<u8> = (0..4)
        .map(|i| {
            let c = u.coeff_or(i, ring.zero());
            c.coeffs()[0] + 4 * c.coeffs()[1]
        })
        .collect();
    for g in basis {
        ensure(g.solves(u, r), || format!("basis element {g:?} not in M"))?;
    }
    for code in 0u32..(1 << 16) {
        let a: [u8; 4] = std::array::from_fn(|i| ((code >> (4 * i)) & 15) as u8);
        let deg_a = (0..4).rev().find(|&i| a[i] != 0);
        // b_low = a U mod z^r
        let mut b_low = [0u8; 4];
        for k in 0..r.min(4) {
            let mut acc = 0u8;
            for i in 0..=k {
                acc = SmallRing::add(acc, small.mul[a[i] as usize][ucoef[k - i] as usize]);
            }
            b_low[k] = acc;
        }
        // b = b_low + free coefficients in degrees r..=3
        let pair_a = Poly::new(a.iter().map(|&x| small.elements[x as usize]).collect());
        let pair_b = Poly::new(b_low.iter().take(r.min(4)).map(|&x| small.elements[x as usize]).collect());
        let v = solver::PairVector::new(pair_a.clone(), pair_b.clone());
        if !v.is_zero() {
            let (lt, lc) = v.leading(-1).unwrap();
            ensure(divisible(lt, lc.is_unit(), basis), || {
                format!("lm of [{pair_a:?}, {pair_b:?}] not divisible")
            })?;
        }
        for top in r..=3 {
            if deg_a.is_some_and(|d| top < d) {
                continue;
            }
            for unit in [true, false] {
                let term = ModuleTerm { side: Side::Right, degree: top };
                ensure(divisible(term, unit, basis), || {
                    format!("lm {}{term} from a = {pair_a:?} not divisible", if unit { "" } else { "2·" })
                })?;
            }
        }
    }
    Ok(())
}

pub fn groebner_suite() -> Result<(), String> {
    let mut rng = rng(5);
    let ring = make_ring(2).unwrap();
    for_all(CASES, &mut rng, |rng| {
        let r = rng.gen_range(1..=4);
        let mut coeffs: Vec<RingElement> = (0..r).map(|_| random_element(&ring, rng)).collect();
        if rng.gen_bool(0.7) {
            coeffs[0] = ring.one();
        }
        let u = Poly::new(coeffs);
        let basis = solver::sba(&ring, &u, r);
        let (i, j, rr, s) = basis.shape();
        ensure(i >= j && rr >= s, || format!("shape ({i},{j},{rr},{s}) for U = {u:?}"))?;
        groebner_brute_force(&u, r, basis.elements())
    })
}

pub fn frobenius_teichmuller_suite() -> Result<(), String> {
    let mut rng = rng(6);
    let rings: Vec<RingDescriptor> = (2..=7).map(|m| make_ring(m).unwrap()).collect();
    for ring in &rings {
        let m = ring.degree();
        let t = ring.teichmuller_set();
        ensure(t.len() == 1 << m, || format!("|T| = {} for m = {m}", t.len()))?;
        let mut residues: Vec<u16> = t.iter().map(|x| x.mu().bits()).collect();
        residues.sort_unstable();
        residues.dedup();
        ensure(residues.len() == 1 << m, || format!("μ not injective on T for m = {m}"))?;
        ensure(t.iter().all(|x| x.pow(1 << m) == *x), || format!("T not fixed by x ↦ x^(2^m), m = {m}"))?;
    }
    for_all(CASES, &mut rng, |rng| {
        let ring = &rings[rng.gen_range(0..rings.len())];
        let m = ring.degree();
        let a = random_element(ring, rng);
        let b = random_element(ring, rng);
        let f = |x: RingElement| x.frobenius();
        ensure(f(a + b) == f(a) + f(b), || format!("additivity fails at {a:?}, {b:?}"))?;
        ensure(f(a * b) == f(a) * f(b), || format!("multiplicativity fails at {a:?}, {b:?}"))?;
        // x is a Teichmüller element up to sign, so σ(x) = ε x^2 with ε = x^(2^m - 1)
        let x = ring.x();
        let eps = x.pow((1 << m) - 1);
        let image = eps * x * x;
        let substituted = a
            .coeffs()
            .iter()
            .take(m)
            .rev()
            .fold(ring.zero(), |acc, &c| acc * image + ring.constant(Z4::new(c as i64)));
        ensure(f(a) == substituted, || format!("σ({a:?}) differs from substitution"))?;
        let mut it = a;
        for _ in 0..m {
            it = f(it);
        }
        ensure(it == a, || format!("σ^m ≠ id at {a:?}"))?;
        let (a0, a1) = a.teichmuller_decompose();
        ensure(
            a0.is_teichmuller() && a1.is_teichmuller() && a0 + a1.mul_int(2) == a,
            || format!("decomposition of {a:?}"),
        )
    })
}

pub fn roundtrip_suite() -> Result<(), String> {
    let mut rng = rng(7);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let c = code.encode(&code.random_message(rng)).unwrap();
        let e = random_error(code, rng);
        let v = c.checked_add(&e).unwrap();
        let out = decode(&v, code);
        ensure(out.codeword() == Some(&c) && out.error() == Some(&e), || {
            format!("(n={}, t={}) c={c} e={e}: {:?}", code.n(), code.t(), out.status)
        })
    })
}

pub fn pass_consistency_suite() -> Result<(), String> {
    // without symbols 2, pass one's simple roots are the error support
    let mut rng = rng(8);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let mut e = random_error(code, rng);
        for s in e.symbols_mut() {
            if *s == Z4::TWO {
                *s = Z4::ONE;
            }
        }
        if e.lee_weight() == 0 {
            return Ok(());
        }
        let out = decode_with_trace(&e, code);
        let trace = out.trace.as_ref().unwrap();
        ensure(trace.doubles.is_empty() && trace.singles == e.support(), || {
            format!("e={e}: doubles {:?} singles {:?}", trace.doubles, trace.singles)
        })
    })
}

pub fn uniqueness_mod2_suite() -> Result<(), String> {
    let mut rng = rng(9);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let e = random_error(code, rng);
        if e.lee_weight() == 0 {
            return Ok(());
        }
        let out = decode_with_trace(&e, code);
        let pair = out.trace.as_ref().unwrap().solverpair.clone().ok_or_else(|| format!("no pair for {e}"))?;
        let (phi, omega) = phi_omega_from_sigma(&error_locator(&e, code)).unwrap();
        let nu = pair.a.coeff(0).unwrap().mu();
        let mu = |p: &Poly<RingElement>| p.map(|c| c.mu());
        ensure(
            mu(&pair.a) == mu(&phi).scale(nu) && mu(&pair.b) == mu(&omega).scale(nu),
            || format!("μ[a,b] is not a multiple of μ[φ,ω] for {e}"),
        )
    })
}

pub fn honesty_suite() -> Result<(), String> {
    // far-away words never come back as a codeword at distance > t
    let mut rng = rng(10);
    let codes = decoding_codes();
    for_all(CASES, &mut rng, |rng| {
        let code = &codes[rng.gen_range(0..codes.len())];
        let v = Word::new((0..code.n()).map(|_| Z4::new(rng.gen_range(0..4))).collect());
        let out = decode(&v, code);
        match out.codeword() {
            None => Ok(()),
            Some(c) => ensure(
                code.contains(c) && z4neg::code::lee_distance(c, &v).unwrap() as usize <= code.t(),
                || format!("v={v} decoded to {c}"),
            ),
        }
    })
}

/// Every suite with its name.
pub fn property_suites() -> Vec<(&'static str, fn() -> Result<(), String>)> {
    vec![
        ("Newton identity", newton_identity_suite),
        ("odd series recursion", odd_series_suite),
        ("key equation residue", key_equation_suite),
        ("coprimality 2 ∈ (φ,ω)", coprimality_suite),
        ("Gröbner membership and divisibility", groebner_suite),
        ("Frobenius and Teichmüller", frobenius_teichmuller_suite),
        ("decode round trip", roundtrip_suite),
        ("pass consistency", pass_consistency_suite),
        ("uniqueness mod 2", uniqueness_mod2_suite),
        ("detection honesty", honesty_suite),
    ]
}

/// All error patterns of length `n` and Lee weight at most 2.
pub fn patterns_up_to_weight_two(n: usize) -> Vec<Word> {
    let mut out = vec![Word::zeros(n)];
    let single = |pos: &[(usize, Z4)]| {
        let mut e = Word::zeros(n);
        for &(j, s) in pos {
            e.symbols_mut()[j] = s;
        }
        e
    };
    for j in 0..n {
        out.push(single(&[(j, Z4::ONE)]));
        out.push(single(&[(j, Z4::THREE)]));
        out.push(single(&[(j, Z4::TWO)]));
    }
    for i in 0..n {
        for j in i + 1..n {
            for a in [Z4::ONE, Z4::THREE] {
                for b in [Z4::ONE, Z4::THREE] {
                    out.push(single(&[(i, a), (j, b)]));
                }
            }
        }
    }
    out
}
