//! Seeded sampling of generic and constrained parameter tuples. All
//! randomness in the CLI flows through one `ChaCha8Rng` per run, so a run is
//! fully determined by its seed.

use braidtn_core::braid::MuValue;
use braidtn_core::exact::{Rational, Scalar};
use braidtn_core::tn::{ParamMode, ParamSet};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Prng = ChaCha8Rng;

/// Random nonzero rational with numerator and denominator bounded by 99.
pub fn nonzero_rational(rng: &mut Prng) -> Rational {
    let num: i64 = loop {
        let v = rng.gen_range(-99..=99);
        if v != 0 {
            break v;
        }
    };
    let den: i64 = rng.gen_range(1..=99);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Random generic `mu` sample: numerator and denominator in `2..=50`,
/// excluding 0 and -1 (positive by construction).
pub fn generic_mu(rng: &mut Prng) -> Rational {
    let num: i64 = rng.gen_range(2..=50);
    let den: i64 = rng.gen_range(2..=50);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Distinct generic `mu` samples.
pub fn generic_mu_samples(rng: &mut Prng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let m = generic_mu(rng);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn scalar(rng: &mut Prng) -> Scalar {
    Scalar::Rat(nonzero_rational(rng))
}

/// Fully generic parameter tuple: symmetric nonzero `c`, nonzero `alpha`,
/// nonzero `beta`, with `beta_i (alpha_i c_{i,i} + beta_i) != 0`. Resamples
/// on any degeneracy.
pub fn generic_params(rng: &mut Prng, n: usize) -> ParamSet {
    loop {
        let mut c = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = scalar(rng);
                c[i][j] = v.clone();
                c[j][i] = v;
            }
        }
        let alpha: Vec<Scalar> = (0..n).map(|_| scalar(rng)).collect();
        let beta: Vec<Scalar> = (0..n).map(|_| scalar(rng)).collect();
        if let Ok(p) = ParamSet::generic(n, c, alpha, beta, true) {
            return p;
        }
    }
}

/// Generic tuple with C1 imposed (all beta equal), everything else free.
pub fn c1_params(rng: &mut Prng, n: usize) -> ParamSet {
    loop {
        let mut c = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = scalar(rng);
                c[i][j] = v.clone();
                c[j][i] = v;
            }
        }
        let alpha: Vec<Scalar> = (0..n).map(|_| scalar(rng)).collect();
        let beta = vec![scalar(rng); n];
        if let Ok(p) = ParamSet::generic(n, c, alpha, beta, true) {
            return p;
        }
    }
}

/// Random constrained tuple satisfying C1-C3: one `c`, one `beta`, and the
/// alpha recursion collapsing to equal alphas.
pub fn constrained_params(rng: &mut Prng, n: usize) -> ParamSet {
    loop {
        let c = scalar(rng);
        let beta = scalar(rng);
        let alpha = scalar(rng);
        let cs = vec![vec![c.clone(); n]; n];
        let alphas = vec![alpha; n];
        let betas = vec![beta; n];
        if let Ok(p) = ParamSet::generic(n, cs, alphas, betas, true) {
            return p.with_mode_canonical();
        }
    }
}

/// Constrained tuple with one alpha perturbed off C2.
pub fn perturbed_off_c2(rng: &mut Prng, n: usize) -> ParamSet {
    assert!(n >= 2);
    loop {
        let base = constrained_params(rng, n);
        let mut alphas: Vec<Scalar> = (1..=n).map(|i| base.alpha(i).clone()).collect();
        let delta = scalar(rng);
        alphas[1] = &alphas[1] + &delta;
        let cs: Vec<Vec<Scalar>> = (1..=n)
            .map(|i| (1..=n).map(|j| base.c(i, j).clone()).collect())
            .collect();
        let betas: Vec<Scalar> = (1..=n).map(|i| base.beta(i).clone()).collect();
        if let Ok(p) = ParamSet::generic(n, cs, alphas, betas, true) {
            if !p.satisfies_constraints() {
                return p;
            }
        }
    }
}

/// Constrained tuple with `beta_1` perturbed off C1 (a braid-relation
/// counterexample generator).
pub fn perturbed_off_c1(rng: &mut Prng, n: usize) -> ParamSet {
    assert!(n >= 2);
    loop {
        let base = constrained_params(rng, n);
        let mut betas: Vec<Scalar> = (1..=n).map(|i| base.beta(i).clone()).collect();
        let delta = scalar(rng);
        betas[0] = &betas[0] + &delta;
        let cs: Vec<Vec<Scalar>> = (1..=n)
            .map(|i| (1..=n).map(|j| base.c(i, j).clone()).collect())
            .collect();
        let alphas: Vec<Scalar> = (1..=n).map(|i| base.alpha(i).clone()).collect();
        if let Ok(p) = ParamSet::generic(n, cs, alphas, betas, true) {
            if !p.satisfies_constraints() {
                return p;
            }
        }
    }
}

/// Random freely-reduced word of at most `max_len` letters in `F_n`.
pub fn random_free_word(
    rng: &mut Prng,
    n: usize,
    max_len: usize,
) -> braidtn_core::free_group::FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i8)> = (0..len)
        .map(|_| {
            (
                rng.gen_range(1..=n),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect();
    braidtn_core::free_group::FreeWord::reduce(letters)
}

/// Parsed `--mu` argument.
pub fn mu_value_of(spec: &str) -> Option<MuValue> {
    if spec == "symbolic" {
        return Some(MuValue::Symbolic);
    }
    parse_rational(spec).map(MuValue::Numeric)
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse::<BigInt>().ok()?, b.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `ParamMode` upgrade helper for sampled constrained tuples.
trait WithCanonical {
    fn with_mode_canonical(self) -> ParamSet;
}

impl WithCanonical for ParamSet {
    fn with_mode_canonical(mut self) -> ParamSet {
        self.mode = ParamMode::Canonical;
        self
    }
}
