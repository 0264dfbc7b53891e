//! Exact integer number theory on arbitrary-precision values: factorization,
//! divisor enumeration, Euler phi, and multiplicative orders.
//!
//! Factorization runs trial division by sieved primes up to 10^6 and hands
//! remaining cofactors to a fixed-seed Brent rho; primes are certified with
//! Miller-Rabin over a fixed base set (deterministic below 3.3 * 10^24, far
//! above anything the enumeration modules produce).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumError {
    #[error("argument must be a positive integer")]
    Zero,
    #[error("arguments must be coprime")]
    NotCoprime,
    #[error("argument must be greater than 2")]
    NotGreaterThanTwo,
}

const TRIAL_BOUND: u64 = 1_000_000;

static SMALL_PRIMES: Lazy<Vec<u64>> = Lazy::new(|| {
    let n = TRIAL_BOUND as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
});

/// A positive integer together with its sorted prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: BigUint,
    /// `(prime, exponent)` pairs, primes strictly ascending, exponents >= 1.
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Miller-Rabin over the first twelve primes as bases.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a > b {
        a - b
    } else {
        b - a
    }
}

/// Brent-variant rho. `n` must be an odd composite with no factor below the
/// trial-division bound. The RNG seed is fixed, so runs are reproducible.
fn brent_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c21_4d00);
    loop {
        let c = BigUint::from(rng.gen_range(1u64..u64::MAX)) % n;
        if c.is_zero() {
            continue;
        }
        let mut y = BigUint::from(rng.gen_range(2u64..u64::MAX)) % n;
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut g = one.clone();
        let mut q = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut r: u64 = 1;
        const BATCH: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    q = (&q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            // batching overshot; replay one step at a time
            loop {
                ys = step(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
}

/// Factor `m >= 1`; `m = 1` yields an empty factor list.
pub fn factorize(m: &BigUint) -> Result<Factorization, NumError> {
    if m.is_zero() {
        return Err(NumError::Zero);
    }
    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = m.clone();
    for &p in SMALL_PRIMES.iter() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            *factors.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    if !rest.is_one() {
        let mut pending = vec![rest];
        while let Some(x) = pending.pop() {
            if is_prime(&x) {
                *factors.entry(x).or_insert(0) += 1;
            } else {
                let d = brent_rho(&x);
                pending.push(&x / &d);
                pending.push(d);
            }
        }
    }
    Ok(Factorization {
        value: m.clone(),
        factors: factors.into_iter().collect(),
    })
}

/// Euler's totient, computed from the factorization of `m`.
pub fn euler_phi(m: &BigUint) -> Result<BigUint, NumError> {
    let f = factorize(m)?;
    let mut phi = BigUint::one();
    for (p, e) in &f.factors {
        phi *= p.pow(e - 1) * (p - BigUint::one());
    }
    Ok(phi)
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: &BigUint) -> Result<Vec<BigUint>, NumError> {
    let f = factorize(m)?;
    let mut divs = vec![BigUint::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pe = BigUint::one();
            for _ in 0..=*e {
                next.push(d * &pe);
                pe *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Smallest `t >= 1` with `a^t = 1 (mod m)`. Requires `gcd(a, m) = 1`.
pub fn multiplicative_order(a: &BigUint, m: &BigUint) -> Result<BigUint, NumError> {
    if m.is_zero() {
        return Err(NumError::Zero);
    }
    if m.is_one() {
        return Ok(BigUint::one());
    }
    let a = a % m;
    if !a.gcd(m).is_one() {
        return Err(NumError::NotCoprime);
    }
    let phi = euler_phi(m)?;
    let phi_factors = factorize(&phi)?;
    let mut t = phi;
    for (p, _) in &phi_factors.factors {
        while (&t % p).is_zero() && a.modpow(&(&t / p), m).is_one() {
            t /= p;
        }
    }
    Ok(t)
}

/// Smallest `m >= 1` with `a | q^m + 1`, or `None` if no such `m` exists.
///
/// The scan is bounded by twice the multiplicative order of `q` modulo `a`,
/// which any solution must stay below.
pub fn smallest_m(a: &BigUint, q: &BigUint) -> Result<Option<BigUint>, NumError> {
    if *a <= BigUint::from(2u32) {
        return Err(NumError::NotGreaterThanTwo);
    }
    if !a.gcd(q).is_one() {
        // a prime shared with q divides q^m but never q^m + 1
        return Ok(None);
    }
    let bound = BigUint::from(2u32) * multiplicative_order(q, a)?;
    let mut m = BigUint::one();
    let mut t = q % a; // q^m mod a
    while m <= bound {
        if (&t + BigUint::one()) % a == BigUint::zero() {
            return Ok(Some(m));
        }
        t = t * (q % a) % a;
        m += BigUint::one();
    }
    Ok(None)
}
