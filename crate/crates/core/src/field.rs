//! Finite-field tower F_p < F_{q^2} < F_{q^{2n}} with deterministic,
//! reproducible construction.
//!
//! The base field F_{q^2} (q = p^m) is realized as F_p[x] modulo the first
//! irreducible monic polynomial of degree 2m in ascending base-p digit order,
//! with elements stored as `u16` digit encodings and multiplication done
//! through log/exp tables of the canonical generator (the first element of
//! full multiplicative order in ascending encoding). The top field is a
//! degree-n extension of F_{q^2} built the same way, elements being length-n
//! coordinate vectors over the base. Subfield membership is a coordinate
//! test: an element lies in F_{q^2} exactly when all coordinates above index
//! zero vanish.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::numutil::{self, Factorization};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("base field of size {0} exceeds the supported bound 65535")]
    FieldTooLarge(u128),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero cannot be raised to a negative power")]
    NegativePowerOfZero,
    #[error("element does not lie in the base subfield")]
    NotInBaseField,
    #[error("zero element has no multiplicative order")]
    ZeroElement,
    #[error("the top field has no primitive {0}-th root of unity")]
    NoSuchRootOfUnity(BigUint),
    #[error("coefficient does not lie in the base subfield (internal consistency violation)")]
    CoefficientOutsideBase,
    #[error("digit out of range for characteristic")]
    InvalidDigit,
}

fn is_small_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Split a prime power `q = p^m`.
pub fn prime_power(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let f = numutil::factorize(&BigUint::from(q)).expect("q > 0");
    if f.factors.len() != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    let (p, e) = &f.factors[0];
    Ok((p.to_u64().expect("p <= q"), *e))
}

// ---- dense polynomials over F_p, used only while constructing the base ----

fn fp_trim(v: &mut Vec<u8>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + ai as u64 * bj as u64) % p) as u8;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_rem(a: &[u8], m: &[u8], p: u64) -> Vec<u8> {
    let mut r: Vec<u8> = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv_u64(*m.last().unwrap() as u64, p);
    while r.len() > dm {
        let c = (*r.last().unwrap() as u64 * lead_inv) % p;
        let shift = r.len() - 1 - dm;
        for (j, &mj) in m.iter().enumerate() {
            let idx = shift + j;
            let sub = (c * mj as u64) % p;
            r[idx] = (((r[idx] as u64) + p - sub) % p) as u8;
        }
        fp_trim(&mut r);
    }
    r
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn fp_powmod(base: &[u8], mut e: u64, m: &[u8], p: u64) -> Vec<u8> {
    let mut result = vec![1u8];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = fp_rem(&fp_mul(&result, &b, p), m, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

fn fp_gcd(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn fp_sub(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
    let mut out = vec![0u8; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let ai = a.get(i).copied().unwrap_or(0) as u64;
        let bi = b.get(i).copied().unwrap_or(0) as u64;
        *o = ((ai + p - bi) % p) as u8;
    }
    fp_trim(&mut out);
    out
}

/// Frobenius-power irreducibility criterion over F_p.
fn fp_irreducible(f: &[u8], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    let x = vec![0u8, 1];
    let q_deg = (p as u128).pow(deg as u32);
    if q_deg > u64::MAX as u128 {
        unreachable!("base field sizes are bounded well below 2^64");
    }
    let xq = fp_powmod(&x, q_deg as u64, f, p);
    if xq != fp_rem(&x, f, p) {
        return false;
    }
    let mut r = 2;
    let mut d = deg;
    while d > 1 {
        if d.is_multiple_of(r) {
            let e = (p as u128).pow((deg / r) as u32) as u64;
            let t = fp_sub(&fp_powmod(&x, e, f, p), &fp_rem(&x, f, p), p);
            let g = fp_gcd(&t, f, p);
            if g.len() != 1 {
                return false;
            }
            while d.is_multiple_of(r) {
                d /= r;
            }
        }
        r += 1;
        if r * r > d && d > 1 {
            // d itself is the last prime divisor
            let e = (p as u128).pow((deg / d) as u32) as u64;
            let t = fp_sub(&fp_powmod(&x, e, f, p), &fp_rem(&x, f, p), p);
            let g = fp_gcd(&t, f, p);
            return g.len() == 1;
        }
    }
    true
}

// ---- the base field F_{q^2} ----

/// The field F_{q^2} with log/exp multiplication tables.
///
/// Elements are encodings in `[0, q^2)`: the coordinate vector over F_p read
/// as base-p digits, constant term least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseField {
    p: u64,
    m: u32,
    q: u64,
    size: u64, // q^2
    modulus: Vec<u8>,
    exp: Vec<u16>,
    log: Vec<u32>,
    unit_order_factors: Factorization,
}

const LOG_ZERO: u32 = u32::MAX;

impl BaseField {
    /// Deterministically construct F_{(p^m)^2}.
    pub fn new(p: u64, m: u32) -> Result<BaseField, FieldError> {
        if !is_small_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let deg = 2 * m as usize;
        let size128 = (p as u128).checked_pow(deg as u32).ok_or(FieldError::FieldTooLarge(u128::MAX))?;
        if size128 > u16::MAX as u128 {
            return Err(FieldError::FieldTooLarge(size128));
        }
        let size = size128 as u64;
        let q = (p as u128).pow(m) as u64;

        // first irreducible monic polynomial in ascending digit order
        let mut modulus = None;
        for val in 0..size {
            let mut f = digits_of(val, p, deg);
            f.push(1);
            if fp_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial of every degree exists");

        let unit_order = size - 1;
        let unit_order_factors = numutil::factorize(&BigUint::from(unit_order)).expect("positive");

        let raw_mul = |a: u16, b: u16| -> u16 {
            let pa = digits_of(a as u64, p, deg);
            let pb = digits_of(b as u64, p, deg);
            let r = fp_rem(&fp_mul(&pa, &pb, p), &modulus, p);
            value_of(&r, p) as u16
        };
        let raw_pow = |a: u16, mut e: u64| -> u16 {
            let mut result = 1u16;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    result = raw_mul(result, base);
                }
                base = raw_mul(base, base);
                e >>= 1;
            }
            result
        };

        // first element of full multiplicative order, ascending encoding
        let mut generator = None;
        'search: for cand in 1..size {
            let cand = cand as u16;
            for (r, _) in &unit_order_factors.factors {
                let r = r.to_u64().expect("divides unit order");
                if raw_pow(cand, unit_order / r) == 1 {
                    continue 'search;
                }
            }
            generator = Some(cand);
            break;
        }
        let g = generator.expect("the unit group of a finite field is cyclic");

        let mut exp = vec![0u16; unit_order as usize];
        let mut log = vec![LOG_ZERO; size as usize];
        let mut cur = 1u16;
        for k in 0..unit_order {
            exp[k as usize] = cur;
            log[cur as usize] = k as u32;
            cur = raw_mul(cur, g);
        }
        debug_assert_eq!(cur, 1);

        Ok(BaseField {
            p,
            m,
            q,
            size,
            modulus,
            exp,
            log,
            unit_order_factors,
        })
    }

    pub fn for_q(q: u64) -> Result<BaseField, FieldError> {
        let (p, m) = prime_power(q)?;
        BaseField::new(p, m)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    /// Field size q^2.
    pub fn size(&self) -> u64 {
        self.size
    }
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }
    /// Canonical generator of the unit group.
    pub fn generator(&self) -> u16 {
        self.exp[1 % (self.size as usize - 1)]
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        let mut out = 0u64;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut place = 1u64;
        for _ in 0..2 * self.m {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out as u16
    }

    pub fn neg(&self, a: u16) -> u16 {
        let mut out = 0u64;
        let mut a = a as u64;
        let mut place = 1u64;
        for _ in 0..2 * self.m {
            let s = (self.p - a % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
        }
        out as u16
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.size - 1);
        self.exp[k as usize]
    }

    pub fn inv(&self, a: u16) -> Result<u16, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let k = (self.size - 1 - self.log[a as usize] as u64) % (self.size - 1);
        Ok(self.exp[k as usize])
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let k = (self.log[a as usize] as u128 * e as u128 % (self.size as u128 - 1)) as u64;
        self.exp[k as usize]
    }

    pub fn pow_big(&self, a: u16, e: &BigUint) -> u16 {
        if a == 0 {
            return if e.is_zero() { 1 } else { 0 };
        }
        let r = (e % (self.size - 1)).to_u64().expect("reduced");
        self.pow(a, r)
    }

    /// Frobenius conjugation a -> a^q, the involution of F_{q^2} over F_q.
    pub fn conj(&self, a: u16) -> u16 {
        self.pow(a, self.q)
    }

    /// Discrete log with respect to the canonical generator (table lookup).
    pub fn log(&self, a: u16) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize] as u64)
        }
    }

    pub fn element_order(&self, a: u16) -> Option<u64> {
        let k = self.log(a)?;
        let n = self.size - 1;
        Some(n / n.gcd(&k))
    }

    pub fn in_prime_field(&self, a: u16) -> bool {
        (a as u64) < self.p
    }

    /// Coordinate vector over F_p, ascending basis index, length 2m.
    pub fn coords(&self, a: u16) -> Vec<u8> {
        digits_of(a as u64, self.p, 2 * self.m as usize)
    }

    pub fn from_coords(&self, digits: &[u8]) -> Result<u16, FieldError> {
        if digits.len() > 2 * self.m as usize || digits.iter().any(|&d| d as u64 >= self.p) {
            return Err(FieldError::InvalidDigit);
        }
        Ok(value_of(digits, self.p) as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.size as u16
    }
}

fn digits_of(mut val: u64, p: u64, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((val % p) as u8);
        val /= p;
    }
    out
}

fn value_of(digits: &[u8], p: u64) -> u64 {
    digits
        .iter()
        .rev()
        .fold(0u64, |acc, &d| acc * p + d as u64)
}

// ---- the top field F_{q^{2n}} ----

/// An element of the top field as a coordinate vector over F_{q^2},
/// ascending basis index, length n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: Vec<u16>,
}

impl FieldElement {
    pub fn coords(&self) -> &[u16] {
        &self.coords
    }

    /// Numeric comparison of the coordinate encoding (most significant
    /// coordinate first).
    pub fn cmp_encoding(&self, other: &FieldElement) -> std::cmp::Ordering {
        self.coords.iter().rev().cmp(other.coords.iter().rev())
    }
}

/// The tower F_p < F_{q^2} < F_{q^{2n}}, fully deterministic for a given
/// (p, m, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    base: BaseField,
    n: usize,
    top_modulus: Vec<u16>,
    generator: FieldElement,
    group_order: BigUint,
    group_order_factors: Factorization,
}

impl FieldSpec {
    pub fn build(p: u64, m: u32, n: usize) -> Result<FieldSpec, FieldError> {
        let base = BaseField::new(p, m)?;
        Self::over(base, n)
    }

    pub fn for_q(q: u64, n: usize) -> Result<FieldSpec, FieldError> {
        let (p, m) = prime_power(q)?;
        FieldSpec::build(p, m, n)
    }

    fn over(base: BaseField, n: usize) -> Result<FieldSpec, FieldError> {
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = base.size();
        let group_order = BigUint::from(size).pow(n as u32) - BigUint::one();
        let group_order_factors = numutil::factorize(&group_order).expect("positive");

        // first irreducible monic polynomial of degree n over the base,
        // coefficients ascending as base-(q^2) digits
        let top_modulus = if n == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            let mut val: u128 = 0;
            let total = (size as u128).pow(n as u32);
            while val < total {
                let mut coeffs = top_digits(val, size, n);
                coeffs.push(1);
                let poly = crate::poly::Polynomial::from_coeffs(coeffs.to_vec());
                if crate::poly::is_irreducible(&poly, &base).expect("degree >= 2") {
                    found = Some(coeffs);
                    break;
                }
                val += 1;
            }
            found.expect("irreducible polynomials of every degree exist")
        };

        let mut spec = FieldSpec {
            base,
            n,
            top_modulus,
            generator: FieldElement { coords: vec![0; n] },
            group_order,
            group_order_factors,
        };

        // first element of full multiplicative order, ascending encoding
        let mut val: u128 = 1;
        loop {
            let cand = FieldElement {
                coords: top_digits(val, spec.base.size(), n).to_vec(),
            };
            let mut full = true;
            for (r, _) in &spec.group_order_factors.factors {
                let e = &spec.group_order / r;
                if spec.pow(&cand, &e) == spec.one() {
                    full = false;
                    break;
                }
            }
            if full {
                spec.generator = cand;
                break;
            }
            val += 1;
        }
        Ok(spec)
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.base.q()
    }
    pub fn top_modulus(&self) -> &[u16] {
        &self.top_modulus
    }
    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }
    /// q^{2n} - 1.
    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }
    pub fn group_order_factors(&self) -> &Factorization {
        &self.group_order_factors
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coords: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.embed_base(1)
    }

    pub fn embed_base(&self, c: u16) -> FieldElement {
        let mut coords = vec![0; self.n];
        coords[0] = c;
        FieldElement { coords }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.base.add(x, y))
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().map(|&x| self.base.neg(x)).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.n;
        let mut buf = vec![0u16; 2 * n - 1];
        for i in 0..n {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..n {
                let t = self.base.mul(a.coords[i], b.coords[j]);
                buf[i + j] = self.base.add(buf[i + j], t);
            }
        }
        for i in (n..2 * n - 1).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for j in 0..n {
                let t = self.base.mul(c, self.top_modulus[j]);
                buf[i - n + j] = self.base.sub(buf[i - n + j], t);
            }
        }
        buf.truncate(n);
        FieldElement { coords: buf }
    }

    pub fn pow(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        if e.is_zero() {
            return self.one();
        }
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::ZeroInverse);
        }
        let e = &self.group_order - BigUint::one();
        Ok(self.pow(a, &e))
    }

    /// a^e for a signed exponent; negative exponents go through the inverse.
    pub fn pow_signed(&self, a: &FieldElement, e: &BigInt) -> Result<FieldElement, FieldError> {
        match e.sign() {
            Sign::NoSign => Ok(self.one()),
            Sign::Plus => Ok(self.pow(a, e.magnitude())),
            Sign::Minus => {
                if self.is_zero(a) {
                    return Err(FieldError::NegativePowerOfZero);
                }
                let inv = self.inv(a)?;
                Ok(self.pow(&inv, e.magnitude()))
            }
        }
    }

    /// Frobenius conjugation for base-subfield elements.
    pub fn conj(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        let c = self.subfield_recognize(a).ok_or(FieldError::NotInBaseField)?;
        Ok(self.embed_base(self.base.conj(c)))
    }

    /// Base-subfield membership as a coordinate test.
    pub fn subfield_recognize(&self, a: &FieldElement) -> Option<u16> {
        if a.coords[1..].iter().all(|&c| c == 0) {
            Some(a.coords[0])
        } else {
            None
        }
    }

    pub fn element_order(&self, a: &FieldElement) -> Result<BigUint, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::ZeroElement);
        }
        let mut t = self.group_order.clone();
        for (p, e) in &self.group_order_factors.factors {
            for _ in 0..*e {
                let cand = &t / p;
                if self.pow(a, &cand) == self.one() {
                    t = cand;
                } else {
                    break;
                }
            }
        }
        Ok(t)
    }

    /// A primitive d-th root of unity, g^{(q^{2n}-1)/d}.
    pub fn root_of_unity(&self, d: &BigUint) -> Result<FieldElement, FieldError> {
        if d.is_zero() || !(&self.group_order % d).is_zero() {
            return Err(FieldError::NoSuchRootOfUnity(d.clone()));
        }
        let e = &self.group_order / d;
        Ok(self.pow(&self.generator, &e))
    }

    /// Expand the monic product of (x - r) over the given roots; coefficients
    /// ascending by degree, length roots.len() + 1.
    pub fn expand_linear_factors(&self, roots: &[FieldElement]) -> Vec<FieldElement> {
        let mut coeffs = vec![self.one()];
        for r in roots {
            let mut next = vec![self.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], c);
                let t = self.mul(c, r);
                next[i] = self.sub(&next[i], &t);
            }
            coeffs = next;
        }
        coeffs
    }

    /// Pull a vector of top-field coefficients down into the base subfield,
    /// failing loudly when any coefficient is not recognized.
    pub fn recognize_coeffs(&self, coeffs: &[FieldElement]) -> Result<Vec<u16>, FieldError> {
        coeffs
            .iter()
            .map(|c| self.subfield_recognize(c).ok_or(FieldError::CoefficientOutsideBase))
            .collect()
    }

    /// Evaluate a base-coefficient polynomial at a top-field point.
    pub fn eval_base_poly(&self, coeffs: &[u16], at: &FieldElement) -> FieldElement {
        let mut acc = self.zero();
        for &c in coeffs.iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, &self.embed_base(c));
        }
        acc
    }

    /// Iterate every element of the top field in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let total = (self.base.size() as u128).pow(self.n as u32);
        (0..total).map(move |v| FieldElement {
            coords: top_digits(v, self.base.size(), self.n),
        })
    }
}

fn top_digits(mut val: u128, size: u64, len: usize) -> Vec<u16> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((val % size as u128) as u16);
        val /= size as u128;
    }
    out
}
