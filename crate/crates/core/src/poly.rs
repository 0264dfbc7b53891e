//! Dense polynomial arithmetic over F_{q^2}, the reflection operators
//! (reciprocal, conjugate, conjugate-reciprocal), irreducibility testing and
//! polynomial order, plus the text grammar used by the CLI.
//!
//! Coefficients are base-field encodings (see [`crate::field::BaseField`]),
//! stored ascending by degree with no trailing zeros.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::BaseField;
use crate::numutil::{self, Factorization};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,
    #[error("constant polynomials are not accepted here")]
    ConstantPolynomial,
    #[error("the constant term must be nonzero")]
    ZeroConstantTerm,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be irreducible")]
    NotIrreducible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Parse failure with a byte offset into the input string.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<u16>,
}

impl Polynomial {
    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<u16>) -> Polynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Polynomial {
        Polynomial { coeffs: vec![1] }
    }

    pub fn x() -> Polynomial {
        Polynomial { coeffs: vec![0, 1] }
    }

    pub fn constant(c: u16) -> Polynomial {
        Polynomial::from_coeffs(vec![c])
    }

    /// x^k.
    pub fn monomial(k: usize) -> Polynomial {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn constant_term(&self) -> u16 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> u16 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Canonical ordering: by degree, then by coefficient encoding read from
    /// the most significant coefficient down.
    pub fn cmp_canonical(&self, other: &Polynomial) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

pub fn add(a: &Polynomial, b: &Polynomial, fld: &BaseField) -> Polynomial {
    let mut out = vec![0u16; a.coeffs.len().max(b.coeffs.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = fld.add(a.coeff(i), b.coeff(i));
    }
    Polynomial::from_coeffs(out)
}

pub fn neg(a: &Polynomial, fld: &BaseField) -> Polynomial {
    Polynomial::from_coeffs(a.coeffs.iter().map(|&c| fld.neg(c)).collect())
}

pub fn sub(a: &Polynomial, b: &Polynomial, fld: &BaseField) -> Polynomial {
    add(a, &neg(b, fld), fld)
}

pub fn mul(a: &Polynomial, b: &Polynomial, fld: &BaseField) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    let mut out = vec![0u16; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.coeffs.iter().enumerate() {
            out[i + j] = fld.add(out[i + j], fld.mul(ai, bj));
        }
    }
    Polynomial::from_coeffs(out)
}

pub fn scale(a: &Polynomial, c: u16, fld: &BaseField) -> Polynomial {
    Polynomial::from_coeffs(a.coeffs.iter().map(|&x| fld.mul(x, c)).collect())
}

/// Quotient and remainder of `a` by `b`.
pub fn divrem(
    a: &Polynomial,
    b: &Polynomial,
    fld: &BaseField,
) -> Result<(Polynomial, Polynomial), PolyError> {
    let db = b.degree().ok_or(PolyError::DivisionByZero)?;
    let lead_inv = fld.inv(*b.coeffs.last().unwrap()).expect("normalized");
    let mut rem = a.coeffs.clone();
    let mut quo = vec![0u16; a.coeffs.len().saturating_sub(db)];
    while rem.len() > db {
        let c = fld.mul(*rem.last().unwrap(), lead_inv);
        let shift = rem.len() - 1 - db;
        if c != 0 {
            quo[shift] = c;
            for j in 0..=db {
                let t = fld.mul(c, b.coeffs[j]);
                rem[shift + j] = fld.sub(rem[shift + j], t);
            }
        }
        while rem.last() == Some(&0) {
            rem.pop();
        }
        if rem.len() <= db {
            break;
        }
    }
    Ok((Polynomial::from_coeffs(quo), Polynomial::from_coeffs(rem)))
}

pub fn rem(a: &Polynomial, b: &Polynomial, fld: &BaseField) -> Result<Polynomial, PolyError> {
    Ok(divrem(a, b, fld)?.1)
}

/// Monic gcd.
pub fn gcd(a: &Polynomial, b: &Polynomial, fld: &BaseField) -> Polynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = rem(&a, &b, fld).expect("b nonzero");
        a = b;
        b = r;
    }
    if let Some(&lead) = a.coeffs.last() {
        if lead != 1 {
            let inv = fld.inv(lead).expect("nonzero");
            a = scale(&a, inv, fld);
        }
    }
    a
}

/// base^e modulo `modulus`.
pub fn powmod(
    base: &Polynomial,
    e: &BigUint,
    modulus: &Polynomial,
    fld: &BaseField,
) -> Result<Polynomial, PolyError> {
    match modulus.degree() {
        None => return Err(PolyError::DivisionByZero),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        _ => {}
    }
    let mut result = rem(&Polynomial::one(), modulus, fld)?;
    let b = rem(base, modulus, fld)?;
    for i in (0..e.bits()).rev() {
        result = rem(&mul(&result, &result, fld), modulus, fld)?;
        if e.bit(i) {
            result = rem(&mul(&result, &b, fld), modulus, fld)?;
        }
    }
    Ok(result)
}

fn check_reflection_input(f: &Polynomial) -> Result<(), PolyError> {
    match f.degree() {
        None => Err(PolyError::ZeroPolynomial),
        Some(0) => Err(PolyError::ConstantPolynomial),
        Some(_) if f.constant_term() == 0 => Err(PolyError::ZeroConstantTerm),
        Some(_) => Ok(()),
    }
}

/// The reciprocal f*(x) = x^n f(0)^{-1} f(1/x): monic-normalized reversal.
pub fn reciprocal(f: &Polynomial, fld: &BaseField) -> Result<Polynomial, PolyError> {
    check_reflection_input(f)?;
    let c0_inv = fld.inv(f.constant_term()).expect("nonzero constant");
    let coeffs = f
        .coeffs
        .iter()
        .rev()
        .map(|&c| fld.mul(c0_inv, c))
        .collect();
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Coefficient-wise Frobenius conjugation.
pub fn conj_poly(f: &Polynomial, fld: &BaseField) -> Polynomial {
    Polynomial::from_coeffs(f.coeffs.iter().map(|&c| fld.conj(c)).collect())
}

/// f-dagger: the conjugate of the reciprocal. f is self-conjugate-reciprocal
/// exactly when this returns f itself.
pub fn conj_reciprocal(f: &Polynomial, fld: &BaseField) -> Result<Polynomial, PolyError> {
    Ok(conj_poly(&reciprocal(f, fld)?, fld))
}

pub fn is_self_conjugate_reciprocal(f: &Polynomial, fld: &BaseField) -> Result<bool, PolyError> {
    Ok(conj_reciprocal(f, fld)? == *f)
}

/// Frobenius-power irreducibility criterion: x^{Q^n} = x (mod f) and
/// gcd(x^{Q^{n/r}} - x, f) = 1 for every prime r | n, Q the field size.
pub fn is_irreducible(f: &Polynomial, fld: &BaseField) -> Result<bool, PolyError> {
    let deg = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(d) => d,
    };
    if deg == 1 {
        return Ok(true);
    }
    // work with the monic normalization
    let f = if f.is_monic() {
        f.clone()
    } else {
        let inv = fld.inv(*f.coeffs.last().unwrap()).expect("nonzero lead");
        scale(f, inv, fld)
    };
    let q_big = BigUint::from(fld.size());
    let x = Polynomial::x();
    let xq = powmod(&x, &q_big.pow(deg as u32), &f, fld)?;
    if xq != rem(&x, &f, fld)? {
        return Ok(false);
    }
    let deg_factors = numutil::factorize(&BigUint::from(deg as u64)).expect("positive");
    for (r, _) in &deg_factors.factors {
        let r: usize = r.to_string().parse().expect("small");
        let t = powmod(&x, &q_big.pow((deg / r) as u32), &f, fld)?;
        let diff = sub(&t, &rem(&x, &f, fld)?, fld);
        let g = gcd(&diff, &f, fld);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order of a monic irreducible polynomial with nonzero constant term: the
/// multiplicative order of x in the quotient ring.
pub fn poly_order(f: &Polynomial, fld: &BaseField) -> Result<BigUint, PolyError> {
    let deg = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(d) => d,
    };
    if f.constant_term() == 0 {
        return Err(PolyError::ZeroConstantTerm);
    }
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if !is_irreducible(f, fld)? {
        return Err(PolyError::NotIrreducible);
    }
    let group = BigUint::from(fld.size()).pow(deg as u32) - BigUint::one();
    let factors = numutil::factorize(&group).expect("positive");
    poly_order_with(f, fld, &group, &factors)
}

/// Same as [`poly_order`] but with the unit-group order pre-factored;
/// preconditions are the caller's responsibility.
pub fn poly_order_with(
    f: &Polynomial,
    fld: &BaseField,
    group: &BigUint,
    factors: &Factorization,
) -> Result<BigUint, PolyError> {
    let x = Polynomial::x();
    let one = rem(&Polynomial::one(), f, fld)?;
    let mut t = group.clone();
    for (p, e) in &factors.factors {
        for _ in 0..*e {
            if !(&t % p).is_zero() {
                break;
            }
            let cand = &t / p;
            if powmod(&x, &cand, f, fld)? == one {
                t = cand;
            } else {
                break;
            }
        }
    }
    Ok(t)
}

pub fn eval(f: &Polynomial, at: u16, fld: &BaseField) -> u16 {
    let mut acc = 0u16;
    for &c in f.coeffs.iter().rev() {
        acc = fld.add(fld.mul(acc, at), c);
    }
    acc
}

// ---- text grammar ----

/// Render a base-field element: `0`, prime-subfield digits, `g` or `g^k`.
pub fn format_elt(c: u16, fld: &BaseField) -> String {
    if fld.in_prime_field(c) {
        return format!("{c}");
    }
    match fld.log(c) {
        Some(1) => "g".to_string(),
        Some(k) => format!("g^{k}"),
        None => "0".to_string(),
    }
}

/// Render in the CLI grammar: descending powers joined by ` + `, terms
/// `c*x^k`, `x^k`, `c`; zero terms omitted.
pub fn format_poly(f: &Polynomial, fld: &BaseField) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for k in (0..f.coeffs.len()).rev() {
        let c = f.coeffs[k];
        if c == 0 {
            continue;
        }
        let xpart = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let term = if k == 0 {
            format_elt(c, fld)
        } else if c == 1 {
            xpart
        } else {
            format!("{}*{}", format_elt(c, fld), xpart)
        };
        terms.push(term);
    }
    terms.join(" + ")
}

struct Scanner<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: pos,
            message: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.input[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err(start, "expected a number");
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: "number too large".to_string(),
            })
    }

    /// One coefficient: integer (reduced mod p), `g`, or `g^k`.
    fn coefficient(&mut self, fld: &BaseField) -> Result<u16, ParseError> {
        if self.eat('g') {
            let k = if self.eat('^') { self.number()? } else { 1 };
            return Ok(fld.pow(fld.generator(), k));
        }
        let start = self.pos;
        let v = self.number().map_err(|_| ParseError {
            position: start,
            message: "expected a coefficient (integer, g, or g^k)".to_string(),
        })?;
        Ok((v % fld.p()) as u16)
    }

    /// One term: `c`, `c*x`, `c*x^k`, `x`, `x^k`. Returns (degree, coeff).
    fn term(&mut self, fld: &BaseField) -> Result<(usize, u16), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat('x') {
            let k = if self.eat('^') { self.number()? as usize } else { 1 };
            return Ok((k, 1));
        }
        let c = self.coefficient(fld)?;
        self.skip_ws();
        if self.eat('*') {
            self.skip_ws();
            if !self.eat('x') {
                return self.err(self.pos, "expected x after *");
            }
            let k = if self.eat('^') { self.number()? as usize } else { 1 };
            Ok((k, c))
        } else if self.peek() == Some('x') {
            self.err(start, "coefficient and x must be joined with *")
        } else {
            Ok((0, c))
        }
    }
}

/// Parse the polynomial text grammar. Repeated powers are summed, so any
/// term order is accepted; canonical output is descending.
pub fn parse_poly(input: &str, fld: &BaseField) -> Result<Polynomial, ParseError> {
    let mut s = Scanner { input, pos: 0 };
    let mut coeffs: Vec<u16> = Vec::new();
    loop {
        let (k, c) = s.term(fld)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        coeffs[k] = fld.add(coeffs[k], c);
        s.skip_ws();
        if s.pos == input.len() {
            break;
        }
        if !s.eat('+') {
            return Err(ParseError {
                position: s.pos,
                message: "expected + between terms".to_string(),
            });
        }
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::BaseField;

    fn f9() -> BaseField {
        BaseField::for_q(3).unwrap()
    }

    fn f4() -> BaseField {
        BaseField::for_q(2).unwrap()
    }

    #[test]
    fn reciprocal_examples() {
        let fld = f9();
        let xp1 = Polynomial::from_coeffs(vec![1, 1]);
        assert_eq!(reciprocal(&xp1, &fld).unwrap(), xp1);

        // x^2 + a x + b  ->  x^2 + (a/b) x + 1/b
        let g = fld.generator();
        let a = fld.pow(g, 3);
        let b = fld.pow(g, 5);
        let f = Polynomial::from_coeffs(vec![b, a, 1]);
        let r = reciprocal(&f, &fld).unwrap();
        let binv = fld.inv(b).unwrap();
        assert_eq!(
            r,
            Polynomial::from_coeffs(vec![binv, fld.mul(a, binv), 1])
        );
    }

    #[test]
    fn reflection_rejections() {
        let fld = f9();
        assert_eq!(
            reciprocal(&Polynomial::zero(), &fld),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(
            reciprocal(&Polynomial::constant(2), &fld),
            Err(PolyError::ConstantPolynomial)
        );
        assert_eq!(
            reciprocal(&Polynomial::x(), &fld),
            Err(PolyError::ZeroConstantTerm)
        );
    }

    #[test]
    fn conj_poly_examples() {
        let fld = f9();
        // coefficients in F_3 are fixed
        let f = Polynomial::from_coeffs(vec![2, 1, 1]);
        assert_eq!(conj_poly(&f, &fld), f);
        // x + g  ->  x + g^3
        let g = fld.generator();
        let f = Polynomial::from_coeffs(vec![g, 1]);
        let expect = Polynomial::from_coeffs(vec![fld.pow(g, 3), 1]);
        assert_eq!(conj_poly(&f, &fld), expect);
        assert_eq!(conj_poly(&conj_poly(&f, &fld), &fld), f);
    }

    #[test]
    fn conj_reciprocal_degree_one() {
        let fld = f9();
        let xp1 = Polynomial::from_coeffs(vec![1, 1]);
        assert_eq!(conj_reciprocal(&xp1, &fld).unwrap(), xp1);
        // constant a with a^4 != 1 gives x + a^{-3} != f
        let g = fld.generator();
        assert_ne!(fld.pow(g, 4), 1);
        let f = Polynomial::from_coeffs(vec![g, 1]);
        let fd = conj_reciprocal(&f, &fld).unwrap();
        let a_inv_q = fld.inv(fld.pow(g, 3)).unwrap();
        assert_eq!(fd, Polynomial::from_coeffs(vec![a_inv_q, 1]));
        assert_ne!(fd, f);
    }

    #[test]
    fn degree_one_scrim_in_f25() {
        // x + a^4 over F_25: (a^4)^6 = 1 forces self-conjugate-reciprocity
        let fld = BaseField::for_q(5).unwrap();
        let a4 = fld.pow(fld.generator(), 4);
        let f = Polynomial::from_coeffs(vec![a4, 1]);
        assert!(is_self_conjugate_reciprocal(&f, &fld).unwrap());
    }

    #[test]
    fn irreducibility_basics() {
        let fld = f9();
        // x^2 - c for a non-square c: g is a non-square in F_9
        let f = Polynomial::from_coeffs(vec![fld.neg(fld.generator()), 0, 1]);
        assert!(is_irreducible(&f, &fld).unwrap());
        // (x+1)^2
        let xp1 = Polynomial::from_coeffs(vec![1, 1]);
        let sq = mul(&xp1, &xp1, &fld);
        assert!(!is_irreducible(&sq, &fld).unwrap());
        assert_eq!(
            is_irreducible(&Polynomial::one(), &fld),
            Err(PolyError::ConstantPolynomial)
        );
    }

    /// Trial-division oracle: irreducible iff no monic divisor of degree
    /// 1..=deg/2 divides f.
    fn irreducible_by_trial(f: &Polynomial, fld: &BaseField) -> bool {
        let deg = f.degree().unwrap();
        for d in 1..=deg / 2 {
            let count = (fld.size() as u128).pow(d as u32);
            for v in 0..count {
                let mut coeffs: Vec<u16> = Vec::with_capacity(d + 1);
                let mut val = v;
                for _ in 0..d {
                    coeffs.push((val % fld.size() as u128) as u16);
                    val /= fld.size() as u128;
                }
                coeffs.push(1);
                let cand = Polynomial::from_coeffs(coeffs);
                if rem(f, &cand, fld).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for fld in [f4(), f9()] {
            for deg in 2..=4usize {
                let count = (fld.size() as u128).pow(deg as u32);
                for v in 0..count {
                    let mut coeffs: Vec<u16> = Vec::with_capacity(deg + 1);
                    let mut val = v;
                    for _ in 0..deg {
                        coeffs.push((val % fld.size() as u128) as u16);
                        val /= fld.size() as u128;
                    }
                    coeffs.push(1);
                    let f = Polynomial::from_coeffs(coeffs);
                    assert_eq!(
                        is_irreducible(&f, &fld).unwrap(),
                        irreducible_by_trial(&f, &fld),
                        "mismatch on {:?} over F_{}",
                        f,
                        fld.size()
                    );
                }
            }
        }
    }

    #[test]
    fn necklace_counts() {
        // number of monic irreducibles of degree n over F_Q:
        // (1/n) sum_{e|n} mu(e) Q^{n/e}
        for (q2, deg, expect) in [(4u64, 3usize, 20u64), (4, 5, 204), (9, 3, 240)] {
            let fld = BaseField::for_q((q2 as f64).sqrt() as u64).unwrap();
            assert_eq!(fld.size(), q2);
            let count = (q2 as u128).pow(deg as u32);
            let mut n = 0u64;
            for v in 0..count {
                let mut coeffs: Vec<u16> = Vec::with_capacity(deg + 1);
                let mut val = v;
                for _ in 0..deg {
                    coeffs.push((val % q2 as u128) as u16);
                    val /= q2 as u128;
                }
                coeffs.push(1);
                if is_irreducible(&Polynomial::from_coeffs(coeffs), &fld).unwrap() {
                    n += 1;
                }
            }
            assert_eq!(n, expect);
        }
    }

    #[test]
    fn poly_order_examples() {
        let fld = f9();
        // x - 1
        let f = Polynomial::from_coeffs(vec![2, 1]);
        assert_eq!(poly_order(&f, &fld).unwrap(), BigUint::from(1u32));
        // x + 1 over odd characteristic
        let f = Polynomial::from_coeffs(vec![1, 1]);
        assert_eq!(poly_order(&f, &fld).unwrap(), BigUint::from(2u32));
        // rejections
        assert_eq!(poly_order(&Polynomial::x(), &fld), Err(PolyError::ZeroConstantTerm));
        let xp1 = Polynomial::from_coeffs(vec![1, 1]);
        let sq = mul(&xp1, &xp1, &fld);
        assert_eq!(poly_order(&sq, &fld), Err(PolyError::NotIrreducible));
    }

    #[test]
    fn poly_order_divides_and_divides_back() {
        let fld = f4();
        // every irreducible cubic over F_4: order divides 4^3 - 1 = 63 and
        // f divides x^order - 1
        for v in 0..64u64 {
            let coeffs = vec![(v % 4) as u16, ((v / 4) % 4) as u16, ((v / 16) % 4) as u16, 1];
            let f = Polynomial::from_coeffs(coeffs);
            if f.constant_term() == 0 || !is_irreducible(&f, &fld).unwrap() {
                continue;
            }
            let ord = poly_order(&f, &fld).unwrap();
            let ord_u = ord.to_string().parse::<usize>().unwrap();
            assert_eq!(BigUint::from(63u32) % &ord, BigUint::from(0u32));
            let mut xs = Polynomial::monomial(ord_u);
            xs = sub(&xs, &Polynomial::one(), &fld);
            assert!(rem(&xs, &f, &fld).unwrap().is_zero());
        }
    }

    #[test]
    fn powmod_examples() {
        let fld = f9();
        let f = Polynomial::from_coeffs(vec![fld.neg(fld.generator()), 0, 1]);
        let x = Polynomial::x();
        assert_eq!(
            powmod(&x, &BigUint::from(1u32), &f, &fld).unwrap(),
            rem(&x, &f, &fld).unwrap()
        );
        // Frobenius fixed point: x^{Q^deg} = x mod f for irreducible f
        let e = BigUint::from(81u32 * 81);
        assert_eq!(powmod(&x, &e, &f, &fld).unwrap(), rem(&x, &f, &fld).unwrap());
        // x^{ord(f)} = 1 mod f
        let ord = poly_order(&f, &fld).unwrap();
        assert_eq!(
            powmod(&x, &ord, &f, &fld).unwrap(),
            Polynomial::one()
        );
        assert_eq!(
            powmod(&x, &e, &Polynomial::one(), &fld),
            Err(PolyError::ConstantPolynomial)
        );
    }

    #[test]
    fn grammar_round_trip() {
        let fld = f9();
        let g = fld.generator();
        let f = Polynomial::from_coeffs(vec![2, fld.pow(g, 5), fld.pow(g, 3), 1]);
        let s = format_poly(&f, &fld);
        assert_eq!(s, "x^3 + g^3*x^2 + g^5*x + 2");
        assert_eq!(parse_poly(&s, &fld).unwrap(), f);
        assert_eq!(parse_poly("x + 1", &fld).unwrap(), Polynomial::from_coeffs(vec![1, 1]));
        assert_eq!(parse_poly("g*x + g^2", &fld).unwrap(),
            Polynomial::from_coeffs(vec![fld.pow(g, 2), g]));
    }

    #[test]
    fn parse_errors_carry_position() {
        let fld = f9();
        let err = parse_poly("x^2 + ?", &fld).unwrap_err();
        assert_eq!(err.position, 6);
        let err = parse_poly("x^2 $ 1", &fld).unwrap_err();
        assert!(err.position > 0);
    }
}
