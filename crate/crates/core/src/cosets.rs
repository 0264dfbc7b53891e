//! Cyclotomic cosets of q^2 modulo n, the coset-level criterion for
//! self-conjugate-reciprocity, and minimal-polynomial construction.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::field::{FieldError, FieldSpec};
use crate::poly::Polynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CosetError {
    #[error("modulus and q must be coprime")]
    NotCoprime,
    #[error("residue {0} is not in [0, {1})")]
    ResidueOutOfRange(u64, u64),
    #[error("field error: {0}")]
    Field(#[from] FieldError),
}

/// The orbit of a residue under multiplication by q^2 modulo n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub modulus: u64,
    /// q^2 reduced modulo n.
    pub base: u64,
    /// Smallest member.
    pub representative: u64,
    /// Ascending sorted members.
    pub members: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

/// Orbit of `i` under multiplication by `base` mod `n`. Kept internal so the
/// public surface is always the q^2 instantiation.
pub(crate) fn coset_with_base(i: u64, n: u64, base: u64) -> Result<CyclotomicCoset, CosetError> {
    if i >= n {
        return Err(CosetError::ResidueOutOfRange(i, n));
    }
    let base = base % n;
    let mut members = vec![i];
    let mut cur = mul_mod(i, base, n);
    while cur != i {
        members.push(cur);
        cur = mul_mod(cur, base, n);
    }
    members.sort_unstable();
    Ok(CyclotomicCoset {
        modulus: n,
        base,
        representative: members[0],
        members,
    })
}

/// The cyclotomic coset of `i` under multiplication by q^2 modulo n.
pub fn coset(i: u64, n: u64, q: u64) -> Result<CyclotomicCoset, CosetError> {
    if n.gcd(&q) != 1 {
        return Err(CosetError::NotCoprime);
    }
    coset_with_base(i, n, mul_mod(q % n, q % n, n))
}

/// Minimal representatives of every distinct coset, ascending. The cosets
/// partition {0, ..., n-1}.
pub fn all_coset_representatives(n: u64, q: u64) -> Result<Vec<u64>, CosetError> {
    if n.gcd(&q) != 1 {
        return Err(CosetError::NotCoprime);
    }
    let base = mul_mod(q % n, q % n, n);
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        reps.push(i);
        let mut cur = i;
        loop {
            seen[cur as usize] = true;
            cur = mul_mod(cur, base, n);
            if cur == i {
                break;
            }
        }
    }
    Ok(reps)
}

/// Coset-level criterion: the minimal polynomial indexed by `i` is
/// self-conjugate-reciprocal iff the coset of i equals the coset of -qi.
pub fn is_scrim_coset(i: u64, n: u64, q: u64) -> Result<bool, CosetError> {
    let a = coset(i, n, q)?;
    let neg_qi = (n - mul_mod(q % n, i % n, n)) % n;
    let b = coset(neg_qi, n, q)?;
    Ok(a.members == b.members)
}

/// Expand the minimal polynomial of zeta^i over F_{q^2}, where zeta is the
/// canonical primitive n-th root of unity in the spec's top field. Every
/// coefficient is subfield-recognized; failure to recognize is an internal
/// consistency violation and is reported loudly.
pub fn minimal_polynomial(i: u64, n: u64, spec: &FieldSpec) -> Result<Polynomial, CosetError> {
    let cos = coset(i, n, spec.q())?;
    let nb = BigUint::from(n);
    if (spec.group_order() % &nb) != BigUint::zero() {
        return Err(CosetError::Field(FieldError::NoSuchRootOfUnity(nb)));
    }
    let zeta = spec.root_of_unity(&nb)?;
    let roots: Vec<_> = cos
        .members
        .iter()
        .map(|&j| spec.pow(&zeta, &BigUint::from(j)))
        .collect();
    let expanded = spec.expand_linear_factors(&roots);
    let coeffs = spec.recognize_coeffs(&expanded)?;
    Ok(Polynomial::from_coeffs(coeffs))
}
