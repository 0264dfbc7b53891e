//! Self-conjugate-reciprocal irreducible monic (SCRIM) polynomials over
//! F_{q^2}: the order set D_n, the f_beta construction, order-indexed
//! counting, degree-1 enumeration, cyclotomic polynomials, a classification
//! report, and a brute-force oracle for cross-validation.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::cosets::CosetError;
use crate::field::{BaseField, FieldError, FieldSpec};
use crate::numutil::{self, NumError};
use crate::poly::{self, Polynomial, PolyError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScrimError {
    #[error("degree must be odd (SCRIM polynomials of even degree do not exist)")]
    EvenDegree,
    #[error("degree 1 is handled by the dedicated degree-1 route")]
    DegreeOne,
    #[error("order {0} is not in D_n")]
    NotInDn(BigUint),
    #[error("exponent does not give a primitive root of the requested order")]
    NotPrimitiveRoot,
    #[error("predicted output size {predicted} exceeds the cap {cap}")]
    CountCapExceeded { predicted: BigUint, cap: u64 },
    #[error("predicted work {predicted} exceeds the cap {cap}")]
    WorkCapExceeded { predicted: u128, cap: u64 },
    #[error("internal consistency violation: {0}")]
    Internal(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Work and output caps for the enumeration entry points.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    /// Maximum number of records `enumerate_scrim` may produce.
    pub count_cap: u64,
    /// Maximum number of candidate polynomials `oracle_enumerate` may scan.
    pub work_cap: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            count_cap: 10_000_000,
            work_cap: 100_000_000,
        }
    }
}

/// Divisors of q^n + 1 that divide no q^k + 1 with 0 <= k < n: exactly the
/// orders realized by degree-n SCRIM polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnSet {
    pub q: u64,
    pub n: u32,
    /// Ascending.
    pub members: Vec<BigUint>,
}

pub fn compute_dn(q: u64, n: u32) -> Result<DnSet, ScrimError> {
    if n.is_multiple_of(2) {
        return Err(ScrimError::EvenDegree);
    }
    if n == 1 {
        return Err(ScrimError::DegreeOne);
    }
    let qb = BigUint::from(q);
    let value = qb.pow(n) + BigUint::one();
    let smaller: Vec<BigUint> = (0..n).map(|k| qb.pow(k) + BigUint::one()).collect();
    let members = numutil::divisors(&value)?
        .into_iter()
        .filter(|d| smaller.iter().all(|s| !(s % d).is_zero()))
        .collect();
    Ok(DnSet { q, n, members })
}

/// Result of the counting formula; `even_degree` flags the degenerate case
/// where the count is zero by the odd-degree theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub count: BigUint,
    pub even_degree: bool,
}

/// Number of SCRIM polynomials of degree n over F_{q^2}: q + 1 for n = 1,
/// (1/n) sum of phi(d) over D_n for odd n >= 3, and 0 for even n.
pub fn count_scrim(q: u64, n: u32) -> Result<CountResult, ScrimError> {
    if n == 0 || n.is_multiple_of(2) {
        return Ok(CountResult {
            count: BigUint::zero(),
            even_degree: true,
        });
    }
    if n == 1 {
        return Ok(CountResult {
            count: BigUint::from(q + 1),
            even_degree: false,
        });
    }
    let per_order = count_scrim_by_order(q, n)?;
    Ok(CountResult {
        count: per_order.into_iter().map(|(_, c)| c).sum(),
        even_degree: false,
    })
}

/// phi(d)/n SCRIM polynomials of degree n and order d, for each d in D_n.
/// Ascending by order.
pub fn count_scrim_by_order(q: u64, n: u32) -> Result<Vec<(BigUint, BigUint)>, ScrimError> {
    let dn = compute_dn(q, n)?;
    let nb = BigUint::from(n);
    dn.members
        .into_iter()
        .map(|d| {
            let phi = numutil::euler_phi(&d)?;
            let (quot, rem) = phi.div_rem(&nb);
            if !rem.is_zero() {
                return Err(ScrimError::Internal(format!(
                    "phi({d}) is not divisible by {n}"
                )));
            }
            Ok((d, quot))
        })
        .collect()
}

/// One enumerated SCRIM polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrimRecord {
    pub q: u64,
    pub n: u32,
    /// ord(f), a member of D_n (or a divisor of q^2 - 1 for degree 1).
    pub order: BigUint,
    /// Over F_{q^2}, monic, irreducible, conj-reciprocal-fixed.
    pub poly: Polynomial,
    /// Exponent e with g^e a root, g the canonical top-field generator.
    pub root_exponent: BigUint,
}

/// An enumeration result together with the tower it was computed in.
#[derive(Debug)]
pub struct Enumeration {
    pub spec: FieldSpec,
    pub records: Vec<ScrimRecord>,
}

fn sort_records(records: &mut [ScrimRecord]) {
    records.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.poly.cmp_canonical(&b.poly))
    });
}

/// The q + 1 SCRIM polynomials of degree 1: x + a with a in the unique
/// subgroup of order q + 1 of the unit group of F_{q^2}.
pub fn enumerate_degree1(q: u64) -> Result<Enumeration, ScrimError> {
    let spec = FieldSpec::for_q(q, 1)?;
    let fld = spec.base();
    let g = fld.generator();
    let unit_order = fld.size() - 1;
    let mut records = Vec::with_capacity(q as usize + 1);
    for i in 0..=q {
        // a = g^{(q-1) i} ranges over the subgroup of order q + 1
        let a = fld.pow(g, (q - 1) * i);
        if fld.pow(a, q + 1) != 1 {
            return Err(ScrimError::Internal("subgroup element of wrong order".into()));
        }
        let f = Polynomial::from_coeffs(vec![a, 1]);
        if !poly::is_self_conjugate_reciprocal(&f, fld)? {
            return Err(ScrimError::Internal("degree-1 construction not SCRIM".into()));
        }
        let root = fld.neg(a);
        let e = fld.log(root).unwrap_or(0);
        let order = unit_order / unit_order.gcd(&e);
        records.push(ScrimRecord {
            q,
            n: 1,
            order: BigUint::from(order),
            poly: f,
            root_exponent: BigUint::from(e),
        });
    }
    sort_records(&mut records);
    Ok(Enumeration { spec, records })
}

/// Expand f_beta(x) = prod_{i=0}^{n-1} (x - beta^{q^{2i}}) for beta = g^e a
/// primitive d-th root of unity, recognize its coefficients in F_{q^2}, and
/// verify every claimed property of the construction.
pub fn build_f_beta(spec: &FieldSpec, d: &BigUint, e: &BigUint) -> Result<ScrimRecord, ScrimError> {
    let n = spec.n();
    let beta = spec.pow(spec.generator(), e);
    if spec.element_order(&beta)? != *d {
        return Err(ScrimError::NotPrimitiveRoot);
    }
    let q2 = BigUint::from(spec.base().size());
    let mut roots = Vec::with_capacity(n);
    let mut cur = beta;
    for _ in 0..n {
        roots.push(cur.clone());
        cur = spec.pow(&cur, &q2);
    }
    for i in 0..n {
        for j in 0..i {
            if roots[i] == roots[j] {
                return Err(ScrimError::Internal(
                    "conjugate roots are not pairwise distinct".into(),
                ));
            }
        }
    }
    let expanded = spec.expand_linear_factors(&roots);
    let coeffs = spec.recognize_coeffs(&expanded)?;
    let f = Polynomial::from_coeffs(coeffs);
    if f.degree() != Some(n) || !f.is_monic() {
        return Err(ScrimError::Internal("f_beta is not monic of degree n".into()));
    }
    if !poly::is_irreducible(&f, spec.base())? {
        return Err(ScrimError::Internal("f_beta is not irreducible".into()));
    }
    if !poly::is_self_conjugate_reciprocal(&f, spec.base())? {
        return Err(ScrimError::Internal("f_beta is not conj-reciprocal-fixed".into()));
    }
    let order = poly::poly_order_with(&f, spec.base(), spec.group_order(), spec.group_order_factors())?;
    if order != *d {
        return Err(ScrimError::Internal("f_beta has unexpected order".into()));
    }
    Ok(ScrimRecord {
        q: spec.q(),
        n: n as u32,
        order: d.clone(),
        poly: f,
        root_exponent: e.clone(),
    })
}

/// Enumerate every SCRIM polynomial of odd degree n >= 3 over F_{q^2}, one
/// f_beta per cyclotomic coset of units modulo each d in D_n. Output is in
/// canonical order (ascending order d, then ascending coefficient encoding)
/// regardless of worker scheduling.
pub fn enumerate_scrim(
    q: u64,
    n: u32,
    order_filter: Option<&BigUint>,
    cfg: &Config,
) -> Result<Enumeration, ScrimError> {
    let dn = compute_dn(q, n)?;
    let selected: Vec<BigUint> = match order_filter {
        Some(d) => {
            if !dn.members.contains(d) {
                return Err(ScrimError::NotInDn(d.clone()));
            }
            vec![d.clone()]
        }
        None => dn.members.clone(),
    };

    let nb = BigUint::from(n);
    let mut predicted = BigUint::zero();
    for d in &selected {
        predicted += numutil::euler_phi(d)? / &nb;
    }
    if predicted > BigUint::from(cfg.count_cap) {
        return Err(ScrimError::CountCapExceeded {
            predicted,
            cap: cfg.count_cap,
        });
    }

    let spec = FieldSpec::for_q(q, n as usize)?;

    // one job per cyclotomic coset of units mod d under multiplication by q^2
    let mut jobs: Vec<(u64, u64)> = Vec::new();
    for d in &selected {
        let d = d.to_u64().ok_or_else(|| {
            ScrimError::Internal("order does not fit the representative scan".into())
        })?;
        let q2 = (q as u128 * q as u128 % d as u128) as u64;
        for r in 1..d {
            if r.gcd(&d) != 1 {
                continue;
            }
            // r is a representative iff it is the minimum of its orbit
            let mut cur = (r as u128 * q2 as u128 % d as u128) as u64;
            let mut size = 1u32;
            let mut minimal = true;
            while cur != r {
                if cur < r {
                    minimal = false;
                    break;
                }
                cur = (cur as u128 * q2 as u128 % d as u128) as u64;
                size += 1;
            }
            if !minimal {
                continue;
            }
            if size != n {
                return Err(ScrimError::Internal(format!(
                    "coset of {r} mod {d} has size {size}, expected {n}"
                )));
            }
            jobs.push((d, r));
        }
    }

    let mut records = jobs
        .par_iter()
        .map(|&(d, r)| {
            let db = BigUint::from(d);
            let e = BigUint::from(r) * (spec.group_order() / &db);
            build_f_beta(&spec, &db, &e)
        })
        .collect::<Result<Vec<_>, _>>()?;
    sort_records(&mut records);

    if BigUint::from(records.len() as u64) != predicted {
        return Err(ScrimError::Internal(format!(
            "enumerated {} records, counting formula predicts {predicted}",
            records.len()
        )));
    }
    Ok(Enumeration { spec, records })
}

/// Brute-force ground truth: scan every monic degree-n polynomial over
/// F_{q^2} with nonzero constant term and keep those that are irreducible
/// and conj-reciprocal-fixed. Canonical ascending-encoding order.
pub fn oracle_enumerate(
    q: u64,
    n: u32,
    cfg: &Config,
) -> Result<(BaseField, Vec<Polynomial>), ScrimError> {
    let fld = BaseField::for_q(q)?;
    let size = fld.size();
    let candidates = (size as u128 - 1) * (size as u128).pow(n - 1);
    if candidates > cfg.work_cap as u128 {
        return Err(ScrimError::WorkCapExceeded {
            predicted: candidates,
            cap: cfg.work_cap,
        });
    }
    let total = (size as u128).pow(n) as u64;
    let mut found: Vec<Polynomial> = (0..total)
        .into_par_iter()
        .filter_map(|v| {
            if v % size == 0 {
                return None; // zero constant term
            }
            let mut coeffs = Vec::with_capacity(n as usize + 1);
            let mut val = v;
            for _ in 0..n {
                coeffs.push((val % size) as u16);
                val /= size;
            }
            coeffs.push(1);
            let f = Polynomial::from_coeffs(coeffs);
            let scr = poly::is_self_conjugate_reciprocal(&f, &fld).expect("degree >= 1");
            if scr && poly::is_irreducible(&f, &fld).expect("degree >= 1") {
                Some(f)
            } else {
                None
            }
        })
        .collect();
    found.sort_by(|a, b| a.cmp_canonical(b));
    Ok((fld, found))
}

/// The d-th cyclotomic polynomial over F_{q^2}: the product of (x - eta)
/// over all primitive d-th roots of unity eta in the spec's top field.
pub fn cyclotomic_q_poly(d: u64, spec: &FieldSpec) -> Result<Polynomial, ScrimError> {
    if d == 0 {
        return Err(ScrimError::Internal("d must be positive".into()));
    }
    if d.is_multiple_of(spec.base().p()) {
        return Err(ScrimError::Internal(
            "d must not be divisible by the characteristic".into(),
        ));
    }
    let db = BigUint::from(d);
    let zeta = spec.root_of_unity(&db)?;
    let roots: Vec<_> = (1..=d)
        .filter(|s| s.gcd(&d) == 1)
        .map(|s| spec.pow(&zeta, &BigUint::from(s)))
        .collect();
    let expanded = spec.expand_linear_factors(&roots);
    let coeffs = spec.recognize_coeffs(&expanded)?;
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Classification report for a monic polynomial over F_{q^2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub degree: usize,
    pub is_irreducible: bool,
    pub is_self_conjugate_reciprocal: bool,
    /// ord(f), present when f is irreducible.
    pub order: Option<BigUint>,
    /// Whether ord(f) lies in D_n (degree 1: the a^{q+1} = 1 test); absent
    /// for even degree or reducible input.
    pub order_in_dn: Option<bool>,
    pub is_scrim: bool,
    /// The equivalent characterizations agree on this input.
    pub consistent: bool,
}

/// Compute the SCRIM characterizations of `f` independently and report them.
pub fn classify(f: &Polynomial, fld: &BaseField) -> Result<ClassifyReport, ScrimError> {
    let degree = match f.degree() {
        None => return Err(ScrimError::Poly(PolyError::ZeroPolynomial)),
        Some(0) => return Err(ScrimError::Poly(PolyError::ConstantPolynomial)),
        Some(d) => d,
    };
    if !f.is_monic() {
        return Err(ScrimError::Poly(PolyError::NotMonic));
    }
    if f.constant_term() == 0 {
        return Err(ScrimError::Poly(PolyError::ZeroConstantTerm));
    }
    let q = fld.q();
    let is_irr = poly::is_irreducible(f, fld)?;
    let is_scr = poly::is_self_conjugate_reciprocal(f, fld)?;
    let order = if is_irr {
        Some(poly::poly_order(f, fld)?)
    } else {
        None
    };
    let order_in_dn = if !is_irr || degree % 2 == 0 {
        None
    } else if degree == 1 {
        Some(fld.pow(f.constant_term(), q + 1) == 1)
    } else {
        let dn = compute_dn(q, degree as u32)?;
        Some(dn.members.contains(order.as_ref().expect("irreducible")))
    };
    let consistent = match order_in_dn {
        Some(crit) => is_scr == crit,
        // even-degree irreducibles must not be self-conjugate-reciprocal;
        // reducible inputs are outside the theorem
        None => !is_irr || !is_scr,
    };
    Ok(ClassifyReport {
        degree,
        is_irreducible: is_irr,
        is_self_conjugate_reciprocal: is_scr,
        order,
        order_in_dn,
        is_scrim: is_irr && is_scr,
        consistent,
    })
}

/// Group records by order, returning (order, count) ascending.
pub fn order_histogram(records: &[ScrimRecord]) -> Vec<(BigUint, u64)> {
    let mut map: BTreeMap<BigUint, u64> = BTreeMap::new();
    for r in records {
        *map.entry(r.order.clone()).or_insert(0) += 1;
    }
    map.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn dn_examples() {
        assert_eq!(
            compute_dn(3, 3).unwrap().members,
            vec![big(7), big(14), big(28)]
        );
        assert_eq!(compute_dn(2, 3).unwrap().members, vec![big(9)]);
        assert_eq!(
            compute_dn(2, 15).unwrap().members,
            [99u64, 331, 993, 2979, 3641, 10923, 32769].map(big).to_vec()
        );
        assert_eq!(compute_dn(2, 4), Err(ScrimError::EvenDegree));
        assert_eq!(compute_dn(2, 1), Err(ScrimError::DegreeOne));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_scrim(5, 1).unwrap().count, big(6));
        assert_eq!(count_scrim(3, 3).unwrap().count, big(8));
        assert_eq!(count_scrim(2, 5).unwrap().count, big(6));
        assert_eq!(count_scrim(5, 15).unwrap().count, big(2034504992));
        let even = count_scrim(2, 4).unwrap();
        assert!(even.even_degree);
        assert!(even.count.is_zero());
    }

    #[test]
    fn count_by_order_examples() {
        assert_eq!(
            count_scrim_by_order(3, 3).unwrap(),
            vec![(big(7), big(2)), (big(14), big(2)), (big(28), big(4))]
        );
        let by_order = count_scrim_by_order(2, 15).unwrap();
        let expect: Vec<(BigUint, BigUint)> = [
            (99u64, 4u64),
            (331, 22),
            (993, 44),
            (2979, 132),
            (3641, 220),
            (10923, 440),
            (32769, 1320),
        ]
        .iter()
        .map(|&(d, c)| (big(d), big(c)))
        .collect();
        assert_eq!(by_order, expect);
        let total: BigUint = by_order.into_iter().map(|(_, c)| c).sum();
        assert_eq!(total, count_scrim(2, 15).unwrap().count);
    }

    #[test]
    fn degree_one_enumeration() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let e = enumerate_degree1(q).unwrap();
            assert_eq!(e.records.len() as u64, q + 1);
            let fld = e.spec.base();
            for r in &e.records {
                assert_eq!(r.poly.degree(), Some(1));
                let a = r.poly.constant_term();
                assert_eq!(fld.pow(a, q + 1), 1);
                assert!(poly::is_self_conjugate_reciprocal(&r.poly, fld).unwrap());
            }
        }
    }

    #[test]
    fn degree_one_f25_constant_terms() {
        // constants are exactly { alpha^{4i} : 0 <= i <= 5 }
        let e = enumerate_degree1(5).unwrap();
        let fld = e.spec.base();
        let g = fld.generator();
        let mut expect: Vec<u16> = (0..6).map(|i| fld.pow(g, 4 * i)).collect();
        expect.sort_unstable();
        let mut got: Vec<u16> = e.records.iter().map(|r| r.poly.constant_term()).collect();
        got.sort_unstable();
        assert_eq!(got, expect);
    }

    #[test]
    fn f_beta_order_14_example() {
        // exponents 52, 468, 572 give the same cubic of order 14 over F_729
        let spec = FieldSpec::build(3, 1, 3).unwrap();
        let d = big(14);
        let r52 = build_f_beta(&spec, &d, &big(52)).unwrap();
        let r468 = build_f_beta(&spec, &d, &big(468)).unwrap();
        let r572 = build_f_beta(&spec, &d, &big(572)).unwrap();
        assert_eq!(r52.poly, r468.poly);
        assert_eq!(r52.poly, r572.poly);
        assert_eq!(r52.order, d);
        assert_eq!(r52.poly.degree(), Some(3));
        // wrong order is rejected
        assert_eq!(
            build_f_beta(&spec, &big(7), &big(52)),
            Err(ScrimError::NotPrimitiveRoot)
        );
    }

    #[test]
    fn enumerate_3_3() {
        let e = enumerate_scrim(3, 3, None, &Config::default()).unwrap();
        assert_eq!(e.records.len(), 8);
        assert_eq!(
            order_histogram(&e.records),
            vec![(big(7), 2), (big(14), 2), (big(28), 4)]
        );
        let filtered = enumerate_scrim(3, 3, Some(&big(28)), &Config::default()).unwrap();
        assert_eq!(filtered.records.len(), 4);
        assert_eq!(
            enumerate_scrim(3, 3, Some(&big(5)), &Config::default())
                .err()
                .unwrap(),
            ScrimError::NotInDn(big(5))
        );
    }

    #[test]
    fn enumerate_matches_oracle_2_3() {
        let e = enumerate_scrim(2, 3, None, &Config::default()).unwrap();
        let (_, oracle) = oracle_enumerate(2, 3, &Config::default()).unwrap();
        assert_eq!(e.records.len(), 2);
        let mut constructed: Vec<Polynomial> = e.records.iter().map(|r| r.poly.clone()).collect();
        constructed.sort_by(|a, b| a.cmp_canonical(b));
        assert_eq!(constructed, oracle);
    }

    #[test]
    fn oracle_even_degree_is_empty() {
        let (_, o) = oracle_enumerate(2, 2, &Config::default()).unwrap();
        assert!(o.is_empty());
    }

    #[test]
    fn oracle_cap() {
        let cfg = Config {
            work_cap: 10,
            ..Config::default()
        };
        assert!(matches!(
            oracle_enumerate(3, 3, &cfg),
            Err(ScrimError::WorkCapExceeded { .. })
        ));
    }

    #[test]
    fn count_cap() {
        let cfg = Config {
            count_cap: 3,
            ..Config::default()
        };
        assert!(matches!(
            enumerate_scrim(3, 3, None, &cfg),
            Err(ScrimError::CountCapExceeded { .. })
        ));
    }

    #[test]
    fn cyclotomic_basics() {
        let spec = FieldSpec::build(3, 1, 3).unwrap();
        let fld = spec.base();
        assert_eq!(
            cyclotomic_q_poly(1, &spec).unwrap(),
            Polynomial::from_coeffs(vec![2, 1])
        );
        assert_eq!(
            cyclotomic_q_poly(2, &spec).unwrap(),
            Polynomial::from_coeffs(vec![1, 1])
        );
        // product over d | 28 reconstructs x^28 - 1
        let mut prod = Polynomial::one();
        for d in [1u64, 2, 4, 7, 14, 28] {
            prod = poly::mul(&prod, &cyclotomic_q_poly(d, &spec).unwrap(), fld);
        }
        let mut x28 = Polynomial::monomial(28);
        x28 = poly::sub(&x28, &Polynomial::one(), fld);
        assert_eq!(prod, x28);
        // characteristic divides d
        assert!(cyclotomic_q_poly(3, &spec).is_err());
    }

    #[test]
    fn classify_examples() {
        let f4 = BaseField::for_q(2).unwrap();
        let r = classify(&Polynomial::from_coeffs(vec![1, 1]), &f4).unwrap();
        assert!(r.is_scrim);
        assert_eq!(r.degree, 1);
        assert!(r.consistent);

        // any irreducible quadratic over F_9 is not SCRIM
        let f9 = BaseField::for_q(3).unwrap();
        let g = f9.generator();
        let f = Polynomial::from_coeffs(vec![f9.neg(g), 0, 1]);
        let r = classify(&f, &f9).unwrap();
        assert!(r.is_irreducible);
        assert!(!r.is_scrim);
        assert!(r.consistent);

        // every enumerated record classifies as SCRIM with agreeing criteria
        let e = enumerate_scrim(3, 3, None, &Config::default()).unwrap();
        for rec in &e.records {
            let rep = classify(&rec.poly, e.spec.base()).unwrap();
            assert!(rep.is_scrim);
            assert_eq!(rep.order.as_ref(), Some(&rec.order));
            assert_eq!(rep.order_in_dn, Some(true));
            assert!(rep.consistent);
        }

        // rejections with distinct codes
        assert_eq!(
            classify(&Polynomial::from_coeffs(vec![1, 2]), &f9),
            Err(ScrimError::Poly(PolyError::NotMonic))
        );
        assert_eq!(
            classify(&Polynomial::x(), &f9),
            Err(ScrimError::Poly(PolyError::ZeroConstantTerm))
        );
    }
}
