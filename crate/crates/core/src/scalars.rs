//! Exact scalar arithmetic: the prime field F_p, arbitrary-precision
//! rationals, and the cyclotomic field Q(zeta_p) with its p-adic valuation
//! and residue map.
//!
//! Every type here is an immutable value in canonical form; equality is
//! componentwise.

use crate::linalg::{self, ExactMatrix};
use crate::ring::{Domain, Field, Scalar};
use num::bigint::Sign;
use num::rational::Rational64;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt;

/// Default ceiling for the degree parameter; costs grow like p^4..p^6, so
/// larger primes sit behind an explicit override.
pub const DEFAULT_PRIME_CEILING: u32 = 13;

/// Validation errors for [`PrimeParam`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeError {
    NotOddPrime(u32),
    AboveCeiling(u32, u32),
}

impl fmt::Display for PrimeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeError::NotOddPrime(p) => write!(f, "bad prime: {} is not an odd prime", p),
            PrimeError::AboveCeiling(p, c) => write!(
                f,
                "bad prime: {} exceeds the ceiling {} (use the large-prime override)",
                p, c
            ),
        }
    }
}

impl std::error::Error for PrimeError {}

/// An odd prime degree parameter, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeParam {
    value: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeParam {
    /// An odd prime with the default ceiling applied.
    pub fn new(p: u32) -> Result<Self, PrimeError> {
        let param = Self::with_ceiling_override(p)?;
        if p > DEFAULT_PRIME_CEILING {
            return Err(PrimeError::AboveCeiling(p, DEFAULT_PRIME_CEILING));
        }
        Ok(param)
    }

    /// An odd prime of any size (still rejects 2 and composites). Intended
    /// for callers that accept the cost explicitly.
    pub fn with_ceiling_override(p: u32) -> Result<Self, PrimeError> {
        if p < 3 || !is_prime(p) {
            return Err(PrimeError::NotOddPrime(p));
        }
        Ok(PrimeParam { value: p })
    }

    pub fn get(self) -> u32 {
        self.value
    }
}

impl fmt::Display for PrimeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// An element of the prime field F_p. Carries its modulus, so elements of
/// different fields never mix silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    p: PrimeParam,
}

impl FpScalar {
    pub fn new(n: i64, p: PrimeParam) -> Self {
        let m = p.get() as i64;
        FpScalar {
            value: n.rem_euclid(m) as u32,
            p,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn prime(self) -> PrimeParam {
        self.p
    }

    fn check(self, other: FpScalar) {
        assert_eq!(self.p, other.p, "mixed prime fields F_{} and F_{}", self.p, other.p);
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = FpScalar::new(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Domain for FpScalar {
    fn zero_like(&self) -> Self {
        FpScalar::new(0, self.p)
    }

    fn one_like(&self) -> Self {
        FpScalar::new(1, self.p)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, other: &Self) -> Self {
        self.check(*other);
        FpScalar::new(self.value as i64 + other.value as i64, self.p)
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(*other);
        FpScalar::new(self.value as i64 - other.value as i64, self.p)
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(*other);
        let m = self.p.get() as u64;
        FpScalar {
            value: ((self.value as u64 * other.value as u64) % m) as u32,
            p: self.p,
        }
    }

    fn neg(&self) -> Self {
        FpScalar::new(-(self.value as i64), self.p)
    }

    fn exact_div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Field for FpScalar {
    fn inv(&self) -> Self {
        assert!(self.value != 0, "division by zero in F_{}", self.p);
        // Fermat: a^(p-2) is the inverse for prime p.
        self.pow(self.p.get() as u64 - 2)
    }
}

impl Scalar for FpScalar {
    fn characteristic(&self) -> u32 {
        self.p.get()
    }

    fn from_int(&self, n: i64) -> Self {
        FpScalar::new(n, self.p)
    }

    fn pth_root_of_unity(&self) -> Option<Self> {
        None
    }
}

/// Arbitrary-precision exact rational, wrapped so it can serve as a
/// coefficient field for the generic linear algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Domain for Rat {
    fn zero_like(&self) -> Self {
        Rat(BigRational::zero())
    }

    fn one_like(&self) -> Self {
        Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn exact_div(&self, other: &Self) -> Self {
        Rat(&self.0 / &other.0)
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "division by zero rational");
        Rat(self.0.recip())
    }
}

/// A valuation value: an exact rational extended with +infinity (the value
/// of zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtRat {
    Finite(Rational64),
    Infinity,
}

impl ExtRat {
    pub fn finite(num: i64, den: i64) -> Self {
        ExtRat::Finite(Rational64::new(num, den))
    }

    pub fn zero() -> Self {
        ExtRat::Finite(Rational64::zero())
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn add(self, other: ExtRat) -> ExtRat {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a + b),
            _ => ExtRat::Infinity,
        }
    }

    pub fn sub(self, other: ExtRat) -> ExtRat {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a - b),
            (ExtRat::Infinity, ExtRat::Finite(_)) => ExtRat::Infinity,
            _ => panic!("cannot subtract infinite valuation"),
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (ExtRat::Infinity, ExtRat::Infinity) => std::cmp::Ordering::Equal,
            (ExtRat::Infinity, ExtRat::Finite(_)) => std::cmp::Ordering::Greater,
            (ExtRat::Finite(_), ExtRat::Infinity) => std::cmp::Ordering::Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(q) => write!(f, "{}", q),
            ExtRat::Infinity => write!(f, "inf"),
        }
    }
}

/// Error for residue maps applied outside the valuation ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidueError {
    NegativeValue,
}

impl fmt::Display for ResidueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueError::NegativeValue => write!(f, "element has a coefficient of negative p-adic value"),
        }
    }
}

impl std::error::Error for ResidueError {}

/// An element of the cyclotomic field Q(zeta_p), stored on the power basis
/// {1, zeta, ..., zeta^(p-2)} over a common denominator.
///
/// Canonical form: den > 0 and gcd(content of numerators, den) = 1, so two
/// values are equal iff their fields are componentwise equal. The rational
/// coefficient of zeta^i is `nums[i] / den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloNum {
    nums: Vec<BigInt>,
    den: BigInt,
    p: PrimeParam,
}

impl CycloNum {
    pub fn zero(p: PrimeParam) -> Self {
        CycloNum {
            nums: vec![BigInt::zero(); (p.get() - 1) as usize],
            den: BigInt::one(),
            p,
        }
    }

    pub fn integer(n: i64, p: PrimeParam) -> Self {
        let mut z = Self::zero(p);
        z.nums[0] = BigInt::from(n);
        z
    }

    /// The chosen primitive p-th root of unity.
    pub fn zeta(p: PrimeParam) -> Self {
        Self::zeta_pow(1, p)
    }

    /// zeta^k for any integer exponent, reduced to the power basis.
    pub fn zeta_pow(k: i64, p: PrimeParam) -> Self {
        let pv = p.get() as i64;
        let e = k.rem_euclid(pv) as usize;
        let mut z = Self::zero(p);
        if e < (p.get() - 1) as usize {
            z.nums[e] = BigInt::one();
        } else {
            // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
            for c in z.nums.iter_mut() {
                *c = -BigInt::one();
            }
        }
        z
    }

    /// Build from rational coefficients of 1, zeta, ..., zeta^(p-2).
    pub fn from_rationals(coeffs: &[BigRational], p: PrimeParam) -> Self {
        assert_eq!(coeffs.len(), (p.get() - 1) as usize, "wrong coefficient count");
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut z = CycloNum { nums, den, p };
        z.normalize();
        z
    }

    /// Rational coefficient of zeta^i, in lowest terms.
    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.nums[i].clone(), self.den.clone())
    }

    /// All coefficients, in lowest terms.
    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.nums.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn prime(&self) -> PrimeParam {
        self.p
    }

    fn normalize(&mut self) {
        if self.den.sign() == Sign::Minus {
            self.den = -self.den.clone();
            for c in self.nums.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.nums {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() && !g.is_zero() {
            self.den = &self.den / &g;
            for c in self.nums.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed cyclotomic fields p={} and p={}", self.p, other.p);
    }

    /// Reduce a raw power-of-zeta coefficient vector (indices 0..len) into the
    /// power basis using zeta^(p-1) = -(1 + ... + zeta^(p-2)).
    fn reduce_powers(mut raw: Vec<BigInt>, p: PrimeParam) -> Vec<BigInt> {
        let d = (p.get() - 1) as usize;
        let mut e = raw.len();
        while e > d {
            e -= 1;
            let c = std::mem::replace(&mut raw[e], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            // zeta^e = -(zeta^(e-d) + zeta^(e-d+1) + ... + zeta^(e-1))
            for t in 0..d {
                raw[e - d + t] -= &c;
            }
        }
        raw.truncate(d);
        raw.resize(d, BigInt::zero());
        raw
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::integer(1, self.p);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Galois conjugate zeta -> zeta^k (k must be nonzero mod p).
    pub fn conjugate(&self, k: u32) -> Self {
        let pv = self.p.get();
        assert!(k % pv != 0, "conjugation exponent must be a unit mod p");
        let mut raw = vec![BigInt::zero(); pv as usize];
        for (i, c) in self.nums.iter().enumerate() {
            let e = (i as u64 * k as u64 % pv as u64) as usize;
            raw[e] += c;
        }
        let nums = Self::reduce_powers(raw, self.p);
        let mut z = CycloNum {
            nums,
            den: self.den.clone(),
            p: self.p,
        };
        z.normalize();
        z
    }

    /// Field norm down to Q, computed as the determinant of the regular
    /// representation on the power basis.
    pub fn norm(&self) -> BigRational {
        let d = (self.p.get() - 1) as usize;
        // Column j holds the coefficients of self * zeta^j.
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
        let mut shifted = self.clone();
        for _ in 0..d {
            cols.push(shifted.coeffs().into_iter().map(Rat).collect());
            shifted = shifted.mul(&Self::zeta(self.p));
        }
        let mut m = ExactMatrix::fill(d, d, &Rat(BigRational::zero()));
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        linalg::det(&m).0
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, _) in self.nums.iter().enumerate() {
            let q = self.coeff(i);
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl Domain for CycloNum {
    fn zero_like(&self) -> Self {
        CycloNum::zero(self.p)
    }

    fn one_like(&self) -> Self {
        CycloNum::integer(1, self.p)
    }

    fn is_zero(&self) -> bool {
        self.nums.iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let nums = self
            .nums
            .iter()
            .zip(&other.nums)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        let mut z = CycloNum {
            nums,
            den: &self.den * &other.den,
            p: self.p,
        };
        z.normalize();
        z
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let d = self.nums.len();
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.nums.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.nums.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let nums = Self::reduce_powers(raw, self.p);
        let mut z = CycloNum {
            nums,
            den: &self.den * &other.den,
            p: self.p,
        };
        z.normalize();
        z
    }

    fn neg(&self) -> Self {
        CycloNum {
            nums: self.nums.iter().map(|c| -c).collect(),
            den: self.den.clone(),
            p: self.p,
        }
    }

    fn exact_div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Field for CycloNum {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(zeta_{})", self.p);
        // Extended Euclid against the cyclotomic polynomial Phi_p over Q.
        let d = (self.p.get() - 1) as usize;
        let phi = vec![BigRational::one(); d + 1];
        let a = self.coeffs();
        let (g, _, inv) = rat_poly_egcd(&phi, &a);
        // gcd must be a nonzero constant since Phi_p is irreducible.
        assert_eq!(g.len(), 1, "inverse failed: gcd not constant");
        let scale = g[0].recip();
        let coeffs: Vec<BigRational> = (0..d)
            .map(|i| inv.get(i).cloned().unwrap_or_else(BigRational::zero) * &scale)
            .collect();
        CycloNum::from_rationals(&coeffs, self.p)
    }
}

impl Scalar for CycloNum {
    fn characteristic(&self) -> u32 {
        0
    }

    fn from_int(&self, n: i64) -> Self {
        CycloNum::integer(n, self.p)
    }

    fn pth_root_of_unity(&self) -> Option<Self> {
        Some(CycloNum::zeta(self.p))
    }
}

/// Extended Euclid for dense rational polynomials: returns (gcd, s, t) with
/// s*a + t*b = gcd. Inputs are coefficient vectors in ascending degree.
fn rat_poly_egcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    fn trim(v: &mut Vec<BigRational>) {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    }
    fn divrem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem: Vec<BigRational> = num.to_vec();
        trim(&mut rem);
        let dd = den.len() - 1;
        let lead = den[dd].clone();
        let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let rd = rem.len() - 1;
            let c = rem[rd].clone() / lead.clone();
            quo[rd - dd] = c.clone();
            for k in 0..=dd {
                let t = den[k].clone() * c.clone();
                rem[rd - dd + k] -= t;
            }
            trim(&mut rem);
        }
        (quo, rem)
    }
    fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
    fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            *slot = x - y;
        }
        let mut out = out;
        trim(&mut out);
        out
    }

    let mut r0 = a.to_vec();
    trim(&mut r0);
    let mut r1 = b.to_vec();
    trim(&mut r1);
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    let mut t0: Vec<BigRational> = Vec::new();
    let mut t1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
        let next_t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, next_s);
        t0 = std::mem::replace(&mut t1, next_t);
    }
    (r0, s0, t0)
}

/// p-adic valuation of an exact rational: the multiplicity of p in the
/// numerator minus the multiplicity in the denominator.
pub fn padic_valuation_rational(q: &BigRational, p: u32) -> ExtRat {
    if q.is_zero() {
        return ExtRat::Infinity;
    }
    let pb = BigInt::from(p);
    let count = |mut n: BigInt| -> i64 {
        let mut v = 0i64;
        n = n.abs();
        while (&n % &pb).is_zero() {
            n /= &pb;
            v += 1;
        }
        v
    };
    ExtRat::finite(count(q.numer().clone()) - count(q.denom().clone()), 1)
}

/// The valuation on Q(zeta_p) extending the p-adic valuation of Q,
/// normalized so that v(p) = 1. Computed through the field norm:
/// v(z) = v_p(N(z)) / (p - 1). The value group is (1/(p-1))Z; zero maps to
/// +infinity.
pub fn cyclo_valuation(z: &CycloNum) -> ExtRat {
    if z.is_zero() {
        return ExtRat::Infinity;
    }
    let n = z.norm();
    match padic_valuation_rational(&n, z.prime().get()) {
        ExtRat::Finite(v) => {
            ExtRat::Finite(v / Rational64::from_integer((z.prime().get() - 1) as i64))
        }
        ExtRat::Infinity => unreachable!("norm of a nonzero element is nonzero"),
    }
}

/// Residue of an integral element of Q(zeta_p) in F_p: reduce each rational
/// coefficient mod p and evaluate at zeta -> 1. Errors when some coefficient
/// has negative p-adic value (equivalently, when v(z) < 0).
pub fn cyclo_residue(z: &CycloNum) -> Result<FpScalar, ResidueError> {
    use num::ToPrimitive;
    let p = z.prime();
    let pb = BigInt::from(p.get());
    let mut acc = FpScalar::new(0, p);
    for i in 0..(p.get() - 1) as usize {
        let q = z.coeff(i);
        if q.denom().mod_floor(&pb).is_zero() {
            return Err(ResidueError::NegativeValue);
        }
        let num = FpScalar::new(q.numer().mod_floor(&pb).to_i64().unwrap(), p);
        let den = FpScalar::new(q.denom().mod_floor(&pb).to_i64().unwrap(), p);
        acc = acc.add(&num.mul(&den.inv()));
    }
    Ok(acc)
}

/// True iff the rows are linearly independent over F_p. The empty family is
/// independent.
pub fn fp_linear_independence(rows: &[Vec<FpScalar>]) -> Result<bool, linalg::LinalgError> {
    if rows.is_empty() {
        return Ok(true);
    }
    let cols = rows[0].len();
    for r in rows {
        if r.len() != cols {
            return Err(linalg::LinalgError::DimensionMismatch {
                expected: cols,
                got: r.len(),
            });
        }
    }
    let m = ExactMatrix::from_rows(rows.to_vec())?;
    Ok(linalg::rank(&m) == rows.len())
}
