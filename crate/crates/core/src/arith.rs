//! Number-theoretic primitives over arbitrary-precision rationals.
//!
//! Every integrality criterion in this crate bottoms out in the functions
//! here: p-adic valuations, base-p digit sums, Legendre's formula for
//! `nu_p(n!)`, radicals, generalized binomial coefficients and the
//! prime-power decomposition of rational exponents.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rad(0) is undefined")]
    ZeroRadicand,
    #[error("prime power exponent overflows u64 ({p}^{r})")]
    PrimePowerOverflow { p: u64, r: u32 },
}

/// A p-adic valuation: the exponent of `p` in a rational number, with a
/// distinct value for `nu_p(0) = +infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    /// True when the valuation is at least `k`, treating infinity as
    /// larger than every integer.
    pub fn at_least(self, k: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinity => true,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "+inf"),
        }
    }
}

/// Deterministic Miller–Rabin primality test, valid for all `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be deterministic for every integer below 3.3e24.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let r = d.trailing_zeros();
    d >>= r;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exponent of `p` in a nonzero big integer.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0u64;
    let mut cur = n.abs();
    loop {
        let (q, r) = cur.div_rem(&pb);
        if r.is_zero() {
            v += 1;
            cur = q;
        } else {
            return v;
        }
    }
}

/// Valuation of a rational without re-validating primality of `p`.
pub(crate) fn rational_valuation(q: &BigRational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinity;
    }
    let num = int_valuation(q.numer(), p) as i64;
    let den = int_valuation(q.denom(), p) as i64;
    Valuation::Finite(num - den)
}

/// The p-adic valuation of a rational: the largest `r` with `q / p^r`
/// p-integral, or [`Valuation::Infinity`] for `q = 0`.
///
/// Satisfies `nu_p(ab) = nu_p(a) + nu_p(b)` and
/// `nu_p(a + b) >= min(nu_p(a), nu_p(b))`.
pub fn nu_p(q: &BigRational, p: u64) -> Result<Valuation, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    Ok(rational_valuation(q, p))
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(mut n: u64, p: u64) -> u64 {
    assert!(p >= 2, "digit_sum needs a base >= 2");
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// `nu_p(n!)` by Legendre's formula `(n - s_p(n)) / (p - 1)`.
pub fn legendre_factorial_val(n: u64, p: u64) -> u64 {
    assert!(is_prime(p), "legendre_factorial_val needs a prime");
    (n - digit_sum(n, p)) / (p - 1)
}

/// Largest squarefree divisor of `k` (the product of the distinct primes
/// dividing `|k|`); `rad(±1) = 1`.
pub fn rad(k: i64) -> Result<u64, ArithError> {
    if k == 0 {
        return Err(ArithError::ZeroRadicand);
    }
    Ok(rad_u64(k.unsigned_abs()))
}

pub(crate) fn rad_u64(mut k: u64) -> u64 {
    let mut out = 1u64;
    let mut d = 2u64;
    while d * d <= k {
        if k % d == 0 {
            out *= d;
            while k % d == 0 {
                k /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if k > 1 {
        out *= k;
    }
    out
}

/// Generalized binomial coefficient `lambda (lambda-1) ... (lambda-n+1) / n!`
/// as an exact rational.
pub fn binom_rational(lambda: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..n {
        let factor = lambda - BigRational::from(BigInt::from(j));
        acc = acc * factor / BigRational::from(BigInt::from(n - j));
    }
    acc
}

/// A prime power `p^r` with `r >= 0`, the modulus context for the
/// congruence criteria (which compare series mod `p^{r+1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    r: u32,
}

impl PrimePower {
    pub fn new(p: u64, r: u32) -> Result<Self, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PrimePower { p, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `p^r` when it fits in a `u64`. `None` only for exponents far beyond
    /// any usable truncation order; callers treat that as "larger than any
    /// degree in play".
    pub fn value(&self) -> Option<u64> {
        self.p.checked_pow(self.r)
    }

    /// The modulus `p^{r+1}` of the associated congruence.
    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.r + 1)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.r)
    }
}

/// A rational exponent in lowest terms together with the prime-power
/// factorization of its denominator.
///
/// `lambda = numerator / (p_1^{r_1} ... p_m^{r_m})` with the `p_j` distinct
/// primes not dividing the numerator. Integrality of `f^lambda` reduces to
/// one p-integrality question per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSpec {
    lambda: BigRational,
    numerator: BigInt,
    factors: Vec<PrimePower>,
}

impl ExponentSpec {
    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    /// Prime-power factors of the denominator, ascending by prime.
    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn is_integer(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Factor the denominator of `lambda` into prime powers by trial division.
///
/// Intended for the small denominators that arise as exponents; an integer
/// exponent yields an empty factor list.
pub fn factor_exponent(lambda: &BigRational) -> ExponentSpec {
    let mut den = lambda.denom().clone();
    debug_assert!(den.is_positive());
    let mut factors = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= den {
        let pb = BigInt::from(d);
        let mut r = 0u32;
        loop {
            let (q, rem) = den.div_rem(&pb);
            if rem.is_zero() {
                r += 1;
                den = q;
            } else {
                break;
            }
        }
        if r > 0 {
            factors.push(PrimePower { p: d, r });
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if den > BigInt::one() {
        let p = den
            .to_u64()
            .expect("exponent denominator has a prime factor beyond u64");
        factors.push(PrimePower { p, r: 1 });
    }
    ExponentSpec {
        lambda: lambda.clone(),
        numerator: lambda.numer().clone(),
        factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn nu_p_zero_is_infinite() {
        assert_eq!(nu_p(&int(0), 5).unwrap(), Valuation::Infinity);
    }

    #[test]
    fn nu_p_of_twelve_at_two() {
        assert_eq!(nu_p(&int(12), 2).unwrap(), Valuation::Finite(2));
    }

    #[test]
    fn nu_p_negative_for_denominator() {
        // 284/3 is the non-integral coefficient the criteria catch at p = 3.
        assert_eq!(nu_p(&rat(284, 3), 3).unwrap(), Valuation::Finite(-1));
    }

    #[test]
    fn nu_p_rejects_composite_modulus() {
        assert_eq!(nu_p(&int(10), 6), Err(ArithError::NotPrime(6)));
    }

    #[test]
    fn valuation_ordering_and_addition() {
        assert!(Valuation::Infinity > Valuation::Finite(i64::MAX));
        assert!(Valuation::Finite(-1) < Valuation::Finite(0));
        assert_eq!(
            Valuation::Finite(2) + Valuation::Finite(-3),
            Valuation::Finite(-1)
        );
        assert_eq!(
            Valuation::Finite(7) + Valuation::Infinity,
            Valuation::Infinity
        );
    }

    #[test]
    fn digit_sums() {
        assert_eq!(digit_sum(0, 3), 0);
        assert_eq!(digit_sum(10, 2), 2); // 1010 in base 2
        assert_eq!(digit_sum(26, 3), 6); // 222 in base 3
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_factorial_val(0, 7), 0);
        assert_eq!(legendre_factorial_val(10, 2), 8);
        assert_eq!(legendre_factorial_val(26, 3), 10);
    }

    #[test]
    fn rad_examples() {
        assert_eq!(rad(4).unwrap(), 2);
        assert_eq!(rad(24).unwrap(), 6);
        assert_eq!(rad(1).unwrap(), 1);
        assert_eq!(rad(-18).unwrap(), 6);
        assert_eq!(rad(0), Err(ArithError::ZeroRadicand));
    }

    #[test]
    fn binom_half_squared() {
        assert_eq!(binom_rational(&rat(1, 2), 2), rat(-1, 8));
    }

    #[test]
    fn binom_integer_case() {
        assert_eq!(binom_rational(&int(5), 2), int(10));
        assert_eq!(binom_rational(&int(5), 7), int(0));
    }

    #[test]
    fn binom_negative_quarter() {
        assert_eq!(binom_rational(&rat(-1, 4), 3), rat(-15, 128));
    }

    #[test]
    fn binom_at_zero_is_one() {
        assert_eq!(binom_rational(&rat(-7, 3), 0), int(1));
    }

    #[test]
    fn factor_minus_one_sixth() {
        let spec = factor_exponent(&rat(-1, 6));
        assert_eq!(spec.numerator(), &BigInt::from(-1));
        assert_eq!(
            spec.factors(),
            &[PrimePower::new(2, 1).unwrap(), PrimePower::new(3, 1).unwrap()]
        );
    }

    #[test]
    fn factor_integer_exponent() {
        let spec = factor_exponent(&int(3));
        assert!(spec.is_integer());
        assert_eq!(spec.numerator(), &BigInt::from(3));
    }

    #[test]
    fn factor_five_eighths() {
        let spec = factor_exponent(&rat(5, 8));
        assert_eq!(spec.factors(), &[PrimePower::new(2, 3).unwrap()]);
    }

    #[test]
    fn prime_power_validation() {
        assert!(PrimePower::new(9, 1).is_err());
        let pp = PrimePower::new(3, 2).unwrap();
        assert_eq!(pp.value(), Some(9));
        assert_eq!(pp.modulus(), BigInt::from(27));
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(1));
        assert!(!is_prime(561)); // Carmichael number
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }
}
