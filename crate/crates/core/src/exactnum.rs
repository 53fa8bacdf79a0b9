//! Exact rational arithmetic and the combinatorial sequences that drive the
//! closed-form basis: binomial coefficients, Catalan numbers `c_j`, the basis
//! coefficients `λ_j` and the leading coefficients `μ_r`.
//!
//! Closed forms are the production path; the defining recursions are kept as
//! independent oracles in the test suites.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced, denominator positive,
/// zero stored as 0/1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer/denom` in lowest terms.
    ///
    /// Panics when `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        Rational(BigRational::new(numer, denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl fmt::Display for Rational {
    /// `p/q`, with `/q` omitted when the denominator is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(numer.trim()).map_err(|_| bad())?;
        let denom = BigInt::from_str(denom.trim()).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Rational {
    /// Sign as an ordering against zero; used by the printers.
    pub fn sign(&self) -> Ordering {
        match self.0.numer().sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Generalized binomial coefficient `C(alpha, j)` for rational `alpha`:
/// `alpha (alpha-1) ... (alpha-j+1) / j!`.
pub fn general_binomial(alpha: &Rational, j: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc = acc * (alpha - &Rational::from_int(i as i64));
        acc = acc / Rational::from_int((i + 1) as i64);
    }
    acc
}

/// Catalan number `c_j = C(2j, j) / (j + 1)`, exact.
pub fn catalan(j: u64) -> BigInt {
    binomial(2 * j, j as i64) / BigInt::from(j + 1)
}

/// Coefficient `λ_j` of the transformed even generators.
///
/// Defined by `λ_0 = -1` and `λ_j = (1/2) Σ_{k<j} λ_k λ_{j-1-k}`; computed
/// here through the closed form `(-1)^{j+1} C(2j, j) / ((j+1) 2^j)`.
pub fn lambda(j: u64) -> Rational {
    let numer = binomial(2 * j, j as i64);
    let numer = if j % 2 == 0 { -numer } else { numer };
    let denom = BigInt::from(j + 1) * (BigInt::one() << j);
    Rational::from_bigints(numer, denom)
}

/// Leading coefficient `μ_r = (2r+1) C(2r, r) / ((r+1) 2^r)` of the last
/// closed-form generator; nonzero for every `r >= 1`.
///
/// Panics when `r = 0`: the system has no generators there.
pub fn mu(r: u64) -> Rational {
    assert!(r >= 1, "mu(r) requires r >= 1");
    let numer = BigInt::from(2 * r + 1) * binomial(2 * r, r as i64);
    let denom = BigInt::from(r + 1) * (BigInt::one() << r);
    Rational::from_bigints(numer, denom)
}

/// Checks the alternating binomial identity
/// `(2r+1) c_r / 4^r = Σ_{j=0}^{r} (-1)^j C(r, j) c_j / 4^j` exactly.
pub fn catalan_identity(r: u64) -> bool {
    let four = Rational::from_int(4);
    let lhs = Rational::from_bigint(catalan(r) * BigInt::from(2 * r + 1)) / four.pow(r as u32);
    let mut rhs = Rational::zero();
    for j in 0..=r {
        let mut term = Rational::from_bigint(binomial(r, j as i64) * catalan(j)) / four.pow(j as u32);
        if j % 2 == 1 {
            term = -term;
        }
        rhs += &term;
    }
    lhs == rhs
}

/// Growable table of Catalan numbers.
#[derive(Debug, Clone, Default)]
pub struct CatalanSeq {
    values: Vec<BigInt>,
}

impl CatalanSeq {
    pub fn new() -> Self {
        CatalanSeq { values: vec![BigInt::one()] }
    }

    pub fn get(&mut self, j: usize) -> &BigInt {
        while self.values.len() <= j {
            self.values.push(catalan(self.values.len() as u64));
        }
        &self.values[j]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Growable table of the `λ_j` coefficients.
#[derive(Debug, Clone, Default)]
pub struct LambdaSeq {
    values: Vec<Rational>,
}

impl LambdaSeq {
    pub fn new() -> Self {
        LambdaSeq { values: vec![Rational::from_int(-1)] }
    }

    pub fn get(&mut self, j: usize) -> &Rational {
        while self.values.len() <= j {
            self.values.push(lambda(self.values.len() as u64));
        }
        &self.values[j]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Pascal-triangle oracle: row n of binomials by repeated addition.
    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one()];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            row = next;
        }
        row
    }

    /// Convolution oracle: c_r = Σ c_j c_{r-1-j}, c_0 = 1.
    fn catalan_recursion(n: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for r in 1..=n {
            let mut acc = BigInt::zero();
            for j in 0..r {
                acc += &c[j] * &c[r - 1 - j];
            }
            c.push(acc);
        }
        c
    }

    /// Recursion oracle: λ_0 = -1, λ_j = (1/2) Σ_{k<j} λ_k λ_{j-1-k}.
    fn lambda_recursion(n: usize) -> Vec<Rational> {
        let mut l = vec![Rational::from_int(-1)];
        for j in 1..=n {
            let mut acc = Rational::zero();
            for k in 0..j {
                acc += &(&l[k] * &l[j - 1 - k]);
            }
            l.push(acc * Rational::new(1, 2));
        }
        l
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for n in 0..=12u64 {
            let row = pascal_row(n as usize);
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), row[k as usize], "C({n},{k})");
            }
        }
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
    }

    #[test]
    fn general_binomial_small_values() {
        let minus_half = Rational::new(-1, 2);
        assert_eq!(general_binomial(&minus_half, 0), Rational::one());
        assert_eq!(general_binomial(&minus_half, 2), Rational::new(3, 8));
    }

    #[test]
    fn general_binomial_half_integer_identities() {
        // C(-1/2, j) = (-1)^j C(2j, j) / 4^j
        let minus_half = Rational::new(-1, 2);
        for j in 0..=20u64 {
            let mut expect = Rational::from_bigint(binomial(2 * j, j as i64))
                / Rational::from_int(4).pow(j as u32);
            if j % 2 == 1 {
                expect = -expect;
            }
            assert_eq!(general_binomial(&minus_half, j), expect, "j={j}");
        }
        // C(r + 1/2, r) = (2r+1) C(2r, r) / 4^r
        for r in 0..=20u64 {
            let alpha = Rational::new(2 * r as i64 + 1, 2);
            let expect = Rational::from_bigint(BigInt::from(2 * r + 1) * binomial(2 * r, r as i64))
                / Rational::from_int(4).pow(r as u32);
            assert_eq!(general_binomial(&alpha, r), expect, "r={r}");
        }
    }

    #[test]
    fn catalan_matches_recursion() {
        let oracle = catalan_recursion(32);
        for j in 0..=32usize {
            assert_eq!(catalan(j as u64), oracle[j], "c_{j}");
        }
        assert_eq!(catalan(0), BigInt::one());
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(4), BigInt::from(14));
    }

    #[test]
    fn lambda_matches_recursion() {
        let oracle = lambda_recursion(32);
        for j in 0..=32usize {
            assert_eq!(lambda(j as u64), oracle[j], "lambda_{j}");
        }
        assert_eq!(lambda(0), Rational::from_int(-1));
        assert_eq!(lambda(1), Rational::new(1, 2));
        assert_eq!(lambda(3), Rational::new(5, 8));
    }

    #[test]
    fn catalan_lambda_link() {
        // c_j = (-1)^{j+1} 2^j λ_j
        for j in 0..=32u64 {
            let two_pow = Rational::from_bigint(BigInt::one() << j);
            let mut rhs = two_pow * lambda(j);
            if j % 2 == 0 {
                rhs = -rhs;
            }
            assert_eq!(Rational::from_bigint(catalan(j)), rhs, "j={j}");
        }
    }

    #[test]
    fn mu_small_values() {
        assert_eq!(mu(1), Rational::new(3, 2));
        assert_eq!(mu(2), Rational::new(5, 2));
        assert_eq!(mu(3), Rational::new(35, 8));
    }

    #[test]
    fn mu_equals_weighted_lambda_sum() {
        // μ_r = Σ_j C(r, j) 2^{r-j} (-λ_j) = (2r+1) (-1)^{r+1} λ_r
        for r in 1..=32u64 {
            let mut sum = Rational::zero();
            for j in 0..=r {
                let w = Rational::from_bigint(binomial(r, j as i64) * (BigInt::one() << (r - j)));
                sum += &(w * -lambda(j));
            }
            assert_eq!(mu(r), sum, "sum form, r={r}");
            let mut alt = Rational::from_int(2 * r as i64 + 1) * lambda(r);
            if r % 2 == 0 {
                alt = -alt;
            }
            assert_eq!(mu(r), alt, "alternating form, r={r}");
        }
    }

    #[test]
    #[should_panic(expected = "r >= 1")]
    fn mu_rejects_zero() {
        mu(0);
    }

    #[test]
    fn catalan_identity_small() {
        // r=0: 1 = 1; r=1: 3/4 = 1 - 1/4.
        assert!(catalan_identity(0));
        assert!(catalan_identity(1));
        for r in 0..=32u64 {
            assert!(catalan_identity(r), "r={r}");
        }
    }

    #[test]
    fn sequences_memoize() {
        let mut c = CatalanSeq::new();
        let mut l = LambdaSeq::new();
        assert_eq!(*c.get(0), BigInt::one());
        assert_eq!(*l.get(0), Rational::from_int(-1));
        assert_eq!(*c.get(5), BigInt::from(42));
        assert_eq!(*l.get(5), Rational::new(21, 16));
        assert_eq!(c.values().len(), 6);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::new(3, 2).to_string(), "3/2");
        assert_eq!(Rational::new(-4, 2).to_string(), "-2");
        assert_eq!(Rational::zero().to_string(), "0");
        assert_eq!("5/8".parse::<Rational>().unwrap(), Rational::new(5, 8));
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::from_int(-7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let q = Rational::new(-5, 8);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "\"-5/8\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..1_000_000, 1i64..10_000).prop_map(|(n, d)| Rational::new(n, d))
    }

    proptest! {
        #[test]
        fn addition_is_exact(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn multiplication_is_exact(a in arb_rational(), b in arb_rational()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn parse_roundtrip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
