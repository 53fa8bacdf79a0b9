//! Truncated Laurent series in `x^{-1}` with polynomial coefficients, and
//! generation of the polynomial systems whose ideals the rest of the crate
//! studies.
//!
//! The generic series is `C = x + C_{-1} x^{-1} + C_{-2} x^{-2} + ...`;
//! coefficients below a truncation floor are dropped. The builders extract
//! the coefficient equations of `C^n` (and of a weighted sum of powers of
//! `C`, including negative powers through the series inverse) into an
//! [`IdealBasis`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Rational;
use crate::polyring::{same_ring, IdealBasis, Polynomial, Ring, Term, VarTable};

/// Finite map from `x`-exponents to polynomial coefficients; exponents below
/// `floor` are truncated away, absent exponents are zero.
#[derive(Debug, Clone)]
pub struct LaurentSeries {
    ring: Ring,
    floor: i64,
    top: i64,
    coeffs: BTreeMap<i64, Polynomial>,
}

impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.floor == other.floor && self.coeffs == other.coeffs
    }
}

impl LaurentSeries {
    /// Series with the given coefficients; zero polynomials are dropped.
    ///
    /// Panics when an exponent lies below `floor`.
    pub fn from_coeffs(ring: &Ring, floor: i64, entries: Vec<(i64, Polynomial)>) -> Self {
        let mut coeffs = BTreeMap::new();
        let mut top = floor;
        for (e, p) in entries {
            assert!(e >= floor, "exponent {e} below floor {floor}");
            assert!(same_ring(p.ring(), ring), "coefficient ring mismatch");
            top = top.max(e);
            if !p.is_zero() {
                coeffs.insert(e, p);
            }
        }
        LaurentSeries { ring: ring.clone(), floor, top, coeffs }
    }

    pub fn zero_series(ring: &Ring, floor: i64) -> Self {
        LaurentSeries { ring: ring.clone(), floor, top: floor, coeffs: BTreeMap::new() }
    }

    /// The constant series `1`.
    pub fn one(ring: &Ring, floor: i64) -> Self {
        assert!(floor <= 0, "floor must not exceed 0");
        LaurentSeries::from_coeffs(ring, floor, vec![(0, Polynomial::one(ring))])
    }

    /// The generic series `x + C1 x^{-1} + ... + C{depth} x^{-depth}` with
    /// floor `-depth`.
    ///
    /// Panics when the ring lacks one of `C1..C{depth}`.
    pub fn generic_c(ring: &Ring, depth: usize) -> Self {
        assert!(depth >= 1, "depth must be positive");
        let mut entries = vec![(1, Polynomial::one(ring))];
        for k in 1..=depth {
            entries.push((-(k as i64), Polynomial::c_var(ring, k)));
        }
        LaurentSeries::from_coeffs(ring, -(depth as i64), entries)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// Coefficient of `x^e`; zero when absent.
    ///
    /// Panics when `e < floor`: those coefficients were truncated away and
    /// would be unreliable.
    pub fn coefficient(&self, e: i64) -> Polynomial {
        assert!(
            e >= self.floor,
            "coefficient at {e} is below the truncation floor {}",
            self.floor
        );
        self.coeffs.get(&e).cloned().unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        assert!(same_ring(&self.ring, &other.ring), "series ring mismatch");
        assert_eq!(self.floor, other.floor, "series floor mismatch");
        let mut coeffs = self.coeffs.clone();
        for (e, p) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(|| Polynomial::zero(&self.ring));
            *entry = &*entry + p;
        }
        coeffs.retain(|_, p| !p.is_zero());
        LaurentSeries {
            ring: self.ring.clone(),
            floor: self.floor,
            top: self.top.max(other.top),
            coeffs,
        }
    }

    pub fn scale(&self, c: &Rational) -> LaurentSeries {
        if c.is_zero() {
            return LaurentSeries::zero_series(&self.ring, self.floor);
        }
        LaurentSeries {
            ring: self.ring.clone(),
            floor: self.floor,
            top: self.top,
            coeffs: self.coeffs.iter().map(|(e, p)| (*e, p.scale(c))).collect(),
        }
    }

    /// Cauchy product truncated at the common floor.
    ///
    /// Panics on ring or floor mismatch.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        assert!(same_ring(&self.ring, &other.ring), "series ring mismatch");
        assert_eq!(self.floor, other.floor, "series floor mismatch");
        let mut coeffs: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (ea, pa) in &self.coeffs {
            for (eb, pb) in &other.coeffs {
                let e = ea + eb;
                if e < self.floor {
                    continue;
                }
                let prod = pa * pb;
                match coeffs.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() = o.get() + &prod;
                    }
                }
            }
        }
        coeffs.retain(|_, p| !p.is_zero());
        LaurentSeries {
            ring: self.ring.clone(),
            floor: self.floor,
            top: self.top + other.top,
            coeffs,
        }
    }

    /// Power by repeated multiplication; `pow(0)` is the series `1`.
    pub fn pow(&self, exp: u32) -> LaurentSeries {
        let mut acc = LaurentSeries::one(&self.ring, self.floor);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse solved degree by degree down to the floor, so
    /// that `self * inverse = 1` at every exponent strictly above it.
    ///
    /// Panics unless the coefficient at `top` is a nonzero constant.
    pub fn inverse(&self) -> LaurentSeries {
        let lead = self
            .coeffs
            .get(&self.top)
            .filter(|p| p.is_constant() && !p.is_zero())
            .unwrap_or_else(|| panic!("series leading coefficient is not a nonzero constant"));
        let lead = lead.leading_coeff().expect("nonzero constant").clone();
        let lead_inv = lead.recip();
        let t = self.top;

        let mut inv: BTreeMap<i64, Polynomial> = BTreeMap::new();
        inv.insert(-t, Polynomial::constant(&self.ring, lead_inv.clone()));
        // (self * inv)_s = 0 for s from -1 (just under the constant term)
        // down to floor + t determines inv at s - t.
        for e in (self.floor..=-t - 1).rev() {
            let s = e + t;
            let mut acc = Polynomial::zero(&self.ring);
            for (u, p) in self.coeffs.range(..t) {
                let v = s - u;
                if v > -t {
                    continue;
                }
                if let Some(q) = inv.get(&v) {
                    acc = &acc + &(p * q);
                }
            }
            let coeff = acc.scale(&-&lead_inv);
            if !coeff.is_zero() {
                inv.insert(e, coeff);
            }
        }
        LaurentSeries { ring: self.ring.clone(), floor: self.floor, top: -t, coeffs: inv }
    }
}

/// Parameters of the general coefficient system: `C^n` must be polynomial,
/// and the weighted power sum `Σ q_i C^{m-i}` plus the distinguished
/// variable must be polynomial as well.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SystemSpecDto", into = "SystemSpecDto")]
pub struct SystemSpec {
    n: usize,
    m: usize,
    q_weights: Vec<Rational>,
    f_symbol: String,
}

#[derive(Serialize, Deserialize, Clone)]
struct SystemSpecDto {
    n: usize,
    m: usize,
    q_weights: Vec<Rational>,
    #[serde(default = "default_f_symbol")]
    f_symbol: String,
}

fn default_f_symbol() -> String {
    "y".to_string()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("n and m must both be at least 2 (got n={n}, m={m})")]
    TooSmall { n: usize, m: usize },
    #[error("divisibility violation: need n ∤ m and m ∤ n (got n={n}, m={m})")]
    Divisibility { n: usize, m: usize },
    #[error("expected {expected} weights (indices 0..=m+n-2), got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("the first weight must be 1, got {0}")]
    FirstWeight(String),
}

impl TryFrom<SystemSpecDto> for SystemSpec {
    type Error = SystemError;
    fn try_from(dto: SystemSpecDto) -> Result<Self, SystemError> {
        SystemSpec::with_symbol(dto.n, dto.m, dto.q_weights, dto.f_symbol)
    }
}

impl From<SystemSpec> for SystemSpecDto {
    fn from(s: SystemSpec) -> SystemSpecDto {
        SystemSpecDto { n: s.n, m: s.m, q_weights: s.q_weights, f_symbol: s.f_symbol }
    }
}

impl SystemSpec {
    pub fn new(n: usize, m: usize, q_weights: Vec<Rational>) -> Result<Self, SystemError> {
        Self::with_symbol(n, m, q_weights, default_f_symbol())
    }

    pub fn with_symbol(
        n: usize,
        m: usize,
        q_weights: Vec<Rational>,
        f_symbol: String,
    ) -> Result<Self, SystemError> {
        if n < 2 || m < 2 {
            return Err(SystemError::TooSmall { n, m });
        }
        if m % n == 0 || n % m == 0 {
            return Err(SystemError::Divisibility { n, m });
        }
        let expected = m + n - 1;
        if q_weights.len() != expected {
            return Err(SystemError::WeightCount { expected, got: q_weights.len() });
        }
        if !q_weights[0].is_one() {
            return Err(SystemError::FirstWeight(q_weights[0].to_string()));
        }
        Ok(SystemSpec { n, m, q_weights, f_symbol })
    }

    /// The profile `n = 2`, `m = 2r+1`, unit weight only.
    pub fn special(r: usize) -> Self {
        assert!(r >= 1, "special profile requires r >= 1");
        let m = 2 * r + 1;
        let mut q_weights = vec![Rational::zero(); m + 1];
        q_weights[0] = Rational::one();
        SystemSpec::new(2, m, q_weights).expect("special profile is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q_weights(&self) -> &[Rational] {
        &self.q_weights
    }

    pub fn f_symbol(&self) -> &str {
        &self.f_symbol
    }

    /// Number of unknowns and of equations, `m + n - 2`.
    pub fn unknown_count(&self) -> usize {
        self.m + self.n - 2
    }
}

/// The system for the profile `n = 2`, `m = 2r+1`: the first `2r` equations
/// are the coefficients of `x^{-i}` in `C^2`, the last is the coefficient of
/// `x^{-1}` in `C^{2r+1}` plus `y`. Truncation depth `2r+1`.
pub fn build_special_system(r: usize) -> IdealBasis {
    assert!(r >= 1, "special system requires r >= 1");
    let depth = 2 * r + 1;
    let ring = VarTable::series_ring(depth);
    let c = LaurentSeries::generic_c(&ring, depth);
    let c2 = c.mul(&c);
    let mut gens = Vec::with_capacity(depth);
    for i in 1..=2 * r {
        gens.push(c2.coefficient(-(i as i64)));
    }
    let c_top = c2.pow(r as u32).mul(&c);
    gens.push(&c_top.coefficient(-1) + &Polynomial::y_var(&ring));
    IdealBasis::new(&ring, format!("S(n=2, m={})", 2 * r + 1), gens)
}

/// Direct closed formula for the `i`-th special-system equation:
/// `2 C_{-(i+1)} + Σ_{k=1}^{i-1} C_{-k} C_{-(i-k)}`.
///
/// Panics when the ring lacks `C1..C{i+1}`.
pub fn special_equation(i: usize, ring: &Ring) -> Polynomial {
    assert!(i >= 1, "equation index starts at 1");
    let nvars = ring.len();
    let var_mono = |k: usize| {
        let idx = ring
            .c_index(k)
            .unwrap_or_else(|| panic!("ring too small: missing C{k} for equation {i}"));
        crate::polyring::Monomial::var(nvars, idx)
    };
    let mut terms = vec![Term { coeff: Rational::from_int(2), mono: var_mono(i + 1) }];
    for k in 1..i {
        terms.push(Term {
            coeff: Rational::one(),
            mono: var_mono(k).mul(&var_mono(i - k)),
        });
    }
    Polynomial::from_terms(ring, terms)
}

/// General system at the default truncation depth `m + n - 2`.
pub fn build_general_system(spec: &SystemSpec) -> IdealBasis {
    build_general_system_with_depth(spec, spec.unknown_count())
}

/// General system with an explicit truncation depth (at least `m + n - 2`);
/// deeper floors must reproduce the same equations, which is what the
/// floor-stability checks assert.
pub fn build_general_system_with_depth(spec: &SystemSpec, depth: usize) -> IdealBasis {
    assert!(depth >= spec.unknown_count(), "depth below m+n-2");
    let n = spec.n();
    let m = spec.m();
    let ring = VarTable::series_ring_with(depth, spec.f_symbol());
    let floor = -(depth as i64);
    let c = LaurentSeries::generic_c(&ring, depth);

    // Powers of C are built incrementally; the weighted sum needs every
    // exponent from m down to 2-n (the negative ones via the inverse), and
    // the first block needs C^n even when n > m.
    let mut positive = Vec::with_capacity(n.max(m) + 1);
    positive.push(LaurentSeries::one(&ring, floor));
    for _ in 1..=n.max(m) {
        positive.push(positive.last().expect("nonempty").mul(&c));
    }
    let mut negative = Vec::with_capacity(n.saturating_sub(2));
    if spec
        .q_weights()
        .iter()
        .enumerate()
        .any(|(i, w)| !w.is_zero() && i > m)
    {
        let inverse = c.inverse();
        negative.push(inverse.clone());
        for _ in 2..=n - 2 {
            negative.push(negative.last().expect("nonempty").mul(&inverse));
        }
    }

    let mut gens = Vec::with_capacity(spec.unknown_count());
    for k in 1..=m - 1 {
        gens.push(positive[n].coefficient(-(k as i64)));
    }

    let mut q_sum = LaurentSeries::zero_series(&ring, floor);
    for (i, w) in spec.q_weights().iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let power = if i <= m { &positive[m - i] } else { &negative[i - m - 1] };
        q_sum = q_sum.add(&power.scale(w));
    }

    for k in 1..=n - 2 {
        gens.push(q_sum.coefficient(-(k as i64)));
    }
    let f_var = Polynomial::var(
        &ring,
        ring.position(spec.f_symbol()).expect("ring contains the distinguished variable"),
    );
    gens.push(&q_sum.coefficient(1 - n as i64) + &f_var);

    IdealBasis::new(&ring, format!("S(n={n}, m={m})"), gens)
}
