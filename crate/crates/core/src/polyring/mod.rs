//! Sparse multivariate polynomials over exact rationals under the
//! lexicographic order: canonical term lists, ring arithmetic, and the
//! multivariate division algorithm.
//!
//! Variables are held in a [`VarTable`]; position 0 is the most significant
//! under lex. The rings used throughout the workspace are of the shape
//! `C{t} > C{t-1} > ... > C1 > y`, where the internal identifier `Ck` denotes
//! the series coefficient written `C_{-k}` by the printers.

mod fmt;
mod json;
mod parse;

pub use fmt::latex_align;
pub use json::BasisDocument;
pub use parse::ParseError;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::exactnum::Rational;

/// Ordered table of variable identifiers; position 0 is most significant.
#[derive(Debug, Clone)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Shared handle to a variable table. Polynomials of the same ring share it.
pub type Ring = Arc<VarTable>;

impl VarTable {
    /// Panics when `names` is empty or contains duplicates.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "variable table must not be empty");
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let clash = index.insert(n.clone(), i);
            assert!(clash.is_none(), "duplicate variable `{n}`");
        }
        VarTable { names, index }
    }

    pub fn shared<S: Into<String>>(names: Vec<S>) -> Ring {
        Arc::new(VarTable::new(names))
    }

    /// Ring `C{depth} > ... > C1 > y` used for series of truncation depth
    /// `depth`.
    pub fn series_ring(depth: usize) -> Ring {
        Self::series_ring_with(depth, "y")
    }

    /// Same as [`VarTable::series_ring`] with a custom least-significant
    /// variable.
    pub fn series_ring_with(depth: usize, last: &str) -> Ring {
        let mut names: Vec<String> = (1..=depth).rev().map(|k| format!("C{k}")).collect();
        names.push(last.to_string());
        Arc::new(VarTable::new(names))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Position of the series coefficient variable `Ck`.
    pub fn c_index(&self, k: usize) -> Option<usize> {
        self.position(&format!("C{k}"))
    }

    pub fn y_index(&self) -> Option<usize> {
        self.position("y")
    }

    /// Printer name: `Ck` becomes `C_{-k}`, everything else is verbatim.
    pub fn display_name(&self, i: usize) -> String {
        let name = &self.names[i];
        match name.strip_prefix('C').and_then(|t| t.parse::<usize>().ok()) {
            Some(k) => format!("C_{{-{k}}}"),
            None => name.clone(),
        }
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarTable {}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Dense exponent vector, one entry per ring variable.
///
/// The derived ordering on the exponent vector is exactly the lexicographic
/// monomial order, since position 0 is the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial ring mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise quotient, `None` when not divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.nvars(), other.nvars(), "monomial ring mismatch");
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomial ring mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial ring mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// True when the monomials share no variable.
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomial ring mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Lexicographic comparison in variable significance order.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    assert_eq!(a.nvars(), b.nvars(), "monomial ring mismatch");
    a.cmp(b)
}

/// Nonzero coefficient attached to a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

/// Polynomial in canonical form: terms strictly decreasing under lex, no
/// zero coefficients; the empty term list is the zero polynomial.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { coeff: c, mono: Monomial::one(ring.len()) }],
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.len(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term { coeff: Rational::one(), mono: Monomial::var(ring.len(), i) }],
        }
    }

    /// Variable `Ck`; panics when the ring does not contain it.
    pub fn c_var(ring: &Ring, k: usize) -> Self {
        let i = ring.c_index(k).unwrap_or_else(|| panic!("ring has no variable C{k}"));
        Polynomial::var(ring, i)
    }

    /// Panics when the ring has no `y`.
    pub fn y_var(ring: &Ring) -> Self {
        let i = ring.y_index().expect("ring has no variable y");
        Polynomial::var(ring, i)
    }

    /// Builds the canonical form from arbitrary terms: sorts, merges equal
    /// monomials, drops zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for t in terms {
            assert_eq!(t.mono.nvars(), ring.len(), "term arity mismatch");
            match map.entry(t.mono) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(t.coeff);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &t.coeff;
                }
            }
        }
        Self::from_map(ring, map)
    }

    fn from_map(ring: &Ring, map: BTreeMap<Monomial, Rational>) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        Polynomial { ring: ring.clone(), terms }
    }

    /// Terms already strictly decreasing and nonzero; debug-checked.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].mono > w[1].mono));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Maximal term under lex; `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Coefficient of `mono`, zero when absent.
    pub fn coeff_of(&self, mono: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.mono == mono)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() })
                .collect(),
        }
    }

    /// Multiplication by a single term; preserves strict term order.
    pub fn mul_term(&self, t: &Term) -> Polynomial {
        assert!(!t.coeff.is_zero(), "multiplication by zero term");
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|s| Term { coeff: &s.coeff * &t.coeff, mono: s.mono.mul(&t.mono) })
                .collect(),
        }
    }

    /// Leading coefficient scaled to one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Reinterprets the polynomial in `target`, matching variables by name.
    /// `None` when a variable with a nonzero exponent is missing there.
    pub fn embed(&self, target: &Ring) -> Option<Polynomial> {
        let mut map = Vec::with_capacity(self.ring.len());
        for name in self.ring.names() {
            map.push(target.position(name));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                exps[map[i]?] += e;
            }
            terms.push(Term { coeff: t.coeff.clone(), mono: Monomial::from_exps(exps) });
        }
        Some(Polynomial::from_terms(target, terms))
    }

    fn merge(&self, other: &Polynomial, negate_rhs: bool) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "polynomial ring mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match a.mono.cmp(&b.mono) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate_rhs { -&b.coeff } else { b.coeff.clone() };
                    terms.push(Term { coeff, mono: b.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if negate_rhs { &a.coeff - &b.coeff } else { &a.coeff + &b.coeff };
                    if !coeff.is_zero() {
                        terms.push(Term { coeff, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            let coeff = if negate_rhs { -&b.coeff } else { b.coeff.clone() };
            terms.push(Term { coeff, mono: b.mono.clone() });
        }
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }
}

impl std::ops::Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "polynomial ring mismatch");
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let mono = a.mono.mul(&b.mono);
                let c = &a.coeff * &b.coeff;
                match map.entry(mono) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                }
            }
        }
        Polynomial::from_map(&self.ring, map)
    }
}

/// Monomial order tag carried by a basis. Only lex is provided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Lex,
}

/// Ordered generator list over one ring; the unit of Groebner computation.
///
/// Zero polynomials are dropped on construction.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    ring: Ring,
    label: String,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(ring: &Ring, label: impl Into<String>, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(same_ring(g.ring(), ring), "generator ring mismatch");
        }
        IdealBasis { ring: ring.clone(), label: label.into(), order: MonomialOrder::Lex, gens }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Basis made of the first `k` generators, same ring and order.
    pub fn prefix(&self, k: usize, label: impl Into<String>) -> IdealBasis {
        IdealBasis::new(&self.ring, label, self.gens[..k].to_vec())
    }

    /// Generator-for-generator equality over the same ring; labels ignored.
    pub fn eq_generators(&self, other: &IdealBasis) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }

    /// Remainder of `f` under division by this basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.gens).1
    }
}

/// Multivariate division of `f` by `divisors` in slice order.
///
/// Returns `(quotients, remainder)` with `f = Σ q_i g_i + remainder` and no
/// remainder term divisible by any divisor's leading monomial. The divisor
/// tried first is always the lowest index, so quotient sequences are
/// reproducible. An empty divisor list returns `([], f)`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let mut steps = 0u64;
    division(f, divisors, &mut steps, u64::MAX).expect("unlimited division cannot hit the cap")
}

/// Division with a shared step budget; `None` when the budget is exhausted.
pub(crate) fn division(
    f: &Polynomial,
    divisors: &[Polynomial],
    steps: &mut u64,
    limit: u64,
) -> Option<(Vec<Polynomial>, Polynomial)> {
    let ring = f.ring();
    for g in divisors {
        assert!(same_ring(g.ring(), ring), "divisor ring mismatch");
        assert!(!g.is_zero(), "zero divisor in basis");
    }
    let mut p = f.clone();
    let mut quotient_terms: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut remainder_terms: Vec<Term> = Vec::new();

    'outer: while let Some(lead) = p.leading_term().cloned() {
        *steps += 1;
        if *steps > limit {
            return None;
        }
        for (i, g) in divisors.iter().enumerate() {
            let glead = g.leading_term().expect("nonzero divisor");
            if let Some(mono) = lead.mono.try_div(&glead.mono) {
                let t = Term { coeff: &lead.coeff / &glead.coeff, mono };
                p = &p - &g.mul_term(&t);
                // The leading term cancels exactly, so division terminates.
                debug_assert!(p.leading_monomial().map_or(true, |m| *m < lead.mono));
                quotient_terms[i].push(t);
                continue 'outer;
            }
        }
        remainder_terms.push(lead);
        p.terms.remove(0);
    }

    let quotients = quotient_terms
        .into_iter()
        .map(|ts| Polynomial::from_terms(ring, ts))
        .collect();
    Some((quotients, Polynomial::from_sorted_terms(ring, remainder_terms)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank_ring(r: usize) -> Ring {
        VarTable::series_ring(2 * r + 1)
    }

    fn p(ring: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(ring, s).unwrap()
    }

    #[test]
    fn series_ring_layout() {
        let ring = rank_ring(1);
        assert_eq!(ring.names(), &["C3", "C2", "C1", "y"]);
        assert_eq!(ring.c_index(3), Some(0));
        assert_eq!(ring.c_index(1), Some(2));
        assert_eq!(ring.y_index(), Some(3));
        assert_eq!(ring.display_name(0), "C_{-3}");
        assert_eq!(ring.display_name(3), "y");
    }

    #[test]
    #[should_panic(expected = "duplicate variable")]
    fn duplicate_variables_rejected() {
        VarTable::new(vec!["x", "x"]);
    }

    #[test]
    fn lex_ignores_total_degree() {
        // C_{-3} beats any power of C_{-2}.
        let ring = rank_ring(1);
        let a = Monomial::var(4, 0);
        let mut b = Monomial::one(4);
        b.exps[1] = 5;
        assert_eq!(lex_compare(&a, &b), Ordering::Greater);
        assert_eq!(lex_compare(&a, &a), Ordering::Equal);
        let _ = ring;
    }

    #[test]
    fn lex_equal_up_to_trailing_zero_exponents() {
        let a = Monomial::from_exps(vec![0, 0, 3, 0]);
        let b = Monomial::from_exps(vec![0, 0, 3, 0]);
        assert_eq!(lex_compare(&a, &b), Ordering::Equal);
    }

    #[test]
    fn arithmetic_produces_canonical_forms() {
        let ring = rank_ring(1);
        // (C_{-1} + y) + (-C_{-1}) = y
        let sum = &p(&ring, "C1 + y") + &p(&ring, "-C1");
        assert_eq!(sum, p(&ring, "y"));
        // (C_{-1} + y)^2 = C_{-1}^2 + 2 C_{-1} y + y^2
        let square = p(&ring, "C1 + y").pow(2);
        assert_eq!(square, p(&ring, "C1^2 + 2 C1 y + y^2"));
        // 2 C_{-2} - 2 C_{-2} = 0 with an empty term list
        let zero = &p(&ring, "2 C2") - &p(&ring, "2 C2");
        assert!(zero.is_zero());
        assert!(zero.terms().is_empty());
    }

    #[test]
    fn multiplication_commutes_with_hand_example() {
        let ring = rank_ring(1);
        let a = p(&ring, "C2 + 2 y");
        let b = p(&ring, "C1^2 - y");
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &b, p(&ring, "C2 C1^2 - C2 y + 2 C1^2 y - 2 y^2"));
    }

    #[test]
    fn leading_terms_match_hand_examples() {
        let ring = rank_ring(2);
        // C_{-5} + λ_2 C_{-1}^3 leads with C_{-5}
        let f = p(&ring, "C5 - 1/2 C1^3");
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::var(ring.len(), ring.c_index(5).unwrap()));
        // μ_2 C_{-1}^3 + y leads with C_{-1}^3
        let g = p(&ring, "5/2 C1^3 + y");
        let mut expect = Monomial::one(ring.len());
        expect.exps[ring.c_index(1).unwrap()] = 3;
        assert_eq!(g.leading_monomial().unwrap(), &expect);
        assert_eq!(g.leading_coeff().unwrap(), &Rational::new(5, 2));
        // y is its own leading term
        let y = p(&ring, "y");
        assert_eq!(y.leading_term().unwrap().mono, Monomial::var(ring.len(), ring.y_index().unwrap()));
        // the zero polynomial has none
        assert!(Polynomial::zero(&ring).leading_term().is_none());
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn cross_ring_arithmetic_rejected() {
        let a = Polynomial::one(&rank_ring(1));
        let b = Polynomial::y_var(&rank_ring(2));
        let _ = &a + &b;
    }

    #[test]
    fn division_single_step() {
        // C_{-1}^{r+1} divided by { μ_r C_{-1}^{r+1} + y } leaves -y/μ_r; r = 2.
        let ring = rank_ring(2);
        let f = p(&ring, "C1^3");
        let g = p(&ring, "5/2 C1^3 + y");
        let (q, rem) = normal_form(&f, std::slice::from_ref(&g));
        assert_eq!(rem, p(&ring, "-2/5 y"));
        assert_eq!(q.len(), 1);
        assert_eq!(&(&q[0] * &g) + &rem, f);
    }

    #[test]
    fn division_matches_hand_reduction() {
        // (C^3)_{-1} = 3C_{-3} + 3C_{-1}^2 modulo {C_{-2}, C_{-3} + 1/2 C_{-1}^2}
        // leaves (3/2) C_{-1}^2.
        let ring = rank_ring(1);
        let f = p(&ring, "3 C3 + 3 C1^2");
        let basis = [p(&ring, "C2"), p(&ring, "C3 + 1/2 C1^2")];
        let (q, rem) = normal_form(&f, &basis);
        assert_eq!(rem, p(&ring, "3/2 C1^2"));
        let mut recombined = rem.clone();
        for (qi, gi) in q.iter().zip(&basis) {
            recombined = &recombined + &(qi * gi);
        }
        assert_eq!(recombined, f);
    }

    #[test]
    fn division_by_empty_basis_returns_input() {
        let ring = rank_ring(1);
        let f = p(&ring, "C3 + y");
        let (q, rem) = normal_form(&f, &[]);
        assert!(q.is_empty());
        assert_eq!(rem, f);
    }

    #[test]
    fn division_budget_detects_runaway() {
        let ring = rank_ring(1);
        let f = p(&ring, "C3^4 + C2 + y");
        let g = p(&ring, "C3");
        let mut steps = 0;
        assert!(division(&f, &[g], &mut steps, 1).is_none());
    }

    #[test]
    fn prefix_and_reduce() {
        let ring = rank_ring(1);
        let basis = IdealBasis::new(
            &ring,
            "demo",
            vec![p(&ring, "C2"), p(&ring, "C3 + 1/2 C1^2")],
        );
        let head = basis.prefix(1, "head");
        assert_eq!(head.len(), 1);
        assert_eq!(basis.reduce(&p(&ring, "2 C2 + y")), p(&ring, "y"));
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Polynomial>();
        assert_send_sync::<IdealBasis>();
        assert_send_sync::<crate::laurent::LaurentSeries>();
        assert_send_sync::<crate::exactnum::Rational>();
    }

    #[test]
    fn embed_matches_by_name() {
        let small = rank_ring(1);
        let big = rank_ring(3);
        let f = p(&small, "C3 + 1/2 C1^2 + y");
        let g = f.embed(&big).unwrap();
        assert_eq!(g, p(&big, "C3 + 1/2 C1^2 + y"));
        // C_{-7} does not exist in the small ring.
        assert!(p(&big, "C7").embed(&small).is_none());
        // ...but a polynomial that never uses it embeds fine.
        assert!(p(&big, "C2 + y").embed(&small).is_some());
    }
}
