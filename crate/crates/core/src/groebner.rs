//! S-polynomials, Buchberger's algorithm, interreduction to the unique
//! reduced basis, Groebner verification, and ideal equality — all over the
//! lex order fixed by the basis ring.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{division, normal_form, same_ring, IdealBasis, Monomial, Polynomial, Term};

/// Knobs of [`buchberger`]. The defaults give textbook-reproducible runs:
/// pairs with coprime leading monomials are discarded, and the surviving
/// pair with the smallest lcm is treated first.
#[derive(Debug, Clone)]
pub struct BuchbergerOptions {
    /// Skip pairs whose leading monomials share no variable.
    pub use_coprime_criterion: bool,
    pub pair_strategy: PairStrategy,
    /// Abort after this many division steps; guards runaway inputs.
    pub max_reduction_steps: u64,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            use_coprime_criterion: true,
            pair_strategy: PairStrategy::Normal,
            max_reduction_steps: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairStrategy {
    /// Minimal lcm total degree first, ties by lex on the lcm.
    Normal,
    /// First-in first-out.
    Fifo,
}

/// Counters of one Buchberger run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuchbergerLog {
    pub pairs_considered: u64,
    pub pairs_skipped_coprime: u64,
    pub reductions: u64,
    pub generators_added: u64,
    pub reduction_steps: u64,
}

/// A Groebner basis together with the run that produced it.
#[derive(Debug, Clone)]
pub struct BuchbergerRun {
    pub basis: IdealBasis,
    pub log: BuchbergerLog,
}

/// Offending S-pair of a failed Groebner check.
#[derive(Debug, Clone)]
pub struct GroebnerWitness {
    pub pair: (usize, usize),
    pub remainder: Polynomial,
}

impl std::fmt::Display for GroebnerWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "S(g_{}, g_{}) leaves the nonzero remainder {}",
            self.pair.0 + 1,
            self.pair.1 + 1,
            self.remainder
        )
    }
}

#[derive(Debug, Error)]
pub enum GroebnerError {
    #[error("reduction step limit of {limit} exceeded")]
    StepLimitExceeded { limit: u64 },
    #[error("input is not a Groebner basis: {witness}")]
    NotGroebner { witness: GroebnerWitness },
}

/// `S(f, g) = (lcm/lt f) f - (lcm/lt g) g`, the cancellation combination of
/// the two leading terms.
///
/// Panics on zero input or ring mismatch.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert!(same_ring(f.ring(), g.ring()), "polynomial ring mismatch");
    let flt = f.leading_term().expect("s_polynomial of zero polynomial");
    let glt = g.leading_term().expect("s_polynomial of zero polynomial");
    let lcm = flt.mono.lcm(&glt.mono);
    let tf = Term {
        coeff: flt.coeff.recip(),
        mono: lcm.try_div(&flt.mono).expect("lcm divisible by lt(f)"),
    };
    let tg = Term {
        coeff: glt.coeff.recip(),
        mono: lcm.try_div(&glt.mono).expect("lcm divisible by lt(g)"),
    };
    &f.mul_term(&tf) - &g.mul_term(&tg)
}

enum PairQueue {
    Normal(BTreeSet<(u32, Monomial, usize, usize)>),
    Fifo(VecDeque<(usize, usize)>),
}

impl PairQueue {
    fn new(strategy: PairStrategy) -> Self {
        match strategy {
            PairStrategy::Normal => PairQueue::Normal(BTreeSet::new()),
            PairStrategy::Fifo => PairQueue::Fifo(VecDeque::new()),
        }
    }

    fn push(&mut self, gens: &[Polynomial], i: usize, j: usize) {
        match self {
            PairQueue::Normal(set) => {
                let lcm = gens[i]
                    .leading_monomial()
                    .expect("nonzero generator")
                    .lcm(gens[j].leading_monomial().expect("nonzero generator"));
                set.insert((lcm.total_degree(), lcm, i, j));
            }
            PairQueue::Fifo(q) => q.push_back((i, j)),
        }
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        match self {
            PairQueue::Normal(set) => set.pop_first().map(|(_, _, i, j)| (i, j)),
            PairQueue::Fifo(q) => q.pop_front(),
        }
    }
}

/// Buchberger completion: extends the basis with reduced S-polynomial
/// remainders until every pair reduces to zero. The output generates the
/// same ideal as the input.
///
/// Panics on an empty basis; errors when the step limit is exceeded.
pub fn buchberger(basis: &IdealBasis, opts: &BuchbergerOptions) -> Result<BuchbergerRun, GroebnerError> {
    assert!(!basis.is_empty(), "buchberger requires a nonempty basis");
    let ring = basis.ring().clone();
    let mut gens = basis.gens().to_vec();
    let mut log = BuchbergerLog::default();
    let mut queue = PairQueue::new(opts.pair_strategy);
    for j in 1..gens.len() {
        for i in 0..j {
            queue.push(&gens, i, j);
        }
    }

    let mut steps = 0u64;
    while let Some((i, j)) = queue.pop() {
        log.pairs_considered += 1;
        if opts.use_coprime_criterion {
            let a = gens[i].leading_monomial().expect("nonzero generator");
            let b = gens[j].leading_monomial().expect("nonzero generator");
            if a.is_coprime_with(b) {
                log.pairs_skipped_coprime += 1;
                continue;
            }
        }
        let s = s_polynomial(&gens[i], &gens[j]);
        let (_, remainder) = division(&s, &gens, &mut steps, opts.max_reduction_steps)
            .ok_or(GroebnerError::StepLimitExceeded { limit: opts.max_reduction_steps })?;
        log.reductions += 1;
        if !remainder.is_zero() {
            let new_index = gens.len();
            gens.push(remainder.monic());
            log.generators_added += 1;
            for k in 0..new_index {
                queue.push(&gens, k, new_index);
            }
        }
    }
    log.reduction_steps = steps;

    let label = format!("gb({})", basis.label());
    Ok(BuchbergerRun { basis: IdealBasis::new(&ring, label, gens), log })
}

/// Checks that every S-pair reduces to zero; returns the first offending
/// pair otherwise. All pairs are divided in full — no criterion shortcuts.
pub fn is_groebner(basis: &IdealBasis) -> Option<GroebnerWitness> {
    let gens = basis.gens();
    for j in 1..gens.len() {
        for i in 0..j {
            let s = s_polynomial(&gens[i], &gens[j]);
            let (_, remainder) = normal_form(&s, gens);
            if !remainder.is_zero() {
                return Some(GroebnerWitness { pair: (i, j), remainder });
            }
        }
    }
    None
}

/// Canonicalizes a Groebner basis into the unique reduced one: redundant
/// generators dropped, every generator monic and fully reduced against the
/// others, sorted descending by leading monomial.
///
/// Errors when the input is not a Groebner basis.
pub fn interreduce(basis: &IdealBasis) -> Result<IdealBasis, GroebnerError> {
    if let Some(witness) = is_groebner(basis) {
        return Err(GroebnerError::NotGroebner { witness });
    }

    // Minimalize: ascending leading monomials, keep only those not divisible
    // by an already kept one. Duplicates of a leading monomial drop here.
    let mut order: Vec<&Polynomial> = basis.gens().iter().collect();
    order.sort_by(|a, b| {
        a.leading_monomial()
            .expect("nonzero generator")
            .cmp(b.leading_monomial().expect("nonzero generator"))
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in order {
        let lm = g.leading_monomial().expect("nonzero generator");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero generator").divides(lm))
        {
            minimal.push(g.clone());
        }
    }

    // Tail-reduce each survivor against the others; leading monomials are
    // pairwise non-divisible, so they stay put and the result is the unique
    // reduced basis.
    let mut reduced = minimal.clone();
    for i in 0..reduced.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (_, rem) = normal_form(&reduced[i], &others);
        reduced[i] = rem.monic();
    }
    reduced.sort_by(|a, b| {
        b.leading_monomial()
            .expect("nonzero generator")
            .cmp(a.leading_monomial().expect("nonzero generator"))
    });

    let label = format!("reduced({})", basis.label());
    Ok(IdealBasis::new(basis.ring(), label, reduced))
}

/// Nonmembership evidence from an ideal comparison.
#[derive(Debug, Clone)]
pub struct IdealWitness {
    /// Index into the basis whose generator fails membership.
    pub generator: usize,
    /// True when the failing generator comes from the first argument.
    pub from_first: bool,
    pub remainder: Polynomial,
}

/// Two-sided membership test: every generator of each basis must reduce to
/// zero modulo a Groebner basis of the other.
pub fn ideal_compare(
    a: &IdealBasis,
    b: &IdealBasis,
    opts: &BuchbergerOptions,
) -> Result<Option<IdealWitness>, GroebnerError> {
    assert!(same_ring(a.ring(), b.ring()), "ideal ring mismatch");
    let gb_b = buchberger(b, opts)?.basis;
    for (idx, g) in a.gens().iter().enumerate() {
        let remainder = gb_b.reduce(g);
        if !remainder.is_zero() {
            return Ok(Some(IdealWitness { generator: idx, from_first: true, remainder }));
        }
    }
    let gb_a = buchberger(a, opts)?.basis;
    for (idx, g) in b.gens().iter().enumerate() {
        let remainder = gb_a.reduce(g);
        if !remainder.is_zero() {
            return Ok(Some(IdealWitness { generator: idx, from_first: false, remainder }));
        }
    }
    Ok(None)
}

/// True when both bases generate the same ideal.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis) -> Result<bool, GroebnerError> {
    Ok(ideal_compare(a, b, &BuchbergerOptions::default())?.is_none())
}
