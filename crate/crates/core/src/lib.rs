//! Exact-arithmetic Groebner engine for polynomial systems built from
//! truncated Laurent series.
//!
//! The pipeline, bottom to top:
//!
//! * [`exactnum`] — arbitrary-precision rationals and the combinatorial
//!   sequences (binomials, Catalan numbers, the coefficients `λ_j`, `μ_r`);
//! * [`polyring`] — sparse multivariate polynomials under the lex order
//!   `C_{-T} > ... > C_{-1} > y`, with the multivariate division algorithm;
//! * [`laurent`] — truncated Laurent series in `x^{-1}` and the generation
//!   of coefficient systems from series powers;
//! * [`groebner`] — S-polynomials, Buchberger completion, interreduction,
//!   and ideal equality;
//! * [`verify`] — the closed-form basis built from the `λ`/`μ` sequences and
//!   the machine checks that it generates, and is a Groebner basis of, the
//!   ideal of the generated system.

pub mod exactnum;
pub mod groebner;
pub mod laurent;
pub mod polyring;
pub mod verify;
