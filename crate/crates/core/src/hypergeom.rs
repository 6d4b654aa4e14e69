//! Terminating generalized hypergeometric series with integer parameters.
//!
//! A series `pFq(a_1..a_p; b_1..b_q; z)` terminates when some numerator
//! parameter is a non-positive integer `-N`: every term past index `N`
//! contains the factor `(-N)_n = 0`. All sums here are finite and exact.
//!
//! Besides direct summation this module carries the two closed tools used to
//! simplify the `3F2` series that count battery tableaux:
//!
//! - [`gauss_2f1_neg`]: `2F1(-a, b; -c; 1) = C(c+b, a) / C(c, a)`.
//! - [`contiguous_step`]: splits `3F2(a, b, -c; d, -e; 1)` into two series
//!   with `d` raised by one.
//!
//! [`reduce_3f2`] chains them: raise `d` until it equals the first numerator,
//! cancel that pair, and close each remaining `2F1` with Gauss.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, Integer, Rational};

/// Parameters of a terminating `pFq`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PFQParams {
    numerators: Vec<Integer>,
    denominators: Vec<Integer>,
    z: Rational,
}

impl PFQParams {
    /// Fails unless some numerator is a non-positive integer.
    pub fn new(numerators: Vec<Integer>, denominators: Vec<Integer>, z: Rational) -> Result<Self> {
        let params = PFQParams { numerators, denominators, z };
        params.termination_index()?;
        Ok(params)
    }

    /// `pFq(...; 1)` from machine integers.
    pub fn at_one(numerators: &[i64], denominators: &[i64]) -> Result<Self> {
        Self::new(
            numerators.iter().map(|&v| Integer::from(v)).collect(),
            denominators.iter().map(|&v| Integer::from(v)).collect(),
            Rational::one(),
        )
    }

    pub fn numerators(&self) -> &[Integer] {
        &self.numerators
    }

    pub fn denominators(&self) -> &[Integer] {
        &self.denominators
    }

    pub fn z(&self) -> &Rational {
        &self.z
    }

    /// Index of the last possibly nonzero term: the smallest `|a|` over the
    /// non-positive numerators.
    pub fn termination_index(&self) -> Result<usize> {
        termination_index(&self.numerators)
            .ok_or_else(|| Error::NonTerminating(format!("no non-positive numerator in {self}")))?
    }
}

impl fmt::Display for PFQParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Integer]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "{}F{}({}; {}; {})",
            self.numerators.len(),
            self.denominators.len(),
            join(&self.numerators),
            join(&self.denominators),
            self.z
        )
    }
}

fn termination_index(numerators: &[Integer]) -> Option<Result<usize>> {
    numerators
        .iter()
        .filter(|a| !a.is_positive())
        .map(|a| a.abs().to_usize().ok_or_else(|| Error::OutOfRange(format!("termination index {a} is too large"))))
        .reduce(|x, y| match (x, y) {
            (Ok(x), Ok(y)) => Ok(x.min(y)),
            (Err(e), _) | (_, Err(e)) => Err(e),
        })
}

/// Terms `0..=N` of the series, each obtained from the previous one by
/// `prod(a_i + n) / prod(b_j + n) * z / (n + 1)`.
fn series_terms(numerators: &[Integer], denominators: &[Integer], z: &Rational, last: usize) -> Result<Vec<Rational>> {
    let mut terms = Vec::with_capacity(last + 1);
    let mut term = Rational::one();
    terms.push(term.clone());
    for n in 0..last {
        let mut num = Integer::one();
        for a in numerators {
            num *= a + n;
        }
        let mut den = Integer::from(n + 1);
        for b in denominators {
            let factor = b + n;
            if factor.is_zero() {
                return Err(Error::ZeroDenominator { param: b.to_string(), step: n });
            }
            den *= factor;
        }
        term = term * Rational::new(num, den) * z;
        terms.push(term.clone());
    }
    Ok(terms)
}

/// Every term of the finite sum, in order.
pub fn pfq_terms(params: &PFQParams) -> Result<Vec<Rational>> {
    let last = params.termination_index()?;
    series_terms(&params.numerators, &params.denominators, &params.z, last)
}

/// Exact value of a terminating series.
pub fn eval_pfq(params: &PFQParams) -> Result<Rational> {
    Ok(pfq_terms(params)?.into_iter().sum())
}

/// `2F1(-a, b; -c; 1) = C(c+b, a) / C(c, a)` for `b >= 1`, `0 <= a <= c`.
pub fn gauss_2f1_neg(a: usize, b: usize, c: usize) -> Result<Rational> {
    if b == 0 {
        return Err(Error::OutOfRange("Gauss summation needs b >= 1".into()));
    }
    if a > c {
        return Err(Error::OutOfRange(format!("Gauss summation needs a <= c, got a = {a}, c = {c}")));
    }
    Ok(Rational::new(binomial(&Integer::from(c + b), a), binomial(&Integer::from(c), a)))
}

/// A series written as `coefficient * 3F2(params)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Rational,
    pub params: PFQParams,
}

impl Term {
    pub fn value(&self) -> Result<Rational> {
        Ok(&self.coefficient * eval_pfq(&self.params)?)
    }
}

/// `3F2(a, b, -c; d, -e; 1) = shifted + kept`, where
///
/// ```text
/// shifted = -c(e+a)/(de) * 3F2(a, b+1, -c+1; d+1, -e+1; 1)
/// kept    = (d+c)/d      * 3F2(a, b+1, -c;   d+1, -e;   1)
/// ```
///
/// `shifted` is absent when `c = 0`, where its coefficient vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContiguousDecomposition {
    pub shifted: Option<Term>,
    pub kept: Term,
}

impl ContiguousDecomposition {
    pub fn value(&self) -> Result<Rational> {
        let kept = self.kept.value()?;
        match &self.shifted {
            Some(t) => Ok(t.value()? + kept),
            None => Ok(kept),
        }
    }
}

/// `3F2(a, b, -c; d, -e; 1)` as exact parameters.
pub fn three_f_two(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<PFQParams> {
    PFQParams::at_one(&[a, b, -c], &[d, -e])
}

/// Applies the contiguous relation once. Requires `a >= 0`, `b >= -1`,
/// `d >= 1` and `0 <= c <= e`.
pub fn contiguous_step(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<ContiguousDecomposition> {
    if a < 0 || b < -1 || d < 1 || c < 0 || c > e {
        return Err(Error::OutOfRange(format!(
            "contiguous relation needs a >= 0, b >= -1, d >= 1, 0 <= c <= e; got a={a}, b={b}, c={c}, d={d}, e={e}"
        )));
    }
    let shifted = if c == 0 {
        None
    } else {
        Some(Term {
            coefficient: Rational::new(Integer::from(-c * (e + a)), Integer::from(d * e)),
            params: three_f_two(a, b + 1, c - 1, d + 1, e - 1)?,
        })
    };
    let kept = Term {
        coefficient: Rational::new(Integer::from(d + c), Integer::from(d)),
        params: three_f_two(a, b + 1, c, d + 1, e)?,
    };
    Ok(ContiguousDecomposition { shifted, kept })
}

/// Evaluates `3F2(a, b, -c; 1, -e; 1)` without direct summation.
///
/// Starting from `d = 1`, every pending series is split by
/// [`contiguous_step`] until `d = a`; like series are merged along the way.
/// Each survivor `3F2(a, b', -c'; a, -e'; 1)` is the `2F1(-c', b'; -e'; 1)`
/// left after cancelling `a`, which [`gauss_2f1_neg`] closes.
pub fn reduce_3f2(a: i64, b: i64, c: i64, e: i64) -> Result<Rational> {
    if a < 1 {
        return Err(Error::OutOfRange(format!("reduction needs a >= 1, got {a}")));
    }
    // (b, c, e) -> coefficient; a is fixed and d is shared by every entry
    let mut pending: BTreeMap<(i64, i64, i64), Rational> = BTreeMap::new();
    pending.insert((b, c, e), Rational::one());
    for d in 1..a {
        let mut next: BTreeMap<(i64, i64, i64), Rational> = BTreeMap::new();
        for ((b, c, e), coefficient) in pending {
            let split = contiguous_step(a, b, c, d, e)?;
            if let Some(t) = split.shifted {
                *next.entry((b + 1, c - 1, e - 1)).or_insert_with(Rational::zero) += &coefficient * t.coefficient;
            }
            *next.entry((b + 1, c, e)).or_insert_with(Rational::zero) += coefficient * split.kept.coefficient;
        }
        next.retain(|_, q| !q.is_zero());
        pending = next;
    }
    let mut total = Rational::zero();
    for ((b, c, e), coefficient) in pending {
        let value = match b {
            0 => Rational::one(),
            b if b > 0 => gauss_2f1_neg(c as usize, b as usize, e as usize)?,
            _ => {
                return Err(Error::OutOfRange(format!(
                    "reduced 2F1({}, {b}; {}; 1) has a negative second numerator",
                    -c, -e
                )))
            }
        };
        total += coefficient * value;
    }
    Ok(total)
}

/// An integer parameter affine in the outer summation indices:
/// `constant + sum(coefficients[i] * m_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub constant: Integer,
    pub coefficients: Vec<i64>,
}

impl Affine {
    pub fn constant(c: impl Into<Integer>) -> Self {
        Affine { constant: c.into(), coefficients: Vec::new() }
    }

    pub fn new(c: impl Into<Integer>, coefficients: &[i64]) -> Self {
        Affine { constant: c.into(), coefficients: coefficients.to_vec() }
    }

    pub fn at(&self, outer: &[usize]) -> Integer {
        let mut v = self.constant.clone();
        for (c, &m) in self.coefficients.iter().zip(outer) {
            v += Integer::from(*c) * m;
        }
        v
    }
}

/// One level of a multiple hypergeometric sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub numerators: Vec<Affine>,
    pub denominators: Vec<Affine>,
    pub z: Rational,
}

/// Nested sum over `m_0 >= m_1 >= ... >= m_r >= 0` of the product over
/// levels of `prod (a)_{m_i} / prod (b)_{m_i} * z_i^{m_i} / m_i!`, where level
/// `i` may depend on `m_0..m_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPFQSpec {
    levels: Vec<Level>,
}

impl MultiPFQSpec {
    /// Coefficient vectors may only reference outer indices, and level 0
    /// must carry a non-positive numerator.
    pub fn new(levels: Vec<Level>) -> Result<Self> {
        for (i, level) in levels.iter().enumerate() {
            if let Some(bad) = level.numerators.iter().chain(&level.denominators).find(|p| p.coefficients.len() > i) {
                return Err(Error::OutOfRange(format!(
                    "level {i} parameter depends on {} outer indices",
                    bad.coefficients.len()
                )));
            }
        }
        if let Some(first) = levels.first() {
            let nums: Vec<Integer> = first.numerators.iter().map(|p| p.at(&[])).collect();
            termination_index(&nums)
                .ok_or_else(|| Error::NonTerminating("level 0 has no non-positive numerator".into()))??;
        }
        Ok(MultiPFQSpec { levels })
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }
}

pub fn eval_multi_pfq(spec: &MultiPFQSpec) -> Result<Rational> {
    let mut outer = Vec::with_capacity(spec.levels.len());
    eval_level(&spec.levels, &mut outer, usize::MAX)
}

fn eval_level(levels: &[Level], outer: &mut Vec<usize>, bound: usize) -> Result<Rational> {
    let Some((level, rest)) = levels.split_first() else {
        return Ok(Rational::one());
    };
    let nums: Vec<Integer> = level.numerators.iter().map(|p| p.at(outer)).collect();
    let dens: Vec<Integer> = level.denominators.iter().map(|p| p.at(outer)).collect();
    let last = match termination_index(&nums) {
        Some(n) => n?.min(bound),
        None if bound == usize::MAX => {
            return Err(Error::NonTerminating("outermost level has no non-positive numerator".into()))
        }
        None => bound,
    };
    let terms = series_terms(&nums, &dens, &level.z, last)?;
    let mut total = Rational::zero();
    for (m, term) in terms.into_iter().enumerate() {
        if term.is_zero() {
            continue;
        }
        outer.push(m);
        let inner = eval_level(rest, outer, m);
        outer.pop();
        total += term * inner?;
    }
    Ok(total)
}
