//! Counting standard Young tableaux of battery shapes `[(m^n), a, k]`.
//!
//! The cell just above the rectangle (the pivot) splits every tableau in
//! two. Rectangle cells with entries below the pivot's form a straight shape
//! inside the first `k - 1` columns (the bullets); the rest, rotated by 180
//! degrees, form another straight shape (the circles). The `a - 1` battery
//! cells above the pivot interleave freely with the bullets.
//!
//! Three routes to the same number live here:
//!
//! - [`count_k2`] .. [`count_k6`]: `f^(m^n)` times a (multiple) terminating
//!   hypergeometric series in the pivot decomposition's summation indices.
//! - [`count_general`]: the decomposition summed directly over bullet
//!   shapes, for any `k <= m`.
//! - [`catalog`]: closed rational expressions for special parameter families.

pub mod catalog;

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, to_natural, Factorization, Integer, Natural, Rational};
use crate::hypergeom::{eval_multi_pfq, eval_pfq, Affine, Level, MultiPFQSpec, PFQParams};
use crate::shapes::{rotated_complement, syt_count_straight, BatteryShape, Partition};

/// Column heights `t_1 >= t_2 >= ... ` of a bullet shape, at most `n` each.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BulletProfile {
    heights: Vec<usize>,
}

impl BulletProfile {
    pub fn new(heights: Vec<usize>, n: usize) -> Result<Self> {
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange(format!("bullet columns {heights:?} are not weakly decreasing")));
        }
        if heights.first().is_some_and(|&t| t > n) {
            return Err(Error::OutOfRange(format!("bullet column taller than the rectangle height {n}")));
        }
        Ok(BulletProfile { heights })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn total(&self) -> usize {
        self.heights.iter().sum()
    }

    /// The bullet cells as a straight shape (row lengths).
    pub fn shape(&self) -> Partition {
        Partition::new(self.heights.clone()).expect("heights are weakly decreasing").conjugate()
    }
}

/// Every profile with `columns` columns of height at most `n`.
pub fn bullet_profiles(columns: usize, n: usize) -> Vec<BulletProfile> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<BulletProfile>) {
        if left == 0 {
            out.push(BulletProfile { heights: cur.clone() });
            return;
        }
        for h in 0..=max {
            cur.push(h);
            go(left - 1, h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(columns, n, &mut Vec::new(), &mut out);
    out
}

fn integral(value: Rational, shape: impl fmt::Display) -> Result<Natural> {
    to_natural(&value).ok_or_else(|| Error::NonIntegral { shape: shape.to_string(), value: value.to_string() })
}

fn rect_label(m: usize, n: usize, a: usize, k: usize) -> String {
    format!("[({m}^{n}),{a},{k}]")
}

fn require_rect(m: usize, n: usize, k: usize, min_k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("rectangle needs at least one row".into()));
    }
    if k < min_k || k > m {
        return Err(Error::OutOfRange(format!("column index {k} needs {min_k} <= k <= m, with m = {m}")));
    }
    Ok(())
}

fn f_rect(m: usize, n: usize) -> Natural {
    syt_count_straight(&Partition::rectangle(m, n))
}

/// `f^(m^n) * 3F2(a, m, -n; 1, -mn; 1)`.
pub fn count_k2(m: usize, n: usize, a: usize) -> Result<Natural> {
    require_rect(m, n, 2, 2)?;
    let (mi, ni, ai) = (m as i64, n as i64, a as i64);
    let series = PFQParams::at_one(&[ai, mi, -ni], &[1, -mi * ni])?;
    let value = Rational::from(Integer::from(f_rect(m, n))) * eval_pfq(&series)?;
    integral(value, rect_label(m, n, a, 2))
}

/// The leveled series whose value times `f^(m^n)` counts `[(m^n), a, k]`,
/// for `k` in `3..=6`.
///
/// Outer indices are the bullet column heights `t >= v >= w >= r`. Level `j`
/// (0-based) reads
///
/// ```text
/// numerators:   a + (sum of outer), m - j, -n - j, then per outer index twice
/// denominators: -mn + (sum of outer), then per outer index twice, then 1
/// ```
pub fn battery_spec(k: usize, m: usize, n: usize, a: usize) -> Result<MultiPFQSpec> {
    let (a, m, n) = (a as i64, m as i64, n as i64);
    let mn = m * n;
    let c = Affine::constant;
    let aff = |k: i64, co: &[i64]| Affine::new(k, co);
    let level =
        |numerators: Vec<Affine>, denominators: Vec<Affine>| Level { numerators, denominators, z: Rational::one() };

    let l0 = level(vec![c(a), c(m), c(-n)], vec![c(-mn), c(1)]);
    // [t]
    let l1 = level(
        vec![aff(a, &[1]), c(m - 1), c(-n - 1), aff(0, &[-1]), aff(0, &[-1])],
        vec![aff(-mn, &[1]), aff(-1, &[-1]), aff(-1, &[-1]), c(1)],
    );
    // [t, v]
    let l2 = level(
        vec![aff(a, &[1, 1]), c(m - 2), c(-n - 2), aff(-1, &[-1]), aff(-1, &[-1]), aff(0, &[0, -1]), aff(0, &[0, -1])],
        vec![aff(-mn, &[1, 1]), aff(-2, &[-1]), aff(-2, &[-1]), aff(-1, &[0, -1]), aff(-1, &[0, -1]), c(1)],
    );
    // [t, v, w]
    let l3 = level(
        vec![
            aff(a, &[1, 1, 1]),
            c(m - 3),
            c(-n - 3),
            aff(-2, &[-1]),
            aff(-2, &[-1]),
            aff(-1, &[0, -1]),
            aff(-1, &[0, -1]),
            aff(0, &[0, 0, -1]),
            aff(0, &[0, 0, -1]),
        ],
        vec![
            aff(-mn, &[1, 1, 1]),
            aff(-3, &[-1]),
            aff(-3, &[-1]),
            aff(-2, &[0, -1]),
            aff(-2, &[0, -1]),
            aff(-1, &[0, 0, -1]),
            aff(-1, &[0, 0, -1]),
            c(1),
        ],
    );
    // [t, v, w, r]
    let l4 = level(
        vec![
            aff(a, &[1, 1, 1, 1]),
            c(m - 4),
            c(-n - 4),
            aff(-3, &[-1]),
            aff(-3, &[-1]),
            aff(-2, &[0, -1]),
            aff(-2, &[0, -1]),
            aff(-1, &[0, 0, -1]),
            aff(-1, &[0, 0, -1]),
            aff(0, &[0, 0, 0, -1]),
            aff(0, &[0, 0, 0, -1]),
        ],
        vec![
            aff(-mn, &[1, 1, 1, 1]),
            aff(-4, &[-1]),
            aff(-4, &[-1]),
            aff(-3, &[0, -1]),
            aff(-3, &[0, -1]),
            aff(-2, &[0, 0, -1]),
            aff(-2, &[0, 0, -1]),
            aff(-1, &[0, 0, 0, -1]),
            aff(-1, &[0, 0, 0, -1]),
            c(1),
        ],
    );

    let levels = match k {
        3 => vec![l0, l1],
        4 => vec![l0, l1, l2],
        5 => vec![l0, l1, l2, l3],
        6 => vec![l0, l1, l2, l3, l4],
        _ => return Err(Error::OutOfRange(format!("no leveled series transcribed for k = {k}"))),
    };
    MultiPFQSpec::new(levels)
}

fn count_multi(k: usize, m: usize, n: usize, a: usize) -> Result<Natural> {
    require_rect(m, n, k, k)?;
    let value = Rational::from(Integer::from(f_rect(m, n))) * eval_multi_pfq(&battery_spec(k, m, n, a)?)?;
    integral(value, rect_label(m, n, a, k))
}

pub fn count_k3(m: usize, n: usize, a: usize) -> Result<Natural> {
    count_multi(3, m, n, a)
}

pub fn count_k4(m: usize, n: usize, a: usize) -> Result<Natural> {
    count_multi(4, m, n, a)
}

pub fn count_k5(m: usize, n: usize, a: usize) -> Result<Natural> {
    count_multi(5, m, n, a)
}

pub fn count_k6(m: usize, n: usize, a: usize) -> Result<Natural> {
    count_multi(6, m, n, a)
}

/// Hypergeometric count for `2 <= k <= 6`.
pub fn count_hyper(m: usize, n: usize, a: usize, k: usize) -> Result<Natural> {
    match k {
        2 => count_k2(m, n, a),
        3..=6 => count_multi(k, m, n, a),
        _ => Err(Error::OutOfRange(format!("hypergeometric formulas cover 2 <= k <= 6, not {k}"))),
    }
}

/// Pivot decomposition summed over every bullet profile:
/// `sum C(a + |mu| - 1, |mu|) * f^mu * f^(rotated complement of mu)`.
///
/// With `a = 0` there is no pivot; only the empty profile survives since
/// `C(|mu| - 1, |mu|) = 0` for `|mu| > 0`.
pub fn count_general(m: usize, n: usize, a: usize, k: usize) -> Result<Natural> {
    require_rect(m, n, k, 1)?;
    let mut total = Natural::default();
    for profile in bullet_profiles(k - 1, n) {
        let size = profile.total();
        let interleavings = binomial(&(Integer::from(a + size) - 1), size);
        let Some(interleavings) = interleavings.to_biguint() else {
            return Err(Error::NonIntegral {
                shape: rect_label(m, n, a, k),
                value: format!("negative interleaving count {interleavings}"),
            });
        };
        if interleavings == Natural::default() {
            continue;
        }
        let bullets = profile.shape();
        let circles = rotated_complement(m, n, &bullets)?;
        total += interleavings * syt_count_straight(&bullets) * syt_count_straight(&circles);
    }
    Ok(total)
}

/// How a count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hyper,
    General,
    Closed,
    Dp,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Closed, Method::Hyper, Method::General, Method::Dp];

    pub fn name(self) -> &'static str {
        match self {
            Method::Hyper => "hyper",
            Method::General => "general",
            Method::Closed => "closed",
            Method::Dp => "dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub shape: BatteryShape,
    pub count: Natural,
    pub method: Method,
    pub factorization: Option<Factorization>,
}

/// Counts `shape` with the given method.
///
/// `Closed` uses the catalog for rectangles and the hook length formula for
/// straight shapes (`a = 0`); `Hyper` and `General` need a rectangular base;
/// `Dp` runs the order-ideal oracle under `size_cap`.
pub fn count(shape: &BatteryShape, method: Method, size_cap: usize) -> Result<Natural> {
    let inapplicable = || Error::Inapplicable { method: method.to_string(), shape: shape.to_string() };
    let (a, k) = (shape.a(), shape.k());
    if method == Method::Dp {
        return crate::oracle_dp::count_linear_extensions(shape, size_cap);
    }
    if method == Method::Closed && a == 0 {
        return Ok(syt_count_straight(shape.lambda()));
    }
    let (m, n) = shape.rectangle().ok_or_else(inapplicable)?;
    match method {
        Method::Hyper if (2..=6).contains(&k) => count_hyper(m, n, a, k),
        Method::General => count_general(m, n, a, k),
        Method::Closed => match catalog::ClosedFormCase::matching(m, n, a, k) {
            Some(case) => catalog::closed_form(case, m, n, a),
            None => Err(inapplicable()),
        },
        _ => Err(inapplicable()),
    }
}

impl CountResult {
    pub fn new(shape: BatteryShape, count: Natural, method: Method) -> Self {
        CountResult { shape, count, method, factorization: None }
    }

    pub fn with_factorization(mut self) -> Result<Self> {
        self.factorization = Some(crate::exact_arith::factorize(&self.count)?);
        Ok(self)
    }
}
