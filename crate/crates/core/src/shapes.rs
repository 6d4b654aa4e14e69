//! Partitions, skew and truncated shapes, battery shapes, and the hook
//! length formula.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::{binomial, factorial, Integer, Natural, Rational};

/// Weakly decreasing sequence of positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        if let Some(w) = rows.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// The rectangle `(m^n)`: `n` rows of length `m`.
    pub fn rectangle(m: usize, n: usize) -> Self {
        if m == 0 {
            return Self::empty();
        }
        Partition { rows: vec![m; n] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// Width of the first row.
    pub fn width(&self) -> usize {
        self.row(0)
    }

    /// `Some((m, n))` when the partition is the rectangle `(m^n)`.
    pub fn as_rectangle(&self) -> Option<(usize, usize)> {
        let m = *self.rows.first()?;
        self.rows.iter().all(|&r| r == m).then_some((m, self.rows.len()))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.rows.iter().zip(&self.rows).all(|(o, s)| o <= s)
    }

    /// Column heights.
    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let rows = (0..width).map(|j| self.rows.iter().take_while(|&&r| r > j).count()).collect();
        Partition { rows }
    }

    pub fn hook_lengths(&self) -> HookMultiset {
        let cols = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len {
                hooks.push((len - j - 1) + (cols.rows[j] - i - 1) + 1);
            }
        }
        HookMultiset::new(hooks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses comma-separated parts, e.g. `5,3,1`. The empty string is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::InvalidPartition(format!("bad part {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if rows.contains(&0) && rows.last() != Some(&0) {
            return Err(Error::InvalidPartition("zero part before a positive part".into()));
        }
        Partition::new(rows)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { rows: cur.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions fitting inside the rectangle `(m^n)`.
pub fn partitions_in_rectangle(m: usize, n: usize) -> Vec<Partition> {
    fn go(row: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
        if row == n {
            return;
        }
        for part in 1..=max {
            cur.push(part);
            go(row + 1, n, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Multiset of hook lengths, one per cell, kept in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookMultiset {
    hooks: Vec<usize>,
}

impl HookMultiset {
    fn new(mut hooks: Vec<usize>) -> Self {
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        HookMultiset { hooks }
    }

    pub fn hooks(&self) -> &[usize] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn product(&self) -> Natural {
        self.hooks.iter().fold(Natural::one(), |acc, &h| acc * h)
    }
}

impl From<Vec<usize>> for HookMultiset {
    fn from(hooks: Vec<usize>) -> Self {
        HookMultiset::new(hooks)
    }
}

/// Number of standard Young tableaux of a straight shape, by the hook length
/// formula `n! / prod(hooks)`.
pub fn syt_count_straight(p: &Partition) -> Natural {
    factorial(p.size()) / p.hook_lengths().product()
}

/// `f^(m^(n-t), (m-1)^t) / f^(m^n)`, the effect of removing the bottom `t`
/// cells of the last column of the rectangle.
pub fn rect_minus_ratio(m: usize, n: usize, t: usize) -> Result<Rational> {
    if m == 0 {
        return Err(Error::OutOfRange("rectangle width must be at least 1".into()));
    }
    if t > n {
        return Err(Error::OutOfRange(format!("cannot remove {t} cells from a column of height {n}")));
    }
    let num = binomial(&Integer::from(n), t) * binomial(&Integer::from(m + t - 1), t);
    let den = binomial(&Integer::from(m * n), t);
    Ok(Rational::new(num, den))
}

/// Complement of `mu` inside `(m^n)`, rotated by 180 degrees.
pub fn rotated_complement(m: usize, n: usize, mu: &Partition) -> Result<Partition> {
    if !Partition::rectangle(m, n).contains(mu) && !mu.is_empty() {
        return Err(Error::OutOfRange(format!("{mu} does not fit inside ({m}^{n})")));
    }
    let rows = (0..n).rev().map(|i| m - mu.row(i)).collect();
    Partition::new(rows)
}

/// `outer / inner`: the cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column interval `[start, end)` of every row, top to bottom.
    pub fn row_intervals(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len()).map(|i| (self.inner.row(i), self.outer.row(i))).collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A skew shape with cells deleted from its northeastern corner: row `i`
/// loses every cell in a column `>= outer_1 - truncation_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedShape {
    base: SkewShape,
    truncation: Partition,
}

impl TruncatedShape {
    pub fn new(base: SkewShape, truncation: Partition) -> Result<Self> {
        let shape = TruncatedShape { base, truncation };
        let width = shape.base.outer.width();
        if shape.truncation.width() > width || shape.truncation.len() > shape.base.outer.len() {
            return Err(Error::InvalidShape(format!(
                "truncation {} does not fit in {}",
                shape.truncation, shape.base.outer
            )));
        }
        if !is_line_convex(&shape.row_intervals()) {
            return Err(Error::InvalidShape(format!("{shape} is not line-convex")));
        }
        Ok(shape)
    }

    pub fn base(&self) -> &SkewShape {
        &self.base
    }

    pub fn truncation(&self) -> &Partition {
        &self.truncation
    }

    pub fn row_intervals(&self) -> Vec<(usize, usize)> {
        let width = self.base.outer.width();
        self.base
            .row_intervals()
            .into_iter()
            .enumerate()
            .map(|(i, (start, end))| {
                let end = end.min(width - self.truncation.row(i));
                (start, end.max(start))
            })
            .collect()
    }

    pub fn size(&self) -> usize {
        self.row_intervals().iter().map(|(s, e)| e - s).sum()
    }
}

impl fmt::Display for TruncatedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.base.outer, self.truncation)?;
        if !self.base.inner.is_empty() {
            write!(f, "/{}", self.base.inner)?;
        }
        Ok(())
    }
}

/// Every row is an interval by construction; checks that every column is one
/// too.
pub(crate) fn is_line_convex(rows: &[(usize, usize)]) -> bool {
    let width = rows.iter().map(|&(_, e)| e).max().unwrap_or(0);
    (0..width).all(|c| {
        let present: Vec<bool> = rows.iter().map(|&(s, e)| s <= c && c < e).collect();
        let first = present.iter().position(|&p| p);
        let last = present.iter().rposition(|&p| p);
        match (first, last) {
            (Some(f), Some(l)) => present[f..=l].iter().all(|&p| p),
            _ => true,
        }
    })
}

/// `lambda` with a column of `a` cells stacked above the top cell of its
/// `k`-th column (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BatteryShape {
    lambda: Partition,
    a: usize,
    k: usize,
}

impl BatteryShape {
    pub fn new(lambda: Partition, a: usize, k: usize) -> Result<Self> {
        validate_battery(&lambda, a, k)?;
        Ok(BatteryShape { lambda, a, k })
    }

    /// Battery over the rectangle `(m^n)`.
    pub fn over_rectangle(m: usize, n: usize, a: usize, k: usize) -> Result<Self> {
        Self::new(Partition::rectangle(m, n), a, k)
    }

    /// A straight shape, viewed as a battery with no added cells.
    pub fn straight(lambda: Partition) -> Self {
        BatteryShape { lambda, a: 0, k: 1 }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.a
    }

    /// `Some((m, n))` when the base is the rectangle `(m^n)`.
    pub fn rectangle(&self) -> Option<(usize, usize)> {
        self.lambda.as_rectangle()
    }

    /// Column interval of every row, top to bottom: `a` single-cell battery
    /// rows, then the rows of `lambda`.
    pub fn row_intervals(&self) -> Vec<(usize, usize)> {
        let col = self.k - 1;
        std::iter::repeat_n((col, col + 1), self.a).chain(self.lambda.rows.iter().map(|&r| (0, r))).collect()
    }
}

impl fmt::Display for BatteryShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lambda.as_rectangle() {
            Some((m, n)) => write!(f, "[({m}^{n}),{},{}]", self.a, self.k),
            None => write!(f, "[{},{},{}]", self.lambda, self.a, self.k),
        }
    }
}

pub fn validate_battery(lambda: &Partition, a: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidShape("column index k is 1-based".into()));
    }
    if lambda.is_empty() {
        if a > 0 {
            return Err(Error::InvalidShape("a battery column needs a nonempty base to attach to".into()));
        }
        return Ok(());
    }
    if k > lambda.width() {
        return Err(Error::InvalidShape(format!("{lambda} has {} columns, no column {k}", lambda.width())));
    }
    Ok(())
}
