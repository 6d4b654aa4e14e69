//! Independent SYT counter: dynamic programming over order ideals.
//!
//! A standard filling of a diagram is a linear extension of its cell poset,
//! i.e. a maximal chain of order ideals. Every diagram handled here is
//! line-convex with rows given as column intervals, so an ideal is just the
//! filled prefix length of each row. Cell `(r, c)` may be added once the cell
//! to its left (automatic for a prefix) and the cell above it, if present,
//! are filled.
//!
//! For a battery shape the first `a` rows are the single-cell battery rows;
//! the state is then `(b, mu)`: battery fill plus the filled part of `lambda`.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::Natural;
use crate::shapes::{is_line_convex, BatteryShape, SkewShape, TruncatedShape};

pub const DEFAULT_SIZE_CAP: usize = 120;
pub const ENUMERATION_LIMIT: usize = 12;

/// A line-convex set of cells, one column interval `[start, end)` per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    rows: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(rows: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(s, e)) = rows.iter().find(|(s, e)| s > e) {
            return Err(Error::InvalidShape(format!("row interval [{s}, {e}) is reversed")));
        }
        if rows.iter().any(|&(_, e)| e > usize::from(u16::MAX)) {
            return Err(Error::InvalidShape("row too long for the oracle".into()));
        }
        if !is_line_convex(&rows) {
            return Err(Error::InvalidShape("diagram is not line-convex".into()));
        }
        Ok(Diagram { rows })
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|(s, e)| e - s).sum()
    }

    fn row_len(&self, r: usize) -> usize {
        self.rows[r].1 - self.rows[r].0
    }

    /// Rows that can take the next entry from `state`.
    fn addable<'a>(&'a self, state: &'a IdealState) -> impl Iterator<Item = usize> + 'a {
        (0..self.rows.len()).filter(move |&r| {
            let filled = usize::from(state.0[r]);
            if filled == self.row_len(r) {
                return false;
            }
            if r == 0 {
                return true;
            }
            let col = self.rows[r].0 + filled;
            let (above_start, above_end) = self.rows[r - 1];
            !(above_start..above_end).contains(&col) || col < above_start + usize::from(state.0[r - 1])
        })
    }
}

impl From<&BatteryShape> for Diagram {
    fn from(shape: &BatteryShape) -> Self {
        Diagram::new(shape.row_intervals()).expect("battery shapes are line-convex")
    }
}

impl From<&SkewShape> for Diagram {
    fn from(shape: &SkewShape) -> Self {
        Diagram::new(shape.row_intervals()).expect("skew shapes are line-convex")
    }
}

impl From<&TruncatedShape> for Diagram {
    fn from(shape: &TruncatedShape) -> Self {
        Diagram::new(shape.row_intervals()).expect("validated on construction")
    }
}

/// Filled prefix length of every row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealState(Vec<u16>);

impl IdealState {
    pub fn prefixes(&self) -> &[u16] {
        &self.0
    }

    fn with(&self, row: usize) -> Self {
        let mut next = self.0.clone();
        next[row] += 1;
        IdealState(next)
    }
}

/// Number of filling orders reaching each ideal of one size.
pub type PathCountTable = HashMap<IdealState, Natural>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DpStats {
    /// Reachable ideals over all sizes.
    pub states: usize,
    /// Largest single level.
    pub widest_level: usize,
}

pub fn count_diagram(diagram: &Diagram, size_cap: usize) -> Result<(Natural, DpStats)> {
    let size = diagram.size();
    if size > size_cap {
        return Err(Error::SizeCap { size, cap: size_cap });
    }
    let mut level: PathCountTable = HashMap::new();
    level.insert(IdealState(vec![0; diagram.rows.len()]), Natural::one());
    let mut stats = DpStats { states: 1, widest_level: 1 };
    for _ in 0..size {
        let mut next: PathCountTable = HashMap::with_capacity(level.len() * 2);
        for (state, paths) in &level {
            for r in diagram.addable(state) {
                *next.entry(state.with(r)).or_default() += paths;
            }
        }
        stats.states += next.len();
        stats.widest_level = stats.widest_level.max(next.len());
        level = next;
    }
    debug_assert!(level.len() <= 1);
    let total = level.into_values().next().unwrap_or_default();
    Ok((total, stats))
}

/// Number of standard Young tableaux of a battery shape.
pub fn count_linear_extensions(shape: &BatteryShape, size_cap: usize) -> Result<Natural> {
    count_diagram(&Diagram::from(shape), size_cap).map(|(n, _)| n)
}

pub fn count_with_stats(shape: &BatteryShape, size_cap: usize) -> Result<(Natural, DpStats)> {
    count_diagram(&Diagram::from(shape), size_cap)
}

/// A filling of a diagram; `rows[r]` lists row `r`'s entries left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    diagram: Diagram,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries keyed by absolute `(row, column)`.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let start = self.diagram.rows[r].0;
            row.iter().enumerate().map(move |(j, &v)| ((r, start + j), v))
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.diagram.size().to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            let start = self.diagram.rows[r].0;
            let mut line = " ".repeat((width + 1) * start);
            for v in row {
                line.push_str(&format!("{v:>width$} "));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

pub fn enumerate_diagram(diagram: &Diagram, size_cap: usize) -> Result<Vec<Tableau>> {
    let cap = size_cap.min(ENUMERATION_LIMIT);
    let size = diagram.size();
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); diagram.rows.len()];
    let mut state = IdealState(vec![0; diagram.rows.len()]);
    fill(diagram, &mut state, &mut rows, 1, size, &mut out);
    Ok(out)
}

fn fill(
    diagram: &Diagram,
    state: &mut IdealState,
    rows: &mut Vec<Vec<usize>>,
    next: usize,
    size: usize,
    out: &mut Vec<Tableau>,
) {
    if next > size {
        out.push(Tableau { diagram: diagram.clone(), rows: rows.clone() });
        return;
    }
    let choices: Vec<usize> = diagram.addable(state).collect();
    for r in choices {
        state.0[r] += 1;
        rows[r].push(next);
        fill(diagram, state, rows, next + 1, size, out);
        rows[r].pop();
        state.0[r] -= 1;
    }
}

/// Every standard Young tableau of `shape`, for shapes of at most
/// [`ENUMERATION_LIMIT`] cells.
pub fn enumerate_syt(shape: &BatteryShape, size_cap: usize) -> Result<Vec<Tableau>> {
    enumerate_diagram(&Diagram::from(shape), size_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn battery(rows: &[usize], a: usize, k: usize) -> BatteryShape {
        BatteryShape::new(Partition::new(rows.to_vec()).unwrap(), a, k).unwrap()
    }

    #[test]
    fn count_examples() {
        let straight = BatteryShape::straight(Partition::new(vec![3, 2, 1]).unwrap());
        assert_eq!(count_linear_extensions(&straight, DEFAULT_SIZE_CAP).unwrap(), Natural::from(16u32));
        assert_eq!(count_linear_extensions(&battery(&[2, 2], 1, 2), 120).unwrap(), Natural::from(5u32));
        let empty = BatteryShape::straight(Partition::empty());
        assert_eq!(count_linear_extensions(&empty, 120).unwrap(), Natural::from(1u32));
    }

    #[test]
    fn size_cap_is_enforced() {
        let shape = battery(&[5, 5], 2, 2);
        assert_eq!(count_linear_extensions(&shape, 11), Err(Error::SizeCap { size: 12, cap: 11 }));
        assert!(enumerate_syt(&battery(&[4, 4, 4], 1, 1), 120).is_err());
    }

    #[test]
    fn enumerate_small() {
        let one = enumerate_syt(&battery(&[1], 0, 1), 12).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), &[vec![1]]);
        let two = enumerate_syt(&battery(&[2], 1, 2), 12).unwrap();
        assert_eq!(two.len(), 2);
    }

    #[test]
    fn skew_example() {
        // (4,3,2)/(2,1)
        let skew = SkewShape::new(Partition::new(vec![4, 3, 2]).unwrap(), Partition::new(vec![2, 1]).unwrap()).unwrap();
        let d = Diagram::from(&skew);
        let all = enumerate_diagram(&d, 12).unwrap();
        let (count, _) = count_diagram(&d, 120).unwrap();
        assert_eq!(Natural::from(all.len()), count);
        assert!(all.iter().any(|t| t.rows() == [vec![1, 6], vec![2, 3], vec![4, 5]]));
    }

    #[test]
    fn display_aligns_columns() {
        let t = enumerate_syt(&battery(&[2], 1, 2), 12).unwrap();
        let s = t[0].to_string();
        assert_eq!(s, "  1\n2 3\n");
    }

    #[test]
    fn rejects_non_convex_rows() {
        assert!(Diagram::new(vec![(0, 3), (0, 1), (0, 3)]).is_err());
        assert!(Diagram::new(vec![(2, 1)]).is_err());
    }
}
