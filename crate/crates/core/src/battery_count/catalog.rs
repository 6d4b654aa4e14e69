//! Closed rational formulas for special families of battery shapes.
//!
//! Each case is `f^(shape's rectangle)` times a rational expression in the
//! free parameters. Values are computed exactly and must come out integral.

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use super::{f_rect, integral, rect_label};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, Integer, Natural, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormCase {
    /// `[(m^n), 1, 2]`
    K2A1,
    /// `[(m^n), 2, 2]`
    K2A2,
    /// `[(m^n), 3, 2]`
    K2A3,
    /// `[(3^n), a, 2]`
    K2M3,
    /// `[(4^n), a, 2]`
    K2M4,
    /// `[(m^2), a, 2]`
    K2N2,
    /// `[(m^3), a, 2]`
    K2N3,
    /// `[(m^2), a, 3]`
    K3N2,
    /// `[(m^3), a, 3]`
    K3N3,
    /// `[(m^2), a, 4]`
    K4N2,
    /// `[(m^2), a, 5]`
    K5N2,
}

impl ClosedFormCase {
    pub const ALL: [ClosedFormCase; 11] = [
        Self::K2A1,
        Self::K2A2,
        Self::K2A3,
        Self::K2M3,
        Self::K2M4,
        Self::K2N2,
        Self::K2N3,
        Self::K3N2,
        Self::K3N3,
        Self::K4N2,
        Self::K5N2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::K2A1 => "k2-a1",
            Self::K2A2 => "k2-a2",
            Self::K2A3 => "k2-a3",
            Self::K2M3 => "k2-m3",
            Self::K2M4 => "k2-m4",
            Self::K2N2 => "k2-n2",
            Self::K2N3 => "k2-n3",
            Self::K3N2 => "k3-n2",
            Self::K3N3 => "k3-n3",
            Self::K4N2 => "k4-n2",
            Self::K5N2 => "k5-n2",
        }
    }

    /// Battery column index the case counts.
    pub fn k(self) -> usize {
        match self {
            Self::K3N2 | Self::K3N3 => 3,
            Self::K4N2 => 4,
            Self::K5N2 => 5,
            _ => 2,
        }
    }

    /// Whether the case covers `[(m^n), a, k]`. Also enforces `m >= k`.
    pub fn covers(self, m: usize, n: usize, a: usize, k: usize) -> bool {
        if k != self.k() || m < k || n == 0 {
            return false;
        }
        match self {
            Self::K2A1 => a == 1,
            Self::K2A2 => a == 2,
            Self::K2A3 => a == 3,
            Self::K2M3 => m == 3,
            Self::K2M4 => m == 4,
            Self::K2N2 | Self::K3N2 | Self::K4N2 | Self::K5N2 => n == 2,
            Self::K2N3 | Self::K3N3 => n == 3,
        }
    }

    /// First case in catalog order that covers the shape.
    pub fn matching(m: usize, n: usize, a: usize, k: usize) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.covers(m, n, a, k))
    }
}

impl fmt::Display for ClosedFormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClosedFormCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown closed-form case {s:?}")))
    }
}

fn c(x: Integer, k: &Integer) -> Result<Rational> {
    let k = k.to_usize().ok_or_else(|| Error::OutOfRange(format!("binomial lower index {k} out of range")))?;
    Ok(Rational::from(binomial(&x, k)))
}

fn ratio(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::OutOfRange("closed form has a vanishing denominator here".into()));
    }
    Ok(Rational::new(num, den))
}

fn quotient(num: Rational, den: Rational) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::OutOfRange("closed form has a vanishing denominator here".into()));
    }
    Ok(num / den)
}

/// Evaluates `case` at `(m, n, a)`. The parameter fixed by the case (for
/// example `a = 1` in [`ClosedFormCase::K2A1`]) must match.
pub fn closed_form(case: ClosedFormCase, m: usize, n: usize, a: usize) -> Result<Natural> {
    let k = case.k();
    if !case.covers(m, n, a, k) {
        return Err(Error::OutOfRange(format!("case {case} does not cover {}", rect_label(m, n, a, k))));
    }
    let f = Rational::from(Integer::from(f_rect(m, n)));
    let label = rect_label(m, n, a, k);
    let (m, n, a) = (&Integer::from(m), &Integer::from(n), &Integer::from(a));
    let factor = match case {
        ClosedFormCase::K2A1 => quotient(c(m * n + m, m)?, c(m * n + m - n, m)?)?,
        ClosedFormCase::K2A2 => {
            quotient(c(m * n + m, m)?, c(m * n + m - n + 1, &(m + 1))?)? * ratio(2 * m * n + m - n + 1, m + 1)?
        }
        ClosedFormCase::K2A3 => {
            let poly = m * m * (7 * n * n + 7 * n + 2) + m * (-7 * n * n + 9 * n + 6) + 2 * (n * n - 3 * n + 2);
            quotient(c(m * n + m, m)?, c(m * n - n + m + 2, &(m + 2))?)? * ratio(poly, 2 * (m + 2) * (m + 1))?
        }
        ClosedFormCase::K2M3 => {
            let poly = (n + 1) * (a * n + 2 * a + 8 * n + 4);
            quotient(c(3 * n + a, a)?, c(2 * n + a + 2, &(a + 1))?)? * ratio(poly, 2 * (2 * n + 1))?
        }
        ClosedFormCase::K2M4 => {
            let poly =
                (n + 1) * (a * a * (n + 2) * (n + 3) + a * (n + 2) * (29 * n + 15) + 18 * (3 * n + 1) * (3 * n + 2));
            quotient(c(4 * n + a, a)?, c(3 * n + a + 3, &(a + 1))?)? * ratio(poly, 6 * (3 * n + 1) * (3 * n + 2))?
        }
        ClosedFormCase::K2N2 => ratio((a + 1) * (a * (m + 1) + 4 * (2 * m - 1)), 4 * (2 * m - 1))?,
        ClosedFormCase::K2N3 => {
            let poly =
                (a + 1) * (a * a * (m + 1) * (m + 2) + a * (29 * m - 14) * (m + 1) + 18 * (3 * m - 1) * (3 * m - 2));
            ratio(poly, 18 * (3 * m - 1) * (3 * m - 2))?
        }
        ClosedFormCase::K3N2 => {
            let d = (2 * m - 1) * (2 * m - 3);
            let w = a * a * m * (m + 1) + a * (m + 1) * (19 * m - 24) + 24 * &d;
            ratio((a + 1) * (a + 2) * w, 48 * d)?
        }
        ClosedFormCase::K3N3 => {
            let d = (3 * m - 1) * (3 * m - 2) * (3 * m - 4) * (3 * m - 5);
            let w = a.pow(4) * m * Integer::from(m + 1u32).pow(2) * (m + 2)
                + 6 * a.pow(3) * m * (11 * m - 13) * (m + 1) * (m + 2)
                + a * a * Integer::from(m + 1u32).pow(2) * (1559 * m * m - 3722 * m + 2160)
                + 6 * a * (m + 1) * (2521 * m.pow(3) - 8169 * m * m + 8078 * m - 2280)
                + 648 * &d;
            ratio((a + 1) * (a + 2) * w, 1296 * d)?
        }
        ClosedFormCase::K4N2 => {
            let d = (2 * m - 1) * (2 * m - 3) * (2 * m - 5);
            let w = a.pow(3) * m * (m - 1) * (m + 1)
                + 3 * a * a * m * (m + 1) * (11 * m - 23)
                + 4 * a * (m + 1) * (95 * m * m - 338 * m + 270)
                + 192 * &d;
            ratio((a + 1) * (a + 2) * (a + 3) * w, 1152 * d)?
        }
        ClosedFormCase::K5N2 => {
            let d = (2 * m - 1) * (2 * m - 3) * (2 * m - 5) * (2 * m - 7);
            let w = a.pow(4) * m * (m - 1) * (m + 1) * (m - 2)
                + 2 * a.pow(3) * m * (m + 1) * (m - 1) * (25 * m - 74)
                + a * a * (m + 1) * m * (m - 2) * (971 * m - 3131)
                + 2 * a * (m + 1) * (4361 * m.pow(3) - 29979 * m * m + 63418 * m - 40320)
                + 1920 * &d;
            ratio((a + 1) * (a + 2) * (a + 3) * (a + 4) * w, 46080 * d)?
        }
    };
    integral(f * factor, label)
}
