//! Exact integer and rational arithmetic.
//!
//! The numeric types are the `num` family's arbitrary-precision integers and
//! rationals. `BigRational` normalizes on construction and after every
//! operation, so equal values compare equal structurally.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Natural = BigUint;
pub type Integer = BigInt;
pub type Rational = BigRational;

/// Rising factorial `x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Integer, n: usize) -> Integer {
    let mut acc = Integer::one();
    let mut factor = x.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Integer::zero();
        }
        acc *= &factor;
        factor += 1;
    }
    acc
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`.
///
/// Defined through the falling factorial, so negative `x` is allowed and
/// `binomial(-z + k - 1, k) = (-1)^k binomial(z, k)` holds.
pub fn binomial(x: &Integer, k: usize) -> Integer {
    // Each prefix x(x-1)...(x-i)/(i+1)! is itself a binomial coefficient,
    // so the division is exact at every step.
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (x - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> Natural {
    (2..=n).fold(Natural::one(), |acc, i| acc * i)
}

/// Returns the integer value of `q`, or `None` if it has a non-unit denominator.
pub fn to_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}

pub fn to_natural(q: &Rational) -> Option<Natural> {
    to_integer(q).and_then(|i| i.to_biguint())
}

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Natural {
        self.factors.iter().fold(Natural::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    fn push(&mut self, p: Natural) {
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => self.factors.push((p, 1)),
        }
    }
}

/// Renders as `2^5*3^2*11`, omitting exponents equal to one. The empty
/// factorization (of 1) renders as `1`.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Trial division stops here; a cofactor below `TRIAL_LIMIT^2` is prime.
const TRIAL_LIMIT: u64 = 2_000_000;
const RHO_BUDGET: u64 = 1 << 22;
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub fn factorize(n: &Natural) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::FactorizeZero);
    }
    let mut out = Factorization::default();
    let mut rest = n.clone();

    for p in [2u64, 3] {
        while (&rest % p).is_zero() {
            rest /= p;
            out.push(Natural::from(p));
        }
    }
    // 6k +- 1 wheel
    let mut d = 5u64;
    let mut step = 2u64;
    while d <= TRIAL_LIMIT && Natural::from(d * d) <= rest {
        if let Some(small) = rest.to_u64() {
            // same loop, machine words
            let mut r = small;
            while d * d <= r {
                while r % d == 0 {
                    r /= d;
                    out.push(Natural::from(d));
                }
                d += step;
                step = 6 - step;
                if d > TRIAL_LIMIT {
                    break;
                }
            }
            rest = Natural::from(r);
            break;
        }
        while (&rest % d).is_zero() {
            rest /= d;
            out.push(Natural::from(d));
        }
        d += step;
        step = 6 - step;
    }

    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if m < Natural::from(TRIAL_LIMIT) * TRIAL_LIMIT || is_probable_prime(&m) {
                out.push(m);
                continue;
            }
            let f = pollard_brent(&m).ok_or_else(|| Error::FactorizationIncomplete(m.to_string()))?;
            let g = &m / &f;
            stack.push(f);
            stack.push(g);
        }
    }
    out.factors.sort();
    Ok(out)
}

/// Strong-pseudoprime test to the first thirteen prime bases; deterministic
/// for every `n < 3.3 * 10^24`.
pub fn is_probable_prime(n: &Natural) -> bool {
    let two = Natural::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &WITNESSES {
        if *n == Natural::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &w in &WITNESSES {
        let mut x = Natural::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the
/// composite `n`, or `None` if the budget runs out.
fn pollard_brent(n: &Natural) -> Option<Natural> {
    if n.is_even() {
        return Some(Natural::from(2u32));
    }
    let mut spent = 0u64;
    for c in 1u32.. {
        let c = Natural::from(c);
        let step = |x: &Natural| (x * x + &c) % n;
        let mut y = Natural::from(2u32);
        let mut r = 1u64;
        let mut q = Natural::one();
        let mut g = Natural::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += batch;
                spent += batch;
            }
            r *= 2;
            if spent > RHO_BUDGET {
                return None;
            }
        }
        if g == *n {
            // batch overshot; retrace one step at a time
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(5), 0), int(1));
        assert_eq!(pochhammer(&int(3), 2), int(12));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
        assert_eq!(pochhammer(&int(-3), 2), int(6));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(-3), 2), int(6));
        assert_eq!(binomial(&int(4), 0), int(1));
        assert_eq!(binomial(&int(3), 5), int(0));
        assert_eq!(binomial(&int(-1), 3), int(-1));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), Natural::from(1u32));
        assert_eq!(factorial(6), Natural::from(720u32));
        assert_eq!(factorial(10), Natural::from(3_628_800u32));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&Natural::from(12u32)).unwrap();
        assert_eq!(f.factors(), &[(Natural::from(2u32), 2), (Natural::from(3u32), 1)]);
        assert_eq!(f.to_string(), "2^2*3");
        assert!(factorize(&Natural::from(1u32)).unwrap().is_empty());
        assert_eq!(factorize(&Natural::zero()), Err(Error::FactorizeZero));
    }

    #[test]
    fn large_prime_factor() {
        let p = Natural::from(2_839_893_182_041u64);
        let f = factorize(&p).unwrap();
        assert_eq!(f.factors(), &[(p, 1)]);
    }

    #[test]
    fn semiprime_beyond_trial_limit() {
        let p = Natural::from(3_361_178_017u64);
        let q = Natural::from(2_839_893_182_041u64);
        let f = factorize(&(&p * &q * 4u32)).unwrap();
        assert_eq!(f.to_string(), "2^2*3361178017*2839893182041");
    }

    #[test]
    fn primality_of_small_numbers() {
        let primes: Vec<u32> = (0..60).filter(|&n| is_probable_prime(&Natural::from(n))).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        // strong pseudoprime to base 2
        assert!(!is_probable_prime(&Natural::from(2047u32)));
    }
}
