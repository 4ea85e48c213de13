//! Closed-form counting: binomial coefficients, generalized Catalan numbers,
//! rational Catalan numbers, and their q-analogues (see [`poly`]).
//!
//! All results are exact. Operations that must produce an integer divide with
//! an explicit remainder check and surface a structured error instead of
//! truncating.

mod poly;

pub use poly::{q_binomial, q_catalan_normalized, q_integer, Poly};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// An `m`-row, `n`-column grid, the type parameter of every enumeration in
/// this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridShape {
    m: u64,
    n: u64,
}

impl GridShape {
    /// Both dimensions must be at least 1; degenerate grids are rejected.
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape { m, n });
        }
        Ok(GridShape { m, n })
    }

    /// Row count (number of U steps).
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Column count (number of R steps).
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Word length `m + n`.
    pub fn total(&self) -> u64 {
        self.m + self.n
    }

    pub fn gcd(&self) -> u64 {
        self.m.gcd(&self.n)
    }

    /// Block length `g = (m + n) / gcd(m, n)`. Always at least 2.
    pub fn block_len(&self) -> u64 {
        self.total() / self.gcd()
    }

    pub fn transpose(&self) -> GridShape {
        GridShape {
            m: self.n,
            n: self.m,
        }
    }
}

impl std::fmt::Display for GridShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// A positive rational slope `q = a / (b - a)` in its canonical form
/// `0 < a < b`, `gcd(a, b) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalSlope {
    a: u64,
    b: u64,
}

impl RationalSlope {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || a >= b || a.gcd(&b) != 1 {
            return Err(Error::InvalidSlope { p: a, r: b });
        }
        Ok(RationalSlope { a, b })
    }

    /// Canonicalizes the rational `q = p / r`: reduce to lowest terms
    /// `p' / r'`, then `a = p'`, `b = p' + r'`.
    pub fn from_rational(p: u64, r: u64) -> Result<Self> {
        if p == 0 || r == 0 {
            return Err(Error::InvalidSlope { p, r });
        }
        let g = p.gcd(&r);
        let a = p / g;
        let b = a + r / g;
        Ok(RationalSlope { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// Exact binomial coefficient `t! / (k! (t-k)!)`.
pub fn binomial<T: ExactInt>(t: u64, k: u64) -> Result<T> {
    if k > t {
        return Err(Error::BinomialDomain { t, k });
    }
    let k = k.min(t - k);
    let mut acc = T::one();
    for i in 1..=k {
        // acc is binomial(t - k + i - 1, i - 1); multiplying by (t - k + i)
        // and dividing by i lands on the next prefix binomial exactly.
        acc = acc * T::from_index(t - k + i);
        let (q, r) = acc.div_rem(&T::from_index(i));
        debug_assert!(r.is_zero());
        acc = q;
    }
    Ok(acc)
}

/// Generalized Catalan number `gcd(m, n) / (m + n) * binomial(m + n, n)`.
///
/// The quotient is always an integer; a non-zero remainder is reported as an
/// invariant violation rather than truncated.
pub fn c_gen<T: ExactInt>(shape: GridShape) -> Result<T> {
    let total = shape.total();
    let b: T = binomial(total, shape.n())?;
    let num = T::from_index(shape.gcd()) * b;
    let den = T::from_index(total);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            context: "generalized Catalan number",
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}

/// Rational Catalan number `binomial(a + b, a) / (a + b)` of a slope in
/// canonical form. Integral because `a` and `b` are coprime.
pub fn cat_rational<T: ExactInt>(slope: RationalSlope) -> Result<T> {
    let sum = slope.a() + slope.b();
    let num: T = binomial(sum, slope.a())?;
    let den = T::from_index(sum);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            context: "rational Catalan number",
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}
