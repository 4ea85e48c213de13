//! Dense polynomials in `q` and the q-analogues built from them.
//!
//! Coefficients live in any [`ExactInt`] scalar. The representation is
//! canonical: no trailing zero coefficients, the zero polynomial is the empty
//! vector. Degrees stay small here (at most `m * n` for the q-Catalan
//! polynomial), so dense storage and schoolbook multiplication are the right
//! tools.

use crate::error::{Error, Result};
use crate::exactmath::GridShape;
use crate::scalar::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: ExactInt> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros into canonical form.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    /// Ascending coefficients; index = exponent of `q`.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Poly<T>) -> Poly<T> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Long division that must leave no remainder. A non-exact step or a
    /// non-zero final remainder is surfaced as [`Error::NotDivisible`] with
    /// the offending operands, never truncated.
    pub fn exact_div(&self, divisor: &Poly<T>, context: &'static str) -> Result<Poly<T>> {
        let fail = || Error::NotDivisible {
            context,
            numerator: self.to_string(),
            denominator: divisor.to_string(),
        };
        if divisor.is_zero() {
            return Err(fail());
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let sd = self.coeffs.len() - 1;
        let dd = divisor.coeffs.len() - 1;
        if sd < dd {
            return Err(fail());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quotient = vec![T::zero(); sd - dd + 1];
        for pos in (dd..=sd).rev() {
            if rem[pos].is_zero() {
                continue;
            }
            let (qc, r) = rem[pos].div_rem(lead);
            if !r.is_zero() {
                return Err(fail());
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[pos - dd + j] = rem[pos - dd + j].clone() - qc.clone() * dc.clone();
            }
            quotient[pos - dd] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(fail());
        }
        Ok(Poly::new(quotient))
    }

    /// Specialization at `q = 1`: the sum of the coefficients.
    pub fn eval_one(&self) -> T {
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }
}

impl<T: ExactInt> std::fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff_is_one = c.is_one();
            match (i, coeff_is_one) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// The q-integer `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_integer<T: ExactInt>(k: u64) -> Result<Poly<T>> {
    if k == 0 {
        return Err(Error::ZeroQInteger);
    }
    let len = usize::try_from(k).expect("q-integer order fits in memory");
    Ok(Poly::new(vec![T::one(); len]))
}

/// Gaussian binomial coefficient `[t choose k]_q`, computed by iterated
/// multiply-then-exact-divide: each prefix product is itself a q-binomial,
/// so every division step is exact.
pub fn q_binomial<T: ExactInt>(t: u64, k: u64) -> Result<Poly<T>> {
    if k > t {
        return Err(Error::BinomialDomain { t, k });
    }
    let mut acc = Poly::one();
    for i in 1..=k {
        acc = acc
            .mul(&q_integer(t - k + i)?)
            .exact_div(&q_integer(i)?, "q-binomial prefix")?;
    }
    Ok(acc)
}

/// Normalized rational q-Catalan polynomial
/// `[gcd(m,n)]_q * [m+n choose n]_q / [m+n]_q`.
///
/// The division is performed in the polynomial ring and must be exact; a
/// non-zero remainder surfaces as [`Error::NotDivisible`]. Its value at
/// `q = 1` is the generalized Catalan number of the shape.
pub fn q_catalan_normalized<T: ExactInt>(shape: GridShape) -> Result<Poly<T>> {
    let numerator = q_integer::<T>(shape.gcd())?.mul(&q_binomial(shape.total(), shape.n())?);
    numerator.exact_div(&q_integer(shape.total())?, "normalized q-Catalan")
}
