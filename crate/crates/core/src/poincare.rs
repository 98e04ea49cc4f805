//! Dense integer polynomials in `t` and the closed-form Poincaré polynomials
//! of the `SO(3)` and `SL(3, R)` representation spaces.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("genus must be at least 2, got {0}")]
    BadGenus(usize),
}

/// `coeffs[k]` is the coefficient of `t^k`; no trailing zeros, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder of long division, provided every step divides
    /// exactly in the integers (always the case for a divisor with leading
    /// coefficient `±1`).
    pub fn div_rem(&self, den: &Self) -> Result<(Self, Self), PolyError> {
        let dd = den.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `num / den`, failing unless the remainder is zero.
    pub fn div_exact(&self, den: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(den)?;
        if !r.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        Ok(q)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `(1 - t²)(1 - t⁴)`.
pub fn so3_denominator() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 0, -1]).mul(&IntPolynomial::from_i64(&[1, 0, 0, 0, -1]))
}

/// `-(1+t)^{2g} t^{e} + (1+t³)^{2g}` with `e = 2g + 2` for `w₂ = 0` and
/// `e = 2g` for `w₂ = 1`.
pub fn so3_numerator(w2: bool, g: usize) -> Result<IntPolynomial, PolyError> {
    if g < 2 {
        return Err(PolyError::BadGenus(g));
    }
    let two_g = u32::try_from(2 * g).map_err(|_| PolyError::BadGenus(g))?;
    let shift = if w2 { 2 * g } else { 2 * g + 2 };
    let left = IntPolynomial::from_i64(&[1, 1])
        .pow(two_g)
        .mul(&IntPolynomial::monomial(BigInt::one(), shift));
    let right = IntPolynomial::from_i64(&[1, 0, 0, 1]).pow(two_g);
    Ok(right.sub(&left))
}

/// Poincaré polynomial of the `SO(3)` representation space with second
/// Stiefel-Whitney class `w₂`.
pub fn pt_so3(w2: bool, g: usize) -> Result<IntPolynomial, PolyError> {
    so3_numerator(w2, g)?.div_exact(&so3_denominator())
}

/// Poincaré polynomial of the `SL(3, R)` representation space with `w₂`:
/// the `SO(3)` polynomial, plus one for the contractible Hitchin component
/// when `w₂ = 0`.
pub fn pt_sl3(w2: bool, g: usize) -> Result<IntPolynomial, PolyError> {
    let p = pt_so3(w2, g)?;
    Ok(if w2 { p } else { p.add(&IntPolynomial::one()) })
}
