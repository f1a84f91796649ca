//! Exact scalars.
//!
//! Everything in this crate is computed over a field of characteristic zero
//! represented exactly: the rationals [`Q`] for ordinary bicomplexes and the
//! Gaussian rationals [`QI`] (standing in for ℂ) for bicomplexes with a real
//! structure.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Q = BigRational;

/// Gaussian rational `re + i·im`.
pub type QI = Complex<BigRational>;

/// The operations the linear algebra layer needs from a scalar.
///
/// Methods take references so that big-number scalars are not cloned on
/// every arithmetic step.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_q(q: &Q) -> Self;
    /// Field conjugation; the identity on ℚ.
    fn conj(&self) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_q(&Q::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_q(q: &Q) -> Self {
        q.clone()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Field for QI {
    fn zero() -> Self {
        Complex::new(<Q as Zero>::zero(), <Q as Zero>::zero())
    }
    fn one() -> Self {
        Complex::new(<Q as One>::one(), <Q as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!Zero::is_zero(&norm), "inverse of zero");
        Complex::new(&self.re / &norm, -(&self.im / &norm))
    }
    fn from_q(q: &Q) -> Self {
        Complex::new(q.clone(), <Q as Zero>::zero())
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }
}

/// The imaginary unit.
pub fn imag_unit() -> QI {
    Complex::new(<Q as Zero>::zero(), <Q as One>::one())
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Q {
    if n < 0 || k < 0 || k > n {
        return <Q as Zero>::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(acc)
}

/// Entry of the Leibniz harmonic triangle, `1 / (l · C(k, l))` for `1 <= l <= k`.
pub fn leibniz(k: i64, l: i64) -> Q {
    assert!(l >= 1 && l <= k, "Leibniz triangle entry L({k},{l}) is undefined");
    (q(l) * binomial(k, l)).recip()
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("malformed fraction {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"a"` or `"a/b"` into a reduced rational.
pub fn parse_q(text: &str) -> Result<Q, ScalarParseError> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| ScalarParseError::Malformed(text.to_string()))?;
    let den = BigInt::from_str(den).map_err(|_| ScalarParseError::Malformed(text.to_string()))?;
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Q::new(num, den))
}

/// Canonical text of a rational: `"a"` for integers, `"a/b"` otherwise, `b > 0`.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        debug_assert!(x.denom().is_positive());
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leibniz_rows_match_the_harmonic_triangle() {
        assert_eq!(leibniz(1, 1), q(1));
        assert_eq!(leibniz(2, 1), q_frac(1, 2));
        assert_eq!(leibniz(2, 2), q_frac(1, 2));
        assert_eq!(leibniz(3, 2), q_frac(1, 6));
        assert_eq!(leibniz(4, 2), q_frac(1, 12));
        assert_eq!(leibniz(5, 3), q_frac(1, 30));
        // each entry is the sum of the two below it
        for k in 1..8 {
            for l in 1..=k {
                assert_eq!(leibniz(k, l), leibniz(k + 1, l) + leibniz(k + 1, l + 1));
            }
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), q(1));
        assert_eq!(binomial(5, -1), q(0));
        assert_eq!(binomial(5, 6), q(0));
        assert_eq!(binomial(6, 3), q(20));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("4/-6").unwrap(), q_frac(-2, 3));
        assert_eq!(format_q(&parse_q("4/-6").unwrap()), "-2/3");
        assert_eq!(format_q(&parse_q(" 8/4 ").unwrap()), "2");
        assert!(matches!(parse_q("1/0"), Err(ScalarParseError::ZeroDenominator(_))));
        assert!(matches!(parse_q("x/2"), Err(ScalarParseError::Malformed(_))));
    }

    #[test]
    fn gaussian_inverse() {
        let z = QI::new(q(1), q(2));
        assert!(Field::is_one(&Field::mul(&z, &Field::inv(&z))));
        assert_eq!(Field::conj(&z), QI::new(q(1), q(-2)));
    }
}
