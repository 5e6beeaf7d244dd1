//! Arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rational` is a reduced fraction of big integers. [`GaussianRational`] is
//! a pair of rationals `re + im*i`; it is a field, and the squared modulus
//! `re^2 + im^2` is again an exact rational. The text format used in all
//! JSON interfaces is `"a/b"` for rationals and `"a/b+c/d*i"` for Gaussian
//! rationals (sign folded into the numerators).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ScalarParseError {
    #[error("empty numeric literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational `{0}`, expected `a` or `a/b`")]
    BadRational(String),
    #[error("malformed Gaussian rational `{0}`, expected `a/b+c/d*i`")]
    BadGaussian(String),
}

/// Parses `"a/b"` or a bare integer `"a"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim()).map_err(|_| ScalarParseError::BadInteger(t.trim().to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            if den.contains('/') {
                return Err(ScalarParseError::BadRational(s.to_string()));
            }
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ScalarParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Formats a rational canonically as `"a/b"` with the denominator always
/// present and positive.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// An exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// The squared modulus `re^2 + im^2`, an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussianRational { re, im }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.checked_inv().expect("division by zero");
        self * inv
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical form `a/b+c/d*i`, with a `-` fold when the imaginary
    /// numerator is negative, e.g. `1/1-3/4*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            let neg = -self.im.clone();
            write!(
                f,
                "{}-{}*i",
                format_rational(&self.re),
                format_rational(&neg)
            )
        } else {
            write!(
                f,
                "{}+{}*i",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarParseError;

    /// Accepts the canonical form `a/b+c/d*i` (or with `-`), a pure real
    /// `a/b`, and a pure imaginary `c/d*i`. Bare integers are allowed in
    /// place of any `a/b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarParseError::Empty);
        }
        let (real_part, imag_part) = match compact.strip_suffix("*i") {
            None => (compact.as_str(), None),
            Some(head) => {
                // The separating sign is the last '+' or '-' that starts the
                // imaginary component, i.e. not the leading sign at index 0.
                match head
                    .rfind(['+', '-'])
                    .filter(|&p| p > 0 && !head[..p].ends_with(['+', '-']))
                {
                    Some(pos) if head.as_bytes()[pos] == b'+' => {
                        (&head[..pos], Some(head[pos + 1..].to_string()))
                    }
                    Some(pos) => (&head[..pos], Some(format!("-{}", &head[pos + 1..]))),
                    None => ("", Some(head.to_string())),
                }
            }
        };
        let bad = || ScalarParseError::BadGaussian(s.trim().to_string());
        let re = if real_part.is_empty() {
            Rational::zero()
        } else {
            parse_rational(real_part).map_err(|_| bad())?
        };
        let im = match &imag_part {
            None => Rational::zero(),
            Some(t) if t == "-" => -Rational::one(),
            Some(t) if t.is_empty() => Rational::one(),
            Some(t) => parse_rational(t).map_err(|_| bad())?,
        };
        Ok(GaussianRational { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_parsing_reduces_and_normalizes_sign() {
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("6/-4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert_eq!(parse_rational(" -4 ").unwrap(), q(-4, 1));
    }

    #[test]
    fn rational_parse_errors() {
        assert_eq!(
            parse_rational("1/0"),
            Err(ScalarParseError::ZeroDenominator("1/0".into()))
        );
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn rational_format_round_trips() {
        for s in ["3/2", "-3/2", "0/1", "212/1"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(format_rational(&v), s);
        }
    }

    #[test]
    fn gaussian_parsing_accepts_canonical_and_short_forms() {
        let z: GaussianRational = "1/2+3/4*i".parse().unwrap();
        assert_eq!(z, GaussianRational::new(q(1, 2), q(3, 4)));
        let z: GaussianRational = "1/2-3/4*i".parse().unwrap();
        assert_eq!(z, GaussianRational::new(q(1, 2), q(-3, 4)));
        let z: GaussianRational = "-5".parse().unwrap();
        assert_eq!(z, GaussianRational::new(q(-5, 1), q(0, 1)));
        let z: GaussianRational = "2/3*i".parse().unwrap();
        assert_eq!(z, GaussianRational::new(q(0, 1), q(2, 3)));
        let z: GaussianRational = "-2/3*i".parse().unwrap();
        assert_eq!(z, GaussianRational::new(q(0, 1), q(-2, 3)));
        let z: GaussianRational = "1+1*i".parse().unwrap();
        assert_eq!(z, GaussianRational::new(q(1, 1), q(1, 1)));
    }

    #[test]
    fn gaussian_display_round_trips() {
        for s in ["1/2+3/4*i", "1/2-3/4*i", "0/1+1/1*i", "-4/1+0/1*i"] {
            let z: GaussianRational = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
    }

    #[test]
    fn gaussian_parse_rejects_garbage() {
        for s in ["", "i*i", "1/2+*j", "1//2+0/1*i", "1/2+2/3"] {
            let r: Result<GaussianRational, _> = s.parse();
            assert!(r.is_err(), "expected parse failure for {s:?}");
        }
    }

    #[test]
    fn field_arithmetic() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * i.clone(), GaussianRational::from_integer(-1));
        let z = GaussianRational::new(q(1, 1), q(1, 1));
        let w = GaussianRational::new(q(1, 1), q(-1, 1));
        // (1+i)/(1-i) = i
        assert_eq!(z.clone() / w.clone(), i);
        assert_eq!(z.clone() * w, GaussianRational::from_integer(2));
        assert_eq!(z.clone() - z.clone(), GaussianRational::zero());
        let inv = z.checked_inv().unwrap();
        assert_eq!(z * inv, GaussianRational::one());
        assert!(GaussianRational::zero().checked_inv().is_none());
    }

    #[test]
    fn conjugation_is_an_involution_and_norm_is_rational() {
        let z = GaussianRational::new(q(2, 3), q(-5, 7));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.norm_sqr(), q(2 * 2 * 49 + 25 * 9, 9 * 49));
        assert_eq!(
            z.clone() * z.conj(),
            GaussianRational::from_rational(z.norm_sqr())
        );
    }
}
