//! Gaussian rational scalars: complex numbers with exact rational parts.
//!
//! `Scalar` is the field the whole crate computes over. Both parts are
//! arbitrary-precision rationals, kept reduced by the underlying rational
//! type, so equality of scalars is decidable and exact. The text form is
//! `a/b` for real values and `a/b+c/d*i` for complex values; no decimal
//! notation exists anywhere in the crate.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, ParseError};

/// Exact rational number with unbounded numerator and denominator.
pub type Rational = BigRational;

/// A complex number `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn real(re: Rational) -> Self {
        Scalar {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::real(Rational::from_integer(BigInt::from(n)))
    }

    /// Real scalar `num/den`. Panics if `den` is zero; intended for
    /// literals in tests and fixtures.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in scalar literal");
        Scalar::real(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Complex scalar `rn/rd + in_/id*i`. Panics on zero denominators;
    /// intended for literals in tests and fixtures.
    pub fn complex_ratio(rn: i64, rd: i64, in_: i64, id: i64) -> Self {
        assert!(rd != 0 && id != 0, "zero denominator in scalar literal");
        Scalar::new(
            Rational::new(BigInt::from(rn), BigInt::from(rd)),
            Rational::new(BigInt::from(in_), BigInt::from(id)),
        )
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, always a nonnegative rational. This is the squared
    /// modulus, so scalars can be compared by size exactly.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, or an error on zero.
    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Scalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.inv()?)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Panics on a zero divisor; use [`Scalar::checked_div`] when the divisor
/// is not already known to be nonzero.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + x)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}*i",
                fmt_rational(&self.re),
                fmt_rational(&-self.im.clone())
            )
        } else {
            write!(
                f,
                "{}+{}*i",
                fmt_rational(&self.re),
                fmt_rational(&self.im)
            )
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    if s.is_empty() {
        return Err("empty rational".to_string());
    }
    let (numer_text, denom_text) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(numer_text)
        .map_err(|_| format!("invalid integer {numer_text:?}"))?;
    let denom = match denom_text {
        None => BigInt::one(),
        Some(d) => {
            if !d.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(format!("denominator {d:?} must be an unsigned integer"));
            }
            let d = BigInt::from_str(d).map_err(|_| format!("invalid integer {d:?}"))?;
            if d.is_zero() {
                return Err("zero denominator".to_string());
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Parses the imaginary coefficient text with its leading sign already
/// attached, after the trailing `i` has been removed. An empty coefficient
/// (as in `i`, `+i`, `-i`) means one.
fn parse_imag_coefficient(body: &str) -> Result<Rational, String> {
    let body = body.strip_suffix('*').unwrap_or(body);
    match body {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        other => parse_rational(other),
    }
}

impl FromStr for Scalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let fail = |reason: String| ParseError::scalar("scalar literal", s, reason);
        if t.is_empty() {
            return Err(fail("empty".to_string()));
        }
        let Some(body) = t.strip_suffix('i') else {
            let re = parse_rational(t).map_err(fail)?;
            return Ok(Scalar::real(re));
        };
        // A sign after the first character separates the real part from
        // the imaginary part; exponents do not exist in this grammar.
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(pos, _)| pos);
        match split {
            None => {
                let im = parse_imag_coefficient(body).map_err(fail)?;
                Ok(Scalar::new(Rational::zero(), im))
            }
            Some(pos) => {
                let re = parse_rational(&body[..pos]).map_err(fail)?;
                let im = parse_imag_coefficient(&body[pos..]).map_err(fail)?;
                Ok(Scalar::new(re, im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(s("3"), Scalar::from_int(3));
        assert_eq!(s("-3"), Scalar::from_int(-3));
        assert_eq!(s("+3"), Scalar::from_int(3));
        assert_eq!(s("1/2"), Scalar::ratio(1, 2));
        assert_eq!(s("-7/4"), Scalar::ratio(-7, 4));
        assert_eq!(s("2/4"), Scalar::ratio(1, 2));
    }

    #[test]
    fn parses_complex_forms() {
        assert_eq!(s("1/2+1/3*i"), Scalar::complex_ratio(1, 2, 1, 3));
        assert_eq!(s("1/2-1/3*i"), Scalar::complex_ratio(1, 2, -1, 3));
        assert_eq!(s("2/3*i"), Scalar::complex_ratio(0, 1, 2, 3));
        assert_eq!(s("i"), Scalar::i());
        assert_eq!(s("-i"), Scalar::complex_ratio(0, 1, -1, 1));
        assert_eq!(s("1+i"), Scalar::complex_ratio(1, 1, 1, 1));
        assert_eq!(s("1-i"), Scalar::complex_ratio(1, 1, -1, 1));
        assert_eq!(s("0+1*i"), Scalar::i());
        assert_eq!(s("-1/2-3*i"), Scalar::complex_ratio(-1, 2, -3, 1));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1.5", "1/0", "1/-2", "1 / 2", "x", "1+2", "--3", "1/2+*"] {
            assert!(bad.parse::<Scalar>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(s("2/4").to_string(), "1/2");
        assert_eq!(s("3").to_string(), "3");
        assert_eq!(s("-3/1").to_string(), "-3");
        assert_eq!(s("1/2+1/3*i").to_string(), "1/2+1/3*i");
        assert_eq!(s("1/2-1/3*i").to_string(), "1/2-1/3*i");
        assert_eq!(s("i").to_string(), "1*i");
        assert_eq!(s("0").to_string(), "0");
        assert_eq!(s("-2/3*i").to_string(), "-2/3*i");
    }

    #[test]
    fn display_round_trips() {
        for text in ["0", "5", "-5", "1/2", "-9/7", "1/2+1/3*i", "4-2/5*i", "7*i", "-i"] {
            let v = s(text);
            assert_eq!(v.to_string().parse::<Scalar>().unwrap(), v);
        }
    }

    #[test]
    fn field_operations() {
        let a = s("1/2+1/3*i");
        let b = s("2-i");
        assert_eq!(&a + &b, s("5/2-2/3*i"));
        assert_eq!(&a - &b, s("-3/2+4/3*i"));
        assert_eq!(&a * &b, s("4/3+1/6*i"));
        let quotient = a.checked_div(&b).unwrap();
        assert_eq!(&quotient * &b, a);
        assert_eq!(a.conj(), s("1/2-1/3*i"));
        assert_eq!((&a * &a.conj()).re(), &a.norm_sq());
        assert!(Scalar::zero().inv().is_err());
        assert_eq!(s("2").inv().unwrap(), s("1/2"));
        assert_eq!(Scalar::i().inv().unwrap(), s("-i"));
    }

    #[test]
    fn conjugation_is_multiplicative() {
        let a = s("3/7-2*i");
        let b = s("-1+5/2*i");
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }
}
