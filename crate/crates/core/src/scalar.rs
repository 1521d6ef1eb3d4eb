//! Scalar kinds: exact Gaussian rationals and double-precision complex numbers.
//!
//! The two kinds are separate types, so mixing them is rejected at compile
//! time. Kernels whose algorithm depends on the kind (determinant, Pfaffian,
//! interpolation) are dispatched through the [`Scalar`] trait.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::polynomial::interp;

pub type C64 = Complex64;

/// Field operations shared by exact and floating matrices.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// True for the exact (Gaussian rational) kind.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn imag_unit() -> Self;
    /// Converts an exact value; exact for the exact kind, rounded for floats.
    fn from_exact(v: &GaussianRational) -> Self;
    /// The binary value of `v`, exactly (every finite f64 is a dyadic rational).
    fn from_f64(v: f64) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_c64(&self) -> C64;
    fn re_part(&self) -> Self;
    fn im_part(&self) -> Self;

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Real and imaginary parts as canonical text ("p/q" exact, 17 significant digits float).
    fn text_parts(&self) -> [String; 2];
    fn parse_parts(re: &str, im: &str) -> Result<Self>;

    /// Determinant of a square matrix (shape already checked).
    fn determinant_kernel(m: &Matrix<Self>) -> Self;

    /// Interpolation nodes for a univariate polynomial with `count` coefficients.
    fn interpolation_nodes(count: usize) -> Vec<Self>;

    /// Monomial coefficients of the polynomial taking `values` at `nodes`.
    fn interpolation_solve(nodes: &[Self], values: &[Self]) -> Vec<Self>;
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }
    fn one() -> Self {
        C64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        C64::new(v as f64, 0.0)
    }
    fn imag_unit() -> Self {
        C64::new(0.0, 1.0)
    }
    fn from_exact(v: &GaussianRational) -> Self {
        v.to_c64()
    }
    fn from_f64(v: f64) -> Self {
        C64::new(v, 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn re_part(&self) -> Self {
        C64::new(self.re, 0.0)
    }
    fn im_part(&self) -> Self {
        C64::new(self.im, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn text_parts(&self) -> [String; 2] {
        [format!("{:.16e}", self.re), format!("{:.16e}", self.im)]
    }
    fn parse_parts(re: &str, im: &str) -> Result<Self> {
        let p = |s: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|_| Error::Parse(format!("bad float '{s}'")))
        };
        Ok(C64::new(p(re)?, p(im)?))
    }
    fn determinant_kernel(m: &Matrix<Self>) -> Self {
        linalg::lu_determinant(m)
    }
    fn interpolation_nodes(count: usize) -> Vec<Self> {
        interp::roots_of_unity(count)
    }
    fn interpolation_solve(nodes: &[Self], values: &[Self]) -> Vec<Self> {
        interp::inverse_dft(nodes.len(), values)
    }
}

/// An exact complex number p/q + (r/s)·i with arbitrary-precision parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(int(re), int(im))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_c64(&self) -> C64 {
        C64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    pub fn inv(&self) -> Self {
        let d = self.norm_sqr();
        assert!(!d.is_zero(), "division by zero");
        Self::new(&self.re / &d, -&self.im / &d)
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Nearest f64 to an exact rational (via a correctly scaled quotient).
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Very large parts: shift both down to a comparable size first.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = nb - db;
    let scaled = if shift > 0 {
        q / BigRational::from_integer(BigInt::one() << (shift as usize))
    } else {
        q * BigRational::from_integer(BigInt::one() << ((-shift) as usize))
    };
    let base = scaled.numer().to_f64().unwrap_or(0.0) / scaled.denom().to_f64().unwrap_or(1.0);
    base * 2f64.powi(shift as i32)
}

/// Parses "p", "p/q", "-p/q" or a decimal such as "0.25" / "-1.5e-3" exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| Error::Parse(format!("bad numerator in '{s}'")))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| Error::Parse(format!("bad denominator in '{s}'")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in '{s}'")))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("bad number '{s}'")));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad number '{s}'")));
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(BigInt::from_str(if all.is_empty() { "0" } else { &all }).unwrap());
    let scale = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if neg { -value } else { value })
}

/// Formats a rational as "p" or "p/q".
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}i", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", format_rational(&self.re), sign, format_rational(&self.im.abs()))
            }
        }
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
    fn from_i64(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
    fn imag_unit() -> Self {
        Self::from_ints(0, 1)
    }
    fn from_exact(v: &GaussianRational) -> Self {
        v.clone()
    }
    fn from_f64(v: f64) -> Self {
        Self::real(BigRational::from_float(v).expect("finite f64"))
    }
    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn to_c64(&self) -> C64 {
        GaussianRational::to_c64(self)
    }
    fn re_part(&self) -> Self {
        Self::real(self.re.clone())
    }
    fn im_part(&self) -> Self {
        Self::real(self.im.clone())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::ratio(num, den)
    }
    fn text_parts(&self) -> [String; 2] {
        [format_rational(&self.re), format_rational(&self.im)]
    }
    fn parse_parts(re: &str, im: &str) -> Result<Self> {
        Ok(Self::new(parse_rational(re)?, parse_rational(im)?))
    }
    fn determinant_kernel(m: &Matrix<Self>) -> Self {
        linalg::exact_determinant(m)
    }
    fn interpolation_nodes(count: usize) -> Vec<Self> {
        (0..count as i64).map(Self::from_i64).collect()
    }
    fn interpolation_solve(nodes: &[Self], values: &[Self]) -> Vec<Self> {
        interp::newton_to_monomial(nodes, values)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussianRational::real(&a.re * &b.re);
    }
    GaussianRational::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
});
forward_binop!(Div, div, |a, b| {
    if b.im.is_zero() {
        assert!(!b.re.is_zero(), "division by zero");
        return GaussianRational::new(&a.re / &b.re, &a.im / &b.re);
    }
    a * &b.inv()
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign for GaussianRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = &*self * &rhs;
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let a = GaussianRational::new(BigRational::new(1.into(), 3.into()), int(2));
        let b = GaussianRational::new(int(-1), BigRational::new(1.into(), 7.into()));
        let q = &a / &b;
        assert_eq!(&q * &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        let i = GaussianRational::imag_unit();
        assert_eq!(&i * &i, GaussianRational::from_i64(-1));
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert_eq!(parse_rational("1.5e-1").unwrap(), BigRational::new(3.into(), 20.into()));
        assert_eq!(parse_rational("13/10").unwrap(), BigRational::new(13.into(), 10.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::ratio(-1, 4).to_string(), "-1/4");
        assert_eq!(GaussianRational::from_ints(0, -1).to_string(), "-1i");
        assert_eq!(GaussianRational::from_ints(2, -3).to_string(), "2-3i");
    }

    #[test]
    fn from_f64_is_exact_binary_value() {
        let v = GaussianRational::from_f64(0.1);
        assert_eq!(v.to_c64().re, 0.1);
        assert_ne!(v, GaussianRational::ratio(1, 10));
    }

    #[test]
    fn huge_rationals_convert() {
        let big = BigRational::new(BigInt::one() << 2000usize, (BigInt::one() << 1999usize) * BigInt::from(3));
        assert!((rational_to_f64(&big) - 2.0 / 3.0).abs() < 1e-15);
    }
}
