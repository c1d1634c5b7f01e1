//! Exact coefficient fields.
//!
//! Everything in this crate is generic over [`Field`], which is implemented
//! for the rationals ([`Rational`]) and the Gaussian rationals
//! ([`GaussianRational`]). Floating point types are deliberately absent: the
//! algorithms rely on exact divisibility and exact zero tests.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::roots;
use crate::algebra::UniPoly;

/// Arbitrary precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// Which coefficient field a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FieldKind {
    /// The rationals.
    Q,
    /// The Gaussian rationals `Q(i)`.
    Qi,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Q => f.write_str("Q"),
            FieldKind::Qi => f.write_str("Qi"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Q" | "q" => Ok(FieldKind::Q),
            "Qi" | "qi" | "Q(i)" => Ok(FieldKind::Qi),
            other => Err(format!("unknown field `{other}` (expected Q or Qi)")),
        }
    }
}

/// An exact field of characteristic zero containing `Q`.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    const KIND: FieldKind;

    fn from_rational(q: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The imaginary unit, if the field contains one.
    fn imaginary_unit() -> Option<Self>;

    fn conj(&self) -> Self;

    fn real_part(&self) -> Rational;

    fn imag_part(&self) -> Rational;

    fn is_real(&self) -> bool {
        self.imag_part().is_zero()
    }

    /// Exact square root inside the field, if one exists. The returned root
    /// satisfies [`Field::has_canonical_sign`].
    fn sqrt(&self) -> Option<Self>;

    /// Positive real part, ties broken by positive imaginary part.
    fn has_canonical_sign(&self) -> bool {
        let re = self.real_part();
        if re.is_positive() {
            return true;
        }
        re.is_zero() && self.imag_part().is_positive()
    }

    /// All roots of `f` lying in this field, with multiplicities.
    fn field_roots(f: &UniPoly<Self>) -> Vec<(Self, usize)>;

    /// Multiplicative inverse. Panics on zero, like integer division.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Lossy conversion for plotting; `None` when the value is not real.
    fn to_f64(&self) -> Option<f64> {
        if !self.is_real() {
            return None;
        }
        rational_to_f64(&self.real_part())
    }

    /// Does the printed form need parentheses when used as a factor?
    fn is_compound(&self) -> bool {
        false
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> Option<f64> {
    ToPrimitive::to_f64(q).or_else(|| {
        let n = q.numer().to_f64()?;
        let d = q.denom().to_f64()?;
        Some(n / d)
    })
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Q;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn real_part(&self) -> Rational {
        self.clone()
    }

    fn imag_part(&self) -> Rational {
        Rational::zero()
    }

    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn field_roots(f: &UniPoly<Self>) -> Vec<(Self, usize)> {
        roots::rational_roots_q(f)
    }
}

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat(re, 1), rat(im, 1))
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl Add for GaussianRational {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::new(self.re * rhs.re, Rational::zero());
        }
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Self::new(re, im)
    }
}

impl Div for GaussianRational {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        if rhs.im.is_zero() {
            return Self::new(self.re / &rhs.re, self.im / &rhs.re);
        }
        let n = rhs.norm();
        let c = rhs.conj();
        let p = self * c;
        Self::new(p.re / &n, p.im / &n)
    }
}

impl Neg for GaussianRational {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", self.im)
        };
        if self.re.is_zero() {
            f.write_str(&im)
        } else if im.starts_with('-') {
            write!(f, "{}{}", self.re, im)
        } else {
            write!(f, "{}+{}", self.re, im)
        }
    }
}

impl Field for GaussianRational {
    const KIND: FieldKind = FieldKind::Qi;

    fn from_rational(q: Rational) -> Self {
        Self::from(q)
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Self::i())
    }

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    fn real_part(&self) -> Rational {
        self.re.clone()
    }

    fn imag_part(&self) -> Rational {
        self.im.clone()
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.im.is_zero() {
            if let Some(r) = rational_sqrt(&self.re) {
                return Some(Self::from(r));
            }
            return rational_sqrt(&-self.re.clone()).map(|r| Self::new(Rational::zero(), r));
        }
        // (c + d i)^2 = a + b i  =>  c^2 = (a + |w|)/2,  d = b / (2c)
        let m = rational_sqrt(&self.norm())?;
        let two = rat(2, 1);
        let c2 = (&self.re + &m) / &two;
        let c = rational_sqrt(&c2)?;
        if c.is_zero() {
            return None;
        }
        let d = &self.im / (&two * &c);
        let root = Self::new(c, d);
        debug_assert_eq!(root.clone() * root.clone(), self.clone());
        Some(root)
    }

    fn field_roots(f: &UniPoly<Self>) -> Vec<(Self, usize)> {
        roots::rational_roots_qi(f)
    }

    fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

/// Promote a rational value into any field.
pub fn promote<K: Field>(q: &Rational) -> K {
    K::from_rational(q.clone())
}

/// Parse an integer or `p/q` literal.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    #[test]
    fn gaussian_field_ops() {
        let a = g(1, 2);
        let b = g(3, -1);
        assert_eq!(a.clone() * b.clone(), g(5, 5));
        assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.norm(), rat(5, 1));
        assert!(g(0, 0).norm().is_zero());
    }

    #[test]
    fn square_roots() {
        assert_eq!(rat(9, 4).sqrt(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).sqrt(), None);
        assert_eq!(rat(-4, 1).sqrt(), None);
        assert_eq!(g(-4, 0).sqrt(), Some(g(0, 2)));
        assert_eq!(g(0, 2).sqrt(), Some(g(1, 1)));
        assert_eq!(g(3, 4).sqrt(), Some(g(2, 1)));
        assert_eq!(g(2, 0).sqrt(), None);
        assert_eq!(g(0, -2).sqrt(), Some(g(1, -1)));
        assert!(g(0, -2).sqrt().unwrap().has_canonical_sign());
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(0, 1).to_string(), "i");
        assert_eq!(g(2, -1).to_string(), "2-i");
        assert_eq!(GaussianRational::new(rat(1, 2), rat(-3, 4)).to_string(), "1/2-3/4*i");
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
