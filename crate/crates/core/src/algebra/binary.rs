use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

use super::{MultiPoly, Vars};

/// Homogeneous polynomial in `x, y`, possibly zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm<K: Field> {
    poly: MultiPoly<K>,
}

impl<K: Field> BinaryForm<K> {
    pub fn new(poly: MultiPoly<K>) -> Result<Self> {
        let poly = poly.restrict_vars(&Vars::xy())?;
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous(poly.to_string()));
        }
        Ok(BinaryForm { poly })
    }

    pub fn poly(&self) -> &MultiPoly<K> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Degree of a nonzero form.
    pub fn degree(&self) -> Option<u32> {
        (!self.poly.is_zero()).then(|| self.poly.total_degree())
    }

    /// The same form over `x, y, z`.
    pub fn to_xyz(&self) -> MultiPoly<K> {
        self.poly.embed(&Vars::xyz()).expect("x, y are among x, y, z")
    }
}

impl<K: Field> fmt::Display for BinaryForm<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Split a ternary form of degree `d` as `F = sum_h F_h(x, y) z^(d-h)`.
///
/// Returns `[F_d, F_(d-1), ..., F_0]`.
pub fn homogeneous_decompose<K: Field>(f: &MultiPoly<K>) -> Result<Vec<BinaryForm<K>>> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    let f = f.restrict_vars(&Vars::xyz())?;
    let d = f.total_degree();
    let zi = 2;
    let by_z = f.coeffs_in(zi);
    (0..=d)
        .rev()
        .map(|h| {
            let k = (d - h) as usize;
            let part = by_z.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(f.vars()));
            BinaryForm::new(part)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::scalar::Rational;

    fn forms(s: &str) -> Vec<String> {
        let f: MultiPoly<Rational> = parse_poly(s, &Vars::xyz()).unwrap();
        homogeneous_decompose(&f)
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect()
    }

    #[test]
    fn decompositions() {
        assert_eq!(forms("x^2+y^2-z^2"), ["x^2+y^2", "0", "-1"]);
        assert_eq!(forms("3*x-y+5*z"), ["3*x-y", "5"]);
        assert_eq!(forms("z^3"), ["0", "0", "0", "1"]);
        let f: MultiPoly<Rational> = parse_poly("x^2+z", &Vars::xyz()).unwrap();
        assert!(homogeneous_decompose(&f).is_err());
    }
}
