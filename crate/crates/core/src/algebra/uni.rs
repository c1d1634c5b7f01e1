use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Field;

/// Dense univariate polynomial, coefficients in ascending order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// `t - r`.
    pub fn linear_root(r: K) -> Self {
        Self::new(vec![-r, K::one()])
    }

    /// `prod (t - r_i)`.
    pub fn from_roots(roots: &[K]) -> Self {
        roots
            .iter()
            .fold(Self::constant(K::one()), |acc, r| &acc * &Self::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn eval(&self, t: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * K::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.leading().inv();
        let mut rem = self.coeffs.clone();
        let mut q = vec![K::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &K) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear_root(r.clone());
        let mut cur = self.clone();
        let mut k = 0;
        while let Some(q) = cur.exact_div(&lin) {
            cur = q;
            k += 1;
        }
        k
    }

    /// `f(t) -> f(t + s)`.
    pub fn shift(&self, s: &K) -> Self {
        let lin = Self::new(vec![s.clone(), K::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<K: Field> Add for &UniPoly<K> {
    type Output = UniPoly<K>;

    fn add(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<K: Field> Sub for &UniPoly<K> {
    type Output = UniPoly<K>;

    fn sub(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<K: Field> Mul for &UniPoly<K> {
    type Output = UniPoly<K>;

    fn mul(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<K: Field> Neg for &UniPoly<K> {
    type Output = UniPoly<K>;

    fn neg(self) -> UniPoly<K> {
        self.scale(&-K::one())
    }
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}
