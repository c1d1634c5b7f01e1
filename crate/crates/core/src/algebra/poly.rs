use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use crate::error::{Error, Result};
use crate::scalar::{Field, GaussianRational, Rational};

use super::UniPoly;

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// The projective plane coordinates `x, y, z`.
    pub fn xyz() -> Self {
        Self::new(&["x", "y", "z"])
    }

    pub fn xy() -> Self {
        Self::new(&["x", "y"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then the first variable dominates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<K> {
    vars: Vars,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: K) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, K::one())
    }

    pub fn from_i64(vars: &Vars, n: i64) -> Self {
        Self::constant(vars, K::from_i64(n))
    }

    /// The variable with the given index.
    pub fn var(vars: &Vars, index: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[index] = 1;
        Self::monomial(vars, e, K::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        Ok(Self::var(vars, vars.index(name)?))
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: K) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, K)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> K {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<K> {
        if self.is_zero() {
            Some(K::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.0.len(), self.nvars());
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn min_total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).min().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Largest power of `var` dividing every term.
    pub fn order_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> K {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(K::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.degree() == degree {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        p
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K) -> Self {
        let mut p = Self::zero(&self.vars);
        if c.is_zero() {
            return p;
        }
        for (e, v) in &self.terms {
            p.terms.insert(e.mul(m), v.clone() * c.clone());
        }
        p
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "variable mismatch: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divide by the graded-lex leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Equality up to a nonzero scalar factor.
    pub fn eq_up_to_scalar(&self, other: &Self) -> bool {
        self.monic() == other.monic()
    }

    pub fn eval(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.nvars());
        let mut powers: Vec<Vec<K>> = point.iter().map(|p| vec![K::one(), p.clone()]).collect();
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().clone() * point[i].clone();
                    pw.push(next);
                }
                t = t * pw[e as usize].clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Replace every variable by a polynomial over `target` variables.
    pub fn compose(&self, images: &[MultiPoly<K>], target: &Vars) -> Self {
        assert_eq!(images.len(), self.nvars());
        let mut powers: Vec<Vec<MultiPoly<K>>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(target), p.clone()])
            .collect();
        let mut acc = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitute `var := image` (same variable list).
    pub fn substitute(&self, var: usize, image: &MultiPoly<K>) -> Self {
        self.check_vars(image);
        let images: Vec<_> = (0..self.nvars())
            .map(|i| {
                if i == var {
                    image.clone()
                } else {
                    Self::var(&self.vars, i)
                }
            })
            .collect();
        self.compose(&images, &self.vars)
    }

    /// Substitute a scalar value for one variable.
    pub fn specialize(&self, var: usize, value: &K) -> Self {
        let mut p = Self::zero(&self.vars);
        let mut powers = vec![K::one()];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().clone() * value.clone();
                powers.push(next);
            }
            let mut m2 = m.clone();
            m2.0[var] = 0;
            p.add_term(m2, c.clone() * powers[e].clone());
        }
        p
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            p.add_term(m2, c.clone() * K::from_i64(e as i64));
        }
        p
    }

    /// Coefficients with respect to `var`: `self = sum_k coeffs[k] * var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly<K>> {
        let n = if self.is_zero() {
            0
        } else {
            self.degree_in(var) as usize + 1
        };
        let mut out = vec![Self::zero(&self.vars); n];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let k = m2.0[var] as usize;
            m2.0[var] = 0;
            out[k].terms.insert(m2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &Vars, var: usize, coeffs: &[MultiPoly<K>]) -> Self {
        let mut p = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2.0[var] += k as u32;
                p.add_term(m2, v.clone());
            }
        }
        p
    }

    /// View as a univariate polynomial; fails if other variables occur.
    pub fn to_univariate(&self, var: usize) -> Option<UniPoly<K>> {
        let coeffs = self.coeffs_in(var);
        let mut out = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            out.push(c.constant_value()?);
        }
        Some(UniPoly::new(out))
    }

    pub fn from_univariate(vars: &Vars, var: usize, f: &UniPoly<K>) -> Self {
        let mut p = Self::zero(vars);
        for (k, c) in f.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[var] = k as u32;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Re-express over another variable list, matching variables by name.
    pub fn embed(&self, target: &Vars) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index(n))
            .collect::<Result<_>>()?;
        let mut p = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i]] += x;
                }
            }
            p.add_term(Monomial(e), c.clone());
        }
        Ok(p)
    }

    /// Like [`MultiPoly::embed`], but variables missing from `target` must not occur.
    pub fn restrict_vars(&self, target: &Vars) -> Result<Self> {
        let mut p = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    let name = &self.vars.names()[i];
                    e[target.index(name)?] = x;
                }
            }
            p.add_term(Monomial(e), c.clone());
        }
        Ok(p)
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        let mut p = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(K::conj)
    }

    /// Promote into `Q(i)`.
    pub fn to_gaussian(&self) -> MultiPoly<GaussianRational> {
        self.map_coeffs(|c| GaussianRational::new(c.real_part(), c.imag_part()))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Field::is_real)
    }

    /// Real projection; `None` if some coefficient has an imaginary part.
    pub fn to_rational(&self) -> Option<MultiPoly<Rational>> {
        if !self.is_real() {
            return None;
        }
        Some(self.map_coeffs(|c| c.real_part()))
    }

    /// Multiply a homogeneous-in-spirit polynomial up to `degree` by powers of `var`.
    pub fn homogenize(&self, var: usize, degree: u32) -> Result<Self> {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let d = m.degree();
            if d > degree {
                return Err(Error::NotHomogeneous(format!(
                    "term of degree {d} exceeds target degree {degree}"
                )));
            }
            let mut m2 = m.clone();
            m2.0[var] += degree - d;
            p.add_term(m2, c.clone());
        }
        Ok(p)
    }

    /// Divide out the largest power of `var` dividing the polynomial.
    pub fn strip_var(&self, var: usize) -> (Self, u32) {
        let k = self.order_in(var);
        if k == 0 {
            return (self.clone(), 0);
        }
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.0[var] -= k;
            p.terms.insert(m2, c.clone());
        }
        (p, k)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Result<Option<Self>> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.vars != g.vars {
            return Err(Error::VariableMismatch(
                format!("{:?}", self.vars),
                format!("{:?}", g.vars),
            ));
        }
        let (glm, glc) = g.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let ginv = glc.inv();
        if g.num_terms() == 1 {
            let mut q = Self::zero(&self.vars);
            for (m, c) in &self.terms {
                if !glm.divides(m) {
                    return Ok(None);
                }
                q.terms.insert(glm.quotient_of(m), c.clone() * ginv.clone());
            }
            return Ok(Some(q));
        }
        let mut rem = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            if !glm.divides(m) {
                return Ok(None);
            }
            let qm = glm.quotient_of(m);
            let qc = c.clone() * ginv.clone();
            for (gm, gc) in &g.terms {
                rem.add_term(gm.mul(&qm), -(gc.clone() * qc.clone()));
            }
            q.terms.insert(qm, qc);
        }
        Ok(Some(q))
    }

    /// Repeatedly divide by `g`; returns the quotient and the exponent.
    pub fn divide_out(&self, g: &Self) -> Result<(Self, u32)> {
        if g.is_constant() {
            return Ok((self.clone(), 0));
        }
        let mut cur = self.clone();
        let mut k = 0;
        while !cur.is_zero() {
            match cur.exact_div(g)? {
                Some(q) => {
                    cur = q;
                    k += 1;
                }
                None => break,
            }
        }
        Ok((cur, k))
    }

    pub fn divides(&self, f: &Self) -> bool {
        matches!(f.exact_div(self), Ok(Some(_)))
    }
}

impl<K: Field> Add for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn add(self, rhs: &MultiPoly<K>) -> MultiPoly<K> {
        self.check_vars(rhs);
        let (mut acc, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c.clone());
        }
        acc
    }
}

impl<K: Field> Sub for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn sub(self, rhs: &MultiPoly<K>) -> MultiPoly<K> {
        self.check_vars(rhs);
        let mut acc = self.clone();
        for (m, c) in &rhs.terms {
            acc.add_term(m.clone(), -c.clone());
        }
        acc
    }
}

impl<K: Field> Mul for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn mul(self, rhs: &MultiPoly<K>) -> MultiPoly<K> {
        self.check_vars(rhs);
        let mut acc = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                acc.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        acc
    }
}

impl<K: Field> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn neg(self) -> MultiPoly<K> {
        self.scale(&-K::one())
    }
}

impl<K: Field> Add for MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn add(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        &self + &rhs
    }
}

impl<K: Field> Sub for MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn sub(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        &self - &rhs
    }
}

impl<K: Field> Mul for MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn mul(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        &self * &rhs
    }
}

impl<K: Field> Neg for MultiPoly<K> {
    type Output = MultiPoly<K>;

    fn neg(self) -> MultiPoly<K> {
        -&self
    }
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::serialize(self))
    }
}

impl<K: Field> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({:?}: {})", self.vars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, GaussianRational};

    type P = MultiPoly<Rational>;

    fn xyz() -> (P, P, P) {
        let v = Vars::xyz();
        (P::var(&v, 0), P::var(&v, 1), P::var(&v, 2))
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![2, 0, 0]);
        let b = Monomial(vec![0, 3, 0]);
        let c = Monomial(vec![1, 1, 0]);
        let d = Monomial(vec![0, 2, 0]);
        assert!(b > a);
        assert!(a > c);
        assert!(c > d);
    }

    #[test]
    fn difference_of_squares_divides() {
        let (x, y, _) = xyz();
        let f = &(&x * &x) - &(&y * &y);
        let g = &x - &y;
        assert_eq!(f.exact_div(&g).unwrap(), Some(&x + &y));
        assert_eq!(g.exact_div(&(&x + &(&y * &y))).unwrap(), None);
    }

    #[test]
    fn circle_times_x_squared() {
        let (x, y, z) = xyz();
        let circle = &(&(&x * &x) + &(&y * &y)) - &(&z * &z);
        let f = &(&x * &x) * &circle;
        assert_eq!(f.exact_div(&circle).unwrap(), Some(&x * &x));
        assert_eq!(f.divide_out(&x).unwrap(), (circle.clone(), 2));
    }

    #[test]
    fn gaussian_factor() {
        let v = Vars::new(&["x"]);
        let x = MultiPoly::<GaussianRational>::var(&v, 0);
        let i = MultiPoly::constant(&v, GaussianRational::i());
        let f = &(&x * &x) + &MultiPoly::one(&v);
        assert_eq!(f.exact_div(&(&x + &i)).unwrap(), Some(&x - &i));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let (x, _, _) = xyz();
        assert_eq!(x.exact_div(&P::zero(x.vars())), Err(Error::DivisionByZero));
    }

    #[test]
    fn coefficient_views_round_trip() {
        let (x, y, z) = xyz();
        let f = &(&(&x * &y) * &z) + &(&(&z * &z).scale(&rat(3, 2)) - &y);
        let cs = f.coeffs_in(2);
        assert_eq!(cs.len(), 3);
        assert_eq!(P::from_coeffs_in(f.vars(), 2, &cs), f);
        assert_eq!(f.specialize(2, &rat(1, 1)), &(&(&x * &y) + &P::constant(f.vars(), rat(3, 2))) - &y);
    }

    #[test]
    fn homogeneity_and_parts() {
        let (x, y, z) = xyz();
        let f = &(&x * &x) + &(&y * &z);
        assert!(f.is_homogeneous());
        assert!(!(&f + &x).is_homogeneous());
        assert_eq!((&f + &x).homogeneous_part(1), x);
    }
}
