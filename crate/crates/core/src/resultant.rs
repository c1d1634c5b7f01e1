//! Determinants of polynomial matrices, the conchoid matrix and Sylvester
//! resultants.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{homogeneous_decompose, Monomial, MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::scalar::{rat, Field};

/// Dense matrix with polynomial entries over a common variable list.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<K: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly<K>>,
}

impl<K: Field> PolyMatrix<K> {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly<K>>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let vars = entries[0].vars().clone();
        if let Some(e) = entries.iter().find(|e| *e.vars() != vars) {
            return Err(Error::VariableMismatch(
                format!("{:?}", vars),
                format!("{:?}", e.vars()),
            ));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly<K>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn vars(&self) -> &Vars {
        self.entries[0].vars()
    }

    pub fn entries(&self) -> &[MultiPoly<K>] {
        &self.entries
    }

    /// Entry-wise evaluation at a point.
    pub fn eval(&self, point: &[K]) -> Vec<K> {
        self.entries.iter().map(|e| e.eval(point)).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

/// Integral domain with exact division, as needed by Bareiss elimination.
trait ExactDomain: Clone {
    fn is_zero_el(&self) -> bool;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn neg_el(&self) -> Self;
    /// `(a*b - c*d) / e`, the division being exact.
    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self;
}

impl<K: Field> ExactDomain for K {
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }

    fn one_like(&self) -> Self {
        K::one()
    }

    fn zero_like(&self) -> Self {
        K::zero()
    }

    fn neg_el(&self) -> Self {
        -self.clone()
    }

    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self {
        let num = a.clone() * b.clone() - c.clone() * d.clone();
        if e.is_one() {
            num
        } else {
            num / e.clone()
        }
    }
}

#[derive(Clone)]
struct PolyEl<K: Field>(MultiPoly<K>);

impl<K: Field> ExactDomain for PolyEl<K> {
    fn is_zero_el(&self) -> bool {
        self.0.is_zero()
    }

    fn one_like(&self) -> Self {
        PolyEl(MultiPoly::one(self.0.vars()))
    }

    fn zero_like(&self) -> Self {
        PolyEl(MultiPoly::zero(self.0.vars()))
    }

    fn neg_el(&self) -> Self {
        PolyEl(-&self.0)
    }

    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Self {
        let num = &(&a.0 * &b.0) - &(&c.0 * &d.0);
        if e.0.constant_value().is_some_and(|v| v.is_one()) {
            return PolyEl(num);
        }
        PolyEl(
            num.exact_div(&e.0)
                .expect("nonzero pivot")
                .expect("Bareiss division is exact"),
        )
    }
}

/// Fraction-free Gaussian elimination; `m` is row-major `n x n`.
fn bareiss<T: ExactDomain>(mut m: Vec<T>, n: usize) -> Option<T> {
    if n == 0 {
        return None;
    }
    let mut sign = false;
    let mut prev = m[0].one_like();
    for k in 0..n.saturating_sub(1) {
        if m[k * n + k].is_zero_el() {
            let swap = (k + 1..n).find(|&i| !m[i * n + k].is_zero_el());
            let Some(i) = swap else {
                return Some(m[0].zero_like());
            };
            for j in 0..n {
                m.swap(k * n + j, i * n + j);
            }
            sign = !sign;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let mik = m[i * n + k].clone();
            for j in k + 1..n {
                let v = T::bareiss_step(&pivot, &m[i * n + j], &mik, &m[k * n + j], &prev);
                m[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    let d = m[n * n - 1].clone();
    Some(if sign { d.neg_el() } else { d })
}

/// Scalar determinant by fraction-free elimination.
pub fn scalar_det<K: Field>(m: Vec<K>, n: usize) -> K {
    bareiss(m, n).unwrap_or_else(K::one)
}

/// Determinant by Bareiss elimination directly on polynomial entries.
pub fn bareiss_det<K: Field>(m: &PolyMatrix<K>) -> Result<MultiPoly<K>> {
    let n = m.require_square()?;
    let els: Vec<PolyEl<K>> = m.entries.iter().cloned().map(PolyEl).collect();
    Ok(bareiss(els, n).map(|p| p.0).unwrap())
}

/// Tuning for [`poly_matrix_det_with`].
#[derive(Clone, Debug)]
pub struct DetOptions {
    /// Largest evaluation grid before falling back to direct elimination.
    pub max_grid_points: usize,
}

impl Default for DetOptions {
    fn default() -> Self {
        DetOptions {
            max_grid_points: 250_000,
        }
    }
}

/// Exact determinant of a square polynomial matrix whose determinant has
/// total degree at most `degree_bound`.
pub fn poly_matrix_det<K: Field>(m: &PolyMatrix<K>, degree_bound: u32) -> Result<MultiPoly<K>> {
    poly_matrix_det_with(m, degree_bound, &DetOptions::default())
}

/// Row and column offsets with `deg m_ij = r_i + c_j` on every nonzero entry.
fn grading<K: Field>(m: &PolyMatrix<K>) -> Option<(Vec<i64>, Vec<i64>)> {
    let n = m.rows;
    if m.entries.iter().any(|e| !e.is_homogeneous()) {
        return None;
    }
    let mut r: Vec<Option<i64>> = vec![None; n];
    let mut c: Vec<Option<i64>> = vec![None; n];
    for start in 0..n {
        if r[start].is_some() {
            continue;
        }
        r[start] = Some(0);
        let mut stack = vec![(true, start)];
        while let Some((is_row, k)) = stack.pop() {
            for other in 0..n {
                let (i, j) = if is_row { (k, other) } else { (other, k) };
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let deg = e.total_degree() as i64;
                if is_row {
                    let want = deg - r[i].unwrap();
                    match c[j] {
                        None => {
                            c[j] = Some(want);
                            stack.push((false, j));
                        }
                        Some(v) if v != want => return None,
                        _ => {}
                    }
                } else {
                    let want = deg - c[j].unwrap();
                    match r[i] {
                        None => {
                            r[i] = Some(want);
                            stack.push((true, i));
                        }
                        Some(v) if v != want => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some((
        r.into_iter().map(|v| v.unwrap_or(0)).collect(),
        c.into_iter().map(|v| v.unwrap_or(0)).collect(),
    ))
}

/// Per-variable degree bound from row and column maxima.
fn structural_degree<K: Field>(m: &PolyMatrix<K>, var: usize) -> u32 {
    let n = m.rows;
    let rows: u32 = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).degree_in(var)).max().unwrap_or(0))
        .sum();
    let cols: u32 = (0..n)
        .map(|j| (0..n).map(|i| m.get(i, j).degree_in(var)).max().unwrap_or(0))
        .sum();
    rows.min(cols)
}

/// Coefficients in the monomial basis of the polynomial taking `values[k]`
/// at `t = k`.
fn interpolate_1d<K: Field>(values: &[K]) -> Vec<K> {
    let n = values.len();
    // divided differences on nodes 0, 1, ..., n-1
    let mut dd = values.to_vec();
    for level in 1..n {
        let denom = K::from_i64(level as i64).inv();
        for k in (level..n).rev() {
            dd[k] = (dd[k].clone() - dd[k - 1].clone()) * denom.clone();
        }
    }
    // Horner expansion of the Newton form
    let mut coeffs = vec![K::zero(); n];
    for k in (0..n).rev() {
        // coeffs := coeffs * (t - k) + dd[k]
        let node = K::from_i64(k as i64);
        let mut next = vec![K::zero(); n];
        for j in 0..n {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] = next[j + 1].clone() + coeffs[j].clone();
            }
            next[j] = next[j].clone() - coeffs[j].clone() * node.clone();
        }
        next[0] = next[0].clone() + dd[k].clone();
        coeffs = next;
    }
    coeffs
}

/// Interpolate along every axis of a row-major tensor of values.
fn interpolate_tensor<K: Field>(mut data: Vec<K>, dims: &[usize]) -> Vec<K> {
    let total: usize = dims.iter().product();
    for axis in 0..dims.len() {
        let len = dims[axis];
        let stride: usize = dims[axis + 1..].iter().product();
        let outer = total / (len * stride);
        for o in 0..outer {
            for s in 0..stride {
                let base = o * len * stride + s;
                let line: Vec<K> = (0..len).map(|k| data[base + k * stride].clone()).collect();
                let coeffs = interpolate_1d(&line);
                for (k, c) in coeffs.into_iter().enumerate() {
                    data[base + k * stride] = c;
                }
            }
        }
    }
    data
}

pub fn poly_matrix_det_with<K: Field>(
    m: &PolyMatrix<K>,
    degree_bound: u32,
    opts: &DetOptions,
) -> Result<MultiPoly<K>> {
    let n = m.require_square()?;
    let vars = m.vars().clone();
    let nv = vars.len();
    let occurring: Vec<usize> = (0..nv)
        .filter(|&v| m.entries.iter().any(|e| e.involves(v)))
        .collect();

    // Dehomogenize the last occurring variable when the grading allows it.
    let graded = grading(m).map(|(r, c)| r.iter().sum::<i64>() + c.iter().sum::<i64>());
    let (dehom, total_degree) = match (graded, occurring.last()) {
        (Some(d), Some(&v)) if d >= 0 && occurring.len() > 1 => (Some(v), Some(d as u32)),
        _ => (None, None),
    };
    if let Some(d) = total_degree {
        if d > degree_bound {
            // a nonzero determinant would have degree d; it may still vanish
            let direct = bareiss_det(m)?;
            if direct.is_zero() {
                return Ok(direct);
            }
            return Err(Error::DegreeBoundViolation {
                bound: degree_bound,
            });
        }
    }
    let interp_vars: Vec<usize> = occurring
        .iter()
        .copied()
        .filter(|&v| Some(v) != dehom)
        .collect();
    let bounds: Vec<u32> = interp_vars
        .iter()
        .map(|&v| structural_degree(m, v).min(degree_bound))
        .collect();
    let dims: Vec<usize> = bounds.iter().map(|&b| b as usize + 1).collect();
    let grid_points = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .unwrap_or(usize::MAX);
    if grid_points > opts.max_grid_points {
        let det = bareiss_det(m)?;
        if det.total_degree() > degree_bound {
            return Err(Error::DegreeBoundViolation {
                bound: degree_bound,
            });
        }
        return Ok(det);
    }

    // Evaluate each distinct entry once per grid point.
    let mut uniq: Vec<&MultiPoly<K>> = Vec::new();
    let mut index: HashMap<&MultiPoly<K>, usize> = HashMap::new();
    let slots: Vec<usize> = m
        .entries
        .iter()
        .map(|e| {
            *index.entry(e).or_insert_with(|| {
                uniq.push(e);
                uniq.len() - 1
            })
        })
        .collect();
    let point_at = |coords: &[K]| -> Vec<K> {
        let mut p = vec![K::zero(); nv];
        if let Some(v) = dehom {
            p[v] = K::one();
        }
        for (k, &v) in interp_vars.iter().enumerate() {
            p[v] = coords[k].clone();
        }
        p
    };
    let det_at = |p: &[K]| -> K {
        let vals: Vec<K> = uniq.iter().map(|e| e.eval(p)).collect();
        scalar_det(slots.iter().map(|&s| vals[s].clone()).collect(), n)
    };
    let values: Vec<K> = (0..grid_points)
        .into_par_iter()
        .map(|flat| {
            let mut rem = flat;
            let mut coords = vec![K::zero(); dims.len()];
            for k in (0..dims.len()).rev() {
                coords[k] = K::from_i64((rem % dims[k]) as i64);
                rem /= dims[k];
            }
            det_at(&point_at(&coords))
        })
        .collect();
    let coeffs = interpolate_tensor(values, &dims);

    let mut result = MultiPoly::zero(&vars);
    for (flat, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut rem = flat;
        let mut e = vec![0u32; nv];
        for k in (0..dims.len()).rev() {
            e[interp_vars[k]] = (rem % dims[k]) as u32;
            rem /= dims[k];
        }
        result.add_term(Monomial(e), c);
    }

    // Off-grid residual check.
    for (shift, probe) in [(2i64, 0i64), (5, 1)] {
        let coords: Vec<K> = bounds
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                let base = K::from_i64(b as i64 + shift + k as i64);
                if probe == 1 {
                    base * K::from_rational(rat(-1, 3))
                } else {
                    base
                }
            })
            .collect();
        let p = point_at(&coords);
        if result.eval(&p) != det_at(&p) {
            return Err(Error::DegreeBoundViolation {
                bound: degree_bound,
            });
        }
    }

    if let (Some(v), Some(d)) = (dehom, total_degree) {
        if result.is_zero() {
            return Ok(result);
        }
        result = result.homogenize(v, d).map_err(|_| Error::DegreeBoundViolation {
            bound: degree_bound,
        })?;
    }
    if result.total_degree() > degree_bound {
        return Err(Error::DegreeBoundViolation {
            bound: degree_bound,
        });
    }
    Ok(result)
}

/// Sum of the largest entry degree per row (or column, whichever is smaller).
pub fn total_degree_bound<K: Field>(m: &PolyMatrix<K>) -> u32 {
    let n = m.rows.min(m.cols);
    let rows: u32 = (0..n)
        .map(|i| (0..m.cols).map(|j| m.get(i, j).total_degree()).max().unwrap_or(0))
        .sum();
    let cols: u32 = (0..n)
        .map(|j| (0..m.rows).map(|i| m.get(i, j).total_degree()).max().unwrap_or(0))
        .sum();
    rows.min(cols)
}

/// `[Phi_0, ..., Phi_d]` with `Phi_i = (-1)^i sum_{j >= i} C(j, i) F_j z^(d-j)`.
pub fn phi_forms<K: Field>(f: &MultiPoly<K>) -> Result<Vec<MultiPoly<K>>> {
    let parts = homogeneous_decompose(f)?;
    let d = parts.len() - 1;
    if d == 0 || f.is_zero() {
        return Err(Error::DegreeZero);
    }
    let vars = Vars::xyz();
    let z = MultiPoly::<K>::var(&vars, 2);
    // parts[k] = F_(d-k)
    let fj = |j: usize| parts[d - j].to_xyz();
    let mut binom = vec![vec![0i64; d + 1]; d + 1];
    for j in 0..=d {
        binom[j][0] = 1;
        for i in 1..=j {
            binom[j][i] = binom[j - 1][i - 1] + if i <= j - 1 { binom[j - 1][i] } else { 0 };
        }
    }
    let mut out = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut phi = MultiPoly::zero(&vars);
        for j in i..=d {
            let term = &fj(j) * &z.pow((d - j) as u32);
            phi = &phi + &term.scale(&K::from_i64(binom[j][i]));
        }
        if i % 2 == 1 {
            phi = -&phi;
        }
        out.push(phi);
    }
    Ok(out)
}

/// The `(d + delta)`-square matrix whose determinant is the conchoidal
/// transform of `G` with respect to `F`.
pub fn conchoid_matrix<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> Result<PolyMatrix<K>> {
    let phi = phi_forms(f)?;
    let gparts = homogeneous_decompose(g)?;
    let d = phi.len() - 1;
    let delta = gparts.len() - 1;
    if delta == 0 || g.is_zero() {
        return Err(Error::DegreeZero);
    }
    let vars = Vars::xyz();
    let z = MultiPoly::<K>::var(&vars, 2);
    let n = d + delta;
    let zero = MultiPoly::zero(&vars);
    let mut entries = vec![zero; n * n];
    // Phi_d, ..., Phi_0
    for r in 0..delta {
        for k in 0..=d {
            entries[r * n + r + k] = phi[d - k].clone();
        }
    }
    // G_delta, z G_(delta-1), ..., z^delta G_0
    let gz: Vec<MultiPoly<K>> = (0..=delta)
        .map(|k| &gparts[k].to_xyz() * &z.pow(k as u32))
        .collect();
    for s in 0..d {
        for k in 0..=delta {
            entries[(delta + s) * n + s + k] = gz[k].clone();
        }
    }
    PolyMatrix::new(n, n, entries)
}

/// Sylvester matrix of `f` and `g` with respect to `var`: `deg g` rows of
/// `f`'s coefficients followed by `deg f` rows of `g`'s.
pub fn sylvester_matrix<K: Field>(
    f: &MultiPoly<K>,
    g: &MultiPoly<K>,
    var: usize,
) -> Result<PolyMatrix<K>> {
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let m = fc.len() - 1;
    let k = gc.len() - 1;
    let n = m + k;
    let zero = MultiPoly::zero(f.vars());
    let mut entries = vec![zero; n * n];
    for r in 0..k {
        for (j, c) in fc.iter().rev().enumerate() {
            entries[r * n + r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in gc.iter().rev().enumerate() {
            entries[(k + r) * n + r + j] = c.clone();
        }
    }
    PolyMatrix::new(n, n, entries)
}

/// Resultant of `f` and `g` eliminating `var`.
pub fn sylvester_resultant<K: Field>(
    f: &MultiPoly<K>,
    g: &MultiPoly<K>,
    var: usize,
) -> Result<MultiPoly<K>> {
    if f.vars() != g.vars() {
        return Err(Error::VariableMismatch(
            format!("{:?}", f.vars()),
            format!("{:?}", g.vars()),
        ));
    }
    let name = f
        .vars()
        .names()
        .get(var)
        .cloned()
        .ok_or_else(|| Error::UnknownVariable(format!("#{var}")))?;
    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero(f.vars()));
    }
    let df = f.degree_in(var);
    let dg = g.degree_in(var);
    match (df, dg) {
        (0, 0) => return Err(Error::VariableAbsent(name)),
        (0, _) => return Ok(f.pow(dg)),
        (_, 0) => return Ok(g.pow(df)),
        _ => {}
    }
    let m = sylvester_matrix(f, g, var)?;
    let bound = total_degree_bound(&m);
    poly_matrix_det(&m, bound)
}

/// Resultant of two univariate polynomials given as coefficient vectors.
pub fn univariate_resultant<K: Field>(f: &crate::algebra::UniPoly<K>, g: &crate::algebra::UniPoly<K>) -> K {
    let vars = Vars::new(&["t"]);
    let fp = MultiPoly::from_univariate(&vars, 0, f);
    let gp = MultiPoly::from_univariate(&vars, 0, g);
    if fp.is_zero() || gp.is_zero() {
        return K::zero();
    }
    let (df, dg) = (fp.degree_in(0), gp.degree_in(0));
    if df == 0 && dg == 0 {
        return K::one();
    }
    sylvester_resultant(&fp, &gp, 0)
        .expect("univariate resultant")
        .constant_value()
        .expect("constant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::scalar::Rational;

    fn p(s: &str) -> MultiPoly<Rational> {
        parse_poly(s, &Vars::xyz()).unwrap()
    }

    fn mat(rows: &[&[&str]]) -> PolyMatrix<Rational> {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_determinants() {
        let m = mat(&[&["x", "y"], &["y", "x"]]);
        assert_eq!(poly_matrix_det(&m, 2).unwrap(), p("x^2-y^2"));
        let id = mat(&[&["1", "0", "0", "0"], &["0", "1", "0", "0"], &["0", "0", "1", "0"], &["0", "0", "0", "1"]]);
        assert_eq!(poly_matrix_det(&id, 0).unwrap(), p("1"));
        let sing = mat(&[&["x", "y"], &["2*x", "2*y"]]);
        assert!(poly_matrix_det(&sing, 2).unwrap().is_zero());
    }

    #[test]
    fn bound_violation_is_detected() {
        let m = mat(&[&["x+1", "y"], &["y", "x^2+z"]]);
        assert_eq!(poly_matrix_det(&m, 3).unwrap(), bareiss_det(&m).unwrap());
        assert_eq!(
            poly_matrix_det(&m, 1),
            Err(Error::DegreeBoundViolation { bound: 1 })
        );
        let nonsquare = PolyMatrix::new(1, 2, vec![p("x"), p("y")]).unwrap();
        assert_eq!(
            poly_matrix_det(&nonsquare, 1),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn phi_of_circle() {
        let phi = phi_forms(&p("x^2+y^2-z^2")).unwrap();
        assert_eq!(phi, vec![p("x^2+y^2-z^2"), p("-2*x^2-2*y^2"), p("x^2+y^2")]);
        let phi = phi_forms(&p("z^3")).unwrap();
        assert_eq!(phi[0], p("z^3"));
        assert!(phi[1..].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn two_lines_give_the_hyperbola() {
        let m = conchoid_matrix(&p("x+y+z"), &p("x-y+2*z")).unwrap();
        assert_eq!(m.get(0, 0), &p("-x-y"));
        assert_eq!(m.get(1, 1), &p("2*z"));
        let det = poly_matrix_det(&m, 2).unwrap();
        let expected = -&(&(&p("x+y+z") * &p("x-y+2*z")) - &p("2*z^2"));
        assert_eq!(det, expected);
    }

    #[test]
    fn sylvester_cases() {
        let v = Vars::new(&["t", "u", "v"]);
        let f: MultiPoly<Rational> = parse_poly("t-u", &v).unwrap();
        let g: MultiPoly<Rational> = parse_poly("t-v", &v).unwrap();
        let r = sylvester_resultant(&f, &g, 0).unwrap();
        assert!(r.eq_up_to_scalar(&parse_poly("u-v", &v).unwrap()));
        let f: MultiPoly<Rational> = parse_poly("t^2-2", &v).unwrap();
        let g: MultiPoly<Rational> = parse_poly("t^2-3", &v).unwrap();
        assert_eq!(sylvester_resultant(&f, &g, 0).unwrap(), MultiPoly::one(&v));
        assert_eq!(
            sylvester_resultant(&parse_poly::<Rational>("u", &v).unwrap(), &parse_poly("v", &v).unwrap(), 0),
            Err(Error::VariableAbsent("t".into()))
        );
    }
}
