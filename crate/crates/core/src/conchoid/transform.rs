
use crate::algebra::{BinaryForm, MultiPoly, UniPoly, Vars};
use crate::error::{Error, Result};
use crate::resultant::{conchoid_matrix, poly_matrix_det, scalar_det};
use crate::scalar::Field;

use super::{PlaneCurve, ProjPoint};

fn is_power_of_z<K: Field>(c: &PlaneCurve<K>) -> bool {
    let e = c.equation();
    e.num_terms() == 1 && e.degree_in(2) == c.degree()
}

/// The determinant of the conchoid matrix, unnormalized. Its sign and scale
/// are those of the Sylvester construction, so it agrees exactly with
/// [`membership_value`] on affine points.
pub fn conchoid_resultant<K: Field>(b: &PlaneCurve<K>, c: &PlaneCurve<K>) -> Result<MultiPoly<K>> {
    if is_power_of_z(b) && is_power_of_z(c) {
        return Err(Error::IdenticallyZero);
    }
    let m = conchoid_matrix(b.equation(), c.equation())?;
    let r = poly_matrix_det(&m, 2 * b.degree() * c.degree())?;
    if r.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    Ok(r)
}

/// The conchoid of `c` with respect to the base curve `b`, monic.
pub fn conchoidal_transform<K: Field>(b: &PlaneCurve<K>, c: &PlaneCurve<K>) -> Result<PlaneCurve<K>> {
    PlaneCurve::new(conchoid_resultant(b, c)?.monic())
}

/// Outcome of the pointwise membership oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership<K> {
    Value(K),
    /// Both polynomials in the line parameter lose their leading term at the
    /// point; the resultant says nothing reliable there.
    Degenerate,
}

impl<K: Field> Membership<K> {
    pub fn is_zero(&self) -> Option<bool> {
        match self {
            Membership::Value(v) => Some(v.is_zero()),
            Membership::Degenerate => None,
        }
    }
}

/// Resultant of two polynomials of prescribed formal degrees; coefficients
/// are given in descending order and the first row block belongs to `f`.
pub fn formal_resultant<K: Field>(f_desc: &[K], g_desc: &[K]) -> K {
    let d = f_desc.len() - 1;
    let e = g_desc.len() - 1;
    let n = d + e;
    if n == 0 {
        return K::one();
    }
    let mut m = vec![K::zero(); n * n];
    for r in 0..e {
        for (k, c) in f_desc.iter().enumerate() {
            m[r * n + r + k] = c.clone();
        }
    }
    for r in 0..d {
        for (k, c) in g_desc.iter().enumerate() {
            m[(e + r) * n + r + k] = c.clone();
        }
    }
    scalar_det(m, n)
}

/// Coefficients, descending in the parameter `l`, of `F((1-l)a, (1-l)b, 1)`
/// and `G(l a, l b, 1)`.
fn line_polys<K: Field>(b: &PlaneCurve<K>, c: &PlaneCurve<K>, a: &K, bb: &K) -> (Vec<K>, Vec<K>) {
    let d = b.degree() as usize;
    let delta = c.degree() as usize;
    // F((1-l)a, (1-l)b, 1) = sum_h F_h(a, b) (1 - l)^h
    let one_minus = UniPoly::new(vec![K::one(), -K::one()]);
    let mut f = UniPoly::zero();
    let mut pw = UniPoly::constant(K::one());
    let parts = b.z_parts();
    for h in 0..=d {
        let fh = parts[d - h].poly().eval(&[a.clone(), bb.clone()]);
        f = &f + &pw.scale(&fh);
        pw = &pw * &one_minus;
    }
    let gparts = c.z_parts();
    let g: Vec<K> = (0..=delta)
        .map(|k| gparts[k].poly().eval(&[a.clone(), bb.clone()]))
        .collect();
    let f_desc: Vec<K> = (0..=d).rev().map(|k| f.coeff(k)).collect();
    (f_desc, g)
}

/// Pointwise test whether `q` lies on the conchoid of `c` with respect to
/// `b`: the resultant in the line parameter of the two restricted equations.
pub fn membership_value<K: Field>(
    b: &PlaneCurve<K>,
    c: &PlaneCurve<K>,
    q: &ProjPoint<K>,
) -> Result<Membership<K>> {
    let (a, bb) = q.affine_coords()?;
    let (f, g) = line_polys(b, c, &a, &bb);
    if f[0].is_zero() && g[0].is_zero() {
        return Ok(Membership::Degenerate);
    }
    Ok(Membership::Value(formal_resultant(&f, &g)))
}

/// Move `p` to the origin of an affine chart: returns the dehomogenized,
/// translated equation and the indices of the two chart variables.
fn chart_at<K: Field>(f: &MultiPoly<K>, p: &ProjPoint<K>) -> (MultiPoly<K>, [usize; 2]) {
    let c = p.coords();
    let pivot = (0..3).rev().find(|&k| !c[k].is_zero()).unwrap();
    let others: Vec<usize> = (0..3).filter(|&k| k != pivot).collect();
    let vars = f.vars().clone();
    let local = f.specialize(pivot, &K::one());
    let images: Vec<MultiPoly<K>> = (0..3)
        .map(|k| {
            if k == pivot {
                MultiPoly::one(&vars)
            } else {
                let shift = c[k].clone() / c[pivot].clone();
                &MultiPoly::var(&vars, k) + &MultiPoly::constant(&vars, shift)
            }
        })
        .collect();
    (local.compose(&images, &vars), [others[0], others[1]])
}

/// Multiplicity of the curve `f` at `p`; zero when `p` is not on `f`.
pub fn multiplicity_at<K: Field>(f: &PlaneCurve<K>, p: &ProjPoint<K>) -> u32 {
    if !f.contains(p) {
        return 0;
    }
    let (local, _) = chart_at(f.equation(), p);
    local.min_total_degree()
}

/// Lowest-degree form of `f` in the affine chart centred at `p`, written in
/// the two chart variables.
pub fn tangent_cone_at<K: Field>(f: &PlaneCurve<K>, p: &ProjPoint<K>) -> Result<MultiPoly<K>> {
    if !f.contains(p) {
        return Err(Error::PointNotOnCurve);
    }
    let (local, _) = chart_at(f.equation(), p);
    Ok(local.homogeneous_part(local.min_total_degree()))
}

/// `f(x, y, 0)`.
pub fn infinity_restriction<K: Field>(f: &PlaneCurve<K>) -> BinaryForm<K> {
    f.top_form().clone()
}

/// Restriction of the conchoid equation (with `z = 1`) to the affine line
/// `x = s y + t`, as a polynomial in `y`, computed without the full transform.
pub fn membership_along_line<K: Field>(
    b: &PlaneCurve<K>,
    c: &PlaneCurve<K>,
    s: &K,
    t: &K,
) -> Result<UniPoly<K>> {
    let vars = Vars::new(&["l", "y"]);
    let l = MultiPoly::<K>::var(&vars, 0);
    let y = MultiPoly::<K>::var(&vars, 1);
    let one = MultiPoly::one(&vars);
    let x = &y.scale(s) + &MultiPoly::constant(&vars, t.clone());
    let ml = &one - &l;
    let f = b
        .equation()
        .compose(&[&ml * &x, &ml * &y, one.clone()], &vars);
    let g = c.equation().compose(&[&l * &x, &l * &y, one], &vars);
    // formal degrees in l are d and delta
    let d = b.degree() as usize;
    let delta = c.degree() as usize;
    let fc = f.coeffs_in(0);
    let gc = g.coeffs_in(0);
    let zero = MultiPoly::zero(&vars);
    let f_desc: Vec<MultiPoly<K>> = (0..=d).rev().map(|k| fc.get(k).cloned().unwrap_or_else(|| zero.clone())).collect();
    let g_desc: Vec<MultiPoly<K>> = (0..=delta).rev().map(|k| gc.get(k).cloned().unwrap_or_else(|| zero.clone())).collect();
    let n = d + delta;
    let mut entries = vec![zero.clone(); n * n];
    for r in 0..delta {
        for (k, cf) in f_desc.iter().enumerate() {
            entries[r * n + r + k] = cf.clone();
        }
    }
    for r in 0..d {
        for (k, cg) in g_desc.iter().enumerate() {
            entries[(delta + r) * n + r + k] = cg.clone();
        }
    }
    let m = crate::resultant::PolyMatrix::new(n, n, entries)?;
    let bound = 2 * b.degree() * c.degree();
    let det = poly_matrix_det(&m, bound)?;
    Ok(det.to_univariate(1).expect("only y remains"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::scalar::{rat, Rational};

    type C = PlaneCurve<Rational>;

    fn c(s: &str) -> C {
        C::parse(s, false).unwrap()
    }

    fn pt(a: i64, b: i64) -> ProjPoint<Rational> {
        ProjPoint::affine(rat(a, 1), rat(b, 1))
    }

    #[test]
    fn limacon_of_the_circle_and_a_line() {
        let r = conchoidal_transform(&c("x^2+y^2-z^2"), &c("x-2*z")).unwrap();
        let expected: MultiPoly<Rational> =
            parse_poly("4*y^2+x^4+x^2*y^2-4*x^3-4*x*y^2+3*x^2", &Vars::xyz()).unwrap();
        assert!(r.dehomogenize().eq_up_to_scalar(&expected));
        assert_eq!(multiplicity_at(&r, &ProjPoint::origin()), 2);
    }

    #[test]
    fn both_at_infinity_is_rejected() {
        assert_eq!(conchoidal_transform(&c("z"), &c("z^2")), Err(Error::IdenticallyZero));
    }

    #[test]
    fn membership_matches_the_quartic() {
        let b = c("x^2+y^2-z^2");
        let l = c("x-2*z");
        assert_eq!(membership_value(&b, &l, &pt(3, 0)).unwrap().is_zero(), Some(true));
        assert_eq!(membership_value(&b, &l, &pt(0, 5)).unwrap().is_zero(), Some(false));
        let raw = conchoid_resultant(&b, &l).unwrap();
        for (a, bb) in [(1, 2), (-3, 7), (5, -1)] {
            let Membership::Value(v) = membership_value(&b, &l, &pt(a, bb)).unwrap() else {
                panic!("degenerate");
            };
            assert_eq!(v, raw.eval(&[rat(a, 1), rat(bb, 1), rat(1, 1)]));
        }
    }

    #[test]
    fn local_data() {
        let f = c("x^2+y^2-z^2");
        assert_eq!(multiplicity_at(&f, &pt(1, 0)), 1);
        assert_eq!(multiplicity_at(&f, &pt(0, 0)), 0);
        let g = c("x^2*z-y^3");
        assert_eq!(multiplicity_at(&g, &ProjPoint::origin()), 2);
        assert_eq!(tangent_cone_at(&g, &ProjPoint::origin()).unwrap(), parse_poly("x^2", &Vars::xyz()).unwrap());
        assert_eq!(tangent_cone_at(&f, &pt(0, 0)), Err(Error::PointNotOnCurve));
        let at_inf = ProjPoint::new(rat(1, 1), rat(0, 1), rat(0, 1)).unwrap();
        assert_eq!(multiplicity_at(&c("y*z-x^2"), &ProjPoint::new(rat(0, 1), rat(1, 1), rat(0, 1)).unwrap()), 1);
        assert_eq!(multiplicity_at(&c("y^2*z-x^3+z^3"), &at_inf), 0);
        let es1 = c("z^2*x^2+z^2*y^2");
        assert!(infinity_restriction(&es1).is_zero());
    }

    #[test]
    fn along_a_line_agrees_with_the_transform() {
        let b = c("x^2+y^2-z^2");
        let l = c("x-2*z");
        let raw = conchoid_resultant(&b, &l).unwrap();
        let (s, t) = (rat(2, 3), rat(-1, 2));
        let line = membership_along_line(&b, &l, &s, &t).unwrap();
        for yv in [0, 1, 4] {
            let y = rat(yv, 1);
            let x = &s * &y + &t;
            assert_eq!(line.eval(&y), raw.eval(&[x, y, rat(1, 1)]));
        }
    }
}
