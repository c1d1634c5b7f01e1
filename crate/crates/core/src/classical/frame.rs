use crate::algebra::{MultiPoly, Vars};
use crate::conchoid::{PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::scalar::{promote, Field, GaussianRational, Rational};

/// A circle `(x - a z)^2 + (y - b z)^2 - r2 z^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleSpec {
    center: (Rational, Rational),
    r2: Rational,
}

impl CircleSpec {
    pub fn new(center: (Rational, Rational), r2: Rational) -> Result<Self> {
        if r2 <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidArgument(format!("radius squared {r2} is not positive")));
        }
        Ok(CircleSpec { center, r2 })
    }

    /// Circle centred at the origin.
    pub fn centered(r2: Rational) -> Result<Self> {
        let zero = Rational::from_integer(0.into());
        Self::new((zero.clone(), zero), r2)
    }

    pub fn center(&self) -> &(Rational, Rational) {
        &self.center
    }

    pub fn r2(&self) -> &Rational {
        &self.r2
    }

    pub fn is_centered(&self) -> bool {
        use num_traits::Zero;
        self.center.0.is_zero() && self.center.1.is_zero()
    }

    pub fn center_point<K: Field>(&self) -> ProjPoint<K> {
        ProjPoint::affine(promote(&self.center.0), promote(&self.center.1))
    }

    pub fn curve<K: Field>(&self) -> PlaneCurve<K> {
        circle(&self.center_point(), &promote(&self.r2))
    }

    /// The same centre with radius multiplied by `n`.
    pub fn scaled(&self, n: u32) -> Self {
        let n = Rational::from_integer((n as i64).into());
        CircleSpec {
            center: self.center.clone(),
            r2: &self.r2 * &n * &n,
        }
    }
}

/// `(x - a z)^2 + (y - b z)^2 - r2 z^2` for `A = (a, b)`.
pub(crate) fn circle<K: Field>(a: &ProjPoint<K>, r2: &K) -> PlaneCurve<K> {
    let vars = Vars::xyz();
    let q = isotropic_product(a);
    let z = MultiPoly::<K>::var(&vars, 2);
    PlaneCurve::new(&q - &(&z * &z).scale(r2)).expect("a circle is a conic")
}

/// `(x - a z)^2 + (y - b z)^2`.
pub(crate) fn isotropic_product<K: Field>(a: &ProjPoint<K>) -> MultiPoly<K> {
    let vars = Vars::xyz();
    let [ca, cb, _] = a.coords();
    let z = MultiPoly::var(&vars, 2);
    let dx = &MultiPoly::var(&vars, 0) - &z.scale(ca);
    let dy = &MultiPoly::var(&vars, 1) - &z.scale(cb);
    &(&dx * &dx) + &(&dy * &dy)
}

/// Substitute `x -> x + a z`, `y -> y + b z`: the point `A` moves to the
/// origin.
pub fn recenter<K: Field>(f: &PlaneCurve<K>, a: &ProjPoint<K>) -> Result<PlaneCurve<K>> {
    Ok(PlaneCurve::new(recenter_poly(f.equation(), a)?).expect("same degree"))
}

pub(crate) fn recenter_poly<K: Field>(f: &MultiPoly<K>, a: &ProjPoint<K>) -> Result<MultiPoly<K>> {
    let (ca, cb) = a.affine_coords()?;
    let vars = Vars::xyz();
    let z = MultiPoly::var(&vars, 2);
    let images = [
        &MultiPoly::var(&vars, 0) + &z.scale(&ca),
        &MultiPoly::var(&vars, 1) + &z.scale(&cb),
        z,
    ];
    Ok(f.compose(&images, &vars))
}

/// Move the origin back to `A`.
pub(crate) fn uncenter_poly<K: Field>(f: &MultiPoly<K>, a: &ProjPoint<K>) -> Result<MultiPoly<K>> {
    let (ca, cb) = a.affine_coords()?;
    recenter_poly(f, &ProjPoint::affine(-ca, -cb))
}

pub(crate) fn to_gaussian_point<K: Field>(p: &ProjPoint<K>) -> ProjPoint<GaussianRational> {
    let [x, y, z] = p.coords();
    let g = |k: &K| GaussianRational::new(k.real_part(), k.imag_part());
    ProjPoint::new(g(x), g(y), g(z)).expect("nonzero point")
}

/// The lines through `A` and the two cyclic points `[1 : +-i : 0]`:
/// `(x - a z) + i (y - b z)` and `(x - a z) - i (y - b z)`.
pub fn cyclic_tangent_pair<K: Field>(
    a: &ProjPoint<K>,
) -> Result<(MultiPoly<GaussianRational>, MultiPoly<GaussianRational>)> {
    let a = to_gaussian_point(a);
    let (ca, cb) = a.affine_coords()?;
    let vars = Vars::xyz();
    let z = MultiPoly::var(&vars, 2);
    let dx = &MultiPoly::var(&vars, 0) - &z.scale(&ca);
    let dy = (&MultiPoly::var(&vars, 1) - &z.scale(&cb)).scale(&GaussianRational::i());
    Ok((&dx + &dy, &dx - &dy))
}

/// Variables `u = x + i y`, `v = x - i y`, `z`.
pub(crate) fn uv_vars() -> Vars {
    Vars::new(&["u", "v", "z"])
}

/// Rewrite a polynomial in `x, y, z` in the isotropic coordinates `u, v, z`.
pub(crate) fn to_uv(f: &MultiPoly<GaussianRational>) -> MultiPoly<GaussianRational> {
    let vars = uv_vars();
    let half = GaussianRational::from_rational(Rational::new(1.into(), 2.into()));
    let u = MultiPoly::var(&vars, 0);
    let v = MultiPoly::var(&vars, 1);
    let x = (&u + &v).scale(&half);
    // y = (u - v) / 2i
    let y = (&u - &v).scale(&(-GaussianRational::i() * half));
    f.compose(&[x, y, MultiPoly::var(&vars, 2)], &vars)
}

/// Inverse of [`to_uv`].
pub(crate) fn from_uv(f: &MultiPoly<GaussianRational>) -> MultiPoly<GaussianRational> {
    let vars = Vars::xyz();
    let x = MultiPoly::var(&vars, 0);
    let iy = MultiPoly::var(&vars, 1).scale(&GaussianRational::i());
    f.compose(&[&x + &iy, &x - &iy, MultiPoly::var(&vars, 2)], &vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::algebra::parse_poly;
    use crate::conchoid::multiplicity_at;
    use crate::scalar::rat;

    type C = PlaneCurve<Rational>;

    #[test]
    fn recentering() {
        let f = C::parse("(x-z)^2+y^2-z^2", false).unwrap();
        let a = ProjPoint::affine(rat(1, 1), rat(0, 1));
        let g = recenter(&f, &a).unwrap();
        assert_eq!(g.to_string(), "x^2+y^2-z^2");
        let back = recenter(&g, &ProjPoint::affine(rat(-1, 1), rat(0, 1))).unwrap();
        assert_eq!(back, f);
        assert_eq!(multiplicity_at(&f, &a), multiplicity_at(&g, &ProjPoint::origin()));
    }

    #[test]
    fn cyclic_lines() {
        let (l1, l2) = cyclic_tangent_pair(&ProjPoint::<Rational>::origin()).unwrap();
        assert_eq!((l1.to_string(), l2.to_string()), ("x+i*y".into(), "x-i*y".into()));
        let a = ProjPoint::affine(rat(1, 1), rat(2, 1));
        let (l1, l2) = cyclic_tangent_pair(&a).unwrap();
        let q: MultiPoly<GaussianRational> = parse_poly("(x-z)^2+(y-2*z)^2", &Vars::xyz()).unwrap();
        assert_eq!(&l1 * &l2, q);
        let i = GaussianRational::i();
        assert!(l1.eval(&[GaussianRational::from_ints(1, 0), i, GaussianRational::from_ints(0, 0)]).is_zero());
    }

    #[test]
    fn isotropic_coordinates_round_trip() {
        let f: MultiPoly<GaussianRational> = parse_poly("x^3-2*x*y*z+y^2*z+5*z^3", &Vars::xyz()).unwrap();
        assert_eq!(from_uv(&to_uv(&f)), f);
        let q: MultiPoly<GaussianRational> = parse_poly("x^2+y^2", &Vars::xyz()).unwrap();
        assert_eq!(to_uv(&q).to_string(), "u*v");
    }

    #[test]
    fn circle_spec() {
        assert!(CircleSpec::centered(rat(0, 1)).is_err());
        let b = CircleSpec::new((rat(1, 1), rat(0, 1)), rat(1, 1)).unwrap();
        assert_eq!(b.curve::<Rational>().to_string(), "x^2-2*x*z+y^2");
        assert_eq!(b.scaled(2).r2(), &rat(4, 1));
    }
}
