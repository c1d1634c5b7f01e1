use std::fmt;


use crate::algebra::{gcd, homogeneous_decompose, parse_poly, BinaryForm, MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::scalar::{Field, GaussianRational, Rational};

/// A projective plane curve given by a homogeneous equation in `x, y, z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlaneCurve<K: Field> {
    equation: MultiPoly<K>,
    degree: u32,
    z_parts: Vec<BinaryForm<K>>,
}

impl<K: Field> PlaneCurve<K> {
    pub fn new(equation: MultiPoly<K>) -> Result<Self> {
        let equation = equation.restrict_vars(&Vars::xyz())?;
        if equation.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !equation.is_homogeneous() {
            return Err(Error::NotHomogeneous(equation.to_string()));
        }
        let degree = equation.total_degree();
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        let z_parts = homogeneous_decompose(&equation)?;
        Ok(PlaneCurve {
            equation,
            degree,
            z_parts,
        })
    }

    /// Parse an equation. With `affine` set, an inhomogeneous equation in
    /// `x, y` is homogenized with `z` to its total degree.
    pub fn parse(text: &str, affine: bool) -> Result<Self> {
        let vars = Vars::xyz();
        let p: MultiPoly<K> = parse_poly(text, &vars)?;
        if affine && !p.is_homogeneous() {
            let d = p.total_degree();
            return Self::new(p.homogenize(2, d)?);
        }
        Self::new(p)
    }

    /// Homogenize an affine equation in `x, y` with `z`.
    pub fn from_affine(p: &MultiPoly<K>) -> Result<Self> {
        let p = p.restrict_vars(&Vars::xyz())?;
        let d = p.total_degree();
        Self::new(p.homogenize(2, d)?)
    }

    pub fn equation(&self) -> &MultiPoly<K> {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `[F_d, ..., F_0]` with `F = sum F_h z^(d-h)`.
    pub fn z_parts(&self) -> &[BinaryForm<K>] {
        &self.z_parts
    }

    /// The form `F_d(x, y) = F(x, y, 0)`.
    pub fn top_form(&self) -> &BinaryForm<K> {
        &self.z_parts[0]
    }

    /// The equation with `z = 1`.
    pub fn dehomogenize(&self) -> MultiPoly<K> {
        self.equation.specialize(2, &K::one())
    }

    pub fn eval(&self, p: &ProjPoint<K>) -> K {
        self.equation.eval(p.coords())
    }

    pub fn contains(&self, p: &ProjPoint<K>) -> bool {
        self.eval(p).is_zero()
    }

    /// Equality of the curves: equations agree up to a scalar.
    pub fn same_curve(&self, other: &Self) -> bool {
        self.equation.eq_up_to_scalar(&other.equation)
    }

    pub fn monic(&self) -> Self {
        Self::new(self.equation.monic()).expect("scaling keeps a curve a curve")
    }

    /// Does `z` divide the equation?
    pub fn contains_line_at_infinity(&self) -> bool {
        self.top_form().is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        let f = &self.equation;
        let mut g = f.clone();
        for v in 0..3 {
            g = gcd(&g, &f.derivative(v));
            if g.is_constant() {
                return true;
            }
        }
        g.is_constant()
    }

    pub fn to_gaussian(&self) -> PlaneCurve<GaussianRational> {
        PlaneCurve::new(self.equation.to_gaussian()).expect("same equation")
    }

    pub fn to_rational(&self) -> Option<PlaneCurve<Rational>> {
        PlaneCurve::new(self.equation.to_rational()?).ok()
    }

    /// `C1 * C2`.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(&self.equation * &other.equation).expect("product of curves")
    }
}

impl<K: Field> fmt::Display for PlaneCurve<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.equation.fmt(f)
    }
}

impl<K: Field> fmt::Debug for PlaneCurve<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneCurve({})", self.equation)
    }
}

/// A point of the projective plane, stored with its last nonzero coordinate
/// scaled to one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint<K: Field> {
    coords: [K; 3],
}

impl<K: Field> ProjPoint<K> {
    pub fn new(x: K, y: K, z: K) -> Result<Self> {
        let mut coords = [x, y, z];
        let Some(last) = coords.iter().rposition(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument("the point [0:0:0]".into()));
        };
        let inv = coords[last].inv();
        for c in coords.iter_mut() {
            *c = c.clone() * inv.clone();
        }
        Ok(ProjPoint { coords })
    }

    /// `[a : b : 1]`.
    pub fn affine(a: K, b: K) -> Self {
        ProjPoint {
            coords: [a, b, K::one()],
        }
    }

    /// The origin `A = [0:0:1]`.
    pub fn origin() -> Self {
        Self::affine(K::zero(), K::zero())
    }

    pub fn coords(&self) -> &[K; 3] {
        &self.coords
    }

    pub fn is_affine(&self) -> bool {
        !self.coords[2].is_zero()
    }

    /// Affine coordinates `(a, b)`.
    pub fn affine_coords(&self) -> Result<(K, K)> {
        if !self.is_affine() {
            return Err(Error::PointAtInfinity);
        }
        Ok((self.coords[0].clone(), self.coords[1].clone()))
    }
}

impl<K: Field> fmt::Display for ProjPoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "[{x}:{y}:{z}]")
    }
}

/// Something that violates the standing assumptions on the base curve. The
/// transform is still defined, but the structural guarantees about its
/// components are void.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SceneWarning {
    /// The origin lies on the base curve.
    OriginOnBase,
    /// The base curve is tangent to the line at infinity.
    TangentToInfinity,
}

impl fmt::Display for SceneWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SceneWarning::OriginOnBase => f.write_str("the origin lies on the base curve"),
            SceneWarning::TangentToInfinity => {
                f.write_str("the base curve is tangent to the line at infinity")
            }
        }
    }
}

/// The base curve together with the fixed frame: origin `[0:0:1]` and line at
/// infinity `z = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene<K: Field> {
    base: PlaneCurve<K>,
    warnings: Vec<SceneWarning>,
}

impl<K: Field> Scene<K> {
    pub fn new(base: PlaneCurve<K>) -> Result<Self> {
        if base.contains_line_at_infinity() {
            return Err(Error::InfinityComponent);
        }
        let mut warnings = Vec::new();
        if base.contains(&ProjPoint::origin()) {
            warnings.push(SceneWarning::OriginOnBase);
        }
        let top = base.top_form().poly();
        let g = gcd(&gcd(top, &top.derivative(0)), &top.derivative(1));
        if !g.is_constant() {
            warnings.push(SceneWarning::TangentToInfinity);
        }
        Ok(Scene { base, warnings })
    }

    pub fn base(&self) -> &PlaneCurve<K> {
        &self.base
    }

    pub fn warnings(&self) -> &[SceneWarning] {
        &self.warnings
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    type C = PlaneCurve<Rational>;

    #[test]
    fn curves_from_text() {
        let c = C::parse("x^2+y^2-z^2", false).unwrap();
        assert_eq!(c.degree(), 2);
        assert_eq!(C::parse("x-2", true).unwrap().to_string(), "x-2*z");
        assert!(matches!(C::parse("x-2", false), Err(Error::NotHomogeneous(_))));
        assert_eq!(C::parse("3", true), Err(Error::DegreeZero));
        assert_eq!(C::parse("0", true), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn points_are_normalized() {
        let p = ProjPoint::new(Rational::from_integer(2.into()), Rational::zero(), Rational::from_integer(2.into())).unwrap();
        assert_eq!(p, ProjPoint::affine(Rational::from_integer(1.into()), Rational::zero()));
        let q = ProjPoint::<Rational>::new(Rational::from_integer(3.into()), Rational::zero(), Rational::zero()).unwrap();
        assert!(!q.is_affine());
        assert_eq!(q.affine_coords(), Err(Error::PointAtInfinity));
    }

    #[test]
    fn scene_flags() {
        let s = Scene::new(C::parse("x^2+y^2-z^2", false).unwrap()).unwrap();
        assert!(s.warnings().is_empty());
        let s = Scene::new(C::parse("x^2+y^2-2*x*z", false).unwrap()).unwrap();
        assert_eq!(s.warnings(), &[SceneWarning::OriginOnBase]);
        let s = Scene::new(C::parse("x^2-y*z-z^2", false).unwrap()).unwrap();
        assert_eq!(s.warnings(), &[SceneWarning::TangentToInfinity]);
        assert_eq!(Scene::new(C::parse("x*z", false).unwrap()), Err(Error::InfinityComponent));
    }
}
