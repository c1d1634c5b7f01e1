use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{squarefree_decomposition, squarefree_part, MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::resultant::sylvester_resultant;
use crate::scalar::{rat, Field, Rational};

use super::{membership_along_line, PlaneCurve};

const SAMPLE_LINES: usize = 25;
const SEED: u64 = 0x636f_6e63;

/// The affine conchoid obtained by eliminating the point of `C` and the
/// parameter of the line through the origin, rather than by the resultant
/// construction. Elimination only sees the support: multiplicities are lost,
/// and factors introduced by the elimination itself are pruned by testing
/// against the membership oracle on random lines.
///
/// The result is an equation in `x, y` (over the `x, y, z` variables, with no
/// `z`), or [`Error::ZeroResultant`] when an intermediate resultant vanishes.
pub fn elimination_crosscheck<K: Field>(b: &PlaneCurve<K>, c: &PlaneCurve<K>) -> Result<MultiPoly<K>> {
    let vars = Vars::new(&["x", "y", "u", "v"]);
    let v = |k| MultiPoly::<K>::var(&vars, k);
    let one = MultiPoly::one(&vars);
    // a point (u, v) of C and its translate (x, y) along the line through 0
    let f = b
        .equation()
        .compose(&[&v(0) - &v(2), &v(1) - &v(3), one.clone()], &vars);
    let g = c.equation().compose(&[v(2), v(3), one], &vars);
    let line = &(&v(2) * &v(1)) - &(&v(3) * &v(0));
    let r1 = sylvester_resultant(&f, &line, 3)?;
    let r2 = sylvester_resultant(&g, &line, 3)?;
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let r = sylvester_resultant(&r1, &r2, 2)?;
    if r.is_zero() {
        return Err(Error::ZeroResultant);
    }

    let xy = Vars::new(&["y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let lines: Vec<(K, K)> = (0..SAMPLE_LINES)
        .map(|_| {
            let s = rat(rng.gen_range(-40..=40), rng.gen_range(1..=7));
            let t = rat(rng.gen_range(-40..=40), rng.gen_range(1..=7));
            (K::from_rational(s), K::from_rational(t))
        })
        .collect();
    let oracle: Vec<_> = lines
        .iter()
        .map(|(s, t)| membership_along_line(b, c, s, t))
        .collect::<Result<_>>()?;

    let target = Vars::xyz();
    let mut out = MultiPoly::one(&vars);
    for (h, _) in squarefree_decomposition(&r) {
        if h.is_constant() {
            continue;
        }
        let genuine = lines.iter().zip(&oracle).all(|((s, t), m)| {
            let y = MultiPoly::<K>::var(&xy, 0);
            let x = &y.scale(s) + &MultiPoly::constant(&xy, t.clone());
            let zero = MultiPoly::zero(&xy);
            let hl = h.compose(&[x, y, zero.clone(), zero], &xy);
            let hl = hl.to_univariate(0).expect("one variable");
            if hl.degree().unwrap_or(0) == 0 || m.is_zero() {
                return true;
            }
            let hl = hl.squarefree_part();
            m.div_rem(&hl).1.is_zero()
        });
        if genuine {
            out = &out * &h;
        }
    }
    let out = squarefree_part(&out).restrict_vars(&Vars::new(&["x", "y"]))?;
    Ok(out.embed(&target)?.monic())
}

/// Degree and genus of the proper conchoid of a curve of degree `delta` and
/// genus `gamma` with respect to a smooth base curve of degree `d` and genus
/// `g`, assuming the general position hypotheses.
pub fn degree_genus_predict(d: u32, g: &Rational, delta: u32, gamma: &Rational) -> Result<(u32, Rational)> {
    if d == 0 || delta == 0 {
        return Err(Error::DegreeZero);
    }
    let smooth = rat(((d as i64 - 1) * (d as i64 - 2)) / 2, 1);
    if *g != smooth {
        return Err(Error::InconsistentGenus {
            degree: d,
            genus: g.to_string(),
        });
    }
    let (dq, deltaq) = (rat(d as i64, 1), rat(delta as i64, 1));
    let one = rat(1, 1);
    let genus = &dq * gamma + &deltaq * g + (&dq - &one) * (&deltaq - &one);
    Ok((2 * d * delta, genus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::conchoid::conchoidal_transform;

    fn c(s: &str) -> PlaneCurve<Rational> {
        PlaneCurve::parse(s, false).unwrap()
    }

    #[test]
    fn circle_and_diameter_loses_a_multiplicity() {
        let e = elimination_crosscheck(&c("x^2+y^2-z^2"), &c("x")).unwrap();
        let expected: MultiPoly<Rational> = parse_poly("x^3+x*y^2-x", &Vars::xyz()).unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn same_support_as_the_transform() {
        let b = c("x^2+y^2-z^2");
        let l = c("x-2*z");
        let e = elimination_crosscheck(&b, &l).unwrap();
        let r = conchoidal_transform(&b, &l).unwrap().dehomogenize();
        assert!(e.eq_up_to_scalar(&squarefree_part(&r)));
    }

    #[test]
    fn predictions() {
        let z = rat(0, 1);
        assert_eq!(degree_genus_predict(2, &z, 1, &z).unwrap(), (4, z.clone()));
        assert_eq!(degree_genus_predict(2, &z, 2, &z).unwrap(), (8, rat(1, 1)));
        assert_eq!(degree_genus_predict(3, &rat(1, 1), 1, &z).unwrap(), (6, rat(1, 1)));
        assert!(matches!(
            degree_genus_predict(3, &z, 1, &z),
            Err(Error::InconsistentGenus { degree: 3, .. })
        ));
    }
}
