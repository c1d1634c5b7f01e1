use crate::conchoid::{conchoidal_transform, extract_known_components, Divisor, Label, PlaneCurve, Scene};
use crate::error::{Error, Result};
use crate::scalar::Field;

use super::CircleSpec;

/// The conchoid of `c` iterated `n` times with respect to the circle `b`,
/// centred at the origin, decomposed into its known components.
///
/// For `n = 2` the divisor is checked against the generic pattern: `B` with
/// multiplicity `2 delta`, each line joining the centre to a cyclic point with
/// multiplicity `3 delta`, `C` twice, and a residual equal to the conchoid of
/// `C` with respect to the circle of twice the radius. For larger `n` the
/// curve removed is the `(n - 2)`-nd conchoid, and the residual must be the
/// conchoid with respect to the circle of `n` times the radius.
pub fn iterated_conchoid<K: Field>(b: &CircleSpec, c: &PlaneCurve<K>, n: u32) -> Result<Divisor<K>> {
    if n == 0 {
        return Err(Error::InvalidArgument("iteration count must be positive".into()));
    }
    if !b.is_centered() {
        return Err(Error::InvalidArgument("the circle must be centred at the origin".into()));
    }
    let base: PlaneCurve<K> = b.curve();
    let scene = Scene::new(base.clone())?;
    if n == 1 {
        let r = conchoidal_transform(&base, c)?;
        return extract_known_components(&r, &scene, None);
    }
    let nth = |k: u32| -> Result<PlaneCurve<K>> {
        if k == 0 {
            Ok(c.clone())
        } else {
            conchoidal_transform(&b.scaled(k).curve(), c)
        }
    };
    let previous = nth(n - 1)?;
    let removed = nth(n - 2)?;
    let r = conchoidal_transform(&base, &previous)?;
    let divisor = extract_known_components(&r, &scene, Some(&removed))?;
    let expected = nth(n)?;
    if !PlaneCurve::new(divisor.residual())
        .map(|res| res.same_curve(&expected))
        .unwrap_or(false)
    {
        return Err(Error::DecompositionMismatch(format!(
            "residual {} is not the conchoid {} for radius multiple {n}",
            divisor.residual(),
            expected
        )));
    }
    if n == 2 {
        let delta = c.degree();
        let lines_ok = divisor
            .with_label(Label::LineBlock)
            .all(|comp| comp.mult == 3 * delta)
            && divisor.with_label(Label::LineBlock).map(|comp| comp.poly.total_degree()).sum::<u32>() == 2;
        let checks = [
            (divisor.multiplicity(Label::Base) == 2 * delta, "base"),
            (lines_ok, "lines"),
            (divisor.multiplicity(Label::Input) == 2, "input"),
        ];
        if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
            return Err(Error::DecompositionMismatch(format!(
                "unexpected multiplicity of the {what} component in {divisor}"
            )));
        }
    }
    Ok(divisor)
}
