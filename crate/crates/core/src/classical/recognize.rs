use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{gcd, parse_poly, solve_system, square_root_up_to_scalar, MultiPoly, UniPoly, Vars};
use crate::conchoid::{
    conchoidal_transform, extract_known_components, infinity_restriction, membership_along_line, multiplicity_at, PlaneCurve,
    ProjPoint, Scene,
};
use crate::error::{Error, Result};
use crate::resultant::sylvester_resultant;
use crate::scalar::{promote, Field, GaussianRational, Rational};

use super::frame::{circle, recenter_poly, to_uv, uncenter_poly};
use super::split::{split_test, SplitVerdict, SplitWitness};

type Qi = GaussianRational;
type QiPoly = MultiPoly<Qi>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecognitionVerdict {
    Yes,
    No,
    Inconclusive,
}

impl RecognitionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            RecognitionVerdict::Yes => "yes",
            RecognitionVerdict::No => "no",
            RecognitionVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// One named necessary condition and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A verified centre, radius and curve whose conchoid gives `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate<K: Field> {
    pub center: (K, K),
    pub r2: Rational,
    pub witness: MultiPoly<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport<K: Field> {
    pub verdict: RecognitionVerdict,
    pub checks: Vec<Check>,
    pub candidates: Vec<Candidate<K>>,
}

impl<K: Field> RecognitionReport<K> {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.as_str(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "candidates": self.candidates.iter().map(|c| json!({
                "center": [c.center.0.to_string(), c.center.1.to_string()],
                "r2": c.r2.to_string(),
                "witness": c.witness.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl<K: Field> fmt::Display for RecognitionReport<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict.as_str())?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
        }
        for c in &self.candidates {
            writeln!(f, "  centre ({}, {}), r^2 = {}: {}", c.center.0, c.center.1, c.r2, c.witness)?;
        }
        Ok(())
    }
}

/// Extra inputs for the recognition procedures.
#[derive(Clone, Debug)]
pub struct RecognitionOptions<K: Field> {
    /// Additional probe lines. A line is used only for the centres it passes
    /// through.
    pub probes: Vec<MultiPoly<K>>,
    /// Additional values of `r^2` to try at every centre.
    pub radii: Vec<Rational>,
}

impl<K: Field> Default for RecognitionOptions<K> {
    fn default() -> Self {
        RecognitionOptions {
            probes: Vec::new(),
            radii: Vec::new(),
        }
    }
}

/// Candidate values of `r^2` with remarks about skipped probes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadiusCandidates {
    pub radii: Vec<Rational>,
    pub notes: Vec<String>,
}

/// Squared radii suggested by pairs of points of `d` collinear with `a`.
///
/// Each probe line through `a` is intersected with `d`. For every pair of
/// intersection points, and every intersection point paired with `a`, the
/// squared distance `s` gives the candidates `s` and `s / 4`. With no probes
/// the lines through `a` parallel to the axes are used.
pub fn candidate_radii<K: Field>(
    d: &PlaneCurve<K>,
    a: &ProjPoint<K>,
    probes: &[MultiPoly<K>],
) -> Result<RadiusCandidates> {
    let (ca, cb) = a.affine_coords()?;
    let xyz = Vars::xyz();
    let defaults;
    let probes = if probes.is_empty() {
        let z = MultiPoly::var(&xyz, 2);
        defaults = [
            &MultiPoly::var(&xyz, 0) - &z.scale(&ca),
            &MultiPoly::var(&xyz, 1) - &z.scale(&cb),
        ];
        &defaults[..]
    } else {
        probes
    };
    let tv = Vars::new(&["t"]);
    let t = MultiPoly::<K>::var(&tv, 0);
    let four = Rational::from_integer(4.into());
    let mut out = RadiusCandidates::default();
    for line in probes {
        let line = line.embed(&xyz)?;
        if line.total_degree() != 1 || !line.is_homogeneous() {
            return Err(Error::InvalidArgument(format!("probe {line} is not a line")));
        }
        if !line.eval(a.coords()).is_zero() {
            return Err(Error::InvalidArgument(format!("probe {line} does not pass through the centre")));
        }
        let alpha = line.coefficient(&[1, 0, 0]);
        let beta = line.coefficient(&[0, 1, 0]);
        let images = [
            &MultiPoly::constant(&tv, ca.clone()) + &t.scale(&beta),
            &MultiPoly::constant(&tv, cb.clone()) - &t.scale(&alpha),
            MultiPoly::one(&tv),
        ];
        let restricted = d.equation().compose(&images, &tv);
        let Some(u) = restricted.to_univariate(0).filter(|u| !u.is_zero()) else {
            out.notes.push(format!("probe {line} lies on the curve, skipped"));
            continue;
        };
        let roots = K::field_roots(&u);
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        if found < u.degree().unwrap_or(0) {
            out.notes.push(format!("probe {line}: some intersections are not defined over the field"));
        }
        let mut params: Vec<K> = roots.into_iter().map(|(r, _)| r).collect();
        if !params.iter().any(|p| p.is_zero()) {
            params.push(K::zero());
        }
        let norm = alpha.clone() * alpha + beta.clone() * beta;
        for (i, p) in params.iter().enumerate() {
            for q in &params[i + 1..] {
                let diff = p.clone() - q.clone();
                let s = diff.clone() * diff * norm.clone();
                if !s.is_real() || s.real_part() <= Rational::zero() {
                    continue;
                }
                let s = s.real_part();
                out.radii.push(&s / &four);
                out.radii.push(s);
            }
        }
    }
    out.radii.sort();
    out.radii.dedup();
    Ok(out)
}

struct Pipeline<K: Field> {
    checks: Vec<Check>,
    candidates: Vec<Candidate<K>>,
}

impl<K: Field> Pipeline<K> {
    fn new() -> Self {
        Pipeline {
            checks: Vec::new(),
            candidates: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    fn finish(self, verdict: RecognitionVerdict) -> RecognitionReport<K> {
        RecognitionReport {
            verdict,
            checks: self.checks,
            candidates: self.candidates,
        }
    }

    fn error(mut self, step: &str, e: Error) -> RecognitionReport<K> {
        self.check(step, false, format!("computation failed: {e}"));
        self.finish(RecognitionVerdict::Inconclusive)
    }
}

/// Decide whether `d` is the conchoid of some curve with respect to a circle.
pub fn recognize_complete<K: Field>(d: &PlaneCurve<K>) -> RecognitionReport<K> {
    recognize_complete_with(d, &RecognitionOptions::default())
}

pub fn recognize_complete_with<K: Field>(d: &PlaneCurve<K>, opts: &RecognitionOptions<K>) -> RecognitionReport<K> {
    use RecognitionVerdict::*;
    let mut p = Pipeline::new();
    let n = d.degree();
    if !p.check("degree", n % 4 == 0, format!("degree {n}, a multiple of 4 is required")) {
        return p.finish(No);
    }
    let delta = n / 4;
    if !p.check("squarefree", d.is_squarefree(), "the curve must be reduced") {
        return p.finish(Inconclusive);
    }

    let top = infinity_restriction(d);
    let top_ok = cyclic_square(top.poly(), delta);
    let detail = match &top_ok {
        Some(h) => format!("F(x, y, 0) = c (x^2+y^2)^{delta} ({h})^2"),
        None => format!("F(x, y, 0) = {top} is not c (x^2+y^2)^{delta} H^2"),
    };
    if !p.check("points at infinity", top_ok.is_some(), detail) {
        return p.finish(No);
    }

    let (centres, exhaustive) = match high_multiplicity_points(d, 2 * delta) {
        Ok(found) => found,
        Err(e) => return p.error("centre", e),
    };
    let listed: Vec<String> = centres.iter().map(point_str).collect();
    let detail = if centres.is_empty() {
        format!("no affine point of multiplicity {} found", 2 * delta)
    } else {
        format!("points of multiplicity >= {}: {}", 2 * delta, listed.join(", "))
    };
    if !p.check("centre", !centres.is_empty(), detail) {
        return p.finish(if exhaustive { No } else { Inconclusive });
    }

    let work = match radius_work(&mut p, d, &centres, opts) {
        Ok(w) => w,
        Err(e) => return p.error("radius", e),
    };
    if work.is_empty() {
        return p.finish(Inconclusive);
    }
    let results: Vec<Result<Option<MultiPoly<K>>>> = work
        .par_iter()
        .map(|(a, r2)| verify_complete(d, a, r2))
        .collect();
    collect(p, &work, results, "conchoid")
}

/// Decide whether `d` is the proper conchoid, or a component of the proper
/// conchoid, of some curve with respect to a circle.
pub fn recognize_proper<K: Field>(d: &PlaneCurve<K>) -> RecognitionReport<K> {
    recognize_proper_with(d, &RecognitionOptions::default())
}

pub fn recognize_proper_with<K: Field>(d: &PlaneCurve<K>, opts: &RecognitionOptions<K>) -> RecognitionReport<K> {
    use RecognitionVerdict::*;
    let mut p = Pipeline::new();
    let n = d.degree();
    if !p.check("degree", n >= 2, format!("degree {n}, lines are the trivial case")) {
        return p.finish(Inconclusive);
    }
    if !p.check("squarefree", d.is_squarefree(), "the curve must be reduced") {
        return p.finish(Inconclusive);
    }
    let (offsets, exhaustive) = match tangent_offsets(d) {
        Ok(found) => found,
        Err(e) => return p.error("tangent lines", e),
    };
    let detail = if offsets.is_empty() {
        "no line through a cyclic point is everywhere tangent".to_string()
    } else {
        let shown: Vec<String> = offsets.iter().map(|c| format!("x+i*y = ({c}) z")).collect();
        format!("everywhere tangent: {}", shown.join(", "))
    };
    if !p.check("tangent lines", !offsets.is_empty(), detail) {
        return p.finish(if exhaustive { No } else { Inconclusive });
    }
    let centres: Vec<ProjPoint<K>> = offsets
        .iter()
        .map(|c| ProjPoint::affine(K::from_rational(c.real_part()), K::from_rational(c.imag_part())))
        .filter(|a| K::KIND == crate::scalar::FieldKind::Qi || a.coords().iter().all(|c| c.is_real()))
        .collect();

    let work = match radius_work(&mut p, d, &centres, opts) {
        Ok(w) => w,
        Err(e) => return p.error("radius", e),
    };
    if work.is_empty() {
        return p.finish(Inconclusive);
    }
    let mut witnesses = Vec::new();
    for a in &centres {
        let w = match split_test(d, a) {
            Ok(SplitVerdict::Split(w)) => Some(w),
            _ => None,
        };
        witnesses.push((a.clone(), w));
    }
    let results: Vec<Result<Option<MultiPoly<K>>>> = work
        .par_iter()
        .map(|(a, r2)| {
            let w = witnesses.iter().find(|(c, _)| c == a).and_then(|(_, w)| w.as_ref());
            verify_proper(d, a, r2, w)
        })
        .collect();
    collect(p, &work, results, "proper conchoid")
}

fn collect<K: Field>(
    mut p: Pipeline<K>,
    work: &[(ProjPoint<K>, Rational)],
    results: Vec<Result<Option<MultiPoly<K>>>>,
    what: &str,
) -> RecognitionReport<K> {
    let mut failures = Vec::new();
    for ((a, r2), res) in work.iter().zip(results) {
        match res {
            Ok(Some(witness)) => {
                let (x, y) = a.affine_coords().expect("affine centre");
                p.candidates.push(Candidate {
                    center: (x, y),
                    r2: r2.clone(),
                    witness,
                });
            }
            Ok(None) => {}
            Err(e) => failures.push(format!("{} r^2 = {r2}: {e}", point_str(a))),
        }
    }
    let found = !p.candidates.is_empty();
    let mut detail = if found {
        format!("{} verified candidate(s)", p.candidates.len())
    } else {
        format!("no candidate centre and radius gives the curve as a {what}")
    };
    if !failures.is_empty() {
        detail.push_str(&format!("; failed: {}", failures.join("; ")));
    }
    p.check("witness", found, detail);
    p.finish(if found {
        RecognitionVerdict::Yes
    } else {
        RecognitionVerdict::Inconclusive
    })
}

fn radius_work<K: Field>(
    p: &mut Pipeline<K>,
    d: &PlaneCurve<K>,
    centres: &[ProjPoint<K>],
    opts: &RecognitionOptions<K>,
) -> Result<Vec<(ProjPoint<K>, Rational)>> {
    let mut work = Vec::new();
    let mut details = Vec::new();
    for a in centres {
        let probes: Vec<MultiPoly<K>> = opts
            .probes
            .iter()
            .filter(|l| l.embed(&Vars::xyz()).map(|l| l.eval(a.coords()).is_zero()).unwrap_or(false))
            .cloned()
            .collect();
        let mut found = candidate_radii(d, a, &[])?;
        if !probes.is_empty() {
            let extra = candidate_radii(d, a, &probes)?;
            found.radii.extend(extra.radii);
            found.notes.extend(extra.notes);
        }
        found.radii.extend(opts.radii.iter().cloned());
        found.radii.sort();
        found.radii.dedup();
        let shown: Vec<String> = found.radii.iter().map(|r| r.to_string()).collect();
        let mut detail = format!("{}: r^2 in {{{}}}", point_str(a), shown.join(", "));
        for note in &found.notes {
            detail.push_str(&format!("; {note}"));
        }
        details.push(detail);
        work.extend(found.radii.into_iter().map(|r| (a.clone(), r)));
    }
    p.check("radius", !work.is_empty(), details.join("; "));
    Ok(work)
}

fn point_str<K: Field>(a: &ProjPoint<K>) -> String {
    match a.affine_coords() {
        Ok((x, y)) => format!("({x}, {y})"),
        Err(_) => {
            let [x, y, z] = a.coords();
            format!("[{x}:{y}:{z}]")
        }
    }
}

/// `H` with `f = c (x^2 + y^2)^delta H^2`, for a form in `x, y`.
fn cyclic_square<K: Field>(f: &MultiPoly<K>, delta: u32) -> Option<MultiPoly<K>> {
    if f.is_zero() {
        return None;
    }
    let q = parse_poly("x^2+y^2", f.vars()).ok()?;
    let (rest, k) = f.divide_out(&q).ok()?;
    if k < delta {
        return None;
    }
    let rest = &rest * &q.pow(k - delta);
    square_root_up_to_scalar(&rest).map(|(_, h)| h)
}

/// Affine points of multiplicity at least `m`, and whether the search was
/// complete.
fn high_multiplicity_points<K: Field>(d: &PlaneCurve<K>, m: u32) -> Result<(Vec<ProjPoint<K>>, bool)> {
    let f = d.dehomogenize().restrict_vars(&Vars::xy())?;
    let mut eqs = vec![f.clone(), f.derivative(0), f.derivative(1)];
    if m >= 3 {
        let k = m - 1;
        for i in 0..=k {
            let mut g = f.clone();
            for _ in 0..i {
                g = g.derivative(0);
            }
            for _ in 0..k - i {
                g = g.derivative(1);
            }
            eqs.push(g);
        }
    }
    let sols = solve_system(&eqs);
    let points = sols
        .points
        .into_iter()
        .map(|p| ProjPoint::affine(p[0].clone(), p[1].clone()))
        .filter(|a| multiplicity_at(d, a) >= m)
        .collect();
    Ok((points, sols.exhaustive))
}

/// Offsets `c` in `Q(i)` such that the line `x + i y = c z` through the
/// cyclic point `[1 : i : 0]` is everywhere tangent to `d`, together with its
/// conjugate line `x - i y = conj(c) z`.
fn tangent_offsets<K: Field>(d: &PlaneCurve<K>) -> Result<(Vec<Qi>, bool)> {
    let g = to_uv(d.to_gaussian().equation());
    let cv = Vars::new(&["c", "v"]);
    let restricted = g.compose(
        &[MultiPoly::var(&cv, 0), MultiPoly::var(&cv, 1), MultiPoly::one(&cv)],
        &cv,
    );
    if !restricted.involves(1) {
        return Ok((Vec::new(), false));
    }
    let disc = sylvester_resultant(&restricted, &restricted.derivative(1), 1)?;
    let coeffs = restricted.coeffs_in(1);
    let lead = coeffs.last().expect("involves v");
    let mut offsets: Vec<Qi> = Vec::new();
    let mut exhaustive = true;
    for h in [disc, lead.clone()] {
        let Some(u) = h.to_univariate(0) else {
            exhaustive = false;
            continue;
        };
        if u.is_zero() {
            // every line through the cyclic point meets d in a repeated point
            exhaustive = false;
            continue;
        }
        let roots = Qi::field_roots(&u);
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        if found < u.degree().unwrap_or(0) {
            exhaustive = false;
        }
        offsets.extend(roots.into_iter().map(|(r, _)| r));
    }
    offsets.sort_by_key(|c| (c.real_part(), c.imag_part()));
    offsets.dedup();
    let vz = Vars::new(&["w", "z"]);
    let w = MultiPoly::<Qi>::var(&vz, 0);
    let z = MultiPoly::<Qi>::var(&vz, 1);
    let is_square = |f: QiPoly| !f.is_zero() && square_root_up_to_scalar(&f).is_some();
    let tangent: Vec<Qi> = offsets
        .into_iter()
        .filter(|c| {
            is_square(g.compose(&[z.scale(c), w.clone(), z.clone()], &vz))
                && is_square(g.compose(&[w.clone(), z.scale(&c.conj()), z.clone()], &vz))
        })
        .collect();
    Ok((tangent, exhaustive))
}

/// The factor of multiplicity two of `res`, found without factoring.
fn double_factor<K: Field>(res: &MultiPoly<K>) -> Option<MultiPoly<K>> {
    for var in 0..2 {
        let dv = res.derivative(var);
        if dv.is_zero() {
            continue;
        }
        let h = gcd(res, &dv);
        if h.is_constant() {
            continue;
        }
        let once = res.exact_div(&h).ok()??;
        once.exact_div(&h).ok()??;
        return Some(h.monic());
    }
    None
}

/// Quick necessary condition on a line: the transform of `d0` restricted to
/// a fixed affine line must keep a repeated root once the circle and the
/// lines through the cyclic points are divided out.
fn line_test<K: Field>(b0: &PlaneCurve<K>, d0: &PlaneCurve<K>, r2: &K) -> Result<bool> {
    let (s, t) = (K::from_rational(Rational::new(3.into(), 7.into())), K::from_rational(Rational::new((-2).into(), 5.into())));
    let mut p = membership_along_line(b0, d0, &s, &t)?;
    if p.is_zero() {
        return Ok(true);
    }
    // (s y + t)^2 + y^2, with and without the radius
    let q = UniPoly::new(vec![t.clone() * t.clone(), K::from_i64(2) * s.clone() * t, s.clone() * s + K::one()]);
    let circle = &q - &UniPoly::constant(r2.clone());
    for f in [circle, q] {
        while let Some(next) = p.exact_div(&f) {
            p = next;
        }
    }
    Ok(p.gcd(&p.derivative()).degree().unwrap_or(0) > 0)
}

fn verify_complete<K: Field>(d: &PlaneCurve<K>, a: &ProjPoint<K>, r2: &Rational) -> Result<Option<MultiPoly<K>>> {
    let r2k: K = promote(r2);
    let d0 = PlaneCurve::new(recenter_poly(d.equation(), a)?)?;
    let b0 = circle(&ProjPoint::origin(), &r2k);
    if !line_test(&b0, &d0, &r2k)? {
        return Ok(None);
    }
    let Some(h) = double_factor(&proper_residual(&b0, &d0)?) else {
        return Ok(None);
    };
    let c0 = PlaneCurve::new(h)?;
    if !conchoidal_transform(&b0, &c0)?.same_curve(&d0) {
        return Ok(None);
    }
    Ok(Some(uncenter_poly(c0.equation(), a)?.monic()))
}

fn proper_residual<K: Field>(b0: &PlaneCurve<K>, d0: &PlaneCurve<K>) -> Result<MultiPoly<K>> {
    let t = conchoidal_transform(b0, d0)?;
    let div = extract_known_components(&t, &Scene::new(b0.clone())?, None)?;
    Ok(div.residual())
}

/// Is `d0` a component of the transform of the non-constant `c0`? Both are
/// in the frame centred at the origin.
fn generates<K: Field>(b0: &PlaneCurve<K>, d0: &PlaneCurve<K>, c0: &MultiPoly<K>) -> Result<bool> {
    if c0.total_degree() == 0 {
        return Ok(false);
    }
    let forward = conchoidal_transform(b0, &PlaneCurve::new(c0.clone())?)?;
    Ok(d0.equation().divides(forward.equation()))
}

fn verify_proper<K: Field>(
    d: &PlaneCurve<K>,
    a: &ProjPoint<K>,
    r2: &Rational,
    witness: Option<&SplitWitness>,
) -> Result<Option<MultiPoly<K>>> {
    let r2k: K = promote(r2);
    let d0 = PlaneCurve::new(recenter_poly(d.equation(), a)?)?;
    let b0 = circle(&ProjPoint::origin(), &r2k);
    if line_test(&b0, &d0, &r2k)? {
        if let Some(h) = double_factor(&proper_residual(&b0, &d0)?) {
            if generates(&b0, &d0, &h)? {
                return Ok(Some(uncenter_poly(&h, a)?.monic()));
            }
        }
    }
    // a split component is never doubled: take the explicit components of
    // the conchoid of d instead
    let Some(w) = witness else {
        return Ok(None);
    };
    let Some((c1, c2)) = w.components(&promote(r2))?.pair else {
        return Ok(None);
    };
    let mut best: Option<MultiPoly<K>> = None;
    for c in [c1, c2] {
        let Some(c) = from_gaussian::<K>(&c) else {
            continue;
        };
        if c.total_degree() == 0 || best.as_ref().is_some_and(|b| b.total_degree() <= c.total_degree()) {
            continue;
        }
        if generates(&b0, &d0, &recenter_poly(&c, a)?)? {
            best = Some(c);
        }
    }
    Ok(best)
}

fn from_gaussian<K: Field>(p: &QiPoly) -> Option<MultiPoly<K>> {
    if p.is_real() {
        return Some(p.map_coeffs(|c| K::from_rational(c.real_part())));
    }
    let i = K::imaginary_unit()?;
    Some(p.map_coeffs(|c| K::from_rational(c.real_part()) + i.clone() * K::from_rational(c.imag_part())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type C = PlaneCurve<Rational>;

    fn quartic() -> C {
        C::parse("x^4+x^2*y^2-4*x^3*z-4*x*y^2*z+3*x^2*z^2+4*y^2*z^2", false).unwrap()
    }

    #[test]
    fn radii_from_probes() {
        let found = candidate_radii(&quartic(), &ProjPoint::origin(), &[]).unwrap();
        assert!(found.radii.contains(&rat(1, 1)));
        let circle = C::parse("x^2+y^2-4*z^2", false).unwrap();
        let x = parse_poly("x", &Vars::xyz()).unwrap();
        let found = candidate_radii(&circle, &ProjPoint::origin(), &[x]).unwrap();
        assert_eq!(found.radii, vec![rat(1, 1), rat(4, 1), rat(16, 1)]);
        let off = parse_poly("x-z", &Vars::xyz()).unwrap();
        assert!(candidate_radii(&circle, &ProjPoint::origin(), &[off]).is_err());
    }

    #[test]
    fn complete_round_trip() {
        let report = recognize_complete(&quartic());
        assert_eq!(report.verdict, RecognitionVerdict::Yes, "{report}");
        let c = &report.candidates[0];
        assert_eq!(c.center, (rat(0, 1), rat(0, 1)));
        assert_eq!(c.r2, rat(1, 1));
        assert_eq!(c.witness.to_string(), "x-2*z");
    }

    #[test]
    fn shifted_conic_round_trip() {
        let c = C::parse("x^2+2*y^2-3*x*z-4*z^2", false).unwrap();
        let b = C::parse("x^2+y^2-z^2", false).unwrap();
        let a = ProjPoint::affine(rat(1, 1), rat(2, 1));
        let back = ProjPoint::affine(rat(-1, 1), rat(-2, 1));
        let d = super::super::recenter(&conchoidal_transform(&b, &c).unwrap(), &back).unwrap();
        let report = recognize_complete(&d);
        assert_eq!(report.verdict, RecognitionVerdict::Yes, "{report}");
        let found = &report.candidates[0];
        assert_eq!(found.center, (rat(1, 1), rat(2, 1)));
        let expected = super::super::recenter(&c, &back).unwrap();
        assert_eq!(found.witness, expected.equation().monic());
        assert!(a.is_affine());
    }

    #[test]
    fn complete_rejections() {
        let report = recognize_complete(&C::parse("x^2+y^2-z^2", false).unwrap());
        assert_eq!(report.verdict, RecognitionVerdict::No);
        assert_eq!(report.failed_checks().next().unwrap().name, "degree");
        let generic = C::parse("x^4+2*x^3*y-y^4+x^2*z^2+3*x*y*z^2-5*z^4+x*z^3", false).unwrap();
        let report = recognize_complete(&generic);
        assert_ne!(report.verdict, RecognitionVerdict::Yes);
    }

    #[test]
    fn proper_split_component() {
        let d = C::parse("x^4+(y^2-2*y*z)*x^2-2*y^3*z+y^2*z^2", false).unwrap();
        let report = recognize_proper(&d);
        assert_eq!(report.verdict, RecognitionVerdict::Yes, "{report}");
        assert!(report.candidates.iter().all(|c| c.center == (rat(0, 1), rat(0, 1))));
        let json = report.to_json();
        assert_eq!(json["verdict"], "yes");
    }
}
