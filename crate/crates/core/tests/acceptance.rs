//! Acceptance suite: one line per criterion, exact comparisons throughout.
//! Runs without the libtest harness so the report is always printed.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conchoid_core::algebra::{parse_poly, MultiPoly, Vars};
use conchoid_core::classical::{
    conic_focus_split, iterated_conchoid, recognize_complete, recognize_proper, split_test, CircleSpec,
    RecognitionVerdict, SplitVerdict,
};
use conchoid_core::conchoid::{
    conchoidal_transform, degree_genus_predict, elimination_crosscheck, extract_known_components,
    infinity_restriction, membership_value, multiplicity_at, tangent_cone_at, Label, PlaneCurve, ProjPoint, Scene,
};
use conchoid_core::scalar::rat;
use conchoid_core::{GaussianRational, Rational};

type P = MultiPoly<Rational>;
type C = PlaneCurve<Rational>;

const SEED: u64 = 0x5eed_c0c0;

fn poly(s: &str) -> P {
    parse_poly(s, &Vars::xyz()).unwrap()
}

fn curve(s: &str) -> C {
    C::parse(s, false).unwrap()
}

fn circle() -> C {
    curve("x^2+y^2-z^2")
}

/// Random form of degree `deg` using only monomials accepted by `keep`,
/// coefficients in [-5, 5].
fn random_form(rng: &mut ChaCha8Rng, deg: u32, keep: impl Fn(u32, u32, u32) -> bool) -> P {
    let vars = Vars::xyz();
    loop {
        let mut terms = Vec::new();
        for a in 0..=deg {
            for b in 0..=deg - a {
                let c = deg - a - b;
                if keep(a, b, c) {
                    let v: i64 = rng.gen_range(-5..=5);
                    terms.push((vec![a, b, c], rat(v, 1)));
                }
            }
        }
        let p = P::from_terms(&vars, terms);
        if !p.is_zero() && p.total_degree() == deg {
            return p;
        }
    }
}

fn random_curve(rng: &mut ChaCha8Rng, deg: u32) -> C {
    loop {
        let p = random_form(rng, deg, |_, _, _| true);
        if let Ok(c) = C::new(p) {
            if c.is_squarefree() {
                return c;
            }
        }
    }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_golden_equation() -> Outcome {
    let t = conchoidal_transform(&circle(), &curve("x-2*z")).map_err(|e| e.to_string())?;
    let expected = parse_poly("4*y^2+x^4+x^2*y^2-4*x^3-4*x*y^2+3*x^2", &Vars::xyz()).unwrap();
    ensure(t.dehomogenize().eq_up_to_scalar(&expected), || format!("got {}", t.dehomogenize()))?;
    Ok(format!("{}", t.dehomogenize()))
}

fn c2_golden_decomposition() -> Outcome {
    let b = circle();
    let scene = Scene::new(b.clone()).unwrap();
    let line = curve("x");
    let t = conchoidal_transform(&b, &line).unwrap();
    ensure(t.equation().eq_up_to_scalar(&poly("x^2*(x^2+y^2-z^2)")), || format!("x: got {t}"))?;
    let d = extract_known_components(&t, &scene, Some(&line)).unwrap();
    let json = d.to_json();
    ensure(d.multiplicity(Label::Input) == 2 && d.multiplicity(Label::Base) == 1 && d.components.len() == 2, || {
        format!("x: divisor {json}")
    })?;
    let inf = curve("z");
    let t = conchoidal_transform(&b, &inf).unwrap();
    ensure(t.equation().eq_up_to_scalar(&poly("z^2*(x^2+y^2)")), || format!("z: got {t}"))?;
    let d = extract_known_components(&t, &scene, None).unwrap();
    let block: Vec<_> = d.with_label(Label::LineBlock).collect();
    ensure(
        d.multiplicity(Label::Linf) == 2 && block.len() == 1 && block[0].mult == 1 && block[0].poly == poly("x^2+y^2"),
        || format!("z: divisor {}", d.to_json()),
    )?;
    Ok("2L+B and 2Linf+L1+L2".into())
}

fn c3_elimination() -> Outcome {
    let e = elimination_crosscheck(&circle(), &curve("x")).map_err(|e| e.to_string())?;
    let expected = poly("x*(x^2+y^2-1)");
    ensure(e.eq_up_to_scalar(&expected), || format!("got {e}"))?;
    // the transform itself keeps the double line
    let t = conchoidal_transform(&circle(), &curve("x")).unwrap();
    let (_, k) = t.equation().divide_out(&poly("x")).unwrap();
    ensure(k == 2, || format!("transform has x^{k}"))?;
    Ok(format!("{e} (multiplicity 2 lost)"))
}

fn c4_line_closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let vars = Vars::xyz();
    let (x, y, z) = (P::var(&vars, 0), P::var(&vars, 1), P::var(&vars, 2));
    let mut done = 0;
    while done < 10 {
        let (a, b, c): (i64, i64, i64) = (rng.gen_range(-6..=6), rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        if a == 0 && b == 0 {
            continue;
        }
        let f = &(&x.scale(&rat(a, 1)) + &y.scale(&rat(b, 1))) + &z.scale(&rat(c, 1));
        let deg = rng.gen_range(1..=3);
        let g = random_curve(&mut rng, deg);
        let lhs = conchoidal_transform(&C::new(f.clone()).unwrap(), &g).map_err(|e| e.to_string())?;
        let axby = &f - &z.scale(&rat(c, 1));
        let rhs = g.equation().compose(&[&x * &f, &y * &f, &axby * &z], &vars);
        ensure(lhs.equation().eq_up_to_scalar(&rhs), || format!("line {f}, G = {g}: {lhs} vs {rhs}"))?;
        done += 1;
    }
    Ok("10 random lines".into())
}

fn c5_resultant_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut observed = Vec::new();
    for _ in 0..20 {
        let d = rng.gen_range(1..=3);
        let delta = rng.gen_range(1..=3);
        let b = random_curve(&mut rng, d);
        let c = random_curve(&mut rng, delta);
        let t = conchoidal_transform(&b, &c).map_err(|e| e.to_string())?;
        ensure(t.degree() == 2 * d * delta, || format!("degree {} for {b} / {c}", t.degree()))?;
        let s = conchoidal_transform(&c, &b).unwrap();
        ensure(s.same_curve(&t), || format!("symmetry fails for {b} / {c}"))?;
    }
    // additivity
    for _ in 0..5 {
        let b = random_curve(&mut rng, 2);
        let c1 = random_curve(&mut rng, 1);
        let c2 = random_curve(&mut rng, 2);
        let whole = conchoidal_transform(&b, &c1.union(&c2)).unwrap();
        let parts = conchoidal_transform(&b, &c1).unwrap().union(&conchoidal_transform(&b, &c2).unwrap());
        ensure(whole.same_curve(&parts), || format!("additivity fails for {b} / {c1} / {c2}"))?;
    }
    // A on C with multiplicity nu
    for nu in 1..=2u32 {
        let b = random_curve(&mut rng, 2);
        let delta = 3;
        let g = C::new(random_form(&mut rng, delta, |_, _, c| c + nu <= delta)).unwrap();
        ensure(multiplicity_at(&g, &ProjPoint::origin()) >= nu, || "construction".into())?;
        let t = conchoidal_transform(&b, &g).unwrap();
        ensure(b.equation().pow(nu).divides(t.equation()), || format!("F^{nu} does not divide for {b} / {g}"))?;
    }
    // common point at infinity P = [1:0:0]
    let p = ProjPoint::new(rat(1, 1), rat(0, 1), rat(0, 1)).unwrap();
    let yline = poly("y");
    let mut swapped = Vec::new();
    for (d, eta, delta, eps) in [(2, 1, 2, 1), (3, 2, 2, 1), (3, 2, 3, 2), (2, 2, 3, 1), (3, 1, 3, 1)] {
        let b = C::new(random_form(&mut rng, d, |_, b, c| b + c >= eta)).unwrap();
        let g = C::new(random_form(&mut rng, delta, |_, b, c| b + c >= eps)).unwrap();
        let t = conchoidal_transform(&b, &g).map_err(|e| e.to_string())?;
        let m = multiplicity_at(&t, &p);
        // independent: order of the chart x = 1 at y = z = 0
        let chart = t.equation().specialize(0, &rat(1, 1)).min_total_degree();
        ensure(m == chart, || format!("multiplicity {m} but chart order {chart} for {b} / {g}"))?;
        // the determinant has delta rows in (y,z)^eta and d rows in (y,z)^eps
        ensure(m >= eta * delta + eps * d, || format!("multiplicity {m} at [1:0:0] for {b} / {g}"))?;
        if m < eps * delta + eta * d {
            swapped.push(format!("{m} < {} at (d, eta, delta, eps) = ({d}, {eta}, {delta}, {eps})", eps * delta + eta * d));
        }
        let (_, k) = t.equation().divide_out(&yline).unwrap();
        let (lo, hi) = if eps <= eta { (eps, eta) } else { (eta, eps) };
        let bound = lo * (hi - lo) + lo * (lo + 1) / 2;
        ensure(k >= bound, || format!("line power {k} < {bound} for {b} / {g}"))?;
        observed.push(format!("y^{k} (eps*eta = {})", eps * eta));
    }
    let swapped = if swapped.is_empty() { "none".to_string() } else { swapped.join("; ") };
    Ok(format!("20 pairs; line powers {}; below eps*delta+eta*d: {swapped}", observed.join(", ")))
}

fn compliant_conic(rng: &mut ChaCha8Rng) -> C {
    loop {
        let b = random_curve(rng, 2);
        if b.contains(&ProjPoint::origin()) || conic_det(b.equation()) == rat(0, 1) {
            continue;
        }
        if let Ok(scene) = Scene::new(b.clone()) {
            if scene.warnings().is_empty() {
                return b;
            }
        }
    }
}

/// Determinant of the symmetric matrix of a conic; zero for line pairs.
fn conic_det(f: &P) -> Rational {
    let half = rat(1, 2);
    let c = |e: [u32; 3]| f.coefficient(&e);
    let m = [
        [c([2, 0, 0]), &c([1, 1, 0]) * &half, &c([1, 0, 1]) * &half],
        [&c([1, 1, 0]) * &half, c([0, 2, 0]), &c([0, 1, 1]) * &half],
        [&c([1, 0, 1]) * &half, &c([0, 1, 1]) * &half, c([0, 0, 2])],
    ];
    &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn c6_local_data() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let origin = ProjPoint::origin();
    let vars = Vars::xyz();
    let (x, y, z) = (P::var(&vars, 0), P::var(&vars, 1), P::var(&vars, 2));
    for _ in 0..6 {
        let b = compliant_conic(&mut rng);
        let delta = rng.gen_range(1..=2);
        let c = loop {
            let c = random_curve(&mut rng, delta);
            if !c.contains(&origin) {
                break c;
            }
        };
        let t = conchoidal_transform(&b, &c).unwrap();
        let m = multiplicity_at(&t, &origin);
        ensure(m == 2 * delta, || format!("multiplicity {m} at A for {b} / {c}"))?;
        let top = infinity_restriction(&t).poly().clone();
        let predicted = &infinity_restriction(&b).poly().pow(delta) * &infinity_restriction(&c).poly().pow(2);
        ensure(top.eq_up_to_scalar(&predicted), || format!("infinity form {top} for {b} / {c}"))?;
        if delta == 1 {
            let g = c.equation();
            let (ca, cb, cc) = (g.coefficient(&[1, 0, 0]), g.coefficient(&[0, 1, 0]), g.coefficient(&[0, 0, 1]));
            let axby = &x.scale(&ca) + &y.scale(&cb);
            let cone = b.equation().compose(&[x.scale(&cc), y.scale(&cc), axby], &vars);
            let got = tangent_cone_at(&t, &origin).unwrap();
            ensure(got.eq_up_to_scalar(&cone), || format!("tangent cone {got} vs {cone}"))?;
        }
    }
    let _ = z;
    Ok("6 random compliant pairs".into())
}

fn c7_genus() -> Outcome {
    let smooth = |n: i64| (n - 1) * (n - 2) / 2;
    let cases = [(2, 1), (2, 2), (1, 1), (1, 3), (3, 1), (3, 2), (2, 3), (4, 1), (3, 3), (4, 2)];
    let (deg, g) = degree_genus_predict(2, &rat(0, 1), 1, &rat(0, 1)).map_err(|e| e.to_string())?;
    ensure((deg, g.clone()) == (4, rat(0, 1)), || format!("circle/line gives ({deg}, {g})"))?;
    let (deg, g) = degree_genus_predict(2, &rat(0, 1), 2, &rat(0, 1)).unwrap();
    ensure((deg, g.clone()) == (8, rat(1, 1)), || format!("circle/conic gives ({deg}, {g})"))?;
    for (d, delta) in cases {
        let gb = smooth(d);
        let gamma = smooth(delta);
        let want_deg = 2 * d * delta;
        let want_genus = d * gamma + delta * gb + (d - 1) * (delta - 1);
        let (deg, g) = degree_genus_predict(d as u32, &rat(gb, 1), delta as u32, &rat(gamma, 1)).unwrap();
        ensure(i64::from(deg) == want_deg && g == rat(want_genus, 1), || {
            format!("d = {d}, delta = {delta}: ({deg}, {g}) vs ({want_deg}, {want_genus})")
        })?;
    }
    Ok("(4,0), (8,1) and 10-case table".into())
}

fn c8_parabola() -> Outcome {
    let parabola = curve("(y+z)^2-(x^2+y^2)");
    let SplitVerdict::Split(w) = split_test(&parabola, &ProjPoint::origin()).map_err(|e| e.to_string())? else {
        return Err("parabola does not split".into());
    };
    ensure(w.verify(parabola.to_gaussian().equation()), || "witness identity fails".into())?;
    let comps = w.components(&GaussianRational::from(rat(1, 1))).map_err(|e| e.to_string())?;
    let (p1, p2) = comps.pair.ok_or("no explicit pair")?;
    let q1 = poly("x^4+(y^2-2*y*z)*x^2-2*y^3*z+y^2*z^2").to_gaussian();
    let q2 = poly("x^4+(y^2-2*y*z-4*z^2)*x^2-2*y^3*z-3*y^2*z^2").to_gaussian();
    let matches = |a: &MultiPoly<GaussianRational>, b: &MultiPoly<GaussianRational>| a.eq_up_to_scalar(b);
    ensure((matches(&p1, &q1) && matches(&p2, &q2)) || (matches(&p1, &q2) && matches(&p2, &q1)), || {
        format!("components {p1} and {p2}")
    })?;
    let t = conchoidal_transform(&circle(), &parabola).unwrap().to_gaussian();
    let product = &q1 * &q2;
    let mut rest = t.equation().exact_div(&product).unwrap().ok_or("product does not divide")?;
    for f in ["z", "x^2+y^2", "x^2+y^2-z^2"] {
        rest = rest.divide_out(&poly(f).to_gaussian()).unwrap().0;
    }
    ensure(rest.is_constant(), || format!("left over {rest}"))?;
    Ok(format!("twist {}, scale {}", w.twist, w.scale))
}

fn c9_focus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let vars = Vars::xyz();
    let mut agreed = 0;
    let mut foci = 0;
    while agreed < 20 {
        let a = ProjPoint::affine(rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-3..=3), 1));
        // half of the conics are built with a focus at a
        let c = if agreed % 2 == 0 {
            random_curve(&mut rng, 2)
        } else {
            let [ca, cb, _] = a.coords().clone();
            let z = P::var(&vars, 2);
            let dx = &P::var(&vars, 0) - &z.scale(&ca);
            let dy = &P::var(&vars, 1) - &z.scale(&cb);
            let q = &(&dx * &dx) + &(&dy * &dy);
            let l = random_form(&mut rng, 1, |_, _, _| true);
            let mu = rat(rng.gen_range(1..=4), 1);
            match C::new(&(&l * &l) - &q.scale(&mu)) {
                Ok(c) => c,
                Err(_) => continue,
            }
        };
        let focus = match conic_focus_split(&c, &a) {
            Ok(f) => f.is_some(),
            Err(_) => continue,
        };
        let split = match split_test(&c, &a).map_err(|e| e.to_string())? {
            SplitVerdict::Split(_) => true,
            SplitVerdict::Irreducible => false,
            SplitVerdict::Inconclusive(why) => return Err(format!("inconclusive on a conic: {why}")),
        };
        ensure(focus == split, || format!("{c} at {a:?}: focus {focus}, split {split}"))?;
        foci += usize::from(focus);
        agreed += 1;
    }
    let ellipse = curve("1/25*x^2+1/9*y^2-z^2");
    let mut hits = Vec::new();
    for a in [-4, 0, 4] {
        for b in [-1, 0, 1] {
            let p = ProjPoint::affine(rat(a, 1), rat(b, 1));
            if let SplitVerdict::Split(_) = split_test(&ellipse, &p).unwrap() {
                hits.push((a, b));
            }
        }
    }
    ensure(hits == vec![(-4, 0), (4, 0)], || format!("ellipse splits at {hits:?}"))?;
    Ok(format!("20 conics ({foci} foci), ellipse splits at (-4,0), (4,0) only"))
}

fn c10_iteration() -> Outcome {
    let b = CircleSpec::centered(rat(1, 1)).unwrap();
    let c = curve("x-3*z");
    let d = iterated_conchoid(&b, &c, 2).map_err(|e| e.to_string())?;
    ensure(d.degree() == 16, || format!("degree {}", d.degree()))?;
    let lines: Vec<_> = d.with_label(Label::LineBlock).collect();
    let lines_ok = lines.iter().all(|l| l.mult == 3) && lines.iter().map(|l| l.poly.total_degree()).sum::<u32>() == 2;
    ensure(
        d.multiplicity(Label::Base) == 2 && lines_ok && d.multiplicity(Label::Input) == 2,
        || format!("divisor {d}"),
    )?;
    let c2 = conchoidal_transform(&curve("x^2+y^2-4*z^2"), &c).unwrap();
    ensure(d.residual().eq_up_to_scalar(c2.equation()), || format!("residual {}", d.residual()))?;
    Ok(format!("{d}"))
}

fn c11_recognition() -> Outcome {
    let quartic = conchoidal_transform(&circle(), &curve("x-2*z")).unwrap();
    let report = recognize_complete(&quartic);
    ensure(report.verdict == RecognitionVerdict::Yes, || format!("complete: {report}"))?;
    let hit = report
        .candidates
        .iter()
        .find(|c| c.center == (rat(0, 1), rat(0, 1)) && c.r2 == rat(1, 1))
        .ok_or_else(|| format!("no candidate at the origin with r^2 = 1: {report}"))?;
    ensure(hit.witness == poly("x-2*z"), || format!("witness {}", hit.witness))?;
    let d1 = curve("x^4+(y^2-2*y*z)*x^2-2*y^3*z+y^2*z^2");
    let report = recognize_proper(&d1);
    ensure(report.verdict == RecognitionVerdict::Yes, || format!("proper: {report}"))?;
    ensure(
        report.candidates.iter().all(|c| c.center == (rat(0, 1), rat(0, 1))),
        || format!("proper: {report}"),
    )?;
    Ok(format!("complete witness {}, proper r^2 = {}", hit.witness, report.candidates[0].r2))
}

fn c12_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 12);
    let vars = Vars::xyz();
    let z = P::var(&vars, 2);
    let (mut checked, mut on_curve, mut degenerate) = (0, 0, 0);
    for _ in 0..5 {
        // B is a conic through R0 = (r0x, r0y); further rational points of B
        // come from secants through R0
        let (r0x, r0y) = (rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(1..=3), 1));
        let raw = random_form(&mut rng, 2, |_, _, _| true);
        let shift = raw.eval(&[r0x.clone(), r0y.clone(), rat(1, 1)]);
        let Ok(b) = C::new(&raw - &(&z * &z).scale(&shift)) else { continue };
        let c = random_curve(&mut rng, 1);
        let t = conchoidal_transform(&b, &c).unwrap();
        for k in 0..10 {
            let q = if k % 2 == 0 {
                match point_on_conchoid(&mut rng, &b, &c, (&r0x, &r0y)) {
                    Some(q) => q,
                    None => continue,
                }
            } else {
                ProjPoint::affine(rat(rng.gen_range(-40..=40), 7), rat(rng.gen_range(-40..=40), 5))
            };
            match membership_value(&b, &c, &q).map_err(|e| e.to_string())?.is_zero() {
                None => degenerate += 1,
                Some(zero) => {
                    ensure(zero == t.contains(&q), || format!("{b} / {c} at {q:?}"))?;
                    checked += 1;
                    on_curve += usize::from(zero);
                }
            }
        }
    }
    ensure(checked >= 40 && on_curve >= 15, || format!("only {checked} points, {on_curve} on the curve"))?;
    Ok(format!("{checked} points ({on_curve} on the transform, {degenerate} degenerate skipped)"))
}

/// `Q = P + R` with `R` on `B`, `P` on the line `C` and `A, P, R` collinear.
fn point_on_conchoid(
    rng: &mut ChaCha8Rng,
    b: &C,
    c: &C,
    r0: (&Rational, &Rational),
) -> Option<ProjPoint<Rational>> {
    let f = b.dehomogenize();
    let m = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    // second intersection of B with the line through R0 of slope m:
    // substitute (r0x + t, r0y + m t) and divide out t
    let tv = Vars::new(&["t"]);
    let t = P::var(&tv, 0);
    let xs = &P::constant(&tv, r0.0.clone()) + &t;
    let ys = &P::constant(&tv, r0.1.clone()) + &t.scale(&m);
    let u = f.compose(&[xs, ys, P::one(&tv)], &tv).to_univariate(0)?;
    if u.degree()? != 2 {
        return None;
    }
    let root = -(u.coeff(1) / u.coeff(2));
    let (rx, ry) = (r0.0 + &root, r0.1 + &m * &root);
    // P = s R on the line C: a s rx + b s ry + c = 0
    let g = c.equation();
    let den = g.coefficient(&[1, 0, 0]) * &rx + g.coefficient(&[0, 1, 0]) * &ry;
    if den == rat(0, 1) {
        return None;
    }
    let s = -(g.coefficient(&[0, 0, 1]) / den);
    Some(ProjPoint::affine(&s * &rx + &rx, &s * &ry + &ry))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("golden equation of the line conchoid", c1_golden_equation),
        ("golden decomposition 2L+B, 2Linf+L1+L2", c2_golden_decomposition),
        ("elimination loses the double line", c3_elimination),
        ("closed form for a base line", c4_line_closed_form),
        ("degree, symmetry, additivity, divisibility", c5_resultant_properties),
        ("local data at the origin and at infinity", c6_local_data),
        ("degree and genus formula", c7_genus),
        ("parabola splits into two quartics", c8_parabola),
        ("focus criterion agrees with split test", c9_focus),
        ("second conchoid of a line", c10_iteration),
        ("recognition round trip", c11_recognition),
        ("pointwise oracle agrees with the transform", c12_oracle),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{secs:.1}s]: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{secs:.1}s]: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
