use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use num_traits::{One, Zero};

use crate::algebra::{solve_system, square_root_up_to_scalar, MultiPoly, UniPoly, Vars};
use crate::conchoid::{PlaneCurve, ProjPoint};
use crate::error::{Error, Result};
use crate::scalar::{Field, GaussianRational};

use super::frame::{
    from_uv, isotropic_product, recenter_poly, to_gaussian_point, to_uv, uncenter_poly, uv_vars,
};

type Qi = GaussianRational;
type QiPoly = MultiPoly<Qi>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Certificate that the proper conchoid of `G` with respect to a circle
/// centred at `A` splits. With `l1, l2` the lines joining `A` to the cyclic
/// points and `q = l1 * l2`:
///
/// * even degree: `scale * G = h1^2 - twist * q * h2^2`
/// * odd degree: `scale * G = l1 * h1^2 - twist * l2 * h2^2`
///
/// Over an algebraically closed field the twist can be absorbed into `h2`;
/// over `Q(i)` it need not be a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub parity: Parity,
    pub h1: QiPoly,
    pub h2: QiPoly,
    pub scale: Qi,
    pub twist: Qi,
    pub center: ProjPoint<Qi>,
}

/// The two components of a split proper conchoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitComponents {
    /// The components themselves, when they are defined over `Q(i)`.
    pub pair: Option<(QiPoly, QiPoly)>,
    /// Their product, always defined over `Q(i)`; monic.
    pub product: QiPoly,
}

impl SplitWitness {
    /// The right-hand side of the witness identity.
    pub fn rhs(&self) -> QiPoly {
        let (l1, l2) = lines(&self.center);
        let h1 = &self.h1 * &self.h1;
        let h2 = (&self.h2 * &self.h2).scale(&self.twist);
        match self.parity {
            Parity::Even => &h1 - &(&(&l1 * &l2) * &h2),
            Parity::Odd => &(&l1 * &h1) - &(&l2 * &h2),
        }
    }

    /// Does the identity hold for the equation `g`?
    pub fn verify(&self, g: &QiPoly) -> bool {
        g.scale(&self.scale) == self.rhs()
    }

    /// The components of the proper conchoid with respect to the circle of
    /// centre `A` and radius squared `r2`.
    ///
    /// A point `Q` with `s^2 = x^2 + y^2` comes from the point
    /// `S = ((s - r) x, (s - r) y, s)` of `C`. The witness factors `G(S)`
    /// into two conjugate pieces in `s` and `w = sqrt(twist)`; the norm of
    /// each piece with respect to `s -> -s` is one component.
    pub fn components(&self, r2: &Qi) -> Result<SplitComponents> {
        let a = &self.center;
        let h1 = recenter_poly(&self.h1, a)?;
        let h2 = recenter_poly(&self.h2, a)?;
        let vars = Vars::new(&["x", "y", "z", "s", "r", "w"]);
        let v = |k| MultiPoly::<Qi>::var(&vars, k);
        let (x, y, z, s, r, w) = (v(0), v(1), v(2), v(3), v(4), v(5));
        let t = &s - &(&r * &z);
        let images = [&x * &t, &y * &t, &s * &z];
        let h1s = h1.compose(&images, &vars);
        let h2s = h2.compose(&images, &vars);
        let e = match self.parity {
            Parity::Even => &h1s + &(&(&(&w * &s) * &t) * &h2s),
            Parity::Odd => {
                let l1 = &x + &y.scale(&Qi::i());
                &(&l1 * &h1s) + &(&(&w * &s) * &h2s)
            }
        };
        let e_neg = e.substitute(3, &-&s);
        let q = &(&x * &x) + &(&y * &y);
        let reduce = |p: &QiPoly| {
            let p = reduce_square(p, 3, &q);
            let p = reduce_square(&p, 5, &MultiPoly::constant(&vars, self.twist.clone()));
            reduce_square(&p, 4, &MultiPoly::constant(&vars, r2.clone()))
        };
        let norm = reduce(&(&e * &e_neg));
        let conj = norm.substitute(5, &-&w);
        let product = reduce(&(&norm * &conj));
        let xyz = Vars::xyz();
        let strip = |p: &QiPoly| -> Result<QiPoly> {
            let p = p.restrict_vars(&xyz)?;
            let p = strip_exceptional(&p, r2)?;
            Ok(uncenter_poly(&p, a)?.monic())
        };
        let product = strip(&product)?;

        // norm = c00 + c10 w + c01 r + c11 w r
        let by_w = norm.coeffs_in(5);
        let zero = MultiPoly::zero(&vars);
        let at = |k: usize| by_w.get(k).cloned().unwrap_or_else(|| zero.clone());
        let (n0, n1) = (at(0), at(1));
        let split_r = |p: &QiPoly| {
            let c = p.coeffs_in(4);
            (
                c.first().cloned().unwrap_or_else(|| zero.clone()),
                c.get(1).cloned().unwrap_or_else(|| zero.clone()),
            )
        };
        let (c00, c01) = split_r(&n0);
        let (c10, c11) = split_r(&n1);
        let tau = &self.twist;
        let pick = |sw: Option<Qi>, sr: Option<Qi>, swr: Option<Qi>| -> Option<(QiPoly, QiPoly)> {
            let build = |sign: Qi| -> QiPoly {
                match (&sw, &sr) {
                    (Some(sw), Some(sr)) => {
                        let sw = sw.clone() * sign;
                        &(&(&c00 + &c10.scale(&sw)) + &c01.scale(sr)) + &c11.scale(&(sw * sr.clone()))
                    }
                    _ => {
                        if let Some(swr) = &swr {
                            &c00 + &c11.scale(&(swr.clone() * sign))
                        } else {
                            let sw = sw.clone().unwrap() * sign;
                            &c00 + &c10.scale(&sw)
                        }
                    }
                }
            };
            Some((build(Qi::one()), build(-Qi::one())))
        };
        let sw = tau.sqrt();
        let sr = r2.sqrt();
        let pair = if sw.is_some() && sr.is_some() {
            pick(sw, sr, None)
        } else if c10.is_zero() && c01.is_zero() {
            (tau.clone() * r2.clone()).sqrt().and_then(|t| pick(None, None, Some(t)))
        } else if c01.is_zero() && c11.is_zero() && sw.is_some() {
            pick(sw, None, None)
        } else {
            None
        };
        let pair = match pair {
            Some((p1, p2)) => Some((strip(&p1)?, strip(&p2)?)),
            None => None,
        };
        Ok(SplitComponents { pair, product })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "parity": self.parity.as_str(),
            "h1": self.h1.to_string(),
            "h2": self.h2.to_string(),
            "scale": self.scale.to_string(),
            "twist": self.twist.to_string(),
            "center": [self.center.coords()[0].to_string(), self.center.coords()[1].to_string()],
        })
    }
}

fn lines(a: &ProjPoint<Qi>) -> (QiPoly, QiPoly) {
    super::frame::cyclic_tangent_pair(a).expect("affine centre")
}

/// Replace `var^2` by `value` everywhere.
fn reduce_square(p: &QiPoly, var: usize, value: &QiPoly) -> QiPoly {
    let vars = p.vars().clone();
    let x = MultiPoly::var(&vars, var);
    let mut out = MultiPoly::zero(&vars);
    let mut pw = MultiPoly::one(&vars);
    for (k, c) in p.coeffs_in(var).iter().enumerate() {
        if k > 0 && k % 2 == 0 {
            pw = &pw * value;
        }
        let term = &pw * c;
        out = &out + &if k % 2 == 1 { &term * &x } else { term };
    }
    out
}

/// Divide out the lines `z`, `x +- i y` and the circle of radius squared
/// `r2` centred at the origin.
fn strip_exceptional(p: &QiPoly, r2: &Qi) -> Result<QiPoly> {
    let vars = Vars::xyz();
    let (l1, l2) = lines(&ProjPoint::origin());
    let z = MultiPoly::var(&vars, 2);
    let circle = &(&l1 * &l2) - &(&z * &z).scale(r2);
    let mut p = p.clone();
    for f in [z, l1, l2, circle] {
        p = p.divide_out(&f)?.0;
    }
    Ok(p)
}

impl fmt::Display for SplitWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (&self.center.coords()[0], &self.center.coords()[1]);
        write!(f, "{} parity at ({a}, {b}): h1 = {}, h2 = {}, scale = {}, twist = {}",
            self.parity.as_str(), self.h1, self.h2, self.scale, self.twist)
    }
}

/// Outcome of [`split_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    /// The proper conchoid is irreducible.
    Irreducible,
    Split(SplitWitness),
    /// The search is not complete in this degree.
    Inconclusive(String),
}

enum Found {
    No,
    Yes { h1: QiPoly, h2: QiPoly, alpha: Qi, beta: Qi },
    Unknown(String),
}

/// Decide whether the proper conchoid of the irreducible curve `c` with
/// respect to a circle centred at `a` splits. The answer does not depend on
/// the radius. Complete up to degree 4.
pub fn split_test<K: Field>(c: &PlaneCurve<K>, a: &ProjPoint<K>) -> Result<SplitVerdict> {
    let curve = c.to_gaussian();
    if !is_squarefree_xyz(curve.equation()) {
        return Err(Error::NotSquarefree);
    }
    let a = to_gaussian_point(a);
    a.affine_coords()?;
    let g = to_uv(&recenter_poly(curve.equation(), &a)?);
    let delta = c.degree();
    let (parity, found) = if delta % 2 == 0 {
        (Parity::Even, even_split(&g, delta / 2)?)
    } else {
        (Parity::Odd, odd_split(&g, delta / 2)?)
    };
    match found {
        Found::No => Ok(SplitVerdict::Irreducible),
        Found::Unknown(why) => Ok(SplitVerdict::Inconclusive(why)),
        Found::Yes { h1, h2, alpha, beta } => {
            let back = |p: &QiPoly| uncenter_poly(&from_uv(p), &a);
            let witness = SplitWitness {
                parity,
                h1: back(&h1)?,
                h2: back(&h2)?,
                scale: alpha.inv(),
                twist: beta / alpha,
                center: a,
            };
            debug_assert!(witness.verify(curve.equation()));
            Ok(SplitVerdict::Split(witness))
        }
    }
}

fn is_squarefree_xyz(f: &QiPoly) -> bool {
    (0..3).any(|v| {
        let d = f.derivative(v);
        !d.is_zero() && crate::algebra::gcd(f, &d).is_constant()
    })
}

fn zero() -> Qi {
    Qi::zero()
}

/// `G = alpha * A^2 - beta * u * v * B^2` in the isotropic frame centred at
/// the origin, `deg A = m`, `deg B = m - 1`.
fn even_split(g: &QiPoly, m: u32) -> Result<Found> {
    let vars = uv_vars();
    let u = MultiPoly::<Qi>::var(&vars, 0);
    let v = MultiPoly::<Qi>::var(&vars, 1);
    let uv = &u * &v;
    // restrictions to the two isotropic lines pin A modulo u and modulo v
    let on_u = g.specialize(0, &zero());
    let on_v = g.specialize(1, &zero());
    let (Some((lca, a0)), Some((lcb, b0))) =
        (square_root_up_to_scalar(&on_u), square_root_up_to_scalar(&on_v))
    else {
        return Ok(Found::No);
    };
    let top = [0, 0, m];
    let (a0z, b0z) = (a0.coefficient(&top), b0.coefficient(&top));
    let kappas = if !a0z.is_zero() {
        if b0z.is_zero() {
            return Ok(Found::No);
        }
        let k = a0z.clone() / b0z;
        if lca.clone() * k.clone() * k.clone() != lcb {
            return Ok(Found::No);
        }
        vec![k]
    } else {
        if !b0z.is_zero() {
            return Ok(Found::No);
        }
        match (lcb / lca.clone()).sqrt() {
            Some(k) => vec![k.clone(), -k],
            None => return Ok(Found::No),
        }
    };
    let alpha = lca;
    let zm = MultiPoly::monomial(&vars, top.to_vec(), a0z);
    for kappa in kappas {
        let p = &(&a0 + &b0.scale(&kappa)) - &zm;
        match m {
            1 => {
                let Some(w) = (&(&p * &p).scale(&alpha) - g).exact_div(&uv)? else {
                    continue;
                };
                if let Some(beta) = w.constant_value() {
                    if !beta.is_zero() {
                        let one = MultiPoly::one(&vars);
                        return Ok(Found::Yes { h1: p, h2: one, alpha, beta });
                    }
                }
            }
            2 => {
                if let Some(found) = even_quartic(g, &p, &alpha)? {
                    return Ok(found);
                }
            }
            _ => return Ok(Found::Unknown(format!("even degree {} is beyond the complete search", 2 * m))),
        }
    }
    Ok(Found::No)
}

/// Degree four: `A = P + k u v` with one unknown `k`, and
/// `(alpha A^2 - G) / (u v)` must be a scalar times a square, i.e. a
/// quadratic form of rank one.
fn even_quartic(g: &QiPoly, p: &QiPoly, alpha: &Qi) -> Result<Option<Found>> {
    let ext = Vars::new(&["u", "v", "z", "k"]);
    let v = |i| MultiPoly::<Qi>::var(&ext, i);
    let uv = &v(0) * &v(1);
    let a = &p.embed(&ext)? + &(&v(3) * &uv);
    let num = &(&a * &a).scale(alpha) - &g.embed(&ext)?;
    let Some(w) = num.exact_div(&uv)? else {
        return Ok(None);
    };
    let mut coeffs: BTreeMap<[u32; 3], Vec<Qi>> = BTreeMap::new();
    for (mono, c) in w.terms() {
        let e = &mono.0;
        let slot = coeffs.entry([e[0], e[1], e[2]]).or_default();
        let k = e[3] as usize;
        if slot.len() <= k {
            slot.resize(k + 1, Qi::zero());
        }
        slot[k] = c.clone();
    }
    let half = UniPoly::constant(Qi::from_rational(num_rational::Ratio::new(1.into(), 2.into())));
    let entry = |e: [u32; 3]| UniPoly::new(coeffs.get(&e).cloned().unwrap_or_default());
    let off = |e: [u32; 3]| &entry(e) * &half;
    let mat = [
        [entry([2, 0, 0]), off([1, 1, 0]), off([1, 0, 1])],
        [off([1, 1, 0]), entry([0, 2, 0]), off([0, 1, 1])],
        [off([1, 0, 1]), off([0, 1, 1]), entry([0, 0, 2])],
    ];
    let mut g_k: Option<UniPoly<Qi>> = None;
    for (i, k) in [(0, 1), (0, 2), (1, 2)] {
        for (j, l) in [(0, 1), (0, 2), (1, 2)] {
            let minor = &(&mat[i][j] * &mat[k][l]) - &(&mat[i][l] * &mat[k][j]);
            if minor.is_zero() {
                continue;
            }
            g_k = Some(match g_k {
                None => minor,
                Some(acc) => acc.gcd(&minor),
            });
        }
    }
    let Some(g_k) = g_k else {
        return Ok(Some(Found::Unknown("rank condition vanishes identically".into())));
    };
    let uvz = uv_vars();
    for (k0, _) in Qi::field_roots(&g_k) {
        let wk = w.specialize(3, &k0).restrict_vars(&uvz)?;
        let Some((beta, b)) = square_root_up_to_scalar(&wk) else {
            continue;
        };
        let h1 = a.specialize(3, &k0).restrict_vars(&uvz)?;
        return Ok(Some(Found::Yes { h1, h2: b, alpha: alpha.clone(), beta }));
    }
    Ok(None)
}

/// `G = alpha * u * A^2 - beta * v * B^2`, `deg A = deg B = m`. Such a curve
/// passes through the centre.
fn odd_split(g: &QiPoly, m: u32) -> Result<Found> {
    let vars = uv_vars();
    let u = MultiPoly::<Qi>::var(&vars, 0);
    let v = MultiPoly::<Qi>::var(&vars, 1);
    if !g.specialize(0, &zero()).specialize(1, &zero()).is_zero() {
        return Ok(Found::No);
    }
    let on_v = g.specialize(1, &zero()).exact_div(&u)?.expect("vanishes at the centre");
    let on_u = g.specialize(0, &zero()).exact_div(&v)?.expect("vanishes at the centre");
    if on_u.is_zero() || on_v.is_zero() {
        return Ok(Found::Unknown("the curve contains an isotropic line".into()));
    }
    let (Some((alpha, a0)), Some((mbeta, b0))) =
        (square_root_up_to_scalar(&on_v), square_root_up_to_scalar(&on_u))
    else {
        return Ok(Found::No);
    };
    let beta = -mbeta;
    match m {
        0 => Ok(Found::Yes { h1: a0, h2: b0, alpha, beta }),
        1 => {
            let ext = Vars::new(&["u", "v", "z", "a", "b"]);
            let e = |i| MultiPoly::<Qi>::var(&ext, i);
            let a = &a0.embed(&ext)? + &(&e(3) * &e(1));
            let b = &b0.embed(&ext)? + &(&e(4) * &e(0));
            let lhs = &(&(&e(0) * &(&a * &a)).scale(&alpha) - &(&e(1) * &(&b * &b)).scale(&beta)) - &g.embed(&ext)?;
            let unknowns = Vars::new(&["a", "b"]);
            let mut groups: BTreeMap<[u32; 3], Vec<(Vec<u32>, Qi)>> = BTreeMap::new();
            for (mono, c) in lhs.terms() {
                let x = &mono.0;
                groups.entry([x[0], x[1], x[2]]).or_default().push((vec![x[3], x[4]], c.clone()));
            }
            let eqs: Vec<QiPoly> = groups
                .into_values()
                .map(|t| MultiPoly::from_terms(&unknowns, t))
                .collect();
            let eqs: Vec<QiPoly> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
            let uvz = uv_vars();
            let points = if eqs.is_empty() {
                return Ok(Found::Unknown("no condition on the lifts".into()));
            } else {
                solve_system(&eqs).points
            };
            let Some(pt) = points.first() else {
                return Ok(Found::No);
            };
            let fix = |p: &QiPoly| -> Result<QiPoly> {
                p.specialize(3, &pt[0]).specialize(4, &pt[1]).restrict_vars(&uvz)
            };
            Ok(Found::Yes { h1: fix(&a)?, h2: fix(&b)?, alpha, beta })
        }
        _ => Ok(Found::Unknown(format!("odd degree {} is beyond the complete search", 2 * m + 1))),
    }
}

/// For a smooth conic: is `A` a focus? Returns the polar line of `A` when
/// the equation is `lambda * l^2 + mu * ((x - a z)^2 + (y - b z)^2)`.
pub fn conic_focus_split<K: Field>(c: &PlaneCurve<K>, a: &ProjPoint<K>) -> Result<Option<MultiPoly<K>>> {
    if c.degree() != 2 {
        return Err(Error::NotAConic(c.degree()));
    }
    let g = c.equation();
    let half = K::from_rational(num_rational::Ratio::new(1.into(), 2.into()));
    let entry = |i: usize, j: usize| {
        let mut e = [0u32; 3];
        e[i] += 1;
        e[j] += 1;
        let c = g.coefficient(&e);
        if i == j { c } else { c * half.clone() }
    };
    let m: Vec<Vec<K>> = (0..3).map(|i| (0..3).map(|j| entry(i, j)).collect()).collect();
    let det = m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone());
    if det.is_zero() {
        return Err(Error::DegenerateConic);
    }
    let gc = recenter_poly(g, a)?;
    let f = gc.coefficient(&[0, 0, 2]);
    if f.is_zero() {
        return Ok(None);
    }
    let polar = gc.derivative(2).scale(&half);
    let rest = &gc - &(&polar * &polar).scale(&f.inv());
    let mu = rest.coefficient(&[2, 0, 0]);
    let q = isotropic_product(&ProjPoint::<K>::origin());
    if mu.is_zero() || rest != q.scale(&mu) {
        return Ok(None);
    }
    Ok(Some(uncenter_poly(&polar, a)?))
}
