//! Roots of univariate polynomials inside `Q` and `Q(i)`.
//!
//! Both fields use the same route: clear denominators, pass to the monic
//! integer polynomial `an^(n-1) f(t / an)` whose roots are (Gaussian)
//! integers, find its roots modulo a good prime, Hensel-lift them past the
//! root bound and read the integer back. Over `Q(i)` the prime is `1 mod 4`
//! so that `i` has an image, and the read-back is a closest-vector problem in
//! a square lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{denominator_lcm, Field, GaussianRational, Rational};

use super::UniPoly;

/// Rational roots with multiplicities, sorted ascending.
pub fn rational_roots_q(f: &UniPoly<Rational>) -> Vec<(Rational, usize)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = f.squarefree_part();
    let (mut roots, rest) = split_zero_root(&sqf);
    if rest.degree().unwrap_or(0) > 0 {
        let ints = integer_coeffs(&rest);
        roots.extend(integer_model_roots_q(&ints));
    }
    roots.retain(|r| rest.eval(r).is_zero() || r.is_zero());
    let mut out: Vec<(Rational, usize)> = roots
        .into_iter()
        .map(|r| {
            let m = f.root_multiplicity(&r);
            (r, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out
}

/// Roots in `Q(i)` with multiplicities, sorted by real then imaginary part.
pub fn rational_roots_qi(f: &UniPoly<GaussianRational>) -> Vec<(GaussianRational, usize)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = f.squarefree_part();
    let (mut roots, rest) = split_zero_root(&sqf);
    if rest.degree().unwrap_or(0) > 0 {
        roots.extend(integer_model_roots_qi(&rest));
    }
    let mut out: Vec<(GaussianRational, usize)> = roots
        .into_iter()
        .map(|r| {
            let m = f.root_multiplicity(&r);
            (r, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect();
    out.sort_by(|a, b| a.0.re.cmp(&b.0.re).then_with(|| a.0.im.cmp(&b.0.im)));
    out.dedup_by(|a, b| a.0 == b.0);
    out
}

/// Roots of `f` in its own coefficient field.
pub fn rational_roots<K: Field>(f: &UniPoly<K>) -> Vec<(K, usize)> {
    K::field_roots(f)
}

fn split_zero_root<K: Field>(f: &UniPoly<K>) -> (Vec<K>, UniPoly<K>) {
    let lead_zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if lead_zeros == 0 {
        (Vec::new(), f.clone())
    } else {
        (vec![K::zero()], UniPoly::new(f.coeffs()[lead_zeros..].to_vec()))
    }
}

fn integer_coeffs(f: &UniPoly<Rational>) -> Vec<BigInt> {
    let l = denominator_lcm(f.coeffs());
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Coefficients of the monic model `an^(n-1) f(t/an)`.
fn monic_model<T: Clone>(
    coeffs: &[T],
    an: &T,
    mul: impl Fn(&T, &T) -> T,
    one: T,
) -> Vec<T> {
    let n = coeffs.len() - 1;
    let mut out = vec![one.clone(); n + 1];
    let mut pw = one;
    for j in (0..n).rev() {
        out[j] = mul(&coeffs[j], &pw);
        pw = mul(&pw, an);
    }
    out
}

fn integer_model_roots_q(ints: &[BigInt]) -> Vec<Rational> {
    let an = ints.last().unwrap().clone();
    let g = monic_model(ints, &an, |a, b| a * b, BigInt::one());
    let bound = g.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let need = &bound * 2u32 + 1u32;
    let Some((p, _)) = good_prime(|p| reduce_all(&g, p), false) else {
        return Vec::new();
    };
    let m = modulus_beyond(p, &need);
    let gm: Vec<BigInt> = g.iter().map(|c| c.mod_floor(&m)).collect();
    let half = &m / 2u32;
    lift_all(&gm, p, &m)
        .into_iter()
        .map(|r| if r > half { r - &m } else { r })
        .map(|r| Rational::new(r, an.clone()))
        .collect()
}

fn integer_model_roots_qi(f: &UniPoly<GaussianRational>) -> Vec<GaussianRational> {
    let l = denominator_lcm(f.coeffs().iter().flat_map(|c| [&c.re, &c.im]));
    let lq = Rational::from_integer(l);
    let ints: Vec<(BigInt, BigInt)> = f
        .coeffs()
        .iter()
        .map(|c| ((&c.re * &lq).to_integer(), (&c.im * &lq).to_integer()))
        .collect();
    let an = ints.last().unwrap().clone();
    let gmul = |a: &(BigInt, BigInt), b: &(BigInt, BigInt)| {
        (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
    };
    let g = monic_model(&ints, &an, gmul, (BigInt::one(), BigInt::zero()));
    let bound = g
        .iter()
        .map(|(a, b)| a.abs() + b.abs())
        .max()
        .unwrap()
        + BigInt::one();
    let need = &bound * &bound * 4u32 + 1u32;
    let Some((p, s)) = good_prime(
        |p| {
            let s = sqrt_minus_one(p)?;
            Some(
                g.iter()
                    .map(|(a, b)| (mod_u64(a, p) + mod_u64(b, p) * s % p) % p)
                    .collect(),
            )
        },
        true,
    ) else {
        return Vec::new();
    };
    let m = modulus_beyond(p, &need);
    let sk = lift_sqrt_minus_one(s, &m);
    let gm: Vec<BigInt> = g
        .iter()
        .map(|(a, b)| (a + b * &sk).mod_floor(&m))
        .collect();
    let an_g = GaussianRational::new(
        Rational::from_integer(an.0.clone()),
        Rational::from_integer(an.1.clone()),
    );
    lift_all(&gm, p, &m)
        .into_iter()
        .map(|rho| {
            let (x, y) = closest_gaussian(&rho, &sk, &m);
            GaussianRational::new(Rational::from_integer(x), Rational::from_integer(y)) / an_g.clone()
        })
        .filter(|r| f.eval(r).is_zero())
        .collect()
}

fn mod_u64(a: &BigInt, p: u64) -> u64 {
    a.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn reduce_all(g: &[BigInt], p: u64) -> Option<Vec<u64>> {
    Some(g.iter().map(|c| mod_u64(c, p)).collect())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn sqrt_minus_one(p: u64) -> Option<u64> {
    if p % 4 != 1 {
        return None;
    }
    (2..p).find_map(|a| {
        let s = pow_mod(a, (p - 1) / 4, p);
        (s * s % p == p - 1).then_some(s)
    })
}

/// First prime (above a small threshold) where the reduced polynomial stays
/// squarefree of full degree.
fn good_prime(reduce: impl Fn(u64) -> Option<Vec<u64>>, gaussian: bool) -> Option<(u64, u64)> {
    let mut p = 101u64;
    while p < 4_000_000 {
        if is_prime(p) && (!gaussian || p % 4 == 1) {
            if let Some(gp) = reduce(p) {
                if *gp.last().unwrap() != 0 && fp_squarefree(&gp, p) {
                    let s = if gaussian { sqrt_minus_one(p).unwrap() } else { 0 };
                    return Some((p, s));
                }
            }
        }
        p += 2;
    }
    None
}

fn fp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = pow_mod(*b.last().unwrap(), p - 2, p);
    while r.len() > db {
        let c = r.last().unwrap() * inv % p;
        let k = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bc % p) % p;
        }
        r = fp_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn fp_squarefree(g: &[u64], p: u64) -> bool {
    let d: Vec<u64> = fp_trim(
        g.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * (k as u64 % p) % p)
            .collect(),
    );
    if d.is_empty() {
        return g.len() <= 1;
    }
    let mut a = g.to_vec();
    let mut b = d;
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn modulus_beyond(p: u64, need: &BigInt) -> BigInt {
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    while &m <= need {
        m *= &pb;
    }
    m
}

fn eval_mod(g: &[BigInt], t: &BigInt, m: &BigInt) -> BigInt {
    g.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * t + c).mod_floor(m))
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Roots modulo `p`, Newton-lifted to roots modulo `m = p^k`.
fn lift_all(gm: &[BigInt], p: u64, m: &BigInt) -> Vec<BigInt> {
    let gp: Vec<u64> = gm.iter().map(|c| mod_u64(c, p)).collect();
    let dg: Vec<BigInt> = gm
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| (c * k).mod_floor(m))
        .collect();
    let mut out = Vec::new();
    for t in 0..p {
        let v = gp.iter().rev().fold(0u64, |acc, c| (acc * t + c) % p);
        if v != 0 {
            continue;
        }
        let mut r = BigInt::from(t);
        loop {
            let val = eval_mod(gm, &r, m);
            if val.is_zero() {
                break;
            }
            let d = eval_mod(&dg, &r, m);
            r = (&r - val * inv_mod(&d, m)).mod_floor(m);
        }
        out.push(r);
    }
    out
}

fn lift_sqrt_minus_one(s: u64, m: &BigInt) -> BigInt {
    let mut r = BigInt::from(s);
    loop {
        let val = (&r * &r + 1u32).mod_floor(m);
        if val.is_zero() {
            return r;
        }
        let d = (&r * 2u32).mod_floor(m);
        r = (&r - val * inv_mod(&d, m)).mod_floor(m);
    }
}

/// The Gaussian integer `x + y i` of smallest norm with `x + y s = rho (mod m)`.
fn closest_gaussian(rho: &BigInt, s: &BigInt, m: &BigInt) -> (BigInt, BigInt) {
    // Lattice of (x, y) with x + y s = 0 (mod m); Lagrange-reduce its basis.
    let mut b1 = (m.clone(), BigInt::zero());
    let mut b2 = (-s.clone(), BigInt::one());
    let norm = |v: &(BigInt, BigInt)| &v.0 * &v.0 + &v.1 * &v.1;
    loop {
        if norm(&b2) < norm(&b1) {
            std::mem::swap(&mut b1, &mut b2);
        }
        let dot = &b1.0 * &b2.0 + &b1.1 * &b2.1;
        let q = round_div(&dot, &norm(&b1));
        if q.is_zero() {
            break;
        }
        b2 = (&b2.0 - &q * &b1.0, &b2.1 - &q * &b1.1);
        if norm(&b2) >= norm(&b1) {
            break;
        }
    }
    // Babai rounding of the target (rho, 0).
    let det = &b1.0 * &b2.1 - &b1.1 * &b2.0;
    let t = (rho.clone(), BigInt::zero());
    let a = round_div(&(&t.0 * &b2.1 - &t.1 * &b2.0), &det);
    let b = round_div(&(&b1.0 * &t.1 - &b1.1 * &t.0), &det);
    (
        &t.0 - &a * &b1.0 - &b * &b2.0,
        &t.1 - &a * &b1.1 - &b * &b2.1,
    )
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = if b.is_negative() { (-a, -b) } else { (a.clone(), b.clone()) };
    (&a * BigInt::from(2) + &b).div_floor(&(&b * BigInt::from(2)))
}
