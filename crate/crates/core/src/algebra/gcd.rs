//! Multivariate gcd by recursive subresultant pseudo-remainder sequences.



use crate::scalar::Field;

use super::MultiPoly;

/// Monic greatest common divisor. `gcd(0, 0)` is `0`.
pub fn gcd<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> MultiPoly<K> {
    gcd_raw(f, g).monic()
}

/// Gcd of a list of polynomials.
pub fn gcd_all<K: Field>(polys: &[MultiPoly<K>]) -> MultiPoly<K> {
    let mut it = polys.iter();
    let Some(first) = it.next() else {
        panic!("gcd of an empty list");
    };
    let mut acc = first.monic();
    for p in it {
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
        acc = gcd(&acc, p);
    }
    acc
}

fn gcd_raw<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> MultiPoly<K> {
    let vars = f.vars().clone();
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one(&vars);
    }
    // Strip common monomial factors first; cheap and keeps PRS degrees low.
    let mut f = f.clone();
    let mut g = g.clone();
    let mut mono = vec![0u32; vars.len()];
    for (v, m) in mono.iter_mut().enumerate() {
        let (f2, a) = f.strip_var(v);
        let (g2, b) = g.strip_var(v);
        *m = a.min(b);
        f = f2;
        g = g2;
    }
    let mono = MultiPoly::monomial(&vars, mono, K::one());
    let core = gcd_stripped(&f, &g);
    &mono * &core
}

fn gcd_stripped<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> MultiPoly<K> {
    let vars = f.vars().clone();
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one(&vars);
    }
    // Main variable: occurs in both, smallest combined degree.
    let main = (0..vars.len())
        .filter(|&v| f.involves(v) && g.involves(v))
        .min_by_key(|&v| f.degree_in(v) + g.degree_in(v));
    let Some(v) = main else {
        // Some variable occurs in only one of them: it can only enter the
        // gcd through the content.
        let v = (0..vars.len())
            .find(|&v| f.involves(v) || g.involves(v))
            .unwrap();
        let (with_v, other) = if f.involves(v) { (f, g) } else { (g, f) };
        let c = content(with_v, v);
        return gcd_raw(&c, other);
    };
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_raw(&cf, &cg);
    let pf = f.exact_div(&cf).unwrap().unwrap();
    let pg = g.exact_div(&cg).unwrap().unwrap();
    let p = primitive_prs_gcd(&pf, &pg, v);
    &c * &p
}

/// Content with respect to `var`: gcd of the coefficients.
pub fn content<K: Field>(f: &MultiPoly<K>, var: usize) -> MultiPoly<K> {
    let coeffs = f.coeffs_in(var);
    let mut acc = MultiPoly::zero(f.vars());
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_raw(&acc, c);
        if acc.is_constant() {
            return MultiPoly::one(f.vars());
        }
    }
    acc.monic()
}

/// Primitive part with respect to `var`.
pub fn primitive_part<K: Field>(f: &MultiPoly<K>, var: usize) -> MultiPoly<K> {
    if f.is_zero() {
        return f.clone();
    }
    let c = content(f, var);
    f.exact_div(&c).unwrap().unwrap()
}

type Coeffs<K> = Vec<MultiPoly<K>>;

fn lead<K: Field>(a: &Coeffs<K>) -> &MultiPoly<K> {
    a.last().unwrap()
}

fn trim<K: Field>(mut a: Coeffs<K>) -> Coeffs<K> {
    while a.last().is_some_and(MultiPoly::is_zero) {
        a.pop();
    }
    a
}

/// Pseudo-remainder of `a` by `b` in the coefficient representation.
fn prem<K: Field>(a: &Coeffs<K>, b: &Coeffs<K>) -> Coeffs<K> {
    let db = b.len() - 1;
    let mut r = a.clone();
    let lb = lead(b).clone();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            if bc.is_zero() {
                continue;
            }
            r[k + j] = &r[k + j] - &(&lr * bc);
        }
        r = trim(r);
    }
    r
}

fn exact<K: Field>(a: &MultiPoly<K>, b: &MultiPoly<K>) -> MultiPoly<K> {
    a.exact_div(b)
        .expect("nonzero divisor")
        .expect("subresultant division is exact")
}

fn primitive_prs_gcd<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>, v: usize) -> MultiPoly<K> {
    let vars = f.vars().clone();
    let (mut a, mut b) = (f.coeffs_in(v), g.coeffs_in(v));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gg = MultiPoly::one(&vars);
    let mut h = MultiPoly::one(&vars);
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            let bp = MultiPoly::from_coeffs_in(&vars, v, &b);
            return primitive_part(&bp, v);
        }
        if r.len() == 1 {
            return MultiPoly::one(&vars);
        }
        let denom = &gg * &h.pow(d);
        a = b;
        b = r.iter().map(|c| exact(c, &denom)).collect();
        gg = lead(&a).clone();
        h = if d == 0 {
            h
        } else {
            exact(&gg.pow(d), &h.pow(d - 1))
        };
    }
}

/// Squarefree decomposition `f = unit * prod p_k^k` with monic pairwise coprime `p_k`.
pub fn squarefree_decomposition<K: Field>(f: &MultiPoly<K>) -> Vec<(MultiPoly<K>, u32)> {
    let mut out: Vec<(MultiPoly<K>, u32)> = Vec::new();
    sqf_rec(f, 1, &mut out);
    // merge equal factors that arose from different recursion levels
    let mut merged: Vec<(MultiPoly<K>, u32)> = Vec::new();
    for (p, k) in out {
        if p.is_constant() {
            continue;
        }
        if let Some(e) = merged.iter_mut().find(|(q, _)| *q == p) {
            e.1 += k;
        } else {
            merged.push((p, k));
        }
    }
    merged.sort_by(|a, b| {
        a.1.cmp(&b.1)
            .then_with(|| a.0.leading_term().map(|t| t.0).cmp(&b.0.leading_term().map(|t| t.0)))
    });
    merged
}

fn sqf_rec<K: Field>(f: &MultiPoly<K>, mult: u32, out: &mut Vec<(MultiPoly<K>, u32)>) {
    if f.is_constant() {
        return;
    }
    let vars = f.vars().clone();
    // pull out monomial powers first
    let mut f = f.clone();
    for v in 0..vars.len() {
        let (g, k) = f.strip_var(v);
        if k > 0 {
            out.push((MultiPoly::var(&vars, v), k * mult));
            f = g;
        }
    }
    if f.is_constant() {
        return;
    }
    let v = (0..vars.len()).find(|&v| f.involves(v)).unwrap();
    let c = content(&f, v);
    sqf_rec(&c, mult, out);
    let p = exact(&f, &c);
    // Yun's algorithm on the primitive part.
    let dp = p.derivative(v);
    let a0 = gcd(&p, &dp);
    let mut b = exact(&p, &a0);
    let mut cc = exact(&dp, &a0);
    let mut i = 1;
    loop {
        let d = &cc - &b.derivative(v);
        if b.is_constant() {
            break;
        }
        let a = gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.monic(), i * mult));
        }
        b = exact(&b, &a);
        cc = exact(&d, &a);
        i += 1;
    }
}

/// Product of the distinct squarefree factors, monic.
pub fn squarefree_part<K: Field>(f: &MultiPoly<K>) -> MultiPoly<K> {
    let vars = f.vars().clone();
    squarefree_decomposition(f)
        .into_iter()
        .fold(MultiPoly::one(&vars), |acc, (p, _)| &acc * &p)
}

/// True when no nonconstant square divides `f`.
pub fn is_squarefree<K: Field>(f: &MultiPoly<K>) -> bool {
    !f.is_zero() && squarefree_decomposition(f).iter().all(|(_, k)| *k == 1)
}

/// Divide out `g` as often as possible, returning the multiplicity.
pub fn multiplicity_of<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> u32 {
    f.divide_out(g).map(|(_, k)| k).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::Vars;
    use crate::scalar::Rational;

    fn p(s: &str) -> MultiPoly<Rational> {
        parse_poly(s, &Vars::xyz()).unwrap()
    }

    #[test]
    fn small_gcds() {
        assert_eq!(gcd(&p("x^2-y^2"), &p("x^2-2*x*y+y^2")), p("x-y"));
        assert_eq!(gcd(&p("2*x^2+2*y^2"), &p("4*x^2+4*y^2")), p("x^2+y^2"));
        assert_eq!(gcd(&p("x+1"), &p("y+1")), p("1"));
        assert_eq!(gcd(&p("x*z^2"), &p("x^3*z")), p("x*z"));
    }

    #[test]
    fn gcd_with_derivative_finds_the_double_line() {
        let r = p("x^2*(x^2+y^2-1)");
        let g = gcd(&r, &r.derivative(0));
        assert!(p("x").divides(&g));
    }

    #[test]
    fn squarefree_pieces() {
        let f = p("3*x^2*(x^2+y^2-z^2)*(y-z)^3");
        let dec = squarefree_decomposition(&f);
        assert_eq!(
            dec,
            vec![(p("x^2+y^2-z^2"), 1), (p("x"), 2), (p("y-z"), 3)]
        );
        assert!(!is_squarefree(&f));
        assert_eq!(squarefree_part(&f), p("x*(x^2+y^2-z^2)*(y-z)"));
    }
}
