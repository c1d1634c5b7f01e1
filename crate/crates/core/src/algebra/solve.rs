use std::collections::BTreeMap;

use crate::resultant::sylvester_resultant;
use crate::scalar::Field;

use super::{MultiPoly, UniPoly};

/// Points of a zero-dimensional system with coordinates in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solutions<K> {
    /// Solutions, one coordinate per variable of the system.
    pub points: Vec<Vec<K>>,
    /// `true` when the points are provably all the solutions over the
    /// algebraic closure. `false` when some eliminant has roots outside the
    /// field or the system looked positive dimensional.
    pub exhaustive: bool,
}

/// Solve a polynomial system by pairwise resultant elimination and root
/// finding over the field, with back substitution. Every returned point is
/// checked against all equations.
pub fn solve_system<K: Field>(eqs: &[MultiPoly<K>]) -> Solutions<K> {
    let Some(first) = eqs.first() else {
        return Solutions {
            points: Vec::new(),
            exhaustive: false,
        };
    };
    let n = first.nvars();
    let (partial, exhaustive) = solve_rec(eqs.to_vec(), (0..n).collect());
    let mut points: Vec<Vec<K>> = Vec::new();
    for p in partial {
        let pt: Vec<K> = (0..n).map(|k| p[&k].clone()).collect();
        if eqs.iter().all(|e| e.eval(&pt).is_zero()) && !points.contains(&pt) {
            points.push(pt);
        }
    }
    Solutions { points, exhaustive }
}

type Partial<K> = BTreeMap<usize, K>;

fn solve_rec<K: Field>(eqs: Vec<MultiPoly<K>>, unknowns: Vec<usize>) -> (Vec<Partial<K>>, bool) {
    let eqs: Vec<_> = eqs.into_iter().filter(|e| !e.is_zero()).collect();
    if eqs.iter().any(|e| e.is_constant()) {
        return (Vec::new(), true);
    }
    let Some(&v) = unknowns.last() else {
        return (vec![Partial::new()], true);
    };
    if unknowns.iter().any(|&u| !eqs.iter().any(|e| e.involves(u))) {
        // a free unknown: the solution set is not finite
        return (Vec::new(), false);
    }
    let (with, rest): (Vec<_>, Vec<_>) = eqs.into_iter().partition(|e| e.involves(v));
    let mut projected = rest;
    if with.len() > 1 && unknowns.len() > 1 {
        let pivot = (0..with.len()).min_by_key(|&k| (with[k].degree_in(v), with[k].num_terms())).unwrap();
        let f = &with[pivot];
        for (k, g) in with.iter().enumerate() {
            if k == pivot {
                continue;
            }
            // a vanishing resultant means a common factor; dropping the
            // equation only enlarges the projection
            if let Ok(r) = sylvester_resultant(f, g, v) {
                if !r.is_zero() {
                    projected.push(r);
                }
            }
        }
    }
    let lower: Vec<usize> = unknowns[..unknowns.len() - 1].to_vec();
    let (partials, mut exhaustive) = solve_rec(projected, lower);
    let mut out = Vec::new();
    for p in partials {
        let mut g: Option<UniPoly<K>> = None;
        for e in &with {
            let mut s = e.clone();
            for (&k, val) in &p {
                s = s.specialize(k, val);
            }
            let Some(u) = s.to_univariate(v) else {
                continue;
            };
            if u.is_zero() {
                continue;
            }
            g = Some(match g {
                None => u,
                Some(acc) => acc.gcd(&u),
            });
        }
        let Some(g) = g else {
            exhaustive = false;
            continue;
        };
        let roots = K::field_roots(&g);
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        if found < g.degree().unwrap_or(0) {
            exhaustive = false;
        }
        for (r, _) in roots {
            let mut q = p.clone();
            q.insert(v, r);
            out.push(q);
        }
    }
    (out, exhaustive)
}
