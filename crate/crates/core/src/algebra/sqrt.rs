
use crate::scalar::Field;

use super::{Monomial, MultiPoly};

/// Exact square root of a polynomial, if it is a perfect square.
///
/// The root is normalized so that its leading coefficient has positive real
/// part (or zero real part and positive imaginary part).
pub fn formal_square_root<K: Field>(f: &MultiPoly<K>) -> Option<MultiPoly<K>> {
    if f.is_zero() {
        return Some(f.clone());
    }
    let (lm, lc) = f.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
    if lm.0.iter().any(|e| e % 2 == 1) {
        return None;
    }
    if f.min_total_degree() % 2 == 1 {
        return None;
    }
    let vars = f.vars().clone();
    let half = Monomial(lm.0.iter().map(|e| e / 2).collect());
    let root_c = lc.sqrt()?;
    let mut g = MultiPoly::monomial(&vars, half.0.clone(), root_c.clone());
    let two_lead = root_c.clone() + root_c;
    let min_deg = f.min_total_degree() / 2;
    // every new term is strictly below the previous one; bound the loop by
    // the number of monomials that could possibly appear
    let mut budget = f.num_terms() * f.num_terms() + 4 * (f.total_degree() as usize + 1).pow(2) + 16;
    loop {
        let r = f - &(&g * &g);
        let Some((rm, rc)) = r.leading_term() else {
            break;
        };
        if !half.divides(rm) {
            return None;
        }
        let tm = half.quotient_of(rm);
        if tm >= half || tm.degree() < min_deg {
            return None;
        }
        let tc = rc.clone() / two_lead.clone();
        g.add_term(tm, tc);
        budget = budget.checked_sub(1)?;
    }
    if !g.leading_coefficient().has_canonical_sign() {
        g = -&g;
    }
    debug_assert!(!g.leading_coefficient().is_zero());
    Some(g)
}

/// Square root up to a scalar: returns `(c, g)` with `f = c * g^2` and `g`
/// monic, if such a decomposition exists over the field.
pub fn square_root_up_to_scalar<K: Field>(f: &MultiPoly<K>) -> Option<(K, MultiPoly<K>)> {
    if f.is_zero() {
        return None;
    }
    let lc = f.leading_coefficient();
    let g = formal_square_root(&f.monic())?;
    Some((lc, g.monic()))
}
