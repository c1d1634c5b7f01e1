use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{gcd, squarefree_part, MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::scalar::Field;

use super::{PlaneCurve, Scene};

/// Role of a component in a decomposed transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// The base curve `B`.
    Base,
    /// The line at infinity `z = 0`.
    Linf,
    /// Lines joining the origin to points of `B` at infinity, grouped into a
    /// factor of the top form of `B`.
    LineBlock,
    /// The input curve `C`.
    Input,
    /// Whatever remains: the proper conchoid.
    Residual,
}

impl Label {
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Base => "base",
            Label::Linf => "linf",
            Label::LineBlock => "lineblock",
            Label::Input => "input",
            Label::Residual => "residual",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component<K: Field> {
    pub poly: MultiPoly<K>,
    pub mult: u32,
    pub label: Label,
}

/// A factored equation `unit * prod poly_i ^ mult_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor<K: Field> {
    pub unit: K,
    pub components: Vec<Component<K>>,
}

impl<K: Field> Divisor<K> {
    /// The equation the divisor stands for.
    pub fn product(&self) -> MultiPoly<K> {
        let vars = Vars::xyz();
        let mut acc = MultiPoly::constant(&vars, self.unit.clone());
        for c in &self.components {
            acc = &acc * &c.poly.pow(c.mult);
        }
        acc
    }

    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .map(|c| c.poly.total_degree() * c.mult)
            .sum()
    }

    /// Largest multiplicity among components with the given label.
    pub fn multiplicity(&self, label: Label) -> u32 {
        self.components
            .iter()
            .filter(|c| c.label == label)
            .map(|c| c.mult)
            .max()
            .unwrap_or(0)
    }

    pub fn with_label(&self, label: Label) -> impl Iterator<Item = &Component<K>> {
        self.components.iter().filter(move |c| c.label == label)
    }

    /// The residual component, or `1` when nothing remains.
    pub fn residual(&self) -> MultiPoly<K> {
        self.with_label(Label::Residual)
            .next()
            .map(|c| c.poly.clone())
            .unwrap_or_else(|| MultiPoly::one(&Vars::xyz()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "unit": self.unit.to_string(),
            "degree": self.degree(),
            "components": self
                .components
                .iter()
                .map(|c| json!({
                    "poly": c.poly.to_string(),
                    "mult": c.mult,
                    "label": c.label.as_str(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

impl<K: Field> fmt::Display for Divisor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for c in &self.components {
            write!(f, " * ({})", c.poly)?;
            if c.mult != 1 {
                write!(f, "^{}", c.mult)?;
            }
            write!(f, " [{}]", c.label)?;
        }
        Ok(())
    }
}

/// Factors of a binary form over the field: its linear factors and the
/// remaining squarefree cofactor (when nonconstant).
pub(crate) fn line_blocks<K: Field>(form: &MultiPoly<K>) -> Vec<MultiPoly<K>> {
    let vars = form.vars().clone();
    let mut out = Vec::new();
    if form.is_zero() || form.is_constant() {
        return out;
    }
    let y = MultiPoly::var(&vars, 1);
    let (rest, k) = form.strip_var(1);
    if k > 0 {
        out.push(y.clone());
    }
    let mut rest = squarefree_part(&rest);
    if rest.is_constant() {
        return out;
    }
    // rest(x, y) with rest(1, 0) != 0: linear factors x - r y
    let uni = rest.specialize(1, &K::one()).to_univariate(0).expect("binary form");
    for (r, _) in K::field_roots(&uni) {
        let lin = &MultiPoly::var(&vars, 0) - &y.scale(&r);
        rest = rest.exact_div(&lin).unwrap().expect("root gives a factor");
        out.push(lin.monic());
    }
    if !rest.is_constant() {
        out.push(rest.monic());
    }
    out
}

/// Split off the known exceptional components of a transform `r`: the base
/// curve, the line at infinity, the lines through the origin and the points
/// at infinity of the base curve, and optionally the input curve. What is
/// left is labelled residual.
pub fn extract_known_components<K: Field>(
    r: &PlaneCurve<K>,
    scene: &Scene<K>,
    input: Option<&PlaneCurve<K>>,
) -> Result<Divisor<K>> {
    let vars = Vars::xyz();
    let mut rest = r.equation().clone();
    let mut components = Vec::new();
    let mut take = |rest: &mut MultiPoly<K>, g: &MultiPoly<K>, label: Label| -> Result<()> {
        if g.is_constant() {
            return Ok(());
        }
        let (q, k) = rest.divide_out(g)?;
        if k > 0 {
            *rest = q;
            components.push(Component {
                poly: g.clone(),
                mult: k,
                label,
            });
        }
        Ok(())
    };
    take(&mut rest, &scene.base().equation().monic(), Label::Base)?;
    take(&mut rest, &MultiPoly::var(&vars, 2), Label::Linf)?;
    let top = scene.base().top_form().to_xyz();
    for block in line_blocks(&top) {
        take(&mut rest, &block, Label::LineBlock)?;
        // a reducible block may divide with a higher power on some factor
        if block.total_degree() > 1 {
            loop {
                let g = gcd(&rest, &block);
                if g.is_constant() {
                    break;
                }
                take(&mut rest, &g, Label::LineBlock)?;
            }
        }
    }
    if let Some(c) = input {
        take(&mut rest, &c.equation().monic(), Label::Input)?;
    }
    if rest.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = rest.leading_coefficient();
    let residual = rest.monic();
    if !residual.is_constant() {
        components.push(Component {
            poly: residual,
            mult: 1,
            label: Label::Residual,
        });
    }
    debug_assert!(!unit.is_zero());
    Ok(Divisor { unit, components })
}
