//! Conchoidal transforms and their analysis in the fixed frame: origin
//! `A = [0:0:1]`, line at infinity `z = 0`.

mod curve;
mod divisor;
mod elimination;
mod transform;

pub use curve::{PlaneCurve, ProjPoint, Scene, SceneWarning};
pub use divisor::{extract_known_components, Component, Divisor, Label};
pub use elimination::{degree_genus_predict, elimination_crosscheck};
pub use transform::{
    conchoid_resultant, conchoidal_transform, formal_resultant, infinity_restriction,
    membership_along_line, membership_value, multiplicity_at, tangent_cone_at, Membership,
};
