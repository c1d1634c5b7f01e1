//! The circle case: the base curve is a circle centred at the origin of the
//! conchoid, its two exceptional lines join that centre to the cyclic points.

mod frame;
mod iterate;
mod recognize;
mod split;

pub use iterate::iterated_conchoid;
pub use frame::{cyclic_tangent_pair, recenter, CircleSpec};
pub use recognize::{
    candidate_radii, recognize_complete, recognize_complete_with, recognize_proper, recognize_proper_with, Candidate,
    Check, RadiusCandidates, RecognitionOptions, RecognitionReport, RecognitionVerdict,
};
pub use split::{conic_focus_split, split_test, Parity, SplitComponents, SplitVerdict, SplitWitness};
