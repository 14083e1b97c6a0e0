//! Classical and quantum models of membership weights for combinations of
//! two concepts.
//!
//! * [`membership`]: measured triples, deviation factors, classification and
//!   explicit Kolmogorovian witnesses.
//! * [`hilbert_c3`]: interference model in ℂ³.
//! * [`fock`]: two-sector convex model.
//! * [`realspace`]: real vector space representations up to the
//!   eight-dimensional emergent-concept model.
//! * [`data`]: datasets, the embedded reference corpus and JSON reports.
//!
//! Every numerical routine is generic over the scalar type through
//! [`Real`]; the aliases below fix it to `f64`.

pub mod data;
pub mod fock;
pub mod hilbert_c3;
pub mod membership;
pub mod num;
pub mod realspace;

pub use num::Real;

pub type Triple = membership::MembershipTriple<f64>;
pub type Classification = membership::Classification<f64>;
pub type Witness = membership::KolmogorovWitness<f64>;
pub type C3Model = hilbert_c3::C3Model<f64>;
pub type FockWeights = fock::FockWeights<f64>;
pub type R4Vector = realspace::R4Vector<f64>;
pub type PairAngles = realspace::PairAngles<f64>;
pub type R8Options = realspace::R8Options<f64>;
pub type R8Solution = realspace::R8Solution<f64>;
pub type RelativeWeights = realspace::RelativeWeights<f64>;

pub use membership::{Connective, Label};
