//! Real vector space models: the classical four-dimensional representation,
//! the tilted-subspace model for k-type items, the meet/join no-go check and
//! the eight-dimensional emergent-concept model.

mod classical;
mod ktype;
mod r8;
mod rotation;
mod subspace;

pub use classical::{classical_vector, reconstruct_from_vector, R4Vector, RealSpaceError};
pub use ktype::{ktype_vector, quantum_logic_factor, theta_feasible_intervals, SignPair, ThetaInterval};
pub use r8::{
    classical_target, conjunction_dual, fit_pair_angles, pair_solvable, r8_residuals, readout, relative_weights,
    solve_r8, Derived, FitError, PairAngles, R8Error, R8Options, R8Solution, Readout, RelativeWeights,
};
pub use rotation::{emergent_rotation, EmergentFrame};
pub use subspace::{theorem9_check, Deviations, SubspaceError};
