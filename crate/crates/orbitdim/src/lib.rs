//! Orbit dimensions of n-qubit pure states under local group actions.
//!
//! An n-qubit ket is held with exact Gaussian-rational amplitudes, so the
//! dimension of its GL(2,ℂ)⊗ⁿ / SL(2,ℂ)⊗ⁿ / U(2)⊗ⁿ / SU(2)⊗ⁿ orbit — the
//! rank of the realified tangent columns — is an exact integer, never a
//! numerical estimate. On top of the ket- and state-space orbit dimensions
//! the crate derives:
//!
//! - `D1`, the dimension of a state's SLOCC equivalence class,
//! - `D2`, the dimension of a principal local-unitary orbit inside that
//!   class, found by Monte Carlo randomization over invertible local
//!   operators,
//! - `D3 = D1 − D2`, the number of free parameters of the class modulo
//!   local unitaries,
//! - the witness `W1` (GL minus SL ket-orbit dimension), which is 2 exactly
//!   on GHZ-type entangled states and 0 otherwise.
//!
//! A floating-point SVD rank with a spectral-gap certificate cross-checks
//! the exact elimination but never overrides it.

pub mod corpus;
pub mod error;
pub mod ket;
pub mod lie;
pub mod matrix;
pub mod orbit;
pub mod rank;
pub mod scalar;
pub mod statefile;

pub use error::{LieError, OrbitError, RankError, StateError};
pub use ket::{derealify, realify, scalar_mul_i, PureKet, RealVector};
pub use lie::{apply_generator, tangent_matrix, Generator, GeneratorKind, GroupKind, TangentMatrix};
pub use matrix::RationalMatrix;
pub use orbit::{
    class_dimensions, generic_state_d1, ket_orbit_dim, orbit_report, principal_u2_dim, random_ket,
    state_matrix, state_orbit_dim, witness_w1, ClassDimensions, Ilo, OrbitReport, PrincipalOrbit,
    PrincipalTrial,
};
pub use rank::{exact_rank, float_rank, float_rank_default, RankMethod, RankResult};
pub use scalar::GaussianRational;
pub use statefile::{parse_state, serialize_state, state_to_file, StateFile, StateTerm};
