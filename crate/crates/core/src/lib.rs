//! Ising anyons in the anyonic computational basis, with exact and float
//! state-vector simulation of anyonic teleportation.

pub mod braid;
pub mod error;
pub mod layout;
pub mod matrix;
pub mod model;
pub mod scalar;
pub mod state;
pub mod statefile;
pub mod teleport;

pub use braid::verify::{verify_braid_relations, verify_pauli_identities, CheckResult, Family, VerifyReport};
pub use braid::{apply, BraidWord, GateOp, Letter};
pub use error::{Error, Result};
pub use layout::Layout;
pub use matrix::Matrix;
pub use model::Charge;
pub use num_complex::Complex64;
pub use scalar::{Backend, CycScalar, Scalar};
pub use state::{embed, fidelity_up_to_phase, measure_pair, reduced_density, AnyonState, MeasurementRecord, Sector};
pub use statefile::StateFile;
pub use teleport::{run_teleport, CorrectionPlan, Mode, TeleportOptions, TeleportReport};
