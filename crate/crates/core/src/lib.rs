//! Quantum coherence in mutually unbiased bases.
//!
//! The crate computes l1-norm and relative-entropy coherence of states
//! expressed in mutually unbiased bases, checks the closed-form identities
//! that hold for qubit, three-level X-type and Bell-diagonal states, and
//! produces level-surface data for the summed Bell-diagonal coherence.
//!
//! ```
//! use mubcoh::{coherence, mub, states};
//!
//! let rho = states::bloch_state(states::BlochVector::new(0.6, 0.0, 0.8).unwrap());
//! let alpha = mub::pauli_mubs();
//! let c = coherence::l1_coherence(&rho, &alpha.bases()[1]).unwrap();
//! assert!((c - 0.8).abs() < 1e-12);
//! ```

pub mod coherence;
pub mod error;
pub mod io;
pub mod linalg;
pub mod mub;
pub mod states;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
