//! Compilation and verification of decoupling pulse schedules for networks
//! of `d`-dimensional nodes under pair-interaction Hamiltonians.
//!
//! The pipeline is:
//!
//! - [`gf`]: arithmetic in GF(2^e) and its fixed bit-vector isomorphism.
//! - [`codes`]: linear codes (Hamming, simplex, the length-5 quadratic-residue
//!   code over GF(4)), dual codes and brute-force minimum distance.
//! - [`designs`]: orthogonal arrays from codewords and exhaustive strength checks.
//! - [`cycles`]: Hamilton cycles in the Cayley graph of Z_d^k with forward
//!   coordinate generators (reflected Gray codes at `d = 2`).
//! - [`pauli`]: phase-free generalized Pauli labels and their dense matrices.
//! - [`compiler`]: schedules that walk an orthogonal array along a Hamilton
//!   cycle so that only a handful of distinct pulses occur.
//! - [`verifier`]: average Hamiltonian, pulse-form vs toggling-frame
//!   equivalence and scalable pairwise counting.

pub mod codes;
pub mod compiler;
pub mod cycles;
pub mod designs;
pub mod gf;
pub mod pauli;
pub mod verifier;

pub use codes::{CodeParams, LinearCode};
pub use compiler::{PulseSchedule, Scenario};
pub use cycles::{CycleSpec, StepList};
pub use designs::{OrthogonalArray, SymbolArray};
pub use gf::{FieldElement, FieldSpec};
pub use pauli::{NodeSpec, PauliLabel};
pub use verifier::{PairHamiltonian, SequenceTimes};
