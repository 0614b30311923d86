//! Entanglement entropies and spectra for low-nullity stabilizer superpositions.
//!
//! A state given as a superposition of stabilizer states, or produced by a
//! Clifford circuit doped with a few non-Clifford phase gates, carries an
//! (often large) group of Pauli operators that stabilize it exactly. This
//! crate splits the entanglement of a region into a flat, integer-valued
//! piece generated by that group and a small logical piece that carries all
//! the non-stabilizerness, computes both, and reassembles the von Neumann
//! entropy, every Rényi entropy, and the full entanglement spectrum.
//!
//! The main entry points:
//!
//! - [`circuit`]: parse and execute circuit programs into a [`SuperposedState`]
//! - [`extract`]: maximal stabilizer group and nullity of a superposition
//! - [`entropy`]: region entropies, spectra and the area/logical split
//! - [`learner`]: simulated Bell difference sampling and group recovery
//! - [`oracle`]: dense statevector brute force for verification
//!
//! The `parallel` feature (on by default) evaluates the large independent
//! expectation batches with rayon; without it the same loops run
//! sequentially.

pub mod circuit;
pub mod entropy;
pub mod error;
pub mod extract;
pub mod gf2;
pub mod learner;
pub mod oracle;
pub mod pauli;
pub mod stabsum;
pub mod superposed;
pub mod tableau;

mod eigen;

pub use error::{Error, Result};
pub use pauli::PauliOp;
