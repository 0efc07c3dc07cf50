//! Exact computer algebra for the vector invariants `K[V^m]^{G(n,q)}` of
//! the wreath products `G(n,q) = C_q ≀ S_n`.

pub mod checks;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod linalg;
pub mod matrix;
pub mod partitions;
pub mod poly;
pub mod presentation;
pub mod relations;
pub mod sigma;
pub mod trace;
pub mod word;

pub use coeff::{Coeff, Domain};
pub use error::{Error, Result};
pub use poly::{Monomial, Poly, VarContext, VarId};
pub use trace::TracePoly;
pub use word::{Word, WordMultiset};
