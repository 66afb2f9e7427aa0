//! Exact computer algebra for the Hopf algebras, character groups and Lie
//! algebras built from operads, together with the rooted-tree and Feynman
//! graph examples from renormalisation.

pub mod bialgebra;
pub mod ck;
pub mod combinat;
pub mod error;
pub mod hopf;
pub mod lincomb;
pub mod linalg;
pub mod operad;
pub mod par;
pub mod perm;
pub mod scalar;
pub mod series;
pub mod suite;
pub mod wick;

pub use error::{Error, Result};
pub use lincomb::{Basis, BasisKey, LinComb};
pub use scalar::Scalar;
