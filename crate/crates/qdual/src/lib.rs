//! Exact symbolic computation in finitely presented Hopf algebras over the
//! Laurent ring k[q,q^-1]: PBW rewriting, iterated coproducts and Drinfeld's
//! delta maps, the tilde functors between integer forms, and semiclassical
//! (q = 1) Poisson / co-Poisson limits, together with a verified catalog of
//! the standard small examples (SL2, SL3, E2, Heisenberg).

pub mod qcoeff;
pub mod pid;
pub mod ncalg;
pub mod tensor;
pub mod hopf;
pub mod drinfeld;
pub mod classical;
pub mod catalog;
pub mod cli;

pub use ncalg::{Generator, NcElement, Presentation, RewriteRule, Word};
pub use qcoeff::LaurentPoly;
pub use tensor::TensorElement;
