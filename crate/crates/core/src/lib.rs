//! Exact computations in the Orlik–Solomon algebra `OS_n` and the
//! Varchenko–Gel'fand ring `VG_n` of the braid arrangement `A_n`, their
//! invariants under the symmetric group `S_n` fixing the label `n+1`, and
//! checkers for the presentations of those invariant rings.

pub mod braid;
pub mod element;
pub mod error;
pub mod gc;
pub mod invariants;
pub mod linalg;
pub mod os;
pub mod par;
pub mod scalar;
mod straighten;
pub mod symfunc;
pub mod theorems;
pub mod vg;

pub use braid::{Edge, Handful, Permutation};
pub use element::{Element, Ring};
pub use error::{Error, Result};
pub use scalar::Scalar;
