//! Exact computation kernel for the doubly-graded supercommutative polynomial
//! algebra generated by base coordinates `x_i`, odd fibre coordinates `xi_a`,
//! odd cofibre coordinates `th_a` and momenta `p_i`, together with the
//! canonical even graded Poisson bracket pairing them.
//!
//! On top of the algebra the crate provides:
//!
//! - truncating Hamiltonian flows (`exp_flow`) and the Legendre transform;
//! - cubic Hamiltonians split into components of bidegree (1,2), (2,1),
//!   (0,3), (3,0), the master equation `{Theta,Theta} = 0`, structure
//!   classification, derived brackets, differentials, Koszul brackets and the
//!   associated homotopy bracket tower;
//! - twisting by 2-forms and bivectors, closed-form twisted components,
//!   Maurer-Cartan residuals, and twisted differentials/brackets;
//! - the quadratic symmetry algebra: tilde matrices, transition matrices,
//!   tau actions, infinitesimal actions, factorization and gauge-equivalence
//!   checks;
//! - an expression grammar, canonical printer, `.bb` fixture format and the
//!   `bb` command-line interface.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every value is
//! immutable after construction and every operation is a pure function, so
//! values can be shared and moved across threads freely.

pub mod error;
pub mod space;
#[macro_use]
pub mod poly;
pub mod frontend;
pub mod gauge;
pub mod sample;
pub mod structures;
pub mod symplectic;
pub mod twisting;

pub use error::{Error, Result};
pub use poly::{Coeff, Monomial, SuperPoly};
pub use space::{Bidegree, Family, Generator, GeneratorSpace};
pub use structures::{CheckReport, Classification, StructureTheta};
pub use twisting::{TwistInput, TwistKind};
