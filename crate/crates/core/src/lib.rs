//! Vanishing ideals, lattices and basic parameters of parameterized toric
//! codes over finite fields.

pub mod cli;
pub mod codes;
pub mod error;
pub mod gfq;
pub mod intlat;
pub mod points;
pub mod poly;
pub mod polyhedra;
pub mod scalar;
pub mod toric;
pub mod vanish;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use error::{Error, Result};

pub type IntMatrix = intlat::Matrix<BigInt>;
pub type IntLattice = intlat::Lattice<BigInt>;
pub type Rational = Ratio<BigInt>;
