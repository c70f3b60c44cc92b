//! Exact integer linear algebra: Hermite and Smith normal forms, integer
//! kernels, and sublattices of `Z^r` kept in canonical form.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{sign_split, Lattice, SignSplit};
pub use matrix::Matrix;
pub use normal_form::{hnf, kernel_basis, smith_invariants, snf, solve};

use crate::scalar::Int;
use crate::Result;

/// Lattice generated by the columns of `m`.
pub fn image_lattice<T: Int>(m: &Matrix<T>) -> Lattice<T> {
    Lattice::image(m)
}

pub fn lattice_sum<T: Int>(a: &Lattice<T>, b: &Lattice<T>) -> Result<Lattice<T>> {
    a.sum(b)
}

pub fn lattice_intersect<T: Int>(a: &Lattice<T>, b: &Lattice<T>) -> Result<Lattice<T>> {
    a.intersect(b)
}

pub fn lattice_colon_int<T: Int>(a: &Lattice<T>, c: &T) -> Result<Lattice<T>> {
    a.colon(c)
}

pub fn lattice_contains<T: Int>(a: &Lattice<T>, v: &[T]) -> bool {
    a.contains(v)
}
