use num_traits::Zero;

use super::normal_form::{hnf, hnf_rank, kernel_basis, solve};
use super::Matrix;
use crate::scalar::Int;
use crate::{Error, Result};

/// A subgroup of `Z^ambient`, stored by its column-HNF basis.
///
/// The basis is canonical, so derived `PartialEq` is subgroup equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice<T> {
    basis: Matrix<T>,
}

impl<T: Int> Lattice<T> {
    /// The lattice generated by the columns of `m`.
    pub fn image(m: &Matrix<T>) -> Self {
        let (h, _) = hnf(m);
        let rank = hnf_rank(&h);
        Lattice {
            basis: h.select_cols(&(0..rank).collect::<Vec<_>>()),
        }
    }

    pub fn from_generators(ambient: usize, gens: &[Vec<T>]) -> Self {
        Self::image(&Matrix::from_columns(gens, ambient))
    }

    pub fn zero(ambient: usize) -> Self {
        Lattice {
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice {
            basis: Matrix::identity(ambient),
        }
    }

    /// `ker_Z M` as a sublattice of `Z^cols`.
    pub fn kernel(m: &Matrix<T>) -> Self {
        Self::image(&kernel_basis(m))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis.columns()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "lattices in Z^{} and Z^{}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::image(&self.basis.hstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        // A x = B y  <=>  [A | -B] (x, y) = 0
        let stacked = self.basis.hstack(&other.basis.scale(&-T::one()));
        let kern = kernel_basis(&stacked);
        let coeffs = kern.select_rows(0..self.rank());
        Ok(Self::image(&(&self.basis * &coeffs)))
    }

    /// `{z : c z ∈ self}`
    pub fn colon(&self, c: &T) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidInput(format!(
                "colon by non-positive integer {c}"
            )));
        }
        let scaled_full = Self {
            basis: Matrix::scalar(self.ambient_dim(), c.clone()),
        };
        let meet = self.intersect(&scaled_full)?;
        let shrunk: Vec<Vec<T>> = meet
            .basis_vectors()
            .into_iter()
            .map(|v| v.into_iter().map(|x| x / c.clone()).collect())
            .collect();
        Ok(Self::from_generators(self.ambient_dim(), &shrunk))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::image(&self.basis.scale(c))
    }

    /// Image of the lattice under `M : Z^ambient -> Z^rows(M)`.
    pub fn map(&self, m: &Matrix<T>) -> Self {
        Self::image(&(m * &self.basis))
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(
            v.len(),
            self.ambient_dim(),
            "vector dimension differs from lattice"
        );
        self.coordinates(v).is_some()
    }

    /// Coefficients of `v` in the stored basis, if `v` belongs to the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if self.rank() == 0 {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let x = solve(&self.basis, v)?;
        let back = self.basis.mul_vec(&x);
        debug_assert_eq!(back, v);
        Some(x)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Index `[sup : self]` when `self ⊆ sup` with equal rank; `None` otherwise.
    pub fn index_in(&self, sup: &Self) -> Option<T> {
        if !self.is_subset_of(sup) || self.rank() != sup.rank() {
            return None;
        }
        let coords: Vec<Vec<T>> = self
            .basis_vectors()
            .iter()
            .map(|v| sup.coordinates(v).unwrap())
            .collect();
        let c = Matrix::from_columns(&coords, sup.rank());
        Some(c.determinant().abs())
    }
}

/// `v = plus - minus` with disjoint supports.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignSplit<T> {
    pub plus: Vec<T>,
    pub minus: Vec<T>,
}

pub fn sign_split<T: Int>(v: &[T]) -> SignSplit<T> {
    let plus = v
        .iter()
        .map(|x| {
            if x.is_positive() {
                x.clone()
            } else {
                T::zero()
            }
        })
        .collect();
    let minus = v
        .iter()
        .map(|x| {
            if x.is_negative() {
                -x.clone()
            } else {
                T::zero()
            }
        })
        .collect();
    SignSplit { plus, minus }
}
