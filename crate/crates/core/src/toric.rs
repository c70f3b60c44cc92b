//! Toric input data: the ray matrix `phi`, the grading `beta`, the
//! parameterization `Q` and the field, checked for exactness of
//! `0 -> Z^n -phi-> Z^r -beta-> Z^d -> 0`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gfq::Field;
use crate::intlat::{smith_invariants, snf, Lattice};
use crate::polyhedra::cone_is_trivial;
use crate::{Error, IntLattice, IntMatrix, Result};

/// Size caps for the exhaustive parts of the pipeline.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Guards {
    /// Parameter-space iterations, `(q-1)^s`.
    pub enumeration: u64,
    /// Polynomials in a Gröbner basis.
    pub groebner: usize,
    /// Cells in the integer box searched for monomials of a degree.
    pub monomial_box: u64,
    /// Codewords visited by the minimum-distance search, `q^k`.
    pub distance: u64,
    /// Largest coefficient radius of the basis search in the complete-intersection test.
    pub ci_box: i64,
    /// Largest side of a matrix accepted by the dominating test.
    pub dominating_size: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            enumeration: 10_000_000,
            groebner: 10_000,
            monomial_box: 10_000_000,
            distance: 10_000_000,
            ci_box: 10,
            dominating_size: 12,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ToricInstance {
    pub field: Arc<Field>,
    /// `r x n`; rows are the ray generators.
    pub phi: IntMatrix,
    /// `d x r`; columns are the degrees of the variables.
    pub beta: IntMatrix,
    /// `s x r`; columns parameterize the toric set.
    pub q_mat: IntMatrix,
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub s: usize,
    /// `{c : phi c >= 0} = {0}`, which keeps every graded piece finite.
    pub complete: bool,
    pub beta_supplied: bool,
    pub guards: Guards,
}

/// Grading matrix from the Smith form of `phi`: the last `r - n` rows of `P`
/// where `P phi K = D`.
pub fn derive_beta(phi: &IntMatrix) -> Result<IntMatrix> {
    let (r, n) = (phi.rows(), phi.cols());
    if r < n {
        return Err(Error::RankDeficient);
    }
    let (d, p, _) = snf(phi);
    for i in 0..n {
        if d[(i, i)].is_zero() {
            return Err(Error::RankDeficient);
        }
        if !d[(i, i)].is_one() {
            return Err(Error::TorsionClassGroup);
        }
    }
    Ok(p.select_rows(n..r))
}

/// `beta · m`
pub fn degree_of(beta: &IntMatrix, m: &[BigInt]) -> Vec<BigInt> {
    beta.mul_vec(m)
}

impl ToricInstance {
    /// Checks the data and derives `beta` when it is not supplied.
    pub fn new(
        field: Arc<Field>,
        phi: IntMatrix,
        beta: Option<IntMatrix>,
        q_mat: IntMatrix,
        guards: Guards,
    ) -> Result<Self> {
        let (r, n) = (phi.rows(), phi.cols());
        if r < n {
            return Err(Error::DimensionMismatch(format!(
                "phi is {r}x{n}; need r >= n"
            )));
        }
        if q_mat.cols() != r {
            return Err(Error::DimensionMismatch(format!(
                "Q has {} columns but phi has {r} rows",
                q_mat.cols()
            )));
        }
        let derived = derive_beta(&phi)?;
        let beta_supplied = beta.is_some();
        let beta = match beta {
            None => derived,
            Some(b) => {
                if b.cols() != r || b.rows() != r - n {
                    return Err(Error::DimensionMismatch(format!(
                        "beta is {}x{}; expected {}x{r}",
                        b.rows(),
                        b.cols(),
                        r - n
                    )));
                }
                if !(&b * &phi).is_zero() || smith_invariants(&b).iter().any(|x| !x.is_one()) {
                    return Err(Error::ExactnessFailure);
                }
                b
            }
        };
        let complete = cone_is_trivial(&phi);
        let s = q_mat.rows();
        Ok(ToricInstance {
            field,
            phi,
            beta,
            q_mat,
            n,
            r,
            d: r - n,
            s,
            complete,
            beta_supplied,
            guards,
        })
    }

    pub fn q(&self) -> u32 {
        self.field.size()
    }

    /// `q - 1` as an integer.
    pub fn unit_order(&self) -> BigInt {
        BigInt::from(self.field.unit_order())
    }

    /// `Q phi`, an `s x n` matrix.
    pub fn q_phi(&self) -> IntMatrix {
        &self.q_mat * &self.phi
    }

    /// `L_beta = ker beta = im phi`.
    pub fn l_beta(&self) -> IntLattice {
        Lattice::image(&self.phi)
    }

    /// `L_Q = ker Q`.
    pub fn l_q(&self) -> IntLattice {
        Lattice::kernel(&self.q_mat)
    }

    pub fn with_q(&self, q_mat: IntMatrix) -> Result<Self> {
        Self::new(
            self.field.clone(),
            self.phi.clone(),
            Some(self.beta.clone()),
            q_mat,
            self.guards,
        )
    }

    pub fn degree_of(&self, m: &[BigInt]) -> Vec<BigInt> {
        degree_of(&self.beta, m)
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::Unbounded)
        }
    }
}

/// Row lattice of a matrix, for comparing gradings up to unimodular change.
pub fn row_lattice(m: &IntMatrix) -> IntLattice {
    Lattice::image(&m.transpose())
}
