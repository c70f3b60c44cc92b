use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::lattice_l;
use crate::polyhedra::cone_is_trivial;
use crate::toric::{Guards, ToricInstance};
use crate::{Error, IntLattice, IntMatrix, Result};

/// Every column has a positive and a negative entry.
pub fn is_mixed(m: &IntMatrix) -> bool {
    (0..m.cols()).all(|j| {
        let col = m.column(j);
        col.iter().any(Signed::is_positive) && col.iter().any(Signed::is_negative)
    })
}

/// No square submatrix is mixed, with the default size guard.
pub fn is_dominating(m: &IntMatrix) -> Result<bool> {
    is_dominating_within(m, Guards::default().dominating_size)
}

/// A `t x t` mixed submatrix exists iff some set of `t` rows has at least
/// `t` columns that are mixed on it, so it suffices to scan row subsets.
pub fn is_dominating_within(m: &IntMatrix, limit: usize) -> Result<bool> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows > limit.min(63) || cols > limit {
        return Err(Error::SizeGuard { rows, cols });
    }
    let masks: Vec<(u64, u64)> = (0..cols)
        .map(|j| {
            (0..rows).fold((0, 0), |(pos, neg), i| {
                let x = &m[(i, j)];
                (
                    pos | (x.is_positive() as u64) << i,
                    neg | (x.is_negative() as u64) << i,
                )
            })
        })
        .collect();
    let candidates: Vec<(u64, u64)> = masks
        .into_iter()
        .filter(|(p, n)| *p != 0 && *n != 0)
        .collect();
    for set in 1u64..(1u64 << rows) {
        let t = set.count_ones() as usize;
        if t > candidates.len() {
            continue;
        }
        let mixed = candidates
            .iter()
            .filter(|(p, n)| p & set != 0 && n & set != 0)
            .count();
        if mixed >= t {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CiReport {
    pub lattice: IntLattice,
    /// The basis matrix whose flags are reported (columns are lattice vectors):
    /// the certificate when one was found, the canonical basis otherwise.
    pub basis: IntMatrix,
    pub mixed: bool,
    pub dominating: bool,
    pub complete_intersection: bool,
    /// The certificate came from the basis search rather than the canonical basis.
    pub from_search: bool,
    /// Coefficient radius used by the basis search, 0 when it did not run.
    pub search_radius: i64,
    pub warnings: Vec<String>,
}

fn default_radius(k: usize) -> i64 {
    match k {
        0..=2 => 6,
        3 => 3,
        4 => 2,
        _ => 1,
    }
}

fn candidate_limit(k: usize) -> usize {
    if k <= 3 {
        40
    } else {
        24
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
fn find_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Looks for a mixed dominating basis among short combinations of `basis`.
fn search_basis(basis: &IntMatrix, radius: i64, limit: usize) -> Result<Option<IntMatrix>> {
    let (r, k) = (basis.rows(), basis.cols());
    let mut coeffs = vec![-radius; k];
    let mut found: Vec<(BigInt, Vec<BigInt>, Vec<BigInt>)> = Vec::new();
    'outer: loop {
        let first = coeffs.iter().find(|c| **c != 0);
        if matches!(first, Some(c) if *c > 0) {
            let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
            let v = basis.mul_vec(&c);
            if v.iter().any(Signed::is_positive) && v.iter().any(Signed::is_negative) {
                let norm: BigInt = v.iter().map(Signed::abs).sum();
                found.push((norm, v, c));
            }
        }
        for i in (0..k).rev() {
            if coeffs[i] < radius {
                coeffs[i] += 1;
                continue 'outer;
            }
            coeffs[i] = -radius;
        }
        break;
    }
    found.sort();
    found.truncate(candidate_limit(k));

    let mut failure = None;
    let hit = find_subset(found.len(), k, |idx| {
        let c = IntMatrix::from_columns(
            &idx.iter().map(|&i| found[i].2.clone()).collect::<Vec<_>>(),
            k,
        );
        if !c.determinant().abs().is_one() {
            return false;
        }
        let m = IntMatrix::from_columns(
            &idx.iter().map(|&i| found[i].1.clone()).collect::<Vec<_>>(),
            r,
        );
        match is_dominating_within(&m, limit) {
            Ok(d) => d,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(hit.map(|idx| {
        IntMatrix::from_columns(
            &idx.iter().map(|&i| found[i].1.clone()).collect::<Vec<_>>(),
            r,
        )
    }))
}

/// Tests whether `I(Y_Q) = I_L` is a complete intersection by exhibiting a
/// basis of `L` whose matrix is mixed and dominating.
///
/// The criterion needs `L ∩ N^r = {0}`. A complete fan guarantees it;
/// otherwise it is decided exactly by checking that `{c : B c >= 0}` is
/// trivial for a basis matrix `B`. A negative verdict after the basis search
/// is not a proof that the ideal is not a complete intersection.
pub fn is_complete_intersection(inst: &ToricInstance) -> Result<CiReport> {
    let lattice = lattice_l(inst);
    let basis = lattice.basis().clone();
    let limit = inst.guards.dominating_size;
    if !inst.complete && !cone_is_trivial(&basis) {
        return Err(Error::PreconditionUnverified);
    }
    let mixed = is_mixed(&basis);
    let dominating = is_dominating_within(&basis, limit)?;
    let mut warnings = Vec::new();
    if mixed && dominating {
        return Ok(CiReport {
            lattice,
            basis,
            mixed,
            dominating,
            complete_intersection: true,
            from_search: false,
            search_radius: 0,
            warnings,
        });
    }
    if dominating {
        warnings.push("canonical basis matrix is dominating but not mixed".to_string());
    }
    if basis.rows() > limit || basis.cols() > limit {
        return Err(Error::SizeGuard {
            rows: basis.rows(),
            cols: basis.cols(),
        });
    }
    let radius = default_radius(basis.cols()).min(inst.guards.ci_box);
    if let Some(cert) = search_basis(&basis, radius, limit)? {
        return Ok(CiReport {
            lattice,
            mixed: true,
            dominating: true,
            basis: cert,
            complete_intersection: true,
            from_search: true,
            search_radius: radius,
            warnings,
        });
    }
    warnings.push(format!(
        "no mixed dominating basis found with coefficients up to {radius} in absolute value; \
         the negative verdict is not certified"
    ));
    Ok(CiReport {
        lattice,
        basis,
        mixed,
        dominating,
        complete_intersection: false,
        from_search: false,
        search_radius: radius,
        warnings,
    })
}
