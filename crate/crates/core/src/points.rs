//! The parameterized toric set `Y_Q` inside the torus, one canonical
//! representative per class, and its size.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::gfq::{Elem, Field};
use crate::intlat::smith_invariants;
use crate::scalar::to_i64;
use crate::toric::ToricInstance;
use crate::{Error, IntMatrix, Result};

/// A representative `(t^{q_1}, ..., t^{q_r})` of a point of `Y_Q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusPoint {
    pub coords: Vec<Elem>,
    /// Discrete logs of `coords`.
    pub dlogs: Vec<u32>,
}

impl TorusPoint {
    pub fn from_dlogs(field: &Field, dlogs: Vec<u32>) -> Self {
        let coords = dlogs.iter().map(|&e| field.eta_pow(e as i64)).collect();
        TorusPoint { coords, dlogs }
    }

    /// Componentwise product with `eta^shift`.
    pub fn rescaled(&self, field: &Field, shift: &[u32]) -> Self {
        let ord = field.unit_order();
        let dlogs = self
            .dlogs
            .iter()
            .zip(shift)
            .map(|(a, b)| (a + b) % ord)
            .collect();
        Self::from_dlogs(field, dlogs)
    }
}

/// Discrete logs of the image of a point under the quotient map of the
/// torus; equal keys mean equal points of the toric variety.
pub type CanonicalKey = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointClass {
    pub point: TorusPoint,
    pub key: CanonicalKey,
}

/// Residues of an integer matrix modulo `m`, row-major.
fn residues(a: &IntMatrix, m: u32) -> Result<Vec<Vec<u32>>> {
    let m = BigInt::from(m);
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| Ok(to_i64(&a[(i, j)].mod_floor(&m))? as u32))
                .collect()
        })
        .collect()
}

/// Row vector times matrix modulo `m`.
fn row_times(h: &[u32], a: &[Vec<u32>], cols: usize, m: u32) -> Vec<u32> {
    let mut out = vec![0u64; cols];
    for (hi, row) in h.iter().zip(a) {
        if *hi == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o = (*o + *hi as u64 * *x as u64) % m as u64;
        }
    }
    out.into_iter().map(|x| x as u32).collect()
}

fn check_guard(inst: &ToricInstance) -> Result<()> {
    let size = (inst.field.unit_order() as u128)
        .checked_pow(inst.s as u32)
        .unwrap_or(u128::MAX);
    if size > inst.guards.enumeration as u128 {
        return Err(Error::guard(
            "parameter enumeration",
            size,
            inst.guards.enumeration as u128,
        ));
    }
    Ok(())
}

/// Calls `f` on every `h` in `{0..m-1}^s`, first coordinate most significant.
fn for_each_exponent(s: usize, m: u32, mut f: impl FnMut(&[u32])) {
    let mut h = vec![0u32; s];
    loop {
        f(&h);
        let mut i = s;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            h[i] += 1;
            if h[i] < m {
                break;
            }
            h[i] = 0;
        }
    }
}

/// All classes of `Y_Q`, sorted by key. Each class keeps the representative
/// with the smallest parameter exponent vector.
pub fn enumerate_points(inst: &ToricInstance) -> Result<Vec<PointClass>> {
    check_guard(inst)?;
    let m = inst.field.unit_order();
    let q_res = residues(&inst.q_mat, m)?;
    let qphi_res = residues(&inst.q_phi(), m)?;
    let mut classes: BTreeMap<CanonicalKey, TorusPoint> = BTreeMap::new();
    for_each_exponent(inst.s, m, |h| {
        let key = row_times(h, &qphi_res, inst.n, m);
        classes.entry(key).or_insert_with(|| {
            TorusPoint::from_dlogs(&inst.field, row_times(h, &q_res, inst.r, m))
        });
    });
    Ok(classes
        .into_iter()
        .map(|(key, point)| PointClass { point, key })
        .collect())
}

/// Just the representatives, in canonical order.
pub fn representatives(inst: &ToricInstance) -> Result<Vec<TorusPoint>> {
    Ok(enumerate_points(inst)?
        .into_iter()
        .map(|c| c.point)
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LengthCount {
    /// Number of parameters `h` with `h Q phi ≡ 0 mod (q-1)`.
    pub kernel_size: u64,
    pub length: u64,
}

/// `N = (q-1)^s / |{h : h Q phi ≡ 0 mod (q-1)}|` by direct count.
pub fn length_count(inst: &ToricInstance) -> Result<LengthCount> {
    check_guard(inst)?;
    let m = inst.field.unit_order();
    let qphi_res = residues(&inst.q_phi(), m)?;
    let mut kernel_size = 0u64;
    let mut total = 0u64;
    for_each_exponent(inst.s, m, |h| {
        total += 1;
        if row_times(h, &qphi_res, inst.n, m).iter().all(|&x| x == 0) {
            kernel_size += 1;
        }
    });
    debug_assert_eq!(total % kernel_size, 0);
    Ok(LengthCount {
        kernel_size,
        length: total / kernel_size,
    })
}

/// `N` from the Smith form of `Q phi`: the product of `(q-1)/gcd(q-1, d_i)`.
pub fn length_snf(inst: &ToricInstance) -> BigInt {
    let m = inst.unit_order();
    smith_invariants(&inst.q_phi())
        .iter()
        .map(|d| &m / m.gcd(d))
        .product()
}
