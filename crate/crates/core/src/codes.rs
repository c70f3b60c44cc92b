//! Evaluation codes on `Y_Q`: monomial bases of graded pieces, generator
//! matrices, code parameters and the multigraded Hilbert function.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::gfq::{Elem, Field};
use crate::intlat::solve;
use crate::points::{representatives, TorusPoint};
use crate::poly::{buchberger, divides, Exponent, Polynomial};
use crate::polyhedra::{ceil, coordinate_bounds, floor};
use crate::scalar::to_i64;
use crate::toric::ToricInstance;
use crate::vanish::ambient_ring;
use crate::{Error, Result};

/// Monomials of a fixed degree, largest first in the lex order
/// `x_1 > ... > x_r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialBasis {
    pub alpha: Vec<BigInt>,
    pub monomials: Vec<Exponent>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// All `m >= 0` with `beta m = alpha`, written as `m0 + phi c` for one
/// solution `m0` and `c` ranging over the box cut out by `phi c >= -m0`.
pub fn monomials_of_degree(inst: &ToricInstance, alpha: &[BigInt]) -> Result<MonomialBasis> {
    inst.require_complete()?;
    if alpha.len() != inst.d {
        return Err(Error::DimensionMismatch(format!(
            "degree has {} entries; the grading has {}",
            alpha.len(),
            inst.d
        )));
    }
    let m0 = solve(&inst.beta, alpha)
        .ok_or_else(|| Error::InvalidInput("degree is not in the image of beta".into()))?;
    let rhs: Vec<BigInt> = m0.iter().map(|x| -x).collect();
    let empty = MonomialBasis {
        alpha: alpha.to_vec(),
        monomials: Vec::new(),
    };
    let Some(bounds) = coordinate_bounds(&inst.phi, &rhs) else {
        return Ok(empty);
    };
    let mut ranges = Vec::with_capacity(inst.n);
    let mut cells: u128 = 1;
    for (lo, hi) in &bounds {
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Err(Error::Unbounded);
        };
        let (lo, hi) = (ceil(lo), floor(hi));
        if lo > hi {
            return Ok(empty);
        }
        let width = to_i64(&(&hi - &lo))? as u128 + 1;
        cells = cells.saturating_mul(width);
        ranges.push((lo, hi));
    }
    if cells > inst.guards.monomial_box as u128 {
        return Err(Error::guard(
            "monomial search box",
            cells,
            inst.guards.monomial_box as u128,
        ));
    }

    let mut monomials = Vec::new();
    let mut c: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    'outer: loop {
        let shift = inst.phi.mul_vec(&c);
        let m: Vec<BigInt> = m0.iter().zip(&shift).map(|(a, b)| a + b).collect();
        if m.iter().all(|x| !x.is_negative()) {
            let e = m
                .iter()
                .map(|x| u32::try_from(to_i64(x)?).map_err(|_| Error::Overflow(x.to_string())))
                .collect::<Result<Exponent>>()?;
            monomials.push(e);
        }
        for i in (0..c.len()).rev() {
            if c[i] < ranges[i].1 {
                c[i] += 1;
                continue 'outer;
            }
            c[i] = ranges[i].0.clone();
        }
        break;
    }
    monomials.sort_by(|a, b| b.cmp(a));
    Ok(MonomialBasis {
        alpha: alpha.to_vec(),
        monomials,
    })
}

/// Rows are points, columns are monomials.
pub fn evaluation_matrix_at(
    field: &Field,
    points: &[TorusPoint],
    basis: &MonomialBasis,
) -> Vec<Vec<Elem>> {
    let ord = field.unit_order() as u64;
    points
        .iter()
        .map(|p| {
            basis
                .monomials
                .iter()
                .map(|m| {
                    let e: u64 = m
                        .iter()
                        .zip(&p.dlogs)
                        .map(|(&a, &b)| a as u64 * b as u64 % ord)
                        .sum();
                    field.eta_pow((e % ord) as i64)
                })
                .collect()
        })
        .collect()
}

/// Evaluation matrix at the canonical representatives of `Y_Q`.
pub fn evaluation_matrix(inst: &ToricInstance, basis: &MonomialBasis) -> Result<Vec<Vec<Elem>>> {
    Ok(evaluation_matrix_at(
        &inst.field,
        &representatives(inst)?,
        basis,
    ))
}

/// Reduced row echelon form; returns the nonzero rows.
pub fn row_echelon(field: &Field, rows: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut a: Vec<Vec<Elem>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = field.inv(a[rank][col]).expect("nonzero pivot");
        for x in a[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = field.sub(*x, field.mul(f, *y));
            }
        }
        rank += 1;
    }
    a.truncate(rank);
    a
}

pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    row_echelon(field, rows).len()
}

fn transpose(rows: &[Vec<Elem>], cols: usize) -> Vec<Vec<Elem>> {
    (0..cols)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect()
}

/// Smallest Hamming weight of a nonzero vector in the span of `basis`
/// (rows of equal length). Scalar multiples share a weight, so only
/// messages whose first nonzero entry is 1 are visited.
pub fn minimum_distance(field: &Field, basis: &[Vec<Elem>], guard: u64) -> Result<Option<u64>> {
    let k = basis.len();
    if k == 0 {
        return Ok(None);
    }
    let q = field.size() as u128;
    let size = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > guard as u128 {
        return Err(Error::guard(
            "codewords for minimum distance",
            size,
            guard as u128,
        ));
    }
    let len = basis[0].len();
    let mut best = u64::MAX;
    let mut msg = vec![0u32; k];
    let mut word = vec![Elem::ZERO; len];
    loop {
        let lead = msg.iter().position(|&x| x != 0);
        if matches!(lead, Some(i) if msg[i] == 1) {
            word.iter_mut().for_each(|w| *w = Elem::ZERO);
            for (a, row) in msg.iter().zip(basis) {
                if *a == 0 {
                    continue;
                }
                let a = field.elem(*a);
                for (w, x) in word.iter_mut().zip(row) {
                    *w = field.add(*w, field.mul(a, *x));
                }
            }
            let weight = word.iter().filter(|w| !w.is_zero()).count() as u64;
            best = best.min(weight);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(Some(best));
            }
            i -= 1;
            msg[i] += 1;
            if msg[i] < q as u32 {
                break;
            }
            msg[i] = 0;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Code {
    pub length: u64,
    pub dimension: u64,
    pub distance: Option<u64>,
    pub monomials: MonomialBasis,
    /// `N x M` evaluation matrix; its rank is `dimension`.
    pub generator_matrix: Vec<Vec<Elem>>,
}

/// Parameters of the code from evaluating `monomials` at `points`.
pub fn code_params_at(
    inst: &ToricInstance,
    points: &[TorusPoint],
    monomials: MonomialBasis,
    want_distance: bool,
) -> Result<Code> {
    let field = &inst.field;
    let matrix = evaluation_matrix_at(field, points, &monomials);
    let span = row_echelon(field, &transpose(&matrix, monomials.len()));
    let distance = if want_distance {
        minimum_distance(field, &span, inst.guards.distance)?
    } else {
        None
    };
    Ok(Code {
        length: points.len() as u64,
        dimension: span.len() as u64,
        distance,
        monomials,
        generator_matrix: matrix,
    })
}

pub fn code_params(inst: &ToricInstance, alpha: &[BigInt], want_distance: bool) -> Result<Code> {
    let monomials = monomials_of_degree(inst, alpha)?;
    code_params_at(inst, &representatives(inst)?, monomials, want_distance)
}

/// `dim (S / I)_alpha`: the monomials of degree `alpha` outside the initial
/// ideal of `ideal_gens`.
pub fn hilbert_function(
    inst: &ToricInstance,
    ideal_gens: &[Polynomial],
    alpha: &[BigInt],
) -> Result<u64> {
    let ring = ambient_ring(inst);
    let gb = buchberger(&ring, ideal_gens)?;
    let leads = gb.leading_exponents();
    let basis = monomials_of_degree(inst, alpha)?;
    Ok(basis
        .monomials
        .iter()
        .filter(|m| !leads.iter().any(|l| divides(l, m)))
        .count() as u64)
}

/// Parses a degree such as `-5,1`.
pub fn parse_degree(text: &str) -> Result<Vec<BigInt>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("bad degree entry {t:?}")))
        })
        .collect()
}

/// Whether every entry is zero.
pub fn is_zero_degree(alpha: &[BigInt]) -> bool {
    alpha.iter().all(Zero::is_zero)
}
