//! Exact Fourier–Motzkin elimination over the rationals.
//!
//! Systems are `A c >= b` with integer data. Only tiny dimensions occur here
//! (the torus dimension), so the quadratic blow-up of each elimination step
//! is irrelevant.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::intlat::Matrix;
use crate::scalar::Int;

#[derive(Clone, PartialEq, Eq, Debug)]
struct Ineq<T: Int> {
    coeffs: Vec<Ratio<T>>,
    rhs: Ratio<T>,
}

impl<T: Int> Ineq<T> {
    /// Scales so that the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let s = lead.abs();
            for c in &mut self.coeffs {
                *c = c.clone() / s.clone();
            }
            self.rhs = self.rhs / s;
        }
        self
    }
}

/// Per-coordinate rational bounds `(lower, upper)` of `{c : A c >= b}`;
/// `None` for an infeasible system. A missing side means unbounded.
pub type Bounds<T> = Vec<(Option<Ratio<T>>, Option<Ratio<T>>)>;

pub fn coordinate_bounds<T: Int>(a: &Matrix<T>, b: &[T]) -> Option<Bounds<T>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let system: Vec<Ineq<T>> = (0..a.rows())
        .map(|i| Ineq {
            coeffs: (0..n)
                .map(|j| Ratio::from_integer(a[(i, j)].clone()))
                .collect(),
            rhs: Ratio::from_integer(b[i].clone()),
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for keep in 0..n {
        let mut sys = system.clone();
        for var in (0..n).filter(|&v| v != keep) {
            sys = eliminate(sys, var)?;
        }
        let mut lo: Option<Ratio<T>> = None;
        let mut hi: Option<Ratio<T>> = None;
        for ineq in &sys {
            let c = &ineq.coeffs[keep];
            if c.is_zero() {
                if ineq.rhs.is_positive() {
                    return None;
                }
                continue;
            }
            let bound = ineq.rhs.clone() / c.clone();
            if c.is_positive() {
                lo = Some(match lo {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                hi = Some(match hi {
                    Some(h) if h <= bound => h,
                    _ => bound,
                });
            }
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                return None;
            }
        }
        out.push((lo, hi));
    }
    Some(out)
}

fn eliminate<T: Int>(sys: Vec<Ineq<T>>, var: usize) -> Option<Vec<Ineq<T>>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut rest = Vec::new();
    for ineq in sys {
        let c = ineq.coeffs[var].clone();
        if c.is_positive() {
            pos.push(ineq);
        } else if c.is_negative() {
            neg.push(ineq);
        } else if ineq.coeffs.iter().all(Zero::is_zero) {
            if ineq.rhs.is_positive() {
                return None;
            }
        } else {
            rest.push(ineq);
        }
    }
    for p in &pos {
        for q in &neg {
            let cp = p.coeffs[var].clone();
            let cq = -q.coeffs[var].clone();
            let coeffs: Vec<Ratio<T>> = p
                .coeffs
                .iter()
                .zip(&q.coeffs)
                .map(|(x, y)| x.clone() * cq.clone() + y.clone() * cp.clone())
                .collect();
            let rhs = p.rhs.clone() * cq + q.rhs.clone() * cp;
            if coeffs.iter().all(Zero::is_zero) {
                if rhs.is_positive() {
                    return None;
                }
                continue;
            }
            rest.push(Ineq { coeffs, rhs }.normalized());
        }
    }
    let mut seen = Vec::with_capacity(rest.len());
    for ineq in rest.into_iter().map(Ineq::normalized) {
        if !seen.contains(&ineq) {
            seen.push(ineq);
        }
    }
    Some(seen)
}

/// True iff `{c in R^n : A c >= 0} = {0}`.
pub fn cone_is_trivial<T: Int>(a: &Matrix<T>) -> bool {
    let zeros = vec![T::zero(); a.rows()];
    match coordinate_bounds(a, &zeros) {
        Some(bounds) => bounds
            .iter()
            .all(|(lo, hi)| matches!((lo, hi), (Some(l), Some(h)) if l.is_zero() && h.is_zero())),
        None => unreachable!("a homogeneous system always contains 0"),
    }
}

/// Smallest integer `>= x`.
pub fn ceil<T: Int>(x: &Ratio<T>) -> T {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    if r.is_zero() {
        q
    } else {
        q + T::one()
    }
}

/// Largest integer `<= x`.
pub fn floor<T: Int>(x: &Ratio<T>) -> T {
    x.numer().div_floor(x.denom())
}
