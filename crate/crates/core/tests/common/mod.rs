//! Instance catalog and seeded random instances shared by the integration
//! suites.
#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toricode::gfq::Field;
use toricode::toric::{Guards, ToricInstance};
use toricode::IntMatrix;

pub const FIELDS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

/// Complete fans with torsion-free class group, `n <= 2`, `r <= 4`.
pub fn fans() -> Vec<(&'static str, IntMatrix)> {
    let m = |rows: &[&[i64]], n: usize| IntMatrix::from_i64_rows(rows, n);
    vec![
        ("P1", m(&[&[1], &[-1]], 1)),
        ("P2", m(&[&[1, 0], &[0, 1], &[-1, -1]], 2)),
        ("P1xP1", m(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2)),
        ("H0", m(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], 2)),
        ("H1", m(&[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]], 2)),
        ("H2", m(&[&[1, 0], &[0, 1], &[-1, 2], &[0, -1]], 2)),
        ("H3", m(&[&[1, 0], &[0, 1], &[-1, 3], &[0, -1]], 2)),
        ("P112", m(&[&[1, 0], &[0, 1], &[-1, -2]], 2)),
    ]
}

pub fn field(q: u64) -> Arc<Field> {
    Arc::new(Field::new(q).unwrap())
}

pub fn instance(q: u64, phi: &IntMatrix, q_mat: IntMatrix) -> ToricInstance {
    ToricInstance::new(field(q), phi.clone(), None, q_mat, Guards::default()).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_i64_rows(&data, cols)
}

#[derive(Clone, Debug)]
pub struct Case {
    pub label: String,
    pub inst: ToricInstance,
}

/// `count` instances with random fan, field, `s in {1, 2}` and `Q` entries
/// in `[-3, 3]`.
pub fn random_cases(rng: &mut ChaCha8Rng, count: usize) -> Vec<Case> {
    let fans = fans();
    (0..count)
        .map(|i| {
            let (name, phi) = &fans[rng.gen_range(0..fans.len())];
            let q = FIELDS[rng.gen_range(0..FIELDS.len())];
            let s = rng.gen_range(1..=2);
            let q_mat = random_matrix(rng, s, phi.rows(), 3);
            Case {
                label: format!("#{i} {name} q={q} Q={q_mat}"),
                inst: instance(q, phi, q_mat),
            }
        })
        .collect()
}

/// Instances with square diagonal `Q`, entries in `[-3, 3]`.
pub fn diagonal_cases(rng: &mut ChaCha8Rng, count: usize) -> Vec<Case> {
    let fans = fans();
    (0..count)
        .map(|i| {
            let (name, phi) = &fans[rng.gen_range(0..fans.len())];
            let q = FIELDS[rng.gen_range(0..FIELDS.len())];
            let diag: Vec<BigInt> = (0..phi.rows())
                .map(|_| BigInt::from(rng.gen_range(-3..=3)))
                .collect();
            let q_mat = IntMatrix::diagonal(&diag);
            Case {
                label: format!("diag #{i} {name} q={q} Q={q_mat}"),
                inst: instance(q, phi, q_mat),
            }
        })
        .collect()
}

/// A few degrees per instance: degrees of random small monomials plus
/// random points of a small box.
pub fn degrees(rng: &mut ChaCha8Rng, inst: &ToricInstance, count: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for _ in 0..20 * count {
        if out.len() == count {
            break;
        }
        let alpha = if out.len().is_multiple_of(2) {
            let m: Vec<BigInt> = (0..inst.r)
                .map(|_| BigInt::from(rng.gen_range(0..=2)))
                .collect();
            inst.beta.mul_vec(&m)
        } else {
            (0..inst.d)
                .map(|_| BigInt::from(rng.gen_range(-2..=2)))
                .collect()
        };
        if !out.contains(&alpha) {
            out.push(alpha);
        }
        if inst.d == 0 {
            break;
        }
    }
    out
}
