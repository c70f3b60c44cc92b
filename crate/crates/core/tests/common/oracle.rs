//! Independent reference computations for the exact-arithmetic layers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use toricode::gfq::Field;
use toricode::intlat::{hnf, kernel_basis, smith_invariants, snf, Lattice, Matrix};
use toricode::scalar::Int;
use toricode::IntMatrix;

pub type Rows = Vec<Vec<i64>>;

/// All `rows x cols` matrices with entries in `[-b, b]`.
pub fn all_matrices(rows: usize, cols: usize, b: i64) -> impl Iterator<Item = Rows> {
    let cells = rows * cols;
    let base = (2 * b + 1) as u64;
    (0..base.pow(cells as u32)).map(move |mut code| {
        let mut flat = Vec::with_capacity(cells);
        for _ in 0..cells {
            flat.push((code % base) as i64 - b);
            code /= base;
        }
        flat.chunks(cols.max(1))
            .map(<[i64]>::to_vec)
            .collect::<Rows>()
    })
}

fn to_i64_rows<T: Int>(m: &Matrix<T>) -> Rows {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect())
        .collect()
}

/// Column Hermite form by repeated smallest-remainder column reduction.
pub fn hnf_oracle(m: &Rows, cols: usize) -> Rows {
    let mut a = m.clone();
    let rows = a.len();
    let mut piv = 0;
    let col_op = |a: &mut Rows, dst: usize, src: usize, k: i64| {
        for row in a.iter_mut() {
            row[dst] -= k * row[src];
        }
    };
    for i in 0..rows {
        if piv == cols {
            break;
        }
        loop {
            let best = (piv..cols)
                .filter(|&j| a[i][j] != 0)
                .min_by_key(|&j| (a[i][j].abs(), j));
            let Some(j) = best else { break };
            for row in a.iter_mut() {
                row.swap(piv, j);
            }
            let mut done = true;
            for j in piv + 1..cols {
                if a[i][j] != 0 {
                    let k = a[i][j] / a[i][piv];
                    col_op(&mut a, j, piv, k);
                    if a[i][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[i][piv] == 0 {
            continue;
        }
        if a[i][piv] < 0 {
            for row in a.iter_mut() {
                row[piv] = -row[piv];
            }
        }
        let p = a[i][piv];
        for j in 0..piv {
            let k = a[i][j].div_euclid(p);
            col_op(&mut a, j, piv, k);
        }
        piv += 1;
    }
    a
}

fn minor(m: &Rows, rows: &[usize], cols: &[usize]) -> i64 {
    match rows.len() {
        1 => m[rows[0]][cols[0]],
        k => (0..k)
            .map(|j| {
                let sub: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, &c)| c)
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[rows[0]][cols[j]] * minor(m, &rows[1..], &sub)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Smith invariants from determinantal divisors: `d_k = D_k / D_{k-1}` with
/// `D_k` the gcd of all `k x k` minors.
pub fn smith_oracle(m: &Rows, cols: usize) -> Vec<i64> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = 1i64;
    for k in 1..=rows.min(cols) {
        let mut g = 0i64;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                g = g.gcd(&minor(m, &rs, &cs));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat_n(0, rows.min(cols) - out.len()));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Checks `hnf` and `snf` on one matrix; returns a description of the first
/// disagreement.
pub fn check_normal_forms<T: Int>(m: &Rows, cols: usize) -> Result<(), String> {
    let a = Matrix::<T>::from_i64_rows(m, cols);
    let (h, u) = hnf(&a);
    if &a * &u != h {
        return Err(format!("H != M U for {m:?}"));
    }
    if !u.determinant().abs().is_one() {
        return Err(format!("U not unimodular for {m:?}"));
    }
    if to_i64_rows(&h) != hnf_oracle(m, cols) {
        return Err(format!(
            "HNF of {m:?}: got {:?}, oracle {:?}",
            to_i64_rows(&h),
            hnf_oracle(m, cols)
        ));
    }
    let (d, p, k) = snf(&a);
    if &(&p * &a) * &k != d {
        return Err(format!("P M K != D for {m:?}"));
    }
    if !p.determinant().abs().is_one() || !k.determinant().abs().is_one() {
        return Err(format!("SNF transforms not unimodular for {m:?}"));
    }
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j && !d[(i, j)].is_zero() {
                return Err(format!("SNF not diagonal for {m:?}"));
            }
        }
    }
    let inv: Vec<i64> = smith_invariants(&a)
        .iter()
        .map(|x| x.to_i64().unwrap())
        .collect();
    if inv != smith_oracle(m, cols) {
        return Err(format!(
            "Smith invariants of {m:?}: got {inv:?}, oracle {:?}",
            smith_oracle(m, cols)
        ));
    }
    Ok(())
}

/// Kernel basis against exhaustive membership of `[-b, b]^cols`.
pub fn check_kernel(m: &Rows, cols: usize, b: i64) -> Result<(), String> {
    let a = IntMatrix::from_i64_rows(m, cols);
    let k = kernel_basis(&a);
    if !(&a * &k).is_zero() {
        return Err(format!("kernel basis of {m:?} is not in the kernel"));
    }
    let rank_m = smith_oracle(m, cols).iter().filter(|&&x| x != 0).count();
    if k.cols() != cols - rank_m {
        return Err(format!(
            "kernel of {m:?} has rank {}, expected {}",
            k.cols(),
            cols - rank_m
        ));
    }
    let lat = Lattice::image(&k);
    for v in all_matrices(1, cols, b) {
        let v: Vec<BigInt> = v[0].iter().map(|&x| BigInt::from(x)).collect();
        if a.mul_vec(&v).iter().all(Zero::is_zero) && !lat.contains(&v) {
            return Err(format!("kernel of {m:?} misses {v:?}"));
        }
    }
    Ok(())
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * k];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - c) * m % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

fn digits(h: u32, p: u32, k: usize) -> Vec<u32> {
    let mut h = h;
    (0..k)
        .map(|_| {
            let d = h % p;
            h /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Compares every sum, product, quotient and power in GF(q) with direct
/// polynomial arithmetic modulo the field's defining polynomial, and checks
/// that polynomial is irreducible with the generator of full order.
pub fn check_field(q: u64) -> Result<(), String> {
    let f = Field::new(q).map_err(|e| e.to_string())?;
    let p = f.characteristic();
    let modulus = f.modulus().to_vec();
    let k = modulus.len() - 1;
    if k as u32 != f.degree() || p.pow(k as u32) as u64 != q || modulus[k] != 1 {
        return Err(format!("GF({q}): inconsistent modulus {modulus:?}"));
    }
    let mul = |a: u32, b: u32| {
        undigits(
            &poly_mul_mod(&digits(a, p, k), &digits(b, p, k), &modulus, p),
            p,
        )
    };
    let add = |a: u32, b: u32| {
        let s: Vec<u32> = digits(a, p, k)
            .iter()
            .zip(digits(b, p, k))
            .map(|(x, y)| (x + y) % p)
            .collect();
        undigits(&s, p)
    };
    // irreducible: no zero divisors
    for a in 1..f.size() {
        for b in 1..f.size() {
            if mul(a, b) == 0 {
                return Err(format!("GF({q}): modulus {modulus:?} is reducible"));
            }
        }
    }
    let eta = f.eta().handle();
    let mut x = 1;
    for i in 0..f.unit_order() {
        if i > 0 && x == 1 {
            return Err(format!("GF({q}): generator has order {i}"));
        }
        if f.dlog(f.elem(x)).unwrap() != i || f.eta_pow(i as i64).handle() != x {
            return Err(format!("GF({q}): log table wrong at eta^{i}"));
        }
        x = mul(x, eta);
    }
    for a in 0..f.size() {
        let ea = f.elem(a);
        for b in 0..f.size() {
            let eb = f.elem(b);
            if f.add(ea, eb).handle() != add(a, b) {
                return Err(format!("GF({q}): {a} + {b}"));
            }
            if f.mul(ea, eb).handle() != mul(a, b) {
                return Err(format!("GF({q}): {a} * {b}"));
            }
            if f.add(f.sub(ea, eb), eb) != ea {
                return Err(format!("GF({q}): ({a} - {b}) + {b}"));
            }
            if b != 0 && mul(f.div(ea, eb).unwrap().handle(), b) != a {
                return Err(format!("GF({q}): {a} / {b}"));
            }
        }
        let mut pw = 1;
        for e in 0..5 {
            if f.pow(ea, e).unwrap().handle() != pw {
                return Err(format!("GF({q}): {a}^{e}"));
            }
            pw = mul(pw, a);
        }
    }
    Ok(())
}

pub const SMALL_FIELDS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// Normal forms on all matrices with entries in `[-2, 2]` up to 3x3.
/// Returns the number of matrices checked.
pub fn normal_form_sweep<T: Int>() -> Result<usize, String> {
    let mut total = 0;
    for r in 1..=3 {
        for c in 1..=3 {
            for m in all_matrices(r, c, 2) {
                check_normal_forms::<T>(&m, c)?;
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Kernels of all 2x3 matrices in `[-2, 2]` and all 1x3 ones, against the
/// box `[-3, 3]^3`.
pub fn kernel_sweep() -> Result<usize, String> {
    let mut total = 0;
    for (r, c) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)] {
        let bound = if r * c >= 9 { 1 } else { 2 };
        for m in all_matrices(r, c, bound) {
            check_kernel(&m, c, 3)?;
            total += 1;
        }
    }
    Ok(total)
}
