use super::Matrix;
use crate::scalar::Int;

/// Column Hermite normal form: returns `(H, U)` with `H = M·U`, `U` unimodular.
///
/// `H` is in column echelon form: the nonzero columns come first, each has a
/// positive pivot strictly below the pivot of the previous column, and every
/// entry to the left of a pivot lies in `[0, pivot)`. Trailing columns are
/// zero, and the matching columns of `U` span the integer kernel of `M`.
pub fn hnf<T: Int>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let mut h = m.clone();
    let mut u = Matrix::identity(m.cols());
    let cols = m.cols();
    let mut pc = 0;
    for row in 0..m.rows() {
        if pc == cols {
            break;
        }
        for j in pc + 1..cols {
            if h[(row, j)].is_zero() {
                continue;
            }
            if h[(row, pc)].is_zero() {
                h.swap_cols(pc, j);
                u.swap_cols(pc, j);
                continue;
            }
            let a = h[(row, pc)].clone();
            let b = h[(row, j)].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let z = -(b / g.clone());
            let w = a / g;
            h.combine_cols(pc, j, [&x, &y, &z, &w]);
            u.combine_cols(pc, j, [&x, &y, &z, &w]);
        }
        if h[(row, pc)].is_zero() {
            continue;
        }
        if h[(row, pc)].is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let pivot = h[(row, pc)].clone();
        for j in 0..pc {
            let f = h[(row, j)].div_floor(&pivot);
            if !f.is_zero() {
                let k = -f;
                h.add_col_multiple(j, pc, &k);
                u.add_col_multiple(j, pc, &k);
            }
        }
        pc += 1;
    }
    (h, u)
}

/// Number of nonzero leading columns of a column-HNF matrix.
pub(crate) fn hnf_rank<T: Int>(h: &Matrix<T>) -> usize {
    (0..h.cols())
        .take_while(|&j| (0..h.rows()).any(|i| !h[(i, j)].is_zero()))
        .count()
}

/// Smith normal form: returns `(D, P, K)` with `P·M·K = D`.
///
/// `D` is diagonal with nonnegative entries `d_1 | d_2 | ...`; `P` and `K`
/// are unimodular. Pivots are chosen by minimal absolute value.
pub fn snf<T: Int>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut p = Matrix::identity(rows);
    let mut k = Matrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = &d[(i, j)];
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| v.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (d, p, k);
            };
            d.swap_rows(t, bi);
            p.swap_rows(t, bi);
            d.swap_cols(t, bj);
            k.swap_cols(t, bj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let f = d[(i, t)].div_floor(&pivot);
                if !f.is_zero() {
                    let f = -f;
                    d.add_row_multiple(i, t, &f);
                    p.add_row_multiple(i, t, &f);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let f = d[(t, j)].div_floor(&pivot);
                if !f.is_zero() {
                    let f = -f;
                    d.add_col_multiple(j, t, &f);
                    k.add_col_multiple(j, t, &f);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &T::one());
                    p.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    (d, p, k)
}

/// Diagonal of a Smith form, `min(rows, cols)` entries.
pub fn smith_invariants<T: Int>(m: &Matrix<T>) -> Vec<T> {
    let (d, _, _) = snf(m);
    (0..m.rows().min(m.cols()))
        .map(|i| d[(i, i)].clone())
        .collect()
}

/// Z-basis (as columns) of `{v : M v = 0}`, in column-HNF canonical form.
/// Has zero columns when the kernel is trivial.
pub fn kernel_basis<T: Int>(m: &Matrix<T>) -> Matrix<T> {
    let (h, u) = hnf(m);
    let rank = hnf_rank(&h);
    let idx: Vec<usize> = (rank..m.cols()).collect();
    let raw = u.select_cols(&idx);
    let (kh, _) = hnf(&raw);
    let krank = hnf_rank(&kh);
    kh.select_cols(&(0..krank).collect::<Vec<_>>())
}

/// Some integer solution of `M x = b`, if one exists.
pub fn solve<T: Int>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows(), b.len());
    let (h, u) = hnf(m);
    let rank = hnf_rank(&h);
    let mut residual = b.to_vec();
    let mut y = vec![T::zero(); m.cols()];
    let mut row = 0;
    for (j, yj) in y.iter_mut().enumerate().take(rank) {
        while h[(row, j)].is_zero() {
            if !residual[row].is_zero() {
                return None;
            }
            row += 1;
        }
        let (c, rem) = residual[row].div_rem(&h[(row, j)]);
        if !rem.is_zero() {
            return None;
        }
        for (i, r) in residual.iter_mut().enumerate().skip(row) {
            *r = r.clone() - c.clone() * h[(i, j)].clone();
        }
        *yj = c;
        row += 1;
    }
    if residual.iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(u.mul_vec(&y))
}
