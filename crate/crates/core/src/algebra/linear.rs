//! Exact Gaussian elimination over the Gaussian rationals.

use crate::exactnum::GaussRational;

/// Row-reduce `rows` in place to reduced row echelon form and return the
/// pivot columns (their count is the rank).
pub(crate) fn rref(rows: &mut [Vec<GaussRational>]) -> Vec<usize> {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        for r in 0..n_rows {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let (pivot_row, other) = if r < rank {
                let (lo, hi) = rows.split_at_mut(rank);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = rows.split_at_mut(r);
                (&lo[rank], &mut hi[0])
            };
            for (o, pv) in other.iter_mut().zip(pivot_row) {
                if !pv.is_zero() {
                    *o = &*o - &(&factor * pv);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Inverse of a square matrix, or `None` when singular.
pub(crate) fn invert(m: &[Vec<GaussRational>]) -> Option<Vec<Vec<GaussRational>>> {
    let k = m.len();
    let mut aug: Vec<Vec<GaussRational>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..k).map(|c| {
                if c == r {
                    GaussRational::one()
                } else {
                    GaussRational::zero()
                }
            }));
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}
