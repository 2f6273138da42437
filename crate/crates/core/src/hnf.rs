//! Row-style Hermite normal form for full-rank integer lattices.
//!
//! Basis vectors are the rows of a lower-triangular matrix with positive
//! diagonal; the entry at (i, j) for i > j is reduced modulo the diagonal
//! entry of column j. This representative is unique per lattice.

use num::{BigInt, Signed, Zero};

/// Lower-triangular row HNF of the lattice spanned by `gens` in Z^n.
/// Returns `None` when the span has rank < n.
pub fn row_hnf(gens: &[Vec<BigInt>], n: usize) -> Option<Vec<Vec<BigInt>>> {
    let mut active: Vec<Vec<BigInt>> = gens
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut rows: Vec<Option<Vec<BigInt>>> = vec![None; n];

    // Extract pivots right to left so each pivot row has exact zeros in
    // all later columns.
    for col in (0..n).rev() {
        loop {
            let mut nonzero: Vec<usize> = (0..active.len())
                .filter(|&i| !active[i][col].is_zero())
                .collect();
            if nonzero.is_empty() {
                return None;
            }
            if nonzero.len() == 1 {
                break;
            }
            nonzero.sort_by(|&i, &j| active[i][col].abs().cmp(&active[j][col].abs()));
            let pivot = nonzero[0];
            let pivot_row = active[pivot].clone();
            for &i in &nonzero[1..] {
                let q = div_floor(&active[i][col], &pivot_row[col]);
                for c in 0..n {
                    let s = &pivot_row[c] * &q;
                    active[i][c] = &active[i][c] - s;
                }
            }
            active.retain(|v| v.iter().any(|x| !x.is_zero()));
        }
        let idx = (0..active.len()).find(|&i| !active[i][col].is_zero()).unwrap();
        let mut row = active.swap_remove(idx);
        if row[col].is_negative() {
            for c in 0..n {
                row[c] = -row[c].clone();
            }
        }
        rows[col] = Some(row);
    }

    let mut h: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.unwrap()).collect();
    // Reduce sub-diagonal entries; go right to left so finished columns stay put.
    for i in 0..n {
        for j in (0..i).rev() {
            let q = div_floor(&h[i][j], &h[j][j]);
            if !q.is_zero() {
                for c in 0..=j {
                    let s = &h[j][c] * &q;
                    h[i][c] = &h[i][c] - s;
                }
            }
        }
    }
    Some(h)
}

/// Floor division on BigInt (quotient rounds toward negative infinity),
/// so remainders land in [0, |b|).
pub fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num::Integer::div_rem(a, b);
    if !r.is_zero() && (r.is_negative() != b.is_negative()) {
        q - 1
    } else {
        q
    }
}

/// Expresses `v` in the row basis `h` (lower-triangular, full rank) over Z.
/// Returns the coefficient vector, or `None` when `v` is not in the lattice.
pub fn solve_in_basis(h: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.len();
    let mut rem = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); n];
    for col in (0..n).rev() {
        let (q, r) = num::Integer::div_rem(&rem[col], &h[col][col]);
        if !r.is_zero() {
            return None;
        }
        for c in 0..=col {
            let s = &h[col][c] * &q;
            rem[c] = &rem[c] - s;
        }
        coeffs[col] = q;
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_lattice() {
        let h = row_hnf(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap();
        assert_eq!(h, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn rank_deficient() {
        assert!(row_hnf(&[v(&[2, 0])], 2).is_none());
        assert!(row_hnf(&[v(&[1, 2]), v(&[2, 4])], 2).is_none());
    }

    #[test]
    fn reduces_to_canonical() {
        // (2,0),(0,1),(1,0),(0,2) spans Z^2
        let h = row_hnf(&[v(&[2, 0]), v(&[0, 1]), v(&[1, 0]), v(&[0, 2])], 2).unwrap();
        assert_eq!(h, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn negative_generators() {
        let h = row_hnf(&[v(&[-2, 0]), v(&[1, -3])], 2).unwrap();
        assert_eq!(h[0], v(&[2, 0]));
        assert_eq!(h[1][1], BigInt::from(3));
        // sub-diagonal reduced mod 2
        assert!(h[1][0] >= BigInt::from(0) && h[1][0] < BigInt::from(2));
    }

    #[test]
    fn membership() {
        let h = row_hnf(&[v(&[2, 0]), v(&[1, 3])], 2).unwrap();
        assert!(solve_in_basis(&h, &v(&[3, 3])).is_some());
        assert!(solve_in_basis(&h, &v(&[1, 0])).is_none());
    }

    #[test]
    fn dim4_diagonal() {
        let gens = vec![v(&[2, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 2, 0]), v(&[0, 0, 0, 1])];
        let h = row_hnf(&gens, 4).unwrap();
        assert_eq!(h, gens);
    }
}
