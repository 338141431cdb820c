//! Exact linear algebra over the rational-function field `Q(t)`.
//!
//! Rows are cleared to Laurent-polynomial entries and brought to row echelon
//! form by fraction-free (Bareiss) elimination, whose divisions are exact in
//! the polynomial ring; nullspace vectors are then recovered by back
//! substitution over the field.

use crate::coeff::{TPoly, TRat};

/// Multiplies each row by the least common multiple of its denominators.
fn clear_row(row: &[TRat]) -> Vec<TPoly> {
    let mut lcm = TPoly::one();
    for x in row {
        let den = x.den();
        let g = TPoly::gcd(&lcm, den);
        lcm = &lcm * &den.div_exact(&g).expect("gcd divides");
    }
    row.iter()
        .map(|x| {
            let cofactor = lcm.div_exact(x.den()).expect("lcm of denominators");
            x.num() * &cofactor
        })
        .collect()
}

struct Echelon {
    mat: Vec<Vec<TPoly>>,
    pivot_cols: Vec<usize>,
}

/// Fraction-free row echelon form with column pivoting.
fn bareiss(mut mat: Vec<Vec<TPoly>>, ncols: usize) -> Echelon {
    let nrows = mat.len();
    let mut pivot_cols = Vec::new();
    let mut prev = TPoly::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let (top, rest) = mat.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() && row[c + 1..].iter().all(|x| x.is_zero()) {
                continue;
            }
            for j in (c + 1)..ncols {
                let num = &(&pivot_row[c] * &row[j]) - &(&row[c] * &pivot_row[j]);
                row[j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[c] = TPoly::zero();
        }
        prev = mat[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    Echelon { mat, pivot_cols }
}

/// Basis of the right nullspace of the matrix with the given rows (entries
/// in `Q(t)`), one vector per free column, in column order.
pub fn nullspace(rows: &[Vec<TRat>], ncols: usize) -> Vec<Vec<TRat>> {
    let cleared: Vec<Vec<TPoly>> = rows
        .iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .map(|row| clear_row(row))
        .collect();
    let ech = bareiss(cleared, ncols);

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &ech.pivot_cols {
            v[c] = true;
        }
        v
    };

    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![TRat::zero(); ncols];
        v[free] = TRat::one();
        for (row_idx, &pc) in ech.pivot_cols.iter().enumerate().rev() {
            let row = &ech.mat[row_idx];
            let mut acc = TRat::zero();
            for j in (pc + 1)..ncols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    acc = &acc + &(&TRat::from_poly(row[j].clone()) * &v[j]);
                }
            }
            if !acc.is_zero() {
                v[pc] = (-acc)
                    .div(&TRat::from_poly(row[pc].clone()))
                    .expect("pivot nonzero");
            }
        }
        basis.push(v);
    }
    basis
}

/// Scales a vector over `Q(t)` to Laurent-polynomial entries with no common
/// factor, content shifted to minimal exponent 0, and the first nonzero
/// entry having a positive leading coefficient.
pub fn primitive_vector(v: &[TRat]) -> Vec<TPoly> {
    let cleared = clear_row(v);
    let mut content = TPoly::zero();
    for x in &cleared {
        content = TPoly::gcd(&content, x);
    }
    if content.is_zero() {
        return cleared;
    }
    let shift = cleared
        .iter()
        .filter_map(|x| x.min_exp())
        .min()
        .unwrap_or(0);
    let content = content.mul_t_pow(shift);
    let mut out: Vec<TPoly> = cleared
        .iter()
        .map(|x| x.div_exact(&content).expect("content divides"))
        .collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if num_traits::Signed::is_negative(&first.leading_coeff()) {
            for x in out.iter_mut() {
                *x = -&*x;
            }
        }
    }
    out
}

/// Whether `target` lies in the span of `basis` over `Q(t)`, by plain
/// Gaussian reduction in the field.
pub fn in_span(basis: &[Vec<TRat>], target: &[TRat]) -> bool {
    let mut rows: Vec<Vec<TRat>> = basis.to_vec();
    let mut t = target.to_vec();
    let ncols = t.len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let pivot = rows[r][c].clone();
        if !t[c].is_zero() {
            let f = t[c].div(&pivot).expect("pivot nonzero");
            for j in c..ncols {
                let delta = &f * &rows[r][j];
                t[j] = &t[j] - &delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
        // eliminate below to keep echelon structure
        let (top, rest) = rows.split_at_mut(r);
        let prow = &top[r - 1];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].div(&pivot).expect("pivot nonzero");
            for j in c..ncols {
                let delta = &f * &prow[j];
                row[j] = &row[j] - &delta;
            }
        }
    }
    t.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat_int, TPoly};

    fn t(k: i64) -> TRat {
        TRat::t_pow(k)
    }

    fn c(n: i64) -> TRat {
        TRat::from_rat(rat_int(n))
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        // single equation x + t y = 0 in 2 unknowns
        let rows = vec![vec![c(1), t(1)]];
        let ns = nullspace(&rows, 2);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            let lhs = &(&rows[0][0] * &v[0]) + &(&rows[0][1] * &v[1]);
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn nullspace_known_kernel() {
        // rows (1, t, 0), (0, 1, t): kernel spanned by (t^2, -t, 1)
        let rows = vec![vec![c(1), t(1), c(0)], vec![c(0), c(1), t(1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        let prim = primitive_vector(&ns[0]);
        assert_eq!(prim, vec![TPoly::t_pow(2), -&TPoly::t_pow(1), TPoly::one()]);
    }

    #[test]
    fn nullspace_annihilates_rows() {
        // a denser 3x5 system with rational-function entries
        let e = |num: &[(i64, i64)], den: &[(i64, i64)]| {
            TRat::new(
                TPoly::from_terms(num.iter().map(|&(k, v)| (k, rat_int(v)))),
                TPoly::from_terms(den.iter().map(|&(k, v)| (k, rat_int(v)))),
            )
            .unwrap()
        };
        let rows = vec![
            vec![
                e(&[(0, 1)], &[(0, 1)]),
                e(&[(2, 1), (-2, -1)], &[(1, 1)]),
                c(3),
                t(-2),
                c(0),
            ],
            vec![c(0), e(&[(1, 1)], &[(0, 1), (2, 1)]), t(4), c(1), c(2)],
            vec![c(1), c(1), c(1), c(1), c(1)],
        ];
        let ns = nullspace(&rows, 5);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &rows {
                let mut acc = TRat::zero();
                for (a, b) in row.iter().zip(v) {
                    acc = &acc + &(a * b);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn span_membership() {
        let b1 = vec![c(1), t(1), c(0)];
        let b2 = vec![c(0), c(1), t(-1)];
        let mut combo = Vec::new();
        for j in 0..3 {
            combo.push(&(&t(2) * &b1[j]) + &(&c(-3) * &b2[j]));
        }
        assert!(in_span(&[b1.clone(), b2.clone()], &combo));
        assert!(!in_span(&[b1, b2], &[c(0), c(0), c(1)]));
    }
}
