//! Phase-I simplex over exact rationals: feasibility of Ax = b, x >= 0.
//!
//! Dimensions here are tiny (points in at most ~10 coordinates, a few dozen
//! generators), so a dense tableau with `BigRational` pivots and Bland's rule
//! is both exact and fast.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Find x >= 0 with Ax = b, or None if infeasible.
///
/// `rows` are the rows of A; all rows must share the length of the returned
/// solution.
pub fn solve_feasible(rows: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = rows.len();
    assert_eq!(m, b.len(), "row/rhs count mismatch");
    if m == 0 {
        return Some(Vec::new());
    }
    let n = rows[0].len();

    // Tableau columns: n structural + m artificial, last entry the rhs.
    // Rows are normalized to nonnegative rhs so artificials start feasible.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = b[i].is_negative();
        let mut r: Vec<BigRational> = Vec::with_capacity(n + m + 1);
        for a in row {
            r.push(if flip { -a } else { a.clone() });
        }
        for j in 0..m {
            r.push(if j == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        r.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase-I objective: minimize the sum of artificials. Expressed through
    // the nonbasic variables, the objective row is the sum of all tableau
    // rows (artificials have zero net coefficient there by construction).
    let width = n + m + 1;
    let mut obj = vec![BigRational::zero(); width];
    for r in &t {
        for (o, a) in obj.iter_mut().zip(r) {
            *o += a;
        }
    }
    for j in n..n + m {
        obj[j] = BigRational::zero();
    }

    loop {
        // Bland: smallest-index column that decreases the objective.
        let Some(enter) = (0..n + m).find(|&j| !basis.contains(&j) && obj[j].is_positive())
        else {
            break;
        };
        // Ratio test, Bland tie-break on basic variable index.
        let mut pivot: Option<(usize, BigRational)> = None;
        for (i, r) in t.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width - 1] / &r[enter];
                match &pivot {
                    Some((pi, pr))
                        if *pr < ratio || (*pr == ratio && basis[*pi] < basis[i]) => {}
                    _ => pivot = Some((i, ratio)),
                }
            }
        }
        let Some((pi, _)) = pivot else {
            // Unbounded below is impossible for a sum of nonnegative
            // variables; reaching here means a logic error.
            unreachable!("phase-I objective unbounded");
        };
        let p = t[pi][enter].clone();
        for a in t[pi].iter_mut() {
            *a /= &p;
        }
        let prow = t[pi].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != pi && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (a, pa) in r.iter_mut().zip(&prow) {
                    *a -= &f * pa;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (a, pa) in obj.iter_mut().zip(&prow) {
                *a -= &f * pa;
            }
        }
        basis[pi] = enter;
    }

    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < n {
            x[bj] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

pub fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_feasible() {
        // x + y = 1, x - y = 0  ->  x = y = 1/2
        let rows = vec![vec![big(1), big(1)], vec![big(1), big(-1)]];
        let b = vec![big(1), big(0)];
        let x = solve_feasible(&rows, &b).unwrap();
        assert_eq!(x, vec![big(1) / big(2), big(1) / big(2)]);
    }

    #[test]
    fn infeasible() {
        // x = -1 with x >= 0
        let rows = vec![vec![big(1)]];
        let b = vec![big(-1)];
        assert!(solve_feasible(&rows, &b).is_none());
    }

    #[test]
    fn negative_rhs_normalization() {
        // -x = -3  ->  x = 3
        let rows = vec![vec![big(-1)]];
        let b = vec![big(-3)];
        let x = solve_feasible(&rows, &b).unwrap();
        assert_eq!(x, vec![big(3)]);
    }

    #[test]
    fn redundant_rows() {
        let rows = vec![vec![big(1), big(1)], vec![big(2), big(2)]];
        let b = vec![big(1), big(2)];
        assert!(solve_feasible(&rows, &b).is_some());
        let b_bad = vec![big(1), big(3)];
        assert!(solve_feasible(&rows, &b_bad).is_none());
    }
}
