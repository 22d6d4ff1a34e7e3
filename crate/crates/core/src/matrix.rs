//! Division-free characteristic polynomials of small exact matrices
//! (Berkowitz's method, O(n⁴) ring operations).

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{rat, IntPoly, Int, Rat};

/// Characteristic polynomial det(xI − A) of an integer matrix, exact.
pub(crate) fn charpoly_int(a: &[Vec<Int>]) -> IntPoly {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    // Descending coefficients of the charpoly of the leading principal
    // submatrix processed so far; starts at the empty matrix.
    let mut p: Vec<Int> = vec![Int::one()];
    for i in 0..n {
        // First column of the Toeplitz step matrix:
        // [1, −a_ii, −R·S, −R·A_{i−1}·S, −R·A_{i−1}²·S, …]
        let mut col = Vec::with_capacity(i + 2);
        col.push(Int::one());
        col.push(-a[i][i].clone());
        let mut w: Vec<Int> = (0..i).map(|r| a[r][i].clone()).collect();
        for step in 2..=(i + 1) {
            let dot: Int = (0..i).map(|c| &a[i][c] * &w[c]).sum();
            col.push(-dot);
            if step < i + 1 {
                w = (0..i)
                    .map(|r| (0..i).map(|c| &a[r][c] * &w[c]).sum())
                    .collect();
            }
        }
        // Lower-triangular Toeplitz product = convolution truncated to the
        // new length i + 2.
        let mut next = vec![Int::zero(); p.len() + 1];
        for (j, cj) in col.iter().enumerate() {
            for (m, pm) in p.iter().enumerate() {
                if j + m < next.len() {
                    next[j + m] += cj * pm;
                }
            }
        }
        p = next;
    }
    p.reverse();
    IntPoly::from_coeffs(p)
}

/// Integer polynomial whose root multiset is exactly the eigenvalue multiset
/// of a rational matrix: denominators are cleared by the substitution
/// y = D·x, so the result is D^n·charpoly(x) up to a positive constant.
pub(crate) fn eigen_poly_rat(a: &[Vec<Rat>]) -> IntPoly {
    let mut d = Int::one();
    for row in a {
        for x in row {
            d = d.lcm(x.denom());
        }
    }
    let scaled: Vec<Vec<Int>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x * rat(d.clone())).to_integer())
                .collect()
        })
        .collect();
    let chi = charpoly_int(&scaled);
    let dx = IntPoly::from_coeffs(vec![Int::zero(), d]);
    chi.compose(&dx).primitive_positive()
}
