//! The orthogonal polynomial family attached to k-regular graphs.
//!
//! F_i counts closed non-backtracking walk weights: F_0 = 1, F_1 = x,
//! F_2 = x² − k, and F_i = x·F_{i−1} − (k−1)·F_{i−2} afterwards. G_t is the
//! partial sum F_0 + … + F_t. The largest zeros of G and F steer both the
//! choice of the quotient-matrix depth and the positivity of the
//! linear-programming multipliers, so they are exposed here as exact
//! scalars.

use crate::error::{Error, Result};
use crate::exact::{largest_real_root, IntPoly, Scalar};

fn check_valency(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "valency k = {} is below 2; the polynomial family needs k ≥ 2",
            k
        )));
    }
    Ok(())
}

/// F_0 … F_t.
pub fn f_polys(k: u64, up_to: usize) -> Vec<IntPoly> {
    let mut fs = Vec::with_capacity(up_to + 1);
    fs.push(IntPoly::one());
    if up_to >= 1 {
        fs.push(IntPoly::x());
    }
    if up_to >= 2 {
        fs.push(IntPoly::from_i64(&[-(k as i64), 0, 1]));
    }
    for i in 3..=up_to {
        let prev = fs[i - 1].mul_x();
        let carry = fs[i - 2].scale(&num_bigint::BigInt::from(k - 1));
        fs.push(prev.sub(&carry));
    }
    fs
}

/// G_0 … G_t, the partial sums of the F family.
pub fn g_polys(k: u64, up_to: usize) -> Vec<IntPoly> {
    let mut acc = IntPoly::zero();
    f_polys(k, up_to)
        .into_iter()
        .map(|f| {
            acc = acc.add(&f);
            acc.clone()
        })
        .collect()
}

pub fn f_poly(k: u64, t: usize) -> IntPoly {
    f_polys(k, t).pop().expect("family is never empty")
}

pub fn g_poly(k: u64, t: usize) -> IntPoly {
    g_polys(k, t).pop().expect("family is never empty")
}

/// Largest zero of G_t, t ≥ 1.
pub fn lambda_top(k: u64, t: usize) -> Result<Scalar> {
    check_valency(k)?;
    if t == 0 {
        return Err(Error::NoRealRoot);
    }
    largest_real_root(&g_poly(k, t))
}

/// Largest zero of F_t, t ≥ 1.
pub fn mu_top(k: u64, t: usize) -> Result<Scalar> {
    check_valency(k)?;
    if t == 0 {
        return Err(Error::NoRealRoot);
    }
    largest_real_root(&f_poly(k, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_i, Rat};

    #[test]
    fn base_cases_and_recurrence() {
        let fs = f_polys(3, 6);
        assert_eq!(fs[0], IntPoly::one());
        assert_eq!(fs[1], IntPoly::x());
        assert_eq!(fs[2], IntPoly::from_i64(&[-3, 0, 1]));
        assert_eq!(fs[3], IntPoly::from_i64(&[0, -5, 0, 1]));
        assert_eq!(fs[4], IntPoly::from_i64(&[6, 0, -7, 0, 1]));
        for k in 2u64..=7 {
            let fs = f_polys(k, 8);
            for i in 3..fs.len() {
                let expect = fs[i - 1]
                    .mul_x()
                    .sub(&fs[i - 2].scale(&num_bigint::BigInt::from(k - 1)));
                assert_eq!(fs[i], expect);
                assert_eq!(fs[i].degree(), Some(i));
                assert!(fs[i].is_monic());
            }
        }
    }

    #[test]
    fn partial_sums() {
        let gs = g_polys(3, 3);
        assert_eq!(gs[1], IntPoly::from_i64(&[1, 1]));
        assert_eq!(gs[2], IntPoly::from_i64(&[-2, 1, 1]));
        assert_eq!(gs[3], IntPoly::from_i64(&[-2, -4, 1, 1]));
        assert_eq!(g_poly(4, 2), IntPoly::from_i64(&[-3, 1, 1]));
    }

    #[test]
    fn known_extreme_zeros() {
        // G_1 = x + 1 for every valency
        for k in 2..=10 {
            assert_eq!(lambda_top(k, 1).unwrap(), Scalar::from_int(-1));
            assert_eq!(mu_top(k, 1).unwrap(), Scalar::zero());
        }
        // G_2 = x² + x − (k − 1) has largest zero 1 exactly when k = 3
        assert_eq!(lambda_top(3, 2).unwrap(), Scalar::from_int(1));
        let r3 = Scalar::from_rat(rat_i(3)).sqrt().unwrap();
        assert_eq!(mu_top(3, 2).unwrap(), r3);
        // F_3 = x³ − 5x at k = 3: largest zero √5
        let r5 = Scalar::from_rat(rat_i(5)).sqrt().unwrap();
        assert_eq!(mu_top(3, 3).unwrap(), r5);
        // F_4 = (x² − 1)(x² − 6) at k = 3: rational zeros strip away
        let r6 = Scalar::from_rat(rat_i(6)).sqrt().unwrap();
        assert_eq!(mu_top(3, 4).unwrap(), r6);
        // G_3 at k = 3 is an irreducible cubic
        let l3 = lambda_top(3, 3).unwrap();
        assert!(matches!(l3, Scalar::Alg(_)));
        assert!((l3.to_f64() - 1.8136).abs() < 5e-4);
    }

    #[test]
    fn zero_orderings_hold_across_range() {
        for k in 2u64..=12 {
            let ceiling = Scalar::from_rat(Rat::from(num_bigint::BigInt::from(4 * (k - 1))))
                .sqrt()
                .unwrap();
            let mut prev_lambda = None;
            let mut prev_mu = None;
            for t in 1..=9 {
                let l = lambda_top(k, t).unwrap();
                let m = mu_top(k, t).unwrap();
                if let Some(pl) = prev_lambda.take() {
                    assert!(pl < l, "G zeros must increase with depth (k={k}, t={t})");
                }
                if let Some(pm) = prev_mu.take() {
                    assert!(pm < m, "F zeros must increase with depth (k={k}, t={t})");
                }
                assert!(l < m, "G_t tops out below F_t (k={k}, t={t})");
                assert!(m < ceiling, "zeros stay below 2√(k−1) (k={k}, t={t})");
                prev_lambda = Some(l);
                prev_mu = Some(m);
            }
        }
    }
}
