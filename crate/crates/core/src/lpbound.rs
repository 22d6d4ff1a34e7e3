//! Upper bound v(k, λ) on the order of a connected k-regular graph whose
//! adjacency matrix has second-largest eigenvalue at most λ.
//!
//! The bound is carried by a t × t tridiagonal matrix T(k, t, c): the
//! quotient matrix of a distance partition around an edge-neighborhood in
//! which the last cell meets the previous one in c edges per vertex.  Its
//! largest eigenvalue is k, its second-largest is the largest root of
//! (c − 1)·G_{t−2} + G_{t−1}, and the partition carries
//! M(k, t, c) = 1 + Σ_{i=0}^{t−3} k(k−1)^i + k(k−1)^{t−2}/c vertices.
//! Matching c so the second eigenvalue equals λ turns M into an upper bound
//! on the order of every qualifying graph.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    isolate_real_roots, largest_real_root, rat, rat_display, rat_i, real_root_in, Int, IntPoly,
    Rat, Scalar,
};
use crate::orthopoly;

fn check_valency(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "valency must be at least 2, got {k}"
        )));
    }
    Ok(())
}

/// Vertex count of the depth-`layers` ball of the k-regular tree, together
/// with the size k(k−1)^layers the next shell would have.
fn ball_and_shell(k: u64, layers: usize) -> (Int, Int) {
    let mut ball = Int::one();
    let mut shell = Int::from(k);
    for _ in 0..layers {
        ball += &shell;
        shell *= k - 1;
    }
    (ball, shell)
}

/// Parameters (k, t, c) of the t × t tridiagonal matrix with lower diagonal
/// (1, …, 1, c), upper diagonal (k, k−1, …, k−1), and every row summing to k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TridiagParams {
    k: u64,
    t: usize,
    c: Scalar,
}

impl TridiagParams {
    /// Requires k ≥ 2, t ≥ 2, and c positive rational or quadratic.
    pub fn new(k: u64, t: usize, c: Scalar) -> Result<TridiagParams> {
        check_valency(k)?;
        if t < 2 {
            return Err(Error::Domain(format!(
                "matrix size must be at least 2, got {t}"
            )));
        }
        if matches!(c, Scalar::Alg(_)) {
            return Err(Error::AlgebraicArithmetic);
        }
        if c <= Scalar::zero() {
            return Err(Error::Domain("corner entry c must be positive".into()));
        }
        Ok(TridiagParams { k, t, c })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// The matrix itself, row-major; needs rational c.
    pub fn matrix(&self) -> Result<Vec<Vec<Rat>>> {
        let c = self
            .c
            .as_rat()
            .ok_or_else(|| Error::Domain("matrix entries exist only for rational c".into()))?
            .clone();
        let k = rat(Int::from(self.k));
        let t = self.t;
        let mut m = vec![vec![Rat::zero(); t]; t];
        m[0][1] = k.clone();
        for i in 1..t - 1 {
            m[i][i - 1] = rat_i(1);
            m[i][i + 1] = k.clone() - rat_i(1);
        }
        m[t - 1][t - 2] = c.clone();
        m[t - 1][t - 1] = k - c;
        Ok(m)
    }

    /// Second-largest eigenvalue: the largest root of (c − 1)·G_{t−2} + G_{t−1}.
    /// All eigenvalues are simple and the largest is k, so this is strictly
    /// below k.
    pub fn second_eigenvalue(&self) -> Result<Scalar> {
        let gs = orthopoly::g_polys(self.k, self.t - 1);
        let g_low = &gs[self.t - 2];
        let g_high = &gs[self.t - 1];
        match &self.c {
            Scalar::Rat(c) => {
                let shift = c - rat_i(1);
                let poly = g_low.scale(shift.numer()).add(&g_high.scale(shift.denom()));
                largest_real_root(&poly)
            }
            Scalar::Surd(s) => {
                // c − 1 = a + b√d splits the pencil as P = A + √d·B with
                // integer A, B.  Every root of P is a root of N = A² − d·B²;
                // a root of N belongs to P exactly when A and B do not share
                // a strict sign there.
                let d = s.radicand();
                let a = s.rational_part() - rat_i(1);
                let b = s.surd_coeff();
                let den = a.denom().lcm(b.denom());
                let a_int = (&a * rat(den.clone())).to_integer();
                let b_int = (b * rat(den.clone())).to_integer();
                let pa = g_low.scale(&a_int).add(&g_high.scale(&den));
                let pb = g_low.scale(&b_int);
                let n = pa.mul(&pa).sub(&pb.mul(&pb).scale(&Int::from(d)));
                for br in isolate_real_roots(&n)?.iter().rev() {
                    let root = real_root_in(&n, &br.lo, &br.hi)?;
                    if root.sign_of_poly(&pa)? == root.sign_of_poly(&pb)?.reverse() {
                        return Ok(root);
                    }
                }
                Err(Error::NoRealRoot)
            }
            Scalar::Alg(_) => Err(Error::AlgebraicArithmetic),
        }
    }

    /// Vertex count 1 + Σ_{i=0}^{t−3} k(k−1)^i + k(k−1)^{t−2}/c of a
    /// distance partition carrying this matrix.
    pub fn m_value(&self) -> Result<Scalar> {
        let (ball, shell) = ball_and_shell(self.k, self.t - 2);
        Scalar::from_rat(rat(ball)).add(&Scalar::from_rat(rat(shell)).div(&self.c)?)
    }
}

/// One audited evaluation of the bound: the matched matrix, its second
/// eigenvalue, the raw count M, and the integer bound after floor and the
/// handshake parity cut.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub params: TridiagParams,
    pub lambda2: Scalar,
    pub m_value: Scalar,
    #[serde(with = "crate::serde_util::big_int")]
    pub v_ub: Int,
    pub parity_applied: bool,
}

/// The unique c > 0 giving T(k, t, c) second eigenvalue λ, namely
/// −F_{t−1}(λ)/G_{t−2}(λ).  Requires λ^(t−2) < λ < μ^(t−1), where the lower
/// endpoint for t = 2 is −k.
pub fn c_for_lambda(k: u64, t: usize, lambda: &Scalar) -> Result<Scalar> {
    check_valency(k)?;
    if t < 2 {
        return Err(Error::Domain(format!(
            "matrix size must be at least 2, got {t}"
        )));
    }
    let lower = if t == 2 {
        Scalar::from_rat(-rat(Int::from(k)))
    } else {
        orthopoly::lambda_top(k, t - 2)?
    };
    if *lambda <= lower || *lambda >= orthopoly::mu_top(k, t - 1)? {
        return Err(Error::NoPositiveC);
    }
    let f = orthopoly::f_poly(k, t - 1);
    let g = orthopoly::g_poly(k, t - 2);
    let c = match lambda {
        Scalar::Rat(r) => Scalar::from_rat(-(f.eval_rat(r) / g.eval_rat(r))),
        Scalar::Surd(s) => Scalar::from_surd(s.eval_intpoly(&f).neg().div(&s.eval_intpoly(&g))?),
        Scalar::Alg(_) => return Err(Error::AlgebraicArithmetic),
    };
    debug_assert!(c > Scalar::zero());
    Ok(c)
}

/// Evaluates the bound at λ: picks the window t with λ^(t−2) < λ ≤ λ^(t−1)
/// (which keeps c ≥ 1), matches c, and floors M, dropping odd orders when k
/// is odd.  Defined for −1 ≤ λ < 2√(k−1); everything at or beyond 2√(k−1)
/// admits infinite families, so no finite bound exists there.
pub fn bound_for_lambda(k: u64, lambda: &Scalar) -> Result<BoundCertificate> {
    check_valency(k)?;
    if *lambda < Scalar::from_int(-1) {
        return Err(Error::Domain(
            "lambda below -1 forces a complete graph; query lambda >= -1".into(),
        ));
    }
    let ramanujan = Scalar::from_rat(rat(Int::from(k - 1) * Int::from(4))).sqrt()?;
    if *lambda >= ramanujan {
        return Err(Error::RamanujanRegime);
    }
    let mut t = 2;
    while orthopoly::lambda_top(k, t - 1)? < *lambda {
        t += 1;
    }
    let c = c_for_lambda(k, t, lambda)?;
    let params = TridiagParams::new(k, t, c)?;
    let m_value = params.m_value()?;
    let mut v_ub = m_value.floor();
    let mut parity_applied = false;
    if k.is_odd() && v_ub.is_odd() {
        v_ub -= 1;
        parity_applied = true;
    }
    Ok(BoundCertificate {
        params,
        lambda2: lambda.clone(),
        m_value,
        v_ub,
        parity_applied,
    })
}

/// A polynomial Σ f_i·F_i presented in the valency-k orthogonal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LPPolynomial {
    k: u64,
    coeffs: Vec<Rat>,
}

impl LPPolynomial {
    pub fn new(k: u64, coeffs: Vec<Rat>) -> Result<LPPolynomial> {
        check_valency(k)?;
        if coeffs.is_empty() {
            return Err(Error::Domain(
                "needs at least the constant basis coefficient".into(),
            ));
        }
        Ok(LPPolynomial { k, coeffs })
    }

    pub fn from_i64(k: u64, coeffs: &[i64]) -> Result<LPPolynomial> {
        LPPolynomial::new(k, coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Monomial-basis expansion times a positive integer clearing factor.
    pub fn cleared(&self) -> (IntPoly, Int) {
        let fs = orthopoly::f_polys(self.k, self.coeffs.len() - 1);
        let mut combo = vec![Rat::zero(); self.coeffs.len()];
        for (fi, f) in self.coeffs.iter().zip(&fs) {
            for (j, cj) in f.coeffs().iter().enumerate() {
                combo[j] += fi * cj;
            }
        }
        IntPoly::from_rat_coeffs(&combo)
    }
}

/// Checks p ≤ 0 on all of [lo, hi] exactly: the maximum over a closed
/// interval sits at an endpoint or at an interior critical point, so the
/// sign of p is tested at lo, at hi, and at every root of p′ between them.
fn ensure_nonpositive_on(p: &IntPoly, lo: &Rat, hi: &Scalar) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    let lo_s = Scalar::from_rat(lo.clone());
    let hi_vs_lo = hi.compare(&lo_s);
    if hi_vs_lo == Ordering::Less {
        return Err(Error::Domain("interval is empty".into()));
    }
    if p.sign_at(lo) == Ordering::Greater {
        return Err(Error::Domain(format!(
            "f({}) is positive",
            rat_display(lo)
        )));
    }
    if hi_vs_lo == Ordering::Equal {
        return Ok(());
    }
    if hi.sign_of_poly(p)? == Ordering::Greater {
        return Err(Error::Domain("f(lambda) is positive".into()));
    }
    if p.degree().unwrap_or(0) < 2 {
        return Ok(());
    }
    let dp = p.derivative();
    for br in isolate_real_roots(&dp)? {
        let critical = real_root_in(&dp, &br.lo, &br.hi)?;
        if critical > lo_s && critical < *hi && critical.sign_of_poly(p)? == Ordering::Greater {
            return Err(Error::Domain(
                "f is positive inside the interval".into(),
            ));
        }
    }
    Ok(())
}

/// Ratio f(k)/f_0 after verifying the multiplier conditions: f_0 > 0,
/// f_i ≥ 0 for i ≥ 1, f(k) > 0, and f ≤ 0 everywhere on [−k, λ].  Any
/// graph the bound applies to has order at most this ratio.
pub fn lp_certificate_check(f: &LPPolynomial, lambda: &Scalar) -> Result<Rat> {
    let f0 = &f.coeffs[0];
    if !f0.is_positive() {
        return Err(Error::Domain(
            "constant basis coefficient f_0 must be positive".into(),
        ));
    }
    for (i, fi) in f.coeffs.iter().enumerate().skip(1) {
        if fi.is_negative() {
            return Err(Error::Domain(format!(
                "basis coefficient f_{i} must be nonnegative"
            )));
        }
    }
    let (p, den) = f.cleared();
    let k_rat = rat(Int::from(f.k));
    let at_k = p.eval_rat(&k_rat) / rat(den);
    if !at_k.is_positive() {
        return Err(Error::Domain("f(k) must be positive".into()));
    }
    ensure_nonpositive_on(&p, &(-k_rat), lambda)?;
    Ok(at_k / f0)
}

/// Minimum order of a k-regular graph of girth g: the ball of a vertex
/// (odd g) or of an edge (even g) must embed without collisions.
pub fn moore_lower(k: u64, girth: u64) -> Result<Int> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "girth bound needs valency at least 3, got {k}"
        )));
    }
    if girth < 3 {
        return Err(Error::Domain(format!(
            "girth must be at least 3, got {girth}"
        )));
    }
    let r = (girth / 2) as usize;
    if girth.is_odd() {
        Ok(ball_and_shell(k, r).0)
    } else {
        let mut total = Int::zero();
        let mut layer = Int::from(2);
        for _ in 0..r {
            total += &layer;
            layer *= k - 1;
        }
        Ok(total)
    }
}

/// Smallest t whose tree quotient T(k, t, 1) already has second eigenvalue
/// strictly above λ, with the tree ball size 1 + Σ_{i=0}^{t−2} k(k−1)^i:
/// any connected k-regular graph of at least that order has second
/// eigenvalue above λ.
pub fn alon_boppana_min_t(k: u64, lambda: &Scalar) -> Result<(usize, Int)> {
    check_valency(k)?;
    let ramanujan = Scalar::from_rat(rat(Int::from(k - 1) * Int::from(4))).sqrt()?;
    if *lambda >= ramanujan {
        return Err(Error::RamanujanRegime);
    }
    let mut t = 2;
    while orthopoly::lambda_top(k, t - 1)? <= *lambda {
        t += 1;
    }
    Ok((t, ball_and_shell(k, t - 1).0))
}

/// A widened eigenvalue window available once some graph attains M(p): the
/// same order stays optimal for every λ up to the largest root of
/// `threshold_poly` exclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedRange {
    pub params: TridiagParams,
    pub threshold_c: Rat,
    pub threshold_poly: IntPoly,
    pub lambda_prime: Scalar,
}

/// Extends the optimal window of an attained bound.  The threshold corner
/// entry c* depends on whether the parity cut is active (M even and k odd)
/// and on whether c = 1 (where the next-deeper matrix takes over) or c > 1.
pub fn extended_range(
    p: &TridiagParams,
    m_parity_even: bool,
    k_odd: bool,
) -> Result<ExtendedRange> {
    let c = p
        .c
        .as_rat()
        .ok_or_else(|| Error::Domain("range extension needs rational c".into()))?;
    let one = rat_i(1);
    let use_parity = m_parity_even && k_odd;
    let (threshold_c, s) = if *c == one {
        let full = rat(Int::from(p.k) * Int::from(p.k - 1).pow((p.t - 1) as u32));
        (if use_parity { full / rat_i(2) } else { full }, p.t + 1)
    } else if *c > one {
        let d = rat(Int::from(p.k) * Int::from(p.k - 1).pow((p.t - 2) as u32));
        let cstar = if use_parity {
            c - (rat_i(2) * c * c) / (d + rat_i(2) * c)
        } else {
            c - (c * c) / (d + c)
        };
        (cstar, p.t)
    } else {
        return Err(Error::Domain("range extension needs c at least 1".into()));
    };
    if !threshold_c.is_positive() {
        return Err(Error::NoPositiveC);
    }
    let gs = orthopoly::g_polys(p.k, s - 1);
    let shift = &threshold_c - &one;
    let threshold_poly = gs[s - 2].scale(shift.numer()).add(&gs[s - 1].scale(shift.denom()));
    let lambda_prime = largest_real_root(&threshold_poly)?;
    Ok(ExtendedRange {
        params: p.clone(),
        threshold_c,
        threshold_poly,
        lambda_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_pq, Surd};
    use crate::matrix::eigen_poly_rat;

    fn s_int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn s_rat(p: i64, q: i64) -> Scalar {
        Scalar::from_rat(rat_pq(p, q))
    }

    fn s_surd(a: i64, b: i64, d: u64) -> Scalar {
        Scalar::from_surd(Surd::new(rat_i(a), rat_i(b), d).unwrap())
    }

    fn params(k: u64, t: usize, c: Scalar) -> TridiagParams {
        TridiagParams::new(k, t, c).unwrap()
    }

    /// A rational point strictly between two scalars, found by decimal
    /// refinement and confirmed by exact comparison.
    fn rational_between(a: &Scalar, b: &Scalar) -> Rat {
        let mid = (a.to_f64() + b.to_f64()) / 2.0;
        for p in 0..14 {
            let scale = 10f64.powi(p);
            let cand = rat_pq((mid * scale).round() as i64, scale as i64);
            let cand_s = Scalar::from_rat(cand.clone());
            if *a < cand_s && cand_s < *b {
                return cand;
            }
        }
        panic!("no rational found between {a} and {b}");
    }

    #[test]
    fn matrix_layout_and_row_sums() {
        let m = params(3, 3, s_int(1)).matrix().unwrap();
        let want: Vec<Vec<Rat>> = vec![
            vec![rat_i(0), rat_i(3), rat_i(0)],
            vec![rat_i(1), rat_i(0), rat_i(2)],
            vec![rat_i(0), rat_i(1), rat_i(2)],
        ];
        assert_eq!(m, want);

        let m = params(4, 3, s_int(2)).matrix().unwrap();
        let want: Vec<Vec<Rat>> = vec![
            vec![rat_i(0), rat_i(4), rat_i(0)],
            vec![rat_i(1), rat_i(0), rat_i(3)],
            vec![rat_i(0), rat_i(2), rat_i(2)],
        ];
        assert_eq!(m, want);

        let m = params(5, 2, s_int(1)).matrix().unwrap();
        assert_eq!(
            m,
            vec![vec![rat_i(0), rat_i(5)], vec![rat_i(1), rat_i(4)]]
        );

        for (k, t, c) in [(3, 4, rat_pq(1, 2)), (7, 6, rat_pq(5, 3)), (4, 2, rat_pq(7, 2))] {
            let m = params(k, t, Scalar::from_rat(c)).matrix().unwrap();
            for row in &m {
                let sum: Rat = row.iter().sum();
                assert_eq!(sum, rat(Int::from(k)));
            }
        }

        assert!(params(3, 3, s_surd(0, 1, 2)).matrix().is_err());
    }

    #[test]
    fn second_eigenvalue_known_values() {
        assert_eq!(params(3, 3, s_int(1)).second_eigenvalue().unwrap(), s_int(1));
        assert_eq!(
            params(3, 4, s_rat(2641, 3510)).second_eigenvalue().unwrap(),
            s_rat(19, 10)
        );
        for k in 3..=8 {
            let p = params(k, 3, s_rat(k as i64 - 1, 2));
            assert_eq!(p.second_eigenvalue().unwrap(), s_int(1));
        }
        // t = 2: eigenvalues are k and −c
        assert_eq!(
            params(6, 2, s_rat(5, 2)).second_eigenvalue().unwrap(),
            s_rat(-5, 2)
        );
    }

    #[test]
    fn second_eigenvalue_with_quadratic_corner() {
        // c = −1 + √2 < 1 pushes the second eigenvalue up to exactly √2.
        let sqrt2 = s_surd(0, 1, 2);
        let p = params(3, 3, s_surd(-1, 1, 2));
        assert_eq!(p.second_eigenvalue().unwrap(), sqrt2);

        // c = 1 + √2 > 1: the answer is a quartic algebraic number, and the
        // largest root of the conjugate product belongs to the other pencil.
        let p = params(3, 3, s_surd(1, 1, 2));
        let lam = p.second_eigenvalue().unwrap();
        assert!(matches!(lam, Scalar::Alg(_)));
        assert!((lam.to_f64() - 0.2228).abs() < 1e-3);
    }

    #[test]
    fn m_value_known_values() {
        assert_eq!(params(3, 5, s_int(3)).m_value().unwrap(), s_int(30));
        assert_eq!(params(22, 3, s_int(6)).m_value().unwrap(), s_int(100));
        assert_eq!(
            params(3, 4, s_rat(2641, 3510)).m_value().unwrap(),
            s_rat(68530, 2641)
        );
        // 1 + 3 + 6/√2 = 4 + 3√2
        assert_eq!(
            params(3, 3, s_surd(0, 1, 2)).m_value().unwrap(),
            s_surd(4, 3, 2)
        );
    }

    #[test]
    fn c_for_lambda_known_values() {
        assert_eq!(
            c_for_lambda(3, 4, &s_rat(19, 10)).unwrap(),
            s_rat(2641, 3510)
        );
        for k in 3..=8 {
            assert_eq!(
                c_for_lambda(k, 3, &s_int(1)).unwrap(),
                s_rat(k as i64 - 1, 2)
            );
        }
        // quadratic λ can still give rational c
        let c = c_for_lambda(3, 4, &s_surd(0, 1, 2)).unwrap();
        assert_eq!(c, s_int(3));
        // t = 2 window is (−k, 0)
        assert_eq!(c_for_lambda(3, 2, &s_rat(-1, 2)).unwrap(), s_rat(1, 2));
        assert!(matches!(
            c_for_lambda(3, 2, &s_int(-3)),
            Err(Error::NoPositiveC)
        ));
        // outside the window: boundary values and beyond
        assert!(matches!(
            c_for_lambda(3, 4, &s_int(1)),
            Err(Error::NoPositiveC)
        ));
        assert!(matches!(
            c_for_lambda(3, 4, &s_int(3)),
            Err(Error::NoPositiveC)
        ));
    }

    #[test]
    fn quadratic_round_trip() {
        let sqrt2 = s_surd(0, 1, 2);
        let c = c_for_lambda(3, 3, &sqrt2).unwrap();
        assert_eq!(c, s_surd(-1, 1, 2));
        let p = TridiagParams::new(3, 3, c).unwrap();
        assert_eq!(p.second_eigenvalue().unwrap(), sqrt2);
    }

    #[test]
    fn window_selection_and_parity() {
        let cert = bound_for_lambda(3, &s_rat(19, 10)).unwrap();
        assert_eq!(cert.params.t(), 5);
        assert_eq!(cert.m_value, s_rat(526966, 20793));
        assert_eq!(cert.v_ub, Int::from(24));
        assert!(cert.parity_applied);

        let cert = bound_for_lambda(3, &s_int(2)).unwrap();
        assert_eq!(cert.params.t(), 5);
        assert_eq!(*cert.params.c(), s_int(3));
        assert_eq!(cert.m_value, s_int(30));
        assert_eq!(cert.v_ub, Int::from(30));
        assert!(!cert.parity_applied);

        let cert = bound_for_lambda(4, &s_int(3)).unwrap();
        assert_eq!(cert.params.t(), 7);
        assert_eq!(*cert.params.c(), s_int(4));
        assert_eq!(cert.m_value, s_int(728));
        assert_eq!(cert.v_ub, Int::from(728));

        // ties at λ = λ^(t−1) take c = 1
        let cert = bound_for_lambda(3, &s_int(1)).unwrap();
        assert_eq!(cert.params.t(), 3);
        assert_eq!(*cert.params.c(), s_int(1));
        assert_eq!(cert.v_ub, Int::from(10));
        assert!(!cert.parity_applied);

        assert!(matches!(
            bound_for_lambda(3, &s_rat(-3, 2)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            bound_for_lambda(3, &s_surd(0, 2, 2)),
            Err(Error::RamanujanRegime)
        ));
        assert!(matches!(
            bound_for_lambda(3, &s_int(3)),
            Err(Error::RamanujanRegime)
        ));
    }

    #[test]
    fn low_lambda_anchors() {
        for k in 3..=22 {
            let cert = bound_for_lambda(k, &s_int(-1)).unwrap();
            assert_eq!(cert.params.t(), 2);
            assert_eq!(*cert.params.c(), s_int(1));
            assert_eq!(cert.v_ub, Int::from(k + 1));

            let cert = bound_for_lambda(k, &s_int(0)).unwrap();
            assert_eq!(cert.v_ub, Int::from(2 * k));
            assert!(!cert.parity_applied);
        }
    }

    #[test]
    fn certificate_round_trip() {
        for k in [3u64, 4, 7] {
            for lam in [s_rat(-1, 2), s_rat(1, 2), s_int(1), s_rat(3, 2), s_int(2)] {
                let cert = bound_for_lambda(k, &lam).unwrap();
                assert_eq!(cert.lambda2, lam);
                assert_eq!(cert.params.second_eigenvalue().unwrap(), lam);
                assert_eq!(cert.params.m_value().unwrap(), cert.m_value);
                assert!(Scalar::from_rat(rat(cert.v_ub.clone())) <= cert.m_value);
            }
        }
    }

    #[test]
    fn matches_matrix_spectra() {
        for k in 3..=22u64 {
            for t in 2..=8usize {
                for c in [
                    rat_pq(1, 2),
                    rat_i(1),
                    rat_pq(3, 2),
                    rat_i(2),
                    rat_i(k as i64 - 1),
                    rat_i(k as i64),
                ] {
                    let p = params(k, t, Scalar::from_rat(c));
                    let second = p.second_eigenvalue().unwrap();
                    let chi = eigen_poly_rat(&p.matrix().unwrap());
                    assert_eq!(chi.degree(), Some(t));
                    // k is the largest eigenvalue, `second` the only other
                    // one above it... exactly one root of chi exceeds it.
                    assert_eq!(chi.sign_at(&rat(Int::from(k))), Ordering::Equal);
                    assert_eq!(second.sign_of_poly(&chi).unwrap(), Ordering::Equal);
                    assert_eq!(second.count_roots_gt(&chi).unwrap(), 1);
                    assert!(second < Scalar::from_rat(rat(Int::from(k))));
                }
            }
        }
    }

    #[test]
    fn second_eigenvalue_monotone_in_c() {
        for k in [3u64, 4, 7] {
            for t in [3usize, 4, 6] {
                let eigs: Vec<Scalar> = [rat_pq(1, 100), rat_pq(1, 2), rat_i(1), rat_i(2), rat_i(100)]
                    .into_iter()
                    .map(|c| params(k, t, Scalar::from_rat(c)).second_eigenvalue().unwrap())
                    .collect();
                for w in eigs.windows(2) {
                    assert!(w[0] > w[1], "second eigenvalue must fall as c grows");
                }
                assert_eq!(eigs[2], orthopoly::lambda_top(k, t - 1).unwrap());
                assert!(eigs[0] < orthopoly::mu_top(k, t - 1).unwrap());
                assert!(eigs[4] > orthopoly::lambda_top(k, t - 2).unwrap());
            }
        }
    }

    #[test]
    fn deeper_window_gives_tighter_bound() {
        for k in [3u64, 4, 8] {
            for t in [3usize, 4, 6] {
                let lo = orthopoly::lambda_top(k, t - 1).unwrap();
                let hi = orthopoly::mu_top(k, t - 1).unwrap();
                let lam = Scalar::from_rat(rational_between(&lo, &hi));
                let c_shallow = c_for_lambda(k, t, &lam).unwrap();
                let c_deep = c_for_lambda(k, t + 1, &lam).unwrap();
                assert!(c_shallow < s_int(1));
                assert!(c_deep >= s_int(1));
                let m_shallow = params(k, t, c_shallow).m_value().unwrap();
                let m_deep = params(k, t + 1, c_deep).m_value().unwrap();
                assert!(m_deep < m_shallow);
            }
        }
    }

    #[test]
    fn multiplier_ratio_examples() {
        // (x − 1)(x + 2)² at valency 3 certifies order ≤ 10 for λ = 1
        let f = LPPolynomial::from_i64(3, &[5, 5, 3, 1]).unwrap();
        assert_eq!(lp_certificate_check(&f, &s_int(1)).unwrap(), rat_i(10));

        // x + 1 at valency 3 certifies order ≤ 4 for λ = −1
        let f = LPPolynomial::from_i64(3, &[1, 1]).unwrap();
        assert_eq!(lp_certificate_check(&f, &s_int(-1)).unwrap(), rat_i(4));

        // (x − 1)(x + 3)² at valency 5 certifies order ≤ 16 for λ = 1
        let f = LPPolynomial::from_i64(5, &[16, 12, 5, 1]).unwrap();
        assert_eq!(lp_certificate_check(&f, &s_int(1)).unwrap(), rat_i(16));

        // singleton interval λ = −k
        let f = LPPolynomial::from_i64(3, &[1, 1]).unwrap();
        assert_eq!(lp_certificate_check(&f, &s_int(-3)).unwrap(), rat_i(4));
    }

    #[test]
    fn multiplier_conditions_rejected() {
        let f = LPPolynomial::from_i64(3, &[0, 1]).unwrap();
        let err = lp_certificate_check(&f, &s_int(-1)).unwrap_err();
        assert!(err.to_string().contains("f_0"));

        let f = LPPolynomial::from_i64(3, &[1, -1, 2]).unwrap();
        let err = lp_certificate_check(&f, &s_int(0)).unwrap_err();
        assert!(err.to_string().contains("f_1"));

        // F_2 + F_0 = x² − 2 is positive at the left endpoint −3
        let f = LPPolynomial::from_i64(3, &[1, 0, 1]).unwrap();
        let err = lp_certificate_check(&f, &s_int(0)).unwrap_err();
        assert!(err.to_string().contains("positive"));

        // (x − 1)(x + 2)² is positive at λ = 3/2
        let f = LPPolynomial::from_i64(3, &[5, 5, 3, 1]).unwrap();
        let err = lp_certificate_check(&f, &s_rat(3, 2)).unwrap_err();
        assert!(err.to_string().contains("lambda"));

        // F_3 + F_0 = x³ − 5x + 1 dips below 0 at both ends of [−3, 21/100]
        // but has a positive interior maximum
        let f = LPPolynomial::from_i64(3, &[1, 0, 0, 1]).unwrap();
        let err = lp_certificate_check(&f, &s_rat(21, 100)).unwrap_err();
        assert!(err.to_string().contains("inside"));

        let f = LPPolynomial::from_i64(3, &[1, 1]).unwrap();
        assert!(lp_certificate_check(&f, &s_int(-4)).is_err());
    }

    #[test]
    fn girth_lower_bounds() {
        assert_eq!(moore_lower(3, 3).unwrap(), Int::from(4));
        assert_eq!(moore_lower(3, 5).unwrap(), Int::from(10));
        assert_eq!(moore_lower(3, 6).unwrap(), Int::from(14));
        assert_eq!(moore_lower(3, 8).unwrap(), Int::from(30));
        assert_eq!(moore_lower(7, 5).unwrap(), Int::from(50));
        assert_eq!(moore_lower(57, 5).unwrap(), Int::from(3250));
        assert!(moore_lower(2, 5).is_err());
        assert!(moore_lower(3, 2).is_err());
    }

    #[test]
    fn forcing_depth_examples() {
        assert_eq!(alon_boppana_min_t(3, &s_int(1)).unwrap(), (4, Int::from(22)));
        assert_eq!(alon_boppana_min_t(3, &s_int(0)).unwrap(), (3, Int::from(10)));
        assert_eq!(alon_boppana_min_t(5, &s_int(-1)).unwrap(), (3, Int::from(26)));
        assert_eq!(
            alon_boppana_min_t(3, &s_rat(19, 10)).unwrap(),
            (5, Int::from(46))
        );
        assert!(matches!(
            alon_boppana_min_t(3, &s_surd(0, 2, 2)),
            Err(Error::RamanujanRegime)
        ));
    }

    #[test]
    fn extension_thresholds() {
        // c = 1, parity cut active: c* = k(k−1)^{t−1}/2
        let ext = extended_range(&params(7, 3, s_int(1)), true, true).unwrap();
        assert_eq!(ext.threshold_c, rat_i(126));
        assert_eq!(ext.threshold_poly, IntPoly::from_i64(&[-756, 113, 126, 1]));
        assert!((ext.lambda_prime.to_f64() - 2.02845).abs() < 1e-4);

        // c > 1, parity cut active: c* = c − 2c²/(k(k−1)^{t−2} + 2c)
        let ext = extended_range(&params(5, 3, s_int(2)), true, true).unwrap();
        assert_eq!(ext.threshold_c, rat_pq(5, 3));
        assert_eq!(ext.threshold_poly, IntPoly::from_i64(&[-10, 5, 3]));
        assert!((ext.lambda_prime.to_f64() - 1.1736).abs() < 1e-4);

        // c > 1, no parity cut: c* = c − c²/(k(k−1)^{t−2} + c)
        let ext = extended_range(&params(10, 3, s_int(2)), true, false).unwrap();
        assert_eq!(ext.threshold_c, rat_pq(45, 23));
        assert_eq!(ext.threshold_poly, IntPoly::from_i64(&[-185, 45, 23]));
        assert!((ext.lambda_prime.to_f64() - 2.02182).abs() < 1e-4);

        let ext = extended_range(&params(4, 4, s_int(2)), false, false).unwrap();
        assert_eq!(ext.threshold_c, rat_pq(36, 19));
        assert_eq!(
            ext.threshold_poly,
            IntPoly::from_i64(&[-108, -97, 36, 19])
        );
        assert!((ext.lambda_prime.to_f64() - 2.02156).abs() < 1e-4);

        // 77 vertices at valency 16: M odd, no parity cut
        let ext = extended_range(&params(16, 3, s_int(4)), false, false).unwrap();
        assert_eq!(ext.threshold_c, rat_pq(240, 61));
        assert_eq!(ext.threshold_poly, IntPoly::from_i64(&[-736, 240, 61]));
        assert!((ext.lambda_prime.to_f64() - 2.02472).abs() < 1e-4);

        // 100 vertices at valency 22: M even but k even, no parity cut
        let ext = extended_range(&params(22, 3, s_int(6)), true, false).unwrap();
        assert_eq!(ext.threshold_c, rat_pq(77, 13));
        assert_eq!(ext.threshold_poly, IntPoly::from_i64(&[-209, 77, 13]));
        assert!((ext.lambda_prime.to_f64() - 2.0232).abs() < 1e-4);

        // both parity variants at k = 3, t = 3, c = 1
        let p = params(3, 3, s_int(1));
        assert_eq!(extended_range(&p, true, true).unwrap().threshold_c, rat_i(6));
        assert_eq!(
            extended_range(&p, false, true).unwrap().threshold_c,
            rat_i(12)
        );

        // the widened window must exceed the matched eigenvalue
        let p = params(5, 3, s_int(2));
        let ext = extended_range(&p, true, true).unwrap();
        assert!(ext.lambda_prime > p.second_eigenvalue().unwrap());

        assert!(extended_range(&params(3, 3, s_rat(1, 2)), false, false).is_err());
    }

    #[test]
    fn certificate_serialization() {
        let cert = bound_for_lambda(3, &s_rat(19, 10)).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("\"24\""));
        let back: BoundCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
