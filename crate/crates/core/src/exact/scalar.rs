use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::algebraic::AlgebraicReal;
use super::intpoly::IntPoly;
use super::rat::{rat, rat_i, rat_pq, rat_to_f64, simplest_between, Int, Rat};
use super::sturm::{self, RootBracket};
use super::surd::Surd;
use crate::error::{Error, Result};

/// Exact real scalar: a rational, a quadratic surd, or a general real
/// algebraic number. Construction always demotes to the simplest of the
/// three forms it can prove equal, so pattern matches on the variants are
/// meaningful.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rat),
    Surd(Surd),
    Alg(AlgebraicReal),
}

impl Scalar {
    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(rat_i(n))
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar::Rat(r)
    }

    pub fn from_surd(s: Surd) -> Scalar {
        if let Some(r) = s.as_rat() {
            Scalar::Rat(r.clone())
        } else {
            Scalar::Surd(s)
        }
    }

    pub fn zero() -> Scalar {
        Scalar::Rat(Rat::zero())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    /// √x for nonnegative rational x; irrational radicands are outside the
    /// supported tower.
    pub fn sqrt(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) => Ok(Scalar::from_surd(Surd::sqrt_of_rat(r)?)),
            _ => Err(Error::Domain(
                "square root of an irrational value is not supported".into(),
            )),
        }
    }

    fn as_surd(&self) -> Option<Surd> {
        match self {
            Scalar::Rat(r) => Some(Surd::from_rat(r.clone())),
            Scalar::Surd(s) => Some(s.clone()),
            Scalar::Alg(_) => None,
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        f: impl Fn(&Surd, &Surd) -> Result<Surd>,
    ) -> Result<Scalar> {
        match (self.as_surd(), other.as_surd()) {
            (Some(a), Some(b)) => Ok(Scalar::from_surd(f(&a, &b)?)),
            _ => Err(Error::AlgebraicArithmetic),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, Surd::add)
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, Surd::sub)
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, Surd::mul)
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, Surd::div)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r.clone()),
            Scalar::Surd(s) => Scalar::Surd(s.neg()),
            Scalar::Alg(a) => {
                let poly = a.poly().reflect().primitive_positive();
                let alg = AlgebraicReal::new_unchecked(poly, -a.hi().clone(), -a.lo().clone())
                    .expect("negating an isolating interval preserves it");
                Scalar::Alg(alg)
            }
        }
    }

    pub fn compare(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Rat(a), Scalar::Surd(b)) => b.cmp_rat(a).reverse(),
            (Scalar::Surd(a), Scalar::Rat(b)) => a.cmp_rat(b),
            (Scalar::Surd(a), Scalar::Surd(b)) => a.cmp_surd(b),
            (Scalar::Rat(a), Scalar::Alg(b)) => b.cmp_rat(a).reverse(),
            (Scalar::Alg(a), Scalar::Rat(b)) => a.cmp_rat(b),
            (Scalar::Surd(a), Scalar::Alg(b)) => {
                b.cmp_surd(a).expect("valid scalars compare").reverse()
            }
            (Scalar::Alg(a), Scalar::Surd(b)) => a.cmp_surd(b).expect("valid scalars compare"),
            (Scalar::Alg(a), Scalar::Alg(b)) => a.cmp_alg(b).expect("valid scalars compare"),
        }
    }

    pub fn floor(&self) -> Int {
        match self {
            Scalar::Rat(r) => r.floor().to_integer(),
            Scalar::Surd(s) => s.floor(),
            Scalar::Alg(a) => a.floor(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.compare(&Scalar::zero()) == Ordering::Less
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => rat_to_f64(r),
            Scalar::Surd(s) => s.to_f64(),
            Scalar::Alg(a) => a.to_f64(),
        }
    }

    /// Number of distinct real roots of p strictly greater than this value.
    pub fn count_roots_gt(&self, p: &IntPoly) -> Result<usize> {
        match self {
            Scalar::Rat(r) => sturm::count_roots_gt(p, r),
            Scalar::Surd(s) => sturm::count_roots_gt_surd(p, s),
            Scalar::Alg(a) => a.count_roots_gt(p),
        }
    }

    /// Exact sign of an integer polynomial evaluated at this value.
    pub fn sign_of_poly(&self, p: &IntPoly) -> Result<Ordering> {
        match self {
            Scalar::Rat(r) => Ok(p.sign_at(r)),
            Scalar::Surd(s) => Ok(s.eval_intpoly(p).signum()),
            Scalar::Alg(a) => a.sign_of_poly_at(p),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", super::rat::rat_display(r)),
            Scalar::Surd(s) => write!(f, "{}", s),
            Scalar::Alg(a) => write!(f, "{}", a),
        }
    }
}

/// The unique real root of p in the half-open bracket (lo, hi], demoted to
/// the simplest representation this module can certify: a rational, then a
/// quadratic surd (degree-2 factor or an x² − q divisor), then a general
/// algebraic number.
pub fn real_root_in(p: &IntPoly, lo: &Rat, hi: &Rat) -> Result<Scalar> {
    if sturm::count_roots_in(p, lo, hi)? != 1 {
        return Err(Error::Domain(format!(
            "interval ({}, {}] does not isolate one root of {}",
            lo, hi, p
        )));
    }
    let (rationals, rest) = sturm::split_rational_roots(p)?;
    for r in &rationals {
        if r > lo && r <= hi {
            return Ok(Scalar::Rat(r.clone()));
        }
    }
    // The root is irrational, hence a root of `rest`; the original bracket
    // still isolates it there and its endpoints cannot be roots.
    let chain = sturm::sturm_chain(&rest)?;
    let mut b = RootBracket {
        lo: lo.clone(),
        hi: hi.clone(),
    };
    if rest.degree() == Some(2) {
        if let Some(s) = quadratic_root_in(&rest, &b) {
            return Ok(Scalar::Surd(s));
        }
    } else if let Some(s) = sqrt_divisor_root(&rest, &chain, &mut b)? {
        return Ok(Scalar::Surd(s));
    }
    Ok(Scalar::Alg(AlgebraicReal::new_unchecked(rest, b.lo, b.hi)?))
}

/// Largest real root of p, demoted like `real_root_in`.
pub fn largest_real_root(p: &IntPoly) -> Result<Scalar> {
    let brackets = sturm::isolate_real_roots(p)?;
    let last = brackets.last().ok_or(Error::NoRealRoot)?;
    real_root_in(p, &last.lo, &last.hi)
}

/// Both roots of a quadratic are explicit surds when the discriminant stays
/// inside the supported radicand range; picks the one in the bracket.
fn quadratic_root_in(q: &IntPoly, b: &RootBracket) -> Option<Surd> {
    let a2 = rat(q.coeff(2)) * rat_i(2);
    let mb = -rat(q.coeff(1));
    let disc = &mb * &mb - rat_i(4) * rat(q.coeff(2)) * rat(q.coeff(0));
    debug_assert!(disc.is_positive());
    let half_disc_root = match Surd::sqrt_of_rat(&(disc / (&a2 * &a2))) {
        Ok(s) => s,
        Err(_) => return None,
    };
    let center = Surd::from_rat(mb / a2);
    [
        center.add(&half_disc_root).ok()?,
        center.sub(&half_disc_root).ok()?,
    ]
    .into_iter()
    .find(|cand| {
        cand.cmp_rat(&b.lo) == Ordering::Greater && cand.cmp_rat(&b.hi) != Ordering::Greater
    })
}

/// Detects roots of the form ±√q for higher-degree rest polynomials: squares
/// a tightened bracket, reads off the simplest rational inside, and checks
/// divisibility by the cleared x² − q. Denominator growth past the leading
/// coefficient proves no such divisor exists.
fn sqrt_divisor_root(
    rest: &IntPoly,
    chain: &[IntPoly],
    b: &mut RootBracket,
) -> Result<Option<Surd>> {
    // Make the bracket sign-definite; the root is irrational, so zero falls
    // out after finitely many halvings.
    while b.lo.is_negative() && b.hi.is_positive() {
        let half = b.width() * rat_pq(1, 2);
        sturm::refine_bracket(chain, b, &half);
    }
    let negative = !b.hi.is_positive();
    let lead = rest.leading().expect("nonzero").abs();
    loop {
        let (sq_lo, sq_hi) = if negative {
            (&b.hi * &b.hi, &b.lo * &b.lo)
        } else {
            (&b.lo * &b.lo, &b.hi * &b.hi)
        };
        let q = simplest_between(&sq_lo, &sq_hi);
        if q.denom() > &lead {
            // A divisor den·x² − num forces den | leading coefficient; once
            // the window admits nothing that simple, no ±√q root exists.
            return Ok(None);
        }
        let (candidate, _) = IntPoly::from_rat_coeffs(&[-q.clone(), Rat::zero(), rat_i(1)]);
        if rest.gcd(&candidate.primitive_positive()).degree() == Some(2) {
            return match Surd::sqrt_of_rat(&q) {
                Ok(root) => Ok(Some(if negative { root.neg() } else { root })),
                Err(_) => Ok(None),
            };
        }
        let half = b.width() * rat_pq(1, 2);
        sturm::refine_bracket(chain, b, &half);
    }
}
