use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::intpoly::IntPoly;
use super::rat::{rat_decimal_exact, rat_pq, rat_to_f64, Int, Rat};
use super::sturm::{self, RootBracket};
use super::surd::Surd;
use crate::error::{Error, Result};

/// A real algebraic number: the unique root of `poly` inside the rational
/// bracket (lo, hi).
///
/// Invariants maintained by the constructors in this module and in
/// `Scalar`: `poly` is squarefree, primitive with positive leading
/// coefficient, has degree at least 2, and has no rational roots. The last
/// point makes every rational comparison strict and every bisection step
/// decisive, so refinement never stalls on an exact hit.
#[derive(Clone)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: Rat,
    hi: Rat,
    chain: Vec<IntPoly>,
}

impl AlgebraicReal {
    /// Wraps an already-sanitized polynomial. Verifies that the bracket
    /// isolates exactly one root and that neither endpoint is a root.
    pub(crate) fn new_unchecked(poly: IntPoly, lo: Rat, hi: Rat) -> Result<AlgebraicReal> {
        if poly.sign_at(&lo) == Ordering::Equal || poly.sign_at(&hi) == Ordering::Equal {
            return Err(Error::Domain(
                "isolating interval endpoints must not be roots".into(),
            ));
        }
        let chain = sturm::sturm_chain(&poly)?;
        let n = sturm::vplus_rat(&chain, &lo) - sturm::vplus_rat(&chain, &hi);
        if n != 1 {
            return Err(Error::Domain(format!(
                "interval ({}, {}] holds {} roots, expected exactly one",
                lo, hi, n
            )));
        }
        Ok(AlgebraicReal { poly, lo, hi, chain })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// Persistently shrinks the bracket to at most the given width.
    pub fn refine(&mut self, target: &Rat) {
        let mut b = RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        sturm::refine_bracket(&self.chain, &mut b, target);
        self.lo = b.lo;
        self.hi = b.hi;
    }

    /// Bracket shrunk to the target width without mutating self; the cached
    /// chain keeps this cheap, and `&self` access keeps the type Sync-friendly.
    fn bracket_at(&self, target: &Rat) -> RootBracket {
        let mut b = RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        sturm::refine_bracket(&self.chain, &mut b, target);
        b
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        if *r >= self.hi {
            return Ordering::Less;
        }
        if *r <= self.lo {
            return Ordering::Greater;
        }
        // r strictly inside: the root sits on exactly one side, and cannot
        // equal r because the polynomial has no rational roots.
        let in_left = sturm::vplus_rat(&self.chain, &self.lo) - sturm::vplus_rat(&self.chain, r);
        if in_left == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact sign of an arbitrary integer polynomial evaluated at this
    /// number.
    pub(crate) fn sign_of_poly_at(&self, g: &IntPoly) -> Result<Ordering> {
        if g.is_zero() {
            return Ok(Ordering::Equal);
        }
        if g.degree() == Some(0) {
            return Ok(g.leading().expect("nonzero").cmp(&Int::zero()));
        }
        let common = self.poly.gcd(&g.squarefree_part()?);
        if common.degree().unwrap_or(0) >= 1
            && sturm::count_roots_in(&common, &self.lo, &self.hi)? >= 1
        {
            // The shared root inside the bracket must be this number.
            return Ok(Ordering::Equal);
        }
        // g is nonzero at the root; shrink until g has constant sign on the
        // whole bracket.
        let mut b = RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        loop {
            let s_lo = g.sign_at(&b.lo);
            if s_lo != Ordering::Equal
                && s_lo == g.sign_at(&b.hi)
                && sturm::count_roots_in(g, &b.lo, &b.hi)? == 0
            {
                return Ok(s_lo);
            }
            let half = b.width() * rat_pq(1, 2);
            sturm::refine_bracket(&self.chain, &mut b, &half);
        }
    }

    pub fn cmp_surd(&self, s: &Surd) -> Result<Ordering> {
        if let Some(r) = s.as_rat() {
            return Ok(self.cmp_rat(r));
        }
        // When s is a root of this number's polynomial, they are equal
        // exactly when s lies in the isolating bracket.
        if self.sign_of_poly_at(&s.minimal_poly())? == Ordering::Equal
            && s.cmp_rat(&self.lo) == Ordering::Greater
            && s.cmp_rat(&self.hi) == Ordering::Less
        {
            return Ok(Ordering::Equal);
        }
        // Distinct values: shrink until the bracket excludes s.
        let mut b = RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        loop {
            if s.cmp_rat(&b.lo) != Ordering::Greater {
                return Ok(Ordering::Greater);
            }
            if s.cmp_rat(&b.hi) != Ordering::Less {
                return Ok(Ordering::Less);
            }
            let half = b.width() * rat_pq(1, 2);
            sturm::refine_bracket(&self.chain, &mut b, &half);
        }
    }

    pub fn cmp_alg(&self, other: &AlgebraicReal) -> Result<Ordering> {
        let a = (&self.lo).max(&other.lo).clone();
        let b = (&self.hi).min(&other.hi).clone();
        if a < b {
            let common = self.poly.gcd(&other.poly);
            if common.degree().unwrap_or(0) >= 1 && sturm::count_roots_in(&common, &a, &b)? >= 1 {
                // A common root inside both brackets is simultaneously the
                // unique root of each, so the two numbers coincide.
                return Ok(Ordering::Equal);
            }
        }
        let mut x = RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        let mut y = RootBracket {
            lo: other.lo.clone(),
            hi: other.hi.clone(),
        };
        loop {
            if x.hi <= y.lo {
                return Ok(Ordering::Less);
            }
            if y.hi <= x.lo {
                return Ok(Ordering::Greater);
            }
            let half_x = x.width() * rat_pq(1, 2);
            sturm::refine_bracket(&self.chain, &mut x, &half_x);
            let half_y = y.width() * rat_pq(1, 2);
            sturm::refine_bracket(&other.chain, &mut y, &half_y);
        }
    }

    pub fn floor(&self) -> Int {
        let mut b = RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
        };
        loop {
            let f_lo = b.lo.floor().to_integer();
            let f_hi = b.hi.floor().to_integer();
            if f_lo == f_hi {
                return f_lo;
            }
            // The value is irrational, so the bracket eventually clears
            // every integer boundary.
            let half = b.width() * rat_pq(1, 2);
            sturm::refine_bracket(&self.chain, &mut b, &half);
        }
    }

    pub fn is_negative(&self) -> bool {
        self.cmp_rat(&Rat::zero()) == Ordering::Less
    }

    pub fn to_f64(&self) -> f64 {
        let b = self.bracket_at(&rat_pq(1, 1_000_000_000_000));
        rat_to_f64(&b.mid())
    }

    /// Number of distinct roots of p strictly greater than this value.
    pub fn count_roots_gt(&self, p: &IntPoly) -> Result<usize> {
        let chain = sturm::sturm_chain(&p.squarefree_part()?)?;
        let mut signs = Vec::with_capacity(chain.len());
        for q in &chain {
            signs.push(self.sign_of_poly_at(q)?);
        }
        if signs.len() >= 2 && signs[0] == Ordering::Equal {
            signs[0] = signs[1];
        }
        Ok(sturm::variation_count(&signs) - sturm::variations_at_pos_inf(&chain))
    }

    /// Decimal bracket on a power-of-ten grid that still isolates the root,
    /// used for the printable `root(poly, [lo, hi])` form.
    fn display_bracket(&self) -> RootBracket {
        let mut grid = Int::from(100);
        loop {
            let target = Rat::new(Int::from(1), &grid * 10);
            let b = self.bracket_at(&target);
            let lo_d = Rat::new((&b.lo * Rat::from(grid.clone())).floor().to_integer(), grid.clone());
            let hi_d = Rat::new((&b.hi * Rat::from(grid.clone())).ceil().to_integer(), grid.clone());
            if lo_d < hi_d
                && self.poly.sign_at(&lo_d) != Ordering::Equal
                && self.poly.sign_at(&hi_d) != Ordering::Equal
                && sturm::vplus_rat(&self.chain, &lo_d) - sturm::vplus_rat(&self.chain, &hi_d) == 1
            {
                return RootBracket { lo: lo_d, hi: hi_d };
            }
            grid *= 10;
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.display_bracket();
        let lo = rat_decimal_exact(&b.lo).expect("grid denominators are powers of ten");
        let hi = rat_decimal_exact(&b.hi).expect("grid denominators are powers of ten");
        write!(f, "root({}, [{}, {}])", self.poly, lo, hi)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicReal({} on ({}, {}])", self.poly, self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat_i;

    fn cbrt2() -> AlgebraicReal {
        // x³ − 2 on (1, 2]
        AlgebraicReal::new_unchecked(IntPoly::from_i64(&[-2, 0, 0, 1]), rat_i(1), rat_i(2)).unwrap()
    }

    #[test]
    fn construction_validates_bracket() {
        assert!(AlgebraicReal::new_unchecked(
            IntPoly::from_i64(&[-2, 0, 0, 1]),
            rat_i(2),
            rat_i(3)
        )
        .is_err());
        // both roots of x²−2 in one interval
        assert!(
            AlgebraicReal::new_unchecked(IntPoly::from_i64(&[-2, 0, 1]), rat_i(-2), rat_i(2))
                .is_err()
        );
    }

    #[test]
    fn rational_comparisons() {
        let a = cbrt2(); // ≈ 1.259921
        assert_eq!(a.cmp_rat(&rat_pq(5, 4)), Ordering::Greater);
        assert_eq!(a.cmp_rat(&rat_pq(63, 50)), Ordering::Less);
        assert_eq!(a.floor(), Int::from(1));
        assert!((a.to_f64() - 2f64.powf(1.0 / 3.0)).abs() < 1e-9);
    }

    #[test]
    fn surd_comparisons_including_equality() {
        // √2 represented with the non-minimal polynomial (x²−2)(x²−3)
        let p = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-3, 0, 1]));
        let a = AlgebraicReal::new_unchecked(p, rat_pq(7, 5), rat_pq(3, 2)).unwrap();
        let r2 = Surd::sqrt_of_rat(&rat_i(2)).unwrap();
        let r3 = Surd::sqrt_of_rat(&rat_i(3)).unwrap();
        assert_eq!(a.cmp_surd(&r2).unwrap(), Ordering::Equal);
        assert_eq!(a.cmp_surd(&r3).unwrap(), Ordering::Less);
        assert_eq!(cbrt2().cmp_surd(&r2).unwrap(), Ordering::Less);
        assert_eq!(
            cbrt2().cmp_surd(&Surd::from_rat(rat_pq(5, 4))).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn algebraic_comparisons_including_equality() {
        let a = cbrt2();
        let b = AlgebraicReal::new_unchecked(
            IntPoly::from_i64(&[-2, 0, 0, 1]),
            rat_pq(5, 4),
            rat_pq(13, 10),
        )
        .unwrap();
        assert_eq!(a.cmp_alg(&b).unwrap(), Ordering::Equal);
        // ∛3 > ∛2 despite heavily overlapping brackets
        let c =
            AlgebraicReal::new_unchecked(IntPoly::from_i64(&[-3, 0, 0, 1]), rat_i(1), rat_i(2))
                .unwrap();
        assert_eq!(a.cmp_alg(&c).unwrap(), Ordering::Less);
        assert_eq!(c.cmp_alg(&a).unwrap(), Ordering::Greater);
    }

    #[test]
    fn root_counts_relative_to_value() {
        let a = cbrt2();
        // x² − 2 has one root (√2 ≈ 1.414) above ∛2 ≈ 1.26
        assert_eq!(a.count_roots_gt(&IntPoly::from_i64(&[-2, 0, 1])).unwrap(), 1);
        // and its own polynomial has none above it
        assert_eq!(
            a.count_roots_gt(&IntPoly::from_i64(&[-2, 0, 0, 1])).unwrap(),
            0
        );
    }

    #[test]
    fn display_is_parseable_bracket() {
        let s = cbrt2().to_string();
        assert!(s.starts_with("root(x^3-2, ["));
        assert!(s.contains("1.2"));
    }
}
