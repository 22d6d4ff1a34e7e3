use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::intpoly::IntPoly;
use super::rat::{rat, rat_display, rat_i, rat_to_f64, Int, Rat};
use crate::error::{Error, Result};

/// Policy cap for radicands: squarefree extraction runs by trial division and
/// refuses anything larger (perfect squares of any size are still accepted).
pub const MAX_RADICAND: u64 = 1_000_000;

/// Quadratic surd a + b·√d with a, b rational and d a squarefree integer.
/// Canonical form: a rational value has b = 0 and d = 1; otherwise b ≠ 0 and
/// d ≥ 2 is squarefree. All arithmetic stays inside one field Q(√d); mixing
/// distinct radicands is an error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Rat,
    b: Rat,
    d: u64,
}

/// Splits n = s²·d with d squarefree. Trial division; callers enforce the
/// radicand cap first.
fn split_square(n: u64) -> (u64, u64) {
    let mut n = n;
    let mut outer = 1u64;
    let mut sqfree = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            outer *= p.pow(e / 2);
            if e % 2 == 1 {
                sqfree *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        sqfree *= n;
    }
    (outer, sqfree)
}

impl Surd {
    pub fn new(a: Rat, b: Rat, d: u64) -> Result<Surd> {
        if b.is_zero() || d <= 1 {
            // √1 = 1 folds into the rational part; √0 annihilates b.
            let a = if d == 1 { a + b } else { a };
            return Ok(Surd {
                a,
                b: Rat::zero(),
                d: 1,
            });
        }
        let root = d.isqrt();
        if root * root == d {
            return Ok(Surd {
                a: a + b * rat_i(root as i64),
                b: Rat::zero(),
                d: 1,
            });
        }
        if d > MAX_RADICAND {
            return Err(Error::RadicandTooLarge(d.to_string()));
        }
        let (outer, sqfree) = split_square(d);
        if sqfree == 1 {
            return Ok(Surd {
                a: a + b * rat_i(outer as i64),
                b: Rat::zero(),
                d: 1,
            });
        }
        Ok(Surd {
            a,
            b: b * rat_i(outer as i64),
            d: sqfree,
        })
    }

    pub fn from_rat(a: Rat) -> Surd {
        Surd {
            a,
            b: Rat::zero(),
            d: 1,
        }
    }

    /// √x for x ≥ 0 rational; extracts the squarefree radicand.
    pub fn sqrt_of_rat(x: &Rat) -> Result<Surd> {
        if x.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        if x.is_zero() {
            return Ok(Surd::from_rat(Rat::zero()));
        }
        // √(p/q) = √(p·q) / q
        let radicand = x.numer() * x.denom();
        let radicand_u64 = radicand.to_u64().ok_or_else(|| Error::RadicandTooLarge(radicand.to_string()))?;
        let root = radicand_u64.isqrt();
        if root * root == radicand_u64 {
            return Ok(Surd::from_rat(Rat::new(Int::from(root), x.denom().clone())));
        }
        if radicand_u64 > MAX_RADICAND {
            return Err(Error::RadicandTooLarge(radicand.to_string()));
        }
        let (outer, sqfree) = split_square(radicand_u64);
        Surd::new(
            Rat::zero(),
            Rat::new(Int::from(outer), x.denom().clone()),
            sqfree,
        )
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn surd_coeff(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Surd {
        Surd {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    fn unify(&self, other: &Surd) -> Result<u64> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d),
            (_, true) => Ok(self.d),
            _ if self.d == other.d => Ok(self.d),
            _ => Err(Error::MixedRadicands(self.d, other.d)),
        }
    }

    pub fn add(&self, other: &Surd) -> Result<Surd> {
        let d = self.unify(other)?;
        Surd::new(&self.a + &other.a, &self.b + &other.b, d)
    }

    pub fn sub(&self, other: &Surd) -> Result<Surd> {
        let d = self.unify(other)?;
        Surd::new(&self.a - &other.a, &self.b - &other.b, d)
    }

    pub fn neg(&self) -> Surd {
        Surd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    pub fn mul(&self, other: &Surd) -> Result<Surd> {
        let d = self.unify(other)?;
        let dr = rat_i(d as i64);
        Surd::new(
            &self.a * &other.a + &self.b * &other.b * dr,
            &self.a * &other.b + &self.b * &other.a,
            d,
        )
    }

    pub fn div(&self, other: &Surd) -> Result<Surd> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.unify(other)?;
        let dr = rat_i(d as i64);
        // norm = a² − b²·d is nonzero for a nonzero element of Q(√d)
        let norm = &other.a * &other.a - &other.b * &other.b * dr;
        let num = self.mul(&other.conjugate())?;
        Surd::new(num.a / norm.clone(), num.b / norm, d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&Rat::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&Rat::zero());
        }
        let sa = self.a.is_positive();
        let sb = self.b.is_positive();
        if sa == sb {
            return if sa { Ordering::Greater } else { Ordering::Less };
        }
        // Opposite signs: compare a² with b²·d; equality would force √d
        // rational, which canonical form rules out.
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * rat_i(self.d as i64);
        match lhs.cmp(&rhs) {
            Ordering::Equal => unreachable!("canonical surd cannot vanish with b != 0"),
            Ordering::Greater => {
                if sa {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            Ordering::Less => {
                if sb {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        match Surd::new(&self.a - r, self.b.clone(), self.d) {
            Ok(diff) => diff.signum(),
            Err(_) => unreachable!("subtracting a rational preserves the field"),
        }
    }

    /// Total-order comparison, valid across different radicands.
    pub fn cmp_surd(&self, other: &Surd) -> Ordering {
        if self.is_rational() {
            return other.cmp_rat(self.as_rat().unwrap()).reverse();
        }
        if other.is_rational() {
            return self.cmp_rat(other.as_rat().unwrap());
        }
        if self.d == other.d {
            let diff = Surd::new(&self.a - &other.a, &self.b - &other.b, self.d)
                .expect("same field");
            return diff.signum();
        }
        // Compare A + B√d1 with C√d2 + D is awkward directly; compare
        // S = self − other.a (in Q(√d1) shifted by a rational) against
        // T = other.b·√d2 by signs, then squares.
        let s = Surd {
            a: &self.a - &other.a,
            b: self.b.clone(),
            d: self.d,
        };
        let t = Surd {
            a: Rat::zero(),
            b: other.b.clone(),
            d: other.d,
        };
        let ss = s.signum();
        let ts = t.signum();
        match (ss, ts) {
            (Ordering::Greater, Ordering::Less) => return Ordering::Greater,
            (Ordering::Less, Ordering::Greater) => return Ordering::Less,
            (Ordering::Equal, _) => return ts.reverse(),
            (_, Ordering::Equal) => return ss,
            _ => {}
        }
        // Same strict sign: compare squares. s² ∈ Q(√d1), t² rational.
        let s_sq = s.mul(&s).expect("same field");
        let t_sq = &t.b * &t.b * rat_i(t.d as i64);
        let sq_cmp = s_sq.cmp_rat(&t_sq);
        // Can s² equal t² with s, t of the same sign but different fields?
        // Then s = ±t, so B√d1 = D√d2 − A; squaring shows √d1 rational unless
        // A = 0 and B²d1 = D²d2, impossible for distinct squarefree d.
        if ss == Ordering::Greater {
            sq_cmp
        } else {
            sq_cmp.reverse()
        }
    }

    /// Exact floor via integer bracketing.
    pub fn floor(&self) -> Int {
        if let Some(r) = self.as_rat() {
            return r.floor().to_integer();
        }
        let mut n = Int::from(self.to_f64().floor() as i64);
        while self.cmp_rat(&rat(n.clone())) == Ordering::Less {
            n -= 1;
        }
        loop {
            let next = &n + Int::from(1);
            if self.cmp_rat(&rat(next.clone())) != Ordering::Less {
                n = next;
            } else {
                break;
            }
        }
        n
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * (self.d as f64).sqrt()
    }

    /// Exact polynomial evaluation inside Q(√d).
    pub fn eval_intpoly(&self, p: &IntPoly) -> Surd {
        let mut acc = Surd::from_rat(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc
                .mul(self)
                .and_then(|m| m.add(&Surd::from_rat(rat(c.clone()))))
                .expect("evaluation stays in one field");
        }
        acc
    }

    /// Monic minimal-polynomial data: x² − 2a·x + (a² − b²d) for irrational
    /// values, cleared to integer coefficients.
    pub fn minimal_poly(&self) -> IntPoly {
        if let Some(r) = self.as_rat() {
            let (p, _) = IntPoly::from_rat_coeffs(&[-r.clone(), Rat::one()]);
            return p;
        }
        let tr = rat_i(2) * &self.a;
        let norm = &self.a * &self.a - &self.b * &self.b * rat_i(self.d as i64);
        let (p, _) = IntPoly::from_rat_coeffs(&[norm, -tr, Rat::one()]);
        p
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{}", rat_display(r));
        }
        let root = format!("sqrt({})", self.d);
        let bterm = if self.b == Rat::one() {
            root
        } else if self.b == -Rat::one() {
            format!("-{}", root)
        } else {
            format!("{}*{}", rat_display(&self.b), root)
        };
        if self.a.is_zero() {
            write!(f, "{}", bterm)
        } else if bterm.starts_with('-') {
            write!(f, "{}{}", rat_display(&self.a), bterm)
        } else {
            write!(f, "{}+{}", rat_display(&self.a), bterm)
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat_pq;

    fn sqrt_u(n: i64) -> Surd {
        Surd::sqrt_of_rat(&rat_i(n)).unwrap()
    }

    #[test]
    fn canonicalization() {
        assert_eq!(sqrt_u(4).as_rat().unwrap(), &rat_i(2));
        let s = Surd::new(Rat::zero(), Rat::one(), 12).unwrap();
        assert_eq!(s.radicand(), 3);
        assert_eq!(s.surd_coeff(), &rat_i(2));
        assert_eq!(sqrt_u(18).to_string(), "3*sqrt(2)");
        assert_eq!(Surd::sqrt_of_rat(&rat_pq(1, 2)).unwrap().to_string(), "1/2*sqrt(2)");
    }

    #[test]
    fn arithmetic_in_field() {
        let phi = Surd::new(rat_pq(1, 2), rat_pq(1, 2), 5).unwrap();
        // φ² = φ + 1
        let sq = phi.mul(&phi).unwrap();
        let expect = phi.add(&Surd::from_rat(Rat::one())).unwrap();
        assert_eq!(sq, expect);
        // (√5−1)(√5+1) = 4
        let m = sqrt_u(5)
            .sub(&Surd::from_rat(Rat::one()))
            .unwrap()
            .mul(&sqrt_u(5).add(&Surd::from_rat(Rat::one())).unwrap())
            .unwrap();
        assert_eq!(m.as_rat().unwrap(), &rat_i(4));
        let q = sqrt_u(2).div(&sqrt_u(2)).unwrap();
        assert_eq!(q.as_rat().unwrap(), &rat_i(1));
    }

    #[test]
    fn mixed_radicands_rejected() {
        assert!(matches!(
            sqrt_u(2).add(&sqrt_u(3)),
            Err(Error::MixedRadicands(2, 3))
        ));
        // multiplying by a rational is fine regardless of its d tag
        let two = Surd::from_rat(rat_i(2));
        assert_eq!(sqrt_u(3).mul(&two).unwrap().to_string(), "2*sqrt(3)");
    }

    #[test]
    fn ordering_across_fields() {
        assert_eq!(sqrt_u(2).cmp_surd(&sqrt_u(3)), Ordering::Less);
        assert_eq!(sqrt_u(8).cmp_surd(&sqrt_u(7)), Ordering::Greater);
        // √5 − 1 vs 6/5 = 1.2: √5 ≈ 2.23607 → √5−1 ≈ 1.23607 > 1.2
        let v = sqrt_u(5).sub(&Surd::from_rat(Rat::one())).unwrap();
        assert_eq!(v.cmp_rat(&rat_pq(6, 5)), Ordering::Greater);
        assert_eq!(v.cmp_rat(&rat_pq(5, 4)), Ordering::Less);
        // −√2 < −√3 + 1: −1.414 vs −0.732
        let a = sqrt_u(2).neg();
        let b = sqrt_u(3).neg().add(&Surd::from_rat(Rat::one())).unwrap();
        assert_eq!(a.cmp_surd(&b), Ordering::Less);
        assert_eq!(b.cmp_surd(&a), Ordering::Greater);
    }

    #[test]
    fn floor_values() {
        assert_eq!(sqrt_u(2).floor(), Int::from(1));
        assert_eq!(sqrt_u(2).neg().floor(), Int::from(-2));
        let v = Surd::new(rat_i(16), rat_i(2), 3).unwrap(); // 16 + 2√3 ≈ 19.46
        assert_eq!(v.floor(), Int::from(19));
        assert_eq!(Surd::from_rat(rat_pq(-7, 2)).floor(), Int::from(-4));
    }

    #[test]
    fn poly_eval_and_minpoly() {
        // x² + 2x − 4 vanishes at √5 − 1
        let p = IntPoly::from_i64(&[-4, 2, 1]);
        let v = sqrt_u(5).sub(&Surd::from_rat(Rat::one())).unwrap();
        assert!(v.eval_intpoly(&p).is_zero());
        assert_eq!(v.minimal_poly(), p);
        let phi = Surd::new(rat_pq(1, 2), rat_pq(1, 2), 5).unwrap();
        assert_eq!(phi.minimal_poly(), IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn display_forms() {
        let v = sqrt_u(5).sub(&Surd::from_rat(Rat::one())).unwrap();
        assert_eq!(v.to_string(), "-1+sqrt(5)");
        assert_eq!(sqrt_u(3).to_string(), "sqrt(3)");
        assert_eq!(sqrt_u(3).neg().to_string(), "-sqrt(3)");
        let half_phi = Surd::new(rat_pq(1, 2), rat_pq(1, 2), 5).unwrap();
        assert_eq!(half_phi.to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!(Surd::from_rat(rat_pq(-3, 4)).to_string(), "-3/4");
    }
}
