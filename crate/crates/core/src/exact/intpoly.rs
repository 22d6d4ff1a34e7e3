use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{rat, Int, Rat};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers. Coefficients are stored
/// lowest-degree first and kept trimmed: the zero polynomial is the empty
/// vector, and a nonzero polynomial never has a zero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![Int::zero(), Int::one()])
    }

    pub fn constant(c: Int) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// Clears denominators: returns (q, d) with q ∈ Z[x] primitive-scaled by
    /// the common denominator d > 0, so q = d·p for the rational input p.
    pub fn from_rat_coeffs(coeffs: &[Rat]) -> (Self, Int) {
        let mut den = Int::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let ints = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (IntPoly::from_coeffs(ints), den)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some(c) if c.is_one())
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat(c.clone());
        }
        acc
    }

    /// Homogenized evaluation: den^deg(p) · p(num/den). Same sign as p(num/den)
    /// when den > 0, with no rational normalization along the way.
    pub fn eval_scaled(&self, num: &Int, den: &Int) -> Int {
        debug_assert!(den.is_positive());
        if self.coeffs.is_empty() {
            return Int::zero();
        }
        let mut denpow = Int::one();
        let mut terms: Vec<Int> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            terms.push(c * &denpow);
            denpow *= den;
        }
        let mut acc = Int::zero();
        for t in terms {
            acc = acc * num + t;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> Ordering {
        self.eval_scaled(x.numer(), x.denom()).cmp(&Int::zero())
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Int::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Int) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul_x(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Int::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly::from_coeffs(coeffs)
    }

    /// gcd of all coefficients, always ≥ 0; zero only for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, preserving sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive_part();
        match p.leading() {
            Some(c) if c.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Exact division; errors if `other` does not divide `self` over Z[x].
    pub fn exact_div(&self, other: &IntPoly) -> Result<IntPoly> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = self.degree().unwrap();
        let dg = other.degree().unwrap();
        if dd < dg {
            return Err(Error::Domain("inexact polynomial division".into()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); dd - dg + 1];
        let glc = other.leading().unwrap();
        for i in (0..quot.len()).rev() {
            let lead = std::mem::take(&mut rem[i + dg]);
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(glc);
            if !r.is_zero() {
                return Err(Error::Domain("inexact polynomial division".into()));
            }
            for (j, g) in other.coeffs.iter().enumerate().take(dg) {
                rem[i + j] -= &q * g;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain("inexact polynomial division".into()));
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder scaled so that it equals the true remainder of
    /// self/other up to a positive factor.
    pub fn signed_prem(&self, other: &IntPoly) -> IntPoly {
        let dd = self.degree().expect("nonzero dividend");
        let dg = other.degree().expect("nonzero divisor");
        debug_assert!(dd >= dg);
        let steps = (dd - dg + 1) as u32;
        let glc = other.leading().unwrap();
        let mut rem = self.coeffs.clone();
        for i in (0..steps as usize).rev() {
            // rem ← glc·rem − lead·x^i·other, keeping integer coefficients.
            let lead = rem[i + dg].clone();
            for c in rem.iter_mut() {
                *c *= glc;
            }
            if !lead.is_zero() {
                for (j, g) in other.coeffs.iter().enumerate() {
                    rem[i + j] -= &lead * g;
                }
            }
            debug_assert!(rem[i + dg].is_zero());
        }
        let mut r = IntPoly::from_coeffs(rem);
        // steps multiplications by glc flip the sign when glc < 0 and steps odd.
        if glc.is_negative() && steps % 2 == 1 {
            r = r.neg();
        }
        r
    }

    /// Polynomial gcd via the primitive PRS, returned primitive with a
    /// positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.primitive_positive();
            }
            if b.degree() == Some(0) {
                return IntPoly::one();
            }
            let r = if a.degree() >= b.degree() {
                a.signed_prem(&b).primitive_part()
            } else {
                a.clone()
            };
            a = b;
            b = r;
        }
    }

    /// Squarefree part: the product of distinct irreducible factors, primitive
    /// with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let p = self.primitive_positive();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return Ok(p);
        }
        Ok(p.exact_div(&g)?.primitive_positive())
    }

    /// Yun squarefree decomposition: returns pairs (fᵢ, i) with
    /// self = content · ∏ fᵢ^i, every fᵢ squarefree, pairwise coprime,
    /// primitive with positive leading coefficient, and deg fᵢ ≥ 1.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(IntPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.primitive_positive();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut out = Vec::new();
        let mut b = f.exact_div(&a0)?;
        let mut c = fp.exact_div(&a0)?;
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) >= 1 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a)?;
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// 1 + max |cᵢ|/|c_n|: every real root has absolute value below this.
    pub fn cauchy_bound(&self) -> Result<Rat> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?.abs();
        let mut max = Int::zero();
        for c in self.coeffs.iter().take(self.coeffs.len() - 1) {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        Ok(Rat::one() + Rat::new(max, lc))
    }

    /// p(-x): mirrors the roots. Useful for smallest-root queries.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Composition p(q(x)); used for small shifts like p(x+a).
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&IntPoly::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", sign)?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}
