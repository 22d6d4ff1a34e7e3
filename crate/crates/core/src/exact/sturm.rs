use std::cmp::Ordering;

use num_traits::Zero;

use super::intpoly::IntPoly;
use super::rat::{rat_pq, Rat};
use super::surd::Surd;
use crate::error::{Error, Result};

/// Half-open isolating interval (lo, hi] for a single real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootBracket {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) * rat_pq(1, 2)
    }
}

/// Sturm chain of a squarefree polynomial: s₀ = p, s₁ = p′, and
/// s_{i+1} = −(s_{i−1} mod s_i), with each remainder reduced to its
/// primitive part (sign preserved) to control coefficient growth.
pub(crate) fn sturm_chain(p: &IntPoly) -> Result<Vec<IntPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    if p.degree() == Some(0) {
        return Ok(chain);
    }
    chain.push(p.derivative());
    loop {
        let n = chain.len();
        let rem = chain[n - 2].signed_prem(&chain[n - 1]);
        if rem.is_zero() {
            return Ok(chain);
        }
        chain.push(rem.neg().primitive_part());
    }
}

pub(crate) fn variation_count(signs: &[Ordering]) -> usize {
    let mut count = 0;
    let mut last: Option<Ordering> = None;
    for &s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Right-limit sign variation count V⁺(x): a vanishing s₀ takes the sign of
/// s₁ (the sign of p just right of one of its roots), later zeros are
/// dropped. For squarefree p, the number of roots in (a, b] is
/// V⁺(a) − V⁺(b).
fn vplus<F>(chain: &[IntPoly], sign_of: F) -> usize
where
    F: Fn(&IntPoly) -> Ordering,
{
    let mut signs: Vec<Ordering> = chain.iter().map(sign_of).collect();
    if signs.len() >= 2 && signs[0] == Ordering::Equal {
        signs[0] = signs[1];
    }
    variation_count(&signs)
}

fn sign_at_pos_inf(p: &IntPoly) -> Ordering {
    p.leading()
        .expect("chain elements are nonzero")
        .cmp(&num_bigint::BigInt::zero())
}

fn sign_at_neg_inf(p: &IntPoly) -> Ordering {
    let lead = sign_at_pos_inf(p);
    match p.degree() {
        Some(d) if d % 2 == 1 => lead.reverse(),
        _ => lead,
    }
}

pub(crate) fn vplus_rat(chain: &[IntPoly], x: &Rat) -> usize {
    vplus(chain, |p| p.sign_at(x))
}

pub(crate) fn variations_at_pos_inf(chain: &[IntPoly]) -> usize {
    variation_count(&chain.iter().map(sign_at_pos_inf).collect::<Vec<_>>())
}

fn v_neg_inf(chain: &[IntPoly]) -> usize {
    variation_count(&chain.iter().map(sign_at_neg_inf).collect::<Vec<_>>())
}

/// Number of distinct real roots of p in the half-open interval (a, b].
pub fn count_roots_in(p: &IntPoly, a: &Rat, b: &Rat) -> Result<usize> {
    if b <= a {
        return Ok(0);
    }
    let chain = sturm_chain(&p.squarefree_part()?)?;
    Ok(vplus_rat(&chain, a) - vplus_rat(&chain, b))
}

/// Number of distinct real roots of p strictly greater than a.
pub fn count_roots_gt(p: &IntPoly, a: &Rat) -> Result<usize> {
    let chain = sturm_chain(&p.squarefree_part()?)?;
    Ok(vplus_rat(&chain, a) - variations_at_pos_inf(&chain))
}

/// Number of distinct real roots strictly greater than a quadratic surd.
pub fn count_roots_gt_surd(p: &IntPoly, a: &Surd) -> Result<usize> {
    if let Some(r) = a.as_rat() {
        return count_roots_gt(p, r);
    }
    let chain = sturm_chain(&p.squarefree_part()?)?;
    let at = vplus(&chain, |q| a.eval_intpoly(q).signum());
    Ok(at - variations_at_pos_inf(&chain))
}

/// Total number of distinct real roots of p.
pub fn count_real_roots(p: &IntPoly) -> Result<usize> {
    let chain = sturm_chain(&p.squarefree_part()?)?;
    Ok(v_neg_inf(&chain) - variations_at_pos_inf(&chain))
}

/// Isolating brackets for every distinct real root of p, in increasing
/// order. Each bracket (lo, hi] contains exactly one root.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<RootBracket>> {
    let sf = p.squarefree_part()?;
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&sf)?;
    let bound = sf.cauchy_bound()?;
    let lo = -bound.clone();
    let mut out = Vec::new();
    // Roots are strictly inside (−B, B), so the initial half-open window
    // catches them all and subdivision endpoints behave consistently.
    subdivide(&chain, &lo, &bound, vplus_rat(&chain, &lo), vplus_rat(&chain, &bound), &mut out);
    Ok(out)
}

fn subdivide(
    chain: &[IntPoly],
    lo: &Rat,
    hi: &Rat,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<RootBracket>,
) {
    let count = v_lo - v_hi;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(RootBracket {
            lo: lo.clone(),
            hi: hi.clone(),
        });
        return;
    }
    let mid = (lo + hi) * rat_pq(1, 2);
    let v_mid = vplus_rat(chain, &mid);
    subdivide(chain, lo, &mid, v_lo, v_mid, out);
    subdivide(chain, &mid, hi, v_mid, v_hi, out);
}

/// Shrinks a bracket known to hold exactly one root of the squarefree chain
/// until its width is at most `target`.
pub(crate) fn refine_bracket(chain: &[IntPoly], bracket: &mut RootBracket, target: &Rat) {
    let v_hi = vplus_rat(chain, &bracket.hi);
    while bracket.width() > *target {
        let mid = bracket.mid();
        if vplus_rat(chain, &mid) == v_hi {
            bracket.hi = mid;
        } else {
            bracket.lo = mid;
        }
    }
}

/// Splits off every rational root: returns them sorted (without
/// multiplicity) together with the squarefree rational-root-free part.
///
/// A rational root u/v of the squarefree part (lowest terms) has v dividing
/// the leading coefficient L, so y = Lx maps it to an integer root of
/// L^{n−1}·p(y/L). Integer roots are pinned down by shrinking each isolating
/// bracket below width one and testing the single integer candidate.
pub fn split_rational_roots(p: &IntPoly) -> Result<(Vec<Rat>, IntPoly)> {
    let sf = p.squarefree_part()?;
    let n = match sf.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok((Vec::new(), sf)),
        Some(n) => n,
    };
    let lead = sf.leading().expect("degree checked above").clone();
    // q(y) = L^{n−1}·sf(y/L): coefficient of y^i is c_i·L^{n−1−i}, and the
    // top one collapses to c_n/L = 1, making q monic.
    let scaled: Vec<num_bigint::BigInt> = sf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == n {
                num_bigint::BigInt::from(1)
            } else {
                c * lead.pow((n - 1 - i) as u32)
            }
        })
        .collect();
    let q = IntPoly::from_coeffs(scaled);
    let chain = sturm_chain(&q)?;
    let one = Rat::from(num_bigint::BigInt::from(1));
    let mut roots = Vec::new();
    for mut bracket in isolate_real_roots(&q)? {
        // Width ≤ 1 leaves at most one integer in (lo, hi], namely ⌊hi⌋.
        refine_bracket(&chain, &mut bracket, &one);
        let lo_floor = bracket.lo.floor().to_integer();
        let hi_floor = bracket.hi.floor().to_integer();
        if hi_floor > lo_floor {
            let m = Rat::from(hi_floor);
            if q.sign_at(&m) == Ordering::Equal {
                roots.push(m / Rat::from(lead.clone()));
            }
        }
    }
    roots.sort();
    let mut rest = sf.primitive_positive();
    for r in &roots {
        let (factor, _den) = IntPoly::from_rat_coeffs(&[-r.clone(), one.clone()]);
        rest = rest.exact_div(&factor.primitive_positive())?.primitive_positive();
    }
    Ok((roots, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat_i, rat_pq};

    #[test]
    fn chain_of_squarefree_quadratic() {
        let p = IntPoly::from_i64(&[-1, 0, 1]); // x² − 1
        let chain = sturm_chain(&p).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[2].degree(), Some(0));
    }

    #[test]
    fn half_open_root_counts() {
        let p = IntPoly::from_i64(&[-1, 0, 1]); // roots ±1
        assert_eq!(count_roots_in(&p, &rat_i(0), &rat_i(1)).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &rat_i(1), &rat_i(2)).unwrap(), 0);
        assert_eq!(count_roots_in(&p, &rat_i(-1), &rat_i(1)).unwrap(), 1);
        assert_eq!(count_roots_in(&p, &rat_i(-2), &rat_i(1)).unwrap(), 2);
        assert_eq!(count_roots_gt(&p, &rat_i(-1)).unwrap(), 1);
        assert_eq!(count_roots_gt(&p, &rat_pq(-3, 2)).unwrap(), 2);
        assert_eq!(count_real_roots(&p).unwrap(), 2);
    }

    #[test]
    fn counts_ignore_multiplicity() {
        // (x−1)²(x+2)
        let p = IntPoly::from_i64(&[1, -1])
            .mul(&IntPoly::from_i64(&[1, -1]))
            .mul(&IntPoly::from_i64(&[2, 1]));
        assert_eq!(count_real_roots(&p).unwrap(), 2);
        assert_eq!(count_roots_gt(&p, &rat_i(0)).unwrap(), 1);
    }

    #[test]
    fn isolation_separates_close_roots() {
        // roots 1, 2, and 201/100
        let p = IntPoly::from_i64(&[-1, 1])
            .mul(&IntPoly::from_i64(&[-2, 1]))
            .mul(&IntPoly::from_i64(&[-201, 100]));
        let brackets = isolate_real_roots(&p).unwrap();
        assert_eq!(brackets.len(), 3);
        for w in brackets.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        assert_eq!(
            count_roots_in(&p, &brackets[1].lo, &brackets[1].hi).unwrap(),
            1
        );
    }

    #[test]
    fn surd_threshold_counts() {
        // x² − 2: one root above 0, none above √2, one above −√2... and the
        // boundary case: roots strictly greater than √2 itself is zero.
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let r2 = Surd::sqrt_of_rat(&rat_i(2)).unwrap();
        assert_eq!(count_roots_gt_surd(&p, &r2).unwrap(), 0);
        assert_eq!(count_roots_gt_surd(&p, &r2.neg()).unwrap(), 1);
        let just_below = Surd::new(rat_pq(-1, 100), Rat::from(num_bigint::BigInt::from(1)), 2).unwrap();
        assert_eq!(count_roots_gt_surd(&p, &just_below).unwrap(), 1);
    }

    #[test]
    fn rational_root_splitting() {
        // 6x³ − 5x² − 2x + 1 = (3x − 1)(2x + 1)(x − 1)
        let p = IntPoly::from_i64(&[1, -2, -5, 6]);
        let (roots, rest) = split_rational_roots(&p).unwrap();
        assert_eq!(roots, vec![rat_pq(-1, 2), rat_pq(1, 3), rat_i(1)]);
        assert_eq!(rest.degree(), Some(0));

        // (x² − 2)(x − 3): only the rational root splits off
        let p = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-3, 1]));
        let (roots, rest) = split_rational_roots(&p).unwrap();
        assert_eq!(roots, vec![rat_i(3)]);
        assert_eq!(rest, IntPoly::from_i64(&[-2, 0, 1]));

        // x² + 1: no real roots at all
        let (roots, rest) = split_rational_roots(&IntPoly::from_i64(&[1, 0, 1])).unwrap();
        assert!(roots.is_empty());
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn refinement_narrows_without_losing_the_root() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let chain = sturm_chain(&p).unwrap();
        let mut b = isolate_real_roots(&p).unwrap()[1].clone();
        refine_bracket(&chain, &mut b, &rat_pq(1, 1000));
        assert!(b.width() <= rat_pq(1, 1000));
        assert_eq!(count_roots_in(&p, &b.lo, &b.hi).unwrap(), 1);
        // √2 ≈ 1.41421356
        assert!(b.lo < rat_pq(14143, 10000));
        assert!(b.hi > rat_pq(14142, 10000));
    }
}
