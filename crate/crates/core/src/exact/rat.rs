use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Int = BigInt;

/// Reduced arbitrary-precision rational. `Ratio` keeps gcd(num, den) = 1 and
/// den > 0 as invariants, which is exactly the canonical form we need.
pub type Rat = Ratio<Int>;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(n: Int) -> Rat {
    Rat::from_integer(n)
}

pub fn rat_pq(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn rat_floor(x: &Rat) -> Int {
    x.floor().to_integer()
}

pub fn rat_is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    // Good enough for display and heuristics; exact paths never call this.
    x.to_f64().unwrap_or_else(|| {
        let scaled = (x * Rat::from_integer(Int::from(1u64 << 53))).floor();
        scaled.to_integer().to_f64().unwrap_or(f64::NAN) / (1u64 << 53) as f64
    })
}

/// Renders a rational as `p` or `p/q`.
pub fn rat_display(x: &Rat) -> String {
    if rat_is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact decimal rendering when the denominator is of the form 2^a·5^b,
/// otherwise `None`.
pub fn rat_decimal_exact(x: &Rat) -> Option<String> {
    let mut den = x.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = Int::from(2);
    let five = Int::from(5);
    while den.is_multiple_of(&two) {
        den /= &two;
        twos += 1;
    }
    while den.is_multiple_of(&five) {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let digits = twos.max(fives);
    let pow10 = Int::from(10).pow(digits);
    let scaled = (x * rat(pow10)).to_integer();
    let neg = scaled.is_negative();
    let mut s = scaled.abs().to_string();
    if digits == 0 {
        return Some(format!("{}{}", if neg { "-" } else { "" }, s));
    }
    while s.len() <= digits as usize {
        s.insert(0, '0');
    }
    s.insert(s.len() - digits as usize, '.');
    Some(format!("{}{}", if neg { "-" } else { "" }, s))
}

/// Smallest-denominator rational strictly inside the open interval (a, b),
/// by walking the continued-fraction expansions of the endpoints.
pub fn simplest_between(a: &Rat, b: &Rat) -> Rat {
    assert!(a < b, "needs a nonempty open interval");
    if a.is_negative() && b.is_positive() {
        return Rat::zero();
    }
    if b.is_negative() || b.is_zero() {
        return -simplest_between(&-b.clone(), &-a.clone());
    }
    if a.is_zero() {
        // (0, b): the smallest denominator q admitting 1/q < b.
        let q = (rat_i(1) / b).floor().to_integer() + 1;
        return Rat::new(Int::from(1), q);
    }
    let fa = rat_floor(a);
    let next_int = rat(&fa + 1);
    if next_int < *b {
        return next_int;
    }
    // No integer inside: recurse on the flipped fractional parts.
    let shift = rat(fa);
    let frac_a = a - &shift;
    if frac_a.is_zero() {
        // (n, b) with b ≤ n + 1: reduce to the (0, b − n) rule.
        let q = (rat_i(1) / (b - &shift)).floor().to_integer() + 1;
        return shift + Rat::new(Int::from(1), q);
    }
    let inner = simplest_between(&(rat_i(1) / (b - &shift)), &(rat_i(1) / frac_a));
    shift + rat_i(1) / inner
}

use num_traits::One;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced() {
        let x = rat_pq(6, -4);
        assert_eq!(x.numer(), &Int::from(-3));
        assert_eq!(x.denom(), &Int::from(2));
        assert_eq!(rat_display(&x), "-3/2");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rat_decimal_exact(&rat_pq(19, 10)).unwrap(), "1.9");
        assert_eq!(rat_decimal_exact(&rat_pq(-3, 8)).unwrap(), "-0.375");
        assert_eq!(rat_decimal_exact(&rat_pq(1, 3)), None);
        assert_eq!(rat_decimal_exact(&rat_i(14)).unwrap(), "14");
    }

    #[test]
    fn floor_of_negative() {
        assert_eq!(rat_floor(&rat_pq(-7, 2)), Int::from(-4));
        assert_eq!(rat_floor(&rat_pq(7, 2)), Int::from(3));
    }

    #[test]
    fn simplest_rational_search() {
        assert_eq!(simplest_between(&rat_pq(-1, 3), &rat_pq(1, 7)), rat_i(0));
        assert_eq!(simplest_between(&rat_pq(5, 2), &rat_pq(13, 3)), rat_i(3));
        assert_eq!(simplest_between(&rat_pq(59, 10), &rat_pq(61, 10)), rat_i(6));
        assert_eq!(simplest_between(&rat_pq(2, 7), &rat_pq(3, 7)), rat_pq(1, 3));
        assert_eq!(simplest_between(&rat_i(0), &rat_pq(1, 3)), rat_pq(1, 4));
        assert_eq!(
            simplest_between(&rat_pq(-61, 10), &rat_pq(-59, 10)),
            rat_i(-6)
        );
        // endpoints excluded: the interval (1/3, 1/2) skips both bounds
        let s = simplest_between(&rat_pq(1, 3), &rat_pq(1, 2));
        assert!(s > rat_pq(1, 3) && s < rat_pq(1, 2));
        assert_eq!(s, rat_pq(2, 5));
        // a tight window around 49/8 recovers it
        assert_eq!(
            simplest_between(&rat_pq(6119, 1000), &rat_pq(6131, 1000)),
            rat_pq(49, 8)
        );
    }
}
