//! Finite fields of order at most 9, as dense operation tables.
//!
//! Elements are the integers 0..q with 0 and 1 the additive and
//! multiplicative identities. Prime fields reduce mod p; the three prime
//! powers are quotients by fixed irreducibles over the prime subfield,
//! chosen once so element numbering is reproducible:
//!
//!   F4 = F2[x]/(x² + x + 1)    element a₀ + a₁x ↦ a₀ + 2a₁
//!   F8 = F2[x]/(x³ + x + 1)    element a₀ + a₁x + a₂x² ↦ a₀ + 2a₁ + 4a₂
//!   F9 = F3[x]/(x² + 2x + 2)   element a₀ + a₁x ↦ a₀ + 3a₁

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Debug, Clone)]
pub struct FiniteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<FiniteField> {
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(Error::UnsupportedField(q));
        }
        let (p, deg, modulus): (usize, usize, &[usize]) = match q {
            4 => (2, 2, &[1, 1, 1]),
            8 => (2, 3, &[1, 1, 0, 1]),
            9 => (3, 2, &[2, 2, 1]),
            _ => (q as usize, 1, &[]),
        };
        let q = q as usize;
        let digits = |e: usize| -> Vec<usize> {
            let mut out = vec![0; deg];
            let mut e = e;
            for d in out.iter_mut() {
                *d = e % p;
                e /= p;
            }
            out
        };
        let pack = |c: &[usize]| -> u8 {
            c.iter().rev().fold(0, |acc, &d| acc * p + d) as u8
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = pack(&sum);

                // Schoolbook product reduced by the modulus; for deg 1 the
                // modulus is empty and the product is plain mod p.
                let mut prod = vec![0usize; 2 * deg - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for i in (deg..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &m) in modulus[..deg].iter().enumerate() {
                        let idx = i - deg + j;
                        prod[idx] = (prod[idx] + c * (p - m) % p) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..deg]);
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u8;
                }
                if a != 0 && mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Ok(FiniteField { q, add, mul, neg, inv })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; a must be nonzero.
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsupported_orders() {
        for q in [0, 1, 6, 10, 16, 25] {
            assert!(matches!(
                FiniteField::new(q),
                Err(Error::UnsupportedField(o)) if o == q
            ));
        }
    }

    #[test]
    fn field_axioms_hold_over_the_full_tables() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            let q = q as u8;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "inverse of {a} in F{q}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity at ({a},{b},{c}) in F{q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_groups_are_cyclic() {
        for q in SUPPORTED_ORDERS {
            let f = FiniteField::new(q).unwrap();
            let found = (1..q as u8).any(|g| {
                let mut seen = vec![false; q as usize];
                let mut x = 1u8;
                for _ in 0..q - 1 {
                    x = f.mul(x, g);
                    seen[x as usize] = true;
                }
                (1..q as usize).all(|e| seen[e])
            });
            assert!(found, "no generator in F{q}");
        }
    }
}
