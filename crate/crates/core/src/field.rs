//! Table-driven arithmetic for the finite fields F_q, q = p^m <= 256.
//!
//! An element is an integer in `0..q`; the integer x stands for the
//! polynomial over F_p whose base-p digits are its coefficients, constant
//! term least significant. All four operations are O(1) table lookups after
//! construction, and the tables are verified against the field axioms
//! exhaustively before a field is handed out.

use crate::error::RingError;

/// Largest field order for which lookup tables are built.
pub const MAX_FIELD_ORDER: usize = 256;

/// F_q with full add/mul/neg/inv lookup tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: usize,
    /// Monic degree-m modulus, constant term first, length m+1.
    modulus: Vec<u8>,
    add_table: Vec<u8>,
    mul_table: Vec<u8>,
    neg_table: Vec<u8>,
    /// inv_table[0] is unused and holds 0.
    inv_table: Vec<u8>,
}

/// Deterministic trial-division primality test (inputs are tiny).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Degree of a coefficient list, `None` for the zero polynomial.
fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo the monic polynomial `b`, over F_p.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_degree(b).expect("divisor must be nonzero");
    let mut r: Vec<u64> = a.to_vec();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr];
        let shift = dr - db;
        for j in 0..=db {
            let sub = (c * b[j]) % p;
            r[shift + j] = (r[shift + j] + p - sub) % p;
        }
    }
    r
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
/// Returns the smallest monic divisor on failure.
fn irreducibility_witness(modulus: &[u64], p: u64) -> Option<Vec<u64>> {
    let deg = poly_degree(modulus).unwrap_or(0);
    for d in 1..=deg / 2 {
        let count = (p as u128).pow(d as u32) as u64;
        for v in 0..count {
            // Monic candidate of degree d; low coefficients are the base-p
            // digits of v with the constant term most significant, so that
            // candidates appear in lexicographic coefficient order.
            let mut divisor = vec![0u64; d + 1];
            divisor[d] = 1;
            let mut rest = v;
            for coeff in divisor.iter_mut().take(d).rev() {
                *coeff = rest % p;
                rest /= p;
            }
            let r = poly_rem(modulus, &divisor, p);
            if poly_degree(&r).is_none() {
                return Some(divisor);
            }
        }
    }
    None
}

/// Lexicographically smallest monic irreducible of degree m over F_p,
/// coefficient lists compared constant term first.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let count = (p as u128).pow(m as u32);
    for v in 0..count {
        let mut poly = vec![0u64; m + 1];
        poly[m] = 1;
        let mut rest = v;
        for i in (0..m).rev() {
            poly[i] = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        if irreducibility_witness(&poly, p).is_none() {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Build F_{p^m}. When `modulus` is omitted the lexicographically smallest
/// monic irreducible of degree m is selected, so the construction is
/// deterministic.
pub fn make_field(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<FiniteField, RingError> {
    FiniteField::build(p, m, modulus)
}

impl FiniteField {
    /// F_{p^m} with the default (smallest) modulus.
    pub fn new(p: u64, m: u32) -> Result<Self, RingError> {
        Self::build(p, m, None)
    }

    /// F_{p^m} with an explicit monic irreducible modulus.
    pub fn with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<Self, RingError> {
        Self::build(p, m, Some(modulus))
    }

    fn build(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::NonPrime(p));
        }
        if m == 0 {
            return Err(RingError::InvalidParameter(
                "extension degree m must be at least 1".into(),
            ));
        }
        let q128 = (p as u128).pow(m);
        if q128 > MAX_FIELD_ORDER as u128 {
            return Err(RingError::SizeExceeded {
                size: q128,
                bound: MAX_FIELD_ORDER as u128,
            });
        }
        let q = q128 as usize;

        let modulus: Vec<u64> = match modulus {
            Some(given) => {
                if given.len() != m as usize + 1 {
                    return Err(RingError::InvalidParameter(format!(
                        "modulus must have {} coefficients (degree {m}), got {}",
                        m + 1,
                        given.len()
                    )));
                }
                if given[m as usize] != 1 {
                    return Err(RingError::InvalidParameter(
                        "modulus must be monic".into(),
                    ));
                }
                if given.iter().any(|&c| c >= p) {
                    return Err(RingError::InvalidParameter(format!(
                        "modulus coefficients must lie in 0..{p}"
                    )));
                }
                if let Some(divisor) = irreducibility_witness(given, p) {
                    return Err(RingError::Reducible {
                        p,
                        poly: given.to_vec(),
                        divisor,
                    });
                }
                given.to_vec()
            }
            None => smallest_irreducible(p, m),
        };

        let m_us = m as usize;
        let decode = |x: usize| -> Vec<u64> {
            let mut digits = vec![0u64; m_us];
            let mut rest = x as u64;
            for d in digits.iter_mut() {
                *d = rest % p;
                rest /= p;
            }
            digits
        };
        let encode = |digits: &[u64]| -> usize {
            let mut x = 0u64;
            for &d in digits.iter().rev() {
                x = x * p + d;
            }
            x as usize
        };

        let mut add_table = vec![0u8; q * q];
        let mut mul_table = vec![0u8; q * q];
        let mut neg_table = vec![0u8; q];
        for a in 0..q {
            let da = decode(a);
            let neg: Vec<u64> = da.iter().map(|&d| (p - d) % p).collect();
            neg_table[a] = encode(&neg) as u8;
            for b in 0..q {
                let db = decode(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add_table[a * q + b] = encode(&sum) as u8;

                let mut prod = vec![0u64; 2 * m_us - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // Reduce modulo the monic modulus: x^m = -sum_{j<m} c_j x^j.
                for pos in (m_us..2 * m_us - 1).rev() {
                    let c = prod[pos];
                    if c != 0 {
                        prod[pos] = 0;
                        for j in 0..m_us {
                            let sub = (c * modulus[j]) % p;
                            prod[pos - m_us + j] = (prod[pos - m_us + j] + p - sub) % p;
                        }
                    }
                }
                mul_table[a * q + b] = encode(&prod[..m_us]) as u8;
            }
        }

        let mut inv_table = vec![0u8; q];
        for a in 1..q {
            let mut found = false;
            for b in 1..q {
                if mul_table[a * q + b] == 1 {
                    inv_table[a] = b as u8;
                    found = true;
                    break;
                }
            }
            if !found {
                // Unreachable for an irreducible modulus; caught by the
                // axiom sweep below in any case.
                break;
            }
        }

        let modulus_u8: Vec<u8> = modulus.iter().map(|&c| c as u8).collect();
        let field = FiniteField {
            p,
            m,
            q,
            modulus: modulus_u8,
            add_table,
            mul_table,
            neg_table,
            inv_table,
        };
        if let Err(detail) = field.verify_axioms() {
            return Err(RingError::Violation {
                context: "field construction",
                detail,
            });
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    /// Field order q = p^m.
    pub fn order(&self) -> usize {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add_table[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul_table[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for 0.
    pub fn inv(&self, a: u8) -> Option<u8> {
        if a == 0 {
            None
        } else {
            Some(self.inv_table[a as usize])
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q).map(|x| x as u8)
    }

    /// Exhaustive check of every field axiom over all of F_q.
    pub fn verify_axioms(&self) -> Result<(), String> {
        let all = || (0..self.q).map(|x| x as u8);

        for a in all() {
            if self.add(a, 0) != a || self.add(0, a) != a {
                return Err(format!("0 is not an additive identity at {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(format!("{a} + (-{a}) != 0"));
            }
            if self.mul(a, 1) != a || self.mul(1, a) != a {
                return Err(format!("1 is not a multiplicative identity at {a}"));
            }
            if a != 0 {
                let i = self.inv_table[a as usize];
                if self.mul(a, i) != 1 || self.mul(i, a) != 1 {
                    return Err(format!("{a} has no inverse"));
                }
            }
        }
        for a in all() {
            for b in all() {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("multiplication not commutative at ({a},{b})"));
                }
            }
        }
        for a in all() {
            for b in all() {
                for c in all() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_tables() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(
            (0..2)
                .map(|a| (0..2).map(|b| f.add(a, b)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert_eq!(
            (0..2)
                .map(|a| (0..2).map(|b| f.mul(a, b)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            vec![vec![0, 0], vec![0, 1]]
        );
    }

    #[test]
    fn f4_default_modulus_is_smallest_irreducible() {
        // Monic degree-2 polynomials over F_2 in lexicographic coefficient
        // order: x^2, x^2+1, x^2+x, x^2+x+1. Only the last has no root.
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // With t the class of x: t*t = t+1, i.e. 2*2 = 3.
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
    }

    #[test]
    fn four_is_not_prime() {
        assert_eq!(FiniteField::new(4, 1), Err(RingError::NonPrime(4)));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over F_2.
        let err = FiniteField::with_modulus(2, 2, &[1, 0, 1]).unwrap_err();
        match err {
            RingError::Reducible { divisor, .. } => assert_eq!(divisor, vec![1, 1]),
            other => panic!("expected Reducible, got {other:?}"),
        }
    }

    #[test]
    fn size_bound_enforced() {
        assert!(matches!(
            FiniteField::new(2, 9),
            Err(RingError::SizeExceeded { .. })
        ));
    }

    #[test]
    fn larger_fields_pass_the_axiom_sweep() {
        for (p, m) in [(2, 3), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3), (5, 2)] {
            let f = FiniteField::new(p, m).unwrap();
            assert_eq!(f.order(), (p as usize).pow(m));
            assert!(f.verify_axioms().is_ok());
        }
    }

    #[test]
    fn f256_constructs() {
        let f = FiniteField::new(2, 8).unwrap();
        assert_eq!(f.order(), 256);
        assert_eq!(f.modulus().len(), 9);
    }

    #[test]
    fn inverses_cover_all_nonzero_elements() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in 1..9u8 {
            let i = f.inv(a).unwrap();
            assert_eq!(f.mul(a, i), 1);
        }
        assert_eq!(f.inv(0), None);
    }
}
