//! Presentations of finite rings.

use std::fmt;

use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::error::{Result, RingError};
use crate::poly;

/// A ring presentation. Coefficient lists are stored lowest degree first and
/// always include the leading `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum RingExpr {
    /// Z_n.
    Zn(u64),
    /// F_{p^e} = F_p[x]/(modulus).
    Gf { p: u64, e: u32, modulus: Vec<u64> },
    /// Z_n[x]/(modulus) for a monic modulus of degree at least 1.
    PolyQuot { n: u64, modulus: Vec<u64> },
    /// base[x1..xm]/(xi*xj for all i, j); the base is `Zn` or `Gf`.
    SquareZero { base: Box<RingExpr>, m: u32 },
    /// Direct product of the listed rings.
    Prod(Vec<RingExpr>),
}

// Moduli for the small fields, as coefficient lists (low degree first).
const BUNDLED_MODULI: &[(u64, &[u64])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 0, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
    (49, &[1, 0, 1]),
    (64, &[1, 1, 0, 0, 0, 0, 1]),
];

/// The modulus used for `GF(q)` when none is given: the bundled polynomial for
/// q <= 64, otherwise the smallest monic irreducible polynomial in base-p order.
pub fn default_modulus(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let q = p.pow(e);
    if let Some((_, m)) = BUNDLED_MODULI.iter().find(|(bq, _)| *bq == q) {
        return m.to_vec();
    }
    let pu = p as usize;
    (0..pu.pow(e))
        .map(|idx| {
            let mut f = poly::digits(idx, pu, e as usize);
            f.push(1);
            f
        })
        .find(|f| poly::is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

impl RingExpr {
    pub fn zn(n: u64) -> Self {
        RingExpr::Zn(n)
    }

    /// `GF(q)` with the default modulus.
    pub fn gf(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| RingError::InvalidExpr(format!("GF({q}): {q} is not a prime power")))?;
        Ok(RingExpr::Gf {
            p,
            e,
            modulus: default_modulus(p, e),
        })
    }

    /// Z_p for prime `q`, GF(q) otherwise. Used wherever "the field with q
    /// elements" is needed.
    pub fn field(q: u64) -> Result<Self> {
        if is_prime(q) {
            Ok(RingExpr::Zn(q))
        } else {
            RingExpr::gf(q)
        }
    }

    pub fn poly_quot(n: u64, modulus: Vec<u64>) -> Self {
        RingExpr::PolyQuot { n, modulus }
    }

    pub fn square_zero(base: RingExpr, m: u32) -> Self {
        RingExpr::SquareZero {
            base: Box::new(base),
            m,
        }
    }

    pub fn prod(factors: Vec<RingExpr>) -> Self {
        RingExpr::Prod(factors)
    }

    /// Number of elements of the presented ring, `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            RingExpr::Zn(n) => Some(*n as u128),
            RingExpr::Gf { p, e, .. } => (*p as u128).checked_pow(*e),
            RingExpr::PolyQuot { n, modulus } => {
                (*n as u128).checked_pow(modulus.len().saturating_sub(1) as u32)
            }
            RingExpr::SquareZero { base, m } => base.order()?.checked_pow(m + 1),
            RingExpr::Prod(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RingExpr::Zn(n) => {
                if *n == 0 {
                    return Err(RingError::InvalidExpr("Z0 is not a finite ring".into()));
                }
            }
            RingExpr::Gf { p, e, modulus } => {
                if !is_prime(*p) {
                    return Err(RingError::InvalidExpr(format!("GF: {p} is not prime")));
                }
                if *e == 0 {
                    return Err(RingError::InvalidExpr(
                        "GF: degree must be at least 1".into(),
                    ));
                }
                check_monic(modulus, *p)?;
                if modulus.len() != *e as usize + 1 {
                    return Err(RingError::InvalidModulus(format!(
                        "modulus {} has degree {}, expected {e}",
                        poly::format_modulus(modulus),
                        modulus.len() - 1
                    )));
                }
                if !poly::is_irreducible(modulus, *p) {
                    return Err(RingError::InvalidModulus(format!(
                        "{} is reducible over F_{p}",
                        poly::format_modulus(modulus)
                    )));
                }
            }
            RingExpr::PolyQuot { n, modulus } => {
                if *n == 0 {
                    return Err(RingError::InvalidExpr("Z0 is not a finite ring".into()));
                }
                check_monic(modulus, *n)?;
                if modulus.len() < 2 {
                    return Err(RingError::InvalidModulus(
                        "modulus must have degree at least 1".into(),
                    ));
                }
            }
            RingExpr::SquareZero { base, .. } => {
                if !matches!(**base, RingExpr::Zn(_) | RingExpr::Gf { .. }) {
                    return Err(RingError::InvalidExpr("SZ base must be Zn or GF(q)".into()));
                }
                base.validate()?;
            }
            RingExpr::Prod(fs) => {
                if fs.is_empty() {
                    return Err(RingError::InvalidExpr("empty product".into()));
                }
                for f in fs {
                    f.validate()?;
                }
            }
        }
        Ok(())
    }
}

fn check_monic(modulus: &[u64], n: u64) -> Result<()> {
    if modulus.iter().any(|&c| c >= n) {
        return Err(RingError::InvalidModulus(format!(
            "coefficients of {} must be reduced modulo {n}",
            poly::format_modulus(modulus)
        )));
    }
    match modulus.last() {
        Some(1) => Ok(()),
        _ if n == 1 => Ok(()),
        _ => Err(RingError::InvalidModulus(format!(
            "{} is not monic",
            poly::format_modulus(modulus)
        ))),
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::Gf { p, e, modulus } => {
                let q = p.pow(*e);
                if *modulus == default_modulus(*p, *e) {
                    write!(f, "GF({q})")
                } else {
                    write!(f, "GF({q},{})", poly::format_modulus(modulus))
                }
            }
            RingExpr::PolyQuot { n, modulus } => {
                write!(f, "Z{n}[x]/({})", poly::format_modulus(modulus))
            }
            RingExpr::SquareZero { base, m } => write!(f, "SZ({base},{m})"),
            RingExpr::Prod(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    if matches!(factor, RingExpr::Prod(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_moduli_are_irreducible() {
        for (q, m) in BUNDLED_MODULI {
            let (p, e) = prime_power(*q).unwrap();
            assert_eq!(m.len(), e as usize + 1);
            assert!(poly::is_irreducible(m, p), "GF({q})");
        }
    }

    #[test]
    fn default_modulus_beyond_table() {
        // 125 = 5^3; x^3 + x + 1 has no root mod 5 (values 1, 3, 1, 1, 4)
        assert_eq!(default_modulus(5, 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(RingExpr::zn(12).to_string(), "Z12");
        assert_eq!(RingExpr::gf(4).unwrap().to_string(), "GF(4)");
        let custom = RingExpr::Gf {
            p: 3,
            e: 2,
            modulus: vec![2, 2, 1],
        };
        assert_eq!(custom.to_string(), "GF(9,x^2+2*x+2)");
        assert_eq!(
            RingExpr::poly_quot(5, vec![0, 0, 1]).to_string(),
            "Z5[x]/(x^2)"
        );
        assert_eq!(
            RingExpr::square_zero(RingExpr::zn(2), 3).to_string(),
            "SZ(Z2,3)"
        );
        let p = RingExpr::prod(vec![
            RingExpr::zn(4),
            RingExpr::prod(vec![RingExpr::zn(3), RingExpr::zn(5)]),
        ]);
        assert_eq!(p.to_string(), "Z4 x (Z3 x Z5)");
    }

    #[test]
    fn validation() {
        assert!(RingExpr::gf(6).is_err());
        let reducible = RingExpr::Gf {
            p: 2,
            e: 2,
            modulus: vec![1, 0, 1],
        };
        assert!(matches!(
            reducible.validate(),
            Err(RingError::InvalidModulus(_))
        ));
        let not_monic = RingExpr::poly_quot(5, vec![0, 0, 2]);
        assert!(matches!(
            not_monic.validate(),
            Err(RingError::InvalidModulus(_))
        ));
        assert!(RingExpr::prod(vec![]).validate().is_err());
        assert!(
            RingExpr::square_zero(RingExpr::prod(vec![RingExpr::zn(2)]), 1)
                .validate()
                .is_err()
        );
        assert_eq!(RingExpr::square_zero(RingExpr::zn(2), 5).order(), Some(64));
    }
}
