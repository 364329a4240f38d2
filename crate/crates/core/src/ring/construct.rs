use std::sync::Arc;

use super::FiniteRing;
use crate::error::{Result, RingError};
use crate::expr::RingExpr;
use crate::poly;
use crate::Limits;

/// Builds the operation tables for `expr` under the default limits.
pub fn make_ring(expr: &RingExpr) -> Result<Arc<FiniteRing>> {
    make_ring_with(expr, &Limits::default())
}

pub fn make_ring_with(expr: &RingExpr, limits: &Limits) -> Result<Arc<FiniteRing>> {
    expr.validate()?;
    let order = expr.order().unwrap_or(u128::MAX);
    // element indices are stored as u16 with u16::MAX reserved
    let limit = limits.max_order.min(u16::MAX as usize);
    if order > limit as u128 {
        return Err(RingError::OrderLimitExceeded { order, limit });
    }
    build(expr).map(Arc::new)
}

fn build(expr: &RingExpr) -> Result<FiniteRing> {
    let label = expr.to_string();
    match expr {
        RingExpr::Zn(n) => {
            let n = *n as usize;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    add.push(((i + j) % n) as u16);
                    mul.push(((i * j) % n) as u16);
                }
            }
            let names = (0..n).map(|i| i.to_string()).collect();
            FiniteRing::from_tables(n, add, mul, 0, 1 % n, names, Some(expr.clone()), label)
        }
        RingExpr::Gf { p, modulus, .. } => poly_quotient(*p, modulus, expr.clone(), label),
        RingExpr::PolyQuot { n, modulus } => poly_quotient(*n, modulus, expr.clone(), label),
        RingExpr::SquareZero { base, m } => {
            let base = build(base)?;
            square_zero(&base, *m as usize, expr.clone(), label)
        }
        RingExpr::Prod(factors) => {
            let rings = factors.iter().map(build).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&FiniteRing> = rings.iter().collect();
            FiniteRing::product_of(&refs, Some(expr.clone()), label)
        }
    }
}

/// Z_n[x]/(f) for monic f. Elements are coefficient vectors, index
/// `c0 + c1 n + c2 n^2 + ...`.
fn poly_quotient(n: u64, modulus: &[u64], expr: RingExpr, label: String) -> Result<FiniteRing> {
    let d = modulus.len() - 1;
    let nu = n as usize;
    let order = nu.pow(d as u32);
    let coeffs: Vec<Vec<u64>> = (0..order).map(|i| poly::digits(i, nu, d)).collect();

    let mut add = vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            let sum: Vec<u64> = coeffs[a]
                .iter()
                .zip(&coeffs[b])
                .map(|(x, y)| (x + y) % n)
                .collect();
            add[a * order + b] = poly::undigits(&sum, nu) as u16;
        }
    }

    // Multiplication by x, reduced modulo f.
    let times_x: Vec<usize> = coeffs
        .iter()
        .map(|c| {
            let mut shifted = vec![0u64; d + 1];
            shifted[1..].copy_from_slice(c);
            poly::undigits(&poly::rem_monic(&shifted, modulus, n), nu)
        })
        .collect();

    // Row a is filled left to right: b = c0 + rest, where rest = x * (b / n)
    // when c0 = 0.
    let mut mul = vec![0u16; order * order];
    for a in 0..order {
        let row = a * order;
        mul[row] = 0;
        for b in 1..order {
            let c0 = b % nu;
            let v = if c0 == 0 {
                times_x[mul[row + b / nu] as usize]
            } else if b < nu {
                add[mul[row + b - 1] as usize * order + a] as usize
            } else {
                add[mul[row + c0] as usize * order + mul[row + b - c0] as usize] as usize
            };
            mul[row + b] = v as u16;
        }
    }

    let names = coeffs
        .iter()
        .map(|c| poly::format_element(c, "x"))
        .collect();
    let one = if order == 1 { 0 } else { 1 % order };
    FiniteRing::from_tables(order, add, mul, 0, one, names, Some(expr), label)
}

/// base[x1..xm]/(xi xj): pairs (a, v) with (a, v)(b, w) = (ab, aw + bv).
/// Index digits in base |B|: the constant first, then the coefficient of xi.
fn square_zero(base: &FiniteRing, m: usize, expr: RingExpr, label: String) -> Result<FiniteRing> {
    let b = base.order();
    let order = b.pow(m as u32 + 1);
    let parts: Vec<Vec<u64>> = (0..order).map(|i| poly::digits(i, b, m + 1)).collect();
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut sum = vec![0u64; m + 1];
    let mut prod = vec![0u64; m + 1];
    for x in 0..order {
        let px = &parts[x];
        for y in 0..order {
            let py = &parts[y];
            for i in 0..=m {
                sum[i] = base.add(px[i] as usize, py[i] as usize) as u64;
            }
            let (a0, b0) = (px[0] as usize, py[0] as usize);
            prod[0] = base.mul(a0, b0) as u64;
            for i in 1..=m {
                let t = base.add(base.mul(a0, py[i] as usize), base.mul(b0, px[i] as usize));
                prod[i] = t as u64;
            }
            add[x * order + y] = poly::undigits(&sum, b) as u16;
            mul[x * order + y] = poly::undigits(&prod, b) as u16;
        }
    }
    let base_names = base.element_names();
    let names = parts
        .iter()
        .map(|p| {
            let mut terms = Vec::new();
            if p[0] != 0 {
                terms.push(base_names[p[0] as usize].clone());
            }
            for (i, &c) in p.iter().enumerate().skip(1) {
                if c == 0 {
                    continue;
                }
                let coeff = &base_names[c as usize];
                terms.push(if c as usize == base.one() {
                    format!("x{i}")
                } else if coeff.parse::<u64>().is_ok() {
                    format!("{coeff}x{i}")
                } else {
                    format!("({coeff})x{i}")
                });
            }
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let one = poly::undigits(
        &{
            let mut v = vec![0u64; m + 1];
            v[0] = base.one() as u64;
            v
        },
        b,
    );
    FiniteRing::from_tables(order, add, mul, 0, one, names, Some(expr), label)
}

impl FiniteRing {
    /// Direct product; the element `(a_1, .., a_k)` has index
    /// `a_1 |R_2|..|R_k| + .. + a_k` (first factor most significant).
    pub fn product(factors: &[Arc<FiniteRing>], label: Option<String>) -> Result<FiniteRing> {
        let refs: Vec<&FiniteRing> = factors.iter().map(|f| f.as_ref()).collect();
        let presentation = refs
            .iter()
            .map(|f| f.presentation().cloned())
            .collect::<Option<Vec<_>>>()
            .map(RingExpr::Prod);
        let label = label.unwrap_or_else(|| match &presentation {
            Some(p) => p.to_string(),
            None => refs
                .iter()
                .map(|f| f.label().to_string())
                .collect::<Vec<_>>()
                .join(" x "),
        });
        FiniteRing::product_of(&refs, presentation, label)
    }

    pub(crate) fn product_of(
        factors: &[&FiniteRing],
        presentation: Option<RingExpr>,
        label: String,
    ) -> Result<FiniteRing> {
        let sizes: Vec<usize> = factors.iter().map(|f| f.order()).collect();
        let order = sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .filter(|&o| o <= u16::MAX as usize)
            .ok_or(RingError::OrderLimitExceeded {
                order: u128::MAX,
                limit: u16::MAX as usize,
            })?;
        let tuples: Vec<Vec<usize>> = (0..order).map(|i| split_index(i, &sizes)).collect();
        let join = |t: &[usize]| {
            t.iter()
                .zip(&sizes)
                .fold(0usize, |acc, (&a, &s)| acc * s + a)
        };
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut s = vec![0usize; sizes.len()];
        let mut p = vec![0usize; sizes.len()];
        for x in 0..order {
            for y in 0..order {
                for (k, f) in factors.iter().enumerate() {
                    s[k] = f.add(tuples[x][k], tuples[y][k]);
                    p[k] = f.mul(tuples[x][k], tuples[y][k]);
                }
                add[x * order + y] = join(&s) as u16;
                mul[x * order + y] = join(&p) as u16;
            }
        }
        let names = tuples
            .iter()
            .map(|t| {
                let inner: Vec<&str> = t.iter().zip(factors).map(|(&a, f)| f.name(a)).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        let zero: Vec<usize> = factors.iter().map(|f| f.zero()).collect();
        let one: Vec<usize> = factors.iter().map(|f| f.one()).collect();
        FiniteRing::from_tables(
            order,
            add,
            mul,
            join(&zero),
            join(&one),
            names,
            presentation,
            label,
        )
    }
}

/// Mixed-radix split of a product index, first factor most significant.
pub(crate) fn split_index(mut index: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize; sizes.len()];
    for k in (0..sizes.len()).rev() {
        out[k] = index % sizes[k];
        index /= sizes[k];
    }
    out
}
