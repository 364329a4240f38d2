//! Dense univariate polynomials over Z_n, coefficients stored low degree first.

/// Remainder of `a` modulo the monic polynomial `m`, coefficients in Z_n.
/// The result has exactly `deg m` coefficients.
pub(crate) fn rem_monic(a: &[u64], m: &[u64], n: u64) -> Vec<u64> {
    let d = m.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|c| c % n).collect();
    if r.len() < d {
        r.resize(d, 0);
        return r;
    }
    for top in (d..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, &mc) in m.iter().enumerate() {
            let k = top - d + i;
            r[k] = (r[k] + n - (c * mc) % n) % n;
        }
    }
    r.truncate(d);
    r
}

/// Decodes a base-`n` digit vector of length `len` (low digit first).
pub(crate) fn digits(mut index: usize, n: usize, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((index % n) as u64);
        index /= n;
    }
    out
}

pub(crate) fn undigits(coeffs: &[u64], n: usize) -> usize {
    coeffs
        .iter()
        .rev()
        .fold(0usize, |acc, &c| acc * n + c as usize)
}

/// True when the monic `f` has no monic factor of degree `1..=deg f / 2` over F_p.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    let pu = p as usize;
    for d in 1..=deg / 2 {
        let count = pu.pow(d as u32);
        for idx in 0..count {
            let mut g = digits(idx, pu, d);
            g.push(1);
            if rem_monic(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Polynomial text in the expression syntax, highest degree first: `x^2+2*x+1`.
pub(crate) fn format_modulus(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Element display name, lowest degree first: `1+2x+x^2`, using `var` as the variable.
pub(crate) fn format_element(coeffs: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_by_monic() {
        // x^3 mod (x^2 + x + 1) over F_2 is 1
        assert_eq!(rem_monic(&[0, 0, 0, 1], &[1, 1, 1], 2), vec![1, 0]);
        // x^2 mod x^2 over Z_5 is 0
        assert_eq!(rem_monic(&[0, 0, 1], &[0, 0, 1], 5), vec![0, 0]);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)^2
        assert!(is_irreducible(&[1, 1, 0, 0, 0, 0, 1], 2));
        assert!(is_irreducible(&[1, 2, 0, 1], 3));
        assert!(!is_irreducible(&[0, 0, 1], 5));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_modulus(&[1, 2, 1]), "x^2+2*x+1");
        assert_eq!(format_modulus(&[0, 0, 1]), "x^2");
        assert_eq!(format_element(&[1, 2, 1], "x"), "1+2x+x^2");
        assert_eq!(format_element(&[0, 0], "x"), "0");
    }
}
