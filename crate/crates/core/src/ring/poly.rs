//! Dense polynomials over Z_m, coefficients stored constant term first.

/// Drops trailing zero coefficients. The zero polynomial is the empty vector.
pub fn trim(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn reduce_coeffs(p: &[u64], m: u64) -> Vec<u64> {
    trim(p.iter().map(|c| c % m).collect())
}

/// Degree of a trimmed polynomial; `None` for zero.
pub fn degree(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

pub fn mul(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % m;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo the monic polynomial `f`.
pub fn rem_monic(a: &[u64], f: &[u64], m: u64) -> Vec<u64> {
    let d = f.len() - 1;
    debug_assert_eq!(f[d] % m, 1 % m, "modulus must be monic");
    let mut r: Vec<u64> = a.iter().map(|c| c % m).collect();
    while r.len() > d {
        let lead = r.pop().unwrap_or(0);
        if lead == 0 {
            continue;
        }
        let shift = r.len() - d;
        for (i, &fc) in f[..d].iter().enumerate() {
            let sub = (lead * fc) % m;
            r[shift + i] = (r[shift + i] + m - sub) % m;
        }
    }
    trim(r)
}

/// Irreducibility over the prime field Z_p by trial division with every
/// monic polynomial of degree 1..=deg/2.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = reduce_coeffs(f, p);
    let Some(d) = degree(&f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for g_deg in 1..=d / 2 {
        let count = p.pow(g_deg as u32);
        for t in 0..count {
            let mut g = digits(t, p, g_deg);
            g.push(1);
            if rem_monic(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The smallest monic irreducible polynomial of degree `k` over Z_p, where
/// candidates are ordered lexicographically by `(c0, c1, .., c_{k-1})`.
pub fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for t in 0..count {
        // c0 is the most significant digit of t, so t order is tuple order
        let mut f: Vec<u64> = digits(t, p, k).into_iter().rev().collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Little-endian base-`b` digits of `x`, exactly `len` of them.
pub fn digits(mut x: u64, b: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % b);
        x /= b;
    }
    out
}

pub fn from_digits(ds: &[u64], b: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * b + d)
}

/// Renders `p` in the variable `var`, highest degree first: `2x^2+x+1`.
pub fn render(p: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (e, &c) in p.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (e, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}{var}"),
            (e, 1) => format!("{var}^{e}"),
            (e, c) => format!("{c}{var}^{e}"),
        };
        terms.push(term);
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
        // x^3 + 1 mod (x^2 + 1) over Z_3: x^3 = -x, so remainder is 1 - x = 2x + 1
        assert_eq!(rem_monic(&[1, 0, 0, 1], &[1, 0, 1], 3), vec![1, 2]);
        assert_eq!(rem_monic(&[0, 0, 1], &[0, 0, 1], 4), Vec::<u64>::new());
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 1), vec![0, 1]);
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 0, 1, 1]);
    }

    #[test]
    fn irreducibility_matches_root_search_for_low_degree() {
        // degree 2 and 3 polynomials are irreducible iff they have no root
        for p in [2u64, 3, 5] {
            for d in 2..=3usize {
                for t in 0..p.pow(d as u32) {
                    let mut f = digits(t, p, d);
                    f.push(1);
                    let has_root = (0..p).any(|x| {
                        f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0
                    });
                    assert_eq!(is_irreducible(&f, p), !has_root, "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn render_forms() {
        assert_eq!(render(&[1, 1, 2], "x"), "2x^2+x+1");
        assert_eq!(render(&[], "x"), "0");
        assert_eq!(render(&[0, 3], "x"), "3x");
    }
}
