//! The ring families the sweeps run over.

use crate::error::Result;
use crate::ring::{catalog, Ring, RingBuilder};

/// Primes used for prime-power local rings.
pub const LOCAL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
/// Field orders for the reduced-product sweep.
pub const FIELD_ORDERS: [u64; 6] = [2, 3, 4, 5, 7, 9];
/// Largest order in the mixed-product sweep.
pub const MIXED_ORDER_LIMIT: usize = 512;

/// Z_{p^k} for k >= 2 up to `max_order`, ascending by p then k.
pub fn prime_power_rings(builder: &RingBuilder, max_order: u64) -> Result<Vec<Ring>> {
    let mut out = Vec::new();
    for p in LOCAL_PRIMES {
        let mut q = p * p;
        while q <= max_order {
            out.push(builder.zn(q)?);
            q *= p;
        }
    }
    Ok(out)
}

/// Z_p[x]/(x^2) for the local primes.
pub fn dual_number_rings(builder: &RingBuilder) -> Result<Vec<Ring>> {
    LOCAL_PRIMES
        .iter()
        .map(|&p| builder.quotient(p, &[0, 0, 1]))
        .collect()
}

/// Prime powers up to 256, dual numbers and the seven exceptional rings.
pub fn local_catalog(builder: &RingBuilder) -> Result<Vec<Ring>> {
    let mut out = prime_power_rings(builder, 256)?;
    out.extend(dual_number_rings(builder)?);
    for slug in catalog::EXCEPTIONAL {
        out.push(catalog::load_with(builder, slug)?);
    }
    Ok(out)
}

/// Fields whose orders are listed in [`FIELD_ORDERS`].
pub fn small_fields(builder: &RingBuilder) -> Result<Vec<Ring>> {
    FIELD_ORDERS
        .iter()
        .map(|&q| {
            let (p, k) = crate::ring::prime_power(q).expect("listed orders are prime powers");
            builder.gf(p, k)
        })
        .collect()
}

/// Local rings used as factors of mixed products.
pub fn mixed_locals(builder: &RingBuilder) -> Result<Vec<Ring>> {
    let mut out = local_catalog(builder)?;
    out.push(catalog::load_with(builder, "Z2XY-X2-XY-Y2")?);
    Ok(out)
}

/// Non-decreasing index tuples of length `k` over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn order(rings: &[&Ring]) -> u128 {
    rings.iter().map(|r| r.order() as u128).product()
}

/// Products of 2 to 4 fields from [`small_fields`] with order at most `cap`.
pub fn reduced_products(builder: &RingBuilder) -> Result<Vec<Vec<Ring>>> {
    let fields = small_fields(builder)?;
    let mut out = Vec::new();
    for k in 2..=4 {
        for idx in multisets(fields.len(), k) {
            let fs: Vec<&Ring> = idx.iter().map(|&i| &fields[i]).collect();
            if order(&fs) <= builder.cap() as u128 {
                out.push(fs.into_iter().cloned().collect());
            }
        }
    }
    Ok(out)
}

/// Products of two or three catalog rings, at least one of them local and
/// not a field, with order at most [`MIXED_ORDER_LIMIT`]. Locals come first.
pub fn mixed_products(builder: &RingBuilder) -> Result<Vec<(Vec<Ring>, Vec<Ring>)>> {
    let locals = mixed_locals(builder)?;
    let fields = small_fields(builder)?;
    let limit = MIXED_ORDER_LIMIT.min(builder.cap()) as u128;
    let mut out = Vec::new();
    for k in 2..=3 {
        for m in 1..=k {
            for li in multisets(locals.len(), m) {
                let ls: Vec<&Ring> = li.iter().map(|&i| &locals[i]).collect();
                if order(&ls) > limit {
                    continue;
                }
                for fi in multisets(fields.len(), k - m) {
                    let fs: Vec<&Ring> = fi.iter().map(|&i| &fields[i]).collect();
                    if order(&ls) * order(&fs) <= limit {
                        out.push((
                            ls.iter().map(|&r| r.clone()).collect(),
                            fs.into_iter().cloned().collect(),
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Fixed mixed products with their expected answers.
pub fn mixed_anchors() -> Vec<(&'static str, bool)> {
    vec![
        ("Z4 x Z2", true),
        ("Z4 x Z3", true),
        ("Z9 x Z2", false),
        ("Z4 x Z4", false),
        ("Z2 x Z2 x Z2[x]/(x^2)", false),
        ("Z2 x @Z2XY-X2-XY-Y2", false),
    ]
}

/// Z_n for `lo <= n <= hi`.
pub fn integer_rings(builder: &RingBuilder, lo: u64, hi: u64) -> Result<Vec<Ring>> {
    (lo.max(2)..=hi).map(|n| builder.zn(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let b = RingBuilder::new();
        let local = local_catalog(&b).unwrap();
        // 4 8 16 32 64 128 256 | 9 27 81 243 | 25 125 | 49 | 121 | 169
        assert_eq!(local.len(), 16 + 6 + 7);
        assert!(local.iter().all(|r| r.is_local() && !r.is_field()));
        assert!(small_fields(&b).unwrap().iter().all(|f| f.is_field()));
        assert_eq!(multisets(6, 2).len(), 21);
        let reduced = reduced_products(&b).unwrap();
        assert_eq!(reduced.len(), 21 + 56 + 126 - too_big(&b));
        let mixed = mixed_products(&b).unwrap();
        assert!(mixed.iter().all(|(l, f)| {
            let o: usize = l.iter().chain(f).map(|r| r.order()).product();
            !l.is_empty() && o <= MIXED_ORDER_LIMIT && l.len() + f.len() >= 2
        }));
    }

    fn too_big(b: &RingBuilder) -> usize {
        let orders = FIELD_ORDERS;
        let mut n = 0;
        for k in 2..=4 {
            for idx in multisets(6, k) {
                let o: u64 = idx.iter().map(|&i| orders[i]).product();
                if o > b.cap() as u64 {
                    n += 1;
                }
            }
        }
        n
    }
}
