//! Graded dimensions of free restricted Lie algebras.
//!
//! Two independent routes: a closed formula summing Witt numbers over the
//! p-power exponents, and a power-series solver that inverts the restricted
//! PBW identity `prod_d ((1 - x^{pd}) / (1 - x^d))^{a_d} = 1 / (1 - G(x))`,
//! where `G(x)` counts the free generators by weight.

fn mobius(n: u64) -> i128 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of Lyndon words of length `m` over `r` letters.
pub fn witt_number(r: u64, m: u64) -> u64 {
    if m == 0 {
        return 0;
    }
    let total: i128 = (1..=m)
        .filter(|e| m.is_multiple_of(*e))
        .map(|e| mobius(e) * (r as i128).pow((m / e) as u32))
        .sum();
    (total / m as i128) as u64
}

/// `a_1..a_n`: dimension of the weight-`d` component of the free restricted
/// Lie algebra on `r` generators, where `[w]^{[p^e]}` has weight `|w| p^e`.
pub fn graded_dims(r: u64, p: u64, n: usize) -> Vec<u64> {
    (1..=n as u64)
        .map(|d| {
            let mut total = 0;
            let mut pe = 1;
            while d % pe == 0 {
                total += witt_number(r, d / pe);
                pe *= p;
            }
            total
        })
        .collect()
}

/// Series route for `r` generators of weight one.
pub fn series_dims(r: u64, p: u64, n: usize) -> Vec<u64> {
    weighted_free_dims(&vec![1; r as usize], p, n)
}

// truncated product of two series, both of length n + 1
fn series_mul(a: &[u128], b: &[u128]) -> Vec<u128> {
    let n = a.len();
    let mut out = vec![0u128; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_pow(base: &[u128], mut e: u64) -> Vec<u128> {
    let mut out = vec![0u128; base.len()];
    out[0] = 1;
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            out = series_mul(&out, &b);
        }
        e >>= 1;
        if e > 0 {
            b = series_mul(&b, &b);
        }
    }
    out
}

/// Graded dimensions of the free restricted Lie algebra on generators of the
/// given positive weights, up to weight `n`.
pub fn weighted_free_dims(weights: &[usize], p: u64, n: usize) -> Vec<u64> {
    assert!(weights.iter().all(|&w| w >= 1), "generator weights must be positive");
    // coefficients of 1 / (1 - G(x))
    let mut target = vec![0u128; n + 1];
    target[0] = 1;
    for d in 1..=n {
        target[d] = weights.iter().filter(|&&w| w <= d).map(|&w| target[d - w]).sum();
    }
    let mut product = vec![0u128; n + 1];
    product[0] = 1;
    let mut dims = Vec::with_capacity(n);
    for d in 1..=n {
        let a = target[d]
            .checked_sub(product[d])
            .expect("restricted PBW series has nonnegative solution");
        dims.push(a as u64);
        if a == 0 {
            continue;
        }
        // 1 + x^d + ... + x^{(p-1)d}
        let mut factor = vec![0u128; n + 1];
        for j in 0..p as usize {
            if j * d <= n {
                factor[j * d] = 1;
            }
        }
        product = series_mul(&product, &series_pow(&factor, a as u64));
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freerla::lyndon;

    #[test]
    fn witt_numbers() {
        let w2: Vec<u64> = (1..=8).map(|m| witt_number(2, m)).collect();
        assert_eq!(w2, vec![2, 1, 2, 3, 6, 9, 18, 30]);
        let w3: Vec<u64> = (1..=3).map(|m| witt_number(3, m)).collect();
        assert_eq!(w3, vec![3, 3, 8]);
        let counts = lyndon::count_by_length(3, 8);
        for m in 1..=8 {
            assert_eq!(witt_number(3, m as u64), counts[m]);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(graded_dims(2, 2, 6), vec![2, 3, 2, 6, 6, 11]);
        assert_eq!(graded_dims(3, 2, 3), vec![3, 6, 8]);
        assert_eq!(graded_dims(1, 5, 4), vec![1, 0, 0, 0]);
        // x, x^[2], x^[4]
        assert_eq!(graded_dims(1, 2, 4), vec![1, 1, 0, 1]);
        assert_eq!(graded_dims(2, 3, 3), vec![2, 1, 4]);
    }

    #[test]
    fn routes_agree() {
        for r in 1..=4 {
            for p in [2, 3, 5] {
                assert_eq!(graded_dims(r, p, 12), series_dims(r, p, 12), "r={r} p={p}");
            }
        }
    }

    #[test]
    fn weighted_generators() {
        // gens of weights 1, 2, 2 over p = 2: 1/(1 - x - 2x^2) = 1 + x + 3x^2 + ...
        let d = weighted_free_dims(&[1, 2, 2], 2, 4);
        assert_eq!(d[0], 1);
        assert_eq!(d[1], 3);
        assert_eq!(weighted_free_dims(&[], 2, 3), vec![0, 0, 0]);
    }
}
