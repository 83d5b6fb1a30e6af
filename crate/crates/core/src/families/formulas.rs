//! Closed-form spanning tree counts.
//!
//! Arguments follow the family notation: `m` and `n` are part sizes, `k` and
//! `ks` are edge multiplicities. Out-of-range arguments panic; validated
//! entry points live on [`FamilySpec`](super::FamilySpec).

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::BigCount;

fn big(v: u32) -> BigUint {
    BigUint::from(v)
}

fn sum(values: &[u32]) -> BigUint {
    values.iter().map(|&v| big(v)).sum()
}

fn product(values: &[u32]) -> BigUint {
    values.iter().map(|&v| big(v)).product()
}

/// Generalized cone `C^m K_n`: `m (m + n)^(n-1)`, and 1 when `n = 0`.
pub fn formula_cone(m: u32, n: u32) -> BigCount {
    assert!(m >= 1, "cone multiplicity must be positive");
    if n == 0 {
        return BigCount::one();
    }
    big(m) * (big(m) + big(n)).pow(n - 1)
}

/// Cayley: `K_n` has `n^(n-2)` spanning trees.
pub fn formula_complete(n: u32) -> BigCount {
    assert!(n >= 1, "complete graph needs a vertex");
    if n == 1 {
        return BigCount::one();
    }
    big(n).pow(n - 2)
}

/// `M^k K_{m,n}`: `k n^(m-1) (m + k - 1)^(n-1)`.
pub fn formula_modified_bipartite(k: u32, m: u32, n: u32) -> BigCount {
    assert!(k >= 1 && m >= 1 && n >= 1, "parameters must be positive");
    big(k) * big(n).pow(m - 1) * (big(m) + big(k) - 1u32).pow(n - 1)
}

/// `K_{m,n}`: `n^(m-1) m^(n-1)`.
pub fn formula_bipartite(m: u32, n: u32) -> BigCount {
    assert!(m >= 1 && n >= 1, "parameters must be positive");
    big(n).pow(m - 1) * big(m).pow(n - 1)
}

/// `M^{k_1..k_m} K_{m,n}`: `n^(m-1) P T^(n-1)` with `P = prod k_i`,
/// `T = sum k_i`.
pub fn formula_generalized_bipartite(ks: &[u32], n: u32) -> BigCount {
    assert!(!ks.is_empty() && ks.iter().all(|&k| k >= 1), "multiplicities must be positive");
    assert!(n >= 1, "n must be positive");
    let m = ks.len() as u32;
    big(n).pow(m - 1) * product(ks) * sum(ks).pow(n - 1)
}

/// Generalized half cone `F^k M^{k_1..k_m} K_{m,n}`.
///
/// The count is `T^(n-1) k prod_i (k + k_i n) sum_i k_i / (k + k_i n)`; it is
/// evaluated without division as `T^(n-1) k sum_i k_i prod_{j != i} (k + k_j n)`.
pub fn formula_half_cone(k: u32, ks: &[u32], n: u32) -> BigCount {
    assert!(k >= 1 && n >= 1, "parameters must be positive");
    assert!(!ks.is_empty() && ks.iter().all(|&k| k >= 1), "multiplicities must be positive");
    let factors: Vec<BigUint> = ks.iter().map(|&ki| big(k) + big(ki) * n).collect();
    let mut inner = BigUint::ZERO;
    for (i, &ki) in ks.iter().enumerate() {
        let others: BigUint = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| f)
            .product();
        inner += big(ki) * others;
    }
    sum(ks).pow(n - 1) * big(k) * inner
}

/// Half cone with every `k_i = s`: `s^n m^n k (k + s n)^(m-1)`.
pub fn formula_half_cone_uniform(k: u32, s: u32, m: u32, n: u32) -> BigCount {
    assert!(k >= 1 && s >= 1 && m >= 1 && n >= 1, "parameters must be positive");
    big(s).pow(n) * big(m).pow(n) * big(k) * (big(k) + big(s) * n).pow(m - 1)
}

/// Complete multipartite `K_{n_1..n_k}`: `N^(k-2) prod_i (N - n_i)^(n_i - 1)`.
pub fn formula_multipartite(parts: &[u32]) -> Result<BigCount> {
    if parts.len() < 2 {
        return Err(Error::InvalidPartition(parts.len()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidSpec("multipartite parts must be positive".into()));
    }
    let total = sum(parts);
    let mut count = total.pow(parts.len() as u32 - 2);
    for &p in parts {
        count *= (&total - p).pow(p - 1);
    }
    Ok(count)
}
