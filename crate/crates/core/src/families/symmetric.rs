//! Subset-sum identities behind the bipartite and half cone counts, with
//! elementary symmetric polynomials and exact binomials.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::BigCount;

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `e_r(values)`: the sum of all products of `r` distinct entries.
pub fn elementary_symmetric(values: &[u32], r: usize) -> Result<BigCount> {
    if r > values.len() {
        return Err(Error::InvalidIndex {
            index: r,
            min: 0,
            max: values.len(),
        });
    }
    // coefficients of prod (1 + v x), truncated at degree r
    let mut e = vec![BigUint::ZERO; r + 1];
    e[0] = BigUint::one();
    for (seen, &v) in values.iter().enumerate() {
        for d in (1..=r.min(seen + 1)).rev() {
            let add = &e[d - 1] * v;
            e[d] += add;
        }
    }
    Ok(e.swap_remove(r))
}

fn check_subset_size(values: &[u32], j: usize) -> Result<()> {
    if j == 0 || j > values.len() {
        return Err(Error::InvalidIndex {
            index: j,
            min: 1,
            max: values.len(),
        });
    }
    Ok(())
}

/// Both sides of
/// `sum_{|B| = j} sum_{k in B} k = C(m-1, j-1) (k_1 + .. + k_m)`:
/// the left by enumerating subsets, the right in closed form.
pub fn lemma_sum_over_subsets(values: &[u32], j: usize) -> Result<(BigCount, BigCount)> {
    check_subset_size(values, j)?;
    let lhs: BigUint = values
        .iter()
        .combinations(j)
        .map(|subset| subset.into_iter().map(|&k| BigUint::from(k)).sum::<BigUint>())
        .sum();
    let total: BigUint = values.iter().map(|&k| BigUint::from(k)).sum();
    let rhs = binomial(values.len() as u64 - 1, j as u64 - 1) * total;
    Ok((lhs, rhs))
}

/// Both sides of
/// `sum_{|B| = j} (prod_{A - B} k) (sum_B k) = (m - j + 1) e_{m-j+1}(A)`:
/// the left by enumerating index subsets, the right from `e_r`.
pub fn lemma_complement_product_sum(values: &[u32], j: usize) -> Result<(BigCount, BigCount)> {
    check_subset_size(values, j)?;
    let m = values.len();
    let mut lhs = BigUint::ZERO;
    for subset in (0..m).combinations(j) {
        let inside: BigUint = subset.iter().map(|&i| BigUint::from(values[i])).sum();
        let outside: BigUint = (0..m)
            .filter(|i| !subset.contains(i))
            .map(|i| BigUint::from(values[i]))
            .product();
        lhs += inside * outside;
    }
    let r = m - j + 1;
    let rhs = BigUint::from(r) * elementary_symmetric(values, r)?;
    Ok((lhs, rhs))
}

/// `[x d/dy prod_i (x + k_i y)]` at `x = k`, `y = n`, expanded as
/// `sum_{j=1..m} k^j n^(m-j) (m-j+1) e_{m-j+1}(ks)`. Multiplied by
/// `(sum ks)^(n-1)` it gives the half cone count.
pub fn half_cone_derivative_identity(k: u32, ks: &[u32], n: u32) -> BigCount {
    assert!(k >= 1 && n >= 1 && !ks.is_empty(), "parameters must be positive");
    let m = ks.len();
    let mut total = BigUint::ZERO;
    for j in 1..=m {
        let r = m - j + 1;
        let e = elementary_symmetric(ks, r).expect("r <= m");
        total += BigUint::from(k).pow(j as u32)
            * BigUint::from(n).pow((m - j) as u32)
            * BigUint::from(r)
            * e;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::formulas::formula_half_cone;

    fn c(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), c(10));
        assert_eq!(binomial(5, 0), c(1));
        assert_eq!(binomial(0, 0), c(1));
        assert_eq!(binomial(3, 4), c(0));
        assert_eq!(binomial(28, 7), c(1_184_040));
        assert_eq!(binomial(60, 30), c(118_264_581_564_861_424));
    }

    #[test]
    fn elementary() {
        assert_eq!(elementary_symmetric(&[1, 2, 3], 2).unwrap(), c(11));
        assert_eq!(elementary_symmetric(&[4, 9], 0).unwrap(), c(1));
        assert_eq!(elementary_symmetric(&[], 0).unwrap(), c(1));
        assert_eq!(elementary_symmetric(&[2, 3, 5], 3).unwrap(), c(30));
        assert_eq!(
            elementary_symmetric(&[2, 3], 3),
            Err(Error::InvalidIndex { index: 3, min: 0, max: 2 })
        );
    }

    #[test]
    fn lemma_sums() {
        assert_eq!(lemma_sum_over_subsets(&[1, 2, 3], 2).unwrap(), (c(12), c(12)));
        assert_eq!(lemma_sum_over_subsets(&[4, 1, 7], 1).unwrap(), (c(12), c(12)));
        assert_eq!(lemma_sum_over_subsets(&[4, 1, 7], 3).unwrap(), (c(12), c(12)));
        assert!(lemma_sum_over_subsets(&[4, 1, 7], 0).is_err());
        assert!(lemma_sum_over_subsets(&[4, 1, 7], 4).is_err());
    }

    #[test]
    fn lemma_complements() {
        assert_eq!(lemma_complement_product_sum(&[1, 2, 3], 2).unwrap(), (c(22), c(22)));
        assert_eq!(lemma_complement_product_sum(&[2, 3, 4], 3).unwrap(), (c(9), c(9)));
        assert_eq!(lemma_complement_product_sum(&[5], 1).unwrap(), (c(5), c(5)));
        assert!(lemma_complement_product_sum(&[], 1).is_err());
    }

    #[test]
    fn derivative_identity() {
        assert_eq!(half_cone_derivative_identity(2, &[1, 1], 3), c(20));
        assert_eq!(half_cone_derivative_identity(2, &[1, 3], 3), c(52));
        assert_eq!(half_cone_derivative_identity(3, &[4], 1), c(12));
        assert_eq!(c(16) * c(52), formula_half_cone(2, &[1, 3], 3));
    }
}
