//! The binomial recurrences obtained by expanding the most symmetric vertex of
//! each family, evaluated with memoization and no closed form.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::symmetric::binomial;
use crate::BigCount;

/// `t(C^m K_n) = sum_{j=1..n} C(n, j) m^j t(C^j K_{n-j})`, expanding the apex.
/// Identifying `j` of the apex's neighbours in `K_n` leaves `C^j K_{n-j}`.
pub fn cone_recurrence_dp(m: u32, n: u32) -> BigCount {
    assert!(m >= 1, "cone multiplicity must be positive");
    let mut memo = HashMap::new();
    cone(m, n, &mut memo)
}

fn cone(m: u32, n: u32, memo: &mut HashMap<(u32, u32), BigCount>) -> BigCount {
    match n {
        0 => return BigCount::from(1u32),
        1 => return BigCount::from(m),
        _ => {}
    }
    if let Some(hit) = memo.get(&(m, n)) {
        return hit.clone();
    }
    let mut total = BigCount::ZERO;
    for j in 1..=n {
        total += binomial(n as u64, j as u64) * BigUint::from(m).pow(j) * cone(j, n - j, memo);
    }
    memo.insert((m, n), total.clone());
    total
}

/// `t(M^k K_{m,n}) = sum_{j=1..n} C(n, j) k^j t(M^j K_{n-j+1, m-1})`,
/// expanding `q_m`. After deletion the roles of the two sides swap.
pub fn modified_bipartite_recurrence_dp(k: u32, m: u32, n: u32) -> BigCount {
    assert!(k >= 1 && m >= 1 && n >= 1, "parameters must be positive");
    let mut memo = HashMap::new();
    modified(k, m, n, &mut memo)
}

fn modified(k: u32, m: u32, n: u32, memo: &mut HashMap<(u32, u32, u32), BigCount>) -> BigCount {
    if n == 1 {
        return BigCount::from(k);
    }
    if m == 1 {
        return BigCount::from(k).pow(n);
    }
    if let Some(hit) = memo.get(&(k, m, n)) {
        return hit.clone();
    }
    let mut total = BigCount::ZERO;
    for j in 1..=n {
        total += binomial(n as u64, j as u64)
            * BigUint::from(k).pow(j)
            * modified(j, n - j + 1, m - 1, memo);
    }
    memo.insert((k, m, n), total.clone());
    total
}
