//! Exact evaluation of the clique-count bounds. Integer and rational
//! arithmetic only.
//!
//! * `f_s(n,k,a) = C(k-a, s) + (n-k+a) C(a, s-1)`, the `K_s` count of `H(n,k,a)`;
//! * `g_s(n,k) = (n-1)/(k-2) C(k-1, s)` for graphs of circumference `< k`;
//! * `h_s(n,k) = n/(k-1) C(k-1, s)` for graphs without a `k`-vertex path.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{param, Result};

/// Binomial coefficient, zero outside `0 <= r <= n`.
///
/// Panics if the result overflows `u128`; every caller here stays far below
/// that (`n <= 120` is always safe).
pub fn binom(n: i64, r: i64) -> u128 {
    if n < 0 || r < 0 || r > n {
        return 0;
    }
    let r = r.min(n - r) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// Nonnegative exact rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundValue {
    pub numer: u128,
    pub denom: u128,
}

impl BoundValue {
    pub fn new(numer: u128, denom: u128) -> Self {
        assert!(denom > 0, "zero denominator");
        let g = numer.gcd(&denom).max(1);
        BoundValue {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn integer(v: u128) -> Self {
        BoundValue { numer: v, denom: 1 }
    }

    pub fn floor(&self) -> u128 {
        self.numer / self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    /// `self >= v` for an integer `v`.
    pub fn ge_int(&self, v: u128) -> bool {
        self.numer >= v * self.denom
    }

    pub fn eq_int(&self, v: u128) -> bool {
        self.denom == 1 && self.numer == v
    }
}

impl PartialOrd for BoundValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.numer * other.denom).cmp(&(other.numer * self.denom))
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

fn check_s(s: usize) -> Result<()> {
    if s < 2 {
        return param(format!("clique size s must be at least 2, got {s}"));
    }
    Ok(())
}

/// `⌊(k-1)/2⌋`, the upper endpoint for the cycle bounds.
pub fn cycle_t(k: usize) -> usize {
    (k - 1) / 2
}

/// `⌊(k-2)/2⌋`, the upper endpoint for the path bounds.
pub fn path_t(k: usize) -> usize {
    (k - 2) / 2
}

pub fn f_s(n: usize, k: usize, a: usize, s: usize) -> Result<u128> {
    check_s(s)?;
    if k < 3 || n < k || a == 0 || 2 * a >= k {
        return param(format!(
            "f_s needs k >= 3, n >= k, 1 <= a < k/2; got n = {n}, k = {k}, a = {a}"
        ));
    }
    Ok(f_unchecked(n, k, a, s))
}

fn f_unchecked(n: usize, k: usize, a: usize, s: usize) -> u128 {
    let (n, k, a, s) = (n as i64, k as i64, a as i64, s as i64);
    binom(k - a, s) + (n - k + a) as u128 * binom(a, s - 1)
}

/// Which endpoint(s) of the `a`-range attain a maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Low,
    High,
    Both,
}

/// `max{f_s(n, k', lo), f_s(n, k', hi)}` with both candidates kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointMax {
    pub value: u128,
    pub low_a: usize,
    pub low_value: u128,
    pub high_a: usize,
    pub high_value: u128,
    pub attained_at: Endpoint,
}

impl EndpointMax {
    fn of(n: usize, k: usize, lo: usize, hi: usize, s: usize) -> Self {
        let low_value = f_unchecked(n, k, lo, s);
        let high_value = f_unchecked(n, k, hi, s);
        let attained_at = match low_value.cmp(&high_value) {
            std::cmp::Ordering::Greater => Endpoint::Low,
            std::cmp::Ordering::Less => Endpoint::High,
            std::cmp::Ordering::Equal => Endpoint::Both,
        };
        EndpointMax {
            value: low_value.max(high_value),
            low_a: lo,
            low_value,
            high_a: hi,
            high_value,
            attained_at,
        }
    }

    /// The `a` values whose `H` graphs attain the maximum.
    pub fn maximizers(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if self.attained_at != Endpoint::High {
            out.push(self.low_a);
        }
        if self.attained_at != Endpoint::Low && self.high_a != self.low_a {
            out.push(self.high_a);
        }
        out
    }
}

/// `max{f_s(n,k,2), f_s(n,k,t)}`, `t = ⌊(k-1)/2⌋`, the bound for
/// 2-connected graphs with circumference below `k`.
pub fn cycle_bound(n: usize, k: usize, s: usize) -> Result<EndpointMax> {
    check_s(s)?;
    if k < 5 || n < k {
        return param(format!("cycle bound needs n >= k >= 5, got n = {n}, k = {k}"));
    }
    Ok(EndpointMax::of(n, k, 2, cycle_t(k), s))
}

/// `max{f_s(n,k-1,1), f_s(n,k-1,t')}`, `t' = ⌊(k-2)/2⌋`, the bound for
/// connected graphs without a path on `k` vertices.
pub fn path_bound(n: usize, k: usize, s: usize) -> Result<EndpointMax> {
    check_s(s)?;
    if k < 4 || n < k {
        return param(format!("path bound needs n >= k >= 4, got n = {n}, k = {k}"));
    }
    Ok(EndpointMax::of(n, k - 1, 1, path_t(k), s))
}

pub fn g_s(n: usize, k: usize, s: usize) -> Result<BoundValue> {
    check_s(s)?;
    if k < 3 || n == 0 {
        return param(format!("g_s needs n >= 1 and k >= 3, got n = {n}, k = {k}"));
    }
    Ok(BoundValue::new(
        (n as u128 - 1) * binom(k as i64 - 1, s as i64),
        k as u128 - 2,
    ))
}

pub fn h_s(n: usize, k: usize, s: usize) -> Result<BoundValue> {
    check_s(s)?;
    if k < 3 || n == 0 {
        return param(format!("h_s needs n >= 1 and k >= 3, got n = {n}, k = {k}"));
    }
    Ok(BoundValue::new(
        n as u128 * binom(k as i64 - 1, s as i64),
        k as u128 - 1,
    ))
}

/// True iff every discrete second difference of `a ↦ f_s(n,k,a)` over
/// `[1, ⌊(k-1)/2⌋]` is nonnegative. Vacuous when the range has at most two
/// points.
pub fn convexity_check(n: usize, k: usize, s: usize) -> Result<bool> {
    check_s(s)?;
    if k < 3 || n < k {
        return param(format!("convexity check needs n >= k >= 3, got n = {n}, k = {k}"));
    }
    let t = cycle_t(k);
    Ok((2..t).all(|a| {
        let mid = 2 * f_unchecked(n, k, a, s);
        f_unchecked(n, k, a + 1, s) + f_unchecked(n, k, a - 1, s) >= mid
    }))
}

/// `max_{1 <= a <= ⌊(k-1)/2⌋} f_s(n,k,a)` by direct evaluation of every `a`.
pub fn max_over_a(n: usize, k: usize, s: usize) -> Result<u128> {
    f_s(n, k, 1, s)?;
    Ok((1..=cycle_t(k)).map(|a| f_unchecked(n, k, a, s)).max().unwrap())
}
