//! Exact binomial coefficients and factorials for small arguments.

/// Largest argument for which [`binomial`] is exact.
pub const MAX_EXACT: u32 = 30;

/// `C(n, k)` computed in integer arithmetic, then converted.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    assert!(n <= 60, "binomial arguments above 60 overflow u64 arithmetic");
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u64 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc as f64
}

/// `n!` as a float; exact up to `n = 22`.
pub fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}
