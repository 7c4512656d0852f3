/// Width of statistical acceptance bands, in standard deviations.
pub const DEFAULT_SIGMAS: f64 = 4.0;

/// Standard deviation of a binomial count with `n` trials and success
/// probability `p`.
pub fn binomial_sigma(n: usize, p: f64) -> f64 {
    (n as f64 * p * (1.0 - p)).sqrt()
}

/// Wilson score interval for `successes` out of `n` at `z` standard
/// deviations.
pub fn wilson_interval(successes: usize, n: usize, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}
