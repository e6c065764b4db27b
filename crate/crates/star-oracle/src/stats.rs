//! Small statistics helpers shared by validation tests.

/// Standard error of a binomial frequency estimate.
pub fn binomial_sigma(p_hat: f64, n: u64) -> f64 {
    ((p_hat * (1.0 - p_hat)).max(1.0 / n as f64) / n as f64).sqrt()
}

/// Least-squares slope of ln(y) against ln(x).
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let lx = x.ln();
        let ly = y.ln();
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Pearson chi-squared statistic against expected counts.
pub fn chi_squared(observed: &[u64], expected: &[f64]) -> f64 {
    observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| {
            let d = o as f64 - e;
            d * d / e.max(1e-12)
        })
        .sum()
}

/// Loose upper quantile for a chi-squared variable with `df` degrees of
/// freedom: df + 6 * sqrt(2 df) + 10 sits far beyond the 1 - 1e-6 quantile
/// for the df used in tests, so exceeding it indicates a real defect
/// rather than statistical noise.
pub fn chi_squared_bound(df: usize) -> f64 {
    let df = df as f64;
    df + 6.0 * (2.0 * df).sqrt() + 10.0
}
