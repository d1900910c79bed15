//! Small statistics toolbox: weighted least squares for log-log exponent
//! fits, the two-sample Kolmogorov-Smirnov test, and a Hill tail estimator.

/// Result of a straight-line fit y = intercept + slope * x.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_se: f64,
    pub intercept_se: f64,
}

/// Weighted least squares with per-point standard deviations `sigma`.
pub fn wls_line(x: &[f64], y: &[f64], sigma: &[f64]) -> LineFit {
    assert!(x.len() == y.len() && y.len() == sigma.len());
    assert!(x.len() >= 2, "need at least two points for a line fit");
    let w: Vec<f64> = sigma.iter().map(|s| 1.0 / (s * s)).collect();
    let sw: f64 = w.iter().sum();
    let swx: f64 = w.iter().zip(x).map(|(w, x)| w * x).sum();
    let swy: f64 = w.iter().zip(y).map(|(w, y)| w * y).sum();
    let swxx: f64 = w.iter().zip(x).map(|(w, x)| w * x * x).sum();
    let swxy: f64 = w
        .iter()
        .zip(x.iter().zip(y))
        .map(|(w, (x, y))| w * x * y)
        .sum();
    let det = sw * swxx - swx * swx;
    let slope = (sw * swxy - swx * swy) / det;
    let intercept = (swxx * swy - swx * swxy) / det;
    LineFit {
        slope,
        intercept,
        slope_se: (sw / det).sqrt(),
        intercept_se: (swxx / det).sqrt(),
    }
}

/// Ordinary least squares (unit weights).
pub fn ols_line(x: &[f64], y: &[f64]) -> LineFit {
    let ones = vec![1.0; x.len()];
    wls_line(x, y, &ones)
}

/// Two-sample Kolmogorov-Smirnov test result.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct KsTest {
    pub statistic: f64,
    pub p_value: f64,
}

/// Kolmogorov distribution tail Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2).
fn ks_q(lambda: f64) -> f64 {
    if lambda < 1e-8 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let term = (-2.0 * (k as f64) * (k as f64) * lambda * lambda).exp();
        sum += sign * term;
        sign = -sign;
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Two-sample KS statistic and asymptotic p-value (with the usual
/// small-sample correction of the effective size).
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> KsTest {
    assert!(!a.is_empty() && !b.is_empty());
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(f64::total_cmp);
    sb.sort_by(f64::total_cmp);
    let (n, m) = (sa.len(), sb.len());
    let mut i = 0;
    let mut j = 0;
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let xa = sa[i];
        let xb = sb[j];
        if xa <= xb {
            i += 1;
        }
        if xb <= xa {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let ne = (n as f64 * m as f64) / (n as f64 + m as f64);
    let lambda = (ne.sqrt() + 0.12 + 0.11 / ne.sqrt()) * d;
    KsTest {
        statistic: d,
        p_value: ks_q(lambda),
    }
}

/// Hill estimator of a right-tail power exponent from the `k` largest order
/// statistics: returns the estimated tail index alpha in P(X > x) ~ x^-alpha.
pub fn hill_tail_index(samples: &[f64], k: usize) -> f64 {
    assert!(k >= 2 && k < samples.len());
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    let x_k = s[n - k - 1];
    let mean_log: f64 = s[n - k..].iter().map(|x| (x / x_k).ln()).sum::<f64>() / k as f64;
    1.0 / mean_log
}

/// Sample mean and the standard error of the mean.
pub fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}
