//! Composite Simpson quadrature on the shared uniform grid of `[0, 1]`.

/// Simpson weights for `npts` equispaced points on `[0, 1]`.
///
/// `npts` must be odd and at least 3.
pub fn simpson_weights(npts: usize) -> Vec<f64> {
    assert!(npts >= 3 && npts % 2 == 1, "Simpson needs an odd point count");
    let h = 1.0 / (npts - 1) as f64;
    let mut w = vec![0.0; npts];
    for k in 0..(npts - 1) / 2 {
        w[2 * k] += h / 3.0;
        w[2 * k + 1] += 4.0 * h / 3.0;
        w[2 * k + 2] += h / 3.0;
    }
    w
}

/// Integrate sampled values against precomputed weights.
pub fn integrate(values: &[f64], weights: &[f64]) -> f64 {
    debug_assert_eq!(values.len(), weights.len());
    values.iter().zip(weights).map(|(v, w)| v * w).sum()
}

/// Grid coordinate of sample `i` out of `npts`.
pub fn grid_x(i: usize, npts: usize) -> f64 {
    i as f64 / (npts - 1) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_cubics() {
        let npts = 11;
        let w = simpson_weights(npts);
        let vals: Vec<f64> = (0..npts).map(|i| grid_x(i, npts).powi(3)).collect();
        assert!((integrate(&vals, &w) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn trig_accuracy() {
        let npts = 501;
        let w = simpson_weights(npts);
        let omega = 10.0 * std::f64::consts::PI;
        let vals: Vec<f64> = (0..npts).map(|i| (omega * grid_x(i, npts)).sin()).collect();
        let exact = (1.0 - omega.cos()) / omega;
        assert!((integrate(&vals, &w) - exact).abs() < 1e-10);
    }
}
