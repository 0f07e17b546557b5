//! Small integer/float helpers used across the pipeline.

/// Relative tolerance inside which a float is considered "already an integer"
/// before a ceiling is applied. Guards against values like 18.999999999998
/// produced by log arithmetic being bumped to 20.
pub(crate) const CEIL_SNAP_REL: f64 = 1e-9;

/// Ceiling with integer snapping: values within [`CEIL_SNAP_REL`] (relative)
/// of an integer round to it instead of ceiling past it.
pub(crate) fn ceil_snapped(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= CEIL_SNAP_REL * x.abs().max(1.0) {
        r
    } else {
        x.ceil()
    }
}

/// Exact `ceil(log2(m))` for `m >= 1`.
pub(crate) fn ceil_log2(m: u64) -> u32 {
    if m <= 1 {
        0
    } else {
        64 - (m - 1).leading_zeros()
    }
}

/// Exact `ceil(sqrt(m))`.
pub(crate) fn ceil_sqrt(m: u64) -> u64 {
    let s = m.isqrt();
    if s * s < m {
        s + 1
    } else {
        s
    }
}

/// Standard normal CDF, Abramowitz & Stegun 26.2.17 (|error| < 7.5e-8).
pub(crate) fn normal_cdf(x: f64) -> f64 {
    const B: [f64; 5] = [
        0.319_381_530,
        -0.356_563_782,
        1.781_477_937,
        -1.821_255_978,
        1.330_274_429,
    ];
    let t = 1.0 / (1.0 + 0.231_641_9 * x.abs());
    let poly = t * (B[0] + t * (B[1] + t * (B[2] + t * (B[3] + t * B[4]))));
    let pdf = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let upper_tail = pdf * poly;
    if x >= 0.0 {
        1.0 - upper_tail
    } else {
        upper_tail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_exact() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(17), 5);
        assert_eq!(ceil_log2(19), 5);
        assert_eq!(ceil_log2(190), 8);
    }

    #[test]
    fn ceil_sqrt_exact() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(17), 5);
        assert_eq!(ceil_sqrt(200), 15);
        assert_eq!(ceil_sqrt(928), 31);
    }

    #[test]
    fn snapping_keeps_near_integers() {
        assert_eq!(ceil_snapped(19.000000000001), 19.0);
        assert_eq!(ceil_snapped(18.999999999999), 19.0);
        assert_eq!(ceil_snapped(18.288), 19.0);
        assert_eq!(ceil_snapped(5.83), 6.0);
    }

    #[test]
    fn normal_cdf_reference_points() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-7);
        assert!((normal_cdf(1.0) - 0.841_344_746).abs() < 1e-6);
        assert!((normal_cdf(3.090_232) - 0.999).abs() < 1e-6);
        assert!((normal_cdf(-1.0) - 0.158_655_254).abs() < 1e-6);
    }
}
