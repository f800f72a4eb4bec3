//! Compensated summation.
//!
//! Quadrature sums feed identity checks with 1e-12-level tolerances, so the
//! plain left-to-right sum (error ~ n*eps) is not good enough on 2^16-point
//! grids. Neumaier's variant of Kahan summation keeps the error at a few eps
//! independent of length.

/// Neumaier compensated sum of an iterator of f64 terms.
pub fn csum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Compensated dot product.
pub fn cdot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    csum(a.iter().zip(b).map(|(x, y)| x * y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_cancellation() {
        // 1 + eps-sized terms that a naive sum loses
        let mut v = vec![1.0e16];
        v.extend(std::iter::repeat(1.0).take(10_000));
        v.push(-1.0e16);
        assert_eq!(csum(v), 10_000.0);
    }

    #[test]
    fn dot_matches_naive_on_small_input() {
        let a = [1.0, 2.0, 3.0];
        let b = [4.0, 5.0, 6.0];
        assert_eq!(cdot(&a, &b), 32.0);
    }
}
