//! Central-difference Jacobians.

use crate::{Result, StatError};

/// `J[i][j] = ∂f_i/∂x_j` by central differences with step `h`; entry error
/// is O(h²) for smooth maps. The map may fail (e.g. a probe point leaves
/// the moment space); that surfaces as `EvaluationFailure`.
pub fn jacobian_fd<F, E>(map: F, x0: &[f64], h: f64) -> Result<Vec<Vec<f64>>>
where
    F: Fn(&[f64]) -> std::result::Result<Vec<f64>, E>,
    E: std::fmt::Display,
{
    let n = x0.len();
    let probe = |x: &[f64], index: usize| -> Result<Vec<f64>> {
        map(x).map_err(|e| StatError::EvaluationFailure { index, message: e.to_string() })
    };
    let base = probe(x0, 0)?;
    let m = base.len();
    let mut jac = vec![vec![0.0; n]; m];
    let mut x = x0.to_vec();
    for j in 0..n {
        x[j] = x0[j] + h;
        let plus = probe(&x, j + 1)?;
        x[j] = x0[j] - h;
        let minus = probe(&x, j + 1)?;
        x[j] = x0[j];
        if plus.len() != m || minus.len() != m {
            return Err(StatError::DimensionMismatch("map output length varies"));
        }
        for i in 0..m {
            jac[i][j] = (plus[i] - minus[i]) / (2.0 * h);
        }
    }
    Ok(jac)
}

/// Determinant by partial-pivot LU; small matrices only.
pub fn determinant(matrix: &[Vec<f64>]) -> f64 {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs())).unwrap();
        if a[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_map_is_exact() {
        let f = |x: &[f64]| -> std::result::Result<Vec<f64>, String> {
            Ok(vec![2.0 * x[0] + x[1], -x[0] + 3.0 * x[1]])
        };
        let j = jacobian_fd(f, &[0.3, -0.7], 1e-6).unwrap();
        assert!((j[0][0] - 2.0).abs() < 1e-9);
        assert!((j[0][1] - 1.0).abs() < 1e-9);
        assert!((j[1][0] + 1.0).abs() < 1e-9);
        assert!((j[1][1] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn quadratic_map_error_is_second_order() {
        let f = |x: &[f64]| -> std::result::Result<Vec<f64>, String> { Ok(vec![x[0].powi(3)]) };
        let j = jacobian_fd(f, &[1.0], 1e-5).unwrap();
        assert!((j[0][0] - 3.0).abs() < 1e-9);
    }

    #[test]
    fn failures_are_reported() {
        let f = |x: &[f64]| -> std::result::Result<Vec<f64>, String> {
            if x[0] > 1.0 {
                Err("left the domain".into())
            } else {
                Ok(vec![x[0]])
            }
        };
        match jacobian_fd(f, &[1.0 - 1e-9], 1e-6) {
            Err(StatError::EvaluationFailure { index: 1, .. }) => {}
            other => panic!("expected evaluation failure, got {other:?}"),
        }
    }

    #[test]
    fn determinant_of_triangular_product() {
        let m = vec![vec![2.0, 1.0], vec![0.0, 3.0]];
        assert!((determinant(&m) - 6.0).abs() < 1e-12);
        let s = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert!((determinant(&s) + 1.0).abs() < 1e-12);
    }
}
