//! Centering and whitening of moment samples.

use crate::{Result, StatError};

/// `scale · M⁻¹ (m − limit)` for every sample, `M` lower triangular applied
/// by forward substitution.
pub fn standardize(
    samples: &[Vec<f64>],
    limit: &[f64],
    scale: f64,
    matrix: &[Vec<f64>],
) -> Result<Vec<Vec<f64>>> {
    let k = limit.len();
    if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
        return Err(StatError::DimensionMismatch("matrix must be k x k"));
    }
    for (i, row) in matrix.iter().enumerate() {
        if row[i] == 0.0 {
            return Err(StatError::SingularMatrix { row: i + 1 });
        }
    }
    samples
        .iter()
        .map(|m| {
            if m.len() != k {
                return Err(StatError::DimensionMismatch("sample length != limit length"));
            }
            let mut y = vec![0.0; k];
            for i in 0..k {
                let mut acc = m[i] - limit[i];
                for j in 0..i {
                    acc -= matrix[i][j] * y[j];
                }
                y[i] = scale * acc / matrix[i][i];
            }
            Ok(y)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_matrix_is_identity() {
        let eye = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let out = standardize(&[vec![1.0, 2.0]], &[0.0, 0.0], 1.0, &eye).unwrap();
        assert_eq!(out[0], vec![1.0, 2.0]);
    }

    #[test]
    fn centering_at_the_limit_gives_zero() {
        // Half-line k = 2 at the exact Marchenko–Pastur moments (1, 2).
        let c = vec![vec![1.0, 0.0], vec![3.0, 1.0]];
        let out = standardize(&[vec![1.0, 2.0]], &[1.0, 2.0], 44.7, &c).unwrap();
        assert_eq!(out[0], vec![0.0, 0.0]);
    }

    #[test]
    fn forward_substitution_inverts_lower_triangle() {
        let m = vec![vec![2.0, 0.0], vec![4.0, 5.0]];
        // y solves M y = (x - limit), scaled.
        let out = standardize(&[vec![2.0, 13.0]], &[0.0, 0.0], 1.0, &m).unwrap();
        assert_eq!(out[0], vec![1.0, 1.8]);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = vec![vec![1.0, 0.0], vec![3.0, 0.0]];
        match standardize(&[vec![0.0, 0.0]], &[0.0, 0.0], 1.0, &m) {
            Err(StatError::SingularMatrix { row: 2 }) => {}
            other => panic!("expected singular matrix, got {other:?}"),
        }
    }
}
