//! Independent oracles for the recurrence ↔ moment maps.
//!
//! `recurrence_to_moments` runs Jacobi-matrix powers; the oracle here solves
//! the two moment-identity families `∫xᵏ P_k dμ = a_1…a_k` and
//! `∫x^{k+1} P_k dμ = a_1…a_k (b_1+…+b_{k+1})` forward instead.
//! `moments_to_recurrence` runs moment-space Gram–Schmidt; the oracle is the
//! raw Hankel determinant-ratio route in exact rational arithmetic.

use momentforge_core::{
    moments_to_recurrence, recurrence_to_moments, MomentVector, RecurrenceCoefficients, Scalar,
    SupportClass,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

type Q = BigRational;

fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Wall-identity forward solve for m_1..m_{2n−1} from (b, a).
fn wall_identity_moments<T: Scalar>(b: &[T], a: &[T]) -> Vec<T> {
    let n = b.len();
    // Monic polynomial coefficient vectors from the recursion.
    let mut polys: Vec<Vec<T>> = vec![vec![T::one()]];
    if n > 0 {
        polys.push(vec![-b[0].clone(), T::one()]);
    }
    for k in 1..n {
        let prev = &polys[k];
        let prev2 = &polys[k - 1];
        let mut next = vec![T::zero(); k + 2];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
            next[i] = next[i].clone() - b[k].clone() * c.clone();
        }
        for (i, c) in prev2.iter().enumerate() {
            next[i] = next[i].clone() - a[k - 1].clone() * c.clone();
        }
        polys.push(next);
    }

    let len = 2 * n - 1;
    let mut m = vec![T::zero(); len + 1]; // m[0] = 1, m[j] = m_j
    m[0] = T::one();
    m[1] = b[0].clone();
    let mut a_prod = T::one();
    let mut b_sum = b[0].clone();
    for k in 1..n {
        a_prod = a_prod * a[k - 1].clone();
        b_sum = b_sum + b[k].clone();
        let coeffs = &polys[k];
        // Σ_j c_{k,j} m_{k+j} = a_1…a_k  with c_{k,k} = 1.
        let mut acc = T::zero();
        for (j, c) in coeffs.iter().enumerate().take(k) {
            acc = acc + c.clone() * m[k + j].clone();
        }
        m[2 * k] = a_prod.clone() - acc;
        // Σ_j c_{k,j} m_{k+1+j} = a_1…a_k · (b_1+…+b_{k+1}).
        let mut acc = T::zero();
        for (j, c) in coeffs.iter().enumerate().take(k) {
            acc = acc + c.clone() * m[k + 1 + j].clone();
        }
        m[2 * k + 1] = a_prod.clone() * b_sum.clone() - acc;
    }
    m.remove(0);
    m
}

/// Exact determinant by fraction-free-enough Gaussian elimination on Q.
fn det_q(mut mat: Vec<Vec<Q>>) -> Q {
    let n = mat.len();
    let mut det = Q::from_integer(BigInt::from(1));
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| mat[r][col] != Q::from_integer(BigInt::from(0)));
        let Some(pr) = pivot_row else {
            return Q::from_integer(BigInt::from(0));
        };
        if pr != col {
            mat.swap(pr, col);
            det = -det;
        }
        let piv = mat[col][col].clone();
        det *= piv.clone();
        for r in col + 1..n {
            let factor = mat[r][col].clone() / piv.clone();
            for c in col..n {
                let sub = factor.clone() * mat[col][c].clone();
                mat[r][c] -= sub;
            }
        }
    }
    det
}

/// Hankel determinant Δ_k and the shifted determinant S_k (last row replaced
/// by (m_k, …, m_{2k−1})); the classical ratios give the recurrence
/// coefficients of the monic orthogonal polynomials.
fn determinant_route(m: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let n = (m.len() + 1) / 2;
    let mom = |i: usize| -> Q {
        if i == 0 {
            Q::from_integer(BigInt::from(1))
        } else {
            m[i - 1].clone()
        }
    };
    let hankel = |k: usize| -> Vec<Vec<Q>> {
        (0..k).map(|i| (0..k).map(|j| mom(i + j)).collect()).collect()
    };
    let shifted = |k: usize| -> Vec<Vec<Q>> {
        let mut h = hankel(k);
        for j in 0..k {
            h[k - 1][j] = mom(k + j);
        }
        h
    };
    let delta: Vec<Q> = (0..=n).map(|k| det_q(hankel(k))).collect();
    let ess: Vec<Q> = (0..=n).map(|k| det_q(shifted(k))).collect();

    let mut b = Vec::with_capacity(n);
    let mut prev_ratio = Q::from_integer(BigInt::from(0));
    for k in 1..=n {
        let ratio = ess[k].clone() / delta[k].clone();
        b.push(ratio.clone() - prev_ratio);
        prev_ratio = ratio;
    }
    let mut a = Vec::with_capacity(n - 1);
    for k in 1..n {
        a.push(delta[k + 1].clone() * delta[k - 1].clone() / (delta[k].clone() * delta[k].clone()));
    }
    (b, a)
}

#[test]
fn wall_identities_match_jacobi_powers_f64() {
    let mut rng = ChaCha12Rng::seed_from_u64(1);
    for _ in 0..50 {
        let n = rng.random_range(1..=8usize);
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let a: Vec<f64> = (0..n - 1).map(|_| rng.random_range(0.3..3.0)).collect();
        let c = RecurrenceCoefficients::new(b.clone(), a.clone()).unwrap();
        let powers = recurrence_to_moments(&c).unwrap();
        let oracle = wall_identity_moments(&b, &a);
        for (x, y) in powers.values().iter().zip(&oracle) {
            assert!((x - y).abs() <= 1e-11 * x.abs().max(1.0), "{x} vs {y}");
        }
    }
}

#[test]
fn wall_identities_match_jacobi_powers_exactly() {
    let mut rng = ChaCha12Rng::seed_from_u64(2);
    for _ in 0..20 {
        let n = rng.random_range(1..=6usize);
        let b: Vec<Q> = (0..n).map(|_| q(rng.random_range(-16..16), 16)).collect();
        let a: Vec<Q> = (0..n - 1).map(|_| q(rng.random_range(4..48), 16)).collect();
        let c = RecurrenceCoefficients::new(b.clone(), a.clone()).unwrap();
        let powers = recurrence_to_moments(&c).unwrap();
        assert_eq!(powers.values(), &wall_identity_moments(&b, &a)[..]);
    }
}

#[test]
fn hankel_factorization_matches_determinant_ratios() {
    let mut rng = ChaCha12Rng::seed_from_u64(3);
    for _ in 0..20 {
        let n = rng.random_range(1..=6usize);
        let b: Vec<Q> = (0..n).map(|_| q(rng.random_range(-16..16), 16)).collect();
        let a: Vec<Q> = (0..n - 1).map(|_| q(rng.random_range(4..48), 16)).collect();
        let c = RecurrenceCoefficients::new(b.clone(), a.clone()).unwrap();
        let m = recurrence_to_moments(&c).unwrap();

        let (bd, ad) = determinant_route(m.values());
        assert_eq!(bd, b, "determinant route diagonal");
        assert_eq!(ad, a, "determinant route off-diagonal");

        let fact = moments_to_recurrence(&m).unwrap();
        assert_eq!(fact.diagonal(), &b[..]);
        assert_eq!(fact.off_diagonal(), &a[..]);
    }
}

#[test]
fn determinant_route_detects_singular_hankel() {
    // Point mass: Δ_2 = 0.
    let m = vec![q(1, 2), q(1, 4), q(1, 8)];
    let h = vec![
        vec![Q::from_integer(BigInt::from(1)), m[0].clone()],
        vec![m[0].clone(), m[1].clone()],
    ];
    assert_eq!(det_q(h), Q::from_integer(BigInt::from(0)));
    let mv = MomentVector::new(SupportClass::RealLine, m).unwrap();
    assert!(moments_to_recurrence(&mv).is_err());
}
