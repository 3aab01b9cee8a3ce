//! Round-trip and invariance properties of the coordinate transforms.
//!
//! The certified composites are in moment space: m → native coordinate → m
//! at relative 1e−9 for dimension ≤ 12, away from the boundary. Exact
//! rational arithmetic round-trips literally. Coordinate recovery (x → m →
//! x) is also checked, at the looser tolerance its conditioning warrants.

use momentforge_core::{
    affine_transform_moments, canonical_to_moments, canonical_to_recurrence, moments_to_canonical,
    moments_to_recurrence, moments_to_z, recurrence_to_moments, skibinsky_forward,
    z_to_recurrence, CanonicalMoments, MomentVector, RecurrenceCoefficients, SupportClass,
    ZVector,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

type Q = BigRational;

fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

fn rel_close(x: &[f64], y: &[f64], tol: f64) -> bool {
    x.len() == y.len()
        && x.iter()
            .zip(y)
            .all(|(a, b)| (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moments_through_z_roundtrip(z in prop::collection::vec(0.3f64..3.0, 1..=12)) {
        let m = skibinsky_forward(&ZVector::new(z).unwrap()).unwrap();
        let again = skibinsky_forward(&moments_to_z(&m).unwrap()).unwrap();
        prop_assert!(rel_close(again.values(), m.values(), 1e-9));
    }

    #[test]
    fn moments_through_canonical_roundtrip(p in prop::collection::vec(0.1f64..0.9, 1..=12)) {
        let pc = CanonicalMoments::new((-1.0, 2.0), p).unwrap();
        let m = canonical_to_moments(&pc).unwrap();
        let again = canonical_to_moments(&moments_to_canonical(&m).unwrap()).unwrap();
        prop_assert!(rel_close(again.values(), m.values(), 1e-9));
    }

    #[test]
    fn moments_through_recurrence_roundtrip(
        b in prop::collection::vec(-1.0f64..1.0, 1..=6),
        seed in any::<u64>(),
    ) {
        let n = b.len();
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let a: Vec<f64> = (0..n - 1).map(|_| rng.random_range(0.3..3.0)).collect();
        let c = RecurrenceCoefficients::new(b, a).unwrap();
        let m = recurrence_to_moments(&c).unwrap();
        let again = recurrence_to_moments(&moments_to_recurrence(&m).unwrap()).unwrap();
        prop_assert!(rel_close(again.values(), m.values(), 1e-9));
    }

    #[test]
    fn coordinates_recovered_from_moments(z in prop::collection::vec(0.3f64..3.0, 1..=12)) {
        // The inverse direction is the ill-conditioned one; recovery is only
        // good to ~1e-7 at dimension 12 in doubles.
        let zv = ZVector::new(z.clone()).unwrap();
        let back = moments_to_z(&skibinsky_forward(&zv).unwrap()).unwrap();
        prop_assert!(rel_close(back.values(), &z, 1e-6));
    }

    #[test]
    fn z_scaling_identity(
        z in prop::collection::vec(0.3f64..3.0, 1..=6),
        d in 0.25f64..8.0,
    ) {
        // Scaling the measure by d > 0 multiplies every z by d:
        // moments_to_z(scaled m) = d · moments_to_z(m). Inversion noise
        // grows ~8x per dimension, so 1e-10 is a small-dimension statement
        // in doubles; the rational test below carries it to N = 12.
        let m = skibinsky_forward(&ZVector::new(z).unwrap()).unwrap();
        let scaled = affine_transform_moments(&m, &d, &0.0).unwrap();
        let zs = moments_to_z(&scaled).unwrap();
        let expect: Vec<f64> = moments_to_z(&m).unwrap().values().iter().map(|v| v * d).collect();
        prop_assert!(rel_close(zs.values(), &expect, 1e-10));
    }

    #[test]
    fn canonical_moments_are_affine_invariant(p in prop::collection::vec(0.1f64..0.9, 1..=6)) {
        let on_unit = CanonicalMoments::unit(p).unwrap();
        let m = canonical_to_moments(&on_unit).unwrap();
        // Move the measure to [-3, 5]: both inversions must see the same p.
        let moved = affine_transform_moments(&m, &8.0, &-3.0).unwrap();
        let here = moments_to_canonical(&m).unwrap();
        let there = moments_to_canonical(&moved).unwrap();
        prop_assert!(rel_close(there.values(), here.values(), 1e-10));
    }

    #[test]
    fn chain_relations_match_z_route(p in prop::collection::vec(0.1f64..0.9, 3..=11)) {
        let p = if p.len() % 2 == 0 { p[..p.len() - 1].to_vec() } else { p };
        let (a, b) = (-2.0, 1.0);
        let pc = CanonicalMoments::new((a, b), p.clone()).unwrap();
        let direct = canonical_to_recurrence(&pc).unwrap();

        // ζ route: recurrence of the [0,1] measure, then rescale the interval.
        let zeta = ZVector::new(pc.zeta()).unwrap();
        let unit = z_to_recurrence(&zeta).unwrap();
        let width = b - a;
        for (lhs, rhs) in direct.diagonal().iter().zip(unit.diagonal()) {
            prop_assert!((lhs - (a + width * rhs)).abs() < 1e-12);
        }
        let n_off = direct.off_diagonal().len();
        for (lhs, rhs) in direct.off_diagonal().iter().zip(&unit.off_diagonal()[..n_off]) {
            prop_assert!((lhs - width * width * rhs).abs() < 1e-12);
        }
    }
}

#[test]
fn exact_roundtrips_in_rational_arithmetic() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed);
    for trial in 0..60 {
        let n = 1 + (trial % 12);

        let z: Vec<Q> = (0..n).map(|_| q(rng.random_range(4..48), 16)).collect();
        let m = skibinsky_forward(&ZVector::new(z.clone()).unwrap()).unwrap();
        assert_eq!(moments_to_z(&m).unwrap().values(), &z[..]);

        let p: Vec<Q> = (0..n).map(|_| q(rng.random_range(2..15), 16)).collect();
        let interval = (q(-1, 1), q(2, 1));
        let pc = CanonicalMoments::new(interval, p.clone()).unwrap();
        let m = canonical_to_moments(&pc).unwrap();
        assert_eq!(moments_to_canonical(&m).unwrap().values(), &p[..]);

        let nb = 1 + (trial % 6);
        let b: Vec<Q> = (0..nb).map(|_| q(rng.random_range(-16..16), 16)).collect();
        let a: Vec<Q> = (0..nb - 1).map(|_| q(rng.random_range(4..48), 16)).collect();
        let c = RecurrenceCoefficients::new(b, a).unwrap();
        let m = recurrence_to_moments(&c).unwrap();
        assert_eq!(moments_to_recurrence(&m).unwrap(), c);
    }
}

#[test]
fn scaling_and_affine_invariance_are_exact_in_rational_arithmetic() {
    let mut rng = ChaCha12Rng::seed_from_u64(0xace);
    for trial in 0..40 {
        let n = 1 + (trial % 12);
        let z: Vec<Q> = (0..n).map(|_| q(rng.random_range(4..48), 16)).collect();
        let m = skibinsky_forward(&ZVector::new(z.clone()).unwrap()).unwrap();

        let d = q(rng.random_range(1..64), 8);
        let scaled = affine_transform_moments(&m, &d, &q(0, 1)).unwrap();
        let zs = moments_to_z(&scaled).unwrap();
        let expect: Vec<Q> = z.iter().map(|v| v.clone() * d.clone()).collect();
        assert_eq!(zs.values(), &expect[..]);

        let p: Vec<Q> = (0..n).map(|_| q(rng.random_range(2..15), 16)).collect();
        let pc = CanonicalMoments::new((q(0, 1), q(1, 1)), p.clone()).unwrap();
        let mu = canonical_to_moments(&pc).unwrap();
        let moved = affine_transform_moments(&mu, &q(8, 1), &q(-3, 1)).unwrap();
        assert_eq!(moments_to_canonical(&moved).unwrap().values(), &p[..]);
    }
}

#[test]
fn catalan_fixed_point_is_exact_up_to_dimension_twenty() {
    // C_{k+1} = C_k · 2(2k+1)/(k+2); the moments here are C_1..C_20.
    let mut catalan = Vec::with_capacity(20);
    let mut c = BigInt::from(1);
    for k in 1..=20u32 {
        catalan.push(Q::from_integer(c.clone()));
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 2);
    }
    assert_eq!(catalan[2], Q::from_integer(BigInt::from(5)));
    for n in 1..=20 {
        let m = MomentVector::new(SupportClass::HalfLine, catalan[..n].to_vec()).unwrap();
        let z = moments_to_z(&m).unwrap();
        assert!(z.values().iter().all(|v| *v == Q::from_integer(BigInt::from(1))));
    }
}

#[test]
fn jacobi_route_and_skibinsky_route_agree_on_moments() {
    // Same measure, two independent descriptions: z ↦ moments directly, and
    // z ↦ (b, a) ↦ moments through the Jacobi matrix. Lengths 2n−1.
    let mut rng = ChaCha12Rng::seed_from_u64(42);
    for _ in 0..40 {
        let n = rng.random_range(1..=6usize);
        let z: Vec<f64> = (0..2 * n - 1).map(|_| rng.random_range(0.3..3.0)).collect();
        let zv = ZVector::new(z).unwrap();
        let via_array = skibinsky_forward(&zv).unwrap();
        let via_jacobi = recurrence_to_moments(&z_to_recurrence(&zv).unwrap()).unwrap();
        assert!(rel_close(via_array.values(), via_jacobi.values(), 1e-12));
    }
}
