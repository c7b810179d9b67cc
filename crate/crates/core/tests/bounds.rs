use mucodes::bounds::{
    binomial_big, c_q, constrained_gv_wmu, mu_bounds, sphere_volume, wmu_bounds, BoundReport,
};
use num::{BigInt, BigRational, One};
use proptest::prelude::*;

fn consistent(r: &BoundReport) -> bool {
    match (r.lower_f64(), r.upper_f64()) {
        (Some(l), Some(u)) => l <= u,
        _ => true,
    }
}

proptest! {
    #[test]
    fn wmu_lower_below_upper(q in prop::sample::select(vec![2u32, 4]), n in 2usize..40, k in 1usize..40) {
        prop_assume!(k < n);
        let r = wmu_bounds(q, n, k).unwrap();
        prop_assert!(consistent(&r) && r.is_consistent());
        prop_assert!(consistent(&mu_bounds(q, n).unwrap()));
    }

    #[test]
    fn sphere_volume_is_monotone(q in prop::sample::select(vec![2u32, 4]), n in 1usize..30, r in 0i64..30) {
        let v = sphere_volume(q, n, r);
        prop_assert!(sphere_volume(q, n, r + 1) >= v);
        prop_assert!(sphere_volume(q, n + 1, r) >= v);
        prop_assert!(v <= BigInt::from(q).pow(n as u32));
    }

    #[test]
    fn pascal_rule(n in 1usize..60, k in 1usize..60) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial_big(n, k), binomial_big(n - 1, k - 1) + binomial_big(n - 1, k));
    }

    #[test]
    fn gv_is_nonincreasing_in_distance(n in 30usize..60, d in 1usize..10) {
        if let (Ok(a), Ok(b)) = (constrained_gv_wmu(2, n, 1, d), constrained_gv_wmu(2, n, 1, d + 1)) {
            prop_assert!(b.report.lower_f64().unwrap() <= a.report.lower_f64().unwrap());
        }
    }
}

#[test]
fn constants() {
    assert_eq!(c_q(2).unwrap(), BigRational::new(3.into(), 64.into()));
    assert_eq!(c_q(4).unwrap(), BigRational::new(63.into(), 1024.into()));
    assert!(c_q(3).is_err());
    assert_eq!(sphere_volume(2, 5, 0), BigInt::one());
    assert_eq!(sphere_volume(4, 3, 1), BigInt::from(10));
}

#[test]
fn gv_at_distance_one_is_the_plain_lower_bound() {
    let gv = constrained_gv_wmu(2, 50, 1, 1).unwrap();
    assert_eq!(gv.ball, BigInt::one());
    let mu = mu_bounds(2, 50).unwrap();
    assert_eq!(gv.report.lower, mu.lower);
}
