use mucodes::algebra::{f2, f4, gf, CyclicCode, LinearCode, Polynomial, ReedSolomon};
use mucodes::Budget;
use proptest::prelude::*;

proptest! {
    #[test]
    fn gf16_is_a_field(a in 0u16..16, b in 0u16..16, c in 0u16..16) {
        let f = gf(4).unwrap();
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, a), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn polynomial_division(a in prop::collection::vec(0u16..4, 1..8), b in prop::collection::vec(0u16..4, 1..5)) {
        let f = f4();
        let pa = Polynomial::new(f, a).unwrap();
        let pb = Polynomial::new(f, b).unwrap();
        prop_assume!(!pb.is_zero());
        let (quot, rem) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(quot.mul(&pb).unwrap().add(&rem).unwrap(), pa);
        prop_assert!(rem.is_zero() || rem.degree() < pb.degree());
    }

    #[test]
    fn rs_corrects_up_to_half_the_redundancy(
        msg in prop::collection::vec(0u16..16, 5),
        errors in prop::collection::vec((0usize..15, 1u16..16), 0..=5),
    ) {
        let rs = ReedSolomon::new(gf(4).unwrap(), 15, 5).unwrap();
        let mut word = rs.encode(&msg).unwrap();
        prop_assert_eq!(&word[..5], &msg[..]);
        let mut touched = std::collections::BTreeSet::new();
        for (pos, e) in errors {
            if touched.len() < rs.correctable() && touched.insert(pos) {
                word[pos] ^= e;
            }
        }
        prop_assert_eq!(rs.decode(&word).unwrap(), msg);
    }

    #[test]
    fn cyclic_codewords_have_zero_syndrome(msg in prop::collection::vec(0u16..2, 4)) {
        let h = CyclicCode::hamming_7_4();
        let c = h.encode(&msg).unwrap();
        prop_assert!(h.is_codeword(&c).unwrap());
        prop_assert!(h.is_codeword(&mucodes::algebra::cyclic_shift(&c)).unwrap());
    }
}

#[test]
fn builtin_distances() {
    assert_eq!(CyclicCode::hamming_7_4().min_distance_exhaustive().unwrap(), 3);
    assert_eq!(CyclicCode::f4_repetition_3().min_distance_exhaustive().unwrap(), 3);
    assert_eq!(CyclicCode::repetition(5).unwrap().min_distance_exhaustive().unwrap(), 5);
    assert!(CyclicCode::hamming_7_4().contains_all_ones());
}

#[test]
fn non_divisor_generator_is_rejected() {
    let g = Polynomial::parse(f2(), "1,1,1,1").unwrap();
    assert!(CyclicCode::new(6, g).is_err());
}

#[test]
fn shortened_hamming_has_distance_three() {
    let h = LinearCode::shortened_hamming(5, 18).unwrap();
    assert_eq!((h.n(), h.k()), (23, 18));
    assert_eq!(h.min_distance_exhaustive().unwrap(), 3);
    assert_eq!(h.codewords(Budget(1 << 18)).unwrap().len(), 1 << 18);
}
