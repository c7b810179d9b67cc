use mucodes::io::{parse_sequences, write_code};
use mucodes::verify::certify;
use mucodes::{psi, psi_inverse, Alphabet, Code, Property, Seq};
use proptest::prelude::*;

fn binary(max: usize) -> impl Strategy<Value = Seq> {
    prop::collection::vec(0u8..2, 1..max).prop_map(|v| Seq::binary(&v).unwrap())
}

fn quaternary(max: usize) -> impl Strategy<Value = Seq> {
    prop::collection::vec(0u8..4, 1..max).prop_map(|v| Seq::quaternary(&v).unwrap())
}

proptest! {
    #[test]
    fn complement_and_reverse_are_involutions(s in quaternary(20)) {
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.reverse().reverse(), s.clone());
        prop_assert_eq!(s.complement().balance_weight(), s.balance_weight());
    }

    #[test]
    fn text_roundtrip(s in quaternary(30), b in binary(30)) {
        prop_assert_eq!(Seq::parse(&s.to_string()).unwrap(), s);
        prop_assert_eq!(Seq::parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn psi_is_a_bijection(v in prop::collection::vec((0u8..2, 0u8..2), 1..16)) {
        let a = Seq::binary(&v.iter().map(|p| p.0).collect::<Vec<_>>()).unwrap();
        let b = Seq::binary(&v.iter().map(|p| p.1).collect::<Vec<_>>()).unwrap();
        let c = psi(&a, &b).unwrap();
        // GC content of psi(a, b) is the weight of a
        prop_assert_eq!(c.balance_weight(), a.symbols().iter().filter(|&&x| x == 1).count());
        prop_assert_eq!(psi_inverse(&c).unwrap(), (a, b));
    }

    #[test]
    fn hamming_distance_is_a_metric(v in prop::collection::vec((0u8..4, 0u8..4, 0u8..4), 1..12)) {
        let x = Seq::quaternary(&v.iter().map(|t| t.0).collect::<Vec<_>>()).unwrap();
        let y = Seq::quaternary(&v.iter().map(|t| t.1).collect::<Vec<_>>()).unwrap();
        let z = Seq::quaternary(&v.iter().map(|t| t.2).collect::<Vec<_>>()).unwrap();
        let d = |a: &Seq, b: &Seq| a.hamming_distance(b).unwrap();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
        prop_assert_eq!(d(&x, &x), 0);
    }
}

#[test]
fn letters_follow_the_pairing() {
    let a = Seq::parse("0011").unwrap();
    let b = Seq::parse("0101").unwrap();
    assert_eq!(psi(&a, &b).unwrap().to_string(), "ATCG");
    assert_eq!(Seq::parse("ACGT").unwrap().complement().to_string(), "TGCA");
}

#[test]
fn bad_input_is_rejected() {
    assert!(Seq::parse("").is_err());
    assert!(Seq::parse("01X").is_err());
    assert!(Seq::new(Alphabet::Binary, vec![2]).is_err());
    assert!(psi(&Seq::parse("01").unwrap(), &Seq::parse("011").unwrap()).is_err());
    assert!(parse_sequences("01\nAC\n").is_err());
}

#[test]
fn sequence_file_roundtrip() {
    let mut code = Code::from_members(vec![Seq::parse("100").unwrap(), Seq::parse("011").unwrap()]).unwrap();
    certify(&mut code, Property::Wmu(2)).unwrap();
    let text = write_code(&code);
    assert!(text.starts_with("# profile: wmu=2"), "{text}");
    let file = parse_sequences(&text).unwrap();
    assert_eq!(file.claimed, vec![Property::Wmu(2)]);
    assert_eq!(file.into_code().unwrap().members(), code.members());
}
