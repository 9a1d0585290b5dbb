//! Property tests for the field, SL(2,ℤ) words, the representation and the invariant.

use e6lens::invariant::{homotopy_equivalent, state_sum, state_sum_with_cofactor};
use e6lens::modular::{congruent_lift, extended_cofactor, gamma12_generator_table, Token};
use e6lens::representation::rho_word;
use e6lens::{Cyclotomic, GeneratorWord, LensSpace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    proptest::array::uniform8(small_rational()).prop_map(|c| Cyclotomic::from_coeffs(&c))
}

fn nonzero_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    cyclotomic().prop_filter("nonzero", |x| !x.is_zero())
}

fn token() -> impl Strategy<Value = Token> {
    prop_oneof![
        Just(Token::S),
        (-30i64..=30)
            .prop_filter("nonzero power", |k| *k != 0)
            .prop_map(|k| Token::T(k.into())),
    ]
}

fn word(max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    proptest::collection::vec(token(), 0..=max_len).prop_map(GeneratorWord::from_tokens)
}

fn coprime_pair(bound: i64) -> impl Strategy<Value = (i64, i64)> {
    (-bound..=bound, -bound..=bound)
        .prop_filter("coprime", |&(p, q)| LensSpace::new(p, q).is_ok())
}

fn close(a: (f64, f64), b: (f64, f64), scale: f64) -> bool {
    ((a.0 - b.0).abs() + (a.1 - b.1).abs()) <= 1e-9 * scale.max(1.0)
}

proptest! {
    #[test]
    fn addition_and_multiplication_commute(x in cyclotomic(), y in cyclotomic()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn multiplication_associates_and_distributes(
        x in cyclotomic(), y in cyclotomic(), z in cyclotomic()
    ) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn additive_and_multiplicative_identities(x in cyclotomic()) {
        prop_assert_eq!(&x + &Cyclotomic::zero(), x.clone());
        prop_assert_eq!(&x * &Cyclotomic::one(), x.clone());
        prop_assert!((&x - &x).is_zero());
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(x in nonzero_cyclotomic()) {
        let y = x.inv().unwrap();
        prop_assert!((&x * &y).is_one());
        prop_assert!((&y * &x).is_one());
        prop_assert_eq!(y.inv().unwrap(), x);
    }

    #[test]
    fn conjugation_is_a_field_automorphism(x in cyclotomic(), y in cyclotomic()) {
        prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
        prop_assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert!(x.norm_squared().is_real());
    }

    #[test]
    fn embedding_is_a_ring_homomorphism(x in cyclotomic(), y in cyclotomic()) {
        let (a, b) = (x.to_f64_pair(), y.to_f64_pair());
        let prod = (&x * &y).to_f64_pair();
        let expected = (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        let scale = (a.0.hypot(a.1) + 1.0) * (b.0.hypot(b.1) + 1.0);
        prop_assert!(close(prod, expected, scale), "{prod:?} vs {expected:?}");
    }

    #[test]
    fn text_and_json_round_trip(x in cyclotomic()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<Cyclotomic>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cyclotomic>(&json).unwrap(), x);
    }

    #[test]
    fn word_text_round_trip(w in word(12)) {
        prop_assert_eq!(w.to_string().parse::<GeneratorWord>().unwrap(), w.clone());
        prop_assert_eq!(w.to_compact().parse::<GeneratorWord>().unwrap(), w);
    }

    #[test]
    fn decomposition_reproduces_matrix(w in word(12)) {
        let m = w.eval();
        let d = GeneratorWord::decompose(&m);
        prop_assert_eq!(d.eval(), m);
    }

    #[test]
    fn extended_cofactor_solves_determinant((p, q) in coprime_pair(10_000)) {
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        let (a, b) = extended_cofactor(&p, &q).unwrap();
        prop_assert!((&a * &q - &b * &p).is_one());
    }

    #[test]
    fn congruent_lift_keeps_residues(
        (p, q) in coprime_pair(200), s in -5i64..=5, t in -5i64..=5
    ) {
        let (p2, q2) = (p + 12 * s, q + 12 * t);
        prop_assume!(LensSpace::new(p2, q2).is_ok());
        let big = |v: i64| BigInt::from(v);
        let (a, b, a2, b2) = congruent_lift(&big(p), &big(q), &big(p2), &big(q2)).unwrap();
        prop_assert!((&a * big(q) - &b * big(p)).is_one());
        prop_assert!((&a2 * big(q2) - &b2 * big(p2)).is_one());
        prop_assert_eq!((&a2 - &a) % 12, BigInt::from(0));
        prop_assert_eq!((&b2 - &b) % 12, BigInt::from(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rho_is_multiplicative_on_words(u in word(8), v in word(8)) {
        prop_assert_eq!(rho_word(&u.concat(&v)), rho_word(&u).mul(&rho_word(&v)));
    }

    #[test]
    fn rho_depends_only_on_the_matrix(w in word(10)) {
        let s4: GeneratorWord = "S^4".parse().unwrap();
        let direct = rho_word(&w);
        prop_assert_eq!(&rho_word(&w.concat(&s4)), &direct);
        prop_assert_eq!(&rho_word(&GeneratorWord::decompose(&w.eval())), &direct);
    }

    #[test]
    fn conjugated_generators_stay_in_kernel(g in word(6), idx in 0usize..19) {
        let entry = &gamma12_generator_table()[idx];
        let g_inv = GeneratorWord::decompose(&g.eval().inverse());
        let conj = g.concat(&entry.word).concat(&g_inv);
        prop_assert!(conj.eval().in_gamma12());
        prop_assert!(rho_word(&conj).is_identity(), "{}", entry.name);
    }

    #[test]
    fn state_sum_ignores_cofactor_choice((p, q) in coprime_pair(500), k in -50i64..=50) {
        let l = LensSpace::new(p, q).unwrap();
        let (a, b) = extended_cofactor(l.p(), l.q()).unwrap();
        let shifted = state_sum_with_cofactor(&l, &(a + l.p() * k), &(b + l.q() * k)).unwrap();
        prop_assert_eq!(shifted, state_sum(&l));
    }

    #[test]
    fn state_sum_is_periodic_mod_12(
        (p, q) in coprime_pair(400), s in -20i64..=20, t in -20i64..=20
    ) {
        let Ok(m) = LensSpace::new(p + 12 * s, q + 12 * t) else { return Ok(()) };
        prop_assert_eq!(state_sum(&LensSpace::new(p, q).unwrap()), state_sum(&m));
    }

    #[test]
    fn homotopy_equivalent_spaces_agree((p, q) in coprime_pair(300), n in 1i64..300) {
        prop_assume!(p != 0);
        let q2 = (n * n * q).rem_euclid(p.abs());
        let Ok(m) = LensSpace::new(p, q2) else { return Ok(()) };
        let l = LensSpace::new(p, q).unwrap();
        prop_assert!(homotopy_equivalent(&m, &l));
        prop_assert_eq!(state_sum(&l), state_sum(&m));
    }
}
