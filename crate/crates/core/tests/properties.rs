use gdgap_core::base::{big_a_b, BaseConfig};
use gdgap_core::certificate::pipeline_gap;
use gdgap_core::fuzz::{random_point, trial_config, trial_rng, Bounds};
use gdgap_core::metrics::circumcenter3;
use gdgap_core::scalar::{exact_sqrt, Radicand, Rational, Scalar};
use gdgap_core::tetra::construct;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn quad(k: u64) -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(move |(a, b)| Scalar::quad(a, b, Radicand::new(k).unwrap()))
}

fn config() -> impl Strategy<Value = BaseConfig> {
    (any::<u64>(), 0u64..1000).prop_map(|(seed, i)| trial_config(seed, i, Bounds::default()).unwrap().cfg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in quad(2), b in quad(2), c in quad(2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * a.recip().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn sqrt_of_square(t in rational()) {
        let t = if t < Rational::from_integer(0.into()) { -t } else { t };
        prop_assert_eq!(exact_sqrt(&(&t * &t)).unwrap(), Some(t));
    }

    #[test]
    fn literal_round_trip(a in quad(5)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn sign_matches_float(a in quad(3)) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(a.sign(), if f > 0.0 { 1 } else { -1 });
        } else if a.is_zero() {
            prop_assert_eq!(a.sign(), 0);
        }
    }

    #[test]
    fn b_is_positive(cfg in config()) {
        prop_assert!(big_a_b(&cfg).1.is_positive());
    }

    #[test]
    fn gap_is_translation_invariant(cfg in config(), seed in any::<u64>()) {
        let h = random_point(&mut trial_rng(seed, 0), Bounds::default());
        prop_assert_eq!(pipeline_gap(&cfg.translated(&h).unwrap()).unwrap(), pipeline_gap(&cfg).unwrap());
    }

    #[test]
    fn circumcenter_is_equidistant(cfg in config()) {
        let tet = construct(&cfg).unwrap();
        let o = circumcenter3(&tet).unwrap();
        let r2 = o.dist2(&tet.x);
        prop_assert_eq!(o.dist2(&tet.y), r2.clone());
        prop_assert_eq!(o.dist2(&tet.z), r2.clone());
        prop_assert_eq!(o.dist2(&tet.w), r2);
    }
}
