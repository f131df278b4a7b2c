mod common;

use common::{backend, draw, draw_nonzero, field, rng, BACKENDS};
use desargues::skewfield::{field_arith, ArithOp};
use desargues::Scalar;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(b in 0..BACKENDS.len(), seed in any::<u64>()) {
        let spec = backend(b);
        let [x, y, z] = draw(spec, &mut rng(seed));
        let (o, i) = (spec.zero(), spec.one());
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x + &o, x.clone());
        prop_assert!((&x + &x.negated()).is_zero());
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &i, x.clone());
        prop_assert_eq!(&i * &x, x.clone());
        prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
        prop_assert_eq!(&(&x + &y) * &z, &x * &z + &y * &z);
        if !x.is_zero() {
            let inv = x.inv().unwrap();
            prop_assert!((&x * &inv).is_one());
            prop_assert!((&inv * &x).is_one());
        }
        if (&x * &y).is_zero() {
            prop_assert!(x.is_zero() || y.is_zero());
        }
    }

    #[test]
    fn inverse_reverses_products(b in 0..BACKENDS.len(), seed in any::<u64>()) {
        let spec = backend(b);
        let [x, y] = draw_nonzero(spec, &mut rng(seed));
        prop_assert_eq!((&x * &y).inv().unwrap(), y.inv().unwrap() * x.inv().unwrap());
        let lhs = x.inv().unwrap() - y.inv().unwrap();
        let rhs = y.inv().unwrap() * (&y - &x) * x.inv().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_arith_matches_operators(b in 0..BACKENDS.len(), seed in any::<u64>()) {
        let spec = backend(b);
        let [x, y] = draw(spec, &mut rng(seed));
        prop_assert_eq!(field_arith(ArithOp::Add, &x, Some(&y)).unwrap(), &x + &y);
        prop_assert_eq!(field_arith(ArithOp::Mul, &x, Some(&y)).unwrap(), &x * &y);
        prop_assert_eq!(field_arith(ArithOp::Neg, &x, None).unwrap(), x.negated());
        match field_arith(ArithOp::Inv, &x, None) {
            Ok(v) => prop_assert!((&v * &x).is_one()),
            Err(e) => prop_assert!(x.is_zero() && e.kind() == "DivisionByZero"),
        }
    }

    #[test]
    fn literals_round_trip(b in 0..BACKENDS.len(), seed in any::<u64>()) {
        let spec = backend(b);
        let [x] = draw(spec, &mut rng(seed));
        let text = x.to_string();
        let back = spec.parse_scalar(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, x);
    }
}

#[test]
fn idempotents_and_involutions_on_finite_fields() {
    for name in ["F:2", "F:3", "F:5", "F:7", "F:2^2", "F:2^3", "F:3^2"] {
        let spec = field(name);
        let (o, i) = (spec.zero(), spec.one());
        for a in spec.elements().unwrap() {
            if &a * &a == a {
                assert!(a == o || a == i, "{name}: {a} is idempotent");
            }
            if !a.is_zero() && (&a * &a).is_one() {
                assert_eq!(a.inv().unwrap(), a);
                assert!(a == i || a == i.negated(), "{name}: {a} squares to I");
            }
        }
    }
}

#[test]
fn finite_backends_are_commutative() {
    for name in ["F:2^2", "F:3^2", "F:5"] {
        let all = field(name).elements().unwrap();
        for x in &all {
            for y in &all {
                assert_eq!(x * y, y * x, "{name}");
            }
        }
    }
}

#[test]
fn quaternions_do_not_commute() {
    let h = field("HQ");
    let [i, j, k] = h.quaternion_units().unwrap();
    assert_eq!(&i * &j, k);
    assert_eq!(&j * &i, k.negated());
    assert!(!h.is_commutative());
    assert!(!i.commutes_with(&j));
}

#[test]
fn canonical_forms() {
    let q = field("Q");
    assert_eq!(q.parse_scalar("-4/6").unwrap().to_string(), "-2/3");
    assert_eq!(q.parse_scalar("-4/6").unwrap(), q.rational(-2, 3).unwrap());
    let f5 = field("F:5");
    assert_eq!(f5.parse_scalar("-1").unwrap(), f5.from_int(4));
    assert_eq!(f5.from_int(4).to_string(), "4");
    let h = field("HQ");
    let x: Scalar = h.parse_scalar("1/2 - 2/4i + k").unwrap();
    assert_eq!(h.parse_scalar(&x.to_string()).unwrap(), x);
    assert!("F:4".parse::<desargues::FieldSpec>().is_err());
}
