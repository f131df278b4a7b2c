//! Exact arithmetic over pluggable skew fields.
//!
//! A [`FieldSpec`] names the active skew field K; a [`Scalar`] is an element
//! of it in canonical form, so structural equality is value equality. Four
//! backends are provided: the rationals, prime fields, small extension fields
//! and the rational quaternions. By Wedderburn's theorem the quaternions are
//! the only noncommutative backend.
//!
//! Mixing scalars from two different fields is a programming error for the
//! operator impls (`&a + &b` panics) and a recoverable [`Error::FieldMismatch`]
//! for the `checked_*` methods.

mod finite;
mod literal;
mod quaternion;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub use finite::{ExtensionField, PrimeField, MAX_DEGREE, MAX_ORDER};
pub use quaternion::Quaternion;

use finite::Coeffs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeField),
    Extension(ExtensionField),
    Quaternions,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(PrimeField, u16),
    Poly(ExtensionField, Coeffs),
    Quaternion(Box<Quaternion>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Neg,
    Mul,
    Inv,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(FieldSpec::Prime(PrimeField::new(p)?))
    }

    /// F_{p^k}; `k = 1` gives the prime field.
    pub fn extension(p: u64, k: u32) -> Result<Self> {
        if k == 1 {
            return Self::prime(p);
        }
        Ok(FieldSpec::Extension(ExtensionField::new(p, k)?))
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Image of an integer under Z → K.
    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(f) => Scalar::Residue(*f, f.reduce(n)),
            FieldSpec::Extension(f) => Scalar::Poly(*f, f.constant(f.base().reduce(n))),
            FieldSpec::Quaternions => Scalar::Quaternion(Box::new(Quaternion::from_ints(n, 0, 0, 0))),
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_int(num).checked_mul(&self.from_int(den).inv()?)
    }

    pub fn quaternion(&self, q: Quaternion) -> Result<Scalar> {
        match self {
            FieldSpec::Quaternions => Ok(Scalar::Quaternion(Box::new(q))),
            _ => Err(Error::FieldMismatch {
                left: self.to_string(),
                right: FieldSpec::Quaternions.to_string(),
            }),
        }
    }

    /// The imaginary units i, j, k of the quaternions; `None` elsewhere.
    pub fn quaternion_units(&self) -> Option<[Scalar; 3]> {
        match self {
            FieldSpec::Quaternions => Some([
                Scalar::Quaternion(Box::new(Quaternion::from_ints(0, 1, 0, 0))),
                Scalar::Quaternion(Box::new(Quaternion::from_ints(0, 0, 1, 0))),
                Scalar::Quaternion(Box::new(Quaternion::from_ints(0, 0, 0, 1))),
            ]),
            _ => None,
        }
    }

    /// Smallest n with n·I = O, or 0 when no such n exists.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals | FieldSpec::Quaternions => 0,
            FieldSpec::Prime(f) => f.modulus() as u64,
            FieldSpec::Extension(f) => f.characteristic() as u64,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals | FieldSpec::Quaternions => None,
            FieldSpec::Prime(f) => Some(f.modulus() as u64),
            FieldSpec::Extension(f) => Some(f.order()),
        }
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, FieldSpec::Quaternions)
    }

    /// A finite set whose centralizer is the center of K: commuting with all
    /// of it means commuting with everything.
    pub fn generators(&self) -> Vec<Scalar> {
        match self.quaternion_units() {
            Some(units) => {
                let mut g = vec![self.one()];
                g.extend(units);
                g
            }
            None => vec![self.one()],
        }
    }

    /// Every element, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Prime(f) => Some((0..f.modulus()).map(|r| Scalar::Residue(*f, r)).collect()),
            FieldSpec::Extension(f) => Some(
                (0..f.order())
                    .map(|idx| Scalar::Poly(*f, f.element_at(idx)))
                    .collect(),
            ),
            _ => None,
        }
    }

    /// A random element. Infinite backends draw small numerators and
    /// denominators so that constructions stay cheap; a quarter of the draws
    /// are integers and zero components are common.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(random_rational(rng)),
            FieldSpec::Prime(f) => Scalar::Residue(*f, rng.gen_range(0..f.modulus())),
            FieldSpec::Extension(f) => Scalar::Poly(*f, f.element_at(rng.gen_range(0..f.order()))),
            FieldSpec::Quaternions => {
                let mut comp = || {
                    if rng.gen_bool(0.3) {
                        BigRational::zero()
                    } else {
                        random_rational(rng)
                    }
                };
                Scalar::Quaternion(Box::new(Quaternion::new(comp(), comp(), comp(), comp())))
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = if rng.gen_bool(0.25) { 1 } else { rng.gen_range(1..=6) };
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar {
    pub fn spec(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue(f, _) => FieldSpec::Prime(*f),
            Scalar::Poly(f, _) => FieldSpec::Extension(*f),
            Scalar::Quaternion(_) => FieldSpec::Quaternions,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(_, v) => *v == 0,
            Scalar::Poly(_, c) => ExtensionField::is_zero(c),
            Scalar::Quaternion(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(_, v) => *v == 1,
            Scalar::Poly(f, c) => *c == f.constant(1),
            Scalar::Quaternion(q) => q.is_unit_one(),
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch {
            left: self.spec().to_string(),
            right: other.spec().to_string(),
        }
    }

    pub fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(self.mismatch(other))
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue(f, a), Scalar::Residue(g, b)) if f == g => Scalar::Residue(*f, f.add(*a, *b)),
            (Scalar::Poly(f, a), Scalar::Poly(g, b)) if f == g => Scalar::Poly(*f, f.add(a, b)),
            (Scalar::Quaternion(a), Scalar::Quaternion(b)) => Scalar::Quaternion(Box::new(&**a + &**b)),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_add(&rhs.negated())
    }

    /// `self · rhs` in that order.
    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue(f, a), Scalar::Residue(g, b)) if f == g => Scalar::Residue(*f, f.mul(*a, *b)),
            (Scalar::Poly(f, a), Scalar::Poly(g, b)) if f == g => Scalar::Poly(*f, f.mul(a, b)),
            (Scalar::Quaternion(a), Scalar::Quaternion(b)) => Scalar::Quaternion(Box::new(&**a * &**b)),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn negated(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(f, a) => Scalar::Residue(*f, f.neg(*a)),
            Scalar::Poly(f, a) => Scalar::Poly(*f, f.neg(a)),
            Scalar::Quaternion(a) => Scalar::Quaternion(Box::new(-&**a)),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue(f, a) => Scalar::Residue(*f, f.inv(*a)?),
            Scalar::Poly(f, a) => Scalar::Poly(*f, f.inv(a)?),
            Scalar::Quaternion(a) => Scalar::Quaternion(Box::new(a.inv()?)),
        })
    }

    /// `self⁻¹ · rhs`
    pub fn left_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.inv()?.checked_mul(rhs)
    }

    /// `self · rhs⁻¹`
    pub fn right_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_mul(&rhs.inv()?)
    }

    /// True iff `self` commutes with every element of K, decided against
    /// [`FieldSpec::generators`].
    pub fn is_central(&self) -> bool {
        let spec = self.spec();
        if spec.is_commutative() {
            return true;
        }
        spec.generators().iter().all(|g| self.commutes_with(g))
    }

    pub fn commutes_with(&self, other: &Scalar) -> bool {
        match (self.checked_mul(other), other.checked_mul(self)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Membership of `k` in the centralizer of `self`.
    pub fn centralizer_contains(&self, k: &Scalar) -> Result<bool> {
        Ok(self.checked_mul(k)? == k.checked_mul(self)?)
    }

    /// `q⁻¹ · self · q`
    pub fn conjugate_by(&self, q: &Scalar) -> Result<Scalar> {
        q.inv()?.checked_mul(self)?.checked_mul(q)
    }
}

pub fn field_arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let second = || b.ok_or(Error::DegenerateInput("binary operation needs two operands"));
    match op {
        ArithOp::Add => a.checked_add(second()?),
        ArithOp::Mul => a.checked_mul(second()?),
        ArithOp::Neg => Ok(a.negated()),
        ArithOp::Inv => a.inv(),
    }
}

pub fn characteristic(spec: &FieldSpec) -> u64 {
    spec.characteristic()
}

pub fn is_central(a: &Scalar) -> bool {
    a.is_central()
}

pub fn centralizer_contains(p: &Scalar, k: &Scalar) -> Result<bool> {
    p.centralizer_contains(k)
}

pub fn conjugate(p: &Scalar, q: &Scalar) -> Result<Scalar> {
    p.same_field(q)?;
    p.conjugate_by(q)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }

        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.negated()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F:{}", p.modulus()),
            FieldSpec::Extension(e) => write!(f, "F:{}^{}", e.characteristic(), e.degree()),
            FieldSpec::Quaternions => write!(f, "HQ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hq(a: i64, b: i64, c: i64, d: i64) -> Scalar {
        Scalar::Quaternion(Box::new(Quaternion::from_ints(a, b, c, d)))
    }

    #[test]
    fn rational_addition() {
        let q = FieldSpec::Rationals;
        let sum = q.rational(1, 2).unwrap() + q.rational(1, 3).unwrap();
        assert_eq!(sum, q.rational(5, 6).unwrap());
    }

    #[test]
    fn quaternion_units_do_not_commute() {
        let [i, j, k] = FieldSpec::Quaternions.quaternion_units().unwrap();
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(i.inv().unwrap(), -&i);
    }

    #[test]
    fn one_is_a_two_sided_identity() {
        for spec in [FieldSpec::Rationals, FieldSpec::prime(7).unwrap(), FieldSpec::Quaternions] {
            let a = match spec {
                FieldSpec::Quaternions => hq(1, -2, 3, 5),
                _ => spec.from_int(4),
            };
            assert_eq!(&a * &spec.one(), a);
            assert_eq!(&spec.one() * &a, a);
        }
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = FieldSpec::Rationals.one();
        let b = FieldSpec::prime(5).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch { .. })));
        let f3 = FieldSpec::prime(3).unwrap().one();
        assert!(b.checked_add(&f3).is_err());
        assert!(field_arith(ArithOp::Add, &a, Some(&b)).is_err());
    }

    #[test]
    fn inverse_of_zero() {
        for spec in [
            FieldSpec::Rationals,
            FieldSpec::prime(5).unwrap(),
            FieldSpec::extension(2, 2).unwrap(),
            FieldSpec::Quaternions,
        ] {
            assert_eq!(spec.zero().inv(), Err(Error::DivisionByZero));
            assert_eq!(field_arith(ArithOp::Inv, &spec.zero(), None), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn characteristics() {
        assert_eq!(characteristic(&FieldSpec::Rationals), 0);
        assert_eq!(characteristic(&FieldSpec::Quaternions), 0);
        assert_eq!(characteristic(&FieldSpec::prime(2).unwrap()), 2);
        assert_eq!(characteristic(&FieldSpec::extension(2, 2).unwrap()), 2);
        assert_eq!(characteristic(&FieldSpec::extension(3, 2).unwrap()), 3);
    }

    #[test]
    fn centrality() {
        let h = FieldSpec::Quaternions;
        assert!(is_central(&h.from_int(5)));
        let [i, j, _] = h.quaternion_units().unwrap();
        assert!(!is_central(&i));
        assert!(is_central(&FieldSpec::Rationals.rational(-7, 3).unwrap()));
        assert!(is_central(&FieldSpec::extension(2, 3).unwrap().elements().unwrap()[5]));

        assert!(centralizer_contains(&i, &hq(3, 2, 0, 0)).unwrap());
        assert!(!centralizer_contains(&i, &j).unwrap());
        assert!(centralizer_contains(&hq(1, 2, -3, 4), &h.one()).unwrap());
    }

    #[test]
    fn conjugation() {
        let h = FieldSpec::Quaternions;
        let [i, j, _] = h.quaternion_units().unwrap();
        assert_eq!(conjugate(&i, &j).unwrap(), -&i);
        let five = h.from_int(5);
        assert_eq!(conjugate(&five, &hq(1, 2, 3, 4)).unwrap(), five);
        let q = FieldSpec::Rationals;
        assert_eq!(conjugate(&q.from_int(3), &q.from_int(7)).unwrap(), q.from_int(3));
        assert_eq!(conjugate(&i, &h.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn finite_elements_are_distinct_and_complete() {
        let f9 = FieldSpec::extension(3, 2).unwrap();
        let els = f9.elements().unwrap();
        assert_eq!(els.len(), 9);
        let set: std::collections::HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 9);
        assert!(FieldSpec::Rationals.elements().is_none());
    }

    #[test]
    fn prime_subfield_embedding_wraps() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.from_int(7), f5.from_int(2));
        assert_eq!(f5.from_int(-1), f5.from_int(4));
        let f4 = FieldSpec::extension(2, 2).unwrap();
        assert_eq!(f4.from_int(2), f4.zero());
    }
}
