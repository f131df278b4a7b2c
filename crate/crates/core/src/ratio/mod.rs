//! Two-point and three-point ratios of points of ℓ^{OI}.
//!
//! `r(A:B) = B⁻¹·A` and `r(A,B;C) = (B−C)⁻¹·(A−C)`, both with left
//! division. A zero denominator over a nonzero numerator gives the infinite
//! point; `0/0` is [`Error::UndefinedRatio`].

mod identities;

pub use identities::{
    check_preservation, check_ratio2_identities, check_ratio3_identities, check_substructure, PreservationMap,
};

use std::fmt;

use crate::construct::{geo_left_div, geo_sub, LineCoordinate};
use crate::error::{Error, Result};
use crate::plane::PlanePoint;
use crate::skewfield::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RatioValue {
    Finite(LineCoordinate),
    /// `∞`
    Infinity,
}

impl RatioValue {
    pub fn finite(value: Scalar) -> Self {
        RatioValue::Finite(LineCoordinate::new(value))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, RatioValue::Infinity)
    }

    pub fn value(&self) -> Result<&Scalar> {
        match self {
            RatioValue::Finite(x) => Ok(x.value()),
            RatioValue::Infinity => Err(Error::InfiniteInput),
        }
    }
}

impl fmt::Display for RatioValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioValue::Finite(x) => write!(f, "{}", x.value()),
            RatioValue::Infinity => f.write_str("inf"),
        }
    }
}

/// `num / den` as a ratio, with `∞` and `0/0` handled.
fn quotient(num: &Scalar, den: &Scalar) -> Result<RatioValue> {
    if den.is_zero() {
        return if num.is_zero() {
            Err(Error::UndefinedRatio)
        } else {
            Ok(RatioValue::Infinity)
        };
    }
    Ok(RatioValue::finite(den.left_div(num)?))
}

/// `r(A:B) = B⁻¹·A`
pub fn ratio2(a: &LineCoordinate, b: &LineCoordinate) -> Result<RatioValue> {
    a.value().same_field(b.value())?;
    quotient(a.value(), b.value())
}

/// `r(A,B;C) = (B−C)⁻¹·(A−C)`
pub fn ratio3(a: &LineCoordinate, b: &LineCoordinate, c: &LineCoordinate) -> Result<RatioValue> {
    let num = a.value().checked_sub(c.value())?;
    let den = b.value().checked_sub(c.value())?;
    quotient(&num, &den)
}

/// `r(A:B)` through the left-division construction.
pub fn geo_ratio2(a: &LineCoordinate, b: &LineCoordinate, aux: &PlanePoint) -> Result<RatioValue> {
    a.value().same_field(b.value())?;
    if b.value().is_zero() {
        return quotient(a.value(), b.value());
    }
    Ok(RatioValue::Finite(geo_left_div(a, b, aux)?.0))
}

/// `r(A,B;C)` as the left quotient of two constructed differences.
pub fn geo_ratio3(a: &LineCoordinate, b: &LineCoordinate, c: &LineCoordinate, aux: &PlanePoint) -> Result<RatioValue> {
    let (num, _) = geo_sub(a, c, aux)?;
    let (den, _) = geo_sub(b, c, aux)?;
    if den.value().is_zero() {
        return quotient(num.value(), den.value());
    }
    Ok(RatioValue::Finite(geo_left_div(&num, &den, aux)?.0))
}

/// The point `X = B·R` with `r(X:B) = R`.
pub fn ratio2_inverse_point(r: &RatioValue, b: &LineCoordinate) -> Result<LineCoordinate> {
    let r = r.value()?;
    if b.value().is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(LineCoordinate::new(b.value().checked_mul(r)?))
}

/// The point `X = (B−C)·R + C` with `r(X,B;C) = R`.
pub fn ratio3_inverse_point(r: &RatioValue, b: &LineCoordinate, c: &LineCoordinate) -> Result<LineCoordinate> {
    let r = r.value()?;
    let d = b.value().checked_sub(c.value())?;
    if d.is_zero() {
        return Err(Error::DegenerateInput("B and C must differ"));
    }
    Ok(LineCoordinate::new(d.checked_mul(r)?.checked_add(c.value())?))
}

/// `r_BC(X) = M·X + N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineEquationCoeffs {
    pub m: Scalar,
    pub n: Scalar,
}

impl LineEquationCoeffs {
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        self.m.checked_mul(x)?.checked_add(&self.n)
    }
}

/// `M = (B−C)⁻¹`, `N = (C−B)⁻¹·C`.
pub fn line_equation_coeffs(b: &LineCoordinate, c: &LineCoordinate) -> Result<LineEquationCoeffs> {
    let d = b.value().checked_sub(c.value())?;
    if d.is_zero() {
        return Err(Error::DegenerateInput("B and C must differ"));
    }
    Ok(LineEquationCoeffs {
        m: d.inv()?,
        n: d.negated().left_div(c.value())?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Midpoint {
    Unique(LineCoordinate),
    /// Characteristic 2 with `A ≠ B`: no `C` has `C + C = A + B`.
    NoSolution,
    /// Characteristic 2 with `A = B`: every `C` works.
    AllSolutions,
}

impl fmt::Display for Midpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Midpoint::Unique(c) => write!(f, "{}", c.value()),
            Midpoint::NoSolution => f.write_str("none"),
            Midpoint::AllSolutions => f.write_str("all"),
        }
    }
}

/// Solves `C + C = A + B`.
pub fn midpoint_solve(a: &LineCoordinate, b: &LineCoordinate) -> Result<Midpoint> {
    let sum = a.value().checked_add(b.value())?;
    let spec = a.spec();
    if spec.characteristic() == 2 {
        return Ok(if a == b { Midpoint::AllSolutions } else { Midpoint::NoSolution });
    }
    let two = spec.one() + spec.one();
    Ok(Midpoint::Unique(LineCoordinate::new(two.left_div(&sum)?)))
}

/// A ratio map of ℓ^{OI} onto itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatioMapSpec {
    /// `r_B(X) = r(X:B)`
    TwoPoint(LineCoordinate),
    /// `r_BC(X) = r(X,B;C)`
    ThreePoint(LineCoordinate, LineCoordinate),
}

impl RatioMapSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            RatioMapSpec::TwoPoint(b) if b.value().is_zero() => Err(Error::DegenerateInput("B must not be O")),
            RatioMapSpec::ThreePoint(b, c) if b == c => Err(Error::DegenerateInput("B and C must differ")),
            _ => Ok(()),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            RatioMapSpec::TwoPoint(b) | RatioMapSpec::ThreePoint(b, _) => b.spec(),
        }
    }

    pub fn apply(&self, x: &LineCoordinate) -> Result<Scalar> {
        let r = match self {
            RatioMapSpec::TwoPoint(b) => ratio2(x, b)?,
            RatioMapSpec::ThreePoint(b, c) => ratio3(x, b, c)?,
        };
        r.value().cloned()
    }

    pub fn preimage(&self, r: &Scalar) -> Result<LineCoordinate> {
        let r = RatioValue::finite(r.clone());
        match self {
            RatioMapSpec::TwoPoint(b) => ratio2_inverse_point(&r, b),
            RatioMapSpec::ThreePoint(b, c) => ratio3_inverse_point(&r, b, c),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::default_aux;

    fn lc(spec: &str, s: &str) -> LineCoordinate {
        let spec: FieldSpec = spec.parse().unwrap();
        LineCoordinate::new(spec.parse_scalar(s).unwrap())
    }

    fn r2(spec: &str, a: &str, b: &str) -> Result<String> {
        ratio2(&lc(spec, a), &lc(spec, b)).map(|r| r.to_string())
    }

    fn r3(spec: &str, a: &str, b: &str, c: &str) -> Result<String> {
        ratio3(&lc(spec, a), &lc(spec, b), &lc(spec, c)).map(|r| r.to_string())
    }

    #[test]
    fn two_point_ratios() {
        assert_eq!(r2("Q", "5/3", "5/3").unwrap(), "1");
        assert_eq!(r2("Q", "0", "4").unwrap(), "0");
        assert_eq!(r2("Q", "4", "0").unwrap(), "inf");
        assert_eq!(r2("Q", "0", "0"), Err(Error::UndefinedRatio));
        assert_eq!(r2("HQ", "j", "i").unwrap(), "-k");
        assert_eq!(r2("Q", "6", "2").unwrap(), "3");
    }

    #[test]
    fn three_point_ratios() {
        assert_eq!(r3("Q", "7", "3", "1").unwrap(), "3");
        assert_eq!(r3("Q", "4", "4", "1").unwrap(), "1");
        assert_eq!(r3("Q", "1", "4", "1").unwrap(), "0");
        assert_eq!(r3("Q", "7", "1", "1").unwrap(), "inf");
        assert_eq!(r3("Q", "1", "1", "1"), Err(Error::UndefinedRatio));
    }

    #[test]
    fn geometric_ratios_agree() {
        for (spec, a, b, c) in [("Q", "7", "3", "1"), ("HQ", "j", "i", "1+k"), ("F:5", "1", "3", "4"), ("F:2^2", "[0,1]", "[1,1]", "1")] {
            let aux = default_aux(spec.parse().unwrap());
            let (a, b, c) = (lc(spec, a), lc(spec, b), lc(spec, c));
            assert_eq!(geo_ratio2(&a, &b, &aux).unwrap(), ratio2(&a, &b).unwrap());
            assert_eq!(geo_ratio3(&a, &b, &c, &aux).unwrap(), ratio3(&a, &b, &c).unwrap());
        }
        let aux = default_aux(FieldSpec::Rationals);
        assert_eq!(geo_ratio2(&lc("Q", "3"), &lc("Q", "0"), &aux).unwrap(), RatioValue::Infinity);
        assert_eq!(geo_ratio3(&lc("Q", "3"), &lc("Q", "2"), &lc("Q", "2"), &aux).unwrap(), RatioValue::Infinity);
    }

    #[test]
    fn inverse_points() {
        let b = lc("Q", "-2/5");
        assert_eq!(ratio2_inverse_point(&RatioValue::finite(FieldSpec::Rationals.one()), &b).unwrap(), b);
        assert_eq!(
            ratio2_inverse_point(&RatioValue::finite(FieldSpec::Rationals.zero()), &b).unwrap(),
            lc("Q", "0")
        );
        let r = RatioValue::Finite(lc("HQ", "-k"));
        assert_eq!(ratio2_inverse_point(&r, &lc("HQ", "i")).unwrap(), lc("HQ", "j"));
        assert_eq!(ratio2_inverse_point(&RatioValue::Infinity, &b), Err(Error::InfiniteInput));
        assert_eq!(
            ratio3_inverse_point(&RatioValue::Finite(lc("Q", "3")), &lc("Q", "3"), &lc("Q", "1")).unwrap(),
            lc("Q", "7")
        );
        let (b, c) = (lc("Q", "3"), lc("Q", "1"));
        assert_eq!(ratio3_inverse_point(&RatioValue::Finite(lc("Q", "0")), &b, &c).unwrap(), c);
        assert_eq!(ratio3_inverse_point(&RatioValue::Finite(lc("Q", "1")), &b, &c).unwrap(), b);
        assert!(matches!(
            ratio3_inverse_point(&RatioValue::Finite(lc("Q", "1")), &b, &b),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn line_equation() {
        let e = line_equation_coeffs(&lc("Q", "3"), &lc("Q", "1")).unwrap();
        assert_eq!((e.m.to_string(), e.n.to_string()), ("1/2".into(), "-1/2".into()));
        assert_eq!(e.eval(lc("Q", "7").value()).unwrap().to_string(), "3");
        assert_eq!(e.eval(lc("Q", "1").value()).unwrap().to_string(), "0");
        assert_eq!(e.eval(lc("Q", "3").value()).unwrap().to_string(), "1");
        let e = line_equation_coeffs(&lc("F:5", "3"), &lc("F:5", "1")).unwrap();
        assert_eq!((e.m.to_string(), e.n.to_string()), ("3".into(), "2".into()));
    }

    #[test]
    fn midpoints() {
        let m = |s: &str, a: &str, b: &str| midpoint_solve(&lc(s, a), &lc(s, b)).unwrap().to_string();
        assert_eq!(m("Q", "2", "4"), "3");
        assert_eq!(m("F:5", "1", "3"), "2");
        assert_eq!(m("F:2", "0", "1"), "none");
        assert_eq!(m("F:2", "1", "1"), "all");
        assert_eq!(m("F:2^2", "[0,1]", "1"), "none");
        assert_eq!(m("HQ", "i", "j"), "1/2i+1/2j");
    }
}
