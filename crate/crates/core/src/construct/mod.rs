//! Arithmetic on ℓ^{OI} by incidence alone.
//!
//! Every operation uses only [`line_through`](crate::plane::line_through),
//! [`parallel_through`](crate::plane::parallel_through) and
//! [`intersect`](crate::plane::intersect), starting from `O = (0,0)`,
//! `I = (1,0)`, the operands on the x-axis and an auxiliary point `B1` off
//! it. The result never depends on the choice of `B1`.

mod trace;

pub use trace::{ConstructionTrace, Derivation, TraceObject, TraceStep};

use rand::Rng;
use trace::TraceBuilder;

use crate::error::{Error, Result};
use crate::plane::PlanePoint;
use crate::skewfield::{FieldSpec, Scalar};

/// A point `(value, 0)` of ℓ^{OI}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineCoordinate(Scalar);

impl LineCoordinate {
    pub fn new(value: Scalar) -> Self {
        Self(value)
    }

    /// `O`
    pub fn origin(spec: FieldSpec) -> Self {
        Self(spec.zero())
    }

    /// `I`
    pub fn unit(spec: FieldSpec) -> Self {
        Self(spec.one())
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    pub fn into_value(self) -> Scalar {
        self.0
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec()
    }

    pub fn point(&self) -> PlanePoint {
        PlanePoint {
            x: self.0.clone(),
            y: self.spec().zero(),
        }
    }
}

impl From<Scalar> for LineCoordinate {
    fn from(value: Scalar) -> Self {
        Self(value)
    }
}

/// `(0, 1)`
pub fn default_aux(spec: FieldSpec) -> PlanePoint {
    PlanePoint {
        x: spec.zero(),
        y: spec.one(),
    }
}

/// A random point off ℓ^{OI}.
pub fn random_aux<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> PlanePoint {
    PlanePoint {
        x: spec.random(rng),
        y: spec.random_nonzero(rng),
    }
}

fn setup(
    first: (&str, &LineCoordinate),
    second: (&str, &LineCoordinate),
    aux: &PlanePoint,
) -> Result<TraceBuilder> {
    first.1.value().same_field(second.1.value())?;
    first.1.value().same_field(&aux.x)?;
    if aux.y.is_zero() {
        return Err(Error::AuxOnLine);
    }
    let spec = aux.spec();
    let mut t = TraceBuilder::new();
    t.given("O", PlanePoint::origin(spec));
    t.given("I", LineCoordinate::unit(spec).point());
    t.given(first.0, first.1.point());
    t.given(second.0, second.1.point());
    t.step(1);
    t.given("B1", aux.clone());
    Ok(t)
}

fn finish(t: TraceBuilder, aux: &PlanePoint, p: PlanePoint) -> (LineCoordinate, ConstructionTrace) {
    let result = LineCoordinate::new(p.x);
    let trace = t.finish(aux.clone(), result.clone());
    (result, trace)
}

/// `A + B`.
///
/// 1. `B1 = aux`
/// 2. `P1` is where the parallel to ℓ^{OI} through `B1` meets the parallel
///    to ℓ^{OB1} through `A`
/// 3. the parallel to ℓ^{BB1} through `P1` meets ℓ^{OI} at `A + B`
pub fn geo_add(
    a: &LineCoordinate,
    b: &LineCoordinate,
    aux: &PlanePoint,
) -> Result<(LineCoordinate, ConstructionTrace)> {
    let mut t = setup(("A", a), ("B", b), aux)?;
    t.step(2);
    t.join("l_OI", "O", "I")?;
    t.parallel("l_OI^B1", "l_OI", "B1");
    t.join("l_OB1", "O", "B1")?;
    t.parallel("l_OB1^A", "l_OB1", "A");
    t.meet("P1", "l_OI^B1", "l_OB1^A")?;
    t.step(3);
    t.join("l_BB1", "B", "B1")?;
    t.parallel("l_BB1^P1", "l_BB1", "P1");
    let c = t.meet("C", "l_BB1^P1", "l_OI")?;
    Ok(finish(t, aux, c))
}

/// `A · B`.
///
/// 1. `B1 = aux`
/// 2. `P1` is where the parallel to ℓ^{IB1} through `A` meets ℓ^{OB1}
/// 3. the parallel to ℓ^{BB1} through `P1` meets ℓ^{OI} at `A · B`
pub fn geo_mul(
    a: &LineCoordinate,
    b: &LineCoordinate,
    aux: &PlanePoint,
) -> Result<(LineCoordinate, ConstructionTrace)> {
    let mut t = setup(("A", a), ("B", b), aux)?;
    t.step(2);
    t.join("l_OI", "O", "I")?;
    t.join("l_IB1", "I", "B1")?;
    t.parallel("l_IB1^A", "l_IB1", "A");
    t.join("l_OB1", "O", "B1")?;
    t.meet("P1", "l_IB1^A", "l_OB1")?;
    t.step(3);
    t.join("l_BB1", "B", "B1")?;
    t.parallel("l_BB1^P1", "l_BB1", "P1");
    let c = t.meet("C", "l_BB1^P1", "l_OI")?;
    Ok(finish(t, aux, c))
}

/// `C - A`: the `B` with `A + B = C`, found by running the addition
/// construction up to `P1` and then taking the parallel to ℓ^{CP1} through
/// `B1`.
pub fn geo_sub(
    c: &LineCoordinate,
    a: &LineCoordinate,
    aux: &PlanePoint,
) -> Result<(LineCoordinate, ConstructionTrace)> {
    let mut t = setup(("C", c), ("A", a), aux)?;
    t.step(2);
    t.join("l_OI", "O", "I")?;
    t.parallel("l_OI^B1", "l_OI", "B1");
    t.join("l_OB1", "O", "B1")?;
    t.parallel("l_OB1^A", "l_OB1", "A");
    t.meet("P1", "l_OI^B1", "l_OB1^A")?;
    t.step(3);
    t.join("l_CP1", "C", "P1")?;
    t.parallel("l_CP1^B1", "l_CP1", "B1");
    let b = t.meet("B", "l_CP1^B1", "l_OI")?;
    Ok(finish(t, aux, b))
}

/// `B⁻¹ · A`: the `X` with `B · X = A`, found by running the multiplication
/// construction for `B` up to `P1` and then taking the parallel to ℓ^{AP1}
/// through `B1`.
pub fn geo_left_div(
    a: &LineCoordinate,
    b: &LineCoordinate,
    aux: &PlanePoint,
) -> Result<(LineCoordinate, ConstructionTrace)> {
    if b.value().is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut t = setup(("A", a), ("B", b), aux)?;
    t.step(2);
    t.join("l_OI", "O", "I")?;
    t.join("l_IB1", "I", "B1")?;
    t.parallel("l_IB1^B", "l_IB1", "B");
    t.join("l_OB1", "O", "B1")?;
    t.meet("P1", "l_IB1^B", "l_OB1")?;
    t.step(3);
    t.join("l_AP1", "A", "P1")?;
    t.parallel("l_AP1^B1", "l_AP1", "B1");
    let x = t.meet("X", "l_AP1^B1", "l_OI")?;
    Ok(finish(t, aux, x))
}

/// `-A = O - A`
pub fn geo_neg(a: &LineCoordinate, aux: &PlanePoint) -> Result<(LineCoordinate, ConstructionTrace)> {
    geo_sub(&LineCoordinate::origin(a.spec()), a, aux)
}

/// `B⁻¹ = B⁻¹ · I`
pub fn geo_inv(b: &LineCoordinate, aux: &PlanePoint) -> Result<(LineCoordinate, ConstructionTrace)> {
    geo_left_div(&LineCoordinate::unit(b.spec()), b, aux)
}
