//! Executable versions of the ratio theorems. Each check returns a
//! [`Report`] with one entry per identity; entries whose hypotheses fail on
//! the given inputs are skipped.

use std::collections::HashSet;
use std::fmt;

use super::{line_equation_coeffs, ratio2, ratio3, RatioMapSpec, RatioValue};
use crate::construct::LineCoordinate;
use crate::error::{Error, Result};
use crate::plane::{apply_map, Direction, PlaneLine, PlaneMap, PlanePoint};
use crate::report::Report;
use crate::skewfield::Scalar;

/// Either a ratio or the error it raised, for display in reports.
struct Shown(Result<RatioValue>);

impl fmt::Display for Shown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Ok(r) => write!(f, "{r}"),
            Err(Error::UndefinedRatio) => f.write_str("undefined"),
            Err(e) => write!(f, "error: {}", e.kind()),
        }
    }
}

fn holds(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

fn lc(x: Scalar) -> LineCoordinate {
    LineCoordinate::new(x)
}

fn r2(a: &Scalar, b: &Scalar) -> Result<RatioValue> {
    ratio2(&lc(a.clone()), &lc(b.clone()))
}

fn r3(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<RatioValue> {
    ratio3(&lc(a.clone()), &lc(b.clone()), &lc(c.clone()))
}

/// Finite ratio value; hypotheses checked by the caller guarantee it exists.
fn v2(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    r2(a, b)?.value().cloned()
}

fn v3(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Scalar> {
    r3(a, b, c)?.value().cloned()
}

/// The two-point theorems and the degenerate cases of `r(A:B)`.
pub fn check_ratio2_identities(a: &LineCoordinate, b: &LineCoordinate, c: &LineCoordinate) -> Result<Report> {
    let (a, b, c) = (a.value(), b.value(), c.value());
    a.same_field(b)?;
    a.same_field(c)?;
    let spec = a.spec();
    let (o, i) = (spec.zero(), spec.one());
    let inputs = [a, b, c];
    let mut rep = Report::new();

    let id = "r^-1(A:B) = r(B:A)";
    if !a.is_zero() && !b.is_zero() {
        rep.compare(id, inputs, v2(a, b)?.inv()?, v2(b, a)?);
    } else {
        rep.skip(id, inputs, "needs A, B != O");
    }

    let id = "r(A+B:C) = r(A:C) + r(B:C)";
    if !c.is_zero() {
        rep.compare(id, inputs, v2(&(a + b), c)?, v2(a, c)? + v2(b, c)?);
    } else {
        rep.skip(id, inputs, "needs C != O");
    }

    let id = "r(A*B:C) = r(A:C)*B";
    if !c.is_zero() {
        rep.compare(id, inputs, v2(&(a * b), c)?, v2(a, c)? * b);
    } else {
        rep.skip(id, inputs, "needs C != O");
    }

    let id = "r(A:B*C) = C^-1*r(A:B)";
    if !b.is_zero() && !c.is_zero() {
        let lhs = v2(a, &(b * c))?;
        let printed = c.inv()? * v2(a, c)?;
        let note = format!("printed form C^-1*r(A:C) {}", holds(printed == lhs));
        rep.compare(id, inputs, &lhs, c.inv()? * v2(a, b)?).note = Some(note);
    } else {
        rep.skip(id, inputs, "needs B, C != O");
    }

    let id = "r(A:B) = r(B:A) <=> A = B or A = -B";
    if !a.is_zero() && !b.is_zero() {
        let equal = v2(a, b)? == v2(b, a)?;
        let printed_ok = equal == (a == b);
        let note = format!("printed form <=> A = B {}", holds(printed_ok));
        rep.compare(id, inputs, equal, a == b || *a == b.negated()).note = Some(note);
    } else {
        rep.skip(id, inputs, "needs A, B != O");
    }

    let id = "r(A:A) = I";
    if !a.is_zero() {
        rep.compare(id, inputs, Shown(r2(a, a)), &i);
    } else {
        rep.skip(id, inputs, "needs A != O");
    }

    let id = "r(O:B) = O";
    if !b.is_zero() {
        rep.compare(id, inputs, Shown(r2(&o, b)), &o);
    } else {
        rep.skip(id, inputs, "needs B != O");
    }

    let id = "r(I:B) = B^-1";
    if !b.is_zero() {
        let lhs = v2(&i, b)?;
        let note = format!("printed value I {}", holds(lhs == i));
        rep.compare(id, inputs, &lhs, b.inv()?).note = Some(note);
    } else {
        rep.skip(id, inputs, "needs B != O");
    }

    let id = "r(A:O) = inf for A != O, undefined for A = O";
    let expected = if a.is_zero() { "undefined" } else { "inf" };
    rep.compare(id, inputs, Shown(r2(a, &o)), expected);

    Ok(rep)
}

/// The three-point theorems, the degenerate cases of `r(A,B;C)` and the
/// line-equation identities.
pub fn check_ratio3_identities(a: &LineCoordinate, b: &LineCoordinate, c: &LineCoordinate) -> Result<Report> {
    let (a, b, c) = (a.value(), b.value(), c.value());
    a.same_field(b)?;
    a.same_field(c)?;
    let spec = a.spec();
    let (o, i) = (spec.zero(), spec.one());
    let inputs = [a, b, c];
    let distinct = a != b && b != c && a != c;
    let mut rep = Report::new();

    rep.compare(
        "r(-A,-B;-C) = r(A,B;C)",
        inputs,
        Shown(r3(&a.negated(), &b.negated(), &c.negated())),
        Shown(r3(a, b, c)),
    );

    let id = "r^-1(A,B;C) = r(B,A;C)";
    if a != c && b != c {
        rep.compare(id, inputs, v3(a, b, c)?.inv()?, v3(b, a, c)?);
    } else {
        rep.skip(id, inputs, "needs A != C and B != C");
    }

    let id = "A = B*R + C*(I-R), R = r(A,B;C)";
    if b != c {
        let r = v3(a, b, c)?;
        rep.compare(id, inputs, a, b * &r + c * (&i - &r));
    } else {
        rep.skip(id, inputs, "needs B != C");
    }

    let id = "B = C => r(A,B;C) = inf, or A = B = C";
    if b == c {
        let expected = if a == c { "undefined" } else { "inf" };
        rep.compare(id, inputs, Shown(r3(a, b, c)), expected);
    } else {
        rep.skip(id, inputs, "needs B = C");
    }

    let id = "A = C, B != C => r(A,B;C) = O";
    if a == c && b != c {
        rep.compare(id, inputs, Shown(r3(a, b, c)), &o).note =
            Some("printed implication A = C => A = C = B fails".into());
    } else {
        rep.skip(id, inputs, "needs A = C != B");
    }

    let id = "A = B != C => r(A,B;C) = I";
    if a == b && b != c {
        rep.compare(id, inputs, Shown(r3(a, b, c)), &i);
    } else {
        rep.skip(id, inputs, "needs A = B != C");
    }

    let nonzero = !a.is_zero() && !b.is_zero() && !c.is_zero();
    let inverses = if distinct && nonzero {
        Some((a.inv()?, b.inv()?, c.inv()?))
    } else {
        None
    };

    let id = "r(A^-1,B^-1;C^-1) = B*r(A,B;C)*A^-1";
    if let Some((ai, bi, ci)) = &inverses {
        let lhs = v3(ai, bi, ci)?;
        let proof_form = b * v3(b, a, c)? * ai;
        let note = format!("proof's final form B*r(B,A;C)*A^-1 {}", holds(proof_form == lhs));
        rep.compare(id, inputs, &lhs, b * v3(a, b, c)? * ai).note = Some(note);
    } else {
        rep.skip(id, inputs, "needs distinct A, B, C != O");
    }

    let id = "r(A^-1,B^-1;C^-1) = r(A,B;C)*r(B,A;O)";
    match &inverses {
        Some(_) if !spec.is_commutative() => {
            rep.skip(id, inputs, "noncommutative backend");
        }
        Some((ai, bi, ci)) => {
            rep.compare(id, inputs, v3(ai, bi, ci)?, v3(a, b, c)? * v3(b, a, &o)?);
        }
        None => {
            rep.skip(id, inputs, "needs distinct A, B, C != O");
        }
    }

    let id = "r(A,B;C) = M*A + N";
    if b != c {
        let coeffs = line_equation_coeffs(&lc(b.clone()), &lc(c.clone()))?;
        rep.compare(id, inputs, v3(a, b, c)?, coeffs.eval(a)?);
    } else {
        rep.skip(id, inputs, "needs B != C");
    }

    let id = "(C-B)^-1(A-B) - (C-A)^-1(B-A) = M'(A-B), M' = (C-B)^-1 + (C-A)^-1";
    let id_zero = "M' = O <=> C+C = A+B";
    let id_two = "C+C = A+B => r(A,C;B) = r(B,C;A) = I+I";
    if distinct {
        let m = (c - b).inv()? + (c - a).inv()?;
        let lhs = (c - b).left_div(&(a - b))? - (c - a).left_div(&(b - a))?;
        rep.compare(id, inputs, lhs, &m * (a - b));
        let mid = c + c == a + b;
        rep.compare(id_zero, inputs, m.is_zero(), mid);
        if mid {
            let both = format!("{}, {}", v3(a, c, b)?, v3(b, c, a)?);
            let two = &i + &i;
            rep.compare(id_two, inputs, both, format!("{two}, {two}"));
        } else {
            rep.skip(id_two, inputs, "needs C+C = A+B");
        }
    } else {
        for id in [id, id_zero, id_two] {
            rep.skip(id, inputs, "needs distinct A, B, C");
        }
    }

    Ok(rep)
}

/// Group and skew-field laws of the image of a ratio map, checked on every
/// element, pair and triple of `sample`.
pub fn check_substructure(map: &RatioMapSpec, sample: &[LineCoordinate]) -> Result<Report> {
    map.validate()?;
    let spec = map.spec();
    for x in sample {
        x.value().same_field(&spec.zero())?;
    }
    let (o, i) = (spec.zero(), spec.one());
    let mut rep = Report::new();
    let r = |x: &Scalar| map.apply(&lc(x.clone()));
    let params: Vec<String> = match map {
        RatioMapSpec::TwoPoint(b) => vec![b.value().to_string()],
        RatioMapSpec::ThreePoint(b, c) => vec![b.value().to_string(), c.value().to_string()],
    };
    let inputs = |xs: &[&Scalar]| -> Vec<String> {
        params.iter().cloned().chain(xs.iter().map(|x| x.to_string())).collect()
    };

    // distinguished elements
    let (zero_point, zero_id, unit_point, unit_id) = match map {
        RatioMapSpec::TwoPoint(b) => (o.clone(), "zero r_B(O) = O", b.value().clone(), "unit r_B(B) = I"),
        RatioMapSpec::ThreePoint(b, c) => (c.value().clone(), "zero r_BC(C) = O", b.value().clone(), "unit r_BC(B) = I"),
    };
    let zero = r(&zero_point)?;
    let entry = rep.compare(zero_id, inputs(&[]), &zero, &o);
    if let RatioMapSpec::TwoPoint(_) = map {
        entry.note = Some(format!("printed value I {}", holds(zero == i)));
    }
    let unit = r(&unit_point)?;
    rep.compare(unit_id, inputs(&[]), &unit, &i);

    let values: Vec<(Scalar, Scalar)> = sample
        .iter()
        .map(|x| Ok((x.value().clone(), r(x.value())?)))
        .collect::<Result<_>>()?;

    for (x, rx) in &values {
        let xs = inputs(&[x]);
        rep.compare("bijection: r^-1(r(X)) = X", xs.clone(), map.preimage(rx)?.value(), x);
        rep.compare("zero: r(X) + zero = r(X)", xs.clone(), rx + &zero, rx);
        rep.compare("unit: r(X)*unit = r(X)", xs.clone(), rx * &unit, rx);
        rep.compare("unit: unit*r(X) = r(X)", xs.clone(), &unit * rx, rx);
        let (opp_id, opposite) = match map {
            RatioMapSpec::TwoPoint(_) => ("opposite: r_B(X) + r_B(-X) = O", r(&x.negated())?),
            RatioMapSpec::ThreePoint(_, c) => ("opposite: r_BC(X) + r_BC(2C-X) = O", r(&(c.value() + c.value() - x))?),
        };
        rep.compare(opp_id, xs.clone(), rx + &opposite, &o);
        let inv_id = match map {
            RatioMapSpec::TwoPoint(_) => "inverse: r_B(X)*r_X(B) = r_X(B)*r_B(X) = I",
            RatioMapSpec::ThreePoint(..) => "inverse: r_BC(X)*r_XC(B) = r_XC(B)*r_BC(X) = I",
        };
        if *x != zero_point {
            let inverse = match map {
                RatioMapSpec::TwoPoint(b) => v2(b.value(), x)?,
                RatioMapSpec::ThreePoint(b, c) => v3(b.value(), x, c.value())?,
            };
            let both = format!("{}, {}", rx * &inverse, &inverse * rx);
            rep.compare(inv_id, xs, both, format!("{i}, {i}"));
        } else {
            rep.skip(inv_id, xs, "X is the zero point");
        }
    }

    let images: HashSet<&Scalar> = values.iter().map(|(_, rx)| rx).collect();
    let points: HashSet<&Scalar> = values.iter().map(|(x, _)| x).collect();
    rep.compare("injective on the sample", inputs(&[]), images.len(), points.len());
    if let Some(order) = spec.order() {
        let id = "image is the whole line";
        if points.len() as u64 == order {
            rep.compare(id, inputs(&[]), images.len(), order);
        } else {
            rep.skip(id, inputs(&[]), "sample does not cover the line");
        }
    }

    for (x, rx) in &values {
        for (y, ry) in &values {
            let xs = inputs(&[x, y]);
            let (sum_id, sum_point) = match map {
                RatioMapSpec::TwoPoint(_) => ("closure: r_B(X) + r_B(Y) = r_B(X+Y)", x + y),
                RatioMapSpec::ThreePoint(_, c) => ("closure: r_BC(X) + r_BC(Y) = r_BC(X+Y-C)", x + y - c.value()),
            };
            rep.compare(sum_id, xs.clone(), rx + ry, r(&sum_point)?);
            let (mul_id, mul_point) = match map {
                RatioMapSpec::TwoPoint(_) => ("closure: r_B(X)*r_B(Y) = r_B(X*r_B(Y))", x * ry),
                RatioMapSpec::ThreePoint(_, c) => (
                    "closure: r_BC(X)*r_BC(Y) = r_BC((X-C)*r_BC(Y)+C)",
                    (x - c.value()) * ry + c.value(),
                ),
            };
            rep.compare(mul_id, xs.clone(), rx * ry, r(&mul_point)?);
            rep.compare("commutative +: r(X) + r(Y) = r(Y) + r(X)", xs, rx + ry, ry + rx);
        }
    }

    for (x, rx) in &values {
        for (y, ry) in &values {
            for (z, rz) in &values {
                let xs = inputs(&[x, y, z]);
                rep.compare(
                    "left distributive: r(X)*(r(Y)+r(Z)) = r(X)*r(Y) + r(X)*r(Z)",
                    xs.clone(),
                    rx * (ry + rz),
                    rx * ry + rx * rz,
                );
                rep.compare(
                    "right distributive: (r(X)+r(Y))*r(Z) = r(X)*r(Z) + r(Y)*r(Z)",
                    xs,
                    (rx + ry) * rz,
                    rx * rz + ry * rz,
                );
            }
        }
    }

    Ok(rep)
}

/// Maps whose effect on ratios [`check_preservation`] tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreservationMap {
    /// `X ↦ λ·X`
    LeftDilation(Scalar),
    /// `X ↦ X + t`
    Translation(Scalar),
    /// Projection of ℓ^{OI} onto `target` along `dir`, with coordinates on
    /// the target rebased to the images of `O` and `I`.
    ParallelProjection { target: PlaneLine, dir: Direction },
}

impl fmt::Display for PreservationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreservationMap::LeftDilation(l) => write!(f, "dilation {l}"),
            PreservationMap::Translation(t) => write!(f, "translation {t}"),
            PreservationMap::ParallelProjection { target, dir } => {
                let target = match target {
                    PlaneLine::Vertical { c } => format!("x = {c}"),
                    PlaneLine::Slanted { m, b } => format!("y = x*({m}) + {b}"),
                };
                match dir {
                    Direction::Vertical => write!(f, "projection onto {target} along vertical"),
                    Direction::Slope(m) => write!(f, "projection onto {target} along slope {m}"),
                }
            }
        }
    }
}

/// `s` with `p = origin + s·(unit − origin)`.
fn rebase(p: &PlanePoint, origin: &PlanePoint, unit: &PlanePoint) -> Result<Scalar> {
    let (dx, dy) = (&unit.x - &origin.x, &unit.y - &origin.y);
    if !dx.is_zero() {
        (&p.x - &origin.x).right_div(&dx)
    } else {
        (&p.y - &origin.y).right_div(&dy)
    }
}

/// Whether `map` preserves two- and three-point ratios of `A`, `B`, `C`.
pub fn check_preservation(map: &PreservationMap, a: &LineCoordinate, b: &LineCoordinate, c: &LineCoordinate) -> Result<Report> {
    let (a, b, c) = (a.value(), b.value(), c.value());
    a.same_field(b)?;
    a.same_field(c)?;
    let spec = a.spec();
    let inputs = vec![a.to_string(), b.to_string(), c.to_string(), map.to_string()];
    let mut rep = Report::new();
    let on_line = |x: &Scalar| PlanePoint {
        x: x.clone(),
        y: spec.zero(),
    };
    match map {
        PreservationMap::LeftDilation(l) => {
            let plane_map = PlaneMap::LeftDilate(l.clone());
            let img = |x: &Scalar| -> Result<Scalar> {
                let p = apply_map(&plane_map, &on_line(x))?;
                debug_assert!(p.y.is_zero());
                Ok(p.x)
            };
            let (la, lb, lc_) = (img(a)?, img(b)?, img(c)?);
            rep.compare("r(lA:lB) = r(A:B)", inputs.clone(), Shown(r2(&la, &lb)), Shown(r2(a, b)));
            rep.compare("r(lA,lB;lC) = r(A,B;C)", inputs, Shown(r3(&la, &lb, &lc_)), Shown(r3(a, b, c)));
        }
        PreservationMap::Translation(t) => {
            let plane_map = PlaneMap::Translate(t.clone(), spec.zero());
            let img = |x: &Scalar| -> Result<Scalar> { Ok(apply_map(&plane_map, &on_line(x))?.x) };
            let (ta, tb, tc) = (img(a)?, img(b)?, img(c)?);
            rep.compare("r(A+t,B+t;C+t) = r(A,B;C)", inputs.clone(), Shown(r3(&ta, &tb, &tc)), Shown(r3(a, b, c)));
            let id = "r(A+t:B+t) = r(A:B) <=> t = O or A = B";
            if !b.is_zero() && !tb.is_zero() {
                let same = v2(&ta, &tb)? == v2(a, b)?;
                let entry = rep.compare(id, inputs, same, t.is_zero() || a == b);
                if !same {
                    entry.note = Some(format!(
                        "counterexample: translation changes r(A:B) from {} to {}",
                        v2(a, b)?,
                        v2(&ta, &tb)?
                    ));
                }
            } else {
                rep.skip(id, inputs, "needs B != O and B+t != O");
            }
        }
        PreservationMap::ParallelProjection { target, dir } => {
            let plane_map = PlaneMap::ParallelProject {
                src: PlaneLine::x_axis(spec),
                dst: target.clone(),
                dir: dir.clone(),
            };
            if target.is_parallel(&PlaneLine::x_axis(spec)) || *dir == Direction::Slope(spec.zero()) {
                return Err(Error::BadDirection);
            }
            let o2 = apply_map(&plane_map, &on_line(&spec.zero()))?;
            let i2 = apply_map(&plane_map, &on_line(&spec.one()))?;
            let img = |x: &Scalar| -> Result<(PlanePoint, Scalar)> {
                let p = apply_map(&plane_map, &on_line(x))?;
                let s = rebase(&p, &o2, &i2)?;
                Ok((p, s))
            };
            let ((pa, sa), (pb, sb), (pc, sc)) = (img(a)?, img(b)?, img(c)?);
            let on_target = [&pa, &pb, &pc].iter().all(|p| target.contains(p));
            rep.compare("A', B', C' lie on the target line", inputs.clone(), on_target, true);
            rep.compare("r(A',B';C') = r(A,B;C) in O'I' coordinates", inputs, Shown(r3(&sa, &sb, &sc)), Shown(r3(a, b, c)));
        }
    }
    Ok(rep)
}
