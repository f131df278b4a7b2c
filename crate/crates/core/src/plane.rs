//! The coordinate plane AG(2, K).
//!
//! Lines use the right-slope convention `y = x·m + b`: the slope multiplies
//! from the right. Under this convention the multiplication construction on
//! the x-axis realizes `A·B` rather than `B·A`. Every other choice of operand
//! order in this module (line through two points, intersection solve,
//! direction vectors) is fixed by it.

use rand::Rng;

use crate::error::{Error, Result};
use crate::skewfield::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    pub x: Scalar,
    pub y: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlaneLine {
    /// `{(c, y)}`
    Vertical { c: Scalar },
    /// `{(x, x·m + b)}`
    Slanted { m: Scalar, b: Scalar },
}

/// Parallel class of a line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Vertical,
    Slope(Scalar),
}

impl PlanePoint {
    pub fn new(x: Scalar, y: Scalar) -> Result<Self> {
        x.same_field(&y)?;
        Ok(Self { x, y })
    }

    pub fn origin(spec: FieldSpec) -> Self {
        Self {
            x: spec.zero(),
            y: spec.zero(),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.x.spec()
    }

    /// `self + t·(dx, dy)`: the left-scalar parametrisation of the line
    /// through `self` with direction vector `(dx, dy)`.
    pub fn offset(&self, t: &Scalar, dx: &Scalar, dy: &Scalar) -> Self {
        Self {
            x: &self.x + t * dx,
            y: &self.y + t * dy,
        }
    }

    pub fn random<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> Self {
        Self {
            x: spec.random(rng),
            y: spec.random(rng),
        }
    }
}

impl Direction {
    /// Direction class of the vector `(dx, dy)`.
    pub fn from_vector(dx: &Scalar, dy: &Scalar) -> Result<Self> {
        dx.same_field(dy)?;
        if dx.is_zero() {
            if dy.is_zero() {
                return Err(Error::BadDirection);
            }
            Ok(Direction::Vertical)
        } else {
            Ok(Direction::Slope(dx.left_div(dy)?))
        }
    }

    /// A vector spanning this direction.
    pub fn vector(&self, spec: FieldSpec) -> (Scalar, Scalar) {
        match self {
            Direction::Vertical => (spec.zero(), spec.one()),
            Direction::Slope(m) => (spec.one(), m.clone()),
        }
    }

    /// The line of this direction through `p`.
    pub fn line_through(&self, p: &PlanePoint) -> PlaneLine {
        match self {
            Direction::Vertical => PlaneLine::Vertical { c: p.x.clone() },
            Direction::Slope(m) => PlaneLine::Slanted {
                m: m.clone(),
                b: &p.y - &p.x * m,
            },
        }
    }
}

impl PlaneLine {
    /// The line `y = 0`, i.e. ℓ^{OI}.
    pub fn x_axis(spec: FieldSpec) -> Self {
        PlaneLine::Slanted {
            m: spec.zero(),
            b: spec.zero(),
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            PlaneLine::Vertical { .. } => Direction::Vertical,
            PlaneLine::Slanted { m, .. } => Direction::Slope(m.clone()),
        }
    }

    pub fn contains(&self, p: &PlanePoint) -> bool {
        match self {
            PlaneLine::Vertical { c } => p.x == *c,
            PlaneLine::Slanted { m, b } => p.y == &p.x * m + b,
        }
    }

    /// Same direction class; a line is parallel to itself.
    pub fn is_parallel(&self, other: &PlaneLine) -> bool {
        self.direction() == other.direction()
    }
}

/// The unique line through two distinct points.
pub fn line_through(p: &PlanePoint, q: &PlanePoint) -> Result<PlaneLine> {
    p.x.same_field(&q.x)?;
    if p == q {
        return Err(Error::DegenerateInput("a line needs two distinct points"));
    }
    if p.x == q.x {
        return Ok(PlaneLine::Vertical { c: p.x.clone() });
    }
    // y_q - y_p = (x_q - x_p)·m
    let m = (&q.x - &p.x).left_div(&(&q.y - &p.y))?;
    let b = &p.y - &p.x * &m;
    Ok(PlaneLine::Slanted { m, b })
}

/// The unique line through `p` parallel to `l`.
pub fn parallel_through(l: &PlaneLine, p: &PlanePoint) -> PlaneLine {
    l.direction().line_through(p)
}

/// Common point of two distinct lines, `None` when they are parallel.
pub fn intersect(l1: &PlaneLine, l2: &PlaneLine) -> Result<Option<PlanePoint>> {
    if l1 == l2 {
        return Err(Error::SameLine);
    }
    match (l1, l2) {
        (PlaneLine::Vertical { .. }, PlaneLine::Vertical { .. }) => Ok(None),
        (PlaneLine::Vertical { c }, PlaneLine::Slanted { m, b })
        | (PlaneLine::Slanted { m, b }, PlaneLine::Vertical { c }) => Ok(Some(PlanePoint {
            x: c.clone(),
            y: c * m + b,
        })),
        (PlaneLine::Slanted { m: m1, b: b1 }, PlaneLine::Slanted { m: m2, b: b2 }) => {
            if m1 == m2 {
                return Ok(None);
            }
            // x·(m1 - m2) = b2 - b1, solved by right division
            let x = (b2 - b1).right_div(&(m1 - m2))?;
            let y = &x * m1 + b1;
            Ok(Some(PlanePoint { x, y }))
        }
    }
}

pub fn collinear(points: &[&PlanePoint]) -> Result<bool> {
    let Some(first) = points.first() else {
        return Ok(true);
    };
    let Some(second) = points.iter().find(|p| **p != *first) else {
        return Ok(true);
    };
    let line = line_through(first, second)?;
    Ok(points.iter().all(|p| line.contains(p)))
}

/// Two triangles `ABC` and `A'B'C'` for Desargues' axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleConfig {
    pub a: PlanePoint,
    pub b: PlanePoint,
    pub c: PlanePoint,
    pub a2: PlanePoint,
    pub b2: PlanePoint,
    pub c2: PlanePoint,
}

/// How the three lines AA', BB', CC' meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Perspectivity {
    Parallel,
    Central(PlanePoint),
}

impl TriangleConfig {
    /// Checks every hypothesis of Desargues' axiom; on success reports
    /// whether the configuration is of parallel or central type.
    pub fn hypotheses(&self) -> Result<Perspectivity> {
        let mut violated = Vec::new();
        let spec = self.a.spec();
        for p in [&self.b, &self.c, &self.a2, &self.b2, &self.c2] {
            if p.spec() != spec {
                return Err(Error::FieldMismatch {
                    left: spec.to_string(),
                    right: p.spec().to_string(),
                });
            }
        }
        let triangle_ok = |name: &str, p: &PlanePoint, q: &PlanePoint, r: &PlanePoint, out: &mut Vec<String>| {
            if p == q || q == r || p == r {
                out.push(format!("{name} has repeated vertices"));
                false
            } else if collinear(&[p, q, r]).unwrap_or(true) {
                out.push(format!("{name} is collinear"));
                false
            } else {
                true
            }
        };
        let t1 = triangle_ok("ABC", &self.a, &self.b, &self.c, &mut violated);
        let t2 = triangle_ok("A'B'C'", &self.a2, &self.b2, &self.c2, &mut violated);
        let pairs = [("AA'", &self.a, &self.a2), ("BB'", &self.b, &self.b2), ("CC'", &self.c, &self.c2)];
        for (name, p, q) in pairs {
            if p == q {
                violated.push(format!("{name} is not a line (points coincide)"));
            }
        }
        if !t1 || !t2 || !violated.is_empty() {
            return Err(Error::HypothesisViolated(violated));
        }

        let ab = line_through(&self.a, &self.b)?;
        let a2b2 = line_through(&self.a2, &self.b2)?;
        let bc = line_through(&self.b, &self.c)?;
        let b2c2 = line_through(&self.b2, &self.c2)?;
        if ab == a2b2 {
            violated.push("AB and A'B' coincide".into());
        } else if !ab.is_parallel(&a2b2) {
            violated.push("AB is not parallel to A'B'".into());
        }
        if bc == b2c2 {
            violated.push("BC and B'C' coincide".into());
        } else if !bc.is_parallel(&b2c2) {
            violated.push("BC is not parallel to B'C'".into());
        }

        if !violated.is_empty() {
            return Err(Error::HypothesisViolated(violated));
        }

        // Two of AA', BB', CC' may coincide (e.g. a translation along BC);
        // all three cannot, since AB and A'B' would then coincide.
        let aa = line_through(&self.a, &self.a2)?;
        let bb = line_through(&self.b, &self.b2)?;
        let cc = line_through(&self.c, &self.c2)?;
        if aa.is_parallel(&bb) && bb.is_parallel(&cc) {
            return Ok(Perspectivity::Parallel);
        }
        let (l1, l2, l3) = if aa != bb { (&aa, &bb, &cc) } else { (&aa, &cc, &bb) };
        match intersect(l1, l2)? {
            Some(p) if l3.contains(&p) => Ok(Perspectivity::Central(p)),
            _ => Err(Error::HypothesisViolated(vec![
                "AA', BB', CC' are neither parallel nor concurrent".into(),
            ])),
        }
    }

    /// Builds a configuration in perspective from `center` (or along a
    /// direction when `center` is `None`): A' is given, B' and C' are forced
    /// by AB ∥ A'B' and BC ∥ B'C'. Fails when an intersection does not exist.
    pub fn perspective(
        a: PlanePoint,
        b: PlanePoint,
        c: PlanePoint,
        a2: PlanePoint,
        center: Option<&PlanePoint>,
    ) -> Result<Self> {
        let ray = |p: &PlanePoint| -> Result<PlaneLine> {
            match center {
                Some(o) => line_through(o, p),
                None => Ok(parallel_through(&line_through(&a, &a2)?, p)),
            }
        };
        let meet = |l1: &PlaneLine, l2: &PlaneLine| -> Result<PlanePoint> {
            intersect(l1, l2)?.ok_or(Error::DegenerateInput("perspective lines are parallel"))
        };
        let ab = line_through(&a, &b)?;
        let b2 = meet(&parallel_through(&ab, &a2), &ray(&b)?)?;
        let bc = line_through(&b, &c)?;
        let c2 = meet(&parallel_through(&bc, &b2), &ray(&c)?)?;
        Ok(Self { a, b, c, a2, b2, c2 })
    }

    /// A seeded random valid configuration: a random triangle, a random
    /// perspectivity (central or parallel), and rejection of everything that
    /// violates the hypotheses.
    pub fn random<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> Self {
        loop {
            let a = PlanePoint::random(spec, rng);
            let b = PlanePoint::random(spec, rng);
            let c = PlanePoint::random(spec, rng);
            if a == b || b == c || a == c || collinear(&[&a, &b, &c]).unwrap_or(true) {
                continue;
            }
            let t = spec.random(rng);
            let built = if rng.gen_bool(0.5) {
                let o = PlanePoint::random(spec, rng);
                if o == a {
                    continue;
                }
                let a2 = o.offset(&t, &(&a.x - &o.x), &(&a.y - &o.y));
                Self::perspective(a.clone(), b.clone(), c.clone(), a2, Some(&o))
            } else {
                let (dx, dy) = (spec.random(rng), spec.random(rng));
                let a2 = a.offset(&t, &dx, &dy);
                Self::perspective(a.clone(), b.clone(), c.clone(), a2, None)
            };
            if let Ok(cfg) = built {
                if cfg.hypotheses().is_ok() {
                    return cfg;
                }
            }
        }
    }
}

/// Desargues' axiom on one configuration: whether AC ∥ A'C'. Equal lines
/// count as parallel.
pub fn check_desargues(cfg: &TriangleConfig) -> Result<bool> {
    cfg.hypotheses()?;
    let ac = line_through(&cfg.a, &cfg.c)?;
    let a2c2 = line_through(&cfg.a2, &cfg.c2)?;
    Ok(ac.is_parallel(&a2c2))
}

/// Collineations used to test ratio preservation.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PlaneMap {
    Translate(Scalar, Scalar),
    /// `(x, y) ↦ (λ·x, λ·y)`
    LeftDilate(Scalar),
    /// Along `dir`, from points of `src` onto `dst`.
    ParallelProject {
        src: PlaneLine,
        dst: PlaneLine,
        dir: Direction,
    },
}

pub fn apply_map(map: &PlaneMap, p: &PlanePoint) -> Result<PlanePoint> {
    match map {
        PlaneMap::Translate(t1, t2) => Ok(PlanePoint::new(p.x.checked_add(t1)?, p.y.checked_add(t2)?)?),
        PlaneMap::LeftDilate(l) => {
            if l.is_zero() {
                return Err(Error::DegenerateInput("dilation factor must be nonzero"));
            }
            Ok(PlanePoint::new(l.checked_mul(&p.x)?, l.checked_mul(&p.y)?)?)
        }
        PlaneMap::ParallelProject { src, dst, dir } => {
            if !src.contains(p) {
                return Err(Error::NotOnSource);
            }
            if dst.direction() == *dir {
                return Err(Error::BadDirection);
            }
            intersect(&dir.line_through(p), dst)?.ok_or(Error::BadDirection)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skewfield::Quaternion;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Scalar {
        FieldSpec::Rationals.from_int(n)
    }

    fn qr(n: i64, d: i64) -> Scalar {
        FieldSpec::Rationals.rational(n, d).unwrap()
    }

    fn pt(x: i64, y: i64) -> PlanePoint {
        PlanePoint::new(q(x), q(y)).unwrap()
    }

    fn slanted(m: Scalar, b: Scalar) -> PlaneLine {
        PlaneLine::Slanted { m, b }
    }

    #[test]
    fn lines_through_two_points() {
        assert_eq!(line_through(&pt(0, 0), &pt(1, 1)).unwrap(), slanted(q(1), q(0)));
        assert_eq!(line_through(&pt(2, 0), &pt(2, 5)).unwrap(), PlaneLine::Vertical { c: q(2) });
        assert_eq!(
            line_through(&pt(1, 1), &pt(1, 1)),
            Err(Error::DegenerateInput("a line needs two distinct points"))
        );
    }

    #[test]
    fn quaternion_slope_is_a_left_quotient() {
        let h = FieldSpec::Quaternions;
        let [i, j, k] = h.quaternion_units().unwrap();
        let p = PlanePoint::origin(h);
        let r = PlanePoint::new(i, k).unwrap();
        assert_eq!(line_through(&p, &r).unwrap(), slanted(j, h.zero()));
    }

    #[test]
    fn parallels() {
        let l = slanted(q(1), q(0));
        assert_eq!(parallel_through(&l, &pt(0, 3)), slanted(q(1), q(3)));
        let v = PlaneLine::Vertical { c: q(2) };
        assert_eq!(parallel_through(&v, &pt(7, 0)), PlaneLine::Vertical { c: q(7) });
        assert_eq!(parallel_through(&l, &pt(4, 4)), l);
    }

    #[test]
    fn intersections() {
        let p = intersect(&slanted(q(1), q(0)), &slanted(q(-1), q(1))).unwrap().unwrap();
        assert_eq!(p, PlanePoint::new(qr(1, 2), qr(1, 2)).unwrap());
        let v = PlaneLine::Vertical { c: q(3) };
        let p = intersect(&v, &slanted(q(2), q(1))).unwrap().unwrap();
        assert_eq!(p, pt(3, 7));
        assert_eq!(intersect(&slanted(q(1), q(0)), &slanted(q(1), q(5))).unwrap(), None);
        assert_eq!(intersect(&v, &v), Err(Error::SameLine));
    }

    #[test]
    fn noncommutative_intersection_lies_on_both_lines() {
        let h = FieldSpec::Quaternions;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let l1 = slanted(h.random(&mut rng), h.random(&mut rng));
            let l2 = slanted(h.random(&mut rng), h.random(&mut rng));
            if let Ok(Some(p)) = intersect(&l1, &l2) {
                assert!(l1.contains(&p) && l2.contains(&p));
            }
        }
    }

    #[test]
    fn axiom_three() {
        for spec in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap(), FieldSpec::Quaternions] {
            let o = PlanePoint::origin(spec);
            let i = PlanePoint::new(spec.one(), spec.zero()).unwrap();
            let j = PlanePoint::new(spec.zero(), spec.one()).unwrap();
            assert!(!collinear(&[&o, &i, &j]).unwrap());
        }
    }

    #[test]
    fn desargues_homothety_and_translation() {
        let a = pt(1, 0);
        let b = pt(0, 1);
        let c = pt(1, 1);
        let cfg = TriangleConfig {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            a2: pt(2, 0),
            b2: pt(0, 2),
            c2: pt(2, 2),
        };
        assert_eq!(cfg.hypotheses().unwrap(), Perspectivity::Central(pt(0, 0)));
        assert!(check_desargues(&cfg).unwrap());

        let translated = |t1: i64, t2: i64| {
            let shift = PlaneMap::Translate(q(t1), q(t2));
            let moved = |p: &PlanePoint| apply_map(&shift, p).unwrap();
            TriangleConfig {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
                a2: moved(&a),
                b2: moved(&b),
                c2: moved(&c),
            }
        };
        // shifting along BC puts B'C' on BC itself
        match check_desargues(&translated(3, 0)) {
            Err(Error::HypothesisViolated(v)) => assert_eq!(v, vec!["BC and B'C' coincide".to_string()]),
            other => panic!("{other:?}"),
        }
        let cfg = translated(3, 2);
        assert_eq!(cfg.hypotheses().unwrap(), Perspectivity::Parallel);
        assert!(check_desargues(&cfg).unwrap());
    }

    #[test]
    fn desargues_quaternion_left_homothety() {
        let h = FieldSpec::Quaternions;
        let [i, _, _] = h.quaternion_units().unwrap();
        let p = |x: i64, y: i64| PlanePoint::new(h.from_int(x), h.from_int(y)).unwrap();
        let dil = PlaneMap::LeftDilate(i);
        let (a, b, c) = (p(1, 0), p(0, 1), p(1, 1));
        let cfg = TriangleConfig {
            a2: apply_map(&dil, &a).unwrap(),
            b2: apply_map(&dil, &b).unwrap(),
            c2: apply_map(&dil, &c).unwrap(),
            a,
            b,
            c,
        };
        assert_eq!(cfg.hypotheses().unwrap(), Perspectivity::Central(PlanePoint::origin(h)));
        assert!(check_desargues(&cfg).unwrap());
    }

    #[test]
    fn desargues_rejects_invalid_hypotheses() {
        let cfg = TriangleConfig {
            a: pt(0, 0),
            b: pt(1, 0),
            c: pt(2, 0),
            a2: pt(0, 1),
            b2: pt(1, 1),
            c2: pt(2, 1),
        };
        assert!(matches!(check_desargues(&cfg), Err(Error::HypothesisViolated(_))));

        // AB not parallel to A'B'
        let cfg = TriangleConfig {
            a: pt(1, 0),
            b: pt(0, 1),
            c: pt(1, 1),
            a2: pt(2, 0),
            b2: pt(0, 3),
            c2: pt(2, 2),
        };
        match check_desargues(&cfg) {
            Err(Error::HypothesisViolated(v)) => assert!(v.iter().any(|s| s.contains("AB"))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn maps() {
        assert_eq!(apply_map(&PlaneMap::LeftDilate(q(2)), &pt(1, 3)).unwrap(), pt(2, 6));
        assert_eq!(apply_map(&PlaneMap::Translate(q(3), q(0)), &pt(2, 0)).unwrap(), pt(5, 0));
        let proj = PlaneMap::ParallelProject {
            src: PlaneLine::x_axis(FieldSpec::Rationals),
            dst: slanted(q(0), q(1)),
            dir: Direction::from_vector(&q(1), &q(1)).unwrap(),
        };
        for a in [-3, 0, 4] {
            assert_eq!(apply_map(&proj, &pt(a, 0)).unwrap(), pt(a + 1, 1));
        }
        assert_eq!(apply_map(&proj, &pt(0, 1)), Err(Error::NotOnSource));
        let bad = PlaneMap::ParallelProject {
            src: PlaneLine::x_axis(FieldSpec::Rationals),
            dst: slanted(q(0), q(1)),
            dir: Direction::Slope(q(0)),
        };
        assert_eq!(apply_map(&bad, &pt(0, 0)), Err(Error::BadDirection));
    }

    #[test]
    fn random_configurations_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for spec in [FieldSpec::Rationals, FieldSpec::Quaternions, FieldSpec::prime(7).unwrap()] {
            for _ in 0..20 {
                let cfg = TriangleConfig::random(spec, &mut rng);
                assert!(cfg.hypotheses().is_ok());
            }
        }
    }

    #[test]
    fn quaternion_points_reject_mixed_fields() {
        let h = Scalar::Quaternion(Box::new(Quaternion::one()));
        assert!(PlanePoint::new(h, q(1)).is_err());
    }
}
