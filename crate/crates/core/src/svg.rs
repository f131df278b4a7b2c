//! Schematic SVG rendering of construction traces over the rationals.
//! Coordinates are mapped to integer pixels with exact arithmetic.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::construct::{ConstructionTrace, TraceObject};
use crate::plane::PlaneLine;
use crate::skewfield::Scalar;

const SIZE: i64 = 480;
const MARGIN: i64 = 40;

fn rational(s: &Scalar) -> Option<&BigRational> {
    match s {
        Scalar::Rational(r) => Some(r),
        _ => None,
    }
}

struct Frame {
    min_x: BigRational,
    min_y: BigRational,
    span: BigRational,
}

impl Frame {
    fn px(&self, v: &BigRational, min: &BigRational) -> i64 {
        let scaled = (v - min) * BigRational::from_integer(BigInt::from(SIZE)) / &self.span;
        scaled.floor().to_integer().to_i64().unwrap_or(0)
    }

    fn point(&self, x: &BigRational, y: &BigRational) -> (i64, i64) {
        (MARGIN + self.px(x, &self.min_x), MARGIN + SIZE - self.px(y, &self.min_y))
    }
}

/// `None` unless the trace is over the rationals.
pub fn render_svg(trace: &ConstructionTrace) -> Option<String> {
    let mut points = Vec::new();
    for step in &trace.steps {
        if let TraceObject::Point(p) = &step.object {
            points.push((step.label.as_str(), rational(&p.x)?, rational(&p.y)?));
        }
    }
    let one = BigRational::one();
    let min_x = points.iter().map(|p| p.1).min()?.clone() - &one;
    let max_x = points.iter().map(|p| p.1).max()?.clone() + &one;
    let min_y = points.iter().map(|p| p.2).min()?.clone() - &one;
    let max_y = points.iter().map(|p| p.2).max()?.clone() + &one;
    let span = (&max_x - &min_x).max(&max_y - &min_y);
    let frame = Frame {
        min_x: min_x.clone(),
        min_y,
        span: span.clone(),
    };
    let (lo, hi) = (min_x.clone(), min_x + span);

    let full = SIZE + 2 * MARGIN;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{full}" height="{full}" viewBox="0 0 {full} {full}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{full}" height="{full}" fill="white"/>"#);
    for step in &trace.steps {
        let TraceObject::Line(line) = &step.object else { continue };
        let (p, q) = match line {
            PlaneLine::Vertical { c } => {
                let c = rational(c)?;
                (frame.point(c, &frame.min_y), frame.point(c, &(&frame.min_y + &frame.span)))
            }
            PlaneLine::Slanted { m, b } => {
                let (m, b) = (rational(m)?, rational(b)?);
                (frame.point(&lo, &(&lo * m + b)), frame.point(&hi, &(&hi * m + b)))
            }
        };
        let dash = if step.step == 3 { "" } else { r#" stroke-dasharray="4 3""# };
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"{dash}><title>{} (step {})</title></line>"#,
            p.0, p.1, q.0, q.1, step.label, step.step
        );
    }
    for (label, x, y) in &points {
        let (cx, cy) = frame.point(x, y);
        let last = trace.steps.last().map_or("", |s| s.label.as_str());
        let fill = if *label == last { "crimson" } else { "black" };
        let _ = writeln!(svg, r#"<circle cx="{cx}" cy="{cy}" r="4" fill="{fill}"/>"#);
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13">{label}</text>"#,
            cx + 6,
            cy - 6
        );
    }
    svg.push_str("</svg>\n");
    Some(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{default_aux, geo_mul, LineCoordinate};
    use crate::skewfield::FieldSpec;

    #[test]
    fn renders_rational_traces_only() {
        let q = FieldSpec::Rationals;
        let (_, t) = geo_mul(&LineCoordinate::new(q.from_int(3)), &LineCoordinate::new(q.from_int(2)), &default_aux(q)).unwrap();
        let svg = render_svg(&t).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(">P1</text>"));
        assert_eq!(svg.matches("<circle").count(), 7);

        let h = FieldSpec::Quaternions;
        let (_, t) = geo_mul(&LineCoordinate::new(h.one()), &LineCoordinate::new(h.one()), &default_aux(h)).unwrap();
        assert!(render_svg(&t).is_none());
    }
}
