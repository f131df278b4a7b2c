//! Construction traces: every point and line a construction produces, with
//! how it was derived, so that the whole construction can be replayed.
//!
//! JSON shape:
//!
//! ```json
//! {"field": "Q", "aux": ["0", "1"],
//!  "steps": [{"label": "l_OI", "step": 0, "kind": "line",
//!             "data": {"m": "0", "b": "0", "join": ["O", "I"]}}, ...],
//!  "result": "5"}
//! ```
//!
//! Point data is `{"x", "y"}` plus `"meet": [line, line]` for intersections.
//! Line data is `{"m", "b"}` or `{"c"}` (vertical) plus either
//! `"join": [point, point]` or `"parallel": [line, point]`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::LineCoordinate;
use crate::error::{Error, Result};
use crate::plane::{intersect, line_through, parallel_through, PlaneLine, PlanePoint};
use crate::skewfield::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceObject {
    Point(PlanePoint),
    Line(PlaneLine),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Given,
    /// Line through two earlier points.
    Join(String, String),
    /// Line parallel to an earlier line through an earlier point.
    Parallel { line: String, through: String },
    /// Intersection of two earlier lines.
    Meet(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: String,
    /// Algorithm step number (0 for setup).
    pub step: u8,
    pub object: TraceObject,
    pub derivation: Derivation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub field: FieldSpec,
    pub aux: PlanePoint,
    pub steps: Vec<TraceStep>,
    pub result: LineCoordinate,
}

/// Records objects as a construction creates them.
pub(crate) struct TraceBuilder {
    steps: Vec<TraceStep>,
    index: HashMap<String, usize>,
    step: u8,
}

impl TraceBuilder {
    pub(crate) fn new() -> Self {
        Self {
            steps: Vec::new(),
            index: HashMap::new(),
            step: 0,
        }
    }

    pub(crate) fn step(&mut self, n: u8) {
        self.step = n;
    }

    fn push(&mut self, label: &str, object: TraceObject, derivation: Derivation) {
        self.index.insert(label.to_string(), self.steps.len());
        self.steps.push(TraceStep {
            label: label.to_string(),
            step: self.step,
            object,
            derivation,
        });
    }

    fn point(&self, label: &str) -> &PlanePoint {
        match &self.steps[self.index[label]].object {
            TraceObject::Point(p) => p,
            TraceObject::Line(_) => panic!("`{label}` is a line"),
        }
    }

    fn line(&self, label: &str) -> &PlaneLine {
        match &self.steps[self.index[label]].object {
            TraceObject::Line(l) => l,
            TraceObject::Point(_) => panic!("`{label}` is a point"),
        }
    }

    pub(crate) fn given(&mut self, label: &str, p: PlanePoint) {
        self.push(label, TraceObject::Point(p), Derivation::Given);
    }

    pub(crate) fn join(&mut self, label: &str, p: &str, q: &str) -> Result<()> {
        let l = line_through(self.point(p), self.point(q))?;
        self.push(label, TraceObject::Line(l), Derivation::Join(p.into(), q.into()));
        Ok(())
    }

    pub(crate) fn parallel(&mut self, label: &str, line: &str, through: &str) {
        let l = parallel_through(self.line(line), self.point(through));
        self.push(
            label,
            TraceObject::Line(l),
            Derivation::Parallel {
                line: line.into(),
                through: through.into(),
            },
        );
    }

    pub(crate) fn meet(&mut self, label: &str, l1: &str, l2: &str) -> Result<PlanePoint> {
        let p = match intersect(self.line(l1), self.line(l2)) {
            Ok(Some(p)) => p,
            Ok(None) => return Err(Error::DegenerateAux(format!("{l1} and {l2} are parallel"))),
            Err(Error::SameLine) => return Err(Error::DegenerateAux(format!("{l1} and {l2} coincide"))),
            Err(e) => return Err(e),
        };
        self.push(label, TraceObject::Point(p.clone()), Derivation::Meet(l1.into(), l2.into()));
        Ok(p)
    }

    pub(crate) fn finish(self, aux: PlanePoint, result: LineCoordinate) -> ConstructionTrace {
        ConstructionTrace {
            field: aux.spec(),
            aux,
            steps: self.steps,
            result,
        }
    }
}

impl ConstructionTrace {
    /// Algorithm step numbers that occur in the trace, in order.
    pub fn algorithm_steps(&self) -> Vec<u8> {
        let mut s: Vec<u8> = self.steps.iter().map(|s| s.step).filter(|&n| n > 0).collect();
        s.dedup();
        s
    }

    pub fn get(&self, label: &str) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.label == label)
    }

    /// Recomputes every derived object from the objects it names, checks
    /// each recorded intersection against both of its lines, and checks that
    /// the final point is the recorded result on ℓ^{OI}.
    pub fn replay(&self) -> Result<()> {
        let mut seen: HashMap<&str, &TraceObject> = HashMap::new();
        let fail = |msg: String| Err(Error::InvalidTrace(msg));
        let point = |seen: &HashMap<&str, &TraceObject>, l: &str| -> Result<PlanePoint> {
            match seen.get(l) {
                Some(TraceObject::Point(p)) => Ok(p.clone()),
                _ => Err(Error::InvalidTrace(format!("`{l}` is not an earlier point"))),
            }
        };
        let line = |seen: &HashMap<&str, &TraceObject>, l: &str| -> Result<PlaneLine> {
            match seen.get(l) {
                Some(TraceObject::Line(x)) => Ok(x.clone()),
                _ => Err(Error::InvalidTrace(format!("`{l}` is not an earlier line"))),
            }
        };
        for s in &self.steps {
            match (&s.derivation, &s.object) {
                (Derivation::Given, TraceObject::Point(p)) => {
                    if p.spec() != self.field {
                        return fail(format!("`{}` is over another field", s.label));
                    }
                }
                (Derivation::Join(p, q), TraceObject::Line(l)) => {
                    let (p, q) = (point(&seen, p)?, point(&seen, q)?);
                    if line_through(&p, &q)? != *l {
                        return fail(format!("`{}` is not the join of its points", s.label));
                    }
                }
                (Derivation::Parallel { line: base, through }, TraceObject::Line(l)) => {
                    let (base, p) = (line(&seen, base)?, point(&seen, through)?);
                    if parallel_through(&base, &p) != *l {
                        return fail(format!("`{}` is not the recorded parallel", s.label));
                    }
                }
                (Derivation::Meet(l1, l2), TraceObject::Point(p)) => {
                    let (l1, l2) = (line(&seen, l1)?, line(&seen, l2)?);
                    if !l1.contains(p) || !l2.contains(p) {
                        return fail(format!("`{}` is not on both of its lines", s.label));
                    }
                    if intersect(&l1, &l2)?.as_ref() != Some(p) {
                        return fail(format!("`{}` is not the intersection", s.label));
                    }
                }
                _ => return fail(format!("`{}` has a derivation of the wrong kind", s.label)),
            }
            if seen.insert(&s.label, &s.object).is_some() {
                return fail(format!("duplicate label `{}`", s.label));
            }
        }
        match self.steps.last().map(|s| &s.object) {
            Some(TraceObject::Point(p)) => {
                if !PlaneLine::x_axis(self.field).contains(p) {
                    return fail("final point is not on OI".into());
                }
                if *p != self.result.point() {
                    return fail("final point differs from the recorded result".into());
                }
            }
            _ => return fail("trace does not end in a point".into()),
        }
        match seen.get("B1") {
            Some(TraceObject::Point(b1)) if *b1 == self.aux => Ok(()),
            _ => fail("auxiliary point B1 is missing or differs from `aux`".into()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TraceJson::from(self)).expect("trace serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: TraceJson = serde_json::from_str(s)?;
        raw.into_trace()
    }
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    field: String,
    aux: [String; 2],
    steps: Vec<StepJson>,
    result: String,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Line,
    Point,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    label: String,
    step: u8,
    kind: Kind,
    data: DataJson,
}

#[derive(Default, Serialize, Deserialize)]
struct DataJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    m: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    join: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    parallel: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    meet: Option<[String; 2]>,
}

impl From<&ConstructionTrace> for TraceJson {
    fn from(t: &ConstructionTrace) -> Self {
        let steps = t
            .steps
            .iter()
            .map(|s| {
                let mut data = DataJson::default();
                let kind = match &s.object {
                    TraceObject::Point(p) => {
                        data.x = Some(p.x.to_string());
                        data.y = Some(p.y.to_string());
                        Kind::Point
                    }
                    TraceObject::Line(PlaneLine::Vertical { c }) => {
                        data.c = Some(c.to_string());
                        Kind::Line
                    }
                    TraceObject::Line(PlaneLine::Slanted { m, b }) => {
                        data.m = Some(m.to_string());
                        data.b = Some(b.to_string());
                        Kind::Line
                    }
                };
                match &s.derivation {
                    Derivation::Given => {}
                    Derivation::Join(p, q) => data.join = Some([p.clone(), q.clone()]),
                    Derivation::Parallel { line, through } => data.parallel = Some([line.clone(), through.clone()]),
                    Derivation::Meet(l1, l2) => data.meet = Some([l1.clone(), l2.clone()]),
                }
                StepJson {
                    label: s.label.clone(),
                    step: s.step,
                    kind,
                    data,
                }
            })
            .collect();
        TraceJson {
            field: t.field.to_string(),
            aux: [t.aux.x.to_string(), t.aux.y.to_string()],
            steps,
            result: t.result.value().to_string(),
        }
    }
}

impl TraceJson {
    fn into_trace(self) -> Result<ConstructionTrace> {
        let field: FieldSpec = self.field.parse()?;
        let lit = |s: &Option<String>, what: &str, label: &str| -> Result<_> {
            let s = s
                .as_ref()
                .ok_or_else(|| Error::InvalidTrace(format!("`{label}` lacks `{what}`")))?;
            field.parse_scalar(s)
        };
        let aux = PlanePoint::new(field.parse_scalar(&self.aux[0])?, field.parse_scalar(&self.aux[1])?)?;
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in self.steps {
            let d = &s.data;
            let object = match s.kind {
                Kind::Point => TraceObject::Point(PlanePoint::new(lit(&d.x, "x", &s.label)?, lit(&d.y, "y", &s.label)?)?),
                Kind::Line if d.c.is_some() => TraceObject::Line(PlaneLine::Vertical {
                    c: lit(&d.c, "c", &s.label)?,
                }),
                Kind::Line => TraceObject::Line(PlaneLine::Slanted {
                    m: lit(&d.m, "m", &s.label)?,
                    b: lit(&d.b, "b", &s.label)?,
                }),
            };
            let derivation = match (&d.join, &d.parallel, &d.meet) {
                (None, None, None) => Derivation::Given,
                (Some([p, q]), None, None) => Derivation::Join(p.clone(), q.clone()),
                (None, Some([l, p]), None) => Derivation::Parallel {
                    line: l.clone(),
                    through: p.clone(),
                },
                (None, None, Some([l1, l2])) => Derivation::Meet(l1.clone(), l2.clone()),
                _ => return Err(Error::InvalidTrace(format!("`{}` has several derivations", s.label))),
            };
            steps.push(TraceStep {
                label: s.label,
                step: s.step,
                object,
                derivation,
            });
        }
        let result = LineCoordinate::new(field.parse_scalar(&self.result)?);
        Ok(ConstructionTrace {
            field,
            aux,
            steps,
            result,
        })
    }
}
