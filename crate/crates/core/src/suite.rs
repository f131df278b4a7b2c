//! Check suites run by `desargues check`. Small finite fields are covered
//! exhaustively; everything else is sampled with a seeded generator.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::{geo_add, geo_left_div, geo_mul, geo_sub, random_aux, LineCoordinate};
use crate::error::{Error, Result};
use crate::plane::{check_desargues, parallel_through, Direction, PlaneLine, PlanePoint, TriangleConfig};
use crate::ratio::{
    check_preservation, check_ratio2_identities, check_ratio3_identities, check_substructure, geo_ratio2, geo_ratio3,
    midpoint_solve, ratio2, ratio2_inverse_point, ratio3, ratio3_inverse_point, Midpoint, PreservationMap,
    RatioMapSpec,
};
use crate::report::{Report, ReportEntry, Status};
use crate::skewfield::{FieldSpec, Scalar};

/// Largest field order enumerated exhaustively by element triples.
const EXHAUSTIVE_ORDER: u64 = 5;
/// Largest field order for exhaustive Desargues configurations.
const EXHAUSTIVE_PLANE_ORDER: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Ratio2,
    Ratio3,
    Substructure,
    Preservation,
    Desargues,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::Ratio2,
        Suite::Ratio3,
        Suite::Substructure,
        Suite::Preservation,
        Suite::Desargues,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Ratio2 => "ratio2",
            Suite::Ratio3 => "ratio3",
            Suite::Substructure => "substructure",
            Suite::Preservation => "preservation",
            Suite::Desargues => "desargues",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 42, samples: 200 }
    }
}

pub fn run_suite(suite: Suite, spec: FieldSpec, cfg: SuiteConfig) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match suite {
        Suite::Axioms => axioms(spec, cfg, &mut rng),
        Suite::Ratio2 => ratio2_suite(spec, cfg, &mut rng),
        Suite::Ratio3 => ratio3_suite(spec, cfg, &mut rng),
        Suite::Substructure => substructure(spec, cfg, &mut rng),
        Suite::Preservation => preservation(spec, cfg, &mut rng),
        Suite::Desargues => desargues(spec, cfg, &mut rng),
    }
}

fn small_elements(spec: FieldSpec) -> Option<Vec<Scalar>> {
    match spec.order() {
        Some(q) if q <= EXHAUSTIVE_ORDER => spec.elements(),
        _ => None,
    }
}

/// Every triple of a small field, or `samples` random triples.
fn triples(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<[Scalar; 3]> {
    match small_elements(spec) {
        Some(all) => {
            let mut out = Vec::new();
            for a in &all {
                for b in &all {
                    for c in &all {
                        out.push([a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
            out
        }
        None => (0..cfg.samples)
            .map(|_| [spec.random(rng), spec.random(rng), spec.random(rng)])
            .collect(),
    }
}

fn lc(x: &Scalar) -> LineCoordinate {
    LineCoordinate::new(x.clone())
}

fn shown<T: fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(Error::UndefinedRatio) => "undefined".into(),
        Err(e) => format!("error: {}", e.kind()),
    }
}

fn axioms(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let mut rep = Report::new();
    let (zero, one) = (spec.zero(), spec.one());
    for [a, b, c] in triples(spec, cfg, rng) {
        let inputs = [&a, &b, &c];
        rep.compare("(a+b)+c = a+(b+c)", inputs, (&a + &b) + &c, &a + (&b + &c));
        rep.compare("a+b = b+a", inputs, &a + &b, &b + &a);
        rep.compare("a+0 = a", inputs, &a + &zero, &a);
        rep.compare("a+(-a) = 0", inputs, &a + a.negated(), &zero);
        rep.compare("(ab)c = a(bc)", inputs, (&a * &b) * &c, &a * (&b * &c));
        rep.compare("a*1 = 1*a = a", inputs, format!("{}, {}", &a * &one, &one * &a), format!("{a}, {a}"));
        if a.is_zero() {
            rep.skip("a*a^-1 = a^-1*a = 1", inputs, "needs a != 0");
        } else {
            let ai = a.inv()?;
            rep.compare("a*a^-1 = a^-1*a = 1", inputs, format!("{}, {}", &a * &ai, &ai * &a), format!("{one}, {one}"));
        }
        rep.compare("a(b+c) = ab+ac", inputs, &a * (&b + &c), &a * &b + &a * &c);
        rep.compare("(a+b)c = ac+bc", inputs, (&a + &b) * &c, &a * &c + &b * &c);

        let aux = random_aux(spec, rng);
        let inputs = [a.to_string(), b.to_string(), format!("aux=({},{})", aux.x, aux.y)];
        let (sum, trace) = geo_add(&lc(&a), &lc(&b), &aux)?;
        rep.compare("geo_add(a,b) = a+b", inputs.clone(), sum.value(), &a + &b);
        rep.compare("geo_add trace replays", inputs.clone(), shown(trace.replay().map(|_| "ok")), "ok");
        let (prod, trace) = geo_mul(&lc(&a), &lc(&b), &aux)?;
        rep.compare("geo_mul(a,b) = a*b", inputs.clone(), prod.value(), &a * &b);
        rep.compare("geo_mul trace replays", inputs.clone(), shown(trace.replay().map(|_| "ok")), "ok");
        let (diff, _) = geo_sub(&lc(&a), &lc(&b), &aux)?;
        rep.compare("geo_sub(a,b) = a-b", inputs.clone(), diff.value(), &a - &b);
        if b.is_zero() {
            rep.skip("geo_left_div(a,b) = b^-1*a", inputs, "needs b != 0");
        } else {
            let (q, _) = geo_left_div(&lc(&a), &lc(&b), &aux)?;
            rep.compare("geo_left_div(a,b) = b^-1*a", inputs, q.value(), b.left_div(&a)?);
        }
    }
    if let Some([i, j, k]) = spec.quaternion_units() {
        let aux = random_aux(spec, rng);
        let inputs = ["i".to_string(), "j".to_string(), format!("aux=({},{})", aux.x, aux.y)];
        let (ij, _) = geo_mul(&lc(&i), &lc(&j), &aux)?;
        let (ji, _) = geo_mul(&lc(&j), &lc(&i), &aux)?;
        rep.compare("geo_mul(i,j) = k", inputs.clone(), ij.value(), &k);
        rep.compare("geo_mul(j,i) = -k", inputs, ji.value(), k.negated());
    }
    Ok(rep)
}

fn ratio2_suite(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let mut rep = Report::new();
    for [a, b, c] in triples(spec, cfg, rng) {
        let (la, lb, lc_) = (lc(&a), lc(&b), lc(&c));
        rep.extend(check_ratio2_identities(&la, &lb, &lc_)?);
        let aux = random_aux(spec, rng);
        let inputs = [a.to_string(), b.to_string(), format!("aux=({},{})", aux.x, aux.y)];
        rep.compare("geometric r(A:B) = B^-1*A", inputs.clone(), shown(geo_ratio2(&la, &lb, &aux)), shown(ratio2(&la, &lb)));
        let id = "B*r(A:B) = A";
        if b.is_zero() {
            rep.skip(id, inputs, "needs B != O");
        } else {
            rep.compare(id, inputs, ratio2_inverse_point(&ratio2(&la, &lb)?, &lb)?.value(), &a);
        }
    }
    Ok(rep)
}

fn ratio3_suite(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let mut rep = Report::new();
    let two = spec.one() + spec.one();
    for [a, b, c] in triples(spec, cfg, rng) {
        let (la, lb, lc_) = (lc(&a), lc(&b), lc(&c));
        rep.extend(check_ratio3_identities(&la, &lb, &lc_)?);
        let aux = random_aux(spec, rng);
        let inputs = [a.to_string(), b.to_string(), c.to_string(), format!("aux=({},{})", aux.x, aux.y)];
        rep.compare(
            "geometric r(A,B;C) = (B-C)^-1*(A-C)",
            inputs.clone(),
            shown(geo_ratio3(&la, &lb, &lc_, &aux)),
            shown(ratio3(&la, &lb, &lc_)),
        );
        let id = "(B-C)*r(A,B;C) + C = A";
        if b == c {
            rep.skip(id, inputs, "needs B != C");
        } else {
            rep.compare(id, inputs, ratio3_inverse_point(&ratio3(&la, &lb, &lc_)?, &lb, &lc_)?.value(), &a);
        }

        let inputs = [&a, &b];
        let mid = midpoint_solve(&la, &lb)?;
        if two.is_zero() {
            let expected = if a == b { Midpoint::AllSolutions } else { Midpoint::NoSolution };
            rep.compare("char 2: C+C = A+B solvable iff A = B", inputs, &mid, expected);
        } else {
            let check = match &mid {
                Midpoint::Unique(m) => (m.value() + m.value()).to_string(),
                other => other.to_string(),
            };
            rep.compare("char != 2: unique C with C+C = A+B", inputs, check, &a + &b);
        }
    }
    Ok(rep)
}

fn substructure(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let mut rep = Report::new();
    match small_elements(spec) {
        Some(all) => {
            let line: Vec<LineCoordinate> = all.iter().map(lc).collect();
            for b in &all {
                if !b.is_zero() {
                    rep.extend(check_substructure(&RatioMapSpec::TwoPoint(lc(b)), &line)?);
                }
                for c in &all {
                    if b != c {
                        rep.extend(check_substructure(&RatioMapSpec::ThreePoint(lc(b), lc(c)), &line)?);
                    }
                }
            }
        }
        None => {
            for n in 0..cfg.samples {
                let map = if n % 2 == 0 {
                    RatioMapSpec::TwoPoint(lc(&spec.random_nonzero(rng)))
                } else {
                    let c = spec.random(rng);
                    let b = &c + spec.random_nonzero(rng);
                    RatioMapSpec::ThreePoint(lc(&b), lc(&c))
                };
                let sample: Vec<LineCoordinate> = (0..3).map(|_| lc(&spec.random(rng))).collect();
                rep.extend(check_substructure(&map, &sample)?);
            }
        }
    }
    Ok(rep)
}

/// A line not parallel to ℓ^{OI} and a direction parallel to neither.
fn random_projection(spec: FieldSpec, rng: &mut ChaCha8Rng) -> PreservationMap {
    let target = if rng.gen_bool(0.25) {
        PlaneLine::Vertical { c: spec.random(rng) }
    } else {
        PlaneLine::Slanted {
            m: spec.random_nonzero(rng),
            b: spec.random(rng),
        }
    };
    let dir = loop {
        let d = if rng.gen_bool(0.25) {
            Direction::Vertical
        } else {
            Direction::Slope(spec.random_nonzero(rng))
        };
        if d != target.direction() {
            break d;
        }
    };
    PreservationMap::ParallelProjection { target, dir }
}

fn preservation(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let mut rep = Report::new();
    for _ in 0..cfg.samples {
        let [a, b, c] = [spec.random(rng), spec.random(rng), spec.random(rng)].map(|x| lc(&x));
        let maps = [
            PreservationMap::LeftDilation(spec.random_nonzero(rng)),
            PreservationMap::Translation(spec.random(rng)),
            random_projection(spec, rng),
        ];
        for map in &maps {
            rep.extend(check_preservation(map, &a, &b, &c)?);
        }
    }
    Ok(rep)
}

/// Every valid Desargues configuration of a small plane: A' is free, B' runs
/// over the parallel to AB through A', C' over the parallel to BC through B'.
pub fn desargues_configurations(spec: FieldSpec) -> Option<Vec<TriangleConfig>> {
    let elems = spec.elements()?;
    let points: Vec<PlanePoint> = elems
        .iter()
        .flat_map(|x| elems.iter().map(move |y| PlanePoint { x: x.clone(), y: y.clone() }))
        .collect();
    let on = |l: &PlaneLine| -> Vec<&PlanePoint> { points.iter().filter(|p| l.contains(p)).collect() };
    let mut out = Vec::new();
    for a in &points {
        for b in &points {
            for c in &points {
                if a == b || b == c || a == c || crate::plane::collinear(&[a, b, c]).unwrap_or(true) {
                    continue;
                }
                let ab = crate::plane::line_through(a, b).ok()?;
                let bc = crate::plane::line_through(b, c).ok()?;
                for a2 in &points {
                    for b2 in on(&parallel_through(&ab, a2)) {
                        for c2 in on(&parallel_through(&bc, b2)) {
                            let cfg = TriangleConfig {
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                                a2: a2.clone(),
                                b2: b2.clone(),
                                c2: c2.clone(),
                            };
                            if cfg.hypotheses().is_ok() {
                                out.push(cfg);
                            }
                        }
                    }
                }
            }
        }
    }
    Some(out)
}

fn config_inputs(cfg: &TriangleConfig) -> Vec<String> {
    [&cfg.a, &cfg.b, &cfg.c, &cfg.a2, &cfg.b2, &cfg.c2]
        .iter()
        .map(|p| format!("({},{})", p.x, p.y))
        .collect()
}

fn desargues(spec: FieldSpec, cfg: SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Report> {
    let configs = match spec.order() {
        Some(q) if q <= EXHAUSTIVE_PLANE_ORDER => desargues_configurations(spec).unwrap_or_default(),
        _ => (0..cfg.samples).map(|_| TriangleConfig::random(spec, rng)).collect(),
    };
    let mut rep = Report::new();
    let mut holds = 0usize;
    for c in &configs {
        if check_desargues(c)? {
            holds += 1;
        } else {
            rep.compare("AC parallel to A'C'", config_inputs(c), false, true);
        }
    }
    rep.push(ReportEntry {
        identity: "check_desargues holds on every valid configuration".into(),
        inputs: vec![format!("configurations={}", configs.len())],
        status: if holds == configs.len() { Status::Pass } else { Status::Fail },
        lhs: holds.to_string(),
        rhs: configs.len().to_string(),
        note: None,
    });
    Ok(rep)
}
