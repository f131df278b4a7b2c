//! Dyck polygons: planar polygon complexes whose collinear generator
//! vertices present every vertex as an integer word.
//!
//! Input format:
//!
//! ```json
//! {"vertices": [{"label": "A", "x": "5", "y": "0"}, ...],
//!  "edges": [["A", "B"], ...],
//!  "cycles": [["A", "A-C", "B3", "A"], ...],
//!  "generators": ["A", "B", "C"]}
//! ```
//!
//! A cycle that does not repeat its first vertex at the end is closed
//! implicitly; validation flags this.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{collinear, PlanePoint};
use crate::report::Report;
use crate::skewfield::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPolygon {
    pub vertices: Vec<(String, PlanePoint)>,
    pub edges: Vec<(String, String)>,
    pub cycles: Vec<Vec<String>>,
    /// The basis β, in order.
    pub generators: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    label: String,
    x: String,
    y: String,
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[String; 2]>,
    #[serde(default)]
    cycles: Vec<Vec<String>>,
    generators: Vec<String>,
}

impl DyckPolygon {
    /// Parses the JSON format, reading coordinates as literals of `spec`.
    pub fn from_json(s: &str, spec: FieldSpec) -> Result<Self> {
        let raw: PolygonJson = serde_json::from_str(s)?;
        let vertices = raw
            .vertices
            .into_iter()
            .map(|v| Ok((v.label, PlanePoint::new(spec.parse_scalar(&v.x)?, spec.parse_scalar(&v.y)?)?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            vertices,
            edges: raw.edges.into_iter().map(|[a, b]| (a, b)).collect(),
            cycles: raw.cycles,
            generators: raw.generators,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = PolygonJson {
            vertices: self
                .vertices
                .iter()
                .map(|(label, p)| VertexJson {
                    label: label.clone(),
                    x: p.x.to_string(),
                    y: p.y.to_string(),
                })
                .collect(),
            edges: self.edges.iter().map(|(a, b)| [a.clone(), b.clone()]).collect(),
            cycles: self.cycles.clone(),
            generators: self.generators.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("polygon serializes")
    }

    fn point(&self, label: &str) -> Option<&PlanePoint> {
        self.vertices.iter().find(|(l, _)| l == label).map(|(_, p)| p)
    }

    fn has_vertex(&self, label: &str) -> bool {
        self.point(label).is_some()
    }

    fn edge_set(&self) -> HashSet<(&str, &str)> {
        self.edges
            .iter()
            .flat_map(|(a, b)| [(a.as_str(), b.as_str()), (b.as_str(), a.as_str())])
            .collect()
    }

    /// Neighbours of every vertex, ordered by generator rank in β and then
    /// by label.
    fn adjacency(&self) -> HashMap<&str, Vec<&str>> {
        let rank: HashMap<&str, usize> = self.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let mut adj: HashMap<&str, Vec<&str>> = self.vertices.iter().map(|(l, _)| (l.as_str(), Vec::new())).collect();
        for (a, b) in &self.edges {
            if a == b || !self.has_vertex(a) || !self.has_vertex(b) {
                continue;
            }
            adj.get_mut(a.as_str()).expect("declared").push(b);
            adj.get_mut(b.as_str()).expect("declared").push(a);
        }
        for list in adj.values_mut() {
            list.sort_by_key(|v| (rank.get(v).copied().unwrap_or(usize::MAX), *v));
            list.dedup();
        }
        adj
    }

    /// Closed form of a cycle (first vertex repeated at the end) and whether
    /// the closure was implicit.
    fn closed_cycle(cycle: &[String]) -> (Vec<&str>, bool) {
        let mut c: Vec<&str> = cycle.iter().map(String::as_str).collect();
        let implicit = c.len() > 1 && c.first() != c.last();
        if implicit {
            c.push(c[0]);
        }
        (c, implicit)
    }

    /// Checks declared vertices, cycle closure, connectivity, generator
    /// collinearity and `V − E + F = 1`.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        let none: [&str; 0] = [];

        let mut seen = HashSet::new();
        let dups: Vec<&str> = self.vertices.iter().map(|(l, _)| l.as_str()).filter(|l| !seen.insert(*l)).collect();
        rep.compare("vertex labels are distinct", dups.clone(), dups.join(","), "");

        let unknown: Vec<&str> = self
            .edges
            .iter()
            .flat_map(|(a, b)| [a.as_str(), b.as_str()])
            .filter(|l| !self.has_vertex(l))
            .collect();
        rep.compare("edge endpoints are declared vertices", none, unknown.join(","), "");

        let loops: Vec<String> = self.edges.iter().filter(|(a, b)| a == b).map(|(a, _)| a.clone()).collect();
        rep.compare("edges join distinct vertices", none, loops.join(","), "");

        let edges = self.edge_set();
        for cycle in &self.cycles {
            let (closed, implicit) = Self::closed_cycle(cycle);
            let missing: Vec<String> = closed
                .windows(2)
                .filter(|w| !edges.contains(&(w[0], w[1])))
                .map(|w| format!("{}-{}", w[0], w[1]))
                .collect();
            let long_enough = closed.len() >= 4;
            let entry = rep.compare(
                "cycle closes along edges",
                cycle,
                if long_enough { missing.join(",") } else { "fewer than 3 vertices".into() },
                "",
            );
            if implicit {
                entry.note = Some(format!("closed implicitly through {}", closed[0]));
            }
        }

        let adj = self.adjacency();
        let reached = match self.vertices.first() {
            None => 0,
            Some((start, _)) => {
                let mut seen = HashSet::from([start.as_str()]);
                let mut queue = VecDeque::from([start.as_str()]);
                while let Some(v) = queue.pop_front() {
                    for w in &adj[v] {
                        if seen.insert(w) {
                            queue.push_back(w);
                        }
                    }
                }
                seen.len()
            }
        };
        let distinct_vertices: HashSet<&str> = self.vertices.iter().map(|(l, _)| l.as_str()).collect();
        rep.compare("edge graph is connected", none, reached, distinct_vertices.len());

        let gen_unknown: Vec<&str> = self.generators.iter().map(String::as_str).filter(|g| !self.has_vertex(g)).collect();
        rep.compare("generators are declared vertices", &self.generators, gen_unknown.join(","), "");
        let gen_set: HashSet<&String> = self.generators.iter().collect();
        let points: Vec<&PlanePoint> = self.generators.iter().filter_map(|g| self.point(g)).collect();
        let gen_points: HashSet<&PlanePoint> = points.iter().copied().collect();
        let distinct = gen_set.len() == self.generators.len() && gen_points.len() == points.len();
        rep.compare("generators are pairwise distinct", &self.generators, distinct, true);
        let on_line = match collinear(&points) {
            Ok(b) => b.to_string(),
            Err(e) => format!("error: {}", e.kind()),
        };
        rep.compare("generators are collinear", &self.generators, on_line, true);

        let unique_edges: HashSet<(&str, &str)> = self
            .edges
            .iter()
            .map(|(a, b)| if a <= b { (a.as_str(), b.as_str()) } else { (b.as_str(), a.as_str()) })
            .collect();
        let (v, e, f) = (distinct_vertices.len() as i64, unique_edges.len() as i64, self.cycles.len() as i64);
        rep.compare(
            "V - E + F = 1",
            [format!("V={v}"), format!("E={e}"), format!("F={f}")],
            v - e + f,
            1,
        );
        rep
    }

    /// A shortest edge path from generator `from` to `to`, both ends
    /// included. Ties go to the neighbour with the lower generator rank in
    /// β, then to the lower label.
    pub fn reach(&self, from: &str, to: &str) -> Result<Vec<String>> {
        if !self.has_vertex(from) {
            return Err(Error::UnknownVertex(from.to_string()));
        }
        if !self.generators.iter().any(|g| g == from) {
            return Err(Error::NotAGenerator(from.to_string()));
        }
        if !self.has_vertex(to) {
            return Err(Error::UnknownVertex(to.to_string()));
        }
        let adj = self.adjacency();
        let mut parent: HashMap<&str, &str> = HashMap::new();
        let mut queue = VecDeque::from([from]);
        let mut seen = HashSet::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to.to_string()];
                let mut cur = to;
                while let Some(p) = parent.get(cur) {
                    path.push(p.to_string());
                    cur = p;
                }
                path.reverse();
                return Ok(path);
            }
            for w in &adj[v] {
                if seen.insert(w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        Err(Error::InvalidPolygon(format!("`{to}` is not reachable from `{from}`")))
    }

    /// The word of `v`: `1·v` for a generator, otherwise the shortest path
    /// from the first generator cut into segments that start at generator
    /// occurrences, each segment adding its move count to its generator.
    pub fn present(&self, v: &str) -> Result<GroupWord> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let basis: Arc<[String]> = self.generators.clone().into();
        if self.generators.iter().any(|g| g == v) {
            return GroupWord::unit(basis, v);
        }
        let first = self
            .generators
            .first()
            .ok_or_else(|| Error::InvalidPolygon("no generators".into()))?;
        let path = self.reach(first, v)?;
        let mut coeffs: BTreeMap<String, i64> = BTreeMap::new();
        let mut current = first.as_str();
        for step in path.windows(2) {
            if self.generators.contains(&step[0]) {
                current = &step[0];
            }
            *coeffs.entry(current.to_string()).or_default() += 1;
        }
        GroupWord::new(basis, coeffs)
    }
}

/// An integer combination `Σ kᵢ·gᵢ` of the generators β.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupWord {
    basis: Arc<[String]>,
    /// One coefficient per basis element.
    coeffs: Vec<i64>,
}

impl GroupWord {
    /// Labels outside `basis` are rejected.
    pub fn new(basis: impl Into<Arc<[String]>>, coeffs: BTreeMap<String, i64>) -> Result<Self> {
        let mut w = Self::zero(basis);
        for (g, k) in coeffs {
            let i = w.index(&g).ok_or(Error::NotAGenerator(g))?;
            w.coeffs[i] += k;
        }
        Ok(w)
    }

    /// Coefficients listed in basis order.
    pub fn from_coeffs(basis: impl Into<Arc<[String]>>, coeffs: Vec<i64>) -> Result<Self> {
        let basis = basis.into();
        if basis.len() != coeffs.len() {
            return Err(Error::BasisMismatch);
        }
        Ok(Self { basis, coeffs })
    }

    pub fn zero(basis: impl Into<Arc<[String]>>) -> Self {
        let basis = basis.into();
        let coeffs = vec![0; basis.len()];
        Self { basis, coeffs }
    }

    /// `1·g`
    pub fn unit(basis: impl Into<Arc<[String]>>, g: &str) -> Result<Self> {
        Self::new(basis, BTreeMap::from([(g.to_string(), 1)]))
    }

    fn index(&self, g: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == g)
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// The nonzero coefficients.
    pub fn coefficients(&self) -> BTreeMap<String, i64> {
        self.basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, k)| **k != 0)
            .map(|(g, k)| (g.clone(), *k))
            .collect()
    }

    pub fn coefficient(&self, g: &str) -> i64 {
        self.index(g).map_or(0, |i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|k| *k == 0)
    }

    /// `k₁ + ⋯ + kₙ`
    pub fn measure(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &GroupWord) -> Result<GroupWord> {
        if !Arc::ptr_eq(&self.basis, &other.basis) && self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        Ok(Self {
            basis: Arc::clone(&self.basis),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn negate(&self) -> GroupWord {
        Self {
            basis: Arc::clone(&self.basis),
            coeffs: self.coeffs.iter().map(|k| -k).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.coefficients()).expect("word serializes")
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, k)| **k != 0)
            .map(|(g, k)| format!("{k}{g}"))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOp {
    Add,
    Negate,
}

pub fn word_op(op: WordOp, w1: &GroupWord, w2: Option<&GroupWord>) -> Result<GroupWord> {
    match (op, w2) {
        (WordOp::Add, Some(w2)) => w1.add(w2),
        (WordOp::Add, None) => Err(Error::DegenerateInput("add needs two words")),
        (WordOp::Negate, None) => Ok(w1.negate()),
        (WordOp::Negate, Some(_)) => Err(Error::DegenerateInput("negate takes one word")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn polygon(vertices: &[(&str, i64, i64)], edges: &[(&str, &str)], cycles: &[&[&str]], gens: &[&str]) -> DyckPolygon {
        let q = FieldSpec::Rationals;
        DyckPolygon {
            vertices: vertices
                .iter()
                .map(|(l, x, y)| (l.to_string(), PlanePoint::new(q.from_int(*x), q.from_int(*y)).unwrap()))
                .collect(),
            edges: edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            cycles: cycles.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect(),
            generators: gens.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn triangle() -> DyckPolygon {
        polygon(
            &[("A", 0, 0), ("B", 1, 0), ("P", 0, 1)],
            &[("A", "B"), ("B", "P"), ("P", "A")],
            &[&["A", "B", "P", "A"]],
            &["A", "B"],
        )
    }

    #[test]
    fn single_triangle_is_valid() {
        let rep = triangle().validate();
        assert!(!rep.has_failures(), "{}", rep.to_json());
        let w = triangle().present("P").unwrap();
        assert_eq!(w.to_string(), "1A");
        assert_eq!(triangle().reach("A", "A").unwrap(), vec!["A"]);
    }

    #[test]
    fn disconnected_triangles_fail() {
        let p = polygon(
            &[("A", 0, 0), ("B", 1, 0), ("P", 0, 1), ("D", 5, 5), ("E", 6, 5), ("F", 5, 6)],
            &[("A", "B"), ("B", "P"), ("P", "A"), ("D", "E"), ("E", "F"), ("F", "D")],
            &[&["A", "B", "P"], &["D", "E", "F"]],
            &["A", "B"],
        );
        let rep = p.validate();
        let bad: Vec<&str> = rep.failures().map(|e| e.identity.as_str()).collect();
        assert_eq!(bad, vec!["edge graph is connected", "V - E + F = 1"]);
        assert!(p.reach("A", "D").is_err());
    }

    #[test]
    fn broken_cycle_and_generators_reported() {
        let mut p = triangle();
        p.cycles = vec![vec!["A".into(), "P".into()]];
        p.generators = vec!["A".into(), "P".into(), "B".into()];
        let rep = p.validate();
        let bad: Vec<&str> = rep.failures().map(|e| e.identity.as_str()).collect();
        assert_eq!(bad, vec!["cycle closes along edges", "generators are collinear"]);
    }

    #[test]
    fn words() {
        let basis: Vec<String> = ["A", "B", "C"].iter().map(|s| s.to_string()).collect();
        let w = |pairs: &[(&str, i64)]| {
            GroupWord::new(basis.clone(), pairs.iter().map(|(g, k)| (g.to_string(), *k)).collect()).unwrap()
        };
        let sum = word_op(WordOp::Add, &w(&[("A", 1), ("B", 2)]), Some(&w(&[("B", 1), ("C", 3)]))).unwrap();
        assert_eq!(sum, w(&[("A", 1), ("B", 3), ("C", 3)]));
        assert_eq!(sum.measure(), 7);
        let x = w(&[("A", -2), ("C", 1)]);
        assert_eq!(x.add(&GroupWord::zero(basis.clone())).unwrap(), x);
        assert!(x.add(&x.negate()).unwrap().is_zero());
        assert_eq!(w(&[("A", 0)]).coefficients().len(), 0);
        let other = GroupWord::zero(vec!["A".into()]);
        assert_eq!(x.add(&other), Err(Error::BasisMismatch));
        assert!(GroupWord::new(basis, BTreeMap::from([("Z".into(), 1)])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = triangle();
        assert_eq!(DyckPolygon::from_json(&p.to_json(), FieldSpec::Rationals).unwrap(), p);
        assert!(matches!(DyckPolygon::from_json("{", FieldSpec::Rationals), Err(Error::Json(_))));
        let rep = p.validate();
        assert!(rep.entries.iter().all(|e| e.status == Status::Pass));
    }
}
