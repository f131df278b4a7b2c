mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::field;
use desargues::dyck::{word_op, DyckPolygon, GroupWord, WordOp};
use desargues::report::Status;
use proptest::prelude::*;

const FIG4: &str = include_str!("fixtures/fig4.json");

fn fig4() -> DyckPolygon {
    DyckPolygon::from_json(FIG4, field("Q")).unwrap()
}

fn basis() -> Arc<[String]> {
    ["A", "B", "C"].map(String::from).into()
}

fn word(coeffs: [i64; 3]) -> GroupWord {
    GroupWord::from_coeffs(basis(), coeffs.to_vec()).unwrap()
}

proptest! {
    #[test]
    fn words_form_an_abelian_group(x in any::<[i16; 3]>(), y in any::<[i16; 3]>(), z in any::<[i16; 3]>()) {
        let [x, y, z] = [x, y, z].map(|c| word(c.map(i64::from)));
        let add = |a: &GroupWord, b: &GroupWord| word_op(WordOp::Add, a, Some(b)).unwrap();
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(add(&x, &y), add(&y, &x));
        prop_assert_eq!(add(&x, &GroupWord::zero(basis())), x.clone());
        prop_assert!(add(&x, &word_op(WordOp::Negate, &x, None).unwrap()).is_zero());
        prop_assert_eq!(add(&x, &y).measure(), x.measure() + y.measure());
        prop_assert!(x.coefficients().values().all(|k| *k != 0));
    }
}

#[test]
fn fig4_validates_and_presents_every_vertex() {
    let poly = fig4();
    let rep = poly.validate();
    assert_eq!(rep.count(Status::Fail), 0, "{}", rep.to_json());
    for (v, _) in &poly.vertices {
        let w = poly.present(v).unwrap();
        assert!(w.measure() >= 1, "{v}");
    }
    let b4 = poly.present("B4").unwrap();
    assert_eq!(b4.coefficients(), BTreeMap::from([("A".into(), 1), ("B".into(), 1)]));
    assert_eq!(b4.to_json(), r#"{"A":1,"B":1}"#);
    assert_eq!(poly.present("A").unwrap().to_string(), "1A");
    assert_eq!(poly.reach("A", "B1").unwrap(), ["A", "B", "C", "B1"]);
}

#[test]
fn reach_is_a_metric_from_generators() {
    let poly = fig4();
    let dist = |g: &str, v: &str| poly.reach(g, v).unwrap().len() - 1;
    for g in &poly.generators {
        assert_eq!(dist(g, g), 0);
        assert_eq!(poly.reach(g, g).unwrap(), [g.as_str()]);
        for h in &poly.generators {
            assert_eq!(dist(g, h), dist(h, g));
            for (v, _) in &poly.vertices {
                assert!(dist(g, v) <= dist(g, h) + dist(h, v), "{g} {h} {v}");
            }
        }
    }
}

#[test]
fn every_single_cycle_is_a_valid_polygon() {
    let poly = fig4();
    for cycle in &poly.cycles {
        let mut labels: Vec<&String> = cycle.iter().collect();
        labels.dedup();
        if labels.len() > 1 && labels.first() == labels.last() {
            labels.pop();
        }
        let vertices: Vec<_> = poly.vertices.iter().filter(|(l, _)| labels.contains(&l)).cloned().collect();
        let edges: Vec<(String, String)> = (0..labels.len())
            .map(|k| (labels[k].clone(), labels[(k + 1) % labels.len()].clone()))
            .collect();
        let generators: Vec<String> = labels
            .iter()
            .filter(|l| vertices.iter().any(|(v, p)| v == **l && p.y.is_zero()))
            .map(|l| l.to_string())
            .collect();
        let single = DyckPolygon {
            vertices,
            edges,
            cycles: vec![cycle.clone()],
            generators,
        };
        let rep = single.validate();
        assert_eq!(rep.count(Status::Fail), 0, "{cycle:?}: {}", rep.to_json());
    }
}

#[test]
fn polygon_json_round_trips() {
    let poly = fig4();
    assert_eq!(DyckPolygon::from_json(&poly.to_json(), field("Q")).unwrap(), poly);
}

#[test]
fn bad_inputs_are_reported() {
    let poly = fig4();
    assert_eq!(poly.reach("B4", "A").unwrap_err().kind(), "NotAGenerator");
    assert_eq!(poly.reach("A", "Z").unwrap_err().kind(), "UnknownVertex");
    assert_eq!(poly.present("Z").unwrap_err().kind(), "UnknownVertex");
    let other = GroupWord::zero(Arc::from(vec!["A".to_string()]));
    assert_eq!(word([1, 0, 0]).add(&other).unwrap_err().kind(), "BasisMismatch");

    let mut broken = poly.clone();
    broken.edges.retain(|(a, b)| !(a == "B" && b == "C"));
    broken.edges.retain(|(a, b)| !(a == "A" && b == "B"));
    assert!(broken.validate().count(Status::Fail) > 0);
}
