mod common;

use cuspcalc::classify::*;
use cuspcalc::cusp::MultiplicitySequence;

use common::{canonical_form, resolution_by_blowing_up};

fn instances(max_a: u64, max_b: u64) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for family in 1..=4 {
        for a in 1..=max_a {
            for b in FamilyParams::min_b(family)..=max_b {
                out.push(FamilyParams::new(family, a, b).unwrap());
            }
        }
    }
    out
}

fn table_degree(family: u8, a: u64, b: u64) -> u64 {
    match family {
        1 => 2 * a * b + b - 1,
        2 => 2 * a * b + b + 1,
        3 => 2 * a * b + 1,
        _ => 2 * a * b + 2 * b - 1,
    }
}

fn delta(full: &[u64]) -> u64 {
    full.iter().map(|m| m * (m - 1) / 2).sum()
}

fn written(seq: &[u64]) -> Vec<u64> {
    let mut v = seq.to_vec();
    while v.len() > 1 && v.last() == Some(&1) {
        v.pop();
    }
    v
}

#[test]
fn every_table_instance_checks_out() {
    for p in instances(4, 7) {
        let nd = family_data(&p).unwrap();
        let d = nd.degree();
        assert_eq!(d, table_degree(p.family(), p.a(), p.b()));

        let [x, y] = nd.cusps();
        assert_eq!(
            delta(x.full()) + delta(y.full()),
            (d - 1) * (d - 2) / 2,
            "{p}"
        );
        assert!(genus_check(&nd));
        let sq: u64 = x.full().iter().chain(y.full()).map(|m| m * m).sum();
        assert_eq!((d * d) as i64 - sq as i64, -1, "{p}");
        assert_eq!(strict_transform_selfint(&nd), -1);

        let mut expected: Vec<Vec<u64>> = p.table_sequences().iter().map(|s| written(s)).collect();
        let mut got: Vec<Vec<u64>> = nd.cusps().iter().map(|c| c.written().to_vec()).collect();
        expected.sort();
        got.sort();
        assert_eq!(got, expected, "{p}");
        assert_eq!(match_family(&nd), Some(p));
    }
}

#[test]
fn global_graphs_contract_cusp_by_cusp() {
    for p in instances(4, 7) {
        let nd = family_data(&p).unwrap();
        let g = assemble_global_graph(&nd).unwrap();
        assert!(g.graph.is_forest() && g.graph.is_connected());
        assert_eq!(g.graph.weight(g.curve), Some(-1));
        assert_eq!(g.graph.degree(g.curve), 2);
        let total: usize = 1 + nd.cusps().iter().map(|c| c.full().len()).sum::<usize>();
        assert_eq!(g.graph.len(), total);
        for (i, cusp) in nd.cusps().iter().enumerate() {
            let sub = g.exceptional_subtree(i);
            assert_eq!(sub.len(), cusp.full().len());
            let trace = sub.contract_to_point().unwrap();
            assert_eq!(trace.len(), sub.len(), "{p} cusp {i}");

            let (oracle, last) = resolution_by_blowing_up(cusp.full());
            let attach = g
                .graph
                .neighbors(g.curve)
                .find(|v| g.exceptional[i].contains(v))
                .unwrap();
            let sub_attach = sub
                .vertices()
                .find(|v| v.label == g.graph.vertex(attach).unwrap().label)
                .unwrap()
                .id;
            assert_eq!(
                canonical_form(&sub, sub_attach),
                canonical_form(&oracle, last)
            );
        }
    }
}

#[test]
fn spot_instances() {
    for s in [
        "d=5 {(3),(2,2,2)}",
        "d=7 {(4,2,2),(3,3,2)}",
        "d=7 {(4),(3,3,3)}",
    ] {
        let nd: NumericalData = s.parse().unwrap();
        assert!(genus_check(&nd));
        assert_eq!(strict_transform_selfint(&nd), -1);
        assert!(match_family(&nd).is_some(), "{s}");
        assert!(assemble_global_graph(&nd).is_ok());
    }
    let nd: NumericalData = "d=5 {(3),(2_3)}".parse().unwrap();
    assert_eq!(nd.to_string(), "d=5 {(3),(2,2,2)}");
}

#[test]
fn off_table_data_fails_checks() {
    let nd: NumericalData = "d=6 {(3),(2,2,2)}".parse().unwrap();
    assert!(!genus_check(&nd));
    assert!(match_family(&nd).is_none());
    let nd = NumericalData::new(
        4,
        MultiplicitySequence::from_written(vec![2]).unwrap(),
        MultiplicitySequence::from_written(vec![2, 2]).unwrap(),
    )
    .unwrap();
    assert!(genus_check(&nd));
    assert_ne!(strict_transform_selfint(&nd), -1);
}

#[test]
fn scan_contains_every_table_instance() {
    let found = scan_candidates(9).unwrap();
    for c in &found {
        assert!(genus_check(&c.data));
        assert_eq!(strict_transform_selfint(&c.data), -1);
        assert_eq!(c.family, match_family(&c.data));
    }
    let mut table = 0;
    for p in instances(9, 9) {
        if p.degree() > 9 {
            continue;
        }
        table += 1;
        let nd = family_data(&p).unwrap();
        assert!(
            found.iter().any(|c| c.data == nd && c.family == Some(p)),
            "{p} missing"
        );
    }
    assert_eq!(found.iter().filter(|c| c.family.is_some()).count(), table);
}

#[test]
fn scan_bound_is_enforced() {
    assert!(scan_candidates(10).is_err());
    assert!(scan_candidates_bounded(10, 10).is_ok());
}
