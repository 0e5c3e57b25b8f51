//! Oracles shared by the integration tests. None of these go through the
//! code paths they are used to check.

#![allow(dead_code)]

use cuspcalc::chain::{chain_from_inductance, inductance, LinearChain};
use cuspcalc::graph::{DualGraph, VertexId};

/// Every admissible chain with `1..=max_len` entries in `2..=max_entry`.
pub fn admissible_chains(max_len: usize, max_entry: i64) -> Vec<LinearChain> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &layer {
            for a in 2..=max_entry {
                let mut w = v.clone();
                w.push(a);
                out.push(LinearChain::new(w.clone()));
                next.push(w);
            }
        }
        layer = next;
    }
    out
}

/// `e^{-1}(1 - e(tA))`.
pub fn adjoint_by_definition(a: &LinearChain) -> LinearChain {
    let e = inductance(&a.reverse()).unwrap().complement();
    chain_from_inductance(&e).unwrap()
}

/// Builds the exceptional tree of the minimal embedded resolution directly
/// from the multiplicity sequence by blowing up, one centre at a time.
///
/// Centre `i` lies on the exceptional curve `E(i-1)`, and also on `Ej`
/// (`j < i-1`) when it is proximate to point `j`. The points proximate to
/// `j` are `j+1, ..., j+t` with `m(j+1) + ... + m(j+t) = m(j)`.
/// Returns the graph and the id of the last exceptional curve.
pub fn resolution_by_blowing_up(full: &[u64]) -> (DualGraph, VertexId) {
    let n = full.len();
    let mut satellite: Vec<Option<usize>> = vec![None; n];
    for j in 0..n - 1 {
        let mut sum = 0;
        let mut i = j + 1;
        while sum < full[j] {
            assert!(
                i < n,
                "{full:?}: proximity sum for point {j} runs off the end"
            );
            sum += full[i];
            if i > j + 1 {
                assert!(
                    satellite[i].is_none(),
                    "{full:?}: point {i} proximate to three points"
                );
                satellite[i] = Some(j);
            }
            i += 1;
        }
        assert_eq!(
            sum, full[j],
            "{full:?}: proximity equality fails at point {j}"
        );
    }
    let mut g = DualGraph::new();
    let mut curves = vec![g.add_vertex(-1, None)];
    for i in 1..n {
        let prev = curves[i - 1];
        let (h, e) = match satellite[i] {
            None => g.blow_up_on(prev).unwrap(),
            Some(j) => g.blow_up_between(prev, curves[j]).unwrap(),
        };
        g = h;
        curves.push(e);
    }
    (g, curves[n - 1])
}

/// Canonical string of a weighted tree rooted at `root`; equal strings mean
/// root-preserving weighted isomorphism.
pub fn canonical_form(g: &DualGraph, root: VertexId) -> String {
    fn go(g: &DualGraph, v: VertexId, parent: Option<VertexId>) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .filter(|&w| Some(w) != parent)
            .map(|w| go(g, w, Some(v)))
            .collect();
        kids.sort();
        format!("({}{})", g.weight(v).unwrap(), kids.concat())
    }
    go(g, root, None)
}
