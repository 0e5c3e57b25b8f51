//! Weighted dual graphs of SNC divisors whose components are rational curves,
//! with blow-up and blow-down rewriting.
//!
//! A [`DualGraph`] is always a forest with simple edges. Vertex weights are
//! self-intersection numbers (so a chain entry `a` becomes weight `-a`).
//! Vertex ids are never reused within one graph's history, which keeps
//! contraction traces replayable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chain::{adjoint, tw, LinearChain};
use crate::error::{Error, Result};

pub type VertexId = u32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: VertexId,
    /// Self-intersection number.
    pub weight: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// JSON shape: `{"vertices":[{"id":..,"weight":..,"label":..}],"edges":[[u,v],..]}`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<Vertex>,
    edges: Vec<[VertexId; 2]>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct DualGraph {
    vertices: BTreeMap<VertexId, Vertex>,
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
    next_id: VertexId,
}

impl PartialEq for DualGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.adjacency == other.adjacency
    }
}

impl Eq for DualGraph {}

impl TryFrom<GraphRepr> for DualGraph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        let mut g = DualGraph::new();
        for v in repr.vertices {
            g.insert_vertex(v)?;
        }
        for [u, v] in repr.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

impl From<DualGraph> for GraphRepr {
    fn from(g: DualGraph) -> Self {
        let edges = g.edges();
        GraphRepr {
            vertices: g.vertices.into_values().collect(),
            edges,
        }
    }
}

/// Whether a blow-up was centred at a smooth point or at a node of the
/// divisor it was performed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Sprouting,
    Subdivisional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionStep {
    pub vertex: VertexId,
    /// Kind of the blow-up this contraction undoes.
    pub kind: StepKind,
    /// Neighbours of `vertex` at contraction time, ascending.
    pub neighbors: Vec<VertexId>,
    /// The last curve of a tree shrinking to a point. Such a step undoes the
    /// blow-up of a point, which counts as subdivisional.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub to_point: bool,
}

/// Ordered record of blow-downs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionTrace {
    pub steps: Vec<ContractionStep>,
}

impl ContractionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step kinds in blow-up order (the reverse of contraction order).
    pub fn blow_up_kinds(&self) -> Vec<StepKind> {
        self.steps.iter().rev().map(|s| s.kind).collect()
    }

    pub fn sprouting_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Sprouting)
            .count()
    }

    /// Re-applies every blow-down to `graph`.
    pub fn replay(&self, graph: &DualGraph) -> Result<DualGraph> {
        self.steps
            .iter()
            .try_fold(graph.clone(), |g, s| g.blow_down(s.vertex))
    }
}

impl DualGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Path graph with ids `0..n` and the given weights.
    pub fn path(weights: &[i64]) -> Self {
        let mut g = DualGraph::new();
        let mut prev = None;
        for &w in weights {
            let id = g.add_vertex(w, None);
            if let Some(p) = prev {
                g.link(p, id);
            }
            prev = Some(id);
        }
        g
    }

    /// The path graph of a linear chain: entry `a` becomes weight `-a`.
    pub fn from_chain(chain: &LinearChain) -> Self {
        let w: Vec<i64> = chain.entries().iter().map(|a| -a).collect();
        DualGraph::path(&w)
    }

    pub fn add_vertex(&mut self, weight: i64, label: Option<String>) -> VertexId {
        let id = self.next_id;
        self.next_id += 1;
        self.vertices.insert(id, Vertex { id, weight, label });
        self.adjacency.insert(id, BTreeSet::new());
        id
    }

    fn insert_vertex(&mut self, v: Vertex) -> Result<()> {
        if self.vertices.contains_key(&v.id) {
            return Err(Error::DuplicateVertex(v.id));
        }
        self.next_id = self.next_id.max(v.id + 1);
        self.adjacency.insert(v.id, BTreeSet::new());
        self.vertices.insert(v.id, v);
        Ok(())
    }

    /// Adds an edge, rejecting self-edges, repeated edges and cycles.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfEdge(u));
        }
        if self.adjacent(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        if self.component_of(u).contains(&v) {
            return Err(Error::Cycle(u.min(v), u.max(v)));
        }
        self.link(u, v);
        Ok(())
    }

    fn link(&mut self, u: VertexId, v: VertexId) {
        self.adjacency.entry(u).or_default().insert(v);
        self.adjacency.entry(v).or_default().insert(u);
    }

    fn unlink(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adjacency.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adjacency.get_mut(&v) {
            s.remove(&u);
        }
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if self.vertices.contains_key(&v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, v: VertexId) -> Option<&Vertex> {
        self.vertices.get(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn weight(&self, v: VertexId) -> Option<i64> {
        self.vertices.get(&v).map(|x| x.weight)
    }

    pub fn set_weight(&mut self, v: VertexId, weight: i64) -> Result<()> {
        self.check(v)?;
        self.vertices.get_mut(&v).unwrap().weight = weight;
        Ok(())
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<()> {
        self.check(v)?;
        self.vertices.get_mut(&v).unwrap().label = Some(label.into());
        Ok(())
    }

    pub fn find_label(&self, label: &str) -> Option<VertexId> {
        self.vertices
            .values()
            .find(|v| v.label.as_deref() == Some(label))
            .map(|v| v.id)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, |s| s.len())
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// All edges as ascending pairs, sorted.
    pub fn edges(&self) -> Vec<[VertexId; 2]> {
        self.adjacency
            .iter()
            .flat_map(|(&u, s)| s.iter().filter(move |&&v| u < v).map(move |&v| [u, v]))
            .collect()
    }

    fn component_of(&self, start: VertexId) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.keys().next() {
            None => true,
            Some(&v) => self.component_of(v).len() == self.len(),
        }
    }

    /// Forest with simple edges. Always true for graphs built through this
    /// API; exposed so tests can assert it on intermediate states.
    pub fn is_forest(&self) -> bool {
        let edges = self.edges().len();
        let mut seen = BTreeSet::new();
        let mut components = 0;
        for v in self.vertex_ids() {
            if !seen.contains(&v) {
                components += 1;
                seen.extend(self.component_of(v));
            }
        }
        let symmetric = self
            .adjacency
            .iter()
            .all(|(&u, s)| !s.contains(&u) && s.iter().all(|w| self.adjacent(*w, u)));
        symmetric && edges + components == self.len()
    }

    /// Subgraph induced on `ids`. Unknown ids are an error.
    pub fn induced(&self, ids: &BTreeSet<VertexId>) -> Result<DualGraph> {
        let mut g = DualGraph::new();
        for &v in ids {
            g.insert_vertex(self.vertex(v).ok_or(Error::UnknownVertex(v))?.clone())?;
        }
        for [u, v] in self.edges() {
            if ids.contains(&u) && ids.contains(&v) {
                g.link(u, v);
            }
        }
        g.next_id = g.next_id.max(self.next_id);
        Ok(g)
    }

    /// Disjoint union; `other`'s ids are shifted past this graph's ids.
    /// Returns the id offset applied to `other`.
    pub fn absorb(&mut self, other: &DualGraph) -> VertexId {
        let offset = self.next_id;
        for v in other.vertices() {
            let mut v = v.clone();
            v.id += offset;
            self.insert_vertex(v).expect("shifted ids are fresh");
        }
        for [u, v] in other.edges() {
            self.link(u + offset, v + offset);
        }
        self.next_id = self.next_id.max(offset + other.next_id);
        offset
    }

    /// Contracts the (-1)-curve `v`. Each neighbour gains +1 in weight and
    /// two former neighbours become adjacent.
    pub fn blow_down(&self, v: VertexId) -> Result<DualGraph> {
        let weight = self.weight(v).ok_or(Error::UnknownVertex(v))?;
        if weight != -1 {
            return Err(Error::NotMinusOne { id: v, weight });
        }
        let nbrs: Vec<VertexId> = self.neighbors(v).collect();
        if nbrs.len() > 2 {
            return Err(Error::DegreeTooHigh {
                id: v,
                degree: nbrs.len(),
            });
        }
        if let [x, y] = nbrs[..] {
            if self.adjacent(x, y) {
                return Err(Error::WouldCreateCycle(v));
            }
        }
        let mut g = self.clone();
        for &w in &nbrs {
            g.unlink(v, w);
            g.vertices.get_mut(&w).unwrap().weight += 1;
        }
        g.vertices.remove(&v);
        g.adjacency.remove(&v);
        if let [x, y] = nbrs[..] {
            g.link(x, y);
        }
        Ok(g)
    }

    /// Sprouting blow-up at a smooth point of `v`: a new (-1)-curve meeting
    /// only `v`.
    pub fn blow_up_on(&self, v: VertexId) -> Result<(DualGraph, VertexId)> {
        self.check(v)?;
        let mut g = self.clone();
        let e = g.add_vertex(-1, None);
        g.vertices.get_mut(&v).unwrap().weight -= 1;
        g.link(v, e);
        Ok((g, e))
    }

    /// Subdivisional blow-up at the node `u ∩ v`.
    pub fn blow_up_between(&self, u: VertexId, v: VertexId) -> Result<(DualGraph, VertexId)> {
        self.check(u)?;
        self.check(v)?;
        if !self.adjacent(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        let e = g.add_vertex(-1, None);
        for w in [u, v] {
            g.vertices.get_mut(&w).unwrap().weight -= 1;
            g.link(w, e);
        }
        Ok((g, e))
    }

    /// Vertices that [`blow_down`](Self::blow_down) accepts, ascending.
    pub fn contractible(&self) -> Vec<VertexId> {
        self.vertices
            .values()
            .filter(|v| v.weight == -1)
            .map(|v| v.id)
            .filter(|&v| match self.neighbors(v).collect::<Vec<_>>()[..] {
                [] | [_] => true,
                [x, y] => !self.adjacent(x, y),
                _ => false,
            })
            .collect()
    }

    /// Blows down (-1)-curves, smallest id first, until the graph is empty.
    pub fn contract_to_point(&self) -> Result<ContractionTrace> {
        self.contract_to_point_with(|_| 0)
    }

    /// Like [`contract_to_point`](Self::contract_to_point) but `choose` picks
    /// the index of the next vertex among the ascending contractible ids.
    pub fn contract_to_point_with<F>(&self, choose: F) -> Result<ContractionTrace>
    where
        F: FnMut(&[VertexId]) -> usize,
    {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let (_, trace) = self.contract_until(None, 0, choose)?;
        Ok(trace)
    }

    /// Blows down until `stop_len` vertices remain, never touching `keep`.
    pub(crate) fn contract_until<F>(
        &self,
        keep: Option<VertexId>,
        stop_len: usize,
        mut choose: F,
    ) -> Result<(DualGraph, ContractionTrace)>
    where
        F: FnMut(&[VertexId]) -> usize,
    {
        let mut g = self.clone();
        let mut trace = ContractionTrace::default();
        while g.len() > stop_len {
            let mut cands = g.contractible();
            cands.retain(|&v| Some(v) != keep);
            if cands.is_empty() {
                return Err(Error::Stuck { remaining: g.len() });
            }
            let v = cands[choose(&cands).min(cands.len() - 1)];
            let neighbors: Vec<VertexId> = g.neighbors(v).collect();
            let to_point = g.len() == 1;
            let kind = if neighbors.len() == 1 {
                StepKind::Sprouting
            } else {
                StepKind::Subdivisional
            };
            g = g.blow_down(v)?;
            trace.steps.push(ContractionStep {
                vertex: v,
                kind,
                neighbors,
                to_point,
            });
        }
        Ok((g, trace))
    }

    /// Graphviz rendering. Node labels are weights, with `*` for (-1)-curves.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dual {\n");
        for v in self.vertices() {
            let shown = if v.weight == -1 {
                "*".to_string()
            } else {
                v.weight.to_string()
            };
            let _ = write!(s, "  v{} [label=\"{}\"", v.id, shown);
            if let Some(l) = &v.label {
                let _ = write!(
                    s,
                    ", xlabel=\"{}\"",
                    l.replace('\\', "\\\\").replace('"', "\\\"")
                );
            }
            s.push_str("];\n");
        }
        for [u, v] in self.edges() {
            let _ = writeln!(s, "  v{u} -- v{v};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<DualGraph> {
        serde_json::from_str(s).map_err(|e| Error::parse("dual graph", s, e.to_string()))
    }
}

/// The path graph of `[A, 1, B]`, with `A` occupying ids `0..r(A)`.
fn glued_chain(a: &LinearChain, b: &LinearChain) -> DualGraph {
    DualGraph::from_chain(&a.push(1).concat(b))
}

/// Contracts `[A, 1, B]` onto the first curve of `A`, which must end with
/// self-intersection `-target`. Returns the number of sprouting blow-ups
/// `n` together with the trace.
///
/// `n` is also read off `A* = [B, n+1, TW_{target-1}]`; the two values must
/// agree.
pub fn shrink_chain_traced(
    a: &LinearChain,
    b: &LinearChain,
    target: i64,
) -> Result<(usize, ContractionTrace)> {
    a.require_admissible()?;
    if !b.is_empty() {
        b.require_admissible()?;
    }
    let fail = |reason: String| Error::NotContractibleToTarget { target, reason };
    if target < 1 {
        return Err(fail("target must be positive".into()));
    }
    let g = glued_chain(a, b);
    let (rest, trace) = match g.contract_until(Some(0), 1, |_| 0) {
        Ok(x) => x,
        Err(Error::Stuck { remaining }) => {
            return Err(fail(format!("stuck with {remaining} curves left")))
        }
        Err(e) => return Err(e),
    };
    let w = rest.weight(0).expect("first curve is never contracted");
    if w != -target {
        return Err(fail(format!("first curve ends with weight {w}")));
    }
    let n = trace.sprouting_count();

    let adj = adjoint(a)?;
    let e = adj.entries();
    let tail = tw((target - 1) as usize);
    let formula_n = (e.len() == b.len() + 1 + tail.len()
        && e[..b.len()] == *b.entries()
        && e[b.len() + 1..] == *tail.entries())
    .then(|| e[b.len()] - 1);
    if formula_n != Some(n as i64) {
        return Err(Error::Inconsistent(format!(
            "[{a},1,{b}] shrinks to [{target}] with {n} sprouting blow-ups but {a}* = {adj}"
        )));
    }
    Ok((n, trace))
}

pub fn shrink_chain(a: &LinearChain, b: &LinearChain, target: i64) -> Result<usize> {
    shrink_chain_traced(a, b, target).map(|(n, _)| n)
}

/// Whether `[A, 1, B]` shrinks to `[0]`, decided by contraction alone.
/// This happens exactly when `A = B*`.
pub fn chain_shrinks_to_zero(a: &LinearChain, b: &LinearChain) -> bool {
    if !a.is_admissible() || !b.is_admissible() {
        return false;
    }
    let verdict = match glued_chain(a, b).contract_until(None, 1, |_| 0) {
        Ok((rest, _)) => rest.vertices().all(|v| v.weight == 0),
        Err(_) => false,
    };
    debug_assert_eq!(verdict, adjoint(b).as_ref() == Ok(a), "[{a},1,{b}]");
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(v: &[i64]) -> LinearChain {
        LinearChain::new(v.to_vec())
    }

    fn path_weights(g: &DualGraph) -> Vec<i64> {
        // walk a path graph from its smallest-id endpoint
        let start = g.vertex_ids().find(|&v| g.degree(v) <= 1).unwrap();
        let mut out = vec![g.weight(start).unwrap()];
        let (mut prev, mut cur) = (None, start);
        loop {
            let next = g.neighbors(cur).find(|&w| Some(w) != prev);
            match next {
                Some(n) => {
                    out.push(g.weight(n).unwrap());
                    prev = Some(cur);
                    cur = n;
                }
                None => return out,
            }
        }
    }

    #[test]
    fn blow_down_middle_of_chain() {
        let g = DualGraph::path(&[-3, -1, -2]);
        let h = g.blow_down(1).unwrap();
        assert_eq!(h.len(), 2);
        assert!(h.adjacent(0, 2));
        assert_eq!(path_weights(&h), vec![-2, -1]);
    }

    #[test]
    fn blow_down_single_vertex() {
        let g = DualGraph::path(&[-1]);
        assert!(g.blow_down(0).unwrap().is_empty());
    }

    #[test]
    fn blow_down_symmetric_chain() {
        let g = DualGraph::path(&[-2, -1, -2]);
        let h = g.blow_down(1).unwrap();
        assert_eq!(path_weights(&h), vec![-1, -1]);
        assert!(h.adjacent(0, 2));
        // [3,1,2,2] -> [2,1,2] -> [1,1] passes through the same shape
        let g = DualGraph::from_chain(&ch(&[3, 1, 2, 2]));
        let h = g.blow_down(1).unwrap();
        assert_eq!(path_weights(&h), vec![-2, -1, -2]);
        assert!(chain_shrinks_to_zero(&ch(&[3]), &ch(&[2, 2])));
    }

    #[test]
    fn blow_down_errors() {
        let g = DualGraph::path(&[-3, -1, -2]);
        assert_eq!(
            g.blow_down(0),
            Err(Error::NotMinusOne { id: 0, weight: -3 })
        );
        assert_eq!(g.blow_down(7), Err(Error::UnknownVertex(7)));
        let mut star3 = DualGraph::new();
        let c = star3.add_vertex(-1, None);
        for _ in 0..3 {
            let l = star3.add_vertex(-2, None);
            star3.add_edge(c, l).unwrap();
        }
        assert_eq!(
            star3.blow_down(c),
            Err(Error::DegreeTooHigh { id: c, degree: 3 })
        );
    }

    #[test]
    fn add_edge_keeps_forest() {
        let mut g = DualGraph::path(&[-2, -2, -2]);
        assert_eq!(g.add_edge(0, 2), Err(Error::Cycle(0, 2)));
        assert_eq!(g.add_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfEdge(1)));
        assert!(g.is_forest());
    }

    #[test]
    fn contract_cusp_tree() {
        // E1(-3) - E3(-1) - E2(-2)
        let mut g = DualGraph::new();
        let e1 = g.add_vertex(-3, Some("E1".into()));
        let e2 = g.add_vertex(-2, Some("E2".into()));
        let e3 = g.add_vertex(-1, Some("E3".into()));
        g.add_edge(e1, e3).unwrap();
        g.add_edge(e3, e2).unwrap();
        let t = g.contract_to_point().unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(
            t.steps.iter().map(|s| s.vertex).collect::<Vec<_>>(),
            vec![e3, e2, e1]
        );
        let last = t.steps.last().unwrap();
        assert!(last.to_point);
        assert_eq!(last.kind, StepKind::Subdivisional);
        assert_eq!(
            t.blow_up_kinds(),
            vec![
                StepKind::Subdivisional,
                StepKind::Sprouting,
                StepKind::Subdivisional
            ]
        );
        assert!(t.replay(&g).unwrap().is_empty());
    }

    #[test]
    fn contract_errors() {
        assert_eq!(
            DualGraph::path(&[0]).contract_to_point(),
            Err(Error::Stuck { remaining: 1 })
        );
        assert_eq!(DualGraph::new().contract_to_point(), Err(Error::EmptyGraph));
        let mut g = DualGraph::path(&[-1]);
        g.add_vertex(-1, None);
        assert_eq!(g.contract_to_point(), Err(Error::Disconnected));
    }

    #[test]
    fn contract_short_chain() {
        assert_eq!(
            DualGraph::path(&[-2, -1])
                .contract_to_point()
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn shrink_examples() {
        assert_eq!(shrink_chain(&ch(&[4]), &ch(&[2]), 2), Ok(1));
        assert_eq!(shrink_chain(&ch(&[3]), &ch(&[]), 2), Ok(1));
        assert!(matches!(
            shrink_chain(&ch(&[2]), &ch(&[2]), 2),
            Err(Error::NotContractibleToTarget { .. })
        ));
    }

    #[test]
    fn shrinks_to_zero_examples() {
        assert!(chain_shrinks_to_zero(&ch(&[3]), &ch(&[2, 2])));
        assert!(chain_shrinks_to_zero(&ch(&[2]), &ch(&[2])));
        assert!(!chain_shrinks_to_zero(&ch(&[3]), &ch(&[3])));
        assert!(!chain_shrinks_to_zero(&ch(&[1]), &ch(&[2])));
    }

    #[test]
    fn blow_ups_invert_blow_downs() {
        let g = DualGraph::path(&[-3, -2]);
        let (h, e) = g.blow_up_between(0, 1).unwrap();
        assert_eq!(path_weights(&h), vec![-4, -1, -3]);
        assert_eq!(h.blow_down(e).unwrap(), g);
        let (h, e) = g.blow_up_on(1).unwrap();
        assert_eq!(path_weights(&h), vec![-3, -3, -1]);
        assert_eq!(h.blow_down(e).unwrap(), g);
        assert_eq!(
            g.blow_up_between(0, 0).unwrap_err(),
            Error::NotAdjacent(0, 0)
        );
    }

    #[test]
    fn ids_are_not_reused() {
        let g = DualGraph::path(&[-2, -1]);
        let h = g.blow_down(1).unwrap();
        let (k, e) = h.blow_up_on(0).unwrap();
        assert_eq!(e, 2);
        assert!(k.vertex(1).is_none());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let mut g = DualGraph::path(&[-3, -1, -2]);
        g.set_label(1, "D0").unwrap();
        let s = g.to_json();
        assert_eq!(
            s,
            r#"{"vertices":[{"id":0,"weight":-3},{"id":1,"weight":-1,"label":"D0"},{"id":2,"weight":-2}],"edges":[[0,1],[1,2]]}"#
        );
        assert_eq!(DualGraph::from_json(&s).unwrap(), g);
        let cyc = r#"{"vertices":[{"id":0,"weight":1},{"id":1,"weight":1},{"id":2,"weight":1}],"edges":[[0,1],[1,2],[2,0]]}"#;
        assert!(DualGraph::from_json(cyc).is_err());
        let dup = r#"{"vertices":[{"id":0,"weight":1},{"id":0,"weight":1}],"edges":[]}"#;
        assert!(DualGraph::from_json(dup).is_err());
        let dangling = r#"{"vertices":[{"id":0,"weight":1}],"edges":[[0,4]]}"#;
        assert!(DualGraph::from_json(dangling).is_err());
    }

    #[test]
    fn dot_marks_minus_one_curves() {
        let mut g = DualGraph::path(&[-3, -1]);
        g.set_label(0, "A\"1").unwrap();
        assert_eq!(
            g.to_dot(),
            "graph dual {\n  v0 [label=\"-3\", xlabel=\"A\\\"1\"];\n  v1 [label=\"*\"];\n  v0 -- v1;\n}\n"
        );
    }
}
