//! Numerical data of rational bicuspidal plane curves.
//!
//! The four families of data with `(C')^2 = -1`, numerical consistency
//! checks, the dual graph of the total transform of the curve and a
//! brute-force scan over small degrees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cusp::{
    characteristic_sequences, mult_from_char, resolution_graph, CuspResolutionGraph,
    MultiplicitySequence,
};
use crate::error::{Error, Result};
use crate::graph::{DualGraph, VertexId};

/// Largest degree [`scan_candidates`] accepts unless told otherwise.
pub const DEFAULT_SCAN_BOUND: u64 = 9;

/// A degree together with the multiplicity sequences of two cusps.
///
/// The pair is unordered; it is stored with the lexicographically larger
/// full sequence first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalData {
    degree: u64,
    cusps: [MultiplicitySequence; 2],
}

impl NumericalData {
    pub fn new(degree: u64, p: MultiplicitySequence, q: MultiplicitySequence) -> Result<Self> {
        for c in [&p, &q] {
            if c.multiplicity() > degree {
                return Err(Error::InvalidNumericalData(format!(
                    "cusp {c} has multiplicity above the degree {degree}"
                )));
            }
        }
        let cusps = if p >= q { [p, q] } else { [q, p] };
        Ok(NumericalData { degree, cusps })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn cusps(&self) -> &[MultiplicitySequence; 2] {
        &self.cusps
    }
}

impl fmt::Display for NumericalData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} {{{},{}}}",
            self.degree, self.cusps[0], self.cusps[1]
        )
    }
}

/// Parses `"d=5 {(3),(2_3)}"`.
impl FromStr for NumericalData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let what = "numerical data";
        let t = s.trim();
        let rest = t
            .strip_prefix("d=")
            .ok_or_else(|| Error::parse(what, s, "expected leading d=<degree>"))?;
        let (deg, set) = rest
            .split_once('{')
            .ok_or_else(|| Error::parse(what, s, "expected {...} after the degree"))?;
        let degree: u64 = deg
            .trim()
            .parse()
            .map_err(|e| Error::parse(what, s, format!("degree: {e}")))?;
        let set = set
            .trim_end()
            .strip_suffix('}')
            .ok_or_else(|| Error::parse(what, s, "missing closing }"))?;
        let items = split_top_level(set);
        if items.len() != 2 {
            return Err(Error::parse(
                what,
                s,
                format!("expected exactly two cusps, found {}", items.len()),
            ));
        }
        let p: MultiplicitySequence = items[0].parse()?;
        let q: MultiplicitySequence = items[1].parse()?;
        NumericalData::new(degree, p, q)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

/// Row number and parameters of an entry of the classification table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyParams {
    family: u8,
    a: u64,
    b: u64,
}

impl FamilyParams {
    /// Rows 1 and 2 need `b >= 2`, rows 3 and 4 need `b >= 3`; `a >= 1`.
    pub fn new(family: u8, a: u64, b: u64) -> Result<Self> {
        let min_b = match family {
            1 | 2 => 2,
            3 | 4 => 3,
            _ => return Err(Error::UnknownFamily(family)),
        };
        if a < 1 || b < min_b {
            return Err(Error::FamilyParams {
                family,
                a,
                b,
                min_b,
            });
        }
        Ok(FamilyParams { family, a, b })
    }

    pub fn family(&self) -> u8 {
        self.family
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn min_b(family: u8) -> u64 {
        if family <= 2 {
            2
        } else {
            3
        }
    }

    pub fn degree(&self) -> u64 {
        let (a, b) = (self.a, self.b);
        match self.family {
            1 => 2 * a * b + b - 1,
            2 => 2 * a * b + b + 1,
            3 => 2 * a * b + 1,
            _ => 2 * a * b + 2 * b - 1,
        }
    }

    /// The two multiplicity sequences exactly as the table writes them.
    pub fn table_sequences(&self) -> [Vec<u64>; 2] {
        let (a, b) = (self.a, self.b);
        let ab = a * b;
        let run = |m: u64, k: u64| std::iter::repeat_n(m, k as usize);
        match self.family {
            1 => [
                [ab + b - 1, ab - 1]
                    .into_iter()
                    .chain(run(b, a - 1))
                    .chain([b - 1])
                    .collect(),
                run(ab, 2).chain(run(b, a)).collect(),
            ],
            2 => [
                [ab + b, ab].into_iter().chain(run(b, a)).collect(),
                run(ab + 1, 2).chain(run(b, a)).collect(),
            ],
            3 => [
                [ab + 1, ab - b + 1]
                    .into_iter()
                    .chain(run(b, a - 1))
                    .collect(),
                run(ab, 2).chain(run(b, a)).collect(),
            ],
            _ => [
                [ab + b, ab].into_iter().chain(run(b, a)).collect(),
                run(ab + b - 1, 2).chain(run(b, a)).chain([b - 1]).collect(),
            ],
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {} (a={}, b={})", self.family, self.a, self.b)
    }
}

pub fn family_data(p: &FamilyParams) -> Result<NumericalData> {
    let [x, y] = p.table_sequences();
    NumericalData::new(
        p.degree(),
        MultiplicitySequence::from_written(x)?,
        MultiplicitySequence::from_written(y)?,
    )
}

/// The table entry equal to `nd`, if any.
pub fn match_family(nd: &NumericalData) -> Option<FamilyParams> {
    let d = nd.degree();
    for family in 1..=4u8 {
        for a in 1..=d {
            for b in FamilyParams::min_b(family)..=d {
                let Ok(p) = FamilyParams::new(family, a, b) else {
                    continue;
                };
                if p.degree() != d {
                    continue;
                }
                if family_data(&p).ok().as_ref() == Some(nd) {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// `(d-1)(d-2)/2`.
pub fn arithmetic_genus(degree: u64) -> u64 {
    degree.saturating_sub(1) * degree.saturating_sub(2) / 2
}

/// Rationality: the arithmetic genus equals the sum of the cusps' deltas.
pub fn genus_check(nd: &NumericalData) -> bool {
    let delta: u64 = nd.cusps.iter().map(|c| c.invariants().delta).sum();
    delta == arithmetic_genus(nd.degree)
}

/// `(C')^2 = d^2 - Σ m^2` over all blow-ups of both cusps.
pub fn strict_transform_selfint(nd: &NumericalData) -> i64 {
    let d = nd.degree as i64;
    let s: u64 = nd.cusps.iter().map(|c| c.invariants().sum_sq).sum();
    d * d - s as i64
}

/// Dual graph of the total transform of the curve: the strict transform
/// `C'` joined to the last exceptional curve of each cusp's resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalGraph {
    pub graph: DualGraph,
    pub curve: VertexId,
    pub resolutions: [CuspResolutionGraph; 2],
    /// Vertex ids of each cusp's exceptional curves inside `graph`.
    pub exceptional: [BTreeSet<VertexId>; 2],
}

impl GlobalGraph {
    pub fn exceptional_subtree(&self, cusp: usize) -> DualGraph {
        self.graph
            .induced(&self.exceptional[cusp])
            .expect("ids come from the graph")
    }
}

/// Builds the graph and checks that each exceptional subtree blows down to
/// a point in exactly as many steps as it has curves.
pub fn assemble_global_graph(nd: &NumericalData) -> Result<GlobalGraph> {
    let mut graph = DualGraph::new();
    let curve = graph.add_vertex(strict_transform_selfint(nd), Some("C'".into()));
    let mut exceptional: [BTreeSet<VertexId>; 2] = Default::default();
    let mut resolutions = Vec::with_capacity(2);
    for (i, cusp) in nd.cusps.iter().enumerate() {
        let res = resolution_graph(&cusp.characteristic())?;
        let mut local = res.graph.clone();
        for v in res.graph.vertices() {
            let label = v.label.as_deref().unwrap_or("");
            local.set_label(v.id, format!("P{}/{}", i + 1, label))?;
        }
        let offset = graph.absorb(&local);
        graph.add_edge(curve, res.d0 + offset)?;
        exceptional[i] = res.graph.vertex_ids().map(|v| v + offset).collect();
        resolutions.push(res);
    }
    let resolutions: [CuspResolutionGraph; 2] = resolutions.try_into().expect("two cusps");
    let out = GlobalGraph {
        graph,
        curve,
        resolutions,
        exceptional,
    };
    for i in 0..2 {
        let sub = out.exceptional_subtree(i);
        let trace = sub.contract_to_point()?;
        if trace.len() != sub.len() {
            return Err(Error::Inconsistent(format!(
                "cusp {} contracts in {} steps but has {} curves",
                i + 1,
                trace.len(),
                sub.len()
            )));
        }
    }
    Ok(out)
}

/// One row of classifier output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub degree: u64,
    pub cusps_written: [Vec<u64>; 2],
    pub cusps_full: [Vec<u64>; 2],
    pub genus_ok: bool,
    pub c_prime_sq: i64,
    /// The table entry reproducing this data, `null` when there is none.
    pub table_match: Option<FamilyParams>,
}

impl Record {
    pub fn new(nd: &NumericalData) -> Self {
        let [p, q] = nd.cusps();
        Record {
            degree: nd.degree(),
            cusps_written: [p.written().to_vec(), q.written().to_vec()],
            cusps_full: [p.full().to_vec(), q.full().to_vec()],
            genus_ok: genus_check(nd),
            c_prime_sq: strict_transform_selfint(nd),
            table_match: match_family(nd),
        }
    }
}

/// Data found by [`scan_candidates`], flagged by table membership.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub data: NumericalData,
    pub family: Option<FamilyParams>,
}

pub fn scan_candidates(max_degree: u64) -> Result<Vec<Candidate>> {
    scan_candidates_bounded(max_degree, DEFAULT_SCAN_BOUND)
}

/// All pairs of cusps and degrees `d <= max_degree` with matching genus and
/// `(C')^2 = -1`. Data outside the table is kept, with `family == None`.
pub fn scan_candidates_bounded(max_degree: u64, bound: u64) -> Result<Vec<Candidate>> {
    if max_degree > bound {
        return Err(Error::DegreeBoundExceeded {
            requested: max_degree,
            bound,
        });
    }
    let max_genus = arithmetic_genus(max_degree);
    // δ >= (αk - 1)/2, and a cusp of multiplicity m on a curve of degree d
    // has m <= d - 1
    let pool: Vec<(MultiplicitySequence, u64, u64)> =
        characteristic_sequences(max_degree.saturating_sub(1), 2 * max_genus + 1)
            .iter()
            .map(|c| {
                let m = mult_from_char(c);
                let inv = m.invariants();
                (m, inv.delta, inv.sum_sq)
            })
            .filter(|(_, delta, _)| *delta <= max_genus)
            .collect();

    let mut out = Vec::new();
    for d in 3..=max_degree {
        let genus = arithmetic_genus(d);
        let target_sq = d * d + 1;
        let local: Vec<_> = pool
            .iter()
            .filter(|(m, delta, _)| m.multiplicity() < d && *delta < genus)
            .collect();
        for (i, (p, dp, sp)) in local.iter().enumerate() {
            for (q, dq, sq) in &local[i..] {
                if dp + dq == genus && sp + sq == target_sq {
                    let data = NumericalData::new(d, p.clone(), q.clone())?;
                    let family = match_family(&data);
                    out.push(Candidate { data, family });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
