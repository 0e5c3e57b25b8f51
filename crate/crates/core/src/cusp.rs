//! Topological types of plane curve cusps.
//!
//! Three equivalent encodings are supported: the characteristic sequence
//! `(α0; α1, ..., αk)`, the multiplicity sequence of the blow-up centres and
//! the Puiseux pairs. [`resolution_graph`] builds the weighted dual graph of
//! the minimal embedded resolution from the Euclidean algorithm on the
//! characteristic sequence.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::chain::{adjoint, repeated, star, star_all, tw, LinearChain};
use crate::error::{Error, Result};
use crate::graph::{DualGraph, VertexId};

/// `(α0; α1, ..., αk)` with `k >= 1`, `α0 >= 2`, strictly increasing, each
/// `αi` strictly lowering `gcd(α0, ..., α(i-1))` and the final gcd equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharacteristicSequence(Vec<u64>);

impl CharacteristicSequence {
    pub fn new(alphas: impl Into<Vec<u64>>) -> Result<Self> {
        let alphas = alphas.into();
        let bad = |reason: &str| Error::InvalidCharacteristic {
            seq: format_characteristic(&alphas),
            reason: reason.to_string(),
        };
        if alphas.len() < 2 {
            return Err(bad("needs α0 and at least one further exponent"));
        }
        if alphas[0] < 2 {
            return Err(bad("α0 must be at least 2"));
        }
        let mut g = alphas[0];
        for w in alphas.windows(2) {
            if w[1] <= w[0] {
                return Err(bad("exponents must be strictly increasing"));
            }
            let next = g.gcd(&w[1]);
            if next == g {
                return Err(bad("each exponent must lower the running gcd"));
            }
            g = next;
        }
        if g != 1 {
            return Err(bad("gcd of all exponents must be 1"));
        }
        Ok(CharacteristicSequence(alphas))
    }

    pub fn alphas(&self) -> &[u64] {
        &self.0
    }

    /// Multiplicity of the cusp, `α0`.
    pub fn multiplicity(&self) -> u64 {
        self.0[0]
    }

    /// Number of characteristic exponents after `α0`.
    pub fn k(&self) -> usize {
        self.0.len() - 1
    }

    /// `γi = αi - α(i-1)` for `i = 1..=k`.
    pub fn gammas(&self) -> Vec<u64> {
        self.0.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// Every characteristic sequence with `α0 <= max_alpha0` and
/// `αk <= max_last`, in lexicographic order.
pub fn characteristic_sequences(max_alpha0: u64, max_last: u64) -> Vec<CharacteristicSequence> {
    fn extend(alphas: &mut Vec<u64>, g: u64, max_last: u64, out: &mut Vec<CharacteristicSequence>) {
        let last = *alphas.last().unwrap();
        for next in last + 1..=max_last {
            let h = g.gcd(&next);
            if h == g {
                continue;
            }
            alphas.push(next);
            if h == 1 {
                out.push(CharacteristicSequence(alphas.clone()));
            } else {
                extend(alphas, h, max_last, out);
            }
            alphas.pop();
        }
    }
    let mut out = Vec::new();
    for a0 in 2..=max_alpha0 {
        extend(&mut vec![a0], a0, max_last, &mut out);
    }
    out
}

fn format_characteristic(alphas: &[u64]) -> String {
    let mut s = String::from("(");
    for (i, a) in alphas.iter().enumerate() {
        match i {
            0 => {}
            1 => s.push(';'),
            _ => s.push(','),
        }
        s.push_str(&a.to_string());
    }
    s.push(')');
    s
}

impl fmt::Display for CharacteristicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_characteristic(&self.0))
    }
}

/// Parses `"(4;6,7)"`.
impl FromStr for CharacteristicSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let what = "characteristic sequence";
        let inner = strip_parens(s).ok_or_else(|| Error::parse(what, s, "expected parentheses"))?;
        let (head, tail) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse(what, s, "expected ';' after α0"))?;
        let mut alphas = vec![parse_u64(what, s, head)?];
        for x in tail.split(',') {
            alphas.push(parse_u64(what, s, x)?);
        }
        CharacteristicSequence::new(alphas)
    }
}

fn strip_parens(s: &str) -> Option<&str> {
    s.trim().strip_prefix('(')?.strip_suffix(')')
}

fn parse_u64(what: &'static str, input: &str, x: &str) -> Result<u64> {
    x.trim()
        .parse()
        .map_err(|e| Error::parse(what, input, format!("{:?}: {e}", x.trim())))
}

/// One line of the Euclidean algorithm for `γi` against `m(i,1)`:
/// `γi = a(i,1) m(i,1) + m(i,2)`, `m(i,1) = a(i,2) m(i,2) + m(i,3)`, ...,
/// `m(i,ni-1) = a(i,ni) m(i,ni)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuclidRow {
    pub gamma: u64,
    /// `a(i,1), ..., a(i,ni)`.
    pub quotients: Vec<u64>,
    /// `m(i,1), ..., m(i,ni)`.
    pub remainders: Vec<u64>,
}

impl EuclidRow {
    /// `ni`.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `m(i,ni)`, the gcd after this step.
    pub fn last_remainder(&self) -> u64 {
        *self.remainders.last().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuclidTable {
    pub rows: Vec<EuclidRow>,
}

pub fn euclid_decompose(ch: &CharacteristicSequence) -> EuclidTable {
    let mut m = ch.multiplicity();
    let rows = ch
        .gammas()
        .into_iter()
        .map(|gamma| {
            let mut quotients = Vec::new();
            let mut remainders = vec![m];
            let (mut x, mut y) = (gamma, m);
            loop {
                quotients.push(x / y);
                let r = x % y;
                if r == 0 {
                    break;
                }
                remainders.push(r);
                (x, y) = (y, r);
            }
            m = y;
            EuclidRow {
                gamma,
                quotients,
                remainders,
            }
        })
        .collect();
    EuclidTable { rows }
}

/// Multiplicities of all blow-up centres of the minimal embedded resolution,
/// trailing 1's included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiplicitySequence {
    full: Vec<u64>,
}

impl MultiplicitySequence {
    /// Accepts a complete sequence, trailing 1's included.
    pub fn from_full(full: impl Into<Vec<u64>>) -> Result<Self> {
        let full = full.into();
        char_from_full(&full)?;
        Ok(MultiplicitySequence { full })
    }

    /// Appends the unique number of 1's that makes `entries` realizable.
    /// A complete sequence is returned unchanged.
    pub fn from_written(entries: impl Into<Vec<u64>>) -> Result<Self> {
        let entries = entries.into();
        let Some(&first) = entries.first() else {
            return Err(Error::NotRealizable {
                seq: "()".into(),
                reason: "empty sequence".into(),
            });
        };
        // the final run of 1's is a(k,nk) <= m(k,nk-1) <= α0 long
        let mut found: Option<Vec<u64>> = None;
        for t in 0..=first as usize {
            let mut cand = entries.clone();
            cand.extend(std::iter::repeat_n(1, t));
            if char_from_full(&cand).is_ok() {
                if found.is_some() {
                    return Err(Error::AmbiguousCompletion(format_plain(&entries)));
                }
                found = Some(cand);
            }
        }
        match found {
            Some(full) => Ok(MultiplicitySequence { full }),
            None => Err(char_from_full(&entries).unwrap_err()),
        }
    }

    pub fn full(&self) -> &[u64] {
        &self.full
    }

    /// The sequence with trailing 1's omitted.
    pub fn written(&self) -> &[u64] {
        let n = self.full.iter().rposition(|&m| m > 1).map_or(0, |i| i + 1);
        &self.full[..n]
    }

    pub fn multiplicity(&self) -> u64 {
        self.full[0]
    }

    /// Number of blow-ups in the minimal embedded resolution.
    pub fn blow_ups(&self) -> usize {
        self.full.len()
    }

    pub fn characteristic(&self) -> CharacteristicSequence {
        char_from_full(&self.full).expect("validated on construction")
    }

    pub fn invariants(&self) -> LocalInvariants {
        local_invariants(self)
    }

    pub fn display_full(&self) -> String {
        format_plain(&self.full)
    }
}

fn format_plain(v: &[u64]) -> String {
    let body: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", body.join(","))
}

/// Shows the written form, e.g. `(4,2,2)`.
impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_plain(self.written()))
    }
}

/// Parses `"(4,2,2)"`, `"(2_3)"` or a mix; `m_k` means `k` copies of `m`.
/// The result is completed with trailing 1's as in
/// [`MultiplicitySequence::from_written`].
impl FromStr for MultiplicitySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiplicitySequence::from_written(parse_multiplicity_list(s)?)
    }
}

pub fn parse_multiplicity_list(s: &str) -> Result<Vec<u64>> {
    let what = "multiplicity sequence";
    let inner = strip_parens(s).ok_or_else(|| Error::parse(what, s, "expected parentheses"))?;
    let mut out = Vec::new();
    if inner.trim().is_empty() {
        return Ok(out);
    }
    for item in inner.split(',') {
        match item.split_once('_') {
            Some((m, k)) => {
                let m = parse_u64(what, s, m)?;
                let k = parse_u64(what, s, k)?;
                out.extend(std::iter::repeat_n(m, k as usize));
            }
            None => out.push(parse_u64(what, s, item)?),
        }
    }
    if out.contains(&0) {
        return Err(Error::parse(what, s, "multiplicities must be positive"));
    }
    Ok(out)
}

pub fn mult_from_char(ch: &CharacteristicSequence) -> MultiplicitySequence {
    let table = euclid_decompose(ch);
    let mut full = vec![ch.multiplicity()];
    for row in &table.rows {
        for (&a, &m) in row.quotients.iter().zip(&row.remainders) {
            full.extend(std::iter::repeat_n(m, a as usize));
        }
    }
    MultiplicitySequence { full }
}

pub fn char_from_mult(ms: &MultiplicitySequence) -> CharacteristicSequence {
    ms.characteristic()
}

/// Reads the Euclidean algorithm back off a complete multiplicity sequence.
fn char_from_full(full: &[u64]) -> Result<CharacteristicSequence> {
    let fail = |reason: String| Error::NotRealizable {
        seq: format_plain(full),
        reason,
    };
    let Some(&alpha0) = full.first() else {
        return Err(fail("empty sequence".into()));
    };
    if alpha0 < 2 {
        return Err(fail("first multiplicity must be at least 2".into()));
    }
    let mut alphas = vec![alpha0];
    let mut pos = 1;
    let mut cur = alpha0;
    while cur > 1 {
        let mut a1 = 0;
        while full.get(pos) == Some(&cur) {
            a1 += 1;
            pos += 1;
        }
        let Some(&m2) = full.get(pos) else {
            return Err(fail(format!("ends while the multiplicity is still {cur}")));
        };
        if m2 > cur {
            return Err(fail(format!("{m2} follows {cur}")));
        }
        let (mut x, mut y) = (cur, m2);
        loop {
            let q = (x / y) as usize;
            match full.get(pos..pos + q) {
                Some(run) if run.iter().all(|&m| m == y) => pos += q,
                _ => {
                    return Err(fail(format!(
                        "expected {q} copies of {y} at position {}",
                        pos + 1
                    )))
                }
            }
            let r = x % y;
            if r == 0 {
                break;
            }
            (x, y) = (y, r);
        }
        let last = *alphas.last().unwrap();
        alphas.push(last + a1 * cur + m2);
        cur = y;
    }
    if pos != full.len() {
        return Err(fail(format!(
            "{} entries left after the multiplicity reached 1",
            full.len() - pos
        )));
    }
    let ch = CharacteristicSequence::new(alphas).map_err(|e| fail(e.to_string()))?;
    if mult_from_char(&ch).full != full {
        return Err(Error::Inconsistent(format!(
            "{} does not reproduce {}",
            ch,
            format_plain(full)
        )));
    }
    Ok(ch)
}

/// `((q1,p1), ..., (qk,pk))` with `α0 = q1...qk` and
/// `αi/α0 = pi/(q1...qi)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PuiseuxPairs(Vec<(u64, u64)>);

impl PuiseuxPairs {
    pub fn new(pairs: impl Into<Vec<(u64, u64)>>) -> Result<Self> {
        let pp = PuiseuxPairs(pairs.into());
        char_from_puiseux(&pp)?;
        Ok(pp)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.0
    }
}

impl fmt::Display for PuiseuxPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|(q, p)| format!("({q},{p})")).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// Parses `"[(2,3),(2,7)]"`.
impl FromStr for PuiseuxPairs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let what = "Puiseux pairs";
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(what, s, "expected square brackets"))?;
        let mut pairs = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(what, s, "expected '('"))?;
            let (pair, after) = body
                .split_once(')')
                .ok_or_else(|| Error::parse(what, s, "unclosed '('"))?;
            let (q, p) = pair
                .split_once(',')
                .ok_or_else(|| Error::parse(what, s, "expected (q,p)"))?;
            pairs.push((parse_u64(what, s, q)?, parse_u64(what, s, p)?));
            rest = after.trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(Error::parse(what, s, "expected ',' between pairs"));
            }
        }
        PuiseuxPairs::new(pairs)
    }
}

pub fn puiseux_from_char(ch: &CharacteristicSequence) -> PuiseuxPairs {
    // with ei = gcd(α0..αi): qi = e(i-1)/ei and pi = αi/ei
    let a = ch.alphas();
    let mut e = a[0];
    let pairs = a[1..]
        .iter()
        .map(|&alpha| {
            let next = e.gcd(&alpha);
            let pair = (e / next, alpha / next);
            e = next;
            pair
        })
        .collect();
    PuiseuxPairs(pairs)
}

pub fn char_from_puiseux(pp: &PuiseuxPairs) -> Result<CharacteristicSequence> {
    let bad = |reason: String| Error::InvalidPuiseux {
        pairs: pp.to_string(),
        reason,
    };
    if pp.0.is_empty() {
        return Err(bad("needs at least one pair".into()));
    }
    for &(q, p) in &pp.0 {
        if q < 2 {
            return Err(bad(format!("q = {q} must be at least 2")));
        }
        if q.gcd(&p) != 1 {
            return Err(bad(format!("({q},{p}) is not coprime")));
        }
    }
    let alpha0 =
        pp.0.iter()
            .try_fold(1u64, |acc, &(q, _)| acc.checked_mul(q))
            .ok_or_else(|| bad("α0 overflows".into()))?;
    let mut alphas = vec![alpha0];
    let mut rest = alpha0;
    for &(q, p) in &pp.0 {
        rest /= q;
        alphas.push(
            p.checked_mul(rest)
                .ok_or_else(|| bad("exponent overflows".into()))?,
        );
    }
    CharacteristicSequence::new(alphas).map_err(|e| bad(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalInvariants {
    /// `Σ m(m-1)/2`.
    pub delta: u64,
    /// `Σ m²`.
    pub sum_sq: u64,
}

pub fn local_invariants(ms: &MultiplicitySequence) -> LocalInvariants {
    let full = ms.full();
    LocalInvariants {
        delta: full.iter().map(|m| m * (m - 1) / 2).sum(),
        sum_sq: full.iter().map(|m| m * m).sum(),
    }
}

/// The chains `Ai`, `Bi` of one Puiseux pair together with the number `oi`
/// of sprouting blow-ups that create them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cluster {
    pub a: LinearChain,
    pub b: LinearChain,
    pub o: u64,
}

/// Dual graph of the exceptional divisor of the minimal embedded resolution.
///
/// Shape: the chains `A1, ..., Ag` in a row, followed by the last
/// exceptional curve `D0`. `Bi` hangs off the first curve of `A(i+1)`, and
/// `Bg` off `D0`, each attached by its first curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspResolutionGraph {
    pub characteristic: CharacteristicSequence,
    pub clusters: Vec<Cluster>,
    pub graph: DualGraph,
    pub d0: VertexId,
}

impl CuspResolutionGraph {
    /// `g`.
    pub fn g(&self) -> usize {
        self.clusters.len()
    }

    /// Number of exceptional curves, equal to the number of blow-ups.
    pub fn vertex_count(&self) -> usize {
        self.graph.len()
    }
}

/// `Ai` and `Bi` from the quotients `a(i,1), ..., a(i,ni)`.
///
/// `Ai = TW_{a1+1} * [a2] * TW_{a3+1} * [a4] * ...`, where the final factor
/// is `[a_n]` for even `n` and `TW_{a_n}` for odd `n`.
/// `Bi` runs from `a_n` down to `a_2`: odd positions give `[a_j]`, even
/// positions `TW_{a_j+1}`, except that `TW_{a_n}` (even `n`) and `TW_{a_2}`
/// lose the `+1`, and `Bi = TW_{a_2-1}` when `n = 2`.
fn cluster_chains(q: &[u64]) -> Result<(LinearChain, LinearChain)> {
    let n = q.len();
    let a = |j: usize| q[j - 1];
    let a_factors: Vec<LinearChain> = (1..=n)
        .map(|j| {
            if j % 2 == 1 {
                tw((a(j) + 1 - u64::from(j == n)) as usize)
            } else {
                repeated(a(j) as i64, 1)
            }
        })
        .collect();
    let b_factors: Vec<LinearChain> = (2..=n)
        .rev()
        .map(|j| {
            if j % 2 == 0 {
                tw((a(j) + 1 - u64::from(j == n) - u64::from(j == 2)) as usize)
            } else {
                repeated(a(j) as i64, 1)
            }
        })
        .collect();
    if a_factors
        .iter()
        .chain(&b_factors)
        .any(LinearChain::is_empty)
    {
        return Err(Error::Inconsistent(format!(
            "empty factor for quotients {q:?}"
        )));
    }
    Ok((star_all(&a_factors)?, star_all(&b_factors)?))
}

pub fn resolution_graph(ch: &CharacteristicSequence) -> Result<CuspResolutionGraph> {
    let table = euclid_decompose(ch);
    let mut clusters = Vec::with_capacity(table.rows.len());
    for (i, row) in table.rows.iter().enumerate() {
        let (a, b) = cluster_chains(&row.quotients)?;
        let fault = |what: &str| {
            Error::Inconsistent(format!("{ch}, cluster {}: {what} (A={a}, B={b})", i + 1))
        };
        if !a.is_admissible() || !b.is_admissible() {
            return Err(fault("chains are not admissible"));
        }
        let b_adj = adjoint(&b)?;
        if a.len() < b_adj.len() {
            return Err(fault("A is shorter than B*"));
        }
        let o = a.len() + 1 - b_adj.len();
        if star(&tw(o), &b_adj)? != a {
            return Err(fault("A != TW_o * B*"));
        }
        if adjoint(&a)? != b.push(o as i64 + 1) {
            return Err(fault("A* != [B, o+1]"));
        }
        if !a.entries().iter().any(|&x| x >= 3) {
            return Err(fault("A has no curve of self-intersection <= -3"));
        }
        clusters.push(Cluster { a, b, o: o as u64 });
    }

    let mut graph = DualGraph::new();
    let mut prev: Option<VertexId> = None;
    let mut firsts = Vec::with_capacity(clusters.len());
    for (i, c) in clusters.iter().enumerate() {
        for (j, &w) in c.a.entries().iter().enumerate() {
            let v = graph.add_vertex(-w, Some(format!("A{}.{}", i + 1, j + 1)));
            if j == 0 {
                firsts.push(v);
            }
            if let Some(p) = prev {
                graph.add_edge(p, v)?;
            }
            prev = Some(v);
        }
    }
    let d0 = graph.add_vertex(-1, Some("D0".into()));
    graph.add_edge(prev.expect("k >= 1"), d0)?;
    for (i, c) in clusters.iter().enumerate() {
        let mut anchor = firsts.get(i + 1).copied().unwrap_or(d0);
        for (j, &w) in c.b.entries().iter().enumerate() {
            let v = graph.add_vertex(-w, Some(format!("B{}.{}", i + 1, j + 1)));
            graph.add_edge(anchor, v)?;
            anchor = v;
        }
    }

    let blow_ups = mult_from_char(ch).blow_ups();
    if graph.len() != blow_ups {
        return Err(Error::Inconsistent(format!(
            "{ch}: {} exceptional curves but {blow_ups} blow-ups",
            graph.len()
        )));
    }
    Ok(CuspResolutionGraph {
        characteristic: ch.clone(),
        clusters,
        graph,
        d0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(v: &[u64]) -> CharacteristicSequence {
        CharacteristicSequence::new(v.to_vec()).unwrap()
    }

    fn ch(v: &[i64]) -> LinearChain {
        LinearChain::new(v.to_vec())
    }

    #[test]
    fn characteristic_validation() {
        assert!(CharacteristicSequence::new(vec![2]).is_err());
        assert!(CharacteristicSequence::new(vec![1, 3]).is_err());
        assert!(CharacteristicSequence::new(vec![2, 4]).is_err());
        assert!(CharacteristicSequence::new(vec![4, 6]).is_err());
        assert!(CharacteristicSequence::new(vec![4, 6, 8, 9]).is_err());
        assert!(CharacteristicSequence::new(vec![3, 2]).is_err());
        assert!(CharacteristicSequence::new(vec![4, 6, 7]).is_ok());
        let err = CharacteristicSequence::new(vec![4, 6]).unwrap_err();
        assert!(
            err.to_string().contains("gcd of all exponents must be 1"),
            "{err}"
        );
    }

    #[test]
    fn euclid_examples() {
        let t = euclid_decompose(&cs(&[2, 3]));
        assert_eq!(
            t.rows,
            vec![EuclidRow {
                gamma: 1,
                quotients: vec![0, 2],
                remainders: vec![2, 1]
            }]
        );
        let t = euclid_decompose(&cs(&[4, 6, 7]));
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.rows[0].quotients, vec![0, 2]);
        assert_eq!(t.rows[0].remainders, vec![4, 2]);
        assert_eq!(t.rows[1].quotients, vec![0, 2]);
        assert_eq!(t.rows[1].remainders, vec![2, 1]);
        let t = euclid_decompose(&cs(&[2, 7]));
        assert_eq!(t.rows[0].quotients, vec![2, 2]);
        assert_eq!(t.rows[0].gamma, 5);
    }

    #[test]
    fn euclid_identities_hold() {
        for alphas in [
            &[2u64, 3][..],
            &[4, 6, 7],
            &[6, 9, 13],
            &[8, 12, 14, 15],
            &[5, 13],
            &[7, 30],
        ] {
            let c = cs(alphas);
            let t = euclid_decompose(&c);
            for (i, row) in t.rows.iter().enumerate() {
                let (q, m) = (&row.quotients, &row.remainders);
                let n = q.len();
                assert!(n >= 2 && q[n - 1] > 1);
                assert!(q[1..].iter().all(|&a| a > 0));
                assert_eq!(row.gamma, q[0] * m[0] + m[1]);
                for j in 1..n - 1 {
                    assert_eq!(m[j - 1], q[j] * m[j] + m[j + 1]);
                }
                assert_eq!(m[n - 2], q[n - 1] * m[n - 1]);
                if let Some(next) = t.rows.get(i + 1) {
                    assert_eq!(next.remainders[0], row.last_remainder());
                }
            }
            assert_eq!(t.rows.last().unwrap().last_remainder(), 1);
        }
    }

    #[test]
    fn mult_from_char_examples() {
        let m = mult_from_char(&cs(&[2, 3]));
        assert_eq!(m.full(), &[2, 1, 1]);
        assert_eq!(m.written(), &[2]);
        let m = mult_from_char(&cs(&[4, 6, 7]));
        assert_eq!(m.full(), &[4, 2, 2, 1, 1]);
        assert_eq!(m.written(), &[4, 2, 2]);
        let m = mult_from_char(&cs(&[2, 7]));
        assert_eq!(m.full(), &[2, 2, 2, 1, 1]);
        assert_eq!(m.to_string(), "(2,2,2)");
    }

    #[test]
    fn char_from_mult_examples() {
        let m = MultiplicitySequence::from_full(vec![2, 1, 1]).unwrap();
        assert_eq!(char_from_mult(&m), cs(&[2, 3]));
        let m: MultiplicitySequence = "(3)".parse().unwrap();
        assert_eq!(m.full(), &[3, 1, 1, 1]);
        assert_eq!(char_from_mult(&m), cs(&[3, 4]));
        assert!(matches!(
            MultiplicitySequence::from_full(vec![3, 2, 1]),
            Err(Error::NotRealizable { .. })
        ));
    }

    #[test]
    fn three_two_one_has_no_preimage() {
        // every characteristic sequence with α0 = 3 and αk <= 40
        let mut found = false;
        for a1 in 4..=40u64 {
            if let Ok(c) = CharacteristicSequence::new(vec![3, a1]) {
                found |= mult_from_char(&c).full() == [3, 2, 1];
            }
        }
        assert!(!found);
        assert!(MultiplicitySequence::from_full(vec![3, 2, 1]).is_err());
        // read as a written form, one more 1 completes it to (3;5)
        let m: MultiplicitySequence = "(3,2,1)".parse().unwrap();
        assert_eq!(m.full(), &[3, 2, 1, 1]);
        assert!("(3,2,2)".parse::<MultiplicitySequence>().is_err());
    }

    #[test]
    fn written_form_parsing() {
        let m: MultiplicitySequence = "(2_3)".parse().unwrap();
        assert_eq!(m.full(), &[2, 2, 2, 1, 1]);
        let m: MultiplicitySequence = "(4,2_2)".parse().unwrap();
        assert_eq!(m.full(), &[4, 2, 2, 1, 1]);
        // a written form that already carries some of its 1's
        let m: MultiplicitySequence = "(3,1,1)".parse().unwrap();
        assert_eq!(m.full(), &[3, 1, 1, 1]);
        let m: MultiplicitySequence = "(2,1,1)".parse().unwrap();
        assert_eq!(m.full(), &[2, 1, 1]);
        assert!("()".parse::<MultiplicitySequence>().is_err());
        assert!("(1)".parse::<MultiplicitySequence>().is_err());
        assert!("(2,3)".parse::<MultiplicitySequence>().is_err());
        assert!("(2,0)".parse::<MultiplicitySequence>().is_err());
        assert!("2,1".parse::<MultiplicitySequence>().is_err());
    }

    #[test]
    fn puiseux_examples() {
        assert_eq!(
            puiseux_from_char(&cs(&[4, 6, 7])).pairs(),
            &[(2, 3), (2, 7)]
        );
        assert_eq!(puiseux_from_char(&cs(&[2, 3])).pairs(), &[(2, 3)]);
        let pp = PuiseuxPairs::new(vec![(2, 3), (2, 7)]).unwrap();
        assert_eq!(char_from_puiseux(&pp).unwrap(), cs(&[4, 6, 7]));
        assert_eq!(pp.to_string(), "[(2,3),(2,7)]");
        assert_eq!("[(2,3), (2,7)]".parse::<PuiseuxPairs>().unwrap(), pp);
        assert!(PuiseuxPairs::new(vec![(2, 4)]).is_err());
        assert!(PuiseuxPairs::new(vec![(1, 3)]).is_err());
        // α2 = 5 < α1 = 6
        assert!(PuiseuxPairs::new(vec![(2, 3), (2, 5)]).is_err());
        assert!(PuiseuxPairs::new(vec![]).is_err());
    }

    #[test]
    fn resolution_examples() {
        let r = resolution_graph(&cs(&[2, 3])).unwrap();
        assert_eq!(r.g(), 1);
        assert_eq!(
            r.clusters[0],
            Cluster {
                a: ch(&[3]),
                b: ch(&[2]),
                o: 1
            }
        );
        assert_eq!(r.vertex_count(), 3);

        let r = resolution_graph(&cs(&[4, 6, 7])).unwrap();
        assert_eq!(r.g(), 2);
        for c in &r.clusters {
            assert_eq!((&c.a, &c.b), (&ch(&[3]), &ch(&[2])));
        }

        let r = resolution_graph(&cs(&[2, 7])).unwrap();
        assert_eq!(r.clusters[0].a, ch(&[2, 2, 3]));
        assert_eq!(r.clusters[0].b, ch(&[2]));
        assert_eq!(r.clusters[0].o, 3);
    }

    #[test]
    fn resolution_shape() {
        // (4;6,7): A1(-3) - A2(-3) - D0(-1), B1 on A2.1, B2 on D0
        let r = resolution_graph(&cs(&[4, 6, 7])).unwrap();
        let g = &r.graph;
        let id = |l: &str| g.find_label(l).unwrap();
        assert!(g.adjacent(id("A1.1"), id("A2.1")));
        assert!(g.adjacent(id("A2.1"), id("D0")));
        assert!(g.adjacent(id("A2.1"), id("B1.1")));
        assert!(g.adjacent(id("D0"), id("B2.1")));
        assert_eq!(g.edges().len(), 4);
        assert_eq!(r.d0, id("D0"));
        assert_eq!(g.weight(r.d0), Some(-1));
        assert_eq!(g.vertices().filter(|v| v.weight == -1).count(), 1);
    }

    #[test]
    fn odd_euclid_length() {
        // (3;5): γ = 2, quotients (0,1,2)
        let c = cs(&[3, 5]);
        assert_eq!(euclid_decompose(&c).rows[0].quotients, vec![0, 1, 2]);
        let r = resolution_graph(&c).unwrap();
        assert_eq!(
            r.clusters[0],
            Cluster {
                a: ch(&[3, 2]),
                b: ch(&[3]),
                o: 1
            }
        );
        assert_eq!(r.vertex_count(), mult_from_char(&c).blow_ups());
    }

    #[test]
    fn invariants_examples() {
        let inv =
            |v: &[u64]| local_invariants(&MultiplicitySequence::from_full(v.to_vec()).unwrap());
        assert_eq!(
            inv(&[2, 1, 1]),
            LocalInvariants {
                delta: 1,
                sum_sq: 6
            }
        );
        assert_eq!(
            inv(&[3, 1, 1, 1]),
            LocalInvariants {
                delta: 3,
                sum_sq: 12
            }
        );
        assert_eq!(
            inv(&[2, 2, 2, 1, 1]),
            LocalInvariants {
                delta: 3,
                sum_sq: 14
            }
        );
    }

    #[test]
    fn display_round_trip() {
        let c = cs(&[4, 6, 7]);
        assert_eq!(c.to_string(), "(4;6,7)");
        assert_eq!("(4;6,7)".parse::<CharacteristicSequence>().unwrap(), c);
        assert_eq!(
            " ( 2 ; 3 ) ".parse::<CharacteristicSequence>().unwrap(),
            cs(&[2, 3])
        );
        assert!("(4,6,7)".parse::<CharacteristicSequence>().is_err());
        assert!("(4;6)".parse::<CharacteristicSequence>().is_err());
    }
}
