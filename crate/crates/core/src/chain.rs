//! Weighted linear chains of rational curves.
//!
//! A chain `[a1, ..., ar]` stands for curves `D1, ..., Dr` with `Di^2 = -ai`
//! where consecutive curves meet once. Everything here is exact: the
//! discriminant is computed with arbitrary-precision integers and the
//! inductance is a reduced big rational.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of negated self-intersection numbers.
///
/// Chains are values: every operation returns a new chain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearChain(Vec<i64>);

impl LinearChain {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        LinearChain(entries.into())
    }

    pub fn empty() -> Self {
        LinearChain(Vec::new())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    /// Number of curves, `r(A)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// Non-empty with every entry at least 2.
    pub fn is_admissible(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&a| a >= 2)
    }

    pub(crate) fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(self.to_string()))
        }
    }

    /// `tA`: the same chain read from the other end.
    pub fn reverse(&self) -> LinearChain {
        LinearChain(self.0.iter().rev().copied().collect())
    }

    /// `A` with its first curve removed. The empty chain stays empty.
    pub fn drop_first(&self) -> LinearChain {
        LinearChain(self.0.iter().skip(1).copied().collect())
    }

    /// `A` with its last curve removed. The empty chain stays empty.
    pub fn drop_last(&self) -> LinearChain {
        let n = self.0.len().saturating_sub(1);
        LinearChain(self.0[..n].to_vec())
    }

    /// Concatenation `[A, B]`.
    pub fn concat(&self, other: &LinearChain) -> LinearChain {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        LinearChain(v)
    }

    /// `[A, x]`.
    pub fn push(&self, x: i64) -> LinearChain {
        let mut v = self.0.clone();
        v.push(x);
        LinearChain(v)
    }

    /// Discriminant `d(A)`, the determinant of the negated intersection matrix.
    pub fn discriminant(&self) -> BigInt {
        discriminant(self)
    }

    pub fn inductance(&self) -> Result<Fraction> {
        inductance(self)
    }

    pub fn adjoint(&self) -> Result<LinearChain> {
        adjoint(self)
    }

    pub fn star(&self, other: &LinearChain) -> Result<LinearChain> {
        star(self, other)
    }
}

impl From<Vec<i64>> for LinearChain {
    fn from(v: Vec<i64>) -> Self {
        LinearChain(v)
    }
}

impl fmt::Display for LinearChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Parses `"[2,3,4]"` (whitespace tolerated). Entries below 1 are rejected;
/// use [`parse_weight_list`] where zero or negative entries are meaningful.
impl FromStr for LinearChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_weight_list(s)?;
        if let Some(bad) = entries.iter().find(|&&a| a < 1) {
            return Err(Error::parse(
                "linear chain",
                s,
                format!("entry {bad} is below 1"),
            ));
        }
        Ok(LinearChain(entries))
    }
}

/// Parses a bracketed, comma-separated list of integers without range checks.
pub fn parse_weight_list(s: &str) -> Result<Vec<i64>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse("linear chain", s, "expected square brackets"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| Error::parse("linear chain", s, format!("{:?}: {e}", x.trim())))
        })
        .collect()
}

/// A reduced rational number with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction(BigRational);

impl Fraction {
    /// `numer / denom`, reduced. Fails on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (numer.into(), denom.into());
        if d.is_zero() {
            return Err(Error::parse(
                "fraction",
                &format!("{n}/0"),
                "zero denominator",
            ));
        }
        Ok(Fraction(BigRational::new(n, d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// `1 - self`.
    pub fn complement(&self) -> Fraction {
        Fraction(BigRational::one() - &self.0)
    }

    pub fn in_unit_interval(&self) -> bool {
        self.0.is_positive() && self.0 < BigRational::one()
    }
}

impl From<BigRational> for Fraction {
    fn from(r: BigRational) -> Self {
        Fraction(r)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::parse("fraction", s, "expected p/q"))?;
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|e| Error::parse("fraction", s, format!("numerator: {e}")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|e| Error::parse("fraction", s, format!("denominator: {e}")))?;
        Fraction::new(n, d)
    }
}

/// `d(A)` via `d(A) = a1 d(A') - d(A'')`, evaluated from the right end.
/// `d([]) = 1`.
pub fn discriminant(chain: &LinearChain) -> BigInt {
    // (d of the suffix starting at k+1, d of the suffix starting at k+2)
    let mut next = BigInt::one();
    let mut after = BigInt::zero();
    for &a in chain.entries().iter().rev() {
        let cur = BigInt::from(a) * &next - &after;
        after = std::mem::replace(&mut next, cur);
    }
    next
}

/// `e(A) = d(A') / d(A)` where `A'` drops the first curve.
pub fn inductance(chain: &LinearChain) -> Result<Fraction> {
    chain.require_admissible()?;
    Fraction::new(discriminant(&chain.drop_first()), discriminant(chain))
}

/// The unique admissible chain with the given inductance.
///
/// Expands `q/p` as a Hirzebruch-Jung continued fraction
/// `q/p = a1 - 1/(a2 - 1/(...))` using ceiling division.
pub fn chain_from_inductance(e: &Fraction) -> Result<LinearChain> {
    if !e.in_unit_interval() {
        return Err(Error::InductanceOutOfRange(e.to_string()));
    }
    let mut p = e.numer().clone();
    let q = e.denom().clone();
    let mut num = q;
    let mut entries = Vec::new();
    // invariant: current value is num/p > 1
    loop {
        let a = num.div_ceil(&p);
        entries.push(
            a.to_i64()
                .ok_or_else(|| Error::EntryOverflow(a.to_string()))?,
        );
        let rem = &a * &p - &num;
        if rem.is_zero() {
            break;
        }
        num = std::mem::replace(&mut p, rem);
    }
    Ok(LinearChain(entries))
}

/// `[m, ..., m]` with `n` entries.
pub fn repeated(m: i64, n: usize) -> LinearChain {
    LinearChain(vec![m; n])
}

/// `TW_n = [2, ..., 2]` with `n` entries; `TW_0` is empty.
pub fn tw(n: usize) -> LinearChain {
    repeated(2, n)
}

/// `A * B = [A without last, a_r + b_1 - 1, B without first]`.
pub fn star(a: &LinearChain, b: &LinearChain) -> Result<LinearChain> {
    let (Some(ar), Some(b1)) = (a.last(), b.first()) else {
        return Err(Error::EmptyChain("star"));
    };
    let mut v = Vec::with_capacity(a.len() + b.len() - 1);
    v.extend_from_slice(&a.entries()[..a.len() - 1]);
    v.push(ar + b1 - 1);
    v.extend_from_slice(&b.entries()[1..]);
    Ok(LinearChain(v))
}

/// Left fold of [`star`] over a non-empty list of chains.
pub fn star_all<'a, I>(chains: I) -> Result<LinearChain>
where
    I: IntoIterator<Item = &'a LinearChain>,
{
    let mut it = chains.into_iter();
    let first = it.next().ok_or(Error::EmptyChain("star"))?.clone();
    it.try_fold(first, |acc, c| star(&acc, c))
}

/// `A^{*n} = A * ... * A` (`n` factors, `n >= 1`).
pub fn star_power(a: &LinearChain, n: usize) -> Result<LinearChain> {
    if n == 0 {
        return Err(Error::ZeroStarPower);
    }
    star_all(std::iter::repeat_n(a, n))
}

/// Adjoint chain `A*`, computed as `TW_{a_r - 1} * ... * TW_{a_1 - 1}`.
///
/// Agrees with `e^{-1}(1 - e(tA))` on every admissible chain; the tests
/// check both routes against each other.
pub fn adjoint(chain: &LinearChain) -> Result<LinearChain> {
    chain.require_admissible()?;
    let factors: Vec<LinearChain> = chain
        .entries()
        .iter()
        .rev()
        .map(|&a| tw((a - 1) as usize))
        .collect();
    star_all(&factors)
}
