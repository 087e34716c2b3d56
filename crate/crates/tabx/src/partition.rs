//! Partitions, containment, evenness, conjugation, and content vectors.
//!
//! Partitions are stored canonically: weakly decreasing with trailing
//! zeros stripped, so equality is equality of canonical part lists. The
//! derived `Ord` is lexicographic on the parts, which fixes enumeration
//! order everywhere in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An integer partition, identified with its Young diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros
    /// are accepted and stripped.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonPartitionShape { parts });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part, 1-based; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes of the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True iff the diagram of `inner` fits inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= self.part(i + 1))
    }

    /// True iff consecutive parts pair up equal, i.e. every column of the
    /// diagram has even length. True for the empty partition.
    pub fn is_even(&self) -> bool {
        if !self.parts.len().is_multiple_of(2) {
            return false;
        }
        self.parts.chunks_exact(2).all(|pair| pair[0] == pair[1])
    }

    /// Column lengths of the diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Parses the command-line form: comma-separated parts, `-` for the
    /// empty partition.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: usize = piece.parse().map_err(|_| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("malformed partition part {piece:?}"),
            })?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Letter multiplicities over a fixed alphabet `[2n]`; entry `i` counts
/// occurrences of `i`. Unlike a partition this need not be monotone.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ContentVector {
    entries: Vec<usize>,
}

impl ContentVector {
    pub fn new(entries: Vec<usize>) -> Self {
        ContentVector { entries }
    }

    pub fn zero(two_n: usize) -> Self {
        ContentVector {
            entries: vec![0; two_n],
        }
    }

    /// Pads a partition with zeros to length `two_n`.
    pub fn from_partition(p: &Partition, two_n: usize) -> Result<Self, Error> {
        if p.len() > two_n {
            return Err(Error::AlphabetTooSmall {
                two_n,
                rows: p.len(),
            });
        }
        let entries = (1..=two_n).map(|i| p.part(i)).collect();
        Ok(ContentVector { entries })
    }

    /// Alphabet size `2n`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicity of `letter` (1-based).
    pub fn count(&self, letter: usize) -> usize {
        debug_assert!(letter >= 1);
        self.entries.get(letter - 1).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// The content as a partition, when the entries are weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.entries.clone()).ok()
    }
}

/// Pads `lambda` and `nu` to length `two_n`, subtracts componentwise, and
/// reverses. This is the content of the left companion of any tableau of
/// shape `lambda/mu` and weight `nu`.
pub fn reversed_difference(
    lambda: &Partition,
    nu: &Partition,
    two_n: usize,
) -> Result<ContentVector, Error> {
    if !lambda.contains(nu) {
        return Err(Error::NotContained {
            inner: nu.to_string(),
            outer: lambda.to_string(),
        });
    }
    if lambda.len() > two_n {
        return Err(Error::AlphabetTooSmall {
            two_n,
            rows: lambda.len(),
        });
    }
    let entries = (0..two_n)
        .map(|i| {
            let row = two_n - i;
            lambda.part(row) - nu.part(row)
        })
        .collect();
    Ok(ContentVector::new(entries))
}

/// All even partitions `nu` with `nu` inside `lambda` and `|nu| = size`,
/// in lexicographically decreasing order. Empty when `size` is odd.
///
/// Evenness is columnwise, so candidates are generated as conjugates of
/// partitions with all parts even inside the conjugate of `lambda`.
pub fn even_subpartitions(lambda: &Partition, size: usize) -> Vec<Partition> {
    if !size.is_multiple_of(2) {
        return Vec::new();
    }
    let cols = lambda.conjugate();
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(
        cols: &Partition,
        idx: usize,
        max: usize,
        remaining: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            let sigma = Partition::new(acc.clone()).expect("generated parts are decreasing");
            out.push(sigma.conjugate());
            return;
        }
        if idx >= cols.len() {
            return;
        }
        let cap = max.min(cols.part(idx + 1)).min(remaining);
        let mut v = cap - cap % 2;
        while v >= 2 {
            acc.push(v);
            rec(cols, idx + 1, v, remaining - v, acc, out);
            acc.pop();
            v -= 2;
        }
    }
    rec(&cols, 0, size, size, &mut acc, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All partitions of exactly `n`, in lexicographically decreasing order.
pub fn partitions_of_size(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(remaining: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()).expect("generated parts are decreasing"));
            return;
        }
        let mut p = max.min(remaining);
        while p >= 1 {
            acc.push(p);
            rec(remaining - p, p, acc, out);
            acc.pop();
            p -= 1;
        }
    }
    rec(n, n.max(1), &mut acc, &mut out);
    out
}

/// All partitions contained in `lambda`, in lexicographically decreasing
/// order.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(
        lambda: &Partition,
        row: usize,
        max: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > lambda.len() || max == 0 {
            out.push(Partition::new(acc.clone()).expect("generated parts are decreasing"));
            return;
        }
        let cap = max.min(lambda.part(row));
        let mut p = cap;
        loop {
            if p == 0 {
                out.push(Partition::new(acc.clone()).expect("generated parts are decreasing"));
                break;
            }
            acc.push(p);
            rec(lambda, row + 1, p, acc, out);
            acc.pop();
            p -= 1;
        }
    }
    rec(lambda, 1, usize::MAX, &mut acc, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}
