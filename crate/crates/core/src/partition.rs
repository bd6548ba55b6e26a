//! Integer partitions and evaluation (content) vectors.
//!
//! Diagrams follow the French convention: row 1 is the bottom row and
//! rows are numbered upward, so row lengths weakly decrease with the
//! row index.  Cells are addressed as `(row, column)`, both 1-indexed.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.  The empty
/// partition is allowed and indexes the constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {parts:?}"
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-indexed); 0 when the row is absent.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 || r > self.parts.len() {
            0
        } else {
            self.parts[r - 1]
        }
    }

    /// Reflects the diagram, turning rows into columns.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Containment of diagrams: `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.row_len(i + 1) >= p)
    }

    /// The statistic n(lambda) = sum_i (i - 1) * lambda_i.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// True when `(r, c)` is a cell whose removal leaves a partition shape.
    pub fn is_removable_corner(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && self.row_len(r) == c && self.row_len(r + 1) < c
    }

    /// True when adjoining a cell at `(r, c)` yields a partition shape.
    pub fn is_addable_corner(&self, r: usize, c: usize) -> bool {
        r >= 1 && c == self.row_len(r) + 1 && (r == 1 || self.row_len(r - 1) >= c)
    }
}

/// Canonical order: by size ascending, then lexicographically
/// descending on parts.  This is the term order used for all
/// serialized output.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A letter-multiplicity vector.  Trailing zeros are insignificant and
/// are trimmed on construction, so derived equality is the intended
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Evaluation {
    counts: Vec<usize>,
}

impl Evaluation {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Evaluation { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Multiplicity of `letter` (1-indexed).
    pub fn count(&self, letter: usize) -> usize {
        if letter == 0 || letter > self.counts.len() {
            0
        } else {
            self.counts[letter - 1]
        }
    }

    /// Total number of letters.
    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Largest letter with nonzero multiplicity; 0 for the empty evaluation.
    pub fn max_letter(&self) -> usize {
        self.counts.len()
    }

    /// True when the counts are weakly decreasing with no internal zeros.
    pub fn is_partition(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1]) && !self.counts.contains(&0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return Err(Error::ContentNotPartition(format!("{:?}", self.counts)));
        }
        Partition::new(self.counts.clone())
    }

    /// Concatenation used for products: the counts of `mu` followed by
    /// the counts of `nu` (letters of `nu` shifted past those of `mu`).
    pub fn concat(mu: &Partition, nu: &Partition) -> Evaluation {
        let mut counts = mu.parts().to_vec();
        counts.extend_from_slice(nu.parts());
        Evaluation::new(counts)
    }
}

impl From<&Partition> for Evaluation {
    fn from(p: &Partition) -> Self {
        Evaluation::new(p.parts().to_vec())
    }
}

impl Serialize for Evaluation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Evaluation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Evaluation::new(Vec::<usize>::deserialize(d)?))
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_of_bounded(n, n, n)
}

/// Partitions of `n` with at most `max_rows` parts, each at most
/// `max_part`, lexicographically descending.
pub fn partitions_of_bounded(n: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        n: usize,
        rows_left: usize,
        max_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        let hi = max_part.min(n);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(n - p, rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size 0..=n in the canonical order (size ascending,
/// lex descending within a size).
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(partitions_of(k));
    }
    out
}

/// Partitions of size 0..=n with at most `max_rows` parts.
pub fn partitions_up_to_bounded(n: usize, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(partitions_of_bounded(k, max_rows, k));
    }
    out
}

/// All partitions contained in `outer`, in canonical order.
pub fn contained_partitions(outer: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = partitions_up_to(outer.size())
        .into_iter()
        .filter(|mu| outer.contains(mu))
        .collect();
    out.sort();
    out
}
