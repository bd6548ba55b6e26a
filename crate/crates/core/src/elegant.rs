//! Elegant fillings and the bijections with set-valued tableaux and
//! reverse plane partitions.
//!
//! An elegant filling of a skew shape is a skew semistandard filling
//! whose entries in row `i` are at most `i - 1`; the strict variant
//! has strictly increasing rows.  Counting them gives the transition
//! matrices between the Schur and Grothendieck bases.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::involution::{contract_traced, dilate_traced, slide_in};
use crate::partition::Partition;
use crate::rpp::ReversePlanePartition;
use crate::svt::SetValuedTableau;
use crate::tableau::{reverse_bump, rsk_insert, Tableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElegantFilling {
    outer: Partition,
    inner: Partition,
    entries: BTreeMap<(usize, usize), usize>,
    strict: bool,
}

impl ElegantFilling {
    pub fn new(
        outer: Partition,
        inner: Partition,
        entries: BTreeMap<(usize, usize), usize>,
        strict: bool,
    ) -> Result<Self> {
        let f = ElegantFilling {
            outer,
            inner,
            entries,
            strict,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        if !self.outer.contains(&self.inner) {
            return Err(Error::InvalidFilling(format!(
                "inner {} not contained in outer {}",
                self.inner, self.outer
            )));
        }
        // exactly the skew cells carry entries
        let mut expected = 0;
        for r in 1..=self.outer.rows() {
            for c in self.inner.row_len(r) + 1..=self.outer.row_len(r) {
                expected += 1;
                let v = *self
                    .entries
                    .get(&(r, c))
                    .ok_or_else(|| Error::InvalidFilling(format!("missing entry at ({r}, {c})")))?;
                if v == 0 || v > r.saturating_sub(1) {
                    return Err(Error::InvalidFilling(format!(
                        "entry {v} at ({r}, {c}) exceeds row bound {}",
                        r - 1
                    )));
                }
                if c > self.inner.row_len(r) + 1 {
                    let left = self.entries[&(r, c - 1)];
                    if v < left || (self.strict && v == left) {
                        return Err(Error::InvalidFilling(format!(
                            "row condition violated at ({r}, {c})"
                        )));
                    }
                }
                if r > 1 && c > self.inner.row_len(r - 1) {
                    let below = self.entries[&(r - 1, c)];
                    if v <= below {
                        return Err(Error::InvalidFilling(format!(
                            "column condition violated at ({r}, {c})"
                        )));
                    }
                }
            }
        }
        if self.entries.len() != expected {
            return Err(Error::InvalidFilling(format!(
                "{} entries for {} skew cells",
                self.entries.len(),
                expected
            )));
        }
        Ok(())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.entries
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct RawFilling {
    outer: Partition,
    inner: Partition,
    entries: Vec<(usize, usize, usize)>,
    strict: bool,
}

impl Serialize for ElegantFilling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawFilling {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
            entries: self.entries.iter().map(|(&(r, c), &v)| (r, c, v)).collect(),
            strict: self.strict,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ElegantFilling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFilling::deserialize(d)?;
        let entries = raw
            .entries
            .into_iter()
            .map(|(r, c, v)| ((r, c), v))
            .collect();
        ElegantFilling::new(raw.outer, raw.inner, entries, raw.strict).map_err(D::Error::custom)
    }
}

/// All elegant fillings of `outer / inner`, strict or not.
pub fn enumerate_elegant(
    outer: &Partition,
    inner: &Partition,
    strict: bool,
) -> Vec<ElegantFilling> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = (1..=outer.rows())
        .flat_map(|r| (inner.row_len(r) + 1..=outer.row_len(r)).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn rec(
        cells: &[(usize, usize)],
        k: usize,
        inner: &Partition,
        strict: bool,
        entries: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Vec<ElegantFilling>,
        outer: &Partition,
    ) {
        let Some(&(r, c)) = cells.get(k) else {
            out.push(ElegantFilling {
                outer: outer.clone(),
                inner: inner.clone(),
                entries: entries.clone(),
                strict,
            });
            return;
        };
        if r == 1 {
            return; // entries must be at most r - 1
        }
        let mut lo = 1;
        if c > inner.row_len(r) + 1 {
            lo = lo.max(entries[&(r, c - 1)] + usize::from(strict));
        }
        if c > inner.row_len(r - 1) {
            lo = lo.max(entries[&(r - 1, c)] + 1);
        }
        for v in lo..=r - 1 {
            entries.insert((r, c), v);
            rec(cells, k + 1, inner, strict, entries, out, outer);
            entries.remove(&(r, c));
        }
    }
    rec(&cells, 0, inner, strict, &mut entries, &mut out, outer);
    out
}

/// Records the dilation chain of a set-valued tableau whose reading
/// word inserts to `t`: at each dilation, the cell added to the shape
/// receives the difference between its row index and the multicell row
/// dilated from.  The result is a strict elegant filling of
/// `sh(t) / sh(s)`.
pub fn svt_to_filling(t: &Tableau, s: &SetValuedTableau) -> Result<ElegantFilling> {
    if rsk_insert(&s.reading_word()) != *t {
        return Err(Error::Precondition(
            "reading word of the set-valued tableau does not insert to the target tableau".into(),
        ));
    }
    let mut entries = BTreeMap::new();
    let mut cur = s.clone();
    while cur.multicell_row() > 0 {
        let i = cur.multicell_row();
        let (next, cell) = dilate_traced(&cur)?;
        entries.insert(cell, cell.0 - i);
        cur = next;
    }
    debug_assert_eq!(cur.to_tableau().as_ref(), Some(t));
    ElegantFilling::new(t.shape(), s.shape(), entries, true)
}

/// Inverse of [`svt_to_filling`]: entries decode to destination rows
/// `r - v`; cells are processed by destination row (smallest first),
/// ties by cell height (highest first), each one removed from the
/// tableau and reverse-bumped down to its destination row, where the
/// ejected letter joins the rightmost cell with smaller entries.
pub fn filling_to_svt(t: &Tableau, e: &ElegantFilling) -> Result<SetValuedTableau> {
    if !e.is_strict() {
        return Err(Error::Precondition("filling must be strict".into()));
    }
    if *e.outer() != t.shape() {
        return Err(Error::ShapeMismatch(format!(
            "filling outer {} vs tableau shape {}",
            e.outer(),
            t.shape()
        )));
    }
    let mut order: Vec<(usize, usize, usize)> = e
        .entries()
        .iter()
        .map(|(&(r, c), &v)| (r - v, r, c))
        .collect();
    order.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    let mut rows: Vec<Vec<Vec<usize>>> = SetValuedTableau::from_tableau(t).rows().to_vec();
    for (dest, r, c) in order {
        let upper: Vec<Vec<usize>> = rows[dest..]
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        if cell.len() == 1 {
                            Ok(cell[0])
                        } else {
                            Err(Error::InvalidFilling(
                                "destination row above an unresolved multicell".into(),
                            ))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let upper = Tableau::new(upper)?;
        if !upper.shape().is_removable_corner(r - dest, c) {
            return Err(Error::InvalidFilling(format!(
                "cell ({r}, {c}) is not removable when its turn comes"
            )));
        }
        let (shrunk, y) = reverse_bump(&upper, (r - dest, c), 0)?;
        rows.truncate(dest);
        for row in shrunk.rows() {
            rows.push(row.iter().map(|&x| vec![x]).collect());
        }
        let target = rows[dest - 1]
            .iter()
            .rposition(|cell| *cell.last().expect("nonempty") < y)
            .ok_or_else(|| {
                Error::InvalidFilling(format!("no cell in row {dest} can absorb {y}"))
            })?;
        rows[dest - 1][target].push(y);
    }
    let out = SetValuedTableau::new(rows)?;
    if out.shape() != *e.inner() {
        return Err(Error::InvalidFilling(format!(
            "decoded tableau has shape {}, expected {}",
            out.shape(),
            e.inner()
        )));
    }
    Ok(out)
}

/// Records the contraction chain of a reverse plane partition whose
/// reading word inserts to `t`: each contraction writes its repeat row
/// into the cell it removes.  The result is an elegant filling of
/// `sh(r) / sh(t)`.
pub fn rpp_to_filling(t: &Tableau, r: &ReversePlanePartition) -> Result<ElegantFilling> {
    if rsk_insert(&r.reading_word()) != *t {
        return Err(Error::Precondition(
            "reading word of the reverse plane partition does not insert to the target tableau"
                .into(),
        ));
    }
    let mut entries = BTreeMap::new();
    let mut cur = r.clone();
    while cur.repeat_row() > 0 {
        let i = cur.repeat_row();
        let (next, cell) = contract_traced(&cur)?;
        entries.insert(cell, i);
        cur = next;
    }
    debug_assert_eq!(cur.to_tableau().as_ref(), Some(t));
    ElegantFilling::new(r.shape(), t.shape(), entries, false)
}

/// Inverse of [`rpp_to_filling`]: each entry directs an inward slide
/// stopping at that row; cells are processed by entry value (smallest
/// first), ties from left to right.
pub fn filling_to_rpp(t: &Tableau, e: &ElegantFilling) -> Result<ReversePlanePartition> {
    if *e.inner() != t.shape() {
        return Err(Error::ShapeMismatch(format!(
            "filling inner {} vs tableau shape {}",
            e.inner(),
            t.shape()
        )));
    }
    let mut order: Vec<(usize, usize, usize)> =
        e.entries().iter().map(|(&(r, c), &v)| (v, c, r)).collect();
    order.sort();
    let mut cur = ReversePlanePartition::from_tableau(t);
    for (v, c, r) in order {
        if !cur.shape().is_addable_corner(r, c) {
            return Err(Error::InvalidFilling(format!(
                "cell ({r}, {c}) is not addable when its turn comes"
            )));
        }
        cur = slide_in(&cur, (r, c), v)?;
    }
    Ok(cur)
}
