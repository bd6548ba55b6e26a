//! Reverse plane partitions: fillings weakly increasing along rows and
//! up columns.  The evaluation counts, for each letter, the number of
//! columns containing it; the reading word keeps only the bottommost
//! occurrence of each letter in each column.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Evaluation, Partition};
use crate::tableau::Tableau;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ReversePlanePartition {
    rows: Vec<Vec<usize>>,
}

impl ReversePlanePartition {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let r = ReversePlanePartition { rows };
        r.validate()?;
        Ok(r)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let r = ReversePlanePartition { rows };
        debug_assert!(r.validate().is_ok(), "internal construction broke {r:?}");
        r
    }

    fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidPlanePartition(format!("empty row {}", i + 1)));
            }
            if row.contains(&0) {
                return Err(Error::InvalidPlanePartition(format!(
                    "zero entry in row {}",
                    i + 1
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidPlanePartition(format!(
                    "row {} not weakly increasing: {row:?}",
                    i + 1
                )));
            }
            if i > 0 {
                let below = &self.rows[i - 1];
                if row.len() > below.len() {
                    return Err(Error::InvalidPlanePartition(format!(
                        "row {} longer than row {}",
                        i + 1,
                        i
                    )));
                }
                if row.iter().zip(below).any(|(a, b)| a < b) {
                    return Err(Error::InvalidPlanePartition(format!(
                        "column not weakly increasing between rows {} and {}",
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        ReversePlanePartition { rows: Vec::new() }
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        ReversePlanePartition::from_rows_unchecked(t.rows().to_vec())
    }

    /// The underlying tableau, when columns are strictly increasing.
    pub fn to_tableau(&self) -> Option<Tableau> {
        Tableau::new(self.rows.clone()).ok()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid by invariant")
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row - 1).and_then(|r| r.get(col - 1)).copied()
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// True at `(row, col)` when this is the bottommost occurrence of
    /// its letter within the column.
    fn is_marked(&self, row: usize, col: usize) -> bool {
        row == 1 || self.rows[row - 2][col - 1] != self.rows[row - 1][col - 1]
    }

    /// For each letter, the number of columns containing it.
    pub fn evaluation(&self) -> Evaluation {
        let max = self.max_letter();
        let mut counts = vec![0; max];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if self.is_marked(i + 1, j + 1) {
                    counts[e - 1] += 1;
                }
            }
        }
        Evaluation::new(counts)
    }

    /// Reading word over the marked entries only: rows from the top
    /// down, left to right within each row.
    pub fn reading_word(&self) -> Word {
        let mut letters = Vec::new();
        for i in (1..=self.rows.len()).rev() {
            for j in 1..=self.rows[i - 1].len() {
                if self.is_marked(i, j) {
                    letters.push(self.rows[i - 1][j - 1]);
                }
            }
        }
        Word::new(letters).expect("valid by invariant")
    }

    /// True when no column repeats an entry, i.e. the filling is a
    /// semistandard tableau.
    pub fn is_column_strict(&self) -> bool {
        self.repeat_row() == 0
    }

    /// Highest row whose entry equals the entry directly above it;
    /// 0 when columns are strict.  (The row index of the lower entry
    /// of the highest equal vertical pair.)
    pub fn repeat_row(&self) -> usize {
        for i in (1..self.rows.len()).rev() {
            let lower = &self.rows[i - 1];
            let upper = &self.rows[i];
            if upper.iter().zip(lower).any(|(a, b)| a == b) {
                return i;
            }
        }
        0
    }
}

impl Serialize for ReversePlanePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ReversePlanePartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ReversePlanePartition::new(Vec::<Vec<usize>>::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// All reverse plane partitions of the given shape and evaluation.
pub fn enumerate_rpp(shape: &Partition, ev: &Evaluation) -> Vec<ReversePlanePartition> {
    let max_letter = ev.max_letter();
    if shape.size() < ev.size() {
        // each column contributes at least one marked cell per distinct letter
        return Vec::new();
    }
    if shape.is_empty() {
        return if ev.size() == 0 {
            vec![ReversePlanePartition::empty()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![0usize; max_letter];
    fill_rpp(
        shape,
        max_letter,
        Some(ev),
        &mut counts,
        &mut rows,
        &mut out,
    );
    out
}

/// All reverse plane partitions of the given shape with entries at
/// most `max_letter`.
pub fn enumerate_rpp_bounded(shape: &Partition, max_letter: usize) -> Vec<ReversePlanePartition> {
    if shape.is_empty() {
        return vec![ReversePlanePartition::empty()];
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![0usize; max_letter];
    fill_rpp(shape, max_letter, None, &mut counts, &mut rows, &mut out);
    out
}

fn fill_rpp(
    shape: &Partition,
    max_letter: usize,
    target: Option<&Evaluation>,
    counts: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<ReversePlanePartition>,
) {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &Partition,
        r: usize,
        c: usize,
        max_letter: usize,
        target: Option<&Evaluation>,
        counts: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<ReversePlanePartition>,
    ) {
        if r > shape.rows() {
            if target.is_none_or(|ev| (1..=max_letter).all(|l| counts[l - 1] == ev.count(l))) {
                out.push(ReversePlanePartition::from_rows_unchecked(rows.clone()));
            }
            return;
        }
        let (nr, nc) = if c == shape.row_len(r) {
            (r + 1, 1)
        } else {
            (r, c + 1)
        };
        let mut lo = 1;
        if c > 1 {
            lo = lo.max(rows[r - 1][c - 2]);
        }
        if r > 1 {
            lo = lo.max(rows[r - 2][c - 1]);
        }
        for v in lo..=max_letter {
            let marked = r == 1 || rows[r - 2][c - 1] != v;
            if marked {
                if let Some(ev) = target {
                    if counts[v - 1] + 1 > ev.count(v) {
                        continue;
                    }
                }
                counts[v - 1] += 1;
            }
            if rows.len() < r {
                rows.push(Vec::new());
            }
            rows[r - 1].push(v);
            rec(shape, nr, nc, max_letter, target, counts, rows, out);
            rows[r - 1].pop();
            if rows[r - 1].is_empty() {
                rows.pop();
            }
            if marked {
                counts[v - 1] -= 1;
            }
        }
    }
    rec(shape, 1, 1, max_letter, target, counts, rows, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::rsk_insert;
    use crate::word::word;

    pub(crate) fn rpp(rows: &[&[usize]]) -> ReversePlanePartition {
        ReversePlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ev(counts: &[usize]) -> Evaluation {
        Evaluation::new(counts.to_vec())
    }

    #[test]
    fn reading_word_paper_example() {
        assert_eq!(
            rpp(&[&[1, 1, 2], &[1, 2]]).reading_word(),
            word(&[2, 1, 1, 2])
        );
        assert_eq!(rpp(&[&[1], &[1], &[1]]).reading_word(), word(&[1]));
    }

    #[test]
    fn reading_word_inserts_to_common_tableau() {
        // the reading word keeps one occurrence per (column, letter);
        // its insertion tableau matches the displayed target
        let r = rpp(&[&[1, 1, 3, 4], &[1, 2, 3], &[1, 3], &[2]]);
        assert_eq!(r.reading_word(), word(&[2, 3, 2, 1, 1, 3, 4]));
        assert_eq!(
            rsk_insert(&r.reading_word()).rows(),
            &[vec![1, 1, 3, 4], vec![2, 2], vec![3]]
        );
    }

    #[test]
    fn evaluation_counts_columns() {
        assert_eq!(rpp(&[&[1, 1, 2], &[1, 2]]).evaluation(), ev(&[2, 2]));
        assert_eq!(rpp(&[&[1], &[1], &[1]]).evaluation(), ev(&[1]));
    }

    #[test]
    fn repeat_row_examples() {
        assert_eq!(
            rpp(&[&[1, 1, 3, 4], &[1, 2, 3], &[1, 3], &[2]]).repeat_row(),
            2
        );
        assert_eq!(rpp(&[&[1, 2], &[2, 3]]).repeat_row(), 0);
        assert_eq!(rpp(&[&[1], &[1]]).repeat_row(), 1);
    }

    #[test]
    fn enumerate_rpp_examples() {
        assert_eq!(
            enumerate_rpp(&part(&[1, 1]), &ev(&[1])),
            vec![rpp(&[&[1], &[1]])]
        );
        assert_eq!(
            enumerate_rpp(&part(&[1, 1]), &ev(&[1, 1])),
            vec![rpp(&[&[1], &[2]])]
        );
        assert!(enumerate_rpp(&part(&[2]), &ev(&[1])).is_empty());
    }

    #[test]
    fn reading_word_content_matches_evaluation() {
        for r in enumerate_rpp_bounded(&part(&[2, 2, 1]), 3) {
            assert_eq!(r.reading_word().content(), r.evaluation());
        }
    }

    #[test]
    fn column_strict_reading_matches_tableau_reading() {
        for r in enumerate_rpp_bounded(&part(&[3, 2]), 3) {
            if let Some(t) = r.to_tableau() {
                assert_eq!(r.reading_word(), t.reading_word());
            }
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(ReversePlanePartition::new(vec![vec![2, 1]]).is_err());
        assert!(ReversePlanePartition::new(vec![vec![2], vec![1]]).is_err());
        assert!(ReversePlanePartition::new(vec![vec![1], vec![1, 1]]).is_err());
    }
}
