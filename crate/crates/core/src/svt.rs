//! Set-valued tableaux.
//!
//! Cells hold nonempty sets of positive integers, stored as strictly
//! increasing sequences.  Validity: the maximum of a cell is at most
//! the minimum of the cell to its right and strictly below the minimum
//! of the cell above it, so any one-element-per-cell selection is a
//! semistandard tableau.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Evaluation, Partition};
use crate::tableau::Tableau;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SetValuedTableau {
    rows: Vec<Vec<Vec<usize>>>,
}

impl SetValuedTableau {
    pub fn new(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let s = SetValuedTableau { rows };
        s.validate()?;
        Ok(s)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Vec<usize>>>) -> Self {
        let s = SetValuedTableau { rows };
        debug_assert!(s.validate().is_ok(), "internal construction broke {s:?}");
        s
    }

    fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidSetValued(format!("empty row {}", i + 1)));
            }
            for cell in row {
                if cell.is_empty() {
                    return Err(Error::InvalidSetValued(format!(
                        "empty cell in row {}",
                        i + 1
                    )));
                }
                if cell.contains(&0) {
                    return Err(Error::InvalidSetValued(format!(
                        "zero letter in row {}",
                        i + 1
                    )));
                }
                if cell.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidSetValued(format!(
                        "cell not strictly increasing: {cell:?}"
                    )));
                }
            }
            for pair in row.windows(2) {
                if pair[0].last() > pair[1].first() {
                    return Err(Error::InvalidSetValued(format!(
                        "row condition violated in row {}",
                        i + 1
                    )));
                }
            }
            if i > 0 {
                let below = &self.rows[i - 1];
                if row.len() > below.len() {
                    return Err(Error::InvalidSetValued(format!(
                        "row {} longer than row {}",
                        i + 1,
                        i
                    )));
                }
                for (a, b) in row.iter().zip(below) {
                    if a.first() <= b.last() {
                        return Err(Error::InvalidSetValued(format!(
                            "column condition violated between rows {} and {}",
                            i,
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        SetValuedTableau { rows: Vec::new() }
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        let rows = t
            .rows()
            .iter()
            .map(|row| row.iter().map(|&e| vec![e]).collect())
            .collect();
        SetValuedTableau::from_rows_unchecked(rows)
    }

    /// The underlying semistandard tableau, when every cell is a singleton.
    pub fn to_tableau(&self) -> Option<Tableau> {
        if !self.is_semistandard() {
            return None;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c[0]).collect())
            .collect();
        Some(Tableau::from_rows_unchecked(rows))
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid by invariant")
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<&[usize]> {
        self.rows
            .get(row - 1)
            .and_then(|r| r.get(col - 1))
            .map(Vec::as_slice)
    }

    /// Total multiplicity of each letter.
    pub fn evaluation(&self) -> Evaluation {
        let max = self
            .rows
            .iter()
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0);
        let mut counts = vec![0; max];
        for &e in self.rows.iter().flatten().flatten() {
            counts[e - 1] += 1;
        }
        Evaluation::new(counts)
    }

    pub fn max_letter(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Number of elements minus number of cells; zero exactly when
    /// there are no multicells.
    pub fn excess(&self) -> usize {
        let elements: usize = self.rows.iter().flatten().map(Vec::len).sum();
        let cells: usize = self.rows.iter().map(Vec::len).sum();
        elements - cells
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.len() == 1)
    }

    /// Highest row containing a multicell; 0 when semistandard.
    pub fn multicell_row(&self) -> usize {
        self.rows
            .iter()
            .rposition(|row| row.iter().any(|c| c.len() > 1))
            .map(|i| i + 1)
            .unwrap_or(0)
    }

    /// Reading word: rows from the top down; within a row, first the
    /// non-minimal elements of each cell from right to left (largest
    /// first within a cell), then the minima from left to right.
    pub fn reading_word(&self) -> Word {
        let mut letters = Vec::new();
        for row in self.rows.iter().rev() {
            for cell in row.iter().rev() {
                for &e in cell.iter().skip(1).rev() {
                    letters.push(e);
                }
            }
            for cell in row {
                letters.push(cell[0]);
            }
        }
        Word::new(letters).expect("valid by invariant")
    }
}

impl Serialize for SetValuedTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetValuedTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SetValuedTableau::new(Vec::<Vec<Vec<usize>>>::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Budget for the backtracking cell filler: either exact per-letter
/// multiplicities or a total element count.
enum CellBudget<'a> {
    PerLetter(&'a mut Vec<usize>),
    Total(usize),
}

impl CellBudget<'_> {
    fn available(&self, letter: usize) -> bool {
        match self {
            CellBudget::PerLetter(rem) => letter <= rem.len() && rem[letter - 1] > 0,
            CellBudget::Total(n) => *n > 0,
        }
    }

    fn take(&mut self, letter: usize) {
        match self {
            CellBudget::PerLetter(rem) => rem[letter - 1] -= 1,
            CellBudget::Total(n) => *n -= 1,
        }
    }

    fn put_back(&mut self, letter: usize) {
        match self {
            CellBudget::PerLetter(rem) => rem[letter - 1] += 1,
            CellBudget::Total(n) => *n += 1,
        }
    }

    fn remaining(&self) -> usize {
        match self {
            CellBudget::PerLetter(rem) => rem.iter().sum(),
            CellBudget::Total(n) => *n,
        }
    }
}

/// All set-valued tableaux of the given shape and evaluation, in a
/// fixed deterministic order.
pub fn enumerate_svt(shape: &Partition, ev: &Evaluation) -> Vec<SetValuedTableau> {
    if ev.size() < shape.size() {
        return Vec::new();
    }
    if shape.rows() > ev.max_letter() {
        // column minima increase strictly, so rows cannot outnumber letters
        return Vec::new();
    }
    let mut remaining = ev.counts().to_vec();
    let max_letter = remaining.len();
    let mut out = Vec::new();
    enumerate_cells(
        shape,
        max_letter,
        &mut CellBudget::PerLetter(&mut remaining),
        &mut out,
    );
    out
}

/// All set-valued tableaux with entries at most `max_letter` and
/// exactly `n` elements in total, over every shape with at most
/// `max_letter` rows.  Shapes are visited in the canonical order.
pub fn enumerate_svt_by_content(n: usize, max_letter: usize) -> Vec<SetValuedTableau> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetValuedTableau::empty());
        return out;
    }
    for shape in crate::partition::partitions_up_to_bounded(n, max_letter) {
        if shape.is_empty() {
            continue;
        }
        enumerate_cells(&shape, max_letter, &mut CellBudget::Total(n), &mut out);
    }
    out
}

fn enumerate_cells(
    shape: &Partition,
    max_letter: usize,
    budget: &mut CellBudget,
    out: &mut Vec<SetValuedTableau>,
) {
    let cells_total = shape.size();
    if shape.is_empty() {
        if budget.remaining() == 0 {
            out.push(SetValuedTableau::empty());
        }
        return;
    }

    // Fill cells row-major from the bottom row; within a cell, grow the
    // set in increasing order.  At each cell the minimum is bounded by
    // the left neighbour's maximum and strictly by the cell below.
    #[allow(clippy::too_many_arguments)]
    fn next_cell(
        shape: &Partition,
        r: usize,
        c: usize,
        cells_done: usize,
        cells_total: usize,
        max_letter: usize,
        budget: &mut CellBudget,
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<SetValuedTableau>,
    ) {
        if r > shape.rows() {
            if budget.remaining() == 0 {
                out.push(SetValuedTableau::from_rows_unchecked(rows.clone()));
            }
            return;
        }
        if budget.remaining() < cells_total - cells_done {
            return;
        }
        let mut lo = 1;
        if c > 1 {
            lo = lo.max(*rows[r - 1][c - 2].last().expect("nonempty"));
        }
        if r > 1 {
            lo = lo.max(rows[r - 2][c - 1].last().expect("nonempty") + 1);
        }
        if lo > max_letter {
            return;
        }
        if rows.len() < r {
            rows.push(Vec::new());
        }
        rows[r - 1].push(Vec::new());
        for first in lo..=max_letter {
            if !budget.available(first) {
                continue;
            }
            budget.take(first);
            rows[r - 1].last_mut().expect("pushed").push(first);
            extend_cell(
                shape,
                r,
                c,
                cells_done,
                cells_total,
                max_letter,
                budget,
                rows,
                out,
            );
            rows[r - 1].last_mut().expect("pushed").pop();
            budget.put_back(first);
        }
        rows[r - 1].pop();
        if rows[r - 1].is_empty() {
            rows.pop();
        }
    }

    // With the current cell nonempty, either move on or add a larger letter.
    #[allow(clippy::too_many_arguments)]
    fn extend_cell(
        shape: &Partition,
        r: usize,
        c: usize,
        cells_done: usize,
        cells_total: usize,
        max_letter: usize,
        budget: &mut CellBudget,
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<SetValuedTableau>,
    ) {
        let (nr, nc) = if c == shape.row_len(r) {
            (r + 1, 1)
        } else {
            (r, c + 1)
        };
        next_cell(
            shape,
            nr,
            nc,
            cells_done + 1,
            cells_total,
            max_letter,
            budget,
            rows,
            out,
        );
        // spare elements beyond one per cell
        if budget.remaining() > cells_total - cells_done - 1 {
            let last = *rows[r - 1][c - 1].last().expect("nonempty");
            for next in last + 1..=max_letter {
                if !budget.available(next) {
                    continue;
                }
                budget.take(next);
                rows[r - 1][c - 1].push(next);
                extend_cell(
                    shape,
                    r,
                    c,
                    cells_done,
                    cells_total,
                    max_letter,
                    budget,
                    rows,
                    out,
                );
                rows[r - 1][c - 1].pop();
                budget.put_back(next);
            }
        }
    }

    let mut rows: Vec<Vec<Vec<usize>>> = Vec::new();
    next_cell(
        shape,
        1,
        1,
        0,
        cells_total,
        max_letter,
        budget,
        &mut rows,
        out,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::rsk_insert;
    use crate::word::word;

    pub(crate) fn svt(rows: &[&[&[usize]]]) -> SetValuedTableau {
        SetValuedTableau::new(
            rows.iter()
                .map(|row| row.iter().map(|c| c.to_vec()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reading_word_paper_example() {
        let s = svt(&[&[&[1, 2], &[2, 3], &[3]], &[&[3], &[4, 5, 6]]]);
        assert_eq!(s.reading_word(), word(&[6, 5, 3, 4, 3, 2, 1, 2, 3]));
    }

    #[test]
    fn reading_word_small() {
        assert_eq!(svt(&[&[&[1]]]).reading_word(), word(&[1]));
        let s = svt(&[&[&[1], &[1, 2]], &[&[2]]]);
        assert_eq!(s.reading_word(), word(&[2, 2, 1, 1]));
        assert_eq!(
            rsk_insert(&s.reading_word()).rows(),
            &[vec![1, 1], vec![2, 2]]
        );
    }

    #[test]
    fn evaluation_and_excess() {
        let s = svt(&[&[&[1, 2], &[2, 3], &[3]], &[&[3], &[4, 5, 6]]]);
        assert_eq!(s.evaluation(), Evaluation::new(vec![1, 2, 3, 1, 1, 1]));
        assert_eq!(s.excess(), 4);
        let t = Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(SetValuedTableau::from_tableau(&t).excess(), 0);
    }

    #[test]
    fn multicell_row_examples() {
        let s = svt(&[&[&[1, 2]]]);
        assert_eq!(s.multicell_row(), 1);
        let t = Tableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(SetValuedTableau::from_tableau(&t).multicell_row(), 0);
    }

    #[test]
    fn enumerate_svt_examples() {
        assert_eq!(
            enumerate_svt(&part(&[1]), &Evaluation::new(vec![1, 1])),
            vec![svt(&[&[&[1, 2]]])]
        );
        assert_eq!(
            enumerate_svt(&part(&[2]), &Evaluation::new(vec![1, 1])),
            vec![svt(&[&[&[1], &[2]]])]
        );
        assert!(enumerate_svt(&part(&[1]), &Evaluation::new(vec![2])).is_empty());
    }

    #[test]
    fn enumerate_by_content_examples() {
        assert_eq!(enumerate_svt_by_content(1, 1), vec![svt(&[&[&[1]]])]);
        let all = enumerate_svt_by_content(2, 2);
        assert_eq!(all.len(), 5);
        assert_eq!(enumerate_svt_by_content(2, 1), vec![svt(&[&[&[1], &[1]]])]);
    }

    #[test]
    fn reading_word_content_matches_evaluation() {
        for s in enumerate_svt_by_content(4, 3) {
            assert_eq!(s.reading_word().content(), s.evaluation());
        }
    }

    #[test]
    fn singleton_selections_are_semistandard() {
        // every one-element-per-cell selection of a valid SVT is an SSYT
        fn selections(s: &SetValuedTableau) -> Vec<Vec<Vec<usize>>> {
            let mut out = vec![Vec::new()];
            for row in s.rows() {
                let mut next = Vec::new();
                for rows_so_far in &out {
                    let mut row_choices: Vec<Vec<usize>> = vec![Vec::new()];
                    for cell in row {
                        let mut ext = Vec::new();
                        for choice in &row_choices {
                            for &e in cell {
                                let mut c = choice.clone();
                                c.push(e);
                                ext.push(c);
                            }
                        }
                        row_choices = ext;
                    }
                    for rc in row_choices {
                        let mut r = rows_so_far.clone();
                        r.push(rc);
                        next.push(r);
                    }
                }
                out = next;
            }
            out
        }
        for n in 0..=6 {
            for s in enumerate_svt_by_content(n, 3) {
                for sel in selections(&s) {
                    assert!(Tableau::new(sel).is_ok());
                }
            }
        }
    }

    #[test]
    fn no_multicell_count_matches_kostka() {
        use crate::tableau::kostka;
        for lam in crate::partition::partitions_of(4) {
            for mu in crate::partition::partitions_of(4) {
                let ev = Evaluation::from(&mu);
                assert_eq!(enumerate_svt(&lam, &ev).len() as i64, kostka(&lam, &ev));
            }
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(SetValuedTableau::new(vec![vec![vec![2], vec![1]]]).is_err());
        assert!(SetValuedTableau::new(vec![vec![vec![1, 1]]]).is_err());
        assert!(SetValuedTableau::new(vec![vec![vec![1]], vec![vec![1]]]).is_err());
        assert!(SetValuedTableau::new(vec![vec![vec![]]]).is_err());
    }
}
