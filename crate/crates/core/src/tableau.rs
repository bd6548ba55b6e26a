//! Semistandard tableaux, Schensted row insertion and Knuth equivalence.
//!
//! Rows are stored bottom-to-top (row 1 first), matching the French
//! convention for diagrams.  The reading word lists rows from the top
//! row down, each row left to right.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Evaluation, Partition};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let t = Tableau { rows };
        debug_assert!(t.validate().is_ok(), "internal construction broke {t:?}");
        t
    }

    fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("empty row {}", i + 1)));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau(format!(
                    "zero entry in row {}",
                    i + 1
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} not weakly increasing: {row:?}",
                    i + 1
                )));
            }
            if i > 0 {
                let below = &self.rows[i - 1];
                if row.len() > below.len() {
                    return Err(Error::InvalidTableau(format!(
                        "row {} longer than row {}",
                        i + 1,
                        i
                    )));
                }
                if row.iter().zip(below).any(|(a, b)| a <= b) {
                    return Err(Error::InvalidTableau(format!(
                        "column not strictly increasing between rows {} and {}",
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
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

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at `(row, col)`, 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row - 1).and_then(|r| r.get(col - 1)).copied()
    }

    pub fn evaluation(&self) -> Evaluation {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &e in self.rows.iter().flatten() {
            counts[e - 1] += 1;
        }
        Evaluation::new(counts)
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Top row first, each row left to right.
    pub fn reading_word(&self) -> Word {
        let letters: Vec<usize> = self.rows.iter().rev().flatten().copied().collect();
        Word::new(letters).expect("valid by invariant")
    }

    /// The unique tableau of shape and evaluation `mu`: row i filled with i.
    pub fn superstandard(mu: &Partition) -> Tableau {
        let rows = mu
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i + 1; len])
            .collect();
        Tableau::from_rows_unchecked(rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Tableau::new(Vec::<Vec<usize>>::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Schensted row insertion of a single letter, returning the new
/// tableau and the position of the created cell.
pub(crate) fn row_insert_traced(t: &Tableau, x: usize) -> (Tableau, (usize, usize)) {
    assert!(x >= 1, "letters are positive");
    let mut rows = t.rows.clone();
    let mut cur = x;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![cur]);
            return (Tableau::from_rows_unchecked(rows), (r + 1, 1));
        }
        // leftmost entry strictly greater than the incoming letter
        match rows[r].iter().position(|&e| e > cur) {
            Some(c) => {
                std::mem::swap(&mut rows[r][c], &mut cur);
                r += 1;
            }
            None => {
                rows[r].push(cur);
                let c = rows[r].len();
                return (Tableau::from_rows_unchecked(rows), (r + 1, c));
            }
        }
    }
}

/// Inserts `x` into `t` by Schensted row insertion.
pub fn row_insert(t: &Tableau, x: usize) -> Tableau {
    row_insert_traced(t, x).0
}

/// Inserts the letters of `w` from left to right, producing the
/// insertion tableau.
pub fn rsk_insert(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    for &x in w.letters() {
        t = row_insert(&t, x);
    }
    t
}

/// True when `w` is the reading word of its own insertion tableau.
pub fn is_tableau_word(w: &Word) -> bool {
    rsk_insert(w).reading_word() == *w
}

/// Two words are Knuth equivalent when they insert to the same tableau.
pub fn knuth_equivalent(u: &Word, v: &Word) -> bool {
    rsk_insert(u) == rsk_insert(v)
}

/// Removes the corner cell and reverse-bumps its entry downward: each
/// displaced letter replaces the rightmost entry strictly smaller than
/// it in the row below.  Bumping stops once a letter leaves row
/// `stop_row + 1`; that letter is returned together with the shrunken
/// tableau.  With `stop_row = 0` this is the full inverse of
/// `row_insert`.
pub fn reverse_bump(
    t: &Tableau,
    corner: (usize, usize),
    stop_row: usize,
) -> Result<(Tableau, usize)> {
    let (r0, c0) = corner;
    if !t.shape().is_removable_corner(r0, c0) {
        return Err(Error::NotRemovableCorner(r0, c0));
    }
    if stop_row >= r0 {
        return Err(Error::BadStopRow { stop_row, row: r0 });
    }
    let mut rows = t.rows.clone();
    let mut cur = rows[r0 - 1].pop().expect("corner exists");
    if rows[r0 - 1].is_empty() {
        rows.pop();
    }
    let mut r = r0;
    while r > stop_row + 1 {
        let below = &mut rows[r - 2];
        let c = below
            .iter()
            .rposition(|&e| e < cur)
            .expect("column strictness guarantees a smaller entry below");
        std::mem::swap(&mut below[c], &mut cur);
        r -= 1;
    }
    Ok((Tableau::from_rows_unchecked(rows), cur))
}

/// All semistandard tableaux of the given shape and evaluation, in
/// lexicographic order of their bottom-to-top row reading.
pub fn enumerate_ssyt(shape: &Partition, ev: &Evaluation) -> Vec<Tableau> {
    if shape.size() != ev.size() {
        return Vec::new();
    }
    let mut remaining = ev.counts().to_vec();
    let max = remaining.len();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fill_ssyt(
        shape,
        max,
        &mut |letter, rem: &mut Vec<usize>| {
            if letter > rem.len() || rem[letter - 1] == 0 {
                false
            } else {
                rem[letter - 1] -= 1;
                true
            }
        },
        &mut remaining,
        &mut rows,
        &mut out,
    );
    out
}

/// All semistandard tableaux of the given shape with entries at most
/// `max_letter`.
pub fn enumerate_ssyt_bounded(shape: &Partition, max_letter: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut no_state = Vec::new();
    fill_ssyt(
        shape,
        max_letter,
        &mut |_, _| true,
        &mut no_state,
        &mut rows,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_ssyt(
    shape: &Partition,
    max_letter: usize,
    take: &mut impl FnMut(usize, &mut Vec<usize>) -> bool,
    state: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &Partition,
        r: usize,
        c: usize,
        max_letter: usize,
        take: &mut impl FnMut(usize, &mut Vec<usize>) -> bool,
        state: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if r > shape.rows() {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
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
            lo = lo.max(rows[r - 2][c - 1] + 1);
        }
        for v in lo..=max_letter {
            if !take(v, state) {
                continue;
            }
            if rows.len() < r {
                rows.push(Vec::new());
            }
            rows[r - 1].push(v);
            rec(shape, nr, nc, max_letter, take, state, rows, out);
            rows[r - 1].pop();
            if rows[r - 1].is_empty() {
                rows.pop();
            }
            if let Some(s) = state.get_mut(v - 1) {
                *s += 1;
            }
        }
    }
    if shape.is_empty() {
        out.push(Tableau::empty());
        return;
    }
    rec(shape, 1, 1, max_letter, take, state, rows, out);
}

/// Kostka number: semistandard tableaux of shape `lam` and evaluation `mu`.
pub fn kostka(lam: &Partition, mu: &Evaluation) -> i64 {
    enumerate_ssyt(lam, mu).len() as i64
}

/// Skew semistandard fillings of `outer/inner` with the given
/// evaluation; `entries[r][c]` is 0 on inner cells.  Used for the
/// Littlewood-Richardson count.
pub(crate) fn enumerate_skew_ssyt(
    outer: &Partition,
    inner: &Partition,
    ev: &Evaluation,
) -> Vec<Vec<Vec<usize>>> {
    if !outer.contains(inner) || outer.size() - inner.size() != ev.size() {
        return Vec::new();
    }
    let max = ev.max_letter();
    let mut remaining = ev.counts().to_vec();
    let mut rows: Vec<Vec<usize>> = inner
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![0; len.min(outer.row_len(i + 1))])
        .collect();
    rows.resize(outer.rows(), Vec::new());
    let mut out = Vec::new();
    fn rec(
        outer: &Partition,
        inner: &Partition,
        r: usize,
        max: usize,
        remaining: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if r > outer.rows() {
            out.push(rows.clone());
            return;
        }
        let c = rows[r - 1].len() + 1;
        if c > outer.row_len(r) {
            rec(outer, inner, r + 1, max, remaining, rows, out);
            return;
        }
        let mut lo = 1;
        if c > 1 && c - 1 > inner.row_len(r) {
            lo = lo.max(rows[r - 1][c - 2]);
        }
        if r > 1 && inner.row_len(r - 1) < c {
            lo = lo.max(rows[r - 2][c - 1] + 1);
        }
        for v in lo..=max {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            rows[r - 1].push(v);
            rec(outer, inner, r, max, remaining, rows, out);
            rows[r - 1].pop();
            remaining[v - 1] += 1;
        }
    }
    rec(outer, inner, 1, max, &mut remaining, &mut rows, &mut out);
    out
}

/// Reading word of a skew filling produced by `enumerate_skew_ssyt`.
pub(crate) fn skew_reading_word(rows: &[Vec<usize>]) -> Word {
    let letters: Vec<usize> = rows
        .iter()
        .rev()
        .flatten()
        .copied()
        .filter(|&v| v != 0)
        .collect();
    Word::new(letters).expect("positive entries")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(
            tab(&[&[1, 1, 2], &[2, 3]]).reading_word(),
            word(&[2, 3, 1, 1, 2])
        );
        assert_eq!(tab(&[&[1]]).reading_word(), word(&[1]));
        assert_eq!(tab(&[&[1, 2], &[2]]).reading_word(), word(&[2, 1, 2]));
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(
            rsk_insert(&word(&[2, 3, 1, 1, 2])),
            tab(&[&[1, 1, 2], &[2, 3]])
        );
        assert_eq!(rsk_insert(&word(&[1])), tab(&[&[1]]));
        assert_eq!(rsk_insert(&word(&[1, 2, 1])), tab(&[&[1, 1], &[2]]));
        assert_eq!(rsk_insert(&Word::empty()), Tableau::empty());
    }

    #[test]
    fn tableau_word_examples() {
        assert!(is_tableau_word(&word(&[2, 1, 2])));
        assert!(!is_tableau_word(&word(&[1, 2, 1])));
        assert!(is_tableau_word(&Word::empty()));
    }

    #[test]
    fn knuth_examples() {
        assert!(knuth_equivalent(&word(&[1, 2, 1]), &word(&[2, 1, 1])));
        assert!(!knuth_equivalent(&word(&[1, 2]), &word(&[2, 1])));
        let w = word(&[3, 1, 2, 2]);
        assert!(knuth_equivalent(&w, &w));
    }

    #[test]
    fn row_insert_examples() {
        assert_eq!(
            row_insert(&tab(&[&[6, 7], &[7]]), 6),
            tab(&[&[6, 6], &[7, 7]])
        );
        assert_eq!(row_insert(&tab(&[&[1]]), 9), tab(&[&[1, 9]]));
        assert_eq!(row_insert(&tab(&[&[2]]), 1), tab(&[&[1], &[2]]));
    }

    #[test]
    fn reverse_bump_examples() {
        // full inverse of the dilation insertion step
        let (t, y) = reverse_bump(&tab(&[&[6, 6], &[7, 7]]), (2, 2), 0).unwrap();
        assert_eq!((t, y), (tab(&[&[6, 7], &[7]]), 6));
        let (t, y) = reverse_bump(&tab(&[&[1, 2]]), (1, 2), 0).unwrap();
        assert_eq!((t, y), (tab(&[&[1]]), 2));
        let (t, y) = reverse_bump(&tab(&[&[1, 1], &[2]]), (2, 1), 1).unwrap();
        assert_eq!((t, y), (tab(&[&[1, 1]]), 2));
    }

    #[test]
    fn reverse_bump_errors() {
        assert!(reverse_bump(&tab(&[&[1, 1], &[2]]), (1, 1), 0).is_err());
        assert!(reverse_bump(&tab(&[&[1, 1], &[2]]), (2, 1), 2).is_err());
    }

    #[test]
    fn row_insert_then_reverse_bump_round_trip() {
        for t in enumerate_ssyt_bounded(&part(&[2, 2, 1]), 4) {
            for x in 1..=4 {
                let (grown, cell) = row_insert_traced(&t, x);
                let (back, y) = reverse_bump(&grown, cell, 0).unwrap();
                assert_eq!(back, t);
                assert_eq!(y, x);
            }
        }
    }

    #[test]
    fn enumerate_ssyt_examples() {
        assert_eq!(
            enumerate_ssyt(&part(&[2, 1]), &Evaluation::new(vec![1, 1, 1])).len(),
            2
        );
        assert_eq!(
            enumerate_ssyt(&part(&[2]), &Evaluation::new(vec![2])),
            vec![tab(&[&[1, 1]])]
        );
        assert!(enumerate_ssyt(&part(&[1, 1]), &Evaluation::new(vec![2])).is_empty());
        assert_eq!(
            enumerate_ssyt(&Partition::empty(), &Evaluation::new(vec![])),
            vec![Tableau::empty()]
        );
    }

    #[test]
    fn rsk_of_reading_word_is_identity() {
        for shape in crate::partition::partitions_up_to(6) {
            for t in enumerate_ssyt_bounded(&shape, 4) {
                assert_eq!(rsk_insert(&t.reading_word()), t);
            }
        }
    }

    #[test]
    fn superstandard_shape_and_content() {
        let mu = part(&[3, 1]);
        let t = Tableau::superstandard(&mu);
        assert_eq!(t.shape(), mu);
        assert_eq!(t.evaluation(), Evaluation::from(&mu));
    }

    #[test]
    fn rejects_invalid_tableaux() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(Tableau::new(vec![vec![]]).is_err());
    }
}
