//! Dilation of set-valued tableaux, contraction of reverse plane
//! partitions, and the sign-reversing involution on pairs.
//!
//! Dilation removes the largest entry of the rightmost multicell in
//! the highest multicell row and row-inserts it into the rows above;
//! contraction collapses the highest vertical repeat of a reverse
//! plane partition by sliding a marker up and to the right out of the
//! diagram.  Both preserve the Knuth class of the reading word.
//!
//! Local rules for the slides (pinned by the worked examples and by
//! mutual inversion with contraction): the contraction marker moves
//! north when the north neighbour is at most the east neighbour or
//! east is absent, else east; the inward slide moves south when the
//! south neighbour is at least the west neighbour or west is absent,
//! else west.

use crate::error::{Error, Result};
use crate::rpp::ReversePlanePartition;
use crate::svt::SetValuedTableau;
use crate::tableau::{reverse_bump, row_insert_traced, Tableau};

/// Removes the largest entry of the rightmost multicell in the highest
/// multicell row and row-inserts it into the subtableau strictly above
/// that row.  The excess drops by one and the reading word stays in
/// its Knuth class.
pub fn dilate(s: &SetValuedTableau) -> Result<SetValuedTableau> {
    dilate_traced(s).map(|(s, _)| s)
}

/// As [`dilate`], also returning the cell added to the shape.
pub fn dilate_traced(s: &SetValuedTableau) -> Result<(SetValuedTableau, (usize, usize))> {
    let i = s.multicell_row();
    if i == 0 {
        return Err(Error::NoMulticell);
    }
    let mut rows = s.rows().to_vec();
    let col = rows[i - 1]
        .iter()
        .rposition(|c| c.len() > 1)
        .expect("row i holds a multicell");
    let x = rows[i - 1][col].pop().expect("multicell is nonempty");

    let (upper, lower) = rows.split_at(i);
    let upper_tab = Tableau::new(
        lower
            .iter()
            .map(|row| row.iter().map(|c| c[0]).collect())
            .collect(),
    )
    .expect("rows above the multicell row are semistandard");
    let (grown, (r, c)) = row_insert_traced(&upper_tab, x);

    let mut new_rows = upper.to_vec();
    for row in grown.rows() {
        new_rows.push(row.iter().map(|&e| vec![e]).collect());
    }
    Ok((SetValuedTableau::from_rows_unchecked(new_rows), (r + i, c)))
}

/// Collapses the highest vertical repeat: the rightmost cell of the
/// row above the repeat row that equals the cell below it is replaced
/// by a marker, which slides up and to the right until it exits the
/// diagram.
pub fn contract(r: &ReversePlanePartition) -> Result<ReversePlanePartition> {
    contract_traced(r).map(|(r, _)| r)
}

/// As [`contract`], also returning the cell removed from the shape.
pub fn contract_traced(
    r: &ReversePlanePartition,
) -> Result<(ReversePlanePartition, (usize, usize))> {
    let i = r.repeat_row();
    if i == 0 {
        return Err(Error::NoRepeatedEntry);
    }
    let mut rows = r.rows().to_vec();
    let col = rows[i]
        .iter()
        .zip(&rows[i - 1])
        .rposition(|(a, b)| a == b)
        .expect("repeat row has an equal vertical pair");
    let (mut mr, mut mc) = (i + 1, col + 1);
    loop {
        let north = (rows.get(mr).map_or(0, Vec::len) >= mc).then(|| rows[mr][mc - 1]);
        let east = (rows[mr - 1].len() > mc).then(|| rows[mr - 1][mc]);
        match (north, east) {
            (Some(n), e) if e.is_none() || n <= e.unwrap_or(usize::MAX) => {
                rows[mr - 1][mc - 1] = n;
                mr += 1;
            }
            (_, Some(e)) => {
                rows[mr - 1][mc - 1] = e;
                mc += 1;
            }
            _ => break,
        }
    }
    rows[mr - 1].pop();
    if rows[mr - 1].is_empty() {
        rows.pop();
    }
    Ok((ReversePlanePartition::from_rows_unchecked(rows), (mr, mc)))
}

/// Adjoins a marker at the addable corner `outer` and slides it to the
/// south-west until it reaches `stop_row`, where it is filled with the
/// entry directly above it, creating a vertical repeat in that row.
pub fn slide_in(
    r: &ReversePlanePartition,
    outer: (usize, usize),
    stop_row: usize,
) -> Result<ReversePlanePartition> {
    let (or, oc) = outer;
    if !r.shape().is_addable_corner(or, oc) {
        return Err(Error::NotAddableCorner(or, oc));
    }
    if stop_row == 0 || stop_row >= or {
        return Err(Error::BadStopRow { stop_row, row: or });
    }
    let mut rows = r.rows().to_vec();
    if rows.len() < or {
        rows.push(Vec::new());
    }
    rows[or - 1].push(0); // marker slot
    let (mut mr, mut mc) = (or, oc);
    while mr > stop_row {
        let south = rows[mr - 2][mc - 1];
        match (mc > 1).then(|| rows[mr - 1][mc - 2]) {
            Some(west) if west > south => {
                rows[mr - 1][mc - 1] = west;
                mc -= 1;
            }
            _ => {
                rows[mr - 1][mc - 1] = south;
                mr -= 1;
            }
        }
    }
    rows[mr - 1][mc - 1] = rows[mr][mc - 1];
    Ok(ReversePlanePartition::from_rows_unchecked(rows))
}

/// A set-valued tableau and a reverse plane partition of the same
/// shape: the domain of the sign-reversing involution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableauPair {
    svt: SetValuedTableau,
    rpp: ReversePlanePartition,
}

impl TableauPair {
    pub fn new(svt: SetValuedTableau, rpp: ReversePlanePartition) -> Result<Self> {
        if svt.shape() != rpp.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                svt.shape(),
                rpp.shape()
            )));
        }
        Ok(TableauPair { svt, rpp })
    }

    pub fn svt(&self) -> &SetValuedTableau {
        &self.svt
    }

    pub fn rpp(&self) -> &ReversePlanePartition {
        &self.rpp
    }

    /// Fixed points of the involution: both components semistandard.
    pub fn is_fixed(&self) -> bool {
        self.svt.is_semistandard() && self.rpp.is_column_strict()
    }

    /// The letter that the contraction case would eject: contract the
    /// reverse plane partition to locate the removed corner, then
    /// reverse-bump that corner's entry through the rows of the
    /// set-valued side strictly above the repeat row.
    pub fn ejected_letter(&self) -> Result<usize> {
        let i = self.rpp.repeat_row();
        if i == 0 {
            return Err(Error::NoRepeatedEntry);
        }
        let (_, corner) = contract_traced(&self.rpp)?;
        let upper = self.upper_tableau(i)?;
        let (_, y) = reverse_bump(&upper, (corner.0 - i, corner.1), 0)?;
        Ok(y)
    }

    /// Rows strictly above row `i` of the set-valued component, as a
    /// semistandard tableau.
    fn upper_tableau(&self, i: usize) -> Result<Tableau> {
        let rows: Vec<Vec<usize>> = self
            .svt
            .rows()
            .iter()
            .skip(i)
            .map(|row| {
                row.iter()
                    .map(|c| {
                        if c.len() == 1 {
                            Ok(c[0])
                        } else {
                            Err(Error::Precondition(format!("multicell above row {i}")))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Tableau::new(rows)
    }
}

/// The sign-reversing, weight-preserving involution on same-shape
/// pairs.  Fixed points are exactly the pairs in which both components
/// are semistandard; otherwise the excess of the set-valued component
/// changes by one and both insertion tableaux are unchanged.
pub fn involute(p: &TableauPair) -> TableauPair {
    let rs = p.svt.multicell_row();
    let rr = p.rpp.repeat_row();
    if rs == 0 && rr == 0 {
        return p.clone();
    }
    let dilating = if rs > rr {
        true
    } else if rr > rs {
        false
    } else {
        let x = multicell_letter(&p.svt, rs);
        let y = p.ejected_letter().expect("repeat row present");
        x >= y
    };
    if dilating {
        dilate_pair(p, rs)
    } else {
        contract_pair(p, rr)
    }
}

/// Largest entry of the rightmost multicell in row `i`.
fn multicell_letter(s: &SetValuedTableau, i: usize) -> usize {
    let row = &s.rows()[i - 1];
    let col = row
        .iter()
        .rposition(|c| c.len() > 1)
        .expect("multicell row");
    *row[col].last().expect("nonempty cell")
}

fn dilate_pair(p: &TableauPair, i: usize) -> TableauPair {
    let (svt, new_cell) = dilate_traced(&p.svt).expect("multicell row present");
    let rpp = slide_in(&p.rpp, new_cell, i).expect("cell addable on the equal shape");
    TableauPair { svt, rpp }
}

fn contract_pair(p: &TableauPair, i: usize) -> TableauPair {
    let (rpp, corner) = contract_traced(&p.rpp).expect("repeat row present");
    let upper = p
        .upper_tableau(i)
        .expect("no multicells above the repeat row");
    let (upper_shrunk, y) =
        reverse_bump(&upper, (corner.0 - i, corner.1), 0).expect("contraction corner is removable");

    let mut rows = p.svt.rows()[..i].to_vec();
    for row in upper_shrunk.rows() {
        rows.push(row.iter().map(|&e| vec![e]).collect());
    }
    // re-insert the ejected letter as the maximum of the rightmost
    // cell of row i whose entries are all smaller
    let target = rows[i - 1]
        .iter()
        .rposition(|c| *c.last().expect("nonempty") < y)
        .expect("the cell below the bumped entry qualifies");
    rows[i - 1][target].push(y);
    TableauPair {
        svt: SetValuedTableau::from_rows_unchecked(rows),
        rpp,
    }
}

/// Sign-reversing pairing on set-valued tableaux within a Knuth class:
/// pairs each tableau that is not a single-row semistandard tableau
/// with a partner of opposite sign, moving the largest relevant letter
/// between a multicell and the end of the row above.
///
/// The published case analysis does not cover configurations where the
/// moving letter occupies a multicell strictly below its highest row;
/// those inputs are reported as unresolvable rather than guessed at.
/// The cancellation identity itself is independently certified by
/// direct summation.
#[cfg(feature = "sign-pairing")]
pub fn sign_pairing(s: &SetValuedTableau) -> Result<SetValuedTableau> {
    let mut x = s.max_letter();
    loop {
        if x == 0 {
            // fixed point: a single-row semistandard tableau
            return if s.rows().len() <= 1 && s.is_semistandard() {
                Ok(s.clone())
            } else {
                Err(Error::UnresolvablePairing(format!(
                    "letters exhausted on non-row tableau {s:?}"
                )))
            };
        }
        let row = match s
            .rows()
            .iter()
            .rposition(|row| row.iter().any(|c| c.contains(&x)))
        {
            Some(r) => r + 1,
            None => {
                x -= 1;
                continue;
            }
        };
        let multicell_with_x = |r: usize| {
            s.rows()[r - 1]
                .iter()
                .position(|c| c.len() > 1 && c.contains(&x))
        };

        if let Some(col) = multicell_with_x(row) {
            // move x from the multicell to the end of the row above
            let mut rows = s.rows().to_vec();
            let pos = rows[row - 1][col]
                .iter()
                .position(|&e| e == x)
                .expect("present");
            rows[row - 1][col].remove(pos);
            if rows.len() < row + 1 {
                rows.push(Vec::new());
            }
            rows[row].push(vec![x]);
            return SetValuedTableau::new(rows).map_err(|e| {
                Error::UnresolvablePairing(format!("multicell move produced invalid tableau: {e}"))
            });
        }
        if row > 1 {
            if multicell_with_x(row - 1).is_some() {
                return Err(Error::UnresolvablePairing(format!(
                    "letter {x} occupies a multicell below its highest row in {s:?}"
                )));
            }
            // move the x ending the row down into the row below
            let mut rows = s.rows().to_vec();
            let last = rows[row - 1].pop().expect("nonempty row");
            if last != vec![x] {
                return Err(Error::UnresolvablePairing(format!(
                    "row {row} does not end in a bare {x} in {s:?}"
                )));
            }
            if rows[row - 1].is_empty() {
                rows.remove(row - 1);
            }
            let target = rows[row - 2]
                .iter()
                .rposition(|c| *c.last().expect("nonempty") < x);
            let Some(target) = target else {
                return Err(Error::UnresolvablePairing(format!(
                    "no cell below can absorb {x} in {s:?}"
                )));
            };
            rows[row - 2][target].push(x);
            return SetValuedTableau::new(rows).map_err(|e| {
                Error::UnresolvablePairing(format!("row move produced invalid tableau: {e}"))
            });
        }
        x -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Evaluation;
    use crate::svt::enumerate_svt_by_content;
    use crate::tableau::rsk_insert;

    fn svt(rows: &[&[&[usize]]]) -> SetValuedTableau {
        SetValuedTableau::new(
            rows.iter()
                .map(|row| row.iter().map(|c| c.to_vec()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rpp(rows: &[&[usize]]) -> ReversePlanePartition {
        ReversePlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Set-valued side of the worked dilation example.
    fn example_svt() -> SetValuedTableau {
        svt(&[
            &[&[1], &[1, 2], &[2, 3], &[5]],
            &[&[3, 4], &[4, 5, 6], &[8]],
            &[&[6], &[7]],
            &[&[7]],
        ])
    }

    fn example_svt_dilated() -> SetValuedTableau {
        svt(&[
            &[&[1], &[1, 2], &[2, 3], &[5]],
            &[&[3, 4], &[4, 5], &[8]],
            &[&[6], &[6]],
            &[&[7], &[7]],
        ])
    }

    #[test]
    fn dilation_worked_example() {
        assert_eq!(example_svt().multicell_row(), 2);
        assert_eq!(dilate(&example_svt()).unwrap(), example_svt_dilated());
    }

    #[test]
    fn dilation_small_cases() {
        assert_eq!(
            dilate(&svt(&[&[&[1, 2]]])).unwrap(),
            svt(&[&[&[1]], &[&[2]]])
        );
        assert_eq!(
            dilate(&svt(&[&[&[1], &[1, 2]]])).unwrap(),
            svt(&[&[&[1], &[1]], &[&[2]]])
        );
        assert!(dilate(&svt(&[&[&[1]]])).is_err());
    }

    #[test]
    fn dilation_preserves_knuth_class_and_drops_excess() {
        for s in enumerate_svt_by_content(5, 4) {
            if s.multicell_row() == 0 {
                continue;
            }
            let d = dilate(&s).unwrap();
            assert_eq!(d.excess() + 1, s.excess());
            assert_eq!(rsk_insert(&d.reading_word()), rsk_insert(&s.reading_word()));
        }
    }

    #[test]
    fn contraction_worked_example() {
        let r = rpp(&[&[1, 1, 1], &[1, 1, 2], &[2, 2, 3], &[3, 3]]);
        let expect = rpp(&[&[1, 1, 1], &[1, 2, 2], &[2, 3, 3], &[3]]);
        assert_eq!(contract(&r).unwrap(), expect);
    }

    #[test]
    fn contraction_small_cases() {
        assert_eq!(contract(&rpp(&[&[1], &[1]])).unwrap(), rpp(&[&[1]]));
        assert_eq!(
            contract(&rpp(&[&[1, 1], &[1, 2]])).unwrap(),
            rpp(&[&[1, 1], &[2]])
        );
        assert!(contract(&rpp(&[&[1, 2], &[2, 3]])).is_err());
    }

    #[test]
    fn contraction_preserves_knuth_class() {
        for shape in crate::partition::partitions_up_to(5) {
            for r in crate::rpp::enumerate_rpp_bounded(&shape, 4) {
                if r.repeat_row() == 0 {
                    continue;
                }
                let c = contract(&r).unwrap();
                assert_eq!(rsk_insert(&c.reading_word()), rsk_insert(&r.reading_word()));
            }
        }
    }

    #[test]
    fn slide_in_examples() {
        // right-hand pair of the worked involution example
        let r = rpp(&[&[1, 1, 3, 4], &[1, 2, 3], &[1, 3], &[2]]);
        let expect = rpp(&[&[1, 1, 3, 4], &[1, 2, 3], &[1, 2], &[2, 3]]);
        assert_eq!(slide_in(&r, (4, 2), 2).unwrap(), expect);
        assert_eq!(
            slide_in(&rpp(&[&[1]]), (2, 1), 1).unwrap(),
            rpp(&[&[1], &[1]])
        );
        assert_eq!(
            slide_in(&rpp(&[&[1, 2]]), (2, 1), 1).unwrap(),
            rpp(&[&[1, 2], &[1]])
        );
        assert!(slide_in(&rpp(&[&[1]]), (3, 1), 1).is_err());
        assert!(slide_in(&rpp(&[&[1], &[1]]), (3, 1), 3).is_err());
    }

    #[test]
    fn slide_in_inverts_contract() {
        for shape in crate::partition::partitions_up_to(6) {
            for r in crate::rpp::enumerate_rpp_bounded(&shape, 4) {
                let i = r.repeat_row();
                if i == 0 {
                    continue;
                }
                let (c, corner) = contract_traced(&r).unwrap();
                assert_eq!(slide_in(&c, corner, i).unwrap(), r);
            }
        }
    }

    fn example_pair_left() -> TableauPair {
        TableauPair::new(
            example_svt(),
            rpp(&[&[1, 1, 3, 4], &[1, 2, 3], &[1, 3], &[2]]),
        )
        .unwrap()
    }

    fn example_pair_right() -> TableauPair {
        TableauPair::new(
            example_svt_dilated(),
            rpp(&[&[1, 1, 3, 4], &[1, 2, 3], &[1, 2], &[2, 3]]),
        )
        .unwrap()
    }

    #[test]
    fn involution_worked_example_exchanges_pairs() {
        let left = example_pair_left();
        let right = example_pair_right();
        assert_eq!(involute(&left), right);
        assert_eq!(involute(&right), left);
        assert_eq!(left.svt().excess(), right.svt().excess() + 1);

        let target_s = rsk_insert(&left.svt().reading_word());
        assert_eq!(
            target_s.rows(),
            &[
                vec![1, 1, 2, 5],
                vec![2, 3, 8],
                vec![3, 4],
                vec![4, 6],
                vec![5, 7],
                vec![6],
                vec![7]
            ]
        );
        assert_eq!(rsk_insert(&right.svt().reading_word()), target_s);

        let target_r = rsk_insert(&left.rpp().reading_word());
        assert_eq!(target_r.rows(), &[vec![1, 1, 3, 4], vec![2, 2], vec![3]]);
        assert_eq!(rsk_insert(&right.rpp().reading_word()), target_r);
    }

    #[test]
    fn ejected_letter_examples() {
        // right pair: x = 5 < y = 6, so it contracts; left pair: x = y = 6
        assert_eq!(example_pair_right().ejected_letter().unwrap(), 6);
        assert_eq!(example_pair_left().ejected_letter().unwrap(), 6);
        let p = TableauPair::new(svt(&[&[&[1]], &[&[2]]]), rpp(&[&[1], &[1]])).unwrap();
        assert_eq!(p.ejected_letter().unwrap(), 2);
        let strict = TableauPair::new(svt(&[&[&[1, 2]]]), rpp(&[&[1]])).unwrap();
        assert!(strict.ejected_letter().is_err());
    }

    #[test]
    fn involution_small_cases() {
        let t = crate::tableau::Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        let fixed = TableauPair::new(
            SetValuedTableau::from_tableau(&t),
            ReversePlanePartition::from_tableau(&t),
        )
        .unwrap();
        assert_eq!(involute(&fixed), fixed);

        let p = TableauPair::new(svt(&[&[&[1, 2]]]), rpp(&[&[1]])).unwrap();
        let q = TableauPair::new(svt(&[&[&[1]], &[&[2]]]), rpp(&[&[1], &[1]])).unwrap();
        assert_eq!(involute(&p), q);
        assert_eq!(involute(&q), p);
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(TableauPair::new(svt(&[&[&[1]]]), rpp(&[&[1], &[1]])).is_err());
    }

    #[test]
    fn involution_sweep_small() {
        // exhaustive at reduced scale; the acceptance suite runs the full sweep
        for n in 0..=4 {
            for s in enumerate_svt_by_content(n, 3) {
                let shape = s.shape();
                for r in crate::rpp::enumerate_rpp_bounded(&shape, 3) {
                    let p = TableauPair::new(s.clone(), r).unwrap();
                    let q = involute(&p);
                    assert_eq!(involute(&q), p, "involution must square to the identity");
                    if p.is_fixed() {
                        assert_eq!(q, p);
                    } else {
                        let d = p.svt().excess().abs_diff(q.svt().excess());
                        assert_eq!(d, 1, "excess must change by exactly one");
                        assert_eq!(
                            rsk_insert(&p.svt().reading_word()),
                            rsk_insert(&q.svt().reading_word())
                        );
                        assert_eq!(
                            rsk_insert(&p.rpp().reading_word()),
                            rsk_insert(&q.rpp().reading_word())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn class_signed_sums_cancel_off_row_shapes() {
        // consequence of the involution, checked by direct summation
        use std::collections::BTreeMap;
        let mut sums: BTreeMap<crate::tableau::Tableau, i64> = BTreeMap::new();
        for s in enumerate_svt_by_content(4, 3) {
            let t = rsk_insert(&s.reading_word());
            *sums.entry(t).or_insert(0) += crate::symfun::sign(s.excess());
        }
        for (t, sum) in sums {
            let expect = if t.shape().rows() <= 1 { 1 } else { 0 };
            assert_eq!(sum, expect, "class of {t:?}");
        }
    }

    #[test]
    fn dilate_requires_multicell_evaluation() {
        let s = svt(&[&[&[1], &[1, 2]]]);
        assert_eq!(s.evaluation(), Evaluation::new(vec![2, 1]));
    }
}
