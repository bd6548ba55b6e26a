//! Weighted tableau families and their Schur, dual-Grothendieck and
//! Grothendieck expansions.
//!
//! A model is a finite set of semistandard tableaux of equal size with
//! weights in `Z[t]`; it defines the symmetric function given by the
//! weighted sum of the Schur functions of the shapes.  The same
//! function expands over set-valued tableaux (with signs, in the `g`
//! basis) and over reverse plane partitions (in the `G` basis, up to a
//! degree cutoff): an object belongs to the expansion when its reading
//! word inserts to a member tableau, and it inherits that tableau's
//! weight.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, partitions_of_bounded, Evaluation, Partition};
use crate::perm::Permutation;
use crate::rpp::enumerate_rpp;
use crate::statistics::{charge, is_yamanouchi, refined_charge, LetterSet};
use crate::svt::enumerate_svt;
use crate::symfun::{to_monomials, Basis, SymFunc};
use crate::tableau::{enumerate_ssyt, is_tableau_word, rsk_insert, Tableau};
use crate::word::Word;
use crate::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauModel {
    tableaux: BTreeMap<Tableau, IntPoly>,
    alphabet_bound: usize,
    content_size: usize,
}

#[derive(Serialize, Deserialize)]
struct RawModel {
    alphabet_bound: usize,
    content_size: usize,
    tableaux: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    rows: Vec<Vec<usize>>,
    weight: Vec<i64>,
}

impl TableauModel {
    pub fn new(tableaux: BTreeMap<Tableau, IntPoly>, alphabet_bound: usize) -> Result<Self> {
        let mut content_size = None;
        for (t, w) in &tableaux {
            if t.max_letter() > alphabet_bound {
                return Err(Error::ModelSchema(format!(
                    "letter {} exceeds the alphabet bound {alphabet_bound}",
                    t.max_letter()
                )));
            }
            if w.is_zero() {
                return Err(Error::ModelSchema("zero weight".into()));
            }
            match content_size {
                None => content_size = Some(t.size()),
                Some(n) if n != t.size() => {
                    return Err(Error::ModelSchema(format!(
                        "tableau sizes {n} and {} are inconsistent",
                        t.size()
                    )));
                }
                _ => {}
            }
        }
        Ok(TableauModel {
            tableaux,
            alphabet_bound,
            content_size: content_size.unwrap_or(0),
        })
    }

    /// All semistandard tableaux of the given evaluation, weighted by
    /// `t^charge`.  The Hall-Littlewood family.
    pub fn hall_littlewood(mu: &Partition) -> Result<Self> {
        let ev = Evaluation::from(mu);
        let mut tableaux = BTreeMap::new();
        for lam in partitions_of(mu.size()) {
            for t in enumerate_ssyt(&lam, &ev) {
                let c = charge(&t.reading_word())?;
                tableaux.insert(t, IntPoly::monomial(c));
            }
        }
        TableauModel::new(tableaux, mu.rows().max(1))
    }

    /// Tableaux of concatenated evaluation `(mu, nu)` whose reading
    /// words are Yamanouchi in the letters of `mu` and, separately, in
    /// the shifted letters of `nu`; all weights 1.  The product of the
    /// Schur functions of `mu` and `nu`.
    pub fn lr_product(mu: &Partition, nu: &Partition) -> Result<Self> {
        let ev = Evaluation::concat(mu, nu);
        let letters = mu.rows() + nu.rows();
        let mut tableaux = BTreeMap::new();
        for lam in partitions_of(ev.size()) {
            for t in enumerate_ssyt(&lam, &ev) {
                if lr_word_test(&t.reading_word(), mu, nu) {
                    tableaux.insert(t, IntPoly::one());
                }
            }
        }
        TableauModel::new(tableaux, letters.max(1))
    }

    /// All standard tableaux of size `|mu|`, weighted by `t` to the
    /// refined charge with respect to `mu`.  The Macdonald family at
    /// `q = 1`.
    pub fn macdonald_q1(mu: &Partition) -> Result<Self> {
        let n = mu.size();
        let ev = Evaluation::new(vec![1; n]);
        let mut tableaux = BTreeMap::new();
        for lam in partitions_of(n) {
            for t in enumerate_ssyt(&lam, &ev) {
                let c = refined_charge(&t.reading_word(), mu)?;
                tableaux.insert(t, IntPoly::monomial(c));
            }
        }
        TableauModel::new(tableaux, n.max(1))
    }

    /// Tableaux whose reading word is a reduced word for `sigma`
    /// (under this crate's left-to-right word convention); all weights
    /// one.  The Stanley symmetric function of `sigma`, whose defining
    /// sum runs over the same reduced words with index sequences that
    /// strictly increase across descents.
    pub fn stanley(sigma: &Permutation) -> Result<Self> {
        let mut tableaux = BTreeMap::new();
        for w in sigma.reduced_words() {
            if is_tableau_word(&w) {
                tableaux.insert(rsk_insert(&w), IntPoly::one());
            }
        }
        TableauModel::new(tableaux, sigma.degree().saturating_sub(1).max(1))
    }

    pub fn from_json_str(json: &str) -> Result<Self> {
        let raw: RawModel = serde_json::from_str(json)?;
        let mut tableaux = BTreeMap::new();
        for entry in raw.tableaux {
            let t = Tableau::new(entry.rows).map_err(|e| Error::ModelSchema(e.to_string()))?;
            if t.size() != raw.content_size {
                return Err(Error::ModelSchema(format!(
                    "tableau of size {} in a model of content size {}",
                    t.size(),
                    raw.content_size
                )));
            }
            let weight = IntPoly::from_coeffs(entry.weight);
            if weight.is_zero() {
                return Err(Error::ModelSchema("zero weight".into()));
            }
            if tableaux.insert(t, weight).is_some() {
                return Err(Error::ModelSchema("duplicate tableau".into()));
            }
        }
        TableauModel::new(tableaux, raw.alphabet_bound)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Self> {
        TableauModel::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let raw = RawModel {
            alphabet_bound: self.alphabet_bound,
            content_size: self.content_size,
            tableaux: self
                .tableaux
                .iter()
                .map(|(t, w)| RawEntry {
                    rows: t.rows().to_vec(),
                    weight: w.coeffs().to_vec(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    pub fn tableaux(&self) -> impl Iterator<Item = (&Tableau, &IntPoly)> {
        self.tableaux.iter()
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn weight(&self, t: &Tableau) -> Option<&IntPoly> {
        self.tableaux.get(t)
    }

    pub fn alphabet_bound(&self) -> usize {
        self.alphabet_bound
    }

    pub fn content_size(&self) -> usize {
        self.content_size
    }

    /// The distinct evaluations of the member tableaux.  Every object
    /// in either expansion has one of these contents, because reading
    /// words keep their content under insertion.
    pub fn evaluations(&self) -> BTreeSet<Evaluation> {
        self.tableaux.keys().map(Tableau::evaluation).collect()
    }

    /// The weighted sum of Schur functions over the member shapes.
    pub fn schur_expansion(&self) -> SymFunc {
        let mut f = SymFunc::zero(Basis::Schur);
        for (t, w) in &self.tableaux {
            f.add_term(t.shape(), w.clone());
        }
        f
    }

    /// Signed expansion over set-valued tableaux whose reading words
    /// insert into the model; exact.
    pub fn dual_expansion(&self) -> SymFunc {
        let n = self.content_size;
        let evs = self.evaluations();
        let mut f = SymFunc::zero(Basis::DualGrothendieck);
        for size in 0..=n {
            for lam in partitions_of_bounded(size, self.alphabet_bound, size) {
                let sign = crate::symfun::sign(n - size);
                let mut total = IntPoly::zero();
                for ev in &evs {
                    for s in enumerate_svt(&lam, ev) {
                        if let Some(w) = self.tableaux.get(&rsk_insert(&s.reading_word())) {
                            total += w;
                        }
                    }
                }
                f.add_term(lam, total.scale(sign));
            }
        }
        f
    }

    /// Expansion over reverse plane partitions whose reading words
    /// insert into the model, carried up to shapes of size `cutoff`.
    pub fn grothendieck_expansion(&self, cutoff: usize) -> Result<SymFunc> {
        let n = self.content_size;
        if cutoff < n {
            return Err(Error::CutoffTooSmall {
                cutoff,
                reason: format!("model content size is {n}"),
            });
        }
        let evs = self.evaluations();
        let mut f = SymFunc::zero_truncated(Basis::Grothendieck, cutoff);
        for size in n..=cutoff {
            for lam in partitions_of(size) {
                let mut total = IntPoly::zero();
                for ev in &evs {
                    for r in enumerate_rpp(&lam, ev) {
                        if let Some(w) = self.tableaux.get(&rsk_insert(&r.reading_word())) {
                            total += w;
                        }
                    }
                }
                f.add_term(lam, total);
            }
        }
        Ok(f)
    }

    /// Cross-checks the three expansions through the monomial oracle,
    /// in `num_vars` variables up to degree `max_deg`.
    pub fn verify(&self, num_vars: usize, max_deg: usize, cutoff: usize) -> Result<VerifyReport> {
        if max_deg > cutoff {
            return Err(Error::CutoffTooSmall {
                cutoff,
                reason: format!("verification degree {max_deg} exceeds it"),
            });
        }
        let schur = to_monomials(&self.schur_expansion(), num_vars, max_deg)?;
        let dual = to_monomials(&self.dual_expansion(), num_vars, max_deg)?;
        let dual_via_schur =
            to_monomials(&self.dual_expansion().dual_to_schur()?, num_vars, max_deg)?;
        let groth = to_monomials(&self.grothendieck_expansion(cutoff)?, num_vars, max_deg)?;
        Ok(VerifyReport {
            comparisons: vec![
                Comparison::new("schur vs dual (direct monomials)", &schur, &dual),
                Comparison::new(
                    "schur vs dual (through the transition)",
                    &schur,
                    &dual_via_schur,
                ),
                Comparison::new("schur vs grothendieck", &schur, &groth),
            ],
        })
    }
}

/// Yamanouchi membership test for the product model: fixed content and
/// the suffix condition in both letter blocks.
fn lr_word_test(w: &Word, mu: &Partition, nu: &Partition) -> bool {
    if w.content() != Evaluation::concat(mu, nu) {
        return false;
    }
    if mu.rows() > 0 {
        let ls = LetterSet::range(1, mu.rows()).expect("nonempty");
        if !is_yamanouchi(w, &ls) {
            return false;
        }
    }
    if nu.rows() > 0 {
        let ls = LetterSet::range(mu.rows() + 1, mu.rows() + nu.rows()).expect("nonempty");
        if !is_yamanouchi(w, &ls) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub partition: Partition,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub label: String,
    pub mismatches: Vec<Mismatch>,
}

impl Comparison {
    pub fn new(
        label: &str,
        lhs: &BTreeMap<Partition, IntPoly>,
        rhs: &BTreeMap<Partition, IntPoly>,
    ) -> Self {
        let keys: BTreeSet<&Partition> = lhs.keys().chain(rhs.keys()).collect();
        let mismatches = keys
            .into_iter()
            .filter_map(|k| {
                let a = lhs.get(k).cloned().unwrap_or_else(IntPoly::zero);
                let b = rhs.get(k).cloned().unwrap_or_else(IntPoly::zero);
                (a != b).then(|| Mismatch {
                    partition: k.clone(),
                    lhs: a,
                    rhs: b,
                })
            })
            .collect();
        Comparison {
            label: label.to_string(),
            mismatches,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub comparisons: Vec<Comparison>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.comparisons.iter().all(Comparison::is_ok)
    }
}

/// Hall-Littlewood expansion in the `g` basis without the insertion
/// filter: every set-valued tableau of evaluation `mu` belongs, with
/// weight `t` to the charge of its reading word.
pub fn hall_littlewood_dual(mu: &Partition) -> Result<SymFunc> {
    let ev = Evaluation::from(mu);
    let n = mu.size();
    let mut f = SymFunc::zero(Basis::DualGrothendieck);
    for size in 0..=n {
        for lam in partitions_of_bounded(size, mu.rows().max(1), size) {
            let sign = crate::symfun::sign(n - size);
            let mut total = IntPoly::zero();
            for s in enumerate_svt(&lam, &ev) {
                total += &IntPoly::monomial(charge(&s.reading_word())?);
            }
            f.add_term(lam, total.scale(sign));
        }
    }
    Ok(f)
}

/// Hall-Littlewood expansion in the `G` basis without the insertion
/// filter, over reverse plane partitions of evaluation `mu`.
pub fn hall_littlewood_grothendieck(mu: &Partition, cutoff: usize) -> Result<SymFunc> {
    let n = mu.size();
    if cutoff < n {
        return Err(Error::CutoffTooSmall {
            cutoff,
            reason: format!("evaluation size is {n}"),
        });
    }
    let ev = Evaluation::from(mu);
    let mut f = SymFunc::zero_truncated(Basis::Grothendieck, cutoff);
    for size in n..=cutoff {
        for lam in partitions_of(size) {
            let mut total = IntPoly::zero();
            for r in enumerate_rpp(&lam, &ev) {
                total += &IntPoly::monomial(charge(&r.reading_word())?);
            }
            f.add_term(lam, total);
        }
    }
    Ok(f)
}

/// Product expansion in the `g` basis by the Yamanouchi test instead
/// of the insertion filter.
pub fn lr_product_dual(mu: &Partition, nu: &Partition) -> Result<SymFunc> {
    let ev = Evaluation::concat(mu, nu);
    let n = ev.size();
    let letters = mu.rows() + nu.rows();
    let mut f = SymFunc::zero(Basis::DualGrothendieck);
    for size in 0..=n {
        for lam in partitions_of_bounded(size, letters.max(1), size) {
            let sign = crate::symfun::sign(n - size);
            let count = enumerate_svt(&lam, &ev)
                .iter()
                .filter(|s| lr_word_test(&s.reading_word(), mu, nu))
                .count() as i64;
            f.add_term(lam, IntPoly::constant(sign * count));
        }
    }
    Ok(f)
}

/// Product expansion in the `G` basis by the Yamanouchi test.
pub fn lr_product_grothendieck(mu: &Partition, nu: &Partition, cutoff: usize) -> Result<SymFunc> {
    let ev = Evaluation::concat(mu, nu);
    let n = ev.size();
    if cutoff < n {
        return Err(Error::CutoffTooSmall {
            cutoff,
            reason: format!("evaluation size is {n}"),
        });
    }
    let mut f = SymFunc::zero_truncated(Basis::Grothendieck, cutoff);
    for size in n..=cutoff {
        for lam in partitions_of(size) {
            let count = enumerate_rpp(&lam, &ev)
                .iter()
                .filter(|r| lr_word_test(&r.reading_word(), mu, nu))
                .count() as i64;
            f.add_term(lam, IntPoly::constant(count));
        }
    }
    Ok(f)
}

/// Sum of signs over the set-valued tableaux whose reading word
/// inserts to `t`: 1 when `t` has a single row, 0 otherwise.
pub fn class_signed_sum(t: &Tableau) -> IntPoly {
    let ev = t.evaluation();
    let n = ev.size();
    let mut total = 0i64;
    for size in 0..=n {
        for lam in partitions_of_bounded(size, ev.max_letter().max(1), size) {
            let sign = crate::symfun::sign(n - size);
            for s in enumerate_svt(&lam, &ev) {
                if rsk_insert(&s.reading_word()) == *t {
                    total += sign;
                }
            }
        }
    }
    IntPoly::constant(total)
}

/// Sum of all coefficients of the Hall-Littlewood expansion in the `g`
/// basis; equals `t` to the statistic `n(mu)`.
pub fn hall_littlewood_coefficient_sum(mu: &Partition) -> Result<IntPoly> {
    let f = hall_littlewood_dual(mu)?;
    let mut total = IntPoly::zero();
    for (_, c) in f.terms() {
        total += c;
    }
    Ok(total)
}
