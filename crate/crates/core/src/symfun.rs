//! Basis-tagged symmetric functions over `Z[t]`, the transition
//! matrices through elegant fillings, the monomial-expansion oracle,
//! the Hall inner product, and Schur multiplication.
//!
//! A `SymFunc` is a finite map from partitions to polynomial
//! coefficients, tagged with one of the bases `m`, `h`, `s`, `G`, `g`.
//! Grothendieck-basis results are truncated: the `cutoff` asserts that
//! every coefficient of `G_lambda` with `|lambda| <= cutoff` is exact.
//! All comparisons with other bases are then valid up to that degree
//! because `G_lambda` starts in degree `|lambda|`.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::elegant::enumerate_elegant;
use crate::error::{Error, Result};
use crate::partition::{
    contained_partitions, partitions_of, partitions_up_to, Evaluation, Partition,
};
use crate::rpp::enumerate_rpp;
use crate::statistics::{is_yamanouchi, LetterSet};
use crate::svt::enumerate_svt;
use crate::tableau::{enumerate_skew_ssyt, kostka, skew_reading_word};
use crate::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "h")]
    Homogeneous,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "G")]
    Grothendieck,
    #[serde(rename = "g")]
    DualGrothendieck,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Homogeneous => "h",
            Basis::Schur => "s",
            Basis::Grothendieck => "G",
            Basis::DualGrothendieck => "g",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, IntPoly>,
    cutoff: Option<usize>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
            cutoff: None,
        }
    }

    pub fn zero_truncated(basis: Basis, cutoff: usize) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
            cutoff: Some(cutoff),
        }
    }

    /// A single basis element with coefficient 1.
    pub fn generator(basis: Basis, lam: Partition) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(lam, IntPoly::one());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cutoff(&self) -> Option<usize> {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &IntPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lam: &Partition) -> IntPoly {
        self.terms.get(lam).cloned().unwrap_or_else(IntPoly::zero)
    }

    /// Adds `poly` to the coefficient of `lam`, dropping the term if
    /// the sum vanishes.  Terms beyond a present cutoff are rejected by
    /// debug assertion in internal builders and by the public
    /// constructors.
    pub fn add_term(&mut self, lam: Partition, poly: IntPoly) {
        use std::collections::btree_map::Entry;
        if poly.is_zero() {
            return;
        }
        debug_assert!(self.cutoff.is_none_or(|d| lam.size() <= d));
        match self.terms.entry(lam) {
            Entry::Occupied(mut e) => {
                let sum = e.get() + &poly;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(poly);
            }
        }
    }

    pub fn from_terms(
        basis: Basis,
        terms: Vec<(Partition, IntPoly)>,
        cutoff: Option<usize>,
    ) -> Result<Self> {
        if let Some(d) = cutoff {
            for (lam, _) in &terms {
                if lam.size() > d {
                    return Err(Error::CutoffTooSmall {
                        cutoff: d,
                        reason: format!("term {lam} exceeds the cutoff"),
                    });
                }
            }
        }
        let mut f = SymFunc {
            basis,
            terms: BTreeMap::new(),
            cutoff,
        };
        for (lam, poly) in terms {
            f.add_term(lam, poly);
        }
        Ok(f)
    }

    /// Largest term size.
    pub fn max_term_size(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Substitutes `t = 1` in every coefficient.
    pub fn at_t_one(&self) -> SymFunc {
        let terms = self
            .terms
            .iter()
            .map(|(lam, p)| (lam.clone(), IntPoly::constant(p.eval_at_one())))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        SymFunc {
            basis: self.basis,
            terms,
            cutoff: self.cutoff,
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::IncompatibleTruncation(format!(
                "cannot add {} to {}",
                self.basis.tag(),
                other.basis.tag()
            )));
        }
        let cutoff = match (self.cutoff, other.cutoff) {
            (None, None) => None,
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => {
                if other.max_term_size() > a {
                    return Err(Error::IncompatibleTruncation(
                        "exact summand exceeds the truncated summand's cutoff".into(),
                    ));
                }
                Some(a)
            }
            (None, Some(b)) => {
                if self.max_term_size() > b {
                    return Err(Error::IncompatibleTruncation(
                        "exact summand exceeds the truncated summand's cutoff".into(),
                    ));
                }
                Some(b)
            }
        };
        let mut out = SymFunc {
            basis: self.basis,
            terms: self.terms.clone(),
            cutoff,
        };
        if let Some(d) = cutoff {
            out.terms.retain(|lam, _| lam.size() <= d);
        }
        for (lam, p) in &other.terms {
            if cutoff.is_none_or(|d| lam.size() <= d) {
                out.add_term(lam.clone(), p.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &IntPoly) -> SymFunc {
        let terms = self
            .terms
            .iter()
            .map(|(lam, p)| (lam.clone(), p * c))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        SymFunc {
            basis: self.basis,
            terms,
            cutoff: self.cutoff,
        }
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            poly: &'a IntPoly,
        }
        let n = if self.cutoff.is_some() { 3 } else { 2 };
        let mut st = s.serialize_struct("SymFunc", n)?;
        st.serialize_field("basis", self.basis.tag())?;
        if let Some(d) = self.cutoff {
            st.serialize_field("cutoff", &d)?;
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(partition, poly)| Term { partition, poly })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Number of elegant fillings of `outer / inner`; the coefficient
/// family `f` in the basis transitions.
pub fn elegant_count(outer: &Partition, inner: &Partition) -> i64 {
    enumerate_elegant(outer, inner, false).len() as i64
}

/// Number of strict elegant fillings of `outer / inner`; the
/// coefficient family `F` in the basis transitions.
pub fn strict_elegant_count(outer: &Partition, inner: &Partition) -> i64 {
    enumerate_elegant(outer, inner, true).len() as i64
}

/// Kostka number as an integer coefficient.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> i64 {
    kostka(lam, &Evaluation::from(mu))
}

/// The alternating sign `(-1)^k`.
pub(crate) fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl SymFunc {
    /// `g`-basis to Schur basis: each `g_lambda` expands over the
    /// partitions contained in `lambda` with elegant-filling counts.
    /// Exact.
    pub fn dual_to_schur(&self) -> Result<SymFunc> {
        if self.basis != Basis::DualGrothendieck {
            return Err(Error::Precondition(format!(
                "expected basis g, found {}",
                self.basis.tag()
            )));
        }
        let mut out = SymFunc {
            basis: Basis::Schur,
            terms: BTreeMap::new(),
            cutoff: self.cutoff,
        };
        for (lam, c) in &self.terms {
            for mu in contained_partitions(lam) {
                let count = elegant_count(lam, &mu);
                if count != 0 {
                    out.add_term(mu, c.scale(count));
                }
            }
        }
        Ok(out)
    }

    /// Schur basis to `g`-basis: each `s_mu` expands over the
    /// partitions contained in `mu` with signed strict counts.  Exact
    /// and inverse to [`SymFunc::dual_to_schur`].
    pub fn schur_to_dual(&self) -> Result<SymFunc> {
        if self.basis != Basis::Schur {
            return Err(Error::Precondition(format!(
                "expected basis s, found {}",
                self.basis.tag()
            )));
        }
        let mut out = SymFunc {
            basis: Basis::DualGrothendieck,
            terms: BTreeMap::new(),
            cutoff: self.cutoff,
        };
        for (mu, c) in &self.terms {
            for lam in contained_partitions(mu) {
                let count = strict_elegant_count(mu, &lam);
                if count != 0 {
                    let coeff = c.scale(sign(lam.size() + mu.size()) * count);
                    out.add_term(lam, coeff);
                }
            }
        }
        Ok(out)
    }

    /// Schur basis to Grothendieck basis, truncated: each `s_mu`
    /// expands over the partitions containing `mu` of size at most the
    /// cutoff.
    pub fn schur_to_grothendieck(&self, cutoff: usize) -> Result<SymFunc> {
        if self.basis != Basis::Schur {
            return Err(Error::Precondition(format!(
                "expected basis s, found {}",
                self.basis.tag()
            )));
        }
        if self.max_term_size() > cutoff {
            return Err(Error::CutoffTooSmall {
                cutoff,
                reason: "input term exceeds the requested cutoff".into(),
            });
        }
        let mut out = SymFunc {
            basis: Basis::Grothendieck,
            terms: BTreeMap::new(),
            cutoff: Some(cutoff),
        };
        for (mu, c) in &self.terms {
            for size in mu.size()..=cutoff {
                for lam in partitions_of(size) {
                    if !lam.contains(mu) {
                        continue;
                    }
                    let count = elegant_count(&lam, mu);
                    if count != 0 {
                        out.add_term(lam, c.scale(count));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Grothendieck basis to Schur basis, truncated at `cutoff`, which
    /// may not exceed the input's own cutoff.
    pub fn grothendieck_to_schur(&self, cutoff: usize) -> Result<SymFunc> {
        if self.basis != Basis::Grothendieck {
            return Err(Error::Precondition(format!(
                "expected basis G, found {}",
                self.basis.tag()
            )));
        }
        let own = self.cutoff.ok_or_else(|| {
            Error::IncompatibleTruncation("Grothendieck input lacks a cutoff".into())
        })?;
        if cutoff > own {
            return Err(Error::CutoffTooSmall {
                cutoff: own,
                reason: format!("requested degree {cutoff} exceeds the input cutoff"),
            });
        }
        let mut out = SymFunc {
            basis: Basis::Schur,
            terms: BTreeMap::new(),
            cutoff: Some(cutoff),
        };
        for (lam, c) in &self.terms {
            if lam.size() > cutoff {
                continue;
            }
            for size in lam.size()..=cutoff {
                for mu in partitions_of(size) {
                    if !mu.contains(lam) {
                        continue;
                    }
                    let count = strict_elegant_count(&mu, lam);
                    if count != 0 {
                        let coeff = c.scale(sign(lam.size() + mu.size()) * count);
                        out.add_term(mu, coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact Schur expansion together with the truncation degree, when
    /// one applies.  Monomial input is inverted through the Kostka
    /// matrix; homogeneous input expands through it.
    fn to_schur_terms(&self) -> Result<(BTreeMap<Partition, IntPoly>, Option<usize>)> {
        match self.basis {
            Basis::Schur => Ok((self.terms.clone(), self.cutoff)),
            Basis::DualGrothendieck => {
                let f = self.dual_to_schur()?;
                Ok((f.terms, f.cutoff))
            }
            Basis::Grothendieck => {
                let own = self.cutoff.ok_or_else(|| {
                    Error::IncompatibleTruncation("Grothendieck input lacks a cutoff".into())
                })?;
                let f = self.grothendieck_to_schur(own)?;
                Ok((f.terms, f.cutoff))
            }
            Basis::Homogeneous => {
                let mut terms: BTreeMap<Partition, IntPoly> = BTreeMap::new();
                for (mu, c) in &self.terms {
                    for lam in partitions_of(mu.size()) {
                        let k = kostka_number(&lam, mu);
                        if k != 0 {
                            let entry = terms.entry(lam).or_insert_with(IntPoly::zero);
                            *entry += &c.scale(k);
                        }
                    }
                }
                terms.retain(|_, p| !p.is_zero());
                Ok((terms, self.cutoff))
            }
            Basis::Monomial => {
                let mut terms: BTreeMap<Partition, IntPoly> = BTreeMap::new();
                for (mu, c) in &self.terms {
                    for (lam, k) in monomial_in_schur(mu) {
                        let entry = terms.entry(lam).or_insert_with(IntPoly::zero);
                        *entry += &c.scale(k);
                    }
                }
                terms.retain(|_, p| !p.is_zero());
                Ok((terms, self.cutoff))
            }
        }
    }
}

/// Expansion of a single monomial symmetric function in the Schur
/// basis, by back-substitution through the unitriangular Kostka matrix
/// (partitions of equal size ordered lexicographically).
fn monomial_in_schur(mu: &Partition) -> BTreeMap<Partition, i64> {
    let n = mu.size();
    let parts = partitions_of(n); // lexicographically descending
    let mut expansions: BTreeMap<Partition, BTreeMap<Partition, i64>> = BTreeMap::new();
    // K_{p,q} vanishes unless p dominates q, hence unless q <= p in lex;
    // processing lex-ascending makes the system triangular
    for p in parts.iter().rev() {
        let mut exp: BTreeMap<Partition, i64> = BTreeMap::new();
        exp.insert(p.clone(), 1);
        for (q, other) in &expansions {
            if q.parts() >= p.parts() {
                continue;
            }
            let k = kostka_number(p, q);
            if k == 0 {
                continue;
            }
            for (lam, c) in other {
                *exp.entry(lam.clone()).or_insert(0) -= k * c;
            }
        }
        exp.retain(|_, c| *c != 0);
        expansions.insert(p.clone(), exp);
    }
    expansions.remove(mu).unwrap_or_default()
}

/// Monomial coefficients of `f`: for each partition `lam` with at most
/// `num_vars` parts and `|lam| <= max_deg`, the coefficient of the
/// monomial `x^lam`.  Computed directly from the defining weight
/// generating functions by enumerating fillings, so this serves as the
/// universal equality oracle across bases.
pub fn to_monomials(
    f: &SymFunc,
    num_vars: usize,
    max_deg: usize,
) -> Result<BTreeMap<Partition, IntPoly>> {
    if num_vars == 0 {
        return Err(Error::Precondition("at least one variable".into()));
    }
    if f.basis == Basis::Grothendieck {
        let own = f.cutoff.ok_or_else(|| {
            Error::IncompatibleTruncation("Grothendieck input lacks a cutoff".into())
        })?;
        if own < max_deg {
            return Err(Error::CutoffTooSmall {
                cutoff: own,
                reason: format!("monomial expansion to degree {max_deg} needs that cutoff"),
            });
        }
    }
    let mut out: BTreeMap<Partition, IntPoly> = BTreeMap::new();
    let mut add = |alpha: Partition, p: IntPoly| {
        if p.is_zero() {
            return;
        }
        let entry = out.entry(alpha).or_insert_with(IntPoly::zero);
        *entry += &p;
        // zero entries are cleaned at the end
    };
    let targets: Vec<Partition> = partitions_up_to(max_deg)
        .into_iter()
        .filter(|a| a.rows() <= num_vars)
        .collect();
    for (lam, c) in &f.terms {
        match f.basis {
            Basis::Monomial => {
                if lam.rows() <= num_vars && lam.size() <= max_deg {
                    add(lam.clone(), c.clone());
                }
            }
            Basis::Homogeneous => {
                if lam.size() > max_deg {
                    continue;
                }
                for alpha in targets.iter().filter(|a| a.size() == lam.size()) {
                    // coefficient of x^alpha in h_lam: matrices with row
                    // sums lam and column sums alpha, via the Kostka route
                    let mut total = 0;
                    for nu in partitions_of(lam.size()) {
                        total += kostka_number(&nu, lam) * kostka(&nu, &Evaluation::from(alpha));
                    }
                    add(alpha.clone(), c.scale(total));
                }
            }
            Basis::Schur => {
                if lam.size() > max_deg {
                    continue;
                }
                for alpha in targets.iter().filter(|a| a.size() == lam.size()) {
                    let k = kostka(lam, &Evaluation::from(alpha));
                    if k != 0 {
                        add(alpha.clone(), c.scale(k));
                    }
                }
            }
            Basis::DualGrothendieck => {
                for alpha in targets.iter().filter(|a| a.size() <= lam.size()) {
                    let k = enumerate_rpp(lam, &Evaluation::from(alpha)).len() as i64;
                    if k != 0 {
                        add(alpha.clone(), c.scale(k));
                    }
                }
            }
            Basis::Grothendieck => {
                for alpha in targets.iter().filter(|a| a.size() >= lam.size()) {
                    let k = enumerate_svt(lam, &Evaluation::from(alpha)).len() as i64;
                    if k != 0 {
                        add(alpha.clone(), c.scale(sign(alpha.size() - lam.size()) * k));
                    }
                }
            }
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// Hall inner product: both arguments are taken to the Schur basis and
/// paired coefficientwise.  Exact inputs pair freely; truncated inputs
/// pair when nothing exceeds the common cutoff.
pub fn hall_inner(a: &SymFunc, b: &SymFunc) -> Result<IntPoly> {
    let (ta, ca) = a.to_schur_terms()?;
    let (tb, cb) = b.to_schur_terms()?;
    let max_a = ta.keys().map(Partition::size).max().unwrap_or(0);
    let max_b = tb.keys().map(Partition::size).max().unwrap_or(0);
    match (ca, cb) {
        (Some(x), Some(y)) if x != y => {
            return Err(Error::IncompatibleTruncation(format!(
                "cutoffs {x} and {y} differ"
            )));
        }
        (Some(x), None) if max_b > x => {
            return Err(Error::IncompatibleTruncation(format!(
                "exact side reaches degree {max_b} beyond cutoff {x}"
            )));
        }
        (None, Some(y)) if max_a > y => {
            return Err(Error::IncompatibleTruncation(format!(
                "exact side reaches degree {max_a} beyond cutoff {y}"
            )));
        }
        _ => {}
    }
    let mut total = IntPoly::zero();
    for (lam, pa) in &ta {
        if let Some(pb) = tb.get(lam) {
            total += &(pa * pb);
        }
    }
    Ok(total)
}

/// Littlewood-Richardson coefficient by enumerating skew semistandard
/// fillings of `lam / mu` with evaluation `nu` whose reading word is
/// Yamanouchi in the letters of `nu`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lam: &Partition) -> i64 {
    if lam.size() != mu.size() + nu.size() || !lam.contains(mu) {
        return 0;
    }
    if nu.is_empty() {
        return i64::from(lam == mu);
    }
    let ls = LetterSet::range(1, nu.rows()).expect("nonempty nu");
    enumerate_skew_ssyt(lam, mu, &Evaluation::from(nu))
        .iter()
        .filter(|rows| is_yamanouchi(&skew_reading_word(rows), &ls))
        .count() as i64
}

/// The product of two Schur functions in the Schur basis.
pub fn schur_multiply(mu: &Partition, nu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for lam in partitions_of(mu.size() + nu.size()) {
        let c = lr_coefficient(mu, nu, &lam);
        if c != 0 {
            out.add_term(lam, IntPoly::constant(c));
        }
    }
    out
}
