//! Charge on words of partition content, the refined charge used at
//! the Macdonald `q = 1` specialization, and the Yamanouchi predicate.

use crate::error::{Error, Result};
use crate::word::Word;

/// A strictly increasing, nonempty set of letters for the Yamanouchi
/// condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterSet {
    letters: Vec<usize>,
}

impl LetterSet {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty letter set".into()));
        }
        if letters.contains(&0) || letters.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidWord(format!(
                "letter set not strictly increasing: {letters:?}"
            )));
        }
        Ok(LetterSet { letters })
    }

    /// The consecutive range `lo..=hi`.
    pub fn range(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || hi < lo {
            return Err(Error::InvalidWord(format!("bad letter range {lo}..={hi}")));
        }
        LetterSet::new((lo..=hi).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }
}

/// Charge of a permutation word: with `c_1 = 0`, each subsequent index
/// adds one when `i` appears to the right of `i - 1`; the charge is
/// the sum of the `c_i`.
pub fn charge_perm(w: &Word) -> Result<usize> {
    if !w.is_permutation() {
        return Err(Error::NotPermutation(format!("{w}")));
    }
    let n = w.len();
    let mut pos = vec![0usize; n + 1];
    for (i, &l) in w.letters().iter().enumerate() {
        pos[l] = i;
    }
    let mut total = 0;
    let mut c = 0;
    for i in 2..=n {
        if pos[i] > pos[i - 1] {
            c += 1;
        }
        total += c;
    }
    Ok(total)
}

/// Decomposition of a word with partition content into permutation
/// subwords by the cyclic right-to-left marking procedure: starting at
/// the right end, mark the first 1, keep travelling left (wrapping
/// around) marking the first 2, 3, ... up to the largest remaining
/// letter; the marked letters form one subword, which is removed, and
/// the process repeats.
pub fn charge_subwords(w: &Word) -> Result<Vec<Word>> {
    let content = w.content();
    if !content.is_partition() {
        return Err(Error::ContentNotPartition(format!("{w}")));
    }
    let letters = w.letters();
    let n = letters.len();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut subwords = Vec::new();
    while alive_count > 0 {
        let max_letter = letters
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(&l, _)| l)
            .max()
            .expect("nonempty");
        let mut marked = vec![false; n];
        let mut target = 1;
        let mut cursor = n; // scan starts just past the right end
        while target <= max_letter {
            loop {
                cursor = if cursor == 0 { n - 1 } else { cursor - 1 };
                if alive[cursor] && !marked[cursor] && letters[cursor] == target {
                    marked[cursor] = true;
                    break;
                }
            }
            target += 1;
        }
        let sub: Vec<usize> = (0..n).filter(|&i| marked[i]).map(|i| letters[i]).collect();
        for i in 0..n {
            if marked[i] {
                alive[i] = false;
                alive_count -= 1;
            }
        }
        subwords.push(Word::new(sub).expect("letters positive"));
    }
    Ok(subwords)
}

/// Charge of a word with partition content: the sum of the charges of
/// its charge subwords.  Constant on Knuth classes.
pub fn charge(w: &Word) -> Result<usize> {
    charge_subwords(w)?.iter().map(charge_perm).sum()
}

/// Refined charge: split `1..=n` into consecutive segments of sizes
/// given by the conjugate of `mu`, restrict `w` to each segment
/// (shifting the letters down), and sum the charges.
pub fn refined_charge(w: &Word, mu: &crate::partition::Partition) -> Result<usize> {
    let n = w.len();
    if !w.is_permutation() {
        return Err(Error::NotPermutation(format!("{w}")));
    }
    if mu.size() != n {
        return Err(Error::Precondition(format!(
            "word length {n} does not match |mu| = {}",
            mu.size()
        )));
    }
    let conj = mu.conjugate();
    let mut total = 0;
    let mut offset = 0;
    for &seg in conj.parts() {
        let restricted: Vec<usize> = w
            .letters()
            .iter()
            .filter(|&&l| l > offset && l <= offset + seg)
            .map(|&l| l - offset)
            .collect();
        total += charge_perm(&Word::new(restricted).expect("letters positive"))?;
        offset += seg;
    }
    Ok(total)
}

/// True when every suffix of `w` contains at least as many `a_r` as
/// `a_{r+1}` for each consecutive pair of the letter set.
pub fn is_yamanouchi(w: &Word, ls: &LetterSet) -> bool {
    let letters = ls.letters();
    let mut counts = vec![0usize; letters.len()];
    for &l in w.letters().iter().rev() {
        if let Some(j) = letters.iter().position(|&a| a == l) {
            counts[j] += 1;
            if j > 0 && counts[j] > counts[j - 1] {
                return false;
            }
        }
    }
    true
}
