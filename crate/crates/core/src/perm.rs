//! Permutations in one-line notation and their reduced words.
//!
//! A word `(i_1, ..., i_n)` builds a permutation by applying the
//! adjacent transpositions left to right: starting from the identity,
//! each letter `i` swaps the values `i` and `i + 1`.  The word is
//! reduced when the final permutation has exactly `n` inversions.

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotPermutation(format!("{one_line:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions; the length of any reduced word.
    pub fn length(&self) -> usize {
        let n = self.one_line.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.one_line[i] > self.one_line[j])
            .count()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.one_line.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Swaps the values `i` and `i + 1` in the one-line word.
    fn swap_values(&self, i: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        for v in &mut one_line {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { one_line }
    }

    fn position_of(&self, v: usize) -> usize {
        self.one_line
            .iter()
            .position(|&x| x == v)
            .expect("value present")
            + 1
    }

    /// Builds the permutation of `1..=n` given by a word of adjacent
    /// transpositions applied left to right.
    pub fn from_word(w: &Word, n: usize) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &i in w.letters() {
            if i + 1 > n {
                return Err(Error::Precondition(format!(
                    "letter {i} out of range for degree {n}"
                )));
            }
            p = p.swap_values(i);
        }
        Ok(p)
    }

    /// True when the word builds this permutation without cancellation.
    pub fn is_reduced_word(w: &Word, n: usize) -> Result<bool> {
        let p = Permutation::from_word(w, n)?;
        Ok(p.length() == w.len())
    }

    /// Every reduced word, in lexicographic order of the recursion
    /// (peeling valid final letters in increasing order).
    pub fn reduced_words(&self) -> Vec<Word> {
        if self.is_identity() {
            return vec![Word::empty()];
        }
        let mut out = Vec::new();
        for i in 1..self.one_line.len() {
            // letter i can end a reduced word when the final swap
            // created an inversion, i.e. i + 1 sits before i
            if self.position_of(i) > self.position_of(i + 1) {
                for mut w in self.swap_values(i).reduced_words() {
                    let mut letters: Vec<usize> = std::mem::take(&mut w).into();
                    letters.push(i);
                    out.push(Word::new(letters).expect("positive letters"));
                }
            }
        }
        out
    }

    /// All permutations of `1..=n`, in lexicographic order of their
    /// one-line words.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation {
                    one_line: cur.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    #[test]
    fn build_and_length() {
        let p = Permutation::from_word(&word(&[2, 1]), 3).unwrap();
        assert_eq!(p.one_line(), &[2, 3, 1]);
        assert_eq!(p.length(), 2);
        let q = Permutation::from_word(&word(&[1, 2]), 3).unwrap();
        assert_eq!(q.one_line(), &[3, 1, 2]);
        assert_eq!(p.inverse(), q);
    }

    #[test]
    fn reduced_words_longest_element() {
        let w0 = Permutation::new(vec![3, 2, 1]).unwrap();
        let words = w0.reduced_words();
        assert_eq!(words, vec![word(&[1, 2, 1]), word(&[2, 1, 2])]);
        assert_eq!(
            Permutation::new(vec![4, 3, 2, 1])
                .unwrap()
                .reduced_words()
                .len(),
            16
        );
    }

    #[test]
    fn reduced_words_are_reduced() {
        for p in Permutation::all(4) {
            let words = p.reduced_words();
            assert!(!words.is_empty());
            for w in &words {
                assert_eq!(w.len(), p.length());
                assert!(Permutation::is_reduced_word(w, 4).unwrap());
                assert_eq!(Permutation::from_word(w, 4).unwrap(), p);
            }
        }
    }

    #[test]
    fn reversal_inverts() {
        // the reverse of a reduced word for p is reduced for p^{-1}
        for p in Permutation::all(4) {
            for w in p.reduced_words() {
                let rev: Vec<usize> = w.letters().iter().rev().copied().collect();
                assert_eq!(Permutation::from_word(&word(&rev), 4).unwrap(), p.inverse());
            }
        }
    }

    #[test]
    fn identity_and_errors() {
        assert_eq!(
            Permutation::identity(3).reduced_words(),
            vec![Word::empty()]
        );
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::from_word(&word(&[3]), 3).is_err());
        assert!(!Permutation::is_reduced_word(&word(&[1, 1]), 3).unwrap());
    }
}
