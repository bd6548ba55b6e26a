//! Words: finite sequences of positive integers.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Evaluation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord(format!("zero letter in {letters:?}")));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter-multiplicity vector of the word.
    pub fn content(&self) -> Evaluation {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &l in &self.letters {
            counts[l - 1] += 1;
        }
        Evaluation::new(counts)
    }

    /// True when the word is a rearrangement of 1..=n.
    pub fn is_permutation(&self) -> bool {
        let n = self.letters.len();
        let mut seen = vec![false; n];
        for &l in &self.letters {
            if l > n || seen[l - 1] {
                return false;
            }
            seen[l - 1] = true;
        }
        true
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Word::new(Vec::<usize>::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Convenience constructor used throughout the tests.
pub fn word(letters: &[usize]) -> Word {
    Word::new(letters.to_vec()).expect("valid word literal")
}
