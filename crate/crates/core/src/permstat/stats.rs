use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

/// The classical statistics of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub exc: usize,
    pub des_set: Subset,
    pub maj: usize,
    pub inv: usize,
    pub fix: usize,
}

/// Descent set of a word under the natural order of its keys.
fn descents_of<T: PartialOrd>(keys: &[T]) -> Subset {
    Subset::from_elems((1..keys.len()).filter(|&i| keys[i - 1] > keys[i]))
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &c in &word {
            let c = c as usize;
            if c == 0 || c > n || seen[c] {
                return Err(Error::arg(format!(
                    "{word:?} is not a permutation of [{n}]"
                )));
            }
            seen[c] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &c) in self.0.iter().enumerate() {
            inv[c as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    pub fn excedance_set(&self) -> Subset {
        Subset::from_elems((1..=self.len()).filter(|&i| self.at(i) > i))
    }

    pub fn exc(&self) -> usize {
        (1..=self.len()).filter(|&i| self.at(i) > i).count()
    }

    pub fn des_set(&self) -> Subset {
        descents_of(&self.0)
    }

    pub fn des(&self) -> usize {
        self.des_set().len()
    }

    pub fn maj(&self) -> usize {
        self.des_set().sum()
    }

    pub fn inv(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn fix(&self) -> usize {
        (1..=self.len()).filter(|&i| self.at(i) == i).count()
    }

    pub fn stats(&self) -> PermStats {
        PermStats {
            exc: self.exc(),
            des_set: self.des_set(),
            maj: self.maj(),
            inv: self.inv(),
            fix: self.fix(),
        }
    }

    /// Descent set of the barred word, where excedance values are barred
    /// and every barred letter precedes every unbarred one.
    pub fn dex(&self) -> Subset {
        let n = self.len() as i32;
        let keys: Vec<i32> = (1..=self.len())
            .map(|i| {
                let v = self.at(i) as i32;
                if v > i as i32 {
                    v - (n + 1)
                } else {
                    v
                }
            })
            .collect();
        descents_of(&keys)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[u8]) -> fmt::Result {
    if w.len() <= 9 {
        for c in w {
            write!(f, "{c}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = w.iter().map(u8::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A permutation of a subset of `[n]`, written as a length-`n` word with
/// `0` at the positions outside the subset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation(Vec<u8>);

impl DecoratedPermutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &c in &word {
            let c = c as usize;
            if c > n || (c != 0 && seen[c]) {
                return Err(Error::arg(format!(
                    "{word:?} is not a decorated permutation"
                )));
            }
            if c != 0 {
                seen[c] = true;
            }
        }
        for (i, &c) in word.iter().enumerate() {
            if (c != 0) != seen[i + 1] {
                return Err(Error::arg(format!(
                    "{word:?}: nonzero letters must permute the nonzero positions"
                )));
            }
        }
        Ok(DecoratedPermutation(word))
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        DecoratedPermutation(word)
    }

    /// The all-zero word.
    pub fn theta(n: usize) -> Self {
        DecoratedPermutation(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    pub fn is_theta(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Number of zero letters.
    pub fn fix2(&self) -> usize {
        self.0.iter().filter(|&&c| c == 0).count()
    }

    /// Positions `i` with `sigma_i > i`, or `-1` for the all-zero word.
    pub fn exc(&self) -> i64 {
        if self.is_theta() {
            return -1;
        }
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c as usize > i + 1)
            .count() as i64
    }

    /// Descent set of the raw word (0 the smallest letter).
    pub fn des_set(&self) -> Subset {
        descents_of(&self.0)
    }

    pub fn des(&self) -> usize {
        self.des_set().len()
    }

    /// Sum of descent positions of the raw word, or `-1` for the all-zero word.
    pub fn maj(&self) -> i64 {
        if self.is_theta() {
            return -1;
        }
        self.des_set().sum() as i64
    }

    /// Descent set of the barred word under the order
    /// barred letters < 0 < unbarred letters.
    pub fn dex(&self) -> Subset {
        if self.is_theta() {
            return Subset::empty();
        }
        let n = self.len() as i32;
        let keys: Vec<i32> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let v = c as i32;
                if v > i as i32 + 1 {
                    v - (n + 1)
                } else {
                    v
                }
            })
            .collect();
        descents_of(&keys)
    }

    /// The ordinary permutation, if there are no zeros.
    pub fn as_permutation(&self) -> Option<Permutation> {
        (self.fix2() == 0).then(|| Permutation(self.0.clone()))
    }
}

impl From<Permutation> for DecoratedPermutation {
    fn from(p: Permutation) -> Self {
        DecoratedPermutation(p.0)
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

impl fmt::Debug for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[u8]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn deco(w: &[u8]) -> DecoratedPermutation {
        DecoratedPermutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn classical_statistics() {
        let s = perm(&[3, 2, 1]).stats();
        assert_eq!(
            s,
            PermStats {
                exc: 1,
                des_set: Subset::from_elems([1, 2]),
                maj: 3,
                inv: 3,
                fix: 1
            }
        );
        let s = perm(&[2, 3, 1]).stats();
        assert_eq!(
            (s.exc, s.des_set, s.maj, s.inv, s.fix),
            (2, Subset::from_elems([2]), 2, 2, 0)
        );
        let id = Permutation::identity(5).stats();
        assert_eq!((id.exc, id.maj, id.inv, id.fix), (0, 0, 0, 5));
        assert!(id.des_set.is_empty());
    }

    #[test]
    fn dex_examples() {
        assert!(Permutation::identity(4).dex().is_empty());
        assert_eq!(perm(&[3, 2, 1]).dex(), Subset::from_elems([2]));
        assert_eq!(perm(&[1, 3, 2]).dex(), Subset::from_elems([1]));
    }

    #[test]
    fn decorated_examples() {
        let theta = DecoratedPermutation::theta(5);
        assert_eq!(
            (theta.dex(), theta.exc(), theta.maj(), theta.fix2()),
            (Subset::empty(), -1, -1, 5)
        );
        let x = deco(&[1, 0]);
        assert_eq!(
            (x.dex(), x.exc(), x.maj(), x.fix2()),
            (Subset::from_elems([1]), 0, 1, 1)
        );
        let y = deco(&[4, 0, 1, 3]);
        assert_eq!(
            (y.dex(), y.exc(), y.maj(), y.fix2()),
            (Subset::empty(), 1, 1, 1)
        );
        assert_eq!(deco(&[2, 1, 0, 0, 5]).to_string(), "21005");
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(DecoratedPermutation::new(vec![2, 0]).is_err());
        assert!(DecoratedPermutation::new(vec![0, 2]).is_ok());
        assert!(DecoratedPermutation::new(vec![3, 0, 1]).is_ok());
    }

    #[test]
    fn long_words_use_commas() {
        let p = Permutation::identity(10);
        assert_eq!(p.to_string(), "1,2,3,4,5,6,7,8,9,10");
    }
}
