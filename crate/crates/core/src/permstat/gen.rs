use super::stats::{DecoratedPermutation, Permutation};
use crate::error::{Error, Result};
use crate::guard::Guard;

/// Depth-first generator of words over `0..=max` accepted letter by letter.
///
/// Words come out in lexicographic order. The predicate sees the current
/// prefix and a candidate letter.
struct Backtrack<F> {
    len: usize,
    min: u8,
    max: u8,
    word: Vec<u8>,
    next: Vec<u8>,
    accept: F,
    done: bool,
}

impl<F: FnMut(&[u8], u8) -> bool> Backtrack<F> {
    fn new(len: usize, min: u8, max: u8, accept: F) -> Self {
        Backtrack {
            len,
            min,
            max,
            word: Vec::with_capacity(len),
            next: vec![min; len + 1],
            accept,
            done: false,
        }
    }
}

impl<F: FnMut(&[u8], u8) -> bool> Iterator for Backtrack<F> {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        loop {
            if self.done {
                return None;
            }
            let depth = self.word.len();
            if depth == self.len {
                let out = self.word.clone();
                if self.word.pop().is_none() {
                    self.done = true;
                }
                return Some(out);
            }
            let c = self.next[depth];
            if c > self.max {
                if self.word.pop().is_none() {
                    self.done = true;
                }
                continue;
            }
            self.next[depth] = c + 1;
            if (self.accept)(&self.word, c) {
                self.word.push(c);
                self.next[depth + 1] = self.min;
            }
        }
    }
}

fn size_u8(n: usize) -> Result<u8> {
    u8::try_from(n).map_err(|_| Error::arg(format!("n = {n} is too large")))
}

/// All permutations of `[n]` in lexicographic order.
pub fn gen_permutations(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    Guard::Permutations.check(n)?;
    let n = size_u8(n)?;
    let mut cur: Option<Vec<u8>> = Some((1..=n).collect());
    Ok(std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut w = out.clone();
        if next_permutation(&mut w) {
            cur = Some(w);
        }
        Some(Permutation::from_word_unchecked(out))
    }))
}

fn next_permutation(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Fixed-point-free permutations of `[n]` in lexicographic order.
pub fn gen_derangements(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    Guard::Permutations.check(n)?;
    let n8 = size_u8(n)?;
    let words = Backtrack::new(n, 1, n8, |prefix, c| {
        c as usize != prefix.len() + 1 && !prefix.contains(&c)
    });
    Ok(words.map(Permutation::from_word_unchecked))
}

/// Decorated permutations of `[n]` in lexicographic order (0 smallest).
pub fn gen_decorated(n: usize) -> Result<impl Iterator<Item = DecoratedPermutation>> {
    Guard::Decorated.check(n)?;
    let n8 = size_u8(n)?;
    let words = Backtrack::new(n, 0, n8, |prefix, c| {
        let pos = prefix.len() + 1;
        if c == 0 {
            // position `pos` is outside the support, so letter `pos` is too
            return !prefix.contains(&(pos as u8));
        }
        if prefix.contains(&c) {
            return false;
        }
        // a letter pointing back to an earlier position needs that position
        // in the support
        (c as usize) >= pos || prefix[c as usize - 1] != 0
    });
    Ok(words.map(DecoratedPermutation::from_word_unchecked))
}

/// Permutations of `[n]` alternating in direction, starting with an ascent
/// (`first_up`) or a descent.
pub fn gen_updown(n: usize, first_up: bool) -> Result<impl Iterator<Item = Permutation>> {
    Guard::Permutations.check(n)?;
    let n8 = size_u8(n)?;
    let words = Backtrack::new(n, 1, n8, move |prefix, c| {
        if prefix.contains(&c) {
            return false;
        }
        let Some(&last) = prefix.last() else {
            return true;
        };
        // step from position prefix.len() to prefix.len() + 1
        let up = (prefix.len() % 2 == 1) == first_up;
        if up {
            c > last
        } else {
            c < last
        }
    });
    Ok(words.map(Permutation::from_word_unchecked))
}

/// Reverse alternating permutations `s1 < s2 > s3 < ...` of even length.
pub fn gen_reverse_alternating(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    if !n.is_multiple_of(2) {
        return Err(Error::arg(format!(
            "reverse alternating permutations are generated for even n, got {n}"
        )));
    }
    gen_updown(n, true)
}

/// Alternating permutations `s1 > s2 < s3 > ...` of odd length.
pub fn gen_alternating(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    if n % 2 != 1 {
        return Err(Error::arg(format!(
            "alternating permutations are generated for odd n, got {n}"
        )));
    }
    gen_updown(n, false)
}
