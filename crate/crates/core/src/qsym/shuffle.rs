use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::guard::Guard;
use crate::subset::Subset;
use crate::Result;

type Key = (usize, Subset, usize, Subset);
type Expansion = Arc<Vec<(Subset, u64)>>;

static MEMO: LazyLock<RwLock<HashMap<Key, Expansion>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// A word on `1..=n` (shifted by `offset`) whose descent set is `s`.
///
/// Blocks of the composition of `s` get decreasing value ranges and are
/// filled increasingly, so descents occur exactly at block boundaries.
pub(crate) fn descent_word(s: Subset, n: usize, offset: usize) -> Vec<usize> {
    let parts = s.composition(n);
    let mut word = Vec::with_capacity(n);
    let mut top = n;
    for p in parts {
        let lo = top - p;
        word.extend((lo + 1..=top).map(|v| v + offset));
        top = lo;
    }
    word
}

fn descent_set(w: &[usize]) -> Subset {
    let mut s = Subset::empty();
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            s.insert(i);
        }
    }
    s
}

fn expand(a: usize, s: Subset, b: usize, t: Subset) -> Vec<(Subset, u64)> {
    let u = descent_word(s, a, 0);
    let v = descent_word(t, b, a);
    let n = a + b;
    let mut counts: HashMap<Subset, u64> = HashMap::new();
    let mut merged = vec![0usize; n];
    // positions taken by u, as a bit mask with exactly `a` bits
    let mut mask: u32 = if a == 0 { 0 } else { (1u32 << a) - 1 };
    loop {
        let (mut i, mut j) = (0, 0);
        for (pos, slot) in merged.iter_mut().enumerate() {
            if mask >> pos & 1 == 1 {
                *slot = u[i];
                i += 1;
            } else {
                *slot = v[j];
                j += 1;
            }
        }
        *counts.entry(descent_set(&merged)).or_default() += 1;
        if a == 0 || a == n {
            break;
        }
        // next mask with the same popcount (Gosper's hack)
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if mask >> n != 0 {
            break;
        }
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort();
    out
}

/// `F_{s,a} * F_{t,b}` as a list of `(descent set, multiplicity)` at degree `a+b`.
pub(crate) fn shuffle_product(a: usize, s: Subset, b: usize, t: Subset) -> Result<Expansion> {
    Guard::ShuffleDegree.check(a + b)?;
    let key = (a, s, b, t);
    if let Some(hit) = MEMO.read().expect("shuffle memo poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let value = Arc::new(expand(a, s, b, t));
    MEMO.write()
        .expect("shuffle memo poisoned")
        .insert(key, value.clone());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_words() {
        assert_eq!(descent_word(Subset::empty(), 3, 0), [1, 2, 3]);
        assert_eq!(descent_word(Subset::from_elems([1, 2]), 3, 0), [3, 2, 1]);
        assert_eq!(
            descent_word(Subset::from_elems([2]), 4, 10),
            [13, 14, 11, 12]
        );
        for n in 0..=7 {
            for s in Subset::all_of(n.max(1) - 1) {
                assert_eq!(descent_set(&descent_word(s, n, 0)), s);
            }
        }
    }

    #[test]
    fn shuffle_counts_sum_to_binomial() {
        let e = shuffle_product(3, Subset::from_elems([1]), 4, Subset::from_elems([2, 3])).unwrap();
        assert_eq!(e.iter().map(|(_, c)| c).sum::<u64>(), 35);
        let e = shuffle_product(0, Subset::empty(), 2, Subset::from_elems([1])).unwrap();
        assert_eq!(*e, vec![(Subset::from_elems([1]), 1)]);
    }

    /// The product depends only on descent sets: the lexicographically first
    /// word with the given descent set gives the same expansion.
    #[test]
    fn independent_of_word_choice() {
        use crate::permstat::gen_permutations;

        fn first_word(s: Subset, n: usize, offset: usize) -> Vec<usize> {
            let p = gen_permutations(n)
                .unwrap()
                .find(|p| p.des_set() == s)
                .unwrap();
            p.word().iter().map(|&x| x as usize + offset).collect()
        }
        fn brute(u: &[usize], v: &[usize]) -> Vec<(Subset, u64)> {
            let n = u.len() + v.len();
            let mut counts: HashMap<Subset, u64> = HashMap::new();
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize != u.len() {
                    continue;
                }
                let (mut i, mut j) = (0, 0);
                let mut w = Vec::with_capacity(n);
                for p in 0..n {
                    if mask >> p & 1 == 1 {
                        w.push(u[i]);
                        i += 1;
                    } else {
                        w.push(v[j]);
                        j += 1;
                    }
                }
                *counts.entry(descent_set(&w)).or_default() += 1;
            }
            let mut out: Vec<_> = counts.into_iter().collect();
            out.sort();
            out
        }
        for a in 0..=6 {
            for b in 0..=6 - a {
                for s in Subset::all_of(a.max(1) - 1) {
                    for t in Subset::all_of(b.max(1) - 1) {
                        let u = first_word(s, a, 0);
                        let v = first_word(t, b, a);
                        assert_eq!(*expand(a, s, b, t), brute(&u, &v), "{s} {a} x {t} {b}");
                    }
                }
            }
        }
    }
}
