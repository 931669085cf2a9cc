//! Rank-selected subposets of lattices of flats: flag f- and h-vectors,
//! their symmetric-function forms for Boolean lattices, and character
//! values of the equivariant Charney–Davis quantity.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chowfy::{for_each_fy, Flat, FlatMask, MatroidFlats};
use crate::error::{Error, Result};
use crate::qsym::{h_of_composition, ribbon_schur, QSymElem};
use crate::subset::Subset;
use crate::Variant;

/// A permutation of the ground set `[n]`, stored as images of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundPerm(Vec<usize>);

impl GroundPerm {
    pub fn identity(n: usize) -> Self {
        GroundPerm((1..=n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::arg(format!(
                    "{images:?} is not a permutation of [{n}]"
                )));
            }
        }
        Ok(GroundPerm(images))
    }

    /// Parse cycle notation such as `(1 2)(3 4 5)`; `()` or the empty string
    /// is the identity. Elements may be separated by spaces or commas.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let bad = |why: &str| Error::arg(format!("cannot parse permutation `{text}`: {why}"));
        let mut images: Vec<usize> = (0..=n).collect();
        let mut moved = vec![false; n + 1];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad("non-integer element")))
                .collect::<Result<Vec<usize>>>()?;
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(bad(&format!("element {x} outside [{n}]")));
                }
                if std::mem::replace(&mut moved[x], true) {
                    return Err(bad(&format!("element {x} appears twice")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(GroundPerm(images[1..].to_vec()))
    }

    /// The `n`-cycle `(1 2 ... n)`.
    pub fn long_cycle(n: usize) -> Self {
        GroundPerm((1..=n).map(|i| i % n + 1).collect())
    }

    /// The transposition `(a b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        GroundPerm(images)
    }

    /// `count` permutations of `[n]` drawn from a seeded generator.
    pub fn random(n: usize, count: usize, seed: u64) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let mut images: Vec<usize> = (1..=n).collect();
                images.shuffle(&mut rng);
                GroundPerm(images)
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn apply(&self, mask: FlatMask) -> FlatMask {
        let mut out = 0;
        for (i, &img) in self.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= 1 << (img - 1);
            }
        }
        out
    }

    pub fn stabilizes(&self, mask: FlatMask) -> bool {
        self.apply(mask) == mask
    }

    /// Check that flats map to flats of equal rank.
    pub fn check_automorphism(&self, m: &MatroidFlats) -> Result<()> {
        if self.len() != m.ground_size() {
            return Err(Error::arg(format!(
                "permutation {self} acts on {} elements, the matroid has {}",
                self.len(),
                m.ground_size()
            )));
        }
        for &f in m.flats() {
            let g = self.apply(f);
            if m.rank_of(g) != m.rank_of(f) {
                return Err(Error::arg(format!(
                    "{self} is not an automorphism: it maps the flat {} to {}, which is not a flat of the same rank",
                    Flat(f),
                    Flat(g)
                )));
            }
        }
        Ok(())
    }
}

/// The optional `"automorphisms"` list of a matroid file: cycle-notation
/// strings acting on `[n]`.
pub fn automorphisms_from_json(v: &serde_json::Value, n: usize) -> Result<Vec<GroundPerm>> {
    let Some(list) = v.get("automorphisms") else {
        return Ok(Vec::new());
    };
    let list = list
        .as_array()
        .ok_or_else(|| Error::arg("\"automorphisms\" must be an array of cycle strings"))?;
    list.iter()
        .map(|x| {
            let text = x
                .as_str()
                .ok_or_else(|| Error::arg("\"automorphisms\" entries must be strings"))?;
            GroundPerm::parse_cycles(text, n)
        })
        .collect()
}

impl fmt::Display for GroundPerm {
    /// Cycle notation without fixed points; the identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        let mut any = false;
        for start in 1..=n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{x}")?;
                x = self.image(x);
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroundPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_selection(m: &MatroidFlats, s: Subset) -> Result<()> {
    let r = m.rank();
    if s.max().is_some_and(|x| x >= r) {
        return Err(Error::arg(format!(
            "rank selection {s} is not inside [{}]",
            r.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Chains `∅ < F_1 < ... < F_m < E` with `rk F_i` the elements of `s`,
/// restricted to flats accepted by `keep`.
fn count_chains(m: &MatroidFlats, s: Subset, keep: impl Fn(FlatMask) -> bool) -> i128 {
    // ways[i]: number of partial chains ending at layer flat i
    let mut layer: Vec<(FlatMask, i128)> = vec![(0, 1)];
    for rank in s.iter().chain(std::iter::once(m.rank())) {
        layer = m
            .flats_of_rank(rank)
            .filter(|&f| keep(f))
            .map(|f| {
                let ways: i128 = layer
                    .iter()
                    .filter(|(g, _)| g & f == *g)
                    .map(|(_, w)| w)
                    .sum();
                (f, ways)
            })
            .filter(|&(_, w)| w > 0)
            .collect();
    }
    layer.iter().map(|(_, w)| w).sum()
}

/// Number of maximal chains of the rank-selected subposet.
pub fn flag_f(m: &MatroidFlats, s: Subset) -> Result<i128> {
    check_selection(m, s)?;
    Ok(count_chains(m, s, |_| true))
}

/// `sum_{T ⊆ S} (-1)^{|S - T|} flag_f(T)`.
pub fn flag_h(m: &MatroidFlats, s: Subset) -> Result<i128> {
    check_selection(m, s)?;
    Ok(s.subsets()
        .map(|t| sign(s.len() - t.len()) * count_chains(m, t, |_| true))
        .sum())
}

/// `μ(∅, E)` in the rank-selected subposet: flats with rank in `s`, plus
/// the bottom and top.
pub fn mobius_rank_selected(m: &MatroidFlats, s: Subset) -> Result<i128> {
    check_selection(m, s)?;
    let mut seen: Vec<(FlatMask, i128)> = vec![(0, 1)];
    for rank in s.iter().chain(std::iter::once(m.rank())) {
        let layer: Vec<(FlatMask, i128)> = m
            .flats_of_rank(rank)
            .map(|f| {
                (
                    f,
                    -seen
                        .iter()
                        .filter(|(g, _)| g & f == *g)
                        .map(|(_, mu)| mu)
                        .sum::<i128>(),
                )
            })
            .collect();
        seen.extend(layer);
    }
    Ok(seen.last().map(|&(_, mu)| mu).unwrap_or(1))
}

fn sign(k: usize) -> i128 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Maximal chains of the rank-selected subposet fixed by `g`, i.e. whose
/// flats are all `g`-stable.
pub fn fixed_chain_count(m: &MatroidFlats, g: &GroundPerm, s: Subset) -> Result<i128> {
    check_selection(m, s)?;
    g.check_automorphism(m)?;
    Ok(count_chains(m, s, |f| g.stabilizes(f)))
}

/// Character value at `g` of the rank-selected homology representation.
pub fn beta_character(m: &MatroidFlats, g: &GroundPerm, s: Subset) -> Result<i128> {
    check_selection(m, s)?;
    g.check_automorphism(m)?;
    Ok(s.subsets()
        .map(|t| sign(s.len() - t.len()) * count_chains(m, t, |f| g.stabilizes(f)))
        .sum())
}

/// The predicted value of `Hilb^G(-1)` at `g`: `±β_g(Even(r-1))` for the
/// Chow ring with `r` odd, `±β_g(Odd(r-1))` for the augmented ring with
/// `r` even, and 0 otherwise.
pub fn cd_character_predicted(m: &MatroidFlats, g: &GroundPerm, variant: Variant) -> Result<i128> {
    let r = m.rank();
    Ok(match variant {
        Variant::Chow if !r.is_multiple_of(2) => {
            sign((r - 1) / 2) * beta_character(m, g, Subset::evens_up_to(r - 1))?
        }
        Variant::Augmented if r.is_multiple_of(2) => {
            sign(r / 2) * beta_character(m, g, Subset::odds_up_to(r - 1))?
        }
        _ => 0,
    })
}

/// `sum_i (-1)^i` (number of degree-`i` FY monomials fixed by `g`), checked
/// against [`cd_character_predicted`].
pub fn cd_character(m: &MatroidFlats, g: &GroundPerm, variant: Variant) -> Result<i128> {
    g.check_automorphism(m)?;
    let mut value: i128 = 0;
    for_each_fy(m, variant, |x| {
        if x.chain.iter().all(|&f| g.stabilizes(f)) {
            value += sign(x.degree());
        }
    })?;
    let predicted = cd_character_predicted(m, g, variant)?;
    if value != predicted {
        return Err(Error::identity(
            "equivariant Charney–Davis character",
            format!(
                "{variant} ring of a rank-{} matroid on {} elements, g = {g}: fixed FY monomials give {value}, rank-selected homology gives {predicted}",
                m.rank(),
                m.ground_size()
            ),
        ));
    }
    Ok(value)
}

/// `h_{ν(S)}`: the permutation module on chains of the Boolean lattice with
/// rank set `S`.
pub fn alpha_boolean(s: Subset, n: usize) -> Result<QSymElem> {
    if s.max().is_some_and(|x| x >= n) {
        return Err(Error::arg(format!(
            "{s} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    h_of_composition(&s.composition(n))
}

/// Inclusion–exclusion over `alpha_boolean`, checked against the ribbon
/// Schur function of `S`.
pub fn beta_boolean(s: Subset, n: usize) -> Result<QSymElem> {
    let mut out = QSymElem::zero();
    for t in s.subsets() {
        let a = alpha_boolean(t, n)?;
        if (s.len() - t.len()).is_multiple_of(2) {
            out += &a;
        } else {
            out -= &a;
        }
    }
    let ribbon = ribbon_schur(s, n)?;
    if out != ribbon {
        return Err(Error::identity(
            "Boolean rank-selected homology",
            format!("S = {s}, n = {n}: inclusion–exclusion {out} vs ribbon {ribbon}"),
        ));
    }
    Ok(out)
}
