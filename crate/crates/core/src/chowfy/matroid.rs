use std::collections::HashMap;
use std::fmt;

use serde_json::Value;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::guard::Guard;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of the ground set as a bit mask (bit `i - 1` is element `i`).
pub type FlatMask = u64;

/// Renders a flat mask as `{1,2,3}`.
pub struct Flat(pub FlatMask);

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for e in elements(self.0) {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn elements(mask: FlatMask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1).map(|i| i + 1)
}

/// Violations found while validating a lattice of flats.
#[derive(Debug, Error)]
pub enum MatroidError {
    #[error("malformed flats file: {0}")]
    Parse(String),
    #[error("ground set size {0} is outside 1..={MAX_GROUND}")]
    GroundSize(usize),
    #[error("flat {flat} contains element {element} outside the ground set [{n}]")]
    ElementOutOfRange {
        flat: String,
        element: i64,
        n: usize,
    },
    #[error("flat {flat} is not listed in strictly increasing order")]
    Unsorted { flat: String },
    #[error("flat {flat} is listed twice")]
    Duplicate { flat: String },
    #[error("axiom F1 violated: the ground set {ground} is not a flat")]
    MissingGround { ground: String },
    #[error("the empty set is not a flat (the matroid has loops)")]
    MissingEmpty,
    #[error("axiom F2 violated: {a} ∩ {b} = {meet} is not a flat")]
    NotIntersectionClosed { a: String, b: String, meet: String },
    #[error("axiom F3 violated at flat {flat}: element {element} {problem}")]
    CoverPartition {
        flat: String,
        element: usize,
        problem: String,
    },
    #[error("lattice is not graded: maximal chains below {flat} have different lengths")]
    NotGraded { flat: String },
}

/// A loopless matroid given by its lattice of flats.
#[derive(Clone, Debug)]
pub struct MatroidFlats {
    n: usize,
    /// Sorted by rank, then mask.
    flats: Vec<FlatMask>,
    ranks: Vec<usize>,
    index: HashMap<FlatMask, usize>,
}

impl MatroidFlats {
    /// `U_{r,n}`: all subsets of size at most `r - 1`, and `[n]`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::arg(format!(
                "uniform matroid needs 1 <= r <= n, got r = {r}, n = {n}"
            )));
        }
        if n > 20 {
            return Err(Error::arg(format!(
                "uniform matroid on {n} elements is too large to materialize"
            )));
        }
        let full = full_mask(n);
        let mut flats: Vec<FlatMask> = (0..=full)
            .filter(|m| (m.count_ones() as usize) < r)
            .collect();
        if r <= n {
            flats.push(full);
        }
        flats.sort();
        flats.dedup();
        Self::build(n, flats)
    }

    /// The Boolean matroid `U_{n,n}`.
    pub fn boolean(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// Validate a list of flats given as 1-based element lists.
    pub fn from_flat_lists(n: usize, lists: &[Vec<i64>]) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(MatroidError::GroundSize(n).into());
        }
        let mut flats = Vec::with_capacity(lists.len());
        for list in lists {
            let shown = format!("{list:?}");
            let mut mask: FlatMask = 0;
            let mut prev = 0;
            for &e in list {
                if e < 1 || e as usize > n {
                    return Err(MatroidError::ElementOutOfRange {
                        flat: shown,
                        element: e,
                        n,
                    }
                    .into());
                }
                if e <= prev {
                    return Err(MatroidError::Unsorted { flat: shown }.into());
                }
                prev = e;
                mask |= 1 << (e - 1);
            }
            flats.push(mask);
        }
        let mut sorted = flats.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatroidError::Duplicate {
                flat: Flat(w[0]).to_string(),
            }
            .into());
        }
        Guard::Flats.check(sorted.len())?;
        Self::build(n, sorted)
    }

    /// Parse and validate `{"ground": n, "flats": [[...], ...]}`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let parse = |m: &str| -> Error { MatroidError::Parse(m.to_string()).into() };
        let n = v
            .get("ground")
            .and_then(Value::as_u64)
            .ok_or_else(|| parse("missing integer field \"ground\""))? as usize;
        let raw = v
            .get("flats")
            .and_then(Value::as_array)
            .ok_or_else(|| parse("missing array field \"flats\""))?;
        let mut lists = Vec::with_capacity(raw.len());
        for f in raw {
            let elems = f
                .as_array()
                .ok_or_else(|| parse("each flat must be an array"))?;
            let list = elems
                .iter()
                .map(|e| {
                    e.as_i64()
                        .ok_or_else(|| parse("flat elements must be integers"))
                })
                .collect::<Result<Vec<i64>>>()?;
            lists.push(list);
        }
        Self::from_flat_lists(n, &lists)
    }

    fn build(n: usize, flats: Vec<FlatMask>) -> Result<Self> {
        let full = full_mask(n);
        let set: HashMap<FlatMask, usize> =
            flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        if !set.contains_key(&full) {
            return Err(MatroidError::MissingGround {
                ground: Flat(full).to_string(),
            }
            .into());
        }
        if !set.contains_key(&0) {
            return Err(MatroidError::MissingEmpty.into());
        }
        for (i, &a) in flats.iter().enumerate() {
            for &b in &flats[i + 1..] {
                if !set.contains_key(&(a & b)) {
                    return Err(MatroidError::NotIntersectionClosed {
                        a: Flat(a).to_string(),
                        b: Flat(b).to_string(),
                        meet: Flat(a & b).to_string(),
                    }
                    .into());
                }
            }
        }
        let covers: Vec<Vec<FlatMask>> = flats.iter().map(|&f| covers_in(&flats, f)).collect();
        for (&f, cov) in flats.iter().zip(&covers) {
            check_cover_partition(f, cov, full)?;
        }
        // rank = length of the longest chain from the empty flat; graded iff
        // every cover step raises it by one
        let mut by_size: Vec<FlatMask> = flats.clone();
        by_size.sort_by_key(|m| m.count_ones());
        let mut rank: HashMap<FlatMask, usize> = HashMap::new();
        for &f in &by_size {
            let r = flats
                .iter()
                .filter(|&&g| g != f && g & f == g)
                .filter_map(|g| rank.get(g))
                .map(|r| r + 1)
                .max()
                .unwrap_or(0);
            rank.insert(f, r);
        }
        for (&f, cov) in flats.iter().zip(&covers) {
            if cov.iter().any(|g| rank[g] != rank[&f] + 1) {
                return Err(MatroidError::NotGraded {
                    flat: Flat(f).to_string(),
                }
                .into());
            }
        }
        let mut ordered = flats;
        ordered.sort_by_key(|f| (rank[f], *f));
        let ranks = ordered.iter().map(|f| rank[f]).collect();
        let index = ordered.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        Ok(MatroidFlats {
            n,
            flats: ordered,
            ranks,
            index,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> FlatMask {
        full_mask(self.n)
    }

    /// Rank of the matroid.
    pub fn rank(&self) -> usize {
        self.rank_of(self.ground()).expect("ground set is a flat")
    }

    pub fn num_flats(&self) -> usize {
        self.flats.len()
    }

    /// Flats sorted by rank, then by mask.
    pub fn flats(&self) -> &[FlatMask] {
        &self.flats
    }

    pub fn is_flat(&self, mask: FlatMask) -> bool {
        self.index.contains_key(&mask)
    }

    pub fn rank_of(&self, flat: FlatMask) -> Option<usize> {
        self.index.get(&flat).map(|&i| self.ranks[i])
    }

    pub fn flats_of_rank(&self, r: usize) -> impl Iterator<Item = FlatMask> + '_ {
        self.flats
            .iter()
            .zip(&self.ranks)
            .filter(move |(_, &k)| k == r)
            .map(|(&f, _)| f)
    }

    /// Flats strictly containing `flat`.
    pub fn flats_above(&self, flat: FlatMask) -> impl Iterator<Item = (FlatMask, usize)> + '_ {
        self.flats
            .iter()
            .zip(&self.ranks)
            .filter(move |(&g, _)| g != flat && g & flat == flat)
            .map(|(&g, &r)| (g, r))
    }

    /// The flats as sorted 1-based element lists, in file order.
    pub fn to_json(&self) -> Value {
        let lists: Vec<Vec<usize>> = self.flats.iter().map(|&f| elements(f).collect()).collect();
        serde_json::json!({ "ground": self.n, "flats": lists })
    }
}

fn full_mask(n: usize) -> FlatMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn covers_in(flats: &[FlatMask], f: FlatMask) -> Vec<FlatMask> {
    let mut above: Vec<FlatMask> = flats
        .iter()
        .copied()
        .filter(|&g| g != f && g & f == f)
        .collect();
    above.sort_by_key(|g| g.count_ones());
    // processed by size, so anything strictly below g that lies above f
    // contains a minimal element already found
    let mut minimal: Vec<FlatMask> = Vec::new();
    for g in above {
        if !minimal.iter().any(|&h| h & !g == 0) {
            minimal.push(g);
        }
    }
    minimal
}

fn check_cover_partition(f: FlatMask, covers: &[FlatMask], full: FlatMask) -> Result<()> {
    let mut seen: FlatMask = 0;
    for &g in covers {
        let part = g & !f;
        if let Some(e) = elements(part & seen).next() {
            return Err(MatroidError::CoverPartition {
                flat: Flat(f).to_string(),
                element: e,
                problem: "lies in two covering flats".into(),
            }
            .into());
        }
        seen |= part;
    }
    if let Some(e) = elements(full & !f & !seen).next() {
        return Err(MatroidError::CoverPartition {
            flat: Flat(f).to_string(),
            element: e,
            problem: "lies in no covering flat".into(),
        }
        .into());
    }
    Ok(())
}
