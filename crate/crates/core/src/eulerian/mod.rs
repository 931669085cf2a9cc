//! Eulerian quasisymmetric functions `Q_n`, `Q_n^0`, the binomial variant
//! `Q̃_n`, their fixed-point refinements and the difference formulas.
//!
//! The families are computed by enumeration; closed forms are only ever
//! compared against them.

mod gf;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::exactalg::LaurentQT;
use crate::guard::Guard;
use crate::permstat::{gen_decorated, gen_permutations};
use crate::qsym::{h_complete, QSymElem};

pub use gf::{gf_check, gf_series, gf_series_refined};

/// `(exc, fix) -> sum of F_{DEX}` over permutations of `[n]`.
type PermTable = BTreeMap<(usize, usize), QSymElem>;
/// `(exc + 1, fix2) -> sum of F_{DEX}` over decorated permutations of `[n]`.
type DecoratedTable = BTreeMap<(usize, usize), QSymElem>;

static PERM_TABLES: LazyLock<RwLock<HashMap<usize, Arc<PermTable>>>> =
    LazyLock::new(Default::default);
static DECORATED_TABLES: LazyLock<RwLock<HashMap<usize, Arc<DecoratedTable>>>> =
    LazyLock::new(Default::default);

fn cached<T>(
    memo: &RwLock<HashMap<usize, Arc<T>>>,
    n: usize,
    build: impl FnOnce() -> Result<T>,
) -> Result<Arc<T>> {
    if let Some(hit) = memo.read().expect("table memo poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let table = Arc::new(build()?);
    memo.write()
        .expect("table memo poisoned")
        .insert(n, table.clone());
    Ok(table)
}

fn perm_table(n: usize) -> Result<Arc<PermTable>> {
    Guard::QFamily.check(n)?;
    cached(&PERM_TABLES, n, || {
        let mut t = PermTable::new();
        for p in gen_permutations(n)? {
            t.entry((p.exc(), p.fix()))
                .or_default()
                .add_term(n, p.dex(), &LaurentQT::one());
        }
        Ok(t)
    })
}

fn decorated_table(n: usize) -> Result<Arc<DecoratedTable>> {
    Guard::QFamily.check(n)?;
    cached(&DECORATED_TABLES, n, || {
        let mut t = DecoratedTable::new();
        for p in gen_decorated(n)? {
            t.entry(((p.exc() + 1) as usize, p.fix2()))
                .or_default()
                .add_term(n, p.dex(), &LaurentQT::one());
        }
        Ok(t)
    })
}

fn collect(
    table: &BTreeMap<(usize, usize), QSymElem>,
    keep: impl Fn(usize, usize) -> bool,
) -> QSymElem {
    table
        .iter()
        .filter(|(&(j, k), _)| keep(j, k))
        .map(|(&(j, _), x)| x.shift_t(j as i32))
        .sum()
}

/// `Q_n(x,t) = sum over S_n of F_{DEX(σ),n} t^{exc(σ)}`; `Q_0 = 1`.
pub fn q_eulerian(n: usize) -> Result<QSymElem> {
    Ok(collect(&*perm_table(n)?, |_, _| true))
}

/// The derangement part `Q_n^0`.
pub fn q0(n: usize) -> Result<QSymElem> {
    Ok(collect(&*perm_table(n)?, |_, k| k == 0))
}

/// `Q_{n,j,k}`: permutations with `j` excedances and `k` fixed points.
pub fn q_njk(n: usize, j: usize, k: usize) -> Result<QSymElem> {
    Ok(perm_table(n)?.get(&(j, k)).cloned().unwrap_or_default())
}

/// `Q̃_{n,j,k}`: decorated permutations with `exc + 1 = j` and `fix2 = k`.
pub fn qtilde_njk(n: usize, j: usize, k: usize) -> Result<QSymElem> {
    Ok(decorated_table(n)?
        .get(&(j, k))
        .cloned()
        .unwrap_or_default())
}

/// `h_n + t sum_{k=1}^n h_{n-k} Q_k`.
pub fn qtilde_from_h(n: usize) -> Result<QSymElem> {
    let mut out = h_complete(n);
    for k in 1..=n {
        out += &h_complete(n - k).multiply(&q_eulerian(k)?)?.shift_t(1);
    }
    Ok(out)
}

/// `sum over decorated permutations of F_{DEX} t^{exc+1}`.
pub fn qtilde_from_decorated(n: usize) -> Result<QSymElem> {
    Ok(collect(&*decorated_table(n)?, |_, _| true))
}

/// `Q̃_n(x,t)`, computed both ways; the routes must agree.
pub fn qtilde(n: usize) -> Result<QSymElem> {
    let a = qtilde_from_h(n)?;
    let b = qtilde_from_decorated(n)?;
    if a != b {
        return Err(Error::identity(
            "binomial Eulerian quasisymmetric routes",
            format!("n = {n}: h-expansion {a} vs decorated permutations {b}"),
        ));
    }
    Ok(a)
}

/// `Q̃_n(x,t,r)` as a map from the exponent of `r` (the number of zeros of a
/// decorated permutation) to the coefficient, computed both from
/// `h_n r^n + t sum_k h_{n-k} Q_k r^{n-k}` and by enumeration.
pub fn qtilde_refined(n: usize) -> Result<BTreeMap<usize, QSymElem>> {
    let mut by_h: BTreeMap<usize, QSymElem> = BTreeMap::new();
    by_h.insert(n, h_complete(n));
    for k in 1..=n {
        let term = h_complete(n - k).multiply(&q_eulerian(k)?)?.shift_t(1);
        *by_h.entry(n - k).or_default() += &term;
    }
    by_h.retain(|_, x| !x.is_zero());

    let mut by_enum: BTreeMap<usize, QSymElem> = BTreeMap::new();
    for (&(j, k), x) in decorated_table(n)?.iter() {
        *by_enum.entry(k).or_default() += &x.shift_t(j as i32);
    }
    if by_h != by_enum {
        let r = by_h
            .keys()
            .chain(by_enum.keys())
            .find(|r| by_h.get(r) != by_enum.get(r))
            .copied()
            .unwrap_or_default();
        return Err(Error::identity(
            "refined binomial Eulerian routes",
            format!(
                "n = {n}, r^{r}: h-expansion {} vs decorated permutations {}",
                by_h.get(&r).cloned().unwrap_or_default(),
                by_enum.get(&r).cloned().unwrap_or_default()
            ),
        ));
    }
    Ok(by_h)
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if r == 0 || r >= n {
        return Err(Error::arg(format!(
            "difference needs 1 <= r <= n-1, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

/// `Δ_{n,r}`: both `sum_i h_{n-r+i} Q^0_{r-i} t^i` and
/// `sum over σ with fix >= n-r of F_{DEX} t^{r-exc}`; they must agree.
pub fn delta_chow(n: usize, r: usize) -> Result<QSymElem> {
    check_range(n, r)?;
    let mut by_h = QSymElem::zero();
    for i in 0..=r {
        by_h += &h_complete(n - r + i)
            .multiply(&q0(r - i)?)?
            .shift_t(i as i32);
    }
    let by_perm: QSymElem = perm_table(n)?
        .iter()
        .filter(|(&(_, k), _)| k >= n - r)
        .map(|(&(j, _), x)| x.shift_t(r as i32 - j as i32))
        .sum();
    if by_h != by_perm {
        return Err(Error::identity(
            "Chow difference expressions",
            format!("n = {n}, r = {r}: {by_h} vs {by_perm}"),
        ));
    }
    Ok(by_h)
}

/// `Δ̃_{n,r}`: both `sum_j h_{n-j} Q_j t^{r-j+1}` and the sum over decorated
/// permutations with `fix2 >= n-r` of `F_{DEX} t^{r-exc}`.
pub fn delta_aug(n: usize, r: usize) -> Result<QSymElem> {
    check_range(n, r)?;
    let mut by_h = QSymElem::zero();
    for j in 0..=r {
        by_h += &h_complete(n - j)
            .multiply(&q_eulerian(j)?)?
            .shift_t((r - j + 1) as i32);
    }
    // table keys carry exc + 1, so t^{r-exc} = t^{r+1-key}
    let by_perm: QSymElem = decorated_table(n)?
        .iter()
        .filter(|(&(_, k), _)| k >= n - r)
        .map(|(&(j, _), x)| x.shift_t(r as i32 + 1 - j as i32))
        .sum();
    if by_h != by_perm {
        return Err(Error::identity(
            "augmented difference expressions",
            format!("n = {n}, r = {r}: {by_h} vs {by_perm}"),
        ));
    }
    Ok(by_h)
}
