//! Quasisymmetric functions stored in Gessel's fundamental basis.
//!
//! Symmetric functions (complete homogeneous, Schur, ribbon Schur) are
//! embedded into the fundamental basis, so every identity is checked by
//! comparing F-coefficients.

mod shuffle;
mod tableaux;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::qpoly::forward_owned;
use crate::exactalg::{LaurentQT, QPoly};
use crate::subset::Subset;

pub(crate) use tableaux::kostka_defect;
pub use tableaux::{kostka, partitions, schur, standard_tableaux_descents};

/// A finite sum of `c(t) F_{S,n}` with `S ⊆ [n-1]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QSymElem {
    terms: BTreeMap<(usize, Subset), LaurentQT>,
}

impl QSymElem {
    pub fn zero() -> Self {
        QSymElem::default()
    }

    /// `F_{∅,0}`.
    pub fn one() -> Self {
        QSymElem::f_term(Subset::empty(), 0, LaurentQT::one())
    }

    /// `c F_{s,n}` without validating `s`.
    pub(crate) fn f_term(s: Subset, n: usize, c: LaurentQT) -> Self {
        let mut out = QSymElem::zero();
        out.add_term(n, s, &c);
        out
    }

    pub fn add_term(&mut self, n: usize, s: Subset, c: &LaurentQT) {
        debug_assert!(s.max().is_none_or(|m| m < n), "{s} not inside [{n}-1]");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((n, s)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(n, s));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, n: usize, s: Subset) -> LaurentQT {
        self.terms.get(&(n, s)).cloned().unwrap_or_default()
    }

    /// Terms as `(degree, subset, coefficient)` sorted by degree then subset.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Subset, &LaurentQT)> + '_ {
        self.terms.iter().map(|(&(n, s), c)| (n, s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|k| k.0).collect();
        d.dedup();
        d
    }

    /// The degree-`n` part.
    pub fn component(&self, n: usize) -> QSymElem {
        QSymElem {
            terms: self
                .terms
                .range((n, Subset::empty())..=(n, Subset::from_mask(u32::MAX)))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentQT) -> LaurentQT) -> QSymElem {
        let mut out = QSymElem::zero();
        for (&(n, s), c) in &self.terms {
            out.add_term(n, s, &f(c));
        }
        out
    }

    pub fn scale(&self, c: &LaurentQT) -> QSymElem {
        self.map_coeffs(|x| x * c)
    }

    /// Multiply every coefficient by `t^k`.
    pub fn shift_t(&self, k: i32) -> QSymElem {
        self.map_coeffs(|x| x.shift_t(k))
    }

    /// `t^d x(1/t)`, coefficient-wise.
    pub fn reflect_t(&self, d: i32) -> QSymElem {
        self.map_coeffs(|x| x.reflect(d))
    }

    /// Substitute a value for `t` in every coefficient.
    pub fn eval_t(&self, t: i64) -> QSymElem {
        self.map_coeffs(|x| LaurentQT::from_qpoly(x.eval_t(t)))
    }

    /// Product by the shuffle rule on fundamentals.
    pub fn multiply(&self, other: &QSymElem) -> Result<QSymElem> {
        let mut acc: BTreeMap<(usize, Subset), LaurentQT> = BTreeMap::new();
        for (&(a, s), c1) in &self.terms {
            for (&(b, t), c2) in &other.terms {
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                for &(u, mult) in shuffle::shuffle_product(a, s, b, t)?.iter() {
                    *acc.entry((a + b, u)).or_default() += &c.scale_int(&BigInt::from(mult));
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(QSymElem { terms: acc })
    }

    /// Monomial-basis coefficients: `M_T` gets `sum_{S ⊆ T} [F_S]`.
    ///
    /// Keys are compositions; zero coefficients are omitted.
    pub fn to_monomial(&self) -> BTreeMap<Vec<usize>, LaurentQT> {
        let mut out = BTreeMap::new();
        for n in self.degrees() {
            for (comp, c) in self.monomial_row(n) {
                if !c.is_zero() {
                    out.insert(comp, c);
                }
            }
        }
        out
    }

    fn monomial_row(&self, n: usize) -> Vec<(Vec<usize>, LaurentQT)> {
        let part = self.component(n);
        Subset::all_of(n.saturating_sub(1))
            .map(|t| {
                let c: LaurentQT = t.subsets().map(|s| part.coeff(n, s)).sum();
                (t.composition(n), c)
            })
            .collect()
    }

    /// Whether monomial coefficients are invariant under rearranging
    /// compositions.
    pub fn is_symmetric(&self) -> bool {
        self.degrees().into_iter().all(|n| {
            let mut seen: HashMap<Vec<usize>, LaurentQT> = HashMap::new();
            self.monomial_row(n).into_iter().all(|(mut comp, c)| {
                comp.sort_unstable();
                match seen.get(&comp) {
                    Some(prev) => *prev == c,
                    None => {
                        seen.insert(comp, c);
                        true
                    }
                }
            })
        })
    }

    /// `ps_q` of a degree-`n` element multiplied by `prod_{i<=n} (1-q^i)`:
    /// `F_{S,n}` goes to `q^{sum S}`.
    pub fn ps_normalized(&self, n: usize) -> Result<LaurentQT> {
        let mut out = LaurentQT::zero();
        for (&(d, s), c) in &self.terms {
            if d != n {
                return Err(Error::arg(format!(
                    "principal specialization needs a homogeneous element of degree {n}, found degree {d}"
                )));
            }
            out += &c.scale(&QPoly::q_pow(s.sum() as u32));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(n, s), c)| json!({"degree": n, "subset": s.elems(), "coeff": c.to_json()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<QSymElem> {
        let bad = || Error::arg(format!("malformed quasisymmetric JSON: {v}"));
        let mut out = QSymElem::zero();
        for term in v.as_array().ok_or_else(bad)? {
            let n = term.get("degree").and_then(Value::as_u64).ok_or_else(bad)? as usize;
            let mut s = Subset::empty();
            for e in term
                .get("subset")
                .and_then(Value::as_array)
                .ok_or_else(bad)?
            {
                let e = e.as_u64().ok_or_else(bad)? as usize;
                if e == 0 || e >= n {
                    return Err(bad());
                }
                s.insert(e);
            }
            let c = LaurentQT::from_json(term.get("coeff").ok_or_else(bad)?)?;
            out.add_term(n, s, &c);
        }
        Ok(out)
    }

    /// LaTeX form, e.g. `(1+2t+t^2)F_{\emptyset,3}+tF_{\{1\},3}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&(n, s), c)) in self.terms.iter().enumerate() {
            let basis = if s.is_empty() {
                format!("F_{{\\emptyset,{n}}}")
            } else {
                let inner: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                format!("F_{{\\{{{}\\}},{n}}}", inner.join(","))
            };
            let cs = c.to_string();
            let (neg, body) = if c.is_one() {
                (false, String::new())
            } else if (-c).is_one() {
                (true, String::new())
            } else if cs[1..].contains(['+', '-']) {
                (false, format!("({cs})"))
            } else if let Some(rest) = cs.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, cs)
            };
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            out.push_str(&body);
            out.push_str(&basis);
        }
        out
    }
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_latex())
    }
}

impl fmt::Debug for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSym({})", self.to_latex())
    }
}

impl<'a> Add<&'a QSymElem> for &QSymElem {
    type Output = QSymElem;
    fn add(self, rhs: &'a QSymElem) -> QSymElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a QSymElem> for QSymElem {
    fn add_assign(&mut self, rhs: &'a QSymElem) {
        for (&(n, s), c) in &rhs.terms {
            self.add_term(n, s, c);
        }
    }
}

impl<'a> Sub<&'a QSymElem> for &QSymElem {
    type Output = QSymElem;
    fn sub(self, rhs: &'a QSymElem) -> QSymElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> SubAssign<&'a QSymElem> for QSymElem {
    fn sub_assign(&mut self, rhs: &'a QSymElem) {
        for (&(n, s), c) in &rhs.terms {
            self.add_term(n, s, &-c);
        }
    }
}

impl Neg for &QSymElem {
    type Output = QSymElem;
    fn neg(self) -> QSymElem {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for QSymElem {
    type Output = QSymElem;
    fn neg(self) -> QSymElem {
        -&self
    }
}

forward_owned!(QSymElem; Add add, Sub sub);

impl std::iter::Sum for QSymElem {
    fn sum<I: Iterator<Item = QSymElem>>(iter: I) -> QSymElem {
        iter.fold(QSymElem::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// `F_{s,n}`.
pub fn f_basis(s: Subset, n: usize) -> Result<QSymElem> {
    if s.max().is_some_and(|m| m >= n) {
        return Err(Error::arg(format!(
            "{s} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    Ok(QSymElem::f_term(s, n, LaurentQT::one()))
}

/// `h_n = F_{∅,n}`.
pub fn h_complete(n: usize) -> QSymElem {
    QSymElem::f_term(Subset::empty(), n, LaurentQT::one())
}

static H_MEMO: LazyLock<RwLock<HashMap<Vec<usize>, QSymElem>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `h_{nu_1} h_{nu_2} ...`; zero parts contribute the unit.
pub fn h_of_composition(nu: &[usize]) -> Result<QSymElem> {
    let key: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
    if let Some(hit) = H_MEMO.read().expect("h memo poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let mut acc = QSymElem::one();
    for &p in &key {
        acc = acc.multiply(&h_complete(p))?;
    }
    H_MEMO
        .write()
        .expect("h memo poisoned")
        .insert(key, acc.clone());
    Ok(acc)
}

/// Ribbon Schur function of the ribbon with descent set `r` and `n` cells,
/// computed from the ribbon's tableaux and by inclusion–exclusion over
/// complete homogeneous products; the two must agree.
pub fn ribbon_schur(r: Subset, n: usize) -> Result<QSymElem> {
    let by_shape = tableaux::ribbon_by_tableaux(r, n)?;
    let by_h = ribbon_by_inclusion_exclusion(r, n)?;
    if by_shape != by_h {
        return Err(Error::identity(
            "ribbon Schur routes",
            format!("R = {r}, n = {n}: tableaux give {by_shape}, inclusion–exclusion gives {by_h}"),
        ));
    }
    Ok(by_shape)
}

pub(crate) fn ribbon_by_inclusion_exclusion(r: Subset, n: usize) -> Result<QSymElem> {
    if r.max().is_some_and(|m| m >= n) {
        return Err(Error::arg(format!(
            "{r} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    let mut out = QSymElem::zero();
    for t in r.subsets() {
        let h = h_of_composition(&t.composition(n))?;
        if (r.len() - t.len()).is_multiple_of(2) {
            out += &h;
        } else {
            out -= &h;
        }
    }
    Ok(out)
}
