//! Verification suites. Each check compares two independently computed
//! quantities over a range of sizes and stops at the first disagreement, so
//! the reported witness is the smallest failing case.

use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charney::{descent_class, secant_numbers, CdReport};
use crate::chowfy::identities::*;
use crate::chowfy::{
    cd, cd_of_hilbert, grfrob_refined, grfrob_uniform, hilb, hilb_q_uniform, MatroidFlats,
};
use crate::error::{Error, Result};
use crate::eulerian::{
    delta_aug, delta_chow, gf_check, q0, q_eulerian, q_njk, qtilde, qtilde_njk, qtilde_refined,
};
use crate::exactalg::{
    det_qfrac, q_binomial, q_factorial, q_int, q_multinomial, LaurentQT, QFrac, QPoly,
};
use crate::guard::Guard;
use crate::permstat::{
    eulerian_a_q, eulerian_binomial_q, eulerian_d_q, gen_alternating, gen_decorated,
    gen_derangements, gen_permutations, gen_reverse_alternating,
};
use crate::qsym::{
    f_basis, h_complete, h_of_composition, partitions, ribbon_schur, schur, QSymElem,
};
use crate::rankselect::{
    automorphisms_from_json, beta_boolean, cd_character, flag_f, flag_h, mobius_rank_selected,
    GroundPerm,
};
use crate::subset::Subset;
use crate::Variant;

/// Matroids bundled with the library, each listing some automorphisms.
pub const SAMPLE_MATROIDS: [(&str, &str); 6] = [
    (
        "three_point_line",
        include_str!("../data/three_point_line.json"),
    ),
    ("k4", include_str!("../data/k4.json")),
    ("fano", include_str!("../data/fano.json")),
    ("u23_plus_u22", include_str!("../data/u23_plus_u22.json")),
    ("parallel_pair", include_str!("../data/parallel_pair.json")),
    ("u23", include_str!("../data/u23.json")),
];

/// Parse a matroid file together with its optional automorphism list.
pub fn load_matroid(text: &str) -> Result<(MatroidFlats, Vec<GroundPerm>)> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| crate::chowfy::MatroidError::Parse(e.to_string()))?;
    let m = MatroidFlats::from_json(&v)?;
    let auts = automorphisms_from_json(&v, m.ground_size())?;
    Ok((m, auts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Arith,
    Perms,
    QSym,
    Eulerian,
    Hilbert,
    Frobenius,
    RankSelect,
    Cd,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Arith,
        Suite::Perms,
        Suite::QSym,
        Suite::Eulerian,
        Suite::Hilbert,
        Suite::Frobenius,
        Suite::RankSelect,
        Suite::Cd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Perms => "perms",
            Suite::QSym => "qsym",
            Suite::Eulerian => "eulerian",
            Suite::Hilbert => "hilbert",
            Suite::Frobenius => "frobenius",
            Suite::RankSelect => "rankselect",
            Suite::Cd => "cd",
        }
    }

    /// `all` or a single suite name.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::arg(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub max_n: usize,
    /// Seed for the randomized checks (ring axioms, random group elements).
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_n: 6, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Two routes disagreed.
    Fail,
    /// The check could not run (guard, bad input).
    Error,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub status: Status,
    pub detail: Option<String>,
    pub guard: bool,
    pub millis: f64,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suites: Vec<Suite>,
    pub config: Config,
    /// Sorted by check name.
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status == Status::Pass)
    }

    pub fn hit_guard(&self) -> bool {
        self.outcomes.iter().any(|o| o.guard)
    }

    /// Timings vary between runs; leave them out for byte-stable output.
    pub fn to_json(&self, timing: bool) -> Value {
        let checks: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                let mut v = json!({
                    "name": o.name,
                    "status": match o.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                        Status::Error => "error",
                    },
                    "witness": o.detail,
                });
                if timing {
                    v["millis"] = json!((o.millis * 1000.0).round() / 1000.0);
                }
                v
            })
            .collect();
        json!({
            "suites": self.suites.iter().map(|s| s.name()).collect::<Vec<_>>(),
            "max_n": self.config.max_n,
            "seed": self.config.seed,
            "passed": self.passed(),
            "checks": checks,
        })
    }
}

type CheckFn = fn(&Config) -> Result<()>;

fn checks(suite: Suite) -> Vec<(&'static str, CheckFn)> {
    match suite {
        Suite::Arith => vec![
            ("arith.q_binomial_at_one", arith_binomial_at_one),
            ("arith.q_binomial_symmetry", arith_binomial_symmetry),
            ("arith.q_pascal", arith_pascal),
            ("arith.q_multinomial", arith_multinomial),
            ("arith.laurent_ring_axioms", arith_ring_axioms),
            ("arith.qfrac_canonical", arith_qfrac_canonical),
            ("arith.determinants", arith_determinants),
        ],
        Suite::Perms => vec![
            ("perms.counts", perms_counts),
            ("perms.dex_permutations", perms_dex),
            ("perms.dex_decorated", perms_dex_decorated),
            ("perms.eulerian_palindromic", perms_palindromic),
            ("perms.binomial_eulerian_routes", perms_binomial_routes),
            ("perms.alternating_counts", perms_alternating),
        ],
        Suite::QSym => vec![
            ("qsym.ribbon_route_agreement", qsym_ribbons),
            ("qsym.kostka", qsym_kostka),
            ("qsym.product_laws", qsym_product_laws),
            ("qsym.symmetric_elements", qsym_symmetric),
            (
                "qsym.principal_specialization",
                qsym_principal_specialization,
            ),
            ("qsym.json_round_trip", qsym_json),
        ],
        Suite::Eulerian => vec![
            ("eulerian.palindromic", eulerian_palindromic),
            ("eulerian.extract_h", eulerian_extract_h),
            ("eulerian.extract_h_decorated", eulerian_extract_h_decorated),
            ("eulerian.recurrence", eulerian_recurrence),
            ("eulerian.binomial_routes", eulerian_binomial_routes),
            ("eulerian.differences", eulerian_differences),
            ("eulerian.refined_orbits", eulerian_refined_orbits),
            ("eulerian.specialization", eulerian_specialization),
            ("eulerian.generating_function", eulerian_generating_function),
        ],
        Suite::Hilbert => vec![
            ("hilbert.q_uniform_identities", hilbert_identities),
            ("hilbert.special_ranks", hilbert_special_ranks),
            ("hilbert.q_differences", hilbert_differences),
            ("hilbert.fy_brute_force", hilbert_fy_brute_force),
            ("hilbert.sample_matroids", hilbert_samples),
        ],
        Suite::Frobenius => vec![
            ("frobenius.uniform_identities", frobenius_identities),
            ("frobenius.special_ranks", frobenius_special_ranks),
            ("frobenius.specialization_bridge", frobenius_bridge),
        ],
        Suite::RankSelect => vec![
            ("rankselect.boolean_beta", rankselect_boolean_beta),
            ("rankselect.boolean_flag_counts", rankselect_boolean_counts),
            ("rankselect.mobius_consistency", rankselect_mobius),
            (
                "rankselect.equivariant_frobenius",
                rankselect_equivariant_frobenius,
            ),
            (
                "rankselect.uniform_characters",
                rankselect_uniform_characters,
            ),
            ("rankselect.sample_matroids", rankselect_samples),
        ],
        Suite::Cd => vec![
            ("cd.four_routes", cd_four_routes),
            ("cd.nonnegative_counts", cd_counts),
            ("cd.tangent_secant", cd_tangent_secant),
            ("cd.secant_relation", cd_secant_relation),
            ("cd.fy_brute_force", cd_fy_brute_force),
        ],
    }
}

/// Names of the checks a suite runs.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    checks(suite).into_iter().map(|(n, _)| n).collect()
}

/// Run the selected suites concurrently.
pub fn run(suites: &[Suite], config: &Config) -> Report {
    let mut all: Vec<(&'static str, CheckFn)> = suites.iter().flat_map(|&s| checks(s)).collect();
    all.sort_by_key(|(n, _)| *n);
    all.dedup_by_key(|(n, _)| *n);
    let mut outcomes: Vec<Outcome> = all
        .par_iter()
        .map(|&(name, f)| {
            let start = Instant::now();
            let result = f(config);
            let millis = start.elapsed().as_secs_f64() * 1000.0;
            let (status, guard) = match &result {
                Ok(()) => (Status::Pass, false),
                Err(Error::Identity { .. }) => (Status::Fail, false),
                Err(Error::Guard { .. }) => (Status::Error, true),
                Err(_) => (Status::Error, false),
            };
            Outcome {
                name: name.to_string(),
                status,
                detail: result.err().map(|e| e.to_string()),
                guard,
                millis,
            }
        })
        .collect();
    outcomes.sort_by(|a, b| a.name.cmp(&b.name));
    Report {
        suites: suites.to_vec(),
        config: *config,
        outcomes,
    }
}

fn same<T: PartialEq + Display>(what: &str, at: impl Display, got: &T, want: &T) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::identity(what, format!("{at}: {got} vs {want}")))
    }
}

fn holds(what: &str, ok: bool, at: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::identity(what, at()))
    }
}

/// `(r, n)` with `1 <= r <= n <= max_n`, by increasing `n`.
fn ranks(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_n).flat_map(|n| (1..=n).map(move |r| (r, n)))
}

fn samples() -> Result<Vec<(&'static str, MatroidFlats, Vec<GroundPerm>)>> {
    SAMPLE_MATROIDS
        .iter()
        .map(|&(name, text)| load_matroid(text).map(|(m, a)| (name, m, a)))
        .collect()
}

const ARITH_MAX: usize = 10;

fn arith_binomial_at_one(_: &Config) -> Result<()> {
    for n in 0..=ARITH_MAX {
        let mut c = num_bigint::BigInt::from(1);
        for k in 0..=n {
            same(
                "q-binomial at q = 1",
                format!("({n} {k})"),
                &q_binomial(n, k).eval_one(),
                &c,
            )?;
            c = c * (n - k) / (k + 1);
        }
    }
    Ok(())
}

fn arith_binomial_symmetry(_: &Config) -> Result<()> {
    for n in 0..=ARITH_MAX {
        for k in 0..=n {
            same(
                "q-binomial symmetry",
                format!("({n} {k})"),
                &q_binomial(n, k),
                &q_binomial(n, n - k),
            )?;
        }
    }
    Ok(())
}

fn arith_pascal(_: &Config) -> Result<()> {
    for n in 2..=ARITH_MAX {
        for k in 1..n {
            let rhs = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k as u32);
            same(
                "q-Pascal recurrence",
                format!("({n} {k})"),
                &q_binomial(n, k),
                &rhs,
            )?;
        }
    }
    Ok(())
}

fn arith_multinomial(_: &Config) -> Result<()> {
    for n in 0..=ARITH_MAX {
        same(
            "q-multinomial of ones",
            n,
            &q_multinomial(&vec![1; n]),
            &q_factorial(n),
        )?;
        for k in 0..=n {
            same(
                "q-multinomial of two parts",
                format!("({n} {k})"),
                &q_multinomial(&[k, n - k]),
                &q_binomial(n, k),
            )?;
        }
        let product: QPoly = (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(i));
        same("q-factorial", n, &q_factorial(n), &product)?;
    }
    Ok(())
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentQT {
    let mut p = LaurentQT::zero();
    for _ in 0..rng.gen_range(0..5) {
        let t = rng.gen_range(-3..=3);
        let q = QPoly::monomial(rng.gen_range(0..4), rng.gen_range(-5..=5));
        p.add_term(t, &q);
    }
    p
}

fn arith_ring_axioms(cfg: &Config) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for trial in 0..200 {
        let (a, b, c) = (
            random_laurent(&mut rng),
            random_laurent(&mut rng),
            random_laurent(&mut rng),
        );
        let at = || format!("trial {trial}: a = {a}, b = {b}, c = {c}");
        holds(
            "Laurent associativity",
            &(&a * &b) * &c == &a * &(&b * &c),
            at,
        )?;
        holds(
            "Laurent distributivity",
            &a * &(&b + &c) == &(&a * &b) + &(&a * &c),
            at,
        )?;
        holds(
            "Laurent commutativity",
            &a * &b == &b * &a && &a + &b == &b + &a,
            at,
        )?;
        holds("Laurent subtraction", &(&a - &b) + &b == a, at)?;
    }
    Ok(())
}

fn arith_qfrac_canonical(cfg: &Config) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9);
    for trial in 0..100 {
        let mut poly = |nonzero: bool| loop {
            let p = random_laurent(&mut rng).eval_t(1);
            if !nonzero || !p.is_zero() {
                return p;
            }
        };
        let (a, b, c) = (poly(false), poly(true), poly(true));
        let lhs = QFrac::new(a.clone(), b.clone());
        let rhs = QFrac::new(&a * &c, &b * &c);
        same("fraction normal form", format!("trial {trial}"), &lhs, &rhs)?;
    }
    Ok(())
}

fn arith_determinants(_: &Config) -> Result<()> {
    let inv = |k: usize| QFrac::recip_of(q_factorial(k));
    let one = QFrac::one();
    let d = det_qfrac(&[vec![inv(2), one.clone()], vec![inv(3), one.clone()]])?;
    same("2x2 determinant", "cofactor", &d, &(&inv(2) - &inv(3)))?;
    let id: Vec<Vec<QFrac>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i == j { one.clone() } else { QFrac::zero() })
                .collect()
        })
        .collect();
    same("identity determinant", "3x3", &det_qfrac(&id)?, &one)?;
    // upper triangular: product of the diagonal
    let tri: Vec<Vec<QFrac>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if j >= i {
                        inv(i + j + 1)
                    } else {
                        QFrac::zero()
                    }
                })
                .collect()
        })
        .collect();
    let diag = (0..4).fold(one.clone(), |acc, i| &acc * &inv(2 * i + 1));
    same("triangular determinant", "4x4", &det_qfrac(&tri)?, &diag)
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn perms_counts(cfg: &Config) -> Result<()> {
    let mut derangements = [1u64, 0];
    for n in 0..=cfg.max_n {
        let d = if n < 2 {
            derangements[n]
        } else {
            let next = (n as u64 - 1) * (derangements[0] + derangements[1]);
            derangements = [derangements[1], next];
            next
        };
        same(
            "permutation count",
            n,
            &(gen_permutations(n)?.count() as u64),
            &factorial(n),
        )?;
        same(
            "derangement count",
            n,
            &(gen_derangements(n)?.count() as u64),
            &d,
        )?;
        let decorated: u64 = (0..=n).map(|k| factorial(n) / factorial(k)).sum();
        same(
            "decorated permutation count",
            n,
            &(gen_decorated(n)?.count() as u64),
            &decorated,
        )?;
    }
    Ok(())
}

fn perms_dex(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for p in gen_permutations(n)? {
            let dex = p.dex();
            holds("DEX sum", dex.sum() + p.exc() == p.maj(), || {
                format!(
                    "{:?}: DEX = {dex}, maj = {}, exc = {}",
                    p.word(),
                    p.maj(),
                    p.exc()
                )
            })?;
            let want = if p.at(1) == 1 { p.des() } else { p.des() - 1 };
            holds("DEX size", dex.len() == want, || {
                format!("{:?}: DEX = {dex}, des = {}", p.word(), p.des())
            })?;
        }
    }
    Ok(())
}

fn perms_dex_decorated(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n.min(Guard::Decorated.max()) {
        for p in gen_decorated(n)? {
            let dex = p.dex();
            holds(
                "decorated DEX sum",
                dex.sum() as i64 + p.exc() == p.maj(),
                || {
                    format!(
                        "{:?}: DEX = {dex}, maj = {}, exc = {}",
                        p.word(),
                        p.maj(),
                        p.exc()
                    )
                },
            )?;
            if p.is_theta() {
                continue;
            }
            let want = if p.word()[0] <= 1 {
                p.des()
            } else {
                p.des() - 1
            };
            holds("decorated DEX size", dex.len() == want, || {
                format!("{:?}: DEX = {dex}, des = {}", p.word(), p.des())
            })?;
        }
    }
    Ok(())
}

fn perms_palindromic(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        let a = eulerian_a_q(n)?;
        holds("A_n palindromic", a.is_palindromic(n as i32 - 1), || {
            format!("n = {n}: {a}")
        })?;
        let d = eulerian_d_q(n)?;
        holds("d_n palindromic", d.is_palindromic(n as i32), || {
            format!("n = {n}: {d}")
        })?;
        let b = eulerian_binomial_q(n)?;
        holds(
            "binomial Eulerian palindromic",
            b.is_palindromic(n as i32),
            || format!("n = {n}: {b}"),
        )?;
    }
    Ok(())
}

fn perms_binomial_routes(cfg: &Config) -> Result<()> {
    for n in 0..=cfg.max_n {
        eulerian_binomial_q(n)?;
    }
    Ok(())
}

/// Euler zigzag numbers.
const ZIGZAG: [u64; 13] = [
    1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765,
];

fn perms_alternating(cfg: &Config) -> Result<()> {
    for (n, want) in ZIGZAG.iter().enumerate().take(cfg.max_n + 1).skip(1) {
        let count = if n.is_multiple_of(2) {
            gen_reverse_alternating(n)?.count()
        } else {
            gen_alternating(n)?.count()
        } as u64;
        same("zigzag count", n, &count, want)?;
    }
    Ok(())
}

fn qsym_ribbons(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for r in Subset::all_of(n - 1) {
            ribbon_schur(r, n)?;
        }
    }
    Ok(())
}

const KOSTKA_MAX: usize = 5;

fn qsym_kostka(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n.min(KOSTKA_MAX) {
        for nu in partitions(n) {
            let defect = crate::qsym::kostka_defect(&nu)?;
            holds("Kostka decomposition", defect.is_zero(), || {
                format!("nu = {nu:?}: residue {defect}")
            })?;
        }
    }
    Ok(())
}

fn qsym_product_laws(cfg: &Config) -> Result<()> {
    let m = cfg.max_n.min(5);
    let basis: Vec<QSymElem> = (0..=m)
        .flat_map(|n| {
            let subsets: Vec<Subset> = if n == 0 {
                vec![Subset::empty()]
            } else {
                Subset::all_of(n - 1).collect()
            };
            subsets.into_iter().map(move |s| (s, n))
        })
        .map(|(s, n)| {
            if n == 0 {
                Ok(QSymElem::one())
            } else {
                f_basis(s, n)
            }
        })
        .collect::<Result<_>>()?;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            let ab = a.multiply(b)?;
            same(
                "product commutes",
                format!("{a} * {b}"),
                &ab,
                &b.multiply(a)?,
            )?;
            let d = a.degrees()[0] + b.degrees()[0];
            if d <= m {
                let c = h_complete(m - d);
                same(
                    "product associates",
                    format!("{a} * {b} * {c}"),
                    &ab.multiply(&c)?,
                    &a.multiply(&b.multiply(&c)?)?,
                )?;
            }
        }
        same("unit", format!("{a}"), &a.multiply(&QSymElem::one())?, a)?;
    }
    Ok(())
}

fn qsym_symmetric(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for lambda in partitions(n) {
            let s = schur(&lambda)?;
            holds("Schur function symmetric", s.is_symmetric(), || {
                format!("lambda = {lambda:?}: {s}")
            })?;
            let h = h_of_composition(&lambda)?;
            let mut rev = lambda.clone();
            rev.reverse();
            same(
                "h independent of part order",
                format!("{lambda:?}"),
                &h,
                &h_of_composition(&rev)?,
            )?;
        }
        for r in Subset::all_of(n - 1) {
            let x = ribbon_schur(r, n)?;
            holds("ribbon symmetric", x.is_symmetric(), || {
                format!("R = {r}, n = {n}: {x}")
            })?;
        }
    }
    Ok(())
}

fn qsym_principal_specialization(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for lambda in partitions(n) {
            let p = h_of_composition(&lambda)?.ps_normalized(n)?;
            same(
                "specialized h",
                format!("{lambda:?}"),
                &p,
                &LaurentQT::from_qpoly(q_multinomial(&lambda)),
            )?;
        }
    }
    Ok(())
}

fn qsym_json(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n.min(5) {
        let x = q_eulerian(n)?;
        let back = QSymElem::from_json(&x.to_json())?;
        same("JSON round trip", n, &back, &x)?;
    }
    Ok(())
}

fn eulerian_palindromic(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for k in 0..=n {
            for j in 0..=n - k {
                same(
                    "Q_njk palindromic",
                    format!("({n},{j},{k})"),
                    &q_njk(n, j, k)?,
                    &q_njk(n, n - k - j, k)?,
                )?;
            }
        }
    }
    Ok(())
}

fn eulerian_extract_h(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for k in 0..=n {
            for j in 0..=n - k {
                let rhs = h_complete(k).multiply(&q_njk(n - k, j, 0)?)?;
                same(
                    "Q_njk = h_k Q_(n-k)j0",
                    format!("({n},{j},{k})"),
                    &q_njk(n, j, k)?,
                    &rhs,
                )?;
            }
        }
    }
    Ok(())
}

fn eulerian_extract_h_decorated(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n.min(Guard::Decorated.max()) {
        for k in 0..=n {
            for j in 0..=n - k + 1 {
                let rhs = h_complete(k).multiply(&qtilde_njk(n - k, j, 0)?)?;
                same(
                    "decorated Q_njk extraction",
                    format!("({n},{j},{k})"),
                    &qtilde_njk(n, j, k)?,
                    &rhs,
                )?;
            }
        }
    }
    Ok(())
}

fn eulerian_recurrence(cfg: &Config) -> Result<()> {
    for n in 0..=cfg.max_n {
        same("Q_n recurrence", n, &q_by_recurrence(n)?, &q_eulerian(n)?)?;
        let q = q_eulerian(n)?;
        holds("Q_n symmetric", q.is_symmetric(), || format!("n = {n}"))?;
    }
    Ok(())
}

fn eulerian_binomial_routes(cfg: &Config) -> Result<()> {
    for n in 0..=cfg.max_n.min(Guard::Decorated.max()) {
        qtilde(n)?;
        qtilde_refined(n)?;
    }
    Ok(())
}

fn eulerian_differences(cfg: &Config) -> Result<()> {
    for n in 2..=cfg.max_n {
        for r in 1..n {
            let chow =
                &grfrob_uniform(r + 1, n, Variant::Chow)? - &grfrob_uniform(r, n, Variant::Chow)?;
            same(
                "Chow Frobenius difference",
                format!("n = {n}, r = {r}"),
                &delta_chow(n, r)?,
                &chow,
            )?;
            let aug = &grfrob_uniform(r + 1, n, Variant::Augmented)?
                - &grfrob_uniform(r, n, Variant::Augmented)?;
            same(
                "augmented Frobenius difference",
                format!("n = {n}, r = {r}"),
                &delta_aug(n, r)?,
                &aug,
            )?;
        }
    }
    Ok(())
}

fn eulerian_refined_orbits(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for k in 0..=n {
            for j in 0..=n - k {
                grfrob_refined(n, j, k, Variant::Chow)?;
            }
            for j in 0..=n - k + 1 {
                grfrob_refined(n, j, k, Variant::Augmented)?;
            }
        }
    }
    Ok(())
}

fn eulerian_specialization(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        same(
            "specialized Q_n",
            n,
            &q_eulerian(n)?.ps_normalized(n)?,
            &eulerian_a_q(n)?,
        )?;
        same(
            "specialized Q0_n",
            n,
            &q0(n)?.ps_normalized(n)?,
            &eulerian_d_q(n)?,
        )?;
        same(
            "specialized binomial Q_n",
            n,
            &qtilde(n)?.ps_normalized(n)?,
            &eulerian_binomial_q(n)?,
        )?;
    }
    Ok(())
}

fn eulerian_generating_function(cfg: &Config) -> Result<()> {
    let n = cfg.max_n.min(Guard::GeneratingFunction.max());
    holds("generating function expansion", gf_check(n)?, || {
        format!("up to n = {n}")
    })
}

fn hilbert_identities(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        let at = format!("r = {r}, n = {n}");
        let chow = hilb_q_uniform(r, n, Variant::Chow)?;
        same(
            "Chow by permutations",
            &at,
            &chow,
            &hilb_chow_by_permutations(r, n)?,
        )?;
        same(
            "Chow by derangements",
            &at,
            &chow,
            &hilb_chow_by_derangements(r, n)?,
        )?;
        let aug = hilb_q_uniform(r, n, Variant::Augmented)?;
        same(
            "augmented by Eulerian",
            &at,
            &aug,
            &hilb_aug_by_eulerian(r, n)?,
        )?;
        same(
            "augmented by decorated",
            &at,
            &aug,
            &hilb_aug_by_decorated(r, n)?,
        )?;
    }
    Ok(())
}

fn hilbert_special_ranks(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        same(
            "Chow r = n",
            n,
            &hilb_q_uniform(n, n, Variant::Chow)?,
            &eulerian_a_q(n)?,
        )?;
        same(
            "augmented r = n",
            n,
            &hilb_q_uniform(n, n, Variant::Augmented)?,
            &eulerian_binomial_q(n)?,
        )?;
        if n >= 2 {
            same(
                "Chow r = n-1",
                n,
                &hilb_q_uniform(n - 1, n, Variant::Chow)?,
                &eulerian_d_q(n)?.shift_t(-1),
            )?;
            same(
                "augmented r = n-1",
                n,
                &hilb_q_uniform(n - 1, n, Variant::Augmented)?,
                &eulerian_a_q(n)?,
            )?;
        }
    }
    Ok(())
}

fn hilbert_differences(cfg: &Config) -> Result<()> {
    for n in 2..=cfg.max_n {
        for r in 1..n {
            let at = format!("n = {n}, r = {r}");
            let chow =
                &hilb_q_uniform(r + 1, n, Variant::Chow)? - &hilb_q_uniform(r, n, Variant::Chow)?;
            let (a, b) = hilb_chow_difference(n, r)?;
            same("Chow q-difference by derangements", &at, &a, &chow)?;
            same("Chow q-difference by permutations", &at, &b, &chow)?;
            let aug = &hilb_q_uniform(r + 1, n, Variant::Augmented)?
                - &hilb_q_uniform(r, n, Variant::Augmented)?;
            let (a, b) = hilb_aug_difference(n, r)?;
            same("augmented q-difference by Eulerian", &at, &a, &aug)?;
            same("augmented q-difference by decorated", &at, &b, &aug)?;
        }
    }
    Ok(())
}

fn hilbert_fy_brute_force(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        let m = MatroidFlats::uniform(r, n)?;
        for v in Variant::BOTH {
            let h = hilb(&m, v)?;
            same(
                "FY count vs q = 1",
                format!("U({r},{n}) {v}"),
                &h,
                &hilb_q_uniform(r, n, v)?.eval_q_one(),
            )?;
            holds(
                "FY Hilbert series palindromic",
                h.is_palindromic(v.top_degree(r) as i32),
                || format!("U({r},{n}) {v}: {h}"),
            )?;
        }
    }
    Ok(())
}

fn hilbert_samples(_: &Config) -> Result<()> {
    for (name, m, _) in samples()? {
        for v in Variant::BOTH {
            let h = hilb(&m, v)?;
            let deg = v.top_degree(m.rank()) as i32;
            holds(
                "FY Hilbert series palindromic",
                h.is_palindromic(deg) && h.has_nonnegative_coeffs(),
                || format!("{name} {v}: {h}"),
            )?;
            holds(
                "FY Hilbert series starts at 1",
                h.coeff(0).is_one() && h.min_t() == Some(0),
                || format!("{name} {v}: {h}"),
            )?;
        }
    }
    Ok(())
}

fn frobenius_identities(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        let at = format!("r = {r}, n = {n}");
        let chow = grfrob_uniform(r, n, Variant::Chow)?;
        same("Chow Frobenius by h", &at, &chow, &frob_chow_by_h(r, n)?)?;
        same(
            "Chow Frobenius by permutations",
            &at,
            &chow,
            &frob_chow_by_permutations(r, n)?,
        )?;
        let aug = grfrob_uniform(r, n, Variant::Augmented)?;
        same("augmented Frobenius by h", &at, &aug, &frob_aug_by_h(r, n)?)?;
        same(
            "augmented Frobenius by decorated",
            &at,
            &aug,
            &frob_aug_by_decorated(r, n)?,
        )?;
    }
    Ok(())
}

fn frobenius_special_ranks(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        same(
            "Chow r = n",
            n,
            &grfrob_uniform(n, n, Variant::Chow)?,
            &q_eulerian(n)?,
        )?;
        same(
            "augmented r = n",
            n,
            &grfrob_uniform(n, n, Variant::Augmented)?,
            &qtilde(n)?,
        )?;
        if n >= 2 {
            same(
                "Chow r = n-1",
                n,
                &grfrob_uniform(n - 1, n, Variant::Chow)?,
                &q0(n)?.shift_t(-1),
            )?;
            same(
                "augmented r = n-1",
                n,
                &grfrob_uniform(n - 1, n, Variant::Augmented)?,
                &q_eulerian(n)?,
            )?;
        }
    }
    Ok(())
}

fn frobenius_bridge(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        let m = MatroidFlats::uniform(r, n)?;
        for v in Variant::BOTH {
            let at = format!("U({r},{n}) {v}");
            let frob = grfrob_uniform(r, n, v)?;
            holds("Frobenius series symmetric", frob.is_symmetric(), || {
                at.clone()
            })?;
            let specialized = frob.ps_normalized(n)?;
            same(
                "specialized Frobenius vs q-uniform",
                &at,
                &specialized,
                &hilb_q_uniform(r, n, v)?,
            )?;
            same(
                "specialized Frobenius at q = 1 vs FY",
                &at,
                &specialized.eval_q_one(),
                &hilb(&m, v)?,
            )?;
        }
    }
    Ok(())
}

fn rankselect_boolean_beta(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        for s in Subset::all_of(n - 1) {
            beta_boolean(s, n)?;
        }
    }
    Ok(())
}

fn rankselect_boolean_counts(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        let m = MatroidFlats::boolean(n)?;
        let mut by_des = std::collections::BTreeMap::<Subset, i128>::new();
        for p in gen_permutations(n)? {
            *by_des.entry(p.des_set()).or_default() += 1;
        }
        for s in Subset::all_of(n - 1) {
            let at = format!("n = {n}, S = {s}");
            let multinomial = q_multinomial(&s.composition(n)).eval_one();
            same(
                "flag f of the Boolean lattice",
                &at,
                &num_bigint::BigInt::from(flag_f(&m, s)?),
                &multinomial,
            )?;
            same(
                "flag h of the Boolean lattice",
                &at,
                &flag_h(&m, s)?,
                &by_des.get(&s).copied().unwrap_or(0),
            )?;
        }
    }
    Ok(())
}

fn mobius_checks(name: &str, m: &MatroidFlats) -> Result<()> {
    for s in Subset::all_of(m.rank().saturating_sub(1)) {
        let h = flag_h(m, s)?;
        let mu = mobius_rank_selected(m, s)?;
        let signed = if s.len() % 2 == 0 { -mu } else { mu };
        same(
            "flag h vs Möbius function",
            format!("{name}, S = {s}"),
            &h,
            &signed,
        )?;
        holds("flag h nonnegative", h >= 0, || {
            format!("{name}, S = {s}: {h}")
        })?;
    }
    Ok(())
}

fn rankselect_mobius(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        mobius_checks(&format!("U({r},{n})"), &MatroidFlats::uniform(r, n)?)?;
    }
    for (name, m, _) in samples()? {
        mobius_checks(name, &m)?;
    }
    Ok(())
}

fn rankselect_equivariant_frobenius(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        for v in Variant::BOTH {
            let at = format!("U({r},{n}) {v}");
            let got = grfrob_uniform(r, n, v)?.eval_t(-1);
            let ribbon = ribbon_schur(descent_class(r, v), n)?;
            let want = match v {
                Variant::Chow if !r.is_multiple_of(2) => signed_qsym(ribbon, (r - 1) / 2),
                Variant::Augmented if r.is_multiple_of(2) => signed_qsym(ribbon, r / 2),
                _ => QSymElem::zero(),
            };
            same("Frobenius series at t = -1", &at, &got, &want)?;
        }
    }
    Ok(())
}

fn signed_qsym(x: QSymElem, k: usize) -> QSymElem {
    if k.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// Identity, `(1 2)`, the long cycle and `count` seeded random elements.
pub fn test_elements(n: usize, count: usize, seed: u64) -> Vec<GroundPerm> {
    let mut out = vec![GroundPerm::identity(n)];
    if n >= 2 {
        out.push(GroundPerm::transposition(n, 1, 2));
    }
    out.push(GroundPerm::long_cycle(n));
    out.extend(GroundPerm::random(n, count, seed));
    out
}

const CHARACTER_MAX: usize = 6;

fn rankselect_uniform_characters(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n.min(CHARACTER_MAX)) {
        let m = MatroidFlats::uniform(r, n)?;
        for g in test_elements(n, 20, cfg.seed.wrapping_add(n as u64)) {
            for v in Variant::BOTH {
                cd_character(&m, &g, v)?;
            }
        }
    }
    Ok(())
}

fn rankselect_samples(_: &Config) -> Result<()> {
    for (name, m, auts) in samples()? {
        holds("sample lists automorphisms", !auts.is_empty(), || {
            name.to_string()
        })?;
        for g in &auts {
            for v in Variant::BOTH {
                cd_character(&m, g, v)?;
            }
        }
    }
    Ok(())
}

fn cd_four_routes(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        for v in Variant::BOTH {
            let rep = CdReport::compute(r, n, v)?;
            holds("Charney–Davis routes agree", rep.agreement, || {
                crate::render::cd_report(&rep, crate::render::OutFormat::Latex)
            })?;
            holds(
                "Charney–Davis nonnegative",
                rep.normalized.has_nonnegative_coeffs(),
                || format!("r = {r}, n = {n} {v}: {}", rep.normalized),
            )?;
        }
    }
    Ok(())
}

fn cd_counts(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        let perms: Vec<Subset> = gen_permutations(n)?.map(|p| p.des_set()).collect();
        for r in 1..=n {
            for v in Variant::BOTH {
                let class = descent_class(r, v);
                let vanish = matches!(v, Variant::Chow if r.is_multiple_of(2))
                    || matches!(v, Variant::Augmented if !r.is_multiple_of(2));
                let count = if vanish {
                    0
                } else {
                    perms.iter().filter(|&&s| s == class).count()
                };
                let normalized =
                    cd_of_hilbert(&hilb_q_uniform(r, n, v)?.eval_q_one(), v.top_degree(r));
                same(
                    "Charney–Davis at q = 1 vs descent class",
                    format!("r = {r}, n = {n} {v}"),
                    &normalized,
                    &LaurentQT::constant(count),
                )?;
            }
        }
    }
    Ok(())
}

fn cd_tangent_secant(cfg: &Config) -> Result<()> {
    for n in 1..=cfg.max_n {
        let (v, zero) = if !n.is_multiple_of(2) {
            (Variant::Chow, Variant::Augmented)
        } else {
            (Variant::Augmented, Variant::Chow)
        };
        let alternating = if !n.is_multiple_of(2) {
            gen_alternating(n)?.count()
        } else {
            gen_reverse_alternating(n)?.count()
        };
        let at = format!("n = {n}");
        let cd_n = |v: Variant| -> Result<LaurentQT> {
            Ok(cd_of_hilbert(
                &hilb_q_uniform(n, n, v)?.eval_q_one(),
                v.top_degree(n),
            ))
        };
        same(
            "Charney–Davis of U(n,n) vs zigzag number",
            &at,
            &cd_n(v)?,
            &LaurentQT::constant(alternating),
        )?;
        same(
            "vanishing Charney–Davis of U(n,n)",
            &at,
            &cd_n(zero)?,
            &LaurentQT::zero(),
        )?;
    }
    Ok(())
}

fn cd_secant_relation(cfg: &Config) -> Result<()> {
    for k in 0..=cfg.max_n / 2 {
        let (e, e_star) = secant_numbers(k)?;
        same(
            "q-secant number at q = 1",
            2 * k,
            &e.eval_one(),
            &num_bigint::BigInt::from(ZIGZAG[2 * k]),
        )?;
        same(
            "q-tangent number at q = 1",
            2 * k + 1,
            &e_star.eval_one(),
            &num_bigint::BigInt::from(ZIGZAG[2 * k + 1]),
        )?;
    }
    Ok(())
}

fn cd_fy_brute_force(cfg: &Config) -> Result<()> {
    for (r, n) in ranks(cfg.max_n) {
        let m = MatroidFlats::uniform(r, n)?;
        for v in Variant::BOTH {
            let want = cd_of_hilbert(&hilb_q_uniform(r, n, v)?.eval_q_one(), v.top_degree(r));
            same(
                "FY Charney–Davis vs q = 1",
                format!("U({r},{n}) {v}"),
                &cd(&m, v)?,
                &want,
            )?;
        }
    }
    Ok(())
}
