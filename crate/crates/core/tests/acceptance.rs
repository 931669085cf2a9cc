//! Acceptance run: eleven exact identities at their full bounds, one
//! PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use mcq_core::charney::{descent_class, CdReport};
use mcq_core::chowfy::identities::*;
use mcq_core::chowfy::{
    cd_of_hilbert, grfrob_refined, grfrob_uniform, hilb, hilb_q_uniform, MatroidFlats,
};
use mcq_core::eulerian::{
    delta_aug, delta_chow, gf_check, gf_series, gf_series_refined, q0, q_eulerian, q_njk, qtilde,
    qtilde_njk,
};
use mcq_core::permstat::{
    eulerian_a_q, eulerian_binomial_q, eulerian_d_q, gen_alternating, gen_decorated,
    gen_permutations, gen_reverse_alternating,
};
use mcq_core::qsym::{
    h_complete, h_of_composition, kostka, partitions, ribbon_schur, schur, QSymElem,
};
use mcq_core::rankselect::{
    alpha_boolean, beta_boolean, beta_character, cd_character, flag_h, mobius_rank_selected,
    GroundPerm,
};
use mcq_core::verify::{load_matroid, test_elements};
use mcq_core::{LaurentQT, Subset, Variant};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

macro_rules! eq {
    ($got:expr, $want:expr, $($fmt:tt)+) => {{
        let (got, want) = (&$got, &$want);
        if got != want {
            return Err(format!("{}: {} vs {}", format!($($fmt)+), got, want));
        }
    }};
}

fn e(err: mcq_core::Error) -> String {
    err.to_string()
}

fn ranks(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_n).flat_map(|n| (1..=n).map(move |r| (r, n)))
}

fn hilbert_q_identities() -> Outcome {
    for (r, n) in ranks(7) {
        let chow = hilb_q_uniform(r, n, Variant::Chow).map_err(e)?;
        eq!(
            chow,
            hilb_chow_by_permutations(r, n).map_err(e)?,
            "Chow by permutations r={r} n={n}"
        );
        eq!(
            chow,
            hilb_chow_by_derangements(r, n).map_err(e)?,
            "Chow by derangements r={r} n={n}"
        );
        let aug = hilb_q_uniform(r, n, Variant::Augmented).map_err(e)?;
        eq!(
            aug,
            hilb_aug_by_eulerian(r, n).map_err(e)?,
            "augmented by Eulerian r={r} n={n}"
        );
        eq!(
            aug,
            hilb_aug_by_decorated(r, n).map_err(e)?,
            "augmented by decorated r={r} n={n}"
        );
    }
    Ok(())
}

fn special_ranks() -> Outcome {
    for n in 1..=7 {
        let a = eulerian_a_q(n).map_err(e)?;
        eq!(
            hilb_q_uniform(n, n, Variant::Chow).map_err(e)?,
            a,
            "Chow r=n, n={n}"
        );
        eq!(
            hilb_q_uniform(n, n, Variant::Augmented).map_err(e)?,
            eulerian_binomial_q(n).map_err(e)?,
            "augmented r=n, n={n}"
        );
        if n >= 2 {
            eq!(
                hilb_q_uniform(n - 1, n, Variant::Chow).map_err(e)?,
                eulerian_d_q(n).map_err(e)?.shift_t(-1),
                "Chow r=n-1, n={n}"
            );
            eq!(
                hilb_q_uniform(n - 1, n, Variant::Augmented).map_err(e)?,
                a,
                "augmented r=n-1, n={n}"
            );
        }
    }
    Ok(())
}

fn frobenius_identities() -> Outcome {
    for (r, n) in ranks(7) {
        let chow = grfrob_uniform(r, n, Variant::Chow).map_err(e)?;
        eq!(
            chow,
            frob_chow_by_h(r, n).map_err(e)?,
            "Chow (i) r={r} n={n}"
        );
        eq!(
            chow,
            frob_chow_by_permutations(r, n).map_err(e)?,
            "Chow (ii) r={r} n={n}"
        );
        let aug = grfrob_uniform(r, n, Variant::Augmented).map_err(e)?;
        eq!(
            aug,
            frob_aug_by_h(r, n).map_err(e)?,
            "augmented (i) r={r} n={n}"
        );
        eq!(
            aug,
            frob_aug_by_decorated(r, n).map_err(e)?,
            "augmented (ii) r={r} n={n}"
        );
    }
    for n in 1..=7 {
        let q = q_eulerian(n).map_err(e)?;
        eq!(
            grfrob_uniform(n, n, Variant::Chow).map_err(e)?,
            q,
            "Chow r=n, n={n}"
        );
        eq!(
            grfrob_uniform(n, n, Variant::Augmented).map_err(e)?,
            qtilde(n).map_err(e)?,
            "augmented r=n, n={n}"
        );
        if n >= 2 {
            eq!(
                grfrob_uniform(n - 1, n, Variant::Chow).map_err(e)?,
                q0(n).map_err(e)?.shift_t(-1),
                "Chow r=n-1, n={n}"
            );
            eq!(
                grfrob_uniform(n - 1, n, Variant::Augmented).map_err(e)?,
                q,
                "augmented r=n-1, n={n}"
            );
        }
    }
    Ok(())
}

fn specialization_bridge() -> Outcome {
    for (r, n) in ranks(7) {
        let m = MatroidFlats::uniform(r, n).map_err(e)?;
        for v in Variant::BOTH {
            let ps = grfrob_uniform(r, n, v)
                .map_err(e)?
                .ps_normalized(n)
                .map_err(e)?;
            let q_uniform = hilb_q_uniform(r, n, v).map_err(e)?;
            eq!(
                ps,
                q_uniform,
                "specialized Frobenius vs q-uniform, U({r},{n}) {v}"
            );
            eq!(
                ps.eval_q_one(),
                hilb(&m, v).map_err(e)?,
                "q = 1 vs FY basis, U({r},{n}) {v}"
            );
        }
    }
    Ok(())
}

fn lemma_suite() -> Outcome {
    for n in 1..=7 {
        for k in 0..=n {
            for j in 0..=n - k {
                let x = q_njk(n, j, k).map_err(e)?;
                eq!(
                    x,
                    q_njk(n, n - k - j, k).map_err(e)?,
                    "palindromicity ({n},{j},{k})"
                );
                let extracted = h_complete(k)
                    .multiply(&q_njk(n - k, j, 0).map_err(e)?)
                    .map_err(e)?;
                eq!(x, extracted, "extraction ({n},{j},{k})");
                eq!(
                    grfrob_refined(n, j, k, Variant::Chow).map_err(e)?,
                    x,
                    "Chow orbits ({n},{j},{k})"
                );
            }
            for j in 0..=n - k + 1 {
                let x = qtilde_njk(n, j, k).map_err(e)?;
                let extracted = h_complete(k)
                    .multiply(&qtilde_njk(n - k, j, 0).map_err(e)?)
                    .map_err(e)?;
                eq!(x, extracted, "decorated extraction ({n},{j},{k})");
                eq!(
                    grfrob_refined(n, j, k, Variant::Augmented).map_err(e)?,
                    x,
                    "augmented orbits ({n},{j},{k})"
                );
            }
        }
        for r in 1..n {
            let d = &grfrob_uniform(r + 1, n, Variant::Chow).map_err(e)?
                - &grfrob_uniform(r, n, Variant::Chow).map_err(e)?;
            eq!(
                delta_chow(n, r).map_err(e)?,
                d,
                "Chow difference n={n} r={r}"
            );
            let d = &grfrob_uniform(r + 1, n, Variant::Augmented).map_err(e)?
                - &grfrob_uniform(r, n, Variant::Augmented).map_err(e)?;
            eq!(
                delta_aug(n, r).map_err(e)?,
                d,
                "augmented difference n={n} r={r}"
            );

            let d = &hilb_q_uniform(r + 1, n, Variant::Chow).map_err(e)?
                - &hilb_q_uniform(r, n, Variant::Chow).map_err(e)?;
            let (a, b) = hilb_chow_difference(n, r).map_err(e)?;
            eq!(a, d, "Chow q-difference by derangements n={n} r={r}");
            eq!(b, d, "Chow q-difference by permutations n={n} r={r}");
            let d = &hilb_q_uniform(r + 1, n, Variant::Augmented).map_err(e)?
                - &hilb_q_uniform(r, n, Variant::Augmented).map_err(e)?;
            let (a, b) = hilb_aug_difference(n, r).map_err(e)?;
            eq!(a, d, "augmented q-difference by Eulerian n={n} r={r}");
            eq!(b, d, "augmented q-difference by decorated n={n} r={r}");
        }
    }
    Ok(())
}

fn dex_suite() -> Outcome {
    for n in 1..=8 {
        for p in gen_permutations(n).map_err(e)? {
            let dex = p.dex();
            ensure!(
                dex.sum() + p.exc() == p.maj(),
                "DEX sum fails at {:?}",
                p.word()
            );
            let want = if p.at(1) == 1 { p.des() } else { p.des() - 1 };
            ensure!(dex.len() == want, "|DEX| fails at {:?}", p.word());
        }
    }
    for n in 1..=7 {
        for p in gen_decorated(n).map_err(e)? {
            let dex = p.dex();
            ensure!(
                dex.sum() as i64 + p.exc() == p.maj(),
                "decorated DEX sum fails at {:?}",
                p.word()
            );
            if !p.is_theta() {
                let want = if p.word()[0] <= 1 {
                    p.des()
                } else {
                    p.des() - 1
                };
                ensure!(dex.len() == want, "decorated |DEX| fails at {:?}", p.word());
            }
        }
    }
    Ok(())
}

fn generating_function() -> Outcome {
    ensure!(gf_check(6).map_err(e)?, "series check reported a mismatch");
    let series = gf_series(6).map_err(e)?;
    let refined = gf_series_refined(6).map_err(e)?;
    for n in 0..=6 {
        eq!(series[n], q_eulerian(n).map_err(e)?, "coefficient of z^{n}");
        let mut want: BTreeMap<usize, QSymElem> = BTreeMap::new();
        for k in 0..=n {
            let mut x = QSymElem::zero();
            for j in 0..=n - k {
                x += &q_njk(n, j, k).map_err(e)?.shift_t(j as i32);
            }
            if !x.is_zero() {
                want.insert(k, x);
            }
        }
        let got: BTreeMap<usize, QSymElem> = refined[n]
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(&k, x)| (k, x.clone()))
            .collect();
        ensure!(
            got == want,
            "refined coefficient of z^{n}: {got:?} vs {want:?}"
        );
    }
    Ok(())
}

fn alternating_count(n: usize) -> Result<usize, String> {
    Ok(if n % 2 == 1 {
        gen_alternating(n).map_err(e)?.count()
    } else {
        gen_reverse_alternating(n).map_err(e)?.count()
    })
}

fn charney_davis() -> Outcome {
    for n in 1..=7 {
        let des: Vec<Subset> = gen_permutations(n)
            .map_err(e)?
            .map(|p| p.des_set())
            .collect();
        for r in 1..=n {
            for v in Variant::BOTH {
                let rep = CdReport::compute(r, n, v).map_err(e)?;
                eq!(rep.descents, rep.eval, "descent route r={r} n={n} {v}");
                eq!(rep.secant, rep.eval, "secant route r={r} n={n} {v}");
                let vanishes = match v {
                    Variant::Chow => r % 2 == 0,
                    Variant::Augmented => r % 2 == 1,
                };
                match &rep.determinant {
                    Some(d) => eq!(*d, rep.eval, "determinant route r={r} n={n} {v}"),
                    None => ensure!(
                        vanishes && rep.eval.is_zero(),
                        "missing determinant r={r} n={n} {v}"
                    ),
                }
                ensure!(
                    rep.normalized.has_nonnegative_coeffs(),
                    "negative coefficient r={r} n={n} {v}: {}",
                    rep.normalized
                );
                let count = if vanishes {
                    0
                } else {
                    des.iter().filter(|&&s| s == descent_class(r, v)).count()
                };
                eq!(
                    rep.normalized.eval_q_one(),
                    LaurentQT::constant(count),
                    "q = 1 count r={r} n={n} {v}"
                );
            }
        }
    }
    for n in 1..=8 {
        let (live, dead) = if n % 2 == 1 {
            (Variant::Chow, Variant::Augmented)
        } else {
            (Variant::Augmented, Variant::Chow)
        };
        let cd = |v: Variant| -> Result<LaurentQT, String> {
            Ok(cd_of_hilbert(
                &hilb_q_uniform(n, n, v).map_err(e)?.eval_q_one(),
                v.top_degree(n),
            ))
        };
        eq!(
            cd(live)?,
            LaurentQT::constant(alternating_count(n)?),
            "zigzag number n={n}"
        );
        eq!(cd(dead)?, LaurentQT::zero(), "vanishing value n={n}");
    }
    Ok(())
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

const FILE_MATROIDS: [&str; 5] = [
    "three_point_line",
    "k4",
    "fano",
    "u23_plus_u22",
    "parallel_pair",
];

type Sample = (&'static str, MatroidFlats, Vec<GroundPerm>);

fn file_matroids() -> Result<Vec<Sample>, String> {
    FILE_MATROIDS
        .iter()
        .map(|&name| {
            let path = data_dir().join(format!("{name}.json"));
            let text = std::fs::read_to_string(&path)
                .map_err(|err| format!("{}: {err}", path.display()))?;
            let (m, auts) = load_matroid(&text).map_err(e)?;
            Ok((name, m, auts))
        })
        .collect()
}

fn sign(k: usize) -> i128 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn equivariant_cd() -> Outcome {
    for (r, n) in ranks(7) {
        for v in Variant::BOTH {
            let got = grfrob_uniform(r, n, v).map_err(e)?.eval_t(-1);
            let ribbon = ribbon_schur(descent_class(r, v), n).map_err(e)?;
            let want = match v {
                Variant::Chow if r % 2 == 1 => {
                    ribbon.scale(&LaurentQT::constant(sign((r - 1) / 2)))
                }
                Variant::Augmented if r % 2 == 0 => ribbon.scale(&LaurentQT::constant(sign(r / 2))),
                _ => QSymElem::zero(),
            };
            eq!(got, want, "Frobenius series at t = -1, U({r},{n}) {v}");
        }
    }
    for (r, n) in ranks(6) {
        let m = MatroidFlats::uniform(r, n).map_err(e)?;
        for g in test_elements(n, 20, 2024 + n as u64) {
            for v in Variant::BOTH {
                let value = cd_character(&m, &g, v).map_err(e)?;
                let predicted = match v {
                    Variant::Chow if r % 2 == 1 => {
                        sign((r - 1) / 2)
                            * beta_character(&m, &g, descent_class(r, v)).map_err(e)?
                    }
                    Variant::Augmented if r % 2 == 0 => {
                        sign(r / 2) * beta_character(&m, &g, descent_class(r, v)).map_err(e)?
                    }
                    _ => 0,
                };
                eq!(value, predicted, "character at {g}, U({r},{n}) {v}");
            }
        }
    }
    let files = file_matroids()?;
    let non_uniform = files.iter().filter(|(name, _, _)| *name != "u23").count();
    ensure!(non_uniform >= 2, "need two non-uniform file matroids");
    for (name, m, auts) in &files {
        ensure!(auts.len() > 1, "{name} lists no nontrivial automorphism");
        for s in Subset::all_of(m.rank() - 1) {
            let h = flag_h(m, s).map_err(e)?;
            ensure!(h >= 0, "{name}: flag h({s}) = {h}");
        }
        for g in auts {
            for v in Variant::BOTH {
                cd_character(m, g, v).map_err(e)?;
            }
        }
    }
    Ok(())
}

fn rank_selection() -> Outcome {
    for n in 1..=7 {
        for s in Subset::all_of(n - 1) {
            let mut alternating = QSymElem::zero();
            for t in s.subsets() {
                alternating += &alpha_boolean(t, n)
                    .map_err(e)?
                    .scale(&LaurentQT::constant(sign(s.len() - t.len())));
            }
            let ribbon = ribbon_schur(s, n).map_err(e)?;
            eq!(
                alternating,
                ribbon,
                "inclusion-exclusion vs ribbon, S={s} n={n}"
            );
            eq!(beta_boolean(s, n).map_err(e)?, ribbon, "beta, S={s} n={n}");
        }
    }
    let mut all: Vec<(String, MatroidFlats)> = Vec::new();
    for (name, m, _) in file_matroids()? {
        all.push((name.to_string(), m));
    }
    for (r, n) in ranks(7) {
        all.push((
            format!("U({r},{n})"),
            MatroidFlats::uniform(r, n).map_err(e)?,
        ));
    }
    for (name, m) in &all {
        for s in Subset::all_of(m.rank() - 1) {
            let h = flag_h(m, s).map_err(e)?;
            let mu = mobius_rank_selected(m, s).map_err(e)?;
            eq!(h, sign(s.len() + 1) * mu, "flag h vs Möbius, {name} S={s}");
            ensure!(h >= 0, "{name}: flag h({s}) = {h}");
        }
    }
    Ok(())
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    Subset::all_of(n - 1).map(|s| s.composition(n)).collect()
}

fn kostka_cross_check() -> Outcome {
    for n in 1..=5 {
        for nu in compositions(n) {
            let mut rhs = QSymElem::zero();
            for lambda in partitions(n) {
                let k = kostka(&lambda, &nu);
                rhs += &schur(&lambda).map_err(e)?.scale(&LaurentQT::constant(k));
            }
            eq!(h_of_composition(&nu).map_err(e)?, rhs, "nu = {nu:?}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        (
            "Hilbert q-identities, 1 <= r <= n <= 7",
            hilbert_q_identities,
        ),
        ("special ranks r = n, n-1 for n <= 7", special_ranks),
        (
            "Frobenius identities and special ranks, n <= 7",
            frobenius_identities,
        ),
        (
            "specialization bridge and FY basis count, n <= 7",
            specialization_bridge,
        ),
        (
            "palindromicity, extraction, differences, refined orbits, n <= 7",
            lemma_suite,
        ),
        (
            "DEX statistics on S_n (n <= 8) and decorated permutations (n <= 7)",
            dex_suite,
        ),
        ("generating function, n <= 6", generating_function),
        (
            "Charney-Davis routes and nonnegativity, n <= 7; zigzag numbers, n <= 8",
            charney_davis,
        ),
        ("equivariant Charney-Davis characters", equivariant_cd),
        (
            "rank-selected Boolean homology and Möbius consistency",
            rank_selection,
        ),
        ("Kostka decomposition of h_nu, n <= 5", kostka_cross_check),
    ];
    let mut failures = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {label}  [{secs:.2}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {label}  [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
