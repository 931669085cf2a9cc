//! Small worked values, computed by hand or by brute force and frozen here.

use mcq_core::charney::{
    cd_descents, cd_determinant, cd_eval, cd_secant, cd_single_determinant, secant_numbers,
};
use mcq_core::chowfy::{fy_basis, grfrob_refined, hilb, MatroidFlats};
use mcq_core::eulerian::{q_eulerian, q_njk, qtilde_refined};
use mcq_core::exactalg::{det_qfrac, q_binomial, q_factorial, q_int, q_multinomial};
use mcq_core::permstat::{
    eulerian_a_q, gen_decorated, gen_permutations, DecoratedPermutation, Permutation,
};
use mcq_core::qsym::{f_basis, h_complete, h_of_composition, ribbon_schur, QSymElem};
use mcq_core::rankselect::{
    beta_boolean, cd_character, fixed_chain_count, flag_f, flag_h, GroundPerm,
};
use mcq_core::{Error, LaurentQT, QFrac, QPoly, Subset, Variant};

fn set(e: &[usize]) -> Subset {
    Subset::from_elems(e.iter().copied())
}

fn f(e: &[usize], n: usize) -> QSymElem {
    f_basis(set(e), n).unwrap()
}

fn q(cs: &[i64]) -> QPoly {
    QPoly::from_dense(cs)
}

fn lq(cs: &[i64]) -> LaurentQT {
    LaurentQT::from_qpoly(q(cs))
}

#[test]
fn q_numbers() {
    assert_eq!(q_int(0), QPoly::zero());
    assert_eq!(q_int(3), q(&[1, 1, 1]));
    assert_eq!(q_binomial(4, 2), q(&[1, 1, 2, 1, 1]));
    assert_eq!(q_binomial(7, 0), QPoly::one());
    assert_eq!(q_multinomial(&[1, 1, 1]), q(&[1, 2, 2, 1]));
    assert_eq!(q_factorial(3), q(&[1, 2, 2, 1]));
}

#[test]
fn determinants() {
    let inv = |k| QFrac::recip_of(q_factorial(k));
    assert_eq!(
        det_qfrac(&[vec![inv(2)]]).unwrap(),
        QFrac::new(QPoly::one(), q(&[1, 1]))
    );
    let m = [vec![inv(2), QFrac::one()], vec![inv(3), QFrac::one()]];
    assert_eq!(det_qfrac(&m).unwrap(), &inv(2) - &inv(3));
}

#[test]
fn permutation_statistics() {
    let p = Permutation::new(vec![3, 2, 1]).unwrap();
    assert_eq!(
        (p.exc(), p.des_set(), p.maj(), p.inv(), p.fix()),
        (1, set(&[1, 2]), 3, 3, 1)
    );
    assert_eq!(p.dex(), set(&[2]));
    let p = Permutation::new(vec![2, 3, 1]).unwrap();
    assert_eq!(
        (p.exc(), p.des_set(), p.maj(), p.inv(), p.fix()),
        (2, set(&[2]), 2, 2, 0)
    );
    assert_eq!(Permutation::new(vec![1, 3, 2]).unwrap().dex(), set(&[1]));
    assert_eq!(Permutation::identity(4).dex(), Subset::empty());
    assert!(Permutation::new(vec![1, 1]).is_err());
}

#[test]
fn decorated_statistics() {
    let t = DecoratedPermutation::theta(5);
    assert_eq!(
        (t.dex(), t.exc(), t.maj(), t.fix2()),
        (Subset::empty(), -1, -1, 5)
    );
    let p = DecoratedPermutation::new(vec![1, 0]).unwrap();
    assert_eq!((p.dex(), p.exc(), p.maj(), p.fix2()), (set(&[1]), 0, 1, 1));
    let p = DecoratedPermutation::new(vec![4, 0, 1, 3]).unwrap();
    assert_eq!(
        (p.dex(), p.exc(), p.maj(), p.fix2()),
        (Subset::empty(), 1, 1, 1)
    );
    // the nonzero letters must be a bijection of their positions
    assert!(DecoratedPermutation::new(vec![2, 0]).is_err());
}

#[test]
fn enumeration() {
    assert_eq!(gen_permutations(0).unwrap().count(), 1);
    let words: Vec<Vec<u8>> = gen_decorated(2)
        .unwrap()
        .map(|p| p.word().to_vec())
        .collect();
    assert_eq!(
        words,
        [vec![0, 0], vec![0, 2], vec![1, 0], vec![1, 2], vec![2, 1]]
    );
    assert!(matches!(
        gen_permutations(40).err(),
        Some(Error::Guard { .. })
    ));
}

#[test]
fn quasisymmetric_products() {
    assert_eq!(f_basis(Subset::empty(), 0).unwrap(), QSymElem::one());
    assert_eq!(
        f(&[], 1).multiply(&f(&[], 1)).unwrap(),
        f(&[], 2) + f(&[1], 2)
    );
    assert_eq!(
        f(&[], 2).multiply(&f(&[], 1)).unwrap(),
        f(&[], 3) + f(&[1], 3) + f(&[2], 3)
    );
    assert_eq!(
        h_of_composition(&[2, 1]).unwrap(),
        f(&[], 3) + f(&[1], 3) + f(&[2], 3)
    );
    assert_eq!(h_of_composition(&[]).unwrap(), QSymElem::one());
    assert_eq!(h_of_composition(&[3]).unwrap(), h_complete(3));
    assert!(f_basis(set(&[3]), 3).is_err());
}

#[test]
fn ribbons_and_symmetry() {
    assert_eq!(ribbon_schur(Subset::empty(), 4).unwrap(), h_complete(4));
    assert_eq!(ribbon_schur(set(&[1]), 2).unwrap(), f(&[1], 2));
    let r = ribbon_schur(set(&[2]), 3).unwrap();
    assert_eq!(r, f(&[1], 3) + f(&[2], 3));
    assert!(r.is_symmetric());
    assert!(h_complete(2).is_symmetric());
    assert!(!f(&[1], 3).is_symmetric());
}

#[test]
fn principal_specialization() {
    assert_eq!(f(&[], 5).ps_normalized(5).unwrap(), LaurentQT::one());
    assert_eq!(f(&[1, 2], 3).ps_normalized(3).unwrap(), lq(&[0, 0, 0, 1]));
    let a3 = q_eulerian(3).unwrap().ps_normalized(3).unwrap();
    assert_eq!(a3.to_string(), "1+(2+q+q^2)t+t^2");
    assert_eq!(a3, eulerian_a_q(3).unwrap());
    assert!((f(&[], 2) + f(&[], 3)).ps_normalized(3).is_err());
}

#[test]
fn eulerian_at_minus_one() {
    assert!(f(&[], 1)
        .scale(&LaurentQT::from_t_dense(&[1, 1]))
        .eval_t(-1)
        .is_zero());
    assert_eq!(
        q_eulerian(3).unwrap().eval_t(-1),
        -(f(&[1], 3) + f(&[2], 3))
    );
}

#[test]
fn refined_binomial_slice() {
    let slice = &qtilde_refined(2).unwrap()[&0];
    assert_eq!(
        slice.map_coeffs(|c| LaurentQT::from_qpoly(c.coeff(1))),
        f(&[], 2)
    );
}

#[test]
fn matroid_validation() {
    assert_eq!(MatroidFlats::uniform(3, 3).unwrap().num_flats(), 8);
    let u23 =
        MatroidFlats::from_json_str(r#"{"ground":3,"flats":[[],[1],[2],[3],[1,2,3]]}"#).unwrap();
    assert_eq!(u23.rank(), 2);
    let err = MatroidFlats::from_json_str(r#"{"ground":3,"flats":[[],[1],[1,2,3]]}"#).unwrap_err();
    assert!(err.to_string().contains("F3"), "{err}");
    let err = MatroidFlats::from_json_str(r#"{"ground":3,"flats":[[],[1],[2],[3]]}"#).unwrap_err();
    assert!(err.to_string().contains("F1"), "{err}");
    assert!(MatroidFlats::uniform(4, 3).is_err());
}

fn degree_counts(m: &MatroidFlats, v: Variant) -> Vec<usize> {
    let mut counts = vec![];
    for x in fy_basis(m, v).unwrap() {
        if counts.len() <= x.degree() {
            counts.resize(x.degree() + 1, 0);
        }
        counts[x.degree()] += 1;
    }
    counts
}

#[test]
fn fy_bases() {
    assert_eq!(
        degree_counts(&MatroidFlats::uniform(3, 3).unwrap(), Variant::Chow),
        [1, 4, 1]
    );
    assert_eq!(
        degree_counts(&MatroidFlats::uniform(2, 3).unwrap(), Variant::Augmented),
        [1, 4, 1]
    );
    assert_eq!(
        degree_counts(&MatroidFlats::uniform(1, 5).unwrap(), Variant::Chow),
        [1]
    );
    assert_eq!(
        hilb(&MatroidFlats::uniform(3, 3).unwrap(), Variant::Chow)
            .unwrap()
            .to_string(),
        "1+4t+t^2"
    );
}

#[test]
fn refined_orbits() {
    assert_eq!(
        grfrob_refined(3, 1, 1, Variant::Chow).unwrap(),
        q_njk(3, 1, 1).unwrap()
    );
    assert_eq!(
        grfrob_refined(4, 0, 4, Variant::Chow).unwrap(),
        h_complete(4)
    );
    assert_eq!(
        grfrob_refined(2, 1, 0, Variant::Augmented).unwrap(),
        f(&[], 2)
    );
}

#[test]
fn rank_selection() {
    let b3 = MatroidFlats::boolean(3).unwrap();
    assert_eq!(
        (
            flag_f(&b3, set(&[1, 2])).unwrap(),
            flag_h(&b3, set(&[1, 2])).unwrap()
        ),
        (6, 1)
    );
    assert_eq!(
        (
            flag_f(&b3, set(&[1])).unwrap(),
            flag_h(&b3, set(&[1])).unwrap()
        ),
        (3, 2)
    );
    assert_eq!(
        (
            flag_f(&b3, Subset::empty()).unwrap(),
            flag_h(&b3, Subset::empty()).unwrap()
        ),
        (1, 1)
    );
    assert_eq!(beta_boolean(set(&[2]), 3).unwrap(), f(&[1], 3) + f(&[2], 3));
    assert_eq!(beta_boolean(set(&[1, 2]), 3).unwrap(), f(&[1, 2], 3));
    assert_eq!(beta_boolean(Subset::empty(), 3).unwrap(), h_complete(3));

    let swap = GroundPerm::parse_cycles("(1 2)", 3).unwrap();
    let rotate = GroundPerm::parse_cycles("(1 2 3)", 3).unwrap();
    assert_eq!(
        fixed_chain_count(&b3, &GroundPerm::identity(3), set(&[1, 2])).unwrap(),
        6
    );
    assert_eq!(fixed_chain_count(&b3, &swap, set(&[2])).unwrap(), 1);
    assert_eq!(fixed_chain_count(&b3, &rotate, set(&[1])).unwrap(), 0);
}

#[test]
fn characters() {
    let u33 = MatroidFlats::uniform(3, 3).unwrap();
    let u23 = MatroidFlats::uniform(2, 3).unwrap();
    let id = GroundPerm::identity(3);
    let swap = GroundPerm::transposition(3, 1, 2);
    assert_eq!(cd_character(&u33, &id, Variant::Chow).unwrap(), -2);
    assert_eq!(cd_character(&u33, &swap, Variant::Chow).unwrap(), 0);
    assert_eq!(cd_character(&u23, &id, Variant::Augmented).unwrap(), -2);

    // (1 4) moves the flat {1} to {4}, which is not in the lattice
    let line = MatroidFlats::from_json_str(
        r#"{"ground":4,"flats":[[],[1],[2],[3],[4],[1,2,3],[1,4],[2,4],[3,4],[1,2,3,4]]}"#,
    )
    .unwrap();
    let bad = GroundPerm::parse_cycles("(1 4)", 4).unwrap();
    let err = cd_character(&line, &bad, Variant::Chow).unwrap_err();
    assert!(err.to_string().contains("not an automorphism"), "{err}");
}

#[test]
fn charney_davis_values() {
    let neg = lq(&[0, -1, -1]);
    assert_eq!(cd_descents(3, 3, Variant::Chow).unwrap(), neg);
    assert_eq!(cd_descents(2, 3, Variant::Augmented).unwrap(), neg);
    assert!(cd_descents(2, 5, Variant::Chow).unwrap().is_zero());
    assert_eq!(cd_secant(3, 3, Variant::Chow).unwrap(), neg);
    assert_eq!(cd_secant(2, 3, Variant::Augmented).unwrap(), neg);
    assert_eq!(cd_secant(1, 4, Variant::Chow).unwrap(), LaurentQT::one());
    assert_eq!(cd_eval(3, 3, Variant::Chow).unwrap(), neg);
    assert_eq!(cd_eval(2, 3, Variant::Augmented).unwrap(), neg);
    assert!(cd_eval(4, 4, Variant::Chow).unwrap().is_zero());
    assert_eq!(cd_single_determinant(3, 3, Variant::Chow).unwrap(), neg);
    assert_eq!(
        cd_determinant(1, 4, Variant::Chow).unwrap(),
        LaurentQT::one()
    );
    assert_eq!(
        cd_determinant(3, 4, Variant::Chow).unwrap(),
        cd_descents(3, 4, Variant::Chow).unwrap()
    );
    assert!(cd_determinant(2, 4, Variant::Chow).is_err());
}

#[test]
fn secant_numbers_small() {
    let (e0, t1) = secant_numbers(0).unwrap();
    assert_eq!((e0, t1), (QPoly::one(), QPoly::one()));
    let (e2, t3) = secant_numbers(1).unwrap();
    // 12 is the only reverse alternating word of length 2
    assert_eq!(e2, QPoly::one());
    assert_eq!(t3, q(&[0, 1, 1]));
}
