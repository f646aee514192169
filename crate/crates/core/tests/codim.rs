use taftlie::codim::{
    check_bound, codimension, enumerate_spanning, evaluate_word, evaluation_rank, is_h_identity,
    HWord, DEFAULT_BUDGET,
};
use taftlie::construct::build_l_gamma;
use taftlie::cyclotomic::{CyclotomicField, Field};
use taftlie::exactla::{unit_vector, Mat};
use taftlie::hmod::{make_dual_idempotent_example, HModuleLie};
use taftlie::hopf::{make_dual_idempotent, make_trivial};
use taftlie::liealg::{make_sl, LieAlgebra};

fn field(m: usize) -> Field {
    CyclotomicField::get(m).unwrap()
}

fn plain_sl2() -> HModuleLie {
    let f = field(2);
    HModuleLie::from_actions(make_sl(2, &f).unwrap(), make_trivial(2).unwrap(), vec![Mat::identity(&f, 3)])
        .unwrap()
}

#[test]
fn enumeration_counts_and_order() {
    let h = make_dual_idempotent(1).unwrap();
    let words = enumerate_spanning(2, &h).unwrap();
    assert_eq!(words.len(), 8);
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(sorted, words);
    assert_eq!(words[0].display(&h), "[x1^e0, x2^e0]");
    assert!(enumerate_spanning(0, &h).is_err());
}

#[test]
fn evaluation_examples() {
    let f = field(2);
    let m = HModuleLie::trivial_taft(make_sl(2, &f).unwrap()).unwrap();
    let unit = m.hopf().taft_index(0, 0).unwrap();
    for a in 0..3 {
        let w = HWord::new(vec![0], vec![unit]).unwrap();
        assert_eq!(evaluate_word(&m, &w, &[a]).unwrap(), unit_vector(&f, 3, a));
    }
    let w = HWord::new(vec![0, 1], vec![unit, unit]).unwrap();
    assert!(evaluate_word(&m, &w, &[0, 0]).unwrap().iter().all(|x| x.is_zero()));
    assert!(evaluate_word(&m, &w, &[0, 9]).is_err());
    assert!(HWord::new(vec![0, 0], vec![0, 0]).is_err());

    let l = build_l_gamma(&make_sl(2, &f).unwrap(), 2, &f.zero()).unwrap();
    let v = l.hopf().taft_index(0, 1).unwrap();
    let cv = l.hopf().taft_index(1, 1).unwrap();
    for a in 0..6 {
        let x = evaluate_word(&l, &HWord::new(vec![0], vec![v]).unwrap(), &[a]).unwrap();
        let y = evaluate_word(&l, &HWord::new(vec![0], vec![cv]).unwrap(), &[a]).unwrap();
        assert_eq!(x, y);
    }
}

#[test]
fn small_codimensions() {
    let f = field(2);
    let ab = HModuleLie::trivial_taft(LieAlgebra::abelian(&f, 1)).unwrap();
    assert_eq!(codimension(&ab, 2, DEFAULT_BUDGET).unwrap(), 0);
    assert_eq!(codimension(&plain_sl2(), 1, DEFAULT_BUDGET).unwrap(), 1);
    assert_eq!(codimension(&plain_sl2(), 2, DEFAULT_BUDGET).unwrap(), 1);
    let l = build_l_gamma(&make_sl(2, &f).unwrap(), 2, &f.zero()).unwrap();
    assert_eq!(codimension(&l, 1, DEFAULT_BUDGET).unwrap(), 3);
}

#[test]
fn rank_does_not_depend_on_word_order() {
    let f = field(2);
    let l = build_l_gamma(&make_sl(2, &f).unwrap(), 2, &f.one()).unwrap();
    for n in 1..=2 {
        let mut words = enumerate_spanning(n, l.hopf()).unwrap();
        let forward = evaluation_rank(&l, n, &words).unwrap();
        words.reverse();
        assert_eq!(evaluation_rank(&l, n, &words).unwrap(), forward);
        assert_eq!(forward, codimension(&l, n, DEFAULT_BUDGET).unwrap());
    }
}

#[test]
fn bound_reports() {
    let f = field(2);
    let l = build_l_gamma(&make_sl(2, &f).unwrap(), 2, &f.zero()).unwrap();
    let (r, rep) = check_bound(&l, 1, DEFAULT_BUDGET).unwrap();
    assert_eq!((r.c_n, r.bound), (3, 36));
    assert!(rep.passed());
    let (r, rep) = check_bound(&l, 2, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.bound, 216);
    assert!(rep.passed());

    let triv = HModuleLie::trivial_taft(make_sl(2, &f).unwrap()).unwrap();
    let (r, rep) = check_bound(&triv, 2, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.bound, 27);
    assert!(rep.passed());
    assert!(r.c_n >= 1);
}

#[test]
fn h_identities() {
    let gl2 = make_dual_idempotent_example().unwrap();
    let q = gl2.field().clone();
    assert!(is_h_identity(&gl2, &[]).unwrap());
    let w00 = HWord::new(vec![0, 1], vec![0, 0]).unwrap();
    assert!(is_h_identity(&gl2, &[(q.one(), w00.clone())]).unwrap());
    let w01 = HWord::new(vec![0, 1], vec![0, 1]).unwrap();
    assert!(!is_h_identity(&gl2, &[(q.one(), w01)]).unwrap());
    let w1 = HWord::new(vec![0], vec![0]).unwrap();
    assert!(is_h_identity(&gl2, &[(q.one(), w00), (q.one(), w1)]).is_err());

    let sl2 = plain_sl2();
    let w = HWord::new(vec![0, 1], vec![0, 0]).unwrap();
    assert!(!is_h_identity(&sl2, &[(sl2.field().one(), w.clone())]).unwrap());
    let h = evaluate_word(&sl2, &w, &[0, 2]).unwrap();
    assert_eq!(h, unit_vector(sl2.field(), 3, 1));
    // antisymmetry: [x1, x2] + [x2, x1] is an identity
    let w_rev = HWord::new(vec![1, 0], vec![0, 0]).unwrap();
    let one = sl2.field().one();
    assert!(is_h_identity(&sl2, &[(one.clone(), w), (one, w_rev)]).unwrap());
}

#[test]
fn codimension_respects_thread_cap() {
    std::env::set_var("TAFTLIE_THREADS", "1");
    let f = field(2);
    let l = build_l_gamma(&make_sl(2, &f).unwrap(), 2, &f.zero()).unwrap();
    let single = codimension(&l, 2, DEFAULT_BUDGET).unwrap();
    std::env::remove_var("TAFTLIE_THREADS");
    assert_eq!(single, codimension(&l, 2, DEFAULT_BUDGET).unwrap());
}
