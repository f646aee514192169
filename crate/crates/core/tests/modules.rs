use taftlie::construct::{build_l_alpha, build_l_gamma, build_phi};
use taftlie::cyclotomic::{CyclotomicField, Field};
use taftlie::error::Error;
use taftlie::exactla::{kernel, unit_vector, Mat, SubspaceBasis};
use taftlie::hmod::{make_dual_idempotent_example, HModuleLie, HSimplicity};
use taftlie::liealg::{make_sl, LieAlgebra};
use taftlie::report::Status;

fn field(m: usize) -> Field {
    CyclotomicField::get(m).unwrap()
}

#[test]
fn trivial_action_on_sl2() {
    let f = field(2);
    let m = HModuleLie::trivial_taft(make_sl(2, &f).unwrap()).unwrap();
    assert!(m.v_is_zero());
    let r = m.verify_graded_lemmas().unwrap();
    assert_eq!(r.status_of("skew symmetry of v in brackets"), Some(Status::Pass));
    assert_eq!(r.status_of("v of a homogeneous bracket"), Some(Status::Pass));
    assert_eq!(r.status_of("v L^(k) = L^(k-1)"), Some(Status::NotApplicable));
}

#[test]
fn rejects_identity_as_v() {
    let f = field(2);
    let id = Mat::identity(&f, 3);
    match HModuleLie::new_taft(make_sl(2, &f).unwrap(), id.clone(), id) {
        Err(Error::Verification { check, witness }) => {
            assert_eq!(check, "vc = ζcv");
            assert!(witness.get("identity").is_some());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn rejects_broken_module_law_with_basis_pair() {
    let f = field(2);
    let sl2 = make_sl(2, &f).unwrap();
    // C = diag(1, -1, 1) is not an automorphism of sl_2.
    let mut c = Mat::identity(&f, 3);
    c.set(1, 1, -f.one());
    let err = HModuleLie::new_taft(sl2, c, Mat::zeros(&f, 3, 3)).unwrap_err();
    match err {
        Error::Verification { check, witness } => {
            assert_eq!(check, "module algebra");
            assert!(witness["basis"].is_array());
            assert!(witness["h"].is_string());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn grading_dimensions() {
    let f = field(2);
    let m = build_l_alpha(&make_sl(2, &f).unwrap(), 2, &f.one()).unwrap();
    assert_eq!(m.grading().unwrap().dims(), vec![3, 3]);

    let f = field(3);
    let m = build_l_gamma(&make_sl(2, &f).unwrap(), 3, &f.zero()).unwrap();
    let g = m.grading().unwrap();
    assert_eq!(g.dims(), vec![3, 3, 3]);
    assert_eq!(kernel(m.v_matrix().unwrap()), g.components[0]);
}

#[test]
fn graded_lemmas_pass_on_canonical_algebras() {
    let f = field(2);
    let r = build_l_alpha(&make_sl(2, &f).unwrap(), 2, &f.one())
        .unwrap()
        .verify_graded_lemmas()
        .unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));

    let f = field(3);
    let r = build_l_gamma(&make_sl(2, &f).unwrap(), 3, &f.zero())
        .unwrap()
        .verify_graded_lemmas()
        .unwrap();
    assert_eq!(r.status_of("ker v = L^(0)"), Some(Status::Pass));
    assert!(r.passed(), "{r:?}");
    let seed = r.get("long commutator identity").unwrap().detail.as_ref().unwrap()["seed"].as_u64();
    assert_eq!(seed, Some(taftlie::liealg::DEFAULT_SEED));
}

#[test]
fn invariant_ideals() {
    let f = field(2);
    let m = build_l_alpha(&make_sl(2, &f).unwrap(), 2, &f.one()).unwrap();
    let zero = SubspaceBasis::zero(&f, 6);
    assert!(m.h_invariant_ideal(&zero).unwrap().is_zero());
    for i in 0..6 {
        let seed = SubspaceBasis::span(&f, 6, [unit_vector(&f, 6, i)]);
        assert!(m.h_invariant_ideal(&seed).unwrap().is_full());
    }

    let sl2 = make_sl(2, &f).unwrap();
    let sum = sl2.direct_sum(&sl2).unwrap();
    let triv = HModuleLie::trivial_taft(sum).unwrap();
    let seed = SubspaceBasis::span(&f, 6, [unit_vector(&f, 6, 0)]);
    assert_eq!(triv.h_invariant_ideal(&seed).unwrap().dim(), 3);
    assert!(triv.is_h_simple().is_not_simple());
}

#[test]
fn simplicity_verdicts() {
    let f = field(2);
    let sl2 = make_sl(2, &f).unwrap();
    let m = build_l_alpha(&sl2, 2, &f.one()).unwrap();
    assert_eq!(m.is_h_simple(), HSimplicity::AbsolutelySimple { algebra_dim: 36 });
    assert!(build_l_gamma(&sl2, 2, &f.zero()).unwrap().is_h_simple().is_absolutely_simple());

    let ab = HModuleLie::trivial_taft(LieAlgebra::abelian(&f, 2)).unwrap();
    assert!(ab.is_h_simple().is_not_simple());
}

#[test]
fn simple_certificate_agrees_with_closures() {
    let f = field(3);
    let m = build_l_gamma(&make_sl(2, &f).unwrap(), 3, &f.one()).unwrap();
    assert!(m.is_h_simple().is_absolutely_simple());
    for i in 0..m.dim() {
        let seed = SubspaceBasis::span(&f, m.dim(), [unit_vector(&f, m.dim(), i)]);
        assert!(m.h_invariant_ideal(&seed).unwrap().is_full());
    }
}

#[test]
fn phi_on_l_gamma_and_l_alpha() {
    let f = field(2);
    let sl2 = make_sl(2, &f).unwrap();
    let m = build_l_gamma(&sl2, 2, &f.zero()).unwrap();
    let phi = build_phi(&m).unwrap();
    for i in 3..6 {
        assert!(phi.apply(&unit_vector(&f, 6, i)).iter().all(|x| x.is_zero()));
    }
    let v = m.v_matrix().unwrap();
    for i in 0..3 {
        let e = unit_vector(&f, 6, i);
        assert_eq!(v.apply(&phi.apply(&e)), e);
    }

    let m = build_l_alpha(&sl2, 2, &f.one()).unwrap();
    let phi = build_phi(&m).unwrap();
    // (e, e) ↦ ½(e, -e)
    let mut x = unit_vector(&f, 6, 0);
    x[3] = f.one();
    let mut want = vec![f.zero(); 6];
    want[0] = f.from_ratio(1, 2);
    want[3] = f.from_ratio(-1, 2);
    assert_eq!(phi.apply(&x), want);
}

#[test]
fn json_round_trip() {
    let f = field(3);
    let m = build_l_gamma(&make_sl(2, &f).unwrap(), 3, &f.zeta()).unwrap();
    let back = HModuleLie::from_json(&m.to_json()).unwrap();
    assert_eq!(back, m);

    let d = make_dual_idempotent_example().unwrap();
    let j = d.to_json();
    assert_eq!(j["H"], "custom");
    assert_eq!(HModuleLie::from_json(&j).unwrap(), d);
}

#[test]
fn dual_idempotent_grading_of_gl2() {
    let d = make_dual_idempotent_example().unwrap();
    assert!(d.verify_module_axioms().passed());
    assert!(d.grading().is_err());
}
