use proptest::prelude::*;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use taftlie::construct::{build_l_alpha, build_l_gamma};
use taftlie::cyclotomic::{parse_scalar, CycNum, CyclotomicField, Field};
use taftlie::exactla::{kernel, random_vector, rank, Mat, SubspaceBasis};
use taftlie::liealg::make_sl;

fn field(m: usize) -> Field {
    CyclotomicField::get(m).unwrap()
}

fn element(f: &Field, coeffs: &[(i64, i64)]) -> CycNum {
    let mut x = f.zero();
    for (k, (p, q)) in coeffs.iter().enumerate() {
        x = &x + &(&f.from_ratio(*p, *q) * &f.zeta_pow(k as i64));
    }
    x
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..10, 1i64..6), 1..7)
}

fn conductor() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![1usize, 2, 3, 4, 5, 6, 8, 12])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(m in conductor(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = field(m);
        let (a, b, c) = (element(&f, &a), element(&f, &b), element(&f, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn zeta_has_exact_order(m in conductor()) {
        let f = field(m);
        prop_assert!(f.zeta().pow(m as u32).is_one());
        for k in 1..m {
            prop_assert!(!f.zeta().pow(k as u32).is_one());
        }
    }

    #[test]
    fn display_parses_back(m in conductor(), a in coeffs()) {
        let f = field(m);
        let a = element(&f, &a);
        prop_assert_eq!(parse_scalar(&f, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in prop::sample::select(vec![2usize, 3, 4]), rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let f = field(m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = Mat::zeros(&f, rows, cols);
        for i in 0..rows {
            // sparse rows so that rank drops often
            if rng.next_u32() % 3 == 0 {
                continue;
            }
            let v = random_vector(&f, cols, &mut rng);
            for (j, x) in v.into_iter().enumerate() {
                a.set(i, j, x);
            }
        }
        let k = kernel(&a);
        prop_assert_eq!(rank(&a) + k.dim(), cols);
        for v in k.vectors() {
            prop_assert!(a.apply(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn sum_and_intersection_dimensions(n in 1usize..7, k1 in 0usize..5, k2 in 0usize..5, seed in any::<u64>()) {
        let f = field(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shared = random_vector(&f, n, &mut rng);
        let mut gen = |k: usize| {
            let mut vs: Vec<_> = (0..k).map(|_| random_vector(&f, n, &mut rng)).collect();
            vs.push(shared.clone());
            SubspaceBasis::span(&f, n, vs)
        };
        let u = gen(k1);
        let w = gen(k2);
        let s = u.sum(&w);
        let i = u.intersection(&w);
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
        prop_assert!(s.contains_subspace(&u) && s.contains_subspace(&w));
    }

    #[test]
    fn jacobi_on_random_vectors(m in prop::sample::select(vec![2usize, 3]), gamma in coeffs(), seed in any::<u64>()) {
        let f = field(m);
        let g = element(&f, &gamma);
        let lie = build_l_gamma(&make_sl(2, &f).unwrap(), m, &g).unwrap().lie().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = lie.dim();
        let (x, y, z) = (random_vector(&f, n, &mut rng), random_vector(&f, n, &mut rng), random_vector(&f, n, &mut rng));
        let a = lie.bracket(&x, &lie.bracket(&y, &z));
        let b = lie.bracket(&y, &lie.bracket(&z, &x));
        let c = lie.bracket(&z, &lie.bracket(&x, &y));
        for i in 0..n {
            prop_assert!((&(&a[i] + &b[i]) + &c[i]).is_zero());
        }
        let xy = lie.bracket(&x, &y);
        let yx = lie.bracket(&y, &x);
        for i in 0..n {
            prop_assert!((&xy[i] + &yx[i]).is_zero());
        }
    }

    #[test]
    fn c_acts_by_automorphisms(alpha in coeffs(), seed in any::<u64>()) {
        let f = field(3);
        let a = element(&f, &alpha);
        let module = build_l_alpha(&make_sl(2, &f).unwrap(), 3, &a).unwrap();
        let c = module.c_matrix().unwrap();
        let lie = module.lie();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_vector(&f, lie.dim(), &mut rng);
        let y = random_vector(&f, lie.dim(), &mut rng);
        prop_assert_eq!(c.apply(&lie.bracket(&x, &y)), lie.bracket(&c.apply(&x), &c.apply(&y)));
    }
}
